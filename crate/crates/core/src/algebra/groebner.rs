//! Noncommutative rewriting on paths: completion of a relation set to a
//! Gröbner basis of the two-sided ideal, reduction to normal form and
//! enumeration of normal words.
//!
//! Paths are ordered by length, then lexicographically by arrow index
//! (see [`Path`]'s `Ord`). That order is compatible with concatenation, so
//! rewriting the leading word of a rule strictly decreases every term.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;

use super::presentation::{AlgebraPresentation, Path, Quiver};

/// Linear combination of paths, keyed by path so the leading term is last.
pub type PathPoly<E> = BTreeMap<Path, E>;

#[derive(Clone, Debug)]
struct Rule<E> {
    lead: Path,
    /// `lead = -(sum of tail)` in the quotient; stored as the tail of a monic
    /// polynomial `lead + tail`.
    tail: Vec<(Path, E)>,
}

#[derive(Clone, Debug)]
pub struct RewritingSystem<K: Field> {
    field: K,
    quiver: Quiver,
    rules: Vec<Rule<K::Elem>>,
}

fn add_term<K: Field>(k: &K, f: &mut PathPoly<K::Elem>, p: Path, c: K::Elem) {
    if k.is_zero(&c) {
        return;
    }
    match f.get_mut(&p) {
        Some(v) => {
            *v = k.add(v, &c);
            if k.is_zero(v) {
                f.remove(&p);
            }
        }
        None => {
            f.insert(p, c);
        }
    }
}

/// First occurrence of `needle` inside `hay` as a contiguous arrow window.
fn find_subword(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| hay[i..i + needle.len()] == *needle)
}

impl<K: Field> RewritingSystem<K> {
    /// Converts the relations into `field` and completes them.
    ///
    /// `cap` bounds the length of leading words; exceeding it is reported as
    /// [`Error::InfiniteDimensional`].
    pub fn complete(field: &K, pres: &AlgebraPresentation, cap: usize) -> Result<Self> {
        let k = field.clone();
        let mut pending: Vec<PathPoly<K::Elem>> = Vec::new();
        for r in &pres.relations {
            let mut f = PathPoly::new();
            for (c, p) in &r.terms {
                add_term(&k, &mut f, p.clone(), k.from_rational(c)?);
            }
            pending.push(f);
        }
        let mut sys = RewritingSystem { field: k, quiver: pres.quiver.clone(), rules: Vec::new() };
        while !pending.is_empty() {
            // Smallest leading word first keeps intermediate rules short.
            let idx = (0..pending.len())
                .min_by(|&a, &b| pending[a].keys().next_back().cmp(&pending[b].keys().next_back()))
                .unwrap();
            let f = pending.swap_remove(idx);
            let r = sys.reduce(f);
            let Some((lead, lc)) = r.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) else {
                continue;
            };
            if lead.is_trivial() {
                return Err(Error::InconsistentRelations);
            }
            if lead.len() > cap {
                return Err(Error::InfiniteDimensional { cap });
            }
            let inv = sys.field.inv(&lc).unwrap();
            let tail: Vec<(Path, K::Elem)> =
                r.iter().filter(|(p, _)| **p != lead).map(|(p, c)| (p.clone(), sys.field.mul(c, &inv))).collect();
            let rule = Rule { lead, tail };

            // Rules whose leading word contains the new one are re-queued.
            let mut keep = Vec::with_capacity(sys.rules.len());
            for old in std::mem::take(&mut sys.rules) {
                if find_subword(old.lead.arrows(), rule.lead.arrows()).is_some() {
                    pending.push(sys.rule_poly(&old));
                } else {
                    keep.push(old);
                }
            }
            sys.rules = keep;

            for old in &sys.rules {
                pending.extend(sys.overlaps(&rule, old));
                pending.extend(sys.overlaps(old, &rule));
            }
            pending.extend(sys.overlaps(&rule, &rule));
            sys.rules.push(rule);
        }
        sys.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        // Final inter-reduction of tails.
        let rules = std::mem::take(&mut sys.rules);
        let mut out = Vec::with_capacity(rules.len());
        for rule in &rules {
            sys.rules = rules.clone();
            let mut tail = PathPoly::new();
            for (p, c) in &rule.tail {
                add_term(&sys.field, &mut tail, p.clone(), c.clone());
            }
            let tail = sys.reduce(tail);
            out.push(Rule { lead: rule.lead.clone(), tail: tail.into_iter().collect() });
        }
        sys.rules = out;
        Ok(sys)
    }

    fn rule_poly(&self, r: &Rule<K::Elem>) -> PathPoly<K::Elem> {
        let mut f = PathPoly::new();
        f.insert(r.lead.clone(), self.field.one());
        for (p, c) in &r.tail {
            add_term(&self.field, &mut f, p.clone(), c.clone());
        }
        f
    }

    /// `u * poly(rule) * v`.
    fn sandwich(&self, u: &Path, r: &Rule<K::Elem>, v: &Path, scale: &K::Elem) -> Vec<(Path, K::Elem)> {
        let k = &self.field;
        let mut out = Vec::with_capacity(r.tail.len() + 1);
        let lead = u.concat(&r.lead).and_then(|x| x.concat(v)).expect("composable sandwich");
        out.push((lead, scale.clone()));
        for (p, c) in &r.tail {
            let q = u.concat(p).and_then(|x| x.concat(v)).expect("parallel rule terms");
            out.push((q, k.mul(scale, c)));
        }
        out
    }

    /// S-polynomials for suffixes of `a.lead` overlapping prefixes of `b.lead`.
    fn overlaps(&self, a: &Rule<K::Elem>, b: &Rule<K::Elem>) -> Vec<PathPoly<K::Elem>> {
        let k = &self.field;
        let (wa, wb) = (a.lead.arrows(), b.lead.arrows());
        let mut out = Vec::new();
        for o in 1..wa.len().min(wb.len()) {
            if wa[wa.len() - o..] != wb[..o] {
                continue;
            }
            // a.lead * right == left * b.lead
            let (_, right) = b.lead.split_around(0, o, &self.quiver);
            let (left, _) = a.lead.split_around(wa.len() - o, wa.len(), &self.quiver);
            let mut f = PathPoly::new();
            let one = k.one();
            for (p, c) in self.sandwich(&Path::trivial(a.lead.start()), a, &right, &one) {
                add_term(k, &mut f, p, c);
            }
            for (p, c) in self.sandwich(&left, b, &Path::trivial(b.lead.end()), &k.neg(&one)) {
                add_term(k, &mut f, p, c);
            }
            out.push(f);
        }
        out
    }

    fn find_rule(&self, p: &Path) -> Option<(usize, usize)> {
        self.rules.iter().enumerate().find_map(|(i, r)| find_subword(p.arrows(), r.lead.arrows()).map(|pos| (i, pos)))
    }

    /// Full reduction to normal form.
    pub fn reduce(&self, mut f: PathPoly<K::Elem>) -> PathPoly<K::Elem> {
        let k = &self.field;
        let mut done = PathPoly::new();
        while let Some((t, c)) = f.pop_last() {
            match self.find_rule(&t) {
                None => {
                    done.insert(t, c);
                }
                Some((ri, pos)) => {
                    let rule = &self.rules[ri];
                    let (u, v) = t.split_around(pos, pos + rule.lead.len(), &self.quiver);
                    let neg = k.neg(&c);
                    for (p, x) in self.sandwich(&u, rule, &v, &neg).into_iter().skip(1) {
                        add_term(k, &mut f, p, x);
                    }
                }
            }
        }
        done
    }

    pub fn reduce_path(&self, p: &Path) -> PathPoly<K::Elem> {
        let mut f = PathPoly::new();
        f.insert(p.clone(), self.field.one());
        self.reduce(f)
    }

    pub fn is_normal(&self, p: &Path) -> bool {
        self.find_rule(p).is_none()
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Path> {
        self.rules.iter().map(|r| &r.lead)
    }

    /// All normal words, sorted by the path order.
    pub fn normal_words(&self, cap: usize) -> Result<Vec<Path>> {
        let nv = self.quiver.vertices().len();
        let mut layer: Vec<Path> = (0..nv).map(Path::trivial).collect();
        let mut all = layer.clone();
        let mut len = 0;
        while !layer.is_empty() {
            len += 1;
            let mut next = Vec::new();
            for w in &layer {
                for (ai, a) in self.quiver.arrows().iter().enumerate() {
                    if a.source != w.end() {
                        continue;
                    }
                    let mut arrows = w.arrows().to_vec();
                    arrows.push(ai);
                    let cand = Path::from_arrows(&self.quiver, arrows)?;
                    // The prefix is normal, so only suffixes can match a rule.
                    let ends_with_lead = self.rules.iter().any(|r| cand.arrows().ends_with(r.lead.arrows()));
                    if !ends_with_lead {
                        next.push(cand);
                    }
                }
            }
            if !next.is_empty() && len > cap {
                return Err(Error::InfiniteDimensional { cap });
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort();
        Ok(all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::parse_presentation;
    use crate::field::PrimeField;

    fn system(src: &str) -> Result<RewritingSystem<PrimeField>> {
        let pres = parse_presentation(src).unwrap();
        RewritingSystem::complete(&PrimeField::default(), &pres, 64)
    }

    #[test]
    fn dual_numbers() {
        let s = system("vertices: 1\narrows: x: 1 -> 1\nrelation: x*x\n").unwrap();
        assert_eq!(s.normal_words(64).unwrap().len(), 2);
    }

    #[test]
    fn overlap_generates_new_rule() {
        // x^2 = y, so x^3 = xy = yx; with xy = 0 we get y^2 = x^4 = 0.
        let s = system("vertices: 1\narrows: x: 1 -> 1, y: 1 -> 1\nrelation: x*x - y\nrelation: x*y\n").unwrap();
        let words = s.normal_words(64).unwrap();
        // Normal words: e, x, y (x^2 rewrites to y, yx = x^3 = xy = 0).
        assert_eq!(words.len(), 3);
    }

    #[test]
    fn loop_without_relation_is_infinite() {
        let s = system("vertices: 1\narrows: x: 1 -> 1\n").unwrap();
        assert!(matches!(s.normal_words(10), Err(Error::InfiniteDimensional { cap: 10 })));
    }

    #[test]
    fn unit_in_ideal_is_inconsistent() {
        let r = system("vertices: 1\narrows: x: 1 -> 1\nrelation: e_1 - x\nrelation: x*x\n");
        assert!(matches!(r, Err(Error::InconsistentRelations)));
    }
}
