//! Independent oracles shared by the integration tests. Nothing here uses the
//! crate's rewriting system or linear algebra.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};
use silt_core::algebra::{build_algebra, AlgebraPresentation, FdAlgebra};
use silt_core::cdv::contraction_preset;
use silt_core::PrimeField;

pub const P: u64 = 32003;

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % P, P - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        exp >>= 1;
    }
    acc
}

fn scalar(q: &num_rational::BigRational) -> u64 {
    let num = q.numer().abs().to_u64().expect("small numerator") % P;
    let den = q.denom().to_u64().expect("small denominator") % P;
    let v = num * inv_mod(den) % P;
    if q.is_negative() {
        (P - v) % P
    } else {
        v
    }
}

/// Rank over GF(P) by plain Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + P - f * y % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn det_mod_p(mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else { return 0 };
        if piv != col {
            m.swap(piv, col);
            det = (P - det) % P;
        }
        det = det * m[col][col] % P;
        let inv = inv_mod(m[col][col]);
        for r in (col + 1)..n {
            let f = m[r][col] * inv % P;
            if f != 0 {
                for c in col..n {
                    m[r][c] = (m[r][c] + P - f * m[col][c] % P) % P;
                }
            }
        }
    }
    det
}

/// Paths as `(start, end, arrows)`.
type RawPath = (usize, usize, Vec<usize>);
type Sparse = BTreeMap<usize, u64>;

fn paths_up_to(pres: &AlgebraPresentation, max_len: usize) -> Vec<RawPath> {
    let q = &pres.quiver;
    let mut all: Vec<RawPath> = (0..q.vertices().len()).map(|v| (v, v, Vec::new())).collect();
    let mut layer = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (s, t, arrows) in &layer {
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == *t {
                    let mut w = arrows.clone();
                    w.push(ai);
                    next.push((*s, a.target, w));
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

fn add_term(v: &mut Sparse, idx: usize, c: u64) {
    let e = v.entry(idx).or_insert(0);
    *e = (*e + c) % P;
    if *e == 0 {
        v.remove(&idx);
    }
}

/// Sparse echelon basis keyed by leading (smallest) index.
#[derive(Default)]
struct SparseEchelon {
    rows: HashMap<usize, Sparse>,
}

impl SparseEchelon {
    fn insert(&mut self, mut v: Sparse) -> Option<Sparse> {
        while let Some((&lead, &c)) = v.iter().next() {
            let Some(row) = self.rows.get(&lead) else {
                let inv = inv_mod(c);
                for x in v.values_mut() {
                    *x = *x * inv % P;
                }
                self.rows.insert(lead, v.clone());
                return Some(v);
            };
            for (&k, &x) in row {
                add_term(&mut v, k, (P - c * x % P) % P);
            }
        }
        None
    }
}

/// `dim kQ/(I + kQ_{>L})`: the ideal is the closure of the relations under
/// left and right multiplication by arrows, with paths longer than `L`
/// dropped. Equals `dim kQ/I` once `L` is at least the Loewy length.
pub fn degreewise_dimension(pres: &AlgebraPresentation, max_len: usize) -> usize {
    let paths = paths_up_to(pres, max_len);
    let index: HashMap<(usize, Vec<usize>), usize> =
        paths.iter().enumerate().map(|(i, p)| ((p.0, p.2.clone()), i)).collect();
    let arrows = pres.quiver.arrows();
    let mut basis = SparseEchelon::default();
    let mut queue: Vec<Sparse> = Vec::new();
    for rel in &pres.relations {
        let mut v = Sparse::new();
        for (c, term) in &rel.terms {
            if term.len() <= max_len {
                let key = (term.start(), term.arrows().to_vec());
                add_term(&mut v, index[&key], scalar(c));
            }
        }
        queue.push(v);
    }
    while let Some(v) = queue.pop() {
        let Some(v) = basis.insert(v) else { continue };
        for (ai, a) in arrows.iter().enumerate() {
            let mut left = Sparse::new();
            let mut right = Sparse::new();
            for (&k, &c) in &v {
                let (s, t, w) = &paths[k];
                if w.len() == max_len {
                    continue;
                }
                if a.target == *s {
                    let mut aw = vec![ai];
                    aw.extend_from_slice(w);
                    add_term(&mut left, index[&(a.source, aw)], c);
                }
                if a.source == *t {
                    let mut wa = w.clone();
                    wa.push(ai);
                    add_term(&mut right, index[&(*s, wa)], c);
                }
            }
            queue.push(left);
            queue.push(right);
        }
    }
    paths.len() - basis.rows.len()
}

pub fn preset_algebra(name: &str) -> Arc<FdAlgebra<PrimeField>> {
    let pres = contraction_preset(name).unwrap();
    Arc::new(build_algebra(&PrimeField::default(), &pres, 64).unwrap())
}
