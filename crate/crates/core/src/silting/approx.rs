//! Minimal `add(P/P_i)`-approximations of a summand, mutation, and the
//! endomorphism algebra of a silting object.

use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::Direction;
use crate::homotopy::{
    cocone, cone, decompose, endomorphism_radical, minimize, AlgMatrix, ChainMap, HomSpace, ProjComplex,
};
use crate::linalg::Echelon;

use super::object::SiltingObject;

/// An approximation `P_i → E` (left) or `E → P_i` (right) with
/// `E = ⊕_j P_j^{m_j}`, `j ≠ i`.
#[derive(Clone, Debug)]
pub struct Approximation<K: Field> {
    pub map: ChainMap<K>,
    pub other: ProjComplex<K>,
    /// `m_j` for each summand (0 at `i`).
    pub multiplicities: Vec<usize>,
}

/// Hom spaces between all ordered pairs of summands, plus radical maps.
struct HomTable<K: Field> {
    spaces: Vec<Vec<HomSpace<K>>>,
    /// `rad(T_a, T_b)`: all maps for `a ≠ b`, `rad End` on the diagonal.
    radical: Vec<Vec<Vec<ChainMap<K>>>>,
}

impl<K: Field> HomTable<K> {
    fn new(p: &SiltingObject<K>) -> Result<Self> {
        let n = p.len();
        let mut spaces = Vec::with_capacity(n);
        let mut radical = Vec::with_capacity(n);
        for a in 0..n {
            let mut row = Vec::with_capacity(n);
            let mut rad_row = Vec::with_capacity(n);
            for b in 0..n {
                let (ta, tb) = (&p.summands[a], &p.summands[b]);
                if a == b {
                    let rep = endomorphism_radical(ta)?;
                    let rad = rep.radical.iter().map(|c| rep.endomorphisms.combine(c)).collect();
                    row.push(rep.endomorphisms);
                    rad_row.push(rad);
                } else {
                    let h = HomSpace::new(ta, tb, 0)?;
                    rad_row.push(h.basis().to_vec());
                    row.push(h);
                }
            }
            spaces.push(row);
            radical.push(rad_row);
        }
        Ok(HomTable { spaces, radical })
    }
}

/// Basis elements of `space` not in the span of `sub`, in basis order.
fn complement<K: Field>(space: &HomSpace<K>, sub: &[ChainMap<K>]) -> Result<Vec<ChainMap<K>>> {
    let k = space.source().algebra().field().clone();
    let mut e = Echelon::new(k, space.dim());
    for f in sub {
        let c = space.express(f).ok_or_else(|| Error::Internal("composite is not a cycle".into()))?;
        e.insert(c);
    }
    let mut out = Vec::new();
    for (idx, f) in space.basis().iter().enumerate() {
        let mut unit = vec![space.source().algebra().field().zero(); space.dim()];
        unit[idx] = space.source().algebra().field().one();
        if e.insert(unit) {
            out.push(f.clone());
        }
    }
    Ok(out)
}

fn check_index<K: Field>(p: &SiltingObject<K>, i: usize) -> Result<usize> {
    if i == 0 || i > p.len() {
        return Err(Error::IndexOutOfRange { index: i, max: p.len() });
    }
    Ok(i - 1)
}

fn left_from_table<K: Field>(p: &SiltingObject<K>, t: &HomTable<K>, i: usize) -> Result<Approximation<K>> {
    let alg = p.algebra().clone();
    let n = p.len();
    let ti = &p.summands[i];
    let mut chosen: Vec<(usize, ChainMap<K>)> = Vec::new();
    let mut multiplicities = vec![0; n];
    for j in (0..n).filter(|&j| j != i) {
        let tj = &p.summands[j];
        let mut sub = Vec::new();
        for kk in (0..n).filter(|&kk| kk != i) {
            for f in t.spaces[i][kk].basis() {
                for g in &t.radical[kk][j] {
                    sub.push(g.compose(&alg, f, ti, tj));
                }
            }
        }
        let top = complement(&t.spaces[i][j], &sub)?;
        multiplicities[j] = top.len();
        chosen.extend(top.into_iter().map(|f| (j, f)));
    }
    let parts: Vec<ProjComplex<K>> = chosen.iter().map(|(j, _)| p.summands[*j].clone()).collect();
    let other = ProjComplex::direct_sum_all(&alg, &parts);
    let comps = (0..ti.len())
        .map(|kk| {
            let deg = ti.lo() + kk as i64;
            let blocks: Vec<AlgMatrix<K>> = chosen
                .iter()
                .map(|(j, f)| {
                    f.component(deg)
                        .cloned()
                        .unwrap_or_else(|| AlgMatrix::zero(&alg, p.summands[*j].term(deg), ti.term(deg)))
                })
                .collect();
            AlgMatrix::vstack(&alg, &blocks, ti.term(deg))
        })
        .collect();
    let map = ChainMap::from_components(0, ti.lo(), comps);
    Ok(Approximation { map, other, multiplicities })
}

fn right_from_table<K: Field>(p: &SiltingObject<K>, t: &HomTable<K>, i: usize) -> Result<Approximation<K>> {
    let alg = p.algebra().clone();
    let n = p.len();
    let ti = &p.summands[i];
    let mut chosen: Vec<(usize, ChainMap<K>)> = Vec::new();
    let mut multiplicities = vec![0; n];
    for j in (0..n).filter(|&j| j != i) {
        let tj = &p.summands[j];
        let mut sub = Vec::new();
        for kk in (0..n).filter(|&kk| kk != i) {
            for h in &t.radical[j][kk] {
                for f in t.spaces[kk][i].basis() {
                    sub.push(f.compose(&alg, h, tj, ti));
                }
            }
        }
        let top = complement(&t.spaces[j][i], &sub)?;
        multiplicities[j] = top.len();
        chosen.extend(top.into_iter().map(|f| (j, f)));
    }
    let parts: Vec<ProjComplex<K>> = chosen.iter().map(|(j, _)| p.summands[*j].clone()).collect();
    let other = ProjComplex::direct_sum_all(&alg, &parts);
    let comps = (0..other.len())
        .map(|kk| {
            let deg = other.lo() + kk as i64;
            let blocks: Vec<AlgMatrix<K>> = chosen
                .iter()
                .map(|(j, f)| {
                    f.component(deg)
                        .cloned()
                        .unwrap_or_else(|| AlgMatrix::zero(&alg, ti.term(deg), p.summands[*j].term(deg)))
                })
                .collect();
            AlgMatrix::hstack(&alg, &blocks, ti.term(deg))
        })
        .collect();
    let map = ChainMap::from_components(0, other.lo(), comps);
    Ok(Approximation { map, other, multiplicities })
}

/// Minimal left `add(P/P_i)`-approximation `P_i → E` (1-based `i`): a basis
/// of `Hom(P_i, P/P_i)` modulo maps factoring through radical maps.
pub fn minimal_left_approx<K: Field>(p: &SiltingObject<K>, i: usize) -> Result<Approximation<K>> {
    let i = check_index(p, i)?;
    left_from_table(p, &HomTable::new(p)?, i)
}

/// Minimal right `add(P/P_i)`-approximation `E → P_i` (1-based `i`).
pub fn minimal_right_approx<K: Field>(p: &SiltingObject<K>, i: usize) -> Result<Approximation<K>> {
    let i = check_index(p, i)?;
    right_from_table(p, &HomTable::new(p)?, i)
}

/// `μ_i^±(P)`: replaces `P_i` by the minimized cone of the left
/// approximation (left) or the cocone of the right approximation (right).
pub fn mutate<K: Field>(p: &SiltingObject<K>, i: usize, dir: Direction) -> Result<SiltingObject<K>> {
    mutate_seeded(p, i, dir, 0)
}

/// As [`mutate`], seeding the idempotent search that checks `Q_i` is
/// indecomposable.
pub fn mutate_seeded<K: Field>(p: &SiltingObject<K>, i: usize, dir: Direction, seed: u64) -> Result<SiltingObject<K>> {
    let idx = check_index(p, i)?;
    let table = HomTable::new(p)?;
    let ti = &p.summands[idx];
    let q = match dir {
        Direction::Left => {
            let a = left_from_table(p, &table, idx)?;
            minimize(&cone(ti, &a.other, &a.map)?)
        }
        Direction::Right => {
            let a = right_from_table(p, &table, idx)?;
            minimize(&cocone(&a.other, ti, &a.map)?)
        }
    };
    let parts = decompose(&q, seed)?;
    if parts.len() != 1 {
        return Err(Error::Internal(format!("mutated summand splits into {} pieces", parts.len())));
    }
    let mut summands = p.summands.clone();
    summands[idx] = q;
    Ok(SiltingObject::from_summands(summands, p.provenance.then(i, dir), p.certified_silting))
}

/// A Hom space, the chosen basis maps, and coordinates of those maps.
type LocalBasis<K> = (HomSpace<K>, Vec<ChainMap<K>>, Echelon<K>);

/// `End_K(P)` as a basic algebra on the summands. A map `T_a → T_b` is a
/// basis element with ends `(b, a)`, so the product is composition.
pub fn end_algebra<K: Field>(p: &SiltingObject<K>) -> Result<FdAlgebra<K>> {
    let alg = p.algebra().clone();
    let k = alg.field().clone();
    let n = p.len();
    // Local bases: identity and radical on the diagonal, Hom basis elsewhere.
    let mut local: Vec<Vec<LocalBasis<K>>> = Vec::with_capacity(n);
    for a in 0..n {
        let mut row = Vec::with_capacity(n);
        for b in 0..n {
            let (ta, tb) = (&p.summands[a], &p.summands[b]);
            let (space, maps) = if a == b {
                let rep = endomorphism_radical(ta)?;
                let maps: Vec<ChainMap<K>> = if rep.semisimple_dim() == 1 {
                    std::iter::once(ChainMap::identity(ta))
                        .chain(rep.radical.iter().map(|c| rep.endomorphisms.combine(c)))
                        .collect()
                } else {
                    rep.endomorphisms.basis().to_vec()
                };
                (rep.endomorphisms, maps)
            } else {
                let h = HomSpace::new(ta, tb, 0)?;
                let maps = h.basis().to_vec();
                (h, maps)
            };
            let mut e = Echelon::with_coordinates(k.clone(), space.dim(), maps.len());
            for (l, f) in maps.iter().enumerate() {
                let mut unit = vec![k.zero(); maps.len()];
                unit[l] = k.one();
                let c = space.express(f).ok_or_else(|| Error::Internal("basis map is not a cycle".into()))?;
                e.insert_with(c, unit);
            }
            row.push((space, maps, e));
        }
        local.push(row);
    }
    let mut offset = vec![vec![0usize; n]; n];
    let mut labels = Vec::new();
    let mut ends = Vec::new();
    let mut idempotents = vec![0; n];
    for a in 0..n {
        for b in 0..n {
            offset[a][b] = labels.len();
            for l in 0..local[a][b].1.len() {
                if a == b && l == 0 {
                    idempotents[a] = labels.len();
                    labels.push(format!("e{}", a + 1));
                } else {
                    labels.push(format!("f{}_{}_{}", a + 1, b + 1, l));
                }
                ends.push((b, a));
            }
        }
    }
    let dim = labels.len();
    let mut owner = Vec::with_capacity(dim);
    for a in 0..n {
        for b in 0..n {
            for l in 0..local[a][b].1.len() {
                owner.push((a, b, l));
            }
        }
    }
    let mut table = vec![Vec::new(); dim * dim];
    for x in 0..dim {
        let (a, b, lx) = owner[x];
        for y in 0..dim {
            let (c, d, ly) = owner[y];
            // x: T_a → T_b, y: T_c → T_d; x·y = x∘y needs d = a.
            if d != a {
                continue;
            }
            let fx = &local[a][b].1[lx];
            let fy = &local[c][d].1[ly];
            let prod = fx.compose(&alg, fy, &p.summands[c], &p.summands[b]);
            let (space, _, e) = &local[c][b];
            let hc = space.express(&prod).ok_or_else(|| Error::Internal("composite is not a cycle".into()))?;
            let coords = e.express(&hc).ok_or_else(|| Error::Internal("composite outside the Hom space".into()))?;
            table[x * dim + y] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !k.is_zero(v))
                .map(|(l, v)| (offset[c][b] + l, v))
                .collect();
        }
    }
    let names = (1..=n).map(|v| v.to_string()).collect();
    FdAlgebra::from_structure(k, names, labels, ends, idempotents, table)
}
