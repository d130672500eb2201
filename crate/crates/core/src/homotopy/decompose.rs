//! Krull–Schmidt decomposition of minimal complexes and isomorphism testing
//! in the homotopy category.
//!
//! For a minimal complex `X` the map `f ↦ (top f^n)_n` sends `End_K(X)` to a
//! product of scalar matrix algebras; its kernel is contained in the
//! radical, so idempotents can be found on tops and lifted.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{determinant, kernel, mat_mul, minimal_polynomial, rref, trace, Matrix};
use crate::poly;

use super::complex::{same_algebra, ChainMap, ProjComplex};
use super::hom::HomSpace;
use super::minimize::minimize;

const SPLIT_ATTEMPTS: usize = 40;

/// Block-diagonal matrix of the tops of a degree-0 endomorphism.
fn top_matrix<K: Field>(x: &ProjComplex<K>, f: &ChainMap<K>) -> Matrix<K::Elem> {
    let alg = x.algebra();
    let k = alg.field();
    let n = x.total_rank();
    let mut m = Matrix::filled(n, n, k.zero());
    let mut off = 0;
    for (_, comp) in f.components() {
        let t = comp.top(alg);
        for r in 0..t.rows() {
            for c in 0..t.cols() {
                m.set(off + r, off + c, t.get(r, c).clone());
            }
        }
        off += t.rows();
    }
    m
}

/// `End_K(X)` of a minimal complex together with its top representation.
#[derive(Clone, Debug)]
pub struct TopRepresentation<K: Field> {
    pub endomorphisms: HomSpace<K>,
    /// Top matrices of the basis of `endomorphisms`.
    pub tops: Vec<Matrix<K::Elem>>,
    /// Coordinates of a basis of `rad End_K(X)`.
    pub radical: Vec<Vec<K::Elem>>,
}

impl<K: Field> TopRepresentation<K> {
    /// `dim End_K(X) / rad`.
    pub fn semisimple_dim(&self) -> usize {
        self.endomorphisms.dim() - self.radical.len()
    }
}

/// Radical of `End_K(X)` for a minimal complex `X`, as the kernel of
/// `(f, g) ↦ tr(top f · top g)`.
pub fn endomorphism_radical<K: Field>(x: &ProjComplex<K>) -> Result<TopRepresentation<K>> {
    let alg = x.algebra();
    let k = alg.field();
    let p = k.characteristic();
    let size = x.total_rank();
    if p != 0 && p as u128 <= size as u128 {
        return Err(Error::FieldTooSmall { characteristic: p, needed: size });
    }
    let id = ChainMap::identity(x);
    let end = HomSpace::with_preferred(x, x, 0, &[id])?;
    let tops: Vec<_> = end.basis().iter().map(|f| top_matrix(x, f)).collect();
    let d = tops.len();
    let mut gram = Matrix::filled(d, d, k.zero());
    for i in 0..d {
        for j in 0..d {
            gram.set(i, j, trace(k, &mat_mul(k, &tops[i], &tops[j])));
        }
    }
    let radical = kernel(k, &gram);
    Ok(TopRepresentation { endomorphisms: end, tops, radical })
}

/// `p(f)` for a degree-0 endomorphism `f`.
fn eval_poly<K: Field>(x: &ProjComplex<K>, p: &[K::Elem], f: &ChainMap<K>) -> ChainMap<K> {
    let alg = x.algebra();
    let id = ChainMap::identity(x);
    let mut acc = ChainMap::zero(x, x, 0);
    for c in p.iter().rev() {
        acc = acc.compose(alg, f, x, x).add(alg, &id.scale(alg, c));
    }
    acc
}

/// Lifts an endomorphism whose top is idempotent to an idempotent chain map.
fn lift_idempotent<K: Field>(x: &ProjComplex<K>, mut e: ChainMap<K>) -> ChainMap<K> {
    let alg = x.algebra();
    let k = alg.field();
    let (three, two) = (k.from_i64(3), k.from_i64(2));
    loop {
        let e2 = e.compose(alg, &e, x, x);
        if e2 == e {
            return e;
        }
        let e3 = e2.compose(alg, &e, x, x);
        e = e2.scale(alg, &three).sub(alg, &e3.scale(alg, &two));
    }
}

/// Image of an idempotent chain map, as a complex with explicit terms.
fn image<K: Field>(x: &ProjComplex<K>, e: &ChainMap<K>) -> Result<ProjComplex<K>> {
    let alg = x.algebra();
    let k = alg.field();
    let Some((lo, hi)) = x.support() else {
        return Ok(ProjComplex::zero(alg.clone()));
    };
    let mut alphas = Vec::new();
    let mut betas = Vec::new();
    let mut terms = Vec::new();
    for n in lo..=hi {
        let en = e.component(n).expect("endomorphism covers the support");
        let t = en.top(alg);
        let mut tc = t.clone();
        let cols = rref(k, &mut tc);
        let mut tr = t.transpose();
        let rows = rref(k, &mut tr);
        let all_rows: Vec<usize> = (0..en.nrows()).collect();
        let all_cols: Vec<usize> = (0..en.ncols()).collect();
        let alpha = en.select(&all_rows, &cols);
        let m = en.select(&rows, &cols);
        let minv = m.inverse(alg).ok_or_else(|| Error::Internal("idempotent pivot block not invertible".into()))?;
        let beta = minv.compose(alg, &en.select(&rows, &all_cols));
        terms.push(alpha.cols().to_vec());
        alphas.push(alpha);
        betas.push(beta);
    }
    let diffs = (0..(hi - lo) as usize)
        .map(|i| {
            let d = x.diff(lo + i as i64);
            betas[i + 1].compose(alg, &d).compose(alg, &alphas[i])
        })
        .collect();
    Ok(ProjComplex::from_parts(alg.clone(), lo, terms, diffs).trimmed())
}

/// Idempotent with nontrivial top, from a spectral projector of a random
/// endomorphism.
fn split_idempotent<K: Field>(
    x: &ProjComplex<K>,
    rep: &TopRepresentation<K>,
    rng: &mut ChaCha8Rng,
) -> Option<ChainMap<K>> {
    let alg = x.algebra();
    let k = alg.field();
    for _ in 0..SPLIT_ATTEMPTS {
        let coeffs: Vec<K::Elem> = (0..rep.endomorphisms.dim()).map(|_| k.sample(rng)).collect();
        let f = rep.endomorphisms.combine(&coeffs);
        let mut top = Matrix::filled(x.total_rank(), x.total_rank(), k.zero());
        for (c, t) in coeffs.iter().zip(&rep.tops) {
            for r in 0..t.rows() {
                for j in 0..t.cols() {
                    let v = k.add(top.get(r, j), &k.mul(c, t.get(r, j)));
                    top.set(r, j, v);
                }
            }
        }
        let m = minimal_polynomial(k, &top);
        let Some(lambda) = k.find_root(&m) else { continue };
        let linear = vec![k.neg(&lambda), k.one()];
        let mut g = m.clone();
        let mut power = vec![k.one()];
        loop {
            let (q, r) = poly::divrem(k, &g, &linear);
            if poly::degree(k, &r).is_some() {
                break;
            }
            g = q;
            power = poly::mul(k, &power, &linear);
        }
        if poly::degree(k, &g).unwrap_or(0) == 0 {
            continue;
        }
        // s (t-λ)^a + u g = 1; u g is 1 on the λ-part and 0 elsewhere.
        let (_, _, u) = poly::ext_gcd(k, &power, &g);
        let eps = poly::rem(k, &poly::mul(k, &u, &g), &m);
        let e0 = eval_poly(x, &eps, &f);
        return Some(lift_idempotent(x, e0));
    }
    None
}

fn split_rec<K: Field>(x: ProjComplex<K>, rng: &mut ChaCha8Rng, out: &mut Vec<ProjComplex<K>>) -> Result<()> {
    let rep = endomorphism_radical(&x)?;
    if rep.semisimple_dim() <= 1 {
        out.push(x);
        return Ok(());
    }
    let e = split_idempotent(&x, &rep, rng).ok_or(Error::NonSplitSemisimple)?;
    let alg = x.algebra().clone();
    let id = ChainMap::identity(&x);
    let f = id.sub(&alg, &e);
    let a = image(&x, &e)?;
    let b = image(&x, &f)?;
    split_rec(a, rng, out)?;
    split_rec(b, rng, out)
}

/// Indecomposable summands of the minimal model of `x`. Raises
/// `NonSplitSemisimple` if an endomorphism algebra has a simple quotient
/// that is not split over the field.
pub fn decompose<K: Field>(x: &ProjComplex<K>, seed: u64) -> Result<Vec<ProjComplex<K>>> {
    let m = minimize(x);
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split_rec(m, &mut rng, &mut out)?;
    Ok(out)
}

pub fn is_indecomposable<K: Field>(x: &ProjComplex<K>) -> Result<bool> {
    let m = minimize(x);
    if m.is_zero() {
        return Ok(false);
    }
    Ok(endomorphism_radical(&m)?.semisimple_dim() == 1 || decompose(&m, 0)?.len() == 1)
}

/// Isomorphism of two indecomposable minimal complexes: some composite of
/// basis maps `B → A → B` has invertible top.
pub(crate) fn indecomposables_isomorphic<K: Field>(a: &ProjComplex<K>, b: &ProjComplex<K>) -> Result<bool> {
    if a.signature() != b.signature() {
        return Ok(false);
    }
    let alg = a.algebra();
    let k = alg.field();
    let ab = HomSpace::new(a, b, 0)?;
    let ba = HomSpace::new(b, a, 0)?;
    for f in ab.basis() {
        for g in ba.basis() {
            let gf = g.compose(alg, f, a, a);
            if !k.is_zero(&determinant(k, &top_matrix(a, &gf))) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Matches two lists of indecomposables up to isomorphism and order.
pub(crate) fn same_summands<K: Field>(xs: &[ProjComplex<K>], ys: &[ProjComplex<K>]) -> Result<bool> {
    if xs.len() != ys.len() {
        return Ok(false);
    }
    let mut used = vec![false; ys.len()];
    'outer: for x in xs {
        for (j, y) in ys.iter().enumerate() {
            if !used[j] && indecomposables_isomorphic(x, y)? {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Isomorphism in `K^b(proj Λ)`.
pub fn iso_in_homotopy<K: Field>(x: &ProjComplex<K>, y: &ProjComplex<K>) -> Result<bool> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (mx, my) = (minimize(x), minimize(y));
    if mx.signature() != my.signature() {
        return Ok(false);
    }
    same_summands(&decompose(&mx, 0)?, &decompose(&my, 0)?)
}
