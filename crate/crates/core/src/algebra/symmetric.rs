//! Deciding whether an algebra carries a nondegenerate symmetric
//! associative form `(a, b) ↦ λ(ab)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::linalg::{determinant, kernel, Matrix};

use super::fd::{Elem, FdAlgebra};

const DETERMINISTIC_TRIALS: u64 = 8;
const RANDOM_TRIALS: usize = 16;
const EXHAUSTIVE_MAX_PARAMS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricVerdict<E> {
    pub symmetric: bool,
    /// A functional `λ` (values on the basis) with `λ(ab) = λ(ba)` and a
    /// nondegenerate form, when one was found.
    pub witness: Option<Vec<E>>,
    /// `false` only for a negative answer reached by random sampling rather
    /// than by exhaustive evaluation.
    pub certified: bool,
}

/// Gram matrix `G_ij = λ(b_i b_j)`.
pub fn gram_matrix<K: Field>(alg: &FdAlgebra<K>, lambda: &[K::Elem]) -> Matrix<K::Elem> {
    let k = alg.field();
    let n = alg.dim();
    let mut g = Matrix::filled(n, n, k.zero());
    for i in 0..n {
        for j in 0..n {
            let v = alg.basis_product(i, j).iter().fold(k.zero(), |acc, (t, c)| k.add(&acc, &k.mul(c, &lambda[*t])));
            g.set(i, j, v);
        }
    }
    g
}

/// Basis of functionals vanishing on all commutators `b_i b_j - b_j b_i`.
pub fn trace_functionals<K: Field>(alg: &FdAlgebra<K>) -> Vec<Elem<K>> {
    let k = alg.field();
    let n = alg.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = alg.zero();
            for (t, c) in alg.basis_product(i, j) {
                v[*t] = k.add(&v[*t], c);
            }
            for (t, c) in alg.basis_product(j, i) {
                v[*t] = k.sub(&v[*t], c);
            }
            if !alg.is_zero(&v) {
                rows.push(v);
            }
        }
    }
    if rows.is_empty() {
        return (0..n).map(|b| alg.basis_elem(b)).collect();
    }
    kernel(k, &Matrix::from_rows(n, rows))
}

/// Verifies a witness: symmetric on all basis pairs and nondegenerate.
pub fn is_symmetric_witness<K: Field>(alg: &FdAlgebra<K>, lambda: &[K::Elem]) -> bool {
    let k = alg.field();
    let g = gram_matrix(alg, lambda);
    let n = alg.dim();
    let symmetric = (0..n).all(|i| (0..n).all(|j| g.get(i, j) == g.get(j, i)));
    symmetric && !k.is_zero(&determinant(k, &g))
}

pub fn is_symmetric<K: Field>(alg: &FdAlgebra<K>) -> SymmetricVerdict<K::Elem> {
    is_symmetric_seeded(alg, 0)
}

/// As [`is_symmetric`], drawing the random trials from `seed`.
pub fn is_symmetric_seeded<K: Field>(alg: &FdAlgebra<K>, seed: u64) -> SymmetricVerdict<K::Elem> {
    let k = alg.field();
    let sols = trace_functionals(alg);
    let s = sols.len();
    let combine = |coeffs: &[K::Elem]| -> Elem<K> {
        let mut v = alg.zero();
        for (c, sol) in coeffs.iter().zip(&sols) {
            v = alg.add(&v, &alg.scale(c, sol));
        }
        v
    };
    let accept = |lambda: Elem<K>| -> Option<SymmetricVerdict<K::Elem>> {
        let g = gram_matrix(alg, &lambda);
        (!k.is_zero(&determinant(k, &g))).then(|| SymmetricVerdict {
            symmetric: true,
            witness: Some(lambda),
            certified: true,
        })
    };
    if s == 0 {
        return SymmetricVerdict { symmetric: false, witness: None, certified: true };
    }
    for sol in &sols {
        if let Some(v) = accept(sol.clone()) {
            return v;
        }
    }
    for t in 0..DETERMINISTIC_TRIALS {
        let coeffs: Vec<K::Elem> = (0..s as u64).map(|j| k.nth(1 + t + j * (t + 2))).collect();
        if let Some(v) = accept(combine(&coeffs)) {
            return v;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<K::Elem> = (0..s).map(|_| k.sample(&mut rng)).collect();
        if let Some(v) = accept(combine(&coeffs)) {
            return v;
        }
    }
    if s <= EXHAUSTIVE_MAX_PARAMS {
        // det G(Σ c_j λ_j) has degree ≤ dim in each c_j, so vanishing on a
        // grid with dim + 1 values per coordinate forces it to vanish.
        let side = alg.dim() as u64 + 1;
        let field_large = k.characteristic() == 0 || k.characteristic() >= side;
        let mut idx = vec![0u64; s];
        loop {
            let coeffs: Vec<K::Elem> = idx.iter().map(|&i| k.nth(i)).collect();
            if let Some(v) = accept(combine(&coeffs)) {
                return v;
            }
            let mut pos = 0;
            while pos < s {
                idx[pos] += 1;
                if idx[pos] < side {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == s {
                break;
            }
        }
        return SymmetricVerdict { symmetric: false, witness: None, certified: field_large };
    }
    SymmetricVerdict { symmetric: false, witness: None, certified: false }
}
