//! Reduction to the minimal (radical-differential) model by Gaussian
//! elimination of split summands `P_v --u--> P_v` with `u` a unit.

use crate::field::Field;

use super::complex::{AlgMatrix, ProjComplex};

/// Finds an entry of some `d^n` between equal vertices with invertible
/// idempotent coefficient. Returns `(n, row, col)`.
fn find_unit<K: Field>(x: &ProjComplex<K>) -> Option<(i64, usize, usize)> {
    let alg = x.algebra();
    let k = alg.field();
    let (lo, hi) = x.support()?;
    for n in lo..hi {
        let Some(d) = x.diff_ref(n) else { continue };
        for r in 0..d.nrows() {
            for c in 0..d.ncols() {
                let v = d.rows()[r];
                if v == d.cols()[c] && !k.is_zero(&alg.idempotent_coeff(d.get(r, c), v)) {
                    return Some((n, r, c));
                }
            }
        }
    }
    None
}

/// A homotopy-equivalent complex whose differentials have all entries in
/// the radical, with zero end terms removed.
pub fn minimize<K: Field>(x: &ProjComplex<K>) -> ProjComplex<K> {
    let mut cur = x.trimmed();
    while let Some((n, r, c)) = find_unit(&cur) {
        cur = eliminate(&cur, n, r, c).trimmed();
    }
    cur
}

/// Cancels `X^n ⊇ P_v --δ--> P_v ⊆ X^{n+1}` where `δ = d^n[r][c]` is a unit:
/// the new `d^n` is `α - β δ⁻¹ γ` on the complements, `d^{n-1}` loses row
/// `c` and `d^{n+1}` loses column `r`.
fn eliminate<K: Field>(x: &ProjComplex<K>, n: i64, r: usize, c: usize) -> ProjComplex<K> {
    let alg = x.algebra();
    let d = x.diff(n);
    let v = d.rows()[r];
    let delta_inv = alg.local_inverse(d.get(r, c), v).expect("pivot has invertible idempotent coefficient");
    let keep_rows: Vec<usize> = (0..d.nrows()).filter(|&i| i != r).collect();
    let keep_cols: Vec<usize> = (0..d.ncols()).filter(|&j| j != c).collect();
    let alpha = d.select(&keep_rows, &keep_cols);
    let beta = d.select(&keep_rows, &[c]);
    let gamma = d.select(&[r], &keep_cols);
    let mut dinv = AlgMatrix::zero(alg, &[v], &[v]);
    dinv.set(0, 0, delta_inv);
    let correction = beta.compose(alg, &dinv).compose(alg, &gamma);
    let new_d = alpha.sub(alg, &correction);

    let (lo, hi) = x.support().expect("nonzero complex");
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for m in lo..=hi {
        let t = x.term(m);
        let t: Vec<usize> = if m == n {
            keep_cols.iter().map(|&j| t[j]).collect()
        } else if m == n + 1 {
            keep_rows.iter().map(|&i| t[i]).collect()
        } else {
            t.to_vec()
        };
        terms.push(t);
        if m == hi {
            break;
        }
        let dm = if m == n - 1 {
            let dm = x.diff(m);
            let all: Vec<usize> = (0..dm.ncols()).collect();
            dm.select(&keep_cols, &all)
        } else if m == n {
            new_d.clone()
        } else if m == n + 1 {
            let dm = x.diff(m);
            let all: Vec<usize> = (0..dm.nrows()).collect();
            dm.select(&all, &keep_rows)
        } else {
            x.diff(m)
        };
        diffs.push(dm);
    }
    ProjComplex::from_parts(alg.clone(), lo, terms, diffs)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{build_algebra, parse_presentation, FdAlgebra};
    use crate::field::PrimeField;
    use crate::homotopy::{cone, hom_dimension, ChainMap};

    fn alg() -> Arc<FdAlgebra<PrimeField>> {
        let src = "vertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelation: a*b*a\nrelation: b*a*b\n";
        Arc::new(build_algebra(&PrimeField::default(), &parse_presentation(src).unwrap(), 64).unwrap())
    }

    #[test]
    fn contractible_cone_vanishes() {
        let a = alg();
        let x = ProjComplex::regular(a.clone(), 0);
        let c = cone(&x, &x, &ChainMap::identity(&x)).unwrap();
        assert_eq!(c.total_rank(), 4);
        assert!(minimize(&c).is_zero());
    }

    #[test]
    fn minimize_preserves_homotopy_type() {
        let a = alg();
        let p1 = ProjComplex::stalk(a.clone(), 0, 0).unwrap();
        let x = ProjComplex::regular(a.clone(), 0);
        // P1 ⊕ cone(id_Λ) ≃ P1.
        let c = cone(&x, &x, &ChainMap::identity(&x)).unwrap().direct_sum(&p1);
        let m = minimize(&c);
        assert!(m.is_minimal());
        assert_eq!(m, p1);
        for s in -1..=1 {
            assert_eq!(hom_dimension(&c, &c, s).unwrap(), hom_dimension(&m, &m, s).unwrap());
        }
    }
}
