mod common;

use std::sync::Arc;

use proptest::prelude::*;
use silt_core::algebra::FdAlgebra;
use silt_core::homotopy::{
    cone, decompose, hom_dimension, iso_in_homotopy, minimize, AlgMatrix, ChainMap, ProjComplex,
};
use silt_core::{Field, PrimeField};

use common::preset_algebra;

type Alg = Arc<FdAlgebra<PrimeField>>;

/// Recipe for a random two-term complex: vertices of the two terms and a
/// coefficient stream for the differential.
#[derive(Clone, Debug)]
struct Recipe {
    lo: i64,
    src: Vec<usize>,
    dst: Vec<usize>,
    coeffs: Vec<u64>,
}

fn recipe() -> impl Strategy<Value = Recipe> {
    (
        -2i64..=2,
        prop::collection::vec(0usize..2, 0..=2),
        prop::collection::vec(0usize..2, 0..=2),
        prop::collection::vec(prop_oneof![Just(0u64), Just(1), 0u64..32003], 64),
    )
        .prop_map(|(lo, src, dst, coeffs)| Recipe { lo, src, dst, coeffs })
}

fn build(alg: &Alg, r: &Recipe) -> ProjComplex<PrimeField> {
    let k = alg.field();
    let mut d = AlgMatrix::zero(alg, &r.dst, &r.src);
    let mut stream = r.coeffs.iter().cycle();
    for (row, &w) in r.dst.iter().enumerate() {
        for (col, &u) in r.src.iter().enumerate() {
            let mut e = alg.zero();
            for b in alg.component(w, u) {
                e[b] = k.from_i64(*stream.next().unwrap() as i64);
            }
            d.set(row, col, e);
        }
    }
    ProjComplex::new(alg.clone(), r.lo, vec![r.src.clone(), r.dst.clone()], vec![d]).unwrap()
}

/// Alternating count of each indecomposable projective, an invariant of the
/// homotopy class.
fn euler(x: &ProjComplex<PrimeField>, nv: usize) -> Vec<i64> {
    let mut out = vec![0i64; nv];
    if let Some((lo, hi)) = x.support() {
        for n in lo..=hi {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            for &v in x.term(n) {
                out[v] += sign;
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shift_round_trip(r in recipe(), n in -3i64..=3) {
        let alg = preset_algebra("A_con");
        let x = build(&alg, &r);
        prop_assert_eq!(x.shift(n).shift(-n), x.clone());
        prop_assert!(x.shift(n).d_squared_zero());
    }

    #[test]
    fn hom_shift_adjunction(r in recipe(), t in recipe(), s in -2i64..=2) {
        let alg = preset_algebra("A_con");
        let (x, y) = (build(&alg, &r), build(&alg, &t));
        prop_assert_eq!(hom_dimension(&x, &y, s).unwrap(), hom_dimension(&x, &y.shift(s), 0).unwrap());
    }

    #[test]
    fn minimize_keeps_the_homotopy_class(r in recipe()) {
        let alg = preset_algebra("C_con");
        let x = build(&alg, &r);
        let m = minimize(&x);
        prop_assert!(m.is_minimal());
        prop_assert!(m.total_rank() <= x.total_rank());
        prop_assert_eq!(euler(&m, 2), euler(&x, 2));
        prop_assert!(iso_in_homotopy(&x, &m).unwrap());
        prop_assert_eq!(minimize(&m), m.clone());
    }

    #[test]
    fn cone_of_identity_is_contractible(r in recipe()) {
        let alg = preset_algebra("B_con");
        let x = build(&alg, &r);
        let c = cone(&x, &x, &ChainMap::identity(&x)).unwrap();
        prop_assert!(c.d_squared_zero());
        prop_assert!(minimize(&c).is_zero());
    }

    #[test]
    fn summands_reassemble(r in recipe(), seed in 0u64..1000) {
        let alg = preset_algebra("A_con");
        let x = build(&alg, &r);
        let parts = decompose(&x, seed).unwrap();
        let sum = ProjComplex::direct_sum_all(&alg, &parts);
        prop_assert!(iso_in_homotopy(&sum, &x).unwrap());
        for p in &parts {
            prop_assert!(silt_core::homotopy::is_indecomposable(p).unwrap());
        }
    }
}

#[test]
fn endomorphisms_of_projectives_match_cartan() {
    let alg = preset_algebra("A_con");
    let cartan = alg.cartan();
    for u in 0..2 {
        for w in 0..2 {
            let pu = ProjComplex::stalk(alg.clone(), u, 0).unwrap();
            let pw = ProjComplex::stalk(alg.clone(), w, 0).unwrap();
            let h = hom_dimension(&pu, &pw, 0).unwrap();
            assert_eq!(h, cartan[u][w]);
            assert_eq!(hom_dimension(&pu, &pw, 1).unwrap(), 0);
        }
    }
}

#[test]
fn shifted_regular_has_no_degree_zero_maps() {
    let alg = preset_algebra("A_con");
    let l = ProjComplex::regular(alg.clone(), 0);
    assert_eq!(hom_dimension(&l, &l, 0).unwrap(), 15);
    assert_eq!(hom_dimension(&l, &l.shift(1), 0).unwrap(), 0);
    assert_eq!(hom_dimension(&l, &l.shift(1), -1).unwrap(), 15);
    assert!(!iso_in_homotopy(&l, &l.shift(1)).unwrap());
}

#[test]
fn hom_dimensions_are_symmetric_on_symmetric_algebras() {
    for name in ["A_con", "B_con", "C_con"] {
        let alg = preset_algebra(name);
        let poset = silt_core::silting::two_silt_enumerate(alg, 256, 1, 0).unwrap();
        let pieces: Vec<&ProjComplex<PrimeField>> = poset.objects.iter().flat_map(|t| t.summands.iter()).collect();
        for x in &pieces {
            for y in &pieces {
                for s in -1..=1 {
                    assert_eq!(hom_dimension(x, y, s).unwrap(), hom_dimension(y, x, -s).unwrap(), "{name}, shift {s}");
                }
            }
        }
    }
}
