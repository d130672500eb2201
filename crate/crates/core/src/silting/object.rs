//! Basic silting objects with an ordered decomposition, and the Hom-vanishing
//! predicates that define them.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::MutationWord;
use crate::homotopy::{decompose, hom_dimension, minimize, ProjComplex};

/// `P = P_1 ⊕ … ⊕ P_n` with a fixed order of indecomposable summands.
#[derive(Clone, Debug)]
pub struct SiltingObject<K: Field> {
    pub complex: ProjComplex<K>,
    pub summands: Vec<ProjComplex<K>>,
    pub provenance: MutationWord,
    pub certified_silting: bool,
}

impl<K: Field> SiltingObject<K> {
    /// The stalk complex `Λ = P_1 ⊕ … ⊕ P_n` in degree 0, summands in vertex
    /// order.
    pub fn regular(alg: Arc<FdAlgebra<K>>) -> Self {
        let summands: Vec<_> =
            (0..alg.num_vertices()).map(|v| ProjComplex::stalk(alg.clone(), v, 0).expect("vertex in range")).collect();
        SiltingObject {
            complex: ProjComplex::regular(alg, 0),
            summands,
            provenance: MutationWord::empty(),
            certified_silting: true,
        }
    }

    /// Wraps an externally supplied complex. It is certified only when it is
    /// two-term presilting with as many summands as vertices.
    pub fn from_complex(x: &ProjComplex<K>, seed: u64) -> Result<Self> {
        let complex = minimize(x);
        let summands = decompose(&complex, seed)?;
        let n = complex.algebra().num_vertices();
        let certified_silting = complex.is_two_term() && summands.len() == n && is_presilting(&complex)?;
        Ok(SiltingObject { complex, summands, provenance: MutationWord::empty(), certified_silting })
    }

    pub(crate) fn from_summands(summands: Vec<ProjComplex<K>>, provenance: MutationWord, certified: bool) -> Self {
        let alg = summands[0].algebra().clone();
        let complex = ProjComplex::direct_sum_all(&alg, &summands);
        SiltingObject { complex, summands, provenance, certified_silting: certified }
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra<K>> {
        self.complex.algebra()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `P[n]`, keeping the summand order.
    pub fn shift(&self, n: i64) -> Self {
        SiltingObject {
            complex: self.complex.shift(n),
            summands: self.summands.iter().map(|s| s.shift(n)).collect(),
            provenance: self.provenance.clone(),
            certified_silting: self.certified_silting,
        }
    }

    pub fn is_two_term(&self) -> bool {
        self.complex.is_two_term()
    }

    /// 1-based summand lookup.
    pub fn summand(&self, i: usize) -> Result<&ProjComplex<K>> {
        if i == 0 || i > self.summands.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.summands.len() });
        }
        Ok(&self.summands[i - 1])
    }

    pub fn to_json(&self) -> Value {
        let degrees = self.complex.support().map(|(a, b)| json!([a, b])).unwrap_or(Value::Null);
        json!({
            "word": self.provenance.to_string(),
            "degrees": degrees,
            "summands": self.summands.iter().map(crate::dump::complex_json).collect::<Vec<_>>(),
            "certified": self.certified_silting,
        })
    }
}

/// Degree shifts `i` for which `Hom(X, Y[i])` can be nonzero.
fn shift_range<K: Field>(x: &ProjComplex<K>, y: &ProjComplex<K>) -> Option<(i64, i64)> {
    let (xl, xh) = x.support()?;
    let (yl, yh) = y.support()?;
    Some((yl - xh, yh - xl))
}

/// `Hom(X, X[i]) = 0` for every `i > 0`.
pub fn is_presilting<K: Field>(x: &ProjComplex<K>) -> Result<bool> {
    let Some((_, hi)) = shift_range(x, x) else { return Ok(true) };
    for i in 1..=hi {
        if hom_dimension(x, x, i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Hom(X, X[i]) = 0` for every `i ≠ 0`.
pub fn is_tilting<K: Field>(x: &ProjComplex<K>) -> Result<bool> {
    let Some((lo, hi)) = shift_range(x, x) else { return Ok(true) };
    for i in lo..=hi {
        if i != 0 && hom_dimension(x, x, i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides `Q ≤ P`, i.e. `Hom(P, Q[i]) = 0` for all `i > 0`. Only shifts
/// up to `hi(Q) - lo(P)` can contribute.
pub fn silting_leq<K: Field>(p: &SiltingObject<K>, q: &SiltingObject<K>) -> Result<bool> {
    let Some((_, hi)) = shift_range(&p.complex, &q.complex) else { return Ok(true) };
    for i in 1..=hi {
        if hom_dimension(&p.complex, &q.complex, i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
