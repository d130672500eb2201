//! JSON dumps of algebras and complexes.

use serde_json::{json, Value};

use crate::algebra::{FdAlgebra, IsoFingerprint};
use crate::field::Field;
use crate::homotopy::ProjComplex;

/// Basis labels with their ends, and the Cartan matrix.
pub fn algebra_json<K: Field>(alg: &FdAlgebra<K>, fingerprint: Option<&IsoFingerprint>) -> Value {
    let names = alg.vertex_names();
    let basis: Vec<Value> = (0..alg.dim())
        .map(|b| {
            let (s, t) = alg.ends(b);
            json!({ "label": alg.labels()[b], "source": names[s], "target": names[t] })
        })
        .collect();
    json!({
        "field": alg.field().descriptor().to_string(),
        "vertices": names,
        "dimension": alg.dim(),
        "cartan": alg.cartan(),
        "basis": basis,
        "fingerprint": fingerprint,
    })
}

/// Terms as vertex-name lists by degree; differentials as matrices of
/// formatted algebra elements.
pub fn complex_json<K: Field>(x: &ProjComplex<K>) -> Value {
    let alg = x.algebra();
    let names = alg.vertex_names();
    let Some((lo, hi)) = x.support() else {
        return json!({ "degrees": Value::Null, "terms": [], "differentials": [] });
    };
    let terms: Vec<Value> = (lo..=hi)
        .map(|n| {
            let t: Vec<&str> = x.term(n).iter().map(|&v| names[v].as_str()).collect();
            json!({ "degree": n, "projectives": t })
        })
        .collect();
    let diffs: Vec<Value> = (lo..hi)
        .map(|n| {
            let d = x.diff(n);
            let rows: Vec<Vec<String>> =
                (0..d.nrows()).map(|r| (0..d.ncols()).map(|c| alg.format_elem(d.get(r, c))).collect()).collect();
            json!({ "from": n, "matrix": rows })
        })
        .collect();
    json!({ "degrees": [lo, hi], "terms": terms, "differentials": diffs })
}
