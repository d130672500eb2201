//! Isomorphism invariants: Cartan class, radical layers, center.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel, Echelon, Matrix};

use super::fd::{Elem, FdAlgebra};

/// Largest vertex count for which the Cartan class is canonicalised over all
/// vertex permutations; above it rows and columns are only sorted.
pub const CANONICAL_CARTAN_MAX_VERTICES: usize = 8;

/// A collection of isomorphism invariants. Distinct fingerprints prove two
/// algebras non-isomorphic; equal fingerprints do not prove isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsoFingerprint {
    pub dimension: usize,
    /// Cartan matrix in canonical form under simultaneous row and column
    /// permutation.
    pub cartan: Vec<Vec<usize>>,
    /// `dim rad^k / rad^{k+1}` for `k = 0, 1, ...` up to the Loewy length.
    pub radical_layers: Vec<usize>,
    pub center_dimension: usize,
}

impl fmt::Display for IsoFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cartan = self.cartan.iter().map(|r| format!("[{}]", r.iter().join(","))).join(",");
        write!(
            f,
            "dim={} cartan=[{}] layers=[{}] center={}",
            self.dimension,
            cartan,
            self.radical_layers.iter().join(","),
            self.center_dimension
        )
    }
}

/// Minimum of `P C P^T` over permutation matrices `P`, compared row-major.
pub fn canonical_cartan(c: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = c.len();
    let permuted =
        |perm: &[usize]| -> Vec<Vec<usize>> { perm.iter().map(|&i| perm.iter().map(|&j| c[i][j]).collect()).collect() };
    if n <= CANONICAL_CARTAN_MAX_VERTICES {
        (0..n).permutations(n).map(|p| permuted(&p)).min().unwrap_or_default()
    } else {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| {
            let mut row = c[i].clone();
            row.sort_unstable();
            let mut col: Vec<usize> = (0..n).map(|j| c[j][i]).collect();
            col.sort_unstable();
            (c[i][i], row, col)
        });
        permuted(&order)
    }
}

/// Basis of the Jacobson radical, as the kernel of the trace form
/// `(x, y) ↦ tr(L_{xy})`. Valid in characteristic 0 or above `dim`.
pub fn radical_basis<K: Field>(alg: &FdAlgebra<K>) -> Result<Vec<Elem<K>>> {
    let k = alg.field();
    let n = alg.dim();
    let p = k.characteristic();
    if p != 0 && p as u128 <= n as u128 {
        return Err(Error::FieldTooSmall { characteristic: p, needed: n });
    }
    // tr(L_{b_t}) = Σ_l [b_l](b_t b_l)
    let traces: Vec<K::Elem> = (0..n)
        .map(|t| {
            (0..n).fold(k.zero(), |acc, l| {
                let coeff = alg
                    .basis_product(t, l)
                    .iter()
                    .find(|(b, _)| *b == l)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| k.zero());
                k.add(&acc, &coeff)
            })
        })
        .collect();
    let mut form = Matrix::filled(n, n, k.zero());
    for i in 0..n {
        for j in 0..n {
            let v = alg.basis_product(i, j).iter().fold(k.zero(), |acc, (t, c)| k.add(&acc, &k.mul(c, &traces[*t])));
            form.set(i, j, v);
        }
    }
    Ok(kernel(k, &form))
}

/// Dimensions of the radical layers, given a radical basis.
pub fn radical_layers<K: Field>(alg: &FdAlgebra<K>, rad: &[Elem<K>]) -> Vec<usize> {
    let n = alg.dim();
    let mut layers = Vec::new();
    let mut prev_dim = n;
    let mut power: Vec<Elem<K>> = rad.to_vec();
    loop {
        layers.push(prev_dim - power.len());
        if power.is_empty() {
            break;
        }
        prev_dim = power.len();
        let mut e = Echelon::new(alg.field().clone(), n);
        let mut next = Vec::new();
        for x in &power {
            for r in rad {
                let y = alg.mul(x, r);
                if e.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        power = next;
    }
    layers
}

pub fn center_dimension<K: Field>(alg: &FdAlgebra<K>) -> usize {
    let k = alg.field();
    let n = alg.dim();
    // Rows indexed by (j, t): coefficient of b_t in x b_j - b_j x.
    let mut m = Matrix::filled(n * n, n, k.zero());
    for i in 0..n {
        for j in 0..n {
            for (t, c) in alg.basis_product(i, j) {
                let r = j * n + t;
                let v = k.add(m.get(r, i), c);
                m.set(r, i, v);
            }
            for (t, c) in alg.basis_product(j, i) {
                let r = j * n + t;
                let v = k.sub(m.get(r, i), c);
                m.set(r, i, v);
            }
        }
    }
    kernel(k, &m).len()
}

pub fn fingerprint<K: Field>(alg: &FdAlgebra<K>) -> Result<IsoFingerprint> {
    let rad = radical_basis(alg)?;
    Ok(IsoFingerprint {
        dimension: alg.dim(),
        cartan: canonical_cartan(&alg.cartan()),
        radical_layers: radical_layers(alg, &rad),
        center_dimension: center_dimension(alg),
    })
}
