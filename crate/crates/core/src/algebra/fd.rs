//! Finite-dimensional algebras given by a basis and structure constants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Echelon;

use super::groebner::RewritingSystem;
use super::presentation::{AlgebraPresentation, Arrow, Path, PathWordExpr, Quiver};

/// Default bound on normal-word length.
pub const DEFAULT_MAX_PATH_LEN: usize = 64;

/// An algebra element as a dense coefficient vector over the basis.
pub type Elem<K> = Vec<<K as Field>::Elem>;

/// A basic finite-dimensional algebra `⊕ e_s Λ e_t` with a basis adapted to
/// the vertex idempotents.
///
/// Every basis element `b` has a source `s` and target `t` with
/// `e_s b e_t = b`; for path algebras these are the start and end vertices
/// of the normal-form path. The product `b·c` vanishes unless
/// `target(b) = source(c)`.
#[derive(Clone, Debug)]
pub struct FdAlgebra<K: Field> {
    field: K,
    vertex_names: Vec<String>,
    labels: Vec<String>,
    ends: Vec<(usize, usize)>,
    idempotents: Vec<usize>,
    table: Vec<Vec<(usize, K::Elem)>>,
    presentation: Option<AlgebraPresentation>,
    paths: Vec<Path>,
}

impl<K: Field> PartialEq for FdAlgebra<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vertex_names == other.vertex_names
            && self.labels == other.labels
            && self.ends == other.ends
            && self.idempotents == other.idempotents
            && self.table == other.table
    }
}

/// Builds the quotient of the path algebra by the relation ideal.
pub fn build_algebra<K: Field>(field: &K, pres: &AlgebraPresentation, max_path_len: usize) -> Result<FdAlgebra<K>> {
    let sys = RewritingSystem::complete(field, pres, max_path_len)?;
    let paths = sys.normal_words(max_path_len)?;
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = paths.len();
    let mut table = vec![Vec::new(); n * n];
    for (i, p) in paths.iter().enumerate() {
        for (j, q) in paths.iter().enumerate() {
            if let Some(pq) = p.concat(q) {
                let reduced = sys.reduce_path(&pq);
                table[i * n + j] = reduced.into_iter().map(|(path, c)| (index[&path], c)).collect();
            }
        }
    }
    let nv = pres.quiver.vertices().len();
    let idempotents = (0..nv).map(|v| index[&Path::trivial(v)]).collect();
    let alg = FdAlgebra {
        field: field.clone(),
        vertex_names: pres.quiver.vertices().to_vec(),
        labels: paths.iter().map(|p| p.display(&pres.quiver)).collect(),
        ends: paths.iter().map(|p| (p.start(), p.end())).collect(),
        idempotents,
        table,
        presentation: Some(pres.clone()),
        paths,
    };
    alg.check_admissible()?;
    Ok(alg)
}

impl<K: Field> FdAlgebra<K> {
    /// An algebra from explicit structure constants.
    ///
    /// `ends[b] = (s, t)` places basis element `b` in `e_s Λ e_t`;
    /// `idempotents[v]` is the basis index of `e_v`; `table[i * dim + j]`
    /// is the sparse product `b_i b_j`.
    pub fn from_structure(
        field: K,
        vertex_names: Vec<String>,
        labels: Vec<String>,
        ends: Vec<(usize, usize)>,
        idempotents: Vec<usize>,
        table: Vec<Vec<(usize, K::Elem)>>,
    ) -> Result<Self> {
        let n = labels.len();
        if ends.len() != n || table.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: table.len() });
        }
        if idempotents.len() != vertex_names.len() {
            return Err(Error::DimensionMismatch { expected: vertex_names.len(), found: idempotents.len() });
        }
        Ok(FdAlgebra { field, vertex_names, labels, ends, idempotents, table, presentation: None, paths: Vec::new() })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_names.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Normal-form paths, empty for algebras built from structure constants.
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn presentation(&self) -> Option<&AlgebraPresentation> {
        self.presentation.as_ref()
    }

    pub fn ends(&self, b: usize) -> (usize, usize) {
        self.ends[b]
    }

    pub fn idempotent_index(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn is_idempotent_basis(&self, b: usize) -> bool {
        self.idempotents.contains(&b)
    }

    /// Basis indices of `e_s Λ e_t`.
    pub fn component(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.ends[b] == (s, t)).collect()
    }

    /// `cartan[v][w] = dim e_w Λ e_v`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let nv = self.num_vertices();
        let mut c = vec![vec![0; nv]; nv];
        for &(s, t) in &self.ends {
            c[t][s] += 1;
        }
        c
    }

    pub fn zero(&self) -> Elem<K> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_elem(&self, b: usize) -> Elem<K> {
        let mut v = self.zero();
        v[b] = self.field.one();
        v
    }

    pub fn idempotent(&self, v: usize) -> Elem<K> {
        self.basis_elem(self.idempotents[v])
    }

    pub fn unit(&self) -> Elem<K> {
        let mut u = self.zero();
        for &b in &self.idempotents {
            u[b] = self.field.one();
        }
        u
    }

    /// Sparse product of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, K::Elem)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[K::Elem], b: &[K::Elem]) -> Elem<K> {
        let k = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if k.is_zero(y) || self.ends[i].1 != self.ends[j].0 {
                    continue;
                }
                let xy = k.mul(x, y);
                for (t, c) in self.basis_product(i, j) {
                    out[*t] = k.add(&out[*t], &k.mul(&xy, c));
                }
            }
        }
        out
    }

    /// Like [`FdAlgebra::mul`] but rejects operands of the wrong length.
    pub fn multiply(&self, a: &[K::Elem], b: &[K::Elem]) -> Result<Elem<K>> {
        for x in [a, b] {
            if x.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
            }
        }
        Ok(self.mul(a, b))
    }

    pub fn add(&self, a: &[K::Elem], b: &[K::Elem]) -> Elem<K> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[K::Elem], b: &[K::Elem]) -> Elem<K> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, s: &K::Elem, a: &[K::Elem]) -> Elem<K> {
        a.iter().map(|x| self.field.mul(s, x)).collect()
    }

    pub fn is_zero(&self, a: &[K::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    /// Whether `a` lies in `e_s Λ e_t`.
    pub fn in_component(&self, a: &[K::Elem], s: usize, t: usize) -> bool {
        a.iter().enumerate().all(|(b, x)| self.field.is_zero(x) || self.ends[b] == (s, t))
    }

    /// Coefficient of `e_v` in an element of `e_v Λ e_v`.
    pub fn idempotent_coeff(&self, a: &[K::Elem], v: usize) -> K::Elem {
        a[self.idempotents[v]].clone()
    }

    /// Inverse of an element of `e_v Λ e_v` with invertible idempotent
    /// coefficient, as a unit of the local ring `e_v Λ e_v`.
    pub fn local_inverse(&self, a: &[K::Elem], v: usize) -> Option<Elem<K>> {
        let k = &self.field;
        let lambda = self.idempotent_coeff(a, v);
        let linv = k.inv(&lambda)?;
        // a = λ(e - ρ') with ρ' = -ρ/λ nilpotent; a⁻¹ = λ⁻¹ Σ ρ'^k
        let e = self.idempotent(v);
        let mut rho = a.to_vec();
        rho[self.idempotents[v]] = k.zero();
        let rho = self.scale(&k.neg(&linv), &rho);
        let mut sum = e.clone();
        let mut power = e;
        for _ in 0..=self.dim() {
            power = self.mul(&power, &rho);
            if self.is_zero(&power) {
                break;
            }
            sum = self.add(&sum, &power);
        }
        Some(self.scale(&linv, &sum))
    }

    /// Whether all idempotent coefficients vanish (element of the arrow ideal).
    pub fn in_arrow_ideal(&self, a: &[K::Elem]) -> bool {
        self.idempotents.iter().all(|&b| self.field.is_zero(&a[b]))
    }

    /// Human-readable linear combination, e.g. `2*a*c - l`.
    pub fn format_elem(&self, a: &[K::Elem]) -> String {
        let mut out = String::new();
        for (b, x) in a.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            let (neg, abs) = self.field.signed_repr(x);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if abs != "1" {
                out.push_str(&abs);
                out.push('*');
            }
            out.push_str(&self.labels[b]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Checks associativity on all composable basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|l| {
                    let (a, b, c) = (self.basis_elem(i), self.basis_elem(j), self.basis_elem(l));
                    self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
                })
            })
        })
    }

    /// The opposite algebra, with the same basis and reversed products.
    pub fn opposite(&self) -> FdAlgebra<K> {
        let n = self.dim();
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.table[j * n + i].clone();
            }
        }
        FdAlgebra {
            field: self.field.clone(),
            vertex_names: self.vertex_names.clone(),
            labels: self.labels.clone(),
            ends: self.ends.iter().map(|&(s, t)| (t, s)).collect(),
            idempotents: self.idempotents.clone(),
            table,
            presentation: self.presentation.as_ref().map(opposite_presentation),
            paths: Vec::new(),
        }
    }

    /// Powers of the arrow ideal `J` must reach zero; otherwise some vertex
    /// idempotent is not primitive or the ideal is not admissible.
    fn check_admissible(&self) -> Result<()> {
        let n = self.dim();
        let k = &self.field;
        let arrows: Vec<usize> = (0..n).filter(|b| !self.idempotents.contains(b)).collect();
        for &b in &arrows {
            for &c in &arrows {
                if self.basis_product(b, c).iter().any(|(t, _)| self.idempotents.contains(t)) {
                    return Err(Error::NotAdmissible(format!(
                        "{} * {} has an idempotent term",
                        self.labels[b], self.labels[c]
                    )));
                }
            }
        }
        // J^m as a subspace; J^{m+1} = J^m · J.
        let mut power: Vec<Elem<K>> = arrows.iter().map(|&b| self.basis_elem(b)).collect();
        for _ in 0..=n {
            if power.is_empty() {
                return Ok(());
            }
            let mut e = Echelon::new(k.clone(), n);
            let mut next = Vec::new();
            for x in &power {
                for &b in &arrows {
                    let y = self.mul(x, &self.basis_elem(b));
                    if e.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            power = next;
        }
        Err(Error::NotAdmissible("the arrow ideal is not nilpotent".into()))
    }
}

/// Reverses every arrow and every relation word.
pub fn opposite_presentation(pres: &AlgebraPresentation) -> AlgebraPresentation {
    let q = &pres.quiver;
    let arrows: Vec<(String, String, String)> = q
        .arrows()
        .iter()
        .map(|Arrow { name, source, target }| {
            (name.clone(), q.vertices()[*target].clone(), q.vertices()[*source].clone())
        })
        .collect();
    let quiver = Quiver::new(q.vertices().to_vec(), arrows).expect("valid quiver stays valid");
    let relations = pres
        .relations
        .iter()
        .map(|r| PathWordExpr {
            terms: r
                .terms
                .iter()
                .map(|(c, p)| {
                    let rp = if p.is_trivial() {
                        p.clone()
                    } else {
                        let mut a = p.arrows().to_vec();
                        a.reverse();
                        Path::from_arrows(&quiver, a).expect("reversed path composes")
                    };
                    (c.clone(), rp)
                })
                .collect(),
        })
        .collect();
    AlgebraPresentation { quiver, relations }
}

/// Reduces a path expression in the presentation's algebra to a basis vector.
pub fn element_from_expr<K: Field>(alg: &FdAlgebra<K>, expr: &PathWordExpr) -> Result<Elem<K>> {
    let pres = alg.presentation().ok_or_else(|| Error::Internal("algebra has no presentation".into()))?;
    let k = alg.field();
    let mut out = alg.zero();
    for (c, p) in &expr.terms {
        let coeff = k.from_rational(c)?;
        let mut acc = alg.idempotent(p.start());
        for &a in p.arrows() {
            let arrow = Path::from_arrows(&pres.quiver, vec![a])?;
            let b =
                alg.paths().iter().position(|q| *q == arrow).map(|b| alg.basis_elem(b)).unwrap_or_else(|| alg.zero());
            acc = alg.mul(&acc, &b);
        }
        out = alg.add(&out, &alg.scale(&coeff, &acc));
    }
    Ok(out)
}
