//! Matrices over the algebra, bounded complexes of projectives and graded
//! maps between them.
//!
//! A projective module is a list of vertices `[v_1, …, v_m]` standing for
//! `P_{v_1} ⊕ … ⊕ P_{v_m}` with `P_v = e_v Λ`. A map `P_u → P_w` is left
//! multiplication by an element of `e_w Λ e_u`, so an [`AlgMatrix`] from
//! `cols` to `rows` has entry `(r, c)` in `e_{rows[r]} Λ e_{cols[c]}` and
//! composition is the literal matrix product.

use std::sync::Arc;

use crate::algebra::{Elem, FdAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{inverse, Matrix};

#[derive(Clone, Debug, PartialEq)]
pub struct AlgMatrix<K: Field> {
    rows: Vec<usize>,
    cols: Vec<usize>,
    data: Vec<Elem<K>>,
}

impl<K: Field> AlgMatrix<K> {
    pub fn zero(alg: &FdAlgebra<K>, rows: &[usize], cols: &[usize]) -> Self {
        AlgMatrix { rows: rows.to_vec(), cols: cols.to_vec(), data: vec![alg.zero(); rows.len() * cols.len()] }
    }

    pub fn identity(alg: &FdAlgebra<K>, verts: &[usize]) -> Self {
        let mut m = Self::zero(alg, verts, verts);
        for (i, &v) in verts.iter().enumerate() {
            m.set(i, i, alg.idempotent(v));
        }
        m
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem<K> {
        &self.data[r * self.cols.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem<K>) {
        let n = self.cols.len();
        self.data[r * n + c] = v;
    }

    pub fn is_zero(&self, alg: &FdAlgebra<K>) -> bool {
        self.data.iter().all(|x| alg.is_zero(x))
    }

    /// Every entry lies in its idempotent component.
    pub fn is_well_formed(&self, alg: &FdAlgebra<K>) -> bool {
        (0..self.nrows())
            .all(|r| (0..self.ncols()).all(|c| alg.in_component(self.get(r, c), self.rows[r], self.cols[c])))
    }

    /// `self ∘ other`.
    pub fn compose(&self, alg: &FdAlgebra<K>, other: &AlgMatrix<K>) -> AlgMatrix<K> {
        debug_assert_eq!(self.cols, other.rows, "incompatible composition");
        let mut out = AlgMatrix::zero(alg, &self.rows, &other.cols);
        for r in 0..self.nrows() {
            for m in 0..self.ncols() {
                let a = self.get(r, m);
                if alg.is_zero(a) {
                    continue;
                }
                for c in 0..other.ncols() {
                    let b = other.get(m, c);
                    if alg.is_zero(b) {
                        continue;
                    }
                    let idx = r * other.ncols() + c;
                    out.data[idx] = alg.add(&out.data[idx], &alg.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, alg: &FdAlgebra<K>, other: &AlgMatrix<K>) -> AlgMatrix<K> {
        AlgMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| alg.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, alg: &FdAlgebra<K>, other: &AlgMatrix<K>) -> AlgMatrix<K> {
        AlgMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| alg.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, alg: &FdAlgebra<K>, s: &K::Elem) -> AlgMatrix<K> {
        AlgMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(|a| alg.scale(s, a)).collect(),
        }
    }

    pub fn neg(&self, alg: &FdAlgebra<K>) -> AlgMatrix<K> {
        self.scale(alg, &alg.field().from_i64(-1))
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> AlgMatrix<K> {
        let rv: Vec<usize> = rows.iter().map(|&r| self.rows[r]).collect();
        let cv: Vec<usize> = cols.iter().map(|&c| self.cols[c]).collect();
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        AlgMatrix { rows: rv, cols: cv, data }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn blocks(a: &AlgMatrix<K>, b: &AlgMatrix<K>, c: &AlgMatrix<K>, d: &AlgMatrix<K>) -> AlgMatrix<K> {
        let mut rows = a.rows.clone();
        rows.extend_from_slice(&c.rows);
        let mut cols = a.cols.clone();
        cols.extend_from_slice(&b.cols);
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in 0..a.nrows() {
            data.extend((0..a.ncols()).map(|j| a.get(r, j).clone()));
            data.extend((0..b.ncols()).map(|j| b.get(r, j).clone()));
        }
        for r in 0..c.nrows() {
            data.extend((0..c.ncols()).map(|j| c.get(r, j).clone()));
            data.extend((0..d.ncols()).map(|j| d.get(r, j).clone()));
        }
        AlgMatrix { rows, cols, data }
    }

    pub fn block_diag(alg: &FdAlgebra<K>, a: &AlgMatrix<K>, d: &AlgMatrix<K>) -> AlgMatrix<K> {
        let b = AlgMatrix::zero(alg, &a.rows, &d.cols);
        let c = AlgMatrix::zero(alg, &d.rows, &a.cols);
        Self::blocks(a, &b, &c, d)
    }

    pub fn vstack(alg: &FdAlgebra<K>, parts: &[AlgMatrix<K>], cols: &[usize]) -> AlgMatrix<K> {
        let mut out = AlgMatrix::zero(alg, &[], cols);
        for p in parts {
            out.rows.extend_from_slice(&p.rows);
            out.data.extend(p.data.iter().cloned());
        }
        out
    }

    pub fn hstack(alg: &FdAlgebra<K>, parts: &[AlgMatrix<K>], rows: &[usize]) -> AlgMatrix<K> {
        let mut cols = Vec::new();
        for p in parts {
            cols.extend_from_slice(&p.cols);
        }
        let mut out = AlgMatrix::zero(alg, rows, &cols);
        let mut off = 0;
        for p in parts {
            for r in 0..p.nrows() {
                for c in 0..p.ncols() {
                    out.set(r, off + c, p.get(r, c).clone());
                }
            }
            off += p.ncols();
        }
        out
    }

    /// Idempotent coefficients: the image in `Λ/rad Λ` of each entry between
    /// equal vertices, zero elsewhere.
    pub fn top(&self, alg: &FdAlgebra<K>) -> Matrix<K::Elem> {
        let k = alg.field();
        let mut m = Matrix::filled(self.nrows(), self.ncols(), k.zero());
        for r in 0..self.nrows() {
            for c in 0..self.ncols() {
                if self.rows[r] == self.cols[c] {
                    m.set(r, c, alg.idempotent_coeff(self.get(r, c), self.rows[r]));
                }
            }
        }
        m
    }

    /// Lifts a scalar matrix supported on equal-vertex entries.
    pub fn from_top(alg: &FdAlgebra<K>, rows: &[usize], cols: &[usize], m: &Matrix<K::Elem>) -> Self {
        let mut out = AlgMatrix::zero(alg, rows, cols);
        for (r, &w) in rows.iter().enumerate() {
            for (c, &u) in cols.iter().enumerate() {
                if w == u {
                    out.set(r, c, alg.scale(m.get(r, c), &alg.idempotent(w)));
                }
            }
        }
        out
    }

    /// Inverse of a square matrix whose top is invertible.
    pub fn inverse(&self, alg: &FdAlgebra<K>) -> Option<AlgMatrix<K>> {
        let k = alg.field();
        let t = self.top(alg);
        let tinv = inverse(k, &t)?;
        let sinv = AlgMatrix::from_top(alg, &self.cols, &self.rows, &tinv);
        // self = S (1 + Z) with Z = S⁻¹(self - S) radical, hence nilpotent.
        let s = AlgMatrix::from_top(alg, &self.rows, &self.cols, &t);
        let z = sinv.compose(alg, &self.sub(alg, &s));
        let id = AlgMatrix::identity(alg, &self.cols);
        let mut sum = id.clone();
        let mut power = id;
        let neg_z = z.neg(alg);
        for _ in 0..=alg.dim() * self.ncols().max(1) {
            power = power.compose(alg, &neg_z);
            if power.is_zero(alg) {
                break;
            }
            sum = sum.add(alg, &power);
        }
        Some(sum.compose(alg, &sinv))
    }

    pub fn entries(&self) -> &[Elem<K>] {
        &self.data
    }
}

/// A bounded complex `… → X^n → X^{n+1} → …` of finitely generated
/// projectives, cohomologically indexed.
#[derive(Clone, Debug)]
pub struct ProjComplex<K: Field> {
    alg: Arc<FdAlgebra<K>>,
    lo: i64,
    terms: Vec<Vec<usize>>,
    diffs: Vec<AlgMatrix<K>>,
}

impl<K: Field> PartialEq for ProjComplex<K> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.trimmed(), other.trimmed());
        same_algebra(&a.alg, &b.alg) && a.terms == b.terms && a.diffs == b.diffs && (a.terms.is_empty() || a.lo == b.lo)
    }
}

pub fn same_algebra<K: Field>(a: &Arc<FdAlgebra<K>>, b: &Arc<FdAlgebra<K>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<K: Field> ProjComplex<K> {
    /// Validates shapes, idempotent components and `d² = 0`.
    pub fn new(alg: Arc<FdAlgebra<K>>, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<AlgMatrix<K>>) -> Result<Self> {
        let nv = alg.num_vertices();
        if let Some(&v) = terms.iter().flatten().find(|&&v| v >= nv) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if diffs.len() != terms.len().saturating_sub(1) {
            return Err(Error::DimensionMismatch { expected: terms.len().saturating_sub(1), found: diffs.len() });
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.cols() != terms[k].as_slice() || d.rows() != terms[k + 1].as_slice() {
                return Err(Error::DimensionMismatch { expected: terms[k].len(), found: d.ncols() });
            }
            if !d.is_well_formed(&alg) {
                return Err(Error::Internal("differential entry outside its component".into()));
            }
        }
        let x = ProjComplex { alg, lo, terms, diffs };
        if !x.d_squared_zero() {
            return Err(Error::Internal("differential does not square to zero".into()));
        }
        Ok(x)
    }

    pub(crate) fn from_parts(
        alg: Arc<FdAlgebra<K>>,
        lo: i64,
        terms: Vec<Vec<usize>>,
        diffs: Vec<AlgMatrix<K>>,
    ) -> Self {
        ProjComplex { alg, lo, terms, diffs }
    }

    pub fn zero(alg: Arc<FdAlgebra<K>>) -> Self {
        ProjComplex { alg, lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `P_v` in degree `n`.
    pub fn stalk(alg: Arc<FdAlgebra<K>>, v: usize, n: i64) -> Result<Self> {
        if v >= alg.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(ProjComplex { alg, lo: n, terms: vec![vec![v]], diffs: Vec::new() })
    }

    /// `⊕_v P_v = Λ` in degree `n`.
    pub fn regular(alg: Arc<FdAlgebra<K>>, n: i64) -> Self {
        let verts = (0..alg.num_vertices()).collect();
        ProjComplex { alg, lo: n, terms: vec![verts], diffs: Vec::new() }
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra<K>> {
        &self.alg
    }

    /// Lowest and highest degrees with a nonzero term.
    pub fn support(&self) -> Option<(i64, i64)> {
        let first = self.terms.iter().position(|t| !t.is_empty())?;
        let last = self.terms.iter().rposition(|t| !t.is_empty())?;
        Some((self.lo + first as i64, self.lo + last as i64))
    }

    pub fn is_zero(&self) -> bool {
        self.support().is_none()
    }

    pub(crate) fn lo(&self) -> i64 {
        self.lo
    }

    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn term(&self, n: i64) -> &[usize] {
        let k = n - self.lo;
        if k < 0 || k as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[k as usize]
        }
    }

    /// `d^n : X^n → X^{n+1}`.
    pub fn diff(&self, n: i64) -> AlgMatrix<K> {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            AlgMatrix::zero(&self.alg, self.term(n + 1), self.term(n))
        }
    }

    pub(crate) fn diff_ref(&self, n: i64) -> Option<&AlgMatrix<K>> {
        let k = n - self.lo;
        (k >= 0 && (k as usize) < self.diffs.len()).then(|| &self.diffs[k as usize])
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    pub fn d_squared_zero(&self) -> bool {
        self.diffs.windows(2).all(|w| w[1].compose(&self.alg, &w[0]).is_zero(&self.alg))
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(&self) -> ProjComplex<K> {
        match self.support() {
            None => ProjComplex::zero(self.alg.clone()),
            Some((a, b)) => {
                let (i, j) = ((a - self.lo) as usize, (b - self.lo) as usize);
                ProjComplex {
                    alg: self.alg.clone(),
                    lo: a,
                    terms: self.terms[i..=j].to_vec(),
                    diffs: self.diffs[i..j].to_vec(),
                }
            }
        }
    }

    /// `X[n]`: `X[n]^m = X^{m+n}` with differential `(-1)^n d`.
    pub fn shift(&self, n: i64) -> ProjComplex<K> {
        let diffs = if n % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(|d| d.neg(&self.alg)).collect() };
        ProjComplex { alg: self.alg.clone(), lo: self.lo - n, terms: self.terms.clone(), diffs }
    }

    /// Degree range covering both complexes, as `(lo, len)`.
    fn joint_range(&self, other: &ProjComplex<K>) -> Option<(i64, usize)> {
        match (self.support(), other.support()) {
            (None, None) => None,
            (Some(r), None) | (None, Some(r)) => Some((r.0, (r.1 - r.0 + 1) as usize)),
            (Some(a), Some(b)) => {
                let lo = a.0.min(b.0);
                let hi = a.1.max(b.1);
                Some((lo, (hi - lo + 1) as usize))
            }
        }
    }

    pub fn direct_sum(&self, other: &ProjComplex<K>) -> ProjComplex<K> {
        let alg = &self.alg;
        let Some((lo, len)) = self.joint_range(other) else {
            return ProjComplex::zero(alg.clone());
        };
        let mut terms = Vec::with_capacity(len);
        for k in 0..len {
            let n = lo + k as i64;
            let mut t = self.term(n).to_vec();
            t.extend_from_slice(other.term(n));
            terms.push(t);
        }
        let diffs = (0..len.saturating_sub(1))
            .map(|k| {
                let n = lo + k as i64;
                AlgMatrix::block_diag(alg, &self.diff(n), &other.diff(n))
            })
            .collect();
        ProjComplex { alg: alg.clone(), lo, terms, diffs }
    }

    pub fn direct_sum_all(alg: &Arc<FdAlgebra<K>>, parts: &[ProjComplex<K>]) -> ProjComplex<K> {
        parts.iter().fold(ProjComplex::zero(alg.clone()), |acc, p| acc.direct_sum(p))
    }

    /// Per-degree sorted vertex lists over the support; an isomorphism
    /// invariant of minimal complexes.
    pub fn signature(&self) -> (i64, Vec<Vec<usize>>) {
        let t = self.trimmed();
        let terms = t
            .terms
            .iter()
            .map(|v| {
                let mut v = v.clone();
                v.sort_unstable();
                v
            })
            .collect();
        (t.lo, terms)
    }

    /// Concentrated in degrees `-1` and `0`.
    pub fn is_two_term(&self) -> bool {
        match self.support() {
            None => true,
            Some((a, b)) => a >= -1 && b <= 0,
        }
    }

    /// All differential entries lie in the radical.
    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| {
            (0..d.nrows()).all(|r| {
                (0..d.ncols()).all(|c| {
                    d.rows()[r] != d.cols()[c]
                        || self.alg.field().is_zero(&self.alg.idempotent_coeff(d.get(r, c), d.rows()[r]))
                })
            })
        })
    }
}

/// A graded map `X → Y` of degree `s`: components `f^n : X^n → Y^{n+s}`.
/// A cycle of the Hom complex is a chain map `X → Y[s]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap<K: Field> {
    pub degree: i64,
    src_lo: i64,
    comps: Vec<AlgMatrix<K>>,
}

impl<K: Field> ChainMap<K> {
    pub fn zero(x: &ProjComplex<K>, y: &ProjComplex<K>, s: i64) -> Self {
        let alg = x.algebra();
        let comps = (0..x.len())
            .map(|k| {
                let n = x.lo + k as i64;
                AlgMatrix::zero(alg, y.term(n + s), x.term(n))
            })
            .collect();
        ChainMap { degree: s, src_lo: x.lo, comps }
    }

    pub fn identity(x: &ProjComplex<K>) -> Self {
        let alg = x.algebra();
        let comps = x.terms.iter().map(|t| AlgMatrix::identity(alg, t)).collect();
        ChainMap { degree: 0, src_lo: x.lo, comps }
    }

    pub(crate) fn from_components(degree: i64, src_lo: i64, comps: Vec<AlgMatrix<K>>) -> Self {
        ChainMap { degree, src_lo, comps }
    }

    /// `f^n`, or `None` outside the source's stored range.
    pub fn component(&self, n: i64) -> Option<&AlgMatrix<K>> {
        let k = n - self.src_lo;
        (k >= 0 && (k as usize) < self.comps.len()).then(|| &self.comps[k as usize])
    }

    #[cfg(test)]
    pub(crate) fn component_mut(&mut self, n: i64) -> Option<&mut AlgMatrix<K>> {
        let k = n - self.src_lo;
        (k >= 0 && (k as usize) < self.comps.len()).then(move || &mut self.comps[k as usize])
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &AlgMatrix<K>)> {
        self.comps.iter().enumerate().map(move |(k, m)| (self.src_lo + k as i64, m))
    }

    pub fn is_zero(&self, alg: &FdAlgebra<K>) -> bool {
        self.comps.iter().all(|m| m.is_zero(alg))
    }

    /// `d_Y f^n = (-1)^s f^{n+1} d_X` in every degree.
    pub fn is_chain_map(&self, x: &ProjComplex<K>, y: &ProjComplex<K>) -> bool {
        let alg = x.algebra();
        let s = self.degree;
        let k = alg.field();
        let sign = if s % 2 == 0 { k.one() } else { k.from_i64(-1) };
        let (lo, hi) = (x.lo - 1, x.lo + x.len() as i64);
        (lo..=hi).all(|n| {
            let f_n = self.component(n).cloned().unwrap_or_else(|| AlgMatrix::zero(alg, y.term(n + s), x.term(n)));
            let f_n1 = self
                .component(n + 1)
                .cloned()
                .unwrap_or_else(|| AlgMatrix::zero(alg, y.term(n + 1 + s), x.term(n + 1)));
            let lhs = y.diff(n + s).compose(alg, &f_n);
            let rhs = f_n1.compose(alg, &x.diff(n)).scale(alg, &sign);
            lhs == rhs
        })
    }

    /// `self ∘ other`, of degree `self.degree + other.degree`:
    /// `(g∘f)^n = g^{n+t} f^n`.
    pub fn compose(
        &self,
        alg: &FdAlgebra<K>,
        other: &ChainMap<K>,
        w: &ProjComplex<K>,
        z: &ProjComplex<K>,
    ) -> ChainMap<K> {
        let t = other.degree;
        let s = self.degree;
        let comps = (0..w.len())
            .map(|k| {
                let n = w.lo + k as i64;
                match (self.component(n + t), other.component(n)) {
                    (Some(g), Some(f)) => g.compose(alg, f),
                    _ => AlgMatrix::zero(alg, z.term(n + t + s), w.term(n)),
                }
            })
            .collect();
        ChainMap { degree: s + t, src_lo: w.lo, comps }
    }

    pub fn add(&self, alg: &FdAlgebra<K>, other: &ChainMap<K>) -> ChainMap<K> {
        debug_assert_eq!((self.degree, self.src_lo), (other.degree, other.src_lo));
        ChainMap {
            degree: self.degree,
            src_lo: self.src_lo,
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(alg, b)).collect(),
        }
    }

    pub fn sub(&self, alg: &FdAlgebra<K>, other: &ChainMap<K>) -> ChainMap<K> {
        self.add(alg, &other.scale(alg, &alg.field().from_i64(-1)))
    }

    pub fn scale(&self, alg: &FdAlgebra<K>, c: &K::Elem) -> ChainMap<K> {
        ChainMap {
            degree: self.degree,
            src_lo: self.src_lo,
            comps: self.comps.iter().map(|a| a.scale(alg, c)).collect(),
        }
    }

    /// Top blocks in every degree (see [`AlgMatrix::top`]).
    pub fn tops(&self, alg: &FdAlgebra<K>) -> Vec<Matrix<K::Elem>> {
        self.comps.iter().map(|m| m.top(alg)).collect()
    }
}

/// Mapping cone of a degree-0 chain map `f : X → Y`:
/// `cone^n = X^{n+1} ⊕ Y^n`, `d = [[-d_X, 0], [f, d_Y]]`.
pub fn cone<K: Field>(x: &ProjComplex<K>, y: &ProjComplex<K>, f: &ChainMap<K>) -> Result<ProjComplex<K>> {
    if f.degree != 0 {
        return Err(Error::Internal("cone of a map of nonzero degree".into()));
    }
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = x.algebra();
    let xs = x.shift(1);
    let Some((lo, len)) = xs.joint_range(y) else {
        return Ok(ProjComplex::zero(alg.clone()));
    };
    let mut terms = Vec::with_capacity(len);
    for k in 0..len {
        let n = lo + k as i64;
        let mut t = x.term(n + 1).to_vec();
        t.extend_from_slice(y.term(n));
        terms.push(t);
    }
    let diffs = (0..len.saturating_sub(1))
        .map(|k| {
            let n = lo + k as i64;
            let fm = f.component(n + 1).cloned().unwrap_or_else(|| AlgMatrix::zero(alg, y.term(n + 1), x.term(n + 1)));
            let top_right = AlgMatrix::zero(alg, x.term(n + 2), y.term(n));
            AlgMatrix::blocks(&x.diff(n + 1).neg(alg), &top_right, &fm, &y.diff(n))
        })
        .collect();
    Ok(ProjComplex { alg: alg.clone(), lo, terms, diffs })
}

/// `cone(f)[-1]`, the third term of the triangle `cocone → X → Y`.
pub fn cocone<K: Field>(x: &ProjComplex<K>, y: &ProjComplex<K>, f: &ChainMap<K>) -> Result<ProjComplex<K>> {
    Ok(cone(x, y, f)?.shift(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, parse_presentation};
    use crate::field::PrimeField;

    fn dual() -> Arc<FdAlgebra<PrimeField>> {
        let pres = parse_presentation("vertices: 1\narrows: x: 1 -> 1\nrelation: x*x\n").unwrap();
        Arc::new(build_algebra(&PrimeField::default(), &pres, 64).unwrap())
    }

    #[test]
    fn shift_round_trip() {
        let alg = dual();
        let x = ProjComplex::new(
            alg.clone(),
            0,
            vec![vec![0], vec![0]],
            vec![{
                let mut m = AlgMatrix::zero(&alg, &[0], &[0]);
                m.set(0, 0, alg.basis_elem(1));
                m
            }],
        )
        .unwrap();
        assert_eq!(x.shift(0), x);
        assert_eq!(x.shift(1).shift(-1), x);
        assert_eq!(x.shift(1).support(), Some((-1, 0)));
        let st = ProjComplex::stalk(alg.clone(), 0, 2).unwrap();
        assert_eq!(st, ProjComplex::stalk(alg, 0, 0).unwrap().shift(-2));
    }

    #[test]
    fn cone_squares_to_zero() {
        let alg = dual();
        let x = ProjComplex::stalk(alg.clone(), 0, 0).unwrap();
        let mut f = ChainMap::zero(&x, &x, 0);
        let mut m = AlgMatrix::zero(&alg, &[0], &[0]);
        m.set(0, 0, alg.basis_elem(1));
        *f.component_mut(0).unwrap() = m;
        assert!(f.is_chain_map(&x, &x));
        let c = cone(&x, &x, &f).unwrap();
        assert!(c.d_squared_zero());
        assert_eq!(c.support(), Some((-1, 0)));
    }

    #[test]
    fn rejects_bad_differential() {
        let alg = dual();
        let mut m = AlgMatrix::zero(&alg, &[0], &[0]);
        m.set(0, 0, alg.basis_elem(0));
        let bad = ProjComplex::new(alg.clone(), 0, vec![vec![0], vec![0], vec![0]], vec![m.clone(), m]);
        assert!(bad.is_err());
    }

    #[test]
    fn matrix_inverse() {
        let alg = dual();
        let k = *alg.field();
        let mut m = AlgMatrix::zero(&alg, &[0, 0], &[0, 0]);
        m.set(0, 0, vec![k.from_i64(2), k.from_i64(1)]);
        m.set(0, 1, vec![k.from_i64(1), k.from_i64(3)]);
        m.set(1, 0, vec![0, k.from_i64(5)]);
        m.set(1, 1, vec![k.from_i64(1), 0]);
        let inv = m.inverse(&alg).unwrap();
        assert_eq!(m.compose(&alg, &inv), AlgMatrix::identity(&alg, &[0, 0]));
    }
}
