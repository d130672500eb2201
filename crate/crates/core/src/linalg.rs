//! Dense exact linear algebra over a [`Field`].

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }
}

pub fn zeros<K: Field>(k: &K, rows: usize, cols: usize) -> Matrix<K::Elem> {
    Matrix::filled(rows, cols, k.zero())
}

pub fn identity<K: Field>(k: &K, n: usize) -> Matrix<K::Elem> {
    let mut m = zeros(k, n, n);
    for i in 0..n {
        m.set(i, i, k.one());
    }
    m
}

pub fn mat_mul<K: Field>(k: &K, a: &Matrix<K::Elem>, b: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = zeros(k, a.rows, b.cols);
    for i in 0..a.rows {
        for t in 0..a.cols {
            let x = a.get(i, t);
            if k.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(t, j);
                if !k.is_zero(y) {
                    let v = k.add(out.get(i, j), &k.mul(x, y));
                    out.set(i, j, v);
                }
            }
        }
    }
    out
}

pub fn mat_add<K: Field>(k: &K, a: &Matrix<K::Elem>, b: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| k.add(x, y)).collect() }
}

pub fn mat_scale<K: Field>(k: &K, a: &Matrix<K::Elem>, s: &K::Elem) -> Matrix<K::Elem> {
    Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().map(|x| k.mul(x, s)).collect() }
}

pub fn trace<K: Field>(k: &K, a: &Matrix<K::Elem>) -> K::Elem {
    (0..a.rows.min(a.cols)).fold(k.zero(), |acc, i| k.add(&acc, a.get(i, i)))
}

pub fn is_zero_vec<K: Field>(k: &K, v: &[K::Elem]) -> bool {
    v.iter().all(|x| k.is_zero(x))
}

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref<K: Field>(k: &K, m: &mut Matrix<K::Elem>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !k.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(m.get(r, c)).unwrap();
        for j in c..cols {
            let v = k.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        let pivot_row: Vec<K::Elem> = m.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if k.is_zero(&f) {
                continue;
            }
            for (off, pv) in pivot_row.iter().enumerate() {
                if !k.is_zero(pv) {
                    let j = c + off;
                    let v = k.sub(m.get(i, j), &k.mul(&f, pv));
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<K: Field>(k: &K, m: &Matrix<K::Elem>) -> usize {
    let mut e = Echelon::new(k.clone(), m.cols);
    let mut rank = 0;
    for r in 0..m.rows {
        if e.insert(m.row(r).to_vec()) {
            rank += 1;
        }
    }
    rank
}

/// Basis of `{x : m x = 0}`.
pub fn kernel<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Vec<Vec<K::Elem>> {
    let mut a = m.clone();
    let pivots = rref(k, &mut a);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![k.zero(); m.cols];
        v[free] = k.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = k.neg(a.get(r, free));
        }
        basis.push(v);
    }
    basis
}

pub fn determinant<K: Field>(k: &K, m: &Matrix<K::Elem>) -> K::Elem {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut a = m.clone();
    let mut det = k.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !k.is_zero(a.get(i, c))) else {
            return k.zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = k.neg(&det);
        }
        let piv = a.get(c, c).clone();
        det = k.mul(&det, &piv);
        let inv = k.inv(&piv).unwrap();
        for i in c + 1..n {
            let f = k.mul(a.get(i, c), &inv);
            if k.is_zero(&f) {
                continue;
            }
            for j in c..n {
                let v = k.sub(a.get(i, j), &k.mul(&f, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    det
}

pub fn inverse<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Option<Matrix<K::Elem>> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut aug = zeros(k, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, k.one());
    }
    let pivots = rref(k, &mut aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return None;
    }
    let mut inv = zeros(k, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, aug.get(i, n + j).clone());
        }
    }
    Some(inv)
}

/// Minimal polynomial of a square matrix (monic, low degree first).
pub fn minimal_polynomial<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Vec<K::Elem> {
    let n = m.rows;
    let mut e = Echelon::with_coordinates(k.clone(), n * n, n + 1);
    let mut power = identity(k, n);
    for d in 0..=n {
        let flat = power.data.clone();
        let mut unit = vec![k.zero(); n + 1];
        unit[d] = k.one();
        if let Some(coords) = e.express(&flat) {
            // power^d = sum coords_j power^j
            let mut p: Vec<K::Elem> = coords[..d].iter().map(|c| k.neg(c)).collect();
            p.push(k.one());
            return p;
        }
        e.insert_with(flat, unit);
        power = mat_mul(k, &power, m);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Incrementally built echelon basis of a subspace of `K^dim`, optionally
/// tracking each stored row as a combination of caller-supplied coordinate
/// vectors.
#[derive(Clone, Debug)]
pub struct Echelon<K: Field> {
    field: K,
    dim: usize,
    ncoords: usize,
    rows: Vec<EchelonRow<K::Elem>>,
}

#[derive(Clone, Debug)]
struct EchelonRow<E> {
    pivot: usize,
    vec: Vec<E>,
    coords: Vec<E>,
}

impl<K: Field> Echelon<K> {
    pub fn new(field: K, dim: usize) -> Self {
        Echelon { field, dim, ncoords: 0, rows: Vec::new() }
    }

    pub fn with_coordinates(field: K, dim: usize, ncoords: usize) -> Self {
        Echelon { field, dim, ncoords, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// accumulated coordinates `c` with `v = remainder + sum c_j coords_j`.
    pub fn reduce_tracked(&self, v: &[K::Elem]) -> (Vec<K::Elem>, Vec<K::Elem>) {
        let k = &self.field;
        let mut w = v.to_vec();
        let mut coords = vec![k.zero(); self.ncoords];
        for row in &self.rows {
            let f = w[row.pivot].clone();
            if k.is_zero(&f) {
                continue;
            }
            for (j, x) in row.vec.iter().enumerate().skip(row.pivot) {
                if !k.is_zero(x) {
                    w[j] = k.sub(&w[j], &k.mul(&f, x));
                }
            }
            for (j, x) in row.coords.iter().enumerate() {
                if !k.is_zero(x) {
                    coords[j] = k.add(&coords[j], &k.mul(&f, x));
                }
            }
        }
        (w, coords)
    }

    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut w = v.to_vec();
        for row in &self.rows {
            let f = w[row.pivot].clone();
            if k.is_zero(&f) {
                continue;
            }
            for (j, x) in row.vec.iter().enumerate().skip(row.pivot) {
                if !k.is_zero(x) {
                    w[j] = k.sub(&w[j], &k.mul(&f, x));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        is_zero_vec(&self.field, &self.reduce(v))
    }

    /// Coordinates of `v` if it lies in the span.
    pub fn express(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let (w, c) = self.reduce_tracked(v);
        is_zero_vec(&self.field, &w).then_some(c)
    }

    pub fn insert(&mut self, v: Vec<K::Elem>) -> bool {
        let coords = vec![self.field.zero(); self.ncoords];
        self.insert_with(v, coords)
    }

    /// Inserts `v` carrying coordinate vector `coords`; returns whether the
    /// rank grew.
    pub fn insert_with(&mut self, v: Vec<K::Elem>, coords: Vec<K::Elem>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let k = self.field.clone();
        let (mut w, acc) = self.reduce_tracked(&v);
        let Some(pivot) = w.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let mut c: Vec<K::Elem> = coords.iter().zip(acc.iter()).map(|(a, b)| k.sub(a, b)).collect();
        let inv = k.inv(&w[pivot]).unwrap();
        for x in w.iter_mut().skip(pivot) {
            *x = k.mul(x, &inv);
        }
        for x in c.iter_mut() {
            *x = k.mul(x, &inv);
        }
        self.rows.push(EchelonRow { pivot, vec: w, coords: c });
        true
    }
}
