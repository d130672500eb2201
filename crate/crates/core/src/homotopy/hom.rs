//! Morphism spaces in the homotopy category: `Hom_K(X, Y[s])` as the degree
//! `s` cohomology of the total Hom complex.

use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel, rank, Echelon, Matrix};

use super::complex::{same_algebra, AlgMatrix, ChainMap, ProjComplex};

/// Coordinates on the space of graded maps `X → Y` of a fixed degree.
#[derive(Clone, Debug)]
struct Layout {
    shift: i64,
    src_lo: i64,
    blocks: Vec<Block>,
    total: usize,
}

#[derive(Clone, Debug)]
struct Block {
    n: i64,
    offset: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    entry_offset: Vec<usize>,
    entry_basis: Vec<Vec<usize>>,
}

/// Position of each basis element inside its idempotent component.
fn component_positions<K: Field>(alg: &FdAlgebra<K>) -> Vec<usize> {
    let mut pos = vec![0; alg.dim()];
    for s in 0..alg.num_vertices() {
        for t in 0..alg.num_vertices() {
            for (i, b) in alg.component(s, t).into_iter().enumerate() {
                pos[b] = i;
            }
        }
    }
    pos
}

impl Layout {
    fn new<K: Field>(alg: &FdAlgebra<K>, x: &ProjComplex<K>, y: &ProjComplex<K>, s: i64) -> Self {
        let mut blocks = Vec::with_capacity(x.len());
        let mut total = 0;
        for k in 0..x.len() {
            let n = x.lo() + k as i64;
            let rows = y.term(n + s).to_vec();
            let cols = x.term(n).to_vec();
            let offset = total;
            let mut entry_offset = Vec::with_capacity(rows.len() * cols.len());
            let mut entry_basis = Vec::with_capacity(rows.len() * cols.len());
            let mut local = 0;
            for &w in &rows {
                for &u in &cols {
                    let comp = alg.component(w, u);
                    entry_offset.push(local);
                    local += comp.len();
                    entry_basis.push(comp);
                }
            }
            total += local;
            blocks.push(Block { n, offset, rows, cols, entry_offset, entry_basis });
        }
        Layout { shift: s, src_lo: x.lo(), blocks, total }
    }

    fn block(&self, n: i64) -> Option<&Block> {
        let k = n - self.src_lo;
        (k >= 0 && (k as usize) < self.blocks.len()).then(|| &self.blocks[k as usize])
    }

    fn coord(&self, n: i64, r: usize, c: usize, pos: usize) -> Option<usize> {
        let b = self.block(n)?;
        let e = r * b.cols.len() + c;
        Some(b.offset + b.entry_offset[e] + pos)
    }

    fn to_coords<K: Field>(&self, alg: &FdAlgebra<K>, pos: &[usize], f: &ChainMap<K>) -> Vec<K::Elem> {
        let k = alg.field();
        let mut v = vec![k.zero(); self.total];
        for blk in &self.blocks {
            let Some(m) = f.component(blk.n) else { continue };
            for r in 0..blk.rows.len() {
                for c in 0..blk.cols.len() {
                    let base = blk.offset + blk.entry_offset[r * blk.cols.len() + c];
                    for (b, x) in m.get(r, c).iter().enumerate() {
                        if !k.is_zero(x) {
                            v[base + pos[b]] = x.clone();
                        }
                    }
                }
            }
        }
        v
    }

    fn from_coords<K: Field>(&self, alg: &FdAlgebra<K>, v: &[K::Elem]) -> ChainMap<K> {
        let comps = self
            .blocks
            .iter()
            .map(|blk| {
                let mut m = AlgMatrix::zero(alg, &blk.rows, &blk.cols);
                for r in 0..blk.rows.len() {
                    for c in 0..blk.cols.len() {
                        let e = r * blk.cols.len() + c;
                        let basis = &blk.entry_basis[e];
                        if basis.is_empty() {
                            continue;
                        }
                        let mut x = alg.zero();
                        let base = blk.offset + blk.entry_offset[e];
                        for (i, &b) in basis.iter().enumerate() {
                            x[b] = v[base + i].clone();
                        }
                        m.set(r, c, x);
                    }
                }
                m
            })
            .collect();
        ChainMap::from_components(self.shift, self.src_lo, comps)
    }
}

/// `a · b_j` for a basis element `b_j`.
fn mul_basis_right<K: Field>(alg: &FdAlgebra<K>, a: &[K::Elem], j: usize) -> Vec<K::Elem> {
    let k = alg.field();
    let mut out = alg.zero();
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (t, c) in alg.basis_product(i, j) {
            out[*t] = k.add(&out[*t], &k.mul(x, c));
        }
    }
    out
}

/// `b_j · a` for a basis element `b_j`.
fn mul_basis_left<K: Field>(alg: &FdAlgebra<K>, j: usize, a: &[K::Elem]) -> Vec<K::Elem> {
    let k = alg.field();
    let mut out = alg.zero();
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (t, c) in alg.basis_product(j, i) {
            out[*t] = k.add(&out[*t], &k.mul(x, c));
        }
    }
    out
}

/// Columns of the Hom-complex differential `D(g) = d_Y g - (-1)^s g d_X`
/// from degree `s` to degree `s + 1`, with both layouts.
fn differential<K: Field>(
    alg: &FdAlgebra<K>,
    pos: &[usize],
    x: &ProjComplex<K>,
    y: &ProjComplex<K>,
    s: i64,
) -> (Layout, Layout, Vec<Vec<K::Elem>>) {
    let k = alg.field();
    let src = Layout::new(alg, x, y, s);
    let dst = Layout::new(alg, x, y, s + 1);
    let sign = if s % 2 == 0 { k.from_i64(-1) } else { k.one() };
    let mut columns = Vec::with_capacity(src.total);
    for blk in &src.blocks {
        let n = blk.n;
        let dy = y.diff_ref(n + s);
        let dx = x.diff_ref(n - 1);
        for r in 0..blk.rows.len() {
            for c in 0..blk.cols.len() {
                for &b in &blk.entry_basis[r * blk.cols.len() + c] {
                    let mut col = vec![k.zero(); dst.total];
                    if let Some(dy) = dy {
                        for r2 in 0..dy.nrows() {
                            let prod = mul_basis_right(alg, dy.get(r2, r), b);
                            for (t, v) in prod.iter().enumerate() {
                                if !k.is_zero(v) {
                                    let i = dst.coord(n, r2, c, pos[t]).expect("target block exists");
                                    col[i] = k.add(&col[i], v);
                                }
                            }
                        }
                    }
                    if let Some(dx) = dx {
                        for c2 in 0..dx.ncols() {
                            let prod = mul_basis_left(alg, b, dx.get(c, c2));
                            for (t, v) in prod.iter().enumerate() {
                                if !k.is_zero(v) {
                                    let i = dst.coord(n - 1, r, c2, pos[t]).expect("target block exists");
                                    col[i] = k.add(&col[i], &k.mul(&sign, v));
                                }
                            }
                        }
                    }
                    columns.push(col);
                }
            }
        }
    }
    (src, dst, columns)
}

fn column_matrix<K: Field>(k: &K, nrows: usize, columns: Vec<Vec<K::Elem>>) -> Matrix<K::Elem> {
    let ncols = columns.len();
    if ncols == 0 {
        return Matrix::filled(nrows, 0, k.zero());
    }
    Matrix::from_rows(nrows, columns).transpose()
}

fn check_pair<K: Field>(x: &ProjComplex<K>, y: &ProjComplex<K>) -> Result<()> {
    if same_algebra(x.algebra(), y.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// `dim Hom_K(X, Y[s])`.
pub fn hom_dimension<K: Field>(x: &ProjComplex<K>, y: &ProjComplex<K>, s: i64) -> Result<usize> {
    check_pair(x, y)?;
    let alg = x.algebra();
    let k = alg.field();
    let pos = component_positions(alg);
    let (src, dst, cols) = differential(alg, &pos, x, y, s);
    if src.total == 0 {
        return Ok(0);
    }
    let rank_out = rank(k, &column_matrix(k, dst.total, cols));
    let (prev, _, prev_cols) = differential(alg, &pos, x, y, s - 1);
    let rank_in = if prev.total == 0 { 0 } else { rank(k, &column_matrix(k, src.total, prev_cols)) };
    Ok(src.total - rank_out - rank_in)
}

/// `Hom_K(X, Y[s])` with a chosen basis of cycle representatives.
#[derive(Clone, Debug)]
pub struct HomSpace<K: Field> {
    source: ProjComplex<K>,
    target: ProjComplex<K>,
    shift: i64,
    layout: Layout,
    positions: Vec<usize>,
    basis: Vec<ChainMap<K>>,
    /// Boundaries first (zero coordinates), then the representatives.
    reducer: Echelon<K>,
}

impl<K: Field> HomSpace<K> {
    pub fn new(x: &ProjComplex<K>, y: &ProjComplex<K>, s: i64) -> Result<Self> {
        Self::with_preferred(x, y, s, &[])
    }

    /// Like [`HomSpace::new`], trying the given cycles first when choosing
    /// representatives (e.g. the identity).
    pub fn with_preferred(x: &ProjComplex<K>, y: &ProjComplex<K>, s: i64, preferred: &[ChainMap<K>]) -> Result<Self> {
        check_pair(x, y)?;
        let alg = x.algebra().clone();
        let k = alg.field();
        let pos = component_positions(&alg);
        let (layout, dst, cols) = differential(&alg, &pos, x, y, s);
        let cycles = if layout.total == 0 { Vec::new() } else { kernel(k, &column_matrix(k, dst.total, cols)) };
        let (_, _, boundaries) = differential(&alg, &pos, x, y, s - 1);
        let mut bspace = Echelon::new(k.clone(), layout.total);
        for b in &boundaries {
            bspace.insert(b.clone());
        }
        let dim = cycles.len() - bspace.rank();
        let mut reps: Vec<Vec<K::Elem>> = Vec::with_capacity(dim);
        let mut probe = bspace.clone();
        let candidates = preferred
            .iter()
            .filter(|f| f.degree == s && f.is_chain_map(x, y))
            .map(|f| layout.to_coords(&alg, &pos, f))
            .chain(cycles);
        for v in candidates {
            if reps.len() == dim {
                break;
            }
            if probe.insert(v.clone()) {
                reps.push(v);
            }
        }
        let mut reducer = Echelon::with_coordinates(k.clone(), layout.total, dim);
        for b in boundaries {
            reducer.insert(b);
        }
        for (i, v) in reps.iter().enumerate() {
            let mut coords = vec![k.zero(); dim];
            coords[i] = k.one();
            reducer.insert_with(v.clone(), coords);
        }
        let basis = reps.iter().map(|v| layout.from_coords(&alg, v)).collect();
        Ok(HomSpace { source: x.clone(), target: y.clone(), shift: s, layout, positions: pos, basis, reducer })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn source(&self) -> &ProjComplex<K> {
        &self.source
    }

    pub fn target(&self) -> &ProjComplex<K> {
        &self.target
    }

    pub fn basis(&self) -> &[ChainMap<K>] {
        &self.basis
    }

    /// Coordinates of the class of a cycle, or `None` if `f` is not a cycle
    /// of this degree.
    pub fn express(&self, f: &ChainMap<K>) -> Option<Vec<K::Elem>> {
        if f.degree != self.shift {
            return None;
        }
        let alg = self.source.algebra();
        let v = self.layout.to_coords(alg, &self.positions, f);
        self.reducer.express(&v)
    }

    pub fn is_null_homotopic(&self, f: &ChainMap<K>) -> bool {
        let k = self.source.algebra().field();
        self.express(f).is_some_and(|c| c.iter().all(|x| k.is_zero(x)))
    }

    pub fn combine(&self, coeffs: &[K::Elem]) -> ChainMap<K> {
        let alg = self.source.algebra();
        let mut out = ChainMap::zero(&self.source, &self.target, self.shift);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !alg.field().is_zero(c) {
                out = out.add(alg, &b.scale(alg, c));
            }
        }
        out
    }
}
