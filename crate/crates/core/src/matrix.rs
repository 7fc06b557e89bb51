//! Dense matrices over exact scalars, plus rational Gaussian elimination:
//! rank, deterministic nullspace bases, row-space bases, and span membership.
//!
//! The elimination engine keeps a reduced row echelon form incrementally and
//! stores rows sparsely; the cocycle systems it is fed (up to d^4 equations in
//! d^3 unknowns) are sparse, and full RREF is unique for a given row space, so
//! every derived basis is deterministic regardless of insertion order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Ring operations every matrix scalar must support.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A dense row-major matrix with entries in one scalar type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    /// Panics on a dimension mismatch.
    pub fn mul_matrix(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).clone();
                    *out.at_mut(r, c) = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Sum of the diagonal. Panics unless square.
    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).fold(T::zero(), |acc, i| acc + self.at(i, i).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// True iff `g * ginv` and `ginv * g` are both the identity.
pub fn verify_inverse_pair<T: Scalar>(g: &Matrix<T>, ginv: &Matrix<T>) -> bool {
    g.rows() == g.cols()
        && ginv.rows() == ginv.cols()
        && g.rows() == ginv.rows()
        && g.mul_matrix(ginv).is_identity()
        && ginv.mul_matrix(g).is_identity()
}

/// A sparse row: `(column, nonzero coefficient)` pairs sorted by column.
pub type SparseRow = Vec<(usize, Rational)>;

/// Incremental reduced-row-echelon accumulator over the rationals.
///
/// Rows may be inserted in any order; the final state is the unique RREF of
/// the span of everything inserted. Pivot rows are normalized to a leading 1
/// and pivot columns are eliminated from all other rows as soon as they
/// appear, so every stored row has entries only at its own pivot column and
/// at free columns.
pub struct RowReducer {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_of_col: BTreeMap<usize, usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivot_of_col: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces a row against the current pivots; the result contains no pivot
    /// columns. Empty output means the row was in the current row space.
    pub fn reduce(&self, row: SparseRow) -> SparseRow {
        let mut work: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(c < self.cols);
            if !v.is_zero() {
                let entry = work.entry(c).or_insert_with(Rational::zero);
                *entry += v;
            }
        }
        let mut out: SparseRow = Vec::new();
        // Pivot rows only touch free columns beyond their pivot, so a single
        // ascending sweep clears every pivot column.
        while let Some((c, coeff)) = work.pop_first() {
            if coeff.is_zero() {
                continue;
            }
            match self.pivot_of_col.get(&c) {
                Some(&r) => {
                    for (cc, v) in self.rows[r].iter().skip(1) {
                        let entry = work.entry(*cc).or_insert_with(Rational::zero);
                        *entry -= &coeff * v;
                    }
                }
                None => out.push((c, coeff)),
            }
        }
        out
    }

    /// Inserts a row, returning `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        // normalize to leading 1
        let lead = reduced[0].1.clone();
        let pivot_col = reduced[0].0;
        if !lead.is_one() {
            for (_, v) in reduced.iter_mut() {
                *v /= &lead;
            }
        }
        // eliminate the new pivot column from every existing row
        for row in self.rows.iter_mut() {
            let Ok(pos) = row.binary_search_by_key(&pivot_col, |(c, _)| *c) else {
                continue;
            };
            let factor = row[pos].1.clone();
            let mut merged: SparseRow = Vec::with_capacity(row.len() + reduced.len());
            let (mut a, mut b) = (row.iter(), reduced.iter());
            let (mut na, mut nb) = (a.next(), b.next());
            while na.is_some() || nb.is_some() {
                match (na, nb) {
                    (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                        if ca < cb {
                            merged.push((ca, va.clone()));
                            na = a.next();
                        } else if cb < ca {
                            let v = -(&factor * vb);
                            if !v.is_zero() {
                                merged.push((cb, v));
                            }
                            nb = b.next();
                        } else {
                            let v = va - &factor * vb;
                            if !v.is_zero() {
                                merged.push((ca, v));
                            }
                            na = a.next();
                            nb = b.next();
                        }
                    }
                    (Some(&(ca, ref va)), None) => {
                        merged.push((ca, va.clone()));
                        na = a.next();
                    }
                    (None, Some(&(cb, ref vb))) => {
                        let v = -(&factor * vb);
                        if !v.is_zero() {
                            merged.push((cb, v));
                        }
                        nb = b.next();
                    }
                    (None, None) => unreachable!(),
                }
            }
            *row = merged;
        }
        self.pivot_of_col.insert(pivot_col, self.rows.len());
        self.rows.push(reduced);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// The RREF rows as dense vectors, ordered by pivot column: the canonical
    /// basis of the inserted row space.
    pub fn basis_rows(&self) -> Vec<Vec<Rational>> {
        let mut order: Vec<(usize, usize)> =
            self.pivot_of_col.iter().map(|(c, r)| (*c, *r)).collect();
        order.sort_unstable();
        order
            .into_iter()
            .map(|(_, r)| {
                let mut dense = vec![Rational::zero(); self.cols];
                for (c, v) in &self.rows[r] {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    /// Basis of `{v : row . v = 0 for every inserted row}` in echelon-complement
    /// form: one vector per free column in ascending order, with a 1 at its
    /// free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let mut basis = Vec::with_capacity(self.cols - self.rows.len());
        for free in 0..self.cols {
            if self.pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (&pc, &r) in &self.pivot_of_col {
                if let Ok(pos) = self.rows[r].binary_search_by_key(&free, |(c, _)| *c) {
                    v[pc] = -self.rows[r][pos].1.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

pub fn dense_to_sparse(row: &[Rational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

fn reducer_from_rows<'a>(rows: impl Iterator<Item = &'a [Rational]>, cols: usize) -> RowReducer {
    let mut red = RowReducer::new(cols);
    for row in rows {
        red.insert(dense_to_sparse(row));
    }
    red
}

impl Matrix<Rational> {
    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        reducer_from_rows((0..self.rows).map(|r| self.row(r)), self.cols).rank()
    }

    /// Deterministic basis of `{v : self . v = 0}`; see
    /// [`RowReducer::nullspace_basis`] for the normal form.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        reducer_from_rows((0..self.rows).map(|r| self.row(r)), self.cols).nullspace_basis()
    }

    /// Canonical (RREF) basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<Rational>> {
        reducer_from_rows((0..self.rows).map(|r| self.row(r)), self.cols).basis_rows()
    }
}

/// True iff `v` lies in the rational span of `basis`. All vectors must share
/// one length.
pub fn in_span(v: &[Rational], basis: &[Vec<Rational>]) -> bool {
    let cols = v.len();
    assert!(basis.iter().all(|b| b.len() == cols), "length mismatch");
    let red = reducer_from_rows(basis.iter().map(|b| b.as_slice()), cols);
    red.contains(dense_to_sparse(v))
}

/// Canonical basis of the span of `vectors`.
pub fn span_basis(vectors: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    reducer_from_rows(vectors.iter().map(|v| v.as_slice()), len).basis_rows()
}
