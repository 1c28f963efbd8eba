//! Dense matrices over `GF(p^e)` and sparse matrices over the prime field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct MatrixF {
    ctx: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl MatrixF {
    pub fn zeros(ctx: &Arc<FieldCtx>, rows: usize, cols: usize) -> MatrixF {
        MatrixF {
            ctx: Arc::clone(ctx),
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &Arc<FieldCtx>, n: usize) -> MatrixF {
        let mut m = MatrixF::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = ctx.one();
        }
        m
    }

    pub fn from_fn(
        ctx: &Arc<FieldCtx>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> MatrixF {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatrixF {
            ctx: Arc::clone(ctx),
            rows,
            cols,
            data,
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    fn check_same_shape(&self, other: &MatrixF) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MatrixF) -> Result<MatrixF> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = self.ctx.add(x, y);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MatrixF) -> Result<MatrixF> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = self.ctx.sub(x, y);
        }
        Ok(out)
    }

    pub fn scale(&self, f: &FieldElement) -> MatrixF {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = self.ctx.mul(x, f);
        }
        out
    }

    pub fn mul(&self, other: &MatrixF) -> Result<MatrixF> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = MatrixF::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                self.ctx.axpy(dst, &a, other.row(k));
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> MatrixF {
        MatrixF::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Rank by Gaussian elimination to row-echelon form.
    pub fn rank(&self) -> usize {
        let ctx = &self.ctx;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if piv != rank {
                for j in col..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = ctx.inv(&a[rank * cols + col]).expect("pivot is nonzero");
            let pivot_row: Vec<FieldElement> = a[rank * cols + col..(rank + 1) * cols]
                .iter()
                .map(|x| ctx.mul(x, &inv))
                .collect();
            for r in rank + 1..rows {
                let f = a[r * cols + col];
                if f.is_zero() {
                    continue;
                }
                let f = ctx.neg(&f);
                ctx.axpy(&mut a[r * cols + col..(r + 1) * cols], &f, &pivot_row);
            }
            rank += 1;
        }
        rank
    }
}

impl PartialEq for MatrixF {
    fn eq(&self, other: &MatrixF) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.ctx.p() == other.ctx.p()
            && self.ctx.modulus() == other.ctx.modulus()
            && self.data == other.data
    }
}

impl fmt::Debug for MatrixF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "MatrixF {}x{} over GF({}^{})",
            self.rows,
            self.cols,
            self.ctx.p(),
            self.ctx.e()
        )?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Square sparse matrix over `GF(p)`, stored by columns.
///
/// Column `j` lists the nonzero entries `(i, a_ij)` of the image of the
/// `j`-th basis vector, sorted by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMat {
    p: u32,
    n: usize,
    cols: Vec<Vec<(u32, u32)>>,
}

impl SparseMat {
    pub fn identity(p: u32, n: usize) -> SparseMat {
        SparseMat {
            p,
            n,
            cols: (0..n).map(|j| vec![(j as u32, 1 % p)]).collect(),
        }
    }

    /// Builds from per-column entry lists; values are reduced mod `p`,
    /// duplicate rows are summed and zeros dropped.
    pub fn from_columns(p: u32, n: usize, cols: Vec<Vec<(u32, i64)>>) -> Result<SparseMat> {
        if cols.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} columns for a {n}x{n} matrix",
                cols.len()
            )));
        }
        let cols = cols
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|&(i, _)| i);
                let mut out: Vec<(u32, u32)> = Vec::with_capacity(col.len());
                for (i, v) in col {
                    let v = v.rem_euclid(p as i64) as u32;
                    match out.last_mut() {
                        Some(last) if last.0 == i => last.1 = (last.1 + v) % p,
                        _ => out.push((i, v)),
                    }
                }
                out.retain(|&(_, v)| v != 0);
                out
            })
            .collect::<Vec<_>>();
        if cols.iter().flatten().any(|&(i, _)| i as usize >= n) {
            return Err(Error::DimensionMismatch(format!(
                "row index out of range for n = {n}"
            )));
        }
        Ok(SparseMat { p, n, cols })
    }

    pub fn from_dense(p: u32, dense: &[Vec<u32>]) -> Result<SparseMat> {
        let n = dense.len();
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&i| !dense[i][j].is_multiple_of(p))
                    .map(|i| (i as u32, dense[i][j] as i64))
                    .collect()
            })
            .collect();
        SparseMat::from_columns(p, n, cols)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn column(&self, j: usize) -> &[(u32, u32)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cols[j]
            .binary_search_by_key(&(i as u32), |&(r, _)| r)
            .map_or(0, |k| self.cols[j][k].1)
    }

    pub fn to_dense_u32(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0; self.n]; self.n];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i as usize][j] = v;
            }
        }
        out
    }

    /// Embeds into a dense matrix over an extension of `GF(p)`.
    pub fn to_dense(&self, ctx: &Arc<FieldCtx>) -> MatrixF {
        let mut m = MatrixF::zeros(ctx, self.n, self.n);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m.set(i as usize, j, ctx.from_int(v as i64));
            }
        }
        m
    }

    /// `self · other`.
    pub fn compose(&self, other: &SparseMat) -> SparseMat {
        let p = self.p as u64;
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: Vec<(u32, i64)> = Vec::new();
                for &(k, v) in col {
                    for &(i, w) in &self.cols[k as usize] {
                        acc.push((i, ((v as u64 * w as u64) % p) as i64));
                    }
                }
                acc
            })
            .collect();
        SparseMat::from_columns(self.p, self.n, cols).expect("same dimension")
    }

    pub fn pow(&self, k: usize) -> SparseMat {
        (0..k).fold(SparseMat::identity(self.p, self.n), |acc, _| {
            self.compose(&acc)
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == SparseMat::identity(self.p, self.n)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SparseMat) -> SparseMat {
        let shift = self.n as u32;
        let mut cols = self.cols.clone();
        cols.extend(
            other
                .cols
                .iter()
                .map(|col| col.iter().map(|&(i, v)| (i + shift, v)).collect()),
        );
        SparseMat {
            p: self.p,
            n: self.n + other.n,
            cols,
        }
    }

    /// Restriction to the coordinates in `members`, which must span an
    /// invariant subspace.
    pub(crate) fn restrict(&self, members: &[usize], local: &[u32]) -> SparseMat {
        let cols = members
            .iter()
            .map(|&j| {
                self.cols[j]
                    .iter()
                    .map(|&(i, v)| (local[i as usize], v))
                    .collect::<Vec<_>>()
            })
            .map(|mut col| {
                col.sort_by_key(|&(i, _)| i);
                col
            })
            .collect();
        SparseMat {
            p: self.p,
            n: members.len(),
            cols,
        }
    }
}

/// Gaussian elimination over `GF(p)` on rows of `a` (each a dense vector).
/// Returns the pivot column of each independent row, in elimination order.
pub(crate) fn row_reduce_mod_p(a: &mut [Vec<u32>], p: u32) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: u32| (1..p).find(|&y| x * y % p == 1).expect("nonzero");
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let iv = inv(a[rank][col]);
        for x in a[rank][col..].iter_mut() {
            *x = *x * iv % p;
        }
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let f = p - f;
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + f * y) % p;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Inverse of a square matrix over `GF(p)`, if it exists.
pub(crate) fn inverse_mod_p(m: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut aug: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let pivots = row_reduce_mod_p(&mut aug, p);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    // back substitution
    for col in (0..n).rev() {
        let (head, tail) = aug.split_at_mut(col);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let f = p - f;
            for (x, &y) in row.iter_mut().zip(pivot_row) {
                *x = (*x + f * y) % p;
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant over `GF(p)`.
pub(crate) fn det_mod_p(m: &[Vec<u32>], p: u32) -> u32 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = 1u32;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let iv = (1..p).find(|&y| a[col][col] * y % p == 1).expect("nonzero");
        for r in col + 1..n {
            let f = a[r][col] * iv % p;
            if f == 0 {
                continue;
            }
            for c in col..n {
                a[r][c] = (a[r][c] + (p - f) * a[col][c]) % p;
            }
        }
    }
    det
}
