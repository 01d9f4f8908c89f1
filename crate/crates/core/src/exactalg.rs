//! Exact integer matrix algorithms: Smith normal form with transformation
//! matrices, integer solving over presented groups, and cokernels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. All rows must have the same length.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Builds an `rows x cols` matrix from its columns.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = c * self.get(src, j);
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = c * self.get(i, src);
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -core::mem::take(&mut self.data[idx]);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + j;
            self.data[idx] = -core::mem::take(&mut self.data[idx]);
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` in Smith form.
///
/// `u_inv` is the inverse of `u`, kept because cokernel lifts need it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries of `d`, `min(rows, cols)` of them.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|v| !v.is_zero()).count()
    }
}

/// Position of the entry of smallest nonzero absolute value in the
/// submatrix starting at `(t, t)`; ties go to the first in row-major order.
fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                best = Some(((i, j), abs));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form by elementary row and column operations.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (n, m) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut u_inv = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(m);

    for t in 0..n.min(m) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, t) else {
                return SnfResult { u, d, v, u_inv };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d.get(t, t).clone();
            let mut cleared = true;
            for i in t + 1..n {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                u_inv.add_col_multiple(t, i, &-&q);
                cleared &= d.get(i, t).is_zero();
            }
            for j in t + 1..m {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                cleared &= d.get(t, j).is_zero();
            }
            if !cleared {
                continue;
            }

            // The pivot must divide the whole remaining block.
            let offender = (t + 1..n).find(|&i| (t + 1..m).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                    u_inv.add_col_multiple(i, t, &-one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    SnfResult { u, d, v, u_inv }
}

fn diag_orders(orders: &[u64]) -> IntMatrix {
    IntMatrix::from_fn(orders.len(), orders.len(), |i, j| if i == j { BigInt::from(orders[i]) } else { BigInt::zero() })
}

fn check_rows(orders: &[u64], a: &IntMatrix) -> Result<()> {
    if a.rows() != orders.len() {
        return Err(Error::DimensionMismatch { expected: orders.len(), found: a.rows() });
    }
    Ok(())
}

/// Finds an integer vector `x` with `a x = rhs` in `Z/orders[0] + ... `,
/// i.e. row `i` holds modulo `orders[i]`. Returns `None` when no solution
/// exists. Every order must be positive.
pub fn solve_presented(orders: &[u64], a: &IntMatrix, rhs: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    check_rows(orders, a)?;
    if rhs.len() != orders.len() {
        return Err(Error::DimensionMismatch { expected: orders.len(), found: rhs.len() });
    }
    let block = a.hstack(&diag_orders(orders))?;
    let snf = smith_normal_form(&block);
    let y = snf.u.mul_vec(rhs);
    let diag = snf.diagonal();
    let mut z = vec![BigInt::zero(); block.cols()];
    for (i, yi) in y.iter().enumerate() {
        let di = &diag[i];
        if di.is_zero() {
            if !yi.is_zero() {
                return Ok(None);
            }
        } else if yi.is_multiple_of(di) {
            z[i] = yi / di;
        } else {
            return Ok(None);
        }
    }
    let w = snf.v.mul_vec(&z);
    Ok(Some(w[..a.cols()].to_vec()))
}

/// Generators of `{ x : a x = 0 }` modulo `orders` (row-wise), as integer
/// vectors. The returned set generates the solution lattice, which contains
/// every multiple of the column orders.
pub fn kernel_presented(orders: &[u64], a: &IntMatrix) -> Result<Vec<Vec<BigInt>>> {
    check_rows(orders, a)?;
    let block = a.hstack(&diag_orders(orders))?;
    let snf = smith_normal_form(&block);
    let rank = snf.rank();
    Ok((rank..block.cols()).map(|j| snf.v.column(j)[..a.cols()].to_vec()).collect())
}

/// A finite quotient `(Z/o_1 + ... + Z/o_n) / <relations>` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokerPresentation {
    ambient_orders: Vec<u64>,
    /// Invariant factors, each `>= 2`, each dividing the next.
    pub invariant_factors: Vec<u64>,
    /// `projection[i]` maps ambient coordinates to quotient coordinate `i`;
    /// entries are reduced modulo `invariant_factors[i]`.
    pub projection: Vec<Vec<u64>>,
    /// `lift[i]` is an ambient representative of the `i`-th quotient
    /// generator, reduced modulo the ambient orders.
    pub lift: Vec<Vec<u64>>,
}

impl CokerPresentation {
    pub fn ambient_orders(&self) -> &[u64] {
        &self.ambient_orders
    }

    pub fn cardinality(&self) -> u128 {
        self.invariant_factors.iter().map(|&f| f as u128).product()
    }

    /// Image of an ambient coordinate vector in the quotient.
    pub fn project(&self, ambient: &[u64]) -> Vec<u64> {
        debug_assert_eq!(ambient.len(), self.ambient_orders.len());
        self.projection
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, &f)| {
                let f = f as u128;
                row.iter().zip(ambient).fold(0u128, |acc, (&p, &a)| (acc + (p as u128) * ((a as u128) % f)) % f) as u64
            })
            .collect()
    }

    /// An ambient representative of a quotient element.
    pub fn lift(&self, coords: &[u64]) -> Vec<u64> {
        debug_assert_eq!(coords.len(), self.invariant_factors.len());
        self.ambient_orders
            .iter()
            .enumerate()
            .map(|(j, &o)| {
                let o = o as u128;
                self.lift
                    .iter()
                    .zip(coords)
                    .fold(0u128, |acc, (col, &c)| (acc + (col[j] as u128) * ((c as u128) % o)) % o)
                    as u64
            })
            .collect()
    }
}

fn to_u64(v: &BigInt) -> Result<u64> {
    v.to_u64().ok_or(Error::Overflow)
}

fn reduce(v: &BigInt, m: u64) -> u64 {
    // mod_floor with a positive modulus lands in [0, m).
    v.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits the modulus")
}

/// Quotient of the ambient group `Z/o_1 + ... + Z/o_n` by the subgroup
/// generated by the columns of `relations` (one row per ambient generator).
pub fn cokernel(ambient_orders: &[u64], relations: &IntMatrix) -> Result<CokerPresentation> {
    check_rows(ambient_orders, relations)?;
    let block = diag_orders(ambient_orders).hstack(relations)?;
    let snf = smith_normal_form(&block);
    let diag = snf.diagonal();

    let mut invariant_factors = Vec::new();
    let mut projection = Vec::new();
    let mut lift = Vec::new();
    for (i, di) in diag.iter().enumerate() {
        if di.is_zero() {
            return Err(Error::InfiniteQuotient);
        }
        if di.is_one() {
            continue;
        }
        let f = to_u64(di)?;
        invariant_factors.push(f);
        projection.push(snf.u.row(i).iter().map(|v| reduce(v, f)).collect());
        lift.push(snf.u_inv.column(i).iter().zip(ambient_orders).map(|(v, &o)| reduce(v, o)).collect());
    }
    Ok(CokerPresentation { ambient_orders: ambient_orders.to_vec(), invariant_factors, projection, lift })
}
