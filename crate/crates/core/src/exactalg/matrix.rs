use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::LPoly;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::InvalidArgument(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Result<Self> {
        Ok(IntMatrix::from_rows(rows, columns)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_columns(&self) -> Vec<Vec<i64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> IntMatrix {
        let mut b = IntMatrix::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                b[(i - r0, j - c0)] = self[(i, j)];
            }
        }
        b
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == IntMatrix::identity(self.rows)
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let s: i128 = (0..self.cols)
                    .map(|k| self[(i, k)] as i128 * rhs[(k, j)] as i128)
                    .sum();
                out[(i, j)] = narrow(s)?;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::InvalidArgument(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        (0..self.rows)
            .map(|i| {
                narrow(
                    self.row(i)
                        .iter()
                        .zip(v)
                        .map(|(&a, &b)| a as i128 * b as i128)
                        .sum(),
                )
            })
            .collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Row-style Hermite normal form. Returns `(H, U)` with `U` unimodular
    /// and `U·A = H`; `H` is in row echelon form with positive pivots and the
    /// entries above each pivot reduced into `[0, pivot)`. Zero rows of `H`
    /// come last.
    pub fn hermite_normal_form(&self) -> Result<(IntMatrix, IntMatrix)> {
        let mut h = Work::from(self);
        let mut u = Work::from(&IntMatrix::identity(self.rows));
        let mut pivot_row = 0;
        for j in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Euclid on column j below pivot_row
            loop {
                let best = (pivot_row..self.rows)
                    .filter(|&i| h.at(i, j) != 0)
                    .min_by_key(|&i| h.at(i, j).unsigned_abs());
                let Some(best) = best else { break };
                h.swap(best, pivot_row);
                u.swap(best, pivot_row);
                let p = h.at(pivot_row, j);
                let mut done = true;
                for i in pivot_row + 1..self.rows {
                    let q = Integer::div_floor(&h.at(i, j), &p);
                    if q != 0 {
                        h.axpy(i, pivot_row, q)?;
                        u.axpy(i, pivot_row, q)?;
                    }
                    if h.at(i, j) != 0 {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            let p = h.at(pivot_row, j);
            if p == 0 {
                continue;
            }
            if p < 0 {
                h.negate(pivot_row);
                u.negate(pivot_row);
            }
            let p = h.at(pivot_row, j);
            for i in 0..pivot_row {
                let q = Integer::div_floor(&h.at(i, j), &p);
                if q != 0 {
                    h.axpy(i, pivot_row, q)?;
                    u.axpy(i, pivot_row, q)?;
                }
            }
            pivot_row += 1;
        }
        Ok((h.narrow()?, u.narrow()?))
    }

    /// Smith normal form: `(U, D, V)` with `U`, `V` unimodular, `U·A·V = D`
    /// diagonal, nonnegative, and each diagonal entry dividing the next.
    pub fn smith_normal_form(&self) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
        let (r, c) = (self.rows, self.cols);
        let mut a: Vec<Vec<i128>> = self
            .to_rows()
            .into_iter()
            .map(|row| row.into_iter().map(i128::from).collect())
            .collect();
        let ident = |n: usize| -> Vec<Vec<i128>> {
            (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
        };
        let (mut u, mut v) = (ident(r), ident(c));
        let overflow = || Error::Overflow("Smith normal form");
        // row_i -= q·row_t on a and u
        let row_op = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, i: usize, t: usize, q: i128| -> Result<()> {
            for k in 0..a[0].len() {
                a[i][k] = q.checked_mul(a[t][k]).and_then(|x| a[i][k].checked_sub(x)).ok_or_else(overflow)?;
            }
            for k in 0..u[0].len() {
                u[i][k] = q.checked_mul(u[t][k]).and_then(|x| u[i][k].checked_sub(x)).ok_or_else(overflow)?;
            }
            Ok(())
        };
        // col_j -= q·col_t on a and v
        let col_op = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, j: usize, t: usize, q: i128| -> Result<()> {
            for row in a.iter_mut() {
                row[j] = q.checked_mul(row[t]).and_then(|x| row[j].checked_sub(x)).ok_or_else(overflow)?;
            }
            for row in v.iter_mut() {
                row[j] = q.checked_mul(row[t]).and_then(|x| row[j].checked_sub(x)).ok_or_else(overflow)?;
            }
            Ok(())
        };
        for t in 0..r.min(c) {
            loop {
                let pivot = (t..r)
                    .flat_map(|i| (t..c).map(move |j| (i, j)))
                    .filter(|&(i, j)| a[i][j] != 0)
                    .min_by_key(|&(i, j)| a[i][j].unsigned_abs());
                let Some((pi, pj)) = pivot else { break };
                a.swap(t, pi);
                u.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
                let p = a[t][t];
                let mut clean = true;
                for i in t + 1..r {
                    let q = Integer::div_floor(&a[i][t], &p);
                    row_op(&mut a, &mut u, i, t, q)?;
                    clean &= a[i][t] == 0;
                }
                for j in t + 1..c {
                    let q = Integer::div_floor(&a[t][j], &p);
                    col_op(&mut a, &mut v, j, t, q)?;
                    clean &= a[t][j] == 0;
                }
                if !clean {
                    continue;
                }
                // divisibility: fold an offending row into the pivot row
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => row_op(&mut a, &mut u, t, i, -1)?,
                    None => break,
                }
            }
            if a[t][t] < 0 {
                for k in 0..c {
                    a[t][k] = -a[t][k];
                }
                for k in 0..r {
                    u[t][k] = -u[t][k];
                }
            }
        }
        let to_matrix = |m: Vec<Vec<i128>>, cols: usize| -> Result<IntMatrix> {
            let data = m.into_iter().flatten().map(narrow).collect::<Result<Vec<_>>>()?;
            IntMatrix::new(data.len() / cols.max(1), cols, data)
        };
        Ok((to_matrix(u, r)?, to_matrix(a, c)?, to_matrix(v, c)?))
    }

    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        let mut rank = 0;
        for j in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !m[i][j].is_zero()) else {
                continue;
            };
            m.swap(p, rank);
            for i in rank + 1..self.rows {
                if m[i][j].is_zero() {
                    continue;
                }
                let (a, b) = (m[rank][j].clone(), m[i][j].clone());
                for k in j..self.cols {
                    m[i][k] = &m[i][k] * &a - &m[rank][k] * &b;
                }
                let g = m[i].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                if !g.is_zero() && !g.is_one() {
                    m[i].iter_mut().for_each(|x| *x /= &g);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        let mut m: Vec<Vec<BigInt>> = self
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        Ok(bareiss(&mut m, |a, b| Some(a / b)))
    }

    /// A basis of the integer kernel `{x ∈ Z^cols : A·x = 0}`.
    pub fn kernel(&self) -> Result<Vec<Vec<i64>>> {
        let (h, u) = self.transpose().hermite_normal_form()?;
        Ok((0..h.rows)
            .filter(|&i| h.row(i).iter().all(|&x| x == 0))
            .map(|i| u.row(i).to_vec())
            .collect())
    }

    /// Solves `A·x = b` over the rationals for square nonsingular `A`.
    pub fn solve_rational(&self, b: &[i64]) -> Option<Vec<BigRational>> {
        if !self.is_square() || b.len() != self.rows {
            return None;
        }
        let n = self.rows;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .chain(std::iter::once(&b[i]))
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        for j in 0..n {
            let p = (j..n).find(|&i| !m[i][j].is_zero())?;
            m.swap(p, j);
            let pivot = m[j][j].clone();
            m[j].iter_mut().for_each(|x| *x /= &pivot);
            for i in 0..n {
                if i != j && !m[i][j].is_zero() {
                    let f = m[i][j].clone();
                    for k in j..=n {
                        let t = &m[j][k] * &f;
                        m[i][k] -= t;
                    }
                }
            }
        }
        Some(m.into_iter().map(|r| r[n].clone()).collect())
    }

    /// Inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("inverse of a non-square matrix".into()));
        }
        let (h, u) = self.hermite_normal_form()?;
        if !h.is_identity() {
            return Err(Error::InvalidArgument(format!("matrix is not unimodular:\n{self}")));
        }
        Ok(u)
    }

    /// `det(L·I − A)`, computed over `Z[L]` without division by scalars.
    pub fn char_poly(&self) -> Result<LPoly> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m: Vec<Vec<LPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = LPoly::constant(-self[(i, j)]);
                        if i == j {
                            c + LPoly::var()
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(bareiss(&mut m, |a, b| a.div_exact(b)))
    }
}

/// Fraction-free Gaussian elimination; returns the determinant. `div` must
/// perform exact division (Sylvester's identity guarantees it divides).
fn bareiss<T>(m: &mut [Vec<T>], div: impl Fn(&T, &T) -> Option<T>) -> T
where
    T: Clone + Zero + One + PartialEq + std::ops::Neg<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T> + std::ops::Sub<&'a T, Output = T>,
{
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = !sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = div(&num, &prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Basis of the saturated lattice `(Q-span of vectors) ∩ Z^d`.
pub fn saturated_span(d: usize, vectors: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let v = IntMatrix::from_rows(d, vectors)?;
    let perp = v.kernel()?;
    if perp.is_empty() {
        return Ok(IntMatrix::identity(d).to_rows());
    }
    IntMatrix::from_rows(d, &perp)?.kernel()
}

/// A saturated sublattice of `Z^d` with a chosen basis, together with a
/// unimodular `U` such that `U·B = [I; 0]`. Rows `k..d` of `U` form a basis
/// of the integer annihilator of the sublattice.
#[derive(Clone, Debug)]
pub struct SublatticeBasis {
    ambient: usize,
    basis: Vec<Vec<i64>>,
    u: IntMatrix,
}

impl SublatticeBasis {
    /// `basis` must be a basis of a saturated sublattice.
    pub fn new(ambient: usize, basis: Vec<Vec<i64>>) -> Result<Self> {
        let k = basis.len();
        if k == 0 {
            return Ok(SublatticeBasis {
                ambient,
                basis,
                u: IntMatrix::identity(ambient),
            });
        }
        let b = IntMatrix::from_columns(ambient, &basis)?;
        let (h, u) = b.hermite_normal_form()?;
        let expected = IntMatrix::identity(k).direct_sum(&IntMatrix::zeros(ambient - k, 0));
        if h != expected {
            return Err(Error::InvalidArgument(
                "sublattice basis is not a basis of a saturated lattice".into(),
            ));
        }
        Ok(SublatticeBasis { ambient, basis, u })
    }

    /// The saturation of the span of `vectors`.
    pub fn from_span(ambient: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        SublatticeBasis::new(ambient, saturated_span(ambient, vectors)?)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        let w = self.u.mul_vec(v)?;
        let k = self.rank();
        Ok(w[k..].iter().all(|&x| x == 0).then(|| w[..k].to_vec()))
    }

    /// `Σ x_i b_i`.
    pub fn embed(&self, x: &[i64]) -> Result<Vec<i64>> {
        let mut out = vec![0i128; self.ambient];
        for (xi, b) in x.iter().zip(&self.basis) {
            for (o, &bj) in out.iter_mut().zip(b) {
                *o += *xi as i128 * bj as i128;
            }
        }
        out.into_iter().map(narrow).collect()
    }

    /// Pulls a functional on the sublattice (in basis coordinates) back to
    /// a functional on `Z^d` that agrees with it on the sublattice.
    pub fn extend_functional(&self, y: &[i64]) -> Result<Vec<i64>> {
        let k = self.rank();
        (0..self.ambient)
            .map(|j| narrow((0..k).map(|i| y[i] as i128 * self.u[(i, j)] as i128).sum()))
            .collect()
    }

    /// Basis of the integer functionals vanishing on the sublattice.
    pub fn annihilator(&self) -> Vec<Vec<i64>> {
        (self.rank()..self.ambient)
            .map(|i| self.u.row(i).to_vec())
            .collect()
    }

    /// Matrix of `a` in a basis of `Z^d` that starts with the sublattice
    /// basis. The block below the first `k` columns vanishes iff the
    /// sublattice is `a`-stable.
    pub fn adapted(&self, a: &IntMatrix) -> Result<IntMatrix> {
        let d = self.ambient;
        if a.rows() != d || a.cols() != d {
            return Err(Error::InvalidArgument(format!(
                "{}x{} matrix on a rank {d} lattice",
                a.rows(),
                a.cols()
            )));
        }
        let u_inv = self.u.unimodular_inverse()?;
        self.u.checked_mul(a)?.checked_mul(&u_inv)
    }

    /// Splits `a` into its restriction to the sublattice and the induced
    /// map on the quotient. Fails if the sublattice is not `a`-stable.
    pub fn split(&self, a: &IntMatrix) -> Result<SplitAction> {
        let (d, k) = (self.ambient, self.rank());
        let conj = self.adapted(a)?;
        if !conj.block(k, d, 0, k).is_zero() {
            return Err(Error::NotInvariant);
        }
        Ok(SplitAction {
            restricted: conj.block(0, k, 0, k),
            quotient: conj.block(k, d, k, d),
        })
    }
}

/// Matrices of a map on a stable sublattice and on the quotient lattice.
#[derive(Clone, Debug)]
pub struct SplitAction {
    pub restricted: IntMatrix,
    pub quotient: IntMatrix,
}

/// Restriction and quotient of `a` with respect to the saturation of the
/// span of `vectors`.
pub fn split_action(a: &IntMatrix, vectors: &[Vec<i64>]) -> Result<SplitAction> {
    SublatticeBasis::from_span(a.rows(), vectors)?.split(a)
}

/// Action of `A` on `Z^d / sublattice`.
pub fn quotient_lattice_action(a: &IntMatrix, basis: &[Vec<i64>]) -> Result<IntMatrix> {
    Ok(split_action(a, basis)?.quotient)
}

/// Action of `A` on the saturation of a stable sublattice.
pub fn restricted_action(a: &IntMatrix, basis: &[Vec<i64>]) -> Result<IntMatrix> {
    Ok(split_action(a, basis)?.restricted)
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("integer matrix entry exceeds i64"))
}

struct Work {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl Work {
    fn from(m: &IntMatrix) -> Self {
        Work {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|&x| x as i128).collect(),
        }
    }

    fn at(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn negate(&mut self, i: usize) {
        for j in 0..self.cols {
            self.data[i * self.cols + j] = -self.data[i * self.cols + j];
        }
    }

    /// `row[dst] -= q · row[src]`
    fn axpy(&mut self, dst: usize, src: usize, q: i128) -> Result<()> {
        const OVERFLOW: Error = Error::Overflow("Hermite normal form intermediate");
        for j in 0..self.cols {
            let t = self.data[src * self.cols + j].checked_mul(q).ok_or(OVERFLOW)?;
            let d = &mut self.data[dst * self.cols + j];
            *d = d.checked_sub(t).ok_or(OVERFLOW)?;
        }
        Ok(())
    }

    fn narrow(self) -> Result<IntMatrix> {
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.into_iter().map(narrow).collect::<Result<_>>()?,
        })
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on dimension mismatch or overflow; see [`IntMatrix::checked_mul`].
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix product")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({:?})", self.to_rows())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}
