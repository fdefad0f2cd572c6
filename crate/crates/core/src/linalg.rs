//! Exact rational linear algebra: sparse vectors and matrices, and an
//! incremental row reducer that tracks how each reduced row was formed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` text form used by every file format (denominator always written).
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

pub fn factorial(n: usize) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Q::from_integer(acc)
}

/// Sparse vector: index -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec(pub BTreeMap<usize, Q>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn unit(i: usize) -> Self {
        let mut v = SparseVec::new();
        v.0.insert(i, Q::one());
        v
    }

    pub fn from_dense(d: &[Q]) -> Self {
        SparseVec(
            d.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        )
    }

    pub fn to_dense(&self, n: usize) -> Vec<Q> {
        let mut d = vec![Q::zero(); n];
        for (&i, x) in &self.0 {
            d[i] = x.clone();
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Q {
        self.0.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_scaled(&mut self, other: &SparseVec, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.0 {
            add_entry(&mut self.0, i, x * c);
        }
    }

    pub fn add_entry(&mut self, i: usize, x: Q) {
        add_entry(&mut self.0, i, x);
    }

    pub fn scale(&self, c: &Q) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(&i, x)| (i, x * c)).collect())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut r = self.clone();
        r.add_scaled(other, &-Q::one());
        r
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.0.iter().map(|(&i, x)| (i, x))
    }
}

fn add_entry(m: &mut BTreeMap<usize, Q>, i: usize, x: Q) {
    if x.is_zero() {
        return;
    }
    match m.entry(i) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + x;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Column-major sparse matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, nnz={})", self.nrows, self.ncols, self.nnz())
    }
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zeros(n, n);
        for i in 0..n {
            m.cols[i] = SparseVec::unit(i);
        }
        m
    }

    pub fn diagonal(d: &[Q]) -> Self {
        let mut m = SparseMatrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.cols[i].add_entry(i, x.clone());
        }
        m
    }

    pub fn from_triplets(nrows: usize, ncols: usize, t: impl IntoIterator<Item = (usize, usize, Q)>) -> Self {
        let mut m = SparseMatrix::zeros(nrows, ncols);
        for (r, c, x) in t {
            m.cols[c].add_entry(r, x);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.0.len()).sum()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn set_col(&mut self, j: usize, v: SparseVec) {
        self.cols[j] = v;
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.cols[c].get(r)
    }

    pub fn add_entry(&mut self, r: usize, c: usize, x: Q) {
        self.cols[c].add_entry(r, x);
    }

    /// Triplets sorted by (row, column).
    pub fn triplets(&self) -> Vec<(usize, usize, Q)> {
        let mut t: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (r, c, x.clone())))
            .collect();
        t.sort_by_key(|a| (a.0, a.1));
        t
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v.iter() {
            out.add_scaled(&self.cols[j], x);
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            cols: other.cols.iter().map(|c| self.mul_vec(c)).collect(),
        }
    }

    pub fn add_scaled(&self, other: &SparseMatrix, c: &Q) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut r = self.clone();
        for (a, b) in r.cols.iter_mut().zip(&other.cols) {
            a.add_scaled(b, c);
        }
        r
    }

    pub fn scale(&self, c: &Q) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            cols: self.cols.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).add_scaled(&other.mul(self), &-Q::one())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zeros(self.ncols, self.nrows);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                t.cols[r].add_entry(c, x.clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Q {
        (0..self.ncols.min(self.nrows)).map(|i| self.get(i, i)).sum()
    }

    /// Kronecker product `self (x) other`, indices `i * other.dim + j`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.nrows * other.nrows, self.ncols * other.ncols);
        for (c1, col1) in self.cols.iter().enumerate() {
            for (r1, x1) in col1.iter() {
                for (c2, col2) in other.cols.iter().enumerate() {
                    for (r2, x2) in col2.iter() {
                        m.cols[c1 * other.ncols + c2].add_entry(r1 * other.nrows + r2, x1 * x2);
                    }
                }
            }
        }
        m
    }
}

/// Incremental semi-echelon basis over dense rational vectors.
///
/// Every inserted vector is either accepted as a new basis member or
/// expressed in terms of the previously accepted ones.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    len: usize,
    rows: Vec<ReducedRow>,
}

#[derive(Clone, Debug)]
struct ReducedRow {
    pivot: usize,
    row: Vec<Q>,
    // row = sum_j combo[j] * accepted[j]
    combo: Vec<Q>,
}

/// Outcome of [`RowReducer::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// Accepted as basis member with this index.
    New(usize),
    /// Dependent; coordinates in the accepted members.
    Dependent(Vec<Q>),
}

impl RowReducer {
    pub fn new(len: usize) -> Self {
        RowReducer { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        assert_eq!(v.len(), self.len);
        let mut r = v.to_vec();
        // coefficients c_k with v = r + sum c_k rows[k]
        let mut coeff = vec![Q::zero(); self.rows.len()];
        for (k, row) in self.rows.iter().enumerate() {
            if r[row.pivot].is_zero() {
                continue;
            }
            let c = r[row.pivot].clone();
            for (a, b) in r.iter_mut().zip(&row.row) {
                if !b.is_zero() {
                    *a -= &c * b;
                }
            }
            coeff[k] = c;
        }
        (r, coeff)
    }

    fn combine(&self, coeff: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rows.len()];
        for (c, row) in coeff.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&row.combo) {
                *o += c * t;
            }
        }
        out
    }

    /// Coordinates of `v` in the accepted members, if `v` lies in their span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let (r, coeff) = self.reduce(v);
        if r.iter().all(|x| x.is_zero()) {
            Some(self.combine(&coeff))
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    pub fn insert(&mut self, v: &[Q]) -> Insertion {
        let (mut r, coeff) = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            None => Insertion::Dependent(self.combine(&coeff)),
            Some(pivot) => {
                let n = self.rows.len();
                let p = r[pivot].clone();
                let inv = Q::one() / &p;
                for x in r.iter_mut() {
                    *x *= &inv;
                }
                // r_new = (v - sum coeff_k row_k) / p
                let mut combo = self.combine(&coeff);
                for x in combo.iter_mut() {
                    *x = -&*x * &inv;
                }
                for row in self.rows.iter_mut() {
                    row.combo.push(Q::zero());
                }
                combo.push(inv);
                self.rows.push(ReducedRow { pivot, row: r, combo });
                Insertion::New(n)
            }
        }
    }
}

/// Rank of a dense matrix given by rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut red = RowReducer::new(first.len());
    for r in rows {
        red.insert(r);
    }
    red.rank()
}

/// Solve `a x = b` for square nonsingular `a` (Gauss-Jordan).
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = Q::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let c = m[r][col].clone();
                let (src, dst) = if r < col {
                    let (lo, hi) = m.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = m.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &c * s;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Inverse of a square nonsingular matrix.
pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Q> = (0..n).map(|i| if i == j { Q::one() } else { Q::zero() }).collect();
        cols.push(solve(a, &e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Determinant by exact Gaussian elimination.
pub fn determinant(a: &[Vec<Q>]) -> Q {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let c = &m[r][col] / &p;
            let pivot_row = m[col].clone();
            for (d, s) in m[r].iter_mut().zip(&pivot_row) {
                *d -= &c * s;
            }
        }
    }
    det
}

/// True when the symmetric matrix is positive definite (Sylvester's criterion).
pub fn is_positive_definite(a: &[Vec<Q>]) -> bool {
    (1..=a.len()).all(|k| {
        let minor: Vec<Vec<Q>> = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        determinant(&minor).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reducer_expresses_dependent_vectors() {
        let mut r = RowReducer::new(3);
        let a = vec![q(1), q(2), q(0)];
        let b = vec![q(0), q(1), q(1)];
        assert_eq!(r.insert(&a), Insertion::New(0));
        assert_eq!(r.insert(&b), Insertion::New(1));
        // 2a - 3b
        let c = vec![q(2), q(1), q(-3)];
        assert_eq!(r.insert(&c), Insertion::Dependent(vec![q(2), q(-3)]));
        assert!(r.coordinates(&[q(0), q(0), q(1)]).is_none());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![q_frac(2, 3), q_frac(1, 3)], vec![q_frac(1, 3), q_frac(2, 3)]]);
        assert_eq!(determinant(&a), q(3));
        assert!(is_positive_definite(&a));
        assert!(!is_positive_definite(&[vec![q(1), q(2)], vec![q(2), q(1)]]));
    }

    #[test]
    fn rational_text_round_trip() {
        let x = q_frac(-6, 4);
        assert_eq!(format_q(&x), "-3/2");
        assert_eq!(parse_q("-3/2").unwrap(), x);
        assert_eq!(parse_q("5").unwrap(), q(5));
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn commutator_of_sl2_generators() {
        let e = SparseMatrix::from_triplets(2, 2, [(0, 1, q(1))]);
        let f = SparseMatrix::from_triplets(2, 2, [(1, 0, q(1))]);
        let h = SparseMatrix::diagonal(&[q(1), q(-1)]);
        assert_eq!(e.commutator(&f), h);
        assert_eq!(h.commutator(&e), e.scale(&q(2)));
        assert_eq!(e.kron(&SparseMatrix::identity(2)).nnz(), 2);
    }
}
