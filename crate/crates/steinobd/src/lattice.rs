//! Exact integer vector and matrix algebra over `Z^n`.
//!
//! Everything here is integer-exact: determinants use fraction-free Bareiss
//! elimination, gcd reductions are built from extended-Euclid 2x2 blocks, and
//! all arithmetic is checked so an overflow surfaces as an error instead of a
//! silently wrapped value.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("matrix is not unimodular: determinant {det}")]
    NotUnimodular { det: i64 },
    #[error("matrix rows have unequal lengths")]
    RaggedRows,
    #[error("matrix must be square and nonempty, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("gcd mismatch: {left} vs {right}, no unimodular map exists")]
    GcdMismatch { left: i64, right: i64 },
    #[error("vector must have length >= 1")]
    EmptyVector,
}

fn checked_add(a: i64, b: i64) -> Result<i64, LatticeError> {
    a.checked_add(b).ok_or(LatticeError::Overflow)
}

fn checked_mul(a: i64, b: i64) -> Result<i64, LatticeError> {
    a.checked_mul(b).ok_or(LatticeError::Overflow)
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(a, b) >= 0` and
/// `x*a + y*b = g`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_x, mut x) = (1i64, 0i64);
    let (mut old_y, mut y) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    if old_r < 0 {
        (-old_r, -old_x, -old_y)
    } else {
        (old_r, old_x, old_y)
    }
}

/// An integer vector of fixed length `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Result<Self, LatticeError> {
        if entries.is_empty() {
            return Err(LatticeError::EmptyVector);
        }
        Ok(IntVector(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Gcd of the absolute values of all entries; 0 iff the vector is zero.
    pub fn gcd_nonneg(&self) -> i64 {
        self.0.iter().fold(0, |g, &e| gcd(g, e))
    }

    /// Concatenation, used when handle lists of two handlebodies are joined.
    pub fn concat(&self, other: &IntVector) -> IntVector {
        let mut entries = self.0.clone();
        entries.extend_from_slice(&other.0);
        IntVector(entries)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A square integer matrix with determinant +1 or -1, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnimodularMatrix {
    rows: Vec<Vec<i64>>,
}

impl UnimodularMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = rows.len();
        if n == 0 {
            return Err(LatticeError::NotSquare { rows: 0, cols: 0 });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(LatticeError::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        let det = det_bareiss(&rows)?;
        if det != 1 && det != -1 {
            return Err(LatticeError::NotUnimodular { det });
        }
        Ok(UnimodularMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        UnimodularMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn det(&self) -> i64 {
        // Construction guarantees +-1; recompute rather than cache.
        det_bareiss(&self.rows).expect("determinant of a constructed matrix")
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &IntVector) -> Result<IntVector, LatticeError> {
        if self.size() != v.len() {
            return Err(LatticeError::DimensionMismatch {
                left: self.size(),
                right: v.len(),
            });
        }
        let mut out = Vec::with_capacity(self.size());
        for row in &self.rows {
            let mut acc = 0i64;
            for (a, b) in row.iter().zip(v.entries()) {
                acc = checked_add(acc, checked_mul(*a, *b)?)?;
            }
            out.push(acc);
        }
        IntVector::new(out)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &UnimodularMatrix) -> Result<UnimodularMatrix, LatticeError> {
        let n = self.size();
        if n != other.size() {
            return Err(LatticeError::DimensionMismatch {
                left: n,
                right: other.size(),
            });
        }
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = self.rows[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    rows[i][j] = checked_add(rows[i][j], checked_mul(a, other.rows[k][j])?)?;
                }
            }
        }
        // Product of two unimodular matrices is unimodular.
        Ok(UnimodularMatrix { rows })
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
fn det_bareiss(rows: &[Vec<i64>]) -> Result<i64, LatticeError> {
    let n = rows.len();
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = checked_add(
                    checked_mul(a[i][j], a[k][k])?,
                    -checked_mul(a[i][k], a[k][j])?,
                )?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Result of [`reduce_to_gcd`]: `transform * v = (gcd, 0, ..., 0)` and
/// `transform * transform_inv = identity`.
#[derive(Debug, Clone)]
pub struct GcdReduction {
    pub transform: UnimodularMatrix,
    pub transform_inv: UnimodularMatrix,
    pub gcd: i64,
}

/// Reduces `v` to `(g, 0, ..., 0)` by a unimodular transform built from
/// extended-Euclid 2x2 blocks. The inverse transform is accumulated alongside
/// so it never has to be recomputed.
pub fn reduce_to_gcd(v: &IntVector) -> Result<GcdReduction, LatticeError> {
    let n = v.len();
    let mut u = UnimodularMatrix::identity(n);
    let mut u_inv = UnimodularMatrix::identity(n);
    let mut w: Vec<i64> = v.entries().to_vec();

    for i in 1..n {
        let (a, b) = (w[0], w[i]);
        if b == 0 {
            continue;
        }
        let (g, x, y) = extended_gcd(a, b);
        // Block [[x, y], [-b/g, a/g]] on coordinates (0, i) has determinant
        // (x*a + y*b)/g = 1 and sends (a, b) to (g, 0).
        let (p, q, r, s) = (x, y, -b / g, a / g);
        apply_block_rows(&mut u.rows, 0, i, p, q, r, s)?;
        // Inverse block is [[s, -q], [-r, p]]; accumulate on columns.
        apply_block_cols(&mut u_inv.rows, 0, i, s, -q, -r, p)?;
        w[0] = g;
        w[i] = 0;
    }
    if w[0] < 0 {
        for e in &mut u.rows[0] {
            *e = -*e;
        }
        for row in &mut u_inv.rows {
            row[0] = -row[0];
        }
        w[0] = -w[0];
    }
    Ok(GcdReduction {
        transform: u,
        transform_inv: u_inv,
        gcd: w[0],
    })
}

/// Rows `(r0, r1) <- (p*r0 + q*r1, r*r0 + s*r1)`.
fn apply_block_rows(
    rows: &mut [Vec<i64>],
    r0: usize,
    r1: usize,
    p: i64,
    q: i64,
    r: i64,
    s: i64,
) -> Result<(), LatticeError> {
    let n = rows[r0].len();
    for j in 0..n {
        let (a, b) = (rows[r0][j], rows[r1][j]);
        rows[r0][j] = checked_add(checked_mul(p, a)?, checked_mul(q, b)?)?;
        rows[r1][j] = checked_add(checked_mul(r, a)?, checked_mul(s, b)?)?;
    }
    Ok(())
}

/// Columns `(c0, c1) <- (p*c0 + r*c1, q*c0 + s*c1)`, i.e. right-multiplication
/// by the block [[p, q], [r, s]].
fn apply_block_cols(
    rows: &mut [Vec<i64>],
    c0: usize,
    c1: usize,
    p: i64,
    q: i64,
    r: i64,
    s: i64,
) -> Result<(), LatticeError> {
    for row in rows.iter_mut() {
        let (a, b) = (row[c0], row[c1]);
        row[c0] = checked_add(checked_mul(a, p)?, checked_mul(b, r)?)?;
        row[c1] = checked_add(checked_mul(a, q)?, checked_mul(b, s)?)?;
    }
    Ok(())
}

/// A unimodular matrix `A` with `A * v = w`. Exists iff the gcds of the two
/// vectors agree; factors through `(g, 0, ..., 0)`.
pub fn automorphism_mapping(
    v: &IntVector,
    w: &IntVector,
) -> Result<UnimodularMatrix, LatticeError> {
    if v.len() != w.len() {
        return Err(LatticeError::DimensionMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    let rv = reduce_to_gcd(v)?;
    let rw = reduce_to_gcd(w)?;
    if rv.gcd != rw.gcd {
        return Err(LatticeError::GcdMismatch {
            left: rv.gcd,
            right: rw.gcd,
        });
    }
    rw.transform_inv.mul(&rv.transform)
}
