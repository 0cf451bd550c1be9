//! Integer linear algebra on the rank-two lattice `N = Z^2`.
//!
//! Everything here is exact. Lattice vectors use checked `i64` arithmetic;
//! the Smith normal form runs on arbitrary-precision integers so that
//! intermediate row and column operations can never overflow.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector of the lattice `Z^2`.
///
/// Serialized as a two-element JSON array `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

impl From<[i64; 2]> for LatticeVector {
    fn from([x, y]: [i64; 2]) -> Self {
        LatticeVector { x, y }
    }
}

impl From<LatticeVector> for [i64; 2] {
    fn from(v: LatticeVector) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl LatticeVector {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticeVector { x, y }
    }

    pub const E1: LatticeVector = LatticeVector::new(1, 0);
    pub const E2: LatticeVector = LatticeVector::new(0, 1);

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn checked_add(self, other: LatticeVector) -> Result<LatticeVector> {
        Ok(LatticeVector {
            x: self.x.checked_add(other.x).ok_or(Error::Overflow)?,
            y: self.y.checked_add(other.y).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_sub(self, other: LatticeVector) -> Result<LatticeVector> {
        Ok(LatticeVector {
            x: self.x.checked_sub(other.x).ok_or(Error::Overflow)?,
            y: self.y.checked_sub(other.y).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_scale(self, k: i64) -> Result<LatticeVector> {
        Ok(LatticeVector {
            x: self.x.checked_mul(k).ok_or(Error::Overflow)?,
            y: self.y.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_neg(self) -> Result<LatticeVector> {
        Ok(LatticeVector {
            x: self.x.checked_neg().ok_or(Error::Overflow)?,
            y: self.y.checked_neg().ok_or(Error::Overflow)?,
        })
    }

    /// Index of the half-open quadrant containing the vector, counting
    /// counterclockwise from the positive x-axis. The zero vector has none.
    pub(crate) fn quadrant(&self) -> Option<u8> {
        match (self.x.signum(), self.y.signum()) {
            (0, 0) => None,
            (1, _) if self.y >= 0 => Some(0),
            (_, 1) => Some(1),
            (-1, _) => Some(2),
            _ => Some(3),
        }
    }
}

/// `v.x * w.y - v.y * w.x`, widened so it cannot overflow.
pub fn det2(v: LatticeVector, w: LatticeVector) -> i128 {
    v.x as i128 * w.y as i128 - v.y as i128 * w.x as i128
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// True iff `gcd(|x|, |y|) = 1`.
pub fn is_primitive(v: LatticeVector) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(gcd_u64(v.x.unsigned_abs(), v.y.unsigned_abs()) == 1)
}

/// A 2x2 integer matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matrix2(pub [[i64; 2]; 2]);

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2([[1, 0], [0, 1]]);

    /// The matrix whose columns are `a` and `b`.
    pub fn from_columns(a: LatticeVector, b: LatticeVector) -> Self {
        Matrix2([[a.x, b.x], [a.y, b.y]])
    }

    pub fn det(&self) -> i128 {
        let [[a, b], [c, d]] = self.0;
        a as i128 * d as i128 - b as i128 * c as i128
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    pub fn apply(&self, v: LatticeVector) -> Result<LatticeVector> {
        let [[a, b], [c, d]] = self.0;
        let x = a as i128 * v.x as i128 + b as i128 * v.y as i128;
        let y = c as i128 * v.x as i128 + d as i128 * v.y as i128;
        Ok(LatticeVector {
            x: x.try_into().map_err(|_| Error::Overflow)?,
            y: y.try_into().map_err(|_| Error::Overflow)?,
        })
    }

    /// Inverse of a unimodular matrix; `None` otherwise.
    pub fn unimodular_inverse(&self) -> Option<Matrix2> {
        let det = self.det();
        if det.abs() != 1 {
            return None;
        }
        let [[a, b], [c, d]] = self.0;
        let s = det as i64;
        Some(Matrix2([
            [d.checked_mul(s)?, b.checked_neg()?.checked_mul(s)?],
            [c.checked_neg()?.checked_mul(s)?, a.checked_mul(s)?],
        ]))
    }
}

/// Invariants of a finitely generated abelian group
/// `Z^free_rank + Z/d_1 + ... + Z/d_k` with `d_1 | d_2 | ... | d_k`, all `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub free_rank: u32,
    pub torsion: Vec<u128>,
}

impl GroupInvariants {
    pub fn trivial() -> Self {
        GroupInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<u128> {
        if self.free_rank > 0 {
            return None;
        }
        self.torsion
            .iter()
            .try_fold(1u128, |acc, d| acc.checked_mul(*d))
    }
}

impl fmt::Display for GroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Diagonal of the Smith normal form of an integer matrix, given row by row.
///
/// Pivots are chosen as the entry of least nonzero absolute value, ties
/// broken by lowest row and then lowest column. The returned entries are the
/// nonzero invariant factors in divisibility order.
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut diag = Vec::new();

    for t in 0..nrows.min(ncols) {
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut cleared = true;
            for r in t + 1..nrows {
                let q = &a[r][t] / &a[t][t];
                if !q.is_zero() {
                    for c in t..ncols {
                        let delta = &q * &a[t][c];
                        a[r][c] -= delta;
                    }
                }
                cleared &= a[r][t].is_zero();
            }
            for c in t + 1..ncols {
                let q = &a[t][c] / &a[t][t];
                if !q.is_zero() {
                    for r in t..nrows {
                        let delta = &q * &a[r][t];
                        a[r][c] -= delta;
                    }
                }
                cleared &= a[t][c].is_zero();
            }
            if !cleared {
                continue;
            }

            // Enforce divisibility of the remaining block by the pivot.
            let offender =
                (t + 1..nrows).find(|&r| (t + 1..ncols).any(|c| !(&a[r][c] % &a[t][t]).is_zero()));
            match offender {
                Some(r) => {
                    for c in t..ncols {
                        let v = a[r][c].clone();
                        a[t][c] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn find_pivot(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => x.abs() < a[bi][bj].abs(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Invariants of the cokernel `Z^2 / <columns>`.
pub fn smith_normal_form(columns: &[LatticeVector]) -> GroupInvariants {
    let rows = vec![
        columns.iter().map(|v| v.x).collect::<Vec<_>>(),
        columns.iter().map(|v| v.y).collect::<Vec<_>>(),
    ];
    let diag = if columns.is_empty() {
        Vec::new()
    } else {
        smith_diagonal(&rows)
    };
    let torsion = diag
        .iter()
        .filter(|d| !d.is_zero() && d.to_u8() != Some(1))
        .map(|d| {
            d.to_u128()
                .expect("invariant factor of an i64 matrix fits in u128")
        })
        .collect();
    GroupInvariants {
        free_rank: (2 - diag.len()) as u32,
        torsion,
    }
}
