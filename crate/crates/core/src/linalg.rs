//! Exact ranks of small integer matrices over prime fields and over the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// `GF(p)`, `p` prime and below `2^31`.
    Prime(u32),
    Rationals,
}

impl Field {
    pub const DEFAULT: Field = Field::Prime(32003);

    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidParameter(format!("{p} is not a prime below 2^31")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Prime(p) => p,
            Field::Rationals => 0,
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::DEFAULT
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "gf:{p}"),
            Field::Rationals => write!(f, "qq"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `gf:<p>` and `qq`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "qq" || s == "q" {
            return Ok(Field::Rationals);
        }
        let p = s
            .strip_prefix("gf:")
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`, expected gf:<p> or qq")))?;
        let p: u32 = p.parse().map_err(|_| Error::Parse(format!("bad prime `{p}`")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Sparse column-major matrix with small integer entries.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, cols: Vec::new() }
    }

    pub fn push_col(&mut self, col: Vec<(usize, i64)>) {
        self.cols.push(col);
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] += v;
            }
        }
        out
    }

    pub fn rank(&self, field: Field) -> usize {
        if self.rows == 0 || self.cols.is_empty() {
            return 0;
        }
        match field {
            Field::Prime(2) => rank_gf2(self),
            Field::Prime(p) => rank_mod_p(self, p),
            Field::Rationals => rank_rational(self),
        }
    }
}

fn rank_gf2(m: &SparseMatrix) -> usize {
    // rows are the columns of `m`; rank is transpose-invariant
    let words = m.rows.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .cols
        .iter()
        .map(|col| {
            let mut r = vec![0u64; words];
            for &(i, v) in col {
                if v.rem_euclid(2) == 1 {
                    r[i / 64] ^= 1 << (i % 64);
                }
            }
            r
        })
        .collect();
    let mut rank = 0;
    for bit in 0..m.rows {
        let (w, b) = (bit / 64, 1u64 << (bit % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            if r[w] & b != 0 {
                for (x, y) in r.iter_mut().zip(prow.iter()).skip(w) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn rank_mod_p(m: &SparseMatrix, p: u32) -> usize {
    let p = u64::from(p);
    let ncols = m.rows;
    let mut rows: Vec<Vec<u64>> = m
        .cols
        .iter()
        .map(|col| {
            let mut r = vec![0u64; ncols];
            for &(i, v) in col {
                r[i] = (r[i] + v.rem_euclid(p as i64) as u64) % p;
            }
            r
        })
        .collect();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            if r[c] != 0 {
                let f = r[c] * inv % p;
                for (x, y) in r.iter_mut().zip(prow.iter()).skip(c) {
                    if *y != 0 {
                        *x = (*x + p - f * *y % p) % p;
                    }
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Fraction-free (Bareiss) elimination on `i128`, restarted with big integers
/// if any intermediate minor overflows.
fn rank_rational(m: &SparseMatrix) -> usize {
    // rank over Q is at least the rank mod p, so full rank mod p settles it
    let modular = rank_mod_p(m, 2_147_483_647);
    if modular == m.rows.min(m.ncols()) {
        return modular;
    }
    let dense = m.to_dense();
    match bareiss_i128(&dense) {
        Some(r) => r,
        None => bareiss_big(&dense),
    }
}

#[allow(clippy::needless_range_loop)]
fn bareiss_i128(dense: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> =
        dense.iter().map(|r| r.iter().map(|&v| i128::from(v)).collect()).collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let pv = a[rank][c];
        for r in rank + 1..nrows {
            let lead = a[r][c];
            for j in c + 1..ncols {
                let x = a[r][j].checked_mul(pv)?;
                let y = lead.checked_mul(a[rank][j])?;
                a[r][j] = x.checked_sub(y)? / prev;
            }
            a[r][c] = 0;
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

#[allow(clippy::needless_range_loop)]
fn bareiss_big(dense: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> =
        dense.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let pv = a[rank][c].clone();
        for r in rank + 1..nrows {
            let lead = a[r][c].clone();
            for j in c + 1..ncols {
                let v = (&a[r][j] * &pv - &lead * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = pv;
        rank += 1;
    }
    rank
}
