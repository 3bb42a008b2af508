//! Ranks of sparse integer matrices by left-to-right column reduction.
//!
//! One routine serves every coefficient domain. Each column is reduced by
//! `col ← b·col − a·pivot` where `a`, `b` are the two leading entries, which
//! is fraction-free over the integers and plain elimination modulo `p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse column: `(row, value)` pairs sorted by row, no zero values.
pub type Column<E> = Vec<(u32, E)>;

pub trait Ring {
    type E: Clone;
    fn from_i64(&self, x: i64) -> Self::E;
    fn is_zero(&self, x: &Self::E) -> bool;
    /// `b·x − a·y`, or `None` on overflow.
    fn combine(&self, b: &Self::E, x: &Self::E, a: &Self::E, y: &Self::E) -> Option<Self::E>;
    /// Keeps entries small after a reduction step.
    fn normalize(&self, col: &mut Column<Self::E>);
}

pub struct ModP(pub u64);

impl Ring for ModP {
    type E = u64;
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn combine(&self, b: &u64, x: &u64, a: &u64, y: &u64) -> Option<u64> {
        let p = self.0 as u128;
        let bx = *b as u128 * *x as u128 % p;
        let ay = *a as u128 * *y as u128 % p;
        Some(((bx + p - ay) % p) as u64)
    }
    fn normalize(&self, _col: &mut Column<u64>) {}
}

/// Integers in `i128`, failing on overflow.
pub struct SmallInt;

impl Ring for SmallInt {
    type E = i128;
    fn from_i64(&self, x: i64) -> i128 {
        x as i128
    }
    fn is_zero(&self, x: &i128) -> bool {
        *x == 0
    }
    fn combine(&self, b: &i128, x: &i128, a: &i128, y: &i128) -> Option<i128> {
        b.checked_mul(*x)?.checked_sub(a.checked_mul(*y)?)
    }
    fn normalize(&self, col: &mut Column<i128>) {
        let g = col.iter().fold(0i128, |g, (_, v)| g.gcd(v));
        if g > 1 {
            for (_, v) in col.iter_mut() {
                *v /= g;
            }
        }
    }
}

pub struct BigInteger;

impl Ring for BigInteger {
    type E = BigInt;
    fn from_i64(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn combine(&self, b: &BigInt, x: &BigInt, a: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(b * x - a * y)
    }
    fn normalize(&self, col: &mut Column<BigInt>) {
        let g = col.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v)).abs();
        if g > BigInt::from(1) {
            for (_, v) in col.iter_mut() {
                *v = &*v / &g;
            }
        }
    }
}

/// `b·col − a·piv`, merging by row.
fn reduce<R: Ring>(ring: &R, col: &Column<R::E>, piv: &Column<R::E>) -> Option<Column<R::E>> {
    let a = &col.last()?.1;
    let b = &piv.last()?.1;
    let zero = ring.from_i64(0);
    let mut out = Vec::with_capacity(col.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < piv.len() {
        let (row, v) = match (col.get(i), piv.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, ring.combine(b, &x.1, a, &y.1)?)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                (x.0, ring.combine(b, &x.1, a, &zero)?)
            }
            (Some(x), None) => {
                i += 1;
                (x.0, ring.combine(b, &x.1, a, &zero)?)
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, ring.combine(b, &zero, a, &y.1)?)
            }
            (None, None) => unreachable!(),
        };
        if !ring.is_zero(&v) {
            out.push((row, v));
        }
    }
    ring.normalize(&mut out);
    Some(out)
}

/// Outcome of reducing one matrix.
pub struct Reduction {
    pub rank: usize,
    /// Rows that ended up as pivots (lowest nonzero rows of reduced columns).
    pub pivot_rows: Vec<u32>,
}

/// Rank of the matrix with the given columns, skipping columns flagged in
/// `skip` (already known to reduce to zero). `None` on overflow.
///
/// Columns are processed last to first with row order reversed. For
/// boundary matrices of order complexes with naturally labelled vertices this
/// keeps fill-in far smaller than the forward order.
pub fn column_rank<R: Ring>(ring: &R, n_rows: usize, cols: &[Column<i64>], skip: &[bool]) -> Option<Reduction> {
    let flip = |r: u32| (n_rows - 1) as u32 - r;
    let mut pivot_of_row: Vec<Option<u32>> = vec![None; n_rows];
    let mut reduced: Vec<Column<R::E>> = Vec::new();
    let mut pivot_rows = Vec::new();
    for (c, col) in cols.iter().enumerate().rev() {
        if skip.get(c).copied().unwrap_or(false) {
            continue;
        }
        let mut cur: Column<R::E> = col
            .iter()
            .rev()
            .map(|(r, v)| (flip(*r), ring.from_i64(*v)))
            .filter(|(_, v)| !ring.is_zero(v))
            .collect();
        while let Some(&(low, _)) = cur.last() {
            match pivot_of_row[low as usize] {
                Some(k) => cur = reduce(ring, &cur, &reduced[k as usize])?,
                None => break,
            }
        }
        if let Some(&(low, _)) = cur.last() {
            pivot_of_row[low as usize] = Some(reduced.len() as u32);
            pivot_rows.push(flip(low));
            reduced.push(cur);
        }
    }
    Some(Reduction {
        rank: reduced.len(),
        pivot_rows,
    })
}

/// Exact rank over `ℚ`: `i128` arithmetic, redone with big integers if any
/// intermediate value would overflow.
pub fn rational_rank(n_rows: usize, cols: &[Column<i64>], skip: &[bool]) -> Reduction {
    column_rank(&SmallInt, n_rows, cols, skip)
        .unwrap_or_else(|| column_rank(&BigInteger, n_rows, cols, skip).expect("big integers do not overflow"))
}

pub fn modular_rank(p: u64, n_rows: usize, cols: &[Column<i64>], skip: &[bool]) -> Reduction {
    column_rank(&ModP(p), n_rows, cols, skip).expect("modular arithmetic does not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: usize, m: &[&[i64]]) -> Vec<Column<i64>> {
        // m is given row-major; convert to sparse columns
        let ncols = m[0].len();
        (0..ncols)
            .map(|c| (0..rows).filter(|&r| m[r][c] != 0).map(|r| (r as u32, m[r][c])).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = dense(3, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(rational_rank(3, &m, &[]).rank, 2);
        assert_eq!(modular_rank(3, 3, &m, &[]).rank, 1);
        assert_eq!(modular_rank(5, 3, &m, &[]).rank, 2);
        let m = dense(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(rational_rank(2, &m, &[]).rank, 2);
        assert_eq!(modular_rank(2, 2, &m, &[]).rank, 0);
    }

    #[test]
    fn big_integer_fallback_agrees() {
        // large pseudo-random entries overflow i128 during elimination
        let n = 12;
        let mut x: u64 = 12345;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        (x >> 34) as i64 - (1 << 29)
                    })
                    .collect()
            })
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = dense(n, &refs);
        assert!(column_rank(&SmallInt, n, &m, &[]).is_none());
        let big = column_rank(&BigInteger, n, &m, &[]).unwrap();
        assert_eq!(big.rank, 12);
        assert_eq!(rational_rank(n, &m, &[]).rank, 12);
        assert_eq!(modular_rank(1_000_000_007, n, &m, &[]).rank, 12);
    }
}
