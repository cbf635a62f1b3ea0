//! Exact rank of integer matrices over the rationals.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Rank over Q of the matrix with the given rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mat: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    match rank_i128(mat) {
        Some(r) => r,
        None => rank_big(rows),
    }
}

/// Fraction-free elimination; `None` on overflow.
fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        // prefer a unit pivot to keep entries small
        let pivot = (rank..m.len())
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let mut g = 0i128;
            for c in col..ncols {
                let v = row[c].checked_mul(pv)?.checked_sub(prow[c].checked_mul(f)?)?;
                row[c] = v;
                g = gcd_i128(g, v);
            }
            if g > 1 {
                for v in row[col..].iter_mut() {
                    *v /= g;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col].clone();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            let mut g = BigInt::zero();
            for c in col..ncols {
                row[c] = &row[c] * &pv - &prow[c] * &f;
                g = num_integer_gcd(&g, &row[c]);
            }
            if g > BigInt::from(1) {
                for v in row[col..].iter_mut() {
                    *v = &*v / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}
