//! Exact membership in a scaled Newton polyhedron.
//!
//! `a` lies in `k * NP(I)` iff some `lambda >= 0` with `sum(lambda) = k`
//! satisfies `sum_j lambda_j v_j <= a`. Feasibility is decided by phase one
//! of the simplex method over the rationals with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Whether `a` lies in `k` times the convex hull of `gens` plus the
/// nonnegative orthant.
pub fn in_scaled_hull(gens: &[Vec<u16>], a: &[u32], k: u32) -> bool {
    let m = gens.len();
    let nv = a.len();
    if m == 0 {
        return false;
    }
    // columns: lambda_0..lambda_{m-1}, slack_0..slack_{nv-1}, artificial
    let cols = m + nv + 1;
    let art = cols - 1;
    let rows = nv + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for p in 0..nv {
        let mut row = vec![BigRational::zero(); cols + 1];
        for (j, g) in gens.iter().enumerate() {
            row[j] = q(g[p] as i64);
        }
        row[m + p] = BigRational::one();
        row[cols] = q(a[p] as i64);
        t.push(row);
    }
    let mut last = vec![BigRational::zero(); cols + 1];
    for x in last.iter_mut().take(m) {
        *x = BigRational::one();
    }
    last[art] = BigRational::one();
    last[cols] = q(k as i64);
    t.push(last);
    let mut basis: Vec<usize> = (0..nv).map(|p| m + p).chain([art]).collect();

    // objective: minimise the artificial; reduced costs are minus the last row
    let mut obj = vec![BigRational::zero(); cols + 1];
    for (c, x) in obj.iter_mut().enumerate() {
        if c != art {
            *x = -t[nv][c].clone();
        }
    }
    while let Some(enter) = (0..cols).find(|&c| obj[c].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &t[r][cols] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so an entering column always has a pivot
        let (r, _) = leave.expect("phase one objective is bounded");
        pivot(&mut t, &mut obj, r, enter);
        basis[r] = enter;
    }
    // obj[cols] holds minus the optimal artificial value
    obj[cols].is_zero()
}

fn pivot(t: &mut [Vec<BigRational>], obj: &mut [BigRational], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
    }
    if !obj[c].is_zero() {
        let f = obj[c].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
    }
}
