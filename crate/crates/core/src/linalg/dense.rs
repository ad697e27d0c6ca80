//! Dense exact kernels: Bareiss fraction-free rank, Smith normal form with
//! minimal-absolute-value pivoting, and Gaussian rank over a prime field.
//! These run on the (small) residuals left over by the sparse reduction, or
//! on whole matrices at desk scale.
//!
//! Index loops are deliberate here: the eliminations read one row while
//! mutating another, which iterator adapters cannot express without clones.
#![allow(clippy::needless_range_loop)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<Vec<BigInt>>;

/// Rank over Q by fraction-free elimination. Consumes the matrix.
pub(crate) fn bareiss_rank(mut a: Dense) -> usize {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let num = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                a[i][j] = num / &prev; // exact by the Bareiss identity
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn swap_cols(a: &mut Dense, x: usize, y: usize) {
    if x == y {
        return;
    }
    for row in a.iter_mut() {
        row.swap(x, y);
    }
}

/// Invariant factors of the matrix (absolute values, divisibility chain).
/// Standard reduction with pivoting by minimal absolute value; intermediate
/// entries are arbitrary precision.
pub(crate) fn invariant_factors(mut a: Dense) -> Vec<BigUint> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // minimal nonzero entry of the trailing submatrix becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].magnitude() < a[bi][bj].magnitude()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        a.swap(t, bi);
        swap_cols(&mut a, t, bj);

        'clear: loop {
            // clear column t; a leftover remainder is strictly smaller than
            // the pivot, so swapping it up makes progress
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    for j in t..cols {
                        let s = &a[t][j] * &q;
                        a[i][j] -= s;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    continue 'clear;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for i in t..rows {
                        let s = &a[i][t] * &q;
                        a[i][j] -= s;
                    }
                }
                if !a[t][j].is_zero() {
                    swap_cols(&mut a, t, j);
                    continue 'clear;
                }
            }
            // pivot must divide the whole trailing submatrix; if it does
            // not, folding the offending row into row t shrinks the pivot
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if (&a[i][j] % &a[t][t]).is_zero() {
                        continue;
                    }
                    for jj in t..cols {
                        let add = a[i][jj].clone();
                        a[t][jj] += add;
                    }
                    continue 'clear;
                }
            }
            break;
        }
        factors.push(a[t][t].abs().to_biguint().unwrap());
        t += 1;
    }
    factors
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn modinv(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a != 0 mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let r = v % BigInt::from(p);
    let r = if r.is_negative() {
        r + BigInt::from(p)
    } else {
        r
    };
    let digits = r.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

/// Rank over F_p by Gaussian elimination.
pub(crate) fn rank_mod_p(a: &Dense, p: u64) -> usize {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .map(|row| row.iter().map(|v| reduce_mod(v, p)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = modinv(m[rank][c], p);
        for i in rank + 1..rows {
            if m[i][c] == 0 {
                continue;
            }
            let f = mulmod(m[i][c], inv, p);
            for j in c..cols {
                let sub = mulmod(f, m[rank][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Dense {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss_rank_examples() {
        assert_eq!(bareiss_rank(dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(dense(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(bareiss_rank(dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            bareiss_rank(dense(&[&[2, 3, 5], &[4, 6, 10], &[1, 1, 1]])),
            2
        );
    }

    #[test]
    fn snf_divisibility_chain() {
        let f = invariant_factors(dense(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]));
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert_eq!(
            f,
            vec![
                BigUint::from(2u32),
                BigUint::from(2u32),
                BigUint::from(156u32)
            ]
        );
    }

    #[test]
    fn snf_torsion_two() {
        let f = invariant_factors(dense(&[&[2, 0], &[0, 3]]));
        assert_eq!(f, vec![BigUint::from(1u32), BigUint::from(6u32)]);
    }

    #[test]
    fn rank_mod_p_drops_at_dividing_prime() {
        let a = dense(&[&[2, 0], &[0, 2]]);
        assert_eq!(rank_mod_p(&a, 2), 0);
        assert_eq!(rank_mod_p(&a, 3), 2);
    }

    #[test]
    fn negative_entries_reduce_correctly() {
        let a = dense(&[&[-1]]);
        assert_eq!(rank_mod_p(&a, 5), 1);
        assert_eq!(reduce_mod(&BigInt::from(-7), 5), 3);
    }
}
