//! Smith normal form over arbitrary-precision integers.
//!
//! Plain row/column reduction with a smallest-pivot strategy; the matrices
//! here are relator exponent matrices (n x n with n the covering degree),
//! so no performance tricks are needed.  Determinant shortcuts are avoided
//! so free rank is always detected.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix, padded with
/// zeros up to `min(rows, cols)` (zeros = free rank of the cokernel).
pub fn smith_invariant_factors(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nr = m.len();
    let nc = if nr == 0 { 0 } else { m[0].len() };
    let dim = nr.min(nc);
    let mut k = 0;
    while k < dim {
        let Some((pi, pj)) = smallest_pivot(&m, k) else {
            break;
        };
        m.swap(k, pi);
        swap_cols(&mut m, k, pj);
        loop {
            let mut clean = true;
            // clear column k
            for i in k + 1..nr {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[i][k], &m[k][k]);
                for j in k..nc {
                    let sub = &q * &m[k][j];
                    m[i][j] -= sub;
                }
                if !m[i][k].is_zero() {
                    m.swap(k, i);
                    clean = false;
                }
            }
            // clear row k
            for j in k + 1..nc {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[k][j], &m[k][k]);
                for i in k..nr {
                    let sub = &q * &m[i][k];
                    m[i][j] -= sub;
                }
                if !m[k][j].is_zero() {
                    swap_cols(&mut m, k, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // make the pivot divide the remaining entries
        let mut fixed = false;
        'outer: for i in k + 1..nr {
            for j in k + 1..nc {
                if !(&m[i][j] % &m[k][k]).is_zero() {
                    let row: Vec<BigInt> = m[i].clone();
                    for (jj, x) in row.into_iter().enumerate() {
                        m[k][jj] += x;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue; // redo the elimination at the same k
        }
        k += 1;
    }
    let diag: Vec<BigInt> = (0..dim).map(|i| m[i][i].abs()).collect();
    // divisibility along the diagonal is ensured by construction; move the
    // zero factors to the tail
    let (nonzero, zero): (Vec<_>, Vec<_>) = diag.into_iter().partition(|x| !x.is_zero());
    nonzero.into_iter().chain(zero).collect()
}

fn smallest_pivot(m: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(k) {
        for (j, x) in row.iter().enumerate().skip(k) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Quotient rounded to nearest, so remainders shrink fast.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (&r * 2i32).abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
