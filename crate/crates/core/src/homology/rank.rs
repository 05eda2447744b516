//! Matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;

use super::matrix::{Dense, Entry};

/// Rank over ℚ by fraction-free (Bareiss) elimination. Every intermediate
/// entry is a minor of the input, so the divisions are exact.
fn bareiss_rank<S: Entry + ExactDiv>(mut a: Dense<S>) -> Option<usize> {
    let mut prev = S::unit();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.at(i, c).is_nil()) else {
            continue;
        };
        a.swap_rows(p, r);
        for i in r + 1..a.rows {
            let lead = a.at(i, c).clone();
            for j in c + 1..a.cols {
                let x = a.at(r, c).mul(a.at(i, j))?.sub_mul(&lead, a.at(r, j))?;
                a.set(i, j, x.exact_div(&prev));
            }
            a.set(i, c, S::nil());
        }
        prev = a.at(r, c).clone();
        r += 1;
    }
    Some(r)
}

trait ExactDiv {
    fn exact_div(&self, b: &Self) -> Self;
}

impl ExactDiv for i64 {
    fn exact_div(&self, b: &Self) -> Self {
        debug_assert_eq!(self % b, 0);
        self / b
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, b: &Self) -> Self {
        self / b
    }
}

pub(crate) fn rank_rational(a: Dense<i64>) -> usize {
    if let Some(r) = bareiss_rank(a.clone()) {
        return r;
    }
    let big = Dense {
        rows: a.rows,
        cols: a.cols,
        data: a.data.into_iter().map(BigInt::from).collect(),
    };
    bareiss_rank(big).expect("big-integer elimination cannot overflow")
}

/// Inverse modulo a prime `p` via the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    t0.rem_euclid(p as i64) as u64
}

/// Rank over 𝔽_p. `p < 2^31`, so products of reduced residues fit in `u64`.
pub(crate) fn rank_mod_p(a: &Dense<i64>, p: u32) -> usize {
    let p = p as u64;
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<u64> = a.data.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                m.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(m[r * cols + c], p);
        for j in c..cols {
            m[r * cols + j] = m[r * cols + j] * inv % p;
        }
        for i in r + 1..rows {
            let f = m[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f * m[r * cols + j] % p;
                m[i * cols + j] = (m[i * cols + j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Dense<i64> {
        let cols = rows.first().map_or(0, |r| r.len());
        Dense {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: full rank over Q and F_3, rank 1 over F_2.
        let m = dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(rank_rational(m.clone()), 2);
        assert_eq!(rank_mod_p(&m, 3), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
    }

    #[test]
    fn rank_deficient_with_skipped_columns() {
        let m = dense(&[&[0, 1, 2, 3], &[0, 2, 4, 6], &[0, 0, 0, 1], &[0, 1, 2, 4]]);
        assert_eq!(rank_rational(m.clone()), 2);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn modular_inverse() {
        for p in [2u64, 3, 7, 2_147_483_647] {
            for a in [1u64, 2, p - 1] {
                if a % p == 0 {
                    continue;
                }
                assert_eq!(a % p * inv_mod(a % p, p) % p, 1);
            }
        }
    }

    #[test]
    fn rational_rank_survives_overflow() {
        let big = i64::MAX / 3;
        let m = dense(&[&[big, big - 1, 1], &[big - 1, big, 2], &[1, 1, 1]]);
        assert_eq!(rank_rational(m), 3);
    }
}
