//! Exact integer determinants by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{IntegerSkewMatrix, MatrixError};
use crate::subset::EdgeSubset;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DetBackend {
    /// Checked `i128` arithmetic; overflow is an error.
    Fixed128,
    /// `i128` first, arbitrary precision when an intermediate overflows.
    #[default]
    Exact,
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a dense integer matrix.
pub fn det_int_dense(rows: &[Vec<i64>], backend: DetBackend) -> Result<i128, MatrixError> {
    let small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    if let Some(d) = bareiss_i128(small) {
        return Ok(d);
    }
    match backend {
        DetBackend::Fixed128 => Err(MatrixError::Overflow),
        DetBackend::Exact => {
            let big = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            bareiss_big(big).to_i128().ok_or(MatrixError::Overflow)
        }
    }
}

/// `det(a[x])`, exact.
pub fn det_int(a: &IntegerSkewMatrix, x: EdgeSubset, backend: DetBackend) -> Result<i128, MatrixError> {
    super::check_subset(x, a.n())?;
    let idx: Vec<usize> = x.indices().map(|i| i - 1).collect();
    let rows: Vec<Vec<i64>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| a.get(i, j) as i64).collect())
        .collect();
    det_int_dense(&rows, backend)
}

/// `det(I + a)`.
pub fn det_identity_plus(a: &IntegerSkewMatrix, backend: DetBackend) -> Result<i128, MatrixError> {
    let mut rows = a.rows();
    for (i, r) in rows.iter_mut().enumerate() {
        r[i] += 1;
    }
    det_int_dense(&rows, backend)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::unsymbolic_skew_adjacency;
    use crate::rotation::Bouquet;
    use crate::testutil::{arb_rotation, example};
    use proptest::prelude::*;

    // Leibniz expansion over all permutations; independent of elimination.
    fn leibniz(rows: &[Vec<i64>]) -> i128 {
        fn go(rows: &[Vec<i64>], r: usize, used: &mut Vec<bool>, sign: i128, acc: i128) -> i128 {
            let n = rows.len();
            if r == n {
                return sign * acc;
            }
            let mut total = 0;
            for c in 0..n {
                if used[c] || rows[r][c] == 0 {
                    continue;
                }
                // inversions contributed by placing c after the earlier rows
                let inv = (c + 1..n).filter(|&d| used[d]).count();
                let s = if inv % 2 == 0 { sign } else { -sign };
                used[c] = true;
                total += go(rows, r + 1, used, s, acc * rows[r][c] as i128);
                used[c] = false;
            }
            total
        }
        go(rows, 0, &mut vec![false; rows.len()], 1, 1)
    }

    fn sub(a: &IntegerSkewMatrix, x: EdgeSubset) -> Vec<Vec<i64>> {
        let idx: Vec<usize> = x.indices().map(|i| i - 1).collect();
        idx.iter().map(|&i| idx.iter().map(|&j| a.get(i, j) as i64).collect()).collect()
    }

    #[test]
    fn example_coefficients() {
        let a = unsymbolic_skew_adjacency(&example());
        let d = |v: &[usize]| det_int(&a, EdgeSubset::from_indices(v.iter().copied()), DetBackend::Exact).unwrap();
        assert_eq!(d(&[4, 5]), 2);
        assert_eq!(d(&[1, 2, 3, 4, 5]), 3);
        assert_eq!(d(&[1]), 1);
        assert_eq!(d(&[]), 1);
    }

    #[test]
    fn overflow_is_detected_not_wrapped() {
        // |det| is near 2^800: too big for either backend.
        let n = 20;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1 << 40 } else { (i as i64 * 7 + j as i64 * 3) % 5 - 2 }).collect())
            .collect();
        assert_eq!(det_int_dense(&rows, DetBackend::Fixed128), Err(MatrixError::Overflow));
        assert_eq!(det_int_dense(&rows, DetBackend::Exact), Err(MatrixError::Overflow));
        // Intermediates reach 2^160, the determinant itself only 2^120.
        let modest: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { 1 << 40 } else { 1 }).collect())
            .collect();
        assert_eq!(det_int_dense(&modest, DetBackend::Fixed128), Err(MatrixError::Overflow));
        let exact = det_int_dense(&modest, DetBackend::Exact).unwrap();
        assert_eq!(exact, leibniz(&modest));
    }

    #[test]
    fn bigint_path_agrees() {
        let rows = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        let big = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(bareiss_big(big), BigInt::from(4));
        assert_eq!(det_int_dense(&rows, DetBackend::Fixed128), Ok(4));
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(r in arb_rotation(7), mask in any::<u64>()) {
            let b = Bouquet::new(r);
            let a = unsymbolic_skew_adjacency(&b);
            let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
            prop_assert_eq!(det_int(&a, x, DetBackend::Fixed128).unwrap(), leibniz(&sub(&a, x)));
        }

        #[test]
        fn skew_part_has_square_determinant(r in arb_rotation(10), mask in any::<u64>()) {
            let b = Bouquet::new(r);
            let a = unsymbolic_skew_adjacency(&b);
            let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
            let x = x.difference(EdgeSubset::from_indices(b.non_orientable_loops()));
            let d = det_int(&a, x, DetBackend::Exact).unwrap();
            prop_assert!(d >= 0);
            if x.len() % 2 == 1 {
                prop_assert_eq!(d, 0);
            }
            let root = (d as f64).sqrt().round() as i128;
            prop_assert_eq!(root * root, d);
        }

        #[test]
        fn at_most_one_twist_gives_zero_or_one(r in arb_rotation(9), mask in any::<u64>()) {
            let b = Bouquet::new(r);
            if b.non_orientable_loops().count() <= 1 {
                let a = unsymbolic_skew_adjacency(&b);
                let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
                let d = det_int(&a, x, DetBackend::Exact).unwrap();
                prop_assert!(d == 0 || d == 1);
            }
        }

        #[test]
        fn encodings_preserve_subset_determinants(r in arb_rotation(8), k in 0usize..16, e in 1usize..9, mask in any::<u64>()) {
            let b = Bouquet::new(r.clone());
            let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
            let d = det_int(&unsymbolic_skew_adjacency(&b), x, DetBackend::Exact).unwrap();
            let mut others = vec![r.rotated(k), r.reversed()];
            if e <= r.n() {
                others.push(r.swap_ends(e));
            }
            for o in others {
                let u = unsymbolic_skew_adjacency(&Bouquet::new(o));
                prop_assert_eq!(det_int(&u, x, DetBackend::Exact).unwrap(), d);
            }
        }
    }
}
