use super::{BinaryMatrix, MatrixError};
use crate::subset::EdgeSubset;

/// Determinant of the principal submatrix `m[x]` over GF(2); the empty
/// determinant is 1.
///
/// Rows are masked to `x` and eliminated in place, so no submatrix is
/// materialized.
pub fn det_gf2(m: &BinaryMatrix, x: EdgeSubset) -> u8 {
    let mask = x.bits();
    let mut rows = [0u64; 64];
    let mut k = 0;
    for i in x.indices() {
        rows[k] = m.rows[i - 1] & mask;
        k += 1;
    }
    let rows = &mut rows[..k];
    let mut cols = mask;
    for done in 0..k {
        let bit = 1u64 << cols.trailing_zeros();
        cols &= cols - 1;
        let Some(p) = (done..k).find(|&r| rows[r] & bit != 0) else {
            return 0;
        };
        rows.swap(done, p);
        let pivot = rows[done];
        for r in &mut rows[done + 1..] {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
    }
    1
}

/// Inverse of a `k x k` matrix given as bit rows, or `None` when singular.
fn invert(rows: &[u64]) -> Option<Vec<u64>> {
    let k = rows.len();
    let mut a = rows.to_vec();
    let mut inv: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
    for c in 0..k {
        let p = (c..k).find(|&r| a[r] >> c & 1 == 1)?;
        a.swap(c, p);
        inv.swap(c, p);
        for r in 0..k {
            if r != c && a[r] >> c & 1 == 1 {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
        }
    }
    Some(inv)
}

/// Pivot of `m` on `x` over GF(2):
///
/// ```text
/// [P Q]      [P^-1        P^-1 Q      ]
/// [R S]  ->  [R P^-1   S + R P^-1 Q   ]
/// ```
///
/// with `P = m[x]`. Rows and columns keep their original positions.
pub fn pivot_gf2(m: &BinaryMatrix, x: EdgeSubset) -> Result<BinaryMatrix, MatrixError> {
    let n = m.n();
    super::check_subset(x, n)?;
    let xs: Vec<usize> = x.indices().map(|i| i - 1).collect();
    let ys: Vec<usize> = (0..n).filter(|&i| !x.has_bit(i)).collect();
    let k = xs.len();
    // P in local coordinates: bit b of row a is m[xs[a]][xs[b]]
    let p: Vec<u64> = xs
        .iter()
        .map(|&i| xs.iter().enumerate().fold(0u64, |acc, (b, &j)| acc | (m.get(i, j) as u64) << b))
        .collect();
    let pinv = invert(&p).ok_or(MatrixError::SingularPivotBlock)?;
    let local = |row: u64, b: usize| row >> b & 1 == 1;

    let mut out = BinaryMatrix::zero(n);
    for a in 0..k {
        for b in 0..k {
            out.set(xs[a], xs[b], local(pinv[a], b));
        }
    }
    // P^-1 Q
    for a in 0..k {
        for &y in &ys {
            let v = (0..k).filter(|&c| local(pinv[a], c) && m.get(xs[c], y)).count() % 2 == 1;
            out.set(xs[a], y, v);
        }
    }
    // R P^-1
    let rp: Vec<Vec<bool>> = ys
        .iter()
        .map(|&y| {
            (0..k)
                .map(|b| (0..k).filter(|&c| m.get(y, xs[c]) && local(pinv[c], b)).count() % 2 == 1)
                .collect()
        })
        .collect();
    for (r, &y) in ys.iter().enumerate() {
        for b in 0..k {
            out.set(y, xs[b], rp[r][b]);
        }
        for &z in &ys {
            let corr = (0..k).filter(|&c| rp[r][c] && m.get(xs[c], z)).count() % 2 == 1;
            out.set(y, z, m.get(y, z) ^ corr);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{adjacency, det_int, unsymbolic_skew_adjacency, DetBackend};
    use crate::testutil::{arb_rotation, example};
    use crate::rotation::Bouquet;
    use proptest::prelude::*;

    fn leibniz_mod2(m: &BinaryMatrix, x: EdgeSubset) -> u8 {
        // permanent == determinant over GF(2); brute-force over permutations
        let idx: Vec<usize> = x.indices().map(|i| i - 1).collect();
        fn go(m: &BinaryMatrix, idx: &[usize], row: usize, used: u64) -> u8 {
            if row == idx.len() {
                return 1;
            }
            let mut acc = 0;
            for (c, &j) in idx.iter().enumerate() {
                if used >> c & 1 == 0 && m.get(idx[row], j) {
                    acc ^= go(m, idx, row + 1, used | 1 << c);
                }
            }
            acc
        }
        go(m, &idx, 0, 0)
    }

    #[test]
    fn example_determinants() {
        let m = adjacency(&example());
        assert_eq!(det_gf2(&m, EdgeSubset::from_indices([2, 3])), 1);
        assert_eq!(det_gf2(&m, EdgeSubset::from_indices([2])), 0);
        assert_eq!(det_gf2(&m, EdgeSubset::EMPTY), 1);
        assert_eq!(det_gf2(&BinaryMatrix::zero(0), EdgeSubset::EMPTY), 1);
    }

    #[test]
    fn pivot_examples() {
        let m = BinaryMatrix::from_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(
            pivot_gf2(&m, EdgeSubset::singleton(1)).unwrap(),
            BinaryMatrix::from_rows(&[&[1, 1], &[1, 1]])
        );
        assert_eq!(pivot_gf2(&m, EdgeSubset::EMPTY).unwrap(), m);
        let one = BinaryMatrix::from_rows(&[&[1]]);
        assert_eq!(pivot_gf2(&one, EdgeSubset::singleton(1)).unwrap(), one);
        assert_eq!(
            pivot_gf2(&m, EdgeSubset::singleton(2)),
            Err(MatrixError::SingularPivotBlock)
        );
        assert!(matches!(
            pivot_gf2(&m, EdgeSubset::singleton(3)),
            Err(MatrixError::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn pivot_on_full_set_inverts() {
        let m = BinaryMatrix::from_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let full = EdgeSubset::full(3);
        let inv = pivot_gf2(&m, full).unwrap();
        // m * inv == I
        for i in 0..3 {
            for j in 0..3 {
                let v = (0..3).filter(|&c| m.get(i, c) && inv.get(c, j)).count() % 2 == 1;
                assert_eq!(v, i == j);
            }
        }
    }

    proptest! {
        #[test]
        fn matches_permutation_expansion(r in arb_rotation(7), mask in any::<u64>()) {
            let b = Bouquet::new(r);
            let m = adjacency(&b);
            let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
            prop_assert_eq!(det_gf2(&m, x), leibniz_mod2(&m, x));
        }

        #[test]
        fn integer_determinant_reduces_to_gf2(r in arb_rotation(10), mask in any::<u64>()) {
            let b = Bouquet::new(r);
            let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
            let d = det_int(&unsymbolic_skew_adjacency(&b), x, DetBackend::Exact).unwrap();
            prop_assert_eq!(d.rem_euclid(2) as u8, det_gf2(&adjacency(&b), x));
        }

        #[test]
        fn pivot_is_involutive_and_symmetric(r in arb_rotation(8), mask in any::<u64>()) {
            let b = Bouquet::new(r);
            let m = adjacency(&b);
            let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
            if det_gf2(&m, x) == 1 {
                let p = pivot_gf2(&m, x).unwrap();
                prop_assert!(p.is_symmetric());
                prop_assert_eq!(pivot_gf2(&p, x).unwrap(), m);
            } else {
                prop_assert_eq!(pivot_gf2(&m, x), Err(MatrixError::SingularPivotBlock));
            }
        }
    }
}
