//! The explicit integer matrices of the local model: the generator matrices
//! of the cones `σ_2^(n)` and `σ_3^(n)`, the base change `Q`, the projection
//! `Π`, and the symmetric group action on `N = Z^{n+1}`.

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

/// `(n+1) × 2^n`: rows 0 and 1 alternate `1 0` and `0 1`; row `k ≥ 2` is
/// bit `k-1` of the column index.
pub fn build_c2(n: usize) -> Result<IntMatrix> {
    check_n(n, 20)?;
    let cols = 1usize << n;
    let mut m = IntMatrix::zeros(n + 1, cols);
    for c in 0..cols {
        m[(0, c)] = (c % 2 == 0) as i64;
        m[(1, c)] = (c % 2 == 1) as i64;
        for k in 2..=n {
            m[(k, c)] = (c >> (k - 1) & 1) as i64;
        }
    }
    Ok(m)
}

/// `(2n+1) × 3^n`: rows 0..3 indicate the lowest base-3 digit of the column
/// index; then each higher digit `k` contributes the rows `[digit = 1]` and
/// `[digit = 2]`.
pub fn build_c3(n: usize) -> Result<IntMatrix> {
    check_n(n, 12)?;
    let cols = 3usize.pow(n as u32);
    let mut m = IntMatrix::zeros(2 * n + 1, cols);
    for c in 0..cols {
        let digit = |k: usize| c / 3usize.pow(k as u32) % 3;
        m[(digit(0), c)] = 1;
        for k in 1..n {
            match digit(k) {
                1 => m[(2 * k + 1, c)] = 1,
                2 => m[(2 * k + 2, c)] = 1,
                _ => {}
            }
        }
    }
    Ok(m)
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max,
        });
    }
    Ok(())
}

/// The `(n+1) × (n+1)` base change: identity plus `Q[0][1] = 1` and `-1` in
/// the last column of every row but the last.
pub fn q_matrix(n: usize) -> Result<IntMatrix> {
    check_n(n, 64)?;
    let mut q = IntMatrix::identity(n + 1);
    if n >= 2 {
        q[(0, 1)] = 1;
    }
    for i in 0..n {
        q[(i, n)] -= 1;
    }
    Ok(q)
}

/// `Π = p ∘ Q : Z^{n+1} → Z^{n-1}`, with `p` the projection to the middle
/// coordinates; `Π(x)_i = x_i − x_n`.
pub fn projection_pi(n: usize) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 2,
            max: 64,
        });
    }
    let q = q_matrix(n)?;
    Ok(q.block(1, n, 0, n + 1))
}

/// Generators of the cone `δ^(n)`: `e_0` and the vectors `e_1 + ... + e_j`.
pub fn delta_generators(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![unit(n + 1, 0)];
    for j in 1..=n {
        out.push((0..=n).map(|i| (i >= 1 && i <= j) as i64).collect());
    }
    out
}

fn unit(d: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// Matrix of the adjacent transposition `(k k+1)` on `N = Z^{n+1}`.
pub fn sn_generator_n(n: usize, k: usize) -> Result<IntMatrix> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("no transposition ({k} {}) in S_{n}", k + 1)));
    }
    let mut m = IntMatrix::identity(n + 1);
    if k == 1 {
        m[(0, 1)] = 1;
        m[(0, 2)] = -1;
        m[(1, 1)] = 0;
        m[(1, 2)] = 1;
        m[(2, 1)] = 1;
        m[(2, 2)] = 0;
    } else {
        m[(k, k)] = 0;
        m[(k + 1, k + 1)] = 0;
        m[(k, k + 1)] = 1;
        m[(k + 1, k)] = 1;
    }
    Ok(m)
}

/// The generators `(1 2), (2 3), ..., (n-1 n)` acting on `N`.
pub fn sn_action_n(n: usize) -> Result<Vec<IntMatrix>> {
    (1..n).map(|k| sn_generator_n(n, k)).collect()
}

/// Matrix of an arbitrary permutation, as the product along a reduced word
/// in the adjacent transpositions.
pub fn sn_matrix_n(sigma: &Permutation) -> Result<IntMatrix> {
    word_product(sigma, |k| sn_generator_n(sigma.degree(), k))
}

/// Evaluates `σ = s_{i_1} ⋯ s_{i_m}` with `gen(k)` the image of `(k k+1)`.
pub(crate) fn word_product(
    sigma: &Permutation,
    gen: impl Fn(usize) -> Result<IntMatrix>,
) -> Result<IntMatrix> {
    let r = sigma.degree();
    let d = gen(1).map(|g| g.rows()).unwrap_or(0);
    let mut current = sigma.one_line().to_vec();
    let mut result = IntMatrix::identity(d);
    // peel descents off the right: σ = σ' ∘ s_i
    while let Some(i) = (0..r.saturating_sub(1)).find(|&i| current[i] > current[i + 1]) {
        current.swap(i, i + 1);
        result = gen(i + 1)?.checked_mul(&result)?;
    }
    Ok(result)
}

/// The functional `g = (1, 1, 0, ..., 0)` on `N`.
pub fn multiplicity_functional(n: usize) -> Vec<i64> {
    (0..=n).map(|i| (i < 2) as i64).collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows[0].len(), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn c2_at_three_matches_display() {
        assert_eq!(
            build_c2(3).unwrap(),
            m(&[
                &[1, 0, 1, 0, 1, 0, 1, 0],
                &[0, 1, 0, 1, 0, 1, 0, 1],
                &[0, 0, 1, 1, 0, 0, 1, 1],
                &[0, 0, 0, 0, 1, 1, 1, 1],
            ])
        );
        assert_eq!(build_c2(1).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn c3_small_cases() {
        assert_eq!(build_c3(1).unwrap(), IntMatrix::identity(3));
        let c = build_c3(2).unwrap();
        assert_eq!(c.row(3), &[0, 0, 0, 1, 1, 1, 0, 0, 0]);
        assert_eq!(c.row(4), &[0, 0, 0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(c.row(0), &[1, 0, 0, 1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn c2_has_full_rank() {
        for n in 1..=5 {
            assert_eq!(build_c2(n).unwrap().rank(), n + 1);
        }
    }

    #[test]
    fn transposition_one_two_at_n_two() {
        assert_eq!(
            sn_generator_n(2, 1).unwrap(),
            m(&[&[1, 1, -1], &[0, 0, 1], &[0, 1, 0]])
        );
    }

    #[test]
    fn generators_are_involutions() {
        for n in 2..=6 {
            for g in sn_action_n(n).unwrap() {
                assert!((&g * &g).is_identity());
            }
        }
    }

    #[test]
    fn permutation_matrices_form_a_representation() {
        for n in 2..=4 {
            let all = Permutation::all(n);
            let mats: Vec<IntMatrix> = all.iter().map(|p| sn_matrix_n(p).unwrap()).collect();
            let distinct: BTreeSet<Vec<Vec<i64>>> = mats.iter().map(|a| a.to_rows()).collect();
            assert_eq!(distinct.len(), all.len());
            for (a, pa) in all.iter().zip(&mats) {
                for (b, pb) in all.iter().zip(&mats) {
                    assert_eq!(sn_matrix_n(&a.compose(b)).unwrap(), pa * pb);
                }
            }
        }
    }

    #[test]
    fn q_and_pi_shapes() {
        assert_eq!(
            q_matrix(3).unwrap(),
            m(&[&[1, 1, 0, -1], &[0, 1, 0, -1], &[0, 0, 1, -1], &[0, 0, 0, 1]])
        );
        assert_eq!(projection_pi(2).unwrap(), m(&[&[0, 1, -1]]));
        assert_eq!(q_matrix(3).unwrap().det().unwrap(), 1.into());
    }

    #[test]
    fn delta_generators_at_three() {
        assert_eq!(
            delta_generators(3),
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 1, 1, 1]]
        );
    }
}
