//! Symmetric functions in the complete homogeneous basis: the character
//! `χ[A_{n-1}, q]` of the cohomology of the Coxeter toric variety, the Hall
//! pairing, and the E-polynomials of its quotients by Young subgroups.

mod hexpr;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

pub use hexpr::HExpr;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactalg::LPoly;

/// `χ[A_{n-1}, q]` by the recursion
/// `χ_n = h_n + Σ_{m=2}^{n} (q + ... + q^{m-1}) h_m χ_{n-m}`, `χ_0 = 1`.
pub fn chi_a(n: usize) -> HExpr {
    static CACHE: OnceLock<Mutex<Vec<HExpr>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![HExpr::one()]));
    let mut table = cache.lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let k = table.len();
        let mut chi = HExpr::h(k);
        for m in 2..=k {
            let weight = LPoly::from_coeffs((0..m).map(|i| (i > 0) as i64).collect());
            chi = &chi + &(&HExpr::h(m) * &table[k - m]).scale(&weight);
        }
        table.push(chi);
    }
    table[n].clone()
}

/// Number of nonnegative integer matrices with row sums `rows` and column
/// sums `cols`, i.e. `⟨h_rows, h_cols⟩`.
pub fn contingency_count(rows: &[usize], cols: &[usize]) -> u128 {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return 0;
    }
    static MEMO: OnceLock<Mutex<HashMap<(Vec<usize>, Vec<usize>), u128>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let mut rows: Vec<usize> = rows.iter().copied().filter(|&x| x > 0).collect();
    let mut cols: Vec<usize> = cols.iter().copied().filter(|&x| x > 0).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    cols.sort_unstable_by(|a, b| b.cmp(a));
    // the count is symmetric; fill along the shorter side
    if cols.len() < rows.len() {
        std::mem::swap(&mut rows, &mut cols);
    }
    count_rec(&rows, cols, memo)
}

fn count_rec(
    rows: &[usize],
    cols: Vec<usize>,
    memo: &Mutex<HashMap<(Vec<usize>, Vec<usize>), u128>>,
) -> u128 {
    let Some((&first, rest)) = rows.split_first() else {
        return cols.iter().all(|&c| c == 0) as u128;
    };
    if rest.is_empty() {
        return 1;
    }
    let key = (rows.to_vec(), cols.clone());
    if let Some(&v) = memo.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return v;
    }
    let mut total = 0u128;
    let mut remaining = cols.clone();
    fill_row(0, first, &cols, &mut remaining, &mut |left| {
        let mut next: Vec<usize> = left.iter().copied().filter(|&c| c > 0).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += count_rec(rest, next, memo);
    });
    memo.lock().unwrap_or_else(|e| e.into_inner()).insert(key, total);
    total
}

/// Enumerates the ways of writing `left` as a sum of entries bounded by
/// `cols[i..]`, calling `visit` with the residual column sums.
fn fill_row(
    i: usize,
    left: usize,
    cols: &[usize],
    residual: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if i == cols.len() {
        if left == 0 {
            visit(residual);
        }
        return;
    }
    let capacity: usize = cols[i + 1..].iter().sum();
    let lo = left.saturating_sub(capacity);
    for take in lo..=left.min(cols[i]) {
        residual[i] = cols[i] - take;
        fill_row(i + 1, left - take, cols, residual, visit);
    }
    residual[i] = cols[i];
}

/// `⟨h_μ, X⟩` with `q` read as `L`.
pub fn hall_inner(mu: &Partition, x: &HExpr) -> Result<LPoly> {
    let r = mu.size();
    if let Some(d) = x.homogeneous_degree()? {
        if d != r {
            return Err(Error::Inhomogeneous(r));
        }
    }
    let mut acc = LPoly::zero();
    for (nu, coeff) in x.terms() {
        let c = contingency_count(mu.parts(), nu);
        if c > 0 {
            acc = &acc + &coeff.scale(&BigInt::from(c));
        }
    }
    Ok(acc)
}

/// `E(X(A_{r-1}) / S_μ) = ⟨h_μ, χ[A_{r-1}, L]⟩`.
pub fn quotient_e(r: usize, mu: &Partition) -> Result<LPoly> {
    if mu.size() != r {
        return Err(Error::InvalidArgument(format!("{mu} is not a partition of {r}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, LPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(mu.parts()) {
        return Ok(v.clone());
    }
    let value = hall_inner(mu, &chi_a(r))?;
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(mu.parts().to_vec(), value.clone());
    Ok(value)
}

/// Product of [`quotient_e`] over the components `(r_j, μ_j)`.
pub fn component_e(components: &[(usize, Partition)]) -> Result<LPoly> {
    components
        .iter()
        .try_fold(LPoly::one(), |acc, (r, mu)| Ok(&acc * &quotient_e(*r, mu)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn lam(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn brute_count(rows: &[usize], cols: &[usize]) -> u128 {
        // enumerate entry by entry, bounded by the row sums
        fn go(rows: &mut Vec<usize>, cols: &mut Vec<usize>, i: usize, j: usize) -> u128 {
            if i == rows.len() {
                return cols.iter().all(|&c| c == 0) as u128;
            }
            if j + 1 == cols.len() {
                let v = rows[i];
                if v > cols[j] {
                    return 0;
                }
                cols[j] -= v;
                let saved = rows[i];
                rows[i] = 0;
                let out = go(rows, cols, i + 1, 0);
                rows[i] = saved;
                cols[j] += v;
                return out;
            }
            let mut total = 0;
            for v in 0..=rows[i].min(cols[j]) {
                rows[i] -= v;
                cols[j] -= v;
                total += go(rows, cols, i, j + 1);
                rows[i] += v;
                cols[j] += v;
            }
            total
        }
        go(&mut rows.to_vec(), &mut cols.to_vec(), 0, 0)
    }

    #[test]
    fn character_small_cases() {
        assert_eq!(chi_a(1).render(), "h1");
        assert_eq!(chi_a(2).render(), "h2 + h2*q");
        assert_eq!(chi_a(3).render(), "h3 + (h1*h2 + h3)*q + h3*q^2");
        assert_eq!(
            chi_a(4).render(),
            "h4 + (h2^2 + h1*h3 + h4)*q + (h2^2 + h1*h3 + h4)*q^2 + h4*q^3"
        );
    }

    #[test]
    fn character_is_homogeneous() {
        for n in 1..=9 {
            assert_eq!(chi_a(n).homogeneous_degree(), Ok(Some(n)));
        }
    }

    #[test]
    fn pairing_values() {
        assert_eq!(contingency_count(&[1, 2], &[3]), 1);
        assert_eq!(contingency_count(&[1, 2], &[1, 2]), 2);
        assert_eq!(contingency_count(&[1, 1, 1], &[1, 1, 1]), 6);
        assert_eq!(contingency_count(&[2], &[1]), 0);
    }

    #[test]
    fn pairing_matches_brute_force_and_is_symmetric() {
        for r in 1..=6 {
            let ps = partitions_of(r);
            for a in &ps {
                for b in &ps {
                    let c = contingency_count(a.parts(), b.parts());
                    assert_eq!(c, brute_count(a.parts(), b.parts()), "{a} {b}");
                    assert_eq!(c, contingency_count(b.parts(), a.parts()));
                }
            }
        }
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let x = &HExpr::h(1) + &HExpr::h(2);
        assert!(hall_inner(&lam(&[2]), &x).is_err());
        assert_eq!(hall_inner(&lam(&[3]), &HExpr::h(2)), Err(Error::Inhomogeneous(3)));
    }

    #[test]
    fn quotient_values() {
        assert_eq!(quotient_e(2, &lam(&[2])).unwrap(), LPoly::from_coeffs(vec![1, 1]));
        assert_eq!(quotient_e(3, &lam(&[2, 1])).unwrap(), LPoly::from_coeffs(vec![1, 3, 1]));
        assert_eq!(quotient_e(1, &lam(&[1])).unwrap(), LPoly::one());
        assert!(quotient_e(3, &lam(&[2])).is_err());
    }

    #[test]
    fn full_quotient_is_binomial() {
        let one_plus_l = LPoly::from_coeffs(vec![1, 1]);
        for n in 1..=7 {
            assert_eq!(quotient_e(n, &lam(&[n])).unwrap(), one_plus_l.pow(n as u32 - 1));
        }
    }

    #[test]
    fn trivial_quotient_counts_chambers() {
        // Σ coefficients of E(X(A_{n-1})) is the number of torus fixed points
        for n in 1..=7 {
            let e = quotient_e(n, &Partition::ones(n)).unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(e.eval(1), BigInt::from(fact));
        }
    }

    #[test]
    fn quotients_are_palindromic() {
        for r in 1..=6 {
            for mu in partitions_of(r) {
                let e = quotient_e(r, &mu).unwrap();
                assert!(e.is_palindromic(), "{r} {mu}: {e}");
                assert_eq!(e.degree(), Some(r - 1));
            }
        }
    }

    #[test]
    fn component_products() {
        let two = (2, lam(&[2]));
        assert_eq!(
            component_e(&[two.clone(), two]).unwrap(),
            LPoly::from_coeffs(vec![1, 2, 1])
        );
        assert_eq!(component_e(&[(1, lam(&[1])), (1, lam(&[1]))]).unwrap(), LPoly::one());
        assert_eq!(component_e(&[]).unwrap(), LPoly::one());
    }
}
