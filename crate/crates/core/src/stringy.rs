//! The stringy E-polynomial: untwisted sector plus all twisted sectors.

use serde::Serialize;

use crate::combinatorics::{AngleType, Partition};
use crate::error::{Error, Result};
use crate::exactalg::LPoly;
use crate::sectors::{enumerate_sectors_with, sector_polynomial, EnumerationOptions, Sector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StringyResult {
    pub n: usize,
    pub total: LPoly,
    pub untwisted: LPoly,
    pub sectors: Vec<Sector>,
}

impl StringyResult {
    /// Sum of the sectors sharing each `(λ, θ)`, in enumeration order.
    pub fn subtotals(&self) -> Vec<(Partition, AngleType, LPoly)> {
        let mut out: Vec<(Partition, AngleType, LPoly)> = Vec::new();
        for s in &self.sectors {
            match out.last_mut() {
                Some((l, t, acc)) if *l == s.lambda && *t == s.theta => {
                    *acc = &*acc + &sector_polynomial(s);
                }
                _ => out.push((s.lambda.clone(), s.theta.clone(), sector_polynomial(s))),
            }
        }
        out
    }

    /// Sum of the sectors for one `λ`.
    pub fn lambda_total(&self, lambda: &Partition) -> LPoly {
        self.sectors
            .iter()
            .filter(|s| &s.lambda == lambda)
            .map(sector_polynomial)
            .sum()
    }
}

/// `E(Z^(n)) = L^{n+2} (1 + L)^{n-1}`.
pub fn untwisted(n: usize) -> Result<LPoly> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    Ok(LPoly::from_coeffs(vec![1, 1]).pow(n as u32 - 1).shift(n + 2))
}

pub fn stringy_e(n: usize) -> Result<StringyResult> {
    stringy_e_with(n, EnumerationOptions::default())
}

pub fn stringy_e_with(n: usize, options: EnumerationOptions) -> Result<StringyResult> {
    let untwisted = untwisted(n)?;
    let sectors = enumerate_sectors_with(n, options)?;
    let total = sectors
        .iter()
        .fold(untwisted.clone(), |acc, s| &acc + &sector_polynomial(s));
    Ok(StringyResult {
        n,
        total,
        untwisted,
        sectors,
    })
}

/// `E_st(Z^(n))` for `2 ≤ n ≤ n_max`.
pub fn generating_table(n_max: usize) -> Result<Vec<(usize, LPoly)>> {
    generating_table_with(n_max, EnumerationOptions::default())
}

pub fn generating_table_with(
    n_max: usize,
    options: EnumerationOptions,
) -> Result<Vec<(usize, LPoly)>> {
    if n_max < 2 {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            min: 2,
            max: usize::MAX,
        });
    }
    (2..=n_max)
        .map(|n| Ok((n, stringy_e_with(n, options)?.total)))
        .collect()
}
