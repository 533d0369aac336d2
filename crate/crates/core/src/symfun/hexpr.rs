use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::LPoly;

/// A symmetric function in the complete homogeneous basis with coefficients
/// polynomial in `q`. Keys are h-monomials with parts sorted decreasingly.
#[derive(Clone, Default, PartialEq, Eq, Serialize)]
pub struct HExpr {
    terms: BTreeMap<Vec<usize>, LPoly>,
}

impl HExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Vec::new(), LPoly::one())
    }

    /// `coeff · h_parts`; zero parts are dropped since `h_0 = 1`.
    pub fn term(mut parts: Vec<usize>, coeff: LPoly) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(parts, coeff);
        }
        HExpr { terms }
    }

    /// `h_m`.
    pub fn h(m: usize) -> Self {
        Self::term(vec![m], LPoly::one())
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, LPoly> {
        &self.terms
    }

    pub fn coeff(&self, parts: &[usize]) -> LPoly {
        let mut key = parts.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&key).cloned().unwrap_or_else(LPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all h-monomials; `Err` if they differ. The zero
    /// expression has every degree, reported as `None`.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut degrees = self.terms.keys().map(|k| k.iter().sum::<usize>());
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        if degrees.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::Inhomogeneous(first))
        }
    }

    pub fn scale(&self, c: &LPoly) -> HExpr {
        let mut out = HExpr::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    fn add_term(&mut self, key: Vec<usize>, coeff: LPoly) {
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.get(&key) {
            Some(s) => s + &coeff,
            None => coeff,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    /// Renders as `h3 + (h1*h2 + h3)*q + h3*q^2`: grouped by powers of `q`,
    /// factors ascending within a monomial.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let top = self.terms.values().filter_map(LPoly::degree).max().unwrap_or(0);
        let mut groups = Vec::new();
        for k in 0..=top {
            let members: Vec<(BigInt, String)> = self
                .terms
                .iter()
                .map(|(key, c)| (c.coeff(k), monomial(key)))
                .filter(|(c, _)| !c.is_zero())
                .collect();
            if members.is_empty() {
                continue;
            }
            let mut body = String::new();
            for (i, (c, m)) in members.iter().enumerate() {
                if i > 0 {
                    body.push_str(if c.is_negative() { " - " } else { " + " });
                } else if c.is_negative() {
                    body.push('-');
                }
                let a = c.abs();
                match (a.is_one(), m.is_empty()) {
                    (true, true) => body.push('1'),
                    (true, false) => body.push_str(m),
                    (false, true) => body.push_str(&a.to_string()),
                    (false, false) => body.push_str(&format!("{a}*{m}")),
                }
            }
            let q = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            groups.push(match (k, members.len()) {
                (0, _) => body,
                (_, 1) => format!("{body}*{q}"),
                _ => format!("({body})*{q}"),
            });
        }
        groups.join(" + ")
    }
}

fn monomial(key: &[usize]) -> String {
    let mut parts = key.to_vec();
    parts.sort_unstable();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        out.push(match j - i {
            1 => format!("h{}", parts[i]),
            e => format!("h{}^{e}", parts[i]),
        });
        i = j;
    }
    out.join("*")
}

impl std::ops::Add for &HExpr {
    type Output = HExpr;
    fn add(self, rhs: &HExpr) -> HExpr {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl std::ops::Mul for &HExpr {
    type Output = HExpr;
    fn mul(self, rhs: &HExpr) -> HExpr {
        let mut out = HExpr::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                let mut key: Vec<usize> = ka.iter().chain(kb).copied().collect();
                key.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(key, va * vb);
            }
        }
        out
    }
}

impl fmt::Display for HExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for HExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HExpr({})", self.render())
    }
}
