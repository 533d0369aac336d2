use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::{multiplicity_partition, Partition, SetPartition};
use crate::error::{Error, Result};

/// An angle type `θ = (a_1/λ_1, ..., a_r/λ_r)` with `0 ≤ a_j < λ_j`.
///
/// Entries are exact rationals; `θ_j` stands for the root of unity
/// `exp(2πiθ_j)`, which is never evaluated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AngleType {
    theta: Vec<Rational64>,
}

impl AngleType {
    /// Builds `θ_j = numerators[j] / λ_j`, validating `0 ≤ a_j < λ_j`.
    pub fn from_numerators(lambda: &Partition, numerators: &[i64]) -> Result<Self> {
        if numerators.len() != lambda.len() {
            return Err(Error::InvalidArgument(format!(
                "angle type of length {} for partition {lambda}",
                numerators.len()
            )));
        }
        let theta = numerators
            .iter()
            .zip(lambda.parts())
            .map(|(&a, &l)| {
                if a < 0 || a >= l as i64 {
                    Err(Error::InvalidArgument(format!(
                        "numerator {a} outside 0..{l}"
                    )))
                } else {
                    Ok(Rational64::new(a, l as i64))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AngleType { theta })
    }

    /// Wraps raw values; each must lie in `[0, 1)`.
    pub fn new(theta: Vec<Rational64>) -> Result<Self> {
        if let Some(t) = theta
            .iter()
            .find(|t| **t < Rational64::zero() || **t >= Rational64::from_integer(1))
        {
            return Err(Error::InvalidArgument(format!("angle {t} outside [0,1)")));
        }
        Ok(AngleType { theta })
    }

    pub fn values(&self) -> &[Rational64] {
        &self.theta
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    /// `θ_i` for 1-based `i`.
    pub fn at(&self, i: usize) -> Rational64 {
        self.theta[i - 1]
    }

    /// Whether `θ ∈ Θ_λ`: the denominator of every `θ_j` divides `λ_j`.
    pub fn belongs_to(&self, lambda: &Partition) -> bool {
        self.theta.len() == lambda.len()
            && self
                .theta
                .iter()
                .zip(lambda.parts())
                .all(|(t, &l)| l as i64 % t.denom() == 0)
    }

    /// Whether the angle type is weakly increasing on every block of `M(λ)`.
    pub fn is_standard_for(&self, lambda: &Partition) -> bool {
        multiplicity_partition(lambda.parts())
            .blocks()
            .iter()
            .all(|b| b.windows(2).all(|w| self.at(w[0]) <= self.at(w[1])))
    }

    /// `M(θ)`, the level-set partition of `θ`.
    pub fn multiplicity_partition(&self) -> SetPartition {
        multiplicity_partition(&self.theta)
    }

    /// Values rendered as reduced `a/b` strings (integers without a slash).
    pub fn as_strings(&self) -> Vec<String> {
        self.theta.iter().map(|t| t.to_string()).collect()
    }
}

impl fmt::Display for AngleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.as_strings().join(","))
    }
}

impl fmt::Debug for AngleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AngleType{self}")
    }
}

impl Serialize for AngleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_strings().serialize(serializer)
    }
}

/// All of `Θ_λ`, in lexicographic order.
pub fn angle_types(lambda: &Partition) -> Vec<AngleType> {
    let mut out = Vec::new();
    let mut numerators = vec![0i64; lambda.len()];
    loop {
        out.push(AngleType::from_numerators(lambda, &numerators).expect("in range"));
        // odometer, last position fastest
        let mut k = lambda.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            numerators[k] += 1;
            if numerators[k] < lambda.parts()[k] as i64 {
                break;
            }
            numerators[k] = 0;
        }
    }
}

/// The standard angle types `Θ_λ^st`, in lexicographic order.
pub fn standard_angle_types(lambda: &Partition) -> Vec<AngleType> {
    angle_types(lambda)
        .into_iter()
        .filter(|t| t.is_standard_for(lambda))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partitions_of, Permutation};

    fn lam(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn strs(ts: &[AngleType]) -> Vec<String> {
        ts.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn standard_angle_types_for_n_equal_four() {
        assert_eq!(
            strs(&standard_angle_types(&lam(&[2, 1, 1]))),
            vec!["(0,0,0)", "(1/2,0,0)"]
        );
        assert_eq!(
            strs(&standard_angle_types(&lam(&[2, 2]))),
            vec!["(0,0)", "(0,1/2)", "(1/2,1/2)"]
        );
        assert_eq!(
            strs(&standard_angle_types(&lam(&[3, 1]))),
            vec!["(0,0)", "(1/3,0)", "(2/3,0)"]
        );
        assert_eq!(
            strs(&standard_angle_types(&lam(&[4]))),
            vec!["(0)", "(1/4)", "(1/2)", "(3/4)"]
        );
    }

    #[test]
    fn angle_type_count_is_product_of_parts() {
        for n in 1..=7 {
            for l in partitions_of(n) {
                let expected: usize = l.parts().iter().product();
                let all = angle_types(&l);
                assert_eq!(all.len(), expected);
                assert!(all.iter().all(|t| t.belongs_to(&l)));
            }
        }
    }

    // Each orbit of Θ_λ under S_{M(λ)} contains exactly one standard element.
    #[test]
    fn unique_standard_element_per_orbit() {
        for n in 1..=7 {
            for l in partitions_of(n) {
                let young = multiplicity_partition(l.parts()).young_elements();
                for theta in angle_types(&l) {
                    let mut orbit: Vec<AngleType> = young
                        .iter()
                        .map(|q| permute(&theta, q))
                        .collect();
                    orbit.sort();
                    orbit.dedup();
                    let standard = orbit.iter().filter(|t| t.is_standard_for(&l)).count();
                    assert_eq!(standard, 1, "λ={l} θ={theta}");
                }
            }
        }
    }

    fn permute(theta: &AngleType, q: &Permutation) -> AngleType {
        AngleType::new((1..=theta.len()).map(|i| theta.at(q.apply(i))).collect()).unwrap()
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(AngleType::from_numerators(&lam(&[2]), &[2]).is_err());
        assert!(AngleType::from_numerators(&lam(&[2, 1]), &[1]).is_err());
        assert!(AngleType::new(vec![Rational64::from_integer(1)]).is_err());
    }

    #[test]
    fn serializes_as_fraction_strings() {
        let t = AngleType::from_numerators(&lam(&[2, 1, 1]), &[1, 0, 0]).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"["1/2","0","0"]"#);
    }
}
