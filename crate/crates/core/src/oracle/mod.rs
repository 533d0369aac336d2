//! Independent check of the quotient E-polynomials: orbit counting on the
//! Coxeter fan, fixed-cone traces, and Burnside averaging over a Young
//! subgroup. [`orbifold_e`] recomputes the whole stringy E-polynomial from
//! the fan by the same kind of averaging.

mod orbifold;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::combinatorics::{partitions_of, Partition, Permutation, SetPartition};
use crate::error::{Error, Result};
use crate::exactalg::{split_action, IntMatrix, LPoly, QPoly};
use crate::report::Report;
use crate::symfun::quotient_e;
use crate::toric::{Cone, CoxeterFan, Fan};

pub use orbifold::{eigen_angle_sum, orbifold_e, orbifold_terms, ClassTerm};

/// `Σ_σ (L − 1)^{rank − dim σ}` over all faces of a simplicial fan.
pub fn toric_e(fan: &Fan) -> Result<LPoly> {
    let torus = LPoly::from_coeffs(vec![-1, 1]);
    Ok(fan
        .simplicial_faces()?
        .iter()
        .map(|face| torus.pow((fan.ambient() - face.len()) as u32))
        .sum())
}

/// `Σ det(L·I − g|_{N/⟨σ⟩})` over the faces `σ` with `g σ = σ`.
pub fn equivariant_e(fan: &Fan, g: &IntMatrix) -> Result<LPoly> {
    check_automorphism(fan, g)?;
    equivariant_on_faces(&fan.simplicial_faces()?, fan.ambient(), g)
}

fn equivariant_on_faces(faces: &[Vec<Vec<i64>>], ambient: usize, g: &IntMatrix) -> Result<LPoly> {
    let mut acc = LPoly::zero();
    for face in faces {
        let image: BTreeSet<Vec<i64>> = face
            .iter()
            .map(|v| g.mul_vec(v))
            .collect::<Result<_>>()?;
        if image.len() == face.len() && face.iter().all(|v| image.contains(v)) {
            let quotient = if face.is_empty() {
                g.clone()
            } else {
                split_action(g, face)?.quotient
            };
            debug_assert_eq!(quotient.rows(), ambient - face.len());
            acc = &acc + &quotient.char_poly()?;
        }
    }
    Ok(acc)
}

/// `g` must permute the rays and the maximal cones.
fn check_automorphism(fan: &Fan, g: &IntMatrix) -> Result<()> {
    if !g.is_square() || g.rows() != fan.ambient() {
        return Err(Error::NotFanAutomorphism);
    }
    let rays: BTreeSet<Vec<i64>> = fan.rays().into_iter().collect();
    let mut images = BTreeSet::new();
    for v in &rays {
        let w = g.mul_vec(v)?;
        if !rays.contains(&w) {
            return Err(Error::NotFanAutomorphism);
        }
        images.insert(w);
    }
    if images.len() != rays.len() {
        return Err(Error::NotFanAutomorphism);
    }
    let cones: BTreeSet<BTreeSet<Vec<i64>>> = fan
        .maximal_cones()
        .iter()
        .map(|c| c.rays().iter().cloned().collect())
        .collect();
    for c in &cones {
        let img: BTreeSet<Vec<i64>> = c.iter().map(|v| g.mul_vec(v)).collect::<Result<_>>()?;
        if !cones.contains(&img) {
            return Err(Error::NotFanAutomorphism);
        }
    }
    Ok(())
}

/// A finite group acting on a fan by lattice automorphisms.
#[derive(Clone, Debug)]
pub struct GroupOnFan {
    fan: Fan,
    faces: Vec<Vec<Vec<i64>>>,
    elements: Vec<IntMatrix>,
    labels: Vec<Permutation>,
}

impl GroupOnFan {
    /// Validates every element. `labels` name the elements for reporting.
    pub fn new(fan: Fan, elements: Vec<IntMatrix>, labels: Vec<Permutation>) -> Result<Self> {
        if elements.len() != labels.len() || elements.is_empty() {
            return Err(Error::InvalidArgument("one label per group element".into()));
        }
        for g in &elements {
            check_automorphism(&fan, g)?;
        }
        let faces = fan.simplicial_faces()?;
        Ok(GroupOnFan {
            fan,
            faces,
            elements,
            labels,
        })
    }

    /// `S_μ ⊂ S_r`, acting on the Coxeter fan of `A_{r-1}` (a point for
    /// `r = 1`). Blocks of `μ` are consecutive: `{1..μ_1}`, and so on.
    pub fn young_subgroup(mu: &Partition) -> Result<Self> {
        let r = mu.size();
        let young = SetPartition::consecutive(mu.parts())?.young_elements();
        if r == 1 {
            let fan = Fan::new(0, vec![Cone::zero(0)])?;
            return Self::new(fan, vec![IntMatrix::identity(0)], young);
        }
        let coxeter = CoxeterFan::new(r)?;
        let elements = young
            .iter()
            .map(|p| coxeter.action_matrix(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coxeter.to_fan()?, elements, young)
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn labels(&self) -> &[Permutation] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// [`equivariant_e`] for the `i`-th element.
    pub fn equivariant_e(&self, i: usize) -> Result<LPoly> {
        equivariant_on_faces(&self.faces, self.fan.ambient(), &self.elements[i])
    }
}

/// `(1/|G|) Σ_g equivariant_e(g)`, which must come out integral.
pub fn burnside_quotient_e(group: &GroupOnFan) -> Result<LPoly> {
    let mut sum = QPoly::zero();
    for i in 0..group.order() {
        sum = &sum + &QPoly::from(&group.equivariant_e(i)?);
    }
    sum.scale(&BigRational::new(BigInt::from(1), BigInt::from(group.order())))
        .to_lpoly()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckRow {
    pub r: usize,
    pub mu: Partition,
    pub formula: LPoly,
    pub oracle: LPoly,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Compares [`burnside_quotient_e`] with the symmetric-function value for
/// every `μ ⊢ r`, `r ≤ r_max`.
pub fn crosscheck_quotients(r_max: usize) -> Result<Vec<CrosscheckRow>> {
    if !(1..=6).contains(&r_max) {
        return Err(Error::OutOfRange {
            what: "r",
            value: r_max,
            min: 1,
            max: 6,
        });
    }
    let mut rows = Vec::new();
    for r in 1..=r_max {
        for mu in partitions_of(r) {
            let formula = quotient_e(r, &mu)?;
            let oracle = burnside_quotient_e(&GroupOnFan::young_subgroup(&mu)?)?;
            rows.push(CrosscheckRow {
                r,
                matches: formula == oracle,
                mu,
                formula,
                oracle,
            });
        }
    }
    Ok(rows)
}

pub fn crosscheck_report(rows: &[CrosscheckRow]) -> Report {
    let mut report = Report::new("quotient E-polynomials vs Burnside oracle");
    for row in rows {
        report.check_with(
            format!("r = {}, mu = {}", row.r, row.mu),
            row.matches,
            || format!("formula {} but oracle {}", row.formula, row.oracle),
        );
    }
    report
}
