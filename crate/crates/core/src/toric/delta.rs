use std::collections::BTreeSet;

use super::coxeter::{CoxeterCone, CoxeterFan};
use super::matrices::{
    build_c2, delta_generators, multiplicity_functional, projection_pi, q_matrix, sn_action_n,
    sn_matrix_n,
};
use super::{Cone, Fan};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::exactalg::SublatticeBasis;
use crate::report::Report;

/// Largest `n` for which the fan is built geometrically.
pub const MAX_GEOMETRIC_N: usize = 5;

/// The cone spanned by the columns of the `C_2` matrix.
pub fn sigma2(n: usize) -> Result<Cone> {
    Cone::new(n + 1, &build_c2(n)?.to_columns())
}

/// Consecutive star subdivisions of the `C_2` cone at its first `2^n − 1`
/// columns, in column order.
pub fn build_delta_fan(n: usize) -> Result<Fan> {
    if !(1..=MAX_GEOMETRIC_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max: MAX_GEOMETRIC_N,
        });
    }
    let columns = build_c2(n)?.to_columns();
    let mut fan = Fan::from_cone(sigma2(n)?);
    for c in &columns[..columns.len() - 1] {
        fan = fan.star_subdivision(c)?;
    }
    Ok(fan)
}

/// Structural checks of the fan itself: cone count, smoothness, smallness,
/// the cone `δ^(n)`, the symmetric group orbit, and the fan certificate.
pub fn verify_delta_fan(n: usize, fan: &Fan) -> Result<Report> {
    let mut report = Report::new(format!("Delta fan, n = {n}"));
    let factorial: usize = (1..=n).product();
    let cones = fan.maximal_cones();
    report.check_with(
        format!("{factorial} maximal cones"),
        cones.len() == factorial,
        || format!("found {}", cones.len()),
    );
    report.check("every maximal cone is unimodular", fan.is_smooth(), "");
    let columns: BTreeSet<Vec<i64>> = build_c2(n)?.to_columns().into_iter().collect();
    let rays: BTreeSet<Vec<i64>> = fan.rays().into_iter().collect();
    report.check_with("rays are exactly the C2 columns", rays == columns, || {
        format!("{} rays vs {} columns", rays.len(), columns.len())
    });
    let delta = Cone::new(n + 1, &delta_generators(n))?;
    report.check("contains the cone delta", cones.contains(&delta), "");

    let mut orbit = BTreeSet::new();
    for p in Permutation::all(n) {
        let image = delta.image(&sn_matrix_n(&p)?)?;
        orbit.insert(image.rays().to_vec());
    }
    let maximal: BTreeSet<Vec<Vec<i64>>> = cones.iter().map(|c| c.rays().to_vec()).collect();
    report.check_with(
        "S_n permutes maximal cones simply transitively",
        orbit.len() == factorial && orbit == maximal,
        || format!("orbit of size {}", orbit.len()),
    );
    report.extend(fan.verify_subdivision_of(&sigma2(n)?, 24, n as u64));
    Ok(report)
}

/// The vector-bundle structure over the Coxeter fan: the block shape of
/// `Q·C_2`, `Π` mapping maximal cones onto chambers, and equivariance of `Π`.
pub fn verify_bundle_structure(n: usize, fan: Option<&Fan>) -> Result<Report> {
    let mut report = Report::new(format!("bundle structure, n = {n}"));
    let q = q_matrix(n)?;
    let qc = q.checked_mul(&build_c2(n)?)?;
    let mut expected: Vec<Vec<i64>> = Vec::new();
    let coxeter = CoxeterFan::new(n)?;
    for w in coxeter.rays() {
        let positive = w.iter().all(|&x| x >= 0);
        let mut col = vec![positive as i64];
        col.extend(&w);
        col.push(!positive as i64);
        expected.push(col);
    }
    let mut top = vec![0; n + 1];
    top[0] = 1;
    let mut bottom = vec![0; n + 1];
    bottom[n] = 1;
    expected.push(top);
    expected.push(bottom);
    expected.sort();
    let mut actual = qc.to_columns();
    actual.sort();
    report.check_with(
        "Q*C2 has the weight-vector block shape",
        actual == expected,
        || format!("columns {actual:?}"),
    );

    let pi = projection_pi(n)?;
    let gens_n = sn_action_n(n)?;
    let gens_bar = coxeter.generators();
    let equivariant = gens_n
        .iter()
        .zip(&gens_bar)
        .all(|(s, t)| pi.checked_mul(s).ok() == t.checked_mul(&pi).ok());
    report.check("Pi is S_n-equivariant on generators", equivariant, "");

    let delta_img: Vec<Vec<i64>> = delta_generators(n)
        .iter()
        .map(|v| pi.mul_vec(v))
        .collect::<Result<_>>()?;
    let chamber: BTreeSet<Vec<i64>> = CoxeterCone::chamber(&Permutation::identity(n))
        .rays()
        .into_iter()
        .collect();
    let nonzero: BTreeSet<Vec<i64>> = delta_img
        .iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    report.check("Pi maps delta onto the positive chamber", nonzero == chamber, "");

    if let Some(fan) = fan {
        let chambers: BTreeSet<Vec<Vec<i64>>> = coxeter
            .chambers()
            .iter()
            .map(|c| {
                let mut r = c.rays();
                r.sort();
                r
            })
            .collect();
        let mut hit = BTreeSet::new();
        let mut bad = Vec::new();
        for cone in fan.maximal_cones() {
            let images: Vec<Vec<i64>> = cone
                .rays()
                .iter()
                .map(|v| pi.mul_vec(v))
                .collect::<Result<_>>()?;
            let mut nonzero: Vec<Vec<i64>> = images
                .into_iter()
                .filter(|v| v.iter().any(|&x| x != 0))
                .collect();
            nonzero.sort();
            let distinct = nonzero.windows(2).all(|w| w[0] != w[1]);
            if distinct && nonzero.len() == n - 1 && chambers.contains(&nonzero) {
                hit.insert(nonzero);
            } else {
                bad.push(cone.rays().to_vec());
            }
        }
        report.check_with(
            "Pi maps each maximal cone onto a chamber, bijectively on rays",
            bad.is_empty() && hit.len() == chambers.len(),
            || format!("{} bad cones, {} chambers hit", bad.len(), hit.len()),
        );
    }
    Ok(report)
}

/// The multiplicity functional `g = (1, 1, 0, ..., 0)`: pairing one with
/// every ray, invariance under `S_n`, and the permutation character on
/// `Ker g`.
pub fn multiplicity_check(n: usize, fan: Option<&Fan>) -> Result<Report> {
    let mut report = Report::new(format!("multiplicity functional, n = {n}"));
    let g = multiplicity_functional(n);
    let rays = match fan {
        Some(f) => f.rays(),
        None => build_c2(n)?.to_columns(),
    };
    let bad: Vec<&Vec<i64>> = rays
        .iter()
        .filter(|v| g.iter().zip(v.iter()).map(|(a, b)| a * b).sum::<i64>() != 1)
        .collect();
    report.check_with("<g, v> = 1 for every ray", bad.is_empty(), || format!("{bad:?}"));

    let gens = sn_action_n(n)?;
    let invariant = gens.iter().all(|s| {
        (0..=n).all(|j| (0..=n).map(|i| g[i] * s[(i, j)]).sum::<i64>() == g[j])
    });
    report.check("g is S_n-invariant", invariant, "");

    let kernel = SublatticeBasis::new(
        n + 1,
        crate::exactalg::IntMatrix::new(1, n + 1, g.clone())?.kernel()?,
    )?;
    let mut mismatch = Vec::new();
    for p in Permutation::all(n) {
        let restricted = kernel.split(&sn_matrix_n(&p)?)?.restricted;
        if restricted.trace() != p.fixed_points() as i64 {
            mismatch.push(p.to_string());
        }
    }
    report.check_with(
        "Ker g carries the permutation character",
        mismatch.is_empty(),
        || format!("{mismatch:?}"),
    );
    Ok(report)
}

/// Combinatorial counts for sizes beyond the geometric construction: `n!`
/// chambers, `2^n` rays and the bundle shape of `Q·C_2`.
pub fn combinatorial_check(n: usize) -> Result<Report> {
    let mut report = Report::new(format!("combinatorial counts, n = {n}"));
    let coxeter = CoxeterFan::new(n)?;
    let factorial: usize = (1..=n).product();
    report.check("n! Weyl chambers", coxeter.chambers().len() == factorial, "");
    report.check(
        "2^n - 2 Coxeter rays",
        coxeter.rays().len() == (1 << n) - 2,
        "",
    );
    let cols: BTreeSet<Vec<i64>> = build_c2(n)?.to_columns().into_iter().collect();
    report.check("2^n distinct C2 columns", cols.len() == 1 << n, "");
    report.extend(verify_bundle_structure(n, None)?);
    report.extend(multiplicity_check(n, None)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_two_has_two_smooth_cones() {
        let fan = build_delta_fan(2).unwrap();
        assert_eq!(fan.maximal_cones().len(), 2);
        assert!(fan.is_smooth());
    }

    #[test]
    fn delta_one_is_the_quadrant() {
        let fan = build_delta_fan(1).unwrap();
        assert_eq!(fan.maximal_cones().len(), 1);
    }

    #[test]
    fn delta_three_full_suite() {
        let fan = build_delta_fan(3).unwrap();
        let r = verify_delta_fan(3, &fan).unwrap();
        assert!(r.passed(), "{r}");
        let b = verify_bundle_structure(3, Some(&fan)).unwrap();
        assert!(b.passed(), "{b}");
        let m = multiplicity_check(3, Some(&fan)).unwrap();
        assert!(m.passed(), "{m}");
    }

    #[test]
    fn two_node_projection_images() {
        let pi = projection_pi(2).unwrap();
        let mut images: Vec<i64> = build_c2(2)
            .unwrap()
            .to_columns()
            .iter()
            .map(|c| pi.mul_vec(c).unwrap()[0])
            .collect();
        images.sort();
        assert_eq!(images, vec![-1, 0, 0, 1]);
    }

    #[test]
    fn counts_for_larger_n() {
        for n in 5..=6 {
            let r = combinatorial_check(n).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
