use std::collections::BTreeSet;

use super::cone::{dot, extreme_rays_of_h_cone};
use super::matrices::{build_c2, build_c3};
use super::Cone;
use crate::error::{Error, Result};
use crate::exactalg::{IntMatrix, SublatticeBasis};
use crate::report::Report;

/// A cone on the fiber-product lattice `N_1 ×_N̄ N_2 ⊆ N_1 ⊕ N_2`.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    /// Basis of the fiber-product lattice inside `N_1 ⊕ N_2`.
    pub lattice: SublatticeBasis,
    /// The cone in coordinates of that basis.
    pub cone: Cone,
}

impl FiberProduct {
    /// Rays embedded in `N_1 ⊕ N_2`, sorted.
    pub fn embedded_rays(&self) -> Result<Vec<Vec<i64>>> {
        let mut out = self
            .cone
            .rays()
            .iter()
            .map(|x| self.lattice.embed(x))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }
}

/// `σ_1 ×_N̄ σ_2 = {(v_1, v_2) : v_i ∈ σ_i, h_1 v_1 = h_2 v_2}` on the lattice
/// `{(v_1, v_2) : h_1 v_1 = h_2 v_2}`. Requires `h_1(σ_1) = h_2(σ_2)`.
pub fn fiber_product_cones(
    sigma1: &Cone,
    h1: &IntMatrix,
    sigma2: &Cone,
    h2: &IntMatrix,
) -> Result<FiberProduct> {
    let (d1, d2) = (sigma1.ambient(), sigma2.ambient());
    if h1.cols() != d1 || h2.cols() != d2 || h1.rows() != h2.rows() {
        return Err(Error::InvalidArgument("maps do not match the cones".into()));
    }
    if sigma1.image(h1)? != sigma2.image(h2)? {
        return Err(Error::ImageMismatch);
    }
    let d = d1 + d2;
    // [h1 | -h2]
    let mut stacked = IntMatrix::zeros(h1.rows(), d);
    for i in 0..h1.rows() {
        for j in 0..d1 {
            stacked[(i, j)] = h1[(i, j)];
        }
        for j in 0..d2 {
            stacked[(i, d1 + j)] = -h2[(i, j)];
        }
    }
    let lattice = SublatticeBasis::new(d, stacked.kernel()?)?;
    let lift = |f: &[i64], offset: usize| {
        let mut v = vec![0; d];
        v[offset..offset + f.len()].copy_from_slice(f);
        v
    };
    let mut ambient_ineqs: Vec<Vec<i64>> = Vec::new();
    for (sigma, offset) in [(sigma1, 0), (sigma2, d1)] {
        for f in sigma.facets() {
            ambient_ineqs.push(lift(f, offset));
        }
        for e in sigma.equations() {
            let v = lift(e, offset);
            ambient_ineqs.push(v.iter().map(|x| -x).collect());
            ambient_ineqs.push(v);
        }
    }
    let k = lattice.rank();
    let local_ineqs: Vec<Vec<i64>> = ambient_ineqs
        .iter()
        .map(|a| {
            lattice
                .basis()
                .iter()
                .map(|b| i64::try_from(dot(a, b)).map_err(|_| Error::Overflow("fiber product")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let rays = if k == 0 {
        Vec::new()
    } else {
        extreme_rays_of_h_cone(k, &local_ineqs)?
    };
    let cone = Cone::new(k, &rays)?;
    Ok(FiberProduct { lattice, cone })
}

/// The `n`-fold fiber product `σ ×_N̄ ⋯ ×_N̄ σ` over `h`, built by repeated
/// binary products. Rays are returned embedded in `N^n`, sorted.
pub fn iterated_fiber_product(sigma: &Cone, h: &IntMatrix, n: usize) -> Result<Vec<Vec<i64>>> {
    if n == 0 {
        return Err(Error::InvalidArgument("empty fiber product".into()));
    }
    let d = sigma.ambient();
    // current cone, its embedding into N^k (columns), and its map to N̄
    let mut cone = sigma.clone();
    let mut embed = IntMatrix::identity(d);
    let mut map = h.clone();
    for k in 1..n {
        let fp = fiber_product_cones(&cone, &map, sigma, h)?;
        let basis = IntMatrix::from_columns(embed.cols() + d, fp.lattice.basis())?;
        let next_embed = embed.direct_sum(&IntMatrix::identity(d)).checked_mul(&basis)?;
        // map to N̄ through the last factor
        let mut last = IntMatrix::zeros(h.rows(), (k + 1) * d);
        for i in 0..h.rows() {
            for j in 0..d {
                last[(i, k * d + j)] = h[(i, j)];
            }
        }
        map = last.checked_mul(&next_embed)?;
        embed = next_embed;
        cone = fp.cone;
    }
    let mut rays = cone
        .rays()
        .iter()
        .map(|x| embed.mul_vec(x))
        .collect::<Result<Vec<_>>>()?;
    rays.sort();
    Ok(rays)
}

/// Basis of `(N_C / N_B)^n ≅ Z^{n+1}` inside `(Z^2)^n` for the node
/// `x_1 x_2 = t`: `e_0 = (d_1, ..., d_1)`, `e_1 = (d_2, d_1, ..., d_1)` and
/// `e_j = d_2 − d_1` in slot `j` for `j ≥ 2`.
pub fn node_basis(n: usize) -> Vec<Vec<i64>> {
    let d1 = |v: &mut Vec<i64>, slot: usize| v[2 * slot] += 1;
    let mut out = Vec::new();
    let mut e0 = vec![0; 2 * n];
    (0..n).for_each(|s| d1(&mut e0, s));
    out.push(e0);
    let mut e1 = vec![0; 2 * n];
    e1[1] = 1;
    (1..n).for_each(|s| d1(&mut e1, s));
    out.push(e1);
    for j in 1..n {
        let mut e = vec![0; 2 * n];
        e[2 * j] = -1;
        e[2 * j + 1] = 1;
        out.push(e);
    }
    out
}

/// The analogous basis of `Z^{2n+1}` inside `(Z^3)^n` for `x_1 x_2 x_3 = t`:
/// `e_0, e_1, e_2` put `d_1, d_2, d_3` in the first slot and `d_1` elsewhere;
/// each later slot contributes `d_2 − d_1` and `d_3 − d_1`.
pub fn triple_basis(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for first in 0..3 {
        let mut e = vec![0; 3 * n];
        e[first] = 1;
        (1..n).for_each(|s| e[3 * s] += 1);
        out.push(e);
    }
    for j in 1..n {
        for t in 1..3 {
            let mut e = vec![0; 3 * n];
            e[3 * j] = -1;
            e[3 * j + t] = 1;
            out.push(e);
        }
    }
    out
}

/// Coordinates of `rays` in the given basis of a saturated lattice.
pub fn coordinates_in(ambient: usize, basis: &[Vec<i64>], rays: &[Vec<i64>]) -> Result<BTreeSet<Vec<i64>>> {
    let lattice = SublatticeBasis::new(ambient, basis.to_vec())?;
    rays.iter()
        .map(|r| {
            lattice
                .coords(r)?
                .ok_or_else(|| Error::InvalidArgument(format!("{r:?} outside the lattice")))
        })
        .collect()
}

/// The cone over a standard simplex with `d` vertices and the map summing
/// coordinates: the local model of `x_1 ⋯ x_d = t`.
pub fn curve_cone(d: usize) -> Result<(Cone, IntMatrix)> {
    let cone = Cone::new(d, &IntMatrix::identity(d).to_rows())?;
    Ok((cone, IntMatrix::new(1, d, vec![1; d])?))
}

/// Compares the iterated fiber products of the nodal curve cone with the
/// `C_2` columns, and for `n ≤ 3` those of the triple-point cone with `C_3`.
pub fn fiber_product_check(n: usize) -> Result<Report> {
    let mut report = Report::new(format!("fiber products, n = {n}"));
    let (c, h) = curve_cone(2)?;
    let rays = iterated_fiber_product(&c, &h, n)?;
    let coords = coordinates_in(2 * n, &node_basis(n), &rays)?;
    let expected: BTreeSet<Vec<i64>> = build_c2(n)?.to_columns().into_iter().collect();
    report.check_with("node fiber product is the C2 cone", coords == expected, || {
        format!("rays {coords:?}")
    });
    if n <= 3 {
        let (c, h) = curve_cone(3)?;
        let rays = iterated_fiber_product(&c, &h, n)?;
        let coords = coordinates_in(3 * n, &triple_basis(n), &rays)?;
        let expected: BTreeSet<Vec<i64>> = build_c3(n)?.to_columns().into_iter().collect();
        report.check_with("triple-point fiber product is the C3 cone", coords == expected, || {
            format!("rays {coords:?}")
        });
    }
    Ok(report)
}
