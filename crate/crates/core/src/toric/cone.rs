use fixedbitset::FixedBitSet;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{IntMatrix, SublatticeBasis};

/// A strictly convex rational polyhedral cone in `Z^d ⊗ R`.
///
/// Stored as its primitive extreme rays (sorted, so structural equality is
/// cone equality), inner facet normals, and a basis of the integer
/// functionals vanishing on its span.
#[derive(Clone, Debug, Serialize)]
pub struct Cone {
    ambient: usize,
    rays: Vec<Vec<i64>>,
    #[serde(skip)]
    facets: Vec<Vec<i64>>,
    #[serde(skip)]
    equations: Vec<Vec<i64>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl std::hash::Hash for Cone {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.rays.hash(state);
    }
}

impl Cone {
    /// The cone generated by `generators`. Redundant generators are
    /// discarded; fails with [`Error::NotPointed`] if the cone contains a line.
    pub fn new(ambient: usize, generators: &[Vec<i64>]) -> Result<Self> {
        let gens = primitive_nonzero(ambient, generators)?;
        let lattice = SublatticeBasis::from_span(ambient, &gens)?;
        let k = lattice.rank();
        let equations = lattice.annihilator();
        if k == 0 {
            return Ok(Cone {
                ambient,
                rays: Vec::new(),
                facets: Vec::new(),
                equations,
            });
        }
        let local: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| Ok(lattice.coords(g)?.expect("generator lies in its own span")))
            .collect::<Result<_>>()?;
        let local_facets = if IntMatrix::from_rows(k, &local)?.rank() == local.len() {
            simplicial_facets(&local)?
        } else {
            let f = extreme_rays_of_h_cone(k, &local)?;
            if f.is_empty() || IntMatrix::from_rows(k, &f)?.rank() < k {
                return Err(Error::NotPointed);
            }
            f
        };
        let mut rays = Vec::new();
        for (g, x) in gens.iter().zip(&local) {
            let tight: Vec<Vec<i64>> = local_facets
                .iter()
                .filter(|f| dot(f, x) == 0)
                .cloned()
                .collect();
            let tight_rank = if tight.is_empty() {
                0
            } else {
                IntMatrix::from_rows(k, &tight)?.rank()
            };
            if tight_rank == k - 1 {
                rays.push(g.clone());
            }
        }
        rays.sort();
        rays.dedup();
        let facets = local_facets
            .iter()
            .map(|y| lattice.extend_functional(y).map(primitive))
            .collect::<Result<Vec<_>>>()?;
        Ok(Cone {
            ambient,
            rays,
            facets,
            equations,
        })
    }

    /// The zero cone.
    pub fn zero(ambient: usize) -> Self {
        Cone::new(ambient, &[]).expect("zero cone")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Inner facet normals, as functionals on the ambient lattice.
    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    /// Functionals cutting out the linear span.
    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim()
    }

    /// Simplicial and generated by part of a basis of the ambient lattice.
    pub fn is_unimodular(&self) -> bool {
        self.is_simplicial() && SublatticeBasis::new(self.ambient, self.rays.clone()).is_ok()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.ambient
            && self.equations.iter().all(|e| dot(e, v) == 0)
            && self.facets.iter().all(|f| dot(f, v) >= 0)
    }

    /// Whether `v` lies in the relative interior.
    pub fn contains_in_relative_interior(&self, v: &[i64]) -> bool {
        self.contains(v) && self.facets.iter().all(|f| dot(f, v) > 0)
    }

    pub fn has_ray(&self, ray: &[i64]) -> bool {
        self.rays.binary_search_by(|r| r.as_slice().cmp(ray)).is_ok()
    }

    /// Rays of the facet cut out by `normal`.
    pub fn facet_rays(&self, normal: &[i64]) -> Vec<Vec<i64>> {
        self.rays
            .iter()
            .filter(|r| dot(normal, r) == 0)
            .cloned()
            .collect()
    }

    /// Image under `a`; the result is recomputed from the image generators.
    pub fn image(&self, a: &IntMatrix) -> Result<Cone> {
        let gens = self
            .rays
            .iter()
            .map(|r| a.mul_vec(r))
            .collect::<Result<Vec<_>>>()?;
        Cone::new(a.rows(), &gens)
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Divides out the gcd of the entries; the zero vector is returned as is.
pub fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

fn primitive_nonzero(ambient: usize, generators: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for g in generators {
        if g.len() != ambient {
            return Err(Error::InvalidArgument(format!(
                "generator of length {} in ambient rank {ambient}",
                g.len()
            )));
        }
        if g.iter().any(|&x| x != 0) {
            out.push(primitive(g.clone()));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Facets of a full-dimensional simplicial cone given by `k` independent
/// generators in `Z^k`: the rows of the inverse matrix, made primitive.
fn simplicial_facets(gens: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let k = gens.len();
    // rows of B^{-1} are the columns of (B^T)^{-1}
    let bt = IntMatrix::from_rows(k, gens)?;
    (0..k)
        .map(|j| {
            let mut e = vec![0; k];
            e[j] = 1;
            let x = bt
                .solve_rational(&e)
                .ok_or_else(|| Error::InvalidArgument("singular generator matrix".into()))?;
            scale_to_integers(&x)
        })
        .collect()
}

fn scale_to_integers(x: &[num_rational::BigRational]) -> Result<Vec<i64>> {
    use num_traits::ToPrimitive;
    let l = x
        .iter()
        .fold(num_bigint::BigInt::from(1), |l, q| l.lcm(q.denom()));
    let ints: Vec<i64> = x
        .iter()
        .map(|q| {
            (q.numer() * (&l / q.denom()))
                .to_i64()
                .ok_or(Error::Overflow("cone normal exceeds i64"))
        })
        .collect::<Result<_>>()?;
    Ok(primitive(ints))
}

/// Extreme rays of the pointed cone `{y ∈ R^k : a·y ≥ 0 for all rows a}` by
/// the double description method with the combinatorial adjacency test.
/// Rays are primitive and sorted. Zero rows are ignored.
pub fn extreme_rays_of_h_cone(k: usize, rows: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let rows: Vec<&Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
    if let Some(r) = rows.iter().find(|r| r.len() != k) {
        return Err(Error::InvalidArgument(format!(
            "inequality of length {} in dimension {k}",
            r.len()
        )));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    // greedy choice of k independent rows
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        chosen.push((*r).clone());
        if IntMatrix::from_rows(k, &chosen)?.rank() == chosen.len() {
            basis_idx.push(i);
            if chosen.len() == k {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    if chosen.len() < k {
        return Err(Error::NotPointed);
    }
    let a0 = IntMatrix::from_rows(k, &chosen)?;
    let m = rows.len();
    let mut rays: Vec<(Vec<i64>, FixedBitSet)> = Vec::with_capacity(k);
    for j in 0..k {
        let mut e = vec![0; k];
        e[j] = 1;
        let x = a0.solve_rational(&e).expect("independent rows");
        let mut zeros = FixedBitSet::with_capacity(m);
        for (t, &i) in basis_idx.iter().enumerate() {
            if t != j {
                zeros.insert(i);
            }
        }
        rays.push((scale_to_integers(&x)?, zeros));
    }
    let mut processed = FixedBitSet::with_capacity(m);
    basis_idx.iter().for_each(|&i| processed.insert(i));
    for i in 0..m {
        if processed.contains(i) {
            continue;
        }
        processed.insert(i);
        let a = rows[i];
        let values: Vec<i128> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let mut next: Vec<(Vec<i64>, FixedBitSet)> = Vec::new();
        for ((r, z), &v) in rays.iter().zip(&values) {
            if v >= 0 {
                let mut z = z.clone();
                if v == 0 {
                    z.insert(i);
                }
                next.push((r.clone(), z));
            }
        }
        for (p, &vp) in values.iter().enumerate().filter(|(_, &v)| v > 0) {
            for (q, &vq) in values.iter().enumerate().filter(|(_, &v)| v < 0) {
                let common = {
                    let mut c = rays[p].1.clone();
                    c.intersect_with(&rays[q].1);
                    c
                };
                if common.count_ones(..) + 2 < k {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(t, (_, zt))| t != p && t != q && common.is_subset(zt));
                if blocked {
                    continue;
                }
                let combined = combine(&rays[p].0, vp, &rays[q].0, vq)?;
                let mut z = common;
                z.insert(i);
                next.push((combined, z));
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<i64>> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `vp·q − vq·p` for `vp > 0 > vq`, made primitive; it lies on `a·y = 0`.
fn combine(p: &[i64], vp: i128, q: &[i64], vq: i128) -> Result<Vec<i64>> {
    const OVERFLOW: Error = Error::Overflow("double description intermediate");
    let raw: Vec<i128> = p
        .iter()
        .zip(q)
        .map(|(&x, &y)| {
            let s = vp.checked_mul(y as i128).ok_or(OVERFLOW)?;
            let t = vq.checked_mul(x as i128).ok_or(OVERFLOW)?;
            s.checked_sub(t).ok_or(OVERFLOW)
        })
        .collect::<Result<_>>()?;
    let g = raw.iter().fold(0i128, |g, &x| g.gcd(&x)).max(1);
    raw.into_iter()
        .map(|x| i64::try_from(x / g).map_err(|_| OVERFLOW))
        .collect()
}
