//! The orbifold E-function of `[X(Δ) × C^n / S_n]` computed straight from
//! the fan, without the sector bookkeeping: for each conjugacy class `g`,
//! the fixed locus of `g` on every torus orbit is a diagonalizable group,
//! its components carry an age read off the tangent action, and the
//! centralizer is averaged out by traces.

use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{partitions_of, standard_element, Partition, Permutation};
use crate::error::{Error, Result};
use crate::exactalg::{IntMatrix, LPoly, QPoly, SublatticeBasis};
use crate::toric::{build_delta_fan, sn_matrix_n, Fan};

/// Contribution of one conjugacy class, `E(M^g / C(g))` graded by age.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTerm {
    pub cycle_type: Partition,
    pub centralizer_order: usize,
    pub polynomial: LPoly,
}

/// `Σ_{[g]} Σ_F E(F / C(g)) L^{age(g, F)}` for `M = X(Δ^(n)) × C^n`.
pub fn orbifold_e(n: usize) -> Result<LPoly> {
    Ok(orbifold_terms(n)?.into_iter().map(|t| t.polynomial).sum())
}

pub fn orbifold_terms(n: usize) -> Result<Vec<ClassTerm>> {
    let fan = build_delta_fan(n)?;
    let all = Permutation::all(n);
    let matrices = all.iter().map(sn_matrix_n).collect::<Result<Vec<_>>>()?;
    partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let g = standard_element(&lambda);
            let centralizer: Vec<usize> = (0..all.len())
                .filter(|&i| all[i].compose(&g) == g.compose(&all[i]))
                .collect();
            let gm = sn_matrix_n(&g)?;
            let hs: Vec<&IntMatrix> = centralizer.iter().map(|&i| &matrices[i]).collect();
            let polynomial = class_term(&fan, &g, &gm, &hs)?;
            Ok(ClassTerm {
                cycle_type: lambda,
                centralizer_order: hs.len(),
                polynomial,
            })
        })
        .collect()
}

fn class_term(fan: &Fan, g: &Permutation, gm: &IntMatrix, centralizer: &[&IntMatrix]) -> Result<LPoly> {
    let cycles = g.cycle_type();
    // C^n: fixed space of dimension #cycles, each ℓ-cycle adds (ℓ-1)/2
    let linear_age: Rational64 = cycles
        .iter()
        .map(|&l| Rational64::new(l as i64 - 1, 2))
        .sum();
    let mut sum = QPoly::zero();
    for face in fan.simplicial_faces()? {
        if !stabilizes(gm, &face)? {
            continue;
        }
        let data = FixedOrbit::new(fan.ambient(), &face, gm)?;
        for h in centralizer {
            if !stabilizes(h, &face)? {
                continue;
            }
            let term = data.trace(h, linear_age)?;
            sum = &sum + &QPoly::from(&term);
        }
    }
    let avg = sum
        .scale(&num_rational::BigRational::new(1.into(), centralizer.len().into()))
        .to_lpoly()?;
    Ok(avg.shift(cycles.len()))
}

fn stabilizes(a: &IntMatrix, face: &[Vec<i64>]) -> Result<bool> {
    let set: BTreeSet<&Vec<i64>> = face.iter().collect();
    for v in face {
        if !set.contains(&a.mul_vec(v)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The fixed locus of `g` on the orbit `O(σ)`, in a basis of `N` starting
/// with the rays of `σ`.
struct FixedOrbit {
    basis: SublatticeBasis,
    k: usize,
    /// Invariant sublattice of `N(σ)` (coordinates of the complement).
    invariants: Option<SublatticeBasis>,
    /// `V^{-1}` from the Smith form of `Ḡ − I`, and its rank.
    v_inv: IntMatrix,
    v: IntMatrix,
    rank: usize,
    /// Component keys `y_i ∈ [0, 1)`, `i < rank`, with their ages.
    components: Vec<(Vec<Rational64>, Rational64)>,
}

impl FixedOrbit {
    fn new(d: usize, face: &[Vec<i64>], g: &IntMatrix) -> Result<Self> {
        let basis = SublatticeBasis::new(d, face.to_vec())?;
        let k = face.len();
        let m = d - k;
        let a = basis.adapted(g)?;
        let perm = ray_permutation(&a.block(0, k, 0, k))?;
        let c = a.block(0, k, k, d);
        let gbar = a.block(k, d, k, d);

        let mut shifted = gbar.clone();
        for i in 0..m {
            shifted[(i, i)] -= 1;
        }
        let kernel = shifted.kernel()?;
        let invariants = if kernel.is_empty() {
            None
        } else {
            Some(SublatticeBasis::new(m, kernel.clone())?)
        };
        let (_, diag, v) = shifted.smith_normal_form()?;
        let rank = (0..m).take_while(|&i| diag[(i, i)] != 0).count();
        let v_inv = v.unimodular_inverse()?;

        let torus_age = eigen_angle_sum(&gbar.char_poly()?)?;
        let cycles = cycles_of(&perm);
        for cyc in &cycles {
            // the multiplier around a cycle must be constant along the
            // invariant directions
            for kv in &kernel {
                let s: i64 = cyc.iter().map(|&i| dot(c.row(i), kv)).sum();
                if s != 0 {
                    return Err(Error::InvalidArgument("normal multiplier varies on a fixed component".into()));
                }
            }
        }

        let moduli: Vec<i64> = (0..rank).map(|i| diag[(i, i)]).collect();
        let mut components = Vec::new();
        for key in odometer(&moduli) {
            let y: Vec<Rational64> = (0..m)
                .map(|i| if i < rank { Rational64::new(key[i], moduli[i]) } else { Rational64::zero() })
                .collect();
            let x = mul_rational(&v, &y);
            let mut age = torus_age;
            for cyc in &cycles {
                let beta: Rational64 = cyc.iter().map(|&i| dot_rational(c.row(i), &x)).sum();
                age += frac(beta) + Rational64::new(cyc.len() as i64 - 1, 2);
            }
            components.push((y[..rank].to_vec(), age));
        }
        Ok(FixedOrbit {
            basis,
            k,
            invariants,
            v_inv,
            v,
            rank,
            components,
        })
    }

    /// Trace of `h` on the compactly supported cohomology of the fixed
    /// locus, each component weighted by `L^{age}`.
    fn trace(&self, h: &IntMatrix, linear_age: Rational64) -> Result<LPoly> {
        let d = self.basis.ambient();
        let hbar = self.basis.adapted(h)?.block(self.k, d, self.k, d);
        let torus = match &self.invariants {
            Some(inv) => inv.split(&hbar)?.restricted.char_poly()?,
            None => LPoly::one(),
        };
        let mut acc = LPoly::zero();
        for (key, age) in &self.components {
            let m = d - self.k;
            let y: Vec<Rational64> = (0..m)
                .map(|i| key.get(i).copied().unwrap_or_else(Rational64::zero))
                .collect();
            let x = mul_rational(&self.v, &y);
            let image = mul_rational(&self.v_inv, &mul_rational(&hbar, &x));
            let moved: Vec<Rational64> = image[..self.rank].iter().map(|&t| frac(t)).collect();
            if moved != *key {
                continue;
            }
            let total = *age + linear_age;
            if !total.is_integer() {
                return Err(Error::NonIntegral(format!("orbifold age {total}")));
            }
            let e = total
                .to_integer()
                .to_usize()
                .ok_or_else(|| Error::NonIntegral(format!("negative age {total}")))?;
            acc = &acc + &torus.shift(e);
        }
        Ok(acc)
    }
}

fn ray_permutation(p: &IntMatrix) -> Result<Vec<usize>> {
    let k = p.rows();
    let mut image = vec![usize::MAX; k];
    for j in 0..k {
        let col = p.column(j);
        let ones: Vec<usize> = (0..k).filter(|&i| col[i] != 0).collect();
        if ones.len() != 1 || col[ones[0]] != 1 {
            return Err(Error::InvalidArgument("rays are not permuted".into()));
        }
        image[j] = ones[0];
    }
    Ok(image)
}

fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cyc.push(i);
            i = perm[i];
        }
        out.push(cyc);
    }
    out
}

fn odometer(moduli: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

fn frac(t: Rational64) -> Rational64 {
    t - t.floor()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_rational(a: &[i64], b: &[Rational64]) -> Rational64 {
    a.iter().zip(b).map(|(&x, &y)| y * x).sum()
}

fn mul_rational(a: &IntMatrix, x: &[Rational64]) -> Vec<Rational64> {
    (0..a.rows()).map(|i| dot_rational(a.row(i), x)).collect()
}

/// Sum of the angles `θ ∈ [0, 1)` of the eigenvalues `e^{2πiθ}` of an
/// integer matrix of finite order, from the cyclotomic factorization of its
/// characteristic polynomial.
pub fn eigen_angle_sum(char_poly: &LPoly) -> Result<Rational64> {
    let mut rest = char_poly.clone();
    let mut sum = Rational64::zero();
    let mut d = 1;
    let mut found: Vec<LPoly> = Vec::new();
    while rest.degree().unwrap_or(0) > 0 {
        if d > 4 * char_poly.degree().unwrap_or(0).pow(2) + 2 {
            return Err(Error::InvalidArgument(format!(
                "{char_poly} is not a product of cyclotomic polynomials"
            )));
        }
        let phi_d = cyclotomic(d, &found);
        while let Some(q) = rest.div_exact(&phi_d) {
            rest = q;
            if d >= 2 {
                sum += Rational64::new(phi_d.degree().unwrap_or(0) as i64, 2);
            }
        }
        found.push(phi_d);
        d += 1;
    }
    Ok(sum)
}

/// `Φ_d`, given `Φ_1, ..., Φ_{d-1}`.
fn cyclotomic(d: usize, lower: &[LPoly]) -> LPoly {
    let mut p = &LPoly::monomial(1, d) - &LPoly::one();
    for (e, phi) in lower.iter().enumerate() {
        if d % (e + 1) == 0 {
            p = p.div_exact(phi).expect("cyclotomic division");
        }
    }
    p
}
