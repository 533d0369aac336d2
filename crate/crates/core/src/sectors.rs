//! The twisted sectors: for each `λ ⊢ n` other than `1^n`, each standard
//! angle type `θ` and each reduced coset class `p̄`, the component data, the
//! fiber rank `φ` and the age.

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    component_partition_types, partitions_of, reduced_representatives_with,
    standard_angle_types, AngleType, Partition, Permutation,
};
use crate::error::{Error, Result};
use crate::exactalg::LPoly;
use crate::symfun::component_e;

/// One summand `E(F̄/H) · L^{φ + r(λ) + a}` of the twisted part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sector {
    pub lambda: Partition,
    pub theta: AngleType,
    pub rep: Permutation,
    /// Block sizes of `M(θ⋆p)`, blocks ordered by their least element.
    pub m: Vec<usize>,
    pub mu_list: Vec<Partition>,
    pub phi: usize,
    pub age: usize,
    pub e_factor: LPoly,
    pub exponent: usize,
}

impl Sector {
    pub fn components(&self) -> Vec<(usize, Partition)> {
        self.m.iter().copied().zip(self.mu_list.iter().cloned()).collect()
    }

    pub fn polynomial(&self) -> LPoly {
        sector_polynomial(self)
    }
}

/// How the representative of each reduced class is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Representatives {
    /// The lexicographically least member.
    #[default]
    LexLeast,
    /// A uniformly random member, reproducible from the seed.
    Random { seed: u64 },
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerationOptions {
    pub representatives: Representatives,
    /// Evaluate the `(λ, θ)` blocks on the rayon pool. Output order is the
    /// same either way.
    pub parallel: bool,
}

/// Number of zeros among `θ_{p(1)}` and `θ_{p(r)}`, counted with
/// multiplicity; for `r = 1` both slots read `θ_1`.
pub fn phi(theta: &AngleType, p: &Permutation) -> Result<usize> {
    check_lengths(theta, p)?;
    let r = p.degree();
    Ok([p.apply(1), p.apply(r)]
        .iter()
        .filter(|&&i| theta.at(i).is_zero())
        .count())
}

fn check_lengths(theta: &AngleType, p: &Permutation) -> Result<()> {
    if theta.len() != p.degree() || theta.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "angle type {theta} and permutation {p} have incompatible lengths"
        )));
    }
    Ok(())
}

fn frac(t: Rational64) -> Rational64 {
    t - t.floor()
}

/// The age as an exact rational:
/// `n − r + Σ_j {θ_{p(j)} − θ_{p(j+1)}} + {1 − θ_{p(1)}} + θ_{p(r)}`.
///
/// The middle sum reads the angles of the eigenvalues `α_{p(j)}/α_{p(j+1)}`
/// on the chart. Taking the differences the other way round breaks
/// integrality, e.g. `10/3` at `λ = (3,1)`, `θ = (1/3,0)`, `p = id`.
pub fn age_value(lambda: &Partition, theta: &AngleType, p: &Permutation) -> Result<Rational64> {
    check_lengths(theta, p)?;
    if theta.len() != lambda.len() {
        return Err(Error::InvalidArgument(format!(
            "angle type {theta} does not match partition {lambda}"
        )));
    }
    let r = p.degree();
    let t = |j: usize| theta.at(p.apply(j));
    let mut a = Rational64::from_integer((lambda.size() - r) as i64);
    for j in 1..r {
        a += frac(t(j) - t(j + 1));
    }
    a += frac(Rational64::from_integer(1) - t(1));
    a += t(r);
    Ok(a)
}

/// [`age_value`], required to be a nonnegative integer.
pub fn age(lambda: &Partition, theta: &AngleType, p: &Permutation) -> Result<usize> {
    let a = age_value(lambda, theta, p)?;
    if !a.is_integer() {
        return Err(Error::NonIntegral(format!(
            "age {a} at λ={lambda}, θ={theta}, p={p}"
        )));
    }
    a.to_integer()
        .to_usize()
        .ok_or_else(|| Error::NonIntegral(format!("negative age {a}")))
}

/// Assembles the sector for one representative.
pub fn make_sector(lambda: &Partition, theta: &AngleType, rep: &Permutation) -> Result<Sector> {
    let components = component_partition_types(lambda, theta, rep)?;
    let phi = phi(theta, rep)?;
    let age = age(lambda, theta, rep)?;
    let e_factor = component_e(&components)?;
    let (m, mu_list) = components.into_iter().unzip();
    Ok(Sector {
        lambda: lambda.clone(),
        theta: theta.clone(),
        rep: rep.clone(),
        m,
        mu_list,
        phi,
        age,
        e_factor,
        exponent: phi + lambda.len() + age,
    })
}

/// All twisted sectors, ordered by `λ` (reverse lexicographic), then `θ`
/// (lexicographic), then the coset classes in order of their least member.
pub fn enumerate_sectors(n: usize) -> Result<Vec<Sector>> {
    enumerate_sectors_with(n, EnumerationOptions::default())
}

pub fn enumerate_sectors_with(n: usize, options: EnumerationOptions) -> Result<Vec<Sector>> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 2,
            max: usize::MAX,
        });
    }
    let tasks: Vec<(Partition, AngleType)> = partitions_of(n)
        .into_iter()
        .filter(|l| !l.is_all_ones())
        .flat_map(|l| {
            standard_angle_types(&l)
                .into_iter()
                .map(move |t| (l.clone(), t))
        })
        .collect();
    let run = |(index, (lambda, theta)): (usize, &(Partition, AngleType))| {
        sectors_for(lambda, theta, options.representatives, index as u64)
    };
    let blocks: Vec<Result<Vec<Sector>>> = if options.parallel {
        tasks.par_iter().enumerate().map(run).collect()
    } else {
        tasks.iter().enumerate().map(run).collect()
    };
    let mut out = Vec::new();
    for b in blocks {
        out.extend(b?);
    }
    Ok(out)
}

/// The sectors of a single `(λ, θ)`.
pub fn sectors_for(
    lambda: &Partition,
    theta: &AngleType,
    choice: Representatives,
    stream: u64,
) -> Result<Vec<Sector>> {
    let classes = match choice {
        Representatives::LexLeast => reduced_representatives_with(lambda, theta, |_| 0)?,
        Representatives::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            reduced_representatives_with(lambda, theta, |m| rng.gen_range(0..m.len()))?
        }
    };
    classes
        .iter()
        .map(|c| make_sector(lambda, theta, &c.representative))
        .collect()
}

/// `e_factor · L^exponent`.
pub fn sector_polynomial(s: &Sector) -> LPoly {
    s.e_factor.shift(s.exponent)
}
