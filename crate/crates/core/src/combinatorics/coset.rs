//! The coset decomposition `P(θ)` of `S_r` and its reduction modulo
//! `S_{M(λ)} ∩ S_{M(θ)}`.

use std::collections::HashMap;

use serde::Serialize;

use super::{
    adjacency, multiplicity_partition, young_intersection, AngleType, Partition, Permutation,
    SetPartition,
};
use crate::error::{Error, Result};

/// One right coset `S_{M(θ⋆p)} p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetClass {
    /// Sorted lexicographically.
    pub members: Vec<Permutation>,
    pub representative: Permutation,
    /// `M(θ⋆p)`; its Young subgroup acts on the left of the representative.
    pub stabilizer_partition: SetPartition,
}

/// `θ⋆p = adj(θ∘p)∘p⁻¹` as a function on `{1..r}`.
pub fn theta_star(theta: &AngleType, p: &Permutation) -> Result<Vec<usize>> {
    check_degree(theta, p)?;
    let r = theta.len();
    let composed: Vec<_> = (1..=r).map(|j| theta.at(p.apply(j))).collect();
    let adj = adjacency(&composed);
    let p_inv = p.inverse();
    Ok((1..=r).map(|i| adj[p_inv.apply(i) - 1]).collect())
}

/// `M(θ⋆p)`.
pub fn star_partition(theta: &AngleType, p: &Permutation) -> Result<SetPartition> {
    Ok(multiplicity_partition(&theta_star(theta, p)?))
}

fn check_degree(theta: &AngleType, p: &Permutation) -> Result<()> {
    if theta.len() != p.degree() {
        return Err(Error::InvalidArgument(format!(
            "angle type {theta} has length {} but permutation {p} has degree {}",
            theta.len(),
            p.degree()
        )));
    }
    Ok(())
}

/// Classes of `P(θ)` together with a lookup from permutation to class index.
struct Cosets {
    classes: Vec<CosetClass>,
    index: HashMap<Permutation, usize>,
}

fn build_cosets(theta: &AngleType) -> Cosets {
    let r = theta.len();
    let mut classes = Vec::new();
    let mut index = HashMap::new();
    for p in Permutation::all(r) {
        if index.contains_key(&p) {
            continue;
        }
        let stab = star_partition(theta, &p).expect("degree matches");
        let mut members: Vec<Permutation> = stab
            .young_elements()
            .iter()
            .map(|q| q.compose(&p))
            .collect();
        members.sort();
        let id = classes.len();
        for m in &members {
            index.insert(m.clone(), id);
        }
        // p is the first unassigned permutation in lex order, hence the least member
        debug_assert_eq!(members[0], p);
        classes.push(CosetClass {
            members,
            representative: p,
            stabilizer_partition: stab,
        });
    }
    Cosets { classes, index }
}

/// The partition `P(θ)` of `S_r` into right cosets `S_{M(θ⋆p)} p`, ordered
/// by their lexicographically least member (which is the representative).
pub fn coset_partition(theta: &AngleType) -> Vec<CosetClass> {
    build_cosets(theta).classes
}

/// Representatives of `P(θ)` modulo the left action `p̄ ↦ (q∘p)‾` of
/// `S_{M(λ)} ∩ S_{M(θ)}`. Each orbit is represented by its lexicographically
/// least permutation.
pub fn reduced_representatives(lambda: &Partition, theta: &AngleType) -> Result<Vec<CosetClass>> {
    reduced_representatives_with(lambda, theta, |_| 0)
}

/// Like [`reduced_representatives`], but `pick` chooses the representative
/// among all permutations of an orbit (given sorted); the returned class is
/// the one containing the chosen permutation.
pub fn reduced_representatives_with<F>(
    lambda: &Partition,
    theta: &AngleType,
    mut pick: F,
) -> Result<Vec<CosetClass>>
where
    F: FnMut(&[Permutation]) -> usize,
{
    if !theta.belongs_to(lambda) {
        return Err(Error::InvalidArgument(format!(
            "angle type {theta} is not associated with {lambda}"
        )));
    }
    if !theta.is_standard_for(lambda) {
        return Err(Error::InvalidArgument(format!(
            "angle type {theta} is not standard for {lambda}"
        )));
    }
    let cosets = build_cosets(theta);
    let acting = young_intersection(
        &multiplicity_partition(lambda.parts()),
        &theta.multiplicity_partition(),
    )?;

    let mut parent: Vec<usize> = (0..cosets.classes.len()).collect();
    for (id, class) in cosets.classes.iter().enumerate() {
        for q in acting.young_generators() {
            let image = cosets.index[&q.compose(&class.representative)];
            union(&mut parent, id, image);
        }
    }

    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut orbit_of_root: HashMap<usize, usize> = HashMap::new();
    for id in 0..cosets.classes.len() {
        let root = find(&mut parent, id);
        let k = *orbit_of_root.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[k].push(id);
    }

    let mut out = Vec::with_capacity(orbits.len());
    for orbit in orbits {
        let mut members: Vec<Permutation> = orbit
            .iter()
            .flat_map(|&id| cosets.classes[id].members.iter().cloned())
            .collect();
        members.sort();
        let choice = pick(&members);
        let chosen = members
            .get(choice)
            .ok_or_else(|| Error::InvalidArgument(format!("pick index {choice} out of range")))?
            .clone();
        let class = &cosets.classes[cosets.index[&chosen]];
        out.push(CosetClass {
            members: class.members.clone(),
            representative: chosen,
            stabilizer_partition: class.stabilizer_partition.clone(),
        });
    }
    Ok(out)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// For the block decomposition `M(θ⋆p) = B_1 ⊔ ... ⊔ B_k`, returns
/// `(r_j, μ_j)` where `r_j = |B_j|` and `μ_j ⊢ r_j` lists the sizes of the
/// blocks of `M(λ) ∧ M(θ⋆p)` inside `B_j`.
pub fn component_partition_types(
    lambda: &Partition,
    theta: &AngleType,
    p: &Permutation,
) -> Result<Vec<(usize, Partition)>> {
    if theta.len() != lambda.len() {
        return Err(Error::InvalidArgument(format!(
            "angle type {theta} does not match partition {lambda}"
        )));
    }
    let star = star_partition(theta, p)?;
    let meet = young_intersection(&multiplicity_partition(lambda.parts()), &star)?;
    star.blocks()
        .iter()
        .map(|block| {
            let sizes = meet
                .blocks()
                .iter()
                .filter(|b| block.binary_search(&b[0]).is_ok())
                .map(Vec::len)
                .collect();
            Ok((block.len(), Partition::from_unsorted(sizes)?))
        })
        .collect()
}
