use serde::Serialize;

use super::matrices::word_product;
use super::{Cone, Fan};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

/// A face of the Coxeter fan of `A_{r-1}`, indexed by an ordered set
/// partition `(B_1, ..., B_k)` of `{1..r}`. The cone is spanned by the
/// weight vectors of `B_1`, `B_1 ∪ B_2`, ..., `B_1 ∪ ... ∪ B_{k-1}` and has
/// dimension `k - 1`; chambers have `r` singleton blocks and the single
/// block gives the zero cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoxeterCone {
    blocks: Vec<Vec<usize>>,
}

impl CoxeterCone {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if blocks.iter().any(Vec::is_empty) || all.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::InvalidArgument(format!(
                "{blocks:?} is not an ordered set partition"
            )));
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(CoxeterCone { blocks })
    }

    /// The chamber `({p(1)}, ..., {p(r)})`.
    pub fn chamber(p: &Permutation) -> Self {
        CoxeterCone {
            blocks: p.one_line().iter().map(|&i| vec![i]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn r(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn dim(&self) -> usize {
        self.blocks.len() - 1
    }

    /// The flag of initial unions `B_1 ∪ ... ∪ B_j`, `j < k`.
    pub fn flag(&self) -> Vec<Vec<usize>> {
        let mut acc = Vec::new();
        let mut out = Vec::new();
        for b in &self.blocks[..self.blocks.len() - 1] {
            acc.extend_from_slice(b);
            let mut s = acc.clone();
            s.sort_unstable();
            out.push(s);
        }
        out
    }

    pub fn rays(&self) -> Vec<Vec<i64>> {
        let r = self.r();
        self.flag().iter().map(|s| weight_vector(r, s)).collect()
    }

    /// Whether `g` maps the cone to itself, i.e. fixes every block setwise.
    pub fn is_stable_under(&self, g: &Permutation) -> bool {
        self.blocks.iter().all(|b| {
            let mut img: Vec<usize> = b.iter().map(|&i| g.apply(i)).collect();
            img.sort_unstable();
            img == *b
        })
    }

    pub fn to_cone(&self) -> Result<Cone> {
        Cone::new(self.r() - 1, &self.rays())
    }
}

/// Image in `Z^{r-1}` of the indicator of `subset ⊆ {1..r}`, where `e_r` is
/// identified with `-(1, ..., 1)`.
pub fn weight_vector(r: usize, subset: &[usize]) -> Vec<i64> {
    let mut v = vec![0i64; r - 1];
    for &i in subset {
        if i == r {
            v.iter_mut().for_each(|x| *x -= 1);
        } else {
            v[i - 1] += 1;
        }
    }
    v
}

/// The Coxeter fan of `A_{r-1}` on `Z^{r-1}` with its `S_r` action.
#[derive(Clone, Debug)]
pub struct CoxeterFan {
    r: usize,
}

impl CoxeterFan {
    pub fn new(r: usize) -> Result<Self> {
        if !(2..=10).contains(&r) {
            return Err(Error::OutOfRange {
                what: "r",
                value: r,
                min: 2,
                max: 10,
            });
        }
        Ok(CoxeterFan { r })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.r - 1
    }

    /// All `2^r − 2` rays, sorted: the nonzero 0/1 vectors and their negatives.
    pub fn rays(&self) -> Vec<Vec<i64>> {
        let r = self.r;
        let mut rays: Vec<Vec<i64>> = (1u32..(1 << r) - 1)
            .map(|mask| {
                let s: Vec<usize> = (1..=r).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                weight_vector(r, &s)
            })
            .collect();
        rays.sort();
        rays
    }

    /// Every face, one per ordered set partition.
    pub fn cones(&self) -> Vec<CoxeterCone> {
        ordered_set_partitions(self.r)
            .into_iter()
            .map(|blocks| CoxeterCone { blocks })
            .collect()
    }

    /// The `r!` Weyl chambers, in the lexicographic order of permutations.
    pub fn chambers(&self) -> Vec<CoxeterCone> {
        Permutation::all(self.r).iter().map(CoxeterCone::chamber).collect()
    }

    /// Matrix of `σ`: column `i` is the weight vector of `{σ(i)}`.
    pub fn action_matrix(&self, sigma: &Permutation) -> Result<IntMatrix> {
        if sigma.degree() != self.r {
            return Err(Error::InvalidArgument(format!(
                "permutation of degree {} on the A_{} fan",
                sigma.degree(),
                self.r - 1
            )));
        }
        let cols: Vec<Vec<i64>> = (1..self.r)
            .map(|i| weight_vector(self.r, &[sigma.apply(i)]))
            .collect();
        IntMatrix::from_columns(self.r - 1, &cols)
    }

    /// Matrices of `(k k+1)` for `k = 1..r-1`.
    pub fn generators(&self) -> Vec<IntMatrix> {
        (1..self.r)
            .map(|k| {
                self.action_matrix(&Permutation::transposition(self.r, k, k + 1))
                    .expect("degree matches")
            })
            .collect()
    }

    /// Product of generator matrices along a reduced word; agrees with
    /// [`Self::action_matrix`].
    pub fn word_matrix(&self, sigma: &Permutation) -> Result<IntMatrix> {
        let gens = self.generators();
        word_product(sigma, |k| Ok(gens[k - 1].clone()))
    }

    /// The geometric fan of chambers.
    pub fn to_fan(&self) -> Result<Fan> {
        let cones = self
            .chambers()
            .iter()
            .map(CoxeterCone::to_cone)
            .collect::<Result<Vec<_>>>()?;
        Fan::new(self.r - 1, cones)
    }
}

/// All ordered set partitions of `{1..r}` (Fubini many).
pub fn ordered_set_partitions(r: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(remaining: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        let m = remaining.len();
        for mask in 1u32..(1 << m) {
            let (block, rest): (Vec<usize>, Vec<usize>) = {
                let mut b = Vec::new();
                let mut r = Vec::new();
                for (i, &x) in remaining.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        b.push(x);
                    } else {
                        r.push(x);
                    }
                }
                (b, r)
            };
            prefix.push(block);
            go(&rest, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (1..=r).collect();
    go(&all, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn fubini(r: usize) -> usize {
        // a(r) = Σ_k C(r,k) a(r-k)
        let mut a = vec![1usize];
        for m in 1..=r {
            let mut s = 0;
            let mut binom = 1;
            for k in 1..=m {
                binom = binom * (m - k + 1) / k;
                s += binom * a[m - k];
            }
            a.push(s);
        }
        a[r]
    }

    #[test]
    fn face_counts_are_fubini_numbers() {
        assert_eq!(fubini(5), 541);
        for r in 2..=5 {
            let f = CoxeterFan::new(r).unwrap();
            assert_eq!(f.cones().len(), fubini(r));
            assert_eq!(f.rays().len(), (1 << r) - 2);
            assert_eq!(f.chambers().len(), (1..=r).product::<usize>());
        }
    }

    #[test]
    fn a1_is_the_fan_of_the_projective_line() {
        let f = CoxeterFan::new(2).unwrap();
        assert_eq!(f.rays(), vec![vec![-1], vec![1]]);
        let fan = f.to_fan().unwrap();
        assert_eq!(fan.maximal_cones().len(), 2);
        assert_eq!(f.generators()[0].to_rows(), vec![vec![-1]]);
    }

    #[test]
    fn a2_is_hexagonal() {
        let f = CoxeterFan::new(3).unwrap();
        let fan = f.to_fan().unwrap();
        assert_eq!(fan.rays().len(), 6);
        assert_eq!(fan.maximal_cones().len(), 6);
        assert!(fan.is_smooth());
    }

    #[test]
    fn identity_chamber_is_upper_triangular_ones() {
        let c = CoxeterCone::chamber(&Permutation::identity(4));
        assert_eq!(c.rays(), vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn displayed_generators() {
        let f = CoxeterFan::new(4).unwrap();
        let g = f.generators();
        assert_eq!(g[0].to_rows(), vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(g[2].to_rows(), vec![vec![1, 0, -1], vec![0, 1, -1], vec![0, 0, -1]]);
    }

    #[test]
    fn generators_permute_rays_and_words_agree() {
        for r in 2..=6 {
            let f = CoxeterFan::new(r).unwrap();
            let rays: BTreeSet<Vec<i64>> = f.rays().into_iter().collect();
            for g in f.generators() {
                let img: BTreeSet<Vec<i64>> = rays.iter().map(|v| g.mul_vec(v).unwrap()).collect();
                assert_eq!(img, rays);
            }
            if r <= 4 {
                for p in Permutation::all(r) {
                    assert_eq!(f.word_matrix(&p).unwrap(), f.action_matrix(&p).unwrap());
                }
            }
        }
    }

    #[test]
    fn chambers_form_a_complete_fan() {
        for r in 2..=4 {
            let f = CoxeterFan::new(r).unwrap();
            let fan = f.to_fan().unwrap();
            let d = r - 1;
            // the whole space as support: probe with points of both signs
            let mut rng_pts = 0;
            for c in fan.maximal_cones() {
                assert!(c.is_unimodular());
                rng_pts += 1;
            }
            assert_eq!(rng_pts, (1..=r).product::<usize>());
            let probes: Vec<Vec<i64>> = (0..50)
                .map(|s: i64| (0..d as i64).map(|i| ((s * 7919 + i * 104_729) % 201) - 100).collect())
                .collect();
            for p in probes {
                let interior = fan.maximal_cones().iter().all(|c| {
                    c.facets().iter().all(|f| f.iter().zip(&p).map(|(a, b)| a * b).sum::<i64>() != 0)
                });
                if interior {
                    let hits = fan.maximal_cones().iter().filter(|c| c.contains(&p)).count();
                    assert_eq!(hits, 1, "{p:?}");
                }
            }
        }
    }

    #[test]
    fn stabilizers_of_chambers_are_trivial() {
        let r = 4;
        for c in CoxeterFan::new(r).unwrap().chambers() {
            let stab = Permutation::all(r).iter().filter(|g| c.is_stable_under(g)).count();
            assert_eq!(stab, 1);
        }
    }

    #[test]
    fn action_maps_cone_to_permuted_cone() {
        let f = CoxeterFan::new(4).unwrap();
        for cone in f.cones() {
            for g in Permutation::all(4) {
                let a = f.action_matrix(&g).unwrap();
                let img: BTreeSet<Vec<i64>> =
                    cone.rays().iter().map(|v| a.mul_vec(v).unwrap()).collect();
                let permuted = CoxeterCone::new(
                    cone.blocks()
                        .iter()
                        .map(|b| b.iter().map(|&i| g.apply(i)).collect())
                        .collect(),
                )
                .unwrap();
                let expected: BTreeSet<Vec<i64>> = permuted.rays().into_iter().collect();
                assert_eq!(img, expected);
            }
        }
    }
}
