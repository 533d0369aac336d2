use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::cone::dot;
use super::Cone;
use crate::error::{Error, Result};
use crate::report::Report;

/// A fan given by its maximal cones. Faces are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    maximal: Vec<Cone>,
}

/// Serialized form of a fan: rays sorted lexicographically and maximal
/// cones as sorted lists of ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDump {
    pub ambient_rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(ambient: usize, maximal: Vec<Cone>) -> Result<Self> {
        if let Some(c) = maximal.iter().find(|c| c.ambient() != ambient) {
            return Err(Error::InvalidArgument(format!(
                "cone of ambient rank {} in a fan of rank {ambient}",
                c.ambient()
            )));
        }
        let mut maximal = maximal;
        maximal.sort_by(|a, b| a.rays().cmp(b.rays()));
        maximal.dedup();
        Ok(Fan { ambient, maximal })
    }

    /// The fan consisting of one cone and its faces.
    pub fn from_cone(cone: Cone) -> Self {
        Fan {
            ambient: cone.ambient(),
            maximal: vec![cone],
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn maximal_cones(&self) -> &[Cone] {
        &self.maximal
    }

    /// Union of the rays of the maximal cones, sorted.
    pub fn rays(&self) -> Vec<Vec<i64>> {
        let set: BTreeSet<&Vec<i64>> = self.maximal.iter().flat_map(|c| c.rays()).collect();
        set.into_iter().cloned().collect()
    }

    pub fn is_simplicial(&self) -> bool {
        self.maximal.iter().all(Cone::is_simplicial)
    }

    pub fn is_smooth(&self) -> bool {
        self.maximal.iter().all(Cone::is_unimodular)
    }

    pub fn support_contains(&self, v: &[i64]) -> bool {
        self.maximal.iter().any(|c| c.contains(v))
    }

    /// Every cone of a simplicial fan, as sorted ray lists.
    pub fn simplicial_faces(&self) -> Result<Vec<Vec<Vec<i64>>>> {
        if !self.is_simplicial() {
            return Err(Error::InvalidArgument("face enumeration needs a simplicial fan".into()));
        }
        let mut faces: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
        for c in &self.maximal {
            let rays = c.rays();
            for mask in 0u64..(1 << rays.len()) {
                faces.insert(
                    (0..rays.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| rays[i].clone())
                        .collect(),
                );
            }
        }
        Ok(faces.into_iter().collect())
    }

    /// Star subdivision at a primitive vector in the support. Maximal cones
    /// not containing the vector are kept.
    pub fn star_subdivision(&self, ray: &[i64]) -> Result<Fan> {
        if ray.len() != self.ambient || ray.iter().all(|&x| x == 0) {
            return Err(Error::InvalidArgument(format!("invalid subdivision vector {ray:?}")));
        }
        if !self.support_contains(ray) {
            return Err(Error::RayOutsideSupport(ray.to_vec()));
        }
        let mut out = Vec::new();
        for c in &self.maximal {
            if !c.contains(ray) {
                out.push(c.clone());
                continue;
            }
            for f in c.facets() {
                if dot(f, ray) > 0 {
                    let mut gens = c.facet_rays(f);
                    gens.push(ray.to_vec());
                    out.push(Cone::new(self.ambient, &gens)?);
                }
            }
        }
        Fan::new(self.ambient, out)
    }

    pub fn dump(&self) -> FanDump {
        let rays = self.rays();
        let index: BTreeMap<&Vec<i64>, usize> =
            rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut maximal_cones: Vec<Vec<usize>> = self
            .maximal
            .iter()
            .map(|c| c.rays().iter().map(|r| index[r]).collect())
            .collect();
        maximal_cones.sort();
        FanDump {
            ambient_rank: self.ambient,
            rays,
            maximal_cones,
        }
    }

    /// Certifies that the maximal cones of a pure, full-dimensional,
    /// simplicial fan meet along common faces and cover `support` once:
    /// every wall is shared by two cones on opposite sides or lies on the
    /// boundary of `support`, and random interior points lie in exactly one
    /// cone.
    pub fn verify_subdivision_of(&self, support: &Cone, samples: usize, seed: u64) -> Report {
        let mut report = Report::new("fan structure");
        let d = self.ambient;
        let pure = self
            .maximal
            .iter()
            .all(|c| c.is_full_dimensional() && c.is_simplicial());
        report.check("pure, full-dimensional and simplicial", pure, "");
        if !pure {
            return report;
        }
        let mut walls: BTreeMap<Vec<Vec<i64>>, Vec<(usize, Vec<i64>)>> = BTreeMap::new();
        for (ci, c) in self.maximal.iter().enumerate() {
            for (i, opposite) in c.rays().iter().enumerate() {
                let wall: Vec<Vec<i64>> = c
                    .rays()
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, r)| r.clone())
                    .collect();
                walls.entry(wall).or_default().push((ci, opposite.clone()));
            }
        }
        let mut bad_walls = Vec::new();
        for (wall, users) in &walls {
            let ok = match users.as_slice() {
                [(a, pa), (_, pb)] => {
                    let normal = self.maximal[*a]
                        .facets()
                        .iter()
                        .find(|f| wall.iter().all(|r| dot(f, r) == 0))
                        .expect("wall of a simplicial cone is a facet");
                    dot(normal, pa) > 0 && dot(normal, pb) < 0
                }
                [_] => support
                    .facets()
                    .iter()
                    .any(|f| wall.iter().all(|r| dot(f, r) == 0)),
                _ => false,
            };
            if !ok {
                bad_walls.push(wall.clone());
            }
        }
        report.check_with("walls are shared or on the boundary", bad_walls.is_empty(), || {
            format!("{} bad walls, first {:?}", bad_walls.len(), bad_walls[0])
        });

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad_points = Vec::new();
        let mut tested = 0;
        while tested < samples {
            let p: Vec<i64> = (0..d).map(|_| 0).collect();
            let p = support.rays().iter().fold(p, |acc, r| {
                let w: i64 = rng.gen_range(1..1_000_000);
                acc.iter().zip(r).map(|(a, x)| a + w * x).collect()
            });
            // skip points on any wall hyperplane
            let generic = self
                .maximal
                .iter()
                .all(|c| c.facets().iter().all(|f| dot(f, &p) != 0));
            if !generic {
                continue;
            }
            tested += 1;
            let hits = self.maximal.iter().filter(|c| c.contains(&p)).count();
            if hits != 1 {
                bad_points.push((p, hits));
            }
        }
        report.check_with(
            format!("{samples} generic points covered exactly once"),
            bad_points.is_empty(),
            || format!("{:?}", bad_points[0]),
        );
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(d: usize, gens: &[&[i64]]) -> Cone {
        Cone::new(d, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn subdividing_a_smooth_cone_at_its_ray_changes_nothing() {
        let fan = Fan::from_cone(cone(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(fan.star_subdivision(&[1, 0]).unwrap(), fan);
    }

    #[test]
    fn subdividing_the_quadrant_at_the_diagonal() {
        let fan = Fan::from_cone(cone(2, &[&[1, 0], &[0, 1]]));
        let sub = fan.star_subdivision(&[1, 1]).unwrap();
        assert_eq!(sub.maximal_cones().len(), 2);
        assert!(sub.is_smooth());
        let support = cone(2, &[&[1, 0], &[0, 1]]);
        assert!(sub.verify_subdivision_of(&support, 10, 1).passed());
    }

    #[test]
    fn outside_support_is_an_error() {
        let fan = Fan::from_cone(cone(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(
            fan.star_subdivision(&[-1, 1]).err(),
            Some(Error::RayOutsideSupport(vec![-1, 1]))
        );
    }

    #[test]
    fn overlapping_cones_fail_verification() {
        let support = cone(2, &[&[1, 0], &[0, 1]]);
        let fan = Fan::new(
            2,
            vec![cone(2, &[&[1, 0], &[1, 2]]), cone(2, &[&[1, 1], &[0, 1]])],
        )
        .unwrap();
        assert!(!fan.verify_subdivision_of(&support, 10, 1).passed());
    }

    #[test]
    fn dump_is_sorted() {
        let fan = Fan::from_cone(cone(2, &[&[1, 0], &[0, 1]]))
            .star_subdivision(&[1, 1])
            .unwrap();
        let d = fan.dump();
        assert_eq!(d.rays, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(d.maximal_cones, vec![vec![0, 2], vec![1, 2]]);
        let faces = fan.simplicial_faces().unwrap();
        assert_eq!(faces.len(), 6); // 0, three rays, two cones
    }
}
