//! Partitions, permutations, set partitions, angle types and the coset
//! combinatorics of the twisted-sector enumeration.

mod angle;
mod coset;
mod partition;
mod permutation;
mod set_partition;

pub use angle::{angle_types, standard_angle_types, AngleType};
pub use coset::{
    component_partition_types, coset_partition, reduced_representatives,
    reduced_representatives_with, star_partition, theta_star, CosetClass,
};
pub use partition::{partitions_of, Partition};
pub use permutation::{standard_element, Permutation};
pub use set_partition::{adjacency, multiplicity_partition, young_intersection, SetPartition};
