//! Cones, fans, star subdivisions and fiber products; the fans of the local
//! model and the Coxeter fan of type `A`.

mod cone;
mod coxeter;
mod delta;
mod fan;
mod fiber;
mod matrices;

pub use cone::{extreme_rays_of_h_cone, primitive, Cone};
pub use coxeter::{ordered_set_partitions, weight_vector, CoxeterCone, CoxeterFan};
pub use delta::{
    build_delta_fan, combinatorial_check, multiplicity_check, sigma2, verify_bundle_structure,
    verify_delta_fan, MAX_GEOMETRIC_N,
};
pub use fan::{Fan, FanDump};
pub use fiber::{
    coordinates_in, curve_cone, fiber_product_check, fiber_product_cones, iterated_fiber_product, node_basis,
    triple_basis, FiberProduct,
};
pub use matrices::{
    build_c2, build_c3, delta_generators, multiplicity_functional, projection_pi, q_matrix,
    sn_action_n, sn_generator_n, sn_matrix_n,
};
