mod engine;
mod htilde;
mod interp;
mod ops;

pub use engine::{apply_diagonal, elementary, htilde_p, recover, PointData};
pub use htilde::{htilde_to_s, modified_macdonald, seed_modified_macdonald};
pub use interp::{interpolate_1d, interpolate_2d};
pub use ops::{
    apply_diagonal_symbolic, delta_prime, delta_prime_eigenvalue, expand_in_macdonald, htilde_norm,
    nabla, nabla_eigenvalue, nabla_symbolic, pi_eigenvalue, pi_op, star, star_exact, star_norm_p,
    star_scalar, theta,
};
