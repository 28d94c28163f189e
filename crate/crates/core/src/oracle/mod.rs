//! Brute-force coinvariant computations in superspace.

mod coinvariant;
mod report;
mod ring;

pub use coinvariant::{
    coinvariant_frobenius, coinvariant_frobenius_bounded, cycle_representative, extract_generic_e,
    extract_generic_e_bounded, invariants_of_multidegree, DegreeData, DEFAULT_N_BOUND,
};
pub use report::OracleReport;
pub use ring::{
    apply_sigma, compositions, permutations, subsets, super_monomials, Ring, SuperMonomial,
};
