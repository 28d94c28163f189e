//! Executable forms of the conjectured and proven formulas, and the
//! machinery comparing them.

mod counts;
mod data;
mod formulas;
mod main_conj;
mod printed;
mod verify;

pub use counts::{
    calibrate_fibonacci, computed_count, dimension_polynomial, expected_count,
    expected_count_shifted, fibonacci, frobenius_polynomial, polynomial_degree_bound,
    small_schroeder, stirling2, CountTable,
};
pub use data::{embedded_e, generic_e, Provenance, EMBEDDED_MAX};
pub use formulas::{closed_form, kronecker_coefficient, q_binomial, FormulaId, FormulaParams};
pub use main_conj::{
    alternating_component, dimension, eval_main_conjecture, eval_main_tensor, from_letters,
    to_letters, Mode,
};
pub use printed::{
    frobenius_erratum_n3, printed_dimension_polynomial_n3, printed_dims, printed_frobenius_n3,
    render_display, Display3, FrobeniusErratum, DISPLAYS_N3, PRINTED_FROBENIUS_N3,
};
pub use verify::{
    compare, compare_tensors, low_degree_check, skew_conjecture_check, CompareMode, Status,
    VerifyReport, Witness,
};
