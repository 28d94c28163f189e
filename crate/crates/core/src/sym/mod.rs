mod plethysm;
mod product;
mod schur_poly;
mod symfunc;
mod tables;
mod tensor;

pub use plethysm::{plethysm, plethysm_scalar, polyring_coefficient, Alphabet};
pub use product::{hall_inner, kronecker, lr_product, multiply, multiply_p, skew, skew_schur};
pub use schur_poly::{
    monomial_symmetric, schur_at_ones, schur_at_ones_formal, schur_expand, schur_poly,
    skew_schur_at_ones, skew_schur_poly, super_schur, super_schur_at_ones,
    super_schur_at_ones_formal, super_schur_kj,
};
pub use symfunc::{Basis, SymFunc};
pub use tables::{character, kostka_number, remove_rim_hooks, tables, Tables};
pub use tensor::{TensorFrobenius, TensorKey};
