mod gcd;
mod mfrac;
mod mpoly;
mod var;

pub use gcd::{gcd, lcm};
pub use mfrac::MFrac;
pub use mpoly::{rat, MPoly, Monomial};
pub use var::Var;
