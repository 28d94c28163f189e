pub mod cache;
pub mod checks;
pub mod cli;
pub mod config;
pub mod conjecture;
pub mod error;
pub mod macdonald;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod sym;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{MFrac, MPoly, Monomial, Var};
pub use sym::{Basis, SymFunc, TensorFrobenius};
