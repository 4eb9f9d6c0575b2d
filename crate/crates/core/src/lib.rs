//! Exact computation of class expansions `f(J_1,...,J_n) = sum_mu a_mu(n) C_mu`
//! for symmetric functions `f` evaluated at the Jucys-Murphy elements of the
//! symmetric group.
//!
//! The library has three independent computation routes for the same objects:
//!
//! * [`engine`] computes the n-independent reduced coefficients `c_rho` by
//!   recurrence and assembles them into class expansions for any `n`;
//! * [`oracle`] computes the same expansions by brute force in the group
//!   algebra `C[S_n]`;
//! * [`measure`]/[`character`] verify both against central-character
//!   identities.
//!
//! All arithmetic is exact: arbitrary-precision rationals and sparse
//! polynomials in the indeterminates `z` (Hall-Littlewood) and `alpha`
//! (Jack).

pub mod algebra;
pub mod catalan;
pub mod character;
pub mod engine;
pub mod error;
pub mod genfun;
pub mod measure;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod series;
pub mod symfun;
pub mod verify;

pub use error::Error;
pub use partition::Partition;
pub use poly::{Poly, Rat};
pub use series::TSeries;

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
