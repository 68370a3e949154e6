//! Exact-arithmetic engine for Hopf-cyclic cohomology.
//!
//! The crate materializes, over `Q` or a prime field, the monad
//! `Hom_k(H, -)` on modules over a finite-dimensional Hopf algebra `H`,
//! its modules (anti-Yetter-Drinfeld contramodules), the Chern character
//! mixed complex of an `H`-module algebra, and Hopf-cyclic cohomology
//! computed by three mutually cross-checking complexes: the `y`-series
//! complex of the Hom mixed complex, the cyclic double complex, and a
//! tricomplex that accepts mixed (non-stable) coefficients. All identities
//! are verified as exact matrix equalities; there is no floating point
//! anywhere.

pub mod ayd;
pub mod complex;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod functors;
pub mod hopf;
pub mod matrix;
pub mod rep;
pub mod report;

pub use error::{Error, Result};
pub use field::{FieldKind, Scalar};
pub use matrix::{Matrix, SubspaceBasis};
pub use report::ValidationReport;
