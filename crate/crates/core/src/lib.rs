//! Skew information of non-Hermitian operators under two-parameter weightings.
//!
//! For a density operator `rho` and exponents `alpha, beta >= 0` with
//! `alpha + beta <= 1`, this crate evaluates the generalized covariance,
//! correlation and skew-information quantities `I, J, K, L, U, W`, and checks
//! the uncertainty relations between them. Every quantity has two independent
//! implementations (trace formulas and eigenbasis sums) that can be compared.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod eigen;
pub mod error;
pub mod inequality;
pub mod matrix;
pub mod quantities;
pub mod spectral;
pub mod states;

pub use error::{Error, Result};
pub use inequality::{
    compare_bounds, in_theorem1_domain, in_theorem2_domain, BoundComparison, CheckResult, Relation,
    Tolerance,
};
pub use matrix::{anticommutator, commutator, CMatrix};
pub use num_complex::Complex64;
pub use quantities::{Path, Quantity, QuantityResult, SkewContext};
pub use spectral::{
    center, matrix_power, validate_density, DensityOperator, HsOperator, SkewParams,
};
pub use states::{fixed_operators, isotropic, werner, Family, FamilyParam};
