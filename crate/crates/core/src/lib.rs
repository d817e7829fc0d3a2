//! Husimi and Wigner phase-space distributions for an electron in a uniform
//! magnetic field.
//!
//! States live in a truncated two-mode Fock space spanned by the kinetic
//! momentum ladder (`Π±`) and the guiding-center ladder (`K±`). Phase space is
//! labelled by the complex pair `(γ, ε)`. Every closed-form distribution in
//! [`closedform`] has an independent Fock-space or quadrature counterpart so
//! the two routes can be checked against each other.
//!
//! Module map:
//! - [`hermite2`]: two-variable Hermite polynomials `H_{m,n}(x, y)`.
//! - [`fock`]: model parameters, ladder operators, state builders, overlaps.
//! - [`closedform`]: Husimi/Wigner evaluators and overlap kernels.
//! - [`smoothing`]: Gaussian smoothing of the Wigner function by quadrature.
//! - [`marginals`]: one-sided integrals of the Husimi function.
//! - [`squeeze`]: squeezing operators and uncertainty products.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod closedform;
pub mod error;
pub mod fock;
pub mod hermite2;
pub mod marginals;
mod math;
pub mod quad;
pub mod smoothing;
pub mod squeeze;

pub use error::{Error, Result};
pub use fock::{FockAmplitudes, ModelParams, OperatorRep, PhasePoint};

/// Complex double used throughout the crate.
pub type C64 = num_complex::Complex64;
