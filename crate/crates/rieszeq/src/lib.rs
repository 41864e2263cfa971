//! Equilibrium measures for Riesz pair interactions confined by a power-law
//! external field.
//!
//! The crate computes the closed-form equilibrium measures that exist when
//! the kernel exponent sits four below the dimension (and in the Coulomb and
//! one-dimensional log cases), verifies candidates against the variational
//! (Frostman) optimality conditions by numerical evaluation of the modified
//! potential, and approximates the same measures from the particle side by
//! limited-memory BFGS minimization of the discrete energy.
//!
//! Modules:
//! - [`specfun`]: log-gamma, digamma, hypergeometric series, orthogonal
//!   polynomials, complete elliptic K.
//! - [`quadrature`]: adaptive 1-D integration with declared singularities and
//!   the Funk–Hecke spherical reduction.
//! - [`kernels`]: Riesz kernels, external fields, gradients, admissibility.
//! - [`analytic`]: closed-form equilibrium measures, critical radii, Wiener
//!   constants, and sampling.
//! - [`potentials`]: modified potentials of sphere and mixture candidates,
//!   their closed-form derivatives, and Frostman verification.
//! - [`discrete`]: N-point energies, gradients, L-BFGS minimization,
//!   multi-start driver, and radial statistics.
//! - [`cli`]: the `rieszeq` command-line front end.
//!
//! The `examples/` directory holds one runnable example per capability; see
//! the README for a tour.

pub mod analytic;
pub mod cli;
pub mod discrete;
pub mod error;
pub mod kernels;
pub mod potentials;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use kernels::{Admissibility, ExternalField, RieszParams};
