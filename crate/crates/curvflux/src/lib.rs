//! Curvature-flux laboratory for weighted hypersurface geometry.
//!
//! The crate has two halves that check each other:
//!
//! - an **algebraic half** ([`sympoly`], [`newton`]) implementing weighted
//!   elementary symmetric functions `σ_k^∞` and weighted Newton operators
//!   `T_k^∞` generically over exact rational or `f64` arithmetic; and
//! - a **geometric half** ([`surfaces`], [`calculus`], [`fluxlab`]) that
//!   evaluates the same objects on concrete hypersurface charts and audits
//!   integral identities (weighted divergence theorem, Newton-operator flux
//!   balances, variational residuals) by quadrature with convergence
//!   ladders.
//!
//! Everything is deterministic: no clocks, no global RNG, fixed-order
//! summation. Running the same input twice produces bit-identical numbers.

pub mod calculus;
pub mod error;
pub mod fluxlab;
pub mod newton;
pub mod scalar;
pub mod surfaces;
pub mod sympoly;

pub use error::{CurvError, Result};
pub use scalar::{Exact, Scalar};
