//! Numerical library for the Bergman space of Thullen domains
//! `U^alpha = {(z1, z2) : |z1|^(2/alpha) + |z2|^2 < 1}`.
//!
//! The crate evaluates the closed-form Bergman kernel and, independently, its
//! orthonormal monomial series; builds the domain's holomorphic and
//! non-holomorphic involutions and the translation operators they induce;
//! integrates over the domain through the polydisc substitution; computes the
//! Skwarczynski metric and a net covering of the domain; and assembles
//! truncated Toeplitz/Hankel matrices whose boundary profiles exhibit the
//! boundedness and compactness behavior of the underlying operators.
//!
//! All core math is generic over the scalar type via [`num::Real`]
//! (`f32`/`f64`); the concrete aliases below fix `f64`, which is what the
//! quoted tolerances assume.

pub mod basis;
pub mod domain;
pub mod error;
pub mod integrals;
pub mod maps;
pub mod metric;
pub mod num;
pub mod operator;
pub mod quadrature;
pub mod special;
pub mod symbols;

pub use error::{Error, Result};

/// `f64` point of the domain.
pub type Point64 = domain::Point<f64>;
/// `f64` domain parameter.
pub type DomainParam64 = domain::DomainParam<f64>;
/// `f64` complex scalar.
pub type C64 = num::C<f64>;
/// `f32` point of the domain.
pub type Point32 = domain::Point<f32>;
/// `f32` domain parameter.
pub type DomainParam32 = domain::DomainParam<f32>;
