//! Library error type.

/// Errors surfaced by the numerical core.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alpha must be positive and finite, got {0}")]
    InvalidAlpha(f64),

    #[error("point ({z1_re}{z1_im:+}i, {z2_re}{z2_im:+}i) is not interior (boundary defect {rho})")]
    NonInterior {
        z1_re: f64,
        z1_im: f64,
        z2_re: f64,
        z2_im: f64,
        rho: f64,
    },

    #[error("Mobius parameter lies outside the unit disc: |c| = {0}")]
    ParameterOutsideDisc(f64),

    #[error("kernel evaluation produced a non-finite value")]
    NonFiniteKernel,

    #[error("monomial norm c[{m},{n}] not representable at this precision")]
    CoefficientOverflow { m: usize, n: usize },

    #[error("radius must lie in (0, 1), got {0}")]
    InvalidRadius(f64),

    #[error("degenerate quadrature levels: {0}")]
    InvalidLevels(String),

    #[error("{name} = {value} violates the hypothesis {requirement}")]
    HypothesisViolation {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("integrand not finite at node {index}")]
    NodeEvaluation { index: usize },

    #[error("positive weight function vanished or went negative at node {index}")]
    NonPositiveWeight { index: usize },

    #[error("sample set is empty")]
    EmptySample,

    #[error("alpha mismatch: operator built at {operator}, covering at {covering}")]
    AlphaMismatch { operator: f64, covering: f64 },

    #[error("region is not precompact: min boundary defect {min_rho} below margin {margin}")]
    RegionNotPrecompact { min_rho: f64, margin: f64 },

    #[error("pair is outside the far regime: s = {s} must be below {threshold}")]
    NotFarApart { s: f64, threshold: f64 },

    #[error("truncation order produced an empty basis")]
    EmptyBasis,
}

pub type Result<T> = std::result::Result<T, Error>;
