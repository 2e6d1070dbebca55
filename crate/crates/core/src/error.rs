//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the simulation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A state, time, or derivative argument was NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFiniteInput(&'static str),

    /// A parameter violates its documented constraint.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A non-numeric input was malformed (empty series, bad point syntax, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Nondimensionalization needs u, v, p strictly positive.
    #[error("singular scaling: {0} must be > 0")]
    SingularScaling(&'static str),

    /// The forced prey balance divides by beta - delta*q*E, which is zero.
    #[error("prey-degenerate: beta equals delta*q*E; forced balance has no finite solution")]
    PreyDegenerate,

    /// The forced predator balance divides by sigma - mu, which is zero.
    #[error("predator-degenerate: sigma equals mu; forced balance has no finite solution")]
    PredatorDegenerate,

    /// A config value failed validation; `key` is the offending TOML key.
    #[error("config validation failed: {key}: {constraint}")]
    ConfigValidation { key: String, constraint: String },

    /// The config file could not be parsed at all.
    #[error("config parse error: {0}")]
    ConfigParse(String),

    /// Adaptive step size collapsed below dt * 1e-12; the problem is too
    /// stiff for the explicit pair at the requested tolerances.
    #[error("stiffness: adaptive step underflow at t = {t}")]
    StepUnderflow { t: f64 },

    /// The state left the representable range during integration.
    #[error("numerical blow-up: non-finite state at t = {t}")]
    BlowUp { t: f64 },

    /// Explicit diffusion step exceeds the stability bound.
    #[error("CFL violation: dt = {dt} exceeds the admissible limit {dt_max}")]
    CflViolation { dt: f64, dt_max: f64 },

    /// A series or window is too short for the requested statistic.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A trajectory CSV row could not be parsed or violated an invariant.
    #[error("csv error at row {row}: {msg}")]
    CsvParse { row: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
