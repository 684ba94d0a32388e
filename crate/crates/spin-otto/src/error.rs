use thiserror::Error;

/// Validation failures raised while constructing domain values.
///
/// Construction is the only place invariants are checked; once a value
/// exists, every operation on it is total.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Coupling parameters must be finite and non-negative.
    #[error("invalid substance parameters: mu = {mu}, omega = {omega} (need finite values >= 0)")]
    InvalidParams { mu: f64, omega: f64 },

    /// Temperatures must be finite and strictly positive.
    #[error("invalid temperature {0} (need a finite value > 0)")]
    InvalidTemperature(f64),

    /// A cycle needs a strictly hotter hot bath.
    #[error("hot-bath temperature {hot} does not exceed cold-bath temperature {cold}")]
    TemperatureOrder { hot: f64, cold: f64 },

    /// The five X-state parameters failed a consistency check.
    #[error("invalid X state ({reason}): a = {a}, b = {b}, d = {d}, w = {w}, z = {z}")]
    InvalidXState {
        reason: &'static str,
        a: f64,
        b: f64,
        d: f64,
        w: f64,
        z: f64,
    },

    /// Dense matrices must be symmetric to within `oracle::SYMMETRY_TOLERANCE`.
    #[error("matrix entry ({row},{col}) differs from its transpose by {defect:e}; not symmetric")]
    NotSymmetric { row: usize, col: usize, defect: f64 },

    /// Dense matrices must hold finite entries.
    #[error("matrix entry ({row},{col}) is not finite")]
    NonFiniteMatrix { row: usize, col: usize },

    /// Measurement directions live on theta in [0, pi], phi in [0, 2*pi).
    #[error("invalid measurement angles: theta = {theta}, phi = {phi}")]
    InvalidMeasurementAngles { theta: f64, phi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
