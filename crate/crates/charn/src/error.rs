//! Error type shared across the crate.

use std::fmt;

/// Errors raised by model evaluation, estimation, testing and I/O.
#[derive(Debug, Clone, PartialEq)]
pub enum CharnError {
    /// Invalid configuration or parameters (bad segmentation, flags, files).
    Config(String),
    /// A time index outside `[1, n]`.
    IndexOutOfRange { t: usize, n: usize },
    /// Evaluated volatility fell below the configured floor at time `t`.
    VolatilityFloor { t: usize, value: f64, floor: f64 },
    /// The simulation recursion produced a non-finite value at time `t`.
    SimulationDiverged { t: usize },
    /// The noise family carries zero Fisher information; the test statistic
    /// is degenerate for it.
    UnusableScore(String),
    /// The plug-in variance is zero while the tested shift is not.
    DegenerateVariance,
    /// Too few or spread-free residuals for density estimation.
    DegenerateSample(String),
    /// Argument outside the mathematical domain of an operation.
    Domain(String),
    /// Optimizer or numerical-estimation failure.
    Estimation(String),
    /// A density evaluated to zero where a logarithm was required (time `t`).
    LogDomain { t: usize },
    /// File-system or parse failure; `row` is 1-based when it applies.
    Io { message: String, row: Option<usize> },
}

impl fmt::Display for CharnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Config(msg) => write!(f, "configuration error: {msg}"),
            Self::IndexOutOfRange { t, n } => {
                write!(f, "time index {t} outside [1, {n}]")
            }
            Self::VolatilityFloor { t, value, floor } => write!(
                f,
                "volatility {value:e} below floor {floor:e} at t={t}; check parameters"
            ),
            Self::SimulationDiverged { t } => {
                write!(f, "simulation diverged (non-finite value) at t={t}")
            }
            Self::UnusableScore(msg) => write!(f, "unusable score: {msg}"),
            Self::DegenerateVariance => {
                write!(f, "plug-in variance is zero for a nonzero shift")
            }
            Self::DegenerateSample(msg) => write!(f, "degenerate sample: {msg}"),
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::Estimation(msg) => write!(f, "estimation error: {msg}"),
            Self::LogDomain { t } => {
                write!(f, "zero density at residual t={t}; log-likelihood undefined")
            }
            Self::Io { message, row: Some(r) } => write!(f, "{message} (row {r})"),
            Self::Io { message, row: None } => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for CharnError {}

impl From<std::io::Error> for CharnError {
    fn from(e: std::io::Error) -> Self {
        Self::Io { message: e.to_string(), row: None }
    }
}

pub type Result<T> = std::result::Result<T, CharnError>;
