use thiserror::Error;

use crate::glmfit::FitResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("probability {name} = {value} is outside [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("measure undefined: {0}")]
    UndefinedMeasure(&'static str),

    /// The implied treated risk falls outside the unit interval.
    #[error("implied probability {implied} is outside [0, 1]")]
    NotClosed { implied: f64 },

    #[error("measure value {value} is outside the range of its scale ({scale})")]
    InvalidMeasure { scale: &'static str, value: f64 },

    #[error("exposure arm {0} has no individuals")]
    EmptyMargin(&'static str),

    #[error("cell {0} is zero")]
    ZeroCell(&'static str),

    #[error("scale {0} has no Wald interval")]
    UnsupportedScale(&'static str),

    #[error("confidence level {0} is outside (0, 1)")]
    InvalidLevel(f64),

    #[error("distribution violates monotonicity: {0}")]
    MonotonicityViolated(&'static str),

    #[error("response-type distribution is invalid: {0}")]
    InvalidDistribution(String),

    #[error("population is empty")]
    EmptyPopulation,

    #[error("recovered prevalence {q} contradicts the asserted switch pattern")]
    InconsistentPattern { q: f64 },

    #[error("invalid baseline-risk grid: {0}")]
    InvalidGrid(String),

    #[error("cohort size must be positive")]
    EmptyCohort,

    #[error("IRLS did not converge after {} iterations", .0.iterations)]
    NotConverged(Box<FitResult>),

    #[error("fitted mean pinned at the boundary ({max_fitted_probability})")]
    SeparationDetected { max_fitted_probability: f64 },

    #[error("design matrix is collinear")]
    CollinearDesign,

    #[error("invalid dataset: {0}")]
    InvalidDataset(String),
}

impl Error {
    /// Stable identifier used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidProbability { .. } => "InvalidProbability",
            Error::UndefinedMeasure(_) => "UndefinedMeasure",
            Error::NotClosed { .. } => "NotClosed",
            Error::InvalidMeasure { .. } => "InvalidMeasure",
            Error::EmptyMargin(_) => "EmptyMargin",
            Error::ZeroCell(_) => "ZeroCell",
            Error::UnsupportedScale(_) => "UnsupportedScale",
            Error::InvalidLevel(_) => "InvalidLevel",
            Error::MonotonicityViolated(_) => "MonotonicityViolated",
            Error::InvalidDistribution(_) => "InvalidDistribution",
            Error::EmptyPopulation => "EmptyPopulation",
            Error::InconsistentPattern { .. } => "InconsistentPattern",
            Error::InvalidGrid(_) => "InvalidGrid",
            Error::EmptyCohort => "EmptyCohort",
            Error::NotConverged(_) => "NotConverged",
            Error::SeparationDetected { .. } => "SeparationDetected",
            Error::CollinearDesign => "CollinearDesign",
            Error::InvalidDataset(_) => "InvalidDataset",
        }
    }
}

pub(crate) fn check_probability(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::InvalidProbability { name, value })
    }
}
