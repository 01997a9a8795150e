//! Response types and the monotonicity identities linking them to the
//! relative risk reduction and relative survival reduction.
//!
//! The four response types are the joint potential outcomes `(Y^0, Y^1)`:
//! doomed `(1, 1)`, causal `(0, 1)`, preventive `(1, 0)` and immune `(0, 0)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::RiskPair;

const SUM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResponseType {
    Doomed,
    Causal,
    Preventive,
    Immune,
}

impl ResponseType {
    pub const ALL: [ResponseType; 4] = [
        ResponseType::Doomed,
        ResponseType::Causal,
        ResponseType::Preventive,
        ResponseType::Immune,
    ];

    /// Classifies a pair of potential outcomes.
    pub fn from_outcomes(y0: bool, y1: bool) -> Self {
        match (y0, y1) {
            (true, true) => ResponseType::Doomed,
            (false, true) => ResponseType::Causal,
            (true, false) => ResponseType::Preventive,
            (false, false) => ResponseType::Immune,
        }
    }

    /// `(y0, y1)` for this type.
    pub fn outcomes(self) -> (bool, bool) {
        match self {
            ResponseType::Doomed => (true, true),
            ResponseType::Causal => (false, true),
            ResponseType::Preventive => (true, false),
            ResponseType::Immune => (false, false),
        }
    }
}

/// Which off-diagonal type monotonicity excludes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    /// Treatment causes the outcome in nobody (`causal = 0`).
    NoCausation,
    /// Treatment prevents the outcome in nobody (`preventive = 0`).
    NoPrevention,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResponseTypeDistribution {
    doomed: f64,
    causal: f64,
    preventive: f64,
    immune: f64,
}

impl ResponseTypeDistribution {
    pub fn new(doomed: f64, causal: f64, preventive: f64, immune: f64) -> Result<Self> {
        let parts = [doomed, causal, preventive, immune];
        if parts.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidDistribution(format!(
                "prevalences {parts:?} must lie in [0, 1]"
            )));
        }
        let total: f64 = parts.iter().sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidDistribution(format!(
                "prevalences sum to {total}, not 1"
            )));
        }
        Ok(Self {
            doomed,
            causal,
            preventive,
            immune,
        })
    }

    pub fn doomed(&self) -> f64 {
        self.doomed
    }

    pub fn causal(&self) -> f64 {
        self.causal
    }

    pub fn preventive(&self) -> f64 {
        self.preventive
    }

    pub fn immune(&self) -> f64 {
        self.immune
    }

    pub fn prevalence(&self, t: ResponseType) -> f64 {
        match t {
            ResponseType::Doomed => self.doomed,
            ResponseType::Causal => self.causal,
            ResponseType::Preventive => self.preventive,
            ResponseType::Immune => self.immune,
        }
    }
}

/// Finite population broken down by response type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PopulationCounts {
    pub n_doomed: u64,
    pub n_causal: u64,
    pub n_preventive: u64,
    pub n_immune: u64,
}

impl PopulationCounts {
    pub fn new(n_doomed: u64, n_causal: u64, n_preventive: u64, n_immune: u64) -> Self {
        Self {
            n_doomed,
            n_causal,
            n_preventive,
            n_immune,
        }
    }

    pub fn total(&self) -> u64 {
        self.n_doomed + self.n_causal + self.n_preventive + self.n_immune
    }

    pub fn count(&self, t: ResponseType) -> u64 {
        match t {
            ResponseType::Doomed => self.n_doomed,
            ResponseType::Causal => self.n_causal,
            ResponseType::Preventive => self.n_preventive,
            ResponseType::Immune => self.n_immune,
        }
    }

    pub fn add(&mut self, t: ResponseType, n: u64) {
        match t {
            ResponseType::Doomed => self.n_doomed += n,
            ResponseType::Causal => self.n_causal += n,
            ResponseType::Preventive => self.n_preventive += n,
            ResponseType::Immune => self.n_immune += n,
        }
    }

    /// Potential-outcome risks computed from integer counts.
    pub fn marginal_risks(&self) -> Result<RiskPair> {
        let n = self.total();
        if n == 0 {
            return Err(Error::EmptyPopulation);
        }
        let n = n as f64;
        RiskPair::new(
            (self.n_doomed + self.n_preventive) as f64 / n,
            (self.n_doomed + self.n_causal) as f64 / n,
        )
    }
}

impl std::ops::Add for PopulationCounts {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.n_doomed + rhs.n_doomed,
            self.n_causal + rhs.n_causal,
            self.n_preventive + rhs.n_preventive,
            self.n_immune + rhs.n_immune,
        )
    }
}

pub fn marginal_risks(d: &ResponseTypeDistribution) -> RiskPair {
    // the simplex tolerance can leave a sum a hair above one
    let p0 = (d.doomed + d.preventive).min(1.0);
    let p1 = (d.doomed + d.causal).min(1.0);
    RiskPair::new(p0, p1).expect("marginals of a valid distribution are probabilities")
}

pub fn monotonicity_check(d: &ResponseTypeDistribution, direction: Monotonicity) -> bool {
    match direction {
        Monotonicity::NoCausation => d.causal == 0.0,
        Monotonicity::NoPrevention => d.preventive == 0.0,
    }
}

/// Share of preventive types among those who would have the outcome
/// untreated. Requires no causation.
pub fn proportion_prevented(d: &ResponseTypeDistribution) -> Result<f64> {
    if !monotonicity_check(d, Monotonicity::NoCausation) {
        return Err(Error::MonotonicityViolated("causal prevalence is nonzero"));
    }
    let at_risk = d.doomed + d.preventive;
    if at_risk == 0.0 {
        return Err(Error::UndefinedMeasure("no one has the outcome untreated"));
    }
    Ok(d.preventive / at_risk)
}

/// Share of causal types among those who would be outcome-free untreated.
/// Requires no prevention.
pub fn proportion_harmed(d: &ResponseTypeDistribution) -> Result<f64> {
    if !monotonicity_check(d, Monotonicity::NoPrevention) {
        return Err(Error::MonotonicityViolated("preventive prevalence is nonzero"));
    }
    let survivors = d.causal + d.immune;
    if survivors == 0.0 {
        return Err(Error::UndefinedMeasure("no one is outcome-free untreated"));
    }
    Ok(d.causal / survivors)
}

pub fn enumerate_population(c: &PopulationCounts) -> Result<ResponseTypeDistribution> {
    let n = c.total();
    if n == 0 {
        return Err(Error::EmptyPopulation);
    }
    let n = n as f64;
    ResponseTypeDistribution::new(
        c.n_doomed as f64 / n,
        c.n_causal as f64 / n,
        c.n_preventive as f64 / n,
        c.n_immune as f64 / n,
    )
}

/// All distributions on the simplex with prevalences in multiples of
/// `1 / steps`.
pub fn simplex_grid(steps: u32) -> Vec<ResponseTypeDistribution> {
    let mut out = Vec::new();
    let s = steps as u64;
    for d in 0..=s {
        for c in 0..=s - d {
            for p in 0..=s - d - c {
                let i = s - d - c - p;
                let counts = PopulationCounts::new(d, c, p, i);
                out.push(enumerate_population(&counts).expect("grid population is non-empty"));
            }
        }
    }
    out
}
