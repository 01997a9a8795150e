//! Relative-risk effect measures and the mechanisms that make them stable.
//!
//! - [`measures`]: risk ratio, survival ratio, their reductions, odds ratio,
//!   risk difference, the switch relative risk and GRRR; transport of a
//!   measure to a new baseline risk; 2x2 estimation and Wald intervals.
//! - [`counterfactual`]: response types and the monotonicity identities that
//!   read `1 - RR` and `1 - SR` as prevalences.
//! - [`switchmodel`]: the four switch patterns, their exact risks, stability
//!   sweeps and seeded Monte Carlo cohorts.
//! - [`glmfit`]: log-binomial regression on the outcome or its complement.
//! - [`cli`]: the `relrisk` command-line front end.

pub mod cli;
pub mod counterfactual;
pub mod error;
pub mod glmfit;
pub mod measures;
pub mod switchmodel;

pub use error::{Error, Result};
