//! Binomial regression with a log link on the outcome or on its complement.
//!
//! With `ReferenceLevel::Outcome` the exposure coefficient exponentiates to an
//! adjusted risk ratio; with `ReferenceLevel::Complement` the model is fitted
//! to `1 - y` and the coefficient exponentiates to an adjusted survival ratio.
//! Fitting is IRLS with step-halving. Every iterate keeps all fitted means at or
//! below `1 - 1e-10`, and the log-likelihood never decreases between iterates.

use std::collections::BTreeSet;
use std::io::Read;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{switch_variant, EffectScale, RatioVariant, RiskPair};

pub const MAX_ITERATIONS: usize = 200;
pub const MEAN_CEILING: f64 = 1.0 - 1e-10;
const COEF_TOL: f64 = 1e-10;
const MAX_HALVINGS: u32 = 60;
const COLLINEARITY_TOL: f64 = 1e-10;
/// Fitted means this close to the ceiling count as pinned.
const PINNED: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReferenceLevel {
    /// Log link on `Pr[y = 1]`.
    Outcome,
    /// Log link on `Pr[y = 0]`.
    Complement,
}

impl ReferenceLevel {
    pub fn name(self) -> &'static str {
        match self {
            ReferenceLevel::Outcome => "outcome",
            ReferenceLevel::Complement => "complement",
        }
    }

    /// The effect scale the exponentiated exposure coefficient lives on.
    pub fn scale(self) -> EffectScale {
        match self {
            ReferenceLevel::Outcome => EffectScale::RiskRatio,
            ReferenceLevel::Complement => EffectScale::SurvivalRatio,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub a: bool,
    pub x: Vec<f64>,
    pub y: bool,
    pub weight: f64,
}

impl Observation {
    pub fn new(a: bool, x: Vec<f64>, y: bool) -> Self {
        Self {
            a,
            x,
            y,
            weight: 1.0,
        }
    }

    pub fn weighted(a: bool, x: Vec<f64>, y: bool, weight: f64) -> Self {
        Self { a, x, y, weight }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegressionDataset {
    covariate_names: Vec<String>,
    rows: Vec<Observation>,
}

impl RegressionDataset {
    pub fn new(covariate_names: Vec<String>, rows: Vec<Observation>) -> Result<Self> {
        let k = covariate_names.len();
        if let Some(i) = rows.iter().position(|r| r.x.len() != k) {
            return Err(Error::InvalidDataset(format!(
                "row {i} has {} covariates, expected {k}",
                rows[i].x.len()
            )));
        }
        if let Some(i) = rows
            .iter()
            .position(|r| !(r.weight.is_finite() && r.weight > 0.0))
        {
            return Err(Error::InvalidDataset(format!(
                "row {i} has non-positive weight {}",
                rows[i].weight
            )));
        }
        if !rows.iter().any(|r| r.a) {
            return Err(Error::EmptyMargin("treated"));
        }
        if !rows.iter().any(|r| !r.a) {
            return Err(Error::EmptyMargin("untreated"));
        }
        Ok(Self {
            covariate_names,
            rows,
        })
    }

    /// Reads individual-level CSV with columns `a` and `y` (0/1), an
    /// optional positive `weight` column, and covariate columns.
    ///
    /// A covariate whose values are all `0`/`1` enters as one indicator.
    /// Any other covariate is categorical: one indicator per level except
    /// the first in sorted order, named `column=level`.
    pub fn from_csv<R: Read>(input: R) -> Result<Self> {
        let bad = |msg: String| Error::InvalidDataset(msg);
        let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
        let headers = reader
            .headers()
            .map_err(|e| bad(e.to_string()))?
            .clone();
        let find = |name: &str| headers.iter().position(|h| h == name);
        let a_col = find("a").ok_or_else(|| bad("missing column `a`".into()))?;
        let y_col = find("y").ok_or_else(|| bad("missing column `y`".into()))?;
        let w_col = find("weight");
        let cov_cols: Vec<usize> = (0..headers.len())
            .filter(|&i| i != a_col && i != y_col && Some(i) != w_col)
            .collect();

        let records = reader
            .records()
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| bad(e.to_string()))?;
        if records.is_empty() {
            return Err(bad("no data rows".into()));
        }

        let bit = |s: &str, line: usize, col: &str| match s {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(bad(format!("row {line}: `{col}` must be 0 or 1, got `{other}`"))),
        };

        // column -> (levels encoded as indicators)
        let mut encodings: Vec<(usize, Vec<String>, bool)> = Vec::new();
        let mut names = Vec::new();
        for &c in &cov_cols {
            let levels: BTreeSet<&str> = records.iter().map(|r| &r[c]).collect();
            if levels.contains("") {
                return Err(bad(format!("column `{}` has empty cells", &headers[c])));
            }
            let binary = levels.iter().all(|l| *l == "0" || *l == "1");
            if binary {
                names.push(headers[c].to_string());
                encodings.push((c, vec!["1".to_string()], true));
            } else {
                let kept: Vec<String> = levels.iter().skip(1).map(|l| l.to_string()).collect();
                names.extend(kept.iter().map(|l| format!("{}={l}", &headers[c])));
                encodings.push((c, kept, false));
            }
        }

        let mut rows = Vec::with_capacity(records.len());
        for (i, rec) in records.iter().enumerate() {
            let line = i + 1;
            let a = bit(&rec[a_col], line, "a")?;
            let y = bit(&rec[y_col], line, "y")?;
            let weight = match w_col {
                Some(w) => rec[w]
                    .parse::<f64>()
                    .map_err(|_| bad(format!("row {line}: weight `{}` is not a number", &rec[w])))?,
                None => 1.0,
            };
            let mut x = Vec::with_capacity(names.len());
            for (c, levels, binary) in &encodings {
                let v = &rec[*c];
                if *binary {
                    x.push(if v == "1" { 1.0 } else { 0.0 });
                } else {
                    x.extend(levels.iter().map(|l| if l == v { 1.0 } else { 0.0 }));
                }
            }
            rows.push(Observation::weighted(a, x, y, weight));
        }
        Self::new(names, rows)
    }

    /// One weighted row per non-empty cell of each stratum's 2x2 table.
    /// Stratum 0 is the reference; strata `1..k` get indicators named
    /// `stratum=i`.
    pub fn from_strata(tables: &[crate::measures::TwoByTwoTable]) -> Result<Self> {
        let k = tables.len().saturating_sub(1);
        let names = (1..=k).map(|i| format!("stratum={i}")).collect();
        let mut rows = Vec::new();
        for (s, t) in tables.iter().enumerate() {
            let x: Vec<f64> = (1..=k).map(|i| if i == s { 1.0 } else { 0.0 }).collect();
            for (a, y, n) in [
                (true, true, t.a1_y1),
                (true, false, t.a1_y0),
                (false, true, t.a0_y1),
                (false, false, t.a0_y0),
            ] {
                if n > 0 {
                    rows.push(Observation::weighted(a, x.clone(), y, n as f64));
                }
            }
        }
        Self::new(names, rows)
    }

    pub fn rows(&self) -> &[Observation] {
        &self.rows
    }

    pub fn covariate_names(&self) -> &[String] {
        &self.covariate_names
    }

    /// `intercept`, `a`, then covariate names.
    pub fn coefficient_names(&self) -> Vec<String> {
        let mut names = vec!["intercept".to_string(), "a".to_string()];
        names.extend(self.covariate_names.iter().cloned());
        names
    }

    pub fn with_flipped_outcome(&self) -> Self {
        Self {
            covariate_names: self.covariate_names.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| Observation { y: !r.y, ..r.clone() })
                .collect(),
        }
    }

    /// Weighted crude risks by exposure arm.
    pub fn crude_risks(&self) -> Result<RiskPair> {
        let mut events = [0.0; 2];
        let mut totals = [0.0; 2];
        for r in &self.rows {
            let arm = usize::from(r.a);
            totals[arm] += r.weight;
            if r.y {
                events[arm] += r.weight;
            }
        }
        if totals[1] == 0.0 {
            return Err(Error::EmptyMargin("treated"));
        }
        if totals[0] == 0.0 {
            return Err(Error::EmptyMargin("untreated"));
        }
        RiskPair::new(events[0] / totals[0], events[1] / totals[1])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub reference_level: ReferenceLevel,
    pub coefficient_names: Vec<String>,
    /// Intercept, exposure, covariates; all on the log scale.
    pub coefficients: Vec<f64>,
    /// Model-based standard errors from the inverse Fisher information.
    pub std_errors: Vec<f64>,
    pub loglik: f64,
    pub converged: bool,
    pub iterations: usize,
    pub max_fitted_probability: f64,
    /// Log-likelihood at the start and after every iteration.
    pub loglik_trace: Vec<f64>,
}

impl FitResult {
    pub fn exposure_coefficient(&self) -> f64 {
        self.coefficients[1]
    }

    pub fn exposure_std_error(&self) -> f64 {
        self.std_errors[1]
    }

    /// Adjusted RR (outcome level) or adjusted SR (complement level).
    pub fn exposure_effect(&self) -> (EffectScale, f64) {
        (self.reference_level.scale(), self.exposure_coefficient().exp())
    }
}

struct Design {
    x: DMatrix<f64>,
    y: DVector<f64>,
    w: DVector<f64>,
}

impl Design {
    fn new(d: &RegressionDataset, level: ReferenceLevel) -> Self {
        let n = d.rows.len();
        let p = 2 + d.covariate_names.len();
        let x = DMatrix::from_fn(n, p, |i, j| match j {
            0 => 1.0,
            1 => f64::from(u8::from(d.rows[i].a)),
            _ => d.rows[i].x[j - 2],
        });
        let y = DVector::from_fn(n, |i, _| {
            let event = match level {
                ReferenceLevel::Outcome => d.rows[i].y,
                ReferenceLevel::Complement => !d.rows[i].y,
            };
            f64::from(u8::from(event))
        });
        let w = DVector::from_fn(n, |i, _| d.rows[i].weight);
        Self { x, y, w }
    }

    fn feasible(&self, eta: &DVector<f64>) -> bool {
        let ceiling = MEAN_CEILING.ln();
        eta.iter().all(|&e| e <= ceiling)
    }

    fn loglik(&self, eta: &DVector<f64>) -> f64 {
        eta.iter()
            .zip(self.y.iter().zip(self.w.iter()))
            .map(|(&e, (&y, &w))| {
                let mu = e.exp();
                w * if y > 0.5 { e } else { (-mu).ln_1p() }
            })
            .sum()
    }

    /// Rounding noise of [`Self::loglik`]; differences below this are not resolvable.
    fn loglik_resolution(&self, eta: &DVector<f64>) -> f64 {
        let abs_sum: f64 = eta
            .iter()
            .zip(self.y.iter().zip(self.w.iter()))
            .map(|(&e, (&y, &w))| (w * if y > 0.5 { e } else { (-e.exp()).ln_1p() }).abs())
            .sum();
        16.0 * f64::EPSILON * abs_sum
    }

    fn score(&self, eta: &DVector<f64>) -> DVector<f64> {
        let resid = DVector::from_fn(eta.len(), |i, _| {
            let mu = eta[i].exp();
            self.w[i] * (self.y[i] - mu) / (1.0 - mu)
        });
        self.x.tr_mul(&resid)
    }

    /// Expected information `X' diag(w mu / (1 - mu)) X`.
    fn information(&self, eta: &DVector<f64>) -> DMatrix<f64> {
        let mut xw = self.x.clone();
        for (i, mut row) in xw.row_iter_mut().enumerate() {
            let mu = eta[i].exp();
            row *= self.w[i] * mu / (1.0 - mu);
        }
        self.x.tr_mul(&xw)
    }

    fn check_rank(&self) -> Result<()> {
        let mut xw = self.x.clone();
        for (i, mut row) in xw.row_iter_mut().enumerate() {
            row *= self.w[i];
        }
        let gram = self.x.tr_mul(&xw);
        let eig = gram.symmetric_eigenvalues();
        let max = eig.iter().cloned().fold(0.0, f64::max);
        let min = eig.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(max > 0.0) || min <= COLLINEARITY_TOL * max {
            return Err(Error::CollinearDesign);
        }
        Ok(())
    }
}

/// Log-likelihood of `coefficients` (intercept, exposure, covariates).
/// Returns `-inf` if any fitted mean exceeds one.
pub fn log_likelihood(d: &RegressionDataset, level: ReferenceLevel, coefficients: &[f64]) -> f64 {
    let design = Design::new(d, level);
    let eta = &design.x * DVector::from_column_slice(coefficients);
    if eta.iter().any(|&e| e > 0.0) {
        return f64::NEG_INFINITY;
    }
    design.loglik(&eta)
}

/// Analytic score vector at `coefficients`.
pub fn score(d: &RegressionDataset, level: ReferenceLevel, coefficients: &[f64]) -> Vec<f64> {
    let design = Design::new(d, level);
    let eta = &design.x * DVector::from_column_slice(coefficients);
    design.score(&eta).iter().copied().collect()
}

/// Maximum-likelihood log-binomial fit.
///
/// Returns [`Error::NotConverged`] (carrying the unconverged result) when the
/// iteration cap is reached, and [`Error::SeparationDetected`] when the fit
/// settles with a fitted mean pinned at the ceiling.
pub fn fit_log_binomial(d: &RegressionDataset, level: ReferenceLevel) -> Result<FitResult> {
    let design = Design::new(d, level);
    design.check_rank()?;
    let p = design.x.ncols();

    let total_w: f64 = design.w.sum();
    let mean_y = design.y.dot(&design.w) / total_w;
    let mut beta = DVector::zeros(p);
    beta[0] = mean_y.clamp(1e-6, 1.0 - 1e-6).ln();
    let mut eta = &design.x * &beta;
    let mut ll = design.loglik(&eta);
    let mut trace = vec![ll];
    let mut converged = false;
    let mut iterations = 0;

    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let info = design.information(&eta);
        let chol = info.cholesky().ok_or(Error::CollinearDesign)?;
        let grad = design.score(&eta);
        // Newton direction in IRLS form: info^{-1} * score
        let step = chol.solve(&grad);
        // Fisher scoring on a non-canonical link converges linearly, so a tiny
        // loglik gain alone does not mean the score has vanished
        let last = step.amax() < COEF_TOL;
        let slack = design.loglik_resolution(&eta);

        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let cand = &beta + &step * t;
            let cand_eta = &design.x * &cand;
            if design.feasible(&cand_eta) {
                let cand_ll = design.loglik(&cand_eta);
                if cand_ll >= ll - slack {
                    accepted = Some((cand, cand_eta, cand_ll));
                    break;
                }
            }
            t *= 0.5;
        }

        let Some((cand, cand_eta, cand_ll)) = accepted else {
            // no ascent possible from here
            trace.push(ll);
            converged = true;
            break;
        };
        let max_change = (&cand - &beta).amax();
        beta = cand;
        eta = cand_eta;
        ll = cand_ll;
        trace.push(ll);
        if last || max_change < COEF_TOL {
            converged = true;
            break;
        }
    }


    let max_fitted_probability = eta.iter().map(|e| e.exp()).fold(0.0, f64::max);
    let std_errors = design
        .information(&eta)
        .try_inverse()
        .map(|cov| (0..p).map(|j| cov[(j, j)].sqrt()).collect())
        .unwrap_or_else(|| vec![f64::NAN; p]);

    let result = FitResult {
        reference_level: level,
        coefficient_names: d.coefficient_names(),
        coefficients: beta.iter().copied().collect(),
        std_errors,
        loglik: ll,
        converged,
        iterations,
        max_fitted_probability,
        loglik_trace: trace,
    };
    if max_fitted_probability >= MEAN_CEILING - PINNED {
        return Err(Error::SeparationDetected {
            max_fitted_probability,
        });
    }
    if !converged {
        return Err(Error::NotConverged(Box::new(result)));
    }
    Ok(result)
}

/// Reference level the switch rule picks from the crude risks: outcome when
/// exposure does not raise the crude risk, complement otherwise.
pub fn select_reference_level(d: &RegressionDataset) -> Result<ReferenceLevel> {
    Ok(match switch_variant(d.crude_risks()?) {
        RatioVariant::RiskRatio => ReferenceLevel::Outcome,
        RatioVariant::SurvivalRatio => ReferenceLevel::Complement,
    })
}

/// Fits at the level chosen by [`select_reference_level`]; the choice is
/// recorded in `FitResult::reference_level`.
pub fn auto_link(d: &RegressionDataset) -> Result<FitResult> {
    let level = select_reference_level(d)?;
    fit_log_binomial(d, level)
}

/// Maximized main-effects log-likelihoods `(outcome, complement)`.
pub fn loglik_compare(d: &RegressionDataset) -> Result<(f64, f64)> {
    let outcome = fit_log_binomial(d, ReferenceLevel::Outcome)?;
    let complement = fit_log_binomial(d, ReferenceLevel::Complement)?;
    Ok((outcome.loglik, complement.loglik))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::TwoByTwoTable;

    fn two_group() -> RegressionDataset {
        RegressionDataset::from_strata(&[TwoByTwoTable::new(30, 70, 60, 40)]).unwrap()
    }

    #[test]
    fn saturated_outcome_fit() {
        let fit = fit_log_binomial(&two_group(), ReferenceLevel::Outcome).unwrap();
        assert!(fit.converged);
        assert!((fit.coefficients[0] - 0.6f64.ln()).abs() < 1e-8);
        assert!((fit.exposure_coefficient() - 0.5f64.ln()).abs() < 1e-8);
        assert_eq!(fit.exposure_effect().0, EffectScale::RiskRatio);
    }

    #[test]
    fn saturated_complement_fit() {
        let fit = fit_log_binomial(&two_group(), ReferenceLevel::Complement).unwrap();
        assert!((fit.exposure_coefficient() - 1.75f64.ln()).abs() < 1e-8);
        assert_eq!(fit.exposure_effect().0, EffectScale::SurvivalRatio);
    }

    #[test]
    fn auto_link_follows_crude_direction() {
        assert_eq!(auto_link(&two_group()).unwrap().reference_level, ReferenceLevel::Outcome);
        let harmful = RegressionDataset::from_strata(&[TwoByTwoTable::new(60, 40, 20, 80)]).unwrap();
        assert_eq!(auto_link(&harmful).unwrap().reference_level, ReferenceLevel::Complement);
        let tie = RegressionDataset::from_strata(&[TwoByTwoTable::new(30, 70, 30, 70)]).unwrap();
        assert_eq!(select_reference_level(&tie).unwrap(), ReferenceLevel::Outcome);
    }

    #[test]
    fn saturated_logliks_agree() {
        let (lo, lc) = loglik_compare(&two_group()).unwrap();
        assert!((lo - lc).abs() < 1e-9);
    }

    #[test]
    fn loglik_trace_never_decreases() {
        let d = RegressionDataset::from_strata(&[
            TwoByTwoTable::new(20, 80, 40, 60),
            TwoByTwoTable::new(50, 50, 70, 30),
        ])
        .unwrap();
        let fit = fit_log_binomial(&d, ReferenceLevel::Outcome).unwrap();
        assert!(fit.loglik_trace.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn all_events_in_a_group_pins_the_ceiling() {
        let d = RegressionDataset::from_strata(&[TwoByTwoTable::new(10, 0, 3, 7)]).unwrap();
        assert!(matches!(
            fit_log_binomial(&d, ReferenceLevel::Outcome),
            Err(Error::SeparationDetected { .. })
        ));
    }

    #[test]
    fn collinear_covariate_is_rejected() {
        let rows = vec![
            Observation::new(true, vec![1.0], true),
            Observation::new(true, vec![1.0], false),
            Observation::new(false, vec![0.0], true),
            Observation::new(false, vec![0.0], false),
        ];
        let d = RegressionDataset::new(vec!["copy_of_a".into()], rows).unwrap();
        assert!(matches!(
            fit_log_binomial(&d, ReferenceLevel::Outcome),
            Err(Error::CollinearDesign)
        ));
    }

    #[test]
    fn dataset_requires_both_arms() {
        let rows = vec![Observation::new(true, vec![], true)];
        assert!(matches!(
            RegressionDataset::new(vec![], rows),
            Err(Error::EmptyMargin("untreated"))
        ));
    }

    #[test]
    fn csv_with_categorical_covariate() {
        let text = "a,y,site,male\n1,1,north,1\n1,0,south,0\n0,1,west,0\n0,0,north,1\n";
        let d = RegressionDataset::from_csv(text.as_bytes()).unwrap();
        assert_eq!(d.covariate_names(), ["site=south", "site=west", "male"]);
        assert_eq!(d.rows()[1].x, vec![1.0, 0.0, 0.0]);
        assert_eq!(d.rows()[2].x, vec![0.0, 1.0, 0.0]);
        assert!(d.rows()[0].a && d.rows()[0].y);
    }

    #[test]
    fn csv_errors() {
        assert!(RegressionDataset::from_csv("a,z\n1,1\n".as_bytes()).is_err());
        assert!(RegressionDataset::from_csv("a,y\n1,2\n0,0\n".as_bytes()).is_err());
        assert!(RegressionDataset::from_csv("a,y\n".as_bytes()).is_err());
        assert!(RegressionDataset::from_csv("a,y,weight\n1,1,-1\n0,0,1\n".as_bytes()).is_err());
    }
}
