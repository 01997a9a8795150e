//! Effect-measure scales on a pair of counterfactual risks.
//!
//! Every measure takes a [`RiskPair`] `(p0, p1)`, the outcome risk without and
//! with treatment. The plain ratio scales (risk ratio, survival ratio) and the
//! risk difference are not closed on `[0, 1]`: [`apply_measure`] reports
//! [`Error::NotClosed`] instead of clamping when a transported value would imply
//! an impossible risk. The switch relative risk and GRRR pick the risk ratio for
//! risk-decreasing effects and the survival ratio for risk-increasing ones, and
//! are closed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{check_probability, Error, Result};

/// Outcome risk without treatment (`p0`) and with treatment (`p1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawRiskPair")]
pub struct RiskPair {
    p0: f64,
    p1: f64,
}

#[derive(Deserialize)]
struct RawRiskPair {
    p0: f64,
    p1: f64,
}

impl TryFrom<RawRiskPair> for RiskPair {
    type Error = Error;

    fn try_from(raw: RawRiskPair) -> Result<Self> {
        RiskPair::new(raw.p0, raw.p1)
    }
}

impl RiskPair {
    pub fn new(p0: f64, p1: f64) -> Result<Self> {
        Ok(Self {
            p0: check_probability("p0", p0)?,
            p1: check_probability("p1", p1)?,
        })
    }

    /// Risk without treatment, `Pr[Y^{a=0} = 1]`.
    pub fn p0(&self) -> f64 {
        self.p0
    }

    /// Risk under treatment, `Pr[Y^{a=1} = 1]`.
    pub fn p1(&self) -> f64 {
        self.p1
    }
}

/// The two relative-risk variants the switch rule chooses between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RatioVariant {
    RiskRatio,
    SurvivalRatio,
}

impl RatioVariant {
    pub fn opposite(self) -> Self {
        match self {
            RatioVariant::RiskRatio => RatioVariant::SurvivalRatio,
            RatioVariant::SurvivalRatio => RatioVariant::RiskRatio,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RatioVariant::RiskRatio => "rr",
            RatioVariant::SurvivalRatio => "sr",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EffectScale {
    RiskRatio,
    SurvivalRatio,
    RiskDifference,
    OddsRatio,
    RelativeRiskReduction,
    RelativeSurvivalReduction,
    /// Switch relative risk, carrying the variant it selected.
    SwitchSelected(RatioVariant),
    Grrr,
}

impl EffectScale {
    /// Lowercase command-line identifier.
    pub fn name(self) -> &'static str {
        match self {
            EffectScale::RiskRatio => "rr",
            EffectScale::SurvivalRatio => "sr",
            EffectScale::RiskDifference => "rd",
            EffectScale::OddsRatio => "or",
            EffectScale::RelativeRiskReduction => "rrr",
            EffectScale::RelativeSurvivalReduction => "rsr",
            EffectScale::SwitchSelected(_) => "switch",
            EffectScale::Grrr => "grrr",
        }
    }

    fn admits(self, value: f64) -> bool {
        if !value.is_finite() {
            return false;
        }
        match self {
            EffectScale::RiskRatio | EffectScale::SurvivalRatio | EffectScale::OddsRatio => {
                value >= 0.0
            }
            EffectScale::RiskDifference | EffectScale::Grrr => (-1.0..=1.0).contains(&value),
            EffectScale::RelativeRiskReduction | EffectScale::RelativeSurvivalReduction => {
                value <= 1.0
            }
            // both switch branches are ratios no greater than one
            EffectScale::SwitchSelected(_) => (0.0..=1.0).contains(&value),
        }
    }
}

impl fmt::Display for EffectScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EffectScale::SwitchSelected(v) => write!(f, "switch({})", v.name()),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for EffectScale {
    type Err = String;

    /// Parses the command-line names. `switch` parses to the risk-ratio
    /// selection; `switch-rr` and `switch-sr` name the branch explicitly.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "rr" => EffectScale::RiskRatio,
            "sr" => EffectScale::SurvivalRatio,
            "rd" => EffectScale::RiskDifference,
            "or" => EffectScale::OddsRatio,
            "rrr" => EffectScale::RelativeRiskReduction,
            "rsr" => EffectScale::RelativeSurvivalReduction,
            "switch" | "switch-rr" => EffectScale::SwitchSelected(RatioVariant::RiskRatio),
            "switch-sr" => EffectScale::SwitchSelected(RatioVariant::SurvivalRatio),
            "grrr" => EffectScale::Grrr,
            other => return Err(format!("unknown scale `{other}`")),
        })
    }
}

/// A measure value tagged with its scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureValue {
    pub scale: EffectScale,
    pub value: f64,
}

impl MeasureValue {
    /// Checks `value` against the admissible range of `scale`.
    pub fn new(scale: EffectScale, value: f64) -> Result<Self> {
        if scale.admits(value) {
            Ok(Self { scale, value })
        } else {
            Err(Error::InvalidMeasure {
                scale: scale.name(),
                value,
            })
        }
    }

    fn computed(scale: EffectScale, value: f64) -> Self {
        Self { scale, value }
    }
}

/// Direction argument for Cheng's causal power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerDirection {
    Generative,
    Preventive,
}

/// Exposure by outcome counts. Field names are the canonical JSON keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TwoByTwoTable {
    pub a1_y1: u64,
    pub a1_y0: u64,
    pub a0_y1: u64,
    pub a0_y0: u64,
}

impl TwoByTwoTable {
    pub fn new(a1_y1: u64, a1_y0: u64, a0_y1: u64, a0_y0: u64) -> Self {
        Self {
            a1_y1,
            a1_y0,
            a0_y1,
            a0_y0,
        }
    }

    pub fn treated_total(&self) -> u64 {
        self.a1_y1 + self.a1_y0
    }

    pub fn untreated_total(&self) -> u64 {
        self.a0_y1 + self.a0_y0
    }

    /// Same table with outcome and its complement exchanged.
    pub fn swap_outcome_labels(&self) -> Self {
        Self::new(self.a1_y0, self.a1_y1, self.a0_y0, self.a0_y1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceInterval {
    pub low: f64,
    pub high: f64,
    pub level: f64,
}

fn undefined_if(cond: bool, why: &'static str) -> Result<()> {
    if cond {
        Err(Error::UndefinedMeasure(why))
    } else {
        Ok(())
    }
}

pub fn risk_ratio(rp: RiskPair) -> Result<MeasureValue> {
    undefined_if(rp.p0 == 0.0, "risk ratio with zero untreated risk")?;
    Ok(MeasureValue::computed(EffectScale::RiskRatio, rp.p1 / rp.p0))
}

pub fn survival_ratio(rp: RiskPair) -> Result<MeasureValue> {
    undefined_if(rp.p0 == 1.0, "survival ratio with zero untreated survival")?;
    Ok(MeasureValue::computed(
        EffectScale::SurvivalRatio,
        (1.0 - rp.p1) / (1.0 - rp.p0),
    ))
}

/// `1 - RR`: the relative decrease in the outcome risk.
pub fn relative_risk_reduction(rp: RiskPair) -> Result<MeasureValue> {
    let rr = risk_ratio(rp)?;
    Ok(MeasureValue::computed(
        EffectScale::RelativeRiskReduction,
        1.0 - rr.value,
    ))
}

/// `1 - SR`: the relative decrease in survival, `(p1 - p0) / (1 - p0)`.
pub fn relative_survival_reduction(rp: RiskPair) -> Result<MeasureValue> {
    let sr = survival_ratio(rp)?;
    Ok(MeasureValue::computed(
        EffectScale::RelativeSurvivalReduction,
        1.0 - sr.value,
    ))
}

/// Abbott's corrected mortality. Same quantity as
/// [`relative_survival_reduction`].
pub fn abbott_formula(rp: RiskPair) -> Result<MeasureValue> {
    relative_survival_reduction(rp)
}

/// Cheng's causal power: generative power is the relative survival
/// reduction, preventive power the relative risk reduction.
pub fn cheng_power(rp: RiskPair, direction: PowerDirection) -> Result<MeasureValue> {
    match direction {
        PowerDirection::Generative => relative_survival_reduction(rp),
        PowerDirection::Preventive => relative_risk_reduction(rp),
    }
}

pub fn risk_difference(rp: RiskPair) -> MeasureValue {
    MeasureValue::computed(EffectScale::RiskDifference, rp.p1 - rp.p0)
}

pub fn odds_ratio(rp: RiskPair) -> Result<MeasureValue> {
    undefined_if(
        rp.p0 == 0.0 || rp.p0 == 1.0,
        "odds ratio with untreated risk at 0 or 1",
    )?;
    undefined_if(rp.p1 == 1.0, "odds ratio with treated risk at 1")?;
    let odds1 = rp.p1 / (1.0 - rp.p1);
    let odds0 = rp.p0 / (1.0 - rp.p0);
    Ok(MeasureValue::computed(EffectScale::OddsRatio, odds1 / odds0))
}

/// The variant the switch rule selects; ties go to the risk ratio.
pub fn switch_variant(rp: RiskPair) -> RatioVariant {
    if rp.p1 <= rp.p0 {
        RatioVariant::RiskRatio
    } else {
        RatioVariant::SurvivalRatio
    }
}

/// Switch relative risk: the risk ratio when treatment does not raise the
/// risk, otherwise the survival ratio.
pub fn switch_select(rp: RiskPair) -> Result<MeasureValue> {
    let variant = switch_variant(rp);
    let inner = match variant {
        RatioVariant::RiskRatio => risk_ratio(rp)?,
        RatioVariant::SurvivalRatio => survival_ratio(rp)?,
    };
    Ok(MeasureValue::computed(
        EffectScale::SwitchSelected(variant),
        inner.value,
    ))
}

/// Generalized relative risk reduction on `[-1, 1]`: `1 - RR` when treatment
/// lowers (or keeps) the risk, `SR - 1` when it raises it. Positive values are
/// risk reductions.
pub fn grrr(rp: RiskPair) -> Result<MeasureValue> {
    let value = match switch_variant(rp) {
        RatioVariant::RiskRatio => 1.0 - risk_ratio(rp)?.value,
        RatioVariant::SurvivalRatio => survival_ratio(rp)?.value - 1.0,
    };
    Ok(MeasureValue::computed(EffectScale::Grrr, value))
}

/// Computes `scale` on `rp`.
pub fn compute(rp: RiskPair, scale: EffectScale) -> Result<MeasureValue> {
    match scale {
        EffectScale::RiskRatio => risk_ratio(rp),
        EffectScale::SurvivalRatio => survival_ratio(rp),
        EffectScale::RiskDifference => Ok(risk_difference(rp)),
        EffectScale::OddsRatio => odds_ratio(rp),
        EffectScale::RelativeRiskReduction => relative_risk_reduction(rp),
        EffectScale::RelativeSurvivalReduction => relative_survival_reduction(rp),
        EffectScale::SwitchSelected(_) => switch_select(rp),
        EffectScale::Grrr => grrr(rp),
    }
}

fn closed(implied: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&implied) {
        Ok(implied)
    } else {
        Err(Error::NotClosed { implied })
    }
}

/// Transports a measure to a baseline risk: returns the treated risk `p1`
/// for which the measure on `(p0, p1)` equals `m`.
///
/// Values that imply a risk outside `[0, 1]` yield [`Error::NotClosed`]
/// carrying the implied value. The result is never clamped.
pub fn apply_measure(p0: f64, m: MeasureValue) -> Result<f64> {
    let p0 = check_probability("p0", p0)?;
    let MeasureValue { scale, value } = MeasureValue::new(m.scale, m.value)?;
    let no_risk = || undefined_if(p0 == 0.0, "ratio on a zero baseline risk");
    let no_survival = || undefined_if(p0 == 1.0, "ratio on a zero baseline survival");
    match scale {
        EffectScale::RiskRatio | EffectScale::SwitchSelected(RatioVariant::RiskRatio) => {
            no_risk()?;
            closed(p0 * value)
        }
        EffectScale::SurvivalRatio | EffectScale::SwitchSelected(RatioVariant::SurvivalRatio) => {
            no_survival()?;
            closed(1.0 - (1.0 - p0) * value)
        }
        EffectScale::RelativeRiskReduction => {
            no_risk()?;
            closed(p0 * (1.0 - value))
        }
        EffectScale::RelativeSurvivalReduction => {
            no_survival()?;
            closed(1.0 - (1.0 - p0) * (1.0 - value))
        }
        EffectScale::RiskDifference => closed(p0 + value),
        EffectScale::OddsRatio => {
            undefined_if(p0 == 0.0 || p0 == 1.0, "odds ratio on a degenerate baseline")?;
            let odds1 = value * p0 / (1.0 - p0);
            closed(odds1 / (1.0 + odds1))
        }
        EffectScale::Grrr => closed(if value >= 0.0 {
            p0 * (1.0 - value)
        } else {
            1.0 - (1.0 - p0) * (1.0 + value)
        }),
    }
}

/// Relabels the outcome: `(1 - p0, 1 - p1)`.
pub fn swap_outcome_labels(rp: RiskPair) -> RiskPair {
    RiskPair {
        p0: 1.0 - rp.p0,
        p1: 1.0 - rp.p1,
    }
}

pub fn estimate_risks(t: &TwoByTwoTable) -> Result<RiskPair> {
    let treated = t.treated_total();
    let untreated = t.untreated_total();
    if treated == 0 {
        return Err(Error::EmptyMargin("treated"));
    }
    if untreated == 0 {
        return Err(Error::EmptyMargin("untreated"));
    }
    RiskPair::new(
        t.a0_y1 as f64 / untreated as f64,
        t.a1_y1 as f64 / treated as f64,
    )
}

/// Two-sided standard-normal quantile for a confidence level.
pub fn normal_quantile(level: f64) -> Result<f64> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidLevel(level));
    }
    let std_normal = Normal::standard();
    Ok(std_normal.inverse_cdf(0.5 + level / 2.0))
}

fn nonzero(count: u64, cell: &'static str) -> Result<f64> {
    if count == 0 {
        Err(Error::ZeroCell(cell))
    } else {
        Ok(count as f64)
    }
}

/// Log-scale Wald interval for the risk ratio, survival ratio or odds ratio.
pub fn wald_ci(t: &TwoByTwoTable, scale: EffectScale, level: f64) -> Result<ConfidenceInterval> {
    let z = normal_quantile(level)?;
    let rp = estimate_risks(t)?;
    let n1 = t.treated_total() as f64;
    let n0 = t.untreated_total() as f64;
    let (point, variance) = match scale {
        EffectScale::RiskRatio => {
            let e1 = nonzero(t.a1_y1, "a1_y1")?;
            let e0 = nonzero(t.a0_y1, "a0_y1")?;
            (risk_ratio(rp)?.value, 1.0 / e1 - 1.0 / n1 + 1.0 / e0 - 1.0 / n0)
        }
        EffectScale::SurvivalRatio => {
            let s1 = nonzero(t.a1_y0, "a1_y0")?;
            let s0 = nonzero(t.a0_y0, "a0_y0")?;
            (survival_ratio(rp)?.value, 1.0 / s1 - 1.0 / n1 + 1.0 / s0 - 1.0 / n0)
        }
        EffectScale::OddsRatio => {
            let cells = [
                nonzero(t.a1_y1, "a1_y1")?,
                nonzero(t.a1_y0, "a1_y0")?,
                nonzero(t.a0_y1, "a0_y1")?,
                nonzero(t.a0_y0, "a0_y0")?,
            ];
            (
                odds_ratio(rp)?.value,
                cells.iter().map(|c| 1.0 / c).sum::<f64>(),
            )
        }
        other => return Err(Error::UnsupportedScale(other.name())),
    };
    let half_width = z * variance.sqrt();
    let center = point.ln();
    Ok(ConfidenceInterval {
        low: (center - half_width).exp(),
        high: (center + half_width).exp(),
        level,
    })
}
