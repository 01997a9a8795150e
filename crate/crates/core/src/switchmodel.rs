//! Switch-pattern mechanisms.
//!
//! Each individual carries a background outcome indicator (Bernoulli `r`) and
//! an independent switch indicator (Bernoulli `q`). Without a switch, treatment
//! does nothing. With one, the pattern decides how treatment acts:
//!
//! | pattern               | `y0`           | `y1`           | stable scale |
//! |-----------------------|----------------|----------------|--------------|
//! | sufficient-causal     | `b`            | `b or s`       | SR           |
//! | necessary-preventive  | `b or s`       | `b`            | 1/SR         |
//! | sufficient-preventive | `b`            | `b and not s`  | RR           |
//! | necessary-causal      | `b and not s`  | `b`            | 1/RR         |
//!
//! Under a single pattern the stable scale equals `1 - q` in every stratum,
//! whatever the background risk.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::counterfactual::{PopulationCounts, ResponseType};
use crate::error::{check_probability, Error, Result};
use crate::measures::{
    grrr, odds_ratio, risk_difference, risk_ratio, survival_ratio, EffectScale, RatioVariant,
    RiskPair, TwoByTwoTable,
};

const RECOVERY_SLACK: f64 = 1e-12;

/// Individuals simulated per parallel work item.
const CHUNK: u64 = 1 << 16;

const STREAM_BACKGROUND: u64 = 1;
const STREAM_SWITCH: u64 = 2;
const STREAM_ASSIGNMENT: u64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SwitchPatternType {
    /// Treatment is a sufficient cause of the outcome.
    SufficientCausal,
    /// Treatment is a necessary cause of the outcome's absence.
    NecessaryPreventive,
    /// Treatment is a sufficient cause of the outcome's absence.
    SufficientPreventive,
    /// Treatment is a necessary cause of the outcome.
    NecessaryCausal,
}

impl SwitchPatternType {
    pub const ALL: [SwitchPatternType; 4] = [
        SwitchPatternType::SufficientCausal,
        SwitchPatternType::NecessaryPreventive,
        SwitchPatternType::SufficientPreventive,
        SwitchPatternType::NecessaryCausal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SwitchPatternType::SufficientCausal => "sufficient-causal",
            SwitchPatternType::NecessaryPreventive => "necessary-preventive",
            SwitchPatternType::SufficientPreventive => "sufficient-preventive",
            SwitchPatternType::NecessaryCausal => "necessary-causal",
        }
    }

    /// Pattern obtained by exchanging the treated and untreated arms.
    pub fn treatment_dual(self) -> Self {
        match self {
            SwitchPatternType::SufficientCausal => SwitchPatternType::NecessaryPreventive,
            SwitchPatternType::NecessaryPreventive => SwitchPatternType::SufficientCausal,
            SwitchPatternType::SufficientPreventive => SwitchPatternType::NecessaryCausal,
            SwitchPatternType::NecessaryCausal => SwitchPatternType::SufficientPreventive,
        }
    }

    /// Whether the pattern can only raise the risk.
    pub fn increases_risk(self) -> bool {
        matches!(
            self,
            SwitchPatternType::SufficientCausal | SwitchPatternType::NecessaryCausal
        )
    }
}

impl fmt::Display for SwitchPatternType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SwitchPatternType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        SwitchPatternType::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| format!("unknown switch pattern `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwitchModel {
    pub pattern: SwitchPatternType,
    q: f64,
    r: f64,
}

impl SwitchModel {
    /// `q` is the switch prevalence, `r` the background risk.
    pub fn new(pattern: SwitchPatternType, q: f64, r: f64) -> Result<Self> {
        Ok(Self {
            pattern,
            q: check_probability("q", q)?,
            r: check_probability("r", r)?,
        })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn r(&self) -> f64 {
        self.r
    }
}

/// Potential outcomes `(y0, y1)` of one individual.
pub fn potential_outcomes(pattern: SwitchPatternType, background: bool, switch: bool) -> (bool, bool) {
    match pattern {
        SwitchPatternType::SufficientCausal => (background, background || switch),
        SwitchPatternType::NecessaryPreventive => (background || switch, background),
        SwitchPatternType::SufficientPreventive => (background, background && !switch),
        SwitchPatternType::NecessaryCausal => (background && !switch, background),
    }
}

pub fn exact_risks(m: &SwitchModel) -> RiskPair {
    let (q, r) = (m.q, m.r);
    let (p0, p1) = match m.pattern {
        SwitchPatternType::SufficientCausal => (r, r + q * (1.0 - r)),
        SwitchPatternType::NecessaryPreventive => (r + q * (1.0 - r), r),
        SwitchPatternType::SufficientPreventive => (r, r * (1.0 - q)),
        SwitchPatternType::NecessaryCausal => (r * (1.0 - q), r),
    };
    RiskPair::new(p0.min(1.0), p1.min(1.0)).expect("closed forms stay in [0, 1]")
}

/// Switch prevalence implied by observed risks if `pattern` alone drives
/// the effect.
pub fn recover_prevalence(pattern: SwitchPatternType, rp: RiskPair) -> Result<f64> {
    let (p0, p1) = (rp.p0(), rp.p1());
    let ratio = |num: f64, den: f64, why: &'static str| {
        if den == 0.0 {
            Err(Error::UndefinedMeasure(why))
        } else {
            Ok(num / den)
        }
    };
    let q = 1.0
        - match pattern {
            SwitchPatternType::SufficientCausal => {
                ratio(1.0 - p1, 1.0 - p0, "untreated survival is zero")?
            }
            SwitchPatternType::NecessaryPreventive => {
                ratio(1.0 - p0, 1.0 - p1, "treated survival is zero")?
            }
            SwitchPatternType::SufficientPreventive => ratio(p1, p0, "untreated risk is zero")?,
            SwitchPatternType::NecessaryCausal => ratio(p0, p1, "treated risk is zero")?,
        };
    if q < -RECOVERY_SLACK || q > 1.0 + RECOVERY_SLACK {
        return Err(Error::InconsistentPattern { q });
    }
    Ok(q.clamp(0.0, 1.0))
}

/// A ratio variant, possibly inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableScale {
    pub variant: RatioVariant,
    pub reciprocal: bool,
}

impl StableScale {
    pub fn scale(&self) -> EffectScale {
        match self.variant {
            RatioVariant::RiskRatio => EffectScale::RiskRatio,
            RatioVariant::SurvivalRatio => EffectScale::SurvivalRatio,
        }
    }

    pub fn value(&self, rp: RiskPair) -> Result<f64> {
        if !self.reciprocal {
            return Ok(match self.variant {
                RatioVariant::RiskRatio => risk_ratio(rp)?.value,
                RatioVariant::SurvivalRatio => survival_ratio(rp)?.value,
            });
        }
        let (num, den) = match self.variant {
            RatioVariant::RiskRatio => (rp.p0(), rp.p1()),
            RatioVariant::SurvivalRatio => (1.0 - rp.p0(), 1.0 - rp.p1()),
        };
        if den == 0.0 {
            Err(Error::UndefinedMeasure("reciprocal ratio with zero denominator"))
        } else {
            Ok(num / den)
        }
    }
}

impl fmt::Display for StableScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.variant {
            RatioVariant::RiskRatio => "RR",
            RatioVariant::SurvivalRatio => "SR",
        };
        if self.reciprocal {
            write!(f, "1/{name}")
        } else {
            f.write_str(name)
        }
    }
}

/// The scale that stays constant across strata under `pattern`.
pub fn stable_scale(pattern: SwitchPatternType) -> StableScale {
    let (variant, reciprocal) = match pattern {
        SwitchPatternType::SufficientCausal => (RatioVariant::SurvivalRatio, false),
        SwitchPatternType::NecessaryPreventive => (RatioVariant::SurvivalRatio, true),
        SwitchPatternType::SufficientPreventive => (RatioVariant::RiskRatio, false),
        SwitchPatternType::NecessaryCausal => (RatioVariant::RiskRatio, true),
    };
    StableScale {
        variant,
        reciprocal,
    }
}

/// One row of a stability sweep. Undefined measures are kept per cell.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub r: f64,
    pub p0: f64,
    pub p1: f64,
    pub rr: Result<f64>,
    pub sr: Result<f64>,
    pub rd: f64,
    pub or: Result<f64>,
    pub grrr: Result<f64>,
    pub stable_scale_value: Result<f64>,
}

#[derive(Debug, Clone)]
pub struct SweepTable {
    pub pattern: SwitchPatternType,
    pub q: f64,
    pub stable: StableScale,
    pub rows: Vec<SweepRow>,
}

pub const SWEEP_COLUMNS: [&str; 9] = [
    "r",
    "p0",
    "p1",
    "rr",
    "sr",
    "rd",
    "or",
    "grrr",
    "stable_scale_value",
];

impl SweepRow {
    fn cells(&self) -> [Option<f64>; 9] {
        [
            Some(self.r),
            Some(self.p0),
            Some(self.p1),
            self.rr.as_ref().ok().copied(),
            self.sr.as_ref().ok().copied(),
            Some(self.rd),
            self.or.as_ref().ok().copied(),
            self.grrr.as_ref().ok().copied(),
            self.stable_scale_value.as_ref().ok().copied(),
        ]
    }
}

impl SweepTable {
    /// Rows as JSON objects keyed by [`SWEEP_COLUMNS`]; undefined cells are `null`.
    pub fn to_json_records(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj = SWEEP_COLUMNS
                        .iter()
                        .zip(row.cells())
                        .map(|(k, v)| (k.to_string(), json!(v)))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    /// CSV with the fixed header; undefined cells are empty.
    pub fn write_csv<W: Write>(&self, out: W, precision: usize) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(SWEEP_COLUMNS)?;
        for row in &self.rows {
            w.write_record(row.cells().iter().map(|c| match c {
                Some(v) => format!("{v:.precision$}"),
                None => String::new(),
            }))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Every measure of a fixed pattern and prevalence across background risks.
pub fn stability_sweep(
    pattern: SwitchPatternType,
    q: f64,
    baseline_risks: &[f64],
) -> Result<SweepTable> {
    if baseline_risks.is_empty() {
        return Err(Error::InvalidGrid("no baseline risks".into()));
    }
    if let Some(bad) = baseline_risks.iter().find(|r| !(0.0..1.0).contains(*r)) {
        return Err(Error::InvalidGrid(format!("baseline risk {bad} is outside [0, 1)")));
    }
    let stable = stable_scale(pattern);
    let rows = baseline_risks
        .iter()
        .map(|&r| {
            let rp = exact_risks(&SwitchModel::new(pattern, q, r)?);
            Ok(SweepRow {
                r,
                p0: rp.p0(),
                p1: rp.p1(),
                rr: risk_ratio(rp).map(|m| m.value),
                sr: survival_ratio(rp).map(|m| m.value),
                rd: risk_difference(rp).value,
                or: odds_ratio(rp).map(|m| m.value),
                grrr: grrr(rp).map(|m| m.value),
                stable_scale_value: stable.value(rp),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        pattern,
        q,
        stable,
        rows,
    })
}

/// Generator positioned at individual `index` of the `stream` for `seed`.
///
/// Each individual consumes exactly one 64-bit output per stream, so the
/// draw for an individual depends only on `(seed, stream, index)`.
fn positioned_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(2 * index as u128);
    rng
}

fn bernoulli(rng: &mut ChaCha8Rng, p: f64) -> bool {
    rng.random::<f64>() < p
}

fn chunks(n: u64) -> impl IndexedParallelIterator<Item = (u64, u64)> {
    let count = n.div_ceil(CHUNK) as usize;
    (0..count).into_par_iter().map(move |c| {
        let c = c as u64;
        (c * CHUNK, ((c + 1) * CHUNK).min(n))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulatedCohort {
    pub model: SwitchModel,
    pub counts: PopulationCounts,
    pub seed: u64,
    pub n: u64,
}

/// Response type of individual `index` in a cohort drawn from `m`.
pub fn simulate_individual(m: &SwitchModel, seed: u64, index: u64) -> ResponseType {
    let background = bernoulli(&mut positioned_rng(seed, STREAM_BACKGROUND, index), m.r);
    let switch = bernoulli(&mut positioned_rng(seed, STREAM_SWITCH, index), m.q);
    let (y0, y1) = potential_outcomes(m.pattern, background, switch);
    ResponseType::from_outcomes(y0, y1)
}

/// Draws `n` individuals from `m` and tallies their response types.
/// Identical `(m, n, seed)` always gives identical counts.
pub fn simulate_cohort(m: &SwitchModel, n: u64, seed: u64) -> Result<SimulatedCohort> {
    if n == 0 {
        return Err(Error::EmptyCohort);
    }
    let counts = chunks(n)
        .map(|(start, end)| {
            let mut background = positioned_rng(seed, STREAM_BACKGROUND, start);
            let mut switch = positioned_rng(seed, STREAM_SWITCH, start);
            let mut counts = PopulationCounts::default();
            for _ in start..end {
                let b = bernoulli(&mut background, m.r);
                let s = bernoulli(&mut switch, m.q);
                let (y0, y1) = potential_outcomes(m.pattern, b, s);
                counts.add(ResponseType::from_outcomes(y0, y1), 1);
            }
            counts
        })
        .reduce(PopulationCounts::default, |a, b| a + b);
    Ok(SimulatedCohort {
        model: *m,
        counts,
        seed,
        n,
    })
}

/// Response type at position `index` when the cohort is laid out in
/// doomed, causal, preventive, immune order.
fn type_at(counts: &PopulationCounts, index: u64) -> ResponseType {
    let mut upper = 0;
    for t in ResponseType::ALL {
        upper += counts.count(t);
        if index < upper {
            return t;
        }
    }
    unreachable!("index {index} beyond cohort of {upper}")
}

fn tally(table: &mut TwoByTwoTable, t: ResponseType, treated: bool) {
    let (y0, y1) = t.outcomes();
    match (treated, if treated { y1 } else { y0 }) {
        (true, true) => table.a1_y1 += 1,
        (true, false) => table.a1_y0 += 1,
        (false, true) => table.a0_y1 += 1,
        (false, false) => table.a0_y0 += 1,
    }
}

fn add_tables(a: TwoByTwoTable, b: TwoByTwoTable) -> TwoByTwoTable {
    TwoByTwoTable::new(
        a.a1_y1 + b.a1_y1,
        a.a1_y0 + b.a1_y0,
        a.a0_y1 + b.a0_y1,
        a.a0_y0 + b.a0_y0,
    )
}

/// Randomizes every cohort member to treatment with `treat_probability`
/// and reveals the matching potential outcome.
pub fn observed_table(
    cohort: &SimulatedCohort,
    treat_probability: f64,
    seed: u64,
) -> Result<TwoByTwoTable> {
    if !(treat_probability > 0.0 && treat_probability < 1.0) {
        return Err(Error::InvalidProbability {
            name: "treat_probability",
            value: treat_probability,
        });
    }
    let counts = cohort.counts;
    let n = counts.total();
    if n == 0 {
        return Err(Error::EmptyCohort);
    }
    Ok(chunks(n)
        .map(|(start, end)| {
            let mut rng = positioned_rng(seed, STREAM_ASSIGNMENT, start);
            let mut table = TwoByTwoTable::default();
            for i in start..end {
                let treated = bernoulli(&mut rng, treat_probability);
                tally(&mut table, type_at(&counts, i), treated);
            }
            table
        })
        .reduce(TwoByTwoTable::default, add_tables))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(p: SwitchPatternType, q: f64, r: f64) -> SwitchModel {
        SwitchModel::new(p, q, r).unwrap()
    }

    #[test]
    fn potential_outcome_examples() {
        use SwitchPatternType::*;
        assert_eq!(potential_outcomes(SufficientCausal, false, true), (false, true));
        assert_eq!(potential_outcomes(SufficientPreventive, true, true), (true, false));
        for p in SwitchPatternType::ALL {
            for b in [false, true] {
                assert_eq!(potential_outcomes(p, b, false), (b, b));
            }
        }
    }

    #[test]
    fn exact_risk_examples() {
        let rp = exact_risks(&model(SwitchPatternType::SufficientCausal, 0.5, 0.2));
        assert!((rp.p0() - 0.2).abs() < 1e-12 && (rp.p1() - 0.6).abs() < 1e-12);
        let rp = exact_risks(&model(SwitchPatternType::SufficientPreventive, 0.3, 0.5));
        assert!((rp.p0() - 0.5).abs() < 1e-12 && (rp.p1() - 0.35).abs() < 1e-12);
        for p in SwitchPatternType::ALL {
            let rp = exact_risks(&model(p, 0.0, 0.37));
            assert_eq!((rp.p0(), rp.p1()), (0.37, 0.37));
        }
    }

    #[test]
    fn recover_examples() {
        let q = recover_prevalence(SwitchPatternType::SufficientCausal, RiskPair::new(0.2, 0.6).unwrap())
            .unwrap();
        assert!((q - 0.5).abs() < 1e-12);
        let q = recover_prevalence(
            SwitchPatternType::SufficientPreventive,
            RiskPair::new(0.5, 0.35).unwrap(),
        )
        .unwrap();
        assert!((q - 0.3).abs() < 1e-12);
        assert!(matches!(
            recover_prevalence(SwitchPatternType::SufficientCausal, RiskPair::new(0.2, 0.1).unwrap()),
            Err(Error::InconsistentPattern { .. })
        ));
        assert!(matches!(
            recover_prevalence(SwitchPatternType::SufficientPreventive, RiskPair::new(0.0, 0.0).unwrap()),
            Err(Error::UndefinedMeasure(_))
        ));
    }

    #[test]
    fn stable_scale_table() {
        use SwitchPatternType::*;
        let s = stable_scale(SufficientCausal);
        assert_eq!((s.variant, s.reciprocal), (RatioVariant::SurvivalRatio, false));
        let s = stable_scale(SufficientPreventive);
        assert_eq!((s.variant, s.reciprocal), (RatioVariant::RiskRatio, false));
        let s = stable_scale(NecessaryCausal);
        assert_eq!((s.variant, s.reciprocal), (RatioVariant::RiskRatio, true));
        assert_eq!(stable_scale(NecessaryPreventive).to_string(), "1/SR");
    }

    #[test]
    fn sweep_examples() {
        let t = stability_sweep(SwitchPatternType::SufficientPreventive, 0.3, &[0.1, 0.5, 0.9]).unwrap();
        for row in &t.rows {
            assert!((row.rr.as_ref().unwrap() - 0.7).abs() < 1e-12);
        }
        let t = stability_sweep(SwitchPatternType::SufficientCausal, 0.5, &[0.1, 0.3]).unwrap();
        let rr: Vec<f64> = t.rows.iter().map(|r| *r.rr.as_ref().unwrap()).collect();
        for row in &t.rows {
            assert!((row.sr.as_ref().unwrap() - 0.5).abs() < 1e-12);
        }
        assert!((rr[0] - 5.5).abs() < 1e-12);
        assert!((rr[1] - 0.65 / 0.3).abs() < 1e-12);

        let t = stability_sweep(SwitchPatternType::NecessaryCausal, 0.0, &[0.2, 0.4]).unwrap();
        for row in &t.rows {
            for v in [&row.rr, &row.sr, &row.or, &row.stable_scale_value] {
                assert_eq!(*v.as_ref().unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn sweep_records_undefined_cells() {
        let t = stability_sweep(SwitchPatternType::SufficientPreventive, 0.3, &[0.0, 0.5]).unwrap();
        assert!(matches!(t.rows[0].rr, Err(Error::UndefinedMeasure(_))));
        let json = t.to_json_records();
        assert!(json[0]["rr"].is_null());
        assert!((json[1]["rr"].as_f64().unwrap() - 0.7).abs() < 1e-12);
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let p = SwitchPatternType::SufficientCausal;
        assert!(matches!(stability_sweep(p, 0.5, &[]), Err(Error::InvalidGrid(_))));
        assert!(matches!(stability_sweep(p, 0.5, &[0.2, 1.0]), Err(Error::InvalidGrid(_))));
    }

    #[test]
    fn sweep_csv_header() {
        let t = stability_sweep(SwitchPatternType::SufficientCausal, 0.5, &[0.1]).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf, 4).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "r,p0,p1,rr,sr,rd,or,grrr,stable_scale_value");
        assert_eq!(
            lines.next().unwrap(),
            "0.1000,0.1000,0.5500,5.5000,0.5000,0.4500,11.0000,-0.5000,0.5000"
        );
    }

    #[test]
    fn cohort_is_deterministic() {
        let m = model(SwitchPatternType::SufficientCausal, 0.4, 0.3);
        let a = simulate_cohort(&m, 10, 42).unwrap();
        let b = simulate_cohort(&m, 10, 42).unwrap();
        assert_eq!(a.counts, b.counts);
        assert_eq!(a.counts.total(), 10);
        assert!(matches!(simulate_cohort(&m, 0, 1), Err(Error::EmptyCohort)));
    }

    #[test]
    fn chunked_simulation_matches_per_individual_draws() {
        let m = model(SwitchPatternType::NecessaryPreventive, 0.35, 0.45);
        let n = 3 * CHUNK + 17;
        let cohort = simulate_cohort(&m, n, 9).unwrap();
        let mut reference = PopulationCounts::default();
        for i in 0..n {
            reference.add(simulate_individual(&m, 9, i), 1);
        }
        assert_eq!(cohort.counts, reference);
    }

    #[test]
    fn deterministic_corner() {
        let m = model(SwitchPatternType::SufficientPreventive, 1.0, 1.0);
        let c = simulate_cohort(&m, 100, 5).unwrap();
        assert_eq!(c.counts, PopulationCounts::new(0, 0, 100, 0));
    }

    #[test]
    fn doomed_cohort_always_reveals_outcome() {
        let m = model(SwitchPatternType::SufficientCausal, 0.0, 1.0);
        let c = simulate_cohort(&m, 4, 3).unwrap();
        assert_eq!(c.counts, PopulationCounts::new(4, 0, 0, 0));
        let t = observed_table(&c, 0.5, 11).unwrap();
        assert_eq!(t.a1_y0 + t.a0_y0, 0);
        assert_eq!(t.a1_y1 + t.a0_y1, 4);
    }

    #[test]
    fn observed_table_preconditions() {
        let m = model(SwitchPatternType::SufficientCausal, 0.5, 0.2);
        let c = simulate_cohort(&m, 50, 1).unwrap();
        assert!(observed_table(&c, 0.0, 1).is_err());
        assert!(observed_table(&c, 1.0, 1).is_err());
        let t = observed_table(&c, 0.3, 1).unwrap();
        assert_eq!(t.treated_total() + t.untreated_total(), 50);
        assert_eq!(t, observed_table(&c, 0.3, 1).unwrap());
    }

    #[test]
    fn pattern_names_parse() {
        for p in SwitchPatternType::ALL {
            assert_eq!(p.name().parse::<SwitchPatternType>().unwrap(), p);
        }
        assert!("sufficient".parse::<SwitchPatternType>().is_err());
    }
}
