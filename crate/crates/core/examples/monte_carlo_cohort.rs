// Simulate a cohort under a switch pattern, then a randomized trial on it.

use relrisk::measures::{compute, estimate_risks, EffectScale};
use relrisk::switchmodel::{
    exact_risks, observed_table, simulate_cohort, SwitchModel, SwitchPatternType,
};

pub fn run_example() -> relrisk::Result<(f64, f64)> {
    let model = SwitchModel::new(SwitchPatternType::SufficientCausal, 0.5, 0.2)?;
    let exact = exact_risks(&model);
    let cohort = simulate_cohort(&model, 200_000, 42)?;
    let empirical = cohort.counts.marginal_risks()?;
    println!("exact     p0 {:.4} p1 {:.4}", exact.p0(), exact.p1());
    println!("simulated p0 {:.4} p1 {:.4}", empirical.p0(), empirical.p1());

    let table = observed_table(&cohort, 0.5, 43)?;
    let trial = estimate_risks(&table)?;
    let sr = compute(trial, EffectScale::SurvivalRatio)?.value;
    println!("trial {table:?}: SR {sr:.4} (model 1 - q = {:.4})", 1.0 - model.q());
    Ok((empirical.p1(), sr))
}

fn main() -> relrisk::Result<()> {
    run_example().map(|_| ())
}
