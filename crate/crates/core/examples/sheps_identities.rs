// Response types behind a pair of risks. Under monotonicity the relative
// reductions equal the share of the population that treatment flips.

use relrisk::counterfactual::{
    enumerate_population, marginal_risks, monotonicity_check, proportion_harmed,
    proportion_prevented, Monotonicity, PopulationCounts, ResponseTypeDistribution,
};
use relrisk::measures::{relative_risk_reduction, relative_survival_reduction};

pub fn run_example() -> relrisk::Result<(f64, f64)> {
    // no causal type: treatment only ever prevents
    let d = ResponseTypeDistribution::new(0.1, 0.0, 0.3, 0.6)?;
    let rp = marginal_risks(&d);
    assert!(monotonicity_check(&d, Monotonicity::NoCausation));
    let prevented = proportion_prevented(&d)?;
    let rrr = relative_risk_reduction(rp)?.value;
    println!("p0 {:.2}, p1 {:.2}: prevented {prevented:.4}, 1 - RR {rrr:.4}", rp.p0(), rp.p1());

    // same thing on a finite population of 40 people, harm only
    let counts = PopulationCounts::new(6, 10, 0, 24);
    let d = enumerate_population(&counts)?;
    let rp = counts.marginal_risks()?;
    let harmed = proportion_harmed(&d)?;
    let rsr = relative_survival_reduction(rp)?.value;
    println!("p0 {:.3}, p1 {:.3}: harmed {harmed:.4}, 1 - SR {rsr:.4}", rp.p0(), rp.p1());
    Ok((prevented, harmed))
}

fn main() -> relrisk::Result<()> {
    run_example().map(|_| ())
}
