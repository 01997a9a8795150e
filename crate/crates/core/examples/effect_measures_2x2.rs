// Every effect measure for one 2x2 table, with Wald intervals on the ratio scales.

use relrisk::measures::{compute, estimate_risks, wald_ci, EffectScale, RatioVariant, TwoByTwoTable};

pub fn run_example() -> relrisk::Result<Vec<(EffectScale, f64)>> {
    // treated: 20 events of 100, untreated: 40 of 100
    let table = TwoByTwoTable::new(20, 80, 40, 60);
    let rp = estimate_risks(&table)?;
    println!("p0 = {}, p1 = {}", rp.p0(), rp.p1());

    let scales = [
        EffectScale::RiskRatio,
        EffectScale::SurvivalRatio,
        EffectScale::RiskDifference,
        EffectScale::OddsRatio,
        EffectScale::RelativeRiskReduction,
        EffectScale::RelativeSurvivalReduction,
        EffectScale::SwitchSelected(RatioVariant::RiskRatio),
        EffectScale::Grrr,
    ];
    let mut out = Vec::new();
    for scale in scales {
        let m = compute(rp, scale)?;
        println!("{:>6} {:.4}", m.scale.name(), m.value);
        out.push((m.scale, m.value));
    }
    for scale in [EffectScale::RiskRatio, EffectScale::SurvivalRatio, EffectScale::OddsRatio] {
        let ci = wald_ci(&table, scale, 0.95)?;
        println!("{:>6} 95% CI ({:.4}, {:.4})", scale.name(), ci.low, ci.high);
    }
    Ok(out)
}

fn main() -> relrisk::Result<()> {
    run_example().map(|_| ())
}
