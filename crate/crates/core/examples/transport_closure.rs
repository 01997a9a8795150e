// Carry an effect from one population to another baseline risk.
// RR and SR can leave [0, 1]; GRRR never does.

use relrisk::measures::{apply_measure, compute, EffectScale, RiskPair};
use relrisk::Error;

pub fn run_example() -> relrisk::Result<Vec<(f64, f64)>> {
    // a harmful exposure measured at low baseline risk
    let source = RiskPair::new(0.2, 0.5)?;
    let rr = compute(source, EffectScale::RiskRatio)?;
    let g = compute(source, EffectScale::Grrr)?;
    println!("source RR {:.3}, GRRR {:.3}", rr.value, g.value);

    let mut transported = Vec::new();
    for p0 in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let by_grrr = apply_measure(p0, g)?;
        let by_rr = match apply_measure(p0, rr) {
            Ok(p1) => format!("{p1:.3}"),
            Err(Error::NotClosed { implied }) => format!("not a risk ({implied:.3})"),
            Err(e) => return Err(e),
        };
        println!("p0 {p0:.1}: GRRR gives {by_grrr:.3}, RR gives {by_rr}");
        transported.push((p0, by_grrr));
    }
    Ok(transported)
}

fn main() -> relrisk::Result<()> {
    run_example().map(|_| ())
}
