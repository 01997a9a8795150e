// Sweep baseline risk under each switch pattern and watch which scale stays put.

use relrisk::switchmodel::{stability_sweep, SwitchPatternType, SweepTable};

pub fn run_example() -> relrisk::Result<Vec<SweepTable>> {
    let grid = [0.0, 0.1, 0.2, 0.4, 0.6, 0.8];
    let mut tables = Vec::new();
    for pattern in SwitchPatternType::ALL {
        let t = stability_sweep(pattern, 0.3, &grid)?;
        println!("{} (stable: {})", pattern.name(), t.stable);
        for row in &t.rows {
            let fmt = |v: &relrisk::Result<f64>| match v {
                Ok(x) => format!("{x:.4}"),
                Err(_) => "-".to_string(),
            };
            println!(
                "  r {:.1}  rr {:>7}  sr {:>7}  stable {:>7}",
                row.r,
                fmt(&row.rr),
                fmt(&row.sr),
                fmt(&row.stable_scale_value)
            );
        }
        tables.push(t);
    }
    Ok(tables)
}

fn main() -> relrisk::Result<()> {
    run_example().map(|_| ())
}
