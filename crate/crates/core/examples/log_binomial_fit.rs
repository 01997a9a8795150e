// Adjusted relative risk from individual rows, letting the data pick the
// outcome level whose log-binomial model fits better.

use relrisk::glmfit::{auto_link, loglik_compare, RegressionDataset};

const ROWS: &str = "a,y,site
1,1,north
1,0,north
1,0,north
1,0,north
0,1,north
0,1,north
0,0,north
0,0,north
1,1,south
1,1,south
1,0,south
1,0,south
0,1,south
0,1,south
0,1,south
0,0,south
";

pub fn run_example() -> relrisk::Result<f64> {
    let d = RegressionDataset::from_csv(ROWS.as_bytes())?;
    let (outcome, complement) = loglik_compare(&d)?;
    println!("loglik outcome {outcome:.4}, complement {complement:.4}");
    let fit = auto_link(&d)?;
    let (scale, value) = fit.exposure_effect();
    println!(
        "level {}: {} = {value:.4} after {} iterations",
        fit.reference_level.name(),
        scale.name(),
        fit.iterations
    );
    for (name, (b, se)) in fit
        .coefficient_names
        .iter()
        .zip(fit.coefficients.iter().zip(&fit.std_errors))
    {
        println!("  {name:<12} {b:>8.4} ({se:.4})");
    }
    Ok(value)
}

fn main() -> relrisk::Result<()> {
    run_example().map(|_| ())
}
