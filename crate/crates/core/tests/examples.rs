// Each example runs and produces what its narration claims.

#[allow(dead_code)]
mod effect_measures_2x2 {
    include!("../examples/effect_measures_2x2.rs");
}
#[allow(dead_code)]
mod transport_closure {
    include!("../examples/transport_closure.rs");
}
#[allow(dead_code)]
mod sheps_identities {
    include!("../examples/sheps_identities.rs");
}
#[allow(dead_code)]
mod switch_stability_sweep {
    include!("../examples/switch_stability_sweep.rs");
}
#[allow(dead_code)]
mod monte_carlo_cohort {
    include!("../examples/monte_carlo_cohort.rs");
}
#[allow(dead_code)]
mod log_binomial_fit {
    include!("../examples/log_binomial_fit.rs");
}
#[allow(dead_code)]
mod cli_session {
    include!("../examples/cli_session.rs");
}

use relrisk::measures::EffectScale;

#[test]
fn effect_measures_on_the_reference_table() {
    let values = effect_measures_2x2::run_example().unwrap();
    let get = |s: EffectScale| values.iter().find(|(k, _)| k.name() == s.name()).unwrap().1;
    assert!((get(EffectScale::RiskRatio) - 0.5).abs() < 1e-12);
    assert!((get(EffectScale::SurvivalRatio) - 4.0 / 3.0).abs() < 1e-12);
    assert!((get(EffectScale::Grrr) - 0.5).abs() < 1e-12);
    assert!((get(EffectScale::OddsRatio) - 0.375).abs() < 1e-12);
}

#[test]
fn grrr_transport_stays_in_range() {
    for (p0, p1) in transport_closure::run_example().unwrap() {
        assert!((0.0..=1.0).contains(&p1));
        assert!(p1 >= p0);
    }
}

#[test]
fn sheps_example_identities_hold() {
    let (prevented, harmed) = sheps_identities::run_example().unwrap();
    assert!((prevented - 0.75).abs() < 1e-12);
    assert!((harmed - 10.0 / 34.0).abs() < 1e-12);
}

#[test]
fn sweep_example_is_flat_on_the_stable_scale() {
    for t in switch_stability_sweep::run_example().unwrap() {
        for row in &t.rows {
            if let Ok(v) = row.stable_scale_value {
                assert!((v - 0.7).abs() < 1e-12, "{} r={}", t.pattern, row.r);
            }
        }
    }
}

#[test]
fn monte_carlo_example_is_near_the_closed_form() {
    let (p1, sr) = monte_carlo_cohort::run_example().unwrap();
    assert!((p1 - 0.6).abs() < 0.01);
    assert!((sr - 0.5).abs() < 0.02);
}

#[test]
fn fit_example_returns_a_ratio() {
    let v = log_binomial_fit::run_example().unwrap();
    assert!(v > 0.0 && v.is_finite());
}

#[test]
fn cli_example_exit_codes() {
    let codes: Vec<i32> = cli_session::run_example().into_iter().map(|(_, c)| c).collect();
    assert_eq!(codes, [0, 2, 0, 0]);
}
