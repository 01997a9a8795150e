use proptest::prelude::*;
use relrisk::measures::*;
use relrisk::Error;

fn risk() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(1.0), 0.0..=1.0f64]
}

proptest! {
    #[test]
    fn grrr_round_trips_within_the_unit_interval(p0 in 0.001..0.999f64, p1 in risk(), target in risk()) {
        let g = grrr(RiskPair::new(p0, p1).unwrap()).unwrap();
        prop_assert!((-1.0..=1.0).contains(&g.value));
        let back = apply_measure(p0, g).unwrap();
        prop_assert!((back - p1).abs() < 1e-12);
        // any other baseline also lands on a risk
        let moved = apply_measure(target, g).unwrap();
        prop_assert!((0.0..=1.0).contains(&moved));
    }

    #[test]
    fn compute_then_apply_recovers_p1(p0 in 0.001..0.999f64, p1 in 0.001..0.999f64) {
        let rp = RiskPair::new(p0, p1).unwrap();
        for scale in [
            EffectScale::RiskRatio,
            EffectScale::SurvivalRatio,
            EffectScale::RiskDifference,
            EffectScale::OddsRatio,
            EffectScale::RelativeRiskReduction,
            EffectScale::RelativeSurvivalReduction,
            EffectScale::SwitchSelected(RatioVariant::RiskRatio),
            EffectScale::Grrr,
        ] {
            let m = compute(rp, scale).unwrap();
            let back = apply_measure(p0, m).unwrap();
            prop_assert!((back - p1).abs() < 1e-9, "{} {} {}", scale, p0, p1);
        }
    }

    #[test]
    fn label_swap_exchanges_rr_and_sr(p0 in 0.001..0.999f64, p1 in risk()) {
        let rp = RiskPair::new(p0, p1).unwrap();
        let sw = swap_outcome_labels(rp);
        // 1 - (1 - p) is not always p in floating point
        let rel = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs().max(1.0);
        prop_assert!(rel(risk_ratio(sw).unwrap().value, survival_ratio(rp).unwrap().value));
        prop_assert!(rel(survival_ratio(sw).unwrap().value, risk_ratio(rp).unwrap().value));
        prop_assert!((grrr(sw).unwrap().value + grrr(rp).unwrap().value).abs() < 1e-12);
    }

    #[test]
    fn switch_never_exceeds_one(p0 in 0.001..0.999f64, p1 in risk()) {
        let m = switch_select(RiskPair::new(p0, p1).unwrap()).unwrap();
        prop_assert!((0.0..=1.0).contains(&m.value));
    }

    #[test]
    fn ratio_transport_is_never_clamped(p0 in 0.01..0.99f64, rr in 1.0..20.0f64) {
        let m = MeasureValue::new(EffectScale::RiskRatio, rr).unwrap();
        match apply_measure(p0, m) {
            Ok(p1) => prop_assert!((p1 - p0 * rr).abs() < 1e-15),
            Err(Error::NotClosed { implied }) => {
                prop_assert!(implied > 1.0);
                prop_assert_eq!(implied, p0 * rr);
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn rd_is_antisymmetric_in_the_arms(p0 in risk(), p1 in risk()) {
        let a = risk_difference(RiskPair::new(p0, p1).unwrap()).value;
        let b = risk_difference(RiskPair::new(p1, p0).unwrap()).value;
        prop_assert_eq!(a, -b);
    }
}

#[test]
fn risk_pair_rejects_out_of_range_and_nan() {
    for (p0, p1) in [(-0.1, 0.5), (0.5, 1.1), (f64::NAN, 0.2)] {
        assert!(matches!(RiskPair::new(p0, p1), Err(Error::InvalidProbability { .. })));
    }
}
