use relrisk::switchmodel::*;

#[test]
fn dual_pattern_swaps_the_potential_outcomes() {
    for p in SwitchPatternType::ALL {
        for b in [false, true] {
            for s in [false, true] {
                let (y0, y1) = potential_outcomes(p, b, s);
                assert_eq!(potential_outcomes(p.treatment_dual(), b, s), (y1, y0), "{p} {b} {s}");
            }
        }
        assert_eq!(p.treatment_dual().treatment_dual(), p);
        assert_ne!(p.treatment_dual().increases_risk(), p.increases_risk());
    }
}

#[test]
fn dual_pattern_swaps_the_exact_risks() {
    for p in SwitchPatternType::ALL {
        for (q, r) in [(0.2, 0.1), (0.5, 0.7), (0.9, 0.0)] {
            let a = exact_risks(&SwitchModel::new(p, q, r).unwrap());
            let b = exact_risks(&SwitchModel::new(p.treatment_dual(), q, r).unwrap());
            assert_eq!((a.p0(), a.p1()), (b.p1(), b.p0()));
        }
    }
}

#[test]
fn stable_scale_of_the_dual_is_the_reciprocal() {
    for p in SwitchPatternType::ALL {
        let s = stable_scale(p);
        let d = stable_scale(p.treatment_dual());
        assert_eq!(s.variant, d.variant);
        assert_ne!(s.reciprocal, d.reciprocal);
    }
}

#[test]
fn cohorts_are_reproducible_per_seed() {
    let m = SwitchModel::new(SwitchPatternType::NecessaryCausal, 0.3, 0.5).unwrap();
    let a = simulate_cohort(&m, 100_000, 9).unwrap();
    let b = simulate_cohort(&m, 100_000, 9).unwrap();
    let c = simulate_cohort(&m, 100_000, 10).unwrap();
    assert_eq!(a.counts, b.counts);
    assert_ne!(a.counts, c.counts);
}
