//! The closed-form discord branches are defined as specific measurement
//! directions; these ensembles confirm each branch against the raw
//! measurement objective, and confirm that no direction undercuts their
//! minimum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spin_otto::correlations::discord_analytic;
use spin_otto::oracle::{measurement_objective, MeasurementAngles};
use spin_otto::{thermal_xstate, SubstanceParams, XState};
use std::f64::consts::{PI, TAU};

fn random_thermal(rng: &mut ChaCha8Rng) -> (XState, String) {
    let mu = rng.gen_range(0.0..12.0);
    let omega = rng.gen_range(0.0..12.0);
    let t = rng.gen_range(0.2f64.ln()..20.0f64.ln()).exp();
    let x = thermal_xstate(SubstanceParams::new(mu, omega).unwrap(), t).unwrap();
    (x, format!("mu={mu}, omega={omega}, T={t}"))
}

#[test]
fn axis_branch_equals_the_polar_measurement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
    for _ in 0..400 {
        let (x, context) = random_thermal(&mut rng);
        let report = discord_analytic(&x);
        let polar = measurement_objective(&x, MeasurementAngles::new(0.0, 0.0).unwrap());
        assert!(
            (polar - report.d1).abs() < 1e-9,
            "axis branch {} vs objective {polar} at {context}",
            report.d1
        );
    }
}

#[test]
fn transverse_branch_equals_the_best_equatorial_measurement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA2);
    for _ in 0..400 {
        let (x, context) = random_thermal(&mut rng);
        let report = discord_analytic(&x);
        let equatorial = [0.0, PI / 2.0]
            .into_iter()
            .map(|phi| {
                measurement_objective(&x, MeasurementAngles::new(PI / 2.0, phi).unwrap())
            })
            .fold(f64::INFINITY, f64::min);
        assert!(
            (equatorial - report.d2).abs() < 1e-9,
            "transverse branch {} vs objective {equatorial} at {context}",
            report.d2
        );
    }
}

#[test]
fn zero_azimuth_is_optimal_on_the_equator_for_thermal_states() {
    // Thermal coherences satisfy w <= 0 and z <= 0, so their product is
    // non-negative and the equatorial objective is minimized at phi = 0.
    let mut rng = ChaCha8Rng::seed_from_u64(0xA3);
    for _ in 0..300 {
        let (x, context) = random_thermal(&mut rng);
        let reference = measurement_objective(&x, MeasurementAngles::new(PI / 2.0, 0.0).unwrap());
        let phi = rng.gen_range(0.0..TAU);
        let probe = measurement_objective(&x, MeasurementAngles::new(PI / 2.0, phi).unwrap());
        assert!(
            probe >= reference - 1e-12,
            "phi={phi} beat phi=0 by {} at {context}",
            reference - probe
        );
    }
}

#[test]
fn no_direction_undercuts_the_analytic_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA4);
    for _ in 0..300 {
        let (x, context) = random_thermal(&mut rng);
        let report = discord_analytic(&x);
        let floor = report.d1.min(report.d2);
        for _ in 0..5 {
            let angles = MeasurementAngles::new(
                rng.gen_range(0.0..=PI),
                rng.gen_range(0.0..TAU),
            )
            .unwrap();
            let value = measurement_objective(&x, angles);
            assert!(
                value >= floor - 1e-9,
                "direction (theta={}, phi={}) reached {value}, below the \
                 analytic minimum {floor} at {context}",
                angles.theta(),
                angles.phi()
            );
        }
    }
}
