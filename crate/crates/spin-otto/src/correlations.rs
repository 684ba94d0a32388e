//! Quantum correlation measures of X-shaped two-qubit states: concurrence,
//! entanglement of formation, and quantum discord in closed form.
//!
//! For X states the measurement extremization inside quantum discord
//! collapses to the better of two branches: a measurement along the
//! computational axis of the second spin (`d1`) and a transverse measurement
//! (`d2`). Both are evaluated exactly here; the numerical minimizer in
//! [`crate::oracle`] confirms that their minimum is the true optimum.

use crate::error::Result;
use crate::spin_model::SubstanceParams;
use crate::thermal::{
    binary_entropy, reduced_entropy, shannon_entropy_bits, thermal_xstate, XState,
};

/// Discord round-off below zero is clamped; anything more negative than this
/// would indicate a real defect rather than floating-point noise.
pub const DISCORD_CLAMP_TOLERANCE: f64 = 1e-12;

/// All correlation quantities evaluated on one state.
///
/// `discord` is `min(d1, d2)` exactly, except that a tiny negative round-off
/// (bounded by [`DISCORD_CLAMP_TOLERANCE`]) clamps to zero; `eof` is zero
/// exactly when `concurrence` is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub discord: f64,
    pub d1: f64,
    pub d2: f64,
    pub concurrence: f64,
    pub eof: f64,
    pub gamma: f64,
    pub delta_plus: f64,
    pub delta_minus: f64,
}

/// Concurrence `C = 2 * max{0, |z| - sqrt(a*d), |w| - b}`.
pub fn concurrence(x: &XState) -> f64 {
    let inner_branch = x.z().abs() - (x.a() * x.d()).sqrt();
    let outer_branch = x.w().abs() - x.b();
    (2.0 * inner_branch.max(outer_branch)).max(0.0)
}

/// Entanglement of formation from a concurrence value:
/// `h[(1 + sqrt(1 - C^2)) / 2]`. Returns exactly `+0.0` for `C = 0`.
pub fn eof_from_concurrence(c: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&c), "concurrence out of range: {c}");
    if c == 0.0 {
        return 0.0;
    }
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt()))
}

/// Entanglement of formation of an X state.
pub fn eof(x: &XState) -> f64 {
    eof_from_concurrence(concurrence(x))
}

/// Closed-form quantum discord of an X state, with both measurement branches
/// and the entanglement measures bundled into one report.
pub fn discord_analytic(x: &XState) -> CorrelationReport {
    let (a, b, d) = (x.a(), x.b(), x.d());
    let s_local = reduced_entropy(x);
    let s_total = shannon_entropy_bits(&x.eigenvalues());

    // Branch 1: measure the second spin along the computational axis. The
    // outcomes have probabilities a+b and b+d and leave diagonal conditional
    // states, so the conditional entropy is a probability-weighted pair of
    // binary entropies.
    let mut conditional_axis = 0.0;
    if a + b > 0.0 {
        conditional_axis += (a + b) * binary_entropy(a / (a + b));
    }
    if b + d > 0.0 {
        conditional_axis += (b + d) * binary_entropy(b / (b + d));
    }
    let d1 = s_local - s_total + conditional_axis;

    // Branch 2: transverse measurement. Gamma^2 = (a-d)^2 + 4(|z|+|w|)^2 and
    // Gamma <= 1 for every valid X state, so excursions above one are pure
    // round-off and are clamped before the entropy evaluation.
    let coherence = x.z().abs() + x.w().abs();
    let gamma = f64::hypot(a - d, 2.0 * coherence).min(1.0);
    let delta_plus = 0.5 * (1.0 + gamma);
    let delta_minus = 0.5 * (1.0 - gamma);
    let d2 = s_local - s_total + shannon_entropy_bits(&[delta_plus, delta_minus]);

    let raw = d1.min(d2);
    let discord = if raw > 0.0 {
        raw
    } else {
        debug_assert!(
            raw > -DISCORD_CLAMP_TOLERANCE,
            "discord {raw} fell below the round-off clamp"
        );
        0.0
    };

    let c = concurrence(x);
    CorrelationReport {
        discord,
        d1,
        d2,
        concurrence: c,
        eof: eof_from_concurrence(c),
        gamma,
        delta_plus,
        delta_minus,
    }
}

/// Correlation measures of the thermal state at `(params, T)`.
pub fn correlations_at(params: SubstanceParams, temperature: f64) -> Result<CorrelationReport> {
    Ok(discord_analytic(&thermal_xstate(params, temperature)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thermal::XState;

    fn params(mu: f64, omega: f64) -> SubstanceParams {
        SubstanceParams::new(mu, omega).unwrap()
    }

    fn singlet() -> XState {
        XState::new(0.0, 0.5, 0.0, 0.0, -0.5).unwrap()
    }

    fn maximally_mixed() -> XState {
        XState::new(0.25, 0.25, 0.25, 0.0, 0.0).unwrap()
    }

    #[test]
    fn concurrence_examples() {
        assert_eq!(concurrence(&singlet()), 1.0);
        assert_eq!(concurrence(&maximally_mixed()), 0.0);
        let ground = thermal_xstate(params(5.0, 10.0), 1e-3).unwrap();
        assert!((concurrence(&ground) - 0.242535625036333).abs() < 1e-12);
    }

    #[test]
    fn eof_examples() {
        assert_eq!(eof_from_concurrence(1.0), 1.0);
        let zero = eof_from_concurrence(0.0);
        assert_eq!(zero, 0.0);
        assert!(zero.is_sign_positive());

        let ground = thermal_xstate(params(5.0, 10.0), 1e-3).unwrap();
        let e = eof(&ground);
        assert!((e - 0.111930318810064).abs() < 1e-12);
        // Pure state: EoF coincides with the reduced entropy.
        assert!((e - crate::thermal::reduced_entropy(&ground)).abs() < 1e-9);
    }

    #[test]
    fn eof_grows_strictly_with_concurrence() {
        let mut last = 0.0;
        for k in 1..=100 {
            let c = k as f64 / 100.0;
            let e = eof_from_concurrence(c);
            assert!(e > last, "EoF not increasing at C = {c}");
            last = e;
        }
        assert!((last - 1.0).abs() < 1e-15);
    }

    #[test]
    fn discord_of_reference_states() {
        let mixed = discord_analytic(&maximally_mixed());
        assert_eq!(mixed.discord, 0.0);
        assert!(mixed.d1.abs() < 1e-12 && mixed.d2.abs() < 1e-12);
        assert_eq!(mixed.gamma, 0.0);

        let bell = discord_analytic(&singlet());
        assert!((bell.discord - 1.0).abs() < 1e-12);
        assert!((bell.d1 - 1.0).abs() < 1e-12);
        assert!((bell.d2 - 1.0).abs() < 1e-12);
        assert!((bell.gamma - 1.0).abs() < 1e-15);
        assert!((bell.concurrence - 1.0).abs() < 1e-15);
        assert!((bell.eof - 1.0).abs() < 1e-12);
    }

    #[test]
    fn classically_correlated_diagonal_state_has_zero_discord() {
        let x = XState::new(0.4, 0.2, 0.2, 0.0, 0.0).unwrap();
        let r = discord_analytic(&x);
        assert!(r.discord.abs() < 1e-12);
        // Here the computational-axis branch is the zero one.
        assert!(r.d1.abs() < 1e-12);
        assert!((r.d2 - 0.01997309402197489).abs() < 1e-12);
    }

    #[test]
    fn discord_report_is_internally_consistent() {
        for &(mu, omega, t) in &[
            (5.0, 10.0, 1e-3),
            (4.0, 0.0, 1.0),
            (4.0, 4.0, 1.0),
            (1.0, 2.0, 1.0),
            (10.0, 7.0, 4.0),
        ] {
            let r = correlations_at(params(mu, omega), t).unwrap();
            if r.d1.min(r.d2) > 0.0 {
                assert_eq!(r.discord, r.d1.min(r.d2));
            } else {
                assert_eq!(r.discord, 0.0);
            }
            assert!((r.delta_plus - 0.5 * (1.0 + r.gamma)).abs() < 1e-15);
            assert!((r.delta_minus - 0.5 * (1.0 - r.gamma)).abs() < 1e-15);
            assert!((0.0..=1.0).contains(&r.discord));
            assert!((0.0..=1.0).contains(&r.eof));
            assert_eq!(r.eof == 0.0, r.concurrence == 0.0);
        }
    }

    #[test]
    fn near_ground_thermal_point_matches_frozen_values() {
        let r = correlations_at(params(5.0, 10.0), 1e-3).unwrap();
        assert!((r.discord - 0.111930318810065).abs() < 1e-12);
        assert!((r.eof - 0.111930318810064).abs() < 1e-12);
        // Pure-state coincidence of discord and entanglement entropy.
        assert!((r.discord - r.eof).abs() < 1e-6);
    }

    #[test]
    fn infinite_temperature_limit_has_no_correlations() {
        let r = correlations_at(params(3.0, 2.0), 1e12).unwrap();
        assert!(r.discord < 1e-6);
        assert_eq!(r.eof, 0.0);
    }

    #[test]
    fn squeezing_only_thermal_state_is_separable_but_axis_branch_stays_positive() {
        // At (mu=4, omega=0, T=1) the state is I/4 + w * (sigma_x x sigma_x):
        // both concurrence branches are negative, and the transverse
        // measurement extracts all correlations, so the discord minimum is
        // zero even though the computational-axis branch d1 is far from it.
        let x = thermal_xstate(params(4.0, 0.0), 1.0).unwrap();
        let two = |v: f64| 2.0 * v;
        assert!(two(x.z().abs() - (x.a() * x.d()).sqrt()) < 0.0);
        assert!(two(x.w().abs() - x.b()) < 0.0);

        let r = discord_analytic(&x);
        assert_eq!(r.concurrence, 0.0);
        assert_eq!(r.eof, 0.0);
        assert!(r.discord.abs() < 1e-12);
        assert!(r.d2.abs() < 1e-12);
        assert!((r.d1 - 0.870020725333695).abs() < 1e-12);
    }

    #[test]
    fn discord_decays_monotonically_with_temperature() {
        let mut last = f64::INFINITY;
        let mut first = None;
        for t in [1.0, 2.0, 4.0, 8.0, 16.0, 32.0] {
            let d = correlations_at(params(4.0, 4.0), t).unwrap().discord;
            assert!(d < last, "discord did not decay at T = {t}");
            first.get_or_insert(d);
            last = d;
        }
        assert!(last < first.unwrap() / 10.0);
    }
}
