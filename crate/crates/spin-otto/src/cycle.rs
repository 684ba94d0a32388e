//! Otto-cycle thermodynamics: stage heats, net work, efficiency, and regime
//! classification from the two thermal endpoints.
//!
//! The cycle alternates two isochoric strokes (populations relax at fixed
//! levels) with two adiabatic strokes (levels move at fixed populations), so
//! its energy balance is fully determined by the hot and cold endpoint
//! states. Populations pair across the adiabats by level index, which is
//! also adiabatic-continuation order because the sorted levels never cross
//! for non-negative couplings.

use crate::error::{Error, Result};
use crate::spin_model::spectrum;
pub use crate::thermal::ThermalPoint as BathEndpoint;

/// Default margin for the strict inequalities in [`classify_regime`].
pub const DEFAULT_REGIME_TOLERANCE: f64 = 1e-12;

/// Hot and cold endpoints of one cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleSpec {
    hot: BathEndpoint,
    cold: BathEndpoint,
}

impl CycleSpec {
    /// Validates `hot.temperature() > cold.temperature()`.
    pub fn new(hot: BathEndpoint, cold: BathEndpoint) -> Result<Self> {
        if !(hot.temperature() > cold.temperature()) {
            return Err(Error::TemperatureOrder {
                hot: hot.temperature(),
                cold: cold.temperature(),
            });
        }
        Ok(Self { hot, cold })
    }

    pub fn hot(&self) -> &BathEndpoint {
        &self.hot
    }

    pub fn cold(&self) -> &BathEndpoint {
        &self.cold
    }
}

/// Heat-flow pattern of an evaluated cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `Q_in > -Q_out > 0`: the machine absorbs hot heat, rejects part of it
    /// cold, and delivers the difference as work.
    PositiveWork,
    /// No classifiable flow beyond tolerance (marginal or degenerate cases).
    NoOperation,
    /// `Q_in > Q_out > 0`: heat would enter at both stages.
    SecondLawExcludedA,
    /// `Q_out > -Q_in > 0`: net heat would flow from cold to hot.
    SecondLawExcludedB,
}

impl Regime {
    /// Short token used in CSV output and reports.
    pub fn as_token(&self) -> &'static str {
        match self {
            Regime::PositiveWork => "pw",
            Regime::NoOperation => "none",
            Regime::SecondLawExcludedA => "viol-a",
            Regime::SecondLawExcludedB => "viol-b",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_token())
    }
}

/// Energy balance of one evaluated cycle.
///
/// `work == q_in + q_out` by construction (the same summation produces all
/// three numbers), and `efficiency` is present exactly when the regime is
/// [`Regime::PositiveWork`], where it equals `work / q_in`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleResult {
    pub q_in: f64,
    pub q_out: f64,
    pub work: f64,
    pub efficiency: Option<f64>,
    pub regime: Regime,
}

/// Heat absorbed by the working substance from the bath it touches while its
/// level populations relax from `from` to `to` at fixed level energies:
/// `sum_n levels[n] * (to[n] - from[n])`.
///
/// Exposed separately so callers can form either traversal direction of a
/// cycle; running both strokes with `from`/`to` exchanged negates each heat
/// exactly (IEEE subtraction is antisymmetric), hence also the net work.
pub fn stage_heat(levels: &[f64; 4], from: &[f64; 4], to: &[f64; 4]) -> f64 {
    let mut q = 0.0;
    for n in 0..4 {
        q += levels[n] * (to[n] - from[n]);
    }
    q
}

/// Evaluate one cycle: hot-stage heat intake, cold-stage heat outflow
/// (negative when released), net work, efficiency when operating as an
/// engine, and the regime classification at [`DEFAULT_REGIME_TOLERANCE`].
pub fn evaluate_cycle(spec: &CycleSpec) -> CycleResult {
    let hot_levels = *spectrum(spec.hot().params()).energies();
    let cold_levels = *spectrum(spec.cold().params()).energies();
    let p_hot = *spec.hot().populations().probabilities();
    let p_cold = *spec.cold().populations().probabilities();

    let q_in = stage_heat(&hot_levels, &p_cold, &p_hot);
    let q_out = stage_heat(&cold_levels, &p_hot, &p_cold);
    let work = q_in + q_out;
    let regime = classify_regime(q_in, q_out, DEFAULT_REGIME_TOLERANCE);
    let efficiency = (regime == Regime::PositiveWork).then(|| work / q_in);
    CycleResult {
        q_in,
        q_out,
        work,
        efficiency,
        regime,
    }
}

/// Carnot bound `1 - T_cold / T_hot` for the cycle's bath pair.
pub fn carnot_efficiency(spec: &CycleSpec) -> f64 {
    1.0 - spec.cold().temperature() / spec.hot().temperature()
}

/// Classify the heat-flow pattern with strict inequalities at margin `tol`:
/// positive work needs `q_in > -q_out > 0`, the two excluded patterns are
/// `q_in > q_out > 0` and `q_out > -q_in > 0`, and everything else (including
/// every marginal case within tolerance) is [`Regime::NoOperation`]. The
/// three positive classes are mutually exclusive for any `tol >= 0`.
pub fn classify_regime(q_in: f64, q_out: f64, tol: f64) -> Regime {
    debug_assert!(q_in.is_finite() && q_out.is_finite() && tol >= 0.0);
    if q_in + q_out > tol && -q_out > tol {
        Regime::PositiveWork
    } else if q_in - q_out > tol && q_out > tol {
        Regime::SecondLawExcludedA
    } else if q_in + q_out > tol && -q_in > tol {
        Regime::SecondLawExcludedB
    } else {
        Regime::NoOperation
    }
}
