//! Thermodynamics of a quantum Otto engine whose working substance is a pair
//! of spin-1/2 particles with an axial squeezing interaction in a transverse
//! field, `H = mu * Sx^2 + omega * Sz`.
//!
//! The crate provides, in closed form: the spectrum of the working substance
//! ([`spin_model`]), its Gibbs states as two-qubit X states ([`thermal`]),
//! the heats, work, efficiency, and operating regime of a four-stroke Otto
//! cycle between two such states ([`cycle`]), and the quantum correlations —
//! entanglement of formation and quantum discord — carried by the thermal
//! states ([`correlations`]). The [`oracle`] module re-derives all of it
//! numerically (dense diagonalization, matrix exponentials, direct
//! minimization over measurements) so the analytic routes can be verified
//! independently.
//!
//! ```
//! use spin_otto::{evaluate_cycle, CycleSpec, Regime, SubstanceParams, ThermalPoint};
//!
//! let hot = ThermalPoint::new(SubstanceParams::new(0.0, 4.0)?, 8.0)?;
//! let cold = ThermalPoint::new(SubstanceParams::new(0.0, 1.0)?, 1.0)?;
//! let result = evaluate_cycle(&CycleSpec::new(hot, cold)?);
//!
//! assert_eq!(result.regime, Regime::PositiveWork);
//! assert!((result.efficiency.unwrap() - 0.75).abs() < 1e-12);
//! # Ok::<(), spin_otto::Error>(())
//! ```

pub mod correlations;
pub mod cycle;
mod error;
pub mod oracle;
pub mod spin_model;
pub mod thermal;

pub use correlations::{correlations_at, CorrelationReport};
pub use cycle::{
    carnot_efficiency, classify_regime, evaluate_cycle, CycleResult, CycleSpec, Regime,
};
pub use error::{Error, Result};
pub use spin_model::{spectrum, Spectrum, SubstanceParams};
pub use thermal::{populations, thermal_xstate, Populations, ThermalPoint, XState};
