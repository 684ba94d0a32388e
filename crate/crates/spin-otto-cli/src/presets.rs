//! Named sweep presets.
//!
//! Each preset reproduces one of the engine's reference scans and expands
//! to one CSV file per curve. File names embed the curve's fixed field
//! value so a five-curve preset writes five files into the output
//! directory.

use crate::fmt::g12;
use crate::sweep::{SweepPlan, SweepVariable};

/// Field values for the low-field curve families.
const LOW_FIELDS: [f64; 5] = [0.0, 0.5, 1.0, 1.5, 2.0];
/// Field values for the strong-field curve family.
const HIGH_FIELDS: [f64; 5] = [7.0, 8.0, 9.0, 10.0, 11.0];

pub const PRESET_NAMES: [&str; 5] = ["fig2a", "fig2b", "fig3", "fig4", "fig5"];

/// Returns the (file name, sweep plan) list for a preset, or `None` when
/// the name is unknown.
pub fn preset_plans(name: &str) -> Option<Vec<(String, SweepPlan)>> {
    match name {
        // Common squeezing sweep at fixed fields and temperatures.
        "fig2a" => Some(vec![(
            "fig2a.csv".to_string(),
            SweepPlan {
                variable: SweepVariable::MuCommon,
                from: 0.0,
                to: 6.0,
                points: 201,
                mu_h: None,
                mu_l: None,
                omega_h: Some(4.0),
                omega_l: Some(1.0),
                t_h: Some(4.0),
                t_l: Some(1.0),
            },
        )]),
        // Common field sweep at fixed squeezing and temperatures.
        "fig2b" => Some(vec![(
            "fig2b.csv".to_string(),
            SweepPlan {
                variable: SweepVariable::OmegaCommon,
                from: 0.0,
                to: 3.0,
                points: 201,
                mu_h: Some(4.0),
                mu_l: Some(1.0),
                omega_h: None,
                omega_l: None,
                t_h: Some(4.0),
                t_l: Some(1.0),
            },
        )]),
        // Hot-bath temperature sweep, one curve per common field value.
        "fig3" => Some(
            LOW_FIELDS
                .iter()
                .map(|&omega| {
                    (
                        format!("fig3_omega{}.csv", g12(omega)),
                        SweepPlan {
                            variable: SweepVariable::THot,
                            from: 1.0,
                            to: 10.0,
                            points: 181,
                            mu_h: Some(4.0),
                            mu_l: Some(1.0),
                            omega_h: Some(omega),
                            omega_l: Some(omega),
                            t_h: None,
                            t_l: Some(1.0),
                        },
                    )
                })
                .collect(),
        ),
        // Hot-endpoint squeezing sweep, one curve per common field value.
        "fig4" => Some(
            LOW_FIELDS
                .iter()
                .map(|&omega| {
                    (
                        format!("fig4_omega{}.csv", g12(omega)),
                        SweepPlan {
                            variable: SweepVariable::MuHot,
                            from: 1.0,
                            to: 12.0,
                            points: 221,
                            mu_h: None,
                            mu_l: Some(1.0),
                            omega_h: Some(omega),
                            omega_l: Some(omega),
                            t_h: Some(4.0),
                            t_l: Some(1.0),
                        },
                    )
                })
                .collect(),
        ),
        // Cold-endpoint squeezing sweep into the beyond-hot regime, one
        // curve per strong common field value.
        "fig5" => Some(
            HIGH_FIELDS
                .iter()
                .map(|&omega| {
                    (
                        format!("fig5_omega{}.csv", g12(omega)),
                        SweepPlan {
                            variable: SweepVariable::MuCold,
                            from: 10.0,
                            to: 60.0,
                            points: 201,
                            mu_h: Some(10.0),
                            mu_l: None,
                            omega_h: Some(omega),
                            omega_l: Some(omega),
                            t_h: Some(4.0),
                            t_l: Some(1.0),
                        },
                    )
                })
                .collect(),
        ),
        _ => None,
    }
}
