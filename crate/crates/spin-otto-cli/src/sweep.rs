//! Sweep construction, evaluation, and CSV rendering.
//!
//! A sweep moves exactly one variable across a linear grid while the
//! remaining cycle knobs stay fixed. Each surviving grid point is evaluated
//! to a full cycle energy balance plus correlation reports for both thermal
//! endpoints, and the results are rendered as one CSV row per point in
//! ascending grid order.

use clap::ValueEnum;
use rayon::prelude::*;
use spin_otto::correlations::{correlations_at, CorrelationReport};
use spin_otto::{evaluate_cycle, CycleResult, CycleSpec, SubstanceParams, ThermalPoint};

use crate::fmt::g12;

/// The quantity a sweep varies; every other knob must be fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum SweepVariable {
    /// Squeezing strength shared by both endpoints (mu_H = mu_L = x).
    MuCommon,
    /// Field strength shared by both endpoints (omega_H = omega_L = x).
    OmegaCommon,
    /// Hot-endpoint squeezing strength.
    MuHot,
    /// Cold-endpoint squeezing strength.
    MuCold,
    /// Hot-endpoint field strength.
    OmegaHot,
    /// Cold-endpoint field strength.
    OmegaCold,
    /// Hot-bath temperature.
    THot,
    /// Cold-bath temperature.
    TCold,
}

impl SweepVariable {
    /// Command-line knobs whose value the sweep supplies; fixing any of
    /// them alongside the sweep is a contradiction.
    pub fn covered_flags(self) -> &'static [&'static str] {
        match self {
            Self::MuCommon => &["mu-h", "mu-l"],
            Self::OmegaCommon => &["omega-h", "omega-l"],
            Self::MuHot => &["mu-h"],
            Self::MuCold => &["mu-l"],
            Self::OmegaHot => &["omega-h"],
            Self::OmegaCold => &["omega-l"],
            Self::THot => &["t-h"],
            Self::TCold => &["t-l"],
        }
    }

    fn is_temperature(self) -> bool {
        matches!(self, Self::THot | Self::TCold)
    }
}

/// Fully resolved knobs for a single grid point.
#[derive(Debug, Clone, Copy)]
pub struct RowSpec {
    pub x: f64,
    pub mu_h: f64,
    pub mu_l: f64,
    pub omega_h: f64,
    pub omega_l: f64,
    pub t_h: f64,
    pub t_l: f64,
}

/// A validated sweep request: which variable moves, over what grid, and the
/// fixed values of every knob the sweep does not cover.
#[derive(Debug, Clone)]
pub struct SweepPlan {
    pub variable: SweepVariable,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    pub mu_h: Option<f64>,
    pub mu_l: Option<f64>,
    pub omega_h: Option<f64>,
    pub omega_l: Option<f64>,
    pub t_h: Option<f64>,
    pub t_l: Option<f64>,
}

/// Grid expansion result: the rows to evaluate plus one human-readable note
/// per grid point that was skipped for violating the bath-temperature order.
#[derive(Debug)]
pub struct ExpandedSweep {
    pub rows: Vec<RowSpec>,
    pub dropped: Vec<String>,
}

/// Validates a coupling-strength value (finite, non-negative).
pub(crate) fn check_coupling(value: f64, flag: &str) -> Result<f64, String> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(format!("--{flag} must be finite and non-negative (got {value})"))
    }
}

/// Validates a temperature value (finite, strictly positive).
pub(crate) fn check_temperature(value: f64, flag: &str) -> Result<f64, String> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(format!("--{flag} must be finite and positive (got {value})"))
    }
}

impl SweepPlan {
    /// Validates the plan and expands it into concrete grid rows.
    ///
    /// Grid points whose resolved temperatures violate `t_h > t_l` are
    /// skipped with a note; it is an error for the grid to lose every row
    /// that way, for the grid itself to be malformed, or for any fixed knob
    /// to be missing or out of range.
    pub fn expand(&self) -> Result<ExpandedSweep, String> {
        if self.points < 2 {
            return Err(format!("--points must be at least 2 (got {})", self.points));
        }
        if !self.from.is_finite() || !self.to.is_finite() {
            return Err("--from and --to must be finite".to_string());
        }
        if self.from > self.to {
            return Err(format!(
                "--from ({}) must not exceed --to ({})",
                g12(self.from),
                g12(self.to)
            ));
        }
        // `to >= from`, so only the lower grid edge needs a range check.
        if self.variable.is_temperature() {
            check_temperature(self.from, "from")?;
        } else {
            check_coupling(self.from, "from")?;
        }

        let covered = self.variable.covered_flags();
        let fixed = |value: Option<f64>, flag: &'static str, temp: bool| -> Result<f64, String> {
            if covered.contains(&flag) {
                debug_assert!(value.is_none(), "swept knob --{flag} must not carry a fixed value");
                // Placeholder; every row overwrites it with the grid value.
                return Ok(f64::NAN);
            }
            let value = value.ok_or_else(|| format!("missing required flag --{flag}"))?;
            if temp {
                check_temperature(value, flag)
            } else {
                check_coupling(value, flag)
            }
        };
        let mu_h = fixed(self.mu_h, "mu-h", false)?;
        let mu_l = fixed(self.mu_l, "mu-l", false)?;
        let omega_h = fixed(self.omega_h, "omega-h", false)?;
        let omega_l = fixed(self.omega_l, "omega-l", false)?;
        let t_h = fixed(self.t_h, "t-h", true)?;
        let t_l = fixed(self.t_l, "t-l", true)?;

        let mut rows = Vec::with_capacity(self.points);
        let mut dropped = Vec::new();
        for i in 0..self.points {
            let x = self.from + (self.to - self.from) * i as f64 / (self.points - 1) as f64;
            let mut row = RowSpec { x, mu_h, mu_l, omega_h, omega_l, t_h, t_l };
            match self.variable {
                SweepVariable::MuCommon => {
                    row.mu_h = x;
                    row.mu_l = x;
                }
                SweepVariable::OmegaCommon => {
                    row.omega_h = x;
                    row.omega_l = x;
                }
                SweepVariable::MuHot => row.mu_h = x,
                SweepVariable::MuCold => row.mu_l = x,
                SweepVariable::OmegaHot => row.omega_h = x,
                SweepVariable::OmegaCold => row.omega_l = x,
                SweepVariable::THot => row.t_h = x,
                SweepVariable::TCold => row.t_l = x,
            }
            if !(row.t_h > row.t_l) {
                dropped.push(format!(
                    "dropped row x={} (t_h={} does not exceed t_l={})",
                    g12(x),
                    g12(row.t_h),
                    g12(row.t_l)
                ));
                continue;
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err("no sweep rows satisfy t_h > t_l".to_string());
        }
        Ok(ExpandedSweep { rows, dropped })
    }
}

/// One evaluated grid point: cycle energetics plus endpoint correlations.
pub struct SweepRow {
    pub x: f64,
    pub cycle: CycleResult,
    pub hot: CorrelationReport,
    pub cold: CorrelationReport,
}

/// Evaluates a single fully resolved grid point.
///
/// The knobs are validated before rows are built, so the library
/// constructors cannot fail here.
pub fn evaluate_row(row: &RowSpec) -> SweepRow {
    let hot_params = SubstanceParams::new(row.mu_h, row.omega_h).expect("knobs pre-validated");
    let cold_params = SubstanceParams::new(row.mu_l, row.omega_l).expect("knobs pre-validated");
    let hot = ThermalPoint::new(hot_params, row.t_h).expect("temperatures pre-validated");
    let cold = ThermalPoint::new(cold_params, row.t_l).expect("temperatures pre-validated");
    let spec = CycleSpec::new(hot, cold).expect("rows violating the temperature order are dropped");
    SweepRow {
        x: row.x,
        cycle: evaluate_cycle(&spec),
        hot: correlations_at(hot_params, row.t_h).expect("temperatures pre-validated"),
        cold: correlations_at(cold_params, row.t_l).expect("temperatures pre-validated"),
    }
}

/// Evaluates every row, optionally on a bounded thread pool.
///
/// The parallel path maps over an indexed slice and collects in input
/// order, so the output is byte-identical for any thread count.
pub fn run_rows(rows: &[RowSpec], jobs: usize) -> Vec<SweepRow> {
    if jobs <= 1 {
        rows.iter().map(evaluate_row).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build the evaluation thread pool");
        pool.install(|| rows.par_iter().map(evaluate_row).collect())
    }
}

pub const CSV_HEADER: &str = "x,W,Q_in,Q_out,eta,regime,D_H,D_L,E_H,E_L";

/// Renders evaluated rows as CSV: twelve-significant-digit numbers, `.` as
/// the decimal separator, `\n` line endings, no quoting, and an empty `eta`
/// field whenever the cycle produced no positive work.
pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let eta = row.cycle.efficiency.map(g12).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            g12(row.x),
            g12(row.cycle.work),
            g12(row.cycle.q_in),
            g12(row.cycle.q_out),
            eta,
            row.cycle.regime.as_token(),
            g12(row.hot.discord),
            g12(row.cold.discord),
            g12(row.hot.eof),
            g12(row.cold.eof),
        ));
    }
    out
}
