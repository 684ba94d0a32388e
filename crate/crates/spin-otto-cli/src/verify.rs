//! Self-verification over seeded random ensembles.
//!
//! Every closed-form quantity the library exposes is recomputed through an
//! independent numerical route and the worst observed deviation is reported
//! per check:
//!
//! * closed-form spectrum vs. a dense Jacobi eigensolve,
//! * closed-form thermal state vs. its spectral construction,
//! * closed-form thermal state vs. a scaled-and-squared matrix exponential,
//! * closed-form discord vs. a brute-force measurement scan (which must
//!   also never beat either analytic branch by more than jitter).
//!
//! The run is fully determined by its seed, so a reported failure can be
//! replayed exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spin_otto::correlations::discord_analytic;
use spin_otto::oracle::{
    build_hamiltonian, discord_bruteforce, gibbs_matrix_exponential, jacobi_eigensolve,
    thermal_state_direct, DenseMatrix4,
};
use spin_otto::{spectrum, thermal_xstate, SubstanceParams};

use crate::fmt::g12;

pub const DEFAULT_ENSEMBLE: usize = 200;
pub const DEFAULT_SEED: u64 = 42;

/// Deliberate defects that can be injected into the verification
/// comparisons to prove the harness detects disagreement. Test-only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Negate the transverse analytic discord branch inside the comparison.
    TransverseBranchSign,
}

impl Fault {
    pub fn parse(name: &str) -> Result<Self, String> {
        match name {
            "d2-sign" => Ok(Self::TransverseBranchSign),
            other => Err(format!("unknown fault '{other}' (valid: d2-sign)")),
        }
    }
}

pub struct VerifyOptions {
    /// Draws per check.
    pub ensemble: usize,
    pub seed: u64,
    /// Coarse grid resolution for the brute-force discord scan.
    pub grid: usize,
    /// Refinement iterations for the brute-force discord scan.
    pub refine: usize,
    pub fault: Option<Fault>,
}

/// Couplings are drawn uniformly from this range for every check.
const COUPLING_RANGE: (f64, f64) = (0.0, 12.0);

fn draw_params(rng: &mut ChaCha8Rng) -> SubstanceParams {
    let mu = rng.gen_range(COUPLING_RANGE.0..=COUPLING_RANGE.1);
    let omega = rng.gen_range(COUPLING_RANGE.0..=COUPLING_RANGE.1);
    SubstanceParams::new(mu, omega).expect("draws are within range")
}

fn log_uniform(rng: &mut ChaCha8Rng, low: f64, high: f64) -> f64 {
    (rng.gen_range(low.ln()..=high.ln())).exp()
}

struct CheckReport {
    name: &'static str,
    deviation: f64,
    tolerance: f64,
    /// Extra (deviation, tolerance) pair for the discord branch bound.
    overshoot: Option<(f64, f64)>,
}

impl CheckReport {
    fn passed(&self) -> bool {
        let main_ok = self.deviation <= self.tolerance;
        let extra_ok = self
            .overshoot
            .map(|(value, tolerance)| value <= tolerance)
            .unwrap_or(true);
        main_ok && extra_ok
    }

    fn print(&self) {
        let mut line = format!(
            "check {}: max deviation {} (tolerance {})",
            self.name,
            g12(self.deviation),
            g12(self.tolerance)
        );
        if let Some((value, tolerance)) = self.overshoot {
            line.push_str(&format!(
                ", max branch overshoot {} (tolerance {})",
                g12(value),
                g12(tolerance)
            ));
        }
        line.push_str(if self.passed() { " ok" } else { " FAILED" });
        println!("{line}");
    }
}

/// Runs every check, prints one report line per check plus a summary, and
/// returns whether all checks passed.
pub fn run(opts: &VerifyOptions) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut reports = Vec::new();

    // Closed-form spectrum vs. dense Jacobi eigensolve.
    let mut deviation = 0.0f64;
    for _ in 0..opts.ensemble {
        let params = draw_params(&mut rng);
        let closed = spectrum(params);
        let numeric = jacobi_eigensolve(&build_hamiltonian(params));
        for level in 0..4 {
            deviation = deviation.max((closed.energies()[level] - numeric.eigenvalues[level]).abs());
        }
    }
    reports.push(CheckReport {
        name: "spectrum-jacobi",
        deviation,
        tolerance: 1e-10,
        overshoot: None,
    });

    // Closed-form thermal state vs. population-weighted spectral sum.
    let mut deviation = 0.0f64;
    for _ in 0..opts.ensemble {
        let params = draw_params(&mut rng);
        let temperature = log_uniform(&mut rng, 0.05, 100.0);
        let closed = DenseMatrix4::from_xstate(&thermal_xstate(params, temperature).expect("valid draw"));
        let direct = thermal_state_direct(params, temperature).expect("valid draw");
        for row in 0..4 {
            for col in 0..4 {
                deviation = deviation.max((closed.get(row, col) - direct.get(row, col)).abs());
            }
        }
    }
    reports.push(CheckReport {
        name: "thermal-direct",
        deviation,
        tolerance: 1e-10,
        overshoot: None,
    });

    // Closed-form thermal state vs. scaled-and-squared matrix exponential.
    let mut deviation = 0.0f64;
    for _ in 0..opts.ensemble {
        let params = draw_params(&mut rng);
        let temperature = log_uniform(&mut rng, 0.05, 100.0);
        let closed = DenseMatrix4::from_xstate(&thermal_xstate(params, temperature).expect("valid draw"));
        let exponential = gibbs_matrix_exponential(params, temperature).expect("valid draw");
        for row in 0..4 {
            for col in 0..4 {
                deviation = deviation.max((closed.get(row, col) - exponential.get(row, col)).abs());
            }
        }
    }
    reports.push(CheckReport {
        name: "thermal-exponential",
        deviation,
        tolerance: 1e-8,
        overshoot: None,
    });

    // Closed-form discord vs. brute-force measurement scan. The scan must
    // agree with min(d1, d2) and must not beat either branch by more than
    // refinement jitter.
    let mut deviation = 0.0f64;
    let mut overshoot = 0.0f64;
    for _ in 0..opts.ensemble {
        let params = draw_params(&mut rng);
        let temperature = log_uniform(&mut rng, 0.2, 20.0);
        let state = thermal_xstate(params, temperature).expect("valid draw");
        let report = discord_analytic(&state);
        let brute = discord_bruteforce(&state, opts.grid, opts.refine);
        let d2 = match opts.fault {
            Some(Fault::TransverseBranchSign) => -report.d2,
            None => report.d2,
        };
        deviation = deviation.max((brute - report.d1.min(d2)).abs());
        overshoot = overshoot.max((brute - report.d1).max(brute - d2));
    }
    reports.push(CheckReport {
        name: "discord-scan",
        deviation,
        tolerance: 2e-4,
        overshoot: Some((overshoot, 1e-9)),
    });

    let mut all_ok = true;
    for report in &reports {
        report.print();
        all_ok &= report.passed();
    }
    if all_ok {
        println!(
            "verify: all checks passed (n={}, seed={}, grid={}, refine={})",
            opts.ensemble, opts.seed, opts.grid, opts.refine
        );
    } else {
        println!("verify: FAILED");
    }
    all_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_options() -> VerifyOptions {
        VerifyOptions {
            ensemble: 10,
            seed: 11,
            grid: 64,
            refine: 20,
            fault: None,
        }
    }

    #[test]
    fn a_small_clean_run_passes() {
        assert!(run(&quick_options()));
    }

    #[test]
    fn an_injected_branch_sign_fault_is_caught() {
        let mut options = quick_options();
        options.fault = Some(Fault::TransverseBranchSign);
        assert!(!run(&options));
    }

    #[test]
    fn fault_names_parse() {
        assert_eq!(Fault::parse("d2-sign"), Ok(Fault::TransverseBranchSign));
        assert!(Fault::parse("nonsense").is_err());
    }
}
