//! Command-line driver for the two-spin Otto engine library: single-point
//! reports, linear parameter sweeps, preset figure scans, and seeded
//! self-verification.
//!
//! Exit codes: `0` success, `1` verification failure, `2` invalid flags or
//! sweep specification, `3` unwritable output path.

mod fmt;
mod presets;
mod sweep;
mod verify;

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spin_otto::correlations::correlations_at;
use spin_otto::oracle::{DEFAULT_COARSE_GRID, DEFAULT_REFINE_ITERATIONS, MIN_COARSE_GRID};
use spin_otto::spin_model::energy_gaps;
use spin_otto::{populations, spectrum, thermal_xstate, SubstanceParams};

use fmt::g12;
use sweep::{evaluate_row, render_csv, run_rows, RowSpec, SweepPlan, SweepVariable};

/// Exit status for invalid flags or sweep specifications (clap uses the
/// same value for its own parse errors).
const EXIT_INVALID_SPEC: u8 = 2;
/// Exit status for unwritable output paths.
const EXIT_UNWRITABLE: u8 = 3;
/// Exit status for a failed verification run.
const EXIT_VERIFY_FAILED: u8 = 1;

enum Failure {
    Spec(String),
    Io(String),
    Verify,
}

type CliResult<T> = Result<T, Failure>;

fn spec_err<T>(message: impl Into<String>) -> CliResult<T> {
    Err(Failure::Spec(message.into()))
}

#[derive(Parser)]
#[command(
    name = "spin-otto",
    version,
    about = "Quantum Otto cycle explorer for a two-spin squeezed working substance"
)]
struct Cli {
    /// Key=value file supplying defaults for any long flag; explicit flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the working-substance energy levels at one coupling pair.
    Spectrum(SpectrumArgs),
    /// Print thermal-state populations, matrix entries, and correlations.
    Thermal(ThermalArgs),
    /// Evaluate one Otto cycle between two thermal endpoints.
    Cycle(CycleArgs),
    /// Sweep one variable across a linear grid and write a CSV file.
    Sweep(SweepArgs),
    /// Write the CSV files of a named preset scan (fig2a..fig5).
    Figure(FigureArgs),
    /// Cross-check closed forms against independent numerics (seeded).
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Squeezing strength (>= 0).
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Field strength (>= 0).
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
}

#[derive(Args)]
struct ThermalArgs {
    /// Squeezing strength (>= 0).
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Field strength (>= 0).
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// Temperature (> 0).
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
}

#[derive(Args)]
struct CycleArgs {
    /// Hot-endpoint squeezing strength (>= 0).
    #[arg(long = "mu-h", allow_negative_numbers = true)]
    mu_h: Option<f64>,
    /// Cold-endpoint squeezing strength (>= 0).
    #[arg(long = "mu-l", allow_negative_numbers = true)]
    mu_l: Option<f64>,
    /// Hot-endpoint field strength (>= 0).
    #[arg(long = "omega-h", allow_negative_numbers = true)]
    omega_h: Option<f64>,
    /// Cold-endpoint field strength (>= 0).
    #[arg(long = "omega-l", allow_negative_numbers = true)]
    omega_l: Option<f64>,
    /// Hot-bath temperature (> 0).
    #[arg(long = "t-h", allow_negative_numbers = true)]
    t_h: Option<f64>,
    /// Cold-bath temperature (> 0, below the hot-bath temperature).
    #[arg(long = "t-l", allow_negative_numbers = true)]
    t_l: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Variable to sweep; the matching knob flags must be omitted.
    #[arg(long)]
    var: Option<SweepVariable>,
    /// First grid value.
    #[arg(long, allow_negative_numbers = true)]
    from: Option<f64>,
    /// Last grid value.
    #[arg(long, allow_negative_numbers = true)]
    to: Option<f64>,
    /// Number of grid points (>= 2).
    #[arg(long)]
    points: Option<usize>,
    /// Output CSV path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; the output bytes are identical for any value.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    knobs: CycleArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Preset name: fig2a, fig2b, fig3, fig4, or fig5.
    name: String,
    /// Output directory for the CSV files (created if missing).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; the output bytes are identical for any value.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random draws per check.
    #[arg(long, value_parser = clap::value_parser!(usize))]
    n: Option<usize>,
    /// Seed for the check ensembles.
    #[arg(long)]
    seed: Option<u64>,
    /// Coarse grid resolution for the measurement scan.
    #[arg(long)]
    grid: Option<usize>,
    /// Refinement iterations for the measurement scan.
    #[arg(long)]
    refine: Option<usize>,
    /// Deliberately corrupt one comparison to prove checks can fail.
    #[arg(long = "inject-fault", hide = true, value_name = "FAULT")]
    inject_fault: Option<String>,
}

/// Long-flag names a config file may supply defaults for.
const CONFIG_KEYS: [&str; 19] = [
    "mu", "omega", "t", "mu-h", "mu-l", "omega-h", "omega-l", "t-h", "t-l", "var", "from", "to",
    "points", "out", "jobs", "n", "seed", "grid", "refine",
];

/// Defaults loaded from an optional `key=value` file. Explicit flags always
/// take precedence; config values only fill gaps.
struct Defaults {
    values: HashMap<String, String>,
}

impl Defaults {
    fn load(path: Option<&Path>) -> CliResult<Self> {
        let mut values = HashMap::new();
        if let Some(path) = path {
            let text = fs::read_to_string(path).map_err(|error| {
                Failure::Spec(format!("cannot read config file {}: {error}", path.display()))
            })?;
            for (index, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let Some((key, value)) = line.split_once('=') else {
                    return spec_err(format!("config line {} is not key=value: {raw}", index + 1));
                };
                let key = key.trim();
                if !CONFIG_KEYS.contains(&key) {
                    return spec_err(format!("unknown config key '{key}'"));
                }
                values.insert(key.to_string(), value.trim().to_string());
            }
        }
        Ok(Self { values })
    }

    fn merge_f64(&self, flag: Option<f64>, key: &str) -> CliResult<Option<f64>> {
        match (flag, self.values.get(key)) {
            (Some(value), _) => Ok(Some(value)),
            (None, None) => Ok(None),
            (None, Some(raw)) => raw.parse().map(Some).map_err(|_| {
                Failure::Spec(format!("config value for '{key}' is not a number: {raw}"))
            }),
        }
    }

    fn merge_usize(&self, flag: Option<usize>, key: &str) -> CliResult<Option<usize>> {
        match (flag, self.values.get(key)) {
            (Some(value), _) => Ok(Some(value)),
            (None, None) => Ok(None),
            (None, Some(raw)) => raw.parse().map(Some).map_err(|_| {
                Failure::Spec(format!("config value for '{key}' is not a count: {raw}"))
            }),
        }
    }

    fn merge_u64(&self, flag: Option<u64>, key: &str) -> CliResult<Option<u64>> {
        match (flag, self.values.get(key)) {
            (Some(value), _) => Ok(Some(value)),
            (None, None) => Ok(None),
            (None, Some(raw)) => raw.parse().map(Some).map_err(|_| {
                Failure::Spec(format!("config value for '{key}' is not an integer: {raw}"))
            }),
        }
    }

    fn merge_path(&self, flag: Option<PathBuf>, key: &str) -> Option<PathBuf> {
        flag.or_else(|| self.values.get(key).map(PathBuf::from))
    }

    fn merge_var(&self, flag: Option<SweepVariable>, key: &str) -> CliResult<Option<SweepVariable>> {
        match (flag, self.values.get(key)) {
            (Some(value), _) => Ok(Some(value)),
            (None, None) => Ok(None),
            (None, Some(raw)) => SweepVariable::from_str(raw, false).map(Some).map_err(|_| {
                Failure::Spec(format!("config value for '{key}' is not a sweep variable: {raw}"))
            }),
        }
    }
}

fn require<T>(value: Option<T>, flag: &str) -> CliResult<T> {
    value.ok_or_else(|| Failure::Spec(format!("missing required flag --{flag}")))
}

fn checked_coupling(value: f64, flag: &str) -> CliResult<f64> {
    sweep::check_coupling(value, flag).map_err(Failure::Spec)
}

fn checked_temperature(value: f64, flag: &str) -> CliResult<f64> {
    sweep::check_temperature(value, flag).map_err(Failure::Spec)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => return ExitCode::SUCCESS,
        Err(Failure::Spec(message)) => {
            eprintln!("error: {message}");
            EXIT_INVALID_SPEC
        }
        Err(Failure::Io(message)) => {
            eprintln!("error: {message}");
            EXIT_UNWRITABLE
        }
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> CliResult<()> {
    let defaults = Defaults::load(cli.config.as_deref())?;
    match cli.command {
        Command::Spectrum(args) => run_spectrum(args, &defaults),
        Command::Thermal(args) => run_thermal(args, &defaults),
        Command::Cycle(args) => run_cycle(args, &defaults),
        Command::Sweep(args) => run_sweep(args, &defaults),
        Command::Figure(args) => run_figure(args, &defaults),
        Command::Verify(args) => run_verify(args, &defaults),
    }
}

fn run_spectrum(args: SpectrumArgs, defaults: &Defaults) -> CliResult<()> {
    let mu = checked_coupling(require(defaults.merge_f64(args.mu, "mu")?, "mu")?, "mu")?;
    let omega =
        checked_coupling(require(defaults.merge_f64(args.omega, "omega")?, "omega")?, "omega")?;
    let params = SubstanceParams::new(mu, omega).expect("values pre-validated");
    let levels = spectrum(params);
    let energies = levels.energies();
    let gaps = energy_gaps(&levels);
    println!(
        "E1={} E2={} E3={} E4={} kappa={} gap1={} gap2={} gap3={}",
        g12(energies[0]),
        g12(energies[1]),
        g12(energies[2]),
        g12(energies[3]),
        g12(levels.kappa()),
        g12(gaps[0]),
        g12(gaps[1]),
        g12(gaps[2]),
    );
    Ok(())
}

fn run_thermal(args: ThermalArgs, defaults: &Defaults) -> CliResult<()> {
    let mu = checked_coupling(require(defaults.merge_f64(args.mu, "mu")?, "mu")?, "mu")?;
    let omega =
        checked_coupling(require(defaults.merge_f64(args.omega, "omega")?, "omega")?, "omega")?;
    let temperature = checked_temperature(require(defaults.merge_f64(args.t, "t")?, "t")?, "t")?;
    let params = SubstanceParams::new(mu, omega).expect("values pre-validated");
    let pops = populations(&spectrum(params), temperature).expect("values pre-validated");
    let state = thermal_xstate(params, temperature).expect("values pre-validated");
    let report = correlations_at(params, temperature).expect("values pre-validated");
    let probabilities = pops.probabilities();
    println!(
        "P1={} P2={} P3={} P4={} logZ={} S={} a={} b={} d={} w={} z={} S_A={} D={} C={} E={}",
        g12(probabilities[0]),
        g12(probabilities[1]),
        g12(probabilities[2]),
        g12(probabilities[3]),
        g12(pops.log_partition_function()),
        g12(spin_otto::thermal::von_neumann_entropy(&pops)),
        g12(state.a()),
        g12(state.b()),
        g12(state.d()),
        g12(state.w()),
        g12(state.z()),
        g12(spin_otto::thermal::reduced_entropy(&state)),
        g12(report.discord),
        g12(report.concurrence),
        g12(report.eof),
    );
    Ok(())
}

/// Resolves and validates the six cycle knobs shared by `cycle` and the
/// fixed part of `sweep`.
fn resolve_knobs(args: &CycleArgs, defaults: &Defaults) -> CliResult<RowSpec> {
    let mu_h = checked_coupling(require(defaults.merge_f64(args.mu_h, "mu-h")?, "mu-h")?, "mu-h")?;
    let mu_l = checked_coupling(require(defaults.merge_f64(args.mu_l, "mu-l")?, "mu-l")?, "mu-l")?;
    let omega_h = checked_coupling(
        require(defaults.merge_f64(args.omega_h, "omega-h")?, "omega-h")?,
        "omega-h",
    )?;
    let omega_l = checked_coupling(
        require(defaults.merge_f64(args.omega_l, "omega-l")?, "omega-l")?,
        "omega-l",
    )?;
    let t_h = checked_temperature(require(defaults.merge_f64(args.t_h, "t-h")?, "t-h")?, "t-h")?;
    let t_l = checked_temperature(require(defaults.merge_f64(args.t_l, "t-l")?, "t-l")?, "t-l")?;
    Ok(RowSpec { x: f64::NAN, mu_h, mu_l, omega_h, omega_l, t_h, t_l })
}

fn run_cycle(args: CycleArgs, defaults: &Defaults) -> CliResult<()> {
    let row = resolve_knobs(&args, defaults)?;
    if !(row.t_h > row.t_l) {
        return spec_err(format!(
            "--t-h ({}) must exceed --t-l ({})",
            g12(row.t_h),
            g12(row.t_l)
        ));
    }
    let evaluated = evaluate_row(&row);
    let eta = evaluated.cycle.efficiency.map(g12).unwrap_or_else(|| "n/a".to_string());
    println!(
        "W={} Q_in={} Q_out={} eta={} regime={} D_H={} D_L={} E_H={} E_L={}",
        g12(evaluated.cycle.work),
        g12(evaluated.cycle.q_in),
        g12(evaluated.cycle.q_out),
        eta,
        evaluated.cycle.regime.as_token(),
        g12(evaluated.hot.discord),
        g12(evaluated.cold.discord),
        g12(evaluated.hot.eof),
        g12(evaluated.cold.eof),
    );
    Ok(())
}

fn effective_jobs(flag: Option<usize>, defaults: &Defaults) -> CliResult<usize> {
    let jobs = defaults.merge_usize(flag, "jobs")?.unwrap_or(1);
    if jobs == 0 {
        return spec_err("--jobs must be at least 1");
    }
    Ok(jobs)
}

fn run_sweep(args: SweepArgs, defaults: &Defaults) -> CliResult<()> {
    let variable = require(defaults.merge_var(args.var, "var")?, "var")?;

    // Fixing a knob the sweep itself controls is a contradiction. Only
    // explicit command-line flags count: a config file may carry defaults
    // for other invocations, so covered config values are simply unused.
    let explicit = [
        ("mu-h", args.knobs.mu_h),
        ("mu-l", args.knobs.mu_l),
        ("omega-h", args.knobs.omega_h),
        ("omega-l", args.knobs.omega_l),
        ("t-h", args.knobs.t_h),
        ("t-l", args.knobs.t_l),
    ];
    for (flag, value) in explicit {
        if value.is_some() && variable.covered_flags().contains(&flag) {
            return spec_err(format!(
                "--{flag} conflicts with the swept variable; drop the flag or change --var"
            ));
        }
    }

    let knob = |flag_value: Option<f64>, key: &'static str| -> CliResult<Option<f64>> {
        if variable.covered_flags().contains(&key) {
            return Ok(None);
        }
        defaults.merge_f64(flag_value, key)
    };
    let plan = SweepPlan {
        variable,
        from: require(defaults.merge_f64(args.from, "from")?, "from")?,
        to: require(defaults.merge_f64(args.to, "to")?, "to")?,
        points: require(defaults.merge_usize(args.points, "points")?, "points")?,
        mu_h: knob(args.knobs.mu_h, "mu-h")?,
        mu_l: knob(args.knobs.mu_l, "mu-l")?,
        omega_h: knob(args.knobs.omega_h, "omega-h")?,
        omega_l: knob(args.knobs.omega_l, "omega-l")?,
        t_h: knob(args.knobs.t_h, "t-h")?,
        t_l: knob(args.knobs.t_l, "t-l")?,
    };
    let out = require(defaults.merge_path(args.out, "out"), "out")?;
    let jobs = effective_jobs(args.jobs, defaults)?;

    let expanded = plan.expand().map_err(Failure::Spec)?;
    for note in &expanded.dropped {
        eprintln!("sweep: {note}");
    }
    let rows = run_rows(&expanded.rows, jobs);
    write_csv(&out, &render_csv(&rows))
}

fn run_figure(args: FigureArgs, defaults: &Defaults) -> CliResult<()> {
    let Some(plans) = presets::preset_plans(&args.name) else {
        return spec_err(format!(
            "unknown figure '{}' (valid: {})",
            args.name,
            presets::PRESET_NAMES.join(", ")
        ));
    };
    let directory = defaults.merge_path(args.out, "out").unwrap_or_else(|| PathBuf::from("."));
    let jobs = effective_jobs(args.jobs, defaults)?;
    fs::create_dir_all(&directory).map_err(|error| {
        Failure::Io(format!("cannot create directory {}: {error}", directory.display()))
    })?;
    for (filename, plan) in plans {
        let expanded = plan.expand().map_err(Failure::Spec)?;
        for note in &expanded.dropped {
            eprintln!("{filename}: {note}");
        }
        let rows = run_rows(&expanded.rows, jobs);
        let path = directory.join(&filename);
        fs::write(&path, render_csv(&rows)).map_err(|error| {
            Failure::Io(format!("cannot write {}: {error}", path.display()))
        })?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn run_verify(args: VerifyArgs, defaults: &Defaults) -> CliResult<()> {
    let ensemble = defaults.merge_usize(args.n, "n")?.unwrap_or(verify::DEFAULT_ENSEMBLE);
    if ensemble == 0 {
        return spec_err("--n must be at least 1");
    }
    let seed = defaults.merge_u64(args.seed, "seed")?.unwrap_or(verify::DEFAULT_SEED);
    let grid = defaults.merge_usize(args.grid, "grid")?.unwrap_or(DEFAULT_COARSE_GRID);
    if grid < MIN_COARSE_GRID {
        return spec_err(format!("--grid must be at least {MIN_COARSE_GRID} (got {grid})"));
    }
    let refine = defaults
        .merge_usize(args.refine, "refine")?
        .unwrap_or(DEFAULT_REFINE_ITERATIONS);
    if refine == 0 {
        return spec_err("--refine must be at least 1");
    }
    let fault = match args.inject_fault.as_deref() {
        None => None,
        Some(name) => Some(verify::Fault::parse(name).map_err(Failure::Spec)?),
    };
    let options = verify::VerifyOptions { ensemble, seed, grid, refine, fault };
    if verify::run(&options) {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

/// Writes CSV contents, creating parent directories as needed; any
/// filesystem error maps to the unwritable-path exit status.
fn write_csv(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|error| {
                Failure::Io(format!("cannot create directory {}: {error}", parent.display()))
            })?;
        }
    }
    fs::write(path, contents)
        .map_err(|error| Failure::Io(format!("cannot write {}: {error}", path.display())))
}
