//! Command-line surface: each subcommand turns one simulation into a CSV
//! dataset (stdout or `--out`) plus a plain-text summary on stderr.
//!
//! Exit codes: 0 success, 2 usage/parse error, 3 numerical invariant
//! violation (norm drift, a squeezing flag on a block state, …).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::dynamics::{
    bell_overlaps, fidelity, population_exchange_period, sample_trajectory, TimeSpec, TimeUnit,
};
use crate::entanglement::{normalized_entropy, von_neumann_entropy_bits, witness_battery};
use crate::error::Error;
use crate::fock::{FockPair, SubspaceState};
use crate::hamiltonian::{eigenstate_overlap, perturbed_state, SubspaceHamiltonian};
use crate::params::ModelParams;
use crate::quadratures::quadrature_report;

/// Largest total quantum number the spectrum command accepts.
pub const MAX_TOTAL_QUANTA: u32 = 64;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 2;
const EXIT_NUMERICAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "localmode",
    version,
    about = "Exact dynamics and entanglement diagnostics for two bilinearly \
             coupled anharmonic oscillators",
    after_help = "Times default to dimensionless phase (energy in 1/cm times \
                  time); pass --time-unit ps for laboratory picoseconds."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues and eigenvectors of a fixed-total block (CSV).
    Spectrum(CommonArgs),
    /// Fidelity |<initial|state(t)>| along a trajectory (CSV).
    Fidelity(CommonArgs),
    /// Von Neumann (bits), normalized, and linear entropy along a trajectory (CSV).
    Entropy(CommonArgs),
    /// The nine-witness battery along a trajectory (CSV).
    Witnesses(CommonArgs),
    /// Bell-like state overlaps from the fixed initial |0,1> (CSV).
    Bell(CommonArgs),
    /// Single- and two-mode quadrature variances along a trajectory (CSV).
    Quadratures(CommonArgs),
    /// First-order perturbative eigenstate report (text).
    Perturb(CommonArgs),
}

impl Command {
    fn args(&self) -> &CommonArgs {
        match self {
            Command::Spectrum(a)
            | Command::Fidelity(a)
            | Command::Entropy(a)
            | Command::Witnesses(a)
            | Command::Bell(a)
            | Command::Quadratures(a)
            | Command::Perturb(a) => a,
        }
    }
}

#[derive(Args, Debug, Default)]
struct CommonArgs {
    /// Harmonic frequency omega in 1/cm.
    #[arg(long)]
    omega: Option<f64>,
    /// Anharmonicity gamma in 1/cm.
    #[arg(long)]
    gamma: Option<f64>,
    /// Hop strength epsilon in 1/cm.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Initial state: "n,m" for |n,m>, or "amps:N:re,im;re,im;..." for an
    /// explicit amplitude list over |N,0>..|0,N>.
    #[arg(long)]
    initial: Option<String>,
    /// Trajectory end time in the chosen unit (default: 20 exchange periods;
    /// one period for bell).
    #[arg(long)]
    tmax: Option<f64>,
    /// Number of samples including both endpoints (default 2001; 401 for bell).
    #[arg(long)]
    steps: Option<usize>,
    /// "phase" (dimensionless, default) or "ps" (picoseconds).
    #[arg(long = "time-unit", value_parser = ["ps", "phase"])]
    time_unit: Option<String>,
    /// Write the dataset to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value config file (keys: omega_cm1, gamma_cm1, epsilon_cm1,
    /// initial, t_max, steps, time_unit); flags override the file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Scale parameter of the variance-sum witness (nonzero).
    #[arg(long)]
    lambda: Option<f64>,
}

#[derive(Clone, Debug)]
enum InitialState {
    Canonical(FockPair),
    Amplitudes { total: u32, amps: Vec<Complex64> },
}

impl InitialState {
    fn total(&self) -> u32 {
        match self {
            InitialState::Canonical(pair) => pair.total(),
            InitialState::Amplitudes { total, .. } => *total,
        }
    }

    fn build(&self) -> Result<SubspaceState, Error> {
        match self {
            InitialState::Canonical(pair) => Ok(SubspaceState::from_fock(*pair)),
            InitialState::Amplitudes { total, amps } => SubspaceState::new(*total, amps.clone()),
        }
    }
}

/// Fully resolved run parameters: defaults, then config file, then flags.
#[derive(Clone, Debug)]
struct RunConfig {
    params: ModelParams,
    initial: Option<InitialState>,
    t_max: Option<f64>,
    steps: Option<usize>,
    unit: TimeUnit,
    lambda: f64,
    out: Option<PathBuf>,
}

#[derive(Default)]
struct FileConfig {
    omega: Option<f64>,
    gamma: Option<f64>,
    epsilon: Option<f64>,
    initial: Option<String>,
    t_max: Option<f64>,
    steps: Option<usize>,
    time_unit: Option<String>,
}

fn usage_error(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

fn parse_file_config(path: &Path) -> Result<FileConfig, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(format!("cannot read config {}: {e}", path.display())))?;
    let mut cfg = FileConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(usage_error(format!(
                "{}:{}: expected key=value, got {line:?}",
                path.display(),
                lineno + 1
            )));
        };
        let key = key.trim();
        let value = value.trim();
        let bad_num = |e| {
            usage_error(format!(
                "{}:{}: bad number for {key}: {e}",
                path.display(),
                lineno + 1
            ))
        };
        match key {
            "omega_cm1" => cfg.omega = Some(value.parse().map_err(bad_num)?),
            "gamma_cm1" => cfg.gamma = Some(value.parse().map_err(bad_num)?),
            "epsilon_cm1" => cfg.epsilon = Some(value.parse().map_err(bad_num)?),
            "initial" => cfg.initial = Some(value.to_string()),
            "t_max" => cfg.t_max = Some(value.parse().map_err(bad_num)?),
            "steps" => {
                cfg.steps = Some(value.parse().map_err(|e| {
                    usage_error(format!(
                        "{}:{}: bad integer for steps: {e}",
                        path.display(),
                        lineno + 1
                    ))
                })?)
            }
            "time_unit" => cfg.time_unit = Some(value.to_string()),
            other => {
                return Err(usage_error(format!(
                    "{}:{}: unknown config key {other:?}",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    Ok(cfg)
}

fn parse_time_unit(s: &str) -> Result<TimeUnit, Error> {
    match s {
        "ps" => Ok(TimeUnit::Picoseconds),
        "phase" => Ok(TimeUnit::Phase),
        other => Err(usage_error(format!(
            "time unit must be \"ps\" or \"phase\", got {other:?}"
        ))),
    }
}

fn parse_initial(spec: &str) -> Result<InitialState, Error> {
    if let Some(rest) = spec.strip_prefix("amps:") {
        let Some((total_str, list)) = rest.split_once(':') else {
            return Err(usage_error(format!(
                "amplitude initial must look like amps:N:re,im;re,im;..., got {spec:?}"
            )));
        };
        let total: u32 = total_str
            .parse()
            .map_err(|e| usage_error(format!("bad total quantum number {total_str:?}: {e}")))?;
        let mut amps = Vec::new();
        for (i, pair) in list.split(';').enumerate() {
            let Some((re, im)) = pair.split_once(',') else {
                return Err(usage_error(format!(
                    "amplitude {i} must be re,im — got {pair:?}"
                )));
            };
            let re: f64 = re
                .trim()
                .parse()
                .map_err(|e| usage_error(format!("amplitude {i} real part: {e}")))?;
            let im: f64 = im
                .trim()
                .parse()
                .map_err(|e| usage_error(format!("amplitude {i} imaginary part: {e}")))?;
            amps.push(Complex64::new(re, im));
        }
        Ok(InitialState::Amplitudes { total, amps })
    } else {
        let Some((n, m)) = spec.split_once(',') else {
            return Err(usage_error(format!(
                "initial must be \"n,m\" or \"amps:N:...\", got {spec:?}"
            )));
        };
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|e| usage_error(format!("bad occupation {n:?}: {e}")))?;
        let m: u32 = m
            .trim()
            .parse()
            .map_err(|e| usage_error(format!("bad occupation {m:?}: {e}")))?;
        Ok(InitialState::Canonical(FockPair::new(n, m)))
    }
}

fn resolve_config(args: &CommonArgs) -> Result<RunConfig, Error> {
    let file = match &args.config {
        Some(path) => parse_file_config(path)?,
        None => FileConfig::default(),
    };
    let defaults = ModelParams::representative();
    let params = ModelParams::new(
        args.omega.or(file.omega).unwrap_or(defaults.omega),
        args.gamma.or(file.gamma).unwrap_or(defaults.gamma),
        args.epsilon.or(file.epsilon).unwrap_or(defaults.epsilon),
    )?;
    let initial = match args.initial.as_deref().or(file.initial.as_deref()) {
        Some(spec) => Some(parse_initial(spec)?),
        None => None,
    };
    let unit = match args.time_unit.as_deref().or(file.time_unit.as_deref()) {
        Some(s) => parse_time_unit(s)?,
        None => TimeUnit::Phase,
    };
    let lambda = args.lambda.unwrap_or(1.0);
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::BadLambda(lambda));
    }
    Ok(RunConfig {
        params,
        initial,
        t_max: args.tmax.or(file.t_max),
        steps: args.steps.or(file.steps),
        unit,
        lambda,
        out: args.out.clone(),
    })
}

impl RunConfig {
    fn require_initial(&self) -> Result<&InitialState, Error> {
        self.initial
            .as_ref()
            .ok_or_else(|| usage_error("an --initial state (or config `initial=`) is required"))
    }

    /// The sample grid: defaults span `periods` one-quantum exchange periods
    /// with `default_steps` samples, expressed in the configured unit.
    fn time_spec(&self, periods: f64, default_steps: usize) -> Result<TimeSpec, Error> {
        let rate = self.unit.radians_per_unit_energy();
        let t_max = self
            .t_max
            .unwrap_or(periods * population_exchange_period(&self.params) / rate);
        let steps = self.steps.unwrap_or(default_steps);
        TimeSpec::linspace(t_max, steps, self.unit)
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.14e}")
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| usage_error(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<(), Error> {
    let total = cfg.require_initial()?.total();
    if total > MAX_TOTAL_QUANTA {
        return Err(usage_error(format!(
            "total quantum number {total} exceeds the spectrum cap {MAX_TOTAL_QUANTA}"
        )));
    }
    let block = SubspaceHamiltonian::new(total, &cfg.params)?;
    let dim = block.dim();
    let mut csv = String::from("index,energy_cm1");
    for j in 0..dim {
        write!(csv, ",c{j}").unwrap();
    }
    csv.push('\n');
    for k in 0..dim {
        write!(csv, "{k},{}", fmt(block.energies()[k])).unwrap();
        for j in 0..dim {
            write!(csv, ",{}", fmt(block.modes()[(j, k)])).unwrap();
        }
        csv.push('\n');
    }
    emit(&cfg.out, &csv)?;
    eprintln!(
        "spectrum: N = {total}, {dim} levels from {:.6} to {:.6} 1/cm",
        block.energies()[0],
        block.energies()[dim - 1]
    );
    Ok(())
}

fn cmd_fidelity(cfg: &RunConfig) -> Result<(), Error> {
    let initial = cfg.require_initial()?.build()?;
    let block = SubspaceHamiltonian::new(initial.total_quanta(), &cfg.params)?;
    let spec = cfg.time_spec(20.0, 2001)?;
    let traj = sample_trajectory(&block, &initial, &spec)?;
    let rate = cfg.unit.radians_per_unit_energy();
    let mut csv = String::from("t,phase,fidelity\n");
    let mut min_f = f64::INFINITY;
    let mut min_t = 0.0;
    for (t, state) in traj.iter() {
        let f = fidelity(&initial, state)?;
        if f < min_f {
            min_f = f;
            min_t = t;
        }
        writeln!(csv, "{},{},{}", fmt(t), fmt(t * rate), fmt(f)).unwrap();
    }
    emit(&cfg.out, &csv)?;
    eprintln!(
        "fidelity: N = {}, min {min_f:.6} at t = {min_t:.6} {}",
        initial.total_quanta(),
        cfg.unit.label()
    );
    Ok(())
}

fn cmd_entropy(cfg: &RunConfig) -> Result<(), Error> {
    let initial = cfg.require_initial()?.build()?;
    if initial.total_quanta() == 0 {
        return Err(usage_error(
            "entropy needs a block with at least one quantum (N >= 1); \
             the N = 0 block is one-dimensional",
        ));
    }
    let block = SubspaceHamiltonian::new(initial.total_quanta(), &cfg.params)?;
    let spec = cfg.time_spec(20.0, 2001)?;
    let traj = sample_trajectory(&block, &initial, &spec)?;
    let rate = cfg.unit.radians_per_unit_energy();
    let mut csv = String::from("t,phase,S_bits,S_normalized,L\n");
    let mut peak_bits = 0.0f64;
    let mut peak_norm = 0.0f64;
    for (t, state) in traj.iter() {
        let s = von_neumann_entropy_bits(state);
        let ratio = normalized_entropy(state)?;
        let l = crate::entanglement::linear_entropy(state);
        peak_bits = peak_bits.max(s);
        peak_norm = peak_norm.max(ratio);
        writeln!(
            csv,
            "{},{},{},{},{}",
            fmt(t),
            fmt(t * rate),
            fmt(s),
            fmt(ratio),
            fmt(l)
        )
        .unwrap();
    }
    emit(&cfg.out, &csv)?;
    eprintln!(
        "entropy: N = {}, peak S = {peak_bits:.6} bits, peak S/log2(N+1) = {peak_norm:.6}",
        initial.total_quanta()
    );
    Ok(())
}

fn cmd_witnesses(cfg: &RunConfig) -> Result<(), Error> {
    let initial = cfg.require_initial()?.build()?;
    let block = SubspaceHamiltonian::new(initial.total_quanta(), &cfg.params)?;
    let spec = cfg.time_spec(20.0, 2001)?;
    let traj = sample_trajectory(&block, &initial, &spec)?;
    let rate = cfg.unit.radians_per_unit_energy();

    let names: Vec<&'static str> = witness_battery(&initial, cfg.lambda)?
        .iter()
        .map(|w| w.name)
        .collect();
    let mut csv = String::from("t,phase,S_bits");
    for name in &names {
        write!(csv, ",{name}").unwrap();
    }
    csv.push('\n');

    let mut min_values = vec![f64::INFINITY; names.len()];
    let mut fired = vec![false; names.len()];
    for (t, state) in traj.iter() {
        let battery = witness_battery(state, cfg.lambda)?;
        write!(
            csv,
            "{},{},{}",
            fmt(t),
            fmt(t * rate),
            fmt(von_neumann_entropy_bits(state))
        )
        .unwrap();
        for (i, w) in battery.iter().enumerate() {
            min_values[i] = min_values[i].min(w.value);
            fired[i] |= w.detected;
            write!(csv, ",{}", fmt(w.value)).unwrap();
        }
        csv.push('\n');
    }
    emit(&cfg.out, &csv)?;
    eprintln!(
        "witnesses: N = {}, lambda = {} (negative value => entanglement detected)",
        initial.total_quanta(),
        cfg.lambda
    );
    for (i, name) in names.iter().enumerate() {
        eprintln!(
            "  {name}: min {:.6e}, detected {}",
            min_values[i],
            if fired[i] { "yes" } else { "no" }
        );
    }
    Ok(())
}

fn cmd_bell(cfg: &RunConfig) -> Result<(), Error> {
    if cfg.initial.is_some() {
        return Err(usage_error(
            "bell always evolves the fixed initial |0,1>; drop --initial",
        ));
    }
    let initial = SubspaceState::canonical(1, 1)?;
    let block = SubspaceHamiltonian::new(1, &cfg.params)?;
    let spec = cfg.time_spec(1.0, 401)?;
    let traj = sample_trajectory(&block, &initial, &spec)?;
    let rate = cfg.unit.radians_per_unit_energy();
    let transferred = SubspaceState::canonical(1, 0)?;

    let mut csv = String::from("t,phase,overlap_plus_i,overlap_minus_i\n");
    let (mut best_plus, mut best_plus_t) = (0.0f64, 0.0);
    let (mut best_minus, mut best_minus_t) = (0.0f64, 0.0);
    let mut best_transfer = 0.0f64;
    for (t, state) in traj.iter() {
        let (plus, minus) = bell_overlaps(state)?;
        if plus > best_plus {
            best_plus = plus;
            best_plus_t = t;
        }
        if minus > best_minus {
            best_minus = minus;
            best_minus_t = t;
        }
        best_transfer = best_transfer.max(fidelity(&transferred, state)?);
        writeln!(
            csv,
            "{},{},{},{}",
            fmt(t),
            fmt(t * rate),
            fmt(plus),
            fmt(minus)
        )
        .unwrap();
    }
    emit(&cfg.out, &csv)?;
    eprintln!(
        "bell: peak |<B+|psi>| = {best_plus:.12} at t = {best_plus_t:.6} {u}, \
         peak |<B-|psi>| = {best_minus:.12} at t = {best_minus_t:.6} {u}, \
         peak transfer to |1,0> = {best_transfer:.12}",
        u = cfg.unit.label()
    );
    Ok(())
}

fn cmd_quadratures(cfg: &RunConfig) -> Result<(), Error> {
    let initial = cfg.require_initial()?.build()?;
    let block = SubspaceHamiltonian::new(initial.total_quanta(), &cfg.params)?;
    let spec = cfg.time_spec(20.0, 2001)?;
    let traj = sample_trajectory(&block, &initial, &spec)?;
    let rate = cfg.unit.radians_per_unit_energy();
    let mut csv = String::from("t,phase,varQa,varPa,varQb,varPb,varD1,varD2\n");
    let mut min_single = f64::INFINITY;
    let mut min_two = f64::INFINITY;
    let mut squeezed = false;
    for (t, state) in traj.iter() {
        let r = quadrature_report(state);
        min_single = min_single
            .min(r.var_qa)
            .min(r.var_pa)
            .min(r.var_qb)
            .min(r.var_pb);
        min_two = min_two.min(r.var_d1).min(r.var_d2);
        squeezed |= r.squeezing_single || r.squeezing_two_mode;
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{}",
            fmt(t),
            fmt(t * rate),
            fmt(r.var_qa),
            fmt(r.var_pa),
            fmt(r.var_qb),
            fmt(r.var_pb),
            fmt(r.var_d1),
            fmt(r.var_d2)
        )
        .unwrap();
    }
    emit(&cfg.out, &csv)?;
    eprintln!(
        "quadratures: N = {}, min single-mode variance {min_single:.6} (floor 0.5), \
         min two-mode variance {min_two:.6} (floor 0.25)",
        initial.total_quanta()
    );
    if squeezed {
        // Block states can never squeeze; reaching this means the numbers are wrong.
        return Err(Error::Numerical(format!(
            "squeezing flag fired on a fixed-total block state \
             (min single {min_single}, min two-mode {min_two})"
        )));
    }
    Ok(())
}

fn cmd_perturb(cfg: &RunConfig) -> Result<(), Error> {
    let initial = cfg.require_initial()?;
    let InitialState::Canonical(pair) = initial else {
        return Err(usage_error(
            "perturb describes one basis state; pass --initial n,m",
        ));
    };
    let (total, m) = (pair.total(), pair.m);
    let pert = perturbed_state(total, m, &cfg.params)?;
    let mut text = String::new();
    writeln!(
        text,
        "first-order eigenstate for |{n},{m}> (N = {total}) at omega = {}, gamma = {}, \
         epsilon = {} 1/cm",
        cfg.params.omega,
        cfg.params.gamma,
        cfg.params.epsilon,
        n = pair.n,
    )
    .unwrap();
    if !pert.valid {
        writeln!(text, "perturbation theory not applicable: valid = false").unwrap();
        writeln!(
            text,
            "reason: {}",
            pert.diagnostic.as_deref().unwrap_or("refused")
        )
        .unwrap();
        emit(&cfg.out, &text)?;
        return Ok(());
    }
    writeln!(text, "valid = true").unwrap();
    if pert.weak_coupling_warning {
        writeln!(
            text,
            "warning: gamma < 4 epsilon — the expansion parameter is not small; \
             treat these numbers qualitatively"
        )
        .unwrap();
    }
    if m >= 1 {
        writeln!(
            text,
            "admixture onto |{},{}>: f1 = {} (magnitude {})",
            pair.n + 1,
            m - 1,
            fmt(pert.lower_admixture),
            fmt(pert.lower_admixture.abs())
        )
        .unwrap();
    } else {
        writeln!(text, "no lower neighbour (m = 0): f1 = 0").unwrap();
    }
    if m < total {
        writeln!(
            text,
            "admixture onto |{},{}>: f2 = {} (magnitude {})",
            pair.n - 1,
            m + 1,
            fmt(pert.upper_admixture),
            fmt(pert.upper_admixture.abs())
        )
        .unwrap();
    } else {
        writeln!(text, "no upper neighbour (m = N): f2 = 0").unwrap();
    }
    let overlap = eigenstate_overlap(total, m, &cfg.params)?;
    writeln!(
        text,
        "overlap with the closest exact eigenvector: {}",
        fmt(overlap)
    )
    .unwrap();
    emit(&cfg.out, &text)?;
    eprintln!("perturb: N = {total}, m = {m}, overlap {overlap:.9}");
    Ok(())
}

fn dispatch(command: &Command) -> Result<(), Error> {
    let cfg = resolve_config(command.args())?;
    match command {
        Command::Spectrum(_) => cmd_spectrum(&cfg),
        Command::Fidelity(_) => cmd_fidelity(&cfg),
        Command::Entropy(_) => cmd_entropy(&cfg),
        Command::Witnesses(_) => cmd_witnesses(&cfg),
        Command::Bell(_) => cmd_bell(&cfg),
        Command::Quadratures(_) => cmd_quadratures(&cfg),
        Command::Perturb(_) => cmd_perturb(&cfg),
    }
}

/// Parse `args` (argv[0] included) and run; returns the process exit code.
pub fn run_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(()) => EXIT_OK,
        Err(e @ Error::Numerical(_)) => {
            eprintln!("fatal: {e}");
            EXIT_NUMERICAL
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_with_args(std::env::args_os())
}
