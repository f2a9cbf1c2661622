mod config;
mod output;
mod sweep;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nbound::bounds::{
    gaussian_upper, improved_lower, simple_lower, BoundKind, Coupling, SystemParams,
};
use nbound::verify::{run_suite, SuiteLevel, SuiteOptions};

use crate::config::FileConfig;
use crate::output::{format_float, EvalReport, Format};
use crate::sweep::{CouplingMode, SweepSpec};

/// Energy bounds for semirelativistic gravitating N-boson systems.
#[derive(Parser)]
#[command(name = "nbound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate bounds over a coupling grid and emit CSV or JSON rows.
    Sweep(SweepArgs),
    /// Evaluate a single bound at one parameter point.
    Eval(EvalArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Particle numbers, comma separated (e.g. 2,3,5).
    #[arg(long = "n-list", value_delimiter = ',')]
    n_list: Option<Vec<usize>>,

    /// Boson mass m (natural units).
    #[arg(long)]
    mass: Option<f64>,

    /// Coupling mode: raw v or rescaled c with v = c/N.
    #[arg(long)]
    mode: Option<ModeArg>,

    /// Coupling grid as start:stop:steps (inclusive endpoints).
    #[arg(long)]
    grid: Option<String>,

    /// Bound kinds to emit, comma separated from {sl, l, u}.
    #[arg(long, value_delimiter = ',')]
    kinds: Option<Vec<String>>,

    /// Output format.
    #[arg(long)]
    format: Option<FormatArg>,

    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Flat key = value config file supplying defaults for the flags above.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Preset: N = 5, m = 1, raw v on [0, 0.63], all three bounds.
    #[arg(long)]
    figure1: bool,

    /// Preset: N = 2..6, m = 1, rescaled c on [0, 1.4], all three bounds.
    #[arg(long)]
    figure2: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Particle number.
    #[arg(long)]
    n: usize,

    /// Boson mass m.
    #[arg(long, default_value_t = 1.0)]
    mass: f64,

    /// Coupling mode.
    #[arg(long, value_enum, default_value_t = ModeArg::Raw)]
    mode: ModeArg,

    /// Coupling magnitude (v or c depending on mode).
    #[arg(long)]
    coupling: f64,

    /// Bound kind: sl, l, or u.
    #[arg(long)]
    kind: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite level.
    #[arg(value_enum, default_value_t = LevelArg::Quick)]
    level: LevelArg,

    /// Test-mode negative control: perturbs g by 1e-6 so the identity
    /// check must fail.
    #[arg(long, hide = true)]
    inject_g_error: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Raw,
    Rescaled,
}

impl From<ModeArg> for CouplingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Raw => CouplingMode::Raw,
            ModeArg::Rescaled => CouplingMode::Rescaled,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// Exit statuses: 0 success, 1 domain/compute error, 2 usage error.
fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(args) => cmd_sweep(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

enum CliError {
    Usage(String),
    Compute(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode, CliError> {
    if args.figure1 && args.figure2 {
        return Err(CliError::Usage(
            "--figure1 and --figure2 are mutually exclusive".into(),
        ));
    }

    let file = match &args.config {
        Some(path) => FileConfig::load(path).map_err(CliError::Usage)?,
        None => FileConfig::default(),
    };

    // precedence: preset < config file < explicit flags
    let preset = if args.figure1 {
        Some(SweepSpec::figure1())
    } else if args.figure2 {
        Some(SweepSpec::figure2())
    } else {
        None
    };
    let base = preset.unwrap_or_default();

    let n_list = args
        .n_list
        .or(file.n_list)
        .unwrap_or(base.n_list);
    let mass = args.mass.or(file.mass).unwrap_or(base.mass);
    let mode = args
        .mode
        .map(CouplingMode::from)
        .or(file.mode)
        .unwrap_or(base.mode);
    let grid = match args.grid.or(file.grid) {
        Some(s) => sweep::parse_grid(&s).map_err(CliError::Usage)?,
        None => base.grid,
    };
    let kinds = match args.kinds.or(file.kinds) {
        Some(codes) => sweep::parse_kinds(&codes).map_err(CliError::Usage)?,
        None => base.kinds,
    };
    let format = args
        .format
        .map(|f| match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        })
        .or(file.format)
        .unwrap_or(Format::Csv);

    let spec = SweepSpec {
        n_list,
        mass,
        mode,
        grid,
        kinds,
    };
    spec.validate().map_err(CliError::Usage)?;

    let rows = sweep::run(&spec);
    let rendered = match format {
        Format::Csv => output::render_csv(&rows),
        Format::Json => output::render_json(&spec, &rows),
    };

    match args.out.or(file.out) {
        Some(path) => std::fs::write(path, rendered)?,
        None => std::io::stdout().write_all(rendered.as_bytes())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, CliError> {
    let kind = sweep::parse_kind(&args.kind).map_err(CliError::Usage)?;
    let coupling = match args.mode {
        ModeArg::Raw => Coupling::Raw(args.coupling),
        ModeArg::Rescaled => Coupling::Rescaled(args.coupling),
    };
    let params = SystemParams::new(args.n, args.mass, coupling)
        .map_err(|e| CliError::Compute(output::render_error(&e)))?;

    let report = match kind {
        BoundKind::SimpleLower => simple_lower(&params).map(|b| EvalReport::from_bound(&b)),
        BoundKind::ImprovedLower => improved_lower(&params).map(|b| EvalReport::from_bound(&b)),
        BoundKind::GaussianUpper => gaussian_upper(&params)
            .map(|g| EvalReport::from_bound(&g.bound).with_mu_star(g.mu_star())),
        _ => unreachable!("parse_kind only returns sweep kinds"),
    }
    .map_err(|e| CliError::Compute(output::render_error(&e)))?;

    println!("{}", report.to_json());
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let level = match args.level {
        LevelArg::Quick => SuiteLevel::Quick,
        LevelArg::Full => SuiteLevel::Full,
    };
    let options = SuiteOptions {
        g_perturbation: if args.inject_g_error { 1e-6 } else { 0.0 },
    };
    let outcomes = run_suite(level, &options);
    let mut first_failure = None;
    for o in &outcomes {
        println!(
            "{} {:<18} statistic={} threshold={}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            format_float(o.statistic),
            format_float(o.threshold),
        );
        if !o.passed && first_failure.is_none() {
            first_failure = Some(o.name);
        }
    }
    match first_failure {
        None => Ok(ExitCode::SUCCESS),
        Some(name) => Err(CliError::Compute(format!("first failing check: {name}"))),
    }
}
