use clap::{Args, Parser, Subcommand};
use critline_cli::{CliError, CommandKind, RunConfig};
use std::path::PathBuf;
use std::process::ExitCode;

/// Locate zeros of the Riemann zeta function on the critical line and
/// verify the argument identities that hold there.
#[derive(Parser)]
#[command(name = "critline", version, about)]
struct Cli {
    /// Output format for tabulation commands (verify always emits JSON)
    #[arg(long, global = true, default_value = "csv")]
    format: String,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Which closed-form variant to evaluate: abstract, line2 or line3
    #[arg(long, global = true, default_value = "abstract")]
    variant: String,

    /// Comma-separated decreasing offsets for the two-sided limit
    #[arg(long, global = true, value_name = "EPS,EPS,...")]
    eps_ladder: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IndexRange {
    /// First index (1-based)
    #[arg(long, default_value_t = 1)]
    from: i64,
    /// Last index, inclusive
    #[arg(long, default_value_t = 10)]
    to: i64,
}

#[derive(Args)]
struct TGrid {
    /// Grid start
    #[arg(long, default_value_t = 10.0)]
    t_from: f64,
    /// Grid end, inclusive (defaults to t-from: a single point)
    #[arg(long)]
    t_to: Option<f64>,
    /// Grid spacing
    #[arg(long, default_value_t = 0.1)]
    t_step: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate theta(t), its asymptotic form and their difference
    Theta(TGrid),
    /// Tabulate Gram points with the spacing check and classification
    Gram(IndexRange),
    /// Locate zeros and evaluate the argument identities at each
    Zeros(IndexRange),
    /// Run a verifier and emit its JSON report (exit 1 on failures)
    Verify {
        /// Which conjecture: exact, arg or membership
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        range: IndexRange,
        #[command(flatten)]
        grid: TGrid,
    },
    /// Export plot-ready series
    PlotData {
        /// Which series: sn, zeros or eps
        #[arg(long)]
        curves: String,
        /// First curve index (zero index for eps)
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n_from: i64,
        /// Last curve index, inclusive
        #[arg(long, default_value_t = 5)]
        n_to: i64,
        #[command(flatten)]
        grid: TGrid,
    },
}

fn lower(cli: Cli) -> Result<RunConfig, CliError> {
    let command = match &cli.command {
        Command::Theta(_) => CommandKind::Theta,
        Command::Gram(_) => CommandKind::Gram,
        Command::Zeros(_) => CommandKind::Zeros,
        Command::Verify { kind, .. } => match kind.as_str() {
            "exact" => CommandKind::VerifyExact,
            "arg" => CommandKind::VerifyArg,
            "membership" => CommandKind::VerifyMembership,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown verify kind '{other}' (expected exact, arg or membership)"
                )))
            }
        },
        Command::PlotData { curves, .. } => match curves.as_str() {
            "sn" => CommandKind::CurvesSn,
            "zeros" => CommandKind::CurvesZeros,
            "eps" => CommandKind::CurvesEps,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown curves kind '{other}' (expected sn, zeros or eps)"
                )))
            }
        },
    };

    let mut cfg = RunConfig::new(command);
    cfg.format = cli.format.parse().map_err(CliError::Usage)?;
    cfg.variant = cli.variant.parse().map_err(CliError::Usage)?;
    cfg.output_path = cli.output;

    if let Some(raw) = &cli.eps_ladder {
        let ladder: Result<Vec<f64>, _> = raw.split(',').map(|s| s.trim().parse::<f64>()).collect();
        cfg.eps_ladder =
            ladder.map_err(|e| CliError::Usage(format!("bad eps ladder '{raw}': {e}")))?;
    }

    if let Ok(raw) = std::env::var("CRITLINE_MAX_T") {
        cfg.max_t = raw
            .parse::<f64>()
            .map_err(|e| CliError::Usage(format!("bad CRITLINE_MAX_T '{raw}': {e}")))?;
    }

    let apply_grid = |cfg: &mut RunConfig, grid: &TGrid| {
        cfg.t_lo = grid.t_from;
        cfg.t_hi = grid.t_to.unwrap_or(grid.t_from);
        cfg.t_step = grid.t_step;
    };
    match &cli.command {
        Command::Theta(grid) => apply_grid(&mut cfg, grid),
        Command::Gram(range) | Command::Zeros(range) => {
            cfg.n_lo = range.from;
            cfg.n_hi = range.to;
        }
        Command::Verify { range, grid, .. } => {
            cfg.n_lo = range.from;
            cfg.n_hi = range.to;
            apply_grid(&mut cfg, grid);
        }
        Command::PlotData { n_from, n_to, grid, .. } => {
            cfg.n_lo = *n_from;
            cfg.n_hi = *n_to;
            apply_grid(&mut cfg, grid);
        }
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = lower(cli).and_then(|cfg| critline_cli::run(&cfg));
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("critline: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
