//! Execution layer behind the `critline` binary: a flat [`RunConfig`]
//! describing one tabulation or verification run, the [`run`] function
//! that executes it, and the plot-data exporter.
//!
//! Output is byte-deterministic: CSV floats are printed with 15
//! significant digits (`{:.14e}`, lowercase exponent), rows end with a
//! single LF, and JSON field order follows the row structs. Verify
//! commands always emit the JSON report regardless of the format flag.

use critline::{
    classify_gram, s_arg_at_zero, s_n_formula, theta, theta_approx, verify_arg_conjecture_with,
    verify_exact_equation_with, verify_membership, ConjectureReport, ScanConfig, Variant,
    ZeroScanner, ZerosError, DEFAULT_EPS_LADDER, DEFAULT_MAX_T,
};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use thiserror::Error;

/// What a run does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    /// Tabulate theta, theta_approx and their difference on a t grid.
    Theta,
    /// Tabulate Gram points n_lo..=n_hi with classification.
    Gram,
    /// Locate zeros n_lo..=n_hi with the argument identities evaluated.
    Zeros,
    /// Exact-equation verifier over zeros n_lo..=n_hi.
    VerifyExact,
    /// Argument-formula verifier over zeros n_lo..=n_hi.
    VerifyArg,
    /// Membership verifier over the t grid.
    VerifyMembership,
    /// Closed-form curves S_n(t) sampled on a half-step-offset grid.
    CurvesSn,
    /// Zero abscissas inside the t window, with S_n evaluated there.
    CurvesZeros,
    /// Offset-ladder study at zeros n_lo..=n_hi, one row per rung.
    CurvesEps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

/// Everything one invocation needs. Build with [`RunConfig::new`] and
/// override fields; `run` validates before doing any work.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub n_lo: i64,
    pub n_hi: i64,
    pub t_lo: f64,
    pub t_hi: f64,
    pub t_step: f64,
    pub variant: Variant,
    pub format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub eps_ladder: Vec<f64>,
    pub max_t: f64,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        Self {
            command,
            n_lo: 1,
            n_hi: 1,
            t_lo: 10.0,
            t_hi: 100.0,
            t_step: 0.1,
            variant: Variant::AbstractPlus,
            format: OutputFormat::Csv,
            output_path: None,
            eps_ladder: DEFAULT_EPS_LADDER.to_vec(),
            max_t: DEFAULT_MAX_T,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code for this error: 2 for usage, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<ZerosError> for CliError {
    fn from(e: ZerosError) -> Self {
        match e {
            ZerosError::InvalidConfig(msg) => CliError::Usage(msg.to_string()),
            other => CliError::Numerical(other.to_string()),
        }
    }
}

/// One sample of a closed-form curve (or the matching value at a zero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveSample {
    pub n: i64,
    pub t: f64,
    pub s_n: f64,
}

/// Plot-ready series: the S_n(t) curves on the grid, plus the zeros in
/// the window with S_n evaluated at each abscissa. The grid is offset
/// by half a step so samples never collide with Gram points or zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveExport {
    pub samples: Vec<CurveSample>,
    pub zeros: Vec<CurveSample>,
}

/// Sample S_n(t) for n in [n_lo, n_hi] over [t_lo, t_hi] and collect
/// the zeros inside the window. `max_t` caps the zero scan. Requires
/// t_lo above 2 pi, where the Gram index approximation is monotone.
pub fn export_curves(
    n_lo: i64,
    n_hi: i64,
    t_lo: f64,
    t_hi: f64,
    t_step: f64,
    variant: Variant,
    max_t: f64,
) -> Result<CurveExport, ZerosError> {
    assert!(n_lo <= n_hi && t_lo > 2.0 * std::f64::consts::PI && t_lo <= t_hi && t_step > 0.0);
    let grid = offset_grid(t_lo, t_hi, t_step);
    let mut samples = Vec::with_capacity(grid.len() * (n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        for &t in &grid {
            samples.push(CurveSample { n, t, s_n: s_n_formula(n, t, variant) });
        }
    }
    let mut scanner = ZeroScanner::new(ScanConfig { max_t, variant, ..ScanConfig::default() })?;
    let zeros = scanner
        .zeros_up_to(t_hi)?
        .iter()
        .filter(|r| r.t_n >= t_lo)
        .map(|r| CurveSample { n: r.n as i64, t: r.t_n, s_n: s_n_formula(r.n as i64, r.t_n, variant) })
        .collect();
    Ok(CurveExport { samples, zeros })
}

/// Execute one run and write its output. Returns the process exit
/// code: 0, or 1 when a verifier reports failures.
pub fn run(cfg: &RunConfig) -> Result<i32, CliError> {
    validate(cfg)?;
    let (text, code) = match cfg.command {
        CommandKind::Theta => (render_theta(cfg)?, 0),
        CommandKind::Gram => (render_gram(cfg)?, 0),
        CommandKind::Zeros => (render_zeros(cfg)?, 0),
        CommandKind::VerifyExact | CommandKind::VerifyArg | CommandKind::VerifyMembership => {
            let report = run_verifier(cfg)?;
            let code = if report.passed_all() { 0 } else { 1 };
            (to_json(&report)?, code)
        }
        CommandKind::CurvesSn | CommandKind::CurvesZeros => (render_curves(cfg)?, 0),
        CommandKind::CurvesEps => (render_eps_study(cfg)?, 0),
    };
    write_output(cfg, &text)?;
    Ok(code)
}

fn validate(cfg: &RunConfig) -> Result<(), CliError> {
    let usage = |msg: &str| Err(CliError::Usage(msg.to_string()));
    if !(cfg.max_t.is_finite() && cfg.max_t >= 20.0) {
        return usage("max_t must be finite and >= 20");
    }
    if cfg.eps_ladder.len() < 2
        || !cfg.eps_ladder.iter().all(|e| e.is_finite() && *e > 0.0)
        || !cfg.eps_ladder.windows(2).all(|w| w[0] > w[1])
        || cfg.eps_ladder[0] > 0.015
    {
        return usage("eps ladder must be >= 2 strictly decreasing offsets in (0, 0.015]");
    }
    let needs_n = matches!(
        cfg.command,
        CommandKind::Gram
            | CommandKind::Zeros
            | CommandKind::VerifyExact
            | CommandKind::VerifyArg
            | CommandKind::CurvesEps
    );
    if needs_n {
        if cfg.n_lo < 1 || cfg.n_lo > cfg.n_hi {
            return usage("need 1 <= from <= to");
        }
        if cfg.n_hi - cfg.n_lo >= 1_000_000 {
            return usage("index range too large");
        }
    }
    let needs_grid = matches!(
        cfg.command,
        CommandKind::Theta
            | CommandKind::VerifyMembership
            | CommandKind::CurvesSn
            | CommandKind::CurvesZeros
    );
    if needs_grid {
        if !(cfg.t_lo.is_finite() && cfg.t_lo > 0.0) {
            return usage("t-from must be finite and > 0");
        }
        if !(cfg.t_hi.is_finite() && cfg.t_hi >= cfg.t_lo) {
            return usage("t-to must be finite and >= t-from");
        }
        if cfg.t_hi > cfg.t_lo && !(cfg.t_step > 0.0 && cfg.t_step.is_finite()) {
            return usage("t-step must be finite and > 0");
        }
        if (cfg.t_hi - cfg.t_lo) / cfg.t_step > 2e6 {
            return usage("t grid too large");
        }
    }
    if matches!(cfg.command, CommandKind::CurvesSn | CommandKind::CurvesZeros) {
        if cfg.n_lo > cfg.n_hi {
            return usage("need n-from <= n-to");
        }
        if cfg.t_lo <= 2.0 * std::f64::consts::PI {
            return usage("t-from must exceed 2 pi for curve export");
        }
        if cfg.t_hi > cfg.max_t {
            return usage("t-to exceeds the scan cap (CRITLINE_MAX_T)");
        }
    }
    if cfg.command == CommandKind::VerifyMembership && cfg.t_hi > cfg.max_t {
        return usage("t-to exceeds the scan cap (CRITLINE_MAX_T)");
    }
    Ok(())
}

fn scan_config(cfg: &RunConfig) -> ScanConfig {
    ScanConfig { max_t: cfg.max_t, eps_ladder: cfg.eps_ladder.clone(), variant: cfg.variant }
}

#[derive(Serialize)]
struct ThetaRow {
    t: f64,
    theta: f64,
    theta_approx: f64,
    diff: f64,
}

fn render_theta(cfg: &RunConfig) -> Result<String, CliError> {
    let rows: Vec<ThetaRow> = inclusive_grid(cfg.t_lo, cfg.t_hi, cfg.t_step)
        .into_iter()
        .map(|t| {
            let exact = theta(t);
            let approx = theta_approx(t);
            ThetaRow { t, theta: exact, theta_approx: approx, diff: exact - approx }
        })
        .collect();
    match cfg.format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => Ok(to_csv(
            "t,theta,theta_approx,diff",
            rows.iter().map(|r| {
                format!("{},{},{},{}", sig15(r.t), sig15(r.theta), sig15(r.theta_approx), sig15(r.diff))
            }),
        )),
    }
}

#[derive(Serialize)]
struct GramRow {
    n: u32,
    exact: f64,
    approx: f64,
    delta: f64,
    is_bad: bool,
}

fn render_gram(cfg: &RunConfig) -> Result<String, CliError> {
    let mut rows = Vec::new();
    for n in cfg.n_lo..=cfg.n_hi {
        let rec = classify_gram(n as u32)
            .map_err(|e| CliError::Numerical(format!("gram point {n}: {e}")))?;
        rows.push(GramRow {
            n: rec.n,
            exact: rec.exact,
            approx: rec.approx,
            delta: rec.delta,
            is_bad: rec.is_bad,
        });
    }
    match cfg.format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => Ok(to_csv(
            "n,exact,approx,delta,is_bad",
            rows.iter().map(|r| {
                format!("{},{},{},{},{}", r.n, sig15(r.exact), sig15(r.approx), sig15(r.delta), r.is_bad)
            }),
        )),
    }
}

#[derive(Serialize)]
struct ZeroRow {
    n: u32,
    t_n: f64,
    theta: f64,
    #[serde(rename = "S")]
    s: f64,
    #[serde(rename = "S_n")]
    s_n: f64,
    residual: f64,
    variant: &'static str,
    pass: bool,
}

fn render_zeros(cfg: &RunConfig) -> Result<String, CliError> {
    let mut scanner = ZeroScanner::new(scan_config(cfg))?;
    let mut rows = Vec::new();
    for n in cfg.n_lo..=cfg.n_hi {
        let r = scanner.zero(n as u32)?;
        rows.push(ZeroRow {
            n: r.n,
            t_n: r.t_n,
            theta: r.theta_at,
            s: r.s_at,
            s_n: r.s_n_formula,
            residual: r.exact_residual,
            variant: r.variant_used.as_str(),
            pass: r.conjecture2_pass,
        });
    }
    match cfg.format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => Ok(to_csv(
            "n,t_n,theta,S,S_n,residual,variant,pass",
            rows.iter().map(|r| {
                format!(
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    sig15(r.t_n),
                    sig15(r.theta),
                    sig15(r.s),
                    sig15(r.s_n),
                    sig15(r.residual),
                    r.variant,
                    r.pass
                )
            }),
        )),
    }
}

fn run_verifier(cfg: &RunConfig) -> Result<ConjectureReport, CliError> {
    let report = match cfg.command {
        CommandKind::VerifyExact => {
            verify_exact_equation_with(scan_config(cfg), cfg.n_lo as u32, cfg.n_hi as u32)?
        }
        CommandKind::VerifyArg => {
            verify_arg_conjecture_with(scan_config(cfg), cfg.n_lo as u32, cfg.n_hi as u32)?
        }
        CommandKind::VerifyMembership => {
            let samples = inclusive_grid(cfg.t_lo, cfg.t_hi, cfg.t_step);
            verify_membership(&samples)?
        }
        _ => unreachable!("not a verifier command"),
    };
    Ok(report)
}

fn render_curves(cfg: &RunConfig) -> Result<String, CliError> {
    let export = export_curves(
        cfg.n_lo, cfg.n_hi, cfg.t_lo, cfg.t_hi, cfg.t_step, cfg.variant, cfg.max_t,
    )?;
    let rows = match cfg.command {
        CommandKind::CurvesSn => export.samples,
        _ => export.zeros,
    };
    match cfg.format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => Ok(to_csv(
            "n,t,s_n",
            rows.iter().map(|r| format!("{},{},{}", r.n, sig15(r.t), sig15(r.s_n))),
        )),
    }
}

#[derive(Serialize)]
struct EpsRow {
    n: u32,
    eps: f64,
    s_plus: f64,
    s_minus: f64,
    half_sum: f64,
    half_diff: f64,
}

fn render_eps_study(cfg: &RunConfig) -> Result<String, CliError> {
    let mut scanner = ZeroScanner::new(scan_config(cfg))?;
    let mut rows = Vec::new();
    for n in cfg.n_lo..=cfg.n_hi {
        let t_n = scanner.zero(n as u32)?.t_n;
        let limit = s_arg_at_zero(t_n, &cfg.eps_ladder)
            .map_err(|e| CliError::Numerical(format!("zero {n}: {e}")))?;
        for rung in &limit.rungs {
            rows.push(EpsRow {
                n: n as u32,
                eps: rung.eps,
                s_plus: rung.s_plus,
                s_minus: rung.s_minus,
                half_sum: rung.half_sum,
                half_diff: rung.half_diff,
            });
        }
    }
    match cfg.format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => Ok(to_csv(
            "n,eps,s_plus,s_minus,half_sum,half_diff",
            rows.iter().map(|r| {
                format!(
                    "{},{},{},{},{},{}",
                    r.n,
                    sig15(r.eps),
                    sig15(r.s_plus),
                    sig15(r.s_minus),
                    sig15(r.half_sum),
                    sig15(r.half_diff)
                )
            }),
        )),
    }
}

/// Inclusive grid t_lo, t_lo + step, ..., up through t_hi (with a small
/// slack so accumulated rounding cannot drop the endpoint).
fn inclusive_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    if hi <= lo {
        return vec![lo];
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    (0..count).map(|j| lo + step * j as f64).collect()
}

/// Half-step-offset grid: t_lo + (j + 1/2) step, staying within t_hi.
fn offset_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let mut grid = Vec::new();
    let mut j = 0u64;
    loop {
        let t = lo + (j as f64 + 0.5) * step;
        if t > hi + 1e-12 {
            return grid;
        }
        grid.push(t);
        j += 1;
    }
}

/// 15 significant digits, lowercase exponent: the CSV float format.
pub fn sig15(x: f64) -> String {
    format!("{x:.14e}")
}

fn to_csv<I: Iterator<Item = String>>(header: &str, rows: I) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Numerical(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn write_output(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output_path {
        Some(path) => std::fs::write(path, text.as_bytes())?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
