//! Command-line front end.
//!
//! Exit codes: `0` success (including partial success of `measure`), `1`
//! malformed input, `2` a computation that cannot produce its result.
//! JSON output carries full-precision numbers; CSV output formats numbers
//! with `--precision` decimal places.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::glmfit::{self, FitResult, ReferenceLevel, RegressionDataset};
use crate::measures::{self, EffectScale, MeasureValue, RiskPair, TwoByTwoTable};
use crate::switchmodel::{self, SwitchModel, SwitchPatternType};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "relrisk", version, about = "Relative-risk effect measures")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Decimal places for CSV output.
    #[arg(long, global = true, default_value_t = 6)]
    pub precision: usize,
    /// Seed for stochastic subcommands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Point estimates (and Wald intervals from counts) on several scales.
    Measure(MeasureArgs),
    /// Predict the treated risk from a baseline risk and a measure value.
    Transport(TransportArgs),
    /// Simulate a switch-pattern cohort and a randomized 2x2 table.
    Simulate(SimulateArgs),
    /// Every measure across baseline risks for one switch pattern.
    Sweep(SweepArgs),
    /// Log-binomial regression from individual-level CSV.
    Fit(FitArgs),
    /// Read 1 - RR or 1 - SR as a response-type prevalence.
    Interpret(InterpretArgs),
}

#[derive(Debug, Args)]
pub struct RiskInput {
    /// 2x2 table as inline JSON with keys a1_y1, a1_y0, a0_y1, a0_y0.
    #[arg(long, conflicts_with_all = ["table_file", "p0", "p1"])]
    pub table: Option<String>,
    /// Path to a 2x2 table JSON file.
    #[arg(long, conflicts_with_all = ["p0", "p1"])]
    pub table_file: Option<PathBuf>,
    /// Risk without treatment.
    #[arg(long, requires = "p1", allow_negative_numbers = true)]
    pub p0: Option<f64>,
    /// Risk under treatment.
    #[arg(long, requires = "p0", allow_negative_numbers = true)]
    pub p1: Option<f64>,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub input: RiskInput,
    /// Comma-separated scales: rr, sr, rd, or, rrr, rsr, switch, grrr.
    #[arg(long, value_delimiter = ',', default_value = "rr,sr,rd,or,rrr,rsr,switch,grrr")]
    pub scales: Vec<String>,
    /// Confidence level for Wald intervals.
    #[arg(long, default_value_t = 0.95)]
    pub level: f64,
}

#[derive(Debug, Args)]
pub struct TransportArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub p0: f64,
    /// Scale of the value: rr, sr, rd, or, rrr, rsr, switch-rr, switch-sr, grrr.
    #[arg(long)]
    pub scale: String,
    #[arg(long, allow_negative_numbers = true)]
    pub value: f64,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long, allow_negative_numbers = true)]
    pub q: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub r: f64,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub treat_probability: f64,
    /// Also write the randomized individuals as CSV (columns a,y).
    #[arg(long)]
    pub rows: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long, allow_negative_numbers = true)]
    pub q: f64,
    /// Comma-separated baseline risks, each in [0, 1).
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    pub r: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LinkChoice {
    Auto,
    Log,
    Complement,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Individual-level CSV: a, y, optional weight, covariates.
    #[arg(long)]
    pub csv: PathBuf,
    #[arg(long, value_enum, default_value_t = LinkChoice::Auto)]
    pub link: LinkChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Benefit,
    Harm,
}

#[derive(Debug, Args)]
pub struct InterpretArgs {
    #[command(flatten)]
    pub input: RiskInput,
    #[arg(long, value_enum)]
    pub direction: Direction,
}

/// A scalar in a tabular report.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Null,
}

impl Cell {
    fn opt(v: Option<f64>) -> Self {
        v.map_or(Cell::Null, Cell::Num)
    }

    fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(v) => json!(v),
            Cell::Int(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Null => Value::Null,
        }
    }

    fn to_csv(&self, precision: usize) -> String {
        match self {
            Cell::Num(v) => format!("{v:.precision$}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }
}

type Record = Vec<(String, Cell)>;

fn record<const N: usize>(fields: [(&str, Cell); N]) -> Record {
    fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Output of one invocation: records rendered as JSON or CSV, plus an exit
/// code and an optional diagnostic for stderr.
#[derive(Debug, Clone)]
pub struct Report {
    /// Render a single record as a JSON object rather than an array.
    single: bool,
    records: Vec<Record>,
    code: i32,
    diagnostic: Option<String>,
}

impl Report {
    fn one(rec: Record) -> Self {
        Self {
            single: true,
            records: vec![rec],
            code: EXIT_OK,
            diagnostic: None,
        }
    }

    fn many(records: Vec<Record>) -> Self {
        Self {
            single: false,
            records,
            code: EXIT_OK,
            diagnostic: None,
        }
    }

    fn failing(mut self, code: i32, diagnostic: String) -> Self {
        self.code = code;
        self.diagnostic = Some(diagnostic);
        self
    }

    pub fn code(&self) -> i32 {
        self.code
    }

    pub fn to_json(&self) -> Value {
        let objs: Vec<Value> = self
            .records
            .iter()
            .map(|rec| {
                Value::Object(
                    rec.iter()
                        .map(|(k, v)| (k.clone(), v.to_json()))
                        .collect::<Map<_, _>>(),
                )
            })
            .collect();
        if self.single {
            objs.into_iter().next().unwrap_or(Value::Null)
        } else {
            Value::Array(objs)
        }
    }

    pub fn write_csv<W: Write>(&self, out: W, precision: usize) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if let Some(first) = self.records.first() {
            w.write_record(first.iter().map(|(k, _)| k.as_str()))?;
        }
        for rec in &self.records {
            w.write_record(rec.iter().map(|(_, v)| v.to_csv(precision)))?;
        }
        w.flush()?;
        Ok(())
    }
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    let report = match execute(&cli) {
        Ok(report) => report,
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    if let Some(diag) = &report.diagnostic {
        let _ = writeln!(stderr, "{diag}");
    }
    if let Err(e) = emit(&cli, &report, stdout) {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_INPUT;
    }
    report.code
}

fn emit(cli: &Cli, report: &Report, stdout: &mut dyn Write) -> io::Result<()> {
    match &cli.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            render(cli, report, &mut file)?;
            file.flush()
        }
        None => render(cli, report, stdout),
    }
}

fn render(cli: &Cli, report: &Report, out: &mut dyn Write) -> io::Result<()> {
    match cli.output {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report.to_json())?;
            writeln!(out)
        }
        OutputFormat::Csv => report
            .write_csv(out, cli.precision)
            .map_err(|e| io::Error::other(e.to_string())),
    }
}

fn execute(cli: &Cli) -> Result<Report, InputError> {
    match &cli.command {
        Command::Measure(args) => cmd_measure(args),
        Command::Transport(args) => cmd_transport(args),
        Command::Simulate(args) => {
            let seed = cli
                .seed
                .ok_or_else(|| InputError("simulate requires --seed".into()))?;
            cmd_simulate(args, seed)
        }
        Command::Sweep(args) => cmd_sweep(args),
        Command::Fit(args) => cmd_fit(args),
        Command::Interpret(args) => cmd_interpret(args),
    }
}

enum Input {
    Table(TwoByTwoTable),
    Risks(RiskPair),
}

fn read_input(input: &RiskInput) -> Result<Input, InputError> {
    let table = match (&input.table, &input.table_file) {
        (Some(text), _) => Some(serde_json::from_str::<TwoByTwoTable>(text)?),
        (None, Some(path)) => Some(serde_json::from_reader(File::open(path)?)?),
        (None, None) => None,
    };
    if let Some(t) = table {
        return Ok(Input::Table(t));
    }
    match (input.p0, input.p1) {
        (Some(p0), Some(p1)) => Ok(Input::Risks(RiskPair::new(p0, p1)?)),
        _ => Err(InputError(
            "provide --table, --table-file, or both --p0 and --p1".into(),
        )),
    }
}

fn input_risks(input: &Input) -> Result<RiskPair, Error> {
    match input {
        Input::Table(t) => measures::estimate_risks(t),
        Input::Risks(rp) => Ok(*rp),
    }
}

fn input_fields(input: &Input, rp: Option<RiskPair>) -> Record {
    let mut rec = record([
        ("p0", Cell::opt(rp.map(|r| r.p0()))),
        ("p1", Cell::opt(rp.map(|r| r.p1()))),
    ]);
    if let Input::Table(t) = input {
        rec.extend(record([
            ("a1_y1", Cell::Int(t.a1_y1)),
            ("a1_y0", Cell::Int(t.a1_y0)),
            ("a0_y1", Cell::Int(t.a0_y1)),
            ("a0_y0", Cell::Int(t.a0_y0)),
        ]));
    }
    rec
}

/// Scale names for `measure`; `switch` reports whichever variant applies.
fn parse_scales(names: &[String]) -> Result<Vec<EffectScale>, InputError> {
    names
        .iter()
        .map(|n| match n.trim() {
            "switch-rr" | "switch-sr" => Err(InputError(format!(
                "use `switch` with measure; `{n}` is for transport"
            ))),
            other => other.parse::<EffectScale>().map_err(InputError),
        })
        .collect()
}

fn cmd_measure(args: &MeasureArgs) -> Result<Report, InputError> {
    let input = read_input(&args.input)?;
    let scales = parse_scales(&args.scales)?;
    if scales.is_empty() {
        return Err(InputError("no scales requested".into()));
    }
    let risks = input_risks(&input);
    let rp = risks.as_ref().ok().copied();
    let mut records = Vec::new();
    let mut computed = 0;
    for scale in scales {
        let point = risks.clone().and_then(|rp| measures::compute(rp, scale));
        let (value, selected, reason) = match &point {
            Ok(m) => {
                computed += 1;
                let selected = match m.scale {
                    EffectScale::SwitchSelected(v) => Cell::text(v.name()),
                    _ => Cell::Null,
                };
                (Cell::Num(m.value), selected, Cell::Null)
            }
            Err(e) => (Cell::Null, Cell::Null, Cell::text(e.kind())),
        };
        let ci = match &input {
            Input::Table(t)
                if matches!(
                    scale,
                    EffectScale::RiskRatio | EffectScale::SurvivalRatio | EffectScale::OddsRatio
                ) =>
            {
                Some(measures::wald_ci(t, scale, args.level))
            }
            _ => None,
        };
        let (low, high, ci_reason) = match &ci {
            Some(Ok(ci)) => (Cell::Num(ci.low), Cell::Num(ci.high), Cell::Null),
            Some(Err(e)) => (Cell::Null, Cell::Null, Cell::text(e.kind())),
            None => (Cell::Null, Cell::Null, Cell::Null),
        };
        let mut rec = record([
            ("scale", Cell::text(scale.name())),
            ("value", value),
            ("selected", selected),
            ("reason", reason),
            ("ci_low", low),
            ("ci_high", high),
            ("ci_level", if ci.is_some() { Cell::Num(args.level) } else { Cell::Null }),
            ("ci_reason", ci_reason),
        ]);
        rec.extend(input_fields(&input, rp));
        records.push(rec);
    }
    let report = Report::many(records);
    if computed == 0 {
        let why = match &risks {
            Err(e) => e.to_string(),
            Ok(_) => "no requested scale is defined for these risks".to_string(),
        };
        return Ok(report.failing(EXIT_COMPUTE, format!("error: {why}")));
    }
    Ok(report)
}

fn cmd_transport(args: &TransportArgs) -> Result<Report, InputError> {
    let scale: EffectScale = args.scale.parse().map_err(InputError)?;
    let m = MeasureValue::new(scale, args.value)?;
    let base = record([
        ("p0", Cell::Num(args.p0)),
        ("scale", Cell::text(args.scale.trim().to_ascii_lowercase())),
        ("value", Cell::Num(args.value)),
    ]);
    let with = |mut rec: Record, extra: Record| {
        rec.extend(extra);
        rec
    };
    match measures::apply_measure(args.p0, m) {
        Ok(p1) => Ok(Report::one(with(
            base,
            record([("p1", Cell::Num(p1)), ("reason", Cell::Null), ("implied", Cell::Null)]),
        ))),
        Err(Error::InvalidProbability { .. }) => {
            Err(InputError(format!("p0 = {} is outside [0, 1]", args.p0)))
        }
        Err(e) => {
            let implied = match e {
                Error::NotClosed { implied } => Cell::Num(implied),
                _ => Cell::Null,
            };
            let report = Report::one(with(
                base,
                record([
                    ("p1", Cell::Null),
                    ("reason", Cell::text(e.kind())),
                    ("implied", implied),
                ]),
            ));
            Ok(report.failing(EXIT_COMPUTE, format!("{}: {e}", e.kind())))
        }
    }
}

fn parse_pattern(name: &str) -> Result<SwitchPatternType, InputError> {
    name.parse().map_err(InputError)
}

/// Expands a 2x2 table into individual rows `a,y`.
pub fn write_rows_csv(path: &Path, table: &TwoByTwoTable) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "a,y")?;
    for (line, n) in [
        ("1,1", table.a1_y1),
        ("1,0", table.a1_y0),
        ("0,1", table.a0_y1),
        ("0,0", table.a0_y0),
    ] {
        for _ in 0..n {
            writeln!(w, "{line}")?;
        }
    }
    w.flush()
}

fn cmd_simulate(args: &SimulateArgs, seed: u64) -> Result<Report, InputError> {
    let pattern = parse_pattern(&args.pattern)?;
    let model = SwitchModel::new(pattern, args.q, args.r)?;
    if args.n == 0 {
        return Err(InputError("--n must be positive".into()));
    }
    if !(args.treat_probability > 0.0 && args.treat_probability < 1.0) {
        return Err(InputError(format!(
            "--treat-probability {} must lie strictly between 0 and 1",
            args.treat_probability
        )));
    }
    let cohort = switchmodel::simulate_cohort(&model, args.n, seed)?;
    let table = switchmodel::observed_table(&cohort, args.treat_probability, seed)?;
    if let Some(path) = &args.rows {
        write_rows_csv(path, &table)?;
    }
    let exact = switchmodel::exact_risks(&model);
    let empirical = cohort.counts.marginal_risks()?;
    let estimated = measures::estimate_risks(&table).ok();
    let c = cohort.counts;
    Ok(Report::one(record([
        ("pattern", Cell::text(pattern.name())),
        ("q", Cell::Num(args.q)),
        ("r", Cell::Num(args.r)),
        ("n", Cell::Int(args.n)),
        ("seed", Cell::Int(seed)),
        ("treat_probability", Cell::Num(args.treat_probability)),
        ("n_doomed", Cell::Int(c.n_doomed)),
        ("n_causal", Cell::Int(c.n_causal)),
        ("n_preventive", Cell::Int(c.n_preventive)),
        ("n_immune", Cell::Int(c.n_immune)),
        ("a1_y1", Cell::Int(table.a1_y1)),
        ("a1_y0", Cell::Int(table.a1_y0)),
        ("a0_y1", Cell::Int(table.a0_y1)),
        ("a0_y0", Cell::Int(table.a0_y0)),
        ("exact_p0", Cell::Num(exact.p0())),
        ("exact_p1", Cell::Num(exact.p1())),
        ("cohort_p0", Cell::Num(empirical.p0())),
        ("cohort_p1", Cell::Num(empirical.p1())),
        ("estimated_p0", Cell::opt(estimated.map(|r| r.p0()))),
        ("estimated_p1", Cell::opt(estimated.map(|r| r.p1()))),
    ])))
}

fn cmd_sweep(args: &SweepArgs) -> Result<Report, InputError> {
    let pattern = parse_pattern(&args.pattern)?;
    let table = switchmodel::stability_sweep(pattern, args.q, &args.r)?;
    let records = table
        .rows
        .iter()
        .map(|row| {
            let cell = |v: &crate::error::Result<f64>| Cell::opt(v.as_ref().ok().copied());
            record([
                ("r", Cell::Num(row.r)),
                ("p0", Cell::Num(row.p0)),
                ("p1", Cell::Num(row.p1)),
                ("rr", cell(&row.rr)),
                ("sr", cell(&row.sr)),
                ("rd", Cell::Num(row.rd)),
                ("or", cell(&row.or)),
                ("grrr", cell(&row.grrr)),
                ("stable_scale_value", cell(&row.stable_scale_value)),
            ])
        })
        .collect();
    Ok(Report::many(records))
}

fn effect_label(level: ReferenceLevel) -> &'static str {
    match level {
        ReferenceLevel::Outcome => "adjusted RR",
        ReferenceLevel::Complement => "adjusted SR",
    }
}

fn fit_records(fit: &FitResult, selected_by: &str) -> Vec<Record> {
    fit.coefficient_names
        .iter()
        .zip(fit.coefficients.iter().zip(&fit.std_errors))
        .map(|(name, (&b, &se))| {
            let exposure = name == "a";
            record([
                ("term", Cell::text(name.clone())),
                ("estimate", Cell::Num(b)),
                ("std_error", Cell::Num(se)),
                ("exp_estimate", Cell::Num(b.exp())),
                (
                    "effect",
                    if exposure {
                        Cell::text(effect_label(fit.reference_level))
                    } else {
                        Cell::Null
                    },
                ),
                ("reference_level", Cell::text(fit.reference_level.name())),
                ("selected_by", Cell::text(selected_by)),
                ("converged", Cell::Bool(fit.converged)),
                ("iterations", Cell::Int(fit.iterations as u64)),
                ("loglik", Cell::Num(fit.loglik)),
                ("max_fitted_probability", Cell::Num(fit.max_fitted_probability)),
            ])
        })
        .collect()
}

fn cmd_fit(args: &FitArgs) -> Result<Report, InputError> {
    let file = File::open(&args.csv)?;
    let data = RegressionDataset::from_csv(file)?;
    let (level, selected_by) = match args.link {
        LinkChoice::Auto => (glmfit::select_reference_level(&data)?, "auto"),
        LinkChoice::Log => (ReferenceLevel::Outcome, "user"),
        LinkChoice::Complement => (ReferenceLevel::Complement, "user"),
    };
    match glmfit::fit_log_binomial(&data, level) {
        Ok(fit) => Ok(Report::many(fit_records(&fit, selected_by))),
        Err(Error::NotConverged(fit)) => {
            let msg = format!(
                "NotConverged: no convergence after {} iterations (loglik {})",
                fit.iterations, fit.loglik
            );
            Ok(Report::many(fit_records(&fit, selected_by)).failing(EXIT_COMPUTE, msg))
        }
        Err(e @ (Error::InvalidDataset(_) | Error::EmptyMargin(_))) => Err(InputError(e.to_string())),
        Err(e) => {
            let rec = record([
                ("reference_level", Cell::text(level.name())),
                ("selected_by", Cell::text(selected_by)),
                ("reason", Cell::text(e.kind())),
            ]);
            Ok(Report::one(rec).failing(EXIT_COMPUTE, format!("{}: {e}", e.kind())))
        }
    }
}

pub const PREVENTED_TEXT: &str =
    "proportion prevented among those who would get the outcome if untreated";
pub const HARMED_TEXT: &str = "proportion harmed among those who would survive untreated";
pub const NO_CAUSATION_CAVEAT: &str =
    "assumes monotonicity: treatment causes the outcome in no individual";
pub const NO_PREVENTION_CAVEAT: &str =
    "assumes monotonicity: treatment prevents the outcome in no individual";

fn cmd_interpret(args: &InterpretArgs) -> Result<Report, InputError> {
    let input = read_input(&args.input)?;
    let rp = input_risks(&input)?;
    let (name, measure, text, caveat, contradicts) = match args.direction {
        Direction::Benefit => (
            "benefit",
            "1 - RR",
            PREVENTED_TEXT,
            NO_CAUSATION_CAVEAT,
            rp.p1() > rp.p0(),
        ),
        Direction::Harm => (
            "harm",
            "1 - SR",
            HARMED_TEXT,
            NO_PREVENTION_CAVEAT,
            rp.p1() < rp.p0(),
        ),
    };
    let mut rec = record([("direction", Cell::text(name)), ("measure", Cell::text(measure))]);
    rec.extend(input_fields(&input, Some(rp)));
    if contradicts {
        rec.extend(record([
            ("value", Cell::Null),
            ("reason", Cell::text("DirectionContradiction")),
            ("interpretation", Cell::Null),
            ("caveat", Cell::text(caveat)),
        ]));
        let msg = format!(
            "DirectionContradiction: crude risks ({} untreated, {} treated) contradict --direction {name}",
            rp.p0(),
            rp.p1()
        );
        return Ok(Report::one(rec).failing(EXIT_COMPUTE, msg));
    }
    let value = match args.direction {
        Direction::Benefit => measures::relative_risk_reduction(rp),
        Direction::Harm => measures::relative_survival_reduction(rp),
    };
    match value {
        Ok(m) => {
            rec.extend(record([
                ("value", Cell::Num(m.value)),
                ("reason", Cell::Null),
                ("interpretation", Cell::text(text)),
                ("caveat", Cell::text(caveat)),
            ]));
            Ok(Report::one(rec))
        }
        Err(e) => {
            rec.extend(record([
                ("value", Cell::Null),
                ("reason", Cell::text(e.kind())),
                ("interpretation", Cell::Null),
                ("caveat", Cell::text(caveat)),
            ]));
            Ok(Report::one(rec).failing(EXIT_COMPUTE, format!("{}: {e}", e.kind())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["relrisk"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_errors_exit_one() {
        assert_eq!(invoke(&["nonsense"]).0, EXIT_INPUT);
        assert_eq!(invoke(&["measure", "--p0", "0.2"]).0, EXIT_INPUT);
        assert_eq!(invoke(&["measure", "--p0", "1.2", "--p1", "0.1"]).0, EXIT_INPUT);
        assert_eq!(invoke(&["measure", "--p0", "0.2", "--p1", "0.1", "--scales", "hr"]).0, EXIT_INPUT);
        assert_eq!(invoke(&["measure", "--table", "{not json"]).0, EXIT_INPUT);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = invoke(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("transport"));
    }

    #[test]
    fn simulate_requires_seed() {
        let (code, _, err) = invoke(&[
            "simulate", "--pattern", "sufficient-causal", "--q", "0.5", "--r", "0.2", "--n", "10",
        ]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--seed"));
    }

    #[test]
    fn csv_cells_use_precision() {
        assert_eq!(Cell::Num(2.0 / 3.0).to_csv(3), "0.667");
        assert_eq!(Cell::Null.to_csv(3), "");
        assert_eq!(Cell::Int(7).to_csv(3), "7");
    }
}
