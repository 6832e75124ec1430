use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use madm_core::robustness::{
    dynamic_suite, elasticity_coefficients, sensitivity_suite, spearman, Cell,
    DEFAULT_SCENARIO_COUNT,
};
use madm_core::{topsis, vikor, NormalizationScheme, RankVector, Variant};

use crate::error::{Result, WorkbenchError};
use crate::problem_file::{load_problem, Format, LoadedProblem};
use crate::report::{
    dynamic_csv, rank_csv, scc_plot_csv, scenario_weights_csv, Comparison, Payload, RankOutcome,
    ReportFile,
};

#[derive(Debug, Parser)]
#[command(
    name = "madm",
    version,
    about = "Rank alternatives with TOPSIS or VIKOR and probe how stable the ranking is"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank the alternatives of one problem with one method
    Rank(RankArgs),
    /// Shift the weight of the most important criterion and track rank correlation
    Sensitivity(SensitivityArgs),
    /// Remove the worst alternative repeatedly and look for rank reversals
    Dynamic(DynamicArgs),
    /// Run TOPSIS and VIKOR on vector and logarithmic normalization side by side
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Problem file (JSON or CSV)
    pub problem: PathBuf,
    /// Input format
    #[arg(long = "input-format", value_enum, default_value = "auto")]
    pub input_format: Format,
}

impl InputArgs {
    fn load(&self) -> Result<LoadedProblem> {
        load_problem(&self.problem, self.input_format)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Topsis,
    Vikor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "topsis")]
    pub method: MethodArg,
    /// Normalization: vector, log, minmax or sum
    #[arg(long, default_value = "vector")]
    pub norm: NormalizationScheme,
    /// VIKOR strategy weight in [0, 1]
    #[arg(long, default_value_t = madm_core::ranking::DEFAULT_STRATEGY_WEIGHT)]
    pub v: f64,
    /// Write the report here
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct SensitivityArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Number of weight scenarios (at least 2)
    #[arg(long, default_value_t = DEFAULT_SCENARIO_COUNT, value_parser = scenario_count)]
    pub scenarios: usize,
    /// Comma-separated variants such as topsis-log,vikor-vector
    #[arg(long, value_delimiter = ',')]
    pub methods: Vec<Variant>,
    /// Write the report here; `<stem>.scc.csv` and `<stem>.weights.csv` go next to it
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DynamicArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated variants such as topsis-log,vikor-vector
    #[arg(long, value_delimiter = ',')]
    pub methods: Vec<Variant>,
    /// Write the report here; `<stem>.stages.csv` goes next to it
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Write the report here
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Rank(a) => cmd_rank(&a, stdout, stderr),
        Command::Sensitivity(a) => cmd_sensitivity(&a, stdout),
        Command::Dynamic(a) => cmd_dynamic(&a, stdout),
        Command::Compare(a) => cmd_compare(&a, stdout),
    }
}

fn scenario_count(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        Ok(n) => Err(format!("{n} is too few, at least 2 scenarios are needed")),
        Err(e) => Err(e.to_string()),
    }
}

fn methods_or_default(methods: &[Variant]) -> Vec<Variant> {
    if methods.is_empty() {
        Variant::standard_four()
    } else {
        methods.to_vec()
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| WorkbenchError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn write_report(path: &Path, report: &ReportFile) -> Result<()> {
    let json = report
        .to_json()
        .map_err(|e| WorkbenchError::Internal(e.to_string()))?;
    write_file(path, &json)
}

/// `out/report.json` -> `out/report.<suffix>.csv`
fn companion(out: &Path, suffix: &str) -> PathBuf {
    out.with_extension(format!("{suffix}.csv"))
}

macro_rules! say {
    ($w:expr, $($arg:tt)*) => {
        writeln!($w, $($arg)*).map_err(WorkbenchError::Stdout)
    };
}

fn fmt_cell(c: &Cell<f64>) -> String {
    match c.value() {
        Some(v) => format!("{v:.4}"),
        None => "n/a".into(),
    }
}

fn name_width(names: &[String]) -> usize {
    names.iter().map(String::len).max().unwrap_or(0).max(11)
}

pub fn cmd_rank(args: &RankArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    if !(0.0..=1.0).contains(&args.v) {
        return Err(WorkbenchError::Usage(format!(
            "--v must lie in [0, 1], got {}",
            args.v
        )));
    }
    let loaded = args.input.load()?;
    let p = &loaded.problem;
    let outcome = match args.method {
        MethodArg::Topsis => {
            if args.v != madm_core::ranking::DEFAULT_STRATEGY_WEIGHT {
                let _ = writeln!(stderr, "warning: --v has no effect on TOPSIS");
            }
            RankOutcome::Topsis(topsis(p, args.norm)?)
        }
        MethodArg::Vikor => RankOutcome::Vikor(vikor(p, args.norm, args.v)?),
    };

    let title = match args.method {
        MethodArg::Topsis => format!("{}: TOPSIS, {} normalization", loaded.name, args.norm),
        MethodArg::Vikor => format!(
            "{}: VIKOR, {} normalization, v = {}",
            loaded.name, args.norm, args.v
        ),
    };
    say!(stdout, "{title}")?;
    let width = name_width(p.alternatives());
    let cols = outcome.score_columns();
    let mut header = format!("{:>4}  {:<width$}", "rank", "alternative");
    for (t, _) in &cols {
        header.push_str(&format!("  {t:>8}"));
    }
    say!(stdout, "{header}")?;
    let ranking = outcome.ranking();
    for i in ranking.order() {
        let mut line = format!("{:>4}  {:<width$}", ranking.ranks[i], p.alternatives()[i]);
        for (_, v) in &cols {
            line.push_str(&format!("  {:>8.4}", v[i]));
        }
        say!(stdout, "{line}")?;
    }
    for group in &ranking.ties {
        let names: Vec<&str> = group
            .iter()
            .map(|&i| p.alternatives()[i].as_str())
            .collect();
        say!(stdout, "tie: {}", names.join(", "))?;
    }

    if let Some(out) = &args.out {
        match args.format {
            ReportFormat::Json => write_report(
                out,
                &ReportFile::new(loaded.file.clone(), Payload::Rank(outcome)),
            )?,
            ReportFormat::Csv => write_file(out, &rank_csv(p.alternatives(), &outcome))?,
        }
    }
    Ok(())
}

pub fn cmd_sensitivity(args: &SensitivityArgs, stdout: &mut dyn Write) -> Result<()> {
    if args.scenarios < 2 {
        return Err(WorkbenchError::Usage(
            "--scenarios must be at least 2".into(),
        ));
    }
    let loaded = args.input.load()?;
    let p = &loaded.problem;
    let variants = methods_or_default(&args.methods);
    let report = sensitivity_suite(p, &variants, args.scenarios)?;

    let focus = elasticity_coefficients(&p.weights())
        .ok()
        .map(|e| e.most_important);
    say!(
        stdout,
        "{}: {} weight scenarios",
        loaded.name,
        report.scenarios.len()
    )?;
    if let Some(s) = focus {
        say!(stdout, "shifted criterion: {}", p.criteria()[s].name)?;
    }
    let mut header = format!("{:>8}  {:>8}  {:>8}", "scenario", "delta_x", "w_focus");
    for v in &variants {
        header.push_str(&format!("  {:>13}", v.label()));
    }
    say!(stdout, "{header}")?;
    for (k, sc) in report.scenarios.iter().enumerate() {
        let w = focus.map_or(f64::NAN, |s| sc.weights[s]);
        let mut line = format!("{:>8}  {:>8.4}  {:>8.4}", sc.index, sc.delta_x, w);
        for v in 0..variants.len() {
            line.push_str(&format!("  {:>13}", fmt_cell(&report.scc_vs_base[v][k])));
        }
        say!(stdout, "{line}")?;
    }
    for w in &report.windows {
        let mut line = format!("mean SCC, scenarios {}-{}:", w.first, w.last);
        for (v, m) in variants.iter().zip(&w.mean_scc) {
            let m = m.map_or("n/a".into(), |x| format!("{x:.4}"));
            line.push_str(&format!("  {}={m}", v.label()));
        }
        say!(stdout, "{line}")?;
    }

    if let Some(out) = &args.out {
        let names: Vec<String> = p.criteria().iter().map(|c| c.name.clone()).collect();
        write_file(&companion(out, "scc"), &scc_plot_csv(&report))?;
        write_file(
            &companion(out, "weights"),
            &scenario_weights_csv(&report, &names),
        )?;
        write_report(
            out,
            &ReportFile::new(loaded.file.clone(), Payload::Sensitivity(report)),
        )?;
    }
    Ok(())
}

pub fn cmd_dynamic(args: &DynamicArgs, stdout: &mut dyn Write) -> Result<()> {
    let loaded = args.input.load()?;
    let p = &loaded.problem;
    let variants = methods_or_default(&args.methods);
    let report = dynamic_suite(p, &variants)?;
    let names = p.alternatives();

    say!(
        stdout,
        "{}: successive removal of the worst alternative",
        loaded.name
    )?;
    for t in &report.trajectories {
        say!(stdout, "{}", t.variant.label())?;
        for stage in &t.stages {
            let order = match stage.ranking.value() {
                Some(r) => r
                    .order()
                    .into_iter()
                    .map(|i| names[stage.surviving[i]].as_str())
                    .collect::<Vec<_>>()
                    .join(" > "),
                None => format!("failed: {}", stage.ranking.error().unwrap_or_default()),
            };
            let mut line = format!("  stage {}: {order}", stage.index);
            if let Some(tie) = &stage.tie_at_worst {
                let tied: Vec<&str> = tie.iter().map(|&i| names[i].as_str()).collect();
                line.push_str(&format!("  (tie at worst: {})", tied.join(", ")));
            }
            say!(stdout, "{line}")?;
        }
        for e in &t.reversals {
            say!(
                stdout,
                "  reversal at stage {}: {} overtakes {}",
                e.stage,
                names[e.overtaking],
                names[e.overtaken]
            )?;
        }
    }

    say!(stdout, "summary")?;
    say!(
        stdout,
        "  {:<14}  {:>9}  {:<14}  {:>10}",
        "method",
        "reversals",
        "stage-0 winner",
        "top stable"
    )?;
    for t in &report.trajectories {
        let winner = t.initial_winner.map_or("n/a", |i| names[i].as_str());
        let stable = if !t.completed {
            "incomplete"
        } else if t.top_stable {
            "yes"
        } else {
            "no"
        };
        say!(
            stdout,
            "  {:<14}  {:>9}  {:<14}  {:>10}",
            t.variant.label(),
            t.reversals.len(),
            winner,
            stable
        )?;
    }

    if let Some(out) = &args.out {
        write_file(&companion(out, "stages"), &dynamic_csv(&report))?;
        write_report(
            out,
            &ReportFile::new(loaded.file.clone(), Payload::Dynamic(report)),
        )?;
    }
    Ok(())
}

pub fn compare(problem: &madm_core::DecisionProblem) -> Comparison {
    use NormalizationScheme::{Logarithmic, Vector};
    let variants = vec![
        Variant::topsis(Vector),
        Variant::topsis(Logarithmic),
        Variant::vikor(Vector),
        Variant::vikor(Logarithmic),
    ];
    let rankings: Vec<Cell<RankVector>> = variants.iter().map(|v| v.rank(problem).into()).collect();
    let scc = rankings
        .iter()
        .map(|a| {
            rankings
                .iter()
                .map(|b| match (a.value(), b.value()) {
                    (Some(a), Some(b)) => spearman(a, b).into(),
                    _ => Cell::Error("ranking unavailable".into()),
                })
                .collect()
        })
        .collect();
    Comparison {
        variants,
        rankings,
        scc,
    }
}

pub fn cmd_compare(args: &CompareArgs, stdout: &mut dyn Write) -> Result<()> {
    let loaded = args.input.load()?;
    let p = &loaded.problem;
    let cmp = compare(p);
    let names = p.alternatives();
    let width = name_width(names);
    let labels: Vec<String> = cmp.variants.iter().map(Variant::label).collect();

    say!(stdout, "{}: ranks", loaded.name)?;
    let mut header = format!("{:<width$}", "alternative");
    for l in &labels {
        header.push_str(&format!("  {l:>13}"));
    }
    say!(stdout, "{header}")?;
    for (i, name) in names.iter().enumerate() {
        let mut line = format!("{name:<width$}");
        for r in &cmp.rankings {
            let cell = r.value().map_or("n/a".into(), |r| r.ranks[i].to_string());
            line.push_str(&format!("  {cell:>13}"));
        }
        say!(stdout, "{line}")?;
    }

    say!(stdout, "")?;
    say!(stdout, "order")?;
    let mut header = format!("{:<width$}", "position");
    for l in &labels {
        header.push_str(&format!("  {l:>13}"));
    }
    say!(stdout, "{header}")?;
    let orders: Vec<Option<Vec<usize>>> = cmp
        .rankings
        .iter()
        .map(|r| r.value().map(RankVector::order))
        .collect();
    for k in 0..names.len() {
        let mut line = format!("{:<width$}", k + 1);
        for o in &orders {
            let cell = o.as_ref().map_or("n/a", |o| names[o[k]].as_str());
            line.push_str(&format!("  {cell:>13}"));
        }
        say!(stdout, "{line}")?;
    }

    say!(stdout, "")?;
    say!(stdout, "Spearman rank correlation")?;
    let mut header = format!("{:<13}", "");
    for l in &labels {
        header.push_str(&format!("  {l:>13}"));
    }
    say!(stdout, "{header}")?;
    for (l, row) in labels.iter().zip(&cmp.scc) {
        let mut line = format!("{l:<13}");
        for c in row {
            line.push_str(&format!("  {:>13}", fmt_cell(c)));
        }
        say!(stdout, "{line}")?;
    }

    if let Some(out) = &args.out {
        write_report(
            out,
            &ReportFile::new(loaded.file.clone(), Payload::Compare(cmp)),
        )?;
    }
    Ok(())
}
