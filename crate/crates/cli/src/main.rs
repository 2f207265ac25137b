use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oofa_core::evaluate::t_test_power;
use oofa_core::io::{parse_ratio, read_design, write_design, write_matrix};
use oofa_core::{
    build_spec, cross_amounts, evaluate, fds_curve, model_matrix_with, oofa_expand,
    project_columns, scale_amounts, simplex_centroid, simplex_lattice, tables, AmountCoding,
    AmountPolicy, Design, DesignFormat, Error, EvalOptions, Evaluator, FdsConfig, ModelKind,
    ModelSpec, OrderingPolicy, PowerConvention, Ratio, ReductionRule,
};

const MODEL_HELP: &str = "\
Model kinds (name, alias, terms):
  ma-lin        eq1  linear mixture-amount: x_i and x_i A
  ma-quad       eq2  quadratic mixture-amount: x_i, x_i x_j, each times 1, A, A^2
  ca-lin        eq3  linear component-amount: intercept and a_i
  ca-quad       eq4  quadratic component-amount: adds a_i^2 and a_i a_j
  oofa-ma-add   eq5  mixture-amount with PWO terms: x_i, z_jk, each times 1, A
  oofa-ma-full  eq6  quadratic mixture-amount with PWO terms and x_i z_jk
                     interactions, each times 1, A, A^2
  oofa-ca-add   eq7  component-amount with PWO terms: intercept, a_i, z_jk
  oofa-ca-full  eq8  quadratic component-amount with PWO terms and a_i z_jk
                     interactions";

/// Order-of-addition mixture-amount designs.
///
/// Design-producing commands write a comma-separated design file to stdout;
/// design-consuming commands read one from --input or stdin, so steps chain
/// with pipes: generate | expand | cross | evaluate.
#[derive(Parser, Debug)]
#[command(name = "oofa", version, after_help = MODEL_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simplex-lattice or simplex-centroid base design.
    Generate(GenerateArgs),
    /// Delete proportion columns, turning the rest into component amounts.
    Project(ProjectArgs),
    /// Replace each run by one run per addition order of its support.
    Expand(DesignIo),
    /// Cross a proportion design with total-amount levels.
    Cross(CrossArgs),
    /// Rescale a unit-amount design to a maximum total.
    Scale(ScaleArgs),
    /// Model matrix as CSV.
    Matrix(MatrixArgs),
    /// Evaluation report as JSON.
    Evaluate(EvaluateArgs),
    /// Fraction-of-design-space curve as `fraction,variance` rows.
    Fds(FdsArgs),
    /// Power of the two-sided t-test for one coefficient.
    Power(PowerArgs),
    /// Regenerate the worked examples.
    Demo(DemoArgs),
}

#[derive(Args, Debug)]
struct DesignIo {
    /// Design file to read (default: stdin).
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Write here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Write decimals rounded half-up to this many places instead of exact fractions.
    #[arg(long)]
    decimals: Option<usize>,
}

impl DesignIo {
    fn format(&self) -> DesignFormat {
        self.decimals
            .map_or(DesignFormat::Rational, DesignFormat::Decimals)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Base {
    Lattice,
    Centroid,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    base: Base,
    /// Number of components.
    #[arg(long)]
    m: usize,
    /// Lattice degree.
    #[arg(long, required_if_eq("base", "lattice"))]
    w: Option<usize>,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long)]
    decimals: Option<usize>,
}

#[derive(Args, Debug)]
struct ProjectArgs {
    /// 1-based columns to delete, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    drop: Vec<usize>,
    #[command(flatten)]
    io: DesignIo,
}

#[derive(Args, Debug)]
struct CrossArgs {
    /// Total-amount levels such as `3/4,3/2,3` or `0.75,1.5,3`.
    #[arg(long, value_delimiter = ',', required = true, value_parser = ratio)]
    levels: Vec<Ratio>,
    #[command(flatten)]
    io: DesignIo,
}

#[derive(Args, Debug)]
struct ScaleArgs {
    /// Maximum total amount.
    #[arg(long, value_parser = ratio)]
    a_max: Ratio,
    #[command(flatten)]
    io: DesignIo,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Reduction {
    /// x_i z_{i,i+1} with wrap-around (x1z12, x2z23, x3z13).
    Cyclic,
    /// Every component with every pair containing it.
    KeepAll,
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// Model kind; see the list below.
    #[arg(long, value_parser = model_kind)]
    model: ModelKind,
    #[arg(long, value_enum, default_value = "cyclic")]
    reduction: Reduction,
    /// Amount coding: raw values, or each amount variable mapped onto [-1, 1].
    #[arg(long, value_enum, default_value = "raw")]
    coding: Coding,
}

impl ModelArgs {
    fn spec(&self, m: usize) -> Result<ModelSpec, Error> {
        let rule = match self.reduction {
            Reduction::Cyclic => ReductionRule::CyclicPairing,
            Reduction::KeepAll => ReductionRule::KeepAll,
        };
        build_spec(self.model, m, &rule)
    }

    fn coding(&self) -> AmountCoding {
        match self.coding {
            Coding::Raw => AmountCoding::Raw,
            Coding::UnitRange => AmountCoding::UnitRange,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Coding {
    Raw,
    UnitRange,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    /// Coefficient k/2: a k-unit swing over a [-1, 1] variable.
    HalfRange,
    /// Coefficient k over the term's range in the design.
    TermRange,
}

impl From<Convention> for PowerConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::HalfRange => PowerConvention::HalfRange,
            Convention::TermRange => PowerConvention::TermRange,
        }
    }
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PowerOpts {
    /// Effect size in error standard deviations.
    #[arg(long, default_value_t = 1.0)]
    signal: f64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value = "half-range")]
    power_convention: Convention,
}

#[derive(Args, Debug)]
struct EvaluateArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    power: PowerOpts,
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Amounts {
    /// Uniform between the design's lowest and highest total.
    Continuous,
    /// Uniform over the design's own totals.
    Levels,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Orderings {
    /// Random addition orders (z = +1 or -1, transitive).
    Permutations,
    /// Each z uniform on [-1, 1].
    Relaxed,
}

#[derive(Args, Debug)]
struct FdsArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value = "continuous")]
    amounts: Amounts,
    #[arg(long, value_enum, default_value = "permutations")]
    orderings: Orderings,
    /// Thin the curve to this many evenly spaced rows.
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PowerArgs {
    /// Term label, e.g. `z12` (requires a design and --model).
    #[arg(long, conflicts_with_all = ["se", "df"])]
    term: Option<String>,
    #[arg(long, value_parser = model_kind, requires = "term")]
    model: Option<ModelKind>,
    #[arg(long, value_enum, default_value = "cyclic")]
    reduction: Reduction,
    #[arg(long, value_enum, default_value = "raw")]
    coding: Coding,
    /// Standard error of the coefficient at unit error variance.
    #[arg(long, requires = "df")]
    se: Option<f64>,
    /// Residual degrees of freedom.
    #[arg(long, requires = "se")]
    df: Option<usize>,
    #[command(flatten)]
    power: PowerOpts,
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Demo {
    /// Both worked examples: the hormone and placebo tablet designs.
    Paper,
}

#[derive(Args, Debug)]
struct DemoArgs {
    #[arg(value_enum)]
    which: Demo,
    /// Output directory.
    #[arg(long, env = "OOFA_OUT_DIR", default_value = "oofa-demo")]
    out: PathBuf,
    #[arg(long, default_value_t = 20_000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn ratio(s: &str) -> Result<Ratio, String> {
    parse_ratio(s).ok_or_else(|| format!("not a number: {s:?}"))
}

fn model_kind(s: &str) -> Result<ModelKind, String> {
    let s = s.to_ascii_lowercase();
    ModelKind::ALL
        .iter()
        .enumerate()
        .find(|(i, k)| k.name() == s || s == format!("eq{}", i + 1))
        .map(|(_, k)| *k)
        .ok_or_else(|| {
            format!("unknown model {s:?}; expected one of ma-lin, ..., oofa-ca-full or eq1..eq8")
        })
}

fn read_input(path: Option<&Path>) -> Result<Design, CliError> {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::io(p, e))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::io(Path::new("<stdin>"), e))?;
            s
        }
    };
    Ok(read_design(&text)?)
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}

#[derive(Debug)]
struct CliError {
    code: &'static str,
    message: String,
}

impl CliError {
    fn io(path: &Path, e: io::Error) -> Self {
        CliError {
            code: "Io",
            message: format!("{}: {e}", path.display()),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: "InvalidArgument",
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

fn transform(
    io: &DesignIo,
    f: impl FnOnce(&Design) -> Result<Design, Error>,
) -> Result<(), CliError> {
    let design = read_input(io.input.as_deref())?;
    let out = f(&design)?;
    emit(io.output.as_deref(), &write_design(&out, io.format()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(a) => {
            let design = match a.base {
                Base::Lattice => simplex_lattice(a.m, a.w.expect("required by clap"))?,
                Base::Centroid => simplex_centroid(a.m)?,
            };
            let format = a
                .decimals
                .map_or(DesignFormat::Rational, DesignFormat::Decimals);
            emit(a.output.as_deref(), &write_design(&design, format))
        }
        Command::Project(a) => {
            if a.drop.contains(&0) {
                return Err(CliError::usage("--drop columns are 1-based"));
            }
            let drop: BTreeSet<usize> = a.drop.iter().map(|c| c - 1).collect();
            transform(&a.io, |d| project_columns(d, &drop))
        }
        Command::Expand(io) => transform(&io, oofa_expand),
        Command::Cross(a) => transform(&a.io, |d| cross_amounts(d, &a.levels)),
        Command::Scale(a) => transform(&a.io, |d| scale_amounts(d, a.a_max)),
        Command::Matrix(a) => {
            let design = read_input(a.input.as_deref())?;
            let spec = a.model.spec(design.m())?;
            let mm = model_matrix_with(&design, &spec, a.model.coding())?;
            emit(a.output.as_deref(), &write_matrix(&mm))
        }
        Command::Evaluate(a) => {
            let design = read_input(a.input.as_deref())?;
            let spec = a.model.spec(design.m())?;
            let opts = EvalOptions {
                coding: a.model.coding(),
                signal: a.power.signal,
                alpha: a.power.alpha,
                convention: a.power.power_convention.into(),
            };
            emit(
                a.output.as_deref(),
                &evaluate(&design, &spec, &opts)?.to_json(),
            )
        }
        Command::Fds(a) => {
            let design = read_input(a.input.as_deref())?;
            let spec = a.model.spec(design.m())?;
            let amount_policy = match a.amounts {
                Amounts::Continuous => None,
                Amounts::Levels => AmountPolicy::levels_of(&design),
            };
            let config = FdsConfig {
                samples: a.samples,
                seed: a.seed,
                amount_policy,
                ordering_policy: match a.orderings {
                    Orderings::Permutations => OrderingPolicy::Permutations,
                    Orderings::Relaxed => OrderingPolicy::Relaxed,
                },
                coding: a.model.coding(),
                threads: a.threads,
            };
            let curve = fds_curve(&design, &spec, &config)?;
            emit(a.output.as_deref(), &curve.to_text(a.points))
        }
        Command::Power(a) => power(a),
        Command::Demo(a) => demo(&a),
    }
}

fn power(a: PowerArgs) -> Result<(), CliError> {
    let alpha = a.power.alpha;
    let signal = a.power.signal;
    let value = match (a.se, a.df, a.term) {
        (Some(se), Some(df), None) => {
            if se <= 0.0 {
                return Err(CliError::usage("--se must be positive"));
            }
            let delta = (signal / 2.0) / se;
            let power = t_test_power(delta, df as f64, alpha)?;
            serde_json::json!({"se": se, "df": df, "delta": delta, "alpha": alpha, "power": power})
        }
        (None, None, Some(term)) => {
            let kind = a
                .model
                .ok_or_else(|| CliError::usage("--term needs --model"))?;
            let design = read_input(a.input.as_deref())?;
            let model = ModelArgs {
                model: kind,
                reduction: a.reduction,
                coding: a.coding,
            };
            let spec = model.spec(design.m())?;
            let ev = Evaluator::new(model_matrix_with(&design, &spec, model.coding())?)?;
            let j = ev
                .matrix()
                .col_labels
                .iter()
                .position(|l| *l == term)
                .ok_or_else(|| CliError::usage(format!("model has no term {term:?}")))?;
            let convention: PowerConvention = a.power.power_convention.into();
            let power = ev.power(j, signal, alpha, convention)?;
            serde_json::json!({
                "term": term,
                "se": ev.std_errors()[j],
                "df": ev.residual_df(),
                "delta": ev.noncentrality(j, signal, convention),
                "alpha": alpha,
                "power_convention": convention.name(),
                "power": power,
            })
        }
        _ => {
            return Err(CliError::usage(
                "give either --term with --model, or --se with --df",
            ))
        }
    };
    emit(
        None,
        &format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
    )
}

fn spec3(kind: ModelKind) -> Result<ModelSpec, Error> {
    build_spec(kind, 3, &ReductionRule::CyclicPairing)
}

/// Term table as CSV: label, standard error, power in percent, R².
fn term_table(
    design: &Design,
    kind: ModelKind,
    coding: AmountCoding,
    signal: f64,
) -> Result<String, Error> {
    let opts = EvalOptions {
        coding,
        signal,
        ..EvalOptions::default()
    };
    let report = evaluate(design, &spec3(kind)?, &opts)?;
    let mut out = String::from("term,se,power_pct,r2\n");
    for t in &report.terms {
        let power = t
            .power
            .map_or(String::new(), |p| format!("{:.1}", p * 100.0));
        let r2 = t.r2.map_or(String::new(), |r| format!("{r:.4}"));
        out.push_str(&format!("{},{:.4},{power},{r2}\n", t.label, t.se));
    }
    Ok(out)
}

fn demo(a: &DemoArgs) -> Result<(), CliError> {
    let Demo::Paper = a.which;
    let dir = &a.out;
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let write = |name: &str, text: &str| {
        fs::write(dir.join(name), text).map_err(|e| CliError::io(&dir.join(name), e))
    };

    let t1 = tables::lattice_3_3()?;
    let t2 = tables::projected_centroid()?;
    let t3 = tables::hormone_design()?;
    let t5 = tables::tablet_design()?;
    for (name, design, decimals) in [
        ("table1", &t1, 2),
        ("table2", &t2, 2),
        ("table3", &t3, 2),
        ("table5", &t5, 1),
    ] {
        write(
            &format!("{name}.csv"),
            &write_design(design, DesignFormat::Rational),
        )?;
        write(
            &format!("{name}_display.csv"),
            &write_design(design, DesignFormat::Decimals(decimals)),
        )?;
    }

    let hormone = EvalOptions {
        signal: 0.5,
        ..EvalOptions::default()
    };
    write(
        "example1.json",
        &evaluate(&t3, &spec3(ModelKind::OofaMaFull)?, &hormone)?.to_json(),
    )?;
    let tablet = EvalOptions {
        coding: AmountCoding::UnitRange,
        signal: 2.0,
        ..EvalOptions::default()
    };
    write(
        "example2.json",
        &evaluate(&t2, &spec3(ModelKind::OofaCaFull)?, &tablet)?.to_json(),
    )?;
    write(
        "table4.csv",
        &term_table(&t3, ModelKind::OofaMaFull, AmountCoding::Raw, 0.5)?,
    )?;
    write(
        "table6.csv",
        &term_table(&t2, ModelKind::OofaCaFull, AmountCoding::UnitRange, 2.0)?,
    )?;

    for (name, design, kind) in [
        ("example1", &t3, ModelKind::OofaMaFull),
        ("example2", &t5, ModelKind::OofaCaFull),
    ] {
        for (suffix, policy) in [
            ("", OrderingPolicy::Permutations),
            ("_relaxed", OrderingPolicy::Relaxed),
        ] {
            let config = FdsConfig {
                samples: a.samples,
                seed: a.seed,
                ordering_policy: policy,
                ..FdsConfig::default()
            };
            let curve = fds_curve(design, &spec3(kind)?, &config)?;
            write(
                &format!("fds_{name}{suffix}.csv"),
                &curve.to_text(Some(200)),
            )?;
        }
    }
    write(
        "invocation.txt",
        &format!(
            "oofa demo paper --out {} --samples {} --seed {}\n",
            dir.display(),
            a.samples,
            a.seed
        ),
    )
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let body = serde_json::json!({"error": e.code, "message": e.message});
            eprintln!("{body}");
            ExitCode::FAILURE
        }
    }
}
