//! `cccspec`: build groups, draw their commuting conjugacy class graphs,
//! compute CN spectra and check them against the closed forms.
//!
//! Exit status: 0 on success (and every verification a match), 1 when some
//! verification disagrees, 2 on usage or configuration errors.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cccspec::error::Error;
use cccspec::formulas::{Case, TheoremId, TheoremParams};
use cccspec::group::{build_family_group, load_cayley_table, CayleyOptions, FamilyKind, FiniteGroup};
use cccspec::verify::{
    default_desk_suite, load_suite_config, named_witness, run_suite, run_sweep, witness_recipe, ParamRange,
    SweepConfig, SweepTarget, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(name = "cccspec", version, about = "Commuting conjugacy class graphs and their CN spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, center size and class census of a group.
    Group(SelectArgs),
    /// The commuting conjugacy class graph: shape, DOT or JSON.
    Graph(SelectArgs),
    /// Brute-force CN spectrum, energy and classification.
    Spectrum(SelectArgs),
    /// A theorem's closed-form structure, spectrum and energy.
    Predict(SelectArgs),
    /// Sweep a family or theorem and compare brute force with the prediction.
    Verify(VerifyArgs),
    /// Run a suite configuration file (or the built-in desk suite).
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Args, Clone, Default)]
struct ParamArgs {
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    z: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    /// Center exponent for the order p^4 theorem (`|Z| = p^e`).
    #[arg(long)]
    e: Option<u64>,
    /// A1, A2, B1..B5 for the order-p^3 quotient theorems; a or b for the order-p^4 one.
    #[arg(long = "case", value_delimiter = ',')]
    cases: Vec<String>,
}

#[derive(Args)]
struct SelectArgs {
    /// dihedral, dicyclic, semidihedral, unm, u6n, v8n, gpmn.
    #[arg(long, conflicts_with_all = ["theorem", "cayley", "witness"])]
    family: Option<String>,
    /// 3.1 .. 3.11, u6n or d2n-quotient.
    #[arg(long, conflicts_with_all = ["cayley", "witness"])]
    theorem: Option<String>,
    /// A Cayley table file.
    #[arg(long, conflicts_with = "witness")]
    cayley: Option<PathBuf>,
    /// A registry group: D8, Q8, D16, SD16, Q16, Z3xD8, G(3,1,1), U12.
    #[arg(long)]
    witness: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
    /// Largest Cayley table accepted.
    #[arg(long)]
    cap: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["theorem", "witness"])]
    family: Option<String>,
    #[arg(long, conflicts_with = "witness")]
    theorem: Option<String>,
    /// Check one registry group (or `all`) against its theorems.
    #[arg(long)]
    witness: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long = "n-range")]
    n_range: Option<ParamRange>,
    #[arg(long = "m-range")]
    m_range: Option<ParamRange>,
    #[arg(long = "p-range")]
    p_range: Option<ParamRange>,
    #[arg(long = "z-range")]
    z_range: Option<ParamRange>,
    #[arg(long = "k-range")]
    k_range: Option<ParamRange>,
    #[arg(long = "e-range")]
    e_range: Option<ParamRange>,
    /// Largest group order to build.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Suite configuration (JSON). Without it the built-in desk suite runs.
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the per-record CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

/// A failure and the exit status it maps to.
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Group(a) => group_cmd(&a),
        Command::Graph(a) => graph_cmd(&a),
        Command::Spectrum(a) => spectrum_cmd(&a),
        Command::Predict(a) => predict_cmd(&a),
        Command::Verify(a) => verify_cmd(&a),
        Command::Suite(a) => suite_cmd(&a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn format_or(format: Option<Format>, default: Format, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let name = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(Failure::Usage(format!("--format {name} is not available for `{command}`")))
    }
}

impl ParamArgs {
    fn theorem_params(&self) -> Result<TheoremParams, Failure> {
        let mut t = TheoremParams::default();
        for (name, v) in [("n", self.n), ("m", self.m), ("p", self.p), ("z", self.z), ("k", self.k), ("e", self.e)] {
            if let Some(v) = v {
                t.set(name, v);
            }
        }
        match self.cases.as_slice() {
            [] => {}
            [one] => apply_case(&mut t, one)?,
            _ => return Err(Failure::Usage("give one --case here".to_string())),
        }
        Ok(t)
    }
}

/// `a`/`b` select the center exponent of the order-`p^4` theorem.
fn apply_case(t: &mut TheoremParams, case: &str) -> Result<(), Failure> {
    match case.to_ascii_lowercase().as_str() {
        "a" => t.set("e", 2),
        "b" => t.set("e", 1),
        _ => t.case = Some(case.parse::<Case>()?),
    }
    Ok(())
}

fn parse_theorem(s: &str) -> Result<TheoremId, Failure> {
    Ok(s.parse::<TheoremId>()?)
}

fn family_params(kind: FamilyKind, params: &ParamArgs) -> Result<Vec<u64>, Failure> {
    let t = params.theorem_params()?;
    kind.param_names()
        .iter()
        .map(|name| t.get(name).ok_or_else(|| Failure::Usage(format!("{kind} needs --{name}"))))
        .collect()
}

/// The group named by `--family`, `--theorem` (its witness), `--cayley` or `--witness`.
fn select_group(a: &SelectArgs) -> Result<FiniteGroup, Failure> {
    if let Some(name) = &a.family {
        let kind = FamilyKind::parse(name)?;
        let instance = cccspec::group::FamilyInstance::from_params(kind, &family_params(kind, &a.params)?)?;
        return Ok(build_family_group(&instance)?);
    }
    if let Some(path) = &a.cayley {
        let options = CayleyOptions {
            max_order: a.cap.map(|c| c as usize).unwrap_or(CayleyOptions::default().max_order),
            label: path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
        };
        return Ok(load_cayley_table(path, &options)?);
    }
    if let Some(name) = &a.witness {
        let w = named_witness(name).ok_or_else(|| Failure::Usage(format!("unknown witness '{name}'")))?;
        return Ok(w.build()?);
    }
    if let Some(t) = &a.theorem {
        let theorem = parse_theorem(t)?;
        let params = a.params.theorem_params()?;
        let recipe = witness_recipe(theorem, &params)?
            .ok_or_else(|| Failure::Usage(format!("no witness group on file for theorem {theorem} at {params}")))?;
        return Ok(recipe.build()?);
    }
    Err(Failure::Usage("select a group with --family, --theorem, --cayley or --witness".to_string()))
}

fn group_cmd(a: &SelectArgs) -> Outcome {
    let format = format_or(a.format, Format::Text, &[Format::Text, Format::Json, Format::Csv], "group")?;
    let g = select_group(a)?;
    emit(&a.out, &render::group(&g, format))?;
    Ok(true)
}

fn graph_cmd(a: &SelectArgs) -> Outcome {
    let format = format_or(a.format, Format::Text, &[Format::Text, Format::Json, Format::Csv, Format::Dot], "graph")?;
    let g = select_group(a)?;
    emit(&a.out, &render::graph(&g, format)?)?;
    Ok(true)
}

fn spectrum_cmd(a: &SelectArgs) -> Outcome {
    let format = format_or(a.format, Format::Json, &[Format::Text, Format::Json, Format::Csv], "spectrum")?;
    let g = select_group(a)?;
    emit(&a.out, &render::spectrum(&g, format)?)?;
    Ok(true)
}

fn predict_cmd(a: &SelectArgs) -> Outcome {
    let format = format_or(a.format, Format::Json, &[Format::Text, Format::Json, Format::Csv], "predict")?;
    let mut params = a.params.theorem_params()?;
    let theorem = match (&a.theorem, &a.family) {
        (Some(t), _) => parse_theorem(t)?,
        (None, Some(f)) => {
            let kind = FamilyKind::parse(f)?;
            let instance = cccspec::group::FamilyInstance::from_params(kind, &family_params(kind, &a.params)?)?;
            let (theorem, p) = TheoremId::for_family(&instance);
            params = p;
            theorem
        }
        (None, None) => return Err(Failure::Usage("predict needs --theorem or --family".to_string())),
    };
    emit(&a.out, &render::prediction(theorem, &params, format)?)?;
    Ok(true)
}

fn verify_cmd(a: &VerifyArgs) -> Outcome {
    let format = format_or(a.format, Format::Text, &[Format::Text, Format::Json, Format::Csv], "verify")?;
    let target = match (&a.family, &a.theorem, &a.witness) {
        (Some(f), None, None) => SweepTarget::Family(FamilyKind::parse(f)?),
        (None, Some(t), None) => SweepTarget::Theorem(parse_theorem(t)?),
        (None, None, Some(w)) => SweepTarget::Witness(w.clone()),
        _ => return Err(Failure::Usage("verify needs one of --family, --theorem, --witness".to_string())),
    };
    let mut config = SweepConfig {
        target,
        ranges: Default::default(),
        cases: Vec::new(),
        cap: a.cap,
        tolerances: Default::default(),
    };
    let p = &a.params;
    let ranges = [
        ("n", a.n_range, p.n),
        ("m", a.m_range, p.m),
        ("p", a.p_range, p.p),
        ("z", a.z_range, p.z),
        ("k", a.k_range, p.k),
        ("e", a.e_range, p.e),
    ];
    for (name, range, single) in ranges {
        if let Some(r) = range.or(single.map(ParamRange::single)) {
            config.ranges.insert(name.to_string(), r);
        }
    }
    for c in &p.cases {
        match c.to_ascii_lowercase().as_str() {
            "a" => merge_e(&mut config, 2),
            "b" => merge_e(&mut config, 1),
            _ => config.cases.push(c.parse::<Case>()?),
        }
    }
    let result = run_sweep(&config)?;
    let all_match = result.records.iter().all(|r| r.is_match());
    emit(&a.out, &render::sweep(&config, &result, format))?;
    Ok(all_match)
}

fn merge_e(config: &mut SweepConfig, e: u64) {
    let r = config.ranges.entry("e".to_string()).or_insert(ParamRange::single(e));
    *r = ParamRange::new(r.lo.min(e), r.hi.max(e));
}

fn suite_cmd(a: &SuiteArgs) -> Outcome {
    let format = format_or(a.format, Format::Json, &[Format::Text, Format::Json, Format::Csv], "suite")?;
    let config = match &a.config {
        Some(path) => load_suite_config(path)?,
        None => default_desk_suite(),
    };
    let report = run_suite(&config)?;
    let text = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        _ => render::suite_text(&report),
    };
    emit(&a.out, &text)?;
    if let Some(path) = &a.csv {
        std::fs::write(path, report.to_csv())?;
    }
    Ok(report.all_match())
}
