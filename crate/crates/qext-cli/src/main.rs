//! `qext`: command-line front end.
//!
//! Every command prints one JSON document (or a plain table with `--pretty`). Presentations
//! are read from a file or stdin, either in the text format or as a JSON object with a
//! `presentation` field, so commands can be piped into each other.

mod config;
mod pretty;

use std::io::Read;
use std::process::ExitCode;
use std::rc::Rc;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qext::algebra::{Algebra, DualExtension};
use qext::boxes::compute_box;
use qext::ext::{verify_dualext_iso, ExtTable, Family};
use qext::family::{build_family, family_check, FamilyParams};
use qext::module::{Module, ModuleKind};
use qext::presentation::{dual_extension, Grading, Presentation};
use qext::resolution::{koszul_report, Resolution};
use qext::transfer::{SplittingMode, Transfer};
use qext::{Error, Scalar};

use config::{with_field, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "qext", version, about = "Ext-algebras, A-infinity structures and exact Borel subalgebras")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Ground field: `Q` or a prime such as `7`.
    #[arg(long, global = true, env = "QEXT_FIELD", default_value = "Q")]
    field: String,
    /// Largest resolution degree computed.
    #[arg(long, global = true, default_value_t = 10)]
    cutoff: usize,
    /// Largest arity of higher products.
    #[arg(long, global = true)]
    max_arity: Option<usize>,
    /// Grading override, in the text-format syntax: `pathlength`, `borel <ids>` or
    /// `degrees <id>=<d>,...`.
    #[arg(long, global = true)]
    grading: Option<String>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Args, Debug)]
struct Input {
    /// Presentation file; stdin when omitted or `-`.
    input: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Modules {
    Simples,
    Standards,
    Projectives,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Mode {
    Lifted,
    Echelon,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the algebra: basis size, Cartan matrix, grading.
    Build(Input),
    /// Minimal projective resolutions.
    Resolve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "simples")]
        modules: Modules,
    },
    /// Ext-algebra with Yoneda products.
    Ext {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "simples")]
        modules: Modules,
    },
    /// Transferred A-infinity structure on the Ext-algebra.
    Ainf {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "simples")]
        modules: Modules,
        #[arg(long, value_enum, default_value = "lifted")]
        mode: Mode,
        /// Include products with an identity input.
        #[arg(long)]
        units: bool,
        /// Also check the Stasheff identities.
        #[arg(long)]
        stasheff: bool,
    },
    /// Dual extension `𝒜(B, A^op)` and the comparison of its standard Ext-algebra with Ext_B.
    Dualext {
        #[command(flatten)]
        input: Input,
        /// Presentation of A; B itself when omitted.
        #[arg(long)]
        a: Option<std::path::PathBuf>,
    },
    /// Koszulity of the algebra (and standard Koszulity of a dual extension with `--a`).
    Koszul {
        #[command(flatten)]
        input: Input,
        /// Treat the input as B and check `𝒜(B, A^op)` for this A.
        #[arg(long)]
        a: Option<std::path::PathBuf>,
    },
    /// Regular exact Borel subalgebra of `𝒜(B, A^op)` and the Morita multiplicities.
    Box {
        #[command(flatten)]
        input: Input,
        /// Presentation of A; B itself when omitted.
        #[arg(long)]
        a: Option<std::path::PathBuf>,
    },
    /// Presentation of `K𝔸ₙ/rad^ℓ`.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Compare computed data of the family with the closed formulas.
    FamilyCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        /// Largest arity checked on the dual extension side.
        #[arg(long, default_value_t = 4)]
        max_arity_lambda: usize,
    },
}

/// Failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_computational() { 2 } else { 1 }, message: e.to_string() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure { code: 1, message: format!("{e:#}") }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = RunConfig::new(
        &cli.global.field,
        cli.global.cutoff,
        cli.global.max_arity,
        cli.global.grading.clone(),
        cli.global.out.clone(),
    )?;
    let value = with_field!(cfg.field, F => execute::<F>(&cli.command, &cfg))?;
    let text = if cli.global.pretty {
        pretty::render(&value)
    } else {
        let mut s = serde_json::to_string_pretty(&value).map_err(anyhow::Error::from)?;
        s.push('\n');
        s
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn read_source(path: Option<&std::path::Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| anyhow::anyhow!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Parse text or a JSON object carrying a `presentation` string.
fn parse_presentation<F: Scalar>(source: &str) -> Result<Presentation<F>, Failure> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| anyhow::anyhow!("invalid JSON input: {e}"))?;
        let text = v
            .get("presentation")
            .and_then(Value::as_str)
            .ok_or_else(|| anyhow::anyhow!("JSON input has no \"presentation\" string"))?;
        return Ok(Presentation::parse(text)?);
    }
    Ok(Presentation::parse(source)?)
}

fn load<F: Scalar>(input: &Input, cfg: &RunConfig) -> Result<Presentation<F>, Failure> {
    let mut pres = parse_presentation(&read_source(input.input.as_deref())?)?;
    if let Some(g) = &cfg.grading {
        pres.grading = override_grading(&pres, g)?;
    }
    Ok(pres)
}

fn load_a<F: Scalar>(a: &Option<std::path::PathBuf>, b: &Presentation<F>) -> Result<Presentation<F>, Failure> {
    match a {
        Some(path) => parse_presentation(&read_source(Some(path))?),
        None => Ok(b.clone()),
    }
}

/// Reuse the text-format parser for the `grading` statement.
fn override_grading<F: Scalar>(pres: &Presentation<F>, spec: &str) -> Result<Grading, Failure> {
    let mut bare = pres.clone();
    bare.relations.clear();
    bare.grading = Grading::PathLength;
    let text = bare.to_text().replace("grading pathlength\n", &format!("grading {spec}\n"));
    Ok(Presentation::<F>::parse(&text)?.grading)
}

fn table_for<F: Scalar>(alg: &Arc<Algebra<F>>, modules: Modules, cutoff: usize) -> Result<ExtTable<F>, Failure> {
    let family = match modules {
        Modules::Simples => Family::Simples,
        Modules::Standards => Family::Standards,
        Modules::Projectives => {
            return Err(Failure { code: 1, message: "Ext of projectives is trivial; use simples or standards".into() })
        }
    };
    Ok(ExtTable::build(alg, family, cutoff)?)
}

fn to_json<T: serde::Serialize>(x: &T) -> Result<Value, Failure> {
    Ok(serde_json::to_value(x).map_err(anyhow::Error::from)?)
}

fn execute<F: Scalar>(cmd: &Command, cfg: &RunConfig) -> Result<Value, Failure> {
    let field = F::field_name();
    match cmd {
        Command::Build(input) => {
            let pres = load::<F>(input, cfg)?;
            let alg = Algebra::build(&pres)?;
            Ok(json!({
                "algebra": alg.name,
                "field": field,
                "vertices": alg.n(),
                "arrows": pres.quiver.arrows.len(),
                "relations": pres.relations.len(),
                "dimension": alg.dim(),
                "directed": pres.quiver.is_directed(),
                "graded": alg.graded,
                "arrow_degrees": alg.arrow_degrees,
                "cartan": alg.cartan(),
                "presentation": pres.to_text(),
            }))
        }
        Command::Resolve { input, modules } => {
            let alg = Arc::new(Algebra::build(&load::<F>(input, cfg)?)?);
            let (kind, letter) = match modules {
                Modules::Simples => (ModuleKind::Simple, "L"),
                Modules::Standards => (ModuleKind::Standard, "Δ"),
                Modules::Projectives => (ModuleKind::Projective, "P"),
            };
            let mut out = Vec::new();
            for i in 0..alg.n() {
                let r = Resolution::minimal(&Module::canonical(&alg, kind, i)?, cfg.cutoff)?;
                let terms: Vec<Value> = r
                    .term_data()
                    .iter()
                    .map(|t| {
                        Value::Array(
                            t.iter()
                                .map(|&(v, s, m)| json!({"vertex": v + 1, "shift": s, "multiplicity": m}))
                                .collect(),
                        )
                    })
                    .collect();
                out.push(json!({
                    "module": format!("{letter}({})", i + 1),
                    "complete": r.complete,
                    "length": r.length(),
                    "linear": r.is_linear(),
                    "terms": terms,
                }));
            }
            Ok(json!({"algebra": alg.name, "field": field, "cutoff": cfg.cutoff, "resolutions": out}))
        }
        Command::Ext { input, modules } => {
            let alg = Arc::new(Algebra::build(&load::<F>(input, cfg)?)?);
            let table = table_for(&alg, *modules, cfg.cutoff)?;
            to_json(&table.report())
        }
        Command::Ainf { input, modules, mode, units, stasheff } => {
            let alg = Arc::new(Algebra::build(&load::<F>(input, cfg)?)?);
            let table = Arc::new(table_for(&alg, *modules, cfg.cutoff)?);
            let mode = match mode {
                Mode::Lifted => SplittingMode::Lifted,
                Mode::Echelon => SplittingMode::Echelon,
            };
            let tr = Transfer::new(table, mode)?;
            let max = cfg.arity(4)?;
            let mut v = to_json(&tr.operations(max, *units)?)?;
            v["field"] = json!(field);
            if *stasheff {
                v["stasheff"] = to_json(&tr.verify_stasheff(max)?)?;
            }
            Ok(v)
        }
        Command::Dualext { input, a } => {
            let b = load_unoverridden::<F>(input)?;
            let a = load_a(a, &b)?;
            let de = dual_ext(&b, &a, cfg)?;
            Ok(json!({
                "algebra": de.lambda.name,
                "field": field,
                "dimension": de.lambda.dim(),
                "presentation": de.lambda.presentation.to_text(),
                "ext_comparison": to_json(&verify_dualext_iso(&de, cfg.cutoff)?)?,
            }))
        }
        Command::Koszul { input, a } => match a {
            None => {
                let alg = Arc::new(Algebra::build(&load::<F>(input, cfg)?)?);
                to_json(&koszul_report(&alg, cfg.cutoff, None, false)?)
            }
            Some(_) => {
                let b = load_unoverridden::<F>(input)?;
                let a = load_a(a, &b)?;
                let de = dual_ext(&b, &a, cfg)?;
                let opposite = dual_ext(&a, &b, cfg)?;
                to_json(&koszul_report(&de.lambda, cfg.cutoff, Some(&opposite), true)?)
            }
        },
        Command::Box { input, a } => {
            let b = load_unoverridden::<F>(input)?;
            let a = load_a(a, &b)?;
            let de = Arc::new(dual_ext(&b, &a, cfg)?);
            let base = Rc::new(Transfer::new(Arc::new(ExtTable::build(&de.b, Family::Simples, cfg.cutoff)?), SplittingMode::Lifted)?);
            let lt = Transfer::compatible(base, de.clone())?;
            let max = cfg.arity(de.lambda.n().saturating_sub(1).max(2))?;
            let bx = compute_box(&lt, &de, max)?;
            let mut v = to_json(&bx.report(&de.lambda.name))?;
            v["field"] = json!(field);
            v["max_arity"] = json!(max);
            Ok(v)
        }
        Command::Family { n, ell } => {
            let p = FamilyParams::new(*n, *ell)?;
            let pres = build_family::<F>(p)?;
            Ok(json!({"n": n, "ell": ell, "field": field, "presentation": pres.to_text()}))
        }
        Command::FamilyCheck { n, ell, max_arity_lambda } => {
            let p = FamilyParams::new(*n, *ell)?;
            let max = cfg.arity(4)?;
            let mut v = to_json(&family_check::<F>(p, max, *max_arity_lambda)?)?;
            v["field"] = json!(field);
            Ok(v)
        }
    }
}

/// Inputs of a dual extension keep their own grading; the override applies to `Λ`.
fn load_unoverridden<F: Scalar>(input: &Input) -> Result<Presentation<F>, Failure> {
    parse_presentation(&read_source(input.input.as_deref())?)
}

fn dual_ext<F: Scalar>(b: &Presentation<F>, a: &Presentation<F>, cfg: &RunConfig) -> Result<DualExtension<F>, Failure> {
    let grading = match &cfg.grading {
        Some(g) => Some(override_grading(&dual_extension(b, a)?, g)?),
        None => None,
    };
    Ok(DualExtension::new(b, a, grading)?)
}
