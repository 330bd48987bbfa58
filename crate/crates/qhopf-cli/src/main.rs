//! `qhopf` command line: verification suites, integrals, cointegrals,
//! quantum doubles and document export.
//!
//! Exit status is 0 when every selected check passes, 1 when some check
//! fails and 2 on usage, IO or schema errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qhopf::canonical::check_identity;
use qhopf::double::double_suite;
use qhopf::intcoint::{cointegral_space, Side};
use qhopf::multilinear::{Functional, TensorElement};
use qhopf::qha::{QhaPresentation, VerificationReport};
use qhopf::workbench::{self, catalog, render, ReportFormat, Suite};
use qhopf::Gaussian;

type H = QhaPresentation<Gaussian>;

#[derive(Parser)]
#[command(name = "qhopf", version, about = "Exact checks on finite-dimensional quasi-Hopf algebras")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for independent checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Canonical,
    Integrals,
    Double,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// A presentation document or `catalog:NAME`.
        source: String,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Enumerate every argument pair instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Check only the named identities (repeatable); overrides `--suite`.
        #[arg(long = "identity", value_name = "NAME")]
        identities: Vec<String>,
    },
    /// Left and right integrals and the modular function.
    Integrals { source: String },
    /// Normalized cointegrals and the modular element.
    Cointegrals {
        source: String,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Build the quantum double and run its suite.
    Double {
        source: String,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Write the canonical document of a presentation (`-` for stdout).
    Export { source: String, path: PathBuf },
}

/// A check-level failure, as opposed to an operational error.
struct Failed;

enum Source {
    Loaded(H),
    /// Parsed but failing its axioms; only `verify` reports on these.
    Unchecked(H),
}

fn read_source(source: &str) -> Result<Source> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return Ok(Source::Loaded(catalog::build(name)?));
    }
    let text = fs::read_to_string(source).with_context(|| format!("cannot read {source}"))?;
    let raw = workbench::parse_document::<Gaussian>(&text)?;
    match QhaPresentation::load(raw.clone()) {
        Ok(h) => Ok(Source::Loaded(h)),
        Err(_) => Ok(Source::Unchecked(QhaPresentation::unchecked(raw)?)),
    }
}

fn load(source: &str) -> Result<std::result::Result<H, Failed>> {
    match read_source(source)? {
        Source::Loaded(h) => Ok(Ok(h)),
        Source::Unchecked(h) => {
            let err = QhaPresentation::load(h.into_raw()).expect_err("failed before");
            eprintln!("{source}: {err}");
            Ok(Err(Failed))
        }
    }
}

fn report_format(f: Format) -> ReportFormat {
    match f {
        Format::Text => ReportFormat::Text,
        Format::Json => ReportFormat::Json,
    }
}

fn emit_reports(reports: &[VerificationReport<Gaussian>], format: Format) -> std::result::Result<(), Failed> {
    print!("{}", render(reports, report_format(format)));
    if reports.iter().all(|r| r.all_passed()) {
        Ok(())
    } else {
        Err(Failed)
    }
}

fn nonzero(c: &Gaussian) -> bool {
    *c != Gaussian::from(0)
}

fn term(c: &Gaussian, label: &str) -> String {
    if *c == Gaussian::from(1) {
        label.to_string()
    } else if *c == Gaussian::from(-1) {
        format!("-{label}")
    } else {
        format!("({c})·{label}")
    }
}

fn join_terms(parts: Vec<String>) -> String {
    let mut out = String::new();
    for (k, p) in parts.into_iter().enumerate() {
        match (k, p.strip_prefix('-')) {
            (0, _) => out.push_str(&p),
            (_, Some(rest)) => out.push_str(&format!(" - {rest}")),
            (_, None) => out.push_str(&format!(" + {p}")),
        }
    }
    if out.is_empty() { "0".into() } else { out }
}

fn show_element(h: &H, t: &TensorElement<Gaussian>) -> String {
    let parts: Vec<String> =
        t.coords().iter().zip(h.labels()).filter(|(c, _)| nonzero(c)).map(|(c, l)| term(c, l)).collect();
    join_terms(parts)
}

fn show_functional(h: &H, f: &Functional<Gaussian>) -> String {
    let parts: Vec<String> = f
        .coords()
        .iter()
        .zip(h.labels())
        .filter(|(c, _)| nonzero(c))
        .map(|(c, l)| term(c, &format!("P_{{{l}}}")))
        .collect();
    join_terms(parts)
}

fn coords_json(coords: &[Gaussian]) -> Value {
    Value::Array(coords.iter().map(|c| Value::from(c.to_string())).collect())
}

fn integrals(h: &H, format: Format) -> Result<()> {
    let ints = h.integrals()?;
    let unimodular = ints.is_unimodular(h);
    match format {
        Format::Text => {
            println!("left integral:  {}", show_element(h, &ints.left));
            println!("right integral: {}", show_element(h, &ints.right));
            let values: Vec<String> =
                h.labels().iter().zip(ints.mu.coords()).map(|(l, c)| format!("μ({l}) = {c}")).collect();
            println!("modular function: {}", values.join(", "));
            println!("unimodular: {unimodular}");
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "basis": h.labels(),
                "left": coords_json(&ints.left.coords()),
                "right": coords_json(&ints.right.coords()),
                "mu": coords_json(ints.mu.coords()),
                "unimodular": unimodular,
            }))?
        ),
    }
    Ok(())
}

fn cointegrals(h: &H, side: Option<SideArg>, format: Format) -> Result<()> {
    let co = h.cointegrals()?;
    let sides = match side {
        Some(SideArg::Left) => vec![Side::Left],
        Some(SideArg::Right) => vec![Side::Right],
        None => vec![Side::Left, Side::Right],
    };
    let mut out = serde_json::Map::new();
    for side in sides {
        let space = cointegral_space(h, side)?;
        let normalized = match side {
            Side::Left => &co.left,
            Side::Right => &co.right,
        };
        match format {
            Format::Text => {
                let span: Vec<String> = space.iter().map(|f| show_functional(h, f)).collect();
                println!("{} cointegrals: span{{{}}}", side.name(), span.join(", "));
                println!("  normalized: {}", show_functional(h, normalized));
            }
            Format::Json => {
                out.insert(
                    side.name().into(),
                    json!({
                        "space": space.iter().map(|f| coords_json(f.coords())).collect::<Vec<_>>(),
                        "normalized": coords_json(normalized.coords()),
                        "display": show_functional(h, normalized),
                    }),
                );
            }
        }
    }
    match format {
        Format::Text => {
            println!("modular element: g = {}", show_element(h, &co.g));
            println!("  inverse: {}", show_element(h, &co.g_inv));
        }
        Format::Json => {
            out.insert("basis".into(), json!(h.labels()));
            out.insert("g".into(), coords_json(&co.g.coords()));
            out.insert("g_inv".into(), coords_json(&co.g_inv.coords()));
            println!("{}", serde_json::to_string_pretty(&Value::Object(out))?);
        }
    }
    Ok(())
}

fn write_document(h: &H, path: &Path) -> Result<()> {
    let text = workbench::export(h);
    if path == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
    }
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Axioms => Suite::Axioms,
        SuiteArg::Canonical => Suite::Canonical,
        SuiteArg::Integrals => Suite::Integrals,
        SuiteArg::Double => Suite::Double,
        SuiteArg::All => Suite::All,
    }
}

fn run(cli: Cli) -> Result<std::result::Result<(), Failed>> {
    let format = cli.format;
    match cli.command {
        Command::Verify { source, suite: s, exhaustive, identities } => {
            let h = match read_source(&source)? {
                Source::Loaded(h) | Source::Unchecked(h) => h,
            };
            if identities.is_empty() {
                return Ok(emit_reports(&workbench::run_suite(&h, suite(s), exhaustive), format));
            }
            let mut rep = VerificationReport::new(format!("selected identities of {}", h.name()));
            for name in &identities {
                rep.push(check_identity(&h, name, exhaustive)?);
            }
            Ok(emit_reports(&[rep], format))
        }
        Command::Integrals { source } => Ok(match load(&source)? {
            Ok(h) => integrals(&h, format).map(Ok).or_else(check_error)?,
            Err(f) => Err(f),
        }),
        Command::Cointegrals { source, side } => Ok(match load(&source)? {
            Ok(h) => cointegrals(&h, side, format).map(Ok).or_else(check_error)?,
            Err(f) => Err(f),
        }),
        Command::Double { source, export } => {
            let h = match load(&source)? {
                Ok(h) => h,
                Err(f) => return Ok(Err(f)),
            };
            let (d, rep) = match double_suite(&h) {
                Ok(x) => x,
                Err(e) => return check_error(e.into()),
            };
            if let Some(path) = export {
                write_document(&d.presentation, &path)?;
            }
            Ok(emit_reports(&[rep], format))
        }
        Command::Export { source, path } => {
            let h = match read_source(&source)? {
                Source::Loaded(h) | Source::Unchecked(h) => h,
            };
            write_document(&h, &path)?;
            Ok(Ok(()))
        }
    }
}

/// Mathematical failures (no integral line, degenerate pairing, ...) are
/// check failures rather than operational errors.
fn check_error(e: anyhow::Error) -> Result<std::result::Result<(), Failed>> {
    eprintln!("error: {e}");
    Ok(Err(Failed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {}", anyhow!(e));
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
