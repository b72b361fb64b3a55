use std::io::{self, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crkit_core::catalog::{self, verify_entry, CatalogEntry};
use crkit_core::complexify::{AnyAlgebra, OrbitModel};
use crkit_core::cr::CrPair;
use crkit_core::globalize::{fine_classification_checks_model, model_verdict, verdict};
use crkit_core::io::{parse_document, Document};
use crkit_core::lie::LieAlgebra;
use crkit_core::parallel::{self, Execution};
use crkit_core::report::{self, Format, Record};
use crkit_core::{Error, Scalar, Q};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "crkit", version, about = "Exact checks for homogeneous CR structures")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run analyses on algebra, CR pair or orbit model files.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated analyses; all of them when omitted.
        #[arg(long = "set", value_enum, value_delimiter = ',', num_args = 1..)]
        set: Vec<Analysis>,
        /// Attach a one-line explanation to verdict rows.
        #[arg(long)]
        explain: bool,
    },
    /// Inspect and verify the shipped orbit catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    /// Verify one entry, or every entry with `all`.
    Verify { name: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Analysis {
    Validate,
    Structure,
    CrAxioms,
    Levi,
    Fibration,
    Globalize,
    FineClass,
}

impl Analysis {
    fn label(self) -> &'static str {
        match self {
            Analysis::Validate => "validate",
            Analysis::Structure => "structure",
            Analysis::CrAxioms => "cr-axioms",
            Analysis::Levi => "levi",
            Analysis::Fibration => "fibration",
            Analysis::Globalize => "globalize",
            Analysis::FineClass => "fine-class",
        }
    }
}

/// Failure while handling one input; the exit code is chosen from it.
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Out {
    format: Format,
    lock: io::StdoutLock<'static>,
}

impl Out {
    fn emit(&mut self, r: &Record) {
        // A closed pipe is not worth a panic.
        let _ = writeln!(self.lock, "{}", r.render(self.format));
    }

    fn emit_all(&mut self, rs: &[Record]) {
        for r in rs {
            self.emit(r);
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { format: cli.format.into(), lock: io::stdout().lock() };
    let code = match cli.command {
        Command::Analyze { files, set, explain } => analyze(&mut out, &files, &set, explain),
        Command::Catalog { action } => guarded(|| catalog_cmd(&mut out, action)),
    };
    let _ = out.lock.flush();
    ExitCode::from(code)
}

fn guarded(f: impl FnOnce() -> Result<u8, Failure>) -> u8 {
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let res = panic::catch_unwind(AssertUnwindSafe(f));
    panic::set_hook(hook);
    match res {
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("crkit: {msg}");
            EXIT_INPUT
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("crkit: internal error: {msg}");
            EXIT_INTERNAL
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_default();
            eprintln!("crkit: internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn analyze(out: &mut Out, files: &[PathBuf], set: &[Analysis], explain: bool) -> u8 {
    let mut set: Vec<Analysis> = if set.is_empty() { Analysis::value_variants().to_vec() } else { set.to_vec() };
    set.sort();
    set.dedup();
    let mut code = 0;
    for path in files {
        let src = path.display().to_string();
        let c = guarded(|| {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{src}: {e}")))?;
            let doc = parse_document(&text).map_err(|e| Failure::Input(format!("{src}: {e}")))?;
            analyze_document(out, &src, &doc, &set, explain)?;
            Ok(0)
        });
        if c != 0 {
            out.emit(&report::error_record(&src, if c == EXIT_INPUT { "input-error" } else { "internal-error" }));
        }
        code = code.max(c);
    }
    code
}

fn analyze_document(out: &mut Out, src: &str, doc: &Document, set: &[Analysis], explain: bool) -> Result<(), Failure> {
    let valid = match doc {
        Document::Algebra(AnyAlgebra::Real(a)) => algebra_stage(out, src, a, set),
        Document::Algebra(AnyAlgebra::Complex(a)) => algebra_stage(out, src, a, set),
        Document::Cr(f) => algebra_stage(out, src, f.pair.algebra(), set),
        Document::Orbit(f) => algebra_stage(out, src, f.model.ambient(), set),
    };
    let later = set.iter().copied().filter(|a| *a > Analysis::Structure);
    match doc {
        Document::Algebra(_) => {
            for a in later {
                out.emit(&report::skipped_record(src, a.label(), "input is a bare algebra"));
            }
        }
        _ if !valid => {
            for a in later {
                out.emit(&report::skipped_record(src, a.label(), "algebra fails validation"));
            }
        }
        Document::Cr(f) => {
            for a in later {
                match a {
                    Analysis::CrAxioms => axioms(out, src, &f.pair, f.connected_isotropy)?,
                    Analysis::Levi => levi(out, src, &f.pair, f.codirection.as_deref())?,
                    _ => out.emit(&report::skipped_record(src, a.label(), "input is a CR pair without ambient")),
                }
            }
        }
        Document::Orbit(f) => orbit_stage(out, src, &f.model, f, later.collect(), explain)?,
    }
    Ok(())
}

/// Emits validate and structure records; returns whether the algebra is valid.
fn algebra_stage<F: Scalar>(out: &mut Out, src: &str, a: &LieAlgebra<F>, set: &[Analysis]) -> bool {
    let v = a.validate();
    if set.contains(&Analysis::Validate) {
        out.emit_all(&report::validation_records(src, &v));
    }
    if set.contains(&Analysis::Structure) {
        if v.passed() {
            out.emit_all(&report::structure_records(src, a));
        } else {
            out.emit(&report::skipped_record(src, "structure", "algebra fails validation"));
        }
    }
    v.passed()
}

fn axioms(out: &mut Out, src: &str, pair: &CrPair, connected: bool) -> Result<(), Failure> {
    out.emit_all(&report::axiom_records(src, &pair.check(connected)?));
    out.emit(&report::cr_type_record(src, pair.cr_type()?));
    Ok(())
}

fn levi(out: &mut Out, src: &str, pair: &CrPair, codirection: Option<&[Q]>) -> Result<(), Failure> {
    let l = pair.levi_form()?;
    let default = vec![Q::one()];
    let codir = codirection.or((l.value_dim == 1).then_some(default.as_slice()));
    let sig = match codir {
        Some(c) => Some((c, pair.levi_signature(c)?)),
        None => None,
    };
    out.emit_all(&report::levi_records(src, &l, sig));
    Ok(())
}

fn orbit_stage(
    out: &mut Out,
    src: &str,
    model: &OrbitModel,
    file: &crkit_core::io::OrbitFile,
    analyses: Vec<Analysis>,
    explain: bool,
) -> Result<(), Failure> {
    let pair = model.cr_pair()?;
    for a in analyses {
        match a {
            Analysis::CrAxioms => axioms(out, src, &pair, file.connected_isotropy)?,
            Analysis::Levi => levi(out, src, &pair, file.codirection.as_deref())?,
            Analysis::Fibration => {
                let f = model.fibration()?;
                out.emit_all(&report::fibration_records(src, &f));
                if f.degenerate && f.h_dim == 0 {
                    out.emit_all(&report::fiber_globalization_records(src, &model.fiber_globalization_check()?));
                }
            }
            Analysis::Globalize => out.emit_all(&report::verdict_records(src, &model_verdict(model)?, explain)),
            Analysis::FineClass => {
                let r = fine_classification_checks_model(model, file.kahler)?;
                out.emit_all(&report::fine_records(src, &r, explain));
            }
            Analysis::Validate | Analysis::Structure => {}
        }
    }
    Ok(())
}

fn internal(e: Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn catalog_cmd(out: &mut Out, action: CatalogAction) -> Result<u8, Failure> {
    match action {
        CatalogAction::List => {
            let names = catalog::names();
            let rows = parallel::map(Execution::Parallel, &names, |n| summary(n));
            for r in rows {
                out.emit(&r.map_err(internal)?);
            }
            Ok(0)
        }
        CatalogAction::Show { name } => {
            let e = catalog::by_name(&name)?;
            let v = verdict(&e).map_err(internal)?;
            out.emit_all(&report::entry_detail(&e, &v));
            Ok(0)
        }
        CatalogAction::Verify { name } => {
            let names = if name == "all" { catalog::names() } else { vec![catalog::by_name(&name)?.name] };
            let reports = parallel::map(Execution::Parallel, &names, |n| {
                catalog::by_name(n).and_then(|e| verify_entry(&e))
            });
            let mut failed = 0usize;
            for r in reports {
                let r = r.map_err(internal)?;
                failed += usize::from(!r.passed());
                out.emit_all(&report::verify_records(&r));
            }
            if names.len() > 1 {
                out.emit(
                    &Record::new("verify-total")
                        .field("entries", names.len())
                        .field("mismatched_entries", failed)
                        .field("status", if failed == 0 { "all-match" } else { "mismatch" }),
                );
            }
            Ok(if failed == 0 { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn summary(name: &str) -> crkit_core::Result<Record> {
    let e: CatalogEntry = catalog::by_name(name)?;
    let v = verdict(&e)?;
    Ok(report::entry_summary(&e, &v))
}
