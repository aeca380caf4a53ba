//! Batch checking of source files and reporting.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use thiserror::Error;

use crate::diagnostic::Diagnostic;
use crate::parser::{parse_surface, Scope, SurfaceDeclKind};
use crate::span::SourceSpan;
use crate::typechecker::{Checker, Mode, Outcome};

/// Stack for the checking thread; deep terms recurse deeply.
const STACK_SIZE: usize = 512 * 1024 * 1024;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    /// `file\tline\tcol\tcode\tmessage`, one record per line.
    Lines,
}

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    pub files: Vec<PathBuf>,
    pub strong: bool,
    pub strict_proof_irrelevance: bool,
    pub trace: bool,
    pub format: Format,
    /// Definition unfoldings allowed per declaration.
    pub unfold_budget: Option<u64>,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("no input files")]
    NoFiles,
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("checker thread failed: {0}")]
    Thread(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileReport {
    pub path: String,
    pub declarations: usize,
    pub pragmas: usize,
    pub errors: usize,
}

impl FileReport {
    pub fn ok(&self) -> bool {
        self.errors == 0
    }
}

/// The printed result of a pragma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PragmaResult {
    pub span: SourceSpan,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub files: Vec<FileReport>,
    pub diagnostics: Vec<Diagnostic>,
    pub results: Vec<PragmaResult>,
    /// Progress lines, filled when tracing. Not part of `emit_report`.
    pub trace: Vec<String>,
}

impl RunReport {
    pub fn declarations(&self) -> usize {
        self.files.iter().map(|f| f.declarations).sum()
    }

    pub fn pragmas(&self) -> usize {
        self.files.iter().map(|f| f.pragmas).sum()
    }

    pub fn ok(&self) -> bool {
        self.diagnostics.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }

    /// Printed results of `#normalize` pragmas, in order.
    pub fn normal_forms(&self) -> impl Iterator<Item = &str> {
        self.results.iter().filter_map(|r| match &r.outcome {
            Outcome::Normalized(s) => Some(s.as_str()),
            _ => None,
        })
    }
}

/// Reads every file, then checks them in order against one signature.
pub fn run(config: &RunConfig) -> Result<RunReport, RunError> {
    let sources = read_sources(&config.files)?;
    let mode = Mode { strong: config.strong, strict_proof_irrelevance: config.strict_proof_irrelevance };
    let (budget, trace) = (config.unfold_budget, config.trace);
    with_large_stack(move || {
        let mut checker = Checker::new(mode);
        checker.set_unfold_budget(budget);
        check_into(&mut checker, &sources, trace)
    })
}

/// Reads `(path, text)` pairs, failing on the first unreadable file.
pub fn read_sources(paths: &[PathBuf]) -> Result<Vec<(String, String)>, RunError> {
    if paths.is_empty() {
        return Err(RunError::NoFiles);
    }
    paths
        .iter()
        .map(|path| {
            std::fs::read_to_string(path)
                .map(|text| (path.display().to_string(), text))
                .map_err(|source| RunError::Io { path: path.clone(), source })
        })
        .collect()
}

/// Runs `f` on a thread with a stack deep enough for the corpus.
pub fn with_large_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> Result<T, RunError> {
    std::thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(f)
        .map_err(|e| RunError::Thread(e.to_string()))?
        .join()
        .map_err(|_| RunError::Thread("the checker panicked".to_owned()))
}

/// Checks the sources in order, extending the checker's signature. Errors do
/// not stop the run; a failed declaration is simply not added.
pub fn check_into(checker: &mut Checker, sources: &[(String, String)], trace: bool) -> RunReport {
    let mut report = RunReport::default();
    for (path, text) in sources {
        let before = report.diagnostics.len();
        let (surface, syntax_errors) = parse_surface(text, path);
        report.diagnostics.extend(syntax_errors);
        let mut file = FileReport { path: path.clone(), declarations: 0, pragmas: 0, errors: 0 };
        for item in &surface {
            let is_pragma = !matches!(item.kind, SurfaceDeclKind::Def { .. } | SurfaceDeclKind::Axiom { .. });
            if is_pragma {
                file.pragmas += 1;
            } else {
                file.declarations += 1;
            }
            let sig = &checker.sig;
            let resolved = Scope::new(Vec::new(), &|name| sig.contains(name)).decl(item);
            let result = resolved.and_then(|decl| checker.check_decl(&decl));
            match result {
                Ok(outcome) => {
                    if trace {
                        report.trace.push(format!("{}: {}", item.span, describe(&outcome)));
                    }
                    if is_pragma {
                        report.results.push(PragmaResult { span: item.span.clone(), outcome });
                    }
                }
                Err(diagnostic) => report.diagnostics.push(diagnostic),
            }
        }
        file.errors = report.diagnostics.len() - before;
        report.files.push(file);
    }
    report
}

fn describe(outcome: &Outcome) -> String {
    match outcome {
        Outcome::Declared(name) => format!("defined {name}"),
        Outcome::Checked => "checked".to_owned(),
        Outcome::Inferred(ty) => format!("type {ty}"),
        Outcome::Normalized(nf) => format!("normal form {nf}"),
        Outcome::Converted => "convertible".to_owned(),
        Outcome::ExpectedFailure(code) => format!("failed as expected with {code}"),
    }
}

/// Short code and text for a pragma result in the line format.
fn result_record(outcome: &Outcome) -> Option<(&'static str, String)> {
    match outcome {
        Outcome::Declared(_) => None,
        Outcome::Checked => Some(("Checked", String::new())),
        Outcome::Inferred(ty) => Some(("Infer", ty.clone())),
        Outcome::Normalized(nf) => Some(("Normalize", nf.clone())),
        Outcome::Converted => Some(("Conv", String::new())),
        Outcome::ExpectedFailure(code) => Some(("ExpectedFailure", code.to_string())),
    }
}

fn one_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn diagnostic_text(d: &Diagnostic) -> String {
    let mut text = d.message.clone();
    if let (Some(expected), Some(actual)) = (&d.expected, &d.actual) {
        let _ = write!(text, " (expected `{expected}`, found `{actual}`)");
    }
    text
}

/// Writes the report and returns the process exit code.
pub fn emit_report(report: &RunReport, format: Format, out: &mut dyn Write) -> io::Result<i32> {
    match format {
        Format::Human => {
            for result in &report.results {
                match &result.outcome {
                    Outcome::Inferred(text) | Outcome::Normalized(text) => writeln!(out, "{}: {text}", result.span)?,
                    _ => {}
                }
            }
            for d in &report.diagnostics {
                writeln!(out, "{}: error[{}]: {}", d.span, d.code, d.message)?;
                if let (Some(expected), Some(actual)) = (&d.expected, &d.actual) {
                    writeln!(out, "  expected: {expected}")?;
                    writeln!(out, "  actual:   {actual}")?;
                }
                writeln!(out)?;
            }
            if report.ok() {
                writeln!(out, "OK: {} declarations, {} pragmas", report.declarations(), report.pragmas())?;
            } else {
                writeln!(
                    out,
                    "FAILED: {} errors ({} declarations, {} pragmas)",
                    report.diagnostics.len(),
                    report.declarations(),
                    report.pragmas()
                )?;
            }
        }
        Format::Lines => {
            let record = |span: &SourceSpan, code: &str, text: &str| {
                format!("{}\t{}\t{}\t{}\t{}", span.file, span.start.line, span.start.col, code, one_line(text))
            };
            for result in &report.results {
                if let Some((code, text)) = result_record(&result.outcome) {
                    writeln!(out, "{}", record(&result.span, code, &text))?;
                }
            }
            for d in &report.diagnostics {
                writeln!(out, "{}", record(&d.span, d.code.as_str(), &diagnostic_text(d)))?;
            }
        }
    }
    Ok(report.exit_code())
}
