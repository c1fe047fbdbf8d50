//! The `vanref` command line: `format`, `check` and `scan`.
//!
//! Each command writes reference lines or key lists to `out` and
//! diagnostics to `err`, and returns the process exit code: 0 on success,
//! 1 for content errors, 2 for unreadable files or syntax errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::cite::{resolve, scan_citations, CitationIndex};
use crate::diag::{Diagnostic, DiagnosticKind};
use crate::model::{unknown_fields, BibRecord};
use crate::render::{render_reference, RenderError, StyleConfig};
use crate::syntax::RawEntry;
use crate::Bibliography;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTENT: i32 = 1;
pub const EXIT_IO: i32 = 2;

/// Environment variable naming an optional TOML config file.
pub const CONFIG_ENV: &str = "VANREF_CONFIG";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Plain,
    Markdown,
}

/// Which entries `format` renders, and how they are numbered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    /// Cited keys of a manuscript, numbered by first citation.
    Tex(PathBuf),
    /// Explicit keys, numbered in the order given.
    Keys(Vec<String>),
    /// Every entry, in database order.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub bib_paths: Vec<PathBuf>,
    pub selection: Selection,
    pub out_path: Option<PathBuf>,
    pub max_authors: Option<usize>,
    pub etal: Option<String>,
    pub output_format: OutputFormat,
    pub strict: bool,
}

impl RunConfig {
    pub fn new(bib_paths: Vec<PathBuf>, selection: Selection) -> Self {
        RunConfig {
            bib_paths,
            selection,
            out_path: None,
            max_authors: None,
            etal: None,
            output_format: OutputFormat::Plain,
            strict: false,
        }
    }
}

/// Settings read from the `VANREF_CONFIG` file. Command-line flags win.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_authors: Option<usize>,
    pub etal: Option<String>,
    pub format: Option<OutputFormat>,
    pub strict: Option<bool>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "vanref", version, about = "Vancouver-style reference lists from BibTeX")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a numbered reference list.
    Format(FormatArgs),
    /// Report problems in one or more databases.
    Check(CheckArgs),
    /// List cited keys of a manuscript in citation order.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
struct FormatArgs {
    #[arg(long, required = true, num_args = 1..)]
    bib: Vec<PathBuf>,
    #[arg(long, group = "select")]
    tex: Option<PathBuf>,
    #[arg(long, group = "select", value_delimiter = ',', num_args = 0..)]
    keys: Option<Vec<String>>,
    #[arg(long, group = "select")]
    all: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long)]
    max_authors: Option<usize>,
    #[arg(long)]
    etal: Option<String>,
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, required = true, num_args = 1..)]
    bib: Vec<PathBuf>,
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long)]
    tex: PathBuf,
    #[arg(long)]
    strict: bool,
}

/// Parse `args` (program name first) and run the chosen command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_IO } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let file = match std::env::var_os(CONFIG_ENV) {
        Some(path) => match load_file_config(Path::new(&path)) {
            Ok(c) => c,
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                return EXIT_IO;
            }
        },
        None => FileConfig::default(),
    };
    match cli.command {
        Command::Format(a) => {
            let selection = match (a.tex, a.keys, a.all) {
                (Some(tex), _, _) => Selection::Tex(tex),
                (_, Some(keys), _) => Selection::Keys(keys),
                _ => Selection::All,
            };
            let config = RunConfig {
                bib_paths: a.bib,
                selection,
                out_path: a.out,
                max_authors: a.max_authors.or(file.max_authors),
                etal: a.etal.or(file.etal),
                output_format: a.format.or(file.format).unwrap_or_default(),
                strict: a.strict || file.strict.unwrap_or(false),
            };
            cmd_format(&config, out, err)
        }
        Command::Check(a) => cmd_check(&a.bib, a.strict || file.strict.unwrap_or(false), out, err),
        Command::Scan(a) => cmd_scan(&a.tex, a.strict || file.strict.unwrap_or(false), out, err),
    }
}

fn load_file_config(path: &Path) -> Result<FileConfig, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    FileConfig::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Tally of what was reported on standard error.
#[derive(Debug, Default, Clone, Copy)]
struct Report {
    errors: usize,
    warnings: usize,
    syntax_errors: usize,
}

impl Report {
    fn emit(&mut self, err: &mut dyn Write, path: &Path, src: &str, d: &Diagnostic) {
        if d.is_error() {
            self.errors += 1;
            if d.kind.is_syntax() {
                self.syntax_errors += 1;
            }
        } else {
            self.warnings += 1;
        }
        let _ = writeln!(err, "{}", d.display_with(&path.display().to_string(), src));
    }

    fn exit_code(&self, strict: bool) -> i32 {
        if self.syntax_errors > 0 {
            EXIT_IO
        } else if self.errors > 0 || (strict && self.warnings > 0) {
            EXIT_CONTENT
        } else {
            EXIT_OK
        }
    }
}

struct Loaded {
    /// Raw entries and records, first occurrence of each key only.
    entries: Vec<(RawEntry, BibRecord, usize)>,
    paths: Vec<PathBuf>,
    sources: Vec<String>,
}

impl Loaded {
    fn record(&self, key: &str) -> Option<&BibRecord> {
        self.entries.iter().find(|(_, r, _)| r.key == key).map(|(_, r, _)| r)
    }

    fn records(&self) -> Vec<BibRecord> {
        self.entries.iter().map(|(_, r, _)| r.clone()).collect()
    }
}

fn load(paths: &[PathBuf], report: &mut Report, err: &mut dyn Write) -> Result<Loaded, i32> {
    let mut loaded = Loaded {
        entries: Vec::new(),
        paths: Vec::new(),
        sources: Vec::new(),
    };
    for path in paths {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(err, "{}: error: {e}", path.display());
                return Err(EXIT_IO);
            }
        };
        let file = loaded.paths.len();
        let bib = Bibliography::parse(&text);
        for d in &bib.diagnostics {
            report.emit(err, path, &text, d);
        }
        for (raw, rec) in bib.raw.entries.into_iter().zip(bib.records) {
            if loaded.record(&rec.key).is_some() {
                let d = Diagnostic::warning(
                    DiagnosticKind::DuplicateKey,
                    format!("duplicate key `{}`; keeping the first entry", rec.key),
                )
                .with_span(raw.source_span);
                report.emit(err, path, &text, &d);
                continue;
            }
            loaded.entries.push((raw, rec, file));
        }
        loaded.paths.push(path.clone());
        loaded.sources.push(text);
    }
    Ok(loaded)
}

fn style_for(config: &RunConfig) -> Result<StyleConfig, String> {
    let mut style = StyleConfig::default();
    if let Some(n) = config.max_authors {
        style = style.with_max_authors(n).map_err(|e| e.to_string())?;
    }
    if let Some(text) = &config.etal {
        style = style.with_etal_text(text);
    }
    Ok(style)
}

/// Escape characters that markdown would otherwise interpret.
pub fn escape_markdown(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        if matches!(c, '\\' | '`' | '*' | '_' | '[' | ']' | '<' | '>' | '#' | '|') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// Render the selected entries as `N. reference` lines.
pub fn cmd_format(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let style = match style_for(config) {
        Ok(s) => s,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_CONTENT;
        }
    };
    let mut report = Report::default();
    let db = match load(&config.bib_paths, &mut report, err) {
        Ok(db) => db,
        Err(code) => return code,
    };
    if report.syntax_errors > 0 {
        return EXIT_IO;
    }

    let index = match &config.selection {
        Selection::Tex(path) => {
            let text = match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(err, "{}: error: {e}", path.display());
                    return EXIT_IO;
                }
            };
            let (index, diags) = scan_citations(&text);
            for d in &diags {
                report.emit(err, path, &text, d);
            }
            index
        }
        Selection::Keys(keys) => {
            let keys: Vec<&str> = keys.iter().map(|k| k.trim()).filter(|k| !k.is_empty()).collect();
            if keys.is_empty() {
                let _ = writeln!(err, "error: no keys");
                return EXIT_CONTENT;
            }
            CitationIndex::from_keys(keys)
        }
        Selection::All => {
            CitationIndex::from_keys(db.entries.iter().map(|(_, r, _)| r.key.as_str()))
        }
    };

    let records = db.records();
    let (found, missing) = resolve(&index, &records);
    for key in &missing {
        let d = if config.strict {
            Diagnostic::error(DiagnosticKind::MissingKey, format!("no entry for cited key `{key}`"))
        } else {
            Diagnostic::warning(DiagnosticKind::MissingKey, format!("no entry for cited key `{key}`"))
        };
        report.emit(err, Path::new("<citations>"), "", &d);
    }

    let mut text = String::new();
    for (number, rec) in found {
        match render_reference(rec, &style) {
            Ok(line) => {
                let line = match config.output_format {
                    OutputFormat::Plain => line,
                    OutputFormat::Markdown => escape_markdown(&line),
                };
                text.push_str(&format!("{number}. {line}\n"));
            }
            Err(e) => {
                let kind = render_error_kind(&e);
                let d = if config.strict {
                    Diagnostic::error(kind, format!("{e}; reference {number} skipped"))
                } else {
                    Diagnostic::warning(kind, format!("{e}; reference {number} skipped"))
                };
                let (raw, _, file) = db
                    .entries
                    .iter()
                    .find(|(_, r, _)| r.key == rec.key)
                    .expect("resolved record comes from the database");
                report.emit(err, &db.paths[*file], &db.sources[*file], &d.with_span(raw.source_span));
            }
        }
    }

    let written = match &config.out_path {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_IO;
    }
    // Normalization warnings (odd dates, unknown commands) only fail strict runs.
    report.exit_code(config.strict)
}

fn render_error_kind(e: &RenderError) -> DiagnosticKind {
    match e {
        RenderError::MissingRequiredField { .. } => DiagnosticKind::MissingRequiredField,
        RenderError::ConflictingLocator { .. } => DiagnosticKind::ConflictingLocator,
        RenderError::InvalidRange { .. } => DiagnosticKind::InvalidRange,
    }
}

/// Parse, normalize and dry-render every entry, reporting all problems.
pub fn cmd_check(paths: &[PathBuf], strict: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut report = Report::default();
    let db = match load(paths, &mut report, err) {
        Ok(db) => db,
        Err(code) => return code,
    };
    let style = StyleConfig::default();
    for (raw, rec, file) in &db.entries {
        let (path, src) = (&db.paths[*file], &db.sources[*file]);
        for field in unknown_fields(raw) {
            let d = Diagnostic::warning(
                DiagnosticKind::UnknownField,
                format!("`{}`: field `{field}` is not used for {} entries", raw.key, rec.entry_type),
            )
            .with_span(raw.source_span);
            report.emit(err, path, src, &d);
        }
        if let Err(e) = render_reference(rec, &style) {
            let d = Diagnostic::error(render_error_kind(&e), e.to_string()).with_span(raw.source_span);
            report.emit(err, path, src, &d);
        }
    }
    let _ = writeln!(
        out,
        "{} entries, {} errors, {} warnings",
        db.entries.len(),
        report.errors,
        report.warnings
    );
    report.exit_code(strict)
}

/// Print `N key` for each cited key in citation order.
pub fn cmd_scan(path: &Path, strict: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "{}: error: {e}", path.display());
            return EXIT_IO;
        }
    };
    let (index, diags) = scan_citations(&text);
    let mut report = Report::default();
    for d in &diags {
        report.emit(err, path, &text, d);
    }
    let mut listing = String::new();
    for (i, key) in index.keys().iter().enumerate() {
        listing.push_str(&format!("{} {key}\n", i + 1));
    }
    if out.write_all(listing.as_bytes()).is_err() {
        return EXIT_IO;
    }
    if strict && !diags.is_empty() {
        EXIT_CONTENT
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markdown_escaping() {
        assert_eq!(escape_markdown("a_b [map]."), "a\\_b \\[map\\].");
    }

    #[test]
    fn file_config_parses_and_rejects_unknown_keys() {
        let c = FileConfig::parse("max_authors = 3\nformat = \"markdown\"\n").unwrap();
        assert_eq!(c.max_authors, Some(3));
        assert_eq!(c.format, Some(OutputFormat::Markdown));
        assert!(FileConfig::parse("colour = 1").is_err());
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["vanref", "frobnicate"], &mut out, &mut err), EXIT_IO);
        assert!(out.is_empty());
    }
}
