//! `.bib` database syntax: tokenizing, parsing into raw entries, string
//! macros, and serialization back to text.

mod latex;
mod lexer;

pub use latex::{strip_latex, strip_latex_with_diagnostics};
pub use lexer::{tokenize, LexError, Lexer, Token, TokenKind};

use std::collections::HashSet;

use indexmap::IndexMap;

use crate::diag::{Diagnostic, DiagnosticKind, Span};

/// One database record as written: type, key and flat field values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEntry {
    pub entry_type: String,
    pub key: String,
    /// Lowercased field name to expanded, whitespace-normalized value.
    pub fields: IndexMap<String, String>,
    pub source_span: Span,
}

impl RawEntry {
    pub fn new(entry_type: impl Into<String>, key: impl Into<String>) -> Self {
        RawEntry {
            entry_type: entry_type.into(),
            key: key.into(),
            fields: IndexMap::new(),
            source_span: Span::default(),
        }
    }

    pub fn with_field(mut self, name: &str, value: &str) -> Self {
        self.fields
            .insert(name.to_ascii_lowercase(), normalize_whitespace(value));
        self
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.fields.get(name).map(String::as_str)
    }
}

const MONTHS: [(&str, &str); 12] = [
    ("jan", "January"),
    ("feb", "February"),
    ("mar", "March"),
    ("apr", "April"),
    ("may", "May"),
    ("jun", "June"),
    ("jul", "July"),
    ("aug", "August"),
    ("sep", "September"),
    ("oct", "October"),
    ("nov", "November"),
    ("dec", "December"),
];

/// `@string` definitions plus the predefined month abbreviations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroTable {
    defs: IndexMap<String, String>,
}

impl Default for MacroTable {
    fn default() -> Self {
        Self::new()
    }
}

impl MacroTable {
    pub fn new() -> Self {
        let defs = MONTHS
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        MacroTable { defs }
    }

    pub fn define(&mut self, name: &str, value: String) {
        self.defs.insert(name.to_ascii_lowercase(), value);
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.defs.get(&name.to_ascii_lowercase()).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.defs.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

/// One operand of a `#`-concatenated value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValuePiece {
    Literal(String),
    Number(String),
    Macro { name: String, span: Span },
}

impl MacroTable {
    /// Flatten a value expression. Undefined macros expand to the empty
    /// string and are reported.
    pub fn expand(&self, pieces: &[ValuePiece], diags: &mut Vec<Diagnostic>) -> String {
        let mut out = String::new();
        for piece in pieces {
            match piece {
                ValuePiece::Literal(s) | ValuePiece::Number(s) => out.push_str(s),
                ValuePiece::Macro { name, span } => match self.get(name) {
                    Some(v) => out.push_str(v),
                    None => diags.push(
                        Diagnostic::warning(
                            DiagnosticKind::UndefinedMacro,
                            format!("undefined macro `{name}`"),
                        )
                        .with_span(*span),
                    ),
                },
            }
        }
        normalize_whitespace(&out)
    }
}

/// Result of parsing a database text.
#[derive(Debug, Clone, Default)]
pub struct ParsedDatabase {
    pub entries: Vec<RawEntry>,
    pub macros: MacroTable,
    pub diagnostics: Vec<Diagnostic>,
}

impl ParsedDatabase {
    pub fn get(&self, key: &str) -> Option<&RawEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn has_syntax_errors(&self) -> bool {
        self.diagnostics.iter().any(|d| d.kind.is_syntax())
    }
}

/// Collapse whitespace runs to one space and trim both ends.
pub fn normalize_whitespace(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for word in s.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

#[derive(Debug)]
enum EntryError {
    Lex(LexError),
    Grammar { message: String, span: Span },
}

impl From<LexError> for EntryError {
    fn from(e: LexError) -> Self {
        EntryError::Lex(e)
    }
}

enum Parsed {
    Entry(RawEntry),
    Macro(String, String),
    Skipped,
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    macros: MacroTable,
    diags: Vec<Diagnostic>,
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Result<Token, EntryError> {
        match self.lexer.next_token() {
            Some(tok) => Ok(tok?),
            None => Err(LexError::UnexpectedEof(self.lexer.position()).into()),
        }
    }

    fn unexpected(tok: &Token, wanted: &str) -> EntryError {
        EntryError::Grammar {
            message: format!("expected {wanted}, found `{}`", tok.kind),
            span: tok.span,
        }
    }

    fn value(&mut self) -> Result<(Vec<ValuePiece>, Token), EntryError> {
        let mut pieces = Vec::new();
        loop {
            let tok = self.next()?;
            let piece = match tok.kind {
                TokenKind::Braced(s) | TokenKind::Quoted(s) => ValuePiece::Literal(s),
                TokenKind::Word(w) if w.bytes().all(|b| b.is_ascii_digit()) => {
                    ValuePiece::Number(w)
                }
                TokenKind::Word(w) => ValuePiece::Macro {
                    name: w,
                    span: tok.span,
                },
                _ => return Err(Self::unexpected(&tok, "a field value")),
            };
            pieces.push(piece);
            let after = self.next()?;
            if after.kind != TokenKind::Hash {
                return Ok((pieces, after));
            }
        }
    }

    fn entry(&mut self, entry_type: String, start: Span) -> Result<Parsed, EntryError> {
        let open = self.next()?;
        if entry_type == "comment" {
            return Ok(Parsed::Skipped);
        }
        if open.kind != TokenKind::Open {
            return Err(Self::unexpected(&open, "`{`"));
        }
        match entry_type.as_str() {
            "preamble" => {
                let (_, after) = self.value()?;
                if after.kind != TokenKind::Close {
                    return Err(Self::unexpected(&after, "end of @preamble"));
                }
                Ok(Parsed::Skipped)
            }
            "string" => {
                let name = self.next()?;
                let TokenKind::Word(name) = name.kind else {
                    return Err(Self::unexpected(&name, "a macro name"));
                };
                let eq = self.next()?;
                if eq.kind != TokenKind::Equals {
                    return Err(Self::unexpected(&eq, "`=`"));
                }
                let (pieces, mut after) = self.value()?;
                if after.kind == TokenKind::Comma {
                    after = self.next()?;
                }
                if after.kind != TokenKind::Close {
                    return Err(Self::unexpected(&after, "end of @string"));
                }
                let value = self.macros.expand(&pieces, &mut self.diags);
                Ok(Parsed::Macro(name, value))
            }
            _ => self.regular_entry(entry_type, start),
        }
    }

    fn regular_entry(&mut self, entry_type: String, start: Span) -> Result<Parsed, EntryError> {
        let key_tok = self.next()?;
        let key = match key_tok.kind {
            TokenKind::Word(ref k) => k.clone(),
            _ => return Err(Self::unexpected(&key_tok, "a citation key")),
        };
        let mut entry = RawEntry::new(entry_type, key);
        let mut tok = self.next()?;
        loop {
            match tok.kind {
                TokenKind::Close => break,
                TokenKind::Comma => {}
                _ => return Err(Self::unexpected(&tok, "`,` or end of entry")),
            }
            let name_tok = self.next()?;
            let name = match name_tok.kind {
                TokenKind::Close => {
                    tok = name_tok;
                    break;
                }
                TokenKind::Word(ref n) => n.to_ascii_lowercase(),
                _ => return Err(Self::unexpected(&name_tok, "a field name")),
            };
            let eq = self.next()?;
            if eq.kind != TokenKind::Equals {
                return Err(Self::unexpected(&eq, "`=`"));
            }
            let (pieces, after) = self.value()?;
            let value = self.macros.expand(&pieces, &mut self.diags);
            if entry.fields.contains_key(&name) {
                self.diags.push(
                    Diagnostic::error(
                        DiagnosticKind::DuplicateField,
                        format!("duplicate field `{name}` in entry `{}`", entry.key),
                    )
                    .with_span(name_tok.span),
                );
            } else {
                entry.fields.insert(name, value);
            }
            tok = after;
        }
        entry.source_span = Span::new(start.start, tok.span.end);
        Ok(Parsed::Entry(entry))
    }
}

/// Parse database text into entries in file order.
///
/// Malformed entries are skipped with a positioned diagnostic and parsing
/// resumes at the next `@`. Duplicate keys keep the first entry.
pub fn parse_database(text: &str) -> ParsedDatabase {
    let mut parser = Parser {
        lexer: Lexer::new(text),
        macros: MacroTable::new(),
        diags: Vec::new(),
    };
    let mut entries: Vec<RawEntry> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();

    while let Some(tok) = parser.lexer.next_token() {
        let tok = match tok {
            Ok(t) => t,
            Err(e) => {
                parser.diags.push(lex_diagnostic(e));
                parser.lexer.resume_at(e.position() + 1);
                continue;
            }
        };
        let TokenKind::EntryStart(entry_type) = tok.kind else {
            // only reachable after a recovery left a stray token
            continue;
        };
        match parser.entry(entry_type, tok.span) {
            Ok(Parsed::Entry(entry)) => {
                if seen.contains(&entry.key) {
                    parser.diags.push(
                        Diagnostic::warning(
                            DiagnosticKind::DuplicateKey,
                            format!("duplicate key `{}`; keeping the first entry", entry.key),
                        )
                        .with_span(entry.source_span),
                    );
                } else {
                    seen.insert(entry.key.clone());
                    entries.push(entry);
                }
            }
            Ok(Parsed::Macro(name, value)) => parser.macros.define(&name, value),
            Ok(Parsed::Skipped) => {}
            Err(EntryError::Lex(e)) => {
                parser.diags.push(lex_diagnostic(e));
                let resume = match e {
                    LexError::UnclosedEntry(p) => p,
                    _ => e.position().max(tok.span.start) + 1,
                };
                parser.lexer.resume_at(resume);
            }
            Err(EntryError::Grammar { message, span }) => {
                parser.diags.push(
                    Diagnostic::error(
                        DiagnosticKind::MalformedEntry,
                        format!("malformed entry: {message}"),
                    )
                    .with_span(span),
                );
                parser.lexer.resume_at(span.start.max(tok.span.start + 1));
            }
        }
    }

    ParsedDatabase {
        entries,
        macros: parser.macros,
        diagnostics: parser.diags,
    }
}

fn lex_diagnostic(e: LexError) -> Diagnostic {
    let kind = match e {
        LexError::UnbalancedBrace(_) => DiagnosticKind::UnbalancedBrace,
        LexError::UnterminatedString(_) => DiagnosticKind::UnterminatedString,
        LexError::UnexpectedEof(_) => DiagnosticKind::UnexpectedEof,
        LexError::MissingDelimiter(_) | LexError::UnclosedEntry(_) => {
            DiagnosticKind::MalformedEntry
        }
    };
    Diagnostic::error(kind, e.to_string()).with_span(Span::at(e.position()))
}

/// Write entries back out as `.bib` text with brace-delimited values.
pub fn serialize(entries: &[RawEntry]) -> String {
    let mut out = String::new();
    for (i, entry) in entries.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push('@');
        out.push_str(&entry.entry_type);
        out.push('{');
        out.push_str(&entry.key);
        out.push_str(",\n");
        for (name, value) in &entry.fields {
            out.push_str("  ");
            out.push_str(name);
            out.push_str(" = {");
            out.push_str(value);
            out.push_str("},\n");
        }
        out.push_str("}\n");
    }
    out
}
