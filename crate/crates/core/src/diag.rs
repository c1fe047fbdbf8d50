//! Positioned diagnostics shared by every processing stage.

use std::fmt;

/// Byte range into the source text a diagnostic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn at(pos: usize) -> Self {
        Span { start: pos, end: pos }
    }

    /// 1-based line and column (in chars) of `start` within `src`.
    pub fn line_col(&self, src: &str) -> (usize, usize) {
        let upto = floor_char_boundary(src, self.start.min(src.len()));
        let before = &src[..upto];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }
}

fn floor_char_boundary(s: &str, mut i: usize) -> usize {
    while i > 0 && !s.is_char_boundary(i) {
        i -= 1;
    }
    i
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Warning => f.write_str("warning"),
            Severity::Error => f.write_str("error"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagnosticKind {
    // database syntax
    UnbalancedBrace,
    UnterminatedString,
    UnexpectedEof,
    MalformedEntry,
    DuplicateKey,
    DuplicateField,
    UndefinedMacro,
    UnknownCommand,
    // record normalization
    UnknownEntryType,
    UnknownField,
    UnparsedDate,
    MissingYear,
    EmptyName,
    // rendering
    MissingRequiredField,
    ConflictingLocator,
    InvalidRange,
    // citations
    EmptyCiteGroup,
    MalformedKey,
    MissingKey,
}

impl DiagnosticKind {
    /// Syntax-level failures in the database text.
    pub fn is_syntax(self) -> bool {
        matches!(
            self,
            DiagnosticKind::UnbalancedBrace
                | DiagnosticKind::UnterminatedString
                | DiagnosticKind::UnexpectedEof
                | DiagnosticKind::MalformedEntry
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub span: Option<Span>,
    pub message: String,
}

impl Diagnostic {
    pub fn error(kind: DiagnosticKind, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            kind,
            span: None,
            message: message.into(),
        }
    }

    pub fn warning(kind: DiagnosticKind, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            kind,
            span: None,
            message: message.into(),
        }
    }

    pub fn with_span(mut self, span: Span) -> Self {
        self.span = Some(span);
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    /// `path:line:col: severity: message`, or without the location when
    /// the diagnostic carries no span.
    pub fn display_with(&self, path: &str, src: &str) -> String {
        match self.span {
            Some(span) => {
                let (line, col) = span.line_col(src);
                format!("{path}:{line}:{col}: {}: {}", self.severity, self.message)
            }
            None => format!("{path}: {}: {}", self.severity, self.message),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.span {
            Some(span) => write!(f, "{} at byte {}: {}", self.severity, span.start, self.message),
            None => write!(f, "{}: {}", self.severity, self.message),
        }
    }
}
