//! Tokenizer for `.bib` database text.
//!
//! The lexer is modal: outside an entry everything up to the next `@` is
//! free text (and `%` starts a comment running to end of line); inside an
//! entry it yields words, punctuation and delimited values until the
//! delimiter that opened the entry is closed again.

use std::fmt;

use thiserror::Error;

use crate::diag::Span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    /// `@type`, lowercased.
    EntryStart(String),
    /// `{` or `(` opening an entry body.
    Open,
    /// The delimiter closing the entry body.
    Close,
    /// Citation key, field name, macro name or bare number.
    Word(String),
    Equals,
    Comma,
    Hash,
    /// `{...}` value with the outer braces removed, inner braces preserved.
    Braced(String),
    /// `"..."` value with the quotes removed.
    Quoted(String),
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::EntryStart(t) => write!(f, "@{t}"),
            TokenKind::Open => f.write_str("{"),
            TokenKind::Close => f.write_str("}"),
            TokenKind::Word(w) => f.write_str(w),
            TokenKind::Equals => f.write_str("="),
            TokenKind::Comma => f.write_str(","),
            TokenKind::Hash => f.write_str("#"),
            TokenKind::Braced(v) | TokenKind::Quoted(v) => write!(f, "{v:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("unbalanced brace at byte {0}")]
    UnbalancedBrace(usize),
    #[error("unterminated string starting at byte {0}")]
    UnterminatedString(usize),
    #[error("unexpected end of input at byte {0}")]
    UnexpectedEof(usize),
    #[error("expected `{{` or `(` after entry type at byte {0}")]
    MissingDelimiter(usize),
    #[error("entry not closed before the next entry at byte {0}")]
    UnclosedEntry(usize),
}

impl LexError {
    pub fn position(&self) -> usize {
        match *self {
            LexError::UnbalancedBrace(p)
            | LexError::UnterminatedString(p)
            | LexError::UnexpectedEof(p)
            | LexError::MissingDelimiter(p)
            | LexError::UnclosedEntry(p) => p,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Outside,
    /// Just read `@type`; the opening delimiter comes next.
    AfterType { skip_body: bool },
    Inside { open: usize, close: u8 },
}

/// Pull-based lexer. After an error the caller decides where to resume via
/// [`Lexer::resume_at`].
pub struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    mode: Mode,
}

impl<'a> Lexer<'a> {
    pub fn new(src: &'a str) -> Self {
        Lexer {
            src,
            pos: 0,
            mode: Mode::Outside,
        }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    /// True while the lexer is inside an entry body.
    pub fn in_entry(&self) -> bool {
        !matches!(self.mode, Mode::Outside)
    }

    /// Abandon the current entry and continue scanning for the next `@`
    /// at or after `at`.
    pub fn resume_at(&mut self, at: usize) {
        let mut at = at.min(self.src.len());
        while !self.src.is_char_boundary(at) {
            at += 1;
        }
        self.pos = at;
        self.mode = Mode::Outside;
    }

    fn bytes(&self) -> &'a [u8] {
        self.src.as_bytes()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while let Some(b) = self.peek() {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn at_line_start(&self, at: usize) -> bool {
        self.bytes()[..at]
            .iter()
            .rev()
            .take_while(|&&b| b != b'\n')
            .all(|b| b.is_ascii_whitespace())
    }

    pub fn next_token(&mut self) -> Option<Result<Token, LexError>> {
        match self.mode {
            Mode::Outside => self.lex_outside(),
            Mode::AfterType { skip_body } => Some(self.lex_open(skip_body)),
            Mode::Inside { open, close } => Some(self.lex_inside(open, close)),
        }
    }

    fn lex_outside(&mut self) -> Option<Result<Token, LexError>> {
        let bytes = self.bytes();
        while self.pos < bytes.len() {
            match bytes[self.pos] {
                b'%' => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b'@' => {
                    let start = self.pos;
                    let mut end = start + 1;
                    while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
                        end += 1;
                    }
                    if end == start + 1 {
                        // stray `@` in free text
                        self.pos += 1;
                        continue;
                    }
                    let ty = self.src[start + 1..end].to_ascii_lowercase();
                    self.pos = end;
                    self.mode = Mode::AfterType {
                        skip_body: ty == "comment",
                    };
                    return Some(Ok(Token {
                        kind: TokenKind::EntryStart(ty),
                        span: Span::new(start, end),
                    }));
                }
                _ => self.pos += 1,
            }
        }
        None
    }

    fn lex_open(&mut self, skip_body: bool) -> Result<Token, LexError> {
        self.skip_ws();
        let start = self.pos;
        let close = match self.peek() {
            Some(b'{') => b'}',
            Some(b'(') => b')',
            None if skip_body => {
                self.mode = Mode::Outside;
                return Err(LexError::UnexpectedEof(start));
            }
            None => return Err(LexError::UnexpectedEof(start)),
            Some(_) if skip_body => {
                // `@comment` without a body comments out the rest of the line
                self.mode = Mode::Outside;
                while let Some(b) = self.peek() {
                    if b == b'\n' {
                        break;
                    }
                    self.pos += 1;
                }
                return Ok(Token {
                    kind: TokenKind::Close,
                    span: Span::new(start, self.pos),
                });
            }
            Some(_) => return Err(LexError::MissingDelimiter(start)),
        };
        self.pos += 1;
        if skip_body {
            let body_end = if close == b'}' {
                self.scan_braced(start)?
            } else {
                self.scan_parens(start)?
            };
            self.pos = body_end;
            self.mode = Mode::Outside;
            return Ok(Token {
                kind: TokenKind::Close,
                span: Span::new(start, body_end),
            });
        }
        self.mode = Mode::Inside { open: start, close };
        Ok(Token {
            kind: TokenKind::Open,
            span: Span::new(start, start + 1),
        })
    }

    /// Returns the offset just past the brace matching the one at `open`.
    fn scan_braced(&self, open: usize) -> Result<usize, LexError> {
        let bytes = self.bytes();
        let mut depth = 0usize;
        let mut i = open;
        while i < bytes.len() {
            match bytes[i] {
                b'{' => depth += 1,
                b'}' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(i + 1);
                    }
                }
                _ => {}
            }
            i += 1;
        }
        Err(LexError::UnbalancedBrace(open))
    }

    fn scan_parens(&self, open: usize) -> Result<usize, LexError> {
        let bytes = self.bytes();
        let mut braces = 0usize;
        let mut i = open + 1;
        while i < bytes.len() {
            match bytes[i] {
                b'{' => braces += 1,
                b'}' if braces == 0 => return Err(LexError::UnbalancedBrace(i)),
                b'}' => braces -= 1,
                b')' if braces == 0 => return Ok(i + 1),
                _ => {}
            }
            i += 1;
        }
        Err(LexError::UnexpectedEof(self.src.len()))
    }

    fn lex_inside(&mut self, open: usize, close: u8) -> Result<Token, LexError> {
        self.skip_ws();
        let start = self.pos;
        let Some(b) = self.peek() else {
            if close == b'}' {
                return Err(LexError::UnbalancedBrace(open));
            }
            return Err(LexError::UnexpectedEof(start));
        };
        let single = |kind| {
            Ok(Token {
                kind,
                span: Span::new(start, start + 1),
            })
        };
        if b == close {
            self.pos += 1;
            self.mode = Mode::Outside;
            return single(TokenKind::Close);
        }
        match b {
            b'=' => {
                self.pos += 1;
                single(TokenKind::Equals)
            }
            b',' => {
                self.pos += 1;
                single(TokenKind::Comma)
            }
            b'#' => {
                self.pos += 1;
                single(TokenKind::Hash)
            }
            b'{' => {
                let end = self.scan_braced(start)?;
                self.pos = end;
                Ok(Token {
                    kind: TokenKind::Braced(self.src[start + 1..end - 1].to_string()),
                    span: Span::new(start, end),
                })
            }
            b'}' => Err(LexError::UnbalancedBrace(start)),
            b'"' => {
                let end = self.scan_quoted(start)?;
                self.pos = end;
                Ok(Token {
                    kind: TokenKind::Quoted(self.src[start + 1..end - 1].to_string()),
                    span: Span::new(start, end),
                })
            }
            b'@' if self.at_line_start(start) => Err(LexError::UnclosedEntry(start)),
            _ => {
                let bytes = self.bytes();
                let mut end = start;
                while end < bytes.len() {
                    let c = bytes[end];
                    if c.is_ascii_whitespace()
                        || c == close
                        || matches!(c, b'{' | b'}' | b'"' | b',' | b'=' | b'#')
                    {
                        break;
                    }
                    end += 1;
                }
                self.pos = end;
                Ok(Token {
                    kind: TokenKind::Word(self.src[start..end].to_string()),
                    span: Span::new(start, end),
                })
            }
        }
    }

    fn scan_quoted(&self, open: usize) -> Result<usize, LexError> {
        let bytes = self.bytes();
        let mut depth = 0usize;
        let mut i = open + 1;
        while i < bytes.len() {
            match bytes[i] {
                b'{' => depth += 1,
                b'}' if depth == 0 => return Err(LexError::UnbalancedBrace(i)),
                b'}' => depth -= 1,
                b'"' if depth == 0 => return Ok(i + 1),
                _ => {}
            }
            i += 1;
        }
        if depth > 0 {
            Err(LexError::UnbalancedBrace(open))
        } else {
            Err(LexError::UnterminatedString(open))
        }
    }
}

/// Tokenize a whole database, stopping at the first lexical error.
pub fn tokenize(text: &str) -> Result<Vec<Token>, LexError> {
    let mut lexer = Lexer::new(text);
    let mut out = Vec::new();
    while let Some(tok) = lexer.next_token() {
        out.push(tok?);
    }
    if lexer.in_entry() {
        return Err(LexError::UnexpectedEof(text.len()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        tokenize(text).unwrap().into_iter().map(|t| t.kind).collect()
    }

    fn significant(text: &str) -> Vec<String> {
        kinds(text)
            .into_iter()
            .filter(|k| !matches!(k, TokenKind::Open | TokenKind::Close | TokenKind::Comma))
            .map(|k| match k {
                TokenKind::Braced(v) | TokenKind::Quoted(v) => v,
                other => other.to_string(),
            })
            .collect()
    }

    #[test]
    fn minimal_entry() {
        assert_eq!(
            significant("@article{k, title = {X}}"),
            vec!["@article", "k", "title", "=", "X"]
        );
    }

    #[test]
    fn patent_entry_start() {
        let toks = kinds("@patent{pagedas:flexible, inventor={Pagedas, Anthony C.}}");
        assert_eq!(toks[0], TokenKind::EntryStart("patent".into()));
        assert_eq!(toks[2], TokenKind::Word("pagedas:flexible".into()));
    }

    #[test]
    fn nested_braces_preserved() {
        let toks = kinds("@misc{k, note = {a {b} c}}");
        assert!(toks.contains(&TokenKind::Braced("a {b} c".into())));
    }

    #[test]
    fn quoted_value_with_braces_and_concatenation() {
        let toks = kinds(r#"@misc{k, note = "a {"} b" # x}"#);
        assert!(toks.contains(&TokenKind::Quoted(r#"a {"} b"#.into())));
        assert!(toks.contains(&TokenKind::Hash));
        assert!(toks.contains(&TokenKind::Word("x".into())));
    }

    #[test]
    fn parenthesized_entry() {
        let toks = kinds("@string(nejm = {N Engl J Med})");
        assert_eq!(toks.last(), Some(&TokenKind::Close));
        assert!(toks.contains(&TokenKind::Word("nejm".into())));
    }

    #[test]
    fn free_text_and_percent_comments_are_ignored() {
        let toks = kinds("junk text\n% @article{nope, a=b}\n@misc{k}");
        assert_eq!(toks[0], TokenKind::EntryStart("misc".into()));
        assert_eq!(toks.len(), 4);
    }

    #[test]
    fn comment_body_is_skipped() {
        let toks = kinds("@comment{ @article{x, y = {z}} } @misc{k}");
        assert_eq!(
            toks,
            vec![
                TokenKind::EntryStart("comment".into()),
                TokenKind::Close,
                TokenKind::EntryStart("misc".into()),
                TokenKind::Open,
                TokenKind::Word("k".into()),
                TokenKind::Close,
            ]
        );
    }

    #[test]
    fn unbalanced_brace_reports_opening_position() {
        let err = tokenize("@misc{k, title = {abc}").unwrap_err();
        assert_eq!(err, LexError::UnbalancedBrace(5));
    }

    #[test]
    fn unterminated_string() {
        let err = tokenize("@misc{k, title = \"abc").unwrap_err();
        assert_eq!(err, LexError::UnterminatedString(17));
    }

    #[test]
    fn eof_inside_entry() {
        assert_eq!(
            tokenize("@misc(k, title = x").unwrap_err(),
            LexError::UnexpectedEof(18)
        );
    }

    #[test]
    fn missing_delimiter() {
        assert_eq!(
            tokenize("@misc k").unwrap_err(),
            LexError::MissingDelimiter(6)
        );
    }

    #[test]
    fn entry_start_at_line_start_interrupts_unclosed_entry() {
        let err = tokenize("@misc{k, title = {a},\n@book{b, title={c}}").unwrap_err();
        assert_eq!(err, LexError::UnclosedEntry(22));
    }
}
