//! Citation-order numbering from `\cite{...}` commands in a manuscript.

use std::collections::HashMap;

use crate::diag::{Diagnostic, DiagnosticKind, Span};
use crate::model::BibRecord;

/// Cited keys numbered by first appearance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CitationIndex {
    order: Vec<String>,
    numbers: HashMap<String, usize>,
    occurrences: Vec<(String, usize)>,
}

impl CitationIndex {
    /// Record one occurrence of `key` at byte `offset`.
    pub fn cite(&mut self, key: &str, offset: usize) -> usize {
        self.occurrences.push((key.to_string(), offset));
        if let Some(&n) = self.numbers.get(key) {
            return n;
        }
        self.order.push(key.to_string());
        let n = self.order.len();
        self.numbers.insert(key.to_string(), n);
        n
    }

    /// Unique keys in first-appearance order.
    pub fn keys(&self) -> &[String] {
        &self.order
    }

    /// 1-based citation number.
    pub fn number(&self, key: &str) -> Option<usize> {
        self.numbers.get(key).copied()
    }

    /// Every occurrence as `(key, byte offset)`, in text order.
    pub fn occurrences(&self) -> &[(String, usize)] {
        &self.occurrences
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Number `keys` in the given order, as if each were cited once.
    pub fn from_keys<'a>(keys: impl IntoIterator<Item = &'a str>) -> Self {
        let mut index = CitationIndex::default();
        for k in keys {
            index.cite(k, 0);
        }
        index
    }
}

fn valid_key_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '.' | ':' | '-' | '*' | '_')
}

/// Find every `\cite{k1,k2,...}` outside `%` comments.
///
/// Keys are trimmed of surrounding whitespace. An optional `[...]` argument
/// before the key group is skipped. `\citep` and friends are not matched.
pub fn scan_citations(text: &str) -> (CitationIndex, Vec<Diagnostic>) {
    let mut index = CitationIndex::default();
    let mut diags = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'%' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'\\' => {
                let start = i;
                i += 1;
                if bytes.get(i) == Some(&b'%') || bytes.get(i) == Some(&b'\\') {
                    i += 1;
                    continue;
                }
                let name_end = bytes[i..]
                    .iter()
                    .position(|b| !b.is_ascii_alphabetic())
                    .map_or(bytes.len(), |p| i + p);
                let name = &text[i..name_end];
                i = name_end;
                if name != "cite" {
                    continue;
                }
                if let Some(next) = scan_group(text, start, i, &mut index, &mut diags) {
                    i = next;
                }
            }
            _ => i += 1,
        }
    }
    (index, diags)
}

fn skip_spaces(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

/// Parse the argument of a `\cite` starting at `i`; returns the offset after
/// the closing brace.
fn scan_group(
    text: &str,
    cmd_start: usize,
    i: usize,
    index: &mut CitationIndex,
    diags: &mut Vec<Diagnostic>,
) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut i = skip_spaces(bytes, i);
    if bytes.get(i) == Some(&b'[') {
        let close = text[i..].find(']')?;
        i = skip_spaces(bytes, i + close + 1);
    }
    if bytes.get(i) != Some(&b'{') {
        return None;
    }
    let open = i;
    let Some(close) = text[open..].find('}').map(|p| open + p) else {
        diags.push(
            Diagnostic::error(DiagnosticKind::MalformedKey, "unterminated \\cite group")
                .with_span(Span::new(cmd_start, text.len())),
        );
        return Some(text.len());
    };
    let body = &text[open + 1..close];
    if body.trim().is_empty() {
        diags.push(
            Diagnostic::error(DiagnosticKind::EmptyCiteGroup, "empty \\cite{} group")
                .with_span(Span::new(cmd_start, close + 1)),
        );
        return Some(close + 1);
    }
    let mut offset = open + 1;
    for raw in body.split(',') {
        let key = raw.trim();
        let key_offset = offset + (raw.len() - raw.trim_start().len());
        offset += raw.len() + 1;
        if key.is_empty() || !key.chars().all(valid_key_char) {
            diags.push(
                Diagnostic::error(
                    DiagnosticKind::MalformedKey,
                    format!("malformed citation key `{key}`"),
                )
                .with_span(Span::new(key_offset, key_offset + key.len())),
            );
            continue;
        }
        index.cite(key, key_offset);
    }
    Some(close + 1)
}

/// Cited records in number order, plus cited keys with no record.
///
/// Uncited records are left out; numbers stay as assigned in the text even
/// when a key is missing.
pub fn resolve<'a>(
    index: &CitationIndex,
    records: &'a [BibRecord],
) -> (Vec<(usize, &'a BibRecord)>, Vec<String>) {
    let by_key: HashMap<&str, &BibRecord> = records.iter().map(|r| (r.key.as_str(), r)).collect();
    let mut found = Vec::new();
    let mut missing = Vec::new();
    for (i, key) in index.keys().iter().enumerate() {
        match by_key.get(key.as_str()) {
            Some(rec) => found.push((i + 1, *rec)),
            None => missing.push(key.clone()),
        }
    }
    (found, missing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EntryType;
    use proptest::prelude::*;

    fn scan(text: &str) -> CitationIndex {
        let (index, diags) = scan_citations(text);
        assert!(diags.is_empty(), "{diags:?}");
        index
    }

    #[test]
    fn first_occurrence_order() {
        let index = scan(r"a\cite{x} b\cite{y} c\cite{x}");
        assert_eq!(index.keys(), ["x", "y"]);
        assert_eq!(index.number("x"), Some(1));
        assert_eq!(index.number("y"), Some(2));
        assert_eq!(index.occurrences().len(), 3);
    }

    #[test]
    fn leading_space_trimmed() {
        let index = scan(r"\cite{ tian.araki.ea:signature}");
        assert_eq!(index.keys(), ["tian.araki.ea:signature"]);
    }

    #[test]
    fn star_suffix_key() {
        let index = scan(r"\cite{halpern.ubel.ea:solid-organ*2}");
        assert_eq!(index.keys(), ["halpern.ubel.ea:solid-organ*2"]);
    }

    #[test]
    fn comma_list_in_place() {
        let index = scan(r"\cite{b} \cite{a, b ,c}");
        assert_eq!(index.keys(), ["b", "a", "c"]);
    }

    #[test]
    fn comments_and_variants_ignored() {
        let index = scan("% \\cite{hidden}\n\\citep{p} 50\\% \\cite{shown} \\citet{q}");
        assert_eq!(index.keys(), ["shown"]);
    }

    #[test]
    fn optional_argument_skipped() {
        let index = scan(r"\cite[p.~5]{k}");
        assert_eq!(index.keys(), ["k"]);
    }

    #[test]
    fn empty_group_and_malformed_key() {
        let (index, diags) = scan_citations(r"\cite{} \cite{a,,b} \cite{bad key}");
        assert_eq!(index.keys(), ["a", "b"]);
        let kinds: Vec<_> = diags.iter().map(|d| d.kind).collect();
        assert_eq!(
            kinds,
            vec![
                DiagnosticKind::EmptyCiteGroup,
                DiagnosticKind::MalformedKey,
                DiagnosticKind::MalformedKey
            ]
        );
        assert!(diags.iter().all(|d| d.span.is_some()));
    }

    #[test]
    fn occurrence_offsets() {
        let text = r"ab\cite{ x}";
        let index = scan(text);
        let (_, off) = &index.occurrences()[0];
        assert_eq!(&text[*off..*off + 1], "x");
    }

    fn rec(key: &str) -> BibRecord {
        BibRecord::empty(key, EntryType::Misc)
    }

    #[test]
    fn resolve_pairs_and_missing() {
        let db = vec![rec("x"), rec("z")];
        let index = CitationIndex::from_keys(["x"]);
        let (found, missing) = resolve(&index, &db);
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].0, found[0].1.key.as_str()), (1, "x"));
        assert!(missing.is_empty());

        let index = CitationIndex::from_keys(["y", "x"]);
        let (found, missing) = resolve(&index, &db);
        assert_eq!((found[0].0, found[0].1.key.as_str()), (2, "x"));
        assert_eq!(missing, vec!["y".to_string()]);
    }

    proptest! {
        #[test]
        fn generated_markers_round_trip(keys in prop::collection::vec("[a-z][a-z0-9.:*-]{0,10}", 0..30)) {
            let mut uniq: Vec<String> = Vec::new();
            for k in keys {
                if !uniq.contains(&k) {
                    uniq.push(k);
                }
            }
            let text: String = uniq.iter().map(|k| format!("Text \\cite{{{k}}}.\n")).collect();
            let (index, diags) = scan_citations(&text);
            prop_assert!(diags.is_empty());
            prop_assert_eq!(index.keys(), uniq.as_slice());
            let again = scan_citations(&text).0;
            prop_assert_eq!(again, index);
        }
    }
}
