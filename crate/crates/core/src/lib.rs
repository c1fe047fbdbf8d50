//! Parse BibTeX databases and render numbered Vancouver-style (NLM)
//! reference lists.
//!
//! The pipeline has four stages, each usable on its own:
//!
//! - [`syntax`] turns `.bib` text into [`RawEntry`] values with flat,
//!   macro-expanded field strings;
//! - [`model`] normalizes a raw entry into a typed [`BibRecord`] with
//!   structured names, dates and pagination;
//! - [`render`] formats a record as a reference string;
//! - [`cite`] numbers cited keys by first appearance in a manuscript.
//!
//! ```
//! use vanref::{Bibliography, StyleConfig, render_reference};
//!
//! let bib = Bibliography::parse(r#"
//! @article{halpern,
//!   author  = {Halpern, Scott D. and Ubel, Peter A. and Caplan, Arthur L.},
//!   title   = {Solid-organ transplantation in {HIV}-infected patients},
//!   journal = {N Engl J Med},
//!   year = 2002, month = jul, day = 25,
//!   volume = 347, number = 4, pages = {284--287},
//! }"#);
//! let rec = bib.get("halpern").unwrap();
//! assert_eq!(
//!     render_reference(rec, &StyleConfig::default()).unwrap(),
//!     "Halpern SD, Ubel PA, Caplan AL. Solid-organ transplantation in \
//!      HIV-infected patients. N Engl J Med. 2002 Jul 25;347(4):284-7."
//! );
//! ```

pub mod cite;
pub mod cli;
pub mod corpus;
pub mod diag;
pub mod model;
pub mod render;
pub mod syntax;

pub use cite::{resolve, scan_citations, CitationIndex};
pub use diag::{Diagnostic, DiagnosticKind, Severity, Span};
pub use model::{normalize, BibRecord, EntryType, PartialDate, PersonName};
pub use render::{render_reference, RenderError, StyleConfig};
pub use syntax::{parse_database, ParsedDatabase, RawEntry};

/// A parsed and normalized database.
#[derive(Debug, Clone)]
pub struct Bibliography {
    pub raw: ParsedDatabase,
    /// One record per raw entry, in file order.
    pub records: Vec<BibRecord>,
    /// Syntax diagnostics followed by normalization diagnostics.
    pub diagnostics: Vec<Diagnostic>,
}

impl Bibliography {
    pub fn parse(text: &str) -> Self {
        let raw = parse_database(text);
        let mut diagnostics = raw.diagnostics.clone();
        let records = raw
            .entries
            .iter()
            .map(|e| {
                let n = normalize(e);
                diagnostics.extend(n.diagnostics);
                n.record
            })
            .collect();
        Bibliography {
            raw,
            records,
            diagnostics,
        }
    }

    /// Merge several databases; on duplicate keys the earlier one wins.
    pub fn parse_many<'a>(texts: impl IntoIterator<Item = &'a str>) -> Self {
        let mut merged: Option<Bibliography> = None;
        for text in texts {
            let next = Bibliography::parse(text);
            match merged.as_mut() {
                None => merged = Some(next),
                Some(acc) => {
                    acc.diagnostics.extend(next.diagnostics);
                    for (raw, rec) in next.raw.entries.into_iter().zip(next.records) {
                        if acc.get(&rec.key).is_some() {
                            acc.diagnostics.push(
                                Diagnostic::warning(
                                    DiagnosticKind::DuplicateKey,
                                    format!("duplicate key `{}`; keeping the first entry", rec.key),
                                )
                                .with_span(raw.source_span),
                            );
                            continue;
                        }
                        acc.raw.entries.push(raw);
                        acc.records.push(rec);
                    }
                }
            }
        }
        merged.unwrap_or_else(|| Bibliography::parse(""))
    }

    pub fn get(&self, key: &str) -> Option<&BibRecord> {
        self.records.iter().find(|r| r.key == key)
    }
}
