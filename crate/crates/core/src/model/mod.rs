//! Typed bibliographic records built from raw database entries.

mod date;
mod names;
mod pages;

pub use date::{parse_date, PartialDate};
pub use names::{initials, parse_names, ContributorList, NameError, PersonName, Role};
pub use pages::{complete_last_page, parse_pages, PageExtent, PageKind};

use std::fmt;

use crate::diag::{Diagnostic, DiagnosticKind};
use crate::syntax::{strip_latex_with_diagnostics, RawEntry};

/// Normalized entry type; selects the rendering template.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntryType {
    Article,
    Book,
    Chapter,
    Proceedings,
    InProceedings,
    TechReport,
    Dissertation,
    Patent,
    Newspaper,
    Audiovisual,
    Map,
    Dictionary,
    CdRom,
    WebJournal,
    WebMonograph,
    WebPage,
    WebDatabase,
    Misc,
}

impl EntryType {
    pub const ALL: [EntryType; 18] = [
        EntryType::Article,
        EntryType::Book,
        EntryType::Chapter,
        EntryType::Proceedings,
        EntryType::InProceedings,
        EntryType::TechReport,
        EntryType::Dissertation,
        EntryType::Patent,
        EntryType::Newspaper,
        EntryType::Audiovisual,
        EntryType::Map,
        EntryType::Dictionary,
        EntryType::CdRom,
        EntryType::WebJournal,
        EntryType::WebMonograph,
        EntryType::WebPage,
        EntryType::WebDatabase,
        EntryType::Misc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EntryType::Article => "article",
            EntryType::Book => "book",
            EntryType::Chapter => "chapter",
            EntryType::Proceedings => "proceedings",
            EntryType::InProceedings => "inproceedings",
            EntryType::TechReport => "techreport",
            EntryType::Dissertation => "dissertation",
            EntryType::Patent => "patent",
            EntryType::Newspaper => "newspaper",
            EntryType::Audiovisual => "audiovisual",
            EntryType::Map => "map",
            EntryType::Dictionary => "dictionary",
            EntryType::CdRom => "cdrom",
            EntryType::WebJournal => "webjournal",
            EntryType::WebMonograph => "webmonograph",
            EntryType::WebPage => "webpage",
            EntryType::WebDatabase => "webdatabase",
            EntryType::Misc => "misc",
        }
    }

    /// Journal-style records whose locator is volume/issue/pages.
    pub fn is_journal_family(self) -> bool {
        matches!(self, EntryType::Article | EntryType::WebJournal)
    }

    /// Fields the style reads for this type, beyond the common ones.
    fn specific_fields(self) -> &'static [&'static str] {
        const JOURNAL: &[&str] = &[
            "author", "organization", "title", "journal", "volume", "number", "issue",
            "volumesupplement", "issuesupplement", "volumepart", "issuepart", "pages",
            "epub", "pmid", "retractionof", "retractionin", "erratumin", "republishedfrom",
            "type", "inpress", "continuous", "medium",
        ];
        const PUBLISHED: &[&str] = &[
            "author", "organization", "editor", "compiler", "title", "edition", "address",
            "location", "publisher", "medium",
        ];
        match self {
            EntryType::Article | EntryType::WebJournal => JOURNAL,
            EntryType::Book
            | EntryType::WebMonograph
            | EntryType::Audiovisual
            | EntryType::CdRom => PUBLISHED,
            EntryType::Map => &[
                "cartographer", "author", "organization", "title", "edition", "address",
                "location", "publisher", "medium",
            ],
            EntryType::Dictionary => &[
                "author", "organization", "editor", "title", "edition", "address", "location",
                "publisher", "term", "pages",
            ],
            EntryType::Chapter | EntryType::InProceedings => &[
                "author", "organization", "editor", "title", "booktitle", "conference",
                "conferencedate", "conferenceplace", "address", "location", "publisher",
                "edition", "pages",
            ],
            EntryType::Proceedings => &[
                "editor", "organization", "author", "title", "conference", "conferencedate",
                "conferenceplace", "address", "location", "publisher", "edition",
            ],
            EntryType::TechReport => &[
                "author", "organization", "editor", "title", "affiliation", "type", "address",
                "location", "institution", "publisher", "number", "contract", "sponsor",
            ],
            EntryType::Dissertation => &[
                "author", "title", "medium", "address", "location", "school", "publisher",
            ],
            EntryType::Patent => &["inventor", "assignee", "author", "title", "country", "number"],
            EntryType::Newspaper => &[
                "author", "organization", "title", "journal", "section", "pages", "column",
            ],
            EntryType::WebPage | EntryType::WebDatabase => &[
                "author", "organization", "editor", "title", "medium", "address", "location",
                "publisher", "part", "extent",
            ],
            EntryType::Misc => &[
                "author", "organization", "editor", "title", "address",
                "location", "publisher", "medium", "pages",
            ],
        }
    }

    pub fn knows_field(self, name: &str) -> bool {
        COMMON_FIELDS.contains(&name) || self.specific_fields().contains(&name)
    }
}

impl fmt::Display for EntryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Accepted on every entry type.
const COMMON_FIELDS: &[&str] = &[
    "year", "month", "day", "date", "url", "updated", "lastchecked", "cited", "urldate",
    "language", "note", "abstract", "keywords", "doi", "isbn", "issn", "annote", "crossref",
];

/// Map a raw `@type` plus disambiguating fields onto [`EntryType`].
///
/// Total: unknown types become [`EntryType::Misc`] with a warning.
pub fn map_entry_type(raw: &RawEntry) -> (EntryType, Option<Diagnostic>) {
    let online = raw.get("url").is_some() && raw.get("medium").is_some();
    let ty = match raw.entry_type.as_str() {
        "article" if online => EntryType::WebJournal,
        "article" => EntryType::Article,
        "book" | "booklet" | "monograph" if online => EntryType::WebMonograph,
        "book" | "booklet" | "monograph" => EntryType::Book,
        "inbook" | "incollection" | "chapter" => EntryType::Chapter,
        "proceedings" => EntryType::Proceedings,
        "inproceedings" | "conference" => EntryType::InProceedings,
        "techreport" | "report" => EntryType::TechReport,
        "phdthesis" | "mastersthesis" | "thesis" | "dissertation" => EntryType::Dissertation,
        "patent" => EntryType::Patent,
        "newspaper" => EntryType::Newspaper,
        "audiovisual" | "video" => EntryType::Audiovisual,
        "map" => EntryType::Map,
        "dictionary" => EntryType::Dictionary,
        "cdrom" => EntryType::CdRom,
        "database" => EntryType::WebDatabase,
        "webpage" | "online" | "electronic" | "www" => {
            if raw
                .get("medium")
                .is_some_and(|m| m.to_lowercase().contains("database"))
            {
                EntryType::WebDatabase
            } else {
                EntryType::WebPage
            }
        }
        "misc" => EntryType::Misc,
        other => {
            return (
                EntryType::Misc,
                Some(
                    Diagnostic::warning(
                        DiagnosticKind::UnknownEntryType,
                        format!("unknown entry type `@{other}` for `{}`; rendered as misc", raw.key),
                    )
                    .with_span(raw.source_span),
                ),
            )
        }
    };
    (ty, None)
}

/// A normalized record. Every rendered element reads from exactly one
/// field here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BibRecord {
    pub key: String,
    pub entry_type: EntryType,
    /// Ordered by role: authors, organizations, editors, compilers,
    /// inventors, assignees, cartographers.
    pub contributors: Vec<ContributorList>,
    pub title: Option<String>,
    pub journal: Option<String>,
    pub booktitle: Option<String>,
    pub volume: Option<String>,
    pub issue: Option<String>,
    pub supplement_of_volume: Option<String>,
    pub supplement_of_issue: Option<String>,
    pub part_of_volume: Option<String>,
    pub part_of_issue: Option<String>,
    pub pages: Option<PageExtent>,
    pub date: PartialDate,
    pub date_epub: Option<PartialDate>,
    pub place: Option<String>,
    pub publisher: Option<String>,
    pub edition: Option<String>,
    pub pmid: Option<String>,
    pub retraction_of: Option<String>,
    pub retraction_in: Option<String>,
    pub erratum_in: Option<String>,
    pub corrected_republished_from: Option<String>,
    pub sponsor: Option<String>,
    pub report_number: Option<String>,
    pub contract_number: Option<String>,
    /// `letter`, `abstract`, or a report kind such as `Final report`.
    pub article_type: Option<String>,
    pub language_note: Option<String>,
    pub url: Option<String>,
    pub medium_bracket: Option<String>,
    pub updated: Option<PartialDate>,
    pub lastchecked: Option<PartialDate>,
    pub part_title: Option<String>,
    pub extent_text: Option<String>,
    pub conference_name: Option<String>,
    pub conference_date: Option<PartialDate>,
    pub conference_place: Option<String>,
    pub defined_term: Option<String>,
    pub term_pages: Option<PageExtent>,
    pub country: Option<String>,
    pub patent_number: Option<String>,
    pub section: Option<String>,
    pub column: Option<String>,
    pub affiliation: Option<String>,
    pub in_press: bool,
    /// Journal paginated continuously through the volume: month and issue
    /// are left out of the reference.
    pub continuous_pagination: bool,
}

impl BibRecord {
    pub fn empty(key: &str, entry_type: EntryType) -> Self {
        BibRecord {
            key: key.to_string(),
            entry_type,
            contributors: Vec::new(),
            title: None,
            journal: None,
            booktitle: None,
            volume: None,
            issue: None,
            supplement_of_volume: None,
            supplement_of_issue: None,
            part_of_volume: None,
            part_of_issue: None,
            pages: None,
            date: PartialDate::default(),
            date_epub: None,
            place: None,
            publisher: None,
            edition: None,
            pmid: None,
            retraction_of: None,
            retraction_in: None,
            erratum_in: None,
            corrected_republished_from: None,
            sponsor: None,
            report_number: None,
            contract_number: None,
            article_type: None,
            language_note: None,
            url: None,
            medium_bracket: None,
            updated: None,
            lastchecked: None,
            part_title: None,
            extent_text: None,
            conference_name: None,
            conference_date: None,
            conference_place: None,
            defined_term: None,
            term_pages: None,
            country: None,
            patent_number: None,
            section: None,
            column: None,
            affiliation: None,
            in_press: false,
            continuous_pagination: false,
        }
    }

    pub fn contributors_with(&self, role: Role) -> Option<&ContributorList> {
        self.contributors.iter().find(|c| c.role == role)
    }
}

/// Normalization output: the record plus any warnings raised on the way.
#[derive(Debug, Clone)]
pub struct Normalized {
    pub record: BibRecord,
    pub diagnostics: Vec<Diagnostic>,
}

fn truthy(v: &str) -> bool {
    matches!(v.trim().to_ascii_lowercase().as_str(), "true" | "yes" | "1" | "on")
}

const ROLE_ORDER: [Role; 7] = [
    Role::Author,
    Role::Organization,
    Role::Editor,
    Role::Compiler,
    Role::Inventor,
    Role::Assignee,
    Role::Cartographer,
];

/// Build a typed record from a raw entry.
pub fn normalize(raw: &RawEntry) -> Normalized {
    let mut diags = Vec::new();
    let (entry_type, type_diag) = map_entry_type(raw);
    diags.extend(type_diag);
    let mut rec = BibRecord::empty(&raw.key, entry_type);
    let span = raw.source_span;

    let text = |name: &str, diags: &mut Vec<Diagnostic>| -> Option<String> {
        let value = raw.get(name)?;
        let (plain, d) = strip_latex_with_diagnostics(value);
        diags.extend(d.into_iter().map(|d| d.with_span(span)));
        (!plain.is_empty()).then_some(plain)
    };
    let date_field = |name: &str, value: Option<String>, diags: &mut Vec<Diagnostic>| {
        let value = value?;
        let d = parse_date(&value);
        if d.is_raw() {
            diags.push(
                Diagnostic::warning(
                    DiagnosticKind::UnparsedDate,
                    format!("`{}`: could not parse {name} `{value}`; emitted verbatim", raw.key),
                )
                .with_span(span),
            );
        }
        Some(d)
    };

    for role in ROLE_ORDER {
        let Some(value) = raw.get(role.field_name()) else {
            continue;
        };
        match parse_names(value, role) {
            Ok(list) => rec.contributors.push(list),
            Err(e) => diags.push(
                Diagnostic::error(
                    DiagnosticKind::EmptyName,
                    format!("`{}`: {role} field: {e}", raw.key),
                )
                .with_span(span),
            ),
        }
    }

    rec.title = text("title", &mut diags);
    rec.journal = text("journal", &mut diags);
    rec.booktitle = text("booktitle", &mut diags);
    rec.volume = text("volume", &mut diags);
    let number = text("number", &mut diags);
    match entry_type {
        EntryType::TechReport => rec.report_number = number,
        EntryType::Patent => rec.patent_number = number,
        _ => rec.issue = number.or_else(|| text("issue", &mut diags)),
    }
    rec.supplement_of_volume = text("volumesupplement", &mut diags);
    rec.supplement_of_issue = text("issuesupplement", &mut diags);
    rec.part_of_volume = text("volumepart", &mut diags);
    rec.part_of_issue = text("issuepart", &mut diags);
    let pages = text("pages", &mut diags).map(|p| parse_pages(&p));
    if entry_type == EntryType::Dictionary {
        rec.term_pages = pages;
    } else {
        rec.pages = pages;
    }

    let date_text = text("date", &mut diags).or_else(|| {
        let parts: Vec<String> = ["year", "month", "day"]
            .iter()
            .map_while(|f| text(f, &mut diags))
            .collect();
        (!parts.is_empty()).then(|| parts.join(" "))
    });
    match date_field("date", date_text, &mut diags) {
        Some(d) => rec.date = d,
        None => diags.push(
            Diagnostic::warning(
                DiagnosticKind::MissingYear,
                format!("`{}` has no year; the date is left out", raw.key),
            )
            .with_span(span),
        ),
    }
    let epub = text("epub", &mut diags);
    rec.date_epub = date_field("epub", epub, &mut diags);

    rec.place = text("address", &mut diags).or_else(|| text("location", &mut diags));
    rec.publisher = text("publisher", &mut diags)
        .or_else(|| text("institution", &mut diags))
        .or_else(|| text("school", &mut diags));
    rec.edition = text("edition", &mut diags);
    rec.pmid = text("pmid", &mut diags);
    rec.retraction_of = text("retractionof", &mut diags);
    rec.retraction_in = text("retractionin", &mut diags);
    rec.erratum_in = text("erratumin", &mut diags);
    rec.corrected_republished_from = text("republishedfrom", &mut diags);
    rec.sponsor = text("sponsor", &mut diags);
    rec.contract_number = text("contract", &mut diags);
    rec.article_type = text("type", &mut diags);
    rec.language_note = text("language", &mut diags);
    // URLs are emitted exactly as stored
    rec.url = raw.get("url").map(str::to_string).filter(|u| !u.is_empty());
    rec.medium_bracket = text("medium", &mut diags);
    let updated = text("updated", &mut diags);
    rec.updated = date_field("updated", updated, &mut diags);
    let checked = text("lastchecked", &mut diags)
        .or_else(|| text("cited", &mut diags))
        .or_else(|| text("urldate", &mut diags));
    rec.lastchecked = date_field("lastchecked", checked, &mut diags);
    rec.part_title = text("part", &mut diags);
    rec.extent_text = text("extent", &mut diags);
    rec.conference_name = text("conference", &mut diags);
    let conf_date = text("conferencedate", &mut diags);
    rec.conference_date = date_field("conferencedate", conf_date, &mut diags);
    rec.conference_place = text("conferenceplace", &mut diags);
    rec.defined_term = text("term", &mut diags);
    rec.country = text("country", &mut diags);
    rec.section = text("section", &mut diags);
    rec.column = text("column", &mut diags);
    rec.affiliation = text("affiliation", &mut diags);
    rec.in_press = raw.get("inpress").is_some_and(truthy);
    rec.continuous_pagination = raw.get("continuous").is_some_and(truthy);

    Normalized {
        record: rec,
        diagnostics: diags,
    }
}

/// Fields present on the entry that the style does not read for its type.
pub fn unknown_fields(raw: &RawEntry) -> Vec<&str> {
    let (ty, _) = map_entry_type(raw);
    raw.fields
        .keys()
        .map(String::as_str)
        .filter(|f| !ty.knows_field(f))
        .collect()
}
