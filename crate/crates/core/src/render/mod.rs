//! Vancouver (NLM) reference formatting.

mod style;
mod template;

pub use style::{StyleConfig, StyleError};
pub use template::{terminate, Segment, Selector, Template};

use thiserror::Error;

use crate::model::{
    complete_last_page, initials, BibRecord, ContributorList, EntryType, PageExtent, PageKind,
    PartialDate, PersonName, Role,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("{entry_type} entry `{key}` is missing required field `{field}`")]
    MissingRequiredField {
        key: String,
        entry_type: EntryType,
        field: &'static str,
    },
    #[error("entry `{key}` has both a volume supplement and an issue supplement, or both a volume part and an issue part")]
    ConflictingLocator { key: String },
    #[error("invalid page range {first}-{last}")]
    InvalidRange { first: String, last: String },
}

/// `Family II`, with particle and suffix; organizations verbatim.
pub fn format_name(name: &PersonName, _style: &StyleConfig) -> String {
    if let Some(lit) = &name.literal {
        return lit.clone();
    }
    let mut out = String::new();
    if let Some(p) = &name.particle {
        out.push_str(p);
        out.push(' ');
    }
    out.push_str(&name.family);
    let inits = initials(&name.given);
    if !inits.is_empty() {
        out.push(' ');
        out.push_str(&inits);
    }
    if let Some(s) = &name.suffix {
        out.push(' ');
        out.push_str(s);
    }
    out
}

fn role_label(role: Role, count: usize) -> Option<&'static str> {
    let plural = count > 1;
    Some(match role {
        Role::Author | Role::Organization => return None,
        Role::Editor if plural => "editors",
        Role::Editor => "editor",
        Role::Compiler if plural => "compilers",
        Role::Compiler => "compiler",
        Role::Inventor if plural => "inventors",
        Role::Inventor => "inventor",
        Role::Assignee if plural => "assignees",
        Role::Assignee => "assignee",
        Role::Cartographer if plural => "cartographers",
        Role::Cartographer => "cartographer",
    })
}

fn format_list(list: &ContributorList, style: &StyleConfig) -> String {
    let max = style.max_authors_before_etal();
    let shown = list.names.len().min(max);
    let mut parts: Vec<String> = list.names[..shown]
        .iter()
        .map(|n| format_name(n, style))
        .collect();
    if list.names.len() > max || list.truncated {
        parts.push(style.etal_text().to_string());
    }
    let mut out = parts.join(", ");
    if let Some(label) = role_label(list.role, list.names.len()) {
        out.push_str(", ");
        out.push_str(label);
    }
    out
}

fn contributor_block<'a>(
    lists: impl IntoIterator<Item = &'a ContributorList>,
    style: &StyleConfig,
) -> Option<String> {
    let parts: Vec<String> = lists
        .into_iter()
        .filter(|l| !l.names.is_empty())
        .map(|l| format_list(l, style))
        .collect();
    (!parts.is_empty()).then(|| parts.join("; "))
}

/// Contributor lists joined by `; `, each with its role label, ending in a
/// period.
pub fn format_contributors(lists: &[ContributorList], style: &StyleConfig) -> String {
    let mut out = contributor_block(lists, style).unwrap_or_default();
    if !out.is_empty() {
        terminate(&mut out);
    }
    out
}

fn is_plain_number(s: &str) -> bool {
    !s.is_empty() && !s.starts_with('0') && s.bytes().all(|b| b.is_ascii_digit())
}

/// NLM ending-page abbreviation: `284-287` becomes `284-7`.
///
/// Equal-length pages drop the shared leading digits of the ending page;
/// pages of different length are printed in full.
pub fn compress_page_range(first: &str, last: &str) -> Result<String, RenderError> {
    let invalid = || RenderError::InvalidRange {
        first: first.to_string(),
        last: last.to_string(),
    };
    if !is_plain_number(first) || !is_plain_number(last) {
        return Err(invalid());
    }
    if (last.len(), last) < (first.len(), first) {
        return Err(invalid());
    }
    if first == last {
        return Ok(first.to_string());
    }
    if first.len() != last.len() {
        return Ok(format!("{first}-{last}"));
    }
    let common = first
        .bytes()
        .zip(last.bytes())
        .take_while(|(a, b)| a == b)
        .count();
    Ok(format!("{first}-{}", &last[common.min(last.len() - 1)..]))
}

fn format_pages(pages: &PageExtent, style: &StyleConfig) -> Result<String, RenderError> {
    match pages.kind {
        PageKind::NumericRange => {
            let last = complete_last_page(&pages.first, pages.last.as_deref().unwrap_or_default());
            if style.compress_pages() {
                compress_page_range(&pages.first, &last)
            } else {
                Ok(format!("{}-{last}", pages.first))
            }
        }
        _ => Ok(pages.verbatim()),
    }
}

/// `YYYY[ Mon[ D[-D]]]`, with `c` for copyright dates and ` -` for
/// ongoing ones. Raw dates come back verbatim.
pub fn format_date(date: &PartialDate, style: &StyleConfig) -> String {
    if let Some(raw) = &date.raw {
        return raw.clone();
    }
    let Some(year) = date.year else {
        return String::new();
    };
    let mut out = String::new();
    if date.circa {
        out.push('c');
    }
    out.push_str(&year.to_string());
    if let Some(end) = &date.year_end {
        out.push('-');
        out.push_str(end);
    }
    if date.open_ended {
        out.push_str(" -");
    }
    if let Some(m) = date.month {
        out.push(' ');
        out.push_str(style.month_name(m));
        if let Some(d) = date.day {
            out.push_str(&format!(" {d}"));
            if let Some(e) = date.day_end {
                out.push_str(&format!("-{e}"));
            }
        }
    }
    out
}

/// `[updated U; cited C]`, either part optional.
fn web_dates(rec: &BibRecord, style: &StyleConfig) -> Option<String> {
    let mut parts = Vec::new();
    if let Some(u) = rec.updated.as_ref().filter(|d| !d.is_empty()) {
        parts.push(format!("updated {}", format_date(u, style)));
    }
    if let Some(c) = rec.lastchecked.as_ref().filter(|d| !d.is_empty()) {
        parts.push(format!("cited {}", format_date(c, style)));
    }
    (!parts.is_empty()).then(|| format!("[{}]", parts.join("; ")))
}

fn dated(rec: &BibRecord, date: &PartialDate, style: &StyleConfig) -> String {
    let mut out = format_date(date, style);
    if let Some(bracket) = web_dates(rec, style) {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&bracket);
    }
    out
}

/// Volume/issue/supplement/part locator followed by `:pages`.
///
/// Yields `V`, `V(I)`, `V Suppl S`, `V(I Suppl S)`, `V(Pt P)`,
/// `V(I Pt P)` or `(I)`; with none of those present only `:pages` remains.
pub fn format_journal_locator(rec: &BibRecord, style: &StyleConfig) -> Result<String, RenderError> {
    if (rec.supplement_of_volume.is_some() && rec.supplement_of_issue.is_some())
        || (rec.part_of_volume.is_some() && rec.part_of_issue.is_some())
    {
        return Err(RenderError::ConflictingLocator {
            key: rec.key.clone(),
        });
    }
    let mut out = rec.volume.clone().unwrap_or_default();
    if let Some(s) = &rec.supplement_of_volume {
        out.push_str(" Suppl ");
        out.push_str(s);
    }
    let issue = rec.issue.as_ref().filter(|_| !rec.continuous_pagination);
    let inner: Vec<String> = [
        issue.cloned(),
        rec.supplement_of_issue.as_ref().map(|s| format!("Suppl {s}")),
        rec.part_of_issue
            .as_ref()
            .or(rec.part_of_volume.as_ref())
            .map(|p| format!("Pt {p}")),
    ]
    .into_iter()
    .flatten()
    .collect();
    if !inner.is_empty() {
        out.push('(');
        out.push_str(&inner.join(" "));
        out.push(')');
    }
    if let Some(pages) = &rec.pages {
        out.push(':');
        out.push_str(&format_pages(pages, style)?);
    }
    Ok(out.trim_start().to_string())
}

fn journal_issue(rec: &BibRecord, style: &StyleConfig) -> Result<String, RenderError> {
    if rec.in_press {
        let year = format_date(&rec.date.year_only(), style);
        return Ok(format!("In press {year}").trim_end().to_string());
    }
    let date = if rec.continuous_pagination {
        rec.date.year_only()
    } else {
        rec.date.clone()
    };
    let date = if rec.entry_type == EntryType::WebJournal {
        dated(rec, &date, style)
    } else {
        format_date(&date, style)
    };
    let locator = format_journal_locator(rec, style)?;
    Ok(match (date.is_empty(), locator.is_empty()) {
        (_, true) => date,
        (true, false) => locator.trim_start_matches(':').to_string(),
        (false, false) if locator.starts_with(':') => format!("{date}{locator}"),
        (false, false) => format!("{date};{locator}"),
    })
}

fn newspaper_issue(rec: &BibRecord, style: &StyleConfig) -> Result<String, RenderError> {
    let mut loc = String::new();
    if let Some(s) = &rec.section {
        loc.push_str("Sect. ");
        loc.push_str(s);
    }
    if let Some(p) = &rec.pages {
        if !loc.is_empty() {
            loc.push(':');
        }
        loc.push_str(&format_pages(p, style)?);
    }
    if let Some(c) = &rec.column {
        if !loc.is_empty() {
            loc.push(' ');
        }
        loc.push_str(&format!("(col. {c})"));
    }
    let date = format_date(&rec.date, style);
    Ok(match (date.is_empty(), loc.is_empty()) {
        (_, true) => date,
        (true, false) => loc,
        (false, false) => format!("{date};{loc}"),
    })
}

fn place_publisher(rec: &BibRecord) -> Option<String> {
    match (&rec.place, &rec.publisher) {
        (Some(p), Some(q)) => Some(format!("{p}: {q}")),
        (Some(p), None) => Some(p.clone()),
        (None, Some(q)) => Some(q.clone()),
        (None, None) => None,
    }
}

fn publication(rec: &BibRecord, style: &StyleConfig, sep: &str) -> Option<String> {
    let date = dated(rec, &rec.date, style);
    match (place_publisher(rec), date.is_empty()) {
        (Some(pp), false) => {
            let sep = match sep.strip_prefix('.') {
                Some(rest) if pp.ends_with(['.', '?', '!']) => rest,
                _ => sep,
            };
            Some(format!("{pp}{sep}{date}"))
        }
        (Some(pp), true) => Some(pp),
        (None, false) => Some(date),
        (None, true) => None,
    }
}

/// Roles that lead the reference. Editors lead only when nobody else does.
fn head_lists(rec: &BibRecord) -> Vec<&ContributorList> {
    let others: Vec<&ContributorList> = rec
        .contributors
        .iter()
        .filter(|c| c.role != Role::Editor)
        .collect();
    if others.is_empty() {
        rec.contributors.iter().filter(|c| c.role == Role::Editor).collect()
    } else {
        others
    }
}

fn editors_lead(rec: &BibRecord) -> bool {
    rec.contributors.iter().all(|c| c.role == Role::Editor)
}

fn default_medium(ty: EntryType) -> Option<&'static str> {
    match ty {
        EntryType::Dissertation => Some("dissertation"),
        EntryType::Map => Some("map"),
        EntryType::CdRom => Some("CD-ROM"),
        _ => None,
    }
}

fn title_block(rec: &BibRecord) -> Option<String> {
    let mut out = rec.title.clone()?;
    let bracket = match rec.entry_type {
        EntryType::Article | EntryType::WebJournal => rec.article_type.clone(),
        EntryType::TechReport => None,
        ty => rec
            .medium_bracket
            .clone()
            .or_else(|| default_medium(ty).map(str::to_string)),
    };
    if let Some(b) = bracket {
        out.push_str(&format!(" [{b}]"));
    }
    Some(out)
}

fn select(
    rec: &BibRecord,
    selector: Selector,
    style: &StyleConfig,
) -> Result<Option<String>, RenderError> {
    let ty = rec.entry_type;
    Ok(match selector {
        Selector::Head => {
            let lists = match ty {
                EntryType::Chapter | EntryType::InProceedings => rec
                    .contributors
                    .iter()
                    .filter(|c| c.role != Role::Editor)
                    .collect(),
                _ => head_lists(rec),
            };
            let block = contributor_block(lists, style);
            match (block, &rec.affiliation) {
                (Some(b), Some(a)) if ty == EntryType::TechReport => Some(format!("{b} ({a})")),
                (b, _) => b,
            }
        }
        Selector::Title => title_block(rec),
        Selector::Journal => {
            let mut j = rec.journal.clone();
            if ty == EntryType::WebJournal {
                if let (Some(j), Some(m)) = (j.as_mut(), &rec.medium_bracket) {
                    j.push_str(&format!(" [{m}]"));
                }
            }
            j
        }
        Selector::JournalIssue => Some(journal_issue(rec, style)?),
        Selector::NewspaperIssue => Some(newspaper_issue(rec, style)?),
        Selector::Edition => rec.edition.clone(),
        Selector::SecondaryEditors => {
            if editors_lead(rec) {
                None
            } else {
                contributor_block(rec.contributors_with(Role::Editor), style)
            }
        }
        Selector::InBook => {
            let editors = contributor_block(rec.contributors_with(Role::Editor), style);
            match (editors, &rec.booktitle) {
                (Some(e), Some(b)) => Some(format!("{e}. {b}")),
                (e, b) => e.or_else(|| b.clone()),
            }
        }
        Selector::Conference => {
            let parts: Vec<String> = [
                rec.conference_name.clone(),
                rec.conference_date
                    .as_ref()
                    .map(|d| format_date(d, style))
                    .filter(|d| !d.is_empty()),
                rec.conference_place.clone(),
            ]
            .into_iter()
            .flatten()
            .collect();
            (!parts.is_empty()).then(|| parts.join("; "))
        }
        Selector::Publication => publication(rec, style, "; "),
        Selector::DatabasePublication => {
            let sep = if rec.part_title.is_some() { "; " } else { ". " };
            publication(rec, style, sep)
        }
        Selector::Pages => rec.pages.as_ref().map(|p| format_pages(p, style)).transpose()?,
        Selector::ReportType => rec.article_type.clone(),
        Selector::ReportNumber => rec.report_number.clone(),
        Selector::ContractNumber => rec.contract_number.clone(),
        Selector::Sponsor => rec.sponsor.clone(),
        Selector::PatentLine => rec.patent_number.as_ref().map(|n| match &rec.country {
            Some(c) => format!("{c} patent {n}"),
            None => format!("Patent {n}"),
        }),
        Selector::Date => Some(format_date(&rec.date, style)),
        Selector::Term => rec.defined_term.as_ref().map(|t| {
            match rec.term_pages.as_ref().and_then(|p| format_pages(p, style).ok()) {
                Some(p) => format!("{t}; p. {p}"),
                None => t.clone(),
            }
        }),
        Selector::PartExtent => match (&rec.part_title, &rec.extent_text) {
            (Some(p), Some(e)) => Some(format!("{p}; {e}")),
            (p, e) => p.clone().or_else(|| e.clone()),
        },
        Selector::Epub => rec
            .date_epub
            .as_ref()
            .map(|d| format_date(d, style))
            .filter(|d| !d.is_empty()),
        Selector::Pmid => rec.pmid.clone(),
        Selector::RetractionOf => rec.retraction_of.clone(),
        Selector::RetractionIn => rec.retraction_in.clone(),
        Selector::RepublishedFrom => rec.corrected_republished_from.clone(),
        Selector::ErratumIn => rec.erratum_in.clone(),
        Selector::Url => rec.url.clone(),
    })
}

/// Fields without which a reference of this type is not renderable, in
/// the order they are checked.
pub fn required_fields(ty: EntryType) -> &'static [&'static str] {
    match ty {
        EntryType::Article | EntryType::Newspaper => &["title", "journal"],
        EntryType::WebJournal => &["title", "journal", "url"],
        EntryType::WebMonograph | EntryType::WebPage | EntryType::WebDatabase => &["title", "url"],
        EntryType::Chapter | EntryType::InProceedings => &["title", "booktitle"],
        EntryType::Patent => &["title", "number"],
        _ => &["title"],
    }
}

fn has_field(rec: &BibRecord, field: &str) -> bool {
    match field {
        "title" => rec.title.is_some(),
        "journal" => rec.journal.is_some(),
        "url" => rec.url.is_some(),
        "booktitle" => rec.booktitle.is_some(),
        "number" => rec.patent_number.is_some(),
        _ => true,
    }
}

/// Render one record as a reference string (without its number).
pub fn render_reference(rec: &BibRecord, style: &StyleConfig) -> Result<String, RenderError> {
    if let Some(field) = required_fields(rec.entry_type)
        .iter()
        .find(|f| !has_field(rec, f))
    {
        return Err(RenderError::MissingRequiredField {
            key: rec.key.clone(),
            entry_type: rec.entry_type,
            field,
        });
    }
    Template::for_type(rec.entry_type).render(|s| select(rec, s, style))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn style() -> StyleConfig {
        StyleConfig::default()
    }

    fn people(role: Role, names: &[(&str, &str)]) -> ContributorList {
        ContributorList::new(
            role,
            names.iter().map(|(f, g)| PersonName::personal(f, g)).collect(),
        )
    }

    #[test]
    fn format_name_examples() {
        let s = style();
        assert_eq!(format_name(&PersonName::personal("Halpern", "Scott D."), &s), "Halpern SD");
        assert_eq!(
            format_name(&PersonName::personal("Gilstrap", "Larry C.").with_suffix("3rd"), &s),
            "Gilstrap LC 3rd"
        );
        assert_eq!(
            format_name(&PersonName::organization("Ancel Surgical R&D Inc."), &s),
            "Ancel Surgical R&D Inc."
        );
        assert_eq!(
            format_name(&PersonName::personal("Moorselaar", "R. J.").with_particle("van"), &s),
            "van Moorselaar RJ"
        );
    }

    #[test]
    fn seven_authors_truncated() {
        let list = people(
            Role::Author,
            &[
                ("Rose", "M. E."),
                ("Huerbin", "M. B."),
                ("Melick", "J."),
                ("Marion", "D. W."),
                ("Palmer", "A. M."),
                ("Schiding", "J. K."),
                ("Kuma", "K."),
            ],
        );
        assert_eq!(
            format_contributors(&[list], &style()),
            "Rose ME, Huerbin MB, Melick J, Marion DW, Palmer AM, Schiding JK, et al."
        );
    }

    #[test]
    fn authors_plus_group() {
        let authors = ContributorList::new(
            Role::Author,
            vec![
                PersonName::personal("Vallancien", "G."),
                PersonName::personal("Emberton", "M."),
                PersonName::personal("Harving", "N."),
                PersonName::personal("Moorselaar", "R. J.").with_particle("van"),
            ],
        );
        let group = ContributorList::new(
            Role::Organization,
            vec![PersonName::organization("Alf-One Study Group")],
        );
        assert_eq!(
            format_contributors(&[authors, group], &style()),
            "Vallancien G, Emberton M, Harving N, van Moorselaar RJ; Alf-One Study Group."
        );
    }

    #[test]
    fn role_labels() {
        let s = style();
        assert_eq!(
            format_contributors(&[people(Role::Editor, &[("Wieczorek", "R. R.")])], &s),
            "Wieczorek RR, editor."
        );
        let inv = people(Role::Inventor, &[("Pagedas", "Anthony C.")]);
        let asg = ContributorList::new(
            Role::Assignee,
            vec![PersonName::organization("Ancel Surgical R&D Inc.")],
        );
        assert_eq!(
            format_contributors(&[inv, asg], &s),
            "Pagedas AC, inventor; Ancel Surgical R&D Inc., assignee."
        );
        let carto = people(Role::Cartographer, &[("Pratt", "B."), ("Flick", "P."), ("Vynne", "C.")]);
        assert_eq!(
            format_contributors(&[carto], &s),
            "Pratt B, Flick P, Vynne C, cartographers."
        );
        let one = people(Role::Cartographer, &[("Pratt", "B.")]);
        assert_eq!(format_contributors(&[one], &s), "Pratt B, cartographer.");
    }

    #[test]
    fn truncated_flag_forces_etal() {
        let mut list = people(Role::Author, &[("Rose", "M. E.")]);
        list.truncated = true;
        assert_eq!(format_contributors(&[list], &style()), "Rose ME, et al.");
    }

    #[test]
    fn compress_examples() {
        let cases = [
            ("284", "287", "284-7"),
            ("93", "113", "93-113"),
            ("1151", "1168", "1151-68"),
            ("909", "911", "909-11"),
            ("40", "46", "40-6"),
            ("5", "5", "5"),
            ("100", "105", "100-5"),
            ("1095", "1100", "1095-100"),
        ];
        for (a, b, want) in cases {
            assert_eq!(compress_page_range(a, b).unwrap(), want, "{a}-{b}");
        }
    }

    #[test]
    fn compress_rejects_descending_and_non_numeric() {
        assert!(matches!(
            compress_page_range("287", "284"),
            Err(RenderError::InvalidRange { .. })
        ));
        assert!(compress_page_range("iii", "v").is_err());
        assert!(compress_page_range("007", "009").is_err());
    }

    #[test]
    fn format_date_examples() {
        let s = style();
        assert_eq!(format_date(&PartialDate::ymd(2002, 7, 25), &s), "2002 Jul 25");
        assert_eq!(format_date(&PartialDate::year(2002), &s), "2002");
        assert_eq!(format_date(&crate::model::parse_date("c2000-01"), &s), "c2000-01");
        assert_eq!(format_date(&crate::model::parse_date("c2000 -"), &s), "c2000 -");
        assert_eq!(format_date(&crate::model::parse_date("2001 Sep 13-15"), &s), "2001 Sep 13-15");
        assert_eq!(format_date(&PartialDate::raw("Spring 2002"), &s), "Spring 2002");
        assert_eq!(format_date(&PartialDate::default(), &s), "");
    }

    fn journal_record() -> BibRecord {
        let mut r = BibRecord::empty("k", EntryType::Article);
        r.title = Some("T".into());
        r.journal = Some("J".into());
        r
    }

    #[test]
    fn locator_variants() {
        let s = style();
        let pages = |p: &str| Some(crate::model::parse_pages(p));

        let mut r = journal_record();
        r.volume = Some("42".into());
        r.supplement_of_volume = Some("2".into());
        r.pages = pages("S93-9");
        assert_eq!(format_journal_locator(&r, &s).unwrap(), "42 Suppl 2:S93-9");

        let mut r = journal_record();
        r.issue = Some("401".into());
        r.pages = pages("230-238");
        assert_eq!(format_journal_locator(&r, &s).unwrap(), "(401):230-8");

        let mut r = journal_record();
        r.volume = Some("83".into());
        r.part_of_volume = Some("2".into());
        r.pages = pages("491-5");
        assert_eq!(format_journal_locator(&r, &s).unwrap(), "83(Pt 2):491-5");

        let mut r = journal_record();
        r.volume = Some("13".into());
        r.issue = Some("9".into());
        r.part_of_issue = Some("1".into());
        r.pages = pages("923-8");
        assert_eq!(format_journal_locator(&r, &s).unwrap(), "13(9 Pt 1):923-8");

        let mut r = journal_record();
        r.volume = Some("58".into());
        r.issue = Some("12".into());
        r.supplement_of_issue = Some("7".into());
        r.pages = pages("S6-12");
        assert_eq!(format_journal_locator(&r, &s).unwrap(), "58(12 Suppl 7):S6-12");

        let mut r = journal_record();
        r.pages = pages("1-6");
        assert_eq!(format_journal_locator(&r, &s).unwrap(), ":1-6");
    }

    #[test]
    fn conflicting_supplements() {
        let mut r = journal_record();
        r.supplement_of_volume = Some("1".into());
        r.supplement_of_issue = Some("2".into());
        assert!(matches!(
            format_journal_locator(&r, &style()),
            Err(RenderError::ConflictingLocator { .. })
        ));
    }

    #[test]
    fn missing_title() {
        let mut r = journal_record();
        r.title = None;
        assert_eq!(
            render_reference(&r, &style()),
            Err(RenderError::MissingRequiredField {
                key: "k".into(),
                entry_type: EntryType::Article,
                field: "title"
            })
        );
    }

    #[test]
    fn continuous_pagination_drops_month_and_issue() {
        let mut r = journal_record();
        r.date = PartialDate::ymd(2002, 7, 25);
        r.volume = Some("347".into());
        r.issue = Some("4".into());
        r.pages = Some(crate::model::parse_pages("284-287"));
        assert_eq!(render_reference(&r, &style()).unwrap(), "T. J. 2002 Jul 25;347(4):284-7.");
        r.continuous_pagination = true;
        assert_eq!(render_reference(&r, &style()).unwrap(), "T. J. 2002;347:284-7.");
    }

    #[test]
    fn compression_can_be_disabled() {
        let mut r = journal_record();
        r.date = PartialDate::year(2002);
        r.pages = Some(crate::model::parse_pages("284-7"));
        let s = style().with_page_compression(false);
        assert_eq!(render_reference(&r, &s).unwrap(), "T. J. 2002:284-287.");
    }

    #[test]
    fn database_without_date_keeps_single_period() {
        let mut rec = BibRecord::empty("k", EntryType::WebDatabase);
        rec.title = Some("Registry".into());
        rec.medium_bracket = Some("database on the Internet".into());
        rec.publisher = Some("Acme Inc.".into());
        rec.updated = Some(crate::model::parse_date("2002 Jan 1"));
        rec.url = Some("http://example.org/".into());
        assert_eq!(
            render_reference(&rec, &style()).unwrap(),
            "Registry [database on the Internet]. Acme Inc. [updated 2002 Jan 1]. \
             Available from: http://example.org/"
        );
    }
}
