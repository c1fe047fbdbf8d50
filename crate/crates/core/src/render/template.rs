//! Per-entry-type segment tables.
//!
//! A template is an ordered list of segments. Each segment names a
//! [`Selector`] that pulls one element out of the record; a segment whose
//! selector yields nothing is dropped entirely, prefix and suffix included.
//! Emitted segments are joined with a single space, and a terminating
//! segment ends with exactly one period.

use crate::model::EntryType;

/// One renderable element of a reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    /// Leading contributor block (authors, organizations, inventors...).
    Head,
    /// Title with any bracketed article type or medium.
    Title,
    /// Journal or newspaper title, with the medium for online journals.
    Journal,
    /// `Date;Locator` for journals, or `In press YEAR`.
    JournalIssue,
    /// `Date;Sect. S:page (col. c)`.
    NewspaperIssue,
    Edition,
    /// Editors listed after the title when authors lead the reference.
    SecondaryEditors,
    /// `In: Editors, editors. Book title`.
    InBook,
    /// `Conference name; date; place`.
    Conference,
    /// `Place: Publisher; Date[ [updated ...; cited ...]]`.
    Publication,
    /// Databases print `Place: Publisher. Date`, except when citing a part.
    DatabasePublication,
    Pages,
    /// Report kind, such as `Final report`.
    ReportType,
    ReportNumber,
    ContractNumber,
    Sponsor,
    /// `Country patent number`.
    PatentLine,
    Date,
    /// `Term; p. pages` for dictionary entries.
    Term,
    /// `Part title; extent`.
    PartExtent,
    Epub,
    Pmid,
    RetractionOf,
    RetractionIn,
    RepublishedFrom,
    ErratumIn,
    Url,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub select: Selector,
    pub prefix: &'static str,
    pub suffix: &'static str,
    /// End the segment with a period unless it already ends a sentence.
    pub terminate: bool,
}

const fn seg(select: Selector) -> Segment {
    Segment {
        select,
        prefix: "",
        suffix: "",
        terminate: true,
    }
}

const fn labeled(prefix: &'static str, select: Selector) -> Segment {
    Segment {
        select,
        prefix,
        suffix: "",
        terminate: true,
    }
}

const fn bare(prefix: &'static str, select: Selector) -> Segment {
    Segment {
        select,
        prefix,
        suffix: "",
        terminate: false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Template {
    pub segments: &'static [Segment],
}

use Selector as S;

const ARTICLE: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::Journal),
    seg(S::JournalIssue),
    labeled("Epub ", S::Epub),
    labeled("Cited in PubMed; PMID ", S::Pmid),
    labeled("Retraction of: ", S::RetractionOf),
    labeled("Retraction in: ", S::RetractionIn),
    labeled("Corrected and republished from: ", S::RepublishedFrom),
    labeled("Erratum in: ", S::ErratumIn),
    bare("Available from: ", S::Url),
];

const BOOK: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::Edition),
    seg(S::SecondaryEditors),
    seg(S::Publication),
    bare("Available from: ", S::Url),
];

const DICTIONARY: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::Edition),
    seg(S::SecondaryEditors),
    seg(S::Publication),
    seg(S::Term),
    bare("Available from: ", S::Url),
];

const CHAPTER: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    labeled("In: ", S::InBook),
    seg(S::Conference),
    seg(S::Edition),
    seg(S::Publication),
    labeled("p. ", S::Pages),
    bare("Available from: ", S::Url),
];

const PROCEEDINGS: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::Conference),
    seg(S::Edition),
    seg(S::Publication),
    bare("Available from: ", S::Url),
];

const TECHREPORT: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::ReportType),
    seg(S::Publication),
    labeled("Report No.: ", S::ReportNumber),
    labeled("Contract No.: ", S::ContractNumber),
    labeled("Sponsored by ", S::Sponsor),
    bare("Available from: ", S::Url),
];

const PATENT: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::PatentLine),
    seg(S::Date),
    bare("Available from: ", S::Url),
];

const NEWSPAPER: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::Journal),
    seg(S::NewspaperIssue),
    bare("Available from: ", S::Url),
];

const WEBPAGE: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::Publication),
    seg(S::PartExtent),
    bare("Available from: ", S::Url),
];

const WEBDATABASE: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::DatabasePublication),
    seg(S::PartExtent),
    bare("Available from: ", S::Url),
];

const MISC: &[Segment] = &[
    seg(S::Head),
    seg(S::Title),
    seg(S::Publication),
    bare("Available from: ", S::Url),
];

impl Template {
    pub fn for_type(entry_type: EntryType) -> Template {
        let segments = match entry_type {
            EntryType::Article | EntryType::WebJournal => ARTICLE,
            EntryType::Book
            | EntryType::WebMonograph
            | EntryType::Dissertation
            | EntryType::Audiovisual
            | EntryType::Map
            | EntryType::CdRom => BOOK,
            EntryType::Dictionary => DICTIONARY,
            EntryType::Chapter | EntryType::InProceedings => CHAPTER,
            EntryType::Proceedings => PROCEEDINGS,
            EntryType::TechReport => TECHREPORT,
            EntryType::Patent => PATENT,
            EntryType::Newspaper => NEWSPAPER,
            EntryType::WebPage => WEBPAGE,
            EntryType::WebDatabase => WEBDATABASE,
            EntryType::Misc => MISC,
        };
        Template { segments }
    }

    /// Render by evaluating each segment's selector through `eval`.
    pub fn render<E>(
        &self,
        mut eval: impl FnMut(Selector) -> Result<Option<String>, E>,
    ) -> Result<String, E> {
        let mut out = String::new();
        for segment in self.segments {
            let Some(value) = eval(segment.select)? else {
                continue;
            };
            if value.is_empty() {
                continue;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(segment.prefix);
            out.push_str(&value);
            out.push_str(segment.suffix);
            if segment.terminate {
                terminate(&mut out);
            }
        }
        Ok(out)
    }
}

/// Append a period unless the text already ends a sentence.
pub fn terminate(s: &mut String) {
    if !s.ends_with(['.', '?', '!']) {
        s.push('.');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::convert::Infallible;

    #[test]
    fn absent_segments_vanish_with_their_labels() {
        let t = Template::for_type(EntryType::TechReport);
        let out = t
            .render::<Infallible>(|s| {
                Ok(match s {
                    S::Title => Some("A title".into()),
                    S::ReportNumber => Some("R1".into()),
                    _ => None,
                })
            })
            .unwrap();
        assert_eq!(out, "A title. Report No.: R1.");
    }

    #[test]
    fn terminal_period_not_doubled() {
        let t = Template::for_type(EntryType::Misc);
        let out = t
            .render::<Infallible>(|s| {
                Ok(match s {
                    S::Head => Some("Smith J, et al.".into()),
                    S::Title => Some("Why?".into()),
                    S::Url => Some("http://x/.".into()),
                    _ => None,
                })
            })
            .unwrap();
        assert_eq!(out, "Smith J, et al. Why? Available from: http://x/.");
    }

    #[test]
    fn bracket_end_still_gets_period() {
        let mut s = String::from("Title [letter]");
        terminate(&mut s);
        assert_eq!(s, "Title [letter].");
    }

    #[test]
    fn every_type_has_a_template_with_a_title() {
        for ty in EntryType::ALL {
            let t = Template::for_type(ty);
            assert!(t.segments.iter().any(|s| s.select == S::Title), "{ty}");
        }
    }
}
