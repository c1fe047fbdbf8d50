#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PageKind {
    NumericRange,
    RomanRange,
    Single,
    Text,
}

/// Pagination as written in the source, classified for rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageExtent {
    pub kind: PageKind,
    pub first: String,
    /// Ending page as written; for numeric ranges this may be abbreviated
    /// (`7` in `284-7`).
    pub last: Option<String>,
    pub text: Option<String>,
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn is_roman(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b"ivxlcdm".contains(&b))
}

/// Complete an abbreviated ending page against the first page:
/// (`284`, `7`) gives `287`.
pub fn complete_last_page(first: &str, last: &str) -> String {
    if last.len() >= first.len() {
        last.to_string()
    } else {
        format!("{}{}", &first[..first.len() - last.len()], last)
    }
}

/// Numeric `a >= b` for digit strings without leading zeros.
fn digits_ge(a: &str, b: &str) -> bool {
    (a.len(), a) >= (b.len(), b)
}

impl PageExtent {
    pub fn text(s: &str) -> Self {
        PageExtent {
            kind: PageKind::Text,
            first: String::new(),
            last: None,
            text: Some(s.to_string()),
        }
    }

    /// Full ending page for numeric ranges.
    pub fn completed_last(&self) -> Option<String> {
        match (self.kind, &self.last) {
            (PageKind::NumericRange, Some(last)) => Some(complete_last_page(&self.first, last)),
            (_, last) => last.clone(),
        }
    }

    /// The extent exactly as it was written.
    pub fn verbatim(&self) -> String {
        match self.kind {
            PageKind::Text => self.text.clone().unwrap_or_default(),
            PageKind::Single => self.first.clone(),
            PageKind::NumericRange | PageKind::RomanRange => {
                format!("{}-{}", self.first, self.last.as_deref().unwrap_or_default())
            }
        }
    }
}

/// Classify a pages field. Nothing is rewritten here; compression happens
/// when rendering.
pub fn parse_pages(field: &str) -> PageExtent {
    let s = field.trim();
    if let Some((a, b)) = s.split_once('-') {
        let (a, b) = (a.trim(), b.trim());
        if is_digits(a) && is_digits(b) && !a.starts_with('0') && !b.starts_with('0') {
            let full = complete_last_page(a, b);
            if digits_ge(&full, a) {
                return PageExtent {
                    kind: PageKind::NumericRange,
                    first: a.to_string(),
                    last: Some(b.to_string()),
                    text: None,
                };
            }
        } else if is_roman(a) && is_roman(b) {
            return PageExtent {
                kind: PageKind::RomanRange,
                first: a.to_string(),
                last: Some(b.to_string()),
                text: None,
            };
        }
        return PageExtent::text(s);
    }
    if !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || matches!(c, ';' | ',' | '[')) {
        return PageExtent {
            kind: PageKind::Single,
            first: s.to_string(),
            last: None,
            text: None,
        };
    }
    PageExtent::text(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_numeric_range() {
        let p = parse_pages("284-287");
        assert_eq!(p.kind, PageKind::NumericRange);
        assert_eq!((p.first.as_str(), p.last.as_deref()), ("284", Some("287")));
    }

    #[test]
    fn abbreviated_range_kept_as_written() {
        let p = parse_pages("284-7");
        assert_eq!(p.kind, PageKind::NumericRange);
        assert_eq!(p.last.as_deref(), Some("7"));
        assert_eq!(p.completed_last().as_deref(), Some("287"));
        assert_eq!(p.verbatim(), "284-7");
    }

    #[test]
    fn roman_range() {
        let p = parse_pages("iii-v");
        assert_eq!(p.kind, PageKind::RomanRange);
        assert_eq!(p.verbatim(), "iii-v");
    }

    #[test]
    fn composite_is_text() {
        let p = parse_pages("1151-68; discussion 1149-50");
        assert_eq!(p.kind, PageKind::Text);
        assert_eq!(p.verbatim(), "1151-68; discussion 1149-50");
    }

    #[test]
    fn singles_and_extents() {
        assert_eq!(parse_pages("675").kind, PageKind::Single);
        assert_eq!(parse_pages("S105").kind, PageKind::Single);
        assert_eq!(parse_pages("[about 3 p.]").kind, PageKind::Text);
        assert_eq!(parse_pages("S93-9").kind, PageKind::Text);
    }

    #[test]
    fn descending_range_is_text() {
        assert_eq!(parse_pages("59-1").kind, PageKind::Text);
        assert_eq!(parse_pages("300-200").kind, PageKind::Text);
    }
}
