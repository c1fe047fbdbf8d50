//! Partial publication dates.

/// A date with optional month and day precision.
///
/// Copyright dates (`c2000-01`, `c2000 -`) set `circa`; values that fit no
/// recognized pattern are kept in `raw` and re-emitted verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialDate {
    pub year: Option<i32>,
    /// Second year of a span, as written (`01` in `c2000-01`).
    pub year_end: Option<String>,
    /// 1-12.
    pub month: Option<u8>,
    pub day: Option<u8>,
    pub day_end: Option<u8>,
    pub circa: bool,
    /// Trailing ` -`: an ongoing publication.
    pub open_ended: bool,
    pub raw: Option<String>,
}

const MONTH_NAMES: [&str; 12] = [
    "january",
    "february",
    "march",
    "april",
    "may",
    "june",
    "july",
    "august",
    "september",
    "october",
    "november",
    "december",
];

fn month_number(tok: &str) -> Option<u8> {
    let t = tok.trim_end_matches('.').to_lowercase();
    if let Ok(n) = t.parse::<u8>() {
        return (1..=12).contains(&n).then_some(n);
    }
    if t.len() < 3 {
        return None;
    }
    MONTH_NAMES
        .iter()
        .position(|m| m.starts_with(&t))
        .map(|i| i as u8 + 1)
}

fn day_number(tok: &str) -> Option<u8> {
    if tok.is_empty() || tok.len() > 2 || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    tok.parse().ok().filter(|d| (1..=31).contains(d))
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

impl PartialDate {
    pub fn year(year: i32) -> Self {
        PartialDate {
            year: Some(year),
            ..Default::default()
        }
    }

    pub fn ymd(year: i32, month: u8, day: u8) -> Self {
        PartialDate {
            year: Some(year),
            month: Some(month),
            day: Some(day),
            ..Default::default()
        }
    }

    pub fn raw(text: &str) -> Self {
        PartialDate {
            raw: Some(text.to_string()),
            ..Default::default()
        }
    }

    pub fn is_raw(&self) -> bool {
        self.raw.is_some()
    }

    /// No year and no raw text.
    pub fn is_empty(&self) -> bool {
        self.year.is_none() && self.raw.is_none()
    }

    /// Drop month and day precision.
    pub fn year_only(&self) -> PartialDate {
        PartialDate {
            month: None,
            day: None,
            day_end: None,
            ..self.clone()
        }
    }

    fn is_valid(&self) -> bool {
        (self.day.is_none() || self.month.is_some())
            && match (self.day, self.day_end) {
                (None, Some(_)) => false,
                (Some(d), Some(e)) => e >= d,
                _ => true,
            }
    }
}

/// Parse `YYYY`, `YYYY Mon`, `YYYY Mon D`, `YYYY Mon D-D`, `cYYYY`,
/// `cYYYY-YY` and open-ended `YYYY -` forms. Anything else is kept raw.
pub fn parse_date(field: &str) -> PartialDate {
    let text = field.trim();
    if text.is_empty() {
        return PartialDate::default();
    }
    parse_structured(text).unwrap_or_else(|| PartialDate::raw(text))
}

fn parse_structured(text: &str) -> Option<PartialDate> {
    let mut toks: Vec<&str> = text.split_whitespace().collect();
    let mut date = PartialDate::default();

    if toks.len() > 1 && toks.last() == Some(&"-") {
        date.open_ended = true;
        toks.pop();
    }

    let mut year_tok = *toks.first()?;
    if let Some(rest) = year_tok.strip_prefix('c') {
        date.circa = true;
        year_tok = rest;
    }
    if let Some(rest) = year_tok.strip_suffix('-') {
        // `2002-` written without the space
        if date.open_ended {
            return None;
        }
        date.open_ended = true;
        year_tok = rest;
    }
    let (year, end) = match year_tok.split_once('-') {
        Some((y, e)) => (y, Some(e)),
        None => (year_tok, None),
    };
    if !all_digits(year) || year.len() > 4 {
        return None;
    }
    date.year = Some(year.parse().ok()?);
    if let Some(e) = end {
        if !all_digits(e) || e.len() > 4 {
            return None;
        }
        date.year_end = Some(e.to_string());
    }

    match &toks[1..] {
        [] => {}
        [month, rest @ ..] if !date.open_ended && date.year_end.is_none() => {
            date.month = Some(month_number(month)?);
            match rest {
                [] => {}
                [day] => match day.split_once('-') {
                    Some((d, e)) => {
                        date.day = Some(day_number(d)?);
                        date.day_end = Some(day_number(e)?);
                    }
                    None => date.day = Some(day_number(day)?),
                },
                _ => return None,
            }
        }
        _ => return None,
    }
    date.is_valid().then_some(date)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_date() {
        assert_eq!(parse_date("2002 Jul 25"), PartialDate::ymd(2002, 7, 25));
    }

    #[test]
    fn full_month_name_from_macro() {
        assert_eq!(parse_date("2002 July 25"), PartialDate::ymd(2002, 7, 25));
        assert_eq!(parse_date("2002 7").month, Some(7));
    }

    #[test]
    fn day_range() {
        let d = parse_date("2001 Sep 13-15");
        assert_eq!(
            d,
            PartialDate {
                day_end: Some(15),
                ..PartialDate::ymd(2001, 9, 13)
            }
        );
    }

    #[test]
    fn copyright_span() {
        let d = parse_date("c2000-01");
        assert!(d.circa);
        assert_eq!(d.year, Some(2000));
        assert_eq!(d.year_end.as_deref(), Some("01"));
        assert!(!d.is_raw());
    }

    #[test]
    fn open_ended() {
        let d = parse_date("c2000 -");
        assert!(d.circa && d.open_ended);
        assert_eq!(d.year, Some(2000));
        let d = parse_date("2002 -");
        assert!(!d.circa && d.open_ended);
    }

    #[test]
    fn year_month() {
        let d = parse_date("2002 Feb");
        assert_eq!((d.year, d.month, d.day), (Some(2002), Some(2), None));
    }

    #[test]
    fn unparseable_kept_raw() {
        for s in ["Spring 2002", "2002 Foo 3", "2002 Jul 3-1", "2002 Jul 32", "n.d."] {
            assert_eq!(parse_date(s), PartialDate::raw(s), "{s}");
        }
    }

    #[test]
    fn empty_is_degenerate() {
        assert!(parse_date("  ").is_empty());
    }
}
