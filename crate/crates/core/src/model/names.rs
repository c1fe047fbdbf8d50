//! Contributor name lists in BibTeX name syntax.

use std::fmt;

use thiserror::Error;

use crate::syntax::strip_latex;

/// A personal or corporate contributor.
///
/// When `literal` is set the name is an organization and the personal
/// parts are empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PersonName {
    pub family: String,
    pub given: String,
    pub particle: Option<String>,
    pub suffix: Option<String>,
    pub literal: Option<String>,
}

impl PersonName {
    pub fn personal(family: &str, given: &str) -> Self {
        PersonName {
            family: family.to_string(),
            given: given.to_string(),
            ..Default::default()
        }
    }

    pub fn organization(name: &str) -> Self {
        PersonName {
            literal: Some(name.to_string()),
            ..Default::default()
        }
    }

    pub fn with_particle(mut self, particle: &str) -> Self {
        self.particle = Some(particle.to_string());
        self
    }

    pub fn with_suffix(mut self, suffix: &str) -> Self {
        self.suffix = Some(suffix.to_string());
        self
    }

    pub fn is_organization(&self) -> bool {
        self.literal.is_some()
    }

    /// The name in `von Last, Jr, First` form, bracing parts that would
    /// otherwise be read back differently.
    pub fn to_bibtex(&self) -> String {
        if let Some(lit) = &self.literal {
            return format!("{{{lit}}}");
        }
        let mut out = String::new();
        if let Some(p) = &self.particle {
            out.push_str(p);
            out.push(' ');
        }
        let needs_brace = self.family.contains(char::is_whitespace)
            || self.family.starts_with(|c: char| !c.is_uppercase());
        if needs_brace {
            out.push('{');
            out.push_str(&self.family);
            out.push('}');
        } else {
            out.push_str(&self.family);
        }
        if let Some(s) = &self.suffix {
            out.push_str(", ");
            out.push_str(s);
        }
        out.push_str(", ");
        out.push_str(&self.given);
        out.trim_end().to_string()
    }
}

/// The field a contributor list was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Author,
    Organization,
    Editor,
    Compiler,
    Inventor,
    Assignee,
    Cartographer,
}

impl Role {
    pub fn from_field(name: &str) -> Option<Role> {
        Some(match name {
            "author" => Role::Author,
            "organization" => Role::Organization,
            "editor" => Role::Editor,
            "compiler" => Role::Compiler,
            "inventor" => Role::Inventor,
            "assignee" => Role::Assignee,
            "cartographer" => Role::Cartographer,
            _ => return None,
        })
    }

    pub fn field_name(self) -> &'static str {
        match self {
            Role::Author => "author",
            Role::Organization => "organization",
            Role::Editor => "editor",
            Role::Compiler => "compiler",
            Role::Inventor => "inventor",
            Role::Assignee => "assignee",
            Role::Cartographer => "cartographer",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.field_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContributorList {
    pub names: Vec<PersonName>,
    pub role: Role,
    /// The source list ended with `and others`.
    pub truncated: bool,
}

impl ContributorList {
    pub fn new(role: Role, names: Vec<PersonName>) -> Self {
        ContributorList {
            names,
            role,
            truncated: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NameError {
    /// Zero-based position of the empty name within the list.
    #[error("empty name at position {0} of the name list")]
    EmptyName(usize),
}

/// Split `s` on `sep` bytes at brace depth zero.
fn split_top_level(s: &str, is_sep: impl Fn(char) -> bool) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            c if depth == 0 && is_sep(c) => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn words(s: &str) -> Vec<&str> {
    split_top_level(s, char::is_whitespace)
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect()
}

/// True when the whole string is one brace group.
fn fully_braced(s: &str) -> bool {
    if !(s.starts_with('{') && s.ends_with('}')) {
        return false;
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 && i + 1 != s.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

/// A word counts as lowercase (a `von` candidate) when its first character
/// outside braces is a lowercase letter.
fn is_lower_word(w: &str) -> bool {
    w.chars().next().is_some_and(|c| c.is_lowercase())
}

fn join_stripped(ws: &[&str]) -> String {
    strip_latex(&ws.join(" "))
}

/// Split `von Last` words: the von part runs to the last lowercase word
/// that is not the final word.
fn split_von_last<'w>(ws: &[&'w str]) -> (Vec<&'w str>, Vec<&'w str>) {
    if ws.len() <= 1 {
        return (Vec::new(), ws.to_vec());
    }
    let last_lower = ws[..ws.len() - 1].iter().rposition(|w| is_lower_word(w));
    match last_lower {
        Some(i) if is_lower_word(ws[0]) => (ws[..=i].to_vec(), ws[i + 1..].to_vec()),
        _ => (Vec::new(), ws.to_vec()),
    }
}

fn non_empty(s: String) -> Option<String> {
    if s.is_empty() {
        None
    } else {
        Some(s)
    }
}

fn parse_one(name: &str, role: Role) -> PersonName {
    let name = name.trim();
    if role == Role::Organization || fully_braced(name) {
        return PersonName::organization(&strip_latex(name));
    }
    let parts: Vec<&str> = split_top_level(name, |c| c == ',')
        .into_iter()
        .map(str::trim)
        .collect();
    let (von_last, jr, first): (Vec<&str>, &str, String) = match parts.as_slice() {
        [single] => {
            let ws = words(single);
            // First von Last: First ends before the first lowercase word,
            // and Last keeps at least the final word
            let n = ws.len();
            let first_lower = ws[..n.saturating_sub(1)].iter().position(|w| is_lower_word(w));
            let split = first_lower.unwrap_or(n.saturating_sub(1));
            (ws[split..].to_vec(), "", join_stripped(&ws[..split]))
        }
        [vl, first] => (words(vl), "", join_stripped(&words(first))),
        [vl, jr, rest @ ..] => (words(vl), *jr, strip_latex(&rest.join(", "))),
        [] => unreachable!("split yields at least one part"),
    };
    let (von, last) = split_von_last(&von_last);
    PersonName {
        family: join_stripped(&last),
        given: first,
        particle: non_empty(join_stripped(&von)),
        suffix: non_empty(strip_latex(jr)),
        literal: None,
    }
}

/// Parse an `and`-separated name list. A trailing `and others` marks the
/// list as truncated.
pub fn parse_names(field: &str, role: Role) -> Result<ContributorList, NameError> {
    let ws = words(field);
    let mut groups: Vec<Vec<&str>> = vec![Vec::new()];
    for w in ws {
        if w.eq_ignore_ascii_case("and") {
            groups.push(Vec::new());
        } else {
            groups.last_mut().expect("non-empty").push(w);
        }
    }
    let mut truncated = false;
    if groups.len() > 1
        && groups.last().is_some_and(|g| g.len() == 1 && g[0].eq_ignore_ascii_case("others"))
    {
        groups.pop();
        truncated = true;
    }
    let mut names = Vec::with_capacity(groups.len());
    for (i, g) in groups.iter().enumerate() {
        if g.is_empty() {
            return Err(NameError::EmptyName(i));
        }
        let person = parse_one(&g.join(" "), role);
        if person.family.is_empty() && person.literal.as_deref().is_none_or(str::is_empty) {
            return Err(NameError::EmptyName(i));
        }
        names.push(person);
    }
    Ok(ContributorList {
        names,
        role,
        truncated,
    })
}

/// NLM initials: the first letter of every space- or hyphen-separated
/// given-name token, uppercased, without punctuation.
pub fn initials(given: &str) -> String {
    given
        .split(|c: char| c.is_whitespace() || c == '-')
        .filter_map(|tok| tok.chars().find(|c| c.is_alphanumeric()))
        .flat_map(char::to_uppercase)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn authors(s: &str) -> ContributorList {
        parse_names(s, Role::Author).unwrap()
    }

    #[test]
    fn two_personal_names() {
        let list = authors("Halpern, Scott D. and Ubel, Peter A.");
        assert_eq!(
            list.names,
            vec![
                PersonName::personal("Halpern", "Scott D."),
                PersonName::personal("Ubel", "Peter A."),
            ]
        );
        assert!(!list.truncated);
    }

    #[test]
    fn braced_organization() {
        let list = authors("{Diabetes Prevention Program Research Group}");
        assert_eq!(
            list.names,
            vec![PersonName::organization("Diabetes Prevention Program Research Group")]
        );
    }

    #[test]
    fn suffix_form() {
        let list = authors("Gilstrap, 3rd, Larry C.");
        assert_eq!(
            list.names[0],
            PersonName::personal("Gilstrap", "Larry C.").with_suffix("3rd")
        );
    }

    #[test]
    fn particle_in_von_last_first() {
        let list = authors("van Moorselaar, R. J.");
        assert_eq!(
            list.names[0],
            PersonName::personal("Moorselaar", "R. J.").with_particle("van")
        );
    }

    #[test]
    fn first_von_last_form() {
        let list = authors("Ludwig van Beethoven and Jean de la Fontaine and Donald E. Knuth");
        assert_eq!(
            list.names[0],
            PersonName::personal("Beethoven", "Ludwig").with_particle("van")
        );
        assert_eq!(
            list.names[1],
            PersonName::personal("Fontaine", "Jean").with_particle("de la")
        );
        assert_eq!(list.names[2], PersonName::personal("Knuth", "Donald E."));
    }

    #[test]
    fn single_word_name() {
        assert_eq!(authors("Aristotle").names[0], PersonName::personal("Aristotle", ""));
    }

    #[test]
    fn and_inside_braces_does_not_split() {
        let list = authors("{Barnes and Noble} and Smith, J.");
        assert_eq!(list.names.len(), 2);
        assert_eq!(list.names[0], PersonName::organization("Barnes and Noble"));
    }

    #[test]
    fn and_others_truncates() {
        let list = authors("Rose, M. E. and others");
        assert_eq!(list.names.len(), 1);
        assert!(list.truncated);
    }

    #[test]
    fn organization_role_is_always_literal() {
        let list = parse_names("Alf-One Study Group", Role::Organization).unwrap();
        assert_eq!(list.names[0], PersonName::organization("Alf-One Study Group"));
    }

    #[test]
    fn latex_stripped_from_parts() {
        let list = parse_names(r"{Ancel Surgical R\&D Inc.}", Role::Assignee).unwrap();
        assert_eq!(list.names[0], PersonName::organization("Ancel Surgical R&D Inc."));
    }

    #[test]
    fn empty_names_rejected() {
        assert_eq!(parse_names("", Role::Author), Err(NameError::EmptyName(0)));
        assert_eq!(
            parse_names("A, B and and C, D", Role::Author),
            Err(NameError::EmptyName(1))
        );
        assert_eq!(parse_names("A, B and", Role::Author), Err(NameError::EmptyName(1)));
    }

    #[test]
    fn initials_examples() {
        assert_eq!(initials("Scott D."), "SD");
        assert_eq!(initials(""), "");
        assert_eq!(initials("Jean-Luc"), "JL");
        assert_eq!(initials("R. J."), "RJ");
        assert_eq!(initials("larry c"), "LC");
    }

    // independent oracle for initials over hand-enumerated given names
    #[test]
    fn initials_match_hand_enumeration() {
        let cases = [
            ("Scott D.", "SD"),
            ("Peter A.", "PA"),
            ("Arthur L.", "AL"),
            ("Marie-Claire", "MC"),
            ("Jean-Luc Pierre", "JLP"),
            ("K. W.", "KW"),
            ("Larry C.", "LC"),
        ];
        for (given, want) in cases {
            assert_eq!(initials(given), want, "{given}");
        }
    }

    fn cap_word() -> impl Strategy<Value = String> {
        "[A-Z][a-z]{1,8}"
    }

    fn person() -> impl Strategy<Value = PersonName> {
        (
            prop::collection::vec(cap_word(), 1..3),
            prop::collection::vec(cap_word(), 0..3),
            prop::option::of(prop::sample::select(vec!["van", "de la", "von der", "da"])),
            prop::option::of(prop::sample::select(vec!["Jr", "3rd", "II"])),
        )
            .prop_map(|(family, given, particle, suffix)| PersonName {
                family: family.join(" "),
                given: given.join(" "),
                particle: particle.map(str::to_string),
                suffix: suffix.map(str::to_string),
                literal: None,
            })
    }

    proptest! {
        #[test]
        fn bibtex_form_reparses_identically(p in person()) {
            let back = parse_names(&p.to_bibtex(), Role::Author).unwrap();
            prop_assert_eq!(back.names.len(), 1);
            prop_assert_eq!(&back.names[0], &p);
        }

        #[test]
        fn initials_length_equals_token_count(tokens in prop::collection::vec("[A-Za-z][a-z]{0,6}\\.?", 0..5), hyphen in any::<bool>()) {
            let sep = if hyphen { "-" } else { " " };
            let given = tokens.join(sep);
            prop_assert_eq!(initials(&given).chars().count(), tokens.len());
        }
    }
}
