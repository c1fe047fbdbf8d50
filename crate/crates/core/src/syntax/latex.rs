use crate::diag::{Diagnostic, DiagnosticKind};

/// Commands whose argument is kept and the command itself dropped silently.
const TRANSPARENT_COMMANDS: &[&str] = &[
    "textbf", "textit", "emph", "textrm", "textsf", "texttt", "textsc", "textup", "textnormal",
    "mbox", "bf", "it", "em", "rm", "sc", "sf", "tt", "relax", "protect", "url", "nolinkurl",
];

/// Reduce a field value to plain text.
pub fn strip_latex(value: &str) -> String {
    strip_latex_with_diagnostics(value).0
}

/// Like [`strip_latex`], also reporting control sequences that were dropped
/// without a known meaning.
pub fn strip_latex_with_diagnostics(value: &str) -> (String, Vec<Diagnostic>) {
    let mut out = String::with_capacity(value.len());
    let mut diags = Vec::new();
    let mut chars = value.chars().peekable();
    let mut in_math = false;

    while let Some(c) = chars.next() {
        match c {
            '\\' => match chars.peek().copied() {
                Some(sym @ ('&' | '%' | '_' | '$' | '#' | '{' | '}' | ' ')) => {
                    chars.next();
                    out.push(sym);
                }
                Some(c2) if c2.is_ascii_alphabetic() => {
                    let mut name = String::new();
                    while let Some(&n) = chars.peek() {
                        if n.is_ascii_alphabetic() {
                            name.push(n);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    // a control word swallows the whitespace after it
                    while chars.peek().is_some_and(|c| *c == ' ') {
                        chars.next();
                    }
                    if !TRANSPARENT_COMMANDS.contains(&name.as_str()) {
                        diags.push(Diagnostic::warning(
                            DiagnosticKind::UnknownCommand,
                            format!("dropped unknown control sequence `\\{name}`"),
                        ));
                    }
                }
                Some('\\') => {
                    chars.next();
                    out.push(' ');
                }
                Some(other) => {
                    chars.next();
                    diags.push(Diagnostic::warning(
                        DiagnosticKind::UnknownCommand,
                        format!("dropped unknown control symbol `\\{other}`"),
                    ));
                }
                None => {}
            },
            '{' | '}' => {}
            '$' => {
                in_math = !in_math;
                out.push('$');
            }
            '~' if !in_math => out.push(' '),
            '-' if !in_math => {
                out.push('-');
                while chars.peek() == Some(&'-') {
                    chars.next();
                }
            }
            _ => out.push(c),
        }
    }
    (super::normalize_whitespace(&out), diags)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escaped_ampersand() {
        assert_eq!(strip_latex(r"Ancel Surgical R\&D Inc."), "Ancel Surgical R&D Inc.");
    }

    #[test]
    fn unwraps_protection_braces() {
        assert_eq!(strip_latex("{NLM}"), "NLM");
        assert_eq!(strip_latex("The {ANA} acts"), "The ANA acts");
    }

    #[test]
    fn identity_on_plain_text() {
        assert_eq!(strip_latex("plain text"), "plain text");
    }

    #[test]
    fn dashes_outside_math_only() {
        assert_eq!(strip_latex("284--287"), "284-287");
        assert_eq!(strip_latex("a---b"), "a-b");
        assert_eq!(strip_latex("$a--b$"), "$a--b$");
    }

    #[test]
    fn other_escapes() {
        assert_eq!(strip_latex(r"100\% of syndrome\_title"), "100% of syndrome_title");
    }

    #[test]
    fn formatting_commands_keep_argument() {
        let (s, d) = strip_latex_with_diagnostics(r"\textbf{@map} and \emph{x}");
        assert_eq!(s, "@map and x");
        assert!(d.is_empty());
    }

    #[test]
    fn unknown_command_dropped_with_diagnostic() {
        let (s, d) = strip_latex_with_diagnostics(r"a \foo{b} c");
        assert_eq!(s, "a b c");
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].kind, DiagnosticKind::UnknownCommand);
    }
}
