use proptest::prelude::*;

use vanref::{normalize, parse_database, render_reference, scan_citations, StyleConfig};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn arbitrary_bib_text_never_panics(text in "[@a-z{}()\"#=,% \\n\\\\0-9~$-]{0,300}") {
        let db = parse_database(&text);
        for d in db.diagnostics.iter().filter(|d| d.is_error()) {
            let span = d.span.expect("errors carry a position");
            prop_assert!(span.start <= text.len());
        }
        for entry in &db.entries {
            let _ = render_reference(&normalize(entry).record, &StyleConfig::default());
        }
    }

    #[test]
    fn arbitrary_tex_never_panics(text in "[\\\\a-z{}\\[\\], %\\n]{0,200}") {
        let (index, diags) = scan_citations(&text);
        for (key, offset) in index.occurrences() {
            prop_assert_eq!(&text[*offset..*offset + key.len()], key.as_str());
        }
        prop_assert!(diags.iter().all(|d| d.span.is_some()));
    }

    #[test]
    fn unicode_text_never_panics(text in "\\PC{0,120}") {
        let _ = parse_database(&format!("@misc{{k, title = {{{text}}}}}"));
        let _ = scan_citations(&format!("\\cite{{{text}}}"));
    }
}
