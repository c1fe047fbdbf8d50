macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(parse_bib, "parse_bib.rs");
example!(names_and_initials, "names_and_initials.rs");
example!(page_ranges, "page_ranges.rs");
example!(render_reference, "render_reference.rs");
example!(citation_order, "citation_order.rs");
example!(golden_corpus, "golden_corpus.rs");
example!(check_database, "check_database.rs");

#[test]
fn parse_bib_runs() {
    parse_bib::run_example().expect("parse_bib example should run");
}

#[test]
fn names_and_initials_runs() {
    names_and_initials::run_example().expect("names_and_initials example should run");
}

#[test]
fn page_ranges_runs() {
    page_ranges::run_example().expect("page_ranges example should run");
}

#[test]
fn render_reference_runs() {
    render_reference::run_example().expect("render_reference example should run");
}

#[test]
fn citation_order_runs() {
    citation_order::run_example().expect("citation_order example should run");
}

#[test]
fn golden_corpus_runs() {
    golden_corpus::run_example().expect("golden_corpus example should run");
}

#[test]
fn check_database_runs() {
    check_database::run_example().expect("check_database example should run");
}
