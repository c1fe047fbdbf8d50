// Number references by first citation in a manuscript and pair them
// with database records.

use std::error::Error;

use vanref::{resolve, scan_citations, Bibliography};

const TEX: &str = r"
Transplant outcomes\cite{halpern} differ by cohort.\cite{rose, halpern}
% \cite{commented} is not a citation
Later work\cite[p.~3]{nobody}.
";

const DB: &str = r"
@misc{rose, title = {Second}}
@misc{halpern, title = {First}}
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (index, diagnostics) = scan_citations(TEX);
    assert!(diagnostics.is_empty());
    for key in index.keys() {
        println!("{} {key}", index.number(key).unwrap_or(0));
    }
    assert_eq!(index.keys(), ["halpern", "rose", "nobody"]);

    let bib = Bibliography::parse(DB);
    let (found, missing) = resolve(&index, &bib.records);
    for (n, rec) in &found {
        println!("{n}. {}", rec.title.as_deref().unwrap_or(""));
    }
    assert_eq!(found.iter().map(|(n, _)| *n).collect::<Vec<_>>(), [1, 2]);
    assert_eq!(missing, ["nobody"]);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
