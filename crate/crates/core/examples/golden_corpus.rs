// Render the bundled sample database in manuscript order and compare
// every line with its expected text.

use std::error::Error;
use std::io;

use vanref::cli::{cmd_format, RunConfig, Selection};
use vanref::corpus;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let bib = dir.path().join("vancouver.bib");
    let tex = dir.path().join("manuscript.tex");
    std::fs::write(&bib, corpus::DATABASE)?;
    std::fs::write(&tex, corpus::MANUSCRIPT)?;

    let mut out = Vec::new();
    let code = cmd_format(&RunConfig::new(vec![bib], Selection::Tex(tex)), &mut out, &mut io::stderr());
    assert_eq!(code, 0);
    let text = String::from_utf8(out)?;
    print!("{text}");

    let mut checked = 0;
    for line in text.lines() {
        let reference = line.split_once(". ").map_or(line, |(_, r)| r);
        if let Some((_, expected)) = corpus::golden().into_iter().find(|(_, e)| *e == reference) {
            assert_eq!(reference, expected);
            checked += 1;
        }
    }
    println!("{checked} of {} expected references reproduced", corpus::golden().len());
    assert_eq!(checked, corpus::golden().len());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
