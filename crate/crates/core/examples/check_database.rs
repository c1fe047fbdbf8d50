// Lint a database: unknown fields, missing titles, duplicate keys.

use std::error::Error;

use vanref::cli::cmd_check;

const DB: &str = r#"
@article{a, author = {Smith, J.}, journal = {BMJ}, year = 2002, colour = {red}}
@article{b, title = {Fine}, journal = {BMJ}, year = 2002}
@article{b, title = {Shadowed}, journal = {BMJ}, year = 2003}
"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("lint.bib");
    std::fs::write(&path, DB)?;

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cmd_check(&[path], false, &mut out, &mut err);
    let report = String::from_utf8(err)?;
    print!("{report}{}", String::from_utf8(out)?);

    assert_eq!(code, 1);
    assert!(report.contains("missing required field `title`"));
    assert!(report.contains("field `colour`"));
    assert!(report.contains("duplicate key `b`"));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
