// Parse a small database with a string macro, concatenation and an
// error, and show the recovered entries and diagnostics.

use std::error::Error;

use vanref::syntax::{parse_database, serialize};

const DB: &str = r#"
@string{nejm = {N Engl J Med}}

@article{ok,
  author  = {Halpern, Scott D.},
  title   = {Solid-organ transplantation},
  journal = nejm # { (Boston)},
  year    = 2002, month = jul,
}

@article{broken, title = {no closing brace
@book{after, title = {Still parsed}, year = 2001}
"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let db = parse_database(DB);
    for entry in &db.entries {
        println!("@{}{{{}}}", entry.entry_type, entry.key);
        for (name, value) in &entry.fields {
            println!("  {name} = {value}");
        }
    }
    for d in &db.diagnostics {
        println!("{}", d.display_with("example.bib", DB));
    }
    assert_eq!(db.get("ok").and_then(|e| e.get("journal")), Some("N Engl J Med (Boston)"));
    assert_eq!(db.get("ok").and_then(|e| e.get("month")), Some("July"));
    assert!(db.get("after").is_some());
    assert!(db.has_syntax_errors());

    let again = parse_database(&serialize(&db.entries));
    let content = |e: &vanref::RawEntry| (e.entry_type.clone(), e.key.clone(), e.fields.clone());
    assert!(again.entries.iter().map(content).eq(db.entries.iter().map(content)));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
