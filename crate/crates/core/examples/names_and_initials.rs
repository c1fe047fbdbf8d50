// Split BibTeX name lists and print them the way the style does.

use std::error::Error;

use vanref::model::{initials, parse_names, Role};
use vanref::render::{format_contributors, StyleConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let style = StyleConfig::default();

    let authors = parse_names("Gilstrap, 3rd, L. C. and van Moorselaar, R. J. and Jean-Paul Sartre", Role::Author)?;
    for name in &authors.names {
        println!("{name:?}");
    }
    assert_eq!(
        format_contributors(std::slice::from_ref(&authors), &style),
        "Gilstrap LC 3rd, van Moorselaar RJ, Sartre JP."
    );

    let org = parse_names("{Diabetes Prevention Program Research Group}", Role::Author)?;
    assert_eq!(format_contributors(&[org], &style), "Diabetes Prevention Program Research Group.");

    let editors = parse_names("Foley, K. M. and Gelband, H.", Role::Editor)?;
    assert_eq!(format_contributors(&[editors], &style), "Foley KM, Gelband H, editors.");

    let many = parse_names(
        "A, Aa and B, Bb and C, Cc and D, Dd and E, Ee and F, Ff and G, Gg",
        Role::Author,
    )?;
    let line = format_contributors(&[many], &style);
    println!("{line}");
    assert_eq!(line, "A A, B B, C C, D D, E E, F F, et al.");

    assert_eq!(initials("Mary-Ann Elizabeth"), "MAE");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
