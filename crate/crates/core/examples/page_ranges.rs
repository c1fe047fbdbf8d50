// Compress page ranges by dropping the digits the last page shares with
// the first.

use std::error::Error;

use vanref::model::{complete_last_page, parse_pages};
use vanref::render::compress_page_range;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (first, last) in [("284", "287"), ("1151", "1168"), ("93", "113"), ("230", "238"), ("99", "101")] {
        let short = compress_page_range(first, last)?;
        println!("{first}-{last} -> {short}");
        if let Some((a, b)) = short.split_once('-') {
            assert_eq!(complete_last_page(a, b), last);
        }
    }
    assert_eq!(compress_page_range("284", "287")?, "284-7");
    assert_eq!(compress_page_range("99", "101")?, "99-101");
    assert_eq!(compress_page_range("242", "242")?, "242");
    assert!(compress_page_range("50", "40").is_err());

    // roman and lettered ranges are kept as written
    let roman = parse_pages("iii-v");
    println!("{:?} -> {}", roman.kind, roman.verbatim());
    assert_eq!(roman.verbatim(), "iii-v");
    assert_eq!(parse_pages("S93-9").verbatim(), "S93-9");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
