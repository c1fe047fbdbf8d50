// Render single entries of several types, with the default style and
// with a shorter author limit.

use std::error::Error;

use vanref::{render_reference, Bibliography, StyleConfig};

const DB: &str = r#"
@article{rose,
  author  = {Rose, M. E. and Huerbin, M. B. and Melick, J. and Marion, D. W.
             and Palmer, A. M. and Schiding, J. K. and Kochanek, P. M.},
  title   = {Regulation of interstitial excitatory amino acid concentrations
             after cortical contusion injury},
  journal = {Brain Res}, year = 2002, volume = 935, number = {1-2},
  pages   = {40--46},
}

@patent{pagedas,
  inventor = {Pagedas, Anthony C.},
  assignee = {{Ancel Surgical R\&D Inc.}},
  title    = {Flexible endoscopic grasping and cutting device and positioning
              tool assembly},
  country  = {United States}, number = {US 20020103498},
  year = 2002, month = aug, day = 1,
}

@dictionary{filamin,
  title = {Dorland's illustrated medical dictionary}, edition = {29th ed.},
  address = {Philadelphia}, publisher = {W.B. Saunders}, year = 2000,
  term = {Filamin}, pages = {675},
}
"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let bib = Bibliography::parse(DB);
    let style = StyleConfig::default();
    for rec in &bib.records {
        println!("{}", render_reference(rec, &style)?);
    }
    let rose = bib.get("rose").ok_or("missing entry")?;
    assert!(render_reference(rose, &style)?.starts_with("Rose ME, Huerbin MB, Melick J, Marion DW, Palmer AM, Schiding JK, et al. "));

    let short = StyleConfig::default().with_max_authors(3)?.with_etal_text("and others");
    let line = render_reference(rose, &short)?;
    println!("{line}");
    assert!(line.starts_with("Rose ME, Huerbin MB, Melick J, and others. "));

    let filamin = bib.get("filamin").ok_or("missing entry")?;
    assert!(render_reference(filamin, &style)?.ends_with("Filamin; p. 675."));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
