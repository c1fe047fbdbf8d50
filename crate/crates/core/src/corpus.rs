//! The bundled sample database, manuscript and expected output.

/// Database with one entry per sample reference format.
pub const DATABASE: &str = include_str!("../corpus/vancouver.bib");

/// Manuscript citing every database entry once.
pub const MANUSCRIPT: &str = include_str!("../corpus/manuscript.tex");

/// Expected rendering per key, as `key<TAB>reference` lines.
pub const GOLDEN: &str = include_str!("../corpus/golden.tsv");

/// `(key, expected reference)` pairs in citation order.
pub fn golden() -> Vec<(&'static str, &'static str)> {
    GOLDEN
        .lines()
        .filter_map(|line| line.split_once('\t'))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_has_every_printed_sample() {
        assert_eq!(golden().len(), 46);
    }
}
