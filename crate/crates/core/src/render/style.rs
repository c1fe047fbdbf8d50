use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StyleError {
    #[error("max_authors_before_etal must be at least 1")]
    ZeroMaxAuthors,
}

const ENGLISH_MONTHS: [&str; 12] = [
    "Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
];

/// Tunable parts of the style. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StyleConfig {
    max_authors: usize,
    etal_text: String,
    month_names: [String; 12],
    compress_pages: bool,
}

impl Default for StyleConfig {
    fn default() -> Self {
        StyleConfig {
            max_authors: 6,
            etal_text: "et al.".to_string(),
            month_names: ENGLISH_MONTHS.map(str::to_string),
            compress_pages: true,
        }
    }
}

impl StyleConfig {
    /// Lists longer than `n` are cut to their first `n` names plus et al.
    pub fn with_max_authors(mut self, n: usize) -> Result<Self, StyleError> {
        if n == 0 {
            return Err(StyleError::ZeroMaxAuthors);
        }
        self.max_authors = n;
        Ok(self)
    }

    pub fn with_etal_text(mut self, text: &str) -> Self {
        self.etal_text = text.to_string();
        self
    }

    pub fn with_month_names(mut self, names: [String; 12]) -> Self {
        self.month_names = names;
        self
    }

    pub fn with_page_compression(mut self, on: bool) -> Self {
        self.compress_pages = on;
        self
    }

    pub fn max_authors_before_etal(&self) -> usize {
        self.max_authors
    }

    pub fn etal_text(&self) -> &str {
        &self.etal_text
    }

    /// Abbreviated name for month `m` in 1..=12.
    pub fn month_name(&self, m: u8) -> &str {
        &self.month_names[usize::from(m.clamp(1, 12)) - 1]
    }

    pub fn compress_pages(&self) -> bool {
        self.compress_pages
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let s = StyleConfig::default();
        assert_eq!(s.max_authors_before_etal(), 6);
        assert_eq!(s.etal_text(), "et al.");
        assert_eq!(s.month_name(7), "Jul");
        assert!(s.compress_pages());
    }

    #[test]
    fn zero_max_rejected() {
        assert_eq!(
            StyleConfig::default().with_max_authors(0),
            Err(StyleError::ZeroMaxAuthors)
        );
    }
}
