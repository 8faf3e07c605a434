//! Stopword list loading: one word per line, `#` comments, blanks ignored.

use std::collections::BTreeSet;
use std::path::Path;

use crate::PipelineError;

/// Bundled English list, available without any external file.
const BUILTIN: &str = include_str!("../fixtures/stopwords_en.txt");

fn parse(content: &str) -> BTreeSet<String> {
    content
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(str::to_string)
        .collect()
}

pub fn builtin_stopwords() -> BTreeSet<String> {
    parse(BUILTIN)
}

pub fn load_stopwords(path: &Path) -> Result<BTreeSet<String>, PipelineError> {
    let content = std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    Ok(parse(&content))
}
