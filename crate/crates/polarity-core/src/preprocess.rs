//! Text preprocessing chain: tokenize, strip social tokens, erase
//! punctuation, filter number tokens, lowercase, remove stopwords, stem.
//!
//! Stages run in that fixed order; each is individually gated by
//! [`PreprocessConfig`]. Every stage maps a token list to a token list, so
//! they compose freely and each one is testable alone.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use unicode_properties::{GeneralCategoryGroup, UnicodeGeneralCategory};

use crate::corpus::{Document, Polarity};
use crate::stem;

/// A document reduced to its term sequence. Duplicates and order are kept;
/// weighting decides later what to do with repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessedDocument {
    pub id: u32,
    pub label: Option<Polarity>,
    pub terms: Vec<String>,
}

/// Which stages run. Defaults: everything on except social-token stripping,
/// with an empty stopword set (an empty set removes nothing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreprocessConfig {
    pub erase_punctuation: bool,
    pub filter_numbers: bool,
    pub lowercase: bool,
    pub stopwords: BTreeSet<String>,
    pub stem: bool,
    pub strip_social_tokens: bool,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            erase_punctuation: true,
            filter_numbers: true,
            lowercase: true,
            stopwords: BTreeSet::new(),
            stem: true,
            strip_social_tokens: false,
        }
    }
}

fn is_punct(c: char) -> bool {
    c.general_category_group() == GeneralCategoryGroup::Punctuation
}

/// True for tokens the social-media stage owns: hashtags, @-mentions, and
/// http(s) URLs.
fn is_social_token(token: &str) -> bool {
    token.starts_with('#')
        || token.starts_with('@')
        || token.starts_with("http://")
        || token.starts_with("https://")
}

/// Splits text on whitespace, then splits each chunk at boundaries between
/// punctuation and non-punctuation (Unicode categories), keeping punctuation
/// runs as their own tokens: `Great movie!!` gives `[Great, movie, !!]` and
/// `it's` gives `[it, ', s]`.
///
/// A chunk that starts with `#`, `@`, `http://` or `https://` is emitted
/// whole, so hashtags, mentions and URLs survive as single tokens for the
/// social-token stage to inspect; when that stage is disabled, punctuation
/// erasure dismantles them instead.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    for chunk in text.split_whitespace() {
        if is_social_token(chunk) {
            tokens.push(chunk.to_string());
            continue;
        }
        let mut run = String::new();
        let mut run_is_punct = false;
        for c in chunk.chars() {
            let p = is_punct(c);
            if !run.is_empty() && p != run_is_punct {
                tokens.push(core::mem::take(&mut run));
            }
            run_is_punct = p;
            run.push(c);
        }
        if !run.is_empty() {
            tokens.push(run);
        }
    }
    tokens
}

/// Deletes punctuation characters inside each token and drops tokens that
/// become empty: `don't` becomes `dont`, a bare `!!` disappears.
pub fn erase_punctuation(tokens: Vec<String>) -> Vec<String> {
    tokens
        .into_iter()
        .filter_map(|t| {
            let kept: String = t.chars().filter(|&c| !is_punct(c)).collect();
            if kept.is_empty() {
                None
            } else {
                Some(kept)
            }
        })
        .collect()
}

/// Drops tokens made up entirely of numeric characters: `2` goes, `mp3`
/// stays.
pub fn filter_numbers(tokens: Vec<String>) -> Vec<String> {
    tokens
        .into_iter()
        .filter(|t| !t.chars().all(char::is_numeric))
        .collect()
}

/// Unicode-aware case folding per token.
pub fn lowercase_tokens(tokens: Vec<String>) -> Vec<String> {
    tokens.into_iter().map(|t| t.to_lowercase()).collect()
}

/// Removes tokens that exactly match a stopword.
pub fn remove_stopwords(tokens: Vec<String>, stopwords: &BTreeSet<String>) -> Vec<String> {
    tokens.into_iter().filter(|t| !stopwords.contains(t)).collect()
}

/// Drops hashtags, @-mentions and http(s) URLs.
pub fn strip_social_tokens(tokens: Vec<String>) -> Vec<String> {
    tokens.into_iter().filter(|t| !is_social_token(t)).collect()
}

/// Runs the enabled stages in the fixed order and returns the document's
/// term sequence. Never emits an empty-string term.
pub fn preprocess_document(doc: &Document, config: &PreprocessConfig) -> ProcessedDocument {
    let mut tokens = tokenize(&doc.text);
    if config.strip_social_tokens {
        tokens = strip_social_tokens(tokens);
    }
    if config.erase_punctuation {
        tokens = erase_punctuation(tokens);
    }
    if config.filter_numbers {
        tokens = filter_numbers(tokens);
    }
    if config.lowercase {
        tokens = lowercase_tokens(tokens);
    }
    if !config.stopwords.is_empty() {
        tokens = remove_stopwords(tokens, &config.stopwords);
    }
    if config.stem {
        tokens = tokens.iter().map(|t| stem::stem(t)).collect();
    }
    tokens.retain(|t| !t.is_empty());
    ProcessedDocument { id: doc.id, label: doc.label, terms: tokens }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn toks(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn tokenize_splits_punctuation_runs() {
        assert_eq!(tokenize("Great movie!!"), toks(&["Great", "movie", "!!"]));
        assert_eq!(tokenize("it's good"), toks(&["it", "'", "s", "good"]));
        assert_eq!(tokenize("  spaced \t out\n"), toks(&["spaced", "out"]));
        assert_eq!(tokenize(""), Vec::<String>::new());
    }

    #[test]
    fn tokenize_keeps_social_chunks_whole() {
        assert_eq!(
            tokenize("loving my #galaxy from @samsung https://t.co/x1"),
            toks(&["loving", "my", "#galaxy", "from", "@samsung", "https://t.co/x1"])
        );
        // Mid-token markers are not social prefixes.
        assert_eq!(tokenize("price#tag"), toks(&["price", "#", "tag"]));
    }

    #[test]
    fn erase_punctuation_examples() {
        assert_eq!(erase_punctuation(toks(&["don't"])), toks(&["dont"]));
        assert_eq!(erase_punctuation(toks(&["!!"])), Vec::<String>::new());
        assert_eq!(erase_punctuation(toks(&["well-made"])), toks(&["wellmade"]));
    }

    #[test]
    fn filter_numbers_examples() {
        assert_eq!(filter_numbers(toks(&["2", "mp3", "10", "ok"])), toks(&["mp3", "ok"]));
    }

    #[test]
    fn lowercase_handles_unicode() {
        assert_eq!(lowercase_tokens(toks(&["GREAT", "Çok"])), toks(&["great", "çok"]));
    }

    #[test]
    fn stopword_removal_is_exact_match() {
        let mut stop = BTreeSet::new();
        stop.insert("the".to_string());
        stop.insert("a".to_string());
        assert_eq!(
            remove_stopwords(toks(&["the", "them", "a", "movie"]), &stop),
            toks(&["them", "movie"])
        );
    }

    #[test]
    fn strip_social_examples() {
        assert_eq!(
            strip_social_tokens(toks(&["#apple", "@user", "http://x.co", "https://x.co", "apple"])),
            toks(&["apple"])
        );
    }

    #[test]
    fn pipeline_composes_in_order() {
        let doc = Document {
            id: 0,
            text: "Running FAST!!".to_string(),
            label: Some(Polarity::Pos),
        };
        let out = preprocess_document(&doc, &PreprocessConfig::default());
        assert_eq!(out.terms, toks(&["run", "fast"]));
        assert_eq!(out.id, 0);
        assert_eq!(out.label, Some(Polarity::Pos));
    }

    #[test]
    fn pipeline_with_social_strip_and_stopwords() {
        let mut config = PreprocessConfig::default();
        config.strip_social_tokens = true;
        config.stopwords.insert("my".to_string());
        let doc = Document {
            id: 7,
            text: "Loving my new #galaxy 100% https://t.co/abc".to_string(),
            label: None,
        };
        let out = preprocess_document(&doc, &config);
        assert_eq!(out.terms, toks(&["love", "new"]));
    }

    #[test]
    fn empty_text_yields_empty_terms() {
        let doc = Document { id: 1, text: "  !! 42 ".to_string(), label: None };
        let out = preprocess_document(&doc, &PreprocessConfig::default());
        assert_eq!(out.terms, Vec::<String>::new());
    }

    #[test]
    fn stages_skip_when_disabled() {
        let config = PreprocessConfig {
            erase_punctuation: false,
            filter_numbers: false,
            lowercase: false,
            stopwords: BTreeSet::new(),
            stem: false,
            strip_social_tokens: false,
        };
        let doc = Document { id: 2, text: "Keep IT raw!! 42".to_string(), label: None };
        let out = preprocess_document(&doc, &config);
        assert_eq!(out.terms, toks(&["Keep", "IT", "raw", "!!", "42"]));
    }
}
