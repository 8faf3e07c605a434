//! Term vocabulary and TF/TF-IDF document vectors.
//!
//! The vocabulary is built from training documents only; document frequency
//! is "number of documents containing the term at least once". IDF is the
//! unsmoothed ln(N/df), which is safe because every vocabulary term was
//! observed in at least one document. Vectors are sparse: zero weights are
//! never stored.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::corpus::Polarity;
use crate::math;
use crate::preprocess::ProcessedDocument;

/// Term frequency variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TfVariant {
    /// The raw occurrence count.
    Raw,
    /// `1 + ln(count)`, 0 when the count is 0.
    Log,
    /// `0.5 + 0.5 * count / max_count_in_doc`; terms absent from the
    /// document stay at weight 0 (no entry), not 0.5.
    Augmented,
    /// 1 when present, 0 when absent.
    Binary,
}

impl TfVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            TfVariant::Raw => "raw",
            TfVariant::Log => "log",
            TfVariant::Augmented => "augmented",
            TfVariant::Binary => "binary",
        }
    }

    pub fn parse(s: &str) -> Option<TfVariant> {
        match s {
            "raw" => Some(TfVariant::Raw),
            "log" => Some(TfVariant::Log),
            "augmented" => Some(TfVariant::Augmented),
            "binary" => Some(TfVariant::Binary),
            _ => None,
        }
    }
}

/// Term weighting: a TF variant, optionally multiplied by IDF.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightingScheme {
    pub tf: TfVariant,
    pub use_idf: bool,
}

impl Default for WeightingScheme {
    fn default() -> Self {
        WeightingScheme { tf: TfVariant::Raw, use_idf: true }
    }
}

/// How the vocabulary is selected from the training terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VocabularyPolicy {
    /// Keep terms appearing in at least this many documents. 0 and 1 are
    /// equivalent.
    pub min_doc_freq: u32,
    /// Keep at most this many terms after ordering, when set.
    pub max_terms: Option<usize>,
    /// When set, the vocabulary is exactly this list (in the given order,
    /// deduplicated) intersected with the observed terms; frequency policy
    /// is ignored.
    pub manual_terms: Option<Vec<String>>,
}

/// An ordered term set with document frequencies.
///
/// Ordering: descending document frequency, ties broken lexicographically,
/// so ordinals are reproducible. A manual vocabulary keeps its given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    terms: Vec<String>,
    index: BTreeMap<String, usize>,
    doc_freq: Vec<u32>,
    n_docs: u32,
}

impl Vocabulary {
    /// Rebuilds a vocabulary from dumped parts, revalidating the invariants.
    pub fn from_parts(
        terms: Vec<(String, u32)>,
        n_docs: u32,
    ) -> Result<Vocabulary, VocabularyError> {
        if terms.is_empty() {
            return Err(VocabularyError::EmptyVocabulary);
        }
        let mut index = BTreeMap::new();
        let mut names = Vec::with_capacity(terms.len());
        let mut doc_freq = Vec::with_capacity(terms.len());
        for (ordinal, (term, df)) in terms.into_iter().enumerate() {
            if df == 0 || df > n_docs {
                return Err(VocabularyError::BadDocFreq { term, df, n_docs });
            }
            if index.insert(term.clone(), ordinal).is_some() {
                return Err(VocabularyError::DuplicateTerm { term });
            }
            names.push(term);
            doc_freq.push(df);
        }
        Ok(Vocabulary { terms: names, index, doc_freq, n_docs })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_docs(&self) -> u32 {
        self.n_docs
    }

    pub fn ordinal(&self, term: &str) -> Option<usize> {
        self.index.get(term).copied()
    }

    pub fn term(&self, ordinal: usize) -> &str {
        &self.terms[ordinal]
    }

    /// Terms in ordinal order.
    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn doc_freq(&self, term: &str) -> Option<u32> {
        self.ordinal(term).map(|i| self.doc_freq[i])
    }

    pub fn doc_freq_at(&self, ordinal: usize) -> u32 {
        self.doc_freq[ordinal]
    }
}

/// Builds the vocabulary for a set of (training) documents under a policy.
pub fn build_vocabulary(
    docs: &[ProcessedDocument],
    policy: &VocabularyPolicy,
) -> Result<Vocabulary, VocabularyError> {
    if docs.is_empty() {
        return Err(VocabularyError::NoDocuments);
    }
    let mut df: BTreeMap<&str, u32> = BTreeMap::new();
    for doc in docs {
        let distinct: BTreeSet<&str> = doc.terms.iter().map(String::as_str).collect();
        for term in distinct {
            *df.entry(term).or_insert(0) += 1;
        }
    }

    let selected: Vec<(String, u32)> = if let Some(manual) = &policy.manual_terms {
        let mut seen = BTreeSet::new();
        manual
            .iter()
            .filter(|t| seen.insert(t.as_str()))
            .filter_map(|t| df.get(t.as_str()).map(|&d| (t.clone(), d)))
            .collect()
    } else {
        let mut kept: Vec<(String, u32)> = df
            .into_iter()
            .filter(|&(_, d)| d >= policy.min_doc_freq.max(1))
            .map(|(t, d)| (t.to_string(), d))
            .collect();
        kept.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        if let Some(cap) = policy.max_terms {
            kept.truncate(cap);
        }
        kept
    };

    Vocabulary::from_parts(selected, docs.len() as u32)
}

/// Raw occurrence count of `term` in the document.
pub fn tf_raw(term: &str, doc: &ProcessedDocument) -> u32 {
    doc.terms.iter().filter(|t| t.as_str() == term).count() as u32
}

/// Log-scaled term frequency: `1 + ln(count)`, with `tf_log(0) = 0`.
pub fn tf_log(count: u32) -> f64 {
    if count == 0 {
        0.0
    } else {
        1.0 + math::ln(count as f64)
    }
}

/// Augmented frequency of a term already known to occur in the document:
/// `0.5 + 0.5 * count / max_count`, where `max_count` is the highest
/// occurrence count of any term in the document.
pub fn tf_augmented(term: &str, doc: &ProcessedDocument) -> f64 {
    let count = tf_raw(term, doc);
    debug_assert!(count > 0, "augmented TF is only defined for present terms");
    let mut by_term: BTreeMap<&str, u32> = BTreeMap::new();
    for t in &doc.terms {
        *by_term.entry(t.as_str()).or_insert(0) += 1;
    }
    let max = by_term.values().copied().max().unwrap_or(1);
    0.5 + 0.5 * count as f64 / max as f64
}

/// Inverse document frequency `ln(n_docs / df)`. Nonnegative, since
/// `1 <= df <= n_docs` holds for every vocabulary term.
pub fn idf(term: &str, vocab: &Vocabulary) -> Result<f64, VocabularyError> {
    match vocab.doc_freq(term) {
        Some(df) => Ok(math::ln(vocab.n_docs() as f64 / df as f64)),
        None => Err(VocabularyError::UnknownTerm { term: term.to_string() }),
    }
}

/// A sparse weighted document. Entries map vocabulary ordinals to nonzero
/// weights.
#[derive(Debug, Clone, PartialEq)]
pub struct DocumentVector {
    pub doc_id: u32,
    pub label: Option<Polarity>,
    pub entries: BTreeMap<usize, f64>,
}

impl DocumentVector {
    pub fn weight(&self, ordinal: usize) -> f64 {
        self.entries.get(&ordinal).copied().unwrap_or(0.0)
    }
}

/// Projects a document onto the vocabulary under a weighting scheme.
/// Out-of-vocabulary terms are ignored; weights that come out exactly zero
/// (a term present in every document under IDF) are not stored.
pub fn vectorize(
    doc: &ProcessedDocument,
    vocab: &Vocabulary,
    scheme: WeightingScheme,
) -> DocumentVector {
    let mut counts: BTreeMap<&str, u32> = BTreeMap::new();
    for t in &doc.terms {
        *counts.entry(t.as_str()).or_insert(0) += 1;
    }
    let max_count = counts.values().copied().max().unwrap_or(0);

    let mut entries = BTreeMap::new();
    for (term, &count) in &counts {
        let Some(ordinal) = vocab.ordinal(term) else { continue };
        let tf = match scheme.tf {
            TfVariant::Raw => count as f64,
            TfVariant::Log => tf_log(count),
            TfVariant::Augmented => 0.5 + 0.5 * count as f64 / max_count as f64,
            TfVariant::Binary => 1.0,
        };
        let weight = if scheme.use_idf {
            let df = vocab.doc_freq_at(ordinal);
            tf * math::ln(vocab.n_docs() as f64 / df as f64)
        } else {
            tf
        };
        if weight != 0.0 {
            entries.insert(ordinal, weight);
        }
    }
    DocumentVector { doc_id: doc.id, label: doc.label, entries }
}

#[derive(Debug, Clone, PartialEq)]
pub enum VocabularyError {
    NoDocuments,
    EmptyVocabulary,
    UnknownTerm { term: String },
    DuplicateTerm { term: String },
    BadDocFreq { term: String, df: u32, n_docs: u32 },
}

impl fmt::Display for VocabularyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VocabularyError::NoDocuments => f.write_str("no documents to build a vocabulary from"),
            VocabularyError::EmptyVocabulary => {
                f.write_str("vocabulary selection produced no terms")
            }
            VocabularyError::UnknownTerm { term } => {
                write!(f, "term {term:?} is not in the vocabulary")
            }
            VocabularyError::DuplicateTerm { term } => {
                write!(f, "term {term:?} appears twice in the vocabulary")
            }
            VocabularyError::BadDocFreq { term, df, n_docs } => {
                write!(f, "term {term:?} has document frequency {df} outside 1..={n_docs}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for VocabularyError {}
