//! Labeled documents and the seeded stratified train/test split.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::math;
use crate::rng::SplitMix64;

/// Binary sentiment label. Serialized as `POS` / `NEG`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Neg,
    Pos,
}

impl Polarity {
    /// Both classes, in the fixed iteration order used everywhere a
    /// per-class loop must be deterministic.
    pub const BOTH: [Polarity; 2] = [Polarity::Neg, Polarity::Pos];

    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Neg => "NEG",
            Polarity::Pos => "POS",
        }
    }

    /// Parses a label, ignoring ASCII case: `POS`, `pos`, `Pos` all work.
    pub fn parse(s: &str) -> Option<Polarity> {
        if s.eq_ignore_ascii_case("POS") {
            Some(Polarity::Pos)
        } else if s.eq_ignore_ascii_case("NEG") {
            Some(Polarity::Neg)
        } else {
            None
        }
    }

    pub fn other(self) -> Polarity {
        match self {
            Polarity::Neg => Polarity::Pos,
            Polarity::Pos => Polarity::Neg,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One text with its row-ordinal id and, when known, its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: u32,
    pub text: String,
    pub label: Option<Polarity>,
}

/// A corpus in which every document carries a label and ids are unique.
/// Document order is preserved from construction and is part of the value:
/// two corpora with the same documents in different orders are different.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCorpus {
    documents: Vec<Document>,
}

impl LabeledCorpus {
    pub fn from_documents(documents: Vec<Document>) -> Result<Self, CorpusError> {
        let mut seen = alloc::collections::BTreeSet::new();
        for doc in &documents {
            if doc.label.is_none() {
                return Err(CorpusError::UnlabeledDocument { id: doc.id });
            }
            if !seen.insert(doc.id) {
                return Err(CorpusError::DuplicateId { id: doc.id });
            }
        }
        Ok(LabeledCorpus { documents })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    /// Label of the document at `index`. Present by construction.
    pub fn label_at(&self, index: usize) -> Polarity {
        self.documents[index].label.expect("labeled by construction")
    }

    pub fn class_count(&self, class: Polarity) -> usize {
        self.documents.iter().filter(|d| d.label == Some(class)).count()
    }

    pub fn into_documents(self) -> Vec<Document> {
        self.documents
    }
}

/// Parameters for [`stratified_split`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitSpec {
    /// Fraction of each class assigned to the test side; strictly between
    /// 0 and 1.
    pub test_fraction: f64,
    pub seed: u64,
}

/// Splits a corpus into (train, test) with the class balance preserved on
/// both sides.
///
/// Per class the test size is `round(class_size * test_fraction)`, rounding
/// half away from zero. Classes are drawn NEG first, then POS, from a single
/// SplitMix64 stream seeded with `spec.seed`; within a class the documents
/// are shuffled and the first `test_size` go to the test side. Both outputs
/// keep the original corpus order, so membership depends only on (ids,
/// labels, seed, fraction) and not on any intermediate shuffle layout.
pub fn stratified_split(
    corpus: &LabeledCorpus,
    spec: &SplitSpec,
) -> Result<(LabeledCorpus, LabeledCorpus), CorpusError> {
    if !(spec.test_fraction > 0.0 && spec.test_fraction < 1.0) {
        return Err(CorpusError::InvalidTestFraction { value: spec.test_fraction });
    }
    for class in Polarity::BOTH {
        let n = corpus.class_count(class);
        if n < 2 {
            return Err(CorpusError::ClassTooSmall { class, count: n });
        }
    }

    let mut rng = SplitMix64::new(spec.seed);
    let mut is_test = alloc::vec![false; corpus.len()];
    for class in Polarity::BOTH {
        let mut members: Vec<usize> = (0..corpus.len())
            .filter(|&i| corpus.label_at(i) == class)
            .collect();
        let test_size = math::round(members.len() as f64 * spec.test_fraction) as usize;
        rng.shuffle(&mut members);
        for &i in members.iter().take(test_size) {
            is_test[i] = true;
        }
    }

    let mut train = Vec::new();
    let mut test = Vec::new();
    for (i, doc) in corpus.documents.iter().enumerate() {
        if is_test[i] {
            test.push(doc.clone());
        } else {
            train.push(doc.clone());
        }
    }
    Ok((
        LabeledCorpus { documents: train },
        LabeledCorpus { documents: test },
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub enum CorpusError {
    UnlabeledDocument { id: u32 },
    DuplicateId { id: u32 },
    InvalidTestFraction { value: f64 },
    ClassTooSmall { class: Polarity, count: usize },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::UnlabeledDocument { id } => {
                write!(f, "document {id} has no label")
            }
            CorpusError::DuplicateId { id } => write!(f, "duplicate document id {id}"),
            CorpusError::InvalidTestFraction { value } => {
                write!(f, "test fraction {value} is not strictly between 0 and 1")
            }
            CorpusError::ClassTooSmall { class, count } => {
                write!(f, "class {class} has {count} documents, need at least 2 to split")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CorpusError {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    fn corpus(pos: usize, neg: usize) -> LabeledCorpus {
        let mut docs = Vec::new();
        for i in 0..pos {
            docs.push(Document {
                id: i as u32,
                text: format!("pos text {i}"),
                label: Some(Polarity::Pos),
            });
        }
        for i in 0..neg {
            docs.push(Document {
                id: (pos + i) as u32,
                text: format!("neg text {i}"),
                label: Some(Polarity::Neg),
            });
        }
        LabeledCorpus::from_documents(docs).unwrap()
    }

    #[test]
    fn label_parsing_ignores_case() {
        assert_eq!(Polarity::parse("POS"), Some(Polarity::Pos));
        assert_eq!(Polarity::parse("pos"), Some(Polarity::Pos));
        assert_eq!(Polarity::parse("Neg"), Some(Polarity::Neg));
        assert_eq!(Polarity::parse("positive"), None);
        assert_eq!(Polarity::parse(""), None);
    }

    #[test]
    fn construction_rejects_duplicates_and_missing_labels() {
        let dup = alloc::vec![
            Document { id: 3, text: "a".to_string(), label: Some(Polarity::Pos) },
            Document { id: 3, text: "b".to_string(), label: Some(Polarity::Neg) },
        ];
        assert_eq!(
            LabeledCorpus::from_documents(dup),
            Err(CorpusError::DuplicateId { id: 3 })
        );
        let unlabeled = alloc::vec![Document { id: 0, text: "a".to_string(), label: None }];
        assert_eq!(
            LabeledCorpus::from_documents(unlabeled),
            Err(CorpusError::UnlabeledDocument { id: 0 })
        );
    }

    #[test]
    fn split_sizes_match_rounding_rule() {
        // 1000 per class at 0.30 gives a 300+300 test side.
        let c = corpus(1000, 1000);
        let (train, test) = stratified_split(&c, &SplitSpec { test_fraction: 0.30, seed: 1 }).unwrap();
        assert_eq!(test.len(), 600);
        assert_eq!(train.len(), 1400);
        assert_eq!(test.class_count(Polarity::Pos), 300);
        assert_eq!(test.class_count(Polarity::Neg), 300);

        // 10 POS + 4 NEG at 0.5 gives 5 POS + 2 NEG in test.
        let c = corpus(10, 4);
        let (train, test) = stratified_split(&c, &SplitSpec { test_fraction: 0.5, seed: 1 }).unwrap();
        assert_eq!(test.class_count(Polarity::Pos), 5);
        assert_eq!(test.class_count(Polarity::Neg), 2);
        assert_eq!(train.class_count(Polarity::Pos), 5);
        assert_eq!(train.class_count(Polarity::Neg), 2);
    }

    #[test]
    fn split_rounds_half_away_from_zero() {
        // 5 per class at 0.30: round(1.5) = 2 test documents per class.
        let c = corpus(5, 5);
        let (_, test) = stratified_split(&c, &SplitSpec { test_fraction: 0.30, seed: 9 }).unwrap();
        assert_eq!(test.class_count(Polarity::Pos), 2);
        assert_eq!(test.class_count(Polarity::Neg), 2);
    }

    #[test]
    fn same_seed_same_split_different_seed_differs() {
        let c = corpus(40, 40);
        let spec = SplitSpec { test_fraction: 0.30, seed: 77 };
        let (tr1, te1) = stratified_split(&c, &spec).unwrap();
        let (tr2, te2) = stratified_split(&c, &spec).unwrap();
        assert_eq!(tr1, tr2);
        assert_eq!(te1, te2);
        let mut saw_different = false;
        for seed in 0..20 {
            let (_, te) = stratified_split(&c, &SplitSpec { test_fraction: 0.30, seed }).unwrap();
            if te != te1 {
                saw_different = true;
                break;
            }
        }
        assert!(saw_different, "20 seeds all produced the same membership");
    }

    #[test]
    fn split_partitions_and_preserves_order() {
        let c = corpus(13, 9);
        let (train, test) = stratified_split(&c, &SplitSpec { test_fraction: 0.4, seed: 5 }).unwrap();
        let mut ids: Vec<u32> = train.documents().iter().chain(test.documents()).map(|d| d.id).collect();
        ids.sort_unstable();
        let expected: Vec<u32> = (0..22).collect();
        assert_eq!(ids, expected);
        for part in [&train, &test] {
            let part_ids: Vec<u32> = part.documents().iter().map(|d| d.id).collect();
            let mut sorted = part_ids.clone();
            sorted.sort_unstable();
            assert_eq!(part_ids, sorted, "corpus order not preserved");
        }
    }

    #[test]
    fn split_rejects_bad_inputs() {
        let c = corpus(10, 1);
        let err = stratified_split(&c, &SplitSpec { test_fraction: 0.3, seed: 0 }).unwrap_err();
        assert_eq!(err, CorpusError::ClassTooSmall { class: Polarity::Neg, count: 1 });

        let c = corpus(10, 10);
        for bad in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
            assert!(matches!(
                stratified_split(&c, &SplitSpec { test_fraction: bad, seed: 0 }),
                Err(CorpusError::InvalidTestFraction { .. })
            ));
        }
    }
}
