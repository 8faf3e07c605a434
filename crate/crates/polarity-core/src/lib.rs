//! Deterministic building blocks for binary sentiment classification.
//!
//! The crate covers the full modelling path: labeled corpus handling with a
//! seeded stratified split, a text preprocessing chain (tokenize, punctuation
//! erasure, number filter, case folding, stopwords, Snowball stemming, social
//! token stripping), a TF/TF-IDF vector space, three classifiers trained from
//! scratch (multinomial naive Bayes, a CART-style decision tree, a linear SVM
//! via Pegasos), and threshold-free evaluation (confusion matrices, derived
//! metrics, ROC curves, AUC).
//!
//! Everything here is `no_std + alloc` compatible and fully deterministic:
//! identical inputs and seeds produce bit-identical outputs. All transcendental
//! math goes through `libm` so results do not depend on the platform libm or
//! on whether the `std` feature is enabled.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod classifier;
pub mod corpus;
pub mod eval;
mod math;
pub mod preprocess;
pub mod rng;
pub mod stem;
pub mod vectorspace;

pub use classifier::{
    dt_train, nb_train, primal_objective, score_all, svm_train, Classifier, DecisionTreeModel,
    LinearSvmModel, NaiveBayesModel, PerClass, TrainConfig, TrainError, TreeNode,
};
pub use corpus::{stratified_split, CorpusError, Document, LabeledCorpus, Polarity, SplitSpec};
pub use eval::{
    auc_trapezoid, confusion, metrics, render_summary_table, roc_curve, ConfusionMatrix,
    EvalError, MetricsRow, RocCurve, SummaryEntry,
};
pub use preprocess::{preprocess_document, PreprocessConfig, ProcessedDocument};
pub use vectorspace::{
    build_vocabulary, vectorize, DocumentVector, TfVariant, Vocabulary, VocabularyError,
    VocabularyPolicy, WeightingScheme,
};
