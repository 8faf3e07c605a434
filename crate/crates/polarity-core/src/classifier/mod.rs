//! The three classifiers: multinomial naive Bayes, a CART-style decision
//! tree, and a linear SVM trained with Pegasos.
//!
//! All of them train on sparse [`DocumentVector`]s and expose a real-valued
//! score whose sign (or distance from the tree's 0.5 leaf probability)
//! decides the class. Ties always go to NEG, so predictions are total.

use alloc::vec::Vec;
use core::fmt;

use crate::corpus::Polarity;
use crate::vectorspace::DocumentVector;

pub mod decision_tree;
pub mod linear_svm;
pub mod naive_bayes;

pub use decision_tree::{dt_train, DecisionTreeModel, TreeNode};
pub use linear_svm::{primal_objective, svm_train, LinearSvmModel};
pub use naive_bayes::{nb_train, NaiveBayesModel};

/// One value per class, addressed by [`Polarity`].
#[derive(Debug, Clone, PartialEq)]
pub struct PerClass<T> {
    pub neg: T,
    pub pos: T,
}

impl<T> PerClass<T> {
    pub fn get(&self, class: Polarity) -> &T {
        match class {
            Polarity::Neg => &self.neg,
            Polarity::Pos => &self.pos,
        }
    }

    pub fn get_mut(&mut self, class: Polarity) -> &mut T {
        match class {
            Polarity::Neg => &mut self.neg,
            Polarity::Pos => &mut self.pos,
        }
    }
}

/// Hyperparameters for all three trainers. Fields are prefixed by the
/// classifier they apply to; `seed` drives the SVM's epoch shuffles.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainConfig {
    pub nb_alpha: f64,
    pub dt_max_depth: u32,
    pub dt_min_leaf: u32,
    pub svm_c: f64,
    pub svm_epochs: u32,
    pub svm_normalize: bool,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            nb_alpha: 1.0,
            dt_max_depth: 10,
            dt_min_leaf: 2,
            svm_c: 1.0,
            svm_epochs: 20,
            svm_normalize: false,
            seed: 42,
        }
    }
}

/// Scoring interface shared by the three models.
///
/// `score` is the model's real-valued evidence for POS; `predict` applies the
/// model's decision threshold with ties going to NEG.
pub trait Classifier {
    fn score(&self, vector: &DocumentVector) -> f64;
    fn predict(&self, vector: &DocumentVector) -> Polarity;
}

/// Collects (score, prediction) for a batch, in input order.
pub fn score_all<C: Classifier>(model: &C, vectors: &[DocumentVector]) -> Vec<(f64, Polarity)> {
    vectors.iter().map(|v| (model.score(v), model.predict(v))).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum TrainError {
    NoVectors,
    UnlabeledVector { doc_id: u32 },
    SingleClass { class: Polarity },
    InvalidHyperparameter { name: &'static str },
}

impl fmt::Display for TrainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrainError::NoVectors => f.write_str("no training vectors"),
            TrainError::UnlabeledVector { doc_id } => {
                write!(f, "training vector for document {doc_id} has no label")
            }
            TrainError::SingleClass { class } => {
                write!(f, "all training vectors are {class}; need both classes")
            }
            TrainError::InvalidHyperparameter { name } => {
                write!(f, "hyperparameter {name} is out of range")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TrainError {}

/// Extracts the label of every vector; errors on the first unlabeled one.
/// Single-class data passes: the tree trains on it (to a lone leaf), while
/// NB and the SVM add [`require_both_classes`].
pub(crate) fn check_labels(vectors: &[DocumentVector]) -> Result<Vec<Polarity>, TrainError> {
    if vectors.is_empty() {
        return Err(TrainError::NoVectors);
    }
    let mut labels = Vec::with_capacity(vectors.len());
    for v in vectors {
        match v.label {
            Some(label) => labels.push(label),
            None => return Err(TrainError::UnlabeledVector { doc_id: v.doc_id }),
        }
    }
    Ok(labels)
}

pub(crate) fn require_both_classes(labels: &[Polarity]) -> Result<(), TrainError> {
    for class in Polarity::BOTH {
        if labels.iter().all(|&l| l == class) {
            return Err(TrainError::SingleClass { class });
        }
    }
    Ok(())
}
