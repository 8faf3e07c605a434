//! Multinomial naive Bayes over (possibly fractional) term weights.
//!
//! Class priors are document-count proportions. Term likelihoods are
//! Laplace-smoothed weight proportions: with W(c,t) the summed weight of
//! term t in class c and W(c) the total over the vocabulary,
//! P(t|c) = (W(c,t) + alpha) / (W(c) + alpha * |V|). The score is the POS
//! versus NEG log-odds, so 0 is the decision boundary.

use alloc::collections::BTreeMap;

use crate::classifier::{check_labels, require_both_classes, Classifier, PerClass, TrainError};
use crate::corpus::Polarity;
use crate::math;
use crate::vectorspace::DocumentVector;

#[derive(Debug, Clone, PartialEq)]
pub struct NaiveBayesModel {
    pub class_log_prior: PerClass<f64>,
    /// ln P(t|c) for terms with nonzero class weight; everything else falls
    /// back to `absent_log_likelihood`.
    pub term_log_likelihood: PerClass<BTreeMap<usize, f64>>,
    /// ln(alpha / (W(c) + alpha * |V|)): the likelihood of a vocabulary term
    /// never seen with class c.
    pub absent_log_likelihood: PerClass<f64>,
    pub smoothing_alpha: f64,
    pub vocab_size: usize,
}

/// Trains on labeled vectors. `vocab_size` is the vocabulary cardinality
/// |V| used by the smoothing denominator; every entry ordinal must be below
/// it.
pub fn nb_train(
    vectors: &[DocumentVector],
    vocab_size: usize,
    alpha: f64,
) -> Result<NaiveBayesModel, TrainError> {
    // Negated form on purpose: NaN must fail the check too.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(alpha > 0.0) {
        return Err(TrainError::InvalidHyperparameter { name: "nb_alpha" });
    }
    if vocab_size == 0 {
        return Err(TrainError::InvalidHyperparameter { name: "vocab_size" });
    }
    let labels = check_labels(vectors)?;
    require_both_classes(&labels)?;

    let mut doc_count = PerClass { neg: 0u32, pos: 0u32 };
    let mut weight_sum: PerClass<BTreeMap<usize, f64>> =
        PerClass { neg: BTreeMap::new(), pos: BTreeMap::new() };
    let mut weight_total = PerClass { neg: 0.0f64, pos: 0.0f64 };

    for (v, &label) in vectors.iter().zip(&labels) {
        *doc_count.get_mut(label) += 1;
        let sums = weight_sum.get_mut(label);
        for (&ordinal, &w) in &v.entries {
            debug_assert!(ordinal < vocab_size, "entry ordinal outside the vocabulary");
            *sums.entry(ordinal).or_insert(0.0) += w;
            *weight_total.get_mut(label) += w;
        }
    }

    let n = vectors.len() as f64;
    let mut model = NaiveBayesModel {
        class_log_prior: PerClass {
            neg: math::ln(doc_count.neg as f64 / n),
            pos: math::ln(doc_count.pos as f64 / n),
        },
        term_log_likelihood: PerClass { neg: BTreeMap::new(), pos: BTreeMap::new() },
        absent_log_likelihood: PerClass { neg: 0.0, pos: 0.0 },
        smoothing_alpha: alpha,
        vocab_size,
    };
    for class in Polarity::BOTH {
        let denominator = weight_total.get(class) + alpha * vocab_size as f64;
        *model.absent_log_likelihood.get_mut(class) = math::ln(alpha / denominator);
        let likelihoods = model.term_log_likelihood.get_mut(class);
        for (&ordinal, &w) in weight_sum.get(class) {
            likelihoods.insert(ordinal, math::ln((w + alpha) / denominator));
        }
    }
    Ok(model)
}

impl NaiveBayesModel {
    fn log_likelihood(&self, class: Polarity, ordinal: usize) -> f64 {
        self.term_log_likelihood
            .get(class)
            .get(&ordinal)
            .copied()
            .unwrap_or(*self.absent_log_likelihood.get(class))
    }
}

impl Classifier for NaiveBayesModel {
    /// POS-vs-NEG log-odds: prior difference plus the weighted sum of
    /// per-term log-likelihood differences. An empty vector scores the
    /// prior difference alone.
    fn score(&self, vector: &DocumentVector) -> f64 {
        let mut score = self.class_log_prior.pos - self.class_log_prior.neg;
        for (&ordinal, &w) in &vector.entries {
            score += w
                * (self.log_likelihood(Polarity::Pos, ordinal)
                    - self.log_likelihood(Polarity::Neg, ordinal));
        }
        score
    }

    fn predict(&self, vector: &DocumentVector) -> Polarity {
        if self.score(vector) > 0.0 {
            Polarity::Pos
        } else {
            Polarity::Neg
        }
    }
}
