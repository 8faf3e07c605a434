//! Linear soft-margin SVM trained with Pegasos.
//!
//! Minimizes (lambda/2)||w||^2 + (1/n) sum max(0, 1 - y(w.x + b)) with
//! lambda = 1/(C * n), learning rate eta_t = 1/(lambda * t), and one seeded
//! shuffle per epoch. The bias moves with the same eta_t on margin
//! violations but is not regularized. The returned weights are the average
//! of the final epoch's iterates; the running average of every epoch is
//! evaluated on the training objective and kept in `epoch_objectives` as a
//! convergence diagnostic. Updates are plain dense passes over w (no
//! scale-factor trick), chosen for auditability at this data scale.

use alloc::vec;
use alloc::vec::Vec;

use crate::classifier::{check_labels, require_both_classes, Classifier, TrainError};
use crate::corpus::Polarity;
use crate::math;
use crate::rng::SplitMix64;
use crate::vectorspace::DocumentVector;

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSvmModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub regularization_c: f64,
    pub epochs_run: u32,
    /// When set, training L2-normalized each vector and scoring does the
    /// same to its input.
    pub normalize: bool,
    /// Training objective of each epoch's averaged iterate.
    pub epoch_objectives: Vec<f64>,
}

struct Example {
    x: Vec<(usize, f64)>,
    y: f64,
}

fn sparse_dot(w: &[f64], x: &[(usize, f64)]) -> f64 {
    x.iter().map(|&(j, v)| w[j] * v).sum()
}

fn l2_normalize(entries: &mut [(usize, f64)]) {
    let norm = math::sqrt(entries.iter().map(|&(_, v)| v * v).sum());
    if norm > 0.0 {
        for (_, v) in entries.iter_mut() {
            *v /= norm;
        }
    }
}

fn examples(
    vectors: &[DocumentVector],
    labels: &[Polarity],
    normalize: bool,
) -> Vec<Example> {
    vectors
        .iter()
        .zip(labels)
        .map(|(v, &label)| {
            let mut x: Vec<(usize, f64)> = v.entries.iter().map(|(&j, &w)| (j, w)).collect();
            if normalize {
                l2_normalize(&mut x);
            }
            let y = match label {
                Polarity::Pos => 1.0,
                Polarity::Neg => -1.0,
            };
            Example { x, y }
        })
        .collect()
}

fn objective_of(w: &[f64], b: f64, c: f64, data: &[Example]) -> f64 {
    let n = data.len() as f64;
    let lambda = 1.0 / (c * n);
    let reg = 0.5 * lambda * w.iter().map(|v| v * v).sum::<f64>();
    let hinge: f64 = data
        .iter()
        .map(|ex| {
            let margin = ex.y * (sparse_dot(w, &ex.x) + b);
            if margin < 1.0 {
                1.0 - margin
            } else {
                0.0
            }
        })
        .sum();
    reg + hinge / n
}

/// The primal objective (lambda/2)||w||^2 + mean hinge loss, with
/// lambda = 1/(c * n), evaluated on labeled vectors as given (no
/// normalization).
pub fn primal_objective(
    weights: &[f64],
    bias: f64,
    c: f64,
    vectors: &[DocumentVector],
) -> Result<f64, TrainError> {
    // Negated form on purpose: NaN must fail the check too.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(c > 0.0) {
        return Err(TrainError::InvalidHyperparameter { name: "svm_c" });
    }
    let labels = check_labels(vectors)?;
    let data = examples(vectors, &labels, false);
    Ok(objective_of(weights, bias, c, &data))
}

/// Trains on labeled vectors over features `0..dim`.
pub fn svm_train(
    vectors: &[DocumentVector],
    dim: usize,
    c: f64,
    epochs: u32,
    normalize: bool,
    seed: u64,
) -> Result<LinearSvmModel, TrainError> {
    // Negated form on purpose: NaN must fail the check too.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(c > 0.0) {
        return Err(TrainError::InvalidHyperparameter { name: "svm_c" });
    }
    if epochs == 0 {
        return Err(TrainError::InvalidHyperparameter { name: "svm_epochs" });
    }
    let labels = check_labels(vectors)?;
    require_both_classes(&labels)?;
    let data = examples(vectors, &labels, normalize);

    let n = data.len();
    let lambda = 1.0 / (c * n as f64);
    let mut w = vec![0.0f64; dim];
    let mut b = 0.0f64;
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = SplitMix64::new(seed);
    let mut t = 0u64;

    let mut epoch_objectives = Vec::with_capacity(epochs as usize);
    let mut avg_w = vec![0.0f64; dim];
    let mut avg_b = 0.0f64;

    for _ in 0..epochs {
        rng.shuffle(&mut order);
        for v in avg_w.iter_mut() {
            *v = 0.0;
        }
        avg_b = 0.0;
        for &i in &order {
            t += 1;
            let eta = 1.0 / (lambda * t as f64);
            let ex = &data[i];
            let margin = ex.y * (sparse_dot(&w, &ex.x) + b);
            let shrink = 1.0 - eta * lambda;
            for v in w.iter_mut() {
                *v *= shrink;
            }
            if margin < 1.0 {
                for &(j, xv) in &ex.x {
                    w[j] += eta * ex.y * xv;
                }
                b += eta * ex.y;
            }
            for (acc, v) in avg_w.iter_mut().zip(&w) {
                *acc += v;
            }
            avg_b += b;
        }
        for v in avg_w.iter_mut() {
            *v /= n as f64;
        }
        avg_b /= n as f64;
        epoch_objectives.push(objective_of(&avg_w, avg_b, c, &data));
    }

    Ok(LinearSvmModel {
        weights: avg_w,
        bias: avg_b,
        regularization_c: c,
        epochs_run: epochs,
        normalize,
        epoch_objectives,
    })
}

impl Classifier for LinearSvmModel {
    /// Signed distance surrogate w.x + b (after the model's normalization,
    /// when enabled).
    fn score(&self, vector: &DocumentVector) -> f64 {
        let mut x: Vec<(usize, f64)> = vector
            .entries
            .iter()
            .filter(|(&j, _)| j < self.weights.len())
            .map(|(&j, &w)| (j, w))
            .collect();
        if self.normalize {
            l2_normalize(&mut x);
        }
        sparse_dot(&self.weights, &x) + self.bias
    }

    fn predict(&self, vector: &DocumentVector) -> Polarity {
        if self.score(vector) > 0.0 {
            Polarity::Pos
        } else {
            Polarity::Neg
        }
    }
}
