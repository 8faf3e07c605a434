//! Confusion matrices, derived metrics, ROC curves and AUC.
//!
//! Every metric is parameterized by which class counts as "positive", so a
//! report can state the NEG row and the POS row of the same experiment. The
//! ROC sweep produces one point per distinct score (predicting positive at
//! score >= threshold), which makes the trapezoid AUC equal to the tie-aware
//! Mann-Whitney statistic.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::corpus::Polarity;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfusionMatrix {
    pub positive_class: Polarity,
    pub true_pos: u32,
    pub false_pos: u32,
    pub true_neg: u32,
    pub false_neg: u32,
}

impl ConfusionMatrix {
    pub fn total(&self) -> u32 {
        self.true_pos + self.false_pos + self.true_neg + self.false_neg
    }

    /// Ground-truth positives.
    pub fn actual_pos(&self) -> u32 {
        self.true_pos + self.false_neg
    }

    /// Ground-truth negatives.
    pub fn actual_neg(&self) -> u32 {
        self.true_neg + self.false_pos
    }
}

/// Counts prediction outcomes against truths, with `positive_class` deciding
/// which side is "positive".
pub fn confusion(
    predictions: &[Polarity],
    truths: &[Polarity],
    positive_class: Polarity,
) -> Result<ConfusionMatrix, EvalError> {
    if predictions.len() != truths.len() {
        return Err(EvalError::LengthMismatch {
            predictions: predictions.len(),
            truths: truths.len(),
        });
    }
    if predictions.is_empty() {
        return Err(EvalError::EmptyInput);
    }
    let mut cm = ConfusionMatrix {
        positive_class,
        true_pos: 0,
        false_pos: 0,
        true_neg: 0,
        false_neg: 0,
    };
    for (&p, &t) in predictions.iter().zip(truths) {
        let predicted_pos = p == positive_class;
        let actually_pos = t == positive_class;
        match (predicted_pos, actually_pos) {
            (true, true) => cm.true_pos += 1,
            (true, false) => cm.false_pos += 1,
            (false, false) => cm.true_neg += 1,
            (false, true) => cm.false_neg += 1,
        }
    }
    Ok(cm)
}

/// The scalar metrics derived from one confusion matrix. `sensitivity`
/// always equals `recall`; both are kept because reports print both names.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsRow {
    pub recall: f64,
    pub precision: f64,
    /// True when tp+fp was 0 and precision was pinned to 0 by convention.
    pub precision_degenerate: bool,
    pub sensitivity: f64,
    pub specificity: f64,
    pub f_measure: f64,
    pub accuracy: f64,
}

/// Derives the metric row. Requires both truth classes to be represented in
/// the matrix; a predicted-positive count of zero is legal and pins
/// precision (and, with it, F) to 0 with the degenerate flag set.
pub fn metrics(cm: &ConfusionMatrix) -> Result<MetricsRow, EvalError> {
    if cm.actual_pos() == 0 {
        return Err(EvalError::TruthClassAbsent { class: cm.positive_class });
    }
    if cm.actual_neg() == 0 {
        return Err(EvalError::TruthClassAbsent { class: cm.positive_class.other() });
    }
    let recall = cm.true_pos as f64 / cm.actual_pos() as f64;
    let predicted_pos = cm.true_pos + cm.false_pos;
    let precision_degenerate = predicted_pos == 0;
    let precision = if precision_degenerate {
        0.0
    } else {
        cm.true_pos as f64 / predicted_pos as f64
    };
    let specificity = cm.true_neg as f64 / cm.actual_neg() as f64;
    let f_measure = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    let accuracy = (cm.true_pos + cm.true_neg) as f64 / cm.total() as f64;
    Ok(MetricsRow {
        recall,
        precision,
        precision_degenerate,
        sensitivity: recall,
        specificity,
        f_measure,
        accuracy,
    })
}

/// An ROC curve with its trapezoid AUC.
#[derive(Debug, Clone, PartialEq)]
pub struct RocCurve {
    /// (false positive rate, true positive rate), from (0,0) to (1,1).
    pub points: Vec<(f64, f64)>,
    pub auc: f64,
    pub positive_class: Polarity,
}

/// Sweeps the decision threshold across the distinct scores, descending;
/// at each threshold every item with score >= threshold is predicted
/// positive. Scores must be finite and both classes must appear in truths.
pub fn roc_curve(
    scores: &[f64],
    truths: &[Polarity],
    positive_class: Polarity,
) -> Result<RocCurve, EvalError> {
    if scores.len() != truths.len() {
        return Err(EvalError::LengthMismatch {
            predictions: scores.len(),
            truths: truths.len(),
        });
    }
    if scores.is_empty() {
        return Err(EvalError::EmptyInput);
    }
    if let Some(index) = scores.iter().position(|s| !s.is_finite()) {
        return Err(EvalError::NonFiniteScore { index });
    }
    let total_pos = truths.iter().filter(|&&t| t == positive_class).count();
    let total_neg = truths.len() - total_pos;
    if total_pos == 0 {
        return Err(EvalError::TruthClassAbsent { class: positive_class });
    }
    if total_neg == 0 {
        return Err(EvalError::TruthClassAbsent { class: positive_class.other() });
    }

    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));

    let mut points = Vec::new();
    points.push((0.0, 0.0));
    let mut tp = 0usize;
    let mut fp = 0usize;
    let mut i = 0;
    while i < order.len() {
        // Consume the whole group sharing this score: one curve point per
        // distinct threshold, which is what makes ties count half under the
        // trapezoid rule.
        let score = scores[order[i]];
        while i < order.len() && scores[order[i]] == score {
            if truths[order[i]] == positive_class {
                tp += 1;
            } else {
                fp += 1;
            }
            i += 1;
        }
        points.push((fp as f64 / total_neg as f64, tp as f64 / total_pos as f64));
    }
    let auc = auc_trapezoid(&points);
    Ok(RocCurve { points, auc, positive_class })
}

/// Trapezoid area under a piecewise-linear curve given as (x, y) points
/// with nondecreasing x.
pub fn auc_trapezoid(points: &[(f64, f64)]) -> f64 {
    let mut area = 0.0;
    for pair in points.windows(2) {
        let (x0, y0) = pair[0];
        let (x1, y1) = pair[1];
        area += (x1 - x0) * (y0 + y1) / 2.0;
    }
    area
}

/// One line of the final summary: a classifier evaluated on a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryEntry {
    pub dataset: String,
    pub classifier: String,
    /// Accuracy in [0,1]; printed as a percentage.
    pub accuracy: f64,
    pub auc: f64,
}

/// Renders an aligned text table: one row per dataset, and per classifier a
/// labeled accuracy column (percent, 2 decimals) and AUC column (4
/// decimals). Datasets and classifiers keep first-appearance order; absent
/// combinations print "-".
pub fn render_summary_table(entries: &[SummaryEntry]) -> String {
    use alloc::format;

    let mut datasets: Vec<&str> = Vec::new();
    let mut classifiers: Vec<&str> = Vec::new();
    for e in entries {
        if !datasets.contains(&e.dataset.as_str()) {
            datasets.push(&e.dataset);
        }
        if !classifiers.contains(&e.classifier.as_str()) {
            classifiers.push(&e.classifier);
        }
    }

    let mut header: Vec<String> = Vec::new();
    header.push(String::from("dataset"));
    for c in &classifiers {
        header.push(format!("{c} acc%"));
        header.push(format!("{c} auc"));
    }

    let mut rows: Vec<Vec<String>> = Vec::new();
    for d in &datasets {
        let mut row = Vec::new();
        row.push(String::from(*d));
        for c in &classifiers {
            match entries
                .iter()
                .find(|e| e.dataset.as_str() == *d && e.classifier.as_str() == *c)
            {
                Some(e) => {
                    row.push(format!("{:.2}", e.accuracy * 100.0));
                    row.push(format!("{:.4}", e.auc));
                }
                None => {
                    row.push(String::from("-"));
                    row.push(String::from("-"));
                }
            }
        }
        rows.push(row);
    }

    let columns = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }

    let mut out = String::new();
    let write_row = |cells: &[String], out: &mut String| {
        for (i, cell) in cells.iter().enumerate() {
            out.push_str(cell);
            if i + 1 < columns {
                for _ in cell.chars().count()..widths[i] + 2 {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    write_row(&header, &mut out);
    for row in &rows {
        write_row(row, &mut out);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    LengthMismatch { predictions: usize, truths: usize },
    EmptyInput,
    TruthClassAbsent { class: Polarity },
    NonFiniteScore { index: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::LengthMismatch { predictions, truths } => {
                write!(f, "{predictions} predictions against {truths} truths")
            }
            EvalError::EmptyInput => f.write_str("nothing to evaluate"),
            EvalError::TruthClassAbsent { class } => {
                write!(f, "no {class} documents among the truths")
            }
            EvalError::NonFiniteScore { index } => {
                write!(f, "score at position {index} is not finite")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EvalError {}
