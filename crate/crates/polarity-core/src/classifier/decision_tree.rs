//! CART-style binary decision tree minimizing Gini impurity.
//!
//! Candidate thresholds are midpoints between consecutive distinct observed
//! feature values, the left branch takes `value <= threshold`, and both
//! sides of an accepted split must hold at least `min_leaf` documents.
//! Candidate comparison uses exact integer cross-multiplication of the
//! weighted-impurity fractions, so the declared tie-breaks (lowest feature
//! ordinal, then lowest threshold) are bit-independent of float rounding.
//! An impure node splits even when the best candidate has zero Gini gain;
//! only purity, the depth cap, or the absence of a structurally valid
//! candidate stop the recursion.

use alloc::vec::Vec;

use crate::classifier::{check_labels, Classifier, TrainError};
use crate::corpus::Polarity;
use crate::vectorspace::DocumentVector;

#[derive(Debug, Clone, PartialEq)]
pub enum TreeNode {
    Split { feature: usize, threshold: f64, left: usize, right: usize },
    /// Training-class counts at the leaf; the leaf scores pos/(pos+neg).
    Leaf { pos: u32, neg: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionTreeModel {
    pub nodes: Vec<TreeNode>,
    pub root: usize,
    pub max_depth: u32,
    pub min_leaf: u32,
}

/// Trains a tree on labeled vectors over features `0..dim`. Single-class
/// input is legal and produces a lone pure leaf.
pub fn dt_train(
    vectors: &[DocumentVector],
    dim: usize,
    max_depth: u32,
    min_leaf: u32,
) -> Result<DecisionTreeModel, TrainError> {
    if min_leaf == 0 {
        return Err(TrainError::InvalidHyperparameter { name: "dt_min_leaf" });
    }
    let labels = check_labels(vectors)?;

    let mut builder = Builder { vectors, labels, dim, max_depth, min_leaf, nodes: Vec::new() };
    let all: Vec<usize> = (0..vectors.len()).collect();
    let root = builder.build(&all, 0);
    Ok(DecisionTreeModel { nodes: builder.nodes, root, max_depth, min_leaf })
}

struct Builder<'a> {
    vectors: &'a [DocumentVector],
    labels: Vec<Polarity>,
    dim: usize,
    max_depth: u32,
    min_leaf: u32,
    nodes: Vec<TreeNode>,
}

/// Weighted-impurity cost of a split, kept as the exact fraction
/// `sum / product` where, with a_i = pos_i * neg_i and c_i the side sizes,
/// sum = a_l * c_r + a_r * c_l and product = c_l * c_r. Comparing two costs
/// cross-multiplies in u128; with side sizes below 2^20 the products stay
/// under 2^99.
#[derive(Clone, Copy)]
struct SplitCost {
    sum: u128,
    product: u128,
}

impl SplitCost {
    fn new(pos_l: u64, neg_l: u64, pos_r: u64, neg_r: u64) -> SplitCost {
        let c_l = (pos_l + neg_l) as u128;
        let c_r = (pos_r + neg_r) as u128;
        let a_l = pos_l as u128 * neg_l as u128;
        let a_r = pos_r as u128 * neg_r as u128;
        SplitCost { sum: a_l * c_r + a_r * c_l, product: c_l * c_r }
    }

    fn better_than(self, other: SplitCost) -> bool {
        self.sum * other.product < other.sum * self.product
    }
}

impl<'a> Builder<'a> {
    fn build(&mut self, docs: &[usize], depth: u32) -> usize {
        let pos = docs.iter().filter(|&&i| self.labels[i] == Polarity::Pos).count() as u32;
        let neg = docs.len() as u32 - pos;

        let must_stop = pos == 0
            || neg == 0
            || depth >= self.max_depth
            || docs.len() < 2 * self.min_leaf as usize;
        let split = if must_stop { None } else { self.best_split(docs) };

        match split {
            None => {
                self.nodes.push(TreeNode::Leaf { pos, neg });
                self.nodes.len() - 1
            }
            Some((feature, threshold)) => {
                let mut left_docs = Vec::new();
                let mut right_docs = Vec::new();
                for &i in docs {
                    if self.vectors[i].weight(feature) <= threshold {
                        left_docs.push(i);
                    } else {
                        right_docs.push(i);
                    }
                }
                let left = self.build(&left_docs, depth + 1);
                let right = self.build(&right_docs, depth + 1);
                self.nodes.push(TreeNode::Split { feature, threshold, left, right });
                self.nodes.len() - 1
            }
        }
    }

    /// Scans features in ascending ordinal order and, within a feature,
    /// thresholds in ascending order, keeping the first strictly best
    /// candidate. Returns None when no candidate leaves `min_leaf` documents
    /// on each side.
    fn best_split(&self, docs: &[usize]) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64, SplitCost)> = None;
        let n = docs.len();
        let min_leaf = self.min_leaf as usize;
        let mut values: Vec<(f64, Polarity)> = Vec::with_capacity(n);

        for feature in 0..self.dim {
            values.clear();
            for &i in docs {
                values.push((self.vectors[i].weight(feature), self.labels[i]));
            }
            values.sort_by(|a, b| a.0.total_cmp(&b.0));

            let total_pos = values.iter().filter(|&&(_, l)| l == Polarity::Pos).count() as u64;
            let total_neg = n as u64 - total_pos;
            let mut left_pos = 0u64;
            let mut left_neg = 0u64;
            for k in 0..n - 1 {
                match values[k].1 {
                    Polarity::Pos => left_pos += 1,
                    Polarity::Neg => left_neg += 1,
                }
                if values[k].0 >= values[k + 1].0 {
                    continue;
                }
                let left_n = k + 1;
                if left_n < min_leaf || n - left_n < min_leaf {
                    continue;
                }
                // Midpoint, clamped down when rounding lands it on the
                // upper value (adjacent floats), so `<=` keeps the
                // partition it was derived from.
                let mut threshold = (values[k].0 + values[k + 1].0) / 2.0;
                if threshold >= values[k + 1].0 {
                    threshold = values[k].0;
                }
                let cost = SplitCost::new(
                    left_pos,
                    left_neg,
                    total_pos - left_pos,
                    total_neg - left_neg,
                );
                let is_better = match best {
                    None => true,
                    Some((_, _, best_cost)) => cost.better_than(best_cost),
                };
                if is_better {
                    best = Some((feature, threshold, cost));
                }
            }
        }
        best.map(|(feature, threshold, _)| (feature, threshold))
    }
}

impl DecisionTreeModel {
    /// Counts at the leaf the vector routes to.
    fn leaf_counts(&self, vector: &DocumentVector) -> (u32, u32) {
        let mut node = self.root;
        loop {
            match &self.nodes[node] {
                TreeNode::Split { feature, threshold, left, right } => {
                    node = if vector.weight(*feature) <= *threshold { *left } else { *right };
                }
                TreeNode::Leaf { pos, neg } => return (*pos, *neg),
            }
        }
    }

    pub fn depth(&self) -> u32 {
        fn walk(nodes: &[TreeNode], at: usize) -> u32 {
            match &nodes[at] {
                TreeNode::Leaf { .. } => 0,
                TreeNode::Split { left, right, .. } => {
                    1 + walk(nodes, *left).max(walk(nodes, *right))
                }
            }
        }
        walk(&self.nodes, self.root)
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, TreeNode::Leaf { .. })).count()
    }
}

impl Classifier for DecisionTreeModel {
    /// Leaf POS fraction in [0, 1].
    fn score(&self, vector: &DocumentVector) -> f64 {
        let (pos, neg) = self.leaf_counts(vector);
        pos as f64 / (pos + neg) as f64
    }

    fn predict(&self, vector: &DocumentVector) -> Polarity {
        if self.score(vector) > 0.5 {
            Polarity::Pos
        } else {
            Polarity::Neg
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vector(doc_id: u32, label: Option<Polarity>, entries: &[(usize, f64)]) -> DocumentVector {
        DocumentVector { doc_id, label, entries: entries.iter().copied().collect() }
    }

    fn labeled(points: &[(f64, f64, Polarity)]) -> Vec<DocumentVector> {
        points
            .iter()
            .enumerate()
            .map(|(i, &(x, y, l))| vector(i as u32, Some(l), &[(0, x), (1, y)]))
            .collect()
    }

    #[test]
    fn single_class_trains_to_one_leaf() {
        let data = vec![
            vector(0, Some(Polarity::Pos), &[(0, 1.0)]),
            vector(1, Some(Polarity::Pos), &[(0, 2.0)]),
        ];
        let model = dt_train(&data, 1, 10, 1).unwrap();
        assert_eq!(model.nodes, vec![TreeNode::Leaf { pos: 2, neg: 0 }]);
        assert_eq!(model.predict(&vector(9, None, &[(0, 5.0)])), Polarity::Pos);
        assert_eq!(model.score(&vector(9, None, &[])), 1.0);
    }

    #[test]
    fn max_depth_zero_is_a_root_leaf() {
        let data = labeled(&[
            (0.0, 0.0, Polarity::Neg),
            (1.0, 0.0, Polarity::Pos),
        ]);
        let model = dt_train(&data, 2, 0, 1).unwrap();
        assert_eq!(model.depth(), 0);
        // Leaf is half positive: score 0.5, tie predicts NEG.
        assert_eq!(model.predict(&data[1]), Polarity::Neg);
    }

    #[test]
    fn one_dimensional_separable_data_splits_at_the_midpoint() {
        let data = labeled(&[
            (0.1, 0.0, Polarity::Neg),
            (0.2, 0.0, Polarity::Neg),
            (0.8, 0.0, Polarity::Pos),
            (0.9, 0.0, Polarity::Pos),
        ]);
        let model = dt_train(&data, 2, 10, 1).unwrap();
        assert_eq!(model.depth(), 1);
        match &model.nodes[model.root] {
            TreeNode::Split { feature, threshold, .. } => {
                assert_eq!(*feature, 0);
                assert!((threshold - 0.5).abs() < 1e-12);
            }
            other => panic!("expected a root split, got {other:?}"),
        }
        for v in &data {
            assert_eq!(model.predict(v), v.label.unwrap());
        }
    }

    #[test]
    fn xor_needs_depth_two_and_zero_gain_splits() {
        let data = labeled(&[
            (0.0, 0.0, Polarity::Neg),
            (1.0, 1.0, Polarity::Neg),
            (0.0, 1.0, Polarity::Pos),
            (1.0, 0.0, Polarity::Pos),
        ]);
        // Depth 1 cannot express XOR.
        let shallow = dt_train(&data, 2, 1, 1).unwrap();
        let correct = data.iter().filter(|v| shallow.predict(v) == v.label.unwrap()).count();
        assert!(correct < 4);
        // Depth 2 classifies it perfectly, although the first split has
        // zero Gini gain.
        let model = dt_train(&data, 2, 2, 1).unwrap();
        assert_eq!(model.depth(), 2);
        for v in &data {
            assert_eq!(model.predict(v), v.label.unwrap());
        }
    }

    #[test]
    fn min_leaf_blocks_unbalanced_splits() {
        // Only the 1|3 boundary separates, but min_leaf 2 forbids it.
        let data = labeled(&[
            (0.0, 0.0, Polarity::Neg),
            (1.0, 0.0, Polarity::Pos),
            (1.0, 0.0, Polarity::Pos),
            (1.0, 0.0, Polarity::Pos),
        ]);
        let model = dt_train(&data, 2, 10, 2).unwrap();
        assert_eq!(model.depth(), 0);
        let relaxed = dt_train(&data, 2, 10, 1).unwrap();
        assert_eq!(relaxed.depth(), 1);
    }

    #[test]
    fn tie_break_prefers_lowest_feature_then_lowest_threshold() {
        // Features 0 and 1 are identical copies; feature 0 must win.
        let data = labeled(&[
            (0.0, 0.0, Polarity::Neg),
            (1.0, 1.0, Polarity::Pos),
        ]);
        let model = dt_train(&data, 2, 10, 1).unwrap();
        match &model.nodes[model.root] {
            TreeNode::Split { feature, .. } => assert_eq!(*feature, 0),
            other => panic!("expected a split, got {other:?}"),
        }

        // One feature, two equally good boundaries (POS in the middle):
        // both candidates cost the same, the lower threshold wins.
        let data = vec![
            vector(0, Some(Polarity::Neg), &[(0, 0.0)]),
            vector(1, Some(Polarity::Pos), &[(0, 1.0)]),
            vector(2, Some(Polarity::Neg), &[(0, 2.0)]),
            vector(3, Some(Polarity::Pos), &[(0, 3.0)]),
        ];
        let model = dt_train(&data, 1, 1, 1).unwrap();
        match &model.nodes[model.root] {
            TreeNode::Split { threshold, .. } => assert!((threshold - 0.5).abs() < 1e-12),
            other => panic!("expected a split, got {other:?}"),
        }
    }

    #[test]
    fn absent_entries_read_as_zero() {
        let data = vec![
            vector(0, Some(Polarity::Neg), &[]),
            vector(1, Some(Polarity::Pos), &[(0, 2.0)]),
        ];
        let model = dt_train(&data, 1, 10, 1).unwrap();
        assert_eq!(model.predict(&vector(7, None, &[])), Polarity::Neg);
        assert_eq!(model.predict(&vector(8, None, &[(0, 3.0)])), Polarity::Pos);
    }

    #[test]
    fn trainer_rejects_bad_input() {
        assert_eq!(dt_train(&[], 1, 10, 2), Err(TrainError::NoVectors));
        let data = vec![vector(0, None, &[])];
        assert_eq!(
            dt_train(&data, 1, 10, 2),
            Err(TrainError::UnlabeledVector { doc_id: 0 })
        );
        let data = vec![vector(0, Some(Polarity::Pos), &[])];
        assert_eq!(
            dt_train(&data, 1, 10, 0),
            Err(TrainError::InvalidHyperparameter { name: "dt_min_leaf" })
        );
    }
}
