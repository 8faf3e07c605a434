//! Versioned text file formats for pipeline stage artifacts.
//!
//! Every format opens with a `polarity/<kind> v1` header line. Fields are
//! TAB-separated; floats print through `Display`, whose shortest-round-trip
//! output reparses to the identical bit pattern, so dump followed by load
//! reproduces models and vocabularies exactly.

use std::fmt::Write as _;
use std::path::Path;

use polarity_core::{
    Classifier, DecisionTreeModel, LinearSvmModel, NaiveBayesModel, Polarity, ProcessedDocument,
    TreeNode, Vocabulary,
};

use crate::PipelineError;

pub const TERMS_HEADER: &str = "polarity/terms v1";
pub const VOCAB_HEADER: &str = "polarity/vocab v1";
pub const MODEL_HEADER: &str = "polarity/model v1";

/// Six significant digits, plain decimal notation. Counts and other exact
/// integers should print through `Display` instead.
pub fn fmt_sig6(v: f64) -> String {
    if v == 0.0 {
        return "0.000000".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (5 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Line-oriented reader that tracks position for error messages.
struct Scanner<'a> {
    path: &'a Path,
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> Scanner<'a> {
    fn new(path: &'a Path, content: &'a str) -> Scanner<'a> {
        Scanner { path, lines: content.lines(), line_no: 0 }
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, PipelineError> {
        let message = message.into();
        Err(PipelineError::format(
            self.path,
            format!("line {}: {message}", self.line_no),
        ))
    }

    fn next_line(&mut self) -> Result<&'a str, PipelineError> {
        self.line_no += 1;
        match self.lines.next() {
            Some(line) => Ok(line),
            None => self.fail("unexpected end of file"),
        }
    }

    fn maybe_line(&mut self) -> Option<&'a str> {
        let line = self.lines.next();
        if line.is_some() {
            self.line_no += 1;
        }
        line
    }

    fn expect_header(&mut self, header: &str) -> Result<(), PipelineError> {
        let line = self.next_line()?;
        if line != header {
            return self.fail(format!("expected header {header:?}, found {line:?}"));
        }
        Ok(())
    }

    /// Splits a line into exactly `n` TAB-separated fields.
    fn fields<const N: usize>(&self, line: &'a str) -> Result<[&'a str; N], PipelineError> {
        let mut out = [""; N];
        let mut parts = line.splitn(N, '\t');
        for slot in out.iter_mut() {
            match parts.next() {
                Some(p) => *slot = p,
                None => return self.fail(format!("expected {N} tab-separated fields")),
            }
        }
        Ok(out)
    }

    fn parse<T: core::str::FromStr>(&self, raw: &str, what: &str) -> Result<T, PipelineError> {
        raw.parse().or_else(|_| self.fail(format!("bad {what}: {raw:?}")))
    }

    /// Reads a `name<TAB>value` line and parses the value.
    fn keyed<T: core::str::FromStr>(&mut self, name: &str) -> Result<T, PipelineError> {
        let line = self.next_line()?;
        let [key, value] = self.fields(line)?;
        if key != name {
            return self.fail(format!("expected field {name:?}, found {key:?}"));
        }
        self.parse(value, name)
    }

    fn finish(&mut self) -> Result<(), PipelineError> {
        match self.maybe_line() {
            Some(extra) => self.fail(format!("trailing content: {extra:?}")),
            None => Ok(()),
        }
    }
}

fn read_file(path: &Path) -> Result<String, PipelineError> {
    std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))
}

fn write_file(path: &Path, content: &str) -> Result<(), PipelineError> {
    std::fs::write(path, content).map_err(|e| PipelineError::io(path, e))
}

fn label_str(label: Option<Polarity>) -> &'static str {
    match label {
        Some(p) => p.as_str(),
        None => "-",
    }
}

fn parse_label(scanner: &Scanner, raw: &str) -> Result<Option<Polarity>, PipelineError> {
    if raw == "-" {
        return Ok(None);
    }
    match Polarity::parse(raw) {
        Some(p) => Ok(Some(p)),
        None => scanner.fail(format!("bad label: {raw:?}")),
    }
}

/// One document per line: `id<TAB>label<TAB>terms` with terms space-joined
/// and `-` for a missing label. Terms never contain whitespace, so the
/// join is lossless.
pub fn render_terms(docs: &[ProcessedDocument]) -> String {
    let mut out = String::from(TERMS_HEADER);
    out.push('\n');
    for doc in docs {
        let _ = write!(out, "{}\t{}\t", doc.id, label_str(doc.label));
        for (i, term) in doc.terms.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(term);
        }
        out.push('\n');
    }
    out
}

pub fn write_terms(path: &Path, docs: &[ProcessedDocument]) -> Result<(), PipelineError> {
    write_file(path, &render_terms(docs))
}

pub fn read_terms(path: &Path) -> Result<Vec<ProcessedDocument>, PipelineError> {
    let content = read_file(path)?;
    let mut scanner = Scanner::new(path, &content);
    scanner.expect_header(TERMS_HEADER)?;
    let mut docs = Vec::new();
    while let Some(line) = scanner.maybe_line() {
        let [id, label, terms] = scanner.fields(line)?;
        docs.push(ProcessedDocument {
            id: scanner.parse(id, "document id")?,
            label: parse_label(&scanner, label)?,
            terms: terms.split_whitespace().map(str::to_string).collect(),
        });
    }
    Ok(docs)
}

/// Header, then `n_docs<TAB>N`, then one `term<TAB>doc_freq` line per term
/// in ordinal order.
pub fn render_vocab(vocab: &Vocabulary) -> String {
    let mut out = String::from(VOCAB_HEADER);
    out.push('\n');
    let _ = writeln!(out, "n_docs\t{}", vocab.n_docs());
    for (ordinal, term) in vocab.terms().iter().enumerate() {
        let _ = writeln!(out, "{}\t{}", term, vocab.doc_freq_at(ordinal));
    }
    out
}

pub fn write_vocab(path: &Path, vocab: &Vocabulary) -> Result<(), PipelineError> {
    write_file(path, &render_vocab(vocab))
}

pub fn read_vocab(path: &Path) -> Result<Vocabulary, PipelineError> {
    let content = read_file(path)?;
    let mut scanner = Scanner::new(path, &content);
    scanner.expect_header(VOCAB_HEADER)?;
    let n_docs: u32 = scanner.keyed("n_docs")?;
    let mut terms = Vec::new();
    while let Some(line) = scanner.maybe_line() {
        let [term, df] = scanner.fields(line)?;
        terms.push((term.to_string(), scanner.parse(df, "doc_freq")?));
    }
    Vocabulary::from_parts(terms, n_docs).map_err(PipelineError::from)
}

/// A scored test document as written to predictions CSV files.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredRow {
    pub doc_id: u32,
    pub truth: Polarity,
    pub prediction: Polarity,
    pub score: f64,
}

pub fn render_scores(rows: &[ScoredRow]) -> String {
    let mut out = String::from("doc_id,truth,prediction,score\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.doc_id, row.truth, row.prediction, row.score
        );
    }
    out
}

pub fn write_scores(path: &Path, rows: &[ScoredRow]) -> Result<(), PipelineError> {
    write_file(path, &render_scores(rows))
}

pub fn read_scores(path: &Path) -> Result<Vec<ScoredRow>, PipelineError> {
    let content = read_file(path)?;
    let mut scanner = Scanner::new(path, &content);
    let header = scanner.next_line()?;
    if header != "doc_id,truth,prediction,score" {
        return scanner.fail(format!("unexpected scores header: {header:?}"));
    }
    let mut rows = Vec::new();
    while let Some(line) = scanner.maybe_line() {
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 4 {
            return scanner.fail("expected 4 comma-separated fields");
        }
        let truth = parse_label(&scanner, parts[1])?;
        let prediction = parse_label(&scanner, parts[2])?;
        let (Some(truth), Some(prediction)) = (truth, prediction) else {
            return scanner.fail("scores rows must carry truth and prediction");
        };
        rows.push(ScoredRow {
            doc_id: scanner.parse(parts[0], "doc_id")?,
            truth,
            prediction,
            score: scanner.parse(parts[3], "score")?,
        });
    }
    if rows.is_empty() {
        return scanner.fail("no score rows");
    }
    Ok(rows)
}

/// A trained model of any of the three kinds, as stored on disk.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelFile {
    Nb(NaiveBayesModel),
    Dt(DecisionTreeModel),
    Svm(LinearSvmModel),
}

impl ModelFile {
    pub fn kind(&self) -> &'static str {
        match self {
            ModelFile::Nb(_) => "nb",
            ModelFile::Dt(_) => "dt",
            ModelFile::Svm(_) => "svm",
        }
    }
}

impl Classifier for ModelFile {
    fn score(&self, vector: &polarity_core::DocumentVector) -> f64 {
        match self {
            ModelFile::Nb(m) => m.score(vector),
            ModelFile::Dt(m) => m.score(vector),
            ModelFile::Svm(m) => m.score(vector),
        }
    }

    fn predict(&self, vector: &polarity_core::DocumentVector) -> Polarity {
        match self {
            ModelFile::Nb(m) => m.predict(vector),
            ModelFile::Dt(m) => m.predict(vector),
            ModelFile::Svm(m) => m.predict(vector),
        }
    }
}

pub fn render_model(model: &ModelFile) -> String {
    let mut out = String::from(MODEL_HEADER);
    out.push('\n');
    let _ = writeln!(out, "kind\t{}", model.kind());
    match model {
        ModelFile::Nb(m) => {
            let _ = writeln!(out, "alpha\t{}", m.smoothing_alpha);
            let _ = writeln!(out, "vocab_size\t{}", m.vocab_size);
            for class in Polarity::BOTH {
                let tag = class.as_str().to_ascii_lowercase();
                let _ = writeln!(out, "prior\t{tag}\t{}", m.class_log_prior.get(class));
                let _ = writeln!(out, "absent\t{tag}\t{}", m.absent_log_likelihood.get(class));
            }
            for class in Polarity::BOTH {
                let tag = class.as_str().to_ascii_lowercase();
                for (ordinal, ll) in m.term_log_likelihood.get(class) {
                    let _ = writeln!(out, "ll\t{tag}\t{ordinal}\t{ll}");
                }
            }
        }
        ModelFile::Dt(m) => {
            let _ = writeln!(out, "max_depth\t{}", m.max_depth);
            let _ = writeln!(out, "min_leaf\t{}", m.min_leaf);
            let _ = writeln!(out, "root\t{}", m.root);
            let _ = writeln!(out, "nodes\t{}", m.nodes.len());
            for (i, node) in m.nodes.iter().enumerate() {
                match node {
                    TreeNode::Leaf { pos, neg } => {
                        let _ = writeln!(out, "node\t{i}\tleaf\t{pos}\t{neg}");
                    }
                    TreeNode::Split { feature, threshold, left, right } => {
                        let _ = writeln!(
                            out,
                            "node\t{i}\tsplit\t{feature}\t{threshold}\t{left}\t{right}"
                        );
                    }
                }
            }
        }
        ModelFile::Svm(m) => {
            let _ = writeln!(out, "c\t{}", m.regularization_c);
            let _ = writeln!(out, "epochs\t{}", m.epochs_run);
            let _ = writeln!(out, "normalize\t{}", m.normalize);
            let _ = writeln!(out, "bias\t{}", m.bias);
            out.push_str("objectives");
            for objective in &m.epoch_objectives {
                let _ = write!(out, "\t{objective}");
            }
            out.push('\n');
            let _ = writeln!(out, "dim\t{}", m.weights.len());
            for w in &m.weights {
                let _ = writeln!(out, "w\t{w}");
            }
        }
    }
    out
}

pub fn write_model(path: &Path, model: &ModelFile) -> Result<(), PipelineError> {
    write_file(path, &render_model(model))
}

fn read_nb(scanner: &mut Scanner) -> Result<NaiveBayesModel, PipelineError> {
    let smoothing_alpha = scanner.keyed("alpha")?;
    let vocab_size: usize = scanner.keyed("vocab_size")?;
    let mut class_log_prior = polarity_core::PerClass { neg: 0.0, pos: 0.0 };
    let mut absent_log_likelihood = polarity_core::PerClass { neg: 0.0, pos: 0.0 };
    for class in Polarity::BOTH {
        let tag = class.as_str().to_ascii_lowercase();
        let line = scanner.next_line()?;
        let [key, klass, value] = scanner.fields(line)?;
        if key != "prior" || klass != tag {
            return scanner.fail(format!("expected prior for {tag}"));
        }
        *class_log_prior.get_mut(class) = scanner.parse(value, "prior")?;
        let line = scanner.next_line()?;
        let [key, klass, value] = scanner.fields(line)?;
        if key != "absent" || klass != tag {
            return scanner.fail(format!("expected absent for {tag}"));
        }
        *absent_log_likelihood.get_mut(class) = scanner.parse(value, "absent")?;
    }
    let mut term_log_likelihood = polarity_core::PerClass {
        neg: std::collections::BTreeMap::new(),
        pos: std::collections::BTreeMap::new(),
    };
    while let Some(line) = scanner.maybe_line() {
        let [key, klass, ordinal, value] = scanner.fields(line)?;
        if key != "ll" {
            return scanner.fail(format!("expected ll line, found {key:?}"));
        }
        let class = match klass {
            "neg" => Polarity::Neg,
            "pos" => Polarity::Pos,
            other => return scanner.fail(format!("bad class: {other:?}")),
        };
        let ordinal: usize = scanner.parse(ordinal, "ordinal")?;
        if ordinal >= vocab_size {
            return scanner.fail(format!("ordinal {ordinal} outside vocab of {vocab_size}"));
        }
        let value: f64 = scanner.parse(value, "log likelihood")?;
        if term_log_likelihood.get_mut(class).insert(ordinal, value).is_some() {
            return scanner.fail(format!("duplicate ll entry for ordinal {ordinal}"));
        }
    }
    Ok(NaiveBayesModel {
        class_log_prior,
        term_log_likelihood,
        absent_log_likelihood,
        smoothing_alpha,
        vocab_size,
    })
}

fn read_dt(scanner: &mut Scanner) -> Result<DecisionTreeModel, PipelineError> {
    let max_depth = scanner.keyed("max_depth")?;
    let min_leaf = scanner.keyed("min_leaf")?;
    let root: usize = scanner.keyed("root")?;
    let count: usize = scanner.keyed("nodes")?;
    let mut nodes = Vec::with_capacity(count);
    for i in 0..count {
        let line = scanner.next_line()?;
        let mut parts = line.split('\t');
        let (key, idx, shape) = (parts.next(), parts.next(), parts.next());
        if key != Some("node") || idx != Some(i.to_string().as_str()) {
            return scanner.fail(format!("expected node {i}"));
        }
        let rest: Vec<&str> = parts.collect();
        let node = match (shape, rest.as_slice()) {
            (Some("leaf"), [pos, neg]) => TreeNode::Leaf {
                pos: scanner.parse(pos, "leaf pos count")?,
                neg: scanner.parse(neg, "leaf neg count")?,
            },
            (Some("split"), [feature, threshold, left, right]) => {
                let left: usize = scanner.parse(left, "left child")?;
                let right: usize = scanner.parse(right, "right child")?;
                // Children precede parents, which rules out cycles.
                if left >= i || right >= i {
                    return scanner.fail(format!("node {i} references a later node"));
                }
                TreeNode::Split {
                    feature: scanner.parse(feature, "feature")?,
                    threshold: scanner.parse(threshold, "threshold")?,
                    left,
                    right,
                }
            }
            _ => return scanner.fail("malformed node line"),
        };
        nodes.push(node);
    }
    if root >= nodes.len() {
        return scanner.fail(format!("root {root} outside {} nodes", nodes.len()));
    }
    scanner.finish()?;
    Ok(DecisionTreeModel { nodes, root, max_depth, min_leaf })
}

fn read_svm(scanner: &mut Scanner) -> Result<LinearSvmModel, PipelineError> {
    let regularization_c = scanner.keyed("c")?;
    let epochs_run = scanner.keyed("epochs")?;
    let normalize = scanner.keyed("normalize")?;
    let bias = scanner.keyed("bias")?;
    let line = scanner.next_line()?;
    let mut parts = line.split('\t');
    if parts.next() != Some("objectives") {
        return scanner.fail("expected objectives line");
    }
    let epoch_objectives = parts
        .map(|raw| scanner.parse(raw, "objective"))
        .collect::<Result<Vec<f64>, _>>()?;
    let dim: usize = scanner.keyed("dim")?;
    let mut weights = Vec::with_capacity(dim);
    for _ in 0..dim {
        weights.push(scanner.keyed("w")?);
    }
    scanner.finish()?;
    Ok(LinearSvmModel {
        weights,
        bias,
        regularization_c,
        epochs_run,
        normalize,
        epoch_objectives,
    })
}

pub fn read_model(path: &Path) -> Result<ModelFile, PipelineError> {
    let content = read_file(path)?;
    let mut scanner = Scanner::new(path, &content);
    scanner.expect_header(MODEL_HEADER)?;
    let kind: String = scanner.keyed("kind")?;
    match kind.as_str() {
        "nb" => Ok(ModelFile::Nb(read_nb(&mut scanner)?)),
        "dt" => Ok(ModelFile::Dt(read_dt(&mut scanner)?)),
        "svm" => Ok(ModelFile::Svm(read_svm(&mut scanner)?)),
        other => scanner.fail(format!("unknown model kind: {other:?}")),
    }
}

/// Generic `key = value` artifact with a `polarity/<kind> v1` header,
/// used for metrics files. Order is preserved.
pub fn render_key_values(kind: &str, entries: &[(String, String)]) -> String {
    let mut out = format!("polarity/{kind} v1\n");
    for (key, value) in entries {
        let _ = writeln!(out, "{key} = {value}");
    }
    out
}

pub fn write_key_values(
    path: &Path,
    kind: &str,
    entries: &[(String, String)],
) -> Result<(), PipelineError> {
    write_file(path, &render_key_values(kind, entries))
}

pub fn read_key_values(path: &Path, kind: &str) -> Result<Vec<(String, String)>, PipelineError> {
    let content = read_file(path)?;
    let mut scanner = Scanner::new(path, &content);
    scanner.expect_header(&format!("polarity/{kind} v1"))?;
    let mut entries = Vec::new();
    while let Some(line) = scanner.maybe_line() {
        match line.split_once(" = ") {
            Some((key, value)) => entries.push((key.to_string(), value.to_string())),
            None => return scanner.fail(format!("expected `key = value`, found {line:?}")),
        }
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polarity_core::PerClass;
    use std::collections::BTreeMap;

    #[test]
    fn sig6_formatting() {
        assert_eq!(fmt_sig6(0.0), "0.000000");
        assert_eq!(fmt_sig6(0.9315068493150684), "0.931507");
        assert_eq!(fmt_sig6(1.0), "1.00000");
        assert_eq!(fmt_sig6(94.0), "94.0000");
        assert_eq!(fmt_sig6(0.5), "0.500000");
        assert_eq!(fmt_sig6(-0.25), "-0.250000");
    }

    #[test]
    fn terms_round_trip() {
        let docs = vec![
            ProcessedDocument {
                id: 0,
                label: Some(Polarity::Pos),
                terms: vec!["love".into(), "film".into()],
            },
            ProcessedDocument { id: 7, label: None, terms: vec![] },
            ProcessedDocument { id: 2, label: Some(Polarity::Neg), terms: vec!["bad".into()] },
        ];
        let f = tempfile::NamedTempFile::new().unwrap();
        write_terms(f.path(), &docs).unwrap();
        assert_eq!(read_terms(f.path()).unwrap(), docs);
    }

    #[test]
    fn vocab_round_trip() {
        let vocab = Vocabulary::from_parts(
            vec![("film".into(), 9), ("good".into(), 4), ("bad".into(), 1)],
            12,
        )
        .unwrap();
        let f = tempfile::NamedTempFile::new().unwrap();
        write_vocab(f.path(), &vocab).unwrap();
        let reloaded = read_vocab(f.path()).unwrap();
        assert_eq!(reloaded, vocab);
        assert_eq!(reloaded.n_docs(), 12);
        assert_eq!(reloaded.ordinal("good"), Some(1));
    }

    #[test]
    fn scores_round_trip() {
        let rows = vec![
            ScoredRow { doc_id: 3, truth: Polarity::Pos, prediction: Polarity::Neg, score: -0.125 },
            ScoredRow { doc_id: 9, truth: Polarity::Neg, prediction: Polarity::Neg, score: -2.5 },
        ];
        let f = tempfile::NamedTempFile::new().unwrap();
        write_scores(f.path(), &rows).unwrap();
        assert_eq!(read_scores(f.path()).unwrap(), rows);
    }

    #[test]
    fn nb_model_round_trips_bit_exactly() {
        let model = NaiveBayesModel {
            class_log_prior: PerClass { neg: -0.6931471805599453, pos: -0.35667494393873245 },
            term_log_likelihood: PerClass {
                neg: BTreeMap::from([(0, -1.0986122886681098), (4, -0.9162907318741551)]),
                pos: BTreeMap::from([(2, -0.2231435513148106)]),
            },
            absent_log_likelihood: PerClass { neg: -2.302585092994046, pos: -1.791759469228055 },
            smoothing_alpha: 1.0,
            vocab_size: 5,
        };
        let f = tempfile::NamedTempFile::new().unwrap();
        write_model(f.path(), &ModelFile::Nb(model.clone())).unwrap();
        assert_eq!(read_model(f.path()).unwrap(), ModelFile::Nb(model));
    }

    #[test]
    fn dt_model_round_trips_bit_exactly() {
        let model = DecisionTreeModel {
            nodes: vec![
                TreeNode::Leaf { pos: 5, neg: 0 },
                TreeNode::Leaf { pos: 1, neg: 6 },
                TreeNode::Split { feature: 3, threshold: 0.7853981633974483, left: 0, right: 1 },
            ],
            root: 2,
            max_depth: 10,
            min_leaf: 2,
        };
        let f = tempfile::NamedTempFile::new().unwrap();
        write_model(f.path(), &ModelFile::Dt(model.clone())).unwrap();
        assert_eq!(read_model(f.path()).unwrap(), ModelFile::Dt(model));
    }

    #[test]
    fn svm_model_round_trips_bit_exactly() {
        let model = LinearSvmModel {
            weights: vec![0.1 + 0.2, -1.0 / 3.0, 0.0],
            bias: 1e-17,
            regularization_c: 2.5,
            epochs_run: 3,
            normalize: true,
            epoch_objectives: vec![0.9, 0.8333333333333334, 0.75],
        };
        let f = tempfile::NamedTempFile::new().unwrap();
        write_model(f.path(), &ModelFile::Svm(model.clone())).unwrap();
        let ModelFile::Svm(reloaded) = read_model(f.path()).unwrap() else {
            panic!("wrong kind")
        };
        assert_eq!(reloaded.weights[0].to_bits(), (0.1f64 + 0.2).to_bits());
        assert_eq!(reloaded, model);
    }

    #[test]
    fn dt_rejects_forward_references() {
        let f = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(
            f.path(),
            "polarity/model v1\nkind\tdt\nmax_depth\t1\nmin_leaf\t1\nroot\t0\nnodes\t1\nnode\t0\tsplit\t0\t0.5\t0\t0\n",
        )
        .unwrap();
        let err = read_model(f.path()).unwrap_err();
        assert!(err.to_string().contains("later node"), "{err}");
    }

    #[test]
    fn header_mismatch_is_rejected() {
        let f = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(f.path(), "polarity/terms v2\n").unwrap();
        assert!(read_terms(f.path()).is_err());
        std::fs::write(f.path(), "").unwrap();
        assert!(read_vocab(f.path()).is_err());
    }

    #[test]
    fn key_values_round_trip() {
        let entries = vec![
            ("dataset".to_string(), "reviews".to_string()),
            ("accuracy".to_string(), "0.931507".to_string()),
        ];
        let f = tempfile::NamedTempFile::new().unwrap();
        write_key_values(f.path(), "metrics", &entries).unwrap();
        assert_eq!(read_key_values(f.path(), "metrics").unwrap(), entries);
    }
}
