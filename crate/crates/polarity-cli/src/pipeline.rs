//! End-to-end orchestration: load, split, preprocess, vectorize, train,
//! score, evaluate, and write artifacts.
//!
//! Every stage is also reachable on its own through the subcommands, and
//! `run` goes through exactly the same functions in the same order, so a
//! chain of stage invocations reproduces `run`'s artifacts byte for byte.
//! All artifacts are rendered in memory first and written at the very end;
//! a failed write removes the files already written.

use std::path::{Path, PathBuf};
use std::time::Instant;

use polarity_core::{
    build_vocabulary, confusion, dt_train, metrics, nb_train, render_summary_table, roc_curve,
    stratified_split, svm_train, vectorize, Classifier, ConfusionMatrix, Document,
    DocumentVector, LabeledCorpus, MetricsRow, PerClass, Polarity, PreprocessConfig,
    ProcessedDocument, RocCurve, SplitSpec, SummaryEntry, TrainConfig, Vocabulary,
};

use crate::config::{ClassifierKind, ResolvedConfig};
use crate::formats::{self, fmt_sig6, ModelFile, ScoredRow};
use crate::{csv_io, PipelineError};

pub const REPORT_HEADER: &str = "polarity/report v1";

/// Which side of the train/test split a stage command operates on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subset {
    Train,
    Test,
    All,
}

impl Subset {
    pub fn as_str(self) -> &'static str {
        match self {
            Subset::Train => "train",
            Subset::Test => "test",
            Subset::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Subset> {
        match s {
            "train" => Some(Subset::Train),
            "test" => Some(Subset::Test),
            "all" => Some(Subset::All),
            _ => None,
        }
    }
}

pub fn preprocess_corpus(
    corpus: &LabeledCorpus,
    config: &PreprocessConfig,
) -> Vec<ProcessedDocument> {
    corpus
        .documents()
        .iter()
        .map(|doc| polarity_core::preprocess_document(doc, config))
        .collect()
}

/// Splits processed documents with the same stratified draw as the corpus
/// split. Only ids, labels and document order feed the draw, so splitting
/// before or after preprocessing selects the same documents.
pub fn split_processed(
    docs: &[ProcessedDocument],
    spec: &SplitSpec,
) -> Result<(Vec<ProcessedDocument>, Vec<ProcessedDocument>), PipelineError> {
    let shadow: Vec<Document> = docs
        .iter()
        .map(|d| Document { id: d.id, text: String::new(), label: d.label })
        .collect();
    let corpus = LabeledCorpus::from_documents(shadow)?;
    let (train, test) = stratified_split(&corpus, spec)?;
    let pick = |side: &LabeledCorpus| -> Vec<ProcessedDocument> {
        let chosen: std::collections::BTreeSet<u32> =
            side.documents().iter().map(|d| d.id).collect();
        docs.iter().filter(|d| chosen.contains(&d.id)).cloned().collect()
    };
    Ok((pick(&train), pick(&test)))
}

pub fn select_subset(
    docs: &[ProcessedDocument],
    subset: Subset,
    spec: &SplitSpec,
) -> Result<Vec<ProcessedDocument>, PipelineError> {
    match subset {
        Subset::All => Ok(docs.to_vec()),
        Subset::Train => Ok(split_processed(docs, spec)?.0),
        Subset::Test => Ok(split_processed(docs, spec)?.1),
    }
}

pub fn vectorize_all(
    docs: &[ProcessedDocument],
    vocab: &Vocabulary,
    scheme: polarity_core::WeightingScheme,
) -> Vec<DocumentVector> {
    docs.iter().map(|d| vectorize(d, vocab, scheme)).collect()
}

pub fn train_model(
    kind: ClassifierKind,
    vectors: &[DocumentVector],
    dim: usize,
    train: &TrainConfig,
) -> Result<ModelFile, PipelineError> {
    Ok(match kind {
        ClassifierKind::Nb => ModelFile::Nb(nb_train(vectors, dim, train.nb_alpha)?),
        ClassifierKind::Dt => {
            ModelFile::Dt(dt_train(vectors, dim, train.dt_max_depth, train.dt_min_leaf)?)
        }
        ClassifierKind::Svm => ModelFile::Svm(svm_train(
            vectors,
            dim,
            train.svm_c,
            train.svm_epochs,
            train.svm_normalize,
            train.seed,
        )?),
    })
}

/// Scores labeled vectors against a model; the truth column comes from the
/// vector labels.
pub fn score_rows(
    model: &ModelFile,
    vectors: &[DocumentVector],
) -> Result<Vec<ScoredRow>, PipelineError> {
    vectors
        .iter()
        .map(|v| {
            let truth = v.label.ok_or_else(|| {
                PipelineError::Invalid(format!(
                    "document {} has no label; cannot record truth",
                    v.doc_id
                ))
            })?;
            Ok(ScoredRow {
                doc_id: v.doc_id,
                truth,
                prediction: model.predict(v),
                score: model.score(v),
            })
        })
        .collect()
}

/// Everything derived from one classifier's scored rows: the confusion
/// matrix for the configured positive class, metric rows for both positive
/// class choices, and the ROC curve (scores are negated when NEG is the
/// positive class, so higher always means "more positive").
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub confusion: ConfusionMatrix,
    pub by_positive: PerClass<MetricsRow>,
    pub roc: RocCurve,
}

impl Evaluation {
    pub fn accuracy(&self) -> f64 {
        self.by_positive.pos.accuracy
    }
}

pub fn evaluate(rows: &[ScoredRow], positive_class: Polarity) -> Result<Evaluation, PipelineError> {
    let predictions: Vec<Polarity> = rows.iter().map(|r| r.prediction).collect();
    let truths: Vec<Polarity> = rows.iter().map(|r| r.truth).collect();
    let cm = confusion(&predictions, &truths, positive_class)?;
    let by_positive = PerClass {
        neg: metrics(&confusion(&predictions, &truths, Polarity::Neg)?)?,
        pos: metrics(&confusion(&predictions, &truths, Polarity::Pos)?)?,
    };
    let oriented: Vec<f64> = rows
        .iter()
        .map(|r| if positive_class == Polarity::Pos { r.score } else { -r.score })
        .collect();
    let roc = roc_curve(&oriented, &truths, positive_class)?;
    Ok(Evaluation { confusion: cm, by_positive, roc })
}

/// The same outcome counts viewed with `class` as the positive side.
pub fn reorient(cm: &ConfusionMatrix, class: Polarity) -> ConfusionMatrix {
    if cm.positive_class == class {
        *cm
    } else {
        ConfusionMatrix {
            positive_class: class,
            true_pos: cm.true_neg,
            false_pos: cm.false_neg,
            true_neg: cm.true_pos,
            false_neg: cm.false_pos,
        }
    }
}

fn entries_from(
    dataset: &str,
    classifier: &str,
    cm: &ConfusionMatrix,
    auc: Option<f64>,
    by_positive: &PerClass<MetricsRow>,
) -> Vec<(String, String)> {
    let mut entries: Vec<(String, String)> = vec![
        ("dataset".into(), dataset.into()),
        ("classifier".into(), classifier.into()),
        ("positive_class".into(), cm.positive_class.as_str().into()),
        ("confusion.tp".into(), cm.true_pos.to_string()),
        ("confusion.fp".into(), cm.false_pos.to_string()),
        ("confusion.tn".into(), cm.true_neg.to_string()),
        ("confusion.fn".into(), cm.false_neg.to_string()),
        ("accuracy".into(), fmt_sig6(by_positive.pos.accuracy)),
    ];
    if let Some(auc) = auc {
        entries.push(("auc".into(), fmt_sig6(auc)));
    }
    for class in Polarity::BOTH {
        let tag = class.as_str().to_ascii_lowercase();
        let row = by_positive.get(class);
        let mut push = |name: &str, value: String| {
            entries.push((format!("metrics.{tag}.{name}"), value));
        };
        push("recall", fmt_sig6(row.recall));
        push("precision", fmt_sig6(row.precision));
        push("precision_degenerate", row.precision_degenerate.to_string());
        push("sensitivity", fmt_sig6(row.sensitivity));
        push("specificity", fmt_sig6(row.specificity));
        push("f_measure", fmt_sig6(row.f_measure));
        push("accuracy", fmt_sig6(row.accuracy));
    }
    entries
}

/// The ordered `key = value` lines shared by metrics files and report
/// sections.
pub fn metrics_entries(
    dataset: &str,
    classifier: &str,
    evaluation: &Evaluation,
) -> Vec<(String, String)> {
    entries_from(
        dataset,
        classifier,
        &evaluation.confusion,
        Some(evaluation.roc.auc),
        &evaluation.by_positive,
    )
}

/// Metric lines for a bare confusion matrix (no scores, so no AUC line).
pub fn counts_entries(
    dataset: &str,
    classifier: &str,
    cm: &ConfusionMatrix,
) -> Result<Vec<(String, String)>, PipelineError> {
    let by_positive = PerClass {
        neg: metrics(&reorient(cm, Polarity::Neg))?,
        pos: metrics(&reorient(cm, Polarity::Pos))?,
    };
    Ok(entries_from(dataset, classifier, cm, None, &by_positive))
}

pub fn render_confusion_csv(cm: &ConfusionMatrix) -> String {
    format!(
        "positive_class,true_pos,false_pos,true_neg,false_neg\n{},{},{},{},{}\n",
        cm.positive_class, cm.true_pos, cm.false_pos, cm.true_neg, cm.false_neg
    )
}

pub fn render_roc_csv(roc: &RocCurve) -> String {
    let mut out = String::from("fpr,tpr\n");
    for (fpr, tpr) in &roc.points {
        out.push_str(&format!("{fpr},{tpr}\n"));
    }
    out
}

/// One trained and evaluated classifier within a run.
pub struct ClassifierOutput {
    pub kind: ClassifierKind,
    pub model: ModelFile,
    pub rows: Vec<ScoredRow>,
    pub evaluation: Evaluation,
}

pub struct RunOutput {
    pub outputs: Vec<ClassifierOutput>,
    pub summary: String,
    /// Paths written, in write order.
    pub files: Vec<PathBuf>,
}

fn count_class(docs: &[ProcessedDocument], class: Polarity) -> usize {
    docs.iter().filter(|d| d.label == Some(class)).count()
}

fn render_report(
    config: &ResolvedConfig,
    processed: &[ProcessedDocument],
    train_docs: &[ProcessedDocument],
    test_docs: &[ProcessedDocument],
    vocab: &Vocabulary,
    outputs: &[ClassifierOutput],
    timings: &[(String, u128)],
) -> String {
    use std::fmt::Write as _;

    let mut out = String::from(REPORT_HEADER);
    out.push_str("\n\n[config]\n");
    for (key, value) in config.echo() {
        let _ = writeln!(out, "{key} = {value}");
    }

    out.push_str("\n[data]\n");
    let mut data = |key: &str, value: usize| {
        let _ = writeln!(out, "{key} = {value}");
    };
    data("documents", processed.len());
    data("documents.pos", count_class(processed, Polarity::Pos));
    data("documents.neg", count_class(processed, Polarity::Neg));
    data("train", train_docs.len());
    data("train.pos", count_class(train_docs, Polarity::Pos));
    data("train.neg", count_class(train_docs, Polarity::Neg));
    data("test", test_docs.len());
    data("test.pos", count_class(test_docs, Polarity::Pos));
    data("test.neg", count_class(test_docs, Polarity::Neg));
    data("vocabulary.terms", vocab.terms().len());
    data("vocabulary.n_docs", vocab.n_docs() as usize);

    for output in outputs {
        let _ = write!(out, "\n[classifier.{}]\n", output.kind.as_str());
        for (key, value) in
            metrics_entries(&config.dataset, output.kind.as_str(), &output.evaluation)
        {
            let _ = writeln!(out, "{key} = {value}");
        }
    }

    out.push_str("\n[timing]\n");
    for (key, value) in timings {
        let _ = writeln!(out, "{key} = {value}");
    }
    out
}

fn write_all(out_dir: &Path, files: &[(PathBuf, String)]) -> Result<(), PipelineError> {
    std::fs::create_dir_all(out_dir).map_err(|e| PipelineError::io(out_dir, e))?;
    let mut written: Vec<&Path> = Vec::new();
    for (path, content) in files {
        if let Err(e) = std::fs::write(path, content) {
            for p in written {
                let _ = std::fs::remove_file(p);
            }
            return Err(PipelineError::io(path, e));
        }
        written.push(path);
    }
    Ok(())
}

/// The full pipeline. Artifacts land in `out_dir`:
/// `terms.txt`, `vocab.txt`, per classifier `model_<c>.txt`,
/// `predictions_<c>.csv`, `confusion_<c>.csv`, `roc_<c>.csv`, then
/// `report.txt` and `summary.txt`. Two runs of the same config produce
/// byte-identical artifacts except for the report's `[timing]` section.
pub fn run(config: &ResolvedConfig, out_dir: &Path) -> Result<RunOutput, PipelineError> {
    let t_total = Instant::now();
    let mut timings: Vec<(String, u128)> = Vec::new();

    let t = Instant::now();
    let corpus =
        csv_io::load_corpus(&config.input_path, &config.text_column, &config.label_column)?;
    timings.push(("load_ms".into(), t.elapsed().as_millis()));

    let t = Instant::now();
    let processed = preprocess_corpus(&corpus, &config.preprocess);
    timings.push(("preprocess_ms".into(), t.elapsed().as_millis()));

    let t = Instant::now();
    let (train_docs, test_docs) = split_processed(&processed, &config.split)?;
    timings.push(("split_ms".into(), t.elapsed().as_millis()));

    let t = Instant::now();
    let vocab = build_vocabulary(&train_docs, &config.vocabulary)?;
    timings.push(("vocabulary_ms".into(), t.elapsed().as_millis()));

    let t = Instant::now();
    let train_vectors = vectorize_all(&train_docs, &vocab, config.weighting);
    let test_vectors = vectorize_all(&test_docs, &vocab, config.weighting);
    timings.push(("vectorize_ms".into(), t.elapsed().as_millis()));

    let dim = vocab.terms().len();
    let mut outputs = Vec::new();
    for &kind in &config.enabled {
        let t = Instant::now();
        let model = train_model(kind, &train_vectors, dim, &config.train)?;
        timings.push((format!("{}.train_ms", kind.as_str()), t.elapsed().as_millis()));

        let t = Instant::now();
        let rows = score_rows(&model, &test_vectors)?;
        let evaluation = evaluate(&rows, config.positive_class)?;
        timings.push((format!("{}.score_ms", kind.as_str()), t.elapsed().as_millis()));

        outputs.push(ClassifierOutput { kind, model, rows, evaluation });
    }

    let entries: Vec<SummaryEntry> = outputs
        .iter()
        .map(|o| SummaryEntry {
            dataset: config.dataset.clone(),
            classifier: o.kind.as_str().to_string(),
            accuracy: o.evaluation.accuracy(),
            auc: o.evaluation.roc.auc,
        })
        .collect();
    let summary = render_summary_table(&entries);

    timings.push(("total_ms".into(), t_total.elapsed().as_millis()));
    let report =
        render_report(config, &processed, &train_docs, &test_docs, &vocab, &outputs, &timings);

    let mut files: Vec<(PathBuf, String)> = vec![
        (out_dir.join("terms.txt"), formats::render_terms(&processed)),
        (out_dir.join("vocab.txt"), formats::render_vocab(&vocab)),
    ];
    for output in &outputs {
        let kind = output.kind.as_str();
        files.push((
            out_dir.join(format!("model_{kind}.txt")),
            formats::render_model(&output.model),
        ));
        files.push((
            out_dir.join(format!("predictions_{kind}.csv")),
            formats::render_scores(&output.rows),
        ));
        files.push((
            out_dir.join(format!("confusion_{kind}.csv")),
            render_confusion_csv(&output.evaluation.confusion),
        ));
        files.push((
            out_dir.join(format!("roc_{kind}.csv")),
            render_roc_csv(&output.evaluation.roc),
        ));
    }
    files.push((out_dir.join("report.txt"), report));
    files.push((out_dir.join("summary.txt"), summary.clone()));

    write_all(out_dir, &files)?;
    Ok(RunOutput {
        outputs,
        summary,
        files: files.into_iter().map(|(path, _)| path).collect(),
    })
}
