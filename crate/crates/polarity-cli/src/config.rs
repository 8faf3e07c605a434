//! TOML pipeline configuration: parsing, defaults, resolution, and the
//! `key = value` echo that goes into every report.
//!
//! Relative paths in a config file (input, stopword list, output dir) are
//! resolved against the directory containing the config file, so a config
//! works no matter where the binary is invoked from.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use polarity_core::{
    Polarity, PreprocessConfig, SplitSpec, TfVariant, TrainConfig, VocabularyPolicy,
    WeightingScheme,
};

use crate::{stopwords, PipelineError};

/// Which classifier a command or config entry refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifierKind {
    Nb,
    Dt,
    Svm,
}

impl ClassifierKind {
    pub const ALL: [ClassifierKind; 3] =
        [ClassifierKind::Nb, ClassifierKind::Dt, ClassifierKind::Svm];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassifierKind::Nb => "nb",
            ClassifierKind::Dt => "dt",
            ClassifierKind::Svm => "svm",
        }
    }

    pub fn parse(s: &str) -> Option<ClassifierKind> {
        match s {
            "nb" => Some(ClassifierKind::Nb),
            "dt" => Some(ClassifierKind::Dt),
            "svm" => Some(ClassifierKind::Svm),
            _ => None,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    input: RawInput,
    #[serde(default)]
    split: RawSplit,
    #[serde(default)]
    preprocess: RawPreprocess,
    #[serde(default)]
    vocabulary: RawVocabulary,
    #[serde(default)]
    weighting: RawWeighting,
    #[serde(default)]
    classifiers: RawClassifiers,
    #[serde(default)]
    output: RawOutput,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    path: String,
    text_column: Option<String>,
    label_column: Option<String>,
    /// Label used for this corpus in reports; defaults to the file stem.
    dataset: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSplit {
    test_fraction: Option<f64>,
    seed: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPreprocess {
    erase_punctuation: Option<bool>,
    filter_numbers: Option<bool>,
    lowercase: Option<bool>,
    stem: Option<bool>,
    strip_social_tokens: Option<bool>,
    /// "none", "builtin", or a path to a stopword file.
    stopwords: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVocabulary {
    min_doc_freq: Option<u32>,
    max_terms: Option<usize>,
    manual_terms: Option<Vec<String>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeighting {
    tf: Option<String>,
    idf: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClassifiers {
    enabled: Option<Vec<String>>,
    nb_alpha: Option<f64>,
    dt_max_depth: Option<u32>,
    dt_min_leaf: Option<u32>,
    svm_c: Option<f64>,
    svm_epochs: Option<u32>,
    svm_normalize: Option<bool>,
    seed: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    dir: Option<String>,
    positive_class: Option<String>,
}

/// A config with every default applied, paths resolved, and the stopword
/// list loaded. This is the single input to [`crate::pipeline::run`].
#[derive(Debug, Clone)]
pub struct ResolvedConfig {
    pub input_path: PathBuf,
    pub text_column: String,
    pub label_column: String,
    pub dataset: String,
    pub split: SplitSpec,
    pub preprocess: PreprocessConfig,
    pub vocabulary: VocabularyPolicy,
    pub weighting: WeightingScheme,
    pub enabled: Vec<ClassifierKind>,
    pub train: TrainConfig,
    pub out_dir: PathBuf,
    pub positive_class: Polarity,
    /// The values as written in the config (defaults applied), for the echo.
    echo: Vec<(String, String)>,
}

impl ResolvedConfig {
    /// The fully resolved configuration as ordered `key = value` pairs,
    /// exactly as reproduced in reports.
    pub fn echo(&self) -> &[(String, String)] {
        &self.echo
    }
}

fn resolve_path(config_dir: &Path, raw: &str) -> PathBuf {
    let raw = Path::new(raw);
    if raw.is_absolute() {
        raw.to_path_buf()
    } else {
        config_dir.join(raw)
    }
}

fn invalid(message: impl Into<String>) -> PipelineError {
    PipelineError::Invalid(message.into())
}

/// Builds the stopword set for a "none" | "builtin" | path spec.
pub fn stopword_set(
    spec: &str,
    config_dir: &Path,
) -> Result<BTreeSet<String>, PipelineError> {
    match spec {
        "none" => Ok(BTreeSet::new()),
        "builtin" => Ok(stopwords::builtin_stopwords()),
        path => stopwords::load_stopwords(&resolve_path(config_dir, path)),
    }
}

pub fn load_config(path: &Path) -> Result<ResolvedConfig, PipelineError> {
    let content =
        std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    let raw: RawConfig =
        toml::from_str(&content).map_err(|e| PipelineError::format(path, e.to_string()))?;
    let config_dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    resolve(raw, &config_dir)
}

fn resolve(raw: RawConfig, config_dir: &Path) -> Result<ResolvedConfig, PipelineError> {
    let text_column = raw.input.text_column.unwrap_or_else(|| "text".to_string());
    let label_column = raw.input.label_column.unwrap_or_else(|| "sentiment".to_string());
    let dataset = match raw.input.dataset {
        Some(name) => name,
        None => Path::new(&raw.input.path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "dataset".to_string()),
    };

    let split = SplitSpec {
        test_fraction: raw.split.test_fraction.unwrap_or(0.3),
        seed: raw.split.seed.unwrap_or(42),
    };

    let stopword_spec = raw.preprocess.stopwords.unwrap_or_else(|| "none".to_string());
    let preprocess = PreprocessConfig {
        erase_punctuation: raw.preprocess.erase_punctuation.unwrap_or(true),
        filter_numbers: raw.preprocess.filter_numbers.unwrap_or(true),
        lowercase: raw.preprocess.lowercase.unwrap_or(true),
        stopwords: stopword_set(&stopword_spec, config_dir)?,
        stem: raw.preprocess.stem.unwrap_or(true),
        strip_social_tokens: raw.preprocess.strip_social_tokens.unwrap_or(false),
    };

    let vocabulary = VocabularyPolicy {
        min_doc_freq: raw.vocabulary.min_doc_freq.unwrap_or(1),
        max_terms: raw.vocabulary.max_terms,
        manual_terms: raw.vocabulary.manual_terms,
    };

    let tf_name = raw.weighting.tf.unwrap_or_else(|| "raw".to_string());
    let tf = TfVariant::parse(&tf_name)
        .ok_or_else(|| invalid(format!("weighting.tf must be raw|log|augmented|binary, got {tf_name:?}")))?;
    let weighting = WeightingScheme { tf, use_idf: raw.weighting.idf.unwrap_or(true) };

    let enabled_names = raw
        .classifiers
        .enabled
        .unwrap_or_else(|| vec!["nb".to_string(), "dt".to_string(), "svm".to_string()]);
    let mut enabled = Vec::new();
    for name in &enabled_names {
        let kind = ClassifierKind::parse(name)
            .ok_or_else(|| invalid(format!("classifiers.enabled: unknown classifier {name:?}")))?;
        if enabled.contains(&kind) {
            return Err(invalid(format!("classifiers.enabled lists {name:?} twice")));
        }
        enabled.push(kind);
    }
    if enabled.is_empty() {
        return Err(invalid("classifiers.enabled must not be empty"));
    }

    let defaults = TrainConfig::default();
    let train = TrainConfig {
        nb_alpha: raw.classifiers.nb_alpha.unwrap_or(defaults.nb_alpha),
        dt_max_depth: raw.classifiers.dt_max_depth.unwrap_or(defaults.dt_max_depth),
        dt_min_leaf: raw.classifiers.dt_min_leaf.unwrap_or(defaults.dt_min_leaf),
        svm_c: raw.classifiers.svm_c.unwrap_or(defaults.svm_c),
        svm_epochs: raw.classifiers.svm_epochs.unwrap_or(defaults.svm_epochs),
        svm_normalize: raw.classifiers.svm_normalize.unwrap_or(defaults.svm_normalize),
        seed: raw.classifiers.seed.unwrap_or(defaults.seed),
    };

    let out_dir_spec = raw.output.dir.unwrap_or_else(|| "out".to_string());
    let positive_name = raw.output.positive_class.unwrap_or_else(|| "POS".to_string());
    let positive_class = Polarity::parse(&positive_name)
        .ok_or_else(|| invalid(format!("output.positive_class must be POS or NEG, got {positive_name:?}")))?;

    let kv = |k: &str, v: String| (k.to_string(), v);
    let echo = vec![
        kv("input.path", raw.input.path.clone()),
        kv("input.text_column", text_column.clone()),
        kv("input.label_column", label_column.clone()),
        kv("input.dataset", dataset.clone()),
        kv("split.test_fraction", split.test_fraction.to_string()),
        kv("split.seed", split.seed.to_string()),
        kv("preprocess.erase_punctuation", preprocess.erase_punctuation.to_string()),
        kv("preprocess.filter_numbers", preprocess.filter_numbers.to_string()),
        kv("preprocess.lowercase", preprocess.lowercase.to_string()),
        kv("preprocess.stem", preprocess.stem.to_string()),
        kv("preprocess.strip_social_tokens", preprocess.strip_social_tokens.to_string()),
        kv("preprocess.stopwords", stopword_spec.clone()),
        kv("vocabulary.min_doc_freq", vocabulary.min_doc_freq.to_string()),
        kv(
            "vocabulary.max_terms",
            vocabulary.max_terms.map_or("none".to_string(), |n| n.to_string()),
        ),
        kv(
            "vocabulary.manual_terms",
            vocabulary
                .manual_terms
                .as_ref()
                .map_or("none".to_string(), |terms| terms.join(",")),
        ),
        kv("weighting.tf", weighting.tf.as_str().to_string()),
        kv("weighting.idf", weighting.use_idf.to_string()),
        kv(
            "classifiers.enabled",
            enabled.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(","),
        ),
        kv("classifiers.nb_alpha", train.nb_alpha.to_string()),
        kv("classifiers.dt_max_depth", train.dt_max_depth.to_string()),
        kv("classifiers.dt_min_leaf", train.dt_min_leaf.to_string()),
        kv("classifiers.svm_c", train.svm_c.to_string()),
        kv("classifiers.svm_epochs", train.svm_epochs.to_string()),
        kv("classifiers.svm_normalize", train.svm_normalize.to_string()),
        kv("classifiers.seed", train.seed.to_string()),
        kv("output.dir", out_dir_spec.clone()),
        kv("output.positive_class", positive_class.as_str().to_string()),
    ];

    Ok(ResolvedConfig {
        input_path: resolve_path(config_dir, &raw.input.path),
        text_column,
        label_column,
        dataset,
        split,
        preprocess,
        vocabulary,
        weighting,
        enabled,
        train,
        out_dir: resolve_path(config_dir, &out_dir_spec),
        positive_class,
        echo,
    })
}
