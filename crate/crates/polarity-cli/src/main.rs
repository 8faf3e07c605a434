//! The `polarity` command line.
//!
//! Exit codes: 0 success, 1 usage error (bad flags or arguments),
//! 2 data error (unreadable files, malformed content, impossible settings).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use polarity_cli::config::{self, ClassifierKind};
use polarity_cli::pipeline::{self, Subset};
use polarity_cli::{csv_io, formats, PipelineError};
use polarity_core::{
    ConfusionMatrix, Polarity, PreprocessConfig, SplitSpec, SummaryEntry, TfVariant, TrainConfig,
    VocabularyPolicy, WeightingScheme,
};

#[derive(Parser)]
#[command(
    name = "polarity",
    version,
    about = "Deterministic binary sentiment classification pipeline",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the whole pipeline from a TOML config and write all artifacts.
    Run(RunArgs),
    /// Preprocess a CSV corpus into a terms file.
    Prep(PrepArgs),
    /// Build a vocabulary from a terms file.
    Vocab(VocabArgs),
    /// Train one classifier and dump the model.
    Train(TrainArgs),
    /// Score documents with a dumped model.
    Score(ScoreArgs),
    /// Evaluate scores (or raw confusion counts) into metrics.
    Eval(EvalArgs),
    /// Summarize metrics files into one aligned table.
    Report(ReportArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Pipeline configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Output directory; overrides POLARITY_OUT_DIR and the config.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PrepArgs {
    /// Input CSV corpus.
    #[arg(long)]
    input: PathBuf,
    /// Terms file to write.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value = "text")]
    text_column: String,
    #[arg(long, default_value = "sentiment")]
    label_column: String,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    erase_punctuation: bool,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    filter_numbers: bool,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    lowercase: bool,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    stem: bool,
    #[arg(long, default_value_t = false, action = clap::ArgAction::Set, value_name = "BOOL")]
    strip_social_tokens: bool,
    /// "none", "builtin", or a stopword file path.
    #[arg(long, default_value = "none")]
    stopwords: String,
}

/// Split selection shared by the stage commands. The same fraction and
/// seed always select the same documents.
#[derive(Args)]
struct SplitArgs {
    #[arg(long, value_parser = ["train", "test", "all"])]
    subset: Option<String>,
    #[arg(long, default_value_t = 0.3)]
    test_fraction: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

impl SplitArgs {
    fn subset(&self, default: Subset) -> Subset {
        match &self.subset {
            Some(name) => Subset::parse(name).expect("validated by clap"),
            None => default,
        }
    }

    fn spec(&self) -> SplitSpec {
        SplitSpec { test_fraction: self.test_fraction, seed: self.seed }
    }
}

#[derive(Args)]
struct WeightingArgs {
    #[arg(long, default_value = "raw", value_parser = ["raw", "log", "augmented", "binary"])]
    tf: String,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    idf: bool,
}

impl WeightingArgs {
    fn scheme(&self) -> WeightingScheme {
        WeightingScheme {
            tf: TfVariant::parse(&self.tf).expect("validated by clap"),
            use_idf: self.idf,
        }
    }
}

#[derive(Args)]
struct VocabArgs {
    /// Terms file from `prep`.
    #[arg(long)]
    terms: PathBuf,
    /// Vocabulary file to write.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    split: SplitArgs,
    #[arg(long, default_value_t = 1)]
    min_doc_freq: u32,
    #[arg(long)]
    max_terms: Option<usize>,
    /// Comma-separated list; overrides frequency-based selection.
    #[arg(long)]
    manual_terms: Option<String>,
}

#[derive(Args)]
struct TrainArgs {
    #[arg(long)]
    terms: PathBuf,
    #[arg(long)]
    vocab: PathBuf,
    /// Model file to write.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_parser = ["nb", "dt", "svm"])]
    classifier: String,
    #[command(flatten)]
    split: SplitArgs,
    #[command(flatten)]
    weighting: WeightingArgs,
    #[arg(long, default_value_t = 1.0)]
    nb_alpha: f64,
    #[arg(long, default_value_t = 10)]
    dt_max_depth: u32,
    #[arg(long, default_value_t = 2)]
    dt_min_leaf: u32,
    #[arg(long, default_value_t = 1.0)]
    svm_c: f64,
    #[arg(long, default_value_t = 20)]
    svm_epochs: u32,
    #[arg(long, default_value_t = false, action = clap::ArgAction::Set, value_name = "BOOL")]
    svm_normalize: bool,
    /// Seed for the SVM's epoch shuffles (not the split seed).
    #[arg(long, default_value_t = 42)]
    train_seed: u64,
}

#[derive(Args)]
struct ScoreArgs {
    #[arg(long)]
    terms: PathBuf,
    #[arg(long)]
    vocab: PathBuf,
    #[arg(long)]
    model: PathBuf,
    /// Scores CSV to write.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    split: SplitArgs,
    #[command(flatten)]
    weighting: WeightingArgs,
}

#[derive(Clone, Debug)]
struct Counts {
    tp: u32,
    fp: u32,
    tn: u32,
    fn_: u32,
}

fn parse_counts(s: &str) -> Result<Counts, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err("expected four counts: TP,FP,TN,FN".to_string());
    }
    let mut values = [0u32; 4];
    for (slot, raw) in values.iter_mut().zip(&parts) {
        *slot = raw.parse().map_err(|_| format!("bad count {raw:?}"))?;
    }
    Ok(Counts { tp: values[0], fp: values[1], tn: values[2], fn_: values[3] })
}

#[derive(Args)]
#[command(group(
    clap::ArgGroup::new("source").required(true).args(["scores", "from_counts"])
))]
struct EvalArgs {
    /// Scores CSV from `score`.
    #[arg(long)]
    scores: Option<PathBuf>,
    /// Evaluate a raw confusion matrix instead of scores: TP,FP,TN,FN.
    #[arg(long, value_parser = parse_counts)]
    from_counts: Option<Counts>,
    #[arg(long, default_value = "POS", value_parser = ["POS", "NEG"])]
    positive_class: String,
    /// Dataset label recorded in the metrics.
    #[arg(long, default_value = "dataset")]
    dataset: String,
    /// Classifier label recorded in the metrics.
    #[arg(long, default_value = "classifier")]
    classifier: String,
    /// Metrics file to write (metrics always go to stdout too).
    #[arg(long)]
    out: Option<PathBuf>,
    /// ROC curve CSV to write; needs scores.
    #[arg(long, requires = "scores")]
    roc_out: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Metrics files from `eval`.
    #[arg(long, num_args = 1.., required = true)]
    metrics: Vec<PathBuf>,
    /// Summary table file to write (the table always goes to stdout too).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Prep(args) => cmd_prep(args),
        Command::Vocab(args) => cmd_vocab(args),
        Command::Train(args) => cmd_train(args),
        Command::Score(args) => cmd_score(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Report(args) => cmd_report(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(2);
    }
}

fn cmd_run(args: RunArgs) -> Result<(), PipelineError> {
    let config = config::load_config(&args.config)?;
    let out_dir = match args.out {
        Some(dir) => dir,
        None => match std::env::var_os("POLARITY_OUT_DIR") {
            Some(dir) => PathBuf::from(dir),
            None => config.out_dir.clone(),
        },
    };
    let output = pipeline::run(&config, &out_dir)?;
    print!("{}", output.summary);
    println!("wrote {} files to {}", output.files.len(), out_dir.display());
    Ok(())
}

fn cmd_prep(args: PrepArgs) -> Result<(), PipelineError> {
    let preprocess = PreprocessConfig {
        erase_punctuation: args.erase_punctuation,
        filter_numbers: args.filter_numbers,
        lowercase: args.lowercase,
        stopwords: config::stopword_set(&args.stopwords, Path::new("."))?,
        stem: args.stem,
        strip_social_tokens: args.strip_social_tokens,
    };
    let corpus = csv_io::load_corpus(&args.input, &args.text_column, &args.label_column)?;
    let docs = pipeline::preprocess_corpus(&corpus, &preprocess);
    formats::write_terms(&args.out, &docs)?;
    println!("wrote terms for {} documents to {}", docs.len(), args.out.display());
    Ok(())
}

fn cmd_vocab(args: VocabArgs) -> Result<(), PipelineError> {
    let docs = formats::read_terms(&args.terms)?;
    let docs = pipeline::select_subset(&docs, args.split.subset(Subset::Train), &args.split.spec())?;
    let manual_terms = args.manual_terms.map(|raw| {
        raw.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect::<Vec<String>>()
    });
    let policy = VocabularyPolicy {
        min_doc_freq: args.min_doc_freq,
        max_terms: args.max_terms,
        manual_terms,
    };
    let vocab = polarity_core::build_vocabulary(&docs, &policy)?;
    formats::write_vocab(&args.out, &vocab)?;
    println!(
        "wrote vocabulary of {} terms over {} documents to {}",
        vocab.terms().len(),
        vocab.n_docs(),
        args.out.display()
    );
    Ok(())
}

fn cmd_train(args: TrainArgs) -> Result<(), PipelineError> {
    let docs = formats::read_terms(&args.terms)?;
    let docs = pipeline::select_subset(&docs, args.split.subset(Subset::Train), &args.split.spec())?;
    let vocab = formats::read_vocab(&args.vocab)?;
    let vectors = pipeline::vectorize_all(&docs, &vocab, args.weighting.scheme());
    let train_config = TrainConfig {
        nb_alpha: args.nb_alpha,
        dt_max_depth: args.dt_max_depth,
        dt_min_leaf: args.dt_min_leaf,
        svm_c: args.svm_c,
        svm_epochs: args.svm_epochs,
        svm_normalize: args.svm_normalize,
        seed: args.train_seed,
    };
    let kind = ClassifierKind::parse(&args.classifier).expect("validated by clap");
    let model = pipeline::train_model(kind, &vectors, vocab.terms().len(), &train_config)?;
    formats::write_model(&args.out, &model)?;
    println!("wrote {} model to {}", kind.as_str(), args.out.display());
    Ok(())
}

fn cmd_score(args: ScoreArgs) -> Result<(), PipelineError> {
    let docs = formats::read_terms(&args.terms)?;
    let docs = pipeline::select_subset(&docs, args.split.subset(Subset::Test), &args.split.spec())?;
    let vocab = formats::read_vocab(&args.vocab)?;
    let model = formats::read_model(&args.model)?;
    let vectors = pipeline::vectorize_all(&docs, &vocab, args.weighting.scheme());
    let rows = pipeline::score_rows(&model, &vectors)?;
    formats::write_scores(&args.out, &rows)?;
    println!("wrote {} scores to {}", rows.len(), args.out.display());
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> Result<(), PipelineError> {
    let positive_class = Polarity::parse(&args.positive_class).expect("validated by clap");
    let (entries, roc) = match (&args.from_counts, &args.scores) {
        (Some(counts), _) => {
            let cm = ConfusionMatrix {
                positive_class,
                true_pos: counts.tp,
                false_pos: counts.fp,
                true_neg: counts.tn,
                false_neg: counts.fn_,
            };
            (pipeline::counts_entries(&args.dataset, &args.classifier, &cm)?, None)
        }
        (None, Some(scores_path)) => {
            let rows = formats::read_scores(scores_path)?;
            let evaluation = pipeline::evaluate(&rows, positive_class)?;
            let entries = pipeline::metrics_entries(&args.dataset, &args.classifier, &evaluation);
            (entries, Some(evaluation.roc))
        }
        _ => unreachable!("clap enforces exactly one source"),
    };
    print!("{}", formats::render_key_values("metrics", &entries));
    if let Some(out) = &args.out {
        formats::write_key_values(out, "metrics", &entries)?;
    }
    if let Some(roc_out) = &args.roc_out {
        let roc = roc.expect("clap ties --roc-out to --scores");
        std::fs::write(roc_out, pipeline::render_roc_csv(&roc))
            .map_err(|e| PipelineError::io(roc_out, e))?;
    }
    Ok(())
}

fn cmd_report(args: ReportArgs) -> Result<(), PipelineError> {
    let mut entries = Vec::new();
    for path in &args.metrics {
        let kvs = formats::read_key_values(path, "metrics")?;
        let get = |key: &str| -> Result<&str, PipelineError> {
            kvs.iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| PipelineError::format(path, format!("missing key {key:?}")))
        };
        let number = |key: &str| -> Result<f64, PipelineError> {
            let raw = get(key)?;
            raw.parse().map_err(|_| {
                PipelineError::format(path, format!("bad {key}: {raw:?}"))
            })
        };
        entries.push(SummaryEntry {
            dataset: get("dataset")?.to_string(),
            classifier: get("classifier")?.to_string(),
            accuracy: number("accuracy")?,
            auc: number("auc")?,
        });
    }
    let table = polarity_core::render_summary_table(&entries);
    print!("{table}");
    if let Some(out) = &args.out {
        std::fs::write(out, &table).map_err(|e| PipelineError::io(out, e))?;
    }
    Ok(())
}
