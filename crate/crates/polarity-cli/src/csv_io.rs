//! CSV corpus loading and saving (RFC 4180, UTF-8, header row required).

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use polarity_core::{Document, LabeledCorpus, Polarity};

use crate::PipelineError;

fn column_index(headers: &csv::StringRecord, name: &str, path: &Path) -> Result<usize, PipelineError> {
    headers.iter().position(|h| h == name).ok_or_else(|| {
        let available: Vec<&str> = headers.iter().collect();
        PipelineError::format(
            path,
            format!("no column named {name:?}; file has {available:?}"),
        )
    })
}

/// Loads a labeled corpus. Document ids are row ordinals (0 = first data
/// row). Labels parse case-insensitively as POS/NEG; anything else is an
/// error naming the offending row. Rows with empty text are kept.
pub fn load_corpus(
    path: &Path,
    text_column: &str,
    label_column: &str,
) -> Result<LabeledCorpus, PipelineError> {
    let file = File::open(path).map_err(|e| PipelineError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(BufReader::new(file));

    let headers = reader
        .headers()
        .map_err(|e| PipelineError::format(path, e.to_string()))?
        .clone();
    let text_at = column_index(&headers, text_column, path)?;
    let label_at = column_index(&headers, label_column, path)?;

    let mut documents = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| PipelineError::format(path, e.to_string()))?;
        let text = record.get(text_at).unwrap_or("");
        let raw_label = record.get(label_at).unwrap_or("");
        let label = Polarity::parse(raw_label).ok_or_else(|| {
            PipelineError::format(
                path,
                format!("row {}: label {raw_label:?} is not POS or NEG", row + 2),
            )
        })?;
        documents.push(Document {
            id: row as u32,
            text: text.to_string(),
            label: Some(label),
        });
    }
    if documents.is_empty() {
        return Err(PipelineError::format(path, "no data rows"));
    }
    LabeledCorpus::from_documents(documents).map_err(PipelineError::from)
}

/// Writes a corpus back to CSV with the given column names. Ids are
/// positional, so loading the result assigns the same ids whenever the
/// corpus ids were already the row ordinals.
pub fn save_corpus(
    path: &Path,
    corpus: &LabeledCorpus,
    text_column: &str,
    label_column: &str,
) -> Result<(), PipelineError> {
    let file = File::create(path).map_err(|e| PipelineError::io(path, e))?;
    let mut writer = csv::Writer::from_writer(BufWriter::new(file));
    writer
        .write_record([text_column, label_column])
        .map_err(|e| PipelineError::format(path, e.to_string()))?;
    for doc in corpus.documents() {
        let label = doc.label.expect("labeled corpus").as_str();
        writer
            .write_record([doc.text.as_str(), label])
            .map_err(|e| PipelineError::format(path, e.to_string()))?;
    }
    writer.flush().map_err(|e| PipelineError::io(path, e))?;
    Ok(())
}
