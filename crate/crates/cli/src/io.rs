//! CSV readers and the stdout/file output sink.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use tdde_core::{validate_series, DenseMatrix, FeatureMatrix, InfluenceSeries};

use crate::error::CliError;

/// Reads `path`, or stdin when `path` is `-`.
pub fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut buf)?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_end(&mut buf))
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    }
    Ok(buf)
}

/// Writer for `--out`, defaulting to stdout.
pub fn output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::create(p).map_err(|e| CliError::usage(format!("cannot create {}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        _ => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn reader(bytes: &[u8]) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(bytes)
}

fn parse_number(field: &str, line: u64, column: &str) -> Result<f64, CliError> {
    let v: f64 = field
        .parse()
        .map_err(|_| CliError::input(format!("line {line}: `{field}` in column `{column}` is not a number")))?;
    if !v.is_finite() {
        return Err(CliError::input(format!("line {line}: non-finite value in column `{column}`")));
    }
    Ok(v)
}

fn line_of(record: &csv::StringRecord) -> u64 {
    record.position().map_or(0, |p| p.line())
}

/// Parses a `t,p` series and validates its grid.
pub fn parse_series(bytes: &[u8]) -> Result<InfluenceSeries, CliError> {
    let mut rdr = reader(bytes);
    let header = rdr.headers().map_err(|e| CliError::input(e.to_string()))?.clone();
    if header.len() != 2 || &header[0] != "t" || &header[1] != "p" {
        return Err(CliError::input(format!(
            "expected header `t,p`, found `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let (mut times, mut values) = (Vec::new(), Vec::new());
    for record in rdr.records() {
        let record = record.map_err(|e| CliError::input(e.to_string()))?;
        let line = line_of(&record);
        times.push(parse_number(&record[0], line, "t")?);
        values.push(parse_number(&record[1], line, "p")?);
    }
    Ok(validate_series(&times, &values)?)
}

/// Parses a `journal,<feature>...` table.
pub fn parse_features(bytes: &[u8]) -> Result<FeatureMatrix, CliError> {
    let mut rdr = reader(bytes);
    let header = rdr.headers().map_err(|e| CliError::input(e.to_string()))?.clone();
    if header.get(0) != Some("journal") {
        return Err(CliError::input("first column must be `journal`"));
    }
    let features: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut journals = Vec::new();
    let mut entries = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| CliError::input(e.to_string()))?;
        let line = line_of(&record);
        journals.push(record[0].to_string());
        for (j, name) in features.iter().enumerate() {
            entries.push(parse_number(&record[j + 1], line, name)?);
        }
    }
    if journals.is_empty() {
        return Err(tdde_core::ModelError::NoJournals.into());
    }
    if features.is_empty() {
        return Err(tdde_core::ModelError::TooFewFeatures(0).into());
    }
    let data = DenseMatrix::new(journals.len(), features.len(), entries)?;
    Ok(FeatureMatrix::new(journals, features, data)?)
}
