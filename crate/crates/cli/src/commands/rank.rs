use tdde_core::rank_journals;

use crate::error::CliError;
use crate::format::fmt_g;
use crate::io::{output, parse_features, read_input};
use crate::RankArgs;

/// Response used when `--response` is absent and the table has this column.
pub const DEFAULT_RESPONSE: &str = "CiteScore";

pub fn run(args: &RankArgs) -> Result<(), CliError> {
    let matrix = parse_features(&read_input(&args.input)?)?;
    let response = match &args.response {
        Some(r) => r.clone(),
        None if matrix.feature_index(DEFAULT_RESPONSE).is_some() => DEFAULT_RESPONSE.to_string(),
        None => matrix.feature_names()[0].clone(),
    };
    eprintln!("response={} lambda={}", response, fmt_g(args.lambda));

    let (result, _) = rank_journals(&matrix, &response, args.lambda)?;

    let mut wtr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(output(args.out.as_deref())?);
    let io_err = |e: csv::Error| CliError::new(1, "Io", e.to_string());
    wtr.write_record(["rank", "journal", "singval", "elimination_step"]).map_err(io_err)?;
    for e in result.entries() {
        wtr.write_record([
            e.rank.to_string(),
            e.journal.clone(),
            fmt_g(e.singval),
            e.elimination_step.to_string(),
        ])
        .map_err(io_err)?;
    }
    wtr.flush()?;
    Ok(())
}
