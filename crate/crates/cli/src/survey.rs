//! Corpus survey: one JSONL record per (graph, value), errors recorded and
//! skipped, and a deterministic summary with verdict counts and the extremal
//! gaps in both directions.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use serde::Serialize;

use betapack_core::{compare_parameters, parse_graph6, ComparisonVerdict, Rational, VertexSet};

use crate::{CliError, FormatArg};

#[derive(Serialize)]
struct SurveyRecord {
    id: String,
    n: usize,
    m: usize,
    value: Rational,
    gamma: usize,
    pack: usize,
    verdict: ComparisonVerdict,
    gamma_witness: VertexSet,
    pack_witness: VertexSet,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    id: &'a str,
    error: String,
}

#[derive(Serialize, Clone)]
struct Extremal {
    id: String,
    value: Rational,
    pack: usize,
    gamma: usize,
}

#[derive(Serialize)]
struct SurveySummary {
    records: usize,
    skipped: usize,
    less: usize,
    equal: usize,
    greater: usize,
    max_pack_minus_gamma: Option<Extremal>,
    max_gamma_minus_pack: Option<Extremal>,
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))
    }
}

pub fn run(
    input: &str,
    values: &[Rational],
    output: &Path,
    format: FormatArg,
    cap: usize,
) -> Result<(), CliError> {
    let text = read_input(input)?;
    let file =
        File::create(output).map_err(|e| CliError::Input(format!("{}: {e}", output.display())))?;
    let mut out = BufWriter::new(file);

    let mut summary = SurveySummary {
        records: 0,
        skipped: 0,
        less: 0,
        equal: 0,
        greater: 0,
        max_pack_minus_gamma: None,
        max_gamma_minus_pack: None,
    };
    // Track the extremal differences; the first record achieving each
    // maximum (in output order) is kept.
    let mut best_pg: Option<i64> = None;
    let mut best_gp: Option<i64> = None;

    fn write_line<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
        let line = serde_json::to_string(value)
            .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
        writeln!(out, "{line}").map_err(CliError::from)
    }

    for raw in text.lines() {
        let id = raw.trim();
        if id.is_empty() {
            continue;
        }
        let graph = match parse_graph6(id) {
            Ok(g) if g.n() > cap => Err(betapack_core::Error::CapExceeded { n: g.n(), cap }),
            other => other,
        };
        let g = match graph {
            Ok(g) => g,
            Err(e) => {
                summary.skipped += 1;
                write_line(
                    &mut out,
                    &ErrorRecord {
                        id,
                        error: e.to_string(),
                    },
                )?;
                continue;
            }
        };
        for &value in values {
            let cmp = compare_parameters(&g, value)?;
            let record = SurveyRecord {
                id: id.to_string(),
                n: g.n(),
                m: g.edge_count(),
                value,
                gamma: cmp.gamma.value,
                pack: cmp.pack.value,
                verdict: cmp.verdict,
                gamma_witness: cmp.gamma.witness,
                pack_witness: cmp.pack.witness,
            };
            write_line(&mut out, &record)?;
            summary.records += 1;
            match cmp.verdict {
                ComparisonVerdict::Less => summary.less += 1,
                ComparisonVerdict::Equal => summary.equal += 1,
                ComparisonVerdict::Greater => summary.greater += 1,
            }
            let diff = record.pack as i64 - record.gamma as i64;
            let extremal = Extremal {
                id: record.id.clone(),
                value,
                pack: record.pack,
                gamma: record.gamma,
            };
            if best_pg.is_none_or(|b| diff > b) {
                best_pg = Some(diff);
                summary.max_pack_minus_gamma = Some(extremal.clone());
            }
            if best_gp.is_none_or(|b| -diff > b) {
                best_gp = Some(-diff);
                summary.max_gamma_minus_pack = Some(extremal);
            }
        }
    }
    out.flush()?;

    match format {
        FormatArg::Json => {
            let line = serde_json::to_string(&summary)
                .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
            println!("{line}");
        }
        FormatArg::Table | FormatArg::Dot => {
            println!(
                "survey: {} records written, {} skipped",
                summary.records, summary.skipped
            );
            println!(
                "verdicts: less = {}, equal = {}, greater = {}",
                summary.less, summary.equal, summary.greater
            );
            let fmt_ex = |e: &Option<Extremal>| match e {
                None => "(none)".to_string(),
                Some(x) => format!(
                    "{} at {} (pack = {}, gamma = {})",
                    x.id, x.value, x.pack, x.gamma
                ),
            };
            println!(
                "max pack - gamma: {}",
                fmt_ex(&summary.max_pack_minus_gamma)
            );
            println!(
                "max gamma - pack: {}",
                fmt_ex(&summary.max_gamma_minus_pack)
            );
        }
    }
    Ok(())
}
