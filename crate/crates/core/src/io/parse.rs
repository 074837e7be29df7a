use std::collections::BTreeMap;
use std::io::Read;

use crate::error::InputError;
use crate::io::boundaries::{map_score_to_label, GradeBoundaries};
use crate::types::{GradeCounts, GradeLabel};

/// Per-group tallies keyed by group id. Ordered, so iteration and output
/// never depend on input row order.
pub type GroupCounts = BTreeMap<String, GradeCounts>;

struct Row {
    line: u64,
    fields: Vec<String>,
}

/// Read comma-separated rows, dropping blank lines and a leading header
/// (recognized by a non-numeric second field).
fn read_rows<R: Read>(input: R) -> Result<Vec<Row>, InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let fields: Vec<String> = record.iter().map(str::to_owned).collect();
        if rows.is_empty() && is_header(&fields) {
            continue;
        }
        rows.push(Row { line, fields });
    }
    if rows.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(rows)
}

fn is_header(fields: &[String]) -> bool {
    fields.get(1).is_some_and(|f| f.parse::<f64>().is_err())
}

enum NumberError {
    Fractional,
    NotANumber,
}

fn parse_integer(field: &str) -> Result<i64, NumberError> {
    match field.parse::<i64>() {
        Ok(v) => Ok(v),
        Err(_) if field.parse::<f64>().is_ok() => Err(NumberError::Fractional),
        Err(_) => Err(NumberError::NotANumber),
    }
}

fn group_id(row: &Row) -> Result<String, InputError> {
    let id = &row.fields[0];
    if id.is_empty() {
        return Err(InputError::Row {
            line: row.line,
            message: "empty group id".into(),
        });
    }
    Ok(id.clone())
}

/// Aggregate a `group_id,score` roster into per-group grade counts.
/// Scores are integers in `0..=100`; fractional scores are rejected, not
/// rounded.
pub fn parse_scores<R: Read>(
    input: R,
    boundaries: &GradeBoundaries,
) -> Result<GroupCounts, InputError> {
    let mut tallies: BTreeMap<String, [u64; 5]> = BTreeMap::new();
    for row in read_rows(input)? {
        let row_err = |message: String| InputError::Row {
            line: row.line,
            message,
        };
        if row.fields.len() != 2 {
            return Err(row_err(format!(
                "expected `group_id,score`, got {} fields",
                row.fields.len()
            )));
        }
        let id = group_id(&row)?;
        let raw = &row.fields[1];
        let score = parse_integer(raw).map_err(|e| match e {
            NumberError::Fractional => row_err(format!("score {raw:?} is not an integer")),
            NumberError::NotANumber => row_err(format!("score {raw:?} is not a number")),
        })?;
        let label = map_score_to_label(score, boundaries).map_err(|e| row_err(e.to_string()))?;
        tallies.entry(id).or_default()[label.index() - 1] += 1;
    }
    Ok(tallies
        .into_iter()
        .map(|(id, c)| {
            (
                id,
                GradeCounts::new(c).expect("every group has at least one score"),
            )
        })
        .collect())
}

/// Parse `group_id,nF,nD,nC,nB,nA` rows. Each group may appear once.
pub fn parse_counts<R: Read>(input: R) -> Result<GroupCounts, InputError> {
    let mut groups = GroupCounts::new();
    for row in read_rows(input)? {
        let row_err = |message: String| InputError::Row {
            line: row.line,
            message,
        };
        if row.fields.len() != 6 {
            return Err(row_err(format!(
                "expected `group_id,nF,nD,nC,nB,nA`, got {} fields",
                row.fields.len()
            )));
        }
        let id = group_id(&row)?;
        let mut counts = [0u64; 5];
        for ((slot, raw), label) in counts.iter_mut().zip(&row.fields[1..]).zip(GradeLabel::ALL) {
            *slot = match parse_integer(raw) {
                Ok(v) if v >= 0 => v as u64,
                Ok(_) => return Err(row_err(format!("negative count {raw:?} for grade {label}"))),
                Err(NumberError::Fractional) => {
                    return Err(row_err(format!(
                        "count {raw:?} for grade {label} is not an integer"
                    )))
                }
                Err(NumberError::NotANumber) => {
                    return Err(row_err(format!(
                        "count {raw:?} for grade {label} is not a number"
                    )))
                }
            };
        }
        let counts = GradeCounts::new(counts).map_err(|e| row_err(e.to_string()))?;
        if groups.insert(id.clone(), counts).is_some() {
            return Err(row_err(format!("group {id:?} listed twice")));
        }
    }
    Ok(groups)
}

/// Emit groups in the `parse_counts` format, with a header row.
pub fn write_counts_csv(groups: &GroupCounts) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["group_id", "nF", "nD", "nC", "nB", "nA"])
        .expect("writing to memory");
    for (id, counts) in groups {
        let mut record = vec![id.clone()];
        record.extend(counts.as_array().iter().map(u64::to_string));
        writer.write_record(&record).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}
