//! Reading and writing decision problems as JSON documents or flat CSV.
//!
//! CSV layout, one label cell at the start of every row:
//!
//! ```text
//! alternative,C1,C2,C3
//! direction,max,min,max
//! weight,0.5,0.3,0.2
//! A1,8,7,7
//! A2,7,9,8
//! ```

use std::path::Path;

use madm_core::{Criterion, DecisionProblem, Direction};
use serde::{Deserialize, Serialize};

use crate::error::{Locus, Result, WorkbenchError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// Pick by file extension: `.csv` is CSV, anything else JSON.
    #[default]
    Auto,
    Json,
    Csv,
}

impl Format {
    fn resolve(self, path: &Path) -> Format {
        match self {
            Format::Auto => match path.extension().and_then(|e| e.to_str()) {
                Some(ext) if ext.eq_ignore_ascii_case("csv") => Format::Csv,
                _ => Format::Json,
            },
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DirectionLabel {
    Max,
    Min,
}

impl From<Direction> for DirectionLabel {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Benefit => DirectionLabel::Max,
            Direction::Cost => DirectionLabel::Min,
        }
    }
}

impl From<DirectionLabel> for Direction {
    fn from(d: DirectionLabel) -> Self {
        match d {
            DirectionLabel::Max => Direction::Benefit,
            DirectionLabel::Min => Direction::Cost,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionEntry {
    pub name: String,
    pub direction: DirectionLabel,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlternativeEntry {
    pub name: String,
    pub values: Vec<f64>,
}

/// On-disk form of a problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub name: String,
    pub criteria: Vec<CriterionEntry>,
    pub alternatives: Vec<AlternativeEntry>,
}

impl ProblemFile {
    pub fn from_problem(name: impl Into<String>, problem: &DecisionProblem) -> Self {
        Self {
            name: name.into(),
            criteria: problem
                .criteria()
                .iter()
                .map(|c| CriterionEntry {
                    name: c.name.clone(),
                    direction: c.direction.into(),
                    weight: c.weight,
                })
                .collect(),
            alternatives: problem
                .alternatives()
                .iter()
                .zip(problem.values())
                .map(|(name, row)| AlternativeEntry {
                    name: name.clone(),
                    values: row.clone(),
                })
                .collect(),
        }
    }

    pub fn to_problem(&self) -> madm_core::Result<DecisionProblem> {
        DecisionProblem::new(
            self.criteria
                .iter()
                .map(|c| Criterion::new(c.name.clone(), c.direction.into(), c.weight))
                .collect(),
            self.alternatives.iter().map(|a| a.name.clone()).collect(),
            self.alternatives.iter().map(|a| a.values.clone()).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LoadedProblem {
    pub name: String,
    pub problem: DecisionProblem,
    pub file: ProblemFile,
}

pub fn load_problem(path: &Path, format: Format) -> Result<LoadedProblem> {
    let text = std::fs::read_to_string(path).map_err(|source| WorkbenchError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let default_name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "problem".into());
    let parse_err = |locus: Locus, message: String| WorkbenchError::Parse {
        path: path.to_path_buf(),
        locus,
        message,
    };
    let file = match format.resolve(path) {
        Format::Csv => parse_csv(&text, &default_name),
        _ => parse_json(&text),
    }
    .map_err(|(locus, message)| parse_err(locus, message))?;
    let problem = file
        .to_problem()
        .map_err(|source| WorkbenchError::Invalid {
            path: path.to_path_buf(),
            source,
        })?;
    Ok(LoadedProblem {
        name: file.name.clone(),
        problem,
        file,
    })
}

type ParseResult<T> = std::result::Result<T, (Locus, String)>;

fn parse_json(text: &str) -> ParseResult<ProblemFile> {
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| {
        (
            Locus {
                line: Some(e.line() as u64),
                field: Some(format!("column {}", e.column())),
            },
            e.to_string(),
        )
    })?;
    let n = file.criteria.len();
    for (i, alt) in file.alternatives.iter().enumerate() {
        if alt.values.len() != n {
            return Err((
                Locus {
                    line: None,
                    field: Some(format!("alternatives[{i}].values")),
                },
                format!(
                    "alternative `{}` has {} values for {n} criteria",
                    alt.name,
                    alt.values.len()
                ),
            ));
        }
    }
    Ok(file)
}

fn parse_csv(text: &str, name: &str) -> ParseResult<ProblemFile> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut records = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map(|p| p.line());
            (Locus { line, field: None }, e.to_string())
        })?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        let line = rec.position().map_or(0, |p| p.line());
        records.push((line, rec));
    }
    if records.len() < 3 {
        return Err((
            Locus::default(),
            "expected a header row, a direction row and a weight row".into(),
        ));
    }

    let at = |line: u64, field: String| Locus {
        line: Some(line),
        field: Some(field),
    };
    let (header_line, header) = &records[0];
    let names: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    let n = names.len();
    if n == 0 {
        return Err((
            at(*header_line, "header".into()),
            "no criterion columns".into(),
        ));
    }

    let row_cells = |line: u64, rec: &csv::StringRecord, what: &str| -> ParseResult<Vec<String>> {
        let cells: Vec<String> = rec.iter().skip(1).map(str::to_owned).collect();
        if cells.len() != n {
            let label = rec.get(0).unwrap_or_default();
            return Err((
                at(line, format!("{what} `{label}`")),
                format!("row has {} values for {n} criteria", cells.len()),
            ));
        }
        Ok(cells)
    };
    let number = |line: u64, column: &str, cell: &str| -> ParseResult<f64> {
        cell.parse::<f64>().map_err(|_| {
            (
                at(line, format!("column `{column}`")),
                format!("`{cell}` is not a number"),
            )
        })
    };

    let (dir_line, dir_rec) = &records[1];
    let directions = row_cells(*dir_line, dir_rec, "direction row")?
        .iter()
        .zip(&names)
        .map(|(cell, col)| match cell.to_ascii_lowercase().as_str() {
            "max" => Ok(DirectionLabel::Max),
            "min" => Ok(DirectionLabel::Min),
            _ => Err((
                at(*dir_line, format!("column `{col}`")),
                format!("direction must be `max` or `min`, found `{cell}`"),
            )),
        })
        .collect::<ParseResult<Vec<_>>>()?;

    let (w_line, w_rec) = &records[2];
    let weights = row_cells(*w_line, w_rec, "weight row")?
        .iter()
        .zip(&names)
        .map(|(cell, col)| number(*w_line, col, cell))
        .collect::<ParseResult<Vec<_>>>()?;

    let mut alternatives = Vec::new();
    for (line, rec) in &records[3..] {
        let cells = row_cells(*line, rec, "alternative")?;
        let values = cells
            .iter()
            .zip(&names)
            .map(|(cell, col)| number(*line, col, cell))
            .collect::<ParseResult<Vec<_>>>()?;
        alternatives.push(AlternativeEntry {
            name: rec.get(0).unwrap_or_default().to_owned(),
            values,
        });
    }

    Ok(ProblemFile {
        name: name.to_owned(),
        criteria: names
            .into_iter()
            .zip(directions)
            .zip(weights)
            .map(|((name, direction), weight)| CriterionEntry {
                name,
                direction,
                weight,
            })
            .collect(),
        alternatives,
    })
}

/// Serializes a problem so that [`load_problem`] reads it back unchanged.
/// `Auto` emits JSON.
pub fn emit_problem(name: &str, problem: &DecisionProblem, format: Format) -> String {
    let file = ProblemFile::from_problem(name, problem);
    match format {
        Format::Csv => emit_csv(&file),
        _ => {
            let mut s =
                serde_json::to_string_pretty(&file).expect("problem files always serialize");
            s.push('\n');
            s
        }
    }
}

fn emit_csv(file: &ProblemFile) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut row = |label: &str, cells: Vec<String>| {
        let mut record = vec![label.to_owned()];
        record.extend(cells);
        w.write_record(&record).expect("writing to memory");
    };
    row(
        "alternative",
        file.criteria.iter().map(|c| c.name.clone()).collect(),
    );
    row(
        "direction",
        file.criteria
            .iter()
            .map(|c| match c.direction {
                DirectionLabel::Max => "max".to_owned(),
                DirectionLabel::Min => "min".to_owned(),
            })
            .collect(),
    );
    row(
        "weight",
        file.criteria.iter().map(|c| c.weight.to_string()).collect(),
    );
    for alt in &file.alternatives {
        row(&alt.name, alt.values.iter().map(f64::to_string).collect());
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}
