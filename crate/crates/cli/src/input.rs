//! Reading sample and reference Z-number matrices from JSON or CSV.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use qzn_core::{Error as CoreError, ZMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Attribute {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entity {
    pub label: String,
    pub attributes: Vec<Attribute>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub samples: Vec<Entity>,
    pub references: Vec<Entity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attribute_names: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Json,
    Csv,
}

impl InputFormat {
    pub fn detect(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "json" => Some(InputFormat::Json),
            "csv" => Some(InputFormat::Csv),
            _ => None,
        }
    }
}

/// Validated samples and references.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub samples: ZMatrix,
    pub references: ZMatrix,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn matrix(
    path: &Path,
    role: &str,
    entities: &[Entity],
    names: &[String],
) -> Result<ZMatrix, CliError> {
    let invalid = |message: String| CliError::Invalid {
        path: path.to_path_buf(),
        message,
    };
    if entities.is_empty() {
        return Err(invalid(format!("{role}: no entries")));
    }
    let mut seen = HashSet::new();
    for (i, e) in entities.iter().enumerate() {
        if !seen.insert(e.label.as_str()) {
            return Err(invalid(format!(
                "{role}[{i}]: duplicate label {:?}",
                e.label
            )));
        }
        if e.attributes.len() != names.len() {
            return Err(invalid(format!(
                "{role}[{i}] ({}): expected {} attributes, found {}",
                e.label,
                names.len(),
                e.attributes.len()
            )));
        }
    }
    let raw: Vec<Vec<(f64, f64)>> = entities
        .iter()
        .map(|e| e.attributes.iter().map(|x| (x.a, x.b)).collect())
        .collect();
    let m = ZMatrix::build(&raw).map_err(|err| match err {
        CoreError::Cell {
            row,
            column,
            source,
        } => {
            if !matches!(*source, CoreError::InvalidMembership(_)) {
                return invalid(format!("{role}[{row}], attribute {}: {source}", column + 1));
            }
            let (a, b) = raw[row][column];
            let (part, value) = if (0.0..=1.0).contains(&a) { ("b", b) } else { ("a", a) };
            invalid(format!(
                "{role}[{row}] ({}), attribute {} ({}), field {part}: membership {value} outside [0, 1]",
                entities[row].label,
                column + 1,
                names[column],
            ))
        }
        other => invalid(format!("{role}: {other}")),
    })?;
    m.with_labels(
        entities.iter().map(|e| e.label.clone()).collect(),
        names.to_vec(),
    )
    .map_err(|e| invalid(format!("{role}: {e}")))
}

fn attribute_names(doc: &InputDocument) -> Vec<String> {
    let k = doc
        .samples
        .first()
        .or(doc.references.first())
        .map_or(0, |e| e.attributes.len());
    doc.attribute_names
        .clone()
        .unwrap_or_else(|| (1..=k).map(|j| format!("a{j}")).collect())
}

impl Dataset {
    pub fn from_document(path: &Path, doc: &InputDocument) -> Result<Self, CliError> {
        let names = attribute_names(doc);
        if names.is_empty() {
            return Err(CliError::Invalid {
                path: path.to_path_buf(),
                message: "no attributes".into(),
            });
        }
        Ok(Dataset {
            samples: matrix(path, "samples", &doc.samples, &names)?,
            references: matrix(path, "references", &doc.references, &names)?,
        })
    }

    pub fn to_document(&self) -> InputDocument {
        let entities = |m: &ZMatrix| {
            m.rows()
                .iter()
                .zip(m.row_labels())
                .map(|(row, label)| Entity {
                    label: label.clone(),
                    attributes: row
                        .iter()
                        .map(|z| Attribute {
                            a: z.a.value(),
                            b: z.b.value(),
                        })
                        .collect(),
                })
                .collect()
        };
        InputDocument {
            samples: entities(&self.samples),
            references: entities(&self.references),
            attribute_names: Some(self.samples.column_labels().to_vec()),
        }
    }
}

pub fn parse_json(path: &Path, text: &str) -> Result<Dataset, CliError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        message: format!("column {}: {e}", e.column()),
    })?;
    Dataset::from_document(path, &doc)
}

pub fn read_json(path: &Path) -> Result<Dataset, CliError> {
    parse_json(path, &read(path)?)
}

/// Parses rows `label,a1,b1,...,aK,bK`. Attribute names come from the header
/// when its columns read `<name>_a,<name>_b`, otherwise `a1..aK`.
pub fn parse_csv_entities(path: &Path, text: &str) -> Result<(Vec<Entity>, Vec<String>), CliError> {
    let parse_err = |line: u64, message: String| CliError::Parse {
        path: path.to_path_buf(),
        line: line as usize,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    if header.len() < 3 || header.len() % 2 == 0 {
        return Err(parse_err(
            1,
            format!(
                "header needs label plus a/b column pairs, found {} columns",
                header.len()
            ),
        ));
    }
    if !header[0].eq_ignore_ascii_case("label") {
        return Err(parse_err(
            1,
            format!("first column must be \"label\", found {:?}", &header[0]),
        ));
    }
    let k = (header.len() - 1) / 2;
    let names: Vec<String> = (0..k)
        .map(|j| {
            let (ca, cb) = (&header[1 + 2 * j], &header[2 + 2 * j]);
            match (ca.strip_suffix("_a"), cb.strip_suffix("_b")) {
                (Some(x), Some(y)) if x == y && !x.is_empty() => x.to_string(),
                _ => format!("a{}", j + 1),
            }
        })
        .collect();

    let mut entities = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |idx: usize| -> Result<f64, CliError> {
            let raw = &record[idx];
            raw.parse::<f64>().map_err(|_| {
                parse_err(
                    line,
                    format!("column {:?}: {raw:?} is not a number", &header[idx]),
                )
            })
        };
        let mut attributes = Vec::with_capacity(k);
        for j in 0..k {
            attributes.push(Attribute {
                a: field(1 + 2 * j)?,
                b: field(2 + 2 * j)?,
            });
        }
        entities.push(Entity {
            label: record[0].to_string(),
            attributes,
        });
    }
    Ok((entities, names))
}

pub fn read_csv(samples: &Path, references: &Path) -> Result<Dataset, CliError> {
    let (s, names) = parse_csv_entities(samples, &read(samples)?)?;
    let (r, ref_names) = parse_csv_entities(references, &read(references)?)?;
    if names.len() != ref_names.len() {
        return Err(CliError::Invalid {
            path: references.to_path_buf(),
            message: format!(
                "references have {} attributes, samples have {}",
                ref_names.len(),
                names.len()
            ),
        });
    }
    Ok(Dataset {
        samples: matrix(samples, "samples", &s, &names)?,
        references: matrix(references, "references", &r, &names)?,
    })
}

/// Writes a dataset as `label,<name>_a,<name>_b,...` rows.
pub fn write_csv_matrix(m: &ZMatrix) -> String {
    let mut out = String::from("label");
    for name in m.column_labels() {
        out.push_str(&format!(",{name}_a,{name}_b"));
    }
    out.push('\n');
    for (row, label) in m.rows().iter().zip(m.row_labels()) {
        out.push_str(label);
        for z in row {
            out.push_str(&format!(",{},{}", z.a.value(), z.b.value()));
        }
        out.push('\n');
    }
    out
}

/// Where the data lives: one JSON document, or two CSV files.
#[derive(Debug, Clone)]
pub enum Source {
    Json(PathBuf),
    Csv {
        samples: PathBuf,
        references: PathBuf,
    },
}

impl Source {
    pub fn load(&self) -> Result<Dataset, CliError> {
        match self {
            Source::Json(p) => read_json(p),
            Source::Csv {
                samples,
                references,
            } => read_csv(samples, references),
        }
    }
}
