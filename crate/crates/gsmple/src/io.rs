//! Text formats: dataset CSV, edge-set files and trace logs.
//!
//! Dataset CSV has a header row of variable names, a kind row (`d:<card>`
//! for a discrete column with codes `0..card`, `c` for continuous), then
//! one row per sample. Empty fields are rejected; there is no missing-value
//! support. Edge files start with `D=<n>` followed by one `i j` pair per
//! line in canonical sorted order.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use gsmple_core::learners::LearnTrace;
use gsmple_core::{Column, ColumnKind, Dataset, EdgeSet};

use crate::error::{io_err, Error, Result};

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        msg: msg.into(),
    }
}

pub fn parse_kind(s: &str) -> Option<ColumnKind> {
    match s.trim() {
        "c" => Some(ColumnKind::Continuous),
        other => {
            let card = other.strip_prefix("d:")?.parse::<u32>().ok()?;
            (card >= 1).then_some(ColumnKind::Discrete { cardinality: card })
        }
    }
}

pub fn format_kind(k: ColumnKind) -> String {
    match k {
        ColumnKind::Discrete { cardinality } => format!("d:{cardinality}"),
        ColumnKind::Continuous => "c".into(),
    }
}

/// Parses a dataset; `origin` only labels error messages.
pub fn read_dataset_from<R: Read>(reader: R, origin: &Path) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut records = rdr.records();
    let line_of = |r: &csv::StringRecord| r.position().map_or(0, |p| p.line() as usize);

    let header = records
        .next()
        .ok_or_else(|| parse_err(origin, 1, "missing header row"))??;
    let names: Vec<String> = header.iter().map(|s| s.trim().to_string()).collect();
    let d = names.len();
    let kinds_rec = records
        .next()
        .ok_or_else(|| parse_err(origin, 2, "missing kind row"))??;
    if kinds_rec.len() != d {
        return Err(parse_err(origin, line_of(&kinds_rec), "kind row width differs from header"));
    }
    let mut kinds = Vec::with_capacity(d);
    for field in kinds_rec.iter() {
        let k = parse_kind(field).ok_or_else(|| {
            parse_err(origin, line_of(&kinds_rec), format!("bad column kind {field:?}, expected d:<card> or c"))
        })?;
        kinds.push(k);
    }

    let mut codes: Vec<Vec<u32>> = vec![Vec::new(); d];
    let mut values: Vec<Vec<f64>> = vec![Vec::new(); d];
    for rec in records {
        let rec = rec?;
        let line = line_of(&rec);
        if rec.len() != d {
            return Err(parse_err(origin, line, format!("expected {d} fields, found {}", rec.len())));
        }
        for (v, field) in rec.iter().enumerate() {
            let field = field.trim();
            if field.is_empty() {
                return Err(parse_err(origin, line, format!("missing value in column {}", names[v])));
            }
            match kinds[v] {
                ColumnKind::Discrete { cardinality } => {
                    let c: u32 = field
                        .parse()
                        .map_err(|_| parse_err(origin, line, format!("bad discrete code {field:?}")))?;
                    if c >= cardinality {
                        return Err(parse_err(
                            origin,
                            line,
                            format!("code {c} out of range for d:{cardinality}"),
                        ));
                    }
                    codes[v].push(c);
                }
                ColumnKind::Continuous => {
                    let x: f64 = field
                        .parse()
                        .map_err(|_| parse_err(origin, line, format!("bad number {field:?}")))?;
                    if !x.is_finite() {
                        return Err(parse_err(origin, line, "non-finite value"));
                    }
                    values[v].push(x);
                }
            }
        }
    }
    let columns = kinds
        .iter()
        .zip(codes.into_iter().zip(values))
        .map(|(k, (c, x))| match *k {
            ColumnKind::Discrete { cardinality } => Column::discrete(c, cardinality),
            ColumnKind::Continuous => Column::continuous(x),
        })
        .collect();
    Ok(Dataset::with_names(names, columns)?)
}

pub fn read_dataset(path: &Path) -> Result<Dataset> {
    let f = fs::File::open(path).map_err(io_err(path))?;
    read_dataset_from(f, path)
}

pub fn write_dataset_to<W: Write>(data: &Dataset, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(data.names())?;
    w.write_record(data.columns().iter().map(|c| format_kind(c.kind())))?;
    let mut row = Vec::with_capacity(data.n_vars());
    for r in 0..data.n_samples() {
        row.clear();
        for col in data.columns() {
            row.push(match col {
                Column::Discrete { codes, .. } => codes[r].to_string(),
                // Display for f64 is the shortest representation that round-trips.
                Column::Continuous(xs) => xs[r].to_string(),
            });
        }
        w.write_record(&row)?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

pub fn dataset_to_string(data: &Dataset) -> Result<String> {
    let mut buf = Vec::new();
    write_dataset_to(data, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn format_edges(es: &EdgeSet) -> String {
    let mut s = format!("D={}\n", es.d());
    for (i, j) in es.iter() {
        s.push_str(&format!("{i} {j}\n"));
    }
    s
}

/// Blank lines and `#` comments are ignored.
pub fn parse_edges(text: &str, origin: &Path) -> Result<EdgeSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (n, first) = lines
        .next()
        .ok_or_else(|| parse_err(origin, 1, "empty edge file"))?;
    let d: usize = first
        .strip_prefix("D=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| parse_err(origin, n, "expected D=<n>"))?;
    let mut es = EdgeSet::empty(d);
    for (n, line) in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        let (i, j) = match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) => (i, j),
            _ => return Err(parse_err(origin, n, format!("expected `i j`, got {line:?}"))),
        };
        es.insert(i, j).map_err(|e| parse_err(origin, n, e.to_string()))?;
    }
    Ok(es)
}

pub fn read_edges(path: &Path) -> Result<EdgeSet> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_edges(&text, path)
}

/// One line per step: `phase i j score accepted`.
pub fn format_trace(trace: &LearnTrace) -> String {
    let mut s = String::new();
    for st in &trace.steps {
        s.push_str(&format!(
            "{} {} {} {} {}\n",
            st.phase.as_str(),
            st.edge.0,
            st.edge.1,
            st.score,
            st.accepted
        ));
    }
    s
}

/// Writes via a temporary sibling and a rename so readers never observe a
/// partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let mut tmp: PathBuf = path.to_path_buf();
    let name = path
        .file_name()
        .map(|n| format!(".{}.tmp", n.to_string_lossy()))
        .unwrap_or_else(|| ".tmp".into());
    tmp.set_file_name(name);
    fs::write(&tmp, contents).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

pub fn ensure_dir(path: &Path) -> Result<()> {
    fs::create_dir_all(path).map_err(io_err(path))
}
