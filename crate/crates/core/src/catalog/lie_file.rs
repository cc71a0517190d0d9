use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::exactla::{format_rational, parse_rational};
use crate::liecore::{default_labels, validate_structure, LieAlgebra, RawAlgebra, StructureError};

pub const LIE_HEADER: &str = "lie-sc v1";

#[derive(Debug, Error)]
pub enum LieFileError {
    #[error("line {line}: {message}")]
    FormatError { line: usize, message: String },
    #[error("line {line}: index {index} out of range 1..={dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
    #[error("line {line}: constant ({i}, {j}, {k}) given twice")]
    DuplicateTriple { line: usize, i: usize, j: usize, k: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_err(line: usize, message: impl Into<String>) -> LieFileError {
    LieFileError::FormatError { line, message: message.into() }
}

fn index(line: usize, tok: &str, dim: usize) -> Result<usize, LieFileError> {
    let index: usize = tok.parse().map_err(|_| format_err(line, format!("expected an index, found {tok:?}")))?;
    if index == 0 || index > dim {
        return Err(LieFileError::IndexOutOfRange { line, index, dim });
    }
    Ok(index)
}

/// Parses `.lie` text. Indices in the file are 1-based.
pub fn parse_lie(text: &str) -> Result<LieAlgebra, LieFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, LIE_HEADER)) => {}
        Some((n, other)) => return Err(format_err(n, format!("expected {LIE_HEADER:?}, found {other:?}"))),
        None => return Err(format_err(1, "empty file")),
    }
    let dim = match lines.next() {
        Some((n, l)) => {
            let d = l.strip_prefix("dim ").ok_or_else(|| format_err(n, "expected `dim n`"))?;
            d.trim().parse::<usize>().map_err(|_| format_err(n, format!("bad dimension {d:?}")))?
        }
        None => return Err(format_err(1, "missing `dim` line")),
    };
    let mut raw = RawAlgebra::new(dim);
    let mut labels = default_labels(dim);
    let mut seen_labels = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for (n, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["label", i, name] => {
                let i = index(n, i, dim)?;
                if !seen_labels.insert(i) {
                    return Err(format_err(n, format!("label {i} given twice")));
                }
                labels[i - 1] = (*name).to_string();
            }
            [i, j, k, c] => {
                let (i, j, k) = (index(n, i, dim)?, index(n, j, dim)?, index(n, k, dim)?);
                if i >= j {
                    return Err(format_err(n, format!("constant lines need i < j, found {i} {j}")));
                }
                let c = parse_rational(c).ok_or_else(|| format_err(n, format!("{c:?} is not a rational in lowest terms")))?;
                if !seen.insert((i, j, k)) {
                    return Err(LieFileError::DuplicateTriple { line: n, i, j, k });
                }
                raw.set(i - 1, j - 1, k - 1, c);
            }
            _ => return Err(format_err(n, format!("unrecognized line {l:?}"))),
        }
    }
    raw.labels = Some(labels);
    Ok(validate_structure(raw)?)
}

/// Canonical `.lie` text: nonzero constants sorted by `(i, j, k)`, labels only
/// when they differ from the defaults.
pub fn to_lie_string(l: &LieAlgebra) -> String {
    let mut out = String::new();
    out.push_str(LIE_HEADER);
    out.push('\n');
    if let Some(origin) = l.origin() {
        let _ = writeln!(out, "# {origin}");
    }
    let _ = writeln!(out, "dim {}", l.dim());
    if l.labels() != default_labels(l.dim()).as_slice() {
        for (i, name) in l.labels().iter().enumerate() {
            let _ = writeln!(out, "label {} {name}", i + 1);
        }
    }
    for (i, j, k, c) in l.constants() {
        let _ = writeln!(out, "{} {} {} {}", i + 1, j + 1, k + 1, format_rational(&c));
    }
    out
}

pub fn load_lie_file(path: impl AsRef<Path>) -> Result<LieAlgebra, LieFileError> {
    parse_lie(&std::fs::read_to_string(path)?)
}

pub fn save_lie_file(l: &LieAlgebra, path: impl AsRef<Path>) -> Result<(), LieFileError> {
    Ok(std::fs::write(path, to_lie_string(l))?)
}
