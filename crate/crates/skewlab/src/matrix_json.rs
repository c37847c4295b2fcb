//! Square complex matrices as `{"dim": d, "re": [[..]], "im": [[..]]}`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use skewlab_core::CMatrix;

use crate::{AppError, AppResult};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed matrix JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{part} has {rows} rows, expected {dim}")]
    RowCount {
        part: &'static str,
        rows: usize,
        dim: usize,
    },
    #[error("{part} row {row} has {len} entries, expected {dim}")]
    Ragged {
        part: &'static str,
        row: usize,
        len: usize,
        dim: usize,
    },
    #[error(transparent)]
    Matrix(#[from] skewlab_core::Error),
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

fn flatten(part: &'static str, rows: &[Vec<f64>], dim: usize) -> Result<Vec<f64>, FormatError> {
    if rows.len() != dim {
        return Err(FormatError::RowCount {
            part,
            rows: rows.len(),
            dim,
        });
    }
    let mut out = Vec::with_capacity(dim * dim);
    for (row, r) in rows.iter().enumerate() {
        if r.len() != dim {
            return Err(FormatError::Ragged {
                part,
                row,
                len: r.len(),
                dim,
            });
        }
        out.extend_from_slice(r);
    }
    Ok(out)
}

pub fn parse_matrix(text: &str) -> Result<CMatrix, FormatError> {
    let file: MatrixFile = serde_json::from_str(text)?;
    let re = flatten("re", &file.re, file.dim)?;
    let im = flatten("im", &file.im, file.dim)?;
    Ok(CMatrix::from_parts(file.dim, &re, &im)?)
}

pub fn to_json(m: &CMatrix) -> String {
    let d = m.dim();
    let part = |f: fn(&skewlab_core::Complex64) -> f64| {
        (0..d)
            .map(|r| (0..d).map(|c| f(&m[(r, c)])).collect())
            .collect::<Vec<Vec<f64>>>()
    };
    let file = MatrixFile {
        dim: d,
        re: part(|z| z.re),
        im: part(|z| z.im),
    };
    serde_json::to_string_pretty(&file).expect("plain numeric struct")
}

pub fn read_matrix(path: &Path) -> AppResult<CMatrix> {
    let text = fs::read_to_string(path).map_err(|source| AppError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_matrix(&text).map_err(|source| AppError::Format {
        path: path.to_owned(),
        source,
    })
}

pub fn write_matrix(path: &Path, m: &CMatrix) -> AppResult<()> {
    fs::write(path, to_json(m) + "\n").map_err(|source| AppError::Io {
        path: path.to_owned(),
        source,
    })
}
