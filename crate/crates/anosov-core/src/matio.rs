//! Plaintext matrix format shared by all tools.
//!
//! UTF-8 text; one matrix per block; a block is d rows of d decimal numbers
//! separated by whitespace; blocks are separated by one or more blank lines;
//! `#` begins a comment line (ignored entirely, and does not break a block).

use nalgebra::DMatrix;
use thiserror::Error;

use crate::symspace::{GroupElement, SymspaceError};

#[derive(Debug, Error)]
pub enum MatioError {
    #[error("line {line}: cannot parse '{token}' as a number")]
    BadNumber { line: usize, token: String },
    #[error("block starting at line {line}: row lengths differ ({expected} vs {found})")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("block starting at line {line}: matrix is not square ({rows} rows x {cols} cols)")]
    NotSquare {
        line: usize,
        rows: usize,
        cols: usize,
    },
    #[error("no matrices found in input")]
    Empty,
    #[error("matrix {index}: {source}")]
    InvalidElement {
        index: usize,
        #[source]
        source: SymspaceError,
    },
}

/// Parse every matrix block in the text.
pub fn parse_matrices(text: &str) -> Result<Vec<DMatrix<f64>>, MatioError> {
    let mut blocks: Vec<(usize, Vec<Vec<f64>>)> = Vec::new();
    let mut current: Vec<Vec<f64>> = Vec::new();
    let mut current_start = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !current.is_empty() {
                blocks.push((current_start, std::mem::take(&mut current)));
            }
            continue;
        }
        if current.is_empty() {
            current_start = line_no;
        }
        let mut row = Vec::new();
        for token in line.split_whitespace() {
            let value: f64 = token.parse().map_err(|_| MatioError::BadNumber {
                line: line_no,
                token: token.to_string(),
            })?;
            row.push(value);
        }
        if let Some(first) = current.first() {
            if row.len() != first.len() {
                return Err(MatioError::RaggedRows {
                    line: current_start,
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
        current.push(row);
    }
    if !current.is_empty() {
        blocks.push((current_start, current));
    }
    if blocks.is_empty() {
        return Err(MatioError::Empty);
    }

    let mut out = Vec::with_capacity(blocks.len());
    for (start, rows) in blocks {
        let nrows = rows.len();
        let ncols = rows[0].len();
        if nrows != ncols {
            return Err(MatioError::NotSquare {
                line: start,
                rows: nrows,
                cols: ncols,
            });
        }
        let flat: Vec<f64> = rows.into_iter().flatten().collect();
        out.push(DMatrix::from_row_slice(nrows, ncols, &flat));
    }
    Ok(out)
}

/// Parse and validate every block as a determinant-1 group element.
pub fn parse_group_elements(text: &str) -> Result<Vec<GroupElement>, MatioError> {
    parse_matrices(text)?
        .into_iter()
        .enumerate()
        .map(|(index, m)| {
            GroupElement::new(m).map_err(|source| MatioError::InvalidElement { index, source })
        })
        .collect()
}

/// Render matrices in the block format with 17 significant digits (lossless
/// for f64).
pub fn format_matrices(mats: &[DMatrix<f64>]) -> String {
    let mut out = String::new();
    for (i, m) in mats.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for r in 0..m.nrows() {
            let row: Vec<String> = (0..m.ncols()).map(|c| format!("{:.16e}", m[(r, c)])).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_blocks_with_comments_and_blank_lines() {
        let text = "# two matrices\n1 0\n0 1\n\n# second\n2 0\n0 0.5\n";
        let ms = parse_matrices(text).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0], DMatrix::identity(2, 2));
        assert_eq!(ms[1][(1, 1)], 0.5);
    }

    #[test]
    fn roundtrips_through_format() {
        let text = "1.25 0.0\n0.0 0.8\n";
        let ms = parse_matrices(text).unwrap();
        let again = parse_matrices(&format_matrices(&ms)).unwrap();
        assert_eq!(ms, again);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(parse_matrices(""), Err(MatioError::Empty)));
        assert!(matches!(
            parse_matrices("1 2\n3\n"),
            Err(MatioError::RaggedRows { .. })
        ));
        assert!(matches!(
            parse_matrices("1 2 3\n4 5 6\n"),
            Err(MatioError::NotSquare { .. })
        ));
        assert!(matches!(
            parse_matrices("1 x\n0 1\n"),
            Err(MatioError::BadNumber { line: 1, .. })
        ));
    }

    #[test]
    fn group_elements_are_validated() {
        assert!(parse_group_elements("1 0\n0 1\n").is_ok());
        assert!(matches!(
            parse_group_elements("2 0\n0 2\n"),
            Err(MatioError::InvalidElement { index: 0, .. })
        ));
    }
}
