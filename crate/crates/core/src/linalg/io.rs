//! Matrix text format: first line is the order, then `order` rows of
//! whitespace-separated numbers (`p/q` or integers). Blank lines and lines
//! starting with `#` are ignored.

use super::matrix::SymMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn parse_matrix<T: Scalar>(text: &str) -> Result<SymMatrix<T>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing order line".into(),
    })?;
    let order: usize = header.parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("invalid order {header:?}"),
    })?;
    let mut rows = Vec::with_capacity(order);
    for (line_no, line) in lines {
        if rows.len() == order {
            return Err(Error::Parse { line: line_no, msg: "extra row".into() });
        }
        let row = line
            .split_whitespace()
            .map(|tok| T::parse_str(tok).map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid number {tok:?}"),
            }))
            .collect::<Result<Vec<T>>>()?;
        if row.len() != order {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {order} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {order} rows, found {}", rows.len()),
        });
    }
    SymMatrix::from_rows(rows)
}

pub fn format_matrix<T: Scalar>(m: &SymMatrix<T>) -> String {
    let mut out = format!("{}\n", m.order());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Float export, one CSV row per matrix row.
pub fn to_csv<T: Scalar>(m: &SymMatrix<T>) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{:?}", v.to_f64())).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
