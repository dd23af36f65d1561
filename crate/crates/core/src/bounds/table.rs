use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use super::{bound_euclidean, bound_spherical_neg, bound_spherical_pos, published, BoundKind, BoundResult};
use crate::error::{Error, Result};
use crate::etf::{refine_bound, EtfCatalog};
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// Euclidean bounds, one column per L.R.S. constant `k`.
    Table2,
    /// Spherical `a + b >= 0` bounds, one column per `k`.
    Table3,
    /// Euclidean, spherical `a + b >= 0` and `a + b < 0` side by side for
    /// each `k`.
    Table4,
}

impl std::str::FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table2" => Ok(TableKind::Table2),
            "table3" => Ok(TableKind::Table3),
            "table4" => Ok(TableKind::Table4),
            other => Err(Error::InvalidParams(format!("unknown table kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableSpec {
    pub kind: TableKind,
    pub d_range: RangeInclusive<usize>,
    pub k_range: RangeInclusive<u64>,
}

impl TableSpec {
    pub fn new(kind: TableKind, d_range: RangeInclusive<usize>, k_range: RangeInclusive<u64>) -> Result<Self> {
        if *d_range.start() < 2 || d_range.is_empty() {
            return Err(Error::InvalidParams(format!("d range {d_range:?} must be nonempty with d >= 2")));
        }
        if *k_range.start() < 2 || k_range.is_empty() {
            return Err(Error::InvalidParams(format!("k range {k_range:?} must be nonempty with k >= 2")));
        }
        Ok(Self { kind, d_range, k_range })
    }

    /// The ranges of the published tables.
    pub fn standard(kind: TableKind) -> Self {
        match kind {
            TableKind::Table2 | TableKind::Table3 => Self { kind, d_range: 5..=33, k_range: 2..=5 },
            TableKind::Table4 => Self { kind, d_range: 9..=23, k_range: 3..=3 },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Column {
    pub label: String,
    pub kind: BoundKind,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub d: usize,
    pub cells: Vec<BoundResult<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub spec: TableSpec,
    pub columns: Vec<Column>,
    pub rows: Vec<TableRow>,
    pub refined_with_catalog: bool,
}

fn columns(spec: &TableSpec) -> Vec<Column> {
    let mut cols = Vec::new();
    for k in spec.k_range.clone() {
        let gamma = 2 * k - 1;
        match spec.kind {
            TableKind::Table2 => cols.push(Column { label: format!("k={k}"), kind: BoundKind::Euclidean, k }),
            TableKind::Table3 => cols.push(Column { label: format!("k={k}"), kind: BoundKind::SphericalPos, k }),
            TableKind::Table4 => {
                cols.push(Column { label: format!("g_{gamma}"), kind: BoundKind::Euclidean, k });
                cols.push(Column { label: format!("M+_{gamma}"), kind: BoundKind::SphericalPos, k });
                cols.push(Column { label: format!("M-_{gamma}"), kind: BoundKind::SphericalNeg, k });
            }
        }
    }
    cols
}

fn evaluate(kind: BoundKind, d: usize, gamma: &Rational) -> BoundResult<Rational> {
    match kind {
        BoundKind::Euclidean => bound_euclidean(d, gamma),
        BoundKind::SphericalPos => bound_spherical_pos(d, gamma),
        BoundKind::SphericalNeg => bound_spherical_neg(d, gamma),
        BoundKind::LsMaxEuclidean | BoundKind::LsMaxSpherical => unreachable!("tables use pointwise bounds"),
    }
}

/// Evaluate every cell exactly. With a catalog, existence refinements are
/// applied to integral cells.
pub fn make_table(spec: &TableSpec, catalog: Option<&EtfCatalog>) -> Table {
    let columns = columns(spec);
    let rows = spec
        .d_range
        .clone()
        .map(|d| {
            let cells = columns
                .iter()
                .map(|c| {
                    let gamma = Rational::from_i64(2 * c.k as i64 - 1);
                    let b = evaluate(c.kind, d, &gamma);
                    match catalog {
                        Some(cat) => refine_bound(&b, cat),
                        None => b,
                    }
                })
                .collect();
            TableRow { d, cells }
        })
        .collect();
    Table { spec: spec.clone(), columns, rows, refined_with_catalog: catalog.is_some() }
}

/// Published value for a cell: `None` when the published tables do not cover
/// it, `Some(None)` for a printed blank.
pub fn published_value(kind: TableKind, d: usize, col: &Column, col_index: usize) -> Option<Option<u32>> {
    match kind {
        TableKind::Table2 => published::euclidean_cell(d, col.k),
        TableKind::Table3 => published::spherical_pos_cell(d, col.k),
        TableKind::Table4 => {
            if col.k != 3 {
                return None;
            }
            published::comparison_cell(d, col_index % 3).map(Some)
        }
    }
}

/// A cell where the generated table and the published one disagree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellDiff {
    pub d: usize,
    pub column: String,
    pub computed: Option<i64>,
    pub published: Option<u32>,
    pub exact_value: Option<String>,
}

/// Every covered cell whose computed bound differs from the published one.
pub fn published_diff(table: &Table) -> Vec<CellDiff> {
    let mut diffs = Vec::new();
    for row in &table.rows {
        for (i, (col, cell)) in table.columns.iter().zip(&row.cells).enumerate() {
            let Some(published) = published_value(table.spec.kind, row.d, col, i) else {
                continue;
            };
            let computed = cell.bound_i64();
            if computed.map(|v| v as u64) != published.map(u64::from) {
                diffs.push(CellDiff {
                    d: row.d,
                    column: col.label.clone(),
                    computed,
                    published,
                    exact_value: cell.exact_value.as_ref().map(ToString::to_string),
                });
            }
        }
    }
    diffs
}

fn cell_text(b: &BoundResult<Rational>, mark: bool) -> String {
    match &b.cardinality_bound {
        Some(v) if b.refined && mark => format!("{v}*"),
        Some(v) => v.to_string(),
        None => String::new(),
    }
}

fn published_text(v: Option<Option<u32>>) -> String {
    match v {
        Some(Some(x)) => x.to_string(),
        Some(None) => String::new(),
        None => "n/a".into(),
    }
}

impl Table {
    fn grid(&self, with_published: bool, mark_refined: bool) -> (Vec<String>, Vec<Vec<String>>) {
        let mut header = vec!["d".to_string()];
        for c in &self.columns {
            header.push(c.label.clone());
            if with_published {
                header.push(format!("{} (published)", c.label));
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![row.d.to_string()];
                for (i, (c, cell)) in self.columns.iter().zip(&row.cells).enumerate() {
                    out.push(cell_text(cell, mark_refined));
                    if with_published {
                        out.push(published_text(published_value(self.spec.kind, row.d, c, i)));
                    }
                }
                out
            })
            .collect();
        (header, rows)
    }

    /// CSV with blank cells for vacuous bounds.
    pub fn to_csv(&self, with_published: bool) -> String {
        let (header, rows) = self.grid(with_published, false);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header).expect("in-memory write");
        for r in rows {
            w.write_record(&r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    /// Aligned Markdown table; refined cells carry a `*`.
    pub fn to_markdown(&self, with_published: bool) -> String {
        let (header, rows) = self.grid(with_published, true);
        let widths: Vec<usize> = (0..header.len())
            .map(|i| {
                rows.iter()
                    .map(|r| r[i].chars().count())
                    .chain(std::iter::once(header[i].chars().count()))
                    .max()
                    .unwrap_or(1)
                    .max(3)
            })
            .collect();
        let line = |cells: &[String]| {
            let mut s = String::from("|");
            for (c, w) in cells.iter().zip(&widths) {
                let _ = write!(s, " {c:>w$} |");
            }
            s.push('\n');
            s
        };
        let mut out = line(&header);
        out.push('|');
        for w in &widths {
            let _ = write!(out, " {}: |", "-".repeat(w - 1));
        }
        out.push('\n');
        for r in &rows {
            out.push_str(&line(r));
        }
        out
    }

    pub fn cell(&self, d: usize, label: &str) -> Option<&BoundResult<Rational>> {
        let col = self.columns.iter().position(|c| c.label == label)?;
        self.rows.iter().find(|r| r.d == d).map(|r| &r.cells[col])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_cells() {
        let t2 = make_table(&TableSpec::standard(TableKind::Table2), None);
        assert_eq!(t2.cell(18, "k=3").unwrap().bound_i64(), Some(77));
        assert!(!t2.cell(8, "k=2").unwrap().valid);
        let t3 = make_table(&TableSpec::standard(TableKind::Table3), None);
        assert_eq!(t3.cell(17, "k=3").unwrap().bound_i64(), Some(51));
        assert_eq!(t3.cell(28, "k=5").unwrap().bound_i64(), Some(42));
    }

    #[test]
    fn csv_and_markdown_shapes() {
        let spec = TableSpec::new(TableKind::Table2, 5..=7, 2..=3).unwrap();
        let t = make_table(&spec, None);
        assert_eq!(t.to_csv(false), "d,k=2,k=3\n5,17,8\n6,29,10\n7,65,12\n");
        let with = t.to_csv(true);
        assert!(with.starts_with("d,k=2,k=2 (published),k=3,k=3 (published)\n5,17,17,8,8\n"));
        let md = t.to_markdown(false);
        assert_eq!(md.lines().count(), 5);
        assert!(md.lines().all(|l| l.len() == md.lines().next().unwrap().len()));
    }

    #[test]
    fn spec_validation() {
        assert!(TableSpec::new(TableKind::Table2, 1..=5, 2..=3).is_err());
        assert!(TableSpec::new(TableKind::Table3, 5..=6, 1..=3).is_err());
        assert_eq!("table4".parse::<TableKind>().unwrap(), TableKind::Table4);
        assert!("table9".parse::<TableKind>().is_err());
    }
}
