//! Point-set files.
//!
//! JSON: `{"flavor": "euclidean"|"spherical", "dim": d, "points": [[x, …], …]}`
//! with coordinates written as `"p/q"` strings (plain JSON numbers are also
//! accepted on input). CSV: one float point per row, Euclidean flavor.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Flavor, PointConfiguration};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Serialize, Deserialize)]
struct PointFile {
    flavor: Flavor,
    #[serde(default)]
    dim: Option<usize>,
    points: Vec<Vec<Value>>,
}

fn json_err(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, msg: msg.into() }
}

fn coordinate<T: Scalar>(v: &Value) -> Result<T> {
    match v {
        Value::String(s) => T::parse_str(s.trim()),
        Value::Number(n) => T::parse_str(&n.to_string()),
        other => Err(json_err(format!("coordinate must be a string or number, got {other}"))),
    }
}

pub fn read_points_json<T: Scalar>(text: &str) -> Result<PointConfiguration<T>> {
    let file: PointFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let points = file
        .points
        .iter()
        .map(|row| row.iter().map(coordinate).collect::<Result<Vec<T>>>())
        .collect::<Result<Vec<_>>>()?;
    match file.dim {
        Some(dim) => PointConfiguration::with_dim(points, file.flavor, dim),
        None => PointConfiguration::new(points, file.flavor),
    }
}

pub fn write_points_json<T: Scalar>(cfg: &PointConfiguration<T>) -> String {
    let file = PointFile {
        flavor: cfg.flavor(),
        dim: Some(cfg.dim()),
        points: cfg
            .points()
            .iter()
            .map(|p| p.iter().map(|v| Value::String(v.to_string())).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("point file serializes")
}

/// Plain float point cloud, one point per row, no header.
pub fn read_points_csv(text: &str) -> Result<PointConfiguration<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
        let row = record
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| Error::Parse { line: i + 1, msg: format!("invalid number {f:?}") })
            })
            .collect::<Result<Vec<_>>>()?;
        points.push(row);
    }
    PointConfiguration::new(points, Flavor::Euclidean)
}
