//! Point configurations, two-distance certification, fixtures and Gram
//! realization.

mod certify;
pub mod fixtures;
pub mod io;
mod realize;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::scalar::Scalar;

pub use certify::{
    certify_distance_matrix, certify_gram, certify_two_distance, lisonek_realizable,
    TwoDistanceCertificate,
};
pub(crate) use certify::validate_distance_matrix;
pub use fixtures::{cross_polytope, normalized_midpoints_gram, simplex_midpoints};
pub use realize::{realize_gram, RealizationResult};

/// Unit-norm tolerance applied to float coordinates of spherical points.
const FLOAT_UNIT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Euclidean,
    Spherical,
}

/// `n` labeled points. Coordinates may live in a larger ambient space than
/// the declared dimension (affine rank for Euclidean sets, linear rank for
/// spherical ones).
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfiguration<T> {
    points: Vec<Vec<T>>,
    flavor: Flavor,
    dim: usize,
}

impl<T: Scalar> PointConfiguration<T> {
    /// Declared dimension equals the coordinate length.
    pub fn new(points: Vec<Vec<T>>, flavor: Flavor) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        Self::with_dim(points, flavor, dim)
    }

    pub fn with_dim(points: Vec<Vec<T>>, flavor: Flavor, dim: usize) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints { needed: 2, found: points.len() });
        }
        let ambient = points[0].len();
        for (index, p) in points.iter().enumerate() {
            if p.len() != ambient {
                return Err(Error::DimensionMismatch { index, found: p.len(), expected: ambient });
            }
            if p.iter().any(|v| !v.is_finite_value()) {
                return Err(Error::InvalidParams(format!("point {index} has a non-finite coordinate")));
            }
        }
        if dim == 0 || dim > ambient {
            return Err(Error::InvalidParams(format!(
                "declared dimension {dim} must lie in 1..={ambient}"
            )));
        }
        if flavor == Flavor::Spherical {
            for (index, p) in points.iter().enumerate() {
                if !sq_norm(p).approx_eq(&T::one(), FLOAT_UNIT_TOL) {
                    return Err(Error::NotOnUnitSphere { index });
                }
            }
        }
        Ok(Self { points, flavor, dim })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Declared dimension `d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].len()
    }
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn sq_norm<T: Scalar>(a: &[T]) -> T {
    dot(a, a)
}

/// Squared Euclidean distances, exact for exact scalars.
pub fn distance_sq_matrix<T: Scalar>(cfg: &PointConfiguration<T>) -> SymMatrix<T> {
    let pts = cfg.points();
    SymMatrix::from_fn(pts.len(), |i, j| {
        if i == j {
            T::zero()
        } else {
            pts[i]
                .iter()
                .zip(&pts[j])
                .fold(T::zero(), |acc, (x, y)| {
                    let diff = x.clone() - y.clone();
                    acc + diff.clone() * diff
                })
        }
    })
}

/// Gram matrix of inner products; every point must be a unit vector.
pub fn gram<T: Scalar>(cfg: &PointConfiguration<T>) -> Result<SymMatrix<T>> {
    let pts = cfg.points();
    for (index, p) in pts.iter().enumerate() {
        if !sq_norm(p).approx_eq(&T::one(), FLOAT_UNIT_TOL) {
            return Err(Error::NotOnUnitSphere { index });
        }
    }
    Ok(SymMatrix::from_fn(pts.len(), |i, j| {
        if i == j {
            T::one()
        } else {
            dot(&pts[i], &pts[j])
        }
    }))
}
