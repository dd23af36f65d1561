//! Canonical configurations used throughout the test suite.

use super::{dot, Flavor, PointConfiguration};
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::scalar::{from_usize, Scalar};

fn unit_vector<T: Scalar>(len: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); len];
    v[i] = T::one();
    v
}

/// Vertices `e_0, …, e_d` of a regular simplex in `R^{d+1}`, affine rank `d`.
pub fn regular_simplex<T: Scalar>(d: usize) -> Result<PointConfiguration<T>> {
    if d < 1 {
        return Err(Error::InvalidParams("regular simplex needs d >= 1".into()));
    }
    let pts = (0..=d).map(|i| unit_vector(d + 1, i)).collect();
    PointConfiguration::with_dim(pts, Flavor::Euclidean, d)
}

/// Edge midpoints `(e_i + e_j)/2` of the regular simplex, `C(d+1, 2)` points.
///
/// Coordinates stay in the ambient `R^{d+1}` (so they remain rational); the
/// declared dimension is the affine rank `d`.
pub fn simplex_midpoints<T: Scalar>(d: usize) -> Result<PointConfiguration<T>> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("simplex_midpoints needs d >= 2, got {d}")));
    }
    let half = T::from_ratio(1, 2);
    let mut pts = Vec::with_capacity((d + 1) * d / 2);
    for i in 0..=d {
        for j in (i + 1)..=d {
            let mut v = vec![T::zero(); d + 1];
            v[i] = half.clone();
            v[j] = half.clone();
            pts.push(v);
        }
    }
    PointConfiguration::with_dim(pts, Flavor::Euclidean, d)
}

/// The `2d` points `±e_1, …, ±e_d` on the unit sphere, ordered
/// `e_1, −e_1, e_2, −e_2, …`.
pub fn cross_polytope<T: Scalar>(d: usize) -> Result<PointConfiguration<T>> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("cross_polytope needs d >= 2, got {d}")));
    }
    let mut pts = Vec::with_capacity(2 * d);
    for i in 0..d {
        let e: Vec<T> = unit_vector(d, i);
        let neg = e.iter().map(|v| -v.clone()).collect();
        pts.push(e);
        pts.push(neg);
    }
    PointConfiguration::new(pts, Flavor::Spherical)
}

/// Gram matrix of the simplex midpoints after centering at their centroid and
/// scaling to the unit sphere; a spherical two-distance set in `S^{d-1}`.
///
/// The coordinates carry an irrational common scale, but the Gram matrix is
/// rational: inner products are `(d−3)/(2(d−1))` for pairs sharing a simplex
/// vertex and `−2/(d−1)` for disjoint pairs.
pub fn normalized_midpoints_gram<T: Scalar>(d: usize) -> Result<SymMatrix<T>> {
    let cfg = simplex_midpoints::<T>(d)?;
    let centroid = T::one() / from_usize::<T>(d + 1);
    let centered: Vec<Vec<T>> = cfg
        .points()
        .iter()
        .map(|p| p.iter().map(|v| v.clone() - centroid.clone()).collect())
        .collect();
    let norm_sq = dot(&centered[0], &centered[0]);
    Ok(SymMatrix::from_fn(centered.len(), |i, j| {
        if i == j {
            T::one()
        } else {
            dot(&centered[i], &centered[j]) / norm_sq.clone()
        }
    }))
}

/// Gram matrix of the 28 unit vectors `(3,3,−1,…,−1)/√24` (all placements of
/// the two 3s) in the hyperplane `Σx = 0` of `R^8`: 28 equiangular lines in
/// `R^7` with angle 1/3, read as a spherical two-distance set with
/// `a = −1/3`, `b = 1/3`.
pub fn equiangular_28_gram<T: Scalar>() -> SymMatrix<T> {
    let mut vecs: Vec<[i64; 8]> = Vec::with_capacity(28);
    for i in 0..8 {
        for j in (i + 1)..8 {
            let mut v = [-1; 8];
            v[i] = 3;
            v[j] = 3;
            vecs.push(v);
        }
    }
    let ip = |a: &[i64; 8], b: &[i64; 8]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    SymMatrix::from_fn(28, |i, j| T::from_ratio(ip(&vecs[i], &vecs[j]), 24))
}
