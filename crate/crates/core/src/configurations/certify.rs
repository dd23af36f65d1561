use std::cmp::Ordering;

use super::{distance_sq_matrix, gram, Flavor, PointConfiguration};
use crate::error::{Error, Result};
use crate::linalg::{psd_rank, SymMatrix};
use crate::scalar::Scalar;
use crate::seidel::cayley_menger_any;

/// Proof that a point set realizes exactly two off-diagonal values.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoDistanceCertificate<T> {
    pub flavor: Flavor,
    pub n: usize,
    /// Squared distances (Euclidean) or inner products `a < b` (spherical),
    /// ascending.
    pub values: [T; 2],
    labels: Vec<u8>,
    /// Euclidean only: points at the smaller distance from the base point,
    /// which is the last point.
    pub h: Option<usize>,
    /// Euclidean only: the `h` near neighbors of the base point, then the far
    /// ones, then the base point itself.
    pub permutation: Option<Vec<usize>>,
}

impl<T: Scalar> TwoDistanceCertificate<T> {
    /// 0 when pair `(i, j)` attains `values[0]`, 1 for `values[1]`.
    pub fn label(&self, i: usize, j: usize) -> u8 {
        self.labels[i * self.n + j]
    }

    /// Ratio `values[1] / values[0]`; for Euclidean sets this is `δ²`.
    pub fn ratio(&self) -> T {
        self.values[1].clone() / self.values[0].clone()
    }

    /// Number of unordered pairs attaining each value.
    pub fn pair_counts(&self) -> [usize; 2] {
        let mut counts = [0, 0];
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                counts[self.label(i, j) as usize] += 1;
            }
        }
        counts
    }
}

/// Cluster the off-diagonal entries of `m`. Exact scalars split on equality;
/// floats cluster greedily within `tol·max(1, max |entry|)`.
fn value_clusters<T: Scalar>(m: &SymMatrix<T>, tol: f64) -> Vec<T> {
    let mut vals: Vec<T> = m.upper_pairs().map(|(_, _, v)| v.clone()).collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    let scale = vals.iter().fold(1.0_f64, |acc, v| acc.max(v.to_f64().abs()));
    let abs_tol = tol * scale;
    let mut reps: Vec<(T, usize)> = Vec::new();
    for v in vals {
        match reps.last_mut() {
            Some((rep, count)) if rep.approx_eq(&v, abs_tol) => {
                if !T::EXACT {
                    // running mean
                    let c = T::from_i64(*count as i64);
                    *rep = (rep.clone() * c.clone() + v) / (c + T::one());
                }
                *count += 1;
            }
            _ => reps.push((v, 1)),
        }
    }
    reps.into_iter().map(|(v, _)| v).collect()
}

fn classify<T: Scalar>(m: &SymMatrix<T>, tol: f64) -> Result<([T; 2], Vec<u8>)> {
    let reps = value_clusters(m, tol);
    match reps.len() {
        0 | 1 => return Err(Error::Equidistant),
        2 => {}
        _ => {
            return Err(Error::NotTwoDistance {
                values: reps.iter().map(|v| v.to_string()).collect(),
            })
        }
    }
    let n = m.order();
    let mut labels = vec![0u8; n * n];
    for (i, j, v) in m.upper_pairs() {
        let d0 = (v.clone() - reps[0].clone()).abs();
        let d1 = (v.clone() - reps[1].clone()).abs();
        let l = u8::from(d1 < d0);
        labels[i * n + j] = l;
        labels[j * n + i] = l;
    }
    let [a, b]: [T; 2] = reps.try_into().expect("two clusters");
    Ok(([a, b], labels))
}

/// Certify a squared-distance matrix. The base point is the last point.
pub fn certify_distance_matrix<T: Scalar>(c_sq: &SymMatrix<T>, tol: f64) -> Result<TwoDistanceCertificate<T>> {
    validate_distance_matrix(c_sq)?;
    let (values, labels) = classify(c_sq, tol)?;
    if values[0].approx_eq(&T::zero(), tol) {
        return Err(Error::InvalidParams("coincident points".into()));
    }
    let n = c_sq.order();
    let base = n - 1;
    let (near, far): (Vec<usize>, Vec<usize>) = (0..base).partition(|&j| labels[j * n + base] == 0);
    let h = near.len();
    let mut permutation = near;
    permutation.extend(far);
    permutation.push(base);
    Ok(TwoDistanceCertificate {
        flavor: Flavor::Euclidean,
        n,
        values,
        labels,
        h: Some(h),
        permutation: Some(permutation),
    })
}

/// Certify a spherical Gram matrix: unit diagonal, two inner products
/// `-1 <= a < b < 1`.
pub fn certify_gram<T: Scalar>(g: &SymMatrix<T>, tol: f64) -> Result<TwoDistanceCertificate<T>> {
    for i in 0..g.order() {
        if !g.get(i, i).approx_eq(&T::one(), tol) {
            return Err(Error::NotOnUnitSphere { index: i });
        }
    }
    let (values, labels) = classify(g, tol)?;
    let lo = -T::one();
    let lo_ok = values[0] >= lo || values[0].approx_eq(&lo, tol);
    if !lo_ok || values[1] >= T::one() {
        return Err(Error::InvalidParams(format!(
            "inner products {} and {} outside [-1, 1)",
            values[0], values[1]
        )));
    }
    Ok(TwoDistanceCertificate {
        flavor: Flavor::Spherical,
        n: g.order(),
        values,
        labels,
        h: None,
        permutation: None,
    })
}

pub fn certify_two_distance<T: Scalar>(cfg: &PointConfiguration<T>, tol: f64) -> Result<TwoDistanceCertificate<T>> {
    match cfg.flavor() {
        Flavor::Euclidean => certify_distance_matrix(&distance_sq_matrix(cfg), tol),
        Flavor::Spherical => certify_gram(&gram(cfg)?, tol),
    }
}

pub(crate) fn validate_distance_matrix<T: Scalar>(c_sq: &SymMatrix<T>) -> Result<()> {
    for i in 0..c_sq.order() {
        if !c_sq.get(i, i).is_zero() {
            return Err(Error::NonzeroDiagonal { index: i });
        }
    }
    for (i, j, v) in c_sq.upper_pairs() {
        if v.is_negative() {
            return Err(Error::NegativeDistance { row: i, col: j });
        }
    }
    Ok(())
}

/// Euclidean realizability of squared distances `c_sq` in dimension `d`:
/// the Cayley–Menger matrix based at the last point must be PSD of rank
/// at most `d`.
pub fn lisonek_realizable<T: Scalar>(c_sq: &SymMatrix<T>, d: usize, tol: f64) -> Result<bool> {
    validate_distance_matrix(c_sq)?;
    if c_sq.order() < 2 {
        return Ok(true);
    }
    let m = cayley_menger_any(c_sq);
    let rep = psd_rank(&m, tol);
    Ok(rep.is_psd && rep.numeric_rank <= d)
}
