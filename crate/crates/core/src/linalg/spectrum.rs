use serde::Serialize;

use super::eigen::jacobi;
use super::matrix::SymMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped into clusters, ascending by value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub clusters: Vec<Cluster>,
    pub tol: f64,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.clusters.iter().map(|c| c.multiplicity).sum()
    }

    pub fn smallest(&self) -> Cluster {
        self.clusters[0]
    }

    pub fn largest(&self) -> Cluster {
        *self.clusters.last().expect("spectrum is nonempty")
    }

    pub fn distinct(&self) -> usize {
        self.clusters.len()
    }

    /// Multiplicity of the cluster within `tol` of `value` (0 if none).
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.clusters
            .iter()
            .filter(|c| (c.value - value).abs() <= tol)
            .map(|c| c.multiplicity)
            .sum()
    }

    /// Total multiplicity strictly below `value - tol`.
    pub fn count_below(&self, value: f64, tol: f64) -> usize {
        self.clusters
            .iter()
            .filter(|c| c.value < value - tol)
            .map(|c| c.multiplicity)
            .sum()
    }

    /// All eigenvalues with repetition, ascending.
    pub fn expand(&self) -> Vec<f64> {
        self.clusters
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.value, c.multiplicity))
            .collect()
    }
}

/// All eigenvalues of the float view of `m`, ascending.
pub fn eig_sym<T: Scalar>(m: &SymMatrix<T>) -> Vec<f64> {
    let f = m.to_f64();
    jacobi(f.order(), f.as_slice().to_vec(), false).values
}

/// Greedy left-to-right clustering: a value joins the current cluster when it
/// lies within `tol` of the cluster's running mean.
pub fn group_spectrum(eigs: &[f64], tol: f64) -> Result<Spectrum> {
    let (first, rest) = eigs.split_first().ok_or(Error::EmptySpectrum)?;
    let mut clusters = Vec::new();
    let mut sum = *first;
    let mut count = 1usize;
    for &v in rest {
        let mean = sum / count as f64;
        if (v - mean).abs() <= tol {
            sum += v;
            count += 1;
        } else {
            clusters.push(Cluster { value: mean, multiplicity: count });
            sum = v;
            count = 1;
        }
    }
    clusters.push(Cluster { value: sum / count as f64, multiplicity: count });
    Ok(Spectrum { clusters, tol })
}

/// `max(1, spectral radius)`, the scale used by every relative tolerance.
pub fn tolerance_scale(eigs: &[f64]) -> f64 {
    eigs.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()))
}

/// Clustered spectrum of `m` using a tolerance relative to the spectral radius.
pub fn spectrum<T: Scalar>(m: &SymMatrix<T>, rel_tol: f64) -> Spectrum {
    let eigs = eig_sym(m);
    let tol = rel_tol * tolerance_scale(&eigs);
    group_spectrum(&eigs, tol).expect("matrix order is positive")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PsdReport {
    pub is_psd: bool,
    pub numeric_rank: usize,
    pub min_eigenvalue: f64,
}

/// PSD and numeric-rank test with thresholds `tol·max(1, spectral radius)`.
pub fn psd_rank<T: Scalar>(m: &SymMatrix<T>, tol: f64) -> PsdReport {
    psd_rank_from_eigs(&eig_sym(m), tol)
}

pub(crate) fn psd_rank_from_eigs(eigs: &[f64], tol: f64) -> PsdReport {
    let threshold = tol * tolerance_scale(eigs);
    let min_eigenvalue = eigs.iter().copied().fold(f64::INFINITY, f64::min);
    PsdReport {
        is_psd: min_eigenvalue >= -threshold,
        numeric_rank: eigs.iter().filter(|v| v.abs() > threshold).count(),
        min_eigenvalue,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn identity_and_all_ones() {
        let e = eig_sym(&SymMatrix::<Rational>::identity(3));
        assert!(e.iter().all(|v| (v - 1.0).abs() < 1e-14));
        let e = eig_sym(&SymMatrix::<f64>::ones(4));
        let expect = [0.0, 0.0, 0.0, 4.0];
        for (a, b) in e.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn grouping_examples() {
        let s = group_spectrum(&[-1.0, 3.0, 3.0000001], 1e-5).unwrap();
        assert_eq!(s.distinct(), 2);
        assert_eq!(s.clusters[0].multiplicity, 1);
        assert_eq!(s.clusters[1].multiplicity, 2);
        assert!((s.clusters[1].value - 3.00000005).abs() < 1e-12);

        let s = group_spectrum(&[0.0, 0.0, 0.0, 4.0], 1e-9).unwrap();
        assert_eq!(
            s.clusters,
            vec![
                Cluster { value: 0.0, multiplicity: 3 },
                Cluster { value: 4.0, multiplicity: 1 }
            ]
        );
        assert_eq!(group_spectrum(&[], 1e-9), Err(Error::EmptySpectrum));
    }

    #[test]
    fn psd_examples() {
        let r = psd_rank(&SymMatrix::<f64>::identity(4), 1e-9);
        assert!(r.is_psd);
        assert_eq!(r.numeric_rank, 4);

        let m = SymMatrix::from_rows(vec![
            vec![2.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
            vec![0.0, 0.0, -1.0],
        ])
        .unwrap();
        let r = psd_rank(&m, 1e-9);
        assert!(!r.is_psd);
        assert_eq!(r.numeric_rank, 2);
        assert!((r.min_eigenvalue + 1.0).abs() < 1e-14);
    }
}
