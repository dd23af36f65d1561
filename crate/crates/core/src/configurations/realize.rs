use super::{Flavor, PointConfiguration};
use crate::error::{Error, Result};
use crate::linalg::eigen::jacobi;
use crate::linalg::{psd_rank_from_eigs, SymMatrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct RealizationResult {
    pub points: PointConfiguration<f64>,
    /// Largest absolute entry of `XXᵀ − G`.
    pub residual: f64,
}

/// Factor a PSD matrix as `G = AᵀA` with `A = Λ^{1/2}Qᵀ` restricted to the
/// `d` largest eigenpairs; the columns of `A` are the returned points.
pub fn realize_gram<T: Scalar>(g: &SymMatrix<T>, d: usize, tol: f64) -> Result<RealizationResult> {
    if d == 0 {
        return Err(Error::InvalidParams("target dimension must be positive".into()));
    }
    let n = g.order();
    let gf = g.to_f64();
    let eig = jacobi(n, gf.as_slice().to_vec(), true);
    let report = psd_rank_from_eigs(&eig.values, tol);
    if !report.is_psd {
        return Err(Error::IndefiniteGram { min_eigenvalue: report.min_eigenvalue });
    }
    if report.numeric_rank > d {
        return Err(Error::RankExceedsTarget { rank: report.numeric_rank, target: d });
    }

    // Largest eigenvalues sit at the end of the ascending list.
    let top: Vec<usize> = (0..n).rev().take(d).collect();
    let points: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut p: Vec<f64> = top
                .iter()
                .map(|&k| eig.values[k].max(0.0).sqrt() * eig.vector(k)[i])
                .collect();
            p.resize(d, 0.0);
            p
        })
        .collect();

    let mut residual = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            let ip: f64 = points[i].iter().zip(&points[j]).map(|(a, b)| a * b).sum();
            residual = residual.max((ip - gf.get(i, j)).abs());
        }
    }
    let unit_diag = (0..n).all(|i| g.get(i, i).approx_eq(&T::one(), tol));
    let flavor = if unit_diag { Flavor::Spherical } else { Flavor::Euclidean };
    let points = if flavor == Flavor::Spherical {
        // Exact unit norms up to rounding.
        points
            .into_iter()
            .map(|p| {
                let norm = p.iter().map(|v| v * v).sum::<f64>().sqrt();
                p.into_iter().map(|v| v / norm).collect()
            })
            .collect()
    } else {
        points
    };
    Ok(RealizationResult {
        points: PointConfiguration::with_dim(points, flavor, d)?,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn identity_gives_orthonormal_frame() {
        let res = realize_gram(&SymMatrix::<Rational>::identity(3), 3, 1e-9).unwrap();
        assert!(res.residual < 1e-14);
        assert_eq!(res.points.flavor(), Flavor::Spherical);
        assert_eq!(res.points.dim(), 3);
    }

    #[test]
    fn rejects_indefinite_and_high_rank() {
        let m = SymMatrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(realize_gram(&m, 2, 1e-9), Err(Error::IndefiniteGram { .. })));
        assert_eq!(
            realize_gram(&SymMatrix::<f64>::identity(3), 2, 1e-9).unwrap_err(),
            Error::RankExceedsTarget { rank: 3, target: 2 }
        );
    }

    #[test]
    fn rank_deficient_gram() {
        // Two antipodal unit vectors span a line.
        let m = SymMatrix::from_rows(vec![vec![1.0, -1.0], vec![-1.0, 1.0]]).unwrap();
        let res = realize_gram(&m, 1, 1e-9).unwrap();
        assert!(res.residual < 1e-12);
        let p = res.points.points();
        assert!((p[0][0] + p[1][0]).abs() < 1e-12);
    }
}
