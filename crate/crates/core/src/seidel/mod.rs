//! Seidel matrices and the transformations that produce them from Euclidean
//! distance data and spherical Gram data.

mod construct;
pub mod fixtures;
mod structure;

use crate::error::{Error, Result};
use crate::linalg::charpoly::integer_spectrum;
use crate::linalg::{eig_sym, io, spectrum, Spectrum, SymMatrix};
use crate::scalar::{Rational, Scalar};

pub use construct::{
    build_d, cayley_menger, d_spectrum, seidel_euclidean, seidel_spherical, spectrum_d_closed_form,
    DSpectrum, EuclideanSeidel, EuclideanSeidelParams, SphericalSeidelParams,
};
pub(crate) use construct::cayley_menger_any;
pub use structure::{check_structure_euclidean, check_structure_spherical, StructureReport};

/// Largest order for which exact integer spectra are computed via the
/// characteristic polynomial.
pub const EXACT_SPECTRUM_MAX_ORDER: usize = 24;

/// Symmetric matrix with zero diagonal and `±1` off the diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeidelMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SeidelMatrix {
    pub fn from_entries(order: usize, entries: Vec<i8>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != order * order {
            return Err(Error::NotSquare { row: 0, len: entries.len(), order: order * order });
        }
        for i in 0..order {
            for j in 0..order {
                let v = entries[i * order + j];
                let ok = if i == j { v == 0 } else { v == 1 || v == -1 };
                if !ok {
                    return Err(Error::EntryNotUnit { row: i, col: j, value: v.to_string() });
                }
                if v != entries[j * order + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { order, entries })
    }

    /// Build from a function on `i < j`, mirrored; `true` means `+1`.
    pub fn from_sign_fn(order: usize, mut plus: impl FnMut(usize, usize) -> bool) -> Self {
        let mut entries = vec![0i8; order * order];
        for i in 0..order {
            for j in (i + 1)..order {
                let v = if plus(i, j) { 1 } else { -1 };
                entries[i * order + j] = v;
                entries[j * order + i] = v;
            }
        }
        Self { order, entries }
    }

    /// Convert a matrix whose entries are (within `tol` for float scalars)
    /// `0` on the diagonal and `±1` elsewhere.
    pub fn from_matrix<T: Scalar>(m: &SymMatrix<T>, tol: f64) -> Result<Self> {
        let n = m.order();
        let one = T::one();
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = m.get(i, j);
                let e = if i == j {
                    v.approx_eq(&T::zero(), tol).then_some(0)
                } else if v.approx_eq(&one, tol) {
                    Some(1)
                } else if v.approx_eq(&-one.clone(), tol) {
                    Some(-1)
                } else {
                    None
                };
                entries[i * n + j] = e.ok_or_else(|| Error::EntryNotUnit {
                    row: i,
                    col: j,
                    value: v.to_string(),
                })?;
            }
        }
        Ok(Self { order: n, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn to_matrix<T: Scalar>(&self) -> SymMatrix<T> {
        SymMatrix::from_fn(self.order, |i, j| T::from_i64(i64::from(self.get(i, j))))
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.entries.iter().map(|&v| i64::from(v)).collect()
    }

    /// Exact integer product `S²`, row-major.
    pub fn square(&self) -> Vec<i64> {
        let n = self.order;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in i..n {
                let v: i64 = (0..n)
                    .map(|k| i64::from(self.get(i, k)) * i64::from(self.get(k, j)))
                    .sum();
                out[i * n + j] = v;
                out[j * n + i] = v;
            }
        }
        out
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| i64::from(self.get(i, i))).sum()
    }

    pub fn trace_of_square(&self) -> i64 {
        self.entries.iter().map(|&v| i64::from(v) * i64::from(v)).sum()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        eig_sym(&self.to_matrix::<f64>())
    }

    pub fn spectrum(&self, rel_tol: f64) -> Spectrum {
        spectrum(&self.to_matrix::<f64>(), rel_tol)
    }

    /// Exact spectrum when every eigenvalue is an integer and the order is at
    /// most [`EXACT_SPECTRUM_MAX_ORDER`].
    pub fn integer_spectrum(&self) -> Option<Vec<(i64, usize)>> {
        if self.order > EXACT_SPECTRUM_MAX_ORDER {
            return None;
        }
        integer_spectrum(self.order, &self.to_i64())
    }

    pub fn to_text(&self) -> String {
        io::format_matrix(&self.to_matrix::<Rational>())
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let m: SymMatrix<Rational> = io::parse_matrix(text)?;
        Self::from_matrix(&m, 0.0)
    }
}
