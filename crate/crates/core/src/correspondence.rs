//! Seidel matrices and spherical two-distance sets with `a + b < 0` viewed as
//! equiangular line systems, and the reverse map onto a one-parameter family
//! of spherical sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{psd_rank, SymMatrix};
use crate::scalar::Scalar;
use crate::seidel::{seidel_spherical, SeidelMatrix};

/// Unit vectors spanning lines with common angle `α`: Gram matrix with unit
/// diagonal and off-diagonal entries `±α`.
#[derive(Debug, Clone, PartialEq)]
pub struct EquiangularSystem<T: Scalar> {
    pub gram: SymMatrix<T>,
    pub alpha: T,
    /// Rank of the Gram matrix, i.e. the dimension the lines span.
    pub dim: usize,
}

impl<T: Scalar> EquiangularSystem<T> {
    pub fn len(&self) -> usize {
        self.gram.order()
    }

    pub fn is_empty(&self) -> bool {
        self.gram.order() == 0
    }

    /// The Seidel matrix `(G − I)/α`.
    pub fn seidel(&self, tol: f64) -> Result<SeidelMatrix> {
        let s = self.gram.shift(&-T::one()).scale(&(T::one() / self.alpha.clone()));
        SeidelMatrix::from_matrix(&s, tol)
    }
}

/// Smallest eigenvalue and its multiplicity; exact (integer) for exact
/// scalars.
fn smallest_eigenvalue<T: Scalar>(s: &SeidelMatrix, tol: f64) -> Result<(T, usize)> {
    if T::EXACT {
        if let Some(spec) = s.integer_spectrum() {
            let (v, m) = spec[0];
            return Ok((T::from_i64(v), m));
        }
        let c = s.spectrum(tol).smallest();
        let rounded = c.value.round();
        if (c.value - rounded).abs() > 1e-6 * c.value.abs().max(1.0) {
            return Err(Error::NotExact(format!("smallest eigenvalue {} is not an integer", c.value)));
        }
        return Ok((T::from_i64(rounded as i64), c.multiplicity));
    }
    let c = s.spectrum(tol).smallest();
    Ok((T::from_rational(&num_rational::BigRational::from_float(c.value).ok_or_else(|| {
        Error::NotExact(c.value.to_string())
    })?), c.multiplicity))
}

/// Lines from a Seidel matrix with smallest eigenvalue `λ₀ < −1`:
/// `G = I − S/λ₀`, `α = −1/λ₀`, spanning dimension `n − mult(λ₀)`. Exact
/// scalars need an integral `λ₀`.
pub fn seidel_to_lines<T: Scalar>(s: &SeidelMatrix, tol: f64) -> Result<EquiangularSystem<T>> {
    let (lambda0, mult) = smallest_eigenvalue::<T>(s, tol)?;
    let lam = lambda0.to_f64();
    if lam >= -1.0 - tol * lam.abs().max(1.0) {
        return Err(Error::NoEquiangularRealization { lambda0: lam });
    }
    let gram = s
        .to_matrix::<T>()
        .scale(&(-T::one() / lambda0.clone()))
        .shift(&T::one());
    Ok(EquiangularSystem { gram, alpha: -T::one() / lambda0, dim: s.order() - mult })
}

/// Spherical set with inner products `a < b`, `a + b < 0`, as equiangular
/// lines with angle `(b−a)/(2−a−b)` one dimension up:
/// `G′ = I − S/((a+b−2)/(b−a))`.
pub fn spherical_to_equiangular<T: Scalar>(g: &SymMatrix<T>, a: &T, b: &T, tol: f64) -> Result<EquiangularSystem<T>> {
    let sum = a.clone() + b.clone();
    if !sum.is_negative() {
        return Err(Error::WrongSignBranch { sum: sum.to_string() });
    }
    let s = seidel_spherical(g, a, b, tol)?;
    let alpha = (b.clone() - a.clone()) / (T::from_i64(2) - sum);
    let gram = s.to_matrix::<T>().scale(&alpha).shift(&T::one());
    let rep = psd_rank(&gram, tol.max(crate::DEFAULT_TOL));
    if !rep.is_psd {
        return Err(Error::IndefiniteGram { min_eigenvalue: rep.min_eigenvalue });
    }
    Ok(EquiangularSystem { gram, alpha, dim: rep.numeric_rank })
}

/// Member `a` of the spherical family attached to angle `α`, with
/// `b = ((1−α)a + 2α)/(1+α)`. Flags report which constraints hold.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: std::fmt::Display"))]
pub struct FamilyParam<T> {
    #[serde(serialize_with = "display")]
    pub alpha: T,
    #[serde(serialize_with = "display")]
    pub a: T,
    #[serde(serialize_with = "display")]
    pub b: T,
    pub a_lt_b: bool,
    pub sum_negative: bool,
    pub b_lt_one: bool,
    pub a_ge_minus_one: bool,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl<T: Scalar> FamilyParam<T> {
    /// All constraints of the `a + b < 0` branch hold; equivalent to
    /// `−1 <= a < −α`.
    pub fn admissible(&self) -> bool {
        self.a_lt_b && self.sum_negative && self.b_lt_one && self.a_ge_minus_one
    }
}

pub fn family_param<T: Scalar>(alpha: &T, a: &T) -> FamilyParam<T> {
    let one = T::one();
    let b = ((one.clone() - alpha.clone()) * a.clone() + T::from_i64(2) * alpha.clone()) / (one.clone() + alpha.clone());
    FamilyParam {
        alpha: alpha.clone(),
        a: a.clone(),
        a_lt_b: *a < b,
        sum_negative: (a.clone() + b.clone()).is_negative(),
        b_lt_one: b < one,
        a_ge_minus_one: *a >= -one,
        b,
    }
}

/// Gram matrix `G = ((b−a)S − (a+b−2)I + (a+b)J)/2` of the spherical set with
/// inner products `a` and `b = family_param(α, a).b`.
pub fn equiangular_to_spherical<T: Scalar>(sys: &EquiangularSystem<T>, a: &T, tol: f64) -> Result<SymMatrix<T>> {
    let alpha = &sys.alpha;
    if !(alpha.is_positive() && *alpha < T::one()) {
        return Err(Error::InvalidParams(format!("angle {alpha} outside (0, 1)")));
    }
    let fp = family_param(alpha, a);
    if !fp.admissible() {
        return Err(Error::InadmissibleA {
            a: a.to_string(),
            reason: format!("need -1 <= a < -alpha = {}; b = {}, a + b = {}", -alpha.clone(), fp.b, a.clone() + fp.b.clone()),
        });
    }
    let s = sys.seidel(tol)?;
    let n = s.order();
    let two = T::from_i64(2);
    let b = fp.b;
    let sum = a.clone() + b.clone();
    Ok(s
        .to_matrix::<T>()
        .scale(&(b - a.clone()))
        .shift(&-(sum.clone() - two.clone()))
        .add(&SymMatrix::ones(n).scale(&sum))?
        .scale(&(T::one() / two)))
}
