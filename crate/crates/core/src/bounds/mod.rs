//! Relative cardinality bounds, odd-integer tests, equality-case spectra and
//! table generation.

mod equality;
pub mod published;
mod table;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{from_usize, Rational, Scalar};

pub use equality::{equality_spectrum, ExactSpectrum, SqrtRational};
pub use table::{make_table, published_diff, published_value, CellDiff, Column, Table, TableKind, TableRow, TableSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Euclidean,
    SphericalPos,
    SphericalNeg,
    LsMaxEuclidean,
    LsMaxSpherical,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Euclidean => "euclidean",
            BoundKind::SphericalPos => "spherical_pos",
            BoundKind::SphericalNeg => "spherical_neg",
            BoundKind::LsMaxEuclidean => "ls_max_euclidean",
            BoundKind::LsMaxSpherical => "ls_max_spherical",
        }
    }
}

/// Where a value of γ came from.
#[derive(Debug, Clone, PartialEq)]
pub enum GammaSource<T> {
    /// Squared distance ratio, either normalization.
    Euclidean { delta_sq: T },
    /// Inner products `a < b` of a spherical set.
    Spherical { a: T, b: T },
    /// Odd value `2k − 1` for an L.R.S. constant `k`.
    Lrs { k: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaParam<T> {
    pub gamma: T,
    pub source: GammaSource<T>,
}

/// `γ = (1+δ²)/|1−δ²|` or `γ = (2−a−b)/(b−a)`; always greater than 1.
pub fn gamma_of<T: Scalar>(source: GammaSource<T>) -> Result<GammaParam<T>> {
    let one = T::one();
    let gamma = match &source {
        GammaSource::Euclidean { delta_sq } => {
            if *delta_sq <= T::zero() || *delta_sq == one {
                return Err(Error::InvalidDeltaSq(delta_sq.to_string()));
            }
            (one.clone() + delta_sq.clone()) / (one - delta_sq.clone()).abs()
        }
        GammaSource::Spherical { a, b } => {
            if a >= b || *b >= one || *a < -one.clone() {
                return Err(Error::InvalidParams(format!("need -1 <= a < b < 1, got a = {a}, b = {b}")));
            }
            (T::from_i64(2) - a.clone() - b.clone()) / (b.clone() - a.clone())
        }
        GammaSource::Lrs { k } => {
            if *k < 2 {
                return Err(Error::InvalidParams(format!("L.R.S. constant must be >= 2, got {k}")));
            }
            T::from_i64(2 * *k as i64 - 1)
        }
    };
    Ok(GammaParam { gamma, source })
}

/// A bound evaluation. When `valid` is false the formula's denominator is not
/// positive and no value is reported.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult<T> {
    pub kind: BoundKind,
    pub d: usize,
    pub gamma: Option<T>,
    /// Set for the maximized bounds, which are parametrized by `m` instead of γ.
    pub m: Option<u64>,
    pub exact_value: Option<T>,
    /// `floor(exact_value)`, minus one when a refinement fired.
    pub cardinality_bound: Option<BigInt>,
    pub valid: bool,
    pub refined: bool,
    pub note: String,
}

impl<T: Scalar> BoundResult<T> {
    fn new(kind: BoundKind, d: usize, gamma: Option<T>, m: Option<u64>, value: Option<T>, note: String) -> Self {
        let cardinality_bound = value.as_ref().map(Scalar::floor_int);
        Self {
            kind,
            d,
            gamma,
            m,
            valid: value.is_some(),
            exact_value: value,
            cardinality_bound,
            refined: false,
            note,
        }
    }

    /// Cardinality as `i64` when it fits.
    pub fn bound_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.cardinality_bound.as_ref().and_then(ToPrimitive::to_i64)
    }

    /// True when the exact value is an integer (the only case a refinement
    /// may fire).
    pub fn is_integral(&self) -> bool {
        self.exact_value.as_ref().is_some_and(|v| T::EXACT && v.is_integer())
    }
}

fn bigint_json(v: &BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::from(v.to_string()),
    }
}

impl<T: Scalar> Serialize for BoundResult<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundResult", 10)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("gamma", &self.gamma.as_ref().map(ToString::to_string))?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("exact_value", &self.exact_value.as_ref().map(ToString::to_string))?;
        st.serialize_field("approx_value", &self.exact_value.as_ref().map(Scalar::to_f64))?;
        st.serialize_field("cardinality_bound", &self.cardinality_bound.as_ref().map(bigint_json))?;
        st.serialize_field("valid", &self.valid)?;
        st.serialize_field("refined", &self.refined)?;
        st.serialize_field("note", &self.note)?;
        st.end()
    }
}

/// `D(γ²−1)/(γ²−D) + shift` when `γ² > D`.
fn relative<T: Scalar>(kind: BoundKind, d: usize, big_d: usize, gamma: &T, shift: i64) -> BoundResult<T> {
    let g2 = gamma.clone() * gamma.clone();
    let dd = from_usize::<T>(big_d);
    if g2 <= dd {
        let note = format!("bound vacuous: gamma^2 = {g2} <= {big_d}");
        return BoundResult::new(kind, d, Some(gamma.clone()), None, None, note);
    }
    let value = dd.clone() * (g2.clone() - T::one()) / (g2 - dd) + T::from_i64(shift);
    BoundResult::new(kind, d, Some(gamma.clone()), None, Some(value), String::new())
}

/// Euclidean two-distance sets in `R^d`: `(d+1)(γ²−1)/(γ²−(d+1)) + 1`.
pub fn bound_euclidean<T: Scalar>(d: usize, gamma: &T) -> BoundResult<T> {
    relative(BoundKind::Euclidean, d, d + 1, gamma, 1)
}

/// Spherical sets in `S^{d−1}` with `a + b >= 0`: `d(γ²−1)/(γ²−d)`.
pub fn bound_spherical_pos<T: Scalar>(d: usize, gamma: &T) -> BoundResult<T> {
    relative(BoundKind::SphericalPos, d, d, gamma, 0)
}

/// Spherical sets in `S^{d−1}` with `a + b < 0`: `(d+1)(γ²−1)/(γ²−(d+1))`.
pub fn bound_spherical_neg<T: Scalar>(d: usize, gamma: &T) -> BoundResult<T> {
    relative(BoundKind::SphericalNeg, d, d + 1, gamma, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Euclidean,
    Spherical,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrsCheck {
    /// `n` exceeds `2d + 4` (Euclidean) or `2d + 2` (spherical).
    pub applies: bool,
    /// γ is an odd integer.
    pub odd_ok: bool,
    /// L.R.S. constant `(γ + 1)/2` when γ is odd.
    pub k: Option<u64>,
}

impl LrsCheck {
    /// A large set whose γ is not an odd integer cannot exist.
    pub fn ruled_out(&self) -> bool {
        self.applies && !self.odd_ok
    }
}

pub fn lrs_check(gamma: &Rational, n: usize, d: usize, kind: SetKind) -> LrsCheck {
    use num_traits::ToPrimitive;
    let threshold = match kind {
        SetKind::Euclidean => 2 * d + 4,
        SetKind::Spherical => 2 * d + 2,
    };
    let k = if gamma.is_integer() && num_integer::Integer::is_odd(gamma.numer()) && gamma.is_positive() {
        (gamma.numer() + BigInt::from(1)).to_u64().map(|v| v / 2)
    } else {
        None
    };
    LrsCheck { applies: n > threshold, odd_ok: k.is_some(), k }
}

/// Maximum of the relative bound over all admissible odd γ >= 2m+1:
/// `(d+1)·4m(m+1)/(4m²+4m−d) + 1` (Euclidean) or `4dm(m+1)/((2m+1)²−d)`
/// (spherical). Both equal the pointwise bound at `γ = 2m+1`. Requires
/// `(2m+1)² > d > 3`.
pub fn ls_max_bound(d: usize, m: u64, kind: SetKind) -> Result<BoundResult<Rational>> {
    let odd = 2 * m as u128 + 1;
    if m == 0 || d <= 3 || odd * odd <= d as u128 {
        return Err(Error::InvalidParams(format!("need (2m+1)^2 > d > 3, got d = {d}, m = {m}")));
    }
    let one = Rational::from_i64(1);
    let mm = Rational::from_i64(m as i64);
    let dd = from_usize::<Rational>(d);
    let four_m = Rational::from_i64(4) * mm.clone() * (mm + one.clone());
    let (kind_tag, denom) = match kind {
        SetKind::Euclidean => (BoundKind::LsMaxEuclidean, four_m.clone() - dd.clone()),
        SetKind::Spherical => (BoundKind::LsMaxSpherical, four_m.clone() + one.clone() - dd.clone()),
    };
    if !denom.is_positive() {
        let note = format!("bound vacuous: denominator {denom}");
        return Ok(BoundResult::new(kind_tag, d, None, Some(m), None, note));
    }
    let value = match kind {
        SetKind::Euclidean => (dd + one.clone()) * four_m / denom + one,
        SetKind::Spherical => dd * four_m / denom,
    };
    Ok(BoundResult::new(kind_tag, d, None, Some(m), Some(value), String::new()))
}
