use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::SetKind;
use crate::error::{Error, Result};
use crate::scalar::{from_usize, Rational, Scalar};

/// `sign · √radicand` with a nonnegative rational radicand.
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtRational {
    pub negative: bool,
    pub radicand: Rational,
}

impl SqrtRational {
    pub fn to_f64(&self) -> f64 {
        let v = self.radicand.to_f64().sqrt();
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// The value itself when the radicand is a rational square.
    pub fn as_rational(&self) -> Option<Rational> {
        self.radicand
            .sqrt_exact()
            .map(|v| if self.negative { -v } else { v })
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}sqrt({})", if self.negative { "-" } else { "" }, self.radicand),
        }
    }
}

impl Serialize for SqrtRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Spectrum of a Seidel matrix with two eigenvalues, held symbolically.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactSpectrum {
    pub order: usize,
    /// `(value, multiplicity)`, ascending.
    pub clusters: Vec<(SqrtRational, usize)>,
}

impl ExactSpectrum {
    pub fn values_f64(&self) -> Vec<(f64, usize)> {
        self.clusters.iter().map(|(v, m)| (v.to_f64(), *m)).collect()
    }

    /// `Σ λ·mult = 0` and `Σ λ²·mult = m(m−1)`, checked exactly. The first
    /// identity for `−√A` (mult `p`) and `√B` (mult `q`) reads `A·p² = B·q²`.
    pub fn satisfies_trace_identities(&self) -> bool {
        let mut neg = Rational::zero();
        let mut pos = Rational::zero();
        let mut sq = Rational::zero();
        for (v, m) in &self.clusters {
            let mm = from_usize::<Rational>(*m);
            let weighted = v.radicand.clone() * mm.clone() * mm.clone();
            if v.negative {
                neg += weighted;
            } else {
                pos += weighted;
            }
            sq += v.radicand.clone() * mm;
        }
        let order = from_usize::<Rational>(self.order);
        // Only valid as written for at most one cluster on each side of zero.
        let sides_ok = self.clusters.iter().filter(|(v, _)| v.negative).count() <= 1
            && self.clusters.iter().filter(|(v, _)| !v.negative).count() <= 1;
        sides_ok && neg == pos && sq == order.clone() * (order - Rational::one())
    }
}

/// Spectrum forced on a set meeting the relative bound with equality:
/// Euclidean sets give order `n − 1` with
/// `{−√((n−2)(d+1)/(n−d−2))^(n−d−2), √((n−2)(n−d−2)/(d+1))^(d+1)}`;
/// spherical sets give order `n` with
/// `{−√(d(n−1)/(n−d))^(n−d), √((n−1)(n−d)/d)^d}`.
pub fn equality_spectrum(n: usize, d: usize, kind: SetKind) -> Result<ExactSpectrum> {
    let r = |v: usize| from_usize::<Rational>(v);
    let (order, neg, neg_mult, pos, pos_mult) = match kind {
        SetKind::Euclidean => {
            if d == 0 || n <= d + 2 {
                return Err(Error::InvalidParams(format!("need n > d + 2, got n = {n}, d = {d}")));
            }
            let k = n - d - 2;
            (n - 1, r(n - 2) * r(d + 1) / r(k), k, r(n - 2) * r(k) / r(d + 1), d + 1)
        }
        SetKind::Spherical => {
            if d == 0 || n <= d {
                return Err(Error::InvalidParams(format!("need n > d, got n = {n}, d = {d}")));
            }
            let k = n - d;
            (n, r(d) * r(n - 1) / r(k), k, r(n - 1) * r(k) / r(d), d)
        }
    };
    debug_assert!(!neg.is_negative() && !pos.is_negative());
    Ok(ExactSpectrum {
        order,
        clusters: vec![
            (SqrtRational { negative: true, radicand: neg }, neg_mult),
            (SqrtRational { negative: false, radicand: pos }, pos_mult),
        ],
    })
}
