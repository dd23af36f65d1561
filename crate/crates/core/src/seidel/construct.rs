use super::SeidelMatrix;
use crate::configurations::{certify_distance_matrix, TwoDistanceCertificate};
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::scalar::{from_usize, Scalar};

/// Cayley–Menger matrix based at the last point, no order check.
pub(crate) fn cayley_menger_any<T: Scalar>(c_sq: &SymMatrix<T>) -> SymMatrix<T> {
    let base = c_sq.order() - 1;
    SymMatrix::from_fn(base.max(1), |i, j| {
        if base == 0 {
            return T::zero();
        }
        c_sq.get(i, base).clone() + c_sq.get(j, base).clone() - c_sq.get(i, j).clone()
    })
}

/// `M_{n−1} = (c²_{i,n} + c²_{j,n} − c²_{i,j})` for the squared-distance
/// matrix `c_sq`, with the last point as base. Diagonal entry `i` is
/// `2c²_{i,n}`.
pub fn cayley_menger<T: Scalar>(c_sq: &SymMatrix<T>) -> Result<SymMatrix<T>> {
    if c_sq.order() < 3 {
        return Err(Error::OrderTooSmall { order: c_sq.order(), needed: 3 });
    }
    crate::configurations::validate_distance_matrix(c_sq)?;
    Ok(cayley_menger_any(c_sq))
}

/// Parameters of a Euclidean two-distance set with distances `1` and `δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanSeidelParams<T> {
    /// Number of points.
    pub n: usize,
    /// Ambient dimension.
    pub d: usize,
    pub delta_sq: T,
    /// Points at distance 1 from the base point.
    pub h: usize,
}

impl<T: Scalar> EuclideanSeidelParams<T> {
    pub fn new(n: usize, d: usize, delta_sq: T, h: usize) -> Result<Self> {
        let p = Self { n, d, delta_sq, h };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewPoints { needed: 2, found: self.n });
        }
        if self.h > self.n - 1 {
            return Err(Error::HOutOfRange { h: self.h, max: self.n - 1 });
        }
        if self.delta_sq <= T::zero() || self.delta_sq.approx_eq(&T::one(), 0.0) {
            return Err(Error::InvalidDeltaSq(self.delta_sq.to_string()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphericalSeidelParams<T> {
    pub n: usize,
    pub d: usize,
    pub a: T,
    pub b: T,
}

impl<T: Scalar> SphericalSeidelParams<T> {
    pub fn new(n: usize, d: usize, a: T, b: T) -> Result<Self> {
        if !(-T::one() <= a && a < b && b < T::one()) {
            return Err(Error::InvalidParams(format!("need -1 <= a < b < 1, got a = {a}, b = {b}")));
        }
        Ok(Self { n, d, a, b })
    }
}

/// The auxiliary block matrix of order `n − 1`:
///
/// ```text
/// [ (δ² − 3)·J_h          −(1 + δ²)·J_{h,n−h−1} ]
/// [ −(1 + δ²)·J_{n−h−1,h}  (1 − 3δ²)·J_{n−h−1}   ]
/// ```
pub fn build_d<T: Scalar>(params: &EuclideanSeidelParams<T>) -> Result<SymMatrix<T>> {
    params.validate()?;
    let ds = &params.delta_sq;
    let one = T::one();
    let three = T::from_i64(3);
    let top = ds.clone() - three.clone();
    let cross = -(one.clone() + ds.clone());
    let bottom = one - three * ds.clone();
    let h = params.h;
    Ok(SymMatrix::from_fn(params.n - 1, |i, j| match (i < h, j < h) {
        (true, true) => top.clone(),
        (false, false) => bottom.clone(),
        _ => cross.clone(),
    }))
}

/// Closed-form nonzero eigenvalues `(a1, a2)` of [`build_d`], `a2 < 0 < a1`;
/// the remaining `n − 3` eigenvalues are zero. Requires both blocks nonempty
/// (`1 <= h <= n − 2`).
pub fn spectrum_d_closed_form<T: Scalar>(params: &EuclideanSeidelParams<T>) -> Result<(f64, f64)> {
    params.validate()?;
    let (n, h) = (params.n, params.h);
    if h < 1 || h + 2 > n {
        return Err(Error::HOutOfRange { h, max: n.saturating_sub(2) });
    }
    let ds = params.delta_sq.clone();
    let one = T::one();
    let two = T::from_i64(2);
    let nm1 = from_usize::<T>(n - 1);
    let hh = from_usize::<T>(h);
    let half_coef = (one.clone() - T::from_i64(3) * ds.clone()) / two.clone();
    // p ± √(radicand), with p² − radicand = −4(1−δ²)²h(n−h−1) < 0.
    let p = -two.clone() * (one.clone() - ds.clone()) * hh.clone() + half_coef.clone() * nm1.clone();
    let radicand = two.clone() * nm1.clone() * hh.clone() * (one.clone() - ds.clone()) * (one.clone() + ds.clone())
        + nm1.clone() * nm1 * half_coef.clone() * half_coef;
    let product = -T::from_i64(4)
        * (one.clone() - ds.clone())
        * (one - ds)
        * hh
        * from_usize::<T>(n - h - 1);
    assert!(radicand > T::zero(), "radicand is positive for valid parameters");
    let (p, q, product) = (p.to_f64(), radicand.to_f64().sqrt(), product.to_f64());
    // Take the root without cancellation first, the other from the product.
    let (a1, a2) = if p >= 0.0 {
        let a1 = p + q;
        (a1, product / a1)
    } else {
        let a2 = p - q;
        (product / a2, a2)
    };
    Ok((a1, a2))
}

/// Spectrum of the auxiliary matrix for any `h`, including the single-block
/// cases `h = 0` and `h = n − 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DSpectrum {
    /// Nonzero eigenvalues, ascending.
    pub nonzero: Vec<f64>,
    pub zero_multiplicity: usize,
}

pub fn d_spectrum<T: Scalar>(params: &EuclideanSeidelParams<T>) -> Result<DSpectrum> {
    params.validate()?;
    let (n, h) = (params.n, params.h);
    let order = n - 1;
    if h == 0 || h == n - 1 {
        let ds = params.delta_sq.to_f64();
        let coef = if h == 0 { 1.0 - 3.0 * ds } else { ds - 3.0 };
        let lead = coef * order as f64;
        return Ok(if lead == 0.0 {
            DSpectrum { nonzero: vec![], zero_multiplicity: order }
        } else {
            DSpectrum { nonzero: vec![lead], zero_multiplicity: order - 1 }
        });
    }
    let (a1, a2) = spectrum_d_closed_form(params)?;
    Ok(DSpectrum { nonzero: vec![a2, a1], zero_multiplicity: n - 3 })
}

/// Output of [`seidel_euclidean`].
#[derive(Debug, Clone)]
pub struct EuclideanSeidel<T: Scalar> {
    pub seidel: SeidelMatrix,
    pub params: EuclideanSeidelParams<T>,
    /// Point order used: `h` near neighbors of the base point, the far
    /// points, then the base point.
    pub permutation: Vec<usize>,
    /// Cayley–Menger matrix of the permuted, rescaled set.
    pub cayley_menger: SymMatrix<T>,
    pub d_matrix: SymMatrix<T>,
    pub certificate: TwoDistanceCertificate<T>,
}

/// Seidel matrix `S = (2M + D − (1 + δ²)I)/(δ² − 1)` of a Euclidean
/// two-distance set given by squared distances `c_sq`, in dimension `d`.
///
/// The set is rescaled so its distances are `1 < δ`. A supplied `delta_sq`
/// may use either convention (`δ²` or `1/δ²`) and must match the data.
/// Every entry of `S` is checked to be exactly `0`/`±1` for exact scalars
/// (within `tol` for floats).
pub fn seidel_euclidean<T: Scalar>(
    c_sq: &SymMatrix<T>,
    d: usize,
    delta_sq: Option<&T>,
    tol: f64,
) -> Result<EuclideanSeidel<T>> {
    let cert = certify_distance_matrix(c_sq, tol)?;
    let unit = cert.values[0].clone();
    let ratio = cert.ratio();
    if let Some(given) = delta_sq {
        if *given <= T::zero() {
            return Err(Error::InvalidDeltaSq(given.to_string()));
        }
        let canon = if *given < T::one() { T::one() / given.clone() } else { given.clone() };
        let rel = tol * ratio.to_f64().abs().max(1.0);
        if !canon.approx_eq(&ratio, rel) {
            return Err(Error::InvalidDeltaSq(format!(
                "{given} does not match the data (squared ratio {ratio})"
            )));
        }
    }
    let perm = cert.permutation.clone().expect("euclidean certificate has a permutation");
    let h = cert.h.expect("euclidean certificate has h");
    let n = c_sq.order();
    let params = EuclideanSeidelParams::new(n, d, ratio.clone(), h)?;

    let scaled = c_sq.permuted(&perm)?.scale(&(T::one() / unit));
    let m = cayley_menger_any(&scaled);
    let dm = build_d(&params)?;
    let one = T::one();
    let numer = m
        .scale(&T::from_i64(2))
        .add(&dm)?
        .shift(&-(one.clone() + ratio.clone()));
    let s = numer.scale(&(one / (ratio - T::one())));
    let seidel = SeidelMatrix::from_matrix(&s, tol.max(if T::EXACT { 0.0 } else { 1e-9 }))?;
    Ok(EuclideanSeidel {
        seidel,
        params,
        permutation: perm,
        cayley_menger: m,
        d_matrix: dm,
        certificate: cert,
    })
}

/// Seidel matrix `S = ((G − I) − ((a+b)/2)·J + ((a+b)/2)·I) / ((b − a)/2)` of
/// a spherical two-distance set with Gram matrix `g` and inner products
/// `a < b`.
pub fn seidel_spherical<T: Scalar>(g: &SymMatrix<T>, a: &T, b: &T, tol: f64) -> Result<SeidelMatrix> {
    if a >= b {
        return Err(Error::InvalidParams(format!("need a < b, got a = {a}, b = {b}")));
    }
    let n = g.order();
    for i in 0..n {
        if !g.get(i, i).approx_eq(&T::one(), tol) {
            return Err(Error::NotOnUnitSphere { index: i });
        }
    }
    for (i, j, v) in g.upper_pairs() {
        if !v.approx_eq(a, tol) && !v.approx_eq(b, tol) {
            return Err(Error::NotSphericalGram { row: i, col: j, value: v.to_string() });
        }
    }
    let two = T::from_i64(2);
    let mid = (a.clone() + b.clone()) / two.clone();
    let half_gap = (b.clone() - a.clone()) / two;
    let s = g
        .shift(&-T::one())
        .sub(&SymMatrix::ones(n).scale(&mid))?
        .shift(&mid)
        .scale(&(T::one() / half_gap));
    SeidelMatrix::from_matrix(&s, tol.max(if T::EXACT { 0.0 } else { 1e-9 })).map_err(|e| match e {
        Error::EntryNotUnit { row, col, value } => Error::NotSphericalGram { row, col, value },
        other => other,
    })
}
