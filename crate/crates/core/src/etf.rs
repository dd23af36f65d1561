//! Equiangular tight frame detection on Seidel matrices, an existence catalog
//! and the bound refinements it enables.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::{bound_euclidean, bound_spherical_neg, bound_spherical_pos, BoundKind, BoundResult};
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::seidel::SeidelMatrix;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EtfTestResult {
    pub is_two_eigenvalue: bool,
    /// `μ` with `Q² = (n−1)I + μQ`, when such a relation holds.
    pub mu: Option<i64>,
    /// Larger and smaller eigenvalue (of the spectrum extremes when `Q` has
    /// more than two eigenvalues).
    pub rho1: f64,
    pub rho2: f64,
    pub mult1: usize,
    pub mult2: usize,
    /// Dimension of the frame: the multiplicity of `rho1`.
    pub inferred_dim: usize,
    /// Distinct eigenvalues found numerically.
    pub spectral_clusters: usize,
}

/// Exact test of `Q² = (n−1)I + μQ` in integer arithmetic. Such a `μ` exists
/// exactly when `Q` has two eigenvalues `ρ₁ > ρ₂`, and then `μ = ρ₁ + ρ₂`,
/// `ρ₁ρ₂ = −(n−1)`. The numeric spectrum is reported alongside.
pub fn etf_signature_test(q: &SeidelMatrix, tol: f64) -> EtfTestResult {
    let n = q.order();
    let spec = q.spectrum(tol);
    let mu = signature_mu(q);
    match mu {
        Some(mu) => {
            let disc = ((mu * mu) as f64 + 4.0 * (n as f64 - 1.0)).sqrt();
            let rho1 = (mu as f64 + disc) / 2.0;
            let rho2 = (mu as f64 - disc) / 2.0;
            // tr Q = 0 fixes the multiplicities.
            let mult1 = (-(n as f64) * rho2 / (rho1 - rho2)).round() as usize;
            EtfTestResult {
                is_two_eigenvalue: true,
                mu: Some(mu),
                rho1,
                rho2,
                mult1,
                mult2: n - mult1,
                inferred_dim: mult1,
                spectral_clusters: spec.distinct(),
            }
        }
        None => {
            let (hi, lo) = (spec.largest(), spec.smallest());
            EtfTestResult {
                is_two_eigenvalue: false,
                mu: None,
                rho1: hi.value,
                rho2: lo.value,
                mult1: hi.multiplicity,
                mult2: lo.multiplicity,
                inferred_dim: hi.multiplicity,
                spectral_clusters: spec.distinct(),
            }
        }
    }
}

fn signature_mu(q: &SeidelMatrix) -> Option<i64> {
    let n = q.order();
    if n < 2 {
        return None;
    }
    let sq = q.square();
    let mu = sq[1] * i64::from(q.get(0, 1));
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { n as i64 - 1 } else { mu * i64::from(q.get(i, j)) };
            if sq[i * n + j] != expect {
                return None;
            }
        }
    }
    Some(mu)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Existence {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::Yes => "yes",
            Existence::No => "no",
            Existence::Unknown => "unknown",
        })
    }
}

impl FromStr for Existence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "yes" => Ok(Existence::Yes),
            "no" => Ok(Existence::No),
            "unknown" => Ok(Existence::Unknown),
            other => Err(Error::InvalidParams(format!("existence must be yes|no|unknown, got {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtfRecord {
    pub n_vectors: usize,
    pub dim: usize,
    pub exists: Existence,
    pub provenance: String,
}

impl EtfRecord {
    pub fn new(n_vectors: usize, dim: usize, exists: Existence, provenance: &str) -> Result<Self> {
        if dim < 1 || n_vectors <= dim {
            return Err(Error::InvalidParams(format!(
                "need n_vectors > dim >= 1, got {n_vectors} vectors in dimension {dim}"
            )));
        }
        if exists != Existence::Unknown && provenance.trim().is_empty() {
            return Err(Error::InvalidParams("yes/no entries need a provenance".into()));
        }
        Ok(Self { n_vectors, dim, exists, provenance: provenance.trim().to_string() })
    }
}

/// Existence of real ETFs indexed by `(n_vectors, dim)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EtfCatalog {
    records: BTreeMap<(usize, usize), EtfRecord>,
}

const BUNDLED: &str = "\
n_vectors,dim,exists,provenance
76,19,no,\"Fickus, Mixon: Tables of the existence of equiangular tight frames (2015)\"
36,15,yes,36 equiangular lines in R^15 at angle 1/5
28,7,yes,28 equiangular lines in R^7 at angle 1/3; two-eigenvalue Seidel matrix built in-repo
16,6,yes,16 equiangular lines in R^6 from the Clebsch graph; two-eigenvalue Seidel matrix built in-repo
6,3,yes,6 diagonals of the icosahedron; order-6 conference matrix built in-repo
";

impl EtfCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// The entries shipped with the crate.
    pub fn bundled() -> Self {
        Self::from_csv_str(BUNDLED).expect("bundled catalog parses")
    }

    /// Parse `n_vectors,dim,exists,provenance` rows. A header row starting
    /// with `n_vectors`, blank lines and `#` comments are skipped.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut cat = Self::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let perr = |msg: String| Error::Parse { line, msg };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut rdr = csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .trim(csv::Trim::All)
                .from_reader(trimmed.as_bytes());
            let rec = match rdr.records().next() {
                Some(Ok(rec)) => rec,
                Some(Err(e)) => return Err(perr(e.to_string())),
                None => continue,
            };
            if rec.get(0) == Some("n_vectors") {
                continue;
            }
            if rec.len() < 3 || rec.len() > 4 {
                return Err(perr(format!("expected 3 or 4 fields, found {}", rec.len())));
            }
            let int = |i: usize, name: &str| {
                rec[i].parse::<usize>().map_err(|_| perr(format!("invalid {name} {:?}", &rec[i])))
            };
            let n_vectors = int(0, "n_vectors")?;
            let dim = int(1, "dim")?;
            let exists: Existence = rec[2].parse().map_err(|e: Error| perr(e.to_string()))?;
            let record = EtfRecord::new(n_vectors, dim, exists, rec.get(3).unwrap_or(""))
                .map_err(|e| perr(e.to_string()))?;
            cat.insert(record);
        }
        Ok(cat)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_csv_str(&std::fs::read_to_string(path)?)
    }

    pub fn insert(&mut self, record: EtfRecord) {
        self.records.insert((record.n_vectors, record.dim), record);
    }

    /// The stored record, or an `unknown` one when absent.
    pub fn query(&self, n_vectors: usize, dim: usize) -> EtfRecord {
        self.records.get(&(n_vectors, dim)).cloned().unwrap_or(EtfRecord {
            n_vectors,
            dim,
            exists: Existence::Unknown,
            provenance: String::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &EtfRecord> {
        self.records.values()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n_vectors", "dim", "exists", "provenance"]).expect("in-memory write");
        for r in self.records.values() {
            w.write_record([r.n_vectors.to_string(), r.dim.to_string(), r.exists.to_string(), r.provenance.clone()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }
}

/// `(n_vectors, dim)` of the ETF an extremal set with `n` points would yield.
fn frame_for(kind: BoundKind, n: usize, d: usize) -> Option<(usize, usize)> {
    match kind {
        BoundKind::Euclidean => Some((n.checked_sub(1)?, d + 1)),
        BoundKind::SphericalPos => Some((n, d)),
        BoundKind::SphericalNeg => Some((n, d + 1)),
        BoundKind::LsMaxEuclidean | BoundKind::LsMaxSpherical => None,
    }
}

/// Lower a bound by one when its exact value is an integer `n` and the
/// catalog rules out the ETF an `n`-point set would produce. Integrality is
/// tested on the exact rational value only.
pub fn refine_bound(b: &BoundResult<Rational>, catalog: &EtfCatalog) -> BoundResult<Rational> {
    let mut out = b.clone();
    if !b.valid || b.refined {
        return out;
    }
    if !b.is_integral() {
        out.note = "bound not an integer; no refinement".into();
        return out;
    }
    let Some(n) = b.bound_i64().and_then(|v| usize::try_from(v).ok()) else {
        return out;
    };
    let Some((nv, dim)) = frame_for(b.kind, n, b.d) else {
        return out;
    };
    let rec = catalog.query(nv, dim);
    match rec.exists {
        Existence::No => {
            let lowered = BigInt::from(n) - 1;
            out.note = format!("no ETF with {nv} vectors in R^{dim} ({}): bound lowered to {lowered}", rec.provenance);
            out.cardinality_bound = Some(lowered);
            out.refined = true;
        }
        Existence::Yes => {
            out.note = format!("ETF with {nv} vectors in R^{dim} exists; bound unchanged");
        }
        Existence::Unknown => {
            out.note = format!("no catalog evidence for {nv} vectors in R^{dim}");
        }
    }
    out
}

pub fn refine_euclidean(d: usize, gamma: &Rational, catalog: &EtfCatalog) -> BoundResult<Rational> {
    refine_bound(&bound_euclidean(d, gamma), catalog)
}

/// Sign of `a + b` for a spherical set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Pos,
    Neg,
}

pub fn refine_spherical(d: usize, gamma: &Rational, catalog: &EtfCatalog, branch: Branch) -> BoundResult<Rational> {
    let b = match branch {
        Branch::Pos => bound_spherical_pos(d, gamma),
        Branch::Neg => bound_spherical_neg(d, gamma),
    };
    refine_bound(&b, catalog)
}
