//! Spectral machinery for two-distance sets.
//!
//! Point configurations (Euclidean or spherical) are turned into Seidel
//! matrices, whose eigenvalue structure yields cardinality bounds. The crate
//! covers:
//!
//! * [`linalg`]: dense symmetric matrices, a Jacobi eigensolver, multiplicity
//!   clustering, PSD/rank tests and Weyl-inequality checks.
//! * [`configurations`]: point sets, two-distance certification, the standard
//!   fixtures and Gram realization.
//! * [`seidel`]: Cayley–Menger assembly, the auxiliary block matrix, Euclidean
//!   and spherical Seidel constructions and the eigenvalue-structure checks.
//! * [`bounds`]: relative bounds, odd-integer tests, equality spectra and
//!   table generation.
//! * [`correspondence`]: Seidel matrices and spherical sets with `a + b < 0`
//!   as equiangular line systems, and back.
//! * [`etf`]: equiangular tight frame detection, the existence catalog and
//!   bound refinements.
//!
//! Constructions are generic over [`Scalar`]; use the exact aliases
//! ([`ExactMatrix`], [`ExactConfiguration`]) when entries must be
//! bit-exact, and the float aliases for quick numerics.

pub mod bounds;
pub mod configurations;
pub mod correspondence;
pub mod error;
pub mod etf;
pub mod linalg;
pub mod scalar;
pub mod seidel;

pub use error::{Error, Result};
pub use scalar::{parse_scalar, Rational, Scalar};

pub use linalg::{SymMatrix, Spectrum};
pub use configurations::{Flavor, PointConfiguration};
pub use seidel::SeidelMatrix;

/// Symmetric matrix with exact rational entries.
pub type ExactMatrix = SymMatrix<Rational>;
/// Symmetric matrix with double-precision entries.
pub type FloatMatrix = SymMatrix<f64>;
/// Point configuration with exact rational coordinates.
pub type ExactConfiguration = PointConfiguration<Rational>;
/// Point configuration with double-precision coordinates.
pub type FloatConfiguration = PointConfiguration<f64>;
/// Bound evaluated in exact rational arithmetic.
pub type ExactBound = bounds::BoundResult<Rational>;
/// Equiangular line system with exact Gram entries.
pub type ExactEquiangular = correspondence::EquiangularSystem<Rational>;

/// Default relative tolerance for multiplicity clustering and numeric rank.
/// Absolute thresholds are this value times `max(1, spectral radius)`.
pub const DEFAULT_TOL: f64 = 1e-7;
