use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("empty spectrum")]
    EmptySpectrum,
    #[error("point {index} has dimension {found}, expected {expected}")]
    DimensionMismatch { index: usize, found: usize, expected: usize },
    #[error("configuration needs at least {needed} points, got {found}")]
    TooFewPoints { needed: usize, found: usize },
    #[error("point {index} not on unit sphere")]
    NotOnUnitSphere { index: usize },
    #[error("equidistant set, not two-distance")]
    Equidistant,
    #[error("not a two-distance set: values {values:?}")]
    NotTwoDistance { values: Vec<String> },
    #[error("indefinite Gram: minimum eigenvalue {min_eigenvalue}")]
    IndefiniteGram { min_eigenvalue: f64 },
    #[error("rank exceeds target dimension: rank {rank} > {target}")]
    RankExceedsTarget { rank: usize, target: usize },
    #[error("negative distance entry at ({row}, {col})")]
    NegativeDistance { row: usize, col: usize },
    #[error("distance matrix diagonal entry {index} is nonzero")]
    NonzeroDiagonal { index: usize },
    #[error("matrix order {order} is too small, need at least {needed}")]
    OrderTooSmall { order: usize, needed: usize },
    #[error("h = {h} outside [0, {max}]")]
    HOutOfRange { h: usize, max: usize },
    #[error("invalid squared distance ratio {0}")]
    InvalidDeltaSq(String),
    #[error("entry ({row}, {col}) = {value} is not ±1 (Seidel construction inconsistency)")]
    EntryNotUnit { row: usize, col: usize, value: String },
    #[error("not a spherical two-distance Gram matrix: entry ({row}, {col}) = {value}")]
    NotSphericalGram { row: usize, col: usize, value: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no equiangular realization at this eigenvalue: smallest eigenvalue {lambda0} >= -1")]
    NoEquiangularRealization { lambda0: f64 },
    #[error("wrong sign branch: a + b = {sum} >= 0, use the a + b >= 0 path")]
    WrongSignBranch { sum: String },
    #[error("inadmissible a = {a}: {reason}")]
    InadmissibleA { a: String, reason: String },
    #[error("irrational value where an exact scalar was requested: {0}")]
    NotExact(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Stable snake_case tag for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonFinite { .. } => "non_finite",
            Error::NotSquare { .. } => "not_square",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::EmptyMatrix => "empty_matrix",
            Error::OrderMismatch { .. } => "order_mismatch",
            Error::EmptySpectrum => "empty_spectrum",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::TooFewPoints { .. } => "too_few_points",
            Error::NotOnUnitSphere { .. } => "not_on_unit_sphere",
            Error::Equidistant => "equidistant",
            Error::NotTwoDistance { .. } => "not_two_distance",
            Error::IndefiniteGram { .. } => "indefinite_gram",
            Error::RankExceedsTarget { .. } => "rank_exceeds_target",
            Error::NegativeDistance { .. } => "negative_distance",
            Error::NonzeroDiagonal { .. } => "nonzero_diagonal",
            Error::OrderTooSmall { .. } => "order_too_small",
            Error::HOutOfRange { .. } => "h_out_of_range",
            Error::InvalidDeltaSq { .. } => "invalid_delta_sq",
            Error::EntryNotUnit { .. } => "entry_not_unit",
            Error::NotSphericalGram { .. } => "not_spherical_gram",
            Error::InvalidParams { .. } => "invalid_params",
            Error::NoEquiangularRealization { .. } => "no_equiangular_realization",
            Error::WrongSignBranch { .. } => "wrong_sign_branch",
            Error::InadmissibleA { .. } => "inadmissible_a",
            Error::NotExact { .. } => "not_exact",
            Error::Parse { .. } => "parse",
            Error::Io { .. } => "io",
        }
    }
}
