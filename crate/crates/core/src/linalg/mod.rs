//! Dense symmetric-matrix numerics shared by every other module.

pub mod charpoly;
pub mod eigen;
pub mod io;
mod matrix;
mod spectrum;
mod weyl;

pub use matrix::SymMatrix;
pub use spectrum::{
    eig_sym, group_spectrum, psd_rank, spectrum, tolerance_scale, Cluster, PsdReport, Spectrum,
};
pub use weyl::{verify_weyl, WeylCheck, WeylReport};

pub(crate) use spectrum::psd_rank_from_eigs;
