//! Small Seidel matrices with known spectra.

use super::SeidelMatrix;

/// `J − I` of order `n`: spectrum `{−1^(n−1), n−1}`.
pub fn j_minus_i(n: usize) -> SeidelMatrix {
    SeidelMatrix::from_sign_fn(n, |_, _| true)
}

/// Order-6 symmetric conference matrix (Paley construction over GF(5)), with
/// `S² = 5I`. Its lines are the six diagonals of the icosahedron.
pub fn conference_seidel_6() -> SeidelMatrix {
    // Index 0 is the point at infinity, index 1 + x the field element x.
    let square = |x: usize| x == 1 || x == 4;
    SeidelMatrix::from_sign_fn(6, |i, j| {
        if i == 0 {
            true
        } else {
            square((j + 5 - i) % 5)
        }
    })
}

/// `J − I − 2A` for the Clebsch graph `A` on GF(2)^4 (adjacent when the
/// difference has weight 1 or 4). Spectrum `{−3^10, 5^6}`: 16 equiangular
/// lines in `R^6`.
pub fn clebsch_seidel_16() -> SeidelMatrix {
    SeidelMatrix::from_sign_fn(16, |i, j| ![1, 2, 4, 8, 15].contains(&(i ^ j)))
}
