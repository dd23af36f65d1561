use serde::Serialize;

use super::matrix::SymMatrix;
use super::spectrum::{eig_sym, tolerance_scale};
use crate::error::Result;
use crate::scalar::Scalar;

/// One Weyl inequality `lower <= value <= upper`, 1-based descending index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeylCheck {
    pub index: usize,
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeylReport {
    pub checks: Vec<WeylCheck>,
    pub all_pass: bool,
}

/// Check `λᵢ(N) + λ_min(R) <= λᵢ(N+R) <= λᵢ(N) + λ_max(R)` for every `i`,
/// eigenvalues indexed in descending order. The slack is
/// `tol·max(1, ρ(N), ρ(R), ρ(N+R))`.
pub fn verify_weyl<T: Scalar>(n: &SymMatrix<T>, r: &SymMatrix<T>, tol: f64) -> Result<WeylReport> {
    let sum = n.add(r)?;
    let desc = |m: &SymMatrix<T>| {
        let mut e = eig_sym(m);
        e.reverse();
        e
    };
    let (en, er, es) = (desc(n), desc(r), desc(&sum));
    let slack = tol
        * tolerance_scale(&en)
            .max(tolerance_scale(&er))
            .max(tolerance_scale(&es));
    let r_max = er[0];
    let r_min = *er.last().expect("nonempty");
    let checks: Vec<WeylCheck> = en
        .iter()
        .zip(&es)
        .enumerate()
        .map(|(i, (&ni, &si))| {
            let lower = ni + r_min;
            let upper = ni + r_max;
            WeylCheck {
                index: i + 1,
                lower,
                value: si,
                upper,
                pass: lower - slack <= si && si <= upper + slack,
            }
        })
        .collect();
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(WeylReport { checks, all_pass })
}
