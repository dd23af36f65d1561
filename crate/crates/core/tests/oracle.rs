//! Cross-checks against independent implementations: nalgebra eigenvalues and
//! bound formulas re-derived in plain floats.

use approx::assert_relative_eq;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twodist::bounds::{bound_euclidean, bound_spherical_neg, bound_spherical_pos, equality_spectrum, ls_max_bound, SetKind};
use twodist::configurations::fixtures::equiangular_28_gram;
use twodist::configurations::{cross_polytope, distance_sq_matrix, gram, simplex_midpoints};
use twodist::linalg::eig_sym;
use twodist::seidel::fixtures::{clebsch_seidel_16, conference_seidel_6, j_minus_i};
use twodist::seidel::{build_d, seidel_euclidean, seidel_spherical, spectrum_d_closed_form, EuclideanSeidelParams};
use twodist::{Rational, Scalar, SeidelMatrix, SymMatrix};

fn reference_eigs<T: Scalar>(m: &SymMatrix<T>) -> Vec<f64> {
    let f = m.to_f64();
    let n = f.order();
    let mut v: Vec<f64> = DMatrix::from_row_slice(n, n, f.as_slice())
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

fn assert_same_eigs<T: Scalar>(m: &SymMatrix<T>) {
    let ours = eig_sym(m);
    let theirs = reference_eigs(m);
    let scale = theirs.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    for (a, b) in ours.iter().zip(&theirs) {
        assert!((a - b).abs() <= 1e-9 * scale, "{ours:?} vs {theirs:?}");
    }
}

fn r(p: i64, q: i64) -> Rational {
    Rational::from_ratio(p, q)
}

#[test]
fn jacobi_matches_nalgebra_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(1..=20);
        let mut flat = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-5.0..5.0);
                flat[i * n + j] = v;
                flat[j * n + i] = v;
            }
        }
        assert_same_eigs(&SymMatrix::from_flat(n, flat).unwrap());
    }
}

#[test]
fn seidel_fixture_spectra() {
    let check = |s: &SeidelMatrix, expect: &[(f64, usize)]| {
        let e = reference_eigs(&s.to_matrix::<f64>());
        let mut at = 0;
        for &(v, m) in expect {
            for x in &e[at..at + m] {
                assert_relative_eq!(*x, v, epsilon = 1e-9);
            }
            at += m;
        }
        assert_eq!(at, e.len());
        assert_same_eigs(&s.to_matrix::<f64>());
    };
    check(&j_minus_i(7), &[(-1.0, 6), (6.0, 1)]);
    check(&conference_seidel_6(), &[(-(5f64.sqrt()), 3), (5f64.sqrt(), 3)]);
    check(&clebsch_seidel_16(), &[(-3.0, 10), (5.0, 6)]);
    let s28 = seidel_spherical(&equiangular_28_gram::<Rational>(), &r(-1, 3), &r(1, 3), 0.0).unwrap();
    check(&s28, &[(-3.0, 21), (9.0, 7)]);
    for d in 3..=6 {
        let g = gram(&cross_polytope::<Rational>(d).unwrap()).unwrap();
        let s = seidel_spherical(&g, &r(-1, 1), &r(0, 1), 0.0).unwrap();
        // Cross polytope: S = J − I − 2·(antipodal matching), spectrum
        // {−3^(d−1), 1^d, 2d−3}.
        check(&s, &[(-3.0, d - 1), (1.0, d), ((2 * d - 3) as f64, 1)]);
    }
}

#[test]
fn equality_spectra_match_nalgebra() {
    let s28 = seidel_spherical(&equiangular_28_gram::<Rational>(), &r(-1, 3), &r(1, 3), 0.0).unwrap();
    let e = reference_eigs(&s28.to_matrix::<f64>());
    let want = equality_spectrum(28, 7, SetKind::Spherical).unwrap().values_f64();
    assert_relative_eq!(e[0], want[0].0, epsilon = 1e-8);
    assert_relative_eq!(e[27], want[1].0, epsilon = 1e-8);
    let c = clebsch_seidel_16();
    let want = equality_spectrum(16, 6, SetKind::Spherical).unwrap().values_f64();
    let e = reference_eigs(&c.to_matrix::<f64>());
    assert_relative_eq!(e[0], want[0].0, epsilon = 1e-8);
    assert_relative_eq!(e[15], want[1].0, epsilon = 1e-8);
}

#[test]
fn d_closed_form_against_nalgebra() {
    for n in 3..=25 {
        for h in 1..=n - 2 {
            for ds in [r(3, 2), r(2, 1), r(7, 3), r(5, 1)] {
                let p = EuclideanSeidelParams::new(n, 1, ds.clone(), h).unwrap();
                let (a1, a2) = spectrum_d_closed_form(&p).unwrap();
                let e = reference_eigs(&build_d(&p).unwrap());
                let scale = e[0].abs().max(e[e.len() - 1].abs()).max(1.0);
                assert!((e[0] - a2).abs() <= 1e-9 * scale, "n={n} h={h} {ds}");
                assert!((e[e.len() - 1] - a1).abs() <= 1e-9 * scale, "n={n} h={h} {ds}");
            }
        }
    }
}

#[test]
fn euclidean_seidel_matches_sign_rule() {
    // Independent construction: +1 for the short distance, −1 for the long,
    // on the points other than the base point.
    for d in 3..=8 {
        let c = distance_sq_matrix(&simplex_midpoints::<Rational>(d).unwrap());
        let out = seidel_euclidean(&c, d, None, 0.0).unwrap();
        let perm = &out.permutation;
        let unit = c.upper_pairs().map(|(_, _, v)| v.clone()).min().unwrap();
        let m = out.seidel.order();
        for i in 0..m {
            for j in 0..m {
                let expect = if i == j {
                    0
                } else if *c.get(perm[i], perm[j]) == unit {
                    1
                } else {
                    -1
                };
                assert_eq!(out.seidel.get(i, j), expect, "d={d} ({i},{j})");
            }
        }
        assert_same_eigs(&out.cayley_menger);
        assert_same_eigs(&out.d_matrix);
    }
}

fn float_bound(kind: &str, d: f64, g: f64) -> Option<f64> {
    let g2 = g * g;
    match kind {
        "euclidean" if g2 > d + 1.0 => Some((d + 1.0) * (g2 - 1.0) / (g2 - d - 1.0) + 1.0),
        "pos" if g2 > d => Some(d * (g2 - 1.0) / (g2 - d)),
        "neg" if g2 > d + 1.0 => Some((d + 1.0) * (g2 - 1.0) / (g2 - d - 1.0)),
        _ => None,
    }
}

#[test]
fn bounds_against_float_formulas() {
    for d in 2..60usize {
        for (p, q) in [(3, 1), (5, 1), (7, 1), (9, 1), (7, 2), (11, 3), (13, 5)] {
            let g = r(p, q);
            let gf = p as f64 / q as f64;
            let results = [
                ("euclidean", bound_euclidean(d, &g)),
                ("pos", bound_spherical_pos(d, &g)),
                ("neg", bound_spherical_neg(d, &g)),
            ];
            for (kind, b) in results {
                match float_bound(kind, d as f64, gf) {
                    Some(v) => {
                        assert!(b.valid, "{kind} d={d} γ={g}");
                        let exact = b.exact_value.as_ref().unwrap().to_f64();
                        assert_relative_eq!(exact, v, max_relative = 1e-12);
                        let floor = b.bound_i64().unwrap();
                        assert!(floor as f64 <= v + 1e-9 && v < (floor + 1) as f64 + 1e-9);
                    }
                    None => assert!(!b.valid, "{kind} d={d} γ={g}"),
                }
            }
        }
    }
}

#[test]
fn ls_max_against_float_formulas() {
    for d in 4..80usize {
        for m in 1..10u64 {
            let odd = (2 * m + 1) as f64;
            if odd * odd <= d as f64 {
                continue;
            }
            let (df, mf) = (d as f64, m as f64);
            let four = 4.0 * mf * (mf + 1.0);
            let s = ls_max_bound(d, m, SetKind::Spherical).unwrap();
            assert_relative_eq!(
                s.exact_value.unwrap().to_f64(),
                df * four / (odd * odd - df),
                max_relative = 1e-12
            );
            let e = ls_max_bound(d, m, SetKind::Euclidean).unwrap();
            if four > df {
                assert_relative_eq!(
                    e.exact_value.unwrap().to_f64(),
                    (df + 1.0) * four / (four - df) + 1.0,
                    max_relative = 1e-12
                );
            } else {
                assert!(!e.valid);
            }
        }
    }
}
