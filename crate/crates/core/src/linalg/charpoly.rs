//! Exact characteristic polynomials of integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of `det(xI − A)`, lowest degree first (`coeffs[n] = 1`).
///
/// Faddeev–LeVerrier over the integers; every division is exact.
pub fn charpoly(order: usize, a: &[i64]) -> Vec<BigInt> {
    let n = order;
    assert_eq!(a.len(), n * n);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // m <- A·m + c_{n-k+1}·I
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = a[i * n + l];
                if ail == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = &m[l * n + j];
                    if !v.is_zero() {
                        am[i * n + j] += v * ail;
                    }
                }
            }
        }
        for i in 0..n {
            am[i * n + i] += &coeffs[n - k + 1];
        }
        m = am;
        // c_{n-k} = -tr(A·m)/k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                let ail = a[i * n + l];
                if ail != 0 {
                    tr += &m[l * n + i] * ail;
                }
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k);
    }
    coeffs
}

/// Divide `p` by `(x − r)` if `r` is a root; returns the quotient.
fn deflate(p: &[BigInt], r: i64) -> Option<Vec<BigInt>> {
    let deg = p.len() - 1;
    if deg == 0 {
        return None;
    }
    let r = BigInt::from(r);
    let mut q = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for k in (0..=deg).rev() {
        let cur = &p[k] + &carry * &r;
        if k == 0 {
            return cur.is_zero().then_some(q);
        }
        q[k - 1] = cur.clone();
        carry = cur;
    }
    unreachable!()
}

/// Exact integer spectrum of an integer symmetric matrix, ascending, or
/// `None` when some eigenvalue is not an integer.
pub fn integer_spectrum(order: usize, a: &[i64]) -> Option<Vec<(i64, usize)>> {
    let mut poly = charpoly(order, a);
    // Gershgorin bound on |λ|.
    let bound = (0..order)
        .map(|i| a[i * order..(i + 1) * order].iter().map(|v| v.abs()).sum::<i64>())
        .max()
        .unwrap_or(0);
    let mut out = Vec::new();
    let mut found = 0;
    for r in -bound..=bound {
        let mut mult = 0;
        while let Some(q) = deflate(&poly, r) {
            poly = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((r, mult));
            found += mult;
            if found == order {
                return Some(out);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_j_minus_i() {
        // (J − I) of order 3 has spectrum {−1, −1, 2}: (x+1)²(x−2) = x³ − 3x − 2.
        let a = [0, 1, 1, 1, 0, 1, 1, 1, 0];
        let p = charpoly(3, &a);
        let expect: Vec<BigInt> = [-2, -3, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(p, expect);
        assert_eq!(integer_spectrum(3, &a), Some(vec![(-1, 2), (2, 1)]));
    }

    #[test]
    fn irrational_spectrum_is_rejected() {
        // [[0,1],[1,1]] has eigenvalues (1 ± √5)/2.
        assert_eq!(integer_spectrum(2, &[0, 1, 1, 1]), None);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(integer_spectrum(3, &[0; 9]), Some(vec![(0, 3)]));
    }
}
