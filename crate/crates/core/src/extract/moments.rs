//! Exact moments of the exponential weight over the cotangent fibre.
//!
//! For the fibre `R^{n-1}` with `|xi|` the Euclidean norm, even exponents
//! `m_1, ..., m_p` (each `m_i = 2 h_i`), and integer `k`,
//!
//! ```text
//!   ∫_{R^{n-1}} e^{-|xi|} |xi|^k Π_i (xi^{a_i})^{m_i} d xi
//!     = V_n Γ(K + n - 1) · Π_i (m_i - 1)!! / Π_{j=0}^{h-1} (n - 1 + 2j),
//! ```
//!
//! where `K = k + Σ m_i` is the total homogeneity, `h = Σ h_i`, and
//! `V_n = Vol(S^{n-2})`. The radial part gives `Γ(K + n - 1)` directly; the
//! spherical part follows from the standard recursion for monomial moments
//! over the sphere (each distinct direction contributes `(m_i - 1)!!`, and
//! the total even degree `2h` rescales by the running factors
//! `n - 1 + 2j`). Odd monomials integrate to zero and are rejected here —
//! callers filter them out first.
//!
//! The value is returned in units of `V_n`, with the Gamma factor folded in
//! as an exact factorial.

use num_bigint::BigInt;
use num_traits::One;

use super::ExtractError;
use crate::symbol::coeff::factorial;
use crate::symbol::Rat;

/// Exact fibre moment in units of `V_n = Vol(S^{n-2})`.
///
/// `k` is the power of `|xi|`; `exponents` lists the per-direction even
/// exponents of the cotangent monomial (which directions they attach to is
/// irrelevant by symmetry).
pub fn xi_moment(dim: u32, k: i64, exponents: &[u32]) -> Result<Rat, ExtractError> {
    let mut half_sum: u64 = 0;
    let mut deg_sum: i64 = 0;
    let mut numer = BigInt::one();
    for &m in exponents {
        if m % 2 != 0 {
            return Err(ExtractError::OddMomentExponent { exponent: m });
        }
        half_sum += u64::from(m / 2);
        deg_sum += i64::from(m);
        numer *= double_factorial_odd(m);
    }
    let homogeneity = k + deg_sum;
    let gamma_arg = homogeneity + i64::from(dim) - 1;
    if gamma_arg < 1 {
        return Err(ExtractError::DivergentMoment { homogeneity, dim });
    }
    numer *= factorial((gamma_arg - 1) as u64);
    let mut denom = BigInt::one();
    for j in 0..half_sum {
        denom *= BigInt::from(i64::from(dim) - 1 + 2 * j as i64);
    }
    Ok(Rat::new(numer, denom))
}

/// `(m-1)!!` for even `m >= 0` (so `1, 1, 3, 15, ...` for `m = 0, 2, 4, 6`).
fn double_factorial_odd(m: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut j = 1i64;
    while j < i64::from(m) {
        acc *= BigInt::from(j);
        j += 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rr(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn pure_exponential_mass() {
        // ∫ e^{-|xi|} dxi = V_n Γ(n-1).
        assert_eq!(xi_moment(3, 0, &[]).unwrap(), rr(1, 1)); // Γ(2)
        assert_eq!(xi_moment(5, 0, &[]).unwrap(), rr(6, 1)); // Γ(4)
    }

    #[test]
    fn single_quadratic_direction() {
        // ∫ e^{-|xi|} |xi|^{k-2} (xi^a)^2 dxi = V_n Γ(k+n-1)/(n-1).
        for n in [3i64, 4, 7] {
            for k in [0i64, 1, 3] {
                let got = xi_moment(n as u32, k - 2, &[2]).unwrap();
                let expect = Rat::new(factorial((k + n - 2) as u64), (n - 1).into());
                assert_eq!(got, expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn two_quadratic_directions() {
        // ∫ e^{-|xi|} |xi|^{k-4} (xi^a)^2 (xi^b)^2 dxi
        //   = V_n Γ(k+n-1) / ((n-1)(n+1)).
        let got = xi_moment(3, -4 + 2, &[2, 2]).unwrap(); // k = 2
        let expect = Rat::new(factorial(2 + 3 - 2), (2 * 4).into());
        assert_eq!(got, expect);
    }

    #[test]
    fn quartic_direction() {
        // ∫ e^{-|xi|} |xi|^{k-4} (xi^a)^4 dxi = 3 V_n Γ(k+n-1)/((n-1)(n+1)).
        let got = xi_moment(4, -4, &[4]).unwrap(); // k = 0, n = 4
        let expect = Rat::new(3 * factorial(4 - 2), (3 * 5).into());
        assert_eq!(got, expect);
    }

    #[test]
    fn rejects_odd_exponents() {
        assert!(matches!(
            xi_moment(3, 0, &[1]),
            Err(ExtractError::OddMomentExponent { exponent: 1 })
        ));
    }

    #[test]
    fn rejects_divergent_homogeneity() {
        // K + n - 1 = -3 + 3 - 1 < 1.
        assert!(matches!(
            xi_moment(3, -3, &[]),
            Err(ExtractError::DivergentMoment { .. })
        ));
    }
}
