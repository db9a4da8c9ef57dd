//! Exact Steklov eigenvalue multiplicities for the unit ball.

use super::BallError;

/// Multiplicity of the Steklov eigenvalue `k` on the unit ball `B^dim`.
///
/// This is the dimension of degree-`k` spherical harmonics in `dim`
/// variables: homogeneous polynomials of degree `k` modulo `|x|^2` times
/// those of degree `k - 2`, which leaves
///
/// ```text
///   m_0 = 1,
///   m_k = C(k + n - 2, n - 2) + C(k + n - 3, n - 2)   (k >= 1),
/// ```
///
/// with `C` the binomial coefficient. Exact in 128-bit arithmetic; errors
/// out rather than wrapping when a multiplicity exceeds the range.
pub fn steklov_multiplicity(dim: u32, degree: u32) -> Result<u128, BallError> {
    if dim < 2 {
        return Err(BallError::UnsupportedDimension { dim });
    }
    if degree == 0 {
        return Ok(1);
    }
    let n = u64::from(dim);
    let k = u64::from(degree);
    let overflow = || BallError::MultiplicityOverflow { dim, degree };
    let a = binomial(k + n - 2, n - 2).ok_or_else(overflow)?;
    let b = binomial(k + n - 3, n - 2).ok_or_else(overflow)?;
    a.checked_add(b).ok_or_else(overflow)
}

/// `C(n, r)` exactly, or `None` on 128-bit overflow.
///
/// The loop keeps every post-division partial product equal to a smaller
/// binomial coefficient, so the divisions are exact; the pre-division
/// products make the overflow check slightly conservative right at the
/// 128-bit boundary.
fn binomial(n: u64, r: u64) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        // acc = C(n - r + i - 1, i - 1) -> C(n - r + i, i).
        acc = acc.checked_mul(u128::from(n - r + i))?;
        acc /= u128::from(i);
    }
    Some(acc)
}
