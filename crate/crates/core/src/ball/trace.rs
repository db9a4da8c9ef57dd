//! Truncated Steklov heat traces of the unit ball.

use super::BallError;

/// Relative size at which the bounded tail is considered negligible. This
/// sits two orders below the `f64` rounding floor of the accumulated sum.
const REL_TAIL: f64 = 1e-18;

/// Hard cap on summed terms; reached only for times around `1e-7` or below.
const MAX_TERMS: u64 = 100_000_000;

/// The Steklov heat trace `Σ_k m_k e^{-kt}` of the unit ball `B^dim`.
///
/// Multiplicities are accumulated by the exact ratio recurrence
/// `C(k+n-2, n-2) = C(k-1+n-2, n-2) (k+n-2)/k` carried in `f64` (the trace
/// itself is a float; multiplicities stay exact until `2^53` and carry
/// relative error below `1e-13` afterwards). Truncation uses the geometric
/// tail bound obtained from the eventually-decreasing term ratio
/// `m_{k+1} e^{-(k+1)t} / (m_k e^{-kt}) <= (1 + (n-2)/k) e^{-t}`.
pub fn heat_trace(dim: u32, t: f64) -> Result<f64, BallError> {
    if dim < 2 {
        return Err(BallError::UnsupportedDimension { dim });
    }
    if !t.is_finite() || t <= 0.0 {
        return Err(BallError::InvalidParameter { value: t });
    }
    let n = f64::from(dim);
    let x = (-t).exp();

    // b = C(k+n-2, n-2), prev = its predecessor; m_k = b + prev for k >= 1.
    let mut b = 1.0_f64;
    let mut pow = 1.0_f64;
    let mut sum = 1.0_f64; // the k = 0 term
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        let b_next = b * (kf + n - 2.0) / kf;
        // Reset the power-product drift every so often.
        pow = if k % 1024 == 0 {
            (-t * kf).exp()
        } else {
            pow * x
        };
        let term = (b_next + b) * pow;
        sum += term;
        b = b_next;
        // Past the term peak the ratio bound is below one and the tail is
        // geometric.
        let rho = x * (1.0 + (n - 2.0) / kf);
        if rho < 1.0 && term * rho / (1.0 - rho) < sum * REL_TAIL {
            return Ok(sum);
        }
    }
    Err(BallError::TruncationFailure { dim, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const GRID: [f64; 8] = [0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0];

    #[test]
    fn disk_trace_matches_geometric_series() {
        // m_0 = 1, m_k = 2: trace = (1 + x)/(1 - x) with x = e^{-t}.
        for t in GRID {
            let x = (-t).exp();
            assert_relative_eq!(
                heat_trace(2, t).unwrap(),
                (1.0 + x) / (1.0 - x),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn three_dimensional_trace_matches_closed_form() {
        // Σ (2k+1) x^k = (1 + x)/(1 - x)^2.
        for t in GRID {
            let x = (-t).exp();
            assert_relative_eq!(
                heat_trace(3, t).unwrap(),
                (1.0 + x) / ((1.0 - x) * (1.0 - x)),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn four_dimensional_trace_matches_closed_form() {
        // Σ (k+1)^2 x^k = (1 + x)/(1 - x)^3.
        for t in GRID {
            let x = (-t).exp();
            assert_relative_eq!(
                heat_trace(4, t).unwrap(),
                (1.0 + x) / ((1.0 - x).powi(3)),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn short_time_expansion_of_the_three_ball() {
        // t^2 trace = 2 + t + t^2/3 + t^3/12 + t^4/120 + O(t^5); the extra
        // 1e-13 absorbs the f64 accumulation noise of ~10^4 summed terms.
        for t in [1e-3, 2e-3, 5e-3] {
            let lhs = t * t * heat_trace(3, t).unwrap();
            let rhs = 2.0 + t + t * t / 3.0 + t.powi(3) / 12.0 + t.powi(4) / 120.0;
            assert!((lhs - rhs).abs() < t.powi(5) + 1e-13, "t = {t}");
        }
    }

    #[test]
    fn trace_decreases_in_time() {
        for dim in [2u32, 3, 5, 8] {
            let mut last = f64::INFINITY;
            for t in GRID {
                let tr = heat_trace(dim, t).unwrap();
                assert!(tr < last);
                last = tr;
            }
        }
    }

    #[test]
    fn long_time_limit_is_the_constant_eigenfunction() {
        assert!((heat_trace(5, 60.0).unwrap() - 1.0).abs() < 1e-20);
    }

    #[test]
    fn parameter_guards() {
        assert!(matches!(
            heat_trace(1, 0.5),
            Err(BallError::UnsupportedDimension { dim: 1 })
        ));
        for bad in [0.0, -1.0, f64::INFINITY, f64::NAN] {
            assert!(matches!(
                heat_trace(3, bad),
                Err(BallError::InvalidParameter { .. })
            ));
        }
    }
}
