//! The end-to-end derivation of heat-trace coefficients, and the closed
//! forms they must reproduce.
//!
//! [`heat_invariant`] derives `a_k` mechanically:
//! operator recursion → parametrix recursion → contour reduction →
//! base-point evaluation → parity filter → fibre moments →
//! canonicalization. [`expected_invariant`] writes down the known closed
//! forms
//!
//! ```text
//!   a_0 = pref_n Γ(n-1)
//!   a_1 = pref_n (n-2) Γ(n-1) H_1 / 2
//!   a_2 = pref_n Γ(n-2)/8 [ (n-1)(n-2)(n^2-n-4)/(n+1) H_1^2
//!           - n(n-3)(n-2)/(n+1) H_2 + (n-2)/(n-1) R_dom
//!           - (n-4)/(3(n-1)) R_bd ]
//! ```
//!
//! (`pref_n = V_n (2π)^{-(n-1)}`, `H_1`, `H_2` the first two mean
//! curvatures, `R_dom` / `R_bd` the scalar curvatures of the domain and the
//! boundary) re-expressed over the pipeline's own monomial basis via
//!
//! ```text
//!   (n-1) H_1 = Σ λ_a,
//!   (n-1)(n-2) H_2 = (Σ λ)^2 - Σ λ^2,
//!   R_bd = Σ_{c,a} Riem(c,a,c,a),
//!   R_dom = R_bd + 3 Σ λ^2 - Σ M(a,a) - (Σ λ)^2,
//! ```
//!
//! the last line being the Gauss-type identity that eliminates the domain
//! curvature in favour of the second normal jets. Agreement is then literal
//! equality of canonical polynomials.

use std::time::Instant;

use num_traits::Zero;

use super::contour::contour_reduce;
use super::curvature::{CurvMonomial, CurvatureIndeterminate};
use super::moments::xi_moment;
use super::poly::CurvaturePolynomial;
use super::table::{evaluate_at_base_point, EvalTerm};
use super::ExtractError;
use crate::symbol::coeff::factorial_rat;
use crate::symbol::{dtn_symbols, parametrix_symbols, Rat};

/// Term counts through the derivation stages, for reporting.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DerivationStats {
    /// Canonical term count of each operator symbol `r_1, r_0, ...`.
    pub operator_terms: Vec<usize>,
    /// Canonical term count of each parametrix symbol `s_{-1}, s_{-2}, ...`.
    pub parametrix_terms: Vec<usize>,
    /// Terms after contour reduction.
    pub contour_terms: usize,
    /// Fibre terms after base-point evaluation.
    pub evaluated_terms: usize,
    /// Fibre terms surviving the parity filter.
    pub even_terms: usize,
    /// Monomials in the final canonical polynomial.
    pub monomials: usize,
    /// Wall-clock time of the whole derivation, milliseconds.
    pub elapsed_ms: u64,
}

/// Derive the local heat-trace coefficient `a_k` in dimension `dim`.
///
/// The result is exact; see [`CurvaturePolynomial`] for the implicit
/// prefactor convention. Requires `k <= 2` (the base-point table stops at
/// second jets) and `dim >= k + 1` (locality of `a_k`).
pub fn heat_invariant(dim: u32, k: u32) -> Result<CurvaturePolynomial, ExtractError> {
    heat_invariant_with_stats(dim, k).map(|(p, _)| p)
}

/// [`heat_invariant`] plus stage-by-stage term counts.
pub fn heat_invariant_with_stats(
    dim: u32,
    k: u32,
) -> Result<(CurvaturePolynomial, DerivationStats), ExtractError> {
    if k > 2 {
        return Err(ExtractError::UnsupportedOrder { order: k });
    }
    if dim < k + 1 {
        return Err(ExtractError::InvariantNotLocal { dim, order: k });
    }
    let start = Instant::now();
    let rs = dtn_symbols(dim, k)?;
    let ss = parametrix_symbols(&rs, k)?;
    let reduced = contour_reduce(&ss[k as usize])?;
    let evaluated = evaluate_at_base_point(&reduced)?;
    let evaluated_count = evaluated.len();
    let (poly, even_terms) = integrate_eval_terms(dim, evaluated)?;
    let stats = DerivationStats {
        operator_terms: rs.iter().map(|r| r.len()).collect(),
        parametrix_terms: ss.iter().map(|s| s.len()).collect(),
        contour_terms: reduced.len(),
        evaluated_terms: evaluated_count,
        even_terms,
        monomials: poly.body().len(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok((poly, stats))
}

/// Integrate evaluated fibre terms against `e^{-|xi|}`: drop odd monomials,
/// check that no opaque mixed jet survives, apply the exact moments, check
/// that imaginary parts cancel, and canonicalize.
///
/// Exposed so cancellation properties of specific fibre sums can be tested
/// directly.
pub fn integrate_eval_terms(
    dim: u32,
    terms: Vec<EvalTerm>,
) -> Result<(CurvaturePolynomial, usize), ExtractError> {
    use num_complex::Complex;

    let mut even_terms = 0usize;
    let mut raw: std::collections::BTreeMap<CurvMonomial, Complex<Rat>> =
        std::collections::BTreeMap::new();
    for t in terms {
        let mut exps: Vec<u32> = Vec::new();
        {
            // Per-direction exponents of the cotangent monomial.
            let mut i = 0;
            let xi = &t.xi;
            let mut odd = false;
            while i < xi.len() {
                let mut j = i + 1;
                while j < xi.len() && xi[j] == xi[i] {
                    j += 1;
                }
                let m = (j - i) as u32;
                if !m.is_multiple_of(2) {
                    odd = true;
                    break;
                }
                exps.push(m);
                i = j;
            }
            if odd {
                continue;
            }
        }
        even_terms += 1;
        if t.mono.has_mixed() {
            return Err(ExtractError::InternalInconsistency {
                detail: format!("mixed jet survived the parity filter: {}", t.mono),
            });
        }
        let moment = xi_moment(dim, i64::from(t.xi_exp), &exps)?;
        let contribution = t.coeff * Complex::new(moment, Rat::zero());
        *raw.entry(t.mono)
            .or_insert_with(|| Complex::new(Rat::zero(), Rat::zero())) += contribution;
    }
    let mut body = Vec::with_capacity(raw.len());
    for (mono, c) in raw {
        if !c.im.is_zero() {
            return Err(ExtractError::InternalInconsistency {
                detail: format!("imaginary residue {} on monomial {}", c.im, mono),
            });
        }
        if !c.re.is_zero() {
            body.push((mono, c.re));
        }
    }
    Ok((CurvaturePolynomial::from_raw(dim, body), even_terms))
}

/// The independently known closed form of `a_k`, over the same canonical
/// basis as [`heat_invariant`] so the two can be compared with `==`.
pub fn expected_invariant(dim: u32, k: u32) -> Result<CurvaturePolynomial, ExtractError> {
    if k > 2 {
        return Err(ExtractError::UnsupportedOrder { order: k });
    }
    if dim < 2 {
        return Err(crate::symbol::SymbolError::UnsupportedDimension { dim }.into());
    }
    if dim < k + 1 {
        return Err(ExtractError::InvariantNotLocal { dim, order: k });
    }
    let n = i64::from(dim);
    let rr = |a: i64, b: i64| Rat::new(a.into(), b.into());
    let constant = |c: Rat| CurvaturePolynomial::from_raw(dim, vec![(CurvMonomial::one(), c)]);

    match k {
        0 => {
            // Γ(n-1).
            Ok(constant(factorial_rat((n - 2) as u64)))
        }
        1 => {
            // (n-2) Γ(n-1) H_1 / 2 with (n-1) H_1 = Σ λ.
            let c = factorial_rat((n - 2) as u64) * rr(n - 2, 2 * (n - 1));
            Ok(sum_lambda(dim).scale(&c))
        }
        _ => {
            // Γ(n-2)/8 [ c_h1 H_1^2 + c_h2 H_2 + c_dom R_dom + c_bd R_bd ].
            let pref = factorial_rat((n - 3) as u64) * rr(1, 8);
            let c_h1 = rr((n - 1) * (n - 2) * (n * n - n - 4), n + 1);
            let c_h2 = rr(-n * (n - 3) * (n - 2), n + 1);
            let c_dom = rr(n - 2, n - 1);
            let c_bd = rr(-(n - 4), 3 * (n - 1));

            let sum_l = sum_lambda(dim);
            let sum_l_sq = sum_l.mul(&sum_l); // (Σ λ)^2
            let sum_sq = sum_lambda_sq(dim); // Σ λ^2
            let h1_sq = sum_l_sq.scale(&rr(1, (n - 1) * (n - 1)));
            let h2 = sum_l_sq
                .add(&sum_sq.scale(&rr(-1, 1)))
                .scale(&rr(1, (n - 1) * (n - 2)));
            let r_bd = boundary_scalar(dim);
            // R_dom = R_bd + 3 Σ λ^2 - Σ M(a,a) - (Σ λ)^2.
            let r_dom = r_bd
                .add(&sum_sq.scale(&rr(3, 1)))
                .add(&sum_mjet_trace(dim).scale(&rr(-1, 1)))
                .add(&sum_l_sq.scale(&rr(-1, 1)));

            let total = h1_sq
                .scale(&c_h1)
                .add(&h2.scale(&c_h2))
                .add(&r_dom.scale(&c_dom))
                .add(&r_bd.scale(&c_bd));
            Ok(total.scale(&pref))
        }
    }
}

/// `Σ_a λ_a`.
fn sum_lambda(dim: u32) -> CurvaturePolynomial {
    CurvaturePolynomial::from_raw(
        dim,
        (1..dim as u8).map(|a| {
            (
                CurvMonomial::new(vec![CurvatureIndeterminate::Lambda(a)]),
                Rat::from_integer(1.into()),
            )
        }),
    )
}

/// `Σ_a λ_a^2`.
fn sum_lambda_sq(dim: u32) -> CurvaturePolynomial {
    CurvaturePolynomial::from_raw(
        dim,
        (1..dim as u8).map(|a| {
            (
                CurvMonomial::new(vec![
                    CurvatureIndeterminate::Lambda(a),
                    CurvatureIndeterminate::Lambda(a),
                ]),
                Rat::from_integer(1.into()),
            )
        }),
    )
}

/// Boundary scalar curvature `Σ_{c,a} Riem(c,a,c,a)`.
fn boundary_scalar(dim: u32) -> CurvaturePolynomial {
    let mut raw = Vec::new();
    for c in 1..dim as u8 {
        for a in 1..dim as u8 {
            raw.push((
                CurvMonomial::new(vec![CurvatureIndeterminate::Riem(c, a, c, a)]),
                Rat::from_integer(1.into()),
            ));
        }
    }
    CurvaturePolynomial::from_raw(dim, raw)
}

/// `Σ_a M(a,a)`.
fn sum_mjet_trace(dim: u32) -> CurvaturePolynomial {
    CurvaturePolynomial::from_raw(
        dim,
        (1..dim as u8).map(|a| {
            (
                CurvMonomial::new(vec![CurvatureIndeterminate::MJet(a, a)]),
                Rat::from_integer(1.into()),
            )
        }),
    )
}
