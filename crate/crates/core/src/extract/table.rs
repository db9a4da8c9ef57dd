//! Base-point values of metric jets in boundary normal coordinates.
//!
//! At the base point `P` of boundary normal coordinates adapted to the
//! principal directions of the second fundamental form, the metric Taylor
//! data collapses to curvature quantities:
//!
//! ```text
//!   g_{ab} = δ_ab             g^{ab} = δ_ab            log det g = 0
//!   ∂_c g_{ab} = ∂_c g^{ab} = ∂_c log det g = 0        (tangential c)
//!   ∂_n g_{ab} = -2 λ_a δ_ab  ∂_n g^{ab} = 2 λ_a δ_ab  ∂_n log det g = -2 Σ λ
//!   ∂_c ∂_e g^{ab} =  (1/3)(Riem(a,c,b,e) + Riem(a,e,b,c))
//!   ∂_c ∂_e g_{ab} = -(1/3)(Riem(a,c,b,e) + Riem(a,e,b,c))
//!   ∂_c ∂_e log det g = -(2/3) Ric(c,e)
//!   ∂_n^2 g_{ab} = M(a,b)     ∂_n^2 g^{ab} = 8 λ_a^2 δ_ab - M(a,b)
//!   ∂_n^2 log det g = -4 Σ λ^2 + Σ M(a,a)
//! ```
//!
//! with `Riem`/`Ric` the curvature of the boundary and `M(a,b)` the second
//! normal jet, kept as an indeterminate. The normal-jet values follow from
//! the Taylor expansion `g = Id + A_1 x^n + A_2 (x^n)^2 + O((x^n)^3)` with
//! `A_1 = diag(-2λ)`, which forces `g^{-1} = Id - A_1 x^n + (A_1^2 - A_2)
//! (x^n)^2 + ...`; the tangential-jet values are the classical normal
//! coordinate expansion of a metric. Mixed second jets `∂_c ∂_n` have no
//! pointwise expression in this basis; they are kept as opaque
//! indeterminates and must cancel from any integrated invariant.

use num_complex::Complex;
use num_traits::Zero;

use super::curvature::{CurvMonomial, CurvatureIndeterminate};
use super::ExtractError;
use crate::symbol::coeff::{rat, rint, Coeff};
use crate::symbol::{Dir, Jet, JetFamily, Rat, SymbolSum};

/// One evaluated fibre term: `coeff * |xi|^e * xi^M * mono`, to be
/// integrated against `e^{-|xi|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalTerm {
    /// Exact complex coefficient.
    pub coeff: Coeff,
    /// Power of `|xi|` (`Q^(e/2)` evaluated at the base point).
    pub xi_exp: i32,
    /// Sorted tangential cotangent indices with multiplicity.
    pub xi: Vec<u8>,
    /// Curvature monomial from the jet substitutions.
    pub mono: CurvMonomial,
}

/// Substitute base-point values for every jet of a contour-reduced symbol.
///
/// Returns the merged list of evaluated fibre terms. Errors if a term still
/// carries a resolvent factor or mentions a jet of weight 3 or more.
pub fn evaluate_at_base_point(s: &SymbolSum) -> Result<Vec<EvalTerm>, ExtractError> {
    let max_tan = (s.dim() - 1) as u8;
    let mut merged: std::collections::BTreeMap<(i32, Vec<u8>, CurvMonomial), Coeff> =
        std::collections::BTreeMap::new();
    for t in s.terms() {
        if t.resolvent_exp != 0 {
            return Err(ExtractError::UnreducedResolvent {
                term: t.to_string(),
            });
        }
        // Distribute the product of per-jet substitution sums.
        let mut pieces: Vec<(Rat, Vec<CurvatureIndeterminate>)> = vec![(rint(1), Vec::new())];
        for jet in &t.jets {
            let subs = substitute_jet(jet, max_tan)?;
            if subs.is_empty() {
                pieces.clear();
                break;
            }
            let mut next = Vec::with_capacity(pieces.len() * subs.len());
            for (c0, f0) in &pieces {
                for (c1, f1) in &subs {
                    let mut fs = f0.clone();
                    fs.extend_from_slice(f1);
                    next.push((c0.clone() * c1.clone(), fs));
                }
            }
            pieces = next;
        }
        for (c, fs) in pieces {
            let coeff = t.coeff.clone() * Complex::new(c, Rat::zero());
            if coeff.is_zero() {
                continue;
            }
            let key = (t.q_half_exp, t.xi.clone(), CurvMonomial::new(fs));
            match merged.get_mut(&key) {
                Some(acc) => *acc += coeff,
                None => {
                    merged.insert(key, coeff);
                }
            }
        }
    }
    Ok(merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((xi_exp, xi, mono), coeff)| EvalTerm {
            coeff,
            xi_exp,
            xi,
            mono,
        })
        .collect())
}

/// Base-point value of one jet as a sum of curvature monomials with
/// rational multipliers. An empty vector means the value is exactly zero.
fn substitute_jet(
    jet: &Jet,
    max_tan: u8,
) -> Result<Vec<(Rat, Vec<CurvatureIndeterminate>)>, ExtractError> {
    use CurvatureIndeterminate::{Lambda, MJet, Mixed, Ric};

    let derivs = jet.derivs();
    let fam = jet.family();
    let (a, b) = match fam {
        JetFamily::InvMetric(a, b) | JetFamily::Metric(a, b) => (a, b),
        JetFamily::LogDet => (0, 0),
    };
    let value = match derivs {
        // Zeroth jets: identity metric, log det 1 = 0.
        [] => match fam {
            JetFamily::InvMetric(_, _) | JetFamily::Metric(_, _) => delta(a, b),
            JetFamily::LogDet => vec![],
        },
        // First tangential jets vanish in normal coordinates.
        [Dir::Tan(_)] => vec![],
        // First normal jets: principal curvatures.
        [Dir::Nor] => match fam {
            JetFamily::InvMetric(_, _) => diag(a, b, rint(2), Lambda(a)),
            JetFamily::Metric(_, _) => diag(a, b, rint(-2), Lambda(a)),
            JetFamily::LogDet => (1..=max_tan).map(|c| (rint(-2), vec![Lambda(c)])).collect(),
        },
        // Second tangential jets: boundary curvature.
        [Dir::Tan(c), Dir::Tan(e)] => match fam {
            JetFamily::InvMetric(_, _) => riemann_pair(a, b, *c, *e, rat(1, 3)),
            JetFamily::Metric(_, _) => riemann_pair(a, b, *c, *e, rat(-1, 3)),
            JetFamily::LogDet => vec![(rat(-2, 3), vec![Ric((*c).min(*e), (*c).max(*e))])],
        },
        // Mixed second jets: opaque, must cancel downstream.
        [Dir::Tan(c), Dir::Nor] => vec![(rint(1), vec![Mixed(fam, *c)])],
        // Second normal jets.
        [Dir::Nor, Dir::Nor] => match fam {
            JetFamily::Metric(_, _) => vec![(rint(1), vec![MJet(a, b)])],
            JetFamily::InvMetric(_, _) => {
                let mut v = vec![(rint(-1), vec![MJet(a, b)])];
                if a == b {
                    v.push((rint(8), vec![Lambda(a), Lambda(a)]));
                }
                v
            }
            JetFamily::LogDet => {
                let mut v = Vec::new();
                for c in 1..=max_tan {
                    v.push((rint(-4), vec![Lambda(c), Lambda(c)]));
                    v.push((rint(1), vec![MJet(c, c)]));
                }
                v
            }
        },
        _ => {
            return Err(ExtractError::UnsupportedJet {
                jet: jet.to_string(),
            })
        }
    };
    Ok(value)
}

fn delta(a: u8, b: u8) -> Vec<(Rat, Vec<CurvatureIndeterminate>)> {
    if a == b {
        vec![(rint(1), vec![])]
    } else {
        vec![]
    }
}

fn diag(
    a: u8,
    b: u8,
    c: Rat,
    f: CurvatureIndeterminate,
) -> Vec<(Rat, Vec<CurvatureIndeterminate>)> {
    if a == b {
        vec![(c, vec![f])]
    } else {
        vec![]
    }
}

fn riemann_pair(a: u8, b: u8, c: u8, e: u8, mult: Rat) -> Vec<(Rat, Vec<CurvatureIndeterminate>)> {
    vec![
        (mult.clone(), vec![CurvatureIndeterminate::Riem(a, c, b, e)]),
        (mult, vec![CurvatureIndeterminate::Riem(a, e, b, c)]),
    ]
}
