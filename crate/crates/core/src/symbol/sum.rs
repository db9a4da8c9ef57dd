//! Canonical sums of symbol terms and the ring/derivation operations.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::coeff::{cint, crat, Coeff};
use super::jet::{Dir, Jet};
use super::term::{SymbolTerm, TermKey};

/// A differentiation direction for [`SymbolSum::diff`]: a base-space
/// direction (tangential or normal) or a cotangent direction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiffDir {
    /// `∂ / ∂ x^a` or `∂ / ∂ x^n`.
    Space(Dir),
    /// `∂ / ∂ xi^a` (tangential index, 1-based).
    Xi(u8),
}

/// A symbol: a canonical, duplicate-free sum of [`SymbolTerm`]s over a fixed
/// ambient dimension.
///
/// Canonical means: terms are sorted by `(e, l, xi, jets)`, terms with equal
/// keys are merged, and zero-coefficient terms are dropped. Two sums are
/// equal iff they have identical dimension and term lists, so `==` decides
/// exact symbol equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolSum {
    dim: u32,
    terms: Vec<SymbolTerm>,
}

impl SymbolSum {
    /// The zero symbol.
    pub fn zero(dim: u32) -> SymbolSum {
        SymbolSum {
            dim,
            terms: Vec::new(),
        }
    }

    /// The constant symbol `1`.
    pub fn one(dim: u32) -> SymbolSum {
        SymbolSum::from_terms(dim, vec![SymbolTerm::q_power(cint(1), 0)])
    }

    /// The symbol `c * Q^(e/2)`.
    pub fn q_power(dim: u32, coeff: Coeff, e: i32) -> SymbolSum {
        SymbolSum::from_terms(dim, vec![SymbolTerm::q_power(coeff, e)])
    }

    /// The symbol `c * (sqrt(Q)-lambda)^(-l)`.
    pub fn resolvent_power(dim: u32, coeff: Coeff, l: u32) -> SymbolSum {
        SymbolSum::from_terms(dim, vec![SymbolTerm::resolvent_power(coeff, l)])
    }

    /// Canonicalize an arbitrary list of terms: merge equal keys, drop
    /// zeros, sort.
    ///
    /// # Panics
    /// Panics if a term mentions a tangential index outside `1..dim-1`.
    pub fn from_terms(dim: u32, terms: Vec<SymbolTerm>) -> SymbolSum {
        let max_tan = (dim - 1) as u8;
        let mut merged: BTreeMap<TermKey, Coeff> = BTreeMap::new();
        for t in terms {
            debug_assert!(
                t.xi.iter().all(|a| (1..=max_tan).contains(a)),
                "cotangent index out of range for dim {dim}: {t}"
            );
            debug_assert!(
                t.jets.iter().all(|j| j.max_component_index() <= max_tan
                    && j.derivs().iter().all(|d| matches!(d, Dir::Nor)
                        || matches!(d, Dir::Tan(a) if (1..=max_tan).contains(a)))),
                "jet index out of range for dim {dim}: {t}"
            );
            if t.is_zero() {
                continue;
            }
            let key = t.key();
            match merged.get_mut(&key) {
                Some(c) => *c += t.coeff,
                None => {
                    merged.insert(key, t.coeff);
                }
            }
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((e, l, xi, jets), coeff)| SymbolTerm {
                coeff,
                q_half_exp: e,
                resolvent_exp: l,
                xi,
                jets,
            })
            .collect();
        SymbolSum { dim, terms }
    }

    /// Ambient dimension `n` (tangential directions are `1..n-1`).
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// The canonical term list.
    pub fn terms(&self) -> &[SymbolTerm] {
        &self.terms
    }

    /// Number of canonical terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether this is the zero symbol.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of two symbols.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn add(&self, other: &SymbolSum) -> SymbolSum {
        assert_eq!(self.dim, other.dim, "symbol dimension mismatch");
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        SymbolSum::from_terms(self.dim, terms)
    }

    /// Difference of two symbols.
    pub fn sub(&self, other: &SymbolSum) -> SymbolSum {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> SymbolSum {
        self.scale(&cint(-1))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Coeff) -> SymbolSum {
        if c.is_zero() {
            return SymbolSum::zero(self.dim);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.coeff *= c.clone();
                t
            })
            .collect();
        SymbolSum {
            dim: self.dim,
            terms,
        }
    }

    /// Product of two symbols (full distribution, then canonicalization).
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn mul(&self, other: &SymbolSum) -> SymbolSum {
        assert_eq!(self.dim, other.dim, "symbol dimension mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.mul(b));
            }
        }
        SymbolSum::from_terms(self.dim, terms)
    }

    /// Exact partial derivative of the symbol.
    ///
    /// Three rules per term, all consequences of the chain rule:
    ///
    /// * jet factors pick up one more derivative direction (base-space
    ///   directions only);
    /// * `Q^(e/2)` differentiates to `(e/2) Q^((e-2)/2) ∂Q`;
    /// * `(sqrt(Q)-lambda)^(-l)` differentiates to
    ///   `(-l/2) Q^(-1/2) (sqrt(Q)-lambda)^(-l-1) ∂Q`;
    ///
    /// and for cotangent directions additionally the power rule on `xi^M`.
    /// `∂Q` expands over the inverse-metric jets, so differentiation stays
    /// inside the calculus.
    pub fn diff(&self, dir: DiffDir) -> SymbolSum {
        let mut out: Vec<SymbolTerm> = Vec::new();
        let dq = self.q_derivative(dir);
        for t in &self.terms {
            // Product rule over jet factors (base-space directions only).
            if let DiffDir::Space(d) = dir {
                for k in 0..t.jets.len() {
                    let mut jets = t.jets.clone();
                    jets[k] = jets[k].with_deriv(d);
                    out.push(SymbolTerm::new(
                        t.coeff.clone(),
                        t.q_half_exp,
                        t.resolvent_exp,
                        t.xi.clone(),
                        jets,
                    ));
                }
            }
            // Power rule on the cotangent monomial.
            if let DiffDir::Xi(g) = dir {
                let mult = t.xi.iter().filter(|a| **a == g).count();
                if mult > 0 {
                    let mut xi = t.xi.clone();
                    let pos = xi.iter().position(|a| *a == g).unwrap();
                    xi.remove(pos);
                    out.push(SymbolTerm::new(
                        t.coeff.clone() * cint(mult as i64),
                        t.q_half_exp,
                        t.resolvent_exp,
                        xi,
                        t.jets.clone(),
                    ));
                }
            }
            // Chain rule on Q^(e/2).
            if t.q_half_exp != 0 {
                let base = SymbolTerm::new(
                    t.coeff.clone() * crat(t.q_half_exp as i64, 2),
                    t.q_half_exp - 2,
                    t.resolvent_exp,
                    t.xi.clone(),
                    t.jets.clone(),
                );
                for d in &dq.terms {
                    out.push(base.mul(d));
                }
            }
            // Chain rule on the resolvent factor.
            if t.resolvent_exp != 0 {
                let base = SymbolTerm::new(
                    t.coeff.clone() * crat(-(t.resolvent_exp as i64), 2),
                    t.q_half_exp - 1,
                    t.resolvent_exp + 1,
                    t.xi.clone(),
                    t.jets.clone(),
                );
                for d in &dq.terms {
                    out.push(base.mul(d));
                }
            }
        }
        SymbolSum::from_terms(self.dim, out)
    }

    /// `∂Q` in the given direction, as a symbol sum.
    ///
    /// For a base-space direction `d` this is `sum_{a,b} ∂_d g^{ab} xi^a
    /// xi^b`; for a cotangent direction `g` it is `2 sum_b g^{gb} xi^b`.
    fn q_derivative(&self, dir: DiffDir) -> SymbolSum {
        let max_tan = (self.dim - 1) as u8;
        let mut terms = Vec::new();
        match dir {
            DiffDir::Space(d) => {
                for a in 1..=max_tan {
                    for b in a..=max_tan {
                        let c = if a == b { cint(1) } else { cint(2) };
                        terms.push(SymbolTerm::new(
                            c,
                            0,
                            0,
                            vec![a, b],
                            vec![Jet::inv_metric(a, b, &[d])],
                        ));
                    }
                }
            }
            DiffDir::Xi(g) => {
                for b in 1..=max_tan {
                    terms.push(SymbolTerm::new(
                        cint(2),
                        0,
                        0,
                        vec![b],
                        vec![Jet::inv_metric(g, b, &[])],
                    ));
                }
            }
        }
        SymbolSum::from_terms(self.dim, terms)
    }

    /// Multi-line debug dump: a header followed by one canonical term per
    /// line. Stable across runs, suitable for golden-file comparison.
    pub fn dump(&self) -> String {
        let mut out = format!("dim={} terms={}\n", self.dim, self.terms.len());
        for t in &self.terms {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SymbolSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// `sqrt(Q)` as a symbol.
pub fn sqrt_q(dim: u32) -> SymbolSum {
    SymbolSum::q_power(dim, cint(1), 1)
}

/// `c / (2 sqrt(Q))` as a symbol, the prefactor of both recursions.
pub fn half_inv_sqrt_q(dim: u32) -> SymbolSum {
    SymbolSum::q_power(dim, crat(1, 2), -1)
}

/// All multi-indices `K` over the tangential directions `1..dim-1` with
/// `|K| = degree`, as vectors of (direction, multiplicity) pairs, together
/// with `K!`.
pub fn multi_indices(dim: u32, degree: u32) -> Vec<(Vec<(u8, u32)>, num_bigint::BigInt)> {
    let max_tan = (dim - 1) as u8;
    let mut out = Vec::new();
    // Compositions of `degree` over `max_tan` slots.
    fn rec(
        slot: u8,
        max_tan: u8,
        left: u32,
        cur: &mut Vec<(u8, u32)>,
        out: &mut Vec<Vec<(u8, u32)>>,
    ) {
        if slot > max_tan {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for m in (0..=left).rev() {
            if m > 0 {
                cur.push((slot, m));
            }
            rec(slot + 1, max_tan, left - m, cur, out);
            if m > 0 {
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(1, max_tan, degree, &mut Vec::new(), &mut raw);
    for k in raw {
        let kfact = k
            .iter()
            .map(|(_, m)| super::coeff::factorial(*m as u64))
            .fold(num_bigint::BigInt::from(1), |a, b| a * b);
        out.push((k, kfact));
    }
    out
}

/// Apply `∂^K` (in `xi` or in tangential `x`) to a symbol.
pub fn apply_multi_derivative(s: &SymbolSum, k: &[(u8, u32)], in_xi: bool) -> SymbolSum {
    let mut out = s.clone();
    for (dir, mult) in k {
        for _ in 0..*mult {
            let d = if in_xi {
                DiffDir::Xi(*dir)
            } else {
                DiffDir::Space(Dir::Tan(*dir))
            };
            out = out.diff(d);
        }
    }
    out
}
