//! A single monomial term of the symbol calculus.

use std::fmt;

use num_traits::Zero;

use super::coeff::{fmt_coeff, Coeff};
use super::jet::Jet;

/// One term `c * Q^(e/2) * (sqrt(Q)-lambda)^(-l) * xi^M * (jets)`.
///
/// `Q` is the principal symbol `sum g^{ab} xi^a xi^b`; the resolvent factor
/// is written `R = (sqrt(Q) - lambda)^(-1)` in dumps. The cotangent monomial
/// is stored as a sorted index multiset, e.g. `[1, 1, 2]` for
/// `(xi^1)^2 xi^2`, and the jet multiset is sorted as well, so equal terms
/// have identical field values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolTerm {
    /// Exact complex-rational coefficient.
    pub coeff: Coeff,
    /// `e` in the factor `Q^(e/2)`.
    pub q_half_exp: i32,
    /// `l` in the factor `(sqrt(Q) - lambda)^(-l)`.
    pub resolvent_exp: u32,
    /// Sorted tangential cotangent indices with multiplicity.
    pub xi: Vec<u8>,
    /// Sorted jet factors.
    pub jets: Vec<Jet>,
}

/// Canonical merge key: everything except the coefficient.
pub type TermKey = (i32, u32, Vec<u8>, Vec<Jet>);

impl SymbolTerm {
    /// Build a term, sorting the cotangent and jet multisets.
    pub fn new(
        coeff: Coeff,
        q_half_exp: i32,
        resolvent_exp: u32,
        xi: Vec<u8>,
        jets: Vec<Jet>,
    ) -> SymbolTerm {
        let mut t = SymbolTerm {
            coeff,
            q_half_exp,
            resolvent_exp,
            xi,
            jets,
        };
        t.xi.sort_unstable();
        t.jets.sort();
        t
    }

    /// A bare scalar multiple of `Q^(e/2)`.
    pub fn q_power(coeff: Coeff, e: i32) -> SymbolTerm {
        SymbolTerm::new(coeff, e, 0, Vec::new(), Vec::new())
    }

    /// A bare scalar multiple of `(sqrt(Q)-lambda)^(-l)`.
    pub fn resolvent_power(coeff: Coeff, l: u32) -> SymbolTerm {
        SymbolTerm::new(coeff, 0, l, Vec::new(), Vec::new())
    }

    /// The merge key (all fields except the coefficient).
    pub fn key(&self) -> TermKey {
        (
            self.q_half_exp,
            self.resolvent_exp,
            self.xi.clone(),
            self.jets.clone(),
        )
    }

    /// Degree of the cotangent monomial.
    pub fn xi_degree(&self) -> u32 {
        self.xi.len() as u32
    }

    /// Homogeneity order in `(xi, lambda)`: `deg(xi^M) + e - l`.
    pub fn symbol_order(&self) -> i64 {
        self.xi_degree() as i64 + self.q_half_exp as i64 - self.resolvent_exp as i64
    }

    /// Total number of metric derivatives across all jet factors.
    pub fn total_weight(&self) -> u32 {
        self.jets.iter().map(Jet::weight).sum()
    }

    /// Total number of normal derivatives across all jet factors.
    pub fn normal_weight(&self) -> u32 {
        self.jets.iter().map(Jet::normal_weight).sum()
    }

    /// Whether total weight, normal weight, and cotangent degree sum to an
    /// even number — the parity law satisfied by every symbol the
    /// recursions produce.
    pub fn parity_even(&self) -> bool {
        (self.total_weight() + self.normal_weight() + self.xi_degree()).is_multiple_of(2)
    }

    /// Whether the coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Product of two terms (coefficients multiply, exponents add, multisets
    /// merge).
    pub fn mul(&self, other: &SymbolTerm) -> SymbolTerm {
        let mut xi = self.xi.clone();
        xi.extend_from_slice(&other.xi);
        let mut jets = self.jets.clone();
        jets.extend_from_slice(&other.jets);
        SymbolTerm::new(
            self.coeff.clone() * other.coeff.clone(),
            self.q_half_exp + other.q_half_exp,
            self.resolvent_exp + other.resolvent_exp,
            xi,
            jets,
        )
    }
}

impl fmt::Display for SymbolTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_coeff(&self.coeff))?;
        if self.q_half_exp != 0 {
            write!(f, " Q^({}/2)", self.q_half_exp)?;
        }
        if self.resolvent_exp == 1 {
            write!(f, " R")?;
        } else if self.resolvent_exp > 1 {
            write!(f, " R^{}", self.resolvent_exp)?;
        }
        if !self.xi.is_empty() {
            write!(f, " xi[")?;
            for (k, a) in self.xi.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, "]")?;
        }
        for j in &self.jets {
            write!(f, " {j}")?;
        }
        write!(
            f,
            " | ord={} w={} nw={}",
            self.symbol_order(),
            self.total_weight(),
            self.normal_weight()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::super::coeff::{cint, crat};
    use super::super::jet::{Dir, Jet};
    use super::*;

    #[test]
    fn order_weight_and_parity() {
        // (1/2) Q^(-3/2) R^2 xi[1,1] U(1,1)@[n] : order 2 - 3 - 2 = -3,
        // weight 1, normal weight 1, parity (1+1+2) even.
        let t = SymbolTerm::new(
            crat(1, 2),
            -3,
            2,
            vec![1, 1],
            vec![Jet::inv_metric(1, 1, &[Dir::Nor])],
        );
        assert_eq!(t.symbol_order(), -3);
        assert_eq!(t.total_weight(), 1);
        assert_eq!(t.normal_weight(), 1);
        assert!(t.parity_even());
    }

    #[test]
    fn multisets_are_sorted_on_construction() {
        let t = SymbolTerm::new(
            cint(1),
            0,
            0,
            vec![2, 1, 2],
            vec![Jet::log_det(&[Dir::Nor]), Jet::inv_metric(1, 1, &[])],
        );
        assert_eq!(t.xi, vec![1, 2, 2]);
        assert_eq!(t.jets[0], Jet::inv_metric(1, 1, &[]));
    }

    #[test]
    fn product_merges_factors() {
        let a = SymbolTerm::new(crat(1, 2), 1, 1, vec![1], vec![]);
        let b = SymbolTerm::new(cint(-2), -2, 0, vec![2], vec![Jet::log_det(&[Dir::Nor])]);
        let p = a.mul(&b);
        assert_eq!(p.coeff, cint(-1));
        assert_eq!(p.q_half_exp, -1);
        assert_eq!(p.resolvent_exp, 1);
        assert_eq!(p.xi, vec![1, 2]);
        assert_eq!(p.jets.len(), 1);
    }

    #[test]
    fn display_is_stable() {
        let t = SymbolTerm::new(
            crat(-1, 2),
            -1,
            3,
            vec![1, 1, 2],
            vec![Jet::metric(1, 1, &[Dir::Nor])],
        );
        assert_eq!(
            t.to_string(),
            "(-1/2) Q^(-1/2) R^3 xi[1,1,2] G(1,1)@[n] | ord=-1 w=1 nw=1"
        );
    }
}
