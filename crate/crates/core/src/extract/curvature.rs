//! Curvature indeterminates at the base point and Riemann-symmetry
//! canonicalization.

use std::fmt;

use crate::symbol::JetFamily;

/// An indeterminate appearing in an evaluated heat coefficient.
///
/// The variant order defines the sort order inside monomials.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CurvatureIndeterminate {
    /// Principal curvature `lambda_a` of the boundary at the base point.
    Lambda(u8),
    /// Boundary Riemann component `Riem(a,b,c,d)`, stored canonically under
    /// the symmetry group generated by antisymmetry in each index pair and
    /// pair exchange.
    Riem(u8, u8, u8, u8),
    /// Boundary Ricci component `Ric(a,b) = sum_c Riem(c,a,c,b)`, `a <= b`.
    Ric(u8, u8),
    /// Second normal jet `M(a,b) = ∂_n^2 g_{ab}` at the base point,
    /// `a <= b`.
    MJet(u8, u8),
    /// A mixed tangential-normal second jet that has no base-point value of
    /// its own; all of these must cancel before the final polynomial.
    Mixed(JetFamily, u8),
}

impl fmt::Display for CurvatureIndeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvatureIndeterminate::Lambda(a) => write!(f, "lam({a})"),
            CurvatureIndeterminate::Riem(a, b, c, d) => write!(f, "Riem({a},{b},{c},{d})"),
            CurvatureIndeterminate::Ric(a, b) => write!(f, "Ric({a},{b})"),
            CurvatureIndeterminate::MJet(a, b) => write!(f, "M({a},{b})"),
            CurvatureIndeterminate::Mixed(fam, t) => {
                let fam = match fam {
                    JetFamily::InvMetric(a, b) => format!("U({a},{b})"),
                    JetFamily::Metric(a, b) => format!("G({a},{b})"),
                    JetFamily::LogDet => "Ld".into(),
                };
                write!(f, "mixed({fam},{t})")
            }
        }
    }
}

/// Canonical representative of `Riem(a,b,c,d)` under the eight-element
/// symmetry group, with its sign; `None` when the component is forced to
/// vanish (its canonical form is reachable with both signs).
pub fn canonical_riemann(a: u8, b: u8, c: u8, d: u8) -> Option<(CurvatureIndeterminate, i8)> {
    let images: [((u8, u8, u8, u8), i8); 8] = [
        ((a, b, c, d), 1),
        ((b, a, c, d), -1),
        ((a, b, d, c), -1),
        ((b, a, d, c), 1),
        ((c, d, a, b), 1),
        ((d, c, a, b), -1),
        ((c, d, b, a), -1),
        ((d, c, b, a), 1),
    ];
    let min = images.iter().map(|(t, _)| *t).min().expect("nonempty");
    let mut plus = false;
    let mut minus = false;
    for (t, s) in images {
        if t == min {
            if s > 0 {
                plus = true;
            } else {
                minus = true;
            }
        }
    }
    if plus && minus {
        return None;
    }
    let (p, q, r, s) = min;
    Some((
        CurvatureIndeterminate::Riem(p, q, r, s),
        if plus { 1 } else { -1 },
    ))
}

/// A product of curvature indeterminates, stored as a sorted multiset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CurvMonomial(Vec<CurvatureIndeterminate>);

impl CurvMonomial {
    /// The empty monomial `1`.
    pub fn one() -> CurvMonomial {
        CurvMonomial(Vec::new())
    }

    /// Build a monomial, sorting its factors.
    pub fn new(mut factors: Vec<CurvatureIndeterminate>) -> CurvMonomial {
        factors.sort_unstable();
        CurvMonomial(factors)
    }

    /// The sorted factor list.
    pub fn factors(&self) -> &[CurvatureIndeterminate] {
        &self.0
    }

    /// Total degree.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &CurvMonomial) -> CurvMonomial {
        let mut factors = self.0.clone();
        factors.extend_from_slice(&other.0);
        CurvMonomial::new(factors)
    }

    /// Whether any factor is an unresolved mixed jet.
    pub fn has_mixed(&self) -> bool {
        self.0
            .iter()
            .any(|f| matches!(f, CurvatureIndeterminate::Mixed(_, _)))
    }
}

impl fmt::Display for CurvMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, factor) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}
