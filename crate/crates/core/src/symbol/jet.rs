//! Jet indeterminates: Taylor data of the metric in boundary normal
//! coordinates.
//!
//! In boundary normal coordinates around a point `P` of the boundary, the
//! metric splits as `g = g_{ab}(x) dx^a dx^b + (dx^n)^2` with `a, b` ranging
//! over the tangential directions `1..n-1` and `x^n` the inward normal
//! parameter. The symbol calculus treats every partial derivative
//! `∂_D g^{ab}`, `∂_D g_{ab}`, `∂_D log det g` as an opaque commuting
//! indeterminate — a [`Jet`] — identified by its family, component, and a
//! multiset of derivative directions. No value is assigned until the final
//! evaluation at `P`.

use std::fmt;

/// A coordinate direction: tangential `x^a` (1-based, `1..n-1`) or the
/// inward normal `x^n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dir {
    /// Tangential direction with 1-based index.
    Tan(u8),
    /// The inward normal direction.
    Nor,
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dir::Tan(a) => write!(f, "{a}"),
            Dir::Nor => write!(f, "n"),
        }
    }
}

/// Which coefficient family a jet differentiates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum JetFamily {
    /// Inverse-metric entry `g^{ab}` of the tangential block, `a <= b`.
    InvMetric(u8, u8),
    /// Metric entry `g_{ab}` of the tangential block, `a <= b`.
    Metric(u8, u8),
    /// `log det g` (the log of the squared volume element).
    LogDet,
}

/// A single jet indeterminate: a family member together with a sorted
/// multiset of derivative directions (empty = the coefficient itself).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Jet {
    family: JetFamily,
    derivs: Vec<Dir>,
}

impl Jet {
    /// Jet of the inverse metric `g^{ab}`. Indices are symmetrized to
    /// `a <= b`.
    pub fn inv_metric(a: u8, b: u8, derivs: &[Dir]) -> Jet {
        Jet::new(JetFamily::InvMetric(a.min(b), a.max(b)), derivs)
    }

    /// Jet of the metric `g_{ab}`. Indices are symmetrized to `a <= b`.
    pub fn metric(a: u8, b: u8, derivs: &[Dir]) -> Jet {
        Jet::new(JetFamily::Metric(a.min(b), a.max(b)), derivs)
    }

    /// Jet of `log det g`.
    pub fn log_det(derivs: &[Dir]) -> Jet {
        Jet::new(JetFamily::LogDet, derivs)
    }

    fn new(family: JetFamily, derivs: &[Dir]) -> Jet {
        let mut derivs = derivs.to_vec();
        derivs.sort_unstable();
        Jet { family, derivs }
    }

    /// The coefficient family of this jet.
    pub fn family(&self) -> JetFamily {
        self.family
    }

    /// The sorted multiset of derivative directions.
    pub fn derivs(&self) -> &[Dir] {
        &self.derivs
    }

    /// Total number of derivatives (the weight of the jet).
    pub fn weight(&self) -> u32 {
        self.derivs.len() as u32
    }

    /// Number of normal derivatives.
    pub fn normal_weight(&self) -> u32 {
        self.derivs.iter().filter(|d| **d == Dir::Nor).count() as u32
    }

    /// This jet with one more derivative applied.
    pub fn with_deriv(&self, dir: Dir) -> Jet {
        let mut derivs = self.derivs.clone();
        let pos = derivs.partition_point(|d| *d <= dir);
        derivs.insert(pos, dir);
        Jet {
            family: self.family,
            derivs,
        }
    }

    /// Largest tangential index mentioned by the component (for dimension
    /// validation).
    pub fn max_component_index(&self) -> u8 {
        match self.family {
            JetFamily::InvMetric(_, b) | JetFamily::Metric(_, b) => b,
            JetFamily::LogDet => 0,
        }
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            JetFamily::InvMetric(a, b) => write!(f, "U({a},{b})")?,
            JetFamily::Metric(a, b) => write!(f, "G({a},{b})")?,
            JetFamily::LogDet => write!(f, "Ld")?,
        }
        if !self.derivs.is_empty() {
            write!(f, "@[")?;
            for (k, d) in self.derivs.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{d}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
