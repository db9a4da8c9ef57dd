//! Structural laws for recursion outputs.
//!
//! Every symbol produced by the two recursions obeys three laws, provable by
//! induction on the recursion depth:
//!
//! * **homogeneity** — each term of a symbol of order `o` has
//!   `deg(xi) + e - l = o`;
//! * **weight** — each term of the operator symbol `r_o` has total weight
//!   `1 - o`, and each term of the parametrix symbol `s_o` has total weight
//!   `-o - 1` (resolvent factors, `l >= 1`, mark the parametrix family);
//! * **parity** — total weight + normal weight + `xi`-degree is even.
//!
//! [`structure_audit`] re-checks all three on a finished sum, reporting one
//! violation per failed check per term. It is a pure verifier: the
//! recursions never consult it.

use std::fmt;

use super::sum::SymbolSum;

/// One failed structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `deg(xi) + e - l` differs from the symbol order.
    Order {
        /// Value found on the term.
        found: i64,
    },
    /// Total jet weight differs from the value the weight law demands.
    Weight {
        /// Value found on the term.
        found: u32,
        /// Value demanded by the weight law.
        expected: i64,
    },
    /// Total weight + normal weight + `xi`-degree is odd.
    Parity {
        /// The offending (odd) sum.
        sum: u32,
    },
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::Order { found } => write!(f, "order {found}"),
            ViolationKind::Weight { found, expected } => {
                write!(f, "weight {found} (expected {expected})")
            }
            ViolationKind::Parity { sum } => write!(f, "odd parity sum {sum}"),
        }
    }
}

/// A violation, carrying a rendered copy of the offending term.
#[derive(Clone, Debug)]
pub struct AuditViolation {
    /// Dump line of the term that failed.
    pub term: String,
    /// Which law it broke.
    pub kind: ViolationKind,
}

impl fmt::Display for AuditViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.term)
    }
}

/// Outcome of a structural audit.
#[derive(Clone, Debug)]
pub struct AuditReport {
    /// Symbol order the sum was audited against.
    pub expected_order: i64,
    /// Number of terms examined.
    pub checked_terms: usize,
    /// All violations found (empty = pass).
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    /// Whether every term passed every check.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Audit a recursion output claimed to have symbol order `expected_order`.
///
/// Terms with resolvent factors are held to the parametrix weight law
/// (`weight = -order - 1`), terms without to the operator weight law
/// (`weight = 1 - order`); the operator recursion never produces resolvent
/// factors and every parametrix term retains at least one, so the factor
/// count identifies the family.
pub fn structure_audit(sum: &SymbolSum, expected_order: i64) -> AuditReport {
    let mut violations = Vec::new();
    for t in sum.terms() {
        let order = t.symbol_order();
        if order != expected_order {
            violations.push(AuditViolation {
                term: t.to_string(),
                kind: ViolationKind::Order { found: order },
            });
        }
        let expected_weight = if t.resolvent_exp == 0 {
            1 - expected_order
        } else {
            -expected_order - 1
        };
        if i64::from(t.total_weight()) != expected_weight {
            violations.push(AuditViolation {
                term: t.to_string(),
                kind: ViolationKind::Weight {
                    found: t.total_weight(),
                    expected: expected_weight,
                },
            });
        }
        if !t.parity_even() {
            violations.push(AuditViolation {
                term: t.to_string(),
                kind: ViolationKind::Parity {
                    sum: t.total_weight() + t.normal_weight() + t.xi_degree(),
                },
            });
        }
    }
    AuditReport {
        expected_order,
        checked_terms: sum.len(),
        violations,
    }
}
