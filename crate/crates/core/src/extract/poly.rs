//! Polynomials in curvature indeterminates with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::curvature::{canonical_riemann, CurvMonomial, CurvatureIndeterminate};
use crate::symbol::Rat;

/// A canonical polynomial in curvature indeterminates.
///
/// The overall prefactor `V_n (2π)^{-(n-1)}`, with `V_n = Vol(S^{n-2})`, is
/// carried *implicitly*: the body maps monomials to the exact rational that
/// multiplies the prefactor. Gamma factors at integer arguments have been
/// folded into the rationals, so equality of bodies is exact equality of
/// invariants.
///
/// Canonical means: every Ricci factor is expanded into Riemann components,
/// every Riemann factor is in canonical index position (with its sign
/// absorbed), factors are sorted, and zero coefficients are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurvaturePolynomial {
    dim: u32,
    body: BTreeMap<CurvMonomial, Rat>,
}

impl CurvaturePolynomial {
    /// The zero polynomial.
    pub fn zero(dim: u32) -> CurvaturePolynomial {
        CurvaturePolynomial {
            dim,
            body: BTreeMap::new(),
        }
    }

    /// Build a polynomial from raw (monomial, coefficient) pairs:
    /// canonicalizes Riemann factors, expands Ricci contractions over the
    /// tangential index range of `dim`, merges, and drops zeros.
    pub fn from_raw(
        dim: u32,
        raw: impl IntoIterator<Item = (CurvMonomial, Rat)>,
    ) -> CurvaturePolynomial {
        let mut body: BTreeMap<CurvMonomial, Rat> = BTreeMap::new();
        for (mono, coeff) in raw {
            if coeff.is_zero() {
                continue;
            }
            for (m, c) in canonicalize_monomial(&mono, dim) {
                let entry = body.entry(m).or_insert_with(Rat::zero);
                *entry += coeff.clone() * c;
            }
        }
        body.retain(|_, c| !c.is_zero());
        CurvaturePolynomial { dim, body }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// The canonical body.
    pub fn body(&self) -> &BTreeMap<CurvMonomial, Rat> {
        &self.body
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.body.is_empty()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, mono: &CurvMonomial) -> Rat {
        self.body.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    /// Sum of two polynomials.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn add(&self, other: &CurvaturePolynomial) -> CurvaturePolynomial {
        assert_eq!(self.dim, other.dim, "polynomial dimension mismatch");
        let mut body = self.body.clone();
        for (m, c) in &other.body {
            let entry = body.entry(m.clone()).or_insert_with(Rat::zero);
            *entry += c.clone();
        }
        body.retain(|_, c| !c.is_zero());
        CurvaturePolynomial {
            dim: self.dim,
            body,
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> CurvaturePolynomial {
        if c.is_zero() {
            return CurvaturePolynomial::zero(self.dim);
        }
        let body = self
            .body
            .iter()
            .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
            .collect();
        CurvaturePolynomial {
            dim: self.dim,
            body,
        }
    }

    /// Product of two polynomials.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn mul(&self, other: &CurvaturePolynomial) -> CurvaturePolynomial {
        assert_eq!(self.dim, other.dim, "polynomial dimension mismatch");
        let mut raw = Vec::new();
        for (ma, ca) in &self.body {
            for (mb, cb) in &other.body {
                raw.push((ma.mul(mb), ca.clone() * cb.clone()));
            }
        }
        CurvaturePolynomial::from_raw(self.dim, raw)
    }

    /// Evaluate the body numerically under an assignment of indeterminates.
    /// The implicit prefactor is *not* applied.
    pub fn evaluate_body(&self, assign: &dyn Fn(&CurvatureIndeterminate) -> f64) -> f64 {
        let mut total = 0.0;
        for (m, c) in &self.body {
            let mut v = rat_to_f64(c);
            for f in m.factors() {
                v *= assign(f);
            }
            total += v;
        }
        total
    }
}

impl fmt::Display for CurvaturePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_empty() {
            return writeln!(f, "0");
        }
        for (m, c) in &self.body {
            writeln!(f, "{c}  *  {m}")?;
        }
        Ok(())
    }
}

/// Expand Ricci factors and canonicalize Riemann factors of a single
/// monomial. Returns the resulting (monomial, sign/multiplicity) pairs;
/// empty when the monomial is forced to vanish.
pub(crate) fn canonicalize_monomial(mono: &CurvMonomial, dim: u32) -> Vec<(CurvMonomial, Rat)> {
    let max_tan = (dim - 1) as u8;
    // Work list of partially rebuilt monomials with accumulated rational
    // multiplier.
    let mut acc: Vec<(Vec<CurvatureIndeterminate>, Rat)> =
        vec![(Vec::new(), Rat::from_integer(1.into()))];
    for factor in mono.factors() {
        match factor {
            CurvatureIndeterminate::Riem(a, b, c, d) => match canonical_riemann(*a, *b, *c, *d) {
                None => return Vec::new(),
                Some((canon, sign)) => {
                    for (fs, mult) in &mut acc {
                        fs.push(canon);
                        if sign < 0 {
                            *mult = -mult.clone();
                        }
                    }
                }
            },
            CurvatureIndeterminate::Ric(a, b) => {
                // Ric(a,b) = sum_c Riem(c,a,c,b); keep only nonvanishing
                // canonical components.
                let mut expansion = Vec::new();
                for c in 1..=max_tan {
                    if let Some((canon, sign)) = canonical_riemann(c, *a, c, *b) {
                        expansion.push((canon, sign));
                    }
                }
                let mut next = Vec::new();
                for (fs, mult) in acc {
                    for (canon, sign) in &expansion {
                        let mut fs = fs.clone();
                        fs.push(*canon);
                        let mult = if *sign < 0 {
                            -mult.clone()
                        } else {
                            mult.clone()
                        };
                        next.push((fs, mult));
                    }
                }
                acc = next;
                if acc.is_empty() {
                    return Vec::new();
                }
            }
            other => {
                for (fs, _) in &mut acc {
                    fs.push(*other);
                }
            }
        }
    }
    acc.into_iter()
        .map(|(fs, mult)| (CurvMonomial::new(fs), mult))
        .collect()
}

/// Exact rational to nearest double.
pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    // Round through a high-precision quotient to avoid overflowing f64 on
    // large numerators/denominators.
    let num = r.numer();
    let den = r.denom();
    let fnum = big_to_f64(num);
    let fden = big_to_f64(den);
    fnum / fden
}

fn big_to_f64(b: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(a: u8) -> CurvatureIndeterminate {
        CurvatureIndeterminate::Lambda(a)
    }

    fn rr(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn ricci_expands_to_riemann_contractions() {
        // dim 4 (three tangential directions): Ric(1,1) = Riem(2,1,2,1) +
        // Riem(3,1,3,1) = Riem(1,2,1,2) + Riem(1,3,1,3).
        let p = CurvaturePolynomial::from_raw(
            4,
            vec![(
                CurvMonomial::new(vec![CurvatureIndeterminate::Ric(1, 1)]),
                Rat::from_integer(1.into()),
            )],
        );
        let m12 = CurvMonomial::new(vec![CurvatureIndeterminate::Riem(1, 2, 1, 2)]);
        let m13 = CurvMonomial::new(vec![CurvatureIndeterminate::Riem(1, 3, 1, 3)]);
        assert_eq!(p.body().len(), 2);
        assert_eq!(p.coefficient(&m12), rr(1, 1));
        assert_eq!(p.coefficient(&m13), rr(1, 1));
    }

    #[test]
    fn vanishing_riemann_components_drop_out() {
        let p = CurvaturePolynomial::from_raw(
            3,
            vec![(
                CurvMonomial::new(vec![CurvatureIndeterminate::Riem(1, 1, 2, 2)]),
                rr(5, 1),
            )],
        );
        assert!(p.is_zero());
    }

    #[test]
    fn signs_are_absorbed_into_coefficients() {
        // Riem(1,2,2,1) + Riem(1,2,1,2) = 0.
        let p = CurvaturePolynomial::from_raw(
            3,
            vec![
                (
                    CurvMonomial::new(vec![CurvatureIndeterminate::Riem(1, 2, 2, 1)]),
                    rr(1, 1),
                ),
                (
                    CurvMonomial::new(vec![CurvatureIndeterminate::Riem(1, 2, 1, 2)]),
                    rr(1, 1),
                ),
            ],
        );
        assert!(p.is_zero());
    }

    #[test]
    fn ring_operations() {
        let sum_lam = |dim: u32| {
            CurvaturePolynomial::from_raw(
                dim,
                (1..dim as u8).map(|a| (CurvMonomial::new(vec![lam(a)]), rr(1, 1))),
            )
        };
        // (lam1 + lam2)^2 = lam1^2 + 2 lam1 lam2 + lam2^2 at dim 3.
        let s = sum_lam(3);
        let sq = s.mul(&s);
        assert_eq!(
            sq.coefficient(&CurvMonomial::new(vec![lam(1), lam(1)])),
            rr(1, 1)
        );
        assert_eq!(
            sq.coefficient(&CurvMonomial::new(vec![lam(1), lam(2)])),
            rr(2, 1)
        );
        let zero = sq.add(&sq.scale(&rr(-1, 1)));
        assert!(zero.is_zero());
    }

    #[test]
    fn evaluates_numerically() {
        // 1/2 lam1 lam2 at lam = (2, 3) -> 3.
        let p = CurvaturePolynomial::from_raw(
            3,
            vec![(CurvMonomial::new(vec![lam(1), lam(2)]), rr(1, 2))],
        );
        let v = p.evaluate_body(&|f| match f {
            CurvatureIndeterminate::Lambda(1) => 2.0,
            CurvatureIndeterminate::Lambda(2) => 3.0,
            _ => 0.0,
        });
        assert!((v - 3.0).abs() < 1e-15);
    }
}
