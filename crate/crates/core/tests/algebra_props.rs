//! Property tests for the symbol term calculus.
//!
//! The calculus is a commutative ring of finite sums with an exact
//! derivation in every base and cotangent direction. These properties are
//! what the recursions lean on — each is checked here on randomized small
//! symbols over the three-dimensional half space.

use num_complex::Complex;
use num_rational::BigRational;
use proptest::prelude::*;
use steklov_heat::symbol::DiffDir;
use steklov_heat::{Dir, Jet, SymbolSum, SymbolTerm};

const DIM: u32 = 3;

fn coeff_strategy() -> impl Strategy<Value = Complex<BigRational>> {
    ((-9i64..=9), (1i64..=9), (-9i64..=9), (1i64..=9)).prop_map(|(rn, rd, in_, id)| {
        Complex::new(
            BigRational::new(rn.into(), rd.into()),
            BigRational::new(in_.into(), id.into()),
        )
    })
}

fn dir_strategy() -> impl Strategy<Value = Dir> {
    prop_oneof![Just(Dir::Tan(1)), Just(Dir::Tan(2)), Just(Dir::Nor)]
}

fn jet_strategy() -> impl Strategy<Value = Jet> {
    let derivs = || prop::collection::vec(dir_strategy(), 0..=2);
    let component = || (1u8..=2, 1u8..=2);
    prop_oneof![
        (component(), derivs()).prop_map(|((a, b), d)| Jet::inv_metric(a, b, &d)),
        (component(), derivs()).prop_map(|((a, b), d)| Jet::metric(a, b, &d)),
        derivs().prop_map(|d| Jet::log_det(&d)),
    ]
}

fn term_strategy() -> impl Strategy<Value = SymbolTerm> {
    (
        coeff_strategy(),
        -4i32..=4,
        0u32..=3,
        prop::collection::vec(1u8..=2, 0..=3),
        prop::collection::vec(jet_strategy(), 0..=2),
    )
        .prop_map(|(c, e, l, xi, jets)| SymbolTerm::new(c, e, l, xi, jets))
}

fn sum_strategy() -> impl Strategy<Value = SymbolSum> {
    prop::collection::vec(term_strategy(), 1..=4)
        .prop_map(|terms| SymbolSum::from_terms(DIM, terms))
}

fn diff_dirs() -> [DiffDir; 4] {
    [
        DiffDir::Space(Dir::Tan(1)),
        DiffDir::Space(Dir::Nor),
        DiffDir::Xi(1),
        DiffDir::Xi(2),
    ]
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(
        a in sum_strategy(), b in sum_strategy(), c in sum_strategy()
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn subtraction_is_addition_of_the_negation(
        a in sum_strategy(), b in sum_strategy()
    ) {
        prop_assert_eq!(a.sub(&b), a.add(&b.neg()));
        prop_assert!(a.sub(&a).is_empty());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in sum_strategy(), b in sum_strategy(), c in sum_strategy()
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes_over_addition(
        a in sum_strategy(), b in sum_strategy(), c in sum_strategy()
    ) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn one_is_the_multiplicative_identity(a in sum_strategy()) {
        prop_assert_eq!(a.mul(&SymbolSum::one(DIM)), a.clone());
        prop_assert!(a.mul(&SymbolSum::zero(DIM)).is_empty());
    }

    #[test]
    fn differentiation_satisfies_the_leibniz_rule(
        a in sum_strategy(), b in sum_strategy()
    ) {
        for dir in diff_dirs() {
            let lhs = a.mul(&b).diff(dir);
            let rhs = a.diff(dir).mul(&b).add(&a.mul(&b.diff(dir)));
            prop_assert_eq!(lhs, rhs, "direction {:?}", dir);
        }
    }

    #[test]
    fn differentiation_is_linear(a in sum_strategy(), b in sum_strategy()) {
        for dir in diff_dirs() {
            prop_assert_eq!(
                a.add(&b).diff(dir),
                a.diff(dir).add(&b.diff(dir)),
                "direction {:?}", dir
            );
        }
    }

    #[test]
    fn partial_derivatives_commute(a in sum_strategy()) {
        let dirs = diff_dirs();
        for (i, d1) in dirs.iter().enumerate() {
            for d2 in dirs.iter().skip(i + 1) {
                prop_assert_eq!(
                    a.diff(*d1).diff(*d2),
                    a.diff(*d2).diff(*d1),
                    "directions {:?}, {:?}", d1, d2
                );
            }
        }
    }

    #[test]
    fn canonicalization_is_idempotent(a in sum_strategy()) {
        let rebuilt = SymbolSum::from_terms(DIM, a.terms().to_vec());
        prop_assert_eq!(rebuilt, a.clone());
        // Scaling by one and by zero behave as expected.
        let one = Complex::new(BigRational::from_integer(1.into()), BigRational::from_integer(0.into()));
        let zero = Complex::new(BigRational::from_integer(0.into()), BigRational::from_integer(0.into()));
        prop_assert_eq!(a.scale(&one), a.clone());
        prop_assert!(a.scale(&zero).is_empty());
    }
}
