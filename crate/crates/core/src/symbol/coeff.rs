//! Exact complex-rational scalars for the symbol calculus.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Complex scalar with exact rational real and imaginary parts.
pub type Coeff = Complex<Rat>;

/// `n/d` as an exact rational.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Purely real coefficient.
pub fn creal(r: Rat) -> Coeff {
    Complex::new(r, Rat::zero())
}

/// Purely imaginary coefficient `r * i`.
pub fn cimag(r: Rat) -> Coeff {
    Complex::new(Rat::zero(), r)
}

/// `n/d` as a real coefficient.
pub fn crat(n: i64, d: i64) -> Coeff {
    creal(rat(n, d))
}

/// Integer as a real coefficient.
pub fn cint(n: i64) -> Coeff {
    creal(rint(n))
}

/// `(-i)^p`.
pub fn neg_i_pow(p: u32) -> Coeff {
    match p % 4 {
        0 => cint(1),
        1 => cimag(-Rat::one()),
        2 => cint(-1),
        _ => cimag(Rat::one()),
    }
}

/// `k!` as a big integer.
pub fn factorial(k: u64) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// `k!` as an exact rational.
pub fn factorial_rat(k: u64) -> Rat {
    Rat::from_integer(factorial(k))
}

/// Render a coefficient exactly, e.g. `1`, `-3/2`, `i`, `-1/2*i`, `1+2*i`.
pub fn fmt_coeff(c: &Coeff) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let imag_part = |im: &Rat, leading: bool| -> String {
        let mag = im.abs();
        let body = if mag.is_one() {
            "i".into()
        } else {
            format!("{mag}*i")
        };
        match (im.is_negative(), leading) {
            (true, _) => format!("-{body}"),
            (false, true) => body,
            (false, false) => format!("+{body}"),
        }
    };
    if c.im.is_zero() {
        format!("{}", c.re)
    } else if c.re.is_zero() {
        imag_part(&c.im, true)
    } else {
        format!("{}{}", c.re, imag_part(&c.im, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_exact_coefficients() {
        assert_eq!(fmt_coeff(&cint(0)), "0");
        assert_eq!(fmt_coeff(&crat(-3, 2)), "-3/2");
        assert_eq!(fmt_coeff(&cimag(rint(1))), "i");
        assert_eq!(fmt_coeff(&cimag(rat(-1, 2))), "-1/2*i");
        assert_eq!(fmt_coeff(&Complex::new(rint(1), rint(2))), "1+2*i");
        assert_eq!(fmt_coeff(&Complex::new(rat(1, 3), rat(-1, 2))), "1/3-1/2*i");
    }

    #[test]
    fn powers_of_minus_i_cycle() {
        assert_eq!(neg_i_pow(0), cint(1));
        assert_eq!(neg_i_pow(1), cimag(rint(-1)));
        assert_eq!(neg_i_pow(2), cint(-1));
        assert_eq!(neg_i_pow(3), cimag(rint(1)));
        assert_eq!(neg_i_pow(4), cint(1));
    }

    #[test]
    fn factorials_are_exact() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(10), BigInt::from(3628800u64));
    }
}
