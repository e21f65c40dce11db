//! Exact arithmetic foundation: big integers, normalized rationals,
//! factorials, and the extended binomial conventions used by the
//! single-sum diagonal relation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer. Every table entry and binomial
/// coefficient in this crate is one of these; nothing is ever rounded.
pub type Integer = BigInt;

/// Exact fraction with positive denominator and gcd-reduced terms.
/// `BigRational::new` normalizes on construction, so equality is structural.
pub type Rational = BigRational;

/// `n!` with `0! = 1`.
pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Standard binomial coefficient `C(n, k)` for `n >= 0`.
///
/// Returns 0 when `k < 0` or `k > n`. Panics on `n < 0`; callers that
/// need a negative upper index go through [`binom_extended`].
pub fn binom_standard(n: i64, k: i64) -> Integer {
    assert!(n >= 0, "binom_standard requires n >= 0, got n = {n}");
    if k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut num = Integer::one();
    let mut den = Integer::one();
    for i in 1..=k {
        num *= n - k + i;
        den *= i;
    }
    num / den
}

/// Binomial coefficient extended to arbitrary integer arguments.
///
/// For `a >= 0` this is [`binom_standard`]. For `a < 0, b >= 0` it is the
/// falling-factorial value `a(a-1)...(a-b+1)/b!`. For `a < 0, b < 0` the
/// symmetry `C(a, b) = C(a, a-b)` is applied once: if `a - b >= 0` the
/// falling-factorial rule takes over, otherwise the value is 0.
///
/// This reproduces the conventions `C(0,0) = 1`, `C(-1,-1) = 1` and
/// `C(p,q) = 0` for `p >= 0 > q`, and yields `C(-1,-2) = -1`.
pub fn binom_extended(a: i64, b: i64) -> Integer {
    if a >= 0 {
        return binom_standard(a, b);
    }
    if b >= 0 {
        return falling_over_factorial(a, b);
    }
    let c = a - b;
    if c >= 0 {
        falling_over_factorial(a, c)
    } else {
        Integer::zero()
    }
}

/// `a(a-1)...(a-b+1) / b!` for `b >= 0`; always an exact integer.
fn falling_over_factorial(a: i64, b: i64) -> Integer {
    debug_assert!(b >= 0);
    let mut num = Integer::one();
    for i in 0..b {
        num *= a - i;
    }
    let den = factorial(b as usize);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

/// `C(n, k)` as a [`Rational`], handy in formulas that divide by binomials.
pub fn binom_rational(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom_standard(n, k))
}

/// Build a rational from machine-integer numerator and denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Rational with the given integer value.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(Integer::from(value))
}

/// `(-1)^e` as an [`Integer`].
pub fn alt_sign(e: i64) -> Integer {
    if e.rem_euclid(2) == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Exact integer division; panics if the division leaves a remainder,
/// which in this crate always signals a broken identity.
pub fn exact_div(num: &Integer, den: &Integer) -> Integer {
    let (q, r) = num_integer::Integer::div_rem(num, den);
    assert!(
        r.is_zero(),
        "non-exact division {num}/{den}: a supposedly integral identity broke"
    );
    q
}

/// Converts a rational known to be integral into an [`Integer`]; panics
/// otherwise (same "fail loudly" contract as [`exact_div`]).
pub fn rational_to_integer(value: &Rational) -> Integer {
    assert!(
        value.denom().is_one(),
        "expected an integral value, got {value}"
    );
    value.numer().clone()
}

/// True iff the rational is a (possibly negative) integer.
pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Parse a CLI rational literal: optional sign, `p` or `p/q`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    match text.split_once('/') {
        Some((num, den)) => {
            let num: Integer = num.parse().ok()?;
            let den: Integer = den.parse().ok()?;
            if den.is_zero() || den.is_negative() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => {
            let num: Integer = text.parse().ok()?;
            Some(Rational::from_integer(num))
        }
    }
}
