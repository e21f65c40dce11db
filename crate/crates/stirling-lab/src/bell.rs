//! Partial Bell polynomials by independent routes, the higher-derivative
//! chain-rule engine built on them, and the Lah-number identities for
//! derivatives of exp(±1/t).

use num_traits::{One, Zero};

use crate::exact::{
    alt_sign, binom_rational, binom_standard, factorial, Integer, Rational,
};
use crate::series::RationalSeries;
use crate::table::SignedStirlingTable;

/// Argument sequence `x1..xm` for partial Bell polynomials (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellArgs {
    values: Vec<Rational>,
}

impl BellArgs {
    pub fn new(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty(), "BellArgs needs at least x1");
        Self { values }
    }

    pub fn from_fn(m: usize, f: impl Fn(usize) -> Rational) -> Self {
        Self::new((1..=m).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `x_i`, 1-based.
    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i - 1]
    }
}

/// One term of the Bell sum: multiplicities `l_1..l_m` with
/// `sum i*l_i = n` and `sum l_i = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTerm {
    pub multiplicities: Vec<usize>,
}

/// All multiplicity vectors for `B(n, k)`, in lexicographic order over
/// `(l_1, l_2, ...)`. Vectors have length `n - k + 1` (parts larger than
/// `n - k + 1` cannot occur with `k` parts).
pub fn partition_terms(n: usize, k: usize) -> Vec<PartitionTerm> {
    assert!(k <= n, "partition_terms requires k <= n");
    if n == 0 {
        return vec![PartitionTerm {
            multiplicities: vec![],
        }];
    }
    if k == 0 {
        return vec![];
    }
    let m = n - k + 1;
    let mut out = Vec::new();
    let mut current = vec![0usize; m];
    fn rec(
        i: usize,
        m: usize,
        rem_n: usize,
        rem_k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<PartitionTerm>,
    ) {
        if i > m {
            if rem_n == 0 && rem_k == 0 {
                out.push(PartitionTerm {
                    multiplicities: current.clone(),
                });
            }
            return;
        }
        // remaining parts all have size in [i, m]
        if rem_n < rem_k * i || rem_n > rem_k * m {
            return;
        }
        let max_l = rem_n.checked_div(i).map_or(0, |q| rem_k.min(q));
        for l in 0..=max_l {
            current[i - 1] = l;
            rec(i + 1, m, rem_n - i * l, rem_k - l, current, out);
        }
        current[i - 1] = 0;
    }
    rec(1, m, n, k, &mut current, &mut out);
    out
}

/// `B(n,k)(x1,...,x_{n-k+1})` by direct enumeration of multiplicative
/// partitions: `sum n!/(prod l_i!) * prod (x_i/i!)^{l_i}`.
pub fn bell_partitions(n: usize, k: usize, args: &BellArgs) -> Rational {
    assert!(k <= n, "bell_partitions requires k <= n, got ({n},{k})");
    if n == 0 {
        return Rational::one();
    }
    if k == 0 {
        return Rational::zero();
    }
    let m = n - k + 1;
    assert!(
        args.len() >= m,
        "bell args too short: B({n},{k}) needs x1..x{m}, got {}",
        args.len()
    );
    // scaled arguments x_i / i!
    let scaled: Vec<Rational> = (1..=m)
        .map(|i| args.get(i) / Rational::from_integer(factorial(i)))
        .collect();
    let mut total = Rational::zero();
    // walk part sizes from largest to smallest, carrying prod (x_i/i!)^{l_i} / l_i!
    fn rec(
        i: usize,
        rem_n: usize,
        rem_k: usize,
        prod: Rational,
        scaled: &[Rational],
        total: &mut Rational,
    ) {
        if rem_k == 0 {
            if rem_n == 0 {
                *total += prod;
            }
            return;
        }
        if i == 0 || rem_n < rem_k || rem_n > i * rem_k {
            return;
        }
        let x = &scaled[i - 1];
        if x.is_zero() {
            rec(i - 1, rem_n, rem_k, prod, scaled, total);
            return;
        }
        let max_l = rem_k.min(rem_n / i);
        let mut p = prod;
        for l in 0..=max_l {
            if l > 0 {
                p = p * x / Rational::from_integer(Integer::from(l));
            }
            rec(i - 1, rem_n - i * l, rem_k - l, p.clone(), scaled, total);
        }
    }
    rec(m, n, k, Rational::one(), &scaled, &mut total);
    total * Rational::from_integer(factorial(n))
}

/// `B(n,k)` via the generating identity: `n!/k!` times the coefficient of
/// `t^n` in `(sum_m x_m t^m / m!)^k`, with exact series arithmetic at
/// truncation order `n`.
pub fn bell_series(n: usize, k: usize, args: &BellArgs) -> Rational {
    assert!(k <= n, "bell_series requires k <= n, got ({n},{k})");
    if n == 0 {
        return Rational::one();
    }
    if k == 0 {
        return Rational::zero();
    }
    assert!(
        args.len() > n - k,
        "bell args too short for B({n},{k})"
    );
    let mut coeffs = vec![Rational::zero(); n + 1];
    for m in 1..=n.min(args.len()) {
        coeffs[m] = args.get(m) / Rational::from_integer(factorial(m));
    }
    let series = RationalSeries::from_coeffs(coeffs).pow(k);
    series.coeff(n) * Rational::from_integer(factorial(n))
        / Rational::from_integer(factorial(k))
}

/// Arguments `x_i = i!/(i + 1)` of the fractional special value.
pub fn fractional_args(m: usize) -> BellArgs {
    BellArgs::from_fn(m, |i| {
        Rational::new(factorial(i), Integer::from(i as i64 + 1))
    })
}

/// Arguments `(0, 1!, 2!, ...)`: `x_i = (i - 1)!` for `i >= 2`, `x_1 = 0`.
pub fn zero_factorial_args(m: usize) -> BellArgs {
    BellArgs::from_fn(m, |i| {
        if i == 1 {
            Rational::zero()
        } else {
            Rational::from_integer(factorial(i - 1))
        }
    })
}

/// Factorial arguments `x_i = i!`.
pub fn factorial_args(m: usize) -> BellArgs {
    BellArgs::from_fn(m, |i| Rational::from_integer(factorial(i)))
}

/// `B(n,k)(1!/2, 2!/3, ...)` via the alternating Stirling sum
/// `(-1)^(n-k) (1/k!) sum_{m=1}^{k} (-1)^m C(k,m)/C(n+m,n) s(n+m,m)`.
/// The table must cover rows up to `n + k`.
pub fn bell_fractional_closed_form(
    n: usize,
    k: usize,
    table: &SignedStirlingTable,
) -> Rational {
    assert!(1 <= k && k <= n, "requires 1 <= k <= n");
    assert!(
        table.max_n() >= n + k,
        "table too small: need rows up to {}",
        n + k
    );
    let mut sum = Rational::zero();
    for m in 1..=k {
        let term = Rational::from_integer(
            alt_sign(m as i64) * binom_standard(k as i64, m as i64),
        ) / binom_rational((n + m) as i64, n as i64)
            * Rational::from_integer(table.get(n + m, m).clone());
        sum += term;
    }
    sum * Rational::new(alt_sign((n - k) as i64), factorial(k))
}

/// `B(n,k)(0, 1!, ..., (n-k)!)` via
/// `(-1)^(n-k) C(n,k) sum_{m=0}^{k} (-1)^m C(k,m)/C(n-m,n-k) s(n-m,k-m)`.
pub fn bell_zero_factorial_closed_form(
    n: usize,
    k: usize,
    table: &SignedStirlingTable,
) -> Rational {
    assert!(1 <= k && k <= n, "requires 1 <= k <= n");
    assert!(table.max_n() >= n, "table too small: need rows up to {n}");
    let mut sum = Rational::zero();
    for m in 0..=k {
        let term = Rational::from_integer(
            alt_sign(m as i64) * binom_standard(k as i64, m as i64),
        ) / binom_rational((n - m) as i64, (n - k) as i64)
            * Rational::from_integer(table.get(n - m, k - m).clone());
        sum += term;
    }
    sum * Rational::from_integer(alt_sign((n - k) as i64) * binom_standard(n as i64, k as i64))
}

/// `B(n,k)(1!, 2!, ...) = C(n,k) C(n-1,k-1) (n-k)!`.
pub fn bell_factorial_closed_form(n: usize, k: usize) -> Integer {
    assert!(1 <= k && k <= n, "requires 1 <= k <= n");
    binom_standard(n as i64, k as i64)
        * binom_standard(n as i64 - 1, k as i64 - 1)
        * factorial(n - k)
}

/// `a_{i,k} = C(i,k) C(i-1,k) k!`; `a_{n,n-k}` are the Lah numbers `L(n,k)`.
pub fn lah_a(i: usize, k: usize) -> Integer {
    assert!(i >= 1 && k < i, "lah_a requires 1 <= i, 0 <= k <= i-1");
    binom_standard(i as i64, k as i64) * binom_standard(i as i64 - 1, k as i64) * factorial(k)
}

/// n-th derivative of a composition `f(h(t))`:
/// `sum_{k=1}^{n} f^(k)(h(t)) B(n,k)(h', ..., h^(n-k+1))`.
///
/// `f_derivs[j]` is `f^(j+1)` evaluated at `h(t0)`, `h_derivs[j]` is
/// `h^(j+1)(t0)`; both must supply at least `n` derivatives.
pub fn faa_di_bruno(n: usize, f_derivs: &[Rational], h_derivs: &[Rational]) -> Rational {
    assert!(n >= 1, "faa_di_bruno requires n >= 1");
    assert!(f_derivs.len() >= n, "need f^(1)..f^({n})");
    assert!(h_derivs.len() >= n, "need h^(1)..h^({n})");
    let mut total = Rational::zero();
    for k in 1..=n {
        let args = BellArgs::new(h_derivs[..n - k + 1].to_vec());
        total += &f_derivs[k - 1] * bell_partitions(n, k, &args);
    }
    total
}

/// Limit at 0 of the l-th derivative of the double-integral kernel:
/// `(-1)^l l!/(l + 1)` for `l >= 1`.
pub fn h_derivative_at_zero(l: usize) -> Rational {
    assert!(l >= 1, "h_derivative_at_zero requires l >= 1; h(0) = 1 is the caller's base case");
    Rational::new(alt_sign(l as i64) * factorial(l), Integer::from(l as i64 + 1))
}

/// Argument sequence `h'(0), h''(0), ..., h^(m)(0)` as [`BellArgs`].
pub fn h_derivative_args(m: usize) -> BellArgs {
    BellArgs::from_fn(m, h_derivative_at_zero)
}

/// Bracket coefficients of the i-th derivative of `exp(1/t)` (or
/// `exp(-1/t)` when `negative_argument`): the coefficient of `t^k`,
/// `k = 0..i-1`, is `a_{i,k}` resp. `(-1)^k a_{i,k}`.
pub fn exp_reciprocal_coeffs(i: usize, negative_argument: bool) -> Vec<Integer> {
    assert!(i >= 1, "exp_reciprocal_coeffs requires i >= 1");
    (0..i)
        .map(|k| {
            let a = lah_a(i, k);
            if negative_argument {
                alt_sign(k as i64) * a
            } else {
                a
            }
        })
        .collect()
}
