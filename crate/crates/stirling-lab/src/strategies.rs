//! Independent construction routes for the signed Stirling numbers of the
//! first kind. `s_triangular` is the oracle; every other strategy is
//! judged against it.
//!
//! Routes that involve a division (`s_row_horizontal`, `s_column_vertical`,
//! `s_genfun`, `s_nested_harmonic`, `s_harmonic_recurrence`, `s_faa_route`)
//! panic on a non-exact quotient: that can only mean the identity they
//! implement is broken.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::bell::{bell_partitions, h_derivative_args};
use crate::exact::{
    alt_sign, binom_standard, exact_div, factorial, rational_to_integer, Integer, Rational,
};
use crate::series::RationalSeries;
use crate::table::{SignedStirlingTable, StrategyId};

/// Sign variant for the fifth (vertical-factorial) recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VfSign {
    /// `(-1)^(l-1)`, as printed. Disagrees with the oracle exactly when
    /// the recurrence parameter `n` is even: the two sign choices differ
    /// by the global factor `(-1)^(n+1)`.
    Printed,
    /// `(-1)^(n-l)`; agrees with the oracle everywhere.
    Corrected,
}

/// Full triangle via `s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)`. The oracle.
pub fn s_triangular(max_n: usize) -> SignedStirlingTable {
    let mut table = SignedStirlingTable::seed(StrategyId::Triangular);
    for n in 1..=max_n {
        let prev = table.row(n - 1).to_vec();
        let zero = Integer::zero();
        let mut row = vec![Integer::zero(); n + 1];
        for k in 1..=n {
            let upper = if k < n { &prev[k] } else { &zero };
            row[k] = &prev[k - 1] - upper * (n as i64 - 1);
        }
        table.push_row(row);
    }
    table
}

/// Row `n` (entries `s(n,1)..s(n,n)`) solved from the horizontal relation
/// `(n-k) s(n,k) = sum_{l=k+1}^{n} (-1)^(l-k) C(l,k-1) s(n,l)`,
/// descending from `s(n,n) = 1`. Self-contained within the row.
pub fn s_row_horizontal(n: usize) -> Vec<Integer> {
    assert!(n >= 1);
    let mut vals = vec![Integer::zero(); n + 1];
    vals[n] = Integer::one();
    for k in (1..n).rev() {
        let mut sum = Integer::zero();
        for l in k + 1..=n {
            sum += alt_sign((l - k) as i64) * binom_standard(l as i64, k as i64 - 1) * &vals[l];
        }
        vals[k] = exact_div(&sum, &Integer::from((n - k) as i64));
    }
    vals[1..].to_vec()
}

/// Row `n` (entries `s(n,1)..s(n,n)`) from row `n + 1` via
/// `s(n,k) = sum_{l=k}^{n} s(n+1,l+1) n^(l-k)`.
pub fn s_row_from_above(n: usize, row_above: &[Integer]) -> Vec<Integer> {
    assert_eq!(
        row_above.len(),
        n + 2,
        "row_above must be the full row n+1 = {}",
        n + 1
    );
    (1..=n)
        .map(|k| {
            let mut sum = Integer::zero();
            let mut power = Integer::one();
            for l in k..=n {
                sum += &row_above[l + 1] * &power;
                power *= n as i64;
            }
            sum
        })
        .collect()
}

/// `s(n,k)` from the vertical relation
/// `k s(n,k) = sum_{l=k-1}^{n-1} (-1)^(n-l-1) C(n,l) (n-l-1)! s(l,k-1)`,
/// i.e. the convolution of `ln(1+x)` against column `k-1` of the
/// exponential generating function. Needs table rows `< n`.
pub fn s_column_vertical(n: usize, k: usize, table: &SignedStirlingTable) -> Integer {
    assert!(k >= 1 && k <= n);
    assert!(table.max_n() + 1 >= n, "table must cover rows below {n}");
    let mut sum = Integer::zero();
    for l in k - 1..n {
        sum += alt_sign((n - l - 1) as i64)
            * binom_standard(n as i64, l as i64)
            * factorial(n - l - 1)
            * table.get(l, k - 1);
    }
    exact_div(&sum, &Integer::from(k as i64))
}

/// `s(n+1,k+1)` from the fifth recurrence
/// `s(n+1,k+1) = sum_{l=k}^{n} sign(l) (n!/l!) s(l,k)` under the chosen
/// sign variant. The factor `n!/l!` is the product `(l+1)...(n)`, with the
/// empty product equal to 1.
pub fn s_vertical_factorial(
    n: usize,
    k: usize,
    table: &SignedStirlingTable,
    variant: VfSign,
) -> Integer {
    assert!(k <= n);
    assert!(table.max_n() >= n, "table must cover rows up to {n}");
    let mut sum = Integer::zero();
    let mut ratio = Integer::one(); // n!/l!, built descending from l = n
    for l in (k..=n).rev() {
        let sign = match variant {
            VfSign::Printed => alt_sign(l as i64 - 1),
            VfSign::Corrected => alt_sign((n - l) as i64),
        };
        sum += sign * &ratio * table.get(l, k);
        ratio *= l as i64;
    }
    sum
}

/// Full triangle from the generating function: `s(n,k)` is
/// `n!/k!` times the coefficient of `x^n` in `[ln(1+x)]^k`.
pub fn s_genfun(max_n: usize) -> SignedStirlingTable {
    let log = RationalSeries::log1p(max_n);
    let mut rows: Vec<Vec<Integer>> = (0..=max_n)
        .map(|n| vec![Integer::zero(); n + 1])
        .collect();
    let mut power = RationalSeries::one(max_n);
    let mut k_fact = Integer::one();
    for k in 0..=max_n {
        if k > 0 {
            power = power.mul(&log);
            k_fact *= k as i64;
        }
        for n in k..=max_n {
            let value = power.coeff(n) * Rational::new(factorial(n), k_fact.clone());
            rows[n][k] = rational_to_integer(&value);
        }
    }
    SignedStirlingTable::from_rows(rows, StrategyId::Genfun)
}

/// `s(n,k)` for `2 <= k <= n` as `(-1)^(n-k) (n-1)! e_{k-1}(1, 1/2, ..., 1/(n-1))`,
/// the nested harmonic sums collapsed into one elementary-symmetric DP pass.
pub fn s_nested_harmonic(n: usize, k: usize) -> Integer {
    assert!(2 <= k && k <= n, "s_nested_harmonic requires 2 <= k <= n");
    let mut e = vec![Rational::zero(); k];
    e[0] = Rational::one();
    for j in 1..n {
        let r = Rational::new(Integer::one(), Integer::from(j as i64));
        for t in (1..k).rev() {
            let add = &e[t - 1] * &r;
            e[t] += add;
        }
    }
    let value = &e[k - 1] * Rational::from_integer(alt_sign((n - k) as i64) * factorial(n - 1));
    rational_to_integer(&value)
}

/// Full triangle from the normalized-column recurrence
/// `t(n,k) = sum_{m=k-1}^{n-1} (1/m) t(m,k-1)` with `t(m,1) = 1`, where
/// `t(n,k) = (-1)^(n-k) s(n,k)/(n-1)!`.
pub fn s_harmonic_recurrence(max_n: usize) -> SignedStirlingTable {
    // t[n][k] for 1 <= k <= n
    let mut t: Vec<Vec<Rational>> = (0..=max_n)
        .map(|n| vec![Rational::zero(); n + 1])
        .collect();
    for n in 1..=max_n {
        t[n][1] = Rational::one();
    }
    for k in 2..=max_n {
        for n in k..=max_n {
            let mut sum = Rational::zero();
            for m in k - 1..n {
                sum += &t[m][k - 1] / Rational::from_integer(Integer::from(m as i64));
            }
            t[n][k] = sum;
        }
    }
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for n in 1..=max_n {
        let mut row = vec![Integer::zero(); n + 1];
        let scale = factorial(n - 1);
        for k in 1..=n {
            let value =
                &t[n][k] * Rational::from_integer(alt_sign((n - k) as i64) * scale.clone());
            row[k] = rational_to_integer(&value);
        }
        rows.push(row);
    }
    SignedStirlingTable::from_rows(rows, StrategyId::HarmonicRecurrence)
}

/// Extends the diagonal `n - k = d` beyond its seed: for
/// `k = d+1 ..= k_max` computes, with `n = k + d`,
/// `s(n,k) = sum_{m=1}^{d} sum_{l=1}^{m} (-1)^(m+l) C(n,k-l) C(k-l,m-l) s(d+l,l)`.
///
/// Only the seed entries `s(d+l, l)`, `l = 1..d`, are read; these all
/// carry a strictly smaller `k` on the same diagonal, so the relation is
/// genuinely constructive in the region `2k > n`.
pub fn s_diagonal_extension(
    d: usize,
    k_max: usize,
    seed: &SignedStirlingTable,
) -> Vec<Integer> {
    assert!(d >= 1);
    assert!(k_max > d, "nothing constructive to do for k_max <= d");
    assert!(seed.max_n() >= 2 * d, "seed must cover s(d+l, l) for l <= d");
    (d + 1..=k_max)
        .map(|k| {
            let n = (k + d) as i64;
            let mut sum = Integer::zero();
            for m in 1..=d {
                for l in 1..=m {
                    assert!(l <= d && l < k); // reads stay on smaller-k seed cells
                    sum += alt_sign((m + l) as i64)
                        * binom_standard(n, (k - l) as i64)
                        * binom_standard((k - l) as i64, (m - l) as i64)
                        * seed.get(d + l, l);
                }
            }
            sum
        })
        .collect()
}

/// `s(n,k)` via the integral-representation route: Faa di Bruno applied to
/// `f(v) = v^k` composed with the kernel `h`, using only the exact
/// derivative limits `h^(l)(0) = (-1)^l l!/(l+1)` and `h(0) = 1`:
/// `s(n,k) = C(n,k) sum_{m=1}^{min(k,n-k)} (k!/(k-m)!) B(n-k,m)(h'(0), ...)`.
pub fn s_faa_route(n: usize, k: usize) -> Integer {
    let mut cache = FaaRouteCache::new();
    cache.stirling(n, k)
}

/// Memoizes the Bell-polynomial values `B(d, m)` at the fixed h-derivative
/// arguments, which depend only on `(d, m)`.
pub struct FaaRouteCache {
    bell: HashMap<(usize, usize), Rational>,
}

impl FaaRouteCache {
    pub fn new() -> Self {
        Self {
            bell: HashMap::new(),
        }
    }

    fn bell_h(&mut self, d: usize, m: usize) -> Rational {
        if let Some(v) = self.bell.get(&(d, m)) {
            return v.clone();
        }
        let v = bell_partitions(d, m, &h_derivative_args(d - m + 1));
        self.bell.insert((d, m), v.clone());
        v
    }

    pub fn stirling(&mut self, n: usize, k: usize) -> Integer {
        assert!(1 <= k && k <= n, "s_faa_route requires 1 <= k <= n");
        if n == k {
            // zeroth-derivative case: h(0)^k = 1
            return Integer::one();
        }
        let d = n - k;
        let mut sum = Rational::zero();
        let mut falling = Integer::one(); // k!/(k-m)! built incrementally
        for m in 1..=k.min(d) {
            falling *= (k - m + 1) as i64;
            sum += Rational::from_integer(falling.clone()) * self.bell_h(d, m);
        }
        let value = sum * Rational::from_integer(binom_standard(n as i64, k as i64));
        rational_to_integer(&value)
    }
}

impl Default for FaaRouteCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Full triangle via the Faa di Bruno route, sharing one Bell cache.
pub fn s_faa_table(max_n: usize) -> SignedStirlingTable {
    let mut cache = FaaRouteCache::new();
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for n in 1..=max_n {
        let mut row = vec![Integer::zero(); n + 1];
        for k in 1..=n {
            row[k] = cache.stirling(n, k);
        }
        rows.push(row);
    }
    SignedStirlingTable::from_rows(rows, StrategyId::FaaRoute)
}

/// Builds (or fills) the full triangle to `max_n` with the given strategy.
/// Strategies that are not standalone builders are seeded exactly as the
/// per-operation contracts describe: `row_from_above` consumes oracle row
/// `n + 1`, `diagonal_extension` copies the `2k <= n` part of each
/// diagonal from the oracle and extends the rest.
pub fn build_table(strategy: StrategyId, max_n: usize) -> SignedStirlingTable {
    match strategy {
        StrategyId::Triangular => s_triangular(max_n),
        StrategyId::Genfun => s_genfun(max_n),
        StrategyId::HarmonicRecurrence => s_harmonic_recurrence(max_n),
        StrategyId::FaaRoute => s_faa_table(max_n),
        StrategyId::RowHorizontal => {
            let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
            for n in 1..=max_n {
                let mut row = vec![Integer::zero()];
                row.extend(s_row_horizontal(n));
                rows.push(row);
            }
            SignedStirlingTable::from_rows(rows, StrategyId::RowHorizontal)
        }
        StrategyId::RowFromAbove => {
            let oracle = s_triangular(max_n + 1);
            let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
            for n in 1..=max_n {
                let mut row = vec![Integer::zero()];
                row.extend(s_row_from_above(n, oracle.row(n + 1)));
                rows.push(row);
            }
            SignedStirlingTable::from_rows(rows, StrategyId::RowFromAbove)
        }
        StrategyId::ColumnVertical => {
            let mut table = SignedStirlingTable::seed(StrategyId::ColumnVertical);
            for n in 1..=max_n {
                let mut row = vec![Integer::zero(); n + 1];
                for k in 1..=n {
                    row[k] = s_column_vertical(n, k, &table);
                }
                table.push_row(row);
            }
            table
        }
        StrategyId::VerticalFactorialPrinted | StrategyId::VerticalFactorialCorrected => {
            let variant = if strategy == StrategyId::VerticalFactorialPrinted {
                VfSign::Printed
            } else {
                VfSign::Corrected
            };
            let mut table = SignedStirlingTable::seed(strategy);
            for n in 0..max_n {
                // row n+1 from rows <= n
                let mut row = vec![Integer::zero(); n + 2];
                for k in 0..=n {
                    row[k + 1] = s_vertical_factorial(n, k, &table, variant);
                }
                table.push_row(row);
            }
            table
        }
        StrategyId::NestedHarmonic => {
            let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
            for n in 1..=max_n {
                let mut row = vec![Integer::zero(); n + 1];
                // the nested-sum formula starts at k = 2; column 1 is the
                // closed form (-1)^(n-1) (n-1)!
                row[1] = alt_sign(n as i64 - 1) * factorial(n - 1);
                for k in 2..=n {
                    row[k] = s_nested_harmonic(n, k);
                }
                rows.push(row);
            }
            SignedStirlingTable::from_rows(rows, StrategyId::NestedHarmonic)
        }
        StrategyId::DiagonalExtension => {
            let oracle = s_triangular(max_n);
            let mut rows: Vec<Vec<Integer>> = (0..=max_n)
                .map(|n| vec![Integer::zero(); n + 1])
                .collect();
            for n in 0..=max_n {
                rows[n][n] = Integer::one();
            }
            for d in 1..max_n {
                // seed region 2k <= n comes from the oracle
                for k in 1..=d.min(max_n - d) {
                    rows[k + d][k] = oracle.get(k + d, k).clone();
                }
                let k_max = max_n - d;
                if k_max > d {
                    for (offset, value) in s_diagonal_extension(d, k_max, &oracle)
                        .into_iter()
                        .enumerate()
                    {
                        let k = d + 1 + offset;
                        rows[k + d][k] = value;
                    }
                }
            }
            SignedStirlingTable::from_rows(rows, StrategyId::DiagonalExtension)
        }
    }
}
