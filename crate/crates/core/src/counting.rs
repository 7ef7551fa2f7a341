//! Counts of parking functions whose parking permutation (`pk`) or block
//! permutation (`pf`) avoids a set of patterns.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, catalan, exact_div, factorial, to_biguint};
use crate::catalan::visit_ascent_words;
use crate::error::{Error, Result};
use crate::oracle;
use crate::permutation::{avoidance_class, PatternSet};

/// How a count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Formula,
    Recurrence,
    WeightedSum,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Recurrence => "recurrence",
            Method::WeightedSum => "weighted_sum",
            Method::BruteForce => "brute_force",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigUint,
    pub method: Method,
}

impl CountResult {
    fn new(value: BigUint, method: Method) -> Self {
        CountResult { value, method }
    }
}

/// `sum of ell(rho)` over permutations of size `n` avoiding `patterns`.
pub fn generic_weighted_pk(n: usize, patterns: &PatternSet) -> BigUint {
    avoidance_class(n, patterns).iter().map(|p| p.ell_weight()).sum()
}

/// `pk_n(P)`, using the closed form or recurrence for `P` when one is known
/// and the weighted sum over `Av_n(P)` otherwise.
pub fn pk_count(n: usize, patterns: &PatternSet) -> CountResult {
    if n == 0 {
        return CountResult::new(BigUint::one(), Method::Formula);
    }
    let key = patterns.to_string();
    match pk_known(&key, n) {
        Some((value, method)) => CountResult::new(value, method),
        None => CountResult::new(generic_weighted_pk(n, patterns), Method::WeightedSum),
    }
}

/// True when `pk_count` has a dedicated formula for this set.
pub fn has_pk_formula(patterns: &PatternSet) -> bool {
    pk_known(&patterns.to_string(), 1).is_some()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn sum_range(lo: usize, hi: usize, f: impl Fn(usize) -> BigUint) -> BigUint {
    (lo..=hi).map(f).sum()
}

/// Dedicated values for `n >= 1`, keyed by the canonical text of the set.
fn pk_known(key: &str, n: usize) -> Option<(BigUint, Method)> {
    use Method::*;
    let nf = || factorial(n);
    let value = match key {
        // five patterns
        "123,132,213,231,312" => (if n == 2 { big(3) } else { big(1) }, Formula),
        "132,213,231,312,321" => (if n == 2 { big(3) } else { nf() }, Formula),
        // four patterns
        "123,132,213,231" | "123,132,213,312" | "123,213,231,312" => {
            (if n == 1 { big(1) } else { big(3) }, Formula)
        }
        "123,132,231,312" => (if n == 1 { big(1) } else { big(n as u64 + 1) }, Formula),
        "132,213,231,312" => (if n == 1 { big(1) } else { nf() + 1u32 }, Formula),
        "132,213,231,321" | "132,213,312,321" | "213,231,312,321" => {
            (if n == 1 { big(1) } else { nf() + factorial(n - 1) }, Formula)
        }
        "132,231,312,321" => (if n == 1 { big(1) } else { nf() * 3u32 / 2u32 }, Formula),
        // three patterns
        "123,132,231" | "123,132,312" | "123,231,312" => (binomial(n + 1, 2), Formula),
        "123,213,231" | "123,213,312" => (big(2 * n as u64 - 1), Formula),
        "123,132,213" => {
            let num = (BigInt::from(2) << n) + if n.is_multiple_of(2) { 1 } else { -1 };
            (to_biguint(num / 3, "pk(123,132,213)"), Formula)
        }
        "132,213,231" | "132,213,312" | "213,231,312" => (sum_range(1, n, factorial), Formula),
        "132,231,312" => (sum_range(1, n, |k| nf() / factorial(k)), Formula),
        "132,231,321" | "132,312,321" => (sum_range(1, n, |k| nf() / k), Formula),
        "132,213,321" | "213,231,321" => {
            (sum_range(1, n, |k| factorial(k) * factorial(n - k)), Formula)
        }
        "213,312,321" => ((2 * n - 1) * factorial(n - 1), Formula),
        "231,312,321" => {
            let total: BigInt = (0..=n)
                .map(|k| {
                    let term = BigInt::from(nf() / factorial(k)) * (n - k + 1);
                    if k % 2 == 0 { term } else { -term }
                })
                .sum();
            (to_biguint(total, "pk(231,312,321)"), Formula)
        }
        // two patterns
        "123,231" | "123,312" => (big((n * (n - 1) * (n + 4) / 6 + 1) as u64), Formula),
        "123,132" => (linear_recurrence(n, 3, -1), Recurrence),
        "123,213" => (linear_recurrence(n, 2, 1), Recurrence),
        "132,231" | "132,312" | "231,312" => (factorial(n + 1) / 2u32, Formula),
        "132,213" | "213,231" => (composition_factorial_recurrence(n), Recurrence),
        "132,321" => {
            let mut total = nf();
            for a in 1..n {
                for b in 1..=n - a {
                    total += factorial(a) * factorial(b) * nf() / factorial(a + b);
                }
            }
            (total, Formula)
        }
        "213,321" => (
            nf() + sum_range(1, n - 1, |k| factorial(k) * factorial(n - k) * k),
            Formula,
        ),
        "213,312" => (
            sum_range(0, n - 1, |k| binomial(n - 1, k) * factorial(k + 1)),
            Formula,
        ),
        "231,321" => (recurrence_231_321(n), Recurrence),
        "312,321" => (
            sum_range(1, n, |k| binomial(n - 1, k - 1) * (nf() / factorial(k))),
            Formula,
        ),
        // one pattern
        "132" | "231" => (recurrence_132(n), Recurrence),
        "123" => {
            let s = sum_range(1, n, |k| binomial(n + 1, k) * binomial(n + k - 1, 2 * k - 1));
            (exact_div(s, &big(n as u64 + 1), "pk(123)"), Formula)
        }
        "213" => (pk213(n), Formula),
        "312" => (pk312_table(n)[n].iter().sum(), Recurrence),
        "321" => {
            let t = pk321_table(n);
            (sum_range(1, n, |k| factorial(k - 1) * &t[n][k]), Recurrence)
        }
        _ => return None,
    };
    Some(value)
}

/// `p_1 = 1`, `p_2 = 3`, `p_k = a p_{k-1} + b p_{k-2}`.
fn linear_recurrence(n: usize, a: i64, b: i64) -> BigUint {
    let mut prev = BigInt::one();
    let mut cur = BigInt::from(3);
    if n == 1 {
        return BigUint::one();
    }
    for _ in 3..=n {
        let next = &cur * a + &prev * b;
        prev = cur;
        cur = next;
    }
    to_biguint(cur, "linear recurrence")
}

/// `p_0 = 1`, `p_n = sum_k k! p_{n-k}`: sum over compositions of `n` of the
/// product of factorials of the parts.
fn composition_factorial_recurrence(n: usize) -> BigUint {
    let mut p = vec![BigUint::one()];
    for m in 1..=n {
        let v = sum_range(1, m, |k| factorial(k) * &p[m - k]);
        p.push(v);
    }
    p.pop().unwrap()
}

/// `p_0 = 1`, `p_n = sum_{k < n} p_k (k+1) (n-k-1)!`.
fn recurrence_231_321(n: usize) -> BigUint {
    let mut p = vec![BigUint::one()];
    for m in 1..=n {
        let v = (0..m).map(|k| &p[k] * (k + 1) * factorial(m - k - 1)).sum();
        p.push(v);
    }
    p.pop().unwrap()
}

/// `p_0 = 1`, `p_n = sum_{k=1}^n k p_{k-1} p_{n-k}`.
fn recurrence_132(n: usize) -> BigUint {
    let mut p = vec![BigUint::one()];
    for m in 1..=n {
        let v = sum_range(1, m, |k| &p[k - 1] * &p[m - k] * k);
        p.push(v);
    }
    p.pop().unwrap()
}

/// `(1/(n+1)) [x^n] (sum_k k! x^k)^(n+1)`.
fn pk213(n: usize) -> BigUint {
    let base: Vec<BigUint> = (0..=n).map(factorial).collect();
    let mut acc = vec![BigUint::zero(); n + 1];
    acc[0] = BigUint::one();
    for _ in 0..=n {
        let mut next = vec![BigUint::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    exact_div(acc[n].clone(), &big(n as u64 + 1), "pk(213)")
}

/// Triangle `t[a][k]` for `1 <= k <= a <= n` with `pk_n(312) = sum_k t[n][k]`.
#[allow(clippy::needless_range_loop)]
pub fn pk312_table(n: usize) -> Vec<Vec<BigUint>> {
    let mut t = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for a in 1..=n {
        t[a][a] = BigUint::one();
        for k in 1..a {
            let mut s = BigUint::zero();
            for i in a - k..a {
                for j in (k + 1 + i - a)..=i {
                    s += &t[i][j];
                }
            }
            t[a][k] = s * (a - k + 1);
        }
    }
    t
}

/// Triangle `t[a][k]` with `pk_n(321) = sum_k (k-1)! t[n][k]`.
#[allow(clippy::needless_range_loop)]
pub fn pk321_table(n: usize) -> Vec<Vec<BigUint>> {
    let mut t = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for a in 1..=n {
        t[a][a] = BigUint::one();
        for k in 1..a {
            let mut s = BigUint::zero();
            for i in a - k..a {
                for j in (k + 1 + i - a)..=i {
                    s += factorial(a - i + j - k - 1) * &t[i][j];
                }
            }
            t[a][k] = s * (a - k + 1);
        }
    }
    t
}

/// Weights on Catalan paths, as functions of the ascent word `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathWeight {
    /// `prod w_i`, summing to `pk_n(123)`.
    P123,
    /// `prod w_i!`, summing to `pk_n(213)`.
    P213,
    /// `prod_{i>=2} (1 + w_i + ... + w_last)`, summing to `pk_n(312)`.
    P312,
    /// The `P312` weight times `prod (w_i - 1)!`, summing to `pk_n(321)`.
    P321,
    /// `prod_{i<last} (w_i + 1)`, summing to `pf_n(312, 321)`.
    Pf312321,
}

impl PathWeight {
    pub fn eval(&self, w: &[usize]) -> BigUint {
        match self {
            PathWeight::P123 => w.iter().map(|&x| BigUint::from(x)).product(),
            PathWeight::P213 => w.iter().map(|&x| factorial(x)).product(),
            PathWeight::P312 => suffix_weight(w),
            PathWeight::P321 => suffix_weight(w) * w.iter().map(|&x| factorial(x - 1)).product::<BigUint>(),
            PathWeight::Pf312321 => {
                let k = w.len().saturating_sub(1);
                w[..k].iter().map(|&x| BigUint::from(x + 1)).product()
            }
        }
    }
}

fn suffix_weight(w: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut suffix = 0;
    for i in (1..w.len()).rev() {
        suffix += w[i];
        acc *= 1 + suffix;
    }
    acc
}

impl FromStr for PathWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "123" => Ok(PathWeight::P123),
            "213" => Ok(PathWeight::P213),
            "312" => Ok(PathWeight::P312),
            "321" => Ok(PathWeight::P321),
            "312,321" | "pf312321" => Ok(PathWeight::Pf312321),
            _ => Err(Error::Domain(format!("unknown path weight {s:?}"))),
        }
    }
}

/// Sum of `weight` over all Catalan paths of size `n`.
pub fn pk_sum_over_paths(n: usize, weight: PathWeight) -> BigUint {
    let mut total = BigUint::zero();
    visit_ascent_words(n, 1, None, &mut |w| total += weight.eval(w));
    total
}

/// `pf_n(P)`: dedicated counts for `{12}`, `{21}`, `{123,132}`, `{123,213}`
/// and `{312,321}`; brute force otherwise.
pub fn pf_count(n: usize, patterns: &PatternSet) -> Result<CountResult> {
    if n == 0 {
        return Ok(CountResult::new(BigUint::one(), Method::Formula));
    }
    let key = patterns.to_string();
    let r = match key.as_str() {
        "12" => CountResult::new(BigUint::one(), Method::Formula),
        "21" => CountResult::new(catalan(n), Method::Formula),
        "123,132" => CountResult::new(odd_root_tree_count(n + 1), Method::Formula),
        "123,213" => CountResult::new(catalan(n + 1) - catalan(n), Method::Formula),
        "312,321" => CountResult::new(pf312321_closed_form(n), Method::Formula),
        _ => CountResult::new(oracle::brute_pf(n, patterns)?, Method::BruteForce),
    };
    Ok(r)
}

/// Ordered trees with `edges` edges and `d` children at the root:
/// `[x^(edges-d)] C(x)^d = d/(2j+d) C(2j+d, j)` with `j = edges - d`.
pub fn trees_with_root_degree(edges: usize, d: usize) -> BigUint {
    if d == 0 {
        return if edges == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if d > edges {
        return BigUint::zero();
    }
    let j = edges - d;
    exact_div(binomial(2 * j + d, j) * d, &big((2 * j + d) as u64), "forest count")
}

/// Ordered trees with `edges` edges whose root has odd degree.
pub fn odd_root_tree_count(edges: usize) -> BigUint {
    (1..=edges).step_by(2).map(|d| trees_with_root_degree(edges, d)).sum()
}

/// `C(3n+1, n)/(2(n+1)) - sum_{k=0}^{n-2} C(3n-2-3k, n-k-1) / (2^(k+2) (n-k))`,
/// checked to be an integer.
pub fn pf312321_closed_form(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let to_rat = |b: BigUint| BigRational::from_integer(BigInt::from(b));
    let mut total = to_rat(binomial(3 * n + 1, n)) / to_rat(big(2 * (n as u64 + 1)));
    for k in 0..n.saturating_sub(1) {
        let num = to_rat(binomial(3 * n - 2 - 3 * k, n - k - 1));
        let den = to_rat((BigUint::one() << (k + 2)) * (n - k));
        total -= num / den;
    }
    assert!(total.is_integer(), "pf(312,321) closed form not an integer at n = {n}");
    assert!(!total.is_negative());
    to_biguint(total.to_integer(), "pf(312,321)")
}
