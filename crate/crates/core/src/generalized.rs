//! Generalized parking functions (m-multiparking and m-parking) and the
//! number of hyposylvester, metasylvester and hypoplactic classes.
//!
//! Each class count is a sum, over the possible packed evaluations, of a
//! per-evaluation factor. Packed evaluations of increasing functions are the
//! ascent words of Catalan (or m-Catalan) paths.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, exact_div, fuss_catalan};
use crate::catalan::visit_ascent_words;
use crate::error::{Error, Result};

/// Default cap on the number of m-Catalan paths enumerated by `metasylvester_mpark`.
pub const DEFAULT_PATH_CAP: u64 = 10_000_000;

/// Evaluation of a function `[n] -> [N]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    /// `counts[j - 1]` is the number of arguments sent to `j`.
    pub counts: Vec<usize>,
    /// `counts` with the zeros removed.
    pub packed: Vec<usize>,
}

pub fn evaluation(f: &[usize], codomain: usize) -> Result<Evaluation> {
    let mut counts = vec![0usize; codomain];
    for &v in f {
        if v == 0 || v > codomain {
            return Err(Error::Domain(format!("value {v} outside 1..={codomain}")));
        }
        counts[v - 1] += 1;
    }
    let packed = packed(&counts);
    Ok(Evaluation { counts, packed })
}

pub fn packed(counts: &[usize]) -> Vec<usize> {
    counts.iter().copied().filter(|&c| c != 0).collect()
}

/// `f : [mn] -> [n]` whose evaluation is `m` times the evaluation of a
/// parking function of size `n`.
pub fn is_m_multiparking(f: &[usize], m: usize, n: usize) -> bool {
    if m == 0 || f.len() != m * n {
        return false;
    }
    let Ok(ev) = evaluation(f, n) else {
        return false;
    };
    if ev.counts.iter().any(|c| c % m != 0) {
        return false;
    }
    let mut total = 0;
    for (i, c) in ev.counts.iter().enumerate() {
        total += c / m;
        if total < i + 1 {
            return false;
        }
    }
    true
}

/// `f : [n] -> [1 + m(n-1)]` whose sorted values satisfy `f(i) <= 1 + m(i-1)`.
pub fn is_m_parking(f: &[usize], m: usize) -> bool {
    let mut sorted = f.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(i, &v)| v >= 1 && v <= 1 + m * i)
}

/// `(1/n) sum_{k<n} C(n,k) C(3n-k, 2n+1) (m-1)^k`.
pub fn hyposylvester_multipark(n: usize, m: usize) -> BigUint {
    assert!(n >= 1 && m >= 1);
    let base = BigUint::from(m - 1);
    let s: BigUint = (0..n)
        .map(|k| binomial(n, k) * binomial(3 * n - k, 2 * n + 1) * base.pow(k as u32))
        .sum();
    exact_div(s, &BigUint::from(n), "hyposylvester multiparking count")
}

/// Triangle with `t[a][a] = 1` and
/// `t[a][k] = (1 + m(a-k)) sum_{i=a-k}^{a-1} sum_{j=k+1-a+i}^{i} t[i][j]`.
#[allow(clippy::needless_range_loop)]
pub fn metasylvester_table(n: usize, m: usize) -> Vec<Vec<BigUint>> {
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
            t[a][k] = s * (1 + m * (a - k));
        }
    }
    t
}

/// Metasylvester classes of m-multiparking functions of size `mn`.
pub fn metasylvester_multipark(n: usize, m: usize) -> BigUint {
    assert!(n >= 1 && m >= 1);
    metasylvester_table(n, m)[n].iter().sum()
}

/// Metasylvester classes of m-parking functions of size `n`, by enumerating
/// m-Catalan paths. Refuses when there are more than `cap` paths.
pub fn metasylvester_mpark(n: usize, m: usize, cap: u64) -> Result<BigUint> {
    assert!(n >= 1 && m >= 1);
    let required = fuss_catalan(n, m);
    if required > BigUint::from(cap) {
        return Err(Error::BudgetExceeded { required: required.to_string(), cap });
    }
    Ok(parallel_path_sum(n, m, |w| ClassFamily::MetasylvesterM.per_evaluation(w, 1)))
}

/// `(1/n) sum_k C(mn, k-1) C(n, k) 2^(k-1)`.
pub fn hypoplactic_mpark(n: usize, m: usize) -> BigUint {
    assert!(n >= 1 && m >= 1);
    let s: BigUint = (1..=n)
        .map(|k| binomial(m * n, k - 1) * binomial(n, k) * (BigUint::one() << (k - 1)))
        .sum();
    exact_div(s, &BigUint::from(n), "hypoplactic count")
}

/// `C((2m+1)n, n) / (2mn + 1)`.
pub fn hyposylvester_mpark(n: usize, m: usize) -> BigUint {
    assert!(n >= 1 && m >= 1);
    exact_div(
        binomial((2 * m + 1) * n, n),
        &BigUint::from(2 * m * n + 1),
        "hyposylvester m-parking count",
    )
}

/// Sum of `weight` over the ascent words of all m-Catalan paths of size `n`,
/// one worker per length of the first ascent.
fn parallel_path_sum(n: usize, m: usize, weight: impl Fn(&[usize]) -> BigUint + Sync) -> BigUint {
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = BigUint::zero();
            visit_ascent_words(n, m, Some(first), &mut |w| acc += weight(w));
            acc
        })
        .reduce(BigUint::zero, |a, b| a + b)
}

/// The five class-count families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassFamily {
    HyposylvesterMulti,
    MetasylvesterMulti,
    MetasylvesterM,
    HypoplacticM,
    HyposylvesterM,
}

impl ClassFamily {
    pub const ALL: [ClassFamily; 5] = [
        ClassFamily::HyposylvesterMulti,
        ClassFamily::MetasylvesterMulti,
        ClassFamily::MetasylvesterM,
        ClassFamily::HypoplacticM,
        ClassFamily::HyposylvesterM,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClassFamily::HyposylvesterMulti => "hyposylvester-multi",
            ClassFamily::MetasylvesterMulti => "metasylvester-multi",
            ClassFamily::MetasylvesterM => "metasylvester-m",
            ClassFamily::HypoplacticM => "hypoplactic-m",
            ClassFamily::HyposylvesterM => "hyposylvester-m",
        }
    }

    /// Multiparking families live on functions `[mn] -> [n]`.
    pub fn is_multiparking(&self) -> bool {
        matches!(self, ClassFamily::HyposylvesterMulti | ClassFamily::MetasylvesterMulti)
    }

    /// Number of classes with packed evaluation `beta`. `_m` is unused: for
    /// multiparking families `beta` already carries the factor `m`.
    pub fn per_evaluation(&self, beta: &[usize], _m: usize) -> BigUint {
        match self {
            ClassFamily::HyposylvesterMulti | ClassFamily::HyposylvesterM => {
                beta.iter().skip(1).map(|&b| BigUint::from(1 + b)).product()
            }
            ClassFamily::MetasylvesterMulti | ClassFamily::MetasylvesterM => {
                let mut acc = BigUint::one();
                let mut suffix = 0;
                for &b in beta.iter().skip(1).rev() {
                    suffix += b;
                    acc *= 1 + suffix;
                }
                acc
            }
            ClassFamily::HypoplacticM => BigUint::one() << beta.len().saturating_sub(1),
        }
    }

    /// Class count from the closed form, recurrence or (for
    /// `MetasylvesterM`) capped path enumeration.
    pub fn count(&self, n: usize, m: usize, cap: Option<u64>) -> Result<BigUint> {
        if n == 0 || m == 0 {
            return Err(Error::Domain("class counts need n >= 1 and m >= 1".into()));
        }
        Ok(match self {
            ClassFamily::HyposylvesterMulti => hyposylvester_multipark(n, m),
            ClassFamily::MetasylvesterMulti => metasylvester_multipark(n, m),
            ClassFamily::MetasylvesterM => metasylvester_mpark(n, m, cap.unwrap_or(DEFAULT_PATH_CAP))?,
            ClassFamily::HypoplacticM => hypoplactic_mpark(n, m),
            ClassFamily::HyposylvesterM => hyposylvester_mpark(n, m),
        })
    }

    /// The same count as a sum of `per_evaluation` over path ascent words:
    /// `m * w(C)` over Catalan paths for multiparking families, `w(C)` over
    /// m-Catalan paths otherwise.
    pub fn path_sum(&self, n: usize, m: usize) -> BigUint {
        if self.is_multiparking() {
            parallel_path_sum(n, 1, |w| {
                let beta: Vec<usize> = w.iter().map(|x| m * x).collect();
                self.per_evaluation(&beta, m)
            })
        } else {
            parallel_path_sum(n, m, |w| self.per_evaluation(w, m))
        }
    }
}

impl fmt::Display for ClassFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown class family {s:?}")))
    }
}
