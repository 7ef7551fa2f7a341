//! Brute-force reference counts. Everything here is computed from first
//! principles (running the parking process over all preference sequences)
//! with its own simulation and pattern test, so it shares no code with the
//! formulas it is used to check.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::PatternSet;

/// Largest size the exhaustive oracles accept.
pub const BRUTE_LIMIT: usize = 8;

/// Runs the parking process; returns the car in each spot, or `None`.
fn park(prefs: &[u8], n: usize) -> Option<[u8; BRUTE_LIMIT]> {
    let mut spots = [0u8; BRUTE_LIMIT];
    for (car, &p) in prefs.iter().enumerate() {
        let mut s = p as usize - 1;
        while s < n && spots[s] != 0 {
            s += 1;
        }
        if s == n {
            return None;
        }
        spots[s] = car as u8 + 1;
    }
    Some(spots)
}

/// Blocks concatenated: cars listed by increasing preference, ties by car.
fn block_word(prefs: &[u8], n: usize) -> [u8; BRUTE_LIMIT] {
    let mut word = [0u8; BRUTE_LIMIT];
    let mut idx = 0;
    for spot in 1..=n as u8 {
        for (car, &p) in prefs.iter().enumerate() {
            if p == spot {
                word[idx] = car as u8 + 1;
                idx += 1;
            }
        }
    }
    word
}

/// Naive containment: try every set of positions.
fn occurs(word: &[u8], pattern: &[usize]) -> bool {
    let k = pattern.len();
    let n = word.len();
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let ok = (0..k).all(|a| {
            (a + 1..k).all(|b| (word[idx[a]] < word[idx[b]]) == (pattern[a] < pattern[b]))
        });
        if ok {
            return true;
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn avoids_all(word: &[u8], patterns: &[Vec<usize>]) -> bool {
    patterns.iter().all(|p| !occurs(word, p))
}

fn check_size(n: usize) -> Result<()> {
    if n > BRUTE_LIMIT {
        Err(Error::TooLarge { n, limit: BRUTE_LIMIT })
    } else {
        Ok(())
    }
}

/// Visits every preference sequence in `[n]^n` whose first entry is `first`.
fn for_each_sequence_with_first(n: usize, first: u8, mut visit: impl FnMut(&[u8])) {
    let mut prefs = vec![1u8; n];
    prefs[0] = first;
    if n == 1 {
        visit(&prefs);
        return;
    }
    loop {
        visit(&prefs);
        let mut i = n - 1;
        loop {
            if (prefs[i] as usize) < n {
                prefs[i] += 1;
                break;
            }
            prefs[i] = 1;
            if i == 1 {
                return;
            }
            i -= 1;
        }
    }
}

/// Tally of outcome words over all parking functions of size `n`, computed
/// shard by shard (one shard per first preference).
fn census(n: usize, parallel: bool, word_of: fn(&[u8], usize) -> Option<[u8; BRUTE_LIMIT]>) -> HashMap<Vec<u8>, u64> {
    let shard = |first: u8| {
        let mut local: HashMap<Vec<u8>, u64> = HashMap::new();
        for_each_sequence_with_first(n, first, |prefs| {
            if let Some(w) = word_of(prefs, n) {
                *local.entry(w[..n].to_vec()).or_default() += 1;
            }
        });
        local
    };
    let shards: Vec<HashMap<Vec<u8>, u64>> = if parallel {
        (1..=n as u8).into_par_iter().map(shard).collect()
    } else {
        (1..=n as u8).map(shard).collect()
    };
    let mut total: HashMap<Vec<u8>, u64> = HashMap::new();
    for s in shards {
        for (k, v) in s {
            *total.entry(k).or_default() += v;
        }
    }
    total
}

fn rho_word(prefs: &[u8], n: usize) -> Option<[u8; BRUTE_LIMIT]> {
    park(prefs, n)
}

fn pi_word(prefs: &[u8], n: usize) -> Option<[u8; BRUTE_LIMIT]> {
    park(prefs, n).map(|_| block_word(prefs, n))
}

/// Number of parking functions of size `n` producing each parking permutation.
pub fn parking_permutation_census(n: usize) -> Result<HashMap<Vec<u8>, u64>> {
    check_size(n)?;
    Ok(census(n, true, rho_word))
}

/// Number of parking functions of size `n` producing each block permutation.
pub fn block_permutation_census(n: usize) -> Result<HashMap<Vec<u8>, u64>> {
    check_size(n)?;
    Ok(census(n, true, pi_word))
}

fn pattern_vecs(patterns: &PatternSet) -> Vec<Vec<usize>> {
    patterns.iter().map(|p| p.as_slice().to_vec()).collect()
}

fn tally(census: &HashMap<Vec<u8>, u64>, patterns: &PatternSet) -> BigUint {
    let pats = pattern_vecs(patterns);
    census
        .iter()
        .filter(|(w, _)| avoids_all(w, &pats))
        .map(|(_, &c)| BigUint::from(c))
        .sum()
}

/// `pk_n(P)` by simulating every preference sequence (`n <= 8`).
pub fn brute_pk(n: usize, patterns: &PatternSet) -> Result<BigUint> {
    brute_pk_with(n, patterns, true)
}

/// `brute_pk` with the shards processed in parallel or one after another.
pub fn brute_pk_with(n: usize, patterns: &PatternSet, parallel: bool) -> Result<BigUint> {
    check_size(n)?;
    if n == 0 {
        return Ok(BigUint::one());
    }
    Ok(tally(&census(n, parallel, rho_word), patterns))
}

/// `pk_n(P)` for many sets at once from a single simulation pass.
pub fn brute_pk_many(n: usize, sets: &[PatternSet]) -> Result<Vec<BigUint>> {
    check_size(n)?;
    if n == 0 {
        return Ok(vec![BigUint::one(); sets.len()]);
    }
    let c = census(n, true, rho_word);
    Ok(sets.iter().map(|s| tally(&c, s)).collect())
}

/// `pf_n(P)` by simulating every preference sequence (`n <= 8`).
pub fn brute_pf(n: usize, patterns: &PatternSet) -> Result<BigUint> {
    check_size(n)?;
    if n == 0 {
        return Ok(BigUint::one());
    }
    Ok(tally(&census(n, true, pi_word), patterns))
}

/// One comparison between an oracle and a formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub quantity: String,
    pub n: usize,
    pub m: Option<usize>,
    pub oracle: String,
    pub formula: String,
    pub agree: bool,
}

impl OracleReport {
    pub fn new(quantity: impl Into<String>, n: usize, m: Option<usize>, oracle: &BigUint, formula: &BigUint) -> Self {
        OracleReport {
            quantity: quantity.into(),
            n,
            m,
            oracle: oracle.to_string(),
            formula: formula.to_string(),
            agree: oracle == formula,
        }
    }
}

/// Families that `verify_all` can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `pk_n(P)` for every nonempty subset of the size-three patterns.
    Pk,
    /// `pf_n(P)` for the sets with dedicated counts.
    Pf,
    /// Class counts of generalized parking functions, `m <= 2`.
    Classes,
}

/// Pattern sets whose `pf` count has a dedicated formula.
pub fn pf_formula_sets() -> Vec<PatternSet> {
    ["12", "21", "123,132", "123,213", "312,321"]
        .iter()
        .map(|s| s.parse().expect("valid pattern text"))
        .collect()
}

/// Compares brute-force counts with the counting formulas for `1 <= n <= n_max`.
pub fn verify_all(n_max: usize, families: &[Family]) -> Result<Vec<OracleReport>> {
    use crate::counting::{pf_count, pk_count};
    check_size(n_max)?;
    let mut reports = Vec::new();
    for family in families {
        match family {
            Family::Pk => {
                let sets = PatternSet::s3_subsets();
                for n in 1..=n_max {
                    let brute = brute_pk_many(n, &sets)?;
                    for (set, b) in sets.iter().zip(&brute) {
                        let f = pk_count(n, set).value;
                        reports.push(OracleReport::new(format!("pk({set})"), n, None, b, &f));
                    }
                }
            }
            Family::Pf => {
                let sets = pf_formula_sets();
                for n in 1..=n_max {
                    let c = census(n, true, pi_word);
                    for set in &sets {
                        let b = tally(&c, set);
                        let f = pf_count(n, set)?.value;
                        reports.push(OracleReport::new(format!("pf({set})"), n, None, &b, &f));
                    }
                }
            }
            Family::Classes => {
                use crate::generalized::ClassFamily;
                for fam in ClassFamily::ALL {
                    for m in 1..=2 {
                        for n in 1..=n_max.min(5) {
                            let b = class_count_by_evaluations(fam, n, m);
                            let f = fam.count(n, m, None)?;
                            reports.push(OracleReport::new(fam.name(), n, Some(m), &b, &f));
                        }
                    }
                }
            }
        }
    }
    Ok(reports)
}

/// Weak compositions of `total` into `parts` parts, in lexicographic order.
fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == parts {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=rest {
            cur.push(v);
            go(rest - v, parts, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut cur, &mut out);
    out
}

/// Sorted function with the given evaluation.
fn sorted_function(evaluation: &[usize]) -> Vec<usize> {
    let mut f = Vec::new();
    for (i, &c) in evaluation.iter().enumerate() {
        f.extend(std::iter::repeat_n(i + 1, c));
    }
    f
}

/// Class counts summed over evaluations found by direct enumeration:
/// for multiparking families, every evaluation of a function `[mn] -> [n]`
/// passing the m-multiparking test; for m-parking families, every
/// increasing function `[n] -> [1 + m(n-1)]` passing the m-parking test.
pub fn class_count_by_evaluations(family: crate::generalized::ClassFamily, n: usize, m: usize) -> BigUint {
    use crate::generalized::{is_m_multiparking, is_m_parking, packed};
    let mut total = BigUint::zero();
    if family.is_multiparking() {
        for ev in weak_compositions(m * n, n) {
            let f = sorted_function(&ev);
            if !is_m_multiparking(&f, m, n) {
                continue;
            }
            total += family.per_evaluation(&packed(&ev), m);
        }
    } else {
        let size = 1 + m * n.saturating_sub(1);
        for ev in weak_compositions(n, size) {
            let f = sorted_function(&ev);
            if !is_m_parking(&f, m) {
                continue;
            }
            total += family.per_evaluation(&packed(&ev), m);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_set_counts_all_parking_functions() {
        for n in 0..=6usize {
            let expected = BigUint::from(n as u64 + 1).pow(n.saturating_sub(1) as u32);
            let got = brute_pk(n, &PatternSet::empty()).unwrap();
            assert_eq!(got, if n == 0 { BigUint::one() } else { expected });
        }
    }

    #[test]
    fn shard_order_does_not_matter() {
        let p: PatternSet = "132".parse().unwrap();
        assert_eq!(brute_pk_with(6, &p, true).unwrap(), brute_pk_with(6, &p, false).unwrap());
    }

    #[test]
    fn naive_containment() {
        assert!(occurs(&[7, 5, 6, 1, 2, 4, 3], &[1, 3, 2]));
        assert!(!occurs(&[7, 5, 6, 1, 2, 3, 4], &[1, 3, 2]));
    }

    #[test]
    fn refuses_large_sizes() {
        assert!(brute_pk(9, &PatternSet::empty()).is_err());
    }
}
