//! Permutations in one-line notation, pattern containment and the
//! `ell` weight that counts parking functions with a given outcome.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotBijection(format!(
                    "{values:?} is not a bijection onto 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    /// Wraps values already known to form a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn reverse_identity(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + n));
        Permutation(v)
    }

    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let m = other.len();
        let mut v: Vec<usize> = self.0.iter().map(|&x| x + m).collect();
        v.extend(other.0.iter().copied());
        Permutation(v)
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains(&self.0, &pattern.0)
    }

    pub fn avoids(&self, patterns: &PatternSet) -> bool {
        patterns.iter().all(|p| !self.contains(p))
    }

    /// Length of the longest run ending at position `i` (1-based) whose
    /// entries are all at most the entry at `i`.
    pub fn ell_factor(&self, i: usize) -> usize {
        ell_factor(&self.0, i)
    }

    /// Product of all `ell_factor` values. Equals the number of parking
    /// functions whose parking permutation is `self`.
    pub fn ell_weight(&self) -> BigUint {
        (1..=self.len()).fold(BigUint::one(), |acc, i| acc * ell_factor(&self.0, i))
    }
}

pub(crate) fn ell_factor(p: &[usize], i: usize) -> usize {
    let target = p[i - 1];
    p[..i].iter().rev().take_while(|&&x| x <= target).count()
}

/// Lists the set `s` in increasing (`increasing = true`) or decreasing order.
/// Used to build words such as `I_S 6 J_T` before validating them.
pub fn list_on_set(s: &[usize], increasing: bool) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    if !increasing {
        v.reverse();
    }
    v
}

/// Does the word `text` contain an occurrence of `pattern`?
pub fn contains(text: &[usize], pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > text.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(k);
    search(text, pattern, 0, &mut chosen)
}

fn search(text: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - j;
    for pos in start..=text.len() - remaining {
        let x = text[pos];
        let consistent = chosen.iter().enumerate().all(|(t, &q)| {
            text[q].cmp(&x) == pattern[t].cmp(&pattern[j])
        });
        if consistent {
            chosen.push(pos);
            if search(text, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Does `text` contain `pattern` using its last entry as the pattern's last entry?
fn contains_ending_at_last(text: &[usize], pattern: &[usize]) -> bool {
    let (Some(&last), Some(&plast)) = (text.last(), pattern.last()) else {
        return pattern.is_empty();
    };
    let k = pattern.len();
    if k > text.len() {
        return false;
    }
    let head = &text[..text.len() - 1];
    let phead = &pattern[..k - 1];
    // occurrences of phead in head whose entries compare to `last`
    // the same way as pattern entries compare to `plast`
    let mut chosen = Vec::with_capacity(k);
    search_with_anchor(head, phead, last, plast, 0, &mut chosen)
}

fn search_with_anchor(
    text: &[usize],
    pattern: &[usize],
    anchor: usize,
    panchor: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - j;
    if text.len() < remaining {
        return false;
    }
    for pos in start..=text.len() - remaining {
        let x = text[pos];
        if x.cmp(&anchor) != pattern[j].cmp(&panchor) {
            continue;
        }
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(t, &q)| text[q].cmp(&x) == pattern[t].cmp(&pattern[j]));
        if consistent {
            chosen.push(pos);
            if search_with_anchor(text, pattern, anchor, panchor, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// All permutations of size `n` avoiding every pattern in `patterns`,
/// in lexicographic order.
pub fn avoidance_class(n: usize, patterns: &PatternSet) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend_avoiders(n, patterns, &mut prefix, &mut used, &mut out);
    out
}

fn extend_avoiders(
    n: usize,
    patterns: &PatternSet,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if prefix.len() == n {
        out.push(Permutation(prefix.clone()));
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        // A new occurrence must use the entry just added.
        let ok = patterns
            .iter()
            .all(|p| !contains_ending_at_last(prefix, p.as_slice()));
        if ok {
            used[v] = true;
            extend_avoiders(n, patterns, prefix, used, out);
            used[v] = false;
        }
        prefix.pop();
    }
}

/// All permutations of size `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    avoidance_class(n, &PatternSet::empty())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits (`7561234`) or, for sizes ten and up, comma-separated values.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            let mut values = Vec::new();
            let mut column = 1;
            for part in s.split(',') {
                let t = part.trim();
                let v = t
                    .parse::<usize>()
                    .map_err(|_| Error::parse(1, column, format!("expected a number, found {t:?}")))?;
                values.push(v);
                column += part.len() + 1;
            }
            values
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(1, i + 1, format!("unexpected character {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// A finite set of patterns kept in canonical order: lexicographic on
/// one-line notation, shorter words first on a shared prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PatternSet(Vec<Permutation>);

impl PatternSet {
    pub fn empty() -> Self {
        PatternSet(Vec::new())
    }

    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Self {
        let mut v: Vec<Permutation> = patterns.into_iter().collect();
        v.sort_by(canonical_order);
        v.dedup();
        PatternSet(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_pattern(&self, p: &Permutation) -> bool {
        self.0.contains(p)
    }

    pub fn union(&self, other: &PatternSet) -> PatternSet {
        PatternSet::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    /// True when every pattern has size three.
    pub fn is_s3_subset(&self) -> bool {
        self.0.iter().all(|p| p.len() == 3)
    }

    /// All 63 nonempty subsets of the six patterns of size three.
    pub fn s3_subsets() -> Vec<PatternSet> {
        let all = s3();
        (1u32..64)
            .map(|mask| {
                PatternSet::new(
                    (0..6)
                        .filter(|b| mask & (1 << b) != 0)
                        .map(|b| all[b].clone()),
                )
            })
            .collect()
    }
}

fn canonical_order(a: &Permutation, b: &Permutation) -> Ordering {
    a.0.cmp(&b.0)
}

/// The six permutations of size three in lexicographic order.
pub fn s3() -> Vec<Permutation> {
    all_permutations(3)
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated digit words, e.g. `123,132`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PatternSet::empty());
        }
        let mut out = Vec::new();
        let mut column = 1;
        for part in s.split(',') {
            let t = part.trim();
            let p = t.parse::<Permutation>().map_err(|e| match e {
                Error::Parse { column: c, message, .. } => Error::parse(1, column + c - 1, message),
                Error::NotBijection(m) => Error::parse(1, column, m),
                other => other,
            })?;
            if p.is_empty() {
                return Err(Error::parse(1, column, "empty pattern"));
            }
            out.push(p);
            column += part.len() + 1;
        }
        Ok(PatternSet::new(out))
    }
}
