//! Lattice paths with up-steps `(1, m)` and down-steps `(1, -1)` that stay
//! weakly above the axis. For `m = 1` these are Dyck paths.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, exact_div};
use crate::error::{Error, Result};
use crate::parking::ParkingFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
}

/// An m-Catalan path with `n` up-steps of height `m` and `mn` down-steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePath {
    steps: Vec<Step>,
    m: usize,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("up-step height m must be positive".into()));
        }
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => m as i64,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::parse(1, i + 1, "path goes below the axis"));
            }
        }
        if height != 0 {
            return Err(Error::Domain("path does not return to the axis".into()));
        }
        Ok(LatticePath { steps, m })
    }

    /// Parses `U`/`D` text for a path with up-step height `m`.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let steps = text
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                _ => Err(Error::parse(1, i + 1, format!("unexpected step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps, m)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of up-steps.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    /// Lengths of the maximal runs of up-steps, left to right.
    pub fn ascent_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut prev = Step::Down;
        for &s in &self.steps {
            if s == Step::Up {
                if prev == Step::Up {
                    *word.last_mut().unwrap() += 1;
                } else {
                    word.push(1);
                }
            }
            prev = s;
        }
        word
    }

    /// Number of peaks (`UD` factors); equal to the length of the ascent word.
    pub fn peak_count(&self) -> usize {
        self.steps.windows(2).filter(|w| w[0] == Step::Up && w[1] == Step::Down).count()
    }

    fn require_dyck(&self) -> Result<()> {
        if self.m == 1 {
            Ok(())
        } else {
            Err(Error::Domain("operation defined for Dyck paths (m = 1) only".into()))
        }
    }

    /// Splits a nonempty Dyck path as `U^k D_1 C_1 D_2 C_2 ... D_k C_k`, where
    /// `D_i` is the first down-step from height `k - i + 1` to `k - i`.
    /// Returns `k` and the Dyck paths `C_1, ..., C_k`.
    pub fn canonical_decomposition(&self) -> Result<(usize, Vec<LatticePath>)> {
        self.require_dyck()?;
        if self.steps.is_empty() {
            return Err(Error::Domain("the empty path has no decomposition".into()));
        }
        let k = self.steps.iter().take_while(|&&s| s == Step::Up).count();
        let mut parts = Vec::with_capacity(k);
        let mut level = k;
        let mut height = k;
        let mut current = Vec::new();
        for &s in &self.steps[k..] {
            if s == Step::Down && height == level {
                if level < k {
                    parts.push(LatticePath { steps: std::mem::take(&mut current), m: 1 });
                }
                level -= 1;
                height -= 1;
            } else {
                current.push(s);
                if s == Step::Up {
                    height += 1;
                } else {
                    height -= 1;
                }
            }
        }
        parts.push(LatticePath { steps: current, m: 1 });
        debug_assert_eq!(parts.len(), k);
        Ok((k, parts))
    }

    /// Inverse of `canonical_decomposition`.
    pub fn from_decomposition(k: usize, parts: &[LatticePath]) -> Result<Self> {
        if parts.len() != k || k == 0 {
            return Err(Error::Domain("need exactly k >= 1 parts".into()));
        }
        let mut steps = vec![Step::Up; k];
        for p in parts {
            p.require_dyck()?;
            steps.push(Step::Down);
            steps.extend_from_slice(&p.steps);
        }
        LatticePath::new(steps, 1)
    }

    /// Removes the first peak: with `i'` the length of the first run of
    /// down-steps, drops the last `i'` up-steps of the first ascent and those
    /// `i'` down-steps. Requires at least two peaks.
    pub fn delete_first_peak(&self) -> Result<(usize, LatticePath)> {
        self.require_dyck()?;
        let w = self.ascent_word();
        if w.len() < 2 {
            return Err(Error::Domain("path must have at least two peaks".into()));
        }
        let w1 = w[0];
        let i = self.steps[w1..].iter().take_while(|&&s| s == Step::Down).count();
        let mut steps = Vec::with_capacity(self.steps.len() - 2 * i);
        steps.extend_from_slice(&self.steps[..w1 - i]);
        steps.extend_from_slice(&self.steps[w1 + i..]);
        Ok((i, LatticePath { steps, m: 1 }))
    }

    /// Inverse of `delete_first_peak`: rebuilds the path whose first ascent has
    /// length `w1` and whose first down-run has length `i`.
    pub fn insert_first_peak(&self, i: usize, w1: usize) -> Result<LatticePath> {
        self.require_dyck()?;
        let r = self.steps.iter().take_while(|&&s| s == Step::Up).count();
        if i == 0 || w1 < i || w1 - i >= r {
            return Err(Error::Domain(format!(
                "cannot insert a peak of width {i} into a first ascent of {r} with w1 = {w1}"
            )));
        }
        let cut = w1 - i;
        let mut steps = Vec::with_capacity(self.steps.len() + 2 * i);
        steps.extend_from_slice(&self.steps[..cut]);
        steps.extend(std::iter::repeat_n(Step::Up, i));
        steps.extend(std::iter::repeat_n(Step::Down, i));
        steps.extend_from_slice(&self.steps[cut..]);
        LatticePath::new(steps, 1)
    }

    /// The increasing m-parking function read off the path: before the
    /// `j`-th down-step there are as many up-steps as cars preferring `j`.
    pub fn to_increasing_parking(&self) -> Vec<usize> {
        let mut prefs = Vec::new();
        let mut j = 1;
        for &s in &self.steps {
            match s {
                Step::Up => prefs.push(j),
                Step::Down => j += 1,
            }
        }
        prefs
    }

    /// Inverse of `to_increasing_parking` for a weakly increasing sequence.
    pub fn from_increasing_parking(prefs: &[usize], m: usize) -> Result<Self> {
        if prefs.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain("preferences must be weakly increasing".into()));
        }
        let n = prefs.len();
        let mut steps = Vec::with_capacity(n + m * n);
        let mut idx = 0;
        for j in 1..=m * n {
            while idx < n && prefs[idx] == j {
                steps.push(Step::Up);
                idx += 1;
            }
            steps.push(Step::Down);
        }
        if idx != n {
            return Err(Error::Domain("preference outside 1..=mn".into()));
        }
        LatticePath::new(steps, m)
    }
}

/// Dyck path of an increasing parking function, checked for `m = 1`.
pub fn path_to_increasing_pf(path: &LatticePath) -> Result<ParkingFunction> {
    path.require_dyck()?;
    ParkingFunction::new(path.to_increasing_parking())
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// All m-Catalan paths with `n` up-steps, lexicographic with `U < D`.
pub fn enumerate_paths(n: usize, m: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n + m * n);
    fn go(n: usize, m: usize, ups: usize, height: usize, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if ups == n && height == 0 {
            out.push(LatticePath { steps: steps.clone(), m });
            return;
        }
        if ups < n {
            steps.push(Step::Up);
            go(n, m, ups + 1, height + m, steps, out);
            steps.pop();
        }
        if height > 0 {
            steps.push(Step::Down);
            go(n, m, ups, height - 1, steps, out);
            steps.pop();
        }
    }
    go(n, m.max(1), 0, 0, &mut steps, &mut out);
    out
}

/// Calls `visit` with the ascent word of every m-Catalan path of size `n`
/// whose first ascent has length `first_run` (all paths when `None`).
pub fn visit_ascent_words(n: usize, m: usize, first_run: Option<usize>, visit: &mut impl FnMut(&[usize])) {
    let mut word = Vec::with_capacity(n);
    if n == 0 {
        if first_run.is_none() {
            visit(&word);
        }
        return;
    }
    let runs: Vec<usize> = match first_run {
        Some(r) if (1..=n).contains(&r) => vec![r],
        Some(_) => return,
        None => (1..=n).collect(),
    };
    for r in runs {
        word.push(r);
        descend(n, m, r, m * r, &mut word, visit);
        word.pop();
    }
}

/// After an ascent: take `d >= 1` down-steps, then either stop or start a new ascent.
fn descend(n: usize, m: usize, ups: usize, height: usize, word: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if ups == n {
        // only the final descent to the axis remains
        visit(word);
        return;
    }
    for d in 1..=height {
        let h = height - d;
        for r in 1..=n - ups {
            word.push(r);
            descend(n, m, ups + r, h + m * r, word, visit);
            word.pop();
        }
    }
}

/// `(1/n) C(mn, k-1) C(n, k)`: m-Catalan paths of size `n` with `k` peaks.
pub fn m_narayana(n: usize, k: usize, m: usize) -> BigUint {
    if n == 0 {
        return if k == 0 { BigUint::from(1u32) } else { BigUint::zero() };
    }
    if k == 0 || k > n {
        return BigUint::zero();
    }
    exact_div(binomial(m * n, k - 1) * binomial(n, k), &BigUint::from(n), "m-Narayana")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dyck(s: &str) -> LatticePath {
        LatticePath::parse(s, 1).unwrap()
    }

    #[test]
    fn counts_and_order() {
        let three: Vec<String> = enumerate_paths(3, 1).iter().map(|p| p.to_string()).collect();
        assert_eq!(three, vec!["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
        assert_eq!(enumerate_paths(2, 2).len(), 3);
        assert_eq!(enumerate_paths(0, 1).len(), 1);
    }

    #[test]
    fn ascent_words() {
        assert_eq!(dyck("UDUUDUDD").ascent_word(), vec![1, 2, 1]);
        assert_eq!(dyck("UDUUDUDD").peak_count(), 3);
    }

    #[test]
    fn decomposition_examples() {
        let (k, parts) = dyck("UUDDUD").canonical_decomposition().unwrap();
        assert_eq!(k, 2);
        assert_eq!(parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["", "UD"]);
        let (k, parts) = dyck("UUUDDD").canonical_decomposition().unwrap();
        assert_eq!((k, parts.iter().all(|p| p.steps().is_empty())), (3, true));
        let (k, parts) = dyck("UDUD").canonical_decomposition().unwrap();
        assert_eq!(k, 1);
        assert_eq!(parts[0].to_string(), "UD");
    }

    #[test]
    fn first_peak() {
        let (i, c) = dyck("UUDUDD").delete_first_peak().unwrap();
        assert_eq!((i, c.to_string()), (1, "UUDD".to_string()));
        let (i, c) = dyck("UDUD").delete_first_peak().unwrap();
        assert_eq!((i, c.to_string()), (1, "UD".to_string()));
        assert_eq!(dyck("UUDD").insert_first_peak(1, 2).unwrap().to_string(), "UUDUDD");
        assert!(dyck("UUDD").delete_first_peak().is_err());
    }

    #[test]
    fn increasing_parking() {
        let f = path_to_increasing_pf(&dyck("UUDUDD")).unwrap();
        assert_eq!(f.prefs(), &[1, 1, 2]);
        assert_eq!(crate::parking::format_blocks(&f.to_blocks()), "({1,2},{3},{})");
    }

    #[test]
    fn narayana() {
        assert_eq!(m_narayana(3, 2, 1), BigUint::from(3u32));
    }
}
