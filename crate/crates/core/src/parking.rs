//! Parking functions: the parking process, block notation and the two
//! permutations attached to a parking function.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::{PatternSet, Permutation};

/// Result of running the parking process on a preference sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Every car parked. `occupant[s - 1]` is the car parked in spot `s`.
    Parked { occupant: Vec<usize> },
    /// `car` (1-based) found no free spot at or after its preference.
    Failed { car: usize },
}

/// Runs the parking process on `prefs`, whose entries must be at least 1.
/// A preference above the number of spots makes that car fail.
pub fn simulate(prefs: &[usize]) -> Result<Outcome> {
    let n = prefs.len();
    let mut occupant = vec![0usize; n];
    for (idx, &pref) in prefs.iter().enumerate() {
        if pref == 0 {
            return Err(Error::Domain("preferences start at 1".into()));
        }
        let mut spot = pref - 1;
        while spot < n && occupant[spot] != 0 {
            spot += 1;
        }
        if spot >= n {
            return Ok(Outcome::Failed { car: idx + 1 });
        }
        occupant[spot] = idx + 1;
    }
    Ok(Outcome::Parked { occupant })
}

/// Counting test: at least `i` preferences are at most `i`, for every `i`.
pub fn is_parking(prefs: &[usize]) -> bool {
    let n = prefs.len();
    let mut counts = vec![0usize; n + 1];
    for &p in prefs {
        if p == 0 || p > n {
            return false;
        }
        counts[p] += 1;
    }
    let mut total = 0;
    for (i, &c) in counts.iter().enumerate().skip(1) {
        total += c;
        if total < i {
            return false;
        }
    }
    true
}

/// A parking function, stored by its preference sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParkingFunction(Vec<usize>);

impl ParkingFunction {
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        if is_parking(&prefs) {
            Ok(ParkingFunction(prefs))
        } else {
            Err(Error::NotParking(format!("{prefs:?}")))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefs(&self) -> &[usize] {
        &self.0
    }

    /// `blocks[i - 1]` is the set of cars preferring spot `i`, increasing.
    pub fn to_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut blocks = vec![Vec::new(); n];
        for (car, &p) in self.0.iter().enumerate() {
            blocks[p - 1].push(car + 1);
        }
        blocks
    }

    /// Inverse of `to_blocks`. The blocks must partition `1..=n` (empty blocks
    /// allowed) and the first `i` blocks must hold at least `i` cars.
    pub fn from_blocks(blocks: &[Vec<usize>]) -> Result<Self> {
        let n = blocks.len();
        let mut prefs = vec![0usize; n];
        let mut covered = 0usize;
        for (i, block) in blocks.iter().enumerate() {
            for &car in block {
                if car == 0 || car > n {
                    return Err(Error::InvalidBlocks(format!("car {car} outside 1..={n}")));
                }
                if prefs[car - 1] != 0 {
                    return Err(Error::InvalidBlocks(format!("car {car} appears twice")));
                }
                prefs[car - 1] = i + 1;
            }
            covered += block.len();
            if covered < i + 1 {
                return Err(Error::NotParking(format!(
                    "the first {} blocks hold only {covered} cars",
                    i + 1
                )));
            }
        }
        Ok(ParkingFunction(prefs))
    }

    /// `rho_f`: the car parked in each spot.
    pub fn parking_permutation(&self) -> Permutation {
        match simulate(&self.0).expect("valid preferences") {
            Outcome::Parked { occupant } => Permutation::from_vec_unchecked(occupant),
            Outcome::Failed { .. } => unreachable!("parking functions always park"),
        }
    }

    /// `pi_f`: the blocks concatenated in order, each listed increasingly.
    pub fn block_permutation(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.to_blocks().concat())
    }
}

/// All parking functions of size `n` whose block permutation avoids every
/// pattern in `patterns`, built block by block with prefix pruning. Output is
/// sorted by preference sequence.
pub fn enumerate_block_avoiding(n: usize, patterns: &PatternSet) -> Vec<ParkingFunction> {
    // A block of size s puts 12..s into the block permutation.
    let max_block = (1..=n)
        .find(|&s| patterns.contains_pattern(&Permutation::identity(s)))
        .map_or(n, |s| s - 1);
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    block_dfs(n, patterns, max_block, &mut blocks, &mut word, &mut used, &mut out);
    out.sort();
    out
}

fn block_dfs(
    n: usize,
    patterns: &PatternSet,
    max_block: usize,
    blocks: &mut Vec<Vec<usize>>,
    word: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<ParkingFunction>,
) {
    let i = blocks.len();
    if i == n {
        out.push(ParkingFunction::from_blocks(blocks).expect("blocks checked during search"));
        return;
    }
    let free: Vec<usize> = (1..=n).filter(|&c| !used[c]).collect();
    let need = (i + 1).saturating_sub(word.len());
    let mut subset = Vec::new();
    subsets_up_to(&free, 0, max_block, &mut subset, &mut |block| {
        if block.len() < need {
            return;
        }
        let before = word.len();
        word.extend_from_slice(block);
        if patterns.iter().all(|p| !crate::permutation::contains(word, p.as_slice())) {
            for &c in block {
                used[c] = true;
            }
            blocks.push(block.to_vec());
            block_dfs(n, patterns, max_block, blocks, word, used, out);
            blocks.pop();
            for &c in block {
                used[c] = false;
            }
        }
        word.truncate(before);
    });
}

fn subsets_up_to(items: &[usize], start: usize, max: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    visit(cur);
    if cur.len() == max {
        return;
    }
    for j in start..items.len() {
        cur.push(items[j]);
        subsets_up_to(items, j + 1, max, cur, visit);
        cur.pop();
    }
}

/// All parking functions of size `n` in lexicographic order of preferences.
pub fn enumerate_parking_functions(n: usize) -> Vec<ParkingFunction> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut counts = vec![0usize; n + 2];
    extend(n, &mut prefix, &mut counts, &mut out);
    out
}

fn extend(n: usize, prefix: &mut Vec<usize>, counts: &mut [usize], out: &mut Vec<ParkingFunction>) {
    if prefix.len() == n {
        out.push(ParkingFunction(prefix.clone()));
        return;
    }
    for v in 1..=n {
        prefix.push(v);
        counts[v] += 1;
        if completable(n, prefix.len(), counts) {
            extend(n, prefix, counts, out);
        }
        counts[v] -= 1;
        prefix.pop();
    }
}

/// Can a prefix with these value counts still be completed to a parking function?
fn completable(n: usize, placed: usize, counts: &[usize]) -> bool {
    let free = n - placed;
    let mut total = 0;
    for (i, &c) in counts.iter().enumerate().take(n + 1).skip(1) {
        total += c;
        if total + free < i {
            return false;
        }
    }
    true
}

impl fmt::Display for ParkingFunction {
    /// Preference text, e.g. `4,4,6,4,2,2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ParkingFunction(Vec::new()));
        }
        let mut prefs = Vec::new();
        let mut column = 1;
        for part in s.split(',') {
            let t = part.trim();
            let v = t
                .parse::<usize>()
                .map_err(|_| Error::parse(1, column, format!("expected a number, found {t:?}")))?;
            prefs.push(v);
            column += part.len() + 1;
        }
        ParkingFunction::new(prefs)
    }
}

/// Block text such as `({7},{5,6},{},{1,2,4},{},{3},{})`.
pub fn format_blocks(blocks: &[Vec<usize>]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    format!("({})", parts.join(","))
}

/// Parses block text. `line` is used only for error positions.
pub fn parse_blocks(s: &str, line: usize) -> Result<Vec<Vec<usize>>> {
    let chars: Vec<char> = s.chars().collect();
    let mut pos = 0;
    let err = |pos: usize, msg: &str| Error::parse(line, pos + 1, msg.to_string());
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if chars.get(pos) != Some(&'(') {
        return Err(err(pos, "expected '('"));
    }
    pos += 1;
    let mut blocks = Vec::new();
    skip_ws(&mut pos);
    if chars.get(pos) == Some(&')') {
        pos += 1;
    } else {
        loop {
            skip_ws(&mut pos);
            if chars.get(pos) != Some(&'{') {
                return Err(err(pos, "expected '{'"));
            }
            pos += 1;
            let mut block = Vec::new();
            skip_ws(&mut pos);
            if chars.get(pos) == Some(&'}') {
                pos += 1;
            } else {
                loop {
                    skip_ws(&mut pos);
                    let start = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(err(pos, "expected a number"));
                    }
                    let text: String = chars[start..pos].iter().collect();
                    let v = text.parse::<usize>().map_err(|_| err(start, "number too large"))?;
                    block.push(v);
                    skip_ws(&mut pos);
                    match chars.get(pos) {
                        Some(',') => pos += 1,
                        Some('}') => {
                            pos += 1;
                            break;
                        }
                        _ => return Err(err(pos, "expected ',' or '}'")),
                    }
                }
            }
            if block.windows(2).any(|w| w[0] >= w[1]) {
                return Err(err(pos - 1, "block entries must be increasing"));
            }
            blocks.push(block);
            skip_ws(&mut pos);
            match chars.get(pos) {
                Some(',') => pos += 1,
                Some(')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(err(pos, "expected ',' or ')'")),
            }
        }
    }
    skip_ws(&mut pos);
    if pos != chars.len() {
        return Err(err(pos, "trailing characters"));
    }
    Ok(blocks)
}
