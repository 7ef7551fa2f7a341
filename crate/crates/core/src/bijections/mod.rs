//! Bijections between parking functions avoiding {123,132} or {123,213}
//! in the block permutation and families of ordered rooted trees.
//!
//! Inputs are handled through their block sequences. Because 123 is
//! avoided, blocks have at most two cars, and each two-car block is paired
//! with an empty block by bracket matching ("(" for a pair, ")" for an
//! empty block).

mod avoid_123_132;
mod avoid_123_213;
mod tables;
pub mod tree;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parking::ParkingFunction;
use crate::permutation::{contains, PatternSet};

pub use avoid_123_132::{
    clusters_123_132, find_target_vertex, phi_123_132, phi_123_132_traced, psi_123_132, Cluster132, Kind132,
};
pub use avoid_123_213::{
    clusters_123_213, phi_123_213, phi_123_213_by_recursion, psi_123_213, Cluster213, Kind213,
};
pub use tree::{enumerate_trees, is_full_right_subtree, parse_tree, OrderedTree, TreeFilter};

use tree::Arena;

/// The two pattern pairs with a tree bijection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Avoiding 123 and 132; trees with odd root degree.
    P123_132,
    /// Avoiding 123 and 213; trees with root degree at least two.
    P123_213,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::P123_132, Family::P123_213];

    pub fn patterns(self) -> PatternSet {
        match self {
            Family::P123_132 => "123,132".parse().expect("valid patterns"),
            Family::P123_213 => "123,213".parse().expect("valid patterns"),
        }
    }

    pub fn tree_filter(self) -> TreeFilter {
        match self {
            Family::P123_132 => TreeFilter::OddRoot,
            Family::P123_213 => TreeFilter::RootGe2,
        }
    }

    /// Parking function to tree (labels dropped).
    pub fn forward(self, f: &ParkingFunction) -> Result<OrderedTree> {
        match self {
            Family::P123_132 => phi_123_132(f).map(|t| t.shape()),
            Family::P123_213 => phi_123_213(f),
        }
    }

    /// Tree with `n + 1` edges to parking function of size `n`.
    pub fn backward(self, t: &OrderedTree) -> Result<ParkingFunction> {
        match self {
            Family::P123_132 => psi_123_132(t),
            Family::P123_213 => psi_123_213(t),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::P123_132 => "123-132",
            Family::P123_213 => "123-213",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "123-132" | "123,132" => Ok(Family::P123_132),
            "123-213" | "123,213" => Ok(Family::P123_213),
            _ => Err(Error::Domain(format!("unknown bijection family {s:?}"))),
        }
    }
}

/// Pairs `(pair_block, empty_block)` of block indices, matched like brackets.
pub fn match_empty_blocks(blocks: &[Vec<usize>]) -> Result<Vec<(usize, usize)>> {
    let mut open = Vec::new();
    let mut pairs = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        match b.len() {
            0 => {
                let j = open
                    .pop()
                    .ok_or_else(|| Error::InvalidBlocks(format!("empty block {} has no two-car block before it", i + 1)))?;
                pairs.push((j, i));
            }
            1 => {}
            2 => open.push(i),
            _ => return Err(Error::InvalidBlocks(format!("block {} has more than two cars", i + 1))),
        }
    }
    if let Some(j) = open.pop() {
        return Err(Error::InvalidBlocks(format!("two-car block {} has no matching empty block", j + 1)));
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// For every block index, the index of its bracket partner, if any.
pub(crate) fn partners(blocks: &[Vec<usize>]) -> Result<Vec<Option<usize>>> {
    let mut p = vec![None; blocks.len()];
    for (a, b) in match_empty_blocks(blocks)? {
        p[a] = Some(b);
        p[b] = Some(a);
    }
    Ok(p)
}

/// Checks that `blocks` describe a parking function whose block permutation
/// avoids `patterns`.
pub(crate) fn check_member(blocks: &[Vec<usize>], patterns: &PatternSet) -> Result<()> {
    ParkingFunction::from_blocks(blocks)?;
    let word: Vec<usize> = blocks.concat();
    for p in patterns.iter() {
        if contains(&word, p.as_slice()) {
            return Err(Error::Domain(format!("block permutation contains {p}")));
        }
    }
    Ok(())
}

/// A rooted ordered tree whose non-root vertices carry labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    pub label: Option<usize>,
    pub children: Vec<LabeledTree>,
}

impl LabeledTree {
    pub fn shape(&self) -> OrderedTree {
        OrderedTree::with_children(self.children.iter().map(|c| c.shape()).collect())
    }

    pub fn label_at(&self, path: &[usize]) -> Option<usize> {
        let mut t = self;
        for &i in path {
            t = t.children.get(i)?;
        }
        t.label
    }

    /// Labels in preorder.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn go(t: &LabeledTree, out: &mut Vec<usize>) {
            out.extend(t.label);
            for c in &t.children {
                go(c, out);
            }
        }
        go(self, &mut out);
        out
    }

    pub(crate) fn from_arena(a: &Arena) -> Self {
        fn go(a: &Arena, v: usize) -> LabeledTree {
            LabeledTree {
                label: a.nodes[v].label,
                children: a.nodes[v].children.iter().map(|&c| go(a, c)).collect(),
            }
        }
        go(a, a.root)
    }

    fn write(&self, out: &mut String) {
        out.push('(');
        if let Some(l) = self.label {
            out.push_str(&l.to_string());
        }
        for c in &self.children {
            c.write(out);
        }
        out.push(')');
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    /// Text like `((0(1)(2)))`: each vertex is `(`, an optional label, its
    /// children, then `)`.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let t = parse_labeled(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::parse(1, pos + 1, "trailing characters after the tree"));
        }
        Ok(t)
    }
}

fn parse_labeled(b: &[u8], pos: &mut usize) -> Result<LabeledTree> {
    if b.get(*pos) != Some(&b'(') {
        return Err(Error::parse(1, *pos + 1, "expected '('"));
    }
    *pos += 1;
    let start = *pos;
    while b.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    let label = if *pos > start {
        Some(std::str::from_utf8(&b[start..*pos]).unwrap().parse().map_err(|_| Error::parse(1, start + 1, "bad label"))?)
    } else {
        None
    };
    let mut children = Vec::new();
    loop {
        match b.get(*pos) {
            Some(b'(') => children.push(parse_labeled(b, pos)?),
            Some(b')') => {
                *pos += 1;
                return Ok(LabeledTree { label, children });
            }
            Some(&c) => return Err(Error::parse(1, *pos + 1, format!("unexpected character {:?}", c as char))),
            None => return Err(Error::parse(1, *pos + 1, "unbalanced '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::parse_blocks;

    #[test]
    fn bracket_matching() {
        let b = parse_blocks("({2,3},{},{1})", 1).unwrap();
        assert_eq!(match_empty_blocks(&b).unwrap(), vec![(0, 1)]);
        let b = parse_blocks("({1,2},{3,4},{},{})", 1).unwrap();
        assert_eq!(match_empty_blocks(&b).unwrap(), vec![(0, 3), (1, 2)]);
        let b = parse_blocks("({1,2,3},{},{})", 1).unwrap();
        assert!(match_empty_blocks(&b).is_err());
    }

    #[test]
    fn labeled_text() {
        let t: LabeledTree = "((0(2)(1)))".parse().unwrap();
        assert_eq!(t.to_string(), "((0(2)(1)))");
        assert_eq!(t.label_at(&[0, 1]), Some(1));
        assert_eq!(t.shape().to_string(), "((()()))");
    }
}
