//! Parking functions avoiding 123 and 132, and trees with odd root degree.
//!
//! Blocks split into clusters from left to right. Each cluster takes the
//! largest remaining cars `low..=high`:
//! - extend: `{high},{high-1},...,{low}`
//! - branch: `{high-1},...,{low},{high}`
//! - jump: `{high-1},...,{low+1},{low,high}` plus its matched empty block.
//!
//! The tree is grown from a single edge by processing clusters from last to
//! first; vertex labels name where later clusters attach.

use serde::Serialize;

use super::tables::table_123_132;
use super::tree::{Arena, OrderedTree};
use super::{check_member, partners, LabeledTree};
use crate::error::{Error, Result};
use crate::parking::ParkingFunction;
use crate::permutation::PatternSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind132 {
    Extend,
    Branch,
    Jump,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cluster132 {
    pub kind: Kind132,
    pub low: usize,
    pub high: usize,
    /// Indices of the nonempty blocks, in order.
    pub blocks: Vec<usize>,
    /// Index of the matched empty block (jump clusters only).
    pub empty: Option<usize>,
}

impl Cluster132 {
    pub fn length(&self) -> usize {
        self.high - self.low + 1
    }
}

fn patterns() -> PatternSet {
    "123,132".parse().expect("valid patterns")
}

/// Cluster decomposition of a block sequence from the family.
pub fn clusters_123_132(blocks: &[Vec<usize>]) -> Result<Vec<Cluster132>> {
    let partner = partners(blocks)?;
    let mut alive = vec![true; blocks.len()];
    let mut top: usize = blocks.iter().map(Vec::len).sum();
    let mut out = Vec::new();
    while top > 0 {
        let order: Vec<usize> = (0..blocks.len()).filter(|&i| alive[i]).collect();
        let first = order[0];
        let b0 = &blocks[first];
        let bad = || Error::Domain(format!("blocks do not split into clusters at car {top}"));
        let cluster = if b0.as_slice() == [top] {
            let mut taken = Vec::new();
            for &i in &order {
                if taken.len() < top && blocks[i].as_slice() == [top - taken.len()] {
                    taken.push(i);
                } else {
                    break;
                }
            }
            let low = top - taken.len() + 1;
            Cluster132 { kind: Kind132::Extend, low, high: top, blocks: taken, empty: None }
        } else if b0.first() == Some(&(top - 1)) {
            let mut taken = Vec::new();
            let mut v = top - 1;
            let mut found = None;
            for &i in &order {
                let b = blocks[i].as_slice();
                if v >= 1 && b == [v] {
                    taken.push(i);
                    v -= 1;
                } else if b == [top] && !taken.is_empty() {
                    taken.push(i);
                    found = Some(Cluster132 { kind: Kind132::Branch, low: v + 1, high: top, blocks: Vec::new(), empty: None });
                    break;
                } else if v >= 1 && b == [v, top] {
                    taken.push(i);
                    let empty = partner[i].ok_or_else(bad)?;
                    found = Some(Cluster132 { kind: Kind132::Jump, low: v, high: top, blocks: Vec::new(), empty: Some(empty) });
                    break;
                } else {
                    return Err(bad());
                }
            }
            let mut c = found.ok_or_else(bad)?;
            c.blocks = taken;
            c
        } else {
            return Err(bad());
        };
        for &i in cluster.blocks.iter().chain(cluster.empty.iter()) {
            alive[i] = false;
        }
        top = cluster.low - 1;
        out.push(cluster);
    }
    if alive.iter().any(|&a| a) {
        return Err(Error::Domain("blocks left over after the cluster decomposition".into()));
    }
    Ok(out)
}

/// Label the vertex a jump cluster attaches to, or `None` for the root.
fn jump_target(blocks: &[Vec<usize>], clusters: &[Cluster132], owner: &[usize], empty: usize) -> Option<usize> {
    let x = (empty + 1..blocks.len()).find(|&i| !blocks[i].is_empty())?;
    let c = &clusters[owner[x]];
    let l = blocks[x][0];
    Some(match c.kind {
        Kind132::Extend => l - 1,
        Kind132::Branch => {
            if l < c.high {
                l
            } else {
                c.low - 1
            }
        }
        Kind132::Jump => l,
    })
}

/// Runs the cluster recursion from a single edge. Returns the arena and the
/// creation step of each label (0 for the starting vertex).
fn grow(blocks: &[Vec<usize>]) -> Result<(Arena, Vec<usize>)> {
    let clusters = clusters_123_132(blocks)?;
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut owner = vec![usize::MAX; blocks.len()];
    for (ci, c) in clusters.iter().enumerate() {
        for &i in c.blocks.iter().chain(c.empty.iter()) {
            owner[i] = ci;
        }
    }
    let mut a = Arena::new();
    let mut by_label = vec![0usize; n + 1];
    let mut created = vec![0usize; n + 1];
    by_label[0] = a.add_child(a.root, 0, Some(0));
    for (step, ci) in (0..clusters.len()).rev().enumerate() {
        let t = step + 1;
        let c = &clusters[ci];
        let k = c.low - 1;
        let new_ids = match c.kind {
            Kind132::Extend => {
                let labels: Vec<_> = (c.low..=c.high).map(Some).collect();
                let ids = a.attach_left_path(by_label[k], &labels);
                labels.into_iter().flatten().zip(ids).collect::<Vec<_>>()
            }
            Kind132::Branch | Kind132::Jump => {
                let at = if c.kind == Kind132::Branch {
                    by_label[k]
                } else {
                    match jump_target(blocks, &clusters, &owner, c.empty.expect("jump has an empty block")) {
                        Some(l) => by_label[l],
                        None => a.root,
                    }
                };
                let labels: Vec<_> = (c.low..c.high).map(Some).collect();
                let path = a.attach_left_path(at, &labels);
                let leaf = a.add_child(at, 0, Some(c.high));
                let mut pairs: Vec<_> = labels.into_iter().flatten().zip(path).collect();
                pairs.push((c.high, leaf));
                pairs
            }
        };
        for (l, id) in new_ids {
            by_label[l] = id;
            created[l] = t;
        }
    }
    Ok((a, created))
}

pub(crate) fn phi_blocks(blocks: &[Vec<usize>]) -> Result<LabeledTree> {
    check_member(blocks, &patterns())?;
    if blocks.len() <= 3 {
        return Ok(table_123_132().forward[blocks].clone());
    }
    let (a, _) = grow(blocks)?;
    Ok(LabeledTree::from_arena(&a))
}

/// The labeled tree of `f`; its shape has `n + 1` edges and odd root degree.
pub fn phi_123_132(f: &ParkingFunction) -> Result<LabeledTree> {
    phi_blocks(&f.to_blocks())
}

/// Runs the recursion at every size, with no table lookup, and also returns
/// the creation step of each label.
pub fn phi_123_132_traced(f: &ParkingFunction) -> Result<(LabeledTree, Vec<usize>)> {
    let blocks = f.to_blocks();
    check_member(&blocks, &patterns())?;
    let (a, created) = grow(&blocks)?;
    Ok((LabeledTree::from_arena(&a), created))
}

/// Walks down from the root to the vertex whose two left-most branches are
/// peeled off by the inverse map. Returns child indices from the root.
pub fn find_target_vertex(t: &OrderedTree) -> Result<Vec<usize>> {
    let mut path = Vec::new();
    let mut cur = t;
    loop {
        while cur.children().len() == 1 {
            path.push(0);
            cur = &cur.children()[0];
        }
        if cur.children().is_empty() {
            return Err(Error::Domain("a path has no branching vertex".into()));
        }
        let (b1, b2) = (&cur.children()[0], &cur.children()[1]);
        if b2.has_branching() {
            path.push(1);
            cur = b2;
        } else if b1.has_branching() {
            path.push(0);
            cur = b1;
        } else {
            return Ok(path);
        }
    }
}

fn singles_down(from: usize, to: usize) -> impl Iterator<Item = Vec<usize>> {
    (to..=from).rev().map(|i| vec![i])
}

fn psi_blocks(t: &OrderedTree) -> Result<Vec<Vec<usize>>> {
    let n = t.edges().checked_sub(1).ok_or_else(|| Error::Domain("tree has no edges".into()))?;
    if n <= 3 {
        return table_123_132()
            .backward
            .get(t)
            .cloned()
            .ok_or_else(|| Error::Domain(format!("tree {t} is outside the family")));
    }
    if t.is_path() {
        return Ok(singles_down(n, 1).collect());
    }
    let vpath = find_target_vertex(t)?;
    let v = t.subtree(&vpath).expect("path from the walk");
    let l1 = v.children()[0].edges() + 1;
    if l1 > 1 {
        let mut t1 = t.clone();
        t1.subtree_mut(&vpath).children_mut()[0] = OrderedTree::leaf();
        let n1 = n - (l1 - 1);
        let mut out: Vec<_> = singles_down(n, n1 + 1).collect();
        out.extend(psi_blocks(&t1)?);
        return Ok(out);
    }
    let l2 = v.children()[1].edges() + 1;
    let k = n - 1 - l2;
    let mut rest = t.clone();
    rest.subtree_mut(&vpath).children_mut().drain(0..2);
    let tail = psi_blocks(&rest)?;
    let label = if vpath.is_empty() { None } else { phi_blocks(&tail)?.label_at(&vpath) };
    if label == Some(k) {
        let mut out: Vec<_> = singles_down(n - 1, k + 1).collect();
        out.push(vec![n]);
        out.extend(tail);
        return Ok(out);
    }
    let mut out: Vec<_> = singles_down(n - 1, k + 2).collect();
    out.push(vec![k + 1, n]);
    let at = match label {
        None => tail.len(),
        Some(l) => {
            let clusters = clusters_123_132(&tail)?;
            let c = clusters
                .iter()
                .find(|c| c.low <= l + 1 && l < c.high)
                .ok_or_else(|| Error::Invariant(format!("no cluster holds car {}", l + 1)))?;
            let want: usize = match c.kind {
                Kind132::Extend => l + 1,
                Kind132::Branch if l + 1 == c.low => c.high,
                Kind132::Branch | Kind132::Jump => l,
            };
            tail.iter()
                .position(|b| b.contains(&want))
                .ok_or_else(|| Error::Invariant(format!("car {want} missing")))?
        }
    };
    let mut tail = tail;
    tail.insert(at, Vec::new());
    out.extend(tail);
    Ok(out)
}

/// Inverse of `phi_123_132`: a tree with `n + 1` edges and odd root degree
/// to a parking function of size `n`.
pub fn psi_123_132(t: &OrderedTree) -> Result<ParkingFunction> {
    if t.root_degree().is_multiple_of(2) {
        return Err(Error::Domain("root degree must be odd".into()));
    }
    let blocks = psi_blocks(t)?;
    check_member(&blocks, &patterns())?;
    ParkingFunction::from_blocks(&blocks)
}
