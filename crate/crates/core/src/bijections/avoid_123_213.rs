//! Parking functions avoiding 123 and 213, and trees whose root has degree
//! at least two.
//!
//! A cluster on cars `low..=high` starts with the block holding `low`:
//! - closed: `{low},{high},...,{low+1}`, or `{low,high},{high-1},...,{low+1}`
//!   with the matched empty block right after one of its own blocks. The
//!   parameter counts the cluster blocks after the empty block (for the
//!   all-singleton form, the blocks after the first).
//! - open: the same two-car form, with the empty block further right,
//!   inside the region of a later closed cluster.
//!
//! Closed clusters stack a path on top of the old root. Open clusters
//! re-root the tree at a vertex of an earlier stacked path. Each such step
//! needs the part being kept to sit as a full right subtree; this is
//! checked every time and reported as an invariant error if it fails.

use serde::Serialize;

use super::tables::table_123_213;
use super::tree::{is_full_right_subtree, Arena, OrderedTree};
use super::{check_member, partners};
use crate::error::{Error, Result};
use crate::parking::ParkingFunction;
use crate::permutation::PatternSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum Kind213 {
    Closed { parameter: usize },
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cluster213 {
    pub kind: Kind213,
    pub low: usize,
    pub high: usize,
    /// Indices of the nonempty blocks, in order.
    pub blocks: Vec<usize>,
    pub empty: Option<usize>,
}

impl Cluster213 {
    pub fn length(&self) -> usize {
        self.high - self.low + 1
    }

    /// All block indices of the cluster in position order.
    fn positions(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.blocks.iter().chain(self.empty.iter()).copied().collect();
        p.sort_unstable();
        p
    }
}

fn patterns() -> PatternSet {
    "123,213".parse().expect("valid patterns")
}

/// Cluster decomposition of a block sequence from the family.
pub fn clusters_123_213(blocks: &[Vec<usize>]) -> Result<Vec<Cluster213>> {
    let partner = partners(blocks)?;
    let mut alive = vec![true; blocks.len()];
    let mut top: usize = blocks.iter().map(Vec::len).sum();
    let mut out = Vec::new();
    while top > 0 {
        let order: Vec<usize> = (0..blocks.len()).filter(|&i| alive[i]).collect();
        let bad = || Error::Domain(format!("blocks do not split into clusters at car {top}"));
        let first = order[0];
        let b0 = blocks[first].as_slice();
        let cluster = match *b0 {
            [low] => {
                let len = top - low + 1;
                let mut taken = vec![first];
                for (j, &i) in order[1..].iter().take(len - 1).enumerate() {
                    if blocks[i].as_slice() != [top - j] {
                        return Err(bad());
                    }
                    taken.push(i);
                }
                if taken.len() != len {
                    return Err(bad());
                }
                Cluster213 { kind: Kind213::Closed { parameter: len - 1 }, low, high: top, blocks: taken, empty: None }
            }
            [low, high] if high == top => {
                let len = top - low + 1;
                let empty = partner[first].ok_or_else(bad)?;
                let mut taken = vec![first];
                let mut next = top - 1;
                let mut closed_at = None;
                for &i in &order[1..] {
                    if taken.len() == len - 1 {
                        break;
                    }
                    if i == empty {
                        closed_at = Some(taken.len() - 1);
                        continue;
                    }
                    if blocks[i].as_slice() != [next] {
                        return Err(bad());
                    }
                    taken.push(i);
                    next -= 1;
                }
                if taken.len() != len - 1 {
                    return Err(bad());
                }
                if closed_at.is_none() {
                    let pos = order.iter().position(|&i| i == empty).expect("partner is alive");
                    if order[pos - 1] == *taken.last().unwrap() {
                        closed_at = Some(len - 2);
                    }
                }
                let kind = match closed_at {
                    Some(j) => Kind213::Closed { parameter: len - 2 - j },
                    None => Kind213::Open,
                };
                Cluster213 { kind, low, high: top, blocks: taken, empty: Some(empty) }
            }
            _ => return Err(bad()),
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

/// Where an open cluster cuts: the closed cluster whose region holds its
/// empty block, and how many of that cluster's blocks lie to the right.
fn open_anchor(blocks: &[Vec<usize>], clusters: &[Cluster213], owner: &[usize], empty: usize) -> Result<(usize, usize)> {
    let x = (0..empty)
        .rev()
        .find(|&i| !blocks[i].is_empty())
        .ok_or_else(|| Error::Invariant("open cluster with nothing before its empty block".into()))?;
    let j = owner[x];
    let ell = clusters[j].positions().iter().filter(|&&p| p > empty).count();
    Ok((j, ell))
}

struct Record {
    /// Vertices added above the old root, top first; the last is the old root.
    stack: Vec<usize>,
    /// Arena size before this cluster was processed.
    before: usize,
}

/// Runs the cluster recursion from a single edge. Returns the tree and the
/// number of full-right-subtree checks made.
fn grow(blocks: &[Vec<usize>]) -> Result<(OrderedTree, usize)> {
    let clusters = clusters_123_213(blocks)?;
    let mut owner = vec![usize::MAX; blocks.len()];
    for (ci, c) in clusters.iter().enumerate() {
        for &i in c.blocks.iter().chain(c.empty.iter()) {
            owner[i] = ci;
        }
    }
    let mut a = Arena::new();
    a.add_child(a.root, 0, None);
    let mut records: Vec<Option<Record>> = (0..clusters.len()).map(|_| None).collect();
    let mut checks = 0;
    for ci in (0..clusters.len()).rev() {
        let c = &clusters[ci];
        let len = c.length();
        let before = a.len();
        match c.kind {
            Kind213::Closed { parameter } => {
                let mut stack = vec![a.root];
                for _ in 0..parameter {
                    let p = a.new_node(None);
                    a.set_children(p, vec![*stack.last().unwrap()]);
                    stack.push(p);
                }
                stack.reverse();
                a.root = stack[0];
                a.nodes[a.root].parent = None;
                a.attach_left_path(a.root, &vec![None; len - parameter]);
                records[ci] = Some(Record { stack, before });
            }
            Kind213::Open => {
                let (j, ell) = open_anchor(blocks, &clusters, &owner, c.empty.expect("open cluster has an empty block"))?;
                let rec = records[j].as_ref().expect("later clusters are processed first");
                let lj = match clusters[j].kind {
                    Kind213::Closed { parameter } => parameter,
                    Kind213::Open => {
                        return Err(Error::Invariant(format!("open cluster {} points into an open cluster", ci + 1)))
                    }
                };
                if ell > lj {
                    return Err(Error::Invariant(format!("open cluster {} cuts above a stacked path", ci + 1)));
                }
                let v = rec.stack[lj - ell];
                let kept_stack = &rec.stack[lj - ell + 1..];
                let in_kept = |id: usize| id < rec.before || kept_stack.contains(&id);
                check_kept(&a, v, &in_kept)?;
                checks += 1;
                reroot(&mut a, v, &in_kept, len);
                records[ci] = Some(Record { stack: Vec::new(), before });
            }
        }
    }
    Ok((a.to_tree(), checks))
}

/// The kept part at `v` must be a full right subtree: `v` on the right-most
/// descent, the kept branches a nonempty suffix of its children, and nothing
/// else mixed in.
fn check_kept(a: &Arena, v: usize, in_kept: &dyn Fn(usize) -> bool) -> Result<()> {
    let fail = |why: &str| Err(Error::Invariant(format!("kept part is not a full right subtree: {why}")));
    let children = &a.nodes[v].children;
    let split = children.iter().position(|&c| in_kept(c)).unwrap_or(children.len());
    if children[split..].iter().any(|&c| !in_kept(c)) {
        return fail("kept branches are not a suffix");
    }
    let branches = children.len() - split;
    if !is_full_right_subtree(&a.to_tree(), &a.path_to(v), branches) {
        return fail("not on the right-most descent");
    }
    let mut below = Vec::new();
    for &c in &children[split..] {
        a.descendants(c, &mut below);
    }
    let total = (0..a.len()).filter(|&id| id != v && in_kept(id)).count();
    if below.len() != total || below.iter().any(|&id| !in_kept(id)) {
        return fail("vertex sets differ");
    }
    Ok(())
}

fn reroot(a: &mut Arena, v: usize, in_kept: &dyn Fn(usize) -> bool, len: usize) {
    let old_root = a.root;
    let x = a.new_node(None);
    let children = a.nodes[v].children.clone();
    let split = children.iter().position(|&c| in_kept(c)).unwrap_or(children.len());
    let (others, kept) = children.split_at(split);
    let mut chain = vec![v];
    while let Some(p) = a.nodes[*chain.last().unwrap()].parent {
        chain.push(p);
    }
    let mut x_children = Vec::new();
    if chain.len() > 1 {
        for s in 1..chain.len() {
            let u = chain[s];
            let mut ch = a.nodes[u].children.clone();
            debug_assert_eq!(ch.last(), Some(&chain[s - 1]));
            ch.pop();
            let mut new_children = Vec::with_capacity(ch.len() + 1);
            if s + 1 < chain.len() {
                new_children.push(chain[s + 1]);
            }
            new_children.extend(ch);
            a.set_children(u, new_children);
        }
        x_children.push(chain[1]);
    }
    x_children.extend_from_slice(others);
    a.set_children(x, x_children);
    let mut v_children = vec![x];
    v_children.extend_from_slice(kept);
    a.set_children(v, v_children);
    a.root = v;
    a.nodes[v].parent = None;
    let attach = if chain.len() > 1 { old_root } else { x };
    a.attach_left_path(attach, &vec![None; len - 1]);
}

/// The tree of `f`: `n + 1` edges, root degree at least two (unless `n = 0`).
pub fn phi_123_213(f: &ParkingFunction) -> Result<OrderedTree> {
    let blocks = f.to_blocks();
    check_member(&blocks, &patterns())?;
    if blocks.len() <= 3 {
        return Ok(table_123_213().forward[&blocks].clone());
    }
    grow(&blocks).map(|(t, _)| t)
}

/// Runs the recursion at every size, with no table lookup. Also returns the
/// number of full-right-subtree checks that passed.
pub fn phi_123_213_by_recursion(f: &ParkingFunction) -> Result<(OrderedTree, usize)> {
    let blocks = f.to_blocks();
    check_member(&blocks, &patterns())?;
    grow(&blocks)
}

/// Blocks of a closed cluster on `low..=high` with the given parameter.
fn closed_blocks(low: usize, high: usize, parameter: usize) -> Vec<Vec<usize>> {
    let len = high - low + 1;
    if parameter == len - 1 {
        let mut out = vec![vec![low]];
        out.extend((low + 1..=high).rev().map(|i| vec![i]));
        return out;
    }
    let mut out = vec![vec![low, high]];
    out.extend((low + 1..high).rev().map(|i| vec![i]));
    out.insert(len - 1 - parameter, Vec::new());
    out
}

/// Depth of the first vertex with two or more children going down from `t`
/// along first children, or the depth of the leaf reached.
fn first_branching(t: &OrderedTree) -> (usize, bool) {
    let mut cur = t;
    let mut depth = 0;
    while cur.children().len() == 1 {
        cur = &cur.children()[0];
        depth += 1;
    }
    (depth, !cur.children().is_empty())
}

fn psi_blocks(t: &OrderedTree) -> Result<Vec<Vec<usize>>> {
    let edges = t.edges();
    if edges == 0 {
        return Err(Error::Domain("tree has no edges".into()));
    }
    let n = edges - 1;
    if n <= 3 {
        return table_123_213()
            .backward
            .get(t)
            .cloned()
            .ok_or_else(|| Error::Domain(format!("tree {t} is outside the family")));
    }
    let d = t.root_degree();
    if d < 2 {
        return Err(Error::Domain("root degree must be at least two".into()));
    }
    // The right part: either a bare path of `ell + 1` edges, or a subtree
    // hanging `ell` edges below the root.
    let (ell, rest) = if d == 2 {
        let (depth, branching) = first_branching(&t.children()[1]);
        if branching {
            let path = vec![0; depth];
            (depth + 1, Some(t.children()[1].subtree(&path).unwrap().clone()))
        } else {
            (depth, None)
        }
    } else {
        (0, Some(OrderedTree::with_children(t.children()[1..].to_vec())))
    };

    // Deepest branching vertex on the left-most path below the root.
    let mut cur = &t.children()[0];
    let mut depth = 1;
    let mut deepest = None;
    loop {
        if cur.children().len() >= 2 {
            deepest = Some(depth);
        }
        match cur.children().first() {
            Some(c) => {
                cur = c;
                depth += 1;
            }
            None => break,
        }
    }
    let leaf_depth = depth;

    let Some(w_depth) = deepest else {
        let k = n - leaf_depth;
        let mut out = closed_blocks(k - ell + 1, n, ell);
        if let Some(rest) = rest {
            out.extend(psi_blocks(&rest)?);
        }
        return Ok(out);
    };

    let k = n - 1 - (leaf_depth - w_depth);
    let reduced = cut_and_reroot(t, w_depth);
    let tail = psi_blocks(&reduced)?;
    let b = rest.as_ref().map_or(0, |r| r.edges() - 1);
    if k == 0 || b >= k {
        return Err(Error::Domain(format!("tree {t} is outside the family")));
    }
    let clusters = clusters_123_213(&tail)?;
    let c = clusters
        .iter()
        .find(|c| c.low <= b + 1 && b < c.high)
        .ok_or_else(|| Error::Invariant(format!("no cluster holds car {}", b + 1)))?;
    let at = if ell >= 1 {
        let pos = c.positions();
        if ell > pos.len() {
            return Err(Error::Domain(format!("tree {t} is outside the family")));
        }
        pos[pos.len() - ell]
    } else if b == 0 {
        tail.len()
    } else {
        tail.iter().position(|blk| blk.iter().any(|&x| x <= b)).expect("cars 1..=b present")
    };
    let mut out = vec![vec![k + 1, n]];
    out.extend((k + 2..n).rev().map(|i| vec![i]));
    let mut tail = tail;
    tail.insert(at, Vec::new());
    out.extend(tail);
    Ok(out)
}

/// Removes the left-most path below the branching vertex at depth `w_depth`
/// on the left-most descent, merges the root's first edge, and re-roots at
/// that vertex.
fn cut_and_reroot(t: &OrderedTree, w_depth: usize) -> OrderedTree {
    let mut a = Arena::from_tree(t);
    let mut line = vec![a.root];
    for _ in 0..w_depth {
        let last = *line.last().unwrap();
        line.push(a.nodes[last].children[0]);
    }
    let w = line[w_depth];
    a.nodes[w].children.remove(0);
    let c1 = line[1];
    let mut root_children = a.nodes[c1].children.clone();
    root_children.extend_from_slice(&a.nodes[a.root].children[1..]);
    a.set_children(a.root, root_children);
    line.remove(1);
    // `line` now runs root, ..., w with w merged into the root if it was c1.
    let w = if w == c1 { a.root } else { w };
    if w != a.root {
        let chain: Vec<usize> = line.iter().rev().copied().collect();
        for s in 1..chain.len() {
            let u = chain[s];
            let mut ch = a.nodes[u].children.clone();
            ch.remove(0);
            if s + 1 < chain.len() {
                ch.push(chain[s + 1]);
            }
            a.set_children(u, ch);
        }
        let mut wc = a.nodes[w].children.clone();
        wc.push(chain[1]);
        a.set_children(w, wc);
        a.root = w;
        a.nodes[w].parent = None;
    }
    a.to_tree()
}

/// Inverse of `phi_123_213`.
pub fn psi_123_213(t: &OrderedTree) -> Result<ParkingFunction> {
    let blocks = psi_blocks(t)?;
    check_member(&blocks, &patterns())?;
    ParkingFunction::from_blocks(&blocks)
}
