//! Ordered rooted trees, their balanced-parentheses text, and a mutable
//! arena used while trees are being built or cut apart.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered rooted tree; children are kept left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree { children: Vec::new() }
    }

    pub fn with_children(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    /// A path hanging down from the root with `edges` edges.
    pub fn path(edges: usize) -> Self {
        (0..edges).fold(OrderedTree::leaf(), |t, _| OrderedTree::with_children(vec![t]))
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edges()).sum()
    }

    pub fn root_degree(&self) -> usize {
        self.children.len()
    }

    /// True when no vertex has more than one child.
    pub fn is_path(&self) -> bool {
        match self.children.len() {
            0 => true,
            1 => self.children[0].is_path(),
            _ => false,
        }
    }

    /// True when some vertex (this one included) has at least two children.
    pub fn has_branching(&self) -> bool {
        !self.is_path()
    }

    /// The subtree reached by following child indices from the root.
    pub fn subtree(&self, path: &[usize]) -> Option<&OrderedTree> {
        let mut t = self;
        for &i in path {
            t = t.children.get(i)?;
        }
        Some(t)
    }

    pub(crate) fn subtree_mut(&mut self, path: &[usize]) -> &mut OrderedTree {
        let mut t = self;
        for &i in path {
            t = &mut t.children[i];
        }
        t
    }

    pub(crate) fn children_mut(&mut self) -> &mut Vec<OrderedTree> {
        &mut self.children
    }

    fn write_parens(&self, out: &mut String) {
        out.push('(');
        for c in &self.children {
            c.write_parens(out);
        }
        out.push(')');
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_parens(&mut s);
        f.write_str(&s)
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s, 1)
    }
}

/// Parses balanced-parentheses text; `line` is used in error positions.
pub fn parse_tree(s: &str, line: usize) -> Result<OrderedTree> {
    let text = s.trim_end();
    let offset = text.len() - text.trim_start().len();
    let bytes = text.trim_start().as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(line, 1, "empty tree text"));
    }
    let mut stack: Vec<Vec<OrderedTree>> = Vec::new();
    let mut result = None;
    for (i, &b) in bytes.iter().enumerate() {
        let column = offset + i + 1;
        if result.is_some() {
            return Err(Error::parse(line, column, "trailing characters after the tree"));
        }
        match b {
            b'(' => stack.push(Vec::new()),
            b')' => {
                let children = stack
                    .pop()
                    .ok_or_else(|| Error::parse(line, column, "unbalanced ')'"))?;
                let node = OrderedTree { children };
                match stack.last_mut() {
                    Some(parent) => parent.push(node),
                    None => result = Some(node),
                }
            }
            _ => return Err(Error::parse(line, column, format!("unexpected character {:?}", b as char))),
        }
    }
    result.ok_or_else(|| Error::parse(line, offset + bytes.len() + 1, "unbalanced '('"))
}

/// Which trees `enumerate_trees` keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFilter {
    All,
    /// Root degree odd.
    OddRoot,
    /// Root degree at least two, except that the one-edge tree is kept.
    RootGe2,
}

impl FromStr for TreeFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(TreeFilter::All),
            "odd_root" | "odd-root" => Ok(TreeFilter::OddRoot),
            "root_ge2" | "root-ge2" => Ok(TreeFilter::RootGe2),
            _ => Err(Error::Domain(format!("unknown tree filter {s:?}"))),
        }
    }
}

/// All ordered trees with `edges` edges passing `filter`, in the
/// lexicographic order of their text with `(` before `)`.
pub fn enumerate_trees(edges: usize, filter: TreeFilter) -> Vec<OrderedTree> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(2 * edges);
    dyck_words(edges, 0, 0, &mut word, &mut |w| {
        let mut text = String::with_capacity(w.len() + 2);
        text.push('(');
        text.extend(w.iter());
        text.push(')');
        let t = parse_tree(&text, 1).expect("generated text is balanced");
        let keep = match filter {
            TreeFilter::All => true,
            TreeFilter::OddRoot => t.root_degree() % 2 == 1,
            TreeFilter::RootGe2 => t.root_degree() >= 2 || edges == 1,
        };
        if keep {
            out.push(t);
        }
    });
    out
}

fn dyck_words(pairs: usize, open: usize, close: usize, word: &mut Vec<char>, visit: &mut impl FnMut(&[char])) {
    if close == pairs {
        visit(word);
        return;
    }
    if open < pairs {
        word.push('(');
        dyck_words(pairs, open + 1, close, word, visit);
        word.pop();
    }
    if close < open {
        word.push(')');
        dyck_words(pairs, open, close + 1, word, visit);
        word.pop();
    }
}

/// Is the subtree at `path`, restricted to its last `branches` branches, a
/// full right subtree of `tree`? The path must follow the right-most child
/// at every step, and `branches` must be between 1 and that vertex's degree.
pub fn is_full_right_subtree(tree: &OrderedTree, path: &[usize], branches: usize) -> bool {
    let mut t = tree;
    for &i in path {
        if t.children.is_empty() || i != t.children.len() - 1 {
            return false;
        }
        t = &t.children[i];
    }
    branches >= 1 && branches <= t.children.len()
}

/// Mutable tree with stable vertex ids, used while building trees.
#[derive(Clone, Debug)]
pub(crate) struct Arena {
    pub nodes: Vec<Node>,
    pub root: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub label: Option<usize>,
}

impl Arena {
    pub fn new() -> Self {
        Arena {
            nodes: vec![Node { parent: None, children: Vec::new(), label: None }],
            root: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn new_node(&mut self, label: Option<usize>) -> usize {
        self.nodes.push(Node { parent: None, children: Vec::new(), label });
        self.nodes.len() - 1
    }

    /// Adds a new child of `parent` at the given position among its children.
    pub fn add_child(&mut self, parent: usize, position: usize, label: Option<usize>) -> usize {
        let id = self.new_node(label);
        self.nodes[id].parent = Some(parent);
        self.nodes[parent].children.insert(position, id);
        id
    }

    /// Hangs a new path below `at` as its left-most branch. Returns the new
    /// vertices from top to bottom.
    pub fn attach_left_path(&mut self, at: usize, labels: &[Option<usize>]) -> Vec<usize> {
        let mut ids = Vec::with_capacity(labels.len());
        let mut parent = at;
        for (i, &label) in labels.iter().enumerate() {
            let pos = if i == 0 { 0 } else { self.nodes[parent].children.len() };
            parent = self.add_child(parent, pos, label);
            ids.push(parent);
        }
        ids
    }

    pub fn set_children(&mut self, v: usize, children: Vec<usize>) {
        for &c in &children {
            self.nodes[c].parent = Some(v);
        }
        self.nodes[v].children = children;
    }

    pub fn to_tree(&self) -> OrderedTree {
        self.subtree(self.root)
    }

    pub fn subtree(&self, v: usize) -> OrderedTree {
        OrderedTree {
            children: self.nodes[v].children.iter().map(|&c| self.subtree(c)).collect(),
        }
    }

    /// Child indices leading from the root to `v`.
    pub fn path_to(&self, v: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(p) = self.nodes[cur].parent {
            let idx = self.nodes[p].children.iter().position(|&c| c == cur).expect("child listed");
            path.push(idx);
            cur = p;
        }
        assert_eq!(cur, self.root, "vertex detached from the root");
        path.reverse();
        path
    }

    pub fn descendants(&self, v: usize, out: &mut Vec<usize>) {
        out.push(v);
        for &c in &self.nodes[v].children {
            self.descendants(c, out);
        }
    }

    pub fn from_tree(t: &OrderedTree) -> Self {
        let mut a = Arena::new();
        fn go(a: &mut Arena, v: usize, t: &OrderedTree) {
            for c in &t.children {
                let pos = a.nodes[v].children.len();
                let id = a.add_child(v, pos, None);
                go(a, id, c);
            }
        }
        go(&mut a, 0, t);
        a
    }
}
