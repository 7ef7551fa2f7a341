//! Images of the parking functions of size at most three. Larger inputs are
//! handled recursively; a test checks that the recursion reproduces these.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::{LabeledTree, OrderedTree};
use crate::parking::parse_blocks;

/// Blocks and labeled image for the (123,132) family.
const BASE_123_132: &[(&str, &str)] = &[
    ("()", "((0))"),
    ("({1})", "((0(1)))"),
    ("({1},{2})", "((0(2)(1)))"),
    ("({1,2},{})", "((2)(1)(0))"),
    ("({2},{1})", "((0(1(2))))"),
    ("({2},{1},{3})", "((0(3)(1(2))))"),
    ("({2},{1,3},{})", "((3)(1(2))(0))"),
    ("({2},{3},{1})", "((0(1(3)(2))))"),
    ("({2,3},{1},{})", "((3)(2)(0(1)))"),
    ("({2,3},{},{1})", "((0(3)(2)(1)))"),
    ("({3},{2},{1})", "((0(1(2(3)))))"),
    ("({3},{1},{2})", "((0(2(3))(1)))"),
    ("({3},{1,2},{})", "((2(3))(1)(0))"),
];

/// Blocks and tree for the (123,213) family.
const BASE_123_213: &[(&str, &str)] = &[
    ("()", "(())"),
    ("({1})", "(()())"),
    ("({1},{2})", "(()(()))"),
    ("({1,2},{})", "((())())"),
    ("({2},{1})", "(()()())"),
    ("({1},{3},{2})", "(()((())))"),
    ("({1,3},{},{2})", "((())(()))"),
    ("({1,3},{2},{})", "(((()))())"),
    ("({2},{3},{1})", "(()(()()))"),
    ("({2,3},{},{1})", "((())()())"),
    ("({2,3},{1},{})", "((()())())"),
    ("({3},{1},{2})", "(()()(()))"),
    ("({3},{1,2},{})", "(()(())())"),
    ("({3},{2},{1})", "(()()()())"),
];

type Blocks = Vec<Vec<usize>>;

pub(crate) struct Table<T> {
    pub forward: HashMap<Blocks, T>,
    pub backward: HashMap<OrderedTree, Blocks>,
}

pub(crate) fn table_123_132() -> &'static Table<LabeledTree> {
    static T: OnceLock<Table<LabeledTree>> = OnceLock::new();
    T.get_or_init(|| {
        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for &(b, t) in BASE_123_132 {
            let blocks = parse_blocks(b, 1).expect("table blocks parse");
            let tree: LabeledTree = t.parse().expect("table tree parses");
            backward.insert(tree.shape(), blocks.clone());
            forward.insert(blocks, tree);
        }
        Table { forward, backward }
    })
}

pub(crate) fn table_123_213() -> &'static Table<OrderedTree> {
    static T: OnceLock<Table<OrderedTree>> = OnceLock::new();
    T.get_or_init(|| {
        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for &(b, t) in BASE_123_213 {
            let blocks = parse_blocks(b, 1).expect("table blocks parse");
            let tree: OrderedTree = t.parse().expect("table tree parses");
            backward.insert(tree.clone(), blocks.clone());
            forward.insert(blocks, tree);
        }
        Table { forward, backward }
    })
}
