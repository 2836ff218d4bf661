//! Trees read as words of the free group on letters `α^e(x^{±1})`.
//!
//! In the group untwisted from a regular Hom-group the product is
//! `val(l ∨ r) = α(val(l)·val(r))`, so a leaf of weight `w` at depth `d`
//! contributes the letter `α^{w+d}(x)` (or its inverse). Two trees represent the
//! same element exactly when their freely reduced words agree.

use num_bigint::BigInt;
use serde::Serialize;

use super::tree::{Color, SLTree};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub label: String,
    pub color: Color,
    #[serde(serialize_with = "crate::free::ser_bigint")]
    pub exponent: BigInt,
}

impl Letter {
    fn cancels(&self, other: &Letter) -> bool {
        self.label == other.label && self.color != other.color && self.exponent == other.exponent
    }
}

/// Letters of the leaves in planar order, without cancellation.
pub fn tree_word(t: &SLTree) -> Vec<Letter> {
    t.leaves()
        .into_iter()
        .map(|v| Letter {
            label: v.leaf.label.clone(),
            color: v.leaf.color,
            exponent: &v.leaf.weight + v.depth(),
        })
        .collect()
}

/// The freely reduced word of `t`.
pub fn reduced_word(t: &SLTree) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::new();
    for l in tree_word(t) {
        if stack.last().is_some_and(|top| top.cancels(&l)) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

/// Equality in the free regular Hom-group.
pub fn same_element(a: &SLTree, b: &SLTree) -> bool {
    reduced_word(a) == reduced_word(b)
}
