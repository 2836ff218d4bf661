use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Black leaves are generator occurrences, white leaves their inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// A super-leaf weighted bicolored planar binary tree.
///
/// Trees built through [`graft`] never contain `Unit` below a `Node`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SLTree {
    Unit,
    Leaf(Leaf),
    Node(Box<SLTree>, Box<SLTree>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Leaf {
    pub label: String,
    pub color: Color,
    pub weight: BigInt,
}

/// A leaf together with its depth below the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafView<'a> {
    pub leaf: &'a Leaf,
    /// Path from the root, `false` for a left step.
    pub path: Vec<bool>,
}

impl LeafView<'_> {
    pub fn depth(&self) -> usize {
        self.path.len()
    }
}

impl SLTree {
    pub fn leaf(label: impl Into<String>, color: Color, weight: impl Into<BigInt>) -> SLTree {
        SLTree::Leaf(Leaf {
            label: label.into(),
            color,
            weight: weight.into(),
        })
    }

    /// `Node(l, r)` without unit absorption.
    pub fn node(l: SLTree, r: SLTree) -> SLTree {
        SLTree::Node(Box::new(l), Box::new(r))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, SLTree::Unit)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            SLTree::Unit => 0,
            SLTree::Leaf(_) => 1,
            SLTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// No `Unit` below a `Node`.
    pub fn is_canonical(&self) -> bool {
        fn inner(t: &SLTree) -> bool {
            match t {
                SLTree::Unit => false,
                SLTree::Leaf(_) => true,
                SLTree::Node(l, r) => inner(l) && inner(r),
            }
        }
        self.is_unit() || inner(self)
    }

    /// Leaves in planar order.
    pub fn leaves(&self) -> Vec<LeafView<'_>> {
        fn walk<'a>(t: &'a SLTree, path: &mut Vec<bool>, out: &mut Vec<LeafView<'a>>) {
            match t {
                SLTree::Unit => {}
                SLTree::Leaf(leaf) => out.push(LeafView {
                    leaf,
                    path: path.clone(),
                }),
                SLTree::Node(l, r) => {
                    path.push(false);
                    walk(l, path, out);
                    path.pop();
                    path.push(true);
                    walk(r, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Leaf weights in planar order.
    pub fn weights(&self) -> Vec<BigInt> {
        self.leaves().into_iter().map(|v| v.leaf.weight.clone()).collect()
    }

    /// Rebuild the tree bottom-up, replacing leaves by `f(position, leaf)` and
    /// re-grafting so that units are absorbed.
    pub(crate) fn map_leaves(&self, f: &mut impl FnMut(usize, &Leaf) -> SLTree) -> SLTree {
        fn go(t: &SLTree, pos: &mut usize, f: &mut impl FnMut(usize, &Leaf) -> SLTree) -> SLTree {
            match t {
                SLTree::Unit => SLTree::Unit,
                SLTree::Leaf(leaf) => {
                    let out = f(*pos, leaf);
                    *pos += 1;
                    out
                }
                SLTree::Node(l, r) => {
                    let l = go(l, pos, f);
                    let r = go(r, pos, f);
                    graft(l, r)
                }
            }
        }
        go(self, &mut 0, f)
    }
}

/// Grafting with unit absorption: `1∨φ = φ∨1 = α(φ)`.
pub fn graft(l: SLTree, r: SLTree) -> SLTree {
    match (l, r) {
        (SLTree::Unit, SLTree::Unit) => SLTree::Unit,
        (SLTree::Unit, t) | (t, SLTree::Unit) => alpha_shift(&t, &BigInt::from(1)),
        (l, r) => SLTree::node(l, r),
    }
}

/// Add `k` to every leaf weight.
pub fn alpha_shift(t: &SLTree, k: &BigInt) -> SLTree {
    match t {
        SLTree::Unit => SLTree::Unit,
        SLTree::Leaf(leaf) => SLTree::Leaf(Leaf {
            weight: &leaf.weight + k,
            ..leaf.clone()
        }),
        SLTree::Node(l, r) => SLTree::node(alpha_shift(l, k), alpha_shift(r, k)),
    }
}

/// Swap the children of every node and flip every color.
pub fn mirror_inverse(t: &SLTree) -> SLTree {
    match t {
        SLTree::Unit => SLTree::Unit,
        SLTree::Leaf(leaf) => SLTree::Leaf(Leaf {
            color: leaf.color.flip(),
            ..leaf.clone()
        }),
        SLTree::Node(l, r) => SLTree::node(mirror_inverse(r), mirror_inverse(l)),
    }
}

/// The inverse map of the free Hom-group. On units and single leaves it agrees
/// with [`mirror_inverse`], which is therefore used throughout.
pub fn hom_inverse(t: &SLTree) -> SLTree {
    mirror_inverse(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(w: i64) -> SLTree {
        SLTree::leaf("g", Color::Black, w)
    }

    fn w(w: i64) -> SLTree {
        SLTree::leaf("g", Color::White, w)
    }

    #[test]
    fn graft_absorbs_units() {
        assert_eq!(graft(SLTree::Unit, b(0)), b(1));
        assert_eq!(graft(b(0), SLTree::Unit), b(1));
        assert_eq!(graft(SLTree::Unit, SLTree::Unit), SLTree::Unit);
        assert_eq!(graft(b(2), w(5)), SLTree::node(b(2), w(5)));
    }

    #[test]
    fn shift_is_uniform() {
        let t = SLTree::node(b(1), w(2));
        assert_eq!(alpha_shift(&t, &1.into()).weights(), vec![2.into(), 3.into()]);
        assert_eq!(alpha_shift(&t, &0.into()), t);
    }

    #[test]
    fn mirror_examples() {
        let t = SLTree::node(w(7), b(3));
        assert_eq!(mirror_inverse(&t), SLTree::node(w(3), b(7)));
        let t = SLTree::node(SLTree::node(b(-1), b(1)), w(3));
        assert_eq!(mirror_inverse(&t), SLTree::node(b(3), SLTree::node(w(1), w(-1))));
        assert_eq!(hom_inverse(&b(0)), w(0));
        assert_eq!(hom_inverse(&SLTree::Unit), SLTree::Unit);
    }

    #[test]
    fn leaf_paths() {
        let t = SLTree::node(SLTree::node(b(0), b(1)), b(2));
        let depths: Vec<usize> = t.leaves().iter().map(LeafView::depth).collect();
        assert_eq!(depths, vec![2, 2, 1]);
        assert!(t.is_canonical());
        assert!(!SLTree::node(SLTree::Unit, b(0)).is_canonical());
    }
}
