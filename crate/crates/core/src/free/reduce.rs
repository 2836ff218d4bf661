use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::tree::{graft, SLTree};
use crate::error::{Error, Result};

/// The shape class of a cancelable pair.
///
/// The first eight are the elementary reductions drawn in the literature;
/// `Gen` covers every other spine-depth combination accepted by the general
/// condition `w_i + p = w_{i+1} + q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    Lal,
    Ral,
    Ldl,
    Rdl,
    Dl1,
    Dl2,
    Dl3,
    Dl4,
    Gen { p: usize, q: usize },
}

impl Rule {
    /// Position of the rule in the list of eight elementary reductions.
    pub fn item(self) -> Option<usize> {
        match self {
            Rule::Lal => Some(1),
            Rule::Ral => Some(2),
            Rule::Ldl => Some(3),
            Rule::Rdl => Some(4),
            Rule::Dl1 => Some(5),
            Rule::Dl2 => Some(6),
            Rule::Dl3 => Some(7),
            Rule::Dl4 => Some(8),
            Rule::Gen { .. } => None,
        }
    }

    fn classify(at_root: bool, in_left_subtree: bool, p: usize, q: usize) -> Rule {
        match (at_root, p, q) {
            (true, 0, 0) | (_, 1, 1) => Rule::Dl1,
            (false, 0, 0) if in_left_subtree => Rule::Lal,
            (false, 0, 0) => Rule::Ral,
            (_, 1, 0) => Rule::Ldl,
            (_, 0, 1) => Rule::Rdl,
            (_, 2, 1) => Rule::Dl2,
            (_, 1, 2) => Rule::Dl3,
            (_, 2, 2) => Rule::Dl4,
            _ => Rule::Gen { p, q },
        }
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rule::Gen { p, q } => write!(f, "Gen({p},{q})"),
            r => write!(f, "{r:?}"),
        }
    }
}

/// Which pairs count as redexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Only the eight drawn shapes.
    Strict,
    /// Any pair meeting the spine-depth condition.
    General,
}

/// Leaves `position` and `position + 1` cancel.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Redex {
    pub position: usize,
    pub rule: Rule,
    /// Right-spine depth of the first leaf below the left child of their
    /// common ancestor.
    pub p: usize,
    /// Left-spine depth of the second leaf below the right child.
    pub q: usize,
    #[serde(serialize_with = "ser_weights")]
    pub weights: (BigInt, BigInt),
}

fn ser_weights<S: Serializer>(w: &(BigInt, BigInt), s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq([w.0.to_string(), w.1.to_string()])
}

pub fn find_redexes(t: &SLTree, mode: Mode) -> Vec<Redex> {
    let leaves = t.leaves();
    let mut out = Vec::new();
    for (i, pair) in leaves.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        if a.leaf.label != b.leaf.label || a.leaf.color == b.leaf.color {
            continue;
        }
        let lca = a.path.iter().zip(&b.path).take_while(|(x, y)| x == y).count();
        let p = a.depth() - lca - 1;
        let q = b.depth() - lca - 1;
        if &a.leaf.weight + p != &b.leaf.weight + q {
            continue;
        }
        let rule = Rule::classify(lca == 0, a.path.first() == Some(&false), p, q);
        if mode == Mode::Strict && rule.item().is_none() {
            continue;
        }
        out.push(Redex {
            position: i,
            rule,
            p,
            q,
            weights: (a.leaf.weight.clone(), b.leaf.weight.clone()),
        });
    }
    out
}

/// Replace the two leaves of `r` by units and absorb them.
pub fn reduce_step(t: &SLTree, r: &Redex) -> Result<SLTree> {
    if !find_redexes(t, Mode::General).contains(r) {
        return Err(Error::rejected("redex is not present in the tree", vec![r.position]));
    }
    Ok(cancel_pair(t, r.position))
}

fn cancel_pair(t: &SLTree, i: usize) -> SLTree {
    t.map_leaves(&mut |pos, leaf| {
        if pos == i || pos == i + 1 {
            SLTree::Unit
        } else {
            SLTree::Leaf(leaf.clone())
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

impl Strategy {
    /// Leftmost, rightmost and `randoms` seeded random strategies.
    pub fn standard(randoms: u64) -> Vec<Strategy> {
        let mut v = vec![Strategy::Leftmost, Strategy::Rightmost];
        v.extend((0..randoms).map(Strategy::Random));
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    #[serde(serialize_with = "ser_tree")]
    pub before: SLTree,
    pub redex: Redex,
    #[serde(serialize_with = "ser_tree")]
    pub after: SLTree,
}

fn ser_tree<S: Serializer>(t: &SLTree, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(t)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    /// Elementary-reduction items of the steps, `None` for general shapes.
    pub fn items(&self) -> Vec<Option<usize>> {
        self.steps.iter().map(|s| s.redex.rule.item()).collect()
    }
}

/// Reduce until no redex remains.
pub fn normal_form(t: &SLTree, strategy: Strategy, mode: Mode) -> Result<(SLTree, ReductionTrace)> {
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let limit = t.leaf_count() / 2;
    let mut trace = ReductionTrace::default();
    let mut current = t.clone();
    loop {
        let redexes = find_redexes(&current, mode);
        if redexes.is_empty() {
            return Ok((current, trace));
        }
        if trace.steps.len() == limit {
            return Err(Error::invariant("reduction did not remove two leaves per step"));
        }
        let pick = match (strategy, rng.as_mut()) {
            (Strategy::Rightmost, _) => redexes.len() - 1,
            (Strategy::Random(_), Some(rng)) => rng.gen_range(0..redexes.len()),
            _ => 0,
        };
        let redex = redexes[pick].clone();
        let after = cancel_pair(&current, redex.position);
        trace.steps.push(TraceStep {
            before: std::mem::replace(&mut current, after.clone()),
            redex,
            after,
        });
    }
}

/// Leftmost general normal form.
pub fn reduce(t: &SLTree) -> SLTree {
    normal_form(t, Strategy::Leftmost, Mode::General)
        .expect("every step removes two leaves")
        .0
}

/// Product of the free Hom-group: the reduced grafting.
pub fn fg_multiply(a: &SLTree, b: &SLTree) -> SLTree {
    reduce(&graft(a.clone(), b.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::parse_tree;

    fn t(s: &str) -> SLTree {
        parse_tree(s).unwrap()
    }

    fn rules(s: &str) -> Vec<Rule> {
        find_redexes(&t(s), Mode::General).into_iter().map(|r| r.rule).collect()
    }

    #[test]
    fn sibling_pair_at_root() {
        assert_eq!(rules("(g@4 g'@4)"), vec![Rule::Dl1]);
        assert_eq!(rules("(g@3 g'@4)"), vec![]);
        assert_eq!(rules("(g@3 h'@3)"), vec![]);
        assert_eq!(rules("(g@3 g@3)"), vec![]);
    }

    #[test]
    fn each_drawn_shape_fires_in_both_modes() {
        let cases = [
            ("((g@2 g'@2) h@0)", Rule::Lal),
            ("(h@0 (g@2 g'@2))", Rule::Ral),
            ("((h@0 g@2) g'@3)", Rule::Ldl),
            ("(g'@3 (g@2 h@0))", Rule::Rdl),
            ("((h@0 g@2) (g'@2 h@0))", Rule::Dl1),
            ("((h@0 (h@0 g@2)) (g'@3 h@0))", Rule::Dl2),
            ("((h@0 g@3) ((g'@2 h@0) h@0))", Rule::Dl3),
            ("((h@0 (h@0 g@2)) ((g'@2 h@0) h@0))", Rule::Dl4),
        ];
        for (i, (s, rule)) in cases.iter().enumerate() {
            assert_eq!(rule.item(), Some(i + 1));
            for mode in [Mode::Strict, Mode::General] {
                let found: Vec<Rule> = find_redexes(&t(s), mode).into_iter().map(|r| r.rule).collect();
                assert_eq!(found, vec![*rule], "{s} in {mode:?}");
            }
        }
    }

    #[test]
    fn deep_pairs_only_in_general_mode() {
        let s = "((h@0 (h@0 (h@0 g@0))) g'@3)";
        assert_eq!(rules(s), vec![Rule::Gen { p: 3, q: 0 }]);
        assert!(find_redexes(&t(s), Mode::Strict).is_empty());
    }

    #[test]
    fn reduction_examples() {
        // sibling pair inside the left factor
        let r = reduce(&t("((f@0 (g@1 g'@1)) k@0)"));
        assert_eq!(r, t("(f@1 k@0)"));
        // split pair
        assert_eq!(reduce(&t("((f@0 g@1) (g'@1 k@0))")), t("(f@1 k@1)"));
        // left disjoint
        assert_eq!(reduce(&t("(((f@0 g@1) g'@2) k@0)")), t("(f@2 k@0)"));
    }

    #[test]
    fn worked_example() {
        let tree = t("((g@0 (g'@2 g@5)) ((g'@5 g@2) g@1))");
        for s in Strategy::standard(5) {
            let (nf, trace) = normal_form(&tree, s, Mode::General).unwrap();
            assert_eq!(nf, t("(g@1 g@2)"));
            assert_eq!(trace.items(), vec![Some(8), Some(5)]);
        }
    }

    #[test]
    fn stale_redex_rejected() {
        let tree = t("(g@0 g'@0)");
        let r = find_redexes(&tree, Mode::General).remove(0);
        assert_eq!(reduce_step(&tree, &r).unwrap(), SLTree::Unit);
        assert!(reduce_step(&t("(g@0 g@0)"), &r).is_err());
    }

    #[test]
    fn unit_products() {
        assert_eq!(fg_multiply(&SLTree::Unit, &SLTree::Unit), SLTree::Unit);
        let x = t("(g@1 g@2)");
        assert_eq!(fg_multiply(&x, &crate::free::hom_inverse(&x)), SLTree::Unit);
    }
}
