use std::collections::BTreeSet;

use serde::Serialize;

use super::quotient::quotient;
use super::subgroup::{generated_hom_subgroup, is_normal, join};
use super::SubSet;
use crate::budget::Budget;
use crate::group::FiniteHomGroup;
use crate::report::{CheckList, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalLattice {
    /// Every Hom-subgroup found, sorted by size then members.
    pub subgroups: Vec<SubSet>,
    /// The normal ones, in the same order.
    pub normal: Vec<SubSet>,
    /// Indices into `normal` of the maximal proper normal subgroups.
    pub maximal: Vec<usize>,
    pub is_simple: bool,
    /// False when a budget cut the enumeration short.
    pub authoritative: bool,
    pub checks: CheckList,
}

/// All Hom-subgroups (as joins of cyclic closures) and the normal ones.
///
/// Cyclic closures are joined pairwise until no new subgroup appears; every
/// subgroup is the join of the closures of its elements, so the result is
/// complete within the budget.
pub fn normal_lattice(g: &FiniteHomGroup, budget: &Budget) -> NormalLattice {
    lattice_impl(g, budget, true)
}

fn lattice_impl(g: &FiniteHomGroup, budget: &Budget, cross_check: bool) -> NormalLattice {
    let n = g.order();
    let mut authoritative = n <= budget.lattice_order;
    let mut found: BTreeSet<SubSet> = BTreeSet::new();
    found.insert(generated_hom_subgroup(g, &SubSet::empty(n)));
    for x in 0..n {
        found.insert(generated_hom_subgroup(g, &SubSet::from_elements(n, [x]).unwrap()));
    }
    if authoritative {
        let mut frontier: Vec<SubSet> = found.iter().cloned().collect();
        while !frontier.is_empty() {
            let current: Vec<SubSet> = found.iter().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &current {
                    let j = join(g, a, b);
                    if !found.contains(&j) {
                        found.insert(j.clone());
                        next.push(j);
                    }
                }
                if found.len() > budget.lattice_size {
                    authoritative = false;
                    break;
                }
            }
            if !authoritative {
                break;
            }
            frontier = next;
        }
    }
    let mut subgroups: Vec<SubSet> = found.into_iter().collect();
    subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements().cmp(&b.elements())));
    let normal: Vec<SubSet> = subgroups
        .iter()
        .filter(|s| is_normal(g, s).map(|r| r.normal).unwrap_or(false))
        .cloned()
        .collect();
    let maximal: Vec<usize> = (0..normal.len())
        .filter(|&i| {
            !normal[i].is_full()
                && !normal
                    .iter()
                    .any(|k| !k.is_full() && *k != normal[i] && normal[i].is_subset(k))
        })
        .collect();
    let is_simple = n > 1 && normal.len() == 2;

    let mut checks = CheckList::default();
    checks.push(
        "simple implies alpha bijective",
        if is_simple && !g.is_regular() {
            Verdict::Fail { witness: vec![] }
        } else {
            Verdict::Pass
        },
    );
    if cross_check {
        checks.push(
            "maximal iff simple quotient",
            maximal_cross_check(g, &normal, &maximal, budget),
        );
    }
    NormalLattice {
        subgroups,
        normal,
        maximal,
        is_simple,
        authoritative,
        checks,
    }
}

/// For each proper normal `H`: `H` maximal ⟺ `G/H` simple. The witness lists
/// the indices (into the normal list) of mismatching subgroups.
fn maximal_cross_check(g: &FiniteHomGroup, normal: &[SubSet], maximal: &[usize], budget: &Budget) -> Verdict {
    if !g.is_regular() {
        return Verdict::not_applicable("quotients require a regular Hom-group");
    }
    let mismatches: Vec<usize> = (0..normal.len())
        .filter(|&i| !normal[i].is_full())
        .filter(|&i| {
            let simple_quotient = match quotient(g, &normal[i]) {
                Ok(q) => lattice_impl(&q.group, budget, false).is_simple,
                Err(_) => false,
            };
            simple_quotient != maximal.contains(&i)
        })
        .collect();
    if mismatches.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail { witness: mismatches }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn z5_is_simple_and_regular() {
        let l = normal_lattice(&catalog::cyclic(5), &Budget::default());
        assert!(l.is_simple);
        assert!(l.checks.all_pass());
    }

    #[test]
    fn z4_twist_is_not_simple() {
        let l = normal_lattice(&catalog::z4_2x(), &Budget::default());
        assert!(!l.is_simple);
        let sets: Vec<Vec<usize>> = l.normal.iter().map(SubSet::elements).collect();
        assert!(sets.contains(&vec![0, 2]));
    }

    #[test]
    fn twisted_s3_lattice() {
        let g = catalog::twisted_s3();
        let l = normal_lattice(&g, &Budget::default());
        let sets: Vec<Vec<usize>> = l.normal.iter().map(SubSet::elements).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 3, 4], vec![0, 1, 2, 3, 4, 5]]);
        assert_eq!(l.maximal, vec![1]);
        // {e}, {e,t}, rotations, G: the other transpositions are swapped by α
        assert_eq!(l.subgroups.len(), 4);
        assert!(l.authoritative && l.checks.all_pass());
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        for g in [
            catalog::twisted_s3(),
            catalog::z6_5x(),
            catalog::z4_2x(),
            catalog::cyclic(8),
        ] {
            let n = g.order();
            let mut brute = Vec::new();
            for mask in 0u32..(1 << n) {
                let s = SubSet::from_predicate(n, |x| mask >> x & 1 == 1);
                if super::super::is_hom_subgroup(&g, &s).is_ok() {
                    brute.push(s);
                }
            }
            let l = normal_lattice(&g, &Budget::default());
            let mut a = l.subgroups.clone();
            a.sort();
            brute.sort();
            assert_eq!(a, brute);
        }
    }
}
