use serde::Serialize;

use super::{ElementId, FiniteHomGroup};
use crate::error::{Error, Result};
use crate::report::{scan1, scan2, scan3, CheckList, Verdict};

pub const HOM_ASSOCIATIVITY: &str = "hom-associativity";
pub const ALPHA_MULTIPLICATIVE: &str = "alpha-multiplicativity";
pub const HOM_UNITARITY: &str = "hom-unitarity";
pub const INVERSE_ANTIMORPHISM: &str = "inverse-antimorphism";
pub const HOM_INVERTIBILITY: &str = "hom-invertibility";
pub const REGULARITY: &str = "regularity";
pub const COMMUTATIVITY: &str = "commutativity";

const AXIOMS: [&str; 5] = [
    HOM_ASSOCIATIVITY,
    ALPHA_MULTIPLICATIVE,
    HOM_UNITARITY,
    INVERSE_ANTIMORPHISM,
    HOM_INVERTIBILITY,
];

/// Result of [`check_hom_group`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// The five axioms, then the regularity and commutativity flags.
    pub axioms: CheckList,
    /// Consequences asserted once the axioms they depend on pass.
    pub derived: CheckList,
    pub regular: bool,
    pub abelian: bool,
}

impl AxiomReport {
    /// All five axioms hold.
    pub fn is_hom_group(&self) -> bool {
        AXIOMS.iter().all(|a| self.axioms.passes(a))
    }

    /// Axioms and every applicable derived law hold.
    pub fn is_certified(&self) -> bool {
        self.is_hom_group() && self.derived.all_pass()
    }

    /// First failing axiom or derived law.
    pub fn first_violation(&self) -> Option<(&str, &[usize])> {
        AXIOMS
            .iter()
            .filter_map(|a| self.axioms.get(a).and_then(Verdict::witness).map(|w| (*a, w)))
            .chain(
                self.derived
                    .iter()
                    .filter_map(|c| c.verdict.witness().map(|w| (c.name.as_str(), w))),
            )
            .next()
    }
}

/// Exhaustive verification of the Hom-group axioms.
pub fn check_hom_group(g: &FiniteHomGroup) -> AxiomReport {
    let n = g.order();
    let e = g.identity();
    let mut axioms = CheckList::default();

    axioms.push(
        HOM_ASSOCIATIVITY,
        scan3(n, |a, b, c| {
            g.mul(g.alpha(a), g.mul(b, c)) == g.mul(g.mul(a, b), g.alpha(c))
        }),
    );
    axioms.push(
        ALPHA_MULTIPLICATIVE,
        scan2(n, n, |a, b| g.alpha(g.mul(a, b)) == g.mul(g.alpha(a), g.alpha(b))),
    );
    axioms.push(
        HOM_UNITARITY,
        scan1(n, |a| {
            g.mul(a, e) == g.alpha(a) && g.mul(e, a) == g.alpha(a) && (a != e || g.alpha(e) == e)
        }),
    );
    axioms.push(
        INVERSE_ANTIMORPHISM,
        scan2(n, n, |a, b| g.inv(g.mul(a, b)) == g.mul(g.inv(b), g.inv(a))),
    );
    axioms.push(HOM_INVERTIBILITY, scan1(n, |a| g.inv_index(a).is_some()));

    let alpha = g.alpha_map();
    let regularity = match (0..n).find_map(|a| (0..a).find(|&b| alpha[b] == alpha[a]).map(|b| vec![b, a])) {
        Some(w) => Verdict::Fail { witness: w },
        None => Verdict::Pass,
    };
    let regular = regularity.is_pass();
    axioms.push(REGULARITY, regularity);
    let commutativity = scan2(n, n, |a, b| g.mul(a, b) == g.mul(b, a));
    let abelian = commutativity.is_pass();
    axioms.push(COMMUTATIVITY, commutativity);

    let mut derived = CheckList::default();
    let base = axioms.passes(HOM_ASSOCIATIVITY) && axioms.passes(HOM_UNITARITY);
    derived.push(
        "alpha-multiplicativity from unitarity and hom-associativity",
        if base {
            scan2(n, n, |a, b| g.alpha(g.mul(a, b)) == g.mul(g.alpha(a), g.alpha(b)))
        } else {
            Verdict::not_applicable("unitarity or hom-associativity fails")
        },
    );
    let all = AXIOMS.iter().all(|a| axioms.passes(a));
    let need_all = || Verdict::not_applicable("some axiom fails");
    derived.push(
        "alpha commutes with inverse",
        if all {
            scan1(n, |a| g.alpha(g.inv(a)) == g.inv(g.alpha(a)))
        } else {
            need_all()
        },
    );
    derived.push(
        "index of alpha(g) is max(k-1, 0)",
        if all {
            scan1(n, |a| {
                let k = g.inv_index(a).unwrap();
                g.inv_index(g.alpha(a)) == Some(k.saturating_sub(1))
            })
        } else {
            need_all()
        },
    );
    derived.push(
        "left cancellation",
        if all && regular {
            scan3(n, |a, b, c| b == c || g.mul(a, b) != g.mul(a, c))
        } else {
            Verdict::not_applicable("requires a regular Hom-group")
        },
    );

    AxiomReport {
        axioms,
        derived,
        regular,
        abelian,
    }
}

/// The chosen inverse of `g` and its invertibility index.
pub fn inverse_and_index(g: &FiniteHomGroup, x: ElementId) -> Result<(ElementId, usize)> {
    crate::table::check_element("element", x, g.order())?;
    let k = g
        .inv_index(x)
        .ok_or_else(|| Error::rejected("no invertibility index k ≤ n", vec![x]))?;
    let ax = g.alpha(x);
    let shifted = g
        .inv_index(ax)
        .ok_or_else(|| Error::rejected("alpha(g) has no invertibility index", vec![ax]))?;
    if g.inv(ax) == g.alpha(g.inv(x)) && shifted != k.saturating_sub(1) {
        return Err(Error::invariant(format!(
            "index of alpha({x}) is {shifted}, expected {}",
            k.saturating_sub(1)
        )));
    }
    Ok((g.inv(x), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::FiniteGroup;
    use proptest::prelude::*;

    /// Naive evaluation of the axioms, written independently of the checker.
    fn naive_is_hom_group(g: &FiniteHomGroup) -> bool {
        let n = g.order();
        let e = g.identity();
        let mut ok = g.alpha(e) == e;
        for a in 0..n {
            ok &= g.mul(a, e) == g.alpha(a) && g.mul(e, a) == g.alpha(a);
            let ia = g.inv(a);
            ok &= (0..=n).any(|k| g.alpha_pow(g.mul(a, ia), k) == e && g.alpha_pow(g.mul(ia, a), k) == e);
            for b in 0..n {
                ok &= g.alpha(g.mul(a, b)) == g.mul(g.alpha(a), g.alpha(b));
                ok &= g.inv(g.mul(a, b)) == g.mul(g.inv(b), g.inv(a));
                for c in 0..n {
                    ok &= g.mul(g.alpha(a), g.mul(b, c)) == g.mul(g.mul(a, b), g.alpha(c));
                }
            }
        }
        ok
    }

    #[test]
    fn z6_twist_by_5x_passes_and_is_regular_abelian() {
        let g = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let r = check_hom_group(&g);
        assert!(r.is_certified(), "{r:?}");
        assert!(r.regular && r.abelian);
    }

    #[test]
    fn z4_twist_by_2x_passes_and_is_not_regular() {
        let g = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        let r = check_hom_group(&g);
        assert!(r.is_certified(), "{r:?}");
        assert!(!r.regular);
        assert_eq!(r.axioms.get(REGULARITY).unwrap().witness(), Some(&[0, 2][..]));
    }

    #[test]
    fn ordinary_group_has_zero_indices() {
        let g = FiniteHomGroup::from_group(&FiniteGroup::symmetric3());
        assert!(check_hom_group(&g).is_certified());
        assert!((0..6).all(|x| g.inv_index(x) == Some(0)));
    }

    #[test]
    fn inverse_and_index_examples() {
        let g = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        assert_eq!(inverse_and_index(&g, 2).unwrap(), (4, 0));
        assert_eq!(inverse_and_index(&g, 0).unwrap(), (0, 0));
        let h = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        assert_eq!(inverse_and_index(&h, 1).unwrap(), (3, 0));
    }

    #[test]
    fn alternative_inverse_choice_agrees_with_naive() {
        let g = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        let inv = vec![0, 1, 2, 1];
        let h = FiniteHomGroup::new(g.mul_table().clone(), g.alpha_map().to_vec(), 0, inv).unwrap();
        assert_eq!(h.inv_index(1), Some(0));
        assert_eq!(check_hom_group(&h).is_hom_group(), naive_is_hom_group(&h));
    }

    #[test]
    fn corrupted_entry_is_reported_with_smallest_witness() {
        let g = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let bad = g.with_mul_entry(2, 3, 0).unwrap();
        let r = check_hom_group(&bad);
        assert!(!r.is_hom_group());
        let (_, w) = r.first_violation().unwrap();
        assert!(!w.is_empty());
    }

    proptest! {
        #[test]
        fn checker_agrees_with_naive_evaluation(n in 1usize..8, k in 0usize..8, g in 0usize..8, h in 0usize..8, v in 0usize..8) {
            let base = FiniteHomGroup::cyclic_twist(n, k % n.max(1)).unwrap();
            let mutated = base.with_mul_entry(g % n, h % n, v % n).unwrap();
            prop_assert_eq!(check_hom_group(&base).is_hom_group(), naive_is_hom_group(&base));
            prop_assert_eq!(check_hom_group(&mutated).is_hom_group(), naive_is_hom_group(&mutated));
        }
    }
}
