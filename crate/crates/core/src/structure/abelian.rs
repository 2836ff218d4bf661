use serde::Serialize;

use super::lattice::NormalLattice;
use super::quotient::{quotient, QuotientHomGroup};
use super::subgroup::{generated_hom_subgroup, is_hom_subgroup, is_normal, is_normal_in};
use super::SubSet;
use crate::error::{Error, Result};
use crate::group::{check_hom_group, enumerate_homomorphisms, FiniteHomGroup, HomMap, SearchStatus};
use crate::report::{CheckList, Verdict};
use crate::Budget;

/// `[a, b] = (a⁻¹b⁻¹)(ab)`.
pub fn commutator(g: &FiniteHomGroup, a: usize, b: usize) -> usize {
    g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorSubgroup {
    pub subgroup: SubSet,
    /// The set of commutators before closing.
    pub bare_set: SubSet,
    pub bare_set_closed: bool,
    pub normal: Verdict,
}

pub fn commutator_subgroup(g: &FiniteHomGroup) -> Result<CommutatorSubgroup> {
    if !g.is_regular() {
        return Err(Error::precondition("the commutator subgroup needs a regular Hom-group"));
    }
    let n = g.order();
    let mut bare_set = SubSet::empty(n);
    for a in 0..n {
        for b in 0..n {
            bare_set.insert(commutator(g, a, b));
        }
    }
    let subgroup = generated_hom_subgroup(g, &bare_set);
    let normality = is_normal(g, &subgroup)?;
    Ok(CommutatorSubgroup {
        bare_set_closed: subgroup == bare_set,
        normal: Verdict::from_witness(if normality.normal {
            None
        } else {
            Some(normality.witness.unwrap_or_default())
        }),
        subgroup,
        bare_set,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub commutator: CommutatorSubgroup,
    pub quotient: QuotientHomGroup,
    pub projection: HomMap,
    pub checks: CheckList,
}

/// `G^ab = G/[G,G]` with its projection.
///
/// Minimality is checked against `lattice` when given: every normal `H` with
/// abelian `G/H` must contain `[G,G]`.
pub fn abelianization(g: &FiniteHomGroup, lattice: Option<&NormalLattice>) -> Result<Abelianization> {
    let commutator = commutator_subgroup(g)?;
    let q = quotient(g, &commutator.subgroup)?;
    let projection = q.projection(g);
    let mut checks = CheckList::default();
    checks.push("quotient is abelian", Verdict::from_witness(abelian_witness(&q.group)));
    checks.push(
        "projection is a homomorphism",
        if projection.is_homomorphism() && projection.unit_preserving {
            Verdict::Pass
        } else {
            Verdict::Fail { witness: vec![] }
        },
    );
    checks.push("commutator subgroup is normal", commutator.normal.clone());
    let minimality = match lattice {
        None => Verdict::not_applicable("no lattice supplied"),
        Some(l) if !l.authoritative => Verdict::not_applicable("lattice is partial"),
        Some(l) => {
            let bad = l.normal.iter().position(|h| {
                let abelian_quotient = quotient(g, h).map(|q| q.group.is_abelian()).unwrap_or(false);
                abelian_quotient && !commutator.subgroup.is_subset(h)
            });
            Verdict::from_witness(bad.map(|i| vec![i]))
        }
    };
    checks.push("minimal among abelian quotients", minimality);
    Ok(Abelianization {
        commutator,
        quotient: q,
        projection,
        checks,
    })
}

fn abelian_witness(g: &FiniteHomGroup) -> Option<Vec<usize>> {
    crate::report::scan2(g.order(), g.order(), |a, b| g.mul(a, b) == g.mul(b, a))
        .witness()
        .map(<[usize]>::to_vec)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalReport {
    /// `f̃` on coset indices.
    pub induced: Vec<usize>,
    pub checks: CheckList,
    /// Homomorphisms `G^ab → H` that factor `f`.
    pub factorizations: usize,
}

/// Factor `f: G → H` through `π: G → G^ab` and check uniqueness.
pub fn abelianization_universal_check(
    g: &FiniteHomGroup,
    h: &FiniteHomGroup,
    f: &[usize],
    budget: &Budget,
) -> Result<UniversalReport> {
    let f = HomMap::new(g, h, f.to_vec())?;
    if !f.is_homomorphism() {
        return Err(Error::precondition("f is not a Hom-group homomorphism"));
    }
    let target = check_hom_group(h);
    if !(target.is_hom_group() && target.regular && target.abelian) {
        return Err(Error::precondition("target must be an abelian regular Hom-group"));
    }
    let ab = abelianization(g, None)?;
    let q = &ab.quotient;
    let induced: Vec<usize> = q.reps.iter().map(|&r| f.apply(r)).collect();
    let mut checks = CheckList::default();
    let ill_defined = (0..g.order()).find(|&x| induced[q.coset_of[x]] != f.apply(x));
    checks.push(
        "induced map is well defined",
        Verdict::from_witness(ill_defined.map(|x| vec![x])),
    );
    let tilde = HomMap::new(&q.group, h, induced.clone())?;
    checks.push(
        "induced map is a homomorphism",
        if tilde.is_homomorphism() {
            Verdict::Pass
        } else {
            Verdict::Fail { witness: vec![] }
        },
    );
    let factors = (0..g.order()).find(|&x| tilde.apply(q.coset_of[x]) != f.apply(x));
    checks.push("induced map factors f", Verdict::from_witness(factors.map(|x| vec![x])));

    let homs = enumerate_homomorphisms(&q.group, h, budget);
    if homs.status == SearchStatus::Truncated {
        return Err(Error::Budget {
            what: "enumerating homomorphisms from the abelianization".into(),
            limit: budget.search,
        });
    }
    let factoring: Vec<&HomMap> = homs
        .maps
        .iter()
        .filter(|phi| (0..g.order()).all(|x| phi.apply(q.coset_of[x]) == f.apply(x)))
        .collect();
    checks.push(
        "factorization is unique",
        if factoring.len() == 1 && factoring[0].map == induced {
            Verdict::Pass
        } else {
            Verdict::Fail {
                witness: vec![factoring.len()],
            }
        },
    );
    Ok(UniversalReport {
        induced,
        checks,
        factorizations: factoring.len(),
    })
}

/// Images and preimages of normal subgroups under `f`, and its kernel.
pub fn pushforward_pullback_check(
    g: &FiniteHomGroup,
    h: &FiniteHomGroup,
    f: &[usize],
    n: &SubSet,
    m: Option<&SubSet>,
) -> Result<CheckList> {
    let f = HomMap::new(g, h, f.to_vec())?;
    if !f.unit_preserving {
        return Err(Error::precondition("f must send the unit to the unit"));
    }
    if !f.is_homomorphism() {
        return Err(Error::precondition("f is not a Hom-group homomorphism"));
    }
    if !is_normal(g, n)?.normal {
        return Err(Error::precondition("N is not normal in G"));
    }
    let image = SubSet::full(g.order()).image(&f.map, h.order());
    if is_hom_subgroup(h, &image).is_err() {
        return Err(Error::invariant("f(G) is not a Hom-subgroup"));
    }
    if let Some(m) = m {
        if !is_normal_in(h, &image, m)?.normal {
            return Err(Error::precondition("M is not normal in f(G)"));
        }
    }
    let verdict = |s: &SubSet, ambient: &SubSet, on: &FiniteHomGroup| -> Verdict {
        match is_normal_in(on, ambient, s) {
            Ok(r) if r.normal => Verdict::Pass,
            Ok(r) => Verdict::Fail {
                witness: r.witness.unwrap_or_default(),
            },
            Err(e) => Verdict::not_applicable(e.to_string()),
        }
    };
    let mut checks = CheckList::default();
    checks.push("f(N) normal in f(G)", verdict(&n.image(&f.map, h.order()), &image, h));
    let full = SubSet::full(g.order());
    match m {
        Some(m) => checks.push("preimage of M normal in G", verdict(&m.preimage(&f.map), &full, g)),
        None => checks.push("preimage of M normal in G", Verdict::not_applicable("no M supplied")),
    }
    let unit = SubSet::from_elements(h.order(), [h.identity()])?;
    checks.push("kernel normal in G", verdict(&unit.preimage(&f.map), &full, g));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::classical::{FiniteGroup, S3_ROTATIONS};
    use crate::structure::normal_lattice;

    fn sign(x: usize) -> usize {
        usize::from(!S3_ROTATIONS.contains(&x))
    }

    #[test]
    fn twisted_s3_commutator_and_abelianization() {
        let g = catalog::twisted_s3();
        let c = commutator_subgroup(&g).unwrap();
        assert_eq!(c.subgroup.elements(), S3_ROTATIONS.to_vec());
        assert!(c.normal.is_pass());
        let l = normal_lattice(&g, &Budget::default());
        let ab = abelianization(&g, Some(&l)).unwrap();
        assert_eq!(ab.quotient.order(), 2);
        assert!(ab.checks.all_pass(), "{:?}", ab.checks);
        assert_eq!(ab.projection.apply(g.identity()), ab.quotient.group.identity());
    }

    #[test]
    fn abelian_groups_are_their_own_abelianization() {
        for g in [catalog::cyclic(5), catalog::z6_5x()] {
            let c = commutator_subgroup(&g).unwrap();
            assert_eq!(c.subgroup.elements(), vec![g.identity()]);
            let ab = abelianization(&g, None).unwrap();
            assert_eq!(ab.quotient.group, g);
        }
    }

    #[test]
    fn sign_map_factors_uniquely() {
        let g = catalog::twisted_s3();
        let z2 = catalog::cyclic(2);
        let f: Vec<usize> = (0..6).map(sign).collect();
        let r = abelianization_universal_check(&g, &z2, &f, &Budget::default()).unwrap();
        assert!(r.checks.all_pass(), "{:?}", r.checks);
        assert_eq!(r.factorizations, 1);
        let r = abelianization_universal_check(&g, &z2, &[0; 6], &Budget::default()).unwrap();
        assert_eq!(r.induced, vec![0, 0]);
    }

    #[test]
    fn non_abelian_target_rejected() {
        let g = catalog::twisted_s3();
        let id: Vec<usize> = (0..6).collect();
        assert!(matches!(
            abelianization_universal_check(&g, &g, &id, &Budget::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn kernel_of_alpha_is_normal() {
        let g = catalog::z4_2x();
        let alpha = g.alpha_map().to_vec();
        let n = SubSet::full(4);
        let checks = pushforward_pullback_check(&g, &g, &alpha, &n, None).unwrap();
        assert!(checks.passes("kernel normal in G"));
    }

    #[test]
    fn sign_pushes_rotations_to_unit() {
        let g = catalog::twisted_s3();
        let z2 = FiniteHomGroup::from_group(&FiniteGroup::cyclic(2));
        let f: Vec<usize> = (0..6).map(sign).collect();
        let rot = SubSet::from_elements(6, S3_ROTATIONS).unwrap();
        assert_eq!(rot.image(&f, 2).elements(), vec![0]);
        let m = SubSet::from_elements(2, [0]).unwrap();
        let checks = pushforward_pullback_check(&g, &z2, &f, &rot, Some(&m)).unwrap();
        assert!(checks.all_pass(), "{checks:?}");
    }

    #[test]
    fn non_unital_map_rejected() {
        let g = catalog::cyclic(2);
        assert!(matches!(
            pushforward_pullback_check(&g, &g, &[1, 1], &SubSet::full(2), None),
            Err(Error::Precondition(_))
        ));
    }
}
