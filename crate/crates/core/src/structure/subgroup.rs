use serde::Serialize;

use super::SubSet;
use crate::classical::FiniteGroup;
use crate::error::{Error, Result};
use crate::group::FiniteHomGroup;
use crate::report::{CheckList, Verdict};

/// Why a subset fails to be a Hom-subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgroupViolation {
    MissingIdentity,
    InverseOutside { element: usize, inverse: usize },
    ProductOutside { left: usize, right: usize, product: usize },
    AlphaOutside { element: usize, image: usize },
}

/// Checks `e ∈ S`, closure under inverses and products, then asserts the
/// consequence `α(S) ⊆ S` (since `α(h) = h·e`).
pub fn is_hom_subgroup(g: &FiniteHomGroup, s: &SubSet) -> std::result::Result<(), SubgroupViolation> {
    if !s.contains(g.identity()) {
        return Err(SubgroupViolation::MissingIdentity);
    }
    for h in s.iter() {
        if !s.contains(g.inv(h)) {
            return Err(SubgroupViolation::InverseOutside {
                element: h,
                inverse: g.inv(h),
            });
        }
    }
    for a in s.iter() {
        for b in s.iter() {
            let p = g.mul(a, b);
            if !s.contains(p) {
                return Err(SubgroupViolation::ProductOutside {
                    left: a,
                    right: b,
                    product: p,
                });
            }
        }
    }
    for h in s.iter() {
        if !s.contains(g.alpha(h)) {
            return Err(SubgroupViolation::AlphaOutside {
                element: h,
                image: g.alpha(h),
            });
        }
    }
    Ok(())
}

/// Least superset of `seeds` containing `e` and closed under `μ`, inverse and `α`.
pub fn generated_hom_subgroup(g: &FiniteHomGroup, seeds: &SubSet) -> SubSet {
    let mut s = seeds.clone();
    s.insert(g.identity());
    close(g, s)
}

fn close(g: &FiniteHomGroup, mut s: SubSet) -> SubSet {
    let mut members = s.elements();
    let mut next = 0;
    while next < members.len() {
        let x = members[next];
        next += 1;
        let mut fresh = vec![g.inv(x), g.alpha(x)];
        for &y in &members[..next] {
            fresh.push(g.mul(x, y));
            fresh.push(g.mul(y, x));
        }
        for z in fresh {
            if s.insert(z) {
                members.push(z);
            }
        }
    }
    s
}

/// The subgroup generated by two subgroups.
pub fn join(g: &FiniteHomGroup, a: &SubSet, b: &SubSet) -> SubSet {
    close(g, a.union(b))
}

/// Whether α restricted to `s` is a bijection of `s`.
pub fn alpha_bijective_on(g: &FiniteHomGroup, s: &SubSet) -> bool {
    s.image(g.alpha_map(), g.order()) == *s
}

/// `xH = {μ(x, h) : h ∈ H}`.
pub fn left_coset(g: &FiniteHomGroup, x: usize, h: &SubSet) -> SubSet {
    let mut s = SubSet::empty(g.order());
    for y in h.iter() {
        s.insert(g.mul(x, y));
    }
    s
}

/// `Hx = {μ(h, x) : h ∈ H}`.
pub fn right_coset(g: &FiniteHomGroup, x: usize, h: &SubSet) -> SubSet {
    let mut s = SubSet::empty(g.order());
    for y in h.iter() {
        s.insert(g.mul(y, x));
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalityMethod {
    /// `(gh)α(g⁻¹) ∈ H`, valid on regular ambients.
    Conjugation,
    /// `gH = Hg` as sets.
    Cosets,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalityReport {
    pub normal: bool,
    pub method: NormalityMethod,
    /// Smallest failing `(g, h)` for conjugation, `(g)` for cosets.
    pub witness: Option<Vec<usize>>,
    /// Whether the coset form gives the same answer.
    pub cosets_agree: bool,
    pub note: Option<String>,
}

/// Normality of `h` in `g`.
pub fn is_normal(g: &FiniteHomGroup, h: &SubSet) -> Result<NormalityReport> {
    is_normal_in(g, &SubSet::full(g.order()), h)
}

/// Normality of `h` inside the Hom-subgroup `ambient` of `g`.
pub fn is_normal_in(g: &FiniteHomGroup, ambient: &SubSet, h: &SubSet) -> Result<NormalityReport> {
    if let Err(v) = is_hom_subgroup(g, h) {
        return Err(Error::precondition(format!("not a Hom-subgroup: {v:?}")));
    }
    if !h.is_subset(ambient) {
        return Err(Error::precondition("subgroup is not contained in the ambient"));
    }
    let coset_witness = ambient.iter().find(|&x| left_coset(g, x, h) != right_coset(g, x, h));
    if !alpha_bijective_on(g, ambient) {
        return Ok(NormalityReport {
            normal: coset_witness.is_none(),
            method: NormalityMethod::Cosets,
            witness: coset_witness.map(|x| vec![x]),
            cosets_agree: true,
            note: Some("α is not bijective; the coset definition gH = Hg is used".into()),
        });
    }
    let conj_witness = ambient.iter().find_map(|x| {
        h.iter()
            .find(|&y| !h.contains(g.mul(g.mul(x, y), g.alpha(g.inv(x)))))
            .map(|y| vec![x, y])
    });
    let normal = conj_witness.is_none();
    Ok(NormalityReport {
        normal,
        method: NormalityMethod::Conjugation,
        witness: conj_witness,
        cosets_agree: normal == coset_witness.is_none(),
        note: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalSubgroups {
    pub center: SubSet,
    pub centralizer: Option<SubSet>,
    pub normalizer: Option<SubSet>,
    pub checks: CheckList,
}

fn subgroup_verdict(g: &FiniteHomGroup, s: &SubSet) -> Verdict {
    match is_hom_subgroup(g, s) {
        Ok(()) => Verdict::Pass,
        Err(v) => Verdict::Fail {
            witness: match v {
                SubgroupViolation::MissingIdentity => vec![g.identity()],
                SubgroupViolation::InverseOutside { element, .. } => vec![element],
                SubgroupViolation::ProductOutside { left, right, .. } => vec![left, right],
                SubgroupViolation::AlphaOutside { element, .. } => vec![element],
            },
        },
    }
}

fn normal_verdict(g: &FiniteHomGroup, ambient: &SubSet, h: &SubSet) -> Verdict {
    match is_normal_in(g, ambient, h) {
        Ok(r) if r.normal => Verdict::Pass,
        Ok(r) => Verdict::Fail {
            witness: r.witness.unwrap_or_default(),
        },
        Err(e) => Verdict::not_applicable(e.to_string()),
    }
}

/// Center, and when `h` is given its centralizer and normalizer, each by its
/// defining condition, with the containment and normality assertions.
pub fn canonical_subgroups(g: &FiniteHomGroup, h: Option<&SubSet>) -> Result<CanonicalSubgroups> {
    let n = g.order();
    let center = SubSet::from_predicate(n, |x| (0..n).all(|y| g.mul(x, y) == g.mul(y, x)));
    let mut checks = CheckList::default();
    checks.push("center is a Hom-subgroup", subgroup_verdict(g, &center));
    if !g.is_regular() {
        return Ok(CanonicalSubgroups {
            center,
            centralizer: None,
            normalizer: None,
            checks,
        });
    }
    let full = SubSet::full(n);
    checks.push("center is normal", normal_verdict(g, &full, &center));
    checks.push(
        "alpha^k maps the center into itself",
        crate::report::scan1(n, |x| {
            !center.contains(x) || g.tail_orbit(x, 0).iter().all(|&y| center.contains(y))
        }),
    );
    let (centralizer, normalizer) = match h {
        None => (None, None),
        Some(h) => {
            if let Err(v) = is_hom_subgroup(g, h) {
                return Err(Error::precondition(format!("H is not a Hom-subgroup: {v:?}")));
            }
            let conj = |x: usize, y: usize| g.mul(g.mul(x, y), g.alpha(g.inv(x)));
            let c = SubSet::from_predicate(n, |x| h.iter().all(|y| conj(x, y) == g.alpha_pow(y, 2)));
            let nz = SubSet::from_predicate(n, |x| h.iter().all(|y| h.contains(conj(x, y))));
            checks.push("centralizer is a Hom-subgroup", subgroup_verdict(g, &c));
            checks.push("normalizer is a Hom-subgroup", subgroup_verdict(g, &nz));
            checks.push(
                "centralizer is contained in normalizer",
                crate::report::scan1(n, |x| !c.contains(x) || nz.contains(x)),
            );
            checks.push("centralizer is normal in normalizer", normal_verdict(g, &nz, &c));
            (Some(c), Some(nz))
        }
    };
    Ok(CanonicalSubgroups {
        center,
        centralizer,
        normalizer,
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistCenters {
    /// Center of the ordinary group.
    pub group_center: SubSet,
    /// `{g : α(gx) = α(xg) for all x}`.
    pub alpha_center: SubSet,
    pub checks: CheckList,
}

/// Compare the ordinary center of a group with the α-center of its twist.
pub fn twist_centers(group: &FiniteGroup, endo: &[usize]) -> Result<TwistCenters> {
    if let Verdict::Fail { witness } = group.endomorphism_verdict(endo)? {
        return Err(Error::rejected("not an endomorphism", witness));
    }
    let n = group.order();
    let group_center = SubSet::from_predicate(n, |x| (0..n).all(|y| group.mul(x, y) == group.mul(y, x)));
    let alpha_center = SubSet::from_predicate(n, |x| (0..n).all(|y| endo[group.mul(x, y)] == endo[group.mul(y, x)]));
    let mut checks = CheckList::default();
    checks.push(
        "group center is contained in the alpha-center",
        crate::report::scan1(n, |x| !group_center.contains(x) || alpha_center.contains(x)),
    );
    checks.push(
        "centers coincide when alpha is injective",
        if crate::table::is_bijection(endo) {
            crate::report::scan1(n, |x| group_center.contains(x) == alpha_center.contains(x))
        } else {
            Verdict::not_applicable("alpha is not injective")
        },
    );
    Ok(TwistCenters {
        group_center,
        alpha_center,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::classical::{S3_ROTATIONS, S3_TRANSPOSITION};

    #[test]
    fn identity_subset_and_rotations_are_subgroups() {
        let g = catalog::twisted_s3();
        let e = SubSet::from_elements(6, [g.identity()]).unwrap();
        assert!(is_hom_subgroup(&g, &e).is_ok());
        let rot = SubSet::from_elements(6, S3_ROTATIONS).unwrap();
        assert!(is_hom_subgroup(&g, &rot).is_ok());
    }

    #[test]
    fn z6_pair_not_closed() {
        let g = catalog::z6_5x();
        let s = SubSet::from_elements(6, [0, 1]).unwrap();
        assert_eq!(
            is_hom_subgroup(&g, &s),
            Err(SubgroupViolation::InverseOutside { element: 1, inverse: 5 })
        );
        let s = SubSet::from_elements(6, [0, 1, 5]).unwrap();
        assert_eq!(
            is_hom_subgroup(&g, &s),
            Err(SubgroupViolation::ProductOutside {
                left: 1,
                right: 1,
                product: 4
            })
        );
    }

    #[test]
    fn generated_subgroups() {
        let g = catalog::z6_5x();
        let s = generated_hom_subgroup(&g, &SubSet::from_elements(6, [2]).unwrap());
        assert_eq!(s.elements(), vec![0, 2, 4]);
        assert_eq!(generated_hom_subgroup(&g, &SubSet::empty(6)).elements(), vec![0]);
        assert!(generated_hom_subgroup(&g, &SubSet::full(6)).is_full());
    }

    #[test]
    fn normality_examples() {
        let z4 = catalog::z4_2x();
        let ker = SubSet::from_elements(4, [0, 2]).unwrap();
        let r = is_normal(&z4, &ker).unwrap();
        assert!(r.normal);
        assert_eq!(r.method, NormalityMethod::Cosets);

        let s3 = catalog::twisted_s3();
        let t = SubSet::from_elements(6, [0, S3_TRANSPOSITION]).unwrap();
        assert!(is_hom_subgroup(&s3, &t).is_ok());
        let r = is_normal(&s3, &t).unwrap();
        assert!(!r.normal && r.witness.is_some() && r.cosets_agree);

        let rot = SubSet::from_elements(6, S3_ROTATIONS).unwrap();
        assert!(is_normal(&s3, &rot).unwrap().normal);
    }

    #[test]
    fn canonical_subgroups_of_examples() {
        let s3 = catalog::twisted_s3();
        let rot = SubSet::from_elements(6, S3_ROTATIONS).unwrap();
        let c = canonical_subgroups(&s3, Some(&rot)).unwrap();
        assert_eq!(c.center.elements(), vec![0]);
        assert!(c.checks.all_pass(), "{:?}", c.checks);
        assert!(c.normalizer.unwrap().is_full());

        let z6 = catalog::z6_5x();
        let all = SubSet::full(6);
        let c = canonical_subgroups(&z6, Some(&all)).unwrap();
        assert!(c.center.is_full());
        assert!(c.centralizer.unwrap().is_full());
        assert!(c.normalizer.unwrap().is_full());
        assert!(c.checks.all_pass());
    }

    #[test]
    fn twist_centers_coincide_for_injective_alpha() {
        let z6 = FiniteGroup::cyclic(6);
        let endo: Vec<usize> = (0..6).map(|x| 5 * x % 6).collect();
        let t = twist_centers(&z6, &endo).unwrap();
        assert!(t.group_center.is_full() && t.alpha_center.is_full());
        assert!(t.checks.all_pass());

        let s3 = FiniteGroup::symmetric3();
        let t = twist_centers(&s3, &s3.conjugation(S3_TRANSPOSITION)).unwrap();
        assert_eq!(t.alpha_center.elements(), vec![0]);
        assert!(t.checks.all_pass());
    }

    #[test]
    fn non_injective_twist_enlarges_the_alpha_center() {
        // S3 → C2 → S3 sending odd permutations to a transposition.
        let s3 = FiniteGroup::symmetric3();
        let sign_like: Vec<usize> = (0..6)
            .map(|x| if S3_ROTATIONS.contains(&x) { 0 } else { S3_TRANSPOSITION })
            .collect();
        let t = twist_centers(&s3, &sign_like).unwrap();
        assert_eq!(t.group_center.elements(), vec![0]);
        assert!(t.alpha_center.is_full());
        assert!(t.checks.all_pass());
    }
}
