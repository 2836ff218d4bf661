use serde::Serialize;

use super::{check_hom_group, FiniteHomGroup};
use crate::report::{CheckList, Verdict};

pub const CANCELLATION: &str = "cancellation";
pub const MEDIAL_COMMUTATION: &str = "medial commutation";
pub const COMMUTATION: &str = "commutation";
pub const INTERCHANGE: &str = "interchange law";
pub const SQUARING: &str = "squaring map criterion";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub checks: CheckList,
    /// Whether `g ↦ g·g` is a homomorphism (regular inputs only).
    pub squaring_is_homomorphism: Option<bool>,
    pub abelian: bool,
}

/// Exhaustive test of the §1 identity propositions, each with its hypothesis
/// quantified literally. Quantifiers over `i ≥ k` range over the finitely many
/// values `α^i(g)` takes from `i = k` on.
pub fn check_structure_identities(g: &FiniteHomGroup) -> StructureReport {
    let n = g.order();
    let report = check_hom_group(g);
    let mut checks = CheckList::default();
    if !report.is_hom_group() {
        for name in [CANCELLATION, MEDIAL_COMMUTATION, COMMUTATION, INTERCHANGE, SQUARING] {
            checks.push(name, Verdict::not_applicable("not a Hom-group"));
        }
        return StructureReport {
            checks,
            squaring_is_homomorphism: None,
            abelian: report.abelian,
        };
    }
    let index = |x: usize| g.inv_index(x).expect("Hom-group");
    // {α^i(x) : i ≥ index(x)}
    let tails: Vec<Vec<usize>> = (0..n).map(|x| g.tail_orbit(x, index(x))).collect();

    // If α^i(g)h = α^i(g)k for all i ≥ n_g then α²(h) = α²(k).
    let cancellation = first_failure(n, 3, |t| {
        let (x, h, k) = (t[0], t[1], t[2]);
        g.alpha_pow(h, 2) == g.alpha_pow(k, 2) || !tails[x].iter().all(|&a| g.mul(a, h) == g.mul(a, k))
    });
    checks.push(CANCELLATION, cancellation);

    // If (α^i(g)h)(kα^j(l)) = (α^i(g)k)(hα^j(l)) for all i ≥ n_g, j ≥ n_l then α³(hk) = α³(kh).
    let medial = first_failure(n, 4, |t| {
        let (x, l, h, k) = (t[0], t[1], t[2], t[3]);
        if g.alpha_pow(g.mul(h, k), 3) == g.alpha_pow(g.mul(k, h), 3) {
            return true;
        }
        let hypothesis = tails[x].iter().all(|&a| {
            tails[l]
                .iter()
                .all(|&b| g.mul(g.mul(a, h), g.mul(k, b)) == g.mul(g.mul(a, k), g.mul(h, b)))
        });
        !hypothesis
    });
    checks.push(MEDIAL_COMMUTATION, medial);

    // If (α^i(g⁻¹)α^j(h⁻¹))(α^i(g)α^j(h)) = e for all i ≥ n_g, j ≥ n_h then
    // α^{i+5}(g) and α^{j+5}(h) commute for those i, j.
    let pair_tails: Vec<Vec<(usize, usize)>> = (0..n).map(|x| pair_orbit(g, x, index(x))).collect();
    let e = g.identity();
    let commutation = first_failure(n, 2, |t| {
        let (x, y) = (t[0], t[1]);
        let hypothesis = pair_tails[x].iter().all(|&(xi, xv)| {
            pair_tails[y]
                .iter()
                .all(|&(yi, yv)| g.mul(g.mul(xi, yi), g.mul(xv, yv)) == e)
        });
        if !hypothesis {
            return true;
        }
        let xs = g.tail_orbit(x, index(x) + 5);
        let ys = g.tail_orbit(y, index(y) + 5);
        xs.iter().all(|&a| ys.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    });
    checks.push(COMMUTATION, commutation);

    let interchange = if report.regular && report.abelian {
        first_failure(n, 4, |t| {
            let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
            g.mul(g.mul(a, b), g.mul(c, d)) == g.mul(g.mul(a, c), g.mul(b, d))
        })
    } else {
        Verdict::not_applicable("requires an abelian regular Hom-group")
    };
    checks.push(INTERCHANGE, interchange);

    let mut squaring_is_homomorphism = None;
    let squaring = if report.regular {
        let sq = |x: usize| g.mul(x, x);
        let hom_failure = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| sq(g.mul(a, b)) != g.mul(sq(a), sq(b)) || sq(g.alpha(a)) != g.alpha(sq(a)));
        let is_hom = hom_failure.is_none();
        squaring_is_homomorphism = Some(is_hom);
        match (is_hom, report.abelian) {
            (true, true) | (false, false) => Verdict::Pass,
            (false, true) => {
                let (a, b) = hom_failure.unwrap();
                Verdict::Fail { witness: vec![a, b] }
            }
            (true, false) => Verdict::Fail {
                witness: report
                    .axioms
                    .get(super::axioms::COMMUTATIVITY)
                    .and_then(Verdict::witness)
                    .map(<[usize]>::to_vec)
                    .unwrap_or_default(),
            },
        }
    } else {
        Verdict::not_applicable("requires a regular Hom-group")
    };
    checks.push(SQUARING, squaring);

    StructureReport {
        checks,
        squaring_is_homomorphism,
        abelian: report.abelian,
    }
}

/// `{(α^i(x⁻¹), α^i(x)) : i ≥ start}`.
fn pair_orbit(g: &FiniteHomGroup, x: usize, start: usize) -> Vec<(usize, usize)> {
    let mut p = (g.alpha_pow(g.inv(x), start), g.alpha_pow(x, start));
    let mut out = Vec::new();
    while !out.contains(&p) {
        out.push(p);
        p = (g.alpha(p.0), g.alpha(p.1));
    }
    out
}

/// Lexicographically smallest tuple in `[0,n)^arity` rejected by `ok`.
fn first_failure(n: usize, arity: usize, mut ok: impl FnMut(&[usize]) -> bool) -> Verdict {
    let mut t = vec![0; arity];
    if n == 0 {
        return Verdict::Pass;
    }
    loop {
        if !ok(&t) {
            return Verdict::Fail { witness: t };
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return Verdict::Pass;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn z6_twist_passes_all_five() {
        let g = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let r = check_structure_identities(&g);
        assert!(r.checks.iter().all(|c| c.verdict.is_pass()), "{r:?}");
        assert_eq!(r.squaring_is_homomorphism, Some(true));
    }

    #[test]
    fn twisted_s3_interchange_not_applicable_and_squaring_not_hom() {
        let r = check_structure_identities(&catalog::twisted_s3());
        assert!(r.checks.passes(CANCELLATION));
        assert!(r.checks.passes(MEDIAL_COMMUTATION));
        assert!(r.checks.passes(COMMUTATION));
        assert!(matches!(r.checks.get(INTERCHANGE), Some(Verdict::NotApplicable { .. })));
        assert!(r.checks.passes(SQUARING));
        assert_eq!(r.squaring_is_homomorphism, Some(false));
    }

    #[test]
    fn trivial_group_passes_vacuously() {
        let r = check_structure_identities(&FiniteHomGroup::trivial());
        assert!(r.checks.iter().all(|c| c.verdict.is_pass()));
    }

    #[test]
    fn non_regular_twist_keeps_first_three() {
        let g = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        let r = check_structure_identities(&g);
        assert!(r.checks.passes(CANCELLATION));
        assert!(r.checks.passes(MEDIAL_COMMUTATION));
        assert!(r.checks.passes(COMMUTATION));
        assert!(matches!(r.checks.get(SQUARING), Some(Verdict::NotApplicable { .. })));
    }

    #[test]
    fn tuple_scan_order() {
        let v = first_failure(3, 2, |t| t != [1, 2] && t != [2, 0]);
        assert_eq!(v.witness(), Some(&[1, 2][..]));
    }
}
