use serde::Serialize;

use super::{FiniteHomRing, RingType};
use crate::budget::Budget;
use crate::classical::{FiniteGroup, FiniteRing};
use crate::error::{Error, Result};
use crate::group::{hom_group_of_homomorphisms, FiniteHomGroup};
use crate::report::{scan1, scan2, scan3, CheckList, Verdict};
use crate::structure::SubSet;
use crate::table::{check_map, invert_permutation, is_bijection, Table};

/// Twist of an ordinary ring: `x +̃ y = α(x+y)` and `x ·̃ y = β(xy)` for type
/// (1), `x ·̃ y = β(x)α(y)` for type (2).
pub fn twist_ring(ring: &FiniteRing, alpha: &[usize], beta: &[usize], ring_type: RingType) -> Result<FiniteHomRing> {
    let n = ring.order();
    for (name, f) in [("alpha", alpha), ("beta", beta)] {
        if let Verdict::Fail { witness } = ring.endomorphism_verdict(f)? {
            return Err(Error::rejected(format!("{name} is not a ring endomorphism"), witness));
        }
    }
    if let Verdict::Fail { witness } = scan1(n, |x| alpha[beta[x]] == beta[alpha[x]]) {
        return Err(Error::rejected("alpha and beta do not commute", witness));
    }
    let add = Table::from_fn(n, n, |x, y| alpha[ring.add(x, y)]);
    let mul = match ring_type {
        RingType::One => Table::from_fn(n, n, |x, y| beta[ring.mul(x, y)]),
        RingType::Two => Table::from_fn(n, n, |x, y| ring.mul(beta[x], alpha[y])),
    };
    let neg = (0..n).map(|x| ring.neg(x)).collect();
    let additive = FiniteHomGroup::new(add, alpha.to_vec(), ring.zero(), neg)?;
    let one = ring.one().filter(|&u| alpha[u] == u && beta[u] == u);
    FiniteHomRing::new(additive, mul, beta.to_vec(), one, ring_type)
}

fn inverses(a: &FiniteHomRing) -> Result<(Vec<usize>, Vec<usize>)> {
    match (invert_permutation(a.alpha_map()), invert_permutation(a.beta_map())) {
        (Some(ai), Some(bi)) => Ok((ai, bi)),
        _ => Err(Error::precondition("the Hom-ring must be regular")),
    }
}

/// The ordinary ring obtained by untwisting a regular Hom-ring. The result is
/// validated as a ring, and twisting it back must reproduce `a` exactly.
pub fn compatible_ring(a: &FiniteHomRing) -> Result<FiniteRing> {
    let (ai, bi) = inverses(a)?;
    let n = a.order();
    let add: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| ai[a.add(x, y)]).collect()).collect();
    let mul: Vec<Vec<usize>> = match a.ring_type() {
        RingType::One => (0..n).map(|x| (0..n).map(|y| bi[a.mul(x, y)]).collect()).collect(),
        RingType::Two => (0..n).map(|x| (0..n).map(|y| a.mul(bi[x], ai[y])).collect()).collect(),
    };
    let ring = FiniteRing::from_tables(&add, &mul)?;
    let back = twist_ring(&ring, a.alpha_map(), a.beta_map(), a.ring_type())?;
    let same = back.additive().mul_table() == a.additive().mul_table()
        && back.mul_table() == a.mul_table()
        && back.zero() == a.zero();
    if !same {
        return Err(Error::invariant(
            "twisting the compatible ring does not reproduce the Hom-ring",
        ));
    }
    Ok(ring)
}

/// The identities relating the two axiom systems on an α-Hom-ring (`α = β`,
/// bijective). Both groups of four are checked whatever the declared type.
pub fn type_equivalence_check(a: &FiniteHomRing) -> Result<CheckList> {
    if a.alpha_map() != a.beta_map() {
        return Err(Error::precondition("alpha and beta must coincide"));
    }
    let (ai, _) = inverses(a)?;
    let n = a.order();
    let al = |x: usize| a.alpha(x);
    let b = |x: usize| a.beta(x);
    let m = |x: usize, y: usize| a.mul(x, y);
    let p = |x: usize, y: usize| a.add(x, y);
    let mut c = CheckList::default();
    c.push(
        "b(a^2 x)(b(a y) b^2 z) = a(a x b y) b^3 z",
        scan3(n, |x, y, z| {
            m(b(al(al(x))), m(b(al(y)), b(b(z)))) == m(al(m(al(x), b(y))), b(b(b(z))))
        }),
    );
    c.push(
        "(a^2 x b(a y)) b^2(a z) = b a(a x (y z))",
        scan3(n, |x, y, z| {
            m(m(al(al(x)), b(al(y))), b(b(al(z)))) == b(al(m(al(x), m(y, z))))
        }),
    );
    c.push(
        "a^2 x b(y+z) = a x b y + a x b z",
        scan3(n, |x, y, z| {
            m(al(al(x)), b(p(y, z))) == p(m(al(x), b(y)), m(al(x), b(z)))
        }),
    );
    c.push(
        "a(y+z) a(b x) = a y b x + a z b x",
        scan3(n, |x, y, z| {
            m(al(p(y, z)), al(b(x))) == p(m(al(y), b(x)), m(al(z), b(x)))
        }),
    );
    c.push(
        "b(x)(y z) = (x y) a(z)",
        scan3(n, |x, y, z| m(b(x), m(y, z)) == m(m(x, y), al(z))),
    );
    c.push(
        "(x y) b(z) = b(x)(y b(a^-1 z))",
        scan3(n, |x, y, z| m(m(x, y), b(z)) == m(b(x), m(y, b(ai[z])))),
    );
    c.push(
        "a(x)(y+z) = x y + x z",
        scan3(n, |x, y, z| m(al(x), p(y, z)) == p(m(x, y), m(x, z))),
    );
    c.push(
        "(y+z) a(x) = y x + z x",
        scan3(n, |x, y, z| m(p(y, z), al(x)) == p(m(y, x), m(z, x))),
    );
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingCenter {
    pub center: SubSet,
    /// Closure of the center under the Hom-ring operations.
    pub checks: CheckList,
}

/// `Z = {x : xa = ax}` for type (1), `Z' = {x : x·β(a) = α(a)·x}` for type (2).
pub fn ring_center(a: &FiniteHomRing) -> Result<RingCenter> {
    let Some(one) = a.one() else {
        return Err(Error::precondition("the Hom-ring must be unitary"));
    };
    if !a.is_regular() {
        return Err(Error::precondition("the Hom-ring must be regular"));
    }
    let n = a.order();
    let center = match a.ring_type() {
        RingType::One => SubSet::from_predicate(n, |x| (0..n).all(|y| a.mul(x, y) == a.mul(y, x))),
        RingType::Two => SubSet::from_predicate(n, |x| (0..n).all(|y| a.mul(x, a.beta(y)) == a.mul(a.alpha(y), x))),
    };
    let z = center.elements();
    let k = z.len();
    let mut checks = CheckList::default();
    let member = |x: usize| Verdict::from_witness((!center.contains(x)).then(|| vec![x]));
    checks.push("contains zero", member(a.zero()));
    checks.push("contains one", member(one));
    checks.push("closed under +", scan2(k, k, |i, j| center.contains(a.add(z[i], z[j]))));
    checks.push("closed under negation", scan1(k, |i| center.contains(a.neg(z[i]))));
    checks.push(
        "closed under product",
        scan2(k, k, |i, j| center.contains(a.mul(z[i], z[j]))),
    );
    checks.push("closed under alpha", scan1(k, |i| center.contains(a.alpha(z[i]))));
    checks.push("closed under beta", scan1(k, |i| center.contains(a.beta(z[i]))));
    Ok(RingCenter { center, checks })
}

/// `(End(M), +, ∘, 0, α_M∘-, id)` for an abelian regular Hom-group `M`.
/// Elements are the Hom-group endomorphisms in lexicographic order of their
/// tables. The identity map is the unit only when `α_M = id`, since the unit
/// must be fixed by the twist.
pub fn endomorphism_hom_ring(m: &FiniteHomGroup, budget: &Budget) -> Result<(FiniteHomRing, Vec<Vec<usize>>)> {
    let (additive, maps) = hom_group_of_homomorphisms(m, m, budget)?;
    let maps: Vec<Vec<usize>> = maps.into_iter().map(|f| f.map).collect();
    let k = maps.len();
    let index = |f: &[usize]| -> Result<usize> {
        maps.binary_search_by(|g| g.as_slice().cmp(f))
            .map_err(|_| Error::invariant("End(M) is not closed under composition"))
    };
    let mut mul = Table::from_fn(k, k, |_, _| 0);
    for f in 0..k {
        for g in 0..k {
            let fg: Vec<usize> = maps[g].iter().map(|&x| maps[f][x]).collect();
            mul.set(f, g, index(&fg)?);
        }
    }
    let id: Vec<usize> = (0..m.order()).collect();
    let one = if m.alpha_map() == id.as_slice() {
        Some(index(&id)?)
    } else {
        None
    };
    let ring = FiniteHomRing::new(additive, mul, (0..k).collect(), one, RingType::One)?;
    Ok((ring, maps))
}

/// `𝔽_p G` twisted by the ring map induced from a group automorphism, with
/// `α = β`. Elements use the base-`p` encoding of [`FiniteRing::group_ring`].
pub fn twisted_group_ring(
    g: &FiniteGroup,
    auto: &[usize],
    p: usize,
    ring_type: RingType,
    budget: &Budget,
) -> Result<FiniteHomRing> {
    check_map("automorphism", auto, g.order(), g.order())?;
    if let Verdict::Fail { witness } = g.endomorphism_verdict(auto)? {
        return Err(Error::rejected("not a group endomorphism", witness));
    }
    if !is_bijection(auto) {
        return Err(Error::rejected("not a group automorphism", vec![]));
    }
    if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::precondition(format!("{p} is not prime")));
    }
    let ring = FiniteRing::group_ring(g, p, budget.group_ring)?;
    let alpha = FiniteRing::induced_group_ring_map(g, p, auto);
    twist_ring(&ring, &alpha, &alpha, ring_type)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::S3_TRANSPOSITION;
    use crate::ring::check_hom_ring;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2c3(t: RingType) -> FiniteHomRing {
        let c3 = FiniteGroup::cyclic(3);
        twisted_group_ring(&c3, &c3.power_map(2), 2, t, &Budget::default()).unwrap()
    }

    #[test]
    fn f2c3_twist_both_types() {
        for t in [RingType::One, RingType::Two] {
            let r = f2c3(t);
            assert_eq!(r.order(), 8);
            assert!(r.is_regular());
            let rep = check_hom_ring(&r);
            assert!(rep.passes(), "{t:?} {rep:?}");
            assert!(rep.derived.all_pass());
            assert!(type_equivalence_check(&r).unwrap().all_pass());
        }
    }

    #[test]
    fn compatible_of_f2c3_is_the_group_ring() {
        let r = f2c3(RingType::One);
        let c = compatible_ring(&r).unwrap();
        let base = FiniteRing::group_ring(&FiniteGroup::cyclic(3), 2, 4096).unwrap();
        assert_eq!(c.add_table(), base.add_table());
        assert_eq!(c.mul_table(), base.mul_table());
        let c2 = compatible_ring(&f2c3(RingType::Two)).unwrap();
        assert_eq!(c2.mul_table(), base.mul_table());
    }

    #[test]
    fn round_trip_on_random_twists() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let bases = [
            FiniteRing::zmod(5),
            FiniteRing::zmod(6),
            FiniteRing::gf4(),
            FiniteRing::zmod(2).product(&FiniteRing::zmod(2)),
            FiniteRing::group_ring(&FiniteGroup::cyclic(3), 2, 4096).unwrap(),
        ];
        let mut done = 0;
        while done < 10 {
            let ring = &bases[rng.gen_range(0..bases.len())];
            let n = ring.order();
            let autos: Vec<Vec<usize>> = permutations(n)
                .into_iter()
                .filter(|f| ring.endomorphism_verdict(f).unwrap().is_pass())
                .collect();
            let a = &autos[rng.gen_range(0..autos.len())];
            let b = &autos[rng.gen_range(0..autos.len())];
            let t = if rng.gen() { RingType::One } else { RingType::Two };
            let Ok(h) = twist_ring(ring, a, b, t) else { continue };
            compatible_ring(&h).unwrap();
            done += 1;
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn z6_three_x_twist() {
        let z6 = FiniteRing::zmod(6);
        let f: Vec<usize> = (0..6).map(|x| 3 * x % 6).collect();
        let r = twist_ring(&z6, &f, &f, RingType::One).unwrap();
        assert!(check_hom_ring(&r).passes());
        assert_eq!(r.one(), None);
        assert!(!r.is_regular());
        assert!(matches!(type_equivalence_check(&r), Err(Error::Precondition(_))));
        assert!(matches!(compatible_ring(&r), Err(Error::Precondition(_))));
    }

    #[test]
    fn twist_rejects_bad_maps() {
        let z6 = FiniteRing::zmod(6);
        let twice: Vec<usize> = (0..6).map(|x| 2 * x % 6).collect();
        assert!(matches!(
            twist_ring(&z6, &twice, &twice, RingType::One),
            Err(Error::Rejected { .. })
        ));
        let f4 = FiniteRing::gf4();
        let frob = vec![0, 1, 3, 2];
        let id = vec![0, 1, 2, 3];
        assert!(twist_ring(&f4, &frob, &id, RingType::One).is_ok());
    }

    #[test]
    fn centers() {
        let r = f2c3(RingType::One);
        let z = ring_center(&r).unwrap();
        assert!(z.center.is_full() && z.checks.all_pass());

        let s3 = FiniteGroup::symmetric3();
        let conj = s3.conjugation(S3_TRANSPOSITION);
        let r = twisted_group_ring(&s3, &conj, 2, RingType::One, &Budget::default()).unwrap();
        let z = ring_center(&r).unwrap();
        assert!(!z.center.is_full());
        assert!(z.center.contains(r.zero()) && z.center.contains(r.one().unwrap()));
        assert!(z.checks.all_pass(), "{:?}", z.checks);
    }

    #[test]
    fn f2s3_twisted_group_ring() {
        let s3 = FiniteGroup::symmetric3();
        let conj = s3.conjugation(S3_TRANSPOSITION);
        let r = twisted_group_ring(&s3, &conj, 2, RingType::One, &Budget::default()).unwrap();
        assert_eq!(r.order(), 64);
        assert!(check_hom_ring(&r).passes());
    }

    #[test]
    fn endomorphism_rings() {
        let (r, maps) = endomorphism_hom_ring(&crate::catalog::cyclic(2), &Budget::default()).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(maps[r.zero()], vec![0, 0]);
        assert!(check_hom_ring(&r).passes());

        let (r, maps) = endomorphism_hom_ring(&crate::catalog::z6_5x(), &Budget::default()).unwrap();
        assert_eq!(maps[r.zero()], vec![0; 6]);
        assert_eq!(r.one(), None);
        let rep = check_hom_ring(&r);
        // α_M ≠ id, and α_End(f)∘(g+h) picks up an extra α_M.
        assert!(rep.checks.passes(super::super::MK1));
        assert!(!rep.checks.passes(super::super::MK2));
    }
}
