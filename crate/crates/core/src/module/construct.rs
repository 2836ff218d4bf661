use serde::Serialize;

use super::{FiniteHomModule, Side};
use crate::classical::FiniteRing;
use crate::error::{Error, Result};
use crate::group::FiniteHomGroup;
use crate::report::{scan1, scan2, CheckList, Verdict};
use crate::ring::{compatible_ring, FiniteHomRing};
use crate::table::{check_map, invert_permutation, Table};

use super::scan3_mixed;

/// Componentwise sum; `(m, n)` is encoded as `m·|N| + n`. Only the actions
/// present on both summands are kept.
pub fn direct_sum(m: &FiniteHomModule, n: &FiniteHomModule) -> Result<FiniteHomModule> {
    if m.ring() != n.ring() {
        return Err(Error::precondition("summands are modules over different rings"));
    }
    let k = n.order();
    let size = m.order() * k;
    let ra = m.ring().order();
    let additive = m.additive().direct_product(n.additive());
    let left = (m.left_table().is_some() && n.left_table().is_some())
        .then(|| Table::from_fn(ra, size, |a, x| m.act_left(a, x / k) * k + n.act_left(a, x % k)));
    let right = (m.right_table().is_some() && n.right_table().is_some())
        .then(|| Table::from_fn(size, ra, |x, a| m.act_right(x / k, a) * k + n.act_right(x % k, a)));
    if left.is_none() && right.is_none() {
        return Err(Error::precondition("summands share no side"));
    }
    FiniteHomModule::new(m.ring().clone(), additive, left, right)
}

/// A left module over an ordinary ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryModule {
    pub ring: FiniteRing,
    pub add: Table,
    pub zero: usize,
    pub neg: Vec<usize>,
    /// `|R| × |M|`.
    pub act: Table,
}

impl OrdinaryModule {
    pub fn order(&self) -> usize {
        self.neg.len()
    }

    /// Abelian group and left module axioms, exhaustively.
    pub fn check(&self) -> CheckList {
        let (n, k) = (self.ring.order(), self.order());
        let p = |x: usize, y: usize| self.add.get(x, y);
        let l = |a: usize, x: usize| self.act.get(a, x);
        let r = &self.ring;
        let mut c = CheckList::default();
        c.push(
            "addition associative",
            scan3_mixed(k, k, k, |x, y, z| p(p(x, y), z) == p(x, p(y, z))),
        );
        c.push("addition commutative", scan2(k, k, |x, y| p(x, y) == p(y, x)));
        c.push("zero", scan1(k, |x| p(x, self.zero) == x));
        c.push("negation", scan1(k, |x| p(x, self.neg[x]) == self.zero));
        c.push(
            "a(m+n) = am + an",
            scan3_mixed(n, k, k, |a, x, y| l(a, p(x, y)) == p(l(a, x), l(a, y))),
        );
        c.push(
            "(a+b)m = am + bm",
            scan3_mixed(n, n, k, |a, b, x| l(r.add(a, b), x) == p(l(a, x), l(b, x))),
        );
        c.push(
            "(ab)m = a(bm)",
            scan3_mixed(n, n, k, |a, b, x| l(r.mul(a, b), x) == l(a, l(b, x))),
        );
        if let Some(one) = r.one() {
            c.push("1m = m", scan1(k, |x| l(one, x) == x));
        }
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatibleReport {
    /// Ordinary module axioms of the untwisted structure.
    pub module_axioms: CheckList,
    /// `β(a ⊳ m) = α(a) ⊳ β(m)`.
    pub compatibility: Verdict,
    /// Twisting back reproduces the original tables.
    pub round_trip: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleModule {
    pub module: OrdinaryModule,
    pub report: CompatibleReport,
}

/// Untwist a regular left module: `m +' n = β⁻¹(m + n)` and `a ⊳ m = β⁻¹(am)`
/// over the compatible ring.
pub fn compatible_module(m: &FiniteHomModule) -> Result<CompatibleModule> {
    m.require(Side::Left)?;
    let ring = compatible_ring(m.ring())?;
    let Some(bi) = invert_permutation(m.beta_map()) else {
        return Err(Error::precondition("the module must be regular"));
    };
    let (n, k) = (ring.order(), m.order());
    let module = OrdinaryModule {
        ring,
        add: Table::from_fn(k, k, |x, y| bi[m.add(x, y)]),
        zero: m.zero_element(),
        neg: (0..k).map(|x| m.neg(x)).collect(),
        act: Table::from_fn(n, k, |a, x| bi[m.act_left(a, x)]),
    };
    let r = m.ring();
    let compatibility = scan2(n, k, |a, x| {
        m.beta(module.act.get(a, x)) == module.act.get(r.alpha(a), m.beta(x))
    });
    let back = module_from_compatible(r, &module, m.beta_map())?;
    let round_trip = back.additive().mul_table() == m.additive().mul_table() && back.left_table() == m.left_table();
    let report = CompatibleReport {
        module_axioms: module.check(),
        compatibility,
        round_trip,
    };
    Ok(CompatibleModule { module, report })
}

/// Twist an ordinary module over the compatible ring of `ring` by an additive
/// map `β` satisfying `β(a ⊳ m) = α(a) ⊳ β(m)`: `m + n = β(m +' n)` and
/// `am = β(a ⊳ m)`. `β` need not be bijective.
pub fn module_from_compatible(ring: &FiniteHomRing, base: &OrdinaryModule, beta: &[usize]) -> Result<FiniteHomModule> {
    let compat = compatible_ring(ring)?;
    if compat.add_table() != base.ring.add_table() || compat.mul_table() != base.ring.mul_table() {
        return Err(Error::precondition("the base module is not over the compatible ring"));
    }
    let (n, k) = (ring.order(), base.order());
    check_map("beta", beta, k, k)?;
    if let Verdict::Fail { witness } = scan2(k, k, |x, y| beta[base.add.get(x, y)] == base.add.get(beta[x], beta[y])) {
        return Err(Error::rejected("beta is not additive", witness));
    }
    if let Verdict::Fail { witness } = scan2(n, k, |a, x| {
        beta[base.act.get(a, x)] == base.act.get(ring.alpha(a), beta[x])
    }) {
        return Err(Error::rejected("beta(a m) = alpha(a) beta(m) fails", witness));
    }
    let add = Table::from_fn(k, k, |x, y| beta[base.add.get(x, y)]);
    let additive = FiniteHomGroup::new(add, beta.to_vec(), base.zero, base.neg.clone())?;
    let left = Table::from_fn(n, k, |a, x| beta[base.act.get(a, x)]);
    FiniteHomModule::new(ring.clone(), additive, Some(left), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::module::check_module;
    use crate::ring::RingType;

    #[test]
    fn direct_sums() {
        let r = catalog::f2c3_twist(RingType::One);
        let a = FiniteHomModule::regular(&r).unwrap();
        let s = direct_sum(&a, &a).unwrap();
        assert_eq!(s.order(), 64);
        assert!(check_module(&s, crate::module::Side::Bi).unwrap().passes());
        for x in 0..64 {
            assert_eq!(s.beta(x), a.beta(x / 8) * 8 + a.beta(x % 8));
        }
        let z = direct_sum(&a, &FiniteHomModule::zero(&r)).unwrap();
        assert_eq!(z.additive().mul_table(), a.additive().mul_table());
        assert_eq!(z.left_table(), a.left_table());
    }

    #[test]
    fn compatible_of_f2c3_is_the_group_ring_module() {
        let r = catalog::f2c3_twist(RingType::One);
        let m = FiniteHomModule::regular(&r).unwrap().restrict(Side::Left).unwrap();
        let c = compatible_module(&m).unwrap();
        assert!(c.report.module_axioms.all_pass());
        assert!(c.report.compatibility.is_pass());
        assert!(c.report.round_trip);
        assert_eq!(&c.module.act, c.module.ring.mul_table());
        // and back again
        let back = module_from_compatible(&r, &c.module, m.beta_map()).unwrap();
        assert_eq!(compatible_module(&back).unwrap().module, c.module);
    }

    #[test]
    fn identity_twist_transport_is_identity() {
        let r = catalog::f2_ring();
        let m = FiniteHomModule::regular(&r).unwrap().restrict(Side::Left).unwrap();
        let c = compatible_module(&m).unwrap();
        assert_eq!(&c.module.add, m.additive().mul_table());
        assert_eq!(Some(&c.module.act), m.left_table());
    }

    #[test]
    fn non_regular_module_is_rejected() {
        let m = catalog::z4_doubling_module();
        assert!(matches!(compatible_module(&m), Err(Error::Precondition(_))));
    }
}
