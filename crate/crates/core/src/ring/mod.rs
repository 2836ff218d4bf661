//! Finite Hom-rings of type (1) and (2), and their example families.

mod construct;
mod group_ring;
pub mod poly;

pub use construct::{
    compatible_ring, endomorphism_hom_ring, ring_center, twist_ring, twisted_group_ring, type_equivalence_check,
    RingCenter,
};
pub use group_ring::GroupRingElem;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{check_hom_group, FiniteHomGroup};
use crate::report::{scan1, scan2, scan3, CheckList, Verdict};
use crate::table::{check_element, check_map, is_bijection, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingType {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl RingType {
    pub fn number(self) -> u8 {
        match self {
            RingType::One => 1,
            RingType::Two => 2,
        }
    }
}

/// `(A, +, ·, 0, α, β)` with an optional unit and a declared axiom system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHomRing {
    additive: FiniteHomGroup,
    mul: Table,
    beta: Vec<usize>,
    one: Option<usize>,
    ring_type: RingType,
}

impl FiniteHomRing {
    /// `additive` carries `+`, `0`, `α` and negation.
    pub fn new(
        additive: FiniteHomGroup,
        mul: Table,
        beta: Vec<usize>,
        one: Option<usize>,
        ring_type: RingType,
    ) -> Result<Self> {
        let n = additive.order();
        if mul.rows() != n || mul.cols() != n {
            return Err(Error::structural(format!("mul must be {n}×{n}")));
        }
        check_map("beta", &beta, n, n)?;
        if let Some(u) = one {
            check_element("one", u, n)?;
        }
        Ok(FiniteHomRing {
            additive,
            mul,
            beta,
            one,
            ring_type,
        })
    }

    pub fn order(&self) -> usize {
        self.additive.order()
    }

    pub fn additive(&self) -> &FiniteHomGroup {
        &self.additive
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.additive.mul(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    pub fn neg(&self, x: usize) -> usize {
        self.additive.inv(x)
    }

    #[inline]
    pub fn alpha(&self, x: usize) -> usize {
        self.additive.alpha(x)
    }

    #[inline]
    pub fn beta(&self, x: usize) -> usize {
        self.beta[x]
    }

    pub fn zero(&self) -> usize {
        self.additive.identity()
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn ring_type(&self) -> RingType {
        self.ring_type
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn alpha_map(&self) -> &[usize] {
        self.additive.alpha_map()
    }

    pub fn beta_map(&self) -> &[usize] {
        &self.beta
    }

    pub fn is_regular(&self) -> bool {
        is_bijection(self.alpha_map()) && is_bijection(&self.beta)
    }

    pub fn is_commutative(&self) -> bool {
        scan2(self.order(), self.order(), |x, y| self.mul(x, y) == self.mul(y, x)).is_pass()
    }

    /// Same structure checked against the other axiom system.
    pub fn with_type(&self, ring_type: RingType) -> Self {
        FiniteHomRing {
            ring_type,
            ..self.clone()
        }
    }

    /// Same tables with a different unit.
    pub fn with_one(&self, one: Option<usize>) -> Self {
        FiniteHomRing { one, ..self.clone() }
    }

    /// Same structure with one product entry replaced.
    pub fn with_mul_entry(&self, x: usize, y: usize, v: usize) -> Result<Self> {
        check_element("value", v, self.order())?;
        let mut r = self.clone();
        r.mul.set(x, y, v);
        Ok(r)
    }
}

pub const MK1: &str = "MK1 hom-associativity";
pub const MK2: &str = "MK2 left hom-distributivity";
pub const MK3: &str = "MK3 right hom-distributivity";
pub const MK4: &str = "MK4 unit";
pub const MK5: &str = "MK5 unit fixed by twists";
pub const T2_ASSOCIATIVITY: &str = "type 2 hom-associativity";
pub const T2_LEFT_DISTRIBUTIVITY: &str = "type 2 left hom-distributivity";
pub const T2_RIGHT_DISTRIBUTIVITY: &str = "type 2 right hom-distributivity";
pub const T2_UNIT: &str = "type 2 unit";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub ring_type: u8,
    pub checks: CheckList,
    /// Consequences checked on unitary regular rings.
    pub derived: CheckList,
}

impl RingReport {
    pub fn passes(&self) -> bool {
        self.checks.all_pass()
    }
}

/// Every axiom of the declared type, exhaustively.
pub fn check_hom_ring(r: &FiniteHomRing) -> RingReport {
    let n = r.order();
    let a = |x: usize| r.alpha(x);
    let b = |x: usize| r.beta(x);
    let m = |x: usize, y: usize| r.mul(x, y);
    let p = |x: usize, y: usize| r.add(x, y);
    let mut checks = CheckList::default();

    let add = check_hom_group(&r.additive);
    let additive = match add.first_violation() {
        Some((_, w)) => Verdict::Fail { witness: w.to_vec() },
        None if !add.abelian => Verdict::Fail { witness: Vec::new() },
        None => Verdict::Pass,
    };
    checks.push("additive abelian Hom-group", additive);
    checks.push("beta additive", scan2(n, n, |x, y| b(p(x, y)) == p(b(x), b(y))));
    checks.push("alpha and beta commute", scan1(n, |x| a(b(x)) == b(a(x))));
    checks.push("alpha multiplicative", scan2(n, n, |x, y| a(m(x, y)) == m(a(x), a(y))));
    checks.push("beta multiplicative", scan2(n, n, |x, y| b(m(x, y)) == m(b(x), b(y))));

    match r.ring_type {
        RingType::One => {
            checks.push(MK1, scan3(n, |x, y, z| m(b(x), m(y, z)) == m(m(x, y), b(z))));
            checks.push(MK2, scan3(n, |x, y, z| m(a(x), p(y, z)) == p(m(x, y), m(x, z))));
            checks.push(MK3, scan3(n, |x, y, z| m(p(y, z), a(x)) == p(m(y, x), m(z, x))));
            if let Some(u) = r.one {
                checks.push(MK4, scan1(n, |x| m(x, u) == b(x) && m(u, x) == b(x)));
                checks.push(MK5, unit_fixed(r, u));
            }
        }
        RingType::Two => {
            checks.push(
                T2_ASSOCIATIVITY,
                scan3(n, |x, y, z| {
                    m(b(a(a(x))), m(b(a(y)), b(b(z)))) == m(m(a(a(x)), b(a(y))), b(b(a(z))))
                }),
            );
            checks.push(
                T2_LEFT_DISTRIBUTIVITY,
                scan3(n, |x, y, z| m(a(a(x)), b(p(y, z))) == p(m(a(x), b(y)), m(a(x), b(z)))),
            );
            checks.push(
                T2_RIGHT_DISTRIBUTIVITY,
                scan3(n, |x, y, z| m(a(p(y, z)), a(b(x))) == p(m(a(y), b(x)), m(a(z), b(x)))),
            );
            if let Some(u) = r.one {
                checks.push(T2_UNIT, scan1(n, |x| m(x, u) == b(x) && m(u, x) == a(x)));
                checks.push(MK5, unit_fixed(r, u));
            }
        }
    }

    let mut derived = CheckList::default();
    if r.one.is_some() && r.is_regular() {
        let zero = r.zero();
        derived.push("zero law", scan1(n, |x| m(x, zero) == zero && m(zero, x) == zero));
        derived.push(
            "negation law",
            scan2(n, n, |x, y| {
                let neg = r.neg(m(x, y));
                m(r.neg(x), y) == neg && m(x, r.neg(y)) == neg
            }),
        );
    }
    RingReport {
        ring_type: r.ring_type.number(),
        checks,
        derived,
    }
}

fn unit_fixed(r: &FiniteHomRing, u: usize) -> Verdict {
    if r.alpha(u) == u && r.beta(u) == u {
        Verdict::Pass
    } else {
        Verdict::Fail { witness: vec![u] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::FiniteRing;

    fn naive_mk(r: &FiniteHomRing) -> (bool, bool, bool) {
        let n = r.order();
        let (mut mk1, mut mk2, mut mk3) = (true, true, true);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    mk1 &= r.mul(r.beta(x), r.mul(y, z)) == r.mul(r.mul(x, y), r.beta(z));
                    mk2 &= r.mul(r.alpha(x), r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z));
                    mk3 &= r.mul(r.add(y, z), r.alpha(x)) == r.add(r.mul(y, x), r.mul(z, x));
                }
            }
        }
        (mk1, mk2, mk3)
    }

    #[test]
    fn ordinary_ring_is_type_one() {
        let z6 = FiniteRing::zmod(6);
        let id: Vec<usize> = (0..6).collect();
        let r = twist_ring(&z6, &id, &id, RingType::One).unwrap();
        let rep = check_hom_ring(&r);
        assert!(rep.passes() && rep.derived.all_pass(), "{rep:?}");
        assert_eq!(r.one(), Some(1));
    }

    #[test]
    fn checker_agrees_with_naive_scan_under_mutation() {
        let z4 = FiniteRing::zmod(4);
        let id: Vec<usize> = (0..4).collect();
        let r = twist_ring(&z4, &id, &id, RingType::One).unwrap();
        for (x, y, v) in [(1, 1, 2), (2, 3, 0), (0, 0, 1)] {
            let bad = r.with_mul_entry(x, y, v).unwrap();
            let (mk1, mk2, mk3) = naive_mk(&bad);
            let rep = check_hom_ring(&bad);
            assert_eq!(rep.checks.passes(MK1), mk1);
            assert_eq!(rep.checks.passes(MK2), mk2);
            assert_eq!(rep.checks.passes(MK3), mk3);
        }
    }
}
