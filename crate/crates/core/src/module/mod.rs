//! Modules over unitary Hom-rings of type (1).
//!
//! A left module is an abelian Hom-group `(M, +, β)` with an action `am`
//! satisfying
//!
//! * M1 `α(a)(m + n) = am + an`
//! * M2 `(a + b)β(m) = am + bm`
//! * M3 `(ab)β(m) = α(a)(bm)`
//! * M4 `1·m = β(m)`
//!
//! and right modules mirror these with the ring acting on the right.

mod construct;
mod submodule;
mod tensor;

pub use construct::{
    compatible_module, direct_sum, module_from_compatible, CompatibleModule, CompatibleReport, OrdinaryModule,
};
pub use submodule::{
    check_module_hom, generated_submodule, hom_ring_simplicity, is_submodule, semisimple_decomposition,
    submodule_analysis, Decomposition, HomReading, SimplicityReport, SubmoduleAnalysis,
};
pub use tensor::{
    hom_r_bilinear_check, tensor_over_r_oracle, RBilinearReport, TensorOverR, BALANCED, LEFT_ACTION,
    LEFT_ACTION_TWISTED,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{check_hom_group, FiniteHomGroup};
use crate::report::{scan1, scan2, CheckList, Verdict};
use crate::ring::{check_hom_ring, FiniteHomRing, RingType};
use crate::table::{check_element, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    Bi,
}

impl Side {
    pub fn has_left(self) -> bool {
        matches!(self, Side::Left | Side::Bi)
    }

    pub fn has_right(self) -> bool {
        matches!(self, Side::Right | Side::Bi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHomModule {
    ring: FiniteHomRing,
    /// `(M, +_M, 0_M, β_M)`; the Hom-group twist is `β_M`.
    additive: FiniteHomGroup,
    left: Option<Table>,
    right: Option<Table>,
}

impl FiniteHomModule {
    pub fn new(
        ring: FiniteHomRing,
        additive: FiniteHomGroup,
        left: Option<Table>,
        right: Option<Table>,
    ) -> Result<Self> {
        let (n, m) = (ring.order(), additive.order());
        if left.is_none() && right.is_none() {
            return Err(Error::structural("a module needs a left or a right action"));
        }
        if let Some(t) = &left {
            if t.rows() != n || t.cols() != m {
                return Err(Error::structural(format!("left action must be {n}×{m}")));
            }
        }
        if let Some(t) = &right {
            if t.rows() != m || t.cols() != n {
                return Err(Error::structural(format!("right action must be {m}×{n}")));
            }
        }
        for t in left.iter().chain(right.iter()) {
            for r in 0..t.rows() {
                for c in 0..t.cols() {
                    check_element("action value", t.get(r, c), m)?;
                }
            }
        }
        Ok(FiniteHomModule {
            ring,
            additive,
            left,
            right,
        })
    }

    /// An α-Hom-ring (`α = β`) acting on itself by multiplication on both sides.
    pub fn regular(ring: &FiniteHomRing) -> Result<Self> {
        if ring.alpha_map() != ring.beta_map() {
            return Err(Error::precondition("the ring acts on itself only when alpha = beta"));
        }
        let t = ring.mul_table().clone();
        Self::new(ring.clone(), ring.additive().clone(), Some(t.clone()), Some(t))
    }

    /// The one-element module.
    pub fn zero(ring: &FiniteHomRing) -> Self {
        let n = ring.order();
        let z = Table::from_fn(n, 1, |_, _| 0);
        let zr = Table::from_fn(1, n, |_, _| 0);
        Self::new(ring.clone(), FiniteHomGroup::trivial(), Some(z), Some(zr)).expect("zero tables are well formed")
    }

    pub fn ring(&self) -> &FiniteHomRing {
        &self.ring
    }

    pub fn additive(&self) -> &FiniteHomGroup {
        &self.additive
    }

    pub fn order(&self) -> usize {
        self.additive.order()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.additive.mul(x, y)
    }

    pub fn neg(&self, x: usize) -> usize {
        self.additive.inv(x)
    }

    #[inline]
    pub fn beta(&self, x: usize) -> usize {
        self.additive.alpha(x)
    }

    pub fn beta_map(&self) -> &[usize] {
        self.additive.alpha_map()
    }

    pub fn zero_element(&self) -> usize {
        self.additive.identity()
    }

    pub fn left_table(&self) -> Option<&Table> {
        self.left.as_ref()
    }

    pub fn right_table(&self) -> Option<&Table> {
        self.right.as_ref()
    }

    /// `am`; panics when there is no left action.
    #[inline]
    pub fn act_left(&self, a: usize, m: usize) -> usize {
        self.left.as_ref().expect("module has a left action").get(a, m)
    }

    /// `ma`; panics when there is no right action.
    #[inline]
    pub fn act_right(&self, m: usize, a: usize) -> usize {
        self.right.as_ref().expect("module has a right action").get(m, a)
    }

    pub fn is_regular(&self) -> bool {
        self.additive.is_regular()
    }

    pub fn side(&self) -> Side {
        match (&self.left, &self.right) {
            (Some(_), Some(_)) => Side::Bi,
            (Some(_), None) => Side::Left,
            _ => Side::Right,
        }
    }

    /// Keeps only the actions of `side`.
    pub fn restrict(&self, side: Side) -> Result<Self> {
        self.require(side)?;
        Ok(FiniteHomModule {
            left: self.left.clone().filter(|_| side.has_left()),
            right: self.right.clone().filter(|_| side.has_right()),
            ..self.clone()
        })
    }

    /// A right action read as a left one, `a·m := m·a`.
    pub fn right_as_left(&self) -> Result<Self> {
        self.require(Side::Right)?;
        let r = self.right.as_ref().unwrap();
        let left = Table::from_fn(r.cols(), r.rows(), |a, m| r.get(m, a));
        Self::new(self.ring.clone(), self.additive.clone(), Some(left), None)
    }

    /// Same module with one left-action entry replaced.
    pub fn with_left_entry(&self, a: usize, m: usize, v: usize) -> Result<Self> {
        self.require(Side::Left)?;
        check_element("value", v, self.order())?;
        let mut r = self.clone();
        r.left.as_mut().unwrap().set(a, m, v);
        Ok(r)
    }

    fn require(&self, side: Side) -> Result<()> {
        if (side.has_left() && self.left.is_none()) || (side.has_right() && self.right.is_none()) {
            return Err(Error::structural(format!(
                "module lacks the action needed for {side:?}"
            )));
        }
        Ok(())
    }
}

pub const M1: &str = "M1 alpha(a)(m+n) = am + an";
pub const M2: &str = "M2 (a+b)beta(m) = am + bm";
pub const M3: &str = "M3 (ab)beta(m) = alpha(a)(bm)";
pub const M4: &str = "M4 1m = beta(m)";
pub const M5: &str = "M5 beta(am) = alpha(a)beta(m)";
pub const M1R: &str = "M1 (m+n)alpha(a) = ma + na";
pub const M2R: &str = "M2 beta(m)(a+b) = ma + mb";
pub const M3R: &str = "M3 beta(m)(ab) = (ma)alpha(b)";
pub const M4R: &str = "M4 m1 = beta(m)";
pub const M5R: &str = "M5 beta(ma) = beta(m)alpha(a)";
pub const BIMODULE: &str = "(am)alpha(b) = alpha(a)(mb)";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub side: Side,
    pub checks: CheckList,
    /// M5 (when M3 and M4 pass) and the zero laws.
    pub derived: CheckList,
}

impl ModuleReport {
    pub fn passes(&self) -> bool {
        self.checks.all_pass()
    }
}

/// Exhaustive check of the module axioms for `side`.
pub fn check_module(m: &FiniteHomModule, side: Side) -> Result<ModuleReport> {
    m.require(side)?;
    let r = &m.ring;
    let Some(one) = r.one() else {
        return Err(Error::precondition("the ring must be unitary"));
    };
    if r.ring_type() != RingType::One || !check_hom_ring(r).passes() {
        return Err(Error::precondition("the ring must be a certified Hom-ring of type (1)"));
    }
    let (n, k) = (r.order(), m.order());
    let a = |x: usize| r.alpha(x);
    let b = |x: usize| m.beta(x);
    let p = |x: usize, y: usize| m.add(x, y);
    let mut checks = CheckList::default();
    let g = check_hom_group(&m.additive);
    let additive = match g.first_violation() {
        Some((_, w)) => Verdict::Fail { witness: w.to_vec() },
        None if !g.abelian => Verdict::Fail { witness: Vec::new() },
        None => Verdict::Pass,
    };
    checks.push("additive abelian Hom-group", additive);
    let mut derived = CheckList::default();
    let zero = m.zero_element();

    if side.has_left() {
        let l = |x: usize, v: usize| m.act_left(x, v);
        checks.push(
            M1,
            scan3_mixed(n, k, k, |x, u, v| l(a(x), p(u, v)) == p(l(x, u), l(x, v))),
        );
        checks.push(
            M2,
            scan3_mixed(n, n, k, |x, y, u| l(r.add(x, y), b(u)) == p(l(x, u), l(y, u))),
        );
        checks.push(
            M3,
            scan3_mixed(n, n, k, |x, y, u| l(r.mul(x, y), b(u)) == l(a(x), l(y, u))),
        );
        checks.push(M4, scan1(k, |u| l(one, u) == b(u)));
        if checks.passes(M3) && checks.passes(M4) {
            derived.push(M5, scan2(n, k, |x, u| b(l(x, u)) == l(a(x), b(u))));
        }
        derived.push("0_A m = 0_M", scan1(k, |u| l(r.zero(), u) == zero));
    }
    if side.has_right() {
        let q = |v: usize, x: usize| m.act_right(v, x);
        checks.push(
            M1R,
            scan3_mixed(k, k, n, |u, v, x| q(p(u, v), a(x)) == p(q(u, x), q(v, x))),
        );
        checks.push(
            M2R,
            scan3_mixed(k, n, n, |u, x, y| q(b(u), r.add(x, y)) == p(q(u, x), q(u, y))),
        );
        checks.push(
            M3R,
            scan3_mixed(k, n, n, |u, x, y| q(b(u), r.mul(x, y)) == q(q(u, x), a(y))),
        );
        checks.push(M4R, scan1(k, |u| q(u, one) == b(u)));
        if checks.passes(M3R) && checks.passes(M4R) {
            derived.push(M5R, scan2(k, n, |u, x| b(q(u, x)) == q(b(u), a(x))));
        }
        derived.push("m 0_A = 0_M", scan1(k, |u| q(u, r.zero()) == zero));
    }
    if side == Side::Bi {
        checks.push(
            BIMODULE,
            scan3_mixed(n, k, n, |x, u, y| {
                m.act_right(m.act_left(x, u), a(y)) == m.act_left(a(x), m.act_right(u, y))
            }),
        );
    }
    Ok(ModuleReport { side, checks, derived })
}

/// Lexicographically first failing triple over `[0,n1) × [0,n2) × [0,n3)`.
pub(crate) fn scan3_mixed(n1: usize, n2: usize, n3: usize, mut ok: impl FnMut(usize, usize, usize) -> bool) -> Verdict {
    for x in 0..n1 {
        for y in 0..n2 {
            for z in 0..n3 {
                if !ok(x, y, z) {
                    return Verdict::Fail { witness: vec![x, y, z] };
                }
            }
        }
    }
    Verdict::Pass
}
