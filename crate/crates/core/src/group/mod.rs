//! Table-based finite Hom-groups.
//!
//! A Hom-group is a set with a product `μ`, a distinguished element `e`, a
//! twist map `α` and a chosen inverse map. The twist deforms associativity to
//! `α(g)(hk) = (gh)α(k)` and unitality to `ge = eg = α(g)`.

mod axioms;
mod hom;
mod identities;
mod qadditive;

pub use axioms::{
    check_hom_group, inverse_and_index, AxiomReport, ALPHA_MULTIPLICATIVE, COMMUTATIVITY, HOM_ASSOCIATIVITY,
    HOM_INVERTIBILITY, HOM_UNITARITY, INVERSE_ANTIMORPHISM, REGULARITY,
};
pub use hom::{enumerate_homomorphisms, hom_group_of_homomorphisms, HomEnumeration, HomMap, SearchStatus};
pub use identities::{check_structure_identities, StructureReport};
pub use qadditive::{q_add, q_additive_window, QAdditiveReport};

use crate::classical::FiniteGroup;
use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::table::{check_element, check_map, is_bijection, Table};

/// Index of an element in a finite structure of order `n`; always `< n`.
pub type ElementId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHomGroup {
    mul: Table,
    alpha: Vec<ElementId>,
    e: ElementId,
    inv: Vec<ElementId>,
    inv_index: Vec<Option<usize>>,
}

impl FiniteHomGroup {
    /// Assemble a structure from its tables. Only the shape and ranges are
    /// validated here; the axioms are checked by [`check_hom_group`].
    pub fn new(mul: Table, alpha: Vec<ElementId>, e: ElementId, inv: Vec<ElementId>) -> Result<Self> {
        let n = alpha.len();
        if n == 0 {
            return Err(Error::structural("a Hom-group needs at least one element"));
        }
        if mul.rows() != n || mul.cols() != n {
            return Err(Error::structural(format!(
                "mul is {}×{}, expected {n}×{n}",
                mul.rows(),
                mul.cols()
            )));
        }
        check_map("alpha", &alpha, n, n)?;
        check_map("inv", &inv, n, n)?;
        check_element("e", e, n)?;
        let mut g = FiniteHomGroup {
            mul,
            alpha,
            e,
            inv,
            inv_index: Vec::new(),
        };
        g.inv_index = (0..n).map(|x| g.compute_index(x, g.inv[x])).collect();
        Ok(g)
    }

    /// Build from nested rows. When `inv` is absent an inverse map is derived:
    /// the smallest antimorphism (in lexicographic order of tables) whose
    /// values satisfy hom-invertibility. If none exists the pointwise smallest
    /// candidate is used so that the checker can report the failure.
    pub fn from_rows(
        mul: &[Vec<usize>],
        alpha: Vec<ElementId>,
        e: ElementId,
        inv: Option<Vec<ElementId>>,
    ) -> Result<Self> {
        let n = alpha.len();
        let mul = Table::from_rows("mul", mul, n, n, n)?;
        let inv = match inv {
            Some(inv) => inv,
            None => {
                check_map("alpha", &alpha, n, n)?;
                check_element("e", e, n)?;
                derive_inverse(&mul, &alpha, e)
            }
        };
        Self::new(mul, alpha, e, inv)
    }

    /// The twist `G_α` of an ordinary group by an endomorphism:
    /// `μ(g,h) = α(gh)`, inverses from the group.
    pub fn twist(group: &FiniteGroup, endo: &[usize]) -> Result<Self> {
        if let Verdict::Fail { witness } = group.endomorphism_verdict(endo)? {
            return Err(Error::rejected("twist map is not a group endomorphism", witness));
        }
        let n = group.order();
        let mul = Table::from_fn(n, n, |a, b| endo[group.mul(a, b)]);
        let inv = (0..n).map(|x| group.inv(x)).collect();
        Self::new(mul, endo.to_vec(), group.identity(), inv)
    }

    /// An ordinary group viewed as a Hom-group with `α = id`.
    pub fn from_group(group: &FiniteGroup) -> Self {
        let id: Vec<usize> = (0..group.order()).collect();
        Self::twist(group, &id).expect("identity is an endomorphism")
    }

    /// `(ℤ/n, k(x+y), x ↦ kx, −x)`.
    pub fn cyclic_twist(n: usize, k: usize) -> Result<Self> {
        let endo: Vec<usize> = (0..n).map(|x| (k * x) % n).collect();
        Self::twist(&FiniteGroup::cyclic(n), &endo)
    }

    pub fn trivial() -> Self {
        Self::from_group(&FiniteGroup::cyclic(1))
    }

    /// Componentwise product; `(g, h)` is encoded as `g·|H| + h`.
    pub fn direct_product(&self, other: &FiniteHomGroup) -> FiniteHomGroup {
        let m = other.order();
        let n = self.order() * m;
        let pair = |g: usize, h: usize| g * m + h;
        let mul = Table::from_fn(n, n, |x, y| pair(self.mul(x / m, y / m), other.mul(x % m, y % m)));
        let alpha = (0..n).map(|x| pair(self.alpha(x / m), other.alpha(x % m))).collect();
        let inv = (0..n).map(|x| pair(self.inv(x / m), other.inv(x % m))).collect();
        Self::new(mul, alpha, pair(self.e, other.e), inv).expect("componentwise tables are total")
    }

    fn compute_index(&self, g: usize, h: usize) -> Option<usize> {
        let n = self.order();
        let (mut x, mut y) = (self.mul(g, h), self.mul(h, g));
        for k in 0..=n {
            if x == self.e && y == self.e {
                return Some(k);
            }
            x = self.alpha[x];
            y = self.alpha[y];
        }
        None
    }

    pub fn order(&self) -> usize {
        self.alpha.len()
    }

    #[inline]
    pub fn mul(&self, g: ElementId, h: ElementId) -> ElementId {
        self.mul.get(g, h)
    }

    #[inline]
    pub fn alpha(&self, g: ElementId) -> ElementId {
        self.alpha[g]
    }

    pub fn alpha_pow(&self, g: ElementId, k: usize) -> ElementId {
        crate::table::iterate(&self.alpha, g, k)
    }

    pub fn identity(&self) -> ElementId {
        self.e
    }

    #[inline]
    pub fn inv(&self, g: ElementId) -> ElementId {
        self.inv[g]
    }

    /// Invertibility index of `g`, or `None` if no `k ≤ n` works.
    pub fn inv_index(&self, g: ElementId) -> Option<usize> {
        self.inv_index[g]
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn alpha_map(&self) -> &[ElementId] {
        &self.alpha
    }

    pub fn inv_map(&self) -> &[ElementId] {
        &self.inv
    }

    pub fn is_regular(&self) -> bool {
        is_bijection(&self.alpha)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (0..n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Values `{α^i(g) : i ≥ start}`, in order of first appearance.
    pub fn tail_orbit(&self, g: ElementId, start: usize) -> Vec<ElementId> {
        let mut x = self.alpha_pow(g, start);
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        while !seen[x] {
            seen[x] = true;
            out.push(x);
            x = self.alpha[x];
        }
        out
    }

    /// Replace one entry of the multiplication table (used for mutation tests).
    pub fn with_mul_entry(&self, g: ElementId, h: ElementId, v: ElementId) -> Result<Self> {
        check_element("value", v, self.order())?;
        let mut mul = self.mul.clone();
        mul.set(g, h, v);
        Self::new(mul, self.alpha.clone(), self.e, self.inv.clone())
    }
}

/// Inverse map search used when a JSON file omits `inv`.
fn derive_inverse(mul: &Table, alpha: &[usize], e: usize) -> Vec<usize> {
    let n = alpha.len();
    let annihilates = |g: usize, h: usize| {
        let (mut x, mut y) = (mul.get(g, h), mul.get(h, g));
        for _ in 0..=n {
            if x == e && y == e {
                return true;
            }
            x = alpha[x];
            y = alpha[y];
        }
        false
    };
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|g| (0..n).filter(|&h| annihilates(g, h)).collect())
        .collect();
    let fallback = || candidates.iter().map(|c| c.first().copied().unwrap_or(0)).collect();
    if candidates.iter().any(Vec::is_empty) {
        return fallback();
    }
    let mut inv: Vec<Option<usize>> = vec![None; n];
    let mut budget = 1_000_000u64;
    if search_inverse(mul, &candidates, &mut inv, 0, &mut budget) {
        inv.into_iter().map(|x| x.unwrap()).collect()
    } else {
        fallback()
    }
}

fn search_inverse(
    mul: &Table,
    candidates: &[Vec<usize>],
    inv: &mut Vec<Option<usize>>,
    g: usize,
    budget: &mut u64,
) -> bool {
    let n = candidates.len();
    if g == n {
        return true;
    }
    for &c in &candidates[g] {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        inv[g] = Some(c);
        let consistent = (0..=g).all(|a| {
            (0..=g).all(|b| {
                let ab = mul.get(a, b);
                match (inv[ab], inv[a], inv[b]) {
                    (Some(x), Some(ia), Some(ib)) => x == mul.get(ib, ia),
                    _ => true,
                }
            })
        });
        if consistent && search_inverse(mul, candidates, inv, g + 1, budget) {
            return true;
        }
    }
    inv[g] = None;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_of_z6_by_5x() {
        let g = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        assert_eq!(g.mul(1, 2), 3);
        assert!(g.is_regular());
        assert!(g.is_abelian());
    }

    #[test]
    fn non_endomorphism_twist_rejected_with_pair() {
        let endo = vec![1, 0, 2, 3, 4, 5];
        let err = FiniteHomGroup::twist(&FiniteGroup::cyclic(6), &endo).unwrap_err();
        match err {
            Error::Rejected { witness, .. } => assert_eq!(witness.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn product_identity_is_pair_of_identities() {
        let a = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let b = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        let p = a.direct_product(&b);
        assert_eq!(p.order(), 24);
        assert_eq!(p.identity(), a.identity() * 4 + b.identity());
        assert!(!p.is_regular());
    }

    #[test]
    fn derived_inverse_is_an_antimorphism() {
        let g = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        let derived = FiniteHomGroup::from_rows(&g.mul_table().to_rows(), g.alpha_map().to_vec(), 0, None).unwrap();
        assert!(check_hom_group(&derived).is_hom_group());
    }

    #[test]
    fn tail_orbit_covers_eventual_values() {
        let g = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        assert_eq!(g.tail_orbit(1, 0), vec![1, 2, 0]);
        assert_eq!(g.tail_orbit(1, 2), vec![0]);
    }
}
