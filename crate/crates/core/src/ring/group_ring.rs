use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classical::FiniteGroup;

/// `Σ a_g e_g` in `𝔽_p G`, stored sparsely so that it can be used beyond the
/// size where the whole ring is materialized.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupRingElem {
    pub p: usize,
    /// Nonzero coefficients only.
    pub coeffs: BTreeMap<usize, usize>,
}

impl GroupRingElem {
    pub fn zero(p: usize) -> Self {
        GroupRingElem {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(p: usize, g: usize) -> Self {
        Self::from_terms(p, [(g, 1)])
    }

    pub fn from_terms(p: usize, terms: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut e = Self::zero(p);
        for (g, a) in terms {
            e.accumulate(g, a);
        }
        e
    }

    fn accumulate(&mut self, g: usize, a: usize) {
        let c = (self.coeffs.get(&g).copied().unwrap_or(0) + a) % self.p;
        if c == 0 {
            self.coeffs.remove(&g);
        } else {
            self.coeffs.insert(g, c);
        }
    }

    /// Decode from the base-`p` index used by materialized group rings.
    pub fn from_index(p: usize, order: usize, mut x: usize) -> Self {
        let mut e = Self::zero(p);
        for g in 0..order {
            e.accumulate(g, x % p);
            x /= p;
        }
        e
    }

    pub fn to_index(&self) -> usize {
        self.coeffs.iter().map(|(&g, &a)| a * self.p.pow(g as u32)).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (&g, &a) in &other.coeffs {
            e.accumulate(g, a);
        }
        e
    }

    pub fn mul(&self, group: &FiniteGroup, other: &Self) -> Self {
        let mut e = Self::zero(self.p);
        for (&g, &a) in &self.coeffs {
            for (&h, &b) in &other.coeffs {
                e.accumulate(group.mul(g, h), a * b % self.p);
            }
        }
        e
    }

    /// `Σ a_g e_{σ(g)}`.
    pub fn alpha(&self, auto: &[usize]) -> Self {
        Self::from_terms(self.p, self.coeffs.iter().map(|(&g, &a)| (auto[g], a)))
    }

    pub fn hat_add(&self, auto: &[usize], other: &Self) -> Self {
        self.add(other).alpha(auto)
    }

    pub fn hat_mul(&self, group: &FiniteGroup, auto: &[usize], other: &Self) -> Self {
        self.mul(group, other).alpha(auto)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::ring::{twisted_group_ring, RingType};

    #[test]
    fn agrees_with_materialized_ring() {
        let c3 = FiniteGroup::cyclic(3);
        let sq = c3.power_map(2);
        let r = twisted_group_ring(&c3, &sq, 2, RingType::One, &Budget::default()).unwrap();
        for x in 0..8 {
            let ex = GroupRingElem::from_index(2, 3, x);
            assert_eq!(ex.to_index(), x);
            for y in 0..8 {
                let ey = GroupRingElem::from_index(2, 3, y);
                assert_eq!(ex.hat_add(&sq, &ey).to_index(), r.add(x, y));
                assert_eq!(ex.hat_mul(&c3, &sq, &ey).to_index(), r.mul(x, y));
            }
        }
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let e = GroupRingElem::from_terms(3, [(0, 1), (0, 2), (1, 4)]);
        assert_eq!(e.coeffs.into_iter().collect::<Vec<_>>(), vec![(1, 1)]);
    }
}
