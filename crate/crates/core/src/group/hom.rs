use serde::Serialize;

use super::{check_hom_group, ElementId, FiniteHomGroup};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::table::{check_map, Table};

/// A map between two Hom-groups together with its recomputable flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HomMap {
    pub map: Vec<ElementId>,
    /// `f(μ(g,h)) = μ(f(g), f(h))`.
    pub multiplicative: bool,
    /// `f∘α_G = α_H∘f`.
    pub alpha_equivariant: bool,
    /// `f(e_G) = e_H`.
    pub unit_preserving: bool,
}

impl HomMap {
    pub fn new(source: &FiniteHomGroup, target: &FiniteHomGroup, map: Vec<ElementId>) -> Result<Self> {
        let n = source.order();
        check_map("map", &map, n, target.order())?;
        let multiplicative = (0..n).all(|g| (0..n).all(|h| map[source.mul(g, h)] == target.mul(map[g], map[h])));
        let alpha_equivariant = (0..n).all(|g| map[source.alpha(g)] == target.alpha(map[g]));
        let unit_preserving = map[source.identity()] == target.identity();
        Ok(HomMap {
            map,
            multiplicative,
            alpha_equivariant,
            unit_preserving,
        })
    }

    /// A Hom-group homomorphism: multiplicative and α-equivariant.
    pub fn is_homomorphism(&self) -> bool {
        self.multiplicative && self.alpha_equivariant
    }

    pub fn apply(&self, g: ElementId) -> ElementId {
        self.map[g]
    }

    /// Identity map of `g`.
    pub fn identity(g: &FiniteHomGroup) -> Self {
        Self::new(g, g, (0..g.order()).collect()).expect("identity map is total")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Complete,
    Truncated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomEnumeration {
    /// Homomorphisms in lexicographic order of their tables.
    pub maps: Vec<HomMap>,
    pub status: SearchStatus,
    pub nodes: u64,
}

/// All Hom-group homomorphisms `G → H`, by backtracking with propagation of
/// the constraints `f(gh) = f(g)f(h)` and `f(α g) = α f(g)`.
///
/// Every search node counts against `budget.search`; when the budget runs out
/// the maps found so far are returned with status `Truncated`.
pub fn enumerate_homomorphisms(g: &FiniteHomGroup, h: &FiniteHomGroup, budget: &Budget) -> HomEnumeration {
    let mut search = Search {
        g,
        h,
        assigned: vec![None; g.order()],
        order: Vec::new(),
        found: Vec::new(),
        nodes: 0,
        limit: budget.search,
        truncated: false,
    };
    search.run(0);
    let mut maps: Vec<HomMap> = search
        .found
        .into_iter()
        .map(|m| HomMap::new(g, h, m).expect("complete assignment"))
        .collect();
    maps.sort();
    HomEnumeration {
        maps,
        status: if search.truncated {
            SearchStatus::Truncated
        } else {
            SearchStatus::Complete
        },
        nodes: search.nodes,
    }
}

struct Search<'a> {
    g: &'a FiniteHomGroup,
    h: &'a FiniteHomGroup,
    assigned: Vec<Option<usize>>,
    /// Assignment trail for undo.
    order: Vec<usize>,
    found: Vec<Vec<usize>>,
    nodes: u64,
    limit: u64,
    truncated: bool,
}

impl Search<'_> {
    fn run(&mut self, start: usize) {
        let Some(x) = (start..self.g.order()).find(|&x| self.assigned[x].is_none()) else {
            self.found.push(self.assigned.iter().map(|v| v.unwrap()).collect());
            return;
        };
        for v in 0..self.h.order() {
            if self.nodes >= self.limit {
                self.truncated = true;
                return;
            }
            self.nodes += 1;
            let mark = self.order.len();
            if self.assign(x, v) {
                self.run(x + 1);
            }
            self.undo(mark);
            if self.truncated {
                return;
            }
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.order.len() > mark {
            let y = self.order.pop().unwrap();
            self.assigned[y] = None;
        }
    }

    /// Assign and propagate; false on conflict.
    fn assign(&mut self, x: usize, v: usize) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((x, v)) = queue.pop() {
            match self.assigned[x] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {}
            }
            self.assigned[x] = Some(v);
            self.order.push(x);
            queue.push((self.g.alpha(x), self.h.alpha(v)));
            for y in 0..self.g.order() {
                if let Some(w) = self.assigned[y] {
                    queue.push((self.g.mul(x, y), self.h.mul(v, w)));
                    queue.push((self.g.mul(y, x), self.h.mul(w, v)));
                }
            }
        }
        true
    }
}

/// `Hom(G, H)` with pointwise sum and `α(f) = α_H∘f`. Elements are indexed by
/// the lexicographic order of their tables; the maps are returned alongside.
pub fn hom_group_of_homomorphisms(
    g: &FiniteHomGroup,
    h: &FiniteHomGroup,
    budget: &Budget,
) -> Result<(FiniteHomGroup, Vec<HomMap>)> {
    for (name, x) in [("source", g), ("target", h)] {
        let r = check_hom_group(x);
        if !(r.is_hom_group() && r.regular && r.abelian) {
            return Err(Error::precondition(format!(
                "{name} must be an abelian regular Hom-group"
            )));
        }
    }
    let homs = enumerate_homomorphisms(g, h, budget);
    if homs.status == SearchStatus::Truncated {
        return Err(Error::Budget {
            what: "enumerating homomorphisms".into(),
            limit: budget.search,
        });
    }
    let maps = homs.maps;
    let k = maps.len();
    let index = |m: &[usize]| -> Result<usize> {
        maps.binary_search_by(|f| f.map.as_slice().cmp(m))
            .map_err(|_| Error::invariant("Hom(G,H) is not closed under its operations"))
    };
    let n = g.order();
    let mut mul = Table::from_fn(k, k, |_, _| 0);
    for a in 0..k {
        for b in 0..k {
            let s: Vec<usize> = (0..n).map(|x| h.mul(maps[a].map[x], maps[b].map[x])).collect();
            mul.set(a, b, index(&s)?);
        }
    }
    let alpha = maps
        .iter()
        .map(|f| index(&f.map.iter().map(|&y| h.alpha(y)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let inv = maps
        .iter()
        .map(|f| index(&f.map.iter().map(|&y| h.inv(y)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let zero = index(&vec![h.identity(); n])?;
    let hom = FiniteHomGroup::new(mul, alpha, zero, inv)?;
    Ok((hom, maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::FiniteGroup;

    fn brute_force_count(g: &FiniteHomGroup, h: &FiniteHomGroup) -> usize {
        let (n, m) = (g.order(), h.order());
        let total = m.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let f: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
                (0..n).all(|a| f[g.alpha(a)] == h.alpha(f[a]))
                    && (0..n).all(|a| (0..n).all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b])))
            })
            .count()
    }

    #[test]
    fn z2_to_z2_has_zero_and_identity() {
        let z2 = FiniteHomGroup::from_group(&FiniteGroup::cyclic(2));
        let e = enumerate_homomorphisms(&z2, &z2, &Budget::default());
        assert_eq!(e.status, SearchStatus::Complete);
        let maps: Vec<_> = e.maps.iter().map(|m| m.map.clone()).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn counts_match_brute_force() {
        let z6 = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let z2 = FiniteHomGroup::from_group(&FiniteGroup::cyclic(2));
        let z4 = FiniteHomGroup::cyclic_twist(4, 2).unwrap();
        let s3 = crate::catalog::twisted_s3();
        for (a, b) in [(&z6, &z2), (&z6, &z6), (&z4, &z4), (&s3, &z2), (&z2, &s3), (&s3, &s3)] {
            let e = enumerate_homomorphisms(a, b, &Budget::default());
            assert_eq!(e.maps.len(), brute_force_count(a, b));
            assert!(e.maps.iter().all(HomMap::is_homomorphism));
        }
    }

    #[test]
    fn constant_identity_map_is_a_homomorphism() {
        let z6 = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let s3 = crate::catalog::twisted_s3();
        let f = HomMap::new(&z6, &s3, vec![s3.identity(); 6]).unwrap();
        assert!(f.is_homomorphism() && f.unit_preserving);
    }

    #[test]
    fn tiny_budget_truncates() {
        let z6 = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let e = enumerate_homomorphisms(&z6, &z6, &Budget::default().with_search(3));
        assert_eq!(e.status, SearchStatus::Truncated);
    }

    #[test]
    fn hom_of_z2_is_z2_and_z6_hom_passes() {
        let z2 = FiniteHomGroup::from_group(&FiniteGroup::cyclic(2));
        let (hom, maps) = hom_group_of_homomorphisms(&z2, &z2, &Budget::default()).unwrap();
        assert_eq!(hom.order(), 2);
        assert_eq!(maps[hom.identity()].map, vec![0, 0]);
        assert!(check_hom_group(&hom).is_certified());

        let z6 = FiniteHomGroup::cyclic_twist(6, 5).unwrap();
        let (hom, _) = hom_group_of_homomorphisms(&z6, &z6, &Budget::default()).unwrap();
        assert!(check_hom_group(&hom).is_certified());
    }

    #[test]
    fn non_abelian_input_is_a_precondition_error() {
        let s3 = crate::catalog::twisted_s3();
        assert!(matches!(
            hom_group_of_homomorphisms(&s3, &s3, &Budget::default()),
            Err(Error::Precondition(_))
        ));
    }
}
