use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::{FiniteHomGroup, SearchStatus};
use crate::report::{CheckList, Verdict};
use crate::structure::commutator;
use crate::table::Table;

pub const LEFT_ADDITIVE: &str = "f(a1 a2, alpha b) = f(a1,b) + f(a2,b)";
pub const RIGHT_ADDITIVE: &str = "f(alpha a, b1 b2) = f(a,b1) + f(a,b2)";
pub const EQUIVARIANT: &str = "f(alpha a, alpha b) = alpha f(a,b)";

/// How many failing tuples of each identity are kept.
const KEPT_FAILURES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BilinearReport {
    /// The three defining identities.
    pub identities: CheckList,
    /// Failing tuples of each defining identity, in lexicographic order and
    /// capped; parallel to `identities`.
    pub failures: Vec<Vec<Vec<usize>>>,
    /// Consequences checked when the identities hold.
    pub lemmas: CheckList,
}

impl BilinearReport {
    pub fn is_bilinear(&self) -> bool {
        self.identities.all_pass()
    }
}

fn check_regular(name: &str, g: &FiniteHomGroup) -> Result<()> {
    if g.is_regular() {
        Ok(())
    } else {
        Err(Error::precondition(format!("{name} must be regular")))
    }
}

/// Exhaustive check that `f: A × B → C` is Hom-bilinear, with `C` written
/// additively through its product.
pub fn is_hom_bilinear(
    a: &FiniteHomGroup,
    b: &FiniteHomGroup,
    c: &FiniteHomGroup,
    f: &Table,
) -> Result<BilinearReport> {
    check_regular("A", a)?;
    check_regular("B", b)?;
    check_regular("C", c)?;
    let (na, nb) = (a.order(), b.order());
    if f.rows() != na || f.cols() != nb {
        return Err(Error::structural("bilinear table has the wrong shape"));
    }
    if (0..na).any(|x| (0..nb).any(|y| f.get(x, y) >= c.order())) {
        return Err(Error::structural("bilinear table entry out of range"));
    }
    let mut failures = vec![Vec::new(), Vec::new(), Vec::new()];
    let mut keep = |i: usize, w: Vec<usize>| {
        if failures[i].len() < KEPT_FAILURES {
            failures[i].push(w);
        }
    };
    for a1 in 0..na {
        for a2 in 0..na {
            for y in 0..nb {
                if f.get(a.mul(a1, a2), b.alpha(y)) != c.mul(f.get(a1, y), f.get(a2, y)) {
                    keep(0, vec![a1, a2, y]);
                }
            }
        }
    }
    for x in 0..na {
        for b1 in 0..nb {
            for b2 in 0..nb {
                if f.get(a.alpha(x), b.mul(b1, b2)) != c.mul(f.get(x, b1), f.get(x, b2)) {
                    keep(1, vec![x, b1, b2]);
                }
            }
        }
    }
    for x in 0..na {
        for y in 0..nb {
            if f.get(a.alpha(x), b.alpha(y)) != c.alpha(f.get(x, y)) {
                keep(2, vec![x, y]);
            }
        }
    }
    let mut identities = CheckList::default();
    for (i, name) in [LEFT_ADDITIVE, RIGHT_ADDITIVE, EQUIVARIANT].into_iter().enumerate() {
        identities.push(name, Verdict::from_witness(failures[i].first().cloned()));
    }

    let mut lemmas = CheckList::default();
    if identities.all_pass() {
        let zero = c.identity();
        lemmas.push(
            "units are annihilated",
            crate::report::scan2(na, nb, |x, y| {
                f.get(a.identity(), y) == zero && f.get(x, b.identity()) == zero
            }),
        );
        lemmas.push(
            "f(a^-1, b) = -f(a, b)",
            crate::report::scan2(na, nb, |x, y| f.get(a.inv(x), y) == c.inv(f.get(x, y))),
        );
        let image: Vec<usize> = (0..na)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .map(|(x, y)| f.get(x, y))
            .collect();
        lemmas.push(
            "image elements commute",
            crate::report::scan2(image.len(), image.len(), |i, j| {
                c.mul(image[i], image[j]) == c.mul(image[j], image[i])
            }),
        );
        lemmas.push(
            "commutators are annihilated",
            crate::report::scan3(na.max(nb), |a1, a2, y| {
                a1 >= na || a2 >= na || y >= nb || f.get(commutator(a, a1, a2), y) == zero
            }),
        );
    }
    Ok(BilinearReport {
        identities,
        failures,
        lemmas,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearEnumeration {
    pub maps: Vec<Table>,
    pub status: SearchStatus,
}

/// Every Hom-bilinear `A × B → C`, by backtracking over table cells with
/// propagation of the three identities.
pub fn enumerate_bilinear(
    a: &FiniteHomGroup,
    b: &FiniteHomGroup,
    c: &FiniteHomGroup,
    budget: &Budget,
) -> BilinearEnumeration {
    let (na, nb) = (a.order(), b.order());
    let cell = |x: usize, y: usize| x * nb + y;
    // target cell = op(sources): either c.mul(s0, s1) or c.alpha(s0)
    let mut rules: Vec<(usize, Vec<usize>)> = Vec::new();
    for a1 in 0..na {
        for a2 in 0..na {
            for y in 0..nb {
                rules.push((cell(a.mul(a1, a2), b.alpha(y)), vec![cell(a1, y), cell(a2, y)]));
            }
        }
    }
    for x in 0..na {
        for b1 in 0..nb {
            for b2 in 0..nb {
                rules.push((cell(a.alpha(x), b.mul(b1, b2)), vec![cell(x, b1), cell(x, b2)]));
            }
        }
    }
    for x in 0..na {
        for y in 0..nb {
            rules.push((cell(a.alpha(x), b.alpha(y)), vec![cell(x, y)]));
        }
    }
    let mut watch: Vec<Vec<usize>> = vec![Vec::new(); na * nb];
    for (i, (t, src)) in rules.iter().enumerate() {
        watch[*t].push(i);
        for &s in src {
            watch[s].push(i);
        }
    }
    let mut s = BilinearSearch {
        c,
        rules: &rules,
        watch: &watch,
        value: vec![None; na * nb],
        trail: Vec::new(),
        found: Vec::new(),
        nodes: 0,
        limit: budget.search,
        truncated: false,
    };
    s.run();
    BilinearEnumeration {
        maps: s
            .found
            .into_iter()
            .map(|v| Table::from_fn(na, nb, |x, y| v[cell(x, y)]))
            .collect(),
        status: if s.truncated {
            SearchStatus::Truncated
        } else {
            SearchStatus::Complete
        },
    }
}

struct BilinearSearch<'a> {
    c: &'a FiniteHomGroup,
    rules: &'a [(usize, Vec<usize>)],
    watch: &'a [Vec<usize>],
    value: Vec<Option<usize>>,
    trail: Vec<usize>,
    found: Vec<Vec<usize>>,
    nodes: u64,
    limit: u64,
    truncated: bool,
}

impl BilinearSearch<'_> {
    fn run(&mut self) {
        let Some(x) = self.value.iter().position(Option::is_none) else {
            self.found.push(self.value.iter().map(|v| v.unwrap()).collect());
            return;
        };
        for v in 0..self.c.order() {
            if self.nodes >= self.limit {
                self.truncated = true;
                return;
            }
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(x, v) {
                self.run();
            }
            while self.trail.len() > mark {
                let cell = self.trail.pop().unwrap();
                self.value[cell] = None;
            }
            if self.truncated {
                return;
            }
        }
    }

    fn assign(&mut self, cell: usize, v: usize) -> bool {
        let mut queue = vec![(cell, v)];
        while let Some((cell, v)) = queue.pop() {
            match self.value[cell] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {
                    self.value[cell] = Some(v);
                    self.trail.push(cell);
                }
            }
            for &r in &self.watch[cell] {
                let (t, src) = &self.rules[r];
                let vals: Option<Vec<usize>> = src.iter().map(|&s| self.value[s]).collect();
                let Some(vals) = vals else { continue };
                let want = match vals.as_slice() {
                    [x] => self.c.alpha(*x),
                    [x, y] => self.c.mul(*x, *y),
                    _ => unreachable!("rules have one or two sources"),
                };
                match self.value[*t] {
                    Some(w) if w != want => return false,
                    Some(_) => {}
                    None => queue.push((*t, want)),
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn zero_map_is_bilinear() {
        let z2 = catalog::cyclic(2);
        let z3 = catalog::cyclic(3);
        let f = Table::from_fn(2, 3, |_, _| 0);
        let r = is_hom_bilinear(&z2, &z3, &z3, &f).unwrap();
        assert!(r.is_bilinear() && r.lemmas.all_pass());
    }

    #[test]
    fn field_product_on_z2() {
        let z2 = catalog::cyclic(2);
        let f = Table::from_fn(2, 2, |x, y| x * y);
        let r = is_hom_bilinear(&z2, &z2, &z2, &f).unwrap();
        assert!(r.is_bilinear() && r.lemmas.all_pass());
    }

    #[test]
    fn pairing_into_product_is_not_bilinear() {
        let z2 = catalog::cyclic(2);
        let z3 = catalog::cyclic(3);
        let c = z2.direct_product(&z3);
        let f = Table::from_fn(2, 3, |x, y| x * 3 + y);
        let r = is_hom_bilinear(&z2, &z3, &c, &f).unwrap();
        assert!(!r.is_bilinear());
        assert!(r.failures[0].contains(&vec![1, 1, 1]));
        assert!(r.lemmas.0.is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let z2 = catalog::cyclic(2);
        let z4 = catalog::cyclic(4);
        for (a, b, c) in [(&z2, &z2, &z2), (&z2, &z4, &z4), (&z4, &z2, &z2)] {
            let e = enumerate_bilinear(a, b, c, &Budget::default());
            assert_eq!(e.status, SearchStatus::Complete);
            let (na, nb, nc) = (a.order(), b.order(), c.order());
            let mut brute = 0;
            for code in 0..nc.pow((na * nb) as u32) {
                let f = Table::from_fn(na, nb, |x, y| code / nc.pow((x * nb + y) as u32) % nc);
                if is_hom_bilinear(a, b, c, &f).unwrap().is_bilinear() {
                    brute += 1;
                    assert!(e.maps.contains(&f));
                }
            }
            assert_eq!(e.maps.len(), brute);
        }
    }
}
