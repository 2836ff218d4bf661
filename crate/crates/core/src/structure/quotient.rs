use super::subgroup::{alpha_bijective_on, is_hom_subgroup, is_normal, left_coset};
use super::SubSet;
use crate::error::{Error, Result};
use crate::group::{check_hom_group, FiniteHomGroup, HomMap};
use crate::report::Verdict;
use crate::table::Table;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientHomGroup {
    /// Smallest element of each coset; cosets are numbered by representative.
    pub reps: Vec<usize>,
    /// Coset index of every element.
    pub coset_of: Vec<usize>,
    pub group: FiniteHomGroup,
    /// `gH = g'H ⟺ g⁻¹g' ∈ H`, checked when `α(H) = H`.
    pub coset_criterion: Verdict,
}

impl QuotientHomGroup {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// The projection `g ↦ gH`.
    pub fn projection(&self, g: &FiniteHomGroup) -> HomMap {
        HomMap::new(g, &self.group, self.coset_of.clone()).expect("coset table is total")
    }
}

/// `G/H` on left cosets, with `g₁H·g₂H = (g₁g₂)H` and `α̃(gH) = α(g)H`.
pub fn quotient(g: &FiniteHomGroup, h: &SubSet) -> Result<QuotientHomGroup> {
    if !g.is_regular() {
        return Err(Error::precondition("quotients require a regular Hom-group"));
    }
    let normality = is_normal(g, h)?;
    if !normality.normal {
        return Err(Error::precondition(format!(
            "subgroup is not normal (witness {:?})",
            normality.witness.unwrap_or_default()
        )));
    }
    let n = g.order();
    let mut cosets: Vec<SubSet> = Vec::new();
    let mut coset_of = vec![usize::MAX; n];
    for x in 0..n {
        let c = left_coset(g, x, h);
        for y in c.iter() {
            if coset_of[y] == usize::MAX {
                coset_of[y] = cosets.len();
            } else if cosets[coset_of[y]] != c {
                return Err(Error::rejected("left cosets do not partition G", vec![x, y]));
            }
        }
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    // number cosets by smallest member
    let mut reps: Vec<usize> = cosets.iter().map(|c| c.iter().next().unwrap()).collect();
    let mut order: Vec<usize> = (0..cosets.len()).collect();
    order.sort_by_key(|&i| reps[i]);
    let mut renumber = vec![0; cosets.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    reps.sort();
    let coset_of: Vec<usize> = coset_of.iter().map(|&c| renumber[c]).collect();
    let k = reps.len();

    let mul = Table::from_fn(k, k, |a, b| coset_of[g.mul(reps[a], reps[b])]);
    for x in 0..n {
        for y in 0..n {
            if coset_of[g.mul(x, y)] != mul.get(coset_of[x], coset_of[y]) {
                return Err(Error::rejected("coset product is not well defined", vec![x, y]));
            }
        }
        if coset_of[g.alpha(x)] != coset_of[g.alpha(reps[coset_of[x]])] {
            return Err(Error::rejected("induced twist is not well defined", vec![x]));
        }
        if coset_of[g.inv(x)] != coset_of[g.inv(reps[coset_of[x]])] {
            return Err(Error::rejected("induced inverse is not well defined", vec![x]));
        }
    }
    let alpha = reps.iter().map(|&r| coset_of[g.alpha(r)]).collect();
    let inv = reps.iter().map(|&r| coset_of[g.inv(r)]).collect();
    let group = FiniteHomGroup::new(mul, alpha, coset_of[g.identity()], inv)?;
    let report = check_hom_group(&group);
    if !report.is_certified() {
        return Err(Error::invariant(format!(
            "quotient fails the Hom-group axioms: {:?}",
            report.first_violation()
        )));
    }

    let coset_criterion = if is_hom_subgroup(g, h).is_ok() && alpha_bijective_on(g, h) {
        crate::report::scan2(n, n, |x, y| {
            (coset_of[x] == coset_of[y]) == h.contains(g.mul(g.inv(x), y))
        })
    } else {
        Verdict::not_applicable("alpha(H) differs from H")
    };

    Ok(QuotientHomGroup {
        reps,
        coset_of,
        group,
        coset_criterion,
    })
}
