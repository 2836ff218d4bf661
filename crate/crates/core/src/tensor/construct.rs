use serde::Serialize;

use super::bilinear::{enumerate_bilinear, is_hom_bilinear, EQUIVARIANT, LEFT_ADDITIVE, RIGHT_ADDITIVE};
use super::snf::RelationLattice;
use crate::budget::Budget;
use crate::classical::FiniteGroup;
use crate::error::{Error, Result};
use crate::group::{enumerate_homomorphisms, FiniteHomGroup, SearchStatus};
use crate::structure::abelianization;
use crate::table::{is_bijection, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// `A^ab × B^ab` with `τ(a, b) = (π(a), π(b))`.
    Paper,
    /// The abelian group presented by the bilinearity relations.
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCandidate {
    pub tag: Provenance,
    pub carrier: FiniteHomGroup,
    /// `τ(a, b)` as an `|A| × |B|` table of carrier elements.
    pub tau: Table,
    /// Cyclic factors of the carrier, when known.
    pub invariant_factors: Option<Vec<usize>>,
}

fn require_regular(a: &FiniteHomGroup, b: &FiniteHomGroup) -> Result<()> {
    if a.is_regular() && b.is_regular() {
        Ok(())
    } else {
        Err(Error::precondition("tensor products need regular Hom-groups"))
    }
}

/// `A^ab × B^ab` with the pair of projections; bilinearity is not assumed.
pub fn tensor_paper(a: &FiniteHomGroup, b: &FiniteHomGroup) -> Result<TensorCandidate> {
    require_regular(a, b)?;
    let pa = abelianization(a, None)?;
    let pb = abelianization(b, None)?;
    let carrier = pa.quotient.group.direct_product(&pb.quotient.group);
    let nb = pb.quotient.order();
    let tau = Table::from_fn(a.order(), b.order(), |x, y| {
        pa.projection.apply(x) * nb + pb.projection.apply(y)
    });
    Ok(TensorCandidate {
        tag: Provenance::Paper,
        carrier,
        tau,
        invariant_factors: None,
    })
}

/// The universal Hom-bilinear target, presented by generators `a⊗b`.
///
/// With the carrier written as the twist of an abelian group by `α_T`, the
/// three identities become the integer relations
/// `μ(a₁,a₂)⊗b = α(a₁)⊗b + α(a₂)⊗b`, `a⊗μ(b₁,b₂) = a⊗α(b₁) + a⊗α(b₂)` and
/// `α_T(a⊗b) = α(a)⊗α(b)`.
pub fn tensor_oracle(a: &FiniteHomGroup, b: &FiniteHomGroup, budget: &Budget) -> Result<TensorCandidate> {
    let cand = oracle_with_relations(a, b, &[], budget)?;
    if !is_hom_bilinear(a, b, &cand.carrier, &cand.tau)?.is_bilinear() {
        return Err(Error::invariant("oracle map is not Hom-bilinear"));
    }
    Ok(cand)
}

/// The quotient of the free abelian group on `A × B` by the Hom-bilinearity
/// relations and `extra`, each given as signed generator indices `x·|B| + y`.
pub(crate) fn oracle_with_relations(
    a: &FiniteHomGroup,
    b: &FiniteHomGroup,
    extra: &[Vec<(usize, i64)>],
    budget: &Budget,
) -> Result<TensorCandidate> {
    require_regular(a, b)?;
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > budget.tensor_generators {
        return Err(Error::Budget {
            what: "building the tensor relation matrix".into(),
            limit: budget.tensor_generators as u64,
        });
    }
    let gen = |x: usize, y: usize| x * nb + y;
    let mut lattice = RelationLattice::new(n);
    let mut row = vec![0i64; n];
    let mut push = |lattice: &mut RelationLattice, terms: &[(usize, i64)]| -> Result<()> {
        row.iter_mut().for_each(|x| *x = 0);
        for &(k, c) in terms {
            row[k] += c;
        }
        lattice.insert(&row)
    };
    for r in extra {
        push(&mut lattice, r)?;
    }
    for a1 in 0..na {
        for a2 in 0..na {
            for y in 0..nb {
                push(
                    &mut lattice,
                    &[
                        (gen(a.mul(a1, a2), y), 1),
                        (gen(a.alpha(a1), y), -1),
                        (gen(a.alpha(a2), y), -1),
                    ],
                )?;
            }
        }
    }
    for x in 0..na {
        for b1 in 0..nb {
            for b2 in 0..nb {
                push(
                    &mut lattice,
                    &[
                        (gen(x, b.mul(b1, b2)), 1),
                        (gen(x, b.alpha(b1)), -1),
                        (gen(x, b.alpha(b2)), -1),
                    ],
                )?;
            }
        }
    }
    let smith = lattice.smith()?;
    let nontrivial = smith.nontrivial();
    let factors: Vec<usize> = nontrivial.iter().map(|&i| smith.diagonal[i] as usize).collect();
    if factors.contains(&0) {
        return Err(Error::invariant("tensor relations leave a free summand"));
    }
    let order: u64 = factors.iter().map(|&d| d as u64).product();
    if order > budget.group_ring {
        return Err(Error::Budget {
            what: "materializing the tensor carrier".into(),
            limit: budget.group_ring,
        });
    }
    let order = order as usize;
    let encode = |coords: &[i128]| {
        coords
            .iter()
            .zip(&factors)
            .fold(0usize, |acc, (&c, &d)| acc * d + c as usize)
    };
    let decode = |mut x: usize| {
        let mut c = vec![0usize; factors.len()];
        for i in (0..factors.len()).rev() {
            c[i] = x % factors[i];
            x /= factors[i];
        }
        c
    };

    // α_T on the basis of the nontrivial factors, pulled back through V⁻¹.
    let perm: Vec<usize> = (0..n).map(|k| gen(a.alpha(k / nb), b.alpha(k % nb))).collect();
    let basis_images: Vec<Vec<i128>> = nontrivial
        .iter()
        .map(|&j| {
            let mut x = vec![0i128; n];
            for (k, &v) in smith.v_inv[j].iter().enumerate() {
                x[perm[k]] += v;
            }
            smith.coordinates(&x)
        })
        .collect::<Result<_>>()?;
    let alpha: Vec<usize> = (0..order)
        .map(|t| {
            let c = decode(t);
            let mut img = vec![0i128; factors.len()];
            for (j, &cj) in c.iter().enumerate() {
                for (i, v) in img.iter_mut().enumerate() {
                    *v = (*v + cj as i128 * basis_images[j][i]).rem_euclid(factors[i] as i128);
                }
            }
            encode(&img)
        })
        .collect();
    let base = factors.iter().fold(FiniteGroup::cyclic(1), |g, &d| {
        if g.order() == 1 {
            FiniteGroup::cyclic(d)
        } else {
            g.product(&FiniteGroup::cyclic(d))
        }
    });
    let carrier = FiniteHomGroup::twist(&base, &alpha)?;
    let mut tau = Table::from_fn(na, nb, |_, _| 0);
    for k in 0..n {
        let mut e = vec![0i128; n];
        e[k] = 1;
        tau.set(k / nb, k % nb, encode(&smith.coordinates(&e)?));
    }
    Ok(TensorCandidate {
        tag: Provenance::Oracle,
        carrier,
        tau,
        invariant_factors: Some(factors),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UniversalStatus {
    Satisfied,
    Violated,
    Truncated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UniversalWitness {
    /// `τ` itself fails one of the identities.
    NonBilinearTau { identity: String, tuple: Vec<usize> },
    /// A bilinear `f` with zero or several factorizations through `τ`.
    Factorizations { f: Vec<Vec<usize>>, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalVerdict {
    pub candidate: Provenance,
    pub target: usize,
    pub status: UniversalStatus,
    pub witness: Option<UniversalWitness>,
    pub bilinear_maps: usize,
}

/// For every target `C`, every Hom-bilinear `f: A × B → C` must factor as
/// `f̃∘τ` through exactly one homomorphism `f̃`.
pub fn universal_property_check(
    a: &FiniteHomGroup,
    b: &FiniteHomGroup,
    cand: &TensorCandidate,
    targets: &[FiniteHomGroup],
    budget: &Budget,
) -> Result<Vec<UniversalVerdict>> {
    let tau_report = is_hom_bilinear(a, b, &cand.carrier, &cand.tau)?;
    let tau_witness = [LEFT_ADDITIVE, RIGHT_ADDITIVE, EQUIVARIANT]
        .iter()
        .zip(&tau_report.failures)
        .find_map(|(name, f)| {
            f.first().map(|t| UniversalWitness::NonBilinearTau {
                identity: name.to_string(),
                tuple: t.clone(),
            })
        });
    let mut out = Vec::new();
    for (i, c) in targets.iter().enumerate() {
        if !c.is_regular() {
            return Err(Error::precondition(format!("target {i} is not regular")));
        }
        let mut verdict = UniversalVerdict {
            candidate: cand.tag,
            target: i,
            status: UniversalStatus::Satisfied,
            witness: None,
            bilinear_maps: 0,
        };
        if let Some(w) = &tau_witness {
            verdict.status = UniversalStatus::Violated;
            verdict.witness = Some(w.clone());
            out.push(verdict);
            continue;
        }
        let maps = enumerate_bilinear(a, b, c, budget);
        let homs = enumerate_homomorphisms(&cand.carrier, c, budget);
        if maps.status == SearchStatus::Truncated || homs.status == SearchStatus::Truncated {
            verdict.status = UniversalStatus::Truncated;
            out.push(verdict);
            continue;
        }
        verdict.bilinear_maps = maps.maps.len();
        for f in &maps.maps {
            let count = homs
                .maps
                .iter()
                .filter(|h| (0..a.order()).all(|x| (0..b.order()).all(|y| h.apply(cand.tau.get(x, y)) == f.get(x, y))))
                .count();
            if count != 1 {
                verdict.status = UniversalStatus::Violated;
                verdict.witness = Some(UniversalWitness::Factorizations { f: f.to_rows(), count });
                break;
            }
        }
        out.push(verdict);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub ab_factors: Vec<usize>,
    pub ba_factors: Vec<usize>,
    /// The homomorphism `A⊗B → B⊗A` with `a⊗b ↦ b⊗a`, if one exists.
    pub swap: Option<Vec<usize>>,
    pub isomorphic: bool,
}

pub fn symmetry_check(a: &FiniteHomGroup, b: &FiniteHomGroup, budget: &Budget) -> Result<SymmetryReport> {
    let ab = tensor_oracle(a, b, budget)?;
    let ba = tensor_oracle(b, a, budget)?;
    let homs = enumerate_homomorphisms(&ab.carrier, &ba.carrier, budget);
    if homs.status == SearchStatus::Truncated {
        return Err(Error::Budget {
            what: "searching for the swap isomorphism".into(),
            limit: budget.search,
        });
    }
    let swap = homs
        .maps
        .into_iter()
        .find(|h| (0..a.order()).all(|x| (0..b.order()).all(|y| h.apply(ab.tau.get(x, y)) == ba.tau.get(y, x))))
        .map(|h| h.map);
    let isomorphic = swap.as_deref().is_some_and(is_bijection);
    Ok(SymmetryReport {
        ab_factors: ab.invariant_factors.unwrap_or_default(),
        ba_factors: ba.invariant_factors.unwrap_or_default(),
        swap,
        isomorphic,
    })
}
