use serde::Serialize;

use super::{check_module, compatible_module, FiniteHomModule, OrdinaryModule, Side};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::report::{scan1, scan2, CheckList, Verdict};
use crate::ring::FiniteHomRing;
use crate::structure::SubSet;
use crate::table::{check_map, iterate};

/// Least subset containing `0` and `seeds` closed under addition, negation,
/// `β` and the actions of `side`.
pub fn generated_submodule(m: &FiniteHomModule, seeds: &[usize], side: Side) -> SubSet {
    let k = m.order();
    let n = m.ring().order();
    let mut set = SubSet::empty(k);
    let mut members = Vec::new();
    let mut queue: Vec<usize> = std::iter::once(m.zero_element()).chain(seeds.iter().copied()).collect();
    while let Some(x) = queue.pop() {
        if x >= k || !set.insert(x) {
            continue;
        }
        members.push(x);
        queue.push(m.neg(x));
        queue.push(m.beta(x));
        for a in 0..n {
            if side.has_left() {
                queue.push(m.act_left(a, x));
            }
            if side.has_right() {
                queue.push(m.act_right(x, a));
            }
        }
        for &y in &members {
            queue.push(m.add(x, y));
            queue.push(m.add(y, x));
        }
    }
    set
}

pub fn is_submodule(m: &FiniteHomModule, s: &SubSet, side: Side) -> Verdict {
    if !s.contains(m.zero_element()) {
        return Verdict::Fail {
            witness: vec![m.zero_element()],
        };
    }
    let e = s.elements();
    let n = m.ring().order();
    let k = e.len();
    for &x in &e {
        let mut images = vec![m.neg(x), m.beta(x)];
        for a in 0..n {
            if side.has_left() {
                images.push(m.act_left(a, x));
            }
            if side.has_right() {
                images.push(m.act_right(x, a));
            }
        }
        if images.iter().any(|&y| !s.contains(y)) {
            return Verdict::Fail { witness: vec![x] };
        }
    }
    match scan2(k, k, |i, j| s.contains(m.add(e[i], e[j]))) {
        Verdict::Fail { witness } => Verdict::Fail {
            witness: witness.iter().map(|&i| e[i]).collect(),
        },
        v => v,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubmoduleAnalysis {
    pub side: Side,
    /// Sorted by size, then by members.
    pub submodules: Vec<SubSet>,
    pub ker_beta: SubSet,
    pub ker_beta_submodule: Verdict,
    pub is_simple: bool,
    /// Checked whenever the module is simple.
    pub simple_implies_regular: Verdict,
    /// False when the lattice hit the budget.
    pub authoritative: bool,
}

/// All submodules, as joins of cyclic ones, with the kernel of `β`.
pub fn submodule_analysis(m: &FiniteHomModule, side: Side, budget: &Budget) -> Result<SubmoduleAnalysis> {
    if !check_module(m, side)?.passes() {
        return Err(Error::precondition("the module axioms fail"));
    }
    let k = m.order();
    let mut subs: Vec<SubSet> = Vec::new();
    for x in 0..k {
        let s = generated_submodule(m, &[x], side);
        if !subs.contains(&s) {
            subs.push(s);
        }
    }
    let mut authoritative = true;
    let mut frontier = subs.clone();
    'grow: while !frontier.is_empty() {
        let mut next = Vec::new();
        let snapshot = subs.clone();
        for a in &frontier {
            for b in &snapshot {
                let seeds: Vec<usize> = a.union(b).elements();
                let j = generated_submodule(m, &seeds, side);
                if !subs.contains(&j) {
                    if subs.len() >= budget.lattice_size {
                        authoritative = false;
                        break 'grow;
                    }
                    subs.push(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements().cmp(&b.elements())));

    let zero = m.zero_element();
    let ker_beta = SubSet::from_predicate(k, |x| m.beta(x) == zero);
    let ker_beta_submodule = is_submodule(m, &ker_beta, side);
    let is_simple = authoritative && k > 1 && subs.len() == 2;
    let simple_implies_regular = if is_simple {
        Verdict::from_witness((!m.is_regular()).then(|| ker_beta.elements()))
    } else {
        Verdict::not_applicable("not simple")
    };
    Ok(SubmoduleAnalysis {
        side,
        submodules: subs,
        ker_beta,
        ker_beta_submodule,
        is_simple,
        simple_implies_regular,
        authoritative,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub analysis: SubmoduleAnalysis,
    pub simple: bool,
    /// `None` when the lattice is not authoritative.
    pub semisimple: Option<bool>,
    /// Simple submodules found by greedy peeling.
    pub summands: Vec<SubSet>,
    /// A simple ring must have a bijective twist.
    pub simple_implies_regular: Verdict,
}

/// The ring as a left module over itself.
pub fn hom_ring_simplicity(a: &FiniteHomRing, budget: &Budget) -> Result<SimplicityReport> {
    if a.one().is_none() {
        return Err(Error::precondition("the Hom-ring must be unitary"));
    }
    let m = FiniteHomModule::regular(a)?.restrict(Side::Left)?;
    let analysis = submodule_analysis(&m, Side::Left, budget)?;
    let simple = analysis.is_simple;
    let (semisimple, summands) = if analysis.authoritative {
        let (ok, s) = peel(&m, &analysis.submodules);
        (Some(ok), s)
    } else {
        (None, Vec::new())
    };
    let simple_implies_regular = if simple {
        Verdict::from_witness((!a.is_regular()).then(Vec::new))
    } else {
        Verdict::not_applicable("not simple")
    };
    Ok(SimplicityReport {
        analysis,
        simple,
        semisimple,
        summands,
        simple_implies_regular,
    })
}

/// Greedy direct-sum decomposition into simple submodules.
fn peel(m: &FiniteHomModule, subs: &[SubSet]) -> (bool, Vec<SubSet>) {
    let simple: Vec<&SubSet> = subs
        .iter()
        .filter(|s| s.len() > 1 && !subs.iter().any(|t| t.len() > 1 && t.len() < s.len() && t.is_subset(s)))
        .collect();
    let mut cur = generated_submodule(m, &[], Side::Left);
    let mut out = Vec::new();
    while !cur.is_full() {
        let next = simple.iter().find_map(|s| {
            if s.intersection(&cur).len() != 1 {
                return None;
            }
            let j = generated_submodule(m, &cur.union(s).elements(), Side::Left);
            (j.len() == cur.len() * s.len()).then_some((s, j))
        });
        match next {
            Some((s, j)) => {
                out.push((*s).clone());
                cur = j;
            }
            None => return (false, out),
        }
    }
    (true, out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// The chosen generator and its `β`-orbit length.
    pub m: usize,
    pub k: usize,
    /// `A ⊳ β^i(m)` for `i < k`.
    pub summands: Vec<SubSet>,
    pub checks: CheckList,
    /// `[i, x]`: a nonzero `x` in summand `i` and in the sum of the earlier ones.
    pub overlap: Option<Vec<usize>>,
}

/// Splits the compatible module of a simple regular module along the
/// `β`-orbit of `m`. Without a chosen `m` the one with the longest orbit is
/// used. A sum that is not direct is reported, not raised.
pub fn semisimple_decomposition(
    m: &FiniteHomModule,
    generator: Option<usize>,
    budget: &Budget,
) -> Result<Decomposition> {
    if !m.is_regular() || !m.ring().is_regular() {
        return Err(Error::precondition("module and ring must be regular"));
    }
    let m = m.restrict(Side::Left)?;
    if !submodule_analysis(&m, Side::Left, budget)?.is_simple {
        return Err(Error::precondition("the module must be simple"));
    }
    let c = compatible_module(&m)?.module;
    let k_of = |x: usize| {
        (1..=m.order())
            .find(|&i| iterate(m.beta_map(), x, i) == x)
            .unwrap_or(m.order())
    };
    let zero = m.zero_element();
    let g = match generator {
        Some(g) if g < m.order() && g != zero => g,
        Some(g) => return Err(Error::precondition(format!("{g} is not a nonzero element"))),
        None => (0..m.order())
            .filter(|&x| x != zero)
            .max_by(|&x, &y| k_of(x).cmp(&k_of(y)).then(y.cmp(&x)))
            .expect("a simple module is nonzero"),
    };
    let k = k_of(g);
    let n = c.ring.order();
    let summands: Vec<SubSet> = (0..k)
        .map(|i| {
            let x = iterate(m.beta_map(), g, i);
            SubSet::from_elements(c.order(), (0..n).map(|a| c.act.get(a, x))).expect("action values are in range")
        })
        .collect();

    let mut checks = CheckList::default();
    checks.push(
        "summand count equals orbit length",
        Verdict::from_witness((summands.len() != k).then(|| vec![summands.len(), k])),
    );
    for (i, s) in summands.iter().enumerate() {
        checks.push(format!("summand {i} is a submodule"), ordinary_submodule(&c, s));
        let simple = s
            .iter()
            .filter(|&y| y != c.zero)
            .find(|&y| ordinary_closure(&c, y) != *s);
        checks.push(
            format!("summand {i} is simple"),
            Verdict::from_witness(simple.map(|y| vec![y])),
        );
    }
    let mut sum = SubSet::from_elements(c.order(), [c.zero]).expect("zero is in range");
    let mut overlap = None;
    for (i, s) in summands.iter().enumerate() {
        if overlap.is_none() {
            if let Some(x) = s.intersection(&sum).iter().find(|&x| x != c.zero) {
                overlap = Some(vec![i, x]);
            }
        }
        sum = SubSet::from_elements(
            c.order(),
            sum.iter()
                .flat_map(|x| s.iter().map(move |y| (x, y)))
                .map(|(x, y)| c.add.get(x, y)),
        )
        .expect("sums are in range");
    }
    checks.push("sum is direct", Verdict::from_witness(overlap.clone()));
    checks.push(
        "sum is the whole module",
        Verdict::from_witness((!sum.is_full()).then(|| vec![sum.len()])),
    );
    Ok(Decomposition {
        m: g,
        k,
        summands,
        checks,
        overlap,
    })
}

fn ordinary_submodule(c: &OrdinaryModule, s: &SubSet) -> Verdict {
    let n = c.ring.order();
    for x in s.iter() {
        if let Some(a) = (0..n).find(|&a| !s.contains(c.act.get(a, x))) {
            return Verdict::Fail { witness: vec![a, x] };
        }
        if let Some(y) = s.iter().find(|&y| !s.contains(c.add.get(x, y))) {
            return Verdict::Fail { witness: vec![x, y] };
        }
    }
    Verdict::Pass
}

fn ordinary_closure(c: &OrdinaryModule, seed: usize) -> SubSet {
    let k = c.order();
    let mut set = SubSet::empty(k);
    let mut members = Vec::new();
    let mut queue = vec![c.zero, seed];
    while let Some(x) = queue.pop() {
        if !set.insert(x) {
            continue;
        }
        members.push(x);
        queue.push(c.neg[x]);
        queue.extend((0..c.ring.order()).map(|a| c.act.get(a, x)));
        for &y in &members {
            queue.push(c.add.get(x, y));
        }
    }
    set
}

/// How the action condition of a module homomorphism is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HomReading {
    /// `f(am) = α(a) f(m)`.
    Twisted,
    /// `f(am) = a f(m)`.
    Plain,
}

/// Additive, `β`-equivariant and compatible with the left actions under
/// `reading`; kernel and image are then tested as submodules.
pub fn check_module_hom(
    src: &FiniteHomModule,
    tgt: &FiniteHomModule,
    f: &[usize],
    reading: HomReading,
) -> Result<CheckList> {
    if src.ring() != tgt.ring() {
        return Err(Error::precondition("modules over different rings"));
    }
    let (k, l) = (src.order(), tgt.order());
    check_map("f", f, k, l)?;
    let src = src.restrict(Side::Left)?;
    let tgt = tgt.restrict(Side::Left)?;
    let r = src.ring();
    let mut c = CheckList::default();
    c.push("additive", scan2(k, k, |x, y| f[src.add(x, y)] == tgt.add(f[x], f[y])));
    c.push("beta-equivariant", scan1(k, |x| f[src.beta(x)] == tgt.beta(f[x])));
    c.push(
        "action",
        scan2(r.order(), k, |a, x| {
            let s = match reading {
                HomReading::Twisted => r.alpha(a),
                HomReading::Plain => a,
            };
            f[src.act_left(a, x)] == tgt.act_left(s, f[x])
        }),
    );
    let kernel = SubSet::from_predicate(k, |x| f[x] == tgt.zero_element());
    let image = SubSet::from_elements(l, f.iter().copied())?;
    c.push("kernel is a submodule", is_submodule(&src, &kernel, Side::Left));
    c.push("image is a submodule", is_submodule(&tgt, &image, Side::Left));
    Ok(c)
}
