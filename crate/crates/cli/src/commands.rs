use std::io::Write;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use homcat::free::{normal_form, parse_tree, Mode, Strategy};
use homcat::group::{check_hom_group, AxiomReport, COMMUTATIVITY, REGULARITY};
use homcat::io::{read_json, BilinearFile, GroupFile, ModuleFile, PolyFile, RingFile};
use homcat::module::{check_module, semisimple_decomposition, FiniteHomModule, Side};
use homcat::report::{CheckList, Verdict};
use homcat::ring::poly::check_poly_axioms;
use homcat::ring::{check_hom_ring, endomorphism_hom_ring, FiniteHomRing, RingType};
use homcat::structure::{abelianization, normal_lattice};
use homcat::tensor::{
    is_hom_bilinear, symmetry_check, tensor_oracle, tensor_paper, universal_property_check, UniversalStatus,
};
use homcat::{catalog, Budget, Error, FiniteHomGroup, Result};

use crate::{Kind, Outcome, ReportTarget, SideArg};

/// Seed for the sampled polynomial check.
const POLY_SEED: u64 = 0x5eed;
const POLY_SAMPLES: usize = 1000;
const POLY_DEGREE: u64 = 6;

fn parse_strategy(s: &str) -> Result<Strategy> {
    match s {
        "leftmost" => Ok(Strategy::Leftmost),
        "rightmost" => Ok(Strategy::Rightmost),
        _ => s
            .strip_prefix("random:")
            .and_then(|seed| seed.parse().ok())
            .map(Strategy::Random)
            .ok_or_else(|| {
                Error::Structural(format!(
                    "unknown strategy {s:?}; use leftmost, rightmost or random:SEED"
                ))
            }),
    }
}

pub fn reduce(w: &mut dyn Write, tree: &str, strict: bool, trace: bool, strategy: &str) -> Result<Outcome> {
    let strategy = parse_strategy(strategy)?;
    let t = parse_tree(tree)?;
    let mode = if strict { Mode::Strict } else { Mode::General };
    let (nf, steps) = normal_form(&t, strategy, mode)?;
    if trace {
        for s in &steps.steps {
            out!(w, "{}@{}: {} → {}", s.redex.rule, s.redex.position, s.before, s.after);
        }
    }
    out!(w, "{nf}");
    Ok(Outcome::Pass)
}

fn print_checks(w: &mut dyn Write, title: &str, checks: &CheckList) {
    out!(w, "{title}:");
    for c in checks.iter() {
        match &c.verdict {
            Verdict::Pass => out!(w, "  PASS {}", c.name),
            Verdict::Fail { witness } => out!(w, "  FAIL {} witness {witness:?}", c.name),
            Verdict::NotApplicable { reason } => out!(w, "  N/A  {} ({reason})", c.name),
        }
    }
}

fn first_failure<'a>(lists: impl IntoIterator<Item = &'a CheckList>) -> Option<(String, Vec<usize>)> {
    lists
        .into_iter()
        .flat_map(CheckList::iter)
        .find_map(|c| c.verdict.witness().map(|w| (c.name.clone(), w.to_vec())))
}

/// Human lines (unless `json_only`), then the JSON report; the exit outcome
/// follows `violation`.
fn emit(
    w: &mut dyn Write,
    json_only: bool,
    sections: &[(&str, &CheckList)],
    violation: Option<(String, Vec<usize>)>,
    report: Value,
) -> Outcome {
    if !json_only {
        for (title, checks) in sections {
            print_checks(w, title, checks);
        }
        match &violation {
            Some((name, wit)) => out!(w, "result: FAIL {name} witness {wit:?}"),
            None => out!(w, "result: PASS"),
        }
    }
    let report = json!({
        "status": if violation.is_some() { "fail" } else { "pass" },
        "first_violation": violation.as_ref().map(|(n, w)| json!({"check": n, "witness": w})),
        "report": report,
    });
    out!(w, "{report}");
    if violation.is_some() {
        Outcome::Violation
    } else {
        Outcome::Pass
    }
}

fn load_group(path: &Path) -> Result<FiniteHomGroup> {
    read_json::<GroupFile>(path)?.build()
}

fn load_ring(path: &Path) -> Result<FiniteHomRing> {
    read_json::<RingFile>(path)?.build()
}

fn load_module(path: &Path) -> Result<FiniteHomModule> {
    read_json::<ModuleFile>(path)?.build(path.parent())
}

fn group_violation(r: &AxiomReport) -> Option<(String, Vec<usize>)> {
    r.first_violation().map(|(n, w)| (n.to_string(), w.to_vec()))
}

fn group_human(r: &AxiomReport) -> CheckList {
    let mut axioms = CheckList::default();
    for c in r.axioms.iter() {
        if c.name != REGULARITY && c.name != COMMUTATIVITY {
            axioms.push(c.name.clone(), c.verdict.clone());
        }
    }
    axioms
}

pub fn check(
    w: &mut dyn Write,
    kind: Kind,
    file: &Path,
    ring_type: Option<&str>,
    side: Option<SideArg>,
    json_only: bool,
) -> Result<Outcome> {
    match kind {
        Kind::Group => {
            let g = load_group(file)?;
            let r = check_hom_group(&g);
            let axioms = group_human(&r);
            if !json_only {
                out!(w, "order {}, regular {}, abelian {}", g.order(), r.regular, r.abelian);
            }
            Ok(emit(
                w,
                json_only,
                &[("axioms", &axioms), ("derived", &r.derived)],
                group_violation(&r),
                json!(r),
            ))
        }
        Kind::Ring => {
            let mut ring = load_ring(file)?;
            match ring_type {
                Some("1") => ring = ring.with_type(RingType::One),
                Some("2") => ring = ring.with_type(RingType::Two),
                _ => {}
            }
            let r = check_hom_ring(&ring);
            if !json_only {
                out!(
                    w,
                    "order {}, type {}, regular {}",
                    ring.order(),
                    r.ring_type,
                    ring.is_regular()
                );
            }
            Ok(emit(
                w,
                json_only,
                &[("axioms", &r.checks), ("derived", &r.derived)],
                first_failure([&r.checks, &r.derived]),
                json!(r),
            ))
        }
        Kind::Module => {
            let m = load_module(file)?;
            let side = match side {
                Some(SideArg::Left) => Side::Left,
                Some(SideArg::Right) => Side::Right,
                Some(SideArg::Bi) => Side::Bi,
                None => m.side(),
            };
            let r = check_module(&m, side)?;
            if !json_only {
                out!(w, "order {}, side {:?}, regular {}", m.order(), side, m.is_regular());
            }
            Ok(emit(
                w,
                json_only,
                &[("axioms", &r.checks), ("derived", &r.derived)],
                first_failure([&r.checks, &r.derived]),
                json!(r),
            ))
        }
        Kind::Bilinear => {
            let (a, b, c, f) = read_json::<BilinearFile>(file)?.build()?;
            let r = is_hom_bilinear(&a, &b, &c, &f)?;
            Ok(emit(
                w,
                json_only,
                &[("identities", &r.identities), ("lemmas", &r.lemmas)],
                first_failure([&r.identities, &r.lemmas]),
                json!(r),
            ))
        }
        Kind::Poly => {
            let p = read_json::<PolyFile>(file)?.build()?;
            let mut rng = ChaCha8Rng::seed_from_u64(POLY_SEED);
            let checks = check_poly_axioms(&p.space, &mut rng, POLY_SAMPLES, POLY_DEGREE)?;
            if !json_only {
                out!(
                    w,
                    "{POLY_SAMPLES} sampled triples of degree at most {POLY_DEGREE}, seed {POLY_SEED}"
                );
            }
            Ok(emit(
                w,
                json_only,
                &[("sampled identities", &checks)],
                first_failure([&checks]),
                json!({"samples": POLY_SAMPLES, "max_degree": POLY_DEGREE, "seed": POLY_SEED, "checks": checks}),
            ))
        }
    }
}

/// Names accepted by `construct`.
pub const CATALOG: &[&str] = &[
    "z2",
    "z3",
    "z4-2x",
    "z6-5x",
    "twisted-s3",
    "f2",
    "f2c3-type1",
    "f2c3-type2",
    "f2s3",
    "z6-3x",
    "f2xf2-swap",
    "f2xf2-collapse",
    "f4-frobenius",
    "end-z6-5x",
    "f2c3-regular-module",
    "f2xf2-swap-module",
    "f4-frobenius-module",
    "f2xf2-collapse-module",
    "z4-doubling-module",
    "poly-f5-x2",
];

fn catalog_json(name: &str, budget: &Budget) -> Result<Value> {
    let group = |g: &FiniteHomGroup| json!(GroupFile::from(g));
    let ring = |r: &FiniteHomRing| json!(RingFile::from(r));
    let module = |m: &FiniteHomModule| json!(ModuleFile::from(m));
    Ok(match name {
        "z2" => group(&catalog::cyclic(2)),
        "z3" => group(&catalog::cyclic(3)),
        "z4-2x" => group(&catalog::z4_2x()),
        "z6-5x" => group(&catalog::z6_5x()),
        "twisted-s3" => group(&catalog::twisted_s3()),
        "f2" => ring(&catalog::f2_ring()),
        "f2c3-type1" => ring(&catalog::f2c3_twist(RingType::One)),
        "f2c3-type2" => ring(&catalog::f2c3_twist(RingType::Two)),
        "f2s3" => ring(&catalog::f2s3_conjugation()),
        "z6-3x" => ring(&catalog::z6_3x_ring()),
        "f2xf2-swap" => ring(&catalog::f2xf2_swap()),
        "f2xf2-collapse" => ring(&catalog::f2xf2_collapse()),
        "f4-frobenius" => ring(&catalog::f4_frobenius()),
        "end-z6-5x" => ring(&endomorphism_hom_ring(&catalog::z6_5x(), budget)?.0),
        "f2c3-regular-module" => module(&FiniteHomModule::regular(&catalog::f2c3_twist(RingType::One))?),
        "f2xf2-swap-module" => module(&FiniteHomModule::regular(&catalog::f2xf2_swap())?),
        "f4-frobenius-module" => module(&FiniteHomModule::regular(&catalog::f4_frobenius())?),
        "f2xf2-collapse-module" => module(&FiniteHomModule::regular(&catalog::f2xf2_collapse())?),
        "z4-doubling-module" => module(&catalog::z4_doubling_module()),
        "poly-f5-x2" => json!(PolyFile::from(&homcat::ring::poly::PolySpace::univariate(5, 2)?.var(0))),
        _ => {
            return Err(Error::Structural(format!(
                "unknown catalog entry {name:?}; known: {}",
                CATALOG.join(", ")
            )))
        }
    })
}

pub fn construct(w: &mut dyn Write, name: &str, budget: &Budget) -> Result<Outcome> {
    let v = catalog_json(name, budget)?;
    out!(
        w,
        "{}",
        serde_json::to_string_pretty(&v).expect("JSON values serialize")
    );
    Ok(Outcome::Pass)
}

/// Certify a group input, as `check group` would.
fn certified_group(path: &Path) -> Result<FiniteHomGroup> {
    let g = load_group(path)?;
    let r = check_hom_group(&g);
    match r.first_violation() {
        Some((name, w)) => Err(Error::Rejected {
            reason: format!("{} fails {name}", path.display()),
            witness: w.to_vec(),
        }),
        None => Ok(g),
    }
}

fn certified_ring(path: &Path) -> Result<FiniteHomRing> {
    let r = load_ring(path)?;
    if let Some((name, w)) = first_failure([&check_hom_ring(&r).checks]) {
        return Err(Error::Rejected {
            reason: format!("{} fails {name}", path.display()),
            witness: w,
        });
    }
    Ok(r)
}

fn certified_module(path: &Path) -> Result<FiniteHomModule> {
    let m = load_module(path)?;
    let r = check_module(&m, m.side())?;
    if let Some((name, w)) = first_failure([&r.checks]) {
        return Err(Error::Rejected {
            reason: format!("{} fails {name}", path.display()),
            witness: w,
        });
    }
    Ok(m)
}

fn inputs<const N: usize>(target: ReportTarget, paths: &[PathBuf]) -> Result<[&Path; N]> {
    if paths.len() != N {
        return Err(Error::Structural(format!(
            "{target:?} takes {N} input file(s), got {}",
            paths.len()
        )));
    }
    Ok(std::array::from_fn(|i| paths[i].as_path()))
}

fn print_report(w: &mut dyn Write, target: ReportTarget, partial: bool, body: Value) {
    let v = json!({
        "target": format!("{target:?}").to_lowercase(),
        "partial": partial,
        "report": body,
    });
    out!(
        w,
        "{}",
        serde_json::to_string_pretty(&v).expect("JSON values serialize")
    );
}

pub fn report(
    w: &mut dyn Write,
    target: ReportTarget,
    paths: &[PathBuf],
    paper: bool,
    generator: Option<usize>,
    budget: &Budget,
) -> Result<Outcome> {
    let result = run_report(w, target, paths, paper, generator, budget);
    if let Err(e @ Error::Budget { .. }) = &result {
        print_report(w, target, true, json!({"error": e.to_string()}));
        return Ok(Outcome::Budget);
    }
    result
}

fn run_report(
    w: &mut dyn Write,
    target: ReportTarget,
    paths: &[PathBuf],
    paper: bool,
    generator: Option<usize>,
    budget: &Budget,
) -> Result<Outcome> {
    match target {
        ReportTarget::Lattice => {
            let [p] = inputs(target, paths)?;
            let g = certified_group(p)?;
            let l = normal_lattice(&g, budget);
            let partial = !l.authoritative;
            print_report(w, target, partial, json!(l));
            Ok(if partial { Outcome::Budget } else { Outcome::Pass })
        }
        ReportTarget::Abelianize => {
            let [p] = inputs(target, paths)?;
            let g = certified_group(p)?;
            let ab = abelianization(&g, None)?;
            let abelian = check_hom_group(&ab.quotient.group).abelian;
            let body = json!({
                "input_order": g.order(),
                "commutator": ab.commutator,
                "quotient_order": ab.quotient.order(),
                "quotient_abelian": abelian,
                "coset_representatives": ab.quotient.reps,
                "projection": ab.projection.map,
                "quotient": GroupFile::from(&ab.quotient.group),
                "checks": ab.checks,
            });
            print_report(w, target, false, body);
            Ok(Outcome::Pass)
        }
        ReportTarget::Tensor => {
            let [a, b] = inputs(target, paths)?;
            tensor(w, a, b, paper, &[], budget)
        }
        ReportTarget::Simplicity => {
            let [p] = inputs(target, paths)?;
            let r = certified_ring(p)?;
            let s = homcat::module::hom_ring_simplicity(&r, budget)?;
            let partial = !s.analysis.authoritative;
            print_report(w, target, partial, json!(s));
            Ok(if partial { Outcome::Budget } else { Outcome::Pass })
        }
        ReportTarget::Decompose => {
            let [p] = inputs(target, paths)?;
            let m = certified_module(p)?;
            let d = semisimple_decomposition(&m, generator, budget)?;
            print_report(w, target, false, json!(d));
            Ok(if d.checks.all_pass() {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
    }
}

pub fn tensor(
    w: &mut dyn Write,
    a: &Path,
    b: &Path,
    paper: bool,
    targets: &[PathBuf],
    budget: &Budget,
) -> Result<Outcome> {
    let result = run_tensor(w, a, b, paper, targets, budget);
    if let Err(e @ Error::Budget { .. }) = &result {
        print_report(w, ReportTarget::Tensor, true, json!({"error": e.to_string()}));
        return Ok(Outcome::Budget);
    }
    result
}

fn run_tensor(
    w: &mut dyn Write,
    a: &Path,
    b: &Path,
    paper: bool,
    targets: &[PathBuf],
    budget: &Budget,
) -> Result<Outcome> {
    let (ga, gb) = (certified_group(a)?, certified_group(b)?);
    let cand = if paper {
        tensor_paper(&ga, &gb)?
    } else {
        tensor_oracle(&ga, &gb, budget)?
    };
    let mut goals = vec![cand.carrier.clone()];
    for t in targets {
        goals.push(certified_group(t)?);
    }
    let verdicts = universal_property_check(&ga, &gb, &cand, &goals, budget)?;
    let status = if verdicts.iter().any(|v| v.status == UniversalStatus::Violated) {
        UniversalStatus::Violated
    } else if verdicts.iter().any(|v| v.status == UniversalStatus::Truncated) {
        UniversalStatus::Truncated
    } else {
        UniversalStatus::Satisfied
    };
    let bilinearity = is_hom_bilinear(&ga, &gb, &cand.carrier, &cand.tau)?;
    let symmetry = if paper {
        None
    } else {
        Some(symmetry_check(&ga, &gb, budget)?)
    };
    let body = json!({
        "candidate": cand.tag,
        "status": status,
        "carrier_order": cand.carrier.order(),
        "invariant_factors": cand.invariant_factors,
        "carrier": GroupFile::from(&cand.carrier),
        "tau": cand.tau.to_rows(),
        "tau_bilinearity": bilinearity.identities,
        "targets": verdicts,
        "symmetry": symmetry,
    });
    let partial = status == UniversalStatus::Truncated;
    print_report(w, ReportTarget::Tensor, partial, body);
    Ok(match status {
        UniversalStatus::Satisfied => Outcome::Pass,
        UniversalStatus::Violated => Outcome::Violation,
        UniversalStatus::Truncated => Outcome::Budget,
    })
}
