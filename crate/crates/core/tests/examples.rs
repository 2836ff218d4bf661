//! Worked examples through the public API and the JSON formats.

use homcat::catalog;
use homcat::free::{fg_multiply, hom_inverse, mirror_inverse, parse_tree, reduce};
use homcat::group::{
    check_hom_group, check_structure_identities, enumerate_homomorphisms, hom_group_of_homomorphisms,
    inverse_and_index, q_add, q_additive_window,
};
use homcat::io::{from_json, GroupFile, ModuleFile, PolyFile, RingFile};
use homcat::module::{
    check_module, compatible_module, direct_sum, hom_ring_simplicity, semisimple_decomposition, submodule_analysis,
    FiniteHomModule, Side,
};
use homcat::ring::{check_hom_ring, ring_center, RingType};
use homcat::structure::{
    canonical_subgroups, commutator_subgroup, generated_hom_subgroup, is_hom_subgroup, is_normal, quotient, SubSet,
};
use homcat::tensor::{symmetry_check, tensor_oracle, tensor_paper};
use homcat::{Budget, Error};

fn set(n: usize, xs: &[usize]) -> SubSet {
    SubSet::from_elements(n, xs.iter().copied()).unwrap()
}

#[test]
fn hand_written_group_file() {
    let text = r#"{"n":6,"e":0,
        "mul":[[0,5,4,3,2,1],[5,4,3,2,1,0],[4,3,2,1,0,5],[3,2,1,0,5,4],[2,1,0,5,4,3],[1,0,5,4,3,2]],
        "alpha":[0,5,4,3,2,1]}"#;
    let g = from_json::<GroupFile>(text).unwrap().build().unwrap();
    assert_eq!(g, catalog::z6_5x());
    let r = check_hom_group(&g);
    assert!(r.is_certified() && r.regular && r.abelian);
    assert_eq!(g.mul(1, 2), 3);
    assert_eq!(inverse_and_index(&g, 2).unwrap(), (4, 0));
    assert_eq!(inverse_and_index(&catalog::z4_2x(), 1).unwrap(), (3, 0));
}

#[test]
fn products_and_homomorphisms() {
    let p = catalog::z6_5x().direct_product(&catalog::z4_2x());
    let r = check_hom_group(&p);
    assert_eq!(p.order(), 24);
    assert!(r.is_hom_group() && !r.regular);

    let z2 = catalog::cyclic(2);
    assert_eq!(enumerate_homomorphisms(&z2, &z2, &Budget::default()).maps.len(), 2);
    let (end, maps) = hom_group_of_homomorphisms(&catalog::z6_5x(), &catalog::z6_5x(), &Budget::default()).unwrap();
    assert!(check_hom_group(&end).is_hom_group());
    assert!(maps[end.identity()].map.iter().all(|&x| x == 0));
}

#[test]
fn q_addition() {
    assert_eq!(q_add(3, 2, 4), Some(18));
    assert!(q_additive_window(2, 50).unwrap().passes());
}

#[test]
fn identities_and_subgroups() {
    let s3 = catalog::twisted_s3();
    let r = check_structure_identities(&s3);
    assert!(r.checks.all_pass());
    assert_eq!(r.squaring_is_homomorphism, Some(false));

    let z6 = catalog::z6_5x();
    assert!(is_hom_subgroup(&z6, &set(6, &[0, 1])).is_err());
    assert_eq!(generated_hom_subgroup(&z6, &set(6, &[2])).elements(), vec![0, 2, 4]);
    assert_eq!(canonical_subgroups(&s3, None).unwrap().center.elements(), vec![0]);

    let rotations = commutator_subgroup(&s3).unwrap().subgroup;
    assert_eq!(rotations.len(), 3);
    assert!(is_normal(&s3, &rotations).unwrap().normal);
    let q = quotient(&s3, &rotations).unwrap();
    assert_eq!(q.order(), 2);
    assert!(check_hom_group(&q.group).is_certified());
}

#[test]
fn tensor_orders() {
    let b = Budget::default();
    let (z2, z3, z4) = (catalog::cyclic(2), catalog::cyclic(3), catalog::cyclic(4));
    assert_eq!(tensor_paper(&z2, &z3).unwrap().carrier.order(), 6);
    let s3 = catalog::twisted_s3();
    assert_eq!(tensor_paper(&s3, &s3).unwrap().carrier.order(), 4);
    assert_eq!(tensor_oracle(&z2, &z3, &b).unwrap().carrier.order(), 1);
    assert_eq!(tensor_oracle(&z2, &z2, &b).unwrap().carrier.order(), 2);
    let sym = symmetry_check(&z2, &z4, &b).unwrap();
    assert!(sym.isomorphic);
    assert_eq!(sym.ab_factors, vec![2]);
}

#[test]
fn free_group_examples() {
    let t = parse_tree("((g@0 (g'@2 g@5)) ((g'@5 g@2) g@1))").unwrap();
    let nf = reduce(&t);
    assert_eq!(nf.to_string(), "(g@1 g@2)");
    assert!(fg_multiply(&nf, &hom_inverse(&nf)).is_unit());
    assert_eq!(
        mirror_inverse(&parse_tree("(g'@7 g@3)").unwrap()).to_string(),
        "(g'@3 g@7)"
    );
    assert_eq!(
        mirror_inverse(&parse_tree("((g@-1 g@1) g'@3)").unwrap()).to_string(),
        "(g@3 (g'@1 g'@-1))"
    );
}

#[test]
fn ring_files_and_center() {
    let r = catalog::f2c3_twist(RingType::Two);
    let text = serde_json::to_string(&RingFile::from(&r)).unwrap();
    let back = from_json::<RingFile>(&text).unwrap().build().unwrap();
    assert!(check_hom_ring(&back).passes());

    let s3 = catalog::f2s3_conjugation();
    let c = ring_center(&s3).unwrap();
    assert!(c.checks.all_pass());
    assert!(c.center.len() < 64 && c.center.contains(s3.zero()) && c.center.contains(s3.one().unwrap()));
}

#[test]
fn non_regular_twist_has_no_unit() {
    let r = catalog::z6_3x_ring();
    assert!(check_hom_ring(&r).passes());
    assert!(!r.is_regular() && r.one().is_none());
    assert!(matches!(
        hom_ring_simplicity(&r, &Budget::default()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn module_flows() {
    let b = Budget::default();
    let a = FiniteHomModule::regular(&catalog::f2c3_twist(RingType::One)).unwrap();
    assert!(check_module(&a, Side::Bi).unwrap().passes());
    let aa = direct_sum(&a, &a).unwrap();
    assert_eq!(aa.order(), 64);
    assert!(check_module(&aa, Side::Bi).unwrap().passes());
    let zero = FiniteHomModule::zero(a.ring());
    assert_eq!(direct_sum(&a, &zero).unwrap().order(), a.order());

    let analysis = submodule_analysis(&a, Side::Left, &b).unwrap();
    assert_eq!(analysis.ker_beta.elements(), vec![0]);
    assert!(compatible_module(&a).unwrap().report.round_trip);

    let z4 = catalog::z4_doubling_module();
    let analysis = submodule_analysis(&z4, Side::Left, &b).unwrap();
    assert!(!analysis.is_simple);
    assert_eq!(analysis.ker_beta.elements(), vec![0, 2]);
}

#[test]
fn module_file_with_ring_path() {
    let dir = tempfile::tempdir().unwrap();
    let m = FiniteHomModule::regular(&catalog::f2xf2_swap()).unwrap();
    std::fs::write(
        dir.path().join("ring.json"),
        serde_json::to_string(&RingFile::from(m.ring())).unwrap(),
    )
    .unwrap();
    let mut f = serde_json::to_value(ModuleFile::from(&m)).unwrap();
    f["ring"] = "ring.json".into();
    let parsed: ModuleFile = serde_json::from_value(f).unwrap();
    assert_eq!(parsed.build(Some(dir.path())).unwrap(), m);
}

#[test]
fn decompositions() {
    let b = Budget::default();
    let swap = FiniteHomModule::regular(&catalog::f2xf2_swap()).unwrap();
    let d = semisimple_decomposition(&swap, None, &b).unwrap();
    assert_eq!((d.k, d.summands.len()), (2, 2));
    assert!(d.checks.all_pass());
    let f4 = FiniteHomModule::regular(&catalog::f4_frobenius()).unwrap();
    let d = semisimple_decomposition(&f4, None, &b).unwrap();
    assert!(d.overlap.is_some());
    assert!(hom_ring_simplicity(&catalog::f2_ring(), &b).unwrap().simple);
    assert!(!hom_ring_simplicity(&catalog::f2xf2_collapse(), &b).unwrap().simple);
}

#[test]
fn poly_file_evaluates() {
    let p = from_json::<PolyFile>(r#"{"p":5,"subst":{"X":2},"terms":[[1,1]]}"#)
        .unwrap()
        .build()
        .unwrap();
    let two_x_sq = p.space.sum(&p, &p).unwrap();
    assert_eq!(two_x_sq.terms.into_iter().collect::<Vec<_>>(), vec![(vec![2], 2)]);
}
