use std::collections::BTreeMap;

use minfaith_core::chartab::{build_table, kernel_of, restrict_to};
use minfaith_core::families::{build_group, load_camina3_instance};
use minfaith_core::perm::io::write_grp;
use minfaith_core::perm::lattice::{normal_subgroups, DEFAULT_SUBGROUP_BOUND};
use minfaith_core::perm::profile::is_vz;
use minfaith_core::perm::{FiniteGroup, GroupConfig};
use minfaith_core::quasiperm::*;
use minfaith_core::verify::{verify_theorems, CorpusSelection, Status, VerifyOptions};
use minfaith_core::Error;

fn group(spec: &str) -> FiniteGroup {
    build_group(spec).unwrap()
}

fn orbits(g: &FiniteGroup) -> Vec<GaloisOrbit> {
    galois_orbits(&build_table("auto", g).unwrap())
}

#[test]
fn galois_orbits_of_small_groups() {
    let c2 = orbits(&group("abelian:2"));
    assert_eq!(c2.len(), 2);
    assert!(c2.iter().all(|o| o.members.len() == 1));

    let c5 = orbits(&group("abelian:5"));
    let faithful = c5.iter().find(|o| !o.is_trivial()).unwrap();
    assert_eq!(faithful.members.len(), 4);
    assert_eq!(faithful.theta, vec![4, -1, -1, -1, -1]);
    assert_eq!(faithful.m, 1);

    let q8 = orbits(&group("extraspecial:2,1,q"));
    let nonlinear = q8.iter().find(|o| !o.is_linear()).unwrap();
    assert_eq!(nonlinear.degree, 2);
    assert_eq!(nonlinear.m, 2);
}

#[test]
fn q_values() {
    let config = SearchConfig::default();
    for (spec, expected, method) in [
        ("abelian:3,4", 7, QMethod::Search),
        ("extraspecial:3,1,e", 9, QMethod::Search),
        ("extraspecial:2,1,q", 8, QMethod::MuForPGroup),
    ] {
        let g = group(spec);
        let q = q_of(&g, &orbits(&g), None, DEFAULT_SUBGROUP_BOUND, &config).unwrap();
        assert_eq!((q.value, q.method), (expected, method), "{spec}");
    }
}

#[test]
fn aligned_center_bases() {
    let q8 = aligned_center_basis(&group("extraspecial:2,1,q")).unwrap();
    assert_eq!((q8.r(), q8.k), (1, 1));
    let e27c9 = aligned_center_basis(&group("product:(extraspecial:3,1,p)x(abelian:9)")).unwrap();
    assert_eq!((e27c9.r(), e27c9.k), (2, 1));
    assert_eq!(e27c9.exponents, vec![1, 2]);
    let e27c3 = aligned_center_basis(&group("product:(extraspecial:3,1,p)x(abelian:3)")).unwrap();
    assert_eq!(e27c3.exponents, vec![1, 1]);
}

#[test]
fn closed_forms() {
    for (spec, expected) in [("extraspecial:2,1,q", 4), ("product:(extraspecial:3,1,p)x(abelian:9)", 18)] {
        let g = group(spec);
        let table = build_table("auto", &g).unwrap();
        assert_eq!(c_vz_formula(&g, &table).unwrap().value, expected, "{spec}");
    }
    assert_eq!(c_abelian_formula(&group("abelian:2,3")).unwrap(), 4);
    assert_eq!(c_abelian_formula(&group("abelian:2,4")).unwrap(), 6);
    assert!(matches!(c_abelian_formula(&group("extraspecial:2,1,d")), Err(Error::NotAbelian)));
    assert!(matches!(c_camina3_formula(&group("extraspecial:3,1,p")), Err(Error::NotCaminaClass3(_))));
}

#[test]
fn camina3_loader_rejects_class_two_and_abelian_groups() {
    let dir = std::env::temp_dir().join(format!("minfaith-examples-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for spec in ["extraspecial:3,1,p", "abelian:3,3"] {
        let path = dir.join("g.grp");
        std::fs::write(&path, write_grp(&group(spec))).unwrap();
        let err = load_camina3_instance(&path, GroupConfig::default()).unwrap_err();
        assert!(matches!(err, Error::NotCaminaClass3(_)), "{spec}: {err}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn witness_m_matches_p_group_rule() {
    for spec in ["abelian:4,2", "extraspecial:2,1,q", "extraspecial:3,1,p"] {
        let g = group(spec);
        let w = c_search(&g, &build_table("auto", &g).unwrap()).unwrap();
        assert!(m_of_p_group_check(&w, &g), "{spec}");
    }
}

#[test]
fn quaternion_character_on_center() {
    let g = group("extraspecial:2,1,q");
    let table = build_table("auto", &g).unwrap();
    let chi = table.characters.iter().find(|c| c.degree() == 2).unwrap();
    assert!(kernel_of(&g, chi).is_trivial());
    let values: BTreeMap<usize, i64> = restrict_to(&g, chi, &g.center())
        .into_iter()
        .map(|(x, v)| (g.element_order(x) as usize, v.as_integer().unwrap()))
        .collect();
    assert_eq!(values, BTreeMap::from([(1, 2), (2, -2)]));
}

// With Z(G) = G' x C2 the C2 factor is a proper normal subgroup that neither
// contains G' nor meets it, so the dichotomy for normal subgroups of VZ groups
// with d(G') >= 2 only holds for kernels of nonlinear characters here.
#[test]
fn normal_subgroup_dichotomy_fails_with_split_center() {
    let g = group("product:(heisenberg:2,2)x(abelian:2)");
    assert!(is_vz(&g));
    let z = g.center();
    let d = g.derived_subgroup();
    assert_eq!((z.order(), d.order()), (8, 4));
    let offending: Vec<_> = normal_subgroups(&g)
        .into_iter()
        .filter(|n| {
            !n.is_trivial()
                && n.order() < g.order()
                && !d.elements.is_subset(&n.elements)
                && !(n.elements.is_subset(&z.elements)
                    && n.order() < z.order()
                    && n.elements.intersection_count(&d.elements) > 1)
        })
        .collect();
    assert!(!offending.is_empty());
    let table = build_table("auto", &g).unwrap();
    for chi in table.characters.iter().filter(|c| c.degree() > 1) {
        let k = kernel_of(&g, chi);
        assert!(k.elements.intersection_count(&d.elements) > 1);
    }
}

#[test]
fn abelian_corpus_verifies() {
    let report = verify_theorems(VerifyOptions {
        corpus: CorpusSelection::Abelian,
        ..VerifyOptions::default()
    })
    .unwrap();
    assert!(report.passed, "{report}");
    assert_eq!(report.result("abelian-c6-rule").unwrap().status, Status::Pass);
    assert_eq!(report.result("camina3").unwrap().status, Status::Skipped);
}
