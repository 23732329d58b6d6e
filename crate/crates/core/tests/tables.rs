use minfaith_core::chartab::{abelian_table, build_table, dixon_table, vz_table, DEFAULT_DIXON_BOUND};
use minfaith_core::families::build_group;
use minfaith_core::perm::profile;

#[test]
fn extraspecial_profiles() {
    for (spec, order, exponent) in [
        ("extraspecial:2,1,q", 8, 4),
        ("extraspecial:2,1,d", 8, 4),
        ("extraspecial:3,1,p", 27, 3),
        ("extraspecial:3,1,e", 27, 9),
        ("extraspecial:5,1,p", 125, 5),
        ("extraspecial:2,2,d", 32, 4),
    ] {
        let g = build_group(spec).unwrap();
        let prof = profile(&g);
        assert_eq!(prof.order, order, "{spec}");
        assert_eq!(prof.exponent, exponent, "{spec}");
        assert_eq!(prof.center_order, prof.derived_order, "{spec}");
        assert!(prof.is_vz && prof.is_camina, "{spec}");
    }
}

#[test]
fn quaternion_has_one_involution() {
    let q8 = build_group("extraspecial:2,1,q").unwrap();
    let d8 = build_group("extraspecial:2,1,d").unwrap();
    let involutions = |g: &minfaith_core::perm::FiniteGroup| {
        (0..g.order()).filter(|&x| g.element_order(x) == 2).count()
    };
    assert_eq!(involutions(&q8), 1);
    assert_eq!(involutions(&d8), 5);
}

#[test]
fn heisenberg_over_f4() {
    let g = build_group("heisenberg:2,2").unwrap();
    let prof = profile(&g);
    assert_eq!(prof.order, 64);
    assert_eq!(prof.center_order, 4);
    assert!(prof.is_vz);
}

#[test]
fn dixon_agrees_with_analytic_tables() {
    for spec in ["abelian:4,3", "abelian:2,2,2", "abelian:9,3", "extraspecial:2,1,q", "extraspecial:3,1,e",
        "product:(extraspecial:3,1,p)x(abelian:9)", "product:(extraspecial:2,1,d)x(abelian:4)"] {
        let g = build_group(spec).unwrap();
        let analytic = if g.is_abelian() { abelian_table(&g) } else { vz_table(&g) }.unwrap();
        analytic.verify().unwrap();
        let dixon = dixon_table(&g, DEFAULT_DIXON_BOUND).unwrap();
        assert!(analytic.same_rows(&dixon), "{spec}");
    }
}

#[test]
fn dixon_on_nonnilpotent_groups() {
    let sym4 = minfaith_core::perm::FiniteGroup::from_generators(
        4,
        vec![
            minfaith_core::perm::Permutation::parse_cycles(4, "(1,2,3,4)").unwrap(),
            minfaith_core::perm::Permutation::parse_cycles(4, "(1,2)").unwrap(),
        ],
    )
    .unwrap();
    let t = build_table("dixon", &sym4).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
}
