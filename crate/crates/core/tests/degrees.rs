use minfaith_core::chartab::build_table;
use minfaith_core::families::build_group;
use minfaith_core::perm::lattice::DEFAULT_SUBGROUP_BOUND;
use minfaith_core::quasiperm::*;

fn degrees(spec: &str) -> (u64, u64) {
    let g = build_group(spec).unwrap();
    let t = build_table("auto", &g).unwrap();
    let c = c_search(&g, &t).unwrap();
    let mu = mu_search(&g, DEFAULT_SUBGROUP_BOUND, &SearchConfig::default()).unwrap();
    (c.total, mu.total)
}

#[test]
fn small_examples() {
    assert_eq!(degrees("abelian:8"), (8, 8));
    assert_eq!(degrees("abelian:2,3"), (4, 5));
    assert_eq!(degrees("extraspecial:2,1,q"), (4, 8));
    assert_eq!(degrees("extraspecial:2,1,d"), (4, 4));
    assert_eq!(degrees("extraspecial:3,1,p"), (9, 9));
    assert_eq!(degrees("product:(extraspecial:3,1,p)x(abelian:9)"), (18, 18));
}
