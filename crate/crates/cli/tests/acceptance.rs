//! Acceptance criteria 1-10. Each criterion prints one PASS/FAIL/SKIPPED line;
//! the test fails if any criterion fails.

use std::fmt;
use std::process::Command;
use std::time::{Duration, Instant};

use minfaith_core::chartab::build_table;
use minfaith_core::families::{abelian, build_group};
use minfaith_core::perm::lattice::DEFAULT_SUBGROUP_BOUND;
use minfaith_core::perm::{profile, FiniteGroup, GroupConfig};
use minfaith_core::quasiperm::*;
use minfaith_core::verify::{Corpus, CorpusSelection};
use serde_json::Value;

const ABELIAN_LIMIT: Duration = Duration::from_secs(60);
const VZ_LIMIT: Duration = Duration::from_secs(300);
const ODD_P_ORDER_LIMIT: usize = 512;
const MIN_MU_PAIRS: usize = 5;

const VZ_FORMULA_GROUPS: [&str; 8] = [
    "extraspecial:2,1,q",
    "extraspecial:2,1,d",
    "extraspecial:3,1,p",
    "extraspecial:3,1,e",
    "extraspecial:5,1,p",
    "extraspecial:5,1,e",
    "product:(extraspecial:3,1,p)x(abelian:3)",
    "product:(extraspecial:3,1,p)x(abelian:9)",
];

#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

struct Outcome {
    verdict: Verdict,
    detail: String,
}

fn judge(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            verdict: Verdict::Pass,
            detail: summary,
        }
    } else {
        Outcome {
            verdict: Verdict::Fail,
            detail: format!("{summary}; {}", failures.join("; ")),
        }
    }
}

struct Degrees {
    c: u64,
    q: u64,
    mu: u64,
}

fn search() -> SearchConfig {
    SearchConfig::default()
}

fn orbits_of(g: &FiniteGroup) -> Vec<GaloisOrbit> {
    galois_orbits(&build_table("auto", g).unwrap())
}

fn all_degrees(g: &FiniteGroup) -> Degrees {
    let orbits = orbits_of(g);
    Degrees {
        c: c_search_with(g, &orbits, None, &search()).unwrap().total,
        q: q_of(g, &orbits, None, DEFAULT_SUBGROUP_BOUND, &search()).unwrap().value,
        mu: mu_search(g, DEFAULT_SUBGROUP_BOUND, &search()).unwrap().total,
    }
}

fn invariants(spec: &str) -> Vec<u64> {
    let list = spec.strip_prefix("abelian:").unwrap();
    if list.is_empty() {
        return Vec::new();
    }
    list.split(',').map(|t| t.parse().unwrap()).collect()
}

fn criterion_1(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for spec in &corpus.abelian_p {
        let d = all_degrees(&build_group(spec).unwrap());
        let t = t_of_invariants(&invariants(spec));
        if !(d.c == t && d.q == t && d.mu == t) {
            failures.push(format!("{spec}: c={} q={} mu={} T={t}", d.c, d.q, d.mu));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > ABELIAN_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {ABELIAN_LIMIT:?}"));
    }
    judge(failures, format!("{} abelian p-groups in {:.1}s", corpus.abelian_p.len(), elapsed.as_secs_f64()))
}

fn criterion_2(corpus: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let c6 = build_group("abelian:2,3").unwrap();
    let c6_value = c_search(&c6, &build_table("auto", &c6).unwrap()).unwrap().total;
    if c6_value != 4 || c6_value != t_of_invariants(&[2, 3]) - 1 {
        failures.push(format!("c(C6) = {c6_value}"));
    }
    for spec in &corpus.abelian {
        let g = build_group(spec).unwrap();
        let c = c_search(&g, &build_table("auto", &g).unwrap()).unwrap().total;
        let rule = c_abelian_formula(&g).unwrap();
        if c != rule {
            failures.push(format!("{spec}: search {c}, rule {rule}"));
        }
    }
    judge(failures, format!("c(C6) = {c6_value}; {} abelian groups", corpus.abelian.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for spec in VZ_FORMULA_GROUPS {
        let g = build_group(spec).unwrap();
        let table = build_table("auto", &g).unwrap();
        let orbits = galois_orbits(&table);
        let formula = c_vz_formula(&g, &table).unwrap();
        let c = c_search_with(&g, &orbits, None, &search()).unwrap().total;
        let (r, k) = (formula.basis.r(), formula.basis.k);
        let optimal = optimal_witnesses(&g, &orbits, &search()).unwrap();
        let bad_shape = optimal.iter().find(|w| {
            let nonlinear = w.orbits.iter().filter(|&&i| !orbits[i].is_linear()).count();
            nonlinear != k || w.orbits.len() - nonlinear != r - k
        });
        if formula.value != c || optimal.is_empty() || bad_shape.is_some() {
            failures.push(format!(
                "{spec}: formula {} search {c} r={r} k={k} witnesses {} bad shape {:?}",
                formula.value,
                optimal.len(),
                bad_shape.map(|w| &w.orbits)
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > VZ_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {VZ_LIMIT:?}"));
    }
    judge(failures, format!("{} VZ groups in {:.1}s", VZ_FORMULA_GROUPS.len(), elapsed.as_secs_f64()))
}

fn criterion_4(corpus: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for spec in &corpus.vz {
        let g = build_group(spec).unwrap();
        let prof = profile(&g);
        if prof.p_group_prime.is_none() || prof.d_derived != Some(prof.d_center) {
            continue;
        }
        cases += 1;
        let c = c_search(&g, &build_table("auto", &g).unwrap()).unwrap().total;
        let z = abelian(&prof.abelian_invariants_of_center, GroupConfig::default()).unwrap();
        let cz = c_search(&z, &build_table("auto", &z).unwrap()).unwrap().total;
        let scale = ((prof.order / prof.center_order) as f64).sqrt().round() as u64;
        if scale * scale != (prof.order / prof.center_order) as u64 || c != scale * cz {
            failures.push(format!("{spec}: c = {c}, |G:Z|^(1/2) c(Z) = {scale}*{cz}"));
        }
    }
    if cases == 0 {
        failures.push("no VZ group with r = k".into());
    }
    judge(failures, format!("{cases} VZ groups with r = k"))
}

fn criterion_5(corpus: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for spec in corpus.all() {
        let g = build_group(&spec).unwrap();
        let odd_p = profile(&g).p_group_prime.is_some_and(|p| p != 2);
        if !odd_p || g.order() > ODD_P_ORDER_LIMIT {
            continue;
        }
        cases += 1;
        let d = all_degrees(&g);
        if !(d.c == d.q && d.q == d.mu) {
            failures.push(format!("{spec}: c={} q={} mu={}", d.c, d.q, d.mu));
        }
    }
    judge(failures, format!("{cases} odd p-groups"))
}

fn criterion_6() -> Outcome {
    let q8 = all_degrees(&build_group("extraspecial:2,1,q").unwrap());
    let d8 = all_degrees(&build_group("extraspecial:2,1,d").unwrap());
    let summary = format!(
        "Q8: c={} q={} mu={}; D8: c={} q={} mu={}",
        q8.c, q8.q, q8.mu, d8.c, d8.q, d8.mu
    );
    let ok = (q8.c, q8.q, q8.mu) == (4, 8, 8) && (d8.c, d8.q, d8.mu) == (4, 4, 4);
    judge(if ok { Vec::new() } else { vec!["unexpected values".into()] }, summary)
}

fn criterion_7(corpus: &Corpus) -> Outcome {
    let mu = |spec: &str| {
        mu_search(&build_group(spec).unwrap(), DEFAULT_SUBGROUP_BOUND, &search())
            .unwrap()
            .total
    };
    let mut failures = Vec::new();
    let mut cases = 0;
    for (h, k) in &corpus.pairs {
        let nilpotent = [h, k].iter().all(|s| profile(&build_group(s).unwrap()).nilpotency_class.is_some());
        if !nilpotent {
            continue;
        }
        cases += 1;
        let (a, b, ab) = (mu(h), mu(k), mu(&Corpus::product_of(h, k)));
        if ab != a + b {
            failures.push(format!("{h} x {k}: {ab} != {a} + {b}"));
        }
    }
    if cases < MIN_MU_PAIRS {
        failures.push(format!("only {cases} nilpotent pairs"));
    }
    judge(failures, format!("{cases} nilpotent pairs"))
}

fn check_status<'a>(report: &'a Value, name: &str) -> (&'a str, String) {
    let check = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("check {name} missing from report"));
    let detail = format!(
        "{name}: {} cases{}",
        check["cases"],
        check["reason"].as_str().map(|r| format!(" ({r})")).unwrap_or_default()
    );
    (check["status"].as_str().unwrap(), detail)
}

fn criterion_8(report: &Value) -> Outcome {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for name in ["table-agreement", "table-orthogonality"] {
        let (status, detail) = check_status(report, name);
        if status != "pass" {
            failures.push(format!("{detail} is {status}"));
        }
        details.push(detail);
    }
    judge(failures, details.join(", "))
}

fn criterion_9(report: &Value) -> Outcome {
    let (status, detail) = check_status(report, "camina3");
    let verdict = match status {
        "pass" => Verdict::Pass,
        "skipped" => Verdict::Skipped,
        _ => Verdict::Fail,
    };
    Outcome { verdict, detail }
}

fn verify_json(extra: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_minfaith"))
        .args(["verify-theorems", "--format", "json"])
        .args(extra)
        .env_remove("MINFAITH_DATA")
        .output()
        .unwrap();
    assert!(
        out.status.code().is_some_and(|c| c == 0 || c == 4),
        "verify-theorems exited with {:?}: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn acceptance() {
    let corpus = Corpus::new(CorpusSelection::Default);
    let first = verify_json(&[]);
    let second = verify_json(&[]);
    let report: Value = serde_json::from_slice(&first).unwrap();
    let camina3: Value = serde_json::from_slice(&verify_json(&["--corpus", "vz", "--include-camina3"])).unwrap();

    let outcomes = [
        ("abelian p-groups: c = q = mu = T", criterion_1(&corpus)),
        ("C6 rule: c(C6) = 4 and search = rule up to 100", criterion_2(&corpus)),
        ("VZ formula and witness shape", criterion_3()),
        ("r = k: c = |G:Z|^(1/2) c(Z)", criterion_4(&corpus)),
        ("odd p-groups: c = q = mu", criterion_5(&corpus)),
        ("2-group separation on Q8 and D8", criterion_6()),
        ("mu additive on nilpotent pairs", criterion_7(&corpus)),
        ("Dixon agrees with analytic tables, orthogonality", criterion_8(&report)),
        ("Camina class 3", criterion_9(&camina3)),
        (
            "verify-theorems --format json is deterministic",
            judge(
                if first == second { Vec::new() } else { vec!["outputs differ".into()] },
                format!("{} bytes, overall passed = {}", first.len(), report["passed"]),
            ),
        ),
    ];

    let mut failed = Vec::new();
    for (i, (title, outcome)) in outcomes.iter().enumerate() {
        println!("criterion {:>2}: {:<7} {title} [{}]", i + 1, outcome.verdict, outcome.detail);
        if outcome.verdict == Verdict::Fail {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
