use std::collections::BTreeSet;

use super::{Check, Context, Corpus, Entry, Tally, CAMINA3_FILE};
use crate::chartab::{abelian_table, build_table, dixon_table, kernel_of, restrict_to, vz_table, DEFAULT_DIXON_BOUND};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::families::{build_group_with, load_camina3_instance};
use crate::numbers::{exact_sqrt, prime_power};
use crate::perm::abelian::abelian_invariants;
use crate::perm::{FiniteGroup, Subgroup};
use crate::quasiperm::{
    c_abelian_formula, c_abelian_of_invariants, c_camina3_formula, c_search, c_search_with, c_vz_formula, center_scaling,
    m_of_p_group_check, optimal_witnesses, q_of, t_of_invariants,
};

type Body = fn(&mut Context, &mut Tally) -> Result<()>;

struct FnCheck {
    name: &'static str,
    description: &'static str,
    body: Body,
}

impl Check for FnCheck {
    fn name(&self) -> &'static str {
        self.name
    }
    fn description(&self) -> &'static str {
        self.description
    }
    fn run(&self, ctx: &mut Context, tally: &mut Tally) -> Result<()> {
        (self.body)(ctx, tally)
    }
}

macro_rules! registry {
    ($($name:literal, $desc:literal => $body:path;)*) => {
        static CHECKS: &[&dyn Check] = &[$(&FnCheck { name: $name, description: $desc, body: $body }),*];
    };
}

registry! {
    "closure-determinism", "enumerating a group twice gives the same element order" => closure_determinism;
    "class-centralizer", "|Cl(g)| * |C(g)| = |G| for every class" => class_centralizer;
    "family-profiles", "constructed groups have their advertised order, center and flags" => family_profiles;
    "extraspecial-degrees", "extraspecial p^(1+2m) has p^(2m) linear and p-1 characters of degree p^m" => extraspecial_degrees;
    "table-orthogonality", "both orthogonality relations hold exactly" => table_orthogonality;
    "table-agreement", "Dixon tables equal the analytic abelian and VZ tables" => table_agreement;
    "vz-quotients", "G/Z and G' are elementary abelian and |nl(G)| = |Z| - |Z|/|G'|" => vz_quotients;
    "vz-vanish-off-center", "nonlinear characters of VZ groups vanish outside the center" => vz_vanish_off_center;
    "vz-center-restriction", "nonlinear characters restrict to Z as a multiple of a linear character" => vz_center_restriction;
    "vz-kernel-meets-derived", "for d(G') >= 2 every nonlinear kernel meets G' nontrivially" => vz_kernel_meets_derived;
    "vz-kernel-dichotomy", "for d(G') >= 2 a nontrivial proper character kernel contains G' or lies properly in Z meeting G'" => vz_kernel_dichotomy;
    "camina-class-bound", "Camina p-groups have nilpotency class at most 3" => camina_class_bound;
    "camina-vanishing", "(G, N) is a Camina pair iff every character outside Irr(G/N) vanishes off N" => camina_vanishing;
    "orbit-sums-rational", "each Galois orbit sums to a rational integer class function" => orbit_sums_rational;
    "degree-chain", "c <= q <= mu on every nontrivial group" => degree_chain;
    "m-of-p-group", "for p-groups the optimal witness has m = xi(1)/(p-1)" => m_of_p_group;
    "abelian-t", "abelian p-groups up to order 200 have c = q = mu = T" => abelian_t;
    "abelian-c6-rule", "c(C6) = 4 and c equals the abelian rule on all abelian groups up to order 100" => abelian_c6_rule;
    "quaternion-gap", "c(Q8) = 4 < q = mu = 8 while c(D8) = q = mu = 4" => quaternion_gap;
    "odd-p-chain", "odd p-groups up to order 512 have c = q = mu" => odd_p_chain;
    "mu-additive", "mu(H x K) = mu(H) + mu(K) for nilpotent pairs" => mu_additive;
    "vz-center-basis", "the aligned-basis value equals c and optimal witnesses have k nonlinear and r-k linear orbits" => vz_center_basis;
    "vz-center-scaling", "VZ p-groups with r = k have c = |G:Z|^(1/2) c(Z)" => vz_center_scaling;
    "odd-order-vz", "odd-order VZ groups have c = q = mu" => odd_order_vz;
    "camina3", "class-3 Camina instance: profile, degrees, witnesses in Irr(G|Z) and the center-scaling value" => camina3;
}

pub fn checks() -> &'static [&'static dyn Check] {
    CHECKS
}

pub fn check(name: &str) -> Result<&'static dyn Check> {
    CHECKS
        .iter()
        .copied()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "check",
            name: name.to_string(),
        })
}

fn entries(ctx: &mut Context, specs: &[String]) -> Result<Vec<std::rc::Rc<Entry>>> {
    specs.iter().map(|s| ctx.entry(s)).collect()
}

fn all_entries(ctx: &mut Context) -> Result<Vec<std::rc::Rc<Entry>>> {
    let specs = ctx.corpus.all();
    entries(ctx, &specs)
}

fn vz_entries(ctx: &mut Context) -> Result<Vec<std::rc::Rc<Entry>>> {
    let specs = ctx.corpus.vz.clone();
    Ok(entries(ctx, &specs)?.into_iter().filter(|e| e.profile().is_vz).collect())
}

fn vz_p_entries(ctx: &mut Context) -> Result<Vec<std::rc::Rc<Entry>>> {
    Ok(vz_entries(ctx)?
        .into_iter()
        .filter(|e| e.profile().p_group_prime.is_some())
        .collect())
}

/// Invariants written in an `abelian:` spec, sorted.
fn spec_invariants(spec: &str) -> Vec<u64> {
    let mut v: Vec<u64> = spec
        .strip_prefix("abelian:")
        .unwrap_or("")
        .split(',')
        .filter_map(|t| t.trim().parse().ok())
        .filter(|&q| q > 1)
        .collect();
    v.sort_unstable();
    v
}

fn as_group(group: &FiniteGroup, h: &Subgroup) -> Result<FiniteGroup> {
    let gens = h.generators.iter().map(|&g| group.element(g).clone()).collect();
    FiniteGroup::from_generators(group.degree(), gens)
}

fn is_elementary(group: &FiniteGroup, top: &Subgroup, bottom: &Subgroup, p: u64) -> bool {
    top.elements.iter().all(|a| {
        bottom.contains(group.pow(a, p))
            && top.generators.iter().all(|&b| bottom.contains(group.commutator(a, b)))
    })
}

fn closure_determinism(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)? {
        let again = build_group_with(&e.spec, &ctx.options.build)?;
        let same = again.elements() == e.group.elements()
            && again
                .classes()
                .iter()
                .zip(e.group.classes())
                .all(|(a, b)| a.members == b.members);
        t.case(&e.spec, same, || "second enumeration differs".into());
    }
    Ok(())
}

fn class_centralizer(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)? {
        let g = &e.group;
        let bad = g.classes().iter().find(|c| {
            let x = c.representative;
            let cent = (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            c.size() * cent != g.order()
        });
        t.case(&e.spec, bad.is_none(), || {
            format!("class of element {} fails", bad.unwrap().representative)
        });
    }
    Ok(())
}

fn family_profiles(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let abelian: Vec<String> = ctx.corpus.abelian_p.iter().chain(&ctx.corpus.abelian).cloned().collect();
    for e in entries(ctx, &abelian)? {
        let inv = spec_invariants(&e.spec);
        let order: u64 = inv.iter().product();
        let Some(mut got) = t.guard(&e.spec, abelian_invariants(&e.group, &e.group.whole()))? else {
            continue;
        };
        got.retain(|&q| q > 1);
        got.sort_unstable();
        t.case(
            &e.spec,
            e.group.is_abelian() && e.group.order() as u64 == order && got == inv,
            || format!("order {} invariants {got:?}", e.group.order()),
        );
    }
    let extraspecial = ctx.corpus.extraspecial.clone();
    for (p, m, spec) in extraspecial {
        let e = ctx.entry(&spec)?;
        let g = &e.group;
        let z = g.center();
        let d = g.derived_subgroup();
        let ok = g.order() as u64 == p.pow(1 + 2 * m)
            && z.order() as u64 == p
            && z.elements == d.elements
            && e.profile().is_vz
            && g.is_camina_pair(&d)?;
        t.case(&spec, ok, || format!("order {}, |Z| = {}, |G'| = {}", g.order(), z.order(), d.order()));
    }
    let pairs = ctx.corpus.pairs.clone();
    for (a, b) in pairs {
        let spec = Corpus::product_of(&a, &b);
        let (h, k, g) = (ctx.entry(&a)?, ctx.entry(&b)?, ctx.entry(&spec)?);
        let ok = g.group.order() == h.group.order() * k.group.order()
            && g.group.degree() == h.group.degree() + k.group.degree()
            && g.profile().nilpotency_class.is_some();
        t.case(&spec, ok, || format!("order {}", g.group.order()));
    }
    Ok(())
}

fn extraspecial_degrees(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let extraspecial = ctx.corpus.extraspecial.clone();
    for (p, m, spec) in extraspecial {
        let e = ctx.entry(&spec)?;
        let Some(table) = t.guard(&spec, vz_table(&e.group))? else {
            continue;
        };
        let degrees = table.degrees();
        let linear = degrees.iter().filter(|&&d| d == 1).count() as u64;
        let big = degrees.iter().filter(|&&d| d == p.pow(m)).count() as u64;
        t.case(
            &spec,
            linear == p.pow(2 * m) && big == p - 1 && (linear + big) as usize == degrees.len(),
            || format!("degrees {degrees:?}"),
        );
    }
    Ok(())
}

fn table_orthogonality(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)? {
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let r = table.verify();
        t.case(&e.spec, r.is_ok(), || r.unwrap_err().to_string());
    }
    Ok(())
}

fn table_agreement(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let mut specs: Vec<String> = ctx.corpus.abelian_p.iter().chain(&ctx.corpus.abelian).cloned().collect();
    let mut seen = BTreeSet::new();
    specs.retain(|s| seen.insert(s.clone()));
    let vz: Vec<String> = vz_entries(ctx)?.iter().map(|e| e.spec.clone()).collect();
    for spec in specs.iter().chain(&vz) {
        let e = ctx.entry(spec)?;
        let analytic = if e.group.is_abelian() {
            abelian_table(&e.group)
        } else {
            vz_table(&e.group)
        };
        let Some(analytic) = t.guard(spec, analytic)? else {
            continue;
        };
        let Some(dixon) = t.guard(spec, dixon_table(&e.group, DEFAULT_DIXON_BOUND))? else {
            continue;
        };
        let verified = analytic.verify().and(dixon.verify());
        t.case(spec, verified.is_ok() && dixon.same_rows(&analytic), || match verified {
            Err(err) => err.to_string(),
            Ok(()) => "rows differ".into(),
        });
    }
    Ok(())
}

fn vz_quotients(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let listed = ctx.corpus.vz.clone();
    for e in entries(ctx, &listed)? {
        if !e.profile().is_vz {
            t.case(&e.spec, false, || "listed as VZ but is not".into());
            continue;
        }
        let g = &e.group;
        let z = g.center();
        let d = g.derived_subgroup();
        let Some((p, _)) = prime_power(d.order() as u64) else {
            t.case(&e.spec, false, || format!("|G'| = {} is not a prime power", d.order()));
            continue;
        };
        let whole = g.whole();
        let trivial = g.trivial_subgroup();
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let nonlinear = table.degrees().iter().filter(|&&d| d > 1).count();
        let expected = z.order() - z.order() / d.order();
        t.case(
            &e.spec,
            is_elementary(g, &whole, &z, p) && is_elementary(g, &d, &trivial, p) && nonlinear == expected,
            || format!("|nl(G)| = {nonlinear}, expected {expected}"),
        );
    }
    Ok(())
}

fn vz_vanish_off_center(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in vz_entries(ctx)? {
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let ok = table.characters.iter().filter(|c| c.degree() > 1).all(|c| {
            c.values
                .iter()
                .zip(&table.class_sizes)
                .all(|(v, &size)| size == 1 || v.is_zero())
        });
        t.case(&e.spec, ok, || "a nonlinear character is nonzero off the center".into());
    }
    Ok(())
}

fn vz_center_restriction(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in vz_entries(ctx)? {
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let g = &e.group;
        let z = g.center();
        let n = table.conductor;
        let ok = table.characters.iter().filter(|c| c.degree() > 1).all(|chi| {
            let deg = Cyclotomic::from_int(n, chi.degree() as i64);
            let values: std::collections::HashMap<usize, Cyclotomic> = restrict_to(g, chi, &z).into_iter().collect();
            // χ(x)χ(y) = χ(1)χ(xy) on Z, with |χ(x)| = χ(1)
            z.elements.iter().all(|x| {
                let vx = &values[&x];
                &(vx * &vx.conj()) == &(&deg * &deg)
                    && z.elements.iter().all(|y| &(vx * &values[&y]) == &(&deg * &values[&g.mul(x, y)]))
            })
        });
        t.case(&e.spec, ok, || "restriction to Z is not a multiple of a linear character".into());
    }
    Ok(())
}

fn d_derived_at_least_two(e: &Entry) -> bool {
    e.profile().d_derived.is_some_and(|k| k >= 2)
}

fn vz_kernel_meets_derived(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in vz_p_entries(ctx)?.into_iter().filter(|e| d_derived_at_least_two(e)) {
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let d = e.group.derived_subgroup();
        let ok = table
            .characters
            .iter()
            .filter(|c| c.degree() > 1)
            .all(|c| kernel_of(&e.group, c).elements.intersection_count(&d.elements) > 1);
        t.case(&e.spec, ok, || "a nonlinear kernel meets G' trivially".into());
    }
    Ok(())
}

fn vz_kernel_dichotomy(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in vz_p_entries(ctx)?.into_iter().filter(|e| d_derived_at_least_two(e)) {
        let g = &e.group;
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let z = g.center();
        let d = g.derived_subgroup();
        let bad = table.characters.iter().map(|chi| kernel_of(g, chi)).find(|n| {
            let proper = n.order() < g.order() && !n.is_trivial();
            let contains = d.elements.is_subset(&n.elements);
            let inside = n.elements.is_subset(&z.elements)
                && n.order() < z.order()
                && n.elements.intersection_count(&d.elements) > 1;
            proper && !contains && !inside
        });
        t.case(&e.spec, bad.is_none(), || {
            format!("kernel of order {} violates the dichotomy", bad.unwrap().order())
        });
    }
    Ok(())
}

fn camina_class_bound(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)?.into_iter().filter(|e| e.profile().is_camina) {
        let class = e.profile().nilpotency_class;
        t.case(&e.spec, class.is_some_and(|c| c <= 3), || format!("nilpotency class {class:?}"));
    }
    Ok(())
}

fn camina_vanishing(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)?.into_iter().filter(|e| !e.group.is_abelian()) {
        let g = &e.group;
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        for (label, n) in [("G'", g.derived_subgroup()), ("Z", g.center())] {
            let pair = g.is_camina_pair(&n)?;
            let vanish = table.characters.iter().all(|chi| {
                let outside = !n.elements.is_subset(&kernel_of(g, chi).elements);
                !outside
                    || g.classes()
                        .iter()
                        .zip(&chi.values)
                        .all(|(c, v)| n.contains(c.representative) || v.is_zero())
            });
            t.case(&format!("{} with N = {label}", e.spec), pair == vanish, || {
                format!("Camina pair {pair} but vanishing {vanish}")
            });
        }
    }
    Ok(())
}

fn orbit_sums_rational(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)? {
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let orbits = e.orbits()?;
        let n = table.conductor;
        let ok = orbits.iter().all(|o| {
            (0..table.class_count()).all(|c| {
                let sum = o
                    .members
                    .iter()
                    .fold(Cyclotomic::zero(n), |acc, &r| &acc + &table.characters[r].values[c]);
                sum.as_integer() == Some(o.theta[c])
            })
        });
        let covered: usize = orbits.iter().map(|o| o.members.len()).sum();
        t.case(&e.spec, ok && covered == table.characters.len(), || {
            "an orbit sum is not the recorded integer function".into()
        });
    }
    Ok(())
}

fn degree_chain(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)?.into_iter().filter(|e| e.group.order() > 1) {
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        let Some(mu) = t.guard(&e.spec, e.mu())? else {
            continue;
        };
        let q = match q_of(&e.group, e.orbits()?, None, e.mu_bound(), e.search()) {
            Ok(q) => Some(q.value),
            Err(Error::SchurIndicesUnknown) => None,
            Err(err) => return Err(err),
        };
        let ok = match q {
            Some(q) => c.total <= q && q <= mu.total,
            None => c.total <= mu.total,
        };
        t.case(&e.spec, ok, || format!("c = {}, q = {q:?}, mu = {}", c.total, mu.total));
    }
    Ok(())
}

fn m_of_p_group(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in all_entries(ctx)?.into_iter().filter(|e| e.profile().p_group_prime.is_some()) {
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        t.case(&e.spec, m_of_p_group_check(c, &e.group), || {
            format!("xi(1) = {}, m = {}", c.degree, c.m)
        });
    }
    Ok(())
}

fn abelian_t(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let specs = ctx.corpus.abelian_p.clone();
    for e in entries(ctx, &specs)? {
        let expected = t_of_invariants(&spec_invariants(&e.spec));
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        let Some(mu) = t.guard(&e.spec, e.mu())? else {
            continue;
        };
        let Some(q) = t.guard(&e.spec, q_of(&e.group, e.orbits()?, None, e.mu_bound(), e.search()))? else {
            continue;
        };
        t.case(
            &e.spec,
            c.total == expected && q.value == expected && mu.total == expected,
            || format!("c = {}, q = {}, mu = {}, T = {expected}", c.total, q.value, mu.total),
        );
    }
    Ok(())
}

fn abelian_c6_rule(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let specs = ctx.corpus.abelian.clone();
    if specs.is_empty() {
        return Ok(());
    }
    let c6 = ctx.entry("abelian:2,3")?;
    if let Some(c) = t.guard("abelian:2,3", c6.c())? {
        t.case("c(C6)", c.total == 4, || format!("c = {}", c.total));
    }
    for e in entries(ctx, &specs)? {
        let rule = c_abelian_of_invariants(&spec_invariants(&e.spec));
        let Some(from_group) = t.guard(&e.spec, c_abelian_formula(&e.group))? else {
            continue;
        };
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        t.case(&e.spec, c.total == rule && from_group == rule, || {
            format!("c = {}, rule = {rule}, rule on computed invariants = {from_group}", c.total)
        });
    }
    Ok(())
}

fn quaternion_gap(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for (spec, expected) in [("extraspecial:2,1,q", (4, 8, 8)), ("extraspecial:2,1,d", (4, 4, 4))] {
        if !ctx.corpus.vz.iter().any(|s| s == spec) {
            continue;
        }
        let e = ctx.entry(spec)?;
        let Some(c) = t.guard(spec, e.c())? else {
            continue;
        };
        let Some(mu) = t.guard(spec, e.mu())? else {
            continue;
        };
        let Some(q) = t.guard(spec, q_of(&e.group, e.orbits()?, None, e.mu_bound(), e.search()))? else {
            continue;
        };
        let got = (c.total, q.value, mu.total);
        t.case(spec, got == expected, || format!("(c, q, mu) = {got:?}, expected {expected:?}"));
    }
    Ok(())
}

fn odd_p_chain(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let odd: Vec<_> = all_entries(ctx)?
        .into_iter()
        .filter(|e| e.profile().p_group_prime.is_some_and(|p| p != 2) && e.group.order() <= 512)
        .collect();
    for e in odd {
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        let Some(mu) = t.guard(&e.spec, e.mu())? else {
            continue;
        };
        let Some(q) = t.guard(&e.spec, q_of(&e.group, e.orbits()?, None, e.mu_bound(), e.search()))? else {
            continue;
        };
        t.case(&e.spec, c.total == q.value && q.value == mu.total, || {
            format!("c = {}, q = {}, mu = {}", c.total, q.value, mu.total)
        });
    }
    Ok(())
}

fn mu_additive(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    let pairs = ctx.corpus.pairs.clone();
    for (a, b) in pairs {
        let spec = Corpus::product_of(&a, &b);
        let (h, k, g) = (ctx.entry(&a)?, ctx.entry(&b)?, ctx.entry(&spec)?);
        if [&h, &k, &g].iter().any(|e| e.profile().nilpotency_class.is_none()) {
            t.case(&spec, false, || "factor is not nilpotent".into());
            continue;
        }
        let (Some(mh), Some(mk), Some(mg)) = (t.guard(&a, h.mu())?, t.guard(&b, k.mu())?, t.guard(&spec, g.mu())?) else {
            continue;
        };
        t.case(&spec, mg.total == mh.total + mk.total, || {
            format!("mu = {}, factors {} + {}", mg.total, mh.total, mk.total)
        });
    }
    Ok(())
}

fn vz_center_basis(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in vz_p_entries(ctx)? {
        let Some(table) = t.guard(&e.spec, e.table())? else {
            continue;
        };
        let Some(formula) = t.guard(&e.spec, c_vz_formula(&e.group, table))? else {
            continue;
        };
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        let orbits = e.orbits()?;
        let Some(all) = t.guard(&e.spec, optimal_witnesses(&e.group, orbits, e.search()))? else {
            continue;
        };
        let (r, k) = (formula.basis.r(), formula.basis.k);
        let prof = e.profile();
        let shape_ok = all.iter().all(|w| {
            let nonlinear = w.orbits.iter().filter(|&&i| !orbits[i].is_linear()).count();
            nonlinear == k && w.orbits.len() - nonlinear == r - k
        });
        t.case(
            &e.spec,
            formula.value == c.total
                && !all.is_empty()
                && shape_ok
                && prof.d_center == r
                && prof.d_derived == Some(k),
            || format!("formula {} vs c {}, r = {r}, k = {k}, shapes ok = {shape_ok}", formula.value, c.total),
        );
    }
    Ok(())
}

fn vz_center_scaling(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in vz_p_entries(ctx)? {
        let prof = e.profile();
        if prof.d_derived != Some(prof.d_center) {
            continue;
        }
        let g = &e.group;
        let z = g.center();
        let Some(zg) = t.guard(&e.spec, as_group(g, &z))? else {
            continue;
        };
        let Some(zt) = t.guard(&e.spec, build_table("auto", &zg))? else {
            continue;
        };
        let Some(cz) = t.guard(&e.spec, c_search(&zg, &zt))? else {
            continue;
        };
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        let scale = exact_sqrt((g.order() / z.order()) as u64).unwrap_or(0);
        let closed = center_scaling(g).ok();
        t.case(
            &e.spec,
            c.total == scale * cz.total && closed == Some(c.total),
            || format!("c = {}, |G:Z|^(1/2) c(Z) = {} * {}, closed form {closed:?}", c.total, scale, cz.total),
        );
    }
    Ok(())
}

fn odd_order_vz(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    for e in vz_entries(ctx)?.into_iter().filter(|e| e.group.order() % 2 == 1) {
        let Some(c) = t.guard(&e.spec, e.c())? else {
            continue;
        };
        let Some(mu) = t.guard(&e.spec, e.mu())? else {
            continue;
        };
        let orbits = e.orbits()?;
        // odd-order nilpotent groups have all rational Schur indices equal to 1
        let ones = vec![1u32; orbits.len()];
        let indices = e.profile().p_group_prime.is_none().then_some(ones.as_slice());
        let Some(q) = t.guard(&e.spec, q_of(&e.group, orbits, indices, e.mu_bound(), e.search()))? else {
            continue;
        };
        t.case(&e.spec, c.total == q.value && q.value == mu.total, || {
            format!("c = {}, q = {}, mu = {}", c.total, q.value, mu.total)
        });
    }
    Ok(())
}

fn camina3(ctx: &mut Context, t: &mut Tally) -> Result<()> {
    if !ctx.options.include_camina3 {
        t.skip("not requested; class-2 Camina groups are covered by vz-center-scaling");
        return Ok(());
    }
    let path = ctx.options.build.resolve(CAMINA3_FILE);
    if !path.exists() {
        t.skip(format!("no verified class-3 Camina instance ({CAMINA3_FILE}) is shipped"));
        return Ok(());
    }
    let label = path.display().to_string();
    let Some((group, params)) = t.guard(&label, load_camina3_instance(&path, ctx.options.build.config))? else {
        return Ok(());
    };
    let (p, n) = (params.p, params.n);
    let Some(table) = t.guard(&label, build_table("auto", &group))? else {
        return Ok(());
    };
    let z = group.center();
    let mut degrees: Vec<u64> = table.character_degrees();
    degrees.dedup();
    let expected = vec![1, p.pow(n), p.pow(3 * n / 2)];
    t.case(&label, degrees == expected, || format!("cd(G) = {degrees:?}, expected {expected:?}"));

    let outside_z = |row: usize| !z.elements.is_subset(&kernel_of(&group, &table.characters[row]).elements);
    let partition_ok = (0..table.characters.len()).all(|r| {
        let d = table.characters[r].degree();
        if outside_z(r) {
            d == p.pow(3 * n / 2)
        } else {
            d == 1 || d == p.pow(n)
        }
    });
    t.case(&format!("{label} partition"), partition_ok, || {
        "Irr(G) is not lin(G) + nl(G/Z) + Irr(G|Z)".into()
    });

    let orbits = crate::quasiperm::galois_orbits(&table);
    let Some(c) = t.guard(&label, c_search_with(&group, &orbits, None, &ctx.options.search))? else {
        return Ok(());
    };
    let Some(all) = t.guard(&label, optimal_witnesses(&group, &orbits, &ctx.options.search))? else {
        return Ok(());
    };
    let inside = all
        .iter()
        .all(|w| w.orbits.iter().all(|&i| outside_z(orbits[i].representative)));
    t.case(&format!("{label} witnesses"), inside, || "an optimal witness leaves Irr(G|Z)".into());

    let formula = c_camina3_formula(&group)?;
    let scaling = center_scaling(&group).ok();
    let r = params.r as u64;
    t.case(
        &format!("{label} value"),
        c.total == formula && scaling == Some(formula) && formula == r * p.pow(3 * n / 2 + 1),
        || format!("c = {}, formula {formula}, scaling {scaling:?}", c.total),
    );
    Ok(())
}
