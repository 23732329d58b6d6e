use std::fmt;

use serde::Serialize;

use super::abelian::abelian_invariants;
use super::group::{FiniteGroup, Subgroup};
use crate::numbers::{factorize, prime_power};

/// Parameters of a Camina p-group of class 3: `|G/G₂| = p^{2n}`,
/// `|G₂/G₃| = pⁿ`, and `Z(G) ≅ C_p^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Camina3Params {
    pub p: u64,
    pub n: u32,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub order: usize,
    pub class_count: usize,
    pub exponent: u64,
    pub nilpotency_class: Option<usize>,
    pub p_group_prime: Option<u64>,
    pub is_abelian: bool,
    pub is_vz: bool,
    pub is_camina: bool,
    pub camina_class: Option<usize>,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelian_invariants_of_center: Vec<u64>,
    /// Minimal number of generators of `Z(G)`.
    pub d_center: usize,
    /// Minimal number of generators of `G′` when it is abelian.
    pub d_derived: Option<usize>,
    pub camina3: Option<Camina3Params>,
}

/// Minimal number of generators of an abelian group from its primary invariants.
pub fn rank_of_invariants(invariants: &[u64]) -> usize {
    let mut best = 0;
    let mut i = 0;
    while i < invariants.len() {
        let p = prime_power(invariants[i]).map(|x| x.0);
        let j = (i..invariants.len())
            .find(|&j| prime_power(invariants[j]).map(|x| x.0) != p)
            .unwrap_or(invariants.len());
        best = best.max(j - i);
        i = j;
    }
    best
}

fn is_elementary_abelian_section(group: &FiniteGroup, top: &Subgroup, bottom: &Subgroup, p: u64) -> bool {
    // top/bottom has exponent p and is abelian
    top.generators.iter().all(|&a| {
        bottom.contains(group.pow(a, p))
            && top
                .generators
                .iter()
                .all(|&b| bottom.contains(group.commutator(a, b)))
    })
}

/// VZ test without characters: `G` is nonabelian and every class outside the
/// center has size `|G′|`.
pub fn is_vz(group: &FiniteGroup) -> bool {
    if group.is_abelian() {
        return false;
    }
    let derived = group.derived_subgroup().order();
    group
        .classes()
        .iter()
        .all(|c| c.size() == 1 || c.size() == derived)
}

/// The first violated class-3 Camina constraint, if any; `Ok` carries the
/// recorded parameters.
pub fn check_camina3(group: &FiniteGroup) -> Result<Camina3Params, String> {
    let Some((p, _)) = prime_power(group.order() as u64) else {
        return Err("not a p-group".into());
    };
    if group.is_abelian() {
        return Err("abelian (class 1)".into());
    }
    let series = group.lower_central_series();
    let class = series.len() - 1;
    if !series.last().unwrap().is_trivial() || class != 3 {
        return Err(format!("nilpotency class {class}, expected 3"));
    }
    let (g1, g2, g3) = (&series[0], &series[1], &series[2]);
    if !group.camina_condition(g2) {
        return Err("(G, G') is not a Camina pair".into());
    }
    let exp = |a: usize, b: usize| -> u32 { prime_power((a / b) as u64).map_or(0, |x| x.1) };
    let m = exp(g1.order(), g2.order());
    let n = exp(g2.order(), g3.order());
    if m != 2 * n {
        return Err(format!("|G/G2| = p^{m} but |G2/G3| = p^{n}"));
    }
    if n % 2 != 0 {
        return Err(format!("n = {n} is odd"));
    }
    for (name, top, bottom) in [
        ("G/G2", g1, g2),
        ("G2/G3", g2, g3),
        ("G3", g3, &group.trivial_subgroup()),
    ] {
        if !is_elementary_abelian_section(group, top, bottom, p) {
            return Err(format!("{name} is not elementary abelian"));
        }
    }
    let z = group.center();
    if z.elements != g3.elements {
        return Err("Z(G) differs from G3".into());
    }
    if group.upper_central_term(2).elements != g2.elements {
        return Err("Z2(G) differs from G2".into());
    }
    if !group.camina_condition(g3) {
        return Err("(G, G3) is not a Camina pair".into());
    }
    let r = prime_power(z.order() as u64).map_or(0, |x| x.1 as usize);
    Ok(Camina3Params { p, n, r })
}

pub fn profile(group: &FiniteGroup) -> GroupProfile {
    let is_abelian = group.is_abelian();
    let center = group.center();
    let derived = group.derived_subgroup();
    let center_invariants =
        abelian_invariants(group, &center).expect("the center is abelian");
    let derived_abelian = derived.generators.iter().all(|&a| {
        derived
            .generators
            .iter()
            .all(|&b| group.mul(a, b) == group.mul(b, a))
    });
    let d_derived = derived_abelian.then(|| {
        rank_of_invariants(&abelian_invariants(group, &derived).expect("checked abelian"))
    });
    let p_group_prime = match factorize(group.order() as u64).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    };
    let nilpotency_class = group.nilpotency_class();
    let is_camina = !is_abelian && group.camina_condition(&derived);
    let camina_class = if is_camina && p_group_prime.is_some() {
        nilpotency_class
    } else {
        None
    };
    let camina3 = if camina_class == Some(3) {
        check_camina3(group).ok()
    } else {
        None
    };
    GroupProfile {
        order: group.order(),
        class_count: group.classes().len(),
        exponent: group.exponent(),
        nilpotency_class,
        p_group_prime,
        is_abelian,
        is_vz: is_vz(group),
        is_camina,
        camina_class,
        center_order: center.order(),
        derived_order: derived.order(),
        d_center: rank_of_invariants(&center_invariants),
        abelian_invariants_of_center: center_invariants,
        d_derived,
        camina3,
    }
}

impl fmt::Display for GroupProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "classes: {}", self.class_count)?;
        writeln!(f, "exponent: {}", self.exponent)?;
        match self.nilpotency_class {
            Some(c) => writeln!(f, "nilpotency class: {c}")?,
            None => writeln!(f, "nilpotency class: not nilpotent")?,
        }
        match self.p_group_prime {
            Some(p) => writeln!(f, "p-group: p = {p}")?,
            None => writeln!(f, "p-group: no")?,
        }
        writeln!(f, "abelian: {}", yes_no(self.is_abelian))?;
        writeln!(f, "center: order {} {:?}", self.center_order, self.abelian_invariants_of_center)?;
        writeln!(f, "derived subgroup: order {}", self.derived_order)?;
        writeln!(f, "VZ: {}", yes_no(self.is_vz))?;
        match self.camina_class {
            Some(c) => writeln!(f, "Camina: yes, class {c}")?,
            None => writeln!(f, "Camina: {}", yes_no(self.is_camina))?,
        }
        if let Some(c3) = self.camina3 {
            writeln!(f, "Camina class 3 parameters: p = {}, n = {}, r = {}", c3.p, c3.n, c3.r)?;
        }
        write!(f, "r = d(Z) = {}", self.d_center)?;
        match self.d_derived {
            Some(k) => write!(f, ", k = d(G') = {k}"),
            None => write!(f, ", G' nonabelian"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank_of_invariants(&[]), 0);
        assert_eq!(rank_of_invariants(&[2, 2, 4, 3]), 3);
        assert_eq!(rank_of_invariants(&[4, 3, 9]), 2);
    }
}
