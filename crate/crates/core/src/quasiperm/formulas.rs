use std::collections::BTreeMap;

use serde::Serialize;

use crate::chartab::{kernel_bits, CharacterTable};
use crate::error::{Error, Result};
use crate::numbers::{exact_sqrt, prime_power};
use crate::perm::abelian::abelian_invariants;
use crate::perm::profile::{check_camina3, is_vz};
use crate::perm::{BitSet, FiniteGroup, GroupProfile};

/// Cyclic decomposition `Z(G) = ⟨a_1⟩ × … × ⟨a_r⟩`, `|a_i| = p^{l_i}`, with
/// `G′` generated by the socle elements `a_i^{p^{l_i − 1}}` for `i < k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlignedBasis {
    pub p: u64,
    pub generators: Vec<usize>,
    pub exponents: Vec<u32>,
    pub k: usize,
}

impl AlignedBasis {
    pub fn r(&self) -> usize {
        self.generators.len()
    }
}

fn vz_prime(group: &FiniteGroup) -> Result<u64> {
    match prime_power(group.order() as u64) {
        Some((p, _)) if is_vz(group) => Ok(p),
        None if is_vz(group) => Err(Error::NotApplicable("VZ formula on a group that is not a p-group".into())),
        _ => Err(Error::NotVZ),
    }
}

fn socle_element(group: &FiniteGroup, x: usize, p: u64) -> usize {
    group.pow(x, group.element_order(x) / p)
}

/// `⟨span, x⟩` when `⟨x⟩ ∩ span = 1`.
fn direct_extend(group: &FiniteGroup, span: &BitSet, x: usize) -> Option<BitSet> {
    let o = group.element_order(x);
    let mut powers = Vec::with_capacity(o as usize);
    let mut y = group.identity();
    for _ in 0..o {
        if y != group.identity() && span.contains(y) {
            return None;
        }
        powers.push(y);
        y = group.mul(y, x);
    }
    let mut out = BitSet::new(group.order());
    for s in span.iter() {
        for &q in &powers {
            out.insert(group.mul(s, q));
        }
    }
    Some(out)
}

struct Aligner<'a> {
    group: &'a FiniteGroup,
    p: u64,
    k: usize,
    center: BitSet,
    derived: BitSet,
    /// Central elements by decreasing order, then index.
    pool: Vec<usize>,
}

impl Aligner<'_> {
    fn dfs(&self, chosen: &mut Vec<usize>, span: &BitSet, socle_span: &BitSet) -> bool {
        if span.count() == self.center.count() {
            return chosen.len() >= self.k;
        }
        let aligning = chosen.len() < self.k;
        for &x in &self.pool {
            let s = socle_element(self.group, x, self.p);
            if aligning && (!self.derived.contains(s) || socle_span.contains(s)) {
                continue;
            }
            let Some(next) = direct_extend(self.group, span, x) else {
                continue;
            };
            let next_socle = if aligning {
                direct_extend(self.group, socle_span, s).expect("s lies outside the socle span")
            } else {
                socle_span.clone()
            };
            chosen.push(x);
            if self.dfs(chosen, &next, &next_socle) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Basis of the center aligned with the derived subgroup, for VZ p-groups.
pub fn aligned_center_basis(group: &FiniteGroup) -> Result<AlignedBasis> {
    let p = vz_prime(group)?;
    let center = group.center();
    let derived = group.derived_subgroup();
    if !derived.is_subgroup_of(&center) {
        return Err(Error::NotVZ);
    }
    let k = prime_power(derived.order() as u64).map_or(0, |x| x.1 as usize);
    let mut pool: Vec<usize> = center.elements.iter().filter(|&x| x != group.identity()).collect();
    pool.sort_by_key(|&x| (std::cmp::Reverse(group.element_order(x)), x));
    let aligner = Aligner {
        group,
        p,
        k,
        center: center.elements.clone(),
        derived: derived.elements.clone(),
        pool,
    };
    let trivial = group.trivial_subgroup().elements;
    let mut chosen = Vec::new();
    if !aligner.dfs(&mut chosen, &trivial, &trivial) {
        return Err(Error::AlignmentFailure);
    }
    let exponents = chosen
        .iter()
        .map(|&a| prime_power(group.element_order(a)).map_or(0, |x| x.1))
        .collect();
    Ok(AlignedBasis {
        p,
        generators: chosen,
        exponents,
        k,
    })
}

/// Value of the VZ degree formula with the characters realizing it.
#[derive(Debug, Clone, Serialize)]
pub struct VzFormula {
    pub value: u64,
    pub basis: AlignedBasis,
    /// `|G : Z(G)|^{1/2}`.
    pub scale: u64,
    /// Nonlinear rows `χ_1..χ_k` with `ker χ_i = Ĥ_i`.
    pub nonlinear: Vec<usize>,
    /// Linear rows `ψ_{k+1}..ψ_r` with `ker ψ_i ∩ Z(G) = Ĥ_i`, each of least order.
    pub linear: Vec<usize>,
    /// `p^{m_i} = |G : ker ψ_i|` for the linear rows.
    pub linear_orders: Vec<u64>,
}

/// `c(G) = |G:Z|^{1/2} Σ_{i≤k} p^{l_i} + Σ_{i>k} p^{m_i}` for a VZ p-group,
/// with `Ĥ_i` the product of all basis factors but the `i`-th.
pub fn c_vz_formula(group: &FiniteGroup, table: &CharacterTable) -> Result<VzFormula> {
    let basis = aligned_center_basis(group)?;
    let center = group.center();
    let scale = exact_sqrt((group.order() / center.order()) as u64).ok_or(Error::NotVZ)?;
    let kernels: Vec<BitSet> = table.characters.iter().map(|chi| kernel_bits(group, chi)).collect();
    let complement = |i: usize| -> BitSet {
        let gens: Vec<usize> = (0..basis.r()).filter(|&j| j != i).map(|j| basis.generators[j]).collect();
        group.closure(&gens).elements
    };
    let mut value = 0u64;
    let mut nonlinear = Vec::new();
    let mut linear = Vec::new();
    let mut linear_orders = Vec::new();
    for i in 0..basis.r() {
        let hat = complement(i);
        let h_order = basis.p.pow(basis.exponents[i]);
        if i < basis.k {
            let row = (0..table.characters.len())
                .find(|&r| table.characters[r].degree() > 1 && kernels[r] == hat)
                .ok_or(Error::AlignmentFailure)?;
            nonlinear.push(row);
            value += scale * h_order;
        } else {
            let (order, row) = (0..table.characters.len())
                .filter(|&r| table.characters[r].degree() == 1)
                .filter(|&r| kernels[r].intersection(&center.elements) == hat)
                .map(|r| ((group.order() / kernels[r].count()) as u64, r))
                .min()
                .ok_or(Error::AlignmentFailure)?;
            linear.push(row);
            linear_orders.push(order);
            value += order;
        }
    }
    Ok(VzFormula {
        value,
        basis,
        scale,
        nonlinear,
        linear,
        linear_orders,
    })
}

/// `T(A)`: the sum of the primary invariants.
pub fn t_of_invariants(invariants: &[u64]) -> u64 {
    invariants.iter().filter(|&&q| q > 1).sum()
}

/// `T(A) − n` with `n = min(#C2, #C3)` primary summands.
pub fn c_abelian_of_invariants(invariants: &[u64]) -> u64 {
    let twos = invariants.iter().filter(|&&q| q == 2).count();
    let threes = invariants.iter().filter(|&&q| q == 3).count();
    t_of_invariants(invariants) - twos.min(threes) as u64
}

pub fn c_abelian_formula(group: &FiniteGroup) -> Result<u64> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    Ok(c_abelian_of_invariants(&abelian_invariants(group, &group.whole())?))
}

/// `r·p^{3n/2 + 1}` for a Camina p-group of class 3 with `|G/G₂| = p^{2n}`
/// and `Z(G)` elementary abelian of rank `r`.
pub fn c_camina3_formula(group: &FiniteGroup) -> Result<u64> {
    let params = check_camina3(group).map_err(Error::NotCaminaClass3)?;
    Ok(params.r as u64 * params.p.pow(3 * params.n / 2 + 1))
}

/// `|G : Z(G)|^{1/2} · c(Z(G))` with `c(Z)` from the abelian rule.
pub fn center_scaling(group: &FiniteGroup) -> Result<u64> {
    let z = group.center();
    let scale = exact_sqrt((group.order() / z.order()) as u64)
        .ok_or_else(|| Error::NotApplicable("center-scaling".into()))?;
    Ok(scale * c_abelian_of_invariants(&abelian_invariants(group, &z)?))
}

/// A closed-form value for `c(G)` on the groups it covers.
pub trait Formula: Send + Sync {
    fn name(&self) -> &'static str;
    fn applies(&self, profile: &GroupProfile) -> bool;
    fn evaluate(&self, group: &FiniteGroup, table: &CharacterTable) -> Result<u64>;
}

struct AbelianRule;
struct VzBasis;
struct VzScaling;
struct CaminaScaling;

impl Formula for AbelianRule {
    fn name(&self) -> &'static str {
        "abelian-c6-rule"
    }
    fn applies(&self, profile: &GroupProfile) -> bool {
        profile.is_abelian
    }
    fn evaluate(&self, group: &FiniteGroup, _: &CharacterTable) -> Result<u64> {
        c_abelian_formula(group)
    }
}

impl Formula for VzBasis {
    fn name(&self) -> &'static str {
        "vz-center-basis"
    }
    fn applies(&self, profile: &GroupProfile) -> bool {
        profile.is_vz && profile.p_group_prime.is_some()
    }
    fn evaluate(&self, group: &FiniteGroup, table: &CharacterTable) -> Result<u64> {
        Ok(c_vz_formula(group, table)?.value)
    }
}

impl Formula for VzScaling {
    fn name(&self) -> &'static str {
        "vz-center-scaling"
    }
    fn applies(&self, profile: &GroupProfile) -> bool {
        profile.is_vz && profile.p_group_prime.is_some() && profile.d_derived == Some(profile.d_center)
    }
    fn evaluate(&self, group: &FiniteGroup, _: &CharacterTable) -> Result<u64> {
        center_scaling(group)
    }
}

impl Formula for CaminaScaling {
    fn name(&self) -> &'static str {
        "camina3-center-scaling"
    }
    fn applies(&self, profile: &GroupProfile) -> bool {
        profile.camina3.is_some()
    }
    fn evaluate(&self, group: &FiniteGroup, _: &CharacterTable) -> Result<u64> {
        c_camina3_formula(group)
    }
}

static FORMULAS: [&dyn Formula; 4] = [&AbelianRule, &VzBasis, &VzScaling, &CaminaScaling];

pub fn formulas() -> &'static [&'static dyn Formula] {
    &FORMULAS
}

pub fn formula(name: &str) -> Result<&'static dyn Formula> {
    FORMULAS
        .iter()
        .copied()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "formula",
            name: name.to_string(),
        })
}

/// Every applicable formula evaluated, keyed by name.
pub fn evaluate_formulas(
    group: &FiniteGroup,
    table: &CharacterTable,
    profile: &GroupProfile,
) -> Result<BTreeMap<String, u64>> {
    FORMULAS
        .iter()
        .filter(|f| f.applies(profile))
        .map(|f| Ok((f.name().to_string(), f.evaluate(group, table)?)))
        .collect()
}
