use super::abelian::linear_characters;
use super::table::{Character, CharacterTable, Provenance};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::numbers::exact_sqrt;
use crate::perm::abelian::{decompose_quotient, decompose_subgroup};
use crate::perm::profile::is_vz;
use crate::perm::FiniteGroup;

/// Character table of a VZ-group: the linear characters of `G/G′`, and for
/// each `λ ∈ Irr(Z(G))` not trivial on `G′` the character equal to
/// `|G/Z|^{1/2} λ` on the center and zero elsewhere.
pub fn vz_table(group: &FiniteGroup) -> Result<CharacterTable> {
    if !is_vz(group) {
        return Err(Error::NotVZ);
    }
    let e = group.exponent() as u32;
    let derived = group.derived_subgroup();
    let center = group.center();
    let (dq, labels) = decompose_quotient(group, &derived)?;
    let mut chars = linear_characters(group, &dq, &labels, e);

    let f = exact_sqrt((group.order() / center.order()) as u64)
        .ok_or_else(|| Error::TableInvariant("|G/Z| is not a square".into()))? as i64;
    let (dz, z_elems) = decompose_subgroup(group, &center)?;
    let mut z_label = vec![usize::MAX; group.order()];
    for (i, &g) in z_elems.iter().enumerate() {
        z_label[g] = i;
    }
    let orders = &dz.orders;
    let total: u64 = orders.iter().product();
    for mut idx in 0..total {
        let digits: Vec<u64> = orders
            .iter()
            .map(|&o| {
                let d = idx % o;
                idx /= o;
                d
            })
            .collect();
        let lambda = |g: usize| -> u64 {
            let coords = &dz.coords[z_label[g]];
            digits
                .iter()
                .zip(coords)
                .zip(orders)
                .map(|((&a, &c), &o)| a * c % o * (e as u64 / o))
                .sum::<u64>()
                % e as u64
        };
        if derived.elements.iter().all(|g| lambda(g) == 0) {
            continue;
        }
        let values = group
            .classes()
            .iter()
            .map(|c| {
                let g = c.representative;
                if center.contains(g) {
                    &Cyclotomic::root_of_unity(e, lambda(g) as i64) * &Cyclotomic::from_int(e, f)
                } else {
                    Cyclotomic::zero(e)
                }
            })
            .collect();
        chars.push(Character { values });
    }
    Ok(CharacterTable::new(group, chars, Provenance::AnalyticVz))
}
