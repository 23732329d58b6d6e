use super::table::{Character, CharacterTable, Provenance};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::abelian::{decompose_quotient, AbelianDecomposition};
use crate::perm::FiniteGroup;

/// Linear characters of `G` lifted from `G/N`, with `labels[g]` the coset
/// label of each element. Values are at conductor `e`.
pub(crate) fn linear_characters(
    group: &FiniteGroup,
    decomposition: &AbelianDecomposition,
    labels: &[usize],
    e: u32,
) -> Vec<Character> {
    let orders = &decomposition.orders;
    let total: u64 = orders.iter().product();
    let reps: Vec<usize> = group.classes().iter().map(|c| c.representative).collect();
    (0..total)
        .map(|mut idx| {
            // mixed-radix digits give the character's exponents on the basis
            let digits: Vec<u64> = orders
                .iter()
                .map(|&o| {
                    let d = idx % o;
                    idx /= o;
                    d
                })
                .collect();
            let values = reps
                .iter()
                .map(|&g| {
                    let coords = &decomposition.coords[labels[g]];
                    let exp: u64 = digits
                        .iter()
                        .zip(coords)
                        .zip(orders)
                        .map(|((&a, &c), &o)| a * c % o * (e as u64 / o))
                        .sum();
                    Cyclotomic::root_of_unity(e, (exp % e as u64) as i64)
                })
                .collect();
            Character { values }
        })
        .collect()
}

/// Character table of an abelian group from its primary decomposition.
pub fn abelian_table(group: &FiniteGroup) -> Result<CharacterTable> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let (d, labels) = decompose_quotient(group, &group.trivial_subgroup())?;
    let chars = linear_characters(group, &d, &labels, group.exponent() as u32);
    Ok(CharacterTable::new(group, chars, Provenance::AnalyticAbelian))
}
