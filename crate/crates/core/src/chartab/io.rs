//! `.ctbl` text format: a header with the order, conductor, provenance and one
//! line per class (size and representative), then one row per character with
//! values separated by `|`.

use super::table::{Character, CharacterTable, Provenance};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{FiniteGroup, Permutation};

pub fn write_ctbl(group: &FiniteGroup, table: &CharacterTable) -> String {
    let mut out = String::new();
    out.push_str(&format!("order {}\n", table.order));
    out.push_str(&format!("conductor {}\n", table.conductor));
    out.push_str(&format!("provenance {}\n", table.provenance));
    out.push_str(&format!("classes {}\n", table.class_count()));
    for (size, &rep) in table.class_sizes.iter().zip(&table.class_reps) {
        out.push_str(&format!("class {size} {}\n", group.element(rep)));
    }
    for chi in &table.characters {
        let vals: Vec<String> = chi.values.iter().map(ToString::to_string).collect();
        out.push_str(&format!("row {}\n", vals.join(" | ")));
    }
    out
}

fn field<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    line.and_then(|l| l.strip_prefix(key))
        .and_then(|rest| rest.strip_prefix(' '))
        .map(str::trim)
        .ok_or_else(|| Error::parse(format!("expected '{key} ...' line")))
}

fn number(line: Option<&str>, key: &str) -> Result<usize> {
    let v = field(line, key)?;
    v.parse().map_err(|_| Error::parse(format!("bad {key} value '{v}'")))
}

/// Parse a table written by [`write_ctbl`] for the same group; class
/// representatives and sizes must match the group's classes.
pub fn parse_ctbl(text: &str, group: &FiniteGroup) -> Result<CharacterTable> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let order = number(lines.next(), "order")?;
    let conductor = number(lines.next(), "conductor")? as u32;
    let provenance = match field(lines.next(), "provenance")? {
        "analytic-abelian" => Provenance::AnalyticAbelian,
        "analytic-vz" => Provenance::AnalyticVz,
        "dixon" => Provenance::Dixon,
        "file" => Provenance::File,
        other => return Err(Error::parse(format!("unknown provenance '{other}'"))),
    };
    let k = number(lines.next(), "classes")?;
    if order != group.order() || k != group.classes().len() {
        return Err(Error::parse("table header does not match the group"));
    }
    for (c, class) in group.classes().iter().enumerate() {
        let rest = field(lines.next(), "class")?;
        let (size, rep) = rest
            .split_once(' ')
            .ok_or_else(|| Error::parse(format!("bad class line '{rest}'")))?;
        let rep = Permutation::parse_cycles(group.degree(), rep)?;
        let idx = group
            .index_of(&rep)
            .ok_or_else(|| Error::parse(format!("class representative {rep} not in the group")))?;
        if size.parse::<usize>().ok() != Some(class.size()) || group.class_of(idx) != c {
            return Err(Error::parse(format!("class line {} does not match the group", c + 1)));
        }
    }
    let mut characters = Vec::with_capacity(k);
    for line in lines {
        let rest = field(Some(line), "row")?;
        let values = rest
            .split('|')
            .map(|v| Cyclotomic::parse_in(v, conductor))
            .collect::<Result<Vec<_>>>()?;
        if values.len() != k {
            return Err(Error::parse(format!("row has {} values, expected {k}", values.len())));
        }
        if values.iter().any(|v| v.conductor() != conductor) {
            return Err(Error::parse("value outside the declared conductor"));
        }
        characters.push(Character { values });
    }
    let mut table = CharacterTable::new(group, characters, provenance);
    table.conductor = conductor;
    Ok(table)
}
