use super::abelian::abelian_table;
use super::dixon::{dixon_table, DEFAULT_DIXON_BOUND};
use super::table::CharacterTable;
use super::vz::vz_table;
use crate::error::{Error, Result};
use crate::perm::profile::is_vz;
use crate::perm::FiniteGroup;

/// A way of building the character table of a group.
pub trait TableMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn applies(&self, group: &FiniteGroup) -> bool;
    fn build(&self, group: &FiniteGroup) -> Result<CharacterTable>;
}

struct Abelian;
struct Vz;
struct Dixon {
    bound: usize,
}
struct Auto;

impl TableMethod for Abelian {
    fn name(&self) -> &'static str {
        "abelian"
    }
    fn applies(&self, group: &FiniteGroup) -> bool {
        group.is_abelian()
    }
    fn build(&self, group: &FiniteGroup) -> Result<CharacterTable> {
        abelian_table(group)
    }
}

impl TableMethod for Vz {
    fn name(&self) -> &'static str {
        "vz"
    }
    fn applies(&self, group: &FiniteGroup) -> bool {
        is_vz(group)
    }
    fn build(&self, group: &FiniteGroup) -> Result<CharacterTable> {
        vz_table(group)
    }
}

impl TableMethod for Dixon {
    fn name(&self) -> &'static str {
        "dixon"
    }
    fn applies(&self, group: &FiniteGroup) -> bool {
        group.order() <= self.bound
    }
    fn build(&self, group: &FiniteGroup) -> Result<CharacterTable> {
        dixon_table(group, self.bound)
    }
}

impl TableMethod for Auto {
    fn name(&self) -> &'static str {
        "auto"
    }
    fn applies(&self, group: &FiniteGroup) -> bool {
        REGISTRY[..3].iter().any(|m| m.applies(group))
    }
    fn build(&self, group: &FiniteGroup) -> Result<CharacterTable> {
        let method = REGISTRY[..3]
            .iter()
            .find(|m| m.applies(group))
            .ok_or_else(|| Error::NotApplicable("auto".into()))?;
        method.build(group)
    }
}

static REGISTRY: [&dyn TableMethod; 4] = [
    &Abelian,
    &Vz,
    &Dixon {
        bound: DEFAULT_DIXON_BOUND,
    },
    &Auto,
];

pub fn table_methods() -> &'static [&'static dyn TableMethod] {
    &REGISTRY
}

pub fn table_method(name: &str) -> Result<&'static dyn TableMethod> {
    REGISTRY
        .iter()
        .copied()
        .find(|m| m.name() == name)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "table method",
            name: name.to_string(),
        })
}

/// Build with a named method, refusing groups it does not apply to.
pub fn build_table(name: &str, group: &FiniteGroup) -> Result<CharacterTable> {
    let m = table_method(name)?;
    if !m.applies(group) {
        return Err(Error::NotApplicable(name.to_string()));
    }
    m.build(group)
}
