//! Group constructors addressed by spec strings such as `abelian:2,4,3`,
//! `extraspecial:3,1,p`, `product:(abelian:3)x(extraspecial:2,1,q)` or
//! `file:PATH`.

mod pgroups;

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::perm::io::load_group_file;
use crate::perm::profile::check_camina3;
use crate::perm::{Camina3Params, FiniteGroup, GroupConfig, Permutation};

pub use pgroups::{extraspecial, heisenberg, ExtraspecialType};

/// Environment variable naming the directory searched for `file:` specs.
pub const DATA_ENV: &str = "MINFAITH_DATA";

/// Settings shared by all family builders.
#[derive(Debug, Clone)]
pub struct BuildContext {
    pub config: GroupConfig,
    pub data_dir: Option<PathBuf>,
}

impl Default for BuildContext {
    fn default() -> Self {
        BuildContext {
            config: GroupConfig::default(),
            data_dir: std::env::var_os(DATA_ENV).map(PathBuf::from),
        }
    }
}

impl BuildContext {
    pub fn resolve(&self, path: &str) -> PathBuf {
        let direct = PathBuf::from(path);
        if direct.exists() {
            return direct;
        }
        match &self.data_dir {
            Some(dir) if dir.join(path).exists() => dir.join(path),
            _ => direct,
        }
    }
}

/// A named group constructor taking the text after `name:`.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;
    fn build(&self, params: &str, ctx: &BuildContext) -> Result<FiniteGroup>;
}

fn parse_list(params: &str) -> Result<Vec<u64>> {
    params
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(format!("bad number '{t}' in '{params}'")))
        })
        .collect()
}

struct Abelian;
struct Extraspecial;
struct Heisenberg;
struct Product;
struct File;

impl Family for Abelian {
    fn name(&self) -> &'static str {
        "abelian"
    }
    fn build(&self, params: &str, ctx: &BuildContext) -> Result<FiniteGroup> {
        let orders = if params.trim().is_empty() {
            Vec::new()
        } else {
            parse_list(params)?
        };
        abelian(&orders, ctx.config)
    }
}

impl Family for Extraspecial {
    fn name(&self) -> &'static str {
        "extraspecial"
    }
    fn build(&self, params: &str, ctx: &BuildContext) -> Result<FiniteGroup> {
        let parts: Vec<&str> = params.split(',').map(str::trim).collect();
        let [p, m, kind] = parts.as_slice() else {
            return Err(Error::parse(format!("extraspecial expects p,m,type, got '{params}'")));
        };
        let p = p.parse().map_err(|_| Error::parse(format!("bad prime '{p}'")))?;
        let m = m.parse().map_err(|_| Error::parse(format!("bad m '{m}'")))?;
        extraspecial(p, m, ExtraspecialType::parse(kind)?, ctx.config)
    }
}

impl Family for Heisenberg {
    fn name(&self) -> &'static str {
        "heisenberg"
    }
    fn build(&self, params: &str, ctx: &BuildContext) -> Result<FiniteGroup> {
        match parse_list(params)?.as_slice() {
            [p, n] => heisenberg(*p, *n as u32, ctx.config),
            _ => Err(Error::parse(format!("heisenberg expects p,n, got '{params}'"))),
        }
    }
}

impl Family for Product {
    fn name(&self) -> &'static str {
        "product"
    }
    fn build(&self, params: &str, ctx: &BuildContext) -> Result<FiniteGroup> {
        let factors = split_product(params)?;
        let mut acc: Option<FiniteGroup> = None;
        for f in factors {
            let g = build_group_with(f, ctx)?;
            acc = Some(match acc {
                None => g,
                Some(a) => a.direct_product(&g, ctx.config)?,
            });
        }
        acc.ok_or_else(|| Error::parse("empty product"))
    }
}

impl Family for File {
    fn name(&self) -> &'static str {
        "file"
    }
    fn build(&self, params: &str, ctx: &BuildContext) -> Result<FiniteGroup> {
        load_group_file(&ctx.resolve(params.trim()), ctx.config)
    }
}

static FAMILIES: [&dyn Family; 5] = [&Abelian, &Extraspecial, &Heisenberg, &Product, &File];

pub fn families() -> &'static [&'static dyn Family] {
    &FAMILIES
}

/// Split `(A)x(B)x…` into its parenthesized factors.
fn split_product(params: &str) -> Result<Vec<&str>> {
    let s = params.trim();
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    let mut expect_sep = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => {
                if depth == 0 {
                    if expect_sep {
                        return Err(Error::parse(format!("expected 'x' between factors in '{s}'")));
                    }
                    start = Some(i + 1);
                }
                depth += 1;
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(format!("unbalanced ')' in '{s}'")))?;
                if depth == 0 {
                    out.push(&s[start.take().unwrap()..i]);
                    expect_sep = true;
                }
            }
            'x' | ' ' if depth == 0 => {
                if ch == 'x' {
                    if !expect_sep {
                        return Err(Error::parse(format!("misplaced 'x' in '{s}'")));
                    }
                    expect_sep = false;
                }
            }
            _ if depth == 0 => {
                return Err(Error::parse(format!("unexpected '{ch}' in product '{s}'")));
            }
            _ => {}
        }
    }
    if depth != 0 || out.is_empty() || !expect_sep {
        return Err(Error::parse(format!("malformed product '{s}'")));
    }
    Ok(out)
}

pub fn build_group_with(spec: &str, ctx: &BuildContext) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let (kind, params) = spec
        .split_once(':')
        .ok_or_else(|| Error::parse(format!("group spec '{spec}' lacks 'kind:'")))?;
    let family = FAMILIES
        .iter()
        .find(|f| f.name() == kind)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "group family",
            name: kind.to_string(),
        })?;
    family.build(params, ctx)
}

pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    build_group_with(spec, &BuildContext::default())
}

/// Direct sum of cyclic groups of the given orders on disjoint cycles.
pub fn abelian(orders: &[u64], config: GroupConfig) -> Result<FiniteGroup> {
    let degree: u64 = orders.iter().sum();
    let size = orders.iter().try_fold(1u64, |a, &o| a.checked_mul(o));
    if orders.contains(&0) {
        return Err(Error::parse("cyclic factors must have positive order"));
    }
    match size {
        Some(s) if s as usize <= config.closure_bound => {}
        _ => {
            return Err(Error::BoundExceeded {
                what: "group order",
                size: size.map_or(usize::MAX, |s| s as usize),
                bound: config.closure_bound,
            })
        }
    }
    let degree = degree.max(1) as usize;
    let mut gens = Vec::new();
    let mut offset = 0usize;
    for &o in orders {
        let o = o as usize;
        if o > 1 {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in 0..o {
                images[offset + i] = (offset + (i + 1) % o) as u32;
            }
            gens.push(Permutation::new(images)?);
        }
        offset += o;
    }
    FiniteGroup::with_config(degree, gens, config)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, config: GroupConfig) -> Result<FiniteGroup> {
    g.direct_product(h, config)
}

/// Load a group file and verify the class-3 Camina constraints, naming the
/// first violated one on failure.
pub fn load_camina3_instance(path: &Path, config: GroupConfig) -> Result<(FiniteGroup, Camina3Params)> {
    let group = load_group_file(path, config)?;
    let params = check_camina3(&group).map_err(Error::NotCaminaClass3)?;
    Ok((group, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_splitting() {
        assert_eq!(split_product("(abelian:2)x(abelian:3)").unwrap(), vec!["abelian:2", "abelian:3"]);
        assert_eq!(
            split_product("(product:(abelian:2)x(abelian:2))x(abelian:3)").unwrap(),
            vec!["product:(abelian:2)x(abelian:2)", "abelian:3"]
        );
        assert!(split_product("(abelian:2)(abelian:3)").is_err());
        assert!(split_product("(abelian:2)x").is_err());
        assert!(split_product("abelian:2").is_err());
    }

    #[test]
    fn unknown_family() {
        assert!(matches!(build_group("cyclic:3"), Err(Error::UnknownStrategy { .. })));
        assert!(matches!(build_group("abelian"), Err(Error::Parse(_))));
    }
}
