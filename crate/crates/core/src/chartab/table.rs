use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::{field, Cyclotomic};
use crate::error::{Error, Result};
use crate::numbers::factorize;
use crate::perm::{BitSet, FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    AnalyticAbelian,
    AnalyticVz,
    Dixon,
    File,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::AnalyticAbelian => "analytic-abelian",
            Provenance::AnalyticVz => "analytic-vz",
            Provenance::Dixon => "dixon",
            Provenance::File => "file",
        })
    }
}

/// A class function given by one value per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn degree(&self) -> u64 {
        self.values[0]
            .as_integer()
            .and_then(|d| u64::try_from(d).ok())
            .expect("character degree is a positive integer")
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| *v == self.values[0]) && self.degree() == 1
    }

    /// Classes on which the character takes its degree.
    pub fn kernel_classes(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&c| self.values[c] == self.values[0])
            .collect()
    }

    fn sort_key(&self) -> (u64, bool, Vec<String>) {
        (
            self.degree(),
            !self.is_trivial(),
            self.values.iter().map(ToString::to_string).collect(),
        )
    }
}

/// Irreducible characters of a group, rows in canonical order: by degree,
/// the trivial character first, then by the rendering of the values.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub order: usize,
    /// Common conductor of all values (the group exponent).
    pub conductor: u32,
    pub class_sizes: Vec<usize>,
    /// Element index of each class representative.
    pub class_reps: Vec<usize>,
    /// `inverse_class[c]` is the class of `g⁻¹` for `g` in class `c`.
    pub inverse_class: Vec<usize>,
    pub characters: Vec<Character>,
    pub provenance: Provenance,
}

impl CharacterTable {
    pub(crate) fn new(
        group: &FiniteGroup,
        mut characters: Vec<Character>,
        provenance: Provenance,
    ) -> CharacterTable {
        let conductor = group.exponent() as u32;
        characters.sort_by_cached_key(Character::sort_key);
        CharacterTable {
            order: group.order(),
            conductor,
            class_sizes: group.classes().iter().map(|c| c.size()).collect(),
            class_reps: group.classes().iter().map(|c| c.representative).collect(),
            inverse_class: group
                .classes()
                .iter()
                .map(|c| group.class_of(group.inv(c.representative)))
                .collect(),
            characters,
            provenance,
        }
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(Character::degree).collect()
    }

    /// Distinct character degrees, ascending.
    pub fn character_degrees(&self) -> Vec<u64> {
        let mut d = self.degrees();
        d.dedup();
        d
    }

    /// Exact check of the row count, degree sum, and both orthogonality relations.
    pub fn verify(&self) -> Result<()> {
        let k = self.class_count();
        if self.characters.len() != k {
            return Err(Error::TableInvariant(format!(
                "{} characters for {k} classes",
                self.characters.len()
            )));
        }
        let deg_sq: u64 = self.degrees().iter().map(|d| d * d).sum();
        if deg_sq != self.order as u64 {
            return Err(Error::TableInvariant(format!(
                "sum of squared degrees is {deg_sq}, expected {}",
                self.order
            )));
        }
        let sparse = SparseValues::new(self);
        let mut scratch = sparse.scratch();
        let n = self.order as i128;
        for i in 0..k {
            for j in i..k {
                let s = sparse.row_product(&mut scratch, i, j, &self.class_sizes);
                let expected = if i == j { n } else { 0 };
                if s != Some(expected) {
                    return Err(Error::TableInvariant(format!(
                        "rows {i} and {j} have inner product {s:?}, expected {expected}"
                    )));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let s = sparse.column_product(&mut scratch, a, b);
                let expected = if a == b {
                    n / self.class_sizes[a] as i128
                } else {
                    0
                };
                if s != Some(expected) {
                    return Err(Error::TableInvariant(format!(
                        "columns {a} and {b} have inner product {s:?}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether two tables have the same rows up to order (exact comparison).
    pub fn same_rows(&self, other: &CharacterTable) -> bool {
        if self.class_sizes != other.class_sizes || self.characters.len() != other.characters.len() {
            return false;
        }
        let mut used = vec![false; other.characters.len()];
        self.characters.iter().all(|row| {
            match (0..other.characters.len()).find(|&j| !used[j] && other.characters[j] == *row) {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
    }
}

/// Kernel `{g : χ(g) = χ(1)}` as a subgroup of `group`.
pub fn kernel_of(group: &FiniteGroup, chi: &Character) -> Subgroup {
    let bits = kernel_bits(group, chi);
    group.subgroup_from_elements(bits)
}

pub(crate) fn kernel_bits(group: &FiniteGroup, chi: &Character) -> BitSet {
    BitSet::from_indices(
        group.order(),
        chi.kernel_classes()
            .into_iter()
            .flat_map(|c| group.classes()[c].members.iter().copied()),
    )
}

/// Values of `χ` on the conjugacy classes of `H`, as `(representative, value)`
/// pairs; classes of `H` are ordered by smallest element.
pub fn restrict_to(group: &FiniteGroup, chi: &Character, h: &Subgroup) -> Vec<(usize, Cyclotomic)> {
    let mut done = BitSet::new(group.order());
    let mut out = Vec::new();
    for g in h.elements.iter() {
        if done.contains(g) {
            continue;
        }
        let mut orbit = vec![g];
        done.insert(g);
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &s in &h.generators {
                let y = group.conjugate(x, s);
                if done.insert(y) {
                    orbit.push(y);
                }
            }
        }
        out.push((g, chi.values[group.class_of(g)].clone()));
    }
    out
}

/// Shrink the support of `Σ c_k ζ^k` by subtracting multiples of the
/// vanishing sums `Σ_j ζ^{i + jn/p}` for each prime `p | n`.
fn sparsify(coeffs: &mut [i128], primes: &[usize]) {
    let n = coeffs.len();
    for &p in primes {
        let step = n / p;
        for i in 0..step {
            let mut vals: Vec<i128> = (0..p).map(|j| coeffs[i + j * step]).collect();
            vals.sort_unstable();
            let (mut mode, mut best, mut run) = (0i128, 0usize, 0usize);
            for (t, &v) in vals.iter().enumerate() {
                run = if t > 0 && vals[t - 1] == v { run + 1 } else { 1 };
                if run > best || (run == best && v == 0) {
                    best = run;
                    mode = v;
                }
            }
            if mode != 0 {
                for j in 0..p {
                    coeffs[i + j * step] -= mode;
                }
            }
        }
    }
}

/// Character values as sparse integer coefficient lists over exponents, for
/// fast exact inner products.
struct SparseValues {
    n: usize,
    classes: usize,
    field: std::sync::Arc<crate::cyclo::FieldData>,
    /// Terms of row `r` at class `c` are `terms[start[r*classes + c]..start[r*classes + c + 1]]`.
    start: Vec<usize>,
    terms: Vec<(usize, i64)>,
}

impl SparseValues {
    fn new(table: &CharacterTable) -> Self {
        let f = field(table.conductor);
        let n = f.n as usize;
        let primes: Vec<usize> = factorize(n as u64).iter().map(|&(p, _)| p as usize).collect();
        let mut start = vec![0];
        let mut terms = Vec::new();
        let mut dense = vec![0i128; n];
        for chi in &table.characters {
            for v in &chi.values {
                let v = v.lift(table.conductor);
                for (k, c) in v.terms() {
                    assert!(c.is_integer(), "character values are algebraic integers");
                    dense[*k as usize] = i128::try_from(c.to_integer()).expect("small coefficient");
                }
                if v.terms().len() > 2 {
                    sparsify(&mut dense, &primes);
                }
                for (k, c) in dense.iter_mut().enumerate() {
                    if *c != 0 {
                        terms.push((k, i64::try_from(*c).expect("small coefficient")));
                        *c = 0;
                    }
                }
                start.push(terms.len());
            }
        }
        SparseValues {
            n,
            classes: table.class_count(),
            field: f,
            start,
            terms,
        }
    }

    #[inline]
    fn value(&self, row: usize, class: usize) -> &[(usize, i64)] {
        let i = row * self.classes + class;
        &self.terms[self.start[i]..self.start[i + 1]]
    }

    fn scratch(&self) -> Scratch {
        Scratch {
            exps: vec![0; self.n],
            touched: Vec::new(),
            out: vec![0; self.field.phi],
            out_touched: Vec::new(),
        }
    }

    /// Reduce the accumulated exponent sum mod `Φ_n`, clearing the scratch,
    /// and return it if it is a rational integer.
    fn reduce_to_integer(&self, s: &mut Scratch) -> Option<i128> {
        for &k in &s.touched {
            let c = std::mem::take(&mut s.exps[k]);
            if c != 0 {
                for &(i, p) in &self.field.sparse_powers[k] {
                    let i = i as usize;
                    if s.out[i] == 0 {
                        s.out_touched.push(i);
                    }
                    s.out[i] += c * p as i128;
                }
            }
        }
        s.touched.clear();
        let mut integer = true;
        for &i in &s.out_touched {
            if i != 0 && s.out[i] != 0 {
                integer = false;
            }
        }
        let value = std::mem::take(&mut s.out[0]);
        for &i in &s.out_touched {
            s.out[i] = 0;
        }
        s.out_touched.clear();
        integer.then_some(value)
    }

    #[inline]
    fn add_term(&self, s: &mut Scratch, a: usize, b: usize, v: i128) {
        let k = if a >= b { a - b } else { a + self.n - b };
        if s.exps[k] == 0 {
            s.touched.push(k);
        }
        s.exps[k] += v;
    }

    /// `Σ_c h_c χ_i(c) conj(χ_j(c))`.
    fn row_product(&self, s: &mut Scratch, i: usize, j: usize, sizes: &[usize]) -> Option<i128> {
        for (c, &h) in sizes.iter().enumerate() {
            for &(a, x) in self.value(i, c) {
                for &(b, y) in self.value(j, c) {
                    self.add_term(s, a, b, h as i128 * x as i128 * y as i128);
                }
            }
        }
        self.reduce_to_integer(s)
    }

    /// `Σ_χ χ(a) conj(χ(b))`.
    fn column_product(&self, s: &mut Scratch, a: usize, b: usize) -> Option<i128> {
        for row in 0..(self.start.len() - 1) / self.classes {
            for &(u, x) in self.value(row, a) {
                for &(t, y) in self.value(row, b) {
                    self.add_term(s, u, t, x as i128 * y as i128);
                }
            }
        }
        self.reduce_to_integer(s)
    }
}

/// Reusable buffers for the inner products.
struct Scratch {
    exps: Vec<i128>,
    touched: Vec<usize>,
    out: Vec<i128>,
    out_touched: Vec<usize>,
}
