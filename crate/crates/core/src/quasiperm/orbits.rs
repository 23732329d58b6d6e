use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::cyclo::{stabilizer_and_orbit, Cyclotomic, GaloisElement};
use crate::perm::BitSet;

/// A class of Galois-conjugate irreducible characters over `Q`.
#[derive(Debug, Clone, Serialize)]
pub struct GaloisOrbit {
    /// Row indices in the table, ascending; the first is the representative.
    pub members: Vec<usize>,
    pub representative: usize,
    /// Orbit sum, one rational integer per class.
    pub theta: Vec<i64>,
    /// Common kernel of the members, as a set of class indices.
    #[serde(skip)]
    pub kernel: BitSet,
    pub kernel_order: usize,
    /// `ψ(1)` of the representative.
    pub degree: u64,
    /// `|Γ(ψ)|·ψ(1)`, which is `Θ(1)`.
    pub d: u64,
    /// `|min_g Θ(g)|`; zero for the trivial character.
    pub m: u64,
    pub schur_index: Option<u32>,
}

impl GaloisOrbit {
    pub fn is_trivial(&self) -> bool {
        self.kernel.count() == self.kernel.len()
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }
}

/// Partition of `Irr(G)` into Galois orbits, ordered by representative row;
/// orbit 0 holds the trivial character.
pub fn galois_orbits(table: &CharacterTable) -> Vec<GaloisOrbit> {
    let rows = &table.characters;
    let mut assigned = vec![false; rows.len()];
    let mut out = Vec::new();
    for start in 0..rows.len() {
        if assigned[start] {
            continue;
        }
        let values = &rows[start].values;
        let (_, reps) = stabilizer_and_orbit(values);
        let field = values.iter().map(Cyclotomic::conductor).fold(1u32, num_integer::lcm);
        let mut members = Vec::with_capacity(reps.len());
        for k in reps {
            let sigma = GaloisElement::new(field, k as i64).expect("orbit representatives are units");
            let image: Vec<Cyclotomic> = values.iter().map(|v| sigma.apply(v)).collect();
            let row = (0..rows.len())
                .find(|&r| !assigned[r] && rows[r].values == image)
                .expect("Galois conjugates of an irreducible character are irreducible");
            assigned[row] = true;
            members.push(row);
        }
        members.sort_unstable();
        let theta: Vec<i64> = (0..table.class_count())
            .map(|c| {
                let sum = members
                    .iter()
                    .fold(Cyclotomic::zero(1), |acc, &r| &acc + &rows[r].values[c]);
                sum.as_integer().expect("orbit sums are rational integers")
            })
            .collect();
        let kernel = BitSet::from_indices(table.class_count(), rows[start].kernel_classes());
        let kernel_order = kernel.iter().map(|c| table.class_sizes[c]).sum();
        let degree = rows[start].degree();
        let d = members.len() as u64 * degree;
        let trivial = kernel.count() == table.class_count();
        let m = if trivial {
            0
        } else {
            theta.iter().min().copied().unwrap_or(0).unsigned_abs()
        };
        out.push(GaloisOrbit {
            representative: members[0],
            members,
            theta,
            kernel,
            kernel_order,
            degree,
            d,
            m,
            schur_index: None,
        });
    }
    out
}
