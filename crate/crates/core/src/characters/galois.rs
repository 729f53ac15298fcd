use serde::Serialize;

use super::{evaluate_cyclotomic, CharacterTable};
use crate::group::{gcd, units_mod, PowerMaps};
use crate::{Error, Result};

/// Stabilisers `H_chi = {k in U(Z_m) : chi^(sigma_k) = chi}` for every row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisData {
    pub exponent: u64,
    pub units: Vec<u64>,
    pub stabilizers: Vec<Vec<u64>>,
}

impl GaloisData {
    pub fn stabilizer(&self, chi: usize) -> &[u64] {
        &self.stabilizers[chi]
    }
}

/// `chi^(sigma_k)(C) = chi(C^k)`, so `k` fixes `chi` exactly when the row is
/// invariant under the `k`-th power map on classes.
pub fn galois_stabilizers(table: &CharacterTable, powers: &PowerMaps) -> Result<GaloisData> {
    let units = powers.units();
    let mut stabilizers = vec![Vec::new(); table.num_characters()];
    for &k in &units {
        let map = powers
            .maps
            .get(&k)
            .ok_or_else(|| Error::Schema(format!("missing power map for unit {k}")))?;
        if map.len() != table.num_classes() {
            return Err(Error::Schema(format!("power map {k} has the wrong length")));
        }
        for (chi, stab) in stabilizers.iter_mut().enumerate() {
            let fixed = (0..table.num_classes())
                .all(|j| (table.value(chi, map[j]) - table.value(chi, j)).norm() < table.tolerance());
            if fixed {
                stab.push(k);
            }
        }
    }
    Ok(GaloisData {
        exponent: powers.exponent,
        units,
        stabilizers,
    })
}

/// Stabilisers read off exact cyclotomic values: `sigma_k` sends
/// `sum c_j z^j` to `sum c_j z^(jk)`.
pub(crate) fn galois_from_cyclotomic(table: &CharacterTable) -> Option<GaloisData> {
    let ex = table.exact()?;
    let units = units_mod(ex.exponent);
    let mut stabilizers = vec![Vec::new(); table.num_characters()];
    for &k in &units {
        for (chi, stab) in stabilizers.iter_mut().enumerate() {
            let fixed = (0..table.num_classes()).all(|j| {
                let moved = evaluate_cyclotomic(ex.exponent, &ex.coefficients[chi][j], k);
                (moved - table.value(chi, j)).norm() < table.tolerance()
            });
            if fixed {
                stab.push(k);
            }
        }
    }
    Some(GaloisData {
        exponent: ex.exponent,
        units,
        stabilizers,
    })
}

/// Subgroup of `U(Z_m)` generated by `gens`.
pub fn generated_unit_subgroup(m: u64, gens: &[u64]) -> Vec<u64> {
    if m <= 1 {
        return vec![0];
    }
    let mut member = vec![false; m as usize];
    member[1] = true;
    let mut out = vec![1u64];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &g in gens {
            if gcd(g % m, m) != 1 {
                continue;
            }
            let y = (x * (g % m)) % m;
            if !member[y as usize] {
                member[y as usize] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// True when the stabilisers of the characters in `chars` together generate
/// the whole unit group, i.e. the intersection of their fixed fields is `Q`.
pub fn rational_intersection(chars: &[usize], galois: &GaloisData) -> bool {
    let gens: Vec<u64> = chars
        .iter()
        .flat_map(|&c| galois.stabilizers[c].iter().copied())
        .collect();
    generated_unit_subgroup(galois.exponent, &gens).len() == galois.units.len()
}
