use serde::Serialize;

use crate::characters::{generated_unit_subgroup, in_kernel, CharacterTable, GaloisData};
use crate::group::{derived_series_solvable, ConjugacyData, GroupTable};
use crate::{Error, Result};

/// Characters `Y` with `z` outside every kernel whose Galois stabilisers
/// generate all units: no normal connection set has MST on `<z>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonexistenceWitness {
    pub z: usize,
    pub characters: Vec<usize>,
}

pub fn nonexistence_witness(
    conj: &ConjugacyData,
    table: &CharacterTable,
    galois: &GaloisData,
    z: usize,
) -> Result<Option<NonexistenceWitness>> {
    if !conj.is_central(z) {
        return Err(Error::InvalidInput(format!("element {z} is not central")));
    }
    Ok(nonexistence_witness_classes(table, galois, conj.class_of(z)).map(|characters| NonexistenceWitness {
        z,
        characters,
    }))
}

/// Greedy search at class level: add characters with `z` outside the kernel
/// whenever their stabiliser enlarges the generated subgroup.
pub fn nonexistence_witness_classes(table: &CharacterTable, galois: &GaloisData, z_class: usize) -> Option<Vec<usize>> {
    let m = galois.exponent;
    let full = galois.units.len();
    let mut gens: Vec<u64> = Vec::new();
    let mut current = generated_unit_subgroup(m, &gens);
    let mut chosen = Vec::new();
    for chi in 0..table.num_characters() {
        if in_kernel(table, chi, z_class) {
            continue;
        }
        let mut trial = gens.clone();
        trial.extend_from_slice(galois.stabilizer(chi));
        let grown = generated_unit_subgroup(m, &trial);
        if grown.len() > current.len() || chosen.is_empty() {
            gens = trial;
            current = grown;
            chosen.push(chi);
        }
        if current.len() == full {
            return Some(chosen);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolvableReport {
    pub solvable: bool,
    pub derived_orders: Vec<usize>,
    /// True when `|S_e| = 6` is ruled out for every normal connection set.
    pub size_six_excluded: bool,
}

pub fn solvable_exclusion_report(group: &GroupTable) -> SolvableReport {
    let s = derived_series_solvable(group);
    SolvableReport {
        solvable: s.solvable,
        size_six_excluded: s.solvable,
        derived_orders: s.orders,
    }
}
