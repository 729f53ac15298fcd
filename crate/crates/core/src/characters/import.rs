use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::galois::{galois_from_cyclotomic, galois_stabilizers, GaloisData};
use super::{evaluate_cyclotomic, CharacterTable, CyclotomicValues, Provenance};
use crate::config::TABLE_TOL;
use crate::group::{gcd, lcm, units_mod, ConjugacyData, PowerMaps};
use crate::{Error, Result};

/// Largest disagreement tolerated between the two encodings of one value.
const ENCODING_AGREEMENT: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterTableDocument {
    pub group_order: usize,
    pub exponent: u64,
    pub class_sizes: Vec<usize>,
    pub class_rep_orders: Vec<u64>,
    #[serde(default)]
    pub class_power_maps: BTreeMap<String, Vec<usize>>,
    pub characters: Vec<CharacterEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic: Option<Vec<Vec<i64>>>,
}

/// A validated imported table plus the class data needed to run the
/// class-level criterion without the group itself.
#[derive(Debug, Clone)]
pub struct ImportedTable {
    pub table: CharacterTable,
    pub exponent: u64,
    pub class_rep_orders: Vec<u64>,
    /// Power maps keyed by the exponent `k`, as supplied.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    /// Class of the inverses, derived from conjugate columns.
    pub class_inv: Vec<usize>,
}

impl ImportedTable {
    pub fn is_central(&self, class: usize) -> bool {
        self.table.class_sizes()[class] == 1
    }

    pub fn central_classes(&self) -> Vec<usize> {
        (0..self.table.num_classes()).filter(|&j| self.is_central(j)).collect()
    }

    pub fn is_real(&self, class: usize) -> bool {
        self.class_inv[class] == class
    }

    /// Power maps for every unit mod the exponent, closed under composition
    /// from the supplied ones. `None` when they do not generate the units.
    pub fn unit_power_maps(&self) -> Option<PowerMaps> {
        let m = self.exponent;
        let r = self.table.num_classes();
        if m <= 1 {
            return Some(PowerMaps {
                exponent: m,
                maps: BTreeMap::from([(0, (0..r).collect())]),
            });
        }
        let mut maps: BTreeMap<u64, Vec<usize>> = BTreeMap::from([(1, (0..r).collect())]);
        let gens: Vec<(u64, &Vec<usize>)> = self
            .power_maps
            .iter()
            .filter(|(k, _)| gcd(**k % m, m) == 1)
            .map(|(k, v)| (*k % m, v))
            .collect();
        let mut frontier = vec![1u64];
        while let Some(a) = frontier.pop() {
            for &(k, map) in &gens {
                let key = (a * k) % m;
                if maps.contains_key(&key) {
                    continue;
                }
                let composed = maps[&a].iter().map(|&c| map[c]).collect();
                maps.insert(key, composed);
                frontier.push(key);
            }
        }
        (maps.len() == units_mod(m).len()).then_some(PowerMaps { exponent: m, maps })
    }

    /// Galois stabilisers from power maps, falling back to exact cyclotomic values.
    pub fn galois(&self) -> Result<GaloisData> {
        if let Some(pm) = self.unit_power_maps() {
            return galois_stabilizers(&self.table, &pm);
        }
        galois_from_cyclotomic(&self.table).ok_or_else(|| {
            Error::Schema("power maps do not generate the units and no cyclotomic values were given".into())
        })
    }

    pub fn to_document(&self) -> CharacterTableDocument {
        document(&self.table, self.exponent, &self.class_rep_orders, &self.power_maps)
    }
}

pub fn import_character_table(doc: &CharacterTableDocument) -> Result<ImportedTable> {
    let r = doc.class_sizes.len();
    if doc.class_rep_orders.len() != r {
        return Err(Error::Schema(format!(
            "{} representative orders for {r} classes",
            doc.class_rep_orders.len()
        )));
    }
    if doc.characters.len() != r {
        return Err(Error::Schema(format!("{} characters for {r} classes", doc.characters.len())));
    }
    if doc.class_sizes.iter().sum::<usize>() != doc.group_order {
        return Err(Error::Schema("class sizes do not sum to group_order".into()));
    }
    if r == 0 || doc.class_sizes[0] != 1 || doc.class_rep_orders[0] != 1 {
        return Err(Error::Schema("class 0 must be the identity class".into()));
    }
    let m = doc.exponent;
    if m == 0 || doc.class_rep_orders.iter().fold(1, |a, &o| lcm(a, o)) != m {
        return Err(Error::Schema(format!("exponent {m} is not the lcm of the representative orders")));
    }

    let mut power_maps = BTreeMap::new();
    for (k, map) in &doc.class_power_maps {
        let key: u64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Schema(format!("power map key '{k}' is not an integer")))?;
        if map.len() != r || map.iter().any(|&c| c >= r) {
            return Err(Error::Schema(format!("power map {k} is malformed")));
        }
        power_maps.insert(key, map.clone());
    }

    let mut values = Vec::with_capacity(r);
    let mut coefficients = Vec::with_capacity(r);
    let all_exact = doc.characters.iter().all(|c| c.cyclotomic.is_some());
    for (i, entry) in doc.characters.iter().enumerate() {
        let from_pairs = entry
            .values
            .as_ref()
            .map(|v| {
                if v.len() != r {
                    return Err(Error::Schema(format!("character {i} has {} values", v.len())));
                }
                Ok(v.iter().map(|[re, im]| Complex64::new(*re, *im)).collect::<Vec<_>>())
            })
            .transpose()?;
        let from_exact = entry
            .cyclotomic
            .as_ref()
            .map(|cs| {
                if cs.len() != r || cs.iter().any(|c| c.len() as u64 != m) {
                    return Err(Error::Schema(format!(
                        "character {i}: cyclotomic data must be {r} vectors of length {m}"
                    )));
                }
                Ok(cs.iter().map(|c| evaluate_cyclotomic(m, c, 1)).collect::<Vec<_>>())
            })
            .transpose()?;
        let row = match (from_pairs, from_exact) {
            (Some(a), Some(b)) => {
                if a.iter().zip(&b).any(|(x, y)| (x - y).norm() > ENCODING_AGREEMENT) {
                    return Err(Error::CorruptTable(format!(
                        "character {i}: complex and cyclotomic values disagree"
                    )));
                }
                b
            }
            (None, Some(b)) => b,
            (Some(a), None) => a,
            (None, None) => return Err(Error::Schema(format!("character {i} has no values"))),
        };
        values.push(row);
        if all_exact {
            coefficients.push(entry.cyclotomic.clone().unwrap());
        }
    }
    let exact = all_exact.then_some(CyclotomicValues {
        exponent: m,
        coefficients,
    });
    let degrees = doc.characters.iter().map(|c| c.degree).collect();
    let table = CharacterTable::new(
        values,
        degrees,
        doc.class_sizes.clone(),
        Provenance::Imported,
        TABLE_TOL,
        exact,
    )?;
    let class_inv = (0..r)
        .map(|j| {
            table
                .conjugate_class(j)
                .ok_or_else(|| Error::CorruptTable(format!("no column is conjugate to class {j}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ImportedTable {
        table,
        exponent: m,
        class_rep_orders: doc.class_rep_orders.clone(),
        power_maps,
        class_inv,
    })
}

/// Document for a table of an in-memory group. Power maps are emitted for
/// every prime below the exponent, which is enough for an importer to
/// recover the action of every unit.
pub fn export_character_table(table: &CharacterTable, conj: &ConjugacyData) -> CharacterTableDocument {
    let m = conj.exponent();
    let rep_orders: Vec<u64> = (0..conj.num_classes())
        .map(|j| conj.element_order(conj.representative(j)))
        .collect();
    let power_maps = (2..m.max(2))
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .map(|p| (p, conj.class_power(p as i64)))
        .collect();
    document(table, m, &rep_orders, &power_maps)
}

fn document(
    table: &CharacterTable,
    exponent: u64,
    rep_orders: &[u64],
    power_maps: &BTreeMap<u64, Vec<usize>>,
) -> CharacterTableDocument {
    let characters = (0..table.num_characters())
        .map(|i| CharacterEntry {
            degree: table.degree(i),
            values: Some(table.row(i).iter().map(|v| [v.re, v.im]).collect()),
            cyclotomic: table.exact().and_then(|ex| {
                // exact data over a divisor of the exponent is lifted to z_m
                exponent.is_multiple_of(ex.exponent).then(|| {
                    let step = (exponent / ex.exponent) as usize;
                    ex.coefficients[i]
                        .iter()
                        .map(|c| {
                            let mut lifted = vec![0i64; exponent as usize];
                            for (j, &x) in c.iter().enumerate() {
                                lifted[j * step] = x;
                            }
                            lifted
                        })
                        .collect()
                })
            }),
        })
        .collect();
    CharacterTableDocument {
        group_order: table.group_order(),
        exponent,
        class_sizes: table.class_sizes().to_vec(),
        class_rep_orders: rep_orders.to_vec(),
        class_power_maps: power_maps.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        characters,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{abelian_character_table, character_table_numerical};
    use crate::group::{build_cyclic, build_extraspecial3, conjugacy};

    fn z3_document() -> CharacterTableDocument {
        serde_json::from_str(
            r#"{
              "group_order": 3, "exponent": 3,
              "class_sizes": [1, 1, 1], "class_rep_orders": [1, 3, 3],
              "class_power_maps": {"2": [0, 2, 1]},
              "characters": [
                {"degree": 1, "cyclotomic": [[1,0,0],[1,0,0],[1,0,0]]},
                {"degree": 1, "cyclotomic": [[1,0,0],[0,0,1],[0,1,0]]},
                {"degree": 1, "cyclotomic": [[1,0,0],[0,1,0],[0,0,1]]}
              ]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn hand_written_z3_matches_closed_form() {
        let imp = import_character_table(&z3_document()).unwrap();
        assert_eq!(imp.table.provenance(), Provenance::Imported);
        let closed = abelian_character_table(3, 1).unwrap();
        assert!(closed.match_rows(&imp.table, 1e-12).is_some());
        assert_eq!(imp.class_inv, vec![0, 2, 1]);
        assert_eq!(imp.central_classes(), vec![0, 1, 2]);
        let gd = imp.galois().unwrap();
        assert_eq!(gd.units, vec![1, 2]);
    }

    #[test]
    fn perturbed_value_is_corrupt() {
        let mut doc = export_character_table(
            &abelian_character_table(3, 1).unwrap(),
            &conjugacy(&build_cyclic(3).unwrap()),
        );
        for c in &mut doc.characters {
            c.cyclotomic = None;
        }
        doc.characters[1].values.as_mut().unwrap()[1][0] += 1e-3;
        assert!(matches!(import_character_table(&doc), Err(Error::CorruptTable(_))));
    }

    #[test]
    fn class_count_mismatch_is_schema_error() {
        let mut doc = z3_document();
        doc.characters.pop();
        assert!(matches!(import_character_table(&doc), Err(Error::Schema(_))));
        let mut doc = z3_document();
        doc.characters[0].cyclotomic.as_mut().unwrap()[0].push(0);
        assert!(matches!(import_character_table(&doc), Err(Error::Schema(_))));
    }

    #[test]
    fn exported_heisenberg_table_reimports() {
        let g = build_extraspecial3(1, 3, 4096).unwrap();
        let c = conjugacy(&g);
        let t = character_table_numerical(&g, &c, 42).unwrap();
        let doc = export_character_table(&t, &c);
        let json = serde_json::to_string(&doc).unwrap();
        let back: CharacterTableDocument = serde_json::from_str(&json).unwrap();
        let imp = import_character_table(&back).unwrap();
        assert_eq!(imp.class_inv, c.class_inverses());
        let from_group = galois_stabilizers(&t, &c.power_maps()).unwrap();
        assert_eq!(imp.galois().unwrap(), from_group);
    }

    #[test]
    fn exporter_emits_both_encodings_when_exact() {
        let doc = export_character_table(
            &abelian_character_table(3, 1).unwrap(),
            &conjugacy(&build_cyclic(3).unwrap()),
        );
        assert!(doc.characters.iter().all(|c| c.values.is_some() && c.cyclotomic.is_some()));
        let imp = import_character_table(&doc).unwrap();
        assert!(imp.table.exact().is_some());
    }
}
