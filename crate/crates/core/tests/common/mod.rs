//! Helpers shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use cayley_pst::characters::{CharacterEntry, CharacterTableDocument};

pub const CYCLOTOMIC_FIXTURE: &str = "extraspecial27_cyclotomic.json";

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// Noncentral classes of the order-27 exponent-3 group, as `(a, b)` for
/// `x^a y^b z^*`.
const NONCENTRAL: [(u64, u64); 8] = [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)];

/// Exact table of the order-27 exponent-3 extraspecial group written from
/// the closed formulas, without touching the group builder.
///
/// Classes: `e, z, z^2`, then `x^a y^b` in [`NONCENTRAL`] order.
/// Characters: the nine linear ones `w^(ua + vb)`, then the two of degree 3
/// with value `3 w^(lc)` on `z^c` and 0 off the centre.
pub fn extraspecial27_document() -> CharacterTableDocument {
    let unit = |k: u64, c: i64| {
        let mut v = vec![0i64; 3];
        v[(k % 3) as usize] = c;
        v
    };
    let mut characters = Vec::new();
    for u in 0..3 {
        for v in 0..3 {
            let mut row = vec![unit(0, 1); 3];
            row.extend(NONCENTRAL.iter().map(|&(a, b)| unit(u * a + v * b, 1)));
            characters.push(CharacterEntry { degree: 1, values: None, cyclotomic: Some(row) });
        }
    }
    for l in 1..3u64 {
        let mut row: Vec<Vec<i64>> = (0..3).map(|c| unit(l * c, 3)).collect();
        row.extend(std::iter::repeat_n(vec![0; 3], NONCENTRAL.len()));
        characters.push(CharacterEntry { degree: 3, values: None, cyclotomic: Some(row) });
    }
    let index = |a: u64, b: u64| 3 + NONCENTRAL.iter().position(|&p| p == (a % 3, b % 3)).unwrap();
    let mut square = vec![0, 2, 1];
    square.extend(NONCENTRAL.iter().map(|&(a, b)| index(2 * a, 2 * b)));
    CharacterTableDocument {
        group_order: 27,
        exponent: 3,
        class_sizes: [vec![1; 3], vec![3; 8]].concat(),
        class_rep_orders: [vec![1, 3, 3], vec![3; 8]].concat(),
        class_power_maps: BTreeMap::from([("2".to_string(), square), ("3".to_string(), vec![0; 11])]),
        characters,
    }
}

/// Classes of `x`, `y` and `z` in [`extraspecial27_document`].
pub const XYZ_CLASSES: [usize; 3] = [5, 3, 1];

pub fn to_pretty_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}
