//! Complex irreducible character tables.
//!
//! Tables come from three places: the closed form for `Z_r^n`
//! ([`abelian_character_table`]), the class-algebra eigenvector method for any
//! group held in memory ([`character_table_numerical`]), and JSON documents
//! exported by other systems ([`import_character_table`]). Every table is
//! validated against the orthogonality relations before it is handed out.

mod abelian;
mod galois;
mod import;
mod numerical;

pub use abelian::abelian_character_table;
pub use galois::{galois_stabilizers, generated_unit_subgroup, rational_intersection, GaloisData};
pub use import::{
    export_character_table, import_character_table, CharacterEntry, CharacterTableDocument,
    ImportedTable,
};
pub use numerical::{character_table_numerical, character_table_numerical_with};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::group::ConjugacyData;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Numerical,
    Imported,
}

/// Exact values as integer coefficient vectors over `1, z, ..., z^(m-1)` with
/// `z = exp(2 pi i / m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicValues {
    pub exponent: u64,
    /// Indexed `[character][class][power]`.
    pub coefficients: Vec<Vec<Vec<i64>>>,
}

impl CyclotomicValues {
    pub fn evaluate(&self, coeffs: &[i64]) -> Complex64 {
        evaluate_cyclotomic(self.exponent, coeffs, 1)
    }
}

/// `sum_j c_j z^(j k)` for `z = exp(2 pi i / m)`.
pub(crate) fn evaluate_cyclotomic(m: u64, coeffs: &[i64], k: u64) -> Complex64 {
    let m = m.max(1);
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| {
            let e = ((j as u64 * k) % m) as f64;
            Complex64::from_polar(c as f64, 2.0 * std::f64::consts::PI * e / m as f64)
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    values: Vec<Vec<Complex64>>,
    degrees: Vec<u64>,
    class_sizes: Vec<usize>,
    provenance: Provenance,
    tolerance: f64,
    exact: Option<CyclotomicValues>,
}

impl CharacterTable {
    /// Assembles and validates a table; rows are characters, columns classes.
    pub fn new(
        values: Vec<Vec<Complex64>>,
        degrees: Vec<u64>,
        class_sizes: Vec<usize>,
        provenance: Provenance,
        tolerance: f64,
        exact: Option<CyclotomicValues>,
    ) -> Result<Self> {
        let table = CharacterTable {
            values,
            degrees,
            class_sizes,
            provenance,
            tolerance,
            exact,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn group_order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    pub fn num_characters(&self) -> usize {
        self.values.len()
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn value(&self, chi: usize, class: usize) -> Complex64 {
        self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Complex64] {
        &self.values[chi]
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.values
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn exact(&self) -> Option<&CyclotomicValues> {
        self.exact.as_ref()
    }

    /// Index of the trivial character.
    pub fn trivial(&self) -> usize {
        self.values
            .iter()
            .position(|row| {
                row.iter()
                    .all(|v| (v - Complex64::new(1.0, 0.0)).norm() < self.tolerance)
            })
            .expect("validated table has a trivial character")
    }

    /// Scale used for orthogonality sums.
    fn sum_tolerance(&self) -> f64 {
        self.tolerance * (self.group_order() as f64).sqrt()
    }

    /// Largest deviation from the row orthogonality relations, normalised by `|G|`.
    pub fn row_orthogonality_error(&self) -> f64 {
        let g = self.group_order() as f64;
        let mut worst: f64 = 0.0;
        for i in 0..self.num_characters() {
            for k in i..self.num_characters() {
                let s: Complex64 = (0..self.num_classes())
                    .map(|j| self.values[i][j] * self.values[k][j].conj() * self.class_sizes[j] as f64)
                    .sum();
                let target = if i == k { 1.0 } else { 0.0 };
                worst = worst.max((s / g - target).norm());
            }
        }
        worst
    }

    /// Largest deviation from the column orthogonality relations, each column
    /// pair normalised by `|G| / |C_j|`.
    pub fn column_orthogonality_error(&self) -> f64 {
        let g = self.group_order() as f64;
        let mut worst: f64 = 0.0;
        for j in 0..self.num_classes() {
            for l in j..self.num_classes() {
                let s: Complex64 = (0..self.num_characters())
                    .map(|i| self.values[i][j] * self.values[i][l].conj())
                    .sum();
                let target = if j == l { 1.0 } else { 0.0 };
                worst = worst.max((s * self.class_sizes[j] as f64 / g - target).norm());
            }
        }
        worst
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.class_sizes.len();
        if self.values.len() != r || self.degrees.len() != r {
            return Err(Error::Schema(format!(
                "{} characters and {} degrees for {r} classes",
                self.values.len(),
                self.degrees.len()
            )));
        }
        if let Some(bad) = self.values.iter().position(|row| row.len() != r) {
            return Err(Error::Schema(format!("character {bad} has the wrong number of values")));
        }
        if r == 0 || self.class_sizes[0] != 1 {
            return Err(Error::Schema("class 0 must be the identity class".into()));
        }
        let g = self.group_order() as u64;
        let deg_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if deg_sq != g {
            return Err(Error::CorruptTable(format!("sum of squared degrees {deg_sq} != |G| = {g}")));
        }
        for (i, row) in self.values.iter().enumerate() {
            if (row[0] - Complex64::new(self.degrees[i] as f64, 0.0)).norm() > self.tolerance {
                return Err(Error::CorruptTable(format!(
                    "character {i}: value on identity class {} differs from degree {}",
                    row[0], self.degrees[i]
                )));
            }
        }
        let tol = self.sum_tolerance();
        let row_err = self.row_orthogonality_error();
        if row_err > tol {
            return Err(Error::CorruptTable(format!(
                "row orthogonality error {row_err:.3e} exceeds {tol:.3e}"
            )));
        }
        let col_err = self.column_orthogonality_error();
        if col_err > tol {
            return Err(Error::CorruptTable(format!(
                "column orthogonality error {col_err:.3e} exceeds {tol:.3e}"
            )));
        }
        Ok(())
    }

    /// Class `l` with `chi(C_l) = conj(chi(C_j))` for every character.
    pub fn conjugate_class(&self, j: usize) -> Option<usize> {
        let tol = self.sum_tolerance();
        (0..self.num_classes()).find(|&l| {
            self.values
                .iter()
                .all(|row| (row[l] - row[j].conj()).norm() < tol)
        })
    }

    /// `chi(S) = sum_j |C_j| chi(C_j)` over a union of classes.
    pub fn class_sum(&self, chi: usize, classes: &[usize]) -> Complex64 {
        classes
            .iter()
            .map(|&j| self.values[chi][j] * self.class_sizes[j] as f64)
            .sum()
    }

    /// Same table with rows reordered.
    pub fn permute_rows(&self, order: &[usize]) -> CharacterTable {
        let mut t = self.clone();
        t.values = order.iter().map(|&i| self.values[i].clone()).collect();
        t.degrees = order.iter().map(|&i| self.degrees[i]).collect();
        if let Some(ex) = &self.exact {
            t.exact = Some(CyclotomicValues {
                exponent: ex.exponent,
                coefficients: order.iter().map(|&i| ex.coefficients[i].clone()).collect(),
            });
        }
        t
    }

    /// Row permutation `p` with `other.row(p[i]) == self.row(i)` within `tol`.
    pub fn match_rows(&self, other: &CharacterTable, tol: f64) -> Option<Vec<usize>> {
        if other.num_characters() != self.num_characters() || other.num_classes() != self.num_classes() {
            return None;
        }
        let mut used = vec![false; other.num_characters()];
        let mut out = Vec::with_capacity(self.num_characters());
        for row in &self.values {
            let hit = (0..other.num_characters()).find(|&k| {
                !used[k]
                    && row
                        .iter()
                        .zip(&other.values[k])
                        .all(|(a, b)| (a - b).norm() < tol)
            })?;
            used[hit] = true;
            out.push(hit);
        }
        Some(out)
    }
}

/// Sort key used to canonicalise row order: degree, then values rounded to 1e-6.
pub(crate) fn canonical_row_key(degree: u64, row: &[Complex64]) -> (u64, Vec<(i64, i64)>) {
    let key = row
        .iter()
        .map(|v| ((v.re * 1e6).round() as i64, (v.im * 1e6).round() as i64))
        .collect();
    (degree, key)
}

/// Elements `g` with `chi(g) = chi(e)`.
pub fn kernel(table: &CharacterTable, chi: usize, conj: &ConjugacyData) -> Vec<usize> {
    let d = table.value(chi, 0);
    let mut out: Vec<usize> = (0..table.num_classes())
        .filter(|&j| (table.value(chi, j) - d).norm() < table.tolerance())
        .flat_map(|j| conj.class(j).iter().copied())
        .collect();
    out.sort_unstable();
    out
}

/// Class-level kernel test, usable without an in-memory group.
pub fn in_kernel(table: &CharacterTable, chi: usize, class: usize) -> bool {
    (table.value(chi, class) - table.value(chi, 0)).norm() < table.tolerance()
}
