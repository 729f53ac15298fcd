//! Character tables from simultaneous eigenvectors of the class algebra.
//!
//! With `a_jkl = #{(u, v) in C_j x C_k : uv = z_l}` the matrices
//! `(M_j)_kl = a_jkl` share the eigenvectors `w_l = omega_chi(C_l)`, the
//! central characters. Rescaling by `D = diag(sqrt |C_l|)` makes every `M_j`
//! normal with orthogonal eigenvectors, so a random Hermitian combination of
//! their real and imaginary parts separates all characters in one solve.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{canonical_row_key, CharacterTable, Provenance};
use crate::config::{DEFAULT_MAX_CLASSES, TABLE_TOL};
use crate::group::{ConjugacyData, GroupTable};
use crate::{Error, Result};

const MAX_ATTEMPTS: u64 = 8;

pub fn character_table_numerical(
    group: &GroupTable,
    conj: &ConjugacyData,
    seed: u64,
) -> Result<CharacterTable> {
    character_table_numerical_with(group, conj, seed, DEFAULT_MAX_CLASSES, TABLE_TOL)
}

pub fn character_table_numerical_with(
    group: &GroupTable,
    conj: &ConjugacyData,
    seed: u64,
    max_classes: usize,
    tolerance: f64,
) -> Result<CharacterTable> {
    let r = conj.num_classes();
    if r > max_classes {
        return Err(Error::size("conjugacy classes", r as u128, max_classes as u128));
    }
    let scaled = scaled_class_matrices(group, conj);
    let mut last = Error::NumericalFailure("no attempt made".into());
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9)));
        match attempt_table(group, conj, &scaled, &mut rng, tolerance) {
            Ok(t) => return Ok(t),
            Err(e @ Error::NumericalFailure(_)) | Err(e @ Error::CorruptTable(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(match last {
        Error::CorruptTable(msg) => Error::NumericalFailure(format!(
            "table failed validation after {MAX_ATTEMPTS} attempts: {msg}"
        )),
        other => other,
    })
}

/// `D^-1 M_j D` for every class `j`, as dense real matrices.
fn scaled_class_matrices(group: &GroupTable, conj: &ConjugacyData) -> Vec<DMatrix<f64>> {
    let r = conj.num_classes();
    let sqrt_sizes: Vec<f64> = (0..r).map(|l| (conj.class_size(l) as f64).sqrt()).collect();
    (0..r)
        .map(|j| {
            let mut m = DMatrix::<f64>::zeros(r, r);
            for &u in conj.class(j) {
                let ui = group.inv(u);
                for l in 0..r {
                    let v = group.mul(ui, conj.representative(l));
                    m[(conj.class_of(v), l)] += 1.0;
                }
            }
            for k in 0..r {
                for l in 0..r {
                    m[(k, l)] *= sqrt_sizes[l] / sqrt_sizes[k];
                }
            }
            m
        })
        .collect()
}

fn attempt_table(
    group: &GroupTable,
    conj: &ConjugacyData,
    scaled: &[DMatrix<f64>],
    rng: &mut ChaCha8Rng,
    tolerance: f64,
) -> Result<CharacterTable> {
    let r = conj.num_classes();
    let order = group.order() as f64;
    let mut h = DMatrix::<Complex64>::zeros(r, r);
    for m in scaled {
        let a: f64 = rng.gen_range(-1.0..1.0);
        let b: f64 = rng.gen_range(-1.0..1.0);
        for k in 0..r {
            for l in 0..r {
                let sym = 0.5 * (m[(k, l)] + m[(l, k)]);
                let skew = 0.5 * (m[(k, l)] - m[(l, k)]);
                h[(k, l)] += Complex64::new(a * sym, b * skew);
            }
        }
    }
    let eig = h.symmetric_eigen();

    let mut sorted: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    sorted.sort_by(f64::total_cmp);
    let scale = sorted.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    let gap = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    if r > 1 && gap < 1e-6 * scale {
        return Err(Error::NumericalFailure(format!(
            "eigenvalue separation {gap:.3e} too small"
        )));
    }

    let sizes: Vec<f64> = (0..r).map(|l| conj.class_size(l) as f64).collect();
    let mut rows: Vec<(u64, Vec<Complex64>)> = Vec::with_capacity(r);
    for col in 0..r {
        let u = eig.eigenvectors.column(col);
        if u[0].norm() < 1e-9 {
            return Err(Error::NumericalFailure("eigenvector vanishes on the identity class".into()));
        }
        let omega: Vec<Complex64> = (0..r).map(|l| u[l] * sizes[l].sqrt() / u[0]).collect();
        let norm: f64 = (0..r).map(|l| omega[l].norm_sqr() / sizes[l]).sum();
        let d = (order / norm).sqrt();
        let degree = d.round();
        if (d - degree).abs() >= tolerance || degree < 1.0 {
            return Err(Error::NumericalFailure(format!(
                "degree {d} is not within tolerance of an integer"
            )));
        }
        let values = (0..r).map(|l| omega[l] * degree / sizes[l]).collect();
        rows.push((degree as u64, values));
    }
    rows.sort_by_cached_key(|(d, v)| canonical_row_key(*d, v));
    let (degrees, values): (Vec<u64>, Vec<Vec<Complex64>>) = rows.into_iter().unzip();
    CharacterTable::new(values, degrees, conj.class_sizes(), Provenance::Numerical, tolerance, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::abelian_character_table;
    use crate::group::{
        build_abelian_power, build_extraspecial3, build_modular_maximal_cyclic, build_symmetric,
        conjugacy,
    };

    #[test]
    fn s3_degrees() {
        let g = build_symmetric(3, 4096).unwrap();
        let c = conjugacy(&g);
        let t = character_table_numerical(&g, &c, 42).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(t.provenance(), Provenance::Numerical);
    }

    #[test]
    fn heisenberg_degrees() {
        for exp in [3, 9] {
            let g = build_extraspecial3(1, exp, 4096).unwrap();
            let c = conjugacy(&g);
            let t = character_table_numerical(&g, &c, 42).unwrap();
            let mut d = t.degrees().to_vec();
            d.sort();
            assert_eq!(d, [vec![1; 9], vec![3; 2]].concat());
        }
    }

    #[test]
    fn modular_group_degrees() {
        let g = build_modular_maximal_cyclic(5, 4096).unwrap();
        let c = conjugacy(&g);
        let t = character_table_numerical(&g, &c, 3).unwrap();
        assert_eq!(t.degrees().iter().filter(|&&d| d == 1).count(), 16);
        assert_eq!(t.degrees().iter().filter(|&&d| d == 2).count(), 4);
    }

    #[test]
    fn matches_closed_form_on_abelian_group() {
        let g = build_abelian_power(4, 2, 4096).unwrap();
        let c = conjugacy(&g);
        let num = character_table_numerical(&g, &c, 42).unwrap();
        let exact = abelian_character_table(4, 2).unwrap();
        assert!(exact.match_rows(&num, 1e-8).is_some());
    }

    #[test]
    fn seed_does_not_change_result() {
        let g = build_symmetric(4, 4096).unwrap();
        let c = conjugacy(&g);
        let a = character_table_numerical(&g, &c, 1).unwrap();
        let b = character_table_numerical(&g, &c, 99).unwrap();
        for i in 0..a.num_characters() {
            for j in 0..a.num_classes() {
                assert!((a.value(i, j) - b.value(i, j)).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn class_limit() {
        let g = build_abelian_power(4, 2, 4096).unwrap();
        let c = conjugacy(&g);
        assert!(matches!(
            character_table_numerical_with(&g, &c, 0, 8, 1e-8),
            Err(Error::SizeLimit { .. })
        ));
    }
}
