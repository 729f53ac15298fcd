use num_complex::Complex64;

use super::{CharacterTable, CyclotomicValues, Provenance};
use crate::config::TABLE_TOL;
use crate::group::build::digits;
use crate::{Error, Result};

/// Closed-form table of `Z_r^n`: `chi_v(w) = exp(2 pi i v.w / r)`.
///
/// Rows and columns both follow the element indexing of
/// [`build_abelian_power`](crate::group::build_abelian_power), so row `v` is
/// the character labelled by the same tuple as element `v`.
pub fn abelian_character_table(r: usize, n: usize) -> Result<CharacterTable> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let order = (r as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if order > (1u128 << 24) {
        return Err(Error::size("abelian character table", order, 1 << 24));
    }
    let order = order as usize;
    let tuples: Vec<Vec<usize>> = (0..order).map(|x| digits(x, r, n)).collect();
    let m = r as u64;
    let mut values = Vec::with_capacity(order);
    let mut coefficients = Vec::with_capacity(order);
    for v in &tuples {
        let mut row = Vec::with_capacity(order);
        let mut crow = Vec::with_capacity(order);
        for w in &tuples {
            let e = v.iter().zip(w).map(|(a, b)| a * b).sum::<usize>() % r;
            row.push(Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / r as f64));
            let mut c = vec![0i64; r];
            c[e] = 1;
            crow.push(c);
        }
        values.push(row);
        coefficients.push(crow);
    }
    CharacterTable::new(
        values,
        vec![1; order],
        vec![1; order],
        Provenance::ClosedForm,
        TABLE_TOL,
        Some(CyclotomicValues {
            exponent: m,
            coefficients,
        }),
    )
}
