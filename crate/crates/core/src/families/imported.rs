//! Checks on imported character tables where no group table is available.

use std::f64::consts::PI;

use serde::Serialize;

use crate::characters::ImportedTable;
use crate::pst::check_pst_at_classes;
use crate::{Error, Result, RunConfig};

/// Class of `g^k` from the prime power maps of an imported table.
pub fn imported_class_power(imported: &ImportedTable, class: usize, k: u64) -> Result<usize> {
    let order = imported.class_rep_orders[class];
    let mut k = k % order.max(1);
    if k == 0 {
        return Ok(0);
    }
    let mut c = class;
    let mut p = 2;
    while k > 1 {
        while k.is_multiple_of(p) {
            let map = imported
                .power_maps
                .get(&p)
                .ok_or_else(|| Error::InvalidInput(format!("table has no {p}-power map")))?;
            c = map[c];
            k /= p;
        }
        p += 1;
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecipeAttempt {
    pub h_class: usize,
    pub tau: f64,
    pub residual: f64,
}

/// Result of the order-12 / order-6 recipe on an imported table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripleCoverCheck {
    pub g_class: usize,
    pub z_class: usize,
    pub connection_classes: Vec<usize>,
    pub tau: f64,
    pub residual: f64,
    pub accepted: bool,
    pub attempts: Vec<RecipeAttempt>,
}

/// `C` = classes of `z = g^4`, `g` and `h`, with `g` of order 12 and `h` of
/// order 6 not conjugate to `g^2`; tries `tau = +-2 pi / (3 sqrt 3)` for the
/// target `z` and every admissible `h`, reporting the best.
pub fn triple_cover_check(imported: &ImportedTable, cfg: &RunConfig) -> Result<TripleCoverCheck> {
    let orders = &imported.class_rep_orders;
    let g_class = (0..orders.len())
        .find(|&j| orders[j] == 12)
        .ok_or_else(|| Error::InvalidInput("no class of elements of order 12".into()))?;
    let z_class = imported_class_power(imported, g_class, 4)?;
    if !imported.is_central(z_class) {
        return Err(Error::InvalidInput("g^4 is not central".into()));
    }
    let g2 = imported_class_power(imported, g_class, 2)?;
    let base = 2.0 * PI / (3.0 * 3f64.sqrt());
    let mut attempts = Vec::new();
    let mut best: Option<TripleCoverCheck> = None;
    for h in (0..orders.len()).filter(|&j| orders[j] == 6 && j != g2) {
        let classes = vec![z_class, g_class, h];
        for tau in [base, 2.0 * base] {
            // the criterion values are cube roots of unity, so 2 tau stands in for -tau
            let check = match check_pst_at_classes(imported, &classes, z_class, tau, cfg) {
                Ok(c) => c,
                Err(Error::Orientation(_)) => continue,
                Err(e) => return Err(e),
            };
            attempts.push(RecipeAttempt { h_class: h, tau, residual: check.residual });
            if best.as_ref().is_none_or(|b| check.residual < b.residual) {
                best = Some(TripleCoverCheck {
                    g_class,
                    z_class,
                    connection_classes: classes.clone(),
                    tau,
                    residual: check.residual,
                    accepted: check.accepted,
                    attempts: Vec::new(),
                });
            }
        }
    }
    let mut out = best.ok_or_else(|| Error::InvalidInput("no admissible order-6 class".into()))?;
    out.attempts = attempts;
    Ok(out)
}
