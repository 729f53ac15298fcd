use std::f64::consts::PI;

use serde::Serialize;

use super::{criterion_residual, solve_with_spectrum, PstCertificate};
use crate::cayley::{spectrum, OrientedCayleyGraph};
use crate::characters::CharacterTable;
use crate::group::{derived_series_solvable, subgroup_closure, GroupTable};
use crate::par::par_map;
use crate::{Error, Result, RunConfig};

const TIE: f64 = 1e-12;

/// `S_e` together with the certificates that produced it. `size == 1` means
/// no PST from `e` was found.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MstReport {
    pub s_e: Vec<usize>,
    pub generator: Option<usize>,
    pub size: usize,
    pub minimal_time: Option<f64>,
    pub certificates: Vec<PstCertificate>,
    /// Largest residual over the power checks `(z^k, k tau)`.
    pub power_residual: Option<f64>,
    pub candidate_bound: usize,
}

pub fn compute_s_e(graph: &OrientedCayleyGraph<'_>, table: &CharacterTable, cfg: &RunConfig) -> Result<MstReport> {
    let group = graph.group();
    let conj = graph.conj();
    let spec = spectrum(graph, table)?;
    let e = group.identity();
    let bound = cfg.candidate_bound_for(graph.order());
    let targets: Vec<usize> = conj.center().iter().copied().filter(|&z| z != e).collect();
    let outcomes = par_map(&targets, cfg.threads, |&z| {
        solve_with_spectrum(table, &spec, conj.class_of(z), z, bound, cfg.criterion_tol)
    });
    let certificates: Vec<PstCertificate> = outcomes.into_iter().filter_map(|o| o.certificate).collect();

    let Some(first) = certificates.iter().min_by(|a, b| {
        if (a.tau - b.tau).abs() < TIE {
            a.target.cmp(&b.target)
        } else {
            a.tau.total_cmp(&b.tau)
        }
    }) else {
        return Ok(MstReport {
            s_e: vec![e],
            generator: None,
            size: 1,
            minimal_time: None,
            certificates,
            power_residual: None,
            candidate_bound: bound,
        });
    };
    let (z_min, tau_min) = (first.target, first.tau);

    let mut s_e: Vec<usize> = certificates.iter().map(|c| c.target).collect();
    s_e.push(e);
    s_e.sort_unstable();
    let cyclic = subgroup_closure(group, &[z_min]);
    if cyclic != s_e {
        return Err(Error::InvariantBreach(format!(
            "S_e = {:?} is not the cyclic group generated by {}",
            labels(group, &s_e),
            group.label(z_min)
        )));
    }
    let size = s_e.len();
    if ![2, 3, 4, 6].contains(&size) {
        return Err(Error::InvariantBreach(format!("|S_e| = {size} is not in {{2, 3, 4, 6}}")));
    }
    if size == 6 && derived_series_solvable(group).solvable {
        return Err(Error::InvariantBreach("|S_e| = 6 on a solvable group".into()));
    }
    let mut power_residual: f64 = 0.0;
    let mut zk = e;
    for k in 1..=size {
        zk = group.mul(zk, z_min);
        let r = criterion_residual(table, &spec, conj.class_of(zk), k as f64 * tau_min);
        if r >= 10.0 * cfg.criterion_tol {
            return Err(Error::InvariantBreach(format!(
                "no PST to {} at {k} * tau_min (residual {r:.3e})",
                group.label(zk)
            )));
        }
        power_residual = power_residual.max(r);
    }
    Ok(MstReport {
        s_e,
        generator: Some(z_min),
        size,
        minimal_time: Some(tau_min),
        certificates,
        power_residual: Some(power_residual),
        candidate_bound: bound,
    })
}

fn labels(group: &GroupTable, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| group.label(x).to_string()).collect()
}

/// Cosets `g S_e`, ordered by smallest element; empty when `|S_e| <= 1`.
pub fn partition_into_s_classes(group: &GroupTable, s_e: &[usize]) -> Vec<Vec<usize>> {
    if s_e.len() <= 1 {
        return Vec::new();
    }
    let mut seen = vec![false; group.order()];
    let mut out = Vec::new();
    for g in 0..group.order() {
        if seen[g] {
            continue;
        }
        let mut coset: Vec<usize> = s_e.iter().map(|&s| group.mul(g, s)).collect();
        coset.sort_unstable();
        for &x in &coset {
            seen[x] = true;
        }
        out.push(coset);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rationality {
    pub rational: bool,
    /// `"pi/sqrt3"` or `"pi"`.
    pub multiplier: String,
    pub p: i64,
    pub q: i64,
    pub error: f64,
}

/// Finds `p/q` with `q <= 10^4` and `|x - p/q| < 1e-8`, where `x` is
/// `tau sqrt3 / pi` for sizes 3 and 6 and `tau / pi` for sizes 2 and 4.
/// Only sizes 3, 4 and 6 are guaranteed rational; size 2 is informational.
pub fn time_rationality_check(tau: f64, size: usize) -> Result<Rationality> {
    let (x, multiplier) = match size {
        3 | 6 => (tau * 3f64.sqrt() / PI, "pi/sqrt3"),
        2 | 4 => (tau / PI, "pi"),
        _ => return Err(Error::InvalidParameter(format!("size {size} is not in {{2, 3, 4, 6}}"))),
    };
    let mut best = (0i64, 1i64, f64::INFINITY);
    for q in 1..=10_000i64 {
        let p = (x * q as f64).round() as i64;
        let err = (x - p as f64 / q as f64).abs();
        if err < 1e-8 {
            return Ok(Rationality {
                rational: true,
                multiplier: multiplier.into(),
                p,
                q,
                error: err,
            });
        }
        if err < best.2 {
            best = (p, q, err);
        }
    }
    Ok(Rationality {
        rational: false,
        multiplier: multiplier.into(),
        p: best.0,
        q: best.1,
        error: best.2,
    })
}
