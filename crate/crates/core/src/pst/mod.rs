//! Decision procedures for perfect and multiple state transfer from `e`.
//!
//! PST from `e` to `z` at time `tau` holds iff `z` is central and
//! `chi(z)/chi(e) = exp(tau theta_chi)` for every irreducible `chi`. Transfer
//! between arbitrary vertices `a -> b` reduces to `e -> b a^-1`.

mod mst;
mod report;
mod witness;

pub use mst::{
    compute_s_e, partition_into_s_classes, time_rationality_check, MstReport, Rationality,
};
pub use report::{verdict_report, NearestMiss, TauRational, VerdictReport};
pub use witness::{
    nonexistence_witness, nonexistence_witness_classes, solvable_exclusion_report,
    NonexistenceWitness, SolvableReport,
};

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::cayley::{spectrum, spectrum_from_classes, validate_oriented_classes, OrientedCayleyGraph, Spectrum};
use crate::characters::{CharacterTable, ImportedTable};
use crate::walk::{build_operator, WalkOperator};
use crate::{Error, Result, RunConfig};

/// Candidate times closer than this are treated as one.
const TIME_MERGE: f64 = 1e-12;
/// `|t_chi|` below this counts as zero.
const ZERO_T: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateSource {
    Criterion,
    Oracle,
    Both,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PstCertificate {
    pub target: usize,
    pub tau: f64,
    pub residual: f64,
    /// `lambda` in `U(tau) e = lambda z`; always `+1` for these graphs.
    pub phase: f64,
    /// Candidate index `k` from the solver, if the time was solved.
    pub k: Option<i64>,
    pub source: CertificateSource,
    pub oracle_fidelity: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PstCheck {
    pub target: usize,
    pub tau: f64,
    pub residual: f64,
    pub accepted: bool,
}

/// `max_chi |chi(z)/chi(e) - exp(tau theta_chi)|`.
pub fn criterion_residual(table: &CharacterTable, spec: &Spectrum, z_class: usize, tau: f64) -> f64 {
    (0..table.num_characters())
        .map(|chi| {
            let ratio = table.value(chi, z_class) / table.degree(chi) as f64;
            (ratio - (spec.theta[chi] * tau).exp()).norm()
        })
        .fold(0.0, f64::max)
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::InvalidParameter(format!("time must be positive, got {tau}")));
    }
    Ok(())
}

fn require_central(graph: &OrientedCayleyGraph<'_>, z: usize) -> Result<()> {
    if z >= graph.order() {
        return Err(Error::InvalidParameter(format!("element {z} out of range")));
    }
    if !graph.conj().is_central(z) {
        return Err(Error::InvalidInput(format!(
            "target {} is not central, so no PST from e can reach it",
            graph.group().label(z)
        )));
    }
    Ok(())
}

/// Criterion check at a given time. `z = e` is the period query.
pub fn check_pst_at(
    graph: &OrientedCayleyGraph<'_>,
    table: &CharacterTable,
    z: usize,
    tau: f64,
    cfg: &RunConfig,
) -> Result<PstCheck> {
    check_tau(tau)?;
    require_central(graph, z)?;
    let spec = spectrum(graph, table)?;
    let residual = criterion_residual(table, &spec, graph.conj().class_of(z), tau);
    Ok(PstCheck {
        target: z,
        tau,
        residual,
        accepted: residual < cfg.criterion_tol,
    })
}

/// Vertex-pair form: PST `a -> b` iff PST `e -> b a^-1`.
pub fn check_pst_pair(
    graph: &OrientedCayleyGraph<'_>,
    table: &CharacterTable,
    a: usize,
    b: usize,
    tau: f64,
    cfg: &RunConfig,
) -> Result<PstCheck> {
    let g = graph.group();
    check_pst_at(graph, table, g.mul(b, g.inv(a)), tau, cfg)
}

/// Class-level check on an imported table; `z_class` must be a central class.
pub fn check_pst_at_classes(
    imported: &ImportedTable,
    classes: &[usize],
    z_class: usize,
    tau: f64,
    cfg: &RunConfig,
) -> Result<PstCheck> {
    check_tau(tau)?;
    let classes = validate_oriented_classes(classes, &imported.class_inv)?;
    if z_class >= imported.table.num_classes() || !imported.is_central(z_class) {
        return Err(Error::InvalidInput(format!("class {z_class} is not a central class")));
    }
    let spec = spectrum_from_classes(&imported.table, &classes)?;
    let residual = criterion_residual(&imported.table, &spec, z_class, tau);
    Ok(PstCheck {
        target: z_class,
        tau,
        residual,
        accepted: residual < cfg.criterion_tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveOutcome {
    pub certificate: Option<PstCertificate>,
    /// Smallest residual seen over all candidates, for diagnostics.
    pub best_residual: f64,
    pub best_tau: Option<f64>,
    pub candidate_bound: usize,
    pub candidates_checked: usize,
}

/// Smallest positive `tau` with PST `e -> z`, searched over
/// `tau_k = (alpha* + 2 pi k) / t*` for `|k| <= K`, where `chi*` has the
/// largest `|t_chi|`. Set `period` to allow `z = e`.
pub fn solve_pst_time(
    graph: &OrientedCayleyGraph<'_>,
    table: &CharacterTable,
    z: usize,
    period: bool,
    cfg: &RunConfig,
) -> Result<SolveOutcome> {
    require_central(graph, z)?;
    if z == graph.group().identity() && !period {
        return Err(Error::InvalidParameter("target is the identity; use period mode".into()));
    }
    let spec = spectrum(graph, table)?;
    Ok(solve_with_spectrum(
        table,
        &spec,
        graph.conj().class_of(z),
        z,
        cfg.candidate_bound_for(graph.order()),
        cfg.criterion_tol,
    ))
}

pub(crate) fn solve_with_spectrum(
    table: &CharacterTable,
    spec: &Spectrum,
    z_class: usize,
    target: usize,
    bound: usize,
    tol: f64,
) -> SolveOutcome {
    let none = |best_residual, best_tau, checked| SolveOutcome {
        certificate: None,
        best_residual,
        best_tau,
        candidate_bound: bound,
        candidates_checked: checked,
    };
    let phase = |chi: usize| -> f64 {
        let ratio: Complex64 = table.value(chi, z_class) / table.degree(chi) as f64;
        ratio.arg().rem_euclid(TAU)
    };
    let moving = (0..table.num_characters())
        .filter(|&chi| (table.value(chi, z_class) - table.value(chi, 0)).norm() >= table.tolerance());
    if moving.clone().all(|chi| spec.t[chi].abs() < ZERO_T) && z_class != 0 {
        return none(f64::INFINITY, None, 0);
    }
    let Some(star) = (0..table.num_characters()).max_by(|&a, &b| spec.t[a].abs().total_cmp(&spec.t[b].abs())) else {
        return none(f64::INFINITY, None, 0);
    };
    let t_star = spec.t[star];
    if t_star.abs() < ZERO_T {
        return none(f64::INFINITY, None, 0);
    }
    let alpha = phase(star);
    let k_max = bound as i64;
    let mut candidates: Vec<(f64, i64)> = (-k_max..=k_max)
        .map(|k| ((alpha + TAU * k as f64) / t_star, k))
        .filter(|(tau, _)| *tau > TIME_MERGE)
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));
    candidates.dedup_by(|later, earlier| (later.0 - earlier.0).abs() < TIME_MERGE);

    let mut best = (f64::INFINITY, None);
    for (i, &(tau, k)) in candidates.iter().enumerate() {
        let residual = criterion_residual(table, spec, z_class, tau);
        if residual < best.0 {
            best = (residual, Some(tau));
        }
        if residual < tol {
            return SolveOutcome {
                certificate: Some(PstCertificate {
                    target,
                    tau,
                    residual,
                    phase: 1.0,
                    k: Some(k),
                    source: CertificateSource::Criterion,
                    oracle_fidelity: None,
                }),
                best_residual: residual,
                best_tau: Some(tau),
                candidate_bound: bound,
                candidates_checked: i + 1,
            };
        }
    }
    none(best.0, best.1, candidates.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleVerdict {
    pub fidelity: f64,
    pub phase: f64,
    pub accepted: bool,
}

/// `|U(tau)[z][e]|` straight from the adjacency matrix.
pub fn oracle_check(op: &WalkOperator, graph: &OrientedCayleyGraph<'_>, z: usize, tau: f64, cfg: &RunConfig) -> OracleVerdict {
    let f = op.fidelity(tau, graph.group().identity(), z);
    OracleVerdict {
        fidelity: f.value,
        phase: f.phase,
        accepted: f.value > 1.0 - cfg.oracle_tol && f.phase > 0.0,
    }
}

pub fn oracle_for(graph: &OrientedCayleyGraph<'_>, cfg: &RunConfig) -> Result<WalkOperator> {
    crate::group::check_max_order("walk oracle", graph.order() as u128, cfg.max_order)?;
    build_operator(&graph.adjacency_matrix())
}

/// Criterion plus oracle at one `(z, tau)`; the oracle is skipped when
/// `|G| > oracle_limit`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualVerdict {
    pub residual: f64,
    pub criterion_accepted: bool,
    pub oracle: Option<OracleVerdict>,
}

impl DualVerdict {
    pub fn passed(&self) -> bool {
        self.criterion_accepted && self.oracle.is_none_or(|o| o.accepted)
    }
}

pub fn dual_verify(
    graph: &OrientedCayleyGraph<'_>,
    table: &CharacterTable,
    z: usize,
    tau: f64,
    oracle_limit: usize,
    cfg: &RunConfig,
) -> Result<DualVerdict> {
    let check = check_pst_at(graph, table, z, tau, cfg)?;
    let oracle = if graph.order() <= oracle_limit {
        let op = oracle_for(graph, cfg)?;
        Some(oracle_check(&op, graph, z, tau, cfg))
    } else {
        None
    };
    Ok(DualVerdict {
        residual: check.residual,
        criterion_accepted: check.accepted,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::abelian_character_table;
    use crate::context::GroupContext;
    use crate::group::{build_cyclic, conjugacy, GroupSpec};
    use std::f64::consts::PI;

    fn tau3() -> f64 {
        2.0 * PI / (3.0 * 3f64.sqrt())
    }

    #[test]
    fn z3_criterion() {
        let g = build_cyclic(3).unwrap();
        let c = conjugacy(&g);
        let t = abelian_character_table(3, 1).unwrap();
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        let cfg = RunConfig::default();
        let chk = check_pst_at(&graph, &t, 1, tau3(), &cfg).unwrap();
        assert!(chk.accepted && chk.residual < 1e-12);
        assert!(!check_pst_at(&graph, &t, 2, tau3(), &cfg).unwrap().accepted);
        assert!(check_pst_at(&graph, &t, 0, 3.0 * tau3(), &cfg).unwrap().accepted);
        assert!(check_pst_at(&graph, &t, 1, -1.0, &cfg).is_err());
    }

    #[test]
    fn z4_criterion() {
        let g = build_cyclic(4).unwrap();
        let c = conjugacy(&g);
        let t = abelian_character_table(4, 1).unwrap();
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        assert!(check_pst_at(&graph, &t, 2, PI / 2.0, &RunConfig::default()).unwrap().accepted);
    }

    #[test]
    fn noncentral_target_rejected() {
        let cfg = RunConfig::default();
        let ctx = GroupContext::from_spec(&"extraspecial3:1".parse::<GroupSpec>().unwrap(), &cfg).unwrap();
        let x = ctx.group.find_label("x").unwrap();
        let graph = ctx.graph(&[ctx.conj.class_of(x)]).unwrap();
        assert!(matches!(check_pst_at(&graph, &ctx.table, x, 1.0, &cfg), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn solver_finds_z3_time() {
        let g = build_cyclic(3).unwrap();
        let c = conjugacy(&g);
        let t = abelian_character_table(3, 1).unwrap();
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        let out = solve_pst_time(&graph, &t, 1, false, &RunConfig::default()).unwrap();
        let cert = out.certificate.unwrap();
        assert!((cert.tau - tau3()).abs() < 1e-12);
        assert_eq!(out.candidate_bound, 12);
        assert!(solve_pst_time(&graph, &t, 0, false, &RunConfig::default()).is_err());
        let period = solve_pst_time(&graph, &t, 0, true, &RunConfig::default()).unwrap();
        assert!((period.certificate.unwrap().tau - 3.0 * tau3()).abs() < 1e-12);
    }

    #[test]
    fn pair_queries_translate() {
        let g = build_cyclic(3).unwrap();
        let c = conjugacy(&g);
        let t = abelian_character_table(3, 1).unwrap();
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        let cfg = RunConfig::default();
        assert!(check_pst_pair(&graph, &t, 2, 0, tau3(), &cfg).unwrap().accepted);
        let op = oracle_for(&graph, &cfg).unwrap();
        assert!(op.fidelity(tau3(), 2, 0).value > 1.0 - 1e-9);
    }
}
