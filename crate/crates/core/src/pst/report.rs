use serde::Serialize;

use super::{time_rationality_check, MstReport, NonexistenceWitness};
use crate::cayley::OrientedCayleyGraph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TauRational {
    pub multiplier: String,
    pub p: i64,
    pub q: i64,
}

/// Machine-readable verdict shared by the CLI `pst` commands.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictReport {
    pub group: String,
    pub connection_classes: Vec<usize>,
    #[serde(rename = "S_e")]
    pub s_e: Vec<usize>,
    #[serde(rename = "S_e_labels")]
    pub s_e_labels: Vec<String>,
    pub size: usize,
    pub tau: Option<f64>,
    pub tau_rational: Option<TauRational>,
    pub residual: Option<f64>,
    pub oracle_fidelity: Option<f64>,
    pub witnesses: Vec<NonexistenceWitness>,
    pub connected: bool,
    pub candidate_bound: usize,
    /// Target of a single-pair query (`check`, `solve`, `oracle`, `nonexist`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub accepted: Option<bool>,
    /// Smallest residual seen when `solve` finds no time.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nearest_miss: Option<NearestMiss>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NearestMiss {
    pub tau: Option<f64>,
    pub residual: f64,
    pub candidates_checked: usize,
}

pub fn verdict_report(
    graph: &OrientedCayleyGraph<'_>,
    mst: &MstReport,
    oracle_fidelity: Option<f64>,
    witnesses: Vec<NonexistenceWitness>,
) -> VerdictReport {
    let g = graph.group();
    let tau_rational = mst.minimal_time.and_then(|tau| {
        time_rationality_check(tau, mst.size)
            .ok()
            .filter(|r| r.rational)
            .map(|r| TauRational {
                multiplier: r.multiplier,
                p: r.p,
                q: r.q,
            })
    });
    let residual = mst
        .generator
        .and_then(|z| mst.certificates.iter().find(|c| c.target == z))
        .map(|c| c.residual);
    VerdictReport {
        group: g.tag(),
        connection_classes: graph.conn().class_indices().to_vec(),
        s_e_labels: mst.s_e.iter().map(|&x| g.label(x).to_string()).collect(),
        s_e: mst.s_e.clone(),
        size: mst.size,
        tau: mst.minimal_time,
        tau_rational,
        residual,
        oracle_fidelity,
        witnesses,
        connected: graph.is_connected(),
        candidate_bound: mst.candidate_bound,
        target: None,
        accepted: None,
        nearest_miss: None,
    }
}
