//! Known PST/MST constructions packaged as checkable certificates.

mod fixtures;
mod imported;
mod lift;

pub use fixtures::{
    default_certificates, fixture_document, load_fixtures, CertificateFixture, FixtureFile,
    SHIPPED_FIXTURES,
};
pub use imported::{imported_class_power, triple_cover_check, RecipeAttempt, TripleCoverCheck};
pub use lift::{undirected_lift_check, wreath_connection_elements, wreath_lift, UndirectedCheck};

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cayley::{connection_set_from_elements, make_connection_set, ConnectionSet, OrientedCayleyGraph};
use crate::group::{subgroup_closure, GroupSpec};
use crate::pst::{
    check_pst_at, compute_s_e, oracle_check, oracle_for, solve_pst_time, time_rationality_check, MstReport, Rationality,
};
use crate::{Error, GroupContext, Result, RunConfig};

/// Vertex count up to which certificates are also checked by the walk oracle.
pub const ORACLE_LIMIT: usize = 200;

/// Exact form of a certificate time.
#[derive(Debug, Clone, PartialEq)]
pub enum TauTag {
    TwoPiOverThreeSqrt3,
    PiOverTwo,
    PiOverFour,
    Solved(f64),
}

impl TauTag {
    pub fn value(&self) -> f64 {
        match self {
            TauTag::TwoPiOverThreeSqrt3 => 2.0 * PI / (3.0 * 3f64.sqrt()),
            TauTag::PiOverTwo => PI / 2.0,
            TauTag::PiOverFour => PI / 4.0,
            TauTag::Solved(t) => *t,
        }
    }

    pub fn parse(s: &str) -> Result<TauTag> {
        match s.trim() {
            "2pi/3sqrt3" => Ok(TauTag::TwoPiOverThreeSqrt3),
            "pi/2" => Ok(TauTag::PiOverTwo),
            "pi/4" => Ok(TauTag::PiOverFour),
            other => other
                .strip_prefix("solved:")
                .and_then(|x| x.parse().ok())
                .map(TauTag::Solved)
                .ok_or_else(|| Error::InvalidInput(format!("unknown time tag '{other}'"))),
        }
    }
}

impl std::fmt::Display for TauTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TauTag::TwoPiOverThreeSqrt3 => write!(f, "2pi/3sqrt3"),
            TauTag::PiOverTwo => write!(f, "pi/2"),
            TauTag::PiOverFour => write!(f, "pi/4"),
            TauTag::Solved(t) => write!(f, "solved:{t}"),
        }
    }
}

/// What a certificate asserts at its time `tau`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Claim {
    /// PST `e -> z`, with `S_e = <z>` of the given size.
    Pst(usize),
    /// `U(tau) e = e`.
    Periodic,
    /// No vertex other than `e` receives the walk at `tau`.
    NoPst,
}

impl Claim {
    pub fn tag(&self) -> String {
        match self {
            Claim::Pst(k) => format!("pst:{k}"),
            Claim::Periodic => "periodic".into(),
            Claim::NoPst => "none".into(),
        }
    }

    pub fn parse(s: &str) -> Result<Claim> {
        match s {
            "periodic" => Ok(Claim::Periodic),
            "none" => Ok(Claim::NoPst),
            other => other
                .strip_prefix("pst:")
                .and_then(|k| k.parse().ok())
                .map(Claim::Pst)
                .ok_or_else(|| Error::InvalidInput(format!("unknown claim '{other}'"))),
        }
    }
}

/// A claim about `Cay(G, C)` at time `tau` with target `z`.
#[derive(Debug, Clone)]
pub struct FamilyCertificate {
    pub name: String,
    pub ctx: GroupContext,
    pub conn: ConnectionSet,
    pub z: usize,
    pub tau: TauTag,
    pub claim: Claim,
    pub source: String,
    pub notes: Vec<String>,
}

impl FamilyCertificate {
    pub fn graph(&self) -> Result<OrientedCayleyGraph<'_>> {
        OrientedCayleyGraph::new(&self.ctx.group, &self.ctx.conj, self.conn.clone())
    }

    pub fn claimed_size(&self) -> usize {
        match self.claim {
            Claim::Pst(k) => k,
            _ => 1,
        }
    }

    fn validate(self) -> Result<Self> {
        if !self.ctx.conj.is_central(self.z) {
            return Err(Error::InvariantBreach(format!("{}: target is not central", self.name)));
        }
        let order = self.ctx.group.element_order(self.z) as usize;
        if matches!(self.claim, Claim::Pst(k) if k != order) {
            return Err(Error::InvariantBreach(format!(
                "{}: target has order {order}, claimed size {}",
                self.name,
                self.claimed_size()
            )));
        }
        Ok(self)
    }
}

fn abelian_spec(r: usize, n: usize) -> GroupSpec {
    if n == 1 {
        GroupSpec::Cyclic(r)
    } else {
        GroupSpec::AbelianPower { r, n }
    }
}

/// `Cay(Z_3^n, C)` with target `sigma = sum C` at `2 pi / (3 sqrt 3)`.
pub fn family_z3n(n: usize, elements: &[usize], cfg: &RunConfig) -> Result<FamilyCertificate> {
    let ctx = GroupContext::from_spec(&abelian_spec(3, n), cfg)?;
    let conn = connection_set_from_elements(&ctx.conj, elements)?;
    let sigma = ctx.group.product(conn.elements().iter().copied());
    let claim = if sigma == ctx.group.identity() { Claim::Periodic } else { Claim::Pst(3) };
    let mut notes = Vec::new();
    if claim == Claim::Periodic {
        notes.push("sum of C is 0: period-only, no PST claim".into());
    }
    FamilyCertificate {
        name: format!("z3^{n} {}", labels(&ctx, conn.elements())),
        conn,
        z: sigma,
        tau: TauTag::TwoPiOverThreeSqrt3,
        claim,
        source: "Z_3^n: PST 0 -> sum(C) at 2pi/(3 sqrt 3)".into(),
        notes,
        ctx,
    }
    .validate()
}

/// `Cay(Z_4^n, C)` with target `2 sigma` at `pi / 2`; a claim only when
/// `sigma` has order 4.
pub fn family_z4n(n: usize, elements: &[usize], cfg: &RunConfig) -> Result<FamilyCertificate> {
    let ctx = GroupContext::from_spec(&abelian_spec(4, n), cfg)?;
    let conn = connection_set_from_elements(&ctx.conj, elements)?;
    let sigma = ctx.group.product(conn.elements().iter().copied());
    let z = ctx.group.mul(sigma, sigma);
    let claim = if ctx.group.element_order(sigma) == 4 { Claim::Pst(2) } else { Claim::NoPst };
    let mut notes = vec!["MST on a set of size 4 is impossible on Z_4^n".to_string()];
    if claim == Claim::NoPst {
        notes.push("sum of C has order at most 2: no PST at pi/2".into());
    }
    FamilyCertificate {
        name: format!("z4^{n} {}", labels(&ctx, conn.elements())),
        conn,
        z,
        tau: TauTag::PiOverTwo,
        claim,
        source: "Z_4^n: PST 0 -> 2 sum(C) at pi/2 iff sum(C) has order 4".into(),
        notes,
        ctx,
    }
    .validate()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisChoice {
    /// Images of the standard generators `x_i, y_i`.
    Canonical,
    /// Random basis of `G/Z` drawn from a seeded generator.
    Random(u64),
}

/// Extraspecial `3^(1+2n)`: `C = E u {z}` where `E` is the preimage of a
/// basis of `G/Z`; MST on `Z` at `2 pi / (3 sqrt 3)`.
pub fn family_extraspecial3(
    n: usize,
    exponent: u32,
    basis: BasisChoice,
    cfg: &RunConfig,
) -> Result<FamilyCertificate> {
    let ctx = GroupContext::from_spec(&GroupSpec::Extraspecial3 { n, exponent }, cfg)?;
    let g = &ctx.group;
    let center = ctx.conj.center().to_vec();
    let z = if exponent == 9 {
        g.find_label("x^3")
    } else {
        g.find_label("z")
    }
    .ok_or_else(|| Error::InvariantBreach("central generator not found".into()))?;

    let gens: Vec<usize> = match basis {
        BasisChoice::Canonical => {
            let names: Vec<String> = if n == 1 {
                vec!["x".into(), "y".into()]
            } else {
                (1..=n).flat_map(|i| [format!("x{i}"), format!("y{i}")]).collect()
            };
            names
                .iter()
                .map(|s| g.find_label(s).ok_or_else(|| Error::InvariantBreach(format!("no element {s}"))))
                .collect::<Result<_>>()?
        }
        BasisChoice::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut chosen: Vec<usize> = Vec::new();
            let mut span = subgroup_closure(g, &center);
            while span.len() < g.order() {
                let pick = loop {
                    let x = rng.gen_range(0..g.order());
                    if span.binary_search(&x).is_err() {
                        break x;
                    }
                };
                chosen.push(pick);
                let mut all = center.clone();
                all.extend(&chosen);
                span = subgroup_closure(g, &all);
            }
            chosen.shuffle(&mut rng);
            chosen
        }
    };
    if gens.len() != 2 * n {
        return Err(Error::InvariantBreach("basis of G/Z has the wrong size".into()));
    }
    let mut classes: Vec<usize> = gens.iter().map(|&x| ctx.conj.class_of(x)).collect();
    classes.push(ctx.conj.class_of(z));
    let conn = make_connection_set(&ctx.conj, &classes)?;
    let basis_name = match basis {
        BasisChoice::Canonical => "canonical basis".to_string(),
        BasisChoice::Random(seed) => format!("random basis (seed {seed})"),
    };
    FamilyCertificate {
        name: format!("extraspecial 3^{} exponent {exponent}, {basis_name}", 2 * n + 1),
        conn,
        z,
        tau: TauTag::TwoPiOverThreeSqrt3,
        claim: Claim::Pst(3),
        source: "extraspecial 3-group: C = E u {z}, MST on Z".into(),
        notes: Vec::new(),
        ctx,
    }
    .validate()
}

/// Element labels of the connection set used by the `M_2(n)` family.
pub fn m2_connection_labels(n: u32) -> Vec<String> {
    let p = |e: u32| 1usize << e;
    let mut out = vec![
        format!("x^{}", p(n - 3)),
        power_s(p(n - 4)),
        power_s(p(n - 2) + p(n - 4)),
    ];
    for k in 0..p(n - 3) {
        let e = 4 * k + 1;
        out.push(if e == 1 { "x".into() } else { format!("x^{e}") });
    }
    out
}

fn power_s(e: usize) -> String {
    if e == 1 {
        "xs".into()
    } else {
        format!("x^{e}s")
    }
}

/// `M_2(n)`, `n >= 5`: MST on `<x^(2^(n-3))>` at `pi / 4`.
pub fn family_m2(n: u32, cfg: &RunConfig) -> Result<FamilyCertificate> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("the M_2(n) family needs n >= 5, got {n}")));
    }
    let ctx = GroupContext::from_spec(&GroupSpec::ModularMaximalCyclic(n), cfg)?;
    let elements: Vec<usize> = m2_connection_labels(n)
        .iter()
        .map(|s| ctx.group.find_label(s).ok_or_else(|| Error::InvariantBreach(format!("no element {s}"))))
        .collect::<Result<_>>()?;
    let conn = connection_set_from_elements(&ctx.conj, &elements)?;
    let z = elements[0];
    FamilyCertificate {
        name: format!("M_2({n})"),
        conn,
        z,
        tau: TauTag::PiOverFour,
        claim: Claim::Pst(4),
        source: "M_2(n): MST on <x^(2^(n-3))> at pi/4".into(),
        notes: Vec::new(),
        ctx,
    }
    .validate()
}

/// `Cay(Z_8, {1, 2, 5})`; the time is solved, not given.
pub fn z8_example(cfg: &RunConfig) -> Result<FamilyCertificate> {
    let ctx = GroupContext::from_spec(&GroupSpec::Cyclic(8), cfg)?;
    let conn = make_connection_set(&ctx.conj, &[1, 2, 5])?;
    let graph = OrientedCayleyGraph::new(&ctx.group, &ctx.conj, conn.clone())?;
    let mst = compute_s_e(&graph, &ctx.table, cfg)?;
    let (z, tau) = match (mst.generator, mst.minimal_time) {
        (Some(z), Some(t)) => (z, t),
        _ => return Err(Error::InvariantBreach("Cay(Z_8, {1,2,5}) shows no PST".into())),
    };
    FamilyCertificate {
        name: "Z_8 {1,2,5}".into(),
        conn,
        z,
        tau: TauTag::Solved(tau),
        claim: Claim::Pst(4),
        source: "Cay(Z_8, {1,2,5}) has MST on a set of size 4".into(),
        notes: vec!["time solved by the criterion".into()],
        ctx,
    }
    .validate()
}

/// The order-16 instance `M_2(4)` with `C = {x^2, xs, x^5s}`; reported, not asserted.
pub fn m2_order16_check(cfg: &RunConfig) -> Result<M2Order16Verdict> {
    let ctx = GroupContext::from_spec(&GroupSpec::ModularMaximalCyclic(4), cfg)?;
    let elements: Vec<usize> = ["x^2", "xs", "x^5s"]
        .iter()
        .map(|s| ctx.group.find_label(s).ok_or_else(|| Error::InvariantBreach(format!("no element {s}"))))
        .collect::<Result<_>>()?;
    let conn = connection_set_from_elements(&ctx.conj, &elements)?;
    let graph = OrientedCayleyGraph::new(&ctx.group, &ctx.conj, conn)?;
    let mst = compute_s_e(&graph, &ctx.table, cfg)?;
    let x2 = elements[0];
    let op = oracle_for(&graph, cfg)?;
    let x2_solve = solve_pst_time(&graph, &ctx.table, x2, false, cfg)?;
    let oracle_fidelity = mst.generator.zip(mst.minimal_time).map(|(z, t)| oracle_check(&op, &graph, z, t, cfg).fidelity);
    Ok(M2Order16Verdict {
        group: ctx.group.tag(),
        s_e_labels: mst.s_e.iter().map(|&x| ctx.group.label(x).to_string()).collect(),
        size: mst.size,
        tau: mst.minimal_time,
        oracle_fidelity,
        pst_to_x2: x2_solve.certificate.map(|c| c.tau),
        mst_on_x2_subgroup: mst.size == 4 && mst.s_e == subgroup_closure(&ctx.group, &[x2]),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct M2Order16Verdict {
    pub group: String,
    pub s_e_labels: Vec<String>,
    pub size: usize,
    pub tau: Option<f64>,
    pub oracle_fidelity: Option<f64>,
    pub pst_to_x2: Option<f64>,
    pub mst_on_x2_subgroup: bool,
}

fn labels(ctx: &GroupContext, xs: &[usize]) -> String {
    let v: Vec<&str> = xs.iter().map(|&x| ctx.group.label(x)).collect();
    format!("{{{}}}", v.join(", "))
}

/// A random oriented subset of `Z_r^n` (as element indices): each pair
/// `{w, -w}` with `w != -w` contributes nothing, `w` or `-w`.
pub fn random_oriented_subset(ctx: &GroupContext, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let g = &ctx.group;
    loop {
        let mut out = Vec::new();
        for w in 0..g.order() {
            let inv = g.inv(w);
            if w < inv {
                match rng.gen_range(0..3) {
                    1 => out.push(w),
                    2 => out.push(inv),
                    _ => {}
                }
            }
        }
        if !out.is_empty() {
            out.sort_unstable();
            return out;
        }
    }
}

/// Outcome of checking one certificate by criterion, oracle and `S_e`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateCheck {
    pub name: String,
    pub group: String,
    pub order: usize,
    pub target: String,
    pub tau: f64,
    pub tau_tag: String,
    pub claim: String,
    pub residual: f64,
    pub oracle_fidelity: Option<f64>,
    pub oracle_phase: Option<f64>,
    pub permutation_order: Option<usize>,
    pub rational: Option<Rationality>,
    pub s_e: Vec<usize>,
    pub size: usize,
    pub connected: bool,
    pub failures: Vec<String>,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Criterion, oracle (up to [`ORACLE_LIMIT`] vertices), `S_e` and rationality.
pub fn verify_certificate(cert: &FamilyCertificate, cfg: &RunConfig) -> Result<CertificateCheck> {
    let graph = cert.graph()?;
    let tau = cert.tau.value();
    let g = &cert.ctx.group;
    let e = g.identity();
    let table = &cert.ctx.table;
    let mut failures = Vec::new();

    // For `NoPst` the reported residual is the smallest one over all central
    // targets, i.e. the margin by which transfer is ruled out.
    let residual = match cert.claim {
        Claim::NoPst => {
            let mut best = f64::INFINITY;
            for &z in cert.ctx.conj.center().iter().filter(|&&z| z != e) {
                best = best.min(check_pst_at(&graph, table, z, tau, cfg)?.residual);
            }
            if best < cfg.criterion_tol {
                failures.push(format!("criterion accepts a transfer at tau (residual {best:.3e})"));
            }
            best
        }
        _ => {
            let check = check_pst_at(&graph, table, cert.z, tau, cfg)?;
            if !check.accepted {
                failures.push(format!("criterion residual {:.3e}", check.residual));
            }
            check.residual
        }
    };

    let (mut fid, mut phase, mut perm_order) = (None, None, None);
    if graph.order() <= ORACLE_LIMIT {
        let op = oracle_for(&graph, cfg)?;
        match cert.claim {
            Claim::NoPst => {
                let col = op.column(tau, e);
                let best = (0..g.order()).filter(|&b| b != e).map(|b| col[b].norm()).fold(0.0, f64::max);
                fid = Some(best);
                if best > 0.999 {
                    failures.push(format!("walk reaches a vertex with fidelity {best:.6}"));
                }
            }
            _ => {
                let o = oracle_check(&op, &graph, cert.z, tau, cfg);
                fid = Some(o.fidelity);
                phase = Some(o.phase);
                if !o.accepted {
                    failures.push(format!("oracle fidelity {:.3e} (phase {})", o.fidelity, o.phase));
                }
            }
        }
        if let Claim::Pst(_) = cert.claim {
            match op.permutation_check(tau, &graph.adjacency_matrix(), cfg.oracle_tol)? {
                Some(p) => {
                    perm_order = Some(p.order);
                    if !p.fixed_point_free || !p.all_positive || p.commutator > 1e-9 {
                        failures.push("U(tau) is not a fixed-point-free automorphism".into());
                    }
                }
                None => failures.push("U(tau) is not a permutation matrix".into()),
            }
        }
    }

    let mst: MstReport = compute_s_e(&graph, table, cfg)?;
    let rational = match cert.claim {
        Claim::Pst(size) => {
            if mst.size != size || mst.s_e != subgroup_closure(g, &[cert.z]) {
                failures.push(format!("S_e has size {}, expected <z> of size {size}", mst.size));
            }
            if let Some(o) = perm_order.filter(|&o| o != mst.size) {
                failures.push(format!("U(tau) has order {o}, |S_e| = {}", mst.size));
            }
            let r = time_rationality_check(tau, size)?;
            // size 2 carries no rationality guarantee (e.g. pi/(2 sqrt 2) on Z_8)
            if !r.rational && size != 2 {
                failures.push("time is not a small rational multiple".into());
            }
            Some(r)
        }
        _ => None,
    };
    Ok(CertificateCheck {
        name: cert.name.clone(),
        group: g.tag(),
        order: g.order(),
        target: g.label(cert.z).to_string(),
        tau,
        tau_tag: cert.tau.to_string(),
        claim: cert.claim.tag(),
        residual,
        oracle_fidelity: fid,
        oracle_phase: phase,
        permutation_order: perm_order,
        rational,
        s_e: mst.s_e,
        size: mst.size,
        connected: graph.is_connected(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    fn passes(cert: &FamilyCertificate) -> CertificateCheck {
        let chk = verify_certificate(cert, &cfg()).unwrap();
        assert!(chk.passed(), "{}: {:?}", chk.name, chk.failures);
        chk
    }

    #[test]
    fn z3_examples() {
        let c = family_z3n(1, &[1], &cfg()).unwrap();
        assert_eq!((c.z, c.claim), (1, Claim::Pst(3)));
        passes(&c);
        let ctx = GroupContext::from_spec(&"z3^2".parse().unwrap(), &cfg()).unwrap();
        let el: Vec<usize> = ["(1,0)", "(0,1)", "(1,1)"].iter().map(|s| ctx.group.find_label(s).unwrap()).collect();
        let c = family_z3n(2, &el, &cfg()).unwrap();
        assert_eq!(c.ctx.group.label(c.z), "(2,2)");
        passes(&c);
        let bad: Vec<usize> = ["(1,0)", "(2,0)"].iter().map(|s| ctx.group.find_label(s).unwrap()).collect();
        assert!(matches!(family_z3n(2, &bad, &cfg()), Err(Error::Orientation(_))));
    }

    #[test]
    fn z4_examples() {
        let c = family_z4n(1, &[1], &cfg()).unwrap();
        assert_eq!((c.z, c.claim), (2, Claim::Pst(2)));
        passes(&c);
        let ctx = GroupContext::from_spec(&"z4^2".parse().unwrap(), &cfg()).unwrap();
        let el: Vec<usize> = ["(1,0)", "(0,1)"].iter().map(|s| ctx.group.find_label(s).unwrap()).collect();
        let c = family_z4n(2, &el, &cfg()).unwrap();
        assert_eq!(c.ctx.group.label(c.z), "(2,2)");
        passes(&c);
        let bad: Vec<usize> = ["(1,0)", "(3,0)"].iter().map(|s| ctx.group.find_label(s).unwrap()).collect();
        assert!(family_z4n(2, &bad, &cfg()).is_err());
    }

    #[test]
    fn extraspecial_sizes() {
        let c = family_extraspecial3(1, 3, BasisChoice::Canonical, &cfg()).unwrap();
        assert_eq!(c.conn.len(), 7);
        assert_eq!(c.ctx.group.order(), 27);
        passes(&c);
        let r = family_extraspecial3(1, 3, BasisChoice::Random(7), &cfg()).unwrap();
        passes(&r);
    }

    #[test]
    fn m2_connection_set() {
        assert_eq!(
            m2_connection_labels(5),
            vec!["x^4", "x^2s", "x^10s", "x", "x^5", "x^9", "x^13"]
        );
        assert!(family_m2(4, &cfg()).is_err());
        let c = family_m2(5, &cfg()).unwrap();
        assert_eq!(c.ctx.group.label(c.z), "x^4");
        passes(&c);
    }

    #[test]
    fn z8_time_is_quarter_turn() {
        let c = z8_example(&cfg()).unwrap();
        assert!((c.tau.value() - PI / 4.0).abs() < 1e-9, "{}", c.tau);
        let chk = passes(&c);
        assert_eq!(chk.s_e, vec![0, 2, 4, 6]);
        assert!(chk.connected);
    }

    #[test]
    fn non_claims() {
        let ctx = GroupContext::from_spec(&"z3^2".parse().unwrap(), &cfg()).unwrap();
        let el: Vec<usize> = ["(1,0)", "(2,1)", "(0,2)"].iter().map(|s| ctx.group.find_label(s).unwrap()).collect();
        let c = family_z3n(2, &el, &cfg()).unwrap();
        assert_eq!((c.z, c.claim), (0, Claim::Periodic));
        passes(&c);
        let ctx = GroupContext::from_spec(&"z4^2".parse().unwrap(), &cfg()).unwrap();
        let el: Vec<usize> = ["(1,0)", "(0,1)", "(1,1)"].iter().map(|s| ctx.group.find_label(s).unwrap()).collect();
        let c = family_z4n(2, &el, &cfg()).unwrap();
        assert_eq!(c.claim, Claim::NoPst);
        let chk = passes(&c);
        assert!(chk.oracle_fidelity.unwrap() < 0.999);
        assert_eq!(chk.size, 1);
    }

    #[test]
    fn random_subsets_are_oriented() {
        let ctx = GroupContext::from_spec(&"z3^3".parse().unwrap(), &cfg()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let el = random_oriented_subset(&ctx, &mut rng);
            let c = family_z3n(3, &el, &cfg()).unwrap();
            passes(&c);
        }
    }

    #[test]
    fn m2_order_16_instance() {
        let r = m2_order16_check(&cfg()).unwrap();
        assert_eq!(r.group, "m2:4");
        assert!(r.size >= 1);
    }

    #[test]
    fn tau_tags_round_trip() {
        for t in [TauTag::TwoPiOverThreeSqrt3, TauTag::PiOverTwo, TauTag::PiOverFour, TauTag::Solved(0.785)] {
            assert_eq!(TauTag::parse(&t.to_string()).unwrap(), t);
        }
        assert!(TauTag::parse("pi").is_err());
    }
}
