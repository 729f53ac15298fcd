//! Lifting a connection set of `G` to `G wr S_n`.

use std::f64::consts::PI;

use serde::Serialize;

use super::{Claim, FamilyCertificate};
use crate::cayley::{connection_set_from_elements, undirected_adjacency};
use crate::group::{cycle_product, cycles_of, GroupSpec, WreathElement, WreathProduct};
use crate::walk::WalkOperator;
use crate::{Error, GroupContext, Result, RunConfig};

/// `C1 u C2` in `G wr S_n`: `C1` puts one element of `C` in a single
/// coordinate with trivial permutation; `C2` is every `(x; p)` with `p` an
/// `n`-cycle whose cycle product lies in `C`. Sorted element indices.
pub fn wreath_connection_elements(w: &WreathProduct, base_conn: &[usize]) -> Result<Vec<usize>> {
    let n = w.n;
    if n < 2 {
        return Err(Error::InvalidParameter("lifting needs n >= 2".into()));
    }
    let base = &w.base;
    let e = base.identity();
    let id: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for &c in base_conn {
            let mut tuple = vec![e; n];
            tuple[i] = c;
            out.push(w.index_of(&WreathElement { tuple, perm: id.clone() }));
        }
    }
    let b = base.order();
    let mut seen_perms: Vec<&Vec<usize>> = Vec::new();
    for el in w.elements() {
        let cycles = cycles_of(&el.perm);
        if cycles.len() != 1 || seen_perms.contains(&&el.perm) {
            continue;
        }
        seen_perms.push(&el.perm);
        let count = b.pow(n as u32);
        for code in 0..count {
            let mut t = code;
            let mut tuple = vec![0; n];
            for k in (0..n).rev() {
                tuple[k] = t % b;
                t /= b;
            }
            if base_conn.contains(&cycle_product(base, &tuple, &cycles[0])?) {
                out.push(w.index_of(&WreathElement { tuple, perm: el.perm.clone() }));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// PST certificate on `G wr S_n` from one on `G`: same time, target
/// `(z, ..., z)`.
pub fn wreath_lift(base: &FamilyCertificate, n: usize, cfg: &RunConfig) -> Result<FamilyCertificate> {
    let Claim::Pst(size) = base.claim else {
        return Err(Error::InvalidParameter(format!("{} makes no PST claim to lift", base.name)));
    };
    let family = base
        .ctx
        .group
        .family()
        .cloned()
        .ok_or_else(|| Error::InvalidParameter("base group has no family tag".into()))?;
    let w = GroupSpec::Wreath { base: Box::new(family), n }.build_wreath(cfg.max_order)?;
    let elements = wreath_connection_elements(&w, base.conn.elements())?;
    let z = w.diagonal(base.z);
    let ctx = GroupContext::new(w.group, cfg)?;
    let conn = connection_set_from_elements(&ctx.conj, &elements)?;
    FamilyCertificate {
        name: format!("{} lifted to wr S_{n}", base.name),
        conn,
        z,
        tau: base.tau.clone(),
        claim: Claim::Pst(size),
        source: "wreath lift C1 u C2, target (z, ..., z)".into(),
        notes: Vec::new(),
        ctx,
    }
    .validate()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UndirectedCheck {
    pub group: String,
    pub connection_size: usize,
    pub target: String,
    pub tau: f64,
    /// `|U(tau)[z][e]|` on the base graph.
    pub base_fidelity: f64,
    /// Phase of that amplitude, in units of `pi`.
    pub base_phase: f64,
    pub fidelity: f64,
    /// Vertex of largest amplitude after the lifted walk.
    pub argmax: String,
}

/// Undirected lift of `Cay(base, C)` (with `C = C^-1`) to `base wr S_n`,
/// walked with `U(t) = exp(itA)`; reports the fidelity `e -> (z, ..., z)` at `tau`.
pub fn undirected_lift_check(
    base: &GroupSpec,
    conn: &[usize],
    z: usize,
    n: usize,
    tau: f64,
    cfg: &RunConfig,
) -> Result<UndirectedCheck> {
    let w = GroupSpec::Wreath { base: Box::new(base.clone()), n }.build_wreath(cfg.max_order)?;
    if conn.iter().any(|&x| !conn.contains(&w.base.inv(x))) {
        return Err(Error::InvalidInput("undirected base set is not inverse-closed".into()));
    }
    let base_op = WalkOperator::from_hermitian(&undirected_adjacency(&w.base, conn))?;
    let bf = base_op.column(tau, w.base.identity())[z];
    let elements = wreath_connection_elements(&w, conn)?;
    let g = &w.group;
    if elements.iter().any(|&x| !elements.contains(&g.inv(x))) {
        return Err(Error::InvariantBreach("undirected lift is not inverse-closed".into()));
    }
    let op = WalkOperator::from_hermitian(&undirected_adjacency(g, &elements))?;
    let target = w.diagonal(z);
    let col = op.column(tau, g.identity());
    let argmax = (0..g.order()).max_by(|&a, &b| col[a].norm().total_cmp(&col[b].norm())).unwrap_or(0);
    Ok(UndirectedCheck {
        group: g.tag(),
        connection_size: elements.len(),
        target: g.label(target).to_string(),
        tau,
        base_fidelity: bf.norm(),
        base_phase: bf.arg() / PI,
        fidelity: col[target].norm(),
        argmax: g.label(argmax).to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::{family_z3n, family_z4n, verify_certificate};
    use super::*;

    #[test]
    fn lift_sizes() {
        let cfg = RunConfig::default();
        let base = family_z3n(1, &[1], &cfg).unwrap();
        let w = GroupSpec::Wreath { base: Box::new(GroupSpec::Cyclic(3)), n: 2 }
            .build_wreath(4096)
            .unwrap();
        // 2 singles, plus 3 tuples with x1 + x2 = 1 for the transposition
        assert_eq!(wreath_connection_elements(&w, base.conn.elements()).unwrap().len(), 5);
        let w3 = GroupSpec::Wreath { base: Box::new(GroupSpec::Cyclic(3)), n: 3 }
            .build_wreath(4096)
            .unwrap();
        assert_eq!(wreath_connection_elements(&w3, &[1]).unwrap().len(), 3 + 2 * 9);
    }

    #[test]
    fn lifted_z3_and_z4() {
        let cfg = RunConfig::default();
        for n in [2, 3] {
            let lift = wreath_lift(&family_z3n(1, &[1], &cfg).unwrap(), n, &cfg).unwrap();
            assert_eq!(lift.ctx.group.label(lift.z), if n == 2 { "[1,1|1,2]" } else { "[1,1,1|1,2,3]" });
            let chk = verify_certificate(&lift, &cfg).unwrap();
            assert!(chk.passed(), "{:?}", chk.failures);
        }
        let lift = wreath_lift(&family_z4n(1, &[1], &cfg).unwrap(), 2, &cfg).unwrap();
        let chk = verify_certificate(&lift, &cfg).unwrap();
        assert!(chk.passed(), "{:?}", chk.failures);
    }

    #[test]
    fn undirected_lifts() {
        let cfg = RunConfig::default();
        // 4-cycle: PST 0 -> 2 at pi/2 with phase -1, which survives the lift
        let r = undirected_lift_check(&GroupSpec::Cyclic(4), &[1, 3], 2, 2, PI / 2.0, &cfg).unwrap();
        assert!(r.base_fidelity > 1.0 - 1e-9);
        assert!(r.fidelity > 1.0 - 1e-9, "{r:?}");
        // K_2: base phase is -i, and the lift loses the transfer
        let r = undirected_lift_check(&GroupSpec::Cyclic(2), &[1], 1, 2, PI / 2.0, &cfg).unwrap();
        assert!(r.base_fidelity > 1.0 - 1e-9);
        assert!((r.base_phase.abs() - 0.5).abs() < 1e-9);
        assert!(r.fidelity < 1e-9, "{r:?}");
        assert!(undirected_lift_check(&GroupSpec::Cyclic(3), &[1], 1, 2, 1.0, &cfg).is_err());
    }
}
