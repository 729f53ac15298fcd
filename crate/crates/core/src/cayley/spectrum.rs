use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::{ConnectionSet, OrientedCayleyGraph};
use crate::characters::CharacterTable;
use crate::group::build::digits;
use crate::group::{ConjugacyData, GroupTable};
use crate::{Error, Result};

/// Eigenvalue `theta_chi = (chi(C) - conj chi(C)) / chi(e)` per character,
/// with multiplicity `degree^2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    #[serde(skip)]
    pub theta: Vec<Complex64>,
    /// `Im theta_chi`.
    pub t: Vec<f64>,
    pub degrees: Vec<u64>,
}

impl Spectrum {
    /// Eigenvalues of `iA` listed with multiplicity, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        // iA v = i theta v = -t v
        let mut out: Vec<f64> = self
            .t
            .iter()
            .zip(&self.degrees)
            .flat_map(|(&t, &d)| std::iter::repeat_n(-t, (d * d) as usize))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }
}

pub fn spectrum(graph: &OrientedCayleyGraph<'_>, table: &CharacterTable) -> Result<Spectrum> {
    if table.num_classes() != graph.conj().num_classes() || table.group_order() != graph.order() {
        return Err(Error::Inconsistency("character table does not match the group".into()));
    }
    spectrum_from_classes(table, graph.conn().class_indices())
}

/// Spectrum from class data only; used for imported tables.
pub fn spectrum_from_classes(table: &CharacterTable, classes: &[usize]) -> Result<Spectrum> {
    let weight: usize = classes.iter().map(|&j| table.class_sizes()[j]).sum();
    let tol = table.tolerance() * (weight.max(1) as f64);
    // chi(C^-1) is read from the conjugate columns rather than taken as
    // conj chi(C), so a table whose columns do not pair up shows as Re theta != 0.
    let inv = classes
        .iter()
        .map(|&j| table.conjugate_class(j))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| Error::Inconsistency("connection classes have no conjugate columns".into()))?;
    let mut theta = Vec::with_capacity(table.num_characters());
    for chi in 0..table.num_characters() {
        let th = (table.class_sum(chi, classes) - table.class_sum(chi, &inv)) / table.degree(chi) as f64;
        if th.re.abs() > tol {
            return Err(Error::Inconsistency(format!(
                "Re theta = {:.3e} for character {chi}",
                th.re
            )));
        }
        theta.push(Complex64::new(0.0, th.im));
    }
    let trace: Complex64 = theta
        .iter()
        .zip(table.degrees())
        .map(|(th, &d)| th * (d * d) as f64)
        .sum();
    if trace.norm() > tol * table.group_order() as f64 {
        return Err(Error::Inconsistency(format!("trace of A is {trace}, not 0")));
    }
    Ok(Spectrum {
        t: theta.iter().map(|th| th.im).collect(),
        degrees: table.degrees().to_vec(),
        theta,
    })
}

/// `n_(v,j) = #{w in C : v.w = j mod r}` on `Z_r^n`; `v` is an element index.
pub fn abelian_residue_counts(group: &GroupTable, v: usize, conn: &ConnectionSet) -> Result<Vec<usize>> {
    let (r, n) = group
        .family()
        .and_then(|f| f.as_abelian_power())
        .ok_or_else(|| Error::InvalidParameter("residue counts need a group Z_r^n".into()))?;
    let vv = digits(v, r, n);
    let mut counts = vec![0; r];
    for &w in conn.elements() {
        let ww = digits(w, r, n);
        let dot: usize = vv.iter().zip(&ww).map(|(a, b)| a * b).sum();
        counts[dot % r] += 1;
    }
    Ok(counts)
}

/// `2i sum_j n_j sin(2 pi j / r)`.
pub fn residue_theta(counts: &[usize]) -> Complex64 {
    let r = counts.len() as f64;
    let s: f64 = counts
        .iter()
        .enumerate()
        .map(|(j, &n)| n as f64 * (2.0 * std::f64::consts::PI * j as f64 / r).sin())
        .sum();
    Complex64::new(0.0, 2.0 * s)
}

/// `E_chi(g, h) = chi(h g^-1) chi(e) / |G|`.
pub fn idempotent(
    table: &CharacterTable,
    chi: usize,
    group: &GroupTable,
    conj: &ConjugacyData,
) -> DMatrix<Complex64> {
    let n = group.order();
    let scale = table.degree(chi) as f64 / n as f64;
    DMatrix::from_fn(n, n, |g, h| {
        table.value(chi, conj.class_of(group.mul(h, group.inv(g)))) * scale
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::make_connection_set;
    use crate::characters::{abelian_character_table, character_table_numerical};
    use crate::group::{build_abelian_power, build_cyclic, build_extraspecial3, conjugacy};

    fn max_abs(m: &DMatrix<Complex64>) -> f64 {
        m.iter().fold(0.0, |a, x| a.max(x.norm()))
    }

    #[test]
    fn z3_and_z4_eigenvalues() {
        let g = build_cyclic(3).unwrap();
        let c = conjugacy(&g);
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        let s = spectrum(&graph, &abelian_character_table(3, 1).unwrap()).unwrap();
        assert!(s.theta[0].norm() < 1e-15);
        assert!((s.theta[1] - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-14);

        let g = build_cyclic(4).unwrap();
        let c = conjugacy(&g);
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        let s = spectrum(&graph, &abelian_character_table(4, 1).unwrap()).unwrap();
        assert!((s.theta[1] - Complex64::new(0.0, 2.0)).norm() < 1e-14);
    }

    #[test]
    fn residue_counts_on_z8() {
        let g = build_cyclic(8).unwrap();
        let c = conjugacy(&g);
        let cs = make_connection_set(&c, &[1, 2, 5]).unwrap();
        assert_eq!(abelian_residue_counts(&g, 1, &cs).unwrap(), vec![0, 1, 1, 0, 0, 1, 0, 0]);
        assert_eq!(abelian_residue_counts(&g, 2, &cs).unwrap(), vec![0, 0, 2, 0, 1, 0, 0, 0]);
        let graph = OrientedCayleyGraph::new(&g, &c, cs.clone()).unwrap();
        let s = spectrum(&graph, &abelian_character_table(8, 1).unwrap()).unwrap();
        for v in 0..8 {
            let th = residue_theta(&abelian_residue_counts(&g, v, &cs).unwrap());
            assert!((th - s.theta[v]).norm() < 1e-12);
        }
        let h = build_extraspecial3(1, 3, 4096).unwrap();
        assert!(abelian_residue_counts(&h, 1, &cs).is_err());
    }

    #[test]
    fn idempotents_resolve_the_adjacency_matrix() {
        let g = build_cyclic(8).unwrap();
        let c = conjugacy(&g);
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1, 2, 5]).unwrap();
        let t = abelian_character_table(8, 1).unwrap();
        let s = spectrum(&graph, &t).unwrap();
        let a = graph.adjacency_matrix().map(|x| Complex64::new(x, 0.0));
        let mut sum = DMatrix::zeros(8, 8);
        let mut recon = DMatrix::zeros(8, 8);
        for chi in 0..8 {
            let e = idempotent(&t, chi, &g, &c);
            assert!(max_abs(&(&e * &e - &e)) < 1e-12);
            assert!(max_abs(&(&a * &e - &e * s.theta[chi])) < 1e-12);
            sum += &e;
            recon += &e * s.theta[chi];
        }
        assert!(max_abs(&(sum - DMatrix::identity(8, 8))) < 1e-12);
        assert!(max_abs(&(recon - a)) < 1e-12);
        let triv = idempotent(&t, t.trivial(), &g, &c);
        assert!(triv.iter().all(|x| (x - Complex64::new(0.125, 0.0)).norm() < 1e-15));
    }

    #[test]
    fn nonabelian_resolution() {
        let g = build_extraspecial3(1, 3, 4096).unwrap();
        let c = conjugacy(&g);
        let t = character_table_numerical(&g, &c, 42).unwrap();
        let z = c.class_of(g.find_label("z").unwrap());
        let x = c.class_of(g.find_label("x").unwrap());
        let y = c.class_of(g.find_label("y").unwrap());
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[z, x, y]).unwrap();
        let s = spectrum(&graph, &t).unwrap();
        let a = graph.adjacency_matrix().map(|v| Complex64::new(v, 0.0));
        let mut recon = DMatrix::zeros(27, 27);
        for chi in 0..t.num_characters() {
            let e = idempotent(&t, chi, &g, &c);
            for psi in 0..t.num_characters() {
                if psi != chi {
                    assert!(max_abs(&(&e * idempotent(&t, psi, &g, &c))) < 1e-9);
                }
            }
            recon += e * s.theta[chi];
        }
        assert!(max_abs(&(recon - a)) < 1e-8);
    }

    #[test]
    fn z4_squared_trace_and_multiplicities() {
        let g = build_abelian_power(4, 2, 4096).unwrap();
        let c = conjugacy(&g);
        let a = g.find_label("(1,0)").unwrap();
        let b = g.find_label("(0,1)").unwrap();
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[a, b]).unwrap();
        let s = spectrum(&graph, &abelian_character_table(4, 2).unwrap()).unwrap();
        assert_eq!(s.hermitian_eigenvalues().len(), 16);
        assert!(s.hermitian_eigenvalues().iter().sum::<f64>().abs() < 1e-12);
    }
}
