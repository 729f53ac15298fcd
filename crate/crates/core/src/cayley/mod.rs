//! Oriented normal Cayley graphs `Cay(G, C)`.
//!
//! Arcs are `(g, cg)` for `c in C`. The signed adjacency matrix is indexed
//! `A[head][tail]`: `A[g][h] = +1` when `g h^-1 in C`, `-1` when
//! `h g^-1 in C`. With this layout `e^{tA}` applied to the basis vector of
//! `e` follows the arcs out of `e`, and the character criterion targets the
//! element `z` itself rather than its inverse.

mod enumerate;
mod export;
mod spectrum;

pub use enumerate::{enumerate_oriented_class_unions, ClassUnions};
pub use export::{adjacency_csv, spectrum_report, to_dot, SpectrumEntry};
pub use spectrum::{
    abelian_residue_counts, idempotent, residue_theta, spectrum, spectrum_from_classes, Spectrum,
};

use std::fmt;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::group::{subgroup_closure, ConjugacyData, GroupTable};
use crate::{Error, Result};

/// Reason a class list cannot be an oriented connection set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Violation {
    UnknownClass { class: usize },
    IdentityClass,
    RealClass { class: usize },
    InversePair { class: usize, inverse: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownClass { class } => write!(f, "class {class} does not exist"),
            Violation::IdentityClass => write!(f, "identity class is not allowed"),
            Violation::RealClass { class } => write!(f, "class {class} is real (closed under inversion)"),
            Violation::InversePair { class, inverse } => {
                write!(f, "classes {class} and {inverse} are inverse to each other")
            }
        }
    }
}

/// Class-level orientation check shared by in-memory groups and imported
/// tables. Returns the sorted, deduplicated class list.
pub fn validate_oriented_classes(classes: &[usize], class_inv: &[usize]) -> Result<Vec<usize>> {
    let mut sorted = classes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut violations = Vec::new();
    for &j in &sorted {
        if j >= class_inv.len() {
            violations.push(Violation::UnknownClass { class: j });
        } else if j == 0 {
            violations.push(Violation::IdentityClass);
        } else if class_inv[j] == j {
            violations.push(Violation::RealClass { class: j });
        } else if class_inv[j] > j && sorted.binary_search(&class_inv[j]).is_ok() {
            violations.push(Violation::InversePair {
                class: j,
                inverse: class_inv[j],
            });
        }
    }
    if violations.is_empty() {
        Ok(sorted)
    } else {
        Err(Error::Orientation(violations))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionSet {
    class_indices: Vec<usize>,
    elements: Vec<usize>,
    oriented: bool,
}

impl ConnectionSet {
    pub fn class_indices(&self) -> &[usize] {
        &self.class_indices
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// False for the symmetric sets built by [`make_undirected_connection_set`].
    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    /// `C^-1`, which is again an oriented connection set.
    pub fn inverse(&self, conj: &ConjugacyData) -> ConnectionSet {
        let mut classes: Vec<usize> = self.class_indices.iter().map(|&j| conj.class_inv(j)).collect();
        classes.sort_unstable();
        union_of(conj, classes, self.oriented)
    }
}

fn union_of(conj: &ConjugacyData, class_indices: Vec<usize>, oriented: bool) -> ConnectionSet {
    let mut elements: Vec<usize> = class_indices
        .iter()
        .flat_map(|&j| conj.class(j).iter().copied())
        .collect();
    elements.sort_unstable();
    ConnectionSet {
        class_indices,
        elements,
        oriented,
    }
}

pub fn make_connection_set(conj: &ConjugacyData, classes: &[usize]) -> Result<ConnectionSet> {
    let sorted = validate_oriented_classes(classes, conj.class_inverses())?;
    Ok(union_of(conj, sorted, true))
}

/// Connection set from an element list, which must be a union of classes.
pub fn connection_set_from_elements(conj: &ConjugacyData, elements: &[usize]) -> Result<ConnectionSet> {
    let mut classes: Vec<usize> = elements.iter().map(|&g| conj.class_of(g)).collect();
    classes.sort_unstable();
    classes.dedup();
    let mut given = elements.to_vec();
    given.sort_unstable();
    given.dedup();
    let covered: usize = classes.iter().map(|&j| conj.class_size(j)).sum();
    if covered != given.len() {
        return Err(Error::InvalidInput(
            "element set is not a union of conjugacy classes".into(),
        ));
    }
    make_connection_set(conj, &classes)
}

/// Inverse-closed union of classes for the undirected analogue; the identity
/// class is still excluded.
pub fn make_undirected_connection_set(conj: &ConjugacyData, classes: &[usize]) -> Result<ConnectionSet> {
    let mut sorted = classes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&j| j >= conj.num_classes()) {
        return Err(Error::Orientation(vec![Violation::UnknownClass { class: bad }]));
    }
    if sorted.first() == Some(&0) {
        return Err(Error::Orientation(vec![Violation::IdentityClass]));
    }
    if sorted.iter().any(|&j| sorted.binary_search(&conj.class_inv(j)).is_err()) {
        return Err(Error::InvalidInput("undirected connection set must be inverse-closed".into()));
    }
    Ok(union_of(conj, sorted, false))
}

#[derive(Debug, Clone)]
pub struct OrientedCayleyGraph<'a> {
    group: &'a GroupTable,
    conj: &'a ConjugacyData,
    conn: ConnectionSet,
}

impl<'a> OrientedCayleyGraph<'a> {
    pub fn new(group: &'a GroupTable, conj: &'a ConjugacyData, conn: ConnectionSet) -> Result<Self> {
        if conj.class_sizes().iter().sum::<usize>() != group.order() {
            return Err(Error::InvalidInput("conjugacy data does not match the group".into()));
        }
        if !conn.is_oriented() {
            return Err(Error::InvalidInput("connection set is not oriented".into()));
        }
        Ok(OrientedCayleyGraph { group, conj, conn })
    }

    pub fn from_classes(group: &'a GroupTable, conj: &'a ConjugacyData, classes: &[usize]) -> Result<Self> {
        Self::new(group, conj, make_connection_set(conj, classes)?)
    }

    pub fn group(&self) -> &'a GroupTable {
        self.group
    }

    pub fn conj(&self) -> &'a ConjugacyData {
        self.conj
    }

    pub fn conn(&self) -> &ConnectionSet {
        &self.conn
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Arcs `(g, cg)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |g| self.conn.elements.iter().map(move |&c| (g, self.group.mul(c, g))))
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        signed_adjacency(self.group, self.conn.elements())
    }

    /// True iff `<C> = G`.
    pub fn is_connected(&self) -> bool {
        subgroup_closure(self.group, self.conn.elements()).len() == self.order()
    }
}

/// `A[cg][g] = +1`, `A[g][cg] = -1` for every arc `(g, cg)`.
pub fn signed_adjacency(group: &GroupTable, conn: &[usize]) -> DMatrix<f64> {
    let n = group.order();
    let mut a = DMatrix::zeros(n, n);
    for g in 0..n {
        for &c in conn {
            let h = group.mul(c, g);
            a[(h, g)] += 1.0;
            a[(g, h)] -= 1.0;
        }
    }
    a
}

/// `A_C` for an inverse-closed set: `A[cg][g] = 1`.
pub fn undirected_adjacency(group: &GroupTable, conn: &[usize]) -> DMatrix<f64> {
    let n = group.order();
    let mut a = DMatrix::zeros(n, n);
    for g in 0..n {
        for &c in conn {
            a[(group.mul(c, g), g)] += 1.0;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_abelian_power, build_cyclic, build_extraspecial3, conjugacy};

    #[test]
    fn z8_connection_sets() {
        let g = build_cyclic(8).unwrap();
        let c = conjugacy(&g);
        let cs = make_connection_set(&c, &[1, 2, 5]).unwrap();
        assert_eq!(cs.elements(), &[1, 2, 5]);
        match make_connection_set(&c, &[1, 7]) {
            Err(Error::Orientation(v)) => assert_eq!(v, vec![Violation::InversePair { class: 1, inverse: 7 }]),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            make_connection_set(&c, &[0, 1]),
            Err(Error::Orientation(v)) if v == vec![Violation::IdentityClass]
        ));
    }

    #[test]
    fn real_class_rejected() {
        let g = build_abelian_power(4, 2, 4096).unwrap();
        let c = conjugacy(&g);
        let x = g.find_label("(2,0)").unwrap();
        assert!(matches!(
            make_connection_set(&c, &[c.class_of(x)]),
            Err(Error::Orientation(v)) if v == vec![Violation::RealClass { class: c.class_of(x) }]
        ));
    }

    #[test]
    fn z3_adjacency_first_row() {
        let g = build_cyclic(3).unwrap();
        let c = conjugacy(&g);
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        let a = graph.adjacency_matrix();
        assert_eq!((a[(0, 0)], a[(0, 1)], a[(0, 2)]), (0.0, -1.0, 1.0));
        assert_eq!(a.clone() + a.transpose(), DMatrix::zeros(3, 3));
    }

    #[test]
    fn adjacency_rows_sum_to_zero() {
        let g = build_extraspecial3(1, 3, 4096).unwrap();
        let c = conjugacy(&g);
        let z = c.class_of(g.find_label("z").unwrap());
        let x = c.class_of(g.find_label("x").unwrap());
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[z, x]).unwrap();
        let a = graph.adjacency_matrix();
        for i in 0..27 {
            assert_eq!(a.row(i).sum(), 0.0);
            assert_eq!(a[(i, i)], 0.0);
        }
    }

    #[test]
    fn connectivity() {
        let g = build_cyclic(8).unwrap();
        let c = conjugacy(&g);
        assert!(OrientedCayleyGraph::from_classes(&g, &c, &[1, 2, 5]).unwrap().is_connected());
        let g = build_abelian_power(4, 2, 4096).unwrap();
        let c = conjugacy(&g);
        let x = g.find_label("(1,0)").unwrap();
        assert!(!OrientedCayleyGraph::from_classes(&g, &c, &[c.class_of(x)]).unwrap().is_connected());
    }

    #[test]
    fn element_input_must_be_class_union() {
        let g = build_extraspecial3(1, 3, 4096).unwrap();
        let c = conjugacy(&g);
        let x = g.find_label("x").unwrap();
        assert!(matches!(connection_set_from_elements(&c, &[x]), Err(Error::InvalidInput(_))));
        let cs = connection_set_from_elements(&c, c.class(c.class_of(x))).unwrap();
        assert_eq!(cs.class_indices(), &[c.class_of(x)]);
    }

    #[test]
    fn undirected_sets_must_be_inverse_closed() {
        let g = build_cyclic(4).unwrap();
        let c = conjugacy(&g);
        assert!(make_undirected_connection_set(&c, &[1]).is_err());
        let cs = make_undirected_connection_set(&c, &[1, 3]).unwrap();
        assert!(!cs.is_oriented());
        let a = undirected_adjacency(&g, cs.elements());
        assert_eq!(a.clone(), a.transpose());
    }
}
