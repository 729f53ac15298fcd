use serde::Serialize;

use super::GroupTable;

/// Outcome of iterating `H -> [H, H]` from the whole group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedSeries {
    pub solvable: bool,
    /// Subgroup orders along the series, starting with `|G|`.
    pub orders: Vec<usize>,
}

impl DerivedSeries {
    /// Number of proper steps taken before the series stabilised.
    pub fn length(&self) -> usize {
        self.orders.len() - 1
    }
}

/// Smallest subgroup containing `generators`, as a sorted element list.
pub fn subgroup_closure(group: &GroupTable, generators: &[usize]) -> Vec<usize> {
    let mut member = vec![false; group.order()];
    let mut elements = vec![group.identity()];
    member[group.identity()] = true;
    let mut gens: Vec<usize> = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i];
        for &s in &gens {
            let y = group.mul(x, s);
            if !member[y] {
                member[y] = true;
                elements.push(y);
            }
        }
        i += 1;
    }
    elements.sort_unstable();
    elements
}

fn commutator_subgroup(group: &GroupTable, sub: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut gens = Vec::new();
    for &a in sub {
        for &b in sub {
            let c = group.product([a, b, group.inv(a), group.inv(b)]);
            if !seen[c] {
                seen[c] = true;
                gens.push(c);
            }
        }
    }
    subgroup_closure(group, &gens)
}

pub fn derived_series_solvable(group: &GroupTable) -> DerivedSeries {
    let mut current: Vec<usize> = (0..group.order()).collect();
    let mut orders = vec![current.len()];
    while current.len() > 1 {
        let next = commutator_subgroup(group, &current);
        if next.len() == current.len() {
            return DerivedSeries {
                solvable: false,
                orders,
            };
        }
        orders.push(next.len());
        current = next;
    }
    DerivedSeries {
        solvable: true,
        orders,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_abelian_power, build_modular_maximal_cyclic, build_symmetric};

    #[test]
    fn abelian_series_has_length_one() {
        let g = build_abelian_power(4, 2, 4096).unwrap();
        let s = derived_series_solvable(&g);
        assert!(s.solvable);
        assert_eq!(s.length(), 1);
        assert_eq!(s.orders, vec![16, 1]);
    }

    #[test]
    fn modular_group_derived_subgroup_has_order_two() {
        let g = build_modular_maximal_cyclic(5, 4096).unwrap();
        let s = derived_series_solvable(&g);
        assert!(s.solvable);
        assert_eq!(s.orders, vec![32, 2, 1]);
        let x = g.find_label("x").unwrap();
        let gens: Vec<usize> = (0..32)
            .flat_map(|a| (0..32).map(move |b| (a, b)))
            .map(|(a, b)| g.product([a, b, g.inv(a), g.inv(b)]))
            .collect();
        assert_eq!(subgroup_closure(&g, &gens), {
            let mut v = vec![0, g.pow(x, 8)];
            v.sort();
            v
        });
    }

    #[test]
    fn s5_is_not_solvable() {
        let g = build_symmetric(5, 4096).unwrap();
        let s = derived_series_solvable(&g);
        assert!(!s.solvable);
        assert_eq!(s.orders, vec![120, 60]);
    }

    #[test]
    fn s4_is_solvable() {
        let g = build_symmetric(4, 4096).unwrap();
        let s = derived_series_solvable(&g);
        assert!(s.solvable);
        assert_eq!(s.orders, vec![24, 12, 4, 1]);
    }
}
