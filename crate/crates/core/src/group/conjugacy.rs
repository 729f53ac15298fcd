use std::collections::BTreeMap;

use super::{gcd, lcm, GroupTable};

/// Conjugacy classes and the class-level maps derived from them.
///
/// Class 0 is always `{identity}`; the remaining classes are ordered by their
/// smallest element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    class_inv: Vec<usize>,
    center: Vec<usize>,
    exponent: u64,
    element_orders: Vec<u64>,
    /// For each class, the classes of `rep^0, rep^1, ..., rep^(ord-1)`.
    power_cycles: Vec<Vec<usize>>,
}

pub fn conjugacy(group: &GroupTable) -> ConjugacyData {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();

    let visit = |start: usize, classes: &mut Vec<Vec<usize>>, class_of: &mut Vec<usize>| {
        let idx = classes.len();
        let mut members = Vec::new();
        for g in 0..n {
            let h = group.conjugate(start, g);
            if class_of[h] == usize::MAX {
                class_of[h] = idx;
                members.push(h);
            }
        }
        members.sort_unstable();
        classes.push(members);
    };
    visit(group.identity(), &mut classes, &mut class_of);
    for g in 0..n {
        if class_of[g] == usize::MAX {
            visit(g, &mut classes, &mut class_of);
        }
    }

    let class_inv = classes
        .iter()
        .map(|c| class_of[group.inv(c[0])])
        .collect();
    let center = classes
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect::<Vec<_>>();
    let mut center = center;
    center.sort_unstable();

    let element_orders: Vec<u64> = (0..n).map(|g| group.element_order(g)).collect();
    let exponent = element_orders.iter().fold(1, |acc, &o| lcm(acc, o));

    let power_cycles = classes
        .iter()
        .map(|c| {
            let rep = c[0];
            let ord = element_orders[rep] as usize;
            let mut cycle = Vec::with_capacity(ord);
            let mut x = group.identity();
            for _ in 0..ord {
                cycle.push(class_of[x]);
                x = group.mul(x, rep);
            }
            cycle
        })
        .collect();

    ConjugacyData {
        classes,
        class_of,
        class_inv,
        center,
        exponent,
        element_orders,
        power_cycles,
    }
}

impl ConjugacyData {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, j: usize) -> &[usize] {
        &self.classes[j]
    }

    pub fn class_size(&self, j: usize) -> usize {
        self.classes[j].len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn representative(&self, j: usize) -> usize {
        self.classes[j][0]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_inv(&self, j: usize) -> usize {
        self.class_inv[j]
    }

    pub fn class_inverses(&self) -> &[usize] {
        &self.class_inv
    }

    /// A class is real when it is closed under inversion.
    pub fn is_real(&self, j: usize) -> bool {
        self.class_inv[j] == j
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn is_central(&self, g: usize) -> bool {
        self.classes[self.class_of[g]].len() == 1
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.element_orders[g]
    }

    /// Permutation of class indices sending the class of `g` to the class of `g^k`.
    pub fn class_power(&self, k: i64) -> Vec<usize> {
        let m = self.exponent as i64;
        let k = k.rem_euclid(m) as u64;
        self.power_cycles
            .iter()
            .map(|cycle| cycle[(k % cycle.len() as u64) as usize])
            .collect()
    }

    /// Power maps for every unit modulo the exponent.
    pub fn power_maps(&self) -> PowerMaps {
        let m = self.exponent;
        let maps = (1..=m.max(1))
            .filter(|&k| gcd(k, m) == 1)
            .map(|k| (k % m.max(1), self.class_power(k as i64)))
            .collect();
        PowerMaps { exponent: m, maps }
    }
}

/// Class power maps indexed by residues coprime to the exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerMaps {
    pub exponent: u64,
    pub maps: BTreeMap<u64, Vec<usize>>,
}

impl PowerMaps {
    pub fn units(&self) -> Vec<u64> {
        units_mod(self.exponent)
    }
}

pub(crate) fn units_mod(m: u64) -> Vec<u64> {
    if m <= 1 {
        return vec![0];
    }
    (1..m).filter(|&k| gcd(k, m) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        build_abelian_power, build_cyclic, build_extraspecial3, build_modular_maximal_cyclic,
    };

    #[test]
    fn cyclic_classes_are_singletons() {
        let g = build_cyclic(8).unwrap();
        let c = conjugacy(&g);
        assert_eq!(c.num_classes(), 8);
        assert_eq!(c.center(), (0..8).collect::<Vec<_>>().as_slice());
        assert_eq!(c.exponent(), 8);
    }

    #[test]
    fn modular_group_has_twenty_classes() {
        let g = build_modular_maximal_cyclic(5, 4096).unwrap();
        let c = conjugacy(&g);
        assert_eq!(c.num_classes(), 20);
        assert_eq!(c.center().len(), 8);
        assert_eq!(c.classes().iter().filter(|k| k.len() == 2).count(), 12);
        let x = g.find_label("x").unwrap();
        let x9 = g.find_label("x^9").unwrap();
        let mut expect = vec![x, x9];
        expect.sort();
        assert_eq!(c.class(c.class_of(x)), expect.as_slice());
        // center is <x^2>
        let mut x2: Vec<usize> = (0..8).map(|k| g.pow(x, 2 * k)).collect();
        x2.sort();
        assert_eq!(c.center(), x2.as_slice());
    }

    #[test]
    fn extraspecial_classes_and_inverse_map() {
        let g = build_extraspecial3(1, 3, 4096).unwrap();
        let c = conjugacy(&g);
        assert_eq!(c.num_classes(), 11);
        assert_eq!(c.center().len(), 3);
        let z = g.find_label("z").unwrap();
        let z2 = g.find_label("z^2").unwrap();
        assert_eq!(c.class_inv(0), 0);
        assert_eq!(c.class_inv(c.class_of(z)), c.class_of(z2));
        // noncentral class = coset gZ
        for k in c.classes().iter().filter(|k| k.len() > 1) {
            let g0 = k[0];
            let mut coset: Vec<usize> = c.center().iter().map(|&w| g.mul(g0, w)).collect();
            coset.sort();
            assert_eq!(&coset, k);
        }
    }

    #[test]
    fn class_power_composition() {
        let g = build_abelian_power(4, 2, 4096).unwrap();
        let c = conjugacy(&g);
        assert_eq!(c.class_power(1), (0..16).collect::<Vec<_>>());
        let m = c.exponent() as i64;
        for j in 0..m {
            for k in 0..m {
                let pj = c.class_power(j);
                let pk = c.class_power(k);
                let composed: Vec<usize> = pj.iter().map(|&x| pk[x]).collect();
                assert_eq!(composed, c.class_power(j * k % m));
            }
        }
        assert_eq!(c.class_power(5), c.class_power(1));
    }
}
