//! Wreath products `G wr S_n = G^n x| S_n`.
//!
//! `S_n` acts on tuples by `(p . x)_i = x_(p^-1(i))`, so
//! `(x; p)(y; q) = (x * (p . y); p q)` with `(p q)(i) = p(q(i))`.
//! Elements are indexed in mixed radix: tuple digits major (first coordinate
//! most significant), lexicographic permutation rank minor.

use super::build::{factorial, one_line, permutation_rank, permutation_unrank};
use super::{check_max_order, ConjugacyData, GroupSpec, GroupTable};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    /// Base-group element indices, one per coordinate.
    pub tuple: Vec<usize>,
    /// One-line notation on `0..n`: `perm[i]` is the image of `i`.
    pub perm: Vec<usize>,
}

impl WreathElement {
    pub fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    pub fn multiply(&self, other: &WreathElement, base: &GroupTable) -> WreathElement {
        let inv = self.inverse_perm();
        let tuple = (0..self.tuple.len())
            .map(|i| base.mul(self.tuple[i], other.tuple[inv[i]]))
            .collect();
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        WreathElement { tuple, perm }
    }
}

#[derive(Debug, Clone)]
pub struct WreathProduct {
    pub group: GroupTable,
    pub base: GroupTable,
    pub n: usize,
    elements: Vec<WreathElement>,
}

impl WreathProduct {
    pub fn element(&self, idx: usize) -> &WreathElement {
        &self.elements[idx]
    }

    pub fn elements(&self) -> &[WreathElement] {
        &self.elements
    }

    pub fn index_of(&self, w: &WreathElement) -> usize {
        let b = self.base.order();
        let t = w.tuple.iter().fold(0usize, |acc, &x| acc * b + x);
        t * factorial(self.n) as usize + permutation_rank(&w.perm)
    }

    /// The element `((g, ..., g); id)`.
    pub fn diagonal(&self, g: usize) -> usize {
        self.index_of(&WreathElement {
            tuple: vec![g; self.n],
            perm: (0..self.n).collect(),
        })
    }
}

pub fn build_wreath_sym(base: &GroupTable, n: usize, max_order: usize) -> Result<WreathProduct> {
    if n == 0 {
        return Err(Error::InvalidParameter("wreath product needs n >= 1".into()));
    }
    let b = base.order() as u128;
    let order = b
        .checked_pow(n as u32)
        .and_then(|x| x.checked_mul(factorial(n)))
        .unwrap_or(u128::MAX);
    check_max_order("wreath product", order, max_order)?;
    let order = order as usize;
    let nfact = factorial(n) as usize;
    let perms: Vec<Vec<usize>> = (0..nfact).map(|r| permutation_unrank(r, n)).collect();
    let elements: Vec<WreathElement> = (0..order)
        .map(|idx| {
            let (mut t, r) = (idx / nfact, idx % nfact);
            let mut tuple = vec![0; n];
            for k in (0..n).rev() {
                tuple[k] = t % base.order();
                t /= base.order();
            }
            WreathElement {
                tuple,
                perm: perms[r].clone(),
            }
        })
        .collect();
    let labels = elements
        .iter()
        .map(|w| {
            let t: Vec<&str> = w.tuple.iter().map(|&x| base.label(x)).collect();
            format!("[{}|{}]", t.join(","), one_line(&w.perm))
        })
        .collect();

    let family = base.family().map(|f| GroupSpec::Wreath {
        base: Box::new(f.clone()),
        n,
    });
    let mut shell = WreathProduct {
        group: GroupTable {
            order: 1,
            mul: vec![0],
            identity: 0,
            inv: vec![0],
            labels: vec![String::new()],
            family: None,
        },
        base: base.clone(),
        n,
        elements,
    };
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        for bb in 0..order {
            let prod = shell.elements[a].multiply(&shell.elements[bb], base);
            mul.push(shell.index_of(&prod) as u32);
        }
    }
    let identity = shell.index_of(&WreathElement {
        tuple: vec![base.identity(); n],
        perm: (0..n).collect(),
    });
    shell.group = GroupTable::from_parts(order, identity, mul, labels, family)?;
    Ok(shell)
}

/// Disjoint cycles of a permutation, each listed from its smallest point as
/// `(a, p(a), p^2(a), ...)`, fixed points included.
pub fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push(cycle);
    }
    out
}

/// Cycle product `y_a y_(k^-1(a)) ... y_(k^(-r+1)(a))` where `a` is the
/// smallest point of the cycle `k`, given in cycle notation
/// `(c_0, k(c_0), k^2(c_0), ...)` on 0-based coordinates.
pub fn cycle_product(base: &GroupTable, tuple: &[usize], cycle: &[usize]) -> Result<usize> {
    if cycle.is_empty() {
        return Err(Error::InvalidParameter("empty cycle".into()));
    }
    let mut seen = vec![false; tuple.len()];
    for &c in cycle {
        if c >= tuple.len() || seen[c] {
            return Err(Error::InvalidParameter(format!("malformed cycle {cycle:?}")));
        }
        seen[c] = true;
    }
    let r = cycle.len();
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &c)| c)
        .map(|(i, _)| i)
        .unwrap();
    Ok(base.product((0..r).map(|step| tuple[cycle[(start + r - step) % r]])))
}

/// `ty_g`: for each base conjugacy class, the cycle lengths (descending) whose
/// cycle product lies in that class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathType(pub Vec<Vec<usize>>);

impl WreathType {
    pub fn weight(&self) -> usize {
        self.0.iter().flatten().sum()
    }
}

pub fn wreath_type(base: &GroupTable, base_conj: &ConjugacyData, g: &WreathElement) -> WreathType {
    let mut parts = vec![Vec::new(); base_conj.num_classes()];
    for cycle in cycles_of(&g.perm) {
        let prod = cycle_product(base, &g.tuple, &cycle).expect("cycles of a permutation are valid");
        parts[base_conj.class_of(prod)].push(cycle.len());
    }
    for p in &mut parts {
        p.sort_unstable_by(|a, b| b.cmp(a));
    }
    WreathType(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_symmetric, conjugacy};

    #[test]
    fn orders() {
        let z3 = build_cyclic(3).unwrap();
        assert_eq!(build_wreath_sym(&z3, 2, 4096).unwrap().group.order(), 18);
        assert_eq!(build_wreath_sym(&z3, 3, 4096).unwrap().group.order(), 162);
        assert!(matches!(
            build_wreath_sym(&z3, 6, 4096),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn z2_wreath_s2_is_dihedral_with_five_classes() {
        let z2 = build_cyclic(2).unwrap();
        let w = build_wreath_sym(&z2, 2, 4096).unwrap();
        assert_eq!(w.group.order(), 8);
        assert!(!w.group.is_abelian());
        assert_eq!(conjugacy(&w.group).num_classes(), 5);
        assert_eq!(w.group.identity(), 0);
    }

    #[test]
    fn cycle_products_in_s3() {
        // Non-abelian base so the order of factors is visible: a, b, c in S_3.
        let s3 = build_symmetric(3, 4096).unwrap();
        let (a, b, c) = (1, 2, 3);
        let t = [a, b, c];
        // sigma = (1 2 3), beta = (2 3), sigma^-1 = (1 3 2) in 0-based cycle notation
        assert_eq!(cycle_product(&s3, &t, &[0, 1, 2]).unwrap(), s3.product([a, c, b]));
        assert_eq!(cycle_product(&s3, &t, &[1, 2]).unwrap(), s3.product([b, c]));
        assert_eq!(cycle_product(&s3, &t, &[0, 2, 1]).unwrap(), s3.product([a, b, c]));
        // same cycle as (1 2 3), listed from another point
        assert_eq!(cycle_product(&s3, &t, &[2, 0, 1]).unwrap(), s3.product([a, c, b]));
        assert!(cycle_product(&s3, &t, &[0, 0]).is_err());
        assert!(cycle_product(&s3, &t, &[3]).is_err());
    }

    #[test]
    fn multiplication_matches_definition() {
        let s3 = build_symmetric(3, 4096).unwrap();
        let w = build_wreath_sym(&s3, 2, 4096).unwrap();
        for a in (0..w.group.order()).step_by(7) {
            for b in (0..w.group.order()).step_by(5) {
                let (x, y) = (w.element(a), w.element(b));
                let inv = x.inverse_perm();
                let tuple: Vec<usize> = (0..2).map(|i| s3.mul(x.tuple[i], y.tuple[inv[i]])).collect();
                let perm: Vec<usize> = (0..2).map(|i| x.perm[y.perm[i]]).collect();
                let expect = w.index_of(&WreathElement { tuple, perm });
                assert_eq!(w.group.mul(a, b), expect);
            }
        }
    }

    #[test]
    fn types_of_small_elements() {
        let z3 = build_cyclic(3).unwrap();
        let conj = conjugacy(&z3);
        let w = build_wreath_sym(&z3, 2, 4096).unwrap();
        let ty = wreath_type(&z3, &conj, w.element(w.group.identity()));
        assert_eq!(ty, WreathType(vec![vec![1, 1], vec![], vec![]]));
        let g = WreathElement {
            tuple: vec![1, 0],
            perm: vec![1, 0],
        };
        assert_eq!(wreath_type(&z3, &conj, &g), WreathType(vec![vec![], vec![2], vec![]]));
        assert_eq!(wreath_type(&z3, &conj, &g).weight(), 2);
    }
}
