//! Finite groups as explicit multiplication tables.
//!
//! Every group in this crate is a [`GroupTable`]: elements are dense indices
//! `0..order`, the product `a * b` is a table lookup. Constructors for the
//! concrete families live in [`build`]; structural queries (conjugacy classes,
//! derived series, wreath products) in the sibling modules.

pub(crate) mod build;
mod conjugacy;
mod derived;
mod spec;
mod wreath;

pub use build::{
    build_abelian_power, build_cyclic, build_extraspecial3, build_modular_maximal_cyclic,
    build_symmetric, permutation_rank, permutation_unrank,
};
pub use conjugacy::{conjugacy, ConjugacyData, PowerMaps};
pub(crate) use conjugacy::units_mod;
pub use derived::{derived_series_solvable, subgroup_closure, DerivedSeries};
pub use spec::GroupSpec;
pub use wreath::{
    build_wreath_sym, cycle_product, cycles_of, wreath_type, WreathElement, WreathProduct,
    WreathType,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Orders up to this bound get a full O(n^3) associativity scan.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;
const SPOT_CHECK_SEED: u64 = 0x5eed_a550c;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    labels: Vec<String>,
    family: Option<GroupSpec>,
}

/// On-disk form of a group: `{ "order", "identity", "mul", "labels" }` plus an
/// optional family tag.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupDocument {
    pub order: usize,
    pub identity: usize,
    pub mul: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl GroupTable {
    /// Validates and assembles a group from a row-major multiplication table.
    pub fn from_parts(
        order: usize,
        identity: usize,
        mul: Vec<u32>,
        labels: Vec<String>,
        family: Option<GroupSpec>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("group order must be positive".into()));
        }
        if mul.len() != order * order {
            return Err(Error::InvalidInput(format!(
                "multiplication table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if labels.len() != order {
            return Err(Error::InvalidInput(format!(
                "{} labels for a group of order {order}",
                labels.len()
            )));
        }
        if identity >= order {
            return Err(Error::InvalidInput("identity index out of range".into()));
        }
        check_latin(order, &mul)?;
        for g in 0..order {
            if mul[identity * order + g] as usize != g || mul[g * order + identity] as usize != g {
                return Err(Error::InvalidInput(format!(
                    "element {identity} is not a two-sided identity (fails at {g})"
                )));
            }
        }
        let mut inv = vec![0u32; order];
        for g in 0..order {
            let row = &mul[g * order..(g + 1) * order];
            let h = row
                .iter()
                .position(|&x| x as usize == identity)
                .expect("latin row contains identity");
            if mul[h * order + g] as usize != identity {
                return Err(Error::InvalidInput(format!("element {g} has no two-sided inverse")));
            }
            inv[g] = h as u32;
        }
        let group = GroupTable {
            order,
            mul,
            identity,
            inv,
            labels,
            family,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let fail = |a: usize, b: usize, c: usize| {
            Err(Error::InvalidInput(format!("associativity fails on ({a}, {b}, {c})")))
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
            for _ in 0..10 * n {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g * h * g^-1`
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let mut result = self.identity;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, g: usize) -> u64 {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn product<I: IntoIterator<Item = usize>>(&self, elements: I) -> usize {
        elements
            .into_iter()
            .fold(self.identity, |acc, g| self.mul(acc, g))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    /// Looks an element up by its display label (whitespace-insensitive).
    pub fn find_label(&self, label: &str) -> Option<usize> {
        let key: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels
            .iter()
            .position(|l| l.chars().filter(|c| !c.is_whitespace()).eq(key.chars()))
    }

    pub fn family(&self) -> Option<&GroupSpec> {
        self.family.as_ref()
    }

    pub fn tag(&self) -> String {
        self.family
            .as_ref()
            .map(|f| f.to_string())
            .unwrap_or_else(|| "imported".to_string())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn to_document(&self) -> GroupDocument {
        GroupDocument {
            order: self.order,
            identity: self.identity,
            mul: self
                .mul
                .chunks(self.order)
                .map(|row| row.iter().map(|&x| x as usize).collect())
                .collect(),
            labels: self.labels.clone(),
            family: self.family.as_ref().map(|f| f.to_string()),
        }
    }

    pub fn from_document(doc: &GroupDocument) -> Result<Self> {
        if doc.mul.len() != doc.order || doc.mul.iter().any(|r| r.len() != doc.order) {
            return Err(Error::Schema("mul must be an order x order table".into()));
        }
        let mut mul = Vec::with_capacity(doc.order * doc.order);
        for row in &doc.mul {
            for &x in row {
                if x >= doc.order {
                    return Err(Error::Schema(format!("table entry {x} out of range")));
                }
                mul.push(x as u32);
            }
        }
        let family = match &doc.family {
            Some(tag) => Some(tag.parse::<GroupSpec>()?),
            None => None,
        };
        GroupTable::from_parts(doc.order, doc.identity, mul, doc.labels.clone(), family)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("group document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GroupDocument = serde_json::from_str(text)?;
        GroupTable::from_document(&doc)
    }
}

fn check_latin(order: usize, mul: &[u32]) -> Result<()> {
    let mut seen = vec![0usize; order];
    let mut stamp = 0usize;
    for r in 0..order {
        stamp += 1;
        for c in 0..order {
            let x = mul[r * order + c] as usize;
            if x >= order || seen[x] == stamp {
                return Err(Error::InvalidInput(format!("row {r} is not a permutation")));
            }
            seen[x] = stamp;
        }
    }
    for c in 0..order {
        stamp += 1;
        for r in 0..order {
            let x = mul[r * order + c] as usize;
            if seen[x] == stamp {
                return Err(Error::InvalidInput(format!("column {c} is not a permutation")));
            }
            seen[x] = stamp;
        }
    }
    Ok(())
}

pub(crate) fn check_max_order(what: &str, needed: u128, limit: usize) -> Result<()> {
    if needed > limit as u128 {
        return Err(Error::size(what, needed, limit as u128));
    }
    Ok(())
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
