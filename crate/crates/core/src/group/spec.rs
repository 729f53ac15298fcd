use std::fmt;
use std::str::FromStr;

use super::{
    build_abelian_power, build_cyclic, build_extraspecial3, build_modular_maximal_cyclic,
    build_symmetric, build_wreath_sym, GroupTable, WreathProduct,
};
use crate::{Error, Result};

/// Family tag and constructor recipe for a group.
///
/// The textual form doubles as the CLI group syntax:
/// `z:8`, `z4^2`, `extraspecial3:1` (or `extraspecial3:1:9`), `m2:5`,
/// `sym:5`, `wreath:<n>:<base>`. Spaces may stand in for colons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    AbelianPower { r: usize, n: usize },
    Extraspecial3 { n: usize, exponent: u32 },
    ModularMaximalCyclic(u32),
    Symmetric(usize),
    Wreath { base: Box<GroupSpec>, n: usize },
}

impl GroupSpec {
    pub fn build(&self, max_order: usize) -> Result<GroupTable> {
        match self {
            GroupSpec::Cyclic(r) => {
                super::check_max_order("cyclic group", *r as u128, max_order)?;
                build_cyclic(*r)
            }
            GroupSpec::AbelianPower { r, n } => build_abelian_power(*r, *n, max_order),
            GroupSpec::Extraspecial3 { n, exponent } => build_extraspecial3(*n, *exponent, max_order),
            GroupSpec::ModularMaximalCyclic(n) => build_modular_maximal_cyclic(*n, max_order),
            GroupSpec::Symmetric(n) => build_symmetric(*n, max_order),
            GroupSpec::Wreath { .. } => Ok(self.build_wreath(max_order)?.group),
        }
    }

    pub fn build_wreath(&self, max_order: usize) -> Result<WreathProduct> {
        match self {
            GroupSpec::Wreath { base, n } => {
                let base = base.build(max_order)?;
                build_wreath_sym(&base, *n, max_order)
            }
            other => Err(Error::InvalidParameter(format!("{other} is not a wreath product"))),
        }
    }

    /// Abelian-power view `(r, n)` of cyclic and `Z_r^n` specs.
    pub fn as_abelian_power(&self) -> Option<(usize, usize)> {
        match self {
            GroupSpec::Cyclic(r) => Some((*r, 1)),
            GroupSpec::AbelianPower { r, n } => Some((*r, *n)),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(r) => write!(f, "z:{r}"),
            GroupSpec::AbelianPower { r, n } => write!(f, "z{r}^{n}"),
            GroupSpec::Extraspecial3 { n, exponent: 3 } => write!(f, "extraspecial3:{n}"),
            GroupSpec::Extraspecial3 { n, exponent } => write!(f, "extraspecial3:{n}:{exponent}"),
            GroupSpec::ModularMaximalCyclic(n) => write!(f, "m2:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Wreath { base, n } => write!(f, "wreath:{n}:{base}"),
        }
    }
}

fn num<T: FromStr>(tok: Option<&str>, what: &str) -> Result<T> {
    tok.and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| Error::InvalidParameter(format!("expected {what}")))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.split_whitespace().collect::<Vec<_>>().join(":");
        let mut parts = norm.splitn(2, ':');
        let head = parts.next().unwrap_or_default().to_ascii_lowercase();
        let rest = parts.next();
        let spec = match head.as_str() {
            "z" => GroupSpec::Cyclic(num(rest, "cyclic order, e.g. z:8")?),
            "m2" => GroupSpec::ModularMaximalCyclic(num(rest, "n for m2:<n>")?),
            "sym" | "s" => GroupSpec::Symmetric(num(rest, "n for sym:<n>")?),
            "extraspecial3" => {
                let mut it = rest.unwrap_or_default().split(':');
                let n = num(it.next(), "n for extraspecial3:<n>")?;
                let exponent = match it.next() {
                    Some(e) => num(Some(e), "exponent 3 or 9")?,
                    None => 3,
                };
                GroupSpec::Extraspecial3 { n, exponent }
            }
            "wreath" => {
                let mut it = rest.unwrap_or_default().splitn(2, ':');
                let n = num(it.next(), "n for wreath:<n>:<base>")?;
                let base = it
                    .next()
                    .ok_or_else(|| Error::InvalidParameter("wreath needs a base group".into()))?
                    .parse::<GroupSpec>()?;
                GroupSpec::Wreath {
                    base: Box::new(base),
                    n,
                }
            }
            h if h.starts_with('z') && h.contains('^') && rest.is_none() => {
                let (r, n) = h[1..].split_once('^').unwrap();
                GroupSpec::AbelianPower {
                    r: num(Some(r), "r in z<r>^<n>")?,
                    n: num(Some(n), "n in z<r>^<n>")?,
                }
            }
            h if h.starts_with('z') && rest.is_none() && h.len() > 1 => {
                GroupSpec::Cyclic(num(Some(&h[1..]), "cyclic order")?)
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unrecognised group spec '{s}' (try z:8, z4^2, extraspecial3:1, m2:5, wreath:2:z:3)"
                )))
            }
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["z:8", "z4^2", "extraspecial3:1", "extraspecial3:1:9", "m2:5", "sym:5", "wreath:2:z:3", "wreath:2:wreath:2:z:2"] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("m2 5".parse::<GroupSpec>().unwrap(), GroupSpec::ModularMaximalCyclic(5));
        assert_eq!("z8".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(8));
        assert!("q:3".parse::<GroupSpec>().is_err());
        assert!("z:".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn family_tag_survives_build() {
        let spec: GroupSpec = "wreath:2:z:3".parse().unwrap();
        let g = spec.build(4096).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.family(), Some(&spec));
    }
}
