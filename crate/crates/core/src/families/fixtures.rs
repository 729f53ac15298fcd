//! JSON form of family certificates.

use serde::{Deserialize, Serialize};

use super::{
    family_extraspecial3, family_m2, family_z3n, family_z4n, wreath_lift, z8_example, BasisChoice, Claim,
    FamilyCertificate, TauTag,
};
use crate::cayley::make_connection_set;
use crate::group::GroupSpec;
use crate::{Error, GroupContext, Result, RunConfig};

/// The certificate list shipped with the crate.
pub const SHIPPED_FIXTURES: &str = include_str!("../../fixtures/certificates.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateFixture {
    pub name: String,
    pub group: String,
    /// Conjugacy class indices of the connection set.
    pub classes: Vec<usize>,
    /// Element label of the target.
    pub target: String,
    pub tau: String,
    pub claim: String,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub certificates: Vec<CertificateFixture>,
}

impl FixtureFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("fixture file: {e}")))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fixtures serialize");
        s.push('\n');
        s
    }
}

impl FamilyCertificate {
    pub fn to_fixture(&self) -> CertificateFixture {
        CertificateFixture {
            name: self.name.clone(),
            group: self.ctx.group.tag(),
            classes: self.conn.class_indices().to_vec(),
            target: self.ctx.group.label(self.z).to_string(),
            tau: self.tau.to_string(),
            claim: self.claim.tag(),
            source: self.source.clone(),
        }
    }

    pub fn from_fixture(f: &CertificateFixture, cfg: &RunConfig) -> Result<Self> {
        let spec: GroupSpec = f.group.parse()?;
        let ctx = GroupContext::from_spec(&spec, cfg)?;
        let conn = make_connection_set(&ctx.conj, &f.classes)?;
        let z = ctx
            .group
            .find_label(&f.target)
            .ok_or_else(|| Error::InvalidInput(format!("{}: no element '{}'", f.name, f.target)))?;
        FamilyCertificate {
            name: f.name.clone(),
            conn,
            z,
            tau: TauTag::parse(&f.tau)?,
            claim: Claim::parse(&f.claim)?,
            source: f.source.clone(),
            notes: Vec::new(),
            ctx,
        }
        .validate()
    }
}

fn elements(spec: &str, labels: &[&str], cfg: &RunConfig) -> Result<Vec<usize>> {
    let g = spec.parse::<GroupSpec>()?.build(cfg.max_order)?;
    labels
        .iter()
        .map(|s| g.find_label(s).ok_or_else(|| Error::InvalidInput(format!("no element {s}"))))
        .collect()
}

/// The standard certificate list, generated from the family constructors.
pub fn default_certificates(cfg: &RunConfig) -> Result<Vec<FamilyCertificate>> {
    let z3 = family_z3n(1, &[1], cfg)?;
    let z4 = family_z4n(1, &[1], cfg)?;
    let mut out = vec![
        family_z3n(2, &elements("z3^2", &["(1,0)", "(0,1)", "(1,1)"], cfg)?, cfg)?,
        family_z3n(3, &elements("z3^3", &["(1,0,0)", "(0,1,0)", "(0,0,1)", "(1,2,0)"], cfg)?, cfg)?,
        family_z3n(2, &elements("z3^2", &["(1,0)", "(2,1)", "(0,2)"], cfg)?, cfg)?,
        family_z4n(2, &elements("z4^2", &["(1,0)", "(0,1)"], cfg)?, cfg)?,
        family_z4n(2, &elements("z4^2", &["(1,0)", "(0,1)", "(1,1)"], cfg)?, cfg)?,
        family_extraspecial3(1, 3, BasisChoice::Canonical, cfg)?,
        family_extraspecial3(1, 9, BasisChoice::Canonical, cfg)?,
        family_extraspecial3(2, 3, BasisChoice::Canonical, cfg)?,
        family_m2(5, cfg)?,
        family_m2(6, cfg)?,
        z8_example(cfg)?,
        wreath_lift(&z3, 2, cfg)?,
        wreath_lift(&z3, 3, cfg)?,
        wreath_lift(&z4, 2, cfg)?,
    ];
    out.insert(0, z4);
    out.insert(0, z3);
    Ok(out)
}

pub fn fixture_document(certs: &[FamilyCertificate]) -> FixtureFile {
    FixtureFile {
        certificates: certs.iter().map(FamilyCertificate::to_fixture).collect(),
    }
}

pub fn load_fixtures(text: &str, cfg: &RunConfig) -> Result<Vec<FamilyCertificate>> {
    FixtureFile::parse(text)?
        .certificates
        .iter()
        .map(|f| FamilyCertificate::from_fixture(f, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_documents() {
        let cfg = RunConfig::default();
        assert!(matches!(load_fixtures("[]", &cfg), Err(Error::Schema(_))));
        let bad = r#"{"certificates":[{"name":"x","group":"z:3","classes":[1],"target":"q","tau":"pi/2","claim":"pst:3","source":""}]}"#;
        assert!(load_fixtures(bad, &cfg).is_err());
        let bad = r#"{"certificates":[{"name":"x","group":"z:3","classes":[1],"target":"1","tau":"pi/2","claim":"pst:2","source":""}]}"#;
        assert!(matches!(load_fixtures(bad, &cfg), Err(Error::InvariantBreach(_))));
    }
}
