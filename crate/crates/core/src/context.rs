use crate::cayley::{make_connection_set, OrientedCayleyGraph};
use crate::characters::{
    abelian_character_table, character_table_numerical_with, galois_stabilizers, CharacterTable,
    GaloisData,
};
use crate::group::{conjugacy, ConjugacyData, GroupSpec, GroupTable};
use crate::{Result, RunConfig};

/// A group together with its classes and character table.
///
/// `Z_r^n` families get the closed-form table; everything else goes through
/// the numerical solver.
#[derive(Debug, Clone)]
pub struct GroupContext {
    pub group: GroupTable,
    pub conj: ConjugacyData,
    pub table: CharacterTable,
}

impl GroupContext {
    pub fn new(group: GroupTable, cfg: &RunConfig) -> Result<Self> {
        let conj = conjugacy(&group);
        let table = match group.family().and_then(GroupSpec::as_abelian_power) {
            Some((r, n)) if r >= 2 => abelian_character_table(r, n)?,
            _ => character_table_numerical_with(&group, &conj, cfg.seed, cfg.max_classes, cfg.table_tol)?,
        };
        Ok(GroupContext { group, conj, table })
    }

    pub fn from_spec(spec: &GroupSpec, cfg: &RunConfig) -> Result<Self> {
        Self::new(spec.build(cfg.max_order)?, cfg)
    }

    pub fn graph(&self, classes: &[usize]) -> Result<OrientedCayleyGraph<'_>> {
        OrientedCayleyGraph::new(&self.group, &self.conj, make_connection_set(&self.conj, classes)?)
    }

    pub fn galois(&self) -> Result<GaloisData> {
        galois_stabilizers(&self.table, &self.conj.power_maps())
    }
}
