use serde::{Deserialize, Serialize};

/// Default acceptance residual for the character criterion.
pub const CRITERION_TOL: f64 = 1e-8;
/// Default fidelity slack for the walk oracle.
pub const ORACLE_TOL: f64 = 1e-7;
/// Default tolerance attached to character tables.
pub const TABLE_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_ORDER: usize = 4096;
pub const DEFAULT_MAX_CLASSES: usize = 128;
pub const DEFAULT_SEED: u64 = 42;

/// Tunables shared by the library entry points and the CLI.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunConfig {
    pub criterion_tol: f64,
    pub oracle_tol: f64,
    pub table_tol: f64,
    /// Candidate bound `K` for the time solver; `None` means `4 * |G|`.
    pub candidate_bound: Option<usize>,
    pub max_order: usize,
    pub max_classes: usize,
    pub threads: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            criterion_tol: CRITERION_TOL,
            oracle_tol: ORACLE_TOL,
            table_tol: TABLE_TOL,
            candidate_bound: None,
            max_order: DEFAULT_MAX_ORDER,
            max_classes: DEFAULT_MAX_CLASSES,
            threads: 1,
            seed: DEFAULT_SEED,
        }
    }
}

impl RunConfig {
    pub fn candidate_bound_for(&self, order: usize) -> usize {
        self.candidate_bound.unwrap_or(4 * order)
    }

    pub fn validate(&self) -> crate::Result<()> {
        let positive = [
            ("criterion_tol", self.criterion_tol),
            ("oracle_tol", self.oracle_tol),
            ("table_tol", self.table_tol),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(crate::Error::InvalidParameter(format!("{name} must be positive")));
            }
        }
        if self.max_order == 0 || self.max_classes == 0 || self.threads == 0 {
            return Err(crate::Error::InvalidParameter(
                "max_order, max_classes and threads must be positive".into(),
            ));
        }
        if self.candidate_bound == Some(0) {
            return Err(crate::Error::InvalidParameter("candidate bound must be positive".into()));
        }
        Ok(())
    }
}
