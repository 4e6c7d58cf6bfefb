//! Exhaustive checks of structural facts about near triangulations and
//! triangular-blocks over small generated instances.
//!
//! Every verifier returns a [`LemmaReport`]; a violation is data, carrying
//! the offending graph in `.rot` form so it can be replayed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

mod near;
mod verify;

pub use near::{
    enumerate_near_triangulations, near_triangulations_by_filter, NearTriangulation,
    NEAR_TRIANGULATION_GUARD,
};
pub use verify::{
    hpath_exceptions, verify_block_catalog, verify_bound, verify_charges, verify_lemma_hpath,
    verify_lemma_paths, HpathExceptions, Lemma,
};

use crate::oracle::OracleError;

#[derive(Debug, thiserror::Error)]
pub enum LemmaError {
    #[error("requested size {asked} exceeds the limit {limit}")]
    GuardExceeded { asked: usize, limit: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub rot: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub max_n: usize,
    pub instances: usize,
    pub violations: Vec<Counterexample>,
    pub census: BTreeMap<String, usize>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}
