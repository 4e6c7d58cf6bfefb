//! Brute-force ground truth: isomorph-free enumeration, planar embedding and
//! exact small planar Turán numbers.

mod cache;
mod corpus;
mod embed;
mod enumerate;
mod search;

pub use cache::Cache;
pub use corpus::{c7_free_two_connected, corpus_p_n, planar_two_connected, CorpusOptions};
pub use embed::{all_embeddings, embed_planar, is_planar, EMBED_LIMIT};
pub use enumerate::{
    canonical_extension, children, enumerate_abstract_graphs, enumerate_class, extend_level, Class,
    Enumerated, ENUMERATION_GUARD, GRAPH_COUNTS,
};
pub use search::{ex_planar, ex_planar_with, find_hosts, planar_cycle_free, SearchOptions, SearchResult};

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("requested size {asked} exceeds the limit {limit}")]
    GuardExceeded { asked: usize, limit: usize },
    #[error("requested size {asked} is below the minimum {min}")]
    TooSmall { asked: usize, min: usize },
    #[error("cycle length must be at least 3, got {0}")]
    BadCycleLength(usize),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
