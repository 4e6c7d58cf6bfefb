//! Corpora of embedded graphs for the exhaustive checks.

use rayon::prelude::*;

use super::embed::{all_embeddings, embed_planar, EMBED_LIMIT};
use super::enumerate::{enumerate_class, Class, Enumerated, ENUMERATION_GUARD};
use super::search::planar_cycle_free;
use super::OracleError;
use crate::blocks::find_sparse_set;
use crate::graph::SmallGraph;
use crate::plane_graph::PlaneGraph;
use crate::Rational;

#[derive(Debug, Clone, Copy, Default)]
pub struct CorpusOptions {
    /// Emit every embedding (up to map isomorphism) instead of one per
    /// abstract graph.
    pub all_embeddings: bool,
}

fn embeddings(g: &SmallGraph, opts: CorpusOptions) -> Vec<PlaneGraph> {
    if opts.all_embeddings && g.vertex_count() <= EMBED_LIMIT {
        all_embeddings(g)
    } else {
        embed_planar(g).into_iter().collect()
    }
}

fn guard(n: usize) -> Result<(), OracleError> {
    if n > ENUMERATION_GUARD {
        return Err(OracleError::GuardExceeded {
            asked: n,
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

fn two_connected_members(n: usize, class: &Class<'_>, opts: CorpusOptions) -> Vec<PlaneGraph> {
    let level: Vec<Enumerated> = enumerate_class(n, class);
    let per_graph: Vec<Vec<PlaneGraph>> = level
        .par_iter()
        .map(|e| {
            let g = e.graph();
            if g.is_two_connected() {
                embeddings(&g, opts)
            } else {
                Vec::new()
            }
        })
        .collect();
    per_graph.into_iter().flatten().collect()
}

/// 2-connected planar graphs on `n` vertices, embedded.
pub fn planar_two_connected(n: usize, opts: CorpusOptions) -> Result<Vec<PlaneGraph>, OracleError> {
    guard(n)?;
    let keep = |g: &SmallGraph| super::is_planar(g);
    let class = Class {
        keep: &keep,
        max_degree: None,
    };
    Ok(two_connected_members(n, &class, opts))
}

/// 2-connected planar graphs on `n` vertices with no 7-cycle, embedded.
pub fn c7_free_two_connected(n: usize, opts: CorpusOptions) -> Result<Vec<PlaneGraph>, OracleError> {
    guard(n)?;
    let keep = planar_cycle_free(7);
    let class = Class {
        keep: &keep,
        max_degree: None,
    };
    Ok(two_connected_members(n, &class, opts))
}

/// Members of the class on `n` vertices: 2-connected, planar, no 7-cycle
/// and no (18/7)-sparse set of order at most 4.
pub fn corpus_p_n(n: usize, opts: CorpusOptions) -> Result<Vec<PlaneGraph>, OracleError> {
    if n < 7 {
        return Err(OracleError::TooSmall { asked: n, min: 7 });
    }
    let alpha = Rational::new(18, 7);
    Ok(c7_free_two_connected(n, opts)?
        .into_iter()
        .filter(|g| find_sparse_set(g, &alpha, 4).expect("within guard").is_none())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_connected_planar_counts() {
        // 2-connected planar graphs on 3, 4, 5 vertices
        let counts: Vec<usize> = (3..=5)
            .map(|n| planar_two_connected(n, CorpusOptions::default()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 9]);
    }

    #[test]
    fn small_corpus_sizes() {
        assert!(corpus_p_n(6, CorpusOptions::default()).is_err());
        for g in corpus_p_n(7, CorpusOptions::default()).unwrap() {
            assert!(g.is_two_connected());
            assert!(7 * g.edge_count() <= 18 * 7 - 48);
        }
    }
}
