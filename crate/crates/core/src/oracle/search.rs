//! Exact planar Turán numbers for cycles and girth-8 host search.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::embed::{embed_planar, is_planar};
use super::enumerate::{enumerate_class, Class, Enumerated, ENUMERATION_GUARD};
use super::{Cache, OracleError};
use crate::cycle_search::{cycle_in, girth_of};
use crate::graph::SmallGraph;
use crate::plane_graph::{to_rot, PlaneGraph};

/// Maximum edge count over planar `C_ell`-free graphs on `n` vertices, with
/// every extremal graph (one embedding each, in canonical order).
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub n: usize,
    pub ell: usize,
    pub max_edges: usize,
    pub witnesses: Vec<PlaneGraph>,
    /// Size of the class on `n` vertices (up to isomorphism).
    pub graphs_examined: usize,
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SearchResult", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("ell", &self.ell)?;
        st.serialize_field("max_edges", &self.max_edges)?;
        let rots: Vec<String> = self.witnesses.iter().map(to_rot).collect();
        st.serialize_field("witnesses", &rots)?;
        st.serialize_field("graphs_examined", &self.graphs_examined)?;
        st.end()
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub cache: Option<Cache>,
    pub resume: bool,
}

/// Membership test for planar graphs without a cycle of length `ell`.
pub fn planar_cycle_free(ell: usize) -> impl Fn(&SmallGraph) -> bool + Sync {
    move |g: &SmallGraph| {
        let n = g.vertex_count();
        (n < 3 || g.edge_count() <= 3 * n - 6) && cycle_in(&g.adjacency(), ell).is_none() && is_planar(g)
    }
}

pub fn ex_planar(n: usize, ell: usize) -> Result<SearchResult, OracleError> {
    ex_planar_with(n, ell, &SearchOptions::default())
}

/// The class is hereditary, so it is enumerated directly and its maximum
/// edge count read off.
pub fn ex_planar_with(n: usize, ell: usize, opts: &SearchOptions) -> Result<SearchResult, OracleError> {
    if n > ENUMERATION_GUARD {
        return Err(OracleError::GuardExceeded {
            asked: n,
            limit: ENUMERATION_GUARD,
        });
    }
    if ell < 3 {
        return Err(OracleError::BadCycleLength(ell));
    }
    if n == 0 {
        return Err(OracleError::TooSmall { asked: 0, min: 1 });
    }
    let keep = planar_cycle_free(ell);
    let class = Class {
        keep: &keep,
        max_degree: None,
    };
    let level: Vec<Enumerated> = match &opts.cache {
        Some(c) => c.enumerate(&format!("planar-c{ell}-free"), n, &class, opts.resume)?,
        None => enumerate_class(n, &class),
    };
    let graphs: Vec<SmallGraph> = level.iter().map(Enumerated::graph).collect();
    let max_edges = graphs.iter().map(SmallGraph::edge_count).max().unwrap_or(0);
    let witnesses = graphs
        .iter()
        .filter(|g| g.edge_count() == max_edges)
        .map(|g| embed_planar(g).expect("class members are planar"))
        .collect();
    Ok(SearchResult {
        n,
        ell,
        max_edges,
        witnesses,
        graphs_examined: graphs.len(),
    })
}

/// Largest order accepted by [`find_hosts`].
pub const HOST_GUARD: usize = 16;

/// Connected planar graphs on `n` vertices with girth 8, all degrees in
/// {2, 3} and exactly `4(n - 2)/3` edges.
pub fn find_hosts(n: usize) -> Result<Vec<PlaneGraph>, OracleError> {
    if n > HOST_GUARD {
        return Err(OracleError::GuardExceeded {
            asked: n,
            limit: HOST_GUARD,
        });
    }
    if n < 8 || (4 * (n - 2)) % 3 != 0 {
        return Ok(Vec::new());
    }
    let target = 4 * (n - 2) / 3;
    let keep = |g: &SmallGraph| girth_of(&g.adjacency()).is_none_or(|x| x >= 8) && is_planar(g);
    let class = Class {
        keep: &keep,
        max_degree: Some(3),
    };
    Ok(enumerate_class(n, &class)
        .iter()
        .map(Enumerated::graph)
        .filter(|g| {
            g.edge_count() == target
                && g.is_connected()
                && (0..n).all(|v| (2..=3).contains(&g.degree(v)))
                && girth_of(&g.adjacency()) == Some(8)
        })
        .map(|g| embed_planar(&g).expect("planar"))
        .collect())
}
