//! Extremal and boundary families, each returned with a certificate that is
//! recomputed from the output graph.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::catalog;
use crate::cycle_search::{girth, has_cycle_of_length};
use crate::graph::SmallGraph;
use crate::oracle::embed_planar;
use crate::plane_graph::{to_rot, FaceId, PlaneGraph};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructorError {
    #[error("invalid host: {0}")]
    HostInvalid(String),
    #[error("invalid block: {0}")]
    BlockInvalid(String),
    #[error("port identification conflict: {0}")]
    IdentificationConflict(String),
    #[error("(18n - 48)/7 is not an integer for n = {0}")]
    NonIntegralBound(usize),
    #[error("need at least one copy")]
    NoCopies,
}

/// A validated substitution host: connected, girth 8, degrees in {2, 3} and
/// `4(n - 2)/3` edges. Only [`validate_host`] builds one.
#[derive(Debug, Clone)]
pub struct HostSpec {
    graph: PlaneGraph,
}

impl HostSpec {
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub const GIRTH: usize = 8;
}

pub fn validate_host(g: &PlaneGraph) -> Result<HostSpec, ConstructorError> {
    let invalid = |s: String| Err(ConstructorError::HostInvalid(s));
    let n = g.vertex_count();
    if !g.is_connected() {
        return invalid("disconnected".into());
    }
    match girth(g) {
        Ok(HostSpec::GIRTH) => {}
        Ok(k) => return invalid(format!("girth {k}, need {}", HostSpec::GIRTH)),
        Err(_) => return invalid("acyclic".into()),
    }
    if let Some(v) = (0..n).find(|&v| !(2..=3).contains(&g.degree(v))) {
        return invalid(format!("vertex {v} has degree {}", g.degree(v)));
    }
    let want = Rational::new(4 * (n as i64 - 2), 3);
    if Rational::from(g.edge_count()) != want {
        return invalid(format!("{} edges, need 4(n - 2)/3 = {want}", g.edge_count()));
    }
    Ok(HostSpec { graph: g.clone() })
}

/// Properties measured on a constructed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub planar: bool,
    pub c7_free: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// `(18n - 48)/7`.
    pub bound_value: Rational,
    /// `e - (18n - 48)/7`.
    pub excess: Rational,
}

impl Certificate {
    pub fn of(g: &PlaneGraph) -> Self {
        let n = g.vertex_count();
        let bound_value = Rational::new(18 * n as i64 - 48, 7);
        Certificate {
            planar: g.is_plane(),
            c7_free: !has_cycle_of_length(g, 7),
            vertex_count: n,
            edge_count: g.edge_count(),
            excess: Rational::from(g.edge_count()) - bound_value.clone(),
            bound_value,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub graph: PlaneGraph,
    pub family: String,
    pub parameters: BTreeMap<String, String>,
    pub certified: Certificate,
}

impl Serialize for ConstructionResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ConstructionResult", 4)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("parameters", &self.parameters)?;
        st.serialize_field("certified", &self.certified)?;
        st.serialize_field("rot", &to_rot(&self.graph))?;
        st.end()
    }
}

/// `k` copies of `K4` sharing one edge, nested around it.
pub fn glued_k4_chain(k: usize) -> Result<ConstructionResult, ConstructorError> {
    if k == 0 {
        return Err(ConstructorError::NoCopies);
    }
    let graph = catalog::glued_k4_chain(k);
    Ok(ConstructionResult {
        certified: Certificate::of(&graph),
        graph,
        family: "glued-k4".into(),
        parameters: BTreeMap::from([("copies".into(), k.to_string())]),
    })
}

fn check_block(block: &PlaneGraph) -> Result<(), ConstructorError> {
    let n = block.vertex_count();
    if n != 6 {
        return Err(ConstructorError::BlockInvalid(format!("{n} vertices, need 6")));
    }
    if !block.is_two_connected() || block.faces().any(|f| block.face_length(f) != 3) {
        return Err(ConstructorError::BlockInvalid("not a triangulation".into()));
    }
    Ok(())
}

/// Replaces every host vertex by a copy of `block`. The ports of a copy are
/// the vertices of the block's first facial triangle, in walk order; each
/// host edge `uv` identifies one unused port of the copy of `u` with one of
/// the copy of `v`. The result has `6n - e` vertices and `12n` edges.
pub fn substitute(host: &HostSpec, block: &PlaneGraph) -> Result<ConstructionResult, ConstructorError> {
    check_block(block)?;
    let h = &host.graph;
    let hn = h.vertex_count();
    let ports = block.face_vertices(FaceId(0));
    let mut used = vec![0usize; hn];
    // class[v * 6 + i] is the vertex of the result for vertex i of copy v
    let mut class: Vec<usize> = (0..6 * hn).collect();
    for (u, v) in h.edges() {
        let mut take = |w: usize| -> Result<usize, ConstructorError> {
            let p = *ports.get(used[w]).ok_or_else(|| {
                ConstructorError::IdentificationConflict(format!("host vertex {w} needs more than {} ports", ports.len()))
            })?;
            used[w] += 1;
            Ok(w * 6 + p)
        };
        let (a, b) = (take(u)?, take(v)?);
        class[b] = class[a];
    }
    let mut index = vec![usize::MAX; 6 * hn];
    let mut next = 0;
    for slot in 0..6 * hn {
        let c = class[slot];
        if index[c] == usize::MAX {
            index[c] = next;
            next += 1;
        }
    }
    let n = next;
    if (18 * n).checked_sub(48).is_none_or(|x| x % 7 != 0) {
        return Err(ConstructorError::NonIntegralBound(n));
    }
    let mut edges = Vec::new();
    for v in 0..hn {
        let image: Vec<usize> = (0..6).map(|i| index[class[v * 6 + i]]).collect();
        let mut distinct = image.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 6 {
            return Err(ConstructorError::IdentificationConflict(format!("ports of copy {v} collide")));
        }
        edges.extend(block.edges().into_iter().map(|(a, b)| (image[a], image[b])));
    }
    let mut sg = SmallGraph::new(n);
    for &(a, b) in &edges {
        if sg.has_edge(a, b) {
            return Err(ConstructorError::IdentificationConflict(format!("edge {a}-{b} appears twice")));
        }
        sg.add_edge(a, b);
    }
    let graph = embed_planar(&sg).ok_or_else(|| ConstructorError::HostInvalid("result is not planar".into()))?;
    Ok(ConstructionResult {
        certified: Certificate::of(&graph),
        graph,
        family: "substitution".into(),
        parameters: BTreeMap::from([
            ("host_vertices".into(), hn.to_string()),
            ("host_edges".into(), h.edge_count().to_string()),
            ("block_edges".into(), block.edge_count().to_string()),
        ]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_chains() {
        let one = glued_k4_chain(1).unwrap();
        assert_eq!((one.graph.vertex_count(), one.graph.edge_count()), (4, 6));
        let two = glued_k4_chain(2).unwrap();
        assert_eq!((two.certified.vertex_count, two.certified.edge_count), (6, 11));
        assert!(two.certified.c7_free);
        assert!(glued_k4_chain(0).is_err());
    }

    #[test]
    fn host_checks() {
        assert!(validate_host(&catalog::cycle(8)).is_ok());
        let err = validate_host(&catalog::cycle(7)).unwrap_err();
        assert!(err.to_string().contains("girth 7"));
        assert!(validate_host(&catalog::cycle(9)).is_err());
        assert!(validate_host(&catalog::k4()).is_err());
    }

    #[test]
    fn c8_octahedron() {
        let host = validate_host(&catalog::cycle(8)).unwrap();
        let r = substitute(&host, &catalog::octahedron()).unwrap();
        let c = &r.certified;
        assert_eq!((c.vertex_count, c.edge_count), (40, 96));
        assert!(c.planar && c.c7_free);
        assert!(c.excess.is_zero());
    }

    #[test]
    fn theta_host_reaches_the_bound() {
        let theta = crate::oracle::find_hosts(11).unwrap().remove(0);
        let r = substitute(&validate_host(&theta).unwrap(), &catalog::octahedron()).unwrap();
        assert_eq!((r.certified.vertex_count, r.certified.edge_count), (54, 132));
        assert!(r.certified.c7_free && r.certified.excess.is_zero());
    }

    #[test]
    fn block_must_be_a_six_vertex_triangulation() {
        let host = validate_host(&catalog::cycle(8)).unwrap();
        assert!(matches!(
            substitute(&host, &catalog::k4()),
            Err(ConstructorError::BlockInvalid(_))
        ));
        assert!(substitute(&host, &catalog::block("B6a").unwrap()).is_err());
    }
}
