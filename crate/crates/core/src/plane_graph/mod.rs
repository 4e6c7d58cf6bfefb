//! Combinatorial plane embeddings.
//!
//! A [`PlaneGraph`] is a simple graph together with a rotation system: for
//! every vertex, the clockwise cyclic order of its outgoing darts. Edge `k`
//! owns darts `2k` and `2k + 1`, which are each other's reversal. Faces are
//! the orbits of `φ = σ ∘ α`, where `α` reverses a dart and `σ` moves to the
//! clockwise successor around the dart's origin.
//!
//! No outer face is stored; operations that need one take a [`FaceId`].

mod canon;
mod rot;

use std::collections::VecDeque;
use std::fmt;

pub use canon::MapCode;
pub use rot::{parse_rot, parse_rot_single, to_rot};

/// Index of a face in [`PlaneGraph::faces`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct FaceId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlaneGraphError {
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("graph is not simple: {0}")]
    NonSimple(String),
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("vertices {0} and {1} are not connected")]
    Disconnected(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple graph with a fixed clockwise rotation system.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    n: usize,
    origin: Vec<usize>,
    rotations: Vec<Vec<usize>>,
    rot_pos: Vec<usize>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

/// A plane subgraph with its inherited embedding and the maps back to the
/// parent graph.
#[derive(Clone, Debug)]
pub struct SubMap {
    pub graph: PlaneGraph,
    /// local vertex -> parent vertex
    pub vertex_map: Vec<usize>,
    /// local dart -> parent dart
    pub dart_map: Vec<usize>,
}

impl PlaneGraph {
    /// Builds a plane graph from per-vertex clockwise dart lists.
    ///
    /// Dart `2k` and `2k + 1` are the two orientations of edge `k`; the origin
    /// of a dart is the vertex whose rotation lists it.
    pub fn build(vertex_count: usize, rotations: Vec<Vec<usize>>) -> Result<Self, PlaneGraphError> {
        if rotations.len() != vertex_count {
            return Err(PlaneGraphError::MalformedRotation(format!(
                "expected {vertex_count} rotations, got {}",
                rotations.len()
            )));
        }
        let dart_count: usize = rotations.iter().map(Vec::len).sum();
        if dart_count % 2 != 0 {
            return Err(PlaneGraphError::MalformedRotation(
                "odd number of darts".to_string(),
            ));
        }
        let mut origin = vec![usize::MAX; dart_count];
        for (v, rot) in rotations.iter().enumerate() {
            for &d in rot {
                if d >= dart_count {
                    return Err(PlaneGraphError::MalformedRotation(format!(
                        "dart {d} out of range at vertex {v}"
                    )));
                }
                if origin[d] != usize::MAX {
                    return Err(PlaneGraphError::MalformedRotation(format!(
                        "dart {d} listed twice"
                    )));
                }
                origin[d] = v;
            }
        }
        let mut seen = std::collections::HashSet::new();
        for k in 0..dart_count / 2 {
            let (u, v) = (origin[2 * k], origin[2 * k + 1]);
            if u == v {
                return Err(PlaneGraphError::NonSimple(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(PlaneGraphError::NonSimple(format!(
                    "parallel edges between {u} and {v}"
                )));
            }
        }
        Ok(Self::assemble(vertex_count, origin, rotations))
    }

    /// Builds a plane graph from clockwise neighbor lists, the `.rot` form.
    ///
    /// Edges are numbered in increasing `(min, max)` endpoint order; dart `2k`
    /// leaves the smaller endpoint.
    pub fn from_neighbor_rotations(
        vertex_count: usize,
        neighbors: &[Vec<usize>],
    ) -> Result<Self, PlaneGraphError> {
        if neighbors.len() != vertex_count {
            return Err(PlaneGraphError::MalformedRotation(format!(
                "expected {vertex_count} rotations, got {}",
                neighbors.len()
            )));
        }
        let mut pairs = Vec::new();
        for (u, list) in neighbors.iter().enumerate() {
            for (i, &v) in list.iter().enumerate() {
                if v >= vertex_count {
                    return Err(PlaneGraphError::InvalidVertex(v));
                }
                if v == u {
                    return Err(PlaneGraphError::NonSimple(format!("loop at vertex {u}")));
                }
                if list[..i].contains(&v) {
                    return Err(PlaneGraphError::NonSimple(format!(
                        "parallel edges between {u} and {v}"
                    )));
                }
                if !neighbors[v].contains(&u) {
                    return Err(PlaneGraphError::MalformedRotation(format!(
                        "edge {u}-{v} listed at {u} but not at {v}"
                    )));
                }
                if u < v {
                    pairs.push((u, v));
                }
            }
        }
        pairs.sort_unstable();
        let dart_of = |u: usize, v: usize| -> usize {
            let k = pairs
                .binary_search(&(u.min(v), u.max(v)))
                .expect("edge present");
            if u < v {
                2 * k
            } else {
                2 * k + 1
            }
        };
        let rotations: Vec<Vec<usize>> = neighbors
            .iter()
            .enumerate()
            .map(|(u, list)| list.iter().map(|&v| dart_of(u, v)).collect())
            .collect();
        let mut origin = vec![0; 2 * pairs.len()];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            origin[2 * k] = u;
            origin[2 * k + 1] = v;
        }
        Ok(Self::assemble(vertex_count, origin, rotations))
    }

    /// Builds a plane graph from its facial walks, given as vertex cycles.
    ///
    /// The walks must be oriented consistently: every edge is traversed once
    /// in each direction. For consecutive `u → v → w` on a walk, `w` becomes
    /// the clockwise successor of `u` around `v`.
    pub fn from_face_cycles(
        vertex_count: usize,
        faces: &[Vec<usize>],
    ) -> Result<Self, PlaneGraphError> {
        let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                if u >= vertex_count || v >= vertex_count || w >= vertex_count {
                    return Err(PlaneGraphError::InvalidVertex(u.max(v).max(w)));
                }
                if succ[v].iter().any(|&(a, _)| a == u) {
                    return Err(PlaneGraphError::MalformedRotation(format!(
                        "edge {u}-{v} traversed twice in the same direction"
                    )));
                }
                succ[v].push((u, w));
            }
        }
        let mut neighbors = Vec::with_capacity(vertex_count);
        for (v, pairs) in succ.iter().enumerate() {
            let mut rot = Vec::with_capacity(pairs.len());
            if let Some(&(start, _)) = pairs.iter().min() {
                let mut cur = start;
                loop {
                    rot.push(cur);
                    cur = match pairs.iter().find(|&&(a, _)| a == cur) {
                        Some(&(_, w)) => w,
                        None => {
                            return Err(PlaneGraphError::MalformedRotation(format!(
                                "edge {v}-{cur} traversed in one direction only"
                            )))
                        }
                    };
                    if cur == start || rot.len() > pairs.len() {
                        break;
                    }
                }
            }
            if rot.len() != pairs.len() {
                return Err(PlaneGraphError::MalformedRotation(format!(
                    "faces around vertex {v} do not close into a single rotation"
                )));
            }
            neighbors.push(rot);
        }
        Self::from_neighbor_rotations(vertex_count, &neighbors)
    }

    fn assemble(n: usize, origin: Vec<usize>, rotations: Vec<Vec<usize>>) -> Self {
        let dart_count = origin.len();
        let mut rot_pos = vec![0; dart_count];
        for rot in &rotations {
            for (i, &d) in rot.iter().enumerate() {
                rot_pos[d] = i;
            }
        }
        let mut g = PlaneGraph {
            n,
            origin,
            rotations,
            rot_pos,
            face_of: vec![usize::MAX; dart_count],
            faces: Vec::new(),
        };
        for start in 0..dart_count {
            if g.face_of[start] != usize::MAX {
                continue;
            }
            let id = g.faces.len();
            let mut boundary = Vec::new();
            let mut d = start;
            loop {
                g.face_of[d] = id;
                boundary.push(d);
                d = g.face_next(d);
                if d == start {
                    break;
                }
            }
            g.faces.push(boundary);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn origin(&self, dart: usize) -> usize {
        self.origin[dart]
    }

    pub fn head(&self, dart: usize) -> usize {
        self.origin[dart ^ 1]
    }

    /// Edge index of a dart.
    pub fn edge_of(dart: usize) -> usize {
        dart >> 1
    }

    pub fn reverse(dart: usize) -> usize {
        dart ^ 1
    }

    /// Clockwise successor of `dart` around its origin (σ).
    pub fn next_cw(&self, dart: usize) -> usize {
        let rot = &self.rotations[self.origin[dart]];
        rot[(self.rot_pos[dart] + 1) % rot.len()]
    }

    /// Counter-clockwise successor of `dart` around its origin (σ⁻¹).
    pub fn next_ccw(&self, dart: usize) -> usize {
        let rot = &self.rotations[self.origin[dart]];
        rot[(self.rot_pos[dart] + rot.len() - 1) % rot.len()]
    }

    /// Face permutation φ = σ ∘ α.
    pub fn face_next(&self, dart: usize) -> usize {
        self.next_cw(dart ^ 1)
    }

    /// Outgoing darts of `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors_cw(&self, v: usize) -> Vec<usize> {
        self.rotations[v].iter().map(|&d| self.head(d)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// Endpoints of edge `k`, smaller first when built from neighbor lists.
    pub fn edge_endpoints(&self, k: usize) -> (usize, usize) {
        (self.origin[2 * k], self.origin[2 * k + 1])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.edge_count()).map(|k| self.edge_endpoints(k)).collect()
    }

    /// The dart from `u` to `v`, if `uv` is an edge.
    pub fn dart_between(&self, u: usize, v: usize) -> Option<usize> {
        self.rotations
            .get(u)?
            .iter()
            .copied()
            .find(|&d| self.head(d) == v)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_between(u, v).map(Self::edge_of)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dart_between(u, v).is_some()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|v| {
                let mut l = self.neighbors_cw(v);
                l.sort_unstable();
                l
            })
            .collect()
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).map(FaceId)
    }

    /// Boundary darts of a face in traversal order.
    pub fn face_darts(&self, f: FaceId) -> &[usize] {
        &self.faces[f.0]
    }

    /// Boundary length; cut edges count twice.
    pub fn face_length(&self, f: FaceId) -> usize {
        self.faces[f.0].len()
    }

    /// Boundary vertices in traversal order (dart origins).
    pub fn face_vertices(&self, f: FaceId) -> Vec<usize> {
        self.faces[f.0].iter().map(|&d| self.origin[d]).collect()
    }

    /// Edge indices on a face boundary in traversal order.
    pub fn face_edges(&self, f: FaceId) -> Vec<usize> {
        self.faces[f.0].iter().map(|&d| d >> 1).collect()
    }

    pub fn face_of_dart(&self, dart: usize) -> FaceId {
        FaceId(self.face_of[dart])
    }

    /// The two faces on either side of edge `k` (possibly equal for a cut edge).
    pub fn faces_of_edge(&self, k: usize) -> (FaceId, FaceId) {
        (FaceId(self.face_of[2 * k]), FaceId(self.face_of[2 * k + 1]))
    }

    /// Number of connected components, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &d in &self.rotations[v] {
                    let w = self.head(d);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// `V − E + F`, which is `1 + components` for a plane embedding.
    pub fn euler_characteristic(&self) -> i64 {
        self.n as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// True when the rotation system describes a sphere embedding of every
    /// component: `V − E + F = 1 + C` (isolated vertices contribute no face
    /// and are excluded from the count).
    pub fn is_plane(&self) -> bool {
        let isolated = (0..self.n).filter(|&v| self.degree(v) == 0).count();
        let comps = self.component_count() - isolated;
        (self.n - isolated) as i64 - self.edge_count() as i64 + self.face_count() as i64
            == 1 + comps as i64
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        articulation_points(&self.adjacency()).is_empty()
    }

    /// BFS distance between `x` and `y`.
    pub fn distance(&self, x: usize, y: usize) -> Result<usize, PlaneGraphError> {
        for v in [x, y] {
            if v >= self.n {
                return Err(PlaneGraphError::InvalidVertex(v));
            }
        }
        bfs_distances(&self.adjacency(), x)[y].ok_or(PlaneGraphError::Disconnected(x, y))
    }

    /// Restriction to a set of edges, with the inherited rotation system.
    /// Local vertices are the endpoints of `edges` in increasing parent order.
    pub fn restrict(&self, edges: &[usize]) -> SubMap {
        let mut keep = vec![false; self.edge_count()];
        for &k in edges {
            keep[k] = true;
        }
        let mut vertex_map: Vec<usize> = edges
            .iter()
            .flat_map(|&k| {
                let (u, v) = self.edge_endpoints(k);
                [u, v]
            })
            .collect();
        vertex_map.sort_unstable();
        vertex_map.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertex_map.iter().enumerate() {
            local[v] = i;
        }
        let neighbors: Vec<Vec<usize>> = vertex_map
            .iter()
            .map(|&v| {
                self.rotations[v]
                    .iter()
                    .filter(|&&d| keep[d >> 1])
                    .map(|&d| local[self.head(d)])
                    .collect()
            })
            .collect();
        let graph = PlaneGraph::from_neighbor_rotations(vertex_map.len(), &neighbors)
            .expect("restriction of a valid rotation system is valid");
        let dart_map = (0..graph.dart_count())
            .map(|d| {
                let (u, v) = (vertex_map[graph.origin(d)], vertex_map[graph.head(d)]);
                self.dart_between(u, v).expect("edge in parent")
            })
            .collect();
        SubMap {
            graph,
            vertex_map,
            dart_map,
        }
    }

    /// The same embedding with every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let neighbors: Vec<Vec<usize>> = (0..self.n)
            .map(|v| {
                let mut l = self.neighbors_cw(v);
                l.reverse();
                l
            })
            .collect();
        PlaneGraph::from_neighbor_rotations(self.n, &neighbors).expect("mirror of a valid graph")
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> PlaneGraph {
        let mut neighbors = vec![Vec::new(); self.n];
        for v in 0..self.n {
            neighbors[perm[v]] = self.neighbors_cw(v).into_iter().map(|w| perm[w]).collect();
        }
        PlaneGraph::from_neighbor_rotations(self.n, &neighbors).expect("relabeling of a valid graph")
    }

    /// Facial cycles as sorted edge sets, sorted. Two embeddings of the same
    /// labeled 2-connected graph agree up to reflection iff these agree.
    pub fn face_edge_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self
            .faces()
            .map(|f| {
                let mut e = self.face_edges(f);
                e.sort_unstable();
                e
            })
            .collect();
        sets.sort();
        sets
    }
}

impl fmt::Debug for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneGraph {{ {} }}", to_rot(self).trim_end().replace('\n', "; "))
    }
}

/// BFS distances from `s` over adjacency lists.
pub(crate) fn bfs_distances(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].unwrap();
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Cut vertices via low-point DFS (iterative).
pub(crate) fn articulation_points(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn euler_on_small_solids() {
        for (g, v, e, f) in [
            (catalog::cycle(3), 3, 3, 2),
            (catalog::k4(), 4, 6, 4),
            (catalog::octahedron(), 6, 12, 8),
        ] {
            assert_eq!(g.vertex_count(), v);
            assert_eq!(g.edge_count(), e);
            assert_eq!(g.face_count(), f);
            assert_eq!(g.euler_characteristic(), 2);
        }
    }

    #[test]
    fn face_lengths_partition_darts() {
        let c8 = catalog::cycle(8);
        assert_eq!(c8.face_count(), 2);
        assert!(c8.faces().all(|f| c8.face_length(f) == 8));
        let k4 = catalog::k4();
        assert!(k4.faces().all(|f| k4.face_length(f) == 3));
        let glued = catalog::glued_k4_pair();
        assert_eq!(glued.face_count(), 7);
        let total: usize = glued.faces().map(|f| glued.face_length(f)).sum();
        assert_eq!(total, 2 * glued.edge_count());
    }

    #[test]
    fn two_connectivity() {
        assert!(catalog::k4().is_two_connected());
        let bowtie = PlaneGraph::from_neighbor_rotations(
            5,
            &[vec![1, 2, 3, 4], vec![0, 2], vec![1, 0], vec![0, 4], vec![3, 0]],
        )
        .unwrap();
        assert!(!bowtie.is_two_connected());
        let p3 = PlaneGraph::from_neighbor_rotations(3, &[vec![1], vec![0, 2], vec![1]]).unwrap();
        assert!(!p3.is_two_connected());
    }

    #[test]
    fn distances() {
        let c8 = catalog::cycle(8);
        assert_eq!(c8.distance(0, 1).unwrap(), 1);
        assert_eq!(c8.distance(0, 4).unwrap(), 4);
        let (b6a, x, y) = catalog::figure1("B6a").unwrap();
        assert_eq!(b6a.distance(x, y).unwrap(), 2);
        let two = PlaneGraph::from_neighbor_rotations(4, &[vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(two.distance(0, 2), Err(PlaneGraphError::Disconnected(0, 2)));
    }

    #[test]
    fn build_rejects_bad_rotations() {
        // dart 1 missing
        assert!(matches!(
            PlaneGraph::build(2, vec![vec![0], vec![]]),
            Err(PlaneGraphError::MalformedRotation(_))
        ));
        // dart listed twice
        assert!(matches!(
            PlaneGraph::build(2, vec![vec![0, 0], vec![1, 1]]),
            Err(PlaneGraphError::MalformedRotation(_))
        ));
        // loop
        assert!(matches!(
            PlaneGraph::build(1, vec![vec![0, 1]]),
            Err(PlaneGraphError::NonSimple(_))
        ));
        // parallel edges
        assert!(matches!(
            PlaneGraph::build(2, vec![vec![0, 2], vec![1, 3]]),
            Err(PlaneGraphError::NonSimple(_))
        ));
        let tri = PlaneGraph::build(3, vec![vec![0, 5], vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(tri.face_count(), 2);
    }

    #[test]
    fn neighbor_lists_must_be_symmetric() {
        assert!(matches!(
            PlaneGraph::from_neighbor_rotations(3, &[vec![1, 2], vec![0], vec![]]),
            Err(PlaneGraphError::MalformedRotation(_))
        ));
    }

    #[test]
    fn restriction_keeps_inherited_faces() {
        let oct = catalog::octahedron();
        let all: Vec<usize> = (0..oct.edge_count()).collect();
        let sub = oct.restrict(&all);
        assert_eq!(sub.graph.face_edge_sets().len(), 8);
        let f0 = oct.face_edges(FaceId(0));
        let tri = oct.restrict(&f0);
        assert_eq!(tri.graph.vertex_count(), 3);
        assert_eq!(tri.graph.face_count(), 2);
    }

    #[test]
    fn face_cycles_round_trip() {
        let g = catalog::octahedron();
        let cycles: Vec<Vec<usize>> = g.faces().map(|f| g.face_vertices(f)).collect();
        let back = PlaneGraph::from_face_cycles(g.vertex_count(), &cycles).unwrap();
        assert_eq!(back.face_edge_sets(), g.face_edge_sets());
        assert_eq!(back.canonical_code(), g.canonical_code());
        // one-directional edge
        assert!(PlaneGraph::from_face_cycles(3, &[vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn mirror_preserves_face_sets() {
        let g = catalog::block("B6e").unwrap();
        assert_eq!(g.face_edge_sets(), g.mirror().face_edge_sets());
    }
}
