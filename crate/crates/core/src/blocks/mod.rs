//! Triangular-block decomposition and the charge accounting built on it.
//!
//! Facial triangles that share an edge are equivalent; the edges of each
//! equivalence class form a non-trivial block, and every edge lying in no
//! facial triangle forms a trivial block of its own. A [`Decomposition`]
//! holds the blocks of one graph together with the junction data and the
//! refinement of every face, which the charge computations consume.

mod charge;
mod classify;
mod petals;
mod sparse;

use crate::plane_graph::{FaceId, PlaneGraph, SubMap};

pub use charge::{charge_report, BlockCharge, BlockRow, ChargeLedger};
pub use classify::{BlockClass, BlockLabel, ParseLabelError};
pub use petals::{Petal, Refinement};
pub use sparse::{find_sparse_set, in_p_n, membership, Membership, SPARSE_GUARD};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BlocksError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("block {0} is claimed by two exceptional flowers")]
    ExceptionalOverlap(usize),
    #[error("sparse-set search limited to order {limit}, asked for {asked}")]
    GuardExceeded { asked: usize, limit: usize },
}

/// One triangular-block: its edges and vertices in the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularBlock {
    pub id: usize,
    /// Sorted edge ids of the parent graph.
    pub edges: Vec<usize>,
    /// Sorted vertex ids of the parent graph.
    pub vertices: Vec<usize>,
    pub trivial: bool,
}

impl TriangularBlock {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// The blocks of a 2-connected plane graph with derived incidence data.
#[derive(Debug, Clone)]
pub struct Decomposition<'g> {
    graph: &'g PlaneGraph,
    blocks: Vec<TriangularBlock>,
    block_of_edge: Vec<usize>,
    blocks_at: Vec<Vec<usize>>,
    refinements: Vec<Refinement>,
}

/// The blocks of a 2-connected plane graph, ordered by smallest edge id.
pub fn decompose(g: &PlaneGraph) -> Result<Vec<TriangularBlock>, BlocksError> {
    Ok(Decomposition::new(g)?.blocks)
}

impl<'g> Decomposition<'g> {
    pub fn new(g: &'g PlaneGraph) -> Result<Self, BlocksError> {
        if !g.is_two_connected() {
            return Err(BlocksError::NotTwoConnected);
        }
        let mut d = Self::build_blocks(g);
        d.refinements = g.faces().map(|f| petals::refine(&d, f)).collect();
        Ok(d)
    }

    fn build_blocks(g: &'g PlaneGraph) -> Self {
        let nf = g.face_count();
        let is_tri: Vec<bool> = g.faces().map(|f| g.face_length(f) == 3).collect();
        let mut uf = UnionFind::new(nf);
        for e in 0..g.edge_count() {
            let (a, b) = g.faces_of_edge(e);
            if is_tri[a.0] && is_tri[b.0] {
                uf.union(a.0, b.0);
            }
        }
        // block key: a triangle class root, or the edge itself when trivial
        let mut key_of_edge = Vec::with_capacity(g.edge_count());
        for e in 0..g.edge_count() {
            let (a, b) = g.faces_of_edge(e);
            let key = if is_tri[a.0] {
                Some(uf.find(a.0))
            } else if is_tri[b.0] {
                Some(uf.find(b.0))
            } else {
                None
            };
            key_of_edge.push(key);
        }
        let mut block_of_edge = vec![usize::MAX; g.edge_count()];
        let mut blocks: Vec<TriangularBlock> = Vec::new();
        let mut id_of_root = std::collections::HashMap::new();
        for e in 0..g.edge_count() {
            let id = match key_of_edge[e] {
                Some(root) => *id_of_root.entry(root).or_insert_with(|| {
                    blocks.push(TriangularBlock {
                        id: blocks.len(),
                        edges: Vec::new(),
                        vertices: Vec::new(),
                        trivial: false,
                    });
                    blocks.len() - 1
                }),
                None => {
                    blocks.push(TriangularBlock {
                        id: blocks.len(),
                        edges: Vec::new(),
                        vertices: Vec::new(),
                        trivial: true,
                    });
                    blocks.len() - 1
                }
            };
            block_of_edge[e] = id;
            blocks[id].edges.push(e);
        }
        let mut blocks_at = vec![Vec::new(); g.vertex_count()];
        for b in &mut blocks {
            let mut vs: Vec<usize> = b
                .edges
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edge_endpoints(e);
                    [u, v]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            for &v in &vs {
                blocks_at[v].push(b.id);
            }
            b.vertices = vs;
        }
        Decomposition {
            graph: g,
            blocks,
            block_of_edge,
            blocks_at,
            refinements: Vec::new(),
        }
    }

    pub fn graph(&self) -> &'g PlaneGraph {
        self.graph
    }

    pub fn blocks(&self) -> &[TriangularBlock] {
        &self.blocks
    }

    pub fn block(&self, id: usize) -> &TriangularBlock {
        &self.blocks[id]
    }

    pub fn block_of_edge(&self, e: usize) -> usize {
        self.block_of_edge[e]
    }

    /// Ids of the blocks containing `v`.
    pub fn blocks_at(&self, v: usize) -> &[usize] {
        &self.blocks_at[v]
    }

    /// A vertex lying in more than one block.
    pub fn is_junction(&self, v: usize) -> bool {
        self.blocks_at[v].len() > 1
    }

    pub fn junctions(&self, b: usize) -> Vec<usize> {
        self.blocks[b]
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.is_junction(v))
            .collect()
    }

    /// The block as a plane map with the inherited rotation system.
    pub fn block_map(&self, b: usize) -> SubMap {
        self.graph.restrict(&self.blocks[b].edges)
    }

    /// Faces of the parent graph whose whole boundary lies in block `b`;
    /// these are exactly the faces of `b` that are not holes.
    pub fn non_hole_faces(&self, b: usize) -> Vec<FaceId> {
        self.graph
            .faces()
            .filter(|&f| {
                self.graph
                    .face_edges(f)
                    .iter()
                    .all(|&e| self.block_of_edge[e] == b)
            })
            .collect()
    }

    /// Faces of the block map (local ids) that are not faces of the graph.
    /// A trivial block has no faces of its own, hence no holes.
    pub fn holes(&self, b: usize) -> Vec<FaceId> {
        if self.blocks[b].trivial {
            return Vec::new();
        }
        let sub = self.block_map(b);
        sub.graph
            .faces()
            .filter(|&f| {
                let darts = sub.graph.face_darts(f);
                let parent = self.graph.face_of_dart(sub.dart_map[darts[0]]);
                let pd = self.graph.face_darts(parent);
                pd.len() != darts.len()
                    || !darts
                        .iter()
                        .all(|&d| self.graph.face_of_dart(sub.dart_map[d]) == parent)
            })
            .collect()
    }

    /// The refinement of a face of the graph.
    pub fn refinement(&self, f: FaceId) -> &Refinement {
        &self.refinements[f.0]
    }

    /// Bad cherries of a face as `(x1, x2, x3)` triples in boundary order.
    pub fn bad_cherries(&self, f: FaceId) -> &[[usize; 3]] {
        &self.refinements[f.0].cherries
    }
}

/// Bad cherries of one face, computed against the graph's decomposition.
pub fn bad_cherries(g: &PlaneGraph, f: FaceId) -> Result<Vec<[usize; 3]>, BlocksError> {
    Ok(Decomposition::new(g)?.bad_cherries(f).to_vec())
}

/// Length of the refinement of one face.
pub fn refinement_length(g: &PlaneGraph, f: FaceId) -> Result<usize, BlocksError> {
    Ok(Decomposition::new(g)?.refinement(f).len())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn single_block_solids() {
        let k4 = catalog::k4();
        let d = Decomposition::new(&k4).unwrap();
        assert_eq!(d.blocks().len(), 1);
        assert!(d.holes(0).is_empty());
        let oct = catalog::octahedron();
        let d = Decomposition::new(&oct).unwrap();
        assert_eq!(d.blocks().len(), 1);
        assert!(d.holes(0).is_empty());
        assert!(d.petals(0).is_empty());
    }

    #[test]
    fn cycle_is_all_trivial() {
        let c8 = catalog::cycle(8);
        let d = Decomposition::new(&c8).unwrap();
        assert_eq!(d.blocks().len(), 8);
        assert!(d.blocks().iter().all(|b| b.trivial && b.order() == 2));
        for b in 0..8 {
            assert_eq!(d.petals(b).len(), 2);
            assert!(d.holes(b).is_empty());
        }
    }

    #[test]
    fn glued_pair_is_one_block() {
        // the shared edge always separates two lobe triangles, so the lobes
        // merge into a single block
        let g = catalog::glued_k4_pair();
        let d = Decomposition::new(&g).unwrap();
        assert_eq!(d.blocks().len(), 1);
        assert_eq!(d.blocks()[0].edges.len(), 11);
        assert!(d.holes(0).is_empty());
    }

    #[test]
    fn middle_lobes_have_one_hole() {
        let g = catalog::glued_k4_chain(3);
        let d = Decomposition::new(&g).unwrap();
        assert_eq!(d.blocks().len(), 2);
        let small = d.blocks().iter().find(|b| b.edges.len() == 5).unwrap();
        assert_eq!(d.holes(small.id).len(), 1);
        assert_eq!(d.junctions(small.id), vec![0, 1]);
        // its hole is a 4-cycle; both adjacent 4-faces of the graph are petals
        let petals = d.petals(small.id);
        assert_eq!(petals.len(), 2);
        assert!(petals.iter().all(|p| p.length == 4 && !p.leaky));
    }

    #[test]
    fn blocks_partition_edges() {
        for (_, g) in catalog::block_catalog().iter().skip(1) {
            let d = Decomposition::new(g).unwrap();
            let mut seen = vec![0; g.edge_count()];
            for b in d.blocks() {
                for &e in &b.edges {
                    seen[e] += 1;
                }
            }
            assert!(seen.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn rejects_cut_vertices() {
        let bowtie = PlaneGraph::from_neighbor_rotations(
            5,
            &[vec![1, 2, 3, 4], vec![0, 2], vec![1, 0], vec![0, 4], vec![3, 0]],
        )
        .unwrap();
        assert_eq!(decompose(&bowtie), Err(BlocksError::NotTwoConnected));
    }
}
