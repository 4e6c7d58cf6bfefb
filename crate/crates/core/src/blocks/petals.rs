//! Petals, bad cherries and refinements.

use serde::Serialize;

use super::Decomposition;
use crate::plane_graph::FaceId;

/// A face of the graph that shares edges with a block without being one of
/// the block's faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Petal {
    pub face: FaceId,
    pub block: usize,
    /// Boundary length of the face.
    pub length: usize,
    /// Edges of the face lying in the block.
    pub shared_edges: Vec<usize>,
    /// The face meets the block in a disconnected graph.
    pub leaky: bool,
    /// The face meets the block in exactly one bad-cherry path.
    pub is_bad_cherry_intersection: bool,
    pub refinement_length: usize,
}

/// The refinement of a facial cycle: every bad cherry `x1 x2 x3` replaced by
/// the chord `x1 x3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refinement {
    /// Bad cherries in boundary order.
    pub cherries: Vec<[usize; 3]>,
    /// Cherries sharing an edge with an earlier one; only the earlier one
    /// is replaced. Never observed in a plane graph.
    pub skipped: usize,
    /// Edge ids of the refined cycle.
    pub edges: Vec<usize>,
}

impl Refinement {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.cherries.is_empty()
    }
}

pub(super) fn refine(d: &Decomposition<'_>, f: FaceId) -> Refinement {
    let g = d.graph;
    let verts = g.face_vertices(f);
    let face_edges = g.face_edges(f);
    let k = verts.len();
    let mut cherries = Vec::new();
    // start index of each cherry's first edge (x1 x2)
    let mut starts = Vec::new();
    for i in 0..k {
        let (x1, x2, x3) = (verts[(i + k - 1) % k], verts[i], verts[(i + 1) % k]);
        if x1 == x3 {
            continue;
        }
        let Some(chord) = g.edge_between(x1, x3) else {
            continue;
        };
        if face_edges.contains(&chord) {
            continue;
        }
        if !d.is_junction(x1) || !d.is_junction(x3) {
            continue;
        }
        let (e12, e23) = (face_edges[(i + k - 1) % k], face_edges[i]);
        let b = d.block_of_edge[chord];
        if d.block_of_edge[e12] == b && d.block_of_edge[e23] == b {
            cherries.push([x1, x2, x3]);
            starts.push((i + k - 1) % k);
        }
    }
    let mut replaced = vec![None; k];
    let mut skipped = 0;
    for (c, &s) in cherries.iter().zip(&starts) {
        let t = (s + 1) % k;
        if replaced[s].is_some() || replaced[t].is_some() {
            skipped += 1;
            continue;
        }
        let chord = g.edge_between(c[0], c[2]).unwrap();
        replaced[s] = Some(Some(chord));
        replaced[t] = Some(None);
    }
    let edges = (0..k)
        .filter_map(|i| match replaced[i] {
            None => Some(face_edges[i]),
            Some(r) => r,
        })
        .collect();
    Refinement {
        cherries,
        skipped,
        edges,
    }
}

impl Decomposition<'_> {
    /// Petals of block `b`, in face order.
    pub fn petals(&self, b: usize) -> Vec<Petal> {
        let g = self.graph;
        let block = &self.blocks[b];
        let mut faces: Vec<FaceId> = block
            .edges
            .iter()
            .flat_map(|&e| {
                let (x, y) = g.faces_of_edge(e);
                [x, y]
            })
            .collect();
        faces.sort_unstable();
        faces.dedup();
        faces
            .into_iter()
            .filter(|&f| g.face_edges(f).iter().any(|&e| self.block_of_edge[e] != b))
            .map(|f| self.petal(b, f))
            .collect()
    }

    fn petal(&self, b: usize, f: FaceId) -> Petal {
        let g = self.graph;
        let block = &self.blocks[b];
        let edges = g.face_edges(f);
        let shared: Vec<usize> = edges
            .iter()
            .copied()
            .filter(|&e| self.block_of_edge[e] == b)
            .collect();
        let mut verts: Vec<usize> = g
            .face_vertices(f)
            .into_iter()
            .filter(|&v| block.contains_vertex(v))
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let leaky = components(g, &verts, &shared) > 1;
        let r = &self.refinements[f.0];
        let is_bad_cherry_intersection = shared.len() == 2
            && verts.len() == 3
            && r.cherries.iter().any(|c| {
                let mut cv = c.to_vec();
                cv.sort_unstable();
                cv == verts
            });
        Petal {
            face: f,
            block: b,
            length: edges.len(),
            shared_edges: shared,
            leaky,
            is_bad_cherry_intersection,
            refinement_length: r.len(),
        }
    }
}

fn components(g: &crate::PlaneGraph, verts: &[usize], edges: &[usize]) -> usize {
    let idx = |v: usize| verts.binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut count = verts.len();
    for &e in edges {
        let (u, v) = g.edge_endpoints(e);
        let (a, b) = (find(&mut parent, idx(u)), find(&mut parent, idx(v)));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use crate::blocks::Decomposition;
    use crate::plane_graph::PlaneGraph;

    /// K5 - e on x1, x2, x3 (outer triangle) plus `w` joined to x1 and x3,
    /// with a path x1 - w1 - w2 - x3 on the far side of the chord x1 x3.
    pub(crate) fn cherry_instance() -> (PlaneGraph, [usize; 3], usize) {
        // 0,1,2: outer triangle of the block (x2 = 0, x1 = 1, x3 = 2)
        // 3, 4: interior vertices; 5 = w; 6, 7 = w1, w2
        let faces = vec![
            vec![0, 1, 4],
            vec![0, 4, 2],
            vec![1, 3, 4],
            vec![4, 3, 2],
            vec![1, 2, 3],
            // x2 side: x1 x2 x3 w
            vec![1, 0, 2, 5],
            // chord side: x1 w1 w2 x3 and the outer face
            vec![2, 1, 6, 7],
            vec![1, 5, 2, 7, 6],
        ];
        let g = PlaneGraph::from_face_cycles(8, &faces).unwrap();
        (g, [1, 0, 2], 5)
    }

    #[test]
    fn cherry_on_four_face() {
        let (g, [x1, x2, x3], w) = cherry_instance();
        assert_eq!(g.euler_characteristic(), 2);
        let d = Decomposition::new(&g).unwrap();
        let f = g.face_of_dart(g.dart_between(x3, w).unwrap());
        assert_eq!(g.face_length(f), 4);
        let cherries = d.bad_cherries(f);
        assert_eq!(cherries.len(), 1);
        let c = cherries[0];
        assert!(c == [x1, x2, x3] || c == [x3, x2, x1]);
        assert_eq!(d.refinement(f).len(), 3);
        // no triangle has a cherry
        for t in g.faces().filter(|&t| g.face_length(t) == 3) {
            assert!(d.bad_cherries(t).is_empty());
            assert_eq!(d.refinement(t).len(), 3);
        }
        let block = d.block_of_edge(g.edge_between(x1, x2).unwrap());
        let p = d.petals(block).into_iter().find(|p| p.face == f).unwrap();
        assert!(p.is_bad_cherry_intersection);
        assert!(!p.leaky);
    }

    #[test]
    fn cycle_faces_have_no_cherries() {
        let c8 = crate::catalog::cycle(8);
        let d = Decomposition::new(&c8).unwrap();
        for f in c8.faces() {
            assert!(d.bad_cherries(f).is_empty());
            assert_eq!(d.refinement(f).len(), 8);
        }
    }
}
