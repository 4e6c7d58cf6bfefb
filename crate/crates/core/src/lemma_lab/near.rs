//! Near triangulations: every face a triangle except one designated outer
//! face. `K2` with its single face counts as the 2-vertex case.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use super::LemmaError;
use crate::oracle::{planar_two_connected, CorpusOptions};
use crate::plane_graph::{FaceId, MapCode, PlaneGraph};

/// Largest order accepted by [`enumerate_near_triangulations`].
pub const NEAR_TRIANGULATION_GUARD: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearTriangulation {
    pub graph: PlaneGraph,
    pub outer: FaceId,
}

impl NearTriangulation {
    /// Wraps `graph` if every face other than `outer` is a triangle and the
    /// graph is 2-connected (or is `K2`).
    pub fn new(graph: PlaneGraph, outer: FaceId) -> Option<Self> {
        let k2 = graph.vertex_count() == 2 && graph.edge_count() == 1;
        let ok = outer.0 < graph.face_count()
            && (k2 || graph.is_two_connected())
            && graph.faces().all(|f| f == outer || graph.face_length(f) == 3);
        ok.then_some(NearTriangulation { graph, outer })
    }

    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Vertices of the outer cycle in walk order.
    pub fn outer_cycle(&self) -> Vec<usize> {
        self.graph.face_vertices(self.outer)
    }

    /// Invariant of the pair (map, outer face) up to relabeling and mirroring.
    pub fn rooted_code(&self) -> MapCode {
        self.graph.rooted_code(self.outer)
    }
}

/// Inner triangles and the outer walk, all oriented as face walks.
#[derive(Clone)]
struct Shape {
    n: usize,
    triangles: Vec<[usize; 3]>,
    outer: Vec<usize>,
}

impl Shape {
    fn k2() -> Self {
        Shape {
            n: 2,
            triangles: Vec::new(),
            outer: vec![0, 1],
        }
    }

    fn realize(&self) -> NearTriangulation {
        let mut faces: Vec<Vec<usize>> = self.triangles.iter().map(|t| t.to_vec()).collect();
        faces.push(self.outer.clone());
        let graph = PlaneGraph::from_face_cycles(self.n, &faces).expect("consistent face walks");
        let d = graph.dart_between(self.outer[0], self.outer[1]).expect("outer edge");
        let outer = graph.face_of_dart(d);
        NearTriangulation { graph, outer }
    }

    /// A new vertex `w` on the outer edge at position `i`.
    fn add_ear(&self, i: usize) -> Shape {
        let k = self.outer.len();
        let (a, b) = (self.outer[i], self.outer[(i + 1) % k]);
        let w = self.n;
        let mut outer = self.outer.clone();
        outer.insert(i + 1, w);
        let mut triangles = self.triangles.clone();
        triangles.push([a, b, w]);
        Shape {
            n: self.n + 1,
            triangles,
            outer,
        }
    }

    /// Closes the outer path `x z y` starting at position `i` with the edge
    /// `xy`, pushing `z` inside.
    fn close_path(&self, i: usize) -> Shape {
        let k = self.outer.len();
        let (x, z, y) = (self.outer[i], self.outer[(i + 1) % k], self.outer[(i + 2) % k]);
        let outer: Vec<usize> = self.outer.iter().copied().filter(|&v| v != z).collect();
        let mut triangles = self.triangles.clone();
        triangles.push([x, z, y]);
        Shape {
            n: self.n,
            triangles,
            outer,
        }
    }
}

/// All near triangulations with at most `max_n` vertices, one per class of
/// (map, outer face), ordered by order and rooted code.
///
/// Grown one triangle at a time: a level is seeded by gluing a triangle with
/// a new vertex onto an outer edge of the previous level, then closed under
/// gluing a triangle onto two consecutive outer edges whose ends are not
/// adjacent.
pub fn enumerate_near_triangulations(max_n: usize) -> Result<Vec<NearTriangulation>, LemmaError> {
    if max_n > NEAR_TRIANGULATION_GUARD {
        return Err(LemmaError::GuardExceeded {
            asked: max_n,
            limit: NEAR_TRIANGULATION_GUARD,
        });
    }
    let mut out = Vec::new();
    if max_n < 2 {
        return Ok(out);
    }
    let mut level = vec![Shape::k2()];
    out.push(Shape::k2().realize());
    for _ in 3..=max_n {
        level = next_level(&level);
        let mut realized: Vec<(MapCode, NearTriangulation)> = level
            .par_iter()
            .map(|s| {
                let nt = s.realize();
                (nt.rooted_code(), nt)
            })
            .collect();
        realized.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(realized.into_iter().map(|(_, nt)| nt));
    }
    Ok(out)
}

fn next_level(prev: &[Shape]) -> Vec<Shape> {
    let mut seen: HashSet<MapCode> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut level = Vec::new();
    let mut offer = |s: Shape, queue: &mut VecDeque<Shape>| {
        let code = s.realize().rooted_code();
        if seen.insert(code) {
            queue.push_back(s);
        }
    };
    for s in prev {
        for i in 0..s.outer.len() {
            offer(s.add_ear(i), &mut queue);
        }
    }
    while let Some(s) = queue.pop_front() {
        let k = s.outer.len();
        if k >= 4 {
            let g = s.realize().graph;
            for i in 0..k {
                let (x, y) = (s.outer[i], s.outer[(i + 2) % k]);
                if !g.has_edge(x, y) {
                    offer(s.close_path(i), &mut queue);
                }
            }
        }
        level.push(s);
    }
    level
}

/// The same classes found by scanning every embedding of every 2-connected
/// planar graph for faces whose complement is all triangles. Limited by the
/// graph enumeration guard; used as an independent check.
pub fn near_triangulations_by_filter(n: usize) -> Result<Vec<NearTriangulation>, LemmaError> {
    if n == 2 {
        return Ok(vec![Shape::k2().realize()]);
    }
    let maps = planar_two_connected(
        n,
        CorpusOptions {
            all_embeddings: true,
        },
    )?;
    let mut found: HashMap<MapCode, NearTriangulation> = HashMap::new();
    for g in maps {
        let big: Vec<FaceId> = g.faces().filter(|&f| g.face_length(f) > 3).collect();
        let candidates: Vec<FaceId> = match big.len() {
            0 => g.faces().collect(),
            1 => big,
            _ => continue,
        };
        for f in candidates {
            let nt = NearTriangulation {
                graph: g.clone(),
                outer: f,
            };
            found.entry(nt.rooted_code()).or_insert(nt);
        }
    }
    let mut v: Vec<(MapCode, NearTriangulation)> = found.into_iter().collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(v.into_iter().map(|(_, nt)| nt).collect())
}
