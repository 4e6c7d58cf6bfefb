//! Small abstract graphs and canonical labeling.
//!
//! [`SmallGraph`] stores adjacency as one `u64` mask per vertex, so it holds
//! at most 64 vertices. Canonical labeling uses equitable refinement and
//! individualization, keeping the lexicographically largest leaf and pruning
//! children that lie in one orbit of the automorphisms discovered so far.

use std::fmt;

use crate::plane_graph::PlaneGraph;

pub const MAX_VERTICES: usize = 64;
/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SmallGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        SmallGraph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SmallGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Underlying abstract graph of a plane graph.
    pub fn from_plane(g: &PlaneGraph) -> Self {
        SmallGraph::from_edges(g.vertex_count(), &g.edges())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor mask of `v`.
    pub fn mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    /// The graph with a new vertex `n` joined to every vertex in `mask`.
    pub fn with_vertex(&self, mask: u64) -> SmallGraph {
        let mut g = self.clone();
        g.n += 1;
        g.adj.push(mask);
        for u in bits(mask) {
            g.adj[u] |= 1 << self.n;
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SmallGraph {
        let mut g = SmallGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = full(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & all == all
    }

    /// Connected, at least three vertices, no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3
            && self.is_connected()
            && crate::plane_graph::articulation_points(&self.adjacency()).is_empty()
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, {:?})", self.n, self.edges())
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Isomorphism-invariant encoding of a graph of order at most 16: the order
/// and the upper triangle of the canonically relabeled adjacency matrix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> SmallGraph {
        let n = self.n as usize;
        let mut g = SmallGraph::new(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    /// Byte string: the order followed by the matrix bits, little-endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.n as usize;
        let len = (n * n.saturating_sub(1) / 2).div_ceil(8);
        let mut out = vec![self.n];
        out.extend_from_slice(&self.bits.to_le_bytes()[..len]);
        out
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalForm> {
        if s.len() % 2 != 0 || s.is_empty() {
            return None;
        }
        let bytes: Vec<u8> = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).ok())
            .collect::<Option<_>>()?;
        let n = bytes[0];
        if n as usize > MAX_CANON_VERTICES {
            return None;
        }
        let mut buf = [0u8; 16];
        let rest = &bytes[1..];
        if rest.len() > 16 {
            return None;
        }
        buf[..rest.len()].copy_from_slice(rest);
        Some(CanonicalForm {
            n,
            bits: u128::from_le_bytes(buf),
        })
    }
}

/// A canonical form together with the labeling that produces it:
/// `order[i]` is the vertex placed at canonical position `i`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    pub order: Vec<usize>,
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    canonical_labeling(g, None).form
}

/// Canonical labeling, optionally respecting a vertex coloring: only
/// color-preserving relabelings are considered, and lower colors come first.
pub fn canonical_labeling(g: &SmallGraph, colors: Option<&[u32]>) -> Labeling {
    let n = g.n;
    assert!(n <= MAX_CANON_VERTICES, "canonical labeling supports at most {MAX_CANON_VERTICES} vertices");
    let mut cells: Vec<Vec<usize>> = match colors {
        None => vec![(0..n).collect()],
        Some(c) => {
            let mut vals: Vec<u32> = c.to_vec();
            vals.sort_unstable();
            vals.dedup();
            vals.iter()
                .map(|&x| (0..n).filter(|&v| c[v] == x).collect())
                .collect()
        }
    };
    cells.retain(|c: &Vec<usize>| !c.is_empty());
    let mut search = Search {
        g,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    search.descend(cells, &mut Vec::new());
    let (bits, order) = search.best.expect("search reaches a leaf");
    Labeling {
        form: CanonicalForm { n: n as u8, bits },
        order,
    }
}

/// Canonical form with vertex `v` distinguished from all others.
pub fn marked_form(g: &SmallGraph, v: usize) -> CanonicalForm {
    let mut colors = vec![0u32; g.n];
    colors[v] = 1;
    canonical_labeling(g, Some(&colors)).form
}

struct Search<'a> {
    g: &'a SmallGraph,
    best: Option<(u128, Vec<usize>)>,
    first: Option<(u128, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut seen_autos = usize::MAX;
        let mut orbit = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() {
                if seen_autos != self.autos.len() {
                    orbit = self.stabilizer_orbits(prefix);
                    seen_autos = self.autos.len();
                }
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(self.g, &order);
        match &self.first {
            None => {
                self.first = Some((cert, order.clone()));
                self.best = Some((cert, order));
                return;
            }
            Some((fc, fo)) if *fc == cert => {
                let gamma = automorphism(fo, &order);
                self.autos.push(gamma);
                return;
            }
            _ => {}
        }
        let (bc, bo) = self.best.as_ref().unwrap();
        match cert.cmp(bc) {
            std::cmp::Ordering::Greater => self.best = Some((cert, order)),
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(bo, &order);
                self.autos.push(gamma);
            }
            std::cmp::Ordering::Less => {}
        }
    }

    /// Orbit representatives under the automorphisms found so far that fix
    /// every vertex of `prefix`.
    fn stabilizer_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

/// Maps the vertex at each position of `from` to the vertex at the same
/// position of `to`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (i, &v) in from.iter().enumerate() {
        gamma[v] = to[i];
    }
    gamma
}

fn certificate(g: &SmallGraph, order: &[usize]) -> u128 {
    let n = order.len();
    let mut bits = 0u128;
    let mut k = 0;
    for i in 0..n {
        let row = g.adj[order[i]];
        for &w in &order[i + 1..n] {
            if row >> w & 1 == 1 {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

/// Refines an ordered partition until it is equitable. Cells are split by
/// the number of neighbors in a splitter cell, in increasing count order.
fn refine(g: &SmallGraph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter: u64 = cells[si].iter().fold(0, |m, &v| m | 1 << v);
            for ci in 0..cells.len() {
                if cells[ci].len() == 1 {
                    continue;
                }
                let counts: Vec<u32> = cells[ci]
                    .iter()
                    .map(|&v| (g.adj[v] & splitter).count_ones())
                    .collect();
                if counts.iter().all(|&c| c == counts[0]) {
                    continue;
                }
                let mut keys: Vec<u32> = counts.clone();
                keys.sort_unstable();
                keys.dedup();
                let pieces: Vec<Vec<usize>> = keys
                    .iter()
                    .map(|&k| {
                        cells[ci]
                            .iter()
                            .zip(&counts)
                            .filter(|&(_, &c)| c == k)
                            .map(|(&v, _)| v)
                            .collect()
                    })
                    .collect();
                cells.splice(ci..=ci, pieces);
                continue 'outer;
            }
        }
        break;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_perm(n: usize, seed: u64) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            p.swap(i, j);
        }
        p
    }

    #[test]
    fn invariant_under_relabeling() {
        let petersen = SmallGraph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        let c = canonical_form(&petersen);
        for seed in 0..20 {
            let p = random_perm(10, seed);
            assert_eq!(canonical_form(&petersen.relabel(&p)), c);
        }
        assert_eq!(canonical_form(&c.to_graph()), c);
    }

    #[test]
    fn separates_non_isomorphic() {
        let path = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = SmallGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&path), canonical_form(&star));
        // same degree sequence, different graphs
        let c6 = SmallGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_c3 = SmallGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_ne!(canonical_form(&c6), canonical_form(&two_c3));
    }

    #[test]
    fn symmetric_graphs_finish() {
        for n in [1, 5, 12, 16] {
            let empty = SmallGraph::new(n);
            assert_eq!(canonical_form(&empty).to_graph().edge_count(), 0);
            let mut k = SmallGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    k.add_edge(u, v);
                }
            }
            assert_eq!(canonical_form(&k).to_graph().edge_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn marked_forms_detect_orbits() {
        let path = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(marked_form(&path, 0), marked_form(&path, 3));
        assert_ne!(marked_form(&path, 0), marked_form(&path, 1));
    }

    #[test]
    fn hex_round_trip() {
        let g = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        let c = canonical_form(&g);
        assert_eq!(CanonicalForm::from_hex(&c.to_hex()), Some(c));
        assert!(CanonicalForm::from_hex("zz").is_none());
    }

    #[test]
    fn connectivity() {
        let c4 = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(c4.is_two_connected());
        let p = SmallGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(p.is_connected() && !p.is_two_connected());
        assert_eq!(c4.with_vertex(0b0101).edge_count(), 6);
    }
}
