//! Planarity testing and embedding by face-based path insertion.
//!
//! Each biconnected component is embedded on its own: starting from a cycle,
//! the fragment with the fewest admissible faces is chosen and one of its
//! paths is drawn through an admissible face, splitting it in two. A fragment
//! with no admissible face proves the component non-planar. Components are
//! joined at cut vertices by concatenating their rotations.

use std::collections::{HashSet, VecDeque};

use crate::graph::{bits, SmallGraph};
use crate::plane_graph::{MapCode, PlaneGraph};

/// Largest order accepted by [`all_embeddings`].
pub const EMBED_LIMIT: usize = 12;

/// Some plane embedding of `g`, or `None` when `g` is not planar.
pub fn embed_planar(g: &SmallGraph) -> Option<PlaneGraph> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut per_component = Vec::new();
    for comp in biconnected_components(g) {
        let mut out = Vec::new();
        Demoucron::new(&comp).run(false, &mut out);
        per_component.push(out.pop()?);
    }
    Some(join(n, &per_component))
}

pub fn is_planar(g: &SmallGraph) -> bool {
    embed_planar(g).is_some()
}

/// Every plane embedding of `g` up to map isomorphism (mirror images
/// identified), ordered by canonical code.
///
/// Embeddings of the biconnected components are combined in every way, but
/// components meeting at a cut vertex are always joined by the same
/// concatenation of rotations, so for graphs with cut vertices the list is
/// not exhaustive.
pub fn all_embeddings(g: &SmallGraph) -> Vec<PlaneGraph> {
    let n = g.vertex_count();
    assert!(n <= EMBED_LIMIT, "all_embeddings supports at most {EMBED_LIMIT} vertices");
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Vec::new();
    }
    let mut choices: Vec<Vec<Vec<Vec<usize>>>> = Vec::new();
    for comp in biconnected_components(g) {
        let mut out = Vec::new();
        Demoucron::new(&comp).run(true, &mut out);
        if out.is_empty() {
            return Vec::new();
        }
        let mut seen = HashSet::new();
        out.retain(|rot| seen.insert(face_key(rot)));
        choices.push(out);
    }
    let mut results: Vec<(MapCode, PlaneGraph)> = Vec::new();
    let mut seen = HashSet::new();
    let mut pick = vec![0; choices.len()];
    loop {
        let parts: Vec<Vec<Vec<usize>>> = pick.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        let h = join(n, &parts);
        let code = h.canonical_code();
        if seen.insert(code.clone()) {
            results.push((code, h));
        }
        // odometer
        let mut k = 0;
        loop {
            if k == pick.len() {
                results.sort_by(|a, b| a.0.cmp(&b.0));
                return results.into_iter().map(|(_, h)| h).collect();
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// Sorted edge sets of the faces of one component's rotation.
fn face_key(rot: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = rot.len();
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = Vec::new();
    for u in 0..n {
        for &v in &rot[u] {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                face.push((a.min(b), a.max(b)));
                // next dart: clockwise successor of a around b
                let r = &rot[b];
                let i = r.iter().position(|&x| x == a).unwrap();
                let c = r[(i + 1) % r.len()];
                (a, b) = (b, c);
            }
            face.sort_unstable();
            faces.push(face);
        }
    }
    faces.sort();
    faces
}

/// Concatenates per-component rotations at shared vertices.
fn join(n: usize, parts: &[Vec<Vec<usize>>]) -> PlaneGraph {
    let mut rot = vec![Vec::new(); n];
    for part in parts {
        for (v, r) in part.iter().enumerate() {
            rot[v].extend_from_slice(r);
        }
    }
    PlaneGraph::from_neighbor_rotations(n, &rot).expect("joined rotations are valid")
}

/// Edge sets of the biconnected components, as adjacency masks over all
/// vertices. Bridges are components of one edge.
pub(crate) fn biconnected_components(g: &SmallGraph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut comps = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, remaining neighbor mask)
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut frames = vec![(root, usize::MAX, g.mask(root))];
        while let Some(&mut (v, p, ref mut rest)) = frames.last_mut() {
            if *rest == 0 {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut comp = vec![0u64; n];
                        while let Some((a, b)) = stack.pop() {
                            comp[a] |= 1 << b;
                            comp[b] |= 1 << a;
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        comps.push(comp);
                    }
                }
                continue;
            }
            let w = rest.trailing_zeros() as usize;
            *rest &= *rest - 1;
            if w == p {
                continue;
            }
            if disc[w] == usize::MAX {
                stack.push((v, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                frames.push((w, v, g.mask(w)));
            } else if disc[w] < disc[v] {
                stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        }
    }
    comps
}

/// Face-based embedding of one biconnected component.
struct Demoucron {
    n: usize,
    adj: Vec<u64>,
}

/// A piece of the graph not yet drawn: a chord or a component of the
/// undrawn vertices with its edges to the drawn part.
struct Fragment {
    attachments: u64,
    path: Vec<usize>,
}

#[derive(Clone)]
struct State {
    in_h: u64,
    h_adj: Vec<u64>,
    faces: Vec<Vec<usize>>,
}

impl Demoucron {
    fn new(adj: &[u64]) -> Self {
        Demoucron {
            n: adj.len(),
            adj: adj.to_vec(),
        }
    }

    /// Pushes one rotation (or, with `all`, every rotation reached by
    /// branching over admissible faces) onto `out`.
    fn run(&self, all: bool, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some(u) = (0..self.n).find(|&v| self.adj[v] != 0) else {
            out.push(vec![Vec::new(); self.n]);
            return;
        };
        let v = self.adj[u].trailing_zeros() as usize;
        if self.adj.iter().map(|m| m.count_ones()).sum::<u32>() == 2 {
            let mut rot = vec![Vec::new(); self.n];
            rot[u].push(v);
            rot[v].push(u);
            out.push(rot);
            return;
        }
        let cycle = self.initial_cycle(u, v);
        let mut state = State {
            in_h: 0,
            h_adj: vec![0; self.n],
            faces: vec![cycle.clone(), cycle.iter().rev().copied().collect()],
        };
        let k = cycle.len();
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            state.in_h |= 1 << a;
            state.h_adj[a] |= 1 << b;
            state.h_adj[b] |= 1 << a;
        }
        self.grow(state, all, out);
    }

    fn grow(&self, mut state: State, all: bool, out: &mut Vec<Vec<Vec<usize>>>) {
        loop {
            let frags = self.fragments(&state);
            if frags.is_empty() {
                out.push(rotation_from_faces(self.n, &state.faces));
                return;
            }
            let face_masks: Vec<u64> = state
                .faces
                .iter()
                .map(|f| f.iter().fold(0u64, |m, &x| m | 1 << x))
                .collect();
            let mut best: Option<(usize, Vec<usize>)> = None;
            for (i, fr) in frags.iter().enumerate() {
                let adm: Vec<usize> = (0..face_masks.len())
                    .filter(|&f| face_masks[f] & fr.attachments == fr.attachments)
                    .collect();
                if adm.is_empty() {
                    return;
                }
                if best.as_ref().is_none_or(|(_, b)| adm.len() < b.len()) {
                    best = Some((i, adm));
                }
            }
            let (i, adm) = best.unwrap();
            let path = &frags[i].path;
            if all && adm.len() > 1 {
                for &f in &adm {
                    let mut next = state.clone();
                    insert_path(&mut next, f, path);
                    self.grow(next, all, out);
                }
                return;
            }
            insert_path(&mut state, adm[0], path);
        }
    }

    /// A cycle through the edge `uv`.
    fn initial_cycle(&self, u: usize, v: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n];
        parent[v] = v;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for y in bits(self.adj[x]) {
                if parent[y] != usize::MAX || (x == v && y == u) {
                    continue;
                }
                parent[y] = x;
                if y == u {
                    let mut cyc = vec![u];
                    let mut z = x;
                    while z != v {
                        cyc.push(z);
                        z = parent[z];
                    }
                    cyc.push(v);
                    return cyc;
                }
                queue.push_back(y);
            }
        }
        unreachable!("a biconnected component with two or more edges has a cycle through every edge")
    }

    fn fragments(&self, s: &State) -> Vec<Fragment> {
        let mut frags = Vec::new();
        for u in bits(s.in_h) {
            for v in bits(self.adj[u] & s.in_h & !s.h_adj[u]) {
                if u < v {
                    frags.push(Fragment {
                        attachments: 1 << u | 1 << v,
                        path: vec![u, v],
                    });
                }
            }
        }
        let mut seen = s.in_h;
        for start in 0..self.n {
            if seen >> start & 1 == 1 || self.adj[start] == 0 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for x in bits(frontier) {
                    next |= self.adj[x];
                }
                next &= !s.in_h & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            let attachments = bits(comp).fold(0u64, |m, x| m | self.adj[x]) & s.in_h;
            frags.push(Fragment {
                attachments,
                path: self.fragment_path(comp, attachments),
            });
        }
        frags
    }

    /// A path through the component `comp` joining two of its attachments.
    fn fragment_path(&self, comp: u64, attachments: u64) -> Vec<usize> {
        let a = attachments.trailing_zeros() as usize;
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for x in bits(self.adj[a] & comp) {
            parent[x] = a;
            queue.push_back(x);
        }
        while let Some(x) = queue.pop_front() {
            let targets = self.adj[x] & attachments & !(1 << a);
            if targets != 0 {
                let b = targets.trailing_zeros() as usize;
                let mut path = vec![b];
                let mut z = x;
                while z != a {
                    path.push(z);
                    z = parent[z];
                }
                path.push(a);
                path.reverse();
                return path;
            }
            for y in bits(self.adj[x] & comp) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        unreachable!("fragments of a biconnected graph have two attachments")
    }
}

/// Draws `path` (from `a` to `b`, both on face `f`) through face `f`.
fn insert_path(s: &mut State, f: usize, path: &[usize]) {
    let face = std::mem::take(&mut s.faces[f]);
    let (a, b) = (path[0], *path.last().unwrap());
    let k = face.len();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    // a X b and b Y a along the face
    let walk = |from: usize, to: usize| -> Vec<usize> {
        let mut w = Vec::new();
        let mut i = from;
        loop {
            w.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % k;
        }
        w
    };
    let inner = &path[1..path.len() - 1];
    let mut first = walk(ia, ib);
    first.extend(inner.iter().rev());
    let mut second = walk(ib, ia);
    second.extend(inner.iter());
    s.faces[f] = first;
    s.faces.push(second);
    for w in path.windows(2) {
        s.h_adj[w[0]] |= 1 << w[1];
        s.h_adj[w[1]] |= 1 << w[0];
    }
    for &x in path {
        s.in_h |= 1 << x;
    }
}

/// Clockwise neighbor lists from consistently oriented facial walks.
fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            succ[face[(i + 1) % k]].push((face[i], face[(i + 2) % k]));
        }
    }
    succ.iter()
        .map(|pairs| {
            let mut rot = Vec::with_capacity(pairs.len());
            if let Some(&(start, _)) = pairs.first() {
                let mut cur = start;
                loop {
                    rot.push(cur);
                    cur = pairs.iter().find(|&&(x, _)| x == cur).unwrap().1;
                    if cur == start {
                        break;
                    }
                }
            }
            rot
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn complete(n: usize) -> SmallGraph {
        let mut g = SmallGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn k33() -> SmallGraph {
        let mut g = SmallGraph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn kuratowski_graphs_are_not_planar() {
        assert!(embed_planar(&complete(5)).is_none());
        assert!(embed_planar(&k33()).is_none());
        assert!(all_embeddings(&k33()).is_empty());
        // K3,3 plus a pendant path stays non-planar
        let mut g = SmallGraph::new(8);
        for (u, v) in k33().edges() {
            g.add_edge(u, v);
        }
        g.add_edge(0, 6);
        g.add_edge(6, 7);
        assert!(!is_planar(&g));
    }

    #[test]
    fn k4_embeds_with_triangles() {
        let h = embed_planar(&complete(4)).unwrap();
        assert!(h.is_plane());
        assert_eq!(h.face_count(), 4);
        assert!(h.faces().all(|f| h.face_length(f) == 3));
        assert_eq!(all_embeddings(&complete(4)).len(), 1);
    }

    #[test]
    fn catalog_graphs_round_trip() {
        for (_, g) in catalog::block_catalog() {
            let h = embed_planar(&SmallGraph::from_plane(g)).unwrap();
            assert!(h.is_plane());
            assert_eq!(h.edge_count(), g.edge_count());
            let all = all_embeddings(&SmallGraph::from_plane(g));
            assert!(all.iter().any(|e| e.canonical_code() == g.canonical_code()));
        }
    }

    #[test]
    fn cut_vertices_and_forests() {
        let bowtie = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        let h = embed_planar(&bowtie).unwrap();
        assert!(h.is_plane());
        let path = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(embed_planar(&path).unwrap().is_plane());
        let two = SmallGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(embed_planar(&two).unwrap().edge_count(), 2);
    }

    #[test]
    fn theta_graph_has_one_map() {
        // three internally disjoint paths: all drawings are equivalent
        let g = SmallGraph::from_edges(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        assert_eq!(all_embeddings(&g).len(), 1);
        // four paths of lengths 2, 2, 3, 3 between two poles: the two short
        // paths are either adjacent or not
        let g = SmallGraph::from_edges(
            8,
            &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)],
        );
        assert_eq!(all_embeddings(&g).len(), 2);
    }
}
