//! Fixed-length cycles, path-length spectra and girth.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::plane_graph::{bfs_distances, PlaneGraph};

/// Default vertex bound for the exhaustive path searches.
pub const DEFAULT_PATH_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycleSearchError {
    #[error("graph has {n} vertices, path search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is acyclic")]
    Acyclic,
    #[error("invalid endpoints {0} and {1}")]
    InvalidEndpoints(usize, usize),
}

/// Every length realized by a simple path between two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSpectrum {
    pub source: usize,
    pub target: usize,
    pub lengths: BTreeSet<usize>,
}

impl PathSpectrum {
    /// True when every length from `lo` to `hi` (inclusive) occurs.
    pub fn covers(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi).all(|l| self.lengths.contains(&l))
    }
}

pub fn has_cycle_of_length(g: &PlaneGraph, len: usize) -> bool {
    find_cycle_of_length(g, len).is_some()
}

/// A cycle of exactly `len` vertices, as a vertex sequence, if one exists.
pub fn find_cycle_of_length(g: &PlaneGraph, len: usize) -> Option<Vec<usize>> {
    cycle_in(&g.adjacency(), len)
}

/// Cycle search over plain adjacency lists.
///
/// Anchors are taken by decreasing degree. Each anchor is the first vertex
/// of the cycle in that order and is removed once exhausted; a branch is cut
/// when the current vertex is farther from the anchor than the steps left.
pub fn cycle_in(adj: &[Vec<usize>], len: usize) -> Option<Vec<usize>> {
    assert!(len >= 3, "cycles have length at least 3");
    let n = adj.len();
    if len > n {
        return None;
    }
    let mut anchors: Vec<usize> = (0..n).collect();
    anchors.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut alive = vec![true; n];
    let mut on_path = vec![false; n];
    for &s in &anchors {
        let dist = distances_within(adj, s, &alive);
        let mut path = vec![s];
        on_path[s] = true;
        if extend(adj, &alive, &dist, len, &mut path, &mut on_path) {
            return Some(path);
        }
        on_path[s] = false;
        alive[s] = false;
    }
    None
}

fn distances_within(adj: &[Vec<usize>], s: usize, alive: &[bool]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if alive[w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn extend(
    adj: &[Vec<usize>],
    alive: &[bool],
    dist: &[usize],
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let v = *path.last().unwrap();
    let s = path[0];
    if path.len() == len {
        return adj[v].contains(&s);
    }
    let left = len - path.len();
    for &w in &adj[v] {
        if !alive[w] || on_path[w] || dist[w] > left {
            continue;
        }
        // orient the cycle: the second vertex is smaller than the last
        if path.len() == len - 1 && w < path[1] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        if extend(adj, alive, dist, len, path, on_path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}

pub fn path_spectrum(g: &PlaneGraph, x: usize, y: usize) -> Result<PathSpectrum, CycleSearchError> {
    path_spectrum_bounded(g, x, y, DEFAULT_PATH_LIMIT)
}

/// Exhaustive enumeration of simple `x`–`y` paths on graphs with at most
/// `limit` (and never more than 64) vertices.
pub fn path_spectrum_bounded(
    g: &PlaneGraph,
    x: usize,
    y: usize,
    limit: usize,
) -> Result<PathSpectrum, CycleSearchError> {
    let n = g.vertex_count();
    check_path_args(n, x, y, limit)?;
    let masks = masks(g);
    let mut lengths = BTreeSet::new();
    let mut found = 0u64;
    spectrum_dfs(&masks, y, x, 1 << x, 0, &mut found);
    for l in 0..64 {
        if found >> l & 1 == 1 {
            lengths.insert(l);
        }
    }
    Ok(PathSpectrum {
        source: x,
        target: y,
        lengths,
    })
}

fn check_path_args(n: usize, x: usize, y: usize, limit: usize) -> Result<(), CycleSearchError> {
    if x == y || x >= n || y >= n {
        return Err(CycleSearchError::InvalidEndpoints(x, y));
    }
    if n > limit.min(64) {
        return Err(CycleSearchError::TooLarge {
            n,
            limit: limit.min(64),
        });
    }
    Ok(())
}

fn masks(g: &PlaneGraph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors_cw(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn spectrum_dfs(masks: &[u64], y: usize, v: usize, used: u64, depth: usize, found: &mut u64) {
    let mut next = masks[v] & !used;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        if w == y {
            *found |= 1 << (depth + 1);
        } else {
            spectrum_dfs(masks, y, w, used | 1 << w, depth + 1, found);
        }
    }
}

pub fn has_hamiltonian_path_between(g: &PlaneGraph, x: usize, y: usize) -> Result<bool, CycleSearchError> {
    let n = g.vertex_count();
    check_path_args(n, x, y, DEFAULT_PATH_LIMIT)?;
    let masks = masks(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(ham_dfs(&masks, y, x, 1 << x, all))
}

fn ham_dfs(masks: &[u64], y: usize, v: usize, used: u64, all: u64) -> bool {
    let mut next = masks[v] & !used;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        let now = used | 1 << w;
        if w == y {
            if now == all {
                return true;
            }
        } else if ham_dfs(masks, y, w, now, all) {
            return true;
        }
    }
    false
}

/// Length of a shortest cycle.
pub fn girth(g: &PlaneGraph) -> Result<usize, CycleSearchError> {
    girth_of(&g.adjacency()).ok_or(CycleSearchError::Acyclic)
}

/// Shortest cycle length over adjacency lists, `None` for forests.
pub fn girth_of(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] >= best {
                break;
            }
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Checks that `cycle` is a simple cycle of `g`.
pub fn is_cycle_in(g: &PlaneGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let mut seen = std::collections::HashSet::new();
    k >= 3
        && cycle.iter().all(|&v| v < g.vertex_count() && seen.insert(v))
        && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

/// BFS distance helper shared with callers that hold adjacency lists.
pub fn distance_in(adj: &[Vec<usize>], x: usize, y: usize) -> Option<usize> {
    bfs_distances(adj, x)[y]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cycle_lengths_on_small_graphs() {
        let c8 = catalog::cycle(8);
        assert!(!has_cycle_of_length(&c8, 7));
        assert!(has_cycle_of_length(&c8, 8));
        assert!(!has_cycle_of_length(&catalog::octahedron(), 7));
        let pair = catalog::glued_k4_pair();
        assert!(!has_cycle_of_length(&pair, 7));
        for l in 3..=6 {
            let w = find_cycle_of_length(&pair, l).unwrap();
            assert_eq!(w.len(), l);
            assert!(is_cycle_in(&pair, &w));
        }
    }

    #[test]
    fn spectra() {
        let k4 = catalog::k4();
        let s = path_spectrum(&k4, 0, 3).unwrap();
        assert_eq!(s.lengths, BTreeSet::from([1, 2, 3]));
        let c8 = catalog::cycle(8);
        assert_eq!(path_spectrum(&c8, 0, 1).unwrap().lengths, BTreeSet::from([1, 7]));
        let (b6a, x, y) = catalog::figure1("B6a").unwrap();
        assert_eq!(path_spectrum(&b6a, x, y).unwrap().lengths, BTreeSet::from([2, 3, 4]));
        assert!(matches!(
            path_spectrum(&catalog::cycle(13), 0, 1),
            Err(CycleSearchError::TooLarge { .. })
        ));
        assert!(path_spectrum(&k4, 1, 1).is_err());
    }

    #[test]
    fn hamiltonian_paths() {
        let k4 = catalog::k4();
        assert!(has_hamiltonian_path_between(&k4, 0, 1).unwrap());
        for label in ["B6a", "B6c", "B6d"] {
            let (g, x, y) = catalog::figure1(label).unwrap();
            assert!(!has_hamiltonian_path_between(&g, x, y).unwrap(), "{label}");
            assert!(!has_hamiltonian_path_between(&g, y, x).unwrap(), "{label}");
        }
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&catalog::cycle(8)).unwrap(), 8);
        assert_eq!(girth(&catalog::k4()).unwrap(), 3);
        assert_eq!(girth(&catalog::block("B2").unwrap()), Err(CycleSearchError::Acyclic));
        assert_eq!(girth_of(&[vec![1], vec![0, 2], vec![1]]), None);
    }
}
