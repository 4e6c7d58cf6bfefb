//! Sparse vertex sets and membership in the class of minimal counterexample
//! candidates.

use serde::{Deserialize, Serialize};

use super::BlocksError;
use crate::cycle_search::find_cycle_of_length;
use crate::plane_graph::PlaneGraph;
use crate::Rational;

/// Largest order `find_sparse_set` will search.
pub const SPARSE_GUARD: usize = 6;

/// Smallest, then lexicographically first, vertex set `S` with
/// `|S| <= max_order` and at most `alpha |S|` edges incident to `S`.
pub fn find_sparse_set(
    g: &PlaneGraph,
    alpha: &Rational,
    max_order: usize,
) -> Result<Option<Vec<usize>>, BlocksError> {
    if max_order > SPARSE_GUARD {
        return Err(BlocksError::GuardExceeded {
            asked: max_order,
            limit: SPARSE_GUARD,
        });
    }
    let n = g.vertex_count();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            let mut row = vec![false; n];
            for w in g.neighbors_cw(v) {
                row[w] = true;
            }
            row
        })
        .collect();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for k in 1..=max_order.min(n) {
        let bound = alpha.clone() * k as i64;
        let mut set = Vec::with_capacity(k);
        if let Some(s) = search(&adj, &deg, k, 0, 0, &mut set, &bound) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Lexicographic subset search; `incident` is the edge count of `set` so far.
fn search(
    adj: &[Vec<bool>],
    deg: &[usize],
    k: usize,
    from: usize,
    incident: usize,
    set: &mut Vec<usize>,
    bound: &Rational,
) -> Option<Vec<usize>> {
    if set.len() == k {
        return (Rational::from(incident) <= *bound).then(|| set.clone());
    }
    for v in from..adj.len() {
        if adj.len() - v < k - set.len() {
            break;
        }
        let inner = set.iter().filter(|&&u| adj[u][v]).count();
        set.push(v);
        let found = search(adj, deg, k, v + 1, incident + deg[v] - inner, set, bound);
        set.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Why a graph is or is not in the class: 2-connected, no 7-cycle, no
/// (18/7)-sparse set of order at most 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub two_connected: bool,
    /// A 7-cycle, if any.
    pub seven_cycle: Option<Vec<usize>>,
    /// The first sparse set, if any.
    pub sparse_set: Option<Vec<usize>>,
    pub member: bool,
}

pub fn membership(g: &PlaneGraph) -> Membership {
    let two_connected = g.is_two_connected();
    let seven_cycle = if g.vertex_count() >= 7 {
        find_cycle_of_length(g, 7)
    } else {
        None
    };
    let sparse_set = find_sparse_set(g, &Rational::new(18, 7), 4).expect("within guard");
    let member = two_connected && seven_cycle.is_none() && sparse_set.is_none();
    Membership {
        two_connected,
        seven_cycle,
        sparse_set,
        member,
    }
}

pub fn in_p_n(g: &PlaneGraph) -> bool {
    g.is_two_connected()
        && find_sparse_set(g, &Rational::new(18, 7), 4)
            .expect("within guard")
            .is_none()
        && (g.vertex_count() < 7 || find_cycle_of_length(g, 7).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn alpha() -> Rational {
        Rational::new(18, 7)
    }

    #[test]
    fn degree_two_vertex_is_sparse() {
        let c8 = catalog::cycle(8);
        assert_eq!(find_sparse_set(&c8, &alpha(), 4).unwrap(), Some(vec![0]));
        assert!(!in_p_n(&c8));
    }

    #[test]
    fn glued_chain_has_sparse_pair() {
        for k in 1..=4 {
            let g = catalog::glued_k4_chain(k);
            let s = find_sparse_set(&g, &alpha(), 4).unwrap().unwrap();
            assert!(s.len() <= 2);
            assert!(!in_p_n(&g));
        }
        // the two lobe vertices of a middle lobe: 3 + 3 - 1 = 5 <= 36/7
        let g = catalog::glued_k4_chain(3);
        assert_eq!(g.degree(4), 3);
        assert_eq!(g.degree(5), 3);
        assert!(g.has_edge(4, 5));
    }

    #[test]
    fn octahedron_is_a_member() {
        let oct = catalog::octahedron();
        assert_eq!(find_sparse_set(&oct, &alpha(), 4).unwrap(), None);
        assert!(in_p_n(&oct));
        assert!(membership(&oct).member);
    }

    #[test]
    fn guard() {
        let oct = catalog::octahedron();
        assert!(matches!(
            find_sparse_set(&oct, &alpha(), 7),
            Err(BlocksError::GuardExceeded { asked: 7, limit: 6 })
        ));
    }
}
