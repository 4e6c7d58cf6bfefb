//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! A graph on `k + 1` vertices is produced from its parent on `k` vertices by
//! adding a vertex `v` joined to a subset of the old ones. The child is kept
//! only when `v` lies in the orbit of the canonically chosen deletion vertex:
//! among vertices with the largest (degree, neighbor degrees) invariant, the
//! one placed last by the canonical labeling. Every isomorphism class then
//! has exactly one parent class, and duplicates from one parent are removed
//! by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use super::OracleError;
use crate::graph::{bits, canonical_labeling, marked_form, CanonicalForm, SmallGraph, MAX_CANON_VERTICES};

/// Largest order of a full (unfiltered) enumeration.
pub const ENUMERATION_GUARD: usize = 9;

/// Known numbers of graphs on 1..=9 vertices.
pub const GRAPH_COUNTS: [usize; 9] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

/// A hereditary class to enumerate: the predicate must hold for every
/// induced subgraph of a graph that satisfies it.
pub struct Class<'a> {
    pub keep: &'a (dyn Fn(&SmallGraph) -> bool + Sync),
    pub max_degree: Option<usize>,
}

impl Class<'_> {
    pub fn all() -> Class<'static> {
        Class {
            keep: &|_| true,
            max_degree: None,
        }
    }
}

/// One graph of an enumeration: its canonical form and the canonical
/// representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Enumerated {
    pub form: CanonicalForm,
}

impl Enumerated {
    pub fn graph(&self) -> SmallGraph {
        self.form.to_graph()
    }
}

/// All graphs on `n` vertices up to isomorphism.
pub fn enumerate_abstract_graphs(n: usize) -> Result<Vec<SmallGraph>, OracleError> {
    if n > ENUMERATION_GUARD {
        return Err(OracleError::GuardExceeded {
            asked: n,
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(enumerate_class(n, &Class::all())
        .into_iter()
        .map(|e| e.graph())
        .collect())
}

/// Members of a hereditary class on `n` vertices, sorted by canonical form.
pub fn enumerate_class(n: usize, class: &Class<'_>) -> Vec<Enumerated> {
    let mut level = vec![Enumerated {
        form: canonical_labeling(&SmallGraph::new(n.min(1)), None).form,
    }];
    for _ in 1..n {
        level = extend_level(&level, class);
    }
    level
}

/// Every child class of the graphs in `level`, sorted by canonical form.
pub fn extend_level(level: &[Enumerated], class: &Class<'_>) -> Vec<Enumerated> {
    let mut next: Vec<Enumerated> = level
        .par_iter()
        .flat_map_iter(|p| children(&p.graph(), class))
        .collect();
    next.par_sort_unstable();
    next
}

/// Canonical children of one parent in the class.
pub fn children(parent: &SmallGraph, class: &Class<'_>) -> Vec<Enumerated> {
    let k = parent.vertex_count();
    assert!(k < MAX_CANON_VERTICES);
    let open: u64 = (0..k)
        .filter(|&u| class.max_degree.is_none_or(|d| parent.degree(u) < d))
        .fold(0, |m, u| m | 1 << u);
    let max_size = class.max_degree.unwrap_or(k).min(k);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in subsets(open, max_size) {
        let child = parent.with_vertex(mask);
        let Some(form) = canonical_extension(&child) else {
            continue;
        };
        if seen.insert(form) && (class.keep)(&child) {
            out.push(Enumerated { form });
        }
    }
    out
}

/// Subsets of `universe` with at most `max` elements.
fn subsets(universe: u64, max: usize) -> impl Iterator<Item = u64> {
    let elems: Vec<usize> = bits(universe).collect();
    let total = 1u64 << elems.len();
    (0..total).filter_map(move |i| {
        if i.count_ones() as usize > max {
            return None;
        }
        Some(bits(i).fold(0u64, |m, j| m | 1 << elems[j]))
    })
}

fn invariants(g: &SmallGraph) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// The child's canonical form when its last vertex is in the orbit of the
/// canonical deletion vertex.
pub fn canonical_extension(child: &SmallGraph) -> Option<CanonicalForm> {
    let v = child.vertex_count() - 1;
    let inv = invariants(child);
    let best = inv.iter().max().unwrap();
    if inv[v] != *best {
        return None;
    }
    let lab = canonical_labeling(child, None);
    if inv.iter().filter(|x| *x == best).count() == 1 {
        return Some(lab.form);
    }
    let m = *lab.order.iter().rev().find(|&&u| inv[u] == *best).unwrap();
    (m == v || marked_form(child, v) == marked_form(child, m)).then_some(lab.form)
}
