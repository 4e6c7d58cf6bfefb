//! Named plane graphs: small solids, cycles, the catalog of triangular-block
//! shapes and the two exceptional flowers.
//!
//! Block shapes are entered as straight-line drawings (polar coordinates and
//! an edge list, vertices numbered from 1 as in the usual pictures); the
//! rotation system is read off by sorting neighbors by angle.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::plane_graph::PlaneGraph;

type Point = (f64, f64);

fn polar(deg: f64, r: f64) -> Point {
    let t = deg * PI / 180.0;
    (r * t.cos(), r * t.sin())
}

/// Plane graph of a straight-line drawing. `edges` use 1-based labels.
fn from_drawing(points: &[Point], edges: &[(usize, usize)]) -> PlaneGraph {
    let n = points.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        nbrs[a - 1].push(b - 1);
        nbrs[b - 1].push(a - 1);
    }
    for (v, list) in nbrs.iter_mut().enumerate() {
        let (px, py) = points[v];
        let angle = |w: &usize| {
            let (qx, qy) = points[*w];
            (qy - py).atan2(qx - px)
        };
        // decreasing angle is clockwise
        list.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
    }
    PlaneGraph::from_neighbor_rotations(n, &nbrs).expect("catalog drawing is a simple plane graph")
}

fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
    (1..=k).map(|i| (i, i % k + 1)).collect()
}

fn with_extra(mut base: Vec<(usize, usize)>, extra: &[(usize, usize)]) -> Vec<(usize, usize)> {
    base.extend_from_slice(extra);
    base
}

fn hexagon() -> Vec<Point> {
    (0..6).map(|i| polar(60.0 * i as f64, 1.0)).collect()
}

fn pentagon() -> Vec<Point> {
    [18.0, 90.0, 162.0, 234.0, 306.0].iter().map(|&a| polar(a, 1.0)).collect()
}

fn square() -> Vec<Point> {
    [45.0, 135.0, 225.0, 315.0].iter().map(|&a| polar(a, 1.0)).collect()
}

fn plus(mut pts: Vec<Point>, extra: &[Point]) -> Vec<Point> {
    pts.extend_from_slice(extra);
    pts
}

/// The cycle `C_k` on vertices `0..k` in order.
pub fn cycle(k: usize) -> PlaneGraph {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    let pts: Vec<Point> = (0..k).map(|i| polar(360.0 * i as f64 / k as f64, 1.0)).collect();
    from_drawing(&pts, &cycle_edges(k))
}

pub fn k2() -> PlaneGraph {
    PlaneGraph::from_neighbor_rotations(2, &[vec![1], vec![0]]).unwrap()
}

pub fn k4() -> PlaneGraph {
    let pts = [polar(90.0, 1.0), polar(210.0, 1.0), polar(330.0, 1.0), (0.0, 0.0)];
    from_drawing(&pts, &[(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)])
}

/// Outer triangle 0,1,2 and inner triangle 3,4,5; every vertex has degree 4.
pub fn octahedron() -> PlaneGraph {
    let pts = [
        polar(90.0, 1.0),
        polar(210.0, 1.0),
        polar(330.0, 1.0),
        polar(30.0, 0.3),
        polar(150.0, 0.3),
        polar(270.0, 0.3),
    ];
    let edges = [
        (1, 2),
        (2, 3),
        (3, 1),
        (4, 5),
        (5, 6),
        (6, 4),
        (4, 1),
        (4, 3),
        (5, 1),
        (5, 2),
        (6, 2),
        (6, 3),
    ];
    from_drawing(&pts, &edges)
}

/// `k` copies of `K4` sharing the edge `01`. Copy `i` adds the vertices
/// `2 + 2i` and `3 + 2i`, stacked above the shared edge.
pub fn glued_k4_chain(k: usize) -> PlaneGraph {
    assert!(k >= 1, "need at least one copy");
    let mut pts = vec![(-1.0, 0.0), (1.0, 0.0)];
    let mut edges = vec![(1, 2)];
    for i in 0..k {
        pts.push((0.0, (2 * i + 1) as f64));
        pts.push((0.0, (2 * i + 2) as f64));
        let (a, b) = (3 + 2 * i, 4 + 2 * i);
        edges.extend_from_slice(&[(1, a), (1, b), (2, a), (2, b), (a, b)]);
    }
    from_drawing(&pts, &edges)
}

pub fn glued_k4_pair() -> PlaneGraph {
    glued_k4_chain(2)
}

fn build_block(label: &str) -> Option<PlaneGraph> {
    let g = match label {
        "B2" => k2(),
        "B3" => cycle(3),
        "B4a" => from_drawing(&square(), &with_extra(cycle_edges(4), &[(2, 4)])),
        "B4b" => {
            let pts = [polar(90.0, 1.0), polar(210.0, 1.0), polar(330.0, 1.0), polar(90.0, 0.2)];
            from_drawing(&pts, &[(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)])
        }
        "B5a" => from_drawing(&pentagon(), &with_extra(cycle_edges(5), &[(2, 4), (2, 5)])),
        // the wheel W4
        "B5b" => from_drawing(
            &plus(square(), &[(0.0, 0.0)]),
            &with_extra(cycle_edges(4), &[(1, 5), (2, 5), (3, 5), (4, 5)]),
        ),
        "B5c" => from_drawing(
            &plus(square(), &[polar(45.0, 0.5)]),
            &with_extra(cycle_edges(4), &[(2, 4), (1, 5), (2, 5), (4, 5)]),
        ),
        // K5 minus an edge: outer triangle 123, path 1-5-4 inside
        "B5d" => {
            let pts = [
                polar(90.0, 1.0),
                polar(210.0, 1.0),
                polar(330.0, 1.0),
                (0.0, 0.0),
                polar(90.0, 0.5),
            ];
            let edges = [
                (1, 2),
                (2, 3),
                (3, 1),
                (1, 5),
                (5, 4),
                (2, 4),
                (3, 4),
                (2, 5),
                (3, 5),
            ];
            from_drawing(&pts, &edges)
        }
        "B6a" => from_drawing(&hexagon(), &with_extra(cycle_edges(6), &[(3, 5), (3, 6), (3, 1)])),
        "B6b" => from_drawing(&hexagon(), &with_extra(cycle_edges(6), &[(3, 5), (3, 6), (2, 6)])),
        "B6c" => from_drawing(&hexagon(), &with_extra(cycle_edges(6), &[(3, 5), (5, 1), (3, 1)])),
        "B6d" => from_drawing(
            &plus(pentagon(), &[(0.0, 0.0)]),
            &with_extra(cycle_edges(5), &[(2, 4), (2, 6), (2, 5), (4, 6), (5, 6)]),
        ),
        "B6e" => from_drawing(
            &plus(pentagon(), &[polar(162.0, 2.0 / 3.0)]),
            &with_extra(cycle_edges(5), &[(2, 4), (2, 6), (2, 5), (4, 6), (3, 6)]),
        ),
        "B6f" => from_drawing(
            &plus(pentagon(), &[polar(270.0, 1.0 / 3.0)]),
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (1, 6),
                (3, 6),
                (4, 6),
                (5, 6),
            ],
        ),
        "B6g" => from_drawing(
            &plus(square(), &[polar(45.0, 1.0 / 3.0), polar(45.0, 2.0 / 3.0)]),
            &with_extra(cycle_edges(4), &[(2, 4), (1, 6), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6)]),
        ),
        "B6h" => from_drawing(
            &plus(square(), &[polar(20.0, 0.5), polar(70.0, 0.5)]),
            &with_extra(cycle_edges(4), &[(2, 4), (1, 5), (1, 6), (2, 6), (4, 5), (4, 6), (5, 6)]),
        ),
        "B6i" => from_drawing(
            &plus(square(), &[polar(45.0, 0.5), polar(225.0, 0.5)]),
            &with_extra(cycle_edges(4), &[(2, 4), (1, 5), (2, 5), (4, 5), (3, 6), (2, 6), (4, 6)]),
        ),
        "B7a" => from_drawing(
            &plus(hexagon(), &[(0.0, 0.0)]),
            &with_extra(cycle_edges(6), &[(3, 5), (5, 1), (3, 1), (7, 1), (3, 7), (5, 7)]),
        ),
        "B7b" => from_drawing(
            &plus(
                square(),
                &[polar(45.0, 1.0 / 6.0), polar(45.0, 2.0 / 3.0), polar(90.0, 0.4)],
            ),
            &with_extra(
                cycle_edges(4),
                &[(2, 4), (1, 6), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6), (2, 7), (6, 7)],
            ),
        ),
        _ => return None,
    };
    Some(g)
}

/// Labels of the catalog shapes, smallest first.
pub const BLOCK_LABELS: [&str; 19] = [
    "B2", "B3", "B4a", "B4b", "B5a", "B5b", "B5c", "B5d", "B6a", "B6b", "B6c", "B6d", "B6e",
    "B6f", "B6g", "B6h", "B6i", "B7a", "B7b",
];

/// Every catalog shape with its label.
pub fn block_catalog() -> &'static [(&'static str, PlaneGraph)] {
    static CATALOG: OnceLock<Vec<(&'static str, PlaneGraph)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        BLOCK_LABELS
            .iter()
            .map(|&l| (l, build_block(l).expect("label in catalog")))
            .collect()
    })
}

/// The catalog shape with the given label (for example `"B6c"`).
pub fn block(label: &str) -> Option<PlaneGraph> {
    block_catalog()
        .iter()
        .find(|(l, _)| l.eq_ignore_ascii_case(label))
        .map(|(_, g)| g.clone())
}

/// The three near triangulations with a marked outer pair `(x, y)` joined by
/// no Hamiltonian path.
pub fn figure1(label: &str) -> Option<(PlaneGraph, usize, usize)> {
    let (x, y) = match label.to_ascii_uppercase().as_str() {
        "B6A" => (4, 0),
        "B6C" => (4, 1),
        "B6D" => (3, 4),
        _ => return None,
    };
    Some((block(label)?, x, y))
}

/// The two exceptional flowers: a `W4` or `B5c` block on `a, b, c, d` (and a
/// hub) with petals `bcdv` and `badu`.
///
/// Vertex order: `a, b, c, d, u, v, hub`.
pub fn exceptional_flowers() -> [PlaneGraph; 2] {
    let r = 2.0 / 3.0;
    let base = vec![
        polar(180.0, r),
        polar(90.0, r),
        polar(0.0, r),
        polar(270.0, r),
        polar(180.0, 1.5),
        polar(0.0, 1.5),
    ];
    let petals = [(1, 2), (2, 3), (3, 4), (4, 1), (2, 6), (4, 6), (2, 5), (4, 5)];
    let wheel = from_drawing(
        &plus(base.clone(), &[(0.0, 0.0)]),
        &with_extra(petals.to_vec(), &[(3, 7), (2, 7), (1, 7), (4, 7)]),
    );
    let fan = from_drawing(
        &plus(base, &[polar(90.0, 1.0 / 3.0)]),
        &with_extra(petals.to_vec(), &[(3, 1), (3, 7), (2, 7), (1, 7)]),
    );
    [wheel, fan]
}

/// Graphs addressable by name: `c<k>`, `k2`, `k4`, `octahedron`,
/// `glued-k4-pair`, `glued-k4-<k>`, catalog labels (`b4a`, `b7b`, ...),
/// `flower-w4` and `flower-b5c`.
pub fn named(name: &str) -> Option<PlaneGraph> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "k2" => return Some(k2()),
        "k4" => return Some(k4()),
        "octahedron" => return Some(octahedron()),
        "glued-k4-pair" => return Some(glued_k4_pair()),
        "flower-w4" => return Some(exceptional_flowers()[0].clone()),
        "flower-b5c" => return Some(exceptional_flowers()[1].clone()),
        _ => {}
    }
    if let Some(k) = lower.strip_prefix("glued-k4-").and_then(|s| s.parse::<usize>().ok()) {
        return (k >= 1).then(|| glued_k4_chain(k));
    }
    if let Some(k) = lower.strip_prefix('c').and_then(|s| s.parse::<usize>().ok()) {
        return (k >= 3).then(|| cycle(k));
    }
    block(&lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_shape_is_a_plane_graph() {
        let expect: [(&str, usize, usize); 19] = [
            ("B2", 2, 1),
            ("B3", 3, 3),
            ("B4a", 4, 5),
            ("B4b", 4, 6),
            ("B5a", 5, 7),
            ("B5b", 5, 8),
            ("B5c", 5, 8),
            ("B5d", 5, 9),
            ("B6a", 6, 9),
            ("B6b", 6, 9),
            ("B6c", 6, 9),
            ("B6d", 6, 10),
            ("B6e", 6, 10),
            ("B6f", 6, 10),
            ("B6g", 6, 11),
            ("B6h", 6, 11),
            ("B6i", 6, 11),
            ("B7a", 7, 12),
            ("B7b", 7, 13),
        ];
        for (label, v, e) in expect {
            let g = block(label).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (v, e), "{label}");
            assert_eq!(g.euler_characteristic(), 2, "{label}");
        }
    }

    #[test]
    fn shapes_are_near_triangulations() {
        // B7b keeps an interior 4-face next to its outer 4-cycle
        for (label, g) in block_catalog().iter().skip(1).filter(|(l, _)| *l != "B7b") {
            let big: Vec<_> = g.faces().filter(|&f| g.face_length(f) > 3).collect();
            assert!(big.len() <= 1, "{label}");
            assert!(g.is_two_connected(), "{label}");
        }
    }

    #[test]
    fn solids_and_chains() {
        let oct = octahedron();
        assert!((0..6).all(|v| oct.degree(v) == 4));
        assert!(oct.faces().all(|f| oct.face_length(f) == 3));
        for k in 1..6 {
            let g = glued_k4_chain(k);
            assert_eq!(g.vertex_count(), 2 + 2 * k);
            assert_eq!(g.edge_count(), 1 + 5 * k);
            assert_eq!(g.face_count(), 1 + 3 * k);
        }
    }

    #[test]
    fn flowers_have_two_petals() {
        for fl in exceptional_flowers() {
            assert_eq!(fl.vertex_count(), 7);
            assert_eq!(fl.edge_count(), 12);
            assert_eq!(fl.euler_characteristic(), 2);
            let quads = fl.faces().filter(|&f| fl.face_length(f) == 4).count();
            assert_eq!(quads, 3);
        }
    }

    #[test]
    fn names_resolve() {
        assert_eq!(named("c8").unwrap().vertex_count(), 8);
        assert_eq!(named("B7b").unwrap().edge_count(), 13);
        assert_eq!(named("glued-k4-18").unwrap().edge_count(), 91);
        assert!(named("c2").is_none());
        assert!(named("nope").is_none());
        assert_eq!(figure1("b6d").unwrap().1, 3);
    }
}
