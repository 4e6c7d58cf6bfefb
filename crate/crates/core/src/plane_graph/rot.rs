//! The `.rot` text format.
//!
//! ```text
//! n 4
//! 0: 1 2 3
//! 1: 0 3 2
//! 2: 0 1 3
//! 3: 0 2 1
//! ```
//!
//! Line one gives the vertex count; each following line lists the neighbors
//! of a vertex in clockwise order. Several graphs may share a file, separated
//! by blank lines. `#` starts a comment.

use super::{PlaneGraph, PlaneGraphError};

pub fn to_rot(g: &PlaneGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for v in 0..g.vertex_count() {
        out.push_str(&v.to_string());
        out.push(':');
        for w in g.neighbors_cw(v) {
            out.push(' ');
            out.push_str(&w.to_string());
        }
        out.push('\n');
    }
    out
}

/// Parses every graph in a `.rot` document.
pub fn parse_rot(text: &str) -> Result<Vec<PlaneGraph>, PlaneGraphError> {
    let mut graphs = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            if !block.is_empty() {
                graphs.push(parse_block(&block)?);
                block.clear();
            }
            continue;
        }
        block.push((i + 1, line));
    }
    if !block.is_empty() {
        graphs.push(parse_block(&block)?);
    }
    Ok(graphs)
}

/// Parses a document that must contain exactly one graph.
pub fn parse_rot_single(text: &str) -> Result<PlaneGraph, PlaneGraphError> {
    let mut graphs = parse_rot(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        k => Err(PlaneGraphError::Parse {
            line: 0,
            msg: format!("expected one graph, found {k}"),
        }),
    }
}

fn parse_block(lines: &[(usize, &str)]) -> Result<PlaneGraph, PlaneGraphError> {
    let (first_line, header) = lines[0];
    let perr = |line: usize, msg: String| PlaneGraphError::Parse { line, msg };
    let n: usize = header
        .strip_prefix('n')
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| perr(first_line, format!("expected `n <count>`, got {header:?}")))?;
    let mut neighbors: Vec<Option<Vec<usize>>> = vec![None; n];
    for &(ln, line) in &lines[1..] {
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| perr(ln, "expected `<v>: <neighbors>`".to_string()))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| perr(ln, format!("bad vertex {head:?}")))?;
        if v >= n {
            return Err(perr(ln, format!("vertex {v} out of range")));
        }
        if neighbors[v].is_some() {
            return Err(perr(ln, format!("vertex {v} listed twice")));
        }
        let list = tail
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| perr(ln, format!("bad neighbor {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        neighbors[v] = Some(list);
    }
    let neighbors: Vec<Vec<usize>> = neighbors.into_iter().map(Option::unwrap_or_default).collect();
    PlaneGraph::from_neighbor_rotations(n, &neighbors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_reproduces_faces() {
        for g in [catalog::k4(), catalog::octahedron(), catalog::glued_k4_pair()] {
            let back = parse_rot_single(&to_rot(&g)).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.face_edge_sets(), g.face_edge_sets());
        }
    }

    #[test]
    fn multiple_blocks_and_comments() {
        let text = "# two graphs\nn 3\n0: 1 2\n1: 2 0\n2: 0 1\n\nn 2\n0: 1\n1: 0\n";
        let gs = parse_rot(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].face_count(), 2);
        assert_eq!(gs[1].edge_count(), 1);
    }

    #[test]
    fn rejects_one_sided_edges() {
        let err = parse_rot("n 3\n0: 1 2\n1: 0\n2: 1\n").unwrap_err();
        assert!(matches!(err, PlaneGraphError::MalformedRotation(_)));
        assert!(matches!(
            parse_rot("m 3\n").unwrap_err(),
            PlaneGraphError::Parse { .. }
        ));
    }
}
