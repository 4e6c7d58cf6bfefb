//! Canonical codes for connected plane maps, with mirror images identified.
//!
//! A code is produced by a breadth-first walk from a starting dart, reading
//! each rotation in a fixed sense. Minimizing over every start (and both
//! senses) yields an isomorphism invariant; restricting the starts to the
//! darts of one face roots the code at that face.

use super::{FaceId, PlaneGraph};

/// Canonical code of a connected plane map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MapCode(pub Vec<u16>);

impl MapCode {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|x| format!("{x:04x}")).collect()
    }
}

impl PlaneGraph {
    /// Code invariant under relabeling and reflection.
    ///
    /// Meant for connected maps; for a disconnected map only the component of
    /// each starting dart is encoded, so the result is not canonical.
    pub fn canonical_code(&self) -> MapCode {
        let starts: Vec<(usize, bool)> = (0..self.dart_count())
            .flat_map(|d| [(d, true), (d, false)])
            .collect();
        self.min_code(&starts)
    }

    /// Code of the map rooted at `face`: two (map, face) pairs get the same
    /// code iff some (possibly orientation-reversing) isomorphism carries one
    /// root face onto the other.
    ///
    /// Reflection maps the darts of a face to their reverses, so the mirrored
    /// reading starts from the reversed boundary darts.
    pub fn rooted_code(&self, face: FaceId) -> MapCode {
        let starts: Vec<(usize, bool)> = self
            .face_darts(face)
            .iter()
            .flat_map(|&d| [(d, true), (d ^ 1, false)])
            .collect();
        self.min_code(&starts)
    }

    fn min_code(&self, starts: &[(usize, bool)]) -> MapCode {
        if self.dart_count() == 0 {
            return MapCode(vec![self.vertex_count() as u16, 0]);
        }
        let mut best: Option<Vec<u16>> = None;
        let mut scratch = Scratch::new(self.vertex_count());
        for &(d0, clockwise) in starts {
            let code = self.walk_code(d0, clockwise, &mut scratch, best.as_deref());
            if let Some(code) = code {
                best = Some(code);
            }
        }
        MapCode(best.expect("at least one start"))
    }

    /// Returns the code from `d0` if it is strictly smaller than `bound`.
    fn walk_code(
        &self,
        d0: usize,
        clockwise: bool,
        s: &mut Scratch,
        bound: Option<&[u16]>,
    ) -> Option<Vec<u16>> {
        s.reset();
        let mut code = Vec::with_capacity(2 + self.dart_count() + self.vertex_count());
        code.push(self.vertex_count() as u16);
        code.push(self.edge_count() as u16);
        let mut smaller = bound.is_none();
        let push = |code: &mut Vec<u16>, x: u16, smaller: &mut bool| -> bool {
            let i = code.len();
            code.push(x);
            if !*smaller {
                let b = bound.unwrap();
                match x.cmp(&b[i]) {
                    std::cmp::Ordering::Less => *smaller = true,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => {}
                }
            }
            true
        };
        if let Some(b) = bound {
            match code[..2].cmp(&b[..2]) {
                std::cmp::Ordering::Less => smaller = true,
                std::cmp::Ordering::Greater => return None,
                std::cmp::Ordering::Equal => {}
            }
        }
        let v0 = self.origin(d0);
        s.label[v0] = 0;
        s.first[v0] = d0;
        s.queue.push(v0);
        let mut next = 1u16;
        let mut qi = 0;
        while qi < s.queue.len() {
            let v = s.queue[qi];
            qi += 1;
            let mut d = s.first[v];
            for _ in 0..self.degree(v) {
                let w = self.head(d);
                if s.label[w] == u16::MAX {
                    s.label[w] = next;
                    next += 1;
                    s.first[w] = d ^ 1;
                    s.queue.push(w);
                }
                if !push(&mut code, s.label[w] + 1, &mut smaller) {
                    return None;
                }
                d = if clockwise { self.next_cw(d) } else { self.next_ccw(d) };
            }
            if !push(&mut code, 0, &mut smaller) {
                return None;
            }
        }
        if smaller {
            Some(code)
        } else {
            None
        }
    }
}

struct Scratch {
    label: Vec<u16>,
    first: Vec<usize>,
    queue: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            label: vec![u16::MAX; n],
            first: vec![0; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn reset(&mut self) {
        self.label.fill(u16::MAX);
        self.queue.clear();
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;
    use crate::plane_graph::FaceId;

    #[test]
    fn relabeling_and_mirroring_preserve_code() {
        let g = catalog::block("B6h").unwrap();
        let code = g.canonical_code();
        let perm = [3, 5, 0, 1, 4, 2];
        assert_eq!(g.relabel(&perm).canonical_code(), code);
        assert_eq!(g.mirror().canonical_code(), code);
    }

    #[test]
    fn distinguishes_catalog_blocks() {
        let mut codes: Vec<_> = catalog::block_catalog()
            .iter()
            .map(|(_, g)| g.canonical_code())
            .collect();
        let total = codes.len();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), total);
    }

    #[test]
    fn rooted_codes_count_face_orbits() {
        let distinct = |g: &crate::PlaneGraph| {
            let mut roots: Vec<_> = g.faces().map(|f| g.rooted_code(f)).collect();
            roots.sort();
            roots.dedup();
            roots.len()
        };
        // K5 - e: every face has one degree-3 and two degree-4 vertices
        assert_eq!(distinct(&catalog::block("B5d").unwrap()), 1);
        // two triangles and the outer 4-cycle
        assert_eq!(distinct(&catalog::block("B4a").unwrap()), 2);
        assert_eq!(distinct(&catalog::cycle(5)), 1);
    }

    #[test]
    fn rooted_code_survives_mirroring() {
        let g = catalog::block("B6e").unwrap();
        let m = g.mirror();
        for f in g.faces() {
            let mut edges = g.face_edges(f);
            edges.sort_unstable();
            let mf = m
                .faces()
                .find(|&h| {
                    let mut e = m.face_edges(h);
                    e.sort_unstable();
                    e == edges
                })
                .unwrap();
            assert_eq!(g.rooted_code(f), m.rooted_code(mf));
        }
        assert_ne!(g.rooted_code(FaceId(0)).0.len(), 0);
    }
}
