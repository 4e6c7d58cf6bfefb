//! Catalog classification of triangular-blocks.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Decomposition;
use crate::catalog;
use crate::graph::{canonical_form, CanonicalForm, SmallGraph};
use crate::plane_graph::{FaceId, MapCode, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockLabel {
    B2,
    B3,
    B4a,
    B4b,
    B5a,
    B5b,
    B5c,
    B5d,
    B6a,
    B6b,
    B6c,
    B6d,
    B6e,
    B6f,
    B6g,
    B6h,
    B6i,
    B6ChordlessNt,
    B7a,
    B7b,
    Other,
}

const ALL: [BlockLabel; 21] = [
    BlockLabel::B2,
    BlockLabel::B3,
    BlockLabel::B4a,
    BlockLabel::B4b,
    BlockLabel::B5a,
    BlockLabel::B5b,
    BlockLabel::B5c,
    BlockLabel::B5d,
    BlockLabel::B6a,
    BlockLabel::B6b,
    BlockLabel::B6c,
    BlockLabel::B6d,
    BlockLabel::B6e,
    BlockLabel::B6f,
    BlockLabel::B6g,
    BlockLabel::B6h,
    BlockLabel::B6i,
    BlockLabel::B6ChordlessNt,
    BlockLabel::B7a,
    BlockLabel::B7b,
    BlockLabel::Other,
];

impl BlockLabel {
    pub fn as_str(self) -> &'static str {
        use BlockLabel::*;
        match self {
            B2 => "B2",
            B3 => "B3",
            B4a => "B4a",
            B4b => "B4b",
            B5a => "B5a",
            B5b => "B5b",
            B5c => "B5c",
            B5d => "B5d",
            B6a => "B6a",
            B6b => "B6b",
            B6c => "B6c",
            B6d => "B6d",
            B6e => "B6e",
            B6f => "B6f",
            B6g => "B6g",
            B6h => "B6h",
            B6i => "B6i",
            B6ChordlessNt => "B6_chordless_NT",
            B7a => "B7a",
            B7b => "B7b",
            Other => "Other",
        }
    }

    pub fn all() -> &'static [BlockLabel] {
        &ALL
    }

    /// The catalog drawing for this label, if it has one.
    pub fn shape(self) -> Option<PlaneGraph> {
        catalog::block(self.as_str())
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown block label `{0}`")]
pub struct ParseLabelError(pub String);

impl FromStr for BlockLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL.iter()
            .copied()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ParseLabelError(s.to_string()))
    }
}

impl Serialize for BlockLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for BlockLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockClass {
    pub label: BlockLabel,
    pub order: usize,
    /// Some non-triangular face of the block (drawn as a near triangulation
    /// when possible) has a chord.
    pub has_chord: bool,
}

struct Tables {
    maps: HashMap<MapCode, BlockLabel>,
    graphs: HashMap<CanonicalForm, BlockLabel>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut maps = HashMap::new();
        let mut graphs = HashMap::new();
        for (l, g) in catalog::block_catalog() {
            let label: BlockLabel = l.parse().expect("catalog label");
            maps.insert(g.canonical_code(), label);
            graphs.insert(canonical_form(&SmallGraph::from_plane(g)), label);
        }
        Tables { maps, graphs }
    })
}

/// Classifies a plane graph that is itself a triangular-block.
///
/// The embedding is matched against the catalog first, then the abstract
/// graph; a 6-vertex graph drawable as a near triangulation with a chordless
/// outer cycle is `B6_chordless_NT`.
pub fn classify_graph(g: &PlaneGraph) -> BlockClass {
    let order = g.vertex_count();
    let t = tables();
    let label = t.maps.get(&g.canonical_code()).copied().or_else(|| {
        (order <= 7)
            .then(|| t.graphs.get(&canonical_form(&SmallGraph::from_plane(g))).copied())
            .flatten()
    });
    let drawing = near_triangulation_drawing(g);
    let has_chord = {
        let h = drawing.as_ref().map_or(g, |(h, _)| h);
        h.faces().any(|f| h.face_length(f) > 3 && face_has_chord(h, f))
    };
    let label = label.unwrap_or(if order == 6 && drawing.is_some() && !has_chord {
        BlockLabel::B6ChordlessNt
    } else {
        BlockLabel::Other
    });
    BlockClass {
        label,
        order,
        has_chord,
    }
}

/// A drawing of `g` with at most one non-triangular face, and that face.
/// The given embedding is tried first.
fn near_triangulation_drawing(g: &PlaneGraph) -> Option<(PlaneGraph, Option<FaceId>)> {
    let outer_of = |h: &PlaneGraph| -> Option<Option<FaceId>> {
        let big: Vec<FaceId> = h.faces().filter(|&f| h.face_length(f) != 3).collect();
        match big.len() {
            0 => Some(None),
            1 if is_simple_face(h, big[0]) => Some(Some(big[0])),
            _ => None,
        }
    };
    if let Some(o) = outer_of(g) {
        return Some((g.clone(), o));
    }
    if g.vertex_count() > crate::oracle::EMBED_LIMIT || !g.is_two_connected() {
        return None;
    }
    crate::oracle::all_embeddings(&SmallGraph::from_plane(g))
        .into_iter()
        .find_map(|h| outer_of(&h).map(|o| (h, o)))
}

fn is_simple_face(g: &PlaneGraph, f: FaceId) -> bool {
    let mut vs = g.face_vertices(f);
    let k = vs.len();
    vs.sort_unstable();
    vs.dedup();
    vs.len() == k
}

fn face_has_chord(g: &PlaneGraph, f: FaceId) -> bool {
    let vs = g.face_vertices(f);
    let k = vs.len();
    (0..k).any(|i| (i + 2..k).any(|j| !(i == 0 && j == k - 1) && g.has_edge(vs[i], vs[j])))
}

impl Decomposition<'_> {
    pub fn classify(&self, b: usize) -> BlockClass {
        if self.blocks[b].trivial {
            return BlockClass {
                label: BlockLabel::B2,
                order: 2,
                has_chord: false,
            };
        }
        classify_graph(&self.block_map(b).graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::Decomposition;

    #[test]
    fn catalog_shapes_classify_as_themselves() {
        for (l, g) in catalog::block_catalog() {
            assert_eq!(classify_graph(g).label.as_str(), *l);
        }
    }

    #[test]
    fn catalog_graphs_are_pairwise_non_isomorphic() {
        assert_eq!(tables().graphs.len(), catalog::BLOCK_LABELS.len());
    }

    #[test]
    fn labels_round_trip() {
        for &l in BlockLabel::all() {
            assert_eq!(l.as_str().parse::<BlockLabel>().unwrap(), l);
            let json = serde_json::to_string(&l).unwrap();
            assert_eq!(serde_json::from_str::<BlockLabel>(&json).unwrap(), l);
        }
        assert!("B8".parse::<BlockLabel>().is_err());
    }

    #[test]
    fn small_blocks() {
        let k4 = catalog::k4();
        let d = Decomposition::new(&k4).unwrap();
        assert_eq!(d.classify(0).label, BlockLabel::B4b);
        let b4a = catalog::block("B4a").unwrap();
        let d = Decomposition::new(&b4a).unwrap();
        assert_eq!(d.classify(0).label, BlockLabel::B4a);
        assert!(d.classify(0).has_chord);
        let oct = catalog::octahedron();
        let d = Decomposition::new(&oct).unwrap();
        assert_eq!(d.classify(0).label, BlockLabel::B6ChordlessNt);
        let c8 = catalog::cycle(8);
        let d = Decomposition::new(&c8).unwrap();
        assert_eq!(d.classify(3).label, BlockLabel::B2);
    }

    #[test]
    fn figure5_blocks() {
        for l in ["B7a", "B7b"] {
            let g = catalog::block(l).unwrap();
            let d = Decomposition::new(&g).unwrap();
            assert_eq!(d.blocks().len(), 1);
            assert_eq!(d.classify(0).label.as_str(), l);
        }
    }

    #[test]
    fn redrawn_block_still_classifies() {
        // middle lobe of a three-lobe chain: K4 - e whose 4-cycle is a hole
        let g = catalog::glued_k4_chain(3);
        let d = Decomposition::new(&g).unwrap();
        let labels: Vec<BlockLabel> = (0..d.blocks().len()).map(|b| d.classify(b).label).collect();
        assert!(labels.contains(&BlockLabel::B4a));
        assert!(labels.contains(&BlockLabel::B6i));
    }
}
