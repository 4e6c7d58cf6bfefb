//! Exact charges and the partition ledger.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::classify::{BlockClass, BlockLabel};
use super::{BlocksError, Decomposition};
use crate::catalog;
use crate::plane_graph::{MapCode, PlaneGraph};
use crate::Rational;

/// `e(B)`, `n(B)`, `f(B)` and `g(B) = 24 f - 17 e + 6 n` of one block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCharge {
    pub e: usize,
    pub n: Rational,
    pub f: Rational,
    pub g: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub id: usize,
    pub class: BlockLabel,
    pub e: usize,
    pub n: Rational,
    pub f: Rational,
    pub g: Rational,
    pub exceptional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeLedger {
    pub n: usize,
    pub e: usize,
    pub f: usize,
    pub blocks: Vec<BlockRow>,
    pub groups: Vec<Vec<usize>>,
    pub group_sums: Vec<Rational>,
    pub total_g: Rational,
    /// Every group sums to at most zero.
    pub verdict: bool,
}

impl ChargeLedger {
    /// `24 F - 17 E + 6 V` of the graph.
    pub fn expected_total(&self) -> Rational {
        Rational::from_integer(24 * self.f as i64 - 17 * self.e as i64 + 6 * self.n as i64)
    }

    /// The four partition identities, checked exactly.
    pub fn identities_hold(&self) -> bool {
        let e: usize = self.blocks.iter().map(|r| r.e).sum();
        let n: Rational = self.blocks.iter().map(|r| r.n.clone()).sum();
        let f: Rational = self.blocks.iter().map(|r| r.f.clone()).sum();
        let g: Rational = self.blocks.iter().map(|r| r.g.clone()).sum();
        e == self.e && n == self.n as i64 && f == self.f as i64 && g == self.expected_total()
            && self.total_g == g
    }
}

impl Decomposition<'_> {
    pub fn charge(&self, b: usize) -> BlockCharge {
        let block = &self.blocks[b];
        let e = block.edges.len();
        let n: Rational = block
            .vertices
            .iter()
            .map(|&v| Rational::new(1, self.blocks_at[v].len() as i64))
            .sum();
        let mut f = Rational::zero();
        for r in &self.refinements {
            let inside = r.edges.iter().filter(|&&x| self.block_of_edge[x] == b).count();
            if inside > 0 {
                f += Rational::new(inside as i64, r.len() as i64);
            }
        }
        let g = f.clone() * 24 - Rational::from_integer(17 * e as i64) + n.clone() * 6;
        BlockCharge { e, n, f, g }
    }

    /// Trivial blocks in the flower of `b` when that flower is one of the
    /// two exceptional flowers.
    pub fn exceptional_flower(&self, b: usize, class: &BlockClass) -> Option<Vec<usize>> {
        if !matches!(class.label, BlockLabel::B5b | BlockLabel::B5c) {
            return None;
        }
        let mut extra: Vec<usize> = self
            .petals(b)
            .iter()
            .flat_map(|p| self.graph.face_edges(p.face))
            .filter(|&x| self.block_of_edge[x] != b)
            .collect();
        extra.sort_unstable();
        extra.dedup();
        if extra.len() != 4 || extra.iter().any(|&x| !self.blocks[self.block_of_edge[x]].trivial) {
            return None;
        }
        let mut edges = self.blocks[b].edges.clone();
        edges.extend(&extra);
        let code = self.graph.restrict(&edges).graph.canonical_code();
        flower_codes()
            .contains(&code)
            .then(|| extra.iter().map(|&x| self.block_of_edge[x]).collect())
    }
}

fn flower_codes() -> &'static [MapCode] {
    static CODES: OnceLock<Vec<MapCode>> = OnceLock::new();
    CODES.get_or_init(|| {
        catalog::exceptional_flowers()
            .iter()
            .map(|g| g.canonical_code())
            .collect()
    })
}

/// Charges every block, groups each exceptional flower's block with its four
/// trivial blocks, and sums the groups.
pub fn charge_report(g: &PlaneGraph) -> Result<ChargeLedger, BlocksError> {
    let d = Decomposition::new(g)?;
    let mut rows = Vec::with_capacity(d.blocks().len());
    let mut flowers = Vec::new();
    for b in 0..d.blocks().len() {
        let class = d.classify(b);
        let c = d.charge(b);
        let flower = d.exceptional_flower(b, &class);
        if let Some(members) = &flower {
            flowers.push((b, members.clone()));
        }
        rows.push(BlockRow {
            id: b,
            class: class.label,
            e: c.e,
            n: c.n,
            f: c.f,
            g: c.g,
            exceptional: flower.is_some(),
        });
    }
    let mut owner = vec![None; rows.len()];
    for (b, members) in &flowers {
        owner[*b] = Some(*b);
        for &m in members {
            if owner[m].is_some() {
                return Err(BlocksError::ExceptionalOverlap(m));
            }
            owner[m] = Some(*b);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut placed = HashSet::new();
    for b in 0..rows.len() {
        if placed.contains(&b) {
            continue;
        }
        let group: Vec<usize> = match owner[b] {
            Some(root) => {
                let mut gr: Vec<usize> = (0..rows.len()).filter(|&x| owner[x] == Some(root)).collect();
                gr.sort_unstable();
                gr
            }
            None => vec![b],
        };
        placed.extend(group.iter().copied());
        groups.push(group);
    }
    let group_sums: Vec<Rational> = groups
        .iter()
        .map(|gr| gr.iter().map(|&b| rows[b].g.clone()).sum())
        .collect();
    let total_g: Rational = rows.iter().map(|r| r.g.clone()).sum();
    let verdict = group_sums.iter().all(|s| *s <= 0);
    Ok(ChargeLedger {
        n: g.vertex_count(),
        e: g.edge_count(),
        f: g.face_count(),
        blocks: rows,
        groups,
        group_sums,
        total_g,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_single_block() {
        let r = charge_report(&catalog::octahedron()).unwrap();
        assert_eq!(r.blocks.len(), 1);
        let row = &r.blocks[0];
        assert_eq!((row.e, row.n.clone(), row.f.clone()), (12, Rational::from(6), Rational::from(8)));
        assert_eq!(row.g, Rational::from(24));
        assert!(!r.verdict);
        assert!(r.identities_hold());
    }

    #[test]
    fn glued_pair_total() {
        let r = charge_report(&catalog::glued_k4_pair()).unwrap();
        assert_eq!(r.total_g, Rational::from(17));
        assert!(r.identities_hold());
    }

    #[test]
    fn cycle_blocks() {
        // each edge: n = 1, f = 2/8, g = 6 - 17 + 6
        let r = charge_report(&catalog::cycle(8)).unwrap();
        assert!(r.blocks.iter().all(|row| row.g == Rational::from(-5)));
        assert_eq!(r.total_g, Rational::from(24 * 2 - 17 * 8 + 6 * 8));
    }

    #[test]
    fn triangle_with_three_square_petals() {
        // a triangle whose edges each carry a 4-face; outer face has length 6
        let faces = vec![
            vec![0, 1, 2],
            vec![1, 0, 3, 4],
            vec![2, 1, 4, 5],
            vec![0, 2, 5, 3],
            vec![3, 5, 4],
        ];
        let g = PlaneGraph::from_face_cycles(6, &faces).unwrap();
        let d = Decomposition::new(&g).unwrap();
        let b = d.block_of_edge(g.edge_between(0, 1).unwrap());
        let c = d.charge(b);
        // 3 junctions of 2 blocks each
        assert_eq!(c.n, Rational::new(3, 2));
        assert_eq!(c.f, Rational::new(7, 4));
        assert_eq!(c.g, Rational::zero());
        assert_eq!(d.classify(b).label, BlockLabel::B3);
    }

    #[test]
    fn exceptional_flowers_are_grouped() {
        for flower in catalog::exceptional_flowers() {
            let r = charge_report(&flower).unwrap();
            let ex: Vec<&BlockRow> = r.blocks.iter().filter(|row| row.exceptional).collect();
            assert_eq!(ex.len(), 1);
            let group = r.groups.iter().position(|gr| gr.contains(&ex[0].id)).unwrap();
            assert_eq!(r.groups[group].len(), 5);
            assert!(r.identities_hold());
        }
    }
}
