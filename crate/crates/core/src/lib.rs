//! Triangular-block decomposition, exact charge accounting and exhaustive
//! small-case verification for plane graphs without 7-cycles.
//!
//! The main entry points:
//!
//! * [`PlaneGraph`]: a simple graph with a clockwise rotation system.
//! * [`blocks`]: triangular-blocks, petals, bad cherries, charges and the
//!   partition ledger.
//! * [`cycle_search`]: fixed-length cycles and path-length spectra.
//! * [`lemma_lab`]: exhaustive checks over near triangulations.
//! * [`constructor`]: the glued-`K4` chain and the substitution family.
//! * [`oracle`]: isomorph-free enumeration, planar embedding and exact
//!   small planar Turán numbers.

pub mod blocks;
pub mod catalog;
pub mod constructor;
pub mod cycle_search;
pub mod graph;
pub mod lemma_lab;
pub mod oracle;
pub mod plane_graph;
mod rational;

pub use blocks::{charge_report, decompose, ChargeLedger, Decomposition, TriangularBlock};
pub use plane_graph::{FaceId, PlaneGraph, PlaneGraphError};
pub use rational::{ParseRationalError, Rational};
