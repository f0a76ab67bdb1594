//! Diameter of unicycle graphs in linear time, and diameter-optimal tree
//! augmentation (pick one shortcut so the augmented tree's diameter is
//! minimal) in `O(n^2 log n)` time and `O(n)` space.
//!
//! The crate also ships the deliberately-slow brute-force oracles the test
//! suites compare against, plus seeded instance generators. All arithmetic
//! is exact integer arithmetic.
//!
//! With the default `parallel` feature the augmentation search fans the
//! per-position work out over rayon; disabling default features yields a
//! purely sequential build with identical output.

#![forbid(unsafe_code)]

pub mod cycle;
pub mod diameter;
pub mod doat;
pub mod error;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod rng;

pub use cycle::{prune_cycle, weighted_diametral_pair, SurvivorSet, WeightedCycle};
pub use diameter::{diameter, DiameterResult, PairKind};
pub use doat::{
    best_shortcut_for_vertex, evaluate_delta, prune_shortcuts, shortcut_candidates,
    shortcut_dominates, solve_doat, CandidateShortcut, DoatSolution, EvalResult, FunctionTag,
    ShortcutOracle,
};
pub use error::{Error, Result};
pub use gen::{random_tree, random_unicycle, GenSpec, TreeShape};
pub use graph::{
    decompose_along_path, decompose_unicycle, find_cycle, parse_graph, tree_diametral_path,
    write_graph, CycleDecomposition, DiametralPath, Edge, Length, PathDecomposition,
    WeightedGraph,
};
pub use oracle::{apsp, brute_delta_profile, brute_diameter, brute_doat, brute_weighted_pair,
    DistanceMatrix};
