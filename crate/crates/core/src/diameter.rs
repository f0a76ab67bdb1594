//! Linear-time diameter of a unicycle graph.
//!
//! A diametral pair either stays inside one pendant tree or crosses the
//! cycle. The first case reduces to tree diameters per pendant tree; the
//! second is the vertex-weighted diametral pair of the cycle, realized by
//! the farthest vertices stored in the decomposition.

use crate::cycle::{prune_cycle, weighted_diametral_pair, WeightedCycle};
use crate::error::Result;
use crate::graph::{decompose_unicycle, find_cycle, CycleDecomposition, Length, WeightedGraph};

/// Which case produced the diametral pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// Both endpoints in the same pendant tree.
    WithinTree,
    /// Endpoints in pendant trees of two different cycle vertices.
    CrossTree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterResult {
    pub value: Length,
    /// A witness pair attaining `value`. For cross-tree pairs this is
    /// `(far[i], far[j])` in cycle-position order.
    pub pair: (usize, usize),
    pub kind: PairKind,
    /// The cycle positions `(i, j)` behind a cross-tree pair.
    pub cycle_pair: Option<(usize, usize)>,
}

/// Computes the diameter (with a witness pair) of a connected unicycle
/// graph. Ties between the two cases report the cross-tree pair.
pub fn diameter(g: &WeightedGraph) -> Result<DiameterResult> {
    let cycle = find_cycle(g)?;
    let decomp = decompose_unicycle(g, &cycle);
    Ok(diameter_of_decomposition(g, &decomp))
}

/// Diameter from an existing decomposition; shared by the public entry
/// point and the augmentation search, which decomposes gadgets itself.
pub(crate) fn diameter_of_decomposition(
    g: &WeightedGraph,
    decomp: &CycleDecomposition,
) -> DiameterResult {
    // Case 1: the best pair within a single pendant tree. A zero weight
    // means the pendant tree is the cycle vertex alone.
    let mut within = (0 as Length, (decomp.cycle[0], decomp.cycle[0]));
    let mut scratch = Vec::new();
    for k in 0..decomp.len() {
        if decomp.weight[k] == 0 {
            continue;
        }
        let (value, pair) = pendant_tree_diameter(g, decomp, k, &mut scratch);
        if value > within.0 {
            within = (value, pair);
        }
    }
    let (within_value, within_pair) = within;

    // Case 2: the vertex-weighted diametral pair across the cycle.
    let wc = WeightedCycle::from(decomp);
    let survivors = prune_cycle(&wc);
    let (i, j, cross_value) = weighted_diametral_pair(&wc, &survivors);

    if cross_value >= within_value {
        DiameterResult {
            value: cross_value,
            pair: (decomp.far[i], decomp.far[j]),
            kind: PairKind::CrossTree,
            cycle_pair: Some((i, j)),
        }
    } else {
        DiameterResult {
            value: within_value,
            pair: within_pair,
            kind: PairKind::WithinTree,
            cycle_pair: None,
        }
    }
}

/// Double sweep restricted to the pendant tree anchored at cycle position
/// `k`; ties go to the smallest vertex id, the pair is id-normalized.
fn pendant_tree_diameter(
    g: &WeightedGraph,
    decomp: &CycleDecomposition,
    k: usize,
    scratch: &mut Vec<(usize, Length, usize)>,
) -> (Length, (usize, usize)) {
    let root = decomp.cycle[k];
    let (a, _) = farthest_in_pendant(g, decomp, k, root, scratch);
    let (b, value) = farthest_in_pendant(g, decomp, k, a, scratch);
    (value, (a.min(b), a.max(b)))
}

fn farthest_in_pendant(
    g: &WeightedGraph,
    decomp: &CycleDecomposition,
    k: usize,
    src: usize,
    stack: &mut Vec<(usize, Length, usize)>,
) -> (usize, Length) {
    // Cycle edges always join vertices with different anchors, so the anchor
    // test alone keeps the walk inside the pendant tree. Each edge is touched
    // a constant number of times across all k: total work stays linear.
    let mut best = (src, 0 as Length);
    stack.clear();
    stack.push((src, 0, usize::MAX));
    while let Some((u, du, via)) = stack.pop() {
        if du > best.1 || (du == best.1 && u < best.0) {
            best = (u, du);
        }
        for a in g.neighbors(u) {
            if a.edge() != via && decomp.anchor[a.to()] == k {
                stack.push((a.to(), du + a.len, a.edge()));
            }
        }
    }
    (best.0, best.1)
}
