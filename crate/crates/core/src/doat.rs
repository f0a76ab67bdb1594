//! Diameter-optimal tree augmentation: add one shortcut to a tree so the
//! augmented graph has the smallest possible diameter.
//!
//! The search works on a diametral path P of the tree. Every shortcut is
//! represented at path level by its *reduced* form: for path positions
//! `(i, j)`, the best shortcut between their pendant trees has length
//! `depth(x) + |e(x, y)| + depth(y)` minimized over the *critical pair*
//! `(x, y)`, and augmenting P with that reduced shortcut changes the
//! weighted-path diameter exactly as augmenting the tree with `e(x, y)`
//! changes the tree diameter. Per position `i`, dominated reduced shortcuts
//! are pruned with a stack sweep, after which the diameter as a function of
//! `j` is the upper envelope of five monotone pieces; classifying which
//! piece the diametral pair of the evaluation gadget falls on steers a
//! binary search. Evaluations run on an `O(m)`-size gadget (path + shortcut
//! + one leaf per weighted position), not on the full tree.

use crate::diameter::diameter;
use crate::error::{Error, Result};
use crate::graph::{
    decompose_along_path, tree_diametral_path, Length, PathDecomposition, WeightedGraph,
};
use crate::rng::splitmix64;

/// Constant-time, symmetric, positive shortcut-length oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShortcutOracle {
    /// Every shortcut has the same length.
    Constant(Length),
    /// `ceil(num * d_T(u, v) / den)`; the tree distance is supplied by the
    /// caller, which has it in O(1) from its decomposition.
    Scaled { num: u64, den: u64 },
    /// `lo + splitmix64(seed ^ (min * 2^32 + max)) mod (hi - lo + 1)`.
    Hash { seed: u64, lo: Length, hi: Length },
    /// Dense lookup table for all pairs `u < v` of an `n`-vertex tree.
    Matrix { n: usize, table: Vec<Length> },
}

impl ShortcutOracle {
    pub fn constant(c: Length) -> Self {
        assert!(c > 0, "shortcut lengths are positive");
        ShortcutOracle::Constant(c)
    }

    pub fn scaled(num: u64, den: u64) -> Self {
        assert!(num > 0 && den > 0, "scale ratio must be positive");
        ShortcutOracle::Scaled { num, den }
    }

    pub fn hash(seed: u64, lo: Length, hi: Length) -> Self {
        assert!(lo >= 1 && lo <= hi, "hash range must be within [1, ..]");
        ShortcutOracle::Hash { seed, lo, hi }
    }

    /// Builds a matrix oracle from `(u, v, len)` entries; every unordered
    /// pair of distinct vertices below `n` must appear exactly once.
    pub fn matrix(n: usize, entries: &[(usize, usize, Length)]) -> Result<Self> {
        let mut table = vec![0 as Length; n * n];
        let mut filled = 0usize;
        for &(u, v, len) in entries {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidOracle(format!("bad matrix pair {u} {v}")));
            }
            if len == 0 {
                return Err(Error::InvalidOracle(format!(
                    "matrix length for {u} {v} must be positive"
                )));
            }
            if table[u * n + v] != 0 {
                return Err(Error::InvalidOracle(format!("duplicate pair {u} {v}")));
            }
            table[u * n + v] = len;
            table[v * n + u] = len;
            filled += 1;
        }
        if filled != n * (n - 1) / 2 {
            return Err(Error::InvalidOracle(format!(
                "matrix covers {filled} pairs, expected {}",
                n * (n - 1) / 2
            )));
        }
        Ok(ShortcutOracle::Matrix { n, table })
    }

    /// Parses an oracle spec string: `constant:C`, `scaled:NUM/DEN`,
    /// `hash:SEED:LO:HI`, or `matrix:FILE` (file lines `u v w`).
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidOracle(format!("{msg} in `{spec}`"));
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| bad("missing `kind:` prefix"))?;
        match kind {
            "constant" => {
                let c: Length = rest.parse().map_err(|_| bad("bad constant"))?;
                if c == 0 {
                    return Err(bad("constant must be positive"));
                }
                Ok(ShortcutOracle::Constant(c))
            }
            "scaled" => {
                let (num, den) = rest.split_once('/').ok_or_else(|| bad("expected NUM/DEN"))?;
                let num: u64 = num.parse().map_err(|_| bad("bad numerator"))?;
                let den: u64 = den.parse().map_err(|_| bad("bad denominator"))?;
                if num == 0 || den == 0 {
                    return Err(bad("ratio parts must be positive"));
                }
                Ok(ShortcutOracle::Scaled { num, den })
            }
            "hash" => {
                let parts: Vec<&str> = rest.split(':').collect();
                if parts.len() != 3 {
                    return Err(bad("expected SEED:LO:HI"));
                }
                let seed: u64 = parts[0].parse().map_err(|_| bad("bad seed"))?;
                let lo: Length = parts[1].parse().map_err(|_| bad("bad lo"))?;
                let hi: Length = parts[2].parse().map_err(|_| bad("bad hi"))?;
                if lo < 1 || lo > hi {
                    return Err(bad("need 1 <= lo <= hi"));
                }
                Ok(ShortcutOracle::Hash { seed, lo, hi })
            }
            "matrix" => {
                let text = std::fs::read_to_string(rest)
                    .map_err(|e| Error::InvalidOracle(format!("cannot read `{rest}`: {e}")))?;
                let mut entries = Vec::new();
                let mut max_id = 0usize;
                for line in text.lines().map(str::trim) {
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let mut it = line.split_whitespace();
                    let (u, v, w) = (it.next(), it.next(), it.next());
                    let (Some(u), Some(v), Some(w), None) = (u, v, w, it.next()) else {
                        return Err(Error::InvalidOracle(format!("bad matrix line `{line}`")));
                    };
                    let u: usize = u.parse().map_err(|_| bad("bad matrix vertex"))?;
                    let v: usize = v.parse().map_err(|_| bad("bad matrix vertex"))?;
                    let w: Length = w.parse().map_err(|_| bad("bad matrix length"))?;
                    max_id = max_id.max(u).max(v);
                    entries.push((u, v, w));
                }
                ShortcutOracle::matrix(max_id + 1, &entries)
            }
            other => Err(Error::InvalidOracle(format!("unknown kind `{other}`"))),
        }
    }

    /// Ensures the oracle can serve every pair of an `n`-vertex tree.
    pub fn check_vertex_count(&self, n: usize) -> Result<()> {
        match self {
            ShortcutOracle::Matrix { n: table_n, .. } if *table_n < n => Err(
                Error::InvalidOracle(format!("matrix covers {table_n} vertices, graph has {n}")),
            ),
            _ => Ok(()),
        }
    }

    /// Length of the shortcut `(u, v)`. `d_t` is the exact tree distance
    /// between `u` and `v`; only scaled oracles look at it.
    #[inline]
    pub fn length(&self, u: usize, v: usize, d_t: Length) -> Length {
        debug_assert_ne!(u, v);
        match *self {
            ShortcutOracle::Constant(c) => c,
            ShortcutOracle::Scaled { num, den } => (num * d_t).div_ceil(den),
            ShortcutOracle::Hash { seed, lo, hi } => {
                let (a, b) = (u.min(v) as u64, u.max(v) as u64);
                let mut key = seed ^ ((a << 32).wrapping_add(b));
                lo + splitmix64(&mut key) % (hi - lo + 1)
            }
            ShortcutOracle::Matrix { n, ref table } => table[u * n + v],
        }
    }
}

/// The best shortcut between the pendant trees of path positions `i < j`,
/// in reduced form: `length = depth(x) + |e(x, y)| + depth(y)` minimized by
/// the critical pair `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateShortcut {
    pub i: usize,
    pub j: usize,
    pub length: Length,
    pub critical: (usize, usize),
}

/// Reduced shortcuts from position `i` to every `j > i`, by exhaustive
/// enumeration over the two pendant trees. Ties pick the smallest `(x, y)`.
/// True oracle lengths are used even when a shortcut is longer than the
/// tree path it would replace.
pub fn shortcut_candidates(
    pd: &PathDecomposition,
    i: usize,
    oracle: &ShortcutOracle,
) -> Vec<CandidateShortcut> {
    let m = pd.len();
    assert!(i + 1 < m, "position {i} has no later positions");
    let mut out = Vec::with_capacity(m - i - 1);
    for j in i + 1..m {
        let span = pd.path_distance(i, j);
        let mut best: Option<(Length, usize, usize)> = None;
        for &x in &pd.members[i] {
            for &y in &pd.members[j] {
                let d_t = pd.depth[x] + span + pd.depth[y];
                let len = pd.depth[x] + oracle.length(x, y, d_t) + pd.depth[y];
                // Members are sorted, so the first strict improvement is the
                // lexicographically smallest tie.
                if best.is_none_or(|(bl, _, _)| len < bl) {
                    best = Some((len, x, y));
                }
            }
        }
        let (length, x, y) = best.expect("pendant trees are nonempty");
        out.push(CandidateShortcut {
            i,
            j,
            length,
            critical: (x, y),
        });
    }
    out
}

/// Whether `a` dominates `b` (same `i`, different `j`): reaching `b.j`
/// through `a`'s shortcut and then along the path is no longer than `b`'s
/// own shortcut. Non-strict, and applied in either index order.
pub fn shortcut_dominates(
    a: &CandidateShortcut,
    b: &CandidateShortcut,
    pd: &PathDecomposition,
) -> bool {
    assert_eq!(a.i, b.i);
    assert_ne!(a.j, b.j);
    a.length + pd.path_distance(a.j, b.j) <= b.length
}

/// Prunes dominated candidates with a stack sweep over increasing `j`.
/// Survivors keep their order, no survivor dominates another, and at least
/// one optimal shortcut for position `i` survives.
pub fn prune_shortcuts(
    cands: &[CandidateShortcut],
    pd: &PathDecomposition,
) -> Vec<CandidateShortcut> {
    let mut stack: Vec<CandidateShortcut> = Vec::new();
    for &cand in cands {
        match stack.last() {
            None => stack.push(cand),
            Some(top) => {
                if shortcut_dominates(top, &cand, pd) {
                    // cand is pruned
                } else if shortcut_dominates(&cand, top, pd) {
                    while let Some(top) = stack.last() {
                        if shortcut_dominates(&cand, top, pd) {
                            stack.pop();
                        } else {
                            break;
                        }
                    }
                    stack.push(cand);
                } else {
                    stack.push(cand);
                }
            }
        }
    }
    stack
}

/// Which of the five envelope pieces a diametral pair landed on, keyed by
/// the normalized pair position relative to `(i, j)` on the path. Pieces
/// tagged `Beta`/`Delta` grow with `j`, `Alpha`/`Gamma` shrink, `Lambda` is
/// constant; that is what makes the search below logarithmic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionTag {
    /// Pair `(first, last)`: crosses the whole path through the shortcut.
    Alpha,
    /// Pair `(first, b)` with `i < b < j`.
    Beta,
    /// Pair `(a, last)` with `i < a < last`.
    Gamma,
    /// Pair strictly inside `(i, j)`.
    Delta,
    /// Pair `(first, b)` with `b <= i`: the shortcut cannot matter.
    Lambda,
}

impl FunctionTag {
    fn increasing(self) -> bool {
        matches!(self, FunctionTag::Beta | FunctionTag::Delta)
    }
}

/// Diameter of the weighted path augmented with one reduced shortcut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalResult {
    pub value: Length,
    pub tag: FunctionTag,
    /// Normalized path positions `(a, b)`, `a < b`, achieving `value`.
    pub pair: (usize, usize),
}

/// Evaluates the augmented-path diameter for one candidate by building the
/// equivalent unicycle gadget: the path itself, the reduced shortcut, and a
/// leaf of length `w[k]` at each weighted position. The gadget's diameter
/// witness is mapped back to path positions and classified.
pub fn evaluate_delta(pd: &PathDecomposition, cand: &CandidateShortcut) -> EvalResult {
    let m = pd.len();
    debug_assert!(cand.i < cand.j && cand.j < m);

    let mut edges: Vec<(usize, usize, Length)> = Vec::with_capacity(2 * m);
    for k in 1..m {
        edges.push((k - 1, k, pd.prefix[k] - pd.prefix[k - 1]));
    }
    edges.push((cand.i, cand.j, cand.length));
    let mut leaf_anchor = Vec::new();
    for k in 0..m {
        if pd.weight[k] > 0 {
            edges.push((k, m + leaf_anchor.len(), pd.weight[k]));
            leaf_anchor.push(k);
        }
    }
    let gadget = WeightedGraph::new(m + leaf_anchor.len(), &edges);
    let result = diameter(&gadget).expect("gadget is a connected unicycle graph");

    let to_position = |g: usize| if g < m { g } else { leaf_anchor[g - m] };
    let (pa, pb) = result.pair;
    let (mut a, mut b) = (to_position(pa), to_position(pb));
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    // A cross pair always beats any within-pendant pair for m >= 2, so the
    // witness cannot collapse to a single position.
    assert_ne!(a, b, "gadget witness must span two path positions");

    // A diametral pair with a in (0, i] stays diametral with a = 0; same for
    // b in [j, m-1) against the far end. Normalizing first makes the five
    // cases below exhaustive.
    if a >= 1 && a <= cand.i {
        a = 0;
    }
    if b >= cand.j && b < m - 1 {
        b = m - 1;
    }
    let tag = if a == 0 {
        if b == m - 1 {
            FunctionTag::Alpha
        } else if b > cand.i {
            FunctionTag::Beta
        } else {
            FunctionTag::Lambda
        }
    } else {
        // After normalization a > i.
        debug_assert!(a > cand.i);
        if b == m - 1 {
            FunctionTag::Gamma
        } else {
            debug_assert!(b < cand.j);
            FunctionTag::Delta
        }
    };
    EvalResult {
        value: result.value,
        tag,
        pair: (a, b),
    }
}

/// Finds the best shortcut touching path position `i`: enumerate reduced
/// candidates, prune dominated ones, then binary-search the survivors.
///
/// At midpoint `k` the tags of survivors `k` and `k + 1` decide the next
/// interval: two increasing tags move left, two decreasing tags move right,
/// `Lambda` ends the search (nothing beats a pair the shortcut cannot
/// touch), and one tag of each slope means the minimum is at `k` or `k + 1`.
/// Ties prefer the smaller value, then the smaller `j`.
pub fn best_shortcut_for_vertex(
    pd: &PathDecomposition,
    i: usize,
    oracle: &ShortcutOracle,
) -> (CandidateShortcut, EvalResult) {
    let cands = shortcut_candidates(pd, i, oracle);
    let survivors = prune_shortcuts(&cands, pd);
    debug_assert!(!survivors.is_empty());

    let pick = |a: (CandidateShortcut, EvalResult), b: (CandidateShortcut, EvalResult)| {
        if (b.1.value, b.0.j) < (a.1.value, a.0.j) {
            b
        } else {
            a
        }
    };

    if survivors.len() <= 2 {
        return survivors
            .iter()
            .map(|c| (*c, evaluate_delta(pd, c)))
            .reduce(pick)
            .expect("nonempty survivor list");
    }

    let eval = |pos: usize| (survivors[pos], evaluate_delta(pd, &survivors[pos]));
    let (mut lo, mut hi) = (0usize, survivors.len() - 1);
    while lo < hi {
        let k = (lo + hi) / 2;
        let left = eval(k);
        let right = eval(k + 1);
        let (f, g) = (left.1.tag, right.1.tag);
        if f == FunctionTag::Lambda {
            return left;
        }
        if g == FunctionTag::Lambda {
            return right;
        }
        match (f.increasing(), g.increasing()) {
            (true, true) => hi = k,
            (false, false) => {
                // Proceed on [k, hi]. When the interval is already the pair
                // {k, k + 1}, both are evaluated: take the better directly.
                if k == lo {
                    return pick(left, right);
                }
                lo = k;
            }
            // Opposite slopes pin the minimum to one of the two midpoints.
            _ => return pick(left, right),
        }
    }
    eval(lo)
}

/// An optimal augmentation: the tree shortcut to add, its oracle length,
/// the resulting diameter, and the path positions it was found at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoatSolution {
    /// Endpoints in the tree, id-normalized.
    pub shortcut: (usize, usize),
    /// Oracle length of that shortcut.
    pub length: Length,
    /// Diameter of the augmented tree.
    pub value: Length,
    /// `(i, j)` positions on the diametral path that produced it.
    pub path_pair: (usize, usize),
}

/// Solves the augmentation problem for a tree with `n >= 2` vertices:
/// decompose along a diametral path once, find the best shortcut per path
/// position, and keep the lexicographic minimum of `(value, i, j)` so the
/// result does not depend on evaluation order.
pub fn solve_doat(tree: &WeightedGraph, oracle: &ShortcutOracle) -> Result<DoatSolution> {
    tree.validate_tree()?;
    if tree.vertex_count() < 2 {
        return Err(Error::TooSmall {
            need: 2,
            got: tree.vertex_count(),
        });
    }
    oracle.check_vertex_count(tree.vertex_count())?;

    let dp = tree_diametral_path(tree)?;
    let pd = decompose_along_path(tree, &dp.vertices);
    let (value, _, cand) = best_over_positions(&pd, oracle);

    let (x, y) = cand.critical;
    let length = cand.length - pd.depth[x] - pd.depth[y];
    Ok(DoatSolution {
        shortcut: (x.min(y), x.max(y)),
        length,
        value,
        path_pair: (cand.i, cand.j),
    })
}

fn best_at(pd: &PathDecomposition, oracle: &ShortcutOracle, i: usize) -> (Length, usize, CandidateShortcut) {
    let (cand, eval) = best_shortcut_for_vertex(pd, i, oracle);
    (eval.value, i, cand)
}

#[cfg(feature = "parallel")]
fn best_over_positions(
    pd: &PathDecomposition,
    oracle: &ShortcutOracle,
) -> (Length, usize, CandidateShortcut) {
    use rayon::prelude::*;
    (0..pd.len() - 1)
        .into_par_iter()
        .map(|i| best_at(pd, oracle, i))
        .min_by_key(|&(value, i, cand)| (value, i, cand.j))
        .expect("path has at least two vertices")
}

#[cfg(not(feature = "parallel"))]
fn best_over_positions(
    pd: &PathDecomposition,
    oracle: &ShortcutOracle,
) -> (Length, usize, CandidateShortcut) {
    (0..pd.len() - 1)
        .map(|i| best_at(pd, oracle, i))
        .min_by_key(|&(value, i, cand)| (value, i, cand.j))
        .expect("path has at least two vertices")
}
