//! Vertex-weighted diametral pair on a cycle.
//!
//! Every cycle vertex carries a weight (the depth of its pendant tree) and
//! the goal is the pair maximizing `w(u) + d_C(u, v) + w(v)`. A vertex whose
//! weight exceeds another's weight plus their cycle distance *dominates* it;
//! dominated vertices cannot appear in a maximizing pair, so a stack sweep
//! prunes them in linear time. Among the survivors the objective is monotone
//! along each half-cycle, which a two-pointer sweep exploits.

use crate::graph::{CycleDecomposition, Length};
use std::collections::VecDeque;

/// A cycle with vertex weights: arc lengths, clockwise prefix sums, and the
/// per-vertex weights. Positions are 0-based along the canonical orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCycle {
    pub arc_len: Vec<Length>,
    pub weight: Vec<Length>,
    /// `prefix[k]` = clockwise distance from position 0 to position `k`.
    pub prefix: Vec<Length>,
    pub total: Length,
}

impl WeightedCycle {
    pub fn new(arc_len: Vec<Length>, weight: Vec<Length>) -> Self {
        assert_eq!(arc_len.len(), weight.len());
        assert!(arc_len.len() >= 2);
        assert!(arc_len.iter().all(|&a| a > 0));
        let mut prefix = Vec::with_capacity(arc_len.len());
        let mut acc = 0;
        for &a in &arc_len {
            prefix.push(acc);
            acc += a;
        }
        WeightedCycle {
            arc_len,
            weight,
            prefix,
            total: acc,
        }
    }

    pub fn len(&self) -> usize {
        self.arc_len.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arc_len.is_empty()
    }

    /// Clockwise distance from `i` to `j` (0 when `i == j`).
    #[inline]
    fn clockwise(&self, i: usize, j: usize) -> Length {
        if self.prefix[j] >= self.prefix[i] {
            self.prefix[j] - self.prefix[i]
        } else {
            self.total - (self.prefix[i] - self.prefix[j])
        }
    }

    /// Cycle distance: the shorter way around.
    #[inline]
    pub fn distance(&self, i: usize, j: usize) -> Length {
        let cw = self.clockwise(i, j);
        cw.min(self.total - cw)
    }

    /// Whether `j` lies in the counterclockwise half-set of `i`: the
    /// counterclockwise walk from `i` to `j` is at most half the cycle
    /// (ties inclusive, kept in integers as `2 * len <= total`).
    #[inline]
    pub fn in_ccw_half(&self, i: usize, j: usize) -> bool {
        assert_ne!(i, j, "a vertex is in neither of its own half-sets");
        let ccw = self.total - self.clockwise(i, j);
        2 * ccw <= self.total
    }

    /// Complement of [`Self::in_ccw_half`] for distinct positions.
    #[inline]
    pub fn in_cw_half(&self, i: usize, j: usize) -> bool {
        !self.in_ccw_half(i, j)
    }

    /// Whether `i` dominates `j`: `w(i) > w(j) + d_C(i, j)`, strictly.
    /// Equality means neither dominates.
    #[inline]
    pub fn dominates(&self, i: usize, j: usize) -> bool {
        assert_ne!(i, j);
        self.weight[i] > self.weight[j] + self.distance(i, j)
    }

    fn mutually_undominated(&self, i: usize, j: usize) -> bool {
        !self.dominates(i, j) && !self.dominates(j, i)
    }
}

impl From<&CycleDecomposition> for WeightedCycle {
    fn from(d: &CycleDecomposition) -> Self {
        WeightedCycle {
            arc_len: d.arc_len.clone(),
            weight: d.weight.clone(),
            prefix: d.prefix.clone(),
            total: d.total,
        }
    }
}

/// Pruning stack with access to both ends: the second pruning stage removes
/// elements from the bottom and reprocesses them on top.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurvivorSet {
    items: VecDeque<usize>,
}

impl SurvivorSet {
    fn new() -> Self {
        Self::default()
    }

    fn push_top(&mut self, v: usize) {
        self.items.push_back(v);
    }

    fn pop_top(&mut self) -> Option<usize> {
        self.items.pop_back()
    }

    fn peek_top(&self) -> Option<usize> {
        self.items.back().copied()
    }

    fn remove_bottom(&mut self) -> Option<usize> {
        self.items.pop_front()
    }

    fn peek_bottom(&self) -> Option<usize> {
        self.items.front().copied()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.items.contains(&v)
    }

    /// Surviving positions in ascending order. After pruning, the deque is
    /// two ascending runs (the wrap stage re-pushes small positions on top),
    /// so a rotation restores sorted order in linear time.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.items.iter().copied().collect();
        if let Some(p) = v.windows(2).position(|w| w[0] > w[1]) {
            v.rotate_left(p + 1);
        }
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        v
    }
}

fn process_vertex(c: &WeightedCycle, i: usize, stack: &mut SurvivorSet) {
    let top = match stack.peek_top() {
        None => {
            stack.push_top(i);
            return;
        }
        Some(t) => t,
    };
    // A top outside the half-set is out of comparison reach; a mutually
    // undominated one stays as well.
    if !c.in_ccw_half(i, top) || c.mutually_undominated(i, top) {
        stack.push_top(i);
    } else if c.dominates(i, top) {
        stack.pop_top();
        while let Some(t) = stack.peek_top() {
            if c.in_ccw_half(i, t) && c.dominates(i, t) {
                stack.pop_top();
            } else {
                break;
            }
        }
        stack.push_top(i);
    }
    // Otherwise the top dominates `i` and `i` is dropped.
}

/// Removes every dominated position from the cycle.
///
/// Stage one scans positions `0..m` in clockwise order against a stack whose
/// checks only look within half-cycles. Stage two reprocesses bottom elements
/// so that pairs straddling the wrap-around arc also get compared: the bottom
/// is removed and reprocessed while it is position 0 or lies in the clockwise
/// half-set of position 0, each position at most once.
///
/// The result is nonempty, no two survivors dominate each other, and every
/// pruned position is dominated by some survivor.
pub fn prune_cycle(c: &WeightedCycle) -> SurvivorSet {
    let m = c.len();
    let mut stack = SurvivorSet::new();
    for i in 0..m {
        process_vertex(c, i, &mut stack);
    }
    let mut reprocessed = vec![false; m];
    while let Some(bottom) = stack.peek_bottom() {
        if reprocessed[bottom] || (bottom != 0 && !c.in_cw_half(0, bottom)) {
            break;
        }
        reprocessed[bottom] = true;
        stack.remove_bottom();
        process_vertex(c, bottom, &mut stack);
    }
    debug_assert!(!stack.is_empty());
    stack
}

/// Finds a pair of positions maximizing `w(i) + d_C(i, j) + w(j)` given the
/// survivors of [`prune_cycle`]. Returns `(i, j, value)` with `i < j`; ties
/// resolve to the lexicographically smallest pair among the candidates.
/// The value equals the maximum over *all* position pairs.
pub fn weighted_diametral_pair(c: &WeightedCycle, survivors: &SurvivorSet) -> (usize, usize, Length) {
    let m = c.len();
    assert!(m >= 2);
    if m == 2 {
        return (0, 1, c.weight[0] + c.distance(0, 1) + c.weight[1]);
    }

    let mut best: Option<(Length, usize, usize)> = None;
    let mut consider = |i: usize, j: usize, value: Length| {
        let pair = (i.min(j), i.max(j));
        let better = match best {
            None => true,
            Some((bv, bi, bj)) => value > bv || (value == bv && pair < (bi, bj)),
        };
        if better {
            best = Some((value, pair.0, pair.1));
        }
    };

    if survivors.len() == 1 {
        // Any maximizing pair must contain the lone survivor.
        let v = survivors.peek_top().expect("nonempty");
        for u in 0..m {
            if u != v {
                consider(u, v, c.weight[u] + c.distance(u, v) + c.weight[v]);
            }
        }
    } else {
        // For each survivor u, the objective grows with cycle distance along
        // either half, so only the farthest survivor per half matters. Both
        // farthest pointers advance monotonically in clockwise order.
        let s = survivors.sorted();
        let t = s.len();
        let mut q = 1usize;
        for p in 0..t {
            let u = s[p];
            q = q.max(p + 1);
            // Advance to the first survivor at or beyond the half-way point.
            while q < p + t && 2 * c.clockwise(u, s[q % t]) < c.total {
                q += 1;
            }
            if q > p + 1 {
                let v = s[(q - 1) % t]; // farthest in the clockwise half-set
                consider(u, v, c.weight[u] + c.distance(u, v) + c.weight[v]);
            }
            if q < p + t {
                let v = s[q % t]; // farthest in the counterclockwise half-set
                consider(u, v, c.weight[u] + c.distance(u, v) + c.weight[v]);
            }
        }
    }
    let (value, i, j) = best.expect("at least one candidate pair");
    (i, j, value)
}
