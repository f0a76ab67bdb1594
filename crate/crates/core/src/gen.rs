//! Seeded instance generators. The same spec always yields a byte-identical
//! graph, which the golden-file and determinism tests rely on.

use crate::error::{Error, Result};
use crate::graph::{Length, WeightedGraph};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeShape {
    /// Vertex `k` attaches to a uniform vertex in `[0, k)`.
    Random,
    Path,
    Star,
    /// A spine of `ceil(n/2)` path vertices; the rest attach round-robin.
    Caterpillar,
    /// Vertex `k` attaches to `(k - 1) / 2`.
    Binary,
}

impl std::str::FromStr for TreeShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(TreeShape::Random),
            "path" => Ok(TreeShape::Path),
            "star" => Ok(TreeShape::Star),
            "caterpillar" => Ok(TreeShape::Caterpillar),
            "binary" => Ok(TreeShape::Binary),
            other => Err(Error::InvalidGenSpec(format!("unknown shape `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    pub shape: TreeShape,
    /// Inclusive edge-length range.
    pub len_range: (Length, Length),
    /// Cycle size for unicycle instances; ignored for trees.
    pub cycle_len: usize,
}

impl GenSpec {
    pub fn new(n: usize, seed: u64) -> Self {
        GenSpec {
            n,
            seed,
            shape: TreeShape::Random,
            len_range: (1, 100),
            cycle_len: 3,
        }
    }

    pub fn shape(mut self, shape: TreeShape) -> Self {
        self.shape = shape;
        self
    }

    pub fn lengths(mut self, lo: Length, hi: Length) -> Self {
        self.len_range = (lo, hi);
        self
    }

    pub fn cycle(mut self, m: usize) -> Self {
        self.cycle_len = m;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidGenSpec("n must be at least 1".into()));
        }
        let (lo, hi) = self.len_range;
        if lo < 1 || lo > hi {
            return Err(Error::InvalidGenSpec(format!(
                "bad length range [{lo}, {hi}]"
            )));
        }
        Ok(())
    }
}

/// Generates a tree with `n - 1` edges. Random shapes draw the parent and
/// then the length per vertex; deterministic skeletons draw lengths only.
pub fn random_tree(spec: &GenSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    let (lo, hi) = spec.len_range;
    let mut rng = SplitMix64::new(spec.seed);
    let mut edges = Vec::with_capacity(spec.n.saturating_sub(1));
    for k in 1..spec.n {
        let parent = match spec.shape {
            TreeShape::Random => rng.below(k),
            TreeShape::Path => k - 1,
            TreeShape::Star => 0,
            TreeShape::Caterpillar => {
                let spine = spec.n.div_ceil(2);
                if k < spine {
                    k - 1
                } else {
                    (k - spine) % spine
                }
            }
            TreeShape::Binary => (k - 1) / 2,
        };
        edges.push((parent, k, rng.uniform(lo, hi)));
    }
    Ok(WeightedGraph::new(spec.n, &edges))
}

/// Generates a unicycle graph: cycle `0..m`, each remaining vertex attached
/// to a uniform earlier vertex. Requires `3 <= m <= n`.
pub fn random_unicycle(spec: &GenSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    let m = spec.cycle_len;
    if m < 3 || m > spec.n {
        return Err(Error::InvalidGenSpec(format!(
            "cycle size {m} out of range [3, {}]",
            spec.n
        )));
    }
    let (lo, hi) = spec.len_range;
    let mut rng = SplitMix64::new(spec.seed);
    let mut edges = Vec::with_capacity(spec.n);
    for k in 0..m {
        edges.push((k, (k + 1) % m, rng.uniform(lo, hi)));
    }
    for k in m..spec.n {
        let anchor = rng.below(k);
        edges.push((anchor, k, rng.uniform(lo, hi)));
    }
    Ok(WeightedGraph::new(spec.n, &edges))
}
