//! Graph representation, validation, cycle extraction, and the pendant-tree
//! decompositions behind the diameter and augmentation solvers.
//!
//! Edge lengths are exact positive integers; every comparison in this crate
//! is exact, with no floating-point tolerances anywhere.

use crate::error::{Error, Result};

/// Exact edge/path length. Inputs are bounded by `10^9` and vertex counts by
/// `10^7`, so `u64` accumulators cannot overflow on valid instances.
pub type Length = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub len: Length,
}

/// One adjacency record: the neighbor, the connecting edge's index, and
/// that edge's length (kept inline so traversals touch one array).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Adjacency {
    to: u32,
    edge: u32,
    pub len: Length,
}

impl Adjacency {
    #[inline]
    pub fn to(&self) -> usize {
        self.to as usize
    }

    #[inline]
    pub fn edge(&self) -> usize {
        self.edge as usize
    }
}

/// Undirected graph with positive integer edge lengths, adjacency stored in
/// compressed sparse rows.
///
/// Parallel edges are permitted: a shortcut may duplicate an existing tree
/// edge, which creates a two-vertex cycle. Self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    adj: Vec<Adjacency>,
}

impl WeightedGraph {
    /// Builds a graph from an edge list. Panics on malformed programmatic
    /// input; use [`parse_graph`] for untrusted text.
    pub fn new(n: usize, edges: &[(usize, usize, Length)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, v, len) in edges {
            assert!(u < n && v < n && u != v && len > 0, "invalid edge");
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let filler = Adjacency { to: 0, edge: 0, len: 0 };
        let mut adj = vec![filler; 2 * edges.len()];
        let mut edge_list = Vec::with_capacity(edges.len());
        for (idx, &(u, v, len)) in edges.iter().enumerate() {
            edge_list.push(Edge { u, v, len });
            adj[cursor[u]] = Adjacency { to: v as u32, edge: idx as u32, len };
            cursor[u] += 1;
            adj[cursor[v]] = Adjacency { to: u as u32, edge: idx as u32, len };
            cursor[v] += 1;
        }
        WeightedGraph {
            n,
            edges: edge_list,
            offsets,
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> Edge {
        self.edges[idx]
    }

    /// Adjacency records of `u`, in edge-insertion order.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[Adjacency] {
        &self.adj[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for a in self.neighbors(u) {
                let v = a.to();
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Checks the tree shape: connected with exactly `n - 1` edges.
    pub fn validate_tree(&self) -> Result<()> {
        if self.n == 0 || self.edges.len() != self.n - 1 {
            return Err(Error::NotATree {
                n: self.n,
                edges: self.edges.len(),
            });
        }
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(())
    }
}

/// Parses the graph file format: a header line `n m`, then `m` lines
/// `u v w` with 0-based ids and positive integer lengths. Lines whose first
/// non-space character is `#` are comments; blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Malformed {
        line: 0,
        msg: "empty input".into(),
    })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), line, "vertex count")?;
    let m: usize = parse_field(it.next(), line, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Malformed {
            line,
            msg: "expected exactly two header fields".into(),
        });
    }

    let mut edges: Vec<(usize, usize, Length)> = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.next().ok_or(Error::Malformed {
            line: 0,
            msg: format!("expected {m} edge lines"),
        })?;
        let mut it = text.split_whitespace();
        let u: usize = parse_field(it.next(), line, "vertex id")?;
        let v: usize = parse_field(it.next(), line, "vertex id")?;
        let w_text = it.next().ok_or(Error::Malformed {
            line,
            msg: "missing edge length".into(),
        })?;
        if it.next().is_some() {
            return Err(Error::Malformed {
                line,
                msg: "expected exactly three edge fields".into(),
            });
        }
        let w: i128 = w_text.parse().map_err(|_| Error::Malformed {
            line,
            msg: format!("bad edge length `{w_text}`"),
        })?;
        if w <= 0 {
            return Err(Error::NonpositiveLength { line });
        }
        let w = u64::try_from(w).map_err(|_| Error::Malformed {
            line,
            msg: format!("edge length `{w_text}` too large"),
        })?;
        for id in [u, v] {
            if id >= n {
                return Err(Error::VertexOutOfRange { line, id, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        edges.push((u, v, w));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Malformed {
            line,
            msg: "trailing data after edge list".into(),
        });
    }
    Ok(WeightedGraph::new(n, &edges))
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::Malformed {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Malformed {
        line,
        msg: format!("bad {what} `{tok}`"),
    })
}

/// Renders a graph in the canonical file format, preserving edge order.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.len));
    }
    out
}

/// Finds the unique cycle of a connected unicycle graph (`n` edges).
///
/// Degree-1 vertices are peeled iteratively; the remainder is the cycle. The
/// returned order is canonical: it starts at the smallest-id cycle vertex and
/// its second element is that vertex's smaller-id cycle neighbor. A length-2
/// cycle arises only from parallel edges.
pub fn find_cycle(g: &WeightedGraph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.edge_count() + 1 == n {
        return Err(Error::NoCycle);
    }
    if g.edge_count() != n {
        return Err(Error::NotUnicycle {
            n,
            edges: g.edge_count(),
        });
    }

    let mut degree: Vec<usize> = (0..n).map(|u| g.neighbors(u).len()).collect();
    let mut removed = vec![false; n];
    let mut queue: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    while let Some(u) = queue.pop() {
        removed[u] = true;
        for a in g.neighbors(u) {
            let v = a.to();
            if !removed[v] {
                degree[v] -= 1;
                if degree[v] == 1 {
                    queue.push(v);
                }
            }
        }
    }

    let start = match (0..n).find(|&u| !removed[u]) {
        Some(u) => u,
        None => return Err(Error::NoCycle),
    };
    // Connected + n edges guarantees the remainder is a single cycle.
    debug_assert!((0..n).filter(|&u| !removed[u]).all(|u| {
        g.neighbors(u).iter().filter(|a| !removed[a.to()]).count() == 2
    }));

    // Walk the cycle; the first step picks the smaller-id neighbor (then the
    // smaller edge index, which disambiguates parallel edges).
    let first = g
        .neighbors(start)
        .iter()
        .filter(|a| !removed[a.to()])
        .min_by_key(|a| (a.to(), a.edge()))
        .expect("cycle vertex has two cycle neighbors");

    let mut order = vec![start];
    let mut cur = first.to();
    let mut via = first.edge();
    while cur != start {
        order.push(cur);
        let step = g
            .neighbors(cur)
            .iter()
            .find(|a| !removed[a.to()] && a.edge() != via)
            .expect("cycle vertex has two distinct cycle edges");
        cur = step.to();
        via = step.edge();
    }
    Ok(order)
}

/// The unique cycle of a unicycle graph together with per-vertex pendant-tree
/// data: removing the cycle edges splits the graph into one tree per cycle
/// vertex, and the diameter computation only needs each tree's depth profile.
#[derive(Debug, Clone)]
pub struct CycleDecomposition {
    /// Cycle vertex ids in canonical traversal order.
    pub cycle: Vec<usize>,
    /// `arc_len[k]` is the length of the cycle edge `cycle[k] -> cycle[k+1]`
    /// (wrapping at the end).
    pub arc_len: Vec<Length>,
    /// Edge ids matching `arc_len`.
    pub cycle_edges: Vec<usize>,
    /// `prefix[k]` is the clockwise distance from `cycle[0]` to `cycle[k]`.
    pub prefix: Vec<Length>,
    /// Total cycle length.
    pub total: Length,
    /// `anchor[u]` is the cycle position whose pendant tree contains `u`.
    pub anchor: Vec<usize>,
    /// `depth[u]` is the distance from `u` to its anchor within the tree.
    pub depth: Vec<Length>,
    /// `weight[k]` is the maximum depth within the pendant tree at `k`.
    pub weight: Vec<Length>,
    /// `far[k]` is the smallest-id vertex attaining `weight[k]`.
    pub far: Vec<usize>,
}

impl CycleDecomposition {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

/// Decomposes a unicycle graph around its cycle (as returned by
/// [`find_cycle`]): arc lengths, clockwise prefix sums, and the pendant-tree
/// anchor/depth/weight tables, with `far` ties broken by smallest vertex id.
pub fn decompose_unicycle(g: &WeightedGraph, cycle: &[usize]) -> CycleDecomposition {
    let n = g.vertex_count();
    let m = cycle.len();
    assert!(m >= 2, "cycle must have at least two vertices");

    let mut on_cycle = vec![false; n];
    for &v in cycle {
        on_cycle[v] = true;
    }

    let mut cycle_edges = Vec::with_capacity(m);
    if m == 2 {
        // Parallel edges; take them in edge-index order for a canonical
        // orientation. Distances are direction-independent.
        let (a, b) = (cycle[0], cycle[1]);
        let mut ids: Vec<usize> = g
            .neighbors(a)
            .iter()
            .filter(|adj| adj.to() == b)
            .map(|adj| adj.edge())
            .collect();
        ids.sort_unstable();
        assert_eq!(ids.len(), 2, "length-2 cycle needs two parallel edges");
        cycle_edges.extend(ids);
    } else {
        for k in 0..m {
            let (a, b) = (cycle[k], cycle[(k + 1) % m]);
            let e = g
                .neighbors(a)
                .iter()
                .find(|adj| adj.to() == b)
                .expect("consecutive cycle vertices are adjacent")
                .edge();
            cycle_edges.push(e);
        }
    }

    let arc_len: Vec<Length> = cycle_edges.iter().map(|&e| g.edge(e).len).collect();
    let mut prefix = Vec::with_capacity(m);
    let mut acc = 0;
    for &arc in &arc_len {
        prefix.push(acc);
        acc += arc;
    }
    let total = acc;

    // An edge between two cycle vertices is always a cycle edge (a chord
    // would be a second cycle), so the pendant walks can skip cycle edges by
    // skipping on-cycle endpoints.
    let mut anchor = vec![usize::MAX; n];
    let mut depth = vec![0 as Length; n];
    let mut weight = vec![0 as Length; m];
    let mut far = vec![0usize; m];
    let mut stack = Vec::new();
    for (k, &root) in cycle.iter().enumerate() {
        anchor[root] = k;
        let mut best = (0 as Length, root);
        stack.push(root);
        while let Some(u) = stack.pop() {
            for a in g.neighbors(u) {
                let v = a.to();
                if on_cycle[v] || anchor[v] != usize::MAX {
                    continue;
                }
                anchor[v] = k;
                depth[v] = depth[u] + a.len;
                if depth[v] > best.0 || (depth[v] == best.0 && v < best.1) {
                    best = (depth[v], v);
                }
                stack.push(v);
            }
        }
        weight[k] = best.0;
        far[k] = best.1;
    }
    debug_assert!(anchor.iter().all(|&a| a != usize::MAX));

    CycleDecomposition {
        cycle: cycle.to_vec(),
        arc_len,
        cycle_edges,
        prefix,
        total,
        anchor,
        depth,
        weight,
        far,
    }
}

/// A diametral path of a tree: the endpoints (id-normalized), the path
/// vertices from the smaller endpoint to the larger, and the tree diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiametralPath {
    pub length: Length,
    pub endpoints: (usize, usize),
    pub vertices: Vec<usize>,
}

/// Computes a diametral path by double sweep: the farthest vertex from
/// vertex 0, then the farthest vertex from that one, ties to the smallest id.
pub fn tree_diametral_path(t: &WeightedGraph) -> Result<DiametralPath> {
    t.validate_tree()?;
    if t.vertex_count() == 1 {
        return Ok(DiametralPath {
            length: 0,
            endpoints: (0, 0),
            vertices: vec![0],
        });
    }
    let (a, _, _) = farthest_in_tree(t, 0);
    let (b, length, parent) = farthest_in_tree(t, a);

    let mut chain = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        chain.push(cur);
    }
    // chain runs b -> a; orient from the smaller endpoint id.
    if a < b {
        chain.reverse();
    }
    Ok(DiametralPath {
        length,
        endpoints: (a.min(b), a.max(b)),
        vertices: chain,
    })
}

/// Farthest vertex from `src` in a tree plus its distance and parent links.
/// Ties resolve to the smallest vertex id.
fn farthest_in_tree(t: &WeightedGraph, src: usize) -> (usize, Length, Vec<usize>) {
    let n = t.vertex_count();
    let mut dist = vec![0 as Length; n];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut stack = vec![src];
    seen[src] = true;
    parent[src] = src;
    while let Some(u) = stack.pop() {
        for a in t.neighbors(u) {
            let v = a.to();
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                dist[v] = dist[u] + a.len;
                stack.push(v);
            }
        }
    }
    let mut best = src;
    for u in 0..n {
        if dist[u] > dist[best] {
            best = u;
        }
    }
    (best, dist[best], parent)
}

/// Pendant-tree decomposition of a tree along one of its diametral paths.
/// Same anchor/depth/weight semantics as [`CycleDecomposition`], but over the
/// path, plus the member list of every pendant tree.
#[derive(Debug, Clone)]
pub struct PathDecomposition {
    /// Path vertex ids in order.
    pub path: Vec<usize>,
    /// `prefix[k]` is the path distance from `path[0]` to `path[k]`.
    pub prefix: Vec<Length>,
    /// `anchor[u]` is the path position whose pendant tree contains `u`.
    pub anchor: Vec<usize>,
    pub depth: Vec<Length>,
    pub weight: Vec<Length>,
    pub far: Vec<usize>,
    /// Sorted vertex ids of each pendant tree; sizes sum to `n`.
    pub members: Vec<Vec<usize>>,
}

impl PathDecomposition {
    /// Number of path vertices.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// Exact distance between two path positions.
    pub fn path_distance(&self, a: usize, b: usize) -> Length {
        if a <= b {
            self.prefix[b] - self.prefix[a]
        } else {
            self.prefix[a] - self.prefix[b]
        }
    }
}

/// Decomposes a tree along a diametral path (anchors, depths, weights,
/// members). In debug builds, asserts the depth bound that a diametral path
/// forces: no pendant vertex is deeper than its anchor's distance to either
/// path end.
pub fn decompose_along_path(t: &WeightedGraph, path: &[usize]) -> PathDecomposition {
    let n = t.vertex_count();
    let m = path.len();
    assert!(m >= 1 && m <= n);

    let mut on_path = vec![false; n];
    for &v in path {
        on_path[v] = true;
    }

    let mut prefix = Vec::with_capacity(m);
    let mut acc = 0;
    prefix.push(0);
    for w in path.windows(2) {
        let step = t
            .neighbors(w[0])
            .iter()
            .find(|adj| adj.to() == w[1])
            .expect("consecutive path vertices are adjacent");
        acc += step.len;
        prefix.push(acc);
    }

    let mut anchor = vec![usize::MAX; n];
    let mut depth = vec![0 as Length; n];
    let mut weight = vec![0 as Length; m];
    let mut far = vec![0usize; m];
    let mut members = vec![Vec::new(); m];
    let mut stack = Vec::new();
    for (k, &root) in path.iter().enumerate() {
        anchor[root] = k;
        members[k].push(root);
        let mut best = (0 as Length, root);
        stack.push(root);
        while let Some(u) = stack.pop() {
            for a in t.neighbors(u) {
                let v = a.to();
                // Non-path edges never join two path vertices (the tree has
                // no cycles), so skipping path vertices skips path edges.
                if on_path[v] || anchor[v] != usize::MAX {
                    continue;
                }
                anchor[v] = k;
                depth[v] = depth[u] + a.len;
                members[k].push(v);
                if depth[v] > best.0 || (depth[v] == best.0 && v < best.1) {
                    best = (depth[v], v);
                }
                stack.push(v);
            }
        }
        weight[k] = best.0;
        far[k] = best.1;
        members[k].sort_unstable();
    }
    debug_assert!(anchor.iter().all(|&a| a != usize::MAX));
    debug_assert!((0..n).all(|u| {
        let k = anchor[u];
        depth[u] <= prefix[k].min(acc - prefix[k])
    }));

    PathDecomposition {
        path: path.to_vec(),
        prefix,
        anchor,
        depth,
        weight,
        far,
        members,
    }
}
