//! Simple undirected graphs and the traversal primitives everything else is
//! built on: BFS distance layers, diameter, and deterministic shortest paths
//! into a vertex set.

use crate::error::Error;
use crate::Result;

/// Simple undirected graph on vertex ids `0..n`.
///
/// Neighbor lists are kept sorted ascending, so every traversal visits
/// vertices in increasing id order. All tie-breaking in this crate is
/// "lowest id first", which makes the deterministic operations reproducible
/// without a seed. Graphs are immutable once built; operations that change
/// the edge set return a new graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an unordered edge list.
    ///
    /// Rejects `n == 0`, self-loops, out-of-range endpoints and duplicate
    /// edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("graph must have at least one vertex"));
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// True iff one BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let dist = self.bfs_distances(&[0]);
        dist.iter().all(Option::is_some)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * (n - 1) / 2
    }

    /// Multi-source BFS distances; `None` marks unreachable vertices.
    pub(crate) fn bfs_distances(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist: Vec<Option<usize>> = vec![None; self.n()];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// BFS layers around a source set: `layer(0)` is the source itself and
/// `layer(k)` is the set of vertices at distance exactly `k` from it.
#[derive(Debug, Clone)]
pub struct LayerDecomposition {
    source: Vec<usize>,
    layers: Vec<Vec<usize>>,
    index: Vec<Option<usize>>,
}

impl LayerDecomposition {
    /// Vertices at distance exactly `k`; empty beyond the deepest layer.
    pub fn layer(&self, k: usize) -> &[usize] {
        self.layers.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Layer index of `v`, or `None` when `v` is unreachable from the source.
    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.index[v]
    }

    /// Index of the deepest non-empty layer.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    /// True when the layers cover every vertex of the graph.
    pub fn covers_all(&self) -> bool {
        self.index.iter().all(Option::is_some)
    }
}

/// BFS layers from a vertex set. The source must be non-empty and in range;
/// duplicates are tolerated and treated as a set.
pub fn distance_layers(g: &Graph, source: &[usize]) -> Result<LayerDecomposition> {
    if source.is_empty() {
        return Err(Error::invalid("source set is empty"));
    }
    let mut src: Vec<usize> = source.to_vec();
    src.sort_unstable();
    src.dedup();
    if let Some(&v) = src.iter().find(|&&v| v >= g.n()) {
        return Err(Error::invalid(format!(
            "source vertex {v} out of range for n = {}",
            g.n()
        )));
    }
    let dist = g.bfs_distances(&src);
    let depth = dist.iter().flatten().max().copied().unwrap_or(0);
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            layers[*d].push(v);
        }
    }
    // BFS pushes vertices in discovery order; keep each layer sorted by id.
    for layer in &mut layers {
        layer.sort_unstable();
    }
    Ok(LayerDecomposition {
        source: src,
        layers,
        index: dist,
    })
}

/// Eccentricity of `v`: the largest BFS distance from it.
pub fn eccentricity(g: &Graph, v: usize) -> Result<usize> {
    let dist = g.bfs_distances(&[v]);
    if dist.iter().any(Option::is_none) {
        return Err(Error::Disconnected);
    }
    Ok(dist.into_iter().flatten().max().unwrap_or(0))
}

/// Largest BFS distance over all pairs. Errors on disconnected input.
pub fn diameter(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = 0;
    for v in g.vertices() {
        best = best.max(eccentricity(g, v)?);
    }
    Ok(best)
}

/// Shortest path from `v` into the set `target`, returned as
/// `[v, ..., x0]` with `x0` the only vertex of the path in `target`.
///
/// Ties are broken by stepping to the lowest-id neighbor that is strictly
/// closer to the target, so the result is deterministic.
pub fn shortest_path_to_set(g: &Graph, v: usize, target: &[usize]) -> Result<Vec<usize>> {
    if target.is_empty() {
        return Err(Error::invalid("target set is empty"));
    }
    if v >= g.n() {
        return Err(Error::invalid(format!("vertex {v} out of range")));
    }
    if let Some(&t) = target.iter().find(|&&t| t >= g.n()) {
        return Err(Error::invalid(format!("target vertex {t} out of range")));
    }
    if target.contains(&v) {
        return Err(Error::invalid(format!("vertex {v} is already in the target set")));
    }
    let dist = g.bfs_distances(target);
    let Some(mut d) = dist[v] else {
        return Err(Error::Disconnected);
    };
    let mut path = vec![v];
    let mut cur = v;
    while d > 0 {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| dist[w] == Some(d - 1))
            .expect("BFS distance field must decrease along some neighbor");
        path.push(next);
        cur = next;
        d -= 1;
    }
    Ok(path)
}
