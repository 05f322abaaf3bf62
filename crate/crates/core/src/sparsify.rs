//! Edge-deletion sparsifier: a connected spanning subgraph that keeps the
//! minimum degree at `delta` while dropping every other removable edge.
//!
//! The split coloring strategy only needs the corollary that few vertices can
//! have very many fringe neighbors, which holds whenever the edge count stays
//! under `n(delta + 1/(delta+1))`. The greedy here does not prove that budget;
//! it records per run whether the result met it.

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

#[derive(Debug, Clone)]
pub struct SparsifyReport {
    pub result: Graph,
    pub edges_before: usize,
    pub edges_after: usize,
    /// `n * (delta + 1/(delta+1))`.
    pub edge_budget: f64,
    /// True when `edges_after < edge_budget`.
    pub within_budget: bool,
}

/// Deterministic greedy edge deletion: edges are scanned in lexicographic
/// order and removed when both endpoints keep degree above `delta` and the
/// graph stays connected, repeated until a full pass removes nothing.
pub fn sparsify(g: &Graph, delta: usize) -> Result<SparsifyReport> {
    if delta < 1 {
        return Err(Error::invalid("sparsify requires delta >= 1"));
    }
    if g.min_degree() < delta {
        return Err(Error::invalid(format!(
            "minimum degree {} is below requested delta {delta}",
            g.min_degree()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();

    let connected_without = |adj: &[std::collections::BTreeSet<usize>], u: usize, v: usize| {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == n
    };

    loop {
        let mut removed_any = false;
        let snapshot: Vec<(usize, usize)> = adj
            .iter()
            .enumerate()
            .flat_map(|(u, set)| set.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        for (u, v) in snapshot {
            if degree[u] > delta
                && degree[v] > delta
                && adj[u].contains(&v)
                && connected_without(&adj, u, v)
            {
                adj[u].remove(&v);
                adj[v].remove(&u);
                degree[u] -= 1;
                degree[v] -= 1;
                removed_any = true;
            }
        }
        if !removed_any {
            break;
        }
    }

    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, set)| set.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    let result = Graph::from_edges(n, &edges)?;
    debug_assert!(result.is_connected());
    debug_assert!(result.min_degree() >= delta);
    let edge_budget = n as f64 * (delta as f64 + 1.0 / (delta as f64 + 1.0));
    Ok(SparsifyReport {
        edges_before: g.m(),
        edges_after: result.m(),
        edge_budget,
        within_budget: (result.m() as f64) < edge_budget,
        result,
    })
}
