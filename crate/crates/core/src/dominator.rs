//! Connected ⌈δ/3⌉-strong 2-step dominating sets.
//!
//! Phase 1 grows a connected 2-step dominating core by repeatedly absorbing a
//! vertex at distance 3 together with two vertices of its shortest path back
//! to the core. Phase 2 then strengthens the fringe: while some distance-2
//! vertex has more than 2δ/3 neighbors that are themselves at distance 2, it
//! is absorbed with one path vertex. The final set `S` satisfies
//! `|S| ≤ 3n/(δ+1) − 2` and every distance-2 vertex keeps at least ⌈δ/3⌉
//! neighbors at distance 1.

use crate::error::Error;
use crate::graph::{distance_layers, shortest_path_to_set, Graph, LayerDecomposition};
use crate::Result;

#[derive(Debug, Clone)]
pub struct DominatorReport {
    /// The dominating set in insertion order.
    pub s: Vec<usize>,
    /// Number of phase-1 absorption rounds.
    pub k1: usize,
    /// Number of phase-2 strengthening rounds.
    pub k2: usize,
    /// Layers around the final set.
    pub layers: LayerDecomposition,
    /// `3n/(delta+1) − 2`.
    pub size_bound: f64,
    /// `⌈delta/3⌉`: the guaranteed number of distance-1 neighbors of every
    /// distance-2 vertex.
    pub strongness: usize,
    pub within_size_bound: bool,
    /// `|S' ∪ N¹(S')|` after initialization and after each phase-1 round.
    pub p1_coverage: Vec<usize>,
    /// `|N²(S)|` after phase 1 and after each phase-2 round.
    pub p2_fringe_sizes: Vec<usize>,
}

fn coverage(layers: &LayerDecomposition) -> usize {
    layers.layer(0).len() + layers.layer(1).len()
}

/// Phase 1: starting from `{start}`, absorb the lowest-id vertex at distance
/// 3 along with the two interior vertices of its shortest path back, until no
/// vertex is further than distance 2 away.
///
/// Returns the set in insertion order, the round count, and the trace of
/// `|S' ∪ N¹(S')|` values (one entry after initialization, one per round).
pub fn phase1_two_step_core(g: &Graph, start: usize) -> Result<(Vec<usize>, usize, Vec<usize>)> {
    if start >= g.n() {
        return Err(Error::invalid(format!("start vertex {start} out of range")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut s = vec![start];
    let mut k1 = 0;
    let mut trace = Vec::new();
    loop {
        let layers = distance_layers(g, &s)?;
        trace.push(coverage(&layers));
        let Some(&v) = layers.layer(3).first() else {
            return Ok((s, k1, trace));
        };
        let path = shortest_path_to_set(g, v, &s)?;
        debug_assert_eq!(path.len(), 4);
        // path = [v, x2, x1, x0] with x0 already in the set.
        s.push(v);
        s.push(path[2]);
        s.push(path[1]);
        k1 += 1;
    }
}

/// Phase 2: while some distance-2 vertex `v` has at least ⌊2δ/3⌋ + 1
/// neighbors at distance 2 (lowest id first), absorb `v` together with the
/// middle vertex of its shortest path into the set.
///
/// Returns the extended set, the round count, and the trace of `|N²(S)|`
/// values (one entry on entry, one per round).
pub fn phase2_strengthen(
    g: &Graph,
    s_core: &[usize],
    delta: usize,
) -> Result<(Vec<usize>, usize, Vec<usize>)> {
    if s_core.is_empty() {
        return Err(Error::invalid("core set is empty"));
    }
    let entry_layers = distance_layers(g, s_core)?;
    if entry_layers.depth() > 2 || !entry_layers.covers_all() {
        return Err(Error::invalid(
            "phase 2 requires a 2-step dominating core set",
        ));
    }
    if !induced_connected(g, s_core) {
        return Err(Error::invalid("phase 2 requires a connected core set"));
    }
    let threshold = 2 * delta / 3 + 1;
    let mut s = s_core.to_vec();
    let mut k2 = 0;
    let mut trace = Vec::new();
    loop {
        let layers = distance_layers(g, &s)?;
        trace.push(layers.layer(2).len());
        let crowded = layers.layer(2).iter().copied().find(|&v| {
            let fringe_neighbors = g
                .neighbors(v)
                .iter()
                .filter(|&&w| layers.layer_of(w) == Some(2))
                .count();
            fringe_neighbors >= threshold
        });
        let Some(v) = crowded else {
            return Ok((s, k2, trace));
        };
        let path = shortest_path_to_set(g, v, &s)?;
        debug_assert_eq!(path.len(), 3);
        // path = [v, y1, y0] with y0 already in the set.
        s.push(v);
        s.push(path[1]);
        k2 += 1;
    }
}

/// Runs both phases and checks the size bound `3n/(δ+1) − 2`.
pub fn build_strong_dominator(g: &Graph, delta: usize, start: usize) -> Result<DominatorReport> {
    if delta < 2 {
        return Err(Error::invalid(format!(
            "strong dominator requires delta >= 2, got {delta}"
        )));
    }
    if g.min_degree() < delta {
        return Err(Error::invalid(format!(
            "minimum degree {} is below delta {delta}",
            g.min_degree()
        )));
    }
    let (core, k1, p1_coverage) = phase1_two_step_core(g, start)?;
    let (s, k2, p2_fringe_sizes) = phase2_strengthen(g, &core, delta)?;
    debug_assert_eq!(s.len(), 3 * k1 + 1 + 2 * k2);
    let layers = distance_layers(g, &s)?;
    let n = g.n() as f64;
    let size_bound = 3.0 * n / (delta as f64 + 1.0) - 2.0;
    let within_size_bound = (s.len() as f64) <= size_bound + 1e-9;
    let report = DominatorReport {
        s,
        k1,
        k2,
        layers,
        size_bound,
        strongness: delta.div_ceil(3),
        within_size_bound,
        p1_coverage,
        p2_fringe_sizes,
    };
    debug_assert!(verify_strong_dominator(g, &report.s, delta).is_empty());
    Ok(report)
}

fn induced_connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([s[0]]);
    seen[s[0]] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if in_s[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == s.iter().collect::<std::collections::BTreeSet<_>>().len()
}

/// One check a candidate set can fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DominatorViolation {
    /// The subgraph induced by the set is not connected (or the set is empty).
    InducedDisconnected,
    /// `vertex` lies at distance greater than 2 from the set.
    NotTwoStepDominated { vertex: usize },
    /// A distance-2 vertex with fewer distance-1 neighbors than required.
    WeakFringeVertex {
        vertex: usize,
        have: usize,
        need: usize,
    },
}

impl std::fmt::Display for DominatorViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DominatorViolation::InducedDisconnected => {
                write!(f, "induced subgraph on the set is not connected")
            }
            DominatorViolation::NotTwoStepDominated { vertex } => {
                write!(f, "vertex {vertex} is more than 2 steps from the set")
            }
            DominatorViolation::WeakFringeVertex { vertex, have, need } => write!(
                f,
                "distance-2 vertex {vertex} has {have} distance-1 neighbors, needs {need}"
            ),
        }
    }
}

/// Checks all three defining properties; an empty list means `s` is a
/// connected ⌈δ/3⌉-strong 2-step dominating set.
pub fn verify_strong_dominator(g: &Graph, s: &[usize], delta: usize) -> Vec<DominatorViolation> {
    let mut violations = Vec::new();
    if s.is_empty() || s.iter().any(|&v| v >= g.n()) {
        violations.push(DominatorViolation::InducedDisconnected);
        return violations;
    }
    if !induced_connected(g, s) {
        violations.push(DominatorViolation::InducedDisconnected);
    }
    let layers = match distance_layers(g, s) {
        Ok(l) => l,
        Err(_) => return violations,
    };
    for v in g.vertices() {
        if layers.layer_of(v).map(|k| k > 2).unwrap_or(true) {
            violations.push(DominatorViolation::NotTwoStepDominated { vertex: v });
        }
    }
    let need = delta.div_ceil(3);
    for &v in layers.layer(2) {
        let have = g
            .neighbors(v)
            .iter()
            .filter(|&&w| layers.layer_of(w) == Some(1))
            .count();
        if have < need {
            violations.push(DominatorViolation::WeakFringeVertex {
                vertex: v,
                have,
                need,
            });
        }
    }
    violations
}
