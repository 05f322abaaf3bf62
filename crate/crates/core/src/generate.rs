//! Graph generators: the clique-chain family that witnesses how tight the
//! minimum-degree palette bounds are, seeded random graphs with prescribed
//! minimum degree, and classic fixtures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// Parameters of the clique chain: `m` interior blocks of size `delta + 1`
/// between two end blocks of size `delta + 2`, giving
/// `n = (m + 2)(delta + 1) + 2` vertices, minimum degree `delta`, and
/// diameter `(3n − delta − 7) / (delta + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaroChainSpec {
    pub delta: usize,
    pub m: usize,
}

impl CaroChainSpec {
    pub fn new(delta: usize, m: usize) -> Result<Self> {
        if delta < 3 {
            return Err(Error::invalid(format!(
                "clique chain requires delta >= 3, got {delta}"
            )));
        }
        Ok(CaroChainSpec { delta, m })
    }

    pub fn n(&self) -> usize {
        (self.m + 2) * (self.delta + 1) + 2
    }

    pub fn expected_diameter(&self) -> usize {
        (3 * self.n() - self.delta - 7) / (self.delta + 1)
    }
}

/// Chain of cliques: blocks `X_0 .. X_{m+1}` laid out left to right, where
/// the two end blocks are `K_{delta+2}` and the `m` interior blocks are
/// `K_{delta+1}`. Slot 2 of each block is bridged to slot 1 of the next, and
/// the slot-1/slot-2 edge inside every block is deleted, which forces any
/// crossing of a block to use a third vertex. Vertices are numbered block by
/// block in slot order.
pub fn caro_chain(delta: usize, m: usize) -> Result<Graph> {
    let spec = CaroChainSpec::new(delta, m)?;
    let n = spec.n();
    let block_size = |i: usize| {
        if i == 0 || i == m + 1 {
            delta + 2
        } else {
            delta + 1
        }
    };
    let mut base = vec![0usize; m + 3];
    for i in 0..=m + 1 {
        base[i + 1] = base[i] + block_size(i);
    }
    debug_assert_eq!(base[m + 2], n);

    // Slot j of block i (1-based slots) is vertex base[i] + j - 1.
    let id = |i: usize, j: usize| base[i] + j - 1;

    let mut edges = Vec::new();
    for i in 0..=m + 1 {
        let size = block_size(i);
        for a in 1..=size {
            for b in (a + 1)..=size {
                // The slot-1/slot-2 edge is the one deleted in every block.
                if a == 1 && b == 2 {
                    continue;
                }
                edges.push((id(i, a), id(i, b)));
            }
        }
    }
    for i in 0..=m {
        edges.push((id(i, 2), id(i + 1, 1)));
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert_eq!(g.min_degree(), delta);
    Ok(g)
}

/// Seeded random connected graph with minimum degree exactly `delta`: a
/// random Hamiltonian cycle for connectivity, then random fill edges incident
/// to degree-deficient vertices until the minimum degree is reached.
pub fn random_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if delta < 2 {
        return Err(Error::invalid(format!(
            "random_min_degree requires delta >= 2, got {delta}"
        )));
    }
    if delta >= n {
        return Err(Error::invalid(format!(
            "minimum degree {delta} is infeasible on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    let add = |edges: &mut Vec<(usize, usize)>,
                   adj: &mut Vec<Vec<bool>>,
                   degree: &mut Vec<usize>,
                   u: usize,
                   v: usize| {
        adj[u][v] = true;
        adj[v][u] = true;
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    };
    for i in 0..n {
        let u = order[i];
        let v = order[(i + 1) % n];
        if !adj[u][v] {
            add(&mut edges, &mut adj, &mut degree, u, v);
        }
    }
    // Fill: always serve the lowest-id deficient vertex, pairing it with a
    // uniformly random non-neighbor.
    while let Some(u) = (0..n).find(|&v| degree[v] < delta) {
        let candidates: Vec<usize> = (0..n).filter(|&v| v != u && !adj[u][v]).collect();
        debug_assert!(!candidates.is_empty());
        let v = candidates[rng.random_range(0..candidates.len())];
        add(&mut edges, &mut adj, &mut degree, u, v);
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert!(g.is_connected());
    debug_assert_eq!(g.min_degree(), delta);
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star `K_{1,k}`: center 0, leaves `1..=k`.
pub fn star(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edges(k + 1, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("complete bipartite parts must be non-empty"));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("fixed edge list is valid")
}

/// Name-driven construction of the classic fixtures, for the CLI.
pub fn classic(name: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            Err(Error::invalid(format!(
                "family '{name}' expects {k} numeric parameter(s), got {}",
                params.len()
            )))
        } else {
            Ok(())
        }
    };
    match name {
        "path" => {
            want(1)?;
            path(params[0])
        }
        "cycle" => {
            want(1)?;
            cycle(params[0])
        }
        "complete" => {
            want(1)?;
            complete(params[0])
        }
        "complete_bipartite" => {
            want(2)?;
            complete_bipartite(params[0], params[1])
        }
        "star" => {
            want(1)?;
            star(params[0])
        }
        "petersen" => {
            want(0)?;
            Ok(petersen())
        }
        other => Err(Error::invalid(format!("unknown classic family '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, distance_layers};

    #[test]
    fn caro_chain_small_instances() {
        let g = caro_chain(3, 1).unwrap();
        assert_eq!(g.n(), 14);
        assert_eq!(g.min_degree(), 3);
        assert_eq!(diameter(&g).unwrap(), 8);

        let g0 = caro_chain(3, 0).unwrap();
        assert_eq!(g0.n(), 10);
        assert_eq!(g0.min_degree(), 3);
        assert_eq!(diameter(&g0).unwrap(), 5);

        let g42 = caro_chain(4, 2).unwrap();
        assert_eq!(g42.n(), 22);
        assert_eq!(g42.min_degree(), 4);
        assert_eq!(diameter(&g42).unwrap(), 11);
    }

    #[test]
    fn caro_chain_layer_depth_from_first_slot() {
        // Vertex 0 is slot 1 of the left end block, one of the two extremes.
        let g = caro_chain(3, 1).unwrap();
        let layers = distance_layers(&g, &[0]).unwrap();
        assert_eq!(layers.depth(), 8);
    }

    #[test]
    fn caro_chain_grid_matches_formulas() {
        for delta in 3..=8 {
            for m in 0..=5 {
                let spec = CaroChainSpec::new(delta, m).unwrap();
                let g = caro_chain(delta, m).unwrap();
                assert_eq!(g.n(), spec.n());
                assert_eq!(g.min_degree(), delta, "delta={delta} m={m}");
                assert!(g.is_connected());
                assert_eq!(
                    diameter(&g).unwrap(),
                    spec.expected_diameter(),
                    "delta={delta} m={m}"
                );
            }
        }
    }

    #[test]
    fn caro_chain_rejects_small_delta() {
        assert!(matches!(caro_chain(2, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn random_min_degree_postconditions() {
        for (n, delta, seed) in [(12, 2, 7u64), (40, 5, 1), (60, 9, 3)] {
            let g = random_min_degree(n, delta, seed).unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_connected());
            assert_eq!(g.min_degree(), delta);
        }
    }

    #[test]
    fn random_min_degree_cycle_suffices_for_delta_two() {
        let g = random_min_degree(12, 2, 5).unwrap();
        assert_eq!(g.m(), 12);
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn random_min_degree_forced_complete() {
        let g = random_min_degree(20, 19, 1).unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn random_min_degree_is_seed_deterministic() {
        let a = random_min_degree(30, 4, 42).unwrap();
        let b = random_min_degree(30, 4, 42).unwrap();
        let c = random_min_degree(30, 4, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn random_min_degree_rejects_infeasible() {
        assert!(matches!(
            random_min_degree(5, 5, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            random_min_degree(5, 1, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn classic_fixtures() {
        let c6 = classic("cycle", &[6]).unwrap();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        let p = classic("petersen", &[]).unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(p.min_degree(), 3);
        assert_eq!(p.max_degree(), 3);
        assert_eq!(diameter(&p).unwrap(), 2);
        let kb = classic("complete_bipartite", &[3, 3]).unwrap();
        assert_eq!(kb.m(), 9);
        assert_eq!(diameter(&kb).unwrap(), 2);
        assert!(matches!(
            classic("moebius", &[4]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            classic("cycle", &[]),
            Err(Error::InvalidArgument(_))
        ));
    }
}
