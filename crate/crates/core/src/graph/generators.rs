//! Deterministic graph constructors and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_order, Graph, GraphError, MAX_VERTICES};

/// Attempts allowed for rejection sampling before giving up.
pub const RESAMPLE_BUDGET: usize = 10_000;

fn too_small(name: &str, n: usize, min: usize) -> GraphError {
    GraphError::InvalidParameter(format!("{name} needs at least {min} vertices, got {n}"))
}

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edge_list(n, [])
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    check_order(n)?;
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    check_order(n)?;
    Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(too_small("cycle", n, 3));
    }
    Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Vertex 0 is the centre.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(too_small("star", n, 2));
    }
    Graph::from_edge_list(n, (1..n).map(|v| (0, v)))
}

/// The `d`-cube: labels adjacent iff they differ in exactly one bit.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    let max_dim = MAX_VERTICES.trailing_zeros() as usize;
    if d == 0 || d > max_dim {
        return Err(GraphError::InvalidParameter(format!(
            "hypercube dimension must be in 1..={max_dim}, got {d}"
        )));
    }
    let n = 1usize << d;
    Graph::from_edge_list(
        n,
        (0..n).flat_map(|v| {
            (0..d)
                .map(move |b| (v, v ^ (1 << b)))
                .filter(|(u, w)| u < w)
        }),
    )
}

/// Erdős–Rényi G(n, p), deterministic in `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    check_order(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParameter(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_gnp(n, p, &mut rng))
}

fn sample_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    Graph::from_rows(adj)
}

/// G(n, p) conditioned on connectivity by rejection.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    random_graph(n, p, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_BUDGET {
        let g = sample_gnp(n, p, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::ResampleBudgetExhausted {
        attempts: RESAMPLE_BUDGET,
    })
}

/// Uniform `d`-regular graph via the pairing model, rejecting pairings
/// that produce loops or parallel edges. Dense requests (`2d > n - 1`) pair
/// the complementary degree `n - 1 - d` instead and return the complement.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    check_order(n)?;
    if d >= n {
        return Err(GraphError::InvalidParameter(format!(
            "degree {d} must be below the vertex count {n}"
        )));
    }
    if n * d % 2 == 1 {
        return Err(GraphError::InvalidParameter(format!(
            "no {d}-regular graph on {n} vertices: n*d is odd"
        )));
    }
    if 2 * d > n - 1 {
        return pairing_model(n, n - 1 - d, seed).map(|g| g.complement());
    }
    pairing_model(n, d, seed)
}

fn pairing_model(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..RESAMPLE_BUDGET {
        points.shuffle(&mut rng);
        let mut adj = vec![0u64; n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u] >> v & 1 == 1 {
                continue 'attempt;
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph::from_rows(adj);
        debug_assert!(g.is_regular() && g.min_degree() == d);
        return Ok(g);
    }
    Err(GraphError::ResampleBudgetExhausted {
        attempts: RESAMPLE_BUDGET,
    })
}
