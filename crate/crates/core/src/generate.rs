//! Named graph families and seeded random generators.
//!
//! Random generators use ChaCha8 seeded from a `u64`, so the same family,
//! parameters and seed always give the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Adjacency, Graph, Vertex};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(&pairs)
}

pub fn path(n: usize) -> Result<Graph> {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::with_vertices(n, &pairs)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Graph::with_vertices(n, &pairs)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut pairs = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            pairs.push((u, a + v));
        }
    }
    Graph::with_vertices(a + b, &pairs)
}

pub fn petersen() -> Graph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(&pairs).expect("petersen is simple")
}

/// Connected `d`-regular graph on `n` vertices.
///
/// Points are paired one at a time while rejecting loops and repeated edges;
/// a dead end or a disconnected result restarts the pairing.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(invalid(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        if let Some(g) = try_pairing(n, d, &mut rng) {
            if d == 0 || connected_components(&g).len() == 1 {
                return Ok(g);
            }
        }
    }
    Err(invalid(format!(
        "could not sample a connected {d}-regular graph on {n} vertices"
    )))
}

fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut points: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut g = Graph::new(n);
    while !points.is_empty() {
        let len = points.len();
        let mut paired = false;
        for _ in 0..(8 * len) {
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(0..len);
            let (u, v) = (points[i], points[j]);
            if u != v && g.edge_between(u, v).is_none() {
                g.add_edge(u, v).ok()?;
                let (hi, lo) = (i.max(j), i.min(j));
                points.swap_remove(hi);
                points.swap_remove(lo);
                paired = true;
                break;
            }
        }
        if !paired {
            return None;
        }
    }
    Some(g)
}

/// Connected graph on `n` vertices with minimum degree at least `delta`.
pub fn random_mindeg(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    random_gnp_floor(n, 0.0, delta, seed)
}

/// `G(n, p)`, then every vertex below `delta` is joined to random
/// non-neighbors (low-degree ones first), then components are chained
/// together. The result is connected with minimum degree `>= delta`.
pub fn random_gnp_floor(n: usize, p: f64, delta: usize, seed: u64) -> Result<Graph> {
    if n == 0 || delta >= n {
        return Err(invalid(format!(
            "minimum degree {delta} impossible on {n} vertices"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if p > 0.0 && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }

    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    for &u in &order {
        while g.degree(u) < delta {
            let candidates: Vec<Vertex> = (0..n)
                .filter(|&w| w != u && g.edge_between(u, w).is_none())
                .collect();
            let low: Vec<Vertex> = candidates
                .iter()
                .copied()
                .filter(|&w| g.degree(w) < delta)
                .collect();
            let pool = if low.is_empty() { &candidates } else { &low };
            let w = *pool
                .choose(&mut rng)
                .expect("delta < n leaves a non-neighbor");
            g.add_edge(u, w)?;
        }
    }

    let comps = connected_components(&g);
    for pair in comps.windows(2) {
        let u = *pair[0].choose(&mut rng).unwrap();
        let v = *pair[1].choose(&mut rng).unwrap();
        g.add_edge(u, v)?;
    }
    Ok(g)
}
