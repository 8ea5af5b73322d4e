//! Exhaustive search for the fewest colors admitting a majority coloring.
//! Exponential; meant for graphs with about 20 edges or fewer.

use log::warn;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Adjacency, EdgeId, Graph};

const SOFT_EDGE_LIMIT: usize = 20;

/// Smallest `k <= k_max` such that `g` has a majority `k`-edge-coloring.
/// `None` if there is none; in particular whenever a vertex has degree 1.
pub fn brute_min_colors(g: &Graph, k_max: usize) -> Option<usize> {
    if g.edge_count() > SOFT_EDGE_LIMIT {
        warn!(
            "exhaustive search over {} edges may take very long",
            g.edge_count()
        );
    }
    (1..=k_max).find(|&k| find_majority_coloring(g, k).is_some())
}

/// A majority `k`-edge-coloring of `g`, if one exists.
pub fn find_majority_coloring(g: &Graph, k: usize) -> Option<EdgeColoring> {
    if k == 0 {
        return None;
    }
    let n = g.vertex_count();
    // k colors with at most floor(d/2) each must cover all d edges
    if (0..n).any(|u| k * (g.degree(u) / 2) < g.degree(u)) {
        return None;
    }
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    let mut search = Search {
        g,
        k,
        order,
        colors: vec![0; g.edge_count()],
        counts: vec![vec![0; k]; n],
        uncolored: (0..n).map(|u| g.degree(u)).collect(),
    };
    if search.extend(0, 0) {
        Some(EdgeColoring::new(k, search.colors))
    } else {
        None
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<EdgeId>,
    colors: Vec<Color>,
    counts: Vec<Vec<usize>>,
    uncolored: Vec<usize>,
}

impl Search<'_> {
    /// Remaining room at `u` still fits its uncolored edges.
    fn room(&self, u: usize) -> bool {
        let cap = self.g.degree(u) / 2;
        let counts = &self.counts[u];
        if counts.iter().any(|&c| c > cap) {
            return false;
        }
        let room: usize = counts.iter().map(|&c| cap - c).sum();
        room >= self.uncolored[u]
    }

    fn extend(&mut self, i: usize, used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let e = self.order[i];
        let (u, v) = self.g.endpoints(e);
        // colors are interchangeable: never open more than one new color
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            self.counts[u][c] += 1;
            self.counts[v][c] += 1;
            self.uncolored[u] -= 1;
            self.uncolored[v] -= 1;
            if self.room(u) && self.room(v) {
                self.colors[e] = c as Color + 1;
                if self.extend(i + 1, used.max(c + 1)) {
                    return true;
                }
            }
            self.counts[u][c] -= 1;
            self.counts[v][c] -= 1;
            self.uncolored[u] += 1;
            self.uncolored[v] += 1;
        }
        self.colors[e] = 0;
        false
    }
}
