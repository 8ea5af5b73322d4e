//! Balanced 2-edge-colorings from Euler tours.
//!
//! Coloring the edges of a closed trail alternately gives every pass through a
//! vertex one edge of each color. Only the wrap-around pair `(e_{m-1}, e_0)`
//! at the start vertex can repeat a color, and that happens exactly when the
//! tour length is odd.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, EdgeId, EdgeOrigin, Graph, Multigraph, Vertex};

/// A closed trail `e_0 e_1 ... e_{m-1}` starting and ending at `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTour {
    pub start: Vertex,
    pub edges: Vec<EdgeId>,
}

impl EulerTour {
    /// Vertex sequence `v_0 .. v_m` of the walk, with `v_0 = v_m = start`.
    /// Returns `None` if consecutive edges do not share the walk vertex.
    pub fn walk<G: Adjacency>(&self, g: &G) -> Option<Vec<Vertex>> {
        let mut at = self.start;
        let mut walk = vec![at];
        for &e in &self.edges {
            let (a, b) = g.endpoints(e);
            at = if a == at {
                b
            } else if b == at {
                a
            } else {
                return None;
            };
            walk.push(at);
        }
        Some(walk)
    }

    /// Checks closedness, consecutive incidence and that every edge of `g`
    /// appears exactly once.
    pub fn is_valid_for<G: Adjacency>(&self, g: &G) -> bool {
        if self.edges.len() != g.edge_count() {
            return false;
        }
        let mut seen = vec![false; g.edge_count()];
        for &e in &self.edges {
            if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
                return false;
            }
        }
        match self.walk(g) {
            Some(w) => w.last() == Some(&self.start),
            None => false,
        }
    }

    /// Cyclic shift so that `edges[k]` becomes the first edge.
    fn rotate<G: Adjacency>(&mut self, g: &G, k: usize) {
        if k == 0 {
            return;
        }
        let walk = self.walk(g).expect("valid tour");
        self.edges.rotate_left(k);
        self.start = walk[k];
    }
}

/// Hierholzer's algorithm. Requires every vertex to have even degree, the
/// edges to form one connected component, and `start` to have an edge.
pub fn euler_tour<G: Adjacency>(g: &G, start: Vertex) -> Result<EulerTour> {
    let n = g.vertex_count();
    if start >= n {
        return Err(Error::UnknownVertex(start));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) % 2 == 1) {
        return Err(Error::OddDegreeVertex(v));
    }
    if g.degree(start) == 0 {
        return Err(if g.edge_count() == 0 {
            Error::NoEdges
        } else {
            Error::Disconnected
        });
    }

    let mut used = vec![false; g.edge_count()];
    let mut next = vec![0usize; n];
    // (vertex, edge used to arrive)
    let mut stack: Vec<(Vertex, Option<EdgeId>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(g.edge_count());
    while let Some(&(v, via)) = stack.last() {
        let inc = g.incident(v);
        while next[v] < inc.len() && used[inc[next[v]].1] {
            next[v] += 1;
        }
        if next[v] < inc.len() {
            let (w, e) = inc[next[v]];
            used[e] = true;
            stack.push((w, Some(e)));
        } else {
            stack.pop();
            if let Some(e) = via {
                circuit.push(e);
            }
        }
    }
    if circuit.len() != g.edge_count() {
        return Err(Error::Disconnected);
    }
    circuit.reverse();
    Ok(EulerTour {
        start,
        edges: circuit,
    })
}

/// 2-coloring with at most `ceil(d(u)/2)` edges of each color at every vertex.
///
/// Odd-degree vertices are paired in increasing id order and joined by added
/// edges; the Euler tour of the resulting multigraph is rotated to end on an
/// added edge, and original edges are colored by index parity.
pub fn balanced_2coloring(g: &Graph) -> Result<EdgeColoring> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    if !g.is_edge_connected() {
        return Err(Error::Disconnected);
    }
    let odd: Vec<Vertex> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) % 2 == 1)
        .collect();
    if odd.is_empty() && m % 2 == 1 {
        return Err(Error::PreconditionOddEvenAll);
    }

    let mut mg: Multigraph = g.to_multigraph();
    for pair in odd.chunks(2) {
        mg.add_edge(pair[0], pair[1], EdgeOrigin::Added)?;
    }
    let start = (0..g.vertex_count())
        .find(|&v| g.degree(v) > 0)
        .expect("graph has an edge");
    let mut tour = euler_tour(&mg, start)?;
    if let Some(pos) = tour
        .edges
        .iter()
        .position(|&e| mg.origin(e) == EdgeOrigin::Added)
    {
        tour.rotate(&mg, (pos + 1) % tour.edges.len());
    }

    let mut coloring = EdgeColoring::blank(2, m);
    for (i, &e) in tour.edges.iter().enumerate() {
        if mg.origin(e) == EdgeOrigin::Original {
            coloring.set(e, (i % 2) as u32 + 1);
        }
    }
    Ok(coloring)
}

/// 2-coloring of a connected Eulerian graph with an odd number of edges.
///
/// Every vertex other than `pin` gets exactly `d/2` edges of each color; `pin`
/// gets `d/2 + 1` edges of color 1 and `d/2 - 1` of color 2.
pub fn balanced_2coloring_pinned(g: &Graph, pin: Vertex) -> Result<EdgeColoring> {
    if pin >= g.vertex_count() {
        return Err(Error::UnknownVertex(pin));
    }
    let m = g.edge_count();
    let all_even = (0..g.vertex_count()).all(|v| g.degree(v) % 2 == 0);
    if !all_even || m.is_multiple_of(2) || g.degree(pin) < 2 {
        return Err(Error::PreconditionNotEulerOdd);
    }
    if !g.is_edge_connected() {
        return Err(Error::Disconnected);
    }
    let tour = euler_tour(g, pin)?;
    let mut coloring = EdgeColoring::blank(2, m);
    for (i, &e) in tour.edges.iter().enumerate() {
        coloring.set(e, (i % 2) as u32 + 1);
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn counts(g: &Graph, c: &EdgeColoring) -> Vec<(usize, usize)> {
        c.tallies(g).into_iter().map(|t| (t[0], t[1])).collect()
    }

    #[test]
    fn tour_of_c4() {
        let g = generate::cycle(4).unwrap().to_multigraph();
        let t = euler_tour(&g, 0).unwrap();
        assert_eq!(t.edges.len(), 4);
        assert!(t.is_valid_for(&g));
    }

    #[test]
    fn tour_of_bowtie() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
            .unwrap()
            .to_multigraph();
        for s in 0..5 {
            let t = euler_tour(&g, s).unwrap();
            assert_eq!(t.edges.len(), 6);
            assert!(t.is_valid_for(&g));
            assert_eq!(t.start, s);
        }
    }

    #[test]
    fn tour_rejects_path() {
        let g = generate::path(3).unwrap().to_multigraph();
        assert_eq!(euler_tour(&g, 1), Err(Error::OddDegreeVertex(0)));
    }

    #[test]
    fn tour_rejects_disconnected() {
        let mut pairs: Vec<_> = (0..3).map(|i| (i, (i + 1) % 3)).collect();
        pairs.extend((0..3).map(|i| (3 + i, 3 + (i + 1) % 3)));
        let g = Graph::from_edge_list(&pairs).unwrap().to_multigraph();
        assert_eq!(euler_tour(&g, 0), Err(Error::Disconnected));
    }

    #[test]
    fn tour_handles_parallel_edges() {
        let mut g = Multigraph::new(2);
        g.add_edge(0, 1, EdgeOrigin::Original).unwrap();
        g.add_edge(0, 1, EdgeOrigin::Added).unwrap();
        let t = euler_tour(&g, 1).unwrap();
        assert!(t.is_valid_for(&g));
    }

    #[test]
    fn c4_alternates() {
        let g = generate::cycle(4).unwrap();
        let c = balanced_2coloring(&g).unwrap();
        assert!(counts(&g, &c).iter().all(|&p| p == (1, 1)));
    }

    #[test]
    fn p3_splits_center() {
        let g = generate::path(3).unwrap();
        let c = balanced_2coloring(&g).unwrap();
        assert_eq!(counts(&g, &c)[1], (1, 1));
    }

    #[test]
    fn k5_is_perfectly_balanced() {
        let g = generate::complete(5).unwrap();
        let c = balanced_2coloring(&g).unwrap();
        assert!(counts(&g, &c).iter().all(|&p| p == (2, 2)));
    }

    #[test]
    fn odd_eulerian_needs_pin() {
        let g = generate::cycle(3).unwrap();
        assert_eq!(balanced_2coloring(&g), Err(Error::PreconditionOddEvenAll));
    }

    #[test]
    fn pinned_odd_cycles() {
        for n in [3, 5] {
            let g = generate::cycle(n).unwrap();
            let c = balanced_2coloring_pinned(&g, 0).unwrap();
            let t = counts(&g, &c);
            assert_eq!(t[0], (2, 0));
            assert!(t[1..].iter().all(|&p| p == (1, 1)));
        }
    }

    #[test]
    fn pinned_rejects_bowtie() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            balanced_2coloring_pinned(&g, 0),
            Err(Error::PreconditionNotEulerOdd)
        );
    }

    #[test]
    fn deterministic() {
        let g = generate::random_mindeg(30, 3, 11).unwrap();
        assert_eq!(balanced_2coloring(&g), balanced_2coloring(&g));
    }
}
