//! Simple graphs, multigraphs, subgraph extraction and vertex splitting.
//!
//! Vertices are dense ids `0..n`, edges carry stable ids `0..m` in insertion
//! order. Every adjacency entry is a `(neighbor, edge id)` pair, so parallel
//! edges in a [`Multigraph`] stay distinguishable.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Read-only adjacency view shared by [`Graph`] and [`Multigraph`].
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex);
    fn incident(&self, u: Vertex) -> &[(Vertex, EdgeId)];

    fn degree(&self, u: Vertex) -> usize {
        self.incident(u).len()
    }

    /// Endpoint of `e` that is not `u`.
    fn opposite(&self, e: EdgeId, u: Vertex) -> Vertex {
        let (a, b) = self.endpoints(e);
        if a == u {
            b
        } else {
            a
        }
    }
}

/// A finite, simple, undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph over `max id + 1` vertices. Edge ids follow the input order.
    pub fn from_edge_list(pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::with_vertices(n, pairs)
    }

    /// Like [`Graph::from_edge_list`] but with an explicit vertex count, so
    /// trailing isolated vertices survive.
    pub fn with_vertices(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        let mut seen = HashSet::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            g.push_edge(u, v);
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        let n = self.vertex_count();
        if u >= n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.edge_between(u, v).is_some() {
            return Err(Error::DuplicateEdge(u, v));
        }
        Ok(self.push_edge(u, v))
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> EdgeId {
        let e = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, e));
        self.adj[v].push((u, e));
        e
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[u].iter().map(|&(w, _)| w)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|u| self.degree(u))
            .max()
            .unwrap_or(0)
    }

    /// `(vertex, degree)` of the smallest-id vertex of minimum degree among
    /// vertices with at least one edge.
    pub fn min_degree_non_isolated(&self) -> Option<(Vertex, usize)> {
        (0..self.vertex_count())
            .map(|u| (u, self.degree(u)))
            .filter(|&(_, d)| d > 0)
            .min_by_key(|&(u, d)| (d, u))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|u| self.degree(u))
            .min()
            .unwrap_or(0)
    }

    /// Fails with [`Error::MinDegreeTooLow`] on the first vertex with
    /// `0 < degree < required`. Isolated vertices are ignored.
    pub fn require_min_degree(&self, required: usize) -> Result<()> {
        match self.min_degree_non_isolated() {
            Some((vertex, degree)) if degree < required => Err(Error::MinDegreeTooLow {
                vertex,
                degree,
                required,
            }),
            _ => Ok(()),
        }
    }

    /// True when all edges lie in a single connected component.
    /// Isolated vertices are ignored.
    pub fn is_edge_connected(&self) -> bool {
        edge_connected(self)
    }

    pub fn to_multigraph(&self) -> Multigraph {
        let mut mg = Multigraph::new(self.vertex_count());
        for &(u, v) in &self.edges {
            mg.push_edge(u, v, EdgeOrigin::Original);
        }
        mg
    }
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    fn incident(&self, u: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[u]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrigin {
    /// Edge of the input graph.
    Original,
    /// Edge introduced by an algorithm.
    Added,
}

/// Undirected multigraph without self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    edges: Vec<(Vertex, Vertex)>,
    origin: Vec<EdgeOrigin>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            origin: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, origin: EdgeOrigin) -> Result<EdgeId> {
        let n = self.vertex_count();
        if u >= n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.push_edge(u, v, origin))
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex, origin: EdgeOrigin) -> EdgeId {
        let e = self.edges.len();
        self.edges.push((u, v));
        self.origin.push(origin);
        self.adj[u].push((v, e));
        self.adj[v].push((u, e));
        e
    }

    pub fn origin(&self, e: EdgeId) -> EdgeOrigin {
        self.origin[e]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn is_edge_connected(&self) -> bool {
        edge_connected(self)
    }
}

impl Adjacency for Multigraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    fn incident(&self, u: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[u]
    }
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components<G: Adjacency>(g: &G) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &(w, _) in g.incident(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn edge_connected<G: Adjacency>(g: &G) -> bool {
    connected_components(g)
        .iter()
        .filter(|c| c.len() > 1 || g.degree(c[0]) > 0)
        .count()
        <= 1
}

/// A graph extracted from a parent graph, with maps back to parent ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// Local vertex -> parent vertex.
    pub vertex_map: Vec<Vertex>,
    /// Local edge -> parent edge.
    pub edge_map: Vec<EdgeId>,
}

impl Subgraph {
    pub fn local_vertex(&self, parent: Vertex) -> Option<Vertex> {
        self.vertex_map.binary_search(&parent).ok()
    }
}

/// `G[S]`: the vertices of `S` (ascending) and every edge of `g` inside `S`.
pub fn induced_subgraph(g: &Graph, s: &[Vertex]) -> Result<Subgraph> {
    let n = g.vertex_count();
    let mut local = vec![usize::MAX; n];
    let mut vertex_map: Vec<Vertex> = s.to_vec();
    vertex_map.sort_unstable();
    vertex_map.dedup();
    for (i, &v) in vertex_map.iter().enumerate() {
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
        local[v] = i;
    }
    let mut graph = Graph::new(vertex_map.len());
    let mut edge_map = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if local[u] != usize::MAX && local[v] != usize::MAX {
            graph.push_edge(local[u], local[v]);
            edge_map.push(e);
        }
    }
    Ok(Subgraph {
        graph,
        vertex_map,
        edge_map,
    })
}

/// Subgraph formed by the given edges and their endpoints. Edges are kept in
/// ascending id order, vertices ascending.
pub fn edge_subgraph(g: &Graph, edge_ids: &[EdgeId]) -> Subgraph {
    let mut edge_map = edge_ids.to_vec();
    edge_map.sort_unstable();
    edge_map.dedup();
    let mut vertex_map: Vec<Vertex> = edge_map
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect();
    vertex_map.sort_unstable();
    vertex_map.dedup();
    let mut graph = Graph::new(vertex_map.len());
    for &e in &edge_map {
        let (u, v) = g.endpoints(e);
        let lu = vertex_map.binary_search(&u).unwrap();
        let lv = vertex_map.binary_search(&v).unwrap();
        graph.push_edge(lu, lv);
    }
    Subgraph {
        graph,
        vertex_map,
        edge_map,
    }
}

/// Result of splitting vertices. Edge ids are preserved, so `forward` is the
/// identity and the edge bijection is trivially invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMap {
    pub graph: Graph,
    /// Original edge -> split edge.
    pub forward: Vec<EdgeId>,
    /// Split vertex -> original vertex.
    pub origin: Vec<Vertex>,
    /// Original vertex -> part sizes, in the order of its split vertices.
    pub parts: Vec<Vec<usize>>,
    /// Original vertex -> its split vertices.
    pub pieces: Vec<Vec<Vertex>>,
}

impl SplitMap {
    /// Split edge -> original edge.
    pub fn backward(&self) -> Vec<EdgeId> {
        let mut inv = vec![0; self.forward.len()];
        for (orig, &split) in self.forward.iter().enumerate() {
            inv[split] = orig;
        }
        inv
    }
}

/// Splits a single vertex `u` into vertices of the given degrees. The
/// neighborhood is consumed in adjacency order, in consecutive blocks.
pub fn split_vertex(g: &Graph, u: Vertex, parts: &[usize]) -> Result<SplitMap> {
    if u >= g.vertex_count() {
        return Err(Error::UnknownVertex(u));
    }
    let plan: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| {
            if v == u {
                parts.to_vec()
            } else {
                vec![g.degree(v)]
            }
        })
        .collect();
    split_vertices(g, &plan)
}

/// Splits every vertex `v` into `plan[v].len()` vertices with degrees
/// `plan[v]`. A plan of `[degree(v)]` leaves `v` intact; isolated vertices
/// take `[0]` (or an empty plan).
pub fn split_vertices(g: &Graph, plan: &[Vec<usize>]) -> Result<SplitMap> {
    let n = g.vertex_count();
    if plan.len() != n {
        return Err(Error::InvalidParameter(format!(
            "split plan covers {} vertices, graph has {n}",
            plan.len()
        )));
    }
    let mut parts = Vec::with_capacity(n);
    for (v, p) in plan.iter().enumerate() {
        let d = g.degree(v);
        let p = if d == 0 && p.is_empty() {
            vec![0]
        } else {
            p.clone()
        };
        let bad_zero = d > 0 && p.contains(&0);
        if p.is_empty() || bad_zero || p.iter().sum::<usize>() != d {
            return Err(Error::PartsSumMismatch {
                vertex: v,
                degree: d,
                parts: p,
            });
        }
        parts.push(p);
    }

    let mut origin = Vec::new();
    let mut pieces = Vec::with_capacity(n);
    for (v, p) in parts.iter().enumerate() {
        let start = origin.len();
        origin.extend(std::iter::repeat_n(v, p.len()));
        pieces.push((start..origin.len()).collect::<Vec<_>>());
    }

    // New endpoints per edge, filled from each side.
    let mut ends = g.edges().to_vec();
    for v in 0..n {
        let mut slot = 0;
        let mut used = 0;
        for &(_, e) in g.incident(v) {
            while used == parts[v][slot] {
                slot += 1;
                used = 0;
            }
            used += 1;
            let piece = pieces[v][slot];
            let (a, _) = g.endpoints(e);
            if a == v {
                ends[e].0 = piece;
            } else {
                ends[e].1 = piece;
            }
        }
    }

    let mut graph = Graph::new(origin.len());
    for &(a, b) in &ends {
        graph.push_edge(a, b);
    }
    Ok(SplitMap {
        graph,
        forward: (0..g.edge_count()).collect(),
        origin,
        parts,
        pieces,
    })
}
