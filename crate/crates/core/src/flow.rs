//! Integral maximum flow (Dinic) and the D'-to-A edge-selection network.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Adjacency, EdgeId, Graph, Vertex};
use crate::matching::{GeClass, GeDecomposition};

pub type ArcId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub cap: u64,
}

/// Capacitated digraph with a designated source and sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes && source != sink);
        FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> ArcId {
        assert!(from < self.nodes && to < self.nodes);
        self.arcs.push(Arc { from, to, cap });
        self.arcs.len() - 1
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

/// Integer flow value per arc of a [`FlowNetwork`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralFlow {
    pub value: u64,
    pub flow: Vec<u64>,
}

impl IntegralFlow {
    /// Capacity bounds and conservation at every node except source and sink.
    pub fn is_feasible(&self, net: &FlowNetwork) -> bool {
        if self.flow.len() != net.arcs.len() {
            return false;
        }
        let mut balance = vec![0i128; net.nodes];
        for (a, &f) in net.arcs.iter().zip(&self.flow) {
            if f > a.cap {
                return false;
            }
            balance[a.from] -= f as i128;
            balance[a.to] += f as i128;
        }
        (0..net.nodes)
            .filter(|&v| v != net.source && v != net.sink)
            .all(|v| balance[v] == 0)
            && balance[net.sink] == self.value as i128
    }
}

struct Dinic {
    // residual arcs: arc 2i is forward of network arc i, 2i+1 its reverse
    to: Vec<usize>,
    cap: Vec<u64>,
    adj: Vec<Vec<usize>>,
    level: Vec<usize>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(net: &FlowNetwork) -> Self {
        let mut d = Dinic {
            to: Vec::with_capacity(2 * net.arcs.len()),
            cap: Vec::with_capacity(2 * net.arcs.len()),
            adj: vec![Vec::new(); net.nodes],
            level: vec![0; net.nodes],
            iter: vec![0; net.nodes],
        };
        for a in &net.arcs {
            d.adj[a.from].push(d.to.len());
            d.to.push(a.to);
            d.cap.push(a.cap);
            d.adj[a.to].push(d.to.len());
            d.to.push(a.from);
            d.cap.push(0);
        }
        d
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &r in &self.adj[v] {
                let w = self.to[r];
                if self.cap[r] > 0 && self.level[w] == usize::MAX {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn dfs(&mut self, v: usize, t: usize, limit: u64) -> u64 {
        if v == t {
            return limit;
        }
        while self.iter[v] < self.adj[v].len() {
            let r = self.adj[v][self.iter[v]];
            let w = self.to[r];
            if self.cap[r] > 0 && self.level[w] == self.level[v] + 1 {
                let pushed = self.dfs(w, t, limit.min(self.cap[r]));
                if pushed > 0 {
                    self.cap[r] -= pushed;
                    self.cap[r ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[v] += 1;
        }
        0
    }
}

/// Dinic's algorithm. Arcs are scanned in insertion order, so the returned
/// flow is deterministic.
pub fn max_flow(net: &FlowNetwork) -> IntegralFlow {
    let mut d = Dinic::new(net);
    let (s, t) = (net.source, net.sink);
    let mut value = 0;
    while d.bfs(s, t) {
        d.iter.iter_mut().for_each(|i| *i = 0);
        loop {
            let pushed = d.dfs(s, t, u64::MAX);
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }
    let flow = net
        .arcs
        .iter()
        .enumerate()
        .map(|(i, a)| a.cap - d.cap[2 * i])
        .collect();
    IntegralFlow { value, flow }
}

/// The network selecting one edge per isolated D-vertex: `s -> u` (cap 1)
/// for `u` in D', `u -> v` (cap 1) per `G`-edge `uv` with `v` in A, and
/// `v -> t` with cap `floor(d(v)/2)`.
#[derive(Debug, Clone)]
pub struct SelectionNetwork {
    pub network: FlowNetwork,
    /// Network node of each D'-vertex, in `ge.d_prime` order.
    pub left: Vec<(Vertex, usize)>,
    /// Network node of each A-vertex, in `ge.a` order.
    pub right: Vec<(Vertex, usize)>,
    /// Unit arc carrying each `G`-edge between D' and A.
    pub edge_arcs: Vec<(ArcId, EdgeId)>,
}

pub const SOURCE: usize = 0;
pub const SINK: usize = 1;

pub fn selection_network(g: &Graph, ge: &GeDecomposition) -> SelectionNetwork {
    let n_left = ge.d_prime.len();
    let nodes = 2 + n_left + ge.a.len();
    let mut net = FlowNetwork::new(nodes, SOURCE, SINK);
    let mut node_of = vec![usize::MAX; g.vertex_count()];
    let left: Vec<(Vertex, usize)> = ge
        .d_prime
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, 2 + i))
        .collect();
    let right: Vec<(Vertex, usize)> =
        ge.a.iter()
            .enumerate()
            .map(|(i, &v)| (v, 2 + n_left + i))
            .collect();
    for &(v, node) in left.iter().chain(&right) {
        node_of[v] = node;
    }
    for &(_, node) in &left {
        net.add_arc(SOURCE, node, 1);
    }
    let mut edge_arcs = Vec::new();
    for &(u, node) in &left {
        for &(v, e) in g.incident(u) {
            if ge.class[v] == GeClass::A {
                edge_arcs.push((net.add_arc(node, node_of[v], 1), e));
            }
        }
    }
    for &(v, node) in &right {
        net.add_arc(node, SINK, (g.degree(v) / 2) as u64);
    }
    SelectionNetwork {
        network: net,
        left,
        right,
        edge_arcs,
    }
}

/// One incident edge per D'-vertex such that every A-vertex `v` carries at
/// most `floor(d(v)/2)` selected edges. Keyed by the D'-vertex.
pub fn select_edges(g: &Graph, ge: &GeDecomposition) -> Result<BTreeMap<Vertex, EdgeId>> {
    let sn = selection_network(g, ge);
    let flow = max_flow(&sn.network);
    let required = ge.d_prime.len() as u64;
    if flow.value < required {
        return Err(Error::SelectionInfeasible {
            value: flow.value,
            required,
        });
    }
    let mut selected = BTreeMap::new();
    for &(arc, e) in &sn.edge_arcs {
        if flow.flow[arc] == 1 {
            let (a, b) = g.endpoints(e);
            let u = if ge.class[a] == GeClass::D { a } else { b };
            selected.insert(u, e);
        }
    }
    debug_assert_eq!(selected.len(), ge.d_prime.len());
    Ok(selected)
}
