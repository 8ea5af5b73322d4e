//! Maximum matchings in general graphs and the Gallai–Edmonds decomposition.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{connected_components, induced_subgraph, Adjacency, EdgeId, Graph, Vertex};

const NONE: usize = usize::MAX;

/// A set of pairwise non-adjacent edges of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<EdgeId>,
    mate: Vec<Option<(Vertex, EdgeId)>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            edges: Vec::new(),
            mate: vec![None; n],
        }
    }

    /// Fails if two of the edges share an endpoint.
    pub fn from_edges<G: Adjacency>(g: &G, edges: &[EdgeId]) -> Result<Self> {
        let mut m = Matching::empty(g.vertex_count());
        for &e in edges {
            m.insert(g, e)?;
        }
        m.edges.sort_unstable();
        Ok(m)
    }

    fn insert<G: Adjacency>(&mut self, g: &G, e: EdgeId) -> Result<()> {
        let (u, v) = g.endpoints(e);
        if self.mate[u].is_some() || self.mate[v].is_some() {
            return Err(Error::InternalStructureViolation(format!(
                "edge {e} shares an endpoint with another matching edge"
            )));
        }
        self.mate[u] = Some((v, e));
        self.mate[v] = Some((u, e));
        self.edges.push(e);
        Ok(())
    }

    fn from_mates(g: &Graph, mates: &[usize]) -> Self {
        let mut m = Matching::empty(g.vertex_count());
        for (u, &v) in mates.iter().enumerate() {
            if v != NONE && u < v {
                let e = g.edge_between(u, v).expect("mates are adjacent");
                m.mate[u] = Some((v, e));
                m.mate[v] = Some((u, e));
                m.edges.push(e);
            }
        }
        m.edges.sort_unstable();
        m
    }

    /// Matching edge ids, ascending.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v].map(|(w, _)| w)
    }

    pub fn edge_at(&self, v: Vertex) -> Option<EdgeId> {
        self.mate[v].map(|(_, e)| e)
    }
}

/// Edmonds' blossom algorithm with an optional deleted vertex.
struct Blossom<'a> {
    g: &'a Graph,
    excluded: Option<Vertex>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, excluded: Option<Vertex>, mate: Vec<usize>) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            excluded,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for &(u, v) in self.g.edges() {
            if Some(u) == self.excluded || Some(v) == self.excluded {
                continue;
            }
            if self.mate[u] == NONE && self.mate[v] == NONE {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from the free vertex `root`; returns its far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in self.g.incident(v) {
                if Some(to) == self.excluded || self.base[v] == self.base[to] || self.mate[v] == to
                {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn try_root(&mut self, root: usize) -> bool {
        match self.find_path(root) {
            Some(end) => {
                self.augment(end);
                true
            }
            None => false,
        }
    }

    fn run(&mut self) {
        for root in 0..self.g.vertex_count() {
            if Some(root) != self.excluded && self.mate[root] == NONE && self.g.degree(root) > 0 {
                self.try_root(root);
            }
        }
    }
}

fn maximum_mates(g: &Graph) -> Vec<usize> {
    let mut b = Blossom::new(g, None, vec![NONE; g.vertex_count()]);
    b.greedy();
    b.run();
    b.mate
}

/// Maximum-cardinality matching (Edmonds' blossom algorithm, greedy start
/// in edge-id order).
pub fn max_matching(g: &Graph) -> Matching {
    Matching::from_mates(g, &maximum_mates(g))
}

/// Maximum matching of `g - v`.
pub fn max_matching_without(g: &Graph, v: Vertex) -> Matching {
    let mut b = Blossom::new(g, Some(v), vec![NONE; g.vertex_count()]);
    b.greedy();
    b.run();
    Matching::from_mates(g, &b.mate)
}

/// Vertices missed by some maximum matching, i.e. `nu(g - v) == nu(g)`.
///
/// Starting from a maximum matching `M`: an uncovered `v` is inessential;
/// for a covered `v` with mate `w`, `M - vw` is maximum in `g - v` unless an
/// augmenting path exists, and any such path must end at `w`.
pub fn inessential_vertices(g: &Graph) -> Vec<bool> {
    let mates = maximum_mates(g);
    (0..g.vertex_count())
        .map(|v| {
            let w = mates[v];
            if w == NONE {
                return true;
            }
            let mut reduced = mates.clone();
            reduced[v] = NONE;
            reduced[w] = NONE;
            let mut b = Blossom::new(g, Some(v), reduced);
            b.try_root(w)
        })
        .collect()
}

/// Perfect matching of `K - x`, or [`Error::NotFactorCritical`].
pub fn near_perfect_matching(k: &Graph, x: Vertex) -> Result<Matching> {
    if x >= k.vertex_count() {
        return Err(Error::UnknownVertex(x));
    }
    let m = max_matching_without(k, x);
    if 2 * m.len() + 1 != k.vertex_count() {
        return Err(Error::NotFactorCritical(x));
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeClass {
    D,
    A,
    C,
}

/// Gallai–Edmonds decomposition `V = D ∪ A ∪ C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeDecomposition {
    pub class: Vec<GeClass>,
    pub d: Vec<Vertex>,
    pub a: Vec<Vertex>,
    pub c: Vec<Vertex>,
    /// Components of `G[D]`, each sorted, ordered by smallest vertex.
    pub d_components: Vec<Vec<Vertex>>,
    /// D-vertex -> index into `d_components`.
    pub component_of: Vec<Option<usize>>,
    /// Isolated vertices of `G[D]`.
    pub d_prime: Vec<Vertex>,
    /// Perfect matching of `G[C]` (edge ids of `G`).
    pub m_c: Matching,
    /// Matches each vertex of `A` into a distinct D-component.
    pub m_a: Matching,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::InternalStructureViolation(msg.into())
}

pub fn gallai_edmonds(g: &Graph) -> Result<GeDecomposition> {
    let n = g.vertex_count();
    let inessential = inessential_vertices(g);
    let mut class = vec![GeClass::C; n];
    for v in 0..n {
        if inessential[v] {
            class[v] = GeClass::D;
        }
    }
    for v in 0..n {
        if class[v] != GeClass::D && g.neighbors(v).any(|w| inessential[w]) {
            class[v] = GeClass::A;
        }
    }
    let pick = |k: GeClass| (0..n).filter(|&v| class[v] == k).collect::<Vec<_>>();
    let (d, a, c) = (pick(GeClass::D), pick(GeClass::A), pick(GeClass::C));

    let gd = induced_subgraph(g, &d)?;
    let d_components: Vec<Vec<Vertex>> = connected_components(&gd.graph)
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| gd.vertex_map[v]).collect())
        .collect();
    let mut component_of = vec![None; n];
    for (i, comp) in d_components.iter().enumerate() {
        if comp.len() % 2 == 0 {
            return Err(violation(format!("D-component {comp:?} has even order")));
        }
        for &v in comp {
            component_of[v] = Some(i);
        }
    }
    let d_prime: Vec<Vertex> = d_components
        .iter()
        .filter(|comp| comp.len() == 1)
        .map(|comp| comp[0])
        .collect();
    for &u in &d_prime {
        if let Some(w) = g.neighbors(u).find(|&w| class[w] != GeClass::A) {
            return Err(violation(format!(
                "isolated D-vertex {u} has neighbor {w} outside A"
            )));
        }
    }

    let full = max_matching(g);
    let c_edges: Vec<EdgeId> = full
        .edges()
        .iter()
        .copied()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            class[u] == GeClass::C && class[v] == GeClass::C
        })
        .collect();
    let m_c = Matching::from_edges(g, &c_edges)?;
    if 2 * m_c.len() != c.len() {
        return Err(violation(
            "maximum matching does not restrict to a perfect matching of G[C]",
        ));
    }

    let mut ge = GeDecomposition {
        class,
        d,
        a,
        c,
        d_components,
        component_of,
        d_prime,
        m_c,
        m_a: Matching::empty(n),
    };
    ge.m_a = match_a_to_components(g, &ge)?;
    Ok(ge)
}

/// Matches every A-vertex to a distinct D-component through a `G`-edge,
/// using augmenting paths on the bipartite graph A × components. Among
/// parallel choices the smallest edge id wins.
pub fn match_a_to_components(g: &Graph, ge: &GeDecomposition) -> Result<Matching> {
    let comps = ge.d_components.len();
    // options[i]: (component, edge) pairs for A-vertex ge.a[i], one per component
    let options: Vec<Vec<(usize, EdgeId)>> =
        ge.a.iter()
            .map(|&v| {
                let mut opts: Vec<(usize, EdgeId)> = Vec::new();
                for &(w, e) in g.incident(v) {
                    if let Some(k) = ge.component_of[w] {
                        match opts.iter_mut().find(|(c, _)| *c == k) {
                            Some(slot) => slot.1 = slot.1.min(e),
                            None => opts.push((k, e)),
                        }
                    }
                }
                opts
            })
            .collect();

    let mut owner = vec![NONE; comps];
    let mut choice = vec![NONE; ge.a.len()];
    for i in 0..ge.a.len() {
        let mut seen = vec![false; comps];
        if !kuhn(i, &options, &mut owner, &mut choice, &mut seen) {
            return Err(violation(format!(
                "A-vertex {} cannot be matched into a distinct D-component",
                ge.a[i]
            )));
        }
    }
    let edges: Vec<EdgeId> = choice
        .iter()
        .enumerate()
        .map(|(i, &k)| options[i].iter().find(|&&(c, _)| c == k).unwrap().1)
        .collect();
    Matching::from_edges(g, &edges)
}

fn kuhn(
    i: usize,
    options: &[Vec<(usize, EdgeId)>],
    owner: &mut [usize],
    choice: &mut [usize],
    seen: &mut [bool],
) -> bool {
    for &(k, _) in &options[i] {
        if seen[k] {
            continue;
        }
        seen[k] = true;
        if owner[k] == NONE || kuhn(owner[k], options, owner, choice, seen) {
            owner[k] = i;
            choice[i] = k;
            return true;
        }
    }
    false
}
