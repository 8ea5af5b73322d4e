//! Majority 3-edge-coloring of graphs with minimum degree at least 4.
//!
//! The edge set is split into `E1`, which gets color 3, and the rest, whose
//! components are 2-colored along Euler tours. `E1` is chosen so that every
//! vertex `u` has `1 <= d_E1(u) <= floor(d(u)/2)`:
//!
//! * isolated vertices of `G[D]` each take one edge chosen by a max-flow,
//! * `G[C]` contributes a perfect matching,
//! * A-vertices without a selected edge contribute their `M_A` edge,
//! * larger D-components contribute a near-perfect matching, plus one extra
//!   edge at the uncovered vertex when no `M_A` edge reaches them.

use std::collections::BTreeMap;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::euler::{balanced_2coloring, balanced_2coloring_pinned};
use crate::flow::select_edges;
use crate::graph::{
    connected_components, edge_subgraph, induced_subgraph, Adjacency, EdgeId, Graph, Vertex,
};
use crate::matching::{gallai_edmonds, near_perfect_matching, GeClass, GeDecomposition};
use crate::verify::verify_majority;

/// Split of `E(G)` into `E1` and `E2 = E(G) \ E1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EOnePartition {
    pub in_e1: Vec<bool>,
    /// Edges moved from `E2` to `E1` by [`fixup`].
    pub moved: Vec<EdgeId>,
}

impl EOnePartition {
    pub fn e1(&self) -> Vec<EdgeId> {
        (0..self.in_e1.len()).filter(|&e| self.in_e1[e]).collect()
    }

    pub fn e2(&self) -> Vec<EdgeId> {
        (0..self.in_e1.len()).filter(|&e| !self.in_e1[e]).collect()
    }

    pub fn g1_degrees(&self, g: &Graph) -> Vec<usize> {
        (0..g.vertex_count())
            .map(|u| {
                g.incident(u)
                    .iter()
                    .filter(|&&(_, e)| self.in_e1[e])
                    .count()
            })
            .collect()
    }

    /// `1 <= d_G1(u) <= floor(d_G(u)/2)` for every vertex.
    pub fn check_degree_bounds(&self, g: &Graph) -> Result<()> {
        for (u, d1) in self.g1_degrees(g).into_iter().enumerate() {
            let d = g.degree(u);
            if d1 < 1 || d1 > d / 2 {
                return Err(Error::InternalStructureViolation(format!(
                    "vertex {u}: d_G1 = {d1} outside [1, {}]",
                    d / 2
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// Has an odd-degree vertex, or an even number of edges.
    Type1,
    /// All degrees even, odd edge count; pinned at a vertex with `d_G1 >= 2`.
    Type2 { pin: Vertex },
}

/// A connected component of `G2` with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2Component {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub kind: ComponentKind,
}

struct RawComponent {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
    all_even: bool,
}

fn g2_components(g: &Graph, part: &EOnePartition) -> Vec<RawComponent> {
    let sub = edge_subgraph(g, &part.e2());
    connected_components(&sub.graph)
        .into_iter()
        .map(|comp| {
            let all_even = comp.iter().all(|&v| sub.graph.degree(v) % 2 == 0);
            let mut edges: Vec<EdgeId> = comp
                .iter()
                .flat_map(|&v| sub.graph.incident(v).iter().map(|&(_, e)| sub.edge_map[e]))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            RawComponent {
                vertices: comp.iter().map(|&v| sub.vertex_map[v]).collect(),
                edges,
                all_even,
            }
        })
        .collect()
}

fn violation(msg: impl Into<String>) -> Error {
    Error::InternalStructureViolation(msg.into())
}

/// Assembles `E1` from the selection, `M_C`, `M_A'` and the per-component
/// near-perfect matchings. Every free choice takes the smallest id.
pub fn build_e1(
    g: &Graph,
    ge: &GeDecomposition,
    selection: &BTreeMap<Vertex, EdgeId>,
) -> Result<EOnePartition> {
    if let Some(u) = (0..g.vertex_count()).find(|&u| g.degree(u) < 4) {
        return Err(Error::MinDegreeTooLow {
            vertex: u,
            degree: g.degree(u),
            required: 4,
        });
    }
    let mut in_e1 = vec![false; g.edge_count()];
    let mut has_selected = vec![false; g.vertex_count()];
    for (&u, &e) in selection {
        if ge.class[u] != GeClass::D || in_e1[e] {
            return Err(violation(format!("bad selected edge {e} at {u}")));
        }
        in_e1[e] = true;
        let v = g.opposite(e, u);
        has_selected[v] = true;
    }
    if selection.len() != ge.d_prime.len() {
        return Err(violation("selection does not cover D'"));
    }
    for &e in ge.m_c.edges() {
        in_e1[e] = true;
    }

    // M_A': M_A edges at A-vertices without a selected edge
    let mut touched: Vec<Option<Vertex>> = vec![None; ge.d_components.len()];
    for &v in &ge.a {
        if has_selected[v] {
            continue;
        }
        let e = ge
            .m_a
            .edge_at(v)
            .ok_or_else(|| violation(format!("A-vertex {v} not covered by M_A")))?;
        in_e1[e] = true;
        let x = g.opposite(e, v);
        let k = ge.component_of[x].ok_or_else(|| violation("M_A edge leaves D"))?;
        if touched[k].replace(x).is_some() {
            return Err(violation(format!(
                "D-component {k} receives two M_A' edges"
            )));
        }
    }

    for (k, comp) in ge.d_components.iter().enumerate() {
        if comp.len() < 3 {
            continue;
        }
        let sub = induced_subgraph(g, comp)?;
        let x = touched[k].unwrap_or(comp[0]);
        let local_x = sub.local_vertex(x).unwrap();
        let m = near_perfect_matching(&sub.graph, local_x)?;
        for &e in m.edges() {
            in_e1[sub.edge_map[e]] = true;
        }
        if touched[k].is_none() {
            // adjacency lists are in edge-id order, so this is the smallest id
            let &(_, e) = sub
                .graph
                .incident(local_x)
                .first()
                .ok_or_else(|| violation("vertex without edges in its D-component"))?;
            in_e1[sub.edge_map[e]] = true;
        }
    }
    Ok(EOnePartition {
        in_e1,
        moved: Vec::new(),
    })
}

/// Moves one edge (the smallest id) of every `G2` component that has only
/// even degrees, an odd number of edges, and `d_G1 = 1` at all its vertices.
pub fn fixup(g: &Graph, part: &EOnePartition) -> EOnePartition {
    let mut out = part.clone();
    let d1 = part.g1_degrees(g);
    for comp in g2_components(g, part) {
        if comp.edges.is_empty() || !comp.all_even || comp.edges.len() % 2 == 0 {
            continue;
        }
        if comp.vertices.iter().all(|&v| d1[v] == 1) {
            let e = comp.edges[0];
            out.in_e1[e] = true;
            out.moved.push(e);
        }
    }
    out
}

/// Labels every `G2` component with at least one edge.
pub fn classify(g: &Graph, part: &EOnePartition) -> Result<Vec<G2Component>> {
    let d1 = part.g1_degrees(g);
    g2_components(g, part)
        .into_iter()
        .filter(|c| !c.edges.is_empty())
        .map(|c| {
            let kind = if !c.all_even || c.edges.len() % 2 == 0 {
                ComponentKind::Type1
            } else {
                let pin = c
                    .vertices
                    .iter()
                    .copied()
                    .find(|&v| d1[v] >= 2)
                    .ok_or_else(|| {
                        violation(format!(
                            "odd Eulerian component at {} has no vertex with d_G1 >= 2",
                            c.vertices[0]
                        ))
                    })?;
                ComponentKind::Type2 { pin }
            };
            Ok(G2Component {
                vertices: c.vertices,
                edges: c.edges,
                kind,
            })
        })
        .collect()
}

/// Intermediate state of a [`majority3`] run, for inspection and testing.
#[derive(Debug, Clone)]
pub struct Majority3Run {
    pub decomposition: GeDecomposition,
    pub selection: BTreeMap<Vertex, EdgeId>,
    pub before_fixup: EOnePartition,
    pub after_fixup: EOnePartition,
    pub components: Vec<G2Component>,
    pub coloring: EdgeColoring,
}

/// Runs every stage on a graph with no vertex of degree below 4, checking the
/// degree bounds on `E1` before and after the fixup.
pub fn majority3_run(g: &Graph) -> Result<Majority3Run> {
    if let Some(u) = (0..g.vertex_count()).find(|&u| g.degree(u) < 4) {
        return Err(Error::MinDegreeTooLow {
            vertex: u,
            degree: g.degree(u),
            required: 4,
        });
    }
    let decomposition = gallai_edmonds(g)?;
    let selection = select_edges(g, &decomposition)?;
    let before_fixup = build_e1(g, &decomposition, &selection)?;
    before_fixup.check_degree_bounds(g)?;
    let after_fixup = fixup(g, &before_fixup);
    after_fixup.check_degree_bounds(g)?;
    let components = classify(g, &after_fixup)?;

    let mut coloring = EdgeColoring::blank(3, g.edge_count());
    for e in after_fixup.e1() {
        coloring.set(e, 3);
    }
    for comp in &components {
        let sub = edge_subgraph(g, &comp.edges);
        let local = match comp.kind {
            ComponentKind::Type1 => balanced_2coloring(&sub.graph)?,
            ComponentKind::Type2 { pin } => {
                balanced_2coloring_pinned(&sub.graph, sub.local_vertex(pin).unwrap())?
            }
        };
        for (le, &c) in local.colors().iter().enumerate() {
            coloring.set(sub.edge_map[le], c);
        }
    }

    let bad = verify_majority(g, &coloring, 3)?;
    if let Some(v) = bad.first() {
        return Err(violation(format!(
            "vertex {} has {} edges of color {} out of {}",
            v.vertex, v.count, v.color, v.degree
        )));
    }
    Ok(Majority3Run {
        decomposition,
        selection,
        before_fixup,
        after_fixup,
        components,
        coloring,
    })
}

/// Majority 3-edge-coloring of a graph whose non-isolated vertices all have
/// degree at least 4.
pub fn majority3(g: &Graph) -> Result<EdgeColoring> {
    g.require_min_degree(4)?;
    let active: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
    if active.len() == g.vertex_count() {
        return majority3_run(g).map(|r| r.coloring);
    }
    let sub = induced_subgraph(g, &active)?;
    let local = majority3_run(&sub.graph)?.coloring;
    let mut coloring = EdgeColoring::blank(3, g.edge_count());
    for (le, &c) in local.colors().iter().enumerate() {
        coloring.set(sub.edge_map[le], c);
    }
    Ok(coloring)
}
