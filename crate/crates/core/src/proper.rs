//! Proper edge-coloring with at most `Δ + 1` colors, and the vertex-splitting
//! pipelines built on top of it.
//!
//! Splitting a vertex of degree `d` into pieces of degree at most `s` and
//! properly coloring the result gives each color at most once per piece, so
//! the original vertex sees every color at most `#pieces` times.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{split_vertices, Adjacency, EdgeId, Graph, SplitMap, Vertex};

/// Misra–Gries: colors `1..=Δ+1`, no two adjacent edges share a color.
pub fn proper_edge_coloring(g: &Graph) -> EdgeColoring {
    let palette = g.max_degree() + 1;
    let mut mg = MisraGries::new(g, palette);
    for e in 0..g.edge_count() {
        mg.color_edge(e);
    }
    let colors = mg
        .color
        .iter()
        .map(|c| c.expect("every edge colored") as u32 + 1)
        .collect();
    EdgeColoring::new(palette, colors)
}

/// Number of pairs of adjacent edges sharing a color.
pub fn conflicts(g: &Graph, c: &EdgeColoring) -> usize {
    let mut total = 0;
    for u in 0..g.vertex_count() {
        let mut seen = vec![0usize; c.palette() + 1];
        for &(_, e) in g.incident(u) {
            let col = c.color(e) as usize;
            if col < seen.len() {
                total += seen[col];
                seen[col] += 1;
            }
        }
    }
    total
}

struct MisraGries<'a> {
    g: &'a Graph,
    palette: usize,
    // 0-based colors
    color: Vec<Option<usize>>,
    // at[v][c]: the edge of color c at v
    at: Vec<Vec<Option<EdgeId>>>,
}

impl<'a> MisraGries<'a> {
    fn new(g: &'a Graph, palette: usize) -> Self {
        MisraGries {
            g,
            palette,
            color: vec![None; g.edge_count()],
            at: vec![vec![None; palette]; g.vertex_count()],
        }
    }

    fn is_free(&self, v: Vertex, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn first_free(&self, v: Vertex) -> usize {
        (0..self.palette)
            .find(|&c| self.is_free(v, c))
            .expect("degree < palette leaves a free color")
    }

    fn uncolor(&mut self, e: EdgeId) {
        if let Some(c) = self.color[e].take() {
            let (a, b) = self.g.endpoints(e);
            self.at[a][c] = None;
            self.at[b][c] = None;
        }
    }

    fn paint(&mut self, e: EdgeId, c: usize) {
        let (a, b) = self.g.endpoints(e);
        debug_assert!(self.is_free(a, c) && self.is_free(b, c));
        self.color[e] = Some(c);
        self.at[a][c] = Some(e);
        self.at[b][c] = Some(e);
    }

    /// Recolors a batch of edges without transient conflicts.
    fn repaint(&mut self, batch: &[(EdgeId, usize)]) {
        for &(e, _) in batch {
            self.uncolor(e);
        }
        for &(e, c) in batch {
            self.paint(e, c);
        }
    }

    /// Maximal fan at `u` starting with the uncolored edge `e = uv`.
    fn maximal_fan(&self, u: Vertex, v: Vertex, e: EdgeId) -> Vec<(Vertex, EdgeId)> {
        let mut fan = vec![(v, e)];
        loop {
            let last = fan.last().unwrap().0;
            let next = self
                .g
                .incident(u)
                .iter()
                .find(|&&(w, f)| match self.color[f] {
                    Some(c) => self.is_free(last, c) && fan.iter().all(|&(x, _)| x != w),
                    None => false,
                });
            match next {
                Some(&entry) => fan.push(entry),
                None => return fan,
            }
        }
    }

    fn is_fan_prefix(&self, fan: &[(Vertex, EdgeId)], end: usize) -> bool {
        (1..=end).all(|j| match self.color[fan[j].1] {
            Some(c) => self.is_free(fan[j - 1].0, c),
            None => false,
        })
    }

    fn color_edge(&mut self, e: EdgeId) {
        let (u, v) = self.g.endpoints(e);
        let fan = self.maximal_fan(u, v, e);
        let c = self.first_free(u);
        let d = self.first_free(fan.last().unwrap().0);

        if c != d {
            // cd_u path: starts at u with color d, alternates d, c, d, ...
            let mut path = Vec::new();
            let (mut cur, mut want) = (u, d);
            while let Some(f) = self.at[cur][want] {
                path.push((f, if want == d { c } else { d }));
                cur = self.g.opposite(f, cur);
                want = if want == d { c } else { d };
            }
            self.repaint(&path);
        }

        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i].0, d) && self.is_fan_prefix(&fan, i))
            .expect("inverted cd-path leaves a fan prefix ending at a d-free vertex");
        let mut batch: Vec<(EdgeId, usize)> = (0..w)
            .map(|i| (fan[i].1, self.color[fan[i + 1].1].unwrap()))
            .collect();
        batch.push((fan[w].1, d));
        self.repaint(&batch);
    }
}

/// Piece sizes for splitting a vertex of degree `d` into pieces of degree 2
/// or 3. Degrees up to 3 are left whole.
pub fn mod3_parts(d: usize) -> Result<Vec<usize>> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    if d <= 3 {
        return Ok(vec![d]);
    }
    let (twos, rest) = match d % 3 {
        0 => (0, d),
        1 => (2, d - 4),
        _ => (1, d - 2),
    };
    let mut parts = vec![2; twos];
    parts.extend(std::iter::repeat_n(3, rest / 3));
    Ok(parts)
}

/// Piece sizes in `{k, k+1}` summing to `d`, using as many `k`-pieces as
/// possible. Exists whenever `d >= k(k-1)`; yields `floor(d/k)` pieces.
pub fn kk_parts(d: usize, k: usize) -> Result<Vec<usize>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be >= 2, got {k}")));
    }
    let threshold = k * (k - 1);
    if d < threshold || d == 0 {
        return Err(Error::DegreeBelowThreshold {
            degree: d,
            k,
            threshold,
        });
    }
    let (q, big) = (d / k, d % k);
    let mut parts = vec![k; q - big];
    parts.extend(std::iter::repeat_n(k + 1, big));
    Ok(parts)
}

fn split_and_color(
    g: &Graph,
    palette: usize,
    parts: impl Fn(usize) -> Result<Vec<usize>>,
) -> Result<(SplitMap, EdgeColoring)> {
    let plan = (0..g.vertex_count())
        .map(|v| match g.degree(v) {
            0 => Ok(vec![0]),
            d => parts(d),
        })
        .collect::<Result<Vec<_>>>()?;
    let split = split_vertices(g, &plan)?;
    let proper = proper_edge_coloring(&split.graph);
    if proper.palette() > palette {
        return Err(Error::InternalStructureViolation(format!(
            "split graph needs palette {} > {palette}",
            proper.palette()
        )));
    }
    let mut coloring = EdgeColoring::blank(palette, g.edge_count());
    for (orig, &s) in split.forward.iter().enumerate() {
        coloring.set(orig, proper.color(s));
    }
    Ok((split, coloring))
}

/// Majority 4-edge-coloring of a graph without degree-1 vertices. A vertex of
/// degree `d >= 4` additionally sees each color at most `(d+2)/3` times.
pub fn majority4(g: &Graph) -> Result<EdgeColoring> {
    g.require_min_degree(2)?;
    split_and_color(g, 4, mod3_parts).map(|(_, c)| c)
}

/// `1/k`-majority `(k+2)`-edge-coloring of a graph with minimum degree at
/// least `k(k-1)` (isolated vertices aside).
pub fn alpha_majority_k2(g: &Graph, k: usize) -> Result<EdgeColoring> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be >= 2, got {k}")));
    }
    g.require_min_degree(k * (k - 1))?;
    split_and_color(g, k + 2, |d| kk_parts(d, k)).map(|(_, c)| c)
}
