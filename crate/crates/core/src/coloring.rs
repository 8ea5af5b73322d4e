use serde::{Deserialize, Serialize};

use crate::graph::{Adjacency, EdgeId, Vertex};

/// Edge colors are `1..=palette`; `0` marks an uncolored edge.
pub type Color = u32;

/// Total map from edge ids to colors in `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    palette: usize,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(palette: usize, colors: Vec<Color>) -> Self {
        EdgeColoring { palette, colors }
    }

    /// All edges uncolored.
    pub fn blank(palette: usize, edges: usize) -> Self {
        EdgeColoring {
            palette,
            colors: vec![0; edges],
        }
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.colors[e] = c;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette + 1];
        for &c in &self.colors {
            if (c as usize) < seen.len() {
                seen[c as usize] = true;
            }
        }
        seen.iter().skip(1).filter(|&&b| b).count()
    }

    /// Per-vertex color counts, `tallies[u][c - 1]`. Out-of-range and
    /// uncolored entries are skipped.
    pub fn tallies<G: Adjacency>(&self, g: &G) -> Vec<Vec<usize>> {
        (0..g.vertex_count()).map(|u| self.tally_at(g, u)).collect()
    }

    pub fn tally_at<G: Adjacency>(&self, g: &G, u: Vertex) -> Vec<usize> {
        let mut t = vec![0; self.palette];
        for &(_, e) in g.incident(u) {
            let c = self.colors[e] as usize;
            if (1..=self.palette).contains(&c) {
                t[c - 1] += 1;
            }
        }
        t
    }
}
