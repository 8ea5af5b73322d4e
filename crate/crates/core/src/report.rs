//! Serializable coloring reports. The verdict is always recomputed from the
//! graph and the colors when a report is built.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::verify::{
    verify_alpha, verify_balanced, verify_majority, verify_pinned, Alpha, Violation,
};

/// The bound a report is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Criterion {
    /// At most half the edges at each vertex share a color.
    Majority,
    /// At most `ceil(d/2)` edges at each vertex share a color.
    Balanced,
    /// Exact halves everywhere except `d/2 + 1` / `d/2 - 1` at the pin.
    Pinned { pin: Vertex },
    /// At most `num/den` of the edges at each vertex share a color.
    Alpha { num: u64, den: u64 },
}

impl Criterion {
    pub fn check(&self, g: &Graph, c: &EdgeColoring, palette: usize) -> Result<Vec<Violation>> {
        match *self {
            Criterion::Majority => verify_majority(g, c, palette),
            Criterion::Balanced => verify_balanced(g, c, palette),
            Criterion::Pinned { pin } => verify_pinned(g, c, pin),
            Criterion::Alpha { num, den } => verify_alpha(g, c, palette, Alpha::new(num, den)?),
        }
    }
}

impl From<Alpha> for Criterion {
    fn from(a: Alpha) -> Self {
        Criterion::Alpha {
            num: a.num(),
            den: a.den(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rounds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pin: Option<usize>,
}

/// Vertex ids in `tallies`, `violations` and a pinned criterion are file ids
/// (graph id + `base`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub algorithm: String,
    /// Palette size.
    pub k: usize,
    pub criterion: Criterion,
    pub params: Params,
    /// Color of each edge, in input order.
    pub colors: Vec<Color>,
    pub tallies: BTreeMap<String, Vec<usize>>,
    pub verified: bool,
    pub violations: Vec<Violation>,
    pub millis: f64,
}

impl ColoringReport {
    pub fn build(
        algorithm: &str,
        g: &Graph,
        coloring: &EdgeColoring,
        criterion: Criterion,
        params: Params,
        base: usize,
        millis: f64,
    ) -> Result<Self> {
        let palette = coloring.palette();
        let violations: Vec<Violation> = criterion
            .check(g, coloring, palette)?
            .into_iter()
            .map(|v| Violation {
                vertex: v.vertex + base,
                ..v
            })
            .collect();
        let tallies = coloring
            .tallies(g)
            .into_iter()
            .enumerate()
            .map(|(v, t)| ((v + base).to_string(), t))
            .collect();
        let criterion = match criterion {
            Criterion::Pinned { pin } => Criterion::Pinned { pin: pin + base },
            other => other,
        };
        Ok(ColoringReport {
            algorithm: algorithm.to_string(),
            k: palette,
            criterion,
            params,
            colors: coloring.colors().to_vec(),
            tallies,
            verified: violations.is_empty(),
            violations,
            millis,
        })
    }

    pub fn coloring(&self) -> EdgeColoring {
        EdgeColoring::new(self.k, self.colors.clone())
    }

    /// Re-runs the check on `g`, ignoring the stored verdict.
    pub fn reverify(&self, g: &Graph, base: usize) -> Result<bool> {
        let criterion = match self.criterion {
            Criterion::Pinned { pin } => Criterion::Pinned { pin: pin - base },
            other => other,
        };
        Ok(criterion.check(g, &self.coloring(), self.k)?.is_empty())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algorithm : {}", self.algorithm);
        let _ = writeln!(s, "colors    : {}", self.k);
        let _ = writeln!(s, "criterion : {:?}", self.criterion);
        let _ = writeln!(s, "verified  : {}", self.verified);
        let _ = writeln!(s, "time (ms) : {:.3}", self.millis);
        let _ = writeln!(s);
        let _ = write!(s, "{:>8}", "vertex");
        for c in 1..=self.k {
            let _ = write!(s, "{:>6}", format!("c{c}"));
        }
        let _ = writeln!(s);
        let mut rows: Vec<(&String, &Vec<usize>)> = self.tallies.iter().collect();
        rows.sort_by_key(|(v, _)| v.parse::<usize>().unwrap_or(usize::MAX));
        for (v, t) in rows {
            let _ = write!(s, "{v:>8}");
            for x in t {
                let _ = write!(s, "{x:>6}");
            }
            let _ = writeln!(s);
        }
        if !self.violations.is_empty() {
            let _ = writeln!(s, "\nviolations:");
            for v in &self.violations {
                let _ = writeln!(
                    s,
                    "  vertex {} color {}: {} of {} edges",
                    v.vertex, v.color, v.count, v.degree
                );
            }
        }
        let _ = writeln!(s, "\nedge colors: {:?}", self.colors);
        s
    }
}
