//! Checkers for majority and alpha-majority edge-colorings.
//!
//! All bounds are compared in integers: a color is over the majority cap at
//! `u` iff `2 * count > d(u)`, and over an `alpha = p/q` cap iff
//! `q * count > p * d(u)`. Isolated vertices are vacuously fine.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, Vertex};

/// A color used on too many edges at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub color: Color,
    pub count: usize,
    pub degree: usize,
}

/// A rational `p/q` with `0 < p/q < 1`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alpha {
    num: u64,
    den: u64,
}

impl Alpha {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 || num >= den {
            return Err(Error::InvalidParameter(format!(
                "alpha must satisfy 0 < {num}/{den} < 1"
            )));
        }
        let g = num.gcd(&den);
        Ok(Alpha {
            num: num / g,
            den: den / g,
        })
    }

    pub fn half() -> Self {
        Alpha { num: 1, den: 2 }
    }

    /// `1/k` for `k >= 2`.
    pub fn reciprocal(k: usize) -> Result<Self> {
        Alpha::new(1, k as u64)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// True iff `count <= alpha * degree`.
    pub fn admits(&self, count: usize, degree: usize) -> bool {
        self.den * count as u64 <= self.num * degree as u64
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse alpha {s:?}, expected P/Q"));
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        Alpha::new(p, q)
    }
}

/// Every edge colored, every color within `1..=palette`.
pub fn check_total(g: &Graph, c: &EdgeColoring, palette: usize) -> Result<()> {
    if c.len() != g.edge_count() {
        return Err(Error::PartialColoring(c.len().min(g.edge_count())));
    }
    for (edge, &color) in c.colors().iter().enumerate() {
        if color == 0 {
            return Err(Error::PartialColoring(edge));
        }
        if color as usize > palette {
            return Err(Error::ColorOutOfRange {
                edge,
                color,
                palette,
            });
        }
    }
    Ok(())
}

fn violations_by(
    g: &Graph,
    c: &EdgeColoring,
    palette: usize,
    within: impl Fn(usize, usize) -> bool,
) -> Result<Vec<Violation>> {
    check_total(g, c, palette)?;
    let mut out = Vec::new();
    let mut tally = vec![0usize; palette];
    for u in 0..g.vertex_count() {
        let degree = g.degree(u);
        tally.iter_mut().for_each(|t| *t = 0);
        for &(_, e) in g.incident(u) {
            tally[c.color(e) as usize - 1] += 1;
        }
        for (i, &count) in tally.iter().enumerate() {
            if !within(count, degree) {
                out.push(Violation {
                    vertex: u,
                    color: i as Color + 1,
                    count,
                    degree,
                });
            }
        }
    }
    Ok(out)
}

/// All vertices and colors with `2 * count > degree`. Empty means `c` is a
/// majority `palette`-edge-coloring.
pub fn verify_majority(g: &Graph, c: &EdgeColoring, palette: usize) -> Result<Vec<Violation>> {
    violations_by(g, c, palette, |count, degree| 2 * count <= degree)
}

/// All vertices and colors with `count > alpha * degree`.
pub fn verify_alpha(
    g: &Graph,
    c: &EdgeColoring,
    palette: usize,
    alpha: Alpha,
) -> Result<Vec<Violation>> {
    violations_by(g, c, palette, |count, degree| alpha.admits(count, degree))
}

/// Violations of the weaker `count <= ceil(degree / 2)` bound met by
/// balanced 2-colorings.
pub fn verify_balanced(g: &Graph, c: &EdgeColoring, palette: usize) -> Result<Vec<Violation>> {
    violations_by(g, c, palette, |count, degree| 2 * count <= degree + 1)
}

/// Violations of the pinned 2-coloring profile: exactly `d/2` per color off
/// the pin, `d/2 + 1` and `d/2 - 1` at the pin.
pub fn verify_pinned(g: &Graph, c: &EdgeColoring, pin: Vertex) -> Result<Vec<Violation>> {
    check_total(g, c, 2)?;
    let mut out = Vec::new();
    for (u, t) in c.tallies(g).into_iter().enumerate() {
        let d = g.degree(u);
        let ok = if u == pin {
            let (hi, lo) = (t[0].max(t[1]), t[0].min(t[1]));
            d >= 2 && hi == d / 2 + 1 && lo + 1 == d / 2
        } else {
            t[0] == t[1]
        };
        if !ok {
            let color = if t[0] >= t[1] { 1 } else { 2 };
            out.push(Violation {
                vertex: u,
                color,
                count: t[0].max(t[1]),
                degree: d,
            });
        }
    }
    Ok(out)
}
