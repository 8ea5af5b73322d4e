//! `1/k`-majority `(k+1)`-edge-colorings by random coloring plus local
//! resampling.
//!
//! A vertex `u` is bad when some color appears on more than `d(u)/k` of its
//! edges. While a bad vertex exists, the smallest-id one has all its incident
//! edges recolored uniformly at random.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResampleConfig {
    pub k: usize,
    pub max_rounds: usize,
    pub seed: u64,
}

impl ResampleConfig {
    /// `max_rounds` defaults to `1000 * n`.
    pub fn new(g: &Graph, k: usize, seed: u64) -> Self {
        ResampleConfig {
            k,
            max_rounds: 1000 * g.vertex_count().max(1),
            seed,
        }
    }

    pub fn with_max_rounds(mut self, max_rounds: usize) -> Self {
        self.max_rounds = max_rounds;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::InvalidParameter(format!(
                "k must be >= 2, got {}",
                self.k
            )));
        }
        if self.max_rounds == 0 {
            return Err(Error::InvalidParameter("max_rounds must be >= 1".into()));
        }
        Ok(())
    }
}

fn draw(rng: &mut ChaCha8Rng, palette: usize) -> Color {
    rng.gen_range(1..=palette as Color)
}

/// Uniform independent colors in `1..=k+1`, reproducible from `seed`.
pub fn random_coloring(g: &Graph, k: usize, seed: u64) -> EdgeColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    initial(g, k + 1, &mut rng)
}

fn initial(g: &Graph, palette: usize, rng: &mut ChaCha8Rng) -> EdgeColoring {
    let colors = (0..g.edge_count()).map(|_| draw(rng, palette)).collect();
    EdgeColoring::new(palette, colors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResampleOutcome {
    pub coloring: EdgeColoring,
    /// Vertices whose edges were resampled, in order.
    pub trajectory: Vec<Vertex>,
}

impl ResampleOutcome {
    pub fn rounds(&self) -> usize {
        self.trajectory.len()
    }
}

struct Tallies {
    k: usize,
    counts: Vec<Vec<usize>>,
    bad: BTreeSet<Vertex>,
}

impl Tallies {
    fn new(g: &Graph, c: &EdgeColoring, k: usize) -> Self {
        let counts = c.tallies(g);
        let mut t = Tallies {
            k,
            counts,
            bad: BTreeSet::new(),
        };
        for u in 0..g.vertex_count() {
            t.refresh(g, u);
        }
        t
    }

    fn refresh(&mut self, g: &Graph, u: Vertex) {
        let d = g.degree(u);
        if self.counts[u].iter().any(|&c| self.k * c > d) {
            self.bad.insert(u);
        } else {
            self.bad.remove(&u);
        }
    }
}

/// Resamples until no vertex is bad, or fails with [`Error::Timeout`] after
/// `max_rounds` resamplings.
pub fn resample_until_valid(g: &Graph, cfg: &ResampleConfig) -> Result<ResampleOutcome> {
    cfg.validate()?;
    let palette = cfg.k + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut coloring = initial(g, palette, &mut rng);
    let mut tallies = Tallies::new(g, &coloring, cfg.k);
    let mut trajectory = Vec::new();

    while let Some(&u) = tallies.bad.iter().next() {
        if trajectory.len() == cfg.max_rounds {
            return Err(Error::Timeout(cfg.max_rounds));
        }
        trajectory.push(u);
        for &(w, e) in g.incident(u) {
            let old = coloring.color(e) as usize - 1;
            let new = draw(&mut rng, palette);
            coloring.set(e, new);
            let new = new as usize - 1;
            tallies.counts[u][old] -= 1;
            tallies.counts[w][old] -= 1;
            tallies.counts[u][new] += 1;
            tallies.counts[w][new] += 1;
        }
        tallies.refresh(g, u);
        for &(w, _) in g.incident(u) {
            tallies.refresh(g, w);
        }
    }
    Ok(ResampleOutcome {
        coloring,
        trajectory,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::verify::{verify_alpha, Alpha};

    #[test]
    fn seeded_coloring_is_reproducible() {
        let g = generate::complete(9).unwrap();
        assert_eq!(random_coloring(&g, 2, 7), random_coloring(&g, 2, 7));
        assert_ne!(random_coloring(&g, 2, 7), random_coloring(&g, 2, 8));
        assert!(random_coloring(&Graph::new(4), 2, 1).is_empty());
    }

    #[test]
    fn k9_half_majority() {
        let g = generate::complete(9).unwrap();
        for seed in 0..20 {
            let cfg = ResampleConfig::new(&g, 2, seed);
            let out = resample_until_valid(&g, &cfg).unwrap();
            assert!(verify_alpha(&g, &out.coloring, 3, Alpha::half())
                .unwrap()
                .is_empty());
            assert!(out.coloring.tallies(&g).iter().flatten().all(|&c| c <= 4));
        }
    }

    #[test]
    fn c4_succeeds() {
        let g = generate::cycle(4).unwrap();
        let out = resample_until_valid(&g, &ResampleConfig::new(&g, 2, 3)).unwrap();
        assert!(out.coloring.tallies(&g).iter().flatten().all(|&c| c <= 1));
    }

    #[test]
    fn trajectory_is_reproducible() {
        let g = generate::random_regular(30, 6, 2).unwrap();
        let cfg = ResampleConfig::new(&g, 2, 99);
        assert_eq!(
            resample_until_valid(&g, &cfg),
            resample_until_valid(&g, &cfg)
        );
    }

    #[test]
    fn tight_instance_can_time_out() {
        let g = generate::complete(4).unwrap();
        let cfg = ResampleConfig::new(&g, 3, 0).with_max_rounds(1);
        match resample_until_valid(&g, &cfg) {
            Err(Error::Timeout(1)) => {}
            Ok(out) => assert!(out.rounds() <= 1),
            Err(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn rejects_bad_config() {
        let g = generate::cycle(4).unwrap();
        assert!(resample_until_valid(&g, &ResampleConfig::new(&g, 1, 0)).is_err());
        let cfg = ResampleConfig::new(&g, 2, 0).with_max_rounds(0);
        assert!(resample_until_valid(&g, &cfg).is_err());
    }
}
