//! Seeded graph corpora and brute-force oracles shared by the integration
//! tests. Nothing here calls into the algorithms under test.

#![allow(dead_code)]

use majcolor_core::generate;
use majcolor_core::graph::{connected_components, Adjacency, Graph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Case {
    pub name: String,
    pub graph: Graph,
}

fn case(name: String, graph: Graph) -> Case {
    Case { name, graph }
}

/// Connected graphs with minimum degree `>= delta` and at most `n_max`
/// vertices, cycling through several families.
pub fn mindeg_corpus(count: usize, delta: usize, n_max: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        i += 1;
        let s = rng.gen::<u64>();
        let n = rng.gen_range(delta + 2..=n_max);
        let g = match i % 6 {
            0 => {
                let p = rng.gen_range(0.0..0.3);
                generate::random_gnp_floor(n, p, delta, s)
                    .map(|g| case(format!("gnp(n={n},p={p:.2},d>={delta},seed={s})"), g))
            }
            1 => {
                let d = rng.gen_range(delta..=(delta + 3).min(n - 1));
                let n = if (n * d) % 2 == 1 { n - 1 } else { n };
                if d >= n {
                    continue;
                }
                generate::random_regular(n, d, s)
                    .map(|g| case(format!("regular(n={n},d={d},seed={s})"), g))
            }
            2 | 5 => Ok(case(
                format!("structured(d>={delta},seed={s})"),
                structured(delta, n_max, s),
            )),
            3 => {
                let a = rng.gen_range(delta..=delta + 3);
                if 2 * a > n_max {
                    continue;
                }
                let b = rng.gen_range(a..=n_max - a);
                generate::complete_bipartite(a, b).map(|g| case(format!("K({a},{b})"), g))
            }
            _ => {
                if delta <= 2 && rng.gen_bool(0.3) {
                    generate::cycle(n).map(|g| case(format!("C{n}"), g))
                } else {
                    generate::random_mindeg(n, delta, s)
                        .map(|g| case(format!("mindeg(n={n},d>={delta},seed={s})"), g))
                }
            }
        };
        let Ok(c) = g else { continue };
        assert!(c.graph.vertex_count() <= n_max, "{}", c.name);
        assert!(c.graph.min_degree() >= delta, "{}", c.name);
        assert_eq!(connected_components(&c.graph).len(), 1, "{}", c.name);
        out.push(c);
    }
    out
}

/// A graph with a visible Gallai–Edmonds shape: a set `A`, more singleton
/// and odd-clique hangers than `|A|`, and an even clique, all attached to
/// `A`. Minimum degree `>= delta`, connected.
pub fn structured(delta: usize, n_max: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a = rng.gen_range(delta..=delta + 3);
        let singles = a + 1 + rng.gen_range(0..6);
        let cliques: Vec<usize> = (0..rng.gen_range(0..3))
            .map(|_| if rng.gen_bool(0.5) { 3 } else { 5 })
            .collect();
        let even = [0, 4, 6][rng.gen_range(0..3)];
        let n = a + singles + cliques.iter().sum::<usize>() + even;
        if n > n_max {
            continue;
        }
        let mut g = Graph::new(n);
        let a_set: Vec<Vertex> = (0..a).collect();
        let mut next = a;
        let attach = |g: &mut Graph, v: Vertex, want: usize, rng: &mut ChaCha8Rng| {
            let mut pool = a_set.clone();
            pool.shuffle(rng);
            for &w in pool.iter() {
                if g.degree(v) >= want && g.incident(v).iter().any(|&(x, _)| x < a) {
                    break;
                }
                if g.edge_between(v, w).is_none() {
                    g.add_edge(v, w).unwrap();
                }
            }
        };
        for _ in 0..singles {
            let extra = rng.gen_range(0..=a - delta);
            attach(&mut g, next, delta + extra, &mut rng);
            next += 1;
        }
        for &size in cliques.iter().chain(std::iter::once(&even)) {
            let members: Vec<Vertex> = (next..next + size).collect();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    g.add_edge(u, v).unwrap();
                }
            }
            for &u in &members {
                let want = delta.max(size);
                let extra = usize::from(rng.gen_bool(0.3));
                attach(&mut g, u, want + extra, &mut rng);
            }
            next += size;
        }
        for u in 0..a {
            for v in u + 1..a {
                if rng.gen_bool(0.3) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.min_degree() >= delta && connected_components(&g).len() == 1 {
            return g;
        }
    }
}

/// Small graphs on `1..=n_max` vertices with mixed densities; may be
/// disconnected or have isolated vertices.
pub fn small_corpus(count: usize, n_max: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=n_max);
            let p = rng.gen_range(0.1..0.9);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            case(format!("small#{i}(n={n},p={p:.2})"), g)
        })
        .collect()
}

/// Connected graph with all degrees even and an odd number of edges: a
/// Hamiltonian cycle plus edge-disjoint random cycles, with a final triangle
/// when the parity needs fixing.
pub fn eulerian_odd(n: usize, seed: u64) -> Graph {
    assert!(n >= 5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut order: Vec<Vertex> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(order[i], order[(i + 1) % n]).unwrap();
        }
        let extra = rng.gen_range(0..n);
        let mut added = 0;
        for _ in 0..1000 {
            if added >= extra && g.edge_count() % 2 == 1 {
                return g;
            }
            let len = if added >= extra {
                3
            } else {
                rng.gen_range(3..=6.min(n))
            };
            let cyc: Vec<Vertex> = order.choose_multiple(&mut rng, len).copied().collect();
            if (0..len).all(|i| g.edge_between(cyc[i], cyc[(i + 1) % len]).is_none()) {
                for i in 0..len {
                    g.add_edge(cyc[i], cyc[(i + 1) % len]).unwrap();
                }
                added += 1;
            }
        }
        // saturated before the parity came out odd; start over
    }
}

// ---- exhaustive matching oracle ----

/// Matching number and, per vertex, whether some maximum matching misses it.
pub fn brute_matching(g: &Graph) -> (usize, Vec<bool>) {
    let n = g.vertex_count();
    let mut best = 0;
    let mut records: Vec<(u64, usize)> = Vec::new();
    each_matching(g, &mut |cover, size| {
        best = best.max(size);
        records.push((cover, size));
    });
    let mut missed = vec![false; n];
    for (cover, size) in records {
        if size == best {
            for (v, m) in missed.iter_mut().enumerate() {
                if cover >> v & 1 == 0 {
                    *m = true;
                }
            }
        }
    }
    (best, missed)
}

/// Visits every matching with its set of covered vertices, branching on the
/// lowest undecided vertex.
fn each_matching(g: &Graph, f: &mut impl FnMut(u64, usize)) {
    fn rec(
        g: &Graph,
        v: usize,
        decided: u64,
        cover: u64,
        size: usize,
        f: &mut impl FnMut(u64, usize),
    ) {
        let n = g.vertex_count();
        let mut v = v;
        while v < n && decided >> v & 1 == 1 {
            v += 1;
        }
        if v == n {
            f(cover, size);
            return;
        }
        rec(g, v + 1, decided | 1 << v, cover, size, f);
        for &(w, _) in g.incident(v) {
            if decided >> w & 1 == 0 {
                let bits = 1 << v | 1 << w;
                rec(g, v + 1, decided | bits, cover | bits, size + 1, f);
            }
        }
    }
    assert!(g.vertex_count() <= 63);
    rec(g, 0, 0, 0, 0, f);
}

pub fn brute_matching_number(g: &Graph) -> usize {
    brute_matching(g).0
}

/// Induced subgraph on `keep` (any order), relabelled `0..keep.len()`.
pub fn induced(g: &Graph, keep: &[Vertex]) -> Graph {
    let mut h = Graph::new(keep.len());
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if g.edge_between(u, v).is_some() {
                h.add_edge(i, j).unwrap();
            }
        }
    }
    h
}

/// Deleting any single vertex of `comp` leaves a perfect matching.
pub fn is_factor_critical(g: &Graph, comp: &[Vertex]) -> bool {
    if comp.len().is_multiple_of(2) {
        return false;
    }
    comp.iter().all(|&x| {
        let rest: Vec<Vertex> = comp.iter().copied().filter(|&v| v != x).collect();
        2 * brute_matching_number(&induced(g, &rest)) == rest.len()
    })
}
