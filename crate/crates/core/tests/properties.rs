mod common;

use majcolor_core::flow::{max_flow, FlowNetwork};
use majcolor_core::graph::{connected_components, split_vertex, Adjacency, Graph};
use majcolor_core::io::{parse_edge_list, write_edge_list};
use majcolor_core::matching::{max_matching, max_matching_without};
use majcolor_core::proper::{conflicts, mod3_parts, proper_edge_coloring};
use majcolor_core::verify::{verify_alpha, verify_balanced, verify_majority, Alpha};
use majcolor_core::{
    balanced_2coloring, brute_min_colors, euler_tour, generate, majority4, random_coloring, Error,
};
use proptest::prelude::*;

use common::{brute_matching, brute_matching_number, eulerian_odd};

fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask[k] {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |mask| graph_from_mask(n, &mask))
    })
}

fn connected_with_edges(max_n: usize) -> impl Strategy<Value = Graph> {
    small_graph(max_n).prop_filter("connected, with edges", |g| {
        g.edge_count() > 0 && connected_components(g).len() == 1
    })
}

#[test]
fn petersen_matching_number() {
    let g = generate::petersen();
    assert_eq!(max_matching(&g).len(), 5);
    assert_eq!(brute_matching_number(&g), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn blossom_matches_exhaustive(g in small_graph(9).prop_filter("m <= 12", |g| g.edge_count() <= 12)) {
        let m = max_matching(&g);
        prop_assert_eq!(m.len(), brute_matching_number(&g));
        let mut seen = vec![false; g.vertex_count()];
        for &e in m.edges() {
            let (u, v) = g.endpoints(e);
            prop_assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
    }

    #[test]
    fn matching_without_vertex(g in small_graph(9), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.vertex_count());
        let m = max_matching_without(&g, v);
        prop_assert!(!m.covers(v));
        let (nu, missed) = brute_matching(&g);
        prop_assert_eq!(m.len() == nu, missed[v]);
    }

    #[test]
    fn dinic_equals_min_cut(
        nodes in 2usize..=8,
        arcs in prop::collection::vec((0usize..8, 0usize..8, 0u64..6), 0..24),
    ) {
        let mut net = FlowNetwork::new(nodes, 0, nodes - 1);
        for &(a, b, c) in &arcs {
            let (a, b) = (a % nodes, b % nodes);
            if a != b {
                net.add_arc(a, b, c);
            }
        }
        let flow = max_flow(&net);
        prop_assert!(flow.is_feasible(&net));
        // every s-side set containing the source and not the sink
        let inner = nodes - 2;
        let mut best = u64::MAX;
        for mask in 0u32..(1 << inner) {
            let side = |v: usize| v == 0 || (v != nodes - 1 && mask >> (v - 1) & 1 == 1);
            let cut: u64 = net
                .arcs()
                .iter()
                .filter(|a| side(a.from) && !side(a.to))
                .map(|a| a.cap)
                .sum();
            best = best.min(cut);
        }
        prop_assert_eq!(flow.value, best);
    }

    #[test]
    fn split_preserves_edges_and_degrees(g in connected_with_edges(8), pick in any::<prop::sample::Index>()) {
        let u = pick.index(g.vertex_count());
        let d = g.degree(u);
        let parts: Vec<usize> = if d >= 2 { vec![1, d - 1] } else { vec![d] };
        let s = split_vertex(&g, u, &parts).unwrap();
        prop_assert_eq!(s.graph.edge_count(), g.edge_count());
        prop_assert_eq!(s.graph.vertex_count(), g.vertex_count() + parts.len() - 1);
        for (i, &p) in s.pieces[u].iter().enumerate() {
            prop_assert_eq!(s.graph.degree(p), parts[i]);
        }
        let back = s.backward();
        for e in 0..g.edge_count() {
            let (a, b) = s.graph.endpoints(s.forward[e]);
            let mut got = [s.origin[a], s.origin[b]];
            let (x, y) = g.endpoints(back[s.forward[e]]);
            let mut want = [x, y];
            got.sort_unstable();
            want.sort_unstable();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn mod3_parts_are_small(d in 2usize..200) {
        let p = mod3_parts(d).unwrap();
        prop_assert_eq!(p.iter().sum::<usize>(), d);
        prop_assert!(p.iter().all(|&x| (2..=4).contains(&x)));
    }

    #[test]
    fn euler_tour_uses_each_edge_once(n in 5usize..30, seed in any::<u64>()) {
        let g = eulerian_odd(n, seed);
        let t = euler_tour(&g.to_multigraph(), 0).unwrap();
        prop_assert!(t.is_valid_for(&g.to_multigraph()));
        let mut seen = t.edges.clone();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.edge_count()).collect::<Vec<_>>());
    }

    #[test]
    fn balanced_2coloring_on_connected_graphs(g in connected_with_edges(9)) {
        let all_even = (0..g.vertex_count()).all(|v| g.degree(v) % 2 == 0);
        match balanced_2coloring(&g) {
            Ok(c) => prop_assert!(verify_balanced(&g, &c, 2).unwrap().is_empty()),
            Err(Error::PreconditionOddEvenAll) => {
                prop_assert!(all_even && g.edge_count() % 2 == 1)
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn misra_gries_is_proper(g in small_graph(9)) {
        let c = proper_edge_coloring(&g);
        prop_assert_eq!(conflicts(&g, &c), 0);
        prop_assert!(c.colors().iter().all(|&x| x >= 1 && x as usize <= g.max_degree() + 1));
    }

    #[test]
    fn majority4_on_min_degree_two(g in connected_with_edges(9).prop_filter("min degree 2", |g| g.min_degree() >= 2)) {
        let c = majority4(&g).unwrap();
        prop_assert!(verify_majority(&g, &c, 4).unwrap().is_empty());
    }

    #[test]
    fn majority_is_alpha_half(g in small_graph(8), seed in any::<u64>()) {
        let c = random_coloring(&g, 2, seed);
        prop_assert_eq!(
            verify_majority(&g, &c, 3).unwrap(),
            verify_alpha(&g, &c, 3, Alpha::half()).unwrap()
        );
    }

    #[test]
    fn edge_list_round_trip(g in small_graph(10)) {
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back.graph, g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn degree_one_vertex_has_no_majority_coloring(g in connected_with_edges(7).prop_filter("leaf, m <= 12", |g| {
        g.edge_count() <= 12 && (0..g.vertex_count()).any(|v| g.degree(v) == 1)
    })) {
        prop_assert_eq!(brute_min_colors(&g, 4), None);
    }

    #[test]
    fn odd_degree_three_needs_three(g in connected_with_edges(7).prop_filter("odd degree >= 3, no leaf, m <= 12", |g| {
        g.edge_count() <= 12
            && g.min_degree() >= 2
            && (0..g.vertex_count()).any(|v| g.degree(v) >= 3 && g.degree(v) % 2 == 1)
    })) {
        let k = brute_min_colors(&g, 4);
        prop_assert!(matches!(k, Some(3) | Some(4)), "{:?}", k);
    }
}

#[test]
fn oracle_witnesses_are_checked_independently() {
    for g in [generate::cycle(5).unwrap(), generate::complete(5).unwrap()] {
        let k = brute_min_colors(&g, 4).unwrap();
        let c = majcolor_core::oracle::find_majority_coloring(&g, k).unwrap();
        let mut t = vec![vec![0usize; k]; g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            t[u][c.color(e) as usize - 1] += 1;
            t[v][c.color(e) as usize - 1] += 1;
        }
        for (u, row) in t.iter().enumerate() {
            assert!(row.iter().all(|&x| 2 * x <= g.degree(u)));
        }
    }
}

#[test]
fn generators_are_deterministic() {
    assert_eq!(
        generate::random_mindeg(40, 5, 3),
        generate::random_mindeg(40, 5, 3)
    );
    assert_eq!(
        generate::random_regular(24, 4, 3).ok(),
        generate::random_regular(24, 4, 3).ok()
    );
    assert_eq!(eulerian_odd(12, 8), eulerian_odd(12, 8));
}
