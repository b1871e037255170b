mod common;

use common::{from_mask, Oracle};
use kdmv::chromatic::{chi_mu_k_exact, clique_cover_theta, verify_kdmv_coloring};
use kdmv::domination::gamma_k_exact;
use kdmv::graph::{
    all_pairs_distances, block_graphs, center_info, exact_distance_graph, girth, is_convex, parse_graph6, product,
    to_graph6, Graph, ProductKind,
};
use kdmv::visibility::{is_kdmv_set, max_kdmv};
use kdmv::{Status, VertexSet, DEFAULT_BUDGET};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = (n * (n - 1) / 2).max(1);
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |m| from_mask(n, &m))
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn with_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        prop::collection::vec(any::<bool>(), n).prop_map(move |bits| (g.clone(), (0..n).filter(|&v| bits[v]).collect()))
    })
}

fn diam(g: &Graph) -> u32 {
    all_pairs_distances(g).diameter()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_roundtrip(g in graph(12)) {
        let back = parse_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn distance_one_graph_is_the_graph(g in graph(10)) {
        let h = exact_distance_graph(&g, 1);
        prop_assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn common_neighbours_are_at_distance_two_without_short_cycles(g in graph(10)) {
        prop_assume!(girth(&g).is_none_or(|x| x >= 5));
        let sq = exact_distance_graph(&g, 2);
        for v in 0..g.n() {
            let nb = g.adj(v).to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    prop_assert!(sq.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn product_distances(g in connected(4), h in connected(4)) {
        let (dg, dh) = (all_pairs_distances(&g), all_pairs_distances(&h));
        let nh = h.n();
        let strong = all_pairs_distances(&product(ProductKind::Strong, &g, &h).unwrap());
        let cart = all_pairs_distances(&product(ProductKind::Cartesian, &g, &h).unwrap());
        for a in 0..g.n() * nh {
            for b in 0..g.n() * nh {
                let (x, y) = (dg.get(a / nh, b / nh), dh.get(a % nh, b % nh));
                prop_assert_eq!(strong.get(a, b), x.max(y));
                prop_assert_eq!(cart.get(a, b), x + y);
            }
        }
    }

    #[test]
    fn products_restrict_to_fibres(g in graph(4), h in graph(4)) {
        let nh = h.n();
        for kind in [ProductKind::Cartesian, ProductKind::Strong, ProductKind::Lex] {
            let p = product(kind, &g, &h).unwrap();
            for a in 0..g.n() {
                let fibre: VertexSet = (0..nh).map(|b| a * nh + b).collect();
                let (f, _) = p.induced(&fibre);
                prop_assert_eq!(f.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn kdmv_sets_are_hereditary((g, s) in with_subset(9), k in 1u32..4) {
        let dm = all_pairs_distances(&g);
        prop_assume!(is_kdmv_set(&g, &dm, &s, k));
        for v in s.iter() {
            prop_assert!(is_kdmv_set(&g, &dm, &s.without(v), k));
        }
        prop_assert!(is_kdmv_set(&g, &dm, &s, k + 1));
    }

    #[test]
    fn chain_and_lower_bounds(g in connected(8)) {
        let d = diam(&g).max(1);
        let mut prev = usize::MAX;
        for k in 1..=d {
            let r = chi_mu_k_exact(&g, k, DEFAULT_BUDGET).unwrap();
            prop_assert!(r.is_exact());
            prop_assert!(verify_kdmv_coloring(&g, k, &r.witness).is_ok());
            prop_assert_eq!(r.witness.num_classes(), r.value);
            prop_assert!(r.value <= prev);
            let mu = max_kdmv(&g, k, DEFAULT_BUDGET).value;
            prop_assert!(g.n().div_ceil(mu) <= r.value);
            prop_assert!(gamma_k_exact(&g, k, DEFAULT_BUDGET).unwrap().value <= r.value);
            if k == 1 {
                prop_assert_eq!(r.value, clique_cover_theta(&g, DEFAULT_BUDGET).unwrap().value);
            }
            prev = r.value;
        }
        let mv = chi_mu_k_exact(&g, 1000, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(mv.value, prev);
    }

    #[test]
    fn convex_fibres_bound_from_below(g in connected(3), h in connected(4), k in 1u32..3) {
        let p = product(ProductKind::Cartesian, &g, &h).unwrap();
        let fibre: VertexSet = (0..h.n()).collect();
        prop_assert!(is_convex(&p, &fibre));
        let whole = chi_mu_k_exact(&p, k, DEFAULT_BUDGET).unwrap();
        let part = chi_mu_k_exact(&h, k, DEFAULT_BUDGET).unwrap();
        prop_assert!(whole.value >= part.value);
    }

    #[test]
    fn solver_is_deterministic_and_label_invariant(g in graph(8), seed in any::<u64>()) {
        let a = chi_mu_k_exact(&g, 2, DEFAULT_BUDGET).unwrap();
        let b = chi_mu_k_exact(&g, 2, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(&a, &b);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut x = seed;
        for i in (1..perm.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let c = chi_mu_k_exact(&g.relabel(&perm), 2, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(a.value, c.value);
    }

    #[test]
    fn budgeted_results_are_sound(g in connected(9), budget in 1u64..200) {
        let r = chi_mu_k_exact(&g, 2, budget).unwrap();
        prop_assert!(verify_kdmv_coloring(&g, 2, &r.witness).is_ok());
        prop_assert_eq!(r.witness.num_classes(), r.value);
        let exact = Oracle::new(&g).chi(2);
        match r.status {
            Status::Exact => prop_assert_eq!(r.value, exact),
            Status::BoundsOnly { lower, upper } => {
                prop_assert!(lower <= exact && exact <= upper);
                prop_assert_eq!(upper, r.value);
            }
        }
    }
}

#[test]
fn block_graph_centers() {
    for n in 1..=9 {
        for g in block_graphs(n) {
            let c = center_info(&g, &all_pairs_distances(&g)).unwrap();
            if c.center.len() == 1 {
                assert_eq!(c.diameter, 2 * c.radius);
            } else {
                assert_eq!(c.diameter, 2 * c.radius - 1);
            }
        }
    }
}

#[test]
fn exhaustive_graph6_fibres_and_strong_distances() {
    use kdmv::graph::connected_graphs_upto;
    let all = connected_graphs_upto(8);
    assert_eq!(all.len(), 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117);
    for g in &all {
        let back = parse_graph6(&to_graph6(g)).unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert_eq!(exact_distance_graph(g, 1).edges().count(), g.edge_count());
    }
    let k2 = kdmv::graph::generate(&kdmv::graph::FamilySpec::Complete(2)).unwrap();
    for g in all.iter().filter(|g| g.n() <= 6) {
        let dg = all_pairs_distances(g);
        for kind in [ProductKind::Cartesian, ProductKind::Strong, ProductKind::Lex] {
            let p = product(kind, g, &k2).unwrap();
            for a in 0..g.n() {
                let (f, _) = p.induced(&[2 * a, 2 * a + 1].iter().collect());
                assert_eq!(f.edge_count(), 1);
            }
            let layer: VertexSet = (0..g.n()).map(|a| 2 * a).collect();
            let (f, _) = p.induced(&layer);
            assert_eq!(f.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        }
        let o = Oracle::new(&product(ProductKind::Strong, g, &k2).unwrap());
        for a in 0..2 * g.n() {
            for b in 0..2 * g.n() {
                assert_eq!(o.dist[a][b], dg.get(a / 2, b / 2).max(u32::from(a % 2 != b % 2)));
            }
        }
    }
}
