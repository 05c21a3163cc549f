//! Structural invariants of graph-core, as property tests.

use proptest::prelude::*;
use thinness::graph::{crown, grid, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, picks)| {
            let mut g = Graph::new(n);
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if picks[idx] {
                        g.add_edge(u, v);
                    }
                    idx += 1;
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn complement_is_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let total = g.n() * g.n().saturating_sub(1) / 2;
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), total);
    }

    #[test]
    fn union_and_join_counts(a in arb_graph(8), b in arb_graph(8)) {
        let u = a.union(&b);
        prop_assert_eq!(u.n(), a.n() + b.n());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        let j = a.join(&b);
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        // complement of a join is the union of the complements
        prop_assert_eq!(j.complement(), a.complement().union(&b.complement()));
    }

    #[test]
    fn graph_json_round_trips(g in arb_graph(10)) {
        let text = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn crown_regularity(n in 1usize..=12) {
        let (g, lab) = crown(n).unwrap();
        prop_assert_eq!(g.n(), 2 * n);
        prop_assert!((0..2 * n).all(|v| g.degree(v) == n - 1));
        prop_assert!((0..2 * n).all(|v| !g.has_edge(v, lab.mirror(v))));
    }

    #[test]
    fn grid_bipartite_by_parity(n in 1usize..=8, m in 1usize..=8) {
        let (g, lab) = grid(n, m).unwrap();
        for (u, v) in g.edges() {
            let (i, j) = lab.coord(u);
            let (k, l) = lab.coord(v);
            prop_assert_ne!((i + j) % 2, (k + l) % 2);
        }
    }
}
