//! Cross-module invariants on randomized inputs.

use genpos::*;
use proptest::prelude::*;

fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (1usize..24, any::<u64>(), 2usize..9).prop_map(|(n, seed, dens)| {
        families::random_connected_graph(n, dens as f64 / 10.0, seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distance_matrix_laws(g in arbitrary_graph()) {
        let d = bfs_all_pairs(&g);
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(d.dist(u, u), Some(0));
            for v in 0..n {
                prop_assert_eq!(d.dist(u, v), d.dist(v, u));
                prop_assert_eq!(d.dist(u, v) == Some(1), g.has_edge(u, v));
                for w in 0..n {
                    if let (Some(a), Some(b), Some(c)) =
                        (d.dist(u, v), d.dist(v, w), d.dist(u, w))
                    {
                        prop_assert!(c <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn interval_definitional_recheck(g in arbitrary_graph(), uv in any::<(u64, u64)>()) {
        let d = bfs_all_pairs(&g);
        let n = g.n();
        let (u, v) = (uv.0 as usize % n, uv.1 as usize % n);
        let i = interval(&g, &d, u, v).unwrap();
        prop_assert!(i.contains(u) && i.contains(v));
        for w in 0..n {
            let on = d.dist(u, w).unwrap() + d.dist(w, v).unwrap() == d.dist(u, v).unwrap();
            prop_assert_eq!(i.contains(w), on);
        }
    }

    #[test]
    fn whole_vertex_set_is_isometric(g in arbitrary_graph()) {
        let d = bfs_all_pairs(&g);
        let all: VertexSet = g.vertices().collect();
        prop_assert!(is_isometric_subgraph(&g, &d, &all));
    }

    #[test]
    fn complement_involution(g in arbitrary_graph()) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn gp_elementary_bounds(g in arbitrary_graph()) {
        let r = gp_number(&g).unwrap();
        let omega = clique_number(&g);
        prop_assert!(r.value >= omega.value);
        if g.n() >= 2 {
            prop_assert!(r.value >= 2);
        }
        // The witness really is a general position set of the claimed size.
        let d = bfs_all_pairs(&g);
        prop_assert_eq!(r.witness.len(), r.value);
        prop_assert!(is_general_position_set(&g, &d, &r.witness).unwrap());
    }

    #[test]
    fn gp_witness_deterministic(g in arbitrary_graph()) {
        prop_assert_eq!(gp_number(&g).unwrap(), gp_number(&g).unwrap());
    }

    #[test]
    fn srg_matches_pairwise_mmd(g in arbitrary_graph()) {
        let d = bfs_all_pairs(&g);
        let sr = strong_resolving_graph(&g).unwrap();
        for u in 0..g.n() {
            prop_assert!(!sr.has_edge(u, u));
            for v in (u + 1)..g.n() {
                prop_assert_eq!(sr.has_edge(u, v), is_mmd(&g, &d, u, v).unwrap());
            }
        }
    }
}

#[test]
fn distance_laws_hold_at_order_200() {
    let g = families::random_connected_graph(200, 0.05, 17);
    let d = bfs_all_pairs(&g);
    for u in 0..200 {
        assert_eq!(d.dist(u, u), Some(0));
        for v in (u + 1)..200 {
            assert_eq!(d.dist(u, v), d.dist(v, u));
            assert_eq!(d.dist(u, v) == Some(1), g.has_edge(u, v));
        }
    }
}

#[test]
fn true_twins_transitive_on_twin_classes() {
    // Check transitivity of the true-twin relation on graphs designed to
    // have twin classes (blow-ups of random bases).
    for seed in 0..10u64 {
        let base = families::random_connected_graph(5, 0.5, seed);
        let parts: Vec<Graph> = (0..5)
            .map(|i| families::complete(1 + (seed as usize + i) % 3).unwrap())
            .collect();
        let (g, _) = generalized_lexicographic(&base, &parts).unwrap();
        let n = g.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a != b && b != c && a != c
                        && g.are_true_twins(a, b)
                        && g.are_true_twins(b, c)
                    {
                        assert!(g.are_true_twins(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn srg_equals_complement_on_twin_free_diameter_two() {
    // Exact graph equality over the whole catalog of connected graphs of
    // order up to 6 that are true-twin-free with diameter 2.
    let mut verified = 0;
    for n in 2..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let d = bfs_all_pairs(&g);
            if diameter(&g, &d).unwrap() != 2 || g.has_true_twins() {
                continue;
            }
            let sr = strong_resolving_graph(&g).unwrap();
            assert_eq!(sr, g.complement());
            verified += 1;
        }
    }
    assert!(verified > 20, "catalog should contain many such graphs");
}

#[test]
fn simplicial_vertices_form_srg_clique() {
    for seed in 0..8u64 {
        let tree = families::random_tree(11, seed);
        let sr = strong_resolving_graph(&tree).unwrap();
        let simp = simplicial_vertices(&tree);
        let members = simp.members();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                assert!(sr.has_edge(u, v));
            }
        }
        // Corona outputs are block-like: every gadget vertex is simplicial.
        let h = families::complete(2).unwrap();
        let (c, _) = corona(&tree, &h);
        let sr = strong_resolving_graph(&c).unwrap();
        let simp = simplicial_vertices(&c);
        for (i, &u) in simp.members().iter().enumerate() {
            for &v in &simp.members()[i + 1..] {
                assert!(sr.has_edge(u, v));
            }
        }
    }
}

#[test]
fn krt_times_kn_srg_components() {
    // The strong resolving graph of K_{r,t} x K_n splits into n complete
    // graphs of order r+t; compared as a component-size multiset.
    for (r, t, n) in [(2, 2, 3), (3, 2, 3)] {
        let krt = families::complete_bipartite(r, t).unwrap();
        let kn = families::complete(n).unwrap();
        let (g, _) = direct_product(&krt, &kn);
        let sr = strong_resolving_graph(&g).unwrap();
        let comps = components(&sr);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![r + t; n]);
        for comp in comps {
            let sub = sr.induced_subgraph(&VertexSet::new(comp)).unwrap();
            let k = sub.n();
            assert_eq!(sub.edge_count(), k * (k - 1) / 2, "component is complete");
        }
    }
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        let mut comp = Vec::new();
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

#[test]
fn direct_product_srg_isomorphism_fixtures() {
    // (K_3 x K_3)_SR is the 3x3 rook graph; (K_4 x K_2)_SR is a perfect
    // matching on eight vertices.
    let k3 = families::complete(3).unwrap();
    let (g, _) = direct_product(&k3, &k3);
    let sr = strong_resolving_graph(&g).unwrap();
    let rook = families::cartesian_product(&k3, &k3);
    assert_eq!(
        canonical_form(&sr).unwrap(),
        canonical_form(&rook).unwrap()
    );

    let k4 = families::complete(4).unwrap();
    let k2 = families::complete(2).unwrap();
    let (g, _) = direct_product(&k4, &k2);
    let sr = strong_resolving_graph(&g).unwrap();
    let matching = families::cartesian_product(&families::edgeless(4), &k2);
    assert_eq!(
        canonical_form(&sr).unwrap(),
        canonical_form(&matching).unwrap()
    );
}
