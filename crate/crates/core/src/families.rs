//! Named graphs and parameterized constructions used across the test and
//! verification harnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::metric::is_connected;

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Graph with `n` vertices and no edges.
pub fn edgeless(n: usize) -> Graph {
    Graph::new(n)
}

pub fn complete_bipartite(r: usize, t: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&[r, t])
}

/// Parts in the given order; vertices are numbered part by part.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(GraphError::InvalidParameter(
            "multipartite parts must be non-empty".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::new(n);
    let mut offsets = vec![0usize];
    for &p in parts {
        offsets.push(offsets.last().unwrap() + p);
    }
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            for u in offsets[i]..offsets[i + 1] {
                for v in offsets[j]..offsets[j + 1] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes
/// `i -- i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Disjoint union, relabeling each summand after the previous ones.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let n = graphs.iter().map(Graph::n).sum();
    let mut g = Graph::new(n);
    let mut offset = 0;
    for part in graphs {
        for (u, v) in part.edges() {
            g.add_edge(offset + u, offset + v);
        }
        offset += part.n();
    }
    g
}

/// Cartesian product, used as a comparison fixture in isomorphism checks.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.n();
    let mut out = Graph::new(g.n() * hn);
    for gv in 0..g.n() {
        for hv in 0..hn {
            let a = gv * hn + hv;
            for hw in h.neighbors(hv) {
                if hw > hv {
                    out.add_edge(a, gv * hn + hw);
                }
            }
            for gw in g.neighbors(gv) {
                if gw > gv {
                    out.add_edge(a, gw * hn + hv);
                }
            }
        }
    }
    out
}

/// One step of the incremental tree construction: a new path attaches by an
/// edge from its `path_vertex` (an internal position on the new path) to
/// `target` in the tree built so far.
#[derive(Clone, Debug)]
pub struct TreeAttachment {
    pub target: usize,
    pub path_vertex: usize,
}

/// Recipe for a tree built from paths: the first path stands alone, each
/// following one attaches per [`TreeAttachment`]. Step two must target an
/// internal vertex of the starting path; later steps must target a vertex
/// whose degree already exceeds two. A valid recipe with `r` paths yields a
/// tree with exactly `2r` leaves.
#[derive(Clone, Debug)]
pub struct TreeTSpec {
    pub path_orders: Vec<usize>,
    pub attachments: Vec<TreeAttachment>,
}

pub fn tree_t(spec: &TreeTSpec) -> Result<Graph, GraphError> {
    if spec.path_orders.is_empty() {
        return Err(GraphError::InvalidSpec("at least one path required".into()));
    }
    if spec.path_orders.iter().any(|&p| p < 3) {
        return Err(GraphError::InvalidSpec("every path needs order >= 3".into()));
    }
    if spec.attachments.len() + 1 != spec.path_orders.len() {
        return Err(GraphError::InvalidSpec(format!(
            "{} paths need {} attachments, got {}",
            spec.path_orders.len(),
            spec.path_orders.len() - 1,
            spec.attachments.len()
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..spec.path_orders[0]).map(|i| (i - 1, i)).collect();
    let mut order = spec.path_orders[0];
    let mut degree = vec![0usize; order];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    for (step, (att, &porder)) in spec
        .attachments
        .iter()
        .zip(&spec.path_orders[1..])
        .enumerate()
    {
        if att.target >= order {
            return Err(GraphError::InvalidSpec(format!(
                "attachment target {} outside the tree built so far",
                att.target
            )));
        }
        if att.path_vertex == 0 || att.path_vertex == porder - 1 {
            return Err(GraphError::InvalidSpec(
                "new path must attach at one of its internal vertices".into(),
            ));
        }
        let required = if step == 0 { 2 } else { 3 };
        if degree[att.target] < required {
            return Err(GraphError::InvalidSpec(format!(
                "attachment target {} has degree {}, needs at least {}",
                att.target, degree[att.target], required
            )));
        }
        let base = order;
        for i in 1..porder {
            edges.push((base + i - 1, base + i));
        }
        edges.push((att.target, base + att.path_vertex));
        order += porder;
        degree.resize(order, 0);
        for &(u, v) in &edges[edges.len() - porder..] {
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    Ok(Graph::from_edges(order, &edges))
}

/// Star of `q` four-cycles and `t - q` two-vertex paths around a hub vertex,
/// where `q = r - t`. Realizes a graph whose general position number is `r`
/// while the clique number of its strong resolving graph is `t`. The copy
/// counts force `t <= r <= 2t`.
pub fn realization_gadget(r: usize, t: usize) -> Result<Graph, GraphError> {
    if t < 2 || r < t {
        return Err(GraphError::InvalidParameter(
            "realization gadget needs r >= t >= 2".into(),
        ));
    }
    let q = r - t;
    if q > t {
        return Err(GraphError::InvalidParameter(format!(
            "realization gadget for (r={r}, t={t}) would need {q} four-cycles \
             and t-q = {} two-vertex paths; it requires r <= 2t",
            t as isize - q as isize
        )));
    }
    // Hub is vertex 0; each copy hangs off it by a single edge.
    let mut g = Graph::new(1 + 4 * q + 2 * (t - q));
    let mut next = 1;
    for _ in 0..q {
        let (a, b, c, dd) = (next, next + 1, next + 2, next + 3);
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(c, dd);
        g.add_edge(dd, a);
        g.add_edge(0, a);
        next += 4;
    }
    for _ in 0..(t - q) {
        let (p, p2) = (next, next + 1);
        g.add_edge(p, p2);
        g.add_edge(0, p);
        next += 2;
    }
    Ok(g)
}

/// A complete graph `K_r` plus a root joined to exactly `t` of its vertices,
/// for `2 <= t <= r-2`. Returns the graph and the root id.
pub fn rooted_clique_gadget(r: usize, t: usize) -> Result<(Graph, usize), GraphError> {
    if t < 2 || t + 2 > r {
        return Err(GraphError::InvalidParameter(
            "rooted clique gadget needs 2 <= t <= r - 2".into(),
        ));
    }
    let mut g = Graph::new(r + 1);
    for u in 0..r {
        for v in (u + 1)..r {
            g.add_edge(u, v);
        }
    }
    for v in 0..t {
        g.add_edge(r, v);
    }
    Ok((g, r))
}

/// Uniform random labeled tree from a random sequence, deterministic per
/// seed.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "tree needs at least one vertex");
    if n == 1 {
        return Graph::new(1);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    // Standard decoding: repeatedly join the smallest leaf to the next
    // sequence entry.
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in &seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, &edges)
}

/// Erdős–Rényi sample conditioned on connectivity by resampling,
/// deterministic per seed. After many failures a random spanning tree is
/// overlaid to force connectivity.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if is_connected(&g) {
            return g;
        }
    }
    let mut g = random_tree(n, rng.gen());
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn named_graph_shapes() {
        assert_eq!(complete_multipartite(&[3, 2]).unwrap().edge_count(), 6);
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        // Girth 5: no triangles or four-cycles through vertex pairs.
        for (u, v) in p.edges() {
            let common = p.neighbor_bits(u).and(p.neighbor_bits(v));
            assert!(common.is_empty());
        }
        for u in 0..10 {
            for v in 0..10 {
                if u < v && !p.has_edge(u, v) {
                    assert!(p.neighbor_bits(u).and(p.neighbor_bits(v)).count() <= 1);
                }
            }
        }
    }

    #[test]
    fn c4_is_k22() {
        assert_eq!(
            canonical_form(&cycle(4).unwrap()).unwrap(),
            canonical_form(&complete_bipartite(2, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn tree_family_leaf_counts() {
        // One path: just that path, two leaves.
        let t1 = tree_t(&TreeTSpec {
            path_orders: vec![5],
            attachments: vec![],
        })
        .unwrap();
        assert_eq!(
            canonical_form(&t1).unwrap(),
            canonical_form(&path(5).unwrap()).unwrap()
        );

        // Two three-vertex paths joined center to center: four leaves.
        let t2 = tree_t(&TreeTSpec {
            path_orders: vec![3, 3],
            attachments: vec![TreeAttachment { target: 1, path_vertex: 1 }],
        })
        .unwrap();
        assert_eq!(t2.n(), 6);
        let leaves = t2.vertices().filter(|&v| t2.degree(v) == 1).count();
        assert_eq!(leaves, 4);

        // Degree constraint: later paths must target a branching vertex.
        for (spec, r) in [
            (
                TreeTSpec {
                    path_orders: vec![4, 3, 3],
                    attachments: vec![
                        TreeAttachment { target: 1, path_vertex: 1 },
                        TreeAttachment { target: 1, path_vertex: 1 },
                    ],
                },
                3,
            ),
            (
                TreeTSpec {
                    path_orders: vec![5, 4, 3],
                    attachments: vec![
                        TreeAttachment { target: 2, path_vertex: 2 },
                        TreeAttachment { target: 2, path_vertex: 1 },
                    ],
                },
                3,
            ),
        ] {
            let t = tree_t(&spec).unwrap();
            let leaves = t.vertices().filter(|&v| t.degree(v) == 1).count();
            assert_eq!(leaves, 2 * r);
            assert!(is_connected(&t));
            assert_eq!(t.edge_count(), t.n() - 1);
        }
    }

    #[test]
    fn tree_family_rejects_bad_attachments() {
        // Attaching to a leaf of the starting path is not allowed.
        let err = tree_t(&TreeTSpec {
            path_orders: vec![3, 3],
            attachments: vec![TreeAttachment { target: 0, path_vertex: 1 }],
        })
        .unwrap_err();
        assert!(matches!(err, GraphError::InvalidSpec(_)));

        // The new path cannot attach at one of its own leaves.
        let err = tree_t(&TreeTSpec {
            path_orders: vec![3, 3],
            attachments: vec![TreeAttachment { target: 1, path_vertex: 0 }],
        })
        .unwrap_err();
        assert!(matches!(err, GraphError::InvalidSpec(_)));

        // A third path needs a target of degree > 2.
        let err = tree_t(&TreeTSpec {
            path_orders: vec![5, 3, 3],
            attachments: vec![
                TreeAttachment { target: 1, path_vertex: 1 },
                TreeAttachment { target: 3, path_vertex: 1 },
            ],
        })
        .unwrap_err();
        assert!(matches!(err, GraphError::InvalidSpec(_)));
    }

    #[test]
    fn realization_gadget_shapes() {
        let g = realization_gadget(3, 2).unwrap();
        assert_eq!(g.n(), 7); // hub + one C4 + one P2

        let g = realization_gadget(2, 2).unwrap();
        assert_eq!(g.n(), 5); // hub + two P2s: a path on five vertices
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&path(5).unwrap()).unwrap()
        );

        assert!(realization_gadget(5, 2).is_err()); // would need -1 copies
        assert!(realization_gadget(2, 1).is_err());
    }

    #[test]
    fn rooted_clique_gadget_shapes() {
        let (g, root) = rooted_clique_gadget(5, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(root, 5);
        assert_eq!(g.degree(root), 2);
        assert!(rooted_clique_gadget(4, 3).is_err());
    }

    #[test]
    fn random_generators_deterministic_and_connected() {
        let t = random_tree(9, 42);
        assert_eq!(t.edge_count(), 8);
        assert!(is_connected(&t));
        assert_eq!(t, random_tree(9, 42));

        let g = random_connected_graph(8, 0.4, 7);
        assert!(is_connected(&g));
        assert_eq!(g, random_connected_graph(8, 0.4, 7));
    }
}
