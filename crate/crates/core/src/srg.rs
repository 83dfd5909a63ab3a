//! Maximal distance, mutual maximal distance, and the strong resolving graph.

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};
use crate::metric::DistMatrix;

/// `u` is maximally distant from `v` when no neighbor of `u` is strictly
/// farther from `v` than `u` itself.
pub fn is_maximally_distant(
    g: &Graph,
    d: &DistMatrix,
    u: usize,
    v: usize,
) -> Result<bool, GraphError> {
    if !d.all_reachable() {
        return Err(GraphError::Disconnected);
    }
    for x in [u, v] {
        if x >= g.n() {
            return Err(GraphError::InvalidVertex { vertex: x, order: g.n() });
        }
    }
    let duv = d.dist(u, v).expect("connected graph");
    Ok(g
        .neighbors(u)
        .all(|w| d.dist(v, w).expect("connected graph") <= duv))
}

/// Mutually maximally distant: each endpoint is maximally distant from the
/// other. Requires `u != v`.
pub fn is_mmd(g: &Graph, d: &DistMatrix, u: usize, v: usize) -> Result<bool, GraphError> {
    if u == v {
        return Err(GraphError::InvalidParameter(
            "mutual maximal distance needs two distinct vertices".into(),
        ));
    }
    Ok(is_maximally_distant(g, d, u, v)? && is_maximally_distant(g, d, v, u)?)
}

/// The strong resolving graph: same vertex set, edges exactly the mutually
/// maximally distant pairs. Labels of the input are carried over.
pub fn strong_resolving_graph(g: &Graph) -> Result<Graph, GraphError> {
    let d = crate::metric::bfs_all_pairs(g);
    if !d.all_reachable() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    let mut sr = Graph::new(n);
    // `u` maximally distant from `v`, cached per ordered pair.
    let mut md = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                md[u * n + v] = is_maximally_distant(g, &d, u, v)?;
            }
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if md[u * n + v] && md[v * n + u] {
                sr.add_edge(u, v);
            }
        }
    }
    if let Some(labels) = g.labels() {
        sr.set_labels(labels.to_vec());
    }
    Ok(sr)
}

/// Vertices whose open neighborhood induces a complete graph. An isolated
/// vertex qualifies vacuously.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices()
        .filter(|&u| {
            let nb: Vec<usize> = g.neighbors(u).collect();
            nb.iter()
                .enumerate()
                .all(|(i, &x)| nb[i + 1..].iter().all(|&y| g.has_edge(x, y)))
        })
        .collect()
}
