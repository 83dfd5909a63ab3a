//! Exact maximum clique and maximum independent set.
//!
//! Branch and bound over bitset candidate sets with a greedy-coloring upper
//! bound. Exact on every input; intended for orders up to a few dozen.

use crate::bitset::Bitset;
use crate::graph::{Graph, VertexSet};

/// Result of an exact clique-style solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub value: usize,
    pub witness: VertexSet,
}

/// Exact maximum clique with a witness.
pub fn clique_number(g: &Graph) -> CliqueResult {
    let n = g.n();
    let adj: Vec<Bitset> = (0..n).map(|u| g.neighbor_bits(u).clone()).collect();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    expand(&adj, Bitset::full(n), &mut current, &mut best);
    CliqueResult {
        value: best.len(),
        witness: VertexSet::new(best),
    }
}

/// Exact maximum independent set: a clique of the complement, witness ids
/// unchanged.
pub fn independence_number(g: &Graph) -> CliqueResult {
    clique_number(&g.complement())
}

fn expand(adj: &[Bitset], candidates: Bitset, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring of the candidate pool; the color index bounds the
    // largest clique extending `current` through that vertex.
    let order = color_order(adj, &candidates);
    let mut pool = candidates;
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        expand(adj, pool.and(&adj[v]), current, best);
        current.pop();
        pool.remove(v);
    }
}

/// Vertices of `pool` with their greedy color (1-based), in nondecreasing
/// color order. Deterministic: classes are filled in ascending vertex id.
fn color_order(adj: &[Bitset], pool: &Bitset) -> Vec<(usize, usize)> {
    let cap = pool.capacity();
    let mut classes: Vec<Bitset> = Vec::new();
    let mut out = Vec::with_capacity(pool.count());
    for v in pool.iter() {
        let k = classes
            .iter()
            .position(|c| c.and(&adj[v]).is_empty())
            .unwrap_or_else(|| {
                classes.push(Bitset::new(cap));
                classes.len() - 1
            });
        classes[k].insert(v);
    }
    for (k, class) in classes.iter().enumerate() {
        for v in class.iter() {
            out.push((v, k + 1));
        }
    }
    out.sort_by_key(|&(v, c)| (c, v));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn clique_of_complete() {
        let r = clique_number(&families::complete(6).unwrap());
        assert_eq!(r.value, 6);
        assert_eq!(r.witness.len(), 6);
    }

    #[test]
    fn clique_of_cartesian_k3_k3() {
        let k3 = families::complete(3).unwrap();
        let g = families::cartesian_product(&k3, &k3);
        assert_eq!(clique_number(&g).value, 3);
    }

    #[test]
    fn independence_of_petersen_matches_brute_force() {
        let p = families::petersen();
        // Independent oracle: scan all subsets of the ten vertices.
        let mut best = 0;
        for mask in 0u32..1 << 10 {
            let members: Vec<usize> = (0..10).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = members.iter().enumerate().all(|(i, &u)| {
                members[i + 1..].iter().all(|&v| !p.has_edge(u, v))
            });
            if ok {
                best = best.max(members.len());
            }
        }
        assert_eq!(best, 4);
        let r = independence_number(&p);
        assert_eq!(r.value, 4);
        // The witness must itself be independent.
        let w = r.witness.members();
        for (i, &u) in w.iter().enumerate() {
            for &v in &w[i + 1..] {
                assert!(!p.has_edge(u, v));
            }
        }
        // And it induces an edgeless subgraph.
        let sub = p.induced_subgraph(&r.witness).unwrap();
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn independence_of_complete_is_one() {
        assert_eq!(independence_number(&families::complete(7).unwrap()).value, 1);
    }

    #[test]
    fn clique_witness_is_a_clique() {
        for seed in 0..6u64 {
            let g = families::random_connected_graph(10, 0.5, seed);
            let r = clique_number(&g);
            let w = r.witness.members();
            assert_eq!(w.len(), r.value);
            for (i, &u) in w.iter().enumerate() {
                for &v in &w[i + 1..] {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn empty_graph_clique_zero() {
        let g = Graph::new(0);
        let r = clique_number(&g);
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }
}
