//! Shortest-path metric: all-pairs distances, diameter, intervals and
//! isometric subgraph tests.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest-path distances of a graph.
///
/// Unreachable pairs are a distinguished state, surfaced as `None` from
/// [`DistMatrix::dist`] so that disconnection cannot silently flow into
/// arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
    connected: bool,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`; `None` when they lie in different
    /// components.
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        let x = self.d[u * self.n + v];
        (x != UNREACHABLE).then_some(x)
    }

    /// Whether every pair is reachable (the empty graph counts as connected).
    pub fn all_reachable(&self) -> bool {
        self.connected
    }
}

/// Exact unweighted distances by one BFS per vertex.
pub fn bfs_all_pairs(g: &Graph) -> DistMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for v in g.neighbors(u) {
                if row[v] == UNREACHABLE {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    let connected = !d.contains(&UNREACHABLE);
    DistMatrix { n, d, connected }
}

/// One component (empty and single-vertex graphs count as connected).
pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    reached == n
}

/// Largest distance over all pairs. Errors on disconnected input.
pub fn diameter(g: &Graph, d: &DistMatrix) -> Result<u32, GraphError> {
    debug_assert_eq!(g.n(), d.n());
    if !d.all_reachable() {
        return Err(GraphError::Disconnected);
    }
    Ok(d.d.iter().copied().max().unwrap_or(0))
}

/// The interval `I(u,v)`: all vertices on some shortest `u,v`-path,
/// endpoints included.
pub fn interval(
    g: &Graph,
    d: &DistMatrix,
    u: usize,
    v: usize,
) -> Result<VertexSet, GraphError> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(GraphError::InvalidVertex { vertex: x, order: g.n() });
        }
    }
    let duv = d.dist(u, v).ok_or(GraphError::UnreachablePair(u, v))?;
    let members = (0..g.n())
        .filter(|&w| match (d.dist(u, w), d.dist(w, v)) {
            (Some(a), Some(b)) => a + b == duv,
            _ => false,
        })
        .collect();
    Ok(VertexSet::new(members))
}

/// Whether `s` induces a connected subgraph preserving all host distances.
/// A disconnected induced subgraph yields `false`.
pub fn is_isometric_subgraph(g: &Graph, d: &DistMatrix, s: &VertexSet) -> bool {
    debug_assert_eq!(g.n(), d.n());
    if s.check_in(g.n()).is_err() {
        return false;
    }
    let sub = match g.induced_subgraph(s) {
        Ok(sub) => sub,
        Err(_) => return false,
    };
    let sub_d = bfs_all_pairs(&sub);
    if !sub_d.all_reachable() {
        return false;
    }
    let members = s.members();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            if sub_d.dist(i, j) != d.dist(members[i], members[j]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn path_distances() {
        let g = families::path(3).unwrap();
        let d = bfs_all_pairs(&g);
        assert_eq!(d.dist(0, 2), Some(2));
        assert_eq!(d.dist(0, 0), Some(0));
    }

    #[test]
    fn complete_distances_all_one() {
        let g = families::complete(4).unwrap();
        let d = bfs_all_pairs(&g);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(d.dist(u, v), Some(1));
                }
            }
        }
    }

    #[test]
    fn edgeless_pair_unreachable() {
        let g = Graph::new(2);
        let d = bfs_all_pairs(&g);
        assert_eq!(d.dist(0, 1), None);
        assert!(!d.all_reachable());
    }

    #[test]
    fn connectivity_cases() {
        assert!(is_connected(&families::cycle(5).unwrap()));
        let two_triangles = families::disjoint_union(&[
            families::complete(3).unwrap(),
            families::complete(3).unwrap(),
        ]);
        assert!(!is_connected(&two_triangles));
        assert!(is_connected(&Graph::new(1)));
        assert!(is_connected(&Graph::new(0)));
    }

    #[test]
    fn diameters() {
        let p = families::petersen();
        assert_eq!(diameter(&p, &bfs_all_pairs(&p)).unwrap(), 2);
        let p5 = families::path(5).unwrap();
        assert_eq!(diameter(&p5, &bfs_all_pairs(&p5)).unwrap(), 4);
        let g = Graph::new(2);
        assert_eq!(diameter(&g, &bfs_all_pairs(&g)), Err(GraphError::Disconnected));
    }

    #[test]
    fn interval_on_path_and_cycles() {
        let p4 = families::path(4).unwrap();
        let d = bfs_all_pairs(&p4);
        assert_eq!(
            interval(&p4, &d, 0, 3).unwrap(),
            VertexSet::new(vec![0, 1, 2, 3])
        );

        // Both two-step routes around C4 are geodesics.
        let c4 = families::cycle(4).unwrap();
        let d = bfs_all_pairs(&c4);
        assert_eq!(
            interval(&c4, &d, 0, 2).unwrap(),
            VertexSet::new(vec![0, 1, 2, 3])
        );
    }

    #[test]
    fn interval_on_c5_matches_geodesic_enumeration() {
        // Independent oracle: enumerate all shortest paths explicitly.
        let c5 = families::cycle(5).unwrap();
        let d = bfs_all_pairs(&c5);
        let mut on_geodesic = [false; 5];
        let target = d.dist(0, 2).unwrap();
        let mut stack = vec![vec![0usize]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            if last == 2 {
                if path.len() as u32 == target + 1 {
                    for &w in &path {
                        on_geodesic[w] = true;
                    }
                }
                continue;
            }
            if path.len() as u32 > target {
                continue;
            }
            for nb in c5.neighbors(last) {
                if !path.contains(&nb) {
                    let mut next = path.clone();
                    next.push(nb);
                    stack.push(next);
                }
            }
        }
        let oracle: VertexSet = (0..5).filter(|&w| on_geodesic[w]).collect();
        assert_eq!(oracle, VertexSet::new(vec![0, 1, 2]));
        assert_eq!(interval(&c5, &d, 0, 2).unwrap(), oracle);
    }

    #[test]
    fn interval_unreachable_errors() {
        let g = Graph::new(3);
        let d = bfs_all_pairs(&g);
        assert_eq!(
            interval(&g, &d, 0, 2),
            Err(GraphError::UnreachablePair(0, 2))
        );
    }

    #[test]
    fn isometric_subgraph_cases() {
        let g = families::petersen();
        let d = bfs_all_pairs(&g);

        // Closed neighborhood of 0 is isometric: all pairwise routes go
        // through 0 with distance 2.
        let closed: VertexSet = std::iter::once(0).chain(g.neighbors(0)).collect();
        assert!(is_isometric_subgraph(&g, &d, &closed));

        // Dropping the center disconnects the neighborhood (girth 5).
        let open: VertexSet = g.neighbors(0).collect();
        assert!(!is_isometric_subgraph(&g, &d, &open));

        // The whole vertex set is trivially isometric.
        let all: VertexSet = g.vertices().collect();
        assert!(is_isometric_subgraph(&g, &d, &all));
    }

    #[test]
    fn subpath_of_odd_cycle_is_isometric() {
        // A subpath of C7 with at most 3 edges preserves distances.
        let c7 = families::cycle(7).unwrap();
        let d = bfs_all_pairs(&c7);
        assert!(is_isometric_subgraph(&c7, &d, &VertexSet::new(vec![0, 1, 2, 3])));
        // Five consecutive vertices do not: endpoints are closer the other way.
        assert!(!is_isometric_subgraph(&c7, &d, &VertexSet::new(vec![0, 1, 2, 3, 4])));
    }
}
