//! Exact canonical forms for small graphs and an enumerator of connected
//! graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::metric::is_connected;

/// Isomorphism certificate: two graphs of order at most 16 have equal forms
/// exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

const MAX_CANON_N: usize = 16;

/// Minimum adjacency encoding over all vertex orderings, found by
/// backtracking with prefix pruning. Exact but exponential; capped at
/// order 16.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(GraphError::TooLarge(n));
    }
    let total_bits = n * (n - 1) / 2;
    if total_bits == 0 {
        return Ok(CanonicalForm { bytes: vec![n as u8] });
    }

    // Bits are packed most significant first into a u128; placing vertex k
    // appends its adjacencies to the k already-placed vertices.
    let mut ctx = Canonizer {
        g,
        n,
        best: initial_encoding(g),
        perm: Vec::with_capacity(n),
        used: vec![false; n],
    };
    ctx.search(0, 0);

    let mut bytes = vec![n as u8];
    for chunk in 0..total_bits.div_ceil(8) {
        let shift = 128 - 8 * (chunk + 1);
        bytes.push((ctx.best >> shift) as u8);
    }
    Ok(CanonicalForm { bytes })
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    best: u128,
    perm: Vec<usize>,
    used: Vec<bool>,
}

fn initial_encoding(g: &Graph) -> u128 {
    // Any ordering yields a valid upper bound; sorting by degree usually
    // starts close to the minimum.
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut bits: u128 = 0;
    let mut pos = 0;
    for k in 1..n {
        for i in 0..k {
            pos += 1;
            if g.has_edge(order[i], order[k]) {
                bits |= 1u128 << (128 - pos);
            }
        }
    }
    bits
}

impl Canonizer<'_> {
    fn search(&mut self, bits: u128, bit_len: usize) {
        let k = self.perm.len();
        if k == self.n {
            if bits < self.best {
                self.best = bits;
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut next = bits;
            let mut len = bit_len;
            for i in 0..k {
                len += 1;
                if self.g.has_edge(self.perm[i], v) {
                    next |= 1u128 << (128 - len);
                }
            }
            // Compare the prefix against the incumbent; larger prefixes
            // cannot produce the minimum.
            if len > 0 {
                let mask = if len == 128 {
                    u128::MAX
                } else {
                    !((1u128 << (128 - len)) - 1)
                };
                if next > self.best & mask {
                    continue;
                }
            }
            self.used[v] = true;
            self.perm.push(v);
            self.search(next, len);
            self.perm.pop();
            self.used[v] = false;
        }
    }
}

/// One representative per isomorphism class of connected graphs of order
/// `n <= 6`, in certificate order.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > 6 {
        return Err(GraphError::InvalidParameter(
            "enumeration supports orders 1 through 6".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges);
        if !is_connected(&g) {
            continue;
        }
        let form = canonical_form(&g).expect("order <= 6");
        classes.entry(form).or_insert(g);
    }
    Ok(classes.into_values().collect())
}
