//! Graph products and compositions: direct, strong, lexicographic,
//! generalized lexicographic, corona, and rooted products.
//!
//! Every constructor returns the product graph together with a
//! [`ProductVertexMap`] tying product ids to factor coordinates. Product ids
//! enumerate the inner coordinate fastest, so `(g,h)` maps to `g*n(H)+h` for
//! the uniform products. Labels record the coordinates as `"(g2,h1)"`.

use std::collections::HashMap;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};
use crate::metric::is_connected;

/// Bijection between product vertex ids and `(base, inner)` coordinate
/// pairs. For corona products the base copy itself is coordinate
/// `(i, 0)` and the gadget copy attached to it occupies `(i, 1..)`.
#[derive(Clone, Debug)]
pub struct ProductVertexMap {
    coords: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    base_order: usize,
    inner_orders: Vec<usize>,
}

/// Which factor a layer runs through (the coordinate that varies).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Base,
    Inner,
}

impl ProductVertexMap {
    fn build(spans: &[usize]) -> Self {
        let mut coords = Vec::new();
        let mut index = HashMap::new();
        for (b, &span) in spans.iter().enumerate() {
            for inner in 0..span {
                index.insert((b, inner), coords.len());
                coords.push((b, inner));
            }
        }
        ProductVertexMap {
            coords,
            index,
            base_order: spans.len(),
            inner_orders: spans.to_vec(),
        }
    }

    fn uniform(base: usize, inner: usize) -> Self {
        Self::build(&vec![inner; base])
    }

    /// Product id of `(base, inner)`.
    pub fn id(&self, base: usize, inner: usize) -> Option<usize> {
        self.index.get(&(base, inner)).copied()
    }

    /// Coordinates of a product id.
    pub fn coords(&self, id: usize) -> Option<(usize, usize)> {
        self.coords.get(id).copied()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }
}

/// The set of product vertices with one coordinate fixed: `varies` names the
/// factor that runs, `fixed` pins the other coordinate.
pub fn layer(
    map: &ProductVertexMap,
    varies: Factor,
    fixed: usize,
) -> Result<VertexSet, GraphError> {
    let valid = match varies {
        Factor::Base => map.inner_orders.iter().any(|&s| fixed < s),
        Factor::Inner => fixed < map.base_order,
    };
    if !valid {
        return Err(GraphError::InvalidCoordinate);
    }
    let members = map
        .coords
        .iter()
        .enumerate()
        .filter(|&(_, &(b, i))| match varies {
            Factor::Base => i == fixed,
            Factor::Inner => b == fixed,
        })
        .map(|(id, _)| id)
        .collect();
    Ok(VertexSet::new(members))
}

fn coordinate_labels(map: &ProductVertexMap) -> Vec<String> {
    map.coords
        .iter()
        .map(|&(g, h)| format!("(g{g},h{h})"))
        .collect()
}

fn two_factor_product(
    g: &Graph,
    h: &Graph,
    adjacent: impl Fn(usize, usize, usize, usize) -> bool,
) -> (Graph, ProductVertexMap) {
    let map = ProductVertexMap::uniform(g.n(), h.n());
    let mut out = Graph::new(map.len());
    for a in 0..map.len() {
        let (ga, ha) = map.coords(a).unwrap();
        for b in (a + 1)..map.len() {
            let (gb, hb) = map.coords(b).unwrap();
            if adjacent(ga, ha, gb, hb) {
                out.add_edge(a, b);
            }
        }
    }
    out.set_labels(coordinate_labels(&map));
    (out, map)
}

/// Direct product: `(g,h) ~ (g',h')` iff both coordinates move along edges.
pub fn direct_product(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    two_factor_product(g, h, |ga, ha, gb, hb| g.has_edge(ga, gb) && h.has_edge(ha, hb))
}

/// Strong product: one coordinate may stand still while the other moves, or
/// both move along edges.
pub fn strong_product(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    two_factor_product(g, h, |ga, ha, gb, hb| {
        (g.has_edge(ga, gb) && ha == hb)
            || (ga == gb && h.has_edge(ha, hb))
            || (g.has_edge(ga, gb) && h.has_edge(ha, hb))
    })
}

/// Lexicographic product: an edge in the base connects whole fibers; inside
/// a fiber the inner graph rules.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    two_factor_product(g, h, |ga, ha, gb, hb| {
        g.has_edge(ga, gb) || (ga == gb && h.has_edge(ha, hb))
    })
}

/// Generalized lexicographic product: vertex `i` of the base expands to
/// `parts[i]`, and each base edge becomes a complete join between the two
/// expanded graphs.
pub fn generalized_lexicographic(
    g: &Graph,
    parts: &[Graph],
) -> Result<(Graph, ProductVertexMap), GraphError> {
    if parts.len() != g.n() {
        return Err(GraphError::ArityMismatch {
            expected: g.n(),
            got: parts.len(),
        });
    }
    let spans: Vec<usize> = parts.iter().map(|p| p.n()).collect();
    let map = ProductVertexMap::build(&spans);
    let mut out = Graph::new(map.len());
    for a in 0..map.len() {
        let (ga, ha) = map.coords(a).unwrap();
        for b in (a + 1)..map.len() {
            let (gb, hb) = map.coords(b).unwrap();
            let adjacent = if ga == gb {
                parts[ga].has_edge(ha, hb)
            } else {
                g.has_edge(ga, gb)
            };
            if adjacent {
                out.add_edge(a, b);
            }
        }
    }
    out.set_labels(coordinate_labels(&map));
    Ok((out, map))
}

/// Corona: every base vertex gets its own copy of `h` and is joined to all
/// of it. `h` may be disconnected.
pub fn corona(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    corona_with(g, &vec![h.clone(); g.n()]).expect("gadget count matches base order")
}

/// Corona with a distinct gadget per base vertex.
pub fn corona_with(
    g: &Graph,
    gadgets: &[Graph],
) -> Result<(Graph, ProductVertexMap), GraphError> {
    if gadgets.len() != g.n() {
        return Err(GraphError::ArityMismatch {
            expected: g.n(),
            got: gadgets.len(),
        });
    }
    let spans: Vec<usize> = gadgets.iter().map(|h| 1 + h.n()).collect();
    let map = ProductVertexMap::build(&spans);
    let mut out = Graph::new(map.len());
    for (u, v) in g.edges() {
        out.add_edge(map.id(u, 0).unwrap(), map.id(v, 0).unwrap());
    }
    for (i, h) in gadgets.iter().enumerate() {
        let base = map.id(i, 0).unwrap();
        for hv in 0..h.n() {
            out.add_edge(base, map.id(i, hv + 1).unwrap());
        }
        for (x, y) in h.edges() {
            out.add_edge(map.id(i, x + 1).unwrap(), map.id(i, y + 1).unwrap());
        }
    }
    let labels = map
        .coords
        .iter()
        .map(|&(g, inner)| {
            if inner == 0 {
                format!("g{g}")
            } else {
                format!("(g{},h{})", g, inner - 1)
            }
        })
        .collect();
    out.set_labels(labels);
    Ok((out, map))
}

/// A connected gadget with a distinguished root vertex, ready for the rooted
/// product.
#[derive(Clone, Debug)]
pub struct RootedSpec {
    pub base: Graph,
    pub gadget: Graph,
    pub root: usize,
}

impl RootedSpec {
    pub fn new(base: Graph, gadget: Graph, root: usize) -> Result<Self, GraphError> {
        if root >= gadget.n() {
            return Err(GraphError::InvalidVertex {
                vertex: root,
                order: gadget.n(),
            });
        }
        if !is_connected(&gadget) || gadget.n() == 0 {
            return Err(GraphError::DisconnectedGadget);
        }
        Ok(RootedSpec { base, gadget, root })
    }
}

/// Rooted product: one gadget copy per base vertex, the copy's root
/// identified with that vertex. Coordinate `(i, root)` is base vertex `i`.
pub fn rooted_product(spec: &RootedSpec) -> (Graph, ProductVertexMap) {
    let g = &spec.base;
    let h = &spec.gadget;
    let map = ProductVertexMap::uniform(g.n(), h.n());
    let mut out = Graph::new(map.len());
    for (u, v) in g.edges() {
        out.add_edge(map.id(u, spec.root).unwrap(), map.id(v, spec.root).unwrap());
    }
    for i in 0..g.n() {
        for (x, y) in h.edges() {
            out.add_edge(map.id(i, x).unwrap(), map.id(i, y).unwrap());
        }
    }
    out.set_labels(coordinate_labels(&map));
    (out, map)
}
