//! Simple undirected graphs over dense vertex indices `0..n`, with the
//! bitset vertex sets that every other module works on.
//!
//! Graphs are immutable after construction and cheap to clone; all set
//! machinery is backed by a single `u64`, which caps the order at 64
//! vertices. That is far above every search guard in this crate.

use std::fmt;

use crate::error::Error;

/// Hard cap on the number of vertices; vertex sets are single-word bitsets.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices of some graph, stored as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[must_use]
    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph: no loops, no parallel edges, vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_mut(u, v);
            }
        }
        g
    }

    /// The path on `n` vertices, `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge_mut(v - 1, v);
        }
        g
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge_mut(n - 1, 0);
        g
    }

    /// The wheel `W_{n-1}`: vertex 0 adjacent to a cycle on `1..n`.
    pub fn wheel(n: usize) -> Self {
        assert!(n >= 4);
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge_mut(0, v);
            let w = if v == n - 1 { 1 } else { v + 1 };
            g.add_edge_mut(v, w);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::Domain(format!(
                "graph order {n} exceeds the {MAX_VERTICES}-vertex representation limit"
            )));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if g.has_edge(u, v) {
                return Err(Error::Domain(format!("duplicate edge {{{u},{v}}}")));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub(crate) fn remove_edge_mut(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbourhood of a whole set, excluding the set itself.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out & !s.bits())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            // bits strictly above u
            let mut later = self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while later != 0 {
                let v = later.trailing_zeros() as usize;
                later &= later - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Adds the edge `{u,v}` to a copy of the graph.
    #[must_use]
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge_mut(u, v);
        g
    }

    /// Keeps only edges with both endpoints inside `s`; order is preserved,
    /// so vertex indices still refer to the original graph.
    #[must_use]
    pub fn induced_keep(&self, s: VertexSet) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in s.iter() {
            g.adj[v] = self.adj[v] & s.bits();
        }
        g
    }

    /// The induced subgraph on `s`, relabeled to dense indices in the
    /// ascending order of `s`.
    #[must_use]
    pub fn induced_relabel(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_mut(i, j);
                }
            }
        }
        g
    }

    /// Deletes a vertex, shifting higher indices down by one.
    #[must_use]
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let map = |u: usize| if u > v { u - 1 } else { u };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge_mut(map(a), map(b));
            }
        }
        g
    }

    /// Deletes an edge.
    #[must_use]
    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge_mut(u, v);
        g
    }

    /// Contracts the edge `{u,v}`: the merged vertex takes the smaller
    /// index, the larger one disappears and higher indices shift down.
    #[must_use]
    pub fn contract_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(self.has_edge(u, v));
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let map = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let (x, y) = (map(a), map(b));
            if x != y && !g.has_edge(x, y) {
                g.add_edge_mut(x, y);
            }
        }
        g
    }

    /// Connected component containing `v`, restricted to `allowed`.
    pub fn component_of(&self, v: usize, allowed: VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(v));
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            next &= allowed.bits() & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of the whole graph, ascending by least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = within;
        while let Some(v) = left.min() {
            let comp = self.component_of(v, within);
            out.push(comp);
            left = left.difference(comp);
        }
        out
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(self.vertices())
    }

    /// At least 3 vertices, connected, and `G - v` connected for every `v`.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|v| self.is_connected_set(self.vertices().remove(v)))
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Augmented connected components `G[V(C) ∪ S]` for `C` a component of
    /// `G - S`, as (vertex set, induced graph over the same index space).
    pub fn augmented_components(&self, s: VertexSet) -> Vec<AugmentedComponent> {
        self.components_within(self.vertices().difference(s))
            .into_iter()
            .map(|comp| {
                let verts = comp.union(s);
                AugmentedComponent {
                    component: comp,
                    vertices: verts,
                    graph: self.induced_keep(verts),
                }
            })
            .collect()
    }

    /// Number of connected components of `G - S`.
    pub fn connectivity_degree(&self, s: VertexSet) -> usize {
        self.components_within(self.vertices().difference(s)).len()
    }

    /// BFS distances from `v` (usize::MAX when unreachable).
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// One component of `G - S` together with `S`, in the coordinates of `G`.
#[derive(Clone, Debug)]
pub struct AugmentedComponent {
    /// The bare component `C` of `G - S`.
    pub component: VertexSet,
    /// `V(C) ∪ S`.
    pub vertices: VertexSet,
    /// `G[V(C) ∪ S]`, over the original index space.
    pub graph: Graph,
}

/// The lexicographic product `G · H`: vertex `(u, v)` is the index
/// `u * |V(H)| + v`, and `(u,v) ~ (w,z)` iff `u ~ w` in `G`, or `u = w`
/// and `v ~ z` in `H`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph, Error> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::Domain(
            "lexicographic product needs two non-empty graphs".into(),
        ));
    }
    let (gn, hn) = (g.order(), h.order());
    let n = gn
        .checked_mul(hn)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or_else(|| {
            Error::Domain(format!(
                "product order {gn}*{hn} exceeds the {MAX_VERTICES}-vertex limit"
            ))
        })?;
    let mut p = Graph::empty(n);
    for u in 0..gn {
        for w in u..gn {
            if u == w {
                for (v, z) in h.edges() {
                    p.add_edge_mut(u * hn + v, u * hn + z);
                }
            } else if g.has_edge(u, w) {
                for v in 0..hn {
                    for z in 0..hn {
                        p.add_edge_mut(u * hn + v, w * hn + z);
                    }
                }
            }
        }
    }
    Ok(p)
}
