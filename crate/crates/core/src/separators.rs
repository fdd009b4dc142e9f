//! Separators and disjoint paths: exhaustive minimal-separator
//! enumeration, set-to-set vertex-disjoint paths with the Menger dual
//! verified internally, and the (X,Y)-separator predicate.

use crate::chordal::{check_chordal, minimal_separators_chordal, Chordality};
use crate::error::{Error, Guards};
use crate::graph::{Graph, VertexSet};

/// All minimal separators of `g`, ascending.
///
/// Chordal graphs are handled exactly at any order via their clique tree;
/// everything else is an exhaustive scan over vertex subsets, refused
/// beyond the subset guard.
pub fn minimal_separators(g: &Graph, guards: &Guards) -> Result<Vec<VertexSet>, Error> {
    if let Chordality::Chordal { maximal_cliques, .. } = check_chordal(g) {
        return Ok(minimal_separators_chordal(g, &maximal_cliques));
    }
    guards.check("minimal separator enumeration", g.order(), guards.subsets)?;
    Ok(minimal_separators_brute(g))
}

/// Subset scan: `S` is a minimal separator iff at least two components of
/// `G - S` see all of `S`.
pub(crate) fn minimal_separators_brute(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << n) {
        let s = VertexSet::from_bits(bits);
        if is_minimal_separator(g, s) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Whether at least two components of `G - S` are full (`N(C) = S`).
pub fn is_minimal_separator(g: &Graph, s: VertexSet) -> bool {
    let mut full = 0;
    for comp in g.components_within(g.vertices().difference(s)) {
        if g.neighborhood_of_set(comp) == s {
            full += 1;
            if full >= 2 {
                return true;
            }
        }
    }
    false
}

/// Whether `S` separates every vertex of `X \ S` from every vertex of
/// `Y \ S`. A vertex common to both leftovers cannot be separated from
/// itself, so it disqualifies `S`.
pub fn is_xy_separator(g: &Graph, x: VertexSet, y: VertexSet, s: VertexSet) -> bool {
    let xs = x.difference(s);
    let ys = y.difference(s);
    if xs.intersects(ys) {
        return false;
    }
    let comps = g.components_within(g.vertices().difference(s));
    for comp in comps {
        if comp.intersects(xs) && comp.intersects(ys) {
            return false;
        }
    }
    true
}

/// A maximum family of pairwise vertex-disjoint X–Y paths, each listed
/// from its X-terminal to its Y-terminal. Internally asserts the Menger
/// dual: the family size equals a minimum (X,Y)-separator found in the
/// residual network.
pub fn disjoint_paths(g: &Graph, x: VertexSet, y: VertexSet) -> Result<Vec<Vec<usize>>, Error> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::Precondition(
            "disjoint paths need non-empty terminal sets".into(),
        ));
    }
    let n = g.order();
    // vertex-capacity flow: node 2v = v_in, 2v+1 = v_out, plus source and
    // sink. Only the in->out arcs are unit; everything else is effectively
    // infinite so that a minimum arc cut consists of vertex arcs only.
    let source = 2 * n;
    let sink = 2 * n + 1;
    let inf = n as i32 + 1;
    let mut net = FlowNetwork::new(2 * n + 2);
    for v in 0..n {
        net.add_edge(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        net.add_edge(2 * u + 1, 2 * v, inf);
        net.add_edge(2 * v + 1, 2 * u, inf);
    }
    for v in x.iter() {
        net.add_edge(source, 2 * v, inf);
    }
    for v in y.iter() {
        net.add_edge(2 * v + 1, sink, inf);
    }
    let flow = net.max_flow(source, sink);

    // Menger dual from the final residual: saturated v_in -> v_out arcs
    // with v_in reachable and v_out not.
    let reachable = net.residual_reachable(source);
    let mut cut = VertexSet::EMPTY;
    for v in 0..n {
        if reachable[2 * v] && !reachable[2 * v + 1] {
            cut = cut.insert(v);
        }
    }
    if cut.len() != flow || !is_xy_separator(g, x, y, cut) {
        return Err(Error::Internal(format!(
            "Menger duality check failed: {flow} paths vs cut {cut}"
        )));
    }

    // path decomposition: walk saturated arcs from each used source edge
    let mut used_vertex = vec![false; n];
    let mut paths = Vec::new();
    for start in x.iter() {
        if net.edge_flow(source, 2 * start) == 0 {
            continue;
        }
        let mut path = vec![start];
        let mut cur = start;
        loop {
            if y.contains(cur) && net.edge_flow(2 * cur + 1, sink) > 0 {
                break;
            }
            let next = (0..n)
                .find(|&w| !used_vertex[w] && w != cur && net.edge_flow(2 * cur + 1, 2 * w) > 0)
                .ok_or_else(|| Error::Internal("flow decomposition lost a path".into()))?;
            used_vertex[next] = true;
            path.push(next);
            cur = next;
        }
        for &v in &path {
            used_vertex[v] = true;
        }
        paths.push(path);
    }
    if paths.len() != flow {
        return Err(Error::Internal(
            "flow decomposition produced the wrong number of paths".into(),
        ));
    }
    Ok(paths)
}

/// Size of a maximum family of vertex-disjoint X–Y paths.
pub fn max_disjoint_paths(g: &Graph, x: VertexSet, y: VertexSet) -> Result<usize, Error> {
    Ok(disjoint_paths(g, x, y)?.len())
}

/// A maximum family of internally vertex-disjoint x–y paths for a
/// non-adjacent pair: the terminals are shared, the interiors are not.
/// The family size equals the minimum (x,y)-separator, which never
/// contains the terminals.
pub fn internally_disjoint_paths(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<Vec<Vec<usize>>, Error> {
    if x == y || g.has_edge(x, y) {
        return Err(Error::Precondition(
            "internally disjoint paths need a distinct non-adjacent pair".into(),
        ));
    }
    let n = g.order();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let inf = n as i32 + 1;
    let mut net = FlowNetwork::new(2 * n + 2);
    for v in 0..n {
        // terminals are not cuttable
        let cap = if v == x || v == y { inf } else { 1 };
        net.add_edge(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        net.add_edge(2 * u + 1, 2 * v, inf);
        net.add_edge(2 * v + 1, 2 * u, inf);
    }
    net.add_edge(source, 2 * x, inf);
    net.add_edge(2 * y + 1, sink, inf);
    let flow = net.max_flow(source, sink);

    let reachable = net.residual_reachable(source);
    let mut cut = VertexSet::EMPTY;
    for v in 0..n {
        if v != x && v != y && reachable[2 * v] && !reachable[2 * v + 1] {
            cut = cut.insert(v);
        }
    }
    let separates = !g
        .component_of(x, g.vertices().difference(cut))
        .contains(y);
    if cut.len() != flow || !separates {
        return Err(Error::Internal(format!(
            "Menger duality check failed: {flow} paths vs cut {cut}"
        )));
    }

    // strip paths by consuming vertex-level flow
    let mut vertex_flow: std::collections::HashMap<(usize, usize), i32> =
        std::collections::HashMap::new();
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            let f = net.edge_flow(2 * u + 1, 2 * v);
            if f > 0 {
                vertex_flow.insert((u, v), f);
            }
        }
    }
    let mut paths = Vec::new();
    for _ in 0..flow {
        let mut path = vec![x];
        let mut cur = x;
        while cur != y {
            let next = g
                .neighbors(cur)
                .iter()
                .find(|&w| vertex_flow.get(&(cur, w)).copied().unwrap_or(0) > 0)
                .ok_or_else(|| Error::Internal("flow decomposition lost a path".into()))?;
            *vertex_flow.get_mut(&(cur, next)).unwrap() -= 1;
            path.push(next);
            cur = next;
        }
        paths.push(path);
    }
    Ok(paths)
}

struct FlowNetwork {
    // adjacency as (target, capacity, reverse-edge index)
    arcs: Vec<Vec<(usize, i32, usize)>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); n],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i32) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push((to, cap, rev_from));
        self.arcs[to].push((from, 0, rev_to));
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut total = 0;
        loop {
            // BFS for an augmenting path
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
            let mut seen = vec![false; self.arcs.len()];
            seen[source] = true;
            let mut queue = std::collections::VecDeque::from([source]);
            'bfs: while let Some(u) = queue.pop_front() {
                for (i, &(to, cap, _)) in self.arcs[u].iter().enumerate() {
                    if cap > 0 && !seen[to] {
                        seen[to] = true;
                        prev[to] = Some((u, i));
                        if to == sink {
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if !seen[sink] {
                return total;
            }
            // unit capacities: push one unit along the path
            let mut cur = sink;
            while cur != source {
                let (u, i) = prev[cur].unwrap();
                let (_, _, rev) = self.arcs[u][i];
                self.arcs[u][i].1 -= 1;
                self.arcs[cur][rev].1 += 1;
                cur = u;
            }
            total += 1;
        }
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &(to, cap, _) in &self.arcs[u] {
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    /// Units currently flowing along the original arc `from -> to`
    /// (the reverse arc's residual capacity).
    fn edge_flow(&self, from: usize, to: usize) -> i32 {
        for &(t, _, rev) in &self.arcs[from] {
            if t == to {
                return self.arcs[to][rev].1;
            }
        }
        0
    }
}
