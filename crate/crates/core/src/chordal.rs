//! Chordal graph recognition and the structure that comes with it:
//! perfect elimination orderings, maximal cliques, clique trees, and a
//! chordless-cycle witness for the negative case.

use crate::graph::{Graph, VertexSet};

/// Outcome of chordality checking.
#[derive(Clone, Debug)]
pub enum Chordality {
    /// Chordal, with a perfect elimination ordering (first vertex
    /// eliminated first) and the maximal cliques.
    Chordal {
        elimination_order: Vec<usize>,
        maximal_cliques: Vec<VertexSet>,
    },
    /// Not chordal; `hole` is a chordless cycle of length at least four,
    /// listed in cyclic order.
    NotChordal { hole: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Chordality check via maximum cardinality search. When the reverse MCS
/// order fails the elimination test the graph has a hole, which is then
/// located directly.
pub fn check_chordal(g: &Graph) -> Chordality {
    let n = g.order();
    if n == 0 {
        return Chordality::Chordal {
            elimination_order: vec![],
            maximal_cliques: vec![],
        };
    }
    // maximum cardinality search; ties broken by smallest index
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        visit_order.push(v);
        for w in g.neighbors(v).iter() {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    // reverse visit order is a perfect elimination ordering iff chordal
    let elim: Vec<usize> = visit_order.into_iter().rev().collect();
    let mut position = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        position[v] = i;
    }
    let later = |v: usize| {
        VertexSet::from_iter(g.neighbors(v).iter().filter(|&w| position[w] > position[v]))
    };
    for &v in &elim {
        let lv = later(v);
        if let Some(parent) = lv.iter().min_by_key(|&w| position[w]) {
            let rest = lv.remove(parent);
            if !rest.is_subset(g.neighbors(parent).insert(parent)) {
                return Chordality::NotChordal { hole: find_hole(g) };
            }
        }
    }
    // maximal cliques: {v} ∪ later(v), dropping the non-maximal ones
    let mut cliques: Vec<VertexSet> = elim.iter().map(|&v| later(v).insert(v)).collect();
    cliques.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut maximal: Vec<VertexSet> = Vec::new();
    for c in cliques {
        if !maximal.iter().any(|m| c.is_subset(*m)) {
            maximal.push(c);
        }
    }
    maximal.sort();
    Chordality::Chordal {
        elimination_order: elim,
        maximal_cliques: maximal,
    }
}

/// Finds a chordless cycle of length ≥ 4 in a non-chordal graph: for a path
/// u - v - w with u, w non-adjacent, a shortest u-w path avoiding the rest
/// of N[v] closes into an induced cycle through v.
fn find_hole(g: &Graph) -> Vec<usize> {
    let n = g.order();
    for v in 0..n {
        let nv = g.neighbors(v);
        for u in nv.iter() {
            for w in nv.iter() {
                if u >= w || g.has_edge(u, w) {
                    continue;
                }
                let blocked = nv.insert(v).remove(u).remove(w);
                let allowed = g.vertices().difference(blocked);
                if let Some(path) = shortest_path(g, u, w, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    debug_assert!(is_hole(g, &cycle));
                    return cycle;
                }
            }
        }
    }
    unreachable!("find_hole called on a chordal graph");
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    if !allowed.contains(from) || !allowed.contains(to) {
        return None;
    }
    let mut prev = vec![usize::MAX; g.order()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).intersection(allowed).iter() {
            if !seen.contains(w) {
                seen = seen.insert(w);
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Whether `cycle` lists an induced cycle of length ≥ 4 in cyclic order.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 4 {
        return false;
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let adjacent_on_cycle = j == i + 1 || (i == 0 && j == m - 1);
            if g.has_edge(cycle[i], cycle[j]) != adjacent_on_cycle {
                return false;
            }
        }
    }
    true
}

/// Minimal separators of a chordal graph: the distinct intersections along
/// the edges of a clique tree (a maximum-weight spanning forest of the
/// clique intersection graph), plus the empty set when disconnected.
pub fn minimal_separators_chordal(g: &Graph, maximal_cliques: &[VertexSet]) -> Vec<VertexSet> {
    let m = maximal_cliques.len();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let w = maximal_cliques[i].intersection(maximal_cliques[j]).len();
            if w > 0 {
                edges.push((w, i, j));
            }
        }
    }
    edges.sort_by_key(|&(w, i, j)| (std::cmp::Reverse(w), i, j));
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    let mut seps: Vec<VertexSet> = Vec::new();
    for (_, i, j) in edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            seps.push(maximal_cliques[i].intersection(maximal_cliques[j]));
        }
    }
    if g.connected_components().len() > 1 {
        seps.push(VertexSet::EMPTY);
    }
    seps.sort();
    seps.dedup();
    seps
}
