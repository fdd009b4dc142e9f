//! Exhaustive search for lenient tree decompositions of bounded width,
//! with certificates in both directions: a found decomposition always
//! revalidates, and absence means the memoized search space was exhausted.
//!
//! The search looks for decompositions in which every bag has size exactly
//! `j`; any decomposition of width `j` can be rewritten into that form
//! (that is what `extremize` does constructively), so scanning
//! `j = 1, .., k` decides width ≤ k and reports the minimum width.
//!
//! The state space exploits how subtrees of a decomposition tile the
//! graph: hanging below a bag `A`, the not-yet-placed vertices form a
//! union of connected components of `G - A`, and every component goes to
//! one child subtree. A subproblem is therefore a pair (frontier bag,
//! remaining component union), memoized over the whole search.

use std::collections::HashMap;

use crate::decomp::{Decomposition, DecompKind};
use crate::error::{Error, Guards};
use crate::graph::{Graph, VertexSet};

/// Searches for a lenient tree decomposition of width at most `k`,
/// returning a minimum-width witness. `None` is exhaustive: no such
/// decomposition exists.
pub fn decide_width_le_k(
    g: &Graph,
    k: usize,
    guards: &Guards,
) -> Result<Option<Decomposition>, Error> {
    guards.check("decomposition search", g.order(), guards.search)?;
    let n = g.order();
    if n == 0 {
        return Ok(Some(Decomposition {
            base: g.clone(),
            tree: Graph::empty(1),
            bags: vec![VertexSet::EMPTY],
        }));
    }
    for j in 1..=k.min(n) {
        if let Some(d) = search_exact_width(g, j) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// The exact strict bramble number via the decomposition search: the
/// minimum width of a lenient tree decomposition.
pub fn min_width(g: &Graph, guards: &Guards) -> Result<(usize, Decomposition), Error> {
    let d = decide_width_le_k(g, g.order(), guards)?
        .expect("a single bag always realizes width n");
    Ok((d.width(), d))
}

/// Searches for a decomposition in which every bag has size exactly `j`.
/// Used by the domino completion, which needs the exact target width
/// rather than the minimum.
#[doc(hidden)]
pub fn search_exact_width(g: &Graph, j: usize) -> Option<Decomposition> {
    let n = g.order();
    if j > n {
        return None;
    }
    let mut ctx = SearchCtx {
        g,
        j,
        memo: HashMap::new(),
    };
    // the tree can be rooted anywhere, so the root bag may be assumed to
    // contain vertex 0
    let mut current = Vec::with_capacity(j);
    let mut roots = Vec::new();
    collect_subsets_with(n, j, 0, &mut current, &mut roots);
    for root in roots {
        if !root.contains(0) {
            continue;
        }
        let rest = g.vertices().difference(root);
        if ctx.feasible(root, rest) {
            let d = ctx.reconstruct(root, rest, g);
            debug_assert!(d.is_valid(DecompKind::Lenient));
            return Some(d);
        }
    }
    None
}

fn collect_subsets_with(
    n: usize,
    size: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if current.len() == size {
        out.push(VertexSet::from_iter(current.iter().copied()));
        return;
    }
    for v in from..n {
        if n - v < size - current.len() {
            break;
        }
        current.push(v);
        collect_subsets_with(n, size, v + 1, current, out);
        current.pop();
    }
}

struct SearchCtx<'a> {
    g: &'a Graph,
    j: usize,
    /// `(frontier bag, remaining set)` → first feasible `(child load,
    /// child bag)`, or `None` when the subproblem is infeasible.
    memo: HashMap<(VertexSet, VertexSet), Option<(VertexSet, VertexSet)>>,
}

impl SearchCtx<'_> {
    /// Can the vertices of `rest` be placed in subtrees hanging below a
    /// node with bag `bag`? `rest` is a union of components of `G - bag`
    /// with no neighbours outside `rest ∪ bag`.
    fn feasible(&mut self, bag: VertexSet, rest: VertexSet) -> bool {
        if rest.is_empty() {
            return true;
        }
        if let Some(entry) = self.memo.get(&(bag, rest)) {
            return entry.is_some();
        }
        let choice = self.find_choice(bag, rest);
        self.memo.insert((bag, rest), choice);
        choice.is_some()
    }

    fn find_choice(&mut self, bag: VertexSet, rest: VertexSet) -> Option<(VertexSet, VertexSet)> {
        let comps = self.g.components_within(rest);
        // one child subtree takes the load `first ∪ (some other comps)`
        let first = comps[0];
        let others = &comps[1..];
        let combos = 1u32 << others.len();
        for combo in 0..combos {
            let mut load = first;
            for (i, &c) in others.iter().enumerate() {
                if combo >> i & 1 == 1 {
                    load = load.union(c);
                }
            }
            // child bag: j vertices from bag ∪ load, at least one new
            let pool: Vec<usize> = bag.union(load).to_vec();
            let mut current = Vec::with_capacity(self.j);
            let mut candidates = Vec::new();
            collect_pool_subsets(&pool, self.j, 0, &mut current, &mut candidates);
            for child in candidates {
                let new = child.intersection(load);
                if new.is_empty() {
                    continue;
                }
                let deeper = load.difference(child);
                // everything placed deeper must only see the child bag
                if !self
                    .g
                    .neighborhood_of_set(deeper)
                    .is_subset(deeper.union(child))
                {
                    continue;
                }
                if self.feasible(child, deeper) && self.feasible(bag, rest.difference(load)) {
                    return Some((load, child));
                }
            }
        }
        None
    }

    /// Rebuilds the witness tree from the memoized choices.
    fn reconstruct(&mut self, root: VertexSet, rest: VertexSet, g: &Graph) -> Decomposition {
        let mut bags = vec![root];
        let mut edges = Vec::new();
        self.rebuild(0, root, rest, &mut bags, &mut edges);
        let mut tree = Graph::empty(bags.len());
        for (a, b) in edges {
            tree.add_edge_mut(a, b);
        }
        Decomposition {
            base: g.clone(),
            tree,
            bags,
        }
    }

    fn rebuild(
        &mut self,
        node: usize,
        bag: VertexSet,
        rest: VertexSet,
        bags: &mut Vec<VertexSet>,
        edges: &mut Vec<(usize, usize)>,
    ) {
        if rest.is_empty() {
            return;
        }
        let (load, child) = self.memo[&(bag, rest)]
            .expect("reconstruction walked into an infeasible state");
        let child_node = bags.len();
        bags.push(child);
        edges.push((node, child_node));
        self.rebuild(child_node, child, load.difference(child), bags, edges);
        self.rebuild(node, bag, rest.difference(load), bags, edges);
    }
}

fn collect_pool_subsets(
    pool: &[usize],
    size: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if current.len() == size {
        out.push(VertexSet::from_iter(current.iter().copied()));
        return;
    }
    for i in from..pool.len() {
        if pool.len() - i < size - current.len() {
            break;
        }
        current.push(pool[i]);
        collect_pool_subsets(pool, size, i + 1, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bramble::{sbn_oracle, BrambleMode};

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn paths_have_width_one() {
        let d = decide_width_le_k(&Graph::path(5), 1, &guards()).unwrap().unwrap();
        assert_eq!(d.width(), 1);
        assert!(d.is_valid(DecompKind::Lenient));
    }

    #[test]
    fn triangles_need_width_two() {
        assert!(decide_width_le_k(&Graph::complete(3), 1, &guards()).unwrap().is_none());
        let d = decide_width_le_k(&Graph::complete(3), 2, &guards()).unwrap().unwrap();
        assert_eq!(d.width(), 2);
    }

    #[test]
    fn k4_splits_into_two_bags() {
        let d = decide_width_le_k(&Graph::complete(4), 2, &guards()).unwrap().unwrap();
        assert_eq!(d.width(), 2);
        assert_eq!(d.tree.order(), 2);
        let mut got: Vec<Vec<usize>> = d.bags.iter().map(|b| b.to_vec()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn wheel_needs_width_three() {
        let w4 = Graph::wheel(5);
        assert!(decide_width_le_k(&w4, 2, &guards()).unwrap().is_none());
        let d = decide_width_le_k(&w4, 3, &guards()).unwrap().unwrap();
        assert_eq!(d.width(), 3);
        assert!(d.is_valid(DecompKind::Lenient));
    }

    #[test]
    fn disconnected_graphs_are_handled() {
        // K3 plus an isolated vertex still has width 2
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let d = decide_width_le_k(&g, 2, &guards()).unwrap().unwrap();
        assert_eq!(d.width(), 2);
        assert!(d.is_valid(DecompKind::Lenient));
    }

    #[test]
    fn empty_graph_has_width_zero() {
        let d = decide_width_le_k(&Graph::empty(0), 0, &guards()).unwrap().unwrap();
        assert_eq!(d.width(), 0);
    }

    #[test]
    fn agrees_with_oracle_up_to_five_vertices() {
        let g = guards();
        for n in 1..=5usize {
            for bits in 0u64..(1 << (n * (n - 1) / 2)) {
                let mut graph = Graph::empty(n);
                let mut idx = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits >> idx & 1 == 1 {
                            graph.add_edge_mut(u, v);
                        }
                        idx += 1;
                    }
                }
                let (value, _) = sbn_oracle(&graph, BrambleMode::Strict, &g).unwrap();
                let (width, d) = min_width(&graph, &g).unwrap();
                assert_eq!(value, width, "sbn mismatch on {graph:?}");
                assert!(d.is_valid(DecompKind::Lenient));
            }
        }
    }

    #[test]
    fn guard_refusal() {
        let err = decide_width_le_k(&Graph::path(13), 2, &guards()).unwrap_err();
        assert!(matches!(err, Error::Guard(_)));
    }
}
