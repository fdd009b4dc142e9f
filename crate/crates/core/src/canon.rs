//! Canonical labeling for isomorphism dedup, and small-graph enumeration.
//!
//! The code of a graph is the graph6 string of a canonical relabeling,
//! computed by iterated degree refinement plus individualization
//! backtracking: the minimum encoding over all refinement-compatible
//! orderings. Exhaustive and exact at desk scale; nothing here aims at
//! nauty-grade performance.

use std::collections::HashSet;

use crate::error::{Error, Guards};
use crate::graph::Graph;
use crate::io::write_graph6;

/// Canonical code: equal strings exactly for isomorphic graphs.
pub fn canonical_code(g: &Graph, guards: &Guards) -> Result<String, Error> {
    guards.check("canonical labeling", g.order(), guards.subsets)?;
    write_graph6(&canonical_form(g))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }
    let mut best: Option<Vec<u64>> = None;
    let mut best_perm: Vec<usize> = (0..n).collect();
    let cells = refine(g, initial_partition(g));
    search(g, cells, &mut best, &mut best_perm);
    apply_permutation(g, &best_perm)
}

/// Ordered partition of the vertices; earlier cells come first in every
/// ordering explored.
type Partition = Vec<Vec<usize>>;

fn initial_partition(g: &Graph) -> Partition {
    let n = g.order();
    let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        by_degree[g.degree(v)].push(v);
    }
    by_degree.into_iter().filter(|c| !c.is_empty()).collect()
}

/// Equitable refinement: split cells by the multiset of neighbor cell
/// counts until stable. Cell order is an isomorphism invariant (sorted by
/// the signature that split them).
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let cell_of = cell_index(g.order(), &cells);
        let mut changed = false;
        let mut next: Partition = Vec::new();
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // signature of v: count of neighbors per current cell
            let mut sigs: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; cells.len()];
                    for w in g.neighbors(v).iter() {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            sigs.sort();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    next.push(sigs[start..i].iter().map(|&(_, v)| v).collect());
                    if i - start != cell.len() {
                        changed = true;
                    }
                    start = i;
                }
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn cell_index(n: usize, cells: &Partition) -> Vec<usize> {
    let mut idx = vec![0usize; n];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            idx[v] = i;
        }
    }
    idx
}

fn search(g: &Graph, cells: Partition, best: &mut Option<Vec<u64>>, best_perm: &mut Vec<usize>) {
    if let Some(target) = cells.iter().position(|c| c.len() > 1) {
        for i in 0..cells[target].len() {
            let mut split = cells.clone();
            let v = split[target].remove(i);
            split.insert(target, vec![v]);
            search(g, refine(g, split), best, best_perm);
        }
        return;
    }
    // discrete partition: an ordering
    let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let key = encode_under(g, &perm);
    if best.as_ref().is_none_or(|b| key < *b) {
        *best = Some(key);
        *best_perm = perm;
    }
}

/// Adjacency rows of the relabeled graph, used as the comparison key.
fn encode_under(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.order();
    let mut pos = vec![0usize; n];
    for (p, &v) in perm.iter().enumerate() {
        pos[v] = p;
    }
    let mut rows = vec![0u64; n];
    for (u, v) in g.edges() {
        rows[pos[u]] |= 1u64 << pos[v];
        rows[pos[v]] |= 1u64 << pos[u];
    }
    rows
}

fn apply_permutation(g: &Graph, perm: &[usize]) -> Graph {
    let n = g.order();
    let mut pos = vec![0usize; n];
    for (p, &v) in perm.iter().enumerate() {
        pos[v] = p;
    }
    let mut out = Graph::empty(n);
    for (u, v) in g.edges() {
        out.add_edge_mut(pos[u], pos[v]);
    }
    out
}

/// All graphs on exactly `n` vertices, one per isomorphism class, by edge
/// augmentation over canonical forms.
pub fn enumerate_graphs(n: usize, guards: &Guards) -> Result<Vec<Graph>, Error> {
    guards.check("graph enumeration", n, guards.subsets)?;
    let mut seen: HashSet<String> = HashSet::new();
    let mut layer = vec![Graph::empty(n)];
    seen.insert(canonical_code(&Graph::empty(n), guards)?);
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for g in &layer {
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        let h = canonical_form(&g.with_edge(u, v));
                        let code = write_graph6(&h)?;
                        if seen.insert(code) {
                            next.push(h);
                        }
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    Ok(all)
}

/// All *connected* graphs on exactly `n` vertices up to isomorphism.
pub fn enumerate_connected_graphs(n: usize, guards: &Guards) -> Result<Vec<Graph>, Error> {
    Ok(enumerate_graphs(n, guards)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(g: &Graph) -> String {
        canonical_code(g, &Guards::default()).unwrap()
    }

    #[test]
    fn relabeled_paths_share_a_code() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(code(&a), code(&b));
        assert_ne!(code(&a), code(&Graph::complete(3)));
    }

    #[test]
    fn four_vertex_graphs_have_eleven_codes() {
        let guards = Guards::default();
        let all = enumerate_graphs(4, &guards).unwrap();
        assert_eq!(all.len(), 11);
        let codes: HashSet<String> = all.iter().map(code).collect();
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn known_graph_counts() {
        // numbers of graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34, 156
        let guards = Guards::default();
        for (n, expect) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            assert_eq!(enumerate_graphs(n, &guards).unwrap().len(), expect, "n = {n}");
        }
    }

    #[test]
    fn known_connected_counts() {
        // connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112, 853
        let guards = Guards::default();
        for (n, expect) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            assert_eq!(
                enumerate_connected_graphs(n, &guards).unwrap().len(),
                expect,
                "n = {n}"
            );
        }
    }

    #[test]
    fn guard_refusal_beyond_subset_limit() {
        let err = canonical_code(&Graph::empty(17), &Guards::default()).unwrap_err();
        assert!(matches!(err, crate::error::Error::Guard(_)));
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(n in 1usize..8, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut step = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state
            };
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if step() >> 63 == 1 {
                        g.add_edge_mut(u, v);
                    }
                }
            }
            // random permutation by sorting keys
            let mut perm: Vec<usize> = (0..n).collect();
            perm.sort_by_key(|_| step());
            let mut h = Graph::empty(n);
            for (u, v) in g.edges() {
                h.add_edge_mut(perm[u], perm[v]);
            }
            prop_assert_eq!(code(&g), code(&h));
        }
    }
}
