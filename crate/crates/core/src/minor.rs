//! Minor models and exhaustive minor containment search for small
//! patterns. Soundness is certificate-checked: every model found passes
//! `verify_minor_model`, and absence means the branch search exhausted
//! every disjoint family of connected branch sets.

use crate::error::{Error, Guards};
use crate::graph::{Graph, VertexSet};

/// Disjoint connected branch sets witnessing `pattern ≤ host` in the
/// minor order; `branch_sets[u]` realizes pattern vertex `u`.
#[derive(Clone, Debug)]
pub struct MinorModel {
    pub pattern: Graph,
    pub host: Graph,
    pub branch_sets: Vec<VertexSet>,
}

/// Checks the three model invariants: branch sets nonempty and connected,
/// pairwise disjoint, and every pattern edge realized by a host edge.
pub fn verify_minor_model(m: &MinorModel) -> bool {
    if m.branch_sets.len() != m.pattern.order() {
        return false;
    }
    let host_vertices = m.host.vertices();
    for (i, &b) in m.branch_sets.iter().enumerate() {
        if b.is_empty() || !b.is_subset(host_vertices) || !m.host.is_connected_set(b) {
            return false;
        }
        for &c in &m.branch_sets[i + 1..] {
            if b.intersects(c) {
                return false;
            }
        }
    }
    m.pattern.edges().iter().all(|&(u, v)| {
        m.host
            .neighborhood_of_set(m.branch_sets[u])
            .intersects(m.branch_sets[v])
    })
}

/// Searches for a minor model of `pattern` in `host`. `None` is exhaustive:
/// no model exists. Branches over pattern vertices in descending degree and
/// enumerates candidate branch sets as connected subsets of the free
/// vertices, in a fixed order, so the reported witness is deterministic.
pub fn find_minor(
    host: &Graph,
    pattern: &Graph,
    guards: &Guards,
) -> Result<Option<MinorModel>, Error> {
    guards.check("minor pattern", pattern.order(), guards.minor_pattern)?;
    let p = pattern.order();
    if p > host.order() {
        return Ok(None);
    }
    if p == 0 {
        return Ok(Some(MinorModel {
            pattern: pattern.clone(),
            host: host.clone(),
            branch_sets: vec![],
        }));
    }
    // high-degree pattern vertices first; ties by index
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));

    let mut assignment: Vec<VertexSet> = vec![VertexSet::EMPTY; p];
    let found = assign(host, pattern, &order, 0, VertexSet::EMPTY, &mut assignment);
    if !found {
        return Ok(None);
    }
    let model = MinorModel {
        pattern: pattern.clone(),
        host: host.clone(),
        branch_sets: assignment,
    };
    if !verify_minor_model(&model) {
        return Err(Error::Internal("minor search produced an invalid model".into()));
    }
    Ok(Some(model))
}

fn assign(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    assignment: &mut Vec<VertexSet>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let free = host.vertices().difference(used);
    let unassigned_after = order.len() - depth - 1;
    if free.len() < unassigned_after + 1 {
        return false;
    }
    let budget = free.len() - unassigned_after;
    // pattern neighbours already placed must be reachable by a host edge
    let required: Vec<VertexSet> = order[..depth]
        .iter()
        .filter(|&&q| pattern.has_edge(pv, q))
        .map(|&q| host.neighborhood_of_set(assignment[q]))
        .collect();
    let mut ok = false;
    for_each_connected_subset(host, free, budget, &mut |b| {
        if ok {
            return;
        }
        if required.iter().all(|r| r.intersects(b)) {
            assignment[pv] = b;
            if assign(host, pattern, order, depth + 1, used.union(b), assignment) {
                ok = true;
            }
        }
    });
    ok
}

/// Enumerates every connected subset of `allowed` with at most `max_size`
/// vertices, each exactly once, in a fixed order.
fn for_each_connected_subset(
    g: &Graph,
    allowed: VertexSet,
    max_size: usize,
    f: &mut impl FnMut(VertexSet),
) {
    if max_size == 0 {
        return;
    }
    // subsets are rooted at their minimum vertex and only grow upward
    for root in allowed.iter() {
        let above = VertexSet::from_iter(allowed.iter().filter(|&v| v > root));
        let ext = g.neighbors(root).intersection(above);
        extend_subset(g, VertexSet::singleton(root), ext, above, max_size, f);
    }
}

fn extend_subset(
    g: &Graph,
    s: VertexSet,
    ext: VertexSet,
    above: VertexSet,
    max_size: usize,
    f: &mut impl FnMut(VertexSet),
) {
    f(s);
    if s.len() == max_size {
        return;
    }
    let mut ext_left = ext;
    while let Some(w) = ext_left.min() {
        ext_left = ext_left.remove(w);
        // exclusive new neighbours of w keep each subset unique
        let new_ext = ext_left.union(
            g.neighbors(w)
                .intersection(above)
                .difference(s)
                .difference(ext)
                .difference(g.neighborhood_of_set(s)),
        );
        extend_subset(g, s.insert(w), new_ext, above, max_size, f);
    }
}

/// Test-oriented naive oracle: tries every labeling of host vertices by
/// pattern classes (or none). Exponential, used to certify `find_minor`.
#[cfg(test)]
pub fn find_minor_naive(host: &Graph, pattern: &Graph) -> bool {
    let (n, p) = (host.order(), pattern.order());
    if p == 0 {
        return true;
    }
    let classes = p + 1; // 0 = unused
    let mut labels = vec![0usize; n];
    loop {
        let mut sets = vec![VertexSet::EMPTY; p];
        for (v, &l) in labels.iter().enumerate() {
            if l > 0 {
                sets[l - 1] = sets[l - 1].insert(v);
            }
        }
        let model = MinorModel {
            pattern: pattern.clone(),
            host: host.clone(),
            branch_sets: sets,
        };
        if verify_minor_model(&model) {
            return true;
        }
        // next labeling
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            labels[i] += 1;
            if labels[i] < classes {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn triangle_in_c5() {
        let model = find_minor(&Graph::cycle(5), &Graph::complete(3), &guards())
            .unwrap()
            .expect("C5 has a K3 minor");
        assert!(verify_minor_model(&model));
    }

    #[test]
    fn no_triangle_in_trees() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(find_minor(&tree, &Graph::complete(3), &guards()).unwrap().is_none());
    }

    #[test]
    fn wheel_in_k5() {
        let model = find_minor(&Graph::complete(5), &Graph::wheel(5), &guards())
            .unwrap()
            .expect("W4 is a subgraph of K5");
        assert!(verify_minor_model(&model));
    }

    #[test]
    fn identity_model_verifies() {
        let g = Graph::cycle(4);
        let model = MinorModel {
            pattern: g.clone(),
            host: g.clone(),
            branch_sets: (0..4).map(VertexSet::singleton).collect(),
        };
        assert!(verify_minor_model(&model));
    }

    #[test]
    fn overlapping_branch_sets_fail() {
        let g = Graph::complete(3);
        let model = MinorModel {
            pattern: Graph::complete(2),
            host: g,
            branch_sets: vec![VertexSet::from_iter([0, 1]), VertexSet::from_iter([1, 2])],
        };
        assert!(!verify_minor_model(&model));
    }

    #[test]
    fn connected_subset_enumeration_is_exact() {
        // against a direct filter over all subsets
        for g in [Graph::cycle(5), Graph::path(4), Graph::complete(4), Graph::empty(3)] {
            let n = g.order();
            let mut enumerated = Vec::new();
            for_each_connected_subset(&g, g.vertices(), n, &mut |s| enumerated.push(s));
            let mut expected: Vec<VertexSet> = (1u64..(1 << n))
                .map(VertexSet::from_bits)
                .filter(|&s| g.is_connected_set(s))
                .collect();
            enumerated.sort();
            expected.sort();
            assert_eq!(enumerated, expected, "graph {g:?}");
        }
    }

    #[test]
    fn pattern_guard_refusal() {
        let err = find_minor(&Graph::complete(10), &Graph::cycle(9), &guards()).unwrap_err();
        assert!(matches!(err, Error::Guard(_)));
    }

    #[test]
    fn agrees_with_naive_oracle() {
        // all graphs on 4 host vertices vs three patterns
        let patterns = [Graph::complete(3), Graph::path(3), Graph::cycle(4)];
        for bits in 0u64..(1 << 6) {
            let mut host = Graph::empty(4);
            let mut idx = 0;
            for u in 0..4 {
                for v in (u + 1)..4 {
                    if bits >> idx & 1 == 1 {
                        host.add_edge_mut(u, v);
                    }
                    idx += 1;
                }
            }
            for pat in &patterns {
                let fast = find_minor(&host, pat, &guards()).unwrap().is_some();
                let slow = find_minor_naive(&host, pat);
                assert_eq!(fast, slow, "host {host:?} pattern {pat:?}");
            }
        }
    }
}
