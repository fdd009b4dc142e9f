//! Tree decompositions, lenient and classic.
//!
//! A lenient tree decomposition relaxes the classic edge condition: an
//! edge only has to lie inside the union of two *close* bags (a bag with
//! itself, or two adjacent bags). Its width is the maximum bag size, not
//! size minus one. The classic width convention (size minus one) lives in
//! the treewidth solver, not here; mixing the two is the off-by-one trap
//! of this whole subject.
//!
//! Besides validation this module carries the structural toolkit:
//! extremization, completions, amalgamated restrictions and
//! S-amalgamations, and the product minor witness.

use crate::error::Error;
use crate::graph::{lexicographic_product, AugmentedComponent, Graph, VertexSet};
use crate::minor::{verify_minor_model, MinorModel};

/// Which edge condition a decomposition is validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompKind {
    /// Edges lie in unions of close bags.
    Lenient,
    /// Edges lie inside single bags.
    Classic,
}

/// A tree of bags over a base graph. `bags[t]` is the bag of tree node `t`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub base: Graph,
    pub tree: Graph,
    pub bags: Vec<VertexSet>,
}

/// First violated condition found by validation, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompViolation {
    /// C1: a base vertex in no bag.
    VertexUncovered { vertex: usize },
    /// C2: a base edge covered by no close pair of bags.
    EdgeUncovered { edge: (usize, usize) },
    /// C3: a vertex whose trace is disconnected in the tree.
    TraceDisconnected { vertex: usize },
}

impl std::fmt::Display for DecompViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecompViolation::VertexUncovered { vertex } => {
                write!(f, "(C1) vertex {vertex} is in no bag")
            }
            DecompViolation::EdgeUncovered { edge } => write!(
                f,
                "(C2) edge {{{},{}}} lies in no admissible pair of bags",
                edge.0, edge.1
            ),
            DecompViolation::TraceDisconnected { vertex } => {
                write!(f, "(C3) the trace of vertex {vertex} is disconnected")
            }
        }
    }
}

/// First violated extremeness clause, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremeViolation {
    UnequalBagSizes { small: usize, large: usize },
    SubsetBag { inner: usize, outer: usize },
    RedundantDegreeTwo { node: usize, left: usize, right: usize },
    LeafSiblingPetals { center: usize, first: usize, second: usize },
}

impl std::fmt::Display for ExtremeViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtremeViolation::UnequalBagSizes { small, large } => {
                write!(f, "bags at nodes {small} and {large} differ in size")
            }
            ExtremeViolation::SubsetBag { inner, outer } => {
                write!(f, "bag at node {inner} is a subset of the bag at node {outer}")
            }
            ExtremeViolation::RedundantDegreeTwo { node, left, right } => write!(
                f,
                "degree-2 node {node} has its bag inside the bags of {left} and {right}"
            ),
            ExtremeViolation::LeafSiblingPetals { center, first, second } => write!(
                f,
                "leaf siblings {first} and {second} of node {center} have a small petal union"
            ),
        }
    }
}

impl Decomposition {
    /// A single node whose bag is the whole vertex set.
    pub fn single_bag(base: &Graph) -> Self {
        Decomposition {
            bags: vec![base.vertices()],
            base: base.clone(),
            tree: Graph::empty(1),
        }
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    /// Tree nodes whose bags contain `v`.
    pub fn trace(&self, v: usize) -> VertexSet {
        VertexSet::from_iter(
            self.bags
                .iter()
                .enumerate()
                .filter(|(_, b)| b.contains(v))
                .map(|(t, _)| t),
        )
    }

    /// Private vertices of a leaf: its bag minus its unique neighbour's.
    /// Defined only on trees with at least two nodes.
    pub fn petal(&self, leaf: usize) -> Result<VertexSet, Error> {
        if self.tree.order() < 2 {
            return Err(Error::Domain(
                "petal is undefined on a one-node tree".into(),
            ));
        }
        if leaf >= self.tree.order() || self.tree.degree(leaf) != 1 {
            return Err(Error::Domain(format!("node {leaf} is not a leaf")));
        }
        let neighbor = self.tree.neighbors(leaf).min().unwrap();
        Ok(self.bags[leaf].difference(self.bags[neighbor]))
    }

    /// Structural soundness plus the three conditions, with C1 taken
    /// relative to `support` (the intended vertex set of the base; pass
    /// the full set for decompositions of a whole graph).
    pub fn validate_on(
        &self,
        kind: DecompKind,
        support: VertexSet,
    ) -> Result<Result<(), DecompViolation>, Error> {
        let m = self.tree.order();
        if self.bags.len() != m {
            return Err(Error::Structural(format!(
                "{} bags assigned to a tree on {m} nodes",
                self.bags.len()
            )));
        }
        if m == 0 || !self.tree.is_tree() {
            return Err(Error::Structural("the node graph is not a tree".into()));
        }
        for (t, &b) in self.bags.iter().enumerate() {
            if !b.is_subset(self.base.vertices()) {
                return Err(Error::Structural(format!(
                    "bag at node {t} mentions vertices outside the base graph"
                )));
            }
        }
        // C1
        let union = self.bags.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
        if union != support {
            let witness = support
                .difference(union)
                .min()
                .or_else(|| union.difference(support).min())
                .unwrap();
            return Ok(Err(DecompViolation::VertexUncovered { vertex: witness }));
        }
        // C2
        for (u, v) in self.base.edges() {
            let covered = match kind {
                DecompKind::Classic => self
                    .bags
                    .iter()
                    .any(|b| b.contains(u) && b.contains(v)),
                DecompKind::Lenient => {
                    self.bags.iter().any(|b| b.contains(u) && b.contains(v))
                        || self.tree.edges().iter().any(|&(s, t)| {
                            let pair = self.bags[s].union(self.bags[t]);
                            pair.contains(u) && pair.contains(v)
                        })
                }
            };
            if !covered {
                return Ok(Err(DecompViolation::EdgeUncovered { edge: (u, v) }));
            }
        }
        // C3
        for v in support.iter() {
            if !self.tree.is_connected_set(self.trace(v)) {
                return Ok(Err(DecompViolation::TraceDisconnected { vertex: v }));
            }
        }
        Ok(Ok(()))
    }

    pub fn validate(&self, kind: DecompKind) -> Result<Result<(), DecompViolation>, Error> {
        self.validate_on(kind, self.base.vertices())
    }

    pub fn is_valid(&self, kind: DecompKind) -> bool {
        matches!(self.validate(kind), Ok(Ok(())))
    }

    fn require_valid_lenient(&self, support: VertexSet) -> Result<(), Error> {
        self.validate_on(DecompKind::Lenient, support)?
            .map_err(|v| Error::Precondition(format!("invalid lenient decomposition: {v}")))
    }

    /// The four extremeness clauses, checked literally against the
    /// decomposition's own width.
    pub fn check_extreme(&self) -> Result<(), ExtremeViolation> {
        let k = self.width();
        let m = self.tree.order();
        for t in 0..m {
            for s in 0..m {
                if s != t && self.bags[s].len() < self.bags[t].len() {
                    return Err(ExtremeViolation::UnequalBagSizes { small: s, large: t });
                }
            }
        }
        for inner in 0..m {
            for outer in 0..m {
                if inner != outer && self.bags[inner].is_subset(self.bags[outer]) {
                    return Err(ExtremeViolation::SubsetBag { inner, outer });
                }
            }
        }
        for t in 0..m {
            if self.tree.degree(t) != 2 {
                continue;
            }
            let nbrs: Vec<usize> = self.tree.neighbors(t).to_vec();
            let side_a = self.tree.component_of(nbrs[0], self.tree.vertices().remove(t));
            let side_b = self.tree.component_of(nbrs[1], self.tree.vertices().remove(t));
            for left in side_a.iter() {
                for right in side_b.iter() {
                    if self.bags[t].is_subset(self.bags[left].union(self.bags[right])) {
                        return Err(ExtremeViolation::RedundantDegreeTwo { node: t, left, right });
                    }
                }
            }
        }
        for t in 0..m {
            let leaves: Vec<usize> = self
                .tree
                .neighbors(t)
                .iter()
                .filter(|&l| self.tree.degree(l) == 1)
                .collect();
            for (i, &a) in leaves.iter().enumerate() {
                for &b in &leaves[i + 1..] {
                    let pa = self.bags[a].difference(self.bags[t]);
                    let pb = self.bags[b].difference(self.bags[t]);
                    if pa.union(pb).len() <= k {
                        return Err(ExtremeViolation::LeafSiblingPetals {
                            center: t,
                            first: a,
                            second: b,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_extreme(&self) -> bool {
        self.check_extreme().is_ok()
    }

    /// Rewrites a valid lenient decomposition of width `k` into an extreme
    /// one of the same width: pad small bags, delete subset bags, suppress
    /// redundant degree-2 nodes, merge leaf siblings, each applied first
    /// when applicable, to a fixpoint.
    pub fn extremize(&self) -> Result<Decomposition, Error> {
        self.require_valid_lenient(self.base.vertices())?;
        let width = self.width();
        let mut w = Working::from(self);
        loop {
            if w.pad_step() || w.delete_subset_step() || w.suppress_degree2_step()
                || w.merge_leaf_siblings_step(width)
            {
                continue;
            }
            break;
        }
        let out = w.finish(&self.base);
        out.require_valid_lenient(self.base.vertices())
            .map_err(|e| Error::Internal(format!("extremize broke validity: {e}")))?;
        if out.width() != width {
            return Err(Error::Internal("extremize changed the width".into()));
        }
        if let Err(v) = out.check_extreme() {
            return Err(Error::Internal(format!("extremize missed a clause: {v}")));
        }
        Ok(out)
    }

    /// The completion: all pairs inside each union of close bags become
    /// edges. The decomposition stays valid for the completed graph.
    pub fn completion(&self) -> Graph {
        let mut g = self.base.clone();
        let mut close: Vec<VertexSet> = self.bags.clone();
        for (s, t) in self.tree.edges() {
            close.push(self.bags[s].union(self.bags[t]));
        }
        for set in close {
            let verts: Vec<usize> = set.to_vec();
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    if !g.has_edge(u, v) {
                        g.add_edge_mut(u, v);
                    }
                }
            }
        }
        g
    }

    /// Restriction of the decomposition to an augmented component `comp` of
    /// `G - S`, re-rooted at node `anchor`: bags are cut down to the
    /// component's vertices, and each `x ∈ S` is additionally carried
    /// along the shortest tree path from `anchor` to its trace, which
    /// forces `S ⊆ χ'(anchor)`.
    pub fn amalgamated_restriction(
        &self,
        s: VertexSet,
        comp: &AugmentedComponent,
        anchor: usize,
    ) -> Result<Decomposition, Error> {
        self.require_valid_lenient(self.base.vertices())?;
        if anchor >= self.tree.order() {
            return Err(Error::Structural(format!("anchor node {anchor} not in the tree")));
        }
        if !s.is_subset(self.base.vertices()) {
            return Err(Error::Structural("S mentions vertices outside the graph".into()));
        }
        let accs = self.base.augmented_components(s);
        if !accs.iter().any(|a| a.vertices == comp.vertices) {
            return Err(Error::Precondition(
                "the given component is not an augmented component of G - S".into(),
            ));
        }
        let mut bags: Vec<VertexSet> = self
            .bags
            .iter()
            .map(|b| b.intersection(comp.vertices))
            .collect();
        for x in s.iter() {
            for t in self.path_to_trace(anchor, x) {
                bags[t] = bags[t].insert(x);
            }
        }
        let out = Decomposition {
            base: comp.graph.clone(),
            tree: self.tree.clone(),
            bags,
        };
        out.require_valid_lenient(comp.vertices)
            .map_err(|e| Error::Internal(format!("amalgamated restriction broke validity: {e}")))?;
        if !s.is_subset(out.bags[anchor]) {
            return Err(Error::Internal("restriction lost S at the anchor".into()));
        }
        Ok(out)
    }

    /// Shortest tree path from `from` to the nearest node whose bag
    /// contains `x` (inclusive). In a tree that nearest trace node is
    /// unique, so the path is too.
    fn path_to_trace(&self, from: usize, x: usize) -> Vec<usize> {
        let trace = self.trace(x);
        let mut prev = vec![usize::MAX; self.tree.order()];
        let mut seen = VertexSet::singleton(from);
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(t) = queue.pop_front() {
            if trace.contains(t) {
                let mut path = vec![t];
                let mut cur = t;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                return path;
            }
            for u in self.tree.neighbors(t).iter() {
                if !seen.contains(u) {
                    seen = seen.insert(u);
                    prev[u] = t;
                    queue.push_back(u);
                }
            }
        }
        unreachable!("trace of a covered vertex cannot be empty");
    }
}

/// Joins decompositions of all augmented components of `G - S` into one
/// for `G`: a new central node with bag `S` becomes adjacent to the chosen
/// anchor node of every part. The parts live in the coordinates of the
/// common graph; their bag supports must pairwise intersect exactly in `S`
/// and must be exactly the augmented components of the reassembled graph.
pub fn s_amalgamation(
    parts: &[(Decomposition, usize)],
    s: VertexSet,
) -> Result<Decomposition, Error> {
    if parts.is_empty() {
        return Err(Error::Structural("no parts to amalgamate".into()));
    }
    let n = parts[0].0.base.order();
    let mut supports = Vec::new();
    for (i, (d, anchor)) in parts.iter().enumerate() {
        if d.base.order() != n {
            return Err(Error::Structural(
                "parts disagree on the vertex index space".into(),
            ));
        }
        if *anchor >= d.tree.order() {
            return Err(Error::Structural(format!("anchor of part #{i} not in its tree")));
        }
        let support = d.bags.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
        if !s.is_subset(d.bags[*anchor]) {
            return Err(Error::Precondition(format!(
                "part #{i} does not hold S in its anchor bag"
            )));
        }
        d.require_valid_lenient(support)?;
        supports.push(support);
    }
    for i in 0..supports.len() {
        for j in (i + 1)..supports.len() {
            if supports[i].intersection(supports[j]) != s {
                return Err(Error::Structural(format!(
                    "parts #{i} and #{j} overlap outside S; the component family does not tile a common graph"
                )));
            }
        }
    }
    // reassemble G and check the parts are exactly Acc(G, S)
    let mut g = Graph::empty(n);
    for (d, _) in parts {
        for (u, v) in d.base.edges() {
            if !g.has_edge(u, v) {
                g.add_edge_mut(u, v);
            }
        }
    }
    let mut expected: Vec<VertexSet> = g
        .augmented_components(s)
        .iter()
        .map(|a| a.vertices)
        .collect();
    let mut got = supports.clone();
    expected.sort();
    got.sort();
    if expected != got {
        return Err(Error::Structural(
            "the component family does not tile G: parts are not exactly Acc(G, S)".into(),
        ));
    }
    let covered = supports.iter().fold(s, |a, &b| a.union(b));
    if covered != g.vertices() {
        return Err(Error::Structural(
            "the parts do not cover every vertex of the common graph".into(),
        ));
    }
    for (d, _) in parts {
        let support = d.bags.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
        if d.base != g.induced_keep(support) {
            return Err(Error::Structural(
                "a part's base graph is not the induced augmented component".into(),
            ));
        }
    }
    // build: disjoint union of the part trees plus the central node
    let total: usize = parts.iter().map(|(d, _)| d.tree.order()).sum();
    let center = total;
    let mut tree = Graph::empty(total + 1);
    let mut bags = Vec::with_capacity(total + 1);
    let mut offset = 0;
    for (d, anchor) in parts {
        for (a, b) in d.tree.edges() {
            tree.add_edge_mut(offset + a, offset + b);
        }
        tree.add_edge_mut(center, offset + anchor);
        bags.extend(d.bags.iter().copied());
        offset += d.tree.order();
    }
    bags.push(s);
    let out = Decomposition { base: g, tree, bags };
    out.require_valid_lenient(out.base.vertices())
        .map_err(|e| Error::Internal(format!("amalgamation broke validity: {e}")))?;
    Ok(out)
}

/// Mutable working copy for the extremize rewrites.
struct Working {
    alive: Vec<bool>,
    adj: Vec<VertexSet>,
    bags: Vec<VertexSet>,
}

impl Working {
    fn from(d: &Decomposition) -> Self {
        Working {
            alive: vec![true; d.tree.order()],
            adj: (0..d.tree.order()).map(|t| d.tree.neighbors(t)).collect(),
            bags: d.bags.clone(),
        }
    }

    fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(t, _)| t)
    }

    fn drop_node(&mut self, t: usize) {
        self.alive[t] = false;
        for u in self.adj[t].to_vec() {
            self.adj[u] = self.adj[u].remove(t);
        }
        self.adj[t] = VertexSet::EMPTY;
    }

    fn connect(&mut self, a: usize, b: usize) {
        self.adj[a] = self.adj[a].insert(b);
        self.adj[b] = self.adj[b].insert(a);
    }

    /// Pads the first bag that is smaller than an adjacent one with the
    /// lexicographically least vertex of the difference.
    fn pad_step(&mut self) -> bool {
        let nodes: Vec<usize> = self.nodes().collect();
        for &t in &nodes {
            for u in self.adj[t].iter() {
                if self.bags[t].len() < self.bags[u].len() {
                    let v = self.bags[u].difference(self.bags[t]).min().unwrap();
                    self.bags[t] = self.bags[t].insert(v);
                    return true;
                }
            }
        }
        false
    }

    /// Removes the first bag contained in an adjacent bag, reattaching its
    /// other neighbours there.
    fn delete_subset_step(&mut self) -> bool {
        let nodes: Vec<usize> = self.nodes().collect();
        if nodes.len() < 2 {
            return false;
        }
        for &t in &nodes {
            for u in self.adj[t].iter() {
                if self.bags[t].is_subset(self.bags[u]) {
                    for w in self.adj[t].to_vec() {
                        if w != u {
                            self.connect(w, u);
                        }
                    }
                    self.drop_node(t);
                    return true;
                }
            }
        }
        false
    }

    /// Suppresses a degree-2 node whose bag lies inside the union of two
    /// bags on opposite sides, joining its neighbours directly.
    fn suppress_degree2_step(&mut self) -> bool {
        let nodes: Vec<usize> = self.nodes().collect();
        for &t in &nodes {
            if self.adj[t].len() != 2 {
                continue;
            }
            let nbrs = self.adj[t].to_vec();
            let side_a = self.side_of(nbrs[0], t);
            let side_b = self.side_of(nbrs[1], t);
            let found = side_a.iter().any(|&x| {
                side_b
                    .iter()
                    .any(|&y| self.bags[t].is_subset(self.bags[x].union(self.bags[y])))
            });
            if found {
                self.drop_node(t);
                self.connect(nbrs[0], nbrs[1]);
                return true;
            }
        }
        false
    }

    /// Merges the first pair of leaf siblings with a small petal union
    /// into one leaf, padded back to full size from the centre bag.
    fn merge_leaf_siblings_step(&mut self, width: usize) -> bool {
        let nodes: Vec<usize> = self.nodes().collect();
        for &t in &nodes {
            let leaves: Vec<usize> = self.adj[t].iter().filter(|&l| self.adj[l].len() == 1).collect();
            for (i, &a) in leaves.iter().enumerate() {
                for &b in &leaves[i + 1..] {
                    let petals = self.bags[a]
                        .difference(self.bags[t])
                        .union(self.bags[b].difference(self.bags[t]));
                    if petals.len() <= width {
                        let mut merged = petals;
                        for v in self.bags[t].difference(petals).iter() {
                            if merged.len() >= width {
                                break;
                            }
                            merged = merged.insert(v);
                        }
                        self.bags[a] = merged;
                        self.drop_node(b);
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Nodes on the `start` side of removed node `cut`.
    fn side_of(&self, start: usize, cut: usize) -> Vec<usize> {
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for u in self.adj[t].iter() {
                if u != cut && !seen.contains(u) {
                    seen = seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.to_vec()
    }

    fn finish(self, base: &Graph) -> Decomposition {
        let live: Vec<usize> = self
            .alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(t, _)| t)
            .collect();
        let mut index = vec![usize::MAX; self.alive.len()];
        for (i, &t) in live.iter().enumerate() {
            index[t] = i;
        }
        let mut tree = Graph::empty(live.len());
        for &t in &live {
            for u in self.adj[t].iter() {
                if t < u {
                    tree.add_edge_mut(index[t], index[u]);
                }
            }
        }
        Decomposition {
            base: base.clone(),
            tree,
            bags: live.iter().map(|&t| self.bags[t]).collect(),
        }
    }
}

/// Minor witness for the product characterization: for an extreme
/// decomposition of width `k`, the base graph is a minor of `T · K_k`,
/// realized by picking per tree node the slot of each bag vertex in
/// ascending bag order. Product vertex `(t, i)` is the index `t * k + i`.
pub fn ltp_witness(d: &Decomposition) -> Result<(Graph, usize, MinorModel), Error> {
    d.require_valid_lenient(d.base.vertices())?;
    if let Err(v) = d.check_extreme() {
        return Err(Error::Precondition(format!(
            "product witness needs an extreme decomposition: {v}"
        )));
    }
    let k = d.width();
    if k == 0 {
        return Err(Error::Domain(
            "product witness is undefined for an empty decomposition".into(),
        ));
    }
    let host = lexicographic_product(&d.tree, &Graph::complete(k))?;
    let mut branch_sets = vec![VertexSet::EMPTY; d.base.order()];
    for (t, bag) in d.bags.iter().enumerate() {
        for (slot, v) in bag.iter().enumerate() {
            branch_sets[v] = branch_sets[v].insert(t * k + slot);
        }
    }
    let model = MinorModel {
        pattern: d.base.clone(),
        host,
        branch_sets,
    };
    if !verify_minor_model(&model) {
        return Err(Error::Internal(
            "product witness failed minor-model verification".into(),
        ));
    }
    Ok((d.tree.clone(), k, model))
}
