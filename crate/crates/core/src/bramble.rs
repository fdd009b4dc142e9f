//! Strict brambles and classic brambles as first-class certificates:
//! validation, exact order computation, the cover-separator consistency
//! check, and the brute-force oracle for the strict bramble number.
//!
//! A strict bramble is a family of connected vertex sets that pairwise
//! intersect; the classic variant only requires pairwise touching. The
//! order of a bramble is the minimum size of a cover hitting every set,
//! and the strict bramble number is the maximum order over all strict
//! brambles of the graph.

use serde::{Deserialize, Serialize};

use crate::cliques::{maximal_cliques, BitRow};
use crate::error::{Error, Guards};
use crate::graph::{Graph, VertexSet};

/// Pairwise requirement on bramble sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BrambleMode {
    /// Every two sets share a vertex.
    Strict,
    /// Every two sets share a vertex or are joined by an edge.
    Touching,
}

/// A family of vertex sets of `base` claimed to form a bramble.
#[derive(Clone, Debug)]
pub struct Bramble {
    pub base: Graph,
    pub sets: Vec<VertexSet>,
    pub mode: BrambleMode,
}

/// First invariant failure found when validating a bramble.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrambleViolation {
    EmptySet { index: usize },
    DisconnectedSet { index: usize },
    IncompatiblePair { first: usize, second: usize },
}

impl std::fmt::Display for BrambleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BrambleViolation::EmptySet { index } => write!(f, "set #{index} is empty"),
            BrambleViolation::DisconnectedSet { index } => {
                write!(f, "set #{index} is not connected in the base graph")
            }
            BrambleViolation::IncompatiblePair { first, second } => {
                write!(f, "sets #{first} and #{second} violate the pairwise condition")
            }
        }
    }
}

impl Bramble {
    pub fn new(base: Graph, sets: Vec<VertexSet>, mode: BrambleMode) -> Self {
        Bramble { base, sets, mode }
    }

    /// Validates the two bramble invariants for the declared mode. A set
    /// with an out-of-range vertex is a structural error, distinct from an
    /// invariant failure.
    pub fn validate(&self) -> Result<Result<(), BrambleViolation>, Error> {
        let all = self.base.vertices();
        for (i, &s) in self.sets.iter().enumerate() {
            if !s.is_subset(all) {
                return Err(Error::Structural(format!(
                    "bramble set #{i} mentions vertices outside the base graph"
                )));
            }
        }
        for (i, &s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                return Ok(Err(BrambleViolation::EmptySet { index: i }));
            }
            if !self.base.is_connected_set(s) {
                return Ok(Err(BrambleViolation::DisconnectedSet { index: i }));
            }
        }
        for i in 0..self.sets.len() {
            for j in (i + 1)..self.sets.len() {
                if !sets_compatible(&self.base, self.sets[i], self.sets[j], self.mode) {
                    return Ok(Err(BrambleViolation::IncompatiblePair { first: i, second: j }));
                }
            }
        }
        Ok(Ok(()))
    }

    pub fn is_valid(&self) -> bool {
        matches!(self.validate(), Ok(Ok(())))
    }

    /// Exact order: the minimum size of a cover, together with the
    /// lexicographically least minimum cover.
    pub fn order(&self) -> (usize, VertexSet) {
        minimum_hitting_set(&self.sets)
    }
}

fn sets_compatible(g: &Graph, a: VertexSet, b: VertexSet, mode: BrambleMode) -> bool {
    match mode {
        BrambleMode::Strict => a.intersects(b),
        BrambleMode::Touching => a.intersects(b) || g.neighborhood_of_set(a).intersects(b),
    }
}

/// Minimum hitting set over `sets`, exact. Branch and bound establishes
/// the optimum size; a lexicographic sweep at that size pins the returned
/// cover to the least one.
pub fn minimum_hitting_set(sets: &[VertexSet]) -> (usize, VertexSet) {
    if sets.is_empty() {
        return (0, VertexSet::EMPTY);
    }
    let universe = sets.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
    let mut best = universe; // the whole universe always hits
    branch_cover(sets, VertexSet::EMPTY, universe, &mut best);
    let k = best.len();
    // lexicographically least cover of size k
    let vars: Vec<usize> = universe.iter().collect();
    let mut chosen = Vec::with_capacity(k);
    if let Some(cover) = lex_cover(sets, &vars, 0, k, &mut chosen) {
        (k, cover)
    } else {
        (k, best)
    }
}

fn branch_cover(sets: &[VertexSet], partial: VertexSet, universe: VertexSet, best: &mut VertexSet) {
    if partial.len() >= best.len() {
        return;
    }
    // most constrained uncovered set
    let next = sets
        .iter()
        .filter(|&&s| !s.intersects(partial))
        .min_by_key(|s| s.intersection(universe).len());
    match next {
        None => *best = partial,
        Some(&s) => {
            for v in s.iter() {
                branch_cover(sets, partial.insert(v), universe, best);
            }
        }
    }
}

fn lex_cover(
    sets: &[VertexSet],
    vars: &[usize],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
) -> Option<VertexSet> {
    if remaining == 0 {
        let cover = VertexSet::from_iter(chosen.iter().copied());
        return sets.iter().all(|s| s.intersects(cover)).then_some(cover);
    }
    for i in start..vars.len() {
        if vars.len() - i < remaining {
            break;
        }
        chosen.push(vars[i]);
        if let Some(c) = lex_cover(sets, vars, i + 1, remaining - 1, chosen) {
            return Some(c);
        }
        chosen.pop();
    }
    None
}

/// Consistency check behind cover/separator interplay: if `X` and `Y` both
/// cover the bramble and `S` is an (X,Y)-separator of the base graph, then
/// `S` covers the bramble too. Precondition failures are errors; under the
/// preconditions the returned assertion must be `true`.
pub fn check_cover_separator(
    b: &Bramble,
    x: VertexSet,
    y: VertexSet,
    s: VertexSet,
) -> Result<bool, Error> {
    b.validate()?
        .map_err(|v| Error::Precondition(format!("bramble invalid: {v}")))?;
    let covers = |c: VertexSet| b.sets.iter().all(|set| set.intersects(c));
    if !covers(x) {
        return Err(Error::Precondition("X does not cover the bramble".into()));
    }
    if !covers(y) {
        return Err(Error::Precondition("Y does not cover the bramble".into()));
    }
    if !crate::separators::is_xy_separator(&b.base, x, y, s) {
        return Err(Error::Precondition("S is not an (X,Y)-separator".into()));
    }
    Ok(covers(s))
}

/// Brute-force oracle for the (strict or classic) bramble number.
///
/// Enumerates all connected vertex sets, forms the pairwise-compatibility
/// graph, walks its maximal cliques (the maximal brambles; enlarging a
/// bramble never lowers its order), and maximizes the exact minimum cover.
/// Returns the value with a witness bramble achieving it, canonically
/// least among maximum-order maximal brambles.
pub fn sbn_oracle(g: &Graph, mode: BrambleMode, guards: &Guards) -> Result<(usize, Bramble), Error> {
    guards.check("bramble oracle", g.order(), guards.oracle)?;
    let n = g.order();
    if n == 0 {
        return Ok((0, Bramble::new(g.clone(), vec![], mode)));
    }
    let connected: Vec<VertexSet> = (1u64..(1u64 << n))
        .map(VertexSet::from_bits)
        .filter(|&s| g.is_connected_set(s))
        .collect();
    let m = connected.len();
    let adj: Vec<BitRow> = (0..m)
        .map(|i| {
            let mut row = BitRow::zero(m);
            for j in 0..m {
                if j != i && sets_compatible(g, connected[i], connected[j], mode) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let families = maximal_cliques(&adj, m, guards.clique_cap)?;
    let mut best: Option<(usize, Vec<VertexSet>)> = None;
    for family in families {
        let mut sets: Vec<VertexSet> = family.iter().map(|i| connected[i]).collect();
        sets.sort();
        let (order, _) = minimum_hitting_set(&sets);
        let better = match &best {
            None => true,
            Some((bo, bs)) => order > *bo || (order == *bo && sets < *bs),
        };
        if better {
            best = Some((order, sets));
        }
    }
    let (value, sets) = best.unwrap_or((0, vec![]));
    let witness = Bramble::new(g.clone(), sets, mode);
    debug_assert!(witness.is_valid());
    Ok((value, witness))
}
