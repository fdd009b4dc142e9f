//! Maximal clique enumeration (Bron–Kerbosch with pivoting).
//!
//! The enumerator works on adjacency bit-rows so it can serve both graphs
//! (at most 64 vertices) and the larger compatibility structures built by
//! the bramble oracle, whose nodes are connected vertex sets.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// A fixed-width bit row sized for the instance at hand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zero(nbits: usize) -> Self {
        BitRow {
            words: vec![0; nbits.div_ceil(64).max(1)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut r = Self::zero(nbits);
        for i in 0..nbits {
            r.insert(i);
        }
        r
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn and(&self, other: &Self) -> Self {
        BitRow {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    #[must_use]
    pub fn and_not(&self, other: &Self) -> Self {
        BitRow {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn intersection_count(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// All maximal cliques of the graph described by `adj`, visited in a fixed
/// order; fails once more than `cap` cliques are emitted.
pub fn maximal_cliques(adj: &[BitRow], nbits: usize, cap: u64) -> Result<Vec<BitRow>, Error> {
    let mut out = Vec::new();
    let mut emitted = 0u64;
    let r = BitRow::zero(nbits);
    let p = BitRow::full(nbits);
    let x = BitRow::zero(nbits);
    bron_kerbosch(adj, r, p, x, &mut out, &mut emitted, cap)?;
    Ok(out)
}

fn bron_kerbosch(
    adj: &[BitRow],
    r: BitRow,
    mut p: BitRow,
    mut x: BitRow,
    out: &mut Vec<BitRow>,
    emitted: &mut u64,
    cap: u64,
) -> Result<(), Error> {
    if p.is_empty() && x.is_empty() {
        *emitted += 1;
        if *emitted > cap {
            return Err(Error::guard(format!(
                "maximal clique enumeration exceeded the cap of {cap}"
            )));
        }
        out.push(r);
        return Ok(());
    }
    // pivot: vertex of P ∪ X with the most neighbours in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (adj[u].intersection_count(&p), std::cmp::Reverse(u)))
        .expect("P ∪ X is non-empty here");
    let candidates: Vec<usize> = p.and_not(&adj[pivot]).iter().collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.insert(v);
        bron_kerbosch(
            adj,
            r2,
            p.and(&adj[v]),
            x.and(&adj[v]),
            out,
            emitted,
            cap,
        )?;
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Maximal cliques of a graph as vertex sets, ascending in a fixed order.
pub fn graph_maximal_cliques(g: &Graph, cap: u64) -> Result<Vec<VertexSet>, Error> {
    let n = g.order();
    let adj: Vec<BitRow> = (0..n)
        .map(|v| {
            let mut row = BitRow::zero(n);
            for w in g.neighbors(v).iter() {
                row.insert(w);
            }
            row
        })
        .collect();
    let mut cliques: Vec<VertexSet> = maximal_cliques(&adj, n, cap)?
        .into_iter()
        .map(|row| VertexSet::from_iter(row.iter()))
        .collect();
    cliques.sort();
    Ok(cliques)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cliques_of_small_graphs() {
        let cap = 1_000_000;
        assert_eq!(graph_maximal_cliques(&Graph::complete(4), cap).unwrap().len(), 1);
        assert_eq!(graph_maximal_cliques(&Graph::cycle(4), cap).unwrap().len(), 4);
        assert_eq!(graph_maximal_cliques(&Graph::path(3), cap).unwrap().len(), 2);
        // two triangles glued on an edge
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cliques = graph_maximal_cliques(&g, cap).unwrap();
        assert_eq!(cliques.len(), 2);
        assert!(cliques.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn cap_is_enforced() {
        // C7 has 7 maximal cliques (its edges); a cap of 3 must refuse.
        let err = graph_maximal_cliques(&Graph::cycle(7), 3).unwrap_err();
        assert!(matches!(err, Error::Guard(_)));
    }

    #[test]
    fn edgeless_graph_has_singleton_cliques() {
        let cliques = graph_maximal_cliques(&Graph::empty(3), 10).unwrap();
        assert_eq!(cliques.len(), 3);
    }
}
