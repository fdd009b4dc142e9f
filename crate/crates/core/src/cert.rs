//! JSON schemas for every certificate the command line emits or accepts.
//! Everything re-validates on the way in and out; no unchecked output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bramble::{Bramble, BrambleMode};
use crate::decomp::{Decomposition, DecompKind};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::io::write_graph6;
use crate::obstructions::ObstructionRecord;
use crate::reduction::GadgetMap;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GraphJson {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub graph6: String,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Result<Self, Error> {
        Ok(GraphJson {
            order: g.order(),
            edges: g.edges(),
            graph6: write_graph6(g)?,
        })
    }

    pub fn to_graph(&self) -> Result<Graph, Error> {
        Graph::from_edges(self.order, &self.edges)
    }
}

/// `{ "kind": "lenient"|"classic", "tree_edges": [[a,b],..],
///    "bags": { "node": [vertices] } }`
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct DecompositionJson {
    pub kind: String,
    pub tree_edges: Vec<(usize, usize)>,
    pub bags: BTreeMap<String, Vec<usize>>,
}

impl DecompositionJson {
    pub fn from_decomposition(d: &Decomposition, kind: DecompKind) -> Self {
        DecompositionJson {
            kind: match kind {
                DecompKind::Lenient => "lenient".into(),
                DecompKind::Classic => "classic".into(),
            },
            tree_edges: d.tree.edges(),
            bags: d
                .bags
                .iter()
                .enumerate()
                .map(|(t, b)| (t.to_string(), b.to_vec()))
                .collect(),
        }
    }

    pub fn kind(&self) -> Result<DecompKind, Error> {
        match self.kind.as_str() {
            "lenient" => Ok(DecompKind::Lenient),
            "classic" => Ok(DecompKind::Classic),
            other => Err(Error::Structural(format!("unknown decomposition kind {other:?}"))),
        }
    }

    /// Rebuilds the decomposition over `base`. Bags must be keyed by the
    /// tree nodes `0..m` exactly; anything else is a structural error.
    pub fn to_decomposition(&self, base: &Graph) -> Result<Decomposition, Error> {
        let m = self.bags.len();
        let mut bags = vec![VertexSet::EMPTY; m];
        for (key, verts) in &self.bags {
            let node: usize = key.parse().map_err(|_| {
                Error::Structural(format!("bag key {key:?} is not a tree node index"))
            })?;
            if node >= m {
                return Err(Error::Structural(format!(
                    "bag assigned to node {node}, but the tree has nodes 0..{m}"
                )));
            }
            for &v in verts {
                if v >= base.order() {
                    return Err(Error::Structural(format!(
                        "bag at node {node} mentions vertex {v} outside the graph"
                    )));
                }
                bags[node] = bags[node].insert(v);
            }
        }
        for &(a, b) in &self.tree_edges {
            if a >= m || b >= m {
                return Err(Error::Structural(format!(
                    "tree edge ({a},{b}) references a non-tree node"
                )));
            }
        }
        let tree = if m == 1 && self.tree_edges.is_empty() {
            Graph::empty(1)
        } else {
            Graph::from_edges(m, &self.tree_edges)
                .map_err(|e| Error::Structural(format!("bad tree: {e}")))?
        };
        Ok(Decomposition {
            base: base.clone(),
            tree,
            bags,
        })
    }
}

/// `{ "mode": "strict"|"touching", "sets": [[v,..],..] }`
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct BrambleJson {
    pub mode: BrambleMode,
    pub sets: Vec<Vec<usize>>,
}

impl BrambleJson {
    pub fn from_bramble(b: &Bramble) -> Self {
        BrambleJson {
            mode: b.mode,
            sets: b.sets.iter().map(|s| s.to_vec()).collect(),
        }
    }

    pub fn to_bramble(&self, base: &Graph) -> Result<Bramble, Error> {
        for (i, set) in self.sets.iter().enumerate() {
            for &v in set {
                if v >= base.order() {
                    return Err(Error::Structural(format!(
                        "bramble set #{i} mentions vertex {v} outside the graph"
                    )));
                }
            }
        }
        Ok(Bramble::new(
            base.clone(),
            self.sets
                .iter()
                .map(|s| VertexSet::from_iter(s.iter().copied()))
                .collect(),
            self.mode,
        ))
    }
}

/// Either certificate, distinguished by its fields.
#[derive(Deserialize, Debug)]
#[serde(untagged)]
pub enum CertificateJson {
    Decomposition(DecompositionJson),
    Bramble(BrambleJson),
}

#[derive(Serialize)]
pub struct SbnJson {
    pub sbn: usize,
    pub bramble: BrambleJson,
    pub decomposition: DecompositionJson,
}

#[derive(Serialize)]
pub struct ObstructionRecordJson {
    pub graph6: String,
    pub order: usize,
    pub k: usize,
    pub two_connected: bool,
    pub bramble: BrambleJson,
    pub minimality_log: Vec<crate::obstructions::MinorStep>,
}

impl ObstructionRecordJson {
    pub fn from_record(r: &ObstructionRecord) -> Result<Self, Error> {
        Ok(ObstructionRecordJson {
            graph6: write_graph6(&r.graph)?,
            order: r.graph.order(),
            k: r.k,
            two_connected: r.graph.is_two_connected(),
            bramble: BrambleJson::from_bramble(&r.bramble),
            minimality_log: r.minimality_log.clone(),
        })
    }
}

#[derive(Serialize)]
pub struct GadgetJson {
    pub k: usize,
    pub source: GraphJson,
    pub output: GraphJson,
    pub provenance: Vec<crate::reduction::GadgetVertex>,
}

impl GadgetJson {
    pub fn from_gadget(gm: &GadgetMap) -> Result<Self, Error> {
        Ok(GadgetJson {
            k: gm.k,
            source: GraphJson::from_graph(&gm.source)?,
            output: GraphJson::from_graph(&gm.output)?,
            provenance: gm.provenance.clone(),
        })
    }
}
