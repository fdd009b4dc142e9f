//! Exact computation of strict bramble numbers on small graphs, with
//! mutually cross-checking certificates.
//!
//! A strict bramble of a graph is a family of connected vertex sets that
//! pairwise intersect; its order is the minimum size of a set hitting
//! every member, and the strict bramble number `sbn(G)` is the maximum
//! order over all strict brambles. This crate computes the parameter
//! exactly through four interchangeable lenses and checks them against
//! each other:
//!
//! * brambles themselves (lower-bound certificates, [`bramble`]),
//! * lenient tree decompositions (upper-bound certificates, [`decomp`],
//!   found exhaustively by [`search`]),
//! * minors of tree–clique lexicographic products ([`decomp::ltp_witness`]),
//! * spanning subgraphs of k-domino-trees ([`domino`]).
//!
//! On top of the equivalence sit the minor obstructions for strict
//! bramble number two ([`obstructions`]) and the hardness gadget relating
//! the parameter to treewidth ([`reduction`]).
//!
//! ```
//! use brambles::{Graph, sbn_exact, Guards};
//!
//! let guards = Guards::default();
//! let k4 = Graph::complete(4);
//! let cert = sbn_exact(&k4, &guards).unwrap();
//! assert_eq!(cert.value, 2);            // sbn(K4) = 2, although tw(K4) = 3
//! assert_eq!(cert.bramble.order().0, 2);
//! assert_eq!(cert.decomposition.width(), 2);
//! ```

pub mod bramble;
pub mod canon;
pub mod cert;
pub mod chordal;
pub mod cliques;
pub mod decomp;
pub mod domino;
pub mod error;
pub mod graph;
pub mod io;
pub mod minor;
pub mod obstructions;
pub mod reduction;
pub mod search;
pub mod separators;

pub use bramble::{sbn_oracle, Bramble, BrambleMode};
pub use decomp::{Decomposition, DecompKind};
pub use error::{Error, Guards};
pub use graph::{lexicographic_product, Graph, VertexSet};
pub use io::{parse_graph, Format};
pub use search::decide_width_le_k;

/// The exact strict bramble number with both certificates: a maximum-order
/// bramble below and a minimum-width lenient decomposition above, each
/// independently validated, agreeing on the value.
#[derive(Clone, Debug)]
pub struct SbnCertificate {
    pub value: usize,
    pub bramble: Bramble,
    pub decomposition: Decomposition,
}

/// Computes `sbn(g)` by running the bramble oracle and the decomposition
/// search independently and insisting that they agree.
pub fn sbn_exact(g: &Graph, guards: &Guards) -> Result<SbnCertificate, Error> {
    let (width, decomposition) = search::min_width(g, guards)?;
    let (value, bramble) = sbn_oracle(g, BrambleMode::Strict, guards)?;
    if value != width {
        return Err(Error::Internal(format!(
            "bramble oracle says {value}, decomposition search says {width}"
        )));
    }
    bramble
        .validate()?
        .map_err(|v| Error::Internal(format!("oracle witness invalid: {v}")))?;
    decomposition
        .validate(DecompKind::Lenient)?
        .map_err(|v| Error::Internal(format!("search witness invalid: {v}")))?;
    Ok(SbnCertificate {
        value,
        bramble,
        decomposition,
    })
}

// The guide chapters double as documentation tests: every code block in
// the book builds and runs against the public API.
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod guide_introduction {}
#[doc = include_str!("../../../book/src/brambles.md")]
pub mod guide_brambles {}
#[doc = include_str!("../../../book/src/decompositions.md")]
pub mod guide_decompositions {}
#[doc = include_str!("../../../book/src/domino-trees.md")]
pub mod guide_domino_trees {}
#[doc = include_str!("../../../book/src/obstructions.md")]
pub mod guide_obstructions {}
#[doc = include_str!("../../../book/src/hardness.md")]
pub mod guide_hardness {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod guide_cli {}
