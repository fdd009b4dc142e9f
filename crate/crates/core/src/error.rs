//! Crate-wide error type.
//!
//! Validators report their findings as dedicated verdict types with
//! witnesses; this enum covers everything that is an *error* rather than a
//! negative answer: malformed input, violated preconditions, refused guard
//! limits and internal bug traps.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input, with the position that failed.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// The request itself is invalid (bad parameters, broken object shape).
    #[error("{0}")]
    Domain(String),

    /// A structurally broken certificate: indices out of range, bags for
    /// missing tree nodes, component families that do not tile the graph.
    #[error("structural error: {0}")]
    Structural(String),

    /// A stated precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive primitive was asked to run beyond its size guard.
    #[error("guard refused: {0}")]
    Guard(String),

    /// A theorem-backed consistency check failed; this is a bug trap, never
    /// a legitimate negative answer.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn guard(message: impl Into<String>) -> Self {
        Error::Guard(message.into())
    }
}

/// Size limits for the exponential primitives. Every limit can be raised
/// explicitly by the caller (`--guard` on the command line); the defaults
/// keep desk-scale calls honest about what they can exhaust.
#[derive(Clone, Copy, Debug)]
pub struct Guards {
    /// Vertex limit for subset-exponential primitives (minimal separators
    /// on non-chordal graphs, canonical codes).
    pub subsets: usize,
    /// Vertex limit for the bramble oracle.
    pub oracle: usize,
    /// Vertex limit for the lenient-decomposition search.
    pub search: usize,
    /// Vertex limit for the exact treewidth solver.
    pub treewidth: usize,
    /// Pattern order limit for minor search.
    pub minor_pattern: usize,
    /// Cap on maximal cliques emitted while enumerating brambles.
    pub clique_cap: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            subsets: 16,
            oracle: 8,
            search: 12,
            treewidth: 14,
            minor_pattern: 8,
            clique_cap: 10_000_000,
        }
    }
}

impl Guards {
    /// A copy with all vertex guards raised to at least `n`; the clique cap
    /// is left alone.
    #[must_use]
    pub fn with_vertex_limit(mut self, n: usize) -> Self {
        self.subsets = self.subsets.max(n);
        self.oracle = self.oracle.max(n);
        self.search = self.search.max(n);
        self.treewidth = self.treewidth.max(n);
        self.minor_pattern = self.minor_pattern.max(n);
        self
    }

    pub fn check(&self, what: &str, n: usize, limit: usize) -> Result<(), Error> {
        if n > limit {
            Err(Error::Guard(format!(
                "{what} on {n} vertices exceeds the guard of {limit}; raise the guard to run anyway"
            )))
        } else {
            Ok(())
        }
    }
}
