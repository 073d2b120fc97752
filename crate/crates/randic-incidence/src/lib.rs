//! Randić incidence matrices and their singular-value energies.
//!
//! The Randić incidence matrix of a simple graph weights each vertex-edge
//! incidence by `d^{-1/2}`, where `d` is the vertex degree. Its singular
//! values define the Randić incidence energy, a spectral graph invariant
//! that this crate computes, bounds, and explores over enumerated graph
//! families:
//!
//! - [`graph`] — graph representation, graph6 I/O, generators, structural
//!   queries, and free-tree enumeration;
//! - [`spectra`] — dense matrix constructions and a symmetric eigensolver
//!   with an explicit residual contract;
//! - [`energy`] — the Randić incidence energy, the classical incidence
//!   energy, the degree-exponent generalization, and the Randić index;
//! - [`bounds`] — machine-checkable reports for the sharp inequalities
//!   these energies satisfy, with equality-case detection;
//! - [`extremal`] — exhaustive energy rankings over all free trees of a
//!   given order, plus batch scanning of graph6 corpora;
//! - [`cli`] — the building blocks of the `rie` command-line tool;
//! - [`verify`] — the self-check suite behind `rie verify`.
//!
//! A narrative guide with runnable examples lives in the `book/` directory;
//! its code blocks compile and run as doctests of this crate.

pub mod bounds;
pub mod cli;
pub mod energy;
pub mod extremal;
pub mod graph;
pub mod spectra;
pub mod verify;

#[cfg(test)]
pub(crate) mod test_support;

use thiserror::Error as ThisError;

pub use graph::{Graph, GraphError};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, ThisError)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("eigensolver did not converge within {0} sweeps")]
    NonConvergence(usize),
    #[error("eigenpair residual {residual:.3e} exceeds bound {bound:.3e}")]
    EigenResidual { residual: f64, bound: f64 },
    #[error("Gram eigenvalue {value:.6e} below the clamp threshold -{clamp:.0e}")]
    NegativeEigenvalue { value: f64, clamp: f64 },
    #[error("graph has isolated vertices (first: {0})")]
    IsolatedVertex(usize),
    #[error("{check}: {reason}")]
    Precondition {
        check: &'static str,
        reason: String,
    },
}

impl Error {
    /// True for input/precondition errors, false for numerical failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Graph(_) | Error::IsolatedVertex(_) | Error::Precondition { .. }
        )
    }
}

// The book's code blocks double as doctests so the guide cannot drift from
// the crate. See book/src/*.md.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(graphs, "../../../book/src/graphs.md");
    chapter!(matrices, "../../../book/src/matrices.md");
    chapter!(energies, "../../../book/src/energies.md");
    chapter!(bounds, "../../../book/src/bounds.md");
    chapter!(extremal, "../../../book/src/extremal.md");
    chapter!(cli, "../../../book/src/cli.md");
}
