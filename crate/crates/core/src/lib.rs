//! Unsharp logical connectives on finite bounded posets.
//!
//! A bounded poset need not be a lattice, so negation, implication and
//! conjunction cannot in general return a single element. Here they are
//! *operators*: each returns the antichain of maximal elements satisfying the
//! defining condition. When the classical (relative) pseudocomplement exists
//! the result collapses to that element.
//!
//! The crate is organised as:
//!
//! * [`poset`] and [`set`]: the bounded poset, element sets as bit vectors,
//!   lower cones, `Max`, and the set quasiorders `≤`, `≤₁`, `=₁`.
//! * [`connectives`]: `x⁰`, `x→y`, `x⊙y` in element and set form, operator
//!   tables and classical residuum detection.
//! * [`laws`]: executable model checks for the algebraic laws of the
//!   connectives, including the characterizations of `⁰` and `→`.
//! * [`deduction`]: deductive systems, induced relations and the substitution
//!   property of equivalences on sets.
//! * [`enumeration`]: exhaustive and random generation of bounded posets and
//!   law sweeps over them.
//! * [`io`]: the JSON poset document, table rendering and DOT export.

pub mod connectives;
pub mod deduction;
pub mod enumeration;
mod error;
pub mod io;
pub mod laws;
pub mod poset;
pub mod set;
#[cfg(test)]
mod testutil;

pub use connectives::{Algebra, BinaryTable, Operator, OperatorTable, UnaryTable};
pub use error::{Error, Result};
pub use poset::{CompareResult, Poset};
pub use set::ElementSet;
