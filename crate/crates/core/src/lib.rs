//! Exact combinatorics of partition codes and vertex operator actions on
//! Schur and Schur Q-functions.
//!
//! The library has two halves that check each other. The combinatorial half
//! works on codes of partitions: straightening of operator index sequences,
//! the graded action of the untwisted series on a Schur function and of the
//! twisted series on a Q-function, and the code-walk Littlewood-Richardson
//! and Pieri rules. The oracle half recomputes everything from first
//! principles in exact power-sum arithmetic: operator exponentials applied
//! directly, Jacobi-Trudi determinants, twisted and untwisted inner
//! products, and tableau enumeration. The [`verify`] sweeps replay the
//! identities against the oracle on every instance up to a weight bound.
//!
//! All values are immutable and all operations are pure functions, so
//! everything can be used concurrently without restriction.

pub mod bernstein;
pub mod code;
pub mod error;
pub mod expansion;
pub mod json;
pub mod lr_pieri;
pub mod oracle;
pub mod partition;
pub mod qvertex;
pub mod verify;

pub use code::{Code, ShiftedCode, Step};
pub use error::Error;
pub use expansion::{
    ChargedTerm, GradedAction, QExpansion, QGradedAction, SchurExpansion, Sign, SignedPartition,
    SignedStrict,
};
pub use lr_pieri::CodeWalk;
pub use partition::{is_horizontal_strip, is_vertical_strip, Partition, StrictPartition};
