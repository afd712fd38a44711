//! Exact minimal-CNOT synthesis for wire permutations.
//!
//! A CNOT-only circuit on `n` wires acts on basis states as an invertible
//! linear map over GF(2), so synthesis questions become shortest-word
//! questions in the Cayley graph of GL(n,2) with the `n(n-1)` CNOT
//! generators. This crate provides:
//!
//! - [`gf2`]: the exact linear model — gates, bit-packed matrices, circuits,
//!   and one-line wire permutations.
//! - [`search`]: full breadth-first distance tables over GL(n,2) for
//!   `2 <= n <= 5`, geodesic enumeration of *all* minimal circuits, an
//!   independent exhaustive oracle, and admissible bounds.
//! - [`symmetry`]: wire-rotation equivalence classes of circuits and
//!   relabeling conjugation of permutation targets.
//! - [`analysis`]: weight-trace analytics, short-circuit impossibility
//!   reports, and the consolidated verification suite for the known
//!   minimal-count results.
//!
//! # Quick start
//!
//! ```
//! use cperm_core::{build_distance_table, PermSpec};
//!
//! let table = build_distance_table(3).unwrap();
//! let shift = PermSpec::parse("231").unwrap();
//! assert_eq!(table.min_count_perm(&shift).unwrap(), 6);
//! assert_eq!(table.enumerate_minimal_perm(&shift).unwrap().len(), 90);
//! ```

pub mod analysis;
pub mod gf2;
pub mod search;
pub mod symmetry;

pub use gf2::{format_bits, parse_bits, Circuit, CnotGate, Gf2Error, Gf2Matrix, ParseError, PermSpec};
pub use search::{
    build_distance_table, gl_order, lower_bound_rows, upper_bound_cycles, DistanceTable,
    SearchError, TableStore,
};
pub use symmetry::{group_into_classes, orbit_under_rotation, EquivalenceClass, WireRelabeling};
