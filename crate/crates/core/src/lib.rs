//! Exact sum list coloring for small graphs.
//!
//! * [`graph`]: bit-row graphs, graph6, canonical labeling, blocks and the
//!   named graph families.
//! * [`choosability`]: list colorability, `f`-choosability with witnesses,
//!   the simple-vertex reductions and forcing assignments.
//! * [`sumchoice`]: sum choice numbers, sc-greedy classification and the
//!   memo store.

pub mod choosability;
pub mod graph;
pub mod sumchoice;
