//! Partitioning compiler and bulk-synchronous-parallel executor for
//! cycle-accurate RTL simulation on a modeled multi-thousand-tile machine.
//!
//! The pipeline: a textual netlist IR is elaborated into a data-dependence
//! graph with split current/next register values; the backward cone of each
//! sink (a *fiber*) is the atom of partitioning; fibers are merged into
//! per-tile processes by a four-stage pipeline with a submodular cost
//! function; the result runs under two-barrier-per-cycle BSP semantics,
//! bit-exactly matching a sequential reference simulator; and an analytic
//! cost model projects per-cycle sync/communication/computation latency.

pub mod bitset;
pub mod netlist;

pub use bitset::NodeSet;
