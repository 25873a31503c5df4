//! Data-dependence graph elaboration and fiber extraction.
//!
//! Each register splits into a read-only current value and a write-only next
//! value; stateless compute nodes connect them. Wires elaborate to shared
//! nodes (one per definition, many consumers); duplication across tiles only
//! materializes later when fibers land on different processes. Sinks are the
//! next-write node of every register and the write-port node of every array
//! write statement. A fiber is the backward cone of one sink.

mod cost;
mod elaborate;
mod fiber;

pub use cost::{CostTable, UnknownOp};
pub use elaborate::elaborate;
pub use fiber::extract_fibers;

use crate::bitset::NodeSet;
use crate::netlist::{ArrayId, BinaryOp, InputId, RegId, TypedNetlist, UnaryOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComputeOp {
    Unary(UnaryOp),
    Binary(BinaryOp),
    Mux,
    Slice { hi: u32, lo: u32 },
    Concat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// Start-of-cycle value of a register.
    CurrentRead(RegId),
    /// End-of-cycle value of a register; sink.
    NextWrite(RegId),
    Compute(ComputeOp),
    Input(InputId),
    Const(u64),
    /// Start-of-cycle contents of an array.
    ArrayState(ArrayId),
    /// One read of an array; operands: [state, index].
    ArrayReadPort(ArrayId),
    /// One write statement; operands: [index, value, enable]; sink.
    ArrayWritePort { array: ArrayId, stmt_idx: u32 },
}

#[derive(Clone, Debug)]
pub struct DepNode {
    pub kind: NodeKind,
    pub width: u32,
    /// Machine cycles charged when a process evaluates this node.
    pub cost: u32,
    /// State bytes a process holding this node must keep resident.
    pub data_mem: u32,
    /// Code bytes charged for this node.
    pub code_mem: u32,
}

#[derive(Clone, Copy, Debug)]
pub struct WritePort {
    pub node: u32,
    pub array: ArrayId,
    pub stmt_idx: u32,
}

/// The elaborated graph. Node ids are assigned in a topological order, so
/// `topo_order` is the identity permutation; it is kept explicit because
/// downstream passes index through it rather than assuming the invariant.
#[derive(Clone, Debug)]
pub struct DepGraph {
    pub nodes: Vec<DepNode>,
    /// Operand (producer) list per node, in positional order.
    pub operands: Vec<Vec<u32>>,
    pub topo_order: Vec<u32>,
    /// Next-write nodes in register order, then write ports in statement order.
    pub sinks: Vec<u32>,
    pub current_read_of: Vec<u32>,
    pub next_write_of: Vec<u32>,
    /// Array state node, or `u32::MAX` if the array is never read.
    pub array_state_of: Vec<u32>,
    pub write_ports: Vec<WritePort>,
    /// Human-readable descriptions of nodes that were elaborated but
    /// unreachable from every sink, and therefore dropped.
    pub dropped: Vec<String>,
}

impl DepGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Per-node cost vector for set-weighted sums.
    pub fn cost_vec(&self) -> Vec<u32> {
        self.nodes.iter().map(|n| n.cost).collect()
    }

    pub fn data_mem_vec(&self) -> Vec<u32> {
        self.nodes.iter().map(|n| n.data_mem).collect()
    }

    pub fn code_mem_vec(&self) -> Vec<u32> {
        self.nodes.iter().map(|n| n.code_mem).collect()
    }

    /// Deterministic line-oriented text form for diffing and debugging.
    pub fn dump(&self, netlist: &TypedNetlist) -> String {
        let mut out = String::new();
        for (id, node) in self.nodes.iter().enumerate() {
            let kind = match node.kind {
                NodeKind::CurrentRead(r) => format!("current_read({})", netlist.registers[r.index()].name),
                NodeKind::NextWrite(r) => format!("next_write({})", netlist.registers[r.index()].name),
                NodeKind::Compute(op) => format!("compute({})", compute_op_name(op)),
                NodeKind::Input(i) => format!("input({})", netlist.inputs[i.index()].name),
                NodeKind::Const(v) => format!("const({v})"),
                NodeKind::ArrayState(a) => format!("array_state({})", netlist.arrays[a.index()].name),
                NodeKind::ArrayReadPort(a) => format!("array_read({})", netlist.arrays[a.index()].name),
                NodeKind::ArrayWritePort { array, stmt_idx } => {
                    format!("array_write({},{stmt_idx})", netlist.arrays[array.index()].name)
                }
            };
            out.push_str(&format!("node {id} {kind} {} {}\n", node.width, node.cost));
        }
        for (dst, ops) in self.operands.iter().enumerate() {
            for &src in ops {
                out.push_str(&format!("edge {src} {dst}\n"));
            }
        }
        out
    }
}

pub fn compute_op_name(op: ComputeOp) -> String {
    match op {
        ComputeOp::Unary(UnaryOp::Not) => "not".into(),
        ComputeOp::Unary(UnaryOp::Neg) => "neg".into(),
        ComputeOp::Binary(b) => format!("{b:?}").to_lowercase(),
        ComputeOp::Mux => "mux".into(),
        ComputeOp::Slice { hi, lo } => format!("slice[{hi}:{lo}]"),
        ComputeOp::Concat => "concat".into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberId(pub u32);

impl FiberId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The backward cone of one sink, with cached totals. The cached values are
/// recomputable from `cone` and the graph; validation recomputes them.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub id: FiberId,
    pub sink: u32,
    pub cone: NodeSet,
    /// Deduplicated cycle cost of the cone (t_i).
    pub cost: u64,
    pub data_mem: u64,
    pub code_mem: u64,
    /// Arrays this fiber reads or writes, ascending.
    pub touched_arrays: Vec<ArrayId>,
    /// Registers whose current value the cone reads, ascending.
    pub read_registers: Vec<RegId>,
}
