//! Per-op node cost table.
//!
//! The machine model charges a configurable cycle count per node kind. The
//! same table drives both the cost model and the executor's evaluation
//! counters, so modeled rankings and measured rankings agree by construction.

use crate::netlist::{BinaryOp, UnaryOp};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
#[error("unknown op `{0}` in cost table")]
pub struct UnknownOp(pub String);

/// Cycle cost per op, plus the per-node code byte estimate used for the
/// code-memory budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostTable {
    pub add: u32,
    pub sub: u32,
    pub mul: u32,
    pub and: u32,
    pub or: u32,
    pub xor: u32,
    pub shl: u32,
    pub shr: u32,
    pub eq: u32,
    pub ne: u32,
    pub lt: u32,
    pub le: u32,
    pub not: u32,
    pub neg: u32,
    pub mux: u32,
    pub slice: u32,
    pub concat: u32,
    pub array_read: u32,
    pub array_write: u32,
    pub current_read: u32,
    pub next_write: u32,
    pub const_: u32,
    pub input: u32,
    pub array_state: u32,
    /// Code bytes charged per executable node (compute and port nodes).
    pub code_bytes_per_node: u32,
}

impl Default for CostTable {
    fn default() -> Self {
        CostTable {
            add: 1,
            sub: 1,
            mul: 4,
            and: 1,
            or: 1,
            xor: 1,
            shl: 1,
            shr: 1,
            eq: 1,
            ne: 1,
            lt: 1,
            le: 1,
            not: 1,
            neg: 1,
            mux: 1,
            slice: 1,
            concat: 1,
            array_read: 2,
            array_write: 2,
            current_read: 1,
            next_write: 1,
            const_: 0,
            input: 0,
            array_state: 0,
            code_bytes_per_node: 16,
        }
    }
}

impl CostTable {
    /// Zero cost for every op; fiber costs collapse to 0.
    pub fn zero() -> Self {
        CostTable {
            add: 0,
            sub: 0,
            mul: 0,
            and: 0,
            or: 0,
            xor: 0,
            shl: 0,
            shr: 0,
            eq: 0,
            ne: 0,
            lt: 0,
            le: 0,
            not: 0,
            neg: 0,
            mux: 0,
            slice: 0,
            concat: 0,
            array_read: 0,
            array_write: 0,
            current_read: 0,
            next_write: 0,
            const_: 0,
            input: 0,
            array_state: 0,
            code_bytes_per_node: 0,
        }
    }

    /// Applies `op=cost` overrides to the default table.
    pub fn with_overrides(pairs: &[(String, u32)]) -> Result<Self, UnknownOp> {
        let mut t = CostTable::default();
        for (key, value) in pairs {
            let slot = match key.as_str() {
                "add" => &mut t.add,
                "sub" => &mut t.sub,
                "mul" => &mut t.mul,
                "and" => &mut t.and,
                "or" => &mut t.or,
                "xor" => &mut t.xor,
                "shl" => &mut t.shl,
                "shr" => &mut t.shr,
                "eq" => &mut t.eq,
                "ne" => &mut t.ne,
                "lt" => &mut t.lt,
                "le" => &mut t.le,
                "not" => &mut t.not,
                "neg" => &mut t.neg,
                "mux" => &mut t.mux,
                "slice" => &mut t.slice,
                "concat" => &mut t.concat,
                "array_read" => &mut t.array_read,
                "array_write" => &mut t.array_write,
                "current_read" => &mut t.current_read,
                "next_write" => &mut t.next_write,
                "const" => &mut t.const_,
                "input" => &mut t.input,
                "array_state" => &mut t.array_state,
                "code_bytes_per_node" => &mut t.code_bytes_per_node,
                other => return Err(UnknownOp(other.to_string())),
            };
            *slot = *value;
        }
        Ok(t)
    }

    pub fn binary(&self, op: BinaryOp) -> u32 {
        match op {
            BinaryOp::Add => self.add,
            BinaryOp::Sub => self.sub,
            BinaryOp::Mul => self.mul,
            BinaryOp::And => self.and,
            BinaryOp::Or => self.or,
            BinaryOp::Xor => self.xor,
            BinaryOp::Shl => self.shl,
            BinaryOp::Shr => self.shr,
            BinaryOp::Eq => self.eq,
            BinaryOp::Ne => self.ne,
            BinaryOp::Lt => self.lt,
            BinaryOp::Le => self.le,
        }
    }

    pub fn unary(&self, op: UnaryOp) -> u32 {
        match op {
            UnaryOp::Not => self.not,
            UnaryOp::Neg => self.neg,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_and_unknown_op() {
        let t = CostTable::with_overrides(&[("mul".into(), 7)]).unwrap();
        assert_eq!(t.mul, 7);
        assert_eq!(t.add, 1);
        let err = CostTable::with_overrides(&[("frobnicate".into(), 1)]).unwrap_err();
        assert_eq!(err.0, "frobnicate");
    }
}
