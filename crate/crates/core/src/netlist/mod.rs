//! Textual netlist IR: parser, validator, and canonical printer.
//!
//! A netlist describes a flattened single-clock design: inputs, registers
//! with init values, arrays, combinational wires, next-value statements,
//! conditional array writes, and trace outputs. Array reads observe
//! start-of-cycle contents, so the combinational dependency relation is over
//! wires only and must be acyclic.

pub mod ast;
pub mod diag;
mod lexer;
pub mod parser;
pub mod pretty;
pub mod typecheck;

pub use ast::{BinaryOp, Expr, Netlist, Span, UnaryOp, MAX_WIDTH};
pub use diag::{DiagKind, Diagnostic};
pub use parser::parse_netlist;
pub use pretty::pretty_print;
pub use typecheck::{
    index_width, typecheck, validate_widths, ArrayDef, ArrayId, InputDef, InputId, OutputDef,
    RegDef, RegId, TArrayWrite, TExpr, TExprKind, TypedNetlist, WireDef, WireId,
};
