//! Surface syntax tree for the netlist language.
//!
//! This is what the parser produces and the pretty-printer consumes. Widths
//! on constants are not part of the surface syntax; they are inferred during
//! type checking (see [`super::typecheck`]).

use serde::{Deserialize, Serialize};

/// Source location, 1-based.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnaryOp {
    Not,
    Neg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    And,
    Or,
    Xor,
    Shl,
    Shr,
    Eq,
    Ne,
    Lt,
    Le,
}

impl BinaryOp {
    pub fn is_comparison(self) -> bool {
        matches!(self, BinaryOp::Eq | BinaryOp::Ne | BinaryOp::Lt | BinaryOp::Le)
    }

    pub fn is_shift(self) -> bool {
        matches!(self, BinaryOp::Shl | BinaryOp::Shr)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Unsized integer literal; width comes from context.
    Const { value: u64, span: Span },
    Ref { id: String, span: Span },
    Unary { op: UnaryOp, arg: Box<Expr>, span: Span },
    Binary { op: BinaryOp, lhs: Box<Expr>, rhs: Box<Expr>, span: Span },
    Mux { cond: Box<Expr>, then_e: Box<Expr>, else_e: Box<Expr>, span: Span },
    Slice { arg: Box<Expr>, hi: u32, lo: u32, span: Span },
    Concat { parts: Vec<Expr>, span: Span },
    ArrayRead { array: String, index: Box<Expr>, span: Span },
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Const { span, .. }
            | Expr::Ref { span, .. }
            | Expr::Unary { span, .. }
            | Expr::Binary { span, .. }
            | Expr::Mux { span, .. }
            | Expr::Slice { span, .. }
            | Expr::Concat { span, .. }
            | Expr::ArrayRead { span, .. } => *span,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InputDecl {
    pub id: String,
    pub width: u32,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegDecl {
    pub id: String,
    pub width: u32,
    pub init: u64,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ArrayDecl {
    pub id: String,
    pub elem_width: u32,
    pub depth: u64,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WireDecl {
    pub id: String,
    pub width: u32,
    pub expr: Expr,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NextStmt {
    pub reg: String,
    pub expr: Expr,
    pub span: Span,
}

/// `write arr[index] = value when enable`
#[derive(Clone, Debug, PartialEq)]
pub struct ArrayWriteStmt {
    pub array: String,
    pub index: Expr,
    pub value: Expr,
    pub enable: Expr,
    pub span: Span,
}

/// Outputs are trace labels, not signals: nothing can reference an output,
/// so an output may share its name with the value it exposes.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputStmt {
    pub id: String,
    pub expr: Expr,
    pub span: Span,
}

/// A parsed design. Declaration order is preserved; it defines node and
/// fiber numbering downstream, so it is semantically significant.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Netlist {
    pub name: String,
    pub inputs: Vec<InputDecl>,
    pub registers: Vec<RegDecl>,
    pub arrays: Vec<ArrayDecl>,
    pub wires: Vec<WireDecl>,
    pub next_statements: Vec<NextStmt>,
    pub array_writes: Vec<ArrayWriteStmt>,
    pub outputs: Vec<OutputStmt>,
}

pub const MAX_WIDTH: u32 = 64;

/// All-ones mask for a `width`-bit value (width in 1..=64).
pub fn width_mask(width: u32) -> u64 {
    debug_assert!(width >= 1 && width <= MAX_WIDTH);
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}
