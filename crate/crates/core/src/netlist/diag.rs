//! Diagnostics produced by parsing and validation.

use super::ast::Span;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagKind {
    Syntax,
    DuplicateId,
    UnresolvedRef,
    WidthMismatch { expected: u32, got: u32 },
    SliceOutOfRange,
    AmbiguousWidth,
    CombinationalLoop { cycle: Vec<String> },
    MissingNext,
    DuplicateNext,
    BadWidth,
    BadArrayDepth,
    InitTooWide,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub kind: DiagKind,
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub fn new(kind: DiagKind, span: Span, message: impl Into<String>) -> Self {
        Diagnostic { kind, span, message: message.into() }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.span, self.message)
    }
}

impl std::error::Error for Diagnostic {}
