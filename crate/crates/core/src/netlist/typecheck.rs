//! Resolution, width checking, and combinational-loop rejection.
//!
//! Produces a [`TypedNetlist`] in which every expression node carries its
//! width. Width rules: binary operands have equal widths (comparisons yield
//! width 1), mux conditions are width 1, slices and concats pin widths
//! syntactically, and unsized literals adopt the width of their context.
//! A literal with no context (e.g. `output o = 1`) is rejected as ambiguous.

use std::collections::HashMap;

use super::ast::*;
use super::diag::{DiagKind, Diagnostic};

macro_rules! id_type {
    ($name:ident) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub u32);

        impl $name {
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }
    };
}

id_type!(InputId);
id_type!(RegId);
id_type!(ArrayId);
id_type!(WireId);

#[derive(Clone, Debug, PartialEq)]
pub struct TExpr {
    pub kind: TExprKind,
    pub width: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub enum TExprKind {
    Const(u64),
    Input(InputId),
    ReadReg(RegId),
    ReadWire(WireId),
    Unary(UnaryOp, Box<TExpr>),
    Binary(BinaryOp, Box<TExpr>, Box<TExpr>),
    Mux(Box<TExpr>, Box<TExpr>, Box<TExpr>),
    Slice(Box<TExpr>, u32, u32),
    Concat(Vec<TExpr>),
    ArrayRead(ArrayId, Box<TExpr>),
}

#[derive(Clone, Debug)]
pub struct InputDef {
    pub name: String,
    pub width: u32,
}

#[derive(Clone, Debug)]
pub struct RegDef {
    pub name: String,
    pub width: u32,
    pub init: u64,
}

#[derive(Clone, Debug)]
pub struct ArrayDef {
    pub name: String,
    pub elem_width: u32,
    pub depth: u64,
}

impl ArrayDef {
    /// State footprint in bytes.
    pub fn state_bytes(&self) -> u64 {
        self.depth * self.elem_width.div_ceil(8) as u64
    }
}

#[derive(Clone, Debug)]
pub struct WireDef {
    pub name: String,
    pub width: u32,
    pub expr: TExpr,
}

#[derive(Clone, Debug)]
pub struct TArrayWrite {
    pub array: ArrayId,
    pub index: TExpr,
    pub value: TExpr,
    pub enable: TExpr,
    /// Position among all write statements; defines commit order.
    pub stmt_idx: u32,
}

#[derive(Clone, Debug)]
pub struct OutputDef {
    pub name: String,
    pub expr: TExpr,
}

/// A fully resolved, width-checked design.
#[derive(Clone, Debug)]
pub struct TypedNetlist {
    pub name: String,
    pub inputs: Vec<InputDef>,
    pub registers: Vec<RegDef>,
    pub arrays: Vec<ArrayDef>,
    pub wires: Vec<WireDef>,
    /// Wires in dependency order (safe evaluation order).
    pub wire_topo: Vec<WireId>,
    /// One expression per register, indexed by `RegId`.
    pub next_exprs: Vec<TExpr>,
    pub array_writes: Vec<TArrayWrite>,
    pub outputs: Vec<OutputDef>,
}

#[derive(Clone, Copy)]
enum Symbol {
    Input(InputId, u32),
    Reg(RegId, u32),
    Array(ArrayId),
    Wire(WireId, u32),
}

pub fn typecheck(n: &Netlist) -> Result<TypedNetlist, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut symbols: HashMap<String, Symbol> = HashMap::new();

    let mut declare = |name: &str, sym: Symbol, span: Span, diags: &mut Vec<Diagnostic>| {
        if symbols.insert(name.to_string(), sym).is_some() {
            diags.push(Diagnostic::new(
                DiagKind::DuplicateId,
                span,
                format!("identifier `{name}` declared more than once"),
            ));
        }
    };

    for (i, d) in n.inputs.iter().enumerate() {
        declare(&d.id, Symbol::Input(InputId(i as u32), d.width), d.span, &mut diags);
    }
    for (i, d) in n.registers.iter().enumerate() {
        declare(&d.id, Symbol::Reg(RegId(i as u32), d.width), d.span, &mut diags);
    }
    for (i, d) in n.arrays.iter().enumerate() {
        declare(&d.id, Symbol::Array(ArrayId(i as u32)), d.span, &mut diags);
    }
    for (i, d) in n.wires.iter().enumerate() {
        declare(&d.id, Symbol::Wire(WireId(i as u32), d.width), d.span, &mut diags);
    }
    {
        let mut seen = HashMap::new();
        for o in &n.outputs {
            if seen.insert(o.id.clone(), ()).is_some() {
                diags.push(Diagnostic::new(
                    DiagKind::DuplicateId,
                    o.span,
                    format!("output `{}` declared more than once", o.id),
                ));
            }
        }
    }

    for d in &n.registers {
        if d.init > width_mask(d.width) {
            diags.push(Diagnostic::new(
                DiagKind::InitTooWide,
                d.span,
                format!("init value {} does not fit u{}", d.init, d.width),
            ));
        }
    }
    for d in &n.arrays {
        if d.depth < 1 {
            diags.push(Diagnostic::new(
                DiagKind::BadArrayDepth,
                d.span,
                format!("array `{}` must have depth >= 1", d.id),
            ));
        } else if d.depth.saturating_mul(d.elem_width.div_ceil(8) as u64) > (1 << 31) {
            diags.push(Diagnostic::new(
                DiagKind::BadArrayDepth,
                d.span,
                format!("array `{}` exceeds the 2 GiB state limit", d.id),
            ));
        }
    }

    // next-statement coverage: exactly one per register
    let mut next_for: Vec<Option<&NextStmt>> = vec![None; n.registers.len()];
    for s in &n.next_statements {
        match symbols.get(&s.reg) {
            Some(Symbol::Reg(r, _)) => {
                if next_for[r.index()].is_some() {
                    diags.push(Diagnostic::new(
                        DiagKind::DuplicateNext,
                        s.span,
                        format!("register `{}` has more than one next-statement", s.reg),
                    ));
                } else {
                    next_for[r.index()] = Some(s);
                }
            }
            Some(_) => diags.push(Diagnostic::new(
                DiagKind::UnresolvedRef,
                s.span,
                format!("`next` target `{}` is not a register", s.reg),
            )),
            None => diags.push(Diagnostic::new(
                DiagKind::UnresolvedRef,
                s.span,
                format!("`next` target `{}` is not declared", s.reg),
            )),
        }
    }
    for (i, slot) in next_for.iter().enumerate() {
        if slot.is_none() {
            diags.push(Diagnostic::new(
                DiagKind::MissingNext,
                n.registers[i].span,
                format!("register `{}` has no next-statement", n.registers[i].id),
            ));
        }
    }

    let checker = Checker { netlist: n, symbols: &symbols };

    let mut wires = Vec::new();
    for d in &n.wires {
        match checker.check(&d.expr, d.width) {
            Ok(expr) => wires.push(WireDef { name: d.id.clone(), width: d.width, expr }),
            Err(e) => {
                diags.push(e);
                // placeholder keeps WireId indices aligned for later passes
                wires.push(WireDef {
                    name: d.id.clone(),
                    width: d.width,
                    expr: TExpr { kind: TExprKind::Const(0), width: d.width },
                });
            }
        }
    }

    let mut next_exprs = Vec::new();
    for (i, slot) in next_for.iter().enumerate() {
        let width = n.registers[i].width;
        let expr = match slot {
            Some(s) => match checker.check(&s.expr, width) {
                Ok(e) => e,
                Err(e) => {
                    diags.push(e);
                    TExpr { kind: TExprKind::Const(0), width }
                }
            },
            None => TExpr { kind: TExprKind::Const(0), width },
        };
        next_exprs.push(expr);
    }

    let mut array_writes = Vec::new();
    for (stmt_idx, s) in n.array_writes.iter().enumerate() {
        let Some(Symbol::Array(aid)) = symbols.get(&s.array) else {
            diags.push(Diagnostic::new(
                DiagKind::UnresolvedRef,
                s.span,
                format!("`write` target `{}` is not an array", s.array),
            ));
            continue;
        };
        let def = &n.arrays[aid.index()];
        let iw = checker.peek(&s.index).unwrap_or_else(|| index_width(def.depth));
        let index = checker.check(&s.index, iw);
        let value = checker.check(&s.value, def.elem_width);
        let enable = checker.check(&s.enable, 1);
        match (index, value, enable) {
            (Ok(index), Ok(value), Ok(enable)) => array_writes.push(TArrayWrite {
                array: *aid,
                index,
                value,
                enable,
                stmt_idx: stmt_idx as u32,
            }),
            (i, v, e) => {
                diags.extend(i.err());
                diags.extend(v.err());
                diags.extend(e.err());
            }
        }
    }

    let mut outputs = Vec::new();
    for o in &n.outputs {
        match checker.peek(&o.expr) {
            Some(w) => match checker.check(&o.expr, w) {
                Ok(expr) => outputs.push(OutputDef { name: o.id.clone(), expr }),
                Err(e) => diags.push(e),
            },
            None => diags.push(Diagnostic::new(
                DiagKind::AmbiguousWidth,
                o.span,
                format!("cannot infer width of output `{}`", o.id),
            )),
        }
    }

    // wire dependency cycle check runs on the surface AST so it can report
    // loops even alongside width errors
    let wire_topo = match wire_order(n, &symbols) {
        Ok(order) => order,
        Err(d) => {
            diags.push(d);
            Vec::new()
        }
    };

    if diags.is_empty() {
        Ok(TypedNetlist {
            name: n.name.clone(),
            inputs: n
                .inputs
                .iter()
                .map(|d| InputDef { name: d.id.clone(), width: d.width })
                .collect(),
            registers: n
                .registers
                .iter()
                .map(|d| RegDef { name: d.id.clone(), width: d.width, init: d.init })
                .collect(),
            arrays: n
                .arrays
                .iter()
                .map(|d| ArrayDef { name: d.id.clone(), elem_width: d.elem_width, depth: d.depth })
                .collect(),
            wires,
            wire_topo,
            next_exprs,
            array_writes,
            outputs,
        })
    } else {
        Err(diags)
    }
}

/// Width and resolution diagnostics only (no loop/coverage checks), per the
/// validation contract: empty iff every expression invariant holds.
pub fn validate_widths(n: &Netlist) -> Vec<Diagnostic> {
    match typecheck(n) {
        Ok(_) => Vec::new(),
        Err(diags) => diags
            .into_iter()
            .filter(|d| {
                !matches!(
                    d.kind,
                    DiagKind::CombinationalLoop { .. } | DiagKind::MissingNext | DiagKind::DuplicateNext
                )
            })
            .collect(),
    }
}

/// Minimum width of an unsigned index for `depth` entries.
pub fn index_width(depth: u64) -> u32 {
    if depth <= 1 {
        1
    } else {
        64 - (depth - 1).leading_zeros() as u32
    }
}

struct Checker<'a> {
    netlist: &'a Netlist,
    symbols: &'a HashMap<String, Symbol>,
}

impl Checker<'_> {
    /// Bottom-up width, `None` when the subtree is width-polymorphic
    /// (contains only unsized literals at its width-determining positions).
    fn peek(&self, e: &Expr) -> Option<u32> {
        match e {
            Expr::Const { .. } => None,
            Expr::Ref { id, .. } => match self.symbols.get(id) {
                Some(Symbol::Input(_, w)) | Some(Symbol::Reg(_, w)) | Some(Symbol::Wire(_, w)) => Some(*w),
                _ => None,
            },
            Expr::Unary { arg, .. } => self.peek(arg),
            Expr::Binary { op, lhs, rhs, .. } => {
                if op.is_comparison() {
                    Some(1)
                } else if op.is_shift() {
                    self.peek(lhs)
                } else {
                    self.peek(lhs).or_else(|| self.peek(rhs))
                }
            }
            Expr::Mux { then_e, else_e, .. } => self.peek(then_e).or_else(|| self.peek(else_e)),
            Expr::Slice { hi, lo, .. } => Some(hi.saturating_sub(*lo) + 1),
            Expr::Concat { parts, .. } => {
                let mut total = 0u32;
                for p in parts {
                    total += self.peek(p)?;
                }
                Some(total)
            }
            Expr::ArrayRead { array, .. } => match self.symbols.get(array) {
                Some(Symbol::Array(a)) => Some(self.netlist.arrays[a.index()].elem_width),
                _ => None,
            },
        }
    }

    fn check(&self, e: &Expr, expected: u32) -> Result<TExpr, Diagnostic> {
        let kind = match e {
            Expr::Const { value, span } => {
                if *value > width_mask(expected) {
                    return Err(Diagnostic::new(
                        DiagKind::WidthMismatch { expected, got: 64 - value.leading_zeros() },
                        *span,
                        format!("literal {value} does not fit u{expected}"),
                    ));
                }
                TExprKind::Const(*value)
            }
            Expr::Ref { id, span } => match self.symbols.get(id) {
                Some(Symbol::Input(i, w)) => {
                    self.expect_width(*w, expected, *span, id)?;
                    TExprKind::Input(*i)
                }
                Some(Symbol::Reg(r, w)) => {
                    self.expect_width(*w, expected, *span, id)?;
                    TExprKind::ReadReg(*r)
                }
                Some(Symbol::Wire(w_id, w)) => {
                    self.expect_width(*w, expected, *span, id)?;
                    TExprKind::ReadWire(*w_id)
                }
                Some(Symbol::Array(_)) => {
                    return Err(Diagnostic::new(
                        DiagKind::UnresolvedRef,
                        *span,
                        format!("array `{id}` used as a scalar value (index it with `{id}[expr]`)"),
                    ))
                }
                None => {
                    return Err(Diagnostic::new(
                        DiagKind::UnresolvedRef,
                        *span,
                        format!("`{id}` is not declared"),
                    ))
                }
            },
            Expr::Unary { op, arg, .. } => TExprKind::Unary(*op, Box::new(self.check(arg, expected)?)),
            Expr::Binary { op, lhs, rhs, span } => {
                let operand_w = if op.is_comparison() {
                    if expected != 1 {
                        return Err(Diagnostic::new(
                            DiagKind::WidthMismatch { expected, got: 1 },
                            *span,
                            format!("comparison produces u1 where u{expected} is required"),
                        ));
                    }
                    self.peek(lhs).or_else(|| self.peek(rhs)).ok_or_else(|| {
                        Diagnostic::new(
                            DiagKind::AmbiguousWidth,
                            *span,
                            "cannot infer comparison operand width",
                        )
                    })?
                } else {
                    expected
                };
                TExprKind::Binary(
                    *op,
                    Box::new(self.check(lhs, operand_w)?),
                    Box::new(self.check(rhs, operand_w)?),
                )
            }
            Expr::Mux { cond, then_e, else_e, .. } => TExprKind::Mux(
                Box::new(self.check(cond, 1)?),
                Box::new(self.check(then_e, expected)?),
                Box::new(self.check(else_e, expected)?),
            ),
            Expr::Slice { arg, hi, lo, span } => {
                if lo > hi {
                    return Err(Diagnostic::new(
                        DiagKind::SliceOutOfRange,
                        *span,
                        format!("slice [{hi}:{lo}] has low bound above high bound"),
                    ));
                }
                let aw = self.peek(arg).ok_or_else(|| {
                    Diagnostic::new(DiagKind::AmbiguousWidth, *span, "cannot infer width of sliced expression")
                })?;
                if *hi >= aw {
                    return Err(Diagnostic::new(
                        DiagKind::SliceOutOfRange,
                        *span,
                        format!("slice [{hi}:{lo}] exceeds operand width u{aw}"),
                    ));
                }
                let w = hi - lo + 1;
                if w != expected {
                    return Err(Diagnostic::new(
                        DiagKind::WidthMismatch { expected, got: w },
                        *span,
                        format!("slice produces u{w} where u{expected} is required"),
                    ));
                }
                TExprKind::Slice(Box::new(self.check(arg, aw)?), *hi, *lo)
            }
            Expr::Concat { parts, span } => {
                let mut widths = Vec::with_capacity(parts.len());
                let mut total = 0u64;
                for p in parts {
                    let w = self.peek(p).ok_or_else(|| {
                        Diagnostic::new(
                            DiagKind::AmbiguousWidth,
                            p.span(),
                            "cannot infer width of concat part",
                        )
                    })?;
                    widths.push(w);
                    total += w as u64;
                }
                if total > MAX_WIDTH as u64 {
                    return Err(Diagnostic::new(
                        DiagKind::BadWidth,
                        *span,
                        format!("concat width {total} exceeds {MAX_WIDTH}"),
                    ));
                }
                if total as u32 != expected {
                    return Err(Diagnostic::new(
                        DiagKind::WidthMismatch { expected, got: total as u32 },
                        *span,
                        format!("concat produces u{total} where u{expected} is required"),
                    ));
                }
                let mut texprs = Vec::with_capacity(parts.len());
                for (p, w) in parts.iter().zip(widths) {
                    texprs.push(self.check(p, w)?);
                }
                TExprKind::Concat(texprs)
            }
            Expr::ArrayRead { array, index, span } => {
                let Some(Symbol::Array(aid)) = self.symbols.get(array) else {
                    return Err(Diagnostic::new(
                        DiagKind::UnresolvedRef,
                        *span,
                        format!("`{array}` is not an array"),
                    ));
                };
                let def = &self.netlist.arrays[aid.index()];
                if def.elem_width != expected {
                    return Err(Diagnostic::new(
                        DiagKind::WidthMismatch { expected, got: def.elem_width },
                        *span,
                        format!(
                            "array `{array}` has u{} elements where u{expected} is required",
                            def.elem_width
                        ),
                    ));
                }
                let iw = self.peek(index).unwrap_or_else(|| index_width(def.depth));
                TExprKind::ArrayRead(*aid, Box::new(self.check(index, iw)?))
            }
        };
        Ok(TExpr { kind, width: expected })
    }

    fn expect_width(&self, got: u32, expected: u32, span: Span, id: &str) -> Result<(), Diagnostic> {
        if got != expected {
            return Err(Diagnostic::new(
                DiagKind::WidthMismatch { expected, got },
                span,
                format!("`{id}` is u{got} where u{expected} is required"),
            ));
        }
        Ok(())
    }
}

/// Topological order of wires, or the combinational loop that prevents one.
/// Only wire-to-wire references create edges: register and array reads
/// observe start-of-cycle state, so they cannot close a cycle.
fn wire_order(n: &Netlist, symbols: &HashMap<String, Symbol>) -> Result<Vec<WireId>, Diagnostic> {
    let mut deps: Vec<Vec<u32>> = vec![Vec::new(); n.wires.len()];
    for (i, w) in n.wires.iter().enumerate() {
        collect_wire_refs(&w.expr, symbols, &mut deps[i]);
    }

    // iterative DFS with colors; white=0 grey=1 black=2
    let mut color = vec![0u8; n.wires.len()];
    let mut order = Vec::with_capacity(n.wires.len());
    for start in 0..n.wires.len() {
        if color[start] != 0 {
            continue;
        }
        let mut stack: Vec<(u32, usize)> = vec![(start as u32, 0)];
        color[start] = 1;
        while let Some(&mut (node, ref mut edge)) = stack.last_mut() {
            let node_deps = &deps[node as usize];
            if *edge < node_deps.len() {
                let next = node_deps[*edge];
                *edge += 1;
                match color[next as usize] {
                    0 => {
                        color[next as usize] = 1;
                        stack.push((next, 0));
                    }
                    1 => {
                        // found a cycle: recover the path along the stack
                        let mut cycle: Vec<String> = Vec::new();
                        let pos = stack.iter().position(|&(n2, _)| n2 == next).unwrap();
                        for &(n2, _) in &stack[pos..] {
                            cycle.push(n.wires[n2 as usize].id.clone());
                        }
                        let span = n.wires[next as usize].span;
                        let msg = format!("combinational loop through wire(s): {}", cycle.join(" -> "));
                        return Err(Diagnostic::new(DiagKind::CombinationalLoop { cycle }, span, msg));
                    }
                    _ => {}
                }
            } else {
                color[node as usize] = 2;
                order.push(WireId(node));
                stack.pop();
            }
        }
    }
    Ok(order)
}

fn collect_wire_refs(e: &Expr, symbols: &HashMap<String, Symbol>, out: &mut Vec<u32>) {
    match e {
        Expr::Const { .. } => {}
        Expr::Ref { id, .. } => {
            if let Some(Symbol::Wire(w, _)) = symbols.get(id) {
                out.push(w.0);
            }
        }
        Expr::Unary { arg, .. } => collect_wire_refs(arg, symbols, out),
        Expr::Binary { lhs, rhs, .. } => {
            collect_wire_refs(lhs, symbols, out);
            collect_wire_refs(rhs, symbols, out);
        }
        Expr::Mux { cond, then_e, else_e, .. } => {
            collect_wire_refs(cond, symbols, out);
            collect_wire_refs(then_e, symbols, out);
            collect_wire_refs(else_e, symbols, out);
        }
        Expr::Slice { arg, .. } => collect_wire_refs(arg, symbols, out),
        Expr::Concat { parts, .. } => {
            for p in parts {
                collect_wire_refs(p, symbols, out);
            }
        }
        Expr::ArrayRead { index, .. } => collect_wire_refs(index, symbols, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::parser::parse_netlist;

    fn check(src: &str) -> Result<TypedNetlist, Vec<Diagnostic>> {
        typecheck(&parse_netlist(src).expect("parse"))
    }

    #[test]
    fn counter_typechecks() {
        let t = check("design d; reg r:u8 init 0; next r = r + 1;").unwrap();
        assert_eq!(t.registers.len(), 1);
        assert_eq!(t.next_exprs[0].width, 8);
    }

    #[test]
    fn self_referential_wire_is_a_loop() {
        let errs = check("design d; reg r:u8 init 0; wire w:u8 = w ^ 1; next r = w;").unwrap_err();
        assert!(errs.iter().any(|d| match &d.kind {
            DiagKind::CombinationalLoop { cycle } => cycle == &vec!["w".to_string()],
            _ => false,
        }));
    }

    #[test]
    fn three_wire_loop_reports_path() {
        let errs = check(
            "design d; reg r:u1 init 0
             wire a:u1 = b; wire b:u1 = c; wire c:u1 = a
             next r = a",
        )
        .unwrap_err();
        let Some(DiagKind::CombinationalLoop { cycle }) =
            errs.iter().map(|d| &d.kind).find(|k| matches!(k, DiagKind::CombinationalLoop { .. }))
        else {
            panic!("expected loop");
        };
        assert_eq!(cycle.len(), 3);
    }

    #[test]
    fn width_mismatch_reported() {
        let errs = check(
            "design d; input c8:u8; reg r:u4 init 0; next r = r + c8;",
        )
        .unwrap_err();
        assert!(errs
            .iter()
            .any(|d| matches!(d.kind, DiagKind::WidthMismatch { expected: 4, got: 8 })));
    }

    #[test]
    fn slice_out_of_range() {
        let errs = check("design d; reg x:u8 init 0; wire w:u8 = x[9:2]; next x = w;").unwrap_err();
        assert!(errs.iter().any(|d| matches!(d.kind, DiagKind::SliceOutOfRange)));
    }

    #[test]
    fn validate_widths_matches_contract() {
        let good = parse_netlist("design d; reg r:u8 init 0; next r = r + 1;").unwrap();
        assert!(validate_widths(&good).is_empty());

        // a missing next is not a width diagnostic
        let no_next = parse_netlist("design d; reg r:u8 init 0;").unwrap();
        assert!(validate_widths(&no_next).is_empty());
        assert!(typecheck(&no_next).is_err());
    }

    #[test]
    fn missing_next_and_duplicates() {
        let errs = check("design d; reg r:u8 init 0; reg r:u8 init 1; next r = r;").unwrap_err();
        assert!(errs.iter().any(|d| matches!(d.kind, DiagKind::DuplicateId)));

        let errs = check("design d; reg r:u8 init 0; next r = r; next r = r + 1;").unwrap_err();
        assert!(errs.iter().any(|d| matches!(d.kind, DiagKind::DuplicateNext)));
    }

    #[test]
    fn xorshift32_shape() {
        let src = "design xs
            reg x:u32 init 1
            wire s1:u32 = x ^ (x << 13)
            wire s2:u32 = s1 ^ (s1 >> 17)
            wire s3:u32 = s2 ^ (s2 << 5)
            next x = s3
            output x = x";
        let t = check(src).unwrap();
        assert_eq!(t.registers.len(), 1);
        assert_eq!(t.wires.len(), 3);
        // literals adopted u32 from context
        fn count_ops(e: &TExpr, acc: &mut (u32, u32)) {
            if let TExprKind::Binary(op, l, r) = &e.kind {
                match op {
                    BinaryOp::Xor => acc.0 += 1,
                    BinaryOp::Shl | BinaryOp::Shr => acc.1 += 1,
                    _ => {}
                }
                count_ops(l, acc);
                count_ops(r, acc);
            }
        }
        let mut acc = (0, 0);
        for w in &t.wires {
            count_ops(&w.expr, &mut acc);
        }
        assert_eq!(acc, (3, 3), "3 xors and 3 shifts");
    }

    #[test]
    fn ambiguous_literal_output() {
        let errs = check("design d; reg r:u8 init 0; next r = r; output o = 3;").unwrap_err();
        assert!(errs.iter().any(|d| matches!(d.kind, DiagKind::AmbiguousWidth)));
    }
}
