//! Recursive-descent parser for the netlist language.
//!
//! Statements end at a newline or `;`. Expression precedence follows C
//! (see the README table). On a statement-level error the parser records a
//! diagnostic and resynchronizes at the next separator, so several errors
//! can be reported in one pass.

use super::ast::*;
use super::diag::{DiagKind, Diagnostic};
use super::lexer::{lex, Tok, Token};

pub fn parse_netlist(src: &str) -> Result<Netlist, Vec<Diagnostic>> {
    let tokens = lex(src).map_err(|d| vec![d])?;
    let mut p = Parser { tokens, pos: 0, diags: Vec::new() };
    let netlist = p.parse_design();
    if p.diags.is_empty() {
        Ok(netlist)
    } else {
        Err(p.diags)
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    diags: Vec<Diagnostic>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn span(&self) -> Span {
        self.tokens
            .get(self.pos.min(self.tokens.len().saturating_sub(1)))
            .map(|t| t.span)
            .unwrap_or_default()
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), Diagnostic> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected {what}")))
        }
    }

    fn syntax(&self, msg: String) -> Diagnostic {
        Diagnostic::new(DiagKind::Syntax, self.span(), msg)
    }

    fn ident(&mut self, what: &str) -> Result<(String, Span), Diagnostic> {
        let span = self.span();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok((s, span))
            }
            _ => Err(self.syntax(format!("expected {what}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, Diagnostic> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.syntax(format!("expected {what}"))),
        }
    }

    /// `u<W>` type annotation; returns the width.
    fn width_type(&mut self) -> Result<u32, Diagnostic> {
        let span = self.span();
        let (id, _) = self.ident("type like `u8`")?;
        let Some(rest) = id.strip_prefix('u') else {
            return Err(Diagnostic::new(DiagKind::Syntax, span, format!("expected type like `u8`, got `{id}`")));
        };
        let width: u32 = rest
            .parse()
            .map_err(|_| Diagnostic::new(DiagKind::Syntax, span, format!("bad width in type `{id}`")))?;
        if width < 1 || width > MAX_WIDTH {
            return Err(Diagnostic::new(
                DiagKind::BadWidth,
                span,
                format!("width {width} out of range 1..={MAX_WIDTH}"),
            ));
        }
        Ok(width)
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(Tok::Newline) | Some(Tok::Semi)) {
            self.pos += 1;
        }
    }

    /// Skip to the next statement boundary after an error.
    fn resync(&mut self) {
        while let Some(t) = self.peek() {
            if matches!(t, Tok::Newline | Tok::Semi) {
                break;
            }
            self.pos += 1;
        }
    }

    fn parse_design(&mut self) -> Netlist {
        let mut n = Netlist::default();
        self.skip_separators();
        match self.parse_header() {
            Ok(name) => n.name = name,
            Err(d) => {
                self.diags.push(d);
                self.resync();
            }
        }
        loop {
            self.skip_separators();
            if self.peek().is_none() {
                break;
            }
            if let Err(d) = self.parse_statement(&mut n) {
                self.diags.push(d);
                self.resync();
            }
        }
        n
    }

    fn parse_header(&mut self) -> Result<String, Diagnostic> {
        match self.peek() {
            Some(Tok::Ident(k)) if k == "design" => {
                self.pos += 1;
                let (name, _) = self.ident("design name")?;
                Ok(name)
            }
            _ => Err(self.syntax("netlist must start with `design <id>`".into())),
        }
    }

    fn end_of_statement(&mut self) -> Result<(), Diagnostic> {
        match self.peek() {
            None | Some(Tok::Newline) | Some(Tok::Semi) => Ok(()),
            _ => Err(self.syntax("expected end of statement".into())),
        }
    }

    fn parse_statement(&mut self, n: &mut Netlist) -> Result<(), Diagnostic> {
        let span = self.span();
        let (kw, _) = self.ident("statement keyword")?;
        match kw.as_str() {
            "input" => {
                let (id, _) = self.ident("input name")?;
                self.expect(&Tok::Colon, "`:`")?;
                let width = self.width_type()?;
                n.inputs.push(InputDecl { id, width, span });
            }
            "reg" => {
                let (id, _) = self.ident("register name")?;
                self.expect(&Tok::Colon, "`:`")?;
                let width = self.width_type()?;
                let (kw2, _) = self.ident("`init`")?;
                if kw2 != "init" {
                    return Err(self.syntax(format!("expected `init`, got `{kw2}`")));
                }
                let init = self.int("init value")?;
                n.registers.push(RegDecl { id, width, init, span });
            }
            "array" => {
                let (id, _) = self.ident("array name")?;
                self.expect(&Tok::Colon, "`:`")?;
                let elem_width = self.width_type()?;
                self.expect(&Tok::LBracket, "`[`")?;
                let depth = self.int("array depth")?;
                self.expect(&Tok::RBracket, "`]`")?;
                n.arrays.push(ArrayDecl { id, elem_width, depth, span });
            }
            "wire" => {
                let (id, _) = self.ident("wire name")?;
                self.expect(&Tok::Colon, "`:`")?;
                let width = self.width_type()?;
                self.expect(&Tok::Assign, "`=`")?;
                let expr = self.parse_expr()?;
                n.wires.push(WireDecl { id, width, expr, span });
            }
            "next" => {
                let (reg, _) = self.ident("register name")?;
                self.expect(&Tok::Assign, "`=`")?;
                let expr = self.parse_expr()?;
                n.next_statements.push(NextStmt { reg, expr, span });
            }
            "write" => {
                let (array, _) = self.ident("array name")?;
                self.expect(&Tok::LBracket, "`[`")?;
                let index = self.parse_expr()?;
                self.expect(&Tok::RBracket, "`]`")?;
                self.expect(&Tok::Assign, "`=`")?;
                let value = self.parse_expr()?;
                let (kw2, _) = self.ident("`when`")?;
                if kw2 != "when" {
                    return Err(self.syntax(format!("expected `when`, got `{kw2}`")));
                }
                let enable = self.parse_expr()?;
                n.array_writes.push(ArrayWriteStmt { array, index, value, enable, span });
            }
            "output" => {
                let (id, _) = self.ident("output name")?;
                self.expect(&Tok::Assign, "`=`")?;
                let expr = self.parse_expr()?;
                n.outputs.push(OutputStmt { id, expr, span });
            }
            "design" => {
                return Err(Diagnostic::new(DiagKind::Syntax, span, "duplicate `design` header"));
            }
            other => {
                return Err(Diagnostic::new(DiagKind::Syntax, span, format!("unknown statement `{other}`")));
            }
        }
        self.end_of_statement()
    }

    fn parse_expr(&mut self) -> Result<Expr, Diagnostic> {
        self.parse_binary(0)
    }

    /// Precedence climbing. Levels, loosest first:
    /// `|` < `^` < `&` < `== !=` < `< <=` < `<< >>` < `+ -` < `*`.
    fn parse_binary(&mut self, min_prec: u8) -> Result<Expr, Diagnostic> {
        let mut lhs = self.parse_unary()?;
        loop {
            let (op, prec) = match self.peek() {
                Some(Tok::Pipe) => (BinaryOp::Or, 1),
                Some(Tok::Caret) => (BinaryOp::Xor, 2),
                Some(Tok::Amp) => (BinaryOp::And, 3),
                Some(Tok::EqEq) => (BinaryOp::Eq, 4),
                Some(Tok::NotEq) => (BinaryOp::Ne, 4),
                Some(Tok::Lt) => (BinaryOp::Lt, 5),
                Some(Tok::Le) => (BinaryOp::Le, 5),
                Some(Tok::Shl) => (BinaryOp::Shl, 6),
                Some(Tok::Shr) => (BinaryOp::Shr, 6),
                Some(Tok::Plus) => (BinaryOp::Add, 7),
                Some(Tok::Minus) => (BinaryOp::Sub, 7),
                Some(Tok::Star) => (BinaryOp::Mul, 8),
                _ => break,
            };
            if prec < min_prec {
                break;
            }
            let span = self.span();
            self.pos += 1;
            let rhs = self.parse_binary(prec + 1)?;
            lhs = Expr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs), span };
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<Expr, Diagnostic> {
        let span = self.span();
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                let arg = self.parse_unary()?;
                Ok(Expr::Unary { op: UnaryOp::Not, arg: Box::new(arg), span })
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                let arg = self.parse_unary()?;
                Ok(Expr::Unary { op: UnaryOp::Neg, arg: Box::new(arg), span })
            }
            _ => self.parse_postfix(),
        }
    }

    /// Postfix `[...]` binds tightest: `a[hi:lo]` is a slice with constant
    /// bounds, `arr[expr]` is an array read (base must be an identifier).
    fn parse_postfix(&mut self) -> Result<Expr, Diagnostic> {
        let mut e = self.parse_primary()?;
        while self.peek() == Some(&Tok::LBracket) {
            let span = self.span();
            self.pos += 1;
            let first = self.parse_expr()?;
            if self.eat(&Tok::Colon) {
                let hi = match first {
                    Expr::Const { value, .. } => value,
                    _ => {
                        return Err(Diagnostic::new(
                            DiagKind::Syntax,
                            span,
                            "slice bounds must be integer literals",
                        ))
                    }
                };
                let lo = self.int("slice low bound")?;
                self.expect(&Tok::RBracket, "`]`")?;
                if hi > u32::MAX as u64 || lo > u32::MAX as u64 {
                    return Err(Diagnostic::new(DiagKind::SliceOutOfRange, span, "slice bound too large"));
                }
                e = Expr::Slice { arg: Box::new(e), hi: hi as u32, lo: lo as u32, span };
            } else {
                self.expect(&Tok::RBracket, "`]`")?;
                let array = match &e {
                    Expr::Ref { id, .. } => id.clone(),
                    _ => {
                        return Err(Diagnostic::new(
                            DiagKind::Syntax,
                            span,
                            "array read needs an array identifier (use `a[hi:lo]` with literal bounds to slice)",
                        ))
                    }
                };
                e = Expr::ArrayRead { array, index: Box::new(first), span };
            }
        }
        Ok(e)
    }

    fn parse_primary(&mut self) -> Result<Expr, Diagnostic> {
        let span = self.span();
        match self.bump() {
            Some(Tok::Int(value)) => Ok(Expr::Const { value, span }),
            Some(Tok::Ident(id)) if id == "mux" => {
                self.expect(&Tok::LParen, "`(`")?;
                let cond = self.parse_expr()?;
                self.expect(&Tok::Comma, "`,`")?;
                let then_e = self.parse_expr()?;
                self.expect(&Tok::Comma, "`,`")?;
                let else_e = self.parse_expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(Expr::Mux {
                    cond: Box::new(cond),
                    then_e: Box::new(then_e),
                    else_e: Box::new(else_e),
                    span,
                })
            }
            Some(Tok::Ident(id)) => Ok(Expr::Ref { id, span }),
            Some(Tok::LParen) => {
                let e = self.parse_expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::LBrace) => {
                let mut parts = vec![self.parse_expr()?];
                while self.eat(&Tok::Comma) {
                    parts.push(self.parse_expr()?);
                }
                self.expect(&Tok::RBrace, "`}`")?;
                Ok(Expr::Concat { parts, span })
            }
            _ => Err(Diagnostic::new(DiagKind::Syntax, span, "expected expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_counter() {
        let n = parse_netlist("design d; reg r:u8 init 0; next r = r + 1;").unwrap();
        assert_eq!(n.name, "d");
        assert_eq!(n.registers.len(), 1);
        assert_eq!(n.inputs.len(), 0);
        assert_eq!(n.next_statements.len(), 1);
        match &n.next_statements[0].expr {
            Expr::Binary { op: BinaryOp::Add, lhs, rhs, .. } => {
                assert!(matches!(**lhs, Expr::Ref { ref id, .. } if id == "r"));
                assert!(matches!(**rhs, Expr::Const { value: 1, .. }));
            }
            other => panic!("unexpected expr {other:?}"),
        }
    }

    #[test]
    fn precedence_is_c_like() {
        let n = parse_netlist("design d\nreg r:u8 init 0\nnext r = r + r * 2 << 1 & 3").unwrap();
        // ((r + (r*2)) << 1) & 3
        let e = &n.next_statements[0].expr;
        let Expr::Binary { op: BinaryOp::And, lhs, .. } = e else { panic!("top must be &") };
        let Expr::Binary { op: BinaryOp::Shl, lhs: add, .. } = &**lhs else { panic!("then <<") };
        assert!(matches!(&**add, Expr::Binary { op: BinaryOp::Add, .. }));
    }

    #[test]
    fn slice_vs_array_read() {
        let n = parse_netlist(
            "design d\narray m:u8[16]\nreg r:u8 init 0\nwire w:u4 = r[7:4]\nwire v:u8 = m[r]\nnext r = v + {w, w}",
        )
        .unwrap();
        assert!(matches!(n.wires[0].expr, Expr::Slice { hi: 7, lo: 4, .. }));
        assert!(matches!(n.wires[1].expr, Expr::ArrayRead { .. }));
    }

    #[test]
    fn syntax_error_has_location() {
        let errs = parse_netlist("design d\nreg r:u8 init 0\nnext r = +\n").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].span.line, 3);
    }
}
