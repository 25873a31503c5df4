//! Canonical netlist text emission.
//!
//! `parse(pretty(parse(src)))` equals `parse(src)` structurally, and
//! pretty-printing is a fixed point on its own output.

use super::ast::*;

pub fn pretty_print(n: &Netlist) -> String {
    let mut out = String::new();
    out.push_str(&format!("design {}\n", n.name));
    for d in &n.inputs {
        out.push_str(&format!("input {} : u{}\n", d.id, d.width));
    }
    for d in &n.registers {
        out.push_str(&format!("reg {} : u{} init {}\n", d.id, d.width, d.init));
    }
    for d in &n.arrays {
        out.push_str(&format!("array {} : u{}[{}]\n", d.id, d.elem_width, d.depth));
    }
    for d in &n.wires {
        out.push_str(&format!("wire {} : u{} = {}\n", d.id, d.width, expr_string(&d.expr)));
    }
    for s in &n.next_statements {
        out.push_str(&format!("next {} = {}\n", s.reg, expr_string(&s.expr)));
    }
    for s in &n.array_writes {
        out.push_str(&format!(
            "write {}[{}] = {} when {}\n",
            s.array,
            expr_string(&s.index),
            expr_string(&s.value),
            expr_string(&s.enable)
        ));
    }
    for s in &n.outputs {
        out.push_str(&format!("output {} = {}\n", s.id, expr_string(&s.expr)));
    }
    out
}

pub fn expr_string(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(e, 0, &mut s);
    s
}

fn op_prec(op: BinaryOp) -> u8 {
    match op {
        BinaryOp::Or => 1,
        BinaryOp::Xor => 2,
        BinaryOp::And => 3,
        BinaryOp::Eq | BinaryOp::Ne => 4,
        BinaryOp::Lt | BinaryOp::Le => 5,
        BinaryOp::Shl | BinaryOp::Shr => 6,
        BinaryOp::Add | BinaryOp::Sub => 7,
        BinaryOp::Mul => 8,
    }
}

fn op_str(op: BinaryOp) -> &'static str {
    match op {
        BinaryOp::Add => "+",
        BinaryOp::Sub => "-",
        BinaryOp::Mul => "*",
        BinaryOp::And => "&",
        BinaryOp::Or => "|",
        BinaryOp::Xor => "^",
        BinaryOp::Shl => "<<",
        BinaryOp::Shr => ">>",
        BinaryOp::Eq => "==",
        BinaryOp::Ne => "!=",
        BinaryOp::Lt => "<",
        BinaryOp::Le => "<=",
    }
}

const UNARY_PREC: u8 = 9;
const POSTFIX_PREC: u8 = 10;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Binary { op, .. } => op_prec(*op),
        Expr::Unary { .. } => UNARY_PREC,
        Expr::Slice { .. } | Expr::ArrayRead { .. } => POSTFIX_PREC,
        _ => 11, // primaries never need parens
    }
}

fn write_expr(e: &Expr, min_prec: u8, out: &mut String) {
    let own = prec(e);
    let parens = own < min_prec;
    if parens {
        out.push('(');
    }
    match e {
        Expr::Const { value, .. } => out.push_str(&value.to_string()),
        Expr::Ref { id, .. } => out.push_str(id),
        Expr::Unary { op, arg, .. } => {
            out.push(match op {
                UnaryOp::Not => '~',
                UnaryOp::Neg => '-',
            });
            write_expr(arg, UNARY_PREC, out);
        }
        Expr::Binary { op, lhs, rhs, .. } => {
            let p = op_prec(*op);
            write_expr(lhs, p, out);
            out.push(' ');
            out.push_str(op_str(*op));
            out.push(' ');
            // left-associative: right operand needs strictly higher binding
            write_expr(rhs, p + 1, out);
        }
        Expr::Mux { cond, then_e, else_e, .. } => {
            out.push_str("mux(");
            write_expr(cond, 0, out);
            out.push_str(", ");
            write_expr(then_e, 0, out);
            out.push_str(", ");
            write_expr(else_e, 0, out);
            out.push(')');
        }
        Expr::Slice { arg, hi, lo, .. } => {
            write_expr(arg, POSTFIX_PREC + 1, out);
            out.push_str(&format!("[{hi}:{lo}]"));
        }
        Expr::Concat { parts, .. } => {
            out.push('{');
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(p, 0, out);
            }
            out.push('}');
        }
        Expr::ArrayRead { array, index, .. } => {
            out.push_str(array);
            out.push('[');
            write_expr(index, 0, out);
            out.push(']');
        }
    }
    if parens {
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::parser::parse_netlist;

    #[test]
    fn round_trip_is_fixed_point() {
        let src = "design xs
            reg x:u32 init 1
            array m : u8[32]
            wire s1:u32 = x ^ (x << 13)
            wire s2:u32 = s1 ^ (s1 >> 17)
            wire s3:u32 = (s2 ^ (s2 << 5)) * 3 + 2
            wire b:u8 = m[x[4:0]]
            next x = mux(b == 7, s3, {x[15:0], x[31:16]})
            write m[x[4:0]] = b + 1 when b < 9
            output x = x";
        let n0 = parse_netlist(src).unwrap();
        let p1 = pretty_print(&n0);
        let n1 = parse_netlist(&p1).unwrap();
        let p2 = pretty_print(&n1);
        assert_eq!(p1, p2);
        // spans differ; compare the canonical text instead of ASTs
    }

    #[test]
    fn parens_only_where_needed() {
        let n = parse_netlist("design d\nreg r:u8 init 0\nnext r = (r + 1) * 2 - (r & 3)").unwrap();
        assert_eq!(expr_string(&n.next_statements[0].expr), "(r + 1) * 2 - (r & 3)");
    }
}
