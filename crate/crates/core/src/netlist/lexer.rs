//! Tokenizer for the netlist language.

use super::ast::Span;
use super::diag::{DiagKind, Diagnostic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u64),
    // punctuation
    Colon,
    Semi,
    Assign, // =
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    // operators
    Tilde,
    Plus,
    Minus,
    Star,
    Amp,
    Pipe,
    Caret,
    Shl,
    Shr,
    EqEq,
    NotEq,
    Lt,
    Le,
    /// statement separator (newline); collapsed runs
    Newline,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out: Vec<Token> = Vec::new();
    let mut line = 1u32;
    let mut col = 1u32;
    let mut chars = src.chars().peekable();

    macro_rules! push {
        ($tok:expr, $span:expr) => {
            out.push(Token { tok: $tok, span: $span })
        };
    }

    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
                if !matches!(out.last().map(|t| &t.tok), Some(Tok::Newline) | None) {
                    push!(Tok::Newline, span);
                }
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c2) = chars.peek() {
                    if c2 == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            '0'..='9' => {
                let mut text = String::new();
                let hex = {
                    chars.next();
                    col += 1;
                    if c == '0' && matches!(chars.peek(), Some('x') | Some('X')) {
                        chars.next();
                        col += 1;
                        true
                    } else {
                        text.push(c);
                        false
                    }
                };
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_hexdigit() || c2 == '_' {
                        if c2 != '_' {
                            text.push(c2);
                        }
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let radix = if hex { 16 } else { 10 };
                let value = u64::from_str_radix(&text, radix).map_err(|_| {
                    Diagnostic::new(DiagKind::Syntax, span, format!("bad integer literal `{text}`"))
                })?;
                push!(Tok::Int(value), span);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut text = String::new();
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_alphanumeric() || c2 == '_' {
                        text.push(c2);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                push!(Tok::Ident(text), span);
            }
            _ => {
                chars.next();
                col += 1;
                let two = |chars: &mut std::iter::Peekable<std::str::Chars>, col: &mut u32, want: char| {
                    if chars.peek() == Some(&want) {
                        chars.next();
                        *col += 1;
                        true
                    } else {
                        false
                    }
                };
                let tok = match c {
                    ':' => Tok::Colon,
                    ';' => Tok::Semi,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '~' => Tok::Tilde,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '&' => Tok::Amp,
                    '|' => Tok::Pipe,
                    '^' => Tok::Caret,
                    '=' => {
                        if two(&mut chars, &mut col, '=') {
                            Tok::EqEq
                        } else {
                            Tok::Assign
                        }
                    }
                    '!' => {
                        if two(&mut chars, &mut col, '=') {
                            Tok::NotEq
                        } else {
                            return Err(Diagnostic::new(DiagKind::Syntax, span, "expected `!=`"));
                        }
                    }
                    '<' => {
                        if two(&mut chars, &mut col, '<') {
                            Tok::Shl
                        } else if two(&mut chars, &mut col, '=') {
                            Tok::Le
                        } else {
                            Tok::Lt
                        }
                    }
                    '>' => {
                        if two(&mut chars, &mut col, '>') {
                            Tok::Shr
                        } else {
                            return Err(Diagnostic::new(
                                DiagKind::Syntax,
                                span,
                                "`>` is not an operator (only `>>`; rewrite `a > b` as `b < a`)",
                            ));
                        }
                    }
                    other => {
                        return Err(Diagnostic::new(
                            DiagKind::Syntax,
                            span,
                            format!("unexpected character `{other}`"),
                        ))
                    }
                };
                push!(tok, span);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_statement() {
        let toks = lex("next r = r + 0x1F # comment\nwire w:u8 = 3").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Ident("next".into()),
                Tok::Ident("r".into()),
                Tok::Assign,
                Tok::Ident("r".into()),
                Tok::Plus,
                Tok::Int(31),
                Tok::Newline,
                Tok::Ident("wire".into()),
                Tok::Ident("w".into()),
                Tok::Colon,
                Tok::Ident("u8".into()),
                Tok::Assign,
                Tok::Int(3),
            ]
        );
    }

    #[test]
    fn shift_vs_compare() {
        let toks = lex("a << 1 <= b < c >> 2").unwrap();
        let ops: Vec<_> = toks
            .iter()
            .filter(|t| matches!(t.tok, Tok::Shl | Tok::Shr | Tok::Lt | Tok::Le))
            .map(|t| t.tok.clone())
            .collect();
        assert_eq!(ops, vec![Tok::Shl, Tok::Le, Tok::Lt, Tok::Shr]);
    }
}
