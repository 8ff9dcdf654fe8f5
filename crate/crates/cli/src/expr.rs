//! Constant-expression language: AST, recursive-descent parser and printer.
//!
//! Grammar, loosest first; every binary level is left associative:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' ['-'] atom)*
//! atom    := number | constant | func '(' sum (',' sum)* ')' | '(' sum ')'
//! ```
//!
//! Constants are `pi`, `Catalan` and `i`. Names are case-sensitive.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sqrt,
    Sin,
    Cos,
    Tan,
    Atan,
    Ln,
    Exp,
    Abs,
    Re,
    Im,
    Arg,
    Cl2,
    Li2,
    D,
    Zeta,
    Hurwitz,
    L7,
    Gamma,
}

impl Func {
    pub const ALL: [Func; 18] = [
        Func::Sqrt,
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Atan,
        Func::Ln,
        Func::Exp,
        Func::Abs,
        Func::Re,
        Func::Im,
        Func::Arg,
        Func::Cl2,
        Func::Li2,
        Func::D,
        Func::Zeta,
        Func::Hurwitz,
        Func::L7,
        Func::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Atan => "atan",
            Func::Ln => "ln",
            Func::Exp => "exp",
            Func::Abs => "abs",
            Func::Re => "re",
            Func::Im => "im",
            Func::Arg => "arg",
            Func::Cl2 => "Cl2",
            Func::Li2 => "Li2",
            Func::D => "D",
            Func::Zeta => "zeta",
            Func::Hurwitz => "hurwitz",
            Func::L7 => "L7",
            Func::Gamma => "gamma",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Hurwitz => 2,
            _ => 1,
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstExpr {
    /// Decimal literal as written: digits, optional fraction, optional exponent.
    Number(String),
    ImagUnit,
    Pi,
    Catalan,
    Neg(Box<ConstExpr>),
    Binary(BinOp, Box<ConstExpr>, Box<ConstExpr>),
    Call(Func, Vec<ConstExpr>),
}

impl ConstExpr {
    pub fn number(text: impl Into<String>) -> Self {
        ConstExpr::Number(text.into())
    }

    pub fn neg(e: ConstExpr) -> Self {
        ConstExpr::Neg(Box::new(e))
    }

    pub fn binary(op: BinOp, l: ConstExpr, r: ConstExpr) -> Self {
        ConstExpr::Binary(op, Box::new(l), Box::new(r))
    }

    fn precedence(&self) -> u8 {
        match self {
            ConstExpr::Binary(op, ..) => op.precedence(),
            ConstExpr::Neg(_) => 3,
            _ => 5,
        }
    }

    fn is_atom(&self) -> bool {
        self.precedence() == 5
    }
}

/// Minimal-parenthesis rendering that parses back to the same tree.
impl fmt::Display for ConstExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstExpr::Number(s) => f.write_str(s),
            ConstExpr::ImagUnit => f.write_str("i"),
            ConstExpr::Pi => f.write_str("pi"),
            ConstExpr::Catalan => f.write_str("Catalan"),
            ConstExpr::Neg(x) => {
                f.write_str("-")?;
                write_wrapped(f, x, x.precedence() < 3)
            }
            ConstExpr::Binary(BinOp::Pow, l, r) => {
                write_wrapped(f, l, l.precedence() < 4)?;
                f.write_str("^")?;
                let bare = match r.as_ref() {
                    ConstExpr::Neg(x) => x.is_atom(),
                    other => other.is_atom(),
                };
                write_wrapped(f, r, !bare)
            }
            ConstExpr::Binary(op, l, r) => {
                let p = op.precedence();
                write_wrapped(f, l, l.precedence() < p)?;
                write!(f, " {} ", op.symbol())?;
                write_wrapped(f, r, r.precedence() <= p)
            }
            ConstExpr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, e: &ConstExpr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<&'static str>, found: String },
    #[error("{func} takes {expected} argument(s), got {got} (offset {offset})")]
    Arity { offset: usize, func: &'static str, expected: usize, got: usize },
    #[error("unknown name `{name}` at offset {offset}")]
    UnknownName { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Arity { offset, .. } | ParseError::UnknownName { offset, .. } => {
                *offset
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok<'a> {
    Number(&'a str),
    Ident(&'a str),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eof,
}

impl fmt::Display for Tok<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number(s) => write!(f, "number `{s}`"),
            Tok::Ident(s) => write!(f, "name `{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

const OPERAND: &[&str] = &["number", "name", "`(`", "`-`"];
const ATOM: &[&str] = &["number", "name", "`(`"];

fn lex(text: &str) -> Result<Vec<(Tok<'_>, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            i = scan_number(bytes, i)?;
            out.push((Tok::Number(&text[start..i]), start));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(&text[start..i]), start));
        } else {
            let ch = text[start..].chars().next().expect("in bounds");
            return Err(ParseError::Syntax { offset: start, expected: OPERAND.to_vec(), found: format!("`{ch}`") });
        }
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

/// digits ['.' digits] [('e' | 'E') ['+' | '-'] digits]
fn scan_number(b: &[u8], mut i: usize) -> Result<usize, ParseError> {
    let digits = |mut i: usize| {
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    i = digits(i);
    if i < b.len() && b[i] == b'.' {
        let j = digits(i + 1);
        if j == i + 1 {
            return Err(ParseError::Syntax { offset: j, expected: vec!["digit"], found: found_at(b, j) });
        }
        i = j;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        let mut j = i + 1;
        if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
            j += 1;
        }
        let k = digits(j);
        if k == j {
            return Err(ParseError::Syntax { offset: k, expected: vec!["digit"], found: found_at(b, k) });
        }
        i = k;
    }
    Ok(i)
}

fn found_at(b: &[u8], i: usize) -> String {
    match b.get(i) {
        Some(c) => format!("`{}`", *c as char),
        None => "end of input".to_owned(),
    }
}

struct Parser<'a> {
    toks: Vec<(Tok<'a>, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok<'a> {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok<'a>, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax { offset: self.offset(), expected: expected.to_vec(), found: self.peek().to_string() }
    }

    fn sum(&mut self) -> Result<ConstExpr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = ConstExpr::binary(op, lhs, self.product()?);
        }
    }

    fn product(&mut self) -> Result<ConstExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = ConstExpr::binary(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<ConstExpr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(ConstExpr::neg(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ConstExpr, ParseError> {
        let mut base = self.atom(OPERAND)?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let exponent = if *self.peek() == Tok::Minus {
                self.bump();
                ConstExpr::neg(self.atom(ATOM)?)
            } else {
                self.atom(OPERAND)?
            };
            base = ConstExpr::binary(BinOp::Pow, base, exponent);
        }
        Ok(base)
    }

    fn atom(&mut self, expected: &[&'static str]) -> Result<ConstExpr, ParseError> {
        match self.peek().clone() {
            Tok::Number(s) => {
                self.bump();
                Ok(ConstExpr::number(s))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                self.expect(Tok::RParen, &["`)`", "operator"])?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let (_, at) = self.bump();
                if *self.peek() == Tok::LParen {
                    let func = Func::from_name(name).ok_or_else(|| ParseError::UnknownName { offset: at, name: name.to_owned() })?;
                    self.bump();
                    let mut args = vec![self.sum()?];
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        args.push(self.sum()?);
                    }
                    self.expect(Tok::RParen, &["`)`", "`,`", "operator"])?;
                    if args.len() != func.arity() {
                        return Err(ParseError::Arity { offset: at, func: func.name(), expected: func.arity(), got: args.len() });
                    }
                    return Ok(ConstExpr::Call(func, args));
                }
                match name {
                    "pi" => Ok(ConstExpr::Pi),
                    "Catalan" => Ok(ConstExpr::Catalan),
                    "i" => Ok(ConstExpr::ImagUnit),
                    _ if Func::from_name(name).is_some() => Err(self.error(&["`(`"])),
                    _ => Err(ParseError::UnknownName { offset: at, name: name.to_owned() }),
                }
            }
            _ => Err(self.error(expected)),
        }
    }

    fn expect(&mut self, tok: Tok<'static>, expected: &[&'static str]) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }
}

pub fn parse_expr(text: &str) -> Result<ConstExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> ConstExpr {
        ConstExpr::number(s)
    }

    #[test]
    fn clausen_of_pi_third() {
        let e = parse_expr("Cl2(pi/3)").unwrap();
        assert_eq!(e, ConstExpr::Call(Func::Cl2, vec![ConstExpr::binary(BinOp::Div, ConstExpr::Pi, n("3"))]));
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse_expr("1 - 2 - 3").unwrap();
        assert_eq!(e, ConstExpr::binary(BinOp::Sub, ConstExpr::binary(BinOp::Sub, n("1"), n("2")), n("3")));
        let e = parse_expr("-2^2").unwrap();
        assert_eq!(e, ConstExpr::neg(ConstExpr::binary(BinOp::Pow, n("2"), n("2"))));
        let e = parse_expr("2^3^2").unwrap();
        assert_eq!(e, ConstExpr::binary(BinOp::Pow, ConstExpr::binary(BinOp::Pow, n("2"), n("3")), n("2")));
        let e = parse_expr("1+2*3").unwrap();
        assert_eq!(e, ConstExpr::binary(BinOp::Add, n("1"), ConstExpr::binary(BinOp::Mul, n("2"), n("3"))));
        assert_eq!(parse_expr("2^-1").unwrap(), ConstExpr::binary(BinOp::Pow, n("2"), ConstExpr::neg(n("1"))));
    }

    #[test]
    fn long_closed_form_parses() {
        let text = "4/(7*sqrt(7))*(3*Cl2(2*atan(sqrt(7)))-3*Cl2(4*atan(sqrt(7)))+Cl2(6*atan(sqrt(7))))";
        let e = parse_expr(text).unwrap();
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors() {
        match parse_expr("Cl2(") {
            Err(ParseError::Syntax { offset, expected, .. }) => {
                assert_eq!(offset, 4);
                assert!(expected.contains(&"number"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("hurwitz(2)"), Err(ParseError::Arity { expected: 2, got: 1, .. })));
        assert!(matches!(parse_expr("sin(1, 2)"), Err(ParseError::Arity { .. })));
        assert!(matches!(parse_expr("cl2(1)"), Err(ParseError::UnknownName { offset: 0, .. })));
        assert!(matches!(parse_expr("1 + foo"), Err(ParseError::UnknownName { offset: 4, .. })));
        assert!(matches!(parse_expr("1 2"), Err(ParseError::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expr("1.e3"), Err(ParseError::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expr("sqrt"), Err(ParseError::Syntax { offset: 4, .. })));
        assert!(matches!(parse_expr("2 $ 3"), Err(ParseError::Syntax { offset: 2, .. })));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse_expr(" hurwitz ( 2 , 1/3 ) ").unwrap(), parse_expr("hurwitz(2,1/3)").unwrap());
    }

    #[test]
    fn printer_minimal_parentheses() {
        let cases = ["(1 + 2) * 3", "1 - (2 - 3)", "-(1 + 2)", "(-2)^2", "2^(1 + 1)", "2^-1", "--1", "1.5e-3 * i", "(2^3)^2"];
        for c in cases {
            let e = parse_expr(c).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{c}");
        }
        assert_eq!(parse_expr("(2^3)^2").unwrap().to_string(), "2^3^2");
        assert_eq!(parse_expr("(1+2)*3").unwrap().to_string(), "(1 + 2) * 3");
    }
}
