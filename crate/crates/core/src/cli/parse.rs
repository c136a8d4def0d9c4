//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INTEGER)?
//! atom    := INTEGER | 'x' | 't' | '(' sum ')'
//! ```
//!
//! `−` (U+2212) is accepted as minus. Offsets count characters, not bytes.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::field::Field;
use crate::poly::Poly;

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::X => "`x`".into(),
            Tok::T => "`t`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn literal(offset: usize, message: impl Into<String>) -> Error {
    Error::FieldLiteral {
        offset,
        message: message.into(),
    }
}

/// Tokens paired with their character offsets; the last token is `End`.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            'x' | 'X' => Tok::X,
            't' | 'T' => Tok::T,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        if matches!(tok, Tok::X | Tok::T) && chars.get(i).is_some_and(|c| c.is_alphanumeric()) {
            return Err(syntax(start, "unknown identifier"));
        }
        out.push((tok, start));
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

/// Parsed syntax tree. Offsets point at the token that introduced the node.
#[derive(Debug, Clone)]
enum Node {
    Int(BigInt),
    X,
    T(usize),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>, usize),
    Pow(Box<Node>, u64),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        syntax(
            self.offset(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn sum(&mut self) -> Result<Node> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Node::Add(Box::new(acc), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Node::Sub(Box::new(acc), Box::new(self.product()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Node> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Node::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    acc = Node::Div(Box::new(acc), Box::new(self.unary()?), at);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Node> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().0 {
            Tok::Int(k) => match u64::try_from(&k) {
                Ok(k) if k <= MAX_EXPONENT => Ok(Node::Pow(Box::new(base), k)),
                _ => Err(syntax(at, format!("exponent exceeds {MAX_EXPONENT}"))),
            },
            other => Err(syntax(
                at,
                format!(
                    "expected a nonnegative integer exponent, found {}",
                    other.describe()
                ),
            )),
        }
    }

    fn atom(&mut self) -> Result<Node> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Node::Int(n))
            }
            Tok::X => {
                self.bump();
                Ok(Node::X)
            }
            Tok::T => {
                self.bump();
                Ok(Node::T(at))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}

fn parse_tree(text: &str) -> Result<Node> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let tree = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(tree)
}

/// The coefficient fields the parser can target.
pub trait ParseField: Field {
    /// The element `t`, over fields that have it.
    fn indeterminate_t(ctx: &Self::Ctx) -> Option<Self>;
}

impl ParseField for crate::field::Rational {
    fn indeterminate_t(_: &Self::Ctx) -> Option<Self> {
        None
    }
}

impl ParseField for crate::field::Fp {
    fn indeterminate_t(_: &Self::Ctx) -> Option<Self> {
        None
    }
}

impl ParseField for crate::field::RatFunc {
    fn indeterminate_t(ctx: &Self::Ctx) -> Option<Self> {
        Some(crate::field::RatFunc::t(*ctx))
    }
}

fn eval<F: ParseField>(node: &Node, ctx: &F::Ctx) -> Result<Poly<F>> {
    Ok(match node {
        Node::Int(n) => Poly::constant(F::from_bigint(ctx, n)),
        Node::X => Poly::x(ctx),
        Node::T(at) => match F::indeterminate_t(ctx) {
            Some(t) => Poly::constant(t),
            None => {
                return Err(literal(
                    *at,
                    format!("`t` is not an element of {}", F::describe(ctx)),
                ))
            }
        },
        Node::Neg(a) => -&eval(a, ctx)?,
        Node::Add(a, b) => &eval(a, ctx)? + &eval(b, ctx)?,
        Node::Sub(a, b) => &eval(a, ctx)? - &eval(b, ctx)?,
        Node::Mul(a, b) => &eval(a, ctx)? * &eval(b, ctx)?,
        Node::Div(a, b, at) => {
            let d = eval::<F>(b, ctx)?;
            if !d.is_constant() {
                return Err(literal(*at, "only division by a constant is supported"));
            }
            if d.is_zero() {
                return Err(literal(
                    *at,
                    format!("divisor is zero in {}", F::describe(ctx)),
                ));
            }
            let inv = d.coeff(0).inv()?;
            eval(a, ctx)?.scale(&inv)
        }
        Node::Pow(a, k) => eval(a, ctx)?.pow(*k),
    })
}

/// Parses `text` as a polynomial in `x` over the field of `ctx`.
pub fn parse_poly<F: ParseField>(text: &str, ctx: &F::Ctx) -> Result<Poly<F>> {
    eval(&parse_tree(text)?, ctx)
}

fn flatten_product(node: &Node, out: &mut Vec<Node>, negations: &mut u32) {
    match node {
        Node::Mul(a, b) => {
            flatten_product(a, out, negations);
            flatten_product(b, out, negations);
        }
        Node::Neg(a) => {
            *negations += 1;
            flatten_product(a, out, negations);
        }
        other => out.push(other.clone()),
    }
}

/// Parses `unit * (g1)^m1 * (g2)^m2 * ...`. Constant factors fold into the
/// unit; each `g` is made monic with its leading coefficient folded in too.
/// The result is validated, so factors must be pairwise coprime.
pub fn parse_factored<F: ParseField>(text: &str, ctx: &F::Ctx) -> Result<Factorization<F>> {
    let tree = parse_tree(text)?;
    let mut nodes = Vec::new();
    let mut negations = 0;
    flatten_product(&tree, &mut nodes, &mut negations);
    let mut unit = crate::field::sign::<F>(ctx, negations as u64);
    let mut factors = Vec::new();
    for node in &nodes {
        let (base, m) = match node {
            Node::Pow(base, m) => (eval::<F>(base, ctx)?, *m),
            other => (eval(other, ctx)?, 1),
        };
        if base.is_constant() {
            unit = unit.mul(&base.coeff(0).pow(m));
            continue;
        }
        if m == 0 {
            continue;
        }
        let m = u32::try_from(m).expect("exponents are capped");
        let lc = base.leading().expect("nonconstant").clone();
        unit = unit.mul(&lc.pow(m as u64));
        factors.push((base.monic(), m));
    }
    let fac = Factorization::new(unit, factors);
    fac.validate()?;
    Ok(fac)
}
