//! Element expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := rational
//!         | [rational ['*']] unit ('*' unit)*
//! unit   := factor [factor]          -- juxtaposition, envelope mode only
//! factor := generator
//!         | '[' expr ',' expr ']'
//!         | 'A(' expr ',' expr ',' expr ')'
//!         | '(' expr ')'
//! ```
//!
//! `*` is left associative, so `a * b * c` is `(a * b) * c`. Juxtaposition
//! `a b` is the same product but may join only two factors; `a b c` is
//! rejected and must be parenthesized. A leading rational scales the whole
//! product. A bare rational is that multiple of the unit.

use std::fmt;

use thiserror::Error;

use crate::akivis::AkivisSpec;
use crate::basis::GradedBasis;
use crate::envelope::{EnvElement, Envelope};
use crate::error::AlgebraError;
use crate::lex::{tokenize, Span, Tok};
use crate::scalar::Scalar;
use crate::table::SuperTable;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Gen(usize),
    /// A bare rational, i.e. a multiple of the unit.
    Scalar(Scalar),
    Scaled(Scalar, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    Ternary(Box<Expr>, Box<Expr>, Box<Expr>),
}

/// Which algebra an expression is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `*` is the product of a superalgebra; brackets and `A` are its
    /// super-commutator and associator.
    Table,
    /// Brackets and `A` come from the Akivis tables; there is no `*`.
    Akivis,
    /// `*` is the product of the enveloping algebra; brackets and `A` take
    /// degree-one arguments and give degree-one results.
    Envelope,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {}: {message}", span.column())]
pub struct ExprError {
    pub span: Span,
    pub message: String,
}

impl ExprError {
    fn new(span: Span, message: impl Into<String>) -> Self {
        ExprError {
            span,
            message: message.into(),
        }
    }

    /// The message followed by the source line and a caret under the span.
    pub fn annotate(&self, src: &str) -> String {
        let width = self.span.end.saturating_sub(self.span.start).max(1);
        format!(
            "{self}\n  {src}\n  {}{}",
            " ".repeat(self.span.start),
            "^".repeat(width)
        )
    }
}

fn node(kind: ExprKind, span: Span) -> Expr {
    Expr { kind, span }
}

struct Parser<'a> {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    basis: &'a GradedBasis,
    juxtapose: bool,
    end: Span,
}

/// Parses `src`, resolving generators against `basis`. Juxtaposition is
/// accepted only in envelope mode.
pub fn parse_expr(src: &str, basis: &GradedBasis, mode: Mode) -> Result<Expr, ExprError> {
    let toks = tokenize(src).map_err(|e| ExprError::new(e.span, e.message))?;
    let end = Span::new(src.len(), src.len() + 1);
    if toks.is_empty() {
        return Err(ExprError::new(end, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        basis,
        juxtapose: mode == Mode::Envelope,
        end,
    };
    let e = p.expr()?;
    if let Some((t, span)) = p.peek() {
        let msg = match t {
            Tok::RParen | Tok::RBracket => format!("unbalanced {t}"),
            _ => format!("unexpected {t}"),
        };
        return Err(ExprError::new(*span, msg));
    }
    Ok(e)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&(Tok, Span)> {
        self.toks.get(self.pos)
    }

    fn peek_tok(&self) -> Option<&Tok> {
        self.peek().map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<(Tok, Span)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn here(&self) -> Span {
        self.peek().map_or(self.end, |(_, s)| *s)
    }

    fn expect(&mut self, want: Tok, open: Option<Span>) -> Result<Span, ExprError> {
        match self.bump() {
            Some((t, s)) if t == want => Ok(s),
            Some((t, s)) => Err(ExprError::new(s, format!("expected {want}, found {t}"))),
            None => {
                let msg = match open {
                    Some(_) => format!("unbalanced brackets: expected {want} before end of input"),
                    None => format!("expected {want}"),
                };
                Err(ExprError::new(open.unwrap_or(self.end), msg))
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = match self.peek_tok() {
            Some(Tok::Minus) => {
                let (_, s) = self.bump().unwrap();
                let t = self.term()?;
                let span = s.to(t.span);
                node(ExprKind::Neg(Box::new(t)), span)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            let minus = match self.peek_tok() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.to(rhs.span);
            let kind = if minus {
                ExprKind::Sub(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Add(Box::new(lhs), Box::new(rhs))
            };
            lhs = node(kind, span);
        }
        Ok(lhs)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek_tok(),
            Some(Tok::Ident(_) | Tok::LParen | Tok::LBracket)
        )
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut coeff = None;
        if let Some((Tok::Number(c), s)) = self.peek().cloned() {
            self.bump();
            if self.peek_tok() == Some(&Tok::Star) {
                self.bump();
                if !self.starts_factor() {
                    return Err(ExprError::new(self.here(), "expected a factor after `*`"));
                }
            } else if !self.starts_factor() {
                return Ok(node(ExprKind::Scalar(c), s));
            }
            coeff = Some((c, s));
        }
        let mut lhs = self.unit()?;
        while self.peek_tok() == Some(&Tok::Star) {
            self.bump();
            let rhs = self.unit()?;
            let span = lhs.span.to(rhs.span);
            lhs = node(ExprKind::Product(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(match coeff {
            Some((c, s)) => {
                let span = s.to(lhs.span);
                node(ExprKind::Scaled(c, Box::new(lhs)), span)
            }
            None => lhs,
        })
    }

    fn unit(&mut self) -> Result<Expr, ExprError> {
        let first = self.factor()?;
        if !self.starts_factor() {
            return Ok(first);
        }
        if !self.juxtapose {
            return Err(ExprError::new(
                self.here(),
                "juxtaposition is only allowed in envelope mode; write `*`",
            ));
        }
        let second = self.factor()?;
        if self.starts_factor() {
            return Err(ExprError::new(
                self.here(),
                "juxtaposition joins two factors only; parenthesize, e.g. `(a b) c`",
            ));
        }
        let span = first.span.to(second.span);
        Ok(node(
            ExprKind::Product(Box::new(first), Box::new(second)),
            span,
        ))
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let Some((tok, span)) = self.bump() else {
            return Err(ExprError::new(self.end, "unexpected end of input"));
        };
        match tok {
            Tok::Ident(name) if name == "A" && self.peek_tok() == Some(&Tok::LParen) => {
                let open = self.expect(Tok::LParen, None)?;
                let x = self.expr()?;
                self.expect(Tok::Comma, Some(open))?;
                let y = self.expr()?;
                self.expect(Tok::Comma, Some(open))?;
                let z = self.expr()?;
                let close = self.expect(Tok::RParen, Some(open))?;
                Ok(node(
                    ExprKind::Ternary(Box::new(x), Box::new(y), Box::new(z)),
                    span.to(close),
                ))
            }
            Tok::Ident(name) => {
                let i = self
                    .basis
                    .index_of(&name)
                    .map_err(|e| ExprError::new(span, e.to_string()))?;
                Ok(node(ExprKind::Gen(i), span))
            }
            Tok::LBracket => {
                let x = self.expr()?;
                self.expect(Tok::Comma, Some(span))?;
                let y = self.expr()?;
                let close = self.expect(Tok::RBracket, Some(span))?;
                Ok(node(
                    ExprKind::Bracket(Box::new(x), Box::new(y)),
                    span.to(close),
                ))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, Some(span))?;
                Ok(node(inner.kind, span.to(close)))
            }
            Tok::RParen | Tok::RBracket => Err(ExprError::new(span, format!("unbalanced {tok}"))),
            other => Err(ExprError::new(span, format!("expected a factor, found {other}"))),
        }
    }
}

fn lift_err(span: Span) -> impl Fn(AlgebraError) -> ExprError {
    move |e| ExprError::new(span, e.to_string())
}

impl Expr {
    /// Evaluates in a superalgebra given by its product table.
    pub fn eval_table(&self, table: &SuperTable) -> Result<Vector, ExprError> {
        let err = lift_err(self.span);
        Ok(match &self.kind {
            ExprKind::Gen(i) => Vector::basis(*i),
            ExprKind::Scalar(c) => match table.unit() {
                Some(u) => Vector::basis(u).scaled(c),
                None => {
                    return Err(ExprError::new(
                        self.span,
                        "a bare scalar needs a unit, and this table has none",
                    ))
                }
            },
            ExprKind::Scaled(c, e) => e.eval_table(table)?.scaled(c),
            ExprKind::Neg(e) => -e.eval_table(table)?,
            ExprKind::Add(a, b) => a.eval_table(table)? + b.eval_table(table)?,
            ExprKind::Sub(a, b) => a.eval_table(table)? - b.eval_table(table)?,
            ExprKind::Product(a, b) => table
                .multiply(&a.eval_table(table)?, &b.eval_table(table)?)
                .map_err(err)?,
            ExprKind::Bracket(a, b) => table
                .super_commutator(&a.eval_table(table)?, &b.eval_table(table)?)
                .map_err(err)?,
            ExprKind::Ternary(a, b, c) => table
                .associator(
                    &a.eval_table(table)?,
                    &b.eval_table(table)?,
                    &c.eval_table(table)?,
                )
                .map_err(err)?,
        })
    }

    /// Evaluates with the bracket and ternary tables of an Akivis spec.
    pub fn eval_akivis(&self, spec: &AkivisSpec) -> Result<Vector, ExprError> {
        let err = lift_err(self.span);
        Ok(match &self.kind {
            ExprKind::Gen(i) => Vector::basis(*i),
            ExprKind::Scalar(_) => {
                return Err(ExprError::new(
                    self.span,
                    "an Akivis superalgebra has no unit; a bare scalar is meaningless here",
                ))
            }
            ExprKind::Scaled(c, e) => e.eval_akivis(spec)?.scaled(c),
            ExprKind::Neg(e) => -e.eval_akivis(spec)?,
            ExprKind::Add(a, b) => a.eval_akivis(spec)? + b.eval_akivis(spec)?,
            ExprKind::Sub(a, b) => a.eval_akivis(spec)? - b.eval_akivis(spec)?,
            ExprKind::Product(..) => {
                return Err(ExprError::new(
                    self.span,
                    "`*` needs a product table or the enveloping algebra",
                ))
            }
            ExprKind::Bracket(a, b) => spec
                .bracket_eval(&a.eval_akivis(spec)?, &b.eval_akivis(spec)?)
                .map_err(err)?,
            ExprKind::Ternary(a, b, c) => spec
                .ternary_eval(
                    &a.eval_akivis(spec)?,
                    &b.eval_akivis(spec)?,
                    &c.eval_akivis(spec)?,
                )
                .map_err(err)?,
        })
    }

    /// Evaluates in the enveloping algebra.
    pub fn eval_envelope(&self, env: &Envelope<'_>) -> Result<EnvElement, ExprError> {
        let err = lift_err(self.span);
        Ok(match &self.kind {
            ExprKind::Gen(i) => env.gen(*i),
            ExprKind::Scalar(c) => EnvElement::unit().scaled(c),
            ExprKind::Scaled(c, e) => e.eval_envelope(env)?.scaled(c),
            ExprKind::Neg(e) => e.eval_envelope(env)?.scaled(&-Scalar::one()),
            ExprKind::Add(a, b) => a.eval_envelope(env)? + b.eval_envelope(env)?,
            ExprKind::Sub(a, b) => a.eval_envelope(env)? - b.eval_envelope(env)?,
            ExprKind::Product(a, b) => env
                .star(&a.eval_envelope(env)?, &b.eval_envelope(env)?)
                .map_err(err)?,
            ExprKind::Bracket(a, b) => {
                let x = a.degree_one(env)?;
                let y = b.degree_one(env)?;
                env.lift(&env.spec().bracket_eval(&x, &y).map_err(err)?)
            }
            ExprKind::Ternary(a, b, c) => {
                let x = a.degree_one(env)?;
                let y = b.degree_one(env)?;
                let z = c.degree_one(env)?;
                env.lift(&env.spec().ternary_eval(&x, &y, &z).map_err(err)?)
            }
        })
    }

    fn degree_one(&self, env: &Envelope<'_>) -> Result<Vector, ExprError> {
        let v = self.eval_envelope(env)?;
        if v.iter().any(|(m, _)| m.degree() != 1) {
            return Err(ExprError::new(
                self.span,
                "brackets and `A` take degree-one arguments in the enveloping algebra; \
                 use `*` for products of higher degree",
            ));
        }
        Ok(v.degree_one_part())
    }

    /// Fully parenthesized rendering, mainly for diagnostics.
    pub fn render(&self, basis: &GradedBasis) -> String {
        match &self.kind {
            ExprKind::Gen(i) => basis.name(*i).to_string(),
            ExprKind::Scalar(c) => c.to_string(),
            ExprKind::Scaled(c, e) => format!("{c} {}", e.render(basis)),
            ExprKind::Neg(e) => format!("-({})", e.render(basis)),
            ExprKind::Add(a, b) => format!("({} + {})", a.render(basis), b.render(basis)),
            ExprKind::Sub(a, b) => format!("({} - {})", a.render(basis), b.render(basis)),
            ExprKind::Product(a, b) => format!("({} * {})", a.render(basis), b.render(basis)),
            ExprKind::Bracket(a, b) => format!("[{}, {}]", a.render(basis), b.render(basis)),
            ExprKind::Ternary(a, b, c) => format!(
                "A({}, {}, {})",
                a.render(basis),
                b.render(basis),
                c.render(basis)
            ),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Table => "table",
            Mode::Akivis => "akivis",
            Mode::Envelope => "envelope",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_matrix_quasialgebra, build_octonions};

    fn oct_basis() -> GradedBasis {
        build_octonions().basis().clone()
    }

    #[test]
    fn nested_brackets() {
        let b = oct_basis();
        let e = parse_expr("[e1,[e2,e3]]", &b, Mode::Akivis).unwrap();
        assert_eq!(e.render(&b), "[e1, [e2, e3]]");
        match e.kind {
            ExprKind::Bracket(_, inner) => assert!(matches!(inner.kind, ExprKind::Bracket(..))),
            _ => panic!("expected a bracket"),
        }
    }

    #[test]
    fn scaled_ternary() {
        let b = oct_basis();
        let e = parse_expr("1/6 * A(e1,e2,e3)", &b, Mode::Akivis).unwrap();
        assert!(matches!(e.kind, ExprKind::Scaled(_, ref t) if matches!(t.kind, ExprKind::Ternary(..))));
        assert_eq!(e.span, Span::new(0, 17));
    }

    #[test]
    fn products_associate_to_the_left() {
        let b = oct_basis();
        let e = parse_expr("(e4 * e2) * e3", &b, Mode::Envelope).unwrap();
        assert_eq!(e.render(&b), "((e4 * e2) * e3)");
        let chained = parse_expr("e4 * e2 * e3", &b, Mode::Envelope).unwrap();
        assert_eq!(chained.render(&b), e.render(&b));
        let juxt = parse_expr("(e4 e2) e3", &b, Mode::Envelope).unwrap();
        assert_eq!(juxt.render(&b), e.render(&b));
    }

    #[test]
    fn parse_errors() {
        let b = oct_basis();
        let err = parse_expr("e1 + q9", &b, Mode::Akivis).unwrap_err();
        assert_eq!(err.span.column(), 6);
        assert!(err.message.contains("unknown generator"));
        assert!(parse_expr("[e1, e2", &b, Mode::Akivis)
            .unwrap_err()
            .message
            .contains("unbalanced"));
        assert!(parse_expr("e1)", &b, Mode::Akivis)
            .unwrap_err()
            .message
            .contains("unbalanced"));
        assert!(parse_expr("0.5 e1", &b, Mode::Akivis).is_err());
        assert!(parse_expr("e1 e2 e3", &b, Mode::Envelope).is_err());
        assert!(parse_expr("e1 e2", &b, Mode::Table).is_err());
    }

    #[test]
    fn evaluation_modes() {
        let oct = build_octonions();
        let b = oct.basis().clone();
        let v = parse_expr("e1 * e1", &b, Mode::Table)
            .unwrap()
            .eval_table(&oct)
            .unwrap();
        assert_eq!(b.format_vector(&v), "-1 e0");

        let spec = oct.derive_akivis().unwrap();
        let v = parse_expr("[e4, e1]", &b, Mode::Akivis)
            .unwrap()
            .eval_akivis(&spec)
            .unwrap();
        assert_eq!(b.format_vector(&v), "2 e5");
        assert!(parse_expr("e1 * e2", &b, Mode::Akivis)
            .unwrap()
            .eval_akivis(&spec)
            .is_err());

        let env = Envelope::new(&spec);
        let v = parse_expr("e5 * e4", &b, Mode::Envelope)
            .unwrap()
            .eval_envelope(&env)
            .unwrap();
        assert_eq!(v.render(&b), "-1 e4e5");
        let err = parse_expr("[e1 * e2, e3]", &b, Mode::Envelope)
            .unwrap()
            .eval_envelope(&env)
            .unwrap_err();
        assert_eq!(err.span, Span::new(1, 8));
    }

    #[test]
    fn matrix_bracket_by_expression() {
        let t = build_matrix_quasialgebra(1, 1).unwrap();
        let b = t.basis().clone();
        let v = parse_expr("[E1_2, E2_1]", &b, Mode::Table)
            .unwrap()
            .eval_table(&t)
            .unwrap();
        assert_eq!(b.format_vector(&v), "1 E1_1 + -1 E2_2");
    }
}
