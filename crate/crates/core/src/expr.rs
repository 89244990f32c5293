//! Module expressions such as `tau(omega(DA))` or `P(3) + S(1)`.
//!
//! ```text
//! expr  := term ('+' term)*
//! term  := S(v) | P(v) | I(v) | DA | A | '(' expr ')' | func '(' expr ')'
//! func  := (omega | tau) ['^' ['-'] n] | dual
//! ```
//!
//! `omega^-1` is the cosyzygy and `tau^-1` the inverse translate; `dual`
//! moves to the opposite algebra.

use serde::Serialize;

use crate::algebra::BoundQuiverAlgebra;
use crate::auslander_reiten::{ar_inverse_translate, ar_translate};
use crate::decomposition::{decompose, describe, summary, SummandInfo};
use crate::error::{Error, Result};
use crate::homological::{cosyzygy, injective_dimension, projective_dimension, syzygy, HomDim};
use crate::module::{dual_regular, injective, projective, regular, simple, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Simple(String),
    Projective(String),
    Injective(String),
    DualRegular,
    Regular,
    Sum(Vec<Expr>),
    /// `Ω^n` for `n > 0`, `Ω^{-n}` for `n < 0`.
    Omega(i64, Box<Expr>),
    /// `τ^n` for `n > 0`, `τ^{-n}` for `n < 0`.
    Tau(i64, Box<Expr>),
    Dual(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Number(i64),
    LParen,
    RParen,
    Plus,
    Caret,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text
                .parse()
                .map_err(|_| Error::Expression(format!("number `{text}` out of range")))?;
            out.push(Tok::Number(n));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Word(chars[start..i].iter().collect()));
        } else {
            out.push(match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '+' => Tok::Plus,
                '^' => Tok::Caret,
                '-' => Tok::Minus,
                _ => return Err(Error::Expression(format!("unexpected character `{c}`"))),
            });
            i += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(x) if x == t => Ok(()),
            other => Err(Error::Expression(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn vertex(&mut self) -> Result<String> {
        self.expect(Tok::LParen)?;
        let v = match self.next() {
            Some(Tok::Word(w)) => w,
            Some(Tok::Number(n)) => n.to_string(),
            other => return Err(Error::Expression(format!("expected a vertex, found {other:?}"))),
        };
        self.expect(Tok::RParen)?;
        Ok(v)
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let negative = self.peek() == Some(&Tok::Minus);
        if negative {
            self.pos += 1;
        }
        match self.next() {
            Some(Tok::Number(n)) if n > 0 => Ok(if negative { -n } else { n }),
            other => Err(Error::Expression(format!("expected a nonzero exponent, found {other:?}"))),
        }
    }

    fn argument(&mut self) -> Result<Box<Expr>> {
        self.expect(Tok::LParen)?;
        let e = self.sum()?;
        self.expect(Tok::RParen)?;
        Ok(Box::new(e))
    }

    fn term(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::LParen) => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Word(w)) => match w.as_str() {
                "S" => Ok(Expr::Simple(self.vertex()?)),
                "P" => Ok(Expr::Projective(self.vertex()?)),
                "I" => Ok(Expr::Injective(self.vertex()?)),
                "DA" => Ok(Expr::DualRegular),
                "A" => Ok(Expr::Regular),
                "omega" => {
                    let n = self.exponent()?;
                    Ok(Expr::Omega(n, self.argument()?))
                }
                "tau" => {
                    let n = self.exponent()?;
                    Ok(Expr::Tau(n, self.argument()?))
                }
                "dual" => Ok(Expr::Dual(self.argument()?)),
                _ => Err(Error::Expression(format!("unknown symbol `{w}`"))),
            },
            other => Err(Error::Expression(format!("unexpected {other:?}"))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Expression(format!("trailing input after token {}", p.pos)));
    }
    Ok(e)
}

fn vertex(a: &BoundQuiverAlgebra, name: &str) -> Result<usize> {
    a.quiver()
        .vertex_index(name)
        .ok_or_else(|| Error::Expression(format!("unknown vertex `{name}`")))
}

pub fn evaluate(a: &BoundQuiverAlgebra, e: &Expr) -> Result<Representation> {
    Ok(match e {
        Expr::Simple(v) => simple(a, vertex(a, v)?),
        Expr::Projective(v) => projective(a, vertex(a, v)?),
        Expr::Injective(v) => injective(a, vertex(a, v)?),
        Expr::DualRegular => dual_regular(a),
        Expr::Regular => regular(a),
        Expr::Sum(terms) => {
            let parts = terms.iter().map(|t| evaluate(a, t)).collect::<Result<Vec<_>>>()?;
            let first = parts[0].algebra().clone();
            for p in &parts {
                parts[0].ensure_same_algebra(p)?;
            }
            Representation::direct_sum(&first, &parts)
        }
        Expr::Omega(n, x) => {
            let m = evaluate(a, x)?;
            if *n > 0 {
                syzygy(&m, *n as usize)
            } else {
                cosyzygy(&m, n.unsigned_abs() as usize)
            }
        }
        Expr::Tau(n, x) => {
            let mut m = evaluate(a, x)?;
            for _ in 0..n.unsigned_abs() {
                m = if *n > 0 {
                    ar_translate(&m)
                } else {
                    ar_inverse_translate(&m)
                };
            }
            m
        }
        Expr::Dual(x) => evaluate(a, x)?.dual(),
    })
}

/// Data printed for an evaluated expression.
#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub expr: String,
    /// The module lives over the opposite algebra.
    pub opposite: bool,
    pub dim_vector: Vec<usize>,
    pub description: String,
    pub summands: Vec<SummandInfo>,
    pub pd: HomDim,
    pub id: HomDim,
}

pub fn eval_expr(a: &BoundQuiverAlgebra, text: &str) -> Result<Evaluation> {
    let m = evaluate(a, &parse_expr(text)?)?;
    let d = decompose(&m)?;
    Ok(Evaluation {
        expr: text.to_string(),
        opposite: m.algebra() != a,
        dim_vector: m.dim_vector().to_vec(),
        description: describe(&d),
        summands: summary(&d),
        pd: projective_dimension(&m),
        id: injective_dimension(&m),
    })
}

impl Evaluation {
    pub fn to_text(&self) -> String {
        let dims = self.dim_vector.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let side = if self.opposite { " (over the opposite algebra)" } else { "" };
        format!(
            "{}{side}\ndim vector: [{dims}]\ndecomposition: {}\npd: {}\nid: {}\n",
            self.expr, self.description, self.pd, self.id
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::build;
    use crate::decomposition::is_isomorphic;

    const EX1: &str = "vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b;";
    const EX2: &str =
        "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5; relations a*b, c*d;";

    #[test]
    fn parses() {
        assert_eq!(
            parse_expr("tau(omega(DA))").unwrap(),
            Expr::Tau(1, Box::new(Expr::Omega(1, Box::new(Expr::DualRegular))))
        );
        assert_eq!(
            parse_expr("omega^-1(P(3)) + S(x)").unwrap(),
            Expr::Sum(vec![
                Expr::Omega(-1, Box::new(Expr::Projective("3".into()))),
                Expr::Simple("x".into())
            ])
        );
        assert!(matches!(parse_expr("Q(1)"), Err(Error::Expression(_))));
        assert!(matches!(parse_expr("P(1"), Err(Error::Expression(_))));
        assert!(matches!(parse_expr("tau^0(A)"), Err(Error::Expression(_))));
        assert!(matches!(parse_expr("A A"), Err(Error::Expression(_))));
    }

    #[test]
    fn evaluates() {
        let a = build(EX1);
        let e = eval_expr(&a, "tau(omega(DA))").unwrap();
        assert_eq!(e.dim_vector, [0, 0, 1]);
        assert_eq!(e.description, "S(3)=P(3)");
        assert_eq!(e.pd, HomDim::Finite(0));

        let b = build(EX2);
        let e = eval_expr(&b, "omega(DA)").unwrap();
        assert_eq!(e.dim_vector, [0, 1, 0, 1, 0]);
        assert_eq!(e.summands.len(), 2);

        let e = eval_expr(&a, "P(3)+P(3)").unwrap();
        assert_eq!(e.description, "S(3)=P(3)^2");
        assert_eq!(e.pd, HomDim::Finite(0));

        let m = evaluate(&a, &parse_expr("tau^-1(tau(S(2)))").unwrap()).unwrap();
        assert!(is_isomorphic(&m, &simple(&a, 1)));
        assert!(eval_expr(&a, "dual(P(1))").unwrap().opposite);
        assert!(matches!(eval_expr(&a, "S(9)"), Err(Error::Expression(_))));
        assert!(matches!(eval_expr(&a, "dual(A) + A"), Err(Error::AlgebraMismatch)));
    }
}
