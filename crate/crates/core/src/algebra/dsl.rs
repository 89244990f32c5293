//! Text format for bound quiver presentations.
//!
//! ```text
//! field gf(32003);
//! vertices 1 2 3;
//! arrows a:1->2 b:2->3;
//! relations a*b;
//! ```
//!
//! The `field` header and the `relations` section are optional; `#` starts a
//! comment. [`print_presentation`] emits exactly this layout, so printing a
//! parsed presentation and parsing it again is the identity.

use super::quiver::{PathWord, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Semi,
    Colon,
    Arrow,
    Star,
    Plus,
    Minus,
    Comma,
    LParen,
    RParen,
    Slash,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let push = |tok, out: &mut Vec<Spanned>| {
                out.push(Spanned {
                    tok,
                    line: ln + 1,
                    column,
                })
            };
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '_') {
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    push(Tok::Ident(chars[start..i].iter().collect()), &mut out);
                } else {
                    push(Tok::Number(chars[start..i].iter().collect()), &mut out);
                }
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                push(Tok::Ident(chars[start..i].iter().collect()), &mut out);
                continue;
            }
            let tok = match c {
                ';' => Tok::Semi,
                ':' => Tok::Colon,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                ',' => Tok::Comma,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '/' => Tok::Slash,
                '-' if chars.get(i + 1) == Some(&'>') => {
                    i += 1;
                    Tok::Arrow
                }
                '-' => Tok::Minus,
                _ => return Err(syntax(ln + 1, column, format!("unexpected character `{c}`"))),
            };
            push(tok, &mut out);
            i += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |s| (s.line, s.column))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.here();
        syntax(l, c, msg)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.peek().cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn id(&mut self, what: &str) -> Result<String> {
        match self.next() {
            Some(Tok::Ident(s)) | Some(Tok::Number(s)) => Ok(s),
            _ => {
                self.pos -= 1;
                Err(self.err(format!("expected {what}")))
            }
        }
    }

    /// `;` or end of input (the final terminator is optional).
    fn terminator(&mut self) -> Result<()> {
        match self.peek() {
            Some(Tok::Semi) => {
                self.pos += 1;
                Ok(())
            }
            None => Ok(()),
            _ => Err(self.err("expected `;`")),
        }
    }
}

/// Parses the presentation DSL. The field defaults to GF(32003).
pub fn parse_algebra(text: &str) -> Result<Presentation> {
    let toks = tokenize(text)?;
    let last_line = text.lines().count().max(1);
    let last_col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
    let mut p = Parser {
        toks,
        pos: 0,
        end: (last_line, last_col),
    };

    let mut field = FieldSpec::default();
    if p.keyword("field") {
        field = parse_field(&mut p)?;
        p.expect(Tok::Semi, "`;` after field")?;
    }

    if !p.keyword("vertices") {
        return Err(p.err("expected `vertices`"));
    }
    let mut vertices = Vec::new();
    while !matches!(p.peek(), Some(Tok::Semi) | None) {
        vertices.push(p.id("vertex id")?);
    }
    if vertices.is_empty() {
        return Err(p.err("at least one vertex is required"));
    }
    p.expect(Tok::Semi, "`;` after vertices")?;

    let mut arrows = Vec::new();
    if p.keyword("arrows") {
        while matches!(p.peek(), Some(Tok::Ident(_))) {
            let (line, column) = p.here();
            let name = p.id("arrow name")?;
            if name == "relations" {
                return Err(syntax(line, column, "expected `;` after arrows"));
            }
            p.expect(Tok::Colon, "`:`")?;
            let s = p.id("source vertex")?;
            p.expect(Tok::Arrow, "`->`")?;
            let t = p.id("target vertex")?;
            if !vertices.contains(&s) {
                return Err(Error::UnknownVertex(s));
            }
            if !vertices.contains(&t) {
                return Err(Error::UnknownVertex(t));
            }
            arrows.push((name, s, t));
        }
        p.terminator()?;
    }
    let quiver = Quiver::new(vertices, arrows)?;

    let mut relations = Vec::new();
    if p.keyword("relations") {
        loop {
            relations.push(parse_relation(&mut p, &quiver, field)?);
            if p.peek() == Some(&Tok::Comma) {
                p.pos += 1;
                continue;
            }
            break;
        }
        p.terminator()?;
    }
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Presentation::new(quiver, relations, field)
}

fn parse_field(p: &mut Parser) -> Result<FieldSpec> {
    if p.keyword("rationals") {
        return Ok(FieldSpec::Rationals);
    }
    let (line, column) = p.here();
    if !p.keyword("gf") {
        return Err(p.err("expected `gf(p)` or `rationals`"));
    }
    p.expect(Tok::LParen, "`(`")?;
    let n = match p.next() {
        Some(Tok::Number(n)) => n,
        _ => return Err(syntax(line, column, "expected a prime in gf(...)")),
    };
    p.expect(Tok::RParen, "`)`")?;
    let prime: u64 = n
        .parse()
        .map_err(|_| syntax(line, column, format!("bad characteristic `{n}`")))?;
    FieldSpec::prime(prime).map_err(|e| syntax(line, column, e.to_string()))
}

fn parse_coefficient(p: &mut Parser, field: FieldSpec) -> Result<Option<Scalar>> {
    let Some(Tok::Number(n)) = p.peek().cloned() else {
        return Ok(None);
    };
    p.pos += 1;
    let mut text = n;
    if p.peek() == Some(&Tok::Slash) {
        p.pos += 1;
        match p.next() {
            Some(Tok::Number(d)) => text = format!("{text}/{d}"),
            _ => {
                p.pos -= 1;
                return Err(p.err("expected denominator"));
            }
        }
    }
    p.expect(Tok::Star, "`*` after coefficient")?;
    let c = field.parse_scalar(&text).map_err(|e| p.err(e.to_string()))?;
    Ok(Some(c))
}

fn parse_term(p: &mut Parser, q: &Quiver, field: FieldSpec, negate: bool) -> Result<(Scalar, PathWord)> {
    let mut coeff = parse_coefficient(p, field)?.unwrap_or_else(|| field.one());
    if negate {
        coeff = field.neg(&coeff);
    }
    let mut word = Vec::new();
    loop {
        let (line, column) = p.here();
        let name = match p.next() {
            Some(Tok::Ident(s)) => s,
            _ => return Err(syntax(line, column, "expected arrow name")),
        };
        let a = q.arrow_index(&name).ok_or_else(|| Error::UnknownArrow(name.clone()))?;
        word.push(a);
        if p.peek() == Some(&Tok::Star) {
            p.pos += 1;
        } else {
            break;
        }
    }
    Ok((coeff, PathWord::from_arrows(q, &word)?))
}

fn parse_relation(p: &mut Parser, q: &Quiver, field: FieldSpec) -> Result<Relation> {
    let mut negate = false;
    if p.peek() == Some(&Tok::Minus) {
        p.pos += 1;
        negate = true;
    }
    let mut terms = vec![parse_term(p, q, field, negate)?];
    loop {
        let neg = match p.peek() {
            Some(Tok::Plus) => false,
            Some(Tok::Minus) => true,
            _ => break,
        };
        p.pos += 1;
        terms.push(parse_term(p, q, field, neg)?);
    }
    // merge repeated paths
    let mut merged: Vec<(Scalar, PathWord)> = Vec::new();
    for (c, w) in terms {
        if let Some(slot) = merged.iter_mut().find(|(_, v)| *v == w) {
            slot.0 = field.add(&slot.0, &c);
        } else {
            merged.push((c, w));
        }
    }
    merged.retain(|(c, _)| !c.is_zero());
    if merged.is_empty() {
        return Err(p.err("relation is identically zero"));
    }
    let rel = Relation { terms: merged };
    rel.validate(q)?;
    Ok(rel)
}

fn print_term(field: FieldSpec, q: &Quiver, c: &Scalar, w: &PathWord, first: bool) -> String {
    let printed = field.format(c);
    let (neg, mag) = match printed.strip_prefix('-') {
        Some(m) => (true, m.to_string()),
        None => (false, printed),
    };
    let word = w.display(q);
    let body = if mag == "1" { word } else { format!("{mag}*{word}") };
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

pub fn print_relation(field: FieldSpec, q: &Quiver, r: &Relation) -> String {
    r.terms
        .iter()
        .enumerate()
        .map(|(i, (c, w))| print_term(field, q, c, w, i == 0))
        .collect()
}

/// Canonical text of a presentation.
pub fn print_presentation(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut out = format!("field {};\n", p.field);
    out.push_str(&format!("vertices {};\n", q.vertices().join(" ")));
    if q.arrows().is_empty() {
        out.push_str("arrows;\n");
    } else {
        let arrows: Vec<String> = q
            .arrows()
            .iter()
            .map(|a| format!("{}:{}->{}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
            .collect();
        out.push_str(&format!("arrows {};\n", arrows.join(" ")));
    }
    if !p.relations.is_empty() {
        let rels: Vec<String> = p
            .relations
            .iter()
            .map(|r| print_relation(p.field, q, r))
            .collect();
        out.push_str(&format!("relations {};\n", rels.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_one() {
        let p = parse_algebra("vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b").unwrap();
        assert_eq!(p.quiver.vertex_count(), 3);
        assert_eq!(p.quiver.arrows().len(), 2);
        assert_eq!(p.relations.len(), 1);
        assert!(p.relations[0].is_monomial());
        assert_eq!(p.field, FieldSpec::Prime(32003));
    }

    #[test]
    fn parses_loop_algebra() {
        let p = parse_algebra("vertices 1; arrows x:1->1; relations x*x").unwrap();
        assert_eq!(p.relations[0].terms[0].1.len(), 2);
    }

    #[test]
    fn rejects_non_parallel_terms() {
        let err = parse_algebra(
            "vertices 1 2 3 4; arrows a:1->2 b:2->3 c:1->4 d:4->4; relations a*b - 2*c*d",
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonParallel(_)), "{err}");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_algebra("vertices 1 2;\narrows a:1=>2;").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 11)),
            other => panic!("unexpected {other}"),
        }
        assert!(matches!(
            parse_algebra("vertices 1; arrows a:1->2;").unwrap_err(),
            Error::UnknownVertex(_)
        ));
        assert!(matches!(
            parse_algebra("vertices 1; arrows a:1->1; relations a*b;").unwrap_err(),
            Error::UnknownArrow(_)
        ));
        assert!(matches!(
            parse_algebra("vertices 1 2; arrows a:1->2; relations a;").unwrap_err(),
            Error::NonAdmissible(_)
        ));
    }

    #[test]
    fn printer_round_trip() {
        let text = "# commutative square\nfield rationals;\nvertices 1 2 3 4;\narrows a:1->2 b:2->4 c:1->3 d:3->4;\nrelations a*b - 1/2*c*d;\n";
        let p = parse_algebra(text).unwrap();
        let printed = print_presentation(&p);
        assert_eq!(
            printed,
            "field rationals;\nvertices 1 2 3 4;\narrows a:1->2 b:2->4 c:1->3 d:3->4;\nrelations a*b - 1/2*c*d;\n"
        );
        assert_eq!(parse_algebra(&printed).unwrap(), p);
        let k = parse_algebra("vertices 1;").unwrap();
        assert_eq!(parse_algebra(&print_presentation(&k)).unwrap(), k);
    }
}
