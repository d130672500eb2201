//! Quivers, path expressions and the textual presentation format.
//!
//! ```text
//! vertices: 1 2
//! arrows: a: 2 -> 1, c: 1 -> 2, l: 2 -> 2
//! relation: c*l
//! relation: l*a
//! relation: l*l + a*c*a*c*a*c     # comment
//! ```
//!
//! A path word `a*b` traverses `a` first and then `b`, so it requires
//! `target(a) = source(b)`. `e_v` is the trivial path at vertex `v`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        let mut names = HashMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if names.insert(name.clone(), ()).is_some() {
                return Err(Error::DuplicateId(name));
            }
            let source = *seen.get(&s).ok_or_else(|| Error::UndeclaredVertex(s.clone()))?;
            let target = *seen.get(&t).ok_or_else(|| Error::UndeclaredVertex(t.clone()))?;
            out.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A path in a quiver: a start vertex and a composable arrow sequence.
///
/// Paths are ordered degree-then-lexicographically (by arrow index), which
/// is the monomial order used by the rewriting system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[allow(clippy::len_without_is_empty)]
impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { start: vertex, end: vertex, arrows: Vec::new() }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Internal("empty arrow list; use Path::trivial".into()));
        };
        for w in arrows.windows(2) {
            if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                let text = arrows.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*");
                return Err(Error::NonComposablePath(text));
            }
        }
        let start = quiver.arrows[first].source;
        let end = quiver.arrows[*arrows.last().unwrap()].target;
        Ok(Path { start, end, arrows })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { start: self.start, end: other.end, arrows })
    }

    /// `self` with the arrows `[from, to)` replaced, used by the rewriting
    /// engine: returns `(prefix, suffix)` around the window.
    pub(crate) fn split_around(&self, from: usize, to: usize, quiver: &Quiver) -> (Path, Path) {
        let prefix = if from == 0 {
            Path::trivial(self.start)
        } else {
            let a = self.arrows[..from].to_vec();
            Path { start: self.start, end: quiver.arrows[a[from - 1]].target, arrows: a }
        };
        let suffix = if to == self.arrows.len() {
            Path::trivial(self.end)
        } else {
            let a = self.arrows[to..].to_vec();
            Path { start: quiver.arrows[a[0]].source, end: self.end, arrows: a }
        };
        (prefix, suffix)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", quiver.vertices[self.start])
        } else {
            self.arrows.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A linear combination of parallel paths with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWordExpr {
    pub terms: Vec<(BigRational, Path)>,
}

impl PathWordExpr {
    pub fn display(&self, quiver: &Quiver) -> String {
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&p.display(quiver));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<PathWordExpr>,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, relations: Vec<PathWordExpr>) -> Result<Self> {
        for r in &relations {
            check_parallel(&quiver, r)?;
        }
        Ok(AlgebraPresentation { quiver, relations })
    }
}

fn check_parallel(quiver: &Quiver, expr: &PathWordExpr) -> Result<()> {
    if let Some((_, first)) = expr.terms.first() {
        if expr.terms.iter().any(|(_, p)| p.start != first.start || p.end != first.end) {
            return Err(Error::NonParallelRelation(expr.display(quiver)));
        }
    }
    Ok(())
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.quiver.vertices.join(" "))?;
        let arrows = self
            .quiver
            .arrows
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]))
            .collect::<Vec<_>>()
            .join(", ");
        if arrows.is_empty() {
            writeln!(f, "arrows:")?;
        } else {
            writeln!(f, "arrows: {arrows}")?;
        }
        for r in &self.relations {
            writeln!(f, "relation: {}", r.display(&self.quiver))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Comma,
    Arrow,
    Plus,
    Minus,
    Star,
    Slash,
    Underscore,
}

struct Lexed {
    line: usize,
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn lex(line_no: usize, line: &str) -> Result<Lexed> {
    let chars: Vec<char> = line.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => i += 1,
            c if c.is_alphanumeric() => {
                let start = i;
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            ':' => {
                toks.push((Tok::Colon, col));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, col));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '_' => {
                toks.push((Tok::Underscore, col));
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    toks.push((Tok::Arrow, col));
                    i += 2;
                } else {
                    toks.push((Tok::Minus, col));
                    i += 1;
                }
            }
            other => return Err(syntax(line_no, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(Lexed { line: line_no, toks, end_col: chars.len() + 1 })
}

struct Cursor<'a> {
    lexed: &'a Lexed,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.lexed.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, off: usize) -> Option<&'a Tok> {
        self.lexed.toks.get(self.pos + off).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.lexed.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.lexed.end_col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        syntax(self.lexed.line, self.col(), msg)
    }

    fn next(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.lexed.toks.len()
    }
}

/// Parses the presentation text format.
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lexed = lex(i + 1, raw)?;
        if !lexed.toks.is_empty() {
            lines.push(lexed);
        }
    }
    let mut iter = lines.iter();
    let last_line = text.lines().count().max(1);

    let vline = iter.next().ok_or_else(|| syntax(last_line, 1, "missing `vertices:` line"))?;
    let mut cur = Cursor { lexed: vline, pos: 0 };
    keyword(&mut cur, "vertices")?;
    let mut vertices = Vec::new();
    while !cur.at_end() {
        vertices.push(cur.ident("vertex id")?);
    }
    if vertices.is_empty() {
        return Err(cur.err("a quiver needs at least one vertex"));
    }

    let aline = iter.next().ok_or_else(|| syntax(last_line, 1, "missing `arrows:` line"))?;
    let mut cur = Cursor { lexed: aline, pos: 0 };
    keyword(&mut cur, "arrows")?;
    let mut arrows = Vec::new();
    while !cur.at_end() {
        let name = cur.ident("arrow id")?;
        cur.expect(Tok::Colon, "`:` after arrow id")?;
        let s = cur.ident("source vertex")?;
        cur.expect(Tok::Arrow, "`->`")?;
        let t = cur.ident("target vertex")?;
        arrows.push((name, s, t));
        if !cur.at_end() {
            cur.expect(Tok::Comma, "`,` between arrows")?;
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;

    let mut relations = Vec::new();
    for l in iter {
        let mut cur = Cursor { lexed: l, pos: 0 };
        keyword(&mut cur, "relation")?;
        let expr = parse_expr(&mut cur, &quiver)?;
        check_parallel(&quiver, &expr)?;
        relations.push(expr);
    }
    Ok(AlgebraPresentation { quiver, relations })
}

fn keyword(cur: &mut Cursor<'_>, kw: &str) -> Result<()> {
    match cur.peek() {
        Some(Tok::Ident(s)) if s == kw => {
            cur.pos += 1;
            cur.expect(Tok::Colon, &format!("`:` after `{kw}`"))
        }
        _ => Err(cur.err(format!("expected `{kw}:`"))),
    }
}

fn parse_expr(cur: &mut Cursor<'_>, quiver: &Quiver) -> Result<PathWordExpr> {
    let mut terms = Vec::new();
    let mut sign = match cur.peek() {
        Some(Tok::Minus) => {
            cur.pos += 1;
            -1
        }
        Some(Tok::Plus) => {
            cur.pos += 1;
            1
        }
        _ => 1,
    };
    loop {
        let (coeff, path) = parse_term(cur, quiver)?;
        let c = if sign < 0 { -coeff } else { coeff };
        terms.push((c, path));
        match cur.next() {
            None => break,
            Some(Tok::Plus) => sign = 1,
            Some(Tok::Minus) => sign = -1,
            Some(_) => {
                cur.pos -= 1;
                return Err(cur.err("expected `+` or `-`"));
            }
        }
    }
    Ok(PathWordExpr { terms })
}

fn is_number(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_digit())
}

fn parse_term(cur: &mut Cursor<'_>, quiver: &Quiver) -> Result<(BigRational, Path)> {
    let mut coeff = BigRational::one();
    if let Some(Tok::Ident(s)) = cur.peek() {
        let next = cur.peek_at(1);
        let numeric = is_number(s)
            && (next == Some(&Tok::Slash) || (next == Some(&Tok::Star) && quiver.arrow_index(s).is_none()));
        if numeric {
            let num: BigInt = s.parse().unwrap();
            cur.pos += 1;
            let den = if cur.peek() == Some(&Tok::Slash) {
                cur.pos += 1;
                let d = cur.ident("denominator")?;
                if !is_number(&d) {
                    cur.pos -= 1;
                    return Err(cur.err("denominator must be a number"));
                }
                let d: BigInt = d.parse().unwrap();
                if d.is_zero() {
                    cur.pos -= 1;
                    return Err(cur.err("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(num, den);
            cur.expect(Tok::Star, "`*` after coefficient")?;
        }
    }
    let mut path: Option<Path> = None;
    loop {
        let piece = parse_path_element(cur, quiver)?;
        path = Some(match path {
            None => piece,
            Some(p) => {
                let joined = p.concat(&piece);
                joined.ok_or_else(|| {
                    Error::NonComposablePath(format!("{}*{}", p.display(quiver), piece.display(quiver)))
                })?
            }
        });
        if cur.peek() == Some(&Tok::Star) {
            cur.pos += 1;
        } else {
            break;
        }
    }
    Ok((coeff, path.unwrap()))
}

fn parse_path_element(cur: &mut Cursor<'_>, quiver: &Quiver) -> Result<Path> {
    let name = cur.ident("arrow id or `e_<vertex>`")?;
    if name == "e" && cur.peek() == Some(&Tok::Underscore) {
        cur.pos += 1;
        let v = cur.ident("vertex id")?;
        let idx = quiver.vertex_index(&v).ok_or(Error::UndeclaredVertex(v))?;
        return Ok(Path::trivial(idx));
    }
    let a = quiver.arrow_index(&name).ok_or(Error::UndeclaredArrow(name))?;
    Path::from_arrows(quiver, vec![a])
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_SRC: &str = "vertices: 1 2\narrows: a: 2 -> 1, c: 1 -> 2, l: 2 -> 2\nrelation: c*l\nrelation: l*a\nrelation: l*l + a*c*a*c*a*c\n";

    #[test]
    fn parses_and_round_trips() {
        let p = parse_presentation(A_SRC).unwrap();
        assert_eq!(p.quiver.vertices().len(), 2);
        assert_eq!(p.quiver.arrows().len(), 3);
        assert_eq!(p.relations.len(), 3);
        assert_eq!(p.to_string(), A_SRC);
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn one_vertex_no_arrows() {
        let p = parse_presentation("vertices: 1\narrows:\n").unwrap();
        assert_eq!(p.quiver.vertices(), ["1".to_string()]);
        assert!(p.quiver.arrows().is_empty());
        assert!(p.relations.is_empty());
    }

    #[test]
    fn coefficients_and_comments() {
        let src =
            "# k[x]/(x^2 - x^3)\nvertices: v\narrows: x: v -> v  # loop\nrelation: -3/2*x*x + 2*x*x*x - e_v*x*x\n";
        let p = parse_presentation(src).unwrap();
        let r = &p.relations[0];
        assert_eq!(r.terms.len(), 3);
        assert_eq!(r.terms[0].0, BigRational::new((-3).into(), 2.into()));
        assert_eq!(r.terms[1].0, BigRational::from_integer(2.into()));
        assert_eq!(r.terms[2].1.len(), 2);
    }

    #[test]
    fn error_cases() {
        let bad = "vertices: 1 2\narrows: a: 2 -> 1, c: 1 -> 2, l: 2 -> 2\nrelation: c + l\n";
        assert!(matches!(parse_presentation(bad), Err(Error::NonParallelRelation(_))));
        let bad = "vertices: 1 2\narrows: a: 2 -> 1\nrelation: a*a\n";
        assert!(matches!(parse_presentation(bad), Err(Error::NonComposablePath(_))));
        let bad = "vertices: 1 2\narrows: a: 2 -> 3\n";
        assert!(matches!(parse_presentation(bad), Err(Error::UndeclaredVertex(v)) if v == "3"));
        let bad = "vertices: 1\narrows: x: 1 -> 1\nrelation: y*x\n";
        assert!(matches!(parse_presentation(bad), Err(Error::UndeclaredArrow(v)) if v == "y"));
        let bad = "vertices: 1\narrows: x: 1 -> 1\nrelation: x * * x\n";
        match parse_presentation(bad) {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 15)),
            other => panic!("unexpected {other:?}"),
        }
        let bad = "vertices: 1 1\narrows:\n";
        assert!(matches!(parse_presentation(bad), Err(Error::DuplicateId(_))));
        assert!(matches!(parse_presentation(""), Err(Error::Syntax { .. })));
    }
}
