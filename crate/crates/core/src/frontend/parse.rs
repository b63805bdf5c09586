//! Text format for graded quivers with superpotential.
//!
//! ```text
//! # the worked example
//! vertex 1; vertex 2; vertex 3;
//! arrow a : 1 -> 2 deg -1;
//! arrow b : 3 -> 1 deg 0;
//! arrow c : 2 -> 3 deg 0;
//! n = 4;
//! potential = 1 a b c;
//! ```
//!
//! Statements end with `;` and may span lines; `#` starts a comment. Words in
//! the potential are read right to left (`a b c` applies `c` first) unless
//! the document is parsed in diagrammatic mode.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::gqa::{format_rational, ArrowSpec, Coeff, GradedQuiver, Path, QuiverError};
use crate::potential::{Potential, PotentialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParseOptions {
    /// Read potential words left to right (first letter acts first).
    pub diagrammatic: bool,
}

/// One potential term: coefficient and arrow names in written
/// (right-to-left) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialTerm {
    pub coefficient: Coeff,
    pub word: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    pub n: i64,
    pub potential: Vec<PotentialTerm>,
    pub options: BTreeMap<String, i64>,
}

impl InputDocument {
    pub fn quiver(&self) -> Result<GradedQuiver, QuiverError> {
        GradedQuiver::new(self.vertices.iter().cloned(), self.arrows.iter().cloned())
    }

    /// The potential as a cyclic combination. Fails on words that are not
    /// cycles or when `n < 3`.
    pub fn potential(&self, q: &GradedQuiver) -> Result<Potential, PotentialError> {
        let mut w = Potential::zero(self.n)?;
        for t in &self.potential {
            let names: Vec<&str> = t.word.iter().map(String::as_str).collect();
            let path = q
                .path_by_names(&names)
                .ok_or_else(|| PotentialError::NotACycle(t.word.join(" ")))?;
            w.add_term(q, t.coefficient.clone(), &path)?;
        }
        Ok(w)
    }

    /// The raw potential words as paths, before cyclic folding.
    pub fn potential_paths(&self, q: &GradedQuiver) -> Vec<(Coeff, Path)> {
        self.potential
            .iter()
            .filter_map(|t| {
                let names: Vec<&str> = t.word.iter().map(String::as_str).collect();
                q.path_by_names(&names).map(|p| (t.coefficient.clone(), p))
            })
            .collect()
    }
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {v};")?;
        }
        for a in &self.arrows {
            writeln!(f, "arrow {} : {} -> {} deg {};", a.name, a.source, a.target, a.degree)?;
        }
        writeln!(f, "n = {};", self.n)?;
        if !self.potential.is_empty() {
            write!(f, "potential =")?;
            for (i, t) in self.potential.iter().enumerate() {
                let neg = t.coefficient.is_negative();
                if i > 0 {
                    write!(f, " {}", if neg { "-" } else { "+" })?;
                }
                let c = if i > 0 { t.coefficient.abs() } else { t.coefficient.clone() };
                write!(f, " {} {}", format_rational(&c), t.word.join(" "))?;
            }
            writeln!(f, ";")?;
        }
        for (k, v) in &self.options {
            writeln!(f, "option {k} = {v};")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Colon,
    Arrow,
    Semi,
    Eq,
    Plus,
    Minus,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Pos,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '\'' | '/')
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut k = 0;
        while k < chars.len() {
            let c = chars[k];
            let pos = Pos {
                line: li + 1,
                column: k + 1,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                k += 1;
                continue;
            }
            let tok = match c {
                ':' => Tok::Colon,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '+' => Tok::Plus,
                '-' if chars.get(k + 1) == Some(&'>') => {
                    k += 1;
                    Tok::Arrow
                }
                '-' => Tok::Minus,
                c if is_word_char(c) => {
                    let start = k;
                    while k + 1 < chars.len() && is_word_char(chars[k + 1]) {
                        k += 1;
                    }
                    Tok::Word(chars[start..=k].iter().collect())
                }
                other => return Err(pos.error(format!("unexpected character `{other}`"))),
            };
            out.push(Token { tok, pos });
            k += 1;
        }
    }
    Ok(out)
}

fn parse_int(s: &str, pos: Pos) -> Result<i64, ParseError> {
    s.parse::<i64>().map_err(|_| pos.error(format!("expected an integer, found `{s}`")))
}

fn parse_rational(s: &str, pos: Pos) -> Result<Coeff, ParseError> {
    let bad = || pos.error(format!("expected a rational number, found `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(pos.error("zero denominator"));
    }
    Ok(Coeff::new(num, den))
}

fn looks_numeric(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_digit())
}

fn check_identifier(s: &str, pos: Pos) -> Result<(), ParseError> {
    if s.contains('/') {
        return Err(pos.error(format!("`{s}` is not a valid identifier")));
    }
    Ok(())
}

struct Parser<'t> {
    toks: &'t [Token],
    at: usize,
    end: Pos,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.toks.get(self.at)
    }

    fn pos(&self) -> Pos {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn next(&mut self) -> Option<&'t Token> {
        let t = self.toks.get(self.at);
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Pos, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(t) if t.tok == want => Ok(t.pos),
            Some(t) => Err(t.pos.error(format!("expected {what}, found {}", describe(&t.tok)))),
            None => Err(pos.error(format!("expected {what}, found end of input"))),
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Token { tok: Tok::Word(w), pos }) => Ok((w.clone(), *pos)),
            Some(t) => Err(t.pos.error(format!("expected {what}, found {}", describe(&t.tok)))),
            None => Err(pos.error(format!("expected {what}, found end of input"))),
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = matches!(self.peek(), Some(Token { tok: Tok::Minus, .. }));
        if negative {
            self.next();
        }
        let (w, pos) = self.word("an integer")?;
        let v = parse_int(&w, pos)?;
        Ok(if negative { -v } else { v })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Word(w) => format!("`{w}`"),
        Tok::Colon => "`:`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::Semi => "`;`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
    }
}

pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    parse_with(text, ParseOptions::default())
}

pub fn parse_with(text: &str, options: ParseOptions) -> Result<InputDocument, ParseError> {
    let toks = lex(text)?;
    let line_count = text.lines().count().max(1);
    let end = Pos {
        line: line_count,
        column: text.lines().last().map_or(0, |l| l.chars().count()) + 1,
    };
    let mut p = Parser { toks: &toks, at: 0, end };

    let mut vertices: Vec<(String, Pos)> = Vec::new();
    let mut arrows: Vec<(ArrowSpec, Pos)> = Vec::new();
    let mut n: Option<i64> = None;
    let mut raw_terms: Vec<(Coeff, Vec<(String, Pos)>, Pos)> = Vec::new();
    let mut saw_potential = false;
    let mut opts = BTreeMap::new();

    while let Some(tok) = p.peek() {
        let start = tok.pos;
        let keyword = match &tok.tok {
            Tok::Word(w) => w.clone(),
            other => return Err(start.error(format!("expected a statement, found {}", describe(other)))),
        };
        p.next();
        match keyword.as_str() {
            "vertex" => {
                let (v, pos) = p.word("a vertex name")?;
                check_identifier(&v, pos)?;
                vertices.push((v, pos));
            }
            "arrow" => {
                let (name, pos) = p.word("an arrow name")?;
                check_identifier(&name, pos)?;
                if looks_numeric(&name) {
                    return Err(pos.error(format!("arrow name `{name}` must not start with a digit")));
                }
                p.expect(Tok::Colon, "`:`")?;
                let (source, _) = p.word("a source vertex")?;
                p.expect(Tok::Arrow, "`->`")?;
                let (target, _) = p.word("a target vertex")?;
                let (kw, kpos) = p.word("`deg`")?;
                if kw != "deg" {
                    return Err(kpos.error(format!("expected `deg`, found `{kw}`")));
                }
                let degree = p.signed_int()?;
                arrows.push((
                    ArrowSpec {
                        name,
                        source,
                        target,
                        degree,
                    },
                    pos,
                ));
            }
            "n" => {
                p.expect(Tok::Eq, "`=`")?;
                if n.is_some() {
                    return Err(start.error("`n` is set twice"));
                }
                n = Some(p.signed_int()?);
            }
            "potential" => {
                p.expect(Tok::Eq, "`=`")?;
                if saw_potential {
                    return Err(start.error("`potential` is set twice"));
                }
                saw_potential = true;
                raw_terms = parse_terms(&mut p)?;
            }
            "option" => {
                let (key, _) = p.word("an option name")?;
                p.expect(Tok::Eq, "`=`")?;
                let v = p.signed_int()?;
                opts.insert(key, v);
            }
            other => return Err(start.error(format!("unknown statement `{other}`"))),
        }
        p.expect(Tok::Semi, "`;`")?;
    }

    let n = n.ok_or_else(|| Pos { line: 1, column: 1 }.error("missing `n = <int>;`"))?;

    // quiver validation with positions
    let mut seen = std::collections::HashMap::new();
    for (v, pos) in &vertices {
        if seen.insert(v.clone(), *pos).is_some() {
            return Err(pos.error(format!("duplicate vertex `{v}`")));
        }
    }
    let mut arrow_seen = std::collections::HashMap::new();
    for (a, pos) in &arrows {
        if seen.contains_key(&a.name) {
            return Err(pos.error(format!("arrow `{}` has the same name as a vertex", a.name)));
        }
        if arrow_seen.insert(a.name.clone(), a.clone()).is_some() {
            return Err(pos.error(format!("duplicate arrow `{}`", a.name)));
        }
        for v in [&a.source, &a.target] {
            if !seen.contains_key(v) {
                return Err(pos.error(format!("arrow `{}` uses undeclared vertex `{v}`", a.name)));
            }
        }
    }
    let quiver = GradedQuiver::new(
        vertices.iter().map(|(v, _)| v.clone()),
        arrows.iter().map(|(a, _)| a.clone()),
    )
    .map_err(|e| {
        let pos = arrows.first().map_or(Pos { line: 1, column: 1 }, |(_, p)| *p);
        pos.error(e.to_string())
    })?;

    let mut potential = Vec::new();
    for (coefficient, mut word, wpos) in raw_terms {
        if options.diagrammatic {
            word.reverse();
        }
        for (name, pos) in &word {
            if quiver.arrow_id(name).is_none() {
                return Err(pos.error(format!("unknown arrow `{name}`")));
            }
        }
        let names: Vec<&str> = word.iter().map(|(s, _)| s.as_str()).collect();
        if quiver.path_by_names(&names).is_none() {
            let bad = names
                .windows(2)
                .position(|w| {
                    let (l, r) = (quiver.arrow_id(w[0]).unwrap(), quiver.arrow_id(w[1]).unwrap());
                    quiver.arrow(l).source != quiver.arrow(r).target
                })
                .unwrap_or(0);
            return Err(wpos.error(format!(
                "arrows `{}` and `{}` do not compose: `{}` ends at `{}` but `{}` starts at `{}`",
                names[bad],
                names[bad + 1],
                names[bad + 1],
                quiver.vertex_name(quiver.arrow(quiver.arrow_id(names[bad + 1]).unwrap()).target),
                names[bad],
                quiver.vertex_name(quiver.arrow(quiver.arrow_id(names[bad]).unwrap()).source),
            )));
        }
        potential.push(PotentialTerm {
            coefficient,
            word: word.into_iter().map(|(s, _)| s).collect(),
        });
    }

    Ok(InputDocument {
        vertices: vertices.into_iter().map(|(v, _)| v).collect(),
        arrows: arrows.into_iter().map(|(a, _)| a).collect(),
        n,
        potential,
        options: opts,
    })
}

type RawTerm = (Coeff, Vec<(String, Pos)>, Pos);

fn parse_terms(p: &mut Parser<'_>) -> Result<Vec<RawTerm>, ParseError> {
    let mut terms = Vec::new();
    let mut negate = false;
    if matches!(p.peek(), Some(Token { tok: Tok::Minus, .. })) {
        p.next();
        negate = true;
    }
    loop {
        let mut coefficient = Coeff::one();
        if let Some(Token { tok: Tok::Word(w), pos }) = p.peek() {
            if looks_numeric(w) {
                coefficient = parse_rational(w, *pos)?;
                p.next();
            }
        }
        if negate {
            coefficient = -coefficient;
        }
        let wpos = p.pos();
        let mut word = Vec::new();
        while let Some(Token { tok: Tok::Word(w), pos }) = p.peek() {
            if looks_numeric(w) {
                return Err(pos.error(format!("expected an arrow name, found `{w}`")));
            }
            word.push((w.clone(), *pos));
            p.next();
        }
        if word.is_empty() {
            // `potential = 0;` is the zero potential
            if coefficient.is_zero() && terms.is_empty() {
                return Ok(terms);
            }
            return Err(wpos.error("expected an arrow word"));
        }
        if !coefficient.is_zero() {
            terms.push((coefficient, word, wpos));
        }
        match p.peek() {
            Some(Token { tok: Tok::Plus, .. }) => negate = false,
            Some(Token { tok: Tok::Minus, .. }) => negate = true,
            _ => break,
        }
        p.next();
    }
    Ok(terms)
}
