//! Line-oriented session language.
//!
//! ```text
//! ring R = char 32003 vars x y z u v mod [x^2+y^5, x*y+u^4, x*z+v^3]
//! ideal m = [x, y, z, u, v]
//! ideal J1 = [y, z]
//! set seed=7
//! length_quotient m^4 J1*m^3
//! ```
//!
//! Ideal expressions combine names and bracketed generator lists with `^`
//! (power), `*` (product), `+` (sum), `&` (intersection) and `:` (colon);
//! `&` and `:` bind loosest and everything is left-associative. Command
//! arguments are separated by whitespace, so an expression must not contain
//! blanks outside brackets. `#` starts a comment.

mod exec;
mod presets;

pub use exec::{emit, execute, ExecOptions, Format, Report};
pub use presets::{ex3_4_lengths, EX3_4_STATED, PRESETS};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{parse_poly, Field, PolyRing};

/// Largest exponent accepted in an ideal expression.
pub const MAX_IDEAL_POWER: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub characteristic: u64,
    pub vars: Vec<String>,
    /// Generators of the ambient ideal, as canonical text.
    pub modulus: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Product,
    Sum,
    Intersect,
    Colon,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Product => '*',
            BinOp::Sum => '+',
            BinOp::Intersect => '&',
            BinOp::Colon => ':',
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Intersect | BinOp::Colon => 1,
            BinOp::Sum => 2,
            BinOp::Product => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    /// Generator list, canonical text of each polynomial.
    List(Vec<String>),
    Power(Box<Expr>, u32),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Name(_) | Expr::List(_) => 5,
            Expr::Power(..) => 4,
            Expr::Bin(op, ..) => op.prec(),
        }
    }

    fn names(&self, out: &mut Vec<String>) {
        match self {
            Expr::Name(n) => out.push(n.clone()),
            Expr::List(_) => {}
            Expr::Power(e, _) => e.names(out),
            Expr::Bin(_, a, b) => {
                a.names(out);
                b.names(out);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => write!(f, "{n}"),
            Expr::List(ps) => write!(f, "[{}]", ps.join(",")),
            Expr::Power(e, k) => {
                if e.prec() < 5 {
                    write!(f, "({e})^{k}")
                } else {
                    write!(f, "{e}^{k}")
                }
            }
            Expr::Bin(op, a, b) => {
                let p = op.prec();
                if a.prec() < p {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                write!(f, "{}", op.symbol())?;
                if b.prec() <= p {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Ideal(Expr),
    Poly(String),
    Word(String),
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Ideal(e) => write!(f, "{e}"),
            Arg::Poly(p) => write!(f, "({p})"),
            Arg::Word(w) => write!(f, "{w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub name: String,
    pub args: Vec<Arg>,
    pub opts: BTreeMap<String, String>,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        for (k, v) in &self.opts {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ideal { name: String, expr: Expr },
    Set { key: String, value: String },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub line: usize,
    pub stmt: Stmt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    pub ring: Option<RingDecl>,
    pub lines: Vec<Line>,
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.ring {
            write!(f, "ring {} = char {} vars {}", r.name, r.characteristic, r.vars.join(" "))?;
            if !r.modulus.is_empty() {
                write!(f, " mod [{}]", r.modulus.join(", "))?;
            }
            writeln!(f)?;
        }
        for l in &self.lines {
            match &l.stmt {
                Stmt::Ideal { name, expr } => writeln!(f, "ideal {name} = {expr}")?,
                Stmt::Set { key, value } => writeln!(f, "set {key}={value}")?,
                Stmt::Command(c) => writeln!(f, "{c}")?,
            }
        }
        Ok(())
    }
}

/// Keys accepted by `set` and as `key=value` command options.
pub const OPTION_KEYS: &[&str] = &[
    "anchor",
    "attempts",
    "cap",
    "d",
    "e0",
    "flag_cap",
    "k",
    "k_cap",
    "m_cap",
    "n",
    "n_cap",
    "seed",
    "sup_window",
    "t",
    "trials",
    "window",
];

/// Argument shape of every command: `I` ideal, `P` polynomial, `W` word,
/// `*` any number of further ideals.
const COMMANDS: &[(&str, &str)] = &[
    ("rr", "I"),
    ("rednum", "II"),
    ("minred", "I"),
    ("superficial", "PI"),
    ("tame", "I"),
    ("vv", "II"),
    ("hilbert", "I"),
    ("wang", "II"),
    ("lemma32", "II"),
    ("audit", "WII"),
    ("colon213", "I*"),
    ("invariance", "I*"),
    ("length_quotient", "II"),
    ("length", "I"),
    ("equal_local", "II"),
    ("repro", "W"),
];

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits on whitespace outside brackets and parentheses.
fn split_top(s: &str, line: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(syntax(line, format!("unbalanced `{c}`")));
                }
            }
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err(syntax(line, "unbalanced brackets"));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Splits a bracketed list body on commas outside parentheses.
fn split_list(body: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for c in body.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out
}

struct ExprParser<'a> {
    src: Vec<char>,
    pos: usize,
    line: usize,
    ring: Option<&'a std::sync::Arc<PolyRing>>,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].iter().copied().find(|c| !c.is_whitespace())
    }

    fn bump(&mut self) -> Option<char> {
        while self.pos < self.src.len() && self.src[self.pos].is_whitespace() {
            self.pos += 1;
        }
        let c = self.src.get(self.pos).copied();
        self.pos += 1;
        c
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.sum()?;
        while let Some(c @ ('&' | ':')) = self.peek() {
            self.bump();
            let op = if c == '&' { BinOp::Intersect } else { BinOp::Colon };
            acc = Expr::Bin(op, Box::new(acc), Box::new(self.sum()?));
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        while self.peek() == Some('+') {
            self.bump();
            acc = Expr::Bin(BinOp::Sum, Box::new(acc), Box::new(self.product()?));
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = Expr::Bin(BinOp::Product, Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr> {
        let mut base = self.atom()?;
        while self.peek() == Some('^') {
            self.bump();
            let mut digits = String::new();
            while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
                self.bump();
                digits.push(c);
            }
            let k: u32 = digits.parse().map_err(|_| syntax(self.line, "expected an exponent after `^`"))?;
            if k > MAX_IDEAL_POWER {
                return Err(syntax(self.line, format!("ideal exponent {k} above {MAX_IDEAL_POWER}")));
            }
            base = Expr::Power(Box::new(base), k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some('(') => {
                let e = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(syntax(self.line, "expected `)`"));
                }
                Ok(e)
            }
            Some('[') => {
                let start = self.pos;
                let mut depth = 1;
                while self.pos < self.src.len() {
                    match self.src[self.pos] {
                        '[' => depth += 1,
                        ']' => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    self.pos += 1;
                }
                if self.pos >= self.src.len() {
                    return Err(syntax(self.line, "missing `]`"));
                }
                let body: String = self.src[start..self.pos].iter().collect();
                self.pos += 1;
                let ring = self.ring.ok_or_else(|| syntax(self.line, "generator list before any ring"))?;
                let polys = parse_poly_list(&body, ring, self.line)?;
                Ok(Expr::List(polys))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::from(c);
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == '_')
                {
                    name.push(self.src[self.pos]);
                    self.pos += 1;
                }
                Ok(Expr::Name(name))
            }
            Some(c) => Err(syntax(self.line, format!("unexpected `{c}` in ideal expression"))),
            None => Err(syntax(self.line, "unexpected end of ideal expression")),
        }
    }
}

fn parse_poly_list(body: &str, ring: &std::sync::Arc<PolyRing>, line: usize) -> Result<Vec<String>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_list(body)
        .iter()
        .map(|s| parse_poly(s, ring).map(|p| p.to_string()).map_err(|e| syntax(line, e.to_string())))
        .collect()
}

fn parse_expr(src: &str, line: usize, ring: Option<&std::sync::Arc<PolyRing>>) -> Result<Expr> {
    let mut p = ExprParser { src: src.chars().collect(), pos: 0, line, ring };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(line, format!("trailing input in `{src}`")));
    }
    Ok(e)
}

fn parse_ring(rest: &str, line: usize) -> Result<RingDecl> {
    let (head, modulus) = match rest.find(" mod ") {
        Some(k) => (&rest[..k], Some(rest[k + 5..].trim())),
        None => (rest, None),
    };
    let toks: Vec<&str> = head.split_whitespace().collect();
    let bad = || syntax(line, "expected `ring NAME = char INT vars IDENT+ [mod [POLY, ...]]`");
    if toks.len() < 6 || toks[1] != "=" || toks[2] != "char" || toks[4] != "vars" || !is_ident(toks[0]) {
        return Err(bad());
    }
    let characteristic: u64 = toks[3].parse().map_err(|_| bad())?;
    let field = Field::from_characteristic(characteristic).map_err(|e| syntax(line, e.to_string()))?;
    let vars: Vec<String> = toks[5..].iter().map(|s| s.to_string()).collect();
    if let Some(v) = vars.iter().find(|v| !is_ident(v)) {
        return Err(syntax(line, format!("bad variable name `{v}`")));
    }
    let ring = PolyRing::new(&vars, field).map_err(|e| syntax(line, e.to_string()))?;
    let modulus = match modulus {
        None => Vec::new(),
        Some(m) => {
            let body = m
                .strip_prefix('[')
                .and_then(|m| m.strip_suffix(']'))
                .ok_or_else(|| syntax(line, "expected `mod [POLY, ...]`"))?;
            parse_poly_list(body, &ring, line)?
        }
    };
    for g in &modulus {
        let p = parse_poly(g, &ring).map_err(|e| syntax(line, e.to_string()))?;
        if !p.constant_term().is_zero() {
            return Err(syntax(line, format!("modulus generator `{g}` has a nonzero constant term")));
        }
    }
    Ok(RingDecl { name: toks[0].to_string(), characteristic, vars, modulus })
}

fn parse_kv(tok: &str, line: usize) -> Result<(String, String)> {
    let (k, v) = tok.split_once('=').ok_or_else(|| syntax(line, format!("expected key=value, got `{tok}`")))?;
    if !OPTION_KEYS.contains(&k) {
        return Err(syntax(line, format!("unknown option `{k}`")));
    }
    if v.is_empty() || !v.chars().all(|c| c.is_ascii_digit()) || v.len() > 19 {
        return Err(syntax(line, format!("option `{k}` needs a non-negative integer")));
    }
    Ok((k.to_string(), v.to_string()))
}

/// Parses and validates a session; the first error carries its line number.
pub fn parse_session(src: &str) -> Result<Session> {
    let mut session = Session::default();
    let mut ring: Option<std::sync::Arc<PolyRing>> = None;
    let mut bound: BTreeSet<String> = BTreeSet::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (word, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match word {
            "ring" => {
                if session.ring.is_some() {
                    return Err(Error::DuplicateRing { line });
                }
                let decl = parse_ring(rest, line)?;
                let field = Field::from_characteristic(decl.characteristic).expect("validated");
                ring = Some(PolyRing::new(&decl.vars, field).expect("validated"));
                session.ring = Some(decl);
            }
            "ideal" => {
                let (name, expr) = rest.split_once('=').ok_or_else(|| syntax(line, "expected `ideal NAME = EXPR`"))?;
                let name = name.trim();
                if !is_ident(name) {
                    return Err(syntax(line, format!("bad ideal name `{name}`")));
                }
                let r = ring.as_ref().ok_or_else(|| syntax(line, "ideal before any ring"))?;
                let expr = parse_expr(expr.trim(), line, Some(r))?;
                check_bound(&expr, &bound, line)?;
                bound.insert(name.to_string());
                session.lines.push(Line { line, stmt: Stmt::Ideal { name: name.to_string(), expr } });
            }
            "set" => {
                let toks = split_top(rest, line)?;
                if toks.is_empty() {
                    return Err(syntax(line, "expected `set key=value`"));
                }
                for t in toks {
                    let (key, value) = parse_kv(&t, line)?;
                    session.lines.push(Line { line, stmt: Stmt::Set { key, value } });
                }
            }
            _ => {
                let cmd = parse_command(word, rest, line, ring.as_ref(), &bound)?;
                session.lines.push(Line { line, stmt: Stmt::Command(cmd) });
            }
        }
    }
    Ok(session)
}

fn check_bound(e: &Expr, bound: &BTreeSet<String>, line: usize) -> Result<()> {
    let mut names = Vec::new();
    e.names(&mut names);
    match names.into_iter().find(|n| !bound.contains(n)) {
        Some(name) => Err(Error::UnboundName { line, name }),
        None => Ok(()),
    }
}

fn parse_command(
    word: &str,
    rest: &str,
    line: usize,
    ring: Option<&std::sync::Arc<PolyRing>>,
    bound: &BTreeSet<String>,
) -> Result<Command> {
    let shape = COMMANDS
        .iter()
        .find(|(n, _)| *n == word)
        .map(|(_, s)| *s)
        .ok_or_else(|| syntax(line, format!("unknown command `{word}`")))?;
    let mut positional = Vec::new();
    let mut opts = BTreeMap::new();
    for t in split_top(rest, line)? {
        if t.contains('=') && !t.starts_with('[') && !t.starts_with('(') {
            let (k, v) = parse_kv(&t, line)?;
            opts.insert(k, v);
        } else {
            positional.push(t);
        }
    }
    let kinds: Vec<char> = shape.chars().filter(|&c| c != '*').collect();
    let variadic = shape.ends_with('*');
    if positional.len() < kinds.len() || (!variadic && positional.len() > kinds.len()) {
        return Err(syntax(line, format!("`{word}` expects arguments {shape}")));
    }
    let mut args = Vec::new();
    for (k, tok) in positional.iter().enumerate() {
        let kind = kinds.get(k).copied().unwrap_or('I');
        let arg = match kind {
            'W' => {
                if !is_ident(tok) && !tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '.' || c == '_') {
                    return Err(syntax(line, format!("bad word `{tok}`")));
                }
                Arg::Word(tok.clone())
            }
            'P' => {
                let r = ring.ok_or_else(|| syntax(line, "polynomial before any ring"))?;
                let p = parse_poly(tok, r).map_err(|e| syntax(line, e.to_string()))?;
                Arg::Poly(p.to_string())
            }
            _ => {
                if ring.is_none() {
                    return Err(syntax(line, "ideal argument before any ring"));
                }
                let e = parse_expr(tok, line, ring)?;
                check_bound(&e, bound, line)?;
                Arg::Ideal(e)
            }
        };
        args.push(arg);
    }
    Ok(Command { name: word.to_string(), args, opts })
}

#[cfg(test)]
mod tests;
