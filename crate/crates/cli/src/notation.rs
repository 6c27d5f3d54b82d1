//! Text notation for tangles, knots, twist words and equations.
//!
//! ```text
//! fraction  := int | int "/" int | "inf"
//! tangle    := term ("+" term)*
//! term      := [uint] atom
//! atom      := "T(" fraction ")" | "M(" fraction ("," fraction)+ ")" | VAR
//! knot      := katom ("#" katom)*
//! katom     := "b(" int "," int ")" | "N(" tangle ")" | uint "-crossing" | NAME
//! word      := letter (" " letter)*      letter := ("h" | "v") ["^" int] | "r"
//! equation  := "N(" tangle ")" "=" knot
//! binding   := VAR "=" tangle
//! ```

use std::fmt;

use tangles::{ExtendedRational, Move, TwistWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Semantic,
}

/// A parse failure at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn syntax(offset: usize, message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Syntax, offset, message: message.into() }
    }

    fn semantic(offset: usize, message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Semantic, offset, message: message.into() }
    }

    /// The message with the offending input underlined.
    pub fn render(&self, src: &str) -> String {
        let col = src[..self.offset.min(src.len())].chars().count();
        format!("{self}\n  {src}\n  {}^", " ".repeat(col))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Semantic => "invalid value",
        };
        write!(f, "{kind} at column {}: {}", self.offset + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TangleAtom {
    Rational(ExtendedRational),
    Montesinos(Vec<ExtendedRational>),
    Var(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleTerm {
    pub coeff: u32,
    pub atom: TangleAtom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleExpr(pub Vec<TangleTerm>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotAtom {
    /// `b(p,q)` as written, not normalized.
    Schubert(i64, i64),
    Closure(TangleExpr),
    CrossingNumber(u64),
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotExpr(pub Vec<KnotAtom>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    /// The tangle inside `N(...)` on the left.
    pub lhs: TangleExpr,
    pub rhs: KnotExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Equation(Equation),
    Binding(String, TangleExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Notation {
    Tangle(TangleExpr),
    Knot(KnotExpr),
    Word(TwistWord),
    Equation(Equation),
}

fn fmt_fraction(x: &ExtendedRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{x}")
}

impl fmt::Display for TangleAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleAtom::Rational(x) => {
                f.write_str("T(")?;
                fmt_fraction(x, f)?;
                f.write_str(")")
            }
            TangleAtom::Montesinos(xs) => {
                f.write_str("M(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    fmt_fraction(x, f)?;
                }
                f.write_str(")")
            }
            TangleAtom::Var(v) => f.write_str(v),
        }
    }
}

impl fmt::Display for TangleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff != 1 {
            write!(f, "{}", self.coeff)?;
        }
        write!(f, "{}", self.atom)
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for KnotAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotAtom::Schubert(p, q) => write!(f, "b({p},{q})"),
            KnotAtom::Closure(t) => write!(f, "N({t})"),
            KnotAtom::CrossingNumber(c) => write!(f, "{c}-crossing"),
            KnotAtom::Named(n) => f.write_str(n),
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("#")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N({})={}", self.lhs, self.rhs)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Equation(e) => write!(f, "{e}"),
            Statement::Binding(v, t) => write!(f, "{v}={t}"),
        }
    }
}

impl fmt::Display for Notation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Notation::Tangle(t) => write!(f, "{t}"),
            Notation::Knot(k) => write!(f, "{k}"),
            Notation::Word(w) => write!(f, "{w}"),
            Notation::Equation(e) => write!(f, "{e}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => ParseError::syntax(self.pos, format!("expected {wanted}, found '{c}'")),
            None => ParseError::syntax(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    /// `name(` lookahead without consuming.
    fn at_call(&mut self, name: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        rest.starts_with(name) && rest[name.len()..].trim_start().starts_with('(')
    }

    fn enter_call(&mut self, name: &str) {
        self.skip_ws();
        self.pos += name.len();
        self.eat('(');
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.src[start..self.pos]))
    }

    fn uint(&mut self) -> Result<(usize, u64), ParseError> {
        let Some((start, text)) = self.digits() else {
            return Err(self.unexpected("a number"));
        };
        text.parse().map(|v| (start, v)).map_err(|_| ParseError::semantic(start, format!("{text} is too large")))
    }

    fn int(&mut self) -> Result<(usize, i64), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat('-');
        let (_, text) = self.digits().ok_or_else(|| self.unexpected("an integer"))?;
        let magnitude: i128 =
            text.parse().map_err(|_| ParseError::semantic(start, format!("{text} is too large")))?;
        let value = if negative { -magnitude } else { magnitude };
        i64::try_from(value).map(|v| (start, v)).map_err(|_| ParseError::semantic(start, format!("{value} is too large")))
    }

    fn fraction(&mut self) -> Result<ExtendedRational, ParseError> {
        self.skip_ws();
        if self.rest().starts_with("inf") {
            self.pos += 3;
            return Ok(ExtendedRational::INFINITY);
        }
        let (start, num) = self.int()?;
        let den = if self.eat('/') { self.int()?.1 } else { 1 };
        ExtendedRational::new(num, den).map_err(|e| ParseError::semantic(start, e.to_string()))
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let mut chars = self.rest().char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        let len = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_' || c == '\'' || c == '^'))
            .map(|(i, _)| i)
            .unwrap_or(self.rest().len());
        self.pos += len;
        Some((start, &self.src[start..self.pos]))
    }

    fn tangle_atom(&mut self) -> Result<TangleAtom, ParseError> {
        if self.at_call("T") {
            self.enter_call("T");
            let x = self.fraction()?;
            self.expect(')')?;
            return Ok(TangleAtom::Rational(x));
        }
        if self.at_call("M") {
            self.enter_call("M");
            let start = self.pos;
            let mut xs = vec![self.fraction()?];
            while self.eat(',') {
                xs.push(self.fraction()?);
            }
            self.expect(')')?;
            if xs.len() < 2 {
                return Err(ParseError::semantic(start, "a Montesinos tangle needs at least two summands"));
            }
            return Ok(TangleAtom::Montesinos(xs));
        }
        match self.ident() {
            Some((start, name)) if name.starts_with(|c: char| c.is_ascii_uppercase()) => {
                if self.peek() == Some('(') {
                    return Err(ParseError::syntax(start, format!("unknown tangle constructor '{name}'")));
                }
                Ok(TangleAtom::Var(name.to_owned()))
            }
            Some((start, name)) => Err(ParseError::syntax(start, format!("tangle variables start with a capital letter, got '{name}'"))),
            None => Err(self.unexpected("a tangle")),
        }
    }

    fn tangle_term(&mut self) -> Result<TangleTerm, ParseError> {
        self.skip_ws();
        let coeff = if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            let (start, c) = self.uint()?;
            if c == 0 {
                return Err(ParseError::semantic(start, "coefficient must be positive"));
            }
            u32::try_from(c).map_err(|_| ParseError::semantic(start, "coefficient is too large"))?
        } else {
            1
        };
        Ok(TangleTerm { coeff, atom: self.tangle_atom()? })
    }

    fn tangle(&mut self) -> Result<TangleExpr, ParseError> {
        let mut terms = vec![self.tangle_term()?];
        while self.eat('+') {
            terms.push(self.tangle_term()?);
        }
        Ok(TangleExpr(terms))
    }

    fn knot_atom(&mut self) -> Result<KnotAtom, ParseError> {
        if self.at_call("b") {
            self.skip_ws();
            let start = self.pos;
            self.enter_call("b");
            let (_, p) = self.int()?;
            self.expect(',')?;
            let (_, q) = self.int()?;
            self.expect(')')?;
            if p < 0 {
                return Err(ParseError::semantic(start, format!("b({p},{q}): p must be non-negative")));
            }
            if tangles::rational::gcd(p, q) != 1 {
                return Err(ParseError::semantic(start, format!("b({p},{q}): p and q must be coprime")));
            }
            return Ok(KnotAtom::Schubert(p, q));
        }
        if self.at_call("N") {
            self.enter_call("N");
            let t = self.tangle()?;
            self.expect(')')?;
            return Ok(KnotAtom::Closure(t));
        }
        self.skip_ws();
        if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            let save = self.pos;
            let (_, c) = self.uint()?;
            if self.rest().starts_with("-crossing") {
                self.pos += "-crossing".len();
                return Ok(KnotAtom::CrossingNumber(c));
            }
            self.pos = save;
        }
        let start = self.pos;
        let len = self
            .rest()
            .char_indices()
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '\''))
            .map(|(i, _)| i)
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.unexpected("a knot"));
        }
        let name = &self.src[start..start + len];
        if tangles::TwoBridgeLink::from_name(name).is_none() {
            return Err(ParseError::semantic(start, format!("unknown knot name '{name}'")));
        }
        self.pos += len;
        Ok(KnotAtom::Named(name.to_owned()))
    }

    fn knot(&mut self) -> Result<KnotExpr, ParseError> {
        let mut atoms = vec![self.knot_atom()?];
        while self.eat('#') {
            atoms.push(self.knot_atom()?);
        }
        Ok(KnotExpr(atoms))
    }

    fn word(&mut self) -> Result<TwistWord, ParseError> {
        let mut moves = Vec::new();
        while let Some(c) = self.peek() {
            let start = self.pos;
            self.pos += 1;
            let power = |p: &mut Self| -> Result<i64, ParseError> {
                if p.rest().starts_with('^') {
                    p.pos += 1;
                    Ok(p.int()?.1)
                } else {
                    Ok(1)
                }
            };
            let m = match c {
                'h' => Move::H(power(self)?),
                'v' => Move::V(power(self)?),
                'r' => Move::R,
                _ => return Err(ParseError::syntax(start, format!("expected h, v or r, found '{c}'"))),
            };
            if self.rest().starts_with(|c: char| c.is_ascii_alphanumeric()) {
                return Err(ParseError::syntax(self.pos, "separate twist letters with spaces"));
            }
            moves.push(m);
        }
        if moves.is_empty() {
            return Err(self.unexpected("a twist word"));
        }
        Ok(TwistWord(moves))
    }
}

fn whole<'s, T>(src: &'s str, f: impl FnOnce(&mut Parser<'s>) -> Result<T, ParseError>) -> Result<T, ParseError> {
    let mut p = Parser::new(src);
    let v = f(&mut p)?;
    p.finish()?;
    Ok(v)
}

pub fn parse_fraction(src: &str) -> Result<ExtendedRational, ParseError> {
    whole(src, Parser::fraction)
}

pub fn parse_tangle(src: &str) -> Result<TangleExpr, ParseError> {
    whole(src, Parser::tangle)
}

pub fn parse_knot(src: &str) -> Result<KnotExpr, ParseError> {
    whole(src, Parser::knot)
}

pub fn parse_word(src: &str) -> Result<TwistWord, ParseError> {
    whole(src, Parser::word)
}

/// Comma-separated knots, e.g. `b(1,1),b(3,1),7-crossing`.
pub fn parse_knot_list(src: &str) -> Result<Vec<KnotExpr>, ParseError> {
    whole(src, |p| {
        let mut out = vec![p.knot()?];
        while p.eat(',') {
            out.push(p.knot()?);
        }
        Ok(out)
    })
}

pub fn parse_statement(src: &str) -> Result<Statement, ParseError> {
    whole(src, |p| {
        if p.at_call("N") {
            p.enter_call("N");
            let lhs = p.tangle()?;
            p.expect(')')?;
            p.expect('=')?;
            let rhs = p.knot()?;
            return Ok(Statement::Equation(Equation { lhs, rhs }));
        }
        match p.ident() {
            Some((_, v)) if v.starts_with(|c: char| c.is_ascii_uppercase()) => {
                p.expect('=')?;
                Ok(Statement::Binding(v.to_owned(), p.tangle()?))
            }
            _ => {
                p.pos = 0;
                Err(p.unexpected("an equation N(...)=... or a binding X=..."))
            }
        }
    })
}

/// Parses any single form. Twist words start with a lowercase `h`, `v` or
/// `r`; an `=` makes an equation; a leading `b(`, `N(`, a knot name or a
/// crossing count makes a knot; anything else is a tangle.
pub fn parse(src: &str) -> Result<Notation, ParseError> {
    let trimmed = src.trim_start();
    let is_word = trimmed
        .split_whitespace()
        .next()
        .is_some_and(|w| matches!(w.split('^').next(), Some("h" | "v" | "r")));
    if is_word {
        return parse_word(src).map(Notation::Word);
    }
    if src.contains('=') {
        return match parse_statement(src)? {
            Statement::Equation(e) => Ok(Notation::Equation(e)),
            Statement::Binding(..) => Err(ParseError::syntax(0, "bindings are only allowed in equation files")),
        };
    }
    let mut probe = Parser::new(src);
    let starts_knot = probe.at_call("b")
        || probe.at_call("N")
        || trimmed.starts_with(|c: char| c.is_ascii_lowercase())
        || src.contains('#')
        || src.contains("-crossing");
    if starts_knot {
        parse_knot(src).map(Notation::Knot)
    } else {
        parse_tangle(src).map(Notation::Tangle)
    }
}

/// One parsed line of an equation file, with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub number: usize,
    pub statement: Statement,
}

/// Error in an equation file: the line and the parse error within it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError {
    pub line: usize,
    pub text: String,
    pub error: ParseError,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error.render(&self.text))
    }
}

impl std::error::Error for FileError {}

/// Strips a comment: `#` at the start of the line or after whitespace.
/// A connected sum is written without spaces, `b(3,1)#b(3,1)`.
fn strip_comment(line: &str) -> &str {
    let bytes = line.as_bytes();
    for (i, &c) in bytes.iter().enumerate() {
        if c == b'#' && (i == 0 || bytes[i - 1].is_ascii_whitespace()) {
            return &line[..i];
        }
    }
    line
}

/// Parses an equation file: one statement per line, blank lines and
/// comments ignored.
pub fn parse_equation_file(src: &str) -> Result<Vec<Line>, FileError> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let text = strip_comment(raw);
        if text.trim().is_empty() {
            continue;
        }
        let statement =
            parse_statement(text).map_err(|error| FileError { line: i + 1, text: text.to_owned(), error })?;
        out.push(Line { number: i + 1, statement });
    }
    Ok(out)
}
