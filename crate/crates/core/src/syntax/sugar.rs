//! The human-facing syntax.
//!
//! Precedence, tightest first: juxtaposition (application, left
//! associative), `!`, `in`, `=`, `/\`, `\/`, `->` (right associative),
//! `<->`. `/\`, `\/` and `<->` associate to the left; `in` and `=` do not
//! chain. Binders (`exists`, `forall`, `mu`, `nu`) take everything to their
//! right up to the closing parenthesis of the enclosing group.

use std::sync::Arc;

use super::signature::parse_var_index;
use super::{Pattern, Signature, SyntaxError, DEFINEDNESS};

/// Placeholder constant standing for the context hole `[]`. It cannot
/// clash with a declared constant because `[]` is not an identifier.
pub(crate) const HOLE: &str = "[]";

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bang,
    And,
    Or,
    Arrow,
    Iff,
    Eq,
    LParen,
    RParen,
    Dot,
    Hole,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Bang => "`!`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Eq => "`=`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Hole => "`[]`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let rest = &text[i..];
        let (tok, width) = if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else if rest.starts_with("/\\") {
            (Tok::And, 2)
        } else if rest.starts_with("\\/") {
            (Tok::Or, 2)
        } else if rest.starts_with("[]") {
            (Tok::Hole, 2)
        } else {
            match c {
                b'!' => (Tok::Bang, 1),
                b'=' => (Tok::Eq, 1),
                b'(' => (Tok::LParen, 1),
                b')' => (Tok::RParen, 1),
                b'.' => (Tok::Dot, 1),
                _ if c.is_ascii_alphabetic() || c == b'_' => {
                    let len = rest
                        .bytes()
                        .take_while(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'\'' | b'-'))
                        .count();
                    // `a->b`: a trailing `-` that starts an arrow is not part of the name
                    let mut len = len;
                    while len > 1 && rest[..len].ends_with('-') && rest[len..].starts_with('>') {
                        len -= 1;
                    }
                    while len > 1 && rest[..len].ends_with('-') && rest[len - 1..].starts_with("->") {
                        len -= 1;
                    }
                    (Tok::Ident(rest[..len].to_string()), len)
                }
                _ => {
                    let ch = rest.chars().next().unwrap_or('?');
                    return Err(SyntaxError::UnknownSymbol { token: ch.to_string(), position: start });
                }
            }
        };
        out.push((tok, start));
        i += width;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    sig: &'a Signature,
    allow_hole: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == w) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn malformed(&self, reason: impl Into<String>) -> SyntaxError {
        SyntaxError::Malformed { position: self.offset(), reason: reason.into() }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), SyntaxError> {
        if self.eat(t) {
            return Ok(());
        }
        match self.peek() {
            None => Err(SyntaxError::ArityError { position: self.end }),
            Some(found) => {
                let found = found.describe();
                Err(self.malformed(format!("expected {}, found {found}", t.describe())))
            }
        }
    }

    fn definedness(&self) -> Result<Pattern, SyntaxError> {
        if self.sig.contains(DEFINEDNESS) {
            Ok(Pattern::constant(DEFINEDNESS))
        } else {
            Err(SyntaxError::UnknownSymbol { token: DEFINEDNESS.into(), position: self.offset() })
        }
    }

    fn iff(&mut self) -> Result<Pattern, SyntaxError> {
        let mut left = self.imp()?;
        while self.eat(&Tok::Iff) {
            let right = self.imp()?;
            left = Pattern::iff(left, right);
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Pattern, SyntaxError> {
        let left = self.or()?;
        if self.eat(&Tok::Arrow) {
            let right = self.imp()?;
            return Ok(Pattern::imp(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Pattern, SyntaxError> {
        let mut left = self.and()?;
        while self.eat(&Tok::Or) {
            let right = self.and()?;
            left = Pattern::or(left, right);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Pattern, SyntaxError> {
        let mut left = self.eq()?;
        while self.eat(&Tok::And) {
            let right = self.eq()?;
            left = Pattern::and(left, right);
        }
        Ok(left)
    }

    fn eq(&mut self) -> Result<Pattern, SyntaxError> {
        let left = self.mem()?;
        if self.eat(&Tok::Eq) {
            let d = self.definedness()?;
            let right = self.mem()?;
            let _ = d;
            return Ok(Pattern::equals(left, right));
        }
        Ok(left)
    }

    fn mem(&mut self) -> Result<Pattern, SyntaxError> {
        let start = self.offset();
        let left = self.not()?;
        if self.eat_word("in") {
            self.definedness()?;
            let Pattern::EVar(x) = left else {
                return Err(SyntaxError::Malformed {
                    position: start,
                    reason: "the left operand of `in` must be an element variable".into(),
                });
            };
            let right = self.not()?;
            return Ok(Pattern::member(x, right));
        }
        Ok(left)
    }

    fn not(&mut self) -> Result<Pattern, SyntaxError> {
        if self.eat(&Tok::Bang) {
            return Ok(Pattern::not(self.not()?));
        }
        self.app()
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(Tok::LParen) | Some(Tok::Hole) => true,
            Some(Tok::Ident(w)) => w != "in",
            _ => false,
        }
    }

    fn app(&mut self) -> Result<Pattern, SyntaxError> {
        let mut left = self.atom()?;
        while self.starts_atom() {
            let right = self.atom()?;
            left = Pattern::app(left, right);
        }
        Ok(left)
    }

    fn binder_var(&mut self, prefix: char) -> Result<u32, SyntaxError> {
        let kind = if prefix == 'x' { "element" } else { "set" };
        match self.bump() {
            Some(Tok::Ident(w)) => match parse_var_index(&w, prefix) {
                Some(n) => Ok(n),
                None => {
                    self.pos -= 1;
                    Err(self.malformed(format!("expected a {kind} variable, found `{w}`")))
                }
            },
            Some(t) => {
                self.pos -= 1;
                Err(self.malformed(format!("expected a {kind} variable, found {}", t.describe())))
            }
            None => Err(SyntaxError::ArityError { position: self.end }),
        }
    }

    fn atom(&mut self) -> Result<Pattern, SyntaxError> {
        let position = self.offset();
        let Some(tok) = self.bump() else {
            return Err(SyntaxError::ArityError { position: self.end });
        };
        match tok {
            Tok::LParen => {
                let p = self.iff()?;
                self.expect(&Tok::RParen)?;
                Ok(p)
            }
            Tok::Hole if self.allow_hole => Ok(Pattern::Const(Arc::from(HOLE))),
            Tok::Ident(w) => match w.as_str() {
                "bot" => Ok(Pattern::bot()),
                "top" => Ok(Pattern::top()),
                "ceil" | "floor" => {
                    self.definedness()?;
                    self.expect(&Tok::LParen)?;
                    let p = self.iff()?;
                    self.expect(&Tok::RParen)?;
                    Ok(if w == "ceil" { Pattern::ceil(p) } else { Pattern::floor(p) })
                }
                "exists" | "forall" => {
                    let v = self.binder_var('x')?;
                    self.expect(&Tok::Dot)?;
                    let body = self.iff()?;
                    Ok(if w == "exists" { Pattern::exists(v, body) } else { Pattern::forall(v, body) })
                }
                "mu" | "nu" => {
                    let v = self.binder_var('X')?;
                    self.expect(&Tok::Dot)?;
                    let body = self.iff()?;
                    Ok(if w == "mu" { Pattern::mu(v, body) } else { Pattern::nu(v, body) })
                }
                "appl" | "imp" | "in" => {
                    Err(SyntaxError::Malformed { position, reason: format!("`{w}` is not valid in sugar syntax") })
                }
                _ => {
                    if let Some(n) = parse_var_index(&w, 'x') {
                        Ok(Pattern::EVar(n))
                    } else if let Some(n) = parse_var_index(&w, 'X') {
                        Ok(Pattern::SVar(n))
                    } else if self.sig.contains(&w) {
                        Ok(Pattern::Const(Arc::from(w.as_str())))
                    } else {
                        Err(SyntaxError::UnknownSymbol { token: w, position })
                    }
                }
            },
            other => {
                self.pos -= 1;
                Err(SyntaxError::Malformed { position, reason: format!("unexpected {}", other.describe()) })
            }
        }
    }
}

fn parse_with(text: &str, sig: &Signature, allow_hole: bool) -> Result<Pattern, SyntaxError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0, end: text.len(), sig, allow_hole };
    if parser.peek().is_none() {
        return Err(SyntaxError::Malformed { position: 0, reason: "empty input".into() });
    }
    let p = parser.iff()?;
    if let Some(t) = parser.peek() {
        let t = t.describe();
        return Err(parser.malformed(format!("unexpected {t} after a complete pattern")));
    }
    Ok(p)
}

pub fn parse_sugar(text: &str, sig: &Signature) -> Result<Pattern, SyntaxError> {
    parse_with(text, sig, false)
}

/// Parses sugar text in which `[]` may appear; the hole is returned as a
/// placeholder constant.
pub(crate) fn parse_sugar_with_hole(text: &str, sig: &Signature) -> Result<Pattern, SyntaxError> {
    parse_with(text, sig, true)
}

// Printing levels; a child printed below its required level is parenthesised.
const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const EQ: u8 = 5;
const MEM: u8 = 6;
const NOT: u8 = 7;
const APP: u8 = 8;
const ATOM: u8 = 9;

enum Shape<'a> {
    Atom(String),
    Ceil(&'a Pattern),
    Floor(&'a Pattern),
    Eq(&'a Pattern, &'a Pattern),
    Mem(u32, &'a Pattern),
    Nu(u32, Pattern),
    Forall(u32, &'a Pattern),
    Iff(&'a Pattern, &'a Pattern),
    And(&'a Pattern, &'a Pattern),
    Not(&'a Pattern),
    Or(&'a Pattern, &'a Pattern),
    Imp(&'a Pattern, &'a Pattern),
    App(&'a Pattern, &'a Pattern),
    Exists(u32, &'a Pattern),
    Mu(u32, &'a Pattern),
}

fn classify(p: &Pattern) -> Shape<'_> {
    if p.is_canonical_bot() {
        return Shape::Atom("bot".into());
    }
    if matches!(p, Pattern::Imp(l, r) if l.is_canonical_bot() && r.is_canonical_bot()) {
        return Shape::Atom("top".into());
    }
    if let Some((a, b)) = p.as_equals() {
        return Shape::Eq(a, b);
    }
    if let Some(a) = p.as_floor() {
        return Shape::Floor(a);
    }
    if let Some((x, a)) = p.as_member() {
        return Shape::Mem(x, a);
    }
    if let Some(a) = p.as_ceil() {
        return Shape::Ceil(a);
    }
    if let Some((v, body)) = p.as_nu() {
        return Shape::Nu(v, body);
    }
    if let Some((v, a)) = p.as_forall() {
        return Shape::Forall(v, a);
    }
    if let Some((a, b)) = p.as_iff() {
        return Shape::Iff(a, b);
    }
    if let Some((a, b)) = p.as_and() {
        return Shape::And(a, b);
    }
    if let Some(a) = p.as_not() {
        return Shape::Not(a);
    }
    if let Some((a, b)) = p.as_or() {
        return Shape::Or(a, b);
    }
    match p {
        Pattern::EVar(n) => Shape::Atom(format!("x{n}")),
        Pattern::SVar(n) => Shape::Atom(format!("X{n}")),
        Pattern::Const(c) => Shape::Atom(c.to_string()),
        Pattern::Imp(a, b) => Shape::Imp(a, b),
        Pattern::Appl(a, b) => Shape::App(a, b),
        Pattern::Exists(v, b) => Shape::Exists(*v, b),
        Pattern::Mu(v, b) => Shape::Mu(*v, b),
    }
}

impl Shape<'_> {
    /// `None` for binders, which are governed by the tail rule instead.
    fn level(&self) -> Option<u8> {
        match self {
            Shape::Atom(_) | Shape::Ceil(_) | Shape::Floor(_) => Some(ATOM),
            Shape::App(..) => Some(APP),
            Shape::Not(_) => Some(NOT),
            Shape::Mem(..) => Some(MEM),
            Shape::Eq(..) => Some(EQ),
            Shape::And(..) => Some(AND),
            Shape::Or(..) => Some(OR),
            Shape::Imp(..) => Some(IMP),
            Shape::Iff(..) => Some(IFF),
            Shape::Nu(..) | Shape::Forall(..) | Shape::Exists(..) | Shape::Mu(..) => None,
        }
    }
}

/// Renders with derived connectives restored and minimal parentheses.
pub fn render_sugar(p: &Pattern) -> String {
    let mut out = String::new();
    write(p, 0, true, &mut out);
    out
}

/// `tail` is true when nothing follows this subexpression before the end
/// of the enclosing group, so a binder may be printed bare.
fn write(p: &Pattern, min: u8, tail: bool, out: &mut String) {
    let shape = classify(p);
    match shape.level() {
        None if !tail => {
            out.push('(');
            write(p, 0, true, out);
            out.push(')');
            return;
        }
        Some(level) if level < min => {
            out.push('(');
            write(p, 0, true, out);
            out.push(')');
            return;
        }
        _ => {}
    }
    match shape {
        Shape::Atom(s) => out.push_str(&s),
        Shape::Ceil(a) => {
            out.push_str("ceil(");
            write(a, 0, true, out);
            out.push(')');
        }
        Shape::Floor(a) => {
            out.push_str("floor(");
            write(a, 0, true, out);
            out.push(')');
        }
        Shape::Eq(a, b) => binary(a, " = ", b, MEM, MEM, tail, out),
        Shape::Mem(x, a) => {
            out.push_str(&format!("x{x} in "));
            write(a, NOT, tail, out);
        }
        Shape::Nu(v, body) => {
            out.push_str(&format!("nu X{v} . "));
            write(&body, 0, true, out);
        }
        Shape::Forall(v, a) => {
            out.push_str(&format!("forall x{v} . "));
            write(a, 0, true, out);
        }
        Shape::Exists(v, a) => {
            out.push_str(&format!("exists x{v} . "));
            write(a, 0, true, out);
        }
        Shape::Mu(v, a) => {
            out.push_str(&format!("mu X{v} . "));
            write(a, 0, true, out);
        }
        Shape::Iff(a, b) => binary(a, " <-> ", b, IFF, IFF + 1, tail, out),
        Shape::And(a, b) => binary(a, " /\\ ", b, AND, AND + 1, tail, out),
        Shape::Or(a, b) => binary(a, " \\/ ", b, OR, OR + 1, tail, out),
        Shape::Imp(a, b) => binary(a, " -> ", b, IMP + 1, IMP, tail, out),
        Shape::Not(a) => {
            out.push('!');
            write(a, NOT, tail, out);
        }
        Shape::App(a, b) => {
            write(a, APP, false, out);
            out.push(' ');
            write(b, ATOM, false, out);
        }
    }
}

fn binary(a: &Pattern, op: &str, b: &Pattern, lmin: u8, rmin: u8, tail: bool, out: &mut String) {
    write(a, lmin, false, out);
    out.push_str(op);
    write(b, rmin, tail, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::new(["c", "d", "def"]).unwrap()
    }

    fn parse(s: &str) -> Pattern {
        parse_sugar(s, &sig()).unwrap()
    }

    #[test]
    fn derived_keywords_desugar() {
        assert_eq!(parse("bot"), Pattern::mu(0, Pattern::svar(0)));
        assert_eq!(parse("top"), Pattern::imp(Pattern::bot(), Pattern::bot()));
        assert_eq!(parse("!x0"), Pattern::not(Pattern::evar(0)));
        assert_eq!(parse("ceil(x0)"), Pattern::ceil(Pattern::evar(0)));
        assert_eq!(parse("x0 in c"), Pattern::member(0, Pattern::constant("c")));
        assert_eq!(parse("x0 = x1"), Pattern::equals(Pattern::evar(0), Pattern::evar(1)));
    }

    #[test]
    fn application_is_left_associative_and_binds_tightest() {
        let c = Pattern::constant("c");
        assert_eq!(parse("c x0 x1"), Pattern::app(Pattern::app(c.clone(), Pattern::evar(0)), Pattern::evar(1)));
        assert_eq!(parse("!c x0"), Pattern::not(Pattern::app(c, Pattern::evar(0))));
    }

    #[test]
    fn implication_is_right_associative() {
        let (a, b, c) = (Pattern::evar(0), Pattern::evar(1), Pattern::evar(2));
        assert_eq!(parse("x0 -> x1 -> x2"), Pattern::imp(a.clone(), Pattern::imp(b.clone(), c.clone())));
        assert_eq!(parse("x0 \\/ x1 -> x2"), Pattern::imp(Pattern::or(a.clone(), b.clone()), c.clone()));
        assert_eq!(parse("x0 /\\ x1 \\/ x2"), Pattern::or(Pattern::and(a, b), c));
    }

    #[test]
    fn binders_extend_maximally() {
        let p = parse("forall x0 . x0 -> x1");
        assert_eq!(p, Pattern::forall(0, Pattern::imp(Pattern::evar(0), Pattern::evar(1))));
        let p = parse("x1 -> exists x0 . x0 -> c");
        assert_eq!(
            p,
            Pattern::imp(Pattern::evar(1), Pattern::exists(0, Pattern::imp(Pattern::evar(0), Pattern::constant("c"))))
        );
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_sugar(&Pattern::bot()), "bot");
        assert_eq!(render_sugar(&Pattern::imp(Pattern::evar(0), Pattern::bot())), "!x0");
        let p = Pattern::app(Pattern::app(Pattern::constant("c"), Pattern::evar(0)), Pattern::evar(1));
        assert_eq!(render_sugar(&p), "c x0 x1");
        let p = Pattern::app(Pattern::constant("c"), Pattern::app(Pattern::evar(0), Pattern::evar(1)));
        assert_eq!(render_sugar(&p), "c (x0 x1)");
        let p = Pattern::imp(Pattern::exists(0, Pattern::evar(0)), Pattern::constant("c"));
        assert_eq!(render_sugar(&p), "(exists x0 . x0) -> c");
    }

    #[test]
    fn errors() {
        let s = sig();
        assert!(matches!(parse_sugar("x0 ->", &s), Err(SyntaxError::ArityError { .. })));
        assert!(matches!(parse_sugar("e x0", &s), Err(SyntaxError::UnknownSymbol { .. })));
        assert!(matches!(parse_sugar("x0 = x1 = x2", &s), Err(SyntaxError::Malformed { .. })));
        assert!(matches!(parse_sugar("c in d", &s), Err(SyntaxError::Malformed { .. })));
        assert!(matches!(parse_sugar("exists X0 . c", &s), Err(SyntaxError::Malformed { .. })));
        assert!(matches!(parse_sugar("(c", &s), Err(SyntaxError::ArityError { .. })));
        assert!(matches!(parse_sugar("c)", &s), Err(SyntaxError::Malformed { .. })));
        assert!(matches!(parse_sugar("[]", &s), Err(SyntaxError::Malformed { .. })));
        let nodef = Signature::new(["c"]).unwrap();
        assert!(matches!(parse_sugar("ceil(c)", &nodef), Err(SyntaxError::UnknownSymbol { .. })));
    }

    #[test]
    fn arrows_glued_to_names() {
        let p = parse("c->d");
        assert_eq!(p, Pattern::imp(Pattern::constant("c"), Pattern::constant("d")));
    }
}
