use std::collections::BTreeMap;
use std::fmt;

use super::ProofError;
use crate::syntax::{parse_sugar, parse_var_index, render_sugar, strip_comment, Pattern, Signature};

/// Why a proof line holds. Line references are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Taut,
    Hyp(String),
    AxExists { x: u32, y: u32 },
    AxPropBotL,
    AxPropBotR,
    AxPropOrL,
    AxPropOrR,
    AxPropExistsL,
    AxPropExistsR,
    AxPreFixpoint,
    AxExistence,
    AxSingleton { x: u32, body: Pattern },
    MP(usize, usize),
    GenExists(usize),
    FrameL(usize),
    FrameR(usize),
    SubstSet { line: usize, var: u32, psi: Pattern },
    KT(usize),
}

impl Justification {
    pub fn is_axiom(&self) -> bool {
        !self.is_rule() && !matches!(self, Justification::Hyp(_))
    }

    pub fn is_rule(&self) -> bool {
        !self.references().is_empty()
    }

    /// Earlier lines this step depends on.
    pub fn references(&self) -> Vec<usize> {
        match self {
            Justification::MP(i, j) => vec![*i, *j],
            Justification::GenExists(i)
            | Justification::FrameL(i)
            | Justification::FrameR(i)
            | Justification::KT(i)
            | Justification::SubstSet { line: i, .. } => vec![*i],
            _ => Vec::new(),
        }
    }

    /// The keyword used in scripts.
    pub fn keyword(&self) -> &'static str {
        match self {
            Justification::Taut => "taut",
            Justification::Hyp(_) => "hyp",
            Justification::AxExists { .. } => "ax.exists",
            Justification::AxPropBotL => "ax.prop-bot-l",
            Justification::AxPropBotR => "ax.prop-bot-r",
            Justification::AxPropOrL => "ax.prop-or-l",
            Justification::AxPropOrR => "ax.prop-or-r",
            Justification::AxPropExistsL => "ax.prop-exists-l",
            Justification::AxPropExistsR => "ax.prop-exists-r",
            Justification::AxPreFixpoint => "ax.prefix",
            Justification::AxExistence => "ax.existence",
            Justification::AxSingleton { .. } => "ax.singleton",
            Justification::MP(..) => "mp",
            Justification::GenExists(_) => "gen.exists",
            Justification::FrameL(_) => "frame.l",
            Justification::FrameR(_) => "frame.r",
            Justification::SubstSet { .. } => "subst.set",
            Justification::KT(_) => "kt",
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = self.keyword();
        match self {
            Justification::Hyp(name) => write!(f, "{kw} {name}"),
            Justification::AxExists { x, y } => write!(f, "{kw} x{x} x{y}"),
            Justification::AxSingleton { x, body } => write!(f, "{kw} x{x} ; {}", render_sugar(body)),
            Justification::MP(i, j) => write!(f, "{kw} {i} {j}"),
            Justification::GenExists(i)
            | Justification::FrameL(i)
            | Justification::FrameR(i)
            | Justification::KT(i) => {
                write!(f, "{kw} {i}")
            }
            Justification::SubstSet { line, var, psi } => write!(f, "{kw} {line} X{var} ; {}", render_sugar(psi)),
            _ => f.write_str(kw),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub pattern: Pattern,
    pub justification: Justification,
}

/// Hypotheses and numbered lines; line `n` is `lines[n - 1]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProofScript {
    pub hypotheses: BTreeMap<String, Pattern>,
    pub lines: Vec<ProofLine>,
}

impl ProofScript {
    pub fn new() -> ProofScript {
        ProofScript::default()
    }

    pub fn line(&self, n: usize) -> Option<&ProofLine> {
        n.checked_sub(1).and_then(|i| self.lines.get(i))
    }

    pub fn push(&mut self, pattern: Pattern, justification: Justification) -> usize {
        self.lines.push(ProofLine { pattern, justification });
        self.lines.len()
    }

    /// Adds hypotheses from another source. A name bound to two different
    /// patterns is an error.
    pub fn merge_hypotheses(&mut self, more: &BTreeMap<String, Pattern>) -> Result<(), ProofError> {
        for (name, p) in more {
            match self.hypotheses.get(name) {
                Some(q) if q != p => return Err(ProofError::ConflictingHypothesis(name.clone())),
                _ => {
                    self.hypotheses.insert(name.clone(), p.clone());
                }
            }
        }
        Ok(())
    }

    pub fn hypothesis_patterns(&self) -> Vec<Pattern> {
        self.hypotheses.values().cloned().collect()
    }
}

impl fmt::Display for ProofScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, p) in &self.hypotheses {
            writeln!(f, "hyp {name} := {}", render_sugar(p))?;
        }
        for (i, line) in self.lines.iter().enumerate() {
            writeln!(f, "{}: {} ; {}", i + 1, render_sugar(&line.pattern), line.justification)?;
        }
        Ok(())
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ProofError {
    ProofError::Syntax { line, message: message.into() }
}

fn is_hyp_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '\''))
}

fn parse_pattern(text: &str, sig: &Signature, line: usize) -> Result<Pattern, ProofError> {
    parse_sugar(text.trim(), sig).map_err(|e| syntax(line, e.to_string()))
}

fn parse_hyp_header(rest: &str, sig: &Signature, line: usize) -> Result<(String, Pattern), ProofError> {
    let (name, pattern) = rest.split_once(":=").ok_or_else(|| syntax(line, "expected `hyp <name> := <pattern>`"))?;
    let name = name.trim();
    if !is_hyp_name(name) {
        return Err(syntax(line, format!("`{name}` is not a valid hypothesis name")));
    }
    Ok((name.to_string(), parse_pattern(pattern, sig, line)?))
}

/// Reads a file of `hyp <name> := <pattern>` lines.
pub fn parse_hypotheses(text: &str, sig: &Signature) -> Result<BTreeMap<String, Pattern>, ProofError> {
    let mut out = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let rest = line.strip_prefix("hyp ").ok_or_else(|| syntax(lineno, "expected a `hyp` line"))?;
        let (name, p) = parse_hyp_header(rest, sig, lineno)?;
        if out.insert(name.clone(), p).is_some() {
            return Err(ProofError::DuplicateHypothesis { line: lineno, name });
        }
    }
    Ok(out)
}

pub fn parse_proof(text: &str, sig: &Signature) -> Result<ProofScript, ProofError> {
    parse_proof_with(text, sig, &BTreeMap::new())
}

/// Parses a script whose lines may also cite the hypotheses in `extra`.
pub fn parse_proof_with(
    text: &str,
    sig: &Signature,
    extra: &BTreeMap<String, Pattern>,
) -> Result<ProofScript, ProofError> {
    let mut script = ProofScript::new();
    let mut body = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("hyp ") {
            if !line.contains(":=") {
                body.push((lineno, line));
                continue;
            }
            let (name, p) = parse_hyp_header(rest, sig, lineno)?;
            if script.hypotheses.insert(name.clone(), p).is_some() {
                return Err(ProofError::DuplicateHypothesis { line: lineno, name });
            }
        } else {
            body.push((lineno, line));
        }
    }
    script.merge_hypotheses(extra)?;
    for (lineno, line) in body {
        let (number, rest) =
            line.split_once(':').ok_or_else(|| syntax(lineno, "expected `<n>: <pattern> ; <justification>`"))?;
        let number: usize =
            number.trim().parse().map_err(|_| syntax(lineno, format!("`{}` is not a line number", number.trim())))?;
        let expected = script.lines.len() + 1;
        if number != expected {
            return Err(syntax(lineno, format!("expected line number {expected}, found {number}")));
        }
        let mut parts = rest.splitn(3, ';');
        let pattern = parse_pattern(parts.next().unwrap_or(""), sig, lineno)?;
        let just = parts.next().ok_or_else(|| syntax(lineno, "missing `; <justification>`"))?;
        let extra = parts.next();
        let justification = parse_justification(just, extra, sig, lineno, number, &script.hypotheses)?;
        script.push(pattern, justification);
    }
    Ok(script)
}

fn parse_justification(
    text: &str,
    extra: Option<&str>,
    sig: &Signature,
    lineno: usize,
    current: usize,
    hyps: &BTreeMap<String, Pattern>,
) -> Result<Justification, ProofError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let Some((&kw, args)) = words.split_first() else {
        return Err(syntax(lineno, "empty justification"));
    };
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(syntax(lineno, format!("`{kw}` takes {n} argument(s), found {}", args.len())))
        }
    };
    let reference = |s: &str| -> Result<usize, ProofError> {
        let n: usize = s.parse().map_err(|_| syntax(lineno, format!("`{s}` is not a line number")))?;
        if n == 0 {
            return Err(syntax(lineno, "line numbers start at 1"));
        }
        if n >= current {
            return Err(ProofError::ForwardReference { line: lineno, reference: n });
        }
        Ok(n)
    };
    let var = |s: &str, prefix: char| {
        parse_var_index(s, prefix).ok_or_else(|| {
            let kind = if prefix == 'x' { "an element" } else { "a set" };
            syntax(lineno, format!("`{s}` is not {kind} variable"))
        })
    };
    let pattern_arg = || match extra {
        Some(t) => parse_pattern(t, sig, lineno),
        None => Err(syntax(lineno, format!("`{kw}` needs `; <pattern>`"))),
    };
    if extra.is_some() && !matches!(kw, "ax.singleton" | "subst.set") {
        return Err(syntax(lineno, "unexpected `;` after the justification"));
    }
    let simple = |j: Justification| arity(0).map(|_| j);
    match kw {
        "taut" => simple(Justification::Taut),
        "ax.prop-bot-l" => simple(Justification::AxPropBotL),
        "ax.prop-bot-r" => simple(Justification::AxPropBotR),
        "ax.prop-or-l" => simple(Justification::AxPropOrL),
        "ax.prop-or-r" => simple(Justification::AxPropOrR),
        "ax.prop-exists-l" => simple(Justification::AxPropExistsL),
        "ax.prop-exists-r" => simple(Justification::AxPropExistsR),
        "ax.prefix" => simple(Justification::AxPreFixpoint),
        "ax.existence" => simple(Justification::AxExistence),
        "hyp" => {
            arity(1)?;
            let name = args[0];
            if !hyps.contains_key(name) {
                return Err(ProofError::UnknownHypothesis { line: lineno, name: name.to_string() });
            }
            Ok(Justification::Hyp(name.to_string()))
        }
        "ax.exists" => {
            arity(2)?;
            Ok(Justification::AxExists { x: var(args[0], 'x')?, y: var(args[1], 'x')? })
        }
        "ax.singleton" => {
            arity(1)?;
            Ok(Justification::AxSingleton { x: var(args[0], 'x')?, body: pattern_arg()? })
        }
        "mp" => {
            arity(2)?;
            Ok(Justification::MP(reference(args[0])?, reference(args[1])?))
        }
        "gen.exists" => arity(1).and_then(|_| Ok(Justification::GenExists(reference(args[0])?))),
        "frame.l" => arity(1).and_then(|_| Ok(Justification::FrameL(reference(args[0])?))),
        "frame.r" => arity(1).and_then(|_| Ok(Justification::FrameR(reference(args[0])?))),
        "kt" => arity(1).and_then(|_| Ok(Justification::KT(reference(args[0])?))),
        "subst.set" => {
            arity(2)?;
            Ok(Justification::SubstSet { line: reference(args[0])?, var: var(args[1], 'X')?, psi: pattern_arg()? })
        }
        other => Err(syntax(lineno, format!("unknown justification `{other}`"))),
    }
}
