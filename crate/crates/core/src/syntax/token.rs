use std::fmt;
use std::sync::Arc;

use super::signature::parse_var_index;
use super::{Pattern, Signature, SyntaxError};

/// One token of the core Polish syntax.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Appl,
    Imp,
    Exists,
    Mu,
    EVar(u32),
    SVar(u32),
    Const(Arc<str>),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Appl => f.write_str("appl"),
            Token::Imp => f.write_str("imp"),
            Token::Exists => f.write_str("exists"),
            Token::Mu => f.write_str("mu"),
            Token::EVar(n) => write!(f, "x{n}"),
            Token::SVar(n) => write!(f, "X{n}"),
            Token::Const(c) => f.write_str(c),
        }
    }
}

impl Token {
    pub fn is_binder(&self) -> bool {
        matches!(self, Token::Exists | Token::Mu)
    }

    pub fn is_binary(&self) -> bool {
        matches!(self, Token::Appl | Token::Imp)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Token::EVar(_) | Token::SVar(_) | Token::Const(_))
    }

    /// Reads one whitespace-free word against a signature.
    pub fn lex(word: &str, sig: &Signature) -> Option<Token> {
        match word {
            "appl" => Some(Token::Appl),
            "imp" => Some(Token::Imp),
            "exists" => Some(Token::Exists),
            "mu" => Some(Token::Mu),
            _ => {
                if let Some(n) = parse_var_index(word, 'x') {
                    Some(Token::EVar(n))
                } else if let Some(n) = parse_var_index(word, 'X') {
                    Some(Token::SVar(n))
                } else if sig.contains(word) {
                    Some(Token::Const(Arc::from(word)))
                } else {
                    None
                }
            }
        }
    }
}

/// The positional view of a pattern: its Polish token sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TokenString(pub Vec<Token>);

impl TokenString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Token] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<&Token> {
        self.0.get(i)
    }
}

impl std::ops::Index<usize> for TokenString {
    type Output = Token;
    fn index(&self, i: usize) -> &Token {
        &self.0[i]
    }
}

impl fmt::Display for TokenString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

pub fn tokens(p: &Pattern) -> TokenString {
    let mut out = Vec::with_capacity(p.len());
    push_tokens(p, &mut out);
    TokenString(out)
}

fn push_tokens(p: &Pattern, out: &mut Vec<Token>) {
    match p {
        Pattern::EVar(n) => out.push(Token::EVar(*n)),
        Pattern::SVar(n) => out.push(Token::SVar(*n)),
        Pattern::Const(c) => out.push(Token::Const(c.clone())),
        Pattern::Appl(l, r) => {
            out.push(Token::Appl);
            push_tokens(l, out);
            push_tokens(r, out);
        }
        Pattern::Imp(l, r) => {
            out.push(Token::Imp);
            push_tokens(l, out);
            push_tokens(r, out);
        }
        Pattern::Exists(v, b) => {
            out.push(Token::Exists);
            out.push(Token::EVar(*v));
            push_tokens(b, out);
        }
        Pattern::Mu(v, b) => {
            out.push(Token::Mu);
            out.push(Token::SVar(*v));
            push_tokens(b, out);
        }
    }
}

/// Splits core text into tokens.
pub fn lex_core(text: &str, sig: &Signature) -> Result<TokenString, SyntaxError> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, w)| {
            Token::lex(w, sig).ok_or_else(|| SyntaxError::UnknownSymbol { token: w.to_string(), position: i })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(TokenString)
}

/// Reads exactly one pattern from a token slice; leftovers are an error.
pub fn parse_tokens(toks: &[Token]) -> Result<Pattern, SyntaxError> {
    if toks.is_empty() {
        return Err(SyntaxError::Malformed { position: 0, reason: "empty input".into() });
    }
    let (p, end) = read_prefix(toks, 0)?;
    if end != toks.len() {
        return Err(SyntaxError::Malformed {
            position: end,
            reason: format!("{} token(s) left after a complete pattern", toks.len() - end),
        });
    }
    Ok(p)
}

/// Reads the unique pattern starting at `start`, returning it and the index
/// just past its last token.
pub fn read_prefix(toks: &[Token], start: usize) -> Result<(Pattern, usize), SyntaxError> {
    let tok = toks.get(start).ok_or(SyntaxError::ArityError { position: start })?;
    match tok {
        Token::EVar(n) => Ok((Pattern::EVar(*n), start + 1)),
        Token::SVar(n) => Ok((Pattern::SVar(*n), start + 1)),
        Token::Const(c) => Ok((Pattern::Const(c.clone()), start + 1)),
        Token::Appl | Token::Imp => {
            let (l, mid) = read_prefix(toks, start + 1)?;
            let (r, end) = read_prefix(toks, mid)?;
            let p = if *tok == Token::Appl { Pattern::app(l, r) } else { Pattern::imp(l, r) };
            Ok((p, end))
        }
        Token::Exists | Token::Mu => {
            let head = toks.get(start + 1).ok_or(SyntaxError::ArityError { position: start + 1 })?;
            let var = match (tok, head) {
                (Token::Exists, Token::EVar(n)) | (Token::Mu, Token::SVar(n)) => *n,
                _ => {
                    return Err(SyntaxError::Malformed {
                        position: start + 1,
                        reason: format!(
                            "`{tok}` must be followed by a {} variable, found `{head}`",
                            if *tok == Token::Exists { "element" } else { "set" }
                        ),
                    })
                }
            };
            let (body, end) = read_prefix(toks, start + 2)?;
            let p = if *tok == Token::Exists { Pattern::exists(var, body) } else { Pattern::mu(var, body) };
            Ok((p, end))
        }
    }
}

/// Parses core Polish text.
pub fn parse_core(text: &str, sig: &Signature) -> Result<Pattern, SyntaxError> {
    let toks = lex_core(text, sig)?;
    parse_tokens(toks.as_slice())
}

/// True when the slice is exactly one pattern.
pub fn is_pattern(toks: &[Token]) -> bool {
    parse_tokens(toks).is_ok()
}
