use std::fmt;

use super::SyntaxError;

/// Words that can never be constant names in either syntax.
pub const KEYWORDS: &[&str] = &["appl", "imp", "exists", "mu", "forall", "nu", "bot", "top", "in", "ceil", "floor"];

/// Declared constant symbols.
///
/// Element and set variables are not declared: they are the fixed token
/// families `x<n>` and `X<n>`. An *open* signature accepts any well-formed
/// identifier as a constant, which is convenient for ad-hoc input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    constants: Vec<String>,
    open: bool,
}

impl Signature {
    pub fn new<I, S>(names: I) -> Result<Signature, SyntaxError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut sig = Signature::default();
        for name in names {
            sig.declare(name.as_ref())?;
        }
        Ok(sig)
    }

    /// A signature that accepts every identifier as a constant.
    pub fn open() -> Signature {
        Signature { constants: Vec::new(), open: true }
    }

    pub fn is_open(&self) -> bool {
        self.open
    }

    pub fn declare(&mut self, name: &str) -> Result<(), SyntaxError> {
        if !is_constant_name(name) {
            return Err(SyntaxError::InvalidConstant(name.to_string()));
        }
        if self.constants.iter().any(|c| c == name) {
            return Err(SyntaxError::DuplicateConstant(name.to_string()));
        }
        self.constants.push(name.to_string());
        Ok(())
    }

    /// Declared constants in declaration order.
    pub fn constants(&self) -> &[String] {
        &self.constants
    }

    pub fn contains(&self, name: &str) -> bool {
        self.constants.iter().any(|c| c == name) || (self.open && is_constant_name(name))
    }

    pub fn has_definedness(&self) -> bool {
        self.constants.iter().any(|c| c == super::DEFINEDNESS)
    }

    /// Parses a signature file: one constant per line, `#` comments.
    pub fn parse_file(text: &str) -> Result<Signature, SyntaxError> {
        let mut sig = Signature::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            sig.declare(line).map_err(|e| SyntaxError::AtLine(lineno + 1, Box::new(e)))?;
        }
        Ok(sig)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.constants {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses `x<n>` / `X<n>` style tokens with a canonical decimal index.
pub(crate) fn parse_var_index(tok: &str, prefix: char) -> Option<u32> {
    let digits = tok.strip_prefix(prefix)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

/// Identifier syntax for constants: a letter or `_`, then letters, digits,
/// `_`, `'` or `-`; never a keyword or a variable token.
pub fn is_constant_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else { return false };
    if !(first.is_ascii_alphabetic() || first == '_') {
        return false;
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'' || c == '-') {
        return false;
    }
    !KEYWORDS.contains(&name) && !looks_like_variable(name)
}

fn looks_like_variable(name: &str) -> bool {
    name.len() > 1 && name.starts_with(['x', 'X']) && name[1..].bytes().all(|b| b.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_variables_keywords_and_duplicates() {
        assert!(Signature::new(["c", "d", "def"]).is_ok());
        assert!(matches!(Signature::new(["x3"]), Err(SyntaxError::InvalidConstant(_))));
        assert!(matches!(Signature::new(["mu"]), Err(SyntaxError::InvalidConstant(_))));
        assert!(matches!(Signature::new(["c", "c"]), Err(SyntaxError::DuplicateConstant(_))));
        assert!(matches!(Signature::new(["x01"]), Err(SyntaxError::InvalidConstant(_))));
        assert!(Signature::new(["x0a"]).is_ok());
    }

    #[test]
    fn signature_file_with_comments() {
        let sig = Signature::parse_file("# constants\nc\n\n d  # trailing\n").unwrap();
        assert_eq!(sig.constants(), ["c", "d"]);
        let err = Signature::parse_file("c\nX1\n").unwrap_err();
        assert!(matches!(err, SyntaxError::AtLine(2, _)));
    }
}
