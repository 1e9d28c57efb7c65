use thiserror::Error;

use super::{tokens, Pattern, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OccurrenceKind {
    FreeElement,
    BoundElement,
    FreeSet,
    BoundSet,
    NotAVariable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PositionError {
    #[error("position {0} does not hold `exists` or `mu`")]
    NotABinder(usize),
    #[error("position {0} does not hold `appl` or `imp`")]
    NotABinary(usize),
    #[error("position {0} is past the end of the pattern")]
    OutOfRange(usize),
}

/// For every position `i`, the last position of the subpattern starting at
/// `i`. Binder-head variables are their own one-token scope.
pub fn scope_ends(p: &Pattern) -> Vec<usize> {
    let mut ends = vec![0; p.len()];
    fill_ends(p, 0, &mut ends);
    ends
}

fn fill_ends(p: &Pattern, at: usize, ends: &mut [usize]) -> usize {
    let end = match p {
        Pattern::EVar(_) | Pattern::SVar(_) | Pattern::Const(_) => at,
        Pattern::Appl(l, r) | Pattern::Imp(l, r) => {
            let mid = fill_ends(l, at + 1, ends);
            fill_ends(r, mid + 1, ends)
        }
        Pattern::Exists(_, b) | Pattern::Mu(_, b) => {
            ends[at + 1] = at + 1;
            fill_ends(b, at + 2, ends)
        }
    };
    ends[at] = end;
    end
}

pub fn binder_scope(p: &Pattern, i: usize) -> Result<usize, PositionError> {
    let toks = tokens(p);
    match toks.get(i) {
        None => Err(PositionError::OutOfRange(i)),
        Some(t) if t.is_binder() => Ok(scope_ends(p)[i]),
        Some(_) => Err(PositionError::NotABinder(i)),
    }
}

pub fn binary_scopes(p: &Pattern, i: usize) -> Result<(usize, usize), PositionError> {
    let toks = tokens(p);
    match toks.get(i) {
        None => Err(PositionError::OutOfRange(i)),
        Some(t) if t.is_binary() => {
            let ends = scope_ends(p);
            Ok((ends[i + 1], ends[i]))
        }
        Some(_) => Err(PositionError::NotABinary(i)),
    }
}

pub fn occurrence_kind(p: &Pattern, k: usize) -> Result<OccurrenceKind, PositionError> {
    let toks = tokens(p);
    let tok = toks.get(k).ok_or(PositionError::OutOfRange(k))?;
    let ends = scope_ends(p);
    let bound_by = |binder: &Token, idx: u32| {
        (0..k).any(|i| toks[i] == *binder && toks[i + 1] == var_token(binder, idx) && ends[i] >= k)
    };
    Ok(match tok {
        Token::EVar(n) => {
            if bound_by(&Token::Exists, *n) {
                OccurrenceKind::BoundElement
            } else {
                OccurrenceKind::FreeElement
            }
        }
        Token::SVar(n) => {
            if bound_by(&Token::Mu, *n) {
                OccurrenceKind::BoundSet
            } else {
                OccurrenceKind::FreeSet
            }
        }
        _ => OccurrenceKind::NotAVariable,
    })
}

fn var_token(binder: &Token, idx: u32) -> Token {
    if *binder == Token::Exists {
        Token::EVar(idx)
    } else {
        Token::SVar(idx)
    }
}

/// The number of left implication scopes enclosing position `k`, counted
/// from the innermost `mu X` above it (or from the root).
pub fn n_left(p: &Pattern, x: u32, k: usize) -> usize {
    if k >= p.len() {
        return 0;
    }
    let mut counts = vec![None; p.len()];
    fill_left(p, x, 0, 0, &mut counts);
    counts[k].unwrap_or(0)
}

/// Positions under a `mu X` stay `None`.
fn fill_left(p: &Pattern, x: u32, at: usize, depth: usize, out: &mut [Option<usize>]) -> usize {
    match p {
        Pattern::EVar(_) | Pattern::SVar(_) | Pattern::Const(_) => {
            out[at] = Some(depth);
            at
        }
        Pattern::Appl(l, r) => {
            let mid = fill_left(l, x, at + 1, depth, out);
            fill_left(r, x, mid + 1, depth, out)
        }
        Pattern::Imp(l, r) => {
            let mid = fill_left(l, x, at + 1, depth + 1, out);
            fill_left(r, x, mid + 1, depth, out)
        }
        Pattern::Mu(v, b) if *v == x => at + 1 + b.len(),
        Pattern::Exists(_, b) | Pattern::Mu(_, b) => fill_left(b, x, at + 2, depth, out),
    }
}

/// Parities of `n_left` over the free occurrences of `X{x}`.
fn free_parities(p: &Pattern, x: u32) -> (bool, bool) {
    let mut counts = vec![None; p.len()];
    fill_left(p, x, 0, 0, &mut counts);
    let toks = tokens(p);
    let (mut all_even, mut all_odd) = (true, true);
    for (t, count) in toks.as_slice().iter().zip(&counts) {
        if let (Token::SVar(v), Some(n)) = (t, count) {
            if *v != x {
                continue;
            }
            if n % 2 == 0 {
                all_odd = false;
            } else {
                all_even = false;
            }
        }
    }
    (all_even, all_odd)
}

pub fn is_positive_in(p: &Pattern, x: u32) -> bool {
    free_parities(p, x).0
}

pub fn is_negative_in(p: &Pattern, x: u32) -> bool {
    free_parities(p, x).1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c() -> Pattern {
        Pattern::constant("c")
    }

    #[test]
    fn scopes() {
        let p = Pattern::exists(0, Pattern::imp(Pattern::evar(0), Pattern::evar(1)));
        assert_eq!(binder_scope(&p, 0), Ok(4));
        assert_eq!(binder_scope(&p, 2), Err(PositionError::NotABinder(2)));
        let p = Pattern::imp(Pattern::exists(0, Pattern::evar(0)), c());
        assert_eq!(binder_scope(&p, 1), Ok(3));
        let p = Pattern::app(Pattern::imp(Pattern::evar(0), Pattern::evar(1)), c());
        assert_eq!(binary_scopes(&p, 0), Ok((3, 4)));
        let p = Pattern::imp(Pattern::evar(0), Pattern::app(Pattern::evar(1), Pattern::evar(2)));
        assert_eq!(binary_scopes(&p, 2), Ok((3, 4)));
        assert_eq!(binary_scopes(&p, 9), Err(PositionError::OutOfRange(9)));
    }

    #[test]
    fn occurrences() {
        let p = Pattern::exists(0, Pattern::evar(0));
        assert_eq!(occurrence_kind(&p, 2), Ok(OccurrenceKind::BoundElement));
        assert_eq!(occurrence_kind(&p, 1), Ok(OccurrenceKind::BoundElement));
        assert_eq!(occurrence_kind(&p, 0), Ok(OccurrenceKind::NotAVariable));
        let p = Pattern::imp(Pattern::evar(0), Pattern::exists(0, Pattern::evar(1)));
        assert_eq!(occurrence_kind(&p, 1), Ok(OccurrenceKind::FreeElement));
        let p = Pattern::mu(0, Pattern::imp(Pattern::svar(0), Pattern::svar(1)));
        assert_eq!(occurrence_kind(&p, 4), Ok(OccurrenceKind::FreeSet));
        assert_eq!(occurrence_kind(&p, 3), Ok(OccurrenceKind::BoundSet));
        assert_eq!(occurrence_kind(&p, 5), Err(PositionError::OutOfRange(5)));
    }

    #[test]
    fn left_counter() {
        let x = Pattern::svar(0);
        let p = Pattern::imp(x.clone(), Pattern::imp(x.clone(), Pattern::mu(1, Pattern::svar(1))));
        assert_eq!(n_left(&p, 0, 1), 1);
        assert_eq!(n_left(&p, 0, 3), 1);
        let p = Pattern::imp(Pattern::imp(x, c()), c());
        assert_eq!(n_left(&p, 0, 2), 2);
        assert_eq!(n_left(&p, 0, 40), 0);
    }

    #[test]
    fn polarity() {
        let x = Pattern::svar(0);
        let neg = Pattern::imp(x.clone(), Pattern::not(x.clone()));
        assert!(is_negative_in(&neg, 0));
        assert!(!is_positive_in(&neg, 0));
        let pos = Pattern::not(Pattern::not(x));
        assert!(is_positive_in(&pos, 0));
        let mixed = Pattern::app(neg, pos);
        assert!(!is_positive_in(&mixed, 0) && !is_negative_in(&mixed, 0));
        assert!(is_positive_in(&c(), 0) && is_negative_in(&c(), 0));
    }
}
