use super::{evaluate, SemanticsError};
use crate::model::{ElemSet, Structure, Valuation};
use crate::syntax::Pattern;

/// A definedness operator applied to its arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefinednessOp {
    Ceil(Pattern),
    Floor(Pattern),
    Equals(Pattern, Pattern),
    Member(u32, Pattern),
}

impl DefinednessOp {
    pub fn desugar(&self) -> Pattern {
        match self {
            DefinednessOp::Ceil(p) => Pattern::ceil(p.clone()),
            DefinednessOp::Floor(p) => Pattern::floor(p.clone()),
            DefinednessOp::Equals(p, q) => Pattern::equals(p.clone(), q.clone()),
            DefinednessOp::Member(x, p) => Pattern::member(*x, p.clone()),
        }
    }
}

/// Both ways of computing a definedness operator, which agree on every
/// definedness structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DefinednessValue {
    pub desugared: ElemSet,
    pub closed_form: ElemSet,
}

pub fn eval_definedness(s: &Structure, e: &Valuation, op: &DefinednessOp) -> Result<DefinednessValue, SemanticsError> {
    if !s.is_definedness_structure() {
        return Err(SemanticsError::NotADefinednessStructure);
    }
    let full = s.full();
    let all_or_nothing = |b: bool| if b { full } else { ElemSet::EMPTY };
    let closed_form = match op {
        DefinednessOp::Ceil(p) => all_or_nothing(!evaluate(s, e, p)?.is_empty()),
        DefinednessOp::Floor(p) => all_or_nothing(evaluate(s, e, p)? == full),
        DefinednessOp::Equals(p, q) => all_or_nothing(evaluate(s, e, p)? == evaluate(s, e, q)?),
        DefinednessOp::Member(x, p) => all_or_nothing(evaluate(s, e, p)?.contains(e.element(*x))),
    };
    let desugared = evaluate(s, e, &op.desugar())?;
    Ok(DefinednessValue { desugared, closed_form })
}
