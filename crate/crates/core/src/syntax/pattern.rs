use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// An applicative matching logic pattern.
///
/// Only the seven primitive node kinds exist; every derived connective
/// (`bot`, `!`, `\/`, `forall`, `nu`, `ceil`, ...) is expanded by the
/// constructor helpers below and by the sugar parser.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// Element variable `x<n>`.
    EVar(u32),
    /// Set variable `X<n>`.
    SVar(u32),
    /// Constant symbol from the signature.
    Const(Arc<str>),
    Appl(Box<Pattern>, Box<Pattern>),
    Imp(Box<Pattern>, Box<Pattern>),
    Exists(u32, Box<Pattern>),
    Mu(u32, Box<Pattern>),
}

/// Name of the definedness constant used by `ceil`, `floor`, `=` and `in`.
pub const DEFINEDNESS: &str = "def";

/// Free variables of a pattern, split by kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeVars {
    pub element: BTreeSet<u32>,
    pub set: BTreeSet<u32>,
}

impl FreeVars {
    pub fn is_empty(&self) -> bool {
        self.element.is_empty() && self.set.is_empty()
    }

    pub fn extend(&mut self, other: &FreeVars) {
        self.element.extend(other.element.iter().copied());
        self.set.extend(other.set.iter().copied());
    }
}

impl Pattern {
    pub fn evar(n: u32) -> Pattern {
        Pattern::EVar(n)
    }

    pub fn svar(n: u32) -> Pattern {
        Pattern::SVar(n)
    }

    pub fn constant(name: &str) -> Pattern {
        Pattern::Const(Arc::from(name))
    }

    pub fn app(left: Pattern, right: Pattern) -> Pattern {
        Pattern::Appl(Box::new(left), Box::new(right))
    }

    pub fn imp(left: Pattern, right: Pattern) -> Pattern {
        Pattern::Imp(Box::new(left), Box::new(right))
    }

    pub fn exists(var: u32, body: Pattern) -> Pattern {
        Pattern::Exists(var, Box::new(body))
    }

    pub fn mu(var: u32, body: Pattern) -> Pattern {
        Pattern::Mu(var, Box::new(body))
    }

    /// `bot = mu X0 . X0`.
    pub fn bot() -> Pattern {
        Pattern::mu(0, Pattern::SVar(0))
    }

    /// `top = !bot`.
    pub fn top() -> Pattern {
        Pattern::not(Pattern::bot())
    }

    pub fn not(p: Pattern) -> Pattern {
        Pattern::imp(p, Pattern::bot())
    }

    /// `p \/ q = !p -> q`.
    pub fn or(p: Pattern, q: Pattern) -> Pattern {
        Pattern::imp(Pattern::not(p), q)
    }

    /// `p /\ q = !(!p \/ !q)`.
    pub fn and(p: Pattern, q: Pattern) -> Pattern {
        Pattern::not(Pattern::or(Pattern::not(p), Pattern::not(q)))
    }

    /// `p <-> q = (p -> q) /\ (q -> p)`.
    pub fn iff(p: Pattern, q: Pattern) -> Pattern {
        Pattern::and(Pattern::imp(p.clone(), q.clone()), Pattern::imp(q, p))
    }

    /// `forall x . p = !exists x . !p`.
    pub fn forall(var: u32, body: Pattern) -> Pattern {
        Pattern::not(Pattern::exists(var, Pattern::not(body)))
    }

    /// `nu X . p = !mu X . !p[!X/X]`.
    pub fn nu(var: u32, body: Pattern) -> Pattern {
        let negated = crate::substitution::subst_free(
            &body,
            crate::substitution::VarRef::Set(var),
            &Pattern::not(Pattern::SVar(var)),
        );
        Pattern::not(Pattern::mu(var, Pattern::not(negated)))
    }

    /// `ceil(p) = def p`.
    pub fn ceil(p: Pattern) -> Pattern {
        Pattern::app(Pattern::constant(DEFINEDNESS), p)
    }

    /// `floor(p) = !ceil(!p)`.
    pub fn floor(p: Pattern) -> Pattern {
        Pattern::not(Pattern::ceil(Pattern::not(p)))
    }

    /// `p = q` is `floor(p <-> q)`.
    pub fn equals(p: Pattern, q: Pattern) -> Pattern {
        Pattern::floor(Pattern::iff(p, q))
    }

    /// `x in p` is `ceil(x /\ p)`.
    pub fn member(x: u32, p: Pattern) -> Pattern {
        Pattern::ceil(Pattern::and(Pattern::EVar(x), p))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Pattern::EVar(_) | Pattern::SVar(_) | Pattern::Const(_))
    }

    /// Any `mu X . X`, whatever the index; it always denotes the empty set.
    pub fn is_bottom_shaped(&self) -> bool {
        matches!(self, Pattern::Mu(v, body) if **body == Pattern::SVar(*v))
    }

    /// Length of the core Polish token string.
    pub fn len(&self) -> usize {
        match self {
            Pattern::EVar(_) | Pattern::SVar(_) | Pattern::Const(_) => 1,
            Pattern::Appl(l, r) | Pattern::Imp(l, r) => 1 + l.len() + r.len(),
            Pattern::Exists(_, b) | Pattern::Mu(_, b) => 2 + b.len(),
        }
    }

    /// Always false: patterns have positive length.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn free_vars(&self) -> FreeVars {
        let mut out = FreeVars::default();
        self.collect_free(&mut Vec::new(), &mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound_e: &mut Vec<u32>, bound_s: &mut Vec<u32>, out: &mut FreeVars) {
        match self {
            Pattern::EVar(n) => {
                if !bound_e.contains(n) {
                    out.element.insert(*n);
                }
            }
            Pattern::SVar(n) => {
                if !bound_s.contains(n) {
                    out.set.insert(*n);
                }
            }
            Pattern::Const(_) => {}
            Pattern::Appl(l, r) | Pattern::Imp(l, r) => {
                l.collect_free(bound_e, bound_s, out);
                r.collect_free(bound_e, bound_s, out);
            }
            Pattern::Exists(v, b) => {
                bound_e.push(*v);
                b.collect_free(bound_e, bound_s, out);
                bound_e.pop();
            }
            Pattern::Mu(v, b) => {
                bound_s.push(*v);
                b.collect_free(bound_e, bound_s, out);
                bound_s.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every variable token of the pattern, free, bound or binder head.
    pub fn all_vars(&self) -> FreeVars {
        let mut out = FreeVars::default();
        self.walk(&mut |p| match p {
            Pattern::EVar(n) | Pattern::Exists(n, _) => {
                out.element.insert(*n);
            }
            Pattern::SVar(n) | Pattern::Mu(n, _) => {
                out.set.insert(*n);
            }
            _ => {}
        });
        out
    }

    /// Constant names occurring in the pattern.
    pub fn constants(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.walk(&mut |p| {
            if let Pattern::Const(c) = p {
                out.insert(c.clone());
            }
        });
        out
    }

    /// Pre-order traversal over all subpattern occurrences.
    pub fn walk<F: FnMut(&Pattern)>(&self, f: &mut F) {
        f(self);
        match self {
            Pattern::Appl(l, r) | Pattern::Imp(l, r) => {
                l.walk(f);
                r.walk(f);
            }
            Pattern::Exists(_, b) | Pattern::Mu(_, b) => b.walk(f),
            _ => {}
        }
    }

    /// The set of subpatterns; always contains `self`.
    pub fn subpatterns(&self) -> BTreeSet<Pattern> {
        let mut out = BTreeSet::new();
        self.walk(&mut |p| {
            out.insert(p.clone());
        });
        out
    }

    /// Destructures `p -> bot` (canonical bottom only).
    pub fn as_not(&self) -> Option<&Pattern> {
        match self {
            Pattern::Imp(l, r) if r.is_canonical_bot() => Some(l),
            _ => None,
        }
    }

    pub fn is_canonical_bot(&self) -> bool {
        matches!(self, Pattern::Mu(0, b) if **b == Pattern::SVar(0))
    }

    /// Destructures `!p -> q` into `(p, q)`.
    pub fn as_or(&self) -> Option<(&Pattern, &Pattern)> {
        match self {
            Pattern::Imp(l, r) => l.as_not().map(|p| (p, &**r)),
            _ => None,
        }
    }

    /// Destructures the expansion of `p /\ q`.
    pub fn as_and(&self) -> Option<(&Pattern, &Pattern)> {
        let (nnp, nq) = match self.as_not()? {
            Pattern::Imp(l, r) => (&**l, &**r),
            _ => return None,
        };
        let p = nnp.as_not()?.as_not()?;
        let q = nq.as_not()?;
        Some((p, q))
    }

    /// Destructures the expansion of `p <-> q`.
    pub fn as_iff(&self) -> Option<(&Pattern, &Pattern)> {
        let (a, b) = self.as_and()?;
        match (a, b) {
            (Pattern::Imp(p, q), Pattern::Imp(q2, p2)) if p == p2 && q == q2 => Some((p, q)),
            _ => None,
        }
    }

    /// Destructures `!exists x . !p` into `(x, p)`.
    pub fn as_forall(&self) -> Option<(u32, &Pattern)> {
        match self.as_not()? {
            Pattern::Exists(v, b) => b.as_not().map(|p| (*v, p)),
            _ => None,
        }
    }

    /// Destructures `def p` into `p`.
    pub fn as_ceil(&self) -> Option<&Pattern> {
        match self {
            Pattern::Appl(l, r) if matches!(&**l, Pattern::Const(c) if &**c == DEFINEDNESS) => Some(r),
            _ => None,
        }
    }

    /// Destructures `!ceil(!p)` into `p`.
    pub fn as_floor(&self) -> Option<&Pattern> {
        self.as_not()?.as_ceil()?.as_not()
    }

    /// Destructures `p = q`.
    pub fn as_equals(&self) -> Option<(&Pattern, &Pattern)> {
        self.as_floor()?.as_iff()
    }

    /// Destructures `x in p`.
    pub fn as_member(&self) -> Option<(u32, &Pattern)> {
        match self.as_ceil()?.as_and()? {
            (Pattern::EVar(x), p) => Some((*x, p)),
            _ => None,
        }
    }

    /// Recovers `(X, p)` from the expansion of `nu X . p`, when the shape
    /// is exactly what [`Pattern::nu`] produces.
    pub fn as_nu(&self) -> Option<(u32, Pattern)> {
        let (var, inner) = match self.as_not()? {
            Pattern::Mu(v, b) => (*v, b.as_not()?),
            _ => return None,
        };
        let body = unwrap_negated_var(inner, var);
        (Pattern::nu(var, body.clone()) == *self).then_some((var, body))
    }
}

/// Replaces free occurrences of `!X` by `X`; the inverse of the
/// substitution used by `nu` whenever that substitution produced `p`.
fn unwrap_negated_var(p: &Pattern, var: u32) -> Pattern {
    if let Some(Pattern::SVar(v)) = p.as_not() {
        if *v == var {
            return Pattern::SVar(var);
        }
    }
    match p {
        Pattern::Appl(l, r) => Pattern::app(unwrap_negated_var(l, var), unwrap_negated_var(r, var)),
        Pattern::Imp(l, r) => Pattern::imp(unwrap_negated_var(l, var), unwrap_negated_var(r, var)),
        Pattern::Exists(v, b) => Pattern::exists(*v, unwrap_negated_var(b, var)),
        Pattern::Mu(v, _) if *v == var => p.clone(),
        Pattern::Mu(v, b) => Pattern::mu(*v, unwrap_negated_var(b, var)),
        _ => p.clone(),
    }
}

/// Left-nested conjunction `((p1 /\ p2) /\ ...) /\ pn`.
pub fn fold_conj(ps: &[Pattern]) -> Result<Pattern, EmptyList> {
    fold(ps, Pattern::and)
}

/// Left-nested disjunction `((p1 \/ p2) \/ ...) \/ pn`.
pub fn fold_disj(ps: &[Pattern]) -> Result<Pattern, EmptyList> {
    fold(ps, Pattern::or)
}

fn fold(ps: &[Pattern], op: fn(Pattern, Pattern) -> Pattern) -> Result<Pattern, EmptyList> {
    let (first, rest) = ps.split_first().ok_or(EmptyList)?;
    Ok(rest.iter().cloned().fold(first.clone(), op))
}

/// A finite conjunction or disjunction needs at least one pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("finite conjunction/disjunction of an empty list")]
pub struct EmptyList;

impl fmt::Display for Pattern {
    /// Core Polish form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks = super::token::tokens(self);
        write!(f, "{toks}")
    }
}
