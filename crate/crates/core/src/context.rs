//! Application contexts with a single hole.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::syntax::sugar::{parse_sugar_with_hole, HOLE};
use crate::syntax::{render_sugar, FreeVars, Pattern, Signature, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Context {
    Box,
    ApplL(std::boxed::Box<Context>, Pattern),
    ApplR(Pattern, std::boxed::Box<Context>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("a context needs exactly one `[]`, found {0}")]
    HoleCount(usize),
    #[error("`[]` may only appear along application spines")]
    HoleUnderConnective,
}

impl Context {
    pub fn appl_l(ctx: Context, arg: Pattern) -> Context {
        Context::ApplL(std::boxed::Box::new(ctx), arg)
    }

    pub fn appl_r(arg: Pattern, ctx: Context) -> Context {
        Context::ApplR(arg, std::boxed::Box::new(ctx))
    }

    pub fn plug(&self, delta: &Pattern) -> Pattern {
        match self {
            Context::Box => delta.clone(),
            Context::ApplL(c, arg) => Pattern::app(c.plug(delta), arg.clone()),
            Context::ApplR(arg, c) => Pattern::app(arg.clone(), c.plug(delta)),
        }
    }

    pub fn free_vars(&self) -> FreeVars {
        match self {
            Context::Box => FreeVars::default(),
            Context::ApplL(c, arg) | Context::ApplR(arg, c) => {
                let mut fv = c.free_vars();
                fv.extend(&arg.free_vars());
                fv
            }
        }
    }

    /// Number of application steps between the root and the hole.
    pub fn depth(&self) -> usize {
        match self {
            Context::Box => 0,
            Context::ApplL(c, _) | Context::ApplR(_, c) => 1 + c.depth(),
        }
    }

    pub fn parse(text: &str, sig: &Signature) -> Result<Context, ContextError> {
        let p = parse_sugar_with_hole(text, sig)?;
        let holes = count_holes(&p);
        if holes != 1 {
            return Err(ContextError::HoleCount(holes));
        }
        from_marked(&p).ok_or(ContextError::HoleUnderConnective)
    }
}

pub fn plug(c: &Context, delta: &Pattern) -> Pattern {
    c.plug(delta)
}

pub fn context_fv(c: &Context) -> FreeVars {
    c.free_vars()
}

fn hole() -> Pattern {
    Pattern::Const(Arc::from(HOLE))
}

fn count_holes(p: &Pattern) -> usize {
    let mut n = 0;
    p.walk(&mut |q| {
        if matches!(q, Pattern::Const(c) if &**c == HOLE) {
            n += 1;
        }
    });
    n
}

fn from_marked(p: &Pattern) -> Option<Context> {
    match p {
        Pattern::Const(c) if &**c == HOLE => Some(Context::Box),
        Pattern::Appl(l, r) if count_holes(l) == 1 => Some(Context::appl_l(from_marked(l)?, (**r).clone())),
        Pattern::Appl(l, r) if count_holes(r) == 1 => Some(Context::appl_r((**l).clone(), from_marked(r)?)),
        _ => None,
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sugar(&self.plug(&hole())))
    }
}

/// Every context `C` with `C[target] = p`.
pub fn decompose(p: &Pattern, target: &Pattern) -> Vec<Context> {
    let mut out = Vec::new();
    if p == target {
        out.push(Context::Box);
    }
    if let Pattern::Appl(l, r) = p {
        out.extend(decompose(l, target).into_iter().map(|c| Context::appl_l(c, (**r).clone())));
        out.extend(decompose(r, target).into_iter().map(|c| Context::appl_r((**l).clone(), c)));
    }
    out
}

/// All `(C1, C2)` with `phi = !(C1[x /\ body] /\ C2[x /\ !body])`.
pub fn match_singleton(phi: &Pattern, x: u32, body: &Pattern) -> Vec<(Context, Context)> {
    let Some((first, second)) = phi.as_not().and_then(Pattern::as_and) else {
        return Vec::new();
    };
    let pos = Pattern::and(Pattern::evar(x), body.clone());
    let neg = Pattern::and(Pattern::evar(x), Pattern::not(body.clone()));
    let lefts = decompose(first, &pos);
    if lefts.is_empty() {
        return Vec::new();
    }
    let rights = decompose(second, &neg);
    lefts.iter().flat_map(|c1| rights.iter().map(move |c2| (c1.clone(), c2.clone()))).collect()
}

/// Finds the variable, body and contexts of a singleton-variable instance.
pub fn find_singleton(phi: &Pattern) -> Option<(u32, Pattern, Context, Context)> {
    let (first, _) = phi.as_not()?.as_and()?;
    let mut candidates = Vec::new();
    first.walk(&mut |q| {
        if let Some((Pattern::EVar(x), body)) = q.as_and() {
            candidates.push((*x, body.clone()));
        }
    });
    candidates.into_iter().find_map(|(x, body)| {
        let (c1, c2) = match_singleton(phi, x, &body).into_iter().next()?;
        Some((x, body, c1, c2))
    })
}
