//! Free, bound and capture-avoiding substitution.

use std::fmt;

use thiserror::Error;

use crate::syntax::{parse_var_index, FreeVars, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarRef {
    Element(u32),
    Set(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Element,
    Set,
}

impl VarRef {
    pub fn kind(self) -> VarKind {
        match self {
            VarRef::Element(_) => VarKind::Element,
            VarRef::Set(_) => VarKind::Set,
        }
    }

    pub fn index(self) -> u32 {
        match self {
            VarRef::Element(n) | VarRef::Set(n) => n,
        }
    }

    pub fn pattern(self) -> Pattern {
        match self {
            VarRef::Element(n) => Pattern::EVar(n),
            VarRef::Set(n) => Pattern::SVar(n),
        }
    }

    /// Interprets `x<n>` or `X<n>`.
    pub fn parse(s: &str) -> Option<VarRef> {
        parse_var_index(s, 'x').map(VarRef::Element).or_else(|| parse_var_index(s, 'X').map(VarRef::Set))
    }

    fn occurs_free_in(self, p: &Pattern) -> bool {
        let fv = p.free_vars();
        match self {
            VarRef::Element(n) => fv.element.contains(&n),
            VarRef::Set(n) => fv.set.contains(&n),
        }
    }
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarRef::Element(n) => write!(f, "x{n}"),
            VarRef::Set(n) => write!(f, "X{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("cannot rename {0} to {1}: variables of different kinds")]
    KindMismatch(VarRef, VarRef),
}

/// True when no free variable of `delta` would be captured by substituting
/// it for the free occurrences of `v` in `phi`.
pub fn is_free_for(v: VarRef, delta: &Pattern, phi: &Pattern) -> bool {
    free_for(v, &delta.free_vars(), phi, false)
}

fn free_for(v: VarRef, fvd: &FreeVars, p: &Pattern, capturing: bool) -> bool {
    match p {
        Pattern::EVar(n) => !(capturing && v == VarRef::Element(*n)),
        Pattern::SVar(n) => !(capturing && v == VarRef::Set(*n)),
        Pattern::Const(_) => true,
        Pattern::Appl(l, r) | Pattern::Imp(l, r) => free_for(v, fvd, l, capturing) && free_for(v, fvd, r, capturing),
        Pattern::Exists(z, b) => v == VarRef::Element(*z) || free_for(v, fvd, b, capturing || fvd.element.contains(z)),
        Pattern::Mu(z, b) => v == VarRef::Set(*z) || free_for(v, fvd, b, capturing || fvd.set.contains(z)),
    }
}

/// Replaces every free occurrence of `v` in `phi` by `delta`. Capture is
/// not prevented.
pub fn subst_free(phi: &Pattern, v: VarRef, delta: &Pattern) -> Pattern {
    match phi {
        Pattern::EVar(n) if v == VarRef::Element(*n) => delta.clone(),
        Pattern::SVar(n) if v == VarRef::Set(*n) => delta.clone(),
        Pattern::EVar(_) | Pattern::SVar(_) | Pattern::Const(_) => phi.clone(),
        Pattern::Appl(l, r) => Pattern::app(subst_free(l, v, delta), subst_free(r, v, delta)),
        Pattern::Imp(l, r) => Pattern::imp(subst_free(l, v, delta), subst_free(r, v, delta)),
        Pattern::Exists(z, _) if v == VarRef::Element(*z) => phi.clone(),
        Pattern::Mu(z, _) if v == VarRef::Set(*z) => phi.clone(),
        Pattern::Exists(z, b) => Pattern::exists(*z, subst_free(b, v, delta)),
        Pattern::Mu(z, b) => Pattern::mu(*z, subst_free(b, v, delta)),
    }
}

/// Renames the bound occurrences of `v` (binder heads included) to `w`.
pub fn subst_bound(phi: &Pattern, v: VarRef, w: VarRef) -> Result<Pattern, SubstError> {
    if v.kind() != w.kind() {
        return Err(SubstError::KindMismatch(v, w));
    }
    if v == w {
        return Ok(phi.clone());
    }
    Ok(rename_bound(phi, v, w))
}

fn rename_bound(phi: &Pattern, v: VarRef, w: VarRef) -> Pattern {
    match phi {
        Pattern::EVar(_) | Pattern::SVar(_) | Pattern::Const(_) => phi.clone(),
        Pattern::Appl(l, r) => Pattern::app(rename_bound(l, v, w), rename_bound(r, v, w)),
        Pattern::Imp(l, r) => Pattern::imp(rename_bound(l, v, w), rename_bound(r, v, w)),
        Pattern::Exists(z, b) if v == VarRef::Element(*z) => {
            Pattern::exists(w.index(), subst_free(&rename_bound(b, v, w), v, &w.pattern()))
        }
        Pattern::Mu(z, b) if v == VarRef::Set(*z) => {
            Pattern::mu(w.index(), subst_free(&rename_bound(b, v, w), v, &w.pattern()))
        }
        Pattern::Exists(z, b) => Pattern::exists(*z, rename_bound(b, v, w)),
        Pattern::Mu(z, b) => Pattern::mu(*z, rename_bound(b, v, w)),
    }
}

/// Indices `used_max + 1 ..= used_max + count` of the given kind.
pub fn fresh_variables(used_max: u32, count: usize, kind: VarKind) -> Vec<VarRef> {
    (1..=count as u32)
        .map(|i| match kind {
            VarKind::Element => VarRef::Element(used_max + i),
            VarKind::Set => VarRef::Set(used_max + i),
        })
        .collect()
}

/// Substitution that first renames every variable bound in `phi` that also
/// occurs in `delta` to a fresh one.
pub fn subst_capture_avoiding(phi: &Pattern, v: VarRef, delta: &Pattern) -> Pattern {
    if is_free_for(v, delta, phi) {
        return subst_free(phi, v, delta);
    }
    let bound = binder_vars(phi);
    let in_phi = phi.all_vars();
    let in_delta = delta.all_vars();
    let clash_elem: Vec<u32> = bound.element.intersection(&in_delta.element).copied().collect();
    let clash_set: Vec<u32> = bound.set.intersection(&in_delta.set).copied().collect();
    let max = |a: &std::collections::BTreeSet<u32>, b: &std::collections::BTreeSet<u32>| {
        a.iter().chain(b).copied().max().unwrap_or(0)
    };
    let fresh_elem = fresh_variables(max(&in_phi.element, &in_delta.element), clash_elem.len(), VarKind::Element);
    let fresh_set = fresh_variables(max(&in_phi.set, &in_delta.set), clash_set.len(), VarKind::Set);

    let mut theta = phi.clone();
    for (u, z) in clash_elem.iter().zip(&fresh_elem).rev() {
        theta = rename_bound(&theta, VarRef::Element(*u), *z);
    }
    for (u, z) in clash_set.iter().zip(&fresh_set).rev() {
        theta = rename_bound(&theta, VarRef::Set(*u), *z);
    }
    subst_free(&theta, v, delta)
}

/// Variables with a bound occurrence, which are exactly the binder heads.
fn binder_vars(p: &Pattern) -> FreeVars {
    let mut out = FreeVars::default();
    p.walk(&mut |q| match q {
        Pattern::Exists(z, _) => {
            out.element.insert(*z);
        }
        Pattern::Mu(z, _) => {
            out.set.insert(*z);
        }
        _ => {}
    });
    out
}

/// Whether `v` has a free occurrence in `p`.
pub fn occurs_free(v: VarRef, p: &Pattern) -> bool {
    v.occurs_free_in(p)
}
