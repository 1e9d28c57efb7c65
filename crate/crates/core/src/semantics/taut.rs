use std::collections::BTreeMap;

use super::SemanticsError;
use crate::syntax::Pattern;

/// Most distinct atoms a skeleton may have before truth tables are refused.
pub const SKELETON_LIMIT: usize = 20;

/// A propositional formula over `⊥` and `→`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prop {
    Bot,
    Atom(usize),
    Imp(Box<Prop>, Box<Prop>),
}

impl Prop {
    pub fn eval(&self, assignment: u64) -> bool {
        match self {
            Prop::Bot => false,
            Prop::Atom(i) => assignment >> i & 1 == 1,
            Prop::Imp(l, r) => !l.eval(assignment) || r.eval(assignment),
        }
    }
}

/// The propositional skeleton of a pattern: maximal subpatterns that are not
/// implications become atoms, and every `mu X . X` becomes `⊥`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub atoms: Vec<Pattern>,
    pub formula: Prop,
}

impl Skeleton {
    pub fn of(p: &Pattern) -> Skeleton {
        let mut index = BTreeMap::new();
        let mut atoms = Vec::new();
        let formula = build(p, &mut index, &mut atoms);
        Skeleton { atoms, formula }
    }

    pub fn is_tautology(&self) -> Result<bool, SemanticsError> {
        if self.atoms.len() > SKELETON_LIMIT {
            return Err(SemanticsError::SkeletonTooLarge { atoms: self.atoms.len(), limit: SKELETON_LIMIT });
        }
        Ok((0..1u64 << self.atoms.len()).all(|a| self.formula.eval(a)))
    }
}

fn build(p: &Pattern, index: &mut BTreeMap<Pattern, usize>, atoms: &mut Vec<Pattern>) -> Prop {
    if p.is_bottom_shaped() {
        return Prop::Bot;
    }
    if let Pattern::Imp(l, r) = p {
        return Prop::Imp(Box::new(build(l, index, atoms)), Box::new(build(r, index, atoms)));
    }
    let i = *index.entry(p.clone()).or_insert_with(|| {
        atoms.push(p.clone());
        atoms.len() - 1
    });
    Prop::Atom(i)
}

pub fn is_tautology(p: &Pattern) -> Result<bool, SemanticsError> {
    Skeleton::of(p).is_tautology()
}
