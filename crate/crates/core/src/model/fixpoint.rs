use super::{ElemSet, ModelError};

/// Largest universe for which powerset enumeration is attempted.
pub const ENUMERATION_CAP: usize = 12;

/// A total map on the subsets of a universe of `size` elements.
pub struct SetFunction<'a> {
    size: usize,
    f: Box<dyn Fn(ElemSet) -> ElemSet + 'a>,
}

impl<'a> SetFunction<'a> {
    pub fn new(size: usize, f: impl Fn(ElemSet) -> ElemSet + 'a) -> SetFunction<'a> {
        SetFunction { size, f: Box::new(f) }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, b: ElemSet) -> ElemSet {
        (self.f)(b)
    }

    fn table(&self, cap: usize) -> Result<Vec<ElemSet>, ModelError> {
        if self.size > cap {
            return Err(ModelError::UniverseTooLarge { size: self.size, cap });
        }
        Ok(ElemSet::all_subsets(self.size).map(|b| self.apply(b)).collect())
    }
}

/// The intersection of all prefixpoints `F(B) ⊆ B`.
pub fn kt_lfp(f: &SetFunction) -> Result<ElemSet, ModelError> {
    kt_lfp_capped(f, ENUMERATION_CAP)
}

pub fn kt_lfp_capped(f: &SetFunction, cap: usize) -> Result<ElemSet, ModelError> {
    let table = f.table(cap)?;
    Ok(table
        .iter()
        .enumerate()
        .map(|(b, fb)| (ElemSet(b as u64), *fb))
        .filter(|(b, fb)| fb.is_subset(*b))
        .fold(ElemSet::full(f.size), |acc, (b, _)| acc.intersection(b)))
}

/// The union of all postfixpoints `C ⊆ F(C)`.
pub fn kt_gfp(f: &SetFunction) -> Result<ElemSet, ModelError> {
    kt_gfp_capped(f, ENUMERATION_CAP)
}

pub fn kt_gfp_capped(f: &SetFunction, cap: usize) -> Result<ElemSet, ModelError> {
    let table = f.table(cap)?;
    Ok(table
        .iter()
        .enumerate()
        .map(|(c, fc)| (ElemSet(c as u64), *fc))
        .filter(|(c, fc)| c.is_subset(*fc))
        .fold(ElemSet::EMPTY, |acc, (c, _)| acc.union(c)))
}

/// Iterates `F` from the empty set until it stabilises.
pub fn kleene_lfp(f: &SetFunction) -> Result<ElemSet, ModelError> {
    let mut current = ElemSet::EMPTY;
    loop {
        let next = f.apply(current);
        if next == current {
            return Ok(current);
        }
        if !current.is_subset(next) {
            return Err(ModelError::NonMonotoneDetected);
        }
        current = next;
    }
}

/// Iterates `F` from the whole universe until it stabilises.
pub fn kleene_gfp(f: &SetFunction) -> Result<ElemSet, ModelError> {
    let mut current = ElemSet::full(f.size);
    loop {
        let next = f.apply(current);
        if next == current {
            return Ok(current);
        }
        if !next.is_subset(current) {
            return Err(ModelError::NonMonotoneDetected);
        }
        current = next;
    }
}

/// Checks `F(B) ⊆ F(B ∪ {a})` for every `B` and `a`, which is equivalent
/// to monotonicity on a finite powerset.
pub fn is_monotone(f: &SetFunction) -> Result<bool, ModelError> {
    is_monotone_capped(f, ENUMERATION_CAP)
}

pub fn is_monotone_capped(f: &SetFunction, cap: usize) -> Result<bool, ModelError> {
    let table = f.table(cap)?;
    Ok((0..table.len()).all(|b| (0..f.size).all(|a| b >> a & 1 == 1 || table[b].is_subset(table[b | 1 << a]))))
}

/// All exact fixpoints `F(B) = B`.
pub fn fixpoints(f: &SetFunction) -> Result<Vec<ElemSet>, ModelError> {
    let table = f.table(ENUMERATION_CAP)?;
    Ok(table.iter().enumerate().filter(|(b, fb)| **fb == ElemSet(*b as u64)).map(|(_, fb)| *fb).collect())
}
