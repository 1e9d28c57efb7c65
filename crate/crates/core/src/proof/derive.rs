use super::{check_proof, Justification, ProofError, ProofScript};
use crate::semantics::is_tautology;
use crate::syntax::Pattern;

/// Extends `script` so that it proves `psi`, given an accepted line `i`
/// proving some `phi` with `phi <-> psi` a tautology. Only tautologies and
/// modus ponens are used. Returns the extended script and the number of
/// the line proving `psi`.
pub fn derived_taut_equiv(script: &ProofScript, i: usize, psi: &Pattern) -> Result<(ProofScript, usize), ProofError> {
    let phi = script.line(i).ok_or(ProofError::NotAccepted(i))?.pattern.clone();
    if !check_proof(script).is_accepted(i) {
        return Err(ProofError::NotAccepted(i));
    }
    let iff = Pattern::iff(phi.clone(), psi.clone());
    if is_tautology(&iff) != Ok(true) {
        return Err(ProofError::NotTautEquiv);
    }
    let forward = Pattern::imp(phi, psi.clone());
    let mut out = script.clone();
    let l_iff = out.push(iff.clone(), Justification::Taut);
    let l_proj = out.push(Pattern::imp(iff, forward.clone()), Justification::Taut);
    let l_fwd = out.push(forward, Justification::MP(l_iff, l_proj));
    let l_psi = out.push(psi.clone(), Justification::MP(i, l_fwd));
    Ok((out, l_psi))
}
