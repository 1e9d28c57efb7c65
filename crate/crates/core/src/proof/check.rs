use std::fmt;

use super::{Justification, ProofLine, ProofScript};
use crate::context::match_singleton;
use crate::semantics::{is_tautology, SemanticsError};
use crate::substitution::{is_free_for, subst_free, VarRef};
use crate::syntax::{is_positive_in, render_sugar, Pattern};

/// Stable identifiers for why a line was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReasonCode {
    NotTautology,
    SkeletonTooLarge,
    Shape,
    SubstMismatch,
    NotFreeFor,
    NotPositive,
    VarFree,
    NoSingletonMatch,
    PremiseMismatch,
    RejectedPremise,
    BadReference,
    HypUnknown,
    HypMismatch,
}

impl ReasonCode {
    pub const ALL: [ReasonCode; 13] = [
        ReasonCode::NotTautology,
        ReasonCode::SkeletonTooLarge,
        ReasonCode::Shape,
        ReasonCode::SubstMismatch,
        ReasonCode::NotFreeFor,
        ReasonCode::NotPositive,
        ReasonCode::VarFree,
        ReasonCode::NoSingletonMatch,
        ReasonCode::PremiseMismatch,
        ReasonCode::RejectedPremise,
        ReasonCode::BadReference,
        ReasonCode::HypUnknown,
        ReasonCode::HypMismatch,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReasonCode::NotTautology => "not-tautology",
            ReasonCode::SkeletonTooLarge => "skeleton-too-large",
            ReasonCode::Shape => "shape",
            ReasonCode::SubstMismatch => "subst-mismatch",
            ReasonCode::NotFreeFor => "not-free-for",
            ReasonCode::NotPositive => "not-positive",
            ReasonCode::VarFree => "var-free",
            ReasonCode::NoSingletonMatch => "no-singleton-match",
            ReasonCode::PremiseMismatch => "premise-mismatch",
            ReasonCode::RejectedPremise => "rejected-premise",
            ReasonCode::BadReference => "bad-reference",
            ReasonCode::HypUnknown => "hyp-unknown",
            ReasonCode::HypMismatch => "hyp-mismatch",
        }
    }

    pub fn parse(s: &str) -> Option<ReasonCode> {
        ReasonCode::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub code: ReasonCode,
    pub detail: String,
}

fn reject(code: ReasonCode, detail: impl Into<String>) -> Result<(), Rejection> {
    Err(Rejection { code, detail: detail.into() })
}

fn shape(expected: &str) -> Rejection {
    Rejection { code: ReasonCode::Shape, detail: format!("expected a pattern of the form {expected}") }
}

/// The consequence relation a proof is guaranteed to be sound for, from
/// the rules it uses. Ordered from strongest to weakest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Strong,
    Local,
    Global,
}

impl Level {
    pub fn of(j: &Justification) -> Level {
        match j {
            Justification::GenExists(_) | Justification::SubstSet { .. } => Level::Global,
            Justification::FrameL(_) | Justification::FrameR(_) | Justification::KT(_) => Level::Local,
            _ => Level::Strong,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Strong => "strong",
            Level::Local => "local",
            Level::Global => "global",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineVerdict {
    pub line: usize,
    pub justification: String,
    pub result: Result<(), Rejection>,
}

impl LineVerdict {
    pub fn accepted(&self) -> bool {
        self.result.is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub lines: Vec<LineVerdict>,
    pub overall: bool,
    pub level: Level,
}

impl CheckReport {
    pub fn is_accepted(&self, line: usize) -> bool {
        line.checked_sub(1).and_then(|i| self.lines.get(i)).is_some_and(LineVerdict::accepted)
    }

    /// Reason codes of all rejected lines, in line order.
    pub fn reasons(&self) -> Vec<ReasonCode> {
        self.lines.iter().filter_map(|v| v.result.as_ref().err().map(|r| r.code)).collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.lines {
            match &v.result {
                Ok(()) => writeln!(f, "line {}: ok ({})", v.line, v.justification)?,
                Err(r) => writeln!(f, "line {}: REJECTED [{}] {}", v.line, r.code, r.detail)?,
            }
        }
        writeln!(f, "RESULT: {}", if self.overall { "accepted" } else { "rejected" })?;
        writeln!(f, "LEVEL: {}", self.level)
    }
}

/// Checks an axiom instance.
pub fn check_axiom(p: &Pattern, j: &Justification) -> Result<(), Rejection> {
    match j {
        Justification::Taut => match is_tautology(p) {
            Ok(true) => Ok(()),
            Ok(false) => reject(ReasonCode::NotTautology, "the propositional skeleton is not a tautology"),
            Err(SemanticsError::SkeletonTooLarge { atoms, limit }) => {
                reject(ReasonCode::SkeletonTooLarge, format!("{atoms} atoms exceed the limit of {limit}"))
            }
            Err(e) => reject(ReasonCode::NotTautology, e.to_string()),
        },
        Justification::AxExists { x, y } => {
            let Pattern::Imp(lhs, rhs) = p else { return Err(shape("psi -> exists x . phi")) };
            let Pattern::Exists(bound, phi) = &**rhs else { return Err(shape("psi -> exists x . phi")) };
            if bound != x {
                return reject(ReasonCode::Shape, format!("the quantifier binds x{bound}, not x{x}"));
            }
            let v = VarRef::Element(*x);
            let expected = subst_free(phi, v, &Pattern::evar(*y));
            if **lhs != expected {
                return reject(
                    ReasonCode::SubstMismatch,
                    format!("the left side should be {}", render_sugar(&expected)),
                );
            }
            if !is_free_for(v, &Pattern::evar(*y), phi) {
                return reject(ReasonCode::NotFreeFor, format!("x{y} would be captured when substituted for x{x}"));
            }
            Ok(())
        }
        Justification::AxPropBotL | Justification::AxPropBotR => {
            let form = if *j == Justification::AxPropBotL { "phi bot -> bot" } else { "bot phi -> bot" };
            let Pattern::Imp(lhs, rhs) = p else { return Err(shape(form)) };
            let Pattern::Appl(l, r) = &**lhs else { return Err(shape(form)) };
            let hole = if *j == Justification::AxPropBotL { r } else { l };
            if !rhs.is_canonical_bot() || !hole.is_canonical_bot() {
                return Err(shape(form));
            }
            Ok(())
        }
        Justification::AxPropOrL | Justification::AxPropOrR => {
            let left = *j == Justification::AxPropOrL;
            let form = if left {
                "(phi \\/ psi) chi -> phi chi \\/ psi chi"
            } else {
                "chi (phi \\/ psi) -> chi phi \\/ chi psi"
            };
            let Pattern::Imp(lhs, rhs) = p else { return Err(shape(form)) };
            let Pattern::Appl(l, r) = &**lhs else { return Err(shape(form)) };
            let (disj, chi) = if left { (l, r) } else { (r, l) };
            let Some((phi, psi)) = disj.as_or() else { return Err(shape(form)) };
            let side = |q: &Pattern| {
                if left {
                    Pattern::app(q.clone(), (**chi).clone())
                } else {
                    Pattern::app((**chi).clone(), q.clone())
                }
            };
            if **rhs != Pattern::or(side(phi), side(psi)) {
                return Err(shape(form));
            }
            Ok(())
        }
        Justification::AxPropExistsL | Justification::AxPropExistsR => {
            let left = *j == Justification::AxPropExistsL;
            let form = if left {
                "(exists x . phi) psi -> exists x . phi psi"
            } else {
                "psi (exists x . phi) -> exists x . psi phi"
            };
            let Pattern::Imp(lhs, rhs) = p else { return Err(shape(form)) };
            let Pattern::Appl(l, r) = &**lhs else { return Err(shape(form)) };
            let (quant, psi) = if left { (l, r) } else { (r, l) };
            let Pattern::Exists(x, phi) = &**quant else { return Err(shape(form)) };
            let body = if left {
                Pattern::app((**phi).clone(), (**psi).clone())
            } else {
                Pattern::app((**psi).clone(), (**phi).clone())
            };
            if **rhs != Pattern::exists(*x, body) {
                return Err(shape(form));
            }
            if psi.free_vars().element.contains(x) {
                return reject(ReasonCode::VarFree, format!("x{x} occurs free in {}", render_sugar(psi)));
            }
            Ok(())
        }
        Justification::AxPreFixpoint => {
            let form = "phi[mu X . phi / X] -> mu X . phi";
            let Pattern::Imp(lhs, rhs) = p else { return Err(shape(form)) };
            let Pattern::Mu(x, phi) = &**rhs else { return Err(shape(form)) };
            let v = VarRef::Set(*x);
            if **lhs != subst_free(phi, v, rhs) {
                return reject(
                    ReasonCode::SubstMismatch,
                    format!("the left side should be {}", render_sugar(&subst_free(phi, v, rhs))),
                );
            }
            if !is_positive_in(phi, *x) {
                return reject(ReasonCode::NotPositive, format!("the body is not positive in X{x}"));
            }
            if !is_free_for(v, rhs, phi) {
                return reject(ReasonCode::NotFreeFor, format!("X{x} is not free for the fixpoint in its body"));
            }
            Ok(())
        }
        Justification::AxExistence => match p {
            Pattern::Exists(x, b) if **b == Pattern::evar(*x) => Ok(()),
            _ => Err(shape("exists x . x")),
        },
        Justification::AxSingleton { x, body } => {
            if match_singleton(p, *x, body).is_empty() {
                return reject(
                    ReasonCode::NoSingletonMatch,
                    format!("not of the form !(C1[x{x} /\\ phi] /\\ C2[x{x} /\\ !phi]) for the given phi"),
                );
            }
            Ok(())
        }
        _ => reject(ReasonCode::BadReference, "not an axiom"),
    }
}

/// Checks a rule application. `earlier` holds lines `1..n` of the script,
/// each paired with whether it was accepted.
pub fn check_rule(p: &Pattern, j: &Justification, earlier: &[(&Pattern, bool)]) -> Result<(), Rejection> {
    for r in j.references() {
        match r.checked_sub(1).and_then(|i| earlier.get(i)) {
            None => return reject(ReasonCode::BadReference, format!("line {r} is not an earlier line")),
            Some((_, false)) => return reject(ReasonCode::RejectedPremise, format!("line {r} was rejected")),
            Some(_) => {}
        }
    }
    let at = |i: usize| earlier[i - 1].0;
    let implication = |i: usize| match at(i) {
        Pattern::Imp(a, b) => Ok((&**a, &**b)),
        _ => Err(Rejection { code: ReasonCode::PremiseMismatch, detail: format!("line {i} is not an implication") }),
    };
    match j {
        Justification::MP(i, k) => {
            if *at(*k) != Pattern::imp(at(*i).clone(), p.clone()) {
                return reject(ReasonCode::PremiseMismatch, format!("line {k} is not line {i} -> this pattern"));
            }
            Ok(())
        }
        Justification::GenExists(i) => {
            let (phi, psi) = implication(*i)?;
            let form = "exists x . phi -> psi";
            let Pattern::Imp(lhs, rhs) = p else { return Err(shape(form)) };
            let Pattern::Exists(x, body) = &**lhs else { return Err(shape(form)) };
            if **body != *phi || **rhs != *psi {
                return reject(ReasonCode::PremiseMismatch, format!("line {i} is not the unquantified implication"));
            }
            if psi.free_vars().element.contains(x) {
                return reject(
                    ReasonCode::VarFree,
                    format!("x{x} occurs free in the conclusion {}", render_sugar(psi)),
                );
            }
            Ok(())
        }
        Justification::FrameL(i) | Justification::FrameR(i) => {
            let left = matches!(j, Justification::FrameL(_));
            let (phi, psi) = implication(*i)?;
            let form = if left { "phi chi -> psi chi" } else { "chi phi -> chi psi" };
            let Pattern::Imp(lhs, rhs) = p else { return Err(shape(form)) };
            let (Pattern::Appl(a, b), Pattern::Appl(c, d)) = (&**lhs, &**rhs) else { return Err(shape(form)) };
            let (framed, chi, framed2, chi2) = if left { (a, b, c, d) } else { (b, a, d, c) };
            if chi != chi2 {
                return Err(shape(form));
            }
            if **framed != *phi || **framed2 != *psi {
                return reject(ReasonCode::PremiseMismatch, format!("line {i} does not match the framed implication"));
            }
            Ok(())
        }
        Justification::SubstSet { line, var, psi } => {
            let v = VarRef::Set(*var);
            let premise = at(*line);
            if *p != subst_free(premise, v, psi) {
                return reject(ReasonCode::SubstMismatch, format!("this is not line {line} with X{var} replaced"));
            }
            if !is_free_for(v, psi, premise) {
                return reject(ReasonCode::NotFreeFor, format!("X{var} is not free for the substituted pattern"));
            }
            Ok(())
        }
        Justification::KT(i) => {
            let form = "mu X . phi -> psi";
            let Pattern::Imp(lhs, psi) = p else { return Err(shape(form)) };
            let Pattern::Mu(x, phi) = &**lhs else { return Err(shape(form)) };
            let v = VarRef::Set(*x);
            let expected = Pattern::imp(subst_free(phi, v, psi), (**psi).clone());
            if *at(*i) != expected {
                return reject(ReasonCode::PremiseMismatch, format!("line {i} should be {}", render_sugar(&expected)));
            }
            if !is_free_for(v, psi, phi) {
                return reject(ReasonCode::NotFreeFor, format!("X{x} is not free for the conclusion in the body"));
            }
            Ok(())
        }
        _ => reject(ReasonCode::BadReference, "not a rule"),
    }
}

fn check_line(script: &ProofScript, n: usize, line: &ProofLine, accepted: &[bool]) -> Result<(), Rejection> {
    match &line.justification {
        Justification::Hyp(name) => match script.hypotheses.get(name) {
            None => reject(ReasonCode::HypUnknown, format!("no hypothesis named `{name}`")),
            Some(h) if *h != line.pattern => {
                reject(ReasonCode::HypMismatch, format!("hypothesis `{name}` is {}", render_sugar(h)))
            }
            Some(_) => Ok(()),
        },
        j if j.is_rule() => {
            let earlier: Vec<(&Pattern, bool)> =
                script.lines[..n - 1].iter().zip(accepted).map(|(l, ok)| (&l.pattern, *ok)).collect();
            check_rule(&line.pattern, j, &earlier)
        }
        j => check_axiom(&line.pattern, j),
    }
}

/// Checks every line in order. Rejected lines do not stop the check, but
/// lines relying on them are rejected too.
pub fn check_proof(script: &ProofScript) -> CheckReport {
    let mut accepted = Vec::with_capacity(script.lines.len());
    let mut lines = Vec::with_capacity(script.lines.len());
    for (i, line) in script.lines.iter().enumerate() {
        let result = check_line(script, i + 1, line, &accepted);
        accepted.push(result.is_ok());
        lines.push(LineVerdict { line: i + 1, justification: line.justification.to_string(), result });
    }
    let level = script.lines.iter().map(|l| Level::of(&l.justification)).max().unwrap_or(Level::Strong);
    CheckReport { overall: accepted.iter().all(|a| *a), lines, level }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::parse_proof;
    use crate::syntax::Signature;

    fn check(text: &str) -> CheckReport {
        check_proof(&parse_proof(text, &Signature::open()).unwrap())
    }

    #[test]
    fn axiom_examples() {
        let c = Pattern::constant("c");
        assert!(check_axiom(&Pattern::imp(Pattern::bot(), c), &Justification::Taut).is_ok());
        let p = Pattern::imp(Pattern::evar(1), Pattern::exists(0, Pattern::evar(0)));
        assert!(check_axiom(&p, &Justification::AxExists { x: 0, y: 1 }).is_ok());
        let bot = Pattern::bot();
        assert!(check_axiom(&Pattern::imp(bot.clone(), bot), &Justification::AxPreFixpoint).is_ok());
    }

    #[test]
    fn modus_ponens_script() {
        let r = check("1: exists x0 . x0 ; ax.existence\n2: (exists x0 . x0) -> (exists x0 . x0) \\/ c ; taut\n3: (exists x0 . x0) \\/ c ; mp 1 2");
        assert!(r.overall, "{r}");
        assert_eq!(r.level, Level::Strong);
    }

    #[test]
    fn generalisation() {
        let r = check("1: x0 -> c ; hyp h\n2: (exists x0 . x0) -> c ; gen.exists 1\nhyp h := x0 -> c");
        assert!(r.overall, "{r}");
        assert_eq!(r.level, Level::Global);
        let r = check("hyp h := x0 -> x0\n1: x0 -> x0 ; hyp h\n2: (exists x0 . x0) -> x0 ; gen.exists 1");
        assert_eq!(r.reasons(), vec![ReasonCode::VarFree]);
    }

    #[test]
    fn framing_is_local() {
        let r = check("hyp h := x0 -> c\n1: x0 -> c ; hyp h\n2: x0 d -> c d ; frame.l 1");
        assert!(r.overall, "{r}");
        assert_eq!(r.level, Level::Local);
    }

    #[test]
    fn rejected_premises_propagate() {
        let r = check("1: c ; taut\n2: c -> c ; taut\n3: c ; mp 1 2");
        assert_eq!(r.reasons(), vec![ReasonCode::NotTautology, ReasonCode::RejectedPremise]);
        assert!(!r.overall);
        assert!(r.to_string().contains("LEVEL: strong"));
    }

    #[test]
    fn codes_round_trip() {
        for c in ReasonCode::ALL {
            assert_eq!(ReasonCode::parse(c.as_str()), Some(c));
        }
    }
}
