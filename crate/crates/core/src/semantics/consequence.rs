use std::fmt;
use std::str::FromStr;

use super::{valuations, Compiled, SemanticsError};
use crate::model::{Structure, Valuation};
use crate::syntax::{FreeVars, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConsequenceKind {
    Global,
    Local,
    Strong,
}

impl FromStr for ConsequenceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<ConsequenceKind, String> {
        match s {
            "global" => Ok(ConsequenceKind::Global),
            "local" => Ok(ConsequenceKind::Local),
            "strong" => Ok(ConsequenceKind::Strong),
            other => Err(format!("unknown consequence kind `{other}` (expected global, local or strong)")),
        }
    }
}

impl fmt::Display for ConsequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConsequenceKind::Global => "global",
            ConsequenceKind::Local => "local",
            ConsequenceKind::Strong => "strong",
        })
    }
}

/// A witness that a consequence fails on some structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Position of the structure in the suite.
    pub index: usize,
    pub structure: Structure,
    pub valuation: Valuation,
    /// The conclusion that failed.
    pub conclusion: Pattern,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

/// Decides `gamma ⊨ delta` for every conclusion in `delta`, relative to the
/// given structures. A failing verdict carries the first counterexample.
pub fn consequence<'a, I>(
    kind: ConsequenceKind,
    gamma: &[Pattern],
    delta: &[Pattern],
    suite: I,
) -> Result<Verdict, SemanticsError>
where
    I: IntoIterator<Item = &'a Structure>,
{
    let hyps: Vec<Compiled> = gamma.iter().map(Compiled::new).collect();
    let concls: Vec<Compiled> = delta.iter().map(Compiled::new).collect();
    let mut vars = FreeVars::default();
    for p in gamma.iter().chain(delta) {
        vars.extend(&p.free_vars());
    }
    let mut checked = 0;
    for (index, s) in suite.into_iter().enumerate() {
        checked += 1;
        if let Some((valuation, which)) = check_structure(kind, s, &hyps, gamma, &concls, delta, &vars)? {
            return Ok(Verdict {
                holds: false,
                checked,
                counterexample: Some(Counterexample {
                    index,
                    structure: s.clone(),
                    valuation,
                    conclusion: delta[which].clone(),
                }),
            });
        }
    }
    Ok(Verdict { holds: true, checked, counterexample: None })
}

fn check_structure(
    kind: ConsequenceKind,
    s: &Structure,
    hyps: &[Compiled],
    gamma: &[Pattern],
    concls: &[Compiled],
    delta: &[Pattern],
    vars: &FreeVars,
) -> Result<Option<(Valuation, usize)>, SemanticsError> {
    let full = s.full();
    match kind {
        ConsequenceKind::Global => {
            for (h, p) in hyps.iter().zip(gamma) {
                for v in valuations(s, &p.free_vars()) {
                    if h.eval(s, &v)? != full {
                        return Ok(None);
                    }
                }
            }
            for (i, (c, p)) in concls.iter().zip(delta).enumerate() {
                for v in valuations(s, &p.free_vars()) {
                    if c.eval(s, &v)? != full {
                        return Ok(Some((v, i)));
                    }
                }
            }
            Ok(None)
        }
        ConsequenceKind::Local | ConsequenceKind::Strong => {
            for v in valuations(s, vars) {
                let mut meet = full;
                for h in hyps {
                    meet = meet.intersection(h.eval(s, &v)?);
                }
                if kind == ConsequenceKind::Local && meet != full {
                    continue;
                }
                for (i, c) in concls.iter().enumerate() {
                    if !meet.is_subset(c.eval(s, &v)?) {
                        return Ok(Some((v, i)));
                    }
                }
            }
            Ok(None)
        }
    }
}
