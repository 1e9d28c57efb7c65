use std::collections::BTreeMap;
use std::sync::Arc;

use super::SemanticsError;
use crate::model::{ElemSet, Structure, Valuation, ENUMERATION_CAP};
use crate::syntax::{is_positive_in, FreeVars, Pattern};

/// How `mu` binders are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MuStrategy {
    /// Kleene iteration when the body is positive in the bound variable,
    /// powerset enumeration otherwise. Both give the same value.
    #[default]
    Auto,
    /// Always intersect all prefixpoints.
    Definition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    pub strategy: MuStrategy,
    pub cap: usize,
}

impl Default for EvalOptions {
    fn default() -> EvalOptions {
        EvalOptions { strategy: MuStrategy::Auto, cap: ENUMERATION_CAP }
    }
}

/// The value of a pattern together with whether it is the whole universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalResult {
    pub value: ElemSet,
    pub satisfied: bool,
}

#[derive(Debug, Clone)]
enum Node {
    EVar(usize),
    SVar(usize),
    Const(Arc<str>),
    Appl(Box<Node>, Box<Node>),
    Imp(Box<Node>, Box<Node>),
    Exists(usize, Box<Node>),
    Mu { slot: usize, body: Box<Node>, positive: bool },
}

/// A pattern prepared for repeated evaluation. Variables are mapped to
/// dense slots so that binders update an array instead of a map.
#[derive(Debug, Clone)]
pub struct Compiled {
    root: Node,
    elements: BTreeMap<u32, usize>,
    sets: BTreeMap<u32, usize>,
}

impl Compiled {
    pub fn new(p: &Pattern) -> Compiled {
        let vars = p.all_vars();
        let elements = vars.element.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let sets = vars.set.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut c = Compiled { root: Node::EVar(0), elements, sets };
        c.root = c.compile(p);
        c
    }

    fn compile(&self, p: &Pattern) -> Node {
        match p {
            Pattern::EVar(n) => Node::EVar(self.elements[n]),
            Pattern::SVar(n) => Node::SVar(self.sets[n]),
            Pattern::Const(c) => Node::Const(c.clone()),
            Pattern::Appl(l, r) => Node::Appl(Box::new(self.compile(l)), Box::new(self.compile(r))),
            Pattern::Imp(l, r) => Node::Imp(Box::new(self.compile(l)), Box::new(self.compile(r))),
            Pattern::Exists(v, b) => Node::Exists(self.elements[v], Box::new(self.compile(b))),
            Pattern::Mu(v, b) => {
                Node::Mu { slot: self.sets[v], body: Box::new(self.compile(b)), positive: is_positive_in(b, *v) }
            }
        }
    }

    pub fn eval(&self, s: &Structure, e: &Valuation) -> Result<ElemSet, SemanticsError> {
        self.eval_with(s, e, &EvalOptions::default())
    }

    pub fn eval_with(&self, s: &Structure, e: &Valuation, opts: &EvalOptions) -> Result<ElemSet, SemanticsError> {
        let mut env = Env {
            elements: self.elements.keys().map(|v| e.element(*v)).collect(),
            sets: self.sets.keys().map(|v| e.set(*v)).collect(),
        };
        if let Some(bad) = env.elements.iter().find(|a| **a >= s.size()) {
            return Err(SemanticsError::ElementOutOfRange(*bad));
        }
        let full = s.full();
        if env.sets.iter().any(|b| !b.is_subset(full)) {
            return Err(SemanticsError::ElementOutOfRange(s.size()));
        }
        eval_node(&self.root, s, &mut env, opts)
    }
}

struct Env {
    elements: Vec<usize>,
    sets: Vec<ElemSet>,
}

fn eval_node(n: &Node, s: &Structure, env: &mut Env, opts: &EvalOptions) -> Result<ElemSet, SemanticsError> {
    Ok(match n {
        Node::EVar(slot) => ElemSet::singleton(env.elements[*slot]),
        Node::SVar(slot) => env.sets[*slot],
        Node::Const(c) => s.constant(c).ok_or_else(|| SemanticsError::UnassignedConstant(c.to_string()))?,
        Node::Appl(l, r) => {
            let left = eval_node(l, s, env, opts)?;
            if left.is_empty() {
                return Ok(ElemSet::EMPTY);
            }
            s.apply_sets(left, eval_node(r, s, env, opts)?)
        }
        Node::Imp(l, r) => {
            let left = eval_node(l, s, env, opts)?;
            left.difference(eval_node(r, s, env, opts)?).complement(s.size())
        }
        Node::Exists(slot, b) => {
            let saved = env.elements[*slot];
            let mut out = ElemSet::EMPTY;
            for a in 0..s.size() {
                env.elements[*slot] = a;
                out = out.union(eval_node(b, s, env, opts)?);
            }
            env.elements[*slot] = saved;
            out
        }
        Node::Mu { slot, body, positive } => {
            let saved = env.sets[*slot];
            let result = if *positive && opts.strategy == MuStrategy::Auto {
                iterate(*slot, body, s, env, opts)?
            } else {
                intersect_prefixpoints(*slot, body, s, env, opts)?
            };
            env.sets[*slot] = saved;
            result
        }
    })
}

fn iterate(
    slot: usize,
    body: &Node,
    s: &Structure,
    env: &mut Env,
    opts: &EvalOptions,
) -> Result<ElemSet, SemanticsError> {
    let mut current = ElemSet::EMPTY;
    loop {
        env.sets[slot] = current;
        let next = eval_node(body, s, env, opts)?;
        if next == current {
            return Ok(current);
        }
        debug_assert!(current.is_subset(next), "positive bodies iterate upwards");
        current = next;
    }
}

fn intersect_prefixpoints(
    slot: usize,
    body: &Node,
    s: &Structure,
    env: &mut Env,
    opts: &EvalOptions,
) -> Result<ElemSet, SemanticsError> {
    if s.size() > opts.cap {
        return Err(SemanticsError::UniverseTooLarge { size: s.size(), cap: opts.cap });
    }
    let mut out = s.full();
    for b in ElemSet::all_subsets(s.size()) {
        if out.is_subset(b) {
            continue;
        }
        env.sets[slot] = b;
        if eval_node(body, s, env, opts)?.is_subset(b) {
            out = out.intersection(b);
        }
    }
    Ok(out)
}

pub fn evaluate(s: &Structure, e: &Valuation, p: &Pattern) -> Result<ElemSet, SemanticsError> {
    Compiled::new(p).eval(s, e)
}

pub fn evaluate_with(s: &Structure, e: &Valuation, p: &Pattern, opts: &EvalOptions) -> Result<ElemSet, SemanticsError> {
    Compiled::new(p).eval_with(s, e, opts)
}

pub fn eval_result(s: &Structure, e: &Valuation, p: &Pattern) -> Result<EvalResult, SemanticsError> {
    let value = evaluate(s, e, p)?;
    Ok(EvalResult { value, satisfied: value == s.full() })
}

/// The union of all postfixpoints of `body` in `X{var}`.
pub fn evaluate_nu_direct(s: &Structure, e: &Valuation, var: u32, body: &Pattern) -> Result<ElemSet, SemanticsError> {
    if s.size() > ENUMERATION_CAP {
        return Err(SemanticsError::UniverseTooLarge { size: s.size(), cap: ENUMERATION_CAP });
    }
    let compiled = Compiled::new(&Pattern::mu(var, body.clone()));
    let Node::Mu { body, slot, .. } = &compiled.root else { unreachable!("compiled from a mu") };
    let mut env = Env {
        elements: compiled.elements.keys().map(|v| e.element(*v)).collect(),
        sets: compiled.sets.keys().map(|v| e.set(*v)).collect(),
    };
    let opts = EvalOptions::default();
    let mut out = ElemSet::EMPTY;
    for d in ElemSet::all_subsets(s.size()) {
        env.sets[*slot] = d;
        if d.is_subset(eval_node(body, s, &mut env, &opts)?) {
            out = out.union(d);
        }
    }
    Ok(out)
}

pub fn satisfies(s: &Structure, e: &Valuation, p: &Pattern) -> Result<bool, SemanticsError> {
    Ok(evaluate(s, e, p)? == s.full())
}

/// Every valuation of the given variables over `s`, others left at their
/// defaults.
pub fn valuations(s: &Structure, vars: &FreeVars) -> impl Iterator<Item = Valuation> {
    let n = s.size() as u64;
    let elems: Vec<u32> = vars.element.iter().copied().collect();
    let sets: Vec<u32> = vars.set.iter().copied().collect();
    let elem_count = n.checked_pow(elems.len() as u32).unwrap_or(u64::MAX);
    let set_count = 1u64.checked_shl((n as usize * sets.len()) as u32).unwrap_or(u64::MAX);
    let total = elem_count.saturating_mul(set_count);
    (0..total).map(move |mut code| {
        let mut v = Valuation::new();
        for x in &elems {
            v.element.insert(*x, (code % n) as usize);
            code /= n;
        }
        for x in &sets {
            v.set.insert(*x, ElemSet(code & ((1 << n) - 1)));
            code >>= n;
        }
        v
    })
}

/// A valuation under which `p` is not the whole universe, if any.
pub fn falsifying_valuation(s: &Structure, p: &Pattern) -> Result<Option<Valuation>, SemanticsError> {
    let c = Compiled::new(p);
    for v in valuations(s, &p.free_vars()) {
        if c.eval(s, &v)? != s.full() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn models(s: &Structure, p: &Pattern) -> Result<bool, SemanticsError> {
    Ok(falsifying_valuation(s, p)?.is_none())
}

/// Whether `p` only ever denotes the empty set or the whole universe.
pub fn is_predicate(s: &Structure, p: &Pattern) -> Result<bool, SemanticsError> {
    let c = Compiled::new(p);
    for v in valuations(s, &p.free_vars()) {
        let value = c.eval(s, &v)?;
        if !value.is_empty() && value != s.full() {
            return Ok(false);
        }
    }
    Ok(true)
}
