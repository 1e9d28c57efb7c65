#![allow(dead_code)]

use std::collections::BTreeSet;

use aml::model::{ElemSet, Structure, Valuation};
use aml::semantics::Compiled;
use aml::syntax::{tokens, FreeVars, Token};
use aml::{Pattern, VarRef};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random pattern generator over a small fixed vocabulary.
#[derive(Clone, Debug)]
pub struct Gen {
    pub evars: u32,
    pub svars: u32,
    pub consts: Vec<&'static str>,
    /// Probability of stopping at an atom when budget remains.
    pub leaf: f64,
}

impl Gen {
    pub fn new(evars: u32, svars: u32, consts: &[&'static str]) -> Gen {
        Gen { evars, svars, consts: consts.to_vec(), leaf: 0.3 }
    }

    pub fn atom(&self, rng: &mut ChaCha8Rng) -> Pattern {
        let total = self.evars + self.svars + self.consts.len() as u32;
        let k = rng.gen_range(0..total);
        if k < self.evars {
            Pattern::evar(k)
        } else if k < self.evars + self.svars {
            Pattern::svar(k - self.evars)
        } else {
            Pattern::constant(self.consts[(k - self.evars - self.svars) as usize])
        }
    }

    /// A pattern with at most `budget` tokens.
    pub fn pattern(&self, rng: &mut ChaCha8Rng, budget: usize) -> Pattern {
        if budget < 3 || rng.gen_bool(self.leaf) {
            return self.atom(rng);
        }
        match rng.gen_range(0..4) {
            k @ (0 | 1) => {
                let l = rng.gen_range(1..=budget - 2);
                let left = self.pattern(rng, l);
                let right = self.pattern(rng, budget - 1 - left.len());
                if k == 0 {
                    Pattern::app(left, right)
                } else {
                    Pattern::imp(left, right)
                }
            }
            2 if self.evars > 0 => Pattern::exists(rng.gen_range(0..self.evars), self.pattern(rng, budget - 2)),
            _ if self.svars > 0 => Pattern::mu(rng.gen_range(0..self.svars), self.pattern(rng, budget - 2)),
            _ => self.atom(rng),
        }
    }
}

/// Stack-machine recognizer for core token strings.
pub fn oracle_is_pattern(toks: &[Token]) -> bool {
    enum Need {
        Pat,
        EHead,
        SHead,
    }
    let mut stack = vec![Need::Pat];
    for t in toks {
        let Some(need) = stack.pop() else { return false };
        match need {
            Need::EHead if !matches!(t, Token::EVar(_)) => return false,
            Need::SHead if !matches!(t, Token::SVar(_)) => return false,
            Need::EHead | Need::SHead => {}
            Need::Pat => match t {
                Token::Appl | Token::Imp => {
                    stack.push(Need::Pat);
                    stack.push(Need::Pat);
                }
                Token::Exists => {
                    stack.push(Need::Pat);
                    stack.push(Need::EHead);
                }
                Token::Mu => {
                    stack.push(Need::Pat);
                    stack.push(Need::SHead);
                }
                _ => {}
            },
        }
    }
    stack.is_empty()
}

/// Every `j` such that `toks[i..=j]` is a pattern.
pub fn oracle_scope_ends(toks: &[Token], i: usize) -> Vec<usize> {
    (i..toks.len()).filter(|&j| oracle_is_pattern(&toks[i..=j])).collect()
}

/// Every split point `k` of a binary token at `i` ending at `end`, with
/// `toks[i+1..k]` and `toks[k..=end]` both patterns.
pub fn oracle_splits(toks: &[Token], i: usize, end: usize) -> Vec<usize> {
    (i + 2..=end).filter(|&k| oracle_is_pattern(&toks[i + 1..k]) && oracle_is_pattern(&toks[k..=end])).collect()
}

/// Positions bound by some binder of the variable token found there.
pub fn oracle_bound_positions(toks: &[Token]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for i in 0..toks.len() {
        if !toks[i].is_binder() {
            continue;
        }
        let head = toks[i + 1].clone();
        let end = oracle_scope_ends(toks, i)[0];
        out.insert(i + 1);
        for k in i + 2..=end {
            if toks[k] == head {
                out.insert(k);
            }
        }
    }
    out
}

fn var_token(v: VarRef) -> Token {
    match v {
        VarRef::Element(n) => Token::EVar(n),
        VarRef::Set(n) => Token::SVar(n),
    }
}

fn from_tokens(toks: &[Token]) -> Pattern {
    aml::syntax::parse_tokens(toks).expect("oracle produced a malformed token string")
}

/// Free substitution by splicing token strings.
pub fn oracle_subst_free(phi: &Pattern, v: VarRef, delta: &Pattern) -> Pattern {
    let toks = tokens(phi).0;
    let bound = oracle_bound_positions(&toks);
    let target = var_token(v);
    let mut out = Vec::new();
    for (k, t) in toks.iter().enumerate() {
        if *t == target && !bound.contains(&k) {
            out.extend(tokens(delta).0);
        } else {
            out.push(t.clone());
        }
    }
    from_tokens(&out)
}

/// Bound renaming by rewriting every bound occurrence of `v` (heads
/// included) to `w`.
pub fn oracle_subst_bound(phi: &Pattern, v: VarRef, w: VarRef) -> Pattern {
    let mut toks = tokens(phi).0;
    let bound = oracle_bound_positions(&toks);
    let (from, to) = (var_token(v), var_token(w));
    for k in bound {
        if toks[k] == from {
            toks[k] = to.clone();
        }
    }
    from_tokens(&toks)
}

/// No free occurrence of `v` sits inside the scope of a binder of a free
/// variable of `delta`.
pub fn oracle_free_for(v: VarRef, delta: &Pattern, phi: &Pattern) -> bool {
    let toks = tokens(phi).0;
    let bound = oracle_bound_positions(&toks);
    let fv = delta.free_vars();
    let target = var_token(v);
    for k in 0..toks.len() {
        if toks[k] != target || bound.contains(&k) {
            continue;
        }
        for i in 0..k {
            if !toks[i].is_binder() || oracle_scope_ends(&toks, i)[0] < k {
                continue;
            }
            let captures = match &toks[i + 1] {
                Token::EVar(n) => fv.element.contains(n),
                Token::SVar(n) => fv.set.contains(n),
                _ => false,
            };
            if captures {
                return false;
            }
        }
    }
    true
}

/// Positivity by structural recursion.
pub fn oracle_positive(p: &Pattern, x: u32) -> bool {
    match p {
        Pattern::EVar(_) | Pattern::SVar(_) | Pattern::Const(_) => true,
        Pattern::Appl(a, b) => oracle_positive(a, x) && oracle_positive(b, x),
        Pattern::Imp(a, b) => oracle_negative(a, x) && oracle_positive(b, x),
        Pattern::Exists(_, b) => oracle_positive(b, x),
        Pattern::Mu(z, b) => *z == x || oracle_positive(b, x),
    }
}

/// Negativity by structural recursion.
pub fn oracle_negative(p: &Pattern, x: u32) -> bool {
    match p {
        Pattern::SVar(n) => *n != x,
        Pattern::EVar(_) | Pattern::Const(_) => true,
        Pattern::Appl(a, b) => oracle_negative(a, x) && oracle_negative(b, x),
        Pattern::Imp(a, b) => oracle_positive(a, x) && oracle_negative(b, x),
        Pattern::Exists(_, b) => oracle_negative(b, x),
        Pattern::Mu(z, b) => *z == x || oracle_negative(b, x),
    }
}

fn collect_atoms(p: &Pattern, atoms: &mut Vec<Pattern>) {
    match p {
        Pattern::Imp(a, b) => {
            collect_atoms(a, atoms);
            collect_atoms(b, atoms);
        }
        Pattern::Mu(v, b) if **b == Pattern::SVar(*v) => {}
        _ => {
            if !atoms.contains(p) {
                atoms.push(p.clone());
            }
        }
    }
}

fn powerset_value(p: &Pattern, atoms: &[Pattern], values: &[u8], full: u8) -> u8 {
    match p {
        Pattern::Imp(a, b) => (!powerset_value(a, atoms, values, full) | powerset_value(b, atoms, values, full)) & full,
        Pattern::Mu(v, b) if **b == Pattern::SVar(*v) => 0,
        _ => values[atoms.iter().position(|a| a == p).unwrap()],
    }
}

/// Atom count of the implicational skeleton, with every `mu X . X` read as
/// the empty set.
pub fn oracle_atom_count(p: &Pattern) -> usize {
    let mut atoms = Vec::new();
    collect_atoms(p, &mut atoms);
    atoms.len()
}

/// Truth in every powerset algebra over universes of the given sizes,
/// interpreting atoms as arbitrary subsets.
pub fn oracle_powerset_taut(p: &Pattern, sizes: &[usize]) -> bool {
    let mut atoms = Vec::new();
    collect_atoms(p, &mut atoms);
    for &n in sizes {
        let full: u8 = (1u8 << n) - 1;
        let choices = 1usize << n;
        let total = choices.pow(atoms.len() as u32);
        let mut values = vec![0u8; atoms.len()];
        for mut code in 0..total {
            for v in values.iter_mut() {
                *v = (code % choices) as u8;
                code /= choices;
            }
            if powerset_value(p, &atoms, &values, full) != full {
                return false;
            }
        }
    }
    true
}

/// Every valuation of `vars` over `s`, built without the library helper.
pub fn all_valuations(s: &Structure, vars: &FreeVars) -> Vec<Valuation> {
    let mut out = vec![Valuation::new()];
    for x in &vars.element {
        out = out.into_iter().flat_map(|v| (0..s.size()).map(move |a| v.clone().with_element(*x, a))).collect();
    }
    for x in &vars.set {
        out = out
            .into_iter()
            .flat_map(|v| ElemSet::all_subsets(s.size()).map(move |b| v.clone().with_set(*x, b)))
            .collect();
    }
    out
}

pub fn union_vars<'a>(ps: impl IntoIterator<Item = &'a Pattern>) -> FreeVars {
    let mut fv = FreeVars::default();
    for p in ps {
        fv.extend(&p.free_vars());
    }
    fv
}

pub fn eval(s: &Structure, e: &Valuation, p: &Pattern) -> ElemSet {
    Compiled::new(p).eval(s, e).expect("evaluation failed")
}

/// `s |= p` by direct enumeration of valuations.
pub fn valid_in(s: &Structure, p: &Pattern) -> bool {
    let c = Compiled::new(p);
    all_valuations(s, &p.free_vars()).iter().all(|e| c.eval(s, e).unwrap() == s.full())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn corpus_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Proptest strategy for patterns over `x0..x2`, `X0..X2`, `c`, `d`, `def`.
pub fn arb_pattern() -> impl proptest::strategy::Strategy<Value = Pattern> {
    use proptest::prelude::*;
    let leaf = prop_oneof![
        (0u32..3).prop_map(Pattern::evar),
        (0u32..3).prop_map(Pattern::svar),
        prop::sample::select(vec!["c", "d", "def"]).prop_map(Pattern::constant),
    ];
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Pattern::app(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Pattern::imp(a, b)),
            (0u32..3, inner.clone()).prop_map(|(v, b)| Pattern::exists(v, b)),
            (0u32..3, inner).prop_map(|(v, b)| Pattern::mu(v, b)),
        ]
    })
}

/// Proptest strategy for raw token strings, most of which are not patterns.
pub fn arb_tokens() -> impl proptest::strategy::Strategy<Value = Vec<Token>> {
    use proptest::prelude::*;
    let tok = prop_oneof![
        Just(Token::Appl),
        Just(Token::Imp),
        Just(Token::Exists),
        Just(Token::Mu),
        (0u32..2).prop_map(Token::EVar),
        (0u32..2).prop_map(Token::SVar),
        Just(Token::Const(std::sync::Arc::from("c"))),
    ];
    prop::collection::vec(tok, 0..10)
}
