use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{ElemSet, ModelError, MAX_UNIVERSE};
use crate::syntax::{Signature, DEFINEDNESS};

/// A finite structure: a universe, a set-valued application table and
/// constant denotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    universe: Vec<String>,
    app: Vec<ElemSet>,
    constants: BTreeMap<String, ElemSet>,
}

impl Structure {
    /// Builds a structure from an index-based table. `app[a * n + b]` is
    /// `a * b`.
    pub fn new(
        universe: Vec<String>,
        app: Vec<ElemSet>,
        constants: BTreeMap<String, ElemSet>,
    ) -> Result<Structure, ModelError> {
        let n = universe.len();
        if n == 0 {
            return Err(ModelError::EmptyUniverse);
        }
        if n > MAX_UNIVERSE {
            return Err(ModelError::UniverseTooLarge { size: n, cap: MAX_UNIVERSE });
        }
        let mut seen = BTreeSet::new();
        for name in &universe {
            if !seen.insert(name) {
                return Err(ModelError::DuplicateElement(name.clone()));
            }
        }
        assert_eq!(app.len(), n * n, "application table must have n*n cells");
        let full = ElemSet::full(n);
        if app.iter().chain(constants.values()).any(|s| !s.is_subset(full)) {
            return Err(ModelError::DanglingElement("an index beyond the universe".into()));
        }
        Ok(Structure { universe, app, constants })
    }

    /// A structure over elements named `0`, `1`, ...
    pub fn numbered(size: usize, app: Vec<ElemSet>, constants: BTreeMap<String, ElemSet>) -> Structure {
        Structure::new((0..size).map(|i| i.to_string()).collect(), app, constants)
            .expect("numbered structures are well formed")
    }

    pub fn size(&self) -> usize {
        self.universe.len()
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.universe[i]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.universe.iter().position(|e| e == name)
    }

    pub fn app(&self, a: usize, b: usize) -> ElemSet {
        self.app[a * self.size() + b]
    }

    pub fn constant(&self, name: &str) -> Option<ElemSet> {
        self.constants.get(name).copied()
    }

    pub fn constants(&self) -> &BTreeMap<String, ElemSet> {
        &self.constants
    }

    /// `B * C`, the union of `b * c` over `b` in `B` and `c` in `C`.
    pub fn apply_sets(&self, left: ElemSet, right: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for a in left.iter() {
            for b in right.iter() {
                out = out.union(self.app(a, b));
            }
        }
        out
    }

    /// The first element `a` with `def * {a}` different from the universe.
    pub fn definedness_violation(&self) -> Option<usize> {
        let def = self.constant(DEFINEDNESS)?;
        (0..self.size()).find(|&a| self.apply_sets(def, ElemSet::singleton(a)) != self.full())
    }

    pub fn is_definedness_structure(&self) -> bool {
        self.constant(DEFINEDNESS).is_some() && self.definedness_violation().is_none()
    }

    /// Names of the elements of `s`, in universe order.
    pub fn names(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|i| self.universe[i].clone()).collect()
    }

    pub fn format_set(&self, s: ElemSet) -> String {
        format!("{{{}}}", self.names(s).join(", "))
    }

    pub fn to_doc(&self) -> ModelDoc {
        let n = self.size();
        let mut app = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let result = self.app(a, b);
                if !result.is_empty() {
                    app.push(AppEntry {
                        left: self.universe[a].clone(),
                        right: self.universe[b].clone(),
                        result: self.names(result),
                    });
                }
            }
        }
        let constants = self.constants.iter().map(|(k, v)| (k.clone(), self.names(*v))).collect();
        ModelDoc { universe: self.universe.clone(), app, constants }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("model documents serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AppEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<String>,
}

/// The on-disk form of a structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    pub universe: Vec<String>,
    #[serde(default)]
    pub app: Vec<AppEntry>,
    #[serde(default)]
    pub constants: BTreeMap<String, Vec<String>>,
}

impl ModelDoc {
    pub fn from_json(text: &str) -> Result<ModelDoc, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))
    }
}

/// Checks a model document against a signature. Every declared constant
/// must be interpreted, and if `def` is interpreted the definedness law
/// must hold.
pub fn validate_structure(doc: &ModelDoc, sig: &Signature) -> Result<Structure, ModelError> {
    let n = doc.universe.len();
    if n == 0 {
        return Err(ModelError::EmptyUniverse);
    }
    if n > MAX_UNIVERSE {
        return Err(ModelError::UniverseTooLarge { size: n, cap: MAX_UNIVERSE });
    }
    let index = |name: &str, what: &str| {
        doc.universe
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| ModelError::DanglingElement(format!("{what} mentions `{name}`")))
    };
    let subset = |names: &[String], what: &str| -> Result<ElemSet, ModelError> {
        names.iter().try_fold(ElemSet::EMPTY, |s, name| Ok(s.with(index(name, what)?)))
    };
    let mut app = vec![ElemSet::EMPTY; n * n];
    let mut filled = BTreeSet::new();
    for entry in &doc.app {
        let what = format!("app entry ({}, {})", entry.left, entry.right);
        let (a, b) = (index(&entry.left, &what)?, index(&entry.right, &what)?);
        if !filled.insert((a, b)) {
            return Err(ModelError::DuplicateCell(entry.left.clone(), entry.right.clone()));
        }
        app[a * n + b] = subset(&entry.result, &what)?;
    }
    let mut constants = BTreeMap::new();
    for (name, elems) in &doc.constants {
        constants.insert(name.clone(), subset(elems, &format!("constant `{name}`"))?);
    }
    if let Some(missing) = sig.constants().iter().find(|c| !constants.contains_key(*c)) {
        return Err(ModelError::MissingConstant(missing.clone()));
    }
    let s = Structure::new(doc.universe.clone(), app, constants)?;
    if let Some(a) = s.definedness_violation() {
        return Err(ModelError::DefinednessViolated(s.universe[a].clone()));
    }
    Ok(s)
}

/// An assignment of elements to element variables and subsets to set
/// variables. Unassigned variables read as the first element and the empty
/// set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Valuation {
    pub element: BTreeMap<u32, usize>,
    pub set: BTreeMap<u32, ElemSet>,
}

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn element(&self, x: u32) -> usize {
        self.element.get(&x).copied().unwrap_or(0)
    }

    pub fn set(&self, x: u32) -> ElemSet {
        self.set.get(&x).copied().unwrap_or_default()
    }

    pub fn with_element(mut self, x: u32, a: usize) -> Valuation {
        self.element.insert(x, a);
        self
    }

    pub fn with_set(mut self, x: u32, s: ElemSet) -> Valuation {
        self.set.insert(x, s);
        self
    }

    pub fn to_doc(&self, s: &Structure) -> ValuationDoc {
        ValuationDoc {
            element: self.element.iter().map(|(x, a)| (format!("x{x}"), s.element_name(*a).to_string())).collect(),
            set: self.set.iter().map(|(x, v)| (format!("X{x}"), s.names(*v))).collect(),
        }
    }

    pub fn to_json(&self, s: &Structure) -> String {
        serde_json::to_string_pretty(&self.to_doc(s)).expect("valuation documents serialize")
    }

    /// Human-readable listing such as `x0=a, X1={a, b}`.
    pub fn describe(&self, s: &Structure) -> String {
        let elems = self.element.iter().map(|(x, a)| format!("x{x}={}", s.element_name(*a)));
        let sets = self.set.iter().map(|(x, v)| format!("X{x}={}", s.format_set(*v)));
        let parts: Vec<String> = elems.chain(sets).collect();
        if parts.is_empty() {
            "(defaults)".into()
        } else {
            parts.join(", ")
        }
    }
}

/// The on-disk form of a valuation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValuationDoc {
    #[serde(default)]
    pub element: BTreeMap<String, String>,
    #[serde(default)]
    pub set: BTreeMap<String, Vec<String>>,
}

impl ValuationDoc {
    pub fn from_json(text: &str) -> Result<ValuationDoc, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))
    }

    pub fn resolve(&self, s: &Structure) -> Result<Valuation, ModelError> {
        let mut v = Valuation::new();
        for (var, elem) in &self.element {
            let x = crate::syntax::parse_var_index(var, 'x').ok_or_else(|| ModelError::BadVariable(var.clone()))?;
            let a = s
                .element_index(elem)
                .ok_or_else(|| ModelError::DanglingElement(format!("valuation of {var} mentions `{elem}`")))?;
            v.element.insert(x, a);
        }
        for (var, elems) in &self.set {
            let x = crate::syntax::parse_var_index(var, 'X').ok_or_else(|| ModelError::BadVariable(var.clone()))?;
            let mut set = ElemSet::EMPTY;
            for elem in elems {
                let a = s
                    .element_index(elem)
                    .ok_or_else(|| ModelError::DanglingElement(format!("valuation of {var} mentions `{elem}`")))?;
                set = set.with(a);
            }
            v.set.insert(x, set);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> ModelDoc {
        ModelDoc::from_json(text).unwrap()
    }

    #[test]
    fn definedness_examples() {
        let sig = Signature::new(["def"]).unwrap();
        let one =
            doc(r#"{"universe":["0"],"app":[{"left":"0","right":"0","result":["0"]}],"constants":{"def":["0"]}}"#);
        assert!(validate_structure(&one, &sig).unwrap().is_definedness_structure());
        let two = doc(r#"{"universe":["0","1"],
                "app":[{"left":"0","right":"0","result":["0","1"]},{"left":"0","right":"1","result":["0","1"]}],
                "constants":{"def":["0"]}}"#);
        assert!(validate_structure(&two, &sig).is_ok());
        let bad = doc(r#"{"universe":["0","1"],"constants":{"def":["0"]}}"#);
        assert_eq!(validate_structure(&bad, &sig), Err(ModelError::DefinednessViolated("0".into())));
        let empty = doc(r#"{"universe":[]}"#);
        assert_eq!(validate_structure(&empty, &sig), Err(ModelError::EmptyUniverse));
    }

    #[test]
    fn structural_errors() {
        let sig = Signature::new(["c"]).unwrap();
        let missing = doc(r#"{"universe":["a"]}"#);
        assert_eq!(validate_structure(&missing, &sig), Err(ModelError::MissingConstant("c".into())));
        let dangling = doc(r#"{"universe":["a"],"constants":{"c":["b"]}}"#);
        assert!(matches!(validate_structure(&dangling, &sig), Err(ModelError::DanglingElement(_))));
        assert!(ModelDoc::from_json(r#"{"universe":["a"],"extra":1}"#).is_err());
    }

    #[test]
    fn json_round_trip() {
        let sig = Signature::new(["c"]).unwrap();
        let d =
            doc(r#"{"universe":["a","b"],"app":[{"left":"a","right":"b","result":["b"]}],"constants":{"c":["a"]}}"#);
        let s = validate_structure(&d, &sig).unwrap();
        assert_eq!(s.to_doc(), d);
        let v = ValuationDoc::from_json(r#"{"element":{"x0":"b"},"set":{"X2":["a","b"]}}"#).unwrap();
        let v = v.resolve(&s).unwrap();
        assert_eq!(v.element(0), 1);
        assert_eq!(v.set(2), s.full());
        assert_eq!(ValuationDoc::from_json(&v.to_json(&s)).unwrap().resolve(&s).unwrap(), v);
    }
}
