//! Finite first-order structures as fully interpreted base languages.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::marker::PhantomData;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::godel::{decode, GodelCode};
use crate::syntax::{is_valid_symbol, Formula, Sentence, Term};

/// Relation symbols with arities, and constant symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub relations: BTreeMap<String, usize>,
    pub constants: BTreeSet<String>,
}

impl Signature {
    pub fn arity(&self, relation: &str) -> Option<usize> {
        self.relations.get(relation).copied()
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }

    /// Checks symbols, arities and closedness of a base formula.
    pub fn check_formula(&self, f: &Formula) -> Result<()> {
        self.check_symbols(f)?;
        match f.free_vars().into_iter().next() {
            Some(v) => Err(Error::FreeVariable(v)),
            None => Ok(()),
        }
    }

    fn check_term(&self, t: &Term) -> Result<()> {
        match t {
            Term::Const(c) if !self.has_constant(c) => Err(Error::UnknownSymbol(c.clone())),
            _ => Ok(()),
        }
    }

    fn check_symbols(&self, f: &Formula) -> Result<()> {
        match f {
            Formula::Eq(a, b) => {
                self.check_term(a)?;
                self.check_term(b)
            }
            Formula::Rel(name, args) => {
                let expected = self.arity(name).ok_or_else(|| Error::UnknownSymbol(name.clone()))?;
                if expected != args.len() {
                    return Err(Error::Arity {
                        name: name.clone(),
                        expected,
                        got: args.len(),
                    });
                }
                args.iter().try_for_each(|t| self.check_term(t))
            }
            Formula::Not(a) | Formula::Exists(_, a) | Formula::Forall(_, a) => self.check_symbols(a),
            Formula::Or(a, b) | Formula::And(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                self.check_symbols(a)?;
                self.check_symbols(b)
            }
        }
    }
}

/// JSON object that keeps duplicate keys so validation can reject them.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryList<V>(pub Vec<(String, V)>);

impl<V> Default for EntryList<V> {
    fn default() -> Self {
        EntryList(Vec::new())
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for EntryList<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntryVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for EntryVisitor<V> {
            type Value = EntryList<V>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a JSON object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, V>()? {
                    entries.push((k, v));
                }
                Ok(EntryList(entries))
            }
        }

        deserializer.deserialize_map(EntryVisitor(PhantomData))
    }
}

impl<V: Serialize> Serialize for EntryList<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationDescription {
    pub arity: usize,
    #[serde(default)]
    pub tuples: Vec<Vec<u64>>,
}

/// Model file contents before validation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDescription {
    pub domain_size: u64,
    #[serde(default)]
    pub relations: EntryList<RelationDescription>,
    #[serde(default)]
    pub constants: EntryList<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Relation {
    arity: usize,
    tuples: BTreeSet<Vec<u64>>,
}

/// A validated finite structure over the domain `{0, …, N−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModel {
    domain_size: u64,
    relations: BTreeMap<String, Relation>,
    constants: BTreeMap<String, u64>,
    signature: Signature,
}

impl FiniteModel {
    /// One element, no relation or constant symbols.
    pub fn trivial() -> FiniteModel {
        FiniteModel::validate(&ModelDescription {
            domain_size: 1,
            relations: EntryList::default(),
            constants: EntryList::default(),
        })
        .expect("trivial model is valid")
    }

    pub fn from_json(text: &str) -> Result<FiniteModel> {
        let desc: ModelDescription = serde_json::from_str(text)?;
        FiniteModel::validate(&desc)
    }

    pub fn validate(desc: &ModelDescription) -> Result<FiniteModel> {
        let invalid = |msg: String| Err(Error::InvalidModel(msg));
        let n = desc.domain_size;
        if n == 0 {
            return invalid("empty domain".into());
        }
        let mut seen = BTreeSet::new();
        let names = desc.relations.0.iter().map(|(k, _)| k).chain(desc.constants.0.iter().map(|(k, _)| k));
        for name in names {
            if !is_valid_symbol(name) {
                return invalid(format!("`{name}` is not a usable symbol name"));
            }
            if !seen.insert(name.clone()) {
                return invalid(format!("duplicate symbol `{name}`"));
            }
        }

        let mut relations = BTreeMap::new();
        for (name, rel) in &desc.relations.0 {
            if rel.arity == 0 {
                return invalid(format!("relation `{name}` has arity 0"));
            }
            let mut tuples = BTreeSet::new();
            for tuple in &rel.tuples {
                if tuple.len() != rel.arity {
                    return invalid(format!(
                        "arity mismatch: relation `{name}` has arity {} but tuple {tuple:?} has width {}",
                        rel.arity,
                        tuple.len()
                    ));
                }
                if let Some(e) = tuple.iter().find(|&&e| e >= n) {
                    return invalid(format!("element {e} in relation `{name}` is out of range for domain size {n}"));
                }
                tuples.insert(tuple.clone());
            }
            relations.insert(name.clone(), Relation { arity: rel.arity, tuples });
        }

        let mut constants = BTreeMap::new();
        for &(ref name, value) in &desc.constants.0 {
            if value >= n {
                return invalid(format!("constant `{name}` = {value} is out of range for domain size {n}"));
            }
            constants.insert(name.clone(), value);
        }

        let signature = Signature {
            relations: relations.iter().map(|(k, r)| (k.clone(), r.arity)).collect(),
            constants: constants.keys().cloned().collect(),
        };
        Ok(FiniteModel {
            domain_size: n,
            relations,
            constants,
            signature,
        })
    }

    pub fn describe(&self) -> ModelDescription {
        ModelDescription {
            domain_size: self.domain_size,
            relations: EntryList(
                self.relations
                    .iter()
                    .map(|(k, r)| {
                        let desc = RelationDescription {
                            arity: r.arity,
                            tuples: r.tuples.iter().cloned().collect(),
                        };
                        (k.clone(), desc)
                    })
                    .collect(),
            ),
            constants: EntryList(self.constants.iter().map(|(k, v)| (k.clone(), *v)).collect()),
        }
    }

    pub fn domain_size(&self) -> u64 {
        self.domain_size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Whether `f` is a sentence of this model's base language.
    pub fn check_formula(&self, f: &Formula) -> Result<()> {
        self.signature.check_formula(f)?;
        self.check_elements(f)
    }

    fn check_elements(&self, f: &Formula) -> Result<()> {
        let term = |t: &Term| match t {
            Term::Elem(k) if *k >= self.domain_size => Err(Error::ElementOutOfRange {
                element: *k,
                domain_size: self.domain_size,
            }),
            _ => Ok(()),
        };
        match f {
            Formula::Eq(a, b) => term(a).and(term(b)),
            Formula::Rel(_, args) => args.iter().try_for_each(term),
            Formula::Not(a) | Formula::Exists(_, a) | Formula::Forall(_, a) => self.check_elements(a),
            Formula::Or(a, b) | Formula::And(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                self.check_elements(a)?;
                self.check_elements(b)
            }
        }
    }

    /// Whether every base subformula of `s` belongs to this model's language.
    pub fn check_sentence(&self, s: &Sentence) -> Result<()> {
        match s {
            Sentence::Base(phi) => self.check_formula(phi),
            _ => s.children().into_iter().try_for_each(|c| self.check_sentence(c)),
        }
    }

    /// Decodes `c` and keeps the result only if it is a sentence of the
    /// augmented language over this model.
    pub fn decode_sentence(&self, c: &GodelCode) -> Option<Sentence> {
        decode(c).filter(|s| self.check_sentence(s).is_ok())
    }

    /// Classical truth of a closed base sentence, by exhaustive enumeration.
    pub fn eval(&self, f: &Formula) -> Result<bool> {
        self.check_formula(f)?;
        let mut env = Vec::new();
        Ok(self.eval_in(f, &mut env))
    }

    fn term_value(&self, t: &Term, env: &[(u64, u64)]) -> u64 {
        match t {
            Term::Var(v) => env
                .iter()
                .rev()
                .find(|(var, _)| var == v)
                .map(|(_, value)| *value)
                .expect("closedness checked"),
            Term::Const(c) => self.constants[c],
            Term::Elem(k) => *k,
        }
    }

    fn eval_in(&self, f: &Formula, env: &mut Vec<(u64, u64)>) -> bool {
        match f {
            Formula::Eq(a, b) => self.term_value(a, env) == self.term_value(b, env),
            Formula::Rel(name, args) => {
                let tuple: Vec<u64> = args.iter().map(|t| self.term_value(t, env)).collect();
                self.relations[name].tuples.contains(&tuple)
            }
            Formula::Not(a) => !self.eval_in(a, env),
            Formula::Or(a, b) => self.eval_in(a, env) || self.eval_in(b, env),
            Formula::And(a, b) => self.eval_in(a, env) && self.eval_in(b, env),
            Formula::Imp(a, b) => !self.eval_in(a, env) || self.eval_in(b, env),
            Formula::Iff(a, b) => self.eval_in(a, env) == self.eval_in(b, env),
            Formula::Exists(v, body) => (0..self.domain_size).any(|e| self.bind(*v, e, body, env)),
            Formula::Forall(v, body) => (0..self.domain_size).all(|e| self.bind(*v, e, body, env)),
        }
    }

    fn bind(&self, var: u64, value: u64, body: &Formula, env: &mut Vec<(u64, u64)>) -> bool {
        env.push((var, value));
        let out = self.eval_in(body, env);
        env.pop();
        out
    }
}

/// Truth of a base sentence in `m`.
pub fn eval_base(m: &FiniteModel, f: &Formula) -> Result<bool> {
    m.eval(f)
}
