//! Truth predicates for fully interpreted finite first-order languages.
//!
//! A finite first-order structure ([`FiniteModel`]) interprets a base language
//! `L`. The language [`Sentence`] extends it with a monadic predicate `T` over
//! numerals, the two quantified atoms `exists x. T(x)` and `forall x. T(x)`,
//! and the five classical connectives. Sentences carry a fixed structural
//! Gödel numbering ([`encode`] / [`decode`]) so that `T(n)` can refer to the
//! sentence coded by `n`.
//!
//! Given a set `U` of codes, the operator in [`operator`] decides membership
//! of a sentence in `G(U)` (forced true) and `F(U)` (forced false).
//! [`fixpoint::least_fixed_point`] iterates `U ↦ G(U)` from the empty set
//! until it stabilizes, and [`truth`] reads off the resulting valuation,
//! checks the T-biconditionals, and cross-validates against an independent
//! grounded evaluator. [`regress`] decides the infinite-regress example over
//! `ω ∪ {ω}` exactly.

pub mod error;
pub mod fixpoint;
pub mod gen;
pub mod godel;
pub mod model;
pub mod operator;
pub mod pairing;
pub mod parse;
pub mod regress;
pub mod suites;
pub mod syntax;
pub mod truth;
pub mod universe;

pub use error::{Error, Result};
pub use fixpoint::{least_fixed_point, FixpointResult, StageTrace};
pub use godel::{decode, encode, GodelCode};
pub use model::{FiniteModel, Signature};
pub use operator::{MembershipVerdict, SymbolicCodeSet};
pub use parse::{parse_formula, parse_sentence};
pub use syntax::{Formula, Sentence, Term};
pub use truth::{classify_grounded, valuation, Valuation, VerificationReport};
pub use universe::Universe;
