//! Bilateral ("Set-Set") logical consequence over finite propositional languages.
//!
//! The engine treats assertion and denial as equal citizens: a consecution
//! `(Π, Σ)` reads "assert everything in Π, deny everything in Σ", an
//! S-consequence relation decides which consecutions hold, and the bilateral
//! closure maps a pair of axioms/anti-axioms to its theory-pair of theorems
//! and anti-theorems.  Everything is finite and enumerable, so every law the
//! library states about these objects is also executable as a check.
//!
//! Module map:
//!
//! * [`sets`] — fixed-width sentence sets (bit representation per language).
//! * [`lang`] — sentences, language specs, parsing and printing.
//! * [`valuation`] — bivaluations, semantics, respectful semantics `Val(·)`,
//!   conjunctive combinations.
//! * [`consequence`] — compatibility / S- / T-consequence relations, axiom
//!   checkers, least relations from schemas, counterpart constructions.
//! * [`bilateral`] — the pair closure `(Γ1, Γ0) ↦ (T1, T0)`, abstract
//!   bilateral-operator axioms, law suites, finitariness reports.
//! * [`theory`] — theory-pair spaces, lattice operations, ultrafilters and
//!   ultraproducts.
//! * [`cases`] — parametric worked examples packaged as runnable fixtures.
//! * [`report`] — structured pass/fail reports shared by all checkers.

pub mod bilateral;
pub mod cases;
pub mod consequence;
pub mod lang;
pub mod report;
pub mod sets;
pub mod theory;
pub mod valuation;

mod error;
mod limits;

pub use error::Error;
pub use limits::Limits;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
