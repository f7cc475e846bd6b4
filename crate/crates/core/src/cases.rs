//! Parametric worked examples, packaged as fixtures with named expectations.
//!
//! Each constructor builds a finite language, a semantics, and a list of
//! expectations the engine must satisfy.  Truncation parameters are explicit
//! and recorded; the infinite examples are represented by growing families
//! of finite stand-ins.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::bilateral::bilateral_closure;
use crate::consequence::{
    boolean_semantics, format_consecution, max_counterpart, min_counterpart, relations_equal,
    Consecution, ConsecutionSchema, SConsequence, TConsequence,
};
use crate::lang::{enumerate_language, Connective, Language, LanguageSpec, Sentence};
use crate::report::Report;
use crate::sets::SentenceSet;
use crate::valuation::{conjunctive_closure, determined_compat, Bivaluation, Semantics};
use crate::{Error, Limits, Result};

/// A named, checkable claim about a case study.
#[derive(Debug, Clone)]
pub struct Expectation {
    pub name: String,
    pub kind: ExpectKind,
}

#[derive(Debug, Clone)]
pub enum ExpectKind {
    /// The consecution holds (or fails) in the case's relation.
    Holds {
        consecution: Consecution,
        expected: bool,
    },
    /// The bilateral closure of the axiom pair is exactly the given pair.
    Closure {
        axioms: SentenceSet,
        anti_axioms: SentenceSet,
        theorems: SentenceSet,
        antitheorems: SentenceSet,
    },
    /// Every proper subset of `universe`, taken as pure assertions, is
    /// already closed.
    AssertionPresentationsFixed { universe: SentenceSet },
    /// The least relation generated by the schemas has exactly this case's
    /// semantics.
    LeastRelationMatches { schemas: Vec<ConsecutionSchema> },
    /// The theorems of the closed pair include all of `required`.
    TheoremsInclude {
        axioms: SentenceSet,
        anti_axioms: SentenceSet,
        required: SentenceSet,
    },
    /// The consecution's verdict in the minimum counterpart of the induced
    /// T-relation.
    MinCounterpartHolds {
        consecution: Consecution,
        expected: bool,
    },
    /// The consecution's verdict in the maximum counterpart (which must
    /// exist).
    MaxCounterpartHolds {
        consecution: Consecution,
        expected: bool,
    },
    /// The maximum counterpart exists and coincides with the case relation.
    MaxCounterpartIsWholeRelation,
    /// The induced assertion-based T-relation is the minimal one:
    /// membership and nothing else.
    InducedTIsMinimal,
    /// The valuation belongs to the conjunctive closure of the semantics.
    ValuationInConjClosure { valuation: Bivaluation },
    /// The semantics has exactly this many valuations.
    SemanticsSize { expected: usize },
    /// For every proper subset of the denied side, the consecution fails
    /// and the designated countermodel realizes it.
    ProperSubsetsRefuted {
        asserted: SentenceSet,
        denied: SentenceSet,
    },
    /// The featured theorem set cannot be reached as the plain T-closure of
    /// any sampled finite subset avoiding a fresh atom: the separating
    /// valuation certifies the gap.
    NotFinitelyAxiomatizable {
        theorems: SentenceSet,
        fresh_atom: String,
        samples: usize,
    },
}

/// A worked example: language, semantics, and expectations.
#[derive(Debug, Clone)]
pub struct CaseStudy {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub language: Language,
    pub semantics: Semantics,
    pub expectations: Vec<Expectation>,
}

impl CaseStudy {
    pub fn relation(&self) -> SConsequence {
        SConsequence::from_semantics(self.semantics.clone())
    }
}

fn atom_names(count: usize) -> Result<Vec<String>> {
    const POOL: [&str; 6] = ["p", "q", "r", "s", "t", "u"];
    if count == 0 || count > POOL.len() {
        return Err(Error::InvalidInput(format!(
            "atom count must be between 1 and {}",
            POOL.len()
        )));
    }
    Ok(POOL[..count].iter().map(|s| s.to_string()).collect())
}

/// The implication fragment: all valuations satisfying the classical truth
/// table for `->` at every compound.
pub fn cpl_implication(atom_count: usize, depth: usize, limits: &Limits) -> Result<CaseStudy> {
    let atoms = atom_names(atom_count)?;
    let lang = enumerate_language(&LanguageSpec::generated(
        atoms.clone(),
        vec![Connective::Implies],
        depth,
    ))?;
    let _ = limits;
    let semantics = boolean_semantics(&lang)?;
    let a = atoms[0].clone();
    let b = atoms.get(1).cloned().unwrap_or_else(|| atoms[0].clone());
    let mut expectations = Vec::new();
    if depth >= 1 {
        let mp = format!("{a}, {a} -> {b} |- {b}");
        let weaken = format!("{b} |- {a} -> {b}");
        let denial = format!("|- {a}, {a} -> {b}");
        for (name, text) in [
            ("modus-ponens-consecution", mp),
            ("conclusion-forces-implication", weaken),
            ("antecedent-or-implication", denial),
        ] {
            expectations.push(Expectation {
                name: name.to_string(),
                kind: ExpectKind::Holds {
                    consecution: crate::consequence::parse_consecution(&text, &lang)?,
                    expected: true,
                },
            });
        }
        let schemas = ["A, A->B |- B", "B |- A->B", "|- A, A->B"]
            .iter()
            .map(|s| ConsecutionSchema::parse(s))
            .collect::<Result<Vec<_>>>()?;
        expectations.push(Expectation {
            name: "least-relation-matches".to_string(),
            kind: ExpectKind::LeastRelationMatches { schemas },
        });
    }
    expectations.push(Expectation {
        name: "semantics-size".to_string(),
        kind: ExpectKind::SemanticsSize {
            expected: 1 << atom_count,
        },
    });
    let mut params = BTreeMap::new();
    params.insert("atoms".to_string(), atom_count as i64);
    params.insert("depth".to_string(), depth as i64);
    Ok(CaseStudy {
        name: "cpl-implication".to_string(),
        params,
        language: lang,
        semantics,
        expectations,
    })
}

/// The disjunction fragment, featuring the consecution that separates the
/// maximum counterpart from the minimum one.
pub fn cpl_disjunction(atom_count: usize, depth: usize, limits: &Limits) -> Result<CaseStudy> {
    let atoms = atom_names(atom_count.max(2))?;
    let lang = enumerate_language(&LanguageSpec::generated(
        atoms.clone(),
        vec![Connective::Or],
        depth,
    ))?;
    let _ = limits;
    let semantics = boolean_semantics(&lang)?;
    let a = &atoms[0];
    let b = &atoms[1];
    let featured = crate::consequence::parse_consecution(
        &format!("{a} | {b} |- {a}, {b}"),
        &lang,
    )?;
    let expectations = vec![
        Expectation {
            name: "disjunction-consecution".to_string(),
            kind: ExpectKind::Holds {
                consecution: featured.clone(),
                expected: true,
            },
        },
        Expectation {
            name: "not-in-minimum-counterpart".to_string(),
            kind: ExpectKind::MinCounterpartHolds {
                consecution: featured.clone(),
                expected: false,
            },
        },
        Expectation {
            name: "in-maximum-counterpart".to_string(),
            kind: ExpectKind::MaxCounterpartHolds {
                consecution: featured,
                expected: true,
            },
        },
        Expectation {
            name: "maximum-counterpart-is-whole-relation".to_string(),
            kind: ExpectKind::MaxCounterpartIsWholeRelation,
        },
        Expectation {
            name: "assert-while-denying-disjunction".to_string(),
            kind: ExpectKind::Holds {
                consecution: crate::consequence::parse_consecution(
                    &format!("{a} |- {a} | {b}"),
                    &lang,
                )?,
                expected: true,
            },
        },
    ];
    let mut params = BTreeMap::new();
    params.insert("atoms".to_string(), atoms.len() as i64);
    params.insert("depth".to_string(), depth as i64);
    Ok(CaseStudy {
        name: "cpl-disjunction".to_string(),
        params,
        language: lang,
        semantics,
        expectations,
    })
}

/// The sentence `H` is false only if every numeral is true: denying `H`
/// closes to asserting all numerals, while purely assertion-based
/// presentations are already closed.
pub fn h_example(n: usize) -> Result<CaseStudy> {
    if n == 0 {
        return Err(Error::InvalidInput("h-example needs N >= 1".into()));
    }
    let mut names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    names.push("H".to_string());
    let lang = enumerate_language(&LanguageSpec::explicit(names))?;
    let width = n + 1;
    let naturals = SentenceSet::from_mask(width, (1u64 << n) - 1);
    let valuations: Vec<Bivaluation> = (0..(1u64 << width))
        .map(|m| SentenceSet::from_mask(width, m))
        .filter(|s| s.contains(n) || naturals.is_subset_of(s))
        .map(Bivaluation::new)
        .collect();
    let semantics = Semantics::new(width, valuations);
    let h_set = SentenceSet::singleton(width, n);
    let mut expectations = vec![
        Expectation {
            name: "semantics-size".to_string(),
            kind: ExpectKind::SemanticsSize {
                expected: (1 << width) - ((1 << n) - 1),
            },
        },
        Expectation {
            name: "denial-presentation-closes-to-all-numerals".to_string(),
            kind: ExpectKind::Closure {
                axioms: SentenceSet::empty(width),
                anti_axioms: h_set.clone(),
                theorems: naturals.clone(),
                antitheorems: h_set.clone(),
            },
        },
        Expectation {
            name: "assertion-presentations-are-closed".to_string(),
            kind: ExpectKind::AssertionPresentationsFixed {
                universe: naturals.clone(),
            },
        },
    ];
    for i in 0..n {
        let mut denied = h_set.clone();
        denied.insert(i);
        expectations.push(Expectation {
            name: format!("numeral-{i}-or-H"),
            kind: ExpectKind::Holds {
                consecution: Consecution::new(SentenceSet::empty(width), denied),
                expected: true,
            },
        });
    }
    let mut params = BTreeMap::new();
    params.insert("N".to_string(), n as i64);
    Ok(CaseStudy {
        name: "h-example".to_string(),
        params,
        language: lang,
        semantics,
        expectations,
    })
}

/// Every valuation except the one asserting exactly `E`: the relation is a
/// truncation of a non-finitary one, yet the induced T-relation is minimal.
pub fn exists_example(n: usize) -> Result<CaseStudy> {
    if n < 2 {
        return Err(Error::InvalidInput("exists-example needs N >= 2".into()));
    }
    let mut names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    names.push("E".to_string());
    let lang = enumerate_language(&LanguageSpec::explicit(names))?;
    let width = n + 1;
    let v_exists = Bivaluation::new(SentenceSet::singleton(width, n));
    let valuations: Vec<Bivaluation> = (0..(1u64 << width))
        .map(|m| Bivaluation::new(SentenceSet::from_mask(width, m)))
        .filter(|v| *v != v_exists)
        .collect();
    let semantics = Semantics::new(width, valuations);
    let naturals = SentenceSet::from_mask(width, (1u64 << n) - 1);
    let e_set = SentenceSet::singleton(width, n);
    let expectations = vec![
        Expectation {
            name: "exists-entails-all-naturals".to_string(),
            kind: ExpectKind::Holds {
                consecution: Consecution::new(e_set.clone(), naturals.clone()),
                expected: true,
            },
        },
        Expectation {
            name: "no-proper-denied-witness".to_string(),
            kind: ExpectKind::ProperSubsetsRefuted {
                asserted: e_set.clone(),
                denied: naturals.clone(),
            },
        },
        Expectation {
            name: "induced-t-relation-is-minimal".to_string(),
            kind: ExpectKind::InducedTIsMinimal,
        },
        Expectation {
            name: "exists-valuation-in-conjunctive-closure".to_string(),
            kind: ExpectKind::ValuationInConjClosure {
                valuation: v_exists,
            },
        },
    ];
    let mut params = BTreeMap::new();
    params.insert("N".to_string(), n as i64);
    Ok(CaseStudy {
        name: "exists-example".to_string(),
        params,
        language: lang,
        semantics,
        expectations,
    })
}

/// The theory-pair presented by denying a single atom `q` over the
/// implication fragment: its theorem set contains every `q -> A` but has no
/// finite plain-assertion axiomatization.
pub fn q_denied_theory(atom_count: usize, depth: usize, samples: usize) -> Result<CaseStudy> {
    if atom_count < 2 {
        return Err(Error::InvalidInput(
            "q-denied-theory needs at least the atoms p and q".into(),
        ));
    }
    let atoms = atom_names(atom_count)?;
    let lang = enumerate_language(&LanguageSpec::generated(
        atoms.clone(),
        vec![Connective::Implies],
        depth,
    ))?;
    let semantics = boolean_semantics(&lang)?;
    let rel = SConsequence::from_semantics(semantics.clone());
    let width = lang.len();
    let q = lang.resolve("q")?;
    let q_denied = SentenceSet::singleton(width, q);

    // The axiomatization by implications from q.
    let q_implications = SentenceSet::from_indices(
        width,
        (0..width).filter_map(|i| {
            let s = Sentence::implies(Sentence::atom("q"), lang.sentence(i).clone());
            lang.position(&s)
        }),
    );
    // Independent routes to the expected pair: the plain T-closure of the
    // implication axioms for the theorem side, and the direct intersection
    // of the denied sets of the q-denying models for the anti-theorem side.
    let trel = TConsequence::assertion_based(rel.clone());
    let expected_theorems = trel.closure(&q_implications);
    let mut expected_antitheorems = SentenceSet::full(width);
    for v in semantics.valuations() {
        if !v.asserts(q) {
            expected_antitheorems = expected_antitheorems.intersection(&v.denied());
        }
    }

    let mut expectations = vec![
        Expectation {
            name: "theorems-contain-q-implications".to_string(),
            kind: ExpectKind::TheoremsInclude {
                axioms: SentenceSet::empty(width),
                anti_axioms: q_denied.clone(),
                required: q_implications.clone(),
            },
        },
        Expectation {
            name: "denial-pair-closure".to_string(),
            kind: ExpectKind::Closure {
                axioms: SentenceSet::empty(width),
                anti_axioms: q_denied,
                theorems: expected_theorems.clone(),
                antitheorems: expected_antitheorems,
            },
        },
    ];
    if atom_count >= 3 {
        let fresh = atoms
            .iter()
            .rev()
            .find(|a| *a != "q")
            .expect("at least three atoms")
            .clone();
        expectations.push(Expectation {
            name: "no-finite-assertion-axiomatization".to_string(),
            kind: ExpectKind::NotFinitelyAxiomatizable {
                theorems: expected_theorems,
                fresh_atom: fresh,
                samples,
            },
        });
    }
    let mut params = BTreeMap::new();
    params.insert("atoms".to_string(), atom_count as i64);
    params.insert("depth".to_string(), depth as i64);
    params.insert("samples".to_string(), samples as i64);
    Ok(CaseStudy {
        name: "q-denied-theory".to_string(),
        params,
        language: lang,
        semantics,
        expectations,
    })
}

fn close_denials_of(rel: &SConsequence, axioms: &SentenceSet) -> SentenceSet {
    crate::bilateral::close_denials(rel, &SentenceSet::empty(axioms.width()), axioms)
}

/// Builds a case study by CLI name with integer parameters.
pub fn build_case(
    name: &str,
    params: &BTreeMap<String, i64>,
    limits: &Limits,
) -> Result<CaseStudy> {
    let get = |key: &str, default: i64| params.get(key).copied().unwrap_or(default) as usize;
    match name {
        "cpl-implication" => cpl_implication(get("atoms", 2), get("depth", 1), limits),
        "cpl-disjunction" => cpl_disjunction(get("atoms", 2), get("depth", 1), limits),
        "h-example" => h_example(get("N", 3)),
        "exists-example" => exists_example(get("N", 3)),
        "q-denied-theory" => q_denied_theory(get("atoms", 3), get("depth", 2), get("samples", 20)),
        other => Err(Error::InvalidInput(format!("unknown case `{other}`"))),
    }
}

pub const CASE_NAMES: [&str; 5] = [
    "cpl-implication",
    "cpl-disjunction",
    "h-example",
    "exists-example",
    "q-denied-theory",
];

/// Evaluates one expectation against the case.
pub fn evaluate(case: &CaseStudy, kind: &ExpectKind, limits: &Limits) -> Result<bool> {
    let rel = case.relation();
    let width = case.language.len();
    match kind {
        ExpectKind::Holds {
            consecution,
            expected,
        } => Ok(rel.holds(consecution) == *expected),
        ExpectKind::Closure {
            axioms,
            anti_axioms,
            theorems,
            antitheorems,
        } => {
            let pair = bilateral_closure(&rel, axioms, anti_axioms);
            Ok(pair.theorems() == theorems && pair.antitheorems() == antitheorems)
        }
        ExpectKind::AssertionPresentationsFixed { universe } => {
            let empty = SentenceSet::empty(width);
            for gamma in universe.subsets() {
                if gamma == *universe {
                    continue;
                }
                let pair = bilateral_closure(&rel, &gamma, &empty);
                if pair.theorems() != &gamma || !pair.antitheorems().is_empty() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ExpectKind::LeastRelationMatches { schemas } => {
            let least = crate::consequence::s_conseq_least(schemas, &case.language, limits)?;
            Ok(least.semantics() == Some(&case.semantics))
        }
        ExpectKind::MinCounterpartHolds {
            consecution,
            expected,
        } => {
            let trel = TConsequence::assertion_based(rel);
            let min = min_counterpart(&trel, limits)?;
            Ok(min.holds(consecution) == *expected)
        }
        ExpectKind::MaxCounterpartHolds {
            consecution,
            expected,
        } => {
            let trel = TConsequence::assertion_based(rel);
            match max_counterpart(&trel, limits)? {
                Some(max) => Ok(max.holds(consecution) == *expected),
                None => Ok(false),
            }
        }
        ExpectKind::MaxCounterpartIsWholeRelation => {
            let trel = TConsequence::assertion_based(rel.clone());
            match max_counterpart(&trel, limits)? {
                Some(max) => relations_equal(&max, &rel),
                None => Ok(false),
            }
        }
        ExpectKind::InducedTIsMinimal => {
            let trel = TConsequence::assertion_based(rel);
            if width > 16 {
                return Err(Error::CapExceeded {
                    needed: width as u64,
                    cap: 16,
                });
            }
            for mask in 0..(1u64 << width) {
                let gamma = SentenceSet::from_mask(width, mask);
                for a in 0..width {
                    if trel.holds(&gamma, a) != gamma.contains(a) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        ExpectKind::ValuationInConjClosure { valuation } => {
            Ok(conjunctive_closure(&case.semantics).contains(valuation))
        }
        ExpectKind::SemanticsSize { expected } => Ok(case.semantics.len() == *expected),
        ExpectKind::ProperSubsetsRefuted { asserted, denied } => {
            for psi in denied.subsets() {
                if psi == *denied {
                    continue;
                }
                let c = Consecution::new(asserted.clone(), psi.clone());
                if rel.holds(&c) {
                    return Ok(false);
                }
                // The designated countermodel: assert `E` and everything
                // outside Ψ.
                let witness = Bivaluation::new(asserted.union(&denied.difference(&psi)));
                if !case.semantics.contains(&witness) || !determined_compat(&witness, &c) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ExpectKind::NotFinitelyAxiomatizable {
            theorems,
            fresh_atom,
            samples,
        } => {
            let trel = TConsequence::assertion_based(rel);
            let avoiding: Vec<usize> = theorems
                .iter()
                .filter(|i| !case.language.sentence(*i).mentions(fresh_atom))
                .collect();
            if avoiding.is_empty() {
                return Ok(false);
            }
            // Separating valuation: the fresh atom false, everything else
            // true, extended by the truth tables.
            let atom_true = |s: &Sentence| -> bool {
                fn eval(s: &Sentence, fresh: &str) -> bool {
                    match s {
                        Sentence::Atom(a) => a != fresh,
                        Sentence::Compound(Connective::Implies, args) => {
                            !eval(&args[0], fresh) || eval(&args[1], fresh)
                        }
                        Sentence::Compound(Connective::Or, args) => {
                            eval(&args[0], fresh) || eval(&args[1], fresh)
                        }
                        Sentence::Compound(Connective::And, args) => {
                            eval(&args[0], fresh) && eval(&args[1], fresh)
                        }
                        Sentence::Compound(Connective::Not, args) => !eval(&args[0], fresh),
                    }
                }
                eval(s, fresh_atom)
            };
            let separating = Bivaluation::new(SentenceSet::from_indices(
                width,
                (0..width).filter(|i| atom_true(case.language.sentence(*i))),
            ));
            let mut rng = ChaCha8Rng::seed_from_u64(0x7164_5468);
            for _ in 0..*samples {
                let size = rng.gen_range(1..=4.min(avoiding.len()));
                let mut psi = SentenceSet::empty(width);
                for _ in 0..size {
                    psi.insert(avoiding[rng.gen_range(0..avoiding.len())]);
                }
                // Ψ must be satisfied by the separating valuation, which
                // nonetheless rejects some theorem, so closure(Ψ) ≠ T1.
                if !psi.is_subset_of(separating.asserted()) {
                    return Ok(false);
                }
                let gap = theorems.difference(separating.asserted());
                if gap.is_empty() {
                    return Ok(false);
                }
                let closure = trel.closure(&psi);
                if closure == *theorems {
                    return Ok(false);
                }
                // The certificate: some theorem outside the separating
                // valuation cannot be in the closure of Ψ.
                for missing in gap.iter() {
                    if closure.contains(missing) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}

/// Runs every expectation of a case and reports one item per expectation.
pub fn run_case(case: &CaseStudy, limits: &Limits) -> Result<Report> {
    let mut report = Report::new(format!("case {}", case.name));
    report.info("params", json!(case.params));
    for expectation in &case.expectations {
        let ok = evaluate(case, &expectation.kind, limits)?;
        report.verdict(
            expectation.name.clone(),
            if ok {
                None
            } else {
                Some(json!({"case": case.name, "expectation": expectation.name}))
            },
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn cpl_implication_fixture_passes() {
        let case = cpl_implication(2, 1, &limits()).unwrap();
        assert_eq!(case.semantics.len(), 4);
        let report = run_case(&case, &limits()).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn h_example_counts_and_closures() {
        let case = h_example(3).unwrap();
        assert_eq!(case.semantics.len(), 9);
        let report = run_case(&case, &limits()).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn h_example_all_sizes() {
        for n in 1..=6 {
            let case = h_example(n).unwrap();
            let report = run_case(&case, &limits()).unwrap();
            assert!(report.passed(), "h-example N={n}: {report:?}");
        }
    }

    #[test]
    fn exists_example_all_sizes() {
        for n in 2..=6 {
            let case = exists_example(n).unwrap();
            let report = run_case(&case, &limits()).unwrap();
            assert!(report.passed(), "exists-example N={n}: {report:?}");
        }
    }

    #[test]
    fn disjunction_fixture_passes() {
        let case = cpl_disjunction(2, 1, &limits()).unwrap();
        let report = run_case(&case, &limits()).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn q_denied_two_atom_values() {
        let case = q_denied_theory(2, 1, 0).unwrap();
        let lang = &case.language;
        let rel = case.relation();
        let q = lang.resolve("q").unwrap();
        let pair = bilateral_closure(
            &rel,
            &SentenceSet::empty(lang.len()),
            &SentenceSet::singleton(lang.len(), q),
        );
        assert_eq!(
            pair.theorems(),
            &lang.resolve_set("p->p, q->p, q->q").unwrap()
        );
        assert_eq!(pair.antitheorems(), &lang.resolve_set("q").unwrap());
        let report = run_case(&case, &limits()).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn q_denied_three_atoms_separation() {
        let case = q_denied_theory(3, 1, 10).unwrap();
        let report = run_case(&case, &limits()).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn build_case_by_name() {
        for name in CASE_NAMES {
            let mut params = BTreeMap::new();
            if name == "q-denied-theory" {
                params.insert("depth".to_string(), 1);
            }
            let case = build_case(name, &params, &limits()).unwrap();
            assert_eq!(case.name, name);
        }
        assert!(build_case("nope", &BTreeMap::new(), &limits()).is_err());
    }
}
