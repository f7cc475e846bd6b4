//! Compatibility and consequence relations as first-class objects.
//!
//! The canonical representation of an S-consequence relation is a semantics:
//! `Π ⊢ Σ` holds iff no valuation of the semantics asserts all of `Π` while
//! denying all of `Σ`.  Extensional relations (explicit consecution sets)
//! exist as inputs to the axiom checkers and as raw file data; they must pass
//! `check_s_axioms` before being fed to operations that assume the closure
//! laws.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::lang::{
    format_sentence, parse_formula_permissive, Connective, Language, LanguageSpec, Sentence,
};
use crate::report::Report;
use crate::sets::SentenceSet;
use crate::valuation::{
    conjunctive_closure, determined_compat, semantics_compat, val_of, Bivaluation, RelationHandle,
    Semantics,
};
use crate::{Error, Limits, Result};

/// An ordered pair of sentence sets: asserted side `Π`, denied side `Σ`.
/// Sides may overlap or be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Consecution {
    asserted: SentenceSet,
    denied: SentenceSet,
}

impl Consecution {
    pub fn new(asserted: SentenceSet, denied: SentenceSet) -> Self {
        debug_assert_eq!(asserted.width(), denied.width());
        Consecution { asserted, denied }
    }

    pub fn from_masks(width: usize, asserted: u64, denied: u64) -> Self {
        Consecution {
            asserted: SentenceSet::from_mask(width, asserted),
            denied: SentenceSet::from_mask(width, denied),
        }
    }

    pub fn asserted(&self) -> &SentenceSet {
        &self.asserted
    }

    pub fn denied(&self) -> &SentenceSet {
        &self.denied
    }

    pub fn width(&self) -> usize {
        self.asserted.width()
    }
}

/// Renders a consecution in the file grammar, e.g. `p, p -> q |- q`.
pub fn format_consecution(c: &Consecution, lang: &Language) -> String {
    let left = lang.render_set(c.asserted());
    let right = lang.render_set(c.denied());
    match (left.is_empty(), right.is_empty()) {
        (true, true) => "|-".to_string(),
        (true, false) => format!("|- {right}"),
        (false, true) => format!("{left} |-"),
        (false, false) => format!("{left} |- {right}"),
    }
}

/// Parses `p, p->q |- q`; either side may be empty.
pub fn parse_consecution(text: &str, lang: &Language) -> Result<Consecution> {
    let (left, right) = text
        .split_once("|-")
        .ok_or_else(|| Error::InvalidInput(format!("missing `|-` in consecution `{text}`")))?;
    Ok(Consecution::new(
        lang.resolve_set(left)?,
        lang.resolve_set(right)?,
    ))
}

/// One consecution per non-blank line.
pub fn parse_consecutions_file(text: &str, lang: &Language) -> Result<Vec<Consecution>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_consecution(l, lang))
        .collect()
}

// ---------------------------------------------------------------------------
// S-consequence relations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum SBacking {
    Semantics(Semantics),
    Extensional {
        width: usize,
        members: BTreeSet<Consecution>,
    },
}

/// A Set-Set consequence relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SConsequence {
    backing: SBacking,
}

impl SConsequence {
    pub fn from_semantics(semantics: Semantics) -> Self {
        SConsequence {
            backing: SBacking::Semantics(semantics),
        }
    }

    /// Wraps an explicit consecution set without validating the closure
    /// axioms; run [`check_s_axioms`] before trusting it.
    pub fn extensional(width: usize, members: BTreeSet<Consecution>) -> Self {
        SConsequence {
            backing: SBacking::Extensional { width, members },
        }
    }

    pub fn width(&self) -> usize {
        match &self.backing {
            SBacking::Semantics(sem) => sem.width(),
            SBacking::Extensional { width, .. } => *width,
        }
    }

    /// The backing semantics, when this relation is semantics-backed.
    pub fn semantics(&self) -> Option<&Semantics> {
        match &self.backing {
            SBacking::Semantics(sem) => Some(sem),
            SBacking::Extensional { .. } => None,
        }
    }

    /// `Π ⊢ Σ`: no backing valuation realizes the consecution; extensional
    /// backing answers by membership.
    pub fn holds(&self, c: &Consecution) -> bool {
        match &self.backing {
            SBacking::Semantics(sem) => !semantics_compat(sem, c),
            SBacking::Extensional { members, .. } => members.contains(c),
        }
    }

    /// A valuation of the backing semantics witnessing compatibility, i.e. a
    /// countermodel to `Π ⊢ Σ`.  `None` when the consecution holds or the
    /// relation is extensional.
    pub fn countermodel(&self, c: &Consecution) -> Option<&Bivaluation> {
        match &self.backing {
            SBacking::Semantics(sem) => {
                sem.valuations().iter().find(|v| determined_compat(v, c))
            }
            SBacking::Extensional { .. } => None,
        }
    }
}

/// A compatibility relation: an explicit consecution set, or the complement
/// of an S-consequence relation.
pub enum CompatibilityRel {
    Extensional {
        width: usize,
        members: BTreeSet<Consecution>,
    },
    ComplementOf(SConsequence),
}

impl CompatibilityRel {
    pub fn width(&self) -> usize {
        match self {
            CompatibilityRel::Extensional { width, .. } => *width,
            CompatibilityRel::ComplementOf(rel) => rel.width(),
        }
    }

    pub fn compatible(&self, c: &Consecution) -> bool {
        match self {
            CompatibilityRel::Extensional { members, .. } => members.contains(c),
            CompatibilityRel::ComplementOf(rel) => !rel.holds(c),
        }
    }
}

// ---------------------------------------------------------------------------
// Dense pair tables for exhaustive sweeps (|L| <= 5)
// ---------------------------------------------------------------------------

pub(crate) const SWEEP_WIDTH_MAX: usize = 5;

/// A relation on `℘(L) × ℘(L)` tabulated as one bit per `(Π, Σ)` code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RelTable {
    width: usize,
    bits: Vec<u64>,
}

impl RelTable {
    fn code(&self, pi: u64, sigma: u64) -> usize {
        (pi | (sigma << self.width)) as usize
    }

    pub(crate) fn width(&self) -> usize {
        self.width
    }

    pub(crate) fn from_fn(width: usize, f: impl Fn(u64, u64) -> bool) -> Result<RelTable> {
        if width > SWEEP_WIDTH_MAX {
            return Err(Error::CapExceeded {
                needed: width as u64,
                cap: SWEEP_WIDTH_MAX as u64,
            });
        }
        let codes = 1usize << (2 * width);
        let mut table = RelTable {
            width,
            bits: vec![0; codes.div_ceil(64)],
        };
        let side = 1u64 << width;
        for pi in 0..side {
            for sigma in 0..side {
                if f(pi, sigma) {
                    let c = table.code(pi, sigma);
                    table.bits[c / 64] |= 1u64 << (c % 64);
                }
            }
        }
        Ok(table)
    }

    /// Tabulates the compatibility relation a semantics determines: the
    /// pairs `(Π, Σ) ⊆ (1_v, 0_v)` for each valuation.
    pub(crate) fn compat_from_semantics(sem: &Semantics) -> Result<RelTable> {
        let width = sem.width();
        if width > SWEEP_WIDTH_MAX {
            return Err(Error::CapExceeded {
                needed: width as u64,
                cap: SWEEP_WIDTH_MAX as u64,
            });
        }
        let codes = 1usize << (2 * width);
        let mut table = RelTable {
            width,
            bits: vec![0; codes.div_ceil(64)],
        };
        for v in sem.valuations() {
            let ones = v.asserted().mask();
            let zeros = v.denied().mask();
            let mut pi = ones;
            loop {
                let mut sigma = zeros;
                loop {
                    let c = table.code(pi, sigma);
                    table.bits[c / 64] |= 1u64 << (c % 64);
                    if sigma == 0 {
                        break;
                    }
                    sigma = (sigma - 1) & zeros;
                }
                if pi == 0 {
                    break;
                }
                pi = (pi - 1) & ones;
            }
        }
        Ok(table)
    }

    pub(crate) fn get(&self, pi: u64, sigma: u64) -> bool {
        let c = self.code(pi, sigma);
        self.bits[c / 64] >> (c % 64) & 1 == 1
    }
}

fn mask_names(lang: &Language, mask: u64) -> Value {
    let names: Vec<String> = (0..lang.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| lang.name(i))
        .collect();
    Value::from(names)
}

// ---------------------------------------------------------------------------
// Axiom checkers
// ---------------------------------------------------------------------------

fn compat_table(rel: &CompatibilityRel) -> Result<RelTable> {
    match rel {
        CompatibilityRel::ComplementOf(s) => match s.semantics() {
            Some(sem) => RelTable::compat_from_semantics(sem),
            None => RelTable::from_fn(rel.width(), |pi, sigma| {
                rel.compatible(&Consecution::from_masks(rel.width(), pi, sigma))
            }),
        },
        CompatibilityRel::Extensional { width, .. } => RelTable::from_fn(*width, |pi, sigma| {
            rel.compatible(&Consecution::from_masks(*width, pi, sigma))
        }),
    }
}

/// Checks the compatibility axioms: downward closure on both sides, no
/// overlap, and the split property with `Δ` ranging over every subset of
/// `L`.  Failures are data, reported with a witness consecution.
pub fn check_compat_axioms(rel: &CompatibilityRel, lang: &Language) -> Result<Report> {
    let table = compat_table(rel)?;
    let width = table.width();
    let side = 1u64 << width;
    let full = side - 1;
    let mut report = Report::new("compat-axioms");

    // (C0): compatible pairs are downward closed on both sides.
    let mut witness = None;
    'c0: for pi in 0..side {
        for sigma in 0..side {
            if !table.get(pi, sigma) {
                continue;
            }
            let mut sub_pi = pi;
            loop {
                let mut sub_sigma = sigma;
                loop {
                    if !table.get(sub_pi, sub_sigma) {
                        witness = Some(json!({
                            "pi": mask_names(lang, sub_pi),
                            "sigma": mask_names(lang, sub_sigma),
                            "from_pi": mask_names(lang, pi),
                            "from_sigma": mask_names(lang, sigma),
                        }));
                        break 'c0;
                    }
                    if sub_sigma == 0 {
                        break;
                    }
                    sub_sigma = (sub_sigma - 1) & sigma;
                }
                if sub_pi == 0 {
                    break;
                }
                sub_pi = (sub_pi - 1) & pi;
            }
        }
    }
    report.verdict("C0", witness);

    // (C1): no glut — a compatible pair has disjoint sides.
    let mut witness = None;
    'c1: for pi in 0..side {
        for sigma in 0..side {
            if table.get(pi, sigma) && pi & sigma != 0 {
                witness = Some(json!({
                    "pi": mask_names(lang, pi),
                    "sigma": mask_names(lang, sigma),
                }));
                break 'c1;
            }
        }
    }
    report.verdict("C1", witness);

    // (C2): a compatible pair splits every Δ into asserted and denied parts.
    let mut witness = None;
    'c2: for pi in 0..side {
        for sigma in 0..side {
            if !table.get(pi, sigma) {
                continue;
            }
            for delta in 0..side {
                let mut split = delta;
                let mut found = false;
                loop {
                    if table.get(pi | split, sigma | (delta & !split)) {
                        found = true;
                        break;
                    }
                    if split == 0 {
                        break;
                    }
                    split = (split - 1) & delta;
                }
                if !found {
                    witness = Some(json!({
                        "pi": mask_names(lang, pi),
                        "sigma": mask_names(lang, sigma),
                        "delta": mask_names(lang, delta),
                    }));
                    break 'c2;
                }
            }
        }
    }
    report.verdict("C2", witness);
    let _ = full;
    Ok(report)
}

/// Checks (S0) monotonicity on both sides, (S1) overlap, and (S2) cut with
/// `Δ` ranging over every subset of `L`.
pub fn check_s_axioms(rel: &SConsequence, lang: &Language) -> Result<Report> {
    let width = rel.width();
    let table = match rel.semantics() {
        Some(sem) => RelTable::compat_from_semantics(sem)?,
        None => RelTable::from_fn(width, |pi, sigma| {
            !rel.holds(&Consecution::from_masks(width, pi, sigma))
        })?,
    };
    // `table` tabulates the complement; holding = not compatible.
    let holds = |pi: u64, sigma: u64| !table.get(pi, sigma);
    let side = 1u64 << width;
    let full = side - 1;
    let mut report = Report::new("s-axioms");

    // (S0): holding consecutions are upward closed on both sides.
    let mut witness = None;
    's0: for pi in 0..side {
        for sigma in 0..side {
            if !holds(pi, sigma) {
                continue;
            }
            // Supersets: or in any subset of the complement on each side.
            let free_pi = full & !pi;
            let free_sigma = full & !sigma;
            let mut add_pi = free_pi;
            loop {
                let mut add_sigma = free_sigma;
                loop {
                    if !holds(pi | add_pi, sigma | add_sigma) {
                        witness = Some(json!({
                            "pi": mask_names(lang, pi),
                            "sigma": mask_names(lang, sigma),
                            "super_pi": mask_names(lang, pi | add_pi),
                            "super_sigma": mask_names(lang, sigma | add_sigma),
                        }));
                        break 's0;
                    }
                    if add_sigma == 0 {
                        break;
                    }
                    add_sigma = (add_sigma - 1) & free_sigma;
                }
                if add_pi == 0 {
                    break;
                }
                add_pi = (add_pi - 1) & free_pi;
            }
        }
    }
    report.verdict("S0", witness);

    // (S1): overlapping sides always hold.
    let mut witness = None;
    's1: for pi in 0..side {
        for sigma in 0..side {
            if pi & sigma != 0 && !holds(pi, sigma) {
                witness = Some(json!({
                    "pi": mask_names(lang, pi),
                    "sigma": mask_names(lang, sigma),
                }));
                break 's1;
            }
        }
    }
    report.verdict("S1", witness);

    // (S2): if every split of Δ yields a holding consecution, the bare pair
    // holds.
    let mut witness = None;
    's2: for pi in 0..side {
        for sigma in 0..side {
            if holds(pi, sigma) {
                continue;
            }
            for delta in 0..side {
                let mut split = delta;
                let mut all = true;
                loop {
                    if !holds(pi | split, sigma | (delta & !split)) {
                        all = false;
                        break;
                    }
                    if split == 0 {
                        break;
                    }
                    split = (split - 1) & delta;
                }
                if all {
                    witness = Some(json!({
                        "pi": mask_names(lang, pi),
                        "sigma": mask_names(lang, sigma),
                        "delta": mask_names(lang, delta),
                    }));
                    break 's2;
                }
            }
        }
    }
    report.verdict("S2", witness);
    Ok(report)
}

/// Checks (T0) premise monotonicity, (T1) reflexivity, (T2) cut.
pub fn check_t_axioms(trel: &TConsequence, lang: &Language) -> Result<Report> {
    let width = trel.width();
    if width > SWEEP_WIDTH_MAX {
        return Err(Error::CapExceeded {
            needed: width as u64,
            cap: SWEEP_WIDTH_MAX as u64,
        });
    }
    let side = 1u64 << width;
    let full = side - 1;
    let holds = |gamma: u64, a: usize| trel.holds(&SentenceSet::from_mask(width, gamma), a);
    let mut report = Report::new("t-axioms");

    let mut witness = None;
    't0: for gamma in 0..side {
        for a in 0..width {
            if !holds(gamma, a) {
                continue;
            }
            let free = full & !gamma;
            let mut add = free;
            loop {
                if !holds(gamma | add, a) {
                    witness = Some(json!({
                        "gamma": mask_names(lang, gamma | add),
                        "conclusion": lang.name(a),
                    }));
                    break 't0;
                }
                if add == 0 {
                    break;
                }
                add = (add - 1) & free;
            }
        }
    }
    report.verdict("T0", witness);

    let mut witness = None;
    't1: for gamma in 0..side {
        for a in 0..width {
            if gamma >> a & 1 == 1 && !holds(gamma, a) {
                witness = Some(json!({
                    "gamma": mask_names(lang, gamma),
                    "conclusion": lang.name(a),
                }));
                break 't1;
            }
        }
    }
    report.verdict("T1", witness);

    let mut witness = None;
    't2: for gamma in 0..side {
        for delta in 0..side {
            let all_lemmas =
                (0..width).all(|d| delta >> d & 1 == 0 || holds(gamma, d));
            if !all_lemmas {
                continue;
            }
            for a in 0..width {
                if holds(gamma | delta, a) && !holds(gamma, a) {
                    witness = Some(json!({
                        "gamma": mask_names(lang, gamma),
                        "delta": mask_names(lang, delta),
                        "conclusion": lang.name(a),
                    }));
                    break 't2;
                }
            }
        }
    }
    report.verdict("T2", witness);
    Ok(report)
}

// ---------------------------------------------------------------------------
// Consecution schemas and least relations
// ---------------------------------------------------------------------------

/// A formula over metavariables; single upper-case identifiers range over
/// every sentence of the target language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemaTerm {
    Metavar(char),
    Atom(String),
    Compound(Connective, Vec<SchemaTerm>),
}

impl SchemaTerm {
    fn from_sentence(s: &Sentence) -> SchemaTerm {
        match s {
            Sentence::Atom(name) => {
                let mut chars = name.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) if c.is_ascii_uppercase() => SchemaTerm::Metavar(c),
                    _ => SchemaTerm::Atom(name.clone()),
                }
            }
            Sentence::Compound(conn, args) => SchemaTerm::Compound(
                *conn,
                args.iter().map(SchemaTerm::from_sentence).collect(),
            ),
        }
    }

    fn metavars(&self, out: &mut BTreeSet<char>) {
        match self {
            SchemaTerm::Metavar(c) => {
                out.insert(*c);
            }
            SchemaTerm::Atom(_) => {}
            SchemaTerm::Compound(_, args) => {
                for a in args {
                    a.metavars(out);
                }
            }
        }
    }

    fn substitute(&self, assignment: &BTreeMap<char, &Sentence>) -> Sentence {
        match self {
            SchemaTerm::Metavar(c) => (*assignment.get(c).expect("assignment total")).clone(),
            SchemaTerm::Atom(name) => Sentence::Atom(name.clone()),
            SchemaTerm::Compound(conn, args) => Sentence::Compound(
                *conn,
                args.iter().map(|a| a.substitute(assignment)).collect(),
            ),
        }
    }
}

/// A consecution with metavariable sides, e.g. `A, A -> B |- B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsecutionSchema {
    asserted: Vec<SchemaTerm>,
    denied: Vec<SchemaTerm>,
}

impl ConsecutionSchema {
    pub fn new(asserted: Vec<SchemaTerm>, denied: Vec<SchemaTerm>) -> Self {
        ConsecutionSchema { asserted, denied }
    }

    /// Parses `A, A->B |- B`.
    pub fn parse(text: &str) -> Result<ConsecutionSchema> {
        let (left, right) = text
            .split_once("|-")
            .ok_or_else(|| Error::InvalidInput(format!("missing `|-` in schema `{text}`")))?;
        let side = |s: &str| -> Result<Vec<SchemaTerm>> {
            let s = s.trim();
            if s.is_empty() {
                return Ok(Vec::new());
            }
            split_commas(s)
                .iter()
                .map(|part| Ok(SchemaTerm::from_sentence(&parse_formula_permissive(part)?)))
                .collect()
        };
        Ok(ConsecutionSchema {
            asserted: side(left)?,
            denied: side(right)?,
        })
    }

    /// All instances over the language.  Assignments mapping some formula
    /// outside the finite language are skipped; this is a truncation
    /// artifact of working with depth-bounded languages.
    pub fn instantiate(&self, lang: &Language) -> Result<Vec<Consecution>> {
        let mut vars = BTreeSet::new();
        for t in self.asserted.iter().chain(&self.denied) {
            t.metavars(&mut vars);
        }
        let vars: Vec<char> = vars.into_iter().collect();
        let count = (lang.len() as u64).checked_pow(vars.len() as u32);
        match count {
            Some(c) if c <= 1 << 22 => {}
            _ => {
                return Err(Error::CapExceeded {
                    needed: count.unwrap_or(u64::MAX),
                    cap: 1 << 22,
                });
            }
        }
        let mut out = BTreeSet::new();
        let mut tuple = vec![0usize; vars.len()];
        loop {
            let assignment: BTreeMap<char, &Sentence> = vars
                .iter()
                .zip(&tuple)
                .map(|(c, &i)| (*c, lang.sentence(i)))
                .collect();
            let mut ok = true;
            let mut asserted = SentenceSet::empty(lang.len());
            for t in &self.asserted {
                match lang.position(&t.substitute(&assignment)) {
                    Some(i) => asserted.insert(i),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            let mut denied = SentenceSet::empty(lang.len());
            if ok {
                for t in &self.denied {
                    match lang.position(&t.substitute(&assignment)) {
                        Some(i) => denied.insert(i),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if ok {
                out.insert(Consecution::new(asserted, denied));
            }
            // Odometer over assignments.
            let mut k = tuple.len();
            loop {
                if k == 0 {
                    return Ok(out.into_iter().collect());
                }
                k -= 1;
                tuple[k] += 1;
                if tuple[k] < lang.len() {
                    break;
                }
                tuple[k] = 0;
                if k == 0 {
                    return Ok(out.into_iter().collect());
                }
            }
            if tuple.iter().all(|&i| i == 0) {
                return Ok(out.into_iter().collect());
            }
        }
    }
}

fn split_commas(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

/// One schema per non-blank line.
pub fn parse_schemas_file(text: &str) -> Result<Vec<ConsecutionSchema>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(ConsecutionSchema::parse)
        .collect()
}

/// Enumerates every valuation that respects all given consecutions.
///
/// Each consecution `(Π, Σ)` rules out the assignments with `Π` all true and
/// `Σ` all false, so the respectful valuations are exactly the models of the
/// clause set `{¬Π ∨ Σ}`.  A backtracking search with unit propagation
/// enumerates them without touching the full `2^|L|` space; the number of
/// *solutions* is still capped.
pub fn respectful_models(
    instances: &BTreeSet<Consecution>,
    width: usize,
    limits: &Limits,
) -> Result<Semantics> {
    let clauses: Vec<(SentenceSet, SentenceSet)> = instances
        .iter()
        .map(|c| (c.asserted().clone(), c.denied().clone()))
        .collect();
    let max_models: u64 = 1u64 << limits.valuation_cap.min(63);

    #[derive(Clone)]
    struct State {
        t: SentenceSet,
        f: SentenceSet,
    }

    fn propagate(clauses: &[(SentenceSet, SentenceSet)], st: &mut State) -> bool {
        loop {
            let mut changed = false;
            for (neg, pos) in clauses {
                // Satisfied: some Π-sentence already false, or some
                // Σ-sentence already true.
                if neg.overlaps(&st.f) || pos.overlaps(&st.t) {
                    continue;
                }
                let open_neg = neg.difference(&st.t);
                let open_pos = pos.difference(&st.f).difference(&st.t);
                match open_neg.count() + open_pos.count() {
                    0 => return false,
                    1 => {
                        if let Some(i) = open_neg.min_index() {
                            st.f.insert(i);
                        } else if let Some(i) = open_pos.min_index() {
                            st.t.insert(i);
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(
        clauses: &[(SentenceSet, SentenceSet)],
        st: State,
        width: usize,
        models: &mut Vec<Bivaluation>,
        max_models: u64,
    ) -> Result<()> {
        let assigned = st.t.union(&st.f);
        match assigned.complement().min_index() {
            None => {
                if models.len() as u64 >= max_models {
                    return Err(Error::CapExceeded {
                        needed: models.len() as u64 + 1,
                        cap: max_models,
                    });
                }
                models.push(Bivaluation::new(st.t));
                Ok(())
            }
            Some(i) => {
                let _ = width;
                for value in [false, true] {
                    let mut next = st.clone();
                    if value {
                        next.t.insert(i);
                    } else {
                        next.f.insert(i);
                    }
                    if propagate(clauses, &mut next) {
                        search(clauses, next, width, models, max_models)?;
                    }
                }
                Ok(())
            }
        }
    }

    let mut init = State {
        t: SentenceSet::empty(width),
        f: SentenceSet::empty(width),
    };
    let mut models = Vec::new();
    if propagate(&clauses, &mut init) {
        search(&clauses, init, width, &mut models, max_models)?;
    }
    Ok(Semantics::new(width, models))
}

/// The least S-consequence relation containing every instance of the given
/// schemas, represented by its complete respectful semantics.
pub fn s_conseq_least(
    schemas: &[ConsecutionSchema],
    lang: &Language,
    limits: &Limits,
) -> Result<SConsequence> {
    let mut instances = BTreeSet::new();
    for schema in schemas {
        instances.extend(schema.instantiate(lang)?);
    }
    if instances.is_empty() && lang.len() > limits.valuation_cap {
        return Err(Error::CapExceeded {
            needed: lang.len() as u64,
            cap: limits.valuation_cap as u64,
        });
    }
    let semantics = respectful_models(&instances, lang.len(), limits)?;
    Ok(SConsequence::from_semantics(semantics))
}

// ---------------------------------------------------------------------------
// T-consequence relations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum TBacking {
    Assertion(SConsequence),
    Denial(SConsequence),
    Extensional {
        width: usize,
        entries: BTreeSet<(SentenceSet, usize)>,
    },
}

/// A Set-Formula consequence relation: many premises, one conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TConsequence {
    backing: TBacking,
}

impl TConsequence {
    /// `Γ ⊢ᵀ A` iff `Γ ⊢ {A}`.
    pub fn assertion_based(rel: SConsequence) -> Self {
        TConsequence {
            backing: TBacking::Assertion(rel),
        }
    }

    /// `Σ ⊢ᵀ A` iff `{A} ⊢ Σ` — premises are denials.
    pub fn denial_based(rel: SConsequence) -> Self {
        TConsequence {
            backing: TBacking::Denial(rel),
        }
    }

    pub fn extensional(width: usize, entries: BTreeSet<(SentenceSet, usize)>) -> Self {
        TConsequence {
            backing: TBacking::Extensional { width, entries },
        }
    }

    pub fn width(&self) -> usize {
        match &self.backing {
            TBacking::Assertion(rel) | TBacking::Denial(rel) => rel.width(),
            TBacking::Extensional { width, .. } => *width,
        }
    }

    pub fn holds(&self, premises: &SentenceSet, conclusion: usize) -> bool {
        match &self.backing {
            TBacking::Assertion(rel) => rel.holds(&Consecution::new(
                premises.clone(),
                SentenceSet::singleton(rel.width(), conclusion),
            )),
            TBacking::Denial(rel) => rel.holds(&Consecution::new(
                SentenceSet::singleton(rel.width(), conclusion),
                premises.clone(),
            )),
            TBacking::Extensional { entries, .. } => {
                entries.contains(&(premises.clone(), conclusion))
            }
        }
    }

    /// `C(Γ) = {A : Γ ⊢ᵀ A}`.  For semantics-backed relations this is the
    /// intersection of the asserted (resp. denied) sets of the models of
    /// `Γ`, with the empty intersection giving `L`.
    pub fn closure(&self, gamma: &SentenceSet) -> SentenceSet {
        let width = self.width();
        match &self.backing {
            TBacking::Assertion(rel) if rel.semantics().is_some() => {
                let sem = rel.semantics().unwrap();
                let mut out = SentenceSet::full(width);
                for v in sem.valuations() {
                    if gamma.is_subset_of(v.asserted()) {
                        out = out.intersection(v.asserted());
                    }
                }
                out
            }
            TBacking::Denial(rel) if rel.semantics().is_some() => {
                let sem = rel.semantics().unwrap();
                let mut out = SentenceSet::full(width);
                for v in sem.valuations() {
                    let denied = v.denied();
                    if gamma.is_subset_of(&denied) {
                        out = out.intersection(&denied);
                    }
                }
                out
            }
            _ => SentenceSet::from_indices(
                width,
                (0..width).filter(|a| self.holds(gamma, *a)),
            ),
        }
    }

    /// `Γ` is consistent when its closure is not the whole language.
    pub fn is_consistent(&self, gamma: &SentenceSet) -> bool {
        !self.closure(gamma).is_full()
    }
}

/// `Th(⊢ᵀ)`: every closure, i.e. every fixed point reachable from some
/// axiom set.  Enumerates all `2^|L|` axiom sets; sorted and deduplicated.
pub fn theory_set(trel: &TConsequence) -> Result<Vec<SentenceSet>> {
    let width = trel.width();
    if width > 16 {
        return Err(Error::CapExceeded {
            needed: width as u64,
            cap: 16,
        });
    }
    let mut theories = BTreeSet::new();
    for mask in 0..(1u64 << width) {
        theories.insert(trel.closure(&SentenceSet::from_mask(width, mask)));
    }
    Ok(theories.into_iter().collect())
}

/// The relatively maximal theories: closed sets `T` such that some `A ∉ T`
/// belongs to the closure of every proper extension of `T`.
pub fn relatively_maximal_theories(trel: &TConsequence) -> Result<Vec<SentenceSet>> {
    let width = trel.width();
    if width > 12 {
        return Err(Error::CapExceeded {
            needed: width as u64,
            cap: 12,
        });
    }
    // Memoize every closure; the extension sweep below hits each repeatedly.
    let side = 1u64 << width;
    let closures: Vec<SentenceSet> = (0..side)
        .map(|mask| trel.closure(&SentenceSet::from_mask(width, mask)))
        .collect();
    let theories = theory_set(trel)?;
    let full = side - 1;
    let mut out = Vec::new();
    for theory in theories {
        let t_mask = theory.mask();
        let free = full & !t_mask;
        if free == 0 {
            continue;
        }
        let witness = (0..width)
            .filter(|a| free >> a & 1 == 1)
            .find(|a| {
                // Every proper extension of T entails A.
                let mut add = free;
                loop {
                    if add != 0 && !closures[(t_mask | add) as usize].contains(*a) {
                        return false;
                    }
                    if add == 0 {
                        break;
                    }
                    add = (add - 1) & free;
                }
                true
            });
        if witness.is_some() {
            out.push(theory);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Counterparts
// ---------------------------------------------------------------------------

/// The minimum S-counterpart of a T-consequence relation: the relation
/// determined by `Val(⊢ᵀ)`.  Cross-checked against the direct definition
/// "`(Π, Σ)` holds iff `Π ⊢ᵀ A` for some `A ∈ Σ`": exhaustively for small
/// languages, on sampled consecutions otherwise.
pub fn min_counterpart(trel: &TConsequence, limits: &Limits) -> Result<SConsequence> {
    let width = trel.width();
    let t_holds = |premises: &SentenceSet, a: usize| trel.holds(premises, a);
    let respectful = val_of(&RelationHandle::TConsequence(&t_holds), width, limits)?;
    let rel = SConsequence::from_semantics(respectful);

    let singleton_route = |c: &Consecution| c.denied().iter().any(|a| trel.holds(c.asserted(), a));
    let mut check = |c: &Consecution| -> Result<()> {
        if rel.holds(c) != singleton_route(c) {
            return Err(Error::Internal(format!(
                "minimum-counterpart routes disagree on {:?}",
                c
            )));
        }
        Ok(())
    };
    if width <= 8 {
        for pi in 0..(1u64 << width) {
            for sigma in 0..(1u64 << width) {
                check(&Consecution::from_masks(width, pi, sigma))?;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_6e63);
        for _ in 0..4096 {
            let pi = SentenceSet::from_indices(
                width,
                (0..width).filter(|_| rng.gen_bool(0.5)),
            );
            let sigma = SentenceSet::from_indices(
                width,
                (0..width).filter(|_| rng.gen_bool(0.5)),
            );
            check(&Consecution::new(pi, sigma))?;
        }
    }
    Ok(rel)
}

/// The maximum S-counterpart, when it exists: the relation determined by the
/// valuations whose asserted sets are relatively maximal theories, provided
/// the conjunctive closure of that semantics recovers `Val(⊢ᵀ)`.
pub fn max_counterpart(trel: &TConsequence, limits: &Limits) -> Result<Option<SConsequence>> {
    let width = trel.width();
    let maximal = relatively_maximal_theories(trel)?;
    let candidate = Semantics::new(
        width,
        maximal.into_iter().map(Bivaluation::new).collect(),
    );
    let t_holds = |premises: &SentenceSet, a: usize| trel.holds(premises, a);
    let respectful = val_of(&RelationHandle::TConsequence(&t_holds), width, limits)?;
    if conjunctive_closure(&candidate) == respectful {
        Ok(Some(SConsequence::from_semantics(candidate)))
    } else {
        Ok(None)
    }
}

/// Extensional equality of two relations over the same small language.
pub fn relations_equal(a: &SConsequence, b: &SConsequence) -> Result<bool> {
    let width = a.width();
    if width != b.width() {
        return Err(Error::WidthMismatch(width, b.width()));
    }
    if width > 10 {
        return Err(Error::CapExceeded {
            needed: width as u64,
            cap: 10,
        });
    }
    for pi in 0..(1u64 << width) {
        for sigma in 0..(1u64 << width) {
            let c = Consecution::from_masks(width, pi, sigma);
            if a.holds(&c) != b.holds(&c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Convenience: the standard Boolean-semantics builder used by tests and
/// case studies.  Every assignment of the atoms extends uniquely to the
/// compounds via the classical truth tables.
pub fn boolean_semantics(lang: &Language) -> Result<Semantics> {
    let atoms: Vec<String> = match lang.spec() {
        LanguageSpec::Generated { atoms, .. } => atoms.clone(),
        LanguageSpec::Explicit { .. } => {
            return Err(Error::InvalidInput(
                "boolean semantics requires a generated language".into(),
            ));
        }
    };
    fn eval(s: &Sentence, atom_values: &BTreeMap<&str, bool>) -> bool {
        match s {
            Sentence::Atom(name) => atom_values[name.as_str()],
            Sentence::Compound(conn, args) => match conn {
                Connective::Implies => {
                    !eval(&args[0], atom_values) || eval(&args[1], atom_values)
                }
                Connective::Or => eval(&args[0], atom_values) || eval(&args[1], atom_values),
                Connective::And => eval(&args[0], atom_values) && eval(&args[1], atom_values),
                Connective::Not => !eval(&args[0], atom_values),
            },
        }
    }
    let mut valuations = Vec::new();
    for mask in 0..(1u64 << atoms.len()) {
        let atom_values: BTreeMap<&str, bool> = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), mask >> i & 1 == 1))
            .collect();
        let asserted = SentenceSet::from_indices(
            lang.len(),
            (0..lang.len()).filter(|i| eval(lang.sentence(*i), &atom_values)),
        );
        valuations.push(Bivaluation::new(asserted));
    }
    Ok(Semantics::new(lang.len(), valuations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::enumerate_language;
    use crate::valuation::all_valuations;

    fn limits() -> Limits {
        Limits::default()
    }

    fn impl_lang(depth: usize) -> Language {
        enumerate_language(&LanguageSpec::generated(
            vec!["p", "q"],
            vec![Connective::Implies],
            depth,
        ))
        .unwrap()
    }

    fn cpl_schemas() -> Vec<ConsecutionSchema> {
        ["A, A->B |- B", "B |- A->B", "|- A, A->B"]
            .iter()
            .map(|s| ConsecutionSchema::parse(s).unwrap())
            .collect()
    }

    #[test]
    fn modus_ponens_holds_in_boolean_semantics() {
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(boolean_semantics(&lang).unwrap());
        let c = parse_consecution("p, p->q |- q", &lang).unwrap();
        assert!(rel.holds(&c));
    }

    #[test]
    fn overlap_always_holds() {
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(all_valuations(6, &limits()).unwrap());
        let c = parse_consecution("p |- p", &lang).unwrap();
        assert!(rel.holds(&c));
    }

    #[test]
    fn full_space_refutes_disjoint_pairs() {
        let lang = enumerate_language(&LanguageSpec::explicit(["p", "q"])).unwrap();
        let rel = SConsequence::from_semantics(all_valuations(2, &limits()).unwrap());
        let c = parse_consecution("p |- q", &lang).unwrap();
        assert!(!rel.holds(&c));
        let counter = rel.countermodel(&c).unwrap();
        assert!(counter.asserts(0));
        assert!(!counter.asserts(1));
    }

    #[test]
    fn determined_relations_pass_both_axiom_suites() {
        let lang = enumerate_language(&LanguageSpec::explicit(["a", "b", "c"])).unwrap();
        for seed in [0u64, 1, 37, 201, 255] {
            // Semantics whose membership mask over the 8 valuations is `seed`.
            let vals = (0..8u64)
                .filter(|m| seed >> m & 1 == 1)
                .map(|m| Bivaluation::new(SentenceSet::from_mask(3, m)))
                .collect();
            let sem = Semantics::new(3, vals);
            let rel = SConsequence::from_semantics(sem);
            assert!(check_s_axioms(&rel, &lang).unwrap().passed());
            let compat = CompatibilityRel::ComplementOf(rel);
            assert!(check_compat_axioms(&compat, &lang).unwrap().passed());
        }
    }

    #[test]
    fn glut_fails_c1() {
        let lang = enumerate_language(&LanguageSpec::explicit(["p", "q"])).unwrap();
        let mut members = BTreeSet::new();
        members.insert(Consecution::from_masks(2, 0b01, 0b01));
        let compat = CompatibilityRel::Extensional { width: 2, members };
        let report = check_compat_axioms(&compat, &lang).unwrap();
        assert_eq!(
            report.item("C1").unwrap().status,
            crate::report::CheckStatus::Fail
        );
    }

    #[test]
    fn missing_overlap_fails_s1() {
        let lang = enumerate_language(&LanguageSpec::explicit(["p"])).unwrap();
        let rel = SConsequence::extensional(1, BTreeSet::new());
        let report = check_s_axioms(&rel, &lang).unwrap();
        assert_eq!(
            report.item("S1").unwrap().status,
            crate::report::CheckStatus::Fail
        );
        let cx = report.item("S1").unwrap().counterexample.as_ref().unwrap();
        assert_eq!(cx["pi"][0], "p");
    }

    #[test]
    fn unpadded_relation_fails_s0() {
        // Holds ({p}, ∅) but no padded supersets: (S0) must fail.
        let lang = enumerate_language(&LanguageSpec::explicit(["p", "q"])).unwrap();
        let mut members = BTreeSet::new();
        members.insert(Consecution::from_masks(2, 0b01, 0b00));
        // Keep (S1)-required overlaps out of the picture: this input is
        // deliberately not an S-consequence relation and the report says so.
        let rel = SConsequence::extensional(2, members);
        let report = check_s_axioms(&rel, &lang).unwrap();
        assert_eq!(
            report.item("S0").unwrap().status,
            crate::report::CheckStatus::Fail
        );
        let cx = report.item("S0").unwrap().counterexample.as_ref().unwrap();
        assert_eq!(cx["pi"][0], "p");
    }

    #[test]
    fn least_relation_from_cpl_schemas_is_boolean() {
        let lang = impl_lang(1);
        let rel = s_conseq_least(&cpl_schemas(), &lang, &limits()).unwrap();
        let boolean = boolean_semantics(&lang).unwrap();
        assert_eq!(rel.semantics().unwrap(), &boolean);
    }

    #[test]
    fn least_relation_from_no_schemas_is_full_space() {
        let lang = enumerate_language(&LanguageSpec::explicit(["a", "b"])).unwrap();
        let rel = s_conseq_least(&[], &lang, &limits()).unwrap();
        assert_eq!(
            rel.semantics().unwrap(),
            &all_valuations(2, &limits()).unwrap()
        );
    }

    #[test]
    fn least_relation_h_style_constraint() {
        // ∅ |- n, H for each n over L = {0, 1, H}: models are the
        // valuations where denying H forces asserting every n.
        let lang = enumerate_language(&LanguageSpec::explicit(["n0", "n1", "H"])).unwrap();
        let mut instances = BTreeSet::new();
        instances.insert(Consecution::from_masks(3, 0, 0b101));
        instances.insert(Consecution::from_masks(3, 0, 0b110));
        let sem = respectful_models(&instances, 3, &limits()).unwrap();
        let expected: Vec<Bivaluation> = (0..8u64)
            .filter(|m| m >> 2 & 1 == 1 || *m & 0b011 == 0b011)
            .map(|m| Bivaluation::new(SentenceSet::from_mask(3, m)))
            .collect();
        assert_eq!(sem, Semantics::new(3, expected));
        let _ = lang;
    }

    #[test]
    fn respectful_models_matches_brute_force() {
        let lang = impl_lang(1);
        let mut instances = BTreeSet::new();
        for schema in cpl_schemas() {
            instances.extend(schema.instantiate(&lang).unwrap());
        }
        let fast = respectful_models(&instances, lang.len(), &limits()).unwrap();
        let holds = |c: &Consecution| instances.contains(c);
        let brute = val_of(&RelationHandle::Consequence(&holds), lang.len(), &limits()).unwrap();
        assert_eq!(fast, brute);
    }

    #[test]
    fn schema_instantiation_respects_language_bound() {
        let lang = impl_lang(1);
        let schema = ConsecutionSchema::parse("A, A->B |- B").unwrap();
        let instances = schema.instantiate(&lang).unwrap();
        // A→B must stay inside depth 1, so A and B range over atoms only.
        assert!(instances
            .iter()
            .all(|c| c.asserted().count() <= 2 && c.denied().count() == 1));
        assert_eq!(instances.len(), 4);
    }

    #[test]
    fn assertion_t_is_modus_ponens_fragment() {
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(boolean_semantics(&lang).unwrap());
        let trel = TConsequence::assertion_based(rel);
        let premises = lang.resolve_set("p, p->q").unwrap();
        assert!(trel.holds(&premises, lang.resolve("q").unwrap()));
        // (T1)
        let p = lang.resolve("p").unwrap();
        assert!(trel.holds(&SentenceSet::singleton(lang.len(), p), p));
    }

    #[test]
    fn denial_t_second_rule() {
        // {p→q} ⊢ᵀ-denial q means {q} ⊢ {p→q}.
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(boolean_semantics(&lang).unwrap());
        let trel = TConsequence::denial_based(rel);
        let premises = lang.resolve_set("p->q").unwrap();
        assert!(trel.holds(&premises, lang.resolve("q").unwrap()));
    }

    #[test]
    fn t_axioms_pass_for_induced_relations() {
        let lang = enumerate_language(&LanguageSpec::explicit(["a", "b", "c"])).unwrap();
        let vals = vec![
            Bivaluation::new(SentenceSet::from_mask(3, 0b011)),
            Bivaluation::new(SentenceSet::from_mask(3, 0b100)),
        ];
        let rel = SConsequence::from_semantics(Semantics::new(3, vals));
        for trel in [
            TConsequence::assertion_based(rel.clone()),
            TConsequence::denial_based(rel),
        ] {
            assert!(check_t_axioms(&trel, &lang).unwrap().passed());
        }
    }

    #[test]
    fn closure_of_q_in_cpl_fragment() {
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(boolean_semantics(&lang).unwrap());
        let trel = TConsequence::assertion_based(rel);
        let gamma = lang.resolve_set("q").unwrap();
        let closure = trel.closure(&gamma);
        let expected = lang.resolve_set("q, p->q, q->q, p->p, q->p").unwrap();
        assert_eq!(closure, expected);
    }

    #[test]
    fn closure_is_extensive_and_l_closes_to_l() {
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(boolean_semantics(&lang).unwrap());
        let trel = TConsequence::assertion_based(rel);
        let full = SentenceSet::full(lang.len());
        assert_eq!(trel.closure(&full), full);
    }

    #[test]
    fn closure_fast_path_matches_generic() {
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(boolean_semantics(&lang).unwrap());
        for trel in [
            TConsequence::assertion_based(rel.clone()),
            TConsequence::denial_based(rel.clone()),
        ] {
            for mask in 0..(1u64 << lang.len()) {
                let gamma = SentenceSet::from_mask(lang.len(), mask);
                let generic = SentenceSet::from_indices(
                    lang.len(),
                    (0..lang.len()).filter(|a| trel.holds(&gamma, *a)),
                );
                assert_eq!(trel.closure(&gamma), generic);
            }
        }
    }

    #[test]
    fn footnote_semantics_makes_pq_inconsistent() {
        let vals = vec![
            Bivaluation::new(SentenceSet::from_mask(2, 0b01)),
            Bivaluation::new(SentenceSet::from_mask(2, 0b10)),
        ];
        let rel = SConsequence::from_semantics(Semantics::new(2, vals));
        let trel = TConsequence::assertion_based(rel);
        assert!(!trel.is_consistent(&SentenceSet::from_mask(2, 0b11)));
        assert!(trel.is_consistent(&SentenceSet::from_mask(2, 0b01)));
    }

    #[test]
    fn minimal_t_relation_closure_is_identity() {
        // All valuations except the one asserting exactly {E}: the induced
        // assertion-based relation is the minimal one.
        let width = 4;
        let v_exists = Bivaluation::new(SentenceSet::from_mask(width, 0b1000));
        let sem = all_valuations(width, &limits()).unwrap().without(&v_exists);
        let trel = TConsequence::assertion_based(SConsequence::from_semantics(sem));
        for mask in 0..(1u64 << width) {
            let gamma = SentenceSet::from_mask(width, mask);
            assert_eq!(trel.closure(&gamma), gamma);
        }
    }

    #[test]
    fn relatively_maximal_theories_of_boolean_fragment() {
        let lang = impl_lang(1);
        let boolean = boolean_semantics(&lang).unwrap();
        let rel = SConsequence::from_semantics(boolean.clone());
        let trel = TConsequence::assertion_based(rel);
        let maximal = relatively_maximal_theories(&trel).unwrap();
        let expected: Vec<SentenceSet> = boolean
            .valuations()
            .iter()
            .map(|v| v.asserted().clone())
            .collect();
        assert_eq!(maximal, expected);
    }

    #[test]
    fn relatively_maximal_of_total_relation_is_empty() {
        let trel = TConsequence::assertion_based(SConsequence::from_semantics(
            Semantics::empty(2),
        ));
        assert!(relatively_maximal_theories(&trel).unwrap().is_empty());
    }

    #[test]
    fn footnote_semantics_relatively_maximal() {
        let vals = vec![
            Bivaluation::new(SentenceSet::from_mask(2, 0b01)),
            Bivaluation::new(SentenceSet::from_mask(2, 0b10)),
        ];
        let rel = SConsequence::from_semantics(Semantics::new(2, vals));
        let trel = TConsequence::assertion_based(rel);
        let maximal = relatively_maximal_theories(&trel).unwrap();
        assert_eq!(
            maximal,
            vec![
                SentenceSet::from_mask(2, 0b01),
                SentenceSet::from_mask(2, 0b10)
            ]
        );
    }

    #[test]
    fn min_counterpart_of_boolean_t() {
        let lang = impl_lang(1);
        let rel = SConsequence::from_semantics(boolean_semantics(&lang).unwrap());
        let trel = TConsequence::assertion_based(rel);
        let min = min_counterpart(&trel, &limits()).unwrap();
        // Overlap membership and a singleton-witness case.
        let p = lang.resolve("p").unwrap();
        let q = lang.resolve("q").unwrap();
        assert!(min.holds(&Consecution::new(
            SentenceSet::singleton(lang.len(), p),
            SentenceSet::singleton(lang.len(), p)
        )));
        let mp = lang.resolve_set("p, p->q").unwrap();
        let mut denied = SentenceSet::singleton(lang.len(), q);
        denied.insert(lang.resolve("q->p").unwrap());
        assert!(min.holds(&Consecution::new(mp, denied)));
    }

    #[test]
    fn max_counterpart_of_minimal_t_over_one_sentence() {
        let trel = TConsequence::assertion_based(SConsequence::from_semantics(
            all_valuations(1, &limits()).unwrap(),
        ));
        let max = max_counterpart(&trel, &limits()).unwrap();
        assert!(max.is_some());
    }

    #[test]
    fn consecution_text_roundtrip() {
        let lang = impl_lang(1);
        for text in ["p, p -> q |- q", "|- p, q", "p |-", "|-"] {
            let c = parse_consecution(text, &lang).unwrap();
            assert_eq!(format_consecution(&c, &lang), *text);
        }
    }
}
