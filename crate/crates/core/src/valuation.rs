//! Bivaluations and canonical semantics.
//!
//! A bivaluation is total and functional by construction: it is stored as
//! its asserted set `1_v`, and the denied set `0_v` is the complement.  A
//! semantics is a finite set of bivaluations over one language; it may be
//! empty, in which case the consequence it determines is total.

use crate::consequence::Consecution;
use crate::sets::SentenceSet;
use crate::{Error, Limits, Result};

/// A total `{0,1}`-assignment on the language, stored as its asserted set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bivaluation {
    asserted: SentenceSet,
}

impl Bivaluation {
    pub fn new(asserted: SentenceSet) -> Self {
        Bivaluation { asserted }
    }

    /// The all-asserting valuation `v_⊤` with `1_v = L`.
    pub fn top(width: usize) -> Self {
        Bivaluation {
            asserted: SentenceSet::full(width),
        }
    }

    /// `1_v`.
    pub fn asserted(&self) -> &SentenceSet {
        &self.asserted
    }

    /// `0_v`, computed as the complement of the asserted set.
    pub fn denied(&self) -> SentenceSet {
        self.asserted.complement()
    }

    pub fn asserts(&self, index: usize) -> bool {
        self.asserted.contains(index)
    }

    pub fn width(&self) -> usize {
        self.asserted.width()
    }

    /// The conjunctive combination of a family: asserted sets intersect.
    /// The empty family yields `v_⊤`.
    pub fn conjunctive_combination<'a, I>(family: I, width: usize) -> Bivaluation
    where
        I: IntoIterator<Item = &'a Bivaluation>,
    {
        let mut asserted = SentenceSet::full(width);
        for v in family {
            asserted = asserted.intersection(&v.asserted);
        }
        Bivaluation { asserted }
    }
}

/// A finite set of bivaluations over one language, kept sorted and
/// duplicate-free so equality is extensional set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semantics {
    width: usize,
    valuations: Vec<Bivaluation>,
}

impl Semantics {
    pub fn new(width: usize, mut valuations: Vec<Bivaluation>) -> Self {
        valuations.sort();
        valuations.dedup();
        debug_assert!(valuations.iter().all(|v| v.width() == width));
        Semantics { width, valuations }
    }

    pub fn empty(width: usize) -> Self {
        Semantics {
            width,
            valuations: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.valuations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valuations.is_empty()
    }

    pub fn valuations(&self) -> &[Bivaluation] {
        &self.valuations
    }

    pub fn contains(&self, v: &Bivaluation) -> bool {
        self.valuations.binary_search(v).is_ok()
    }

    pub fn union(&self, other: &Semantics) -> Semantics {
        let mut vals = self.valuations.clone();
        vals.extend(other.valuations.iter().cloned());
        Semantics::new(self.width, vals)
    }

    pub fn intersection(&self, other: &Semantics) -> Semantics {
        let vals = self
            .valuations
            .iter()
            .filter(|v| other.contains(v))
            .cloned()
            .collect();
        Semantics::new(self.width, vals)
    }

    pub fn with(&self, v: Bivaluation) -> Semantics {
        let mut vals = self.valuations.clone();
        vals.push(v);
        Semantics::new(self.width, vals)
    }

    pub fn without(&self, v: &Bivaluation) -> Semantics {
        let vals = self
            .valuations
            .iter()
            .filter(|u| *u != v)
            .cloned()
            .collect();
        Semantics::new(self.width, vals)
    }
}

/// Enumerates the full valuation space `{0,1}^L`.  Errors when `2^|L|`
/// exceeds the enumeration cap.
pub fn all_valuations(width: usize, limits: &Limits) -> Result<Semantics> {
    if width > limits.valuation_cap {
        return Err(Error::CapExceeded {
            needed: width as u64,
            cap: limits.valuation_cap as u64,
        });
    }
    let count: u64 = 1u64 << width;
    let valuations = (0..count)
        .map(|mask| Bivaluation::new(SentenceSet::from_mask(width, mask)))
        .collect();
    Ok(Semantics { width, valuations })
}

/// `Π ⊆ 1_v` and `Σ ⊆ 0_v`: the valuation realizes the judgments jointly.
pub fn determined_compat(v: &Bivaluation, c: &Consecution) -> bool {
    c.asserted().is_subset_of(v.asserted()) && c.denied().is_disjoint_from(v.asserted())
}

/// Some valuation of the semantics realizes the consecution.
pub fn semantics_compat(semantics: &Semantics, c: &Consecution) -> bool {
    semantics
        .valuations
        .iter()
        .any(|v| determined_compat(v, c))
}

/// The least superset of a semantics closed under conjunctive combinations
/// of arbitrary subfamilies, including the empty one (so `v_⊤` is always a
/// member).  Pairwise intersections reach every finite-subfamily
/// combination, so a fixpoint of pairwise steps suffices.
pub fn conjunctive_closure(semantics: &Semantics) -> Semantics {
    let width = semantics.width;
    let mut closed: std::collections::BTreeSet<Bivaluation> =
        semantics.valuations.iter().cloned().collect();
    closed.insert(Bivaluation::top(width));
    loop {
        let snapshot: Vec<Bivaluation> = closed.iter().cloned().collect();
        let before = closed.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                closed.insert(Bivaluation::new(
                    a.asserted().intersection(b.asserted()),
                ));
            }
        }
        if closed.len() == before {
            break;
        }
    }
    Semantics::new(width, closed.into_iter().collect())
}

/// An oracle view of a relation, used by [`respects`] and [`val_of`] so the
/// respectful-semantics construction works uniformly over compatibility,
/// S-consequence and T-consequence relations.
pub enum RelationHandle<'a> {
    /// Answers "is this consecution compatible?"
    Compatibility(&'a dyn Fn(&Consecution) -> bool),
    /// Answers "does this consecution hold?"
    Consequence(&'a dyn Fn(&Consecution) -> bool),
    /// Answers "does the premise set entail the single conclusion?"
    TConsequence(&'a dyn Fn(&SentenceSet, usize) -> bool),
}

/// Whether a valuation respects the relation behind the handle:
/// `⋈_v ⊆ ⋈` for compatibility and `⊢ ⊆ ⊢_v` for consequence.  Both reduce
/// to: every consecution the valuation realizes must be compatible (resp.
/// must fail to hold).
pub fn respects(v: &Bivaluation, rel: &RelationHandle<'_>) -> bool {
    let width = v.width();
    assert!(width <= 64, "respects requires |L| <= 64");
    let ones = v.asserted().mask();
    let zeros = v.denied().mask();
    match rel {
        RelationHandle::Compatibility(compat) => subset_pairs(width, ones, zeros)
            .all(|c| compat(&c)),
        RelationHandle::Consequence(holds) => subset_pairs(width, ones, zeros)
            .all(|c| !holds(&c)),
        RelationHandle::TConsequence(t_holds) => {
            let mut pi = ones;
            loop {
                let premises = SentenceSet::from_mask(width, pi);
                let mut rest = zeros;
                while rest != 0 {
                    let a = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if t_holds(&premises, a) {
                        return false;
                    }
                }
                if pi == 0 {
                    break;
                }
                pi = (pi - 1) & ones;
            }
            true
        }
    }
}

fn subset_pairs(width: usize, ones: u64, zeros: u64) -> impl Iterator<Item = Consecution> {
    let mut pi = ones;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = pi;
        if pi == 0 {
            done = true;
        } else {
            pi = (pi - 1) & ones;
        }
        Some(cur)
    })
    .flat_map(move |p| {
        let mut sigma = zeros;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sigma;
            if sigma == 0 {
                done = true;
            } else {
                sigma = (sigma - 1) & zeros;
            }
            Some(Consecution::new(
                SentenceSet::from_mask(width, p),
                SentenceSet::from_mask(width, cur),
            ))
        })
    })
}

/// `Val(R)`: every canonical valuation on the language that respects the
/// relation.  Brute-force filter over the full valuation space.
pub fn val_of(rel: &RelationHandle<'_>, width: usize, limits: &Limits) -> Result<Semantics> {
    let space = all_valuations(width, limits)?;
    let vals = space
        .valuations
        .into_iter()
        .filter(|v| respects(v, rel))
        .collect();
    Ok(Semantics {
        width,
        valuations: vals,
    })
}

// ---------------------------------------------------------------------------
// Semantics file format
// ---------------------------------------------------------------------------

/// Parses the semantics file body: first line `@lang <path>`, then one
/// bitstring per valuation, character `i` giving `v(sentence_i)`.
/// Returns the language path and the parsed valuations.
pub fn parse_semantics_file(text: &str, width: usize) -> Result<(String, Semantics)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty semantics file".into()))?;
    let lang_path = header
        .strip_prefix("@lang ")
        .ok_or_else(|| Error::InvalidInput("semantics file must start with `@lang <file>`".into()))?
        .trim()
        .to_string();
    let mut valuations = Vec::new();
    for line in lines {
        if line.len() != width {
            return Err(Error::InvalidInput(format!(
                "bitstring `{line}` has length {}, language has {} sentences",
                line.len(),
                width
            )));
        }
        let mut asserted = SentenceSet::empty(width);
        for (i, ch) in line.chars().enumerate() {
            match ch {
                '1' => asserted.insert(i),
                '0' => {}
                other => {
                    return Err(Error::InvalidInput(format!(
                        "bitstring character `{other}` is not 0 or 1"
                    )));
                }
            }
        }
        valuations.push(Bivaluation::new(asserted));
    }
    Ok((lang_path, Semantics::new(width, valuations)))
}

/// Renders a semantics in the file format, bit-exact and in canonical order.
pub fn format_semantics_file(lang_path: &str, semantics: &Semantics) -> String {
    let mut out = format!("@lang {lang_path}\n");
    for v in semantics.valuations() {
        for i in 0..semantics.width() {
            out.push(if v.asserts(i) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consequence::SConsequence;

    fn limits() -> Limits {
        Limits::default()
    }

    fn val(width: usize, mask: u64) -> Bivaluation {
        Bivaluation::new(SentenceSet::from_mask(width, mask))
    }

    #[test]
    fn full_space_sizes() {
        assert_eq!(all_valuations(2, &limits()).unwrap().len(), 4);
        assert_eq!(all_valuations(3, &limits()).unwrap().len(), 8);
        let one = all_valuations(1, &limits()).unwrap();
        assert_eq!(one.len(), 2);
        assert!(one.contains(&val(1, 0)));
        assert!(one.contains(&val(1, 1)));
    }

    #[test]
    fn cap_is_enforced() {
        let tight = Limits::with_valuation_cap(3);
        assert!(matches!(
            all_valuations(4, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn determined_compat_is_a_subset_check() {
        // L = {p, q}; v asserts exactly p.
        let v = val(2, 0b01);
        let c = |pi: u64, sigma: u64| {
            Consecution::new(SentenceSet::from_mask(2, pi), SentenceSet::from_mask(2, sigma))
        };
        assert!(determined_compat(&v, &c(0b01, 0b10)));
        assert!(!determined_compat(&v, &c(0b10, 0)));
        // No glut: p cannot be asserted and denied at once.
        assert!(!determined_compat(&v, &c(0b01, 0b01)));
    }

    #[test]
    fn empty_semantics_realizes_nothing() {
        let sem = Semantics::empty(2);
        let c = Consecution::new(SentenceSet::empty(2), SentenceSet::empty(2));
        assert!(!semantics_compat(&sem, &c));
    }

    #[test]
    fn full_space_realizes_every_disjoint_pair() {
        let sem = all_valuations(2, &limits()).unwrap();
        let c = Consecution::new(SentenceSet::singleton(2, 0), SentenceSet::singleton(2, 1));
        assert!(semantics_compat(&sem, &c));
    }

    #[test]
    fn conjunctive_combination_footnote_family() {
        // 1_{v_p} = {p}, 1_{v_q} = {q}: the combination asserts nothing.
        let vp = val(2, 0b01);
        let vq = val(2, 0b10);
        let combo = Bivaluation::conjunctive_combination([&vp, &vq], 2);
        assert!(combo.asserted().is_empty());

        let single = Bivaluation::conjunctive_combination([&vp], 2);
        assert_eq!(single, vp);

        let empty = Bivaluation::conjunctive_combination([], 2);
        assert_eq!(empty, Bivaluation::top(2));
    }

    #[test]
    fn conjunctive_closure_of_footnote_semantics() {
        let vp = val(2, 0b01);
        let vq = val(2, 0b10);
        let sem = Semantics::new(2, vec![vp.clone(), vq.clone()]);
        let closed = conjunctive_closure(&sem);
        let expected = Semantics::new(
            2,
            vec![vp, vq, val(2, 0b00), val(2, 0b11)],
        );
        assert_eq!(closed, expected);
    }

    #[test]
    fn conjunctive_closure_is_a_closure_operator() {
        let sem = Semantics::new(3, vec![val(3, 0b011), val(3, 0b110), val(3, 0b101)]);
        let once = conjunctive_closure(&sem);
        // extensive
        assert!(sem.valuations().iter().all(|v| once.contains(v)));
        // idempotent
        assert_eq!(conjunctive_closure(&once), once);
        // fixpoint on already-closed input
        let empty = conjunctive_closure(&Semantics::empty(3));
        assert_eq!(empty.len(), 1);
        assert!(empty.contains(&Bivaluation::top(3)));
    }

    #[test]
    fn every_valuation_respects_its_own_compatibility() {
        let sem = all_valuations(2, &limits()).unwrap();
        for v in sem.valuations() {
            let solo = Semantics::new(2, vec![v.clone()]);
            let compat = move |c: &Consecution| semantics_compat(&solo, c);
            assert!(respects(v, &RelationHandle::Compatibility(&compat)));
        }
    }

    #[test]
    fn top_valuation_respects_every_t_consequence() {
        // With 1_v = L the premise check never exposes a denied conclusion.
        let v = Bivaluation::top(3);
        let t = |_: &SentenceSet, _: usize| true;
        assert!(respects(&v, &RelationHandle::TConsequence(&t)));
    }

    #[test]
    fn val_of_total_consequence_is_empty() {
        let total = |_: &Consecution| true;
        let sem = val_of(&RelationHandle::Consequence(&total), 2, &limits()).unwrap();
        assert!(sem.is_empty());
    }

    #[test]
    fn val_of_least_relation_is_everything() {
        // The overlap-only relation is respected by every valuation.
        let space = all_valuations(2, &limits()).unwrap();
        let rel = SConsequence::from_semantics(space.clone());
        let holds = |c: &Consecution| rel.holds(c);
        let sem = val_of(&RelationHandle::Consequence(&holds), 2, &limits()).unwrap();
        assert_eq!(sem, space);
    }

    #[test]
    fn semantics_file_roundtrip() {
        let sem = Semantics::new(3, vec![val(3, 0b101), val(3, 0b010)]);
        let text = format_semantics_file("lang.txt", &sem);
        let (path, parsed) = parse_semantics_file(&text, 3).unwrap();
        assert_eq!(path, "lang.txt");
        assert_eq!(parsed, sem);
    }

    #[test]
    fn semantics_file_rejects_bad_width() {
        assert!(parse_semantics_file("@lang l.txt\n01\n", 3).is_err());
    }
}
