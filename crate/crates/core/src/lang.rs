//! Sentences, languages, parsing and printing.
//!
//! A language is either an explicit list of opaque sentence names or the set
//! of all formulas over declared atoms and connectives up to a depth bound.
//! Enumeration order is deterministic: atoms in declaration order, then
//! compounds by (depth, connective declaration order, argument positions,
//! lexicographically).  Positions in that order are the bit indices used by
//! [`crate::sets::SentenceSet`].

use std::collections::HashMap;
use std::fmt;

use crate::sets::SentenceSet;
use crate::{Error, Result};

/// The connectives the formula grammar knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    Implies,
    Or,
    And,
    Not,
}

impl Connective {
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Implies => "->",
            Connective::Or => "|",
            Connective::And => "&",
            Connective::Not => "~",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Connective::Not => 1,
            _ => 2,
        }
    }

    pub fn from_symbol(symbol: &str) -> Result<Self> {
        match symbol {
            "->" => Ok(Connective::Implies),
            "|" => Ok(Connective::Or),
            "&" => Ok(Connective::And),
            "~" => Ok(Connective::Not),
            other => Err(Error::UnknownConnective(other.to_string())),
        }
    }

    // Higher binds tighter; `->` is lowest and right-associative.
    fn precedence(self) -> u8 {
        match self {
            Connective::Implies => 1,
            Connective::Or => 2,
            Connective::And => 3,
            Connective::Not => 4,
        }
    }
}

/// A sentence: an atom or a connective applied to sentences.
///
/// Structural equality is the only identity; there is no interning.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sentence {
    Atom(String),
    Compound(Connective, Vec<Sentence>),
}

impl Sentence {
    pub fn atom(name: impl Into<String>) -> Self {
        Sentence::Atom(name.into())
    }

    pub fn implies(a: Sentence, b: Sentence) -> Self {
        Sentence::Compound(Connective::Implies, vec![a, b])
    }

    pub fn or(a: Sentence, b: Sentence) -> Self {
        Sentence::Compound(Connective::Or, vec![a, b])
    }

    /// Atom depth is 0; a compound is one deeper than its deepest argument.
    pub fn depth(&self) -> usize {
        match self {
            Sentence::Atom(_) => 0,
            Sentence::Compound(_, args) => 1 + args.iter().map(Sentence::depth).max().unwrap_or(0),
        }
    }

    /// True if the atom `name` occurs anywhere in the sentence.
    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Sentence::Atom(a) => a == name,
            Sentence::Compound(_, args) => args.iter().any(|s| s.mentions(name)),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8, right_of_same: bool) -> fmt::Result {
        match self {
            Sentence::Atom(name) => write!(f, "{name}"),
            Sentence::Compound(conn, args) => {
                let prec = conn.precedence();
                // Right-assoc `->` keeps its right spine unparenthesized;
                // left-assoc `|`/`&` keep their left spine.
                let needs = prec < ctx || (prec == ctx && right_of_same);
                if needs {
                    write!(f, "(")?;
                }
                match conn {
                    Connective::Not => {
                        write!(f, "~")?;
                        args[0].fmt_prec(f, prec, false)?;
                    }
                    Connective::Implies => {
                        args[0].fmt_prec(f, prec + 1, false)?;
                        write!(f, " -> ")?;
                        args[1].fmt_prec(f, prec, false)?;
                    }
                    Connective::Or | Connective::And => {
                        args[0].fmt_prec(f, prec, false)?;
                        write!(f, " {} ", conn.symbol())?;
                        args[1].fmt_prec(f, prec, true)?;
                    }
                }
                if needs {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0, false)
    }
}

/// Renders a sentence in the concrete grammar; inverse of [`parse_sentence`].
pub fn format_sentence(sentence: &Sentence) -> String {
    sentence.to_string()
}

/// How a language is given: an explicit list of names, or every formula over
/// `atoms` and `connectives` of depth at most `depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LanguageSpec {
    Explicit { names: Vec<String> },
    Generated {
        atoms: Vec<String>,
        connectives: Vec<Connective>,
        depth: usize,
    },
}

impl LanguageSpec {
    pub fn explicit<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        LanguageSpec::Explicit {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn generated<S: Into<String>, I: IntoIterator<Item = S>>(
        atoms: I,
        connectives: Vec<Connective>,
        depth: usize,
    ) -> Self {
        LanguageSpec::Generated {
            atoms: atoms.into_iter().map(Into::into).collect(),
            connectives,
            depth,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            LanguageSpec::Explicit { names } => {
                if names.is_empty() {
                    return Err(Error::InvalidLanguage(
                        "explicit language must list at least one sentence".into(),
                    ));
                }
                let mut seen = std::collections::HashSet::new();
                for n in names {
                    if !seen.insert(n) {
                        return Err(Error::InvalidLanguage(format!(
                            "duplicate sentence name `{n}`"
                        )));
                    }
                }
                Ok(())
            }
            LanguageSpec::Generated { atoms, connectives, .. } => {
                if atoms.is_empty() {
                    return Err(Error::InvalidLanguage(
                        "generated language needs at least one atom".into(),
                    ));
                }
                let mut seen = std::collections::HashSet::new();
                for a in atoms {
                    if !is_identifier(a) {
                        return Err(Error::InvalidLanguage(format!(
                            "atom `{a}` is not an identifier"
                        )));
                    }
                    if !seen.insert(a) {
                        return Err(Error::InvalidLanguage(format!("duplicate atom `{a}`")));
                    }
                }
                let mut cs = std::collections::HashSet::new();
                for c in connectives {
                    if !cs.insert(c) {
                        return Err(Error::InvalidLanguage(format!(
                            "duplicate connective `{}`",
                            c.symbol()
                        )));
                    }
                }
                Ok(())
            }
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A concrete finite language: sentences in canonical order plus the inverse
/// index.  Immutable after construction.
#[derive(Debug, Clone)]
pub struct Language {
    spec: LanguageSpec,
    sentences: Vec<Sentence>,
    index: HashMap<Sentence, usize>,
}

impl PartialEq for Language {
    fn eq(&self, other: &Self) -> bool {
        self.sentences == other.sentences
    }
}
impl Eq for Language {}

impl Language {
    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn spec(&self) -> &LanguageSpec {
        &self.spec
    }

    pub fn sentences(&self) -> &[Sentence] {
        &self.sentences
    }

    pub fn sentence(&self, index: usize) -> &Sentence {
        &self.sentences[index]
    }

    pub fn position(&self, sentence: &Sentence) -> Option<usize> {
        self.index.get(sentence).copied()
    }

    pub fn contains(&self, sentence: &Sentence) -> bool {
        self.index.contains_key(sentence)
    }

    /// Renders the sentence at `index`.
    pub fn name(&self, index: usize) -> String {
        format_sentence(&self.sentences[index])
    }

    /// Formats a set as a sorted, comma-separated list of sentences.
    pub fn render_set(&self, set: &SentenceSet) -> String {
        set.iter()
            .map(|i| self.name(i))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Resolves user text to a language position.  Explicit languages match
    /// names literally; generated languages parse the formula first.
    pub fn resolve(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        match &self.spec {
            LanguageSpec::Explicit { .. } => {
                let s = Sentence::atom(text);
                self.position(&s)
                    .ok_or_else(|| Error::UnknownSentence(text.to_string()))
            }
            LanguageSpec::Generated { .. } => {
                let s = parse_sentence(text, &self.spec)?;
                self.position(&s)
                    .ok_or_else(|| Error::UnknownSentence(format_sentence(&s)))
            }
        }
    }

    /// Parses a comma-separated list of sentences into a set.  Blank input is
    /// the empty set.
    pub fn resolve_set(&self, text: &str) -> Result<SentenceSet> {
        let mut set = SentenceSet::empty(self.len());
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(set);
        }
        for part in split_top_level(trimmed) {
            set.insert(self.resolve(&part)?);
        }
        Ok(set)
    }
}

/// Splits on commas that are not nested inside parentheses.
fn split_top_level(text: &str) -> Vec<String> {
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

/// Builds the language a spec describes, in canonical order.
///
/// Generated mode contains exactly the formulas of depth ≤ bound; every
/// argument of a compound is itself in the language.
pub fn enumerate_language(spec: &LanguageSpec) -> Result<Language> {
    spec.validate()?;
    let sentences = match spec {
        LanguageSpec::Explicit { names } => names.iter().map(Sentence::atom).collect::<Vec<_>>(),
        LanguageSpec::Generated {
            atoms,
            connectives,
            depth,
        } => {
            let mut all: Vec<Sentence> = atoms.iter().map(Sentence::atom).collect();
            let mut depths: Vec<usize> = vec![0; all.len()];
            for d in 1..=*depth {
                let prev_len = all.len();
                for conn in connectives {
                    let arity = conn.arity();
                    // Argument tuples in lexicographic order over positions of
                    // already-enumerated (strictly shallower) sentences.
                    let mut tuple = vec![0usize; arity];
                    loop {
                        let max_arg_depth = tuple.iter().map(|&i| depths[i]).max().unwrap_or(0);
                        if max_arg_depth == d - 1 {
                            let args = tuple.iter().map(|&i| all[i].clone()).collect();
                            all.push(Sentence::Compound(*conn, args));
                            depths.push(d);
                        }
                        // Advance the tuple like an odometer over 0..prev_len.
                        let mut k = arity;
                        loop {
                            if k == 0 {
                                break;
                            }
                            k -= 1;
                            tuple[k] += 1;
                            if tuple[k] < prev_len {
                                break;
                            }
                            tuple[k] = 0;
                            if k == 0 {
                                break;
                            }
                        }
                        if tuple.iter().all(|&i| i == 0) {
                            break;
                        }
                    }
                }
            }
            all
        }
    };
    if sentences.is_empty() {
        return Err(Error::InvalidLanguage("language must be non-empty".into()));
    }
    let index = sentences
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    Ok(Language {
        spec: spec.clone(),
        sentences,
        index,
    })
}

// ---------------------------------------------------------------------------
// Formula parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Conn(Connective),
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '-' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                    tokens.push((i, Token::Conn(Connective::Implies)));
                    i += 2;
                } else {
                    return Err(Error::Syntax {
                        position: i,
                        message: "expected `->`".into(),
                    });
                }
            }
            '|' => {
                tokens.push((i, Token::Conn(Connective::Or)));
                i += 1;
            }
            '&' => {
                tokens.push((i, Token::Conn(Connective::And)));
                i += 1;
            }
            '~' => {
                tokens.push((i, Token::Conn(Connective::Not)));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push((start, Token::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    /// `None` accepts any identifier and connective (schema parsing).
    atoms: Option<&'a [String]>,
    connectives: Option<&'a [Connective]>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn declared(&self, conn: Connective, position: usize) -> Result<()> {
        match self.connectives {
            Some(list) if !list.contains(&conn) => Err(Error::Syntax {
                position,
                message: format!("connective `{}` is not declared", conn.symbol()),
            }),
            _ => Ok(()),
        }
    }

    // Lowest precedence, right-associative.
    fn implication(&mut self) -> Result<Sentence> {
        let lhs = self.disjunction()?;
        if let Some(Token::Conn(Connective::Implies)) = self.peek() {
            let at = self.here();
            self.bump();
            self.declared(Connective::Implies, at)?;
            let rhs = self.implication()?;
            return Ok(Sentence::Compound(Connective::Implies, vec![lhs, rhs]));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Sentence> {
        let mut lhs = self.conjunction()?;
        while let Some(Token::Conn(Connective::Or)) = self.peek() {
            let at = self.here();
            self.bump();
            self.declared(Connective::Or, at)?;
            let rhs = self.conjunction()?;
            lhs = Sentence::Compound(Connective::Or, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Sentence> {
        let mut lhs = self.unary()?;
        while let Some(Token::Conn(Connective::And)) = self.peek() {
            let at = self.here();
            self.bump();
            self.declared(Connective::And, at)?;
            let rhs = self.unary()?;
            lhs = Sentence::Compound(Connective::And, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Sentence> {
        if let Some(Token::Conn(Connective::Not)) = self.peek() {
            let at = self.here();
            self.bump();
            self.declared(Connective::Not, at)?;
            let arg = self.unary()?;
            return Ok(Sentence::Compound(Connective::Not, vec![arg]));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Sentence> {
        let at = self.here();
        match self.bump() {
            Some(Token::Ident(name)) => match self.atoms {
                Some(list) if !list.contains(&name) => Err(Error::UnknownAtom(name)),
                _ => Ok(Sentence::Atom(name)),
            },
            Some(Token::LParen) => {
                let inner = self.implication()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Syntax {
                        position: self.here(),
                        message: "expected `)`".into(),
                    }),
                }
            }
            Some(tok) => Err(Error::Syntax {
                position: at,
                message: format!("unexpected token {tok:?}"),
            }),
            None => Err(Error::Syntax {
                position: at,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses a formula against a generated-mode spec.  Round-trips with
/// [`format_sentence`].
pub fn parse_sentence(text: &str, spec: &LanguageSpec) -> Result<Sentence> {
    let (atoms, connectives) = match spec {
        LanguageSpec::Generated {
            atoms, connectives, ..
        } => (atoms.as_slice(), connectives.as_slice()),
        LanguageSpec::Explicit { .. } => {
            return Err(Error::InvalidInput(
                "formulas can only be parsed against a generated language".into(),
            ));
        }
    };
    run_parser(text, Some(atoms), Some(connectives))
}

/// Parses a formula accepting any identifier and connective.  Used for
/// schema formulas, where identifiers may be metavariables.
pub(crate) fn parse_formula_permissive(text: &str) -> Result<Sentence> {
    run_parser(text, None, None)
}

fn run_parser(
    text: &str,
    atoms: Option<&[String]>,
    connectives: Option<&[Connective]>,
) -> Result<Sentence> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        atoms,
        connectives,
        end: text.len(),
    };
    let sentence = parser.implication()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Syntax {
            position: parser.here(),
            message: "trailing input after formula".into(),
        });
    }
    Ok(sentence)
}

// ---------------------------------------------------------------------------
// Language file format
// ---------------------------------------------------------------------------

/// Parses the UTF-8 language file format: `@explicit` followed by one name
/// per line, or a single `@generated atoms=p,q connectives=->:2,|:2 depth=2`
/// line.
pub fn parse_language_file(text: &str) -> Result<LanguageSpec> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidLanguage("empty language file".into()))?;
    if header == "@explicit" {
        let names: Vec<String> = lines.map(str::to_string).collect();
        let spec = LanguageSpec::Explicit { names };
        spec.validate()?;
        return Ok(spec);
    }
    if let Some(rest) = header.strip_prefix("@generated") {
        let mut atoms = None;
        let mut connectives: Vec<Connective> = Vec::new();
        let mut depth = None;
        for field in rest.split_whitespace() {
            if let Some(v) = field.strip_prefix("atoms=") {
                atoms = Some(
                    v.split(',')
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect::<Vec<_>>(),
                );
            } else if let Some(v) = field.strip_prefix("connectives=") {
                for item in v.split(',').filter(|s| !s.is_empty()) {
                    let (sym, arity) = item.split_once(':').ok_or_else(|| {
                        Error::InvalidLanguage(format!("bad connective entry `{item}`"))
                    })?;
                    let conn = Connective::from_symbol(sym)?;
                    let arity: usize = arity.parse().map_err(|_| {
                        Error::InvalidLanguage(format!("bad arity in `{item}`"))
                    })?;
                    if arity != conn.arity() {
                        return Err(Error::ArityMismatch {
                            symbol: sym.to_string(),
                            expected: conn.arity(),
                            got: arity,
                        });
                    }
                    connectives.push(conn);
                }
            } else if let Some(v) = field.strip_prefix("depth=") {
                depth = Some(v.parse::<usize>().map_err(|_| {
                    Error::InvalidLanguage(format!("bad depth `{v}`"))
                })?);
            } else {
                return Err(Error::InvalidLanguage(format!("unknown field `{field}`")));
            }
        }
        let spec = LanguageSpec::Generated {
            atoms: atoms
                .ok_or_else(|| Error::InvalidLanguage("missing atoms= field".into()))?,
            connectives,
            depth: depth
                .ok_or_else(|| Error::InvalidLanguage("missing depth= field".into()))?,
        };
        spec.validate()?;
        return Ok(spec);
    }
    Err(Error::InvalidLanguage(format!(
        "expected `@explicit` or `@generated`, got `{header}`"
    )))
}

/// Renders a spec back into the language file format.
pub fn format_language_file(spec: &LanguageSpec) -> String {
    match spec {
        LanguageSpec::Explicit { names } => {
            let mut out = String::from("@explicit\n");
            for n in names {
                out.push_str(n);
                out.push('\n');
            }
            out
        }
        LanguageSpec::Generated {
            atoms,
            connectives,
            depth,
        } => {
            let conns = connectives
                .iter()
                .map(|c| format!("{}:{}", c.symbol(), c.arity()))
                .collect::<Vec<_>>()
                .join(",");
            format!(
                "@generated atoms={} connectives={} depth={}\n",
                atoms.join(","),
                conns,
                depth
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn impl_spec(atoms: &[&str], depth: usize) -> LanguageSpec {
        LanguageSpec::generated(atoms.to_vec(), vec![Connective::Implies], depth)
    }

    #[test]
    fn arrow_is_right_associative() {
        let spec = impl_spec(&["p", "q", "r"], 3);
        let s = parse_sentence("p -> q -> r", &spec).unwrap();
        let expected = Sentence::implies(
            Sentence::atom("p"),
            Sentence::implies(Sentence::atom("q"), Sentence::atom("r")),
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn atom_parses_to_atom() {
        let spec = impl_spec(&["p"], 0);
        assert_eq!(parse_sentence("p", &spec).unwrap(), Sentence::atom("p"));
    }

    #[test]
    fn parentheses_override_associativity() {
        let spec = impl_spec(&["p", "q"], 2);
        let s = parse_sentence("(p -> q) -> p", &spec).unwrap();
        let expected = Sentence::implies(
            Sentence::implies(Sentence::atom("p"), Sentence::atom("q")),
            Sentence::atom("p"),
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn undeclared_connective_is_rejected() {
        let spec = impl_spec(&["p", "q"], 2);
        assert!(matches!(
            parse_sentence("p | q", &spec),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn unknown_atom_is_rejected() {
        let spec = impl_spec(&["p"], 1);
        assert!(matches!(
            parse_sentence("z", &spec),
            Err(Error::UnknownAtom(_))
        ));
    }

    #[test]
    fn syntax_error_carries_position() {
        let spec = impl_spec(&["p"], 1);
        match parse_sentence("p -> $", &spec) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn depth_one_implication_language_has_six_sentences() {
        let lang = enumerate_language(&impl_spec(&["p", "q"], 1)).unwrap();
        let names: Vec<String> = (0..lang.len()).map(|i| lang.name(i)).collect();
        assert_eq!(names, ["p", "q", "p -> p", "p -> q", "q -> p", "q -> q"]);
    }

    #[test]
    fn explicit_language_keeps_declared_order() {
        let lang =
            enumerate_language(&LanguageSpec::explicit(["H", "0", "1", "2"])).unwrap();
        assert_eq!(lang.len(), 4);
        assert_eq!(lang.name(0), "H");
        assert_eq!(lang.name(3), "2");
    }

    #[test]
    fn atom_only_language() {
        let lang = enumerate_language(&impl_spec(&["p"], 0)).unwrap();
        assert_eq!(lang.len(), 1);
        assert_eq!(lang.name(0), "p");
    }

    #[test]
    fn generated_language_contains_subsentences() {
        let lang = enumerate_language(&impl_spec(&["p", "q"], 2)).unwrap();
        assert_eq!(lang.len(), 38);
        for s in lang.sentences() {
            if let Sentence::Compound(_, args) = s {
                for a in args {
                    assert!(lang.contains(a), "missing argument of {s}");
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let spec = LanguageSpec::generated(
            vec!["p", "q"],
            vec![Connective::Implies, Connective::Or, Connective::Not],
            2,
        );
        let a = enumerate_language(&spec).unwrap();
        let b = enumerate_language(&spec).unwrap();
        assert_eq!(a.sentences(), b.sentences());
    }

    #[test]
    fn empty_language_is_rejected() {
        assert!(enumerate_language(&LanguageSpec::explicit(Vec::<String>::new())).is_err());
    }

    #[test]
    fn roundtrip_exhaustive_depth_three() {
        // Every sentence of a depth-3 language prints and reparses to itself.
        let spec = LanguageSpec::generated(
            vec!["p"],
            vec![Connective::Implies, Connective::Not],
            3,
        );
        let lang = enumerate_language(&spec).unwrap();
        for s in lang.sentences() {
            let printed = format_sentence(s);
            let back = parse_sentence(&printed, &spec).unwrap();
            assert_eq!(&back, s, "`{printed}` reparsed differently");
        }
    }

    #[test]
    fn roundtrip_exhaustive_two_atoms_depth_three() {
        let spec = impl_spec(&["p", "q"], 3);
        let lang = enumerate_language(&spec).unwrap();
        for s in lang.sentences() {
            let printed = format_sentence(s);
            assert_eq!(parse_sentence(&printed, &spec).unwrap(), *s);
        }
    }

    #[test]
    fn language_file_roundtrip() {
        let spec = LanguageSpec::generated(
            vec!["p", "q"],
            vec![Connective::Implies, Connective::Or],
            2,
        );
        let text = format_language_file(&spec);
        assert_eq!(parse_language_file(&text).unwrap(), spec);

        let explicit = LanguageSpec::explicit(["H", "0", "1"]);
        let text = format_language_file(&explicit);
        assert_eq!(parse_language_file(&text).unwrap(), explicit);
    }

    #[test]
    fn generated_file_line_matches_format() {
        let spec =
            parse_language_file("@generated atoms=p,q connectives=->:2,|:2 depth=2").unwrap();
        match &spec {
            LanguageSpec::Generated {
                atoms,
                connectives,
                depth,
            } => {
                assert_eq!(atoms, &["p", "q"]);
                assert_eq!(connectives, &[Connective::Implies, Connective::Or]);
                assert_eq!(*depth, 2);
            }
            _ => panic!("expected generated spec"),
        }
    }

    #[test]
    fn wrong_arity_in_file_is_rejected() {
        assert!(matches!(
            parse_language_file("@generated atoms=p connectives=->:3 depth=1"),
            Err(Error::ArityMismatch { .. })
        ));
    }
}
