//! Quivers, paths, relations and the text format for presentations.
//!
//! Vertices are 0-based internally and 1-based in text. A [`Path`] stores its arrows
//! in application order (first applied first); text writes them right-to-left, so
//! `b*a` means "a, then b".

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub n: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(n: usize) -> Self {
        Quiver { n, arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, name: &str, src: usize, tgt: usize) -> usize {
        self.arrows.push(Arrow { name: name.to_string(), src, tgt });
        self.arrows.len() - 1
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Every arrow goes from a smaller to a larger vertex.
    pub fn is_directed(&self) -> bool {
        self.arrows.iter().all(|a| a.src < a.tgt)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    /// Arrow indices in application order.
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { src: v, tgt: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path { src: q.arrows[a].src, tgt: q.arrows[a].tgt, arrows: vec![a] }
    }

    /// Build from arrows in application order, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Option<Self> {
        let first = *arrows.first()?;
        let mut cur = q.arrows[first].src;
        for &a in arrows {
            if q.arrows[a].src != cur {
                return None;
            }
            cur = q.arrows[a].tgt;
        }
        Some(Path { src: q.arrows[first].src, tgt: cur, arrows: arrows.to_vec() })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", self.src + 1);
        }
        let names: Vec<&str> = self.arrows.iter().rev().map(|&a| q.arrows[a].name.as_str()).collect();
        names.join("*")
    }
}

/// The product `q·p` ("p, then q"), or `None` when the endpoints do not match.
pub fn compose_paths(p: &Path, q: &Path) -> Option<Path> {
    if p.tgt != q.src {
        return None;
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&q.arrows);
    Some(Path { src: p.src, tgt: q.tgt, arrows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F> {
    pub terms: Vec<(F, Path)>,
}

impl<F: Scalar> Relation<F> {
    pub fn src(&self) -> usize {
        self.terms[0].1.src
    }

    pub fn tgt(&self) -> usize {
        self.terms[0].1.tgt
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        let parts: Vec<String> = self.terms.iter().map(|(c, p)| format!("{} {}", c, p.display(q))).collect();
        parts.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Every arrow has degree one.
    PathLength,
    /// The listed arrows have degree zero, all others degree one.
    Borel { degree_zero: Vec<usize> },
    /// One degree per arrow.
    Explicit(Vec<i64>),
}

impl Grading {
    pub fn arrow_degrees(&self, arrow_count: usize) -> Vec<i64> {
        match self {
            Grading::PathLength => vec![1; arrow_count],
            Grading::Borel { degree_zero } => {
                (0..arrow_count).map(|a| if degree_zero.contains(&a) { 0 } else { 1 }).collect()
            }
            Grading::Explicit(d) => d.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<F> {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation<F>>,
    pub grading: Grading,
}

impl<F: Scalar> Presentation<F> {
    pub fn new(name: &str, quiver: Quiver) -> Self {
        Presentation { name: name.to_string(), quiver, relations: Vec::new(), grading: Grading::PathLength }
    }

    /// Add a relation given as `(coefficient, arrow names in application order)` terms.
    pub fn add_relation(&mut self, terms: &[(F, &[&str])]) -> Result<()> {
        let mut rel = Vec::new();
        for (c, names) in terms {
            let ids = names
                .iter()
                .map(|n| {
                    self.quiver.arrow_index(n).ok_or_else(|| Error::InvalidReference(format!("unknown arrow {n}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let path = Path::from_arrows(&self.quiver, &ids)
                .ok_or_else(|| Error::NotAdmissible(format!("arrows {names:?} do not compose")))?;
            rel.push((c.clone(), path));
        }
        let rel = normalize_relation(rel)?;
        self.relations.push(rel);
        Ok(())
    }

    pub fn arrow_degrees(&self) -> Vec<i64> {
        self.grading.arrow_degrees(self.quiver.arrows.len())
    }

    /// Validate arrows, relations and grading references.
    pub fn validate(&self) -> Result<()> {
        let mut names = BTreeSet::new();
        for a in &self.quiver.arrows {
            if a.src >= self.quiver.n || a.tgt >= self.quiver.n {
                return Err(Error::InvalidReference(format!("arrow {} uses a vertex outside 1..{}", a.name, self.quiver.n)));
            }
            if !names.insert(a.name.clone()) {
                return Err(Error::InvalidReference(format!("duplicate arrow id {}", a.name)));
            }
        }
        for r in &self.relations {
            check_relation(&self.quiver, r)?;
        }
        match &self.grading {
            Grading::PathLength => {}
            Grading::Borel { degree_zero } => {
                if degree_zero.iter().any(|&a| a >= self.quiver.arrows.len()) {
                    return Err(Error::InvalidReference("grading refers to a missing arrow".into()));
                }
            }
            Grading::Explicit(d) => {
                if d.len() != self.quiver.arrows.len() {
                    return Err(Error::InvalidReference("explicit grading must give one degree per arrow".into()));
                }
            }
        }
        Ok(())
    }

    /// Arrows reversed and every relation term read backwards.
    pub fn opposite(&self) -> Self {
        let mut q = Quiver::new(self.quiver.n);
        for a in &self.quiver.arrows {
            let name = match a.name.strip_suffix("^op") {
                Some(base) => base.to_string(),
                None => format!("{}^op", a.name),
            };
            q.add_arrow(&name, a.tgt, a.src);
        }
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        let arrows: Vec<usize> = p.arrows.iter().rev().copied().collect();
                        (c.clone(), Path { src: p.tgt, tgt: p.src, arrows })
                    })
                    .collect(),
            })
            .collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        Presentation { name, quiver: q, relations, grading: self.grading.clone() }
    }

    /// Serialize in the line-oriented text format accepted by [`Presentation::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            out.push_str(&format!("algebra {}\n", self.name));
        }
        out.push_str(&format!("vertices {}\n", self.quiver.n));
        for a in &self.quiver.arrows {
            out.push_str(&format!("arrow {}: {} -> {}\n", a.name, a.src + 1, a.tgt + 1));
        }
        for r in &self.relations {
            out.push_str(&format!("relation {}\n", r.display(&self.quiver)));
        }
        match &self.grading {
            Grading::PathLength => out.push_str("grading pathlength\n"),
            Grading::Borel { degree_zero } => {
                let names: Vec<&str> = degree_zero.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect();
                out.push_str(&format!("grading borel {}\n", names.join(",")));
            }
            Grading::Explicit(d) => {
                let parts: Vec<String> =
                    self.quiver.arrows.iter().zip(d).map(|(a, d)| format!("{}={}", a.name, d)).collect();
                out.push_str(&format!("grading degrees {}\n", parts.join(",")));
            }
        }
        out
    }

    /// Parse the text format:
    ///
    /// ```text
    /// algebra <name>
    /// vertices <n>
    /// arrow <id>: <src> -> <tgt>
    /// relation <c1> <path1> [+ <c2> <path2> ...]
    /// grading pathlength | borel <ids> | degrees <id>=<d>,...
    /// ```
    ///
    /// `#` starts a comment and `;` separates statements on one line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = String::new();
        let mut quiver: Option<Quiver> = None;
        let mut relations = Vec::new();
        let mut grading_spec: Option<(usize, usize, String)> = None;

        for (lineno, raw_line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let content = raw_line.split('#').next().unwrap_or("");
            let mut offset = 0;
            for stmt in content.split(';') {
                let column = offset + stmt.len() - stmt.trim_start().len() + 1;
                offset += stmt.len() + 1;
                let stmt = stmt.trim();
                if stmt.is_empty() {
                    continue;
                }
                let err = |message: String| Error::Parse { line: line_no, column, message };
                let (keyword, rest) = match stmt.split_once(char::is_whitespace) {
                    Some((k, r)) => (k, r.trim()),
                    None => (stmt, ""),
                };
                match keyword {
                    "algebra" => name = rest.to_string(),
                    "vertices" => {
                        if quiver.is_some() {
                            return Err(err("vertices declared twice".into()));
                        }
                        let n: usize = rest.parse().map_err(|_| err(format!("invalid vertex count '{rest}'")))?;
                        if n == 0 {
                            return Err(err("vertex count must be positive".into()));
                        }
                        quiver = Some(Quiver::new(n));
                    }
                    "arrow" => {
                        let q = quiver.as_mut().ok_or_else(|| err("arrow before vertices".into()))?;
                        let (id, ends) =
                            rest.split_once(':').ok_or_else(|| err("expected '<id>: <src> -> <tgt>'".into()))?;
                        let id = id.trim();
                        if !valid_ident(id) {
                            return Err(err(format!("invalid arrow id '{id}'")));
                        }
                        let (s, t) =
                            ends.split_once("->").ok_or_else(|| err("expected '<src> -> <tgt>'".into()))?;
                        let s: usize = s.trim().parse().map_err(|_| err(format!("invalid source '{}'", s.trim())))?;
                        let t: usize = t.trim().parse().map_err(|_| err(format!("invalid target '{}'", t.trim())))?;
                        if s == 0 || t == 0 || s > q.n || t > q.n {
                            return Err(Error::InvalidReference(format!(
                                "line {line_no}: arrow {id} uses a vertex outside 1..{}",
                                q.n
                            )));
                        }
                        if q.arrow_index(id).is_some() {
                            return Err(Error::InvalidReference(format!("line {line_no}: duplicate arrow id {id}")));
                        }
                        q.add_arrow(id, s - 1, t - 1);
                    }
                    "relation" => {
                        let q = quiver.as_ref().ok_or_else(|| err("relation before vertices".into()))?;
                        let terms = parse_relation_terms::<F>(q, rest).map_err(|e| match e {
                            Error::Parse { message, .. } => err(message),
                            Error::InvalidReference(m) => Error::InvalidReference(format!("line {line_no}: {m}")),
                            Error::NotAdmissible(m) => Error::NotAdmissible(format!("line {line_no}: {m}")),
                            other => other,
                        })?;
                        relations.push(terms);
                    }
                    "grading" => grading_spec = Some((line_no, column, rest.to_string())),
                    other => return Err(err(format!("unknown keyword '{other}'"))),
                }
            }
        }
        let quiver = quiver.ok_or(Error::Parse { line: 1, column: 1, message: "missing 'vertices'".into() })?;
        let grading = match grading_spec {
            None => Grading::PathLength,
            Some((line, column, spec)) => parse_grading(&quiver, &spec)
                .map_err(|message| Error::Parse { line, column, message })?,
        };
        let pres = Presentation { name, quiver, relations, grading };
        pres.validate()?;
        Ok(pres)
    }
}

impl<F: Scalar> fmt::Display for Presentation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    s.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '^' | '.' | '[' | ']'))
}

fn parse_grading(q: &Quiver, spec: &str) -> std::result::Result<Grading, String> {
    let (kind, rest) = match spec.split_once(char::is_whitespace) {
        Some((k, r)) => (k, r.trim()),
        None => (spec, ""),
    };
    let items = || rest.split(',').map(str::trim).filter(|s| !s.is_empty());
    match kind {
        "pathlength" => Ok(Grading::PathLength),
        "borel" => {
            let mut zero = Vec::new();
            for id in items() {
                let a = q.arrow_index(id).ok_or_else(|| format!("grading refers to unknown arrow '{id}'"))?;
                zero.push(a);
            }
            zero.sort_unstable();
            zero.dedup();
            Ok(Grading::Borel { degree_zero: zero })
        }
        "degrees" => {
            let mut d = vec![1i64; q.arrows.len()];
            for item in items() {
                let (id, v) = item.split_once('=').ok_or_else(|| format!("expected '<id>=<degree>', got '{item}'"))?;
                let a = q.arrow_index(id.trim()).ok_or_else(|| format!("grading refers to unknown arrow '{id}'"))?;
                d[a] = v.trim().parse().map_err(|_| format!("invalid degree '{v}'"))?;
            }
            Ok(Grading::Explicit(d))
        }
        other => Err(format!("unknown grading mode '{other}'")),
    }
}

fn parse_relation_terms<F: Scalar>(q: &Quiver, rest: &str) -> Result<Relation<F>> {
    let perr = |message: String| Error::Parse { line: 0, column: 0, message };
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(perr("empty relation".into()));
    }
    let mut terms = Vec::new();
    let mut i = 0;
    let mut sign = F::one();
    let mut expect_term = true;
    while i < tokens.len() {
        let tok = tokens[i];
        if tok == "+" || tok == "-" {
            if expect_term && !terms.is_empty() {
                return Err(perr(format!("unexpected '{tok}'")));
            }
            if tok == "-" {
                sign = -sign;
            }
            expect_term = true;
            i += 1;
            continue;
        }
        if !expect_term {
            return Err(perr(format!("expected '+' or '-' before '{tok}'")));
        }
        let looks_numeric = tok.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '+');
        let (coeff, path_tok) = if looks_numeric {
            let c: F = parse_scalar(tok).ok_or_else(|| perr(format!("invalid coefficient '{tok}'")))?;
            let p = tokens.get(i + 1).ok_or_else(|| perr(format!("coefficient '{tok}' has no path")))?;
            i += 2;
            (c, *p)
        } else {
            i += 1;
            (F::one(), tok)
        };
        let mut ids = Vec::new();
        for name in path_tok.split('*').rev() {
            let name = name.trim();
            let a = q.arrow_index(name).ok_or_else(|| Error::InvalidReference(format!("unknown arrow '{name}'")))?;
            ids.push(a);
        }
        let path = Path::from_arrows(q, &ids)
            .ok_or_else(|| Error::NotAdmissible(format!("'{path_tok}' is not a path")))?;
        terms.push((sign.clone() * coeff, path));
        sign = F::one();
        expect_term = false;
    }
    if expect_term {
        return Err(perr("relation ends with an operator".into()));
    }
    normalize_relation(terms)
}

/// Merge repeated paths, drop zero terms, and check admissibility.
fn normalize_relation<F: Scalar>(terms: Vec<(F, Path)>) -> Result<Relation<F>> {
    let mut merged: BTreeMap<Path, F> = BTreeMap::new();
    let mut order = Vec::new();
    for (c, p) in terms {
        if !merged.contains_key(&p) {
            order.push(p.clone());
        }
        let e = merged.entry(p).or_insert_with(F::zero);
        *e = e.clone() + c;
    }
    let terms: Vec<(F, Path)> = order
        .into_iter()
        .filter_map(|p| {
            let c = merged[&p].clone();
            (!c.is_zero()).then_some((c, p))
        })
        .collect();
    let rel = Relation { terms };
    if rel.terms.is_empty() {
        return Err(Error::NotAdmissible("relation is zero".into()));
    }
    let (s, t) = (rel.src(), rel.tgt());
    for (_, p) in &rel.terms {
        if p.len() < 2 {
            return Err(Error::NotAdmissible("relation has a term of length < 2".into()));
        }
        if p.src != s || p.tgt != t {
            return Err(Error::NotAdmissible("relation terms are not parallel".into()));
        }
    }
    Ok(rel)
}

fn check_relation<F: Scalar>(q: &Quiver, r: &Relation<F>) -> Result<()> {
    if r.terms.is_empty() {
        return Err(Error::NotAdmissible("relation is zero".into()));
    }
    for (_, p) in &r.terms {
        if p.arrows.iter().any(|&a| a >= q.arrows.len()) {
            return Err(Error::InvalidReference("relation uses a missing arrow".into()));
        }
        if Path::from_arrows(q, &p.arrows).as_ref() != Some(p) {
            return Err(Error::NotAdmissible("relation term is not a path".into()));
        }
        if p.len() < 2 {
            return Err(Error::NotAdmissible("relation has a term of length < 2".into()));
        }
        if p.src != r.src() || p.tgt != r.tgt() {
            return Err(Error::NotAdmissible("relation terms are not parallel".into()));
        }
    }
    Ok(())
}

fn fresh_name(taken: &BTreeSet<String>, base: &str) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// The dual extension `𝒜(B, A^op)`. `a` is given as itself; its arrows enter reversed
/// and primed. Relations: those of `b`, the reversed relations of `a`, and `α·β′ = 0`
/// for every B-arrow α and A^op-arrow β′ (β′ applied first).
pub fn dual_extension<F: Scalar>(b: &Presentation<F>, a: &Presentation<F>) -> Result<Presentation<F>> {
    if b.quiver.n != a.quiver.n {
        return Err(Error::Precondition(format!(
            "vertex counts differ: {} and {}",
            b.quiver.n, a.quiver.n
        )));
    }
    if !b.quiver.is_directed() || !a.quiver.is_directed() {
        return Err(Error::Precondition("dual extension needs directed algebras".into()));
    }
    let aop = a.opposite();
    let mut pres =
        merge_with_kernel_products(b, &aop, |name| format!("{}'", name.strip_suffix("^op").unwrap_or(name)));
    let nb = b.quiver.arrows.len();
    pres.name = format!("A({},{}^op)", display_name(&b.name), display_name(&a.name));
    pres.grading = Grading::Borel { degree_zero: (nb..pres.quiver.arrows.len()).collect() };
    Ok(pres)
}

/// `𝒜(E, A)` with the arrows of `second` kept in their given direction. The grading
/// keeps the degrees of `first` and puts the arrows of `second` in degree zero.
pub fn dual_extension_raw<F: Scalar>(first: &Presentation<F>, second: &Presentation<F>) -> Result<Presentation<F>> {
    if first.quiver.n != second.quiver.n {
        return Err(Error::Precondition("vertex counts differ".into()));
    }
    let mut pres = merge_with_kernel_products(first, second, |name| name.to_string());
    let mut degrees = first.arrow_degrees();
    degrees.extend(std::iter::repeat(0).take(second.quiver.arrows.len()));
    pres.name = format!("A({},{})", display_name(&first.name), display_name(&second.name));
    pres.grading = Grading::Explicit(degrees);
    Ok(pres)
}

fn display_name(name: &str) -> &str {
    if name.is_empty() {
        "?"
    } else {
        name
    }
}

fn merge_with_kernel_products<F: Scalar>(
    first: &Presentation<F>,
    second: &Presentation<F>,
    rename: impl Fn(&str) -> String,
) -> Presentation<F> {
    let mut q = first.quiver.clone();
    let nb = q.arrows.len();
    let mut taken: BTreeSet<String> = q.arrows.iter().map(|a| a.name.clone()).collect();
    for a in &second.quiver.arrows {
        let name = fresh_name(&taken, &rename(&a.name));
        taken.insert(name.clone());
        q.add_arrow(&name, a.src, a.tgt);
    }
    let mut relations = first.relations.clone();
    for r in &second.relations {
        relations.push(Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, p)| {
                    let arrows = p.arrows.iter().map(|&x| x + nb).collect();
                    (c.clone(), Path { src: p.src, tgt: p.tgt, arrows })
                })
                .collect(),
        });
    }
    for beta in nb..q.arrows.len() {
        for alpha in 0..nb {
            if q.arrows[beta].tgt == q.arrows[alpha].src {
                let path = Path { src: q.arrows[beta].src, tgt: q.arrows[alpha].tgt, arrows: vec![beta, alpha] };
                relations.push(Relation { terms: vec![(F::one(), path)] });
            }
        }
    }
    Presentation { name: String::new(), quiver: q, relations, grading: Grading::PathLength }
}

/// Linear quiver 1 → 2 → … → n with arrows `a1..a(n-1)` and all paths of length
/// `ell` as relations (`ell = 0` means no relations).
pub fn linear_quiver<F: Scalar>(n: usize, ell: usize) -> Presentation<F> {
    let mut q = Quiver::new(n);
    for i in 0..n.saturating_sub(1) {
        q.add_arrow(&format!("a{}", i + 1), i, i + 1);
    }
    let name = if ell == 0 { format!("KA{n}") } else { format!("KA{n}/rad{ell}") };
    let mut pres = Presentation::new(&name, q);
    if ell >= 2 {
        for s in 0..n.saturating_sub(ell) {
            let arrows: Vec<usize> = (s..s + ell).collect();
            let path = Path { src: s, tgt: s + ell, arrows };
            pres.relations.push(Relation { terms: vec![(F::one(), path)] });
        }
    }
    pres
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Presentation<Rational>;

    #[test]
    fn parse_inline_statements() {
        let p = P::parse("vertices 2; arrow a: 1->2").unwrap();
        assert_eq!(p.quiver.n, 2);
        assert_eq!(p.quiver.arrows[0], Arrow { name: "a".into(), src: 0, tgt: 1 });
        assert!(p.relations.is_empty());
    }

    #[test]
    fn parse_relation_and_roundtrip() {
        let text = "algebra A3\nvertices 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\nrelation 1 a2*a1\n";
        let p = P::parse(text).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].terms[0].1.arrows, vec![0, 1]);
        assert_eq!(P::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn reject_short_terms() {
        let text = "vertices 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow c: 1 -> 3\nrelation 1 a2*a1 - 1 c\n";
        assert!(matches!(P::parse(text), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn parse_errors_have_positions() {
        match P::parse("vertices 2\narrow a 1->2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(P::parse("vertices 2\narrow a: 1->3\n"), Err(Error::InvalidReference(_))));
        assert!(matches!(
            P::parse("vertices 2\narrow a: 1->2\nrelation 1 b*a\n"),
            Err(Error::InvalidReference(_))
        ));
    }

    #[test]
    fn fractions_and_signs() {
        let text = "vertices 4\narrow a: 1->2\narrow b: 2->4\narrow c: 1->3\narrow d: 3->4\nrelation 1/2 b*a - 3 d*c\n";
        let p = P::parse(text).unwrap();
        let r = &p.relations[0];
        assert_eq!(r.terms[0].0, Rational::from_frac(1, 2).unwrap());
        assert_eq!(r.terms[1].0, Rational::from_i64(-3));
    }

    #[test]
    fn compose() {
        let p = linear_quiver::<Rational>(3, 0);
        let a1 = Path::arrow(&p.quiver, 0);
        let a2 = Path::arrow(&p.quiver, 1);
        assert_eq!(compose_paths(&Path::trivial(0), &Path::trivial(0)), Some(Path::trivial(0)));
        let c = compose_paths(&a1, &a2).unwrap();
        assert_eq!((c.src, c.tgt, c.display(&p.quiver).as_str()), (0, 2, "a2*a1"));
        assert!(compose_paths(&a1, &a1).is_none());
    }

    #[test]
    fn opposite_involution() {
        let p: P = linear_quiver(3, 2);
        let op = p.opposite();
        assert_eq!(op.quiver.arrows[0], Arrow { name: "a1^op".into(), src: 1, tgt: 0 });
        assert_eq!(op.relations[0].display(&op.quiver), "1 a1^op*a2^op");
        assert_eq!(op.opposite(), p);
    }

    #[test]
    fn dual_extension_of_a2() {
        let b: P = linear_quiver(2, 0);
        let lam = dual_extension(&b, &b).unwrap();
        assert_eq!(lam.quiver.arrows.len(), 2);
        assert_eq!(lam.quiver.arrows[1], Arrow { name: "a1'".into(), src: 1, tgt: 0 });
        assert_eq!(lam.relations.len(), 1);
        assert_eq!(lam.relations[0].terms[0].1.arrows, vec![1, 0]);
        assert_eq!(lam.grading, Grading::Borel { degree_zero: vec![1] });

        let trivial = P::parse("vertices 2").unwrap();
        let lam = dual_extension(&b, &trivial).unwrap();
        assert_eq!(lam.quiver.arrows.len(), 1);
        assert!(lam.relations.is_empty());
    }

    #[test]
    fn dual_extension_preconditions() {
        let b: P = linear_quiver(2, 0);
        let c: P = linear_quiver(3, 0);
        assert!(dual_extension(&b, &c).is_err());
        assert!(dual_extension(&b.opposite(), &b).is_err());
    }
}
