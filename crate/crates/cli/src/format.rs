//! The line-oriented `.alg` input format.
//!
//! ```text
//! # comment
//! [field]
//! rationals                # or `prime 5`
//! [algebra]
//! dim 2
//! basis 1 x
//! product 1 1 = 1          # unlisted products are 0
//! product 1 x = x
//! product x 1 = x
//! [unit]
//! 1
//! [cocycle twist]
//! alpha(x, x) = 1*         # linear combination of dual basis labels
//! tilde(1, x, x) = 2       # alpha(x, x)(1) += 2
//! [bimodule regular]
//! basis m1 m2
//! left x m1 = m2
//! right m1 x = m2
//! ```
//!
//! A `[quiver]` section with `vertex`, `arrow NAME: SRC -> TGT` and
//! `relation <combination of paths>` lines replaces `[algebra]` and `[unit]`;
//! paths are arrow names joined by `.` and compose left to right.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use hochschild::algebra::{Algebra, AlgebraViolation, Bimodule, BimoduleViolation};
use hochschild::complexes::{check_cocycle2, Cochain};
use hochschild::field::{parse_rational, Field, FieldSpec};
use hochschild::quiver::{bound_quiver_algebra, QuiverAlgebra, QuiverPresentation};
use hochschild::Error;

/// A diagnostic; `line` is 1-based, 0 when it concerns the whole file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

/// `sum c_i label_i`, unresolved.
pub type Combination = Vec<(BigRational, String)>;

#[derive(Clone, Debug, Default)]
struct RawAlgebra {
    line: usize,
    dim: Option<(usize, usize)>,
    basis: Vec<String>,
    products: Vec<(usize, String, String, Combination)>,
}

#[derive(Clone, Debug, Default)]
struct RawQuiver {
    line: usize,
    vertices: Vec<(usize, String)>,
    arrows: Vec<(usize, String, String, String)>,
    relations: Vec<(usize, Combination)>,
}

#[derive(Clone, Debug, Default)]
struct RawCocycle {
    line: usize,
    name: String,
    alpha: Vec<(usize, String, String, Combination)>,
    tilde: Vec<(usize, [String; 3], BigRational)>,
}

#[derive(Clone, Debug, Default)]
struct RawBimodule {
    line: usize,
    name: String,
    dim: Option<(usize, usize)>,
    basis: Vec<String>,
    left: Vec<(usize, String, String, Combination)>,
    right: Vec<(usize, String, String, Combination)>,
}

/// A syntactically valid document whose scalars are still rationals.
#[derive(Clone, Debug, Default)]
pub struct RawDocument {
    pub field: Option<FieldSpec>,
    algebra: Option<RawAlgebra>,
    unit: Option<(usize, Combination)>,
    quiver: Option<RawQuiver>,
    cocycles: Vec<RawCocycle>,
    bimodules: Vec<RawBimodule>,
}

enum Section {
    None,
    Field,
    Algebra,
    Unit,
    Quiver,
    Cocycle(usize),
    Bimodule(usize),
}

const RESERVED: &[char] = &['+', '-', '=', ',', '(', ')', '#', '[', ']', '/', ':'];

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

fn valid_name(s: &str) -> bool {
    valid_label(s) && !s.contains('*') && !s.contains('.')
}

fn parse_scalar(s: &str, line: usize) -> PResult<BigRational> {
    parse_rational(s).map_err(|e| ParseError::new(line, format!("bad scalar `{s}`: {e}")))
}

fn looks_scalar(s: &str) -> bool {
    parse_rational(s).is_ok()
}

/// Parses `[+-] term ([+-] term)*` where a term is `label`, `c label`,
/// `c * label` or `c*label`; a lone `0` is the empty combination.
pub fn parse_combination(s: &str, line: usize) -> PResult<Combination> {
    let text = s.trim();
    if text.is_empty() {
        return Err(ParseError::new(line, "empty linear combination"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut buf = String::new();
    for ch in text.chars() {
        if ch == '+' || ch == '-' {
            if !buf.trim().is_empty() {
                terms.push((negative, std::mem::take(&mut buf)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
        } else {
            buf.push(ch);
        }
    }
    if buf.trim().is_empty() {
        return Err(ParseError::new(line, format!("dangling sign in `{text}`")));
    }
    terms.push((negative, buf));
    let mut out = Vec::new();
    let single = terms.len() == 1;
    for (neg, term) in terms {
        let parts: Vec<&str> = term.split_whitespace().filter(|p| *p != "*").collect();
        let (coef, label) = match parts.as_slice() {
            [c, l] => (parse_scalar(c.trim_end_matches('*'), line)?, l.to_string()),
            [tok] => match tok.find('*') {
                Some(p) if p + 1 < tok.len() && looks_scalar(&tok[..p]) => {
                    (parse_scalar(&tok[..p], line)?, tok[p + 1..].to_string())
                }
                _ => {
                    if single && looks_scalar(tok) && parse_rational(tok).map(|r| r.is_zero()).unwrap_or(false) {
                        return Ok(Vec::new());
                    }
                    (BigRational::one(), tok.to_string())
                }
            },
            _ => return Err(ParseError::new(line, format!("cannot read term `{}`", term.trim()))),
        };
        if !valid_label(&label) {
            return Err(ParseError::new(line, format!("invalid label `{label}`")));
        }
        out.push((if neg { -coef } else { coef }, label));
    }
    Ok(out)
}

/// `NAME(a, b, ..) = rhs` -> (args, rhs).
fn parse_call<'a>(s: &'a str, name: &str, line: usize) -> PResult<(Vec<String>, &'a str)> {
    let rest = s[name.len()..].trim_start();
    let (inside, after) = rest
        .strip_prefix('(')
        .and_then(|r| r.split_once(')'))
        .ok_or_else(|| ParseError::new(line, format!("expected `{name}(..) = ..`")))?;
    let rhs = after
        .trim_start()
        .strip_prefix('=')
        .ok_or_else(|| ParseError::new(line, format!("expected `=` after `{name}(..)`")))?;
    let args = inside.split(',').map(|a| a.trim().to_string()).collect();
    Ok((args, rhs))
}

/// `KEYWORD a b = rhs` -> (a, b, rhs).
fn parse_binary(s: &str, line: usize) -> PResult<(String, String, &str)> {
    let (lhs, rhs) = s
        .split_once('=')
        .ok_or_else(|| ParseError::new(line, "expected `=`"))?;
    let words: Vec<&str> = lhs.split_whitespace().collect();
    match words.as_slice() {
        [_, a, b] => Ok((a.to_string(), b.to_string(), rhs)),
        _ => Err(ParseError::new(line, "expected two basis labels before `=`")),
    }
}

fn parse_dim(rest: &str, line: usize) -> PResult<(usize, usize)> {
    rest.trim()
        .parse::<usize>()
        .map(|d| (line, d))
        .map_err(|_| ParseError::new(line, format!("bad dimension `{}`", rest.trim())))
}

fn push_labels(into: &mut Vec<String>, rest: &str, line: usize) -> PResult<()> {
    for l in rest.split_whitespace() {
        if !valid_label(l) {
            return Err(ParseError::new(line, format!("invalid basis label `{l}`")));
        }
        if into.iter().any(|x| x == l) {
            return Err(ParseError::new(line, format!("duplicate basis label `{l}`")));
        }
        into.push(l.to_string());
    }
    Ok(())
}

fn keyword(s: &str) -> (&str, &str) {
    let s = s.trim();
    let end = s.find(|c: char| c.is_whitespace() || c == '(').unwrap_or(s.len());
    (&s[..end], &s[end..])
}

impl RawDocument {
    pub fn parse(text: &str) -> PResult<Self> {
        let mut doc = RawDocument::default();
        let mut section = Section::None;
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw_line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(header) = content.strip_prefix('[') {
                let header = header
                    .strip_suffix(']')
                    .ok_or_else(|| ParseError::new(line, "unterminated section header"))?
                    .trim();
                section = doc.open_section(header, line)?;
                continue;
            }
            match section {
                Section::None => return Err(ParseError::new(line, "content before the first section")),
                Section::Field => {
                    if doc.field.is_some() {
                        return Err(ParseError::new(line, "field given twice"));
                    }
                    let spec = FieldSpec::parse(content)
                        .map_err(|e| ParseError::new(line, format!("bad field `{content}`: {e}")))?;
                    doc.field = Some(spec);
                }
                Section::Algebra => {
                    let alg = doc.algebra.as_mut().expect("open");
                    let (kw, rest) = keyword(content);
                    match kw {
                        "dim" => alg.dim = Some(parse_dim(rest, line)?),
                        "basis" => push_labels(&mut alg.basis, rest, line)?,
                        "product" => {
                            let (a, b, rhs) = parse_binary(content, line)?;
                            alg.products.push((line, a, b, parse_combination(rhs, line)?));
                        }
                        _ => return Err(ParseError::new(line, format!("unknown [algebra] entry `{kw}`"))),
                    }
                }
                Section::Unit => {
                    let combo = parse_combination(content, line)?;
                    match doc.unit.as_mut() {
                        Some((_, c)) => c.extend(combo),
                        None => doc.unit = Some((line, combo)),
                    }
                }
                Section::Quiver => {
                    let q = doc.quiver.as_mut().expect("open");
                    let (kw, rest) = keyword(content);
                    match kw {
                        "vertex" | "vertices" => {
                            for v in rest.split_whitespace() {
                                q.vertices.push((line, v.to_string()));
                            }
                        }
                        "arrow" => {
                            let (name, ends) = rest
                                .split_once(':')
                                .ok_or_else(|| ParseError::new(line, "expected `arrow NAME: SRC -> TGT`"))?;
                            let (s, t) = ends
                                .split_once("->")
                                .ok_or_else(|| ParseError::new(line, "expected `arrow NAME: SRC -> TGT`"))?;
                            q.arrows
                                .push((line, name.trim().into(), s.trim().into(), t.trim().into()));
                        }
                        "relation" => q.relations.push((line, parse_combination(rest, line)?)),
                        _ => return Err(ParseError::new(line, format!("unknown [quiver] entry `{kw}`"))),
                    }
                }
                Section::Cocycle(i) => {
                    let c = &mut doc.cocycles[i];
                    let (kw, _) = keyword(content);
                    match kw {
                        "alpha" => {
                            let (args, rhs) = parse_call(content, "alpha", line)?;
                            let [a, b]: [String; 2] = args
                                .try_into()
                                .map_err(|_| ParseError::new(line, "alpha takes two arguments"))?;
                            c.alpha.push((line, a, b, parse_combination(rhs, line)?));
                        }
                        "tilde" => {
                            let (args, rhs) = parse_call(content, "tilde", line)?;
                            let args: [String; 3] = args
                                .try_into()
                                .map_err(|_| ParseError::new(line, "tilde takes three arguments"))?;
                            c.tilde.push((line, args, parse_scalar(rhs.trim(), line)?));
                        }
                        _ => return Err(ParseError::new(line, format!("unknown cocycle entry `{kw}`"))),
                    }
                }
                Section::Bimodule(i) => {
                    let m = &mut doc.bimodules[i];
                    let (kw, rest) = keyword(content);
                    match kw {
                        "dim" => m.dim = Some(parse_dim(rest, line)?),
                        "basis" => push_labels(&mut m.basis, rest, line)?,
                        "left" => {
                            let (a, x, rhs) = parse_binary(content, line)?;
                            m.left.push((line, a, x, parse_combination(rhs, line)?));
                        }
                        "right" => {
                            let (x, a, rhs) = parse_binary(content, line)?;
                            m.right.push((line, x, a, parse_combination(rhs, line)?));
                        }
                        _ => return Err(ParseError::new(line, format!("unknown bimodule entry `{kw}`"))),
                    }
                }
            }
        }
        match (&doc.algebra, &doc.quiver) {
            (None, None) => return Err(ParseError::new(0, "missing [algebra] or [quiver] section")),
            (Some(_), Some(q)) => {
                return Err(ParseError::new(q.line, "[algebra] and [quiver] are mutually exclusive"))
            }
            (Some(a), None) if doc.unit.is_none() => {
                return Err(ParseError::new(a.line, "[algebra] requires a [unit] section"))
            }
            (None, Some(_)) if doc.unit.is_some() => {
                let line = doc.unit.as_ref().map_or(0, |u| u.0);
                return Err(ParseError::new(line, "[unit] is not used with [quiver]"));
            }
            _ => {}
        }
        Ok(doc)
    }

    fn open_section(&mut self, header: &str, line: usize) -> PResult<Section> {
        let (kw, rest) = keyword(header);
        let name = rest.trim();
        let once = |present: bool| {
            if present {
                Err(ParseError::new(line, format!("section [{kw}] given twice")))
            } else {
                Ok(())
            }
        };
        match kw {
            "field" => Ok(Section::Field),
            "algebra" => {
                once(self.algebra.is_some())?;
                self.algebra = Some(RawAlgebra {
                    line,
                    ..Default::default()
                });
                Ok(Section::Algebra)
            }
            "unit" => {
                once(self.unit.is_some())?;
                Ok(Section::Unit)
            }
            "quiver" => {
                once(self.quiver.is_some())?;
                self.quiver = Some(RawQuiver {
                    line,
                    ..Default::default()
                });
                Ok(Section::Quiver)
            }
            "cocycle" | "bimodule" => {
                if !valid_name(name) {
                    return Err(ParseError::new(line, format!("[{kw}] needs a name")));
                }
                if kw == "cocycle" {
                    if self.cocycles.iter().any(|c| c.name == name) {
                        return Err(ParseError::new(line, format!("cocycle `{name}` given twice")));
                    }
                    self.cocycles.push(RawCocycle {
                        line,
                        name: name.into(),
                        ..Default::default()
                    });
                    Ok(Section::Cocycle(self.cocycles.len() - 1))
                } else {
                    if self.bimodules.iter().any(|c| c.name == name) {
                        return Err(ParseError::new(line, format!("bimodule `{name}` given twice")));
                    }
                    self.bimodules.push(RawBimodule {
                        line,
                        name: name.into(),
                        ..Default::default()
                    });
                    Ok(Section::Bimodule(self.bimodules.len() - 1))
                }
            }
            _ => Err(ParseError::new(line, format!("unknown section [{header}]"))),
        }
    }

    pub fn is_quiver(&self) -> bool {
        self.quiver.is_some()
    }
}

/// A validated document over a concrete field.
#[derive(Clone, Debug)]
pub struct Document<F: Field> {
    pub spec: FieldSpec,
    pub field: F,
    pub algebra: Algebra<F>,
    pub quiver: Option<(QuiverPresentation<F>, QuiverAlgebra<F>)>,
    pub cocycles: Vec<(String, Cochain<F>)>,
    pub bimodules: Vec<(String, Bimodule<F>)>,
}

fn scalar<F: Field>(f: &F, c: &BigRational, line: usize) -> PResult<F::Elem> {
    f.from_ratio(c.numer(), c.denom())
        .map_err(|e| ParseError::new(line, format!("scalar {c} is not defined in {}: {e}", f.name())))
}

fn resolve(labels: &[String], label: &str, what: &str, line: usize) -> PResult<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| ParseError::new(line, format!("unknown {what} `{label}`")))
}

/// A basis label, or failing that a 0-based index.
fn resolve_or_index(labels: &[String], token: &str, line: usize) -> PResult<usize> {
    if let Some(i) = labels.iter().position(|l| l == token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(i) if i < labels.len() => Ok(i),
        _ => Err(ParseError::new(line, format!("unknown basis element `{token}`"))),
    }
}

fn combination<F: Field>(f: &F, labels: &[String], combo: &Combination, what: &str, line: usize) -> PResult<Vec<F::Elem>> {
    let mut v = vec![f.zero(); labels.len()];
    for (c, l) in combo {
        let i = resolve(labels, l, what, line)?;
        f.add_assign(&mut v[i], &scalar(f, c, line)?);
    }
    Ok(v)
}

fn sparse<F: Field>(f: &F, v: Vec<F::Elem>) -> Vec<(usize, F::Elem)> {
    v.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
}

fn describe_violation(labels: &[String], v: &AlgebraViolation) -> String {
    match *v {
        AlgebraViolation::NonAssociative { i, j, k } => {
            let (a, b, c) = (&labels[i], &labels[j], &labels[k]);
            format!("multiplication is not associative: ({a} {b}) {c} != {a} ({b} {c}) on the triple ({a}, {b}, {c})")
        }
        AlgebraViolation::LeftUnit { i } => format!("unit fails on the left: 1 {0} != {0}", labels[i]),
        AlgebraViolation::RightUnit { i } => format!("unit fails on the right: {0} 1 != {0}", labels[i]),
    }
}

fn describe_bimodule_violation(a: &[String], m: &[String], v: &BimoduleViolation) -> String {
    match *v {
        BimoduleViolation::AlgebraDimension { expected, found } => {
            format!("acting algebra has dimension {found}, expected {expected}")
        }
        BimoduleViolation::LeftAssociativity { i, j, x } => {
            format!("({} {}) {} != {} ({} {})", a[i], a[j], m[x], a[i], a[j], m[x])
        }
        BimoduleViolation::RightAssociativity { x, i, j } => {
            format!("{} ({} {}) != ({} {}) {}", m[x], a[i], a[j], m[x], a[i], a[j])
        }
        BimoduleViolation::Compatibility { i, x, j } => {
            format!("({} {}) {} != {} ({} {})", a[i], m[x], a[j], a[i], m[x], a[j])
        }
        BimoduleViolation::LeftUnit { x } => format!("1 {0} != {0}", m[x]),
        BimoduleViolation::RightUnit { x } => format!("{0} 1 != {0}", m[x]),
    }
}

impl<F: Field> Document<F> {
    pub fn build(raw: &RawDocument, spec: FieldSpec, f: &F) -> PResult<Self> {
        let (algebra, quiver) = match (&raw.algebra, &raw.quiver) {
            (Some(a), _) => (Self::table_algebra(raw, a, f)?, None),
            (None, Some(q)) => {
                let (p, qa) = Self::quiver_algebra(q, f)?;
                (qa.algebra.clone(), Some((p, qa)))
            }
            (None, None) => return Err(ParseError::new(0, "missing [algebra] or [quiver] section")),
        };
        let labels = algebra.labels().to_vec();
        let dual_labels: Vec<String> = labels.iter().map(|l| format!("{l}*")).collect();
        let n = algebra.dim();
        let dual = algebra.dual_bimodule();
        let mut cocycles = Vec::new();
        for c in &raw.cocycles {
            let mut alpha = Cochain::zero(f, 2, n, n);
            for (line, a, b, combo) in &c.alpha {
                let i = resolve_or_index(&labels, a, *line)?;
                let j = resolve_or_index(&labels, b, *line)?;
                let v = combination(f, &dual_labels, combo, "dual basis element", *line)?;
                for (slot, x) in alpha.value_mut(&[i, j]).iter_mut().zip(&v) {
                    f.add_assign(slot, x);
                }
            }
            for (line, [x, a, b], value) in &c.tilde {
                let k = resolve_or_index(&labels, x, *line)?;
                let i = resolve_or_index(&labels, a, *line)?;
                let j = resolve_or_index(&labels, b, *line)?;
                let s = scalar(f, value, *line)?;
                f.add_assign(&mut alpha.value_mut(&[i, j])[k], &s);
            }
            match check_cocycle2(&algebra, &dual, &alpha) {
                Ok(()) => {}
                Err(Error::NotACocycle(i, j, k)) => {
                    return Err(ParseError::new(
                        c.line,
                        format!(
                            "cocycle `{}` is not a Hochschild 2-cocycle: the condition fails on ({}, {}, {})",
                            c.name, labels[i], labels[j], labels[k]
                        ),
                    ))
                }
                Err(e) => return Err(ParseError::new(c.line, format!("cocycle `{}`: {e}", c.name))),
            }
            cocycles.push((c.name.clone(), alpha));
        }
        let mut bimodules = Vec::new();
        for m in &raw.bimodules {
            bimodules.push((m.name.clone(), Self::bimodule(m, &algebra, f)?));
        }
        Ok(Self {
            spec,
            field: f.clone(),
            algebra,
            quiver,
            cocycles,
            bimodules,
        })
    }

    fn table_algebra(raw: &RawDocument, a: &RawAlgebra, f: &F) -> PResult<Algebra<F>> {
        if a.basis.is_empty() {
            return Err(ParseError::new(a.line, "[algebra] needs a `basis` line"));
        }
        if let Some((line, d)) = a.dim {
            if d != a.basis.len() {
                return Err(ParseError::new(
                    line,
                    format!("dim {d} does not match the {} basis labels", a.basis.len()),
                ));
            }
        }
        let labels = &a.basis;
        let mut seen = BTreeMap::new();
        let mut products = Vec::new();
        for (line, x, y, combo) in &a.products {
            let i = resolve(labels, x, "basis element", *line)?;
            let j = resolve(labels, y, "basis element", *line)?;
            if let Some(prev) = seen.insert((i, j), *line) {
                return Err(ParseError::new(*line, format!("product {x} {y} already given on line {prev}")));
            }
            let v = combination(f, labels, combo, "basis element", *line)?;
            products.push((i, j, sparse(f, v)));
        }
        let (uline, ucombo) = raw.unit.as_ref().expect("checked by parse");
        let unit = combination(f, labels, ucombo, "basis element", *uline)?;
        let algebra = Algebra::new(f, labels.clone(), products, unit)
            .map_err(|e| ParseError::new(a.line, e.to_string()))?;
        if let Err(v) = algebra.validate() {
            let line = match v {
                AlgebraViolation::NonAssociative { .. } => a.line,
                _ => *uline,
            };
            return Err(ParseError::new(line, describe_violation(labels, &v)));
        }
        Ok(algebra)
    }

    fn quiver_algebra(q: &RawQuiver, f: &F) -> PResult<(QuiverPresentation<F>, QuiverAlgebra<F>)> {
        let vertices: Vec<String> = q.vertices.iter().map(|(_, v)| v.clone()).collect();
        let mut arrows = Vec::new();
        for (line, name, s, t) in &q.arrows {
            let s = resolve(&vertices, s, "vertex", *line)?;
            let t = resolve(&vertices, t, "vertex", *line)?;
            arrows.push((name.clone(), s, t));
        }
        let arrow_names: Vec<String> = arrows.iter().map(|a| a.0.clone()).collect();
        let mut relations = Vec::new();
        for (line, combo) in &q.relations {
            let mut rel = Vec::new();
            for (c, path) in combo {
                let seq = path
                    .split('.')
                    .map(|a| resolve(&arrow_names, a, "arrow", *line))
                    .collect::<PResult<Vec<_>>>()?;
                rel.push((seq, scalar(f, c, *line)?));
            }
            relations.push(rel);
        }
        let p = QuiverPresentation::new(f, vertices, arrows, relations)
            .map_err(|e| ParseError::new(q.line, e.to_string()))?;
        let qa = bound_quiver_algebra(&p).map_err(|e| ParseError::new(q.line, e.to_string()))?;
        Ok((p, qa))
    }

    fn bimodule(m: &RawBimodule, a: &Algebra<F>, f: &F) -> PResult<Bimodule<F>> {
        if let Some((line, d)) = m.dim {
            if d != m.basis.len() {
                return Err(ParseError::new(
                    line,
                    format!("dim {d} does not match the {} basis labels", m.basis.len()),
                ));
            }
        }
        let al = a.labels();
        let mut left = Vec::new();
        for (line, x, y, combo) in &m.left {
            let i = resolve(al, x, "basis element", *line)?;
            let k = resolve(&m.basis, y, "module basis element", *line)?;
            left.push((i, k, sparse(f, combination(f, &m.basis, combo, "module basis element", *line)?)));
        }
        let mut right = Vec::new();
        for (line, y, x, combo) in &m.right {
            let k = resolve(&m.basis, y, "module basis element", *line)?;
            let i = resolve(al, x, "basis element", *line)?;
            right.push((k, i, sparse(f, combination(f, &m.basis, combo, "module basis element", *line)?)));
        }
        let b = Bimodule::new(f, a.dim(), m.basis.clone(), left, right)
            .map_err(|e| ParseError::new(m.line, e.to_string()))?;
        b.validate(a).map_err(|v| {
            ParseError::new(
                m.line,
                format!("bimodule `{}` is invalid: {}", m.name, describe_bimodule_violation(al, &m.basis, &v)),
            )
        })?;
        Ok(b)
    }

    /// The named cocycle; `zero` is always available.
    pub fn cocycle(&self, name: &str) -> Option<Cochain<F>> {
        match self.cocycles.iter().find(|(n, _)| n == name) {
            Some((_, c)) => Some(c.clone()),
            None if name == "zero" => {
                let n = self.algebra.dim();
                Some(Cochain::zero(&self.field, 2, n, n))
            }
            None => None,
        }
    }

    pub fn bimodule_named(&self, name: &str) -> Option<&Bimodule<F>> {
        self.bimodules.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }
}

pub fn field_line(spec: FieldSpec) -> String {
    match spec {
        FieldSpec::Rationals => "rationals".into(),
        FieldSpec::Prime(p) => format!("prime {p}"),
    }
}

/// A document holding `algebra` and an empty `zero` cocycle.
pub fn write_algebra<F: Field>(spec: FieldSpec, algebra: &Algebra<F>, comment: &str) -> String {
    let f = algebra.field();
    let labels = algebra.labels();
    let mut out = String::new();
    for line in comment.lines() {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("[field]\n{}\n\n[algebra]\n", field_line(spec)));
    out.push_str(&format!("dim {}\nbasis {}\n", algebra.dim(), labels.join(" ")));
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            let p = algebra.basis_product(i, j);
            if p.is_empty() {
                continue;
            }
            let dense = hochschild::linalg::to_dense(f, algebra.dim(), p);
            out.push_str(&format!(
                "product {} {} = {}\n",
                labels[i],
                labels[j],
                algebra.format_vector(&dense)
            ));
        }
    }
    out.push_str(&format!("\n[unit]\n{}\n\n[cocycle zero]\n", algebra.format_vector(algebra.unit())));
    out
}

/// Writes `alpha(a, b) = ..` lines for the nonzero values of a 2-cochain.
pub fn cocycle_lines<F: Field>(algebra: &Algebra<F>, alpha: &Cochain<F>) -> Vec<String> {
    let f = algebra.field();
    let labels = algebra.labels();
    let dual_labels: Vec<String> = labels.iter().map(|l| format!("{l}*")).collect();
    let n = algebra.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = alpha.value(&[i, j]);
            if v.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            out.push(format!(
                "alpha({}, {}) = {}",
                labels[i],
                labels[j],
                hochschild::algebra::format_combination(f, &dual_labels, v)
            ));
        }
    }
    out
}

/// Integer or fraction, as written in the format.
pub fn rational_from_parts(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
