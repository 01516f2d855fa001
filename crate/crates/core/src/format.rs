//! Plain-text algebra definitions.
//!
//! ```text
//! # comments run to the end of the line
//! name octonions
//! kind product-table
//! even e0 e1 e2 e3
//! odd e4 e5 e6 e7
//! unit e0
//! e1 e2 = 1 e3
//! e4 e4 = -1 e0
//! ```
//!
//! Header lines (`name`, `kind`, `even`, `odd`, optional `unit`) come
//! before the entries. A product table has entry lines `g h = ...`; an
//! Akivis spec has bracket lines `g h = ...` and ternary lines
//! `g h k = ...`. The right side is `0` or a signed sum of
//! `coefficient generator` terms with the coefficient optional
//! (`e3 - 1/2 e5`). Unlisted entries are zero and every entry may be given
//! at most once.
//!
//! [`emit`] writes the canonical form: the header in the order above,
//! `even`/`odd` lines only when nonempty, then every nonzero entry in basis
//! index order with every coefficient printed (`1 e3 + -2 e5`).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::akivis::AkivisSpec;
use crate::algebra::{Algebra, AlgebraKind};
use crate::basis::GradedBasis;
use crate::error::AlgebraError;
use crate::lex::{tokenize, Tok};
use crate::table::SuperTable;
use crate::vector::Vector;

/// A parsed algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: Algebra,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    /// The document is well formed but the algebra it describes is not.
    #[error("{}{source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Invalid {
        line: Option<usize>,
        source: AlgebraError,
    },
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

struct Header {
    name: Option<String>,
    kind: Option<AlgebraKind>,
    even: Option<Vec<String>>,
    odd: Option<Vec<String>>,
    unit: Option<(String, usize, usize)>,
}

/// `(left factors, value, line)`.
type Entry = (Vec<usize>, Vector, usize);

impl AlgebraFile {
    pub fn new(name: impl Into<String>, algebra: impl Into<Algebra>) -> Self {
        AlgebraFile {
            name: name.into(),
            algebra: algebra.into(),
        }
    }

    pub fn parse(src: &str) -> Result<Self, FormatError> {
        parse(src)
    }

    pub fn emit(&self) -> String {
        emit(&self.name, &self.algebra)
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

/// Parses a document and runs the construction checks for its kind.
pub fn parse(src: &str) -> Result<AlgebraFile, FormatError> {
    let mut header = Header {
        name: None,
        kind: None,
        even: None,
        odd: None,
        unit: None,
    };
    let mut basis: Option<GradedBasis> = None;
    let mut entries: Vec<Entry> = Vec::new();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();

    for (lineno, raw) in src.lines().enumerate() {
        let lineno = lineno + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if line.contains('=') {
            if basis.is_none() {
                basis = Some(finish_basis(&header, lineno)?);
            }
            let basis = basis.as_ref().unwrap();
            let (lhs, value) = parse_entry(line, lineno, basis)?;
            if let Some(prev) = seen.insert(lhs.clone(), lineno) {
                let names: Vec<&str> = lhs.iter().map(|&i| basis.name(i)).collect();
                return Err(syntax(
                    lineno,
                    1,
                    format!("duplicate entry `{}` (first given on line {prev})", names.join(" ")),
                ));
            }
            entries.push((lhs, value, lineno));
            continue;
        }
        if basis.is_some() {
            return Err(syntax(lineno, 1, "header lines must precede table entries"));
        }
        let indent = line.len() - line.trim_start().len();
        let mut words = line.split_whitespace();
        let key = words.next().unwrap();
        let rest: Vec<String> = words.map(str::to_string).collect();
        let dup = |present: bool| {
            if present {
                Err(syntax(lineno, indent + 1, format!("`{key}` given twice")))
            } else {
                Ok(())
            }
        };
        match key {
            "name" => {
                dup(header.name.is_some())?;
                if rest.len() != 1 {
                    return Err(syntax(lineno, indent + 1, "`name` takes exactly one word"));
                }
                header.name = Some(rest[0].clone());
            }
            "kind" => {
                dup(header.kind.is_some())?;
                header.kind = Some(match rest.as_slice() {
                    [k] if k == "product-table" => AlgebraKind::ProductTable,
                    [k] if k == "akivis-spec" => AlgebraKind::AkivisSpec,
                    _ => {
                        return Err(syntax(
                            lineno,
                            indent + 1,
                            "`kind` must be `product-table` or `akivis-spec`",
                        ))
                    }
                });
            }
            "even" => {
                dup(header.even.is_some())?;
                header.even = Some(rest);
            }
            "odd" => {
                dup(header.odd.is_some())?;
                header.odd = Some(rest);
            }
            "unit" => {
                dup(header.unit.is_some())?;
                if rest.len() != 1 {
                    return Err(syntax(lineno, indent + 1, "`unit` takes exactly one generator"));
                }
                let col = line.find(rest[0].as_str()).unwrap_or(indent) + 1;
                header.unit = Some((rest[0].clone(), lineno, col));
            }
            other => {
                return Err(syntax(
                    lineno,
                    indent + 1,
                    format!("unknown header `{other}`"),
                ))
            }
        }
    }

    let basis = match basis {
        Some(b) => b,
        None => finish_basis(&header, src.lines().count().max(1))?,
    };
    let name = header.name.clone().unwrap();
    let kind = header.kind.unwrap();
    let algebra = match kind {
        AlgebraKind::ProductTable => build_table(basis, &header, entries)?,
        AlgebraKind::AkivisSpec => build_spec(basis, &header, entries)?,
    };
    Ok(AlgebraFile { name, algebra })
}

fn finish_basis(header: &Header, lineno: usize) -> Result<GradedBasis, FormatError> {
    if header.name.is_none() {
        return Err(syntax(lineno, 1, "missing `name` header"));
    }
    if header.kind.is_none() {
        return Err(syntax(lineno, 1, "missing `kind` header"));
    }
    let even = header.even.clone().unwrap_or_default();
    let odd = header.odd.clone().unwrap_or_default();
    GradedBasis::new(even, odd).map_err(|source| FormatError::Invalid { line: None, source })
}

fn parse_entry(
    line: &str,
    lineno: usize,
    basis: &GradedBasis,
) -> Result<(Vec<usize>, Vector), FormatError> {
    let toks = tokenize(line).map_err(|e| syntax(lineno, e.span.column(), e.message))?;
    let eq = toks.iter().position(|(t, _)| *t == Tok::Eq).unwrap();
    let mut lhs = Vec::new();
    for (tok, span) in &toks[..eq] {
        match tok {
            Tok::Ident(name) => lhs.push(
                basis
                    .index_of(name)
                    .map_err(|e| syntax(lineno, span.column(), e.to_string()))?,
            ),
            other => {
                return Err(syntax(
                    lineno,
                    span.column(),
                    format!("expected a generator, found {other}"),
                ))
            }
        }
    }
    if !(2..=3).contains(&lhs.len()) {
        return Err(syntax(
            lineno,
            1,
            format!("an entry names 2 or 3 generators, found {}", lhs.len()),
        ));
    }
    let rhs = &toks[eq + 1..];
    let end_col = line.trim_end().len() + 1;
    let value = parse_sum(rhs, lineno, end_col, basis)?;
    Ok((lhs, value))
}

/// `0` or `[sign] [coeff] gen ((+|-) [coeff] gen)*`, with a sign allowed to
/// follow an operator (`+ -2 e5`).
fn parse_sum(
    toks: &[(Tok, crate::lex::Span)],
    lineno: usize,
    end_col: usize,
    basis: &GradedBasis,
) -> Result<Vector, FormatError> {
    use crate::scalar::Scalar;
    if toks.is_empty() {
        return Err(syntax(lineno, end_col, "missing right-hand side"));
    }
    if let [(Tok::Number(c), _)] = toks {
        if c.is_zero() {
            return Ok(Vector::zero());
        }
    }
    let mut out = Vector::zero();
    let mut pos = 0;
    let mut first = true;
    while pos < toks.len() {
        let mut sign = Scalar::one();
        let mut saw_op = false;
        while let Some((t @ (Tok::Plus | Tok::Minus), _)) = toks.get(pos) {
            if *t == Tok::Minus {
                sign = -sign;
            }
            saw_op = true;
            pos += 1;
        }
        if !first && !saw_op {
            let (t, span) = &toks[pos];
            return Err(syntax(lineno, span.column(), format!("expected `+` or `-`, found {t}")));
        }
        let mut coeff = Scalar::one();
        if let Some((Tok::Number(c), _)) = toks.get(pos) {
            coeff = c.clone();
            pos += 1;
        }
        match toks.get(pos) {
            Some((Tok::Ident(name), span)) => {
                let i = basis
                    .index_of(name)
                    .map_err(|e| syntax(lineno, span.column(), e.to_string()))?;
                out.add_term(i, &(&sign * &coeff));
                pos += 1;
            }
            Some((t, span)) => {
                return Err(syntax(lineno, span.column(), format!("expected a generator, found {t}")))
            }
            None => return Err(syntax(lineno, end_col, "expected a generator")),
        }
        first = false;
    }
    Ok(out)
}

fn invalid_at(line: Option<usize>) -> impl Fn(AlgebraError) -> FormatError {
    move |source| FormatError::Invalid { line, source }
}

fn build_table(
    basis: GradedBasis,
    header: &Header,
    entries: Vec<Entry>,
) -> Result<Algebra, FormatError> {
    let unit = match &header.unit {
        Some((name, line, col)) => Some(
            basis
                .index_of(name)
                .map_err(|e| syntax(*line, *col, e.to_string()))?,
        ),
        None => None,
    };
    let mut pairs = Vec::with_capacity(entries.len());
    for (lhs, value, line) in entries {
        if lhs.len() != 2 {
            return Err(syntax(line, 1, "a product table has only two-factor entries"));
        }
        check_grading(&basis, &lhs, &value, line)?;
        pairs.push(((lhs[0], lhs[1]), value));
    }
    SuperTable::new(basis, pairs, unit)
        .map(Algebra::Table)
        .map_err(|e| {
            let line = match &e {
                AlgebraError::NotUnital { .. } => header.unit.as_ref().map(|u| u.1),
                _ => None,
            };
            invalid_at(line)(e)
        })
}

fn build_spec(
    basis: GradedBasis,
    header: &Header,
    entries: Vec<Entry>,
) -> Result<Algebra, FormatError> {
    if let Some((_, line, col)) = &header.unit {
        return Err(syntax(*line, *col, "an akivis-spec has no unit"));
    }
    let mut bracket = Vec::new();
    let mut ternary = Vec::new();
    let mut lines: HashMap<Vec<usize>, usize> = HashMap::new();
    for (lhs, value, line) in entries {
        check_grading(&basis, &lhs, &value, line)?;
        lines.insert(lhs.clone(), line);
        match lhs.as_slice() {
            [a, b] => bracket.push(((*a, *b), value)),
            [a, b, c] => ternary.push(((*a, *b, *c), value)),
            _ => unreachable!(),
        }
    }
    AkivisSpec::new(basis.clone(), bracket, ternary)
        .map(Algebra::Akivis)
        .map_err(|e| {
            let line = match &e {
                AlgebraError::NotSuperanticommutative { left, right } => {
                    let (l, r) = (basis.index_of(left), basis.index_of(right));
                    match (l, r) {
                        (Ok(l), Ok(r)) => lines
                            .get(&vec![l, r])
                            .or_else(|| lines.get(&vec![r, l]))
                            .copied(),
                        _ => None,
                    }
                }
                _ => None,
            };
            invalid_at(line)(e)
        })
}

fn check_grading(
    basis: &GradedBasis,
    lhs: &[usize],
    value: &Vector,
    line: usize,
) -> Result<(), FormatError> {
    let expected = lhs
        .iter()
        .fold(crate::basis::Parity::Even, |p, &i| p + basis.parity(i));
    if value.is_zero() || basis.is_homogeneous_of(value, expected) {
        return Ok(());
    }
    let names: Vec<&str> = lhs.iter().map(|&i| basis.name(i)).collect();
    Err(FormatError::Invalid {
        line: Some(line),
        source: AlgebraError::GradingViolation {
            entry: names.join(" "),
            expected,
        },
    })
}

/// Canonical text of a vector: `c1 g1 + c2 g2 ...` with every coefficient.
fn emit_vector(basis: &GradedBasis, v: &Vector) -> String {
    basis.format_vector(v)
}

/// Writes `algebra` in canonical form.
pub fn emit(name: &str, algebra: &Algebra) -> String {
    let basis = algebra.basis();
    let mut out = String::new();
    out.push_str(&format!("name {name}\n"));
    out.push_str(&format!("kind {}\n", algebra.kind()));
    let evens: Vec<&str> = basis
        .indices()
        .filter(|&i| !basis.parity(i).is_odd())
        .map(|i| basis.name(i))
        .collect();
    let odds: Vec<&str> = basis
        .indices()
        .filter(|&i| basis.parity(i).is_odd())
        .map(|i| basis.name(i))
        .collect();
    if !evens.is_empty() {
        out.push_str(&format!("even {}\n", evens.join(" ")));
    }
    if !odds.is_empty() {
        out.push_str(&format!("odd {}\n", odds.join(" ")));
    }
    let dim = basis.dim();
    match algebra {
        Algebra::Table(t) => {
            if let Some(u) = t.unit() {
                out.push_str(&format!("unit {}\n", basis.name(u)));
            }
            for a in 0..dim {
                for b in 0..dim {
                    let v = t.product(a, b);
                    if !v.is_zero() {
                        out.push_str(&format!(
                            "{} {} = {}\n",
                            basis.name(a),
                            basis.name(b),
                            emit_vector(basis, v)
                        ));
                    }
                }
            }
        }
        Algebra::Akivis(s) => {
            for a in 0..dim {
                for b in 0..dim {
                    let v = s.bracket(a, b);
                    if !v.is_zero() {
                        out.push_str(&format!(
                            "{} {} = {}\n",
                            basis.name(a),
                            basis.name(b),
                            emit_vector(basis, v)
                        ));
                    }
                }
            }
            for a in 0..dim {
                for b in 0..dim {
                    for c in 0..dim {
                        let v = s.ternary(a, b, c);
                        if !v.is_zero() {
                            out.push_str(&format!(
                                "{} {} {} = {}\n",
                                basis.name(a),
                                basis.name(b),
                                basis.name(c),
                                emit_vector(basis, v)
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_example, catalog};

    #[test]
    fn catalog_round_trips() {
        for d in catalog() {
            let alg = build_example(&d.name).unwrap();
            let text = emit(&d.name, &alg);
            let back = parse(&text).unwrap();
            assert_eq!(back.algebra, alg, "{}", d.name);
            assert_eq!(back.emit(), text);
        }
    }

    #[test]
    fn symmetric_even_bracket_is_rejected() {
        let src = "name bad\nkind akivis-spec\neven e1 e2 e3\ne1 e2 = e3\ne2 e1 = e3\n";
        match parse(src).unwrap_err() {
            FormatError::Invalid {
                line: Some(4),
                source: AlgebraError::NotSuperanticommutative { .. },
            } => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn single_even_generator_without_entries() {
        let f = parse("name line\nkind akivis-spec\neven a\n").unwrap();
        assert_eq!(f.algebra.basis().dim(), 1);
    }

    #[test]
    fn loose_right_sides() {
        let src = "name t\nkind akivis-spec\neven a b\nodd x\n\
                   # comment\nx x = 2 a - 1/2 b   # trailing\na b = 0\n";
        let f = parse(src).unwrap();
        let spec = match f.algebra {
            Algebra::Akivis(s) => s,
            _ => unreachable!(),
        };
        assert_eq!(spec.basis().format_vector(spec.bracket(2, 2)), "2 a + -1/2 b");
    }

    #[test]
    fn errors_carry_positions() {
        let base = "name t\nkind product-table\neven a\nodd x\n";
        let err = parse(&format!("{base}a a = 0.5 a\n")).unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 5,
                col: 7,
                message: "decimal literal `0.5` is not accepted; write an exact rational p/q"
                    .into()
            }
        );
        let err = parse(&format!("{base}a a = 1 q\n")).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 5, col: 9, .. }));
        let err = parse(&format!("{base}a a = a\na a = a\n")).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 6, .. }));
        let err = parse(&format!("{base}a x = a\n")).unwrap_err();
        assert!(matches!(err, FormatError::Invalid { line: Some(5), .. }));
        let err = parse("name t\neven a\na a = a\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }));
    }
}
