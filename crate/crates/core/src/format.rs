//! The algebra-spec text format.
//!
//! One directive per line; `#` starts a comment. A free algebra lists its
//! generators, a tabulated one lists its full structure constants:
//!
//! ```text
//! name abc
//! ring Z
//! maxdeg 4
//! generator a 1 = 1[a|1] + 1[1|a]
//! generator c 2 = 1[c|1] + 1[a|b] + 1[1|c]
//! ```
//!
//! ```text
//! name demo
//! ring Z/7
//! maxdeg 1
//! basis 0 1
//! basis 1 x
//! unit 1
//! counit 1[1]
//! product 1 1 = 1[1]
//! product 1 x = 1[x]
//! product x 1 = 1[x]
//! coproduct 1 = 1[1|1]
//! coproduct x = 1[x|1] + 1[1|x]
//! antipode x = -1[x]
//! ```
//!
//! A sum is `coeff[label]` or `coeff[left|right]` terms joined by ` + `;
//! the empty sum is `0`. Coefficients use the ring's token syntax
//! (`(c0,c1,...)` in quotient rings).

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;
use std::path::Path;

use crate::coeff::{Coeff, RingSpec};
use crate::error::{Error, Result};
use crate::gmod::{accumulate, GradedBasis, GradedModule, Terms, Terms2};
use crate::hopf::{GeneratorSpec, HopfPresentation, UNIT_LABEL};
use crate::zoo;

fn sum_text<K>(ring: &RingSpec, terms: &BTreeMap<K, Coeff>, key: impl Fn(&K) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|(k, c)| format!("{}[{}]", ring.token(c), key(k))).collect::<Vec<_>>().join(" + ")
}

/// Writes `h` in the algebra-spec format.
pub fn export(h: &HopfPresentation) -> String {
    let ring = h.ring();
    let b = h.basis();
    let pair = |&(l, r): &(usize, usize)| format!("{}|{}", b.label(l), b.label(r));
    let one = |&i: &usize| b.label(i).to_string();
    let mut out = String::new();
    writeln!(out, "name {}", h.name()).unwrap();
    writeln!(out, "ring {ring}").unwrap();
    writeln!(out, "maxdeg {}", h.max_degree()).unwrap();
    if let Some(gens) = h.generators() {
        for g in gens {
            writeln!(out, "generator {} {} = {}", g.label, g.degree, sum_text(ring, &g.coproduct, pair)).unwrap();
        }
        return out;
    }
    for d in 0..=b.max_degree() {
        let labels = &b.labels()[b.degree_range(d)];
        writeln!(out, "basis {d}{}{}", if labels.is_empty() { "" } else { " " }, labels.join(" ")).unwrap();
    }
    writeln!(out, "unit {}", b.label(h.unit())).unwrap();
    writeln!(out, "counit {}", sum_text(ring, h.counit_terms(), one)).unwrap();
    let products = h.table_products().expect("tabulated presentation");
    let mut keys: Vec<_> = products.keys().copied().collect();
    keys.sort_unstable();
    for (i, j) in keys {
        writeln!(out, "product {} {} = {}", b.label(i), b.label(j), sum_text(ring, &products[&(i, j)], one)).unwrap();
    }
    for i in 0..h.module().dim() {
        writeln!(out, "coproduct {} = {}", b.label(i), sum_text(ring, h.coproduct_of(i), pair)).unwrap();
    }
    if let Some(s) = h.explicit_antipode() {
        for i in 0..h.module().dim() {
            writeln!(out, "antipode {} = {}", b.label(i), sum_text(ring, s.image(i), one)).unwrap();
        }
    }
    out
}

struct Line<'a> {
    number: usize,
    keyword: &'a str,
    rest: &'a str,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Splits `coeff[key] + coeff[key] + ...` into `(coeff, key)` pieces.
fn split_sum(line: usize, text: &str) -> Result<Vec<(&str, &str)>> {
    let text = text.trim();
    if text == "0" {
        return Ok(Vec::new());
    }
    text.split(" + ")
        .map(|term| {
            let term = term.trim();
            let (coeff, rest) = term.split_once('[').ok_or_else(|| err(line, format!("expected `coeff[label]`, got `{term}`")))?;
            let key = rest.strip_suffix(']').ok_or_else(|| err(line, format!("missing `]` in `{term}`")))?;
            Ok((coeff.trim(), key))
        })
        .collect()
}

fn parse_coeff(ring: &RingSpec, line: usize, text: &str) -> Result<Coeff> {
    ring.parse_coeff(text).map_err(|e| err(line, e.to_string()))
}

fn parse_terms(ring: &RingSpec, basis: &GradedBasis, line: usize, text: &str) -> Result<Terms> {
    let mut out = Terms::new();
    for (c, key) in split_sum(line, text)? {
        let i = basis.index_of(key).ok_or_else(|| err(line, format!("unknown label `{key}`")))?;
        accumulate(ring, &mut out, i, parse_coeff(ring, line, c)?);
    }
    Ok(out)
}

fn parse_pair(line: usize, key: &str) -> Result<(&str, &str)> {
    key.split_once('|').ok_or_else(|| err(line, format!("expected `left|right`, got `{key}`")))
}

fn parse_terms2(ring: &RingSpec, basis: &GradedBasis, line: usize, text: &str) -> Result<Terms2> {
    let mut out = Terms2::new();
    for (c, key) in split_sum(line, text)? {
        let (l, r) = parse_pair(line, key)?;
        let look = |s: &str| basis.index_of(s).ok_or_else(|| err(line, format!("unknown label `{s}`")));
        accumulate(ring, &mut out, (look(l)?, look(r)?), parse_coeff(ring, line, c)?);
    }
    Ok(out)
}

fn single<'a>(lines: &[Line<'a>], keyword: &str) -> Result<Option<&'a str>> {
    let mut found = lines.iter().filter(|l| l.keyword == keyword);
    let first = found.next();
    if let Some(dup) = found.next() {
        return Err(err(dup.number, format!("duplicate `{keyword}` directive")));
    }
    Ok(first.map(|l| l.rest))
}

fn required<'a>(lines: &[Line<'a>], keyword: &str) -> Result<(usize, &'a str)> {
    single(lines, keyword)?;
    lines
        .iter()
        .find(|l| l.keyword == keyword)
        .map(|l| (l.number, l.rest))
        .ok_or_else(|| err(0, format!("missing `{keyword}` directive")))
}

/// Reads an algebra from the spec format; errors carry 1-based line numbers.
pub fn parse(text: &str) -> Result<HopfPresentation> {
    const KEYWORDS: [&str; 10] =
        ["name", "ring", "maxdeg", "generator", "basis", "unit", "counit", "product", "coproduct", "antipode"];
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        if !KEYWORDS.contains(&keyword) {
            return Err(err(idx + 1, format!("unknown directive `{keyword}`")));
        }
        lines.push(Line { number: idx + 1, keyword, rest: rest.trim() });
    }

    let name = single(&lines, "name")?.unwrap_or("spec").to_string();
    let (ring_line, ring_text) = required(&lines, "ring")?;
    let ring: RingSpec = ring_text.parse().map_err(|e: Error| err(ring_line, e.to_string()))?;
    let (deg_line, deg_text) = required(&lines, "maxdeg")?;
    let max_degree: usize = deg_text.parse().map_err(|_| err(deg_line, format!("bad max degree `{deg_text}`")))?;

    let has_generators = lines.iter().any(|l| l.keyword == "generator");
    let has_tables = lines.iter().any(|l| ["basis", "unit", "counit", "product", "coproduct", "antipode"].contains(&l.keyword));
    match (has_generators, has_tables) {
        (true, true) => {
            let l = lines.iter().find(|l| l.keyword == "basis" || l.keyword == "product" || l.keyword == "coproduct");
            Err(err(l.map_or(0, |l| l.number), "a spec lists either generators or tables, not both"))
        }
        (true, false) => parse_free(&lines, &name, &ring, max_degree),
        (false, true) => parse_table(&lines, &name, &ring, max_degree),
        (false, false) => Err(err(0, "no generators or tables")),
    }
}

pub fn parse_file(path: &Path) -> Result<HopfPresentation> {
    parse(&std::fs::read_to_string(path)?)
}

fn parse_free(lines: &[Line], name: &str, ring: &RingSpec, max_degree: usize) -> Result<HopfPresentation> {
    let mut gens = Vec::new();
    for l in lines.iter().filter(|l| l.keyword == "generator") {
        let (head, body) = l.rest.split_once('=').ok_or_else(|| err(l.number, "expected `generator <label> <degree> = <sum>`"))?;
        let mut head = head.split_whitespace();
        let (Some(label), Some(degree), None) = (head.next(), head.next(), head.next()) else {
            return Err(err(l.number, "expected `generator <label> <degree> = <sum>`"));
        };
        let degree: usize = degree.parse().map_err(|_| err(l.number, format!("bad degree `{degree}`")))?;
        if gens.iter().any(|g: &GeneratorSpec| g.label == label) {
            return Err(err(l.number, format!("duplicate generator `{label}`")));
        }
        let mut coproduct = Vec::new();
        for (c, key) in split_sum(l.number, body)? {
            let (left, right) = parse_pair(l.number, key)?;
            coproduct.push((left.to_string(), right.to_string(), parse_coeff(ring, l.number, c)?));
        }
        gens.push(GeneratorSpec { label: label.to_string(), degree, coproduct });
    }
    zoo::free_bialgebra(name, gens, ring, max_degree)
}

fn parse_table(lines: &[Line], name: &str, ring: &RingSpec, max_degree: usize) -> Result<HopfPresentation> {
    let mut per_degree: Vec<Option<Vec<String>>> = vec![None; max_degree + 1];
    let mut seen = HashMap::new();
    for l in lines.iter().filter(|l| l.keyword == "basis") {
        let mut words = l.rest.split_whitespace();
        let d = words.next().ok_or_else(|| err(l.number, "expected `basis <degree> <labels...>`"))?;
        let d: usize = d.parse().map_err(|_| err(l.number, format!("bad degree `{d}`")))?;
        if d > max_degree {
            return Err(err(l.number, format!("degree {d} exceeds maxdeg {max_degree}")));
        }
        if per_degree[d].is_some() {
            return Err(err(l.number, format!("degree {d} listed twice")));
        }
        let labels: Vec<String> = words.map(str::to_string).collect();
        for label in &labels {
            if let Some(prev) = seen.insert(label.clone(), l.number) {
                return Err(err(l.number, format!("duplicate label `{label}` (first on line {prev})")));
            }
        }
        per_degree[d] = Some(labels);
    }
    let basis = GradedBasis::new(per_degree.into_iter().map(Option::unwrap_or_default).collect())
        .map_err(|e| err(0, e.to_string()))?;
    let dim = basis.len();
    let label_at = |line: usize, s: &str| basis.index_of(s).ok_or_else(|| err(line, format!("unknown label `{s}`")));

    let (unit_line, unit_text) = required(lines, "unit").unwrap_or((0, UNIT_LABEL));
    let unit = label_at(unit_line, unit_text)?;
    let (counit_line, counit_text) = required(lines, "counit")?;
    let counit = parse_terms(ring, &basis, counit_line, counit_text)?;

    let mut products = HashMap::new();
    for l in lines.iter().filter(|l| l.keyword == "product") {
        let (head, body) = l.rest.split_once('=').ok_or_else(|| err(l.number, "expected `product <left> <right> = <sum>`"))?;
        let mut head = head.split_whitespace();
        let (Some(x), Some(y), None) = (head.next(), head.next(), head.next()) else {
            return Err(err(l.number, "expected `product <left> <right> = <sum>`"));
        };
        let key = (label_at(l.number, x)?, label_at(l.number, y)?);
        let terms = parse_terms(ring, &basis, l.number, body)?;
        let degree = basis.degree(key.0) + basis.degree(key.1);
        if degree <= max_degree {
            if let Some(&k) = terms.keys().find(|&&k| basis.degree(k) != degree) {
                return Err(err(l.number, format!("term `{}` is not of degree {degree}", basis.label(k))));
            }
        }
        if products.insert(key, terms).is_some() {
            return Err(err(l.number, format!("product `{x}` `{y}` given twice")));
        }
    }

    let mut coproducts: Vec<Option<Terms2>> = vec![None; dim];
    let mut antipode: Vec<Option<Terms>> = vec![None; dim];
    for l in lines.iter().filter(|l| l.keyword == "coproduct" || l.keyword == "antipode") {
        let (x, body) = l.rest.split_once('=').ok_or_else(|| err(l.number, format!("expected `{} <label> = <sum>`", l.keyword)))?;
        let i = label_at(l.number, x.trim())?;
        let duplicate = if l.keyword == "coproduct" {
            let terms = parse_terms2(ring, &basis, l.number, body)?;
            if let Some(&(a, b)) = terms.keys().find(|&&(a, b)| basis.degree(a) + basis.degree(b) != basis.degree(i)) {
                return Err(err(
                    l.number,
                    format!("term `{}⊗{}` is not of total degree {}", basis.label(a), basis.label(b), basis.degree(i)),
                ));
            }
            coproducts[i].replace(terms).is_some()
        } else {
            antipode[i].replace(parse_terms(ring, &basis, l.number, body)?).is_some()
        };
        if duplicate {
            return Err(err(l.number, format!("{} of `{}` given twice", l.keyword, x.trim())));
        }
    }
    let coproducts = coproducts
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| err(0, format!("missing coproduct of `{}`", basis.label(i)))))
        .collect::<Result<Vec<_>>>()?;
    let antipode = if antipode.iter().all(Option::is_none) {
        None
    } else {
        Some(
            antipode
                .into_iter()
                .enumerate()
                .map(|(i, s)| s.ok_or_else(|| err(0, format!("missing antipode of `{}`", basis.label(i)))))
                .collect::<Result<Vec<_>>>()?,
        )
    };
    let module = GradedModule::new(basis, ring.clone());
    HopfPresentation::from_tables(name, module, unit, counit, products, coproducts, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_round_trip_text() {
        let h = zoo::free_example_abc(&RingSpec::integers(), 3).unwrap();
        let text = export(&h);
        assert!(text.contains("generator c 2 = 1[1|c] + 1[a|b] + 1[c|1]"), "{text}");
        let back = parse(&text).unwrap();
        assert_eq!(export(&back), text);
        assert_eq!(back.basis().labels(), h.basis().labels());
    }

    #[test]
    fn table_round_trip_text() {
        let h = zoo::taft(3).unwrap();
        let text = export(&h);
        let back = parse(&text).unwrap();
        assert_eq!(export(&back), text);
        assert_eq!(back.antipode().unwrap(), h.antipode().unwrap());
    }

    #[test]
    fn duplicate_label_is_rejected_with_line() {
        let text = "ring Z\nmaxdeg 1\nbasis 0 1\nbasis 1 x x\n";
        match parse(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("duplicate label"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coproduct_of_wrong_degree_is_rejected() {
        let text = "ring Z\nmaxdeg 1\nbasis 0 1\nbasis 1 x\ncounit 1[1]\n\
                    product 1 1 = 1[1]\nproduct 1 x = 1[x]\nproduct x 1 = 1[x]\n\
                    coproduct 1 = 1[1|1]\ncoproduct x = 1[x|x]\n";
        assert!(matches!(parse(text), Err(Error::Parse { line: 10, .. })));
    }

    #[test]
    fn broken_generator_surfaces() {
        let text = "ring Z\nmaxdeg 3\ngenerator a 1 = 1[a|1]\n";
        assert!(matches!(parse(text), Err(Error::GeneratorCounit(_))));
        let text = "ring Z\nmaxdeg 3\nbogus 1\n";
        assert!(matches!(parse(text), Err(Error::Parse { line: 3, .. })));
    }
}
