use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::coeff::{Coeff, RingElement, RingSpec};
use crate::error::Result;

use super::basis::GradedModule;

/// Sparse coefficients keyed by basis index; zeros are never stored.
pub type Terms = BTreeMap<usize, Coeff>;
/// Sparse coefficients keyed by pairs of basis indices.
pub type Terms2 = BTreeMap<(usize, usize), Coeff>;

/// Adds `c` at `key`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: Ord>(ring: &RingSpec, acc: &mut BTreeMap<K, Coeff>, key: K, c: Coeff) {
    use std::collections::btree_map::Entry;
    if ring.is_zero(&c) {
        return;
    }
    match acc.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = ring.add(o.get(), &c);
            if ring.is_zero(&sum) {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// `acc += scale * src`.
pub(crate) fn add_scaled<K: Ord + Clone>(
    ring: &RingSpec,
    acc: &mut BTreeMap<K, Coeff>,
    scale: &Coeff,
    src: &BTreeMap<K, Coeff>,
) {
    if ring.is_zero(scale) {
        return;
    }
    let unit = ring.is_one(scale);
    for (k, c) in src {
        let c = if unit { c.clone() } else { ring.mul(scale, c) };
        accumulate(ring, acc, k.clone(), c);
    }
}

pub(crate) fn scaled<K: Ord + Clone>(ring: &RingSpec, scale: &Coeff, src: &BTreeMap<K, Coeff>) -> BTreeMap<K, Coeff> {
    let mut out = BTreeMap::new();
    add_scaled(ring, &mut out, scale, src);
    out
}

pub(crate) fn difference<K: Ord + Clone>(
    ring: &RingSpec,
    a: &BTreeMap<K, Coeff>,
    b: &BTreeMap<K, Coeff>,
) -> BTreeMap<K, Coeff> {
    let mut out = a.clone();
    add_scaled(ring, &mut out, &ring.from_int(-1), b);
    out
}

pub(crate) fn sum<K: Ord + Clone>(ring: &RingSpec, a: &BTreeMap<K, Coeff>, b: &BTreeMap<K, Coeff>) -> BTreeMap<K, Coeff> {
    let mut out = a.clone();
    add_scaled(ring, &mut out, &ring.one(), b);
    out
}

/// Formats `terms` as `c1*l1 + c2*l2 - ...` with `label` rendering the keys.
pub(crate) fn format_terms<K>(ring: &RingSpec, terms: &BTreeMap<K, Coeff>, label: impl Fn(&K) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in terms {
        let text = ring.format(c);
        let (negative, mag) = match text.strip_prefix('-') {
            Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest.to_string()),
            _ => (false, text),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let lab = label(k);
        if mag == "1" {
            out.push_str(&lab);
        } else if mag.contains(' ') {
            out.push_str(&format!("({mag})*{lab}"));
        } else {
            out.push_str(&format!("{mag}*{lab}"));
        }
    }
    out
}

/// An element of a graded free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    module: GradedModule,
    terms: Terms,
}

impl Element {
    pub fn zero(module: &GradedModule) -> Self {
        Element { module: module.clone(), terms: Terms::new() }
    }

    pub fn basis(module: &GradedModule, index: usize) -> Self {
        assert!(index < module.dim(), "basis index out of range");
        let mut terms = Terms::new();
        terms.insert(index, module.ring().one());
        Element { module: module.clone(), terms }
    }

    pub fn from_label(module: &GradedModule, label: &str) -> Result<Self> {
        Ok(Self::basis(module, module.basis().lookup(label)?))
    }

    /// Builds a canonical element from possibly repeated or zero terms.
    pub fn from_terms(module: &GradedModule, terms: impl IntoIterator<Item = (usize, Coeff)>) -> Self {
        let ring = module.ring();
        let mut acc = Terms::new();
        for (k, c) in terms {
            assert!(k < module.dim(), "basis index out of range");
            accumulate(ring, &mut acc, k, c);
        }
        Element { module: module.clone(), terms: acc }
    }

    pub fn from_label_terms(module: &GradedModule, terms: &[(&str, i64)]) -> Result<Self> {
        let ring = module.ring();
        let mut acc = Terms::new();
        for (l, c) in terms {
            accumulate(ring, &mut acc, module.basis().lookup(l)?, ring.from_int(*c));
        }
        Ok(Element { module: module.clone(), terms: acc })
    }

    /// Wraps already-canonical terms.
    pub(crate) fn from_canonical(module: &GradedModule, terms: Terms) -> Self {
        Element { module: module.clone(), terms }
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn ring(&self) -> &RingSpec {
        self.module.ring()
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: usize) -> Coeff {
        self.terms.get(&index).cloned().unwrap_or_else(|| self.ring().zero())
    }

    pub fn coefficient(&self, label: &str) -> Result<RingElement> {
        let i = self.module.basis().lookup(label)?;
        Ok(RingElement::from_canonical(self.ring(), self.coeff(i)))
    }

    /// Degrees of the basis labels in the support.
    pub fn degree_support(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|&i| self.module.basis().degree(i)).collect()
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.module.check(&other.module)?;
        Ok(Element::from_canonical(&self.module, sum(self.ring(), &self.terms, &other.terms)))
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.module.check(&other.module)?;
        Ok(Element::from_canonical(&self.module, difference(self.ring(), &self.terms, &other.terms)))
    }

    pub fn scale(&self, c: &RingElement) -> Result<Element> {
        if c.ring() != self.ring() {
            return Err(crate::Error::RingMismatch(c.ring().to_string(), self.ring().to_string()));
        }
        Ok(self.scale_coeff(c.value()))
    }

    pub fn scale_coeff(&self, c: &Coeff) -> Element {
        Element::from_canonical(&self.module, scaled(self.ring(), c, &self.terms))
    }

    /// Label/coefficient pairs in basis order.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        let basis = self.module.basis();
        let ring = self.ring();
        self.terms.iter().map(|(&i, c)| (basis.label(i).to_string(), ring.format(c))).collect()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.module.basis();
        f.write_str(&format_terms(self.ring(), &self.terms, |&i| basis.label(i).to_string()))
    }
}

// Operators panic on module mismatch; use `try_add` / `try_sub` for checked arithmetic.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("element addition across modules")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("element subtraction across modules")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale_coeff(&self.ring().from_int(-1))
    }
}

/// An element of the tensor square, on the product basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2Element {
    module: GradedModule,
    terms: Terms2,
}

impl Tensor2Element {
    pub fn zero(module: &GradedModule) -> Self {
        Tensor2Element { module: module.clone(), terms: Terms2::new() }
    }

    pub fn from_terms(module: &GradedModule, terms: impl IntoIterator<Item = ((usize, usize), Coeff)>) -> Self {
        let ring = module.ring();
        let mut acc = Terms2::new();
        for (k, c) in terms {
            assert!(k.0 < module.dim() && k.1 < module.dim(), "basis index out of range");
            accumulate(ring, &mut acc, k, c);
        }
        Tensor2Element { module: module.clone(), terms: acc }
    }

    pub fn from_label_terms(module: &GradedModule, terms: &[(&str, &str, i64)]) -> Result<Self> {
        let ring = module.ring();
        let b = module.basis();
        let mut acc = Terms2::new();
        for (l, r, c) in terms {
            accumulate(ring, &mut acc, (b.lookup(l)?, b.lookup(r)?), ring.from_int(*c));
        }
        Ok(Tensor2Element { module: module.clone(), terms: acc })
    }

    pub(crate) fn from_canonical(module: &GradedModule, terms: Terms2) -> Self {
        Tensor2Element { module: module.clone(), terms }
    }

    /// The pure tensor `x ⊗ y`.
    pub fn tensor_of(x: &Element, y: &Element) -> Result<Self> {
        x.module.check(&y.module)?;
        let ring = x.ring();
        let mut terms = Terms2::new();
        for (&i, a) in &x.terms {
            for (&j, b) in &y.terms {
                accumulate(ring, &mut terms, (i, j), ring.mul(a, b));
            }
        }
        Ok(Tensor2Element { module: x.module.clone(), terms })
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn ring(&self) -> &RingSpec {
        self.module.ring()
    }

    pub fn terms(&self) -> &Terms2 {
        &self.terms
    }

    pub fn into_terms(self) -> Terms2 {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Coeff {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.ring().zero())
    }

    /// Bidegrees `(deg l1, deg l2)` of the keys with nonzero coefficient.
    pub fn bidegree_support(&self) -> BTreeSet<(usize, usize)> {
        let b = self.module.basis();
        self.terms.keys().map(|&(i, j)| (b.degree(i), b.degree(j))).collect()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.module.check(&other.module)?;
        Ok(Self::from_canonical(&self.module, sum(self.ring(), &self.terms, &other.terms)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.module.check(&other.module)?;
        Ok(Self::from_canonical(&self.module, difference(self.ring(), &self.terms, &other.terms)))
    }

    pub fn scale_coeff(&self, c: &Coeff) -> Self {
        Self::from_canonical(&self.module, scaled(self.ring(), c, &self.terms))
    }

    /// `left|right` / coefficient pairs in basis order.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        let b = self.module.basis();
        let ring = self.ring();
        self.terms
            .iter()
            .map(|(&(i, j), c)| (format!("{}|{}", b.label(i), b.label(j)), ring.format(c)))
            .collect()
    }
}

impl fmt::Display for Tensor2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.module.basis();
        f.write_str(&format_terms(self.ring(), &self.terms, |&(i, j)| format!("{}⊗{}", b.label(i), b.label(j))))
    }
}

impl Add for &Tensor2Element {
    type Output = Tensor2Element;
    fn add(self, rhs: &Tensor2Element) -> Tensor2Element {
        self.try_add(rhs).expect("tensor addition across modules")
    }
}

impl Sub for &Tensor2Element {
    type Output = Tensor2Element;
    fn sub(self, rhs: &Tensor2Element) -> Tensor2Element {
        self.try_sub(rhs).expect("tensor subtraction across modules")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmod::GradedBasis;

    fn module(ring: &str) -> GradedModule {
        let basis = GradedBasis::new(vec![
            vec!["1".into()],
            vec!["a".into(), "b".into()],
            vec!["c".into()],
        ])
        .unwrap();
        GradedModule::new(basis, ring.parse().unwrap())
    }

    #[test]
    fn elementwise_arithmetic() {
        let m = module("Z");
        let a = Element::from_label(&m, "a").unwrap();
        let b = Element::from_label(&m, "b").unwrap();
        assert_eq!(&a + &Element::zero(&m), a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &b).to_string(), "a - b");

        let m2 = module("Z/2");
        let a2 = Element::from_label(&m2, "a").unwrap();
        assert!(a2.scale_coeff(&m2.ring().from_int(2)).is_zero());
        assert!(a.try_add(&a2).is_err());
    }

    #[test]
    fn pure_tensors_are_bilinear() {
        let m = module("Z");
        let a = Element::from_label(&m, "a").unwrap();
        let b = Element::from_label(&m, "b").unwrap();
        let c = Element::from_label(&m, "c").unwrap();
        let t = Tensor2Element::tensor_of(&a, &b).unwrap();
        assert_eq!(t, Tensor2Element::from_label_terms(&m, &[("a", "b", 1)]).unwrap());
        let t = Tensor2Element::tensor_of(&(&a + &b), &c).unwrap();
        assert_eq!(t, Tensor2Element::from_label_terms(&m, &[("a", "c", 1), ("b", "c", 1)]).unwrap());
        assert!(Tensor2Element::tensor_of(&Element::zero(&m), &a).unwrap().is_zero());
    }

    #[test]
    fn bidegrees() {
        let m = module("Z");
        assert!(Tensor2Element::zero(&m).bidegree_support().is_empty());
        let t = Tensor2Element::from_label_terms(&m, &[("a", "b", 1), ("c", "1", 3)]).unwrap();
        assert_eq!(t.bidegree_support(), [(1, 1), (2, 0)].into_iter().collect());
    }
}
