use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::coeff::{Coeff, RingElement, RingSpec};
use crate::error::{Error, Result};
use crate::gmod::{
    accumulate, add_scaled, CoproductMap, Element, GradedBasis, GradedMap, GradedModule, Tensor2Element, Terms, Terms2,
};

/// A generator of a free bialgebra with its coproduct written on word labels.
#[derive(Clone, Debug)]
pub struct GeneratorSpec {
    pub label: String,
    pub degree: usize,
    /// `(left, right, coefficient)` terms of the coproduct.
    pub coproduct: Vec<(String, String, Coeff)>,
}

impl GeneratorSpec {
    /// A primitive generator: `Δ(g) = g⊗1 + 1⊗g`.
    pub fn primitive(label: &str, degree: usize, ring: &RingSpec) -> Self {
        GeneratorSpec {
            label: label.to_string(),
            degree,
            coproduct: vec![
                (label.to_string(), UNIT_LABEL.to_string(), ring.one()),
                (UNIT_LABEL.to_string(), label.to_string(), ring.one()),
            ],
        }
    }
}

/// Label of the unit in the built-in presentations.
pub const UNIT_LABEL: &str = "1";

#[derive(Debug)]
pub(crate) struct FreeGenerator {
    pub label: String,
    pub degree: usize,
    pub coproduct: Terms2,
}

/// Free algebra on graded generators; the basis is all words up to the
/// truncation degree and the coproduct extends multiplicatively.
#[derive(Debug)]
pub(crate) struct FreeStructure {
    pub generators: Vec<FreeGenerator>,
    words: Vec<Vec<usize>>,
    word_index: HashMap<Vec<usize>, usize>,
    /// Coproducts of the words of each degree, filled on first use.
    cache: Vec<OnceLock<Vec<Terms2>>>,
}

/// Fully tabulated structure constants.
#[derive(Debug)]
pub(crate) struct TableStructure {
    pub products: HashMap<(usize, usize), Terms>,
    pub coproducts: Vec<Terms2>,
}

#[derive(Debug)]
pub(crate) enum Structure {
    Free(FreeStructure),
    Table(TableStructure),
}

enum ProductRef<'a> {
    Basis(usize),
    Terms(&'a Terms),
}

/// Whether degree 0 is spanned by the unit, as seen by the counit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectedness {
    pub connected: bool,
    pub degree0_rank: usize,
    pub counit_of_unit_is_one: bool,
    /// When connected: the label sent to 1 by the inverse of `ε` on degree 0
    /// is the unit label (the two unities agree).
    pub unit_agreement: Option<bool>,
}

/// A graded bialgebra (optionally with an explicit antipode) truncated at
/// `max_degree`, given by structure constants.
#[derive(Debug)]
pub struct HopfPresentation {
    name: String,
    module: GradedModule,
    unit: usize,
    counit: Terms,
    pub(crate) structure: Structure,
    explicit_antipode: Option<GradedMap>,
    antipode: OnceLock<GradedMap>,
}

fn check_label_syntax(label: &str) -> Result<()> {
    if label.is_empty() || label.chars().any(|c| c.is_whitespace() || "[]|=*#".contains(c)) {
        return Err(Error::Invalid(format!("label `{label}` contains reserved characters")));
    }
    Ok(())
}

impl HopfPresentation {
    /// Free algebra on `generators` with the multiplicative coproduct.
    ///
    /// Each generator coproduct must have total degree equal to the
    /// generator's degree, satisfy both counit axioms, and be coassociative
    /// (checked generator by generator).
    pub fn free(name: &str, generators: Vec<GeneratorSpec>, ring: &RingSpec, max_degree: usize) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            check_label_syntax(&g.label)?;
            if g.label == UNIT_LABEL || !seen.insert(g.label.clone()) {
                return Err(Error::Invalid(format!("duplicate or reserved generator label `{}`", g.label)));
            }
            if g.degree == 0 {
                return Err(Error::Invalid(format!("generator `{}` must have positive degree", g.label)));
            }
        }
        let single_chars = generators.iter().all(|g| g.label.chars().count() == 1);
        let sep = if single_chars { "" } else { "*" };

        let mut by_degree: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        for d in 1..=max_degree {
            let mut level = Vec::new();
            for (gi, g) in generators.iter().enumerate() {
                if g.degree <= d {
                    for tail in &by_degree[d - g.degree] {
                        let mut w = vec![gi];
                        w.extend_from_slice(tail);
                        level.push(w);
                    }
                }
            }
            by_degree.push(level);
        }
        let label_of = |w: &[usize]| -> String {
            if w.is_empty() {
                UNIT_LABEL.to_string()
            } else {
                w.iter().map(|&g| generators[g].label.as_str()).collect::<Vec<_>>().join(sep)
            }
        };
        let per_degree_labels = by_degree.iter().map(|lvl| lvl.iter().map(|w| label_of(w)).collect()).collect();
        let basis = GradedBasis::new(per_degree_labels)?;
        let module = GradedModule::new(basis, ring.clone());
        let words: Vec<Vec<usize>> = by_degree.into_iter().flatten().collect();
        let word_index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

        let mut free_gens = Vec::new();
        for g in &generators {
            let mut terms = Terms2::new();
            for (l, r, c) in &g.coproduct {
                let li = module.basis().lookup(l)?;
                let ri = module.basis().lookup(r)?;
                let total = module.basis().degree(li) + module.basis().degree(ri);
                if total != g.degree {
                    return Err(Error::Invalid(format!(
                        "coproduct of `{}` has a term `{l}⊗{r}` of total degree {total}, expected {}",
                        g.label, g.degree
                    )));
                }
                accumulate(ring, &mut terms, (li, ri), ring.normalize(c.clone())?);
            }
            free_gens.push(FreeGenerator { label: g.label.clone(), degree: g.degree, coproduct: terms });
        }

        let structure = Structure::Free(FreeStructure {
            generators: free_gens,
            words,
            word_index,
            cache: (0..=max_degree).map(|_| OnceLock::new()).collect(),
        });
        let counit = Terms::from([(0, ring.one())]);
        let h = HopfPresentation {
            name: name.to_string(),
            module,
            unit: 0,
            counit,
            structure,
            explicit_antipode: None,
            antipode: OnceLock::new(),
        };
        h.check_generators()?;
        Ok(h)
    }

    fn check_generators(&self) -> Result<()> {
        let Structure::Free(free) = &self.structure else { return Ok(()) };
        let ring = self.ring();
        for (idx, g) in free.generators.iter().enumerate() {
            if g.degree > self.max_degree() {
                continue;
            }
            let gi = free.word_index[&vec![idx]];
            let coprod = &g.coproduct;
            let left = self.counit_left(coprod);
            let right = self.counit_right(coprod);
            let expected = Terms::from([(gi, ring.one())]);
            if left != expected || right != expected {
                return Err(Error::GeneratorCounit(g.label.clone()));
            }
            if self.coassoc_left(coprod) != self.coassoc_right(coprod) {
                return Err(Error::GeneratorCoassociativity(g.label.clone()));
            }
        }
        Ok(())
    }

    /// Tabulated presentation. `products` must contain every label pair whose
    /// degrees sum to at most the truncation degree; further entries are
    /// allowed only when zero (the algebra vanishes beyond its top degree).
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        name: &str,
        module: GradedModule,
        unit: usize,
        counit: Terms,
        products: HashMap<(usize, usize), Terms>,
        coproducts: Vec<Terms2>,
        antipode: Option<Vec<Terms>>,
    ) -> Result<Self> {
        let b = module.basis();
        let n = b.max_degree();
        for label in b.labels() {
            check_label_syntax(label)?;
        }
        if unit >= module.dim() || b.degree(unit) != 0 {
            return Err(Error::Invalid("the unit label must have degree 0".into()));
        }
        if let Some(&k) = counit.keys().find(|&&k| b.degree(k) != 0) {
            return Err(Error::Invalid(format!("counit is nonzero on `{}` of positive degree", b.label(k))));
        }
        if coproducts.len() != module.dim() {
            return Err(Error::Invalid("a coproduct is needed for every basis label".into()));
        }
        for (i, t) in coproducts.iter().enumerate() {
            if let Some(&(l, r)) = t.keys().find(|&&(l, r)| b.degree(l) + b.degree(r) != b.degree(i)) {
                return Err(Error::Invalid(format!(
                    "coproduct of `{}` has a term `{}⊗{}` of the wrong total degree",
                    b.label(i),
                    b.label(l),
                    b.label(r)
                )));
            }
        }
        for (&(i, j), t) in &products {
            let d = b.degree(i) + b.degree(j);
            if d > n {
                if !t.is_empty() {
                    return Err(Error::Invalid(format!(
                        "product `{}`·`{}` beyond the top degree must be zero",
                        b.label(i),
                        b.label(j)
                    )));
                }
            } else if let Some(&k) = t.keys().find(|&&k| b.degree(k) != d) {
                return Err(Error::Invalid(format!(
                    "product `{}`·`{}` has a term `{}` outside degree {d}",
                    b.label(i),
                    b.label(j),
                    b.label(k)
                )));
            }
        }
        for i in 0..module.dim() {
            for j in b.up_to(n - b.degree(i)) {
                if !products.contains_key(&(i, j)) {
                    return Err(Error::Invalid(format!("missing product `{}`·`{}`", b.label(i), b.label(j))));
                }
            }
        }
        let explicit_antipode = match antipode {
            Some(images) => {
                if images.len() != module.dim() {
                    return Err(Error::Invalid("an antipode image is needed for every basis label".into()));
                }
                Some(GradedMap::from_terms(&module, images))
            }
            None => None,
        };
        Ok(HopfPresentation {
            name: name.to_string(),
            module,
            unit,
            counit,
            structure: Structure::Table(TableStructure { products, coproducts }),
            explicit_antipode,
            antipode: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn basis(&self) -> &GradedBasis {
        self.module.basis()
    }

    pub fn ring(&self) -> &RingSpec {
        self.module.ring()
    }

    pub fn max_degree(&self) -> usize {
        self.basis().max_degree()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn unit_element(&self) -> Element {
        Element::basis(&self.module, self.unit)
    }

    pub fn element(&self, label: &str) -> Result<Element> {
        Element::from_label(&self.module, label)
    }

    pub fn explicit_antipode(&self) -> Option<&GradedMap> {
        self.explicit_antipode.as_ref()
    }

    pub fn is_free(&self) -> bool {
        matches!(self.structure, Structure::Free(_))
    }

    pub(crate) fn generators(&self) -> Option<&[FreeGenerator]> {
        match &self.structure {
            Structure::Free(f) => Some(&f.generators),
            Structure::Table(_) => None,
        }
    }

    pub(crate) fn table_products(&self) -> Option<&HashMap<(usize, usize), Terms>> {
        match &self.structure {
            Structure::Free(_) => None,
            Structure::Table(t) => Some(&t.products),
        }
    }

    pub(crate) fn counit_terms(&self) -> &Terms {
        &self.counit
    }

    /// The filtration `H≤0 ⊆ H≤1 ⊆ ...` induced by the grading.
    pub fn filtration(&self) -> FiltrationView<'_> {
        FiltrationView { h: self }
    }

    /// True if `x·y` is available (not cut off by the truncation).
    pub fn product_defined(&self, i: usize, j: usize) -> bool {
        match &self.structure {
            Structure::Free(_) => self.basis().degree(i) + self.basis().degree(j) <= self.max_degree(),
            Structure::Table(t) => t.products.contains_key(&(i, j)),
        }
    }

    fn truncated(&self, i: usize, j: usize) -> Error {
        let b = self.basis();
        Error::Truncated {
            left: b.label(i).to_string(),
            right: b.label(j).to_string(),
            degree: b.degree(i) + b.degree(j),
            max_degree: self.max_degree(),
        }
    }

    fn mul_basis(&self, i: usize, j: usize) -> Result<ProductRef<'_>> {
        match &self.structure {
            Structure::Free(f) => {
                if self.basis().degree(i) + self.basis().degree(j) > self.max_degree() {
                    return Err(self.truncated(i, j));
                }
                let mut w = f.words[i].clone();
                w.extend_from_slice(&f.words[j]);
                Ok(ProductRef::Basis(f.word_index[&w]))
            }
            Structure::Table(t) => t.products.get(&(i, j)).map(ProductRef::Terms).ok_or_else(|| self.truncated(i, j)),
        }
    }

    /// Product of two basis labels.
    pub fn product_basis(&self, i: usize, j: usize) -> Result<Terms> {
        Ok(match self.mul_basis(i, j)? {
            ProductRef::Basis(k) => Terms::from([(k, self.ring().one())]),
            ProductRef::Terms(t) => t.clone(),
        })
    }

    pub(crate) fn product_terms(&self, x: &Terms, y: &Terms) -> Result<Terms> {
        let ring = self.ring();
        let mut out = Terms::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let c = ring.mul(a, b);
                match self.mul_basis(i, j)? {
                    ProductRef::Basis(k) => accumulate(ring, &mut out, k, c),
                    ProductRef::Terms(t) => add_scaled(ring, &mut out, &c, t),
                }
            }
        }
        Ok(out)
    }

    /// Bilinear extension of the product table. Fails if any contributing
    /// pair lies beyond the truncation.
    pub fn product(&self, x: &Element, y: &Element) -> Result<Element> {
        self.module.check(x.module())?;
        self.module.check(y.module())?;
        Ok(Element::from_canonical(&self.module, self.product_terms(x.terms(), y.terms())?))
    }

    /// Componentwise product in `H ⊗ H`.
    pub(crate) fn tensor_product_terms(&self, x: &Terms2, y: &Terms2) -> Result<Terms2> {
        let ring = self.ring();
        let mut out = Terms2::new();
        for (&(a, b), c1) in x {
            for (&(p, q), c2) in y {
                let c = ring.mul(c1, c2);
                let left = self.mul_basis(a, p)?;
                let right = self.mul_basis(b, q)?;
                match (left, right) {
                    (ProductRef::Basis(l), ProductRef::Basis(r)) => accumulate(ring, &mut out, (l, r), c),
                    (l, r) => {
                        let lt = match l {
                            ProductRef::Basis(k) => Terms::from([(k, ring.one())]),
                            ProductRef::Terms(t) => t.clone(),
                        };
                        let rt = match r {
                            ProductRef::Basis(k) => Terms::from([(k, ring.one())]),
                            ProductRef::Terms(t) => t.clone(),
                        };
                        let t = crate::gmod::tensor_terms(ring, &lt, &rt);
                        add_scaled(ring, &mut out, &c, &t);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn tensor_product(&self, x: &Tensor2Element, y: &Tensor2Element) -> Result<Tensor2Element> {
        self.module.check(x.module())?;
        self.module.check(y.module())?;
        Ok(Tensor2Element::from_canonical(&self.module, self.tensor_product_terms(x.terms(), y.terms())?))
    }

    /// Coproduct of a basis label.
    pub fn coproduct_of(&self, i: usize) -> &Terms2 {
        match &self.structure {
            Structure::Table(t) => &t.coproducts[i],
            Structure::Free(f) => {
                let d = self.basis().degree(i);
                let table = f.cache[d].get_or_init(|| self.free_degree_table(f, d));
                &table[i - self.basis().degree_range(d).start]
            }
        }
    }

    fn free_degree_table(&self, f: &FreeStructure, d: usize) -> Vec<Terms2> {
        let one = self.ring().one();
        self.basis()
            .degree_range(d)
            .map(|i| {
                let w = &f.words[i];
                match w.len() {
                    0 => Terms2::from([((self.unit, self.unit), one.clone())]),
                    1 => f.generators[w[0]].coproduct.clone(),
                    n => {
                        let prefix = f.word_index[&w[..n - 1]];
                        let last = &f.generators[w[n - 1]].coproduct;
                        self.tensor_product_terms(self.coproduct_of(prefix), last)
                            .expect("degrees of a coproduct factor stay within the truncation")
                    }
                }
            })
            .collect()
    }

    pub(crate) fn coproduct_terms(&self, x: &Terms) -> Terms2 {
        let ring = self.ring();
        let mut out = Terms2::new();
        for (&i, c) in x {
            add_scaled(ring, &mut out, c, self.coproduct_of(i));
        }
        out
    }

    pub fn coproduct(&self, x: &Element) -> Result<Tensor2Element> {
        self.module.check(x.module())?;
        Ok(Tensor2Element::from_canonical(&self.module, self.coproduct_terms(x.terms())))
    }

    /// `Δ` as a map into the tensor square.
    pub fn coproduct_map(&self) -> CoproductMap {
        CoproductMap::from_fn(&self.module, |i| self.coproduct_of(i).clone())
    }

    pub fn counit_of(&self, i: usize) -> Coeff {
        self.counit.get(&i).cloned().unwrap_or_else(|| self.ring().zero())
    }

    pub(crate) fn counit_value(&self, x: &Terms) -> Coeff {
        let ring = self.ring();
        x.iter().fold(ring.zero(), |acc, (&i, c)| match self.counit.get(&i) {
            Some(e) => ring.add(&acc, &ring.mul(c, e)),
            None => acc,
        })
    }

    pub fn counit(&self, x: &Element) -> Result<RingElement> {
        self.module.check(x.module())?;
        Ok(RingElement::from_canonical(self.ring(), self.counit_value(x.terms())))
    }

    /// `(ε⊗id)(t)` through the canonical isomorphism `k⊗H ≅ H`.
    pub(crate) fn counit_left(&self, t: &Terms2) -> Terms {
        let ring = self.ring();
        let mut out = Terms::new();
        for (&(a, b), c) in t {
            if let Some(e) = self.counit.get(&a) {
                accumulate(ring, &mut out, b, ring.mul(c, e));
            }
        }
        out
    }

    /// `(id⊗ε)(t)` through `H⊗k ≅ H`.
    pub(crate) fn counit_right(&self, t: &Terms2) -> Terms {
        let ring = self.ring();
        let mut out = Terms::new();
        for (&(a, b), c) in t {
            if let Some(e) = self.counit.get(&b) {
                accumulate(ring, &mut out, a, ring.mul(c, e));
            }
        }
        out
    }

    pub(crate) fn coassoc_left(&self, t: &Terms2) -> Terms3 {
        let ring = self.ring();
        let mut out = Terms3::new();
        for (&(a, b), c) in t {
            for (&(x, y), c2) in self.coproduct_of(a) {
                accumulate(ring, &mut out, (x, y, b), ring.mul(c, c2));
            }
        }
        out
    }

    pub(crate) fn coassoc_right(&self, t: &Terms2) -> Terms3 {
        let ring = self.ring();
        let mut out = Terms3::new();
        for (&(a, b), c) in t {
            for (&(x, y), c2) in self.coproduct_of(b) {
                accumulate(ring, &mut out, (a, x, y), ring.mul(c, c2));
            }
        }
        out
    }

    /// `Δ(x) − x⊗1 − 1⊗x + ε(x)·1⊗1` on a basis label.
    pub(crate) fn reduced_coproduct_of(&self, i: usize) -> Terms2 {
        let ring = self.ring();
        let u = self.unit;
        let one = ring.one();
        let mut out = self.coproduct_of(i).clone();
        accumulate(ring, &mut out, (i, u), ring.neg(&one));
        accumulate(ring, &mut out, (u, i), ring.neg(&one));
        accumulate(ring, &mut out, (u, u), self.counit_of(i));
        out
    }

    pub fn connectedness(&self) -> Connectedness {
        let b = self.basis();
        let rank = b.rank(0);
        let counit_of_unit_is_one = self.ring().is_one(&self.counit_of(self.unit));
        let connected = rank == 1 && counit_of_unit_is_one;
        let unit_agreement = connected.then(|| {
            // ε restricted to the rank-one degree 0 is c·ℓ ↦ c·ε(ℓ); the
            // preimage of 1 is the label itself.
            let only = b.degree_range(0).start;
            only == self.unit && self.ring().is_one(&self.counit_of(only))
        });
        Connectedness { connected, degree0_rank: rank, counit_of_unit_is_one, unit_agreement }
    }

    /// Degree 0 has rank 1 and the counit sends the unit to 1.
    pub fn is_connected(&self) -> bool {
        self.connectedness().connected
    }

    /// The antipode: the explicit table if one was supplied, otherwise the
    /// connected-graded recursion `S(x) = −x − Σ S(x′)·x″` over the reduced
    /// coproduct. Computed once and cached.
    pub fn antipode(&self) -> Result<&GradedMap> {
        if let Some(s) = &self.explicit_antipode {
            return Ok(s);
        }
        if let Some(s) = self.antipode.get() {
            return Ok(s);
        }
        let s = self.recursive_antipode(Side::Left)?;
        Ok(self.antipode.get_or_init(|| s))
    }

    /// Independent antipode from the right-sided axiom:
    /// `S(x) = −x − Σ x′·S(x″)`. Never cached.
    pub fn antipode_oracle(&self) -> Result<GradedMap> {
        if let Some(s) = &self.explicit_antipode {
            return Ok(s.clone());
        }
        self.recursive_antipode(Side::Right)
    }

    fn recursive_antipode(&self, side: Side) -> Result<GradedMap> {
        use rayon::prelude::*;
        let conn = self.connectedness();
        if !conn.connected {
            return Err(Error::NotConnected(format!(
                "degree-0 rank {}; supply an explicit antipode",
                conn.degree0_rank
            )));
        }
        let ring = self.ring();
        let b = self.basis();
        let mut images: Vec<Terms> = vec![Terms::new(); self.module.dim()];
        images[self.unit] = Terms::from([(self.unit, ring.one())]);
        for d in 1..=self.max_degree() {
            let level: Vec<Result<Terms>> = b
                .degree_range(d)
                .into_par_iter()
                .map(|i| {
                    let mut acc = Terms::new();
                    for (&(x1, x2), c) in &self.reduced_coproduct_of(i) {
                        let (d1, d2) = (b.degree(x1), b.degree(x2));
                        if d1 == 0 || d2 == 0 || d1 >= d || d2 >= d {
                            return Err(Error::Invalid(format!(
                                "reduced coproduct of `{}` has a term `{}⊗{}` outside bidegrees (i, {d}-i), 0<i<{d}",
                                b.label(i),
                                b.label(x1),
                                b.label(x2)
                            )));
                        }
                        let term = match side {
                            Side::Left => self.product_terms(&images[x1], &Terms::from([(x2, ring.one())]))?,
                            Side::Right => self.product_terms(&Terms::from([(x1, ring.one())]), &images[x2])?,
                        };
                        add_scaled(ring, &mut acc, c, &term);
                    }
                    accumulate(ring, &mut acc, i, ring.one());
                    Ok(acc.into_iter().map(|(k, c)| (k, ring.neg(&c))).collect())
                })
                .collect();
            for (i, img) in b.degree_range(d).zip(level) {
                images[i] = img?;
            }
        }
        Ok(GradedMap::from_terms(&self.module, images))
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

pub(crate) type Terms3 = std::collections::BTreeMap<(usize, usize, usize), Coeff>;

/// `H≤n` realized as the labels of degree at most `n`.
#[derive(Clone, Copy)]
pub struct FiltrationView<'a> {
    h: &'a HopfPresentation,
}

impl FiltrationView<'_> {
    /// Basis indices spanning `H≤n`.
    pub fn level(&self, n: usize) -> std::ops::Range<usize> {
        self.h.basis().up_to(n)
    }

    pub fn labels(&self, n: usize) -> Vec<&str> {
        self.level(n).map(|i| self.h.basis().label(i)).collect()
    }
}
