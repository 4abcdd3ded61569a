use rayon::prelude::*;

use crate::coeff::{Coeff, RingSpec};
use crate::error::{Error, Result};

use super::basis::GradedModule;
use super::element::{accumulate, add_scaled, difference, scaled, sum, Element, Tensor2Element, Terms, Terms2};
use super::linalg;

fn apply_linear<K: Ord + Clone + Send + Sync>(ring: &RingSpec, images: &[std::collections::BTreeMap<K, Coeff>], x: &Terms) -> std::collections::BTreeMap<K, Coeff> {
    let mut out = std::collections::BTreeMap::new();
    for (&i, c) in x {
        add_scaled(ring, &mut out, c, &images[i]);
    }
    out
}

/// Tensor product of two sparse elements as a sparse pair map.
pub(crate) fn tensor_terms(ring: &RingSpec, x: &Terms, y: &Terms) -> Terms2 {
    let mut out = Terms2::new();
    for (&i, a) in x {
        for (&j, b) in y {
            accumulate(ring, &mut out, (i, j), ring.mul(a, b));
        }
    }
    out
}

/// A linear endomap of a graded module, stored by the images of all basis labels.
#[derive(Clone, Debug)]
pub struct GradedMap {
    module: GradedModule,
    images: Vec<Terms>,
    filtered: bool,
}

/// Maps are equal when they have the same images; the filtration flag is
/// bookkeeping and does not take part.
impl PartialEq for GradedMap {
    fn eq(&self, other: &Self) -> bool {
        self.module.same(&other.module) && self.images == other.images
    }
}

impl Eq for GradedMap {}

impl GradedMap {
    pub fn from_fn(module: &GradedModule, f: impl Fn(usize) -> Terms + Sync) -> Self {
        let images = (0..module.dim()).into_par_iter().map(&f).collect();
        GradedMap { module: module.clone(), images, filtered: false }
    }

    pub fn from_images(module: &GradedModule, images: Vec<Element>) -> Result<Self> {
        if images.len() != module.dim() {
            return Err(Error::Invalid(format!(
                "map needs {} basis images, got {}",
                module.dim(),
                images.len()
            )));
        }
        let images = images
            .into_iter()
            .map(|e| {
                module.check(e.module())?;
                Ok(e.into_terms())
            })
            .collect::<Result<_>>()?;
        Ok(GradedMap { module: module.clone(), images, filtered: false })
    }

    pub(crate) fn from_terms(module: &GradedModule, images: Vec<Terms>) -> Self {
        debug_assert_eq!(images.len(), module.dim());
        GradedMap { module: module.clone(), images, filtered: false }
    }

    pub fn identity(module: &GradedModule) -> Self {
        let one = module.ring().one();
        let images = (0..module.dim()).map(|i| Terms::from([(i, one.clone())])).collect();
        GradedMap { module: module.clone(), images, filtered: true }
    }

    pub fn zero(module: &GradedModule) -> Self {
        GradedMap { module: module.clone(), images: vec![Terms::new(); module.dim()], filtered: true }
    }

    /// Declares the map filtered after checking that every degree-`d` label
    /// maps into degrees `<= d`.
    pub fn into_filtered(mut self) -> Result<Self> {
        if let Some(i) = self.first_filtration_violation() {
            return Err(Error::Invalid(format!(
                "image of `{}` leaves the filtration level {}",
                self.module.basis().label(i),
                self.module.basis().degree(i)
            )));
        }
        self.filtered = true;
        Ok(self)
    }

    pub fn is_filtered(&self) -> bool {
        self.filtered
    }

    fn first_filtration_violation(&self) -> Option<usize> {
        let b = self.module.basis();
        (0..self.images.len()).find(|&i| self.images[i].keys().any(|&k| b.degree(k) > b.degree(i)))
    }

    /// True when every degree-`d` label maps into degree `d` exactly.
    pub fn is_graded(&self) -> bool {
        let b = self.module.basis();
        (0..self.images.len()).all(|i| self.images[i].keys().all(|&k| b.degree(k) == b.degree(i)))
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn image(&self, i: usize) -> &Terms {
        &self.images[i]
    }

    pub fn image_element(&self, i: usize) -> Element {
        Element::from_canonical(&self.module, self.images[i].clone())
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.module.check(x.module())?;
        Ok(Element::from_canonical(&self.module, self.apply_terms(x.terms())))
    }

    pub(crate) fn apply_terms(&self, x: &Terms) -> Terms {
        apply_linear(self.module.ring(), &self.images, x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        self.module.check(&other.module)?;
        let images = other.images.par_iter().map(|img| self.apply_terms(img)).collect();
        Ok(GradedMap { module: self.module.clone(), images, filtered: self.filtered && other.filtered })
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap> {
        self.zip(other, sum)
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap> {
        self.zip(other, difference)
    }

    pub fn scale(&self, c: &Coeff) -> GradedMap {
        let ring = self.module.ring();
        let images = self.images.iter().map(|img| scaled(ring, c, img)).collect();
        GradedMap { module: self.module.clone(), images, filtered: self.filtered }
    }

    fn zip(&self, other: &GradedMap, op: impl Fn(&RingSpec, &Terms, &Terms) -> Terms) -> Result<GradedMap> {
        self.module.check(&other.module)?;
        let ring = self.module.ring();
        let images = self.images.iter().zip(&other.images).map(|(a, b)| op(ring, a, b)).collect();
        Ok(GradedMap { module: self.module.clone(), images, filtered: self.filtered && other.filtered })
    }

    /// `self^k`, with `self^0` the identity.
    pub fn pow(&self, k: i64) -> Result<GradedMap> {
        if k < 0 {
            return Err(Error::NegativePower(k));
        }
        let mut acc = GradedMap::identity(&self.module);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// All powers `self^0, ..., self^k`.
    pub fn powers(&self, k: usize) -> Vec<GradedMap> {
        let mut out = vec![GradedMap::identity(&self.module)];
        for _ in 0..k {
            let next = self.compose(out.last().unwrap()).expect("same module");
            out.push(next);
        }
        out
    }

    /// First basis index in `labels` where the two maps differ.
    pub fn first_difference(&self, other: &GradedMap, labels: impl IntoIterator<Item = usize>) -> Option<usize> {
        labels.into_iter().find(|&i| self.images[i] != other.images[i])
    }

    /// A spanning list of the kernel of this map restricted to degree `d`.
    pub fn kernel_basis(&self, d: usize) -> Result<Vec<Element>> {
        let range = self.module.basis().degree_range(d);
        let columns: Vec<Terms> = range.clone().map(|i| self.images[i].clone()).collect();
        let ker = linalg::kernel(self.module.ring(), &columns)?;
        Ok(ker
            .vectors
            .into_iter()
            .map(|v| Element::from_canonical(&self.module, v.into_iter().map(|(j, c)| (range.start + j, c)).collect()))
            .collect())
    }
}

/// A linear endomap of the tensor square, stored by the images of all label pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2Map {
    module: GradedModule,
    images: Vec<Terms2>,
}

impl Tensor2Map {
    pub fn from_fn(module: &GradedModule, f: impl Fn(usize, usize) -> Terms2 + Sync) -> Self {
        let n = module.dim();
        let images = (0..n * n).into_par_iter().map(|k| f(k / n, k % n)).collect();
        Tensor2Map { module: module.clone(), images }
    }

    pub fn identity(module: &GradedModule) -> Self {
        let one = module.ring().one();
        Self::from_fn(module, |i, j| Terms2::from([((i, j), one.clone())]))
    }

    /// `f ⊗ g`.
    pub fn tensor(f: &GradedMap, g: &GradedMap) -> Result<Self> {
        f.module.check(&g.module)?;
        let ring = f.module.ring();
        Ok(Self::from_fn(&f.module, |i, j| tensor_terms(ring, f.image(i), g.image(j))))
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn image(&self, i: usize, j: usize) -> &Terms2 {
        &self.images[i * self.module.dim() + j]
    }

    pub(crate) fn apply_terms(&self, t: &Terms2) -> Terms2 {
        let ring = self.module.ring();
        let n = self.module.dim();
        let mut out = Terms2::new();
        for (&(i, j), c) in t {
            add_scaled(ring, &mut out, c, &self.images[i * n + j]);
        }
        out
    }

    pub fn apply(&self, t: &Tensor2Element) -> Result<Tensor2Element> {
        self.module.check(t.module())?;
        Ok(Tensor2Element::from_canonical(&self.module, self.apply_terms(t.terms())))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Tensor2Map) -> Result<Tensor2Map> {
        self.module.check(&other.module)?;
        let images = other.images.par_iter().map(|img| self.apply_terms(img)).collect();
        Ok(Tensor2Map { module: self.module.clone(), images })
    }

    pub fn add(&self, other: &Tensor2Map) -> Result<Tensor2Map> {
        self.zip(other, sum)
    }

    pub fn sub(&self, other: &Tensor2Map) -> Result<Tensor2Map> {
        self.zip(other, difference)
    }

    pub fn scale(&self, c: &Coeff) -> Tensor2Map {
        let ring = self.module.ring();
        let images = self.images.iter().map(|img| scaled(ring, c, img)).collect();
        Tensor2Map { module: self.module.clone(), images }
    }

    fn zip(&self, other: &Tensor2Map, op: impl Fn(&RingSpec, &Terms2, &Terms2) -> Terms2) -> Result<Tensor2Map> {
        self.module.check(&other.module)?;
        let ring = self.module.ring();
        let images = self.images.iter().zip(&other.images).map(|(a, b)| op(ring, a, b)).collect();
        Ok(Tensor2Map { module: self.module.clone(), images })
    }

    pub fn pow(&self, k: i64) -> Result<Tensor2Map> {
        if k < 0 {
            return Err(Error::NegativePower(k));
        }
        let mut acc = Tensor2Map::identity(&self.module);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// First label pair where the two maps differ.
    pub fn first_difference(&self, other: &Tensor2Map) -> Option<(usize, usize)> {
        let n = self.module.dim();
        (0..self.images.len()).find(|&k| self.images[k] != other.images[k]).map(|k| (k / n, k % n))
    }
}

/// A linear map from the module into its tensor square (coproducts, reduced
/// coproducts), stored by basis images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductMap {
    module: GradedModule,
    images: Vec<Terms2>,
}

impl CoproductMap {
    pub fn from_fn(module: &GradedModule, f: impl Fn(usize) -> Terms2 + Sync) -> Self {
        let images = (0..module.dim()).into_par_iter().map(&f).collect();
        CoproductMap { module: module.clone(), images }
    }

    pub fn from_images(module: &GradedModule, images: Vec<Tensor2Element>) -> Result<Self> {
        if images.len() != module.dim() {
            return Err(Error::Invalid(format!(
                "map needs {} basis images, got {}",
                module.dim(),
                images.len()
            )));
        }
        let images = images
            .into_iter()
            .map(|e| {
                module.check(e.module())?;
                Ok(e.into_terms())
            })
            .collect::<Result<_>>()?;
        Ok(CoproductMap { module: module.clone(), images })
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn image(&self, i: usize) -> &Terms2 {
        &self.images[i]
    }

    pub fn image_element(&self, i: usize) -> Tensor2Element {
        Tensor2Element::from_canonical(&self.module, self.images[i].clone())
    }

    pub(crate) fn apply_terms(&self, x: &Terms) -> Terms2 {
        apply_linear(self.module.ring(), &self.images, x)
    }

    pub fn apply(&self, x: &Element) -> Result<Tensor2Element> {
        self.module.check(x.module())?;
        Ok(Tensor2Element::from_canonical(&self.module, self.apply_terms(x.terms())))
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &GradedMap) -> Result<CoproductMap> {
        self.module.check(&f.module)?;
        Ok(CoproductMap::from_fn(&self.module, |i| self.apply_terms(f.image(i))))
    }

    /// `(f ⊗ g) ∘ self`, without materializing `f ⊗ g`.
    pub fn pushed_through(&self, f: &GradedMap, g: &GradedMap) -> Result<CoproductMap> {
        self.module.check(&f.module)?;
        self.module.check(&g.module)?;
        let ring = self.module.ring();
        Ok(CoproductMap::from_fn(&self.module, |i| {
            let mut out = Terms2::new();
            for (&(a, b), c) in &self.images[i] {
                let t = tensor_terms(ring, f.image(a), g.image(b));
                add_scaled(ring, &mut out, c, &t);
            }
            out
        }))
    }

    /// `F ∘ self` for a materialized tensor-square map `F`.
    pub fn then(&self, map: &Tensor2Map) -> Result<CoproductMap> {
        self.module.check(&map.module)?;
        Ok(CoproductMap::from_fn(&self.module, |i| map.apply_terms(&self.images[i])))
    }

    pub fn first_difference(&self, other: &CoproductMap, labels: impl IntoIterator<Item = usize>) -> Option<usize> {
        labels.into_iter().find(|&i| self.images[i] != other.images[i])
    }

    /// A spanning list of the kernel, restricted to degree `d` or over the whole basis.
    pub fn kernel_basis(&self, d: Option<usize>) -> Result<Vec<Element>> {
        let range = match d {
            Some(d) => self.module.basis().degree_range(d),
            None => 0..self.module.dim(),
        };
        let columns: Vec<Terms2> = range.clone().map(|i| self.images[i].clone()).collect();
        let ker = linalg::kernel(self.module.ring(), &columns)?;
        Ok(ker
            .vectors
            .into_iter()
            .map(|v| Element::from_canonical(&self.module, v.into_iter().map(|(j, c)| (range.start + j, c)).collect()))
            .collect())
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
            vec!["c".into(), "d".into()],
        ])
        .unwrap();
        GradedModule::new(basis, ring.parse().unwrap())
    }

    fn swap_ab(m: &GradedModule) -> GradedMap {
        let one = m.ring().one();
        GradedMap::from_fn(m, |i| match i {
            1 => Terms::from([(2, one.clone())]),
            2 => Terms::from([(1, one.clone())]),
            _ => Terms::from([(i, one.clone())]),
        })
    }

    #[test]
    fn identity_zero_and_powers() {
        let m = module("Z");
        let x = Element::from_label_terms(&m, &[("a", 2), ("c", -1)]).unwrap();
        assert_eq!(GradedMap::identity(&m).apply(&x).unwrap(), x);
        assert!(GradedMap::zero(&m).apply(&x).unwrap().is_zero());
        let s = swap_ab(&m);
        assert_eq!(s.pow(1).unwrap(), s);
        assert_eq!(s.pow(0).unwrap(), GradedMap::identity(&m));
        assert_eq!(s.pow(2).unwrap(), GradedMap::identity(&m));
        assert!(matches!(s.pow(-1), Err(Error::NegativePower(-1))));
    }

    #[test]
    fn filtration_flag_is_checked() {
        let m = module("Z");
        let one = m.ring().one();
        let lowering = GradedMap::from_fn(&m, |i| if i >= 3 { Terms::from([(1, one.clone())]) } else { Terms::new() });
        assert!(lowering.clone().into_filtered().unwrap().is_filtered());
        let raising = GradedMap::from_fn(&m, |i| if i == 1 { Terms::from([(3, one.clone())]) } else { Terms::new() });
        assert!(raising.into_filtered().is_err());
    }

    #[test]
    fn kernels() {
        let m = module("Q");
        assert_eq!(GradedMap::zero(&m).kernel_basis(1).unwrap().len(), 2);
        assert!(GradedMap::identity(&m).kernel_basis(1).unwrap().is_empty());
        let diff = GradedMap::identity(&m).sub(&swap_ab(&m)).unwrap();
        let ker = diff.kernel_basis(1).unwrap();
        assert_eq!(ker.len(), 1);
        assert!(diff.apply(&ker[0]).unwrap().is_zero());
        assert!(matches!(GradedMap::zero(&module("Z")).kernel_basis(1), Err(Error::NotAField(_))));
    }

    #[test]
    fn tensor_maps_compose_factorwise() {
        let m = module("Z");
        let s = swap_ab(&m);
        let id = GradedMap::identity(&m);
        let g = id.sub(&s).unwrap();
        let lhs = Tensor2Map::tensor(&g, &s).unwrap().compose(&Tensor2Map::tensor(&id, &g).unwrap()).unwrap();
        let rhs = Tensor2Map::tensor(&g.compose(&id).unwrap(), &s.compose(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(Tensor2Map::tensor(&id, &id).unwrap(), Tensor2Map::identity(&m));
    }
}
