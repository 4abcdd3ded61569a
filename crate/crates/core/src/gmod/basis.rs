use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

use crate::coeff::RingSpec;
use crate::error::{Error, Result};

/// Finite named basis per degree `0..=max_degree`.
///
/// Labels are stored degree by degree, so every degree and every
/// filtration level `deg <= n` is a contiguous index range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    labels: Vec<String>,
    degrees: Vec<usize>,
    offsets: Vec<usize>,
    index: HashMap<String, usize>,
}

impl GradedBasis {
    /// `per_degree[d]` lists the labels of degree `d`.
    pub fn new(per_degree: Vec<Vec<String>>) -> Result<Self> {
        if per_degree.is_empty() {
            return Err(Error::Invalid("a graded basis needs at least degree 0".into()));
        }
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        let mut offsets = vec![0];
        let mut index = HashMap::new();
        for (d, level) in per_degree.into_iter().enumerate() {
            for label in level {
                if label.is_empty() {
                    return Err(Error::Invalid("empty basis label".into()));
                }
                if index.insert(label.clone(), labels.len()).is_some() {
                    return Err(Error::Invalid(format!("duplicate basis label `{label}`")));
                }
                labels.push(label);
                degrees.push(d);
            }
            offsets.push(labels.len());
        }
        Ok(GradedBasis { labels, degrees, offsets, index })
    }

    pub fn max_degree(&self) -> usize {
        self.offsets.len() - 2
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn lookup(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Indices of the labels of degree `d` (empty beyond the truncation).
    pub fn degree_range(&self, d: usize) -> Range<usize> {
        if d > self.max_degree() {
            return self.len()..self.len();
        }
        self.offsets[d]..self.offsets[d + 1]
    }

    /// Indices of the labels of degree `<= d`.
    pub fn up_to(&self, d: usize) -> Range<usize> {
        0..self.offsets[d.min(self.max_degree()) + 1]
    }

    pub fn rank(&self, d: usize) -> usize {
        self.degree_range(d).len()
    }
}

#[derive(Debug)]
struct ModuleInner {
    basis: GradedBasis,
    ring: RingSpec,
}

/// A graded free module: a basis together with its coefficient ring.
/// Cheap to clone; all elements and maps hold one.
#[derive(Clone, Debug)]
pub struct GradedModule(Arc<ModuleInner>);

impl GradedModule {
    pub fn new(basis: GradedBasis, ring: RingSpec) -> Self {
        GradedModule(Arc::new(ModuleInner { basis, ring }))
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.0.basis
    }

    pub fn ring(&self) -> &RingSpec {
        &self.0.ring
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn same(&self, other: &GradedModule) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.ring == other.0.ring && self.0.basis == other.0.basis)
    }

    pub(crate) fn check(&self, other: &GradedModule) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::ModuleMismatch)
        }
    }
}

impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for GradedModule {}
