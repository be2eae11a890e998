//! Based vector spaces: a dimension plus a distinguished, labelled basis.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite-dimensional vector space with a fixed, labelled basis.
///
/// The unit object `K` of the tensor category is *not* a `BasedSpace`; it is
/// represented throughout by an empty list of tensor factors.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct BasedSpace {
    dim: usize,
    labels: Vec<String>,
}

impl BasedSpace {
    pub fn new(labels: Vec<String>) -> Result<Arc<Self>> {
        if labels.is_empty() {
            return Err(Error::BadSpace("dimension must be at least 1".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::BadSpace(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(Arc::new(BasedSpace {
            dim: labels.len(),
            labels,
        }))
    }

    /// A space with basis `e1, ..., edim`.
    pub fn numbered(dim: usize) -> Result<Arc<Self>> {
        BasedSpace::new((1..=dim).map(|i| format!("e{i}")).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The space carrying the tensor product basis of `a` and `b`, with
    /// labels joined by `⊗`.
    pub fn tensor(a: &Arc<Self>, b: &Arc<Self>) -> Result<Arc<Self>> {
        let mut labels = Vec::with_capacity(a.dim * b.dim);
        for la in &a.labels {
            for lb in &b.labels {
                labels.push(format!("{la}⊗{lb}"));
            }
        }
        BasedSpace::new(labels)
    }
}

impl fmt::Display for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "space(dim {})", self.dim)
    }
}

/// Total dimension of a tensor-factor list (1 for the empty list, i.e. `K`).
pub fn total_dim(factors: &[Arc<BasedSpace>]) -> u64 {
    factors.iter().map(|s| s.dim() as u64).product()
}

/// Splits a row-major linear index into one index per tensor factor.
pub fn split_index(factors: &[Arc<BasedSpace>], mut idx: u64) -> Vec<usize> {
    let mut out = vec![0usize; factors.len()];
    for (k, s) in factors.iter().enumerate().rev() {
        let d = s.dim() as u64;
        out[k] = (idx % d) as usize;
        idx /= d;
    }
    out
}

/// Recombines per-factor indices into a row-major linear index.
pub fn join_index(factors: &[Arc<BasedSpace>], parts: &[usize]) -> u64 {
    debug_assert_eq!(factors.len(), parts.len());
    let mut idx = 0u64;
    for (s, &p) in factors.iter().zip(parts) {
        idx = idx * s.dim() as u64 + p as u64;
    }
    idx
}

/// Renders a basis multi-index as `label1⊗label2⊗...` (`1` for the empty list).
pub fn index_label(factors: &[Arc<BasedSpace>], idx: u64) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    let parts = split_index(factors, idx);
    factors
        .iter()
        .zip(&parts)
        .map(|(s, &p)| s.label(p).to_string())
        .collect::<Vec<_>>()
        .join("⊗")
}
