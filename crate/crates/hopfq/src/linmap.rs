//! Sparse exact linear maps between tensor powers of based spaces.
//!
//! A [`LinMap`] is stored column-wise: for every domain basis index we keep
//! the (sorted, zero-free) output vector. Canonical form makes structural
//! equality coincide with mathematical equality, so every identity in the
//! library is checked with tolerance zero.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::space::{join_index, split_index, total_dim, BasedSpace};

/// Sparse vector over the basis of a tensor power: output index -> coefficient.
pub type SparseVec = BTreeMap<u64, Scalar>;

/// A linear map between tensor powers of based spaces.
///
/// The empty factor list stands for the unit object `K`, whose single basis
/// index is `0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap {
    field: Field,
    domain: Vec<Arc<BasedSpace>>,
    codomain: Vec<Arc<BasedSpace>>,
    cols: BTreeMap<u64, SparseVec>,
}

impl LinMap {
    pub fn zero(field: Field, domain: Vec<Arc<BasedSpace>>, codomain: Vec<Arc<BasedSpace>>) -> Self {
        LinMap {
            field,
            domain,
            codomain,
            cols: BTreeMap::new(),
        }
    }

    pub fn identity(field: Field, factors: &[Arc<BasedSpace>]) -> Self {
        let mut m = LinMap::zero(field, factors.to_vec(), factors.to_vec());
        for i in 0..total_dim(factors) {
            m.add_entry(i, i, field.one());
        }
        m
    }

    /// The symmetry `c_{X,Y}: X⊗Y -> Y⊗X` on basis vectors.
    pub fn swap(field: Field, x: &Arc<BasedSpace>, y: &Arc<BasedSpace>) -> Self {
        let mut m = LinMap::zero(field, vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]);
        let (dx, dy) = (x.dim() as u64, y.dim() as u64);
        for a in 0..dx {
            for b in 0..dy {
                m.add_entry(a * dy + b, b * dx + a, field.one());
            }
        }
        m
    }

    /// The `1x1` map `K -> K` with the given entry.
    pub fn scalar(field: Field, s: Scalar) -> Self {
        let mut m = LinMap::zero(field, vec![], vec![]);
        m.add_entry(0, 0, s);
        m
    }

    /// Builds a map from its action on domain basis multi-indices.
    pub fn from_fn(
        field: Field,
        domain: Vec<Arc<BasedSpace>>,
        codomain: Vec<Arc<BasedSpace>>,
        f: impl Fn(&[usize]) -> Vec<(Vec<usize>, Scalar)>,
    ) -> Self {
        let mut m = LinMap::zero(field, domain, codomain);
        for i in 0..m.dom_dim() {
            let parts = split_index(&m.domain, i);
            for (out_parts, s) in f(&parts) {
                let o = join_index(&m.codomain, &out_parts);
                m.add_entry(i, o, s);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> &[Arc<BasedSpace>] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Arc<BasedSpace>] {
        &self.codomain
    }

    pub fn dom_dim(&self) -> u64 {
        total_dim(&self.domain)
    }

    pub fn cod_dim(&self) -> u64 {
        total_dim(&self.codomain)
    }

    /// Accumulates `s` into entry `(input, output)`, dropping exact zeros.
    pub fn add_entry(&mut self, input: u64, output: u64, s: Scalar) {
        debug_assert!(input < self.dom_dim() && output < self.cod_dim());
        if s.is_zero() {
            return;
        }
        let col = self.cols.entry(input).or_default();
        let cur = match col.remove(&output) {
            Some(old) => &old + &s,
            None => s,
        };
        if !cur.is_zero() {
            col.insert(output, cur);
        }
        if col.is_empty() {
            self.cols.remove(&input);
        }
    }

    pub fn entry(&self, input: u64, output: u64) -> Option<&Scalar> {
        self.cols.get(&input).and_then(|c| c.get(&output))
    }

    pub fn column(&self, input: u64) -> Option<&SparseVec> {
        self.cols.get(&input)
    }

    /// Iterates entries in canonical order (input-major, then output).
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, &Scalar)> {
        self.cols
            .iter()
            .flat_map(|(i, col)| col.iter().map(move |(o, s)| (*i, *o, s)))
    }

    pub fn num_entries(&self) -> usize {
        self.cols.values().map(|c| c.len()).sum()
    }

    pub fn is_zero_map(&self) -> bool {
        self.cols.is_empty()
    }

    /// Column of the image of a basis vector.
    pub fn apply_basis(&self, input: u64) -> SparseVec {
        self.cols.get(&input).cloned().unwrap_or_default()
    }

    /// Applies the map to a sparse vector over the domain basis.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v {
            if let Some(col) = self.cols.get(i) {
                for (o, s) in col {
                    accumulate(&mut out, *o, c * s);
                }
            }
        }
        out
    }

    /// Composition `self ∘ other` (first `other`, then `self`).
    pub fn compose(&self, other: &LinMap) -> Result<LinMap> {
        if self.domain != other.codomain {
            return Err(Error::ShapeMismatch(format!(
                "compose: inner shapes differ ({} vs {} factors, dims {} vs {})",
                self.domain.len(),
                other.codomain.len(),
                self.dom_dim(),
                other.cod_dim()
            )));
        }
        let mut r = LinMap::zero(self.field, other.domain.clone(), self.codomain.clone());
        for (i, col) in &other.cols {
            for (m, a) in col {
                if let Some(gcol) = self.cols.get(m) {
                    for (o, b) in gcol {
                        r.add_entry(*i, *o, a * b);
                    }
                }
            }
        }
        Ok(r)
    }

    /// Kronecker product, concatenating factor lists.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let mut domain = self.domain.clone();
        domain.extend(other.domain.iter().cloned());
        let mut codomain = self.codomain.clone();
        codomain.extend(other.codomain.iter().cloned());
        let (od, oc) = (other.dom_dim(), other.cod_dim());
        let mut r = LinMap::zero(self.field, domain, codomain);
        for (i1, o1, s1) in self.entries() {
            for (i2, o2, s2) in other.entries() {
                r.add_entry(i1 * od + i2, o1 * oc + o2, s1 * s2);
            }
        }
        r
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        let mut r = LinMap::zero(self.field, self.domain.clone(), self.codomain.clone());
        for (i, o, v) in self.entries() {
            r.add_entry(i, o, v * s);
        }
        r
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ShapeMismatch("add: shapes differ".into()));
        }
        let mut r = self.clone();
        for (i, o, v) in other.entries() {
            r.add_entry(i, o, v.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.add(&other.scale(&-&self.field.one()))
    }

    /// Reinterprets the factor lists without touching entries.
    ///
    /// Valid whenever both total dimensions are unchanged and the basis order
    /// in row-major flattening is the same (e.g. grouping `A⊗H` into the
    /// product space, or the other way round).
    pub fn refactor(
        &self,
        domain: Vec<Arc<BasedSpace>>,
        codomain: Vec<Arc<BasedSpace>>,
    ) -> Result<LinMap> {
        if total_dim(&domain) != self.dom_dim() || total_dim(&codomain) != self.cod_dim() {
            return Err(Error::ShapeMismatch("refactor: total dimensions differ".into()));
        }
        Ok(LinMap {
            field: self.field,
            domain,
            codomain,
            cols: self.cols.clone(),
        })
    }

    /// Exact two-sided inverse of a square map.
    pub fn invert(&self) -> Result<LinMap> {
        let n = self.dom_dim();
        if n != self.cod_dim() {
            return Err(Error::ShapeMismatch("invert: map is not square".into()));
        }
        let id = LinMap::identity(self.field, &self.codomain);
        match solve_right(self, &id) {
            Ok(x) => x.refactor(self.codomain.clone(), self.domain.clone()),
            Err(Error::NoSolution) | Err(Error::NotInvertible { .. }) => {
                let rank = rank(self);
                Err(Error::NotInvertible {
                    rank,
                    dim: n as usize,
                })
            }
            Err(e) => Err(e),
        }
    }
}

fn accumulate(v: &mut SparseVec, idx: u64, s: Scalar) {
    if s.is_zero() {
        return;
    }
    let cur = match v.remove(&idx) {
        Some(old) => &old + &s,
        None => s,
    };
    if !cur.is_zero() {
        v.insert(idx, cur);
    }
}

/// Sparse Gauss-Jordan state: rows of `[A | aug]` with `ncols` main columns.
struct Elimination {
    rows: Vec<BTreeMap<u64, Scalar>>,
    /// (row, main column) of each pivot, in elimination order.
    pivots: Vec<(usize, u64)>,
}

impl Elimination {
    /// Row-reduces with smallest-index pivoting: columns are visited in
    /// ascending order, and the pivot row is the first untouched row with a
    /// nonzero entry in the column. Fully reduced (Gauss-Jordan) on exit.
    fn run(mut rows: Vec<BTreeMap<u64, Scalar>>, ncols: u64) -> Self {
        let m = rows.len();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..ncols {
            let Some(r) = (next..m).find(|&r| rows[r].get(&col).is_some()) else {
                continue;
            };
            rows.swap(next, r);
            let inv = rows[next]
                .get(&col)
                .expect("pivot present")
                .inv()
                .expect("pivot nonzero");
            let scaled: BTreeMap<u64, Scalar> = rows[next]
                .iter()
                .map(|(c, s)| (*c, s * &inv))
                .collect();
            rows[next] = scaled;
            for r2 in 0..m {
                if r2 == next {
                    continue;
                }
                let Some(f) = rows[r2].get(&col).cloned() else {
                    continue;
                };
                let pivot_row = rows[next].clone();
                let row = &mut rows[r2];
                for (c, s) in pivot_row {
                    let delta = -&(&f * &s);
                    let cur = match row.remove(&c) {
                        Some(old) => &old + &delta,
                        None => delta,
                    };
                    if !cur.is_zero() {
                        row.insert(c, cur);
                    }
                }
            }
            pivots.push((next, col));
            next += 1;
            if next == m {
                break;
            }
        }
        Elimination { rows, pivots }
    }
}

fn matrix_rows(a: &LinMap) -> Vec<BTreeMap<u64, Scalar>> {
    let mut rows = vec![BTreeMap::new(); a.cod_dim() as usize];
    for (i, o, s) in a.entries() {
        rows[o as usize].insert(i, s.clone());
    }
    rows
}

/// Rank of the underlying matrix.
pub fn rank(a: &LinMap) -> usize {
    Elimination::run(matrix_rows(a), a.dom_dim()).pivots.len()
}

/// Solves `a ∘ x = b` exactly, or reports that the system is inconsistent.
///
/// When the system is under-determined the free coordinates of `x` are set to
/// zero, which together with smallest-index pivoting makes the result
/// deterministic.
pub fn solve_right(a: &LinMap, b: &LinMap) -> Result<LinMap> {
    if a.codomain() != b.codomain() {
        return Err(Error::ShapeMismatch(
            "solve: codomains of the system and the right-hand side differ".into(),
        ));
    }
    let n = a.dom_dim();
    let _aug_cols = b.dom_dim();
    let mut rows = matrix_rows(a);
    for (i, o, s) in b.entries() {
        rows[o as usize].insert(n + i, s.clone());
    }
    let elim = Elimination::run(rows, n);
    let rank = elim.pivots.len();
    // Rows below the rank are zero in every main column after full
    // reduction, so a surviving augmented entry there is an inconsistency.
    for row in elim.rows.iter().skip(rank) {
        if row.keys().any(|c| *c >= n) {
            return Err(Error::NoSolution);
        }
    }
    let mut x = LinMap::zero(a.field(), b.domain().to_vec(), a.domain().to_vec());
    for (r, col) in &elim.pivots {
        for (c, s) in &elim.rows[*r] {
            if *c >= n {
                x.add_entry(*c - n, *col, s.clone());
            }
        }
    }
    // Substitute back; rejects inconsistent systems that slipped through.
    let check = a.compose(&x)?;
    if check != *b {
        return Err(Error::NoSolution);
    }
    Ok(x)
}

/// Splits an idempotent `q = i ∘ p` with `p ∘ i = id` through its image.
///
/// The image basis consists of the pivot columns of `q` found by
/// smallest-index Gaussian elimination, so the factorization is deterministic.
pub fn split_idempotent(q: &LinMap) -> Result<(LinMap, LinMap, Arc<BasedSpace>)> {
    if q.domain() != q.codomain() {
        return Err(Error::ShapeMismatch("split: map is not an endomorphism".into()));
    }
    if q.compose(q)? != *q {
        return Err(Error::NotIdempotent);
    }
    let elim = Elimination::run(matrix_rows(q), q.dom_dim());
    let pivot_cols: Vec<u64> = elim.pivots.iter().map(|(_, c)| *c).collect();
    if pivot_cols.is_empty() {
        return Err(Error::BadSpace("idempotent has rank 0; the image is not an object".into()));
    }
    let labels: Vec<String> = pivot_cols
        .iter()
        .map(|c| crate::space::index_label(q.domain(), *c))
        .collect();
    let z = BasedSpace::new(labels)?;
    let mut i = LinMap::zero(q.field(), vec![z.clone()], q.codomain().to_vec());
    for (k, c) in pivot_cols.iter().enumerate() {
        for (o, s) in q.apply_basis(*c) {
            i.add_entry(k as u64, o, s);
        }
    }
    let p = solve_right(&i, q)?;
    let pi = p.compose(&i)?;
    if pi != LinMap::identity(q.field(), &[z.clone()]) {
        return Err(Error::NotIdempotent);
    }
    Ok((p, i, z))
}
