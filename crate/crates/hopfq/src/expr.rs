//! Composition trees over linear maps.
//!
//! Laws and constructions are written as trees of `∘` and `⊗` over named
//! slots. A tree is evaluated one domain basis vector at a time, so large
//! intermediate maps (e.g. tensor squares of functionals on a 48-dimensional
//! space) are never materialized.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::AlgebraicStructure;
use crate::error::{Error, Result};
use crate::linmap::{LinMap, SparseVec};
use crate::scalar::{Field, Scalar};
use crate::space::{total_dim, BasedSpace};

/// Which structure morphism a leaf refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StructOp {
    Mul,
    Unit,
    Comul,
    Counit,
    LDiv,
    RDiv,
    LAntipode,
    RAntipode,
}

impl StructOp {
    fn name(self) -> &'static str {
        match self {
            StructOp::Mul => "mul",
            StructOp::Unit => "unit",
            StructOp::Comul => "comul",
            StructOp::Counit => "counit",
            StructOp::LDiv => "ldiv",
            StructOp::RDiv => "rdiv",
            StructOp::LAntipode => "lantipode",
            StructOp::RAntipode => "rantipode",
        }
    }
}

/// A reference to a based space: a named slot or a literal.
#[derive(Clone, Debug)]
pub enum SpaceRef {
    Named(String),
    Lit(Arc<BasedSpace>),
}

/// An expression denoting a linear map.
#[derive(Clone, Debug)]
pub enum Expr {
    /// A literal map.
    Lit(Arc<LinMap>),
    /// A map bound by name (functionals, actions, candidate morphisms...).
    Slot(String),
    /// A structure morphism of a bound structure.
    Op(String, StructOp),
    /// Identity on a list of spaces (empty list = identity of `K`).
    Id(Vec<SpaceRef>),
    /// The symmetry `c_{X,Y}`.
    Swap(SpaceRef, SpaceRef),
    /// Basis permutation of tensor factors: output slot `k` carries input
    /// factor `perm[k]`. Generalizes `Swap` to block shuffles.
    Perm(Vec<SpaceRef>, Vec<usize>),
    /// Right-to-left composition: `Compose[f, g, h] = f ∘ g ∘ h`.
    Compose(Vec<Expr>),
    /// Tensor product in order.
    Tensor(Vec<Expr>),
}

/// Values a law or construction can reference.
#[derive(Clone, Default)]
pub struct Binding {
    pub structures: BTreeMap<String, Arc<AlgebraicStructure>>,
    pub maps: BTreeMap<String, Arc<LinMap>>,
    pub spaces: BTreeMap<String, Arc<BasedSpace>>,
}

impl Binding {
    pub fn new() -> Self {
        Binding::default()
    }

    pub fn with_structure(mut self, name: &str, s: &Arc<AlgebraicStructure>) -> Self {
        self.spaces.insert(name.to_string(), s.space().clone());
        self.structures.insert(name.to_string(), s.clone());
        self
    }

    pub fn with_map(mut self, name: &str, m: &LinMap) -> Self {
        self.maps.insert(name.to_string(), Arc::new(m.clone()));
        self
    }

    pub fn with_space(mut self, name: &str, s: &Arc<BasedSpace>) -> Self {
        self.spaces.insert(name.to_string(), s.clone());
        self
    }

    pub fn field(&self) -> Result<Field> {
        if let Some(s) = self.structures.values().next() {
            return Ok(s.field());
        }
        if let Some(m) = self.maps.values().next() {
            return Ok(m.field());
        }
        Err(Error::Unknown {
            kind: "field".into(),
            name: "empty binding".into(),
        })
    }

    fn space(&self, r: &SpaceRef) -> Result<Arc<BasedSpace>> {
        match r {
            SpaceRef::Lit(s) => Ok(s.clone()),
            SpaceRef::Named(n) => self.spaces.get(n).cloned().ok_or_else(|| Error::Unknown {
                kind: "space slot".into(),
                name: n.clone(),
            }),
        }
    }

    fn map_for(&self, e: &Expr) -> Result<Arc<LinMap>> {
        match e {
            Expr::Lit(m) => Ok(m.clone()),
            Expr::Slot(n) => self.maps.get(n).cloned().ok_or_else(|| Error::Unknown {
                kind: "map slot".into(),
                name: n.clone(),
            }),
            Expr::Op(n, op) => {
                let s = self.structures.get(n).ok_or_else(|| Error::Unknown {
                    kind: "structure slot".into(),
                    name: n.clone(),
                })?;
                s.op(*op).ok_or_else(|| Error::MissingMap {
                    name: n.clone(),
                    what: op.name().into(),
                })
            }
            _ => unreachable!("map_for is only called on leaves"),
        }
    }
}

/// Domain and codomain factor lists of an expression.
pub fn shape(e: &Expr, b: &Binding) -> Result<(Vec<Arc<BasedSpace>>, Vec<Arc<BasedSpace>>)> {
    match e {
        Expr::Lit(_) | Expr::Slot(_) | Expr::Op(..) => {
            let m = b.map_for(e)?;
            Ok((m.domain().to_vec(), m.codomain().to_vec()))
        }
        Expr::Id(rs) => {
            let spaces = rs.iter().map(|r| b.space(r)).collect::<Result<Vec<_>>>()?;
            Ok((spaces.clone(), spaces))
        }
        Expr::Swap(x, y) => {
            let (x, y) = (b.space(x)?, b.space(y)?);
            Ok((vec![x.clone(), y.clone()], vec![y, x]))
        }
        Expr::Perm(rs, perm) => {
            let spaces = rs.iter().map(|r| b.space(r)).collect::<Result<Vec<_>>>()?;
            if perm.len() != spaces.len() {
                return Err(Error::ShapeMismatch("permutation arity mismatch".into()));
            }
            let cod = perm.iter().map(|&k| spaces[k].clone()).collect();
            Ok((spaces, cod))
        }
        Expr::Compose(parts) => {
            if parts.is_empty() {
                return Err(Error::ShapeMismatch("empty composition".into()));
            }
            let mut cod = None;
            let mut dom = None;
            for (k, p) in parts.iter().enumerate() {
                let (d, c) = shape(p, b)?;
                if k == 0 {
                    cod = Some(c);
                } else if dom.as_ref() != Some(&c) {
                    return Err(Error::ShapeMismatch(format!(
                        "composition: factor {k} produces {} dims, next consumes {}",
                        total_dim(&c),
                        total_dim(dom.as_ref().unwrap())
                    )));
                }
                dom = Some(d);
            }
            Ok((dom.unwrap(), cod.unwrap()))
        }
        Expr::Tensor(parts) => {
            let mut dom = Vec::new();
            let mut cod = Vec::new();
            for p in parts {
                let (d, c) = shape(p, b)?;
                dom.extend(d);
                cod.extend(c);
            }
            Ok((dom, cod))
        }
    }
}

/// A shape-resolved, slot-resolved form of an expression, cheap to evaluate
/// on many basis vectors.
#[derive(Clone, Debug)]
enum Node {
    Map(Arc<LinMap>),
    Identity,
    /// Input factor dims and the output order over them.
    Perm { dims: Vec<u64>, perm: Vec<usize> },
    /// Right-to-left composition.
    Compose(Vec<Node>),
    Tensor { children: Vec<Node>, in_dims: Vec<u64>, out_dims: Vec<u64> },
}

/// A compiled expression: evaluate with [`CompiledExpr::eval_basis`].
#[derive(Clone, Debug)]
pub struct CompiledExpr {
    field: Field,
    node: Node,
    dom: Vec<Arc<BasedSpace>>,
    cod: Vec<Arc<BasedSpace>>,
}

impl CompiledExpr {
    pub fn compile(e: &Expr, b: &Binding) -> Result<Self> {
        let (dom, cod) = shape(e, b)?;
        Ok(CompiledExpr {
            field: b.field()?,
            node: compile_node(e, b)?,
            dom,
            cod,
        })
    }

    pub fn domain(&self) -> &[Arc<BasedSpace>] {
        &self.dom
    }

    pub fn codomain(&self) -> &[Arc<BasedSpace>] {
        &self.cod
    }

    pub fn dom_dim(&self) -> u64 {
        total_dim(&self.dom)
    }

    pub fn eval_basis(&self, idx: u64) -> SparseVec {
        let mut out = SparseVec::new();
        eval_node(&self.node, idx, &self.field.one(), &mut out);
        out
    }

    /// Materializes the compiled expression as a concrete map.
    pub fn to_map(&self) -> LinMap {
        let mut m = LinMap::zero(self.field, self.dom.clone(), self.cod.clone());
        for i in 0..m.dom_dim() {
            for (o, s) in self.eval_basis(i) {
                m.add_entry(i, o, s);
            }
        }
        m
    }
}

fn compile_node(e: &Expr, b: &Binding) -> Result<Node> {
    Ok(match e {
        Expr::Lit(_) | Expr::Slot(_) | Expr::Op(..) => Node::Map(b.map_for(e)?),
        Expr::Id(_) => Node::Identity,
        Expr::Swap(x, y) => {
            let (x, y) = (b.space(x)?, b.space(y)?);
            Node::Perm {
                dims: vec![x.dim() as u64, y.dim() as u64],
                perm: vec![1, 0],
            }
        }
        Expr::Perm(rs, perm) => {
            let dims = rs
                .iter()
                .map(|r| Ok(b.space(r)?.dim() as u64))
                .collect::<Result<Vec<_>>>()?;
            Node::Perm {
                dims,
                perm: perm.clone(),
            }
        }
        Expr::Compose(parts) => Node::Compose(
            parts
                .iter()
                .map(|p| compile_node(p, b))
                .collect::<Result<Vec<_>>>()?,
        ),
        Expr::Tensor(parts) => {
            let mut children = Vec::with_capacity(parts.len());
            let mut in_dims = Vec::with_capacity(parts.len());
            let mut out_dims = Vec::with_capacity(parts.len());
            for p in parts {
                let (d, c) = shape(p, b)?;
                in_dims.push(total_dim(&d));
                out_dims.push(total_dim(&c));
                children.push(compile_node(p, b)?);
            }
            Node::Tensor {
                children,
                in_dims,
                out_dims,
            }
        }
    })
}

fn accumulate_sv(v: &mut SparseVec, idx: u64, s: Scalar) {
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

/// Accumulates `coeff · node(e_idx)` into `out`.
fn eval_node(node: &Node, idx: u64, coeff: &Scalar, out: &mut SparseVec) {
    match node {
        Node::Map(m) => {
            if let Some(col) = m.column(idx) {
                for (o, s) in col {
                    accumulate_sv(out, *o, coeff * s);
                }
            }
        }
        Node::Identity => accumulate_sv(out, idx, coeff.clone()),
        Node::Perm { dims, perm } => {
            let mut parts = vec![0u64; dims.len()];
            let mut rem = idx;
            for (k, d) in dims.iter().enumerate().rev() {
                parts[k] = rem % d;
                rem /= d;
            }
            let mut o = 0u64;
            for &k in perm {
                o = o * dims[k] + parts[k];
            }
            accumulate_sv(out, o, coeff.clone());
        }
        Node::Compose(parts) => {
            let mut v = SparseVec::new();
            eval_node(parts.last().expect("nonempty composition"), idx, coeff, &mut v);
            for p in parts.iter().rev().skip(1) {
                let mut next = SparseVec::new();
                for (i, c) in &v {
                    eval_node(p, *i, c, &mut next);
                }
                v = next;
            }
            for (o, s) in v {
                accumulate_sv(out, o, s);
            }
        }
        Node::Tensor {
            children,
            in_dims,
            out_dims,
        } => {
            let mut rem = idx;
            let mut sub = vec![0u64; children.len()];
            for (k, d) in in_dims.iter().enumerate().rev() {
                sub[k] = rem % d;
                rem /= d;
            }
            // Outer product of the children's outputs, left to right.
            let mut acc: Vec<(u64, Scalar)> = vec![(0, coeff.clone())];
            for (k, child) in children.iter().enumerate() {
                let mut cv = SparseVec::new();
                let one = match acc.first() {
                    Some((_, s)) => s.field().one(),
                    None => return,
                };
                eval_node(child, sub[k], &one, &mut cv);
                if cv.is_empty() {
                    return;
                }
                let mut next = Vec::with_capacity(acc.len() * cv.len());
                for (i0, s0) in &acc {
                    for (i1, s1) in &cv {
                        next.push((i0 * out_dims[k] + i1, s0 * s1));
                    }
                }
                acc = next;
            }
            for (o, s) in acc {
                accumulate_sv(out, o, s);
            }
        }
    }
}

/// Applies an expression to a single domain basis vector.
pub fn eval_basis(e: &Expr, b: &Binding, idx: u64) -> Result<SparseVec> {
    match e {
        Expr::Lit(_) | Expr::Slot(_) | Expr::Op(..) => Ok(b.map_for(e)?.apply_basis(idx)),
        Expr::Id(_) => {
            let mut v = SparseVec::new();
            v.insert(idx, b.field()?.one());
            Ok(v)
        }
        Expr::Swap(x, y) => {
            let (x, y) = (b.space(x)?, b.space(y)?);
            let (dx, dy) = (x.dim() as u64, y.dim() as u64);
            let (a, c) = (idx / dy, idx % dy);
            let mut v = SparseVec::new();
            v.insert(c * dx + a, b.field()?.one());
            Ok(v)
        }
        Expr::Perm(rs, perm) => {
            let spaces = rs.iter().map(|r| b.space(r)).collect::<Result<Vec<_>>>()?;
            let parts = crate::space::split_index(&spaces, idx);
            let mut out = 0u64;
            for &k in perm {
                out = out * spaces[k].dim() as u64 + parts[k] as u64;
            }
            let mut v = SparseVec::new();
            v.insert(out, b.field()?.one());
            Ok(v)
        }
        Expr::Compose(parts) => {
            let mut v = eval_basis(parts.last().unwrap(), b, idx)?;
            for p in parts.iter().rev().skip(1) {
                v = apply_expr(p, b, &v)?;
            }
            Ok(v)
        }
        Expr::Tensor(parts) => {
            let shapes = parts
                .iter()
                .map(|p| shape(p, b))
                .collect::<Result<Vec<_>>>()?;
            // Split the incoming index over the children's domains.
            let mut rem = idx;
            let mut sub = vec![0u64; parts.len()];
            for (k, (d, _)) in shapes.iter().enumerate().rev() {
                let dd = total_dim(d);
                sub[k] = rem % dd;
                rem /= dd;
            }
            let mut acc = SparseVec::new();
            acc.insert(0, b.field()?.one());
            for (k, p) in parts.iter().enumerate() {
                let child = eval_basis(p, b, sub[k])?;
                if child.is_empty() {
                    return Ok(SparseVec::new());
                }
                let cd = total_dim(&shapes[k].1);
                let mut next = SparseVec::new();
                for (i0, s0) in &acc {
                    for (i1, s1) in &child {
                        next.insert(i0 * cd + i1, s0 * s1);
                    }
                }
                acc = next;
            }
            Ok(acc)
        }
    }
}

fn apply_expr(e: &Expr, b: &Binding, v: &SparseVec) -> Result<SparseVec> {
    // Fast path: leaves apply their stored columns directly.
    match e {
        Expr::Lit(_) | Expr::Slot(_) | Expr::Op(..) => Ok(b.map_for(e)?.apply(v)),
        _ => {
            let mut out = SparseVec::new();
            for (i, c) in v {
                for (o, s) in eval_basis(e, b, *i)? {
                    let t = c * &s;
                    if t.is_zero() {
                        continue;
                    }
                    let cur = match out.remove(&o) {
                        Some(old) => &old + &t,
                        None => t,
                    };
                    if !cur.is_zero() {
                        out.insert(o, cur);
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Evaluates an expression on every basis vector, producing a concrete map.
pub fn materialize(e: &Expr, b: &Binding) -> Result<LinMap> {
    Ok(CompiledExpr::compile(e, b)?.to_map())
}

// ---- builder helpers -------------------------------------------------------

pub fn lit(m: &LinMap) -> Expr {
    Expr::Lit(Arc::new(m.clone()))
}

pub fn slot(n: &str) -> Expr {
    Expr::Slot(n.into())
}

pub fn mul(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::Mul)
}

pub fn unit(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::Unit)
}

pub fn comul(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::Comul)
}

pub fn counit(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::Counit)
}

pub fn ldiv(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::LDiv)
}

pub fn rdiv(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::RDiv)
}

pub fn lanti(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::LAntipode)
}

pub fn ranti(n: &str) -> Expr {
    Expr::Op(n.into(), StructOp::RAntipode)
}

pub fn id(n: &str) -> Expr {
    Expr::Id(vec![SpaceRef::Named(n.into())])
}

pub fn id_k() -> Expr {
    Expr::Id(vec![])
}

pub fn sw(x: &str, y: &str) -> Expr {
    Expr::Swap(SpaceRef::Named(x.into()), SpaceRef::Named(y.into()))
}

pub fn comp<const N: usize>(parts: [Expr; N]) -> Expr {
    Expr::Compose(parts.to_vec())
}

pub fn tens<const N: usize>(parts: [Expr; N]) -> Expr {
    Expr::Tensor(parts.to_vec())
}

/// Convolution `f ∗ g` from a comonoid slot into a magma expression:
/// `mul ∘ (f ⊗ g) ∘ comul`. Pass [`id_k`] as `target_mul` for functionals.
pub fn convolve(target_mul: Expr, f: Expr, g: Expr, source_comul: Expr) -> Expr {
    comp([target_mul, tens([f, g]), source_comul])
}

/// Permutation of named factors: output slot `k` carries input factor `p[k]`.
pub fn perm(factors: &[&str], p: &[usize]) -> Expr {
    Expr::Perm(
        factors.iter().map(|n| SpaceRef::Named((*n).into())).collect(),
        p.to_vec(),
    )
}

/// Coproduct of the `n`-fold tensor power of one structure slot:
/// `δ_{H^n} = interleave ∘ (δ ⊗ ... ⊗ δ)`.
pub fn comul_pow(h: &str, n: usize) -> Expr {
    let factors = vec![h; 2 * n];
    let mut p = Vec::with_capacity(2 * n);
    for k in 0..n {
        p.push(2 * k);
    }
    for k in 0..n {
        p.push(2 * k + 1);
    }
    comp([perm(&factors, &p), Expr::Tensor(vec![comul(h); n])])
}

/// Product of the `n`-fold tensor power of one structure slot.
pub fn mul_pow(h: &str, n: usize) -> Expr {
    let factors = vec![h; 2 * n];
    let mut p = Vec::with_capacity(2 * n);
    for k in 0..n {
        p.push(k);
        p.push(n + k);
    }
    comp([Expr::Tensor(vec![mul(h); n]), perm(&factors, &p)])
}

/// `δ_{X⊗Y} = (X ⊗ c_{X,Y} ⊗ Y) ∘ (δ_X ⊗ δ_Y)` for structure slots `x`, `y`.
pub fn comul_pair(x: &str, y: &str) -> Expr {
    comp([
        tens([id(x), sw(x, y), id(y)]),
        tens([comul(x), comul(y)]),
    ])
}

/// `μ_{X⊗Y} = (μ_X ⊗ μ_Y) ∘ (X ⊗ c_{Y,X} ⊗ Y)`.
pub fn mul_pair(x: &str, y: &str) -> Expr {
    comp([
        tens([mul(x), mul(y)]),
        tens([id(x), sw(y, x), id(y)]),
    ])
}

/// Counit of a tensor pair.
pub fn counit_pair(x: &str, y: &str) -> Expr {
    tens([counit(x), counit(y)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Scalar};
    use crate::space::BasedSpace;

    #[test]
    fn compiled_evaluator_matches_the_interpreted_one() {
        let f = Field::Rational;
        let x = BasedSpace::numbered(2).unwrap();
        let y = BasedSpace::numbered(3).unwrap();
        let mut m = LinMap::zero(f, vec![x.clone()], vec![y.clone()]);
        m.add_entry(0, 1, f.one());
        m.add_entry(0, 2, f.from_i64(-2));
        m.add_entry(1, 0, f.from_i64(3));
        let b = Binding::new()
            .with_map("m", &m)
            .with_space("X", &x)
            .with_space("Y", &y);
        let e = comp([
            tens([slot("m"), id("Y")]),
            Expr::Perm(
                vec![SpaceRef::Named("Y".into()), SpaceRef::Named("X".into())],
                vec![1, 0],
            ),
            tens([slot("m"), id("X")]),
            comp([sw("X", "X"), tens([id("X"), id("X")])]),
        ]);
        let compiled = CompiledExpr::compile(&e, &b).unwrap();
        for idx in 0..compiled.dom_dim() {
            assert_eq!(compiled.eval_basis(idx), eval_basis(&e, &b, idx).unwrap());
        }
    }

    #[test]
    fn materialize_matches_direct_composition() {
        let f = Field::Rational;
        let a = BasedSpace::numbered(2).unwrap();
        let mut m = LinMap::zero(f, vec![a.clone()], vec![a.clone()]);
        m.add_entry(0, 1, f.one());
        m.add_entry(1, 0, f.from_i64(3));
        let b = Binding::new().with_map("m", &m).with_space("X", &a);
        let e = comp([slot("m"), slot("m")]);
        let got = materialize(&e, &b).unwrap();
        assert_eq!(got, m.compose(&m).unwrap());

        let t = tens([slot("m"), id("X")]);
        let got = materialize(&t, &b).unwrap();
        assert_eq!(got, m.tensor(&LinMap::identity(f, &[a])));
    }
}
