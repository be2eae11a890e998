//! Algebraic structures given by structure constants, and the convolution
//! algebra of maps between them.
//!
//! An [`AlgebraicStructure`] bundles a based space with a unital-magma and a
//! comonoid structure, plus optional divisions and antipodes. Divisions and
//! antipodes are always derived or re-verified, never trusted from input.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::StructOp;
use crate::linmap::{solve_right, LinMap};
use crate::scalar::Field;
use crate::space::{index_label, BasedSpace};

/// The verified class of a structure. A class is only ever assigned after
/// the corresponding law suite has passed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum StructureClass {
    Bimonoid,
    LeftHqg,
    RightHqg,
    Hqg,
    HopfAlgebra,
}

impl StructureClass {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureClass::Bimonoid => "bimonoid",
            StructureClass::LeftHqg => "left-hqg",
            StructureClass::RightHqg => "right-hqg",
            StructureClass::Hqg => "hqg",
            StructureClass::HopfAlgebra => "hopf-algebra",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "bimonoid" => StructureClass::Bimonoid,
            "left-hqg" => StructureClass::LeftHqg,
            "right-hqg" => StructureClass::RightHqg,
            "hqg" => StructureClass::Hqg,
            "hopf-algebra" => StructureClass::HopfAlgebra,
            _ => return None,
        })
    }

    /// True when this class implies the presence of a (two-sided) antipode.
    pub fn has_antipode(self) -> bool {
        matches!(self, StructureClass::Hqg | StructureClass::HopfAlgebra)
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A based space with product, unit, coproduct, counit and optional
/// divisions/antipodes, all exact sparse maps.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraicStructure {
    name: String,
    field: Field,
    space: Arc<BasedSpace>,
    mul: Arc<LinMap>,
    unit: Arc<LinMap>,
    comul: Arc<LinMap>,
    counit: Arc<LinMap>,
    ldiv: Option<Arc<LinMap>>,
    rdiv: Option<Arc<LinMap>>,
    lantipode: Option<Arc<LinMap>>,
    rantipode: Option<Arc<LinMap>>,
    class: Option<StructureClass>,
}

impl AlgebraicStructure {
    pub fn new(
        name: &str,
        space: Arc<BasedSpace>,
        mul: LinMap,
        unit: LinMap,
        comul: LinMap,
        counit: LinMap,
    ) -> Result<Self> {
        let field = mul.field();
        let want = |m: &LinMap, dom: usize, cod: usize, what: &str| -> Result<()> {
            if m.domain().len() != dom
                || m.codomain().len() != cod
                || m.domain().iter().any(|s| s != &space)
                || m.codomain().iter().any(|s| s != &space)
                || m.field() != field
            {
                return Err(Error::ShapeMismatch(format!(
                    "{what} of {name} has the wrong shape"
                )));
            }
            Ok(())
        };
        want(&mul, 2, 1, "mul")?;
        want(&unit, 0, 1, "unit")?;
        want(&comul, 1, 2, "comul")?;
        want(&counit, 1, 0, "counit")?;
        Ok(AlgebraicStructure {
            name: name.to_string(),
            field,
            space,
            mul: Arc::new(mul),
            unit: Arc::new(unit),
            comul: Arc::new(comul),
            counit: Arc::new(counit),
            ldiv: None,
            rdiv: None,
            lantipode: None,
            rantipode: None,
            class: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mul(&self) -> &LinMap {
        &self.mul
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn comul(&self) -> &LinMap {
        &self.comul
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn ldiv(&self) -> Option<&LinMap> {
        self.ldiv.as_deref()
    }

    pub fn rdiv(&self) -> Option<&LinMap> {
        self.rdiv.as_deref()
    }

    pub fn lantipode(&self) -> Option<&LinMap> {
        self.lantipode.as_deref()
    }

    pub fn rantipode(&self) -> Option<&LinMap> {
        self.rantipode.as_deref()
    }

    /// The two-sided antipode, when one is known.
    pub fn antipode(&self) -> Option<&LinMap> {
        match (&self.lantipode, &self.rantipode) {
            (Some(l), Some(r)) if l == r => Some(l),
            (Some(l), None) => Some(l),
            (None, Some(r)) => Some(r),
            _ => None,
        }
    }

    pub fn class(&self) -> Option<StructureClass> {
        self.class
    }

    pub fn op(&self, op: StructOp) -> Option<Arc<LinMap>> {
        match op {
            StructOp::Mul => Some(self.mul.clone()),
            StructOp::Unit => Some(self.unit.clone()),
            StructOp::Comul => Some(self.comul.clone()),
            StructOp::Counit => Some(self.counit.clone()),
            StructOp::LDiv => self.ldiv.clone(),
            StructOp::RDiv => self.rdiv.clone(),
            StructOp::LAntipode => self.lantipode.clone(),
            StructOp::RAntipode => self.rantipode.clone(),
        }
    }

    pub fn with_ldiv(mut self, l: LinMap) -> Self {
        self.ldiv = Some(Arc::new(l));
        self
    }

    pub fn with_rdiv(mut self, r: LinMap) -> Self {
        self.rdiv = Some(Arc::new(r));
        self
    }

    pub fn with_lantipode(mut self, l: LinMap) -> Self {
        self.lantipode = Some(Arc::new(l));
        self
    }

    pub fn with_rantipode(mut self, r: LinMap) -> Self {
        self.rantipode = Some(Arc::new(r));
        self
    }

    pub fn with_antipode(self, s: LinMap) -> Self {
        self.with_lantipode(s.clone()).with_rantipode(s)
    }

    pub(crate) fn with_class(mut self, class: StructureClass) -> Self {
        self.class = Some(class);
        self
    }

    /// Identity map on the carrier space.
    pub fn identity(&self) -> LinMap {
        LinMap::identity(self.field, &[self.space.clone()])
    }

    /// Fills in missing divisions from antipodes, `l = μ∘(λ⊗H)` and
    /// `r = μ∘(H⊗ϱ)`. This is how an antipode canonically provides divisions.
    pub fn with_derived_divisions(mut self) -> Result<Self> {
        let idh = self.identity();
        if self.ldiv.is_none() {
            if let Some(lam) = &self.lantipode {
                let l = self.mul.compose(&lam.tensor(&idh))?;
                self.ldiv = Some(Arc::new(l));
            }
        }
        if self.rdiv.is_none() {
            if let Some(rho) = &self.rantipode {
                let r = self.mul.compose(&idh.tensor(rho))?;
                self.rdiv = Some(Arc::new(r));
            }
        }
        Ok(self)
    }

    /// The convolution unit `η∘ε : H -> H`.
    pub fn conv_unit(&self) -> LinMap {
        self.unit.compose(&self.counit).expect("shapes fixed")
    }
}

/// A candidate morphism between two structures; its laws are checked, never
/// assumed.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub source: Arc<AlgebraicStructure>,
    pub target: Arc<AlgebraicStructure>,
    pub map: LinMap,
}

impl Morphism {
    pub fn new(
        source: &Arc<AlgebraicStructure>,
        target: &Arc<AlgebraicStructure>,
        map: LinMap,
    ) -> Result<Self> {
        if map.domain() != [source.space().clone()] || map.codomain() != [target.space().clone()] {
            return Err(Error::ShapeMismatch(format!(
                "morphism {} -> {} has wrong shape",
                source.name(),
                target.name()
            )));
        }
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }
}

/// Convolution `f ∗ g = mul ∘ (f ⊗ g) ∘ comul` for concrete maps.
///
/// `mul` must be the product of the target (pass `LinMap::identity(field, &[])`
/// when the target is `K`) and `comul` the coproduct of the source.
pub fn convolution_maps(f: &LinMap, g: &LinMap, comul: &LinMap, mul: &LinMap) -> Result<LinMap> {
    mul.compose(&f.tensor(g))?.compose(comul)
}

/// Convolution of two maps `B -> A` between structures.
pub fn convolution(
    f: &LinMap,
    g: &LinMap,
    source: &AlgebraicStructure,
    target: &AlgebraicStructure,
) -> Result<LinMap> {
    convolution_maps(f, g, source.comul(), target.mul())
}

/// Convolution of functionals out of a comonoid (`μ_K` is implicit).
pub fn convolve_functionals(f: &LinMap, g: &LinMap, comul: &LinMap) -> Result<LinMap> {
    let mul_k = LinMap::identity(f.field(), &[]);
    convolution_maps(f, g, comul, &mul_k)
}

/// Solves `f ∗ x = unit∘counit` in the convolution algebra and re-checks the
/// other side.
///
/// Because the target may be non-associative, two-sidedness of the inverse is
/// a theorem to verify, not an axiom: a solvable left system with a failing
/// right check reports [`Error::OneSidedOnly`].
pub fn convolution_inverse_maps(
    f: &LinMap,
    comul: &LinMap,
    counit: &LinMap,
    mul: &LinMap,
    unit: &LinMap,
) -> Result<LinMap> {
    let field = f.field();
    let dim_b = f.dom_dim();
    let dim_a = f.cod_dim();
    let n = dim_b * dim_a;
    let e = unit.compose(counit)?;

    // Matrix of x -> f ∗ x over the coordinates of Hom(B, A).
    let hom = BasedSpace::new(
        (0..n)
            .map(|k| format!("x{}.{}", k / dim_a, k % dim_a))
            .collect(),
    )?;
    let mut op = LinMap::zero(field, vec![hom.clone()], vec![hom.clone()]);
    for b_in in 0..dim_b {
        for (pair, c) in comul.apply_basis(b_in) {
            let (b1, b2) = (pair / dim_b, pair % dim_b);
            for (u, fc) in f.apply_basis(b1) {
                for a in 0..dim_a {
                    for (a2, mc) in mul.apply_basis(u * dim_a + a) {
                        op.add_entry(
                            b2 * dim_a + a,
                            b_in * dim_a + a2,
                            &(&c * &fc) * &mc,
                        );
                    }
                }
            }
        }
    }
    let mut rhs = LinMap::zero(field, vec![], vec![hom.clone()]);
    for (i, o, s) in e.entries() {
        rhs.add_entry(0, i * dim_a + o, s.clone());
    }
    let sol = solve_right(&op, &rhs).map_err(|err| match err {
        Error::NoSolution => Error::NotConvInvertible,
        other => other,
    })?;
    let mut x = LinMap::zero(field, f.domain().to_vec(), f.codomain().to_vec());
    for (_, k, s) in sol.entries() {
        x.add_entry(k / dim_a, k % dim_a, s.clone());
    }
    let right = convolution_maps(f, &x, comul, mul)?;
    debug_assert_eq!(right, e);
    let left = convolution_maps(&x, f, comul, mul)?;
    if left != e {
        return Err(Error::OneSidedOnly("x ∗ f = unit∘counit".into()));
    }
    Ok(x)
}

/// Convolution inverse of a map `B -> A` between structures.
pub fn convolution_inverse(
    f: &LinMap,
    source: &AlgebraicStructure,
    target: &AlgebraicStructure,
) -> Result<LinMap> {
    convolution_inverse_maps(f, source.comul(), source.counit(), target.mul(), target.unit())
}

/// Convolution inverse of a functional out of a comonoid.
pub fn functional_conv_inverse(f: &LinMap, comul: &LinMap, counit: &LinMap) -> Result<LinMap> {
    let field = f.field();
    convolution_inverse_maps(
        f,
        comul,
        counit,
        &LinMap::identity(field, &[]),
        &LinMap::identity(field, &[]),
    )
}

/// Which division to derive.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Derives the (unique) left or right division of a bimonoid by inverting
/// `h = (H⊗μ)∘(δ⊗H)` resp. `d = (μ⊗H)∘(H⊗δ)`.
///
/// A singular `h`/`d` means no division exists at all, so the error is
/// definitive, not a failure of the method.
pub fn division_from_structure(h: &AlgebraicStructure, side: Side) -> Result<LinMap> {
    let idh = h.identity();
    let (translation, project) = match side {
        Side::Left => (
            idh.tensor(h.mul()).compose(&h.comul().tensor(&idh))?,
            h.counit().tensor(&idh),
        ),
        Side::Right => (
            h.mul().tensor(&idh).compose(&idh.tensor(h.comul()))?,
            idh.tensor(h.counit()),
        ),
    };
    let inv = translation.invert().map_err(|e| match e {
        Error::NotInvertible { rank, dim } => Error::NoDivision {
            side: side.to_string(),
            reason: format!("translation map is singular (rank {rank} of {dim})"),
        },
        other => other,
    })?;
    let division = project.compose(&inv)?;

    // Both halves of the division law hold by construction; assert them.
    let lhs_domain = division.domain().to_vec();
    let eps_id = match side {
        Side::Left => h.counit().tensor(&idh),
        Side::Right => idh.tensor(h.counit()),
    };
    let cancel = match side {
        Side::Left => division.compose(&idh.tensor(h.mul()).compose(&h.comul().tensor(&idh))?)?,
        Side::Right => division.compose(&h.mul().tensor(&idh).compose(&idh.tensor(h.comul()))?)?,
    };
    let recover = match side {
        Side::Left => h
            .mul()
            .compose(&idh.tensor(&division))?
            .compose(&h.comul().tensor(&idh))?,
        Side::Right => h
            .mul()
            .compose(&division.tensor(&idh))?
            .compose(&idh.tensor(h.comul()))?,
    };
    debug_assert_eq!(lhs_domain.len(), 2);
    if cancel != eps_id || recover != eps_id {
        return Err(Error::LawFails {
            law: format!("{side}-division"),
            witness: "derived division violates its defining identity".into(),
        });
    }
    Ok(division)
}

/// Report produced when deriving an antipode from a division.
#[derive(Clone, Debug)]
pub struct AntipodeReport {
    pub antipode: LinMap,
    /// Whether the division is recovered from the antipode
    /// (`l = μ∘(λ⊗H)` resp. `r = μ∘(H⊗ϱ)`), i.e. whether the structure is a
    /// left (right) Hopf quasigroup.
    pub division_form_holds: bool,
    /// First basis pair where the recovery fails, with labels.
    pub witness: Option<String>,
}

/// Builds `λ = l∘(H⊗η)` (resp. `ϱ = r∘(η⊗H)`) and reports whether the
/// division is the one induced by the antipode.
pub fn antipode_from_division(h: &AlgebraicStructure, side: Side) -> Result<AntipodeReport> {
    let idh = h.identity();
    let (division, antipode) = match side {
        Side::Left => {
            let l = h.ldiv().ok_or_else(|| Error::MissingMap {
                name: h.name().into(),
                what: "ldiv".into(),
            })?;
            let lam = l.compose(&idh.tensor(h.unit()))?;
            (l.clone(), lam)
        }
        Side::Right => {
            let r = h.rdiv().ok_or_else(|| Error::MissingMap {
                name: h.name().into(),
                what: "rdiv".into(),
            })?;
            let rho = r.compose(&h.unit().tensor(&idh))?;
            (r.clone(), rho)
        }
    };
    let from_antipode = match side {
        Side::Left => h.mul().compose(&antipode.tensor(&idh))?,
        Side::Right => h.mul().compose(&idh.tensor(&antipode))?,
    };
    let mut witness = None;
    if from_antipode != division {
        let diff = from_antipode.sub(&division)?;
        let (i, _, _) = diff.entries().next().expect("maps differ");
        witness = Some(index_label(division.domain(), i));
    }
    Ok(AntipodeReport {
        antipode,
        division_form_holds: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;
    use crate::scalar::Field;

    /// Group Hopf algebra of Z/2: basis {e, g}, group-like coproduct, and the
    /// identity antipode (every element is its own inverse).
    pub(crate) fn z2() -> AlgebraicStructure {
        let f = Field::Rational;
        let sp = BasedSpace::new(vec!["e".into(), "g".into()]).unwrap();
        let mul = LinMap::from_fn(f, vec![sp.clone(), sp.clone()], vec![sp.clone()], |ix| {
            vec![(vec![ix[0] ^ ix[1]], f.one())]
        });
        let unit = LinMap::from_fn(f, vec![], vec![sp.clone()], |_| vec![(vec![0], f.one())]);
        let comul = LinMap::from_fn(f, vec![sp.clone()], vec![sp.clone(), sp.clone()], |ix| {
            vec![(vec![ix[0], ix[0]], f.one())]
        });
        let counit = LinMap::from_fn(f, vec![sp.clone()], vec![], |_| vec![(vec![], f.one())]);
        let s = AlgebraicStructure::new("z2", sp, mul, unit, comul, counit).unwrap();
        let anti = s.identity();
        s.with_antipode(anti)
    }
}

#[cfg(test)]
mod tests {
    use super::tests_support::z2;
    use super::*;
    use crate::scalar::Field;

    fn z2_algebra() -> AlgebraicStructure {
        z2()
    }

    #[test]
    fn division_of_a_group_algebra_is_inverse_times() {
        let h = z2_algebra();
        let l = division_from_structure(&h, Side::Left).unwrap();
        // l(g⊗h) = g^{-1} h; for Z/2 that is g*h again.
        assert_eq!(l, *h.mul());
        let r = division_from_structure(&h, Side::Right).unwrap();
        assert_eq!(r, *h.mul());
    }

    #[test]
    fn semilattice_monoid_has_no_division() {
        // Unit e1, e2*e2 = e2: left translation by e2 is not bijective.
        let f = Field::Rational;
        let sp = BasedSpace::new(vec!["e1".into(), "e2".into()]).unwrap();
        let mul = LinMap::from_fn(f, vec![sp.clone(), sp.clone()], vec![sp.clone()], |ix| {
            vec![(vec![ix[0].max(ix[1])], f.one())]
        });
        let unit = LinMap::from_fn(f, vec![], vec![sp.clone()], |_| vec![(vec![0], f.one())]);
        let comul = LinMap::from_fn(f, vec![sp.clone()], vec![sp.clone(), sp.clone()], |ix| {
            vec![(vec![ix[0], ix[0]], f.one())]
        });
        let counit = LinMap::from_fn(f, vec![sp.clone()], vec![], |_| vec![(vec![], f.one())]);
        let h = AlgebraicStructure::new("semilattice", sp, mul, unit, comul, counit).unwrap();
        match division_from_structure(&h, Side::Left) {
            Err(Error::NoDivision { .. }) => {}
            other => panic!("expected NoDivision, got {other:?}"),
        }
    }

    #[test]
    fn z2_translation_map_is_an_involution_and_inverts_to_itself() {
        let s = z2();
        let idh = s.identity();
        let h = idh
            .tensor(s.mul())
            .compose(&s.comul().tensor(&idh))
            .unwrap();
        let id2 = LinMap::identity(Field::Rational, h.domain());
        assert_eq!(h.compose(&h).unwrap(), id2);
        let inv = h.invert().unwrap();
        assert_eq!(inv, h);
        assert_eq!(h.compose(&inv).unwrap(), id2);
    }

    #[test]
    fn convolution_unit_is_idempotent_and_inverts_to_itself() {
        let h = z2_algebra();
        let e = h.conv_unit();
        let ee = convolution(&e, &e, &h, &h).unwrap();
        assert_eq!(ee, e);
        let inv = convolution_inverse(&e, &h, &h).unwrap();
        assert_eq!(inv, e);
    }

    #[test]
    fn group_inverse_map_is_the_convolution_inverse_of_the_identity() {
        let h = z2_algebra();
        let id = h.identity();
        let inv = convolution_inverse(&id, &h, &h).unwrap();
        // In Z/2 every element is its own inverse.
        assert_eq!(inv, id);
    }
}
