//! Quasitriangular structures, the projection they induce together with a
//! skew pairing, Yetter-Drinfeld splitting, biproducts, and the isomorphism
//! comparing the biproduct with the twisted tensor product.

use std::sync::Arc;

use crate::algebra::{convolution, AlgebraicStructure, StructureClass};
use crate::error::{Error, Result};
use crate::expr::{
    comp, comul, counit, id, lanti, materialize, mul, slot, sw, tens, Binding,
};
use crate::laws::{self, LawReport};
use crate::linmap::{split_idempotent, LinMap};
use crate::pairing::{bowtie, BowtieOutcome, SkewPairing};
use crate::space::BasedSpace;

/// A verified quasitriangular structure: the element `R` with the derived
/// `S = (λ⊗H)∘R` and `T = (λ⊗λ)∘R`, all axioms checked.
#[derive(Clone, Debug)]
pub struct QuasiTri {
    h: Arc<AlgebraicStructure>,
    r: LinMap,
    s: LinMap,
    t: LinMap,
    reports: Vec<LawReport>,
}

impl QuasiTri {
    pub fn h(&self) -> &Arc<AlgebraicStructure> {
        &self.h
    }

    pub fn r(&self) -> &LinMap {
        &self.r
    }

    pub fn s(&self) -> &LinMap {
        &self.s
    }

    pub fn t(&self) -> &LinMap {
        &self.t
    }

    pub fn reports(&self) -> &[LawReport] {
        &self.reports
    }
}

fn require_hqg(s: &AlgebraicStructure) -> Result<()> {
    match s.class() {
        Some(StructureClass::Hqg) | Some(StructureClass::HopfAlgebra) => Ok(()),
        _ => Err(Error::NotVerified {
            name: s.name().into(),
            needed: "Hopf quasigroup".into(),
        }),
    }
}

/// Derives `S`, `T` and runs the whole quasitriangular suite; law failures
/// land in the reports rather than erroring.
pub fn check_quasitriangular(h: &Arc<AlgebraicStructure>, r: LinMap) -> Result<QuasiTri> {
    require_hqg(h)?;
    let sp = h.space().clone();
    if !r.domain().is_empty() || r.codomain() != [sp.clone(), sp.clone()] {
        return Err(Error::ShapeMismatch("R must be an element of H⊗H".into()));
    }
    let lam = h.antipode().ok_or_else(|| Error::MissingMap {
        name: h.name().into(),
        what: "antipode".into(),
    })?;
    let idh = h.identity();
    let s = lam.tensor(&idh).compose(&r)?;
    let t = lam.tensor(lam).compose(&r)?;
    let mut qt = QuasiTri {
        h: h.clone(),
        r,
        s,
        t,
        reports: Vec::new(),
    };
    let binding = Binding::new()
        .with_structure("H", h)
        .with_map("R", &qt.r)
        .with_map("S", &qt.s)
        .with_map("T", &qt.t);
    qt.reports = laws::verify_suite(&binding, "quasitriangular")?;
    Ok(qt)
}

/// Verifies the quasitriangular axioms for `R` on a verified Hopf quasigroup.
pub fn make_quasitriangular(h: &Arc<AlgebraicStructure>, r: LinMap) -> Result<QuasiTri> {
    let qt = check_quasitriangular(h, r)?;
    if let Some(fail) = laws::first_failure(&qt.reports) {
        return Err(Error::NotQuasitriangular {
            law: fail.law.clone(),
            witness: fail
                .witness
                .as_ref()
                .map(|w| w.input.clone())
                .unwrap_or_else(|| "unevaluable".into()),
        });
    }
    Ok(qt)
}

/// A strong projection extracted from a pairing and a quasitriangular
/// structure: `(B = A⋈H, f, g)` with the split idempotent `q = i∘p`.
#[derive(Clone, Debug)]
pub struct Projection {
    /// The twisted tensor product and its ingredients.
    pub bowtie: BowtieOutcome,
    pub h: Arc<AlgebraicStructure>,
    /// `f = η_A⊗H : H -> B`.
    pub f: LinMap,
    /// `g = (τ⊗μ_H)∘(A⊗R⊗H) : B -> H`.
    pub g: LinMap,
    /// `q = id_B ∗ (f∘λ_H∘g)`, equal to the closed form
    /// `(A⊗τ⊗λ_H)∘(δ_A⊗R⊗ε_H)`.
    pub q: LinMap,
    /// `p = A⊗ε_H`.
    pub p: LinMap,
    /// `i = (A⊗τ⊗λ_H)∘(δ_A⊗R)`.
    pub i: LinMap,
    /// The image of `q`, literally the carrier of `A`.
    pub z: Arc<BasedSpace>,
    /// The unital-magma compatibility checks for `g` (the precondition).
    pub rt_reports: Vec<LawReport>,
    /// The strong-projection suite.
    pub reports: Vec<LawReport>,
}

impl Projection {
    /// `f` as a checked morphism `H -> B`.
    pub fn f_morphism(&self) -> Result<crate::algebra::Morphism> {
        crate::algebra::Morphism::new(&self.h, &self.bowtie.structure, self.f.clone())
    }

    /// `g` as a checked morphism `B -> H`.
    pub fn g_morphism(&self) -> Result<crate::algebra::Morphism> {
        crate::algebra::Morphism::new(&self.bowtie.structure, &self.h, self.g.clone())
    }
}

/// Builds the strong projection induced by a skew pairing whose `H` is
/// quasitriangular.
///
/// The unital-magma compatibilities for `g` are checked first (they are the
/// precondition); the strong conditions and the split are then verified, with
/// the generic idempotent splitting cross-checked against the explicit basis.
pub fn projection_from_pairing(pairing: &SkewPairing, qt: &QuasiTri) -> Result<Projection> {
    require_hqg(pairing.a())?;
    require_hqg(pairing.h())?;
    if pairing.h().mul() != qt.h().mul() || pairing.h().comul() != qt.h().comul() {
        return Err(Error::ShapeMismatch(
            "pairing and quasitriangular structure live on different H".into(),
        ));
    }
    let b = pairing.binding().with_map("R", qt.r());
    let g_raw = materialize(
        &comp([
            tens([slot("tau"), mul("H")]),
            tens([id("A"), slot("R"), id("H")]),
        ]),
        &b,
    )?;
    let mut rt_reports = Vec::new();
    for law in ["rt-mul-right", "rt-mul-left"] {
        let r = laws::check_law_id(law, &b.clone().with_map("g", &g_raw))?;
        if !r.pass {
            return Err(Error::RTConditionFails {
                law: r.law,
                witness: r.witness.map(|w| w.input).unwrap_or_default(),
            });
        }
        rt_reports.push(r);
    }

    let bt = bowtie(pairing)?;
    let bsp = bt.structure.space().clone();
    let a = pairing.a();
    let h = pairing.h();
    let g = g_raw.refactor(vec![bsp.clone()], vec![h.space().clone()])?;
    let f = a
        .unit()
        .tensor(&h.identity())
        .refactor(vec![h.space().clone()], vec![bsp.clone()])?;

    // q = id ∗ (f∘λ_H∘g), and its closed form.
    let lam_h = h.antipode().ok_or_else(|| Error::MissingMap {
        name: h.name().into(),
        what: "antipode".into(),
    })?;
    let fg = f.compose(&lam_h.compose(&g)?)?;
    let q = convolution(&bt.structure.identity(), &fg, &bt.structure, &bt.structure)?;
    let q_closed = materialize(
        &comp([
            tens([id("A"), slot("tau"), lanti("H")]),
            tens([comul("A"), slot("R"), counit("H")]),
        ]),
        &b,
    )?
    .refactor(vec![bsp.clone()], vec![bsp.clone()])?;
    if q != q_closed {
        return Err(Error::LawFails {
            law: "projection-idempotent-closed-form".into(),
            witness: "convolution form differs from the closed form".into(),
        });
    }

    let p = a
        .identity()
        .tensor(h.counit())
        .refactor(vec![bsp.clone()], vec![a.space().clone()])?;
    let i = materialize(
        &comp([
            tens([id("A"), slot("tau"), lanti("H")]),
            tens([comul("A"), slot("R")]),
        ]),
        &b,
    )?
    .refactor(vec![a.space().clone()], vec![bsp.clone()])?;

    let proj = Projection {
        bowtie: bt,
        h: h.clone(),
        f,
        g,
        q,
        p,
        i,
        z: a.space().clone(),
        rt_reports,
        reports: Vec::new(),
    };
    let binding = Binding::new()
        .with_structure("B", &proj.bowtie.structure)
        .with_structure("H", h)
        .with_space("Z", &proj.z)
        .with_map("f", &proj.f)
        .with_map("g", &proj.g)
        .with_map("q", &proj.q)
        .with_map("p", &proj.p)
        .with_map("i", &proj.i);
    let reports = laws::verify_suite(&binding, "strong-projection")?;
    if let Some(fail) = laws::first_failure(&reports) {
        let witness = fail
            .witness
            .as_ref()
            .map(|w| w.input.clone())
            .unwrap_or_else(|| "unevaluable".into());
        return Err(if fail.law.starts_with("strong-mixed") {
            Error::NotStrong {
                law: fail.law.clone(),
                witness,
            }
        } else {
            Error::LawFails {
                law: fail.law.clone(),
                witness,
            }
        });
    }

    // Cross-check the explicit basis against the generic splitting.
    let (p2, i2, z2) = split_idempotent(&proj.q)?;
    if z2.dim() != proj.z.dim() {
        return Err(Error::NotIso(
            "generic idempotent split has a different rank".into(),
        ));
    }
    let u = p2.compose(&proj.i)?;
    let u_inv = proj.p.compose(&i2)?;
    let id_z2 = LinMap::identity(proj.q.field(), &[z2.clone()]);
    let id_z = LinMap::identity(proj.q.field(), &[proj.z.clone()]);
    if u.compose(&u_inv)? != id_z2 || u_inv.compose(&u)? != id_z {
        return Err(Error::NotIso(
            "explicit and generic image bases are not related by an isomorphism".into(),
        ));
    }

    Ok(Projection { reports, ..proj })
}

/// The braided structure extracted on the image of a strong projection.
#[derive(Clone, Debug)]
pub struct BraidedStructure {
    pub h: Arc<AlgebraicStructure>,
    pub space: Arc<BasedSpace>,
    pub mul: LinMap,
    pub unit: LinMap,
    pub comul: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    /// The action `φ: H⊗D -> D`.
    pub action: LinMap,
    /// The coaction `ρ: D -> H⊗D`.
    pub coaction: LinMap,
}

impl BraidedStructure {
    pub fn binding(&self) -> Binding {
        Binding::new()
            .with_structure("H", &self.h)
            .with_space("M", &self.space)
            .with_map("phi", &self.action)
            .with_map("rho", &self.coaction)
            .with_map("mulM", &self.mul)
            .with_map("unitM", &self.unit)
            .with_map("comulM", &self.comul)
            .with_map("counitM", &self.counit)
            .with_map("sM", &self.antipode)
    }
}

/// Result of splitting a strong projection through its image.
#[derive(Clone, Debug)]
pub struct SplitOutcome {
    pub braided: BraidedStructure,
    /// Braided-structure suite reports (Yetter-Drinfeld laws included).
    pub reports: Vec<LawReport>,
}

/// Extracts the braided Hopf quasigroup on the image of a strong projection:
/// action `p∘μ_B∘(f⊗i)`, coaction `(g⊗p)∘δ_B∘i`, product `p∘μ_B∘(i⊗i)`,
/// coproduct `(p⊗p)∘δ_B∘i`, antipode `p∘((f∘g)∗λ_B)∘i`, and verifies the
/// Yetter-Drinfeld and braided-structure laws.
pub fn split_to_yd(proj: &Projection) -> Result<SplitOutcome> {
    let b = &proj.bowtie.structure;
    let lam_b = b.antipode().ok_or_else(|| Error::MissingMap {
        name: b.name().into(),
        what: "antipode".into(),
    })?;
    let action = proj.p.compose(&b.mul().compose(&proj.f.tensor(&proj.i))?)?;
    let coaction = proj
        .g
        .tensor(&proj.p)
        .compose(&b.comul().compose(&proj.i)?)?;
    let mul_d = proj
        .p
        .compose(&b.mul().compose(&proj.i.tensor(&proj.i))?)?;
    let unit_d = proj.p.compose(b.unit())?;
    let comul_d = proj
        .p
        .tensor(&proj.p)
        .compose(&b.comul().compose(&proj.i)?)?;
    let counit_d = b.counit().compose(&proj.i)?;
    let fg = proj.f.compose(&proj.g)?;
    let antipode_d = proj
        .p
        .compose(&convolution(&fg, lam_b, b, b)?)?
        .compose(&proj.i)?;

    let braided = BraidedStructure {
        h: proj.h.clone(),
        space: proj.z.clone(),
        mul: mul_d,
        unit: unit_d,
        comul: comul_d,
        counit: counit_d,
        antipode: antipode_d,
        action,
        coaction,
    };
    let reports = laws::verify_suite(&braided.binding(), "braided-hqg")?;
    if let Some(fail) = laws::first_failure(&reports) {
        return Err(Error::LawFails {
            law: fail.law.clone(),
            witness: fail
                .witness
                .as_ref()
                .map(|w| w.input.clone())
                .unwrap_or_else(|| "unevaluable".into()),
        });
    }
    Ok(SplitOutcome { braided, reports })
}

/// Assembles the biproduct `D⋊H` of a braided structure and verifies the
/// whole Hopf-quasigroup suite on it.
pub fn biproduct(d: &BraidedStructure) -> Result<(Arc<AlgebraicStructure>, Vec<LawReport>)> {
    let h = &d.h;
    let b = d.binding();
    // Γ = (μ_H⊗D)∘(H⊗c_{D,H})∘(ρ⊗H),  Ψ = (φ⊗H)∘(H⊗c_{H,D})∘(δ_H⊗D).
    let gamma = comp([
        tens([mul("H"), id("M")]),
        tens([id("H"), sw("M", "H")]),
        tens([slot("rho"), id("H")]),
    ]);
    let psi = comp([
        tens([slot("phi"), id("H")]),
        tens([id("H"), sw("H", "M")]),
        tens([comul("H"), id("M")]),
    ]);
    let space = BasedSpace::tensor(&d.space, h.space())?;
    let pair = [space.clone(), space.clone()];
    let mul_bp = materialize(
        &comp([
            tens([slot("mulM"), mul("H")]),
            tens([id("M"), psi.clone(), id("H")]),
        ]),
        &b,
    )?
    .refactor(pair.to_vec(), vec![space.clone()])?;
    let comul_bp = materialize(
        &comp([
            tens([id("M"), gamma.clone(), id("H")]),
            tens([slot("comulM"), comul("H")]),
        ]),
        &b,
    )?
    .refactor(vec![space.clone()], pair.to_vec())?;
    let unit_bp = d.unit.tensor(h.unit()).refactor(vec![], vec![space.clone()])?;
    let counit_bp = d
        .counit
        .tensor(h.counit())
        .refactor(vec![space.clone()], vec![])?;
    let anti_bp = materialize(
        &comp([psi, tens([lanti("H"), slot("sM")]), gamma]),
        &b,
    )?
    .refactor(vec![space.clone()], vec![space.clone()])?;
    let s = AlgebraicStructure::new(
        &format!("{}⋊{}", "D", h.name()),
        space,
        mul_bp,
        unit_bp,
        comul_bp,
        counit_bp,
    )?
    .with_antipode(anti_bp);
    let (s, reports) = laws::classify(s, "hqg")?;
    if let Some(fail) = laws::first_failure(&reports) {
        return Err(Error::LawFails {
            law: fail.law.clone(),
            witness: fail
                .witness
                .as_ref()
                .map(|w| w.input.clone())
                .unwrap_or_else(|| "unevaluable".into()),
        });
    }
    Ok((Arc::new(s), reports))
}

/// The comparison isomorphism `w = μ_B∘(i⊗f): D⋊H -> B` with inverse
/// `(p⊗g)∘δ_B`, verified as an isomorphism of Hopf quasigroups.
#[derive(Clone, Debug)]
pub struct IsoOutcome {
    pub w: LinMap,
    pub w_inv: LinMap,
    /// `w` packaged as a checked morphism from the biproduct to `B`.
    pub morphism: crate::algebra::Morphism,
    pub reports: Vec<LawReport>,
}

pub fn iso_w(proj: &Projection, bp: &Arc<AlgebraicStructure>) -> Result<IsoOutcome> {
    let b = &proj.bowtie.structure;
    let w = b
        .mul()
        .compose(&proj.i.tensor(&proj.f))?
        .refactor(vec![bp.space().clone()], vec![b.space().clone()])?;
    let w_inv = proj
        .p
        .tensor(&proj.g)
        .compose(b.comul())?
        .refactor(vec![b.space().clone()], vec![bp.space().clone()])?;
    if w.compose(&w_inv)? != b.identity() || w_inv.compose(&w)? != LinMap::identity(w.field(), &[bp.space().clone()])
    {
        return Err(Error::NotIso("w and its candidate inverse do not cancel".into()));
    }
    let binding = Binding::new()
        .with_structure("Src", bp)
        .with_structure("Tgt", b)
        .with_map("w", &w);
    let reports = laws::verify_suite(&binding, "hqg-morphism")?;
    if let Some(fail) = laws::first_failure(&reports) {
        return Err(Error::LawFails {
            law: fail.law.clone(),
            witness: fail
                .witness
                .as_ref()
                .map(|w| w.input.clone())
                .unwrap_or_else(|| "unevaluable".into()),
        });
    }
    let morphism = crate::algebra::Morphism::new(bp, b, w.clone())?;
    Ok(IsoOutcome {
        w,
        w_inv,
        morphism,
        reports,
    })
}
