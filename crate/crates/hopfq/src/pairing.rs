//! Skew pairings, the cocycle they induce on the tensor structure, the
//! twisted product `A⋈H`, and its double-crossproduct description.

use std::sync::Arc;

use crate::algebra::{AlgebraicStructure, StructureClass};
use crate::deform::{self, DeformOutcome, TwoCocycle};
use crate::error::{Error, Result};
use crate::expr::{
    comp, comul, comul_pair, counit, id, lanti, materialize, mul, mul_pair, ranti, slot, sw, tens,
    Binding,
};
use crate::laws::{self, LawReport};
use crate::linmap::LinMap;
use crate::space::BasedSpace;

/// A verified skew pairing `τ: A⊗H -> K` with its convolution inverse.
#[derive(Clone, Debug)]
pub struct SkewPairing {
    a: Arc<AlgebraicStructure>,
    h: Arc<AlgebraicStructure>,
    tau: LinMap,
    tau_inv: LinMap,
    reports: Vec<LawReport>,
}

impl SkewPairing {
    pub fn a(&self) -> &Arc<AlgebraicStructure> {
        &self.a
    }

    pub fn h(&self) -> &Arc<AlgebraicStructure> {
        &self.h
    }

    pub fn tau(&self) -> &LinMap {
        &self.tau
    }

    pub fn tau_inv(&self) -> &LinMap {
        &self.tau_inv
    }

    pub fn reports(&self) -> &[LawReport] {
        &self.reports
    }

    pub fn binding(&self) -> Binding {
        Binding::new()
            .with_structure("A", &self.a)
            .with_structure("H", &self.h)
            .with_map("tau", &self.tau)
            .with_map("tau_inv", &self.tau_inv)
    }
}

/// Computes the convolution inverse of a pairing candidate and runs the whole
/// law suite, succeeding even when laws fail (the reports carry the verdict).
///
/// The inverse is computed along the left-division route `τ∘(λ_A⊗H)`; when a
/// right division also exists the route `τ∘(ϱ_A⊗H)` must agree, and the
/// solved convolution inverse must agree with both.
pub fn check_pairing(
    a: &Arc<AlgebraicStructure>,
    h: &Arc<AlgebraicStructure>,
    tau: LinMap,
) -> Result<SkewPairing> {
    if tau.domain() != [a.space().clone(), h.space().clone()] || !tau.codomain().is_empty() {
        return Err(Error::ShapeMismatch(
            "pairing must map A⊗H to the ground field".into(),
        ));
    }
    let a_full = Arc::new((**a).clone().with_derived_divisions()?);
    let h_full = Arc::new((**h).clone().with_derived_divisions()?);
    let ida = LinMap::identity(a.field(), &[a.space().clone()]);
    let idh = LinMap::identity(h.field(), &[h.space().clone()]);

    let lantipode_a = match a_full.lantipode() {
        Some(l) => l.clone(),
        None => {
            let l = a_full.ldiv().ok_or_else(|| Error::MissingMap {
                name: a.name().into(),
                what: "ldiv (needed to invert the pairing)".into(),
            })?;
            l.compose(&ida.tensor(a_full.unit()))?
        }
    };
    let tau_inv = tau.compose(&lantipode_a.tensor(&idh))?;
    if let Some(r) = a_full.rdiv() {
        let rho = r.compose(&a_full.unit().tensor(&ida))?;
        let via_right = tau.compose(&rho.tensor(&idh))?;
        if via_right != tau_inv {
            return Err(Error::InverseMismatch);
        }
    }
    // Cross-check against the solved convolution inverse.
    let b = Binding::new()
        .with_structure("A", &a_full)
        .with_structure("H", &h_full);
    let comul_ah = materialize(&comul_pair("A", "H"), &b)?;
    let counit_ah = materialize(&tens([counit("A"), counit("H")]), &b)?;
    let solved = crate::algebra::functional_conv_inverse(&tau, &comul_ah, &counit_ah)?;
    if solved != tau_inv {
        return Err(Error::InverseMismatch);
    }

    let mut pairing = SkewPairing {
        a: a_full.clone(),
        h: h_full.clone(),
        tau,
        tau_inv,
        reports: Vec::new(),
    };
    let mut reports = laws::verify_suite(&pairing.binding(), "skew-pairing")?;
    // The product-side inverse law needs the antipode of A antimultiplicative
    // (or λ_H invertible); both hold for Hopf quasigroups.
    let tauinv_mul_left_applies = matches!(
        a_full.class(),
        Some(StructureClass::Hqg) | Some(StructureClass::HopfAlgebra)
    ) || h_full
        .lantipode()
        .map(|l| l.invert().is_ok())
        .unwrap_or(false);
    if tauinv_mul_left_applies {
        reports.push(laws::check_law_id("tauinv-mul-left", &pairing.binding())?);
    }
    pairing.reports = reports;
    Ok(pairing)
}

/// Builds and fully verifies a skew pairing; any failing law is an error.
pub fn make_skew_pairing(
    a: &Arc<AlgebraicStructure>,
    h: &Arc<AlgebraicStructure>,
    tau: LinMap,
) -> Result<SkewPairing> {
    let pairing = check_pairing(a, h, tau)?;
    if let Some(fail) = laws::first_failure(&pairing.reports) {
        return Err(Error::NotSkewPairing {
            law: fail.law.clone(),
            witness: fail
                .witness
                .as_ref()
                .map(|w| w.input.clone())
                .unwrap_or_else(|| "unevaluable".into()),
        });
    }
    Ok(pairing)
}

fn meet_suite(a: Option<StructureClass>, h: Option<StructureClass>) -> &'static str {
    use StructureClass::*;
    match (a, h) {
        (Some(HopfAlgebra), Some(HopfAlgebra)) => "hopf-algebra",
        (Some(Hqg) | Some(HopfAlgebra), Some(Hqg) | Some(HopfAlgebra)) => "hqg",
        (Some(LeftHqg), Some(LeftHqg) | Some(Hqg) | Some(HopfAlgebra))
        | (Some(Hqg) | Some(HopfAlgebra), Some(LeftHqg)) => "left-hqg",
        (Some(RightHqg), Some(RightHqg) | Some(Hqg) | Some(HopfAlgebra))
        | (Some(Hqg) | Some(HopfAlgebra), Some(RightHqg)) => "right-hqg",
        _ => "bimonoid",
    }
}

/// The componentwise structure on `A⊗H`, with divisions
/// `(l_A⊗l_H)∘(A⊗c_{H,A}⊗H)` and antipode `λ_A⊗λ_H`, re-verified.
pub fn tensor_structure(
    a: &Arc<AlgebraicStructure>,
    h: &Arc<AlgebraicStructure>,
) -> Result<Arc<AlgebraicStructure>> {
    let a_full = Arc::new((**a).clone().with_derived_divisions()?);
    let h_full = Arc::new((**h).clone().with_derived_divisions()?);
    let space = BasedSpace::tensor(a.space(), h.space())?;
    let pair = [space.clone(), space.clone()];
    let b = Binding::new()
        .with_structure("A", &a_full)
        .with_structure("H", &h_full);

    let mul_t = materialize(&mul_pair("A", "H"), &b)?.refactor(pair.to_vec(), vec![space.clone()])?;
    let unit_t = a.unit().tensor(h.unit()).refactor(vec![], vec![space.clone()])?;
    let comul_t =
        materialize(&comul_pair("A", "H"), &b)?.refactor(vec![space.clone()], pair.to_vec())?;
    let counit_t = a.counit().tensor(h.counit()).refactor(vec![space.clone()], vec![])?;
    let mut s = AlgebraicStructure::new(
        &format!("{}⊗{}", a.name(), h.name()),
        space.clone(),
        mul_t,
        unit_t,
        comul_t,
        counit_t,
    )?;

    let div = |da: crate::expr::Expr, dh: crate::expr::Expr| -> Result<LinMap> {
        materialize(
            &comp([tens([da, dh]), tens([id("A"), sw("H", "A"), id("H")])]),
            &b,
        )?
        .refactor(pair.to_vec(), vec![space.clone()])
    };
    if a_full.ldiv().is_some() && h_full.ldiv().is_some() {
        s = s.with_ldiv(div(crate::expr::ldiv("A"), crate::expr::ldiv("H"))?);
    }
    if a_full.rdiv().is_some() && h_full.rdiv().is_some() {
        s = s.with_rdiv(div(crate::expr::rdiv("A"), crate::expr::rdiv("H"))?);
    }
    if let (Some(la), Some(lh)) = (a_full.lantipode(), h_full.lantipode()) {
        s = s.with_lantipode(la.tensor(lh).refactor(vec![space.clone()], vec![space.clone()])?);
    }
    if let (Some(ra), Some(rh)) = (a_full.rantipode(), h_full.rantipode()) {
        s = s.with_rantipode(ra.tensor(rh).refactor(vec![space.clone()], vec![space.clone()])?);
    }

    let suite = meet_suite(a_full.class(), h_full.class());
    let (s, reports) = laws::classify(s, suite)?;
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
    Ok(Arc::new(s))
}

/// The functional `ω = ε_A ⊗ (τ∘c_{H,A}) ⊗ ε_H` on `(A⊗H)⊗(A⊗H)`, as a map
/// out of the product space.
fn omega_map(p: &SkewPairing, t: &Arc<AlgebraicStructure>, tau: &LinMap) -> Result<LinMap> {
    let b = p.binding().with_map("t", tau);
    let e = tens([
        counit("A"),
        comp([slot("t"), sw("H", "A")]),
        counit("H"),
    ]);
    materialize(&e, &b)?.refactor(vec![t.space().clone(), t.space().clone()], vec![])
}

/// The induced two-cocycle on the tensor structure, with inverse
/// `ε_A ⊗ (τ⁻¹∘c_{H,A}) ⊗ ε_H`, fully verified.
pub fn pairing_to_cocycle(p: &SkewPairing) -> Result<TwoCocycle> {
    let t = tensor_structure(&p.a, &p.h)?;
    let omega = omega_map(p, &t, &p.tau)?;
    let omega_inv = omega_map(p, &t, &p.tau_inv)?;
    deform::make_cocycle_with_inverse(&t, omega, omega_inv, false)
}

/// Everything the twisted tensor product construction produces.
#[derive(Clone, Debug)]
pub struct BowtieOutcome {
    /// The verified structure `A⋈H` (product and antipode by the direct
    /// formulas; equal, map for map, to the cocycle twist).
    pub structure: Arc<AlgebraicStructure>,
    /// The undeformed tensor structure `A⊗H`.
    pub tensor: Arc<AlgebraicStructure>,
    /// The inducing cocycle `ω`.
    pub cocycle: TwoCocycle,
    /// The cocycle twist of the tensor structure, with auxiliary functionals.
    pub twist: DeformOutcome,
}

/// Builds `A⋈H` by the direct product/antipode formulas and asserts, entry
/// for entry, that it equals the `ω`-twist of the tensor structure.
pub fn bowtie(p: &SkewPairing) -> Result<BowtieOutcome> {
    let cocycle = pairing_to_cocycle(p)?;
    let tensor = cocycle.base().clone();
    let twist = deform::deform(&cocycle)?;
    let b = p.binding();
    let pair = [tensor.space().clone(), tensor.space().clone()];

    let direct_mul = materialize(
        &comp([
            tens([mul("A"), mul("H")]),
            tens([id("A"), slot("tau"), id("A"), id("H"), slot("tau_inv"), id("H")]),
            tens([id("A"), comul_pair("A", "H"), id("A"), id("H"), id("H")]),
            tens([id("A"), comul_pair("A", "H"), id("H")]),
            tens([id("A"), sw("H", "A"), id("H")]),
        ]),
        &b,
    )?
    .refactor(pair.to_vec(), vec![tensor.space().clone()])?;
    if &direct_mul != twist.structure.mul() {
        return Err(Error::LawFails {
            law: "bowtie-product-equals-twist".into(),
            witness: "direct product differs from the cocycle twist".into(),
        });
    }
    let direct_antipode = materialize(
        &comp([
            tens([slot("tau_inv"), lanti("A"), lanti("H"), slot("tau")]),
            tens([id("A"), id("H"), comul_pair("A", "H")]),
            comul_pair("A", "H"),
        ]),
        &b,
    )?
    .refactor(vec![tensor.space().clone()], vec![tensor.space().clone()])?;
    match twist.structure.antipode() {
        Some(s) if *s == direct_antipode => {}
        _ => {
            return Err(Error::LawFails {
                law: "bowtie-antipode-equals-twist".into(),
                witness: "direct antipode differs from the cocycle twist".into(),
            })
        }
    }

    let renamed = (*twist.structure)
        .clone()
        .renamed(&format!("{}⋈{}", p.a.name(), p.h.name()));
    Ok(BowtieOutcome {
        structure: Arc::new(renamed),
        tensor,
        cocycle,
        twist,
    })
}

/// The mutual actions `φ_A: H⊗A -> A` and `φ_H: H⊗A -> H` induced by a skew
/// pairing, verified as module comonoids.
#[derive(Clone, Debug)]
pub struct ActionPair {
    pub phi_a: LinMap,
    pub phi_h: LinMap,
    pub reports_a: Vec<LawReport>,
    pub reports_h: Vec<LawReport>,
}

/// Derives the actions from the pairing and verifies both module-comonoid
/// suites.
///
/// On one-sided structures the `φ_H` construction needs an invertible
/// antipode on `H`; for Hopf quasigroups no extra hypothesis is required.
pub fn actions_from_pairing(p: &SkewPairing) -> Result<ActionPair> {
    let h_is_hqg = matches!(
        p.h.class(),
        Some(StructureClass::Hqg) | Some(StructureClass::HopfAlgebra)
    );
    if !h_is_hqg {
        let invertible = p
            .h
            .lantipode()
            .map(|l| l.invert().is_ok())
            .unwrap_or(false);
        if !invertible {
            return Err(Error::AntipodeNotInvertible);
        }
    }
    let b = p.binding();
    let phi_a = materialize(
        &comp([
            tens([slot("tau"), id("A"), slot("tau_inv")]),
            tens([id("A"), id("H"), comul("A"), id("H")]),
            comul_pair("A", "H"),
            sw("H", "A"),
        ]),
        &b,
    )?;
    let phi_h = materialize(
        &comp([
            tens([slot("tau"), id("H"), slot("tau_inv")]),
            tens([id("A"), id("H"), sw("A", "H"), id("H")]),
            tens([id("A"), id("H"), id("A"), comul("H")]),
            comul_pair("A", "H"),
            sw("H", "A"),
        ]),
        &b,
    )?;

    let ba = Binding::new()
        .with_structure("H", &p.h)
        .with_space("M", p.a.space())
        .with_map("phi", &phi_a)
        .with_map("comulM", p.a.comul())
        .with_map("counitM", p.a.counit());
    let reports_a = laws::verify_suite(&ba, "left-module-comonoid")?;
    let bh = Binding::new()
        .with_structure("A", &p.a)
        .with_space("N", p.h.space())
        .with_map("psi", &phi_h)
        .with_map("comulN", p.h.comul())
        .with_map("counitN", p.h.counit());
    let reports_h = laws::verify_suite(&bh, "right-module-comonoid")?;
    for r in reports_a.iter().chain(&reports_h) {
        if !r.pass {
            return Err(Error::ModuleLawFails {
                law: r.law.clone(),
                witness: r
                    .witness
                    .as_ref()
                    .map(|w| w.input.clone())
                    .unwrap_or_else(|| "unevaluable".into()),
            });
        }
    }
    Ok(ActionPair {
        phi_a,
        phi_h,
        reports_a,
        reports_h,
    })
}

/// A double crossproduct together with both halves of the equivalence it
/// certifies: the compatibility-condition reports and the structure suite.
#[derive(Clone, Debug)]
pub struct DcpOutcome {
    pub structure: Arc<AlgebraicStructure>,
    pub majid_reports: Vec<LawReport>,
    pub suite_reports: Vec<LawReport>,
}

impl DcpOutcome {
    pub fn majid_pass(&self) -> bool {
        laws::all_pass(&self.majid_reports)
    }

    pub fn suite_pass(&self) -> bool {
        laws::all_pass(&self.suite_reports)
    }
}

/// Builds the double crossproduct `A⋈H` from a verified action pair, checks
/// the full compatibility-condition set, and runs the structure suite on the
/// result. The two verdicts are reported side by side; they must agree.
pub fn double_cross_product(
    a: &Arc<AlgebraicStructure>,
    h: &Arc<AlgebraicStructure>,
    acts: &ActionPair,
) -> Result<DcpOutcome> {
    let b = Binding::new()
        .with_structure("A", a)
        .with_structure("H", h)
        .with_map("phiA", &acts.phi_a)
        .with_map("phiH", &acts.phi_h);
    let majid_reports = laws::verify_suite(&b, "majid-conditions")?;

    let space = BasedSpace::tensor(a.space(), h.space())?;
    let pair = [space.clone(), space.clone()];
    let mul_dcp = materialize(
        &comp([
            tens([mul("A"), mul("H")]),
            tens([id("A"), slot("phiA"), slot("phiH"), id("H")]),
            tens([id("A"), comul_pair("H", "A"), id("H")]),
        ]),
        &b,
    )?
    .refactor(pair.to_vec(), vec![space.clone()])?;
    let lanti_dcp = materialize(
        &comp([
            tens([slot("phiA"), slot("phiH")]),
            comul_pair("H", "A"),
            tens([lanti("H"), lanti("A")]),
            sw("A", "H"),
        ]),
        &b,
    )?
    .refactor(vec![space.clone()], vec![space.clone()])?;
    let ranti_dcp = materialize(
        &comp([
            tens([slot("phiA"), slot("phiH")]),
            comul_pair("H", "A"),
            tens([ranti("H"), ranti("A")]),
            sw("A", "H"),
        ]),
        &b,
    )?
    .refactor(vec![space.clone()], vec![space.clone()])?;
    let unit_t = a.unit().tensor(h.unit()).refactor(vec![], vec![space.clone()])?;
    let comul_t =
        materialize(&comul_pair("A", "H"), &b)?.refactor(vec![space.clone()], pair.to_vec())?;
    let counit_t = a.counit().tensor(h.counit()).refactor(vec![space.clone()], vec![])?;
    let s = AlgebraicStructure::new(
        &format!("{}⋈{}", a.name(), h.name()),
        space,
        mul_dcp,
        unit_t,
        comul_t,
        counit_t,
    )?
    .with_lantipode(lanti_dcp)
    .with_rantipode(ranti_dcp);
    let (s, suite_reports) = laws::classify(s, "hqg")?;
    Ok(DcpOutcome {
        structure: Arc::new(s),
        majid_reports,
        suite_reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests_support::z2;

    fn trivial_tau(a: &AlgebraicStructure, h: &AlgebraicStructure) -> LinMap {
        a.counit().tensor(h.counit())
    }

    #[test]
    fn trivial_pairing_on_z2_squares() {
        let a = Arc::new(laws::classify(z2(), "hopf-algebra").unwrap().0);
        let h = a.clone();
        let p = make_skew_pairing(&a, &h, trivial_tau(&a, &h)).unwrap();
        assert_eq!(p.tau(), p.tau_inv());

        // Trivial τ: the twisted product is the plain tensor product.
        let out = bowtie(&p).unwrap();
        assert_eq!(out.structure.mul(), out.tensor.mul());

        // Actions collapse: φ_A = ε_H⊗A.
        let acts = actions_from_pairing(&p).unwrap();
        let expected = h.counit().tensor(&a.identity());
        assert_eq!(acts.phi_a, expected);

        let dcp = double_cross_product(&a, &h, &acts).unwrap();
        assert!(dcp.majid_pass());
        assert!(dcp.suite_pass());
        assert_eq!(dcp.structure.mul(), out.tensor.mul());
    }
}
