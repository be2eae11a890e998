//! Two-cocycles and the twisted product they induce.
//!
//! A two-cocycle on `H` is a convolution-invertible functional `σ: H⊗H -> K`
//! satisfying the cocycle identity; the twisted structure keeps the coproduct
//! and replaces the product by `σ(a₁⊗b₁) a₂b₂ σ⁻¹(a₃⊗b₃)`. When `H` carries a
//! division whose antipode satisfies the one-sided convolution identity, the
//! twist also carries one, built from the auxiliary functionals.

use std::sync::Arc;

use crate::algebra::{AlgebraicStructure, StructureClass};
use crate::error::{Error, Result};
use crate::expr::{
    comp, comul, comul_pow, counit, id, lit, materialize, mul, slot, tens, unit, Binding,
};
use crate::laws::{self, LawReport};
use crate::linmap::LinMap;

/// A verified normal two-cocycle with its convolution inverse.
#[derive(Clone, Debug)]
pub struct TwoCocycle {
    base: Arc<AlgebraicStructure>,
    sigma: LinMap,
    sigma_inv: LinMap,
    /// The input functional when normalization rescaled it.
    original: Option<LinMap>,
    /// Suite reports from construction time (all passing).
    reports: Vec<LawReport>,
}

impl TwoCocycle {
    pub fn base(&self) -> &Arc<AlgebraicStructure> {
        &self.base
    }

    pub fn sigma(&self) -> &LinMap {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &LinMap {
        &self.sigma_inv
    }

    /// The functional before normalization, when rescaling happened.
    pub fn pre_normalization(&self) -> Option<&LinMap> {
        self.original.as_ref()
    }

    /// Construction-time suite reports.
    pub fn reports(&self) -> &[LawReport] {
        &self.reports
    }

    fn binding(&self) -> Binding {
        cocycle_binding(&self.base, &self.sigma, &self.sigma_inv)
    }

    /// Re-runs the whole cocycle suite (identity, normality, the inverse
    /// interchange identities). All of these were checked at construction.
    pub fn verify(&self) -> Result<Vec<LawReport>> {
        laws::verify_suite(&self.binding(), "cocycle")
    }
}

fn cocycle_binding(h: &Arc<AlgebraicStructure>, sigma: &LinMap, sigma_inv: &LinMap) -> Binding {
    Binding::new()
        .with_structure("H", h)
        .with_map("sigma", sigma)
        .with_map("sigma_inv", sigma_inv)
}

fn expect_functional(h: &AlgebraicStructure, sigma: &LinMap) -> Result<()> {
    let sp = h.space();
    if sigma.domain() != [sp.clone(), sp.clone()] || !sigma.codomain().is_empty() {
        return Err(Error::ShapeMismatch(format!(
            "functional on {} must map H⊗H to the ground field",
            h.name()
        )));
    }
    Ok(())
}

/// Builds a [`TwoCocycle`], computing the convolution inverse by solving the
/// convolution system.
pub fn make_cocycle(
    h: &Arc<AlgebraicStructure>,
    sigma: LinMap,
    auto_normalize: bool,
) -> Result<TwoCocycle> {
    expect_functional(h, &sigma)?;
    let b = Binding::new().with_structure("H", h);
    let comul2 = materialize(&comul_pow("H", 2), &b)?;
    let counit2 = materialize(&tens([counit("H"), counit("H")]), &b)?;
    let sigma_inv = crate::algebra::functional_conv_inverse(&sigma, &comul2, &counit2)?;
    finish_cocycle(h, sigma, sigma_inv, auto_normalize)
}

/// Builds a [`TwoCocycle`] from a known inverse candidate; both convolution
/// identities are verified rather than solved for.
pub fn make_cocycle_with_inverse(
    h: &Arc<AlgebraicStructure>,
    sigma: LinMap,
    sigma_inv: LinMap,
    auto_normalize: bool,
) -> Result<TwoCocycle> {
    expect_functional(h, &sigma)?;
    expect_functional(h, &sigma_inv)?;
    for law in ["cocycle-conv-right", "cocycle-conv-left"] {
        let r = laws::check_law_id(law, &cocycle_binding(h, &sigma, &sigma_inv))?;
        if !r.pass {
            return Err(Error::NotConvInvertible);
        }
    }
    finish_cocycle(h, sigma, sigma_inv, auto_normalize)
}

fn finish_cocycle(
    h: &Arc<AlgebraicStructure>,
    sigma: LinMap,
    sigma_inv: LinMap,
    auto_normalize: bool,
) -> Result<TwoCocycle> {
    let check = |s: &LinMap, si: &LinMap, law: &str| -> Result<Option<crate::laws::LawReport>> {
        let r = laws::check_law_id(law, &cocycle_binding(h, s, si))?;
        Ok(if r.pass { None } else { Some(r) })
    };
    if let Some(r) = check(&sigma, &sigma_inv, "cocycle-partial")? {
        return Err(Error::NotACocycle {
            law: r.law,
            witness: r.witness.map(|w| w.input).unwrap_or_default(),
        });
    }
    let normal = check(&sigma, &sigma_inv, "cocycle-normal-left")?.is_none()
        && check(&sigma, &sigma_inv, "cocycle-normal-right")?.is_none();
    let (sigma_n, sigma_inv_n, original) = if normal {
        (sigma, sigma_inv, None)
    } else if auto_normalize {
        // Rescale by σ⁻¹(1⊗1): the unit slices become convolution-idempotent
        // and invertible, hence equal to the counit.
        let one_one = sigma_inv
            .compose(&h.unit().tensor(h.unit()))?
            .entry(0, 0)
            .cloned()
            .ok_or(Error::NotNormal)?;
        let s = sigma.scale(&one_one);
        let si = sigma_inv.scale(&one_one.inv()?);
        (s, si, Some(sigma))
    } else {
        return Err(Error::NotNormal);
    };
    let mut cocycle = TwoCocycle {
        base: h.clone(),
        sigma: sigma_n,
        sigma_inv: sigma_inv_n,
        original,
        reports: Vec::new(),
    };
    let reports = cocycle.verify()?;
    if let Some(fail) = laws::first_failure(&reports) {
        return Err(Error::NotACocycle {
            law: fail.law.clone(),
            witness: fail
                .witness
                .as_ref()
                .map(|w| w.input.clone())
                .unwrap_or_default(),
        });
    }
    cocycle.reports = reports;
    Ok(cocycle)
}

/// The outcome of a deformation: the twisted structure plus the auxiliary
/// functionals that witnessed its divisions.
#[derive(Clone, Debug)]
pub struct DeformOutcome {
    pub structure: Arc<AlgebraicStructure>,
    /// `f, f⁻¹` when a left division was carried over.
    pub aux_left: Option<(LinMap, LinMap)>,
    /// `g, g⁻¹` when a right division was carried over.
    pub aux_right: Option<(LinMap, LinMap)>,
    /// Suite reports for the class the twist was certified against.
    pub reports: Vec<LawReport>,
}

/// Deforms `h` by the cocycle: same unit, counit and coproduct, product
/// `(σ ⊗ μ ⊗ σ⁻¹) ∘ (H⊗H⊗δ_{H⊗H}) ∘ δ_{H⊗H}`.
///
/// Divisions are carried over through the auxiliary functionals whenever the
/// corresponding one-sided convolution identity holds on the base; antipodes
/// and the certified class follow the class of the base.
pub fn deform(cocycle: &TwoCocycle) -> Result<DeformOutcome> {
    let h = cocycle.base();
    let b = cocycle.binding();
    let mul_twisted = materialize(
        &comp([
            tens([slot("sigma"), mul("H"), slot("sigma_inv")]),
            tens([id("H"), id("H"), comul_pow("H", 2)]),
            comul_pow("H", 2),
        ]),
        &b,
    )?;
    let mut twisted = AlgebraicStructure::new(
        &format!("{}^σ", h.name()),
        h.space().clone(),
        mul_twisted,
        h.unit().clone(),
        h.comul().clone(),
        h.counit().clone(),
    )?;

    let base = h.clone().as_ref().clone().with_derived_divisions()?;
    let base = Arc::new(base);
    let bb = Binding::new()
        .with_structure("H", &base)
        .with_map("sigma", &cocycle.sigma)
        .with_map("sigma_inv", &cocycle.sigma_inv);

    let mut aux_left = None;
    if base.ldiv().is_some() {
        // Precursor: the derived antipode must satisfy λ ∗ id = ε⊗η.
        let div_lanti = || comp([crate::expr::ldiv("H"), tens([id("H"), unit("H")])]);
        let precursor = laws::check_law_id(
            "conv-div-antipode-id",
            &Binding::new().with_structure("H", &base),
        )?;
        if !precursor.pass {
            return Err(Error::PrecursorLawFails("λ ∗ id = ε⊗η".into()));
        }
        let f = materialize(
            &comp([slot("sigma"), tens([id("H"), div_lanti()]), comul("H")]),
            &bb,
        )?;
        let f_inv = materialize(
            &comp([slot("sigma_inv"), tens([div_lanti(), id("H")]), comul("H")]),
            &bb,
        )?;
        let aux_binding = Binding::new()
            .with_structure("H", &base)
            .with_map("fa", &f)
            .with_map("fa_inv", &f_inv);
        for law in [
            "aux-left-conv-right",
            "aux-left-conv-left",
            "aux-left-unit",
            "aux-left-inv-unit",
        ] {
            let r = laws::check_law_id(law, &aux_binding)?;
            if !r.pass {
                return Err(Error::LawFails {
                    law: r.law,
                    witness: r.witness.map(|w| w.input).unwrap_or_default(),
                });
            }
        }
        let ldiv_twisted = materialize(
            &comp([
                lit(twisted.mul()),
                tens([slot("fa"), div_lanti(), slot("fa_inv"), id("H")]),
                tens([id("H"), comul("H"), id("H")]),
                tens([comul("H"), id("H")]),
            ]),
            &aux_binding,
        )?;
        twisted = twisted.with_ldiv(ldiv_twisted);
        aux_left = Some((f, f_inv));
    }

    let mut aux_right = None;
    if base.rdiv().is_some() {
        let div_ranti = || comp([crate::expr::rdiv("H"), tens([unit("H"), id("H")])]);
        let precursor = laws::check_law_id(
            "conv-id-div-rantipode",
            &Binding::new().with_structure("H", &base),
        )?;
        if !precursor.pass {
            return Err(Error::PrecursorLawFails("id ∗ ϱ = ε⊗η".into()));
        }
        let g = materialize(
            &comp([slot("sigma_inv"), tens([div_ranti(), id("H")]), comul("H")]),
            &bb,
        )?;
        let g_inv = materialize(
            &comp([slot("sigma"), tens([id("H"), div_ranti()]), comul("H")]),
            &bb,
        )?;
        let aux_binding = Binding::new()
            .with_structure("H", &base)
            .with_map("ga", &g)
            .with_map("ga_inv", &g_inv);
        for law in [
            "aux-right-conv-right",
            "aux-right-conv-left",
            "aux-right-unit",
            "aux-right-inv-unit",
        ] {
            let r = laws::check_law_id(law, &aux_binding)?;
            if !r.pass {
                return Err(Error::LawFails {
                    law: r.law,
                    witness: r.witness.map(|w| w.input).unwrap_or_default(),
                });
            }
        }
        let rdiv_twisted = materialize(
            &comp([
                lit(twisted.mul()),
                tens([id("H"), slot("ga_inv"), div_ranti(), slot("ga")]),
                tens([id("H"), comul("H"), id("H")]),
                tens([id("H"), comul("H")]),
            ]),
            &aux_binding,
        )?;
        twisted = twisted.with_rdiv(rdiv_twisted);
        aux_right = Some((g, g_inv));
    }

    // Antipodes from the twisted divisions, following the base class.
    let idh = LinMap::identity(h.field(), &[h.space().clone()]);
    let suite = match base.class() {
        Some(StructureClass::LeftHqg) => {
            let lam = twisted.ldiv().unwrap().compose(&idh.tensor(h.unit()))?;
            twisted = twisted.with_lantipode(lam);
            "left-hqg"
        }
        Some(StructureClass::RightHqg) => {
            let rho = twisted.rdiv().unwrap().compose(&h.unit().tensor(&idh))?;
            twisted = twisted.with_rantipode(rho);
            "right-hqg"
        }
        Some(StructureClass::Hqg) | Some(StructureClass::HopfAlgebra) => {
            let lam = twisted.ldiv().unwrap().compose(&idh.tensor(h.unit()))?;
            let rho = twisted.rdiv().unwrap().compose(&h.unit().tensor(&idh))?;
            twisted = twisted.with_lantipode(lam).with_rantipode(rho);
            "hqg"
        }
        _ => "bimonoid",
    };
    // A twist of an associative structure stays associative; certify the
    // stronger class when it holds.
    let (twisted, reports) = if base.class() == Some(StructureClass::HopfAlgebra) {
        let (t1, r1) = laws::classify(twisted.clone(), "hopf-algebra")?;
        if laws::all_pass(&r1) {
            (t1, r1)
        } else {
            laws::classify(twisted, suite)?
        }
    } else {
        laws::classify(twisted, suite)?
    };
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

    // The twisted-division interchange identities, including the
    // cocommutative shortcut.
    let twisted_arc = Arc::new(twisted);
    let mut deformed_laws: Vec<&str> = Vec::new();
    if aux_left.is_some() {
        deformed_laws.extend([
            "deformed-ldiv-antipode-form",
            "deformed-ldiv-factor",
            "deformed-ldiv-shift",
        ]);
    }
    if aux_right.is_some() {
        deformed_laws.extend([
            "deformed-rdiv-antipode-form",
            "deformed-rdiv-factor",
            "deformed-rdiv-shift",
        ]);
    }
    let cocommutative = laws::check_law_id(
        "comul-cocommutative",
        &Binding::new().with_structure("H", &base),
    )?
    .pass;
    if cocommutative {
        if aux_left.is_some() {
            deformed_laws.push("deformed-ldiv-cocommutative");
        }
        if aux_right.is_some() {
            deformed_laws.push("deformed-rdiv-cocommutative");
        }
    }
    let mut db = Binding::new()
        .with_structure("H", &base)
        .with_structure("Hs", &twisted_arc);
    if let Some((f, f_inv)) = &aux_left {
        db = db.with_map("fa", f).with_map("fa_inv", f_inv);
    }
    if let Some((g, g_inv)) = &aux_right {
        db = db.with_map("ga", g).with_map("ga_inv", g_inv);
    }
    for law in deformed_laws {
        let r = laws::check_law_id(law, &db)?;
        if !r.pass {
            return Err(Error::LawFails {
                law: r.law,
                witness: r.witness.map(|w| w.input).unwrap_or_default(),
            });
        }
    }

    Ok(DeformOutcome {
        structure: twisted_arc,
        aux_left,
        aux_right,
        reports,
    })
}
