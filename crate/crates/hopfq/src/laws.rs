//! The identity catalog and the exact checker.
//!
//! Every law is data: a pair of composition trees over named slots. A law is
//! checked by evaluating both sides on every basis vector of the (common)
//! domain and comparing exactly; the first failing basis index becomes the
//! witness. Named suites bundle the laws that define each structure class.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraicStructure, StructureClass};
use crate::error::{Error, Result};
use crate::expr::{CompiledExpr,
    comp, comul, comul_pair, comul_pow, counit, id, id_k, lanti, ldiv, mul, mul_pow, perm, ranti,
    rdiv, slot, sw, tens, unit, Binding, Expr,
};
use crate::space::{index_label, split_index, total_dim};

/// What a law slot must be bound to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlotKind {
    Structure,
    Space,
    Map,
}

/// One identity: two expressions that must elaborate to equal maps.
#[derive(Clone, Debug)]
pub struct Law {
    pub id: &'static str,
    pub slots: Vec<(&'static str, SlotKind)>,
    pub lhs: Expr,
    pub rhs: Expr,
}

/// Failing basis index together with both evaluations.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Witness {
    pub input_index: Vec<usize>,
    pub input: String,
    pub lhs: Vec<(String, String)>,
    pub rhs: Vec<(String, String)>,
}

/// Outcome of checking one law.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LawReport {
    pub law: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Set when the law could not be evaluated (e.g. a missing antipode);
    /// such a report counts as a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
}

impl LawReport {
    fn passed(id: &str) -> Self {
        LawReport {
            law: id.to_string(),
            pass: true,
            witness: None,
            problem: None,
        }
    }

    fn unevaluable(id: &str, why: String) -> Self {
        LawReport {
            law: id.to_string(),
            pass: false,
            witness: None,
            problem: Some(why),
        }
    }
}

fn law(id: &'static str, slots: &[(&'static str, SlotKind)], lhs: Expr, rhs: Expr) -> Law {
    Law {
        id,
        slots: slots.to_vec(),
        lhs,
        rhs,
    }
}

const S: SlotKind = SlotKind::Structure;
const P: SlotKind = SlotKind::Space;
const M: SlotKind = SlotKind::Map;

/// Checks one law against a binding, returning the report.
///
/// Shape errors (the binding does not fit the law) surface as `Err`; a
/// missing optional map yields an unevaluable (failing) report.
pub fn check_law(law: &Law, binding: &Binding) -> Result<LawReport> {
    let compile = |e| match CompiledExpr::compile(e, binding) {
        Ok(c) => Ok(Ok(c)),
        Err(Error::MissingMap { name, what }) => {
            Ok(Err(format!("structure {name} has no {what}")))
        }
        Err(e) => Err(e),
    };
    let lhs = match compile(&law.lhs)? {
        Ok(c) => c,
        Err(why) => return Ok(LawReport::unevaluable(law.id, why)),
    };
    let rhs = match compile(&law.rhs)? {
        Ok(c) => c,
        Err(why) => return Ok(LawReport::unevaluable(law.id, why)),
    };
    let (ld, lc) = (lhs.domain().to_vec(), lhs.codomain().to_vec());
    if lhs.dom_dim() != rhs.dom_dim()
        || total_dim(&lc) != total_dim(rhs.codomain())
    {
        return Err(Error::ShapeMismatch(format!(
            "law {}: sides have different shapes",
            law.id
        )));
    }
    for idx in 0..total_dim(&ld) {
        let lv = lhs.eval_basis(idx);
        let rv = rhs.eval_basis(idx);
        if lv != rv {
            let render = |v: &crate::linmap::SparseVec| {
                v.iter()
                    .map(|(o, s)| (index_label(&lc, *o), s.render()))
                    .collect::<Vec<_>>()
            };
            return Ok(LawReport {
                law: law.id.to_string(),
                pass: false,
                witness: Some(Witness {
                    input_index: split_index(&ld, idx),
                    input: index_label(&ld, idx),
                    lhs: render(&lv),
                    rhs: render(&rv),
                }),
                problem: None,
            });
        }
    }
    Ok(LawReport::passed(law.id))
}

/// Looks a law up by id.
pub fn law_by_id(id: &str) -> Result<&'static Law> {
    catalog()
        .iter()
        .find(|l| l.id == id)
        .ok_or_else(|| Error::Unknown {
            kind: "law".into(),
            name: id.to_string(),
        })
}

/// Checks a law by id.
pub fn check_law_id(id: &str, binding: &Binding) -> Result<LawReport> {
    check_law(law_by_id(id)?, binding)
}

/// Runs a whole suite; reports come back in catalog order of the suite.
pub fn verify_suite(binding: &Binding, suite: &str) -> Result<Vec<LawReport>> {
    let ids = suite_laws(suite).ok_or_else(|| Error::Unknown {
        kind: "suite".into(),
        name: suite.to_string(),
    })?;
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        out.push(check_law_id(id, binding)?);
    }
    Ok(out)
}

pub fn all_pass(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// First failing report, if any.
pub fn first_failure(reports: &[LawReport]) -> Option<&LawReport> {
    reports.iter().find(|r| !r.pass)
}

/// Binding for a structure-only suite: slot `H`, divisions derived from
/// antipodes when absent.
pub fn structure_binding(s: &AlgebraicStructure) -> Result<Binding> {
    let s = s.clone().with_derived_divisions()?;
    Ok(Binding::new().with_structure("H", &Arc::new(s)))
}

/// Verifies a structure suite and returns the class it certifies, if any.
///
/// The class flag is only set by callers when every law passed.
pub fn verify_structure(
    s: &AlgebraicStructure,
    suite: &str,
) -> Result<(Vec<LawReport>, Option<StructureClass>)> {
    let binding = structure_binding(s)?;
    let reports = verify_suite(&binding, suite)?;
    let class = if all_pass(&reports) {
        StructureClass::parse(suite)
    } else {
        None
    };
    Ok((reports, class))
}

/// Verifies a suite and consumes the structure, stamping the class on success.
pub fn classify(s: AlgebraicStructure, suite: &str) -> Result<(AlgebraicStructure, Vec<LawReport>)> {
    let (reports, class) = verify_structure(&s, suite)?;
    let s = s.with_derived_divisions()?;
    Ok(match class {
        Some(c) => (s.with_class(c), reports),
        None => (s, reports),
    })
}

/// Tries the structure suites from strongest to weakest and certifies the
/// first one that passes in full. Returns the suite name that was certified
/// (`"unverified"` when even the bimonoid laws fail) and its reports.
pub fn classify_best(
    s: AlgebraicStructure,
) -> Result<(AlgebraicStructure, &'static str, Vec<LawReport>)> {
    for suite in ["hopf-algebra", "hqg", "left-hqg", "right-hqg", "bimonoid"] {
        let (reports, class) = verify_structure(&s, suite)?;
        if all_pass(&reports) {
            let s = s.with_derived_divisions()?;
            return Ok(match class {
                Some(c) => (s.with_class(c), suite, reports),
                None => (s, suite, reports),
            });
        }
    }
    let (reports, _) = verify_structure(&s, "bimonoid")?;
    Ok((s, "unverified", reports))
}

/// Law ids of a named suite, in report order.
pub fn suite_laws(name: &str) -> Option<Vec<&'static str>> {
    const BIMONOID: &[&str] = &[
        "mul-unit-right",
        "mul-unit-left",
        "comul-counit-right",
        "comul-counit-left",
        "comul-coassoc",
        "counit-unit",
        "counit-mul",
        "comul-unit",
        "comul-mul",
    ];
    const LEFT_DIVISION: &[&str] = &[
        "ldiv-cancel",
        "ldiv-recover",
        "ldiv-translation-comul",
        "ldiv-comul-collapse",
        "conv-id-div-antipode",
        "ldiv-unit",
        "counit-ldiv",
        "div-antipode-counit",
        "div-antipode-unit",
        "ldiv-comul",
        "div-antipode-anticomul",
    ];
    const RIGHT_DIVISION: &[&str] = &[
        "rdiv-cancel",
        "rdiv-recover",
        "rdiv-translation-comul",
        "rdiv-comul-collapse",
        "conv-div-rantipode-id",
        "rdiv-unit",
        "counit-rdiv",
        "div-rantipode-counit",
        "div-rantipode-unit",
        "rdiv-comul",
        "div-rantipode-anticomul",
    ];
    const LEFT_HQG_EXTRA: &[&str] = &[
        "lhqg-cancel-1",
        "lhqg-cancel-2",
        "conv-lantipode-id",
        "conv-id-lantipode",
        "ldiv-from-antipode",
        "lantipode-matches-ldiv",
        "lantipode-counit",
        "lantipode-unit",
        "lantipode-anticomul",
    ];
    const RIGHT_HQG_EXTRA: &[&str] = &[
        "rhqg-cancel-1",
        "rhqg-cancel-2",
        "conv-id-rantipode",
        "conv-rantipode-id",
        "rdiv-from-antipode",
        "rantipode-matches-rdiv",
        "rantipode-counit",
        "rantipode-unit",
        "rantipode-anticomul",
    ];
    const HQG_EXTRA: &[&str] = &["antipode-antimul", "antipode-two-sided"];
    const COCYCLE: &[&str] = &[
        "cocycle-conv-right",
        "cocycle-conv-left",
        "cocycle-partial",
        "cocycle-assoc",
        "cocycle-unit-slice-left",
        "cocycle-unit-slice-right",
        "cocycle-normal-left",
        "cocycle-normal-right",
        "cocycle-mixed-1",
        "cocycle-mixed-2",
        "cocycle-inv-partial",
        "cocycle-mixed-1-flat",
        "cocycle-mixed-2-flat",
        "cocycle-inv-assoc",
    ];
    const SKEW_PAIRING: &[&str] = &[
        "pairing-mul-left",
        "skew-pairing-mul-right",
        "skew-pairing-mul-right-swapped",
        "pairing-counit-right",
        "pairing-counit-left",
        "pairing-conv-right",
        "pairing-conv-left",
        "tauinv-unit-left",
        "tauinv-unit-right",
        "tauinv-mul-right",
        "tau-antipode-pair",
        "tauinv-antipode-pair",
    ];
    const QUASITRIANGULAR: &[&str] = &[
        "qt-comul-left",
        "qt-comul-right",
        "qt-intertwine",
        "qt-counit-left",
        "qt-counit-right",
        "qt-conv-rs",
        "qt-conv-sr",
        "qt-conv-st",
        "qt-conv-ts",
        "qt-hexagon",
    ];
    const LEFT_MODULE_COMONOID: &[&str] = &[
        "qmod-unit",
        "qmod-cancel-1",
        "qmod-cancel-2",
        "module-assoc",
        "module-comonoid-counit",
        "module-comonoid-comul",
    ];
    const RIGHT_MODULE_COMONOID: &[&str] = &[
        "rmod-unit",
        "rmod-assoc",
        "rmod-comonoid-counit",
        "rmod-comonoid-comul",
    ];
    const MAJID: &[&str] = &[
        "majid-unit-a",
        "majid-unit-h",
        "majid-compat",
        "majid-left-antipode-mul",
        "majid-left-cancel-1",
        "majid-left-cancel-2",
        "majid-right-antipode-mul",
        "majid-right-cancel-1",
        "majid-right-cancel-2",
    ];
    const YD_MODULE: &[&str] = &[
        "qmod-unit",
        "qmod-cancel-1",
        "qmod-cancel-2",
        "module-assoc",
        "comod-counit",
        "comod-coassoc",
        "yd-b1",
        "yd-b2",
        "yd-b3",
    ];
    const BRAIDED_EXTRA: &[&str] = &[
        "module-magma-unit",
        "module-magma-mul",
        "module-comonoid-counit",
        "module-comonoid-comul",
        "comod-magma-unit",
        "comod-magma-mul",
        "comod-comonoid-counit",
        "comod-comonoid-comul",
        "braided-mul-unit-right",
        "braided-mul-unit-left",
        "braided-comul-counit-right",
        "braided-comul-counit-left",
        "braided-comul-coassoc",
        "braided-counit-unit",
        "braided-counit-mul",
        "braided-comul-unit",
        "braided-comul-mul",
        "braided-antipode-1a",
        "braided-antipode-1b",
        "braided-antipode-2a",
        "braided-antipode-2b",
    ];
    const STRONG_PROJECTION: &[&str] = &[
        "proj-f-unit",
        "proj-f-mul",
        "proj-f-counit",
        "proj-f-comul",
        "proj-g-unit",
        "proj-g-mul",
        "proj-g-counit",
        "proj-g-comul",
        "proj-section",
        "proj-q-idempotent",
        "proj-q-mul-absorb",
        "strong-mixed-1",
        "strong-mixed-2",
        "strong-mixed-3",
        "strong-mixed-1q",
        "strong-mixed-2q",
        "strong-mixed-3q",
        "proj-split-factor",
        "proj-split-section",
    ];
    const MORPHISM: &[&str] = &["mor-unit", "mor-mul", "mor-counit", "mor-comul"];

    let cat = |parts: &[&[&'static str]]| -> Vec<&'static str> {
        parts.iter().flat_map(|p| p.iter().copied()).collect()
    };
    Some(match name {
        "bimonoid" => cat(&[BIMONOID]),
        "left-division" => cat(&[LEFT_DIVISION]),
        "right-division" => cat(&[RIGHT_DIVISION]),
        "left-hqg" => cat(&[BIMONOID, LEFT_DIVISION, LEFT_HQG_EXTRA]),
        "right-hqg" => cat(&[BIMONOID, RIGHT_DIVISION, RIGHT_HQG_EXTRA]),
        "hqg" => cat(&[
            BIMONOID,
            LEFT_DIVISION,
            LEFT_HQG_EXTRA,
            RIGHT_DIVISION,
            RIGHT_HQG_EXTRA,
            HQG_EXTRA,
        ]),
        "hopf-algebra" => cat(&[
            BIMONOID,
            LEFT_DIVISION,
            LEFT_HQG_EXTRA,
            RIGHT_DIVISION,
            RIGHT_HQG_EXTRA,
            HQG_EXTRA,
            &["mul-assoc"],
        ]),
        "cocycle" => cat(&[COCYCLE]),
        "skew-pairing" => cat(&[SKEW_PAIRING]),
        "quasitriangular" => cat(&[QUASITRIANGULAR]),
        "left-module-comonoid" => cat(&[LEFT_MODULE_COMONOID]),
        "right-module-comonoid" => cat(&[RIGHT_MODULE_COMONOID]),
        "majid-conditions" => cat(&[MAJID]),
        "yd-module" => cat(&[YD_MODULE]),
        "braided-hqg" => cat(&[YD_MODULE, BRAIDED_EXTRA]),
        "strong-projection" => cat(&[STRONG_PROJECTION]),
        "hqg-morphism" => cat(&[MORPHISM, &["mor-antipode"]]),
        _ => return None,
    })
}

/// Suites a bare structure (slot `H`) can be verified against.
pub const STRUCTURE_SUITES: &[&str] = &[
    "bimonoid",
    "left-division",
    "right-division",
    "left-hqg",
    "right-hqg",
    "hqg",
    "hopf-algebra",
];

/// The full catalog.
pub fn catalog() -> &'static Vec<Law> {
    static CATALOG: OnceLock<Vec<Law>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

// Short local aliases used when building expressions.
fn h() -> &'static str {
    "H"
}

/// Permutation of four copies of the `H` slot.
fn perm4(p: &[usize]) -> Expr {
    perm(&["H", "H", "H", "H"], p)
}

/// `λ = l ∘ (H⊗η)` as an expression from the division alone.
fn div_lantipode() -> Expr {
    comp([ldiv(h()), tens([id(h()), unit(h())])])
}

/// `ϱ = r ∘ (η⊗H)`.
fn div_rantipode() -> Expr {
    comp([rdiv(h()), tens([unit(h()), id(h())])])
}

/// Convolution of two endo-expressions of the structure slot `H`.
fn conv_h(f: Expr, g: Expr) -> Expr {
    comp([mul(h()), tens([f, g]), comul(h())])
}

/// `ε⊗η : H → H`.
fn conv_unit_h() -> Expr {
    tens([counit(h()), unit(h())])
}

/// Convolution of functionals on `H^n`.
fn conv_fun(n: usize, f: Expr, g: Expr) -> Expr {
    comp([tens([f, g]), comul_pow(h(), n)])
}

/// The four boundary functionals of a binary functional slot on `H⊗H`.
fn d1(s: &str) -> Expr {
    tens([counit(h()), slot(s)])
}
fn d2(s: &str) -> Expr {
    comp([slot(s), tens([mul(h()), id(h())])])
}
fn d3(s: &str) -> Expr {
    comp([slot(s), tens([id(h()), mul(h())])])
}
fn d4(s: &str) -> Expr {
    tens([slot(s), counit(h())])
}

/// `(x ⊗ μ_{H⊗H} ⊗ y)`-style middle product over six factors of `H`.
fn mid_mul2() -> Expr {
    tens([id(h()), mul_pow(h(), 2), id(h())])
}

/// `δ_{H⊗A}` over two different structure slots.
fn comul_ha() -> Expr {
    comul_pair("H", "A")
}

/// Left antipode of the double crossproduct, from actions:
/// `(φ_A ⊗ φ_H) ∘ δ_{H⊗A} ∘ (λ_H ⊗ λ_A) ∘ c_{A,H}`.
fn dcp_lantipode() -> Expr {
    comp([
        tens([slot("phiA"), slot("phiH")]),
        comul_ha(),
        tens([lanti("H"), lanti("A")]),
        sw("A", "H"),
    ])
}

fn dcp_rantipode() -> Expr {
    comp([
        tens([slot("phiA"), slot("phiH")]),
        comul_ha(),
        tens([ranti("H"), ranti("A")]),
        sw("A", "H"),
    ])
}

/// Codiagonal action of `H` on `M⊗M`:
/// `(φ⊗φ)∘(H⊗c_{H,M}⊗M)∘(δ_H⊗M⊗M)`.
fn phi_mm() -> Expr {
    comp([
        tens([slot("phi"), slot("phi")]),
        tens([id("H"), sw("H", "M"), id("M")]),
        tens([comul("H"), id("M"), id("M")]),
    ])
}

/// Codiagonal coaction on `M⊗M`:
/// `(μ_H⊗M⊗M)∘(H⊗c_{M,H}⊗M)∘(ρ⊗ρ)`.
fn rho_mm() -> Expr {
    comp([
        tens([mul("H"), id("M"), id("M")]),
        tens([id("H"), sw("M", "H"), id("M")]),
        tens([slot("rho"), slot("rho")]),
    ])
}

/// Yetter-Drinfeld braiding `t_{M,M} = (φ⊗M)∘(H⊗c_{M,M})∘(ρ⊗M)`.
fn braiding_mm() -> Expr {
    comp([
        tens([slot("phi"), id("M")]),
        tens([id("H"), sw("M", "M")]),
        tens([slot("rho"), id("M")]),
    ])
}

fn build_catalog() -> Vec<Law> {
    let mut laws: Vec<Law> = Vec::new();
    let hs: &[(&str, SlotKind)] = &[("H", S)];

    // --- unital magma + comonoid + compatibility ---
    laws.push(law(
        "mul-unit-right",
        hs,
        comp([mul(h()), tens([id(h()), unit(h())])]),
        id(h()),
    ));
    laws.push(law(
        "mul-unit-left",
        hs,
        comp([mul(h()), tens([unit(h()), id(h())])]),
        id(h()),
    ));
    laws.push(law(
        "comul-counit-right",
        hs,
        comp([tens([id(h()), counit(h())]), comul(h())]),
        id(h()),
    ));
    laws.push(law(
        "comul-counit-left",
        hs,
        comp([tens([counit(h()), id(h())]), comul(h())]),
        id(h()),
    ));
    laws.push(law(
        "comul-coassoc",
        hs,
        comp([tens([comul(h()), id(h())]), comul(h())]),
        comp([tens([id(h()), comul(h())]), comul(h())]),
    ));
    laws.push(law(
        "counit-unit",
        hs,
        comp([counit(h()), unit(h())]),
        id_k(),
    ));
    laws.push(law(
        "counit-mul",
        hs,
        comp([counit(h()), mul(h())]),
        tens([counit(h()), counit(h())]),
    ));
    laws.push(law(
        "comul-unit",
        hs,
        comp([comul(h()), unit(h())]),
        tens([unit(h()), unit(h())]),
    ));
    laws.push(law(
        "comul-mul",
        hs,
        comp([comul(h()), mul(h())]),
        comp([tens([mul(h()), mul(h())]), comul_pow(h(), 2)]),
    ));
    laws.push(law(
        "mul-assoc",
        hs,
        comp([mul(h()), tens([mul(h()), id(h())])]),
        comp([mul(h()), tens([id(h()), mul(h())])]),
    ));
    laws.push(law(
        "comul-cocommutative",
        hs,
        comul(h()),
        comp([sw(h(), h()), comul(h())]),
    ));
    // Linearized Bol identities: the repeated variable is duplicated by the
    // coproduct, so on group-like bases these restrict to the table laws.
    // ((x·y₁)·z)·y₂ = x·((y₁·z)·y₂)
    let spread_y = || {
        comp([
            perm4(&[0, 1, 3, 2]),
            tens([id(h()), comul(h()), id(h())]),
        ])
    };
    laws.push(law(
        "mul-right-bol",
        hs,
        comp([
            mul(h()),
            tens([comp([mul(h()), tens([mul(h()), id(h())])]), id(h())]),
            spread_y(),
        ]),
        comp([
            mul(h()),
            tens([id(h()), comp([mul(h()), tens([mul(h()), id(h())])])]),
            spread_y(),
        ]),
    ));
    // y₁·(z·(y₂·x)) = (y₁·(z·y₂))·x  on inputs (y, z, x)
    let spread_y_first = || {
        comp([
            perm4(&[0, 2, 1, 3]),
            tens([comul(h()), id(h()), id(h())]),
        ])
    };
    laws.push(law(
        "mul-left-bol",
        hs,
        comp([
            mul(h()),
            tens([id(h()), comp([mul(h()), tens([id(h()), mul(h())])])]),
            spread_y_first(),
        ]),
        comp([
            mul(h()),
            tens([comp([mul(h()), tens([id(h()), mul(h())])]), id(h())]),
            spread_y_first(),
        ]),
    ));

    // --- left division and its consequences ---
    laws.push(law(
        "ldiv-cancel",
        hs,
        comp([
            ldiv(h()),
            tens([id(h()), mul(h())]),
            tens([comul(h()), id(h())]),
        ]),
        tens([counit(h()), id(h())]),
    ));
    laws.push(law(
        "ldiv-recover",
        hs,
        comp([
            mul(h()),
            tens([id(h()), ldiv(h())]),
            tens([comul(h()), id(h())]),
        ]),
        tens([counit(h()), id(h())]),
    ));
    laws.push(law(
        "ldiv-translation-comul",
        hs,
        comp([
            tens([id(h()), ldiv(h())]),
            tens([comul(h()), id(h())]),
            comul(h()),
        ]),
        tens([id(h()), unit(h())]),
    ));
    laws.push(law(
        "ldiv-comul-collapse",
        hs,
        comp([ldiv(h()), comul(h())]),
        conv_unit_h(),
    ));
    laws.push(law(
        "conv-id-div-antipode",
        hs,
        conv_h(id(h()), div_lantipode()),
        conv_unit_h(),
    ));
    laws.push(law(
        "ldiv-unit",
        hs,
        comp([ldiv(h()), tens([unit(h()), id(h())])]),
        id(h()),
    ));
    laws.push(law(
        "counit-ldiv",
        hs,
        comp([counit(h()), ldiv(h())]),
        tens([counit(h()), counit(h())]),
    ));
    laws.push(law(
        "div-antipode-counit",
        hs,
        comp([counit(h()), div_lantipode()]),
        counit(h()),
    ));
    laws.push(law(
        "div-antipode-unit",
        hs,
        comp([div_lantipode(), unit(h())]),
        unit(h()),
    ));
    laws.push(law(
        "ldiv-comul",
        hs,
        comp([comul(h()), ldiv(h())]),
        comp([
            tens([ldiv(h()), ldiv(h())]),
            tens([id(h()), sw(h(), h()), id(h())]),
            tens([comp([sw(h(), h()), comul(h())]), comul(h())]),
        ]),
    ));
    laws.push(law(
        "div-antipode-anticomul",
        hs,
        comp([comul(h()), div_lantipode()]),
        comp([
            tens([div_lantipode(), div_lantipode()]),
            sw(h(), h()),
            comul(h()),
        ]),
    ));
    // Holds for Bol-type loops and every left Hopf quasigroup, but not for an
    // arbitrary division; it is the hypothesis of the auxiliary functionals.
    laws.push(law(
        "conv-div-antipode-id",
        hs,
        conv_h(div_lantipode(), id(h())),
        conv_unit_h(),
    ));

    // --- right division and its consequences ---
    laws.push(law(
        "rdiv-cancel",
        hs,
        comp([
            rdiv(h()),
            tens([mul(h()), id(h())]),
            tens([id(h()), comul(h())]),
        ]),
        tens([id(h()), counit(h())]),
    ));
    laws.push(law(
        "rdiv-recover",
        hs,
        comp([
            mul(h()),
            tens([rdiv(h()), id(h())]),
            tens([id(h()), comul(h())]),
        ]),
        tens([id(h()), counit(h())]),
    ));
    laws.push(law(
        "rdiv-translation-comul",
        hs,
        comp([
            tens([rdiv(h()), id(h())]),
            tens([id(h()), comul(h())]),
            comul(h()),
        ]),
        tens([unit(h()), id(h())]),
    ));
    laws.push(law(
        "rdiv-comul-collapse",
        hs,
        comp([rdiv(h()), comul(h())]),
        conv_unit_h(),
    ));
    laws.push(law(
        "conv-div-rantipode-id",
        hs,
        conv_h(div_rantipode(), id(h())),
        conv_unit_h(),
    ));
    laws.push(law(
        "rdiv-unit",
        hs,
        comp([rdiv(h()), tens([id(h()), unit(h())])]),
        id(h()),
    ));
    laws.push(law(
        "counit-rdiv",
        hs,
        comp([counit(h()), rdiv(h())]),
        tens([counit(h()), counit(h())]),
    ));
    laws.push(law(
        "div-rantipode-counit",
        hs,
        comp([counit(h()), div_rantipode()]),
        counit(h()),
    ));
    laws.push(law(
        "div-rantipode-unit",
        hs,
        comp([div_rantipode(), unit(h())]),
        unit(h()),
    ));
    laws.push(law(
        "rdiv-comul",
        hs,
        comp([comul(h()), rdiv(h())]),
        comp([
            tens([rdiv(h()), rdiv(h())]),
            tens([id(h()), sw(h(), h()), id(h())]),
            tens([comul(h()), comp([sw(h(), h()), comul(h())])]),
        ]),
    ));
    laws.push(law(
        "div-rantipode-anticomul",
        hs,
        comp([comul(h()), div_rantipode()]),
        comp([
            tens([div_rantipode(), div_rantipode()]),
            sw(h(), h()),
            comul(h()),
        ]),
    ));
    laws.push(law(
        "conv-id-div-rantipode",
        hs,
        conv_h(id(h()), div_rantipode()),
        conv_unit_h(),
    ));

    // --- left/right Hopf quasigroup antipode laws ---
    laws.push(law(
        "lhqg-cancel-1",
        hs,
        comp([
            mul(h()),
            tens([lanti(h()), mul(h())]),
            tens([comul(h()), id(h())]),
        ]),
        tens([counit(h()), id(h())]),
    ));
    laws.push(law(
        "lhqg-cancel-2",
        hs,
        comp([
            mul(h()),
            tens([id(h()), mul(h())]),
            tens([id(h()), lanti(h()), id(h())]),
            tens([comul(h()), id(h())]),
        ]),
        tens([counit(h()), id(h())]),
    ));
    laws.push(law(
        "conv-lantipode-id",
        hs,
        conv_h(lanti(h()), id(h())),
        conv_unit_h(),
    ));
    laws.push(law(
        "conv-id-lantipode",
        hs,
        conv_h(id(h()), lanti(h())),
        conv_unit_h(),
    ));
    laws.push(law(
        "ldiv-from-antipode",
        hs,
        ldiv(h()),
        comp([mul(h()), tens([lanti(h()), id(h())])]),
    ));
    laws.push(law(
        "lantipode-matches-ldiv",
        hs,
        lanti(h()),
        div_lantipode(),
    ));
    laws.push(law(
        "lantipode-counit",
        hs,
        comp([counit(h()), lanti(h())]),
        counit(h()),
    ));
    laws.push(law(
        "lantipode-unit",
        hs,
        comp([lanti(h()), unit(h())]),
        unit(h()),
    ));
    laws.push(law(
        "lantipode-anticomul",
        hs,
        comp([comul(h()), lanti(h())]),
        comp([tens([lanti(h()), lanti(h())]), sw(h(), h()), comul(h())]),
    ));
    laws.push(law(
        "rhqg-cancel-1",
        hs,
        comp([
            mul(h()),
            tens([mul(h()), id(h())]),
            tens([id(h()), ranti(h()), id(h())]),
            tens([id(h()), comul(h())]),
        ]),
        tens([id(h()), counit(h())]),
    ));
    laws.push(law(
        "rhqg-cancel-2",
        hs,
        comp([
            mul(h()),
            tens([mul(h()), ranti(h())]),
            tens([id(h()), comul(h())]),
        ]),
        tens([id(h()), counit(h())]),
    ));
    laws.push(law(
        "conv-id-rantipode",
        hs,
        conv_h(id(h()), ranti(h())),
        conv_unit_h(),
    ));
    laws.push(law(
        "conv-rantipode-id",
        hs,
        conv_h(ranti(h()), id(h())),
        conv_unit_h(),
    ));
    laws.push(law(
        "rdiv-from-antipode",
        hs,
        rdiv(h()),
        comp([mul(h()), tens([id(h()), ranti(h())])]),
    ));
    laws.push(law(
        "rantipode-matches-rdiv",
        hs,
        ranti(h()),
        div_rantipode(),
    ));
    laws.push(law(
        "rantipode-counit",
        hs,
        comp([counit(h()), ranti(h())]),
        counit(h()),
    ));
    laws.push(law(
        "rantipode-unit",
        hs,
        comp([ranti(h()), unit(h())]),
        unit(h()),
    ));
    laws.push(law(
        "rantipode-anticomul",
        hs,
        comp([comul(h()), ranti(h())]),
        comp([tens([ranti(h()), ranti(h())]), sw(h(), h()), comul(h())]),
    ));
    laws.push(law(
        "antipode-antimul",
        hs,
        comp([lanti(h()), mul(h())]),
        comp([mul(h()), tens([lanti(h()), lanti(h())]), sw(h(), h())]),
    ));
    laws.push(law("antipode-two-sided", hs, lanti(h()), ranti(h())));

    // --- two-cocycle laws (slots: H, sigma, sigma_inv) ---
    let cs: &[(&str, SlotKind)] = &[("H", S), ("sigma", M), ("sigma_inv", M)];
    let eps2 = || tens([counit(h()), counit(h())]);
    laws.push(law(
        "cocycle-conv-right",
        cs,
        conv_fun(2, slot("sigma"), slot("sigma_inv")),
        eps2(),
    ));
    laws.push(law(
        "cocycle-conv-left",
        cs,
        conv_fun(2, slot("sigma_inv"), slot("sigma")),
        eps2(),
    ));
    laws.push(law(
        "cocycle-partial",
        cs,
        conv_fun(3, d1("sigma"), d3("sigma")),
        conv_fun(3, d4("sigma"), d2("sigma")),
    ));
    let twisted = |s: &str| comp([tens([slot(s), mul(h())]), comul_pow(h(), 2)]);
    laws.push(law(
        "cocycle-assoc",
        cs,
        comp([slot("sigma"), tens([id(h()), twisted("sigma")])]),
        comp([slot("sigma"), tens([twisted("sigma"), id(h())])]),
    ));
    let sig_lu = || comp([slot("sigma"), tens([unit(h()), id(h())])]);
    let sig_ru = || comp([slot("sigma"), tens([id(h()), unit(h())])]);
    let sig_uu = || comp([slot("sigma"), tens([unit(h()), unit(h())])]);
    laws.push(law(
        "cocycle-unit-slice-left",
        cs,
        comp([tens([sig_lu(), sig_lu()]), comul(h())]),
        tens([sig_uu(), sig_lu()]),
    ));
    laws.push(law(
        "cocycle-unit-slice-right",
        cs,
        comp([tens([sig_ru(), sig_ru()]), comul(h())]),
        tens([sig_ru(), sig_uu()]),
    ));
    laws.push(law("cocycle-normal-left", cs, sig_lu(), counit(h())));
    laws.push(law("cocycle-normal-right", cs, sig_ru(), counit(h())));
    laws.push(law(
        "cocycle-mixed-1",
        cs,
        conv_fun(3, d3("sigma"), d2("sigma_inv")),
        conv_fun(3, d1("sigma_inv"), d4("sigma")),
    ));
    laws.push(law(
        "cocycle-mixed-2",
        cs,
        conv_fun(3, d4("sigma_inv"), d1("sigma")),
        conv_fun(3, d2("sigma"), d3("sigma_inv")),
    ));
    laws.push(law(
        "cocycle-inv-partial",
        cs,
        conv_fun(3, d3("sigma_inv"), d1("sigma_inv")),
        conv_fun(3, d2("sigma_inv"), d4("sigma_inv")),
    ));
    let triple_split = || {
        comp([
            tens([id(h()), sw(h(), h()), sw(h(), h()), id(h())]),
            tens([comul(h()), comul(h()), comul(h())]),
        ])
    };
    laws.push(law(
        "cocycle-mixed-1-flat",
        cs,
        comp([
            tens([slot("sigma"), slot("sigma_inv")]),
            mid_mul2(),
            triple_split(),
        ]),
        comp([
            tens([slot("sigma"), slot("sigma_inv")]),
            tens([id(h()), comp([sw(h(), h()), comul(h())]), id(h())]),
        ]),
    ));
    // The four-fold convolution collapses to a two-term form once the
    // counits are absorbed.
    laws.push(law(
        "cocycle-mixed-2-flat",
        cs,
        conv_fun(3, d2("sigma"), d3("sigma_inv")),
        comp([
            tens([slot("sigma_inv"), slot("sigma")]),
            tens([id(h()), comul(h()), id(h())]),
        ]),
    ));
    let twisted_inv = || comp([tens([mul(h()), slot("sigma_inv")]), comul_pow(h(), 2)]);
    laws.push(law(
        "cocycle-inv-assoc",
        cs,
        comp([slot("sigma_inv"), tens([id(h()), twisted_inv()])]),
        comp([slot("sigma_inv"), tens([twisted_inv(), id(h())])]),
    ));

    // --- auxiliary deformation functionals (slots: H, fa/fa_inv, ga/ga_inv) ---
    let fs: &[(&str, SlotKind)] = &[("H", S), ("fa", M), ("fa_inv", M)];
    let gs: &[(&str, SlotKind)] = &[("H", S), ("ga", M), ("ga_inv", M)];
    laws.push(law(
        "aux-left-conv-right",
        fs,
        conv_fun(1, slot("fa"), slot("fa_inv")),
        counit(h()),
    ));
    laws.push(law(
        "aux-left-conv-left",
        fs,
        conv_fun(1, slot("fa_inv"), slot("fa")),
        counit(h()),
    ));
    laws.push(law(
        "aux-left-unit",
        fs,
        comp([slot("fa"), unit(h())]),
        id_k(),
    ));
    laws.push(law(
        "aux-left-inv-unit",
        fs,
        comp([slot("fa_inv"), unit(h())]),
        id_k(),
    ));
    laws.push(law(
        "aux-right-conv-right",
        gs,
        conv_fun(1, slot("ga"), slot("ga_inv")),
        counit(h()),
    ));
    laws.push(law(
        "aux-right-conv-left",
        gs,
        conv_fun(1, slot("ga_inv"), slot("ga")),
        counit(h()),
    ));
    laws.push(law(
        "aux-right-unit",
        gs,
        comp([slot("ga"), unit(h())]),
        id_k(),
    ));
    laws.push(law(
        "aux-right-inv-unit",
        gs,
        comp([slot("ga_inv"), unit(h())]),
        id_k(),
    ));

    // --- deformed division laws (slots: H base, Hs deformed, fa/fa_inv) ---
    let ds: &[(&str, SlotKind)] = &[("H", S), ("Hs", S), ("fa", M), ("fa_inv", M)];
    let dsr: &[(&str, SlotKind)] = &[("H", S), ("Hs", S), ("ga", M), ("ga_inv", M)];
    // l_{Hs}∘(H⊗η) = (fa ⊗ λ_H ⊗ fa_inv)∘(δ⊗H)∘δ
    let deformed_lanti = || comp([ldiv("Hs"), tens([id(h()), unit(h())])]);
    laws.push(law(
        "deformed-ldiv-antipode-form",
        ds,
        deformed_lanti(),
        comp([
            tens([slot("fa"), div_lantipode(), slot("fa_inv")]),
            tens([comul(h()), id(h())]),
            comul(h()),
        ]),
    ));
    laws.push(law(
        "deformed-ldiv-factor",
        ds,
        ldiv("Hs"),
        comp([mul("Hs"), tens([deformed_lanti(), id(h())])]),
    ));
    laws.push(law(
        "deformed-ldiv-shift",
        ds,
        comp([
            tens([slot("fa_inv"), ldiv("Hs")]),
            tens([comul(h()), id(h())]),
        ]),
        comp([
            mul("Hs"),
            tens([
                comp([tens([div_lantipode(), slot("fa_inv")]), comul(h())]),
                id(h()),
            ]),
        ]),
    ));
    laws.push(law(
        "deformed-ldiv-cocommutative",
        ds,
        deformed_lanti(),
        div_lantipode(),
    ));
    let deformed_ranti = || comp([rdiv("Hs"), tens([unit(h()), id(h())])]);
    laws.push(law(
        "deformed-rdiv-antipode-form",
        dsr,
        deformed_ranti(),
        comp([
            tens([slot("ga_inv"), div_rantipode(), slot("ga")]),
            tens([comul(h()), id(h())]),
            comul(h()),
        ]),
    ));
    laws.push(law(
        "deformed-rdiv-factor",
        dsr,
        rdiv("Hs"),
        comp([mul("Hs"), tens([id(h()), deformed_ranti()])]),
    ));
    laws.push(law(
        "deformed-rdiv-shift",
        dsr,
        comp([
            tens([rdiv("Hs"), slot("ga_inv")]),
            tens([id(h()), comul(h())]),
        ]),
        comp([
            mul("Hs"),
            tens([
                id(h()),
                comp([tens([slot("ga_inv"), div_rantipode()]), comul(h())]),
            ]),
        ]),
    ));
    laws.push(law(
        "deformed-rdiv-cocommutative",
        dsr,
        deformed_ranti(),
        div_rantipode(),
    ));

    // --- pairing laws (slots: A, H, tau, tau_inv) ---
    let ps: &[(&str, SlotKind)] = &[("A", S), ("H", S), ("tau", M), ("tau_inv", M)];
    let pair_split = |t1: &str, t2: &str| {
        comp([
            tens([slot(t1), slot(t2)]),
            tens([id("A"), sw("A", "H"), id("H")]),
        ])
    };
    laws.push(law(
        "pairing-mul-left",
        ps,
        comp([slot("tau"), tens([mul("A"), id("H")])]),
        comp([
            pair_split("tau", "tau"),
            tens([id("A"), id("A"), comul("H")]),
        ]),
    ));
    laws.push(law(
        "pairing-mul-right",
        ps,
        comp([slot("tau"), tens([id("A"), mul("H")])]),
        comp([
            pair_split("tau", "tau"),
            tens([comul("A"), id("H"), id("H")]),
        ]),
    ));
    laws.push(law(
        "skew-pairing-mul-right",
        ps,
        comp([slot("tau"), tens([id("A"), mul("H")])]),
        comp([
            pair_split("tau", "tau"),
            tens([comp([sw("A", "A"), comul("A")]), id("H"), id("H")]),
        ]),
    ));
    laws.push(law(
        "skew-pairing-mul-right-swapped",
        ps,
        comp([slot("tau"), tens([id("A"), mul("H")])]),
        comp([pair_split("tau", "tau"), tens([comul("A"), sw("H", "H")])]),
    ));
    laws.push(law(
        "pairing-counit-right",
        ps,
        comp([slot("tau"), tens([id("A"), unit("H")])]),
        counit("A"),
    ));
    laws.push(law(
        "pairing-counit-left",
        ps,
        comp([slot("tau"), tens([unit("A"), id("H")])]),
        counit("H"),
    ));
    let eps_ah = || tens([counit("A"), counit("H")]);
    laws.push(law(
        "pairing-conv-right",
        ps,
        comp([tens([slot("tau"), slot("tau_inv")]), comul_pair("A", "H")]),
        eps_ah(),
    ));
    laws.push(law(
        "pairing-conv-left",
        ps,
        comp([tens([slot("tau_inv"), slot("tau")]), comul_pair("A", "H")]),
        eps_ah(),
    ));
    laws.push(law(
        "tauinv-unit-left",
        ps,
        comp([slot("tau_inv"), tens([unit("A"), id("H")])]),
        counit("H"),
    ));
    laws.push(law(
        "tauinv-unit-right",
        ps,
        comp([slot("tau_inv"), tens([id("A"), unit("H")])]),
        counit("A"),
    ));
    laws.push(law(
        "tauinv-mul-right",
        ps,
        comp([slot("tau_inv"), tens([id("A"), mul("H")])]),
        comp([
            pair_split("tau_inv", "tau_inv"),
            tens([comul("A"), id("H"), id("H")]),
        ]),
    ));
    laws.push(law(
        "tau-antipode-pair",
        ps,
        slot("tau"),
        comp([slot("tau"), tens([lanti("A"), lanti("H")])]),
    ));
    laws.push(law(
        "tauinv-antipode-pair",
        ps,
        slot("tau_inv"),
        comp([slot("tau_inv"), tens([lanti("A"), lanti("H")])]),
    ));
    laws.push(law(
        "tauinv-mul-left",
        ps,
        comp([slot("tau_inv"), tens([mul("A"), id("H")])]),
        comp([
            pair_split("tau_inv", "tau_inv"),
            tens([id("A"), id("A"), comp([sw("H", "H"), comul("H")])]),
        ]),
    ));

    // --- quasitriangular laws (slots: H, R, S, T) ---
    let qs: &[(&str, SlotKind)] = &[("H", S), ("R", M), ("S", M), ("T", M)];
    laws.push(law(
        "qt-comul-left",
        qs,
        comp([tens([comul(h()), id(h())]), slot("R")]),
        comp([
            tens([id(h()), id(h()), mul(h())]),
            tens([id(h()), sw(h(), h()), id(h())]),
            tens([slot("R"), slot("R")]),
        ]),
    ));
    laws.push(law(
        "qt-comul-right",
        qs,
        comp([tens([id(h()), comul(h())]), slot("R")]),
        comp([
            tens([mul(h()), sw(h(), h())]),
            tens([id(h()), sw(h(), h()), id(h())]),
            tens([slot("R"), slot("R")]),
        ]),
    ));
    laws.push(law(
        "qt-intertwine",
        qs,
        comp([
            mul_pow(h(), 2),
            tens([comp([sw(h(), h()), comul(h())]), slot("R")]),
        ]),
        comp([mul_pow(h(), 2), tens([slot("R"), comul(h())])]),
    ));
    laws.push(law(
        "qt-counit-left",
        qs,
        comp([tens([counit(h()), id(h())]), slot("R")]),
        unit(h()),
    ));
    laws.push(law(
        "qt-counit-right",
        qs,
        comp([tens([id(h()), counit(h())]), slot("R")]),
        unit(h()),
    ));
    let unit2 = || tens([unit(h()), unit(h())]);
    let conv_k2 = |a: &str, b: &str| comp([mul_pow(h(), 2), tens([slot(a), slot(b)])]);
    laws.push(law("qt-conv-rs", qs, conv_k2("R", "S"), unit2()));
    laws.push(law("qt-conv-sr", qs, conv_k2("S", "R"), unit2()));
    laws.push(law("qt-conv-st", qs, conv_k2("S", "T"), unit2()));
    laws.push(law("qt-conv-ts", qs, conv_k2("T", "S"), unit2()));
    laws.push(law(
        "qt-hexagon",
        qs,
        comp([
            tens([mul(h()), id(h()), comp([mul(h()), sw(h(), h())])]),
            tens([
                id(h()),
                id(h()),
                comp([sw(h(), h()), tens([id(h()), mul(h())])]),
                id(h()),
            ]),
            tens([id(h()), sw(h(), h()), sw(h(), h()), id(h())]),
            tens([slot("R"), slot("R"), slot("R")]),
        ]),
        comp([
            tens([mul(h()), mul(h()), mul(h())]),
            tens([id(h()), sw(h(), h()), sw(h(), h()), id(h())]),
            tens([slot("R"), slot("R"), slot("R")]),
        ]),
    ));

    // --- left (quasi)module laws (slots: H, M, phi, carrier ops) ---
    let lm: &[(&str, SlotKind)] = &[("H", S), ("M", P), ("phi", M)];
    laws.push(law(
        "qmod-unit",
        lm,
        comp([slot("phi"), tens([unit("H"), id("M")])]),
        Expr::Id(vec![crate::expr::SpaceRef::Named("M".into())]),
    ));
    laws.push(law(
        "qmod-cancel-1",
        lm,
        comp([
            slot("phi"),
            tens([id("H"), slot("phi")]),
            tens([
                comp([tens([id("H"), lanti("H")]), comul("H")]),
                id("M"),
            ]),
        ]),
        tens([counit("H"), id("M")]),
    ));
    laws.push(law(
        "qmod-cancel-2",
        lm,
        comp([
            slot("phi"),
            tens([lanti("H"), slot("phi")]),
            tens([comul("H"), id("M")]),
        ]),
        tens([counit("H"), id("M")]),
    ));
    laws.push(law(
        "module-assoc",
        lm,
        comp([slot("phi"), tens([id("H"), slot("phi")])]),
        comp([slot("phi"), tens([mul("H"), id("M")])]),
    ));
    let lmm: &[(&str, SlotKind)] = &[("H", S), ("M", P), ("phi", M), ("mulM", M), ("unitM", M)];
    laws.push(law(
        "module-magma-unit",
        lmm,
        comp([slot("phi"), tens([id("H"), slot("unitM")])]),
        tens([counit("H"), slot("unitM")]),
    ));
    laws.push(law(
        "module-magma-mul",
        lmm,
        comp([slot("mulM"), phi_mm()]),
        comp([slot("phi"), tens([id("H"), slot("mulM")])]),
    ));
    let lmc: &[(&str, SlotKind)] = &[
        ("H", S),
        ("M", P),
        ("phi", M),
        ("comulM", M),
        ("counitM", M),
    ];
    laws.push(law(
        "module-comonoid-counit",
        lmc,
        comp([slot("counitM"), slot("phi")]),
        tens([counit("H"), slot("counitM")]),
    ));
    // The coproduct of H inside the diagonal action does the splitting, so
    // only the carrier coproduct appears on the inside.
    laws.push(law(
        "module-comonoid-comul",
        lmc,
        comp([slot("comulM"), slot("phi")]),
        comp([phi_mm(), tens([id("H"), slot("comulM")])]),
    ));

    // --- right module laws (slots: A, N, psi, carrier ops) ---
    let rm: &[(&str, SlotKind)] = &[("A", S), ("N", P), ("psi", M)];
    laws.push(law(
        "rmod-unit",
        rm,
        comp([slot("psi"), tens([id("N"), unit("A")])]),
        Expr::Id(vec![crate::expr::SpaceRef::Named("N".into())]),
    ));
    laws.push(law(
        "rmod-assoc",
        rm,
        comp([slot("psi"), tens([slot("psi"), id("A")])]),
        comp([slot("psi"), tens([id("N"), mul("A")])]),
    ));
    let psi_nn = || {
        comp([
            tens([slot("psi"), slot("psi")]),
            tens([id("N"), sw("N", "A"), id("A")]),
            tens([id("N"), id("N"), comul("A")]),
        ])
    };
    let rmm: &[(&str, SlotKind)] = &[("A", S), ("N", P), ("psi", M), ("mulN", M), ("unitN", M)];
    laws.push(law(
        "rmod-magma-unit",
        rmm,
        comp([slot("psi"), tens([slot("unitN"), id("A")])]),
        tens([slot("unitN"), counit("A")]),
    ));
    laws.push(law(
        "rmod-magma-mul",
        rmm,
        comp([slot("psi"), tens([slot("mulN"), id("A")])]),
        comp([slot("mulN"), psi_nn()]),
    ));
    let rmc: &[(&str, SlotKind)] = &[
        ("A", S),
        ("N", P),
        ("psi", M),
        ("comulN", M),
        ("counitN", M),
    ];
    laws.push(law(
        "rmod-comonoid-counit",
        rmc,
        comp([slot("counitN"), slot("psi")]),
        tens([slot("counitN"), counit("A")]),
    ));
    laws.push(law(
        "rmod-comonoid-comul",
        rmc,
        comp([slot("comulN"), slot("psi")]),
        comp([psi_nn(), tens([slot("comulN"), id("A")])]),
    ));

    // --- comodule laws (slots: H, M, rho, carrier ops) ---
    let cm: &[(&str, SlotKind)] = &[("H", S), ("M", P), ("rho", M)];
    laws.push(law(
        "comod-counit",
        cm,
        comp([tens([counit("H"), id("M")]), slot("rho")]),
        Expr::Id(vec![crate::expr::SpaceRef::Named("M".into())]),
    ));
    laws.push(law(
        "comod-coassoc",
        cm,
        comp([tens([id("H"), slot("rho")]), slot("rho")]),
        comp([tens([comul("H"), id("M")]), slot("rho")]),
    ));
    let cmm: &[(&str, SlotKind)] = &[("H", S), ("M", P), ("rho", M), ("mulM", M), ("unitM", M)];
    laws.push(law(
        "comod-magma-unit",
        cmm,
        comp([slot("rho"), slot("unitM")]),
        tens([unit("H"), slot("unitM")]),
    ));
    laws.push(law(
        "comod-magma-mul",
        cmm,
        comp([slot("rho"), slot("mulM")]),
        comp([tens([id("H"), slot("mulM")]), rho_mm()]),
    ));
    let cmc: &[(&str, SlotKind)] = &[
        ("H", S),
        ("M", P),
        ("rho", M),
        ("comulM", M),
        ("counitM", M),
    ];
    laws.push(law(
        "comod-comonoid-counit",
        cmc,
        comp([tens([id("H"), slot("counitM")]), slot("rho")]),
        tens([unit("H"), slot("counitM")]),
    ));
    laws.push(law(
        "comod-comonoid-comul",
        cmc,
        comp([tens([id("H"), slot("comulM")]), slot("rho")]),
        comp([rho_mm(), slot("comulM")]),
    ));

    // --- Yetter-Drinfeld compatibilities (slots: H, M, phi, rho) ---
    let yd: &[(&str, SlotKind)] = &[("H", S), ("M", P), ("phi", M), ("rho", M)];
    laws.push(law(
        "yd-b1",
        yd,
        comp([
            tens([mul("H"), id("M")]),
            tens([id("H"), sw("M", "H")]),
            tens([comp([slot("rho"), slot("phi")]), id("H")]),
            tens([id("H"), sw("H", "M")]),
            tens([comul("H"), id("M")]),
        ]),
        comp([
            tens([mul("H"), slot("phi")]),
            tens([id("H"), sw("H", "H"), id("M")]),
            tens([comul("H"), slot("rho")]),
        ]),
    ));
    laws.push(law(
        "yd-b2",
        yd,
        comp([
            tens([mul("H"), id("M")]),
            tens([id("H"), sw("M", "H")]),
            tens([slot("rho"), mul("H")]),
        ]),
        comp([
            tens([mul("H"), id("M")]),
            tens([mul("H"), sw("M", "H")]),
            tens([id("H"), sw("M", "H"), id("H")]),
            tens([slot("rho"), id("H"), id("H")]),
        ]),
    ));
    laws.push(law(
        "yd-b3",
        yd,
        comp([
            tens([mul("H"), id("M")]),
            tens([id("H"), mul("H"), id("M")]),
            tens([id("H"), id("H"), sw("M", "H")]),
            tens([id("H"), slot("rho"), id("H")]),
        ]),
        comp([
            tens([mul("H"), id("M")]),
            tens([mul("H"), sw("M", "H")]),
            tens([id("H"), slot("rho"), id("H")]),
        ]),
    ));

    // --- braided bimonoid and antipode laws over the carrier slots ---
    let br: &[(&str, SlotKind)] = &[
        ("H", S),
        ("M", P),
        ("phi", M),
        ("rho", M),
        ("mulM", M),
        ("unitM", M),
        ("comulM", M),
        ("counitM", M),
        ("sM", M),
    ];
    let idm = || Expr::Id(vec![crate::expr::SpaceRef::Named("M".into())]);
    laws.push(law(
        "braided-mul-unit-right",
        br,
        comp([slot("mulM"), tens([idm(), slot("unitM")])]),
        idm(),
    ));
    laws.push(law(
        "braided-mul-unit-left",
        br,
        comp([slot("mulM"), tens([slot("unitM"), idm()])]),
        idm(),
    ));
    laws.push(law(
        "braided-comul-counit-right",
        br,
        comp([tens([idm(), slot("counitM")]), slot("comulM")]),
        idm(),
    ));
    laws.push(law(
        "braided-comul-counit-left",
        br,
        comp([tens([slot("counitM"), idm()]), slot("comulM")]),
        idm(),
    ));
    laws.push(law(
        "braided-comul-coassoc",
        br,
        comp([tens([slot("comulM"), idm()]), slot("comulM")]),
        comp([tens([idm(), slot("comulM")]), slot("comulM")]),
    ));
    laws.push(law(
        "braided-counit-unit",
        br,
        comp([slot("counitM"), slot("unitM")]),
        id_k(),
    ));
    laws.push(law(
        "braided-counit-mul",
        br,
        comp([slot("counitM"), slot("mulM")]),
        tens([slot("counitM"), slot("counitM")]),
    ));
    laws.push(law(
        "braided-comul-unit",
        br,
        comp([slot("comulM"), slot("unitM")]),
        tens([slot("unitM"), slot("unitM")]),
    ));
    laws.push(law(
        "braided-comul-mul",
        br,
        comp([slot("comulM"), slot("mulM")]),
        comp([
            tens([slot("mulM"), slot("mulM")]),
            tens([idm(), braiding_mm(), idm()]),
            tens([slot("comulM"), slot("comulM")]),
        ]),
    ));
    laws.push(law(
        "braided-antipode-1a",
        br,
        comp([
            slot("mulM"),
            tens([slot("sM"), slot("mulM")]),
            tens([slot("comulM"), idm()]),
        ]),
        tens([slot("counitM"), idm()]),
    ));
    laws.push(law(
        "braided-antipode-1b",
        br,
        comp([
            slot("mulM"),
            tens([idm(), slot("mulM")]),
            tens([idm(), slot("sM"), idm()]),
            tens([slot("comulM"), idm()]),
        ]),
        tens([slot("counitM"), idm()]),
    ));
    laws.push(law(
        "braided-antipode-2a",
        br,
        comp([
            slot("mulM"),
            tens([slot("mulM"), idm()]),
            tens([idm(), slot("sM"), idm()]),
            tens([idm(), slot("comulM")]),
        ]),
        tens([idm(), slot("counitM")]),
    ));
    laws.push(law(
        "braided-antipode-2b",
        br,
        comp([
            slot("mulM"),
            tens([slot("mulM"), slot("sM")]),
            tens([idm(), slot("comulM")]),
        ]),
        tens([idm(), slot("counitM")]),
    ));

    // --- double-crossproduct compatibility conditions (slots: A, H, phiA, phiH) ---
    let mj: &[(&str, SlotKind)] = &[("A", S), ("H", S), ("phiA", M), ("phiH", M)];
    laws.push(law(
        "majid-unit-a",
        mj,
        comp([slot("phiA"), tens([id("H"), unit("A")])]),
        tens([counit("H"), unit("A")]),
    ));
    laws.push(law(
        "majid-unit-h",
        mj,
        comp([slot("phiH"), tens([unit("H"), id("A")])]),
        tens([unit("H"), counit("A")]),
    ));
    laws.push(law(
        "majid-compat",
        mj,
        comp([tens([slot("phiH"), slot("phiA")]), comul_ha()]),
        comp([
            sw("A", "H"),
            tens([slot("phiA"), slot("phiH")]),
            comul_ha(),
        ]),
    ));
    laws.push(law(
        "majid-left-antipode-mul",
        mj,
        comp([
            slot("phiA"),
            tens([id("H"), mul("A")]),
            tens([lanti("H"), lanti("A"), id("A")]),
        ]),
        comp([
            mul("A"),
            tens([id("A"), slot("phiA")]),
            tens([comp([dcp_lantipode(), sw("H", "A")]), id("A")]),
        ]),
    ));
    laws.push(law(
        "majid-left-cancel-1",
        mj,
        comp([
            mul("H"),
            tens([slot("phiH"), mul("H")]),
            tens([
                lanti("H"),
                comp([tens([slot("phiA"), slot("phiH")]), comul_ha()]),
                id("H"),
            ]),
            tens([comul("H"), id("A"), id("H")]),
        ]),
        tens([counit("H"), counit("A"), id("H")]),
    ));
    laws.push(law(
        "majid-left-cancel-2",
        mj,
        comp([
            mul("H"),
            tens([slot("phiH"), mul("H")]),
            tens([
                id("H"),
                comp([tens([slot("phiA"), slot("phiH")]), comul_ha()]),
                id("H"),
            ]),
            tens([
                comp([tens([id("H"), lanti("H")]), comul("H")]),
                id("A"),
                id("H"),
            ]),
        ]),
        tens([counit("H"), counit("A"), id("H")]),
    ));
    laws.push(law(
        "majid-right-antipode-mul",
        mj,
        comp([
            slot("phiH"),
            tens([mul("H"), id("A")]),
            tens([id("H"), ranti("H"), ranti("A")]),
        ]),
        comp([
            mul("H"),
            tens([slot("phiH"), id("H")]),
            tens([id("H"), comp([dcp_rantipode(), sw("H", "A")])]),
        ]),
    ));
    laws.push(law(
        "majid-right-cancel-1",
        mj,
        comp([
            mul("A"),
            tens([mul("A"), slot("phiA")]),
            tens([
                id("A"),
                comp([tens([slot("phiA"), slot("phiH")]), comul_ha()]),
                ranti("A"),
            ]),
            tens([id("A"), id("H"), comul("A")]),
        ]),
        tens([id("A"), counit("H"), counit("A")]),
    ));
    laws.push(law(
        "majid-right-cancel-2",
        mj,
        comp([
            mul("A"),
            tens([mul("A"), slot("phiA")]),
            tens([
                id("A"),
                comp([tens([slot("phiA"), slot("phiH")]), comul_ha()]),
                id("A"),
            ]),
            tens([
                id("A"),
                id("H"),
                comp([tens([ranti("A"), id("A")]), comul("A")]),
            ]),
        ]),
        tens([id("A"), counit("H"), counit("A")]),
    ));

    // --- unital-magma compatibility of the projection morphism ---
    let rt: &[(&str, SlotKind)] = &[("A", S), ("H", S), ("tau", M), ("R", M), ("g", M)];
    laws.push(law(
        "rt-mul-right",
        rt,
        comp([mul("H"), tens([slot("g"), id("H")])]),
        comp([slot("g"), tens([id("A"), mul("H")])]),
    ));
    laws.push(law(
        "rt-mul-left",
        rt,
        comp([mul("H"), tens([id("H"), slot("g")])]),
        comp([
            mul("H"),
            tens([mul("H"), id("H")]),
            tens([
                id("H"),
                comp([tens([slot("tau"), id("H")]), tens([id("A"), slot("R")])]),
                id("H"),
            ]),
        ]),
    ));

    // --- projection laws (slots: B, H structures; f, g, q, p, i maps; Z space) ---
    let pj: &[(&str, SlotKind)] = &[
        ("B", S),
        ("H", S),
        ("f", M),
        ("g", M),
        ("q", M),
        ("p", M),
        ("i", M),
        ("Z", P),
    ];
    laws.push(law(
        "proj-f-unit",
        pj,
        comp([slot("f"), unit("H")]),
        unit("B"),
    ));
    laws.push(law(
        "proj-f-mul",
        pj,
        comp([slot("f"), mul("H")]),
        comp([mul("B"), tens([slot("f"), slot("f")])]),
    ));
    laws.push(law(
        "proj-f-counit",
        pj,
        comp([counit("B"), slot("f")]),
        counit("H"),
    ));
    laws.push(law(
        "proj-f-comul",
        pj,
        comp([comul("B"), slot("f")]),
        comp([tens([slot("f"), slot("f")]), comul("H")]),
    ));
    laws.push(law(
        "proj-g-unit",
        pj,
        comp([slot("g"), unit("B")]),
        unit("H"),
    ));
    laws.push(law(
        "proj-g-mul",
        pj,
        comp([slot("g"), mul("B")]),
        comp([mul("H"), tens([slot("g"), slot("g")])]),
    ));
    laws.push(law(
        "proj-g-counit",
        pj,
        comp([counit("H"), slot("g")]),
        counit("B"),
    ));
    laws.push(law(
        "proj-g-comul",
        pj,
        comp([comul("H"), slot("g")]),
        comp([tens([slot("g"), slot("g")]), comul("B")]),
    ));
    laws.push(law(
        "proj-section",
        pj,
        comp([slot("g"), slot("f")]),
        id("H"),
    ));
    laws.push(law(
        "proj-q-idempotent",
        pj,
        comp([slot("q"), slot("q")]),
        slot("q"),
    ));
    laws.push(law(
        "proj-q-mul-absorb",
        pj,
        comp([slot("q"), mul("B"), tens([id("B"), slot("q")])]),
        comp([slot("q"), mul("B")]),
    ));
    let strong = |first: Expr, second: Expr, third: Expr, out: Expr| {
        (
            comp([
                out.clone(),
                mul("B"),
                tens([id("B"), mul("B")]),
                tens([first.clone(), second.clone(), third.clone()]),
            ]),
            comp([
                out,
                mul("B"),
                tens([mul("B"), id("B")]),
                tens([first, second, third]),
            ]),
        )
    };
    let (l1, r1) = strong(slot("i"), slot("f"), slot("i"), slot("p"));
    laws.push(law("strong-mixed-1", pj, l1, r1));
    let (l2, r2) = strong(slot("f"), slot("i"), slot("i"), slot("p"));
    laws.push(law("strong-mixed-2", pj, l2, r2));
    let (l3, r3) = strong(slot("f"), slot("f"), slot("i"), slot("p"));
    laws.push(law("strong-mixed-3", pj, l3, r3));
    let (l1q, r1q) = strong(slot("i"), slot("f"), slot("i"), slot("q"));
    laws.push(law("strong-mixed-1q", pj, l1q, r1q));
    let (l2q, r2q) = strong(slot("f"), slot("i"), slot("i"), slot("q"));
    laws.push(law("strong-mixed-2q", pj, l2q, r2q));
    let (l3q, r3q) = strong(slot("f"), slot("f"), slot("i"), slot("q"));
    laws.push(law("strong-mixed-3q", pj, l3q, r3q));
    laws.push(law(
        "proj-split-factor",
        pj,
        comp([slot("i"), slot("p")]),
        slot("q"),
    ));
    laws.push(law(
        "proj-split-section",
        pj,
        comp([slot("p"), slot("i")]),
        Expr::Id(vec![crate::expr::SpaceRef::Named("Z".into())]),
    ));

    // --- morphism laws (slots: Src, Tgt structures; w map) ---
    let mo: &[(&str, SlotKind)] = &[("Src", S), ("Tgt", S), ("w", M)];
    laws.push(law(
        "mor-unit",
        mo,
        comp([slot("w"), unit("Src")]),
        unit("Tgt"),
    ));
    laws.push(law(
        "mor-mul",
        mo,
        comp([slot("w"), mul("Src")]),
        comp([mul("Tgt"), tens([slot("w"), slot("w")])]),
    ));
    laws.push(law(
        "mor-counit",
        mo,
        comp([counit("Tgt"), slot("w")]),
        counit("Src"),
    ));
    laws.push(law(
        "mor-comul",
        mo,
        comp([comul("Tgt"), slot("w")]),
        comp([tens([slot("w"), slot("w")]), comul("Src")]),
    ));
    laws.push(law(
        "mor-antipode",
        mo,
        comp([lanti("Tgt"), slot("w")]),
        comp([slot("w"), lanti("Src")]),
    ));

    let mut seen = BTreeMap::new();
    for l in &laws {
        if seen.insert(l.id, ()).is_some() {
            panic!("duplicate law id {}", l.id);
        }
    }
    laws
}
