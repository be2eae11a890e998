//! Builtin structures: the 4-dimensional Taft Hopf algebra, the Chein double
//! of S3 and its loop algebra, the standard skew pairing between them, and
//! the one-parameter family of R-matrices on the Taft algebra.
//!
//! Every builtin passes its law suite at construction time.

use std::sync::{Arc, OnceLock};

use crate::algebra::AlgebraicStructure;
use crate::deform::TwoCocycle;
use crate::error::{Error, Result};
use crate::laws;
use crate::linmap::LinMap;
use crate::loops::{chein_double, loop_algebra, Loop};
use crate::pairing::{bowtie, make_skew_pairing, BowtieOutcome, SkewPairing};
use crate::qtyd::{make_quasitriangular, QuasiTri};
use crate::scalar::{Field, Scalar};
use crate::space::BasedSpace;

/// The 4-dimensional Taft Hopf algebra on basis `{1, x, y, w = xy}`.
///
/// Requires a field of characteristic different from 2, which holds for the
/// rationals and for every admissible prime field.
pub fn taft4(field: Field) -> Result<Arc<AlgebraicStructure>> {
    let sp = BasedSpace::new(vec!["1".into(), "x".into(), "y".into(), "w".into()])?;
    let one = field.one();
    let neg = -&one;
    // Structure constants: rows are (i, j) -> Σ c·e_k.
    let mut mul = LinMap::zero(field, vec![sp.clone(), sp.clone()], vec![sp.clone()]);
    let table: &[(usize, usize, usize, i64)] = &[
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (2, 0, 2, 1),
        (3, 0, 3, 1),
        (1, 1, 0, 1),  // x·x = 1
        (1, 2, 3, 1),  // x·y = w
        (1, 3, 2, 1),  // x·w = y
        (2, 1, 3, -1), // y·x = -w
        (3, 1, 2, -1), // w·x = -y
    ];
    for &(i, j, k, c) in table {
        mul.add_entry((i * 4 + j) as u64, k as u64, field.from_i64(c));
    }
    let mut unit = LinMap::zero(field, vec![], vec![sp.clone()]);
    unit.add_entry(0, 0, one.clone());
    let mut comul = LinMap::zero(field, vec![sp.clone()], vec![sp.clone(), sp.clone()]);
    comul.add_entry(0, 0, one.clone()); // δ(1) = 1⊗1
    comul.add_entry(1, (1 * 4 + 1) as u64, one.clone()); // δ(x) = x⊗x
    comul.add_entry(2, (2 * 4 + 1) as u64, one.clone()); // δ(y) = y⊗x + 1⊗y
    comul.add_entry(2, 2, one.clone());
    comul.add_entry(3, (3 * 4) as u64, one.clone()); // δ(w) = w⊗1 + x⊗w
    comul.add_entry(3, (1 * 4 + 3) as u64, one.clone());
    let mut counit = LinMap::zero(field, vec![sp.clone()], vec![]);
    counit.add_entry(0, 0, one.clone());
    counit.add_entry(1, 0, one.clone());
    let mut antipode = LinMap::zero(field, vec![sp.clone()], vec![sp.clone()]);
    antipode.add_entry(0, 0, one.clone()); // λ(1) = 1
    antipode.add_entry(1, 1, one.clone()); // λ(x) = x
    antipode.add_entry(2, 3, one.clone()); // λ(y) = w
    antipode.add_entry(3, 2, neg); // λ(w) = -y

    let s = AlgebraicStructure::new("taft4", sp, mul, unit, comul, counit)?
        .with_antipode(antipode);
    let (s, reports) = laws::classify(s, "hopf-algebra")?;
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

/// The symmetric group S3 as a loop, with labels `s0..s5`: `s0` the identity,
/// `s1,s2,s3` the transpositions, `s4,s5` the 3-cycles.
pub fn s3() -> Result<Loop> {
    // Permutations of {0,1,2}; composition is "apply right, then left".
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // s0 = id
        [1, 0, 2], // s1 = (0 1)
        [2, 1, 0], // s2 = (0 2)
        [0, 2, 1], // s3 = (1 2)
        [1, 2, 0], // s4 = (0 1 2)
        [2, 0, 1], // s5 = (0 2 1)
    ];
    let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let rows: Vec<Vec<usize>> = (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    let composed = [
                        perms[i][perms[j][0]],
                        perms[i][perms[j][1]],
                        perms[i][perms[j][2]],
                    ];
                    index_of(composed) + 1
                })
                .collect()
        })
        .collect();
    Loop::from_rows(rows, Some((0..6).map(|k| format!("s{k}")).collect()))
}

/// The Chein double `M(S3,2)`: the smallest nonassociative Moufang loop,
/// order 12, basis order `s0..s5, s0u..s5u`.
pub fn ms32() -> Result<Loop> {
    chein_double(&s3()?)
}

/// The loop algebra of `M(S3,2)`: a 12-dimensional cocommutative Hopf
/// quasigroup.
pub fn ms32_algebra(field: Field) -> Result<Arc<AlgebraicStructure>> {
    Ok(Arc::new(loop_algebra(&ms32()?, field, "ms32-algebra")?))
}

/// The standard skew pairing `τ: A⊗H4 -> K` on `A = F·M(S3,2)`:
/// `τ(a⊗1) = 1`, `τ(a⊗x) = (-1)^α` for `a = s_i u^α`, zero on `y` and `w`.
pub fn tau_prinej(field: Field) -> Result<SkewPairing> {
    let a = ms32_algebra(field)?;
    let h = taft4(field)?;
    let tau = tau_prinej_map(field, &a, &h)?;
    make_skew_pairing(&a, &h, tau)
}

/// The raw functional of [`tau_prinej`], for tests that perturb it.
pub fn tau_prinej_map(
    field: Field,
    a: &Arc<AlgebraicStructure>,
    h: &Arc<AlgebraicStructure>,
) -> Result<LinMap> {
    let mut tau = LinMap::zero(
        field,
        vec![a.space().clone(), h.space().clone()],
        vec![],
    );
    let dim_h = h.space().dim() as u64;
    for k in 0..a.space().dim() as u64 {
        let alpha = k / 6; // basis order: s0..s5, s0u..s5u
        tau.add_entry(k * dim_h, 0, field.one());
        tau.add_entry(
            k * dim_h + 1,
            0,
            crate::scalar::sign_pow(field, alpha as i64),
        );
    }
    Ok(tau)
}

/// The R-matrix family on the Taft algebra:
/// `R_α = 1/2 (1⊗1 + 1⊗x + x⊗1 - x⊗x) + α/2 (y⊗y + y⊗w - w⊗y + w⊗w)`.
///
/// The nilpotent-part signs are forced by the comultiplication conventions
/// used here (`δ(y) = y⊗x + 1⊗y`, `δ(w) = w⊗1 + x⊗w`): solving the
/// quasitriangular equations over these structure constants yields exactly
/// this one-parameter family.
pub fn r_alpha_map(field: Field, alpha: &Scalar, h: &Arc<AlgebraicStructure>) -> Result<LinMap> {
    let sp = h.space().clone();
    if sp.dim() != 4 {
        return Err(Error::ShapeMismatch(
            "the one-parameter R-matrix family lives on the 4-dimensional Taft algebra".into(),
        ));
    }
    let mut r = LinMap::zero(field, vec![], vec![sp.clone(), sp]);
    let half = field.ratio(1, 2)?;
    let neg_half = -&half;
    let ah = alpha * &half;
    let neg_ah = -&ah;
    let at = |i: u64, j: u64| i * 4 + j;
    r.add_entry(0, at(0, 0), half.clone());
    r.add_entry(0, at(0, 1), half.clone());
    r.add_entry(0, at(1, 0), half);
    r.add_entry(0, at(1, 1), neg_half);
    r.add_entry(0, at(2, 2), ah.clone());
    r.add_entry(0, at(2, 3), ah.clone());
    r.add_entry(0, at(3, 2), neg_ah);
    r.add_entry(0, at(3, 3), ah);
    Ok(r)
}

/// Verified quasitriangular structure `R_α` on the Taft algebra.
pub fn r_alpha(field: Field, alpha: &Scalar) -> Result<QuasiTri> {
    let h = taft4(field)?;
    let r = r_alpha_map(field, alpha, &h)?;
    make_quasitriangular(&h, r)
}

/// Everything the worked example produces, shared by tests and the CLI so the
/// expensive 48-dimensional verification is done once per process.
pub struct Prinej {
    pub a: Arc<AlgebraicStructure>,
    pub h4: Arc<AlgebraicStructure>,
    pub pairing: SkewPairing,
    pub bowtie: BowtieOutcome,
}

impl Prinej {
    pub fn tensor(&self) -> &Arc<AlgebraicStructure> {
        &self.bowtie.tensor
    }

    pub fn omega(&self) -> &TwoCocycle {
        &self.bowtie.cocycle
    }
}

/// Cached construction of the rational-field worked example.
pub fn prinej() -> Result<&'static Prinej> {
    static CELL: OnceLock<std::result::Result<Prinej, String>> = OnceLock::new();
    let cached = CELL.get_or_init(|| {
        let build = || -> Result<Prinej> {
            let pairing = tau_prinej(Field::Rational)?;
            let a = pairing.a().clone();
            let h4 = pairing.h().clone();
            let bt = bowtie(&pairing)?;
            Ok(Prinej {
                a,
                h4,
                pairing,
                bowtie: bt,
            })
        };
        build().map_err(|e| e.to_string())
    });
    cached
        .as_ref()
        .map_err(|e| Error::Parse(format!("builtin pipeline failed: {e}")))
}

/// Keys accepted by the `builtin` command.
pub const BUILTIN_KEYS: &[&str] = &[
    "taft4",
    "ms32",
    "ms32-algebra",
    "tau-prinej",
    "r-alpha",
    "group",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_the_nonabelian_group_of_order_6() {
        let g = s3().unwrap();
        assert_eq!(g.order(), 6);
        let c = g.classify();
        assert!(c.group.holds);
        // Orders: s1..s3 are involutions, s4 s5 have order 3.
        for k in 1..=3 {
            assert_eq!(g.mul(k, k), 0);
        }
        assert_eq!(g.mul(4, 4), 5);
        assert_eq!(g.mul(4, 5), 0);
        // Nonabelian witness.
        assert_ne!(g.mul(1, 2), g.mul(2, 1));
    }

    #[test]
    fn taft4_structure_constants() {
        let h = taft4(Field::Rational).unwrap();
        // μ(y⊗x) = -w.
        let col = h.mul().apply_basis((2 * 4 + 1) as u64);
        assert_eq!(col.len(), 1);
        assert_eq!(col.get(&3).unwrap().render(), "-1");
        // λ²(y) = -y.
        let lam = h.antipode().unwrap();
        let twice = lam.compose(lam).unwrap();
        assert_eq!(twice.apply_basis(2).get(&2).unwrap().render(), "-1");
        // ε∘λ = ε.
        assert_eq!(h.counit().compose(lam).unwrap(), *h.counit());
    }

    #[test]
    fn tau_values_on_the_displayed_cases() {
        let a = ms32_algebra(Field::Rational).unwrap();
        let h = taft4(Field::Rational).unwrap();
        let tau = tau_prinej_map(Field::Rational, &a, &h).unwrap();
        let at = |ai: u64, hi: u64| tau.entry(ai * 4 + hi, 0).map(|c| c.render());
        // τ(s1u⊗x) = -1: s1u is basis index 7, x is index 1.
        assert_eq!(at(7, 1).as_deref(), Some("-1"));
        // τ(anything⊗1) = 1 and τ(·⊗y) = τ(·⊗w) = 0.
        for ai in 0..12 {
            assert_eq!(at(ai, 0).as_deref(), Some("1"));
            assert_eq!(at(ai, 2), None);
            assert_eq!(at(ai, 3), None);
        }
    }

    #[test]
    fn r_zero_has_four_entries() {
        let h = taft4(Field::Rational).unwrap();
        let r = r_alpha_map(Field::Rational, &Field::Rational.zero(), &h).unwrap();
        assert_eq!(r.num_entries(), 4);
        let one_one = r.entry(0, 0).unwrap();
        assert_eq!(one_one.render(), "1/2");
    }
}
