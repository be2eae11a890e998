//! Acceptance suite: one test per criterion, exact equality throughout
//! (tolerance zero), with a PASS line printed per criterion.
//!
//! The worked example (the loop algebra of the Chein double of S3, the Taft
//! algebra, their standard pairing and R-matrices) is shared through the
//! process-wide cache in `catalog`, so the expensive 48-dimensional
//! verification runs once.

use std::sync::Arc;
use std::time::Instant;

use hopfq::algebra::{AlgebraicStructure, StructureClass};
use hopfq::catalog;
use hopfq::expr::{comp, comul, counit, id, lanti, materialize, mul, slot, sw, tens, Binding};
use hopfq::laws;
use hopfq::linmap::LinMap;
use hopfq::loops::chein_double;
use hopfq::pairing::{actions_from_pairing, double_cross_product};
use hopfq::qtyd::{biproduct, iso_w, projection_from_pairing, split_to_yd};
use hopfq::Field;

fn pass(criterion: usize, what: &str) {
    println!("PASS criterion {criterion}: {what}");
}

#[test]
fn criterion_01_loop_pipeline() {
    let t0 = Instant::now();
    let s3 = catalog::s3().unwrap();
    let m = chein_double(&s3).unwrap();
    assert_eq!(m.order(), 12);
    let cls = m.classify();
    assert!(cls.moufang.holds);
    assert!(cls.inverse_property.holds);
    assert!(!cls.group.holds);
    let witness = cls.group.witness.as_ref().expect("associativity witness");
    assert_eq!(witness.len(), 3);

    let a = catalog::ms32_algebra(Field::Rational).unwrap();
    assert_eq!(a.class(), Some(StructureClass::Hqg));
    let (reports, class) = laws::verify_structure(&a, "hqg").unwrap();
    assert!(laws::all_pass(&reports), "{:?}", laws::first_failure(&reports));
    assert_eq!(class, Some(StructureClass::Hqg));
    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs() < 10,
        "loop pipeline took {elapsed:?}, budget is 10 s"
    );
    pass(
        1,
        &format!(
            "M(S3,2) is a nonassociative Moufang IP loop (witness {witness:?}) and its loop \
             algebra passes the full Hopf-quasigroup suite in {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_02_taft_algebra() {
    let h = catalog::taft4(Field::Rational).unwrap();
    assert_eq!(h.class(), Some(StructureClass::HopfAlgebra));
    let (reports, _) = laws::verify_structure(&h, "hopf-algebra").unwrap();
    assert!(laws::all_pass(&reports));

    let lam = h.antipode().unwrap();
    let squared = lam.compose(lam).unwrap();
    assert_ne!(squared, h.identity(), "the antipode must not be an involution");
    // λ²(y) = -y on basis index 2.
    let col = squared.apply_basis(2);
    assert_eq!(col.len(), 1);
    assert_eq!(col.get(&2).unwrap().render(), "-1");
    pass(2, "taft4 passes the hopf-algebra suite and λ²(y) = -y");
}

#[test]
fn criterion_03_pairing() {
    let p = &catalog::prinej().unwrap().pairing;
    for law in [
        "pairing-mul-left",
        "skew-pairing-mul-right",
        "pairing-counit-right",
        "pairing-counit-left",
    ] {
        let r = laws::check_law_id(law, &p.binding()).unwrap();
        assert!(r.pass, "{law} failed");
    }
    // Division route: already the stored inverse. Linear-solve route: redo it
    // here as the independent oracle.
    assert_eq!(p.tau(), p.tau_inv());
    let b = Binding::new()
        .with_structure("A", p.a())
        .with_structure("H", p.h());
    let comul_ah = materialize(&hopfq::expr::comul_pair("A", "H"), &b).unwrap();
    let counit_ah = materialize(&tens([counit("A"), counit("H")]), &b).unwrap();
    let solved = hopfq::algebra::functional_conv_inverse(p.tau(), &comul_ah, &counit_ah).unwrap();
    assert_eq!(&solved, p.tau());
    pass(3, "tau-prinej is a skew pairing and both inverse routes return τ itself");
}

#[test]
fn criterion_04_cocycle() {
    let bundle = catalog::prinej().unwrap();
    let omega = bundle.omega();
    assert_eq!(omega.sigma(), omega.sigma_inv());
    let t0 = Instant::now();
    let reports = omega.verify().unwrap();
    let elapsed = t0.elapsed();
    assert!(laws::all_pass(&reports), "{:?}", laws::first_failure(&reports));
    assert!(reports.iter().any(|r| r.law == "cocycle-partial"));
    assert!(reports.iter().any(|r| r.law == "cocycle-normal-left"));
    assert!(
        elapsed.as_secs() < 60,
        "48-dim cocycle check took {elapsed:?}, budget is 60 s"
    );
    pass(
        4,
        &format!("ω is a normal two-cocycle on the 48-dim space with ω⁻¹ = ω ({elapsed:?})"),
    );
}

#[test]
fn criterion_05_deformation() {
    let bundle = catalog::prinej().unwrap();
    let bt = &bundle.bowtie;
    assert_eq!(bt.twist.structure.class(), Some(StructureClass::Hqg));
    assert!(laws::all_pass(&bt.twist.reports));
    // The twisted product is the bowtie product, map for map (the bowtie
    // constructor asserts this; compare the stored tensors again here).
    assert_eq!(bt.structure.mul(), bt.twist.structure.mul());
    // And it genuinely differs from the undeformed tensor product.
    let delta = bt.structure.mul().sub(bt.tensor.mul()).unwrap();
    let (i, o, c) = delta.entries().next().expect("products must differ somewhere");
    pass(
        5,
        &format!(
            "(A⊗H4)^ω is a Hopf quasigroup equal to A⋈H4 and differs from A⊗H4 \
             (first differing entry at input {i}, output {o}, delta {c})"
        ),
    );
}

#[test]
fn criterion_06_double_crossproduct() {
    let bundle = catalog::prinej().unwrap();
    let p = &bundle.pairing;
    let acts = actions_from_pairing(p).unwrap();
    assert!(laws::all_pass(&acts.reports_a));
    assert!(laws::all_pass(&acts.reports_h));
    let dcp = double_cross_product(p.a(), p.h(), &acts).unwrap();
    assert!(dcp.majid_pass(), "{:?}", laws::first_failure(&dcp.majid_reports));
    assert!(dcp.suite_pass(), "{:?}", laws::first_failure(&dcp.suite_reports));
    assert_eq!(dcp.structure.mul(), bundle.bowtie.structure.mul());
    assert_eq!(
        dcp.structure.antipode().unwrap(),
        bundle.bowtie.structure.antipode().unwrap()
    );
    pass(
        6,
        "both module-comonoid suites and all compatibility conditions pass; the double \
         crossproduct tensor equals the bowtie tensor",
    );
}

#[test]
fn criterion_07_quasitriangular_family() {
    let field = Field::Rational;
    for alpha in [
        field.from_i64(0),
        field.from_i64(1),
        field.from_i64(-2),
        field.ratio(3, 5).unwrap(),
    ] {
        let qt = catalog::r_alpha(field, &alpha).unwrap();
        assert!(laws::all_pass(qt.reports()), "alpha = {}", alpha.render());
        for law in ["qt-conv-rs", "qt-conv-st", "qt-hexagon"] {
            assert!(qt.reports().iter().any(|r| r.law == law && r.pass));
        }
    }
    pass(7, "R_α is quasitriangular for α in {0, 1, -2, 3/5}, S/T identities included");
}

/// Shared projection for criteria 8-10 (α = 1).
fn projection() -> &'static hopfq::qtyd::Projection {
    use std::sync::OnceLock;
    static CELL: OnceLock<hopfq::qtyd::Projection> = OnceLock::new();
    CELL.get_or_init(|| {
        let bundle = catalog::prinej().unwrap();
        let qt = catalog::r_alpha(Field::Rational, &Field::Rational.one()).unwrap();
        projection_from_pairing(&bundle.pairing, &qt).unwrap()
    })
}

#[test]
fn criterion_08_projection() {
    let proj = projection();
    assert!(laws::all_pass(&proj.rt_reports));
    assert!(laws::all_pass(&proj.reports), "{:?}", laws::first_failure(&proj.reports));
    for law in [
        "proj-g-unit",
        "proj-g-mul",
        "proj-g-counit",
        "proj-g-comul",
        "proj-section",
        "proj-q-idempotent",
        "strong-mixed-1",
        "strong-mixed-2",
        "strong-mixed-3",
    ] {
        assert!(proj.reports.iter().any(|r| r.law == law && r.pass), "{law}");
    }
    // q agrees with its closed form (asserted at construction); the split
    // recovers a 12-dimensional image with p∘i = id.
    let pi = proj.p.compose(&proj.i).unwrap();
    assert_eq!(pi, LinMap::identity(Field::Rational, &[proj.z.clone()]));
    assert_eq!(proj.z.dim(), 12);
    pass(
        8,
        "g is a unital-magma and comonoid morphism with g∘f = id; q matches its closed \
         form; the strong conditions hold and the split gives p∘i = id on 12 dimensions",
    );
}

#[test]
fn criterion_09_yetter_drinfeld() {
    let proj = projection();
    let split = split_to_yd(proj).unwrap();
    assert!(laws::all_pass(&split.reports), "{:?}", laws::first_failure(&split.reports));
    for law in ["yd-b1", "yd-b2", "yd-b3", "braided-comul-mul", "braided-antipode-1a"] {
        assert!(split.reports.iter().any(|r| r.law == law && r.pass), "{law}");
    }

    // Closed forms from the construction, computed independently here.
    let bundle = catalog::prinej().unwrap();
    let p = &bundle.pairing;
    let qt = catalog::r_alpha(Field::Rational, &Field::Rational.one()).unwrap();
    let b = p.binding().with_map("R", qt.r());
    let rho_closed = materialize(
        &comp([
            tens([slot("tau"), sw("A", "H")]),
            tens([id("A"), sw("A", "H"), mul("H")]),
            tens([
                comul("A"),
                comp([slot("R"), slot("tau")]),
                lanti("H"),
            ]),
            tens([comul("A"), slot("R")]),
        ]),
        &b,
    )
    .unwrap();
    assert_eq!(rho_closed, split.braided.coaction);

    let acts = actions_from_pairing(p).unwrap();
    let bphi = b.clone().with_map("phiA", &acts.phi_a);
    let s_closed = materialize(
        &comp([
            tens([slot("tau"), slot("phiA")]),
            tens([id("A"), slot("R"), lanti("A")]),
            comul("A"),
        ]),
        &bphi,
    )
    .unwrap();
    assert_eq!(s_closed, split.braided.antipode);
    pass(
        9,
        "the extracted braided structure passes the Yetter-Drinfeld and braided suites, \
         and the closed forms for the coaction and antipode match the split",
    );
}

#[test]
fn criterion_10_isomorphism() {
    let proj = projection();
    let split = split_to_yd(proj).unwrap();
    let (bp, reports) = biproduct(&split.braided).unwrap();
    assert!(laws::all_pass(&reports));
    assert_eq!(bp.class(), Some(StructureClass::Hqg));
    let iso = iso_w(proj, &bp).unwrap();
    let b = &proj.bowtie.structure;
    assert_eq!(iso.w.compose(&iso.w_inv).unwrap(), b.identity());
    assert_eq!(
        iso.w_inv.compose(&iso.w).unwrap(),
        LinMap::identity(Field::Rational, &[bp.space().clone()])
    );
    // Antipode naturality of w.
    let lhs = b.antipode().unwrap().compose(&iso.w).unwrap();
    let rhs = iso.w.compose(bp.antipode().unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    assert!(iso.reports.iter().any(|r| r.law == "mor-antipode" && r.pass));
    pass(10, "w: A⋊H4 -> A⋈H4 is a Hopf-quasigroup isomorphism commuting with antipodes");
}

// ---- criterion 11: randomized oracles on small dimensions ------------------

/// Deterministic linear-congruential generator; good enough for sampling
/// small test cases reproducibly without extra dependencies.
struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493))
    }

    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn small_scalar(&mut self, field: Field) -> hopfq::Scalar {
        field.from_i64(self.below(7) as i64 - 3)
    }
}

fn random_map(
    rng: &mut Lcg,
    field: Field,
    dom: &Arc<hopfq::space::BasedSpace>,
    cod: &Arc<hopfq::space::BasedSpace>,
) -> LinMap {
    let mut m = LinMap::zero(field, vec![dom.clone()], vec![cod.clone()]);
    for i in 0..dom.dim() as u64 {
        for o in 0..cod.dim() as u64 {
            if rng.below(2) == 0 {
                m.add_entry(i, o, rng.small_scalar(field));
            }
        }
    }
    m
}

/// Random unital magma table with group-like coproduct: always a bimonoid.
fn random_magma_structure(rng: &mut Lcg, n: usize) -> AlgebraicStructure {
    let field = Field::Rational;
    let sp = hopfq::space::BasedSpace::numbered(n).unwrap();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == 0 {
                        c
                    } else if c == 0 {
                        r
                    } else {
                        rng.below(n as u64) as usize
                    }
                })
                .collect()
        })
        .collect();
    let one = field.one();
    let mul = LinMap::from_fn(field, vec![sp.clone(), sp.clone()], vec![sp.clone()], |ix| {
        vec![(vec![table[ix[0]][ix[1]]], one.clone())]
    });
    let unit = LinMap::from_fn(field, vec![], vec![sp.clone()], |_| vec![(vec![0], one.clone())]);
    let comul = LinMap::from_fn(field, vec![sp.clone()], vec![sp.clone(), sp.clone()], |ix| {
        vec![(vec![ix[0], ix[0]], one.clone())]
    });
    let counit = LinMap::from_fn(field, vec![sp.clone()], vec![], |_| vec![(vec![], one.clone())]);
    AlgebraicStructure::new("random-magma", sp, mul, unit, comul, counit).unwrap()
}

#[test]
fn criterion_11_randomized_oracles() {
    let field = Field::Rational;
    let mut rng = Lcg::new(20260809);

    // Division derivation vs translation invertibility, both directions.
    let mut with_division = 0usize;
    let mut without = 0usize;
    for case in 0..120 {
        let n = 2 + (case % 3); // dims 2..=4
        let s = random_magma_structure(&mut rng, n);
        let idh = s.identity();
        let h = idh
            .tensor(s.mul())
            .compose(&s.comul().tensor(&idh))
            .unwrap();
        let invertible = h.invert().is_ok();
        match hopfq::algebra::division_from_structure(&s, hopfq::algebra::Side::Left) {
            Ok(l) => {
                assert!(invertible, "division derived although h is singular");
                with_division += 1;
                let bound = laws::structure_binding(&s.clone().with_ldiv(l)).unwrap();
                for law in ["ldiv-cancel", "ldiv-recover"] {
                    assert!(laws::check_law_id(law, &bound).unwrap().pass);
                }
            }
            Err(_) => {
                assert!(!invertible, "h invertible but no division derived");
                without += 1;
                // Independent impossibility witness: some left translation
                // repeats, so the cancellation constraint is contradictory.
                let mut contradiction = false;
                'outer: for u in 0..n as u64 {
                    for v1 in 0..n as u64 {
                        for v2 in 0..v1 {
                            let p1 = s.mul().apply_basis(u * n as u64 + v1);
                            let p2 = s.mul().apply_basis(u * n as u64 + v2);
                            if p1 == p2 {
                                contradiction = true;
                                break 'outer;
                            }
                        }
                    }
                }
                assert!(contradiction, "no table-level witness for missing division");
            }
        }
    }
    assert!(with_division >= 10 && without >= 10, "sampling is lopsided");

    // Convolution associativity for functionals on a non-cocommutative
    // comonoid (the Taft algebra) and on random group-like comonoids.
    let taft = catalog::taft4(field).unwrap();
    for case in 0..120 {
        let (comul_b, counit_b, dim): (&LinMap, &LinMap, usize) = if case % 2 == 0 {
            (taft.comul(), taft.counit(), 4)
        } else {
            (
                Box::leak(Box::new(random_magma_structure(&mut rng, 3).comul().clone())),
                Box::leak(Box::new(random_magma_structure(&mut rng, 3).counit().clone())),
                3,
            )
        };
        let _ = counit_b;
        let sp = comul_b.domain()[0].clone();
        let rand_fun = |rng: &mut Lcg| {
            let mut f = LinMap::zero(field, vec![sp.clone()], vec![]);
            for i in 0..dim as u64 {
                f.add_entry(i, 0, rng.small_scalar(field));
            }
            f
        };
        let (f, g, h) = (rand_fun(&mut rng), rand_fun(&mut rng), rand_fun(&mut rng));
        let fg = hopfq::algebra::convolve_functionals(&f, &g, comul_b).unwrap();
        let gh = hopfq::algebra::convolve_functionals(&g, &h, comul_b).unwrap();
        let left = hopfq::algebra::convolve_functionals(&fg, &h, comul_b).unwrap();
        let right = hopfq::algebra::convolve_functionals(&f, &gh, comul_b).unwrap();
        assert_eq!(left, right, "convolution of functionals must associate");
    }

    // Idempotent splitting postconditions on random idempotents.
    for case in 0..120 {
        let n = 2 + case % 3;
        let r = 1 + (case % n);
        let big = hopfq::space::BasedSpace::numbered(n).unwrap();
        let small = hopfq::space::BasedSpace::numbered(r).unwrap();
        let (m, nn) = loop {
            let m = random_map(&mut rng, field, &small, &big);
            let nn = random_map(&mut rng, field, &big, &small);
            if nn.compose(&m).unwrap().invert().is_ok() {
                break (m, nn);
            }
        };
        let inner_inv = nn.compose(&m).unwrap().invert().unwrap();
        let q = m.compose(&inner_inv).unwrap().compose(&nn).unwrap();
        let (p, i, z) = hopfq::linmap::split_idempotent(&q).unwrap();
        assert_eq!(z.dim(), r);
        assert_eq!(i.compose(&p).unwrap(), q);
        assert_eq!(p.compose(&i).unwrap(), LinMap::identity(field, &[z]));
    }

    // Naturality of the symmetry: c∘(f⊗g) = (g⊗f)∘c.
    for case in 0..120 {
        let nx = 2 + case % 3;
        let ny = 2 + (case / 3) % 3;
        let x = hopfq::space::BasedSpace::numbered(nx).unwrap();
        let y = hopfq::space::BasedSpace::numbered(ny).unwrap();
        let f = random_map(&mut rng, field, &x, &x);
        let g = random_map(&mut rng, field, &y, &y);
        let c = LinMap::swap(field, &x, &y);
        let lhs = c.compose(&f.tensor(&g)).unwrap();
        let rhs = g.tensor(&f).compose(&c).unwrap();
        assert_eq!(lhs, rhs);
    }

    pass(
        11,
        "division ⇔ invertible translation, convolution associativity, idempotent \
         splitting, and swap naturality hold on 120 random cases each (dims ≤ 4)",
    );
}
