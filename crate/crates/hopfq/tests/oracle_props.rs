//! Property tests for the sparse exact linear algebra, checked against
//! independent dense oracles.

use std::sync::Arc;

use proptest::prelude::*;

use hopfq::linmap::{solve_right, LinMap};
use hopfq::space::BasedSpace;
use hopfq::{Field, Scalar};

const F: Field = Field::Rational;

/// Dense matrix oracle: rows of exact scalars, plain schoolbook operations.
#[derive(Clone, Debug, PartialEq)]
struct Dense {
    rows: Vec<Vec<Scalar>>,
}

impl Dense {
    fn from_map(m: &LinMap) -> Dense {
        let (nr, nc) = (m.cod_dim() as usize, m.dom_dim() as usize);
        let mut rows = vec![vec![F.zero(); nc]; nr];
        for (i, o, c) in m.entries() {
            rows[o as usize][i as usize] = c.clone();
        }
        Dense { rows }
    }

    fn matmul(&self, other: &Dense) -> Dense {
        let n = self.rows.len();
        let k = other.rows.len();
        let m = other.rows[0].len();
        let mut rows = vec![vec![F.zero(); m]; n];
        for r in 0..n {
            for c in 0..m {
                let mut acc = F.zero();
                for t in 0..k {
                    acc = &acc + &(&self.rows[r][t] * &other.rows[t][c]);
                }
                rows[r][c] = acc;
            }
        }
        Dense { rows }
    }

    fn kronecker(&self, other: &Dense) -> Dense {
        let (n1, m1) = (self.rows.len(), self.rows[0].len());
        let (n2, m2) = (other.rows.len(), other.rows[0].len());
        let mut rows = vec![vec![F.zero(); m1 * m2]; n1 * n2];
        for r1 in 0..n1 {
            for c1 in 0..m1 {
                for r2 in 0..n2 {
                    for c2 in 0..m2 {
                        rows[r1 * n2 + r2][c1 * m2 + c2] =
                            &self.rows[r1][c1] * &other.rows[r2][c2];
                    }
                }
            }
        }
        Dense { rows }
    }
}

fn space(n: usize) -> Arc<BasedSpace> {
    BasedSpace::numbered(n).unwrap()
}

fn map_from_entries(dom: usize, cod: usize, entries: &[(usize, usize, i64)]) -> LinMap {
    let mut m = LinMap::zero(F, vec![space(dom)], vec![space(cod)]);
    for (i, o, v) in entries {
        m.add_entry((*i % dom) as u64, (*o % cod) as u64, F.from_i64(*v));
    }
    m
}

prop_compose! {
    fn sparse_map(dom: usize, cod: usize)
        (entries in prop::collection::vec((0..dom, 0..cod, -4i64..=4), 0..=dom*cod))
        -> LinMap
    {
        map_from_entries(dom, cod, &entries)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compose_matches_dense_product(f in sparse_map(3, 3), g in sparse_map(3, 3)) {
        let sparse = g.compose(&f).unwrap();
        let dense = Dense::from_map(&g).matmul(&Dense::from_map(&f));
        prop_assert_eq!(Dense::from_map(&sparse), dense);
    }

    #[test]
    fn compose_is_associative(
        f in sparse_map(3, 2),
        g in sparse_map(2, 4),
        h in sparse_map(4, 3),
    ) {
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_matches_dense_kronecker(f in sparse_map(2, 2), g in sparse_map(3, 3)) {
        let sparse = f.tensor(&g);
        prop_assert_eq!(sparse.dom_dim(), 6);
        let dense = Dense::from_map(&f).kronecker(&Dense::from_map(&g));
        prop_assert_eq!(Dense::from_map(&sparse), dense);
    }

    #[test]
    fn tensor_is_functorial(
        f in sparse_map(2, 3), fp in sparse_map(3, 2),
        g in sparse_map(2, 2), gp in sparse_map(2, 3),
    ) {
        // (f'∘f) ⊗ (g'∘g) = (f'⊗g') ∘ (f⊗g)
        let lhs = fp.compose(&f).unwrap().tensor(&gp.compose(&g).unwrap());
        let rhs = fp.tensor(&gp).compose(&f.tensor(&g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_naturality(f in sparse_map(2, 2), g in sparse_map(3, 3)) {
        let x = space(2);
        let y = space(3);
        let c = LinMap::swap(F, &x, &y);
        let lhs = c.compose(&f.tensor(&g)).unwrap();
        let rhs = g.tensor(&f).compose(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn invert_gives_two_sided_inverse_or_correct_rank(m in sparse_map(4, 4)) {
        match m.invert() {
            Ok(inv) => {
                let id = LinMap::identity(F, m.domain());
                prop_assert_eq!(m.compose(&inv).unwrap(), id.clone());
                prop_assert_eq!(inv.compose(&m).unwrap(), id);
            }
            Err(hopfq::Error::NotInvertible { rank, dim }) => {
                prop_assert_eq!(dim, 4);
                prop_assert_eq!(rank, hopfq::linmap::rank(&m));
                prop_assert!(rank < 4);
            }
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
        }
    }

    #[test]
    fn solve_right_solutions_substitute_back(a in sparse_map(5, 5), b in sparse_map(2, 5)) {
        match solve_right(&a, &b) {
            Ok(x) => prop_assert_eq!(a.compose(&x).unwrap(), b),
            Err(hopfq::Error::NoSolution) => {
                // Inconsistency certificate: the rank grows when b is adjoined.
                let mut aug = LinMap::zero(
                    F,
                    vec![space(5 + 2)],
                    a.codomain().to_vec(),
                );
                for (i, o, c) in a.entries() {
                    aug.add_entry(i, o, c.clone());
                }
                for (i, o, c) in b.entries() {
                    aug.add_entry(5 + i, o, c.clone());
                }
                prop_assert!(hopfq::linmap::rank(&aug) > hopfq::linmap::rank(&a));
            }
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
        }
    }

    #[test]
    fn scalar_field_axioms(a in -30i64..30, b in -30i64..30, c in 1i64..30, d in 1i64..30) {
        let x = F.ratio(a, c).unwrap();
        let y = F.ratio(b, d).unwrap();
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(x.div(&y).unwrap().div(&y.inv().unwrap()).unwrap(), x.clone());
        }
        let p = Field::Prime(11);
        let xp = p.from_i64(a);
        let yp = p.from_i64(b);
        prop_assert_eq!(&xp * &yp, &yp * &xp);
        if !yp.is_zero() {
            prop_assert!((&yp * &yp.inv().unwrap()).is_one());
        }
    }
}
