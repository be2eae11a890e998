//! Finite loops by Cayley table: validation, identity classification, Chein
//! doubling, and linearization to a structure over the chosen field.

use serde::Serialize;

use crate::algebra::AlgebraicStructure;
use crate::error::{Error, Result};
use crate::laws;
use crate::linmap::LinMap;
use crate::scalar::Field;
use crate::space::BasedSpace;

const MAX_ORDER: usize = 10_000;

/// A finite loop: a Latin square with a two-sided identity, normalized so the
/// identity is element 1, together with its derived division tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Loop {
    labels: Vec<String>,
    /// `mul[u][v] = u·v`, 0-based.
    mul: Vec<Vec<usize>>,
    /// `ldiv[u][v] = u\v`, the unique `w` with `u·w = v`.
    ldiv: Vec<Vec<usize>>,
    /// `rdiv[u][v] = u/v`, the unique `w` with `w·v = u`.
    rdiv: Vec<Vec<usize>>,
}

/// One classified identity: whether it holds, and the first failing tuple
/// (as basis labels) otherwise.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LoopCheck {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl LoopCheck {
    fn ok() -> Self {
        LoopCheck {
            holds: true,
            witness: None,
        }
    }

    fn fail(labels: &[String], tuple: &[usize]) -> Self {
        LoopCheck {
            holds: false,
            witness: Some(tuple.iter().map(|&k| labels[k].clone()).collect()),
        }
    }
}

/// Classification of a loop against the identities the library tracks.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LoopClassification {
    pub order: usize,
    /// Full associativity.
    pub group: LoopCheck,
    /// Two-sided inverses with `u⁻¹(uv) = v = (vu)u⁻¹`.
    pub inverse_property: LoopCheck,
    /// Both Bol identities.
    pub moufang: LoopCheck,
    /// `y(z(yx)) = (y(zy))x`.
    pub left_bol: LoopCheck,
    /// `((xy)z)y = x((yz)y)`.
    pub right_bol: LoopCheck,
    /// `(a\e)·a = e`: the left inverse element is also a right inverse.
    pub left_inverse_is_right_inverse: LoopCheck,
}

impl Loop {
    /// Builds a loop from a 1-based multiplication table (row `u`, column `v`
    /// holds `u·v`). The table is validated as a Latin square with a two-sided
    /// identity, then re-indexed so the identity is element 1; each element
    /// keeps the label it had in the input order.
    pub fn from_rows(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        let bad = |msg: String| Error::BadLoop(format!("order-{n} table"), msg);
        if n == 0 || n > MAX_ORDER {
            return Err(bad("order must be between 1 and 10000".into()));
        }
        let mut mul = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!("row {} has {} entries", r + 1, row.len())));
            }
            let mut out = Vec::with_capacity(n);
            for &v in row {
                if v < 1 || v > n {
                    return Err(bad(format!("entry {v} out of range in row {}", r + 1)));
                }
                out.push(v - 1);
            }
            mul.push(out);
        }
        // Latin square: every row and column is a permutation.
        for (r, row) in mul.iter().enumerate() {
            let mut seen = vec![false; n];
            for &v in row {
                if seen[v] {
                    return Err(bad(format!("row {} repeats an entry", r + 1)));
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for row in &mul {
                if seen[row[c]] {
                    return Err(bad(format!("column {} repeats an entry", c + 1)));
                }
                seen[row[c]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| bad("no two-sided identity element".into()))?;
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(bad("label count differs from order".into()));
                }
                l
            }
            None => (1..=n).map(|k| format!("g{k}")).collect(),
        };
        // Re-index so the identity is element 1, keeping file order otherwise.
        let mut order_map: Vec<usize> = Vec::with_capacity(n);
        order_map.push(identity);
        order_map.extend((0..n).filter(|&x| x != identity));
        let mut inv = vec![0usize; n];
        for (new, &old) in order_map.iter().enumerate() {
            inv[old] = new;
        }
        let mul: Vec<Vec<usize>> = order_map
            .iter()
            .map(|&u| order_map.iter().map(|&v| inv[mul[u][v]]).collect())
            .collect();
        let labels: Vec<String> = order_map.iter().map(|&u| labels[u].clone()).collect();

        let mut ldiv = vec![vec![0usize; n]; n];
        let mut rdiv = vec![vec![0usize; n]; n];
        for u in 0..n {
            for w in 0..n {
                ldiv[u][mul[u][w]] = w; // u \ (u·w) = w
                rdiv[mul[w][u]][u] = w; // (w·u) / u = w
            }
        }
        Ok(Loop {
            labels,
            mul,
            ldiv,
            rdiv,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// 0-based product.
    pub fn mul(&self, u: usize, v: usize) -> usize {
        self.mul[u][v]
    }

    /// 0-based left division `u\v`.
    pub fn ldiv(&self, u: usize, v: usize) -> usize {
        self.ldiv[u][v]
    }

    /// 0-based right division `u/v`.
    pub fn rdiv(&self, u: usize, v: usize) -> usize {
        self.rdiv[u][v]
    }

    /// `u⁻¹ := u\e` (coincides with `e/u` exactly when inverses are two-sided).
    pub fn left_inverse(&self, u: usize) -> usize {
        self.ldiv[u][0]
    }

    /// Exhaustive classification over all triples, first witness in
    /// lexicographic order.
    pub fn classify(&self) -> LoopClassification {
        let n = self.order();
        let m = |a: usize, b: usize| self.mul[a][b];

        let scan3 = |pred: &dyn Fn(usize, usize, usize) -> bool| -> LoopCheck {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !pred(x, y, z) {
                            return LoopCheck::fail(&self.labels, &[x, y, z]);
                        }
                    }
                }
            }
            LoopCheck::ok()
        };

        let group = scan3(&|x, y, z| m(m(x, y), z) == m(x, m(y, z)));
        let right_bol = scan3(&|x, y, z| m(m(m(x, y), z), y) == m(x, m(m(y, z), y)));
        let left_bol = scan3(&|x, y, z| m(y, m(z, m(y, x))) == m(m(y, m(z, y)), x));
        let moufang = if right_bol.holds {
            left_bol.clone()
        } else {
            right_bol.clone()
        };

        let mut inverse_property = LoopCheck::ok();
        'ip: for u in 0..n {
            let li = self.ldiv[u][0]; // u\e
            let ri = self.rdiv[0][u]; // e/u
            if li != ri {
                inverse_property = LoopCheck::fail(&self.labels, &[u]);
                break;
            }
            for v in 0..n {
                if m(li, m(u, v)) != v || m(m(v, u), li) != v {
                    inverse_property = LoopCheck::fail(&self.labels, &[u, v]);
                    break 'ip;
                }
            }
        }

        let mut left_inverse_is_right_inverse = LoopCheck::ok();
        for a in 0..n {
            if m(self.ldiv[a][0], a) != 0 {
                left_inverse_is_right_inverse = LoopCheck::fail(&self.labels, &[a]);
                break;
            }
        }

        LoopClassification {
            order: n,
            group,
            inverse_property,
            moufang,
            left_bol,
            right_bol,
            left_inverse_is_right_inverse,
        }
    }

    /// Renders the loop back into the text format.
    pub fn to_text(&self) -> String {
        let n = self.order();
        let mut out = format!("{n}\n");
        for row in &self.mul {
            let line: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        for (k, l) in self.labels.iter().enumerate() {
            if *l != format!("g{}", k + 1) {
                out.push_str(&format!("label {} {}\n", k + 1, l));
            }
        }
        out
    }
}

/// The Chein double `M(G,2)`: the order-`2n` loop on pairs `g u^α` with
/// product `(g u^α)(h u^β) = (g^ν h^μ)^ν u^{α+β}`, `ν = (-1)^β`,
/// `μ = (-1)^{α+β}`.
///
/// Requires the input to be a group (checked exhaustively).
pub fn chein_double(g: &Loop) -> Result<Loop> {
    let cls = g.classify();
    if !cls.group.holds {
        return Err(Error::NotAGroup(format!(
            "associativity fails at {:?}",
            cls.group.witness
        )));
    }
    let n = g.order();
    let pow = |x: usize, e: i64| -> usize {
        if e >= 0 {
            x
        } else {
            g.ldiv(x, 0) // x^{-1} = x\e in a group
        }
    };
    let mut rows = vec![vec![0usize; 2 * n]; 2 * n];
    for a in 0..2 * n {
        for b in 0..2 * n {
            let (x, alpha) = (a % n, (a / n) as i64);
            let (y, beta) = (b % n, (b / n) as i64);
            let nu: i64 = if beta % 2 == 0 { 1 } else { -1 };
            let mu: i64 = if (alpha + beta) % 2 == 0 { 1 } else { -1 };
            let prod = pow(g.mul(pow(x, nu), pow(y, mu)), nu);
            rows[a][b] = prod + n * (((alpha + beta) % 2) as usize) + 1;
        }
    }
    let mut labels: Vec<String> = g.labels().to_vec();
    labels.extend(g.labels().iter().map(|l| format!("{l}u")));
    Loop::from_rows(rows, Some(labels))
}

/// Linearizes a loop over the field: group-like coproduct, product/division
/// tables extended linearly. When the loop has the inverse property the
/// antipode `λ(u) = u⁻¹` is attached and the structure certified as a Hopf
/// quasigroup (as a Hopf algebra when the loop is a group); otherwise it is
/// certified as a bimonoid with both divisions.
pub fn loop_algebra(l: &Loop, field: Field, name: &str) -> Result<AlgebraicStructure> {
    let sp = BasedSpace::new(l.labels().to_vec())?;
    let one = field.one();
    let pair = |m: &dyn Fn(usize, usize) -> usize| {
        LinMap::from_fn(field, vec![sp.clone(), sp.clone()], vec![sp.clone()], |ix| {
            vec![(vec![m(ix[0], ix[1])], one.clone())]
        })
    };
    let mul = pair(&|u, v| l.mul(u, v));
    let ldiv = pair(&|u, v| l.ldiv(u, v));
    let rdiv = pair(&|u, v| l.rdiv(u, v));
    let unit = LinMap::from_fn(field, vec![], vec![sp.clone()], |_| vec![(vec![0], one.clone())]);
    let comul = LinMap::from_fn(field, vec![sp.clone()], vec![sp.clone(), sp.clone()], |ix| {
        vec![(vec![ix[0], ix[0]], one.clone())]
    });
    let counit = LinMap::from_fn(field, vec![sp.clone()], vec![], |_| vec![(vec![], one.clone())]);
    let mut s = AlgebraicStructure::new(name, sp.clone(), mul, unit, comul, counit)?
        .with_ldiv(ldiv)
        .with_rdiv(rdiv);

    let cls = l.classify();
    let suite = if cls.inverse_property.holds {
        let antipode = LinMap::from_fn(field, vec![sp.clone()], vec![sp.clone()], |ix| {
            vec![(vec![l.left_inverse(ix[0])], one.clone())]
        });
        s = s.with_antipode(antipode);
        if cls.group.holds {
            "hopf-algebra"
        } else {
            "hqg"
        }
    } else {
        "bimonoid"
    };
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
    Ok(s)
}

/// Parses the loop text format: line 1 is the order `n`, the next `n` lines
/// hold `n` space-separated 1-based indices (`row u, column v` is `u·v`),
/// and optional trailing lines `label k name` attach basis labels.
pub fn parse_loop_text(input: &str) -> Result<Loop> {
    let mut lines = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty loop file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the order".into()))?;
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Parse(format!("unreasonable loop order {n}")));
    }
    let mut rows = Vec::new();
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("table ends before the declared order".into()))?;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad table entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let mut labels: Vec<String> = (1..=n).map(|k| format!("g{k}")).collect();
    for line in lines {
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some("label"), Some(k), Some(name), None) => {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad label index {k:?}")))?;
                if k < 1 || k > n {
                    return Err(Error::Parse(format!("label index {k} out of range")));
                }
                labels[k - 1] = name.to_string();
            }
            _ => return Err(Error::Parse(format!("unrecognized trailing line {line:?}"))),
        }
    }
    Loop::from_rows(rows, Some(labels))
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;

    /// Cyclic group of order `n` as a loop.
    pub(crate) fn cyclic(n: usize) -> Loop {
        let rows = (0..n)
            .map(|r| (0..n).map(|c| (r + c) % n + 1).collect())
            .collect();
        Loop::from_rows(rows, None).unwrap()
    }

    /// An order-5 loop that is neither associative nor IP (frozen table).
    pub(crate) fn order5_non_ip() -> Loop {
        let rows = vec![
            vec![1, 2, 3, 4, 5],
            vec![2, 1, 4, 5, 3],
            vec![3, 4, 5, 2, 1],
            vec![4, 5, 1, 3, 2],
            vec![5, 3, 2, 1, 4],
        ];
        Loop::from_rows(rows, None).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::tests_support::{cyclic, order5_non_ip};
    use super::*;

    #[test]
    fn cyclic_groups_classify_clean() {
        let c = cyclic(3).classify();
        assert!(c.group.holds);
        assert!(c.inverse_property.holds);
        assert!(c.moufang.holds);
        assert!(c.left_bol.holds && c.right_bol.holds);
        assert!(c.left_inverse_is_right_inverse.holds);
    }

    #[test]
    fn latin_square_violations_are_rejected() {
        assert!(Loop::from_rows(vec![vec![1, 1], vec![2, 1]], None).is_err());
        // Latin but no two-sided identity.
        let r = Loop::from_rows(
            vec![vec![1, 2, 3], vec![3, 1, 2], vec![2, 3, 1]],
            None,
        );
        assert!(r.is_err());
    }

    #[test]
    fn identity_is_renormalized_to_front() {
        // Identity is element 2 in file order.
        let l = Loop::from_rows(
            vec![vec![2, 1, 3], vec![1, 2, 3], vec![3, 3, 3]],
            Some(vec!["a".into(), "e".into(), "x".into()]),
        );
        // Row 3 is not a permutation; use a real group instead: Z/3 shuffled.
        assert!(l.is_err());
        let rows = vec![vec![3, 1, 2], vec![1, 2, 3], vec![2, 3, 1]];
        let l = Loop::from_rows(rows, Some(vec!["a".into(), "e".into(), "b".into()])).unwrap();
        assert_eq!(l.labels()[0], "e");
        assert_eq!(l.mul(0, 1), 1);
    }

    #[test]
    fn chein_double_of_trivial_group_is_z2() {
        let triv = Loop::from_rows(vec![vec![1]], None).unwrap();
        let d = chein_double(&triv).unwrap();
        assert_eq!(d.order(), 2);
        assert_eq!(d.mul(1, 1), 0);
        assert!(d.classify().group.holds);
    }

    #[test]
    fn chein_double_of_z2_is_the_klein_group() {
        let d = chein_double(&cyclic(2)).unwrap();
        assert_eq!(d.order(), 4);
        let c = d.classify();
        assert!(c.group.holds);
        assert!(chein_double(&order5_non_ip()).is_err());
    }

    #[test]
    fn order5_loop_is_not_ip_not_group() {
        let c = order5_non_ip().classify();
        assert!(!c.group.holds);
        assert!(!c.inverse_property.holds);
        assert!(c.group.witness.is_some());
    }

    #[test]
    fn loop_text_round_trip() {
        let l = cyclic(4);
        let text = l.to_text();
        let back = parse_loop_text(&text).unwrap();
        assert_eq!(l, back);
        assert!(parse_loop_text("").is_err());
        assert!(parse_loop_text("2\n1 2").is_err());
        assert!(parse_loop_text("junk").is_err());
    }
}
