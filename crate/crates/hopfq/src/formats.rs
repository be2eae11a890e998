//! JSON file formats for structures, functionals and elements, plus parsing
//! guards. Indices in files are 1-based; coefficients are strings `"n"` or
//! `"n/d"`.
//!
//! Divisions and antipodes carried by structure files are treated as hints:
//! they are re-checked against their defining identities on load and the file
//! is rejected if they fail.

use serde::{Deserialize, Serialize};
use std::sync::Arc;

use crate::algebra::AlgebraicStructure;
use crate::error::{Error, Result};
use crate::laws;
use crate::linmap::LinMap;
use crate::scalar::Field;
use crate::space::BasedSpace;

const MAX_DIM: usize = 4096;

/// Sparse structure-constant description of an algebraic structure.
///
/// `mul` entries `[i, j, k, c]` mean `μ(e_i⊗e_j) += c·e_k`; `comul` entries
/// `[i, j, k, c]` mean `δ(e_i) += c·e_j⊗e_k`; `unit`/`counit` entries
/// `[i, c]` give the coefficient of `e_i` in the unit resp. `ε(e_i)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureJson {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<(usize, String)>,
    pub counit: Vec<(usize, String)>,
    pub mul: Vec<(usize, usize, usize, String)>,
    pub comul: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ldiv: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rdiv: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
}

/// Sparse functional `{"base": ..., "entries": [[i, j, c], ...]}` meaning
/// `σ(e_i⊗e_j) = c`; absent pairs are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctionalJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    pub entries: Vec<(usize, usize, String)>,
}

/// Sparse element of a tensor square: `R = Σ c·e_i⊗e_j`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementJson {
    pub entries: Vec<(usize, usize, String)>,
}

fn check_index(i: usize, dim: usize, what: &str) -> Result<usize> {
    if i < 1 || i > dim {
        return Err(Error::Parse(format!("{what} index {i} out of range 1..={dim}")));
    }
    Ok(i - 1)
}

impl StructureJson {
    pub fn parse(text: &str) -> Result<Self> {
        let s: StructureJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("structure json: {e}")))?;
        Ok(s)
    }

    /// Builds the structure over `field`, re-checking any division/antipode
    /// hints against their defining identities.
    pub fn to_structure(&self, field: Field) -> Result<AlgebraicStructure> {
        if self.dim == 0 || self.dim > MAX_DIM {
            return Err(Error::Parse(format!(
                "dimension {} out of range 1..={MAX_DIM}",
                self.dim
            )));
        }
        if self.basis.len() != self.dim {
            return Err(Error::Parse("basis length differs from dim".into()));
        }
        let sp = BasedSpace::new(self.basis.clone())?;
        let n = self.dim;
        let pair = |entries: &[(usize, usize, usize, String)], what: &str| -> Result<LinMap> {
            let mut m = LinMap::zero(field, vec![sp.clone(), sp.clone()], vec![sp.clone()]);
            for (i, j, k, c) in entries {
                let (i, j, k) = (
                    check_index(*i, n, what)?,
                    check_index(*j, n, what)?,
                    check_index(*k, n, what)?,
                );
                m.add_entry((i * n + j) as u64, k as u64, field.parse(c)?);
            }
            Ok(m)
        };
        let mul = pair(&self.mul, "mul")?;
        let mut unit = LinMap::zero(field, vec![], vec![sp.clone()]);
        for (i, c) in &self.unit {
            unit.add_entry(0, check_index(*i, n, "unit")? as u64, field.parse(c)?);
        }
        let mut comul = LinMap::zero(field, vec![sp.clone()], vec![sp.clone(), sp.clone()]);
        for (i, j, k, c) in &self.comul {
            let (i, j, k) = (
                check_index(*i, n, "comul")?,
                check_index(*j, n, "comul")?,
                check_index(*k, n, "comul")?,
            );
            comul.add_entry(i as u64, (j * n + k) as u64, field.parse(c)?);
        }
        let mut counit = LinMap::zero(field, vec![sp.clone()], vec![]);
        for (i, c) in &self.counit {
            counit.add_entry(check_index(*i, n, "counit")? as u64, 0, field.parse(c)?);
        }
        let mut s = AlgebraicStructure::new(&self.name, sp.clone(), mul, unit, comul, counit)?;

        let recheck = |s: &AlgebraicStructure, ids: &[&str]| -> Result<()> {
            let b = laws::structure_binding(s)?;
            for id in ids {
                let r = laws::check_law_id(id, &b)?;
                if !r.pass {
                    return Err(Error::LawFails {
                        law: r.law,
                        witness: r
                            .witness
                            .map(|w| w.input)
                            .unwrap_or_else(|| "unevaluable".into()),
                    });
                }
            }
            Ok(())
        };
        if let Some(entries) = &self.ldiv {
            s = s.with_ldiv(pair(entries, "ldiv")?);
            recheck(&s, &["ldiv-cancel", "ldiv-recover"])?;
        }
        if let Some(entries) = &self.rdiv {
            s = s.with_rdiv(pair(entries, "rdiv")?);
            recheck(&s, &["rdiv-cancel", "rdiv-recover"])?;
        }
        if let Some(entries) = &self.antipode {
            let mut anti = LinMap::zero(field, vec![sp.clone()], vec![sp.clone()]);
            for (i, j, c) in entries {
                anti.add_entry(
                    check_index(*i, n, "antipode")? as u64,
                    check_index(*j, n, "antipode")? as u64,
                    field.parse(c)?,
                );
            }
            s = s.with_antipode(anti);
            recheck(
                &s,
                &[
                    "lhqg-cancel-1",
                    "lhqg-cancel-2",
                    "rhqg-cancel-1",
                    "rhqg-cancel-2",
                ],
            )?;
        }
        Ok(s)
    }

    /// Exports a structure into the file form.
    pub fn from_structure(s: &AlgebraicStructure) -> Self {
        let n = s.dim();
        let pair = |m: &LinMap| -> Vec<(usize, usize, usize, String)> {
            m.entries()
                .map(|(i, o, c)| {
                    (
                        (i as usize) / n + 1,
                        (i as usize) % n + 1,
                        o as usize + 1,
                        c.render(),
                    )
                })
                .collect()
        };
        StructureJson {
            name: s.name().to_string(),
            dim: n,
            basis: s.space().labels().to_vec(),
            unit: s
                .unit()
                .entries()
                .map(|(_, o, c)| (o as usize + 1, c.render()))
                .collect(),
            counit: s
                .counit()
                .entries()
                .map(|(i, _, c)| (i as usize + 1, c.render()))
                .collect(),
            mul: pair(s.mul()),
            comul: s
                .comul()
                .entries()
                .map(|(i, o, c)| {
                    (
                        i as usize + 1,
                        (o as usize) / n + 1,
                        (o as usize) % n + 1,
                        c.render(),
                    )
                })
                .collect(),
            ldiv: s.ldiv().map(pair),
            rdiv: s.rdiv().map(pair),
            antipode: s.antipode().map(|a| {
                a.entries()
                    .map(|(i, o, c)| (i as usize + 1, o as usize + 1, c.render()))
                    .collect()
            }),
        }
    }
}

impl FunctionalJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("functional json: {e}")))
    }

    /// Realizes the functional on the given tensor factors.
    pub fn to_map(&self, field: Field, left: &Arc<BasedSpace>, right: &Arc<BasedSpace>) -> Result<LinMap> {
        let mut m = LinMap::zero(field, vec![left.clone(), right.clone()], vec![]);
        let (dl, dr) = (left.dim(), right.dim());
        for (i, j, c) in &self.entries {
            let (i, j) = (
                check_index(*i, dl, "functional")?,
                check_index(*j, dr, "functional")?,
            );
            m.add_entry((i * dr + j) as u64, 0, field.parse(c)?);
        }
        Ok(m)
    }

    pub fn from_map(m: &LinMap, base: Option<String>) -> Result<Self> {
        if m.domain().len() != 2 || !m.codomain().is_empty() {
            return Err(Error::ShapeMismatch(
                "functional export expects a map X⊗Y -> K".into(),
            ));
        }
        let dr = m.domain()[1].dim();
        Ok(FunctionalJson {
            base,
            entries: m
                .entries()
                .map(|(i, _, c)| ((i as usize) / dr + 1, (i as usize) % dr + 1, c.render()))
                .collect(),
        })
    }
}

impl ElementJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("element json: {e}")))
    }

    /// Realizes the element as a map `K -> X⊗X`.
    pub fn to_map(&self, field: Field, space: &Arc<BasedSpace>) -> Result<LinMap> {
        let mut m = LinMap::zero(field, vec![], vec![space.clone(), space.clone()]);
        let d = space.dim();
        for (i, j, c) in &self.entries {
            let (i, j) = (check_index(*i, d, "element")?, check_index(*j, d, "element")?);
            m.add_entry(0, (i * d + j) as u64, field.parse(c)?);
        }
        Ok(m)
    }

    pub fn from_map(m: &LinMap) -> Result<Self> {
        if !m.domain().is_empty() || m.codomain().len() != 2 {
            return Err(Error::ShapeMismatch(
                "element export expects a map K -> X⊗X".into(),
            ));
        }
        let dr = m.codomain()[1].dim();
        Ok(ElementJson {
            entries: m
                .entries()
                .map(|(_, o, c)| ((o as usize) / dr + 1, (o as usize) % dr + 1, c.render()))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::taft4;

    #[test]
    fn structure_round_trip_is_bit_exact() {
        for s in [
            taft4(Field::Rational).unwrap(),
            crate::catalog::ms32_algebra(Field::Rational).unwrap(),
        ] {
            let j = StructureJson::from_structure(&s);
            let text = serde_json::to_string_pretty(&j).unwrap();
            let back = StructureJson::parse(&text).unwrap();
            let s2 = back.to_structure(Field::Rational).unwrap();
            assert_eq!(s.mul(), s2.mul());
            assert_eq!(s.comul(), s2.comul());
            assert_eq!(s.ldiv(), s2.ldiv());
            assert_eq!(s.rdiv(), s2.rdiv());
            assert_eq!(s.antipode(), s2.antipode());
            let text2 = serde_json::to_string_pretty(&StructureJson::from_structure(&s2)).unwrap();
            assert_eq!(text, text2);
        }
    }

    #[test]
    fn corrupted_antipode_hint_is_rejected() {
        let h = taft4(Field::Rational).unwrap();
        let mut j = StructureJson::from_structure(&h);
        if let Some(anti) = &mut j.antipode {
            anti[1].2 = "7".into(); // λ(x) = 7x breaks the antipode law
        }
        assert!(j.to_structure(Field::Rational).is_err());
    }

    #[test]
    fn out_of_range_indices_are_rejected() {
        let bad = r#"{"entries": [[1, 9, "1"]]}"#;
        let e = ElementJson::parse(bad).unwrap();
        let sp = BasedSpace::numbered(4).unwrap();
        assert!(e.to_map(Field::Rational, &sp).is_err());
    }
}
