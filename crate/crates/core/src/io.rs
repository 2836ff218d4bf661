//! JSON file formats.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteHomGroup;
use crate::module::FiniteHomModule;
use crate::ring::poly::{PolySpace, TwistedPolynomial};
use crate::ring::{FiniteHomRing, RingType};
use crate::table::Table;

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(parse_error)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Structural(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text)
}

fn check_len(name: &str, len: usize, n: usize) -> Result<()> {
    if len == n {
        Ok(())
    } else {
        Err(Error::Structural(format!("{name} has {len} entries, expected {n}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub n: usize,
    pub e: usize,
    pub mul: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv: Option<Vec<usize>>,
}

impl GroupFile {
    pub fn build(&self) -> Result<FiniteHomGroup> {
        check_len("alpha", self.alpha.len(), self.n)?;
        FiniteHomGroup::from_rows(&self.mul, self.alpha.clone(), self.e, self.inv.clone())
    }
}

impl From<&FiniteHomGroup> for GroupFile {
    fn from(g: &FiniteHomGroup) -> Self {
        GroupFile {
            n: g.order(),
            e: g.identity(),
            mul: g.mul_table().to_rows(),
            alpha: g.alpha_map().to_vec(),
            inv: Some(g.inv_map().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub n: usize,
    pub zero: usize,
    #[serde(default)]
    pub one: Option<usize>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    #[serde(rename = "type")]
    pub ring_type: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add_inv: Option<Vec<usize>>,
}

impl RingFile {
    pub fn build(&self) -> Result<FiniteHomRing> {
        let n = self.n;
        check_len("alpha", self.alpha.len(), n)?;
        check_len("beta", self.beta.len(), n)?;
        let ring_type = match self.ring_type {
            1 => RingType::One,
            2 => RingType::Two,
            t => return Err(Error::Structural(format!("ring type must be 1 or 2, not {t}"))),
        };
        let additive = FiniteHomGroup::from_rows(&self.add, self.alpha.clone(), self.zero, self.add_inv.clone())?;
        let mul = Table::from_rows("mul", &self.mul, n, n, n)?;
        FiniteHomRing::new(additive, mul, self.beta.clone(), self.one, ring_type)
    }
}

impl From<&FiniteHomRing> for RingFile {
    fn from(r: &FiniteHomRing) -> Self {
        RingFile {
            n: r.order(),
            zero: r.zero(),
            one: r.one(),
            add: r.additive().mul_table().to_rows(),
            mul: r.mul_table().to_rows(),
            alpha: r.alpha_map().to_vec(),
            beta: r.beta_map().to_vec(),
            ring_type: r.ring_type().number(),
            add_inv: Some(r.additive().inv_map().to_vec()),
        }
    }
}

/// A ring given inline or as a path relative to the module file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingRef {
    Path(PathBuf),
    Inline(Box<RingFile>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub ring: RingRef,
    pub m: usize,
    pub mzero: usize,
    pub madd: Vec<Vec<usize>>,
    pub beta: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act_left: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act_right: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minv: Option<Vec<usize>>,
}

impl ModuleFile {
    /// `base` resolves a ring given by path.
    pub fn build(&self, base: Option<&Path>) -> Result<FiniteHomModule> {
        let ring = match &self.ring {
            RingRef::Inline(r) => r.build()?,
            RingRef::Path(p) => {
                let p = base.map(|b| b.join(p)).unwrap_or_else(|| p.clone());
                read_json::<RingFile>(&p)?.build()?
            }
        };
        let (n, m) = (ring.order(), self.m);
        check_len("beta", self.beta.len(), m)?;
        let additive = FiniteHomGroup::from_rows(&self.madd, self.beta.clone(), self.mzero, self.minv.clone())?;
        let left = self
            .act_left
            .as_ref()
            .map(|t| Table::from_rows("act_left", t, n, m, m))
            .transpose()?;
        let right = self
            .act_right
            .as_ref()
            .map(|t| Table::from_rows("act_right", t, m, n, m))
            .transpose()?;
        FiniteHomModule::new(ring, additive, left, right)
    }
}

impl From<&FiniteHomModule> for ModuleFile {
    fn from(x: &FiniteHomModule) -> Self {
        ModuleFile {
            ring: RingRef::Inline(Box::new(RingFile::from(x.ring()))),
            m: x.order(),
            mzero: x.zero_element(),
            madd: x.additive().mul_table().to_rows(),
            beta: x.beta_map().to_vec(),
            act_left: x.left_table().map(Table::to_rows),
            act_right: x.right_table().map(Table::to_rows),
            minv: Some(x.additive().inv_map().to_vec()),
        }
    }
}

/// `f: A × B → C` between Hom-groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilinearFile {
    pub a: GroupFile,
    pub b: GroupFile,
    pub c: GroupFile,
    pub f: Vec<Vec<usize>>,
}

impl BilinearFile {
    pub fn build(&self) -> Result<(FiniteHomGroup, FiniteHomGroup, FiniteHomGroup, Table)> {
        let (a, b, c) = (self.a.build()?, self.b.build()?, self.c.build()?);
        let f = Table::from_rows("f", &self.f, a.order(), b.order(), c.order())?;
        Ok((a, b, c, f))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exponent {
    One(u64),
    Many(Vec<u64>),
}

/// Variables are ordered by name; a bare exponent is allowed with one variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyFile {
    pub p: u64,
    pub subst: BTreeMap<String, u64>,
    pub terms: Vec<(Exponent, u64)>,
}

impl PolyFile {
    pub fn build(&self) -> Result<TwistedPolynomial> {
        let space = PolySpace::new(
            self.p,
            self.subst.keys().cloned().collect(),
            self.subst.values().copied().collect(),
        )?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let m = match e {
                    Exponent::One(d) => vec![*d],
                    Exponent::Many(v) => v.clone(),
                };
                (m, *c)
            })
            .collect::<Vec<_>>();
        space.poly(terms)
    }
}

impl From<&TwistedPolynomial> for PolyFile {
    fn from(p: &TwistedPolynomial) -> Self {
        let single = p.space.arity() == 1;
        PolyFile {
            p: p.space.p,
            subst: p
                .space
                .vars
                .iter()
                .cloned()
                .zip(p.space.subst.iter().copied())
                .collect(),
            terms: p
                .terms
                .iter()
                .map(|(m, &c)| {
                    (
                        if single {
                            Exponent::One(m[0])
                        } else {
                            Exponent::Many(m.clone())
                        },
                        c,
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ring::RingType;

    #[test]
    fn group_round_trip() {
        let g = catalog::z6_5x();
        let f = GroupFile::from(&g);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(from_json::<GroupFile>(&text).unwrap().build().unwrap(), g);
    }

    #[test]
    fn missing_alpha_is_a_parse_error() {
        let e = from_json::<GroupFile>(r#"{"n":1,"e":0,"mul":[[0]]}"#).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }), "{e}");
    }

    #[test]
    fn derived_inverse_matches() {
        let g = catalog::twisted_s3();
        let mut f = GroupFile::from(&g);
        f.inv = None;
        assert_eq!(f.build().unwrap().inv_map(), g.inv_map());
    }

    #[test]
    fn ring_and_module_round_trip() {
        let r = catalog::f2c3_twist(RingType::Two);
        assert_eq!(RingFile::from(&r).build().unwrap(), r);
        let m = FiniteHomModule::regular(&catalog::f2c3_twist(RingType::One)).unwrap();
        let text = serde_json::to_string(&ModuleFile::from(&m)).unwrap();
        assert_eq!(from_json::<ModuleFile>(&text).unwrap().build(None).unwrap(), m);
    }

    #[test]
    fn polynomial_format() {
        let f: PolyFile = from_json(r#"{"p":5,"subst":{"X":2},"terms":[[1,1],[0,7]]}"#).unwrap();
        let p = f.build().unwrap();
        assert_eq!(p.terms.get(&vec![0]), Some(&2));
        assert_eq!(PolyFile::from(&p).build().unwrap(), p);
    }
}
