//! Polynomial Hom-rings over `𝔽_p`.
//!
//! The twist `α̃` fixes coefficients and substitutes `X_i ↦ X_i^{k_i}`. With
//! `β = α̃` the operations are `P +̂ Q = α̃(P + Q)` and `P ·̂ Q = α̃(PQ)`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{CheckList, Verdict};

/// Monomial exponent vector → nonzero coefficient in `[1, p)`.
pub type Terms = BTreeMap<Vec<u64>, u64>;

/// The ambient polynomial Hom-ring: coefficient field and substitution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySpace {
    pub p: u64,
    pub vars: Vec<String>,
    /// `α̃(X_i) = X_i^{subst[i]}`.
    pub subst: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedPolynomial {
    pub space: PolySpace,
    pub terms: Terms,
}

fn overflow() -> Error {
    Error::invariant("exponent overflow")
}

impl PolySpace {
    pub fn new(p: u64, vars: Vec<String>, subst: Vec<u64>) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::precondition(format!("{p} is not prime")));
        }
        if vars.len() != subst.len() {
            return Err(Error::structural("one substitution exponent per variable"));
        }
        Ok(PolySpace { p, vars, subst })
    }

    /// One variable `X` with `α̃(X) = X^k`.
    pub fn univariate(p: u64, k: u64) -> Result<Self> {
        Self::new(p, vec!["X".into()], vec![k])
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Builds a polynomial, reducing coefficients and dropping zeros.
    pub fn poly(&self, terms: impl IntoIterator<Item = (Vec<u64>, u64)>) -> Result<TwistedPolynomial> {
        let mut t = Terms::new();
        for (m, c) in terms {
            if m.len() != self.arity() {
                return Err(Error::structural(format!("monomial {m:?} has the wrong arity")));
            }
            self.accumulate(&mut t, m, c % self.p);
        }
        Ok(self.wrap(t))
    }

    fn wrap(&self, terms: Terms) -> TwistedPolynomial {
        TwistedPolynomial {
            space: self.clone(),
            terms,
        }
    }

    fn accumulate(&self, t: &mut Terms, m: Vec<u64>, c: u64) {
        let e = t.entry(m).or_insert(0);
        *e = (*e + c) % self.p;
        t.retain(|_, c| *c != 0);
    }

    pub fn zero(&self) -> TwistedPolynomial {
        self.wrap(Terms::new())
    }

    pub fn one(&self) -> TwistedPolynomial {
        self.wrap(Terms::from([(vec![0; self.arity()], 1)]))
    }

    /// The variable `X_i`.
    pub fn var(&self, i: usize) -> TwistedPolynomial {
        let mut m = vec![0; self.arity()];
        m[i] = 1;
        self.wrap(Terms::from([(m, 1)]))
    }

    fn check(&self, p: &TwistedPolynomial) -> Result<()> {
        if &p.space == self {
            Ok(())
        } else {
            Err(Error::precondition("polynomials live in different Hom-rings"))
        }
    }

    /// Ordinary sum.
    pub fn plain_add(&self, a: &TwistedPolynomial, b: &TwistedPolynomial) -> Result<TwistedPolynomial> {
        self.check(a)?;
        self.check(b)?;
        let mut t = a.terms.clone();
        for (m, &c) in &b.terms {
            self.accumulate(&mut t, m.clone(), c);
        }
        Ok(self.wrap(t))
    }

    /// Ordinary product.
    pub fn plain_mul(&self, a: &TwistedPolynomial, b: &TwistedPolynomial) -> Result<TwistedPolynomial> {
        self.check(a)?;
        self.check(b)?;
        let mut t = Terms::new();
        for (m, &c) in &a.terms {
            for (l, &d) in &b.terms {
                let e = m
                    .iter()
                    .zip(l)
                    .map(|(x, y)| x.checked_add(*y).ok_or_else(overflow))
                    .collect::<Result<Vec<u64>>>()?;
                self.accumulate(&mut t, e, c * d % self.p);
            }
        }
        Ok(self.wrap(t))
    }

    /// `α̃`: coefficients fixed, `X_i ↦ X_i^{k_i}`.
    pub fn alpha(&self, a: &TwistedPolynomial) -> Result<TwistedPolynomial> {
        self.check(a)?;
        let mut t = Terms::new();
        for (m, &c) in &a.terms {
            let e = m
                .iter()
                .zip(&self.subst)
                .map(|(x, k)| x.checked_mul(*k).ok_or_else(overflow))
                .collect::<Result<Vec<u64>>>()?;
            self.accumulate(&mut t, e, c);
        }
        Ok(self.wrap(t))
    }

    pub fn beta(&self, a: &TwistedPolynomial) -> Result<TwistedPolynomial> {
        self.alpha(a)
    }

    /// `P +̂ Q`.
    pub fn sum(&self, a: &TwistedPolynomial, b: &TwistedPolynomial) -> Result<TwistedPolynomial> {
        self.alpha(&self.plain_add(a, b)?)
    }

    /// `P ·̂ Q`.
    pub fn product(&self, a: &TwistedPolynomial, b: &TwistedPolynomial) -> Result<TwistedPolynomial> {
        self.alpha(&self.plain_mul(a, b)?)
    }

    /// Uniform coefficients on every monomial of total degree `≤ max_degree`.
    pub fn random<R: Rng>(&self, rng: &mut R, max_degree: u64) -> TwistedPolynomial {
        let mut t = Terms::new();
        for m in monomials(self.arity(), max_degree) {
            let c = rng.gen_range(0..self.p);
            if c != 0 {
                t.insert(m, c);
            }
        }
        self.wrap(t)
    }
}

fn monomials(arity: usize, max_degree: u64) -> Vec<Vec<u64>> {
    if arity == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for mut rest in monomials(arity - 1, max_degree - d) {
            rest.insert(0, d);
            out.push(rest);
        }
    }
    out
}

pub const POLY_MK1: &str = "MK1 hom-associativity";
pub const POLY_MK2: &str = "MK2 left hom-distributivity";
pub const POLY_MK3: &str = "MK3 right hom-distributivity";
pub const POLY_MK4: &str = "MK4 unit";
pub const POLY_MK5: &str = "MK5 unit fixed by twists";
pub const POLY_ALPHA_MULTIPLICATIVE: &str = "alpha multiplicative";
pub const POLY_ADD_ASSOCIATIVITY: &str = "additive hom-associativity";

/// Type (1) identities on `count` random triples of degree `≤ max_degree`.
/// A failing verdict carries the index of the first failing sample.
pub fn check_poly_axioms<R: Rng>(space: &PolySpace, rng: &mut R, count: usize, max_degree: u64) -> Result<CheckList> {
    let s = space;
    let one = s.one();
    let mut fail: BTreeMap<&str, usize> = BTreeMap::new();
    let names = [
        POLY_MK1,
        POLY_MK2,
        POLY_MK3,
        POLY_MK4,
        POLY_ALPHA_MULTIPLICATIVE,
        POLY_ADD_ASSOCIATIVITY,
    ];
    for i in 0..count {
        let (x, y, z) = (
            s.random(rng, max_degree),
            s.random(rng, max_degree),
            s.random(rng, max_degree),
        );
        let bx = s.beta(&x)?;
        let bz = s.beta(&z)?;
        let ax = s.alpha(&x)?;
        let xy = s.product(&x, &y)?;
        let ok = [
            s.product(&bx, &s.product(&y, &z)?)? == s.product(&xy, &bz)?,
            s.product(&ax, &s.sum(&y, &z)?)? == s.sum(&xy, &s.product(&x, &z)?)?,
            s.product(&s.sum(&y, &z)?, &ax)? == s.sum(&s.product(&y, &x)?, &s.product(&z, &x)?)?,
            s.product(&x, &one)? == bx && s.product(&one, &x)? == bx,
            s.alpha(&xy)? == s.product(&ax, &s.alpha(&y)?)?,
            s.sum(&ax, &s.sum(&y, &z)?)? == s.sum(&s.sum(&x, &y)?, &s.alpha(&z)?)?,
        ];
        for (name, ok) in names.iter().zip(ok) {
            if !ok {
                fail.entry(name).or_insert(i);
            }
        }
    }
    let mut checks = CheckList::default();
    for name in names {
        checks.push(name, Verdict::from_witness(fail.get(name).map(|&i| vec![i])));
    }
    let fixed = s.alpha(&one)? == one;
    checks.push(POLY_MK5, Verdict::from_witness((!fixed).then(Vec::new)));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn x_plus_x_is_two_x_squared() {
        let s = PolySpace::univariate(5, 2).unwrap();
        let x = s.var(0);
        let sum = s.sum(&x, &x).unwrap();
        assert_eq!(sum, s.poly([(vec![2], 2)]).unwrap());
    }

    #[test]
    fn adding_zero_applies_alpha() {
        let s = PolySpace::univariate(5, 2).unwrap();
        let p = s.poly([(vec![0], 3), (vec![1], 1), (vec![3], 4)]).unwrap();
        assert_eq!(s.sum(&p, &s.zero()).unwrap(), s.alpha(&p).unwrap());
        assert_eq!(
            s.alpha(&p).unwrap(),
            s.poly([(vec![0], 3), (vec![2], 1), (vec![6], 4)]).unwrap()
        );
    }

    #[test]
    fn sampled_type_one_axioms() {
        let s = PolySpace::univariate(5, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = check_poly_axioms(&s, &mut rng, 200, 6).unwrap();
        assert!(c.all_pass(), "{c:?}");
    }

    #[test]
    fn bivariate() {
        let s = PolySpace::new(3, vec!["X".into(), "Y".into()], vec![2, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert!(check_poly_axioms(&s, &mut rng, 50, 3).unwrap().all_pass());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PolySpace::univariate(6, 2).is_err());
    }
}
