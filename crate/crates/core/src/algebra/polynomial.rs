use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::{FpScalar, Prime};

use super::{Generator, Monomial};

/// An F_p-linear combination of monomials. Zero coefficients are never stored,
/// so the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    p: Prime,
    terms: BTreeMap<Monomial, FpScalar>,
}

impl Polynomial {
    pub fn zero(p: Prime) -> Self {
        Polynomial {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(p: Prime) -> Self {
        Polynomial::constant(p, 1)
    }

    pub fn constant(p: Prime, c: i64) -> Self {
        Polynomial::from_monomial(p, Monomial::one(), c)
    }

    pub fn from_monomial(p: Prime, m: Monomial, c: i64) -> Self {
        let mut out = Polynomial::zero(p);
        out.add_term(m, p.reduce(c));
        out
    }

    pub fn from_generator(p: Prime, g: Generator) -> Self {
        Polynomial::from_monomial(p, Monomial::generator(g), 1)
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FpScalar)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    /// Terms in rendering order: weight, degree, then monomial order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, FpScalar)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        terms
    }

    pub fn coeff(&self, m: &Monomial) -> FpScalar {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, m: Monomial, c: FpScalar) {
        let c = c % self.p.get();
        if c == 0 {
            return;
        }
        let p = self.p;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = p.add(*o.get(), c);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: FpScalar) -> Polynomial {
        let c = c % self.p.get();
        if c == 0 {
            return Polynomial::zero(self.p);
        }
        Polynomial {
            p: self.p,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.p.mul(*a, c)))
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.p.ensure_same(other.p)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Graded-commutative product.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.p.ensure_same(other.p)?;
        let p = self.p;
        let mut out = Polynomial::zero(p);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some((negative, m)) = a.mul(b, p) {
                    let c = p.mul(ca, cb);
                    out.add_term(m, if negative { p.neg(c) } else { c });
                }
            }
        }
        Ok(out)
    }

    /// `self · g^e` for a single factor on the right.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let p = self.p;
        let mut out = Polynomial::zero(p);
        for (a, c) in self.terms() {
            if let Some((negative, prod)) = a.mul(m, p) {
                out.add_term(prod, if negative { p.neg(c) } else { c });
            }
        }
        out
    }

    pub fn pow(&self, mut m: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.p);
        while m > 0 {
            if m & 1 == 1 {
                acc = &acc * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The common degree of all terms, if there is one. Zero is homogeneous of
    /// every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The JSON form: terms in rendering order with factor strings.
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermJson {
                    coeff: c,
                    factors: m
                        .factors()
                        .iter()
                        .map(|(g, e)| (g.to_string(), *e))
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: FpScalar,
    pub factors: Vec<(String, u32)>,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            match (m.is_one(), c) {
                (true, _) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{m}")?,
                (false, _) => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[p={}]({self})", self.p)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on mismatched primes; use [`Polynomial::try_add`] to handle it.
    fn add(self, other: &Polynomial) -> Polynomial {
        self.try_add(other).expect("polynomials over different primes")
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, other: &Polynomial) {
        assert_eq!(self.p, other.p, "polynomials over different primes");
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(self.p.neg(1))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// Panics on mismatched primes; use [`Polynomial::try_mul`] to handle it.
    fn mul(self, other: &Polynomial) -> Polynomial {
        self.try_mul(other).expect("polynomials over different primes")
    }
}
