use std::cmp::Ordering;
use std::fmt;

use crate::field::Prime;

use super::Generator;

/// A product of generator powers in canonical (sorted) order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(g: Generator) -> Self {
        Monomial(vec![(g, 1)])
    }

    /// `g^e`, or `None` if it vanishes (an exterior generator with `e ≥ 2`).
    pub fn power(p: Prime, g: Generator, e: u32) -> Option<Self> {
        if e == 0 {
            return Some(Monomial::one());
        }
        if e >= 2 && g.is_exterior(p) {
            return None;
        }
        Some(Monomial(vec![(g, e)]))
    }

    /// Builds a monomial from factors in the given order, returning the Koszul
    /// sign (`true` for −1) picked up while sorting, or `None` if it vanishes.
    pub fn from_factors<I>(p: Prime, factors: I) -> Option<(bool, Monomial)>
    where
        I: IntoIterator<Item = (Generator, u32)>,
    {
        factors
            .into_iter()
            .try_fold((false, Monomial::one()), |(sign, acc), (g, e)| {
                let m = Monomial::power(p, g, e)?;
                let (s, prod) = acc.mul(&m, p)?;
                Some((sign ^ s, prod))
            })
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(g, e)| g.degree() * *e as i64).sum()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|(g, e)| g.weight() * *e as u64).sum()
    }

    pub fn exponent_of(&self, g: &Generator) -> u32 {
        self.0
            .binary_search_by(|(h, _)| h.cmp(g))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Exponent-wise divisibility `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(g, e)| other.exponent_of(g) >= *e)
    }

    /// `self · other` with the Koszul sign (`true` for −1), or `None` if the
    /// product vanishes because an exterior generator would be repeated.
    pub fn mul(&self, other: &Monomial, p: Prime) -> Option<(bool, Monomial)> {
        let signed = p.is_odd();
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        // Number of exterior factors of `self` not yet merged; each exterior
        // factor of `other` must move past all of them.
        let mut odd_left: usize = if signed {
            self.0.iter().filter(|(g, _)| g.is_exterior(p)).count()
        } else {
            0
        };
        let mut transpositions = 0usize;
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let ord = match (self.0.get(i), other.0.get(j)) {
                (Some((a, _)), Some((b, _))) => a.cmp(b),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    let (g, e) = &self.0[i];
                    if signed && g.is_exterior(p) {
                        odd_left -= 1;
                    }
                    out.push((g.clone(), *e));
                    i += 1;
                }
                Ordering::Greater => {
                    let (g, e) = &other.0[j];
                    if signed && g.is_exterior(p) {
                        transpositions += odd_left;
                    }
                    out.push((g.clone(), *e));
                    j += 1;
                }
                Ordering::Equal => {
                    let (g, e) = &self.0[i];
                    if g.is_exterior(p) {
                        return None;
                    }
                    out.push((g.clone(), e + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        Some((transpositions % 2 == 1, Monomial(out)))
    }

    /// Splits off one copy of the first factor: `self = g · rest`, with no
    /// sign since `g` already leads the canonical order.
    pub fn split_first(&self) -> Option<(Generator, Monomial)> {
        let (g, e) = self.0.first()?;
        let mut rest = self.0.clone();
        if *e == 1 {
            rest.remove(0);
        } else {
            rest[0].1 -= 1;
        }
        Some((g.clone(), Monomial(rest)))
    }

    /// The single generator if this monomial is `g^1`.
    pub fn as_generator(&self) -> Option<&Generator> {
        match self.0.as_slice() {
            [(g, 1)] => Some(g),
            _ => None,
        }
    }

    /// The single generator and its exponent if this is a pure power.
    pub fn as_power(&self) -> Option<(&Generator, u32)> {
        match self.0.as_slice() {
            [(g, e)] => Some((g, *e)),
            _ => None,
        }
    }

    /// Ordering used for rendering: weight, then degree, then canonical order.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        (self.weight(), self.degree())
            .cmp(&(other.weight(), other.degree()))
            .then_with(|| self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, (g, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{g}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}
