//! Expansion of Dyer–Lashof operations on polynomials.
//!
//! An operation is pushed through sums by additivity, through products by the
//! Cartan formula, and stops at a single generator, where it becomes a formal
//! composite. Index zero is the Frobenius and never becomes a composite.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Generator, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::sequences::{is_allowable, is_basis_shape, Arity, DlOp, DlSequence};

/// The result of an expansion together with the two caveats that can apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalExpansion {
    pub value: Polynomial,
    /// Every composite created is allowable (odd `p`) or of basis shape (`p = 2`).
    pub adem_free: bool,
    /// Some terms were dropped by the weight bound.
    pub truncated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Flags {
    adem_free: bool,
    truncated: bool,
}

impl Flags {
    const CLEAN: Flags = Flags {
        adem_free: true,
        truncated: false,
    };

    fn merge(&mut self, other: Flags) {
        self.adem_free &= other.adem_free;
        self.truncated |= other.truncated;
    }
}

/// A memoizing expander for one prime and weight bound. Reusing an engine
/// across calls shares the cache.
pub struct CartanEngine {
    p: Prime,
    weight_bound: Option<u64>,
    memo: HashMap<(DlOp, Monomial), (Polynomial, Flags)>,
}

impl CartanEngine {
    pub fn new(p: Prime, weight_bound: Option<u64>) -> Self {
        CartanEngine {
            p,
            weight_bound,
            memo: HashMap::new(),
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn apply_op(&mut self, op: DlOp, f: &Polynomial) -> Result<FormalExpansion> {
        op.check_prime(self.p)?;
        self.p.ensure_same(f.p())?;
        let mut flags = Flags::CLEAN;
        let mut value = Polynomial::zero(self.p);
        for (m, c) in f.terms() {
            let (image, fl) = self.expand(op, m);
            flags.merge(fl);
            value += &image.scale(c);
        }
        Ok(FormalExpansion {
            value,
            adem_free: flags.adem_free,
            truncated: flags.truncated,
        })
    }

    /// Applies the sequence innermost first.
    pub fn apply_seq(&mut self, seq: &DlSequence, f: &Polynomial) -> Result<FormalExpansion> {
        let mut acc = FormalExpansion {
            value: f.clone(),
            adem_free: true,
            truncated: false,
        };
        for op in seq.innermost_first() {
            let next = self.apply_op(op, &acc.value)?;
            acc = FormalExpansion {
                value: next.value,
                adem_free: acc.adem_free && next.adem_free,
                truncated: acc.truncated || next.truncated,
            };
        }
        Ok(acc)
    }

    fn expand(&mut self, op: DlOp, m: &Monomial) -> (Polynomial, Flags) {
        let key = (op, m.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let out = self.expand_uncached(op, m);
        self.memo.insert(key, out.clone());
        out
    }

    fn expand_uncached(&mut self, op: DlOp, m: &Monomial) -> (Polynomial, Flags) {
        let p = self.p;
        let zero = (Polynomial::zero(p), Flags::CLEAN);
        if m.is_one() {
            return if op.is_frobenius() {
                (Polynomial::one(p), Flags::CLEAN)
            } else {
                zero
            };
        }
        if p.is_odd() && op.is_integral() != (m.degree().rem_euclid(2) == 0) {
            return zero;
        }
        if op.twice_index() == 0 {
            if op.bockstein() {
                return zero;
            }
            let pow = Polynomial::from_monomial(p, m.clone(), 1).pow(p.get());
            return (pow, Flags::CLEAN);
        }
        if let Some(w) = self.weight_bound {
            if p.get() as u64 * m.weight() > w {
                return (
                    Polynomial::zero(p),
                    Flags {
                        adem_free: true,
                        truncated: true,
                    },
                );
            }
        }
        if let Some(g) = m.as_generator() {
            return self.composite(op, g);
        }
        let (g, rest) = m.split_first().expect("non-unit monomial");
        let g_poly = Monomial::generator(g.clone());
        let mut flags = Flags::CLEAN;
        let mut value = Polynomial::zero(p);
        let i2 = op.twice_index();
        // The split k + l = i, with the integrality of k forced by g.
        let mut k2 = if p.is_odd() && !g.is_even() { 1 } else { 0 };
        while k2 <= i2 {
            let l2 = i2 - k2;
            if !op.bockstein() {
                let (a, fa) = self.expand(op.with_twice_index(k2), &g_poly);
                let (b, fb) = self.expand(op.with_twice_index(l2), &rest);
                flags.merge(fa);
                flags.merge(fb);
                value += &(&a * &b);
            } else {
                let (ba, f1) = self.expand(DlOp::bp(k2), &g_poly);
                let (b, f2) = self.expand(DlOp::p(l2), &rest);
                let (a, f3) = self.expand(DlOp::p(k2), &g_poly);
                let (bb, f4) = self.expand(DlOp::bp(l2), &rest);
                for f in [f1, f2, f3, f4] {
                    flags.merge(f);
                }
                value += &(&ba * &b);
                let second = &a * &bb;
                if g.is_even() {
                    value += &second;
                } else {
                    value += &(-&second);
                }
            }
            k2 += 2;
        }
        (value, flags)
    }

    fn composite(&self, op: DlOp, g: &Generator) -> (Polynomial, Flags) {
        let p = self.p;
        match g.apply(p, op) {
            None => (Polynomial::zero(p), Flags::CLEAN),
            Some(h) => {
                let adem_free = if p.is_two() {
                    is_basis_shape(h.seq())
                } else {
                    is_allowable(p, h.seq(), h.base_degree(), Arity::Infinite)
                };
                (
                    Polynomial::from_generator(p, h),
                    Flags {
                        adem_free,
                        truncated: false,
                    },
                )
            }
        }
    }
}

pub fn apply_op(
    p: Prime,
    op: DlOp,
    f: &Polynomial,
    weight_bound: Option<u64>,
) -> Result<FormalExpansion> {
    CartanEngine::new(p, weight_bound).apply_op(op, f)
}

pub fn apply_seq(
    p: Prime,
    seq: &DlSequence,
    f: &Polynomial,
    weight_bound: Option<u64>,
) -> Result<FormalExpansion> {
    CartanEngine::new(p, weight_bound).apply_seq(seq, f)
}

/// Coefficients of `φ(f) = Σ_i t^i (P_i(f) + βP_i(f)·z)` for integer `i ≤ max_i`,
/// with `z² = 0`. Keys are `(i, has_z)`; zero coefficients are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalOperation {
    p: Prime,
    max_i: u32,
    coeffs: BTreeMap<(u32, bool), Polynomial>,
}

impl TotalOperation {
    pub fn max_i(&self) -> u32 {
        self.max_i
    }

    pub fn coeff(&self, i: u32, z: bool) -> Polynomial {
        self.coeffs
            .get(&(i, z))
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.p))
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, bool), Polynomial> {
        &self.coeffs
    }

    /// Truncated product in `A[t, z]/(z², t^{max_i+1})`. All coefficients
    /// have even degree, so `z` commutes with them.
    pub fn mul(&self, other: &TotalOperation) -> Result<TotalOperation> {
        self.p.ensure_same(other.p)?;
        let max_i = self.max_i.min(other.max_i);
        let mut coeffs: BTreeMap<(u32, bool), Polynomial> = BTreeMap::new();
        for (&(i, zi), a) in &self.coeffs {
            for (&(j, zj), b) in &other.coeffs {
                if i + j > max_i || (zi && zj) {
                    continue;
                }
                let entry = coeffs
                    .entry((i + j, zi || zj))
                    .or_insert_with(|| Polynomial::zero(self.p));
                *entry += &a.try_mul(b)?;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(TotalOperation {
            p: self.p,
            max_i,
            coeffs,
        })
    }
}

pub fn total_operation(p: Prime, f: &Polynomial, max_i: u32) -> Result<TotalOperation> {
    let mut engine = CartanEngine::new(p, None);
    total_operation_with(&mut engine, f, max_i)
}

/// [`total_operation`] sharing an engine's cache.
pub fn total_operation_with(
    engine: &mut CartanEngine,
    f: &Polynomial,
    max_i: u32,
) -> Result<TotalOperation> {
    let p = engine.p();
    if p.is_two() {
        return Err(Error::Unsupported(
            "the total operation is defined for odd primes".into(),
        ));
    }
    if let Some((m, _)) = f.terms().find(|(m, _)| m.degree().rem_euclid(2) != 0) {
        return Err(Error::Parity(format!(
            "total operation needs even-degree input, found {m} of degree {}",
            m.degree()
        )));
    }
    let mut coeffs = BTreeMap::new();
    for i in 0..=max_i {
        let plain = engine.apply_op(DlOp::p(2 * i), f)?.value;
        if !plain.is_zero() {
            coeffs.insert((i, false), plain);
        }
        if i > 0 {
            let beta = engine.apply_op(DlOp::bp(2 * i), f)?.value;
            if !beta.is_zero() {
                coeffs.insert((i, true), beta);
            }
        }
    }
    Ok(TotalOperation { p, max_i, coeffs })
}
