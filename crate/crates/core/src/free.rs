//! Bases and bigraded Poincaré series of free E_k-algebras on one class, and
//! dimension-count checks of the tensor decompositions of free algebras.
//!
//! Series are graded by weight `w` and topological degree `d`. For a fixed base
//! degree `t` every class satisfies `d = w·t + e` with an *excess* `e ≥ 0` that
//! is additive and grows strictly under every operation of positive index.
//! Truncating at `w ≤ W` and `e ≤ E` is therefore exact, and finite even when
//! infinitely many operations act (k = ∞).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::sequences::{Arity, DlOp, DlSequence};

/// Truncation for enumerations and series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub weight: u64,
    /// Required whenever infinitely many operations fit under the weight bound.
    pub excess: Option<i64>,
}

impl Bounds {
    pub fn new(weight: u64, excess: Option<i64>) -> Self {
        Bounds { weight, excess }
    }
}

/// Weight, degree and excess of a class `P_I(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub weight: u64,
    pub degree: i64,
    pub excess: i64,
}

impl Shape {
    fn base(t: i64) -> Shape {
        Shape {
            weight: 1,
            degree: t,
            excess: 0,
        }
    }

    /// `d = w·t + e` gives `op(d) = (p·w)·t + op(e)`, so the excess follows
    /// the same degree map.
    fn apply(self, p: Prime, op: DlOp) -> Shape {
        Shape {
            weight: self.weight * p.get() as u64,
            degree: op.apply_degree(p, self.degree),
            excess: op.apply_degree(p, self.excess),
        }
    }
}

/// Which operations may be prepended at each step of a walk.
#[derive(Debug, Clone, Copy)]
struct Rule {
    /// Smallest doubled index allowed (`2j` at `p = 2`).
    min_twice: u32,
    /// Largest doubled index allowed, from arity or a range cap.
    max_twice: Option<u32>,
}

impl Rule {
    /// Operations of a free E_k-algebra: `i ≤ (k−1)/2`, or `1 ≤ j ≤ k−1` at `p = 2`.
    fn arity(p: Prime, k: Arity) -> Rule {
        let max_twice = k.finite().map(|k| {
            if p.is_two() {
                2 * k.saturating_sub(1)
            } else {
                k.saturating_sub(1)
            }
        });
        Rule {
            min_twice: if p.is_two() { 2 } else { 1 },
            max_twice,
        }
    }

    fn is_empty(&self) -> bool {
        self.max_twice.is_some_and(|m| m < self.min_twice)
    }
}

/// All sequences of the rule's shape applied to a class of the given shape,
/// with the result inside the bounds. Odd primes use the allowability
/// conditions; `p = 2` uses indices non-increasing from the inside out.
fn walk(p: Prime, rule: Rule, start: Shape, bounds: Bounds) -> Result<Vec<(DlSequence, Shape)>> {
    let mut out = vec![(DlSequence::empty(), start)];
    if rule.is_empty() {
        return Ok(out);
    }
    let mut stack = vec![(Vec::<DlOp>::new(), start)];
    while let Some((ops, shape)) = stack.pop() {
        let weight = shape.weight * p.get() as u64;
        if weight > bounds.weight {
            continue;
        }
        let prev = ops.last().copied();
        let upper = match (prev, rule.max_twice) {
            (Some(op), cap) => Some(cap.map_or(op.twice_index(), |c| c.min(op.twice_index()))),
            (None, cap) => cap,
        };
        let upper = match (upper, bounds.excess) {
            (Some(u), _) => u,
            (None, Some(e_max)) => {
                // Smallest excess contribution of index i2 is i2·(p−1) − 1 (odd)
                // or i2/2 (p = 2) on top of p·e.
                let room = e_max - p.get() as i64 * shape.excess;
                if room < 0 {
                    continue;
                }
                if p.is_two() {
                    (2 * room) as u32
                } else {
                    ((room + 1) / (p.get() as i64 - 1)) as u32
                }
            }
            (None, None) => {
                return Err(Error::Unbounded(
                    "infinitely many operations fit under the weight bound; give an excess bound"
                        .into(),
                ))
            }
        };
        let mut candidates = Vec::new();
        if p.is_two() {
            let mut i2 = rule.min_twice;
            while i2 <= upper {
                candidates.push(DlOp::Q(i2 / 2));
                i2 += 2;
            }
        } else {
            let parity = shape.degree.rem_euclid(2) as u32;
            let first = rule.min_twice.max(1);
            let first = first + (first + parity) % 2;
            let mut i2 = first;
            while i2 <= upper {
                if prev.is_none_or(|q| !q.bockstein() || (q.twice_index() - i2) % 2 == 1) {
                    candidates.push(DlOp::p(i2));
                    candidates.push(DlOp::bp(i2));
                }
                i2 += 2;
            }
        }
        for op in candidates {
            let next = shape.apply(p, op);
            if bounds.excess.is_some_and(|e| next.excess > e) {
                continue;
            }
            let mut next_ops = ops.clone();
            next_ops.push(op);
            out.push((DlSequence::from_innermost(next_ops.clone()), next));
            stack.push((next_ops, next));
        }
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(out)
}

/// `k`-allowable sequences on a class of degree `t` (basis-shape sequences at
/// `p = 2`) whose results lie inside the bounds, sorted by weight then degree.
pub fn allowable_sequences(p: Prime, k: Arity, t: i64, bounds: Bounds) -> Result<Vec<DlSequence>> {
    Ok(walk(p, Rule::arity(p, k), Shape::base(t), bounds)?
        .into_iter()
        .map(|(s, _)| s)
        .collect())
}

fn check_parity(p: Prime, k: Arity, t: i64) -> Result<()> {
    if p.is_odd() {
        if let Some(k) = k.finite() {
            if (k as i64 + t).rem_euclid(2) == 0 {
                return Err(Error::Precondition(format!(
                    "at odd p the base degree and k must have different parity (t = {t}, k = {k})"
                )));
            }
        }
    }
    Ok(())
}

/// The polynomial generators `P_I(x)` of the free E_k-algebra on `x` in degree `t`.
pub fn enumerate_generators(p: Prime, k: Arity, t: i64, bounds: Bounds) -> Result<Vec<Generator>> {
    check_parity(p, k, t)?;
    allowable_sequences(p, k, t, bounds)?
        .into_iter()
        .map(|seq| Generator::new(p, "x", t, seq))
        .collect()
}

/// Dimension counts `c_{w,d}` for `w ≤ W`, stored densely over `(w, e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedSeries {
    t: i64,
    w_max: u64,
    e_max: i64,
    coeffs: Vec<u64>,
}

impl BigradedSeries {
    /// The unit series 1.
    pub fn unit(t: i64, w_max: u64, e_max: i64) -> Self {
        assert!(e_max >= 0);
        let mut coeffs = vec![0; (w_max as usize + 1) * (e_max as usize + 1)];
        coeffs[0] = 1;
        BigradedSeries {
            t,
            w_max,
            e_max,
            coeffs,
        }
    }

    pub fn weight_bound(&self) -> u64 {
        self.w_max
    }

    pub fn excess_bound(&self) -> i64 {
        self.e_max
    }

    pub fn base_degree(&self) -> i64 {
        self.t
    }

    fn idx(&self, w: u64, e: i64) -> usize {
        w as usize * (self.e_max as usize + 1) + e as usize
    }

    fn in_range(&self, w: u64, e: i64) -> bool {
        w <= self.w_max && (0..=self.e_max).contains(&e)
    }

    /// `c_{w,d}`; zero outside the computed window.
    pub fn coeff(&self, w: u64, d: i64) -> u64 {
        let e = d - w as i64 * self.t;
        if self.in_range(w, e) {
            self.coeffs[self.idx(w, e)]
        } else {
            0
        }
    }

    /// Total dimension in degree `d`, summed over all weights.
    pub fn degree_total(&self, d: i64) -> u64 {
        (0..=self.w_max).map(|w| self.coeff(w, d)).sum()
    }

    /// Multiplies by `1/(1 − q^{(w,e)})`.
    pub fn mul_polynomial(&mut self, w: u64, e: i64) {
        assert!(w > 0, "a polynomial factor needs positive weight");
        for wi in w..=self.w_max {
            for ei in e.max(0)..=self.e_max {
                let src = self.coeffs[self.idx(wi - w, ei - e)];
                if src != 0 {
                    let dst = self.idx(wi, ei);
                    self.coeffs[dst] = self.coeffs[dst].checked_add(src).expect("series overflow");
                }
            }
        }
    }

    /// Multiplies by `1 + q^{(w,e)}`.
    pub fn mul_exterior(&mut self, w: u64, e: i64) {
        for wi in (w..=self.w_max).rev() {
            for ei in (e.max(0)..=self.e_max).rev() {
                let src = self.coeffs[self.idx(wi - w, ei - e)];
                if src != 0 {
                    let dst = self.idx(wi, ei);
                    self.coeffs[dst] = self.coeffs[dst].checked_add(src).expect("series overflow");
                }
            }
        }
    }

    /// Truncated convolution product.
    pub fn mul(&self, other: &BigradedSeries) -> Result<BigradedSeries> {
        if (self.t, self.w_max, self.e_max) != (other.t, other.w_max, other.e_max) {
            return Err(Error::Precondition("series have different windows".into()));
        }
        let mut out = BigradedSeries {
            coeffs: vec![0; self.coeffs.len()],
            ..*self
        };
        for w1 in 0..=self.w_max {
            for e1 in 0..=self.e_max {
                let a = self.coeffs[self.idx(w1, e1)];
                if a == 0 {
                    continue;
                }
                for w2 in 0..=self.w_max - w1 {
                    for e2 in 0..=self.e_max - e1 {
                        let b = other.coeffs[other.idx(w2, e2)];
                        if b != 0 {
                            let i = out.idx(w1 + w2, e1 + e2);
                            out.coeffs[i] += a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Non-zero coefficients as `(w, d, c)`, sorted.
    pub fn nonzero(&self) -> Vec<(u64, i64, u64)> {
        let mut out = Vec::new();
        for w in 0..=self.w_max {
            for e in 0..=self.e_max {
                let c = self.coeffs[self.idx(w, e)];
                if c != 0 {
                    out.push((w, w as i64 * self.t + e, c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The lexicographically first `(w, d)` where the two series differ.
    pub fn first_mismatch(&self, other: &BigradedSeries) -> Option<(u64, i64)> {
        let mut diffs: Vec<(u64, i64)> = Vec::new();
        for w in 0..=self.w_max.max(other.w_max) {
            for e in 0..=self.e_max.max(other.e_max) {
                let d = w as i64 * self.t + e;
                if self.coeff(w, d) != other.coeff(w, d) {
                    diffs.push((w, d));
                }
            }
        }
        diffs.into_iter().min()
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            weight_bound: self.w_max,
            excess_bound: self.e_max,
            t: self.t,
            coeffs: self.nonzero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(rename = "W")]
    pub weight_bound: u64,
    #[serde(rename = "E")]
    pub excess_bound: i64,
    pub t: i64,
    pub coeffs: Vec<(u64, i64, u64)>,
}

/// Multiplies `acc` by the series of the free E_k-algebra on one class.
fn mul_free_series(p: Prime, k: Arity, class: Shape, bounds: Bounds, acc: &mut BigradedSeries) -> Result<()> {
    if p.is_two() && k == Arity::Finite(0) {
        // Free E_0: the unit and the class itself.
        acc.mul_exterior(class.weight, class.excess);
        return Ok(());
    }
    let bounds = Bounds {
        weight: bounds.weight,
        excess: Some(bounds.excess.unwrap_or(acc.e_max)),
    };
    for (_, g) in walk(p, Rule::arity(p, k), class, bounds)? {
        if p.is_odd() && g.degree.rem_euclid(2) == 1 {
            acc.mul_exterior(g.weight, g.excess);
        } else {
            acc.mul_polynomial(g.weight, g.excess);
        }
    }
    Ok(())
}

/// Largest excess any monomial of weight ≤ W can reach, when the generating
/// set is finite.
fn natural_excess(p: Prime, k: Arity, t: i64, w_max: u64) -> Result<i64> {
    let gens = walk(p, Rule::arity(p, k), Shape::base(t), Bounds::new(w_max, None))?;
    Ok(gens
        .iter()
        .map(|(_, g)| g.excess * (w_max / g.weight) as i64)
        .max()
        .unwrap_or(0))
}

fn resolve_excess(p: Prime, k: Arity, t: i64, bounds: Bounds) -> Result<i64> {
    match bounds.excess {
        Some(e) if e < 0 => Err(Error::Precondition("excess bound must be non-negative".into())),
        Some(e) => Ok(e),
        None => natural_excess(p, k, t, bounds.weight),
    }
}

/// Poincaré series of the free E_k-algebra on `x` in degree `t`.
pub fn poincare_series(p: Prime, k: Arity, t: i64, bounds: Bounds) -> Result<BigradedSeries> {
    check_parity(p, k, t)?;
    let e_max = resolve_excess(p, k, t, bounds)?;
    let mut acc = BigradedSeries::unit(t, bounds.weight, e_max);
    mul_free_series(p, k, Shape::base(t), Bounds::new(bounds.weight, Some(e_max)), &mut acc)?;
    Ok(acc)
}

/// Which index set to use on the left-hand side of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexConvention {
    /// `p = 2`: `Q_k^{i_k}⋯Q_n^{i_n}`. Odd `p`: parity-preserving factors
    /// are `(k+1)`-bounded, so that every class is counted once.
    #[default]
    Corrected,
    /// `p = 2`: `Q_{k+1}^{i_{k+1}}⋯Q_n^{i_n}`. Odd `p`: parity-preserving
    /// factors are only `k`-bounded.
    Literal,
}

impl fmt::Display for IndexConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexConvention::Corrected => "corrected",
            IndexConvention::Literal => "literal",
        })
    }
}

impl FromStr for IndexConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "corrected" => Ok(IndexConvention::Corrected),
            "literal" => Ok(IndexConvention::Literal),
            _ => Err(format!("unknown convention `{s}` (expected corrected or literal)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    #[serde(rename = "match")]
    pub matched: bool,
    pub first_mismatch: Option<(u64, i64)>,
    /// Number of tensor factors on the left inside the window.
    pub factors: usize,
    #[serde(rename = "W")]
    pub weight_bound: u64,
    #[serde(rename = "E")]
    pub excess_bound: i64,
    pub convention: IndexConvention,
}

/// Compares the series of a tensor decomposition against the free algebra it
/// decomposes.
///
/// At `p = 2` the left side is the product over index sequences `I` of free
/// E_k-algebras on `Q_I(x)` and the target is free E_{n+1} on `x`. At odd
/// primes `n` must be infinite; the left side is free E_k on bounded
/// parity-preserving `P_I(x)` times free E_{k+1} on `(k+1)`-bounded
/// parity-flipping `P_J(x)`, and the target is free E_∞ on `x`.
pub fn verify_decomposition(
    p: Prime,
    k: u32,
    n: Arity,
    t: i64,
    bounds: Bounds,
    convention: IndexConvention,
) -> Result<DecompositionReport> {
    let (target, lhs, factors) = if p.is_two() {
        if n.finite().is_some_and(|n| k > n) {
            return Err(Error::Precondition(format!("need k ≤ n, got k = {k}, n = {n}")));
        }
        let target_arity = n.succ();
        let e_max = resolve_excess(p, target_arity, t, bounds)?;
        let window = Bounds::new(bounds.weight, Some(e_max));
        let target = poincare_series(p, target_arity, t, window)?;
        let low = match convention {
            IndexConvention::Corrected => k,
            IndexConvention::Literal => k + 1,
        };
        let rule = Rule {
            min_twice: 2 * low,
            max_twice: n.finite().map(|n| 2 * n),
        };
        let mut lhs = BigradedSeries::unit(t, bounds.weight, e_max);
        let classes = walk(p, rule, Shape::base(t), window)?;
        for (_, class) in &classes {
            mul_free_series(p, Arity::Finite(k), *class, window, &mut lhs)?;
        }
        (target, lhs, classes.len())
    } else {
        if n != Arity::Infinite {
            return Err(Error::Unsupported(
                "at odd primes only the decomposition of the free E_inf-algebra is available".into(),
            ));
        }
        check_parity(p, Arity::Finite(k), t)?;
        let e_max = resolve_excess(p, Arity::Infinite, t, bounds)?;
        let window = Bounds::new(bounds.weight, Some(e_max));
        let target = poincare_series(p, Arity::Infinite, t, window)?;
        let preserving_bound = match convention {
            IndexConvention::Corrected => k + 1,
            IndexConvention::Literal => k,
        };
        let all = walk(p, Rule::arity(p, Arity::Infinite), Shape::base(t), window)?;
        let mut lhs = BigradedSeries::unit(t, bounds.weight, e_max);
        let mut factors = 0;
        for (seq, class) in &all {
            let min = seq.ops().iter().map(|op| op.twice_index()).min().unwrap_or(u32::MAX);
            let flips = seq.bockstein_count() % 2 == 1;
            let arity = if flips && min > k {
                Arity::Finite(k + 1)
            } else if !flips && min >= preserving_bound.max(1) {
                Arity::Finite(k)
            } else {
                continue;
            };
            factors += 1;
            mul_free_series(p, arity, *class, window, &mut lhs)?;
        }
        (target, lhs, factors)
    };
    let first_mismatch = lhs.first_mismatch(&target);
    Ok(DecompositionReport {
        matched: first_mismatch.is_none(),
        first_mismatch,
        factors,
        weight_bound: target.weight_bound(),
        excess_bound: target.excess_bound(),
        convention,
    })
}
