//! Dyer–Lashof operation symbols and sequences.
//!
//! Odd-primary operations `β^ε P_i` carry a half-integer index `i ∈ ½·Z≥0`,
//! stored doubled so all arithmetic stays in the integers. At `p = 2` the
//! operations are `Q_j` with an integer subscript. Every index here is a
//! *lower* index: `β^ε P_i` sends a class of degree `t` to degree
//! `p·t + 2i(p−1) − ε`, and `Q_j` sends degree `t` to `2t + j`.
//!
//! A [`DlSequence`] stores its operations outermost first, so
//! `bP_1/2 bP_1` is `βP_{1/2}` applied after `βP_1`. Conditions that refer to
//! `i_1` refer to the innermost (last stored) entry.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Prime;

/// A single Dyer–Lashof operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DlOp {
    /// `Q_j`, defined at `p = 2`. `Q_0` is the squaring map.
    Q(u32),
    /// `β^ε P_i` for odd `p`, with `twice_index = 2i`. `P_0` is the p-th power.
    P { bockstein: bool, twice_index: u32 },
}

impl DlOp {
    pub fn q(j: u32) -> Self {
        DlOp::Q(j)
    }

    /// `P_i` with `i = twice_index / 2`.
    pub fn p(twice_index: u32) -> Self {
        DlOp::P {
            bockstein: false,
            twice_index,
        }
    }

    /// `βP_i` with `i = twice_index / 2`.
    pub fn bp(twice_index: u32) -> Self {
        DlOp::P {
            bockstein: true,
            twice_index,
        }
    }

    /// The index doubled; for `Q_j` this is `2j`.
    pub fn twice_index(self) -> u32 {
        match self {
            DlOp::Q(j) => 2 * j,
            DlOp::P { twice_index, .. } => twice_index,
        }
    }

    pub fn bockstein(self) -> bool {
        matches!(self, DlOp::P { bockstein: true, .. })
    }

    /// Whether the (lower) index is an integer.
    pub fn is_integral(self) -> bool {
        self.twice_index().is_multiple_of(2)
    }

    /// The index-zero operation without Bockstein: the p-th power.
    pub fn is_frobenius(self) -> bool {
        self.twice_index() == 0 && !self.bockstein()
    }

    /// Same operation with a different doubled index.
    pub fn with_twice_index(self, twice_index: u32) -> Self {
        match self {
            DlOp::Q(_) => DlOp::Q(twice_index / 2),
            DlOp::P { bockstein, .. } => DlOp::P {
                bockstein,
                twice_index,
            },
        }
    }

    /// Degree of the output when applied to a class of degree `d`.
    pub fn apply_degree(self, p: Prime, d: i64) -> i64 {
        let p = p.get() as i64;
        match self {
            DlOp::Q(j) => 2 * d + j as i64,
            DlOp::P {
                bockstein,
                twice_index,
            } => p * d + twice_index as i64 * (p - 1) - bockstein as i64,
        }
    }

    /// Rejects `Q_j` at odd primes and `β^ε P_i` at `p = 2`.
    pub fn check_prime(self, p: Prime) -> Result<()> {
        match (self, p.is_two()) {
            (DlOp::Q(_), true) | (DlOp::P { .. }, false) => Ok(()),
            _ => Err(Error::OperationPrime {
                op: self.to_string(),
                p: p.get(),
            }),
        }
    }
}

impl Ord for DlOp {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |op: &DlOp| (op.twice_index(), op.bockstein(), matches!(op, DlOp::Q(_)));
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for DlOp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DlOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DlOp::Q(j) => write!(f, "Q_{j}"),
            DlOp::P {
                bockstein,
                twice_index,
            } => {
                if bockstein {
                    f.write_str("b")?;
                }
                if twice_index % 2 == 0 {
                    write!(f, "P_{}", twice_index / 2)
                } else {
                    write!(f, "P_{twice_index}/2")
                }
            }
        }
    }
}

/// A composite of operations, stored outermost first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DlSequence(Vec<DlOp>);

impl DlSequence {
    pub fn empty() -> Self {
        DlSequence(Vec::new())
    }

    /// Builds a sequence from operations listed outermost first.
    pub fn new(ops: Vec<DlOp>) -> Self {
        DlSequence(ops)
    }

    /// Builds a sequence from operations listed innermost first.
    pub fn from_innermost(mut ops: Vec<DlOp>) -> Self {
        ops.reverse();
        DlSequence(ops)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Operations outermost first.
    pub fn ops(&self) -> &[DlOp] {
        &self.0
    }

    /// Operations in application order.
    pub fn innermost_first(&self) -> impl DoubleEndedIterator<Item = DlOp> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn outermost(&self) -> Option<DlOp> {
        self.0.first().copied()
    }

    /// `op ∘ self`.
    pub fn prepend(&self, op: DlOp) -> Self {
        let mut ops = Vec::with_capacity(self.0.len() + 1);
        ops.push(op);
        ops.extend_from_slice(&self.0);
        DlSequence(ops)
    }

    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn after(&self, inner: &DlSequence) -> Self {
        let mut ops = self.0.clone();
        ops.extend_from_slice(&inner.0);
        DlSequence(ops)
    }

    pub fn bockstein_count(&self) -> usize {
        self.0.iter().filter(|op| op.bockstein()).count()
    }

    /// Checks that every operation is of the right kind for `p` and that
    /// stored indices are positive.
    pub fn check_prime(&self, p: Prime) -> Result<()> {
        for op in &self.0 {
            op.check_prime(p)?;
            if op.twice_index() == 0 {
                return Err(Error::InvalidGenerator(format!(
                    "index-zero operation {op} cannot be stored in a sequence"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for DlSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, op) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{op}")?;
        }
        Ok(())
    }
}

impl FromIterator<DlOp> for DlSequence {
    fn from_iter<T: IntoIterator<Item = DlOp>>(iter: T) -> Self {
        DlSequence(iter.into_iter().collect())
    }
}

/// The `k` of an `E_k`-algebra, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Arity {
    Finite(u32),
    Infinite,
}

impl Arity {
    pub fn finite(self) -> Option<u32> {
        match self {
            Arity::Finite(k) => Some(k),
            Arity::Infinite => None,
        }
    }

    pub fn succ(self) -> Arity {
        match self {
            Arity::Finite(k) => Arity::Finite(k + 1),
            Arity::Infinite => Arity::Infinite,
        }
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arity::Finite(k) => write!(f, "{k}"),
            Arity::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Arity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Arity::Infinite),
            other => other
                .parse::<u32>()
                .map(Arity::Finite)
                .map_err(|_| format!("expected a non-negative integer or `inf`, got `{s}`")),
        }
    }
}

/// Degree of `I(x)` for `x` of degree `t`.
pub fn seq_degree(p: Prime, seq: &DlSequence, t: i64) -> i64 {
    seq.innermost_first().fold(t, |d, op| op.apply_degree(p, d))
}

/// Arity weight `p^len` of a composite.
pub fn seq_weight(p: Prime, seq: &DlSequence) -> u64 {
    (p.get() as u64).pow(seq.len() as u32)
}

/// Converts an upper-indexed operation to lower indexing on a class of
/// degree `t`. The upper index is passed doubled. Returns `None` when the
/// operation vanishes on such a class.
pub fn lower_from_upper(p: Prime, bockstein: bool, upper_twice: i64, t: i64) -> Option<DlOp> {
    if p.is_two() {
        if bockstein || upper_twice % 2 != 0 {
            return None;
        }
        let j = upper_twice / 2 - t;
        (j >= 0).then_some(DlOp::Q(j as u32))
    } else {
        let lower = upper_twice - t;
        if lower < 0 || (lower == 0 && bockstein) {
            return None;
        }
        Some(DlOp::P {
            bockstein,
            twice_index: lower as u32,
        })
    }
}

/// Inverse of [`lower_from_upper`]: the doubled upper index.
pub fn upper_from_lower(p: Prime, op: DlOp, t: i64) -> i64 {
    if p.is_two() {
        2 * (op.twice_index() as i64 / 2 + t)
    } else {
        op.twice_index() as i64 + t
    }
}

/// `k`-allowability of `I` on a class of degree `t`.
///
/// At odd primes: integrality of each index matches the parity of the class
/// it acts on, indices are non-increasing outward, a Bockstein forces the
/// next index out to differ by a strict half-integer, and `i ≤ (k−1)/2`.
/// At `p = 2` the basis shape `Q_a^{i_a}⋯Q_b^{i_b}` with `1 ≤ a ≤ b ≤ k−1`.
pub fn is_allowable(p: Prime, seq: &DlSequence, t: i64, k: Arity) -> bool {
    if seq.check_prime(p).is_err() {
        return false;
    }
    let cap = k.finite().map(|k| k as i64 - 1);
    if p.is_two() {
        return is_basis_shape(seq)
            && seq
                .ops()
                .iter()
                .all(|op| cap.is_none_or(|c| (op.twice_index() / 2) as i64 <= c));
    }
    let mut degree = t;
    let mut previous: Option<DlOp> = None;
    for op in seq.innermost_first() {
        let i2 = op.twice_index() as i64;
        if op.is_integral() != (degree.rem_euclid(2) == 0) {
            return false;
        }
        if let Some(prev) = previous {
            if i2 > prev.twice_index() as i64 {
                return false;
            }
            if prev.bockstein() && (prev.twice_index() as i64 - i2) % 2 == 0 {
                return false;
            }
        }
        if cap.is_some_and(|c| i2 > c) {
            return false;
        }
        degree = op.apply_degree(p, degree);
        previous = Some(op);
    }
    true
}

/// `Q_{j_1} ⋯ Q_{j_r}` with `1 ≤ j_1 ≤ … ≤ j_r` (outermost smallest).
pub fn is_basis_shape(seq: &DlSequence) -> bool {
    seq.ops().iter().all(|op| matches!(op, DlOp::Q(j) if *j >= 1))
        && seq
            .ops()
            .windows(2)
            .all(|w| w[0].twice_index() <= w[1].twice_index())
}

/// `n`-boundedness: every index satisfies `i > (n−1)/2`.
pub fn is_bounded(seq: &DlSequence, n: u32) -> bool {
    seq.ops().iter().all(|op| op.twice_index() >= n)
}

/// Bosonic/fermionic type of a sequence acting on an even class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quark {
    PurelyBosonic,
    MixedBosonic,
    Fermionic,
}

impl fmt::Display for Quark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quark::PurelyBosonic => "purely-bosonic",
            Quark::MixedBosonic => "mixed-bosonic",
            Quark::Fermionic => "fermionic",
        })
    }
}

/// Each `β` flips degree parity and `P_i` preserves it, so the type is
/// determined by the Bockstein count.
pub fn classify(seq: &DlSequence) -> Result<Quark> {
    if seq.is_empty() {
        return Err(Error::Classification("the empty sequence has no type".into()));
    }
    if seq.ops().iter().any(|op| matches!(op, DlOp::Q(_))) {
        return Err(Error::Classification(format!(
            "`{seq}` is not an odd-primary sequence"
        )));
    }
    Ok(match seq.bockstein_count() {
        0 => Quark::PurelyBosonic,
        n if n % 2 == 1 => Quark::Fermionic,
        _ => Quark::MixedBosonic,
    })
}

/// Multiplies every index of a purely bosonic sequence by `m`.
pub fn scale_seq(seq: &DlSequence, m: u32) -> Result<DlSequence> {
    if classify(seq)? != Quark::PurelyBosonic {
        return Err(Error::Classification(format!(
            "`{seq}` is not purely bosonic"
        )));
    }
    if m == 0 {
        return Err(Error::Precondition("scale factor must be positive".into()));
    }
    Ok(seq
        .ops()
        .iter()
        .map(|op| op.with_twice_index(op.twice_index() * m))
        .collect())
}
