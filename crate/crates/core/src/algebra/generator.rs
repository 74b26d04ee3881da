use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::sequences::{seq_degree, seq_weight, DlOp, DlSequence};

/// A base variable with an operation sequence applied: `I(x)`.
///
/// Identity is `(base, seq, base_degree)`; degree and weight are derived and
/// cached. Cloning is a reference-count bump.
#[derive(Clone)]
pub struct Generator(Arc<Inner>);

struct Inner {
    base: Box<str>,
    base_degree: i64,
    seq: DlSequence,
    degree: i64,
    weight: u64,
}

impl Generator {
    /// A bare variable of the given degree.
    pub fn variable(base: &str, base_degree: i64) -> Self {
        Generator(Arc::new(Inner {
            base: base.into(),
            base_degree,
            seq: DlSequence::empty(),
            degree: base_degree,
            weight: 1,
        }))
    }

    /// `seq(base)`, rejecting operations of the wrong kind, index-zero entries,
    /// and (at odd primes) sequences whose index integrality does not match
    /// the parity of the class acted on; those composites are identically zero.
    pub fn new(p: Prime, base: &str, base_degree: i64, seq: DlSequence) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::InvalidGenerator("empty variable name".into()));
        }
        seq.check_prime(p)?;
        if p.is_odd() {
            let mut d = base_degree;
            for op in seq.innermost_first() {
                if op.is_integral() != (d.rem_euclid(2) == 0) {
                    return Err(Error::InvalidGenerator(format!(
                        "{op} acts by zero on a class of degree {d}"
                    )));
                }
                d = op.apply_degree(p, d);
            }
        }
        let degree = seq_degree(p, &seq, base_degree);
        let weight = seq_weight(p, &seq);
        Ok(Generator(Arc::new(Inner {
            base: base.into(),
            base_degree,
            seq,
            degree,
            weight,
        })))
    }

    /// `op(self)` as a formal composite, or `None` if `op` acts by zero for
    /// parity reasons. `op` must have a positive index.
    pub fn apply(&self, p: Prime, op: DlOp) -> Option<Generator> {
        debug_assert!(op.twice_index() > 0);
        if p.is_odd() && op.is_integral() != self.is_even() {
            return None;
        }
        Some(Generator(Arc::new(Inner {
            base: self.0.base.clone(),
            base_degree: self.0.base_degree,
            seq: self.0.seq.prepend(op),
            degree: op.apply_degree(p, self.0.degree),
            weight: self.0.weight * p.get() as u64,
        })))
    }

    pub fn base(&self) -> &str {
        &self.0.base
    }

    pub fn base_degree(&self) -> i64 {
        self.0.base_degree
    }

    pub fn seq(&self) -> &DlSequence {
        &self.0.seq
    }

    pub fn degree(&self) -> i64 {
        self.0.degree
    }

    pub fn weight(&self) -> u64 {
        self.0.weight
    }

    pub fn is_even(&self) -> bool {
        self.0.degree.rem_euclid(2) == 0
    }

    /// Odd-degree generators square to zero and anticommute, except at `p = 2`.
    pub fn is_exterior(&self, p: Prime) -> bool {
        p.is_odd() && !self.is_even()
    }

    /// Degree minus `weight · base_degree`; non-negative and additive.
    pub fn excess(&self) -> i64 {
        self.0.degree - self.0.weight as i64 * self.0.base_degree
    }

    /// The bare variable this generator is built on.
    pub fn base_variable(&self) -> Generator {
        Generator::variable(&self.0.base, self.0.base_degree)
    }
}

impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.seq == other.0.seq
                && self.0.base_degree == other.0.base_degree)
    }
}

impl Eq for Generator {}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0
            .base
            .cmp(&other.0.base)
            .then_with(|| self.0.seq.cmp(&other.0.seq))
            .then_with(|| self.0.base_degree.cmp(&other.0.base_degree))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Generator {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.base.hash(state);
        self.0.seq.hash(state);
        self.0.base_degree.hash(state);
    }
}

/// Renders as `ops var` or `ops var(t)`, the factor syntax of the parser.
impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.0.seq.is_empty() {
            write!(f, "{} ", self.0.seq)?;
        }
        f.write_str(&self.0.base)?;
        if self.0.base_degree != 0 {
            write!(f, "({})", self.0.base_degree)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
