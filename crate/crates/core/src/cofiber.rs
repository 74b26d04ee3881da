//! Homotopy-ring models of E∞-cofibers and checks of the power-operation
//! lemmas they rest on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Generator, Monomial, MonomialIdeal, Polynomial};
use crate::cartan::CartanEngine;
use crate::error::{Error, Result};
use crate::field::{FpScalar, Prime};
use crate::free::{allowable_sequences, Bounds};
use crate::sequences::{
    classify, is_allowable, is_basis_shape, seq_degree, Arity, DlOp, DlSequence, Quark,
};

/// Outcome of a machine check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Refuted,
    InconclusiveTruncated,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::InconclusiveTruncated => "inconclusive-truncated",
        })
    }
}

/// A suspended class `σ(P_I(x))` of degree `|P_I(x)| + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sigma {
    pub source: Generator,
    pub degree: i64,
}

/// The quotient `F_p{x}//x^p` at the level of homotopy rings, for `x` in
/// degree 0: polynomial generators `P_I(x)` modulo the killed p-th powers,
/// tensored with exterior and free E_1 factors on suspended classes.
#[derive(Debug, Clone)]
pub struct CofiberPresentation {
    pub p: Prime,
    pub bounds: Bounds,
    /// Every ∞-allowable `P_I(x)` inside the bounds, `x` included.
    pub generators: Vec<Generator>,
    pub killed_powers: Vec<Monomial>,
    pub exterior_sigmas: Vec<Sigma>,
    pub free_e1_sigmas: Vec<Sigma>,
}

pub fn build_cofiber(p: Prime, bounds: Bounds) -> Result<CofiberPresentation> {
    if p.is_two() {
        return Err(Error::Unsupported(
            "the cofiber presentation is built for odd primes; use the filtration stages at p = 2"
                .into(),
        ));
    }
    let mut pres = CofiberPresentation {
        p,
        bounds,
        generators: Vec::new(),
        killed_powers: Vec::new(),
        exterior_sigmas: Vec::new(),
        free_e1_sigmas: Vec::new(),
    };
    for seq in allowable_sequences(p, Arity::Infinite, 0, bounds)? {
        let g = Generator::new(p, "x", 0, seq.clone())?;
        let sigma = Sigma {
            source: g.clone(),
            degree: g.degree() + 1,
        };
        let kind = if seq.is_empty() {
            Quark::PurelyBosonic
        } else {
            classify(&seq)?
        };
        match kind {
            Quark::PurelyBosonic => pres
                .killed_powers
                .push(Monomial::power(p, g.clone(), p.get()).expect("even generator")),
            Quark::MixedBosonic => pres.exterior_sigmas.push(sigma),
            Quark::Fermionic => pres.free_e1_sigmas.push(sigma),
        }
        pres.generators.push(g);
    }
    Ok(pres)
}

pub fn kill_ideal(pres: &CofiberPresentation) -> MonomialIdeal {
    MonomialIdeal::new(pres.killed_powers.clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Nilpotence {
    Nilpotent,
    NotNilpotent,
    Unknown,
}

impl fmt::Display for Nilpotence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Nilpotence::Nilpotent => "nilpotent",
            Nilpotence::NotNilpotent => "not-nilpotent",
            Nilpotence::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotenceReport {
    pub class: String,
    pub result: Nilpotence,
    /// Smallest `m` with `g^m = 0` in the model, when nilpotent.
    pub exponent: Option<u32>,
    pub status: Status,
    /// Smallest `m ≤ max_power` with `g^m` in the kill ideal, if any.
    pub search: Option<u32>,
    pub max_power: u32,
    /// The conclusion from the shape of the ideal alone.
    pub structural: Option<u32>,
    pub witness: String,
}

/// Decides whether `g` is nilpotent in the cofiber model.
///
/// Two certificates are computed: a search over `g^m` for `m ≤ max_power`,
/// and a structural one. The ideal is generated by monomials, so `g^m` lies in
/// it exactly when some generator is a power `g^e` with `e ≤ m`.
pub fn check_nilpotent_in_cofiber(
    g: &Generator,
    pres: &CofiberPresentation,
    max_power: u32,
) -> Result<NilpotenceReport> {
    let p = pres.p;
    if g.base() != "x" || g.base_degree() != 0 {
        return Err(Error::Precondition(format!(
            "the cofiber model is built on x in degree 0, got {g}"
        )));
    }
    if !is_allowable(p, g.seq(), 0, Arity::Infinite) {
        return Err(Error::Precondition(format!("{g} is not an allowable class")));
    }
    let mut report = NilpotenceReport {
        class: g.to_string(),
        result: Nilpotence::Unknown,
        exponent: None,
        status: Status::InconclusiveTruncated,
        search: None,
        max_power,
        structural: None,
        witness: String::new(),
    };
    if !pres.generators.contains(g) {
        report.witness = "class lies outside the weight or excess bound of the model".into();
        return Ok(report);
    }
    if g.is_exterior(p) {
        report.result = Nilpotence::Nilpotent;
        report.exponent = Some(2);
        report.search = (max_power >= 2).then_some(2);
        report.structural = Some(2);
        report.status = Status::Verified;
        report.witness = format!("({g})^2 = 0 since the class has odd degree");
        return Ok(report);
    }
    let ideal = kill_ideal(pres);
    report.search = (1..=max_power).find(|&m| {
        Monomial::power(p, g.clone(), m).is_some_and(|gm| ideal.contains(&gm))
    });
    report.structural = ideal
        .gens()
        .iter()
        .filter_map(|m| m.as_power().filter(|(h, _)| *h == g).map(|(_, e)| e))
        .min();
    match report.structural {
        Some(e) => {
            report.result = Nilpotence::Nilpotent;
            report.exponent = Some(e);
            report.witness = format!("({g})^{e} generates part of the kill ideal");
            report.status = if e > max_power || report.search == Some(e) {
                Status::Verified
            } else {
                Status::Refuted
            };
        }
        None => {
            report.result = Nilpotence::NotNilpotent;
            report.witness = format!("no generator of the kill ideal is a power of {g}");
            report.status = if report.search.is_none() {
                Status::Verified
            } else {
                Status::Refuted
            };
        }
    }
    Ok(report)
}

/// Classes killed by stage `s` of the filtration on the E_1-cofiber by `v` at
/// `p = 2`: `[v, Q_1 v, …, Q_1^i v]` for the largest `i` with `2^{i+1} − 1 ≤ s`.
pub fn e1_filtration_stage(s: u64, t: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    let mut i = 0u32;
    while (1u64 << (i + 1)) - 1 <= s {
        let seq = DlSequence::new(vec![DlOp::q(1); i as usize]);
        out.push(Generator::new(Prime::TWO, "v", t, seq).expect("Q_1 iterates are valid"));
        i += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

fn identity(lhs: &Polynomial, rhs: &Polynomial) -> IdentityReport {
    IdentityReport {
        status: if lhs == rhs {
            Status::Verified
        } else {
            Status::Refuted
        },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// `Q_I(v^{2^n})` against the rule: zero unless every index is divisible by
/// `2^n`, and `Q_{I/2^n}(v)^{2^n}` when it is.
pub fn check_q_power_rule(seq: &DlSequence, n: u32, t: i64) -> Result<IdentityReport> {
    let p = Prime::TWO;
    seq.ops().iter().try_for_each(|op| op.check_prime(p))?;
    let scale = 1u32 << n;
    let v = Polynomial::from_generator(p, Generator::variable("v", t));
    let mut engine = CartanEngine::new(p, None);
    let lhs = engine.apply_seq(seq, &v.pow(scale))?.value;
    let rhs = if seq.ops().iter().all(|op| (op.twice_index() / 2) % scale == 0) {
        let reduced: DlSequence = seq
            .ops()
            .iter()
            .map(|op| DlOp::q(op.twice_index() / 2 / scale))
            .collect();
        engine.apply_seq(&reduced, &v)?.value.pow(scale)
    } else {
        Polynomial::zero(p)
    };
    Ok(identity(&lhs, &rhs))
}

/// `Q_{2^n a}^{i_a}⋯Q_{2^n b}^{i_b}(v^{2^n}) = (Q_a^{i_a}⋯Q_b^{i_b}(v))^{2^n}`
/// for a basis-shape sequence.
pub fn check_qnilpotent_identity(seq: &DlSequence, n: u32, t: i64) -> Result<IdentityReport> {
    if !is_basis_shape(seq) {
        return Err(Error::Precondition(format!("`{seq}` is not of basis shape")));
    }
    let scaled: DlSequence = seq
        .ops()
        .iter()
        .map(|op| DlOp::q((op.twice_index() / 2) << n))
        .collect();
    check_q_power_rule(&scaled, n, t)
}

/// `β^ε P_i(v^p)` against the rule: zero if `ε = 1` or `p ∤ i`, and
/// `P_{i/p}(v)^p` otherwise. The index is passed doubled.
pub fn check_p_power_rule(p: Prime, twice_index: u32, bockstein: bool) -> Result<IdentityReport> {
    if p.is_two() {
        return Err(Error::Unsupported("the p-th power rule is for odd primes".into()));
    }
    if twice_index == 0 {
        return Err(Error::Precondition("the index must be at least 1/2".into()));
    }
    let op = DlOp::P {
        bockstein,
        twice_index,
    };
    let v = Polynomial::from_generator(p, Generator::variable("v", 0));
    let mut engine = CartanEngine::new(p, None);
    let lhs = engine.apply_op(op, &v.pow(p.get()))?.value;
    let divisible = twice_index.is_multiple_of(2) && (twice_index / 2).is_multiple_of(p.get());
    let rhs = if !bockstein && divisible {
        engine
            .apply_op(DlOp::p(twice_index / p.get()), &v)?
            .value
            .pow(p.get())
    } else {
        Polynomial::zero(p)
    };
    Ok(identity(&lhs, &rhs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetTerm {
    pub monomial: String,
    pub coefficient: FpScalar,
    pub allowable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedTermReport {
    pub sequence: String,
    pub variables: usize,
    /// The target with allowable factors, if the expansion has one.
    pub target: Option<String>,
    pub coefficient: FpScalar,
    pub adem_free: bool,
    pub status: Status,
    /// Every term of the target shape, allowable or not.
    pub candidates: Vec<TargetTerm>,
    pub expansion_terms: usize,
}

fn variables(n: usize) -> Vec<Generator> {
    (1..=n).map(|i| Generator::variable(&format!("x{i}"), 0)).collect()
}

/// Positions (1 = innermost) carrying a Bockstein.
fn bockstein_positions(seq: &DlSequence) -> Vec<usize> {
    seq.innermost_first()
        .enumerate()
        .filter(|(_, op)| op.bockstein())
        .map(|(m, _)| m + 1)
        .collect()
}

fn check_mixed_shape(p: Prime, n: usize, seq: &DlSequence) -> Result<()> {
    if p.is_two() {
        return Err(Error::Unsupported("the mixed-term search is for odd primes".into()));
    }
    if n == 0 || seq.len() != 2 * n || seq.bockstein_count() != 2 * n {
        return Err(Error::Precondition(format!(
            "expected {} operations each carrying a Bockstein, got `{seq}`",
            2 * n
        )));
    }
    if !is_allowable(p, seq, 0, Arity::Infinite) {
        return Err(Error::Precondition(format!("`{seq}` is not allowable on degree 0")));
    }
    Ok(())
}

/// Expands `P_I(x_1⋯x_n)` and reads off the coefficient of the term
/// `P_{J_1}(x_1)⋯P_{J_n}(x_n)` in which `J_k` has Bocksteins exactly in
/// positions `2k−1` and `2k` (counted from the innermost operation).
pub fn mixed_term_coefficient(p: Prime, n: usize, seq: &DlSequence) -> Result<MixedTermReport> {
    check_mixed_shape(p, n, seq)?;
    let vars = variables(n);
    let product = vars
        .iter()
        .map(|x| Polynomial::from_generator(p, x.clone()))
        .fold(Polynomial::one(p), |acc, f| &acc * &f);
    let expansion = CartanEngine::new(p, None).apply_seq(seq, &product)?;
    let mut candidates = Vec::new();
    let mut target: Option<(String, FpScalar)> = None;
    for (m, c) in expansion.value.terms() {
        let factors = m.factors();
        if factors.len() != n || factors.iter().any(|(_, e)| *e != 1) {
            continue;
        }
        let shaped = factors.iter().all(|(g, _)| {
            let Some(k) = vars.iter().position(|x| x.base() == g.base()) else {
                return false;
            };
            g.seq().len() == 2 * n && bockstein_positions(g.seq()) == [2 * k + 1, 2 * k + 2]
        });
        let distinct: std::collections::BTreeSet<&str> =
            factors.iter().map(|(g, _)| g.base()).collect();
        if !shaped || distinct.len() != n {
            continue;
        }
        let allowable = factors
            .iter()
            .all(|(g, _)| is_allowable(p, g.seq(), 0, Arity::Infinite));
        if allowable && target.is_none() {
            target = Some((m.to_string(), c));
        }
        candidates.push(TargetTerm {
            monomial: m.to_string(),
            coefficient: c,
            allowable,
        });
    }
    let coefficient = target.as_ref().map_or(0, |t| t.1);
    let status = match (coefficient != 0, expansion.adem_free) {
        (true, true) => Status::Verified,
        (false, true) => Status::Refuted,
        (_, false) => Status::InconclusiveTruncated,
    };
    Ok(MixedTermReport {
        sequence: seq.to_string(),
        variables: n,
        target: target.map(|t| t.0),
        coefficient,
        adem_free: expansion.adem_free,
        status,
        candidates,
        expansion_terms: expansion.value.len(),
    })
}

/// Whether some split of the indices of `seq` across `n` variables yields
/// allowable target sequences `J_1, …, J_n` of the required Bockstein pattern.
fn admits_target(p: Prime, n: usize, seq: &DlSequence) -> bool {
    let indices: Vec<u32> = seq.innermost_first().map(|op| op.twice_index()).collect();
    let mut parts = vec![vec![0u32; indices.len()]; n];
    fn split(p: Prime, indices: &[u32], m: usize, parts: &mut Vec<Vec<u32>>) -> bool {
        let n = parts.len();
        if m == indices.len() {
            return (0..n).all(|k| {
                let ops: Vec<DlOp> = parts[k]
                    .iter()
                    .enumerate()
                    .map(|(pos, &i2)| DlOp::P {
                        bockstein: pos / 2 == k,
                        twice_index: i2,
                    })
                    .collect();
                is_allowable(p, &DlSequence::from_innermost(ops), 0, Arity::Infinite)
            });
        }
        fill(p, indices, m, 0, indices[m], parts)
    }
    fn fill(p: Prime, indices: &[u32], m: usize, k: usize, left: u32, parts: &mut Vec<Vec<u32>>) -> bool {
        let n = parts.len();
        if k + 1 == n {
            if left == 0 {
                return false;
            }
            parts[k][m] = left;
            return split(p, indices, m + 1, parts);
        }
        for part in 1..left {
            parts[k][m] = part;
            if fill(p, indices, m, k + 1, left - part, parts) {
                return true;
            }
        }
        false
    }
    split(p, &indices, 0, &mut parts)
}

/// The first sequence of the mixed-term shape, ordered by degree and then by
/// indices, whose expansion can contain a target term. The shape alone does
/// not guarantee one: for `n = 2` the lowest-degree candidate has none.
pub fn smallest_mixed_sequence(p: Prime, n: usize) -> Result<DlSequence> {
    if p.is_two() || n == 0 {
        return Err(Error::Precondition("need an odd prime and n ≥ 1".into()));
    }
    let len = 2 * n;
    for cap in (len as u32 + 2..).step_by(2) {
        let mut found: Vec<(i64, DlSequence)> = Vec::new();
        let mut stack: Vec<Vec<u32>> = vec![vec![]];
        while let Some(inner) = stack.pop() {
            if inner.len() == len {
                let seq =
                    DlSequence::from_innermost(inner.iter().map(|&i| DlOp::bp(i)).collect());
                if is_allowable(p, &seq, 0, Arity::Infinite) && admits_target(p, n, &seq) {
                    found.push((seq_degree(p, &seq, 0), seq));
                }
                continue;
            }
            let top = inner.last().copied().unwrap_or(cap);
            for i2 in 1..=top {
                let mut next = inner.clone();
                next.push(i2);
                stack.push(next);
            }
        }
        if let Some(best) = found.into_iter().min() {
            return Ok(best.1);
        }
        if cap > 16 * len as u32 {
            break;
        }
    }
    Err(Error::Precondition(format!("no admissible sequence of length {len} found")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: Prime = Prime::THREE;
    const P5: Prime = Prime::FIVE;

    fn seq(ops: &[DlOp]) -> DlSequence {
        DlSequence::new(ops.to_vec())
    }

    fn gen(p: Prime, ops: &[DlOp]) -> Generator {
        Generator::new(p, "x", 0, seq(ops)).unwrap()
    }

    fn names(v: &[Sigma]) -> Vec<String> {
        v.iter().map(|s| s.source.to_string()).collect()
    }

    #[test]
    fn presentation_at_three() {
        let pres = build_cofiber(P3, Bounds::new(9, Some(10))).unwrap();
        let killed: Vec<String> = pres.killed_powers.iter().map(|m| m.to_string()).collect();
        assert!(killed.contains(&"x^3".to_string()));
        assert!(killed.contains(&"P_1 x^3".to_string()));
        assert!(names(&pres.free_e1_sigmas).contains(&"bP_1 x".to_string()));
        assert!(names(&pres.exterior_sigmas).contains(&"bP_1/2 bP_1 x".to_string()));
        let theta = &pres.exterior_sigmas[0];
        assert_eq!(theta.degree, 11);
    }

    #[test]
    fn trivial_presentation() {
        let pres = build_cofiber(P3, Bounds::new(1, None)).unwrap();
        assert_eq!(pres.killed_powers.len(), 1);
        assert!(pres.exterior_sigmas.is_empty() && pres.free_e1_sigmas.is_empty());
        assert_eq!(kill_ideal(&pres).gens()[0].to_string(), "x^3");
    }

    #[test]
    fn presentation_at_five() {
        let pres = build_cofiber(P5, Bounds::new(5, Some(16))).unwrap();
        let killed: Vec<String> = pres.killed_powers.iter().map(|m| m.to_string()).collect();
        assert_eq!(killed, ["x^5", "P_1 x^5", "P_2 x^5"]);
        assert_eq!(names(&pres.free_e1_sigmas), ["bP_1 x", "bP_2 x"]);
        assert!(pres.exterior_sigmas.is_empty());
    }

    #[test]
    fn ideal_membership_in_the_model() {
        let pres = build_cofiber(P3, Bounds::new(9, Some(10))).unwrap();
        let ideal = kill_ideal(&pres);
        let m = Monomial::from_factors(
            P3,
            [(gen(P3, &[DlOp::p(2)]), 2), (gen(P3, &[]), 1)],
        )
        .unwrap()
        .1;
        assert!(!ideal.contains(&m));
    }

    #[test]
    fn nilpotence() {
        let pres = build_cofiber(P3, Bounds::new(27, Some(40))).unwrap();
        let theta = gen(P3, &[DlOp::bp(1), DlOp::bp(2)]);
        let r = check_nilpotent_in_cofiber(&theta, &pres, 100).unwrap();
        assert_eq!(r.result, Nilpotence::NotNilpotent);
        assert_eq!(r.status, Status::Verified);
        for g in [gen(P3, &[]), gen(P3, &[DlOp::p(2)])] {
            let r = check_nilpotent_in_cofiber(&g, &pres, 100).unwrap();
            assert_eq!((r.result, r.exponent), (Nilpotence::Nilpotent, Some(3)));
        }
        let odd = check_nilpotent_in_cofiber(&gen(P3, &[DlOp::bp(2)]), &pres, 100).unwrap();
        assert_eq!(odd.exponent, Some(2));
    }

    #[test]
    fn nilpotence_outside_the_model() {
        let pres = build_cofiber(P3, Bounds::new(3, Some(10))).unwrap();
        let theta = gen(P3, &[DlOp::bp(1), DlOp::bp(2)]);
        let r = check_nilpotent_in_cofiber(&theta, &pres, 10).unwrap();
        assert_eq!(r.status, Status::InconclusiveTruncated);
        let bad = Generator::new(P3, "x", 0, seq(&[DlOp::p(4), DlOp::p(2)])).unwrap();
        assert!(check_nilpotent_in_cofiber(&bad, &pres, 10).is_err());
    }

    #[test]
    fn filtration_stages() {
        assert!(e1_filtration_stage(0, 1).is_empty());
        assert_eq!(e1_filtration_stage(1, 1).len(), 1);
        let s3: Vec<String> = e1_filtration_stage(3, 1).iter().map(|g| g.to_string()).collect();
        assert_eq!(s3, ["v(1)", "Q_1 v(1)"]);
        assert_eq!(e1_filtration_stage(6, 1).len(), 2);
        assert_eq!(e1_filtration_stage(7, 1).len(), 3);
    }

    #[test]
    fn qnilpotent_examples() {
        let r = check_qnilpotent_identity(&seq(&[DlOp::q(1)]), 1, 1).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.rhs, "Q_1 v(1)^2");
        let r = check_qnilpotent_identity(&seq(&[DlOp::q(2), DlOp::q(3)]), 1, 2).unwrap();
        assert_eq!(r.status, Status::Verified);
        let r = check_q_power_rule(&seq(&[DlOp::q(1)]), 1, 1).unwrap();
        assert_eq!((r.status, r.lhs.as_str()), (Status::Verified, "0"));
        assert!(check_qnilpotent_identity(&seq(&[DlOp::q(3), DlOp::q(2)]), 1, 1).is_err());
    }

    #[test]
    fn p_power_examples() {
        assert_eq!(check_p_power_rule(P3, 4, false).unwrap().status, Status::Verified);
        let r = check_p_power_rule(P3, 6, false).unwrap();
        assert_eq!((r.status, r.rhs.as_str()), (Status::Verified, "P_1 v^3"));
        assert_eq!(check_p_power_rule(P3, 6, true).unwrap().lhs, "0");
    }

    #[test]
    fn mixed_term_for_one_variable() {
        let theta = seq(&[DlOp::bp(1), DlOp::bp(2)]);
        assert_eq!(smallest_mixed_sequence(P3, 1).unwrap(), theta);
        let r = mixed_term_coefficient(P3, 1, &theta).unwrap();
        assert_eq!(r.coefficient, 1);
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.target.as_deref(), Some("bP_1/2 bP_1 x1"));
    }

    #[test]
    fn mixed_term_shape_errors() {
        assert!(mixed_term_coefficient(P3, 2, &seq(&[DlOp::p(2), DlOp::p(2)])).is_err());
        assert!(mixed_term_coefficient(P3, 1, &seq(&[DlOp::p(2), DlOp::p(2)])).is_err());
    }

    #[test]
    fn lowest_degree_shape_has_no_target() {
        let lowest = DlSequence::from_innermost(vec![DlOp::bp(4), DlOp::bp(3), DlOp::bp(2), DlOp::bp(1)]);
        assert!(is_allowable(P3, &lowest, 0, Arity::Infinite));
        assert!(!admits_target(P3, 2, &lowest));
        let smallest = smallest_mixed_sequence(P3, 2).unwrap();
        assert_eq!(smallest.to_string(), "bP_3/2 bP_2 bP_5/2 bP_3");
    }
}
