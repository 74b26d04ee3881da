mod common;

use dlcalc::free::{
    allowable_sequences, enumerate_generators, poincare_series, verify_decomposition, Bounds,
    IndexConvention,
};
use dlcalc::{Arity, Error, Prime};

#[test]
fn basis_at_two() {
    let gens = enumerate_generators(Prime::TWO, Arity::Finite(2), 1, Bounds::new(8, None)).unwrap();
    let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    assert_eq!(shown, ["x(1)", "Q_1 x(1)", "Q_1 Q_1 x(1)", "Q_1 Q_1 Q_1 x(1)"]);
}

#[test]
fn basis_at_three() {
    let gens = enumerate_generators(Prime::THREE, Arity::Infinite, 0, Bounds::new(3, Some(4))).unwrap();
    let shown: Vec<(String, i64)> = gens.iter().map(|g| (g.to_string(), g.degree())).collect();
    assert_eq!(
        shown,
        [("x".to_string(), 0), ("bP_1 x".to_string(), 3), ("P_1 x".to_string(), 4)]
    );
}

#[test]
fn infinite_arity_needs_an_excess_bound() {
    let err = enumerate_generators(Prime::THREE, Arity::Infinite, 0, Bounds::new(9, None));
    assert!(matches!(err, Err(Error::Unbounded(_))));
}

#[test]
fn parity_precondition_at_odd_primes() {
    let err = enumerate_generators(Prime::THREE, Arity::Finite(2), 0, Bounds::new(9, Some(10)));
    assert!(matches!(err, Err(Error::Precondition(_))));
}

#[test]
fn brute_force_agrees_at_p_squared() {
    for p in [Prime::THREE, Prime::FIVE] {
        let w = (p.get() as u64).pow(2);
        for t in [0, 1] {
            for k in [Some(1), Some(2), Some(4), None] {
                let arity = k.map_or(Arity::Infinite, Arity::Finite);
                let mut fast = allowable_sequences(p, arity, t, Bounds::new(w, Some(50))).unwrap();
                let mut slow = common::brute_force_allowable(p.get(), k, t, w, 50);
                fast.sort();
                slow.sort();
                assert_eq!(fast, slow, "p={p} t={t} k={arity}");
            }
        }
    }
}

#[test]
fn series_counts_monomials() {
    // free E_2 on x(1) at p = 2: polynomial on x, Q_1 x, Q_1 Q_1 x, ...
    let s = poincare_series(Prime::TWO, Arity::Finite(2), 1, Bounds::new(4, None)).unwrap();
    assert_eq!(s.coeff(1, 1), 1);
    assert_eq!(s.coeff(2, 2), 1);
    assert_eq!(s.coeff(2, 3), 1);
    assert_eq!(s.coeff(4, 4), 1);
    assert_eq!(s.coeff(4, 5), 1);
    assert_eq!(s.coeff(4, 6), 1);
    assert_eq!(s.coeff(4, 7), 1);
}

#[test]
fn series_json_lists_nonzero_coefficients() {
    let s = poincare_series(Prime::TWO, Arity::Finite(1), 1, Bounds::new(3, None)).unwrap();
    let json = serde_json::to_value(s.to_json()).unwrap();
    assert_eq!(json["W"], 3);
    assert_eq!(json["coeffs"], serde_json::json!([[0, 0, 1], [1, 1, 1], [2, 2, 1], [3, 3, 1]]));
}

#[test]
fn decomposition_windows() {
    for (k, n) in [(1, 1), (1, 2), (2, 3), (0, 2)] {
        let r = verify_decomposition(
            Prime::TWO,
            k,
            Arity::Finite(n),
            1,
            Bounds::new(32, None),
            IndexConvention::Corrected,
        )
        .unwrap();
        assert!(r.matched, "k={k} n={n}: {:?}", r.first_mismatch);
    }
    for (k, t) in [(0, 1), (1, 0), (2, 1), (3, 0)] {
        let r = verify_decomposition(
            Prime::THREE,
            k,
            Arity::Infinite,
            t,
            Bounds::new(27, Some(80)),
            IndexConvention::Corrected,
        )
        .unwrap();
        assert!(r.matched, "k={k} t={t}: {:?}", r.first_mismatch);
    }
}

#[test]
fn literal_ranges_mismatch() {
    let two = verify_decomposition(
        Prime::TWO,
        1,
        Arity::Finite(2),
        1,
        Bounds::new(16, None),
        IndexConvention::Literal,
    )
    .unwrap();
    assert_eq!(two.first_mismatch, Some((2, 3)));
    let three = verify_decomposition(
        Prime::THREE,
        1,
        Arity::Infinite,
        0,
        Bounds::new(27, Some(40)),
        IndexConvention::Literal,
    )
    .unwrap();
    assert!(!three.matched);
}

#[test]
fn decomposition_rejects_bad_arities() {
    let b = Bounds::new(9, Some(10));
    assert!(verify_decomposition(Prime::TWO, 3, Arity::Finite(2), 1, b, IndexConvention::Corrected).is_err());
    assert!(verify_decomposition(Prime::THREE, 1, Arity::Finite(3), 0, b, IndexConvention::Corrected).is_err());
}
