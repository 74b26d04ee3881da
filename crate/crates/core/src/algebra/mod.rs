//! Free graded-commutative algebras over F_p on homogeneous generators.

mod generator;
mod monomial;
mod polynomial;

pub use generator::Generator;
pub use monomial::Monomial;
pub use polynomial::{Polynomial, PolynomialJson, TermJson};

/// An ideal generated by finitely many monomials. Membership of a monomial is
/// divisibility by one of the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: Vec<Monomial>) -> Self {
        MonomialIdeal { gens }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The first generator dividing `m`, if any.
    pub fn witness(&self, m: &Monomial) -> Option<&Monomial> {
        self.gens.iter().find(|g| g.divides(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;
    use crate::sequences::{DlOp, DlSequence};
    use proptest::prelude::*;

    const P3: Prime = Prime::THREE;

    fn var(name: &str, t: i64) -> Generator {
        Generator::variable(name, t)
    }

    fn poly(p: Prime, g: &Generator) -> Polynomial {
        Polynomial::from_generator(p, g.clone())
    }

    #[test]
    fn odd_square_vanishes() {
        let z = poly(P3, &var("z", 1));
        assert!((&z * &z).is_zero());
    }

    #[test]
    fn odd_classes_anticommute() {
        let z = poly(P3, &var("z", 1));
        let w = poly(P3, &var("w", 3));
        assert!((&(&z * &w) + &(&w * &z)).is_zero());
        assert!(!(&z * &w).is_zero());
    }

    #[test]
    fn even_classes_commute() {
        let v = poly(P3, &var("v", 2));
        let w = poly(P3, &var("w", 0));
        assert!((&(&v * &w) - &(&w * &v)).is_zero());
    }

    #[test]
    fn frobenius_is_additive() {
        let v = poly(P3, &var("v", 0));
        let w = poly(P3, &var("w", 2));
        let lhs = (&v + &w).pow(3);
        assert_eq!(lhs, &v.pow(3) + &w.pow(3));
        assert_eq!(lhs.to_string(), "v^3 + w(2)^3");
    }

    #[test]
    fn exterior_power_and_unit() {
        let p5 = Prime::FIVE;
        let z = poly(p5, &var("z", 1));
        assert!(z.pow(2).is_zero());
        assert_eq!(z.pow(0), Polynomial::one(p5));
        assert_eq!(Polynomial::zero(p5).to_string(), "0");
    }

    #[test]
    fn prime_mismatch_is_an_error() {
        let a = Polynomial::one(P3);
        let b = Polynomial::one(Prime::FIVE);
        assert!(a.try_mul(&b).is_err());
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn rendering() {
        let x = var("x", 0);
        let p1x = x.apply(P3, DlOp::p(2)).unwrap();
        let f = &Polynomial::from_monomial(
            P3,
            Monomial::from_factors(P3, [(x.clone(), 2), (p1x.clone(), 1)]).unwrap().1,
            1,
        ) + &Polynomial::constant(P3, 5);
        assert_eq!(f.to_string(), "2 + x^2 * P_1 x");
        let json = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"coeff":2,"factors":[]},{"coeff":1,"factors":[["x",2],["P_1 x",1]]}]}"#
        );
    }

    fn kill_example() -> (Generator, Generator, Generator, MonomialIdeal) {
        let x = var("x", 0);
        let p1x = x.apply(P3, DlOp::p(2)).unwrap();
        let theta = Generator::new(
            P3,
            "x",
            0,
            DlSequence::new(vec![DlOp::bp(1), DlOp::bp(2)]),
        )
        .unwrap();
        let ideal = MonomialIdeal::new(vec![
            Monomial::power(P3, x.clone(), 3).unwrap(),
            Monomial::power(P3, p1x.clone(), 3).unwrap(),
        ]);
        (x, p1x, theta, ideal)
    }

    #[test]
    fn ideal_membership() {
        let (x, p1x, theta, ideal) = kill_example();
        let m = Monomial::from_factors(P3, [(x.clone(), 3), (p1x.clone(), 1)]).unwrap().1;
        assert!(ideal.contains(&m));
        assert!(!ideal.contains(&Monomial::power(P3, theta, 7).unwrap()));
        assert!(!ideal.contains(&Monomial::one()));
        let m = Monomial::from_factors(P3, [(p1x, 2), (x, 1)]).unwrap().1;
        assert!(!ideal.contains(&m));
    }

    /// A small universe of generators of mixed parity.
    fn universe() -> Vec<Generator> {
        vec![
            var("a", 0),
            var("b", 2),
            var("c", 1),
            var("d", 3),
            var("e", 4),
            var("a", 0).apply(P3, DlOp::bp(2)).unwrap(),
        ]
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let gens = universe();
        proptest::collection::vec(
            (0u32..3, proptest::collection::vec((0usize..6, 0u32..3), 0..4)),
            0..4,
        )
        .prop_map(move |terms| {
            let mut f = Polynomial::zero(P3);
            for (c, factors) in terms {
                if let Some((neg, m)) =
                    Monomial::from_factors(P3, factors.iter().map(|&(i, e)| (gens[i].clone(), e)))
                {
                    f.add_term(m, if neg { P3.neg(c) } else { c });
                }
            }
            f
        })
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        let gens = universe();
        proptest::collection::vec((0usize..6, 1u32..3), 1..4).prop_filter_map(
            "vanishing monomial",
            move |factors| {
                Monomial::from_factors(P3, factors.iter().map(|&(i, e)| (gens[i].clone(), e)))
                    .map(|(_, m)| m)
            },
        )
    }

    fn exponent_vector(m: &Monomial) -> Vec<u32> {
        universe().iter().map(|g| m.exponent_of(g)).collect()
    }

    proptest! {
        #[test]
        fn degree_and_weight_additive(a in arb_monomial(), b in arb_monomial()) {
            if let Some((_, ab)) = a.mul(&b, P3) {
                prop_assert_eq!(ab.degree(), a.degree() + b.degree());
                prop_assert_eq!(ab.weight(), a.weight() + b.weight());
            }
        }

        #[test]
        fn associative_and_unital(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &Polynomial::one(P3), a.clone());
        }

        #[test]
        fn graded_commutative(a in arb_monomial(), b in arb_monomial()) {
            let fa = Polynomial::from_monomial(P3, a.clone(), 1);
            let fb = Polynomial::from_monomial(P3, b.clone(), 1);
            let sign = if a.degree() * b.degree() % 2 != 0 { -1 } else { 1 };
            prop_assert_eq!(&fa * &fb, (&fb * &fa).scale(P3.reduce(sign)));
        }

        #[test]
        fn canonical_form_is_stable(a in arb_poly()) {
            let mut again = Polynomial::zero(P3);
            for (m, c) in a.terms() {
                again.add_term(m.clone(), c);
            }
            prop_assert_eq!(again, a);
        }

        #[test]
        fn membership_matches_exponent_vectors(
            gens in proptest::collection::vec(arb_monomial(), 0..4),
            m in arb_monomial(),
        ) {
            let ideal = MonomialIdeal::new(gens.clone());
            let target = exponent_vector(&m);
            let oracle = gens.iter().any(|g| {
                exponent_vector(g).iter().zip(&target).all(|(a, b)| a <= b)
            });
            prop_assert_eq!(ideal.contains(&m), oracle);
        }
    }
}
