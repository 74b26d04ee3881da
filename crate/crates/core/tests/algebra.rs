use dlcalc::expr::parse_generator;
use dlcalc::{Generator, Monomial, MonomialIdeal, Polynomial, Prime};
use proptest::prelude::*;

fn var(name: &str, d: i64) -> Polynomial {
    Polynomial::from_generator(Prime::THREE, Generator::variable(name, d))
}

#[test]
fn koszul_signs() {
    let (a, b) = (var("a", 1), var("b", 3));
    assert_eq!(&a * &b, -&(&b * &a));
    assert!((&a * &a).is_zero());
    let (u, v) = (var("u", 2), var("v", 1));
    assert_eq!(&u * &v, &v * &u);
}

#[test]
fn frobenius_in_characteristic_p() {
    let (u, w) = (var("u", 0), var("w", 2));
    assert_eq!((&u + &w).pow(3), &u.pow(3) + &w.pow(3));
}

#[test]
fn mixing_primes_is_an_error() {
    let a = Polynomial::one(Prime::THREE);
    let b = Polynomial::one(Prime::FIVE);
    assert!(a.try_add(&b).is_err());
    assert!(a.try_mul(&b).is_err());
}

#[test]
fn composite_generators_carry_degree_and_weight() {
    let p = Prime::THREE;
    let theta = parse_generator("bP_1/2 bP_1 x", p).unwrap();
    assert_eq!(theta.degree(), 10);
    assert_eq!(theta.weight(), 9);
    assert!(!theta.is_exterior(p));
    let b = parse_generator("bP_1 x", p).unwrap();
    assert!(b.is_exterior(p));
    assert!(Monomial::power(p, b, 2).is_none());
}

#[test]
fn ideal_membership_by_divisibility() {
    let p = Prime::THREE;
    let x = Generator::variable("x", 0);
    let y = Generator::variable("y", 2);
    let ideal = MonomialIdeal::new(vec![
        Monomial::power(p, x.clone(), 3).unwrap(),
        Monomial::power(p, y.clone(), 3).unwrap(),
    ]);
    let m = Monomial::from_factors(p, [(x.clone(), 2), (y.clone(), 4)]).unwrap().1;
    assert!(ideal.contains(&m));
    assert_eq!(ideal.witness(&m), Some(&Monomial::power(p, y, 3).unwrap()));
    let n = Monomial::from_factors(p, [(x, 2)]).unwrap().1;
    assert!(!ideal.contains(&n));
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    let names = ["a", "b", "u", "v"];
    let degrees = [1i64, 3, 0, 2];
    prop::collection::vec((0usize..4, 0u32..3, -2i64..3), 0..4).prop_map(move |terms| {
        let p = Prime::FIVE;
        let mut f = Polynomial::zero(p);
        for (i, e, c) in terms {
            let g = Polynomial::from_generator(p, Generator::variable(names[i], degrees[i]));
            f += &g.pow(e).scale(p.reduce(c));
        }
        f
    })
}

proptest! {
    #[test]
    fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn text_form_is_stable(f in small_poly()) {
        let again = dlcalc::expr::parse_expr(&f.to_string(), Prime::FIVE)
            .unwrap()
            .evaluate(Prime::FIVE)
            .unwrap();
        prop_assert_eq!(again, f);
    }
}
