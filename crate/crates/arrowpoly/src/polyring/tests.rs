use super::*;
use proptest::prelude::*;

fn p(s: &str) -> LaurentPoly {
    parse(s).unwrap()
}

#[test]
fn mul_identity() {
    let q = p("3*a^2*c - b[e1] + K[1/2]");
    assert_eq!(&LaurentPoly::one() * &q, q);
}

#[test]
fn mul_difference_of_squares() {
    let lhs = &p("A + B") * &p("A - B");
    assert_eq!(lhs, p("A^2 - B^2"));
}

#[test]
fn mul_exponent_addition() {
    let lhs = &p("a*c") * &p("a*c*K[1/2]");
    assert_eq!(lhs, p("a^2*c^2*K[1/2]"));
}

#[test]
fn substitute_inverse_cancels() {
    let mut sigma = BTreeMap::new();
    sigma.insert(Var::CapB, LaurentPoly::var_pow(Var::CapA, -4));
    let r = p("A*B").substitute(&sigma).unwrap();
    assert!(r.is_one());
}

#[test]
fn substitute_bracket_loop_value() {
    let mut sigma = BTreeMap::new();
    sigma.insert(Var::SmallD, p("-A^2 - A^-2"));
    let r = p("d").substitute(&sigma).unwrap();
    assert_eq!(r, p("-A^2 - A^-2"));
}

#[test]
fn substitute_negative_power_needs_unit() {
    let mut sigma = BTreeMap::new();
    sigma.insert(Var::CapA, p("A + 1"));
    let err = p("A^-1").substitute(&sigma).unwrap_err();
    assert!(matches!(err, PolyError::NonInvertibleSubstitution { .. }));
}

#[test]
fn substitute_fractional_power_of_monomial() {
    // X^(1/2) with X -> A*d*B^-1 lands on the half grid.
    let mut sigma = BTreeMap::new();
    sigma.insert(Var::CapX, p("A*d*B^-1"));
    let r = p("X^1/2").substitute(&sigma).unwrap();
    assert_eq!(r, p("A^1/2*B^-1/2*d^1/2"));
}

#[test]
fn format_zero() {
    assert_eq!(LaurentPoly::zero().to_string(), "0");
    assert_eq!(p("0"), LaurentPoly::zero());
    assert_eq!(p("a - a"), LaurentPoly::zero());
}

#[test]
fn parse_monomial_example() {
    let q = p("a*c*K[1/2]");
    let m = Monomial::var(Var::SmallA)
        .mul(&Monomial::var(Var::SmallC))
        .mul(&Monomial::var(Var::K(1)));
    assert_eq!(q, LaurentPoly::from_monomial(m, 1));
}

#[test]
fn parse_k_zero_is_one() {
    assert!(p("K[0]").is_one());
    assert_eq!(p("K[2/2]"), p("K[1]"));
}

#[test]
fn display_order_is_ascending_graded_lex() {
    assert_eq!(p("t^4 - t^3 - t + 1").to_string(), "1 - t - t^3 + t^4");
    assert_eq!(p("x^2 + x + y").to_string(), "y + x + x^2");
}

#[test]
fn parse_error_has_position() {
    match parse("a + ") {
        Err(PolyError::Parse { pos, .. }) => assert!(pos >= 3),
        other => panic!("expected parse error, got {other:?}"),
    }
    assert!(parse("a ^^ 2").is_err());
    assert!(parse("").is_err());
}

fn arb_var() -> impl Strategy<Value = Var> {
    prop_oneof![
        Just(Var::SmallA),
        Just(Var::SmallC),
        Just(Var::CapA),
        Just(Var::CapB),
        Just(Var::SmallD),
        Just(Var::SmallT),
        Just(Var::SmallQ),
        Just(Var::CapX),
        Just(Var::CapY),
        Just(Var::CapZ),
        "[a-z][a-z0-9_]{0,3}".prop_map(Var::BEdge),
        "[a-z][a-z0-9_]{0,3}".prop_map(Var::XEdge),
        "[a-z][a-z0-9_]{0,3}".prop_map(Var::YEdge),
        "[a-z][a-z0-9_]{0,3}".prop_map(Var::AlphaEdge),
        (1u64..8).prop_map(Var::K),
        "[e-h][a-z0-9_]{0,3}".prop_map(Var::Named),
    ]
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((arb_var(), -9i64..10), 0..4).prop_map(|factors| {
        let mut m = Monomial::one();
        for (v, q) in factors {
            m = m.mul(&Monomial::var_pow(v, q));
        }
        m
    })
}

pub(crate) fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((arb_monomial(), -50i64..50), 0..6).prop_map(|terms| {
        let mut out = LaurentPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn roundtrip(a in arb_poly()) {
        let s = a.to_string();
        prop_assert_eq!(parse(&s).unwrap(), a);
    }

    #[test]
    fn substitution_is_homomorphic(a in arb_poly(), b in arb_poly()) {
        // Unit-monomial images with integer exponents stay on the quarter
        // grid whatever fractional powers the inputs carry.
        let mut sigma = BTreeMap::new();
        sigma.insert(Var::CapA, LaurentPoly::var_pow(Var::SmallT, -4));
        sigma.insert(Var::CapB, LaurentPoly::var_pow(Var::SmallT, 4));
        sigma.insert(Var::SmallA, LaurentPoly::var_pow(Var::SmallQ, 8));
        let lhs = (&a * &b).substitute(&sigma).unwrap();
        let rhs = &a.substitute(&sigma).unwrap() * &b.substitute(&sigma).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
