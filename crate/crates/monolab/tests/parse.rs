use monolab::core::algebra::{MPoly, Rat};
use monolab::parse::{parse_poly, parse_rat, print_poly, ParseError};
use proptest::prelude::*;

fn poly(terms: &[(i64, u32, u32)]) -> MPoly {
    MPoly::from_terms(2, terms.iter().map(|&(c, a, b)| (vec![a, b], Rat::from_integer(c.into()))))
}

#[test]
fn reads_the_example_curves() {
    assert_eq!(parse_poly("y^3 - x^5").unwrap(), poly(&[(1, 0, 3), (-1, 5, 0)]));
    let c = poly(&[(1, 0, 2), (-1, 3, 0)]);
    let want = &(&c * &c) - &poly(&[(1, 6, 1)]);
    assert_eq!(parse_poly("(y^2-x^3)^2 - x^6*y").unwrap(), want);
}

#[test]
fn rationals_signs_and_precedence() {
    assert_eq!(parse_poly("-x+1/2*y^2").unwrap().to_string_with(&["x", "y"]), "1/2*y^2 - x");
    assert_eq!(parse_poly("+3").unwrap(), poly(&[(3, 0, 0)]));
    assert_eq!(parse_poly("2*x^2*3").unwrap(), poly(&[(6, 2, 0)]));
    assert_eq!(parse_poly("(x+y)^2").unwrap(), poly(&[(1, 2, 0), (2, 1, 1), (1, 0, 2)]));
    assert_eq!(parse_poly("x - y - x").unwrap(), poly(&[(-1, 0, 1)]));
    assert_eq!(parse_poly("4/6").unwrap(), MPoly::constant(2, Rat::new(2.into(), 3.into())));
    assert_eq!(parse_rat("-3/4").unwrap(), Rat::new((-3).into(), 4.into()));
}

#[test]
fn printing() {
    assert_eq!(print_poly(&parse_poly("y^3 - x^5").unwrap()), "-x^5 + y^3");
    assert_eq!(print_poly(&parse_poly("x^3*1/7").unwrap()), "1/7*x^3");
    assert!(parse_poly("x^3/7").is_err());
    assert_eq!(print_poly(&parse_poly("0*x").unwrap()), "0");
}

#[test]
fn syntax_errors_carry_positions() {
    let e = parse_poly("x^(2)").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { pos: 2, .. }), "{:?}", e);
    let e = parse_poly("y^2 - 2x").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { pos: 7, .. }), "{:?}", e);
    assert!(e.to_string().contains("'*'"));
    for bad in ["", "x +", "(x", "x)", "x^", "x^-1", "1/0", "x**2", "x ^ 1.5"] {
        assert!(matches!(parse_poly(bad), Err(ParseError::Syntax { .. })), "{}", bad);
    }
}

#[test]
fn unknown_variables() {
    let e = parse_poly("x + z").unwrap_err();
    assert_eq!(e, ParseError::UnknownVariable { pos: 4, name: String::from("z") });
    assert!(e.to_string().starts_with("UnknownVariable"));
    assert!(matches!(parse_poly("sin(x)"), Err(ParseError::UnknownVariable { pos: 0, .. })));
}

#[test]
fn huge_exponents_are_rejected() {
    assert!(parse_poly("x^100000").is_err());
    assert!(parse_poly("x^1000").is_ok());
}

fn small_poly() -> impl Strategy<Value = MPoly> {
    let term = (-20i64..20, 1i64..5, 0u32..5, 0u32..5);
    prop::collection::vec(term, 0..6).prop_map(|ts| {
        MPoly::from_terms(2, ts.into_iter().map(|(n, d, a, b)| (vec![a, b], Rat::new(n.into(), d.into()))))
    })
}

proptest! {
    #[test]
    fn print_parse_is_a_fixed_point(f in small_poly()) {
        let text = print_poly(&f);
        let back = parse_poly(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(print_poly(&back), text);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "[xy0-9+*^()/ -]{0,24}") {
        if let Ok(f) = parse_poly(&s) {
            prop_assert_eq!(parse_poly(&print_poly(&f)).unwrap(), f);
        }
    }
}
