use super::*;
use crate::ring::RingError;

fn gi(n: i64) -> GaussianRational {
    GaussianRational::from_integer(n)
}

fn rat(n: i64, d: i64) -> GaussianRational {
    Rational::new(n, d).unwrap().into()
}

#[test]
fn rational_polynomial() {
    let r = Ring::rat_poly();
    let e = parse_element("x^2 - 1/2*x + 1", &r).unwrap();
    assert_eq!(e.as_uni().unwrap().coeffs(), &[gi(1), rat(-1, 2), gi(1)]);
}

#[test]
fn quantum_plane_normalizes_order() {
    let r = Ring::quantum_plane(gi(2)).unwrap();
    assert_eq!(parse_element("y*x", &r).unwrap().to_string(), "2*x*y");
    assert_eq!(parse_element("x*y", &r).unwrap().to_string(), "x*y");
}

#[test]
fn unknown_symbols() {
    let z = Ring::int_poly();
    assert_eq!(
        parse_element("y+1", &z),
        Err(ParseError::UnknownSymbol { symbol: "y".into(), position: 0 })
    );
    assert!(matches!(parse_element("x + i", &Ring::rat_poly()), Err(ParseError::UnknownSymbol { position: 4, .. })));
    assert!(matches!(parse_element("z", &z), Err(ParseError::UnknownSymbol { .. })));
    assert!(parse_element("x + i", &Ring::gauss_poly()).is_ok());
}

#[test]
fn domain_violations_carry_position() {
    assert!(matches!(
        parse_element("x + 1/2", &Ring::int_poly()),
        Err(ParseError::Ring { position: 4, source: RingError::OutsideDomain { .. } })
    ));
    // 4/2 is the integer 2
    assert_eq!(parse_element("4/2", &Ring::int_poly()).unwrap(), Ring::int_poly().embed_integer(2));
}

#[test]
fn exponent_errors() {
    let r = Ring::int_poly();
    assert_eq!(parse_element("x^-1", &r), Err(ParseError::NegativeExponent { position: 2 }));
    assert!(matches!(parse_element("x^99999999999", &r), Err(ParseError::ExponentTooLarge { .. })));
    assert!(matches!(parse_element("x^y", &r), Err(ParseError::Syntax { position: 2, .. })));
    assert!(matches!(parse_element("x^2^3", &r), Err(ParseError::Syntax { position: 3, .. })));
}

#[test]
fn juxtaposition_rejected() {
    let r = Ring::int_poly();
    assert!(matches!(parse_element("2x", &r), Err(ParseError::Syntax { position: 1, .. })));
    assert!(matches!(parse_element("2 x", &r), Err(ParseError::Syntax { position: 2, .. })));
}

#[test]
fn malformed_inputs() {
    let r = Ring::int_poly();
    for (text, pos) in [("", 0), ("(x + 1", 6), ("x +", 3), ("--x", 1), ("1/0", 2), ("1/x", 2), ("x \u{2212} 1", 2)] {
        let err = parse_element(text, &r).unwrap_err();
        assert_eq!(err.position(), pos, "{text:?}: {err}");
    }
}

#[test]
fn precedence() {
    let r = Ring::rat_poly();
    let p = |s: &str| parse_element(s, &r).unwrap();
    assert_eq!(p("2*x^3"), p("2*(x^3)"));
    assert_ne!(p("2*x^3"), p("(2*x)^3"));
    assert_eq!(p("-x^2"), p("-(x^2)"));
    assert_ne!(p("-x^2"), p("(-x)^2"));
    assert_eq!(p("1 - x - x"), p("(1 - x) - x"));
    assert_eq!(p("1 + 2*x*x"), p("1 + (2*(x*x))"));
    assert_eq!(p("x*-1"), p("-x"));
    assert_eq!(p("  x^2\t+1 "), p("x^2+1"));
}

#[test]
fn scalars() {
    assert_eq!(parse_scalar("-1/3").unwrap(), rat(-1, 3));
    assert_eq!(parse_scalar("i").unwrap(), GaussianRational::i());
    assert_eq!(parse_scalar("1+2*i").unwrap(), GaussianRational::new(1.into(), 2.into()));
    assert!(parse_scalar("x").is_err());
}

#[test]
fn display_round_trip_samples() {
    let g = Ring::gauss_poly();
    for text in ["-x^3 + (2+3*i)*x^2 - i*x + 1-i", "(-1/2-i)*x - 1/2+i", "1/3*i*x^2 - 2*i"] {
        let e = parse_element(text, &g).unwrap();
        assert_eq!(parse_element(&e.to_string(), &g).unwrap(), e, "{text}");
    }
    let q = Ring::quantum_plane(rat(1, 3)).unwrap();
    let e = parse_element("(y + x)^3 - i*y*x", &q).unwrap();
    assert_eq!(parse_element(&e.to_string(), &q).unwrap(), e);
}
