use proptest::prelude::*;

use super::*;
use crate::enumerate::CoefficientRange;
use crate::parse::parse_element;
use crate::ring::Ring;

fn el(ring: &Ring, s: &str) -> RingElement {
    parse_element(s, ring).unwrap()
}

fn q2() -> Ring {
    Ring::quantum_plane(2.into()).unwrap()
}

#[test]
fn cube_minus_one_by_x_minus_one() {
    let z = Ring::int_poly();
    let out = divide_exact(&el(&z, "x^3 - 1"), &el(&z, "x - 1"), Side::Left).unwrap();
    assert_eq!(out.quotient, Some(el(&z, "x^2 + x + 1")));
}

#[test]
fn integrality_matters() {
    let z = Ring::int_poly();
    assert!(!divide_exact(&el(&z, "x"), &el(&z, "2"), Side::Left).unwrap().divides());
    let q = Ring::rat_poly();
    assert_eq!(divide_exact(&el(&q, "x"), &el(&q, "2"), Side::Left).unwrap().quotient, Some(el(&q, "1/2*x")));
    // 2x^2+3x+1 = (2x+2)(x+1/2): divisible in Q[x] only
    assert!(!divide_exact(&el(&z, "2*x^2 + 3*x + 1"), &el(&z, "2*x + 2"), Side::Left).unwrap().divides());
    assert!(divide_exact(&el(&q, "2*x^2 + 3*x + 1"), &el(&q, "2*x + 2"), Side::Left).unwrap().divides());
}

#[test]
fn quantum_round_trip_example() {
    let r = q2();
    let f = el(&r, "x - 1");
    let g = f.mul(&el(&r, "x*y")).unwrap();
    let out = divide_exact(&g, &f, Side::Left).unwrap();
    assert_eq!(out.quotient, Some(el(&r, "x*y")));
    // on the right, (x-1) does not divide (x-1)·xy = x^2y - xy: h·(x-1) has twisted x-terms
    let right = divide_exact(&g, &f, Side::Right).unwrap();
    if let Some(h) = &right.quotient {
        assert_eq!(&h.mul(&f).unwrap(), &g);
    }
}

#[test]
fn sidedness_is_real_in_the_quantum_plane() {
    let r = q2();
    let y = el(&r, "y");
    let x = el(&r, "x");
    // x·y = xy, y·x = 2xy: y divides xy on both sides but with different quotients
    let g = el(&r, "x*y");
    assert_eq!(divide_exact(&g, &y, Side::Right).unwrap().quotient, Some(x.clone()));
    assert_eq!(divide_exact(&g, &y, Side::Left).unwrap().quotient, Some(el(&r, "1/2*x")));
    // y·(1 + x/2) = y + xy
    let g = el(&r, "y + x*y");
    assert_eq!(divide_exact(&g, &y, Side::Left).unwrap().quotient, Some(el(&r, "1 + 1/2*x")));
}

#[test]
fn zero_cases() {
    let z = Ring::int_poly();
    assert_eq!(divide_exact(&el(&z, "x"), &z.zero(), Side::Left), Err(DivisibilityError::DivisionByZeroElement));
    assert_eq!(divide_exact(&z.zero(), &el(&z, "x"), Side::Left).unwrap().quotient, Some(z.zero()));
    assert!(divides(&z.zero(), &z.zero(), Side::Left).unwrap());
    assert!(!divides(&z.zero(), &z.one(), Side::Left).unwrap());
    assert!(matches!(
        divide_exact(&el(&z, "x"), &el(&Ring::rat_poly(), "x"), Side::Left),
        Err(DivisibilityError::Ring(RingError::ContextMismatch))
    ));
}

#[test]
fn units() {
    for r in [Ring::int_poly(), Ring::rat_poly(), Ring::gauss_poly(), q2()] {
        assert!(is_unit(&r.one()));
        assert!(!is_unit(&r.x()));
        assert!(!is_unit(&r.zero()));
    }
    assert!(!is_unit(&Ring::int_poly().embed_integer(2)));
    assert!(is_unit(&Ring::int_poly().embed_integer(-1)));
    assert!(is_unit(&Ring::rat_poly().embed_integer(2)));
    assert!(is_unit(&el(&Ring::gauss_poly(), "1+i")));
    assert!(is_unit(&el(&q2(), "1/2*i")));
}

#[test]
fn power_membership_examples() {
    let z = Ring::int_poly();
    let x = z.x();
    assert_eq!(is_power_of(&el(&z, "x^3"), &x, 16).unwrap(), Some(3));
    assert_eq!(is_power_of(&z.one(), &x, 16).unwrap(), None);
    assert_eq!(is_power_of(&z.zero(), &x, 16).unwrap(), None);
    let q = Ring::rat_poly();
    assert_eq!(is_power_of(&el(&q, "2*x^2"), &q.x(), 16).unwrap(), None);
    assert_eq!(is_power_of(&el(&z, "x^5"), &x, 4).unwrap(), None);
    assert!(matches!(is_power_of(&x, &z.one(), 4), Err(DivisibilityError::InvalidBase(_))));
    assert!(matches!(is_power_of(&x, &z.zero(), 4), Err(DivisibilityError::InvalidBase(_))));
    // powers of a non-monomial base
    let b = el(&z, "x + 1");
    assert_eq!(is_power_of(&b.pow(4), &b, 8).unwrap(), Some(4));
    assert_eq!(is_power_of(&el(&z, "2"), &el(&z, "2"), 8).unwrap(), Some(1));
}

#[test]
fn powers_of_x_recognized_everywhere() {
    for r in [Ring::int_poly(), Ring::rat_poly(), Ring::gauss_poly(), q2(), Ring::quantum_plane((-1).into()).unwrap()] {
        for n in 1..=32 {
            assert_eq!(is_power_of(&r.x().pow(n), &r.x(), 32).unwrap(), Some(n), "{r} n={n}");
        }
    }
}

#[test]
fn zero_divisor_scans() {
    let z = Ring::int_poly();
    let spec = FragmentSpec::degree(&z, 2, 2).unwrap();
    let rep = not_zero_divisor_brute(&el(&z, "x - 1"), &spec).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.checked, 124);
    assert!(not_zero_divisor_brute(&z.one(), &spec).unwrap().holds);

    let r = q2();
    let spec = FragmentSpec::bidegree(&r, 1, 1, 1).unwrap().with_range(CoefficientRange::Integers);
    let rep = not_zero_divisor_brute(&el(&r, "x - 1"), &spec).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.checked, 80);
    assert_eq!(not_zero_divisor_brute(&z.zero(), &FragmentSpec::degree(&z, 1, 1).unwrap()),
        Err(DivisibilityError::DivisionByZeroElement));
}

#[test]
fn annihilation_scans() {
    let z = Ring::int_poly();
    let rep = constant_annihilation_check(&FragmentSpec::degree(&z, 3, 2).unwrap()).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.checked, 625);
    assert!(constant_annihilation_check(&FragmentSpec::degree(&Ring::gauss_poly(), 1, 1).unwrap()).unwrap().holds);
    let spec = FragmentSpec::bidegree(&q2(), 1, 1, 1).unwrap().with_range(CoefficientRange::Integers);
    assert!(constant_annihilation_check(&spec).unwrap().holds);
}

#[test]
fn quotients_are_unique_on_small_fragments() {
    // For every f, h in a small fragment, no other fragment element h' recomposes to f·h.
    for (ring, spec) in [
        (Ring::int_poly(), FragmentSpec::degree(&Ring::int_poly(), 1, 1).unwrap()),
        (q2(), FragmentSpec::bidegree(&q2(), 1, 0, 1).unwrap().with_range(CoefficientRange::Integers)),
    ] {
        let elems: Vec<_> = crate::enumerate::enumerate_fragment(&spec).unwrap().iter().collect();
        for f in elems.iter().filter(|f| !f.is_zero()) {
            for side in [Side::Left, Side::Right] {
                for h in &elems {
                    let g = compose(f, h, side).unwrap();
                    let hits: Vec<_> = elems.iter().filter(|h2| compose(f, h2, side).unwrap() == g).collect();
                    assert_eq!(hits, vec![h], "{ring}: f={f} h={h}");
                    assert_eq!(divide_exact(&g, f, side).unwrap().quotient.as_ref(), Some(h));
                }
            }
        }
    }
}

#[test]
fn commutative_sides_agree() {
    let z = Ring::int_poly();
    let elems: Vec<_> =
        crate::enumerate::enumerate_fragment(&FragmentSpec::degree(&z, 2, 1).unwrap()).unwrap().iter().collect();
    for f in elems.iter().filter(|f| !f.is_zero()) {
        for g in &elems {
            assert_eq!(divide_exact(g, f, Side::Left).unwrap(), divide_exact(g, f, Side::Right).unwrap());
        }
    }
}

fn arb_qplane(ring: Ring, max: u32) -> impl Strategy<Value = RingElement> {
    prop::collection::vec((0..=max, 0..=max, -3i64..=3, -1i64..=1), 0..6).prop_map(move |ts| {
        ring.qplane_from_terms(ts.into_iter().map(|(a, b, re, im)| (a, b, GaussianRational::new(re.into(), im.into()))))
            .unwrap()
    })
}

proptest! {
    #[test]
    fn quantum_division_round_trip(
        qi in 0usize..3,
        f in arb_qplane(q2(), 2),
        h in arb_qplane(q2(), 2),
        left in any::<bool>(),
    ) {
        let ring = [q2(), Ring::quantum_plane(GaussianRational::i()).unwrap(),
            Ring::quantum_plane(crate::numeric::Rational::new(1, 3).unwrap().into()).unwrap()][qi].clone();
        // rebuild operands in the chosen ring
        let f = parse_element(&f.to_string(), &ring).unwrap();
        let h = parse_element(&h.to_string(), &ring).unwrap();
        prop_assume!(!f.is_zero());
        let side = if left { Side::Left } else { Side::Right };
        let g = compose(&f, &h, side).unwrap();
        let out = divide_exact(&g, &f, side).unwrap();
        prop_assert_eq!(out.quotient.as_ref(), Some(&h));
        if let (Some((gx, gy)), Some((fx, fy)), Some(qe)) =
            (g.as_qplane().unwrap().bidegree(), f.as_qplane().unwrap().bidegree(), out.quotient.as_ref().and_then(|q| q.as_qplane().unwrap().bidegree()))
        {
            prop_assert!(qe.0 <= gx - fx && qe.1 <= gy - fy);
        }
        let g1 = g.add(&ring.one()).unwrap();
        if let Some(h1) = divide_exact(&g1, &f, side).unwrap().quotient {
            prop_assert_eq!(compose(&f, &h1, side).unwrap(), g1);
        }
    }
}
