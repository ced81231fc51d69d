use super::*;

fn q() -> Tower {
    Tower::rational()
}

#[test]
fn rational_add() {
    let t = q();
    assert_eq!(t.frac(1, 2) + t.frac(1, 3), t.frac(5, 6));
}

#[test]
fn sqrt_five_squared() {
    let t = q();
    let s = t.sqrt(&t.int(5));
    assert_eq!(t.depth(), 1);
    assert_eq!(&s * &s, t.int(5));
}

#[test]
fn divide_by_one_plus_sqrt_five() {
    let t = q();
    let s = t.sqrt(&t.int(5));
    let r = t.one() / (t.one() + &s);
    // conjugate over norm: (1 - s)/(1 - 5) = (-1 + s)/4
    let expected = (t.int(-1) + &s) * t.frac(1, 4);
    assert_eq!(r, expected);
    assert_eq!(r * (t.one() + s), t.one());
}

#[test]
fn division_by_zero_is_an_error() {
    let t = q();
    assert_eq!(t.one().try_div(&t.zero()), Err(Error::DivisionByZero));
}

#[test]
fn mixed_towers_are_an_error() {
    let (a, b) = (q(), q());
    assert_eq!(a.one().try_add(&b.one()), Err(Error::MixedContext));
}

#[test]
fn quadratic_examples() {
    let t = q();
    let (r1, r2) = t.solve_quadratic(&t.int(-4), &t.int(4));
    assert_eq!((r1, r2), (t.int(2), t.int(2)));
    assert_eq!(t.depth(), 0);

    let (r1, r2) = t.solve_quadratic(&t.int(-1), &t.int(-1));
    assert_eq!(t.depth(), 1);
    assert_eq!(&r1 + &r2, t.one());
    assert_eq!(&r1 * &r2, t.int(-1));
    assert_eq!(r1.to_string(), "1/2 + 1/2*s1");

    let (r1, r2) = t.solve_quadratic(&t.int(-3), &t.int(1));
    assert_eq!(&r1 + &r2, t.int(3));
    assert_eq!(&r1 * &r2, t.one());
}

#[test]
fn existing_square_roots_are_found() {
    let t = q();
    let s2 = t.sqrt(&t.int(2));
    let s3 = t.sqrt(&t.int(3));
    assert_eq!(t.depth(), 2);
    // sqrt(6), sqrt(3/2), sqrt(5 + 2 sqrt 6) = sqrt2 + sqrt3 are all in Q(sqrt2, sqrt3)
    for v in [t.int(6), t.frac(3, 2), t.int(5) + t.int(2) * &s2 * &s3, t.int(12)] {
        let r = t.sqrt(&v);
        assert_eq!(t.depth(), 2, "sqrt of {v} should exist");
        assert_eq!(&r * &r, v);
    }
    let r = t.sqrt(&(s2.clone() + t.one()));
    assert_eq!(t.depth(), 3);
    assert_eq!(&r * &r, s2 + t.one());
}

#[test]
fn characteristic_is_reported() {
    assert_eq!(Tower::rational().characteristic(), 0);
    assert_eq!(Tower::prime(3).characteristic(), 3);
    assert_eq!(Tower::prime(2).characteristic(), 2);
}

#[test]
fn prime_field_extension() {
    let t = Tower::prime(5);
    // 2 is a non-square mod 5
    let s = t.sqrt(&t.int(2));
    assert_eq!(t.depth(), 1);
    assert_eq!(&s * &s, t.int(2));
    // 3 = 2 * 4 is also a non-square, and sqrt 3 = 2 sqrt 2 is now present
    let r = t.sqrt(&t.int(3));
    assert_eq!(t.depth(), 1);
    assert_eq!(&r * &r, t.int(3));
}

#[test]
fn characteristic_two_quadratics() {
    let t = Tower::prime(2);
    // x^2 + x + 1 has no root in F2
    let (r1, r2) = t.solve_quadratic(&t.one(), &t.one());
    assert_eq!(t.depth(), 1);
    assert_eq!(&r1 + &r2, t.one());
    assert_eq!(&r1 * &r2, t.one());
    // x^2 + x + s1 needs one more level over F4
    let s1 = t.generator(1);
    let (r1, r2) = t.solve_quadratic(&t.one(), &s1);
    assert_eq!(t.depth(), 2);
    assert_eq!(&r1 * &r1 + &r1 + &s1, t.zero());
    assert_eq!(&r1 + &r2, t.one());
    // squares always have square roots
    let x = t.generator(2) + t.generator(1);
    let r = t.sqrt(&x);
    assert_eq!(&r * &r, x);
    let (a, b) = t.solve_quadratic(&t.zero(), &x);
    assert_eq!(a, b);
    assert_eq!(t.depth(), 2);
}

#[test]
fn inverses_in_char_two() {
    let t = Tower::prime(2);
    t.solve_quadratic(&t.one(), &t.one());
    t.solve_quadratic(&t.one(), &t.generator(1));
    let x = t.generator(1) * t.generator(2) + t.one();
    assert_eq!(x.try_inv().unwrap() * &x, t.one());
}

#[test]
fn parse_and_display_round_trip() {
    let t = q();
    t.sqrt(&t.int(2));
    t.sqrt(&t.int(3));
    let x = t.parse_elem("1/2 - 3*s1*s2 + s2 - 7/5*s1").unwrap();
    assert_eq!(t.parse_elem(&x.to_string()).unwrap(), x);
    assert_eq!(x.to_string(), "1/2 - 7/5*s1 + s2 - 3*s1*s2");
    assert!(t.parse_elem("s3").is_err());
    assert!(t.parse_elem("1/0").is_err());
    assert_eq!(t.parse_elem("-s1").unwrap(), -t.generator(1));
}

#[test]
fn json_round_trip_rebuilds_tower() {
    let t = q();
    t.sqrt(&t.int(5));
    let x = t.sqrt(&(t.generator(1) + t.int(7)));
    let y = x.clone() * t.frac(2, 3) + t.frac(-1, 9);
    let v = y.to_json();
    let fresh = Tower::rational();
    let back = Elem::from_json(&v, &fresh).unwrap();
    assert_eq!(back.to_json(), v);
    assert_eq!(fresh.levels_json(), t.levels_json());
    // same element read against the original tower is equal to it
    assert_eq!(Elem::from_json(&v, &t).unwrap(), y);
}

#[test]
fn json_rejects_fake_extension() {
    let v = serde_json::json!({"field": "q", "tower": [{"d": ["4"]}], "coords": ["1"]});
    assert!(Elem::from_json(&v, &Tower::rational()).is_err());
}

#[test]
fn lifting_keeps_value() {
    let t = q();
    let a = t.frac(3, 7);
    t.sqrt(&t.int(2));
    let lifted = t.from_coords(a.lifted(1)).unwrap();
    assert_eq!(lifted, a);
    assert_eq!(lifted.level(), 0);
}
