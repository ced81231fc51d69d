use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::realize::traces_of;
use super::*;
use crate::qfield::{Elem, Tower};
use crate::random::{random_sl2, random_upper};

fn m(t: &Tower, e: [i64; 4]) -> Mat2<Elem> {
    Mat2::from_ints(&t.zero(), e).unwrap()
}

#[test]
fn constructor_checks_determinant() {
    let t = Tower::rational();
    assert!(Mat2::from_ints(&t.zero(), [1, 1, 1, 1]).is_err());
}

#[test]
fn matrix_examples() {
    let t = Tower::rational();
    let u = m(&t, [1, 1, 0, 1]);
    let l = m(&t, [1, 0, 1, 1]);
    assert_eq!(u.inverse(), m(&t, [1, -1, 0, 1]));
    assert_eq!(u.mul(&l).trace(), t.int(3));
    let a = Mat2::diag(t.int(3)).unwrap();
    let b = Mat2::diag(t.frac(2, 5)).unwrap();
    assert_eq!(a.commutator(&b).trace(), t.int(2));
}

#[test]
fn delta_examples() {
    let t = Tower::rational();
    let id = Mat2::identity(&t.zero());
    let b = m(&t, [2, 3, 1, 2]);
    assert!(delta(&id, &b).is_zero());
    let u = m(&t, [1, 1, 0, 1]);
    let l = m(&t, [1, 0, 1, 1]);
    assert_eq!(delta(&u, &l), t.one());
    assert_eq!(delta(&u, &l), u.commutator(&l).trace() - t.int(2));
}

#[test]
fn pair_reducibility_examples() {
    let t = Tower::rational();
    let a = Mat2::new(t.int(2), t.int(5), t.zero(), t.frac(1, 2)).unwrap();
    let b = m(&t, [1, 7, 0, 1]);
    assert_eq!(is_reducible_pair(&a, &b), PairVerdict::Reducible(Line::horizontal(&t.zero())));
    assert_eq!(is_reducible_pair(&m(&t, [1, 1, 0, 1]), &m(&t, [1, 0, 1, 1])), PairVerdict::Irreducible);
    let id = Mat2::identity(&t.zero());
    let any = m(&t, [2, 1, 1, 1]);
    match is_reducible_pair(&id, &any) {
        PairVerdict::Reducible(l) => assert!(any.fixes(&l)),
        v => panic!("{v:?}"),
    }
}

#[test]
fn family_examples() {
    let t = Tower::rational();
    let fam = vec![Mat2::diag(t.int(2)).unwrap(), Mat2::diag(t.int(3)).unwrap(), Mat2::diag(t.int(-1)).unwrap()];
    assert_eq!(is_reducible_family(&fam), FamilyVerdict::Reducible(Line::horizontal(&t.zero())));
    let fam = vec![m(&t, [1, 1, 0, 1]), m(&t, [1, 0, 1, 1]), Mat2::identity(&t.zero())];
    assert_eq!(is_reducible_family(&fam), FamilyVerdict::Irreducible(vec![0, 1]));
    let a = m(&t, [2, 3, 1, 2]);
    let fam = vec![a.clone(), a.pow(2), a.pow(3)];
    assert!(matches!(is_reducible_family(&fam), FamilyVerdict::Reducible(_)));
}

#[test]
fn family_with_triple_certificate() {
    // lines (1:0), (0:1), (1:1); each matrix fixes two of them
    let t = Tower::rational();
    let d = Mat2::diag(t.int(2)).unwrap();
    let b = d.conj_by(&m(&t, [1, 1, 0, 1]).inverse());
    let c = d.conj_by(&m(&t, [1, 0, 1, 1]).inverse());
    let fam = vec![d, b, c];
    assert_eq!(is_reducible_family(&fam), FamilyVerdict::Irreducible(vec![0, 1, 2]));
}

#[test]
fn eigenlines_of_parabolic() {
    let t = Tower::rational();
    let u = m(&t, [1, 1, 0, 1]);
    assert_eq!(u.eigenlines(), vec![Line::horizontal(&t.zero())]);
    let l = m(&t, [1, 0, 3, 1]);
    assert_eq!(l.eigenlines(), vec![Line::new(t.zero(), t.one())]);
    let n = m(&t, [-1, 2, 0, -1]);
    assert_eq!(n.eigenlines(), vec![Line::horizontal(&t.zero())]);
}

#[test]
fn realize_printed_solutions() {
    let t = Tower::rational();
    let v = |xs: [i64; 6]| xs.map(|x| t.int(x));
    let r = |x: [Elem; 6]| realize_triple(&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]).unwrap();
    let id = Mat2::identity(&t.zero());
    let uu = m(&t, [1, 1, 0, 1]);
    let ll = m(&t, [1, 0, -4, 1]);
    assert_eq!(r(v([2, 2, 2, 2, 2, 2])), [id.clone(), id.clone(), id.clone()]);
    assert_eq!(r(v([2, 2, 2, -2, 2, 2])), [uu.clone(), ll.clone(), id]);
    let out = r(v([3, 0, 0, 1, 0, 0]));
    assert_eq!(traces_of(&out), v([3, 0, 0, 1, 0, 0]));
}

#[test]
fn realize_all_sign_patterns() {
    let t = Tower::rational();
    for bits in 0..64u32 {
        let x: [Elem; 6] = std::array::from_fn(|i| t.int(if bits >> i & 1 == 1 { -2 } else { 2 }));
        let out = realize_triple(&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]).unwrap();
        assert_eq!(traces_of(&out), x);
    }
}

#[test]
fn realize_degenerate_subcases() {
    let t = Tower::rational();
    // mixed: all t_i = +-2, one pair value free
    for (t12, t23, t31) in [(5, 2, 2), (2, 7, -2), (-2, 2, 0), (3, 4, 5)] {
        for signs in 0..8u32 {
            let s = |i: u32| if signs >> i & 1 == 1 { -2 } else { 2 };
            let x = [s(0), s(1), s(2), t12, t23, t31].map(|v| t.int(v));
            let out = realize_triple(&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]).unwrap();
            assert_eq!(traces_of(&out), x);
        }
    }
    // ad = 1 branches of the diagonal case
    for x in [[3, 2, 2, 3, 2, 3], [3, 2, 2, 3, 5, 3], [3, 2, 3, 3, 2, 3], [3, 2, 3, 3, 9, 3]] {
        let x = x.map(|v| t.int(v));
        let out = realize_triple(&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]).unwrap();
        assert_eq!(traces_of(&out), x);
    }
}

#[test]
fn random_trace_identities() {
    let t = Tower::rational();
    let z = t.zero();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let a = random_sl2(&z, &mut rng);
        let b = random_sl2(&z, &mut rng);
        assert_eq!(a.mul(&b).trace() + a.inverse().mul(&b).trace(), a.trace() * b.trace());
        assert_eq!(delta(&a, &b) + t.int(2), a.commutator(&b).trace());
    }
}

#[test]
fn diagonalize_examples() {
    let t = Tower::rational();
    let a = Mat2::diag(t.int(2)).unwrap();
    let b = Mat2::diag(t.int(5)).unwrap();
    let nf = diagonalize_or_normalize(&a, &b).unwrap();
    assert!(nf.diagonalizable);
    assert_eq!((nf.a, nf.b), (a.clone(), b));

    let u = m(&t, [1, 1, 0, 1]);
    let nf = diagonalize_or_normalize(&a, &u).unwrap();
    assert!(!nf.diagonalizable);
    assert_eq!(nf.a, a);
    assert_eq!(nf.b, u);

    let id = Mat2::identity(&t.zero());
    let nf = diagonalize_or_normalize(&id, &u).unwrap();
    assert!(!nf.diagonalizable);
    assert!(nf.b.c.is_zero());

    assert!(diagonalize_or_normalize(&u, &m(&t, [1, 0, 1, 1])).is_err());
}

#[test]
fn normal_form_of_random_reducible_pairs() {
    let t = Tower::rational();
    let z = t.zero();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let p = random_sl2(&z, &mut rng);
        let a = random_upper(&z, &mut rng).conj_by(&p);
        let b = random_upper(&z, &mut rng).conj_by(&p);
        let nf = diagonalize_or_normalize(&a, &b).unwrap();
        assert_eq!(nf.a, a.conj_by(&nf.conj));
        assert_eq!(nf.b, b.conj_by(&nf.conj));
        assert!(nf.a.c.is_zero() && nf.b.c.is_zero());
        assert_eq!(nf.a.trace(), a.trace());
        if nf.diagonalizable {
            assert!(nf.a.b.is_zero() && nf.b.b.is_zero());
        } else if !a.trace().is_pm_two() {
            assert!(nf.a.b.is_zero());
            assert!(nf.b.b.is_one());
        }
    }
}

#[test]
fn gm_examples() {
    let t = Tower::rational();
    let id = Mat2::identity(&t.zero());
    let rep = Rep::new(vec![id.clone(), id]).unwrap();
    assert_eq!(gm_reducibility_witness(&rep, &Word::gen(1)), GmVerdict::IdentityImage);
    let rep = Rep::new(vec![m(&t, [1, 1, 0, 1]), m(&t, [1, 2, 0, 1])]).unwrap();
    assert_eq!(gm_reducibility_witness(&rep, &Word::gen(1)), GmVerdict::Reducible(Line::horizontal(&t.zero())));
    let rep = Rep::new(vec![m(&t, [2, 1, 1, 1]), m(&t, [1, 2, 0, 1])]).unwrap();
    assert_eq!(gm_reducibility_witness(&rep, &Word::gen(1)), GmVerdict::NotApplicable);
}
