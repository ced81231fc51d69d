//! Trace polynomials of words and the rank-3 character hypersurface.
//!
//! Every rewrite below is an instance of `tr(AB) + tr(A^-1 B) = tr A tr B`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use parking_lot::Mutex;

use crate::poly::{Subset, TracePoly};
use crate::scalar::{Field, QuadClosed};
use crate::sl2::Rep;
use crate::word::Word;

/// Memoizing reducer from words to trace polynomials.
#[derive(Default)]
pub struct Reducer {
    memo: Mutex<HashMap<Word, TracePoly>>,
}

impl Reducer {
    pub fn new() -> Self {
        Reducer::default()
    }

    pub fn reduce(&self, w: &Word) -> TracePoly {
        let key = w.class_key();
        if let Some(p) = self.memo.lock().get(&key) {
            return p.clone();
        }
        let p = self.reduce_key(&key);
        self.memo.lock().insert(key, p.clone());
        p
    }

    fn reduce_key(&self, w: &Word) -> TracePoly {
        // work with whichever of w, w^-1 has fewer inverse letters
        let neg = w.letters().iter().filter(|&&x| x < 0).count();
        let w = &if 2 * neg > w.len() { w.inverse() } else { w.clone() };
        let l = w.letters();
        if l.is_empty() {
            return TracePoly::constant(2);
        }
        let n = l.len();
        // tr(x^-1 u) = tr x tr u - tr(x u)
        if let Some(i) = l.iter().position(|&x| x < 0) {
            let r = w.rotate(i);
            let g = -r.letters()[0];
            let u = Word::new(r.letters()[1..].iter().copied());
            let xu = Word::new(std::iter::once(g).chain(u.letters().iter().copied()));
            return self.gen_poly(g).mul(&self.reduce(&u)).sub(&self.reduce(&xu));
        }
        // tr(x u x v) = tr(x u) tr(x v) - tr(u^-1 v), using two nearest occurrences
        let mut last: HashMap<i32, usize> = HashMap::new();
        for (j, &x) in l.iter().enumerate() {
            if let Some(&i) = last.get(&x) {
                let r = w.rotate(i);
                let k = j - i;
                let x = r.letters()[0];
                let u = Word::new(r.letters()[1..k].iter().copied());
                let v = Word::new(r.letters()[k + 1..].iter().copied());
                let xu = Word::new(std::iter::once(x).chain(u.letters().iter().copied()));
                let xv = Word::new(std::iter::once(x).chain(v.letters().iter().copied()));
                return self.reduce(&xu).mul(&self.reduce(&xv)).sub(&self.reduce(&u.inverse().concat(&v)));
            }
            last.insert(x, j);
        }
        // distinct positive letters: sort by adjacent swaps
        let m = (0..n).min_by_key(|&i| l[i]).unwrap();
        let r = w.rotate(m);
        let s = r.letters();
        let Some(j) = (0..n - 1).find(|&j| s[j] > s[j + 1]) else {
            let mask: Subset = s.iter().fold(0, |acc, &x| acc | 1 << (x - 1));
            return TracePoly::var(mask);
        };
        // tr(ABC) = -tr(BAC) + trA tr(BC) + trB tr(AC) + trC tr(AB) - trA trB trC
        let rot = r.rotate(j);
        let (a, b) = (rot.letters()[0], rot.letters()[1]);
        let c = Word::new(rot.letters()[2..].iter().copied());
        let (wa, wb) = (Word::gen(a as usize), Word::gen(b as usize));
        let bac = wb.concat(&wa).concat(&c);
        let ta = self.gen_poly(a);
        let tb = self.gen_poly(b);
        let tc = self.reduce(&c);
        ta.mul(&self.reduce(&wb.concat(&c)))
            .add(&tb.mul(&self.reduce(&wa.concat(&c))))
            .add(&tc.mul(&self.reduce(&wa.concat(&wb))))
            .sub(&ta.mul(&tb).mul(&tc))
            .sub(&self.reduce(&bac))
    }

    fn gen_poly(&self, g: i32) -> TracePoly {
        TracePoly::var(1 << (g.unsigned_abs() - 1))
    }
}

/// Trace polynomial of `w`, with a fresh memo table.
pub fn reduce_trace_word(w: &Word) -> TracePoly {
    Reducer::new().reduce(w)
}

/// The word `x_{i1} ... x_{ik}` of a subset, indices increasing.
pub fn subset_word(s: Subset) -> Word {
    Word::new((0..32).filter(|i| s >> i & 1 == 1).map(|i| i + 1))
}

/// `t_S = tr(A_{i1} ... A_{ik})` for every nonempty subset `S`.
pub fn subset_traces<F: Field>(rep: &Rep<F>) -> BTreeMap<Subset, F> {
    let n = rep.rank();
    (1..1u32 << n).map(|s| (s, rep.trace(&subset_word(s)))).collect()
}

pub fn trace_of_word_direct<F: Field>(rep: &Rep<F>, w: &Word) -> F {
    rep.trace(w)
}

/// `(t1, t2, t3, t12, t23, t31, t123)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoint3<F> {
    pub t1: F,
    pub t2: F,
    pub t3: F,
    pub t12: F,
    pub t23: F,
    pub t31: F,
    pub t123: F,
}

impl<F: Field> CharPoint3<F> {
    pub fn of_triple(m: &[crate::sl2::Mat2<F>; 3]) -> Self {
        CharPoint3 {
            t1: m[0].trace(),
            t2: m[1].trace(),
            t3: m[2].trace(),
            t12: m[0].mul(&m[1]).trace(),
            t23: m[1].mul(&m[2]).trace(),
            t31: m[2].mul(&m[0]).trace(),
            t123: m[0].mul(&m[1]).mul(&m[2]).trace(),
        }
    }
}

/// `P` and `Q` with `tr(A1A2A3)`, `tr(A1^-1A2^-1A3^-1)` the roots of `x^2 - P x + Q`.
pub fn t123_sum_product<F: Field>(t1: &F, t2: &F, t3: &F, t12: &F, t23: &F, t31: &F) -> (F, F) {
    let p = t1.clone() * t23 + t2.clone() * t31 + t3.clone() * t12 - t1.clone() * t2 * t3;
    let q = t1.square() + t2.square() + t3.square() + t12.square() + t23.square() + t31.square()
        - t1.clone() * t2 * t12
        - t2.clone() * t3 * t23
        - t3.clone() * t1 * t31
        + t12.clone() * t23 * t31
        - t1.from_i64_like(4);
    (p, q)
}

/// Left side of the hypersurface equation; zero exactly on characters.
pub fn variety_residual<F: Field>(pt: &CharPoint3<F>) -> F {
    let (p, q) = t123_sum_product(&pt.t1, &pt.t2, &pt.t3, &pt.t12, &pt.t23, &pt.t31);
    pt.t123.square() - p * &pt.t123 + q
}

pub fn t123_roots<F: QuadClosed>(t1: &F, t2: &F, t3: &F, t12: &F, t23: &F, t31: &F) -> (F, F) {
    let (p, q) = t123_sum_product(t1, t2, t3, t12, t23, t31);
    F::solve_quadratic(&-p, &q)
}

/// Polynomial form of the residual in the variables `t_S`, rank 3.
pub fn variety_poly() -> TracePoly {
    let v = TracePoly::var;
    let (t1, t2, t3, t12, t23, t13, t123) = (v(1), v(2), v(4), v(3), v(6), v(5), v(7));
    let p = t1.mul(&t23).add(&t2.mul(&t13)).add(&t3.mul(&t12)).sub(&t1.mul(&t2).mul(&t3));
    let q = [&t1, &t2, &t3, &t12, &t23, &t13]
        .iter()
        .fold(TracePoly::zero(), |acc, x| acc.add(&x.mul(x)))
        .sub(&t1.mul(&t2).mul(&t12))
        .sub(&t2.mul(&t3).mul(&t23))
        .sub(&t3.mul(&t1).mul(&t13))
        .add(&t12.mul(&t23).mul(&t13))
        .sub(&TracePoly::constant(BigInt::from(4)));
    t123.mul(&t123).sub(&p.mul(&t123)).add(&q)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::qfield::Tower;
    use crate::random::random_rep;
    use crate::sl2::Mat2;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn printed_polynomials() {
        assert_eq!(reduce_trace_word(&w("x1")).to_string(), "t1");
        assert_eq!(reduce_trace_word(&w("x1^-1")).to_string(), "t1");
        let comm = reduce_trace_word(&w("x1 x2 x1^-1 x2^-1"));
        let expected = TracePoly::var(1).mul(&TracePoly::var(1))
            .add(&TracePoly::var(2).mul(&TracePoly::var(2)))
            .add(&TracePoly::var(3).mul(&TracePoly::var(3)))
            .sub(&TracePoly::var(1).mul(&TracePoly::var(2)).mul(&TracePoly::var(3)))
            .sub(&TracePoly::constant(2));
        assert_eq!(comm, expected);
        let d = reduce_trace_word(&w("x1 x2 x3 x2^-1"));
        let v = TracePoly::var;
        let expected = v(1).mul(&v(4)).add(&v(2).mul(&v(7))).sub(&v(3).mul(&v(6))).sub(&v(5));
        // polynomials in rank 3 are not unique, so compare values on random reps
        let t = Tower::rational();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let rep = random_rep(&t.zero(), 3, &mut rng);
            let tr = subset_traces(&rep);
            assert_eq!(d.eval_map(&t.zero(), &tr).unwrap(), expected.eval_map(&t.zero(), &tr).unwrap());
        }
    }

    #[test]
    fn evaluation_examples() {
        let t = Tower::rational();
        let mut vals = BTreeMap::new();
        vals.insert(1, t.int(5));
        assert_eq!(TracePoly::var(1).eval_map(&t.zero(), &vals).unwrap(), t.int(5));
        assert!(TracePoly::var(2).eval_map(&t.zero(), &vals).is_err());
        let comm = reduce_trace_word(&w("x1 x2 x1^-1 x2^-1"));
        let twos: BTreeMap<Subset, _> = (1..4).map(|s| (s, t.int(2))).collect();
        assert_eq!(comm.eval_map(&t.zero(), &twos).unwrap(), t.int(2));
    }

    #[test]
    fn direct_trace_examples() {
        let t = Tower::rational();
        let z = t.zero();
        let id = Rep::new(vec![Mat2::identity(&z); 2]).unwrap();
        assert_eq!(trace_of_word_direct(&id, &w("x1 x2^-1 x1")), t.int(2));
        let u = Rep::new(vec![Mat2::from_ints(&z, [1, 1, 0, 1]).unwrap()]).unwrap();
        assert_eq!(trace_of_word_direct(&u, &w("x1 x1")), t.int(2));
        let d = Rep::new(vec![Mat2::diag(t.int(3)).unwrap()]).unwrap();
        assert_eq!(trace_of_word_direct(&d, &w("x1 x1 x1")), t.int(27) + t.frac(1, 27));
    }

    #[test]
    fn variety_examples() {
        let t = Tower::rational();
        let pt = |v: [i64; 7]| {
            let e = v.map(|x| t.int(x));
            CharPoint3 { t1: e[0].clone(), t2: e[1].clone(), t3: e[2].clone(), t12: e[3].clone(), t23: e[4].clone(), t31: e[5].clone(), t123: e[6].clone() }
        };
        assert!(variety_residual(&pt([2; 7])).is_zero());
        assert!(variety_residual(&pt([0, 0, 0, 0, 0, 0, 2])).is_zero());
        let (r1, r2) = t123_roots(&t.int(2), &t.int(2), &t.int(2), &t.int(2), &t.int(2), &t.int(2));
        assert_eq!((r1, r2), (t.int(2), t.int(2)));
        let z = t.zero();
        let (r1, r2) = t123_roots(&z, &z, &z, &z, &z, &z);
        assert_eq!(&r1 + &r2, z);
        assert_eq!(&r1 * &r2, t.int(-4));
    }

    #[test]
    fn residual_polynomial_matches_function() {
        let t = Tower::rational();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let poly = variety_poly();
        for _ in 0..20 {
            let rep = random_rep(&t.zero(), 3, &mut rng);
            let mut tr = subset_traces(&rep);
            *tr.get_mut(&7).unwrap() = tr[&7].clone() + t.one();
            let pt = CharPoint3 { t1: tr[&1].clone(), t2: tr[&2].clone(), t3: tr[&4].clone(), t12: tr[&3].clone(), t23: tr[&6].clone(), t31: tr[&5].clone(), t123: tr[&7].clone() };
            assert_eq!(poly.eval_map(&t.zero(), &tr).unwrap(), variety_residual(&pt));
        }
    }

    #[test]
    fn json_round_trip() {
        let p = reduce_trace_word(&w("x1 x2 x3 x2^-1 x1"));
        assert_eq!(TracePoly::from_json(&p.to_json()).unwrap(), p);
    }
}
