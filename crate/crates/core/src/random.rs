//! Random determinant-one matrices with small entries, for sampling and tests.

use rand::Rng;

use crate::scalar::Field;
use crate::sl2::{Mat2, Rep};

/// Product of a few elementary matrices `[[1,k],[0,1]]`, `[[1,0],[k,1]]`
/// and one diagonal `diag(r, 1/r)` with small rational `r`.
pub fn random_sl2<F: Field, R: Rng + ?Sized>(like: &F, rng: &mut R) -> Mat2<F> {
    let mut m = Mat2::identity(like);
    for _ in 0..rng.gen_range(1..=3) {
        let k = like.from_i64_like(rng.gen_range(-3..=3));
        let (z, o) = (like.zero_like(), like.one_like());
        let e = if rng.gen_bool(0.5) { Mat2::raw(o.clone(), k, z, o) } else { Mat2::raw(o.clone(), z, k, o) };
        m = m.mul(&e);
    }
    if rng.gen_bool(0.5) {
        let num = rng.gen_range(1..=3);
        let den = rng.gen_range(1..=3);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let (num, den) = (like.from_i64_like(sign * num), like.from_i64_like(den));
        // small characteristic can kill either part
        if !num.is_zero() && !den.is_zero() {
            m = m.mul(&Mat2::diag(num / &den).unwrap());
        }
    }
    m
}

/// Upper-triangular matrix with a random diagonal and corner.
pub fn random_upper<F: Field, R: Rng + ?Sized>(like: &F, rng: &mut R) -> Mat2<F> {
    let mut l = like.from_i64_like(rng.gen_range(-3..=3));
    if l.is_zero() {
        l = like.one_like();
    }
    let mut m = Mat2::diag(l).unwrap();
    m.b = like.from_i64_like(rng.gen_range(-2..=2));
    m
}

/// Integer-entry matrix: a product of elementary matrices only.
pub fn random_sl2_int<F: Field, R: Rng + ?Sized>(like: &F, rng: &mut R) -> Mat2<F> {
    let mut m = Mat2::identity(like);
    for _ in 0..rng.gen_range(1..=3) {
        let k = like.from_i64_like(rng.gen_range(-2..=2));
        let (z, o) = (like.zero_like(), like.one_like());
        let e = if rng.gen_bool(0.5) { Mat2::raw(o.clone(), k, z, o) } else { Mat2::raw(o.clone(), z, k, o) };
        m = m.mul(&e);
    }
    if rng.gen_bool(0.3) {
        m = m.neg();
    }
    m
}

pub fn random_rep_int<F: Field, R: Rng + ?Sized>(like: &F, rank: usize, rng: &mut R) -> Rep<F> {
    Rep { gens: (0..rank).map(|_| random_sl2_int(like, rng)).collect() }
}

pub fn random_rep<F: Field, R: Rng + ?Sized>(like: &F, rank: usize, rng: &mut R) -> Rep<F> {
    Rep { gens: (0..rank).map(|_| random_sl2(like, rng)).collect() }
}

/// Random reducible representation: all generators upper-triangular.
pub fn random_reducible_rep<F: Field, R: Rng + ?Sized>(like: &F, rank: usize, rng: &mut R) -> Rep<F> {
    Rep { gens: (0..rank).map(|_| random_upper(like, rng)).collect() }
}
