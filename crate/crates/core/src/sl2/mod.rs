//! Determinant-one 2x2 matrices, trace identities and reducibility.

mod identities;
mod normal;
mod realize;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, QuadClosed};
use crate::word::Word;

pub use normal::{diagonalize_or_normalize, gm_reducibility_witness, GmVerdict, NormalForm};
pub use identities::{trace_identities, IDENTITY_NAMES};
pub use realize::{realize_triple, traces_of};

#[derive(Clone, PartialEq)]
pub struct Mat2<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: fmt::Debug> fmt::Debug for Mat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{:?}, {:?}], [{:?}, {:?}]]", self.a, self.b, self.c, self.d)
    }
}

impl<F: Field> Mat2<F> {
    /// Checked constructor: the determinant must be exactly one.
    pub fn new(a: F, b: F, c: F, d: F) -> Result<Self> {
        let m = Mat2 { a, b, c, d };
        if !m.det().is_one() {
            return Err(Error::Invalid(format!("determinant of {m:?} is {}", m.det())));
        }
        Ok(m)
    }

    pub(crate) fn raw(a: F, b: F, c: F, d: F) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(like: &F, e: [i64; 4]) -> Result<Self> {
        Mat2::new(like.from_i64_like(e[0]), like.from_i64_like(e[1]), like.from_i64_like(e[2]), like.from_i64_like(e[3]))
    }

    pub fn identity(like: &F) -> Self {
        Mat2::raw(like.one_like(), like.zero_like(), like.zero_like(), like.one_like())
    }

    pub fn diag(l: F) -> Result<Self> {
        let li = l.try_inv()?;
        let z = l.zero_like();
        Ok(Mat2::raw(l, z.clone(), z, li))
    }

    pub fn det(&self) -> F {
        self.a.clone() * &self.d - self.b.clone() * &self.c
    }

    pub fn trace(&self) -> F {
        self.a.clone() + &self.d
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2::raw(
            self.a.clone() * &o.a + self.b.clone() * &o.c,
            self.a.clone() * &o.b + self.b.clone() * &o.d,
            self.c.clone() * &o.a + self.d.clone() * &o.c,
            self.c.clone() * &o.b + self.d.clone() * &o.d,
        )
    }

    /// Adjugate, which is the inverse for determinant one.
    pub fn inverse(&self) -> Self {
        Mat2::raw(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn neg(&self) -> Self {
        Mat2::raw(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).mul(&self.inverse()).mul(&o.inverse())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Mat2::identity(&self.a), |acc, _| acc.mul(&base))
    }

    /// `P^-1 M P`.
    pub fn conj_by(&self, p: &Self) -> Self {
        p.inverse().mul(self).mul(p)
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a.is_one() && self.d.is_one()
    }

    /// `+id` or `-id`.
    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn entries(&self) -> [&F; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn fixes(&self, l: &Line<F>) -> bool {
        let x = self.a.clone() * &l.u + self.b.clone() * &l.v;
        let y = self.c.clone() * &l.u + self.d.clone() * &l.v;
        (x * &l.v - y * &l.u).is_zero()
    }
}

impl<F: QuadClosed> Mat2<F> {
    /// Eigenvalues as roots of `x^2 - tr x + 1`.
    pub fn eigenvalues(&self) -> (F, F) {
        F::solve_quadratic(&-self.trace(), &self.a.one_like())
    }

    /// All invariant lines of a matrix other than `+-id` (one or two).
    pub fn eigenlines(&self) -> Vec<Line<F>> {
        assert!(!self.is_scalar(), "every line is invariant under a scalar matrix");
        let (l1, l2) = self.eigenvalues();
        let mut out: Vec<Line<F>> = Vec::new();
        for l in [l1, l2] {
            let line = self.kernel_line(&l);
            if !out.contains(&line) {
                out.push(line);
            }
        }
        out.sort_by_key(|l| !l.v.is_zero());
        out
    }

    fn kernel_line(&self, l: &F) -> Line<F> {
        let a = self.a.clone() - l;
        let d = self.d.clone() - l;
        if !(a.is_zero() && self.b.is_zero()) {
            Line::new(-self.b.clone(), a)
        } else {
            Line::new(d, -self.c.clone())
        }
    }
}

/// `tr^2 A + tr^2 B + tr^2 AB - trA trB trAB - 4`.
pub fn delta<F: Field>(a: &Mat2<F>, b: &Mat2<F>) -> F {
    let (x, y, z) = (a.trace(), b.trace(), a.mul(b).trace());
    delta_of_traces(&x, &y, &z)
}

pub fn delta_of_traces<F: Field>(x: &F, y: &F, z: &F) -> F {
    x.square() + y.square() + z.square() - x.clone() * y * z - x.from_i64_like(4)
}

/// A point of the projective line, scaled to `(1 : v)` or `(0 : 1)`.
#[derive(Clone, PartialEq)]
pub struct Line<F> {
    pub u: F,
    pub v: F,
}

impl<F: Field> Line<F> {
    pub fn new(u: F, v: F) -> Self {
        assert!(!(u.is_zero() && v.is_zero()), "zero vector spans no line");
        if u.is_zero() {
            Line { v: v.one_like(), u }
        } else {
            let v = v / &u;
            Line { u: v.one_like(), v }
        }
    }

    pub fn horizontal(like: &F) -> Self {
        Line { u: like.one_like(), v: like.zero_like() }
    }
}

impl<F: fmt::Debug> fmt::Debug for Line<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} : {:?})", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PairVerdict<F> {
    Reducible(Line<F>),
    Irreducible,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyVerdict<F> {
    Reducible(Line<F>),
    /// Indices of a pair or triple with no common invariant line.
    Irreducible(Vec<usize>),
}

/// Common invariant line of a family, if any.
pub fn common_line<F: QuadClosed>(mats: &[&Mat2<F>]) -> Option<Line<F>> {
    let movers: Vec<&&Mat2<F>> = mats.iter().filter(|m| !m.is_scalar()).collect();
    let Some(first) = movers.first() else {
        return mats.first().map(|m| Line::horizontal(&m.a));
    };
    first.eigenlines().into_iter().find(|l| movers.iter().all(|m| m.fixes(l)))
}

pub fn is_reducible_pair<F: QuadClosed>(a: &Mat2<F>, b: &Mat2<F>) -> PairVerdict<F> {
    match common_line(&[a, b]) {
        Some(l) => PairVerdict::Reducible(l),
        None => PairVerdict::Irreducible,
    }
}

pub fn is_reducible_family<F: QuadClosed>(mats: &[Mat2<F>]) -> FamilyVerdict<F> {
    assert!(!mats.is_empty(), "empty family");
    let refs: Vec<&Mat2<F>> = mats.iter().collect();
    if let Some(l) = common_line(&refs) {
        return FamilyVerdict::Reducible(l);
    }
    let idx: Vec<usize> = (0..mats.len()).filter(|&i| !mats[i].is_scalar()).collect();
    for (x, &i) in idx.iter().enumerate() {
        for &j in &idx[x + 1..] {
            if !delta(&mats[i], &mats[j]).is_zero() {
                return FamilyVerdict::Irreducible(vec![i, j]);
            }
        }
    }
    for (x, &i) in idx.iter().enumerate() {
        for (y, &j) in idx.iter().enumerate().skip(x + 1) {
            for &k in &idx[y + 1..] {
                if common_line(&[&mats[i], &mats[j], &mats[k]]).is_none() {
                    return FamilyVerdict::Irreducible(vec![i, j, k]);
                }
            }
        }
    }
    FamilyVerdict::Irreducible(idx)
}

/// One matrix per free generator.
#[derive(Debug, Clone, PartialEq)]
pub struct Rep<F> {
    pub gens: Vec<Mat2<F>>,
}

impl<F: Field> Rep<F> {
    pub fn new(gens: Vec<Mat2<F>>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Invalid("a representation needs at least one generator".into()));
        }
        Ok(Rep { gens })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn eval(&self, w: &Word) -> Mat2<F> {
        let id = Mat2::identity(&self.gens[0].a);
        w.letters().iter().fold(id, |acc, &l| {
            let g = &self.gens[l.unsigned_abs() as usize - 1];
            if l > 0 {
                acc.mul(g)
            } else {
                acc.mul(&g.inverse())
            }
        })
    }

    pub fn trace(&self, w: &Word) -> F {
        self.eval(w).trace()
    }

    pub fn map(&self, f: impl Fn(&Mat2<F>) -> Mat2<F>) -> Rep<F> {
        Rep { gens: self.gens.iter().map(f).collect() }
    }
}

#[cfg(test)]
mod tests;
