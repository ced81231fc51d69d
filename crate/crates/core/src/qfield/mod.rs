//! Exact arithmetic in an append-only tower of quadratic extensions of Q or F_p.
//!
//! Level `i` adjoins `s_i` with `s_i^2 = u_i s_i + v_i`, where `u_i, v_i` live
//! in the tower below. Odd characteristic only ever uses `u_i = 0`; in
//! characteristic 2 every level is Artin-Schreier (`u_i = 1`).

mod arith;
pub mod base;
mod text;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use arith::{level_of, trim, Coords, Cx};
pub use base::Base;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelKind {
    Sqrt,
    ArtinSchreier,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    pub kind: LevelKind,
    pub u: Vec<BigRational>,
    pub v: Vec<BigRational>,
}

struct Inner {
    base: Base,
    levels: RwLock<Arc<Vec<Level>>>,
}

/// Shared handle to a field tower. Clones refer to the same tower.
#[derive(Clone)]
pub struct Tower(Arc<Inner>);

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tower({}, {} levels)", self.base().label(), self.depth())
    }
}

impl Tower {
    pub fn new(base: Base) -> Tower {
        Tower(Arc::new(Inner { base, levels: RwLock::new(Arc::new(Vec::new())) }))
    }

    pub fn rational() -> Tower {
        Tower::new(Base::Rational)
    }

    pub fn prime(p: u64) -> Tower {
        assert!(base::is_prime(p), "{p} is not prime");
        Tower::new(Base::Prime(p))
    }

    pub fn base(&self) -> Base {
        self.0.base
    }

    pub fn characteristic(&self) -> u64 {
        self.0.base.characteristic()
    }

    pub fn depth(&self) -> usize {
        self.0.levels.read().len()
    }

    pub fn levels(&self) -> Arc<Vec<Level>> {
        self.0.levels.read().clone()
    }

    pub fn same(&self, other: &Tower) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Append a level unless the tower grew since `seen` levels were observed.
    fn push_level(&self, seen: usize, level: Level) -> bool {
        let mut guard = self.0.levels.write();
        if guard.len() != seen {
            return false;
        }
        Arc::make_mut(&mut guard).push(level);
        true
    }

    fn elem(&self, c: Coords) -> Elem {
        Elem { tower: self.clone(), c: trim(c) }
    }

    pub fn zero(&self) -> Elem {
        self.elem(vec![BigRational::zero()])
    }

    pub fn one(&self) -> Elem {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Elem {
        self.elem(vec![self.base().from_i64(v)])
    }

    pub fn bigint(&self, v: &BigInt) -> Elem {
        self.elem(vec![self.base().reduce(BigRational::from_integer(v.clone()))])
    }

    pub fn rational_value(&self, q: &BigRational) -> Elem {
        self.elem(vec![self.base().reduce(q.clone())])
    }

    pub fn frac(&self, n: i64, d: i64) -> Elem {
        self.rational_value(&BigRational::new(n.into(), d.into()))
    }

    /// The generator adjoined at level `i` (1-based).
    pub fn generator(&self, i: usize) -> Elem {
        assert!(i >= 1 && i <= self.depth(), "no level {i}");
        let mut c = vec![BigRational::zero(); 1 << i];
        c[1 << (i - 1)] = self.base().from_i64(1);
        self.elem(c)
    }

    /// Build an element from raw coordinates, reducing them into the base field.
    pub fn from_coords(&self, coords: Vec<BigRational>) -> Result<Elem> {
        if !coords.len().is_power_of_two() {
            return Err(Error::Parse("coordinate count must be a power of two".into()));
        }
        if level_of(coords.len()) > self.depth() {
            return Err(Error::Parse("coordinates exceed the tower depth".into()));
        }
        let b = self.base();
        Ok(self.elem(coords.into_iter().map(|x| b.reduce(x)).collect()))
    }

    fn with_cx<R>(&self, f: impl FnOnce(&Cx) -> R) -> R {
        let levels = self.levels();
        f(&Cx { base: self.base(), levels: &levels })
    }

    /// Square root, adjoining one if the element is not a square in the tower.
    pub fn sqrt(&self, a: &Elem) -> Elem {
        self.check(a);
        loop {
            let levels = self.levels();
            let k = levels.len();
            let cx = Cx { base: self.base(), levels: &levels };
            if self.characteristic() == 2 {
                return self.elem(cx.sqrt_char2(&a.c, k));
            }
            if let Some(r) = cx.sqrt_in(&a.c, k) {
                return self.elem(r);
            }
            let level = Level { kind: LevelKind::Sqrt, u: vec![BigRational::zero()], v: a.c.clone() };
            if self.push_level(k, level) {
                return self.generator(k + 1);
            }
        }
    }

    /// Square root only if it already exists in the tower.
    pub fn sqrt_existing(&self, a: &Elem) -> Option<Elem> {
        self.check(a);
        let k = self.depth();
        if self.characteristic() == 2 {
            return Some(self.elem(self.with_cx(|cx| cx.sqrt_char2(&a.c, k))));
        }
        self.with_cx(|cx| cx.sqrt_in(&a.c, k)).map(|r| self.elem(r))
    }

    /// Both roots of `x^2 + a x + b = 0`, extending the tower when needed.
    pub fn solve_quadratic(&self, a: &Elem, b: &Elem) -> (Elem, Elem) {
        self.check(a);
        self.check(b);
        if self.characteristic() != 2 {
            let disc = a * a - self.int(4) * b;
            let s = self.sqrt(&disc);
            let half = self.frac(1, 2);
            let r1 = (-a + &s) * &half;
            let r2 = (-a - &s) * &half;
            return (r1, r2);
        }
        if a.is_zero() {
            let r = self.sqrt(b);
            return (r.clone(), r);
        }
        // x = a y turns the equation into y^2 + y = b / a^2
        let c = b / &(a * a);
        let y = loop {
            let levels = self.levels();
            let k = levels.len();
            let found = Cx { base: self.base(), levels: &levels }.artin_schreier(&c.c, k);
            if let Some(y) = found {
                break self.elem(y);
            }
            let level = Level { kind: LevelKind::ArtinSchreier, u: vec![self.base().from_i64(1)], v: c.c.clone() };
            if self.push_level(k, level) {
                break self.generator(k + 1);
            }
        };
        let r1 = a * &y;
        let r2 = a * &(y + self.one());
        (r1, r2)
    }

    fn check(&self, a: &Elem) {
        assert!(self.same(&a.tower), "{}", Error::MixedContext);
    }
}

/// An element of a [`Tower`], stored in canonical (trimmed) coordinates.
#[derive(Clone)]
pub struct Elem {
    tower: Tower,
    c: Coords,
}

impl Elem {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.c
    }

    /// Number of tower levels needed to express this element.
    pub fn level(&self) -> usize {
        level_of(self.c.len())
    }

    pub fn is_zero(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == self.tower.base().from_i64(1)
    }

    /// The value as a base-field scalar, if it lies in the base field.
    pub fn as_base(&self) -> Option<&BigRational> {
        (self.c.len() == 1).then(|| &self.c[0])
    }

    /// Coordinates padded to `2^level`.
    pub fn lifted(&self, level: usize) -> Vec<BigRational> {
        assert!(level >= self.level());
        arith::pad(self.c.clone(), 1 << level)
    }

    fn with_own_cx<R>(&self, f: impl FnOnce(&Cx) -> R) -> R {
        if self.c.len() == 1 {
            f(&Cx { base: self.tower.base(), levels: &[] })
        } else {
            self.tower.with_cx(f)
        }
    }

    fn binop(&self, o: &Elem, f: impl FnOnce(&Cx, &[BigRational], &[BigRational]) -> Result<Coords>) -> Result<Elem> {
        if !self.tower.same(&o.tower) {
            return Err(Error::MixedContext);
        }
        if self.c.len() == 1 && o.c.len() == 1 {
            // ground-field operands never need the level table
            let c = f(&Cx { base: self.tower.base(), levels: &[] }, &self.c, &o.c)?;
            return Ok(self.tower.elem(c));
        }
        let c = self.tower.with_cx(|cx| f(cx, &self.c, &o.c))?;
        Ok(self.tower.elem(c))
    }

    pub fn try_add(&self, o: &Elem) -> Result<Elem> {
        self.binop(o, |cx, a, b| Ok(cx.add(a, b)))
    }

    pub fn try_sub(&self, o: &Elem) -> Result<Elem> {
        self.binop(o, |cx, a, b| Ok(cx.sub(a, b)))
    }

    pub fn try_mul(&self, o: &Elem) -> Result<Elem> {
        self.binop(o, |cx, a, b| Ok(cx.mul(a, b)))
    }

    pub fn try_div(&self, o: &Elem) -> Result<Elem> {
        self.binop(o, |cx, a, b| Ok(cx.mul(a, &cx.inv(b)?)))
    }

    pub fn try_inv(&self) -> Result<Elem> {
        let c = self.with_own_cx(|cx| cx.inv(&self.c))?;
        Ok(self.tower.elem(c))
    }

    pub fn square(&self) -> Elem {
        self * self
    }

    pub fn pow(&self, mut e: u64) -> Elem {
        let mut r = self.tower.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            b = b.square();
            e >>= 1;
        }
        r
    }
}

impl PartialEq for Elem {
    fn eq(&self, o: &Elem) -> bool {
        self.tower.same(&o.tower) && self.c == o.c
    }
}

impl Eq for Elem {}

impl std::hash::Hash for Elem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Elem> for &Elem {
            type Output = Elem;
            fn $m(self, o: &Elem) -> Elem {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Elem> for &Elem {
            type Output = Elem;
            fn $m(self, o: Elem) -> Elem {
                self.$m(&o)
            }
        }
        impl $tr<&Elem> for Elem {
            type Output = Elem;
            fn $m(self, o: &Elem) -> Elem {
                (&self).$m(o)
            }
        }
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $m(self, o: Elem) -> Elem {
                (&self).$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        let c = self.with_own_cx(|cx| cx.neg(&self.c));
        self.tower.elem(c)
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        -&self
    }
}

#[cfg(test)]
mod tests;
