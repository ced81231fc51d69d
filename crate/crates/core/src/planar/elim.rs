//! Solving the pentagon system for the value on `alpha_1`.
//!
//! With `x21, x51, x43` eliminated through the three pentagon-pair relations,
//! the three difference relations read `B (x12, x15, x34)^T + x1 A_4 = p~` with
//!
//! ```text
//!       [  b1  -2   a2 ]         [ -a5         ]
//!   B = [  -2  b1  -a5 ]   A_4 = [ a5 b1 - a2  ]
//!       [  a5 -a2    2 ]         [ -b1         ]
//! ```
//!
//! and `adj(B) A = Delta [2 I | (a2, a5, -b1)^T]`.

use std::ops::{Add, Mul, Sub};

use super::equations::Frame;
use crate::error::{Error, Result};
use crate::poly::TracePoly;
use crate::scalar::Field;
use crate::sl2::delta_of_traces;
use crate::word::Word;

/// The 3x4 coefficient matrix `A = [B | A_4]` in the unknowns `(x12, x15, x34, x1)`.
pub fn system_matrix<T>(a2: &T, a5: &T, b1: &T, zero: &T, two: &T) -> [[T; 4]; 3]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let neg = |t: &T| zero.clone() - t.clone();
    [
        [b1.clone(), neg(two), a2.clone(), neg(a5)],
        [neg(two), b1.clone(), neg(a5), a5.clone() * b1.clone() - a2.clone()],
        [a5.clone(), neg(a2), two.clone(), neg(b1)],
    ]
}

pub fn det3<T>(m: &[[T; 3]; 3]) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone();
    m[0][0].clone() * minor(1, 2, 1, 2) - m[0][1].clone() * minor(1, 2, 0, 2) + m[0][2].clone() * minor(1, 2, 0, 1)
}

/// Classical adjoint: `adj(m) m = det(m) I`.
pub fn adjugate3<T>(m: &[[T; 3]; 3]) -> [[T; 3]; 3]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let cof = |r: usize, c: usize| {
        let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
        let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
        m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
    };
    // transpose of the cofactor matrix; cyclic minors carry their own sign
    std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i)))
}

pub fn mat_mul<T, const K: usize>(a: &[[T; 3]; 3], b: &[[T; K]; 3], zero: &T) -> [[T; K]; 3]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).fold(zero.clone(), |s, k| s + a[i][k].clone() * b[k][j].clone())))
}

fn left_block<T: Clone>(a: &[[T; 4]; 3]) -> [[T; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].clone()))
}

/// `(adj(B) A, det B)` with `a2, a5, b1` as the polynomial variables `t1, t2, t3`.
pub fn symbolic_system() -> ([[TracePoly; 4]; 3], TracePoly) {
    let (a2, a5, b1) = (TracePoly::var(1), TracePoly::var(2), TracePoly::var(4));
    let a = system_matrix(&a2, &a5, &b1, &TracePoly::zero(), &TracePoly::constant(2));
    let b = left_block(&a);
    (mat_mul(&adjugate3(&b), &a, &TracePoly::zero()), det3(&b))
}

/// The printed form `Delta [[2,0,0,a2],[0,2,0,a5],[0,0,2,-b1]]` in the same variables.
pub fn printed_product() -> [[TracePoly; 4]; 3] {
    let (a2, a5, b1) = (TracePoly::var(1), TracePoly::var(2), TracePoly::var(4));
    let c = |k: i64| TracePoly::constant(k);
    let delta = a2.clone() * a2.clone() + a5.clone() * a5.clone() + b1.clone() * b1.clone()
        - a2.clone() * a5.clone() * b1.clone()
        - c(4);
    let d = |t: TracePoly| delta.clone() * t;
    [
        [d(c(2)), c(0), c(0), d(a2)],
        [c(0), d(c(2)), c(0), d(a5)],
        [c(0), c(0), d(c(2)), d(c(0) - b1)],
    ]
}

/// Right-hand sides of [`Frame::system`] for the standard pentagon, for
/// it twisted back along `alpha_2`, and for its mirror twisted back along
/// `alpha_5` (whose middle values are `(a5, a2, b1)`).
#[derive(Debug, Clone, PartialEq)]
pub struct PentagonRhs<F> {
    pub main: [F; 6],
    pub shifted: [F; 6],
    pub mirrored: [F; 6],
}

#[derive(Debug, Clone, PartialEq)]
pub struct Elimination<F> {
    pub x1: F,
    pub x12: Option<F>,
    pub x15: Option<F>,
    pub x34: Option<F>,
    pub x21: Option<F>,
    pub x51: Option<F>,
    pub x43: Option<F>,
}

/// `(a2, a5, b1)` and the right-hand sides, from values on the known curves.
pub fn harvest_45<F: Field>(h: &impl Fn(&Word) -> F, like: &F) -> Result<([F; 3], PentagonRhs<F>)> {
    let main = Frame::standard();
    Ok((
        main.middle(h),
        PentagonRhs {
            main: main.rhs(h, like)?,
            shifted: Frame::shifted().rhs(h, like)?,
            mirrored: Frame::mirror_shifted().rhs(h, like)?,
        },
    ))
}

/// `[q12, q15, q34, q21, q51, q43]`, where `q_u = 2 x_u + c x1` for the
/// matching middle value `c`: the 3x3 system solved through the adjoint, then
/// the pentagon-pair relations.
fn reduce<F: Field>(a2: &F, a5: &F, b1: &F, delta: &F, p: &[F; 6]) -> [F; 6] {
    let [s1, s2, s3, d1, d2, d3] = p.clone();
    let two = a2.from_i64_like(2);
    let pt = [
        d1 - &s3,
        d2 - &s2 - a5.clone() * &s1,
        d3 + &s1,
    ];
    let b = left_block(&system_matrix(a2, a5, b1, &a2.zero_like(), &two));
    let adj = adjugate3(&b);
    let q: [F; 3] = std::array::from_fn(|i| (0..3).fold(a2.zero_like(), |s, k| s + adj[i][k].clone() * &pt[k]) / delta);
    [
        q[0].clone(),
        q[1].clone(),
        q[2].clone(),
        two.clone() * &s2 - &q[0],
        two.clone() * &s3 - &q[1],
        two * &s1 - &q[2],
    ]
}

/// `(coefficient, right side)` of the three equations for `x1` alone, with
/// leading coefficients `4 - a2^2`, `4 - a5^2` and `2 b1 - a2 a5`.
pub fn leading_equations<F: Field>(a2: &F, a5: &F, b1: &F, p: &PentagonRhs<F>) -> Result<[(F, F); 3]> {
    let delta = delta_of_traces(a2, a5, b1);
    if delta.is_zero() {
        return Err(Error::NoSolution("reducible middle pair: Delta(a2, a5, b1) = 0".into()));
    }
    let [q12, q15, q34, ..] = reduce(a2, a5, b1, &delta, &p.main);
    let shifted = reduce(a2, a5, b1, &delta, &p.shifted);
    let mirrored = reduce(a5, a2, b1, &delta, &p.mirrored);
    let (two, four) = (a2.from_i64_like(2), a2.from_i64_like(4));
    Ok([
        (four.clone() - a2.square(), two.clone() * &shifted[3] - a2.clone() * &q12),
        (four - a5.square(), two.clone() * &mirrored[3] - a5.clone() * &q15),
        (two.clone() * b1 - a2.clone() * a5, two.clone() * &shifted[4] - a5.clone() * &q12 - two * &q34),
    ])
}

/// Solve the pentagon system for `x1 = f(alpha_1)` and, outside
/// characteristic 2, the six product values.
///
/// The value is taken from the first of the [`leading_equations`] with a
/// nonzero coefficient; in characteristic 2 from the first row of the 3x3
/// system with a nonzero coefficient.
pub fn elimination_45<F: Field>(a2: &F, a5: &F, b1: &F, p: &PentagonRhs<F>) -> Result<Elimination<F>> {
    let delta = delta_of_traces(a2, a5, b1);
    if delta.is_zero() {
        return Err(Error::NoSolution("reducible middle pair: Delta(a2, a5, b1) = 0".into()));
    }
    let [q12, q15, q34, q21, q51, q43] = reduce(a2, a5, b1, &delta, &p.main);
    let two = a2.from_i64_like(2);
    if a2.characteristic() == 2 {
        let x1 = [(a2, &q12), (a5, &q15), (b1, &q34)]
            .into_iter()
            .find(|(c, _)| !c.is_zero())
            .map(|(c, q)| q.clone() / c)
            .ok_or_else(|| Error::NoSolution("a2, a5 and b1 all vanish".into()))?;
        return Ok(Elimination { x1, x12: None, x15: None, x34: None, x21: None, x51: None, x43: None });
    }
    let x1 = leading_equations(a2, a5, b1, p)?
        .into_iter()
        .find(|(c, _)| !c.is_zero())
        .map(|(c, q)| q / &c)
        .ok_or_else(|| Error::NoSolution("all three leading coefficients vanish".into()))?;
    let half = |q: &F, c: &F| Some((q.clone() - c.clone() * &x1) / &two);
    let nb1 = -b1.clone();
    Ok(Elimination {
        x12: half(&q12, a2),
        x15: half(&q15, a5),
        x34: half(&q34, &nb1),
        x21: half(&q21, a2),
        x51: half(&q51, a5),
        x43: half(&q43, &nb1),
        x1,
    })
}
