//! Trace functions on the four-holed sphere.
//!
//! Generators `x1, x2, x3` with boundary words `b1 = x1, b2 = x2, b3 = x3,
//! b4 = x1x2x3`; slope `0/1` is `x1x2`, `1/0` is `x2x3`, `1/1` is `x1x3`.
//! A slope `p/q` separates the boundary into two pairs according to the
//! parities of `p` and `q`:
//!
//! ```text
//!   (even, odd)  0/1  {b1 b2 | b3 b4}
//!   (odd, even)  1/0  {b2 b3 | b1 b4}
//!   (odd, odd)   1/1  {b1 b3 | b2 b4}
//! ```

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::farey::{farey_walk, walk_from, Slope, BASE_TRIANGLE};
use crate::fricke::t123_roots;
use crate::scalar::{Field, QuadClosed};
use crate::sl2::{realize_triple, Mat2, Rep};

use super::sigma03_check;

/// `(alpha index, r, s)`: the seed curve `alpha` and boundaries `b_r, b_s`
/// bound a pair of pants (1-based).
pub const PAIRINGS: [(usize, usize, usize); 6] = [(1, 1, 2), (1, 3, 4), (2, 2, 3), (2, 1, 4), (3, 1, 3), (3, 2, 4)];

/// Boundary pairs (0-based) split off by curves of the given slope class.
fn pairs_of(r: Slope) -> [(usize, usize); 2] {
    match (r.p().rem_euclid(2), r.q().rem_euclid(2)) {
        (0, 1) => [(0, 1), (2, 3)],
        (1, 0) => [(1, 2), (0, 3)],
        _ => [(0, 2), (1, 3)],
    }
}

#[derive(Debug, Clone)]
pub struct Tf04<F> {
    boundary: [F; 4],
    seed: [F; 3],
    memo: HashMap<Slope, F>,
}

/// Left side of the seed relation
/// `sum a^2 + prod a + sum b^2 + prod b - sum a_i b_r b_s - 4`.
pub fn tf04_residual<F: Field>(b: &[F; 4], a: &[F; 3]) -> F {
    let sq = |x: &F| x.square();
    let mut r = a.iter().map(sq).fold(a[0].zero_like(), |s, x| s + x)
        + a[0].clone() * &a[1] * &a[2]
        + b.iter().map(sq).fold(a[0].zero_like(), |s, x| s + x)
        + b[0].clone() * &b[1] * &b[2] * &b[3]
        - a[0].from_i64_like(4);
    for (i, p, q) in PAIRINGS {
        r = r - a[i - 1].clone() * &b[p - 1] * &b[q - 1];
    }
    r
}

/// Build the trace function, rejecting seeds off the relation.
pub fn tf04_extend<F: Field>(boundary: &[F; 4], triangle: &[F; 3]) -> Result<Tf04<F>> {
    let res = tf04_residual(boundary, triangle);
    if !res.is_zero() {
        return Err(Error::NoSolution(format!("seed relation residual is {res}")));
    }
    let memo = BASE_TRIANGLE.iter().copied().zip(triangle.iter().cloned()).collect();
    Ok(Tf04 { boundary: boundary.clone(), seed: triangle.clone(), memo })
}

impl<F: Field> Tf04<F> {
    pub fn boundary(&self) -> &[F; 4] {
        &self.boundary
    }

    pub fn seed(&self) -> &[F; 3] {
        &self.seed
    }

    fn step(&self, vals: &HashMap<Slope, F>, a: Slope, b: Slope, g: Slope) -> F {
        let bd = &self.boundary;
        let [(i, j), (k, l)] = pairs_of(g);
        -(vals[&a].clone() * &vals[&b]) + bd[i].clone() * &bd[j] + bd[k].clone() * &bd[l] - &vals[&g]
    }

    pub fn query(&mut self, r: Slope) -> F {
        if let Some(v) = self.memo.get(&r) {
            return v.clone();
        }
        for st in farey_walk(r) {
            if !self.memo.contains_key(&st.new) {
                let v = self.step(&self.memo, st.alpha, st.beta, st.gamma);
                self.memo.insert(st.new, v);
            }
        }
        self.memo[&r].clone()
    }

    pub fn query_via(&mut self, via: [Slope; 3], target: Slope) -> Result<F> {
        let mut vals: HashMap<Slope, F> = via.iter().map(|&s| (s, self.query(s))).collect();
        for st in walk_from(via, target)? {
            let v = self.step(&vals, st.alpha, st.beta, st.gamma);
            vals.insert(st.new, v);
        }
        Ok(vals[&target].clone())
    }

    /// Residual of the seed relation for the triangle `tri`, with its
    /// boundary pairings read off the slope classes.
    pub fn residual_at(&mut self, tri: [Slope; 3]) -> F {
        // order the triangle as (0/1-class, 1/0-class, 1/1-class)
        let mut a: Vec<(usize, F)> = tri
            .iter()
            .map(|&s| {
                let class = match pairs_of(s)[0] {
                    (0, 1) => 0,
                    (1, 2) => 1,
                    _ => 2,
                };
                (class, self.query(s))
            })
            .collect();
        a.sort_by_key(|x| x.0);
        let a = [a[0].1.clone(), a[1].1.clone(), a[2].1.clone()];
        tf04_residual(&self.boundary, &a)
    }

    /// Reducible exactly when all six pants restrictions are reducible.
    pub fn reducible(&self) -> bool {
        PAIRINGS
            .iter()
            .all(|&(i, r, s)| sigma03_check(&self.seed[i - 1], &self.boundary[r - 1], &self.boundary[s - 1]).reducible)
    }
}

impl<F: QuadClosed> Tf04<F> {
    /// Rank-3 representation: `tr x_i = b_i`, `tr x1x2x3 = b4`, and the seed on
    /// `x1x2, x2x3, x1x3`. Inverting all three matrices swaps the two roots
    /// for `tr x1x2x3`.
    pub fn realize(&self) -> Result<Rep<F>> {
        let [b1, b2, b3, b4] = &self.boundary;
        let [a1, a2, a3] = &self.seed;
        let mut m = realize_triple(b1, b2, b3, a1, a2, a3)?;
        if m[0].mul(&m[1]).mul(&m[2]).trace() != *b4 {
            m = [m[0].inverse(), m[1].inverse(), m[2].inverse()];
        }
        let rep = Rep::new(m.to_vec())?;
        debug_assert!({
            let (r1, r2) = t123_roots(b1, b2, b3, a1, a2, a3);
            *b4 == r1 || *b4 == r2
        });
        if rep.gens[0].mul(&rep.gens[1]).mul(&rep.gens[2]).trace() != *b4 {
            return Err(Error::Invalid("boundary value is not a root of the trace quadratic".into()));
        }
        Ok(rep)
    }
}

/// The seven values `(b1, b2, b3, b4; a1, a2, a3)` of a rank-3 representation.
pub fn harvest04<F: Field>(rep: &Rep<F>) -> ([F; 4], [F; 3]) {
    let g = &rep.gens;
    let prod: Mat2<F> = g[0].mul(&g[1]).mul(&g[2]);
    (
        [g[0].trace(), g[1].trace(), g[2].trace(), prod.trace()],
        [g[0].mul(&g[1]).trace(), g[1].mul(&g[2]).trace(), g[0].mul(&g[2]).trace()],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pm2Verdict {
    Extends { reducible: bool },
    Violation,
}

/// Seeds with all values `+-2`. Necessary for extension is `2 prod a = prod b`;
/// the verdict uses the full seed relation.
pub fn pm2_check<F: Field>(boundary: &[F; 4], triangle: &[F; 3]) -> Result<(Pm2Verdict, F)> {
    let like = &boundary[0];
    if like.characteristic() == 2 {
        return Err(Error::Invalid("the +-2 criterion needs characteristic other than 2".into()));
    }
    if !boundary.iter().chain(triangle.iter()).all(Field::is_pm_two) {
        return Err(Error::Invalid("all seven values must be 2 or -2".into()));
    }
    let res = tf04_residual(boundary, triangle);
    if !res.is_zero() {
        return Ok((Pm2Verdict::Violation, res));
    }
    let prod_b = boundary.iter().skip(1).fold(boundary[0].clone(), |p, x| p * x);
    Ok((Pm2Verdict::Extends { reducible: prod_b == like.from_i64_like(16) }, res))
}
