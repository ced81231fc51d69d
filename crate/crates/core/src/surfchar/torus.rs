//! Trace functions on the one-holed torus, indexed by slopes.

use std::collections::HashMap;

use crate::error::Result;
use crate::farey::{walk_from, Slope, BASE_TRIANGLE};
use crate::scalar::{Field, QuadClosed};
use crate::sl2::{realize_triple, Rep};

#[derive(Debug, Clone)]
pub struct Tf11<F> {
    seed: [F; 3],
    boundary: F,
    memo: HashMap<Slope, F>,
}

/// Extend values on `0/1, 1/0, 1/1` by `f(g) + f(g') = f(a) f(b)`.
pub fn tf11_extend<F: Field>(v1: &F, v2: &F, v3: &F) -> Tf11<F> {
    let seed = [v1.clone(), v2.clone(), v3.clone()];
    let boundary = v1.square() + v2.square() + v3.square() - v1.clone() * v2 * v3 - v1.from_i64_like(2);
    let memo = BASE_TRIANGLE.iter().copied().zip(seed.iter().cloned()).collect();
    Tf11 { seed, boundary, memo }
}

impl<F: Field> Tf11<F> {
    pub fn seed(&self) -> &[F; 3] {
        &self.seed
    }

    /// Value on the boundary curve.
    pub fn boundary(&self) -> &F {
        &self.boundary
    }

    pub fn query(&mut self, r: Slope) -> F {
        if let Some(v) = self.memo.get(&r) {
            return v.clone();
        }
        // walk from the deepest memoized triangle on the canonical route
        for st in crate::farey::farey_walk(r) {
            if self.memo.contains_key(&st.new) {
                continue;
            }
            let v = self.memo[&st.alpha].clone() * &self.memo[&st.beta] - &self.memo[&st.gamma];
            self.memo.insert(st.new, v);
        }
        self.memo[&r].clone()
    }

    /// Value at `target` reached from the triangle `via` without the memo.
    pub fn query_via(&mut self, via: [Slope; 3], target: Slope) -> Result<F> {
        let mut vals: HashMap<Slope, F> = via.iter().map(|&s| (s, self.query(s))).collect();
        for st in walk_from(via, target)? {
            let v = vals[&st.alpha].clone() * &vals[&st.beta] - &vals[&st.gamma];
            vals.insert(st.new, v);
        }
        Ok(vals[&target].clone())
    }

    /// The relation `sum f^2 - prod f - 2 = f(b)` on a triangle.
    pub fn boundary_from(&mut self, tri: [Slope; 3]) -> F {
        let [a, b, c] = tri.map(|s| self.query(s));
        a.square() + b.square() + c.square() - a.clone() * &b * &c - a.from_i64_like(2)
    }
}

impl<F: QuadClosed> Tf11<F> {
    /// Rank-2 representation with `tr x1, tr x2, tr x1x2` equal to the seed.
    pub fn realize(&self) -> Result<Rep<F>> {
        let [v1, v2, v3] = &self.seed;
        let two = v1.from_i64_like(2);
        let [a, b, _] = realize_triple(v1, v2, &two, v3, v2, v1)?;
        Rep::new(vec![a, b])
    }
}
