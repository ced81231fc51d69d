//! Characters and trace functions on the pair of pants, the one-holed torus
//! and the four-holed sphere.

mod sphere4;
mod torus;

pub use sphere4::{harvest04, pm2_check, tf04_extend, tf04_residual, Pm2Verdict, Tf04, PAIRINGS};
pub use torus::{tf11_extend, Tf11};

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::sl2::delta_of_traces;

/// `a b / 2`, read as `b` in characteristic 2 (where the caller has `a^2 = 4`, so `a = 0`).
pub fn half_product<F: Field>(a: &F, b: &F) -> Result<F> {
    if a.characteristic() == 2 {
        if !a.is_zero() {
            return Err(Error::Invalid(format!("ab/2 in characteristic 2 needs a^2 = 4, got a = {a}")));
        }
        return Ok(b.clone());
    }
    Ok(a.clone() * b / a.from_i64_like(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sigma03 {
    pub is_character: bool,
    pub reducible: bool,
}

/// Every function on the three boundary classes is a character; it is
/// reducible exactly when `v1^2 + v2^2 + v3^2 - v1 v2 v3 = 4`.
pub fn sigma03_check<F: Field>(v1: &F, v2: &F, v3: &F) -> Sigma03 {
    Sigma03 { is_character: true, reducible: delta_of_traces(v1, v2, v3).is_zero() }
}

/// Reducibility when `v1^2 = 4`: `v3 = v1 v2 / 2`, which is `v3 = v2` in characteristic 2.
pub fn sigma03_special<F: Field>(v1: &F, v2: &F, v3: &F) -> Result<bool> {
    if v1.square() != v1.from_i64_like(4) {
        return Err(Error::Invalid(format!("needs v1^2 = 4, got v1 = {v1}")));
    }
    Ok(*v3 == half_product(v1, v2)?)
}

#[cfg(test)]
mod tests;
