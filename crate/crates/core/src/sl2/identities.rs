//! The four basic trace identities, evaluated on concrete matrices.

use super::{delta, Mat2};
use crate::fricke::t123_sum_product;
use crate::scalar::Field;

pub const IDENTITY_NAMES: [&str; 4] = ["a", "b", "c", "d"];

/// Whether each identity holds on `(A1, A2, A3)`:
///
/// ```text
/// (a) tr(AB) + tr(A^-1 B) = tr A tr B
/// (b) tr^2 A + tr^2 B + tr^2 AB - tr A tr B tr AB - 4 = tr[A, B] - 2
/// (c) tr(A1A2A3), tr(A1^-1 A2^-1 A3^-1) are the roots of x^2 - P x + Q
/// (d) tr(A1A3) + tr(A1A2A3A2^-1) = -tr(A1A2) tr(A2A3) + tr A1 tr A3 + tr A2 tr(A1A2A3)
/// ```
pub fn trace_identities<F: Field>(m: &[Mat2<F>; 3]) -> [bool; 4] {
    let [a1, a2, a3] = m;
    let tr = |x: &Mat2<F>| x.trace();
    let two = a1.a.from_i64_like(2);
    let a = tr(&a1.mul(a2)) + tr(&a1.inverse().mul(a2)) == tr(a1) * tr(a2);
    let b = delta(a1, a2) == tr(&a1.commutator(a2)) - two;
    let p123 = tr(&a1.mul(a2).mul(a3));
    let q123 = tr(&a1.inverse().mul(&a2.inverse()).mul(&a3.inverse()));
    let (p, q) = t123_sum_product(&tr(a1), &tr(a2), &tr(a3), &tr(&a1.mul(a2)), &tr(&a2.mul(a3)), &tr(&a3.mul(a1)));
    let c = p123.clone() + &q123 == p && p123.clone() * &q123 == q;
    let d = tr(&a1.mul(a3)) + tr(&a1.mul(a2).mul(a3).mul(&a2.inverse()))
        == -(tr(&a1.mul(a2)) * tr(&a2.mul(a3))) + tr(a1) * tr(a3) + tr(a2) * p123;
    [a, b, c, d]
}
