//! Normal forms of reducible pairs and the trace-2 reducibility criterion.

use super::{common_line, Line, Mat2, Rep};
use crate::error::{Error, Result};
use crate::scalar::{Field, QuadClosed};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq)]
pub struct NormalForm<F> {
    /// `P` with `a = P^-1 A P` and `b = P^-1 B P`.
    pub conj: Mat2<F>,
    pub a: Mat2<F>,
    pub b: Mat2<F>,
    pub diagonalizable: bool,
}

/// Determinant-one matrix whose first column spans `l`.
fn frame<F: Field>(l: &Line<F>) -> Mat2<F> {
    let z = l.u.zero_like();
    if l.u.is_zero() {
        let vi = l.v.try_inv().unwrap();
        Mat2::raw(z, -vi, l.v.clone(), l.u.clone())
    } else {
        Mat2::raw(l.u.clone(), z, l.v.clone(), l.u.try_inv().unwrap())
    }
}

/// Determinant-one matrix with columns along `l1` and `l2`.
fn frame2<F: Field>(l1: &Line<F>, l2: &Line<F>) -> Mat2<F> {
    let det = l1.u.clone() * &l2.v - l2.u.clone() * &l1.v;
    let s = det.try_inv().expect("lines must be distinct");
    Mat2::raw(l1.u.clone(), l2.u.clone() * &s, l1.v.clone(), l2.v.clone() * &s)
}

fn invariant_lines<F: QuadClosed>(a: &Mat2<F>, b: &Mat2<F>) -> Vec<Line<F>> {
    let Some(m) = [a, b].into_iter().find(|m| !m.is_scalar()) else {
        let like = &a.a;
        return vec![Line::horizontal(like), Line::new(like.zero_like(), like.one_like())];
    };
    m.eigenlines().into_iter().filter(|l| a.fixes(l) && b.fixes(l)).collect()
}

/// Conjugate a reducible pair to upper-triangular form. When `A` has
/// eigenvalues other than `+-1` and the pair is not simultaneously
/// diagonalizable, the result is `(diag(l, 1/l), [[m, 1], [0, 1/m]])`.
pub fn diagonalize_or_normalize<F: QuadClosed>(a: &Mat2<F>, b: &Mat2<F>) -> Result<NormalForm<F>> {
    let lines = invariant_lines(a, b);
    let Some(first) = lines.first() else {
        return Err(Error::Invalid("the pair is irreducible".into()));
    };
    let build = |p: Mat2<F>, diagonalizable| NormalForm { a: a.conj_by(&p), b: b.conj_by(&p), conj: p, diagonalizable };
    if lines.len() >= 2 {
        return Ok(build(frame2(&lines[0], &lines[1]), true));
    }
    if !a.is_scalar() {
        let own = a.eigenlines();
        if let Some(other) = own.iter().find(|l| *l != first) {
            let p = frame2(first, other);
            let tb = b.conj_by(&p);
            // rescale by diag(s, 1/s) so the corner entry of B becomes 1
            let s = tb.b.sqrt();
            let d = Mat2::diag(s)?;
            return Ok(build(p.mul(&d), false));
        }
    }
    Ok(build(frame(first), false))
}

#[derive(Debug, Clone, PartialEq)]
pub enum GmVerdict<F> {
    IdentityImage,
    Reducible(Line<F>),
    NotApplicable,
}

/// If `tr rho(w) = 2` and `tr [rho(w), rho(x_i)] = 2` for every generator,
/// then `rho(w) = id` or `rho` fixes the eigenline of `rho(w)`.
pub fn gm_reducibility_witness<F: QuadClosed>(rep: &Rep<F>, w: &Word) -> GmVerdict<F> {
    let m = rep.eval(w);
    let two = m.a.from_i64_like(2);
    if m.trace() != two || rep.gens.iter().any(|g| m.commutator(g).trace() != two) {
        return GmVerdict::NotApplicable;
    }
    if m.is_identity() {
        return GmVerdict::IdentityImage;
    }
    let l = m.eigenlines().remove(0);
    debug_assert!(common_line(&rep.gens.iter().collect::<Vec<_>>()).is_some());
    GmVerdict::Reducible(l)
}
