//! Three matrices with prescribed traces `tr A_i` and `tr A_i A_j`.

use super::Mat2;
use crate::error::{Error, Result};
use crate::scalar::QuadClosed;

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];

/// Six trace values in the order `t1, t2, t3, t12, t23, t31`.
type Six<F> = [F; 6];

fn pair_value<F: Clone>(t: &Six<F>, i: usize, j: usize) -> F {
    match (i.min(j), i.max(j)) {
        (0, 1) => t[3].clone(),
        (1, 2) => t[4].clone(),
        (0, 2) => t[5].clone(),
        _ => unreachable!(),
    }
}

/// Values seen by `B_m = A_{s[m]}`.
fn permuted<F: Clone>(t: &Six<F>, s: [usize; 3]) -> Six<F> {
    [
        t[s[0]].clone(),
        t[s[1]].clone(),
        t[s[2]].clone(),
        pair_value(t, s[0], s[1]),
        pair_value(t, s[1], s[2]),
        pair_value(t, s[2], s[0]),
    ]
}

fn unpermute<F: Clone>(b: [Mat2<F>; 3], s: [usize; 3]) -> [Mat2<F>; 3] {
    let mut out = b.clone();
    for m in 0..3 {
        out[s[m]] = b[m].clone();
    }
    out
}

pub fn traces_of<F: QuadClosed>(m: &[Mat2<F>; 3]) -> Six<F> {
    [
        m[0].trace(),
        m[1].trace(),
        m[2].trace(),
        m[0].mul(&m[1]).trace(),
        m[1].mul(&m[2]).trace(),
        m[2].mul(&m[0]).trace(),
    ]
}

/// Realize the six traces by three determinant-one matrices. The tower may grow.
pub fn realize_triple<F: QuadClosed>(t1: &F, t2: &F, t3: &F, t12: &F, t23: &F, t31: &F) -> Result<[Mat2<F>; 3]> {
    let t: Six<F> = [t1.clone(), t2.clone(), t3.clone(), t12.clone(), t23.clone(), t31.clone()];
    let out = if let Some(i) = (0..3).find(|&i| !t[i].is_pm_two()) {
        let s = PERMS.iter().find(|s| s[0] == i).unwrap();
        unpermute(case_diagonal(&permuted(&t, *s))?, *s)
    } else if let Some(k) = (3..6).find(|&k| !t[k].is_pm_two()) {
        // bring the offending pair to positions (1, 2)
        let s = match k {
            3 => [0, 1, 2],
            4 => [1, 2, 0],
            _ => [2, 0, 1],
        };
        unpermute(case_swap(&permuted(&t, s))?, s)
    } else {
        case_pm_two(&t)?
    };
    if traces_of(&out) != t {
        return Err(Error::Invalid("realized traces do not match".into()));
    }
    Ok(out)
}

/// `t1 != +-2`: diagonalize `A_1` and solve for the rest.
fn case_diagonal<F: QuadClosed>(t: &Six<F>) -> Result<[Mat2<F>; 3]> {
    let [x1, x2, x3, x12, x23, x31] = t.clone();
    let one = x1.one_like();
    let (lambda, _) = F::solve_quadratic(&-x1.clone(), &one);
    let li = lambda.try_inv()?;
    let gap = lambda.clone() - &li;
    let a = (x12 - li.clone() * &x2) / &gap;
    let d = x2 - &a;
    let x = (x31 - li * &x3) / &gap;
    let w = x3 - &x;
    let p = x23 - a.clone() * &x - d.clone() * &w;
    let bc = a.clone() * &d - &one;
    let yz = x.clone() * &w - &one;
    let zero = one.zero_like();
    let (b, c, y, z) = if !bc.is_zero() {
        // c y^2 - p y + yz = 0, z = p - c y
        let (y, _) = F::solve_quadratic(&-(p.clone() / &bc), &(yz / &bc));
        let z = p - bc.clone() * &y;
        (one.clone(), bc, y, z)
    } else if !p.is_zero() {
        let y = yz / &p;
        (one.clone(), zero.clone(), y, p)
    } else if !yz.is_zero() {
        (zero.clone(), zero.clone(), yz, one.clone())
    } else {
        (zero.clone(), zero.clone(), zero.clone(), zero.clone())
    };
    Ok([
        Mat2::diag(lambda)?,
        Mat2::new(a, b, c, d)?,
        Mat2::new(x, y, z, w)?,
    ])
}

/// All `t_i = +-2` but `t12 != +-2`: realize `B1 = A1 A2, B2 = A2^-1, B3 = A2^-1 A3`.
fn case_swap<F: QuadClosed>(t: &Six<F>) -> Result<[Mat2<F>; 3]> {
    let [x1, x2, x3, x12, x23, x31] = t.clone();
    let tb3 = x2.clone() * &x3 - &x23;
    let tb23 = x2.clone() * &tb3 - &x3;
    let [b1, b2, b3] = case_diagonal(&[x12, x2, tb3, x1, tb23, x31])?;
    let a1 = b1.mul(&b2);
    let a2 = b2.inverse();
    let a3 = a2.mul(&b3);
    Ok([a1, a2, a3])
}

/// All six values are `+-2`.
fn case_pm_two<F: QuadClosed>(t: &Six<F>) -> Result<[Mat2<F>; 3]> {
    let like = &t[0];
    let two = like.from_i64_like(2);
    // flipping A_i negates t_i and both pair values containing i
    let flip: Vec<bool> = (0..3).map(|i| t[i] != two).collect();
    let mut n = t.clone();
    for i in 0..3 {
        if flip[i] {
            n[i] = -n[i].clone();
            for j in 0..3 {
                if j != i {
                    let k = pair_slot(i, j);
                    n[k] = -n[k].clone();
                }
            }
        }
    }
    let id = Mat2::identity(like);
    let u = Mat2::from_ints(like, [1, 1, 0, 1])?;
    let l = Mat2::from_ints(like, [1, 0, -4, 1])?;
    let m = Mat2::from_ints(like, [-1, 1, -4, 3])?;
    let templates = [
        [id.clone(), id.clone(), id.clone()],
        [u.clone(), l.clone(), id],
        [u.clone(), l.clone(), l.clone()],
        [u, l, m],
    ];
    for tpl in &templates {
        for s in PERMS {
            let cand = unpermute(tpl.clone(), s);
            if traces_of(&cand) == n {
                let mut out = cand;
                for i in 0..3 {
                    if flip[i] {
                        out[i] = out[i].neg();
                    }
                }
                return Ok(out);
            }
        }
    }
    Err(Error::Invalid("no template matches the sign pattern".into()))
}

fn pair_slot(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 3,
        (1, 2) => 4,
        _ => 5,
    }
}
