//! Characters of the five-holed sphere from their fifteen subset values.
//!
//! `X = <x1, x2, x3>` and `Y = <x1, x2x3, x4>` are four-holed spheres bounded
//! by `alpha_2 ~ x1x2x3` and `alpha_5 = x2x3`; they overlap in the pair of
//! pants `<x1, x2x3>`. Eleven of the fifteen values live on `X` or `Y`; the
//! remaining `x2x4, x3x4, x1x2x4, x1x3x4` are forced once the middle pants
//! is irreducible.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::atlas::{subset_of, Auto};
use crate::error::{parse_err, Error, Result};
use crate::fricke::{subset_word, t123_sum_product};
use crate::poly::{subset_from_indices, subset_indices, Subset};
use crate::scalar::{Field, QuadClosed};
use crate::sl2::{delta_of_traces, realize_triple, Mat2, Rep};
use crate::surfchar::{tf04_extend, tf04_residual, Tf04};
use crate::word::Word;

const FULL: Subset = 0b1111;

/// Index string of a subset, `0b0101 -> "13"`.
pub fn subset_label(s: Subset) -> String {
    subset_indices(s).iter().map(|i| i.to_string()).collect()
}

fn parse_label(s: &str) -> Result<Subset> {
    let idx: Vec<usize> = s
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize).filter(|d| (1..=4).contains(d)))
        .collect::<Option<_>>()
        .ok_or_else(|| parse_err(format!("bad subset label '{s}'")))?;
    subset_from_indices(&idx)
}

/// Values on the boundary `x1, x2, x3, x4, x1x2x3x4` and the ten interior
/// subset words.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceData05<F> {
    values: BTreeMap<Subset, F>,
}

impl<F: Field> TraceData05<F> {
    pub fn new(values: BTreeMap<Subset, F>) -> Result<Self> {
        if (1..=FULL).any(|s| !values.contains_key(&s)) || values.len() != 15 {
            return Err(Error::Invalid("need exactly the fifteen subsets of {1,2,3,4}".into()));
        }
        Ok(TraceData05 { values })
    }

    pub fn from_fn(f: impl Fn(Subset) -> F) -> Self {
        TraceData05 { values: (1..=FULL).map(|s| (s, f(s))).collect() }
    }

    pub fn of_rep(rep: &Rep<F>) -> Self {
        TraceData05::from_fn(|s| rep.trace(&subset_word(s)))
    }

    pub fn get(&self, s: Subset) -> &F {
        &self.values[&s]
    }

    pub fn values(&self) -> &BTreeMap<Subset, F> {
        &self.values
    }

    /// `f(b1), ..., f(b5)`.
    pub fn boundary(&self) -> [F; 5] {
        [1, 2, 4, 8, FULL].map(|s| self.get(s).clone())
    }

    /// The data pulled back along a symmetry of the fifteen subset words.
    fn relabeled(&self, g: &Auto) -> Self {
        TraceData05::from_fn(|s| {
            let t = subset_of(&g.apply(&subset_word(s))).expect("symmetry preserves the subset words");
            self.get(t).clone()
        })
    }

    /// Seven values of `X`: boundary `(x1, x2, x3, x1x2x3)`, triangle `(x1x2, x2x3, x1x3)`.
    pub fn x_part(&self) -> ([F; 4], [F; 3]) {
        let v = |s: Subset| self.get(s).clone();
        ([v(1), v(2), v(4), v(7)], [v(3), v(6), v(5)])
    }

    /// Seven values of `Y` in the generators `(x1, x2x3, x4)`.
    pub fn y_part(&self) -> ([F; 4], [F; 3]) {
        let v = |s: Subset| self.get(s).clone();
        ([v(1), v(6), v(8), v(FULL)], [v(7), v(14), v(9)])
    }

    /// `Delta` of the middle pants `(x1, x2x3, x1x2x3)`.
    pub fn middle_delta(&self) -> F {
        delta_of_traces(self.get(1), self.get(6), self.get(7))
    }

    pub fn to_json(&self) -> Value {
        let boundary: Vec<String> = self.boundary().iter().map(|v| v.to_string()).collect();
        let mut interior = Map::new();
        for s in (1..FULL).filter(|s| s.count_ones() >= 2) {
            interior.insert(subset_label(s), json!(self.get(s).to_string()));
        }
        json!({ "boundary": boundary, "interior": interior })
    }

    /// Parse `{"boundary": [5 values], "interior": {"12": v, ..., "234": v}}`.
    pub fn from_json(v: &Value, parse: impl Fn(&Value) -> Result<F>) -> Result<Self> {
        let b = v
            .get("boundary")
            .and_then(Value::as_array)
            .filter(|b| b.len() == 5)
            .ok_or_else(|| parse_err("'boundary' must be a list of five values"))?;
        let inner = v
            .get("interior")
            .and_then(Value::as_object)
            .ok_or_else(|| parse_err("'interior' must be an object"))?;
        let mut values = BTreeMap::new();
        for (s, x) in [1, 2, 4, 8, FULL].into_iter().zip(b) {
            values.insert(s, parse(x)?);
        }
        for (k, x) in inner {
            let s = parse_label(k)?;
            if s.count_ones() < 2 || s == FULL {
                return Err(parse_err(format!("'{k}' is not an interior class")));
            }
            if values.insert(s, parse(x)?).is_some() {
                return Err(parse_err(format!("duplicate class '{k}'")));
            }
        }
        TraceData05::new(values)
    }
}

/// The symmetries of the fifteen subset words: `x_i -> x_{i+1 mod 4}` and
/// `x_i -> x_{5-i}^-1`, giving eight frames for the `X, Y` decomposition.
pub fn frame_symmetries() -> Vec<Auto> {
    let w = |l: [i32; 4]| l.iter().map(|&k| Word::new([k])).collect::<Vec<_>>();
    let rot = Auto::from_parts(w([2, 3, 4, 1]), w([4, 1, 2, 3]));
    let refl = Auto::from_parts(w([-4, -3, -2, -1]), w([-4, -3, -2, -1]));
    let mut out = Vec::new();
    for r in 0..4 {
        let g = rot.pow(r);
        out.push(g.clone());
        out.push(g.compose(&refl));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlueBranch {
    IrreducibleMiddle,
    Diagonal,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Glue<F> {
    Glued { rep: Rep<F>, branch: GlueBranch, frame: usize },
    /// Reducible on every middle pants, irreducible on some pants.
    Obstruction,
}

/// Both four-holed-sphere restrictions, or the first nonzero seed residual.
pub fn restrictions<F: Field>(d: &TraceData05<F>) -> Result<(Tf04<F>, Tf04<F>)> {
    let (xb, xa) = d.x_part();
    let (yb, ya) = d.y_part();
    let rx = tf04_residual(&xb, &xa);
    let ry = tf04_residual(&yb, &ya);
    match (tf04_extend(&xb, &xa), tf04_extend(&yb, &ya)) {
        (Ok(x), Ok(y)) => Ok((x, y)),
        _ => Err(Error::NoSolution(format!("inconsistent restrictions: residual on X is {rx}, on Y is {ry}"))),
    }
}

/// Solve `rows * v = 0`; a basis of the solution space.
fn nullspace<F: Field>(mut rows: Vec<Vec<F>>, n: usize) -> Vec<Vec<F>> {
    let like = rows[0][0].clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].try_inv().unwrap();
        rows[r] = rows[r].iter().map(|x| x.clone() * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                rows[i] = rows[i].iter().zip(&rows[r]).map(|(a, b)| a.clone() - f.clone() * b).collect();
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![like.zero_like(); n];
            v[free] = like.one_like();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][free].clone();
            }
            v
        })
        .collect()
}

/// An invertible `M` with `M B = A M` for each pair `(A, B)`.
fn intertwiner<F: Field>(pairs: &[(&Mat2<F>, &Mat2<F>)]) -> Option<Mat2<F>> {
    let mut rows = Vec::new();
    for (a, b) in pairs {
        let am = [[&a.a, &a.b], [&a.c, &a.d]];
        let bm = [[&b.a, &b.b], [&b.c, &b.d]];
        for i in 0..2 {
            for j in 0..2 {
                // coefficient of M[p][q] in (M B - A M)[i][j]
                let row = (0..4)
                    .map(|u| {
                        let (p, q) = (u / 2, u % 2);
                        let mut c = a.a.zero_like();
                        if p == i {
                            c = c + bm[q][j];
                        }
                        if q == j {
                            c = c - am[i][p];
                        }
                        c
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    nullspace(rows, 4).into_iter().map(|v| Mat2::raw(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())).find(|m| !m.det().is_zero())
}

/// `M X M^-1` for invertible `M` of any determinant.
fn conjugate<F: Field>(m: &Mat2<F>, x: &Mat2<F>) -> Mat2<F> {
    let det = m.det();
    let adj = Mat2::raw(m.d.clone(), -m.b.clone(), -m.c.clone(), m.a.clone());
    let p = m.mul(x).mul(&adj);
    Mat2::raw(p.a / &det, p.b / &det, p.c / &det, p.d / &det)
}

/// Glue in the standard frame across an irreducible middle pants.
fn glue_irreducible<F: QuadClosed>(x: &Tf04<F>, y: &Tf04<F>) -> Result<Rep<F>> {
    let rx = x.realize()?;
    let ry = y.realize()?;
    let (a1, a2, a3) = (&rx.gens[0], &rx.gens[1], &rx.gens[2]);
    let a23 = a2.mul(a3);
    let m = intertwiner(&[(a1, &ry.gens[0]), (&a23, &ry.gens[1])])
        .ok_or_else(|| Error::NoSolution("middle restrictions are not conjugate".into()))?;
    Rep::new(vec![a1.clone(), a2.clone(), a3.clone(), conjugate(&m, &ry.gens[2])])
}

/// Diagonal representation reproducing all fifteen values, if one exists.
pub fn diagonal_realization<F: QuadClosed>(d: &TraceData05<F>) -> Option<Rep<F>> {
    let like = d.get(1);
    let roots: Vec<(F, F)> = [1, 2, 4, 8].iter().map(|&s| F::solve_quadratic(&-d.get(s).clone(), &like.one_like())).collect();
    // the first sign is fixed by simultaneous inversion
    (0..8u32).find_map(|mask| {
        let gens: Vec<Mat2<F>> = roots
            .iter()
            .enumerate()
            .map(|(i, (r, s))| {
                let l = if i > 0 && mask >> (i - 1) & 1 == 1 { s } else { r };
                Mat2::diag(l.clone()).ok()
            })
            .collect::<Option<_>>()?;
        let rep = Rep::new(gens).ok()?;
        (TraceData05::of_rep(&rep) == *d).then_some(rep)
    })
}

/// Gluing over the eight frames: across the first irreducible
/// middle pants, or diagonally when every pants of `X` and `Y` is reducible.
pub fn glue_sigma05<F: QuadClosed>(d: &TraceData05<F>) -> Result<Glue<F>> {
    let syms = frame_symmetries();
    let mut all_reducible = true;
    for (i, g) in syms.iter().enumerate() {
        let dg = d.relabeled(g);
        let (x, y) = restrictions(&dg)?;
        if !dg.middle_delta().is_zero() {
            let rep = glue_irreducible(&x, &y)?;
            let back = g.inverse();
            let rep = Rep::new(back.images().iter().map(|w| rep.eval(w)).collect())?;
            return Ok(Glue::Glued { rep, branch: GlueBranch::IrreducibleMiddle, frame: i });
        }
        all_reducible &= x.reducible() && y.reducible();
    }
    if !all_reducible {
        return Ok(Glue::Obstruction);
    }
    diagonal_realization(d)
        .map(|rep| Glue::Glued { rep, branch: GlueBranch::Diagonal, frame: 0 })
        .ok_or_else(|| Error::NoSolution("reducible everywhere but no diagonal representation matches".into()))
}

/// Generators `A_i, A_j` from an irreducible pair, the other two solved
/// linearly from their traces against `I, A_i, A_j, A_i A_j`.
pub fn linear_realization<F: QuadClosed>(d: &TraceData05<F>) -> Option<Rep<F>> {
    let t = |idx: &[usize]| d.get(subset_from_indices(idx).unwrap()).clone();
    for i in 1..=4 {
        for j in i + 1..=4 {
            if delta_of_traces(&t(&[i]), &t(&[j]), &t(&[i, j])).is_zero() {
                continue;
            }
            let mut gens: Vec<Option<Mat2<F>>> = vec![None; 4];
            let k = (1..=4).find(|k| *k != i && *k != j).unwrap();
            let Ok(m) = realize_triple(&t(&[i]), &t(&[j]), &t(&[k]), &t(&[i, j]), &t(&[j, k]), &t(&[i, k])) else {
                continue;
            };
            let (ai, aj) = (&m[0], &m[1]);
            let basis = [Mat2::identity(&ai.a), ai.clone(), aj.clone(), ai.mul(aj)];
            for l in (1..=4).filter(|l| *l != i && *l != j) {
                // tr(x_l x_i x_j) is the stored value when l, i, j is a cyclic
                // rotation of increasing order, else the other root
                let (sum, _) = t123_sum_product(&t(&[l]), &t(&[i]), &t(&[j]), &t(&[i, l]), &t(&[i, j]), &t(&[j, l]));
                let lij = if l < i || l > j { t(&[i, j, l]) } else { sum - &t(&[i, j, l]) };
                let rhs = [t(&[l]), t(&[i, l]), t(&[j, l]), lij];
                gens[l - 1] = solve_by_traces(&basis, &rhs);
            }
            gens[i - 1] = Some(ai.clone());
            gens[j - 1] = Some(aj.clone());
            let Some(rep) = gens.into_iter().collect::<Option<Vec<_>>>().and_then(|g| Rep::new(g).ok()) else {
                continue;
            };
            if TraceData05::of_rep(&rep) == *d {
                return Some(rep);
            }
        }
    }
    None
}

/// The matrix `Z` with `tr(Z B_k) = rhs_k` for a basis `B` of all 2x2 matrices.
fn solve_by_traces<F: Field>(basis: &[Mat2<F>; 4], rhs: &[F; 4]) -> Option<Mat2<F>> {
    // tr(Z B) = z_a B_a + z_b B_c + z_c B_b + z_d B_d
    let rows: Vec<Vec<F>> = basis
        .iter()
        .zip(rhs)
        .map(|(b, r)| vec![b.a.clone(), b.c.clone(), b.b.clone(), b.d.clone(), -r.clone()])
        .collect();
    let ns = nullspace(rows, 5);
    let v = ns.into_iter().find(|v| !v[4].is_zero())?;
    let s = v[4].try_inv().ok()?;
    Some(Mat2::raw(v[0].clone() * &s, v[1].clone() * &s, v[2].clone() * &s, v[3].clone() * &s))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict05<F> {
    Character(Rep<F>),
    Exceptional,
    Invalid(String),
}

/// All values `+-2`, boundary product 32, and `f(alpha) = -f(b_i) f(b_j) / 2`
/// whenever `alpha, b_i, b_j` bound a pair of pants.
pub fn is_exceptional_data<F: Field>(d: &TraceData05<F>) -> bool {
    let like = d.get(1);
    if like.characteristic() == 2 || !d.values.values().all(Field::is_pm_two) {
        return false;
    }
    let b = d.boundary();
    if b.iter().skip(1).fold(b[0].clone(), |p, x| p * x) != like.from_i64_like(32) {
        return false;
    }
    let half = like.from_i64_like(2).try_inv().unwrap();
    // a pair of boundary indices (0-based, b5 = 4) cut off by each interior word
    (1..FULL).filter(|s| s.count_ones() >= 2).all(|s| {
        let idx = subset_indices(s);
        let (i, j) = match idx.len() {
            2 => (idx[0] - 1, idx[1] - 1),
            _ => ((1..=4).find(|k| !idx.contains(k)).unwrap() - 1, 4),
        };
        *d.get(s) == -(b[i].clone() * &b[j]) * &half
    })
}

/// Decide whether fifteen values are a character, one of the exceptional
/// trace functions, or neither.
pub fn check_trace_function_05<F: QuadClosed>(d: &TraceData05<F>) -> Verdict05<F> {
    for g in frame_symmetries() {
        if let Err(e) = restrictions(&d.relabeled(&g)) {
            return Verdict05::Invalid(e.to_string());
        }
    }
    let compare = |rep: Rep<F>| {
        let got = TraceData05::of_rep(&rep);
        match (1..=FULL).find(|s| got.get(*s) != d.get(*s)) {
            None => Verdict05::Character(rep),
            Some(s) => Verdict05::Invalid(format!(
                "x{} is forced to {} but given as {}",
                subset_label(s),
                got.get(s),
                d.get(s)
            )),
        }
    };
    match glue_sigma05(d) {
        Ok(Glue::Glued { rep, branch: GlueBranch::IrreducibleMiddle, .. }) => return compare(rep),
        Ok(Glue::Glued { rep, .. }) => return Verdict05::Character(rep),
        Ok(Glue::Obstruction) if is_exceptional_data(d) => return Verdict05::Exceptional,
        Ok(Glue::Obstruction) | Err(_) => {}
    }
    if let Some(rep) = diagonal_realization(d).or_else(|| linear_realization(d)) {
        return Verdict05::Character(rep);
    }
    Verdict05::Invalid("no representation reproduces the fifteen values".into())
}
