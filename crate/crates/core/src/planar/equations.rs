//! Linear equations for the values of curves meeting both `alpha_2` and
//! `alpha_5`, one four-holed-sphere relation at a time.
//!
//! A chart `(psi, k)` names the pair `(alpha, beta) = psi(c_k, c_{k+1})`,
//! which fills the four-holed sphere with boundary
//! `psi(x_k), psi(x_{k+1}), psi(x_{k+2}), psi(c_{k+3})`, and gives
//!
//! ```text
//! f(alpha beta) + f(beta alpha) = -f(alpha) f(beta)
//!     + f(psi x_k) f(psi x_{k+2}) + f(psi x_{k+1}) f(psi c_{k+3})
//! ```

use std::collections::BTreeMap;

use super::atlas::{pentagon, x, Auto, Curve};
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::word::Word;

/// Names of the unknowns, in the order used by [`Frame::unknowns`].
pub const UNKNOWNS: [&str; 9] = ["x1", "x12", "x21", "x15", "x51", "x34", "x43", "x342", "x125"];

#[derive(Debug, Clone)]
pub struct Chart {
    pub psi: Auto,
    pub k: usize,
}

impl Chart {
    fn new(psi: Auto, k: usize) -> Chart {
        Chart { psi, k }
    }

    pub fn pair(&self) -> (Curve, Curve) {
        let at = |k| Curve::basic(k).moved(&self.psi);
        (at(self.k), at(self.k + 1))
    }

    /// The relation as signed products of curve words summing to zero.
    pub fn terms(&self) -> Vec<(i64, Vec<Word>)> {
        let (a, b) = self.pair();
        let bd = |j: usize| self.psi.apply(&x(self.k + j));
        let far = Curve::basic(self.k + 3).moved(&self.psi).word();
        vec![
            (1, vec![a.times(&b).word()]),
            (1, vec![b.times(&a).word()]),
            (1, vec![a.word(), b.word()]),
            (-1, vec![bd(0), bd(2)]),
            (-1, vec![bd(1), far]),
        ]
    }
}

/// `sum coeffs[u] * x_u = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm<F> {
    pub coeffs: BTreeMap<usize, F>,
    pub rhs: F,
}

impl<F: Field> LinearForm<F> {
    pub fn sub(&self, o: &LinearForm<F>) -> LinearForm<F> {
        let mut coeffs = self.coeffs.clone();
        for (u, c) in &o.coeffs {
            let v = coeffs.remove(u).unwrap_or_else(|| c.zero_like()) - c;
            if !v.is_zero() {
                coeffs.insert(*u, v);
            }
        }
        LinearForm { coeffs, rhs: self.rhs.clone() - &o.rhs }
    }

    pub fn coeff(&self, u: usize) -> F {
        self.coeffs.get(&u).cloned().unwrap_or_else(|| self.rhs.zero_like())
    }
}

/// The pentagon `auto(alpha_1, ..., alpha_5)` with its unknown curves and charts.
#[derive(Debug, Clone)]
pub struct Frame {
    pub auto: Auto,
}

/// The orientation-preserving involution fixing `b_1`, swapping `b_2, b_5` and
/// `b_3, b_4`; it sends `alpha_{1+i}` to `alpha_{1-i}`.
pub fn involution() -> Auto {
    let w = |l: &[i32]| Word::new(l.iter().copied());
    let x45 = x(4).concat(&x(5));
    let fwd = vec![w(&[1]), w(&[-1, -4, -3, -2]), w(&[2, 3, 4, -3, -2]), w(&[2, 3, -2])];
    let inv = vec![
        w(&[1]),
        x(5),
        x(5).inverse().concat(&x(4)).concat(&x(5)),
        x45.inverse().concat(&x(3)).concat(&x45),
    ];
    Auto::from_parts(fwd, inv)
}

impl Frame {
    pub fn standard() -> Frame {
        Frame { auto: Auto::identity() }
    }

    /// `tau_{alpha_2}^-1` applied to the standard pentagon:
    /// `(alpha_1 alpha_2, alpha_2, alpha_3 alpha_2, alpha_4, alpha_5)`.
    pub fn shifted() -> Frame {
        Frame { auto: Auto::half_twist(4).inverse() }
    }

    /// The mirror `(alpha_1, alpha_5, alpha_4, alpha_3, alpha_2)`.
    pub fn mirror() -> Frame {
        Frame { auto: involution() }
    }

    /// The mirror twisted back along its second curve `alpha_5`.
    pub fn mirror_shifted() -> Frame {
        Frame { auto: Auto::half_twist(2).inverse().compose(&involution()) }
    }

    pub fn alphas(&self) -> [Curve; 5] {
        pentagon().map(|c| c.moved(&self.auto))
    }

    /// `beta_i = x_i`, transported.
    pub fn boundary(&self, i: usize) -> Word {
        self.auto.apply(&x(i))
    }

    /// Curves for [`UNKNOWNS`].
    pub fn unknowns(&self) -> [Curve; 9] {
        let [a1, a2, a3, a4, a5] = self.alphas();
        let a12 = a1.times(&a2);
        let a34 = a3.times(&a4);
        [
            a1.clone(),
            a12.clone(),
            a2.times(&a1),
            a1.times(&a5),
            a5.times(&a1),
            a34.clone(),
            a4.times(&a3),
            a34.times(&a2),
            a12.times(&a5),
        ]
    }

    /// Charts keyed by the pair `(alpha, beta)` they fill, written with
    /// `a34` for `alpha_3 alpha_4` and so on.
    pub fn charts(&self) -> BTreeMap<&'static str, Chart> {
        let s = |k: usize| self.auto.compose(&Auto::half_twist(k).inverse());
        let id = || self.auto.clone();
        BTreeMap::from([
            ("a3.a4", Chart::new(id(), 5)),
            ("a1.a2", Chart::new(id(), 3)),
            ("a5.a1", Chart::new(id(), 2)),
            ("a2.a34", Chart::new(s(1), 4)),
            ("a32.a4", Chart::new(s(4), 5)),
            ("a5.a12", Chart::new(s(4), 2)),
            ("a15.a2", Chart::new(s(2), 3)),
            ("a43.a5", Chart::new(s(5), 1)),
            ("a3.a45", Chart::new(s(2), 5)),
        ])
    }

    /// Linearize one chart relation: products with one unknown factor become
    /// coefficients, products of known values go to the right side.
    pub fn linearize<F: Field>(&self, chart: &Chart, h: &impl Fn(&Word) -> F, like: &F) -> Result<LinearForm<F>> {
        let keys: Vec<Word> = self.unknowns().iter().map(Curve::key).collect();
        let mut coeffs: BTreeMap<usize, F> = BTreeMap::new();
        let mut rhs = like.zero_like();
        for (sign, factors) in chart.terms() {
            let mut unknown = None;
            let mut known = like.from_i64_like(sign);
            for w in &factors {
                match keys.iter().position(|k| *k == w.class_key()) {
                    Some(u) if unknown.is_none() => unknown = Some(u),
                    Some(_) => return Err(Error::Invalid("a relation term is a product of two unknowns".into())),
                    None => known = known * h(w),
                }
            }
            match unknown {
                Some(u) => {
                    let c = coeffs.remove(&u).unwrap_or_else(|| like.zero_like()) + known;
                    if !c.is_zero() {
                        coeffs.insert(u, c);
                    }
                }
                None => rhs = rhs - known,
            }
        }
        Ok(LinearForm { coeffs, rhs })
    }

    /// The three pentagon pairs, then three differences of charts whose
    /// products share an unknown, as linear forms in the unknowns.
    pub fn system<F: Field>(&self, h: &impl Fn(&Word) -> F, like: &F) -> Result<[LinearForm<F>; 6]> {
        let ch = self.charts();
        let lin = |n: &str| self.linearize(&ch[n], h, like);
        Ok([
            lin("a3.a4")?,
            lin("a1.a2")?,
            lin("a5.a1")?,
            lin("a2.a34")?.sub(&lin("a32.a4")?),
            lin("a43.a5")?.sub(&lin("a3.a45")?),
            lin("a5.a12")?.sub(&lin("a15.a2")?),
        ])
    }

    /// `(a_2, a_5, b_1)` for this frame.
    pub fn middle<F: Field>(&self, h: &impl Fn(&Word) -> F) -> [F; 3] {
        let a = self.alphas();
        [h(&a[1].word()), h(&a[4].word()), h(&self.boundary(1))]
    }

    /// Right-hand sides of [`Frame::system`].
    pub fn rhs<F: Field>(&self, h: &impl Fn(&Word) -> F, like: &F) -> Result<[F; 6]> {
        Ok(self.system(h, like)?.map(|l| l.rhs))
    }
}
