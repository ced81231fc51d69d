//! Curves on the five-holed sphere.
//!
//! `pi_1 = F_4 = <x1, x2, x3, x4>` with `x5 = (x1 x2 x3 x4)^-1`, so that
//! `x1 x2 x3 x4 x5 = 1` and `x_k` loops once around the boundary `b_k`.
//! Every non-peripheral curve is the image of some `c_k = x_k x_{k+1}`
//! under an automorphism; the half twist exchanging `b_k` and `b_{k+1}` is
//! `sigma_k`, and conjugating it by the automorphism gives the half twist
//! about the image curve. The resolution product of two curves meeting
//! twice is `alpha beta = tau_alpha(beta)`.

use crate::fricke::subset_word;
use crate::poly::Subset;
use crate::scalar::Field;
use crate::sl2::Rep;
use crate::word::Word;

/// Index into `1..=5`, cyclically.
fn wrap(k: usize) -> usize {
    (k + 4) % 5 + 1
}

/// The loop around `b_k`, `k` read mod 5.
pub fn x(k: usize) -> Word {
    match wrap(k) {
        5 => Word::new([-4, -3, -2, -1]),
        k => Word::gen(k),
    }
}

/// `c_k = x_k x_{k+1}`, cutting off `b_k` and `b_{k+1}`.
pub fn c(k: usize) -> Word {
    x(k).concat(&x(k + 1))
}

/// An automorphism of `F_4`, stored with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Auto {
    fwd: Vec<Word>,
    inv: Vec<Word>,
}

impl Auto {
    pub fn identity() -> Auto {
        let g: Vec<Word> = (1..=4).map(Word::gen).collect();
        Auto { fwd: g.clone(), inv: g }
    }

    /// `x_k -> x_{k+1}` for all five loops.
    pub fn rotation() -> Auto {
        Auto { fwd: (2..=5).map(x).collect(), inv: (0..=3).map(x).collect() }
    }

    /// `sigma_k`: `x_k -> x_k x_{k+1} x_k^-1`, `x_{k+1} -> x_k`.
    pub fn half_twist(k: usize) -> Auto {
        let s1 = Auto {
            fwd: vec![Word::new([1, 2, -1]), Word::gen(1), Word::gen(3), Word::gen(4)],
            inv: vec![Word::gen(2), Word::new([-2, 1, 2]), Word::gen(3), Word::gen(4)],
        };
        let r = Auto::rotation().pow(wrap(k) as i32 - 1);
        r.compose(&s1).compose(&r.inverse())
    }

    /// Images of `x1..x4` under the map and under its inverse.
    pub fn from_parts(fwd: Vec<Word>, inv: Vec<Word>) -> Auto {
        let a = Auto { fwd, inv };
        debug_assert!((1..=4).all(|k| a.apply(&a.inv[k - 1]) == Word::gen(k)), "not mutually inverse");
        a
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.fwd)
    }

    /// `self` after `o`.
    pub fn compose(&self, o: &Auto) -> Auto {
        Auto {
            fwd: o.fwd.iter().map(|w| self.apply(w)).collect(),
            inv: self.inv.iter().map(|w| w.substitute(&o.inv)).collect(),
        }
    }

    pub fn inverse(&self) -> Auto {
        Auto { fwd: self.inv.clone(), inv: self.fwd.clone() }
    }

    pub fn pow(&self, n: i32) -> Auto {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Auto::identity(), |acc, _| acc.compose(&base))
    }

    pub fn images(&self) -> &[Word] {
        &self.fwd
    }
}

/// The curve `frame(c_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub frame: Auto,
    pub k: usize,
}

impl Curve {
    pub fn basic(k: usize) -> Curve {
        Curve { frame: Auto::identity(), k: wrap(k) }
    }

    pub fn word(&self) -> Word {
        self.frame.apply(&c(self.k))
    }

    pub fn key(&self) -> Word {
        self.word().class_key()
    }

    /// Positive half twist about this curve.
    pub fn twist(&self) -> Auto {
        self.frame.compose(&Auto::half_twist(self.k)).compose(&self.frame.inverse())
    }

    /// Resolution product `self * o`, the image of `o` under the twist about `self`.
    pub fn times(&self, o: &Curve) -> Curve {
        Curve { frame: self.twist().compose(&o.frame), k: o.k }
    }

    pub fn moved(&self, a: &Auto) -> Curve {
        Curve { frame: a.compose(&self.frame), k: self.k }
    }

    pub fn same_class(&self, o: &Curve) -> bool {
        self.key() == o.key()
    }

    /// Disjoint (or equal) curves: the twist about one fixes the other.
    pub fn disjoint_from(&self, o: &Curve) -> bool {
        self.times(o).same_class(o)
    }
}

/// The fixed pentagon `alpha_i = c_{i+2}`: `alpha_1 = x3x4`, `alpha_2 ~ x1x2x3`,
/// `alpha_3 ~ x2x3x4`, `alpha_4 = x1x2`, `alpha_5 = x2x3`. The boundary
/// `b_i = x_i` cobounds a pair of pants with `alpha_{i-1}` and `alpha_{i+1}`.
pub fn pentagon() -> [Curve; 5] {
    std::array::from_fn(|i| Curve::basic(i + 3))
}

/// The member of the fifteen subset words `x_S` conjugate to `w` or its inverse.
pub fn subset_of(w: &Word) -> Option<Subset> {
    let key = w.class_key();
    (1..16u32).find(|&s| subset_word(s).class_key() == key)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationCheck<F> {
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
    pub lhs_trace: F,
    pub rhs_trace: F,
}

impl<F: PartialEq> RelationCheck<F> {
    pub fn holds(&self) -> bool {
        self.lhs_trace == self.rhs_trace
    }
}

/// Word-level pentagon relations for the curves `a[0..5]`, as `(name, lhs, rhs)`.
pub fn pentagon_relations(a: &[Curve; 5]) -> Vec<(String, Curve, Curve)> {
    let at = |i: usize| &a[(i + 5) % 5];
    let adjacent = |i: usize, j: usize| (i + 1) % 5 == j || (j + 1) % 5 == i;
    let mut out = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                if i == j || j == k || i == k {
                    continue;
                }
                let (n1, n2, n3) = (i + 1, j + 1, k + 1);
                if !adjacent(i, k) {
                    out.push((format!("(a) ({n1} {n2}) {n3}"), at(i).times(at(j)).times(at(k)), at(i).times(&at(j).times(at(k)))));
                }
                if !adjacent(i, j) {
                    out.push((format!("(d) {n1} {n2} {n3}"), at(i).times(&at(j).times(at(k))), at(j).times(&at(i).times(at(k)))));
                }
                // the reversed form needs both products with alpha_k to be defined
                if !adjacent(i, j) && adjacent(i, k) && adjacent(j, k) {
                    out.push((format!("(d) {n3} {n2} {n1}"), at(k).times(at(j)).times(at(i)), at(k).times(at(i)).times(at(j))));
                }
            }
        }
        let n = i + 1;
        out.push((
            format!("(b) {n}"),
            at(i).times(&at(i + 1).times(at(i + 2))),
            at(i + 3).times(at(i + 4)),
        ));
        // (c) as twist invariance: the two products with a fixed neighbour pair are disjoint
        let (l, r) = (at(i + 4), at(i + 1));
        let (p, q) = (at(i).times(l), at(i).times(r));
        out.push((format!("(c) {n}"), p.times(&q), q));
        let (p, q) = (l.times(at(i)), r.times(at(i)));
        out.push((format!("(c') {n}"), p.times(&q), q));
        for j in [i + 1, i + 4] {
            out.push((format!("(e) {n} {}", j % 5 + 1), at(i).times(&at(j).times(at(i))), at(j).clone()));
        }
    }
    out
}

/// Evaluate every pentagon relation of the fixed atlas on `rep` (rank 4).
pub fn pentagon_relations_check<F: Field>(rep: &Rep<F>) -> Vec<RelationCheck<F>> {
    check_relations(&pentagon(), rep)
}

/// Same as [`pentagon_relations_check`] on an arbitrary candidate pentagon.
pub fn check_relations<F: Field>(a: &[Curve; 5], rep: &Rep<F>) -> Vec<RelationCheck<F>> {
    pentagon_relations(a)
        .into_iter()
        .map(|(name, l, r)| {
            let (lhs, rhs) = (l.word(), r.word());
            RelationCheck { lhs_trace: rep.trace(&lhs), rhs_trace: rep.trace(&rhs), name, lhs, rhs }
        })
        .collect()
}
