//! Slopes on the extended rationals, Farey triangles and walks, and
//! Christoffel words for simple closed curves on the punctured torus.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{parse_err, Error, Result};
use crate::word::Word;

/// `p/q` in lowest terms with `q > 0`, or `1/0` for infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { p: 0, q: 1 };
    pub const INF: Slope = Slope { p: 1, q: 0 };
    pub const ONE: Slope = Slope { p: 1, q: 1 };

    pub fn new(p: i64, q: i64) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::Invalid("0/0 is not a slope".into()));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn is_inf(self) -> bool {
        self.q == 0
    }

    fn det(self, o: Slope) -> i64 {
        self.p * o.q - o.p * self.q
    }

    pub fn is_neighbor(self, o: Slope) -> bool {
        self.det(o).abs() == 1
    }

    /// Order on the extended line with infinity as the maximum.
    pub fn cmp_line(self, o: Slope) -> Ordering {
        match (self.is_inf(), o.is_inf()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (self.p * o.q).cmp(&(o.p * self.q)),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let p = p.trim().parse().map_err(|_| parse_err(format!("bad slope '{s}'")))?;
        let q = q.trim().parse().map_err(|_| parse_err(format!("bad slope '{s}'")))?;
        Slope::new(p, q).map_err(|_| parse_err(format!("bad slope '{s}'")))
    }
}

/// The two slopes completing the edge `(r, s)` to a triangle: mediant, then difference.
pub fn complete_triangle(r: Slope, s: Slope) -> Result<(Slope, Slope)> {
    if !r.is_neighbor(s) {
        return Err(Error::Invalid(format!("{r} and {s} are not Farey neighbors")));
    }
    Ok((Slope::new(r.p + s.p, r.q + s.q)?, Slope::new(r.p - s.p, r.q - s.q)?))
}

/// Quadrilateral `(alpha, beta, gamma; new)`: `(alpha, beta, gamma)` is the
/// triangle already reached and `(alpha, beta, new)` the next one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FareyStep {
    pub alpha: Slope,
    pub beta: Slope,
    pub gamma: Slope,
    pub new: Slope,
}

pub const BASE_TRIANGLE: [Slope; 3] = [Slope::ZERO, Slope::INF, Slope::ONE];

/// Strictly between `a` and `b` in the linear order.
fn inside(x: Slope, a: Slope, b: Slope) -> bool {
    let (lo, hi) = if a.cmp_line(b) == Ordering::Less { (a, b) } else { (b, a) };
    lo.cmp_line(x) == Ordering::Less && x.cmp_line(hi) == Ordering::Less
}

/// Geodesic in the dual tree from the triangle `start` to a triangle containing `target`.
pub fn walk_from(start: [Slope; 3], target: Slope) -> Result<Vec<FareyStep>> {
    let [a, b, c] = start;
    if !(a.is_neighbor(b) && b.is_neighbor(c) && c.is_neighbor(a)) {
        return Err(Error::Invalid("start is not a Farey triangle".into()));
    }
    let mut tri = start;
    let mut steps = Vec::new();
    while !tri.contains(&target) {
        let (alpha, beta, gamma) = (0..3)
            .map(|k| (tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]))
            .find(|&(x, y, z)| inside(target, x, y) != inside(z, x, y))
            .expect("target lies beyond some edge");
        let (alpha, beta) = if alpha.cmp_line(beta) == Ordering::Less { (alpha, beta) } else { (beta, alpha) };
        let (m, d) = complete_triangle(alpha, beta)?;
        let new = if m == gamma { d } else { m };
        steps.push(FareyStep { alpha, beta, gamma, new });
        tri = [alpha, beta, new];
    }
    Ok(steps)
}

pub fn farey_walk(target: Slope) -> Vec<FareyStep> {
    walk_from(BASE_TRIANGLE, target).expect("base triangle is a triangle")
}

/// Positive word of the slope `p/q` with `w(0/1) = x1`, `w(1/0) = x2` and
/// `w(mediant) = w(left) w(right)`; negative slopes substitute `x1 -> x1^-1`.
pub fn slope_word_torus(r: Slope) -> Word {
    if r.p < 0 {
        let w = slope_word_torus(Slope { p: -r.p, q: r.q });
        return w.substitute(&[Word::new([-1]), Word::gen(2)]);
    }
    let (mut lo, mut hi) = (Slope::ZERO, Slope::INF);
    let (mut wl, mut wh) = (Word::gen(1), Word::gen(2));
    loop {
        if r == lo {
            return wl;
        }
        if r == hi {
            return wh;
        }
        let m = Slope { p: lo.p + hi.p, q: lo.q + hi.q };
        let wm = wl.concat(&wh);
        match r.cmp_line(m) {
            Ordering::Equal => return wm,
            Ordering::Less => {
                hi = m;
                wh = wm;
            }
            Ordering::Greater => {
                lo = m;
                wl = wm;
            }
        }
    }
}

/// Fractional linear action of an integer matrix with determinant `+-1`.
pub fn psl2z_act(m: [i64; 4], r: Slope) -> Result<Slope> {
    let [a, b, c, d] = m;
    if (a * d - b * c).abs() != 1 {
        return Err(Error::Invalid("matrix must have determinant +-1".into()));
    }
    Slope::new(a * r.p + b * r.q, c * r.p + d * r.q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    #[test]
    fn neighbors() {
        assert!(s("0/1").is_neighbor(s("1/0")));
        assert!(s("1/2").is_neighbor(s("2/5")));
        assert!(!s("1/2").is_neighbor(s("1/4")));
    }

    #[test]
    fn triangles() {
        assert_eq!(complete_triangle(s("0/1"), s("1/0")).unwrap(), (s("1/1"), s("-1/1")));
        assert_eq!(complete_triangle(s("1/2"), s("1/3")).unwrap(), (s("2/5"), s("0/1")));
        assert_eq!(complete_triangle(s("1/1"), s("1/0")).unwrap(), (s("2/1"), s("0/1")));
        assert!(complete_triangle(s("1/2"), s("1/4")).is_err());
    }

    #[test]
    fn walks() {
        assert!(farey_walk(s("1/1")).is_empty());
        assert_eq!(
            farey_walk(s("2/1")),
            vec![FareyStep { alpha: s("1/1"), beta: s("1/0"), gamma: s("0/1"), new: s("2/1") }]
        );
        let w = farey_walk(s("3/5"));
        assert_eq!(w.len(), 3);
        assert_eq!(w.last().unwrap().new, s("3/5"));
        assert_eq!(w.iter().map(|st| st.new).collect::<Vec<_>>(), vec![s("1/2"), s("2/3"), s("3/5")]);
    }

    #[test]
    fn walks_are_chained_quadrilaterals() {
        for p in -12..=12 {
            for q in 0..=12 {
                let Ok(target) = Slope::new(p, q) else { continue };
                let mut tri = BASE_TRIANGLE.to_vec();
                for st in farey_walk(target) {
                    for x in [st.alpha, st.beta, st.gamma] {
                        assert!(tri.contains(&x));
                    }
                    assert!(st.alpha.is_neighbor(st.beta) && st.alpha.is_neighbor(st.new) && st.beta.is_neighbor(st.new));
                    assert_ne!(st.new, st.gamma);
                    tri = vec![st.alpha, st.beta, st.new];
                }
                assert!(tri.contains(&target));
            }
        }
    }

    #[test]
    fn christoffel_words() {
        assert_eq!(slope_word_torus(s("0/1")).to_string(), "x1");
        assert_eq!(slope_word_torus(s("1/0")).to_string(), "x2");
        assert_eq!(slope_word_torus(s("1/1")).to_string(), "x1 x2");
        assert_eq!(slope_word_torus(s("1/2")).to_string(), "x1 x1 x2");
        assert_eq!(slope_word_torus(s("-1/1")).to_string(), "x1^-1 x2");
        let w = slope_word_torus(s("5/7"));
        assert_eq!(w.len(), 12);
        assert_eq!(w.letters().iter().filter(|&&l| l == 2).count(), 5);
    }

    #[test]
    fn action() {
        assert_eq!(psl2z_act([1, 0, 0, 1], s("3/7")).unwrap(), s("3/7"));
        assert_eq!(psl2z_act([1, 1, 0, 1], s("0/1")).unwrap(), s("1/1"));
        assert_eq!(psl2z_act([0, -1, 1, 0], s("3/7")).unwrap(), s("-7/3"));
        assert!(psl2z_act([2, 0, 0, 1], s("1/1")).is_err());
    }
}
