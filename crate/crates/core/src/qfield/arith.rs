//! Coordinate-vector arithmetic. Vectors have power-of-two length; entry `i`
//! is the coefficient of the product of the generators whose bits are set in `i`.

use num_rational::BigRational;
use num_traits::Zero;

use super::base::Base;
use super::Level;
use crate::error::{Error, Result};

pub(crate) type Coords = Vec<BigRational>;

pub(crate) struct Cx<'a> {
    pub base: Base,
    pub levels: &'a [Level],
}

pub(crate) fn is_zero(a: &[BigRational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub(crate) fn trim(mut a: Coords) -> Coords {
    while a.len() > 1 && is_zero(&a[a.len() / 2..]) {
        a.truncate(a.len() / 2);
    }
    a
}

pub(crate) fn pad(mut a: Coords, n: usize) -> Coords {
    if a.len() < n {
        a.resize(n, BigRational::zero());
    }
    a
}

fn join(lo: Coords, hi: Coords, h: usize) -> Coords {
    let mut v = pad(lo, h);
    v.extend(pad(hi, h));
    v
}

pub(crate) fn level_of(len: usize) -> usize {
    len.trailing_zeros() as usize
}

impl Cx<'_> {
    pub fn add(&self, a: &[BigRational], b: &[BigRational]) -> Coords {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        (0..n)
            .map(|i| self.base.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect()
    }

    pub fn sub(&self, a: &[BigRational], b: &[BigRational]) -> Coords {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        (0..n)
            .map(|i| self.base.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect()
    }

    pub fn neg(&self, a: &[BigRational]) -> Coords {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    pub fn scale(&self, a: &[BigRational], s: &BigRational) -> Coords {
        a.iter().map(|x| self.base.mul(x, s)).collect()
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Coords {
        let n = a.len().max(b.len());
        if is_zero(a) || is_zero(b) {
            return vec![BigRational::zero(); n];
        }
        if a.len() == 1 {
            return self.scale(b, &a[0]);
        }
        if b.len() == 1 {
            return self.scale(a, &b[0]);
        }
        let h = n / 2;
        if a.len() < b.len() {
            return join(self.mul(a, &b[..h]), self.mul(a, &b[h..]), h);
        }
        if b.len() < a.len() {
            return join(self.mul(&a[..h], b), self.mul(&a[h..], b), h);
        }
        let lvl = &self.levels[level_of(n) - 1];
        let (a0, a1) = a.split_at(h);
        let (b0, b1) = b.split_at(h);
        let a1b1 = self.mul(a1, b1);
        let lo = self.add(&self.mul(a0, b0), &self.mul(&a1b1, &lvl.v));
        let mut hi = self.add(&self.mul(a0, b1), &self.mul(a1, b0));
        if !is_zero(&lvl.u) {
            hi = self.add(&hi, &self.mul(&a1b1, &lvl.u));
        }
        join(lo, hi, h)
    }

    pub fn inv(&self, a: &[BigRational]) -> Result<Coords> {
        let a = trim(a.to_vec());
        if a.len() == 1 {
            return Ok(vec![self.base.inv(&a[0])?]);
        }
        if is_zero(&a) {
            return Err(Error::DivisionByZero);
        }
        let h = a.len() / 2;
        let lvl = &self.levels[level_of(a.len()) - 1];
        let (a0, a1) = a.split_at(h);
        let c0 = self.add(a0, &self.mul(a1, &lvl.u));
        let c1 = self.neg(a1);
        let norm = self.sub(&self.mul(a0, &c0), &self.mul(&self.mul(a1, a1), &lvl.v));
        let ni = self.inv(&norm)?;
        Ok(join(self.mul(&c0, &ni), self.mul(&c1, &ni), h))
    }

    pub fn half(&self, a: &[BigRational]) -> Coords {
        let two = self.base.from_i64(2);
        self.scale(a, &self.base.inv(&two).expect("characteristic 2"))
    }

    /// Square root inside the field of the first `k` levels (odd characteristic).
    pub fn sqrt_in(&self, a: &[BigRational], k: usize) -> Option<Coords> {
        if k == 0 {
            return self.base.sqrt(&a[0]).map(|r| vec![r]);
        }
        let h = 1usize << (k - 1);
        let a = pad(a.to_vec(), 2 * h);
        let (a0, a1) = a.split_at(h);
        let d = &self.levels[k - 1].v;
        if is_zero(a1) {
            if let Some(r) = self.sqrt_in(a0, k - 1) {
                return Some(r);
            }
            let q = self.mul(a0, &self.inv(d).ok()?);
            let r = self.sqrt_in(&q, k - 1)?;
            return Some(join(vec![BigRational::zero()], r, h));
        }
        let disc = self.sub(&self.mul(a0, a0), &self.mul(&self.mul(a1, a1), d));
        let n = self.sqrt_in(&disc, k - 1)?;
        for t in [self.add(a0, &n), self.sub(a0, &n)] {
            let t = self.half(&t);
            if is_zero(&t) {
                continue;
            }
            if let Some(x) = self.sqrt_in(&t, k - 1) {
                let y = self.mul(&self.half(a1), &self.inv(&x).ok()?);
                return Some(join(x, y, h));
            }
        }
        None
    }

    /// Frobenius inverse in characteristic 2: `a^(2^(N-1))` with `N` the degree over F_2.
    pub fn sqrt_char2(&self, a: &[BigRational], k: usize) -> Coords {
        let degree = 1usize << k;
        let mut r = a.to_vec();
        for _ in 1..degree {
            r = self.mul(&r, &r);
        }
        r
    }

    /// Solve `y^2 + y = c` over the F_2-field of the first `k` levels.
    pub fn artin_schreier(&self, c: &[BigRational], k: usize) -> Option<Coords> {
        let n = 1usize << k;
        let to_bits = |v: &[BigRational]| -> Vec<u8> {
            (0..n).map(|i| v.get(i).map_or(0, |x| u8::from(!x.is_zero()))).collect()
        };
        // column i is L(e_i) = e_i^2 + e_i
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![BigRational::zero(); n];
            e[i] = self.base.from_i64(1);
            cols.push(to_bits(&self.add(&self.mul(&e, &e), &e)));
        }
        // augmented rows: n equations in n unknowns
        let rhs = to_bits(c);
        let mut rows: Vec<Vec<u8>> = (0..n)
            .map(|r| {
                let mut row: Vec<u8> = cols.iter().map(|col| col[r]).collect();
                row.push(rhs[r]);
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..n).find(|&i| rows[i][col] == 1) else { continue };
            rows.swap(r, p);
            for i in 0..n {
                if i != r && rows[i][col] == 1 {
                    let pivot_row = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                        *x ^= y;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        if rows[r..].iter().any(|row| row[n] == 1) {
            return None;
        }
        let mut y = vec![BigRational::zero(); n];
        for (i, &col) in pivots.iter().enumerate() {
            if rows[i][n] == 1 {
                y[col] = self.base.from_i64(1);
            }
        }
        Some(y)
    }
}
