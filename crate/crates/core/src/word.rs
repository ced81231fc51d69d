//! Reduced words in a free group `F_n = <x1, ..., xn>`.

use std::fmt;

use crate::error::{parse_err, Result};

/// A freely reduced word. Letter `k > 0` is `x_k`, `-k` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn gen(k: usize) -> Word {
        Word { letters: vec![k as i32] }
    }

    /// Build from letters, freely reducing.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Word {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, o: &Word) -> Word {
        Word::new(self.letters.iter().chain(&o.letters).copied())
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::empty(), |acc, _| acc.concat(&base))
    }

    /// Remove cancelling first/last letter pairs.
    pub fn cyclic_reduce(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j > i + 1 && l[i] == -l[j - 1] {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    pub fn rotate(&self, k: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let n = letters.len();
            letters.rotate_left(k % n);
        }
        Word { letters }
    }

    /// Canonical representative of the conjugacy class of `{w, w^-1}`: the
    /// smallest rotation of the cyclic reductions of `w` and its inverse.
    pub fn class_key(&self) -> Word {
        let w = self.cyclic_reduce();
        let inv = w.inverse();
        (0..w.len().max(1))
            .flat_map(|k| [w.rotate(k), inv.rotate(k)])
            .min()
            .unwrap()
    }

    /// Apply the endomorphism sending `x_k` to `images[k-1]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_from_slice(&img.letters);
            } else {
                out.extend(img.letters.iter().rev().map(|x| -x));
            }
        }
        Word::new(out)
    }

    /// Parse whitespace-separated tokens `x<k>` or `x<k>^-1`. `1` is the empty word.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (body, sign) = match tok.strip_suffix("^-1") {
                Some(b) => (b, -1),
                None => (tok, 1),
            };
            let k: i32 = body
                .strip_prefix('x')
                .and_then(|n| n.parse().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| parse_err(format!("bad letter '{tok}'")))?;
            letters.push(sign * k);
        }
        Ok(Word::new(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduce_print() {
        let w = Word::parse("x1 x2 x2^-1 x3^-1").unwrap();
        assert_eq!(w.letters(), &[1, -3]);
        assert_eq!(w.to_string(), "x1 x3^-1");
        assert!(Word::parse("y1").is_err());
        assert!(Word::parse("x0").is_err());
        assert_eq!(Word::parse("1").unwrap(), Word::empty());
    }

    #[test]
    fn class_key_identifies_conjugates_and_inverses() {
        let w = Word::parse("x1 x2 x3").unwrap();
        let c = Word::parse("x3 x1 x2").unwrap();
        let i = Word::parse("x2^-1 x1^-1 x3^-1").unwrap();
        let g = Word::parse("x4 x1 x2 x3 x4^-1").unwrap();
        let k = w.class_key();
        assert_eq!(c.class_key(), k);
        assert_eq!(i.class_key(), k);
        assert_eq!(g.class_key(), k);
        assert_ne!(Word::parse("x1 x3 x2").unwrap().class_key(), k);
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let images = vec![Word::parse("x1 x2 x1^-1").unwrap(), Word::parse("x1").unwrap()];
        let u = Word::parse("x1 x2^-1").unwrap();
        let v = Word::parse("x2 x2 x1").unwrap();
        assert_eq!(u.concat(&v).substitute(&images), u.substitute(&images).concat(&v.substitute(&images)));
        assert_eq!(u.inverse().substitute(&images), u.substitute(&images).inverse());
    }
}
