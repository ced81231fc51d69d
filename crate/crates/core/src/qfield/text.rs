//! Exact string and JSON forms of towers and elements.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::arith::{level_of, Cx};
use super::{Base, Elem, Level, LevelKind, Tower};
use crate::error::{parse_err, Error, Result};

fn monomial(i: usize) -> String {
    (0..usize::BITS as usize)
        .filter(|b| i >> b & 1 == 1)
        .map(|b| format!("s{}", b + 1))
        .collect::<Vec<_>>()
        .join("*")
}

fn coord_strings(c: &[BigRational]) -> Vec<String> {
    c.iter().map(|x| x.to_string()).collect()
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => monomial(i),
                _ => format!("{}*{}", mag, monomial(i)),
            };
            write!(f, "{sep}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = n.parse().map_err(|_| parse_err(format!("bad number '{s}'")))?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| parse_err(format!("bad number '{s}'")))?;
    if d.is_zero() {
        return Err(parse_err(format!("zero denominator in '{s}'")));
    }
    Ok(BigRational::new(n, d))
}

impl Tower {
    /// Parse a sum of terms like `1/2 - 3*s1*s2 + s3`.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_err("empty element"));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let split = (ch == '+' || ch == '-') && !matches!(prev, None | Some('*') | Some('/') | Some('+') | Some('-'));
            if split {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        terms.push(cur);
        let depth = self.depth();
        let mut total = self.zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            if body.is_empty() {
                return Err(parse_err(format!("bad term in '{s}'")));
            }
            let mut coef = BigRational::from_integer(sign.into());
            let mut mask = 0usize;
            for factor in body.split('*') {
                if let Some(k) = factor.strip_prefix('s') {
                    let k: usize = k.parse().map_err(|_| parse_err(format!("bad generator '{factor}'")))?;
                    if k == 0 || k > depth {
                        return Err(parse_err(format!("generator s{k} not in tower of depth {depth}")));
                    }
                    if mask >> (k - 1) & 1 == 1 {
                        return Err(parse_err(format!("repeated generator s{k}")));
                    }
                    mask |= 1 << (k - 1);
                } else {
                    coef *= parse_rational(factor)?;
                }
            }
            let mut c = vec![BigRational::zero(); (mask + 1).next_power_of_two()];
            c[mask] = coef;
            total = total + self.from_coords(c)?;
        }
        Ok(total)
    }

    pub fn levels_json(&self) -> Value {
        let levels = self.levels();
        Value::Array(
            levels
                .iter()
                .map(|l| match l.kind {
                    LevelKind::Sqrt => json!({ "d": coord_strings(&l.v) }),
                    LevelKind::ArtinSchreier => json!({ "as": coord_strings(&l.v) }),
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({ "field": self.base().label(), "tower": self.levels_json() })
    }

    /// Rebuild a tower, checking that every level really is a proper extension.
    pub fn from_json(v: &Value) -> Result<Tower> {
        let field = v.get("field").and_then(Value::as_str).unwrap_or("q");
        let tower = Tower::new(Base::parse(field)?);
        if let Some(levels) = v.get("tower") {
            tower.extend_from_json(levels)?;
        }
        Ok(tower)
    }

    /// Append the levels listed in `levels` beyond the current depth, after
    /// checking that the existing ones agree.
    pub fn extend_from_json(&self, levels: &Value) -> Result<()> {
        let arr = levels.as_array().ok_or_else(|| parse_err("tower must be a list"))?;
        for (i, entry) in arr.iter().enumerate() {
            let (kind, raw) = if let Some(d) = entry.get("d") {
                (LevelKind::Sqrt, d)
            } else if let Some(c) = entry.get("as") {
                (LevelKind::ArtinSchreier, c)
            } else {
                return Err(parse_err("tower level needs 'd' or 'as'"));
            };
            let coords = parse_coords(raw)?;
            if coords.len() > 1 << i {
                return Err(parse_err(format!("level {} refers to higher levels", i + 1)));
            }
            let v = self.from_coords(super::arith::pad(coords, 1 << i))?;
            let u = match kind {
                LevelKind::Sqrt => vec![BigRational::zero()],
                LevelKind::ArtinSchreier => vec![self.base().from_i64(1)],
            };
            let level = Level { kind, u, v: v.c.clone() };
            let existing = self.levels();
            if i < existing.len() {
                if existing[i] != level {
                    return Err(Error::MixedContext);
                }
                continue;
            }
            let two = self.characteristic() == 2;
            match kind {
                LevelKind::Sqrt if two => return Err(parse_err("square-root level in characteristic 2")),
                LevelKind::ArtinSchreier if !two => return Err(parse_err("Artin-Schreier level needs characteristic 2")),
                _ => {}
            }
            let reducible = self.with_cx(|cx: &Cx| match kind {
                LevelKind::Sqrt => cx.sqrt_in(&v.c, i).is_some(),
                LevelKind::ArtinSchreier => cx.artin_schreier(&v.c, i).is_some(),
            });
            if reducible {
                return Err(parse_err(format!("level {} does not define a field extension", i + 1)));
            }
            self.push_level(i, level);
        }
        Ok(())
    }
}

fn parse_coords(v: &Value) -> Result<Vec<BigRational>> {
    let arr = v.as_array().ok_or_else(|| parse_err("coords must be a list"))?;
    if arr.is_empty() || !arr.len().is_power_of_two() {
        return Err(parse_err("coordinate count must be a power of two"));
    }
    arr.iter()
        .map(|x| match x {
            Value::String(s) => parse_rational(s.trim()),
            Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
            _ => Err(parse_err("coordinates must be strings")),
        })
        .collect()
}

impl Elem {
    /// Self-contained JSON: base field, tower levels and coordinates.
    pub fn to_json(&self) -> Value {
        let mut v = self.tower.to_json();
        let levels = v["tower"].as_array().unwrap()[..self.level()].to_vec();
        v["tower"] = Value::Array(levels);
        v["coords"] = json!(coord_strings(&self.c));
        v
    }

    /// Read an element. Its tower levels must be a prefix of (or extend) `tower`.
    pub fn from_json(v: &Value, tower: &Tower) -> Result<Elem> {
        if let Some(s) = v.as_str() {
            return tower.parse_elem(s);
        }
        if let Some(n) = v.as_i64() {
            return Ok(tower.int(n));
        }
        let field = v.get("field").and_then(Value::as_str).unwrap_or("q");
        if Base::parse(field)? != tower.base() {
            return Err(Error::MixedContext);
        }
        if let Some(levels) = v.get("tower") {
            tower.extend_from_json(levels)?;
        }
        let coords = parse_coords(v.get("coords").ok_or_else(|| parse_err("element needs 'coords'"))?)?;
        if level_of(coords.len()) > tower.depth() {
            return Err(parse_err("coordinates exceed the tower depth"));
        }
        tower.from_coords(coords)
    }
}
