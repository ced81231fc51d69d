//! Sparse integer polynomials in the subset trace variables `t_S`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{parse_err, Error, Result};
use crate::scalar::Field;

/// A nonempty subset of generators as a bitmask; bit `i` is `x_{i+1}`.
pub type Subset = u32;

/// Sorted multiset of variables.
pub type Monomial = Vec<Subset>;

pub fn subset_indices(s: Subset) -> Vec<usize> {
    (0..32).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn subset_from_indices(idx: &[usize]) -> Result<Subset> {
    let mut s = 0;
    for &i in idx {
        if i == 0 || i > 32 || s >> (i - 1) & 1 == 1 {
            return Err(parse_err(format!("bad subset {idx:?}")));
        }
        s |= 1 << (i - 1);
    }
    if s == 0 {
        return Err(parse_err("empty subset"));
    }
    Ok(s)
}

pub fn var_name(s: Subset) -> String {
    let idx = subset_indices(s);
    if idx.iter().all(|&i| i < 10) {
        format!("t{}", idx.iter().map(|i| i.to_string()).collect::<String>())
    } else {
        format!("t{}", idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("_"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TracePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TracePoly {
    pub fn zero() -> Self {
        TracePoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = TracePoly::zero();
        p.add_term(Vec::new(), c.into());
        p
    }

    pub fn var(s: Subset) -> Self {
        let mut p = TracePoly::zero();
        p.add_term(vec![s], BigInt::one());
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut r = TracePoly::zero();
        for (m, c) in &self.terms {
            r.add_term(m.clone(), c * k);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = TracePoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut m: Monomial = m1.iter().chain(m2).copied().collect();
                m.sort_unstable();
                r.add_term(m, c1 * c2);
            }
        }
        r
    }

    pub fn variables(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.terms.keys().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Evaluate with `value(S)` for each variable; `like` supplies constants.
    pub fn eval<F: Field>(&self, like: &F, value: impl Fn(Subset) -> Option<F>) -> Result<F> {
        let mut total = like.zero_like();
        for (m, c) in &self.terms {
            let mut term = like.from_bigint_like(c);
            for &s in m {
                let v = value(s).ok_or_else(|| Error::Invalid(format!("no value for {}", var_name(s))))?;
                term = term * &v;
            }
            total = total + &term;
        }
        Ok(total)
    }

    pub fn eval_map<F: Field>(&self, like: &F, values: &BTreeMap<Subset, F>) -> Result<F> {
        self.eval(like, |s| values.get(&s).cloned())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({ "vars": m.iter().map(|&s| subset_indices(s)).collect::<Vec<_>>(), "coeff": c.to_string() }))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| parse_err("polynomial must be a list of terms"))?;
        let mut p = TracePoly::zero();
        for t in arr {
            let vars = t.get("vars").and_then(Value::as_array).ok_or_else(|| parse_err("term needs 'vars'"))?;
            let mut m = Vec::new();
            for s in vars {
                let idx: Vec<usize> = serde_json::from_value(s.clone()).map_err(|e| parse_err(e.to_string()))?;
                m.push(subset_from_indices(&idx)?);
            }
            m.sort_unstable();
            let coeff = t.get("coeff").and_then(Value::as_str).ok_or_else(|| parse_err("term needs string 'coeff'"))?;
            let c: BigInt = coeff.parse().map_err(|_| parse_err(format!("bad coefficient '{coeff}'")))?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

macro_rules! poly_op {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for TracePoly {
            type Output = TracePoly;
            fn $m(self, o: TracePoly) -> TracePoly {
                TracePoly::$m(&self, &o)
            }
        }
    };
}
poly_op!(Add, add);
poly_op!(Sub, sub);
poly_op!(Mul, mul);

impl fmt::Display for TracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // higher degree first
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let sep = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let mut i = 0;
            while i < m.len() {
                let j = (i..m.len()).find(|&j| m[j] != m[i]).unwrap_or(m.len());
                let name = var_name(m[i]);
                factors.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name });
                i = j;
            }
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{mag}*{}", factors.join("*"))
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}
