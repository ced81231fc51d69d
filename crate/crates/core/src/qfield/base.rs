//! Prime fields and the rationals, as the ground level of a tower.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Ground field. Coefficients are always `BigRational`; over `F_p` they are
/// kept reduced to integers in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Rational,
    Prime(u64),
}

impl Base {
    pub fn characteristic(self) -> u64 {
        match self {
            Base::Rational => 0,
            Base::Prime(p) => p,
        }
    }

    pub fn reduce(self, x: BigRational) -> BigRational {
        match self {
            Base::Rational => x,
            Base::Prime(p) => {
                let p = BigInt::from(p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                let inv = modinv(&den, &p).expect("denominator divisible by p");
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn from_i64(self, v: i64) -> BigRational {
        self.reduce(BigRational::from_integer(v.into()))
    }

    pub fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            Base::Rational => a + b,
            Base::Prime(p) => {
                let s = a.numer() + b.numer();
                let p = BigInt::from(p);
                BigRational::from_integer(if s >= p { s - p } else { s })
            }
        }
    }

    pub fn sub(self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            Base::Rational => a - b,
            Base::Prime(p) => {
                let s = a.numer() - b.numer();
                BigRational::from_integer(if s.is_negative() { s + BigInt::from(p) } else { s })
            }
        }
    }

    pub fn neg(self, a: &BigRational) -> BigRational {
        match self {
            Base::Rational => -a,
            Base::Prime(p) => {
                if a.is_zero() {
                    a.clone()
                } else {
                    BigRational::from_integer(BigInt::from(p) - a.numer())
                }
            }
        }
    }

    pub fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            Base::Rational => a * b,
            Base::Prime(p) => {
                let x = a.numer().to_u64().unwrap() as u128 * b.numer().to_u64().unwrap() as u128;
                BigRational::from_integer(BigInt::from((x % p as u128) as u64))
            }
        }
    }

    pub fn inv(self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Base::Rational => a.recip(),
            Base::Prime(p) => {
                let p = BigInt::from(p);
                BigRational::from_integer(modinv(a.numer(), &p).unwrap())
            }
        })
    }

    /// Square root inside the ground field, if there is one.
    pub fn sqrt(self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return Some(a.clone());
        }
        match self {
            Base::Rational => {
                if a.is_negative() {
                    return None;
                }
                let n = exact_isqrt(a.numer())?;
                let d = exact_isqrt(a.denom())?;
                Some(BigRational::new(n, d))
            }
            Base::Prime(p) => {
                let v = a.numer().to_u64().unwrap();
                tonelli_shanks(v, p).map(|r| BigRational::from_integer(r.into()))
            }
        }
    }

    pub fn parse(s: &str) -> Result<Base> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Base::Rational);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime '{rest}'")))?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            if p > u32::MAX as u64 {
                return Err(Error::Parse(format!("prime {p} too large")));
            }
            return Ok(Base::Prime(p));
        }
        Err(Error::Parse(format!("unknown field '{s}'")))
    }

    pub fn label(self) -> String {
        match self {
            Base::Rational => "q".into(),
            Base::Prime(p) => format!("fp:{p}"),
        }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn modinv(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(p);
    e.gcd.is_one().then(|| e.x.mod_floor(p))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if powmod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut c = powmod(z, q, p);
    let mut r = powmod(a, (q + 1) / 2, p);
    let mut t = powmod(a, q, p);
    let mut m = s;
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        r = mulmod(r, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    Some(r)
}
