//! Exact arithmetic in the biquadratic field Q(sqrt2, sqrt3).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ParseScalarError;

/// `c[0] + c[1]*sqrt2 + c[2]*sqrt3 + c[3]*sqrt6` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quad {
    c: [BigRational; 4],
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of `p + q*sqrt(k)` for rationals p, q.
fn sign_surd(p: &BigRational, q: &BigRational, k: i64) -> i32 {
    let sp = sgn(p);
    let sq = sgn(q);
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return if sp == 0 { sq } else { sp };
    }
    let diff = p * p - q * q * BigRational::from_integer(BigInt::from(k));
    sp * sgn(&diff)
}

fn sgn(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Element of Q(sqrt2) as a coefficient pair, used by the sign test.
#[derive(Clone)]
struct Q2(BigRational, BigRational);

impl Q2 {
    fn sign(&self) -> i32 {
        sign_surd(&self.0, &self.1, 2)
    }
    fn mul(&self, o: &Q2) -> Q2 {
        let two = rat(2, 1);
        Q2(
            &self.0 * &o.0 + &self.1 * &o.1 * two,
            &self.0 * &o.1 + &self.1 * &o.0,
        )
    }
    fn sub(&self, o: &Q2) -> Q2 {
        Q2(&self.0 - &o.0, &self.1 - &o.1)
    }
}

impl Quad {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Quad { c: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let z = BigRational::zero();
        Quad { c: [r, z.clone(), z.clone(), z] }
    }

    pub fn sqrt2() -> Self {
        Self::basis(1)
    }

    pub fn sqrt3() -> Self {
        Self::basis(2)
    }

    pub fn sqrt6() -> Self {
        Self::basis(3)
    }

    fn basis(i: usize) -> Self {
        let mut q = Self::zero();
        q.c[i] = BigRational::one();
        q
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The rational value, if the irrational parts vanish.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    /// Exact sign: -1, 0 or 1.
    ///
    /// Writes the number as `P + Q*sqrt3` with P, Q in Q(sqrt2) and compares
    /// `P^2` with `3 Q^2` when the two parts disagree in sign.
    pub fn signum(&self) -> i32 {
        let p = Q2(self.c[0].clone(), self.c[1].clone());
        let q = Q2(self.c[2].clone(), self.c[3].clone());
        let sp = p.sign();
        let sq = q.sign();
        if sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        if sp == sq {
            return sp;
        }
        let three = Q2(rat(3, 1), BigRational::zero());
        let diff = p.mul(&p).sub(&three.mul(&q.mul(&q)));
        sp * diff.sign()
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Image under sqrt2 -> -sqrt2.
    fn conj2(&self) -> Self {
        Quad { c: [self.c[0].clone(), -&self.c[1], self.c[2].clone(), -&self.c[3]] }
    }

    /// Image under sqrt3 -> -sqrt3.
    fn conj3(&self) -> Self {
        Quad { c: [self.c[0].clone(), self.c[1].clone(), -&self.c[2], -&self.c[3]] }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let a = self.conj2();
        let b = self.conj3();
        let ab = a.conj3();
        let rest = &(&a * &b) * &ab;
        let norm = self * &rest;
        let n = norm.as_rational().expect("field norm is rational").clone();
        Some(rest.scale(&n.recip()))
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        o.recip().map(|r| self * &r)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Quad { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    /// Rough float value for display and diagnostics only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.c[0]) + f(&self.c[1]) * 2f64.sqrt() + f(&self.c[2]) * 3f64.sqrt() + f(&self.c[3]) * 6f64.sqrt()
    }

    /// Largest bit length among numerators and denominators.
    pub fn max_bits(&self) -> u64 {
        self.c
            .iter()
            .map(|r| r.numer().bits().max(r.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// Square root when the argument is a square of a simple surd multiple:
    /// `r`, `r*sqrt2`, `r*sqrt3` or `r*sqrt6` with `r` rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let r = self.as_rational()?;
        for (k, basis) in [(1i64, 0usize), (2, 1), (3, 2), (6, 3)] {
            let t = r / BigRational::from_integer(BigInt::from(k));
            if let Some(s) = rational_sqrt(&t) {
                let mut q = Self::zero();
                q.c[basis] = s;
                return Some(q);
            }
        }
        None
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

impl PartialOrd for Quad {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Quad {
    fn cmp(&self, o: &Self) -> Ordering {
        (self - o).signum().cmp(&0)
    }
}

impl<'a> Add<&'a Quad> for &'a Quad {
    type Output = Quad;
    fn add(self, o: &Quad) -> Quad {
        Quad { c: std::array::from_fn(|i| &self.c[i] + &o.c[i]) }
    }
}

impl<'a> Sub<&'a Quad> for &'a Quad {
    type Output = Quad;
    fn sub(self, o: &Quad) -> Quad {
        Quad { c: std::array::from_fn(|i| &self.c[i] - &o.c[i]) }
    }
}

impl<'a> Mul<&'a Quad> for &'a Quad {
    type Output = Quad;
    fn mul(self, o: &Quad) -> Quad {
        let [a, b, c, d] = &self.c;
        let [e, f, g, h] = &o.c;
        let two = rat(2, 1);
        let three = rat(3, 1);
        let six = rat(6, 1);
        // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
        let one = a * e + &two * b * f + &three * c * g + &six * d * h;
        let s2 = a * f + b * e + &three * (c * h + d * g);
        let s3 = a * g + c * e + &two * (b * h + d * f);
        let s6 = a * h + d * e + b * g + c * f;
        Quad { c: [one, s2, s3, s6] }
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad { c: std::array::from_fn(|i| -&self.c[i]) }
    }
}

impl Div<&Quad> for &Quad {
    type Output = Quad;
    fn div(self, o: &Quad) -> Quad {
        self.checked_div(o).expect("division by zero in Q(sqrt2, sqrt3)")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Quad> for Quad {
            type Output = Quad;
            fn $m(self, o: Quad) -> Quad { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Quad> for Quad {
            type Output = Quad;
            fn $m(self, o: &Quad) -> Quad { (&self).$m(o) }
        }
        impl<'a> $tr<Quad> for &'a Quad {
            type Output = Quad;
            fn $m(self, o: Quad) -> Quad { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        -&self
    }
}

impl From<i64> for Quad {
    fn from(n: i64) -> Self {
        Quad::int(n)
    }
}

impl fmt::Display for Quad {
    /// Canonical form, e.g. `1/2 + 1/4*sqrt2 - sqrt3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        const NAMES: [&str; 4] = ["", "sqrt2", "sqrt3", "sqrt6"];
        let mut first = true;
        for (k, coef) in self.c.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", NAMES[k])?;
            } else {
                write!(f, "{mag}*{}", NAMES[k])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad({self})")
    }
}

impl FromStr for Quad {
    type Err = ParseScalarError;

    /// Accepts sums and differences of products and quotients of integers,
    /// decimal-free rationals and `sqrt2`, `sqrt3`, `sqrt6`, with parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), i: 0, src: s };
        let v = p.expr()?;
        p.ws();
        if p.i != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ParseScalarError {
        ParseScalarError { input: self.src.to_string(), pos: self.i, reason: what.to_string() }
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Quad, ParseScalarError> {
        let mut v = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    v = v + self.term()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    v = v - self.term()?;
                }
                _ => return Ok(v),
            }
        }
    }

    fn term(&mut self) -> Result<Quad, ParseScalarError> {
        let mut v = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    v = v * self.factor()?;
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.factor()?;
                    v = v.checked_div(&d).ok_or_else(|| self.err("division by zero"))?;
                }
                _ => return Ok(v),
            }
        }
    }

    fn factor(&mut self) -> Result<Quad, ParseScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(v)
            }
            Some(b'-') => {
                self.i += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let n: BigInt = self.src[start..self.i].parse().map_err(|_| self.err("bad integer"))?;
                Ok(Quad::from_rational(BigRational::from_integer(n)))
            }
            Some(b's') => {
                for (name, v) in [("sqrt2", Quad::sqrt2()), ("sqrt3", Quad::sqrt3()), ("sqrt6", Quad::sqrt6())] {
                    if self.src[self.i..].starts_with(name) {
                        self.i += name.len();
                        return Ok(v);
                    }
                }
                Err(self.err("unknown surd"))
            }
            _ => Err(self.err("expected a number")),
        }
    }
}
