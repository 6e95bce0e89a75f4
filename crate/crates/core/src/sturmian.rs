//! Exact Sturmian and mechanical word generation.
//!
//! Slopes and intercepts are quadratic irrationals `(a + b·√d)/c` with
//! arbitrary-precision coefficients, so every floor is computed exactly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::words::BinaryWord;
use crate::{Error, Rational, Result};

/// `⌊√n⌋` by Newton iteration from above, with the result certified by
/// `r² ≤ n < (r+1)²`.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n < &BigUint::from(2u32) {
        return n.clone();
    }
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            break;
        }
        x = y;
    }
    let next = &x + 1u32;
    assert!(&x * &x <= *n && &next * &next > *n, "integer square root failed to converge");
    x
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

/// Sign of `p + q·√d` for `d ≥ 0`.
fn sign_of(p: &BigInt, q: &BigInt, d: &BigUint) -> Ordering {
    let ps = p.cmp(&BigInt::zero());
    let qs = if d.is_zero() { Ordering::Equal } else { q.cmp(&BigInt::zero()) };
    match (ps, qs) {
        (a, Ordering::Equal) => a,
        (Ordering::Equal, b) => b,
        (a, b) if a == b => a,
        // opposite signs: compare p² with q²·d
        (a, _) => {
            let lhs = p * p;
            let rhs = q * q * BigInt::from(d.clone());
            match lhs.cmp(&rhs) {
                Ordering::Greater => a,
                Ordering::Less => a.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

/// `⌊(a + b·√d)/c⌋` for `c > 0`.
fn floor_parts(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigUint) -> BigInt {
    if b.is_zero() || d.is_zero() {
        return a.div_floor(c);
    }
    let b_abs = b.magnitude();
    let scaled = b_abs * b_abs * d;
    let r = BigInt::from(isqrt(&scaled));
    let root_is_exact = BigInt::from(scaled) == &r * &r;
    let numer = match (b.sign(), root_is_exact) {
        (Sign::Plus, _) => a + &r,
        (_, true) => a - &r,
        // b√d lies strictly between -r - 1 and -r
        _ => a - &r - 1,
    };
    numer.div_floor(c)
}

/// A real number `(a + b·√d)/c` with `c > 0`, stored canonically: rational
/// values have `b = d = 0`, irrational ones a non-square `d`, and
/// `gcd(a, b, c) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigUint,
}

impl QuadraticIrrational {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigUint>) -> Result<Self> {
        let (mut a, mut b, mut c, mut d) = (a.into(), b.into(), c.into(), d.into());
        if c.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        if b.is_zero() {
            d = BigUint::zero();
        } else if let Some(root) = exact_sqrt(&d) {
            a += &b * BigInt::from(root);
            b = BigInt::zero();
            d = BigUint::zero();
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        Ok(QuadraticIrrational { a, b, c, d })
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q.numerator(), 0, q.denominator(), 0u32).unwrap()
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::integer(0))
    }

    /// `√2 − 1`.
    pub fn sqrt2_minus_1() -> Self {
        Self::new(-1, 1, 1, 2u32).unwrap()
    }

    /// `(3 − √5)/2`, the slope of the Fibonacci word.
    pub fn fibonacci_slope() -> Self {
        Self::new(3, -1, 2, 5u32).unwrap()
    }

    /// `(5 + √5)/2`, the supremum of exponents for which every Sturmian word
    /// has powers.
    pub fn exponent_threshold() -> Self {
        Self::new(5, 1, 2, 5u32).unwrap()
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn radicand(&self) -> &BigUint {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.a, &self.b, &self.d)
    }

    pub fn floor(&self) -> BigInt {
        floor_parts(&self.a, &self.b, &self.c, &self.d)
    }

    /// Exact comparison with a rational.
    pub fn compare_to_rational(&self, q: Rational) -> Ordering {
        let num = BigInt::from(q.numerator());
        let den = BigInt::from(q.denominator());
        let p = &self.a * &den - &num * &self.c;
        let r = &self.b * &den;
        sign_of(&p, &r, &self.d)
    }

    fn shared_radicand<'a>(&'a self, other: &'a Self) -> Result<&'a BigUint> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(&other.d),
            (_, true) => Ok(&self.d),
            _ if self.d == other.d => Ok(&self.d),
            _ => Err(Error::RadicandMismatch(self.to_string(), other.to_string())),
        }
    }

    /// `n·self + other` as unreduced coefficients over the shared radicand.
    fn linear_parts(&self, n: &BigInt, other: &Self) -> (BigInt, BigInt, BigInt) {
        (
            n * &self.a * &other.c + &other.a * &self.c,
            n * &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
        )
    }

    /// `n·self + other`.
    pub fn linear(&self, n: u64, other: &Self) -> Result<Self> {
        let d = self.shared_radicand(other)?.clone();
        let (a, b, c) = self.linear_parts(&BigInt::from(n), other);
        Self::new(a, b, c, d)
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}*sqrt({}))/{}", self.a, sign, self.b.magnitude(), self.d, self.c)
    }
}

struct Cursor<'a> {
    rest: &'a str,
}

impl<'a> Cursor<'a> {
    fn literal(&mut self, lit: &str) -> Option<()> {
        self.rest = self.rest.strip_prefix(lit)?;
        Some(())
    }

    fn sign(&mut self) -> Option<bool> {
        match self.rest.as_bytes().first()? {
            b'+' => {
                self.rest = &self.rest[1..];
                Some(false)
            }
            b'-' => {
                self.rest = &self.rest[1..];
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<BigUint> {
        let end = self.rest.bytes().take_while(u8::is_ascii_digit).count();
        if end == 0 {
            return None;
        }
        let (digits, rest) = self.rest.split_at(end);
        self.rest = rest;
        digits.parse().ok()
    }
}

impl FromStr for QuadraticIrrational {
    type Err = Error;

    /// Parses `(a+b*sqrt(d))/c`, where `a` may carry a sign and the operator
    /// before `b` is `+` or `-`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = || -> Option<(BigInt, BigInt, BigInt, BigUint)> {
            let mut cur = Cursor { rest: s };
            cur.literal("(")?;
            let a_neg = cur.sign().unwrap_or(false);
            let a = BigInt::from(cur.digits()?);
            let b_neg = cur.sign()?;
            let b = BigInt::from(cur.digits()?);
            cur.literal("*sqrt(")?;
            let d = cur.digits()?;
            cur.literal("))/")?;
            let c = BigInt::from(cur.digits()?);
            if !cur.rest.is_empty() {
                return None;
            }
            Some((if a_neg { -a } else { a }, if b_neg { -b } else { b }, c, d))
        };
        let (a, b, c, d) = parse().ok_or_else(|| Error::InvalidQuadratic(s.to_string()))?;
        Self::new(a, b, c, d)
    }
}

impl Serialize for QuadraticIrrational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `⌊n·γ + β⌋`, exactly.
pub fn floor_linear(n: u64, gamma: &QuadraticIrrational, beta: &QuadraticIrrational) -> Result<BigInt> {
    let d = gamma.shared_radicand(beta)?;
    let (a, b, c) = gamma.linear_parts(&BigInt::from(n), beta);
    Ok(floor_parts(&a, &b, &c, d))
}

pub fn compare_to_rational(x: &QuadraticIrrational, q: Rational) -> Ordering {
    x.compare_to_rational(q)
}

fn check_slope_intercept(gamma: &QuadraticIrrational, beta: &QuadraticIrrational) -> Result<()> {
    if gamma.is_rational()
        || gamma.signum() != Ordering::Greater
        || gamma.compare_to_rational(Rational::ONE) != Ordering::Less
    {
        return Err(Error::InvalidSlope(gamma.to_string()));
    }
    if beta.signum() == Ordering::Less || beta.compare_to_rational(Rational::ONE) != Ordering::Less {
        return Err(Error::InvalidIntercept(beta.to_string()));
    }
    gamma.shared_radicand(beta)?;
    Ok(())
}

/// Symbols `i = 0..len` of `⌊(i+2)γ + β⌋ − ⌊(i+1)γ + β⌋`, i.e. the mechanical
/// word indexed from 1 and shifted to 0-based storage.
pub fn mechanical_word(gamma: &QuadraticIrrational, beta: &QuadraticIrrational, len: usize) -> Result<BinaryWord> {
    check_slope_intercept(gamma, beta)?;
    let d = gamma.shared_radicand(beta)?;
    let floor_at = |n: usize| {
        let (a, b, c) = gamma.linear_parts(&BigInt::from(n), beta);
        floor_parts(&a, &b, &c, d)
    };
    let mut symbols = Vec::with_capacity(len);
    let mut prev = floor_at(1);
    for i in 0..len {
        let cur = floor_at(i + 2);
        let step = &cur - &prev;
        debug_assert!(step.is_zero() || step.is_one());
        symbols.push(u8::from(step.is_one()));
        prev = cur;
    }
    Ok(BinaryWord::from_vec_unchecked(symbols))
}

/// Prefix of the fixed point of `0 → 01, 1 → 0`.
pub fn fibonacci_word(len: usize) -> BinaryWord {
    let mut word = vec![0u8];
    while word.len() < len {
        word = word
            .iter()
            .flat_map(|&s| if s == 0 { &[0u8, 1][..] } else { &[0u8][..] })
            .copied()
            .collect();
    }
    word.truncate(len);
    BinaryWord::from_vec_unchecked(word)
}
