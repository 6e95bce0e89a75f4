//! Ostrowski numeration in the Pell base `1, 2, 5, 12, 29, …`.
//!
//! Digits are stored most significant first. A valid representation has no
//! leading zero, a last digit of at most 1, and every 2 immediately followed
//! by a 0.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::words::BinaryWord;
use crate::{Error, Result};

/// The first `k` Pell numbers, `P₁ = 1, P₂ = 2, Pⱼ = 2Pⱼ₋₁ + Pⱼ₋₂`.
pub fn pell_numbers(k: usize) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut out = Vec::with_capacity(k);
    out.push(1u64);
    if k > 1 {
        out.push(2);
    }
    while out.len() < k {
        let n = out.len();
        let next = out[n - 1]
            .checked_mul(2)
            .and_then(|x| x.checked_add(out[n - 2]))
            .ok_or(Error::Overflow("Pell number"))?;
        out.push(next);
    }
    Ok(out)
}

/// Pell numbers not exceeding `m`, ascending (at least `[1]`).
fn pell_numbers_up_to(m: u64) -> Vec<u64> {
    let mut out = vec![1u64, 2];
    loop {
        let n = out.len();
        match out[n - 1].checked_mul(2).and_then(|x| x.checked_add(out[n - 2])) {
            Some(next) if next <= m => out.push(next),
            _ => break,
        }
    }
    if m < 2 {
        out.truncate(1);
    }
    out
}

pub fn is_valid_pell(digits: &[u8]) -> bool {
    if digits.first() == Some(&0) || digits.last().is_some_and(|&d| d > 1) {
        return false;
    }
    digits.iter().all(|&d| d <= 2) && digits.windows(2).all(|pair| pair[0] != 2 || pair[1] == 0)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PellRepresentation {
    digits: Vec<u8>,
}

impl PellRepresentation {
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        if !is_valid_pell(&digits) {
            let text: String = digits.iter().map(|d| char::from(b'0' + d.min(&9))).collect();
            return Err(Error::InvalidPell(text));
        }
        Ok(PellRepresentation { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn value(&self) -> Result<u64> {
        from_pell(self)
    }

    /// Whether the representation is nonempty and ends in an odd number of zeros.
    pub fn trailing_zeros_odd(&self) -> bool {
        let zeros = self.digits.iter().rev().take_while(|&&d| d == 0).count();
        !self.digits.is_empty() && zeros % 2 == 1
    }
}

/// Greedy expansion from the largest Pell number not exceeding `m`.
pub fn to_pell(m: u64) -> PellRepresentation {
    if m == 0 {
        return PellRepresentation::default();
    }
    let base = pell_numbers_up_to(m);
    let mut rest = m;
    let digits: Vec<u8> = base
        .iter()
        .rev()
        .map(|&p| {
            let d = rest / p;
            rest %= p;
            d as u8
        })
        .collect();
    debug_assert!(is_valid_pell(&digits));
    PellRepresentation { digits }
}

pub fn from_pell(r: &PellRepresentation) -> Result<u64> {
    let base = pell_numbers(r.digits.len().max(1))?;
    r.digits
        .iter()
        .rev()
        .zip(&base)
        .try_fold(0u64, |acc, (&d, &p)| (d as u64).checked_mul(p).and_then(|x| acc.checked_add(x)))
        .ok_or(Error::Overflow("Pell value"))
}

pub fn trailing_zeros_odd(r: &PellRepresentation) -> bool {
    r.trailing_zeros_odd()
}

/// The characteristic Sturmian word of slope `√2 − 1`: symbol `i` is 1 iff
/// the Pell representation of `i + 1` ends in an odd number of zeros.
pub fn sturmian_from_pell(len: usize) -> BinaryWord {
    let symbols = (1..=len as u64).map(|m| u8::from(to_pell(m).trailing_zeros_odd())).collect();
    BinaryWord::from_vec_unchecked(symbols)
}

impl fmt::Display for PellRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.digits.iter().map(|&d| char::from(b'0' + d)).collect();
        f.write_str(&s)
    }
}

impl FromStr for PellRepresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .bytes()
            .map(|b| match b {
                b'0'..=b'2' => Ok(b - b'0'),
                _ => Err(Error::InvalidPell(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_digits(digits).map_err(|_| Error::InvalidPell(s.to_string()))
    }
}

impl Serialize for PellRepresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(s: &str) -> PellRepresentation {
        s.parse().unwrap()
    }

    #[test]
    fn pell_sequence() {
        assert_eq!(pell_numbers(7).unwrap(), vec![1, 2, 5, 12, 29, 70, 169]);
        assert_eq!(pell_numbers(1).unwrap(), vec![1]);
        assert_eq!(*pell_numbers(10).unwrap().last().unwrap(), 2378);
        assert_eq!(pell_numbers(0), Err(Error::ZeroArgument));
        assert!(pell_numbers(200).is_err());
    }

    #[test]
    fn conversions() {
        assert_eq!(to_pell(7).to_string(), "110");
        assert_eq!(to_pell(10).to_string(), "200");
        assert_eq!(to_pell(1).to_string(), "1");
        assert!(to_pell(0).digits().is_empty());
        assert_eq!(from_pell(&rep("110")), Ok(7));
        assert_eq!(from_pell(&rep("200")), Ok(10));
        assert_eq!(from_pell(&rep("")), Ok(0));
        assert!(from_pell(&rep(&format!("1{}", "0".repeat(60)))).is_err());
        assert_eq!(to_pell(u64::MAX).value(), Ok(u64::MAX));
    }

    #[test]
    fn validity() {
        assert!(is_valid_pell(&[2, 0, 0]));
        assert!(!is_valid_pell(&[2, 1]));
        assert!(is_valid_pell(&[]));
        assert!(!is_valid_pell(&[0, 1]));
        assert!(!is_valid_pell(&[1, 2]));
        assert!(!is_valid_pell(&[3]));
        assert!("21".parse::<PellRepresentation>().is_err());
        assert!("1a".parse::<PellRepresentation>().is_err());
        assert!("012".parse::<PellRepresentation>().is_err());
    }

    #[test]
    fn trailing_zero_parity() {
        assert!(to_pell(2).trailing_zeros_odd());
        assert!(!to_pell(1).trailing_zeros_odd());
        assert!(!to_pell(10).trailing_zeros_odd());
        assert!(!to_pell(0).trailing_zeros_odd());
    }

    #[test]
    fn pell_word_prefix() {
        let w = sturmian_from_pell(8);
        assert_eq!(w.to_string(), "01010010");
        assert_eq!(w.as_slice()[0], 0);
        assert_eq!(w.as_slice()[1], 1);
    }
}
