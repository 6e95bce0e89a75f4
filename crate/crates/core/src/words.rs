//! Finite-word primitives: periods, exponents, `e`-powers, balance and
//! factor complexity.
//!
//! Period and power functions are generic over any `Eq` alphabet so that
//! ordinary strings (`b"entente"`) can be examined alongside binary words.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Rational, Result};

/// A finite word over `{0, 1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidSymbol(char::from(b'0'.wrapping_add(bad))));
        }
        Ok(BinaryWord(symbols))
    }

    /// Caller guarantees every symbol is 0 or 1.
    pub(crate) fn from_vec_unchecked(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s <= 1));
        BinaryWord(symbols)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        is_balanced(&self.0)
    }

    pub fn reversed(&self) -> Self {
        BinaryWord(self.0.iter().rev().copied().collect())
    }

    pub fn complemented(&self) -> Self {
        BinaryWord(self.0.iter().map(|&s| 1 - s).collect())
    }
}

impl AsRef<[u8]> for BinaryWord {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Whether `w[i] = w[i + p]` for every `i` in range. Vacuously true when `p >= |w|`.
pub fn has_period<T: Eq>(w: &[T], p: usize) -> Result<bool> {
    if p == 0 {
        return Err(Error::ZeroPeriod);
    }
    Ok(w.len() <= p || w.iter().zip(&w[p..]).all(|(a, b)| a == b))
}

/// Smallest period of a nonempty word, from the longest proper border.
pub fn least_period<T: Eq>(w: &[T]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    // border[i] = length of the longest proper border of w[..=i]
    let mut border = vec![0usize; w.len()];
    for i in 1..w.len() {
        let mut k = border[i - 1];
        while k > 0 && w[i] != w[k] {
            k = border[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        border[i] = k;
    }
    Ok(w.len() - border[w.len() - 1])
}

/// `|w| / per(w)` in lowest terms.
pub fn exponent_of<T: Eq>(w: &[T]) -> Result<Rational> {
    let p = least_period(w)?;
    Rational::new(w.len() as u64, p as u64)
}

/// Whether `⌈e · per(w)⌉ = |w|`.
pub fn is_e_power<T: Eq>(w: &[T], e: Rational) -> Result<bool> {
    e.require_at_least_one()?;
    let p = least_period(w)?;
    Ok(e.ceil_mul(p) == w.len())
}

/// Balance test: for every factor length, the 1-counts of all factors of
/// that length span at most two consecutive values.
pub fn is_balanced(w: &[u8]) -> bool {
    let mut prefix = Vec::with_capacity(w.len() + 1);
    prefix.push(0u32);
    for &s in w {
        prefix.push(prefix.last().unwrap() + s as u32);
    }
    (1..=w.len()).all(|len| {
        let (lo, hi) = prefix
            .windows(len + 1)
            .map(|win| win[len] - win[0])
            .fold((u32::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        hi - lo <= 1
    })
}

/// Number of distinct factors of length `len`.
pub fn subword_complexity<T: Eq + std::hash::Hash>(w: &[T], len: usize) -> Result<usize> {
    if len > w.len() {
        return Err(Error::FactorTooLong { len, word_len: w.len() });
    }
    if len == 0 {
        return Ok(1);
    }
    Ok(w.windows(len).collect::<HashSet<_>>().len())
}

/// Sorted 0-based ending positions of `e`-powers with period at most
/// `max_period` (`None` for unbounded).
pub fn e_power_endings<T: Eq>(w: &[T], e: Rational, max_period: Option<usize>) -> Result<Vec<usize>> {
    Ok(PowerScan::new(e, max_period)?.endings(w))
}

/// An occurrence of a factor of length `⌈e·period⌉` with the given period,
/// identified by the index of its last symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerOccurrence {
    pub end: usize,
    pub period: usize,
    pub length: usize,
}

impl PowerOccurrence {
    pub fn new<T: Eq>(w: &[T], e: Rational, end: usize, period: usize) -> Result<Self> {
        e.require_at_least_one()?;
        if period == 0 {
            return Err(Error::ZeroPeriod);
        }
        let length = e.ceil_mul(period);
        let invalid = Error::InvalidOccurrence { end, period };
        if end >= w.len() || length > end + 1 {
            return Err(invalid);
        }
        if !has_period(&w[end + 1 - length..=end], period)? {
            return Err(invalid);
        }
        Ok(PowerOccurrence { end, period, length })
    }

    pub fn start(&self) -> usize {
        self.end + 1 - self.length
    }
}

/// Scanner for occurrences of factors of length `⌈e·p⌉` having period `p`,
/// for every `p` up to an optional cutoff.
///
/// Such an occurrence ends at `n` exactly when some factor ending at `n` is
/// an `e`-power in the least-period sense, so the two notions mark the same
/// positions.
#[derive(Debug, Clone, Copy)]
pub struct PowerScan {
    e: Rational,
    max_period: Option<usize>,
}

impl PowerScan {
    pub fn new(e: Rational, max_period: Option<usize>) -> Result<Self> {
        e.require_at_least_one()?;
        if max_period == Some(0) {
            return Err(Error::ZeroPeriod);
        }
        Ok(PowerScan { e, max_period })
    }

    pub fn exponent(&self) -> Rational {
        self.e
    }

    pub fn max_period(&self) -> Option<usize> {
        self.max_period
    }

    /// Periods worth scanning in a word of length `n`, paired with the
    /// occurrence length `⌈e·p⌉`.
    fn periods(&self, n: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let cap = self.max_period.unwrap_or(usize::MAX);
        (1..=cap)
            .map(move |p| (p, self.e.ceil_mul(p)))
            .take_while(move |&(_, len)| len <= n)
    }

    pub fn endings<T: Eq>(&self, w: &[T]) -> Vec<usize> {
        let n = w.len();
        // difference array over ending positions
        let mut delta = vec![0i32; n + 1];
        for (p, len) in self.periods(n) {
            let need = len - p;
            if need == 0 {
                delta[p - 1] += 1;
                delta[n] -= 1;
                continue;
            }
            for (a, b) in LongRuns::new(w, p, need) {
                delta[a + need - 1 + p] += 1;
                delta[b + p + 1] -= 1;
            }
        }
        let mut depth = 0;
        let mut out = Vec::new();
        for (i, d) in delta[..n].iter().enumerate() {
            depth += d;
            if depth > 0 {
                out.push(i);
            }
        }
        out
    }

    /// Whether an occurrence ends exactly at index `end`.
    pub fn ends_at<T: Eq>(&self, w: &[T], end: usize) -> bool {
        self.occurrence_at(w, end).is_some()
    }

    /// The smallest-period occurrence ending at `end`, if any.
    pub fn occurrence_at<T: Eq>(&self, w: &[T], end: usize) -> Option<PowerOccurrence> {
        if end >= w.len() {
            return None;
        }
        self.periods(end + 1).find_map(|(p, len)| {
            let start = end + 1 - len;
            let periodic = len == p || (start..=end - p).all(|j| w[j] == w[j + p]);
            periodic.then_some(PowerOccurrence { end, period: p, length: len })
        })
    }

    /// Smallest period of any occurrence in `w`.
    pub fn min_period<T: Eq>(&self, w: &[T]) -> Option<usize> {
        self.periods(w.len())
            .find(|&(p, len)| len == p || LongRuns::new(w, p, len - p).next().is_some())
            .map(|(p, _)| p)
    }
}

/// Maximal runs `[a, b]` of indices `j` with `w[j] = w[j + p]` whose length
/// is at least `min_len`.
///
/// Only every `min_len`-th index is probed; a run long enough to matter must
/// contain a probe, and only probes that hit a match are extended.
struct LongRuns<'a, T> {
    w: &'a [T],
    p: usize,
    min_len: usize,
    limit: usize,
    probe: usize,
}

impl<'a, T: Eq> LongRuns<'a, T> {
    fn new(w: &'a [T], p: usize, min_len: usize) -> Self {
        debug_assert!(min_len >= 1);
        LongRuns { w, p, min_len, limit: w.len().saturating_sub(p), probe: min_len - 1 }
    }

    fn matches(&self, j: usize) -> bool {
        self.w[j] == self.w[j + self.p]
    }
}

impl<T: Eq> Iterator for LongRuns<'_, T> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        while self.probe < self.limit {
            let j = self.probe;
            if !self.matches(j) {
                self.probe += self.min_len;
                continue;
            }
            let mut a = j;
            while a > 0 && self.matches(a - 1) {
                a -= 1;
            }
            let mut b = j;
            while b + 1 < self.limit && self.matches(b + 1) {
                b += 1;
            }
            self.probe = b + 1 + self.min_len;
            if b + 1 - a >= self.min_len {
                return Some((a, b));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn has_period_examples() {
        assert!(has_period(w("0").as_slice(), 1).unwrap());
        assert!(!has_period(w("01").as_slice(), 1).unwrap());
        assert!(has_period(w("0100101").as_slice(), 5).unwrap());
        assert_eq!(has_period(w("01").as_slice(), 0), Err(Error::ZeroPeriod));
    }

    #[test]
    fn least_period_examples() {
        assert_eq!(least_period(b"entente").unwrap(), 3);
        assert_eq!(least_period(w("0000").as_slice()).unwrap(), 1);
        assert_eq!(least_period(w("010010").as_slice()).unwrap(), 3);
        assert_eq!(least_period::<u8>(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponent_of(b"entente").unwrap(), r("7/3"));
        assert_eq!(exponent_of(b"murmur").unwrap(), r("2"));
        assert_eq!(exponent_of(b"0").unwrap(), Rational::ONE);
        assert!(exponent_of::<u8>(&[]).is_err());
    }

    #[test]
    fn e_power_examples() {
        assert!(is_e_power(b"murmur", r("2")).unwrap());
        assert!(is_e_power(b"shshsh", r("3")).unwrap());
        assert!(!is_e_power(w("01").as_slice(), r("2")).unwrap());
        assert!(is_e_power(b"entente", r("7/3")).unwrap());
        assert!(matches!(is_e_power(b"aa", r("1/2")), Err(Error::ExponentBelowOne(_))));
        assert_eq!(is_e_power::<u8>(&[], r("2")), Err(Error::EmptyWord));
    }

    #[test]
    fn balance_examples() {
        assert!(w("0010100101001001").is_balanced());
        assert!(!w("0011").is_balanced());
        assert!(BinaryWord::default().is_balanced());
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(subword_complexity(w("0110").as_slice(), 0).unwrap(), 1);
        assert_eq!(subword_complexity(w("0101").as_slice(), 2).unwrap(), 2);
        assert_eq!(
            subword_complexity(w("01").as_slice(), 3),
            Err(Error::FactorTooLong { len: 3, word_len: 2 })
        );
    }

    #[test]
    fn endings_examples() {
        let three = Rational::integer(3);
        assert_eq!(e_power_endings(w("000000").as_slice(), three, Some(1)).unwrap(), vec![2, 3, 4, 5]);
        assert!(e_power_endings(w("00").as_slice(), three, None).unwrap().is_empty());
        assert!(e_power_endings(w("").as_slice(), three, None).unwrap().is_empty());
        // e = 1: every symbol is a 1-power of period 1
        assert_eq!(e_power_endings(w("0110").as_slice(), Rational::ONE, Some(1)).unwrap(), vec![0, 1, 2, 3]);
        assert!(PowerScan::new(three, Some(0)).is_err());
    }

    #[test]
    fn occurrence_construction() {
        let word = w("0100100");
        let occ = PowerOccurrence::new(word.as_slice(), r("7/3"), 6, 3).unwrap();
        assert_eq!((occ.start(), occ.length), (0, 7));
        assert!(PowerOccurrence::new(word.as_slice(), r("2"), 3, 2).is_err());
        assert!(PowerOccurrence::new(word.as_slice(), r("3"), 1, 1).is_err());
        assert!(PowerOccurrence::new(word.as_slice(), r("3"), 9, 1).is_err());
    }

    #[test]
    fn occurrence_at_prefers_small_periods() {
        let word = w("000000");
        let scan = PowerScan::new(Rational::integer(2), None).unwrap();
        assert_eq!(scan.occurrence_at(word.as_slice(), 5), Some(PowerOccurrence { end: 5, period: 1, length: 2 }));
        assert_eq!(scan.occurrence_at(word.as_slice(), 0), None);
        assert_eq!(scan.min_period(w("0110").as_slice()), Some(1));
        assert_eq!(scan.min_period(w("0101").as_slice()), Some(2));
        assert_eq!(scan.min_period(w("011").as_slice()), Some(1));
        assert_eq!(scan.min_period(w("010").as_slice()), None);
    }

    #[test]
    fn parse_rejects_other_symbols() {
        assert_eq!("012".parse::<BinaryWord>(), Err(Error::InvalidSymbol('2')));
        assert!(BinaryWord::new(vec![0, 2]).is_err());
    }
}
