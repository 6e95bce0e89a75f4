//! Balanced binary words: pruned depth-first enumeration and the classical
//! counting formula used to cross-check it.

use rayon::prelude::*;

use crate::words::BinaryWord;
use crate::{Error, Result};

/// A balanced word that can be grown one symbol at a time.
///
/// For every prefix length `d` it keeps, per window length, the minimum and
/// maximum number of 1s seen so far, so appending a symbol costs `O(d)` and
/// popping is free.
#[derive(Debug, Clone, Default)]
pub struct BalancedBuilder {
    word: Vec<u8>,
    ones: Vec<u32>,
    // row d (prefix length d) holds (min, max) for window lengths 1..=d,
    // stored from offset d(d-1)/2
    bounds: Vec<(u32, u32)>,
}

impl BalancedBuilder {
    pub fn new() -> Self {
        BalancedBuilder { word: Vec::new(), ones: vec![0], bounds: Vec::new() }
    }

    pub fn with_capacity(len: usize) -> Self {
        let mut b = Self::new();
        b.word.reserve(len);
        b.ones.reserve(len);
        b.bounds.reserve(len * (len + 1) / 2);
        b
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.word
    }

    /// Appends `symbol` if the result stays balanced; otherwise leaves the
    /// word untouched and returns `false`.
    pub fn push(&mut self, symbol: u8) -> bool {
        debug_assert!(symbol <= 1);
        let d = self.word.len();
        let total = self.ones[d] + symbol as u32;
        let prev = d * d.saturating_sub(1) / 2;
        let next = (d + 1) * d / 2;
        if self.bounds.len() < next + d + 1 {
            self.bounds.resize(next + d + 1, (0, 0));
        }
        for len in 1..=d {
            let count = total - self.ones[d + 1 - len];
            let (lo, hi) = self.bounds[prev + len - 1];
            let (lo, hi) = (lo.min(count), hi.max(count));
            if hi - lo > 1 {
                return false;
            }
            self.bounds[next + len - 1] = (lo, hi);
        }
        self.bounds[next + d] = (total, total);
        self.word.push(symbol);
        self.ones.push(total);
        true
    }

    pub fn pop(&mut self) -> Option<u8> {
        let s = self.word.pop()?;
        self.ones.pop();
        Some(s)
    }
}

/// Streams the balanced words of a fixed length in lexicographic order.
pub struct BalancedWords {
    target: usize,
    base: usize,
    builder: BalancedBuilder,
    // next symbol to try at each depth; 2 means exhausted
    next_symbol: Vec<u8>,
    at_word: bool,
    done: bool,
}

impl BalancedWords {
    pub fn new(len: usize) -> Self {
        Self::with_prefix(len, &[])
    }

    /// Balanced words of length `len` beginning with `prefix`. Empty when the
    /// prefix is itself unbalanced or longer than `len`.
    pub fn with_prefix(len: usize, prefix: &[u8]) -> Self {
        let mut builder = BalancedBuilder::with_capacity(len);
        let mut done = prefix.len() > len;
        for &s in prefix {
            if done || !builder.push(s) {
                done = true;
                break;
            }
        }
        BalancedWords {
            target: len,
            base: prefix.len(),
            builder,
            next_symbol: vec![0; len + 1],
            at_word: false,
            done,
        }
    }

    /// Advances to the next word and borrows it without allocating.
    pub fn next_slice(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if self.at_word {
            self.at_word = false;
            if self.builder.len() == self.base {
                self.done = true;
                return None;
            }
            self.builder.pop();
        }
        loop {
            let depth = self.builder.len();
            if depth == self.target {
                self.at_word = true;
                return Some(self.builder.as_slice());
            }
            let symbol = self.next_symbol[depth];
            if symbol > 1 {
                if depth == self.base {
                    self.done = true;
                    return None;
                }
                self.builder.pop();
                continue;
            }
            self.next_symbol[depth] = symbol + 1;
            if self.builder.push(symbol) {
                self.next_symbol[depth + 1] = 0;
            }
        }
    }
}

impl Iterator for BalancedWords {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        self.next_slice().map(|w| BinaryWord::from_vec_unchecked(w.to_vec()))
    }
}

pub fn enumerate_balanced(len: usize) -> BalancedWords {
    BalancedWords::new(len)
}

/// Number of integers in `[1, m]` coprime to `m`.
pub fn euler_phi(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut rest = m;
    let mut phi = m;
    let mut f = 2;
    while f * f <= rest {
        if rest.is_multiple_of(f) {
            while rest.is_multiple_of(f) {
                rest /= f;
            }
            phi -= phi / f;
        }
        f += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

/// Closed-form count of balanced binary words of length `n`:
/// `1 + Σ_{i=1..n} (n − i + 1)·φ(i)`.
pub fn balanced_count(n: u64) -> u64 {
    1 + (1..=n).map(|i| (n - i + 1) * euler_phi(i).unwrap()).sum::<u64>()
}

/// Splits the balanced words of length `len` into lexicographically ordered
/// shards keyed by a common prefix, runs `f` on each shard using `jobs`
/// worker threads, and returns the per-shard results in shard order.
///
/// With `jobs <= 1` everything runs on the calling thread as a single shard.
pub fn map_shards<R, F>(len: usize, jobs: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(BalancedWords) -> R + Sync,
{
    if jobs <= 1 {
        return vec![f(BalancedWords::new(len))];
    }
    let mut depth = 0;
    while depth < len && (balanced_count(depth as u64) as usize) < 8 * jobs {
        depth += 1;
    }
    let prefixes: Vec<BinaryWord> = BalancedWords::new(depth).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| f(BalancedWords::with_prefix(len, prefix.as_slice())))
            .collect()
    })
}
