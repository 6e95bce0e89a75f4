//! Reproducible checks of the published claims, each returning a pass/fail
//! verdict with a one-line summary. The CLI `verify` commands print these.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::balanced::{balanced_count, enumerate_balanced};
use crate::gaps::{max_gap_over_balanced, period_bound, prefix_gap_census, table1_verify, witness_without_e_power, RowCheck};
use crate::pell::{from_pell, sturmian_from_pell, to_pell};
use crate::sturmian::{fibonacci_word, mechanical_word, QuadraticIrrational};
use crate::words::{is_balanced, is_e_power, subword_complexity, BinaryWord, PowerScan};
use crate::{Rational, Result};

pub const DEFAULT_PREFIX_LEN: usize = 100_000;

/// Exponents exercised by the exhaustive oracle comparison.
pub const SAMPLE_EXPONENTS: [&str; 7] = ["2", "5/2", "8/3", "3", "16/5", "23/7", "10/3"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    fn new(id: &'static str, passed: bool, detail: String) -> Self {
        Claim { id, passed, detail }
    }
}

fn cube() -> Rational {
    Rational::integer(3)
}

fn set_text(s: &BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

pub fn enumeration_counts() -> Claim {
    let c17 = enumerate_balanced(17).count() as u64;
    let c32 = enumerate_balanced(32).count() as u64;
    let first_bad = (0..=30u64).find(|&n| enumerate_balanced(n as usize).count() as u64 != balanced_count(n));
    let passed = c17 == 594 && c32 == 3650 && first_bad.is_none();
    let detail = match first_bad {
        None => format!("B(17)={c17} B(32)={c32}; formula agrees for n<=30"),
        Some(n) => format!("B(17)={c17} B(32)={c32}; formula disagrees at n={n}"),
    };
    Claim::new("enumeration-counts", passed, detail)
}

pub fn lemma1(jobs: usize) -> Result<Claim> {
    let scan = PowerScan::new(cube(), Some(5))?;
    let uncovered = enumerate_balanced(17).filter(|w| scan.endings(w.as_slice()).is_empty()).count();
    let sample: BinaryWord = "0010100101001001".parse()?;
    let sample_ok = sample.is_balanced() && PowerScan::new(cube(), None)?.endings(sample.as_slice()).is_empty();
    let witness = witness_without_e_power(cube(), 16)?;
    let bound = period_bound(cube(), 17, jobs)?.p;
    let passed = uncovered == 0 && sample_ok && witness.is_some() && bound == 5;
    let witness_text = witness.map_or_else(|| "none".to_string(), |w| w.to_string());
    let detail = format!(
        "length-17 words without a period<=5 cube: {uncovered}; period cutoff {bound}; \
         {sample} balanced and cube-free: {sample_ok}; least cube-free length-16 word {witness_text}"
    );
    Ok(Claim::new("lemma1", passed, detail))
}

pub fn theorem1_census(jobs: usize) -> Result<Claim> {
    let census = max_gap_over_balanced(32, cube(), 5, jobs)?;
    let passed = census.max_gap == 10 && census.min_endings >= 2 && census.words == 3650;
    let detail = format!(
        "{} balanced words of length 32; max gap {} (witness {}); fewest cube endings {}",
        census.words, census.max_gap, census.witness, census.min_endings
    );
    Ok(Claim::new("theorem1-census", passed, detail))
}

pub fn slope_gap_set(prefix_len: usize) -> Result<Claim> {
    let gaps = prefix_gap_census(
        &QuadraticIrrational::sqrt2_minus_1(),
        &QuadraticIrrational::zero(),
        cube(),
        None,
        prefix_len,
    )?;
    let passed = gaps == BTreeSet::from([1, 7, 10]);
    let pell: Vec<String> = gaps.iter().map(|&g| to_pell(g as u64).to_string()).collect();
    let detail = format!("slope sqrt2-1, prefix {prefix_len}: gaps {} (Pell {})", set_text(&gaps), pell.join(","));
    Ok(Claim::new("slope-gap-set", passed, detail))
}

pub fn rampersad(prefix_len: usize) -> Result<Claim> {
    let word = fibonacci_word(prefix_len);
    let endings = PowerScan::new(cube(), None)?.endings(word.as_slice());
    let gaps: BTreeSet<usize> = endings.windows(2).map(|p| p[1] - p[0]).collect();
    let allowed = BTreeSet::from([1, 2, 3, 4, 8, 9]);
    let first: Vec<usize> = endings.iter().take(5).copied().collect();
    let passed = gaps.is_subset(&allowed) && gaps.last() == Some(&9) && first == [13, 22, 23, 26, 34];
    let detail = format!("Fibonacci prefix {prefix_len}: first cube endings {first:?}; gaps {}", set_text(&gaps));
    Ok(Claim::new("rampersad", passed, detail))
}

pub fn table1(prefix_len: usize, jobs: usize) -> Result<(Claim, Vec<RowCheck>)> {
    let rows = table1_verify(prefix_len, jobs)?;
    let failed: Vec<String> = rows.iter().filter(|r| !r.status.all_match()).map(|r| r.e.to_string()).collect();
    let detail = if failed.is_empty() {
        format!("all {} rows reproduced (prefix {prefix_len})", rows.len())
    } else {
        format!("mismatched rows: {}", failed.join(", "))
    };
    Ok((Claim::new("table1", failed.is_empty(), detail), rows))
}

pub fn generator_agreement(len: usize) -> Result<Claim> {
    let zero = QuadraticIrrational::zero();
    let pell_ok = mechanical_word(&QuadraticIrrational::sqrt2_minus_1(), &zero, len)? == sturmian_from_pell(len);
    let fib_ok = mechanical_word(&QuadraticIrrational::fibonacci_slope(), &zero, len)? == fibonacci_word(len);
    let detail = format!("length {len}: sqrt2-1 vs Pell word {pell_ok}; Fibonacci slope vs morphism {fib_ok}");
    Ok(Claim::new("generator-agreement", pell_ok && fib_ok, detail))
}

pub fn numeration(limit: u64) -> Result<Claim> {
    let mut round_trip = true;
    let mut ordered = true;
    let mut prev = to_pell(0);
    for m in 0..=limit {
        let rep = to_pell(m);
        round_trip &= from_pell(&rep)? == m;
        if m > 0 {
            let (a, b) = (prev.digits(), rep.digits());
            ordered &= (a.len(), a) < (b.len(), b);
        }
        prev = rep;
    }
    let seven = to_pell(7).to_string();
    let ten = to_pell(10).to_string();
    let passed = round_trip && ordered && seven == "110" && ten == "200";
    let detail = format!("m<={limit}: round trip {round_trip}, shortlex order {ordered}; 7 -> {seven}, 10 -> {ten}");
    Ok(Claim::new("numeration", passed, detail))
}

fn brute_endings(w: &[u8], e: Rational) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for end in 0..w.len() {
        for start in 0..=end {
            if is_e_power(&w[start..=end], e)? {
                out.push(end);
                break;
            }
        }
    }
    Ok(out)
}

fn brute_balanced(w: &[u8]) -> bool {
    let ones = |s: &[u8]| s.iter().filter(|&&b| b == 1).count() as i64;
    (1..=w.len()).all(|len| {
        w.windows(len).all(|x| w.windows(len).all(|y| (ones(x) - ones(y)).abs() <= 1))
    })
}

fn all_words(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << len).map(move |bits| (0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect())
}

/// Exhaustive comparison of the power scan and balance test with their
/// definitions, over all binary words up to the given lengths.
pub fn oracle_equivalence(power_len: usize, balance_len: usize) -> Result<Claim> {
    let mut power_mismatch = None;
    'outer: for e in SAMPLE_EXPONENTS {
        let e: Rational = e.parse()?;
        let scan = PowerScan::new(e, None)?;
        for len in 0..=power_len {
            for w in all_words(len) {
                if scan.endings(&w) != brute_endings(&w, e)? {
                    power_mismatch = Some((e, w));
                    break 'outer;
                }
            }
        }
    }
    let balance_mismatch = (0..=balance_len).flat_map(all_words).find(|w| is_balanced(w) != brute_balanced(w));
    let passed = power_mismatch.is_none() && balance_mismatch.is_none();
    let detail = match (power_mismatch, balance_mismatch) {
        (None, None) => format!("endings agree up to length {power_len}; balance agrees up to length {balance_len}"),
        (Some((e, w)), _) => format!("endings differ for e={e} on {}", BinaryWord::new(w)?),
        (_, Some(w)) => format!("balance differs on {}", BinaryWord::new(w)?),
    };
    Ok(Claim::new("oracle-equivalence", passed, detail))
}

pub fn sturmian_sanity(len: usize, max_factor: usize) -> Result<Claim> {
    let zero = QuadraticIrrational::zero();
    let mut slopes: Vec<QuadraticIrrational> = crate::gaps::published_rows().into_iter().map(|r| r.gamma).collect();
    slopes.push(QuadraticIrrational::fibonacci_slope());
    slopes.dedup();
    let mut bad = Vec::new();
    for gamma in &slopes {
        let word = mechanical_word(gamma, &zero, len)?;
        let complexity_ok = (0..=max_factor).all(|l| subword_complexity(word.as_slice(), l) == Ok(l + 1));
        if !word.is_balanced() || !complexity_ok {
            bad.push(gamma.to_string());
        }
    }
    let detail = if bad.is_empty() {
        format!("{} slopes, prefixes of length {len}: balanced with complexity l+1 for l<={max_factor}", slopes.len())
    } else {
        format!("failing slopes: {}", bad.join(", "))
    };
    Ok(Claim::new("sturmian-sanity", bad.is_empty(), detail))
}

/// Every check, in acceptance order.
pub fn all(prefix_len: usize, jobs: usize) -> Result<Vec<Claim>> {
    Ok(vec![
        enumeration_counts(),
        lemma1(jobs)?,
        theorem1_census(jobs)?,
        slope_gap_set(prefix_len)?,
        rampersad(prefix_len)?,
        table1(prefix_len, jobs)?.0,
        generator_agreement(10_000)?,
        numeration(100_000)?,
        oracle_equivalence(14, 12)?,
        sturmian_sanity(10_000, 20)?,
    ])
}
