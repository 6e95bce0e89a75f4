//! `sturmlab`: command-line access to power detection, balanced-word
//! censuses, Sturmian generators and Pell numeration.

mod render;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use sturmian_core::balanced::{balanced_count, enumerate_balanced};
use sturmian_core::gaps::{
    gap_report, max_gap_over_balanced, minimal_universal_length, period_bound, prefix_gap_census,
    witness_without_e_power, DEFAULT_LENGTH_CAP,
};
use sturmian_core::pell::{pell_numbers, sturmian_from_pell, to_pell};
use sturmian_core::sturmian::{fibonacci_word, mechanical_word};
use sturmian_core::verify::{self, Claim, DEFAULT_PREFIX_LEN};
use sturmian_core::words::{exponent_of, least_period, subword_complexity};
use sturmian_core::{BinaryWord, PellRepresentation, PowerScan, QuadraticIrrational, Rational};

use render::{join, opt, set, Format, Rendered};

#[derive(Parser)]
#[command(name = "sturmlab", version, about = "Powers, gaps and numeration in Sturmian and balanced words")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    /// Worker threads for balanced-word censuses
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Balanced binary words
    #[command(subcommand)]
    Balanced(BalancedCmd),
    /// Periods, exponents and power endings of a word
    #[command(subcommand)]
    Powers(PowersCmd),
    /// Gaps between consecutive power endings
    #[command(subcommand)]
    Gaps(GapsCmd),
    /// Word generators
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Pell (Ostrowski) numeration
    #[command(subcommand)]
    Numeration(NumerationCmd),
    /// Reproduce published claims
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum BalancedCmd {
    /// Number of balanced words of length n, by enumeration and by formula
    Count { n: usize },
    /// All balanced words of length n in lexicographic order
    List { n: usize },
}

#[derive(Args)]
struct PowerArgs {
    /// Binary word, or a path to a file holding one
    #[arg(long)]
    word: String,
    /// Exponent as num/den
    #[arg(long = "exp")]
    exp: Rational,
    #[arg(long)]
    max_period: Option<usize>,
}

#[derive(Subcommand)]
enum PowersCmd {
    /// Ending positions of e-powers
    Endings(PowerArgs),
    /// Least period, exponent and balance of a word over any alphabet
    Info {
        #[arg(long)]
        word: String,
    },
    /// Number of distinct factors of each length up to --max-len
    Complexity {
        #[arg(long)]
        word: String,
        #[arg(long)]
        max_len: usize,
    },
}

#[derive(Args)]
struct SlopeArgs {
    /// Slope as (a+b*sqrt(d))/c, or `sqrt2-1`, `fib`
    #[arg(long, value_parser = parse_slope)]
    slope: QuadraticIrrational,
    /// Intercept as (a+b*sqrt(d))/c
    #[arg(long, value_parser = parse_slope)]
    intercept: Option<QuadraticIrrational>,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum GapsCmd {
    /// Gap report for a single word
    Word(PowerArgs),
    /// Largest gap over all balanced words of one length
    Census {
        #[arg(long)]
        length: usize,
        #[arg(long = "exp")]
        exp: Rational,
        #[arg(long)]
        max_period: usize,
    },
    /// Distinct gaps in a prefix of a mechanical word
    Prefix {
        #[command(flatten)]
        slope: SlopeArgs,
        #[arg(long = "exp")]
        exp: Rational,
        #[arg(long)]
        max_period: Option<usize>,
        #[arg(long)]
        len: usize,
    },
    /// Smallest length at which every balanced word contains an e-power
    Universal {
        #[arg(long = "exp")]
        exp: Rational,
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
    },
    /// Tightest period cutoff for e-powers in balanced words of one length
    PeriodBound {
        #[arg(long = "exp")]
        exp: Rational,
        #[arg(long)]
        length: usize,
    },
    /// Least balanced word of a length without an e-power
    Witness {
        #[arg(long = "exp")]
        exp: Rational,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum GenerateCmd {
    /// Mechanical word of a quadratic irrational slope
    Mechanical {
        #[command(flatten)]
        slope: SlopeArgs,
        #[arg(long)]
        len: usize,
        /// Write the word to this file instead of stdout
        #[arg(long)]
        output: Option<String>,
    },
    /// Fixed point of 0 -> 01, 1 -> 0
    Fibonacci {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        output: Option<String>,
    },
    /// Slope sqrt(2)-1 word from Pell trailing-zero parity
    PellWord {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum NumerationCmd {
    ToPell { m: u64 },
    FromPell { digits: String },
    /// The first k Pell numbers
    PellNumbers { k: usize },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Lemma1,
    Theorem1 {
        #[arg(long, default_value_t = DEFAULT_PREFIX_LEN)]
        prefix_len: usize,
    },
    Rampersad {
        #[arg(long, default_value_t = DEFAULT_PREFIX_LEN)]
        prefix_len: usize,
    },
    Table1 {
        #[arg(long, default_value_t = DEFAULT_PREFIX_LEN)]
        prefix_len: usize,
    },
    All {
        #[arg(long, default_value_t = DEFAULT_PREFIX_LEN)]
        prefix_len: usize,
    },
}

fn parse_slope(s: &str) -> Result<QuadraticIrrational, String> {
    match s {
        "sqrt2-1" => Ok(QuadraticIrrational::sqrt2_minus_1()),
        "fib" => Ok(QuadraticIrrational::fibonacci_slope()),
        _ => s.parse().map_err(|e: sturmian_core::Error| e.to_string()),
    }
}

type CliResult<T> = Result<T, String>;

/// Command output plus whether every claim it checked held.
struct Outcome {
    rendered: Rendered,
    verified: bool,
}

impl From<Rendered> for Outcome {
    fn from(rendered: Rendered) -> Self {
        Outcome { rendered, verified: true }
    }
}

fn load_word(arg: &str) -> CliResult<BinaryWord> {
    if arg.chars().all(|c| c == '0' || c == '1') {
        return arg.parse().map_err(|e: sturmian_core::Error| e.to_string());
    }
    let text = fs::read_to_string(arg).map_err(|e| format!("cannot read word file {arg}: {e}"))?;
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    text.parse().map_err(|e: sturmian_core::Error| format!("{arg}: {e}"))
}

fn emit_word(word: &BinaryWord, output: Option<&str>) -> CliResult<Rendered> {
    match output {
        Some(path) => {
            let mut file = fs::File::create(path).map_err(|e| format!("cannot create {path}: {e}"))?;
            writeln!(file, "{word}").map_err(|e| format!("cannot write {path}: {e}"))?;
            Ok(Rendered::new(format!("wrote {} symbols to {path}", word.len()), json!({"length": word.len(), "path": path})))
        }
        None => Ok(Rendered::new(word.to_string(), json!({"word": word}))),
    }
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn run_balanced(cmd: BalancedCmd) -> CliResult<Rendered> {
    Ok(match cmd {
        BalancedCmd::Count { n } => {
            let counted = enumerate_balanced(n).count() as u64;
            let formula = balanced_count(n as u64);
            Rendered::new(counted.to_string(), json!({"n": n, "count": counted, "formula": formula}))
                .table(vec!["n", "count", "formula"], vec![vec![n.to_string(), counted.to_string(), formula.to_string()]])
        }
        BalancedCmd::List { n } => {
            let words: Vec<String> = enumerate_balanced(n).map(|w| w.to_string()).collect();
            let rows = words.iter().map(|w| vec![w.clone()]).collect();
            Rendered::new(words.join("\n"), json!({"n": n, "words": words})).table(vec!["word"], rows)
        }
    })
}

fn run_powers(cmd: PowersCmd) -> CliResult<Rendered> {
    Ok(match cmd {
        PowersCmd::Endings(args) => {
            let word = load_word(&args.word)?;
            let scan = PowerScan::new(args.exp, args.max_period).map_err(err)?;
            let endings = scan.endings(word.as_slice());
            let occurrences: Vec<_> = endings.iter().filter_map(|&n| scan.occurrence_at(word.as_slice(), n)).collect();
            let rows = occurrences
                .iter()
                .map(|o| vec![o.end.to_string(), o.period.to_string(), o.length.to_string()])
                .collect();
            Rendered::new(join(&endings, " "), json!({"e": args.exp, "endings": endings, "occurrences": occurrences}))
                .table(vec!["end", "period", "length"], rows)
        }
        PowersCmd::Info { word } => {
            let chars: Vec<char> = word.chars().collect();
            let period = least_period(&chars).map_err(err)?;
            let exponent = exponent_of(&chars).map_err(err)?;
            let balanced = word.parse::<BinaryWord>().ok().map(|w| w.is_balanced());
            let plain = format!("period {period}\nexponent {exponent}\nbalanced {}", opt(balanced));
            Rendered::new(plain, json!({"word": word, "period": period, "exponent": exponent, "balanced": balanced}))
                .table(
                    vec!["word", "period", "exponent", "balanced"],
                    vec![vec![word.clone(), period.to_string(), exponent.to_string(), opt(balanced)]],
                )
        }
        PowersCmd::Complexity { word, max_len } => {
            let word = load_word(&word)?;
            let counts = (0..=max_len)
                .map(|l| subword_complexity(word.as_slice(), l))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            let rows = counts.iter().enumerate().map(|(l, c)| vec![l.to_string(), c.to_string()]).collect();
            Rendered::new(join(&counts, " "), json!({"complexity": counts})).table(vec!["length", "factors"], rows)
        }
    })
}

fn gap_row(census: &sturmian_core::gaps::GapCensus) -> Vec<String> {
    vec![
        census.length.to_string(),
        census.e.to_string(),
        census.max_period.to_string(),
        census.words.to_string(),
        census.max_gap.to_string(),
        census.witness.to_string(),
        census.min_endings.to_string(),
    ]
}

const CENSUS_HEADER: [&str; 7] = ["length", "e", "max_period", "words", "max_gap", "witness", "min_endings"];

fn run_gaps(cmd: GapsCmd, jobs: usize) -> CliResult<Rendered> {
    Ok(match cmd {
        GapsCmd::Word(args) => {
            let word = load_word(&args.word)?;
            let report = gap_report(word.as_slice(), args.exp, args.max_period).map_err(err)?;
            let plain = format!(
                "endings {}\ngaps {}\nmax_gap {}",
                join(&report.endings, " "),
                join(&report.gaps, " "),
                opt(report.max_gap)
            );
            let rows = report
                .endings
                .iter()
                .enumerate()
                .map(|(i, e)| vec![e.to_string(), opt(i.checked_sub(1).map(|j| report.gaps[j]))])
                .collect();
            Rendered::new(plain, &report).table(vec!["end", "gap"], rows)
        }
        GapsCmd::Census { length, exp, max_period } => {
            let census = max_gap_over_balanced(length, exp, max_period, jobs).map_err(err)?;
            let plain = format!(
                "words {}\nmax_gap {}\nwitness {}\nmin_endings {}",
                census.words, census.max_gap, census.witness, census.min_endings
            );
            Rendered::new(plain, &census).table(CENSUS_HEADER.to_vec(), vec![gap_row(&census)])
        }
        GapsCmd::Prefix { slope, exp, max_period, len } => {
            let intercept = slope.intercept.unwrap_or_else(QuadraticIrrational::zero);
            let gaps = prefix_gap_census(&slope.slope, &intercept, exp, max_period, len).map_err(err)?;
            let rows = gaps.iter().map(|g| vec![g.to_string(), to_pell(*g as u64).to_string()]).collect();
            Rendered::new(
                set(&gaps),
                json!({"slope": slope.slope, "intercept": intercept, "e": exp, "len": len, "gaps": gaps}),
            )
            .table(vec!["gap", "pell"], rows)
        }
        GapsCmd::Universal { exp, cap } => match minimal_universal_length(exp, cap).map_err(err)? {
            Some(u) => Rendered::new(format!("n {}\nwitness {}", u.n, u.witness), &u)
                .table(vec!["e", "n", "witness"], vec![vec![exp.to_string(), u.n.to_string(), u.witness.to_string()]]),
            None => Rendered::new(format!("not found up to {cap}"), json!({"e": exp, "cap": cap, "n": null}))
                .table(vec!["e", "n", "witness"], vec![vec![exp.to_string(), "-".into(), "-".into()]]),
        },
        GapsCmd::PeriodBound { exp, length } => {
            let bound = period_bound(exp, length, jobs).map_err(err)?;
            Rendered::new(format!("p {}\nwitness {}", bound.p, bound.witness), &bound)
                .table(vec!["e", "length", "p", "witness"], vec![vec![
                    exp.to_string(),
                    length.to_string(),
                    bound.p.to_string(),
                    bound.witness.to_string(),
                ]])
        }
        GapsCmd::Witness { exp, length } => {
            let witness = witness_without_e_power(exp, length).map_err(err)?;
            Rendered::new(opt(witness.as_ref()), json!({"e": exp, "length": length, "witness": witness}))
                .table(vec!["e", "length", "witness"], vec![vec![exp.to_string(), length.to_string(), opt(witness.as_ref())]])
        }
    })
}

fn run_generate(cmd: GenerateCmd) -> CliResult<Rendered> {
    match cmd {
        GenerateCmd::Mechanical { slope, len, output } => {
            let intercept = slope.intercept.unwrap_or_else(QuadraticIrrational::zero);
            let word = mechanical_word(&slope.slope, &intercept, len).map_err(err)?;
            emit_word(&word, output.as_deref())
        }
        GenerateCmd::Fibonacci { len, output } => emit_word(&fibonacci_word(len), output.as_deref()),
        GenerateCmd::PellWord { len, output } => emit_word(&sturmian_from_pell(len), output.as_deref()),
    }
}

fn run_numeration(cmd: NumerationCmd) -> CliResult<Rendered> {
    Ok(match cmd {
        NumerationCmd::ToPell { m } => {
            let rep = to_pell(m);
            Rendered::new(rep.to_string(), json!({"m": m, "pell": rep}))
        }
        NumerationCmd::FromPell { digits } => {
            let rep: PellRepresentation = digits.parse().map_err(err)?;
            let m = rep.value().map_err(err)?;
            Rendered::new(m.to_string(), json!({"pell": rep, "m": m}))
        }
        NumerationCmd::PellNumbers { k } => {
            let ps = pell_numbers(k).map_err(err)?;
            Rendered::new(join(&ps, " "), json!({"pell_numbers": ps}))
        }
    })
}

fn claims_outcome(claims: Vec<Claim>) -> Outcome {
    let plain = claims
        .iter()
        .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.detail))
        .collect::<Vec<_>>()
        .join("\n");
    let rows = claims.iter().map(|c| vec![c.id.to_string(), c.passed.to_string(), c.detail.clone()]).collect();
    let verified = claims.iter().all(|c| c.passed);
    Outcome { rendered: Rendered::new(plain, &claims).table(vec!["claim", "passed", "detail"], rows), verified }
}

fn run_verify(cmd: VerifyCmd, jobs: usize) -> CliResult<Outcome> {
    Ok(match cmd {
        VerifyCmd::Lemma1 => claims_outcome(vec![verify::lemma1(jobs).map_err(err)?]),
        VerifyCmd::Theorem1 { prefix_len } => claims_outcome(vec![
            verify::theorem1_census(jobs).map_err(err)?,
            verify::slope_gap_set(prefix_len).map_err(err)?,
        ]),
        VerifyCmd::Rampersad { prefix_len } => claims_outcome(vec![verify::rampersad(prefix_len).map_err(err)?]),
        VerifyCmd::Table1 { prefix_len } => {
            let (claim, rows) = verify::table1(prefix_len, jobs).map_err(err)?;
            let mut plain = String::from("e\tn\tp\tg\tgamma\tstatus\n");
            let mut table = Vec::new();
            for r in &rows {
                let status = if r.status.all_match() { "match" } else { "mismatch" };
                plain.push_str(&format!("{}\t{}\t{}\t{}\t{}\t{status}\n", r.e, opt(r.n), opt(r.p), opt(r.g), r.gamma));
                table.push(vec![r.e.to_string(), opt(r.n), opt(r.p), opt(r.g), r.gamma.to_string(), status.to_string()]);
            }
            plain.push_str(&format!("{} table1: {}", if claim.passed { "PASS" } else { "FAIL" }, claim.detail));
            Outcome {
                rendered: Rendered::new(plain, &rows).table(vec!["e", "n", "p", "g", "gamma", "status"], table),
                verified: claim.passed,
            }
        }
        VerifyCmd::All { prefix_len } => claims_outcome(verify::all(prefix_len, jobs).map_err(err)?),
    })
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let jobs = cli.jobs as usize;
    match cli.command {
        Command::Balanced(cmd) => run_balanced(cmd).map(Outcome::from),
        Command::Powers(cmd) => run_powers(cmd).map(Outcome::from),
        Command::Gaps(cmd) => run_gaps(cmd, jobs).map(Outcome::from),
        Command::Generate(cmd) => run_generate(cmd).map(Outcome::from),
        Command::Numeration(cmd) => run_numeration(cmd).map(Outcome::from),
        Command::Verify(cmd) => run_verify(cmd, jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.rendered.to_string(format));
            if outcome.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
