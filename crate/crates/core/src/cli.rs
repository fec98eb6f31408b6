//! Command-line front end. The `lrclcd` binary parses [`Cli`] and hands it
//! to [`execute`]; errors map to exit code 2 (rejected input) or 1
//! (internal failure).

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    build_report, report_constructed, verify_locality, CodeReport, DEFAULT_DISTANCE_BUDGET,
};
use crate::constructions::{
    build_family, parameter_search, Constructed, Family, LrcParams, SEARCH_CSV_HEADER,
};
use crate::cosets::{cyclotomic_coset, multiplicative_order, DefiningSet};
use crate::cyclic::{CodeOptions, CyclicCode};
use crate::error::{Error, Result};
use crate::fixtures::fixture;
use crate::galois::{prime_power, FieldCtx};
use crate::repair::simulate;

#[derive(Debug, Parser)]
#[command(
    name = "lrclcd",
    version,
    about = "Construct and verify cyclic LRC codes with complementary duals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Cap on q^k for exhaustive distance computation.
    #[arg(long, global = true, default_value_t = DEFAULT_DISTANCE_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code from a family and report on it.
    Construct(FamilyArgs),
    /// Report on a code given as a JSON descriptor file.
    Verify {
        #[arg(long)]
        file: std::path::PathBuf,
    },
    /// Rebuild a reference parameter set and check its stated properties.
    Example {
        #[arg(value_parser = ["3.1", "3.2", "3.3", "3.4", "3.5a", "3.5b"])]
        id: String,
    },
    /// List admissible parameters.
    Search {
        #[arg(long)]
        q: u64,
        /// Length or inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Locality or inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        r: RangeInclusive<usize>,
    },
    /// Simulate single-erasure repair on a family-built code.
    Repair {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Show a cyclotomic coset and its negation.
    Coset {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// One of c1, c2, tb, t33, t34.
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long)]
    pub r: usize,
    /// Extension degree for the binary families (n = 2^m - 1).
    #[arg(long)]
    pub m: Option<u32>,
    /// Extra coset representatives for c2, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub extras: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    pub ell: usize,
    #[arg(long, default_value_t = 1)]
    pub b: usize,
}

impl FamilyArgs {
    pub fn build(&self) -> Result<Constructed> {
        let family: Family = self.family.parse()?;
        build_family(
            family,
            self.q,
            self.n,
            self.k,
            self.r,
            self.m,
            self.extras.as_deref(),
            self.ell,
            self.b,
        )
    }
}

pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(parse(a)?..=parse(b)?)
        }
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

/// Input for `verify`: `{q, m?, n, modulus?, defining_set, r?}`. A report
/// written by `construct` is accepted as is.
#[derive(Debug, Clone, Deserialize)]
pub struct CodeDescriptor {
    pub q: u64,
    pub m: Option<u32>,
    pub n: usize,
    pub modulus: Option<Vec<u32>>,
    pub defining_set: Vec<usize>,
    #[serde(default, alias = "r_claimed")]
    pub r: Option<usize>,
}

impl CodeDescriptor {
    pub fn build(&self) -> Result<CyclicCode> {
        let (p, e) = prime_power(self.q).ok_or_else(|| {
            Error::ParameterViolation(format!("q = {} is not a prime power", self.q))
        })?;
        let ord = multiplicative_order(self.q, self.n)?;
        if let Some(m) = self.m {
            if m != ord {
                return Err(Error::ParameterViolation(format!(
                    "m = {m} but the splitting field of x^{} - 1 over GF({}) has degree {ord}",
                    self.n, self.q
                )));
            }
        }
        if let Some(&i) = self.defining_set.iter().find(|&&i| i >= self.n) {
            return Err(Error::ExponentOutOfRange {
                exponent: i,
                n: self.n,
            });
        }
        let base = Arc::new(FieldCtx::new(p, e, None)?);
        let opts = CodeOptions {
            splitting_modulus: if ord > 1 { self.modulus.clone() } else { None },
            ..CodeOptions::default()
        };
        let z = DefiningSet::new(self.n, self.defining_set.iter().copied());
        CyclicCode::with_options(base, self.n, z, &opts)
    }
}

#[derive(Debug, Serialize)]
struct CosetOutput {
    a: usize,
    coset: Vec<usize>,
    n: usize,
    negation: Vec<usize>,
    negation_is_coset: bool,
    q: u64,
    self_negating: bool,
}

fn report_text(r: &CodeReport) -> String {
    let mut s = String::new();
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    let _ = writeln!(s, "field        {}", r.field);
    if let Some(f) = r.family {
        let _ = writeln!(s, "family       {f}");
    }
    let _ = writeln!(s, "q n k        {} {} {}", r.q, r.n, r.k);
    let _ = writeln!(
        s,
        "locality     claimed {} verified {}",
        opt(r.r_claimed),
        opt(r.r_verified)
    );
    let _ = writeln!(
        s,
        "lcd          {} (self-reciprocal {}, negation-closed {}, hull trivial {}, q^l=-1 {})",
        r.lcd.is_lcd,
        r.lcd.self_reciprocal,
        r.lcd.negation_closed,
        r.lcd.hull_trivial,
        r.lcd.q_power_condition
    );
    let d_true = match &r.d_true {
        crate::analysis::Distance::Exact(d) => d.to_string(),
        crate::analysis::Distance::Unavailable(why) => format!("unavailable ({why})"),
    };
    let _ = writeln!(
        s,
        "distance     {} <= d <= {}; exact {}",
        r.d_lower, r.d_upper, d_true
    );
    let _ = writeln!(s, "optimality   {}", r.optimality);
    let _ = writeln!(
        s,
        "defining set {}",
        r.defining_set
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let _ = writeln!(
        s,
        "g            {}",
        r.g.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    for note in &r.notes {
        let _ = writeln!(s, "note         {note}");
    }
    s
}

fn render_report(r: &CodeReport, format: Option<Format>) -> String {
    match format {
        Some(Format::Text) => report_text(r),
        _ => r.to_json() + "\n",
    }
}

/// Runs one command and returns what it prints.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Construct(args) => {
            let c = args.build()?;
            let report = report_constructed(&c, cli.budget)?;
            Ok(render_report(&report, cli.format))
        }
        Command::Verify { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::ParameterViolation(format!("{}: {e}", file.display())))?;
            let desc: CodeDescriptor = serde_json::from_str(&text)
                .map_err(|e| Error::ParameterViolation(format!("bad descriptor: {e}")))?;
            let code = desc.build()?;
            let claimed = desc.r.map(|r| LrcParams::new(desc.q, desc.n, code.k(), r));
            let report = build_report(&code, claimed.as_ref(), cli.budget)?;
            Ok(render_report(&report, cli.format))
        }
        Command::Example { id } => {
            let report = fixture(id)?.reproduce(cli.budget)?;
            Ok(render_report(&report, cli.format))
        }
        Command::Search { q, n, r } => {
            let rows = parameter_search(*q, n.clone(), r.clone());
            match cli.format {
                Some(Format::Json) => {
                    Ok(serde_json::to_string_pretty(&rows).expect("rows serialise") + "\n")
                }
                _ => {
                    let mut s = String::from(SEARCH_CSV_HEADER);
                    s.push('\n');
                    for row in &rows {
                        s.push_str(&row.csv());
                        s.push('\n');
                    }
                    Ok(s)
                }
            }
        }
        Command::Repair {
            family,
            trials,
            seed,
        } => {
            let c = family.build()?;
            let profile = verify_locality(&c.code, c.params.r)?;
            let stats = simulate(&c.code, &profile, *trials, *seed)?;
            Ok(stats.to_json() + "\n")
        }
        Command::Coset { a, n, q } => {
            let coset = cyclotomic_coset(*a, *n, *q)?;
            let set = DefiningSet::new(*n, coset.members.iter().copied());
            let negation = set.negate();
            let neg_coset = cyclotomic_coset((n - a) % n, *n, *q)?;
            let out = CosetOutput {
                a: *a,
                n: *n,
                q: *q,
                negation_is_coset: negation.to_vec() == neg_coset.members,
                self_negating: negation == set,
                coset: coset.members,
                negation: negation.to_vec(),
            };
            Ok(serde_json::to_string_pretty(&out).expect("coset serialises") + "\n")
        }
    }
}
