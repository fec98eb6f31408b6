//! Single-erasure repair from local checks, and a seeded repair simulator.

use std::cell::RefCell;

use serde::Serialize;

use crate::analysis::LrcProfile;
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::galois::{FieldElement, Symbol};

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then two xor-shift-multiply
/// rounds. Draws below a bound `b` are `next_u64() % b`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// A received word with exactly one erased coordinate. Reads are logged.
#[derive(Debug)]
pub struct ErasurePattern {
    erased: usize,
    word: Vec<Symbol>,
    reads: RefCell<Vec<usize>>,
}

impl ErasurePattern {
    /// Drops `codeword[erased]`.
    pub fn new(codeword: &[Symbol], erased: usize) -> Result<Self> {
        if erased >= codeword.len() {
            return Err(Error::ExponentOutOfRange {
                exponent: erased,
                n: codeword.len(),
            });
        }
        let mut word = codeword.to_vec();
        word[erased] = 0;
        Ok(ErasurePattern {
            erased,
            word,
            reads: RefCell::new(Vec::new()),
        })
    }

    pub fn erased(&self) -> usize {
        self.erased
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn read(&self, j: usize) -> Result<Symbol> {
        if j == self.erased {
            return Err(Error::ErasedRead(j));
        }
        let v = *self.word.get(j).ok_or(Error::ExponentOutOfRange {
            exponent: j,
            n: self.word.len(),
        })?;
        self.reads.borrow_mut().push(j);
        Ok(v)
    }

    /// Coordinates read so far, in order.
    pub fn reads(&self) -> Vec<usize> {
        self.reads.borrow().clone()
    }
}

/// `c_i = -lambda_i^{-1} * sum_{j in R_i} lambda_j c_j`, reading only `R_i`.
pub fn repair_erasure(
    code: &CyclicCode,
    profile: &LrcProfile,
    pattern: &ErasurePattern,
) -> Result<FieldElement> {
    let ctx = code.base();
    let i = pattern.erased();
    let check = profile.check_for(i).ok_or(Error::NoLocalCheck(i))?;
    let mut acc = 0;
    for (&j, &l) in check.recovering.iter().zip(&check.coeffs) {
        acc = ctx.add(acc, ctx.mul(l, pattern.read(j)?));
    }
    let value = ctx.neg(ctx.div(acc, check.coordinate_coeff)?);
    Ok(FieldElement {
        field: ctx.id(),
        value,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialTranscript {
    pub erased: usize,
    pub error: Option<String>,
    pub expected: Symbol,
    pub recovered: Option<Symbol>,
    pub trial: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepairStats {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<TrialTranscript>,
    /// Number of trials that erased each coordinate.
    pub per_coordinate_hits: Vec<u64>,
    pub successes: u64,
    pub symbols_read_mean: f64,
    pub trials: u64,
}

impl RepairStats {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialise")
    }
}

/// Per trial: `k` message symbols then one erased index, all drawn from a
/// [`SplitMix64`] seeded with `seed`.
pub fn simulate(
    code: &CyclicCode,
    profile: &LrcProfile,
    trials: u64,
    seed: u64,
) -> Result<RepairStats> {
    if trials == 0 {
        return Err(Error::ParameterViolation(
            "trials must be at least 1".into(),
        ));
    }
    let (q, k, n) = (code.q(), code.k(), code.n());
    let mut rng = SplitMix64::new(seed);
    let mut hits = vec![0u64; n];
    let mut successes = 0;
    let mut total_reads = 0u64;
    let mut failures = Vec::new();
    for trial in 0..trials {
        let message: Vec<Symbol> = (0..k).map(|_| rng.below(q) as Symbol).collect();
        let erased = rng.below(n as u64) as usize;
        hits[erased] += 1;
        let codeword = code.encode(&message)?;
        let pattern = ErasurePattern::new(&codeword, erased)?;
        let outcome = repair_erasure(code, profile, &pattern);
        total_reads += pattern.reads().len() as u64;
        match outcome {
            Ok(v) if v.value == codeword[erased] => successes += 1,
            Ok(v) => failures.push(TrialTranscript {
                trial,
                erased,
                expected: codeword[erased],
                recovered: Some(v.value),
                error: None,
            }),
            Err(e) => failures.push(TrialTranscript {
                trial,
                erased,
                expected: codeword[erased],
                recovered: None,
                error: Some(e.to_string()),
            }),
        }
    }
    Ok(RepairStats {
        failures,
        per_coordinate_hits: hits,
        successes,
        symbols_read_mean: total_reads as f64 / trials as f64,
        trials,
    })
}
