//! Distance bounds, exhaustive distance, locality verification and reports.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::constructions::{residue_class, Constructed, Family, LrcParams};
use crate::cosets::Run;
use crate::cyclic::{CyclicCode, LcdVerdict};
use crate::error::{Error, Result};
use crate::galois::Symbol;
use crate::linalg;

/// Largest message space `q^k` enumerated by [`true_min_distance`] by default.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 26;

/// Supports are only searched exhaustively up to this length.
pub const LOCALITY_SEARCH_MAX_N: usize = 40;

/// Cap on candidate supports examined by the locality search.
pub const LOCALITY_SEARCH_MAX_SUPPORTS: u64 = 2_000_000;

/// `n - k - ceil(k/r) + 2`, valid for `1 <= r <= k <= n`.
pub fn lrc_singleton_bound(n: usize, k: usize, r: usize) -> Result<i64> {
    if r == 0 || r > k || k > n {
        return Err(Error::ParameterViolation(format!(
            "singleton bound needs 1 <= r <= k <= n (n = {n}, k = {k}, r = {r})"
        )));
    }
    Ok(singleton_unchecked(n, k, r))
}

fn singleton_unchecked(n: usize, k: usize, r: usize) -> i64 {
    n as i64 - k as i64 - k.div_ceil(r.max(1)) as i64 + 2
}

/// One more than the longest cyclic run in the defining set; 1 for the whole space.
pub fn bch_lower_bound(code: &CyclicCode) -> usize {
    code.defining_set()
        .longest_consecutive_run()
        .map_or(1, |run| run.len + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Distance {
    Exact(usize),
    Unavailable(String),
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(*d),
            Distance::Unavailable(_) => None,
        }
    }
}

/// Minimum weight over all `q^k - 1` nonzero codewords when `q^k <= budget`.
///
/// Messages are enumerated as base-`p` digit vectors over the rows of the
/// generator matrix scaled by the polynomial basis of GF(q); each odometer
/// step adds one precomputed row, since adding it `p` times is a no-op.
/// The top digits split the space into chunks searched in parallel.
pub fn true_min_distance(code: &CyclicCode, budget: u64) -> Distance {
    let ctx = code.base();
    let (q, k, n) = (code.q(), code.k(), code.n());
    if k == 0 {
        return Distance::Unavailable("zero code has no nonzero codewords".into());
    }
    let words = (q as u128).checked_pow(k as u32);
    match words {
        Some(w) if w <= budget as u128 => {}
        _ => {
            return Distance::Unavailable(format!(
                "{q}^{k} messages exceed the enumeration budget of {budget}"
            ))
        }
    }
    let p = ctx.characteristic();
    let basis: Vec<Symbol> = (0..ctx.degree()).map(|i| p.pow(i)).collect();
    let steps: Vec<Vec<Symbol>> = code
        .generator_matrix()
        .iter()
        .flat_map(|row| {
            basis
                .iter()
                .map(|&b| row.iter().map(|&x| ctx.mul(b, x)).collect())
                .collect::<Vec<_>>()
        })
        .collect();
    let digits = steps.len();
    let mut top = 0;
    while top < digits && (p as u64).pow(top as u32) < 256 {
        top += 1;
    }
    let inner = digits - top;
    let chunks = (p as u64).pow(top as u32);

    let best = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut word = vec![0 as Symbol; n];
            let mut c = chunk;
            for step in &steps[inner..] {
                let d = (c % p as u64) as Symbol;
                c /= p as u64;
                for (w, &s) in word.iter_mut().zip(step) {
                    *w = ctx.add(*w, ctx.mul(d, s));
                }
            }
            let mut counter = vec![0u32; inner];
            let mut best = usize::MAX;
            let mut first = true;
            loop {
                if !(first && chunk == 0) {
                    let wt = word.iter().filter(|&&x| x != 0).count();
                    best = best.min(wt);
                }
                first = false;
                let mut i = 0;
                loop {
                    if i == inner {
                        return best;
                    }
                    for (w, &s) in word.iter_mut().zip(&steps[i]) {
                        *w = ctx.add(*w, s);
                    }
                    counter[i] += 1;
                    if counter[i] < p {
                        break;
                    }
                    counter[i] = 0;
                    i += 1;
                }
            }
        })
        .min()
        .unwrap_or(usize::MAX);
    Distance::Exact(best)
}

/// A parity check through one coordinate: `coordinate_coeff * c_i +
/// sum coeffs[s] * c_{recovering[s]} = 0` for every codeword.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalCheck {
    pub coeffs: Vec<Symbol>,
    pub coordinate: usize,
    pub coordinate_coeff: Symbol,
    pub recovering: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalityPath {
    /// The defining set holds the residue class `ell` mod `r + 1`.
    Structural { ell: usize },
    /// Found by enumerating supports of small dual codewords.
    Search,
}

/// A recovering set and local check for every coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrcProfile {
    pub r: usize,
    pub path: LocalityPath,
    /// Indexed by coordinate.
    pub checks: Vec<LocalCheck>,
}

impl LrcProfile {
    pub fn check_for(&self, i: usize) -> Option<&LocalCheck> {
        self.checks.get(i).filter(|c| c.coordinate == i)
    }

    /// Coordinates whose check fails to annihilate some generator row.
    pub fn failing_coordinates(&self, code: &CyclicCode) -> Vec<usize> {
        let ctx = code.base();
        let rows = code.generator_matrix();
        self.checks
            .iter()
            .filter(|c| {
                c.coordinate_coeff == 0
                    || c.recovering.contains(&c.coordinate)
                    || rows.iter().any(|row| {
                        let s = c.recovering.iter().zip(&c.coeffs).fold(
                            ctx.mul(c.coordinate_coeff, row[c.coordinate]),
                            |acc, (&j, &l)| ctx.add(acc, ctx.mul(l, row[j])),
                        );
                        s != 0
                    })
            })
            .map(|c| c.coordinate)
            .collect()
    }
}

fn structural_profile(code: &CyclicCode, r: usize) -> Option<LrcProfile> {
    let n = code.n();
    if r == 0 || !n.is_multiple_of(r + 1) {
        return None;
    }
    let group_len = n / (r + 1);
    let ext = code.splitting();
    let emb = code.embedding();
    let z = code.defining_set();
    'ell: for ell in 0..=r {
        if !residue_class(n, r, ell).iter().all(|i| z.contains(i)) {
            continue;
        }
        // lambda_j = alpha^(ell * j), which must lie in the base field.
        let mut lambda = Vec::with_capacity(n);
        for j in 0..n {
            let v = ext.pow(code.alpha().value, (ell * j) as u64);
            match emb.project(v) {
                Some(s) => lambda.push(s),
                None => continue 'ell,
            }
        }
        let checks = (0..n)
            .map(|i| {
                let u = i % group_len;
                let recovering: Vec<usize> = (0..=r)
                    .map(|s| u + s * group_len)
                    .filter(|&j| j != i)
                    .collect();
                LocalCheck {
                    coordinate: i,
                    coordinate_coeff: lambda[i],
                    coeffs: recovering.iter().map(|&j| lambda[j]).collect(),
                    recovering,
                }
            })
            .collect();
        let profile = LrcProfile {
            r,
            path: LocalityPath::Structural { ell },
            checks,
        };
        if profile.failing_coordinates(code).is_empty() {
            return Some(profile);
        }
    }
    None
}

fn next_combination(idx: &mut [usize], universe: usize) -> bool {
    let w = idx.len();
    for pos in (0..w).rev() {
        if idx[pos] < universe - w + pos {
            idx[pos] += 1;
            for later in pos + 1..w {
                idx[later] = idx[later - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest support through coordinate 0 (size <= max_r), shifted to every
/// coordinate by cyclicity.
fn search_profile(code: &CyclicCode, max_r: usize) -> Option<LrcProfile> {
    let n = code.n();
    if n > LOCALITY_SEARCH_MAX_N {
        return None;
    }
    let ctx = code.base();
    let g = code.generator_matrix();
    let target: Vec<Symbol> = g.iter().map(|row| row[0]).collect();
    let mut examined = 0u64;
    for w in 0..=max_r.min(n - 1) {
        // Candidate positions are 1..n, represented as indices 0..n-1.
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            examined += 1;
            if examined > LOCALITY_SEARCH_MAX_SUPPORTS {
                return None;
            }
            let support: Vec<usize> = idx.iter().map(|&i| i + 1).collect();
            let a: Vec<Vec<Symbol>> = g
                .iter()
                .map(|row| support.iter().map(|&j| row[j]).collect())
                .collect();
            if let Some(x) = linalg::solve(ctx, &a, &target) {
                // c_0 = sum x_j c_j; the minimal w guarantees every x_j != 0.
                let base: Vec<(usize, Symbol)> = support
                    .iter()
                    .zip(&x)
                    .filter(|(_, &xj)| xj != 0)
                    .map(|(&j, &xj)| (j, ctx.neg(xj)))
                    .collect();
                let checks = (0..n)
                    .map(|i| LocalCheck {
                        coordinate: i,
                        coordinate_coeff: 1,
                        recovering: base.iter().map(|&(j, _)| (j + i) % n).collect(),
                        coeffs: base.iter().map(|&(_, l)| l).collect(),
                    })
                    .collect();
                let profile = LrcProfile {
                    r: base.len(),
                    path: LocalityPath::Search,
                    checks,
                };
                return profile
                    .failing_coordinates(code)
                    .is_empty()
                    .then_some(profile);
            }
            if w == 0 || !next_combination(&mut idx, n - 1) {
                break;
            }
        }
    }
    None
}

/// Verifies that every coordinate has a recovering set of size at most `r`.
///
/// Tries the residue-class checks first; otherwise, for `n <= 40`, searches
/// small supports of dual codewords.
pub fn verify_locality(code: &CyclicCode, r: usize) -> Result<LrcProfile> {
    if let Some(p) = structural_profile(code, r) {
        return Ok(p);
    }
    if let Some(p) = search_profile(code, r) {
        return Ok(p);
    }
    Err(Error::LocalityNotVerified {
        r,
        coordinates: (0..code.n()).collect(),
    })
}

/// Smallest locality this crate can certify, if any.
pub fn discover_locality(code: &CyclicCode) -> Option<LrcProfile> {
    let n = code.n();
    (1..n)
        .find_map(|r| structural_profile(code, r))
        .or_else(|| search_profile(code, n.saturating_sub(1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimality {
    Optimal,
    WithinOne,
    Unknown { gap: i64 },
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Optimality::Optimal => f.write_str("optimal"),
            Optimality::WithinOne => f.write_str("within-one"),
            Optimality::Unknown { gap } => write!(f, "unknown(gap={gap})"),
        }
    }
}

impl Serialize for Optimality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Optimal when the bounds meet (or the exact distance reaches the upper
/// bound); within-one when they differ by one.
pub fn classify_optimality(d_lower: usize, d_upper: i64, d_true: Option<usize>) -> Optimality {
    let lower = d_lower as i64;
    if lower == d_upper || d_true.is_some_and(|d| d as i64 == d_upper) {
        Optimality::Optimal
    } else if lower == d_upper - 1 {
        Optimality::WithinOne
    } else {
        Optimality::Unknown {
            gap: d_upper - lower,
        }
    }
}

/// Everything verified about one code. Fields serialise alphabetically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub d_lower: usize,
    pub d_true: Distance,
    pub d_upper: i64,
    pub defining_set: Vec<usize>,
    pub family: Option<Family>,
    pub field: String,
    pub g: Vec<Symbol>,
    pub k: usize,
    pub lcd: LcdVerdict,
    pub m: u32,
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub notes: Vec<String>,
    pub optimality: Optimality,
    pub params: Option<LrcParams>,
    pub q: u64,
    pub r_claimed: Option<usize>,
    pub r_verified: Option<usize>,
    pub run: Option<Run>,
}

impl CodeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Assembles a report. Only internal-consistency failures abort; everything
/// else becomes a note.
pub fn build_report(
    code: &CyclicCode,
    claimed: Option<&LrcParams>,
    budget: u64,
) -> Result<CodeReport> {
    let record = code.record();
    let (n, k) = (code.n(), code.k());
    let mut notes = Vec::new();
    let lcd = code.lcd_verdict()?;
    let run = code.defining_set().longest_consecutive_run().ok();
    let d_lower = bch_lower_bound(code);

    let r_claimed = claimed.map(|p| p.r);
    if let Some(p) = claimed {
        if p.k != k {
            notes.push(format!("requested k = {} but n - |Z| = {k}", p.k));
        }
    }
    let profile = match r_claimed {
        Some(r) => match verify_locality(code, r) {
            Ok(p) => Some(p),
            Err(e) => {
                notes.push(e.to_string());
                None
            }
        },
        None => discover_locality(code),
    };
    let r_verified = profile.as_ref().map(|p| p.r);
    let d_upper = match r_verified {
        Some(r) => singleton_unchecked(n, k, r),
        None => {
            notes.push("locality unverified; upper bound is the classical Singleton bound".into());
            (n - k + 1) as i64
        }
    };
    let d_true = if k == 0 {
        Distance::Unavailable("zero code has no nonzero codewords".into())
    } else {
        true_min_distance(code, budget)
    };
    if (d_lower as i64) > d_upper && k > 0 {
        return Err(Error::InvariantViolation(format!(
            "BCH bound {d_lower} exceeds upper bound {d_upper}"
        )));
    }
    if let Some(d) = d_true.exact() {
        if d < d_lower || d as i64 > d_upper {
            return Err(Error::InvariantViolation(format!(
                "exact distance {d} outside [{d_lower}, {d_upper}]"
            )));
        }
    }
    let optimality = classify_optimality(d_lower, d_upper, d_true.exact());
    Ok(CodeReport {
        d_lower,
        d_true,
        d_upper,
        defining_set: record.defining_set,
        family: None,
        field: record.field,
        g: record.g,
        k,
        lcd,
        m: record.m,
        modulus: record.modulus,
        n,
        notes,
        optimality,
        params: claimed.cloned(),
        q: record.q,
        r_claimed,
        r_verified,
        run,
    })
}

/// Report for a family-built code, including the family's own notes and a
/// check of its promised distance bound.
pub fn report_constructed(c: &Constructed, budget: u64) -> Result<CodeReport> {
    let mut report = build_report(&c.code, Some(&c.params), budget)?;
    report.family = Some(c.family);
    let mut notes = c.notes.clone();
    if let Some(promised) = c.predicted_d_lower {
        if report.d_lower < promised {
            notes.push(format!(
                "BCH bound {} is below the family's promised {promised}",
                report.d_lower
            ));
        }
    }
    notes.append(&mut report.notes);
    report.notes = notes;
    Ok(report)
}
