//! Families of cyclic LRC codes with complementary duals.
//!
//! * `c1`: binary, length `2^m - 1`, zeros at every multiple of `r + 1`.
//! * `c2`: `c1` plus negation-paired cyclotomic cosets to push the BCH run.
//! * `tb`: the cyclic Tamo-Barg defining set `L ∪ D` with offset `ℓ` and stride `b`.
//! * `t33`: `q`-ary, `n | q - 1`, `L` = multiples of `r + 1`, `D` = `-t..=t`
//!   with `t = (n - k(r+1)/r) / 2`; requires `r | k` and an even gap.
//! * `t34`: same shape without `r | k`, `t = floor((nr - k(r+1)) / 2r)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{classify_optimality, lrc_singleton_bound, Optimality};
use crate::cosets::{cyclotomic_coset, DefiningSet};
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::galois::{gcd, prime_power, FieldCtx};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    BinaryGroups,
    BinaryReversibleBch,
    TamoBarg,
    SymmetricEven,
    SymmetricGeneral,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::BinaryGroups,
        Family::BinaryReversibleBch,
        Family::TamoBarg,
        Family::SymmetricEven,
        Family::SymmetricGeneral,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::BinaryGroups => "c1",
            Family::BinaryReversibleBch => "c2",
            Family::TamoBarg => "tb",
            Family::SymmetricEven => "t33",
            Family::SymmetricGeneral => "t34",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.token() == s)
            .ok_or_else(|| Error::ParameterViolation(format!("unknown family {s:?}")))
    }
}

/// Parameters of an LRC request plus the quantities derived from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrcParams {
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub ell: Option<usize>,
    pub k: usize,
    pub mu: Option<usize>,
    pub n: usize,
    pub q: u64,
    pub r: usize,
    pub t: Option<i64>,
}

impl LrcParams {
    pub fn new(q: u64, n: usize, k: usize, r: usize) -> Self {
        LrcParams {
            q,
            n,
            k,
            r,
            ell: None,
            b: None,
            mu: None,
            t: None,
            a: None,
        }
    }
}

/// A code produced by one of the families, with what the family predicts.
#[derive(Debug, Clone)]
pub struct Constructed {
    pub family: Family,
    pub params: LrcParams,
    pub code: CyclicCode,
    /// Dimension given by the family's closed form, when it has one.
    pub predicted_k: Option<usize>,
    /// Distance lower bound promised by the family.
    pub predicted_d_lower: Option<usize>,
    pub notes: Vec<String>,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::ParameterViolation(msg.into())
}

fn base_field(q: u64) -> Result<Arc<FieldCtx>> {
    let (p, e) =
        prime_power(q).ok_or_else(|| violation(format!("q = {q} is not a prime power")))?;
    Ok(Arc::new(FieldCtx::new(p, e, None)?))
}

/// `{i : i = ell (mod r + 1)}`.
pub fn residue_class(n: usize, r: usize, ell: usize) -> DefiningSet {
    DefiningSet::new(n, (ell..n).step_by(r + 1))
}

/// `{-t, ..., t}` reduced mod n.
pub fn symmetric_interval(n: usize, t: i64) -> DefiningSet {
    DefiningSet::from_signed(n, -t..=t)
}

fn check_group(n: usize, r: usize) -> Result<()> {
    if r == 0 {
        return Err(violation("locality r must be at least 1"));
    }
    if !n.is_multiple_of(r + 1) {
        return Err(Error::LocalityDoesNotDivide { group: r + 1, n });
    }
    Ok(())
}

fn binary_length(m: u32) -> Result<usize> {
    if !(1..=20).contains(&m) {
        return Err(violation(format!(
            "extension degree m = {m} outside 1..=20"
        )));
    }
    Ok((1usize << m) - 1)
}

/// Zeros at `alpha^{j(r+1)}`; locality `r`, dimension `rn/(r+1)`.
pub fn binary_construction1(m: u32, r: usize) -> Result<Constructed> {
    let n = binary_length(m)?;
    check_group(n, r)?;
    let z = residue_class(n, r, 0);
    let code = CyclicCode::from_defining_set(base_field(2)?, n, z)?;
    let predicted_k = r * n / (r + 1);
    if code.k() != predicted_k {
        return Err(Error::InvariantViolation(format!(
            "dimension {} differs from rn/(r+1) = {predicted_k}",
            code.k()
        )));
    }
    Ok(Constructed {
        family: Family::BinaryGroups,
        params: LrcParams {
            ell: Some(0),
            ..LrcParams::new(2, n, code.k(), r)
        },
        code,
        predicted_k: Some(predicted_k),
        predicted_d_lower: Some(2),
        notes: Vec::new(),
    })
}

/// Construction 1 plus the cyclotomic cosets of `extras` (default `{1, n-1}`).
/// Every extra must come with its negation.
pub fn binary_construction2(m: u32, r: usize, extras: Option<&[usize]>) -> Result<Constructed> {
    let n = binary_length(m)?;
    check_group(n, r)?;
    let default_extras = [1, n - 1];
    let extras = extras.unwrap_or(&default_extras);
    let mut added = DefiningSet::empty(n);
    for &e in extras {
        if e >= n {
            return Err(Error::ExponentOutOfRange { exponent: e, n });
        }
        added = added.union(&DefiningSet::new(n, cyclotomic_coset(e, n, 2)?.members));
    }
    if let Some(&e) = extras.iter().find(|&&e| !added.contains(n - e)) {
        return Err(Error::UnpairedCoset(e));
    }
    let z = residue_class(n, r, 0).union(&added);
    let code = CyclicCode::from_defining_set(base_field(2)?, n, z)?;

    let mut sorted = extras.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut four = vec![1, 3, n - 3, n - 1];
    four.sort_unstable();
    let base_k = r * n / (r + 1);
    let m_us = m as usize;
    let mut notes = Vec::new();
    let (predicted_k, predicted_d_lower) = if sorted == [1, n - 1] {
        let closed = base_k.checked_sub(2 * m_us);
        if m >= 3 && closed == Some(code.k()) {
            (closed, Some(if r == 2 { 10 } else { 6 }))
        } else {
            notes.push(format!(
                "closed-form dimension rn/(r+1) - 2m does not apply for m = {m}; using n - |Z| = {}",
                code.k()
            ));
            (None, None)
        }
    } else if m >= 3 && sorted == four {
        if base_k
            .checked_sub(4 * m_us)
            .is_some_and(|lower| code.k() < lower)
        {
            return Err(Error::InvariantViolation(
                "dimension fell below rn/(r+1) - 4m".into(),
            ));
        }
        notes.push(format!(
            "dimension n - |Z| = {} (at least rn/(r+1) - 4m)",
            code.k()
        ));
        (None, (r > 2).then_some(10))
    } else {
        notes.push(format!(
            "non-standard extras; dimension taken as n - |Z| = {}",
            code.k()
        ));
        (None, None)
    };
    Ok(Constructed {
        family: Family::BinaryReversibleBch,
        params: LrcParams {
            ell: Some(0),
            ..LrcParams::new(2, n, code.k(), r)
        },
        code,
        predicted_k,
        predicted_d_lower,
        notes,
    })
}

fn check_qary(q: u64, n: usize, k: usize, r: usize) -> Result<()> {
    prime_power(q).ok_or_else(|| violation(format!("q = {q} is not a prime power")))?;
    if n == 0 || !(q - 1).is_multiple_of(n as u64) {
        return Err(violation(format!("n = {n} must divide q - 1 = {}", q - 1)));
    }
    if r == 0 || r > k {
        return Err(violation(format!("need 1 <= r <= k (r = {r}, k = {k})")));
    }
    if k > n {
        return Err(violation(format!("k = {k} exceeds n = {n}")));
    }
    check_group(n, r)
}

/// Cyclic Tamo-Barg defining set `L ∪ D` with `L = {i = ell mod (r+1)}` and
/// `D = {ell + s b : s = 0..=n - mu(r+1)}`, `mu = k/r`. The dimension
/// reported is the actual `n - |Z|`; a mismatch with `k` becomes a note.
pub fn tamo_barg_cyclic(
    q: u64,
    n: usize,
    k: usize,
    r: usize,
    ell: usize,
    b: usize,
) -> Result<Constructed> {
    check_qary(q, n, k, r)?;
    if !k.is_multiple_of(r) {
        return Err(violation(format!("r = {r} must divide k = {k}")));
    }
    if ell >= r {
        return Err(violation(format!(
            "need 0 <= ell < r (ell = {ell}, r = {r})"
        )));
    }
    if b == 0 || gcd(b as u64, n as u64) != 1 {
        return Err(violation(format!(
            "stride b = {b} must be coprime to n = {n}"
        )));
    }
    let mu = k / r;
    let span = n
        .checked_sub(mu * (r + 1))
        .ok_or_else(|| violation(format!("mu(r+1) = {} exceeds n = {n}", mu * (r + 1))))?;
    let l = residue_class(n, r, ell);
    let d = DefiningSet::new(n, (0..=span).map(|s| ell + s * b));
    let code = CyclicCode::from_defining_set(base_field(q)?, n, l.union(&d))?;
    let mut notes = Vec::new();
    if code.k() != k {
        notes.push(format!("requested k = {k} but n - |L ∪ D| = {}", code.k()));
    }
    Ok(Constructed {
        family: Family::TamoBarg,
        params: LrcParams {
            ell: Some(ell),
            b: Some(b),
            mu: Some(mu),
            ..LrcParams::new(q, n, k, r)
        },
        code,
        predicted_k: Some(k),
        predicted_d_lower: None,
        notes,
    })
}

/// Admissibility check for the `t33` family; returns `t`.
pub fn symmetric_even_t(q: u64, n: usize, k: usize, r: usize) -> Result<i64> {
    check_qary(q, n, k, r)?;
    if !k.is_multiple_of(r) {
        return Err(violation(format!("r = {r} must divide k = {k}")));
    }
    let gap = (n / (r + 1)) as i64 - (k / r) as i64;
    if gap < 0 {
        return Err(violation(format!("n/(r+1) - k/r = {gap} is negative")));
    }
    if gap % 2 != 0 {
        return Err(Error::ParityViolation { value: gap });
    }
    // t = (n - k(r+1)/r) / 2 = (r+1) * gap / 2
    Ok((r as i64 + 1) * gap / 2)
}

/// Admissibility check for the `t34` family; returns `(t, a)`.
pub fn symmetric_general_ta(q: u64, n: usize, k: usize, r: usize) -> Result<(i64, usize)> {
    check_qary(q, n, k, r)?;
    let (n_, k_, r_) = (n as i64, k as i64, r as i64);
    let numerator = n_ * r_ - k_ * (r_ + 1);
    if numerator < 0 {
        return Err(violation(format!("nr - k(r+1) = {numerator} is negative")));
    }
    let t = numerator / (2 * r_);
    let a = t.rem_euclid(r_ + 1);
    let value = n_ * r_ / (r_ + 1) - k_ - 2 * a;
    if value.rem_euclid(2 * r_) != 0 {
        return Err(Error::DivisibilityViolation {
            value,
            modulus: 2 * r_,
        });
    }
    Ok((t, a as usize))
}

fn symmetric_code(
    family: Family,
    q: u64,
    n: usize,
    k: usize,
    r: usize,
    t: i64,
    a: Option<usize>,
) -> Result<Constructed> {
    let z = residue_class(n, r, 0).union(&symmetric_interval(n, t));
    let code = CyclicCode::from_defining_set(base_field(q)?, n, z)?;
    if code.k() != k {
        return Err(Error::InvariantViolation(format!(
            "constructed dimension {} differs from k = {k}",
            code.k()
        )));
    }
    let predicted_d_lower = match family {
        Family::SymmetricEven => (2 * t + 2) as usize,
        // n - k - ceil(k/r) + 1
        _ => n - k - k.div_ceil(r) + 1,
    };
    Ok(Constructed {
        family,
        params: LrcParams {
            ell: Some(0),
            mu: k.is_multiple_of(r).then_some(k / r),
            t: Some(t),
            a,
            ..LrcParams::new(q, n, k, r)
        },
        code,
        predicted_k: Some(k),
        predicted_d_lower: Some(predicted_d_lower),
        notes: Vec::new(),
    })
}

/// `r | k` and `n/(r+1) - k/r` even; the BCH run `-t..=t` meets the LRC
/// Singleton bound.
pub fn qary_lrc_lcd_even(q: u64, n: usize, k: usize, r: usize) -> Result<Constructed> {
    let t = symmetric_even_t(q, n, k, r)?;
    symmetric_code(Family::SymmetricEven, q, n, k, r, t, Some(0))
}

/// `2r | (nr/(r+1) - k - 2a)` with `a = t mod (r+1)`; distance at least
/// `n - k - ceil(k/r) + 1`.
pub fn qary_lrc_lcd_general(q: u64, n: usize, k: usize, r: usize) -> Result<Constructed> {
    let (t, a) = symmetric_general_ta(q, n, k, r)?;
    symmetric_code(Family::SymmetricGeneral, q, n, k, r, t, Some(a))
}

/// Builds a code of the given family from CLI-style parameters.
#[allow(clippy::too_many_arguments)]
pub fn build_family(
    family: Family,
    q: u64,
    n: usize,
    k: usize,
    r: usize,
    m: Option<u32>,
    extras: Option<&[usize]>,
    ell: usize,
    b: usize,
) -> Result<Constructed> {
    let binary_m = || -> Result<u32> {
        if let Some(m) = m {
            return Ok(m);
        }
        let len = n + 1;
        if n > 0 && len.is_power_of_two() {
            Ok(len.trailing_zeros())
        } else {
            Err(violation("binary families need --m or n = 2^m - 1"))
        }
    };
    match family {
        Family::BinaryGroups => binary_construction1(binary_m()?, r),
        Family::BinaryReversibleBch => binary_construction2(binary_m()?, r, extras),
        Family::TamoBarg => tamo_barg_cyclic(q, n, k, r, ell, b),
        Family::SymmetricEven => qary_lrc_lcd_even(q, n, k, r),
        Family::SymmetricGeneral => qary_lrc_lcd_general(q, n, k, r),
    }
}

/// One admissible parameter set found by [`parameter_search`]. Fields are
/// declared alphabetically for JSON; the CSV column order is fixed separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRow {
    pub a: Option<usize>,
    pub construction: Family,
    pub d_lower: usize,
    pub d_upper: i64,
    pub k: usize,
    pub n: usize,
    pub optimality: Optimality,
    pub q: u64,
    pub r: usize,
    pub t: Option<i64>,
}

pub const SEARCH_CSV_HEADER: &str = "q,n,k,r,construction,t,a,d_lower,d_upper,optimality";

impl SearchRow {
    pub fn csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.q,
            self.n,
            self.k,
            self.r,
            self.construction,
            opt(self.t.map(|t| t.to_string())),
            opt(self.a.map(|a| a.to_string())),
            self.d_lower,
            self.d_upper,
            self.optimality
        )
    }
}

fn row_from_set(
    q: u64,
    r: usize,
    family: Family,
    z: &DefiningSet,
    t: Option<i64>,
    a: Option<usize>,
) -> Option<SearchRow> {
    let n = z.n();
    let k = n - z.len();
    if k < r || k == 0 {
        return None;
    }
    let d_lower = match z.longest_consecutive_run() {
        Ok(run) => run.len + 1,
        Err(_) => 1,
    };
    let d_upper = lrc_singleton_bound(n, k, r).ok()?;
    Some(SearchRow {
        q,
        n,
        k,
        r,
        construction: family,
        t,
        a,
        d_lower,
        d_upper,
        optimality: classify_optimality(d_lower, d_upper, None),
    })
}

/// Enumerates `(n, k, r)` in the given ranges where a family applies, with
/// the dimension and distance bounds its defining set yields. Rows are
/// ordered by `(n, r, k, family)`.
pub fn parameter_search(
    q: u64,
    n_range: std::ops::RangeInclusive<usize>,
    r_range: std::ops::RangeInclusive<usize>,
) -> Vec<SearchRow> {
    if prime_power(q).is_none() {
        return Vec::new();
    }
    let ns: Vec<usize> = n_range.filter(|&n| n >= 2).collect();
    let mut rows: Vec<SearchRow> = ns
        .par_iter()
        .flat_map_iter(|&n| {
            let mut out = Vec::new();
            for r in r_range.clone().filter(|&r| r >= 1 && n % (r + 1) == 0) {
                if (q - 1).is_multiple_of(n as u64) {
                    for k in r..=n {
                        if let Ok(t) = symmetric_even_t(q, n, k, r) {
                            let z = residue_class(n, r, 0).union(&symmetric_interval(n, t));
                            out.extend(row_from_set(
                                q,
                                r,
                                Family::SymmetricEven,
                                &z,
                                Some(t),
                                Some(0),
                            ));
                        }
                        if let Ok((t, a)) = symmetric_general_ta(q, n, k, r) {
                            let z = residue_class(n, r, 0).union(&symmetric_interval(n, t));
                            out.extend(row_from_set(
                                q,
                                r,
                                Family::SymmetricGeneral,
                                &z,
                                Some(t),
                                Some(a),
                            ));
                        }
                    }
                }
                if q == 2 && (n + 1).is_power_of_two() {
                    let l = residue_class(n, r, 0);
                    out.extend(row_from_set(q, r, Family::BinaryGroups, &l, None, None));
                    let pair = [1, n - 1]
                        .iter()
                        .filter_map(|&e| cyclotomic_coset(e, n, 2).ok())
                        .fold(DefiningSet::empty(n), |acc, c| {
                            acc.union(&DefiningSet::new(n, c.members))
                        });
                    out.extend(row_from_set(
                        q,
                        r,
                        Family::BinaryReversibleBch,
                        &l.union(&pair),
                        None,
                        None,
                    ));
                }
            }
            out
        })
        .collect();
    rows.sort_by_key(|row| (row.n, row.r, row.k, row.construction));
    rows
}
