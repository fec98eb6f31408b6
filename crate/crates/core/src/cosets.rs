//! q-cyclotomic cosets modulo n and defining-set algebra.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::galois::gcd;

/// Orbit of an exponent under multiplication by `q` modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub rep: usize,
    pub members: Vec<usize>,
    pub n: usize,
    pub q: u64,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

/// Smallest `l >= 1` with `q^l = 1 (mod n)`.
pub fn multiplicative_order(q: u64, n: usize) -> Result<u32> {
    check_coprime(q, n)?;
    if n == 1 {
        return Ok(1);
    }
    let n64 = n as u64;
    let step = q % n64;
    let mut x = step;
    let mut l = 1;
    while x != 1 {
        x = x * step % n64;
        l += 1;
    }
    Ok(l)
}

fn check_coprime(q: u64, n: usize) -> Result<()> {
    if n == 0 || gcd(q, n as u64) != 1 {
        return Err(Error::NotCoprime { q, n });
    }
    Ok(())
}

pub fn cyclotomic_coset(a: usize, n: usize, q: u64) -> Result<CyclotomicCoset> {
    check_coprime(q, n)?;
    if a >= n {
        return Err(Error::ExponentOutOfRange { exponent: a, n });
    }
    let step = (q % n as u64) as usize;
    let mut members = vec![a];
    let mut x = a * step % n;
    while x != a {
        members.push(x);
        x = x * step % n;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset {
        rep: members[0],
        members,
        n,
        q,
    })
}

/// All cosets, ordered by representative. They partition `[0, n)`.
pub fn all_cosets(n: usize, q: u64) -> Result<Vec<CyclotomicCoset>> {
    check_coprime(q, n)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let c = cyclotomic_coset(a, n, q)?;
        for &i in &c.members {
            seen[i] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// A maximal cyclic block `start, start+1, ..., start+len-1 (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub len: usize,
    pub start: usize,
}

/// Exponents in `[0, n)` naming the zeros `alpha^i` of a cyclic code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    n: usize,
    exponents: BTreeSet<usize>,
}

impl Serialize for DefiningSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.exponents.iter())
    }
}

impl DefiningSet {
    /// Reduces every exponent modulo `n`.
    pub fn new(n: usize, exponents: impl IntoIterator<Item = usize>) -> Self {
        assert!(n > 0, "defining sets need n >= 1");
        DefiningSet {
            n,
            exponents: exponents.into_iter().map(|i| i % n).collect(),
        }
    }

    /// Accepts signed exponents such as the symmetric interval `-t..=t`.
    pub fn from_signed(n: usize, exponents: impl IntoIterator<Item = i64>) -> Self {
        let n64 = n as i64;
        Self::new(n, exponents.into_iter().map(|i| i.rem_euclid(n64) as usize))
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.exponents.contains(&(i % self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        debug_assert_eq!(self.n, other.n);
        DefiningSet {
            n: self.n,
            exponents: self.exponents.union(&other.exponents).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &DefiningSet) -> DefiningSet {
        DefiningSet {
            n: self.n,
            exponents: self
                .exponents
                .intersection(&other.exponents)
                .copied()
                .collect(),
        }
    }

    pub fn complement(&self) -> DefiningSet {
        DefiningSet {
            n: self.n,
            exponents: (0..self.n)
                .filter(|i| !self.exponents.contains(i))
                .collect(),
        }
    }

    /// `{(n - i) mod n}`.
    pub fn negate(&self) -> DefiningSet {
        DefiningSet::new(self.n, self.iter().map(|i| (self.n - i) % self.n))
    }

    pub fn is_negation_closed(&self) -> bool {
        self.iter().all(|i| self.contains(self.n - i))
    }

    /// First exponent whose `q`-multiple falls outside the set, if any.
    pub fn first_unclosed(&self, q: u64) -> Option<usize> {
        let step = (q % self.n as u64) as usize;
        self.iter()
            .map(|i| i * step % self.n)
            .find(|j| !self.contains(*j))
    }

    /// Smallest union of `q`-cyclotomic cosets containing the set.
    pub fn closure(&self, q: u64) -> Result<DefiningSet> {
        let mut out = BTreeSet::new();
        for i in self.iter() {
            if !out.contains(&i) {
                out.extend(cyclotomic_coset(i, self.n, q)?.members);
            }
        }
        Ok(DefiningSet {
            n: self.n,
            exponents: out,
        })
    }

    /// Longest cyclically consecutive block inside the set; ties go to the
    /// smallest start.
    pub fn longest_consecutive_run(&self) -> Result<Run> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        if self.len() == self.n {
            return Ok(Run {
                start: 0,
                len: self.n,
            });
        }
        let mut best = Run { start: 0, len: 0 };
        for s in self.iter() {
            if self.contains(s + self.n - 1) {
                continue;
            }
            let mut len = 1;
            while self.contains(s + len) {
                len += 1;
            }
            if len > best.len {
                best = Run { start: s, len };
            }
        }
        Ok(best)
    }
}

/// Free-function form of [`DefiningSet::negate`].
pub fn negate_set(s: &DefiningSet) -> DefiningSet {
    s.negate()
}
