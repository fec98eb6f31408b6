//! Table-driven arithmetic in GF(p) and GF(p^m).
//!
//! Elements are stored as packed integers: the polynomial-basis coordinate
//! vector `(c_0, ..., c_{m-1})` of an element is the base-`p` number
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. In a prime field this is just the
//! residue. Multiplication goes through log/antilog tables indexed by a
//! primitive element; addition works digit by digit (XOR in characteristic 2).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Packed representation of a field element. Only meaningful together with
/// the [`FieldCtx`] it came from.
pub type Symbol = u32;

/// Largest field (number of elements) that gets log/antilog tables by default.
pub const DEFAULT_FIELD_BUDGET: u64 = 1 << 20;

/// Identity of a field: characteristic, degree and packed modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldId {
    pub m: u32,
    /// Packed monic modulus including its leading term; 0 for prime fields.
    pub modulus: u64,
    pub p: u32,
}

/// An element tagged with the field it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub field: FieldId,
    pub value: Symbol,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(i64),
}

/// A fully specified finite field GF(p^m).
#[derive(Clone)]
pub struct FieldCtx {
    id: FieldId,
    p: u32,
    m: u32,
    size: u32,
    modulus: Option<Vec<u32>>,
    generator: Symbol,
    // log[0] is unused.
    log: Vec<u32>,
    // Doubled so that exp[log a + log b] never needs a reduction.
    exp: Vec<Symbol>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("descriptor", &self.descriptor())
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds GF(p^m) with the default table budget.
    ///
    /// Without an explicit modulus the smallest monic irreducible polynomial
    /// of degree `m` is used, where candidates `x^m + c_{m-1}x^{m-1} + ... + c_0`
    /// are ordered by the packed integer `c_0 + c_1 p + ...` (so the
    /// highest non-leading coefficient is the most significant).
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::with_budget(p, m, modulus, DEFAULT_FIELD_BUDGET)
    }

    pub fn with_budget(p: u64, m: u32, modulus: Option<&[u32]>, budget: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus(
                "extension degree must be at least 1".into(),
            ));
        }
        let size = p
            .checked_pow(m)
            .filter(|&s| s <= budget && s <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge {
                size: p.saturating_pow(m),
                budget,
            })?;
        let p = p as u32;
        let modulus = if m == 1 {
            if let Some(f) = modulus {
                check_monic(f, p, 1)?;
            }
            None
        } else {
            match modulus {
                Some(f) => {
                    check_monic(f, p, m)?;
                    if !is_irreducible_mod_p(f, p) {
                        return Err(Error::NotIrreducible(join_coeffs(f)));
                    }
                    Some(f.to_vec())
                }
                None => Some(smallest_irreducible(p, m)),
            }
        };
        let packed_modulus = modulus
            .as_ref()
            .map(|f| {
                f.iter()
                    .rev()
                    .fold(0u64, |acc, &c| acc * p as u64 + c as u64)
            })
            .unwrap_or(0);
        let id = FieldId {
            p,
            m,
            modulus: packed_modulus,
        };
        let raw = RawField {
            p,
            m,
            modulus: modulus.clone(),
        };
        let size = size as u32;
        let (generator, exp) = find_generator(&raw, size);
        let mut log = vec![0u32; size as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let mut doubled = exp.clone();
        doubled.extend_from_slice(&exp);
        Ok(FieldCtx {
            id,
            p,
            m,
            size,
            modulus,
            generator,
            log,
            exp: doubled,
        })
    }

    pub fn id(&self) -> FieldId {
        self.id
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements q = p^m.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Monic modulus, lowest degree first. `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn generator(&self) -> Symbol {
        self.generator
    }

    /// Text descriptor `GF(p^m)/c_0,c_1,...,c_m`; prime fields have no modulus part.
    pub fn descriptor(&self) -> String {
        match &self.modulus {
            Some(f) => format!("GF({}^{})/{}", self.p, self.m, join_coeffs(f)),
            None => format!("GF({}^1)", self.p),
        }
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value >= self.size as u64 {
            return Err(Error::NotAnElement(value));
        }
        Ok(FieldElement {
            field: self.id,
            value: value as Symbol,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.id,
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.id,
            value: 1,
        }
    }

    /// Iterates over all elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size).map(move |value| FieldElement {
            field: self.id,
            value,
        })
    }

    fn own(&self, x: FieldElement) -> Result<Symbol> {
        if x.field != self.id {
            return Err(Error::MixedFields);
        }
        Ok(x.value)
    }

    fn wrap(&self, value: Symbol) -> FieldElement {
        FieldElement {
            field: self.id,
            value,
        }
    }

    /// Checked arithmetic on tagged elements.
    pub fn arith(&self, op: ArithOp, operands: &[FieldElement]) -> Result<FieldElement> {
        let vals = operands
            .iter()
            .map(|&x| self.own(x))
            .collect::<Result<Vec<_>>>()?;
        let arity = match op {
            ArithOp::Add | ArithOp::Sub | ArithOp::Mul | ArithOp::Div => 2,
            ArithOp::Neg | ArithOp::Inv | ArithOp::Pow(_) => 1,
        };
        if vals.len() != arity {
            return Err(Error::LengthMismatch {
                expected: arity,
                got: vals.len(),
            });
        }
        let v = match op {
            ArithOp::Add => self.add(vals[0], vals[1]),
            ArithOp::Sub => self.sub(vals[0], vals[1]),
            ArithOp::Mul => self.mul(vals[0], vals[1]),
            ArithOp::Div => self.div(vals[0], vals[1])?,
            ArithOp::Neg => self.neg(vals[0]),
            ArithOp::Inv => self.inv(vals[0])?,
            ArithOp::Pow(e) => self.pow_signed(vals[0], e)?,
        };
        Ok(self.wrap(v))
    }

    // Raw symbol arithmetic. Callers guarantee the symbols belong to this field.

    #[inline]
    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Symbol) -> Symbol {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            let d = a % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Symbol) -> Result<Symbol> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.size - 1;
        Ok(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: Symbol, b: Symbol) -> Result<Symbol> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for `e >= 0`, with `0^0 = 1`.
    pub fn pow(&self, a: Symbol, e: u64) -> Symbol {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.size - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % order)) % order;
        self.exp[l as usize]
    }

    fn pow_signed(&self, a: Symbol, e: i64) -> Result<Symbol> {
        if e >= 0 {
            return Ok(self.pow(a, e as u64));
        }
        let inv = self.inv(a)?;
        Ok(self.pow(inv, e.unsigned_abs()))
    }

    /// Discrete log to the base of the field generator.
    pub fn log(&self, a: Symbol) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `generator^e`.
    pub fn antilog(&self, e: u64) -> Symbol {
        self.exp[(e % (self.size as u64 - 1)) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Symbol) -> Option<u64> {
        let l = self.log(a)? as u64;
        let group = (self.size - 1) as u64;
        Some(group / gcd(l, group))
    }

    /// The canonical primitive n-th root of unity, `generator^((q-1)/n)`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        let group = (self.size - 1) as u64;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::OrderUnavailable { n, order: group });
        }
        Ok(self.wrap(self.antilog(group / n)))
    }

    /// Unpacks a symbol into its `m` base-field coordinates.
    pub fn coordinates(&self, a: Symbol) -> Vec<u32> {
        let mut a = a;
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }
}

/// Field data needed before tables exist.
struct RawField {
    p: u32,
    m: u32,
    modulus: Option<Vec<u32>>,
}

impl RawField {
    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let Some(f) = &self.modulus else {
            return ((a as u64 * b as u64) % p) as u32;
        };
        let m = self.m as usize;
        let da = digits(a, self.p, m);
        let db = digits(b, self.p, m);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // x^m = -(f_0 + ... + f_{m-1} x^{m-1})
            for (i, &fi) in f[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + (p - fi as u64) * c) % p;
            }
            prod[top] = 0;
        }
        prod[..m].iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
    }
}

fn digits(mut a: u32, p: u32, m: usize) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

/// Smallest element (packed order) whose powers cover the whole group,
/// together with its power table.
fn find_generator(raw: &RawField, size: u32) -> (Symbol, Vec<Symbol>) {
    let group = size as usize - 1;
    if group == 1 {
        return (1, vec![1]);
    }
    for cand in 2..size {
        let mut table = Vec::with_capacity(group);
        let mut x = 1u32;
        loop {
            table.push(x);
            x = raw.mul(x, cand);
            if x == 1 || table.len() > group {
                break;
            }
        }
        if table.len() == group {
            return (cand, table);
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

fn check_monic(f: &[u32], p: u32, m: u32) -> Result<()> {
    if f.len() != m as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients, got {}",
            m + 1,
            f.len()
        )));
    }
    if f[m as usize] != 1 {
        return Err(Error::InvalidModulus("modulus must be monic".into()));
    }
    if let Some(&c) = f.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidModulus(format!(
            "coefficient {c} not below {p}"
        )));
    }
    Ok(())
}

fn join_coeffs(f: &[u32]) -> String {
    f.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    (0..count)
        .map(|packed| {
            let mut f = digits(packed as u32, p, m as usize);
            f.push(1);
            f
        })
        .find(|f| is_irreducible_mod_p(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for packed in 0..count {
            let mut div = digits(packed as u32, p, d);
            div.push(1);
            if rem_mod_p(&f, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Remainder of `f` by a monic `div` over GF(p).
fn rem_mod_p(f: &[u32], div: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let d = div.len() - 1;
    while r.len() > d {
        let top = r.len() - 1;
        let c = r[top];
        if c != 0 {
            for (i, &di) in div.iter().enumerate() {
                let idx = top - d + i;
                r[idx] = (r[idx] + (p - di as u64) * c) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An embedding of a field into an extension of it, with its inverse on the image.
#[derive(Debug, Clone)]
pub struct Embedding {
    base: Arc<FieldCtx>,
    ext: Arc<FieldCtx>,
    up: Vec<Symbol>,
    down: HashMap<Symbol, Symbol>,
}

impl Embedding {
    pub fn identity(field: Arc<FieldCtx>) -> Self {
        Embedding {
            up: Vec::new(),
            down: HashMap::new(),
            base: field.clone(),
            ext: field,
        }
    }

    /// Embeds `base` into `ext` by sending the polynomial-basis variable of
    /// `base` to the smallest root (packed order) of its modulus in `ext`.
    pub fn new(base: Arc<FieldCtx>, ext: Arc<FieldCtx>) -> Result<Self> {
        if base.id() == ext.id() {
            return Ok(Self::identity(base));
        }
        if base.characteristic() != ext.characteristic()
            || !ext.degree().is_multiple_of(base.degree())
        {
            return Err(Error::MixedFields);
        }
        let image_of_x = match base.modulus() {
            None => None,
            Some(f) => {
                // Every root of f lies in the unique subfield of size |base|.
                let root = (0..ext.size())
                    .filter(|&y| ext.pow(y, base.size() as u64) == y)
                    .find(|&y| {
                        f.iter()
                            .rev()
                            .fold(0, |acc, &c| ext.add(ext.mul(acc, y), c))
                            == 0
                    })
                    .ok_or_else(|| {
                        Error::InvariantViolation("base modulus has no root in extension".into())
                    })?;
                Some(root)
            }
        };
        let up: Vec<Symbol> = (0..base.size())
            .map(|s| match image_of_x {
                None => s,
                Some(beta) => base
                    .coordinates(s)
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| ext.add(ext.mul(acc, beta), c)),
            })
            .collect();
        let down = up
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i as Symbol))
            .collect();
        Ok(Embedding {
            base,
            ext,
            up,
            down,
        })
    }

    pub fn base(&self) -> &Arc<FieldCtx> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<FieldCtx> {
        &self.ext
    }

    pub fn is_identity(&self) -> bool {
        self.up.is_empty()
    }

    pub fn lift(&self, s: Symbol) -> Symbol {
        if self.is_identity() {
            s
        } else {
            self.up[s as usize]
        }
    }

    /// Inverse of [`lift`](Self::lift); `None` if `s` is outside the image.
    pub fn project(&self, s: Symbol) -> Option<Symbol> {
        if self.is_identity() {
            Some(s)
        } else {
            self.down.get(&s).copied()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = FieldCtx::new(2, 1, None).unwrap();
        assert_eq!(f2.size(), 2);
        assert_eq!(f2.generator(), 1);
        assert_eq!(f2.descriptor(), "GF(2^1)");

        let f37 = FieldCtx::new(37, 1, None).unwrap();
        assert_eq!(f37.size(), 37);
        assert_eq!(f37.order(f37.generator()), Some(36));
        // 2 is the smallest primitive root mod 37.
        assert_eq!(f37.generator(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::new(15, 1, None).unwrap_err(), Error::NotPrime(15));
        assert!(matches!(
            FieldCtx::new(2, 21, None),
            Err(Error::FieldTooLarge { .. })
        ));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            FieldCtx::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::NotIrreducible(_))
        ));
        assert!(matches!(
            FieldCtx::new(2, 2, Some(&[1, 1, 0])),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn log_tables_round_trip() {
        for (p, m) in [(2, 4), (3, 3), (5, 2), (17, 1)] {
            let f = FieldCtx::new(p, m, None).unwrap();
            for x in 1..f.size() {
                assert_eq!(f.antilog(f.log(x).unwrap() as u64), x);
            }
        }
    }

    #[test]
    fn inverse_axiom_gf17() {
        let f = FieldCtx::new(17, 1, None).unwrap();
        for x in 1..17 {
            assert_eq!(f.mul(f.inv(x).unwrap(), x), 1);
        }
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn generator_power_is_one() {
        let f = FieldCtx::new(2, 6, None).unwrap();
        assert_eq!(f.pow(f.generator(), 63), 1);
        assert_eq!(f.pow(0, 0), 1);
        assert_eq!(f.pow(0, 5), 0);
    }

    #[test]
    fn pow_in_gf37() {
        let f = FieldCtx::new(37, 1, None).unwrap();
        // Direct multiplication loop as the reference.
        let mut acc = 1u32;
        for e in 0..=40u64 {
            assert_eq!(f.pow(2, e), acc);
            acc = acc * 2 % 37;
        }
        assert_eq!(f.pow(2, 36), 1);
        assert_ne!(f.pow(2, 12), 1);
    }

    #[test]
    fn roots_of_unity() {
        let f37 = FieldCtx::new(37, 1, None).unwrap();
        let a = f37.nth_root_of_unity(36).unwrap().value;
        assert_eq!(f37.pow(a, 36), 1);
        assert_ne!(f37.pow(a, 18), 1);
        assert_ne!(f37.pow(a, 12), 1);

        let f17 = FieldCtx::new(17, 1, None).unwrap();
        assert_eq!(f17.nth_root_of_unity(16).unwrap().value, f17.generator());
        assert!(matches!(
            f17.nth_root_of_unity(5),
            Err(Error::OrderUnavailable { n: 5, order: 16 })
        ));
    }

    #[test]
    fn checked_arith_rejects_mixed_fields() {
        let a = FieldCtx::new(5, 1, None).unwrap();
        let b = FieldCtx::new(7, 1, None).unwrap();
        let x = a.element(3).unwrap();
        let y = b.element(3).unwrap();
        assert_eq!(a.arith(ArithOp::Add, &[x, y]), Err(Error::MixedFields));
        assert_eq!(a.arith(ArithOp::Add, &[x, x]).unwrap().value, 1);
        assert_eq!(a.arith(ArithOp::Pow(-1), &[x]).unwrap().value, 2);
        assert_eq!(
            a.arith(ArithOp::Div, &[x, a.zero()]),
            Err(Error::DivisionByZero)
        );
        assert!(a.element(5).is_err());
    }

    #[test]
    fn gf4_embeds_into_gf16() {
        let base = Arc::new(FieldCtx::new(2, 2, None).unwrap());
        let ext = Arc::new(FieldCtx::new(2, 4, None).unwrap());
        let emb = Embedding::new(base.clone(), ext.clone()).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let lhs = emb.lift(base.mul(a, b));
                let rhs = ext.mul(emb.lift(a), emb.lift(b));
                assert_eq!(lhs, rhs);
                assert_eq!(emb.lift(base.add(a, b)), ext.add(emb.lift(a), emb.lift(b)));
            }
            assert_eq!(emb.project(emb.lift(a)), Some(a));
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(37), Some((37, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
