//! Dense univariate polynomials over a [`FieldCtx`], including reduction in
//! GF(q)[x]/(x^n - 1) and reciprocal polynomials.

use crate::error::{Error, Result};
use crate::galois::{Embedding, FieldCtx, FieldElement, FieldId, Symbol};

/// Coefficients lowest degree first, trimmed so the last entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldId,
    coeffs: Vec<Symbol>,
}

impl Poly {
    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn coeffs(&self) -> &[Symbol] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Symbol {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Symbol {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Coefficients padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<Symbol> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Comma-separated coefficients, lowest degree first.
    pub fn to_csv(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn trimmed(field: FieldId, mut coeffs: Vec<Symbol>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }
}

/// Polynomial arithmetic over one field.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a> {
    ctx: &'a FieldCtx,
}

impl<'a> PolyRing<'a> {
    pub fn new(ctx: &'a FieldCtx) -> Self {
        PolyRing { ctx }
    }

    pub fn field(&self) -> &'a FieldCtx {
        self.ctx
    }

    /// Builds a polynomial from raw symbols, rejecting values outside the field.
    pub fn poly(&self, coeffs: Vec<Symbol>) -> Result<Poly> {
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.ctx.size()) {
            return Err(Error::NotAnElement(c as u64));
        }
        Ok(Poly::trimmed(self.ctx.id(), coeffs))
    }

    pub fn zero(&self) -> Poly {
        Poly::trimmed(self.ctx.id(), Vec::new())
    }

    pub fn one(&self) -> Poly {
        self.monomial(1, 0)
    }

    pub fn monomial(&self, c: Symbol, deg: usize) -> Poly {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        Poly::trimmed(self.ctx.id(), v)
    }

    /// x^n - 1.
    pub fn x_n_minus_1(&self, n: usize) -> Poly {
        let mut v = vec![0; n + 1];
        v[0] = self.ctx.neg(1);
        v[n] = self.ctx.add(v[n], 1);
        Poly::trimmed(self.ctx.id(), v)
    }

    fn check(&self, f: &Poly) -> Result<()> {
        if f.field != self.ctx.id() {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        let len = f.coeffs.len().max(g.coeffs.len());
        let v = (0..len)
            .map(|i| self.ctx.add(f.coeff(i), g.coeff(i)))
            .collect();
        Ok(Poly::trimmed(self.ctx.id(), v))
    }

    pub fn neg(&self, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        let v = f.coeffs.iter().map(|&c| self.ctx.neg(c)).collect();
        Ok(Poly::trimmed(self.ctx.id(), v))
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.add(f, &self.neg(g)?)
    }

    pub fn scale(&self, f: &Poly, c: Symbol) -> Result<Poly> {
        self.check(f)?;
        let v = f.coeffs.iter().map(|&x| self.ctx.mul(x, c)).collect();
        Ok(Poly::trimmed(self.ctx.id(), v))
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        if f.is_zero() || g.is_zero() {
            return Ok(self.zero());
        }
        let mut v = vec![0; f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                v[i + j] = self.ctx.add(v[i + j], self.ctx.mul(a, b));
            }
        }
        Ok(Poly::trimmed(self.ctx.id(), v))
    }

    /// Quotient and remainder, with `deg(remainder) < deg(divisor)`.
    pub fn divmod(&self, f: &Poly, d: &Poly) -> Result<(Poly, Poly)> {
        self.check(f)?;
        self.check(d)?;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.ctx.inv(d.leading())?;
        let mut rem = f.coeffs.clone();
        if rem.len() <= dd {
            return Ok((self.zero(), f.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = self.ctx.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (i, &di) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = self.ctx.sub(rem[idx], self.ctx.mul(c, di));
            }
        }
        rem.truncate(dd);
        Ok((
            Poly::trimmed(self.ctx.id(), quot),
            Poly::trimmed(self.ctx.id(), rem),
        ))
    }

    pub fn rem(&self, f: &Poly, d: &Poly) -> Result<Poly> {
        Ok(self.divmod(f, d)?.1)
    }

    /// Scales a nonzero polynomial to leading coefficient 1.
    pub fn monic(&self, f: &Poly) -> Result<Poly> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let inv = self.ctx.inv(f.leading())?;
        self.scale(f, inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            self.monic(&a)
        }
    }

    /// Folds coefficient `i` onto `i mod n`.
    pub fn mod_xn_minus_1(&self, f: &Poly, n: usize) -> Result<Poly> {
        self.check(f)?;
        if n == 0 {
            return Err(Error::ParameterViolation("n must be at least 1".into()));
        }
        let mut v = vec![0; n];
        for (i, &c) in f.coeffs.iter().enumerate() {
            v[i % n] = self.ctx.add(v[i % n], c);
        }
        Ok(Poly::trimmed(self.ctx.id(), v))
    }

    /// `x^deg(h) h(1/x)`: coefficients reversed, then trimmed.
    pub fn reciprocal(&self, h: &Poly) -> Result<Poly> {
        self.check(h)?;
        if h.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let v = h.coeffs.iter().rev().copied().collect();
        Ok(Poly::trimmed(self.ctx.id(), v))
    }

    /// True when the monic normalisation of `g*` equals `g`.
    pub fn is_self_reciprocal(&self, g: &Poly) -> Result<bool> {
        let g_monic = self.monic(g)?;
        let rec = self.monic(&self.reciprocal(g)?)?;
        Ok(rec == g_monic)
    }

    /// Horner evaluation on raw symbols.
    pub fn eval_raw(&self, f: &Poly, x: Symbol) -> Symbol {
        f.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.ctx.add(self.ctx.mul(acc, x), c))
    }

    pub fn eval(&self, f: &Poly, x: FieldElement) -> Result<FieldElement> {
        self.check(f)?;
        if x.field != self.ctx.id() {
            return Err(Error::MixedFields);
        }
        Ok(FieldElement {
            field: x.field,
            value: self.eval_raw(f, x.value),
        })
    }

    /// Monic `prod (x - alpha^i)` over the given exponents of an order-`n` root.
    pub fn product_of_roots(
        &self,
        alpha: FieldElement,
        n: usize,
        exponents: impl IntoIterator<Item = usize>,
    ) -> Result<Poly> {
        if alpha.field != self.ctx.id() {
            return Err(Error::MixedFields);
        }
        let mut v = vec![1];
        for i in exponents {
            if i >= n {
                return Err(Error::ExponentOutOfRange { exponent: i, n });
            }
            let root = self.ctx.pow(alpha.value, i as u64);
            let neg_root = self.ctx.neg(root);
            // v <- v * (x - root)
            v.push(0);
            for j in (0..v.len()).rev() {
                let shifted = if j > 0 { v[j - 1] } else { 0 };
                v[j] = self.ctx.add(shifted, self.ctx.mul(v[j], neg_root));
            }
        }
        Ok(Poly::trimmed(self.ctx.id(), v))
    }
}

/// Rewrites a polynomial over the extension of `emb` as one over its base,
/// failing if any coefficient lies outside the base subfield.
pub fn project_to_base(emb: &Embedding, f: &Poly) -> Result<Poly> {
    if f.field() != emb.ext().id() {
        return Err(Error::MixedFields);
    }
    let coeffs = f
        .coeffs()
        .iter()
        .map(|&c| emb.project(c).ok_or(Error::NotAClosedCoset))
        .collect::<Result<Vec<_>>>()?;
    PolyRing::new(emb.base()).poly(coeffs)
}

/// Lifts a base-field polynomial into the extension of `emb`.
pub fn lift_to_ext(emb: &Embedding, f: &Poly) -> Result<Poly> {
    if f.field() != emb.base().id() {
        return Err(Error::MixedFields);
    }
    PolyRing::new(emb.ext()).poly(f.coeffs().iter().map(|&c| emb.lift(c)).collect())
}

/// `prod_{i in coset} (x - alpha^i)` computed in the extension and
/// re-expressed over the base field.
pub fn minimal_polynomial(
    emb: &Embedding,
    alpha: FieldElement,
    n: usize,
    coset: &[usize],
) -> Result<Poly> {
    let ext = PolyRing::new(emb.ext());
    let f = ext.product_of_roots(alpha, n, coset.iter().copied())?;
    project_to_base(emb, &f)
}
