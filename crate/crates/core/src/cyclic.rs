//! Cyclic codes built from defining sets, with their duals and LCD tests.

use std::sync::Arc;

use serde::Serialize;

use crate::cosets::{multiplicative_order, DefiningSet};
use crate::error::{Error, Result};
use crate::galois::{Embedding, FieldCtx, FieldElement, Symbol, DEFAULT_FIELD_BUDGET};
use crate::linalg::{self, Matrix};
use crate::poly::{lift_to_ext, project_to_base, Poly, PolyRing};

/// Knobs for building the splitting field of `x^n - 1`.
#[derive(Debug, Clone)]
pub struct CodeOptions {
    pub field_budget: u64,
    /// Modulus for the splitting field, lowest degree first.
    pub splitting_modulus: Option<Vec<u32>>,
}

impl Default for CodeOptions {
    fn default() -> Self {
        CodeOptions {
            field_budget: DEFAULT_FIELD_BUDGET,
            splitting_modulus: None,
        }
    }
}

/// The smallest extension of `base` holding the n-th roots of unity.
pub fn splitting_field(base: Arc<FieldCtx>, n: usize, opts: &CodeOptions) -> Result<Embedding> {
    let q = base.size() as u64;
    let m = multiplicative_order(q, n)?;
    if m == 1 && opts.splitting_modulus.is_none() {
        return Ok(Embedding::identity(base));
    }
    let ext_degree = base.degree() * m;
    let ext = FieldCtx::with_budget(
        base.characteristic() as u64,
        ext_degree,
        opts.splitting_modulus.as_deref(),
        opts.field_budget,
    )
    .map_err(|e| match e {
        Error::FieldTooLarge { .. } => Error::NoSplittingField { q, m },
        other => other,
    })?;
    Embedding::new(base, Arc::new(ext))
}

/// A cyclic code of length `n` over GF(q), given by its zeros `alpha^i, i in Z`.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    emb: Arc<Embedding>,
    n: usize,
    alpha: FieldElement,
    z: DefiningSet,
    g: Poly,
    h: Poly,
}

impl CyclicCode {
    pub fn from_defining_set(base: Arc<FieldCtx>, n: usize, z: DefiningSet) -> Result<Self> {
        Self::with_options(base, n, z, &CodeOptions::default())
    }

    pub fn with_options(
        base: Arc<FieldCtx>,
        n: usize,
        z: DefiningSet,
        opts: &CodeOptions,
    ) -> Result<Self> {
        if z.n() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: z.n(),
            });
        }
        let q = base.size() as u64;
        // NotCoprime surfaces here before any field work.
        multiplicative_order(q, n)?;
        if let Some(missing) = z.first_unclosed(q) {
            return Err(Error::NotGaloisClosed { q, n, missing });
        }
        let emb = Arc::new(splitting_field(base, n, opts)?);
        let alpha = emb.ext().nth_root_of_unity(n as u64)?;
        Self::assemble(emb, n, alpha, z)
    }

    fn assemble(
        emb: Arc<Embedding>,
        n: usize,
        alpha: FieldElement,
        z: DefiningSet,
    ) -> Result<Self> {
        let ext_ring = PolyRing::new(emb.ext());
        let g_ext = ext_ring.product_of_roots(alpha, n, z.iter())?;
        let g = project_to_base(&emb, &g_ext).map_err(|_| {
            Error::InvariantViolation(
                "closed defining set gave a generator outside the base field".into(),
            )
        })?;
        for i in 0..n {
            let at = ext_ring.eval_raw(&g_ext, emb.ext().pow(alpha.value, i as u64));
            if (at == 0) != z.contains(i) {
                return Err(Error::InvariantViolation(format!(
                    "generator zero at alpha^{i} disagrees with the defining set"
                )));
            }
        }
        let ring = PolyRing::new(emb.base());
        let (h, rem) = ring.divmod(&ring.x_n_minus_1(n), &g)?;
        if !rem.is_zero() {
            return Err(Error::InvariantViolation(
                "g does not divide x^n - 1".into(),
            ));
        }
        Ok(CyclicCode {
            emb,
            n,
            alpha,
            z,
            g,
            h,
        })
    }

    pub fn base(&self) -> &Arc<FieldCtx> {
        self.emb.base()
    }

    pub fn splitting(&self) -> &Arc<FieldCtx> {
        self.emb.ext()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn q(&self) -> u64 {
        self.base().size() as u64
    }

    /// Degree of the splitting field over the base field.
    pub fn splitting_degree(&self) -> u32 {
        self.splitting().degree() / self.base().degree()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.z.len()
    }

    /// Primitive n-th root of unity in the splitting field.
    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.z
    }

    pub fn generator_poly(&self) -> &Poly {
        &self.g
    }

    /// `h = (x^n - 1) / g`.
    pub fn parity_check_poly(&self) -> &Poly {
        &self.h
    }

    pub fn ring(&self) -> PolyRing<'_> {
        PolyRing::new(self.base())
    }

    /// Generator polynomial lifted into the splitting field.
    pub fn generator_in_splitting_field(&self) -> Poly {
        lift_to_ext(&self.emb, &self.g).expect("generator lives in the base field")
    }

    /// `k` rows: the shifts `x^i g(x)`.
    pub fn generator_matrix(&self) -> Matrix {
        shifts(&self.g, self.k(), self.n)
    }

    /// `n - k` rows: the shifts of the reciprocal of `h`.
    pub fn parity_check_matrix(&self) -> Matrix {
        let h_rec = self
            .ring()
            .reciprocal(&self.h)
            .expect("h divides x^n - 1 and is nonzero");
        shifts(&h_rec, self.n - self.k(), self.n)
    }

    /// The dual code, defined by `[0, n) \ -Z`. Its generator is checked
    /// against the monic reciprocal of `h`.
    pub fn dual(&self) -> Result<CyclicCode> {
        let z = self.z.negate().complement();
        let dual = Self::assemble(self.emb.clone(), self.n, self.alpha, z)?;
        let ring = self.ring();
        let expected = ring.monic(&ring.reciprocal(&self.h)?)?;
        if dual.g != expected {
            return Err(Error::InvariantViolation(
                "dual generator differs from the normalised reciprocal of h".into(),
            ));
        }
        Ok(dual)
    }

    /// Runs the three LCD tests and the hull rank check; they must agree.
    pub fn lcd_verdict(&self) -> Result<LcdVerdict> {
        let ctx = self.base();
        let self_reciprocal = self.ring().is_self_reciprocal(&self.g)?;
        let negation_closed = self.z.is_negation_closed();
        let q_power_condition = q_power_is_minus_one(self.q(), self.n)?;
        let k = self.k();
        let rows = if k <= self.n - k {
            self.generator_matrix()
        } else {
            self.parity_check_matrix()
        };
        let gram = linalg::mul_transpose(ctx, &rows, &rows);
        let gram_size = gram.len();
        let hull_trivial = linalg::rank(ctx, &gram) == gram_size;
        if self_reciprocal != negation_closed || negation_closed != hull_trivial {
            return Err(Error::InvariantViolation(format!(
                "LCD tests disagree: self-reciprocal={self_reciprocal}, \
                 negation-closed={negation_closed}, hull-trivial={hull_trivial}"
            )));
        }
        if q_power_condition && !hull_trivial {
            return Err(Error::InvariantViolation(
                "q^l = -1 mod n holds but the hull is nontrivial".into(),
            ));
        }
        Ok(LcdVerdict {
            gram_size,
            hull_trivial,
            is_lcd: hull_trivial,
            negation_closed,
            q_power_condition,
            self_reciprocal,
        })
    }

    fn check_symbols(&self, v: &[Symbol], expected: usize) -> Result<()> {
        if v.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: v.len(),
            });
        }
        if let Some(&s) = v.iter().find(|&&s| s >= self.base().size()) {
            return Err(Error::NotAnElement(s as u64));
        }
        Ok(())
    }

    /// `m(x) g(x)` as a length-`n` word.
    pub fn encode(&self, message: &[Symbol]) -> Result<Vec<Symbol>> {
        self.check_symbols(message, self.k())?;
        let ring = self.ring();
        let m = ring.poly(message.to_vec())?;
        let c = ring.mod_xn_minus_1(&ring.mul(&m, &self.g)?, self.n)?;
        Ok(c.padded(self.n))
    }

    pub fn contains(&self, word: &[Symbol]) -> Result<bool> {
        self.check_symbols(word, self.n)?;
        let ring = self.ring();
        Ok(ring.rem(&ring.poly(word.to_vec())?, &self.g)?.is_zero())
    }

    pub fn record(&self) -> CodeRecord {
        CodeRecord {
            defining_set: self.z.to_vec(),
            field: self.splitting().descriptor(),
            g: self.g.coeffs().to_vec(),
            k: self.k(),
            m: self.splitting_degree(),
            modulus: self.splitting().modulus().map(<[u32]>::to_vec),
            n: self.n,
            q: self.q(),
        }
    }
}

fn shifts(f: &Poly, count: usize, n: usize) -> Matrix {
    (0..count)
        .map(|i| {
            let mut row = vec![0; n];
            for (j, &c) in f.coeffs().iter().enumerate() {
                row[(i + j) % n] = c;
            }
            row
        })
        .collect()
}

/// Whether `q^l = -1 (mod n)` for some `1 <= l <= ord_n(q)`.
pub fn q_power_is_minus_one(q: u64, n: usize) -> Result<bool> {
    let ord = multiplicative_order(q, n)?;
    let n64 = n as u64;
    let target = (n64 - 1) % n64;
    let mut x = 1u64;
    for _ in 0..ord {
        x = x * (q % n64) % n64;
        if x == target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Outcome of the LCD tests. `is_lcd` is the agreed verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LcdVerdict {
    /// Size of the Gram matrix used for the hull check (min(k, n - k)).
    pub gram_size: usize,
    pub hull_trivial: bool,
    pub is_lcd: bool,
    pub negation_closed: bool,
    /// Sufficient condition only; reported, never required.
    pub q_power_condition: bool,
    pub self_reciprocal: bool,
}

/// Serialisable summary of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeRecord {
    pub defining_set: Vec<usize>,
    pub field: String,
    pub g: Vec<Symbol>,
    pub k: usize,
    pub m: u32,
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub q: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, 1, None).unwrap())
    }

    #[test]
    fn parity_code_n7() {
        let c = CyclicCode::from_defining_set(gf(2), 7, DefiningSet::new(7, [0])).unwrap();
        assert_eq!(c.generator_poly().coeffs(), &[1, 1]);
        assert_eq!(c.k(), 6);
        let g = c.generator_matrix();
        assert_eq!(g.len(), 6);
        assert!(g.iter().all(|r| r.iter().filter(|&&x| x != 0).count() == 2));
        assert_eq!(linalg::rank(c.base(), &g), 6);
        let gh = linalg::mul_transpose(c.base(), &g, &c.parity_check_matrix());
        assert!(gh.iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn dual_of_parity_code_is_repetition() {
        let c = CyclicCode::from_defining_set(gf(2), 7, DefiningSet::new(7, [0])).unwrap();
        let d = c.dual().unwrap();
        assert_eq!(d.k(), 1);
        assert_eq!(d.generator_poly().coeffs(), &[1; 7]);
        let dual_rows = d.generator_matrix();
        let prod = linalg::mul_transpose(c.base(), &c.generator_matrix(), &dual_rows);
        assert!(prod.iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn whole_space_and_zero_code() {
        let c = CyclicCode::from_defining_set(gf(5), 4, DefiningSet::empty(4)).unwrap();
        assert_eq!(c.k(), 4);
        let d = c.dual().unwrap();
        assert_eq!(d.k(), 0);
        assert!(c.lcd_verdict().unwrap().is_lcd);
        assert!(d.lcd_verdict().unwrap().is_lcd);
    }

    #[test]
    fn non_closed_set_rejected() {
        let err = CyclicCode::from_defining_set(gf(2), 7, DefiningSet::new(7, [1])).unwrap_err();
        assert_eq!(
            err,
            Error::NotGaloisClosed {
                q: 2,
                n: 7,
                missing: 2
            }
        );
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn hamming_code_is_not_lcd() {
        let c = CyclicCode::from_defining_set(gf(2), 7, DefiningSet::new(7, [1, 2, 4])).unwrap();
        let v = c.lcd_verdict().unwrap();
        assert!(!v.is_lcd && !v.negation_closed && !v.self_reciprocal && !v.hull_trivial);
        assert!(!v.q_power_condition);
    }

    #[test]
    fn encode_and_contains() {
        let c = CyclicCode::from_defining_set(gf(2), 7, DefiningSet::new(7, [0])).unwrap();
        assert_eq!(c.encode(&[0; 6]).unwrap(), vec![0; 7]);
        let w = c.encode(&[1, 0, 1, 1, 0, 0]).unwrap();
        assert!(c.contains(&w).unwrap());
        let mut e0 = vec![0; 7];
        e0[0] = 1;
        assert!(!c.contains(&e0).unwrap());
        assert!(matches!(
            c.encode(&[1; 5]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn splitting_field_budget() {
        // ord_31(2) = 5 -> GF(32) fits; a 16-element budget does not.
        let opts = CodeOptions {
            field_budget: 16,
            splitting_modulus: None,
        };
        let err =
            CyclicCode::with_options(gf(2), 31, DefiningSet::new(31, [0]), &opts).unwrap_err();
        assert_eq!(err, Error::NoSplittingField { q: 2, m: 5 });
    }

    #[test]
    fn q_power_condition() {
        // 2^3 = 8 = -1 mod 9
        assert!(q_power_is_minus_one(2, 9).unwrap());
        // powers of 2 mod 7 are {1, 2, 4}
        assert!(!q_power_is_minus_one(2, 7).unwrap());
    }

    #[test]
    fn code_over_gf4() {
        // ord_5(4) = 2, so the splitting field is GF(16).
        let base = Arc::new(FieldCtx::new(2, 2, None).unwrap());
        let z = DefiningSet::new(5, [1, 4]);
        let c = CyclicCode::from_defining_set(base, 5, z).unwrap();
        assert_eq!(c.splitting_degree(), 2);
        assert_eq!(c.k(), 3);
        assert!(c.lcd_verdict().unwrap().is_lcd);
        let w = c.encode(&[1, 2, 3]).unwrap();
        assert!(c.contains(&w).unwrap());
    }
}
