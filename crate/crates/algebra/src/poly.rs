use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::expt::ExponentVector;
use crate::vars::VarTable;
use crate::{Rational, Result};

/// Laurent polynomial over the rationals.
///
/// Terms are kept in a map ordered by graded lexicographic order on the
/// doubled exponent vectors; zero coefficients are never stored, so equality
/// of canonical forms is structural equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector::zero(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector::var(nvars, i), Rational::one());
        p
    }

    pub fn monomial(nvars: usize, e: ExponentVector, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(e, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.is_zero() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Greatest term in graded lexicographic order.
    pub fn leading(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Least term in graded lexicographic order.
    pub fn trailing(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.nvars);
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^delta` (doubled exponents).
    pub fn shift(&self, delta: &ExponentVector) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(delta), c.clone()))
                .collect(),
        }
    }

    /// Entrywise minimum exponent over all terms; zero for the zero polynomial.
    pub fn min_exponents(&self) -> ExponentVector {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(e) => e.clone(),
            None => return ExponentVector::zero(self.nvars),
        };
        for e in it {
            m.min_with(e);
        }
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euler derivation `x_v d/dx_v`: scales each term by its exponent of `x_v`.
    pub fn euler_derive(&self, v: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = Rational::new(e.0[v].into(), 2.into());
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Exact quotient `self / d` in the Laurent ring, if it exists.
    ///
    /// Long division by the leading term. Every term of an exact quotient
    /// lies between `trailing(self) - trailing(d)` and
    /// `leading(self) - leading(d)` in graded lexicographic order, and the
    /// emitted terms strictly decrease, so the first emission below the lower
    /// bound proves inexactness. An emission cap keeps pathological
    /// non-quotients from degenerating into long walks; a capped-out division
    /// is reported as inexact, which only leaves a fraction unreduced and
    /// never affects equality tests.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert_eq!(self.nvars, d.nvars);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some((de, dc)) = d.as_monomial() {
            let inv = dc.recip();
            let neg = de.neg();
            return Some(self.shift(&neg).scale(&inv));
        }
        // Degree spread is additive under multiplication, so a narrower
        // dividend can never contain the divisor as a factor.
        let spread = |p: &LaurentPoly| {
            p.leading().unwrap().0.degree() - p.trailing().unwrap().0.degree()
        };
        if spread(self) < spread(d) {
            return None;
        }
        let (dlt_e, dlt_c) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let t_lo = self
            .trailing()
            .unwrap()
            .0
            .sub(d.trailing().unwrap().0);
        let cap = 2 * (self.terms.len() + d.terms.len()) + 64;
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        let mut emitted = 0usize;
        while let Some((re, rc)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let te = re.sub(&dlt_e);
            if te < t_lo {
                return None;
            }
            emitted += 1;
            if emitted > cap {
                return None;
            }
            let tc = &rc / &dlt_c;
            for (e, c) in &d.terms {
                r.add_term(e.add(&te), -(c * &tc));
            }
            q.add_term(te, tc);
        }
        Some(q)
    }

    /// Evaluates with variable values given through their square roots:
    /// variable `i` takes the value `roots[i]^2`, so half-integer powers stay
    /// exact.
    pub fn eval_roots(&self, roots: &[Rational]) -> Result<Rational> {
        assert_eq!(roots.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                t *= rat_pow(&roots[i], k as i64)?;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluates at direct variable values; requires integral exponents.
    pub fn eval_values(&self, xs: &[Rational]) -> Result<Rational> {
        assert_eq!(xs.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k % 2 != 0 {
                    return Err(AlgebraError::NonSquareSubstitution(format!(
                        "half-integer power of variable #{i} in exact evaluation"
                    )));
                }
                t *= rat_pow(&xs[i], (k / 2) as i64)?;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Floating-point evaluation; half powers need positive values.
    pub fn eval_f64(&self, xs: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut t = rational_to_f64(c);
            for (i, &k) in e.0.iter().enumerate() {
                t *= xs[i].powf(k as f64 / 2.0);
            }
            acc += t;
        }
        acc
    }

    /// Canonical text form, terms in descending graded lexicographic order.
    pub fn render(&self, vars: &VarTable) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            let mut varpart: Vec<String> = Vec::new();
            for (i, &x) in e.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = vars.name(i);
                if x == 2 {
                    varpart.push(name.to_string());
                } else if x % 2 == 0 {
                    let p = x / 2;
                    if p > 0 {
                        varpart.push(format!("{name}^{p}"));
                    } else {
                        varpart.push(format!("{name}^({p})"));
                    }
                } else {
                    varpart.push(format!("{name}^({x}/2)"));
                }
            }
            if varpart.is_empty() {
                parts.push(render_rational(&mag));
            } else {
                if !mag.is_one() {
                    parts.push(render_rational(&mag));
                }
                parts.extend(varpart);
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

pub(crate) fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Integer power of a rational scalar; negative powers of zero are errors.
pub fn rat_pow(r: &Rational, k: i64) -> Result<Rational> {
    if k == 0 {
        return Ok(Rational::one());
    }
    if r.is_zero() {
        if k < 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        return Ok(Rational::zero());
    }
    let base = if k < 0 { r.recip() } else { r.clone() };
    let mut acc = Rational::one();
    let mut b = base;
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        n >>= 1;
    }
    Ok(acc)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}
