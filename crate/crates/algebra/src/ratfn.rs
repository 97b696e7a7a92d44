use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::expt::ExponentVector;
use crate::poly::{rat_pow, LaurentPoly};
use crate::vars::VarTable;
use crate::{Rational, Result};

/// Ratio of Laurent polynomials.
///
/// Canonical form: exact quotients are divided out opportunistically, the
/// denominator has per-variable minimum exponent zero and leading coefficient
/// one. Equality is decided by cross-multiplication, so it never depends on
/// a fraction being fully reduced.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        assert_eq!(num.nvars(), den.nvars());
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = num.nvars();
        if num.is_zero() {
            return Ok(Self {
                num: LaurentPoly::zero(n),
                den: LaurentPoly::one(n),
            });
        }
        let (mut num, mut den) = (num, den);
        // Opportunistic reduction. The term-count gate skips attempts that
        // rarely succeed; a skipped reduction only leaves the fraction
        // unreduced, and equality is cross-multiplied anyway.
        let mut reduced = false;
        if num.term_count() >= den.term_count() {
            if let Some(q) = num.exact_div(&den) {
                num = q;
                den = LaurentPoly::one(n);
                reduced = true;
            }
        }
        if !reduced && den.term_count() >= num.term_count() {
            if let Some(q) = den.exact_div(&num) {
                num = LaurentPoly::one(n);
                den = q;
            }
        }
        let m = den.min_exponents();
        if !m.is_zero() {
            let shift = m.neg();
            num = num.shift(&shift);
            den = den.shift(&shift);
        }
        let lc = den.leading().unwrap().1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        Self {
            num: p,
            den: LaurentPoly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(nvars, c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(LaurentPoly::var(nvars, i))
    }

    pub fn var_named(vars: &VarTable, name: &str) -> Result<Self> {
        let i = vars
            .index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars.len(), i))
    }

    /// Monomial with the given doubled exponent vector and coefficient.
    pub fn monomial(nvars: usize, e: ExponentVector, c: Rational) -> Self {
        Self::from_poly(LaurentPoly::monomial(nvars, e, c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let cn = self.num.as_constant()?;
        let cd = self.den.as_constant()?;
        Some(cn / cd)
    }

    /// Coefficient and doubled exponent when the function is a single monomial.
    pub fn as_monomial(&self) -> Option<(Rational, ExponentVector)> {
        let (en, cn) = self.num.as_monomial()?;
        let (ed, cd) = self.den.as_monomial()?;
        Some((cn / cd, en.sub(ed)))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Integer power; negative powers of zero are errors.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one(self.nvars()));
        }
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one(self.nvars());
        let mut b = base;
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Half-integer power `self^(p/2)`; the square root must be an exact
    /// monomial.
    pub fn pow_half(&self, p: i64) -> Result<Self> {
        if p % 2 == 0 {
            return self.pow(p / 2);
        }
        let (c, e) = self.sqrt_monomial()?;
        Self::monomial(self.nvars(), e, c).pow(p)
    }

    /// Exact square root of a monomial: returns `(c, e)` with
    /// `(c x^e)^2 = self`. Requires integral exponents, a positive
    /// coefficient, and perfect squares in the coefficient.
    pub fn sqrt_monomial(&self) -> Result<(Rational, ExponentVector)> {
        let (c, e) = self.as_monomial().ok_or_else(|| {
            AlgebraError::NonSquareSubstitution("square root of a non-monomial".to_string())
        })?;
        if c.is_negative() {
            return Err(AlgebraError::NonSquareSubstitution(
                "square root of a negative coefficient".to_string(),
            ));
        }
        let half = e.halved().ok_or_else(|| {
            AlgebraError::NonSquareSubstitution(
                "square root of a half-integer power".to_string(),
            )
        })?;
        let root = |x: &num::BigInt| -> Result<num::BigInt> {
            let s = x.sqrt();
            if &(&s * &s) == x {
                Ok(s)
            } else {
                Err(AlgebraError::NonSquareSubstitution(format!(
                    "{x} is not a perfect square"
                )))
            }
        };
        let sn = root(c.numer())?;
        let sd = root(c.denom())?;
        Ok((Rational::new(sn, sd), half))
    }

    /// Euler derivation with the quotient rule.
    pub fn euler_derive(&self, v: usize) -> Self {
        let num = &(&self.num.euler_derive(v) * &self.den)
            - &(&self.num * &self.den.euler_derive(v));
        let den = &self.den * &self.den;
        Self::new(num, den).expect("nonzero denominator squared")
    }

    /// Substitutes `map[i]` for variable `i` where given; `None` keeps the
    /// variable. Half-integer powers require monomial images with exact
    /// square roots.
    pub fn substitute(&self, map: &[Option<RationalFn>]) -> Result<Self> {
        let ns = poly_substitute(&self.num, map)?;
        let ds = poly_substitute(&self.den, map)?;
        ns.div(&ds)
    }

    pub fn eval_roots(&self, roots: &[Rational]) -> Result<Rational> {
        let d = self.den.eval_roots(roots)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.num.eval_roots(roots)? / d)
    }

    pub fn eval_values(&self, xs: &[Rational]) -> Result<Rational> {
        let d = self.den.eval_values(xs)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.num.eval_values(xs)? / d)
    }

    pub fn eval_f64(&self, xs: &[f64]) -> f64 {
        self.num.eval_f64(xs) / self.den.eval_f64(xs)
    }

    pub fn render(&self, vars: &VarTable) -> String {
        if self.den.is_one() {
            self.num.render(vars)
        } else {
            format!("({})/({})", self.num.render(vars), self.den.render(vars))
        }
    }
}

fn poly_substitute(p: &LaurentPoly, map: &[Option<RationalFn>]) -> Result<RationalFn> {
    let n = p.nvars();
    assert_eq!(map.len(), n);
    let mut acc = RationalFn::zero(n);
    for (e, c) in p.terms() {
        let mut t = RationalFn::constant(n, c.clone());
        let mut keep = ExponentVector::zero(n);
        let mut dead = false;
        for i in 0..n {
            let k = e.0[i];
            if k == 0 {
                continue;
            }
            match &map[i] {
                None => {
                    keep.0[i] = k;
                }
                Some(g) => {
                    if g.is_zero() {
                        if k < 0 {
                            return Err(AlgebraError::DivisionByZero);
                        }
                        dead = true;
                        break;
                    }
                    if k % 2 == 0 {
                        t = &t * &g.pow((k / 2) as i64)?;
                    } else {
                        let (rc, re) = g.sqrt_monomial()?;
                        let m = RationalFn::monomial(
                            n,
                            re.scale(k),
                            rat_pow(&rc, k as i64)?,
                        );
                        t = &t * &m;
                    }
                }
            }
        }
        if dead {
            continue;
        }
        if !keep.is_zero() {
            t = &t * &RationalFn::monomial(n, keep, Rational::one());
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominators")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
