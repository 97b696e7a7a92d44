use crate::error::AlgebraError;
use crate::ratfn::RationalFn;
use crate::vars::VarTable;
use crate::Result;

/// Element `base + rad * sqrt(disc)` of a quadratic extension of the
/// rational function field.
///
/// All arithmetic stays inside one extension: combining elements with
/// different discriminants is an error, and re-expressing an element in a
/// compatible extension goes through [`QuadElem::rescale_disc`].
#[derive(Clone, Debug, PartialEq)]
pub struct QuadElem {
    pub base: RationalFn,
    pub rad: RationalFn,
    pub disc: RationalFn,
}

impl QuadElem {
    pub fn new(base: RationalFn, rad: RationalFn, disc: RationalFn) -> Self {
        Self { base, rad, disc }
    }

    /// Embeds a rational function with radical part zero.
    pub fn scalar(f: RationalFn, disc: RationalFn) -> Self {
        let n = f.nvars();
        Self {
            base: f,
            rad: RationalFn::zero(n),
            disc,
        }
    }

    /// The square root itself: `0 + 1 * sqrt(disc)`.
    pub fn root(disc: RationalFn) -> Self {
        let n = disc.nvars();
        Self {
            base: RationalFn::zero(n),
            rad: RationalFn::one(n),
            disc,
        }
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.rad.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.rad.is_zero()
    }

    fn check_disc(&self, other: &Self) -> Result<()> {
        if self.disc == other.disc {
            Ok(())
        } else {
            Err(AlgebraError::DiscriminantMismatch(
                "operands live in different quadratic extensions".to_string(),
            ))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_disc(rhs)?;
        Ok(Self {
            base: &self.base + &rhs.base,
            rad: &self.rad + &rhs.rad,
            disc: self.disc.clone(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_disc(rhs)?;
        Ok(Self {
            base: &self.base - &rhs.base,
            rad: &self.rad - &rhs.rad,
            disc: self.disc.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            base: -&self.base,
            rad: -&self.rad,
            disc: self.disc.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_disc(rhs)?;
        let base = &(&self.base * &rhs.base) + &(&(&self.rad * &rhs.rad) * &self.disc);
        let rad = &(&self.base * &rhs.rad) + &(&self.rad * &rhs.base);
        Ok(Self {
            base,
            rad,
            disc: self.disc.clone(),
        })
    }

    pub fn conj(&self) -> Self {
        Self {
            base: self.base.clone(),
            rad: -&self.rad,
            disc: self.disc.clone(),
        }
    }

    /// Field norm `base^2 - rad^2 * disc`.
    pub fn norm(&self) -> RationalFn {
        &(&self.base * &self.base) - &(&(&self.rad * &self.rad) * &self.disc)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.check_disc(rhs)?;
        let n = rhs.norm();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let p = self.mul(&rhs.conj())?;
        Ok(Self {
            base: p.base.div(&n)?,
            rad: p.rad.div(&n)?,
            disc: self.disc.clone(),
        })
    }

    pub fn scale(&self, f: &RationalFn) -> Self {
        Self {
            base: &self.base * f,
            rad: &self.rad * f,
            disc: self.disc.clone(),
        }
    }

    /// Rewrites the element over `new_disc` given `disc == factor^2 * new_disc`,
    /// taking the branch `sqrt(disc) = factor * sqrt(new_disc)`.
    pub fn rescale_disc(&self, new_disc: &RationalFn, factor: &RationalFn) -> Result<Self> {
        if self.disc != &(factor * factor) * new_disc {
            return Err(AlgebraError::DiscriminantMismatch(
                "discriminant is not factor^2 times the target".to_string(),
            ));
        }
        Ok(Self {
            base: self.base.clone(),
            rad: &self.rad * factor,
            disc: new_disc.clone(),
        })
    }

    /// Substitutes into all three parts; the discriminant changes with the
    /// substitution, so callers typically follow with [`QuadElem::rescale_disc`].
    pub fn substitute(&self, map: &[Option<RationalFn>]) -> Result<Self> {
        Ok(Self {
            base: self.base.substitute(map)?,
            rad: self.rad.substitute(map)?,
            disc: self.disc.substitute(map)?,
        })
    }

    /// Floating-point value on the positive branch of the square root.
    pub fn eval_f64(&self, xs: &[f64]) -> f64 {
        self.base.eval_f64(xs) + self.rad.eval_f64(xs) * self.disc.eval_f64(xs).sqrt()
    }

    pub fn render(&self, vars: &VarTable) -> String {
        format!(
            "({}) + ({})*sqrt({})",
            self.base.render(vars),
            self.rad.render(vars),
            self.disc.render(vars)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (RationalFn, RationalFn, RationalFn) {
        let n = 3;
        let p = RationalFn::var(n, 0);
        let q = RationalFn::var(n, 1);
        let d = RationalFn::var(n, 2);
        (p, q, d)
    }

    #[test]
    fn root_squares_to_discriminant() {
        let (_, _, d) = setup();
        let rho = QuadElem::root(d.clone());
        let sq = rho.mul(&rho).unwrap();
        assert_eq!(sq, QuadElem::scalar(d.clone(), d));
    }

    #[test]
    fn conjugate_product_is_norm() {
        let (p, q, d) = setup();
        let e = QuadElem {
            base: p.clone(),
            rad: q.clone(),
            disc: d.clone(),
        };
        let prod = e.mul(&e.conj()).unwrap();
        assert!(prod.rad.is_zero());
        let expect = &(&p * &p) - &(&(&q * &q) * &d);
        assert_eq!(prod.base, expect);
    }

    #[test]
    fn mismatched_extensions_refuse_to_combine() {
        let (p, q, d) = setup();
        let e1 = QuadElem::scalar(p, d.clone());
        let e2 = QuadElem::scalar(q.clone(), q);
        assert!(matches!(
            e1.add(&e2),
            Err(AlgebraError::DiscriminantMismatch(_))
        ));
    }

    #[test]
    fn rescale_disc_checks_the_square_relation() {
        let n = 2;
        let x = RationalFn::var(n, 0);
        let y = RationalFn::var(n, 1);
        let big = &(&x * &x) * &y;
        let e = QuadElem::root(big.clone());
        let r = e.rescale_disc(&y, &x).unwrap();
        assert_eq!(r.rad, x);
        assert_eq!(r.disc, y);
        let bad = e.rescale_disc(&y, &RationalFn::one(n));
        assert!(matches!(bad, Err(AlgebraError::DiscriminantMismatch(_))));
    }
}
