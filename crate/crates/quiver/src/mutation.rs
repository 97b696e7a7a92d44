use algebra::{rat, LaurentPoly, Rational, RationalFn, VarTable};

use crate::error::QuiverError;
use crate::graph::Quiver;
use crate::Result;

impl Quiver {
    /// Mutation at the vertex named `at`.
    pub fn mutate(&self, at: &str) -> Result<Quiver> {
        self.mutate_at(self.require(at)?)
    }

    /// Mutation at vertex index `k`.
    pub fn mutate_at(&self, k: usize) -> Result<Quiver> {
        let n = self.len();
        if self.is_frozen(k) {
            return Err(QuiverError::FrozenVertex(self.label(k).to_string()));
        }
        if (0..n).any(|j| self.w[k][j] % 2 != 0) {
            return Err(QuiverError::NonIntegralRow(self.label(k).to_string()));
        }
        let mut q = self.clone();
        for i in 0..n {
            for j in 0..n {
                q.w[i][j] = if i == k || j == k {
                    -self.w[i][j]
                } else {
                    self.w[i][j]
                        + (self.w[i][k].abs() * self.w[k][j] + self.w[i][k] * self.w[k][j].abs())
                            / 4
                };
            }
        }
        Ok(q)
    }
}

/// Chart on the quiver torus: each vertex carries its coordinate expressed in
/// a fixed ambient variable table.
#[derive(Clone, Debug)]
pub struct Seed {
    pub quiver: Quiver,
    pub vars: VarTable,
    pub exprs: Vec<RationalFn>,
}

impl Seed {
    /// Chart whose coordinates are the quiver's own vertex variables.
    pub fn initial(quiver: Quiver) -> Self {
        let vars = VarTable::new(quiver.labels().iter().cloned());
        let n = vars.len();
        let exprs = (0..n).map(|i| RationalFn::var(n, i)).collect();
        Self {
            quiver,
            vars,
            exprs,
        }
    }

    pub fn mutate(&self, at: &str) -> Result<Seed> {
        let k = self.quiver.require(at)?;
        let quiver = self.quiver.mutate_at(k)?;
        let n = self.vars.len();
        let xk = &self.exprs[k];
        if *xk == RationalFn::constant(n, rat(-1, 1)) {
            return Err(QuiverError::DisallowedValue(at.to_string()));
        }
        let one = RationalFn::one(n);
        let plus = &one + &xk.recip()?;
        let minus = &one + xk;
        let mut exprs = Vec::with_capacity(self.exprs.len());
        for (i, xi) in self.exprs.iter().enumerate() {
            if i == k {
                exprs.push(xk.recip()?);
                continue;
            }
            let b = self.quiver.weight2(i, k) / 2;
            if b == 0 {
                exprs.push(xi.clone());
            } else if b > 0 {
                exprs.push(xi * &plus.pow(-b)?);
            } else {
                exprs.push(xi * &minus.pow(-b)?);
            }
        }
        Ok(Seed {
            quiver,
            vars: self.vars.clone(),
            exprs,
        })
    }

    pub fn mutate_all(&self, at: &[&str]) -> Result<Seed> {
        let mut s = self.clone();
        for name in at {
            s = s.mutate(name)?;
        }
        Ok(s)
    }

    /// Makes the current coordinates the ambient variables.
    pub fn rebase(&self) -> Seed {
        Seed::initial(self.quiver.clone())
    }

    /// Substitutes a constant for the chart variable `name` and removes the
    /// matching vertex. Only valid on a rebased seed, where vertex labels and
    /// variables coincide.
    pub fn specialize(&self, name: &str, value: Rational) -> Result<Seed> {
        let v = self
            .vars
            .index(name)
            .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))?;
        let k = self.quiver.require(name)?;
        let n = self.vars.len();
        let mut map: Vec<Option<RationalFn>> = vec![None; n];
        map[v] = Some(RationalFn::constant(n, value));
        let mut exprs = Vec::new();
        for (i, e) in self.exprs.iter().enumerate() {
            if i == k {
                continue;
            }
            let image = e.substitute(&map).map_err(QuiverError::Algebra)?;
            exprs.push(drop_var(&image, v)?);
        }
        let keep: Vec<&str> = (0..self.quiver.len())
            .filter(|&i| i != k)
            .map(|i| self.quiver.label(i))
            .collect();
        let quiver = self.quiver.induced(&keep)?;
        let vars = VarTable::new(
            (0..n)
                .filter(|&i| i != v)
                .map(|i| self.vars.name(i).to_string()),
        );
        Ok(Seed {
            quiver,
            vars,
            exprs,
        })
    }
}

fn drop_var(f: &RationalFn, v: usize) -> Result<RationalFn> {
    let project = |p: &LaurentPoly| -> LaurentPoly {
        let n = p.nvars();
        let mut out = LaurentPoly::zero(n - 1);
        for (e, c) in p.terms() {
            assert_eq!(e.0[v], 0, "projected variable still present");
            let mut ex = Vec::with_capacity(n - 1);
            ex.extend_from_slice(&e.0[..v]);
            ex.extend_from_slice(&e.0[v + 1..]);
            out = &out
                + &LaurentPoly::monomial(n - 1, algebra::ExponentVector(ex), c.clone());
        }
        out
    };
    RationalFn::new(project(f.num()), project(f.den())).map_err(QuiverError::Algebra)
}
