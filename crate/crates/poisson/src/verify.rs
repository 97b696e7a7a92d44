use algebra::{rat, QuadElem, RationalFn, VarTable, VerificationReport};
use quiver::Quiver;

use crate::bracket::bracket_quad;
use crate::Result;

/// Checks that candidate functions on the ambient quiver torus realize the
/// bracket table of `expected`: for every pair, `{f_i, f_j}` must equal
/// `b_ij f_i f_j` with `b_ij` read off `expected`. Functions are matched to
/// `expected` vertices by position, `constraints` (a substitution map over
/// the ambient variables, possibly empty) is applied first, and pairs living
/// in different quadratic extensions are rewritten over a common radicand
/// whenever the two radicands differ by the square of a monomial.
pub fn verify_log_canonical(
    fns: &[QuadElem],
    ambient: &Quiver,
    expected: &Quiver,
    constraints: &[Option<RationalFn>],
) -> Result<VerificationReport> {
    let n = ambient.len();
    assert_eq!(fns.len(), expected.len(), "one function per expected vertex");
    for f in fns {
        assert_eq!(f.nvars(), n, "functions over the ambient variables");
    }
    let constrained: Vec<QuadElem> = if constraints.iter().any(|c| c.is_some()) {
        fns.iter()
            .map(|f| f.substitute(constraints))
            .collect::<Result<_>>()?
    } else {
        fns.to_vec()
    };
    let vars = VarTable::new(ambient.labels().iter().cloned());
    let mut report = VerificationReport::new("log_canonical");
    for i in 0..constrained.len() {
        for j in i + 1..constrained.len() {
            let label = format!("{{{}, {}}}", expected.label(i), expected.label(j));
            let Some((fi, fj)) = common_extension(&constrained[i], &constrained[j]) else {
                report.check_with(
                    label,
                    false,
                    format!(
                        "no common quadratic extension: sqrt({}) vs sqrt({})",
                        constrained[i].disc.render(&vars),
                        constrained[j].disc.render(&vars)
                    ),
                );
                continue;
            };
            let got = bracket_quad(&fi, &fj, ambient)?;
            let weight = RationalFn::constant(n, rat(expected.weight2(i, j), 2));
            let want = fi.mul(&fj)?.scale(&weight);
            if got.sub(&want)?.is_zero() {
                report.check(label, true);
            } else {
                let witness = match fi.mul(&fj).and_then(|p| got.div(&p)) {
                    Ok(ratio) => format!(
                        "bracket / product = {}, expected {}",
                        ratio.render(&vars),
                        weight.render(&vars)
                    ),
                    Err(_) => format!("bracket = {}", got.render(&vars)),
                };
                report.check_with(label, false, witness);
            }
        }
    }
    Ok(report)
}

/// Rewrites two elements over one radicand: scalars adopt the partner's
/// extension, and genuinely radical elements merge when their radicands
/// differ by a monomial square.
fn common_extension(f: &QuadElem, g: &QuadElem) -> Option<(QuadElem, QuadElem)> {
    let n = f.nvars();
    if f.is_rational() && g.is_rational() {
        let one = RationalFn::one(n);
        return Some((
            QuadElem::scalar(f.base.clone(), one.clone()),
            QuadElem::scalar(g.base.clone(), one),
        ));
    }
    if f.is_rational() {
        return Some((QuadElem::scalar(f.base.clone(), g.disc.clone()), g.clone()));
    }
    if g.is_rational() {
        return Some((f.clone(), QuadElem::scalar(g.base.clone(), f.disc.clone())));
    }
    if f.disc == g.disc {
        return Some((f.clone(), g.clone()));
    }
    let ratio = g.disc.div(&f.disc).ok()?;
    let (c, e) = ratio.sqrt_monomial().ok()?;
    let factor = RationalFn::monomial(n, e, c);
    let rescaled = g.rescale_disc(&f.disc, &factor).ok()?;
    Some((f.clone(), rescaled))
}
