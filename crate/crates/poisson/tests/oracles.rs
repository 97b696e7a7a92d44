//! Bracket tables for the pentagon quivers against pinned expected values.

use algebra::parse::parse_rational_fn;
use algebra::{QuadElem, RationalFn, VarTable};
use poisson::{bracket, bracket_quad, verify_log_canonical};
use quiver::{fixture_quiver, Quiver};

struct Scene {
    ambient: Quiver,
    expected: Quiver,
    vars: VarTable,
    d1: RationalFn,
    y: [QuadElem; 4],
}

impl Scene {
    fn new() -> Self {
        let ambient = fixture_quiver("n5_mutated.quiver");
        let expected = fixture_quiver("n5_goldman.quiver");
        let vars = VarTable::new(ambient.labels().iter().cloned());
        let d1 = rf("(a1*a2 + a1 + 1)^2 - 4*a1*a2", &vars);
        let d2 = rf("(a1*a5 + a5 + 1)^2 - 4*a1*a5", &vars);
        let y1 = QuadElem::new(
            rf("(a3/2)*(a1*a2 + a1 + 1)", &vars),
            rf("a3/2", &vars),
            d1.clone(),
        );
        let y4 = y1.conj();
        let y2 = QuadElem::new(
            rf("(a4/2)*(a1*a5 + a5 + 1)", &vars),
            rf("a4/2", &vars),
            d2,
        );
        let y3 = y2.conj();
        Self {
            ambient,
            expected,
            vars,
            d1,
            y: [y1, y2, y3, y4],
        }
    }

    /// Substitution pinning the monomial Casimir: a5 -> -1/(a1 a2).
    fn constraint(&self) -> Vec<Option<RationalFn>> {
        let mut map = vec![None; self.ambient.len()];
        map[self.vars.index("a5").unwrap()] = Some(rf("-1/(a1*a2)", &self.vars));
        map
    }

    /// The four roots restricted to the constraint surface, moved into the
    /// single surviving extension via sqrt(d2) = sqrt(d1) / (a1 a2).
    fn constrained(&self) -> [QuadElem; 4] {
        let map = self.constraint();
        let factor = rf("1/(a1*a2)", &self.vars);
        let fix = |y: &QuadElem, rescale: bool| {
            let s = y.substitute(&map).unwrap();
            if rescale {
                s.rescale_disc(&self.d1, &factor).unwrap()
            } else {
                s
            }
        };
        [
            fix(&self.y[0], false),
            fix(&self.y[1], true),
            fix(&self.y[2], true),
            fix(&self.y[3], false),
        ]
    }

    /// Generators ordered to match the expected quiver: the five frozen
    /// coordinates followed by the four roots.
    fn generators(&self) -> Vec<QuadElem> {
        let one = RationalFn::one(self.ambient.len());
        let mut fns: Vec<QuadElem> = ["b1", "b2", "b3", "b4", "b5"]
            .iter()
            .map(|name| {
                QuadElem::scalar(RationalFn::var_named(&self.vars, name).unwrap(), one.clone())
            })
            .collect();
        fns.extend(self.y.iter().cloned());
        fns
    }

    fn rf(&self, src: &str) -> RationalFn {
        rf(src, &self.vars)
    }
}

fn rf(src: &str, vars: &VarTable) -> RationalFn {
    parse_rational_fn(src, vars).unwrap()
}

#[test]
fn coordinate_brackets_read_off_the_quiver_weights() {
    let s = Scene::new();
    for (f, g, want) in [
        ("a4", "a1", "a1*a4"),
        ("a1", "a2", "-2*a1*a2"),
        ("a1", "a5", "2*a1*a5"),
        ("b1", "b2", "2*b1*b2"),
        ("a2", "a4", "0"),
        ("a3", "b2", "-a3*b2"),
    ] {
        assert_eq!(
            bracket(&s.rf(f), &s.rf(g), &s.ambient),
            s.rf(want),
            "{{{f}, {g}}}"
        );
    }
}

#[test]
fn symmetric_coefficient_brackets() {
    let s = Scene::new();
    let trace1 = s.rf("a1*a2 + a1 + 1");
    let trace2c = s.rf("1 - 1/a2 - 1/(a1*a2)");
    assert_eq!(
        bracket(&s.rf("a4"), &trace1, &s.ambient),
        s.rf("a1*a2*a4 + a1*a4")
    );
    assert_eq!(bracket(&trace2c, &s.rf("a3"), &s.ambient), s.rf("-a3/a2"));
    assert_eq!(
        bracket(&trace2c, &trace1, &s.ambient),
        s.rf("2*a1 + (2*a1 + 2)/a2")
    );
}

#[test]
fn conjugate_roots_multiply_to_monomials_and_commute() {
    let s = Scene::new();
    let [y1, y2, y3, y4] = &s.y;
    let p14 = y1.mul(y4).unwrap();
    assert!(p14.is_rational());
    assert_eq!(p14.base, s.rf("a1*a2*a3^2"));
    let p23 = y2.mul(y3).unwrap();
    assert!(p23.is_rational());
    assert_eq!(p23.base, s.rf("a1*a5*a4^2"));
    assert!(bracket_quad(y1, y4, &s.ambient).unwrap().is_zero());
    assert!(bracket_quad(y2, y3, &s.ambient).unwrap().is_zero());
}

#[test]
fn the_constraint_collapses_the_two_extensions() {
    let s = Scene::new();
    let map = s.constraint();
    let d2c = s.y[1].disc.substitute(&map).unwrap();
    let factor = s.rf("1/(a1*a2)");
    assert_eq!(d2c, &(&factor * &factor) * &s.d1);
    let [y1c, y2c, y3c, y4c] = s.constrained();
    for y in [&y1c, &y2c, &y3c, &y4c] {
        assert_eq!(y.disc, s.d1);
    }
    assert_eq!(y1c.mul(&y4c).unwrap().base, s.rf("a1*a2*a3^2"));
    assert_eq!(y2c.mul(&y3c).unwrap().base, s.rf("-a4^2/a2"));
}

#[test]
fn constrained_roots_bracket_log_canonically() {
    let s = Scene::new();
    let q = &s.ambient;
    let [y1, y2, y3, y4] = s.constrained();

    let b21 = bracket_quad(&y2, &y1, q).unwrap();
    let b34 = bracket_quad(&y3, &y4, q).unwrap();
    assert_eq!(b21, y2.mul(&y1).unwrap());
    assert_eq!(b34, y3.mul(&y4).unwrap());

    let sum = b21.add(&b34).unwrap();
    assert!(sum.is_rational());
    assert_eq!(sum.base, s.rf("a3*a4*(a1*a2 + a1 - 1)"));

    let rational_route = bracket(
        &s.rf("a4*(1 - 1/a2 - 1/(a1*a2))"),
        &s.rf("a3*(a1*a2 + a1 + 1)"),
        q,
    );
    assert_eq!(rational_route, sum.base);

    let b24 = bracket_quad(&y2, &y4, q).unwrap();
    let b31 = bracket_quad(&y3, &y1, q).unwrap();
    assert!(b24.add(&b31).unwrap().is_zero());

    let b13 = bracket_quad(&y1, &y3, q).unwrap();
    let b42 = bracket_quad(&y4, &y2, q).unwrap();
    let combo = b13.mul(&y2).unwrap().add(&b42.mul(&y3).unwrap()).unwrap();
    assert!(combo.is_zero());

    assert!(b24.is_zero());
    assert!(b13.is_zero());
}

#[test]
fn verification_passes_on_the_constraint_surface() {
    let s = Scene::new();
    let report =
        verify_log_canonical(&s.generators(), &s.ambient, &s.expected, &s.constraint()).unwrap();
    assert_eq!(report.checks.len(), 36);
    assert!(report.all_pass(), "{}", report.render_text());
}

#[test]
fn verification_fails_off_the_constraint_surface() {
    let s = Scene::new();
    let report = verify_log_canonical(&s.generators(), &s.ambient, &s.expected, &[]).unwrap();
    assert_eq!(report.checks.len(), 36);
    let failed: Vec<&str> = report.failures().map(|c| c.label.as_str()).collect();
    assert_eq!(failed, ["{y1, y2}", "{y1, y3}", "{y2, y4}", "{y3, y4}"]);
    for c in report.failures() {
        let detail = c.detail.as_deref().unwrap_or("");
        assert!(
            detail.contains("no common quadratic extension"),
            "{detail}"
        );
    }
}
