use algebra::{rat, AlgebraError, QuadElem, RationalFn};
use quiver::Quiver;

use crate::Result;

/// Bracket induced by the quiver on functions of its vertex variables:
/// `{f, g} = sum_{i<j} b_ij (E_i f E_j g - E_j f E_i g)` where `E_i` is the
/// Euler derivation along variable `i` and `b_ij = weight2(i, j) / 2`.
pub fn bracket(f: &RationalFn, g: &RationalFn, q: &Quiver) -> RationalFn {
    let n = q.len();
    assert_eq!(f.nvars(), n, "function over the quiver variables");
    assert_eq!(g.nvars(), n, "function over the quiver variables");
    let ef: Vec<RationalFn> = (0..n).map(|i| f.euler_derive(i)).collect();
    let eg: Vec<RationalFn> = (0..n).map(|i| g.euler_derive(i)).collect();
    let mut acc = RationalFn::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let w2 = q.weight2(i, j);
            if w2 == 0 {
                continue;
            }
            let t = &(&ef[i] * &eg[j]) - &(&ef[j] * &eg[i]);
            if t.is_zero() {
                continue;
            }
            acc = &acc + &(&RationalFn::constant(n, rat(w2, 2)) * &t);
        }
    }
    acc
}

/// Product expansion `f g / 2 + {f, g}` arising in geodesic function algebra.
pub fn half_bracket(f: &RationalFn, g: &RationalFn, q: &Quiver) -> RationalFn {
    let half = RationalFn::constant(q.len(), rat(1, 2));
    &(&half * &(f * g)) + &bracket(f, g, q)
}

/// Bracket on a shared quadratic extension, extending [`bracket`] by the
/// derivation rule `{sqrt(D), g} = sqrt(D) {D, g} / (2 D)`.
pub fn bracket_quad(f: &QuadElem, g: &QuadElem, q: &Quiver) -> Result<QuadElem> {
    if f.disc != g.disc {
        return Err(AlgebraError::DiscriminantMismatch(
            "operands live in different quadratic extensions".to_string(),
        ));
    }
    let n = q.len();
    let d = &f.disc;
    let (a, b) = (&f.base, &f.rad);
    let (c, e) = (&g.base, &g.rad);
    let half = RationalFn::constant(n, rat(1, 2));
    let br = |x: &RationalFn, y: &RationalFn| bracket(x, y, q);

    let mut base = &br(a, c) + &(d * &br(b, e));
    let mixed = &(b * &br(d, e)) + &(e * &br(b, d));
    if !mixed.is_zero() {
        base = &base + &(&half * &mixed);
    }

    let mut rad = &br(a, e) + &br(b, c);
    let steep = &(e * &br(a, d)) + &(b * &br(d, c));
    if !steep.is_zero() {
        let two_d = &RationalFn::constant(n, rat(2, 1)) * d;
        rad = &rad + &steep.div(&two_d)?;
    }

    Ok(QuadElem::new(base, rad, d.clone()))
}
