use crate::error::{format_err, QuiverError};
use crate::graph::Quiver;
use crate::Result;

/// Basis of the integer kernel of the exchange matrix.
///
/// Unimodular column reduction: the transform columns that zero out the
/// matrix form a basis of the full kernel lattice, so every vector is
/// primitive. Vectors are sign-normalized and sorted.
pub fn casimir_basis(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.len();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| q.weight2(i, j) as i128).collect())
        .collect();
    let mut t: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut pivot = vec![false; n];
    for r in 0..n {
        loop {
            let act: Vec<usize> = (0..n).filter(|&c| !pivot[c] && m[r][c] != 0).collect();
            match act.len() {
                0 => break,
                1 => {
                    pivot[act[0]] = true;
                    break;
                }
                _ => {
                    let cmin = *act.iter().min_by_key(|&&c| m[r][c].abs()).unwrap();
                    for &c in &act {
                        if c == cmin {
                            continue;
                        }
                        let f = m[r][c] / m[r][cmin];
                        if f != 0 {
                            for row in 0..n {
                                m[row][c] -= f * m[row][cmin];
                                t[row][c] -= f * t[row][cmin];
                            }
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for c in 0..n {
        if pivot[c] {
            continue;
        }
        debug_assert!((0..n).all(|r| m[r][c] == 0));
        let mut v: Vec<i64> = (0..n)
            .map(|r| i64::try_from(t[r][c]).expect("kernel entry fits"))
            .collect();
        if let Some(first) = v.iter().find(|&&x| x != 0) {
            if *first < 0 {
                for x in &mut v {
                    *x = -*x;
                }
            }
        }
        out.push(v);
    }
    out.sort();
    out
}

/// Whether the exponent vector is annihilated by the exchange matrix.
pub fn is_casimir(q: &Quiver, v: &[i64]) -> bool {
    let n = q.len();
    v.len() == n
        && (0..n).all(|i| {
            (0..n)
                .map(|j| q.weight2(i, j) as i128 * v[j] as i128)
                .sum::<i128>()
                == 0
        })
}

/// Exponent transport of a monomial Casimir through the mutation at `at`,
/// taken on the quiver before the mutation: the entry at the mutated vertex
/// becomes the weighted in-neighbor sum minus itself.
pub fn transport(q: &Quiver, at: &str, v: &[i64]) -> Result<Vec<i64>> {
    let k = q.require(at)?;
    if q.is_frozen(k) {
        return Err(QuiverError::FrozenVertex(at.to_string()));
    }
    if (0..q.len()).any(|j| q.weight2(k, j) % 2 != 0) {
        return Err(QuiverError::NonIntegralRow(at.to_string()));
    }
    assert_eq!(v.len(), q.len());
    let s: i64 = (0..q.len())
        .filter(|&i| q.weight2(i, k) > 0)
        .map(|i| q.weight2(i, k) / 2 * v[i])
        .sum();
    let mut out = v.to_vec();
    out[k] = s - v[k];
    Ok(out)
}

/// Quiver on monomial generators: the new doubled weight between two
/// generators is `u W v` for their integral exponent vectors.
pub fn pushforward(q: &Quiver, gens: &[(String, bool, Vec<i64>)]) -> Result<Quiver> {
    let n = q.len();
    let mut out = Quiver::new(gens.iter().map(|(l, f, _)| (l.clone(), *f)))?;
    for (p, (_, _, u)) in gens.iter().enumerate() {
        assert_eq!(u.len(), n);
        for (r, (_, _, v)) in gens.iter().enumerate() {
            if p == r {
                continue;
            }
            let w: i128 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| u[i] as i128 * q.weight2(i, j) as i128 * v[j] as i128)
                .sum();
            out.w[p][r] = i64::try_from(w).expect("pushforward weight fits");
        }
    }
    Ok(out)
}

/// Parses per-vertex annotation lines `name e1 e2 ...`.
pub fn parse_annotations(src: &str) -> Result<Vec<(String, Vec<i64>)>> {
    let mut out: Vec<(String, Vec<i64>)> = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let ln = ln + 1;
        let mut toks = line.split_whitespace();
        let name = toks.next().unwrap().to_string();
        if out.iter().any(|(n, _)| *n == name) {
            return Err(format_err(ln, format!("duplicate annotation for `{name}`")));
        }
        let vals: Vec<i64> = toks
            .map(|t| t.parse().map_err(|_| format_err(ln, "bad exponent")))
            .collect::<Result<_>>()?;
        if vals.is_empty() {
            return Err(format_err(ln, "expected `name e1 e2 ...`"));
        }
        if let Some((_, first)) = out.first() {
            if first.len() != vals.len() {
                return Err(format_err(ln, "inconsistent column count"));
            }
        }
        out.push((name, vals));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> Quiver {
        let mut q = Quiver::new([("u", false), ("v", false), ("z", false)]).unwrap();
        q.set_weight2(0, 1, 2);
        q.set_weight2(1, 2, 2);
        q.set_weight2(0, 2, -2);
        q
    }

    #[test]
    fn kernel_of_oriented_cycle() {
        let q = cycle3();
        let basis = casimir_basis(&q);
        assert_eq!(basis, vec![vec![1, 1, 1]]);
        assert!(is_casimir(&q, &[2, 2, 2]));
        assert!(!is_casimir(&q, &[1, 0, 1]));
    }

    #[test]
    fn transport_stays_in_kernel_and_returns() {
        let q = cycle3();
        let v = vec![1, 1, 1];
        let t = transport(&q, "v", &v).unwrap();
        assert_eq!(t, vec![1, 0, 1]);
        let m = q.mutate("v").unwrap();
        assert!(is_casimir(&m, &t));
        assert_eq!(transport(&m, "v", &t).unwrap(), v);
    }

    #[test]
    fn pushforward_contracts_weights() {
        let q = cycle3();
        let gens = vec![
            ("u2".to_string(), false, vec![2, 0, 0]),
            ("vz".to_string(), false, vec![0, 1, 1]),
            ("cas".to_string(), false, vec![1, 1, 1]),
        ];
        let p = pushforward(&q, &gens).unwrap();
        assert_eq!(p.weight2(0, 1), 0);
        assert_eq!(p.weight2(0, 2), 0);
        assert_eq!(p.weight2(1, 2), 0);
        let gens = vec![
            ("u2".to_string(), false, vec![2, 0, 0]),
            ("v".to_string(), false, vec![0, 1, 0]),
        ];
        let p = pushforward(&q, &gens).unwrap();
        assert_eq!(p.weight2(0, 1), 4);
    }

    #[test]
    fn annotations_parse() {
        let a = parse_annotations("u 1 0 0\nv 1 0 1\n").unwrap();
        assert_eq!(a[1], ("v".to_string(), vec![1, 0, 1]));
        assert!(parse_annotations("u 1\nu 2\n").is_err());
        assert!(parse_annotations("u 1 2\nv 1\n").is_err());
    }
}
