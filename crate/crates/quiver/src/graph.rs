use std::fmt::Write as _;

use crate::error::{format_err, QuiverError};
use crate::Result;

/// Labeled quiver with a skew-symmetric exchange matrix.
///
/// Weights are stored doubled so half-integer multiplicities stay integral:
/// `weight2(i, j) = 2 b_ij`, positive when arrows run from `i` to `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub(crate) labels: Vec<String>,
    pub(crate) frozen: Vec<bool>,
    pub(crate) w: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn new<I, S>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, bool)>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut frozen = Vec::new();
        for (name, f) in vertices {
            let name = name.into();
            if labels.iter().any(|l| *l == name) {
                return Err(QuiverError::DuplicateLabel(name));
            }
            labels.push(name);
            frozen.push(f);
        }
        let n = labels.len();
        Ok(Self {
            labels,
            frozen,
            w: vec![vec![0; n]; n],
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_frozen(&self, i: usize) -> bool {
        self.frozen[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
    }

    /// Doubled weight `2 b_ij`.
    pub fn weight2(&self, i: usize, j: usize) -> i64 {
        self.w[i][j]
    }

    pub fn set_weight2(&mut self, i: usize, j: usize, w2: i64) {
        assert_ne!(i, j, "no self-arrows");
        self.w[i][j] = w2;
        self.w[j][i] = -w2;
    }

    /// Parses the fixture text form.
    ///
    /// Header `quiver <n>`, then `n` vertex lines `name[ frozen]`, then weight
    /// lines `i j w` with 1-based `i < j` and `w` an integer or `p/2`.
    pub fn parse(src: &str) -> Result<Self> {
        let mut body = src
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, header) = body.next().ok_or_else(|| format_err(0, "empty input"))?;
        let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["quiver", count] => count
                .parse()
                .map_err(|_| format_err(ln, "bad vertex count"))?,
            _ => return Err(format_err(ln, "expected `quiver <n>` header")),
        };
        let mut vertices = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, line) = body
                .next()
                .ok_or_else(|| format_err(ln, "missing vertex lines"))?;
            match line.split_whitespace().collect::<Vec<_>>()[..] {
                [name] => vertices.push((name.to_string(), false)),
                [name, "frozen"] => vertices.push((name.to_string(), true)),
                _ => return Err(format_err(ln, "expected `name[ frozen]`")),
            }
        }
        let mut q = Self::new(vertices).map_err(|e| match e {
            QuiverError::DuplicateLabel(l) => format_err(ln, format!("duplicate vertex `{l}`")),
            e => e,
        })?;
        for (ln, line) in body {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [i, j, w] = toks[..] else {
                return Err(format_err(ln, "expected `i j w`"));
            };
            let parse_ix = |t: &str| -> Result<usize> {
                let v: usize = t.parse().map_err(|_| format_err(ln, "bad vertex index"))?;
                if v == 0 || v > n {
                    return Err(format_err(ln, "vertex index out of range"));
                }
                Ok(v - 1)
            };
            let i = parse_ix(i)?;
            let j = parse_ix(j)?;
            if i >= j {
                return Err(format_err(ln, "weight lines require i < j"));
            }
            let w2: i64 = match w.strip_suffix("/2") {
                Some(p) => p.parse().map_err(|_| format_err(ln, "bad weight"))?,
                None => {
                    let v: i64 = w.parse().map_err(|_| format_err(ln, "bad weight"))?;
                    2 * v
                }
            };
            if w2 == 0 || q.w[i][j] != 0 {
                return Err(format_err(ln, "zero or repeated weight entry"));
            }
            q.set_weight2(i, j, w2);
        }
        Ok(q)
    }

    /// Renders the text form; `parse` of the result round-trips exactly.
    pub fn render(&self) -> String {
        let mut s = format!("quiver {}\n", self.len());
        for i in 0..self.len() {
            s.push_str(&self.labels[i]);
            if self.frozen[i] {
                s.push_str(" frozen");
            }
            s.push('\n');
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let w = self.w[i][j];
                if w == 0 {
                    continue;
                }
                if w % 2 == 0 {
                    let _ = writeln!(s, "{} {} {}", i + 1, j + 1, w / 2);
                } else {
                    let _ = writeln!(s, "{} {} {}/2", i + 1, j + 1, w);
                }
            }
        }
        s
    }

    /// Reorders vertices; `perm[new] = old`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len());
        let labels = perm.iter().map(|&o| self.labels[o].clone()).collect();
        let frozen = perm.iter().map(|&o| self.frozen[o]).collect();
        let w = perm
            .iter()
            .map(|&oi| perm.iter().map(|&oj| self.w[oi][oj]).collect())
            .collect();
        Self { labels, frozen, w }
    }

    /// Equality after matching vertices by label.
    pub fn eq_by_labels(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut map = Vec::with_capacity(self.len());
        for l in &self.labels {
            match other.index_of(l) {
                Some(j) => map.push(j),
                None => return false,
            }
        }
        for i in 0..self.len() {
            if self.frozen[i] != other.frozen[map[i]] {
                return false;
            }
            for j in 0..self.len() {
                if self.w[i][j] != other.w[map[i]][map[j]] {
                    return false;
                }
            }
        }
        true
    }

    /// Subquiver on the named vertices, in the given order.
    pub fn induced(&self, names: &[&str]) -> Result<Self> {
        let idx: Vec<usize> = names.iter().map(|n| self.require(n)).collect::<Result<_>>()?;
        let mut q = Self::new(
            idx.iter()
                .map(|&i| (self.labels[i].clone(), self.frozen[i])),
        )?;
        for (p, &i) in idx.iter().enumerate() {
            for (r, &j) in idx.iter().enumerate() {
                q.w[p][r] = self.w[i][j];
            }
        }
        Ok(q)
    }

    pub fn rename(&mut self, from: &str, to: &str) -> Result<()> {
        let i = self.require(from)?;
        if from != to && self.labels.iter().any(|l| l == to) {
            return Err(QuiverError::DuplicateLabel(to.to_string()));
        }
        self.labels[i] = to.to_string();
        Ok(())
    }

    /// Applies all label moves `from -> to` simultaneously.
    pub fn relabel(&mut self, moves: &[(&str, &str)]) -> Result<()> {
        let mut new_labels = self.labels.clone();
        let mut sources = vec![false; self.len()];
        for (from, to) in moves {
            let i = self.require(from)?;
            if sources[i] {
                return Err(QuiverError::DuplicateLabel((*from).to_string()));
            }
            sources[i] = true;
            new_labels[i] = (*to).to_string();
        }
        for (i, a) in new_labels.iter().enumerate() {
            if new_labels[i + 1..].iter().any(|b| b == a) {
                return Err(QuiverError::DuplicateLabel(a.clone()));
            }
        }
        self.labels = new_labels;
        Ok(())
    }

    /// Glues the listed disjoint vertex pairs. The merged vertex is named
    /// `first*second`, is frozen only when both members are, and its weights
    /// are the sums over the members.
    pub fn amalgamate(&self, pairs: &[(&str, &str)]) -> Result<Self> {
        let n = self.len();
        let mut partner = vec![usize::MAX; n];
        let mut pair_at: Vec<Option<(usize, usize)>> = vec![None; n];
        for (a, b) in pairs {
            let ia = self.require(a)?;
            let ib = self.require(b)?;
            if ia == ib || partner[ia] != usize::MAX || partner[ib] != usize::MAX {
                return Err(QuiverError::OverlappingPairs(format!("{a}, {b}")));
            }
            partner[ia] = ib;
            partner[ib] = ia;
            pair_at[ia.min(ib)] = Some((ia, ib));
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut vertices: Vec<(String, bool)> = Vec::new();
        let mut grouped = vec![false; n];
        for i in 0..n {
            if grouped[i] {
                continue;
            }
            if let Some((ia, ib)) = pair_at[i] {
                grouped[ia] = true;
                grouped[ib] = true;
                groups.push(vec![ia, ib]);
                vertices.push((
                    format!("{}*{}", self.labels[ia], self.labels[ib]),
                    self.frozen[ia] && self.frozen[ib],
                ));
            } else {
                grouped[i] = true;
                groups.push(vec![i]);
                vertices.push((self.labels[i].clone(), self.frozen[i]));
            }
        }
        let mut q = Self::new(vertices)?;
        for (p, gp) in groups.iter().enumerate() {
            for (r, gr) in groups.iter().enumerate() {
                q.w[p][r] = gp
                    .iter()
                    .flat_map(|&i| gr.iter().map(move |&j| self.w[i][j]))
                    .sum();
            }
        }
        Ok(q)
    }

    /// Label-free isomorphism respecting frozen flags and weights.
    pub fn isomorphic_to(&self, other: &Self) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        let sig = |q: &Self, i: usize| {
            let mut ws: Vec<i64> = (0..n).map(|j| q.w[i][j]).filter(|&w| w != 0).collect();
            ws.sort_unstable();
            (q.frozen[i], ws)
        };
        let sa: Vec<_> = (0..n).map(|i| sig(self, i)).collect();
        let sb: Vec<_> = (0..n).map(|i| sig(other, i)).collect();
        {
            let mut ma = sa.clone();
            let mut mb = sb.clone();
            ma.sort();
            mb.sort();
            if ma != mb {
                return false;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| sb.iter().filter(|t| **t == sa[i]).count());
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_map(other, &sa, &sb, &order, 0, &mut image, &mut used)
    }

    fn extend_map(
        &self,
        other: &Self,
        sa: &[(bool, Vec<i64>)],
        sb: &[(bool, Vec<i64>)],
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let i = order[depth];
        'cand: for c in 0..other.len() {
            if used[c] || sb[c] != sa[i] {
                continue;
            }
            for &p in &order[..depth] {
                if self.w[i][p] != other.w[c][image[p]] {
                    continue 'cand;
                }
            }
            image[i] = c;
            used[c] = true;
            if self.extend_map(other, sa, sb, order, depth + 1, image, used) {
                return true;
            }
            used[c] = false;
            image[i] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Quiver {
        let mut q = Quiver::new([("u", false), ("v", false), ("z", true)]).unwrap();
        q.set_weight2(0, 1, 2);
        q.set_weight2(1, 2, 2);
        q.set_weight2(0, 2, -2);
        q
    }

    #[test]
    fn parse_round_trip() {
        let q = triangle();
        let text = q.render();
        assert_eq!(Quiver::parse(&text).unwrap(), q);
        assert!(text.contains("z frozen"));
    }

    #[test]
    fn parse_half_weights() {
        let src = "quiver 2\nu\nv\n1 2 -3/2\n";
        let q = Quiver::parse(src).unwrap();
        assert_eq!(q.weight2(0, 1), -3);
        assert_eq!(q.render(), src);
    }

    #[test]
    fn parse_rejects_malformed_lines() {
        assert!(matches!(
            Quiver::parse("quiver 2\nu\nv\n2 1 1\n"),
            Err(QuiverError::Format { line: 4, .. })
        ));
        assert!(matches!(
            Quiver::parse("quiver 2\nu\nu\n"),
            Err(QuiverError::Format { .. })
        ));
        assert!(matches!(
            Quiver::parse("quiver 2\nu\nv\n1 2 1\n1 2 1\n"),
            Err(QuiverError::Format { line: 5, .. })
        ));
    }

    #[test]
    fn induced_keeps_order_and_flags() {
        let q = triangle();
        let s = q.induced(&["z", "u"]).unwrap();
        assert_eq!(s.labels(), &["z".to_string(), "u".to_string()]);
        assert!(s.is_frozen(0));
        assert_eq!(s.weight2(1, 0), -2);
    }

    #[test]
    fn relabel_is_simultaneous() {
        let mut q = triangle();
        q.relabel(&[("u", "v"), ("v", "u")]).unwrap();
        assert_eq!(q.labels(), &["v".to_string(), "u".to_string(), "z".to_string()]);
        let mut p = triangle();
        assert_eq!(
            p.relabel(&[("u", "z")]),
            Err(QuiverError::DuplicateLabel("z".to_string()))
        );
    }

    #[test]
    fn amalgamate_adds_weights() {
        let mut q = Quiver::new([("a", false), ("b", true), ("c", false), ("d", true)]).unwrap();
        q.set_weight2(0, 2, 2);
        q.set_weight2(1, 2, 4);
        q.set_weight2(3, 2, -2);
        let g = q.amalgamate(&[("a", "b")]).unwrap();
        assert_eq!(g.labels(), &["a*b".to_string(), "c".to_string(), "d".to_string()]);
        assert!(!g.is_frozen(0));
        assert_eq!(g.weight2(0, 1), 6);
        assert_eq!(g.weight2(2, 1), -2);
        assert_eq!(
            q.amalgamate(&[("a", "b"), ("b", "c")]),
            Err(QuiverError::OverlappingPairs("b, c".to_string()))
        );
    }

    #[test]
    fn permuted_matches_by_labels_and_isomorphism() {
        let q = triangle();
        let p = q.permuted(&[2, 0, 1]);
        assert!(p.eq_by_labels(&q));
        assert!(p.isomorphic_to(&q));
        let mut r = triangle();
        r.set_weight2(0, 1, 4);
        assert!(!r.isomorphic_to(&q));
        assert!(!r.eq_by_labels(&q));
    }
}
