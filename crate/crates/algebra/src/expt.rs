use std::cmp::Ordering;

/// Exponent vector of a Laurent monomial.
///
/// Every entry is stored doubled, so the monomial `x^(1/2)` has entry 1 and
/// `x^2` has entry 4. This keeps half-integer powers in integer arithmetic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(pub Vec<i32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Exponent vector of the plain variable `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 2;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Total degree in doubled units.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|&a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        Self(self.0.iter().map(|&a| a * k).collect())
    }

    /// Entrywise minimum, in place.
    pub fn min_with(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if *b < *a {
                *a = *b;
            }
        }
    }

    /// Halves every entry; `None` if any entry is odd.
    pub fn halved(&self) -> Option<Self> {
        if self.0.iter().any(|&x| x % 2 != 0) {
            return None;
        }
        Some(Self(self.0.iter().map(|&x| x / 2).collect()))
    }

    /// True when every entry is even, i.e. all powers are integral.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|&x| x % 2 == 0)
    }
}

impl Ord for ExponentVector {
    /// Graded lexicographic order on the doubled entries.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
