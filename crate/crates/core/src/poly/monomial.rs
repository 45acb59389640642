use std::fmt;

/// Exponent vector over a fixed variable set. `mask` has bit `i % 64` set
/// whenever variable `i` occurs; it only prefilters divisibility tests.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u32]>,
    deg: u32,
    mask: u64,
}

fn mask_of(exps: &[u32]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | 1 << (i % 64))
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        let mask = mask_of(&exps);
        Monomial {
            exps: exps.into_boxed_slice(),
            deg,
            mask,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::new(e)
    }

    /// Product of the listed variables, with repetition.
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; nvars];
        for &v in vars {
            e[v] += 1;
        }
        Self::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Variables with multiplicity, ascending.
    pub fn vars_with_multiplicity(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.deg as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                out.push(i);
            }
        }
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self.mask & !other.mask == 0
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect())
    }

    /// `self / other · by` in one pass; `other` must divide `self`.
    #[inline]
    pub fn replace(&self, other: &Monomial, by: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .zip(by.exps.iter())
                .map(|((a, b), c)| a - b + c)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
            || self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::new(self.exps.iter().map(|e| e * k).collect())
    }

    /// Renders with variable names; `1` for the empty product.
    pub fn render(&self, names: &[String], sep: &str) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join(sep)
    }

    /// Renders one factor per occurrence, sorted by name.
    pub fn render_sorted(&self, names: &[String], sep: &str) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts: Vec<&str> = self
            .vars_with_multiplicity()
            .into_iter()
            .map(|v| names[v].as_str())
            .collect();
        parts.sort_unstable();
        parts.join(sep)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", &self.exps[..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![1, 1, 0]);
        assert_eq!(a.lcm(&b).exps(), &[2, 1, 1]);
        assert_eq!(a.gcd(&b).exps(), &[1, 0, 0]);
        assert!(!a.coprime(&b));
        assert!(Monomial::var(3, 0).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.mul(&b).degree(), 5);
        assert_eq!(a.replace(&Monomial::var(3, 0), &Monomial::var(3, 1)).exps(), &[1, 1, 1]);
        assert!(!a.is_squarefree());
        assert_eq!(a.vars_with_multiplicity(), vec![0, 0, 2]);
    }

    #[test]
    fn wide_masks_alias_safely() {
        // Variables 0 and 64 share a mask bit; the exponent check decides.
        let mut e = vec![0; 65];
        e[64] = 1;
        let x64 = Monomial::new(e);
        let x0 = Monomial::var(65, 0);
        assert!(!x0.divides(&x64));
        assert!(x0.coprime(&x64));
    }
}
