use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::TermOrder;

/// Sparse polynomial with exact rational coefficients. No zero coefficient
/// is ever stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::from_terms(nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, vec![(Monomial::var(nvars, i), BigRational::one())])
    }

    pub fn monomial(m: Monomial) -> Self {
        let n = m.nvars();
        Self::from_terms(n, vec![(m, BigRational::one())])
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, BigRational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest monomial under `ord` with its coefficient.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|t| t.0)
    }

    /// Terms sorted in decreasing order under `ord`.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, ord: &TermOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Substitutes `images[i]` for variable `i`; all images share a ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = Polynomial::zero(target);
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut v = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                v = v.mul(&p);
            }
            out = out.add(&v);
        }
        out
    }

    /// `Some((lead, trail))` if the polynomial is `±(m1 − m2)`.
    pub fn as_binomial(&self, ord: &TermOrder) -> Option<(Monomial, Monomial)> {
        if self.terms.len() != 2 {
            return None;
        }
        let t = self.sorted_terms(ord);
        if t[0].1 == &-t[1].1.clone() && t[0].1.abs().is_one() {
            Some((t[0].0.clone(), t[1].0.clone()))
        } else {
            None
        }
    }

    /// Human-readable form, terms in decreasing order under `ord`.
    pub fn render(&self, names: &[String], ord: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render(names, "*");
            if m.is_one() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(2, i)
    }

    #[test]
    fn ring_ops() {
        let p = x(0).add(&x(1));
        let sq = p.mul(&p);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&Monomial::new(vec![1, 1])), rat(2, 1));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.pow(3).len(), 4);
        assert!(sq.is_homogeneous());
        let pt = vec![rat(1, 2), rat(3, 1)];
        assert_eq!(sq.eval(&pt), rat(49, 4));
    }

    #[test]
    fn substitution() {
        // (x + y) with x -> t², y -> 1 + t in ℚ[t]
        let t = Polynomial::var(1, 0);
        let img = vec![t.mul(&t), Polynomial::one(1).add(&t)];
        let r = x(0).add(&x(1)).substitute(&img);
        assert_eq!(r.len(), 3);
        assert_eq!(r.eval(&[rat(2, 1)]), rat(7, 1));
    }

    #[test]
    fn render() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = x(0).mul(&x(0)).sub(&x(1).scale(&rat(3, 2)));
        assert_eq!(p.render(&names, &TermOrder::grevlex(2)), "x^2 - 3/2*y");
    }
}
