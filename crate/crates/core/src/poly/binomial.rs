use std::fmt;

use super::monomial::Monomial;
use super::order::TermOrder;
use super::polynomial::Polynomial;

/// `lead − trail`. After [`Binomial::oriented`], `lead` is the larger term
/// under the order used.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    pub fn new(lead: Monomial, trail: Monomial) -> Self {
        Binomial { lead, trail }
    }

    /// Orients `a − b` so that the larger term leads; `None` if `a == b`.
    pub fn oriented(a: Monomial, b: Monomial, ord: &TermOrder) -> Option<Self> {
        match ord.cmp(&a, &b) {
            std::cmp::Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            std::cmp::Ordering::Less => Some(Binomial { lead: b, trail: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// `x^{v⁺} − x^{v⁻}` for an integer vector `v`.
    pub fn from_vector(v: &[i64]) -> Self {
        let pos = v.iter().map(|&x| x.max(0) as u32).collect();
        let neg = v.iter().map(|&x| (-x).max(0) as u32).collect();
        Binomial {
            lead: Monomial::new(pos),
            trail: Monomial::new(neg),
        }
    }

    /// Exponent difference `lead − trail`.
    pub fn vector(&self) -> Vec<i64> {
        self.lead
            .exps()
            .iter()
            .zip(self.trail.exps())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.trail.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.trail.degree()
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    /// Divides both terms by their gcd.
    pub fn primitive(&self) -> Binomial {
        let g = self.lead.gcd(&self.trail);
        if g.is_one() {
            self.clone()
        } else {
            Binomial {
                lead: self.lead.div(&g),
                trail: self.trail.div(&g),
            }
        }
    }

    /// Order-free identity: the unordered pair of terms, smaller first in
    /// the derived `Ord` of monomials. Equal keys mean equal up to sign.
    pub fn key(&self) -> (Monomial, Monomial) {
        if self.lead <= self.trail {
            (self.lead.clone(), self.trail.clone())
        } else {
            (self.trail.clone(), self.lead.clone())
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            self.nvars(),
            vec![(self.lead.clone(), super::polynomial::rat(1, 1)), (self.trail.clone(), super::polynomial::rat(-1, 1))],
        )
    }

    /// Renders `p_{w}·p_{w'} − p_{v}·p_{v'}` with factors sorted by name.
    pub fn render(&self, names: &[String]) -> String {
        format!(
            "{} - {}",
            self.lead.render_sorted(names, "*"),
            self.trail.render_sorted(names, "*")
        )
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} - {:?}", self.lead, self.trail)
    }
}

/// Canonical, order-independent form of a binomial list: keys, sorted and
/// deduplicated.
pub fn binomial_key_set(bs: &[Binomial]) -> Vec<(Monomial, Monomial)> {
    let mut keys: Vec<_> = bs.iter().map(|b| b.key()).collect();
    keys.sort();
    keys.dedup();
    keys
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_and_keys() {
        let ord = TermOrder::grevlex(3);
        let a = Monomial::new(vec![2, 0, 0]);
        let b = Monomial::new(vec![0, 1, 1]);
        let x = Binomial::oriented(b.clone(), a.clone(), &ord).unwrap();
        assert_eq!(x.lead, a);
        assert_eq!(x.key(), Binomial::new(b.clone(), a.clone()).key());
        assert!(Binomial::oriented(a.clone(), a.clone(), &ord).is_none());
        assert_eq!(x.vector(), vec![2, -1, -1]);
        assert_eq!(Binomial::from_vector(&[2, -1, -1]), x);
    }

    #[test]
    fn primitive_part() {
        let b = Binomial::new(Monomial::new(vec![1, 1, 0]), Monomial::new(vec![1, 0, 1]));
        assert_eq!(b.primitive().vector(), vec![0, 1, -1]);
        assert_eq!(b.primitive().degree(), 1);
    }
}
