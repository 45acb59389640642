use std::cmp::Ordering;

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Grevlex refined by a positive weight vector: compare weighted degree
    /// first, then fall back to grevlex.
    WeightedGrevlex(Vec<u64>),
}

/// A term order. `priority[0]` is the most significant (largest) variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &p in &priority {
            if p >= n || seen[p] {
                return Err(Error::Invalid("variable priority is not a permutation".into()));
            }
            seen[p] = true;
        }
        if let OrderKind::WeightedGrevlex(w) = &kind {
            if w.len() != n || w.contains(&0) {
                return Err(Error::Invalid("weights must be positive, one per variable".into()));
            }
        }
        Ok(TermOrder { kind, priority })
    }

    pub fn lex(n: usize) -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            priority: (0..n).collect(),
        }
    }

    pub fn grevlex(n: usize) -> Self {
        TermOrder {
            kind: OrderKind::Grevlex,
            priority: (0..n).collect(),
        }
    }

    /// Grevlex with variable `last` the smallest; others keep index order.
    pub fn grevlex_with_last(n: usize, last: usize) -> Self {
        let mut priority: Vec<usize> = (0..n).filter(|&i| i != last).collect();
        priority.push(last);
        TermOrder {
            kind: OrderKind::Grevlex,
            priority,
        }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Lex => {
                for &v in &self.priority {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| self.revlex(a, b)),
            OrderKind::WeightedGrevlex(w) => {
                let wd = |m: &Monomial| -> u64 {
                    m.exps().iter().zip(w).map(|(&e, &x)| e as u64 * x).sum()
                };
                wd(a)
                    .cmp(&wd(b))
                    .then_with(|| a.degree().cmp(&b.degree()))
                    .then_with(|| self.revlex(a, b))
            }
        }
    }

    /// Reverse lexicographic tie-break: more of the smallest variable loses.
    fn revlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.priority.iter().rev() {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    pub fn greater(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_and_grevlex() {
        let lex = TermOrder::lex(3);
        let gr = TermOrder::grevlex(3);
        // x·z² vs y³
        assert_eq!(lex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Greater);
        assert_eq!(gr.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        // degree dominates in grevlex
        assert_eq!(gr.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        let last0 = TermOrder::grevlex_with_last(3, 0);
        assert_eq!(last0.cmp(&m(&[1, 1, 0]), &m(&[0, 1, 1])), Ordering::Less);
    }

    #[test]
    fn priority_validated() {
        assert!(TermOrder::new(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(TermOrder::new(OrderKind::WeightedGrevlex(vec![1, 0]), vec![0, 1]).is_err());
    }

    fn orders() -> Vec<TermOrder> {
        vec![
            TermOrder::lex(3),
            TermOrder::grevlex(3),
            TermOrder::new(OrderKind::Grevlex, vec![2, 0, 1]).unwrap(),
            TermOrder::new(OrderKind::WeightedGrevlex(vec![1, 3, 2]), vec![1, 2, 0]).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn term_order_axioms(a in prop::collection::vec(0u32..4, 3), b in prop::collection::vec(0u32..4, 3), c in prop::collection::vec(0u32..4, 3)) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for o in orders() {
                // multiplicative
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // refines divisibility
                if a.divides(&b) && a != b {
                    prop_assert_eq!(o.cmp(&a, &b), Ordering::Less);
                }
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            }
        }
    }
}
