//! Buchberger's algorithm specialised to pure binomial ideals.
//!
//! Coefficients stay in {±1}, so a binomial reduces to zero exactly when
//! both of its terms have the same normal form. Pairs are processed in
//! batches of equal lcm degree; a batch is reduced against a frozen basis
//! (optionally in parallel) and merged in pair order, which makes the
//! parallel mode produce the same basis as the sequential one.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::binomial::Binomial;
use super::monomial::Monomial;
use super::order::TermOrder;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Total S-pair reductions allowed per run.
    pub max_spairs: u64,
    /// Pairs of larger lcm degree are never processed; a run that would
    /// need them fails with `CapExceeded`.
    pub max_degree: Option<u32>,
    /// Wall-clock limit, checked between batches.
    pub deadline: Option<Instant>,
}

impl Caps {
    pub fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(t) if Instant::now() >= t => Err(Error::CapExceeded("time limit reached".into())),
            _ => Ok(()),
        }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_spairs: 10_000_000,
            max_degree: None,
            deadline: None,
        }
    }
}

const BATCH: usize = 4096;

#[derive(Clone, Debug)]
pub struct BinomialGb {
    order: TermOrder,
    elems: Vec<Binomial>,
    active: Vec<usize>,
    active_leads: Vec<Monomial>,
    /// `(lcm degree, i, j) → lcm`, with `i < j`.
    pairs: BTreeMap<(u32, usize, usize), Monomial>,
    saturate: bool,
    parallel: bool,
    spairs: u64,
    caps: Caps,
}

impl BinomialGb {
    pub fn new(order: TermOrder, caps: Caps) -> Self {
        BinomialGb {
            order,
            elems: Vec::new(),
            active: Vec::new(),
            active_leads: Vec::new(),
            pairs: BTreeMap::new(),
            saturate: false,
            parallel: false,
            spairs: 0,
            caps,
        }
    }

    /// Divide every new element by the gcd of its terms. Only valid when
    /// the target ideal is prime and contains no monomials, e.g. when
    /// computing a toric ideal from a sublattice ideal.
    pub fn saturating(mut self, on: bool) -> Self {
        self.saturate = on;
        self
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn spairs_reduced(&self) -> u64 {
        self.spairs
    }

    pub fn pending_pairs(&self) -> usize {
        self.pairs.len()
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        self.active_leads.iter().position(|l| l.divides(m))
    }

    /// Fully reduced normal form of a monomial.
    pub fn normal_form(&self, m: &Monomial) -> Monomial {
        let mut cur = m.clone();
        while let Some(k) = self.find_divisor(&cur) {
            let g = &self.elems[self.active[k]];
            cur = cur.replace(&g.lead, &g.trail);
        }
        cur
    }

    /// Reduces `a − b`; `None` when it lies in the current ideal.
    pub fn reduce_pair(&self, a: &Monomial, b: &Monomial) -> Option<Binomial> {
        let (x, y) = (self.normal_form(a), self.normal_form(b));
        let r = Binomial::oriented(x, y, &self.order)?;
        Some(if self.saturate { r.primitive() } else { r })
    }

    pub fn reduce(&self, b: &Binomial) -> Option<Binomial> {
        self.reduce_pair(&b.lead, &b.trail)
    }

    pub fn reduces_to_zero(&self, b: &Binomial) -> bool {
        self.reduce(b).is_none()
    }

    /// Adds a generator, reducing it first.
    pub fn add(&mut self, b: &Binomial) {
        if let Some(r) = self.reduce(b) {
            self.insert(r);
        }
    }

    /// Inserts a fully reduced, oriented binomial and updates the pair set
    /// with the Gebauer–Möller criteria.
    fn insert(&mut self, h: Binomial) {
        let k = self.elems.len();
        let hl = h.lead.clone();

        // Criterion B on old pairs.
        let mut drop = Vec::new();
        for (key, lcm) in &self.pairs {
            let (_, i, j) = *key;
            if hl.divides(lcm) {
                let li = self.elems[i].lead.lcm(&hl);
                let lj = self.elems[j].lead.lcm(&hl);
                if &li != lcm && &lj != lcm {
                    drop.push(*key);
                }
            }
        }
        for key in drop {
            self.pairs.remove(&key);
        }

        // New pairs with criteria M and F; coprime pairs are witnesses only.
        let mut cand: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&i| {
                let li = &self.elems[i].lead;
                (i, li.lcm(&hl), li.coprime(&hl))
            })
            .collect();
        cand.sort_by(|a, b| a.1.degree().cmp(&b.1.degree()).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        'outer: for (i, lcm, cop) in cand {
            for (_, l2, c2) in kept.iter_mut() {
                if l2.divides(&lcm) {
                    if *l2 == lcm && cop {
                        *c2 = true;
                    }
                    continue 'outer;
                }
            }
            kept.push((i, lcm, cop));
        }
        for (i, lcm, cop) in kept {
            if !cop {
                self.pairs.insert((lcm.degree(), i, k), lcm);
            }
        }

        // Older elements whose lead is now redundant leave the active set.
        let mut a = 0;
        while a < self.active.len() {
            if hl.divides(&self.active_leads[a]) {
                self.active.remove(a);
                self.active_leads.remove(a);
            } else {
                a += 1;
            }
        }
        self.active.push(k);
        self.active_leads.push(hl);
        self.elems.push(h);
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> (Monomial, Monomial) {
        let (gi, gj) = (&self.elems[i], &self.elems[j]);
        (lcm.replace(&gi.lead, &gi.trail), lcm.replace(&gj.lead, &gj.trail))
    }

    /// Processes pairs of lcm degree at most `limit` (all when `None`).
    pub fn run_to(&mut self, limit: Option<u32>) -> Result<()> {
        loop {
            let Some((&(d, _, _), _)) = self.pairs.iter().next() else {
                return Ok(());
            };
            if limit.is_some_and(|l| d > l) {
                return Ok(());
            }
            if self.caps.max_degree.is_some_and(|cap| d > cap) {
                return Err(Error::CapExceeded(format!(
                    "S-pair of degree {d} exceeds the degree cap {}",
                    self.caps.max_degree.unwrap_or(0)
                )));
            }
            let batch: Vec<((u32, usize, usize), Monomial)> = {
                let keys: Vec<_> = self
                    .pairs
                    .range((d, 0, 0)..=(d, usize::MAX, usize::MAX))
                    .take(BATCH)
                    .map(|(k, v)| (*k, v.clone()))
                    .collect();
                for (k, _) in &keys {
                    self.pairs.remove(k);
                }
                keys
            };
            self.caps.check_deadline()?;
            self.spairs += batch.len() as u64;
            if self.spairs > self.caps.max_spairs {
                return Err(Error::CapExceeded(format!(
                    "more than {} S-pair reductions",
                    self.caps.max_spairs
                )));
            }
            let work = |((_, i, j), lcm): &((u32, usize, usize), Monomial)| -> Option<Binomial> {
                let (a, b) = self.spoly(*i, *j, lcm);
                self.reduce_pair(&a, &b)
            };
            let results: Vec<Option<Binomial>> = if self.parallel {
                batch.par_iter().map(work).collect()
            } else {
                batch.iter().map(work).collect()
            };
            for r in results.into_iter().flatten() {
                if let Some(r) = self.reduce(&r) {
                    self.insert(r);
                }
            }
        }
    }

    pub fn run(&mut self) -> Result<()> {
        self.run_to(None)
    }

    /// The reduced Gröbner basis, sorted by increasing leading term.
    pub fn reduced_basis(&self) -> Vec<Binomial> {
        let mut out: Vec<Binomial> = self
            .active
            .iter()
            .map(|&i| {
                let g = &self.elems[i];
                Binomial::new(g.lead.clone(), self.normal_form(&g.trail))
            })
            .collect();
        out.sort_by(|a, b| self.order.cmp(&a.lead, &b.lead));
        out
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.active_leads.clone()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn binomial_groebner(
    gens: &[Binomial],
    order: &TermOrder,
    caps: &Caps,
    parallel: bool,
) -> Result<Vec<Binomial>> {
    groebner_with(BinomialGb::new(order.clone(), caps.clone()).parallel(parallel), gens)
}

/// Reduced Gröbner basis of the smallest prime binomial ideal reachable by
/// dividing out common factors; equals `binomial_groebner` when the ideal
/// generated by `gens` is already a toric ideal.
pub fn saturated_groebner(
    gens: &[Binomial],
    order: &TermOrder,
    caps: &Caps,
    parallel: bool,
) -> Result<Vec<Binomial>> {
    groebner_with(
        BinomialGb::new(order.clone(), caps.clone())
            .parallel(parallel)
            .saturating(true),
        gens,
    )
}

fn groebner_with(mut gb: BinomialGb, gens: &[Binomial]) -> Result<Vec<Binomial>> {
    let order = gb.order().clone();
    let order = &order;
    let mut sorted: Vec<Binomial> = gens
        .iter()
        .filter_map(|b| Binomial::oriented(b.lead.clone(), b.trail.clone(), order))
        .collect();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(&a.lead, &b.lead)));
    // Lazy insertion by degree keeps earlier leads minimal.
    for g in &sorted {
        gb.run_to(Some(g.degree()))?;
        gb.add(g);
    }
    gb.run()?;
    Ok(gb.reduced_basis())
}

/// Selects a minimal generating subset of a homogeneous binomial ideal.
///
/// Generators are processed by increasing degree, ties by increasing
/// leading term; one is kept iff it does not reduce to zero modulo a
/// Gröbner basis, complete up to its degree, of the ones kept before it.
pub fn minimal_generators(
    gens: &[Binomial],
    order: &TermOrder,
    caps: &Caps,
    parallel: bool,
) -> Result<Vec<Binomial>> {
    if let Some(b) = gens.iter().find(|b| !b.is_homogeneous()) {
        return Err(Error::Invalid(format!("inhomogeneous generator {b:?}")));
    }
    let mut sorted: Vec<Binomial> = gens
        .iter()
        .filter_map(|b| Binomial::oriented(b.lead.clone(), b.trail.clone(), order))
        .collect();
    sorted.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| order.cmp(&a.lead, &b.lead))
            .then_with(|| order.cmp(&a.trail, &b.trail))
    });
    sorted.dedup();
    let mut gb = BinomialGb::new(order.clone(), caps.clone()).parallel(parallel);
    let mut kept = Vec::new();
    for g in sorted {
        gb.run_to(Some(g.degree()))?;
        if let Some(r) = gb.reduce(&g) {
            gb.insert(r);
            kept.push(g);
        }
    }
    Ok(kept)
}

/// Buchberger's criterion for a fixed binomial set: every S-pair of
/// non-coprime leads reduces to zero modulo the set itself.
pub fn is_groebner_basis(gens: &[Binomial], order: &TermOrder) -> bool {
    let set: Vec<Binomial> = gens
        .iter()
        .filter_map(|b| Binomial::oriented(b.lead.clone(), b.trail.clone(), order))
        .collect();
    let nf = |m: &Monomial| {
        let mut cur = m.clone();
        while let Some(g) = set.iter().find(|g| g.lead.divides(&cur)) {
            cur = cur.replace(&g.lead, &g.trail);
        }
        cur
    };
    (0..set.len()).into_par_iter().all(|i| {
        (i + 1..set.len()).all(|j| {
            let (a, b) = (&set[i], &set[j]);
            if a.lead.coprime(&b.lead) {
                return true;
            }
            let l = a.lead.lcm(&b.lead);
            nf(&l.replace(&a.lead, &a.trail)) == nf(&l.replace(&b.lead, &b.trail))
        })
    })
}

pub fn degree_counts(bs: &[Binomial]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for b in bs {
        *out.entry(b.degree()).or_insert(0) += 1;
    }
    out
}

/// Number of minimal generators in each degree.
pub fn minimal_generator_degrees(
    gens: &[Binomial],
    order: &TermOrder,
    caps: &Caps,
) -> Result<BTreeMap<u32, usize>> {
    Ok(degree_counts(&minimal_generators(gens, order, caps, false)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::buchberger::{buchberger, is_groebner};
    use crate::poly::order::OrderKind;
    use proptest::prelude::*;

    fn b(a: &[u32], c: &[u32]) -> Binomial {
        Binomial::new(Monomial::new(a.to_vec()), Monomial::new(c.to_vec()))
    }

    /// Twisted cubic: 2×2 minors of [[x0,x1,x2],[x1,x2,x3]].
    fn twisted_cubic() -> Vec<Binomial> {
        vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            b(&[0, 1, 0, 1], &[0, 0, 2, 0]),
        ]
    }

    #[test]
    fn twisted_cubic_grevlex() {
        let ord = TermOrder::grevlex(4);
        let gb = binomial_groebner(&twisted_cubic(), &ord, &Caps::default(), false).unwrap();
        assert_eq!(gb.len(), 3);
        let mg = minimal_generator_degrees(&twisted_cubic(), &ord, &Caps::default()).unwrap();
        assert_eq!(mg, BTreeMap::from([(2, 3)]));
    }

    #[test]
    fn twisted_cubic_lex() {
        let ord = TermOrder::lex(4);
        let gb = binomial_groebner(&twisted_cubic(), &ord, &Caps::default(), false).unwrap();
        let mut e = BinomialGb::new(ord.clone(), Caps::default());
        for x in &gb {
            e.add(x);
        }
        for g in &twisted_cubic() {
            assert!(e.reduces_to_zero(g));
        }
    }

    #[test]
    fn redundant_generator_dropped() {
        let mut gens = twisted_cubic();
        // x0·(x1x3 − x2²) is in the ideal.
        gens.push(b(&[1, 1, 0, 1], &[1, 0, 2, 0]));
        let mg = minimal_generator_degrees(&gens, &TermOrder::grevlex(4), &Caps::default()).unwrap();
        assert_eq!(mg, BTreeMap::from([(2, 3)]));
    }

    #[test]
    fn caps_are_explicit() {
        let caps = Caps {
            max_spairs: 0,
            ..Caps::default()
        };
        let err = binomial_groebner(&twisted_cubic(), &TermOrder::lex(4), &caps, false).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
        let late = Caps {
            deadline: Some(Instant::now()),
            ..Caps::default()
        };
        let err = binomial_groebner(&twisted_cubic(), &TermOrder::lex(4), &late, false).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
    }

    #[test]
    fn parallel_matches_sequential() {
        let ord = TermOrder::lex(4);
        let s = binomial_groebner(&twisted_cubic(), &ord, &Caps::default(), false).unwrap();
        let p = binomial_groebner(&twisted_cubic(), &ord, &Caps::default(), true).unwrap();
        assert_eq!(s, p);
    }

    fn order_from(seed: usize) -> TermOrder {
        let perms = [[0, 1, 2, 3], [3, 1, 0, 2], [2, 0, 3, 1]];
        let kind = if seed.is_multiple_of(2) { OrderKind::Lex } else { OrderKind::Grevlex };
        TermOrder::new(kind, perms[seed / 2 % 3].to_vec()).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_generic_buchberger(
            raw in prop::collection::vec((prop::collection::vec(0u32..3, 4), prop::collection::vec(0u32..3, 4)), 1..4),
            seed in 0usize..6,
        ) {
            let ord = order_from(seed);
            let gens: Vec<Binomial> = raw.into_iter().map(|(a, c)| b(&a, &c)).collect();
            let fast = binomial_groebner(&gens, &ord, &Caps::default(), false).unwrap();
            let polys: Vec<_> = gens.iter().filter(|g| g.lead != g.trail).map(|g| g.to_polynomial()).collect();
            let slow = buchberger(&polys, &ord, &Caps::default()).unwrap();
            let fast_p: Vec<_> = fast.iter().map(|g| g.to_polynomial()).collect();
            prop_assert!(is_groebner(&fast_p, &ord));
            prop_assert_eq!(fast_p, slow);
            let par = binomial_groebner(&gens, &ord, &Caps::default(), true).unwrap();
            prop_assert_eq!(par, fast);
        }
    }
}
