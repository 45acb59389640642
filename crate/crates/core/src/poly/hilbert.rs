//! Hilbert series of quotients by monomial ideals, by pivot splitting:
//! `N(I) = N(I + ⟨x⟩) + t·N(I : x)`, where `H = N / (1−t)^nvars`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps only divisibility-minimal generators, sorted and deduplicated.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Intersection via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Alexander dual of a squarefree ideal: its generators are the minimal
    /// transversals of the generator supports (Berge's algorithm). The dual
    /// of the zero ideal is the unit ideal and vice versa.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if !self.is_squarefree() {
            return Err(Error::Invalid("Alexander dual needs a squarefree ideal".into()));
        }
        let mut t = vec![Monomial::one(self.nvars)];
        for g in &self.gens {
            let mut next = Vec::with_capacity(t.len() * 2);
            for x in t {
                if !x.coprime(g) {
                    next.push(x);
                } else {
                    for v in g.support() {
                        next.push(x.mul(&Monomial::var(self.nvars, v)));
                    }
                }
            }
            t = minimalize(next);
        }
        Ok(MonomialIdeal::new(self.nvars, t))
    }

    /// `(codimension, degree)` of the Stanley–Reisner ring of a squarefree
    /// ideal: the smallest minimal prime and how many primes attain it.
    pub fn squarefree_codim_degree(&self) -> Result<(usize, usize)> {
        let dual = self.alexander_dual()?;
        let c = dual.gens.iter().map(|g| g.degree()).min().unwrap_or(0);
        let d = dual.gens.iter().filter(|g| g.degree() == c).count();
        Ok((c as usize, d))
    }
}

pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// `numerator / (1−t)^k` with `numerator(1) ≠ 0` unless the quotient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<BigInt>,
    pub k: usize,
}

impl HilbertSeries {
    /// Divides out factors of `(1−t)` from `numerator / (1−t)^nvars`.
    pub fn canonical(mut numerator: Vec<BigInt>, mut k: usize) -> Self {
        trim(&mut numerator);
        while k > 0 && !numerator.is_empty() && numerator.iter().sum::<BigInt>().is_zero() {
            // Synthetic division by (1 − t): q_i = Σ_{j≤i} a_j.
            let mut q = Vec::with_capacity(numerator.len() - 1);
            let mut acc = BigInt::zero();
            for a in &numerator[..numerator.len() - 1] {
                acc += a;
                q.push(acc.clone());
            }
            numerator = q;
            trim(&mut numerator);
            k -= 1;
        }
        HilbertSeries { numerator, k }
    }

    pub fn krull_dim(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> BigInt {
        self.numerator.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = &self.numerator;
        (0..n.len()).all(|i| n[i] == n[n.len() - 1 - i])
    }

    /// First `terms` values of the Hilbert function.
    pub fn hilbert_function(&self, terms: usize) -> Vec<BigInt> {
        // Multiply the numerator by Σ C(i+k−1, k−1) t^i.
        let mut series = vec![BigInt::zero(); terms];
        let mut binom = vec![BigInt::zero(); terms];
        for (i, b) in binom.iter_mut().enumerate() {
            *b = if self.k == 0 {
                if i == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binomial((i + self.k - 1) as u64, (self.k - 1) as u64)
            };
        }
        for (j, a) in self.numerator.iter().enumerate() {
            for i in j..terms {
                series[i] += a * &binom[i - j];
            }
        }
        series
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            let body = match i {
                0 => a.to_string(),
                1 if a.is_one() => "t".to_string(),
                1 => format!("{a}t"),
                _ if a.is_one() => format!("t^{i}"),
                _ => format!("{a}t^{i}"),
            };
            if parts.is_empty() {
                parts.push(if sign == "-" { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        let num = if parts.is_empty() { "0".to_string() } else { parts.join(" ") };
        format!("({num})/(1-t)^{}", self.k)
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn poly_mul_one_minus_t_pow(a: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + d];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Groups generators whose supports are connected through shared
/// variables.
fn components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let nvars = gens[0].nvars();
    let mut parent: Vec<usize> = (0..nvars).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        let s = g.support();
        for w in s.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for g in gens {
        let r = find(&mut parent, g.support()[0]);
        groups.entry(r).or_default().push(g.clone());
    }
    groups.into_values().collect()
}

/// Subproblems with at most this many generators are memoized.
const MEMO_GENS: usize = 64;
const MEMO_ENTRIES: usize = 1 << 20;

/// K-polynomial `N` with `H = N / (1−t)^nvars`; `gens` must be minimal. `N`
/// does not depend on the ambient variable count, so variable-disjoint
/// parts multiply.
fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, Vec<BigInt>>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![];
    }
    let pairwise_coprime = gens.len() <= 1
        || (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| gens[i].coprime(&gens[j])));
    if pairwise_coprime {
        let mut out = vec![BigInt::one()];
        for g in &gens {
            out = poly_mul_one_minus_t_pow(&out, g.degree() as usize);
        }
        return out;
    }
    let parts = components(&gens);
    if parts.len() > 1 {
        return parts
            .into_iter()
            .fold(vec![BigInt::one()], |acc, part| poly_mul(&acc, &numerator(part, memo)));
    }
    let mut key = None;
    if gens.len() <= MEMO_GENS {
        let mut k = gens.clone();
        k.sort();
        if let Some(v) = memo.get(&k) {
            return v.clone();
        }
        key = Some(k);
    }
    let nvars = gens[0].nvars();
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let v = (0..nvars).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).expect("nonempty");
    let x = Monomial::var(nvars, v);
    // I + ⟨x⟩
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(v) == 0).cloned().collect();
    plus.push(x.clone());
    // I : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exp(v) > 0 { g.div(&x) } else { g.clone() })
        .collect();
    let mut out = numerator(minimalize(plus), memo);
    let rest = numerator(minimalize(colon), memo);
    poly_add(&mut out, &rest, 1);
    if let Some(k) = key {
        if memo.len() < MEMO_ENTRIES {
            memo.insert(k, out.clone());
        }
    }
    out
}

pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertSeries {
    HilbertSeries::canonical(numerator(ideal.gens.clone(), &mut HashMap::new()), ideal.nvars)
}

/// `(Krull dimension, degree, numerator symmetric)`.
pub fn series_invariants(h: &HilbertSeries) -> (usize, BigInt, bool) {
    (h.k, h.degree(), h.is_symmetric())
}

/// Parses `1,17,72` as numerator coefficients.
pub fn parse_numerator(text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Format(format!("bad coefficient {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn two_lines() {
        let h = hilbert_series(&MonomialIdeal::new(2, vec![m(&[1, 1])]));
        assert_eq!(h, HilbertSeries { numerator: ints(&[1, 1]), k: 1 });
    }

    #[test]
    fn zero_and_unit() {
        let h = hilbert_series(&MonomialIdeal::new(4, vec![]));
        assert_eq!(series_invariants(&h), (4, BigInt::one(), true));
        let u = hilbert_series(&MonomialIdeal::new(2, vec![m(&[0, 0])]));
        assert!(u.numerator.is_empty());
    }

    #[test]
    fn invariants() {
        let h = HilbertSeries::canonical(ints(&[1, 17, 72, 72, 17, 1]), 7);
        assert_eq!(series_invariants(&h), (7, BigInt::from(180), true));
        let h = HilbertSeries::canonical(ints(&[1, 12, 38, 28, 3]), 8);
        assert_eq!(series_invariants(&h), (8, BigInt::from(82), false));
    }

    #[test]
    fn canonical_divides_out() {
        // (1 − t²)/(1−t)³ = (1 + t)/(1−t)²
        let h = HilbertSeries::canonical(ints(&[1, 0, -1]), 3);
        assert_eq!(h, HilbertSeries { numerator: ints(&[1, 1]), k: 2 });
        assert_eq!(h.render(), "(1 + t)/(1-t)^2");
    }

    /// Standard monomials of each degree, by brute force.
    fn brute_hilbert(ideal: &MonomialIdeal, upto: u32) -> Vec<BigInt> {
        let n = ideal.nvars();
        let mut out = vec![BigInt::zero(); upto as usize + 1];
        let mut stack = vec![(0usize, vec![0u32; n])];
        while let Some((i, e)) = stack.pop() {
            if i == n {
                let mono = Monomial::new(e);
                if !ideal.contains(&mono) {
                    out[mono.degree() as usize] += 1;
                }
                continue;
            }
            let used: u32 = e.iter().sum();
            for x in 0..=(upto - used) {
                let mut f = e.clone();
                f[i] = x;
                stack.push((i + 1, f));
            }
        }
        out
    }

    #[test]
    fn duals() {
        let d = MonomialIdeal::new(2, vec![m(&[1, 1])]).alexander_dual().unwrap();
        assert_eq!(d.gens(), &[m(&[0, 1]), m(&[1, 0])]);
        let z = MonomialIdeal::new(3, vec![]).alexander_dual().unwrap();
        assert!(z.is_unit());
        assert!(MonomialIdeal::new(1, vec![m(&[2])]).alexander_dual().is_err());
        // Two disjoint edges: four transversals of size two.
        let i = MonomialIdeal::new(4, vec![m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1])]);
        assert_eq!(i.squarefree_codim_degree().unwrap(), (2, 4));
    }

    proptest! {
        #[test]
        fn squarefree_degree_matches_hilbert(gens in prop::collection::vec(prop::collection::vec(0u32..2, 5), 1..6)) {
            let ideal = MonomialIdeal::new(5, gens.into_iter().map(Monomial::new).collect());
            prop_assume!(!ideal.is_unit());
            let h = hilbert_series(&ideal);
            let (c, d) = ideal.squarefree_codim_degree().unwrap();
            prop_assert_eq!(h.k, 5 - c);
            prop_assert_eq!(h.degree(), BigInt::from(d));
            // Double dual is the identity.
            prop_assert_eq!(ideal.alexander_dual().unwrap().alexander_dual().unwrap(), ideal);
        }

        #[test]
        fn pivot_split_matches_brute_force(gens in prop::collection::vec(prop::collection::vec(0u32..3, 4), 0..5)) {
            let ideal = MonomialIdeal::new(4, gens.into_iter().map(Monomial::new).collect());
            let h = hilbert_series(&ideal);
            prop_assert_eq!(h.hilbert_function(7), brute_hilbert(&ideal, 6));
            // The (K−1)-th difference of the Hilbert polynomial is the degree.
            if h.k >= 1 && !h.numerator.is_empty() {
                let mut f = h.hilbert_function(40);
                for _ in 0..h.k - 1 {
                    f = f.windows(2).map(|w| &w[1] - &w[0]).collect();
                }
                prop_assert_eq!(f.last().unwrap().clone(), h.degree());
            }
        }
    }
}
