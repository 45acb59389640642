//! Multivariate division and Buchberger's algorithm over ℚ.

use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;

use super::engine::Caps;
use super::monomial::Monomial;
use super::order::TermOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Remainder of `f` under repeated leading-term reduction by `g`, divisors
/// tried in list order. No term of the result is divisible by a leading
/// monomial of `g`.
pub fn normal_form(f: &Polynomial, g: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let leads: Vec<Option<(Monomial, BigRational)>> = g
        .iter()
        .map(|p| p.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut p = f.clone();
    let mut r = Polynomial::zero(f.nvars());
    while let Some((lm, lc)) = p.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, l)| l.as_ref().filter(|(m, _)| m.divides(&lm)).map(|(m, c)| (i, m, c)));
        match hit {
            Some((i, m, c)) => {
                let q = lm.div(m);
                let coef = &lc / c;
                p = p.sub(&g[i].mul_term(&q, &coef));
            }
            None => {
                r.add_term(lm.clone(), lc.clone());
                p.add_term(lm, -lc);
            }
        }
    }
    r
}

fn spoly(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).expect("nonzero");
    let (gm, gc) = g.leading_term(ord).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm), &fc.recip());
    let b = g.mul_term(&l.div(gm), &gc.recip());
    a.sub(&b)
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted by increasing
/// leading monomial. Pairs are taken by smallest sugar, then by index.
pub fn buchberger(gens: &[Polynomial], ord: &TermOrder, caps: &Caps) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    // (sugar, lcm degree, i, j)
    let mut queue: BTreeSet<(u32, u32, usize, usize)> = BTreeSet::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut spairs = 0u64;

    let push = |p: Polynomial,
                s: u32,
                basis: &mut Vec<Polynomial>,
                sugar: &mut Vec<u32>,
                leads: &mut Vec<Monomial>,
                queue: &mut BTreeSet<(u32, u32, usize, usize)>| {
        let p = p.monic(ord);
        let lm = p.leading_monomial(ord).expect("nonzero").clone();
        let k = basis.len();
        for i in 0..k {
            let l = leads[i].lcm(&lm);
            let si = sugar[i] + l.degree() - leads[i].degree();
            let sk = s + l.degree() - lm.degree();
            queue.insert((si.max(sk), l.degree(), i, k));
        }
        basis.push(p);
        sugar.push(s);
        leads.push(lm);
    };

    for g in gens {
        let r = normal_form(g, &basis, ord);
        if !r.is_zero() {
            let s = r.total_degree().unwrap_or(0).max(g.total_degree().unwrap_or(0));
            push(r, s, &mut basis, &mut sugar, &mut leads, &mut queue);
        }
    }

    while let Some(&key) = queue.iter().next() {
        queue.remove(&key);
        let (s, _, i, j) = key;
        done.insert((i, j));
        if leads[i].coprime(&leads[j]) {
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        // Chain criterion against an already-handled middle element.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        spairs += 1;
        if spairs.is_multiple_of(256) {
            caps.check_deadline()?;
        }
        if spairs > caps.max_spairs {
            return Err(Error::CapExceeded(format!("more than {} S-pair reductions", caps.max_spairs)));
        }
        if caps.max_degree.is_some_and(|d| l.degree() > d) {
            return Err(Error::CapExceeded(format!("S-pair of degree {} exceeds the degree cap", l.degree())));
        }
        let r = normal_form(&spoly(&basis[i], &basis[j], ord), &basis, ord);
        if !r.is_zero() {
            push(r, s, &mut basis, &mut sugar, &mut leads, &mut queue);
        }
    }
    Ok(reduce_basis(basis, ord))
}

/// Drops elements with redundant leads, then tail-reduces and normalizes.
pub fn reduce_basis(basis: Vec<Polynomial>, ord: &TermOrder) -> Vec<Polynomial> {
    let mut items: Vec<(Monomial, Polynomial)> = basis
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| (p.leading_monomial(ord).expect("nonzero").clone(), p))
        .collect();
    items.sort_by(|a, b| ord.cmp(&a.0, &b.0));
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut mleads: Vec<Monomial> = Vec::new();
    for (m, p) in items {
        if !mleads.iter().any(|l| l.divides(&m)) {
            mleads.push(m);
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let lead = Polynomial::from_terms(
            minimal[i].nvars(),
            vec![minimal[i].leading_term(ord).map(|(m, c)| (m.clone(), c.clone())).expect("nonzero")],
        );
        let tail = minimal[i].sub(&lead);
        out.push(lead.add(&normal_form(&tail, &others, ord)).monic(ord));
    }
    out
}

/// Whether every S-pair of `g` reduces to zero modulo `g`.
pub fn is_groebner(g: &[Polynomial], ord: &TermOrder) -> bool {
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (a, b) = (g[i].leading_monomial(ord), g[j].leading_monomial(ord));
            if let (Some(a), Some(b)) = (a, b) {
                if a.coprime(b) {
                    continue;
                }
            }
            if !normal_form(&spoly(&g[i], &g[j], ord), g, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::rat;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn normal_form_of_empty_basis_is_identity() {
        let f = x(2, 0).mul(&x(2, 1)).add(&Polynomial::one(2));
        assert_eq!(normal_form(&f, &[], &TermOrder::grevlex(2)), f);
    }

    #[test]
    fn circle_and_line() {
        // x² + y² − 1, x − y under lex x > y.
        let ord = TermOrder::lex(2);
        let circle = x(2, 0).pow(2).add(&x(2, 1).pow(2)).sub(&Polynomial::one(2));
        let line = x(2, 0).sub(&x(2, 1));
        let gb = buchberger(&[circle.clone(), line.clone()], &ord, &Caps::default()).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(is_groebner(&gb, &ord));
        // y² − 1/2 appears.
        let expect = x(2, 1).pow(2).sub(&Polynomial::constant(2, rat(1, 2)));
        assert!(gb.contains(&expect));
        for f in [circle, line] {
            assert!(normal_form(&f, &gb, &ord).is_zero());
        }
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let ord = TermOrder::grevlex(3);
        let f = x(3, 0).mul(&x(3, 1)).mul(&x(3, 2)).sub(&x(3, 0).pow(3));
        let gb = buchberger(std::slice::from_ref(&f), &ord, &Caps::default()).unwrap();
        assert_eq!(gb, vec![f.monic(&ord)]);
    }

    proptest! {
        #[test]
        fn normal_form_independent_of_basis_order(
            coeffs in prop::collection::vec(-3i64..4, 9),
            perm_seed in 0usize..6,
        ) {
            let ord = TermOrder::grevlex(3);
            let p = |a: i64, b: i64, c: i64| {
                x(3, 0).mul(&x(3, 1)).scale(&rat(1, 1))
                    .add(&x(3, 2).pow(2).scale(&rat(a, 1)))
                    .add(&x(3, 0).scale(&rat(b, 1)))
                    .add(&Polynomial::constant(3, rat(c, 1)))
            };
            let gens = vec![
                p(coeffs[0], coeffs[1], coeffs[2]),
                x(3, 1).pow(2).sub(&x(3, 2).scale(&rat(coeffs[3], 1))).add(&x(3, 0).scale(&rat(coeffs[4], 1))),
                x(3, 0).pow(2).sub(&x(3, 1).scale(&rat(coeffs[5], 1))),
            ];
            let mut gb = buchberger(&gens, &ord, &Caps::default()).unwrap();
            prop_assert!(is_groebner(&gb, &ord));
            let f = x(3, 0).pow(3).add(&x(3, 1).mul(&x(3, 2)).scale(&rat(coeffs[6], 1)))
                .add(&x(3, 2).pow(3).scale(&rat(coeffs[7], 1)))
                .add(&Polynomial::constant(3, rat(coeffs[8], 1)));
            let r1 = normal_form(&f, &gb, &ord);
            let k = gb.len();
            gb.rotate_left(perm_seed % k.max(1));
            gb.reverse();
            prop_assert_eq!(normal_form(&f, &gb, &ord), r1);
            for g in &gens {
                prop_assert!(normal_form(g, &gb, &ord).is_zero());
            }
        }
    }
}
