//! The Plackett–Luce model on the linear extensions of a constraint poset,
//! its pairwise marginal (the Bradley–Terry model), and the monomial
//! combinatorics behind the homogeneous parametrization.
//!
//! Conventions: `ℓ_A = Σ_{i∈A} θ_i` for an order ideal `A`. The probability
//! of a word `w` is `∏_i θ_{w_i} / (θ_{w_1} + … + θ_{w_i})`, so items with
//! large `θ` tend to come late, and `q_{ij}` (item `i` before `j`) equals
//! `θ_j / (θ_i + θ_j)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::buchberger::buchberger;
use crate::poly::hilbert::{hilbert_series, HilbertSeries, MonomialIdeal};
use crate::poly::monomial::Monomial;
use crate::poly::order::TermOrder;
use crate::poly::parse::parse_polynomial;
use crate::poly::polynomial::{rat, Polynomial};
use crate::poly::Caps;
use crate::poset::{format_word, order_ideal_lattice, GradedPoset, Poset, Word};
use crate::structural::{bt_circuit_binomials, bt_lawrence_spec, bt_variables};

pub fn theta_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("θ_{{{i}}}")).collect()
}

fn ideal_lattice(constraint: &Poset) -> Result<(GradedPoset, Vec<u64>)> {
    let q = order_ideal_lattice(constraint)?;
    let masks = q.lattice().expect("ideal lattice").masks.clone();
    Ok((q, masks))
}

/// `ℓ_A` as a linear form in `θ_1..θ_n`.
fn linear_form(n: usize, mask: u64) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for i in 0..n {
        if mask >> i & 1 == 1 {
            p.add_term(Monomial::var(n, i), BigRational::one());
        }
    }
    p
}

/// The homogeneous parametrization `p_w ↦ ∏_{A ∉ w} ℓ_A`, the product over
/// order ideals not on the chain of `w`.
#[derive(Clone, Debug)]
pub struct PlMap {
    pub constraint: Poset,
    pub words: Vec<Word>,
    /// Order ideals (bit masks) missed by each chain, the factors of its image.
    pub factors: Vec<Vec<u64>>,
    pub images: Vec<Polynomial>,
    pub degree: u32,
}

impl PlMap {
    pub fn n(&self) -> usize {
        self.constraint.len()
    }

    /// `p_{w}` for each word, in the order of [`PlMap::words`].
    pub fn var_names(&self) -> Vec<String> {
        self.words.iter().map(|w| format!("p_{{{}}}", format_word(w))).collect()
    }

    pub fn word_index(&self, w: &[usize]) -> Option<usize> {
        self.words.iter().position(|x| x.as_slice() == w)
    }

    /// Image of `p_w` rendered in `θ`, factored.
    pub fn render_factored(&self, k: usize) -> String {
        let n = self.n();
        if self.factors[k].is_empty() {
            return "1".into();
        }
        let names = theta_names(n);
        self.factors[k]
            .iter()
            .map(|&m| {
                let items: Vec<&str> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| names[i].as_str()).collect();
                if items.len() == 1 {
                    items[0].to_string()
                } else {
                    format!("({})", items.join("+"))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub fn pl_homogeneous_map(constraint: &Poset) -> Result<PlMap> {
    let n = constraint.len();
    let (q, masks) = ideal_lattice(constraint)?;
    let chains = q.maximal_chains();
    let words: Vec<Word> = chains.iter().map(|c| q.chain_word(c).expect("lattice")).collect();
    let factors: Vec<Vec<u64>> = chains
        .iter()
        .map(|c| {
            (0..masks.len())
                .filter(|e| !c.0.contains(e))
                .map(|e| masks[e])
                .collect()
        })
        .collect();
    let images: Vec<Polynomial> = factors
        .par_iter()
        .map(|fs| {
            fs.iter()
                .fold(Polynomial::one(n), |acc, &m| acc.mul(&linear_form(n, m)))
        })
        .collect();
    let degree = (masks.len() - (q.rk() + 1)) as u32;
    for (w, f) in words.iter().zip(&images) {
        if !f.is_homogeneous() || f.total_degree() != Some(degree) {
            return Err(Error::Invalid(format!("image of {} is not of degree {degree}", format_word(w))));
        }
    }
    Ok(PlMap {
        constraint: constraint.clone(),
        words,
        factors,
        images,
        degree,
    })
}

fn check_theta(n: usize, theta: &[BigRational]) -> Result<()> {
    if theta.len() != n {
        return Err(Error::Dimension(format!("{} parameters for {n} items", theta.len())));
    }
    if let Some(t) = theta.iter().find(|t| !t.is_positive()) {
        return Err(Error::Invalid(format!("parameter {t} is not positive")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlProbabilities {
    pub words: Vec<Word>,
    pub values: Vec<BigRational>,
    /// Sum of `values`; one for the antichain.
    pub total: BigRational,
}

/// `∏_i θ_{w_i}/S_i` over the linear extensions, with `S_i` the sum of the
/// first `i` parameters of `w`. Not renormalized over the extensions.
pub fn pl_probability(constraint: &Poset, theta: &[BigRational]) -> Result<PlProbabilities> {
    pl_values(constraint, theta, true)
}

/// `∏_{i=1}^n 1/S_i`, the form whose sum over all permutations is `1/∏θ`.
pub fn pl_unnormalized(constraint: &Poset, theta: &[BigRational]) -> Result<PlProbabilities> {
    pl_values(constraint, theta, false)
}

fn pl_values(constraint: &Poset, theta: &[BigRational], with_numerators: bool) -> Result<PlProbabilities> {
    check_theta(constraint.len(), theta)?;
    let (q, _) = ideal_lattice(constraint)?;
    let words: Vec<Word> = q
        .maximal_chains()
        .iter()
        .map(|c| q.chain_word(c).expect("lattice"))
        .collect();
    let values: Vec<BigRational> = words
        .iter()
        .map(|w| {
            let mut s = BigRational::zero();
            let mut v = BigRational::one();
            for &i in w {
                s += &theta[i - 1];
                if with_numerators {
                    v *= &theta[i - 1];
                }
                v /= &s;
            }
            v
        })
        .collect();
    let total = values.iter().fold(BigRational::zero(), |a, b| a + b);
    Ok(PlProbabilities { words, values, total })
}

/// Checks `∏θ_i · Σ_w ∏_{A∉w} ℓ_A = ∏_{A≠∅} ℓ_A` as polynomials, which is
/// `Σ_w ∏ 1/S_i = 1/∏θ_i`, i.e. the probabilities of the unconstrained
/// model sum to one identically.
pub fn pl_sums_to_one(n: usize) -> Result<bool> {
    let map = pl_homogeneous_map(&Poset::antichain(n))?;
    let (_, masks) = ideal_lattice(&Poset::antichain(n))?;
    let sum = map.images.iter().fold(Polynomial::zero(n), |a, b| a.add(b));
    let prod_theta = (0..n).fold(Polynomial::one(n), |a, i| a.mul(&Polynomial::var(n, i)));
    let all = masks
        .iter()
        .filter(|&&m| m != 0)
        .fold(Polynomial::one(n), |a, &m| a.mul(&linear_form(n, m)));
    Ok(sum.mul(&prod_theta) == all)
}

/// Whether `f` (in the variables [`PlMap::var_names`]) vanishes on the
/// model. Pure binomials are compared by their multisets of linear factors,
/// which is exact since distinct `ℓ_A` are non-associate primes; anything
/// else is expanded.
pub fn pl_vanishes(f: &Polynomial, map: &PlMap) -> Result<bool> {
    if f.nvars() != map.words.len() {
        return Err(Error::Dimension(format!(
            "polynomial in {} variables, model has {}",
            f.nvars(),
            map.words.len()
        )));
    }
    if !f.is_homogeneous() {
        return Err(Error::Invalid("polynomial is not homogeneous".into()));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let terms: Vec<(&Monomial, &BigRational)> = f.terms().collect();
    if terms.len() == 2 && (terms[0].1 + terms[1].1).is_zero() {
        let factors = |m: &Monomial| {
            let mut v: Vec<u64> = m
                .vars_with_multiplicity()
                .into_iter()
                .flat_map(|k| map.factors[k].iter().copied())
                .collect();
            v.sort_unstable();
            v
        };
        return Ok(factors(terms[0].0) == factors(terms[1].0));
    }
    Ok(f.substitute(&map.images).is_zero())
}

/// Variable names `t_{A}` for the nonempty proper order ideals, in lattice
/// order.
pub fn ideal_variable_names(constraint: &Poset) -> Result<Vec<String>> {
    let (q, masks) = ideal_lattice(constraint)?;
    let full = masks.iter().copied().max().unwrap_or(0);
    Ok((0..masks.len())
        .filter(|&e| masks[e] != 0 && masks[e] != full)
        .map(|e| format!("t_{{{}}}", q.label(e)))
        .collect())
}

/// The Stanley–Reisner ideal of the lattice of order ideals: `t_A t_B` for
/// incomparable ideals, over the nonempty proper ideals.
pub fn incomparability_ideal(constraint: &Poset) -> Result<MonomialIdeal> {
    let (_, masks) = ideal_lattice(constraint)?;
    let full = masks.iter().copied().max().unwrap_or(0);
    let inner: Vec<u64> = masks.iter().copied().filter(|&m| m != 0 && m != full).collect();
    let nv = inner.len();
    let mut gens = Vec::new();
    for a in 0..nv {
        for b in a + 1..nv {
            let (x, y) = (inner[a], inner[b]);
            if x & y != x && x & y != y {
                gens.push(Monomial::from_vars(nv, &[a, b]));
            }
        }
    }
    Ok(MonomialIdeal::new(nv, gens))
}

/// The generator `∏_{A∉w} t_A` attached to each linear extension.
pub fn chain_monomials(constraint: &Poset) -> Result<Vec<(Word, Monomial)>> {
    let map = pl_homogeneous_map(constraint)?;
    let (_, masks) = ideal_lattice(constraint)?;
    let full = masks.iter().copied().max().unwrap_or(0);
    let inner: Vec<u64> = masks.iter().copied().filter(|&m| m != 0 && m != full).collect();
    let pos: HashMap<u64, usize> = inner.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    Ok(map
        .words
        .iter()
        .zip(&map.factors)
        .map(|(w, fs)| {
            let vars: Vec<usize> = fs.iter().map(|m| pos[m]).collect();
            (w.clone(), Monomial::from_vars(inner.len(), &vars))
        })
        .collect())
}

/// Marginal distribution of the induced orderings of one subset.
#[derive(Clone, Debug, PartialEq)]
pub struct Marginal {
    pub subset: Vec<usize>,
    /// `(sub-word, mass, mass / total)`.
    pub entries: Vec<(Word, BigRational, BigRational)>,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Orderings of `set` compatible with `constraint`, lexicographic.
fn compatible_orders(set: &[usize], constraint: &Poset) -> Vec<Word> {
    fn go(rest: &mut Vec<usize>, cur: &mut Word, c: &Poset, out: &mut Vec<Word>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest[k];
            if rest.iter().any(|&y| c.less(y - 1, x - 1)) {
                continue;
            }
            rest.remove(k);
            cur.push(x);
            go(rest, cur, c, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut set.to_vec(), &mut Vec::new(), constraint, &mut out);
    out
}

/// The complete marginalization of order `k`: for each `k`-subset that is
/// not totally ordered by `constraint`, the mass of each induced ordering.
pub fn marginalize(dist: &[(Word, BigRational)], constraint: &Poset, k: usize) -> Result<Vec<Marginal>> {
    let n = constraint.len();
    if k < 2 || k > n {
        return Err(Error::Invalid(format!("marginal order {k} outside [2, {n}]")));
    }
    for (w, _) in dist {
        let mut s = w.clone();
        s.sort_unstable();
        if s != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Invalid(format!("{} is not a permutation of [{n}]", format_word(w))));
        }
        if let Some((a, b)) = constraint.relation_pairs().into_iter().find(|&(a, b)| {
            w.iter().position(|&x| x == a + 1) > w.iter().position(|&x| x == b + 1)
        }) {
            return Err(Error::Invalid(format!(
                "{} violates {} < {}",
                format_word(w),
                a + 1,
                b + 1
            )));
        }
    }
    let total = dist.iter().fold(BigRational::zero(), |a, (_, p)| a + p);
    let mut out = Vec::new();
    for set in subsets(n, k) {
        let orders = compatible_orders(&set, constraint);
        if orders.len() <= 1 {
            continue;
        }
        let mut mass: BTreeMap<Word, BigRational> = orders.into_iter().map(|o| (o, BigRational::zero())).collect();
        for (w, p) in dist {
            let sub: Word = w.iter().copied().filter(|x| set.contains(x)).collect();
            *mass.get_mut(&sub).expect("compatible restriction") += p;
        }
        let entries = mass
            .into_iter()
            .map(|(w, m)| {
                let norm = if total.is_zero() { BigRational::zero() } else { &m / &total };
                (w, m, norm)
            })
            .collect();
        out.push(Marginal { subset: set, entries });
    }
    Ok(out)
}

/// `θ_j / (θ_i + θ_j)`.
pub fn bt_value(theta: &[BigRational], i: usize, j: usize) -> BigRational {
    &theta[j - 1] / (&theta[i - 1] + &theta[j - 1])
}

/// Random positive rationals with numerators in 1..=20 and denominators in
/// 1..=10.
pub fn random_theta(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| BigRational::new(BigInt::from(rng.gen_range(1..=20)), BigInt::from(rng.gen_range(1..=10))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BtReport {
    pub circuits: usize,
    /// Circuits lie in the kernel of `q_{ij} ↦ ρ_{ij}θ_j`.
    pub circuits_in_lawrence_kernel: bool,
    /// Circuits vanish under `q_{ij} ↦ θ_j/(θ_i+θ_j)` at every trial point.
    pub circuits_vanish: bool,
    /// `θ_j + θ_i = θ_i + θ_j` as polynomials, so `q_{ij} + q_{ji} = 1`.
    pub complementary: bool,
    /// Pairwise Plackett–Luce marginals equal the Bradley–Terry values;
    /// `None` for constrained posets, where the two models differ.
    pub marginals_match: Option<bool>,
    pub witness: Option<String>,
}

impl BtReport {
    pub fn passed(&self) -> bool {
        self.circuits_in_lawrence_kernel
            && self.circuits_vanish
            && self.complementary
            && self.marginals_match != Some(false)
    }
}

pub fn bt_parametrization_check(constraint: &Poset, trials: usize, rng: &mut ChaCha8Rng) -> Result<BtReport> {
    if trials == 0 {
        return Err(Error::Invalid("at least one trial".into()));
    }
    let n = constraint.len();
    let circuits = bt_circuit_binomials(constraint, n.max(3))?;
    let vars = bt_variables(constraint);
    let mut witness = None;
    let lawrence = bt_lawrence_spec(constraint);
    let in_kernel = match &lawrence {
        Ok(spec) => circuits.iter().all(|b| spec.in_kernel(b)),
        Err(_) => circuits.is_empty(),
    };
    if !in_kernel {
        witness = Some("circuit outside the Lawrence kernel".into());
    }
    let complementary = vars.iter().all(|&(i, j)| {
        let a = Polynomial::var(n, j - 1).add(&Polynomial::var(n, i - 1));
        let b = Polynomial::var(n, i - 1).add(&Polynomial::var(n, j - 1));
        a == b
    });
    let mut vanish = true;
    let mut marginals = constraint.covers().is_empty().then_some(true);
    for _ in 0..trials {
        let theta = random_theta(rng, n);
        let point: Vec<BigRational> = vars.iter().map(|&(i, j)| bt_value(&theta, i, j)).collect();
        for c in &circuits {
            if c.to_polynomial().eval(&point) != BigRational::zero() {
                vanish = false;
                witness.get_or_insert_with(|| format!("circuit {c:?} at θ = {theta:?}"));
            }
        }
        if vars
            .iter()
            .any(|&(i, j)| bt_value(&theta, i, j) + bt_value(&theta, j, i) != BigRational::one())
        {
            witness.get_or_insert_with(|| format!("q_ij + q_ji ≠ 1 at θ = {theta:?}"));
        }
        if marginals == Some(true) {
            let pl = pl_probability(constraint, &theta)?;
            let dist: Vec<(Word, BigRational)> = pl.words.into_iter().zip(pl.values).collect();
            for m in marginalize(&dist, constraint, 2)? {
                for (w, _, p) in &m.entries {
                    if *p != bt_value(&theta, w[0], w[1]) {
                        marginals = Some(false);
                        witness.get_or_insert_with(|| {
                            format!("marginal of {} is {p} at θ = {theta:?}", format_word(w))
                        });
                    }
                }
            }
        }
    }
    Ok(BtReport {
        circuits: circuits.len(),
        circuits_in_lawrence_kernel: in_kernel,
        circuits_vanish: vanish,
        complementary,
        marginals_match: marginals,
        witness,
    })
}

/// The four generators of the ideal of the three-item model.
pub const PL3_GENERATORS: [&str; 4] = [
    "p123(p321+p231) - p213(p132+p312)",
    "p312(p123+p213) - p132(p231+p321)",
    "p231(p132+p312) - p321(p123+p213)",
    "p123p231p312 - p132p321p213",
];

/// Components of the lex initial ideal, as triples of words.
pub const PL3_INITIAL_PRIMES: [[&str; 3]; 7] = [
    ["123", "132", "231"],
    ["123", "132", "312"],
    ["123", "132", "213"],
    ["123", "213", "231"],
    ["123", "213", "312"],
    ["123", "312", "321"],
    ["231", "312", "321"],
];

/// Points of the three-item model's singular locus: `e_a − e_b`.
pub const PL3_SINGULAR_POINTS: [(&str, &str); 3] = [("321", "231"), ("123", "213"), ("132", "312")];

/// The cubic and quadric of the model on `{1<2, 3<4}`.
pub const TWO_CHAIN_GENERATORS: [&str; 2] = [
    "p1234p1342p3142 + p1234p3142^2 + p1234p3142p3412 - p1234p1324p3412 - p1324^2p3412 - p1324p3124p3412",
    "p1342p3124 - p1324p3142",
];

#[derive(Clone, Debug)]
pub struct Pl3Report {
    pub generators_vanish: Vec<bool>,
    pub singular_points_on_surface: Vec<bool>,
    pub groebner_basis: Vec<Polynomial>,
    pub initial_squarefree: bool,
    pub initial_matches_primes: bool,
    pub hilbert: HilbertSeries,
}

impl Pl3Report {
    pub fn passed(&self) -> bool {
        self.generators_vanish.iter().all(|&b| b)
            && self.singular_points_on_surface.iter().all(|&b| b)
            && self.initial_squarefree
            && self.initial_matches_primes
    }
}

/// Checks on the three-item model: the printed generators vanish, the
/// three singular points lie on it, and the lex Gröbner basis has the
/// expected squarefree initial ideal and Hilbert series.
pub fn pl3_report(caps: &Caps) -> Result<Pl3Report> {
    let map = pl_homogeneous_map(&Poset::antichain(3))?;
    let names = map.var_names();
    let gens: Vec<Polynomial> = PL3_GENERATORS
        .iter()
        .map(|g| parse_polynomial(g, &names))
        .collect::<Result<_>>()?;
    let generators_vanish = gens.iter().map(|g| pl_vanishes(g, &map)).collect::<Result<Vec<_>>>()?;
    let idx = |w: &str| {
        map.word_index(&crate::poset::parse_word(w).expect("word"))
            .expect("linear extension")
    };
    let singular_points_on_surface = PL3_SINGULAR_POINTS
        .iter()
        .map(|&(a, b)| {
            let mut pt = vec![BigRational::zero(); names.len()];
            pt[idx(a)] = rat(1, 1);
            pt[idx(b)] = rat(-1, 1);
            gens.iter().all(|g| g.eval(&pt).is_zero())
        })
        .collect();
    // Words are in lexicographic order, so variable 0 is p123 and lex with
    // the natural priority is p123 > p132 > … > p321.
    let ord = TermOrder::lex(names.len());
    let gb = buchberger(&gens, &ord, caps)?;
    let leads: Vec<Monomial> = gb.iter().map(|g| g.leading_monomial(&ord).expect("nonzero").clone()).collect();
    let initial = MonomialIdeal::new(names.len(), leads);
    let primes = PL3_INITIAL_PRIMES
        .iter()
        .map(|ws| MonomialIdeal::new(names.len(), ws.iter().map(|w| Monomial::var(names.len(), idx(w))).collect()))
        .reduce(|a, b| a.intersect(&b))
        .expect("seven primes");
    Ok(Pl3Report {
        generators_vanish,
        singular_points_on_surface,
        initial_squarefree: initial.is_squarefree(),
        initial_matches_primes: initial.gens() == primes.gens(),
        hilbert: hilbert_series(&initial),
        groebner_basis: gb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_rational;
    use rand::SeedableRng;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn printed_images() {
        let m = pl_homogeneous_map(&Poset::antichain(3)).unwrap();
        assert_eq!(m.degree, 4);
        assert_eq!(m.render_factored(0), "θ_{2}*θ_{3}*(θ_{1}+θ_{3})*(θ_{2}+θ_{3})");
        let two = pl_homogeneous_map(&Poset::constraint(4, &[(1, 2), (3, 4)]).unwrap()).unwrap();
        assert_eq!(two.words.len(), 6);
        assert_eq!(two.render_factored(0), "θ_{3}*(θ_{1}+θ_{3})*(θ_{3}+θ_{4})*(θ_{1}+θ_{3}+θ_{4})");
        let chain = pl_homogeneous_map(&Poset::chain(4)).unwrap();
        assert_eq!(chain.images, vec![Polynomial::one(4)]);
    }

    #[test]
    fn probabilities() {
        let p = pl_probability(&Poset::antichain(3), &[q("1"), q("1"), q("1")]).unwrap();
        assert!(p.values.iter().all(|v| *v == q("1/6")));
        let p = pl_probability(&Poset::antichain(2), &[q("2"), q("1")]).unwrap();
        assert_eq!(p.values, vec![q("1/3"), q("2/3")]);
        let u = pl_unnormalized(&Poset::antichain(3), &[q("1"), q("2"), q("3")]).unwrap();
        assert_eq!(u.total, q("1/6"));
        assert!(pl_probability(&Poset::antichain(2), &[q("0"), q("1")]).is_err());
        assert!(pl_sums_to_one(3).unwrap());
        assert!(pl_sums_to_one(4).unwrap());
    }

    #[test]
    fn vanishing() {
        let m = pl_homogeneous_map(&Poset::antichain(3)).unwrap();
        let names = m.var_names();
        let f = parse_polynomial(PL3_GENERATORS[0], &names).unwrap();
        assert!(pl_vanishes(&f, &m).unwrap());
        let g = parse_polynomial("p123 - p132", &names).unwrap();
        assert!(!pl_vanishes(&g, &m).unwrap());
        let h = parse_polynomial("p123^2 - p132", &names).unwrap();
        assert!(pl_vanishes(&h, &m).is_err());
        let two = pl_homogeneous_map(&Poset::constraint(4, &[(1, 2), (3, 4)]).unwrap()).unwrap();
        for g in TWO_CHAIN_GENERATORS {
            assert!(pl_vanishes(&parse_polynomial(g, &two.var_names()).unwrap(), &two).unwrap());
        }
    }

    #[test]
    fn stanley_reisner_pair() {
        let c = Poset::constraint(4, &[(1, 2), (3, 4)]).unwrap();
        let names = ideal_variable_names(&c).unwrap();
        let m = incomparability_ideal(&c).unwrap();
        let render = |i: &MonomialIdeal| {
            let mut v: Vec<String> = i.gens().iter().map(|g| g.render_sorted(&names, "")).collect();
            v.sort();
            v
        };
        let mut want_m: Vec<String> = [
            "t_{1}t_{3}", "t_{12}t_{3}", "t_{12}t_{13}", "t_{1}t_{34}", "t_{12}t_{34}", "t_{13}t_{34}",
            "t_{123}t_{34}", "t_{12}t_{134}", "t_{123}t_{134}",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        want_m.sort();
        assert_eq!(render(&m), want_m);
        let dual = m.alexander_dual().unwrap();
        assert_eq!(dual.gens().len(), 6);
        let mut want: Vec<Monomial> = chain_monomials(&c).unwrap().into_iter().map(|(_, m)| m).collect();
        want.sort();
        let mut got = dual.gens().to_vec();
        got.sort();
        assert_eq!(got, want);
        assert!(incomparability_ideal(&Poset::chain(3)).unwrap().is_zero());
    }

    #[test]
    fn marginals_of_three() {
        let m = pl_homogeneous_map(&Poset::antichain(3)).unwrap();
        let dist: Vec<(Word, BigRational)> = m
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), BigRational::from_integer(BigInt::from(1u32 << i))))
            .collect();
        let marg = marginalize(&dist, &Poset::antichain(3), 2).unwrap();
        assert_eq!(marg.len(), 3);
        // Words 123,132,213,231,312,321 carry 1,2,4,8,16,32; q12 = p123+p132+p312.
        assert_eq!(marg[0].entries[0].1, q("19"));
        assert_eq!(marg[0].entries[1].1, q("44"));
        let full = marginalize(&dist, &Poset::antichain(3), 3).unwrap();
        assert_eq!(full[0].entries.iter().map(|e| e.1.clone()).collect::<Vec<_>>(), dist.iter().map(|d| d.1.clone()).collect::<Vec<_>>());
        let chain = marginalize(&[(vec![1, 2, 3], q("1"))], &Poset::chain(3), 2).unwrap();
        assert!(chain.is_empty());
    }

    #[test]
    fn bradley_terry() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = bt_parametrization_check(&Poset::antichain(3), 5, &mut rng).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.circuits, 1);
        let r = bt_parametrization_check(&Poset::chain(3), 2, &mut rng).unwrap();
        assert!(r.passed() && r.circuits == 0);
        let r = bt_parametrization_check(&Poset::constraint(4, &[(1, 2)]).unwrap(), 3, &mut rng).unwrap();
        assert!(r.passed() && r.marginals_match.is_none());
    }

    #[test]
    fn three_item_model() {
        let r = pl3_report(&Caps::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.hilbert.render(), "(1 + 3t + 3t^2)/(1-t)^3");
        assert_eq!(r.hilbert.degree(), BigInt::from(7));
    }
}
