use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankalg_core::models::{
    constraint_model, csiszar_dimension_formula, csiszar_mle, model_inclusion, model_matrix, polytope_dimension,
    sufficient_stats, ModelKind,
};
use rankalg_core::poly::engine::is_groebner_basis;
use rankalg_core::poly::{Caps, Monomial, TermOrder};
use rankalg_core::poset::{boolean_lattice, linear_extensions, order_ideal_lattice, Poset, Word};
use rankalg_core::random::{random_constraint, random_graded};
use rankalg_core::structural::csiszar_minor_basis;
use rankalg_core::toric::{fiber, toric_groebner, toric_hilbert_series, toric_markov_basis, same_ideal};

const CONSTRAINT_KINDS: [ModelKind; 5] = [
    ModelKind::Ascending,
    ModelKind::Csiszar,
    ModelKind::Birkhoff,
    ModelKind::Inversion,
    ModelKind::AltInversion,
];

fn permutations(n: usize) -> Vec<Word> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for w in permutations(n - 1) {
        for pos in 0..=w.len() {
            let mut v = w.clone();
            v.insert(pos, n);
            out.push(v);
        }
    }
    out
}

/// Linear extensions by filtering all `n!` words: `a < b` forces `a` first.
fn brute_extensions(p: &Poset) -> HashSet<Word> {
    let n = p.len();
    permutations(n)
        .into_iter()
        .filter(|w| {
            let pos: Vec<usize> = {
                let mut pos = vec![0; n + 1];
                for (i, &x) in w.iter().enumerate() {
                    pos[x] = i;
                }
                pos
            };
            p.relation_pairs().iter().all(|&(a, b)| {
                let (ia, ib): (usize, usize) = (p.label(a).parse().unwrap(), p.label(b).parse().unwrap());
                pos[ia] < pos[ib]
            })
        })
        .collect()
}

#[test]
fn csiszar_dimension_formula_on_random_graded_posets() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..25 {
        let levels = rng.gen_range(2..=5);
        let width = rng.gen_range(1..=4);
        let q = random_graded(&mut rng, levels, width);
        let m = model_matrix(ModelKind::Csiszar, &q).unwrap();
        assert_eq!(csiszar_dimension_formula(&q), polytope_dimension(&m));
    }
}

#[test]
fn minors_are_groebner_for_boolean_lattices() {
    for n in 3..=4 {
        let q = boolean_lattice(n).unwrap();
        let m = model_matrix(ModelKind::Csiszar, &q).unwrap();
        let minors = csiszar_minor_basis(&q).unwrap().binomials;
        assert!(is_groebner_basis(&minors, &m.spec.default_order()));
    }
}

#[test]
fn inclusion_is_reflexive_and_transitive() {
    let q = boolean_lattice(4).unwrap();
    let models: Vec<_> = [ModelKind::Ascending, ModelKind::Csiszar, ModelKind::Birkhoff, ModelKind::Inversion]
        .iter()
        .map(|&k| model_matrix(k, &q).unwrap())
        .collect();
    let inc: Vec<Vec<bool>> = models
        .iter()
        .map(|a| models.iter().map(|b| model_inclusion(a, b).unwrap()).collect())
        .collect();
    for i in 0..models.len() {
        assert!(inc[i][i]);
        for j in 0..models.len() {
            for k in 0..models.len() {
                if inc[i][j] && inc[j][k] {
                    assert!(inc[i][k], "{i} ⊆ {j} ⊆ {k}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn linear_extensions_match_brute_force(seed in any::<u64>(), n in 1usize..6, density in 0.0f64..0.8) {
        let p = random_constraint(&mut ChaCha8Rng::seed_from_u64(seed), n, density);
        let ext = linear_extensions(&p).unwrap();
        let set: HashSet<Word> = ext.iter().cloned().collect();
        prop_assert_eq!(set.len(), ext.len());
        prop_assert_eq!(set, brute_extensions(&p));
        let q = order_ideal_lattice(&p).unwrap();
        prop_assert!(q.is_lattice());
        prop_assert_eq!(q.maximal_chains().len(), ext.len());
        prop_assert_eq!(q.rk(), n);
    }

    #[test]
    fn markov_bases_lie_in_the_kernel(seed in any::<u64>(), n in 2usize..5, k in 0usize..5) {
        let p = random_constraint(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.3);
        let m = constraint_model(CONSTRAINT_KINDS[k], &p).unwrap();
        let mk = toric_markov_basis(&m.spec, &Caps::default(), false).unwrap();
        for b in &mk {
            prop_assert!(m.spec.in_kernel(b));
            prop_assert!(b.is_homogeneous());
            prop_assert!(b.lead.gcd(&b.trail).is_one());
        }
    }

    #[test]
    fn hilbert_series_is_order_independent(seed in any::<u64>(), n in 2usize..5, k in 0usize..5) {
        let p = random_constraint(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.3);
        let m = constraint_model(CONSTRAINT_KINDS[k], &p).unwrap();
        let cols = m.spec.cols();
        let grevlex = m.spec.default_order();
        let lex = TermOrder::lex(cols);
        let h1 = toric_hilbert_series(&toric_groebner(&m.spec, &grevlex, &Caps::default(), false).unwrap(), &grevlex, cols);
        let h2 = toric_hilbert_series(&toric_groebner(&m.spec, &lex, &Caps::default(), false).unwrap(), &lex, cols);
        prop_assert_eq!(&h1, &h2);
        prop_assert_eq!(h1.krull_dim(), polytope_dimension(&m) + 1);
    }

    #[test]
    fn minors_generate_the_csiszar_ideal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let levels = rng.gen_range(2..=4);
        let q = random_graded(&mut rng, levels, 3);
        let m = model_matrix(ModelKind::Csiszar, &q).unwrap();
        let minors = csiszar_minor_basis(&q).unwrap().binomials;
        let mk = toric_markov_basis(&m.spec, &Caps::default(), false).unwrap();
        if mk.is_empty() {
            prop_assert!(minors.is_empty());
        } else {
            prop_assert!(minors.iter().all(|b| m.spec.in_kernel(b)));
            prop_assert!(same_ideal(&minors, &mk, &m.spec.default_order(), &Caps::default()).unwrap());
        }
    }

    #[test]
    fn fibers_are_exactly_the_preimages(seed in any::<u64>(), a in 0usize..64, b in 0usize..64) {
        let p = random_constraint(&mut ChaCha8Rng::seed_from_u64(seed), 4, 0.2);
        let m = constraint_model(ModelKind::Inversion, &p).unwrap();
        let cols = m.spec.cols();
        let u = Monomial::from_vars(cols, &[a % cols, b % cols]);
        let target = m.spec.image(&u);
        let got: HashSet<Monomial> = fiber(&m.spec, &target, 2).unwrap().into_iter().collect();
        let mut want = HashSet::new();
        for i in 0..cols {
            for j in i..cols {
                let v = Monomial::from_vars(cols, &[i, j]);
                if m.spec.image(&v) == target {
                    want.insert(v);
                }
            }
        }
        prop_assert!(got.contains(&u));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn csiszar_mle_is_a_moment_matching_distribution(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = boolean_lattice(n).unwrap();
        let m = model_matrix(ModelKind::Csiszar, &q).unwrap();
        let mut data: Vec<(String, u64)> = m.spec.col_labels().iter().map(|l| (l.clone(), rng.gen_range(0..4))).collect();
        data[0].1 += 1;
        let phat = csiszar_mle(&q, &data).unwrap();
        let total: BigRational = phat.iter().map(|(_, v)| v.clone()).sum();
        prop_assert!(total.is_one());
        prop_assert!(phat.iter().all(|(_, v)| !v.is_negative()));
        let observed = sufficient_stats(&m, &data).unwrap();
        let nn = BigRational::from_integer(BigInt::from(observed.n));
        for (row, &want) in m.spec.matrix().iter().zip(&observed.values) {
            let fitted: BigRational = row
                .iter()
                .zip(&phat)
                .filter(|(&a, _)| a != 0)
                .map(|(&a, (_, v))| v * BigRational::from_integer(BigInt::from(a)) * &nn)
                .fold(BigRational::zero(), |s, x| s + x);
            prop_assert_eq!(fitted, BigRational::from_integer(BigInt::from(want)));
        }
    }
}
