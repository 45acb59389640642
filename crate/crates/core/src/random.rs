//! Seeded random posets for property checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::poset::{graded_from_levels, GradedPoset, Poset};

/// A constraint poset on `[n]`: each pair `i<j` of a hidden order is a
/// relation with probability `density`, then items are relabelled at
/// random. Transitive closure is taken by [`Poset::constraint`].
pub fn random_constraint(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Poset {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rels.push((perm[i], perm[j]));
            }
        }
    }
    Poset::constraint(n, &rels).expect("relations follow a linear order")
}

/// A graded poset with the given number of levels and at most `width`
/// elements per level. Every element covers at least one element of the
/// level below and is covered by at least one of the level above.
pub fn random_graded(rng: &mut ChaCha8Rng, levels: usize, width: usize) -> GradedPoset {
    assert!(levels >= 1 && width >= 1);
    let sizes: Vec<usize> = (0..levels).map(|_| rng.gen_range(1..=width)).collect();
    let mut offset = 0;
    let mut covers = Vec::new();
    for w in sizes.windows(2) {
        let (lo, hi) = (offset, offset + w[0]);
        let mut edges = std::collections::BTreeSet::new();
        for a in 0..w[0] {
            for b in 0..w[1] {
                if rng.gen_bool(0.5) {
                    edges.insert((lo + a, hi + b));
                }
            }
        }
        for a in 0..w[0] {
            if !edges.iter().any(|&(x, _)| x == lo + a) {
                edges.insert((lo + a, hi + rng.gen_range(0..w[1])));
            }
        }
        for b in 0..w[1] {
            if !edges.iter().any(|&(_, y)| y == hi + b) {
                edges.insert((lo + rng.gen_range(0..w[0]), hi + b));
            }
        }
        covers.extend(edges);
        offset += w[0];
    }
    graded_from_levels(&sizes, &covers).expect("levels with covers on both sides are graded")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn deterministic_and_well_formed() {
        let a = random_constraint(&mut ChaCha8Rng::seed_from_u64(3), 6, 0.4);
        let b = random_constraint(&mut ChaCha8Rng::seed_from_u64(3), 6, 0.4);
        assert_eq!(a, b);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let q = random_graded(&mut rng, 4, 3);
            assert!(q.rk() <= 3);
            assert!(!q.maximal_chains().is_empty());
        }
    }
}
