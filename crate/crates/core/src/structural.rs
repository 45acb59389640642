//! Combinatorial generating sets read off the poset: 2×2 minors of the
//! chain-concatenation matrices `M_q`, lifted bipartite cycles for the
//! ascending model, and circuits of the incomparability graph.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::binomial::Binomial;
use crate::poly::monomial::Monomial;
use crate::poly::engine::is_groebner_basis;
use crate::poly::order::{OrderKind, TermOrder};
use crate::poset::{GradedPoset, Poset};
use crate::toric::ToricSpec;

/// Rows: maximal chains of `Q≤q`; columns: maximal chains of `Q≥q`;
/// entries: the column index of the concatenated chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorMatrix {
    pub element: usize,
    pub entries: Vec<Vec<usize>>,
}

impl MinorMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.entries.len(), self.entries.first().map_or(0, |r| r.len()))
    }
}

fn chain_index(q: &GradedPoset) -> HashMap<Vec<usize>, usize> {
    q.maximal_chains()
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c.0, i))
        .collect()
}

/// Lower parts (ending at `e`) and upper parts (starting at `e`) of the
/// maximal chains through `e`, in parent indices.
fn parts(q: &GradedPoset, e: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let (below, above) = q.interval_subposets(e);
    (below.parent_chains(), above.parent_chains())
}

fn join(lower: &[usize], upper: &[usize]) -> Vec<usize> {
    let mut c = lower.to_vec();
    c.extend_from_slice(&upper[1..]);
    c
}

pub fn minor_matrices(q: &GradedPoset) -> Vec<MinorMatrix> {
    let index = chain_index(q);
    (0..q.len())
        .map(|e| {
            let (lo, up) = parts(q, e);
            let entries = lo
                .iter()
                .map(|l| up.iter().map(|u| index[&join(l, u)]).collect())
                .collect();
            MinorMatrix { element: e, entries }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorBasis {
    pub binomials: Vec<Binomial>,
    /// Minors counted once per matrix they occur in.
    pub raw_count: usize,
}

fn sort_binomials(bs: &mut [Binomial], ord: &TermOrder) {
    bs.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| ord.cmp(&a.lead, &b.lead))
            .then_with(|| ord.cmp(&a.trail, &b.trail))
    });
}

/// Orients, drops zero binomials, deduplicates and sorts.
fn normalize(bs: Vec<Binomial>, ord: &TermOrder) -> Vec<Binomial> {
    let mut seen = HashSet::new();
    let mut out: Vec<Binomial> = bs
        .into_iter()
        .filter_map(|b| Binomial::oriented(b.lead, b.trail, ord))
        .filter(|b| seen.insert(b.key()))
        .collect();
    sort_binomials(&mut out, ord);
    out
}

/// All 2×2 minors of all `M_q`, deduplicated and sign-normalized under
/// grevlex in chain order.
pub fn csiszar_minor_basis(q: &GradedPoset) -> Result<MinorBasis> {
    if q.rk() < 1 {
        return Err(Error::Invalid("poset of rank 0".into()));
    }
    let n = q.maximal_chains().len();
    let mut raw = Vec::new();
    for m in minor_matrices(q) {
        let (r, c) = m.shape();
        for r1 in 0..r {
            for r2 in r1 + 1..r {
                for c1 in 0..c {
                    for c2 in c1 + 1..c {
                        let e = &m.entries;
                        raw.push(Binomial::new(
                            Monomial::from_vars(n, &[e[r1][c1], e[r2][c2]]),
                            Monomial::from_vars(n, &[e[r1][c2], e[r2][c1]]),
                        ));
                    }
                }
            }
        }
    }
    let raw_count = raw.len();
    Ok(MinorBasis {
        binomials: normalize(raw, &TermOrder::grevlex(n)),
        raw_count,
    })
}

/// Simple cycles of an undirected graph with at most `max_len` vertices
/// (and at least 3), each listed once: it starts at its least vertex and
/// runs towards the smaller of that vertex's two cycle neighbours.
pub fn simple_cycles(adj: &[Vec<usize>], max_len: usize) -> Vec<Vec<usize>> {
    fn walk(adj: &[Vec<usize>], s: usize, max_len: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let v = *path.last().expect("non-empty");
        for &w in &adj[v] {
            if w == s && path.len() >= 3 && path[1] < v {
                out.push(path.clone());
            } else if w > s && !on[w] && path.len() < max_len {
                on[w] = true;
                path.push(w);
                walk(adj, s, max_len, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; adj.len()];
    for s in 0..adj.len() {
        on[s] = true;
        let mut path = vec![s];
        walk(adj, s, max_len, &mut path, &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Limit on candidate binomials generated by [`ascending_lift_basis`].
pub const MAX_CANDIDATES: usize = 1_000_000;

/// Cycles `a_1 < b_1 > a_2 < b_2 > … > a_1` between ranks `r` and `r+1`, as
/// `(a, b)` sequences, of length at most `2·cap`.
fn level_cycles(q: &GradedPoset, r: usize, cap: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let lower = q.level(r);
    let upper = q.level(r + 1);
    let nl = lower.len();
    let pos: HashMap<usize, usize> = lower
        .iter()
        .chain(upper)
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let mut adj = vec![Vec::new(); nl + upper.len()];
    for &(a, b) in q.covers() {
        if q.rank(a) == r {
            let (i, j) = (pos[&a], pos[&b]);
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    let all: Vec<usize> = lower.iter().chain(upper).copied().collect();
    simple_cycles(&adj, 2 * cap)
        .into_iter()
        .map(|mut c| {
            // The least vertex of a cycle is a lower element, since lower
            // elements come first; keep the loop general anyway.
            if c[0] >= nl {
                c.rotate_left(1);
            }
            let a = c.iter().step_by(2).map(|&i| all[i]).collect();
            let b = c.iter().skip(1).step_by(2).map(|&i| all[i]).collect();
            (a, b)
        })
        .collect()
}

/// Ascending-model generators of two kinds: quadrics exchanging the parts
/// of two chains that share an inner element, and lifts of the cycles of
/// each bipartite graph between consecutive ranks (up to `2·degree_cap`
/// vertices) to maximal chains.
pub fn ascending_lift_basis(q: &GradedPoset, degree_cap: usize) -> Result<Vec<Binomial>> {
    if q.rk() < 1 {
        return Err(Error::Invalid("poset of rank 0".into()));
    }
    if degree_cap < 2 {
        return Err(Error::Invalid("degree cap must be at least 2".into()));
    }
    let chains: Vec<Vec<usize>> = q.maximal_chains().into_iter().map(|c| c.0).collect();
    let index: HashMap<Vec<usize>, usize> = chains.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let n = chains.len();
    let rk = q.rk();
    let mut cands: Vec<Binomial> = Vec::new();
    let guard = |len: usize| {
        if len > MAX_CANDIDATES {
            Err(Error::CapExceeded(format!("more than {MAX_CANDIDATES} candidate binomials")))
        } else {
            Ok(())
        }
    };

    // Quadrics: pairs of chains with an inner element in common, grouped by
    // the multiset union of their elements.
    let mut groups: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            if (1..rk).any(|r| chains[i][r] == chains[j][r]) {
                let mut u: Vec<usize> = chains[i].iter().chain(&chains[j]).copied().collect();
                u.sort_unstable();
                groups.entry(u).or_default().push((i, j));
            }
        }
    }
    for pairs in groups.values() {
        for x in 0..pairs.len() {
            for y in x + 1..pairs.len() {
                let (a, b) = (pairs[x], pairs[y]);
                cands.push(Binomial::new(
                    Monomial::from_vars(n, &[a.0, a.1]),
                    Monomial::from_vars(n, &[b.0, b.1]),
                ));
            }
        }
        guard(cands.len())?;
    }

    // Cycle lifts.
    let mut lower_parts: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    let mut upper_parts: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    for e in 0..q.len() {
        let (lo, up) = parts(q, e);
        lower_parts.insert(e, lo);
        upper_parts.insert(e, up);
    }
    for r in 0..rk {
        for (a, b) in level_cycles(q, r, degree_cap) {
            let s = a.len();
            let choices: Vec<usize> = a
                .iter()
                .map(|x| lower_parts[x].len())
                .chain(b.iter().map(|y| upper_parts[y].len()))
                .collect();
            let total = choices.iter().try_fold(1usize, |acc, &c| acc.checked_mul(c));
            match total {
                Some(t) => guard(cands.len().saturating_add(t))?,
                None => guard(usize::MAX)?,
            }
            let mut pick = vec![0usize; 2 * s];
            loop {
                let lo = |j: usize| &lower_parts[&a[j]][pick[j]];
                let up = |j: usize| &upper_parts[&b[j]][pick[s + j]];
                let cat = |l: &[usize], u: &[usize]| index[&[l, u].concat()];
                let left: Vec<usize> = (0..s).map(|j| cat(lo(j), up(j))).collect();
                let right: Vec<usize> = (0..s).map(|j| cat(lo((j + 1) % s), up(j))).collect();
                cands.push(Binomial::new(Monomial::from_vars(n, &left), Monomial::from_vars(n, &right)));
                let mut k = 0;
                while k < pick.len() {
                    pick[k] += 1;
                    if pick[k] < choices[k] {
                        break;
                    }
                    pick[k] = 0;
                    k += 1;
                }
                if k == pick.len() {
                    break;
                }
            }
        }
    }
    Ok(normalize(cands, &TermOrder::grevlex(n)))
}

/// One binomial per simple cycle of the cover graph of a rank-1 poset.
pub fn bipartite_cycle_binomials(q: &GradedPoset) -> Result<Vec<Binomial>> {
    if q.rk() != 1 {
        return Err(Error::Invalid(format!("poset has rank {}, expected 1", q.rk())));
    }
    let chains: Vec<Vec<usize>> = q.maximal_chains().into_iter().map(|c| c.0).collect();
    let index: HashMap<(usize, usize), usize> =
        chains.iter().enumerate().map(|(i, c)| ((c[0], c[1]), i)).collect();
    let n = chains.len();
    let cycles = level_cycles(q, 0, q.len());
    let bs = cycles
        .into_iter()
        .map(|(a, b)| {
            let s = a.len();
            let left: Vec<usize> = (0..s).map(|j| index[&(a[j], b[j])]).collect();
            let right: Vec<usize> = (0..s).map(|j| index[&(a[(j + 1) % s], b[j])]).collect();
            Binomial::new(Monomial::from_vars(n, &left), Monomial::from_vars(n, &right))
        })
        .collect();
    Ok(normalize(bs, &TermOrder::grevlex(n)))
}

/// Variables `q_{ij}` of the Bradley–Terry model: ordered pairs of
/// incomparable items, lexicographic.
pub fn bt_variables(constraint: &Poset) -> Vec<(usize, usize)> {
    let n = constraint.len();
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && !constraint.comparable(i, j) {
                v.push((i + 1, j + 1));
            }
        }
    }
    v
}

pub fn bt_variable_names(constraint: &Poset) -> Vec<String> {
    let n = constraint.len();
    bt_variables(constraint)
        .into_iter()
        .map(|(i, j)| if n < 10 { format!("q_{{{i}{j}}}") } else { format!("q_{{{i},{j}}}") })
        .collect()
}

/// Circuits `q_{i1i2}q_{i2i3}⋯q_{iki1} − q_{i2i1}q_{i3i2}⋯q_{i1ik}` of the
/// incomparability graph with 3 to `length_cap` vertices, one per cycle.
pub fn bt_circuit_binomials(constraint: &Poset, length_cap: usize) -> Result<Vec<Binomial>> {
    if length_cap < 3 {
        return Err(Error::Invalid("cycle length cap must be at least 3".into()));
    }
    let n = constraint.len();
    let vars = bt_variables(constraint);
    let idx: HashMap<(usize, usize), usize> = vars.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in &vars {
        adj[i - 1].push(j - 1);
    }
    let nv = vars.len();
    Ok(simple_cycles(&adj, length_cap)
        .into_iter()
        .map(|c| {
            let k = c.len();
            let fwd: Vec<usize> = (0..k).map(|t| idx[&(c[t] + 1, c[(t + 1) % k] + 1)]).collect();
            let bwd: Vec<usize> = (0..k).map(|t| idx[&(c[(t + 1) % k] + 1, c[t] + 1)]).collect();
            Binomial::new(Monomial::from_vars(nv, &fwd), Monomial::from_vars(nv, &bwd))
        })
        .collect())
}

/// The Lawrence-type matrix of `q_{ij} ↦ ρ_{ij}·θ_j`: one row per
/// incomparable pair, then one per item.
pub fn bt_lawrence_spec(constraint: &Poset) -> Result<ToricSpec> {
    let n = constraint.len();
    let vars = bt_variables(constraint);
    let pairs: Vec<(usize, usize)> = vars.iter().copied().filter(|&(i, j)| i < j).collect();
    let mut rows = vec![vec![0i64; vars.len()]; pairs.len() + n];
    for (k, &(i, j)) in vars.iter().enumerate() {
        let p = pairs.iter().position(|&x| x == (i.min(j), i.max(j))).expect("pair");
        rows[p][k] = 1;
        rows[pairs.len() + j - 1][k] = 1;
    }
    let mut row_labels: Vec<String> = pairs
        .iter()
        .map(|&(i, j)| if n < 10 { format!("rho_{{{i}{j}}}") } else { format!("rho_{{{i},{j}}}") })
        .collect();
    row_labels.extend((1..=n).map(|i| format!("theta_{{{i}}}")));
    let col_labels = vars
        .iter()
        .map(|&(i, j)| if n < 10 { format!("{i}{j}") } else { format!("{i},{j}") })
        .collect();
    ToricSpec::new(rows, row_labels, col_labels)
}

/// Searches grevlex orders under which `gens` is already a Gröbner basis:
/// the natural variable order, its reverse, then `tries` seeded random
/// permutations. Returns the first order that passes.
pub fn search_groebner_order(gens: &[Binomial], tries: usize, seed: u64) -> Option<TermOrder> {
    let n = gens.first()?.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = vec![(0..n).collect::<Vec<_>>(), (0..n).rev().collect()];
    for _ in 0..tries {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        candidates.push(p);
    }
    candidates.into_iter().find_map(|p| {
        let ord = TermOrder::new(OrderKind::Grevlex, p).expect("permutation");
        is_groebner_basis(gens, &ord).then_some(ord)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{boolean_lattice, graded_from_levels};

    #[test]
    fn boolean_3_has_no_minors() {
        let b = csiszar_minor_basis(&boolean_lattice(3).unwrap()).unwrap();
        assert!(b.binomials.is_empty());
        assert_eq!(b.raw_count, 0);
    }

    #[test]
    fn minor_matrix_shape() {
        let q = boolean_lattice(5).unwrap();
        let e = (0..q.len()).find(|&e| q.label(e) == "24").unwrap();
        let m = &minor_matrices(&q)[e];
        assert_eq!(m.shape(), (2, 6));
    }

    #[test]
    fn cycles_of_k4() {
        let adj: Vec<Vec<usize>> = (0..4).map(|i| (0..4).filter(|&j| j != i).collect()).collect();
        let c = simple_cycles(&adj, 4);
        assert_eq!(c.iter().filter(|x| x.len() == 3).count(), 4);
        assert_eq!(c.iter().filter(|x| x.len() == 4).count(), 3);
        assert_eq!(simple_cycles(&adj, 3).len(), 4);
    }

    #[test]
    fn bt_triangle() {
        let b = bt_circuit_binomials(&Poset::antichain(3), 3).unwrap();
        assert_eq!(b.len(), 1);
        let names = bt_variable_names(&Poset::antichain(3));
        assert_eq!(b[0].render(&names), "q_{12}*q_{23}*q_{31} - q_{13}*q_{21}*q_{32}");
        assert!(bt_circuit_binomials(&Poset::chain(4), 4).unwrap().is_empty());
    }

    #[test]
    fn bipartite_cases() {
        // a, b below x, y: one 4-cycle.
        let sq = graded_from_levels(&[2, 2], &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(bipartite_cycle_binomials(&sq).unwrap().len(), 1);
        // K_{2,3}.
        let k23 = graded_from_levels(&[2, 3], &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(bipartite_cycle_binomials(&k23).unwrap().len(), 3);
        // A path.
        let tree = graded_from_levels(&[2, 2], &[(0, 2), (0, 3), (1, 3)]).unwrap();
        assert!(bipartite_cycle_binomials(&tree).unwrap().is_empty());
    }
}
