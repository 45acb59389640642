//! Toric ideals of nonnegative integer matrices with constant column sum:
//! Markov bases by lattice saturation, Gröbner bases, ideal comparison,
//! normality certificates and fiber enumeration.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::kernel_lattice_basis;
use crate::poly::binomial::Binomial;
use crate::poly::engine::{minimal_generators, saturated_groebner, BinomialGb, Caps};
use crate::poly::hilbert::{hilbert_series, HilbertSeries, MonomialIdeal};
use crate::poly::monomial::Monomial;
use crate::poly::order::TermOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSpec {
    matrix: Vec<Vec<i64>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    s: i64,
}

impl ToricSpec {
    /// Checks shape, nonnegativity, label uniqueness and constant column sum.
    pub fn new(matrix: Vec<Vec<i64>>, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        let cols = col_labels.len();
        if matrix.len() != row_labels.len() {
            return Err(Error::Dimension(format!(
                "{} rows but {} row labels",
                matrix.len(),
                row_labels.len()
            )));
        }
        if let Some(r) = matrix.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("row of length {} for {cols} columns", r.len())));
        }
        if matrix.iter().flatten().any(|&x| x < 0) {
            return Err(Error::Invalid("toric matrix has a negative entry".into()));
        }
        for labels in [&row_labels, &col_labels] {
            let mut seen = std::collections::HashSet::new();
            if let Some(l) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(Error::Format(format!("duplicate label {l:?}")));
            }
        }
        let sums: Vec<i64> = (0..cols).map(|j| matrix.iter().map(|r| r[j]).sum()).collect();
        let s = sums.first().copied().unwrap_or(0);
        if let Some(j) = sums.iter().position(|&x| x != s) {
            return Err(Error::Invalid(format!(
                "column {:?} sums to {} but column {:?} sums to {s}",
                col_labels[j], sums[j], col_labels[0]
            )));
        }
        Ok(ToricSpec {
            matrix,
            row_labels,
            col_labels,
            s,
        })
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    /// Common column sum `S`.
    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.col_labels.iter().position(|l| l == label)
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.matrix.iter().map(|r| r[j]).collect()
    }

    /// Names of the unknowns, `p_{label}` per column.
    pub fn var_names(&self) -> Vec<String> {
        self.col_labels.iter().map(|l| format!("p_{{{l}}}")).collect()
    }

    /// `A·e` for the exponent vector `e` of a monomial.
    pub fn image(&self, m: &Monomial) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|r| r.iter().zip(m.exps()).map(|(&a, &e)| a * e as i64).sum())
            .collect()
    }

    /// Whether `A·(u⁺ − u⁻) = 0`.
    pub fn in_kernel(&self, b: &Binomial) -> bool {
        self.image(&b.lead) == self.image(&b.trail)
    }

    /// Grevlex with variables in column order.
    pub fn default_order(&self) -> TermOrder {
        TermOrder::grevlex(self.cols())
    }
}

/// A generating set of the toric ideal `I_A`, minimal and in deterministic
/// order (by degree, then increasing leading term under grevlex).
///
/// Starts from the lattice ideal of an integer kernel basis and saturates
/// one variable at a time, each time with a grevlex order making that
/// variable cheapest.
pub fn toric_markov_basis(spec: &ToricSpec, caps: &Caps, parallel: bool) -> Result<Vec<Binomial>> {
    let n = spec.cols();
    let kernel = kernel_lattice_basis(spec.matrix(), n).to_i64()?;
    let mut gens: Vec<Binomial> = kernel
        .iter()
        .map(|v| Binomial::from_vector(v).primitive())
        .filter(|b| b.lead != b.trail)
        .collect();
    for k in 0..n {
        if !gens.iter().any(|g| g.lead.exp(k) > 0 || g.trail.exp(k) > 0) {
            continue;
        }
        gens = saturated_groebner(&gens, &TermOrder::grevlex_with_last(n, k), caps, parallel)?;
    }
    let out = minimal_generators(&gens, &spec.default_order(), caps, parallel)?;
    if let Some(b) = out.iter().find(|b| !spec.in_kernel(b)) {
        return Err(Error::Invalid(format!("internal error: {b:?} is not in the kernel")));
    }
    Ok(out)
}

/// Reduced Gröbner basis of `I_A` under `ord`, seeded with a Markov basis.
pub fn toric_groebner(spec: &ToricSpec, ord: &TermOrder, caps: &Caps, parallel: bool) -> Result<Vec<Binomial>> {
    let markov = toric_markov_basis(spec, caps, parallel)?;
    saturated_groebner(&markov, ord, caps, parallel)
}

fn completed(gens: &[Binomial], ord: &TermOrder, caps: &Caps) -> Result<BinomialGb> {
    let mut gb = BinomialGb::new(ord.clone(), caps.clone());
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(|b| b.degree());
    for g in &sorted {
        gb.run_to(Some(g.degree()))?;
        gb.add(g);
    }
    gb.run()?;
    Ok(gb)
}

/// Whether `g1` and `g2` generate the same ideal.
pub fn same_ideal(g1: &[Binomial], g2: &[Binomial], ord: &TermOrder, caps: &Caps) -> Result<bool> {
    let gb2 = completed(g2, ord, caps)?;
    if !g1.iter().all(|b| gb2.reduces_to_zero(b)) {
        return Ok(false);
    }
    let gb1 = completed(g1, ord, caps)?;
    Ok(g2.iter().all(|b| gb1.reduces_to_zero(b)))
}

/// Normality certificate: every leading monomial of the Gröbner basis is
/// squarefree. `false` is inconclusive.
pub fn squarefree_initial(gb: &[Binomial], ord: &TermOrder) -> bool {
    gb.iter().all(|b| match Binomial::oriented(b.lead.clone(), b.trail.clone(), ord) {
        Some(o) => o.lead.is_squarefree(),
        None => true,
    })
}

/// The initial ideal of a Gröbner basis.
pub fn initial_ideal(gb: &[Binomial], ord: &TermOrder, nvars: usize) -> MonomialIdeal {
    let leads = gb
        .iter()
        .filter_map(|b| Binomial::oriented(b.lead.clone(), b.trail.clone(), ord))
        .map(|b| b.lead)
        .collect();
    MonomialIdeal::new(nvars, leads)
}

/// Hilbert series of `K[p]/I_A` from a Gröbner basis.
pub fn toric_hilbert_series(gb: &[Binomial], ord: &TermOrder, nvars: usize) -> HilbertSeries {
    hilbert_series(&initial_ideal(gb, ord, nvars))
}

/// Largest column count for which fibers of degree above 3 are searched.
pub const FIBER_WIDE_LIMIT: usize = 200;

fn sub(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    v.iter().all(|&x| x >= 0).then_some(v)
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// All degree-`degree` monomials `x^u` with `A·u = target`, sorted.
///
/// Degrees 2 and 3 join a table of column sums against single columns;
/// other degrees use a pruned depth-first search.
pub fn fiber(spec: &ToricSpec, target: &[i64], degree: u32) -> Result<Vec<Monomial>> {
    let (n, r) = (spec.cols(), spec.rows());
    if target.len() != r {
        return Err(Error::Dimension(format!("target has {} entries, matrix has {r} rows", target.len())));
    }
    if degree == 0 {
        return Err(Error::Invalid("fiber degree must be at least 1".into()));
    }
    let total: i64 = target.iter().sum();
    if total != spec.s() * degree as i64 {
        return Err(Error::Invalid(format!(
            "target sums to {total}, expected {} for degree {degree}",
            spec.s() * degree as i64
        )));
    }
    if degree > 3 && n > FIBER_WIDE_LIMIT {
        return Err(Error::CapExceeded(format!(
            "fibers of degree {degree} over {n} > {FIBER_WIDE_LIMIT} columns"
        )));
    }
    let cols: Vec<Vec<i64>> = (0..n).map(|j| spec.column(j)).collect();
    let mono = |idx: &[usize]| Monomial::from_vars(n, idx);
    let mut out: Vec<Monomial> = match degree {
        1 => (0..n).filter(|&j| cols[j] == target).map(|j| mono(&[j])).collect(),
        2 | 3 => {
            let mut singles: HashMap<&[i64], Vec<usize>> = HashMap::new();
            for (j, c) in cols.iter().enumerate() {
                singles.entry(c.as_slice()).or_default().push(j);
            }
            if degree == 2 {
                let mut v = Vec::new();
                for i in 0..n {
                    if let Some(rem) = sub(target, &cols[i]) {
                        if let Some(js) = singles.get(rem.as_slice()) {
                            v.extend(js.iter().filter(|&&j| j >= i).map(|&j| mono(&[i, j])));
                        }
                    }
                }
                v
            } else {
                let pairs: HashMap<Vec<i64>, Vec<(usize, usize)>> = {
                    let rows: Vec<Vec<(Vec<i64>, (usize, usize))>> = (0..n)
                        .into_par_iter()
                        .map(|i| {
                            (i..n)
                                .filter_map(|j| {
                                    let s = add(&cols[i], &cols[j]);
                                    sub(target, &s).map(|_| (s, (i, j)))
                                })
                                .collect()
                        })
                        .collect();
                    let mut m: HashMap<Vec<i64>, Vec<(usize, usize)>> = HashMap::new();
                    for (s, p) in rows.into_iter().flatten() {
                        m.entry(s).or_default().push(p);
                    }
                    m
                };
                let found: Vec<Vec<Monomial>> = (0..n)
                    .into_par_iter()
                    .map(|k| {
                        let Some(rem) = sub(target, &cols[k]) else {
                            return Vec::new();
                        };
                        pairs
                            .get(&rem)
                            .map(|ps| {
                                ps.iter()
                                    .filter(|&&(_, j)| j <= k)
                                    .map(|&(i, j)| mono(&[i, j, k]))
                                    .collect()
                            })
                            .unwrap_or_default()
                    })
                    .collect();
                found.into_iter().flatten().collect()
            }
        }
        _ => {
            let mut v = Vec::new();
            let mut stack = Vec::new();
            dfs(&cols, target.to_vec(), 0, degree, &mut stack, &mut v);
            v.into_iter().map(|idx| mono(&idx)).collect()
        }
    };
    out.sort();
    out.dedup();
    Ok(out)
}

fn dfs(cols: &[Vec<i64>], rem: Vec<i64>, start: usize, left: u32, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        if rem.iter().all(|&x| x == 0) {
            out.push(stack.clone());
        }
        return;
    }
    for j in start..cols.len() {
        if let Some(r) = sub(&rem, &cols[j]) {
            stack.push(j);
            dfs(cols, r, j, left - 1, stack, out);
            stack.pop();
        }
    }
}

/// `A·u` for a monomial given by column labels with multiplicity.
pub fn target_of(spec: &ToricSpec, labels: &[&str]) -> Result<Vec<i64>> {
    let mut idx = Vec::with_capacity(labels.len());
    for l in labels {
        idx.push(spec.col_index(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
    }
    Ok(spec.image(&Monomial::from_vars(spec.cols(), &idx)))
}

/// The degree of a toric variety read off a squarefree initial ideal: the
/// number of maximal facets of the initial complex, each a unimodular
/// simplex. `None` when the initial ideal is not squarefree.
pub fn squarefree_initial_degree(gb: &[Binomial], ord: &TermOrder, nvars: usize) -> Result<Option<BigInt>> {
    let ini = initial_ideal(gb, ord, nvars);
    if !ini.is_squarefree() {
        return Ok(None);
    }
    let (_, d) = ini.squarefree_codim_degree()?;
    Ok(Some(BigInt::from(d)))
}

/// Number of quadrics in any minimal generating set of `I_A`: with
/// pairwise distinct columns there are no linear binomials, so each
/// degree-2 fiber `F` contributes `|F| − 1`.
pub fn minimal_quadric_count(spec: &ToricSpec) -> Result<usize> {
    let n = spec.cols();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| spec.column(j)).collect();
    let distinct: HashSet<&Vec<i64>> = cols.iter().collect();
    if distinct.len() != n {
        return Err(Error::Invalid("repeated columns give linear relations".into()));
    }
    let mut fibers: HashMap<Vec<i64>, usize> = HashMap::new();
    for j in 0..n {
        for k in j..n {
            *fibers.entry(add(&cols[j], &cols[k])).or_insert(0) += 1;
        }
    }
    Ok(fibers.values().map(|&c| c - 1).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::engine::binomial_groebner;
    use proptest::prelude::*;

    fn labels(n: usize, p: &str) -> Vec<String> {
        (0..n).map(|i| format!("{p}{i}")).collect()
    }

    fn twisted_cubic() -> ToricSpec {
        ToricSpec::new(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 3]], labels(2, "r"), labels(4, "c")).unwrap()
    }

    #[test]
    fn rejects_uneven_columns() {
        assert!(ToricSpec::new(vec![vec![1, 2]], labels(1, "r"), labels(2, "c")).is_err());
        assert!(ToricSpec::new(vec![vec![1, 1]], labels(1, "r"), vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn twisted_cubic_markov() {
        let spec = twisted_cubic();
        let m = toric_markov_basis(&spec, &Caps::default(), false).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|b| b.degree() == 2 && spec.in_kernel(b)));
        let ord = spec.default_order();
        let gb = toric_groebner(&spec, &ord, &Caps::default(), false).unwrap();
        let h = toric_hilbert_series(&gb, &ord, 4);
        assert_eq!(h.k, 2);
        assert_eq!(h.degree(), BigInt::from(3));
        // The grevlex initial ideal ⟨x1², x1x2, x2²⟩ is not squarefree.
        assert_eq!(squarefree_initial_degree(&gb, &ord, 4).unwrap(), None);
    }

    #[test]
    fn quadric_count_matches_engine() {
        let spec = twisted_cubic();
        assert_eq!(minimal_quadric_count(&spec).unwrap(), 3);
        let dup = ToricSpec::new(vec![vec![1, 1]], labels(1, "r"), labels(2, "c")).unwrap();
        assert!(minimal_quadric_count(&dup).is_err());
    }

    #[test]
    fn same_ideal_detects_missing_generator() {
        let spec = twisted_cubic();
        let ord = spec.default_order();
        let m = toric_markov_basis(&spec, &Caps::default(), false).unwrap();
        assert!(same_ideal(&m, &m, &ord, &Caps::default()).unwrap());
        assert!(!same_ideal(&m[..1], &m, &ord, &Caps::default()).unwrap());
    }

    #[test]
    fn squarefree_certificate() {
        let ord = TermOrder::grevlex(3);
        // x² − yz has a non-squarefree lead.
        let b = Binomial::new(Monomial::new(vec![2, 0, 0]), Monomial::new(vec![0, 1, 1]));
        assert!(!squarefree_initial(&[b], &ord));
    }

    #[test]
    fn fiber_degree_one_and_errors() {
        let spec = twisted_cubic();
        assert_eq!(fiber(&spec, &[2, 1], 1).unwrap(), vec![Monomial::var(4, 1)]);
        assert!(fiber(&spec, &[2, 2], 1).is_err());
        assert!(fiber(&spec, &[3], 1).is_err());
    }

    /// All degree-d multisets of columns with the given image, by brute force.
    fn brute_fiber(spec: &ToricSpec, target: &[i64], d: u32) -> Vec<Monomial> {
        let n = spec.cols();
        let mut out = Vec::new();
        let mut idx = vec![0usize; d as usize];
        loop {
            if idx.windows(2).all(|w| w[0] <= w[1]) {
                let m = Monomial::from_vars(n, &idx);
                if spec.image(&m) == target {
                    out.push(m);
                }
            }
            let mut p = 0;
            loop {
                if p == idx.len() {
                    out.sort();
                    return out;
                }
                idx[p] += 1;
                if idx[p] < n {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    fn spec_strategy() -> impl Strategy<Value = ToricSpec> {
        (2usize..4, 3usize..8).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(0i64..3, r), c).prop_map(move |cols| {
                // Append a slack row so every column sums to the same value.
                let s = cols.iter().map(|c| c.iter().sum::<i64>()).max().unwrap_or(0);
                let mut m = vec![vec![0i64; c]; r + 1];
                for (j, col) in cols.iter().enumerate() {
                    for i in 0..r {
                        m[i][j] = col[i];
                    }
                    m[r][j] = s - col.iter().sum::<i64>();
                }
                let labels: Vec<String> = (0..c).map(|j| format!("c{j}")).collect();
                ToricSpec::new(m, (0..=r).map(|i| format!("r{i}")).collect(), labels).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn fibers_match_brute_force(spec in spec_strategy(), picks in prop::collection::vec(0usize..64, 3)) {
            let n = spec.cols();
            for d in 1..=3u32 {
                let idx: Vec<usize> = picks[..d as usize].iter().map(|&p| p % n).collect();
                let target = spec.image(&Monomial::from_vars(n, &idx));
                let f = fiber(&spec, &target, d).unwrap();
                prop_assert_eq!(&f, &brute_fiber(&spec, &target, d));
                prop_assert!(f.contains(&Monomial::from_vars(n, &idx)));
            }
        }

        #[test]
        fn markov_basis_generates_kernel_ideal(spec in spec_strategy()) {
            let caps = Caps::default();
            let m = toric_markov_basis(&spec, &caps, false).unwrap();
            for b in &m {
                prop_assert!(spec.in_kernel(b));
            }
            // Every degree-2 and degree-3 fiber is connected by the basis:
            // all its monomials share one normal form.
            let ord = spec.default_order();
            let gb = binomial_groebner(&m, &ord, &caps, false).unwrap();
            let mut eng = BinomialGb::new(ord.clone(), caps.clone());
            for g in &gb {
                eng.add(g);
            }
            let n = spec.cols();
            for d in 2..=3u32 {
                for j in 0..n {
                    let idx = vec![j; d as usize];
                    let t = spec.image(&Monomial::from_vars(n, &idx));
                    let f = fiber(&spec, &t, d).unwrap();
                    let nf: Vec<Monomial> = f.iter().map(|x| eng.normal_form(x)).collect();
                    prop_assert!(nf.windows(2).all(|w| w[0] == w[1]));
                }
            }
            // Hilbert series agrees between two orders.
            let lex = TermOrder::lex(n);
            let g2 = toric_groebner(&spec, &lex, &caps, false).unwrap();
            prop_assert_eq!(toric_hilbert_series(&gb, &ord, n), toric_hilbert_series(&g2, &lex, n));
        }
    }
}
