//! The toric ranking models on graded posets and constraint posets, their
//! polytopes, and exact evaluation of distributions.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank_i64, rref, rowspace_contains, solve_unique, RationalMatrix};
use crate::poset::{
    format_word, linear_extensions, order_ideal_lattice, GradedPoset, MaximalChain, Poset, Word,
};
use crate::toric::ToricSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Ascending,
    Csiszar,
    Birkhoff,
    Inversion,
    AltInversion,
}

impl ModelKind {
    pub const ALL: [ModelKind; 5] = [
        ModelKind::Ascending,
        ModelKind::Csiszar,
        ModelKind::Birkhoff,
        ModelKind::Inversion,
        ModelKind::AltInversion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Ascending => "ascending",
            ModelKind::Csiszar => "csiszar",
            ModelKind::Birkhoff => "birkhoff",
            ModelKind::Inversion => "inversion",
            ModelKind::AltInversion => "alt_inversion",
        }
    }

    /// Whether the model is only defined on lattices of order ideals.
    pub fn needs_lattice(self) -> bool {
        matches!(self, ModelKind::Birkhoff | ModelKind::Inversion | ModelKind::AltInversion)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "ascending" | "asc" => Ok(ModelKind::Ascending),
            "csiszar" | "csi" => Ok(ModelKind::Csiszar),
            "birkhoff" | "birk" => Ok(ModelKind::Birkhoff),
            "inversion" | "inv" => Ok(ModelKind::Inversion),
            "alt_inversion" | "altinversion" | "alt_inv" => Ok(ModelKind::AltInversion),
            _ => Err(Error::Format(format!("unknown model kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModelMatrix {
    pub kind: ModelKind,
    pub spec: ToricSpec,
    pub poset: GradedPoset,
    pub chains: Vec<MaximalChain>,
}

fn pair_label(prefix: &str, i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{prefix}_{{{i}{j}}}")
    } else {
        format!("{prefix}_{{{i},{j}}}")
    }
}

/// The exponent matrix of the model's monomial map on `q`.
///
/// Ascending rows are `c_{a}` for every element including the minimum;
/// Csiszár rows are `d_{a<b}` per cover; Birkhoff rows `a_{ij}` (position
/// `i`, item `j`); inversion rows `u_{ij}` (pair in order) then `v_{ij}`
/// (pair inverted). The alternative inversion model compares the items in
/// positions `i < j` instead of the positions of items `i < j`.
pub fn model_matrix(kind: ModelKind, q: &GradedPoset) -> Result<ModelMatrix> {
    let chains = q.maximal_chains();
    let col_labels: Vec<String> = chains.iter().map(|c| q.chain_label(c)).collect();
    let words: Option<Vec<Word>> = chains.iter().map(|c| q.chain_word(c)).collect();
    if kind.needs_lattice() && (q.lattice().is_none() || words.is_none()) {
        return Err(Error::NotDistributive(format!(
            "the {kind} model needs the lattice of order ideals of a constraint poset"
        )));
    }
    let (rows, row_labels): (Vec<Vec<i64>>, Vec<String>) = match kind {
        ModelKind::Ascending => {
            let labels = (0..q.len()).map(|e| format!("c_{{{}}}", q.label(e))).collect();
            let mut m = vec![vec![0i64; chains.len()]; q.len()];
            for (j, c) in chains.iter().enumerate() {
                for &e in &c.0 {
                    m[e][j] = 1;
                }
            }
            (m, labels)
        }
        ModelKind::Csiszar => {
            let covers = q.covers();
            let index: HashMap<(usize, usize), usize> =
                covers.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let labels = covers
                .iter()
                .map(|&(a, b)| format!("d_{{{}<{}}}", q.label(a), q.label(b)))
                .collect();
            let mut m = vec![vec![0i64; chains.len()]; covers.len()];
            for (j, c) in chains.iter().enumerate() {
                for w in c.0.windows(2) {
                    m[index[&(w[0], w[1])]][j] = 1;
                }
            }
            (m, labels)
        }
        ModelKind::Birkhoff => {
            let words = words.expect("checked");
            let n = q.items().expect("checked");
            let mut labels = Vec::with_capacity(n * n);
            for i in 1..=n {
                for j in 1..=n {
                    labels.push(pair_label("a", i, j, n));
                }
            }
            let mut m = vec![vec![0i64; chains.len()]; n * n];
            for (col, w) in words.iter().enumerate() {
                for (pos, &item) in w.iter().enumerate() {
                    m[pos * n + item - 1][col] = 1;
                }
            }
            (m, labels)
        }
        ModelKind::Inversion | ModelKind::AltInversion => {
            let words = words.expect("checked");
            let n = q.items().expect("checked");
            let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
            let np = pairs.len();
            let mut labels: Vec<String> = pairs.iter().map(|&(i, j)| pair_label("u", i, j, n)).collect();
            labels.extend(pairs.iter().map(|&(i, j)| pair_label("v", i, j, n)));
            let mut m = vec![vec![0i64; chains.len()]; 2 * np];
            for (col, w) in words.iter().enumerate() {
                let mut pos = vec![0usize; n + 1];
                for (p, &item) in w.iter().enumerate() {
                    pos[item] = p;
                }
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    let inverted = if kind == ModelKind::Inversion {
                        pos[i] > pos[j]
                    } else {
                        w[i - 1] > w[j - 1]
                    };
                    m[if inverted { np + k } else { k }][col] = 1;
                }
            }
            (m, labels)
        }
    };
    let spec = ToricSpec::new(rows, row_labels, col_labels)?;
    Ok(ModelMatrix {
        kind,
        spec,
        poset: q.clone(),
        chains,
    })
}

/// `model_matrix` on the lattice of order ideals of a constraint poset.
pub fn constraint_model(kind: ModelKind, constraint: &Poset) -> Result<ModelMatrix> {
    model_matrix(kind, &order_ideal_lattice(constraint)?)
}

impl ModelMatrix {
    /// Declared column sum of the kind.
    pub fn expected_column_sum(&self) -> i64 {
        match self.kind {
            ModelKind::Ascending => self.poset.rk() as i64 + 1,
            ModelKind::Csiszar => self.poset.rk() as i64,
            ModelKind::Birkhoff => self.poset.items().unwrap_or(0) as i64,
            ModelKind::Inversion | ModelKind::AltInversion => {
                let n = self.poset.items().unwrap_or(0) as i64;
                n * (n - 1) / 2
            }
        }
    }

    pub fn rational(&self) -> RationalMatrix {
        RationalMatrix::from_i64(self.spec.matrix(), self.spec.cols()).expect("consistent shape")
    }

    /// Evaluates each column monomial at `params` without normalizing.
    pub fn evaluate_raw(&self, params: &HashMap<String, BigRational>) -> Result<Vec<BigRational>> {
        let mut values = Vec::with_capacity(self.spec.rows());
        for l in self.spec.row_labels() {
            let v = params
                .get(l)
                .or_else(|| params.get(&crate::poly::parse::normalize_name(l)))
                .ok_or_else(|| Error::UnknownLabel(format!("no value for parameter {l}")))?;
            if v.is_negative() {
                return Err(Error::Invalid(format!("parameter {l} is negative")));
            }
            values.push(v.clone());
        }
        Ok((0..self.spec.cols())
            .map(|j| {
                let mut acc = BigRational::one();
                for (i, row) in self.spec.matrix().iter().enumerate() {
                    for _ in 0..row[j] {
                        acc *= &values[i];
                    }
                }
                acc
            })
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SufficientStats {
    pub labels: Vec<String>,
    pub values: Vec<u64>,
    pub n: u64,
}

/// `A·u` for the count vector `u` given by column label.
pub fn sufficient_stats(m: &ModelMatrix, counts: &[(String, u64)]) -> Result<SufficientStats> {
    let mut u = vec![0u64; m.spec.cols()];
    for (label, c) in counts {
        let j = m
            .spec
            .col_index(label)
            .ok_or_else(|| Error::UnknownLabel(format!("chain {label:?}")))?;
        u[j] = u[j]
            .checked_add(*c)
            .ok_or_else(|| Error::Invalid("count overflow".into()))?;
    }
    let n = u.iter().try_fold(0u64, |a, &b| a.checked_add(b));
    let n = n.ok_or_else(|| Error::Invalid("count overflow".into()))?;
    let values = m
        .spec
        .matrix()
        .iter()
        .map(|row| row.iter().zip(&u).map(|(&a, &x)| a as u64 * x).sum())
        .collect();
    Ok(SufficientStats {
        labels: m.spec.row_labels().to_vec(),
        values,
        n,
    })
}

/// Dimension of the model polytope, `rank(A) − 1`.
pub fn polytope_dimension(m: &ModelMatrix) -> usize {
    rank_i64(m.spec.matrix()).saturating_sub(1)
}

/// `|Cov(Q)| − |Q| + |Q_top| + |Q_0| − 1`, the Csiszár polytope dimension
/// in closed form; [`polytope_dimension`] is the rank oracle it must match.
pub fn csiszar_dimension_formula(q: &GradedPoset) -> usize {
    let top = q.level(q.rk()).len();
    let bottom = q.level(0).len();
    (q.covers().len() + top + bottom).saturating_sub(q.len() + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BirkhoffDimension {
    /// Never-realized `(position, item)` pairs, 1-based.
    pub z: Vec<(usize, usize)>,
    /// Leading variables of the row and column sum relations.
    pub c: Vec<(usize, usize)>,
    pub dim: usize,
}

/// `n² − |Z| − |C|`, checked against the rank of the Birkhoff matrix.
///
/// `C` is the set of leading variables of the row and column sum relations
/// once `x_Z = 0`. The formula is the dimension of the face `x_Z = 0` of
/// the Birkhoff polytope, which can exceed the model's dimension when some
/// permutation outside the linear extensions avoids `Z`; that case is
/// reported as [`Error::FormulaMismatch`].
pub fn birkhoff_dimension(constraint: &Poset) -> Result<BirkhoffDimension> {
    let n = constraint.len();
    let exts = linear_extensions(constraint)?;
    let mut seen = vec![vec![false; n + 1]; n + 1];
    for w in &exts {
        for (p, &item) in w.iter().enumerate() {
            seen[p + 1][item] = true;
        }
    }
    let mut z = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if !seen[i][j] {
                z.push((i, j));
            }
        }
    }
    // C: leading variables of the row and column sum relations once x_Z = 0,
    // variables ordered with (n,n) largest (the rref pivots).
    let vars: Vec<(usize, usize)> = (1..=n)
        .rev()
        .flat_map(|i| (1..=n).rev().map(move |j| (i, j)))
        .filter(|&(i, j)| seen[i][j])
        .collect();
    let mut relations: Vec<Vec<BigRational>> = Vec::with_capacity(2 * n);
    for k in 1..=n {
        relations.push(vars.iter().map(|&(i, _)| BigRational::from_integer(BigInt::from((i == k) as i64))).collect());
        relations.push(vars.iter().map(|&(_, j)| BigRational::from_integer(BigInt::from((j == k) as i64))).collect());
    }
    let c: BTreeSet<(usize, usize)> = rref(&mut relations).into_iter().map(|p| vars[p]).collect();
    let dim = (n * n) as i64 - z.len() as i64 - c.len() as i64;
    let m = constraint_model(ModelKind::Birkhoff, constraint)?;
    let oracle = polytope_dimension(&m) as i64;
    if dim != oracle {
        return Err(Error::FormulaMismatch(format!(
            "n² − |Z| − |C| = {dim} but the model matrix has dimension {oracle}"
        )));
    }
    Ok(BirkhoffDimension {
        z,
        c: c.into_iter().collect(),
        dim: dim as usize,
    })
}

/// `coeffs · x (= or ≥) rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearRow {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HDescription {
    pub kind: ModelKind,
    pub coords: Vec<String>,
    pub equalities: Vec<LinearRow>,
    /// All with sense `≥`.
    pub inequalities: Vec<LinearRow>,
    /// Subset inequalities before pruning (ascending only).
    pub raw_subset_inequalities: usize,
}

/// Largest level for which the ascending subset inequalities are listed.
pub const MAX_SUBSET_LEVEL: usize = 20;

/// Linear description of the Csiszár or ascending model polytope.
pub fn h_description(kind: ModelKind, q: &GradedPoset) -> Result<HDescription> {
    if q.rk() < 1 {
        return Err(Error::Invalid("poset of rank 0".into()));
    }
    let unit = |k: usize, i: usize| {
        let mut v = vec![0i64; k];
        v[i] = 1;
        v
    };
    match kind {
        ModelKind::Csiszar => {
            let covers = q.covers();
            let k = covers.len();
            let coords = covers
                .iter()
                .map(|&(a, b)| format!("x_{{{}<{}}}", q.label(a), q.label(b)))
                .collect();
            let inequalities = (0..k).map(|i| LinearRow { coeffs: unit(k, i), rhs: 0 }).collect();
            let mut equalities = Vec::new();
            let min_cov: Vec<i64> = covers.iter().map(|&(a, _)| (q.rank(a) == 0) as i64).collect();
            equalities.push(LinearRow { coeffs: min_cov, rhs: 1 });
            for e in 0..q.len() {
                let r = q.rank(e);
                if r == 0 || r == q.rk() {
                    continue;
                }
                let coeffs = covers
                    .iter()
                    .map(|&(a, b)| (b == e) as i64 - (a == e) as i64)
                    .collect();
                equalities.push(LinearRow { coeffs, rhs: 0 });
            }
            Ok(HDescription {
                kind,
                coords,
                equalities,
                inequalities,
                raw_subset_inequalities: 0,
            })
        }
        ModelKind::Ascending => {
            if let Some(l) = q.levels().iter().find(|l| l.len() > MAX_SUBSET_LEVEL) {
                return Err(Error::CapExceeded(format!(
                    "a level of {} elements needs 2^{} subset inequalities",
                    l.len(),
                    l.len()
                )));
            }
            let k = q.len();
            let coords = (0..k).map(|e| format!("x_{{{}}}", q.label(e))).collect();
            let equalities = q
                .levels()
                .iter()
                .map(|l| {
                    let mut v = vec![0i64; k];
                    for &e in l {
                        v[e] = 1;
                    }
                    LinearRow { coeffs: v, rhs: 1 }
                })
                .collect();
            let mut inequalities: Vec<LinearRow> = (0..k).map(|i| LinearRow { coeffs: unit(k, i), rhs: 0 }).collect();
            let mut raw = 0;
            for r in 0..q.rk() {
                let level = q.level(r);
                let next = q.level(r + 1).len();
                for mask in 1u64..(1u64 << level.len()) {
                    raw += 1;
                    let a: Vec<usize> = (0..level.len()).filter(|b| mask >> b & 1 == 1).map(|b| level[b]).collect();
                    let (up, _) = q.shadows(&a);
                    // Implied by the level equations when ∇A is the whole next level.
                    if up.len() == next {
                        continue;
                    }
                    let mut v = vec![0i64; k];
                    for &e in &a {
                        v[e] -= 1;
                    }
                    for &e in &up {
                        v[e] += 1;
                    }
                    inequalities.push(LinearRow { coeffs: v, rhs: 0 });
                }
            }
            Ok(HDescription {
                kind,
                coords,
                equalities,
                inequalities,
                raw_subset_inequalities: raw,
            })
        }
        _ => Err(Error::Invalid(format!("no H-description for the {kind} model"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HReport {
    pub columns_satisfy: bool,
    /// `None` when the coordinate count exceeds [`MAX_ZERO_ONE_COORDS`].
    pub zero_one_solutions_are_columns: Option<bool>,
    pub equality_dimension: usize,
    pub polytope_dimension: usize,
    /// `None` when the coordinate count exceeds [`MAX_VERTEX_COORDS`].
    pub vertices_are_columns: Option<bool>,
    pub partial: bool,
}

impl HReport {
    pub fn passed(&self) -> bool {
        self.columns_satisfy
            && self.zero_one_solutions_are_columns != Some(false)
            && self.equality_dimension == self.polytope_dimension
            && self.vertices_are_columns != Some(false)
    }
}

pub const MAX_ZERO_ONE_COORDS: usize = 25;
pub const MAX_VERTEX_COORDS: usize = 12;

fn satisfies(h: &HDescription, x: &[i64]) -> bool {
    let dot = |r: &LinearRow| r.coeffs.iter().zip(x).map(|(a, b)| a * b).sum::<i64>();
    h.equalities.iter().all(|r| dot(r) == r.rhs) && h.inequalities.iter().all(|r| dot(r) >= r.rhs)
}

/// Checks an H-description against the columns of the model matrix.
pub fn verify_h_description(m: &ModelMatrix, h: &HDescription) -> Result<HReport> {
    let k = h.coords.len();
    if k != m.spec.rows()
        || h.coords
            .iter()
            .zip(m.spec.row_labels())
            .any(|(c, r)| c.get(1..) != r.get(1..))
    {
        return Err(Error::Dimension("H-description coordinates do not match the model rows".into()));
    }
    let columns: Vec<Vec<i64>> = (0..m.spec.cols()).map(|j| m.spec.column(j)).collect();
    let columns_satisfy = columns.iter().all(|c| satisfies(h, c));

    let zero_one = if k <= MAX_ZERO_ONE_COORDS && columns.iter().flatten().all(|&x| x == 0 || x == 1) {
        Some(zero_one_scan(h, &columns))
    } else {
        None
    };

    let eq: Vec<Vec<i64>> = h.equalities.iter().map(|r| r.coeffs.clone()).collect();
    let equality_dimension = k - rank_i64(&eq);
    let pdim = polytope_dimension(m);

    let vertices = (k <= MAX_VERTEX_COORDS).then(|| vertex_check(h, &columns));
    Ok(HReport {
        columns_satisfy,
        zero_one_solutions_are_columns: zero_one,
        equality_dimension,
        polytope_dimension: pdim,
        vertices_are_columns: vertices,
        partial: zero_one.is_none() || vertices.is_none(),
    })
}

/// Whether the 0/1 points of `h` are exactly the given 0/1 columns. Rows
/// are compiled to bit masks of their +1 and −1 coefficients.
fn zero_one_scan(h: &HDescription, columns: &[Vec<i64>]) -> bool {
    let k = h.coords.len();
    let compile = |r: &LinearRow| -> Option<(u32, u32, i64)> {
        let mut pos = 0u32;
        let mut neg = 0u32;
        for (i, &c) in r.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => pos |= 1 << i,
                -1 => neg |= 1 << i,
                _ => return None,
            }
        }
        Some((pos, neg, r.rhs))
    };
    let eqs: Option<Vec<_>> = h.equalities.iter().map(compile).collect();
    let ineqs: Option<Vec<_>> = h.inequalities.iter().map(compile).collect();
    let (Some(eqs), Some(ineqs)) = (eqs, ineqs) else {
        // General coefficients: evaluate directly.
        return (0u64..1 << k).into_par_iter().all(|mask| {
            let x: Vec<i64> = (0..k).map(|i| (mask >> i & 1) as i64).collect();
            satisfies(h, &x) == columns.contains(&x)
        });
    };
    let value = |mask: u32, (pos, neg, _): &(u32, u32, i64)| (mask & pos).count_ones() as i64 - (mask & neg).count_ones() as i64;
    let col_masks: HashSet<u32> = columns
        .iter()
        .map(|c| c.iter().enumerate().fold(0u32, |m, (i, &x)| m | (x as u32) << i))
        .collect();
    let found: Vec<u32> = (0u32..1 << k)
        .into_par_iter()
        .filter(|&mask| {
            eqs.iter().all(|r| value(mask, r) == r.2) && ineqs.iter().all(|r| value(mask, r) >= r.2)
        })
        .collect();
    found.len() == col_masks.len() && found.iter().all(|m| col_masks.contains(m))
}

/// Enumerates vertices as the feasible points pinned down by the equalities
/// together with a choice of tight inequalities.
fn vertex_check(h: &HDescription, columns: &[Vec<i64>]) -> bool {
    let k = h.coords.len();
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    let eq_rows: Vec<Vec<BigRational>> = h.equalities.iter().map(|r| r.coeffs.iter().map(|&x| rat(x)).collect()).collect();
    let eq_rhs: Vec<BigRational> = h.equalities.iter().map(|r| rat(r.rhs)).collect();
    let eq_int: Vec<Vec<i64>> = h.equalities.iter().map(|r| r.coeffs.clone()).collect();
    let d = k - rank_i64(&eq_int);
    let ineq = &h.inequalities;
    let feasible = |x: &[BigRational]| {
        ineq.iter().all(|r| {
            let s: BigRational = r.coeffs.iter().zip(x).map(|(&a, b)| rat(a) * b).sum();
            s >= rat(r.rhs)
        })
    };
    let mut vertices: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let mut pick: Vec<usize> = (0..d).collect();
    if d > ineq.len() {
        return false;
    }
    loop {
        let mut rows = eq_rows.clone();
        let mut rhs = eq_rhs.clone();
        for &i in &pick {
            rows.push(ineq[i].coeffs.iter().map(|&x| rat(x)).collect());
            rhs.push(rat(ineq[i].rhs));
        }
        if let Some(x) = solve_unique(&rows, &rhs) {
            if feasible(&x) {
                vertices.insert(x);
            }
        }
        // Next combination.
        let mut i = d;
        loop {
            if i == 0 {
                let cols: BTreeSet<Vec<BigRational>> =
                    columns.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
                return vertices == cols;
            }
            i -= 1;
            if pick[i] < ineq.len() - d + i {
                pick[i] += 1;
                for j in i + 1..d {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Row-space certificate for `inner ⊆ outer`; columns are matched by label.
pub fn model_inclusion(inner: &ModelMatrix, outer: &ModelMatrix) -> Result<bool> {
    let a = inner.spec.col_labels();
    let b = outer.spec.col_labels();
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Err(Error::Dimension("models have different column labels".into()));
    }
    let perm: Vec<usize> = a
        .iter()
        .map(|l| outer.spec.col_index(l).expect("same labels"))
        .collect();
    let outer_rows: Vec<Vec<i64>> = outer
        .spec
        .matrix()
        .iter()
        .map(|r| perm.iter().map(|&j| r[j]).collect())
        .collect();
    let inner_m = inner.rational();
    let outer_m = RationalMatrix::from_i64(&outer_rows, a.len())?;
    rowspace_contains(&inner_m, &outer_m)
}

/// A distribution keyed by column label, in column order.
pub type Distribution = Vec<(String, BigRational)>;

fn normalize(labels: &[String], values: Vec<BigRational>) -> Result<Distribution> {
    let total: BigRational = values.iter().sum();
    if total.is_zero() {
        return Err(Error::Invalid("all-zero distribution".into()));
    }
    Ok(labels.iter().cloned().zip(values.into_iter().map(|v| v / &total)).collect())
}

/// Evaluates the model's monomials at `params` and normalizes to sum 1.
pub fn evaluate_distribution(m: &ModelMatrix, params: &HashMap<String, BigRational>) -> Result<Distribution> {
    normalize(m.spec.col_labels(), m.evaluate_raw(params)?)
}

/// Mallows distribution `q^{inv(π)} / Z` on all permutations of `[n]`.
pub fn mallows_specialize(n: usize, qval: &BigRational) -> Result<Distribution> {
    if !qval.is_positive() {
        return Err(Error::Invalid("Mallows parameter must be positive".into()));
    }
    let words = linear_extensions(&Poset::antichain(n))?;
    let labels: Vec<String> = words.iter().map(|w| format_word(w)).collect();
    let values = words
        .iter()
        .map(|w| {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
            let mut v = BigRational::one();
            for _ in 0..inv {
                v *= qval;
            }
            v
        })
        .collect();
    normalize(&labels, values)
}

/// Closed-form maximum likelihood estimate of the Csiszár model:
/// `p̂(a_0<…<a_r) = (r_{a_0}/N) ∏ b_{a_j<a_{j+1}} / r_{a_j}`, with `b` the
/// cover counts and `r_a` the number of observations leaving `a`.
pub fn csiszar_mle(q: &GradedPoset, counts: &[(String, u64)]) -> Result<Distribution> {
    let m = model_matrix(ModelKind::Csiszar, q)?;
    let stats = sufficient_stats(&m, counts)?;
    if stats.n == 0 {
        return Err(Error::Invalid("no observations".into()));
    }
    let covers = q.covers();
    let index: HashMap<(usize, usize), usize> = covers.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut out_flow = vec![0u64; q.len()];
    for (i, &(a, _)) in covers.iter().enumerate() {
        out_flow[a] += stats.values[i];
    }
    let n = BigRational::from_integer(BigInt::from(stats.n));
    let values = m
        .chains
        .iter()
        .map(|c| {
            let first = c.0[0];
            let mut p = BigRational::from_integer(BigInt::from(out_flow[first])) / &n;
            for w in c.0.windows(2) {
                let b = stats.values[index[&(w[0], w[1])]];
                if b == 0 {
                    return BigRational::zero();
                }
                p *= BigRational::new(BigInt::from(b), BigInt::from(out_flow[w[0]]));
            }
            p
        })
        .collect::<Vec<_>>();
    Ok(m.spec.col_labels().iter().cloned().zip(values).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::rat;
    use crate::poset::boolean_lattice;

    fn params(m: &ModelMatrix, f: impl Fn(&str) -> BigRational) -> HashMap<String, BigRational> {
        m.spec.row_labels().iter().map(|l| (l.clone(), f(l))).collect()
    }

    #[test]
    fn column_sums_and_shapes() {
        let q = boolean_lattice(3).unwrap();
        for kind in ModelKind::ALL {
            let m = model_matrix(kind, &q).unwrap();
            assert_eq!(m.spec.s(), m.expected_column_sum(), "{kind}");
            assert_eq!(m.spec.cols(), 6);
        }
    }

    #[test]
    fn inversion_identity_column() {
        let m = constraint_model(ModelKind::Inversion, &Poset::antichain(3)).unwrap();
        let j = m.spec.col_index("123").unwrap();
        let col = m.spec.column(j);
        assert_eq!(col, vec![1, 1, 1, 0, 0, 0]);
        assert_eq!(&m.spec.row_labels()[..3], &["u_{12}", "u_{13}", "u_{23}"]);
    }

    #[test]
    fn small_dimensions() {
        let q = boolean_lattice(3).unwrap();
        let dims: Vec<usize> = [ModelKind::Inversion, ModelKind::Ascending, ModelKind::Birkhoff, ModelKind::Csiszar]
            .iter()
            .map(|&k| polytope_dimension(&model_matrix(k, &q).unwrap()))
            .collect();
        assert_eq!(dims, vec![3, 4, 4, 5]);
        let m = constraint_model(ModelKind::Birkhoff, &Poset::chain(4)).unwrap();
        assert_eq!(m.spec.cols(), 1);
    }

    #[test]
    fn birkhoff_formula_cases() {
        let d = birkhoff_dimension(&Poset::constraint(3, &[(1, 2)]).unwrap()).unwrap();
        assert_eq!(d.z, vec![(1, 2), (3, 1)]);
        assert_eq!(d.c, vec![(1, 3), (2, 1), (2, 3), (3, 2), (3, 3)]);
        assert_eq!(d.dim, 2);
        for n in 1..=5 {
            let a = birkhoff_dimension(&Poset::antichain(n)).unwrap();
            assert_eq!(a.dim, (n - 1) * (n - 1));
            assert_eq!(a.c.len(), 2 * n - 1);
            let c = birkhoff_dimension(&Poset::chain(n)).unwrap();
            assert_eq!((c.dim, c.z.len(), c.c.len()), (0, n * n - n, n));
        }
        // Row and column maxima alone undercount the leading variables here.
        let d = birkhoff_dimension(&Poset::constraint(3, &[(3, 2)]).unwrap()).unwrap();
        assert_eq!((d.z.len(), d.c.len(), d.dim), (2, 5, 2));
    }

    #[test]
    fn birkhoff_formula_counterexample() {
        // 1<3 and 5<4<2: ten linear extensions, but seventeen permutation
        // matrices avoid Z, so the face x_Z = 0 is larger than the model.
        let p = Poset::constraint(5, &[(1, 3), (5, 4), (4, 2)]).unwrap();
        assert_eq!(polytope_dimension(&constraint_model(ModelKind::Birkhoff, &p).unwrap()), 6);
        assert!(matches!(birkhoff_dimension(&p), Err(Error::FormulaMismatch(_))));
    }

    #[test]
    fn stats() {
        let q = boolean_lattice(3).unwrap();
        let m = model_matrix(ModelKind::Csiszar, &q).unwrap();
        let s = sufficient_stats(&m, &[("123".into(), 2), ("321".into(), 1)]).unwrap();
        let get = |l: &str| s.values[s.labels.iter().position(|x| x == l).unwrap()];
        assert_eq!(get("d_{∅<1}"), 2);
        assert_eq!(get("d_{∅<3}"), 1);
        assert_eq!(get("d_{12<123}"), 2);
        assert_eq!(get("d_{23<123}"), 1);
        assert_eq!(s.values.iter().sum::<u64>(), 3 * 3);
        assert!(sufficient_stats(&m, &[("999".into(), 1)]).is_err());
    }

    #[test]
    fn h_descriptions_small() {
        let q = boolean_lattice(3).unwrap();
        let h = h_description(ModelKind::Csiszar, &q).unwrap();
        assert_eq!((h.inequalities.len(), h.equalities.len()), (12, 7));
        let r = verify_h_description(&model_matrix(ModelKind::Csiszar, &q).unwrap(), &h).unwrap();
        assert!(r.passed() && !r.partial, "{r:?}");
        assert_eq!(r.polytope_dimension, 5);

        let h = h_description(ModelKind::Ascending, &q).unwrap();
        assert_eq!(h.equalities.len(), 4);
        assert_eq!(h.raw_subset_inequalities, 1 + 7 + 7);
        let r = verify_h_description(&model_matrix(ModelKind::Ascending, &q).unwrap(), &h).unwrap();
        assert!(r.passed() && !r.partial, "{r:?}");
    }

    #[test]
    fn inclusions_on_boolean_3() {
        let q = boolean_lattice(3).unwrap();
        let m = |k| model_matrix(k, &q).unwrap();
        assert!(model_inclusion(&m(ModelKind::Birkhoff), &m(ModelKind::Ascending)).unwrap());
        assert!(model_inclusion(&m(ModelKind::Ascending), &m(ModelKind::Csiszar)).unwrap());
        assert!(model_inclusion(&m(ModelKind::Inversion), &m(ModelKind::Csiszar)).unwrap());
        assert!(!model_inclusion(&m(ModelKind::Csiszar), &m(ModelKind::Ascending)).unwrap());
    }

    #[test]
    fn mallows_matches_inversion_evaluation() {
        let d = mallows_specialize(3, &rat(1, 2)).unwrap();
        assert_eq!(d[0], ("123".to_string(), rat(8, 21)));
        let q = rat(2, 3);
        let m = constraint_model(ModelKind::Inversion, &Poset::antichain(4)).unwrap();
        let p = params(&m, |l| if l.starts_with('u') { rat(1, 1) } else { q.clone() });
        assert_eq!(evaluate_distribution(&m, &p).unwrap(), mallows_specialize(4, &q).unwrap());
    }

    #[test]
    fn mle_is_empirical_on_boolean_3() {
        let q = boolean_lattice(3).unwrap();
        let counts = vec![("123".to_string(), 3), ("213".to_string(), 1), ("321".to_string(), 4)];
        let p = csiszar_mle(&q, &counts).unwrap();
        let get = |l: &str| p.iter().find(|(x, _)| x == l).unwrap().1.clone();
        assert_eq!(get("123"), rat(3, 8));
        assert_eq!(get("321"), rat(1, 2));
        assert_eq!(get("132"), rat(0, 1));
        assert!(csiszar_mle(&q, &[]).is_err());
    }
}
