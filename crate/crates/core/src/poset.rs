//! Finite posets, graded posets, distributive lattices of order ideals,
//! maximal chains and linear extensions.
//!
//! Elements are addressed by index. Every constructor fixes a deterministic
//! element order, and every enumeration (chains, extensions, shadows) is
//! returned in that order, so all downstream matrices inherit stable column
//! and row orders.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Deserialize;

use crate::error::{Error, Result};

/// A permutation word `w_1 … w_n`: `w[i]` is the (1-based) item ranked in
/// position `i + 1`.
pub type Word = Vec<usize>;

/// Formats a word as in `1243`; items above 9 are comma-separated.
pub fn format_word(word: &[usize]) -> String {
    if word.iter().all(|&x| x < 10) {
        word.iter().map(|x| x.to_string()).collect()
    } else {
        word.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses `1243` or `1,2,4,3`.
pub fn parse_word(text: &str) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Format("empty word".into()));
    }
    let items: Result<Vec<usize>> = if text.contains(',') {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Format(format!("bad item {s:?} in word {text:?}")))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Format(format!("bad item {c:?} in word {text:?}")))
            })
            .collect()
    };
    let items = items?;
    if items.contains(&0) {
        return Err(Error::Format(format!("items are 1-based in word {text:?}")));
    }
    Ok(items)
}

/// Ordering used for element labels: numeric labels by value, before any
/// non-numeric label, which are compared as strings.
pub fn natural_label_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `less[a][b]` iff `a < b` strictly.
    less: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds a poset from labels and (not necessarily reduced) strict
    /// relations `a < b` given by index. The transitive closure is taken.
    pub fn new(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Format(format!("duplicate label {l:?}")));
            }
        }
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::Format(format!("relation ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::NotPartialOrder(format!(
                    "reflexive strict relation on {:?}",
                    labels[a]
                )));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            if less[i][i] {
                return Err(Error::NotPartialOrder(format!(
                    "cycle through {:?}",
                    labels[i]
                )));
            }
        }
        Ok(Self::from_closed_relation(labels, less))
    }

    /// `less` must already be a strict partial order.
    fn from_closed_relation(labels: Vec<String>, less: Vec<Vec<bool>>) -> Self {
        let n = labels.len();
        let mut covers = Vec::new();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                    covers.push((a, b));
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
        Poset {
            labels,
            less,
            covers,
            up,
            down,
        }
    }

    /// Constraint poset on `[n]` (labels `"1"`…`"n"`) with 1-based relations
    /// `i < j`.
    pub fn constraint(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let mut rel = Vec::with_capacity(relations.len());
        for &(i, j) in relations {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Format(format!("relation [{i},{j}] outside [1,{n}]")));
            }
            rel.push((i - 1, j - 1));
        }
        Self::new(labels, &rel)
    }

    pub fn antichain(n: usize) -> Self {
        Self::constraint(n, &[]).expect("antichain is a poset")
    }

    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::constraint(n, &rel).expect("chain is a poset")
    }

    /// The chain `1 < 2 < … < c` together with `k` further incomparable items.
    pub fn chain_plus_antichain(c: usize, k: usize) -> Self {
        let rel: Vec<_> = (1..c).map(|i| (i, i + 1)).collect();
        Self::constraint(c + k, &rel).expect("chain plus antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements covering `a`.
    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    /// Elements covered by `a`.
    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(&b)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.down[e].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.up[e].is_empty()).collect()
    }

    /// All comparable pairs `(a, b)` with `a < b`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.less[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Induced subposet on `elements` (kept in the given order).
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        let less = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| self.less[a][b]).collect())
            .collect();
        Self::from_closed_relation(labels, less)
    }

    /// Every maximal chain, lexicographic in element indices.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for m in self.minimal_elements() {
            stack.push(m);
            self.extend_chains(&mut stack, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *stack.last().expect("non-empty");
        if self.up[top].is_empty() {
            out.push(stack.clone());
            return;
        }
        for &b in &self.up[top] {
            stack.push(b);
            self.extend_chains(stack, out);
            stack.pop();
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PosetFile {
    Labeled {
        elements: Vec<serde_json::Value>,
        #[serde(default)]
        relations: Vec<(serde_json::Value, serde_json::Value)>,
    },
    Constraint {
        n: usize,
        #[serde(default)]
        relations: Vec<(usize, usize)>,
    },
}

fn json_label(v: &serde_json::Value) -> Result<String> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Format(format!("element label must be string or number, got {other}"))),
    }
}

/// Upper bound on elements accepted from a poset file.
pub const MAX_POSET_FILE_ELEMENTS: usize = 4096;

/// Parses the poset JSON format: either
/// `{"elements":[...],"relations":[[a,b],...]}` or the constraint shorthand
/// `{"n":N,"relations":[[i,j],...]}` meaning `i < j` on `[N]`.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let file: PosetFile =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("poset json: {e}")))?;
    match file {
        PosetFile::Constraint { n, relations } => {
            if n > MAX_POSET_FILE_ELEMENTS {
                return Err(Error::Format(format!("n = {n} is too large")));
            }
            Poset::constraint(n, &relations)
        }
        PosetFile::Labeled {
            elements,
            relations,
        } => {
            if elements.len() > MAX_POSET_FILE_ELEMENTS {
                return Err(Error::Format("too many elements".into()));
            }
            let mut labels = elements.iter().map(json_label).collect::<Result<Vec<_>>>()?;
            let distinct: HashSet<&String> = labels.iter().collect();
            if distinct.len() != labels.len() {
                return Err(Error::Format("duplicate labels".into()));
            }
            labels.sort_by(|a, b| natural_label_cmp(a, b));
            let index: HashMap<&str, usize> = labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.as_str(), i))
                .collect();
            let mut rel = Vec::with_capacity(relations.len());
            for (a, b) in &relations {
                let (a, b) = (json_label(a)?, json_label(b)?);
                let ia = *index
                    .get(a.as_str())
                    .ok_or_else(|| Error::UnknownLabel(a.clone()))?;
                let ib = *index
                    .get(b.as_str())
                    .ok_or_else(|| Error::UnknownLabel(b.clone()))?;
                rel.push((ia, ib));
            }
            let labels = labels.into_iter().collect();
            Poset::new(labels, &rel)
        }
    }
}

/// Item sets of the elements of `O(P)`, kept alongside the lattice so chains
/// translate back to permutation words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    pub constraint: Poset,
    /// Bit `i` set iff item `i + 1` is in the ideal.
    pub masks: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoset {
    poset: Poset,
    rank: Vec<usize>,
    rk: usize,
    levels: Vec<Vec<usize>>,
    lattice: Option<IdealLattice>,
}

/// A maximal chain `a_0 < a_1 < … < a_n`, by element index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalChain(pub Vec<usize>);

/// Computes the rank function, failing if maximal chains differ in length.
pub fn grade(p: &Poset) -> Result<GradedPoset> {
    let n = p.len();
    if n == 0 {
        return Err(Error::NotGraded("empty poset".into()));
    }
    // Longest chain from a minimal element, in a topological order.
    let mut order: Vec<usize> = (0..n).collect();
    let below: Vec<usize> = (0..n).map(|e| (0..n).filter(|&x| p.less(x, e)).count()).collect();
    order.sort_by_key(|&e| below[e]);
    let mut rank = vec![0usize; n];
    for &e in &order {
        rank[e] = p
            .lower_covers(e)
            .iter()
            .map(|&d| rank[d] + 1)
            .max()
            .unwrap_or(0);
    }
    for &(a, b) in p.covers() {
        if rank[b] != rank[a] + 1 {
            return Err(Error::NotGraded(format!(
                "cover {:?} < {:?} skips a rank",
                p.label(a),
                p.label(b)
            )));
        }
    }
    let maxima = p.maximal_elements();
    let rk = rank[maxima[0]];
    if let Some(&m) = maxima.iter().find(|&&m| rank[m] != rk) {
        return Err(Error::NotGraded(format!(
            "maximal elements {:?} and {:?} have ranks {} and {}",
            p.label(maxima[0]),
            p.label(m),
            rk,
            rank[m]
        )));
    }
    let mut levels = vec![Vec::new(); rk + 1];
    for e in 0..n {
        levels[rank[e]].push(e);
    }
    Ok(GradedPoset {
        poset: p.clone(),
        rank,
        rk,
        levels,
        lattice: None,
    })
}

fn mask_items(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn ideal_label(mask: u64, n: usize) -> String {
    if mask == 0 {
        "∅".to_string()
    } else if n < 10 {
        format_word(&mask_items(mask))
    } else {
        mask_items(mask)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Largest constraint poset accepted by [`order_ideal_lattice`].
pub const MAX_LATTICE_ITEMS: usize = 63;

/// The distributive lattice `O(P)` of order ideals of a constraint poset on
/// `[n]`, ordered by inclusion and graded by cardinality.
///
/// Elements are sorted by cardinality, then lexicographically by their
/// sorted item lists, so maximal chains come out in lexicographic order of
/// their permutation words.
pub fn order_ideal_lattice(constraint: &Poset) -> Result<GradedPoset> {
    let n = constraint.len();
    if n > MAX_LATTICE_ITEMS {
        return Err(Error::Invalid(format!("constraint poset on {n} > {MAX_LATTICE_ITEMS} items")));
    }
    for (i, l) in constraint.labels().iter().enumerate() {
        if *l != (i + 1).to_string() {
            return Err(Error::Invalid(format!(
                "constraint poset elements must be 1..n in order, found {l:?} at position {}",
                i + 1
            )));
        }
    }
    let pred: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| constraint.less(j, i))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let mut seen = HashSet::new();
    let mut stack = vec![0u64];
    seen.insert(0u64);
    while let Some(m) = stack.pop() {
        for i in 0..n {
            if m >> i & 1 == 0 && pred[i] & !m == 0 {
                let next = m | 1 << i;
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    let mut masks: Vec<u64> = seen.into_iter().collect();
    masks.sort_by(|&a, &b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| mask_items(a).cmp(&mask_items(b)))
    });
    let labels = masks.iter().map(|&m| ideal_label(m, n)).collect();
    let less = masks
        .iter()
        .map(|&a| masks.iter().map(|&b| a != b && a & b == a).collect())
        .collect();
    let poset = Poset::from_closed_relation(labels, less);
    let mut graded = grade(&poset)?;
    graded.lattice = Some(IdealLattice {
        constraint: constraint.clone(),
        masks,
    });
    Ok(graded)
}

/// The Boolean lattice `2^[n]`.
pub fn boolean_lattice(n: usize) -> Result<GradedPoset> {
    if n == 0 {
        return Err(Error::Invalid("boolean lattice needs n >= 1".into()));
    }
    order_ideal_lattice(&Poset::antichain(n))
}

/// Linear extensions of a constraint poset, as permutation words in
/// lexicographic order.
pub fn linear_extensions(constraint: &Poset) -> Result<Vec<Word>> {
    let lattice = order_ideal_lattice(constraint)?;
    Ok(lattice
        .maximal_chains()
        .iter()
        .map(|c| lattice.chain_word(c).expect("ideal lattice chain"))
        .collect())
}

impl GradedPoset {
    /// Grades the poset; `None` for the lattice metadata.
    pub fn new(p: &Poset) -> Result<Self> {
        grade(p)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    /// Rank of the poset, the common length of all maximal chains.
    pub fn rk(&self) -> usize {
        self.rk
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &[usize] {
        &self.levels[i]
    }

    pub fn label(&self, e: usize) -> &str {
        self.poset.label(e)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.poset.covers()
    }

    pub fn lattice(&self) -> Option<&IdealLattice> {
        self.lattice.as_ref()
    }

    /// Number of items `n` when this is an order-ideal lattice.
    pub fn items(&self) -> Option<usize> {
        self.lattice.as_ref().map(|l| l.constraint.len())
    }

    pub fn maximal_chains(&self) -> Vec<MaximalChain> {
        self.poset
            .maximal_chains()
            .into_iter()
            .map(MaximalChain)
            .collect()
    }

    /// The permutation word of a chain in an order-ideal lattice: the item
    /// added at step `i` sits at position `i`.
    pub fn chain_word(&self, chain: &MaximalChain) -> Option<Word> {
        let lat = self.lattice.as_ref()?;
        Some(
            chain
                .0
                .windows(2)
                .map(|w| {
                    let diff = lat.masks[w[1]] & !lat.masks[w[0]];
                    diff.trailing_zeros() as usize + 1
                })
                .collect(),
        )
    }

    /// Column label: the word for lattices, else labels joined by `<`.
    pub fn chain_label(&self, chain: &MaximalChain) -> String {
        match self.chain_word(chain) {
            Some(w) => format_word(&w),
            None => chain
                .0
                .iter()
                .map(|&e| self.label(e))
                .collect::<Vec<_>>()
                .join("<"),
        }
    }

    /// `(∇A, ΔA)`: elements covering some element of `A`, and elements
    /// covered by some element of `A`.
    pub fn shadows(&self, set: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut up = BTreeSet::new();
        let mut down = BTreeSet::new();
        for &a in set {
            up.extend(self.poset.upper_covers(a).iter().copied());
            down.extend(self.poset.lower_covers(a).iter().copied());
        }
        (up.into_iter().collect(), down.into_iter().collect())
    }

    /// The induced graded subposets `Q≤e` and `Q≥e`, each with the map from
    /// its indices back to indices of `self`.
    pub fn interval_subposets(&self, e: usize) -> (SubPoset, SubPoset) {
        let below: Vec<usize> = (0..self.len()).filter(|&x| self.poset.leq(x, e)).collect();
        let above: Vec<usize> = (0..self.len()).filter(|&x| self.poset.leq(e, x)).collect();
        (self.sub(below), self.sub(above))
    }

    fn sub(&self, elements: Vec<usize>) -> SubPoset {
        let p = self.poset.induced(&elements);
        let graded = grade(&p).expect("intervals of a graded poset are graded");
        SubPoset {
            graded,
            to_parent: elements,
        }
    }

    /// Checks that every pair of elements has a unique join and meet.
    pub fn is_lattice(&self) -> bool {
        let p = &self.poset;
        let n = p.len();
        let unique_bound = |a: usize, b: usize, upper: bool| -> bool {
            let bounds: Vec<usize> = (0..n)
                .filter(|&x| {
                    if upper {
                        p.leq(a, x) && p.leq(b, x)
                    } else {
                        p.leq(x, a) && p.leq(x, b)
                    }
                })
                .collect();
            let least: Vec<usize> = bounds
                .iter()
                .copied()
                .filter(|&x| {
                    bounds.iter().all(|&y| if upper { p.leq(x, y) } else { p.leq(y, x) })
                })
                .collect();
            least.len() == 1
        };
        (0..n).all(|a| (a..n).all(|b| unique_bound(a, b, true) && unique_bound(a, b, false)))
    }
}

#[derive(Clone, Debug)]
pub struct SubPoset {
    pub graded: GradedPoset,
    pub to_parent: Vec<usize>,
}

impl SubPoset {
    /// Maximal chains of the subposet, expressed in parent indices.
    pub fn parent_chains(&self) -> Vec<Vec<usize>> {
        self.graded
            .maximal_chains()
            .into_iter()
            .map(|c| c.0.iter().map(|&e| self.to_parent[e]).collect())
            .collect()
    }
}

/// Builds a graded poset from consecutive levels and the covers between
/// adjacent levels, given as `(lower_index, upper_index)` into the flattened
/// element list.
pub fn graded_from_levels(level_sizes: &[usize], covers: &[(usize, usize)]) -> Result<GradedPoset> {
    let total: usize = level_sizes.iter().sum();
    let mut labels = Vec::with_capacity(total);
    for (r, &s) in level_sizes.iter().enumerate() {
        for i in 0..s {
            labels.push(format!("r{r}e{i}"));
        }
    }
    let p = Poset::new(labels, covers)?;
    grade(&p)
}
