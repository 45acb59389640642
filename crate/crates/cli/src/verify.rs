//! The verification harness: fourteen criteria, each a list of exact checks
//! against printed or independently computed values.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankalg_core::models::{
    birkhoff_dimension, constraint_model, csiszar_dimension_formula, csiszar_mle, evaluate_distribution,
    model_inclusion, model_matrix, polytope_dimension, sufficient_stats, ModelKind, ModelMatrix,
};
use rankalg_core::plackett_luce::{
    bt_parametrization_check, incomparability_ideal, marginalize, pl3_report, pl_homogeneous_map, pl_sums_to_one,
    pl_vanishes,
};
use rankalg_core::poly::binomial::binomial_key_set;
use rankalg_core::poly::engine::degree_counts;
use rankalg_core::poly::parse::parse_polynomial;
use rankalg_core::poly::{Binomial, Caps, HilbertSeries, Polynomial, TermOrder};
use rankalg_core::poset::{boolean_lattice, linear_extensions, parse_word, Poset, Word};
use rankalg_core::random::{random_constraint, random_graded};
use rankalg_core::structural::{
    ascending_lift_basis, bt_circuit_binomials, bt_variable_names, csiszar_minor_basis, search_groebner_order,
};
use rankalg_core::toric::{
    fiber, minimal_quadric_count, same_ideal, squarefree_initial, squarefree_initial_degree, target_of,
    toric_groebner, toric_hilbert_series, toric_markov_basis, ToricSpec,
};
use rankalg_core::{Error, Result};

use crate::printed;
use crate::report::{Check, RunReport, Section, Source, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Tier {
    Fast,
    Full,
    Stretch,
}

#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    /// Lowest tier that runs it.
    pub tier: Tier,
    /// Wall-clock limit the criterion is expected to meet.
    pub limit: Duration,
}

const fn crit(id: u8, title: &'static str, tier: Tier, secs: u64) -> Criterion {
    Criterion {
        id,
        title,
        tier,
        limit: Duration::from_secs(secs),
    }
}

pub const CRITERIA: [Criterion; 14] = [
    crit(1, "three-item models", Tier::Fast, 1),
    crit(2, "four-item dimensions", Tier::Fast, 10),
    crit(3, "inversion model, four items", Tier::Fast, 600),
    crit(4, "ascending model, four items", Tier::Fast, 1800),
    crit(5, "Csiszár model, four items", Tier::Fast, 60),
    crit(6, "Csiszár structural counts, five and six items", Tier::Full, 300),
    crit(7, "six-item inversion fiber", Tier::Full, 600),
    crit(8, "chain plus free items", Tier::Full, 600),
    crit(9, "Birkhoff dimension formula", Tier::Fast, 60),
    crit(10, "model inclusions", Tier::Fast, 60),
    crit(11, "Plackett-Luce, three items", Tier::Fast, 60),
    crit(12, "Bradley-Terry and marginals", Tier::Fast, 60),
    crit(13, "Csiszár maximum likelihood", Tier::Fast, 60),
    crit(14, "five-item stretch computations", Tier::Stretch, 3600),
];

#[derive(Clone, Debug)]
pub struct Context {
    pub caps: Caps,
    pub parallel: bool,
    pub seed: u64,
    /// Wall-clock budget for each engine run of the stretch criterion.
    pub stretch_budget: Duration,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            caps: Caps::default(),
            parallel: true,
            seed: 0,
            stretch_budget: Duration::from_secs(600),
        }
    }
}

pub fn criterion(id: u8) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.id == id)
}

/// Runs one criterion. Errors become failed checks, except exhausted caps,
/// which are reported as skipped.
pub fn run_criterion(c: &Criterion, ctx: &Context) -> Section {
    let result = match c.id {
        1 => c1(ctx),
        2 => c2(),
        3 => c3(ctx),
        4 => c4(ctx),
        5 => c5(ctx),
        6 => c6(),
        7 => c7(),
        8 => c8(ctx),
        9 => c9(ctx),
        10 => c10(),
        11 => c11(ctx),
        12 => c12(ctx),
        13 => c13(ctx),
        14 => c14(ctx),
        _ => Err(Error::Invalid(format!("no criterion {}", c.id))),
    };
    let checks = match result {
        Ok(checks) => checks,
        Err(Error::CapExceeded(why)) => vec![Check::skipped("run", format!("cap exceeded: {why}"))],
        Err(e) => vec![Check::failed("run", e)],
    };
    Section {
        name: format!("{}. {}", c.id, c.title),
        checks,
    }
}

pub fn verify(tier: Tier, ctx: &Context, command: Vec<String>) -> RunReport {
    let sections = CRITERIA
        .iter()
        .filter(|c| c.tier <= tier)
        .map(|c| run_criterion(c, ctx))
        .collect();
    RunReport { command, sections }
}

/// Whether any section stopped at a cap.
pub fn capped(report: &RunReport) -> bool {
    report
        .sections
        .iter()
        .flat_map(|s| &s.checks)
        .any(|c| c.status == Status::Skipped && c.computed.starts_with("cap exceeded"))
}

fn counts(m: &BTreeMap<u32, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn ints<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_in(text: &str, names: &[String]) -> Result<Polynomial> {
    parse_polynomial(text, names)
}

fn parse_binomials(texts: &[&str], spec: &ToricSpec) -> Result<Vec<Binomial>> {
    let names = spec.var_names();
    let ord = spec.default_order();
    texts
        .iter()
        .map(|t| {
            let p = parse_in(t, &names)?;
            let (a, b) = p
                .as_binomial(&ord)
                .ok_or_else(|| Error::Format(format!("{t:?} is not a binomial")))?;
            Ok(Binomial::new(a, b))
        })
        .collect()
}

/// Compares a computed generating set with a printed one: identical sets
/// pass outright, otherwise both must generate the same ideal with the same
/// number of generators in each degree (minimal generators are unique only
/// up to such exchanges).
fn generators_match(
    name: &str,
    computed: &[Binomial],
    printed: &[Binomial],
    ord: &TermOrder,
    caps: &Caps,
) -> Result<Check> {
    let (dc, dp) = (degree_counts(computed), degree_counts(printed));
    if binomial_key_set(computed) == binomial_key_set(printed) {
        return Ok(Check::compare(
            name,
            format!("identical sets {}", counts(&dc)),
            format!("identical sets {}", counts(&dp)),
            Source::Printed,
        ));
    }
    let same = dc == dp && same_ideal(computed, printed, ord, caps)?;
    let shown = if same {
        format!("same ideal {}", counts(&dc))
    } else {
        format!("different ideals {}", counts(&dc))
    };
    Ok(Check::compare(name, shown, format!("same ideal {}", counts(&dp)), Source::Printed))
}

fn hilbert_checks(prefix: &str, h: &HilbertSeries, numerator: &[i64], k: usize, degree: Option<u64>) -> Vec<Check> {
    let mut out = vec![
        Check::compare(format!("{prefix} numerator"), ints(&h.numerator), ints(numerator), Source::Printed),
        Check::compare(format!("{prefix} Krull dimension"), h.k, k, Source::Printed),
    ];
    if let Some(d) = degree {
        out.push(Check::compare(format!("{prefix} degree"), h.degree(), d, Source::Printed));
    }
    out
}

fn markov(m: &ModelMatrix, ctx: &Context) -> Result<Vec<Binomial>> {
    toric_markov_basis(&m.spec, &ctx.caps, ctx.parallel)
}

fn hilbert(m: &ModelMatrix, ctx: &Context) -> Result<(Vec<Binomial>, HilbertSeries)> {
    let ord = m.spec.default_order();
    let gb = toric_groebner(&m.spec, &ord, &ctx.caps, ctx.parallel)?;
    let h = toric_hilbert_series(&gb, &ord, m.spec.cols());
    Ok((gb, h))
}

fn c1(ctx: &Context) -> Result<Vec<Check>> {
    let q = boolean_lattice(3)?;
    let mut out = Vec::new();
    let cases: [(ModelKind, &[&str], usize); 4] = [
        (ModelKind::Inversion, &printed::INV3, 3),
        (ModelKind::Ascending, &printed::ASC3, 4),
        (ModelKind::Birkhoff, &printed::ASC3, 4),
        (ModelKind::Csiszar, &[], 5),
    ];
    for (kind, gens, dim) in cases {
        let m = model_matrix(kind, &q)?;
        let mk = markov(&m, ctx)?;
        let expected = parse_binomials(gens, &m.spec)?;
        out.push(generators_match(&format!("{kind} Markov basis"), &mk, &expected, &m.spec.default_order(), &ctx.caps)?);
        out.push(Check::compare(format!("{kind} dimension"), polytope_dimension(&m), dim, Source::Printed));
    }
    Ok(out)
}

fn c2() -> Result<Vec<Check>> {
    let p = Poset::antichain(4);
    let mut out = Vec::new();
    for (kind, dim) in [
        (ModelKind::Birkhoff, 9),
        (ModelKind::Inversion, 6),
        (ModelKind::Ascending, 11),
        (ModelKind::Csiszar, 17),
    ] {
        let m = constraint_model(kind, &p)?;
        out.push(Check::compare(format!("{kind} dimension"), polytope_dimension(&m), dim, Source::Printed));
        out.push(Check::compare(format!("{kind} columns"), m.spec.cols(), 24, Source::Printed));
    }
    Ok(out)
}

fn c3(ctx: &Context) -> Result<Vec<Check>> {
    let m = model_matrix(ModelKind::Inversion, &boolean_lattice(4)?)?;
    let mk = markov(&m, ctx)?;
    let mut out = vec![Check::compare("Markov degrees", counts(&degree_counts(&mk)), "{2:81}", Source::Printed)];
    let (gb, h) = hilbert(&m, ctx)?;
    out.extend(hilbert_checks("Hilbert", &h, &printed::INV4_NUMERATOR, 7, Some(180)));
    out.push(Check::holds(
        "squarefree initial ideal",
        squarefree_initial(&gb, &m.spec.default_order()),
        format!("{} Gröbner elements", gb.len()),
    ));
    out.push(Check::compare("symmetric numerator", h.is_symmetric(), true, Source::Printed));
    Ok(out)
}

fn c4(ctx: &Context) -> Result<Vec<Check>> {
    let q = boolean_lattice(4)?;
    let m = model_matrix(ModelKind::Ascending, &q)?;
    let mk = markov(&m, ctx)?;
    let mut out = vec![Check::compare(
        "minimal generator degrees",
        counts(&degree_counts(&mk)),
        "{2:6, 3:64, 4:93}",
        Source::Printed,
    )];
    let (_, h) = hilbert(&m, ctx)?;
    out.extend(hilbert_checks("Hilbert", &h, &printed::ASC4_NUMERATOR, 12, Some(808)));
    let lifts = ascending_lift_basis(&q, 4)?;
    let same = same_ideal(&lifts, &mk, &m.spec.default_order(), &ctx.caps)?;
    out.push(Check::holds(
        "lift basis generates the toric ideal",
        same,
        format!("{} lifts", lifts.len()),
    ));
    Ok(out)
}

fn c5(ctx: &Context) -> Result<Vec<Check>> {
    let q = boolean_lattice(4)?;
    let m = model_matrix(ModelKind::Csiszar, &q)?;
    let mk = markov(&m, ctx)?;
    let expected = parse_binomials(&printed::CSI4, &m.spec)?;
    let mut out = vec![Check::compare(
        "Markov basis is the six minors",
        binomial_key_set(&mk) == binomial_key_set(&expected),
        true,
        Source::Printed,
    )];
    let dim = polytope_dimension(&m);
    let codim = m.spec.cols() - (dim + 1);
    out.push(Check::compare("dimension", dim, 17, Source::Printed));
    out.push(Check::compare("codimension", codim, 6, Source::Printed));
    out.push(Check::compare("complete intersection", mk.len() == codim, true, Source::Printed));
    let (gb, h) = hilbert(&m, ctx)?;
    let ord = m.spec.default_order();
    let via_complex = match squarefree_initial_degree(&gb, &ord, m.spec.cols())? {
        Some(d) => d,
        None => {
            let minors = csiszar_minor_basis(&q)?.binomials;
            let o = search_groebner_order(&minors, 20, ctx.seed)
                .ok_or_else(|| Error::Invalid("no squarefree Gröbner order found".into()))?;
            squarefree_initial_degree(&minors, &o, m.spec.cols())?
                .ok_or_else(|| Error::Invalid("initial ideal not squarefree".into()))?
        }
    };
    out.push(Check::compare(
        "degree via Hilbert numerator equals degree via initial complex",
        h.degree(),
        &via_complex,
        Source::Computed,
    ));
    out.push(Check::compare(
        "degree equals the Bézout number of six quadrics",
        h.degree(),
        64,
        Source::Trivial,
    ));
    out.push(Check::note(
        "printed degree",
        h.degree(),
        Some((printed::CSI4_DEGREE.to_string(), Source::Printed)),
    ));
    Ok(out)
}

fn c6() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, raw, distinct) in [(5, 300, 270), (6, 12780, 10980)] {
        let b = csiszar_minor_basis(&boolean_lattice(n)?)?;
        out.push(Check::compare(format!("raw minors, n={n}"), b.raw_count, raw, Source::Printed));
        out.push(Check::compare(format!("distinct minors, n={n}"), b.binomials.len(), distinct, Source::Printed));
    }
    let q = boolean_lattice(5)?;
    let m = model_matrix(ModelKind::Csiszar, &q)?;
    out.push(Check::compare("dimension by rank, n=5", polytope_dimension(&m), 49, Source::Printed));
    out.push(Check::compare("dimension by formula, n=5", csiszar_dimension_formula(&q), 49, Source::Printed));
    Ok(out)
}

fn c7() -> Result<Vec<Check>> {
    let m = model_matrix(ModelKind::Inversion, &boolean_lattice(6)?)?;
    let spec = &m.spec;
    let mut target = vec![0i64; spec.rows()];
    for i in 1..=6 {
        for j in i + 1..=6 {
            let v = printed::INV6_FIBER_PAIRS.iter().filter(|&&p| p == (i, j)).count() as i64;
            let row = |prefix: &str| {
                spec.row_index(&format!("{prefix}_{{{i}{j}}}"))
                    .ok_or_else(|| Error::UnknownLabel(format!("{prefix}_{{{i}{j}}}")))
            };
            target[row("v")?] = v;
            target[row("u")?] = 3 - v;
        }
    }
    let mut out = Vec::new();
    for (k, mono) in printed::INV6_CUBIC.iter().enumerate() {
        out.push(Check::compare(
            format!("printed monomial {} lies in the fiber", k + 1),
            target_of(spec, mono)? == target,
            true,
            Source::Printed,
        ));
    }
    let f = fiber(spec, &target, 3)?;
    let names = spec.col_labels();
    let shown: Vec<String> = f
        .iter()
        .map(|mo| {
            let mut ls: Vec<&str> = mo.vars_with_multiplicity().iter().map(|&j| names[j].as_str()).collect();
            ls.sort();
            ls.join("·")
        })
        .collect();
    let expected: Vec<String> = printed::INV6_CUBIC
        .iter()
        .map(|m| {
            let mut ls = m.to_vec();
            ls.sort();
            ls.join("·")
        })
        .collect();
    let mut sorted_shown = shown.clone();
    sorted_shown.sort();
    out.push(Check::compare("fiber", sorted_shown.join(" | "), expected.join(" | "), Source::Printed));
    Ok(out)
}

fn c8(ctx: &Context) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let m4 = constraint_model(ModelKind::Inversion, &Poset::chain_plus_antichain(3, 1))?;
    let mut states = m4.spec.col_labels().to_vec();
    states.sort();
    out.push(Check::compare("four-item states", states.join(","), printed::MIXED4_STATES.join(","), Source::Printed));
    out.push(Check::compare("four-item ideal is zero", markov(&m4, ctx)?.len(), 0, Source::Printed));

    let p = Poset::chain_plus_antichain(3, 2);
    let inv = constraint_model(ModelKind::Inversion, &p)?;
    out.push(Check::compare("states", inv.spec.cols(), 20, Source::Printed));
    out.push(Check::compare("dimension", polytope_dimension(&inv), 7, Source::Printed));
    let mk = markov(&inv, ctx)?;
    let expected = parse_binomials(&printed::MIXED5_INV, &inv.spec)?;
    out.push(Check::compare(
        "inversion Markov basis equals the printed quadrics",
        binomial_key_set(&mk) == binomial_key_set(&expected),
        true,
        Source::Printed,
    ));
    let (_, h) = hilbert(&inv, ctx)?;
    out.extend(hilbert_checks("inversion Hilbert", &h, &printed::MIXED5_INV_NUMERATOR, 8, Some(82)));

    let alt = constraint_model(ModelKind::AltInversion, &p)?;
    let mk = markov(&alt, ctx)?;
    let expected = parse_binomials(&printed::MIXED5_ALT, &alt.spec)?;
    out.push(generators_match(
        "alternative inversion Markov basis",
        &mk,
        &expected,
        &alt.spec.default_order(),
        &ctx.caps,
    )?);
    let (_, h) = hilbert(&alt, ctx)?;
    out.extend(hilbert_checks("alternative inversion Hilbert", &h, &printed::MIXED5_ALT_NUMERATOR, 11, None));
    Ok(out)
}

fn c9(ctx: &Context) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut anti = Vec::new();
    let mut chain = Vec::new();
    for n in 1..=6 {
        anti.push(birkhoff_dimension(&Poset::antichain(n))?.dim);
        chain.push(birkhoff_dimension(&Poset::chain(n))?.dim);
    }
    let expect: Vec<usize> = (1..=6usize).map(|n| (n - 1) * (n - 1)).collect();
    out.push(Check::compare("antichains n=1..6", ints(&anti), ints(&expect), Source::Printed));
    out.push(Check::compare("chains n=1..6", ints(&chain), "0,0,0,0,0,0", Source::Printed));
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x9);
    let mut agree = 0;
    let mut witness = String::new();
    for _ in 0..50 {
        let n = rng.gen_range(2..=6);
        let density = rng.gen_range(0.0..0.6);
        let p = random_constraint(&mut rng, n, density);
        let oracle = polytope_dimension(&constraint_model(ModelKind::Birkhoff, &p)?);
        let found = match birkhoff_dimension(&p) {
            Ok(d) if d.dim == oracle => {
                agree += 1;
                continue;
            }
            Ok(d) => format!("formula {}", d.dim),
            Err(e) => e.to_string(),
        };
        if witness.is_empty() {
            let rels: Vec<String> = p.covers().iter().map(|&(a, b)| format!("{}<{}", a + 1, b + 1)).collect();
            witness = format!("; first disagreement on [{n}] with {}: {found}", rels.join(", "));
        }
    }
    out.push(Check::holds(
        "formula equals rank on 50 random posets",
        agree == 50,
        format!("{agree}/50 agree{witness}"),
    ));
    Ok(out)
}

fn point_in(dist: &[(String, BigRational)], spec: &ToricSpec) -> Result<Vec<BigRational>> {
    let by: HashMap<&str, &BigRational> = dist.iter().map(|(l, v)| (l.as_str(), v)).collect();
    spec.col_labels()
        .iter()
        .map(|l| by.get(l.as_str()).map(|v| (*v).clone()).ok_or_else(|| Error::UnknownLabel(l.clone())))
        .collect()
}

fn c10() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in [3, 4] {
        let q = boolean_lattice(n)?;
        let get = |k| model_matrix(k, &q);
        let (birk, asc, csi, inv) = (
            get(ModelKind::Birkhoff)?,
            get(ModelKind::Ascending)?,
            get(ModelKind::Csiszar)?,
            get(ModelKind::Inversion)?,
        );
        for (a, b) in [(&birk, &asc), (&asc, &csi), (&inv, &csi)] {
            out.push(Check::compare(
                format!("{} ⊆ {}, n={n}", a.kind, b.kind),
                model_inclusion(a, b)?,
                true,
                Source::Printed,
            ));
        }
    }
    let p = Poset::antichain(4);
    let birk = constraint_model(ModelKind::Birkhoff, &p)?;
    let inv = constraint_model(ModelKind::Inversion, &p)?;
    let asc = constraint_model(ModelKind::Ascending, &p)?;
    let mut params = HashMap::new();
    for i in 1..=4 {
        for j in 1..=4 {
            let v = if i == j { 0 } else { 1 };
            params.insert(format!("a_{{{i}{j}}}"), BigRational::from_integer(BigInt::from(v)));
        }
    }
    let dist = evaluate_distribution(&birk, &params)?;
    let quadric = parse_in(printed::INV4_QUADRIC, &inv.spec.var_names())?;
    let value = quadric.eval(&point_in(&dist, &inv.spec)?);
    out.push(Check::compare("inversion quadric at the derangement point", value, "-1/81", Source::Printed));

    let mut params = HashMap::new();
    let set = |m: &mut HashMap<String, BigRational>, k: &str, v: i64| {
        m.insert(k.to_string(), BigRational::from_integer(BigInt::from(v)));
    };
    for k in ["v_{12}", "v_{13}", "v_{14}"] {
        set(&mut params, k, 0);
    }
    for k in ["u_{12}", "u_{13}", "u_{23}", "u_{24}", "v_{23}", "v_{24}", "v_{34}"] {
        set(&mut params, k, 1);
    }
    set(&mut params, "u_{34}", 2);
    params.insert("u_{14}".into(), BigRational::new(BigInt::from(1), BigInt::from(9)));
    let dist = evaluate_distribution(&inv, &params)?;
    let cubic = parse_in(printed::ASC4_CUBIC, &asc.spec.var_names())?;
    let value = cubic.eval(&point_in(&dist, &asc.spec)?);
    out.push(Check::holds(
        "ascending cubic is nonzero at the inversion witness",
        !value.is_zero(),
        &value,
    ));
    Ok(out)
}

/// Re-expresses a toric binomial in the variables of the Plackett-Luce map.
fn in_pl_vars(b: &Binomial, spec: &ToricSpec, pl_names: &[String]) -> Result<Polynomial> {
    parse_in(&b.render(&spec.var_names()), pl_names)
}

fn c11(ctx: &Context) -> Result<Vec<Check>> {
    let r = pl3_report(&ctx.caps)?;
    let mut out = vec![
        Check::compare(
            "printed generators vanish",
            r.generators_vanish.iter().filter(|&&b| b).count(),
            4,
            Source::Printed,
        ),
        Check::compare(
            "printed points lie on the variety",
            r.singular_points_on_surface.iter().filter(|&&b| b).count(),
            3,
            Source::Printed,
        ),
        Check::holds("lex initial ideal is squarefree", r.initial_squarefree, format!("{} elements", r.groebner_basis.len())),
        Check::holds("initial ideal has the printed components", r.initial_matches_primes, r.initial_matches_primes),
        Check::compare("Hilbert series", r.hilbert.render(), "(1 + 3t + 3t^2)/(1-t)^3", Source::Printed),
        Check::compare("degree", r.hilbert.degree(), 7, Source::Printed),
    ];
    let sums: Vec<bool> = (2..=4).map(pl_sums_to_one).collect::<Result<_>>()?;
    out.push(Check::holds("probabilities sum to one identically, n=2..4", sums.iter().all(|&b| b), ints(&sums)));
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xb);
    let p3 = Poset::antichain(3);
    let mut ok = 0;
    for _ in 0..100 {
        let theta = rankalg_core::plackett_luce::random_theta(&mut rng, 3);
        let pr = rankalg_core::plackett_luce::pl_probability(&p3, &theta)?;
        if pr.values.iter().fold(BigRational::zero(), |a, b| a + b).is_one() {
            ok += 1;
        }
    }
    out.push(Check::compare("probabilities sum to one at 100 random points", ok, 100, Source::Trivial));
    for n in [3, 4] {
        let m = model_matrix(ModelKind::Ascending, &boolean_lattice(n)?)?;
        let mk = markov(&m, ctx)?;
        let map = pl_homogeneous_map(&Poset::antichain(n))?;
        let names = map.var_names();
        let mut vanish = 0;
        for b in &mk {
            if pl_vanishes(&in_pl_vars(b, &m.spec, &names)?, &map)? {
                vanish += 1;
            }
        }
        out.push(Check::compare(
            format!("ascending ideal vanishes on the model, n={n}"),
            format!("{vanish}/{}", mk.len()),
            format!("{}/{}", mk.len(), mk.len()),
            Source::Printed,
        ));
    }
    Ok(out)
}

fn c12(ctx: &Context) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    // Powers of two make every subset sum distinct, so matching masses
    // means matching the printed sets of words.
    let words = linear_extensions(&Poset::antichain(3))?;
    let weight = |w: &Word| BigRational::from_integer(BigInt::one() << words.iter().position(|x| x == w).unwrap());
    let dist: Vec<(Word, BigRational)> = words.iter().map(|w| (w.clone(), weight(w))).collect();
    let marginals = marginalize(&dist, &Poset::antichain(3), 2)?;
    let sum_of = |ws: &[&str]| -> Result<BigRational> {
        ws.iter().try_fold(BigRational::zero(), |a, w| Ok(a + weight(&parse_word(w)?)))
    };
    let mut matched = 0;
    for (i, j, before, after) in printed::PAIRWISE3 {
        let m = marginals
            .iter()
            .find(|m| m.subset == vec![i, j])
            .ok_or_else(|| Error::Invalid(format!("no marginal for {{{i},{j}}}")))?;
        let mass = |w: Vec<usize>| m.entries.iter().find(|e| e.0 == w).map(|e| e.1.clone());
        if mass(vec![i, j]) == Some(sum_of(&before)?) && mass(vec![j, i]) == Some(sum_of(&after)?) {
            matched += 1;
        }
    }
    out.push(Check::compare("pairwise marginal forms", matched, 3, Source::Printed));

    let p3 = Poset::antichain(3);
    let names = bt_variable_names(&p3);
    let circuits = bt_circuit_binomials(&p3, 3)?;
    let printed_circuit = parse_in(printed::BT3_CIRCUIT, &names)?;
    let ord = TermOrder::grevlex(names.len());
    let (a, b) = printed_circuit
        .as_binomial(&ord)
        .ok_or_else(|| Error::Format("printed circuit is not a binomial".into()))?;
    out.push(Check::compare(
        "circuit binomial",
        binomial_key_set(&circuits) == binomial_key_set(&[Binomial::new(a, b)]),
        true,
        Source::Printed,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xc);
    for n in 3..=5 {
        let r = bt_parametrization_check(&Poset::antichain(n), 5, &mut rng)?;
        out.push(Check::holds(
            format!("circuits vanish, q_ij + q_ji = 1, marginals agree, n={n}"),
            r.passed(),
            r.witness.unwrap_or_else(|| format!("{} circuits", r.circuits)),
        ));
    }

    let mut agree = 0;
    let mut witness = String::new();
    for _ in 0..25 {
        let n = rng.gen_range(2..=6);
        let density = rng.gen_range(0.0..0.6);
        let p = random_constraint(&mut rng, n, density);
        let dual = incomparability_ideal(&p)?.alexander_dual()?.gens().len();
        let exts = linear_extensions(&p)?.len();
        if dual == exts {
            agree += 1;
        } else {
            witness = format!("{dual} dual generators vs {exts} extensions on {:?}", p.covers());
        }
    }
    out.push(Check::holds(
        "Alexander dual generators equal linear extensions on 25 random posets",
        agree == 25,
        if witness.is_empty() { format!("{agree}/25") } else { witness },
    ));
    Ok(out)
}

fn c13(ctx: &Context) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xd);
    let mut posets = vec![boolean_lattice(3)?, boolean_lattice(4)?];
    for _ in 0..5 {
        let levels = rng.gen_range(2..=4);
        let width = rng.gen_range(2..=3);
        posets.push(random_graded(&mut rng, levels, width));
    }
    let mut models = Vec::new();
    for q in &posets {
        models.push((model_matrix(ModelKind::Csiszar, q)?, csiszar_minor_basis(q)?.binomials));
    }
    let (mut stats_ok, mut minors_ok, mut empirical_ok, mut empirical_total) = (0, 0, 0, 0);
    let mut witness = String::new();
    for k in 0..100 {
        let idx = k % posets.len();
        let (q, (m, minors)) = (&posets[idx], &models[idx]);
        let labels = m.spec.col_labels();
        let mut data: Vec<(String, u64)> = labels.iter().map(|l| (l.clone(), rng.gen_range(0..=5))).collect();
        if data.iter().all(|d| d.1 == 0) {
            data[0].1 = 1;
        }
        let phat = csiszar_mle(q, &data)?;
        let values: Vec<BigRational> = phat.iter().map(|(_, v)| v.clone()).collect();
        let observed = sufficient_stats(m, &data)?;
        let n = BigRational::from_integer(BigInt::from(observed.n));
        let fitted: Vec<BigRational> = m
            .spec
            .matrix()
            .iter()
            .map(|row| row.iter().zip(&values).map(|(&a, v)| v * BigRational::from_integer(BigInt::from(a))).sum())
            .collect();
        if fitted
            .iter()
            .zip(&observed.values)
            .all(|(f, &o)| *f == BigRational::from_integer(BigInt::from(o)) / &n)
        {
            stats_ok += 1;
        } else {
            witness = format!("sufficient statistics differ on dataset {k}");
        }
        if minors.iter().all(|b| b.to_polynomial().eval(&values).is_zero()) {
            minors_ok += 1;
        } else {
            witness = format!("a minor is nonzero at the estimate on dataset {k}");
        }
        if idx == 0 {
            empirical_total += 1;
            if data.iter().zip(&values).all(|((_, c), v)| *v == BigRational::from_integer(BigInt::from(*c)) / &n) {
                empirical_ok += 1;
            }
        }
    }
    let w = |s: &str| if witness.is_empty() { s.to_string() } else { witness.clone() };
    Ok(vec![
        Check::holds("A·p̂ = A·u/N on 100 datasets", stats_ok == 100, w(&format!("{stats_ok}/100"))),
        Check::holds("minors vanish at p̂ on 100 datasets", minors_ok == 100, w(&format!("{minors_ok}/100"))),
        Check::compare(
            "three-item estimate is empirical",
            format!("{empirical_ok}/{empirical_total}"),
            format!("{empirical_total}/{empirical_total}"),
            Source::Trivial,
        ),
    ])
}

fn c14(ctx: &Context) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let q = boolean_lattice(5)?;
    let inv = model_matrix(ModelKind::Inversion, &q)?;
    out.push(Check::compare(
        "inversion quadrics, from degree-two fibers",
        minimal_quadric_count(&inv.spec)?,
        printed::INV5_QUADRICS,
        Source::Printed,
    ));
    let caps = Caps {
        deadline: Some(Instant::now() + ctx.stretch_budget),
        ..ctx.caps.clone()
    };
    match toric_markov_basis(&inv.spec, &caps, ctx.parallel) {
        Ok(mk) => out.push(Check::compare(
            "inversion Markov basis degrees",
            counts(&degree_counts(&mk)),
            format!("{{2:{}}}", printed::INV5_QUADRICS),
            Source::Printed,
        )),
        Err(Error::CapExceeded(why)) => out.push(Check::skipped("inversion Markov basis degrees", format!("cap exceeded: {why}"))),
        Err(e) => return Err(e),
    }

    let minors = csiszar_minor_basis(&q)?.binomials;
    match search_groebner_order(&minors, 20, ctx.seed) {
        Some(ord) => {
            let h = toric_hilbert_series(&minors, &ord, minors[0].nvars());
            out.extend(hilbert_checks(
                "Csiszár Hilbert",
                &h,
                &printed::CSI5_NUMERATOR,
                50,
                Some(printed::CSI5_DEGREE),
            ));
        }
        None => out.push(Check::skipped("Csiszár Hilbert", "no Gröbner order found among the minors")),
    }
    out.push(Check::skipped(
        "Plackett-Luce, four items",
        "implicitization of the four-item model is not implemented",
    ));
    Ok(out)
}
