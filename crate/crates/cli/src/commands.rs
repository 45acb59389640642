//! Argument grammar and dispatch for the `rankalg` binary.

use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use rankalg_core::linalg::RationalMatrix;
use rankalg_core::models::{
    csiszar_mle, evaluate_distribution, h_description, mallows_specialize, model_inclusion, model_matrix,
    polytope_dimension, verify_h_description, Distribution, LinearRow, ModelKind, ModelMatrix,
};
use rankalg_core::plackett_luce::{bt_parametrization_check, marginalize, pl_homogeneous_map, pl_probability, pl_vanishes};
use rankalg_core::poly::engine::degree_counts;
use rankalg_core::poly::parse::parse_polynomial;
use rankalg_core::poly::{Binomial, Caps, TermOrder};
use rankalg_core::poset::{format_word, GradedPoset, Word};
use rankalg_core::toric::{fiber, squarefree_initial, target_of, toric_groebner, toric_hilbert_series, toric_markov_basis};
use rankalg_core::{Error, Result};

use crate::input::{parse_counts, parse_params, parse_poset_file, parse_rational_list, parse_shorthand, PosetInput};
use crate::report::{Check, RunReport, Section};
use crate::verify::{self, Context, Tier};

#[derive(Parser, Debug)]
#[command(name = "rankalg", version, about = "Exact algebra of ranking models")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Term order for Gröbner computations, variables in column order.
    #[arg(long, global = true, value_enum, default_value_t = Order::Grevlex)]
    pub order: Order,
    /// Maximum number of S-pair reductions per engine run.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Lex,
    Grevlex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poset validation and chain enumeration.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Model matrices and their toric ideals.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Fibers of a model matrix.
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Plackett-Luce and Bradley-Terry computations.
    #[command(subcommand)]
    Pl(PlCmd),
    /// Runs the verification criteria of a tier.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct PosetArg {
    /// `boolean:n`, `antichain:n`, `chain:n` or `mixed:c,k`.
    #[arg(long)]
    pub poset: Option<String>,
    /// JSON file: `{"n":…,"relations":…}` or `{"elements":…,"relations":…}`.
    #[arg(long)]
    pub poset_file: Option<PathBuf>,
}

impl PosetArg {
    fn load(&self) -> Result<PosetInput> {
        match (&self.poset, &self.poset_file) {
            (Some(s), _) => parse_shorthand(s),
            (None, Some(p)) => parse_poset_file(&read(p)?),
            (None, None) => Err(Error::Format("a poset is required".into())),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct KindArg {
    /// `ascending`, `csiszar`, `birkhoff`, `inversion` or `alt_inversion`.
    #[arg(long, value_parser = parse_kind)]
    pub kind: ModelKind,
    #[command(flatten)]
    pub poset: PosetArg,
}

fn parse_kind(s: &str) -> std::result::Result<ModelKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum PosetCmd {
    /// Validates a poset and reports its grading.
    Check(PosetArg),
    /// Lists the maximal chains (linear extensions for constraint posets).
    Chains(PosetArg),
}

#[derive(Subcommand, Debug)]
pub enum ModelCmd {
    /// The model's exponent matrix.
    Matrix(KindArg),
    /// Dimension of the model polytope.
    Dim(KindArg),
    /// Facet inequalities of the model polytope, checked against its vertices.
    Hdesc(KindArg),
    /// A minimal generating set of the toric ideal.
    Markov(KindArg),
    /// The reduced Gröbner basis under `--order`.
    Groebner(KindArg),
    /// Hilbert series, Krull dimension and degree of the toric ring.
    Hilbert(KindArg),
    /// Row-space certificate for `inner ⊆ outer`.
    Inclusion {
        #[arg(long, value_parser = parse_kind)]
        inner: ModelKind,
        #[arg(long, value_parser = parse_kind)]
        outer: ModelKind,
        #[command(flatten)]
        poset: PosetArg,
    },
    /// Closed-form Csiszár estimate from a JSON table of chain counts.
    Mle {
        #[command(flatten)]
        poset: PosetArg,
        #[arg(long)]
        counts: PathBuf,
    },
    /// Mallows distribution on all permutations of `[n]`.
    Mallows {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: String,
    },
    /// Evaluates the model at parameters `label=value,…` or a JSON file.
    Eval {
        #[command(flatten)]
        model: KindArg,
        #[arg(long)]
        params: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ToricCmd {
    /// The fiber of a monomial given by column labels, or of a target.
    Fiber {
        #[command(flatten)]
        model: KindArg,
        /// Column labels with multiplicity, comma-separated.
        #[arg(long, conflicts_with_all = ["target", "degree"])]
        monomial: Option<String>,
        /// Comma-separated right-hand side `A·u`.
        #[arg(long, requires = "degree")]
        target: Option<String>,
        #[arg(long)]
        degree: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PlCmd {
    /// The homogeneous parametrization of the model.
    Map(PosetArg),
    /// Whether polynomials in `p_w` vanish on the model.
    Check {
        #[command(flatten)]
        poset: PosetArg,
        /// One polynomial; repeatable.
        #[arg(long)]
        poly: Vec<String>,
        /// File with one polynomial per line.
        #[arg(long)]
        polys: Option<PathBuf>,
    },
    /// Marginals of order `k` at the parameters `θ`.
    Marginalize {
        #[command(flatten)]
        poset: PosetArg,
        /// Comma-separated positive rationals.
        #[arg(long)]
        theta: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Bradley-Terry circuit and parametrization checks.
    Bt {
        #[command(flatten)]
        poset: PosetArg,
        /// Random parameter draws for the parametrization check.
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub tier: Tier,
    /// Seconds allowed per engine run of the stretch criterion.
    #[arg(long, default_value_t = 600)]
    pub budget: u64,
}

/// What a command produced.
#[derive(Debug)]
pub enum Outcome {
    Data { json: Value, text: String, csv: Option<String> },
    Report { report: RunReport, capped: bool },
}

impl Outcome {
    fn data(json: Value, text: String) -> Self {
        Outcome::Data { json, text, csv: None }
    }

    /// Rendered output; `None` when the format does not apply.
    pub fn render(&self, format: Format) -> Option<String> {
        let mut s = match (self, format) {
            (Outcome::Data { json, .. }, Format::Json) => serde_json::to_string_pretty(json).ok()?,
            (Outcome::Data { text, .. }, Format::Text) => text.clone(),
            (Outcome::Data { csv, .. }, Format::Csv) => csv.clone()?,
            (Outcome::Report { report, .. }, Format::Json) => serde_json::to_string_pretty(report).ok()?,
            (Outcome::Report { report, .. }, Format::Text) => report.to_text(),
            (Outcome::Report { report, .. }, Format::Csv) => report.to_csv(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        Some(s)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Data { .. } => 0,
            Outcome::Report { report, .. } if report.failed() => 1,
            Outcome::Report { capped: true, .. } => 3,
            Outcome::Report { .. } => 0,
        }
    }
}

/// A report for a run that stopped at a cap.
pub fn capped_report(command: Vec<String>, why: &str) -> Outcome {
    Outcome::Report {
        report: RunReport {
            command,
            sections: vec![Section {
                name: "run".into(),
                checks: vec![Check::skipped("run", format!("cap exceeded: {why}"))],
            }],
        },
        capped: true,
    }
}

/// Exit status for an error: 3 for an exhausted cap, 2 otherwise.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded(_) => 3,
        _ => 2,
    }
}

fn read(p: &PathBuf) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Format(format!("{}: {e}", p.display())))
}

struct Env {
    caps: Caps,
    parallel: bool,
    order: Order,
    seed: u64,
}

impl Env {
    fn order(&self, n: usize) -> TermOrder {
        match self.order {
            Order::Lex => TermOrder::lex(n),
            Order::Grevlex => TermOrder::grevlex(n),
        }
    }
}

pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Outcome> {
    let mut caps = Caps::default();
    if let Some(c) = cli.cap {
        caps.max_spairs = c;
    }
    let env = Env {
        caps,
        parallel: cli.jobs != Some(1),
        order: cli.order,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Poset(c) => poset(c),
        Command::Model(c) => model(c, &env),
        Command::Toric(ToricCmd::Fiber {
            model,
            monomial,
            target,
            degree,
        }) => toric_fiber(model, monomial.as_deref(), target.as_deref(), *degree),
        Command::Pl(c) => pl(c, &env, argv),
        Command::Verify(v) => {
            let ctx = Context {
                caps: env.caps.clone(),
                parallel: env.parallel,
                seed: env.seed,
                stretch_budget: Duration::from_secs(v.budget),
            };
            let report = verify::verify(v.tier, &ctx, argv);
            let capped = verify::capped(&report);
            Ok(Outcome::Report { report, capped })
        }
    }
}

fn poset(c: &PosetCmd) -> Result<Outcome> {
    match c {
        PosetCmd::Check(p) => {
            let input = p.load()?;
            let q = input.graded()?;
            let mut json = json!({
                "elements": q.len(),
                "covers": q.covers().len(),
                "rank": q.rk(),
                "level_sizes": q.levels().iter().map(|l| l.len()).collect::<Vec<_>>(),
                "lattice": q.is_lattice(),
                "maximal_chains": q.maximal_chains().len(),
            });
            if let PosetInput::Constraint(c) = &input {
                json["items"] = json!(c.len());
                json["relations"] = json!(c.covers().iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>());
            }
            let text = format!(
                "elements {}\ncovers {}\nrank {}\nlevel sizes {}\nlattice {}\nmaximal chains {}\n",
                q.len(),
                q.covers().len(),
                q.rk(),
                q.levels().iter().map(|l| l.len().to_string()).collect::<Vec<_>>().join(","),
                q.is_lattice(),
                q.maximal_chains().len()
            );
            Ok(Outcome::data(json, text))
        }
        PosetCmd::Chains(p) => {
            let q = p.load()?.graded()?;
            let labels: Vec<String> = q.maximal_chains().iter().map(|c| q.chain_label(c)).collect();
            let text = labels.join("\n");
            Ok(Outcome::Data {
                json: json!({ "chains": labels }),
                csv: Some(format!("chain\n{text}\n")),
                text,
            })
        }
    }
}

fn load_model(k: &KindArg) -> Result<(GradedPoset, ModelMatrix)> {
    let q = k.poset.load()?.graded()?;
    let m = model_matrix(k.kind, &q)?;
    Ok((q, m))
}

fn binomial_lines(bs: &[Binomial], names: &[String]) -> Vec<String> {
    bs.iter().map(|b| b.render(names)).collect()
}

fn binomials_outcome(bs: &[Binomial], names: &[String], extra: Value) -> Outcome {
    let lines = binomial_lines(bs, names);
    let degrees: Vec<(String, Value)> = degree_counts(bs).into_iter().map(|(d, c)| (d.to_string(), json!(c))).collect();
    let mut json = json!({
        "count": bs.len(),
        "degrees": degrees.into_iter().collect::<serde_json::Map<String, Value>>(),
        "binomials": lines,
    });
    if let (Value::Object(j), Value::Object(e)) = (&mut json, extra) {
        j.extend(e);
    }
    let mut csv = String::from("degree,binomial\n");
    for (b, l) in bs.iter().zip(&lines) {
        csv.push_str(&format!("{},{}\n", b.degree(), crate::report::csv_field(l)));
    }
    Outcome::Data {
        json,
        text: lines.join("\n"),
        csv: Some(csv),
    }
}

fn distribution_outcome(d: &Distribution) -> Outcome {
    let text = d.iter().map(|(l, v)| format!("{l} {v}")).collect::<Vec<_>>().join("\n");
    let json = Value::Object(d.iter().map(|(l, v)| (l.clone(), json!(v.to_string()))).collect());
    let csv = format!("label,probability\n{}\n", d.iter().map(|(l, v)| format!("{l},{v}")).collect::<Vec<_>>().join("\n"));
    Outcome::Data {
        json,
        text,
        csv: Some(csv),
    }
}

fn render_row(r: &LinearRow, coords: &[String], sense: &str) -> String {
    let mut terms = Vec::new();
    for (c, name) in r.coeffs.iter().zip(coords) {
        match c {
            0 => {}
            1 => terms.push(format!("+{name}")),
            -1 => terms.push(format!("-{name}")),
            c if *c > 0 => terms.push(format!("+{c}{name}")),
            c => terms.push(format!("{c}{name}")),
        }
    }
    format!("{} {sense} {}", terms.join(" "), r.rhs)
}

fn model(c: &ModelCmd, env: &Env) -> Result<Outcome> {
    match c {
        ModelCmd::Matrix(k) => {
            let (_, m) = load_model(k)?;
            let rows: Vec<String> = m
                .spec
                .matrix()
                .iter()
                .zip(m.spec.row_labels())
                .map(|(r, l)| format!("{l} {}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
                .collect();
            let text = format!("cols {}\n{}", m.spec.col_labels().join(" "), rows.join("\n"));
            let rm = RationalMatrix::from_i64(m.spec.matrix(), m.spec.cols())?;
            Ok(Outcome::Data {
                json: json!({
                    "rows": m.spec.row_labels(),
                    "cols": m.spec.col_labels(),
                    "matrix": m.spec.matrix(),
                }),
                text,
                csv: Some(rm.to_csv(m.spec.col_labels(), Some(m.spec.row_labels()))),
            })
        }
        ModelCmd::Dim(k) => {
            let (_, m) = load_model(k)?;
            let d = polytope_dimension(&m);
            Ok(Outcome::data(json!({ "kind": m.kind, "dimension": d, "columns": m.spec.cols() }), d.to_string()))
        }
        ModelCmd::Hdesc(k) => {
            let (q, m) = load_model(k)?;
            let h = h_description(k.kind, &q)?;
            let report = verify_h_description(&m, &h)?;
            let mut lines: Vec<String> = h.equalities.iter().map(|r| render_row(r, &h.coords, "=")).collect();
            lines.extend(h.inequalities.iter().map(|r| render_row(r, &h.coords, ">=")));
            Ok(Outcome::data(json!({ "description": h, "checks": report }), lines.join("\n")))
        }
        ModelCmd::Markov(k) => {
            let (_, m) = load_model(k)?;
            let mk = toric_markov_basis(&m.spec, &env.caps, env.parallel)?;
            Ok(binomials_outcome(&mk, &m.spec.var_names(), json!({})))
        }
        ModelCmd::Groebner(k) => {
            let (_, m) = load_model(k)?;
            let ord = env.order(m.spec.cols());
            let gb = toric_groebner(&m.spec, &ord, &env.caps, env.parallel)?;
            let sq = squarefree_initial(&gb, &ord);
            Ok(binomials_outcome(&gb, &m.spec.var_names(), json!({ "squarefree_initial": sq })))
        }
        ModelCmd::Hilbert(k) => {
            let (_, m) = load_model(k)?;
            let ord = env.order(m.spec.cols());
            let gb = toric_groebner(&m.spec, &ord, &env.caps, env.parallel)?;
            let h = toric_hilbert_series(&gb, &ord, m.spec.cols());
            let num: Vec<String> = h.numerator.iter().map(|c| c.to_string()).collect();
            let text = format!(
                "{}\nnumerator {}\nK {}\ndegree {}\nsymmetric {}\nsquarefree initial {}",
                h.render(),
                num.join(","),
                h.k,
                h.degree(),
                h.is_symmetric(),
                squarefree_initial(&gb, &ord)
            );
            Ok(Outcome::data(
                json!({
                    "numerator": num,
                    "k": h.k,
                    "degree": h.degree().to_string(),
                    "symmetric": h.is_symmetric(),
                    "squarefree_initial": squarefree_initial(&gb, &ord),
                    "series": h.render(),
                }),
                text,
            ))
        }
        ModelCmd::Inclusion { inner, outer, poset } => {
            let q = poset.load()?.graded()?;
            let ok = model_inclusion(&model_matrix(*inner, &q)?, &model_matrix(*outer, &q)?)?;
            Ok(Outcome::data(
                json!({ "inner": inner, "outer": outer, "included": ok }),
                ok.to_string(),
            ))
        }
        ModelCmd::Mle { poset, counts } => {
            let q = poset.load()?.graded()?;
            let data = parse_counts(&read(counts)?)?;
            Ok(distribution_outcome(&csiszar_mle(&q, &data)?))
        }
        ModelCmd::Mallows { n, q } => {
            if *n == 0 || *n > crate::input::MAX_SHORTHAND_ITEMS {
                return Err(Error::Format(format!("n = {n} outside [1, {}]", crate::input::MAX_SHORTHAND_ITEMS)));
            }
            let q = rankalg_core::poly::parse::parse_rational(q)?;
            Ok(distribution_outcome(&mallows_specialize(*n, &q)?))
        }
        ModelCmd::Eval { model, params } => {
            let (_, m) = load_model(model)?;
            let path = PathBuf::from(params);
            let text = if !params.contains('=') && path.exists() { read(&path)? } else { params.clone() };
            let p = parse_params(&text)?;
            Ok(distribution_outcome(&evaluate_distribution(&m, &p)?))
        }
    }
}

fn toric_fiber(model: &KindArg, monomial: Option<&str>, target: Option<&str>, degree: Option<u32>) -> Result<Outcome> {
    let (_, m) = load_model(model)?;
    let (t, d) = match (monomial, target, degree) {
        (Some(mono), _, _) => {
            let labels: Vec<&str> = mono.split(',').map(str::trim).collect();
            (target_of(&m.spec, &labels)?, labels.len() as u32)
        }
        (None, Some(t), Some(d)) => {
            let v = t
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Format(format!("bad target entry {x:?}"))))
                .collect::<Result<Vec<_>>>()?;
            (v, d)
        }
        _ => return Err(Error::Format("give --monomial, or --target with --degree".into())),
    };
    let f = fiber(&m.spec, &t, d)?;
    let names = m.spec.col_labels();
    let monos: Vec<Vec<&str>> = f
        .iter()
        .map(|x| x.vars_with_multiplicity().iter().map(|&j| names[j].as_str()).collect())
        .collect();
    let text = monos.iter().map(|x| x.join(" ")).collect::<Vec<_>>().join("\n");
    Ok(Outcome::Data {
        json: json!({ "target": t, "degree": d, "size": monos.len(), "monomials": monos }),
        csv: Some(format!("monomial\n{}\n", monos.iter().map(|x| x.join(" ")).collect::<Vec<_>>().join("\n"))),
        text,
    })
}

fn theta_of(text: &str, n: usize) -> Result<Vec<BigRational>> {
    let t = parse_rational_list(text)?;
    if t.len() != n {
        return Err(Error::Dimension(format!("{} parameters for {n} items", t.len())));
    }
    Ok(t)
}

fn pl(c: &PlCmd, env: &Env, argv: Vec<String>) -> Result<Outcome> {
    match c {
        PlCmd::Map(p) => {
            let input = p.load()?;
            let map = pl_homogeneous_map(input.constraint()?)?;
            let names = map.var_names();
            let images: Vec<String> = (0..map.words.len()).map(|k| map.render_factored(k)).collect();
            let text = names
                .iter()
                .zip(&images)
                .map(|(n, i)| format!("{n} -> {i}"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::data(
                json!({
                    "degree": map.degree,
                    "images": names.iter().cloned().zip(images.iter().cloned().map(Value::String)).collect::<serde_json::Map<_, _>>(),
                }),
                text,
            ))
        }
        PlCmd::Check { poset, poly, polys } => {
            let input = poset.load()?;
            let map = pl_homogeneous_map(input.constraint()?)?;
            let names = map.var_names();
            let mut texts = poly.clone();
            if let Some(p) = polys {
                texts.extend(read(p)?.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from));
            }
            if texts.is_empty() {
                return Err(Error::Format("no polynomials given".into()));
            }
            let mut checks = Vec::new();
            for t in &texts {
                let f = parse_polynomial(t, &names)?;
                let v = pl_vanishes(&f, &map)?;
                checks.push(Check::holds(t.clone(), v, if v { "vanishes" } else { "does not vanish" }));
            }
            Ok(Outcome::Report {
                report: RunReport {
                    command: argv,
                    sections: vec![Section { name: "vanishing".into(), checks }],
                },
                capped: false,
            })
        }
        PlCmd::Marginalize { poset, theta, k } => {
            let input = poset.load()?;
            let c = input.constraint()?;
            let theta = theta_of(theta, c.len())?;
            let pr = pl_probability(c, &theta)?;
            let dist: Vec<(Word, BigRational)> = pr.words.into_iter().zip(pr.values).collect();
            let ms = marginalize(&dist, c, *k)?;
            let mut lines = Vec::new();
            let mut csv = String::from("subset,ordering,mass,probability\n");
            let json: Vec<Value> = ms
                .iter()
                .map(|m| {
                    let subset = format_word(&m.subset);
                    let entries: Vec<Value> = m
                        .entries
                        .iter()
                        .map(|(w, mass, p)| {
                            lines.push(format!("{subset} {} {mass} {p}", format_word(w)));
                            csv.push_str(&format!("{subset},{},{mass},{p}\n", format_word(w)));
                            json!({ "ordering": format_word(w), "mass": mass.to_string(), "probability": p.to_string() })
                        })
                        .collect();
                    json!({ "subset": subset, "entries": entries })
                })
                .collect();
            Ok(Outcome::Data {
                json: json!({ "order": k, "marginals": json }),
                text: lines.join("\n"),
                csv: Some(csv),
            })
        }
        PlCmd::Bt { poset, trials } => {
            use rand::SeedableRng;
            let input = poset.load()?;
            let c = input.constraint()?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(env.seed);
            let r = bt_parametrization_check(c, *trials, &mut rng)?;
            let w = r.witness.clone().unwrap_or_else(|| format!("no counterexample in {trials} trials"));
            let mut checks = vec![
                Check::holds("circuits in the Lawrence kernel", r.circuits_in_lawrence_kernel, format!("{} circuits", r.circuits)),
                Check::holds("circuits vanish under the parametrization", r.circuits_vanish, &w),
                Check::holds("q_ij + q_ji = 1", r.complementary, &w),
            ];
            match r.marginals_match {
                Some(ok) => checks.push(Check::holds("pairwise Plackett-Luce marginals agree", ok, &w)),
                None => checks.push(Check::skipped("pairwise Plackett-Luce marginals agree", "constrained poset")),
            }
            Ok(Outcome::Report {
                report: RunReport {
                    command: argv,
                    sections: vec![Section { name: "bradley-terry".into(), checks }],
                },
                capped: false,
            })
        }
    }
}
