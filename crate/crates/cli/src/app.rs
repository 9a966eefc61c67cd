//! Argument parsing and the subcommands.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use smallsub_core::bounds::{
    b_recursion, cubic_eta_a, default_b3, eta_a_i, frak_r, phi, phi_coprime, quadric_b, quadric_thresholds,
    stillman_c, BoundTable, Characteristic,
};
use smallsub_core::certify::{
    check_reta, is_regular_sequence, koszul_h1_vanishes, minors_height_check, singular_locus_codim,
};
use smallsub_core::descent::{small_subalgebra, DescentOptions, SearchRegime, StopReason, ThresholdPolicy};
use smallsub_core::field::{Field, Rationals};
use smallsub_core::groebner::{
    colon_ideal, free_resolution, intersection, leading_form_ideal, saturation, Budget, GroebnerBasis, Ideal,
    MonomialOrder, SubmoduleOfFree,
};
use smallsub_core::poly::{DimensionSequence, Form, GradedSpace, Polynomial};
use smallsub_core::strength::{find_collapse, strength_exact, CollapseWitness};
use smallsub_core::Error;

use crate::acceptance;
use crate::input::{build_matrix, generator_texts, matrix_texts, parse_groups, read_source, split_list, FieldSpec};
use crate::report::{self, ext, Report, RunConfig};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "smallsub", version, about = "Strength, collapses and small subalgebras of spaces of forms")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Coefficient field: `p=<prime>` or `Q`.
    #[arg(long, global = true, default_value = "Q")]
    pub field: FieldSpec,
    /// Monomial order for `gb`.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Number of variables; defaults to the highest index used.
    #[arg(long, global = true)]
    pub nvars: Option<usize>,
    /// Critical pairs per Gröbner computation.
    #[arg(long, global = true, env = "SMALLSUB_MAX_PAIRS", default_value_t = 200_000, value_parser = positive_usize)]
    pub max_pairs: usize,
    /// Largest S-polynomial degree.
    #[arg(long, global = true, env = "SMALLSUB_MAX_DEGREE", default_value_t = 64,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub max_degree: u32,
    /// Candidates per exhaustive search.
    #[arg(long, global = true, env = "SMALLSUB_MAX_ENUMERATION", default_value_t = 2_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_enumeration: u64,
    /// States per bound recursion.
    #[arg(long, global = true, env = "SMALLSUB_MAX_STATES", default_value_t = 2_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_states: u64,
    /// Add wall-clock timing (reports are otherwise byte-identical across runs).
    #[arg(long, global = true)]
    pub timing: bool,
}

impl GlobalArgs {
    pub fn budget(&self) -> Budget {
        Budget {
            max_pairs: self.max_pairs,
            max_degree: self.max_degree,
            max_enumeration: self.max_enumeration,
            max_states: self.max_states,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl OrderArg {
    fn order(self) -> MonomialOrder {
        match self {
            OrderArg::Grevlex => MonomialOrder::GrevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderArg::Grevlex => "grevlex",
            OrderArg::Lex => "lex",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct GensArgs {
    /// Polynomials separated by `;`.
    #[arg(long)]
    pub gens: Option<String>,
    /// One polynomial per line, `#` comments, `-` for stdin.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Strength of each form: exact where the search completes, else an interval.
    Strength {
        #[command(flatten)]
        input: GensArgs,
        /// Largest collapse size to search.
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Search for a k-collapse of each form (exit 1 if some form has none).
    Collapse {
        #[command(flatten)]
        input: GensArgs,
        #[arg(long)]
        k: usize,
    },
    /// Regular sequence, singular locus and R_eta checks; `--matrix` runs the minors bound instead.
    Certify {
        #[command(flatten)]
        input: GensArgs,
        #[arg(long)]
        eta: Option<u64>,
        /// Also compare with the first Koszul homology.
        #[arg(long)]
        koszul: bool,
        /// JSON matrix `{"rows": [[...], ...]}` with homogeneous rows of distinct degrees.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Descend a graded space of forms into a small subalgebra.
    Descend {
        #[command(flatten)]
        input: GensArgs,
        /// `constant:K`, `constant:2=K2,3=K3`, `maximal[:K]` or `eta-a:ETA`.
        #[arg(long, default_value = "constant:1")]
        policy: String,
        /// Random combinations tried per piece.
        #[arg(long, default_value_t = 16)]
        samples: usize,
        /// Largest piece (in projective points) searched exhaustively.
        #[arg(long, default_value_t = 2_000)]
        max_projective: u64,
        #[arg(long, default_value_t = 1_000)]
        max_steps: usize,
    },
    /// Projective dimension of R/I, or of R^rows / image(matrix).
    Pdim {
        #[command(flatten)]
        input: GensArgs,
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        input: GensArgs,
    },
    /// Saturation I : f^inf.
    Sat {
        #[command(flatten)]
        input: GensArgs,
        #[arg(long)]
        by: String,
    },
    /// Colon ideal I : J.
    Colon {
        #[command(flatten)]
        input: GensArgs,
        /// Generators of J separated by `;`.
        #[arg(long)]
        by: String,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        input: GensArgs,
        /// Generators of the second ideal separated by `;`.
        #[arg(long)]
        with: String,
    },
    /// Ideal of leading forms of all elements of I.
    LeadingIdeal {
        #[command(flatten)]
        input: GensArgs,
    },
    /// Closed-form bounds and bound recursions.
    Bounds(BoundsArgs),
    /// Run the acceptance suite.
    Selftest {
        /// Criterion numbers to run, comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    QuadricThresholds,
    #[value(name = "quadric-B", alias = "quadric-b")]
    QuadricB,
    Cubic,
    FrakR,
    EtaA,
    B,
    Stillman,
    Phi,
}

#[derive(Args, Debug, Clone)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    pub table: Table,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub eta: Option<u64>,
    /// Characteristic; defaults to that of `--field`.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    /// Dimension sequence such as `0,0,1`.
    #[arg(long)]
    pub delta: Option<String>,
    #[arg(long)]
    pub i: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub h: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
}

/// Exit code and rendered streams of one invocation.
#[derive(Clone, Debug)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    budget: Budget,
    nvars: Option<usize>,
    order: MonomialOrder,
    seed: u64,
    field: FieldSpec,
}

macro_rules! on_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Prime(p) => {
                let $f = p;
                $body
            }
            FieldSpec::Rationals => {
                let $f = Rationals;
                $body
            }
        }
    };
}

pub fn run(argv: Vec<String>) -> Execution {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Execution {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Execution {
                    code: 3,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let g = &cli.global;
    let config = RunConfig {
        field: g.field.to_string(),
        order: g.order.name().into(),
        budget: g.budget(),
        seed: g.seed,
        format: match g.format {
            Format::Json => "json".into(),
            Format::Text => "text".into(),
        },
        nvars: g.nvars,
    };
    let mut report = Report::new(command_name(&cli.command), argv.iter().skip(1).cloned().collect(), config);
    let ctx = Ctx {
        budget: g.budget(),
        nvars: g.nvars,
        order: g.order.order(),
        seed: g.seed,
        field: g.field,
    };
    let start = Instant::now();
    let outcome = execute(&cli.command, &ctx, &mut report);
    if g.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let (code, stderr) = match outcome {
        Ok(()) => (if report.verdict == Some(false) { 1 } else { 0 }, String::new()),
        Err(e) => {
            report.error = Some(e.to_json());
            (e.exit_code(), format!("error: {e}\n"))
        }
    };
    let stdout = match g.format {
        Format::Json => report.render_json() + "\n",
        Format::Text => report.render_text(),
    };
    Execution { code, stdout, stderr }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Strength { .. } => "strength",
        Command::Collapse { .. } => "collapse",
        Command::Certify { .. } => "certify",
        Command::Descend { .. } => "descend",
        Command::Pdim { .. } => "pdim",
        Command::Gb { .. } => "gb",
        Command::Sat { .. } => "sat",
        Command::Colon { .. } => "colon",
        Command::Intersect { .. } => "intersect",
        Command::LeadingIdeal { .. } => "leading-ideal",
        Command::Bounds(_) => "bounds",
        Command::Selftest { .. } => "selftest",
    }
}

fn execute(cmd: &Command, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    match cmd {
        Command::Bounds(b) => return bounds(b, ctx, r),
        Command::Selftest { only } => return selftest(only, ctx, r),
        _ => {}
    }
    on_field!(ctx.field, field => match cmd {
        Command::Strength { input, max_k } => strength(field, ctx, input, *max_k, r),
        Command::Collapse { input, k } => collapse(field, ctx, input, *k, r),
        Command::Certify { input, eta, koszul, matrix } => match matrix {
            Some(path) => certify_minors(field, ctx, path, r),
            None => certify(field, ctx, input, *eta, *koszul, r),
        },
        Command::Descend { input, policy, samples, max_projective, max_steps } => {
            let opts = DescentOptions {
                seed: ctx.seed,
                random_samples: *samples,
                max_projective: *max_projective,
                max_steps: *max_steps,
            };
            descend(field, ctx, input, policy, opts, r)
        }
        Command::Pdim { input, matrix } => pdim(field, ctx, input, matrix.as_deref(), r),
        Command::Gb { input } => gb(field, ctx, input, r),
        Command::Sat { input, by } => ideal_op(field, ctx, input, Op::Sat(by), r),
        Command::Colon { input, by } => ideal_op(field, ctx, input, Op::Colon(by), r),
        Command::Intersect { input, with } => ideal_op(field, ctx, input, Op::Intersect(with), r),
        Command::LeadingIdeal { input } => ideal_op(field, ctx, input, Op::Leading, r),
        Command::Bounds(_) | Command::Selftest { .. } => unreachable!(),
    })
}

fn texts(input: &GensArgs) -> Result<Vec<String>, CliError> {
    let t = generator_texts(input.gens.as_deref(), input.file.as_deref())?;
    if t.is_empty() {
        return Err(CliError::Usage("no generators: pass --gens or --file".into()));
    }
    Ok(t)
}

fn read_gens<F: Field>(field: &F, ctx: &Ctx, input: &GensArgs) -> Result<Vec<Polynomial<F>>, CliError> {
    let t = texts(input)?;
    Ok(parse_groups(field, &[("gens", &t)], ctx.nvars)?.remove(0))
}

fn to_forms<F: Field>(ps: Vec<Polynomial<F>>) -> Result<Vec<Form<F>>, CliError> {
    ps.into_iter().map(|p| Form::new(p).map_err(CliError::Core)).collect()
}

fn reduced<F: Field>(i: &Ideal<F>, budget: &Budget) -> Result<Vec<Polynomial<F>>, CliError> {
    Ok(i.groebner(budget)?.polynomials())
}

fn strength<F: Field>(field: F, ctx: &Ctx, input: &GensArgs, max_k: Option<usize>, r: &mut Report) -> Result<(), CliError> {
    let forms = to_forms(read_gens(&field, ctx, input)?)?;
    let mut out = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        let s = strength_exact(f, max_k, &ctx.budget)?;
        if let Some(w) = &s.witness {
            CollapseWitness::new(w.target().clone(), w.pairs().to_vec())?;
            r.audit.push(format!("form {i}: witness identity F = sum G_i H_i rechecked"));
        }
        if let Some(h) = s.jacobian_height {
            r.audit.push(format!(
                "form {i}: height((F) + partials) = {h}, lower bound {} holds over every extension",
                s.jacobian_lower
            ));
        }
        if s.field_caveat {
            r.audit.push(format!(
                "form {i}: no k-collapse for k <= {} over the prime field only",
                s.searched_k
            ));
        }
        out.push(json!({
            "form": f.poly().to_string(),
            "degree": f.degree(),
            "lower": ext(s.lower),
            "upper": ext(s.upper),
            "exact": s.exact.map(ext),
            "complete": s.complete,
            "field_caveat": s.field_caveat,
            "jacobian_height": s.jacobian_height.map(ext),
            "jacobian_lower": ext(s.jacobian_lower),
            "searched_k": s.searched_k,
            "witness": s.witness.as_ref().map(report::witness),
        }));
    }
    r.result = json!({ "forms": out });
    Ok(())
}

fn collapse<F: Field>(field: F, ctx: &Ctx, input: &GensArgs, k: usize, r: &mut Report) -> Result<(), CliError> {
    let forms = to_forms(read_gens(&field, ctx, input)?)?;
    let mut out = Vec::new();
    let mut all = true;
    for f in &forms {
        let w = find_collapse(f, k, &ctx.budget)?;
        all &= w.is_some();
        out.push(json!({
            "form": f.poly().to_string(),
            "k": k,
            "found": w.is_some(),
            "witness": w.as_ref().map(report::witness),
        }));
    }
    r.audit.push("absence of a collapse is exhaustive over the prime field".into());
    r.result = json!({ "forms": out });
    r.verdict = Some(all);
    Ok(())
}

fn certify<F: Field>(
    field: F,
    ctx: &Ctx,
    input: &GensArgs,
    eta: Option<u64>,
    koszul: bool,
    r: &mut Report,
) -> Result<(), CliError> {
    let forms = to_forms(read_gens(&field, ctx, input)?)?;
    let gens: Vec<Polynomial<F>> = forms.iter().map(|f| f.poly().clone()).collect();
    let height = Ideal::new(field.clone(), gens[0].nvars(), gens)?.height(&ctx.budget)?;
    let regular = is_regular_sequence(&forms, &ctx.budget)?;
    r.audit.push(format!("height {height} for {} forms", forms.len()));
    let mut result = json!({
        "forms": report::forms(&forms),
        "height": ext(height),
        "regular_sequence": regular,
    });
    if koszul {
        let h1 = koszul_h1_vanishes(&forms, &ctx.budget)?;
        result["koszul_h1_vanishes"] = json!(h1);
        r.audit.push(format!("Koszul check {} the height criterion", if h1 == regular { "agrees with" } else { "DISAGREES with" }));
    }
    let mut verdict = regular;
    if regular {
        let loc = singular_locus_codim(&forms, &ctx.budget)?;
        result["singular_locus"] = json!({
            "codim": loc.codim,
            "smooth": loc.smooth,
            "jacobian_height": ext(loc.jacobian_height),
        });
        if let Some(eta) = eta {
            let c = check_reta(&forms, eta, &ctx.budget)?;
            result["reta"] = json!({
                "eta": eta,
                "codim_singular": c.codim_singular,
                "pass": c.pass,
                "characteristic_caveat": c.characteristic_caveat,
            });
            for (label, h) in &c.heights {
                r.audit.push(format!("height({label}) = {h}"));
            }
            if c.characteristic_caveat && !c.pass {
                r.audit.push("positive characteristic: the Jacobian may overstate the singular locus".into());
            }
            verdict &= c.pass;
        }
    } else if let Some(eta) = eta {
        result["reta"] = json!({ "eta": eta, "pass": false });
        r.audit.push("not a regular sequence, R_eta not evaluated".into());
    }
    r.result = result;
    r.verdict = Some(verdict);
    Ok(())
}

fn read_matrix<F: Field>(field: &F, ctx: &Ctx, path: &std::path::Path) -> Result<Vec<Vec<Polynomial<F>>>, CliError> {
    let rows = matrix_texts(&read_source(path)?)?;
    let names: Vec<String> = (0..rows.len()).map(|i| format!("row{i}")).collect();
    let groups: Vec<(&str, &[String])> = names.iter().map(String::as_str).zip(rows.iter().map(Vec::as_slice)).collect();
    parse_groups(field, &groups, ctx.nvars)
}

fn certify_minors<F: Field>(field: F, ctx: &Ctx, path: &std::path::Path, r: &mut Report) -> Result<(), CliError> {
    let m = build_matrix(read_matrix(&field, ctx, path)?)?;
    let c = minors_height_check(&m, &ctx.budget)?;
    r.audit.push(format!("height of maximal minors {} against b - h + 1 with b = {}, h = {}", c.minors_height, c.b, c.h));
    r.result = json!({
        "row_degrees": c.row_degrees,
        "b": ext(c.b),
        "h": c.h,
        "minors_height": ext(c.minors_height),
        "holds": c.holds,
    });
    r.verdict = Some(c.holds);
    Ok(())
}

fn parse_policy(s: &str, characteristic: u64, nvars: usize, max_degree: u32) -> Result<ThresholdPolicy, CliError> {
    let bad = || CliError::Usage(format!("unknown policy `{s}`"));
    let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    match kind {
        "maximal" if arg.is_empty() => Ok(ThresholdPolicy::Maximal { max_k: nvars as u64 }),
        "maximal" => Ok(ThresholdPolicy::Maximal { max_k: num(arg)? }),
        "eta-a" => Ok(ThresholdPolicy::EtaA(BoundTable::standard(num(arg)?, Characteristic::of(characteristic))?)),
        "constant" if arg.contains('=') => {
            let mut m = std::collections::BTreeMap::new();
            for part in arg.split(',') {
                let (d, k) = part.split_once('=').ok_or_else(bad)?;
                m.insert(num(d)? as u32, num(k)?);
            }
            Ok(ThresholdPolicy::Constant(m))
        }
        "constant" => Ok(ThresholdPolicy::uniform(num(arg)?, 2..=max_degree.max(2))),
        _ => Err(bad()),
    }
}

fn regime_name(r: SearchRegime) -> &'static str {
    match r {
        SearchRegime::Basis => "basis",
        SearchRegime::Random => "random",
        SearchRegime::Exhaustive => "exhaustive",
    }
}

fn stop_name(s: &StopReason) -> &'static str {
    match s {
        StopReason::NoCollapse => "no-collapse",
        StopReason::SamplesExhausted => "samples-exhausted",
        StopReason::BudgetExceeded => "budget-exceeded",
        StopReason::StepLimit => "step-limit",
    }
}

fn descend<F: Field>(
    field: F,
    ctx: &Ctx,
    input: &GensArgs,
    policy: &str,
    opts: DescentOptions,
    r: &mut Report,
) -> Result<(), CliError> {
    let forms = to_forms(read_gens(&field, ctx, input)?)?;
    let n = forms[0].nvars();
    let max_degree = forms.iter().map(Form::degree).max().unwrap_or(1);
    let policy = parse_policy(policy, field.characteristic(), n, max_degree)?;
    let v = GradedSpace::from_forms(field.clone(), n, forms)?;
    let t = small_subalgebra(&v, &policy, &opts, &ctx.budget)?;
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "before": report::sequence(&s.before),
                "degree": s.degree,
                "threshold": s.threshold,
                "regime": regime_name(s.regime),
                "replaced": s.witness.target().poly().to_string(),
                "witness": report::witness(&s.witness),
                "after": report::sequence(&s.after),
            })
        })
        .collect();
    let exhaustive_maximal = matches!(policy, ThresholdPolicy::Maximal { max_k } if max_k as usize >= n) && t.complete;
    r.audit.push(format!("{} descent steps, stop: {}", t.steps.len(), stop_name(&t.stop)));
    if exhaustive_maximal {
        r.audit.push("maximal policy completed: output must be a regular sequence".into());
    }
    let membership = t.membership == Some(true);
    let verdict = membership && (!exhaustive_maximal || t.regular_sequence == Some(true));
    r.result = json!({
        "initial_basis": report::forms(&t.initial),
        "initial_sequence": report::sequence(&v.dimension_sequence()),
        "steps": steps,
        "generators": report::forms(&t.final_generators),
        "s": t.final_generators.len(),
        "final_sequence": report::sequence(&t.final_sequence),
        "stop": stop_name(&t.stop),
        "complete": t.complete,
        "membership": t.membership,
        "regular_sequence": t.regular_sequence,
    });
    r.verdict = Some(verdict);
    Ok(())
}

fn pdim<F: Field>(
    field: F,
    ctx: &Ctx,
    input: &GensArgs,
    matrix: Option<&std::path::Path>,
    r: &mut Report,
) -> Result<(), CliError> {
    let module = match matrix {
        Some(path) => SubmoduleOfFree::image(&build_matrix(read_matrix(&field, ctx, path)?)?)?,
        None => {
            let gens = read_gens(&field, ctx, input)?;
            let n = gens[0].nvars();
            SubmoduleOfFree::from_ideal(field.clone(), n, &gens)?
        }
    };
    let res = free_resolution(&module, &ctx.budget)?;
    let complex = res
        .matrices
        .windows(2)
        .map(|w| w[0].mul(&w[1]).map(|p| p.is_zero()))
        .collect::<Result<Vec<bool>, Error>>()?
        .into_iter()
        .all(|z| z);
    r.audit.push(format!("consecutive matrix products vanish: {complex}"));
    if !res.minimal {
        r.audit.push("input not graded: the resolution need not be minimal, its length bounds pdim from above".into());
    }
    r.result = json!({
        "pdim": res.minimal.then_some(res.length()),
        "length": res.length(),
        "ranks": res.ranks,
        "shifts": if res.minimal { json!(res.shifts) } else { Value::Null },
        "minimal": res.minimal,
    });
    Ok(())
}

fn gb<F: Field>(field: F, ctx: &Ctx, input: &GensArgs, r: &mut Report) -> Result<(), CliError> {
    let gens = read_gens(&field, ctx, input)?;
    let n = gens[0].nvars();
    let basis = GroebnerBasis::for_ideal(field, n, &gens, ctx.order, &ctx.budget)?;
    let s = basis.stats();
    r.audit.push(format!("all S-pairs reduce to zero: {}", basis.verify_s_pairs()));
    r.audit.push(format!(
        "pairs considered {}, reduced {}, zero reductions {}, pruned {}",
        s.pairs_considered, s.pairs_reduced, s.zero_reductions, s.pairs_pruned
    ));
    r.result = json!({
        "nvars": n,
        "basis": report::polys(&basis.polynomials()),
        "unit": basis.is_unit(),
    });
    Ok(())
}

enum Op<'a> {
    Sat(&'a str),
    Colon(&'a str),
    Intersect(&'a str),
    Leading,
}

fn ideal_op<F: Field>(field: F, ctx: &Ctx, input: &GensArgs, op: Op<'_>, r: &mut Report) -> Result<(), CliError> {
    let t = texts(input)?;
    let other = match &op {
        Op::Sat(s) | Op::Colon(s) | Op::Intersect(s) => split_list(s),
        Op::Leading => Vec::new(),
    };
    let mut groups = parse_groups(&field, &[("gens", &t), ("other", &other)], ctx.nvars)?;
    let second = groups.pop().unwrap();
    let gens = groups.pop().unwrap();
    let n = gens[0].nvars();
    let i = Ideal::new(field.clone(), n, gens.clone())?;
    let b = &ctx.budget;
    let out = match op {
        Op::Sat(_) => {
            let [f] = second.as_slice() else {
                return Err(CliError::Usage("--by takes exactly one polynomial".into()));
            };
            let s = saturation(&i, f, b)?;
            r.audit.push(format!("contains the input ideal: {}", s.contains_ideal(&i, b)?));
            s
        }
        Op::Colon(_) => {
            let j = Ideal::new(field.clone(), n, second)?;
            let c = colon_ideal(&i, &j, b)?;
            r.audit.push(format!("(I : J) J contained in I: {}", i.contains_ideal(&c.product(&j)?, b)?));
            c
        }
        Op::Intersect(_) => {
            let j = Ideal::new(field.clone(), n, second)?;
            let c = intersection(&i, &j, b)?;
            r.audit.push(format!(
                "contained in both: {}",
                i.contains_ideal(&c, b)? && j.contains_ideal(&c, b)?
            ));
            c
        }
        Op::Leading => {
            let l = leading_form_ideal(&gens, b)?;
            r.audit.push("generators of the result are homogeneous".into());
            l
        }
    };
    r.result = json!({
        "nvars": n,
        "ideal": report::polys(&reduced(&out, b)?),
        "unit": out.is_unit(b)?,
    });
    Ok(())
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("this table needs --{name}")))
}

fn parse_delta(s: Option<&str>) -> Result<DimensionSequence, CliError> {
    let s = s.ok_or_else(|| CliError::Usage("this table needs --delta".into()))?;
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("bad --delta `{s}`")))?;
    Ok(DimensionSequence::new(v))
}

fn characteristic(b: &BoundsArgs, ctx: &Ctx) -> u64 {
    b.characteristic.unwrap_or(match ctx.field {
        FieldSpec::Prime(p) => p.modulus() as u64,
        FieldSpec::Rationals => 0,
    })
}

fn bounds(b: &BoundsArgs, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let ch = characteristic(b, ctx);
    let chk = Characteristic::of(ch);
    let (value, provenance, inputs) = match b.table {
        Table::QuadricThresholds => {
            let (n, eta) = (need(b.n, "n")?, need(b.eta, "eta")?);
            let (reg, reta) = quadric_thresholds(n, eta)?;
            (
                json!({ "regular_sequence": reg, "r_eta": reta }),
                "quadric strength thresholds: n - 1 and n - 1 + ceil(eta/2)",
                json!({ "n": n, "eta": eta }),
            )
        }
        Table::QuadricB => {
            let n = need(b.n, "n")?;
            (json!(quadric_b(n)?), "quadric subalgebra bound 2^(n+1)(n-2)+4", json!({ "n": n }))
        }
        Table::Cubic => {
            let d = parse_delta(b.delta.as_deref())?;
            let eta = need(b.eta, "eta")?;
            let [n1, n2, n3] = [d.get(1), d.get(2), d.get(3)];
            if d.max_degree() > 3 {
                return Err(CliError::Usage("cubic table takes degrees up to 3".into()));
            }
            let v = cubic_eta_a(n1, n2, n3, eta, chk)?;
            (
                json!(v),
                "cubic thresholds (0, ceil(b/2)+n1, R(b)+n1), b = 2(n2+n3)+eta (+1 if n2 > 0)",
                json!({ "delta": [n1, n2, n3], "eta": eta, "char": ch }),
            )
        }
        Table::FrakR => {
            let bb = need(b.b, "b")?;
            (json!(frak_r(bb, chk)?), "R(b) by characteristic", json!({ "b": bb, "char": ch }))
        }
        Table::EtaA => {
            let d = parse_delta(b.delta.as_deref())?;
            let (i, eta) = (need(b.i, "i")?, need(b.eta, "eta")?);
            let t = BoundTable::standard(eta, chk)?;
            (
                json!(eta_a_i(&d, i, &t)?),
                "eta_A(i) + 3(n-1) over the standard base table",
                json!({ "delta": d.entries(), "i": i, "eta": eta, "char": ch, "base": table_json(&t) }),
            )
        }
        Table::B => {
            let d = parse_delta(b.delta.as_deref())?;
            let eta = need(b.eta, "eta")?;
            let t = BoundTable::standard(eta, chk)?;
            (
                json!(b_recursion(&d, &t, &ctx.budget)?.to_string()),
                "descent recursion maximized over all redistributions, standard base table",
                json!({ "delta": d.entries(), "eta": eta, "char": ch, "base": table_json(&t) }),
            )
        }
        Table::Stillman => {
            let (m, n, d, eta) = (need(b.m, "m")?, need(b.n, "n")?, need(b.d, "d")?, need(b.eta, "eta")?);
            let t = BoundTable::standard(eta, chk)?;
            (
                json!(stillman_c(m, n, d, &t, &ctx.budget)?.to_string()),
                "max of the descent recursion over sequences of total m*n in degrees up to d",
                json!({ "m": m, "n": n, "d": d, "eta": eta, "char": ch, "base": table_json(&t) }),
            )
        }
        Table::Phi => {
            let (h, d) = (need(b.h, "h")?, need(b.d, "d")?);
            match phi_coprime(h, d, ch) {
                Some(v) => (json!(v), "characteristic does not divide d: Phi = h", json!({ "h": h, "d": d, "char": ch })),
                None => (
                    json!(phi(h, d, &default_b3)?.to_string()),
                    "B3(h, d-1) + 1 with the labeled default B3 composed from the quadric bounds",
                    json!({ "h": h, "d": d, "char": ch }),
                ),
            }
        }
    };
    r.audit.push(provenance.into());
    r.result = json!({
        "table": table_name(b.table),
        "inputs": inputs,
        "value": value,
        "provenance": provenance,
    });
    Ok(())
}

fn table_json(t: &BoundTable) -> Value {
    Value::Object(t.entries().map(|(d, v)| (d.to_string(), json!(v))).collect())
}

fn table_name(t: Table) -> &'static str {
    match t {
        Table::QuadricThresholds => "quadric-thresholds",
        Table::QuadricB => "quadric-B",
        Table::Cubic => "cubic",
        Table::FrakR => "frak-r",
        Table::EtaA => "eta-a",
        Table::B => "b",
        Table::Stillman => "stillman",
        Table::Phi => "phi",
    }
}

fn selftest(only: &[u8], ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let results = acceptance::run_selected(only, &ctx.budget);
    let all = results.iter().all(|c| c.pass);
    for c in &results {
        r.audit.push(c.line(false));
    }
    r.result = json!({
        "criteria": results.iter().map(|c| json!({
            "id": c.id,
            "name": c.name,
            "pass": c.pass,
            "detail": c.detail,
            "limit_s": c.limit.as_secs(),
        })).collect::<Vec<_>>(),
        "passed": results.iter().filter(|c| c.pass).count(),
        "total": results.len(),
    });
    r.verdict = Some(all);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Execution {
        let mut v = vec!["smallsub".to_string()];
        v.extend(args.iter().map(|s| s.to_string()));
        run(v)
    }

    fn json_of(e: &Execution) -> Value {
        serde_json::from_str(&e.stdout).unwrap()
    }

    #[test]
    fn policies() {
        assert!(matches!(parse_policy("maximal", 5, 4, 2).unwrap(), ThresholdPolicy::Maximal { max_k: 4 }));
        assert!(matches!(parse_policy("constant:2=1,3=0", 5, 4, 3).unwrap(), ThresholdPolicy::Constant(m) if m.len() == 2));
        assert!(matches!(parse_policy("eta-a:1", 0, 4, 3).unwrap(), ThresholdPolicy::EtaA(_)));
        assert!(parse_policy("greedy", 5, 4, 2).is_err());
    }

    #[test]
    fn gb_lists_the_cubic() {
        let e = go(&["gb", "--field", "p=5", "--gens", "x1^2+x2^2; x1*x2"]);
        assert_eq!(e.code, 0, "{}", e.stderr);
        let v = json_of(&e);
        assert!(v["result"]["basis"].as_array().unwrap().iter().any(|p| p == "x2^3"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["gb", "--field", "p=5", "--gens", "x1 +* x2"]).code, 3);
        assert_eq!(go(&["gb", "--field", "p=6", "--gens", "x1"]).code, 3);
        assert_eq!(go(&["frobnicate"]).code, 3);
        assert_eq!(go(&["certify", "--field", "p=5", "--gens", "x1*x2", "--eta", "1"]).code, 1);
        assert_eq!(go(&["--max-enumeration", "1", "collapse", "--field", "p=2", "--gens", "x1*x2+x3*x4", "--k", "2"]).code, 2);
        assert_eq!(go(&["strength", "--field", "p=5", "--gens", "x1^2 + x2"]).code, 4);
    }
}
