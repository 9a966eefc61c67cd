//! The acceptance suite: ten criteria, each with a fixed seed, its own
//! oracle and a wall-clock limit.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallsub_core::bounds::{cubic_eta_a, quadric_b, quadric_thresholds, Characteristic};
use smallsub_core::certify::{is_regular_sequence, minors_height_check, singular_locus_codim};
use smallsub_core::descent::{small_subalgebra, subalgebra_membership, DescentOptions, StopReason, ThresholdPolicy};
use smallsub_core::field::{Field, PrimeField};
use smallsub_core::groebner::{
    free_resolution, kernel_of_map, leading_form_ideal, projective_dimension, Budget, Ideal, SubmoduleOfFree,
};
use smallsub_core::matrix::{combinations, PolyMatrix};
use smallsub_core::poly::{derivative_space, gradient, parse_polynomial, Form, GradedSpace, Monomial, Polynomial};
use smallsub_core::strength::{find_collapse, strength_exact};
use smallsub_core::{Error, ExtNat};

type P = Polynomial<PrimeField>;
type Check = fn(&Budget) -> Result<(bool, String), Error>;

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub limit: Duration,
    check: Check,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionResult {
    pub fn line(&self, timing: bool) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict} [{:>2}] {}: {}", self.id, self.name, self.detail);
        if timing {
            s.push_str(&format!(
                " ({:.2} s, limit {} s)",
                self.elapsed.as_secs_f64(),
                self.limit.as_secs()
            ));
        }
        s
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs, check| Criterion {
        id,
        name,
        limit: Duration::from_secs(secs),
        check,
    };
    vec![
        c(1, "Euler identity", 1, euler as Check),
        c(2, "collapse easy direction", 120, easy_direction),
        c(3, "strength oracle agreement", 60, strength_oracle),
        c(4, "minors height bound", 600, minors_bound),
        c(5, "regular sequence cross-check", 600, regular_cross_check),
        c(6, "R_eta fixtures", 60, reta_fixtures),
        c(7, "descent soundness", 900, descent_soundness),
        c(8, "closed forms", 1, closed_forms),
        c(9, "leading form pipeline", 300, leading_forms),
        c(10, "resolution sanity", 60, resolutions),
    ]
}

impl Criterion {
    pub fn run(&self, budget: &Budget) -> CriterionResult {
        let start = Instant::now();
        let outcome = (self.check)(budget);
        let elapsed = start.elapsed();
        let (mut pass, mut detail) = match outcome {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        if elapsed > self.limit {
            pass = false;
            detail.push_str(&format!("; over the {} s limit", self.limit.as_secs()));
        }
        CriterionResult {
            id: self.id,
            name: self.name,
            pass,
            detail,
            elapsed,
            limit: self.limit,
        }
    }
}

/// Run the criteria with the given ids (all when empty).
pub fn run_selected(only: &[u8], budget: &Budget) -> Vec<CriterionResult> {
    criteria()
        .iter()
        .filter(|c| only.is_empty() || only.contains(&c.id))
        .map(|c| c.run(budget))
        .collect()
}

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).expect("prime")
}

fn parse(p: u32, n: usize, s: &str) -> P {
    parse_polynomial(gf(p), s, Some(n)).expect("fixture")
}

fn form(p: u32, n: usize, s: &str) -> Form<PrimeField> {
    Form::new(parse(p, n, s)).expect("fixture form")
}

/// Each monomial of a degree in `degrees` kept with probability `density`.
fn random_poly(rng: &mut ChaCha8Rng, p: u32, n: usize, degrees: std::ops::RangeInclusive<u32>, density: f64) -> P {
    let field = gf(p);
    let mut terms = Vec::new();
    for d in degrees {
        for m in Monomial::all_of_degree(n, d) {
            if rng.gen_bool(density) {
                terms.push((m, field.from_i64(rng.gen_range(1..p) as i64)));
            }
        }
    }
    Polynomial::from_terms(field, n, terms)
}

fn random_form(rng: &mut ChaCha8Rng, p: u32, n: usize, d: u32, density: f64) -> P {
    loop {
        let f = random_poly(rng, p, n, d..=d, density);
        if !f.is_zero() {
            return f;
        }
    }
}

fn euler(_: &Budget) -> Result<(bool, String), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ok = 0;
    for s in 0..200 {
        let p = [5, 7][s % 2];
        let d = rng.gen_range(2..=4u32);
        let n = rng.gen_range(2..=5usize);
        let f = random_form(&mut rng, p, n, d, 0.6);
        let field = gf(p);
        let mut lhs = Polynomial::zero(field, n);
        for (i, g) in gradient(&f).iter().enumerate() {
            lhs = &lhs + &(&Polynomial::var(field, n, i) * g);
        }
        if lhs == f.scale(&field.from_i64(d as i64)) {
            ok += 1;
        }
    }
    Ok((ok == 200, format!("{ok}/200 forms satisfy sum x_i dF/dx_i = d F")))
}

fn jacobian_height(f: &Form<PrimeField>, budget: &Budget) -> Result<ExtNat, Error> {
    let mut gens = derivative_space(f.poly())?;
    gens.push(f.poly().clone());
    Ideal::new(*f.field(), f.nvars(), gens)?.height(budget)
}

fn easy_direction(budget: &Budget) -> Result<(bool, String), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut witnesses, mut ok) = (0, 0);
    for _ in 0..100 {
        let p = [2, 3][rng.gen_range(0..2)];
        let n = rng.gen_range(2..=4usize);
        let d = rng.gen_range(2..=3u32);
        let f = Form::new(random_form(&mut rng, p, n, d, 0.5))?;
        let h = jacobian_height(&f, budget)?;
        for k in 1..=n {
            if let Some(w) = find_collapse(&f, k, budget)? {
                witnesses += 1;
                if h <= ExtNat::Finite(2 * w.k() as u64) {
                    ok += 1;
                }
                break;
            }
        }
    }
    Ok((
        witnesses == 100 && ok == witnesses,
        format!("{ok}/{witnesses} witnesses satisfy height((F) + partials) <= 2k over 100 samples"),
    ))
}

/// `f ∈ (l_1..l_k)` for linear `l_i`, by solving each `l_i` for a pivot
/// variable and substituting.
fn in_linear_ideal(f: &P, ls: &[P]) -> bool {
    let field = *f.field();
    let n = f.nvars();
    let mut f = f.clone();
    let mut ls = ls.to_vec();
    while let Some(l) = ls.pop() {
        let Some((m, c)) = l.terms().first().cloned() else {
            continue;
        };
        let j = (0..n).find(|&i| m.exponent(i) == 1).expect("linear");
        let inv = field.inv(&c).expect("nonzero");
        let x = Polynomial::var(field, n, j);
        let mut images: Vec<P> = (0..n).map(|i| Polynomial::var(field, n, i)).collect();
        images[j] = &x - &l.scale(&inv);
        f = f.substitute(&images);
        ls = ls.iter().map(|g| g.substitute(&images)).collect();
    }
    f.is_zero()
}

fn strength_oracle(budget: &Budget) -> Result<(bool, String), Error> {
    let n = 3;
    let quad = Monomial::all_of_degree(n, 2);
    let linear: Vec<P> = (1u32..8)
        .map(|bits| {
            let terms = (0..n).filter(|i| bits >> i & 1 == 1).map(|i| (Monomial::var(n, i), 1));
            Polynomial::from_terms(gf(2), n, terms)
        })
        .collect();
    let mut agree = 0;
    let mut histogram = [0usize; 3];
    for bits in 1u32..64 {
        let terms = quad.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, m)| (m.clone(), 1));
        let f = Polynomial::from_terms(gf(2), n, terms);
        let oracle = if linear.iter().any(|l| in_linear_ideal(&f, std::slice::from_ref(l))) {
            0
        } else if combinations(linear.len(), 2)
            .iter()
            .any(|c| in_linear_ideal(&f, &[linear[c[0]].clone(), linear[c[1]].clone()]))
        {
            1
        } else {
            2
        };
        histogram[oracle] += 1;
        if strength_exact(&Form::new(f)?, None, budget)?.exact == Some(ExtNat::Finite(oracle as u64)) {
            agree += 1;
        }
    }
    Ok((
        agree == 63,
        format!(
            "{agree}/63 quadrics agree (oracle strengths 0/1/2: {}/{}/{})",
            histogram[0], histogram[1], histogram[2]
        ),
    ))
}

fn minors_bound(budget: &Budget) -> Result<(bool, String), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut ok = 0;
    for s in 0..100 {
        let n = 3 + s % 3;
        let r1: Vec<P> = (0..n).map(|_| random_poly(&mut rng, 5, n, 1..=1, 0.7)).collect();
        let r2: Vec<P> = (0..n).map(|_| random_poly(&mut rng, 5, n, 2..=2, 0.4)).collect();
        if minors_height_check(&PolyMatrix::from_rows(vec![r1, r2])?, budget)?.holds {
            ok += 1;
        }
    }
    Ok((ok == 100, format!("{ok}/100 matrices satisfy height >= b - h + 1")))
}

/// Cycles of the first Koszul differential are boundaries of the second.
fn koszul_exact_at_first_stage(forms: &[P], budget: &Budget) -> Result<bool, Error> {
    let field = *forms[0].field();
    let n = forms[0].nvars();
    let c = forms.len();
    let d1 = PolyMatrix::from_rows(vec![forms.to_vec()])?;
    let pairs = combinations(c, 2);
    let mut d2 = PolyMatrix::zeros(field, n, c, pairs.len());
    for (col, pair) in pairs.iter().enumerate() {
        let (i, j) = (pair[0], pair[1]);
        d2.set(i, col, forms[j].clone());
        d2.set(j, col, -&forms[i]);
    }
    assert!(d1.mul(&d2)?.is_zero());
    let cycles = kernel_of_map(&d1, &SubmoduleOfFree::new(field, n, 1, vec![])?, budget)?;
    let boundaries = SubmoduleOfFree::image(&d2)?;
    let gb = boundaries.groebner(budget)?;
    Ok(cycles.generators().iter().all(|v| gb.contains_vector(v)))
}

fn regular_cross_check(budget: &Budget) -> Result<(bool, String), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut agree, mut regular) = (0, 0);
    for _ in 0..50 {
        let c = rng.gen_range(2..=3usize);
        let n = rng.gen_range(c.max(3)..=5usize);
        let mut forms: Vec<P> = (0..c)
            .map(|_| {
                let d = rng.gen_range(1..=2u32);
                random_form(&mut rng, 5, n, d, 0.3)
            })
            .collect();
        if rng.gen_bool(0.35) {
            // a shared factor forces a non-regular sequence
            let l = random_form(&mut rng, 5, n, 1, 0.5);
            forms[0] = &forms[0] * &l;
            forms[1] = &forms[1] * &l;
        }
        let fs: Vec<Form<PrimeField>> = forms.iter().cloned().map(Form::new).collect::<Result<_, _>>()?;
        let by_height = is_regular_sequence(&fs, budget)?;
        let by_koszul = koszul_exact_at_first_stage(&forms, budget)?;
        regular += by_height as usize;
        agree += (by_height == by_koszul) as usize;
    }
    Ok((
        agree == 50,
        format!("{agree}/50 agree ({regular} regular, {} not)", 50 - regular),
    ))
}

fn reta_fixtures(budget: &Budget) -> Result<(bool, String), Error> {
    let mut got = Vec::new();
    let mut ok = true;
    for n in 3..=5 {
        let s: Vec<String> = (1..=n).map(|i| format!("x{i}^2")).collect();
        let codim = singular_locus_codim(&[form(5, n, &s.join(" + "))], budget)?.codim;
        ok &= codim == n as u64 - 1;
        got.push(format!("N={n}: {codim}"));
    }
    let codim = singular_locus_codim(&[form(5, 2, "x1*x2")], budget)?.codim;
    ok &= codim == 1;
    got.push(format!("x1*x2: {codim}"));
    Ok((ok, format!("codims {}", got.join(", "))))
}

fn descent_fixtures() -> Vec<(u32, usize, Vec<&'static str>)> {
    vec![
        (2, 2, vec!["x1*x2"]),
        (2, 4, vec!["x1*x2 + x3*x4"]),
        (2, 2, vec!["x1^2 + x2^2"]),
        (2, 2, vec!["x1^2 + x1*x2 + x2^2"]),
        (2, 2, vec!["x1", "x1^2 + x1*x2"]),
        (2, 3, vec!["x1*x2", "x3^3"]),
        (2, 3, vec!["x1^2 + x2*x3", "x1*x2*x3"]),
        (2, 2, vec!["x1^3 + x2^3"]),
        (2, 4, vec!["x1*x2 + x3*x4", "x1*x3"]),
        (2, 3, vec!["x1", "x2^2 + x2*x3 + x3^2", "x1*x2*x3"]),
        (3, 2, vec!["x1^2 + x2^2"]),
        (3, 3, vec!["x1^2 + x2^2 + x3^2"]),
        (3, 2, vec!["x1^2 + x2^2", "x1^2 + x1*x2 - x2^2"]),
        (3, 3, vec!["x1*x2 - x3^2"]),
        (3, 3, vec!["x1^3 + x2^3 + x3^3"]),
        (3, 3, vec!["x1", "x2^2", "x1*x3 + x2^2"]),
        (3, 3, vec!["x1*x2*x3"]),
        (3, 3, vec!["x1^2 - x2*x3", "x2^2 - x1*x3"]),
        (3, 4, vec!["x1*x2 + x3*x4"]),
        (3, 3, vec!["x1 + x2", "x1^2*x2 + x3^3"]),
    ]
}

fn descent_soundness(budget: &Budget) -> Result<(bool, String), Error> {
    let fixtures = descent_fixtures();
    let (mut sound, mut regular, mut maximal_complete) = (0, 0, 0);
    for (p, n, gens) in &fixtures {
        let forms: Vec<Form<PrimeField>> = gens.iter().map(|s| form(*p, *n, s)).collect();
        let v = GradedSpace::from_forms(gf(*p), *n, forms)?;
        let opts = DescentOptions::default();
        let mut fixture_ok = true;
        for policy in [
            ThresholdPolicy::Maximal { max_k: *n as u64 },
            ThresholdPolicy::uniform(1, 2..=3),
        ] {
            let t = small_subalgebra(&v, &policy, &opts, budget)?;
            for f in v.basis() {
                fixture_ok &= subalgebra_membership(f.poly(), &t.final_generators, budget)?;
            }
            fixture_ok &= !matches!(t.stop, StopReason::StepLimit | StopReason::BudgetExceeded);
            if matches!(policy, ThresholdPolicy::Maximal { .. }) && t.complete {
                maximal_complete += 1;
                if is_regular_sequence(&t.final_generators, budget)? {
                    regular += 1;
                } else {
                    fixture_ok = false;
                }
            }
        }
        sound += fixture_ok as usize;
    }
    let total = fixtures.len();
    Ok((
        sound == total && maximal_complete == total,
        format!(
            "{sound}/{total} fixtures sound under both policies; {regular}/{maximal_complete} completed maximal runs give regular sequences"
        ),
    ))
}

fn closed_forms(_: &Budget) -> Result<(bool, String), Error> {
    let checks = [
        ("quadric_B(3) = 20", quadric_b(3)? == 20),
        ("quadric_B(4) = 68", quadric_b(4)? == 68),
        ("quadric_thresholds(1, 1) = (0, 1)", quadric_thresholds(1, 1)? == (0, 1)),
        ("quadric_thresholds(3, 2) = (2, 3)", quadric_thresholds(3, 2)? == (2, 3)),
        ("quadric_thresholds(2, 3) = (1, 3)", quadric_thresholds(2, 3)? == (1, 3)),
        ("cubic (0,0,1) char 0 = (0,2,14)", cubic_eta_a(0, 0, 1, 1, Characteristic::Zero)? == [0, 2, 14]),
        ("cubic (0,0,1) char 3 = (0,2,15)", cubic_eta_a(0, 0, 1, 1, Characteristic::Three)? == [0, 2, 15]),
        ("cubic (0,1,1) char 0 = (0,3,65)", cubic_eta_a(0, 1, 1, 1, Characteristic::Zero)? == [0, 3, 65]),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let detail = if failed.is_empty() {
        format!("{}/{} values exact", checks.len(), checks.len())
    } else {
        format!("mismatch: {}", failed.join(", "))
    };
    Ok((failed.is_empty(), detail))
}

fn leading_forms(budget: &Budget) -> Result<(bool, String), Error> {
    let got = leading_form_ideal(&[parse(5, 2, "x1"), parse(5, 2, "x1*x2 + x2^2")], budget)?;
    let want = Ideal::new(gf(5), 2, vec![parse(5, 2, "x1"), parse(5, 2, "x2^2")])?;
    let fixture = got.contains_ideal(&want, budget)? && want.contains_ideal(&got, budget)?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut ok, mut tried) = (0, 0);
    for _ in 0..20 {
        let n = 3;
        let k = rng.gen_range(2..=3usize);
        let gens: Vec<P> = (0..k)
            .map(|_| loop {
                let g = random_poly(&mut rng, 5, n, 0..=2, 0.35);
                if g.total_degree().is_some_and(|d| d > 0) && !g.is_homogeneous() {
                    break g;
                }
            })
            .collect();
        let lf = leading_form_ideal(&gens, budget)?;
        for _ in 0..50 {
            let mut h = Polynomial::zero(gf(5), n);
            for g in &gens {
                h = &h + &(&random_poly(&mut rng, 5, n, 0..=1, 0.5) * g);
            }
            let Some(d) = h.total_degree() else { continue };
            tried += 1;
            if lf.contains(&h.homogeneous_component(d), budget)? {
                ok += 1;
            }
        }
    }
    Ok((
        fixture && ok == tried,
        format!("fixture {}; {ok}/{tried} leading forms of random members contained", if fixture { "equal" } else { "differs" }),
    ))
}

fn resolutions(budget: &Budget) -> Result<(bool, String), Error> {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut check = |gens: Vec<P>, expect: Option<usize>, label: String| -> Result<(), Error> {
        let n = gens[0].nvars();
        let m = SubmoduleOfFree::from_ideal(*gens[0].field(), n, &gens)?;
        let res = free_resolution(&m, budget)?;
        let mut complex = true;
        for w in res.matrices.windows(2) {
            complex &= w[0].mul(&w[1])?.is_zero();
        }
        let pd = projective_dimension(&m, budget)?;
        let good = complex && res.length() <= n && expect.is_none_or(|e| e == pd);
        ok &= good;
        if !good {
            notes.push(format!("{label}: pdim {pd}, complex {complex}"));
        }
        Ok(())
    };
    for c in 1..=5 {
        let gens = (0..c).map(|i| Polynomial::var(gf(2), 5, i)).collect();
        check(gens, Some(c), format!("c={c}"))?;
    }
    check(vec![parse(7, 2, "x1^2"), parse(7, 2, "x1*x2")], Some(2), "(x^2, xy)".into())?;
    check(vec![parse(3, 3, "x1*x2"), parse(3, 3, "x1*x3"), parse(3, 3, "x2*x3")], Some(2), "edge ideal".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for s in 0..5 {
        let gens = (0..3).map(|_| random_form(&mut rng, 5, 3, 2, 0.4)).collect();
        check(gens, None, format!("random {s}"))?;
    }
    let detail = if ok {
        "pdim(R/(x1..xc)) = c for c <= 5, pdim(K[x,y]/(x^2,xy)) = 2; 12 resolutions are complexes of length <= N".into()
    } else {
        notes.join("; ")
    };
    Ok((ok, detail))
}
