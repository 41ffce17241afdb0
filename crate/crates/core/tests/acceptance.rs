//! One pass/fail line per acceptance criterion, with wall-clock limits measured
//! on the test profile.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use lipcoh::chain::{
    bar_homology_cycles, coboundary, invariant_boundary, smith_normal_form, BarCell, BarResolution, IntMatrix,
    InvariantChain, Resolution,
};
use lipcoh::group::{Group, GroupElement, ModuleTag, TensorElement};
use lipcoh::scenario::{builtin, checks::point_independence, run_scenario, Kind, Report, Scenario, Value};
use lipcoh::slant::staircase::{pair_boundary, product_chain, product_of_chains, simplex_boundary, SimplexChain};
use lipcoh::slant::{omega_eval, AlphaMap, SlantContext, SupportCocycle};
use lipcoh::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BALL_CAP: usize = 200_000;

type Outcome = Result<(), String>;

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn run_builtin(name: &str) -> Result<Vec<Report>, String> {
    let scenarios = builtin(name).map_err(|e| e.to_string())?;
    Ok(scenarios.iter().map(|s| run_scenario(s, BALL_CAP)).collect())
}

fn all_pass(reports: &[Report]) -> Outcome {
    for r in reports {
        if let Some(e) = &r.error {
            return Err(format!("{}: {e}", r.scenario));
        }
        if let Some(c) = r.checks.iter().find(|c| !c.pass) {
            return Err(format!("{}: check {} failed with {}", r.scenario, c.id, c.value.render()));
        }
    }
    Ok(())
}

fn check_value<'a>(r: &'a Report, id: &str) -> Result<&'a Value, String> {
    r.checks.iter().find(|c| c.id == id).map(|c| &c.value).ok_or_else(|| format!("{}: no check {id}", r.scenario))
}

fn int_value(r: &Report, id: &str) -> Result<BigInt, String> {
    match check_value(r, id)? {
        Value::Int(n) => Ok(n.clone()),
        v => Err(format!("{}: {id} is {}", r.scenario, v.render())),
    }
}

fn crit_zero_dim() -> Outcome {
    let reports = run_builtin("zero_dim_point")?;
    all_pass(&reports)?;
    for r in &reports {
        if int_value(r, "slant_H0")? != BigInt::one() {
            return Err(format!("{}: slant is not the unit", r.scenario));
        }
    }
    if reports.len() != 3 {
        return Err(format!("expected three groups, ran {}", reports.len()));
    }
    Ok(())
}

fn crit_recovery() -> Outcome {
    all_pass(&run_builtin("one_dim_f_recovery")?)?;
    // direct evaluation against m·j
    let z = Group::free_abelian(1);
    let t = z.generator(0);
    for m in 1..=3i64 {
        let ctx = Arc::new(SlantContext::new(AlphaMap::cocycle(&z, vec![m]).map_err(|e| e.to_string())?, 99, 0).map_err(|e| e.to_string())?);
        let cycle = ctx.space().coordinate_cycle(0, 0).map_err(|e| e.to_string())?;
        for j in -3..=3i64 {
            let cell = BarCell(vec![z.pow(&t, j)]);
            let v = ctx.slant_value(&cycle, &cell).map_err(|e| e.to_string())?;
            if v.as_integer() != Some(BigInt::from(m * j)) {
                return Err(format!("m = {m}, j = {j}: got {v:?}"));
            }
            let count: usize = (0..ctx.space().orbit_count(0))
                .map(|o| ctx.support_enumerate(&cell, 0, o).map(|v| v.len()))
                .sum::<lipcoh::Result<usize>>()
                .map_err(|e| e.to_string())?;
            if count != (m * j).unsigned_abs() as usize {
                return Err(format!("m = {m}, j = {j}: {count} contributing translates"));
            }
        }
    }
    Ok(())
}

fn crit_torus() -> Outcome {
    let reports = run_builtin("torus_pd")?;
    all_pass(&reports)?;
    for r in &reports {
        if !int_value(r, "fundamental")?.abs().is_one() {
            return Err(format!("{}: fundamental pairing is not ±1", r.scenario));
        }
        if r.fingerprint.res_radius < 3 {
            return Err(format!("{}: resolution radius {} below 3", r.scenario, r.fingerprint.res_radius));
        }
    }
    Ok(())
}

fn crit_bs() -> Outcome {
    all_pass(&run_builtin("bs_class_from_connecting")?)?;
    // oracle: on the bar complex β[g] = g - 1 has augmentation 0
    for spec in ["Z", "Z^2", "F_2"] {
        let g = Group::parse(spec).map_err(|e| e.to_string())?;
        let bar = Arc::new(BarResolution::new(g.clone(), 1));
        let beta = lipcoh::coefficients::berstein_schwarz(bar.clone()).map_err(|e| e.to_string())?;
        for cell in bar.generators(1).map_err(|e| e.to_string())? {
            let v = beta.value(&cell).map_err(|e| e.to_string())?;
            let want = TensorElement::from_ring(
                &(&lipcoh::group::GroupRingElement::monomial(cell.0[0].clone())
                    - &lipcoh::group::GroupRingElement::monomial(g.identity())),
            );
            if v != want || !v.belongs_to(&ModuleTag::aug_power(1)) {
                return Err(format!("{spec}: β on {cell:?} is {}", v.format(&g)));
            }
        }
    }
    Ok(())
}

fn crit_boundary_slant() -> Outcome {
    all_pass(&run_builtin("boundary_slant_beta")?)
}

fn crit_naturality() -> Outcome {
    let reports = run_builtin("naturality_square")?;
    all_pass(&reports)?;
    for r in &reports {
        let c = r.checks.iter().find(|c| c.id == "square_commutes").ok_or("no square_commutes check")?;
        let cycles = c.details.iter().find(|(k, _)| k == "cycles").map(|(_, v)| v.render()).unwrap_or_default();
        if cycles.parse::<usize>().map_or(true, |n| n < 20) {
            return Err(format!("{}: only {cycles} cycles tested", r.scenario));
        }
    }
    Ok(())
}

fn crit_product() -> Outcome {
    all_pass(&run_builtin("product_theorem_cochain")?)
}

fn crit_large_n() -> Outcome {
    all_pass(&run_builtin("large_n")?)
}

fn crit_truncated() -> Outcome {
    let reports = run_builtin("coinvariants")?;
    all_pass(&reports)?;
    // oracle: H_1 of Z^d and F_r is free of rank equal to the generator count
    for r in &reports {
        let spec = r.scenario.rsplit('/').next().unwrap_or_default();
        let want = Group::parse(spec).map_err(|e| e.to_string())?.rank();
        if int_value(r, "rank")? != BigInt::from(want) {
            return Err(format!("{}: rank differs from {want}", r.scenario));
        }
    }
    let beta = run_builtin("beta_nonvanishing")?;
    all_pass(&beta)?;
    for r in &beta {
        if !int_value(r, "fundamental_pairing")?.abs().is_one() {
            return Err(format!("{}: pushforward does not pair to ±1", r.scenario));
        }
    }
    for s in builtin("coinvariants").map_err(|e| e.to_string())?.iter().chain(&builtin("beta_nonvanishing").map_err(|e| e.to_string())?) {
        let r = lipcoh::scenario::stability_check(s, BALL_CAP);
        all_pass(std::slice::from_ref(&r))?;
    }
    Ok(())
}

fn snf_postconditions(rng: &mut ChaCha8Rng) -> Outcome {
    for trial in 0..200 {
        let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..6));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..10)).collect()).collect();
        let a = IntMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
        let s = smith_normal_form(&a);
        let uav = s.u.mul(&a).and_then(|m| m.mul(&s.v)).map_err(|e| e.to_string())?;
        let unimodular = |m: &IntMatrix| m.determinant().map(|d| d.abs().is_one()).unwrap_or(false);
        if uav != s.d || !unimodular(&s.u) || !unimodular(&s.v) {
            return Err(format!("matrix {trial}: U·A·V ≠ D or a transform is not unimodular"));
        }
        let diag: Vec<BigInt> = (0..r.min(c)).map(|i| s.d[(i, i)].clone()).collect();
        for w in diag.windows(2) {
            let ok = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            if !ok || w[0].is_negative() {
                return Err(format!("matrix {trial}: diagonal {diag:?} fails divisibility"));
            }
        }
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng, g: &Group) -> GroupElement {
    (0..rng.gen_range(0..4)).fold(g.identity(), |acc, _| {
        let s = g.generator(rng.gen_range(0..g.rank()));
        g.mul_unchecked(&acc, &g.pow(&s, rng.gen_range(-2..=2)))
    })
}

fn boundaries_square_to_zero(rng: &mut ChaCha8Rng) -> Outcome {
    for g in [Group::free_abelian(2), Group::free(2)] {
        let bar = BarResolution::new(g.clone(), 2);
        for _ in 0..40 {
            let verts: Vec<GroupElement> = (0..4).map(|_| random_element(rng, &g)).collect();
            let c = bar.simplex(&verts);
            if !c.boundary(&bar).boundary(&bar).is_zero() {
                return Err(format!("∂∂ ≠ 0 on a bar simplex of {}", g.spec().generator_names().join(",")));
            }
        }
    }
    for d in 1..=3 {
        let ctx = SlantContext::new(AlphaMap::translation(&Group::free_abelian(d)).map_err(|e| e.to_string())?, 1, 0)
            .map_err(|e| e.to_string())?;
        let gc = ctx.space().complex();
        for k in 2..=d {
            for orbit in 0..ctx.space().orbit_count(k) {
                let z = InvariantChain::new(gc, k, ModuleTag::integers(), [(orbit, TensorElement::one())].into())
                    .map_err(|e| e.to_string())?;
                let dd = invariant_boundary(gc, &invariant_boundary(gc, &z).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                if !dd.is_zero() {
                    return Err(format!("∂∂ ≠ 0 on Kuhn orbit {orbit} in degree {k} of R^{d}"));
                }
            }
        }
    }
    Ok(())
}

fn staircase_compatible() -> Outcome {
    let one = |v: &[usize]| -> SimplexChain { [(v.to_vec(), 1)].into() };
    for k in 0..=4usize {
        for l in 0..=(4 - k) {
            let (left, right): (Vec<usize>, Vec<usize>) = ((0..=k).collect(), (0..=l).collect());
            let mut rhs: BTreeMap<_, i64> = BTreeMap::new();
            if k > 0 {
                for (s, c) in product_of_chains(&simplex_boundary(&one(&left)), &one(&right)) {
                    *rhs.entry(s).or_default() += c;
                }
            }
            if l > 0 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                for (s, c) in product_of_chains(&one(&left), &simplex_boundary(&one(&right))) {
                    *rhs.entry(s).or_default() += sign * c;
                }
            }
            rhs.retain(|_, c| *c != 0);
            if pair_boundary(&product_chain(&left, &right)) != rhs {
                return Err(format!("staircase boundary differs for k = {k}, l = {l}"));
            }
        }
    }
    Ok(())
}

fn omega_cocycle(rng: &mut ChaCha8Rng) -> Outcome {
    let mut tested = 0;
    while tested < 100 {
        let dim = rng.gen_range(1..=3);
        let p = SupportCocycle::generic(dim, rng.gen(), 0);
        let pts: Vec<Vec<BigRational>> = (0..dim + 2)
            .map(|_| (0..dim).map(|_| BigRational::new(BigInt::from(rng.gen_range(-12..=12)), BigInt::from(4))).collect())
            .collect();
        let mut total = 0i64;
        let mut degenerate = false;
        for i in 0..pts.len() {
            let mut face = pts.clone();
            face.remove(i);
            match omega_eval(&face, p.point()) {
                Ok(v) => total += if i % 2 == 0 { i64::from(v) } else { -i64::from(v) },
                Err(Error::GenericityViolation(_)) => degenerate = true,
                Err(e) => return Err(e.to_string()),
            }
        }
        if degenerate {
            continue;
        }
        if total != 0 {
            return Err(format!("ω(∂S) = {total} for {pts:?}"));
        }
        tested += 1;
    }
    Ok(())
}

fn two_points_agree(rng: &mut ChaCha8Rng) -> Outcome {
    let cases = [
        Scenario::new("z", Kind::TorusPd, "Z"),
        Scenario::new("z2", Kind::TorusPd, "Z^2").radii(1, 1),
        Scenario::new("f", Kind::FRecovery, "Z").alpha("cocycle", &[3]),
    ];
    for base in cases {
        let s = Scenario { seed: rng.gen(), ..base };
        let group = Group::new(s.group.clone());
        if !point_independence(&s, &group).map_err(|e| e.to_string())? {
            return Err(format!("{}: generic points disagree at seed {}", s.name, s.seed));
        }
    }
    Ok(())
}

fn plane_chain(ctx: &SlantContext, degree: usize, coeffs: &[i64]) -> Result<InvariantChain, String> {
    let map = coeffs.iter().enumerate().map(|(i, &c)| (i, TensorElement::integer(BigInt::from(c)))).collect();
    InvariantChain::new(ctx.space().complex(), degree, ModuleTag::integers(), map).map_err(|e| e.to_string())
}

fn slant_properties(rng: &mut ChaCha8Rng) -> Outcome {
    let g = Group::free_abelian(2);
    let ctx = Arc::new(SlantContext::new(AlphaMap::translation(&g).map_err(|e| e.to_string())?, 5, 0).map_err(|e| e.to_string())?);
    let gc = ctx.space().complex();
    let bar = Arc::new(BarResolution::new(g.clone(), 2));
    let unit = lipcoh::coefficients::CoordinateFunctional::new(Vec::new());
    let loops = bar_homology_cycles(&bar, 1);
    for _ in 0..8 {
        let a: Vec<i64> = (0..2).map(|_| rng.gen_range(-3..=3)).collect();
        let b: Vec<i64> = (0..2).map(|_| rng.gen_range(-3..=3)).collect();
        let z = plane_chain(&ctx, 1, &a)?;
        let w = plane_chain(&ctx, 2, &b)?;
        let verts = vec![random_element(rng, &g), random_element(rng, &g)];
        let shift = random_element(rng, &g);
        let moved: Vec<GroupElement> = verts.iter().map(|v| g.mul_unchecked(&shift, v)).collect();
        let lhs = ctx.slant_on_vertices(&z, &moved).map_err(|e| e.to_string())?;
        let rhs = ctx.slant_on_vertices(&z, &verts).map_err(|e| e.to_string())?.act(&g, &shift);
        if lhs != rhs {
            return Err("slant cochain is not equivariant".into());
        }
        let dw = invariant_boundary(gc, &w).map_err(|e| e.to_string())?;
        let moved_cycle = z.add(&dw).map_err(|e| e.to_string())?;
        let is_cycle = invariant_boundary(gc, &z).map_err(|e| e.to_string())?.is_zero();
        if is_cycle {
            let du = coboundary(bar.clone(), ctx.slant(&z).map_err(|e| e.to_string())?);
            for cell in bar.generators(2).map_err(|e| e.to_string())? {
                if !du.value(&cell).map_err(|e| e.to_string())?.is_zero() {
                    return Err(format!("δ(slant z) ≠ 0 on {cell:?}"));
                }
            }
        }
        for cyc in &loops {
            let pair = |c: &InvariantChain| -> Result<BigInt, String> {
                let u = ctx.slant(c).map_err(|e| e.to_string())?;
                lipcoh::coefficients::pair_through(&g, &unit, u.as_ref(), cyc).map_err(|e| e.to_string())
            };
            if pair(&z)? != pair(&moved_cycle)? {
                return Err("changing the representative changed a pairing".into());
            }
        }
    }
    Ok(())
}

fn crit_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    snf_postconditions(&mut rng)?;
    boundaries_square_to_zero(&mut rng)?;
    staircase_compatible()?;
    omega_cocycle(&mut rng)?;
    two_points_agree(&mut rng)?;
    slant_properties(&mut rng)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("zero-dimensional class is the unit", Duration::from_secs(1), crit_zero_dim),
        ("cocycle action recovers m·j with |mj| translates", Duration::from_secs(5), crit_recovery),
        ("flat duality on Z and Z^2", Duration::from_secs(60), crit_torus),
        ("connecting image of 1 is the augmentation-ideal class", Duration::from_secs(1), crit_bs),
        ("boundary slant agrees with β up to sign", Duration::from_secs(60), crit_boundary_slant),
        ("naturality square on ≥ 20 cycles", Duration::from_secs(120), crit_naturality),
        ("product slant equals cross and cup products", Duration::from_secs(30), crit_product),
        ("line factors leave slant values unchanged", Duration::from_secs(10), crit_large_n),
        ("coinvariant ranks and β^k nonvanishing, stable in R", Duration::from_secs(120), crit_truncated),
        ("property suites", Duration::from_secs(600), crit_properties),
    ];
    let mut failed = 0;
    for (i, (label, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {:.0?} limit)", limit),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} {verdict} {label} [{:.2?} / {:.0?}]", i + 1, elapsed, limit);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
