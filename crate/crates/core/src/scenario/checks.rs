//! The computation behind each scenario kind.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{Kind, Scenario};
use super::report::{CheckRecord, Value};
use crate::chain::{
    bar_homology_cycles, coboundary, BarCell, BarResolution, InvariantChain, ResChain, Resolution, SharedCochain,
};
use crate::coefficients::{
    berstein_schwarz, connecting_cohomology, connecting_homology, pair_through, CoefficientFunctional,
    CoordinateFunctional, ShortExactSeq,
};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, TensorElement};
use crate::slant::{alpha_cap, AlphaMap, SlantContext, SupportCocycle};

/// Check records plus the generic point used, for the report fingerprint.
pub struct Outcome {
    pub checks: Vec<CheckRecord>,
    pub point: Vec<BigRational>,
}

pub fn run_checks(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    match s.kind {
        Kind::ZeroDimPoint => zero_dim_point(s, group, attempt),
        Kind::FRecovery => f_recovery(s, group, attempt),
        Kind::TorusPd => torus_pd(s, group, attempt),
        Kind::BoundarySlant => boundary_slant_beta(s, group, attempt),
        Kind::Naturality => naturality(s, group, attempt),
        Kind::ProductTheorem => super::product::product_theorem(s, group, attempt),
        Kind::LargeN => super::product::large_n(s, group, attempt),
        Kind::BsClass => super::algebra::bs_class(s, group),
        Kind::Coinvariants => super::algebra::coinvariants(s, group, s.radius),
        Kind::BetaNonvanishing => super::algebra::beta_nonvanishing(s, group, s.radius),
    }
}

pub(crate) fn alpha_for(s: &Scenario, group: &Group) -> Result<AlphaMap> {
    match s.alpha.as_str() {
        "translation" => AlphaMap::translation(group),
        "cocycle" => AlphaMap::cocycle(group, s.f.clone()),
        "point" => Ok(AlphaMap::point(group)),
        other => Err(Error::Config(format!("unknown alpha family {other:?}"))),
    }
}

pub(crate) fn context(s: &Scenario, group: &Group, attempt: u64) -> Result<Arc<SlantContext>> {
    Ok(Arc::new(SlantContext::new(alpha_for(s, group)?, s.seed, attempt)?))
}

/// The fundamental cycle of `P` for translation and point families, the
/// vertex chain `Σ_m [m]` for cocycle families.
pub(crate) fn standard_cycle(ctx: &SlantContext) -> Result<InvariantChain> {
    match ctx.alpha().name() {
        "cocycle" => ctx.space().coordinate_cycle(0, 0),
        _ => ctx.space().fundamental_cycle(),
    }
}

pub(crate) fn integer(t: &TensorElement) -> BigInt {
    t.as_integer().unwrap_or_default()
}

/// `δu` vanishes on every bar generator of the next degree.
fn cocycle_check(id: &str, bar: &Arc<BarResolution>, u: SharedCochain<BarCell>) -> Result<CheckRecord> {
    let cells = bar.generators(u.degree() + 1)?;
    let du = coboundary(bar.clone(), u);
    let bad = cells.iter().map(|c| du.value(c)).collect::<Result<Vec<_>>>()?.iter().filter(|v| !v.is_zero()).count();
    Ok(CheckRecord::new(id, bad == 0, Value::int(bad as u64)).detail("cells", Value::int(cells.len() as u64)))
}

fn zero_dim_point(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    let ctx = Arc::new(SlantContext::new(AlphaMap::point(group), s.seed, attempt)?);
    let z = ctx.space().fundamental_cycle()?;
    let u = ctx.slant(&z)?;
    let v = integer(&u.value(&BarCell(Vec::new()))?);
    let bar = Arc::new(BarResolution::new(group.clone(), s.res_radius));
    let checks = vec![
        CheckRecord::new("slant_H0", v.is_one(), Value::Int(v)),
        cocycle_check("cocycle", &bar, u)?,
    ];
    Ok(Outcome { checks, point: ctx.omega().point().clone() })
}

/// Elements `[e, γ]` to test on: powers of the first generator for `Z`,
/// otherwise the ball.
fn probe_elements(s: &Scenario, group: &Group) -> Result<Vec<GroupElement>> {
    if group.rank() == 1 && group.is_abelian() {
        let j = s.param_or("j_max", 3);
        let t = group.generator(0);
        return Ok((-j..=j).map(|e| group.pow(&t, e)).collect());
    }
    group.ball(s.radius)
}

fn f_recovery(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    let ctx = context(s, group, attempt)?;
    if ctx.alpha().name() != "cocycle" {
        return Err(Error::Config(format!("{}: f recovery needs the cocycle family", s.name)));
    }
    let z = standard_cycle(&ctx)?;
    let u = ctx.slant(&z)?;
    let mut checks = Vec::new();
    for g in probe_elements(s, group)? {
        let cell = BarCell(vec![g.clone()]);
        let f_g = ctx.alpha().translation_vector(&g)[0];
        let v = integer(&u.value(&cell)?);
        let label = group.format_word(&g);
        checks.push(CheckRecord::new(format!("pairing[{label}]"), v == BigInt::from(f_g), Value::Int(v)).detail("f", Value::int(f_g)));
        let mut count = 0usize;
        for orbit in 0..ctx.space().orbit_count(0) {
            count += ctx.support_enumerate(&cell, 0, orbit)?.len();
        }
        let want = f_g.unsigned_abs() as usize;
        checks.push(CheckRecord::new(format!("translates[{label}]"), count == want, Value::int(count as u64)));
    }
    let bar = Arc::new(BarResolution::new(group.clone(), s.res_radius));
    let loops = bar_homology_cycles(&bar, 1);
    let cap = alpha_cap(&ctx, &z, &loops, &[&CoordinateFunctional::new(Vec::new())])?;
    let got: Vec<BigInt> = cap.pairings.iter().map(|p| p[0].clone()).collect();
    let want: Vec<BigInt> = s.f.iter().map(|&x| BigInt::from(x)).collect();
    checks.push(CheckRecord::new("class", got == want, Value::ints(&got)));
    checks.push(cocycle_check("cocycle", &bar, u)?);
    Ok(Outcome { checks, point: ctx.omega().point().clone() })
}

fn torus_pd(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    let ctx = Arc::new(SlantContext::new(AlphaMap::translation(group)?, s.seed, attempt)?);
    let n = group.rank();
    let bar = Arc::new(BarResolution::new(group.clone(), s.res_radius));
    let z = ctx.space().fundamental_cycle()?;
    let u = ctx.slant(&z)?;
    let v = integer(&u.value(&BarCell(Vec::new()))?);
    let mut checks = vec![
        CheckRecord::new("fundamental", v.abs().is_one(), Value::Int(v.clone())).detail("dimension", Value::int(n as u64)),
        cocycle_check("fundamental_cocycle", &bar, u)?,
    ];
    if n == 2 {
        let loops = bar_homology_cycles(&bar, 1);
        let unit = CoordinateFunctional::new(Vec::new());
        let mut matrix = Vec::new();
        for axis in 0..n {
            let idx = ctx.space().edge_chain_index(axis).expect("edge along each axis");
            let za = ctx.space().coordinate_cycle(1, idx)?;
            let cap = alpha_cap(&ctx, &za, &loops, &[&unit])?;
            let row: Vec<BigInt> = cap.pairings.iter().map(|p| p[0].clone()).collect();
            let nonzero = row.iter().filter(|x| !x.is_zero()).count();
            let unit_entry = row.iter().all(|x| x.abs() <= BigInt::one());
            checks.push(CheckRecord::new(format!("dual[axis={axis}]"), nonzero == 1 && unit_entry, Value::ints(&row)));
            checks.push(cocycle_check(&format!("dual_cocycle[axis={axis}]"), &bar, cap.cochain)?);
            matrix.push(row);
        }
        let det = &matrix[0][0] * &matrix[1][1] - &matrix[0][1] * &matrix[1][0];
        checks.push(CheckRecord::new("duality", det.abs().is_one(), Value::Int(det)));
    }
    Ok(Outcome { checks, point: ctx.omega().point().clone() })
}

/// `c·w_0 + Σ ∂(random simplices)` for a fixed cycle `w_0`.
pub(crate) fn random_cycles(
    bar: &BarResolution,
    base: &ResChain<BarCell>,
    degree: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<ResChain<BarCell>>> {
    let group = bar.group();
    let ball = group.ball(bar.radius())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![base.clone()];
    while out.len() < count {
        let mut w = ResChain::zero();
        w.add_chain(base, &BigInt::from(rng.gen_range(-3i64..=3)));
        for _ in 0..rng.gen_range(1..=3) {
            let verts: Vec<GroupElement> = (0..=degree + 1).map(|_| ball[rng.gen_range(0..ball.len())].clone()).collect();
            let c = BigInt::from(rng.gen_range(-2i64..=2));
            w.add_chain(&bar.simplex(&verts).boundary(bar), &c);
        }
        out.push(w);
    }
    Ok(out)
}

/// Pairings of two cochains through several functionals, compared up to
/// one global sign. Returns (pass, sign, lhs, rhs).
pub(crate) fn compare_up_to_sign(
    group: &Group,
    lhs: &SharedCochain<BarCell>,
    rhs: &SharedCochain<BarCell>,
    cycles: &[ResChain<BarCell>],
    functionals: &[CoordinateFunctional],
) -> Result<(bool, i64, Vec<BigInt>, Vec<BigInt>)> {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for w in cycles {
        for phi in functionals {
            a.push(pair_through(group, phi as &dyn CoefficientFunctional, lhs.as_ref(), w)?);
            b.push(pair_through(group, phi as &dyn CoefficientFunctional, rhs.as_ref(), w)?);
        }
    }
    let sign = a.iter().zip(&b).find(|(_, y)| !y.is_zero()).map_or(0, |(x, y)| if x == y { 1 } else { -1 });
    let pass = sign != 0 && a.iter().zip(&b).all(|(x, y)| *x == y * BigInt::from(sign));
    Ok((pass, sign, a, b))
}

fn boundary_slant_beta(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    let ctx = Arc::new(SlantContext::new(AlphaMap::translation(group)?, s.seed, attempt)?);
    let n = group.rank();
    let gc = ctx.space().complex();
    let z1 = ctx.space().fundamental_cycle()?;
    let z2 = connecting_homology(gc, &z1, &ShortExactSeq::augmentation())?;
    let lhs = ctx.slant(&z2)?;
    let bar = Arc::new(BarResolution::new(group.clone(), s.res_radius));
    let beta = berstein_schwarz(bar.clone())?;
    let mut cycles = Vec::new();
    for (i, w) in bar_homology_cycles(&bar, 1).iter().enumerate() {
        cycles.extend(random_cycles(&bar, w, 1, s.param_or("cycles", 6) as usize, s.seed ^ i as u64)?);
    }
    let phis: Vec<CoordinateFunctional> = (0..n).map(|i| CoordinateFunctional::new(vec![i])).collect();
    let (pass, sign, a, b) = compare_up_to_sign(group, &lhs, &beta, &cycles, &phis)?;
    let checks = vec![
        CheckRecord::new("pairings_agree", pass, Value::int(sign))
            .detail("slant", Value::ints(&a))
            .detail("beta", Value::ints(&b))
            .detail("cycles", Value::int(cycles.len() as u64)),
        cocycle_check("slant_cocycle", &bar, lhs)?,
    ];
    Ok(Outcome { checks, point: ctx.omega().point().clone() })
}

fn naturality(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    let ctx = Arc::new(SlantContext::new(AlphaMap::translation(group)?, s.seed, attempt)?);
    let n = group.rank();
    if n != 2 {
        return Err(Error::Config(format!("{}: the naturality square is set up on Z^2", s.name)));
    }
    let gc = ctx.space().complex();
    let ses2 = ShortExactSeq::new(2)?;
    let z1 = ctx.space().fundamental_cycle()?;
    let z2 = connecting_homology(gc, &z1, &ShortExactSeq::augmentation())?;
    let z3 = connecting_homology(gc, &z2, &ses2)?;
    let bar = Arc::new(BarResolution::new(group.clone(), s.res_radius));
    let lower = ctx.slant(&z3)?;
    let upper = connecting_cohomology(bar.clone(), ctx.slant(&z2)?, &ses2)?;
    let torus = bar_homology_cycles(&bar, 2).remove(0);
    let count = s.param_or("cycles", 24) as usize;
    let cycles = random_cycles(&bar, &torus, 2, count, s.seed)?;
    let phis: Vec<CoordinateFunctional> =
        [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(i, j)| CoordinateFunctional::new(vec![i, j])).collect();
    let (pass, sign, a, b) = compare_up_to_sign(group, &lower, &upper, &cycles, &phis)?;
    let beta = berstein_schwarz(bar.clone())?;
    let beta_sq = connecting_cohomology(bar.clone(), beta, &ses2)?;
    let on_torus = pair_through(group, &phis[1], beta_sq.as_ref(), &torus)?;
    let checks = vec![
        CheckRecord::new("square_commutes", pass && cycles.len() >= 20, Value::int(sign))
            .detail("slant_of_boundary", Value::ints(&a))
            .detail("coboundary_of_slant", Value::ints(&b))
            .detail("cycles", Value::int(cycles.len() as u64)),
        CheckRecord::new("beta_squared_on_torus", on_torus.abs().is_one(), Value::Int(on_torus)),
    ];
    Ok(Outcome { checks, point: ctx.omega().point().clone() })
}

/// Two independent generic points give the same slant on every generator.
pub fn point_independence(s: &Scenario, group: &Group) -> Result<bool> {
    let alpha = alpha_for(s, group)?;
    let a = SlantContext::with_omega(alpha.clone(), SupportCocycle::generic(alpha.dim(), s.seed, 0))?;
    let b = SlantContext::with_omega(alpha.clone(), SupportCocycle::generic(alpha.dim(), s.seed.wrapping_add(1), 0))?;
    let z = standard_cycle(&a)?;
    let bar = BarResolution::new(group.clone(), s.res_radius);
    let ta = a.tabulate(&z, &bar)?;
    let tb = b.tabulate(&z, &bar)?;
    Ok(ta.table() == tb.table())
}
