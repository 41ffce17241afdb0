//! Product scenarios: `P_1 × P_2` against cross and cup products, and
//! stabilisation by `ℝ` factors.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::checks::{context, standard_cycle, Outcome};
use super::config::Scenario;
use super::report::{CheckRecord, Value};
use crate::chain::{alexander_whitney, evaluate, tensor_complex, BarCell, BarResolution, ProductCell, ResChain, Resolution};
use crate::coefficients::{cross_product, cup_product};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::slant::{AlphaMap, ProductContext, SlantContext, SupportCocycle};

fn ctx_with(alpha: AlphaMap, seed: u64, attempt: u64) -> Result<Arc<SlantContext>> {
    Ok(Arc::new(SlantContext::new(alpha, seed, attempt)?))
}

pub fn product_theorem(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    if group.rank() != 2 {
        return Err(Error::Config(format!("{}: the product theorem scenario is set up on Z^2", s.name)));
    }
    // values of the second cocycle on the two generators
    let f2 = vec![s.param_or("g1", 1), s.param_or("g2", -1)];
    let a = context(s, group, attempt)?;
    let b = ctx_with(AlphaMap::cocycle(group, f2)?, s.seed.wrapping_add(1), attempt)?;
    let (za, zb) = (standard_cycle(&a)?, standard_cycle(&b)?);
    let joint = ProductContext::new(a.clone(), b.clone())?.slant(&za, &zb)?;
    let (ua, ub) = (a.slant(&za)?, b.slant(&zb)?);
    let bar = BarResolution::new(group.clone(), s.radius);
    let prod = Arc::new(tensor_complex(bar.clone(), bar.clone(), s.radius)?);
    let crossed = cross_product(prod.clone(), ua.clone(), ub.clone());
    let ball = group.ball(s.radius)?;
    let shifts = group.ball(1)?;
    let (mut agree, mut total, mut nonzero) = (0usize, 0usize, 0usize);
    for g in &ball {
        for h in &ball {
            for shift in &shifts {
                let cell = ProductCell { left: BarCell(vec![g.clone()]), shift: shift.clone(), right: BarCell(vec![h.clone()]) };
                let lhs = joint.value(&cell)?;
                total += 1;
                agree += usize::from(lhs == crossed.value(&cell)?);
                nonzero += usize::from(!lhs.is_zero());
            }
        }
    }
    let bar = Arc::new(bar);
    let cup = cup_product(bar.clone(), ua.clone(), ub);
    let (mut cup_agree, mut cup_total) = (0usize, 0usize);
    for g in &ball {
        for h in &ball {
            let cell = bar.inhomogeneous(&[g.clone(), h.clone()]);
            let aw = alexander_whitney(&bar, &ResChain::cell(group, cell.clone()));
            let lhs = evaluate(group, joint.as_ref(), &aw)?;
            cup_total += 1;
            cup_agree += usize::from(lhs == cup.value(&cell)?);
        }
    }
    let unit = unit_check(s, group, &a, &ua, attempt)?;
    let checks = vec![
        CheckRecord::new("cross_product", agree == total && nonzero > 0, Value::int(agree as u64))
            .detail("cells", Value::int(total as u64))
            .detail("nonzero", Value::int(nonzero as u64)),
        CheckRecord::new("cup_product", cup_agree == cup_total, Value::int(cup_agree as u64))
            .detail("cells", Value::int(cup_total as u64)),
        unit,
    ];
    Ok(Outcome { checks, point: a.omega().point().clone() })
}

/// `ctx × point` reproduces `ctx`, and `point × point` gives `1`.
fn unit_check(
    s: &Scenario,
    group: &Group,
    a: &Arc<SlantContext>,
    ua: &crate::chain::SharedCochain<BarCell>,
    attempt: u64,
) -> Result<CheckRecord> {
    let point = ctx_with(AlphaMap::point(group), s.seed, attempt)?;
    let zp = point.space().fundamental_cycle()?;
    let za = standard_cycle(a)?;
    let joint = ProductContext::new(a.clone(), point.clone())?.slant(&za, &zp)?;
    let mut bad = 0usize;
    let ball = group.ball(s.radius)?;
    for g in &ball {
        for shift in group.ball(1)? {
            let cell = ProductCell { left: BarCell(vec![g.clone()]), shift, right: BarCell(Vec::new()) };
            bad += usize::from(joint.value(&cell)? != ua.value(&cell.left)?);
        }
    }
    let both = ProductContext::new(point.clone(), point)?.slant(&zp, &zp)?;
    let one = both.value(&ProductCell { left: BarCell(Vec::new()), shift: group.identity(), right: BarCell(Vec::new()) })?;
    let ok = bad == 0 && one.as_integer() == Some(BigInt::from(1));
    Ok(CheckRecord::new("point_unit", ok, Value::int(bad as u64)).detail("point_times_point", Value::Int(one.as_integer().unwrap_or_default())))
}

pub fn large_n(s: &Scenario, group: &Group, attempt: u64) -> Result<Outcome> {
    let base = context(s, group, attempt)?;
    let z = standard_cycle(&base)?;
    let extra = SupportCocycle::generic(2, s.seed.wrapping_add(7), attempt);
    let extra: Vec<BigRational> = extra.point().clone();
    let once = base.product_with_line(extra[0].clone());
    let twice = once.product_with_line(extra[1].clone());
    let bar = BarResolution::new(group.clone(), s.res_radius);
    let degree = base.slant_degree(z.degree)?;
    let cells = bar.generators(degree)?;
    let mut bad = [0usize; 2];
    let mut values = Vec::new();
    for c in &cells {
        let v = base.slant_value(&z, c)?;
        bad[0] += usize::from(once.slant_value(&z, c)? != v);
        bad[1] += usize::from(twice.slant_value(&z, c)? != v);
        values.push(v);
    }
    let nonzero = values.iter().filter(|v| !v.is_zero()).count();
    let zero = crate::chain::InvariantChain::zero(z.degree, z.tag.clone());
    let zero_ok = cells.iter().all(|c| twice.slant_value(&zero, c).map(|v| v.is_zero()).unwrap_or(false));
    let checks = vec![
        CheckRecord::new("once", bad[0] == 0 && nonzero > 0, Value::int(bad[0] as u64))
            .detail("target_dim", Value::int(once.target_dim() as u64))
            .detail("cells", Value::int(cells.len() as u64)),
        CheckRecord::new("twice", bad[1] == 0, Value::int(bad[1] as u64)).detail("target_dim", Value::int(twice.target_dim() as u64)),
        CheckRecord::new("zero_chain", zero_ok, Value::Bool(zero_ok)),
    ];
    Ok(Outcome { checks, point: twice.omega().point().clone() })
}
