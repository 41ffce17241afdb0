//! Scenarios that need no slant: the class `δ(1)`, coinvariant ranks and
//! solved coefficient maps.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::checks::Outcome;
use super::config::Scenario;
use super::report::{CheckRecord, Value};
use crate::chain::{bar_homology_cycles, pair_cochain_cycle, BarCell, BarResolution, CellId, FreeZGComplex, LazyCochain};
use crate::coefficients::{
    augmentation_cocycle, berstein_schwarz, coinvariants_rank, connecting_cohomology, equivariance_defects, pushforward,
    solve_coefficient_hom, CoefficientFunctional, ShortExactSeq,
};
use crate::error::{Error, Result};
use crate::group::{Family, Group, GroupRingElement, ModuleTag, TensorElement};

pub fn bs_class(s: &Scenario, group: &Group) -> Result<Outcome> {
    let aug = ShortExactSeq::augmentation();
    let kernel = ModuleTag::aug_power(1);
    let bar = Arc::new(BarResolution::new(group.clone(), s.res_radius));
    let delta_one = connecting_cohomology(bar.clone(), augmentation_cocycle(bar.clone())?, &aug)?;
    let beta = berstein_schwarz(bar.clone())?;
    let (mut agree, mut in_kernel, mut total) = (0usize, 0usize, 0usize);
    for g in group.ball(s.res_radius)? {
        let cell = BarCell(vec![g.clone()]);
        let v = delta_one.value(&cell)?;
        // closed form: [e, g] ↦ g - 1
        let oracle = TensorElement::from_ring(&GroupRingElement::augmentation_generator(group, &g));
        total += 1;
        agree += usize::from(v == oracle && beta.value(&cell)? == v);
        in_kernel += usize::from(v.belongs_to(&kernel));
    }
    let cellular = match group.spec().family() {
        Family::FreeAbelian(_) => FreeZGComplex::koszul(group)?,
        Family::Free(_) => FreeZGComplex::wedge_of_circles(group)?,
    };
    let d1 = cellular.differential(1).cloned().unwrap_or_default();
    let cellular = Arc::new(cellular);
    let cell_delta = connecting_cohomology(cellular.clone(), augmentation_cocycle(cellular.clone())?, &aug)?;
    let cell_beta = berstein_schwarz(cellular.clone())?;
    let (mut c_agree, mut c_kernel) = (0usize, 0usize);
    let edges = cellular.rank(1);
    for j in 0..edges {
        let cell = CellId { degree: 1, index: j };
        let v = cell_delta.value(&cell)?;
        // lifting 1 to e on every vertex, the image is the column sum of ∂_1
        let oracle = d1.iter().fold(GroupRingElement::zero(), |acc, row| &acc + &row[j]);
        c_agree += usize::from(v == TensorElement::from_ring(&oracle) && cell_beta.value(&cell)? == v);
        c_kernel += usize::from(v.belongs_to(&kernel));
    }
    let checks = vec![
        CheckRecord::new("bar", agree == total, Value::int(agree as u64)).detail("cells", Value::int(total as u64)),
        CheckRecord::new("bar_kernel", in_kernel == total, Value::int(in_kernel as u64)),
        CheckRecord::new("cellular", c_agree == edges, Value::int(c_agree as u64)).detail("cells", Value::int(edges as u64)),
        CheckRecord::new("cellular_kernel", c_kernel == edges, Value::int(c_kernel as u64)),
    ];
    Ok(Outcome { checks, point: Vec::new() })
}

pub fn coinvariants(s: &Scenario, group: &Group, radius: usize) -> Result<Outcome> {
    let r = coinvariants_rank(group, &s.module, radius)?;
    let checks = vec![
        CheckRecord::new("rank", true, Value::int(r.at_radius as u64)).detail("module", Value::text(s.module.to_string())),
        CheckRecord::new("stable", r.stable(), Value::Bool(r.stable()))
            .detail("at_radius", Value::int(r.at_radius as u64))
            .detail("at_next_radius", Value::int(r.at_next_radius as u64)),
    ];
    Ok(Outcome { checks, point: Vec::new() })
}

/// The integer cocycle `x_0 ∪ ... ∪ x_{k-1}` of coordinate functions.
fn coordinate_product(group: &Group, k: usize) -> LazyCochain<BarCell> {
    let g = group.clone();
    LazyCochain::new(k, ModuleTag::integers(), move |c: &BarCell| {
        let verts = c.vertices(&g);
        let mut acc = BigInt::one();
        for i in 0..k {
            let step = g.left_divide(&verts[i], &verts[i + 1]);
            acc *= g.abelianize(&step)[i];
        }
        Ok(TensorElement::integer(acc))
    })
}

/// Pairings `⟨φ_* β^k, w⟩` over the standard cycles, for `φ` solved on `ball(radius)`.
pub fn solved_pairings(group: &Group, k: usize, radius: usize) -> Result<(Vec<BigInt>, usize)> {
    let bar = Arc::new(BarResolution::new(group.clone(), radius));
    let target = coordinate_product(group, k);
    let cycles = bar_homology_cycles(&bar, k);
    let phi = solve_coefficient_hom(bar.clone(), k, radius, &target, &cycles)?;
    let defects = equivariance_defects(&phi)?;
    let phi: Arc<dyn CoefficientFunctional> = Arc::new(phi);
    let pushed = pushforward(phi, group.clone(), crate::coefficients::beta_power(bar.clone(), k)?)?;
    let pairings = cycles.iter().map(|w| pair_cochain_cycle(bar.as_ref(), pushed.as_ref(), w)).collect::<Result<Vec<_>>>()?;
    Ok((pairings, defects))
}

pub fn beta_nonvanishing(s: &Scenario, group: &Group, radius: usize) -> Result<Outcome> {
    let k = s.param_or("k", 1) as usize;
    if k == 0 || k > group.rank() || !group.is_abelian() {
        return Err(Error::Config(format!("{}: needs Z^d with 1 <= k <= d", s.name)));
    }
    let (pairings, defects) = solved_pairings(group, k, radius)?;
    let first = pairings[0].clone();
    let checks = vec![
        CheckRecord::new("fundamental_pairing", first.abs().is_one(), Value::Int(first)).detail("k", Value::int(k as u64)),
        CheckRecord::new("pairings", true, Value::ints(&pairings)),
        CheckRecord::new("equivariant", defects == 0, Value::int(defects as u64)),
    ];
    Ok(Outcome { checks, point: Vec::new() })
}
