//! Certified slant classes: the slant cochain together with its pairings
//! against a fixed list of test cycles.

use std::sync::Arc;

use num_bigint::BigInt;

use super::context::SlantContext;
use crate::chain::{invariant_boundary, BarCell, InvariantChain, ResChain, SharedCochain};
use crate::coefficients::{pair_through, CoefficientFunctional};
use crate::error::Result;

pub struct CapReport {
    pub cochain: SharedCochain<BarCell>,
    /// `false` when the input was not a cycle; the output then need not be a cocycle.
    pub input_is_cycle: bool,
    /// `pairings[i][j] = ⟨φ_j ∘ slant, w_i⟩`
    pub pairings: Vec<Vec<BigInt>>,
}

pub fn alpha_cap(
    ctx: &Arc<SlantContext>,
    z: &InvariantChain,
    cycles: &[ResChain<BarCell>],
    functionals: &[&dyn CoefficientFunctional],
) -> Result<CapReport> {
    let input_is_cycle = z.degree == 0 || invariant_boundary(ctx.space().complex(), z)?.is_zero();
    let cochain = ctx.slant(z)?;
    let group = ctx.alpha().group();
    let pairings = cycles
        .iter()
        .map(|w| functionals.iter().map(|phi| pair_through(group, *phi, cochain.as_ref(), w)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(CapReport { cochain, input_is_cycle, pairings })
}

/// Largest deviation of `ᾱ` at the barycentre of `Δ × σ` from the average
/// of its vertex images; zero for maps affine on cells.
pub fn affine_defect(ctx: &SlantContext, cell: &BarCell, degree: usize, orbit: usize) -> num_rational::BigRational {
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};
    let alpha = ctx.alpha();
    let gammas = cell.vertices(alpha.group());
    let verts = ctx.space().representative(degree, orbit);
    let to_point = |x: &Vec<i64>| x.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect::<Vec<_>>();
    let n = BigRational::from_integer(BigInt::from(verts.len() as i64));
    let mut centre = vec![BigRational::zero(); alpha.dim()];
    for x in &verts {
        for (c, v) in centre.iter_mut().zip(to_point(x)) {
            *c += v / &n;
        }
    }
    let weights = vec![BigRational::new(BigInt::from(1), BigInt::from(gammas.len() as i64)); gammas.len()];
    let direct = alpha.eval_barycentric(&gammas, &weights, &centre);
    let mut avg = vec![BigRational::zero(); alpha.dim()];
    let count = BigRational::from_integer(BigInt::from((verts.len() * gammas.len()) as i64));
    for g in &gammas {
        for x in &verts {
            for (a, v) in avg.iter_mut().zip(alpha.eval(g, &to_point(x))) {
                *a += v / &count;
            }
        }
    }
    direct.iter().zip(&avg).map(|(a, b)| (a - b).abs()).max().unwrap_or_else(BigRational::zero)
}
