//! The slant map `z ↦ ⟨ω, ᾱ_*(Δ × z)⟩` from invariant locally finite chains
//! on `P` to equivariant cochains on the bar resolution.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::alpha::{AlphaMap, Point};
use super::omega::SupportCocycle;
use super::space::ParameterSpace;
use super::staircase::{product_simplices, staircase};
use crate::chain::{BarCell, BarResolution, EquivariantCochain, InvariantChain, LazyCochain, Resolution, SharedCochain};
use crate::error::{Error, Result};
use crate::group::{GroupElement, TensorElement};

/// One translate `γ·σ` meeting the support of `ω` after pushing forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportTerm {
    pub orbit: usize,
    pub translate: GroupElement,
    pub weight: i64,
}

#[derive(Debug, Clone)]
pub struct SlantContext {
    alpha: AlphaMap,
    space: Arc<ParameterSpace>,
    omega: SupportCocycle,
    /// Number of `ℝ` factors (trivial action, identity map) appended to `P`.
    line_factors: usize,
}

impl SlantContext {
    pub fn new(alpha: AlphaMap, seed: u64, attempt: u64) -> Result<Self> {
        let omega = SupportCocycle::generic(alpha.dim(), seed, attempt);
        Self::with_omega(alpha, omega)
    }

    pub fn with_omega(alpha: AlphaMap, omega: SupportCocycle) -> Result<Self> {
        if omega.dim() != alpha.dim() {
            return Err(Error::Validation(format!("ω lives in dimension {}, α in {}", omega.dim(), alpha.dim())));
        }
        let space = Arc::new(ParameterSpace::new(&alpha)?);
        Ok(Self { alpha, space, omega, line_factors: 0 })
    }

    /// Replaces `P` by `P × ℝ` and `ω` by `ω × [p_0]`.
    pub fn product_with_line(&self, p0: BigRational) -> Self {
        let mut point = self.omega.point().clone();
        point.push(p0);
        Self {
            alpha: self.alpha.clone(),
            space: self.space.clone(),
            omega: SupportCocycle::new(point),
            line_factors: self.line_factors + 1,
        }
    }

    pub fn alpha(&self) -> &AlphaMap {
        &self.alpha
    }

    pub fn space(&self) -> &ParameterSpace {
        &self.space
    }

    pub fn omega(&self) -> &SupportCocycle {
        &self.omega
    }

    pub fn line_factors(&self) -> usize {
        self.line_factors
    }

    /// Dimension `n` of the target of `α`.
    pub fn target_dim(&self) -> usize {
        self.alpha.dim() + self.line_factors
    }

    /// Degree of the slant of a `k`-chain of `P` (before line factors).
    pub fn slant_degree(&self, chain_degree: usize) -> Result<usize> {
        self.alpha
            .dim()
            .checked_sub(chain_degree)
            .ok_or(Error::DegreeMismatch { expected: self.alpha.dim(), found: chain_degree })
    }

    /// Translation vectors `v ∈ A(Γ)` for which `ᾱ(Δ × (v + σ))` can meet `p`.
    pub(crate) fn window(&self, targets: &[Vec<i64>], verts: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let dim = self.alpha.dim();
        let scale = BigRational::from_integer(BigInt::from(self.alpha.scale()));
        let mut ranges = Vec::with_capacity(dim);
        for c in 0..dim {
            let amin = targets.iter().map(|a| a[c]).min().unwrap_or(0);
            let amax = targets.iter().map(|a| a[c]).max().unwrap_or(0);
            let xmin = verts.iter().map(|x| x[c]).min().unwrap_or(0);
            let xmax = verts.iter().map(|x| x[c]).max().unwrap_or(0);
            let sp = &self.omega.point()[c] * &scale;
            let lo = (BigRational::from_integer(BigInt::from(amin - xmax)) - &sp).ceil().to_integer();
            let hi = (BigRational::from_integer(BigInt::from(amax - xmin)) - &sp).floor().to_integer();
            ranges.push((lo.to_i64().expect("small window"), hi.to_i64().expect("small window")));
        }
        let mut out = vec![Vec::new()];
        for (lo, hi) in ranges {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (lo..=hi).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.retain(|v| self.space.in_lattice(v));
        out
    }

    /// Oriented affine pieces of `ᾱ(Δ × (v + σ))`, one per staircase simplex.
    pub(crate) fn image_pieces(&self, gammas: &[GroupElement], verts: &[Vec<i64>], shift: &[i64]) -> Vec<(Vec<Point>, i8)> {
        let scale = BigInt::from(self.alpha.scale());
        let image = |i: usize, j: usize| -> Point {
            let a = self.alpha.translation_vector(&gammas[i]);
            a.iter()
                .zip(&verts[j])
                .zip(shift)
                .map(|((a, x), v)| BigRational::new(BigInt::from(a - x - v), scale.clone()))
                .collect()
        };
        let k = gammas.len() - 1;
        let m = verts.len() - 1;
        let mut pieces: Vec<(Vec<Point>, i8)> = staircase(k, m)
            .into_iter()
            .map(|p| (p.vertices.iter().map(|&(i, j)| image(i, j)).collect(), p.sign))
            .collect();
        let dim = self.alpha.dim();
        for f in 0..self.line_factors {
            let base = self.omega.point()[dim + f].floor().to_integer();
            let mut next = Vec::new();
            for (piece, s) in &pieces {
                for d in -1i64..=1 {
                    let lo = BigRational::from_integer(&base + d);
                    let hi = &lo + BigRational::from_integer(BigInt::from(1));
                    for (q, t) in product_simplices(piece, &[vec![lo.clone()], vec![hi]]) {
                        next.push((q, s * t));
                    }
                }
            }
            pieces = next;
        }
        pieces
    }

    /// `Σ sign · ω(S)` over the pieces `S` of `ᾱ(Δ × (v + σ))`.
    fn weight(&self, gammas: &[GroupElement], verts: &[Vec<i64>], shift: &[i64]) -> Result<i64> {
        let pieces = self.image_pieces(gammas, verts, shift);
        let mut total = 0i64;
        for (piece, s) in &pieces {
            total += i64::from(*s) * i64::from(self.omega.eval(piece)?);
        }
        Ok(total)
    }

    /// The translates `γ·σ` of one orbit that contribute to the slant on `Δ`.
    pub fn support_enumerate(&self, cell: &BarCell, degree: usize, orbit: usize) -> Result<Vec<SupportTerm>> {
        self.support_on_vertices(&cell.vertices(self.alpha.group()), degree, orbit)
    }

    fn support_on_vertices(&self, gammas: &[GroupElement], degree: usize, orbit: usize) -> Result<Vec<SupportTerm>> {
        let targets: Vec<Vec<i64>> = gammas.iter().map(|g| self.alpha.translation_vector(g)).collect();
        let verts = self.space.representative(degree, orbit);
        let mut out = Vec::new();
        for v in self.window(&targets, &verts) {
            let w = self.weight(gammas, &verts, &v)?;
            if w != 0 {
                out.push(SupportTerm { orbit, translate: self.space.preimage(&v)?, weight: w });
            }
        }
        Ok(out)
    }

    /// Value of the slant of `z` on a bar generator of complementary degree.
    pub fn slant_value(&self, z: &InvariantChain, cell: &BarCell) -> Result<TensorElement> {
        self.slant_on_vertices(z, &cell.vertices(self.alpha.group()))
    }

    /// Value on an arbitrary simplex `[γ_0, ..., γ_k]` of `EΓ`, computed
    /// directly rather than through equivariance.
    pub fn slant_on_vertices(&self, z: &InvariantChain, gammas: &[GroupElement]) -> Result<TensorElement> {
        let expected = self.slant_degree(z.degree)?;
        if gammas.len() != expected + 1 {
            return Err(Error::DegreeMismatch { expected, found: gammas.len().saturating_sub(1) });
        }
        let group = self.alpha.group();
        let mut acc = TensorElement::zero(z.tag.order());
        for (orbit, lam) in z.coefficients() {
            for t in self.support_on_vertices(gammas, z.degree, orbit)? {
                acc = &acc + &lam.act(group, &t.translate).scale(&BigInt::from(t.weight));
            }
        }
        Ok(acc)
    }

    /// The slant of `z` as a lazily evaluated cochain.
    pub fn slant(self: &Arc<Self>, z: &InvariantChain) -> Result<SharedCochain<BarCell>> {
        let degree = self.slant_degree(z.degree)?;
        let ctx = self.clone();
        let z = z.clone();
        let tag = z.tag.clone();
        Ok(LazyCochain::new(degree, tag, move |cell: &BarCell| ctx.slant_value(&z, cell)).shared())
    }

    /// The slant tabulated on all bar generators in the ball, in parallel.
    pub fn tabulate(&self, z: &InvariantChain, bar: &BarResolution) -> Result<EquivariantCochain<BarCell>> {
        let degree = self.slant_degree(z.degree)?;
        let cells = bar.generators(degree)?;
        let values: Vec<(BarCell, TensorElement)> = cells
            .into_par_iter()
            .map(|c| self.slant_value(z, &c).map(|v| (c, v)))
            .collect::<Result<_>>()?;
        EquivariantCochain::new(degree, z.tag.clone(), values.into_iter().collect())
    }

    /// Largest `|α(γ, x)|_∞` over the vertices of `Δ × σ`, for diagnostics.
    pub fn image_extent(&self, cell: &BarCell, degree: usize, orbit: usize) -> BigRational {
        let group = self.alpha.group();
        let mut best = BigRational::zero();
        for g in cell.vertices(group) {
            for x in self.space.representative(degree, orbit) {
                let x: Point = x.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
                for c in self.alpha.eval(&g, &x) {
                    let a = if c < BigRational::zero() { -c } else { c };
                    if a > best {
                        best = a;
                    }
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, ModuleTag};

    fn arc(ctx: SlantContext) -> Arc<SlantContext> {
        Arc::new(ctx)
    }

    #[test]
    fn translation_on_line_gives_sign() {
        let z = Group::free_abelian(1);
        let ctx = SlantContext::new(AlphaMap::translation(&z).unwrap(), 7, 0).unwrap();
        let cyc = ctx.space().fundamental_cycle().unwrap();
        let v = ctx.slant_value(&cyc, &BarCell(Vec::new())).unwrap();
        assert_eq!(v, TensorElement::integer(BigInt::from(-1)));
    }

    #[test]
    fn torus_slant_is_a_sign() {
        let z2 = Group::free_abelian(2);
        let ctx = SlantContext::new(AlphaMap::translation(&z2).unwrap(), 3, 0).unwrap();
        let cyc = ctx.space().fundamental_cycle().unwrap();
        let v = ctx.slant_value(&cyc, &BarCell(Vec::new())).unwrap();
        assert_eq!(v, TensorElement::integer(BigInt::from(1)));
    }

    #[test]
    fn cocycle_recovers_f() {
        let z = Group::free_abelian(1);
        let m = 3;
        let ctx = arc(SlantContext::new(AlphaMap::cocycle(&z, vec![m]).unwrap(), 11, 0).unwrap());
        let vertices = ctx.space().coordinate_cycle(0, 0).unwrap();
        let u = ctx.slant(&vertices).unwrap();
        let t = z.generator(0);
        for j in -3..=3i64 {
            let cell = BarCell(vec![z.pow(&t, j)]);
            let v = u.value(&cell).unwrap().as_integer().unwrap();
            assert_eq!(v, BigInt::from(m * j), "j = {j}");
            let terms = ctx.support_enumerate(&cell, 0, 0).unwrap().len()
                + (1..ctx.space().index()).map(|o| ctx.support_enumerate(&cell, 0, o).unwrap().len()).sum::<usize>();
            assert_eq!(terms as i64, (m * j).abs());
        }
        assert_eq!(u.tag(), &ModuleTag::integers());
    }

    #[test]
    fn line_factor_keeps_value() {
        let z = Group::free_abelian(1);
        let ctx = SlantContext::new(AlphaMap::translation(&z).unwrap(), 5, 0).unwrap();
        let cyc = ctx.space().fundamental_cycle().unwrap();
        let base = ctx.slant_value(&cyc, &BarCell(Vec::new())).unwrap();
        let wide = ctx.product_with_line(BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(wide.target_dim(), 2);
        assert_eq!(wide.slant_value(&cyc, &BarCell(Vec::new())).unwrap(), base);
    }
}
