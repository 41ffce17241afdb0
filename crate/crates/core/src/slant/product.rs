//! Slant products for `P_1 × P_2` with the diagonal action and
//! `α = α_1 × α_2`, evaluated on the tensor product of two bar resolutions.
//!
//! Each `Δ_1 ⊗ gΔ_2` is paired with `σ_1 × σ_2` in the order
//! `(Δ_1 × σ_1) × (gΔ_2 × σ_2)`, and `ω_1 × ω_2` is evaluated on the
//! staircase pieces of the product of the two image simplices.

use std::sync::Arc;

use num_bigint::BigInt;

use super::context::SlantContext;
use super::omega::omega_eval;
use super::staircase::product_simplices;
use crate::chain::{BarCell, InvariantChain, LazyCochain, ProductCell, SharedCochain};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, TensorElement};

#[derive(Debug, Clone)]
pub struct ProductContext {
    left: Arc<SlantContext>,
    right: Arc<SlantContext>,
}

impl ProductContext {
    pub fn new(left: Arc<SlantContext>, right: Arc<SlantContext>) -> Result<Self> {
        if left.alpha().group() != right.alpha().group() {
            return Err(Error::Config("product slant needs both factors over the same group".into()));
        }
        Ok(Self { left, right })
    }

    pub fn group(&self) -> &Group {
        self.left.alpha().group()
    }

    pub fn target_dim(&self) -> usize {
        self.left.target_dim() + self.right.target_dim()
    }

    fn point(&self) -> Vec<num_rational::BigRational> {
        let mut p = self.left.omega().point().clone();
        p.extend(self.right.omega().point().iter().cloned());
        p
    }

    /// Value of the slant of `z_1 × z_2` on `Δ_1 ⊗ g·Δ_2`.
    pub fn value(
        &self,
        z1: &InvariantChain,
        z2: &InvariantChain,
        cell: &ProductCell<BarCell, BarCell>,
    ) -> Result<TensorElement> {
        let group = self.group();
        let order = z1.tag.order() + z2.tag.order();
        let expected = self.target_dim() - z1.degree - z2.degree;
        let found = cell.left.degree() + cell.right.degree();
        if found != expected {
            return Err(Error::DegreeMismatch { expected, found });
        }
        let p = self.point();
        let g1s = cell.left.vertices(group);
        let g2s: Vec<GroupElement> = cell.right.vertices(group).iter().map(|h| group.mul_unchecked(&cell.shift, h)).collect();
        let mut acc = TensorElement::zero(order);
        for (o1, lam1) in z1.coefficients() {
            let verts1 = self.left.space().representative(z1.degree, o1);
            let targets1: Vec<Vec<i64>> = g1s.iter().map(|g| self.left.alpha().translation_vector(g)).collect();
            for v1 in self.left.window(&targets1, &verts1) {
                let pieces1 = self.left.image_pieces(&g1s, &verts1, &v1);
                let c1 = lam1.act(group, &self.left.space().preimage(&v1)?);
                for (o2, lam2) in z2.coefficients() {
                    let verts2 = self.right.space().representative(z2.degree, o2);
                    let targets2: Vec<Vec<i64>> = g2s.iter().map(|g| self.right.alpha().translation_vector(g)).collect();
                    for v2 in self.right.window(&targets2, &verts2) {
                        let pieces2 = self.right.image_pieces(&g2s, &verts2, &v2);
                        let mut w = 0i64;
                        for (s1, e1) in &pieces1 {
                            for (s2, e2) in &pieces2 {
                                for (q, e) in product_simplices(s1, s2) {
                                    w += i64::from(*e1 * *e2 * e) * i64::from(omega_eval(&q, &p)?);
                                }
                            }
                        }
                        if w != 0 {
                            let c2 = lam2.act(group, &self.right.space().preimage(&v2)?);
                            acc = &acc + &c1.tensor(&c2).scale(&BigInt::from(w));
                        }
                    }
                }
            }
        }
        Ok(acc)
    }

    /// The slant of `z_1 × z_2` as a cochain on the product resolution.
    pub fn slant(&self, z1: &InvariantChain, z2: &InvariantChain) -> Result<SharedCochain<ProductCell<BarCell, BarCell>>> {
        let degree = self
            .target_dim()
            .checked_sub(z1.degree + z2.degree)
            .ok_or(Error::DegreeMismatch { expected: self.target_dim(), found: z1.degree + z2.degree })?;
        let ctx = self.clone();
        let (z1, z2) = (z1.clone(), z2.clone());
        let tag = z1.tag.tensor(&z2.tag);
        Ok(LazyCochain::new(degree, tag, move |cell: &ProductCell<BarCell, BarCell>| ctx.value(&z1, &z2, cell))
        .shared())
    }
}
