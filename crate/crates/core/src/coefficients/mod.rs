//! Coefficient sequences, connecting homomorphisms, the Berstein-Schwarz
//! class, cup products and coefficient homomorphisms `I(Γ)^{⊗k} → Z`.

mod coinvariants;
mod module_map;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

pub use coinvariants::{coinvariants_rank, RankPair};
pub use module_map::{
    equivariance_defects, pushforward, solve_coefficient_hom, solve_with_pairings, CoefficientFunctional,
    CoordinateFunctional, ModuleMap,
};

use crate::chain::{
    evaluate, invariant_boundary, BarCell, BarResolution, Cochain, GammaComplex, InvariantChain, LazyCochain,
    ProductCell, ProductResolution, ResChain, Resolution, SharedCochain,
};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, ModuleTag, TensorElement};

/// How a section `M → L` of `1 ⊗ ε` picks preimages: `t ↦ t ⊗ s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Section {
    /// `s = e`
    Standard,
    Shifted(GroupElement),
}

/// `0 → I^{⊗ℓ} → I^{⊗ℓ-1} ⊗ ZΓ → I^{⊗ℓ-1} → 0`; `ℓ = 1` is the
/// augmentation sequence `0 → I → ZΓ → Z → 0`.
#[derive(Debug, Clone)]
pub struct ShortExactSeq {
    ell: usize,
    section: Section,
    kernel: ModuleTag,
    middle: ModuleTag,
    quotient: ModuleTag,
}

impl ShortExactSeq {
    pub fn new(ell: usize) -> Result<Self> {
        Self::with_section(ell, Section::Standard)
    }

    pub fn augmentation() -> Self {
        Self::new(1).expect("ℓ = 1 is valid")
    }

    pub fn with_section(ell: usize, section: Section) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Config("coefficient sequences need ℓ ≥ 1".into()));
        }
        Ok(Self {
            ell,
            section,
            kernel: ModuleTag::aug_power(ell),
            middle: ModuleTag::aug_power_times_ring(ell - 1),
            quotient: ModuleTag::aug_power(ell - 1),
        })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn kernel(&self) -> &ModuleTag {
        &self.kernel
    }

    pub fn middle(&self) -> &ModuleTag {
        &self.middle
    }

    pub fn quotient(&self) -> &ModuleTag {
        &self.quotient
    }

    /// `L → M`, augmentation in the last slot.
    pub fn project(&self, x: &TensorElement) -> Result<TensorElement> {
        if !x.belongs_to(&self.middle) {
            return Err(Error::Validation(format!("element is not in {}", self.middle)));
        }
        Ok(x.contract(self.ell - 1))
    }

    pub fn lift(&self, group: &Group, m: &TensorElement) -> Result<TensorElement> {
        if !m.belongs_to(&self.quotient) {
            return Err(Error::Unliftable(format!("{} is not in {}", m.format(group), self.quotient)));
        }
        let s = match &self.section {
            Section::Standard => group.identity(),
            Section::Shifted(s) => s.clone(),
        };
        Ok(m.append_factor(&s))
    }

    /// Reads an element of `L` lying in the image of `K`.
    pub fn to_kernel(&self, group: &Group, x: &TensorElement) -> Result<TensorElement> {
        if !x.belongs_to(&self.kernel) {
            return Err(Error::Unliftable(format!("{} does not lie in {}", x.format(group), self.kernel)));
        }
        Ok(x.clone())
    }
}

/// `δ̄c = (lift ∘ c) ∘ ∂`, read in the kernel.
pub fn connecting_cohomology<R>(res: Arc<R>, c: SharedCochain<R::Cell>, ses: &ShortExactSeq) -> Result<SharedCochain<R::Cell>>
where
    R: Resolution + Send + 'static,
    R::Cell: 'static,
{
    if c.tag() != ses.quotient() {
        return Err(Error::Validation(format!("cochain has values in {}, sequence quotient is {}", c.tag(), ses.quotient())));
    }
    let ses = ses.clone();
    let degree = c.degree() + 1;
    let kernel = ses.kernel().clone();
    let s2 = ses.clone();
    let res2 = res.clone();
    let lifted: SharedCochain<R::Cell> =
        LazyCochain::new(c.degree(), ses.middle().clone(), move |cell: &R::Cell| s2.lift(res2.group(), &c.value(cell)?))
            .shared();
    Ok(LazyCochain::new(degree, kernel, move |cell: &R::Cell| {
        let chain = ResChain::cell(res.group(), cell.clone()).boundary(res.as_ref());
        let v = evaluate(res.group(), lifted.as_ref(), &chain)?;
        ses.to_kernel(res.group(), &v)
    })
    .shared())
}

/// The augmentation cocycle `ε ∈ Hom_Γ(C_0, Z)`.
pub fn augmentation_cocycle<R>(res: Arc<R>) -> Result<SharedCochain<R::Cell>>
where
    R: Resolution + Send + 'static,
    R::Cell: 'static,
{
    for g in res.generators(0)? {
        if res.augmentation(&g).is_none() {
            return Err(Error::Validation("resolution has no augmentation data".into()));
        }
    }
    Ok(LazyCochain::new(0, ModuleTag::integers(), move |cell: &R::Cell| {
        res.augmentation(cell)
            .map(TensorElement::integer)
            .ok_or_else(|| Error::OutsideDomain("augmentation is only defined in degree 0".into()))
    })
    .shared())
}

/// `β_Γ = δ̄(1)` for the augmentation sequence.
pub fn berstein_schwarz<R>(res: Arc<R>) -> Result<SharedCochain<R::Cell>>
where
    R: Resolution + Send + 'static,
    R::Cell: 'static,
{
    let one = augmentation_cocycle(res.clone())?;
    connecting_cohomology(res, one, &ShortExactSeq::augmentation())
}

/// Lifts `z` orbitwise, takes the boundary and reads it in the kernel.
pub fn connecting_homology(gc: &GammaComplex, z: &InvariantChain, ses: &ShortExactSeq) -> Result<InvariantChain> {
    if !gc.is_free() {
        return Err(Error::Scope("connecting homomorphisms need a free action".into()));
    }
    if &z.tag != ses.quotient() {
        return Err(Error::Validation(format!("chain has coefficients in {}, sequence quotient is {}", z.tag, ses.quotient())));
    }
    let group = gc.group();
    let mut lifted = InvariantChain::zero(z.degree, ses.middle().clone());
    for (orbit, lam) in z.coefficients() {
        lifted.set(gc, orbit, ses.lift(group, lam)?)?;
    }
    let b = invariant_boundary(gc, &lifted)?;
    let mut out = InvariantChain::zero(b.degree, ses.kernel().clone());
    for (orbit, v) in b.coefficients() {
        out.set(gc, orbit, ses.to_kernel(group, v)?)?;
    }
    Ok(out)
}

/// `(u × v)(a ⊗ g·b) = u(a) ⊗ g·v(b)` when the degrees match, else 0.
pub fn cross_product<A, B>(
    prod: Arc<ProductResolution<A, B>>,
    u: SharedCochain<A::Cell>,
    v: SharedCochain<B::Cell>,
) -> SharedCochain<ProductCell<A::Cell, B::Cell>>
where
    A: Resolution + Send + 'static,
    B: Resolution + Send + 'static,
    A::Cell: 'static,
    B::Cell: 'static,
{
    let degree = u.degree() + v.degree();
    let tag = u.tag().tensor(v.tag());
    let order = tag.order();
    LazyCochain::new(degree, tag, move |cell: &ProductCell<A::Cell, B::Cell>| {
        if prod.left.degree(&cell.left) != u.degree() || prod.right.degree(&cell.right) != v.degree() {
            return Ok(TensorElement::zero(order));
        }
        let a = u.value(&cell.left)?;
        let b = v.value(&cell.right)?.act(prod.group(), &cell.shift);
        Ok(a.tensor(&b))
    })
    .shared()
}

/// Alexander-Whitney cup product on the bar resolution:
/// `(u ∪ v)[g_0..g_{p+q}] = u[g_0..g_p] ⊗ v[g_p..g_{p+q}]`.
pub fn cup_product(bar: Arc<BarResolution>, u: SharedCochain<BarCell>, v: SharedCochain<BarCell>) -> SharedCochain<BarCell> {
    let (p, q) = (u.degree(), v.degree());
    let tag = u.tag().tensor(v.tag());
    LazyCochain::new(p + q, tag, move |cell: &BarCell| {
        if cell.degree() != p + q {
            return Err(Error::DegreeMismatch { expected: p + q, found: cell.degree() });
        }
        let verts = cell.vertices(bar.group());
        let a = u.value(&BarCell(verts[1..=p].to_vec()))?;
        let (shift, right) = bar.normalize(&verts[p..]);
        let b = v.value(&right)?.act(bar.group(), &shift);
        Ok(a.tensor(&b))
    })
    .shared()
}

/// `β^{∪k}`; `k = 0` is the augmentation cocycle.
pub fn beta_power(bar: Arc<BarResolution>, k: usize) -> Result<SharedCochain<BarCell>> {
    let mut acc = augmentation_cocycle(bar.clone())?;
    if k == 0 {
        return Ok(acc);
    }
    let beta = berstein_schwarz(bar.clone())?;
    acc = beta.clone();
    for _ in 1..k {
        acc = cup_product(bar.clone(), acc, beta.clone());
    }
    Ok(acc)
}

/// Integer pairing of `φ ∘ u` with a chain, for an equivariant functional `φ`.
pub fn pair_through<C: Ord + Clone + std::fmt::Debug>(
    group: &Group,
    phi: &dyn CoefficientFunctional,
    u: &dyn Cochain<C>,
    chain: &ResChain<C>,
) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for (_, cell, c) in chain.terms() {
        // φ is invariant, so the translate g drops out
        acc += phi.apply(group, &u.value(cell)?)? * c;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
