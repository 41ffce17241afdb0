//! `Γ`-invariant chains `Σ λ_σ σ` with `λ_{γσ} = γλ_σ`, stored one
//! coefficient per orbit.

use std::collections::BTreeMap;

use super::gamma::GammaComplex;
use crate::error::{Error, Result};
use crate::group::{GroupElement, ModuleTag, TensorElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantChain {
    pub degree: usize,
    pub tag: ModuleTag,
    coeffs: BTreeMap<usize, TensorElement>,
}

/// Finitely many explicit simplices `γ·σ` with their coefficients.
pub type ExplicitChain = BTreeMap<(usize, GroupElement), TensorElement>;

impl InvariantChain {
    pub fn zero(degree: usize, tag: ModuleTag) -> Self {
        Self { degree, tag, coeffs: BTreeMap::new() }
    }

    pub fn new(gc: &GammaComplex, degree: usize, tag: ModuleTag, coeffs: BTreeMap<usize, TensorElement>) -> Result<Self> {
        let mut z = Self::zero(degree, tag);
        for (orbit, c) in coeffs {
            z.set(gc, orbit, c)?;
        }
        Ok(z)
    }

    /// Sets `λ_σ` for orbit `σ`, validating module membership and stabiliser invariance.
    pub fn set(&mut self, gc: &GammaComplex, orbit: usize, coeff: TensorElement) -> Result<()> {
        let cell = gc
            .cells(self.degree)
            .get(orbit)
            .ok_or_else(|| Error::Validation(format!("no orbit {orbit} in degree {}", self.degree)))?;
        if !coeff.belongs_to(&self.tag) {
            return Err(Error::Validation(format!("coefficient at orbit {orbit} is not in {}", self.tag)));
        }
        for s in &cell.stabilizer {
            if coeff.act(gc.group(), s) != coeff {
                return Err(Error::Validation(format!("coefficient at orbit {orbit} is not stabiliser-invariant")));
            }
        }
        if coeff.is_zero() {
            self.coeffs.remove(&orbit);
        } else {
            self.coeffs.insert(orbit, coeff);
        }
        Ok(())
    }

    pub fn coefficient(&self, orbit: usize) -> TensorElement {
        self.coeffs.get(&orbit).cloned().unwrap_or_else(|| TensorElement::zero(self.tag.order()))
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &TensorElement)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Applies a module map coefficientwise.
    pub fn map_coefficients(&self, tag: ModuleTag, f: impl Fn(&TensorElement) -> TensorElement) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, v) in &self.coeffs {
            let w = f(v);
            if !w.is_zero() {
                coeffs.insert(*k, w);
            }
        }
        Self { degree: self.degree, tag, coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree || self.tag != other.tag {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let s = &out.coefficient(*k) + v;
            if s.is_zero() {
                out.coeffs.remove(k);
            } else {
                out.coeffs.insert(*k, s);
            }
        }
        Ok(out)
    }

    /// `λ_{γσ} = γλ_σ` for `γ` in the given set.
    pub fn expand(&self, gc: &GammaComplex, translates: &[GroupElement]) -> ExplicitChain {
        let mut out = ExplicitChain::new();
        for (k, v) in &self.coeffs {
            for g in translates {
                out.insert((*k, g.clone()), v.act(gc.group(), g));
            }
        }
        out
    }

    /// Reads orbit data off an explicit expansion, checking that it is equivariant.
    pub fn regroup(gc: &GammaComplex, degree: usize, tag: ModuleTag, explicit: &ExplicitChain) -> Result<Self> {
        let group = gc.group();
        let mut z = Self::zero(degree, tag);
        for ((orbit, g), v) in explicit {
            if g.is_identity() {
                z.set(gc, *orbit, v.clone())?;
            }
        }
        for ((orbit, g), v) in explicit {
            if z.coefficient(*orbit).act(group, g) != *v {
                return Err(Error::Validation(format!("explicit chain is not equivariant at orbit {orbit}")));
            }
        }
        Ok(z)
    }
}

/// `∂z` through `D^Γ(L) ≅ L ⊗_Γ D`: a face `(τ, g, s)` of `σ` contributes
/// `s · g⁻¹λ_σ` at `τ`.
pub fn invariant_boundary(gc: &GammaComplex, z: &InvariantChain) -> Result<InvariantChain> {
    if z.degree == 0 {
        return Err(Error::DegreeMismatch { expected: 1, found: 0 });
    }
    let group = gc.group();
    let order = z.tag.order();
    let mut acc: BTreeMap<usize, TensorElement> = BTreeMap::new();
    for (orbit, lam) in z.coefficients() {
        for f in &gc.cells(z.degree)[orbit].faces {
            let contrib = lam.act(group, &group.inverse(&f.translator));
            let contrib = if f.sign > 0 { contrib } else { -&contrib };
            let e = acc.entry(f.orbit).or_insert_with(|| TensorElement::zero(order));
            *e = &*e + &contrib;
        }
    }
    let mut out = InvariantChain::zero(z.degree - 1, z.tag.clone());
    for (k, v) in acc {
        if !v.is_zero() {
            out.set(gc, k, v)?;
        }
    }
    Ok(out)
}

/// Boundary of an explicit chain, as explicit simplices.
pub fn explicit_boundary(gc: &GammaComplex, degree: usize, chain: &ExplicitChain) -> ExplicitChain {
    let group = gc.group();
    let mut out = ExplicitChain::new();
    for ((orbit, g), v) in chain {
        for f in &gc.cells(degree)[*orbit].faces {
            let key = (f.orbit, group.mul_unchecked(g, &f.translator));
            let contrib = if f.sign > 0 { v.clone() } else { -v };
            let e = out.entry(key).or_insert_with(|| TensorElement::zero(v.order()));
            *e = &*e + &contrib;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
