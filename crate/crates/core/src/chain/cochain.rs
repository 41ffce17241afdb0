//! Equivariant cochains `Hom_Γ(C_k, L)`, evaluated lazily on free generators.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::resolution::{BarCell, BarResolution, ResChain, Resolution};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, ModuleTag, TensorElement};

pub trait Cochain<C>: Send + Sync {
    fn degree(&self) -> usize;
    fn tag(&self) -> &ModuleTag;
    /// Value on a free generator; extended to translates by equivariance.
    fn value(&self, cell: &C) -> Result<TensorElement>;
}

pub type SharedCochain<C> = Arc<dyn Cochain<C>>;

/// A cochain given by a finite table of generator values.
#[derive(Debug, Clone)]
pub struct EquivariantCochain<C: Ord> {
    degree: usize,
    tag: ModuleTag,
    table: BTreeMap<C, TensorElement>,
}

impl<C: Ord + Clone + std::fmt::Debug + Send + Sync> EquivariantCochain<C> {
    pub fn new(degree: usize, tag: ModuleTag, table: BTreeMap<C, TensorElement>) -> Result<Self> {
        for (c, v) in &table {
            if !v.belongs_to(&tag) {
                return Err(Error::Validation(format!("value on {c:?} is not in {tag}")));
            }
        }
        Ok(Self { degree, tag, table })
    }

    /// Tabulates `f` on the (truncated) generators of degree `k`.
    pub fn tabulate<R: Resolution<Cell = C>>(
        res: &R,
        degree: usize,
        tag: ModuleTag,
        f: impl Fn(&C) -> Result<TensorElement>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for c in res.generators(degree)? {
            let v = f(&c)?;
            table.insert(c, v);
        }
        Self::new(degree, tag, table)
    }

    pub fn table(&self) -> &BTreeMap<C, TensorElement> {
        &self.table
    }
}

impl<C: Ord + Clone + std::fmt::Debug + Send + Sync> Cochain<C> for EquivariantCochain<C> {
    fn degree(&self) -> usize {
        self.degree
    }

    fn tag(&self) -> &ModuleTag {
        &self.tag
    }

    fn value(&self, cell: &C) -> Result<TensorElement> {
        self.table
            .get(cell)
            .cloned()
            .ok_or_else(|| Error::OutsideDomain(format!("cochain table has no entry for {cell:?}")))
    }
}

type ValueFn<C> = dyn Fn(&C) -> Result<TensorElement> + Send + Sync;

/// A cochain computed on demand.
pub struct LazyCochain<C> {
    degree: usize,
    tag: ModuleTag,
    f: Box<ValueFn<C>>,
}

impl<C> LazyCochain<C> {
    pub fn new(degree: usize, tag: ModuleTag, f: impl Fn(&C) -> Result<TensorElement> + Send + Sync + 'static) -> Self {
        Self { degree, tag, f: Box::new(f) }
    }

    pub fn zero(degree: usize, tag: ModuleTag) -> Self {
        let order = tag.order();
        Self::new(degree, tag, move |_| Ok(TensorElement::zero(order)))
    }

    pub fn shared(self) -> SharedCochain<C>
    where
        C: 'static,
    {
        Arc::new(self)
    }
}

impl<C> Cochain<C> for LazyCochain<C> {
    fn degree(&self) -> usize {
        self.degree
    }

    fn tag(&self) -> &ModuleTag {
        &self.tag
    }

    fn value(&self, cell: &C) -> Result<TensorElement> {
        (self.f)(cell)
    }
}

/// `Σ c · g·u(cell)` over the terms of a chain.
pub fn evaluate<C: Ord + Clone + std::fmt::Debug>(
    group: &Group,
    u: &dyn Cochain<C>,
    chain: &ResChain<C>,
) -> Result<TensorElement> {
    let mut acc = TensorElement::zero(u.tag().order());
    for (g, cell, c) in chain.terms() {
        let v = u.value(cell)?;
        acc = &acc + &v.act(group, g).scale(c);
    }
    Ok(acc)
}

/// Pairing of an integer-valued cochain with a chain.
pub fn pair_cochain_cycle<R: Resolution>(res: &R, u: &dyn Cochain<R::Cell>, chain: &ResChain<R::Cell>) -> Result<BigInt> {
    if u.tag().order() != 0 {
        return Err(Error::Validation(format!("pairing needs integer coefficients, got {}", u.tag())));
    }
    if let Some((_, cell, _)) = chain.terms().find(|(_, c, _)| res.degree(c) != u.degree()) {
        return Err(Error::DegreeMismatch { expected: u.degree(), found: res.degree(cell) });
    }
    Ok(evaluate(res.group(), u, chain)?.as_integer().unwrap_or_default())
}

/// `(δu)(cell) = u(∂cell)`.
pub fn coboundary<R>(res: Arc<R>, u: SharedCochain<R::Cell>) -> SharedCochain<R::Cell>
where
    R: Resolution + Send + 'static,
    R::Cell: 'static,
{
    let degree = u.degree() + 1;
    let tag = u.tag().clone();
    LazyCochain::new(degree, tag, move |cell: &R::Cell| {
        let chain = ResChain::cell(res.group(), cell.clone()).boundary(res.as_ref());
        evaluate(res.group(), u.as_ref(), &chain)
    })
    .shared()
}

/// `a·u + b·v`
pub fn combine<C: 'static>(a: BigInt, u: SharedCochain<C>, b: BigInt, v: SharedCochain<C>) -> Result<SharedCochain<C>> {
    if u.degree() != v.degree() || u.tag() != v.tag() {
        return Err(Error::DegreeMismatch { expected: u.degree(), found: v.degree() });
    }
    Ok(LazyCochain::new(u.degree(), u.tag().clone(), move |c| {
        Ok(&u.value(c)?.scale(&a) + &v.value(c)?.scale(&b))
    })
    .shared())
}

/// Whether `u` vanishes on every listed generator.
pub fn vanishes_on<C>(u: &dyn Cochain<C>, cells: &[C]) -> Result<bool> {
    for c in cells {
        if !u.value(c)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Eilenberg-Zilber shuffle cycle `Σ_π sign(π) [h_{π1} | ... | h_{πk}]` of
/// commuting elements; for generators of `Z^d` it represents the
/// fundamental class of a coordinate subtorus.
pub fn shuffle_cycle(bar: &BarResolution, elements: &[GroupElement]) -> ResChain<BarCell> {
    let group = bar.group();
    let k = elements.len();
    let mut out = ResChain::zero();
    let mut perm: Vec<usize> = (0..k).collect();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let sign = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let hs: Vec<GroupElement> = p.iter().map(|&i| elements[i].clone()).collect();
        out.add(sign, group.identity(), bar.inhomogeneous(&hs));
    });
    out
}

fn permutations(p: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if start == p.len() {
        f(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permutations(p, start + 1, f);
        p.swap(start, i);
    }
}

/// Standard homology generators of the bar resolution in degree `k`:
/// `[e]`, the loops `[e, s]`, and coordinate subtori for `Z^d`.
pub fn bar_homology_cycles(bar: &BarResolution, k: usize) -> Vec<ResChain<BarCell>> {
    let group = bar.group();
    let gens = group.generators();
    if k == 0 {
        return vec![ResChain::cell(group, BarCell(Vec::new()))];
    }
    if !group.is_abelian() {
        return if k == 1 { gens.iter().map(|g| shuffle_cycle(bar, std::slice::from_ref(g))).collect() } else { Vec::new() };
    }
    subsets(gens.len(), k)
        .into_iter()
        .map(|s| {
            let els: Vec<GroupElement> = s.iter().map(|&i| gens[i].clone()).collect();
            shuffle_cycle(bar, &els)
        })
        .collect()
}

pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coboundary_of_coboundary_vanishes() {
        let z2 = Group::free_abelian(2);
        let bar = Arc::new(BarResolution::new(z2.clone(), 1));
        let g = z2.clone();
        let u: SharedCochain<BarCell> = LazyCochain::new(1, ModuleTag::integers(), move |c: &BarCell| {
            let e = g.abelianize(&c.0[0]);
            Ok(TensorElement::integer(BigInt::from(e[0] * 3 - e[1] * e[1])))
        })
        .shared();
        let dd = coboundary(bar.clone(), coboundary(bar.clone(), u));
        let cells = bar.generators(3).unwrap();
        assert!(vanishes_on(dd.as_ref(), &cells[..100]).unwrap());
    }

    #[test]
    fn shuffle_cycles_are_cycles() {
        let z3 = Group::free_abelian(3);
        let bar = BarResolution::new(z3, 1);
        for k in 0..=3 {
            for z in bar_homology_cycles(&bar, k) {
                assert!(z.is_quotient_cycle(&bar));
            }
        }
    }
}
