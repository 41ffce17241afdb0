//! Free `ZΓ`-resolutions of `Z`: finite cellular complexes, the homogeneous
//! bar resolution, and tensor products of resolutions with the diagonal action.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gamma::GammaComplex;
use crate::error::{Error, Result};
use crate::group::{Family, Group, GroupElement, GroupRingElement};

/// `coeff · translate · cell`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResTerm<C> {
    pub coeff: BigInt,
    pub translate: GroupElement,
    pub cell: C,
}

/// A free resolution presented by orbit representatives ("cells") of its
/// free generators.
pub trait Resolution: Sync {
    type Cell: Clone + Ord + Debug + Send + Sync;

    fn group(&self) -> &Group;
    fn degree(&self, cell: &Self::Cell) -> usize;
    fn boundary(&self, cell: &Self::Cell) -> Vec<ResTerm<Self::Cell>>;
    /// Free generators of degree `k`; truncated for infinitely generated resolutions.
    fn generators(&self, k: usize) -> Result<Vec<Self::Cell>>;
    /// Augmentation value on a degree-0 generator.
    fn augmentation(&self, cell: &Self::Cell) -> Option<BigInt>;
    fn format_cell(&self, cell: &Self::Cell) -> String;
}

/// A finite `Z`-linear combination `Σ c · g · cell` of translated cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResChain<C: Ord> {
    terms: BTreeMap<(GroupElement, C), BigInt>,
}

impl<C: Ord + Clone> Default for ResChain<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Ord + Clone + Debug> ResChain<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn cell(group: &Group, cell: C) -> Self {
        let mut c = Self::zero();
        c.add(BigInt::one(), group.identity(), cell);
        c
    }

    pub fn add(&mut self, coeff: BigInt, g: GroupElement, cell: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((g, cell)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_chain(&mut self, other: &Self, scale: &BigInt) {
        for ((g, c), v) in &other.terms {
            self.add(v * scale, g.clone(), c.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &C, &BigInt)> {
        self.terms.iter().map(|((g, c), v)| (g, c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn translate(&self, group: &Group, g: &GroupElement) -> Self {
        let mut out = Self::zero();
        for ((h, c), v) in &self.terms {
            out.add(v.clone(), group.mul_unchecked(g, h), c.clone());
        }
        out
    }

    pub fn boundary<R: Resolution<Cell = C>>(&self, res: &R) -> Self {
        let group = res.group();
        let mut out = Self::zero();
        for ((g, c), v) in &self.terms {
            for t in res.boundary(c) {
                out.add(v * &t.coeff, group.mul_unchecked(g, &t.translate), t.cell);
            }
        }
        out
    }

    /// Image in `C ⊗_Γ Z`.
    pub fn coinvariants(&self) -> BTreeMap<C, BigInt> {
        let mut out: BTreeMap<C, BigInt> = BTreeMap::new();
        for ((_, c), v) in &self.terms {
            *out.entry(c.clone()).or_default() += v;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Whether the chain maps to a cycle of `C ⊗_Γ Z`.
    pub fn is_quotient_cycle<R: Resolution<Cell = C>>(&self, res: &R) -> bool {
        self.boundary(res).coinvariants().is_empty()
    }
}

/// Orbit-cell identifier in a finite cellular resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId {
    pub degree: usize,
    pub index: usize,
}

/// A finitely generated free `ZΓ` chain complex. `differential(k)[i][j]` is
/// the coefficient of generator `i` of degree `k-1` in the boundary of
/// generator `j` of degree `k`.
#[derive(Debug, Clone)]
pub struct FreeZGComplex {
    group: Group,
    ranks: Vec<usize>,
    differentials: Vec<Vec<Vec<GroupRingElement>>>,
    augmentation: Option<Vec<BigInt>>,
}

impl FreeZGComplex {
    pub fn new(
        group: Group,
        ranks: Vec<usize>,
        differentials: Vec<Vec<Vec<GroupRingElement>>>,
        augmentation: Option<Vec<BigInt>>,
    ) -> Result<Self> {
        if differentials.len() + 1 != ranks.len() {
            return Err(Error::Validation("need one differential per positive degree".into()));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.len() != ranks[k] || d.iter().any(|row| row.len() != ranks[k + 1]) {
                return Err(Error::Validation(format!("differential out of degree {} has the wrong shape", k + 1)));
            }
        }
        if let Some(a) = &augmentation {
            if a.len() != ranks.first().copied().unwrap_or(0) {
                return Err(Error::Validation("augmentation needs one value per degree-0 generator".into()));
            }
        }
        let c = Self { group, ranks, differentials, augmentation };
        c.check_square_zero()?;
        Ok(c)
    }

    fn check_square_zero(&self) -> Result<()> {
        // ∂∂ e_j = Σ_i (Σ_m a_{mj} b_{im}) e''_i ; a acts on the left
        for k in 2..self.ranks.len() {
            let a = &self.differentials[k - 1];
            let b = &self.differentials[k - 2];
            for j in 0..self.ranks[k] {
                for i in 0..self.ranks[k - 2] {
                    let mut s = GroupRingElement::zero();
                    for m in 0..self.ranks[k - 1] {
                        s = &s + &a[m][j].mul(&self.group, &b[i][m]);
                    }
                    if !s.is_zero() {
                        return Err(Error::Validation(format!("d∘d ≠ 0 at degree {k}, generator {j}")));
                    }
                }
            }
        }
        if let (Some(eps), Some(d1)) = (&self.augmentation, self.differentials.first()) {
            for j in 0..self.ranks[1] {
                let s: BigInt = (0..self.ranks[0]).map(|i| d1[i][j].augmentation() * &eps[i]).sum();
                if !s.is_zero() {
                    return Err(Error::Validation("augmentation does not vanish on boundaries".into()));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn differential(&self, k: usize) -> Option<&Vec<Vec<GroupRingElement>>> {
        if k == 0 {
            None
        } else {
            self.differentials.get(k - 1)
        }
    }

    pub fn has_augmentation(&self) -> bool {
        self.augmentation.is_some()
    }

    /// The circle: `∂e¹ = (t - 1) e⁰` over `Z`.
    pub fn circle() -> Self {
        Self::koszul(&Group::free_abelian(1)).expect("Z is free abelian")
    }

    /// Cellular chains of the universal cover of the cubical torus `T^d`.
    pub fn koszul(group: &Group) -> Result<Self> {
        let d = match group.spec().family() {
            Family::FreeAbelian(d) => d,
            _ => return Err(Error::Config("the Koszul resolution needs Z^d".into())),
        };
        let subsets: Vec<Vec<Vec<usize>>> = (0..=d)
            .map(|k| {
                let mut v: Vec<Vec<usize>> = (0u64..(1 << d))
                    .filter(|m| m.count_ones() as usize == k)
                    .map(|m| (0..d).filter(|i| m >> i & 1 == 1).collect())
                    .collect();
                v.sort();
                v
            })
            .collect();
        let mut diffs = Vec::new();
        for k in 1..=d {
            let idx: BTreeMap<&Vec<usize>, usize> = subsets[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
            let mut m = vec![vec![GroupRingElement::zero(); subsets[k].len()]; subsets[k - 1].len()];
            for (j, s) in subsets[k].iter().enumerate() {
                for (p, &gen) in s.iter().enumerate() {
                    let mut f = s.clone();
                    f.remove(p);
                    let x = GroupRingElement::augmentation_generator(group, &group.generator(gen));
                    let x = if p % 2 == 0 { x } else { -&x };
                    let i = idx[&f];
                    m[i][j] = &m[i][j] + &x;
                }
            }
            diffs.push(m);
        }
        let ranks = subsets.iter().map(|s| s.len()).collect();
        Self::new(group.clone(), ranks, diffs, Some(vec![BigInt::one()]))
    }

    /// Cellular chains of the universal cover of a wedge of circles.
    pub fn wedge_of_circles(group: &Group) -> Result<Self> {
        let r = match group.spec().family() {
            Family::Free(r) => r,
            _ => return Err(Error::Config("the wedge resolution needs F_r".into())),
        };
        let row: Vec<GroupRingElement> =
            (0..r).map(|i| GroupRingElement::augmentation_generator(group, &group.generator(i))).collect();
        Self::new(group.clone(), vec![1, r], vec![vec![row]], Some(vec![BigInt::one()]))
    }

    /// A single free generator in degree 0; a resolution only for the trivial group.
    pub fn point(group: &Group) -> Result<Self> {
        Self::new(group.clone(), vec![1], Vec::new(), Some(vec![BigInt::one()]))
    }

    /// Cellular chains of a free `Γ`-complex given by orbit cells.
    pub fn from_gamma_complex(gc: &GammaComplex, augment: bool) -> Result<Self> {
        let group = gc.group().clone();
        let ranks: Vec<usize> = (0..=gc.top_degree()).map(|k| gc.count(k)).collect();
        let mut diffs = Vec::new();
        for k in 1..ranks.len() {
            let mut m = vec![vec![GroupRingElement::zero(); ranks[k]]; ranks[k - 1]];
            for (j, cell) in gc.cells(k).iter().enumerate() {
                for f in &cell.faces {
                    let x = GroupRingElement::term(BigInt::from(f.sign), f.translator.clone());
                    m[f.orbit][j] = &m[f.orbit][j] + &x;
                }
            }
            diffs.push(m);
        }
        let aug = augment.then(|| vec![BigInt::one(); ranks[0]]);
        Self::new(group, ranks, diffs, aug)
    }
}

impl Resolution for FreeZGComplex {
    type Cell = CellId;

    fn group(&self) -> &Group {
        &self.group
    }

    fn degree(&self, cell: &CellId) -> usize {
        cell.degree
    }

    fn boundary(&self, cell: &CellId) -> Vec<ResTerm<CellId>> {
        let Some(d) = self.differential(cell.degree) else { return Vec::new() };
        let mut out = Vec::new();
        for (i, row) in d.iter().enumerate() {
            for (g, c) in row[cell.index].terms() {
                out.push(ResTerm {
                    coeff: c.clone(),
                    translate: g.clone(),
                    cell: CellId { degree: cell.degree - 1, index: i },
                });
            }
        }
        out
    }

    fn generators(&self, k: usize) -> Result<Vec<CellId>> {
        Ok((0..self.rank(k)).map(|index| CellId { degree: k, index }).collect())
    }

    fn augmentation(&self, cell: &CellId) -> Option<BigInt> {
        if cell.degree != 0 {
            return None;
        }
        self.augmentation.as_ref().map(|a| a[cell.index].clone())
    }

    fn format_cell(&self, cell: &CellId) -> String {
        format!("e{}_{}", cell.degree, cell.index)
    }
}

/// The tail `(g_1, ..., g_k)` of a normalised homogeneous simplex `[e, g_1, ..., g_k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarCell(pub Vec<GroupElement>);

impl BarCell {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Vertices `[e, g_1, ..., g_k]`.
    pub fn vertices(&self, group: &Group) -> Vec<GroupElement> {
        let mut v = vec![group.identity()];
        v.extend(self.0.iter().cloned());
        v
    }
}

/// The homogeneous (normal) resolution: simplicial chains of the infinite
/// simplex on `Γ`, with generators truncated to vertices in a ball.
#[derive(Debug, Clone)]
pub struct BarResolution {
    group: Group,
    radius: usize,
}

impl BarResolution {
    pub fn new(group: Group, radius: usize) -> Self {
        Self { group, radius }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Writes an arbitrary simplex `[γ_0, ..., γ_k]` as `γ_0 · [e, γ_0^{-1}γ_1, ...]`.
    pub fn normalize(&self, vertices: &[GroupElement]) -> (GroupElement, BarCell) {
        let g0 = vertices[0].clone();
        let tail = vertices[1..].iter().map(|g| self.group.left_divide(&g0, g)).collect();
        (g0, BarCell(tail))
    }

    /// The chain of an arbitrary simplex.
    pub fn simplex(&self, vertices: &[GroupElement]) -> ResChain<BarCell> {
        let (g, c) = self.normalize(vertices);
        let mut ch = ResChain::zero();
        ch.add(BigInt::one(), g, c);
        ch
    }

    /// Inhomogeneous bar element `[h_1 | ... | h_k]`.
    pub fn inhomogeneous(&self, hs: &[GroupElement]) -> BarCell {
        let mut acc = self.group.identity();
        let mut tail = Vec::with_capacity(hs.len());
        for h in hs {
            acc = self.group.mul_unchecked(&acc, h);
            tail.push(acc.clone());
        }
        BarCell(tail)
    }
}

impl Resolution for BarResolution {
    type Cell = BarCell;

    fn group(&self) -> &Group {
        &self.group
    }

    fn degree(&self, cell: &BarCell) -> usize {
        cell.degree()
    }

    fn boundary(&self, cell: &BarCell) -> Vec<ResTerm<BarCell>> {
        let k = cell.degree();
        if k == 0 {
            return Vec::new();
        }
        let verts = cell.vertices(&self.group);
        let mut out = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let mut f = verts.clone();
            f.remove(i);
            let (g, c) = self.normalize(&f);
            let coeff = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            out.push(ResTerm { coeff, translate: g, cell: c });
        }
        out
    }

    fn generators(&self, k: usize) -> Result<Vec<BarCell>> {
        let ball = self.group.ball(self.radius)?;
        let mut acc = vec![Vec::new()];
        for _ in 0..k {
            let total = acc.len().saturating_mul(ball.len());
            if total > self.group.ball_cap() {
                return Err(Error::BallCapExceeded { radius: self.radius, cap: self.group.ball_cap() });
            }
            let mut next = Vec::with_capacity(total);
            for t in &acc {
                for g in &ball {
                    let mut t = t.clone();
                    t.push(g.clone());
                    next.push(t);
                }
            }
            acc = next;
        }
        Ok(acc.into_iter().map(BarCell).collect())
    }

    fn augmentation(&self, cell: &BarCell) -> Option<BigInt> {
        (cell.degree() == 0).then(BigInt::one)
    }

    fn format_cell(&self, cell: &BarCell) -> String {
        let w: Vec<String> = cell.vertices(&self.group).iter().map(|g| self.group.format_word(g)).collect();
        format!("[{}]", w.join(","))
    }
}

/// `a ⊗ g·b`
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductCell<A, B> {
    pub left: A,
    pub shift: GroupElement,
    pub right: B,
}

/// `C ⊗ C'` over `Z` with the diagonal `Γ`-action. The generators are
/// `a ⊗ g·b` for orbit cells `a`, `b` and `g ∈ Γ`; enumeration truncates `g`
/// to a ball.
#[derive(Debug, Clone)]
pub struct ProductResolution<A, B> {
    pub left: A,
    pub right: B,
    radius: usize,
}

/// Tensor product of two resolutions with the diagonal action.
pub fn tensor_complex<A: Resolution, B: Resolution>(left: A, right: B, radius: usize) -> Result<ProductResolution<A, B>> {
    if left.group() != right.group() {
        return Err(Error::Config("tensor product of resolutions over different groups".into()));
    }
    Ok(ProductResolution { left, right, radius })
}

impl<A: Resolution, B: Resolution> Resolution for ProductResolution<A, B> {
    type Cell = ProductCell<A::Cell, B::Cell>;

    fn group(&self) -> &Group {
        self.left.group()
    }

    fn degree(&self, cell: &Self::Cell) -> usize {
        self.left.degree(&cell.left) + self.right.degree(&cell.right)
    }

    fn boundary(&self, cell: &Self::Cell) -> Vec<ResTerm<Self::Cell>> {
        let group = self.group();
        let mut out = Vec::new();
        for t in self.left.boundary(&cell.left) {
            // h·a' ⊗ g·b = h·(a' ⊗ h^{-1}g·b)
            out.push(ResTerm {
                coeff: t.coeff,
                translate: t.translate.clone(),
                cell: ProductCell {
                    left: t.cell,
                    shift: group.left_divide(&t.translate, &cell.shift),
                    right: cell.right.clone(),
                },
            });
        }
        let odd = self.left.degree(&cell.left) % 2 == 1;
        for t in self.right.boundary(&cell.right) {
            let coeff = if odd { -t.coeff } else { t.coeff };
            out.push(ResTerm {
                coeff,
                translate: group.identity(),
                cell: ProductCell {
                    left: cell.left.clone(),
                    shift: group.mul_unchecked(&cell.shift, &t.translate),
                    right: t.cell,
                },
            });
        }
        out
    }

    fn generators(&self, k: usize) -> Result<Vec<Self::Cell>> {
        let ball = self.group().ball(self.radius)?;
        let mut out = Vec::new();
        for i in 0..=k {
            let ls = self.left.generators(i)?;
            let rs = self.right.generators(k - i)?;
            for a in &ls {
                for g in &ball {
                    for b in &rs {
                        out.push(ProductCell { left: a.clone(), shift: g.clone(), right: b.clone() });
                    }
                }
            }
        }
        Ok(out)
    }

    fn augmentation(&self, cell: &Self::Cell) -> Option<BigInt> {
        Some(self.left.augmentation(&cell.left)? * self.right.augmentation(&cell.right)?)
    }

    fn format_cell(&self, cell: &Self::Cell) -> String {
        format!(
            "{} ⊗ {}·{}",
            self.left.format_cell(&cell.left),
            self.group().format_word(&cell.shift),
            self.right.format_cell(&cell.right)
        )
    }
}

/// Alexander-Whitney diagonal `C → C ⊗ C` on the bar resolution:
/// `[g_0..g_n] ↦ Σ_p [g_0..g_p] ⊗ [g_p..g_n]`.
pub fn alexander_whitney(
    bar: &BarResolution,
    chain: &ResChain<BarCell>,
) -> ResChain<ProductCell<BarCell, BarCell>> {
    let group = bar.group();
    let mut out = ResChain::zero();
    for (h, cell, c) in chain.terms() {
        let verts = cell.vertices(group);
        for p in 0..verts.len() {
            let left = BarCell(verts[1..=p].to_vec());
            let (shift, right) = bar.normalize(&verts[p..]);
            out.add(c.clone(), h.clone(), ProductCell { left, shift, right });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_is_a_complex() {
        for d in 1..=3 {
            let c = FreeZGComplex::koszul(&Group::free_abelian(d)).unwrap();
            assert_eq!(c.rank(d), 1);
            assert_eq!(c.rank(1), d);
        }
        assert!(FreeZGComplex::wedge_of_circles(&Group::free(2)).is_ok());
    }

    #[test]
    fn bar_boundary_squares_to_zero() {
        let f2 = Group::free(2);
        let bar = BarResolution::new(f2.clone(), 1);
        for c in bar.generators(3).unwrap().into_iter().take(200) {
            let ch = ResChain::cell(&f2, c);
            assert!(ch.boundary(&bar).boundary(&bar).is_zero());
        }
    }

    #[test]
    fn product_boundary_squares_to_zero() {
        let z2 = Group::free_abelian(2);
        let p = tensor_complex(BarResolution::new(z2.clone(), 1), FreeZGComplex::koszul(&z2).unwrap(), 1).unwrap();
        for k in 0..=3 {
            for c in p.generators(k).unwrap().into_iter().take(150) {
                let ch = ResChain::cell(&z2, c);
                assert!(ch.boundary(&p).boundary(&p).is_zero());
            }
        }
    }

    #[test]
    fn alexander_whitney_is_a_chain_map() {
        let z2 = Group::free_abelian(2);
        let bar = BarResolution::new(z2.clone(), 1);
        let prod = tensor_complex(bar.clone(), bar.clone(), 1).unwrap();
        for c in bar.generators(2).unwrap() {
            let ch = ResChain::cell(&z2, c);
            let lhs = alexander_whitney(&bar, &ch).boundary(&prod);
            let rhs = alexander_whitney(&bar, &ch.boundary(&bar));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn torus_cycle_is_a_quotient_cycle() {
        let z2 = Group::free_abelian(2);
        let bar = BarResolution::new(z2.clone(), 2);
        let (a, b) = (z2.generator(0), z2.generator(1));
        let mut w = ResChain::cell(&z2, bar.inhomogeneous(&[a.clone(), b.clone()]));
        w.add(-BigInt::one(), z2.identity(), bar.inhomogeneous(&[b, a]));
        assert!(w.is_quotient_cycle(&bar));
    }
}
