//! `P = ℝ^D` with the Kuhn triangulation and `Γ` acting by lattice
//! translations `x ↦ x + A(γ)`.
//!
//! Simplices are `b + [1_{S_0}, 1_{S_1}, ..., 1_{S_k}]` for a base point
//! `b ∈ Z^D` and a chain `∅ = S_0 ⊊ S_1 ⊊ ... ⊊ S_k ⊆ {1..D}`. Orbits are
//! pairs (chain, class of `b` in `Z^D / A(Γ)`).

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::alpha::AlphaMap;
use crate::chain::{smith_normal_form, Face, GammaComplex, IntMatrix, InvariantChain, OrbitCell};
use crate::error::{Error, Result};
use crate::group::{Family, Group, GroupElement, ModuleTag, TensorElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Chain(Vec<u32>);

impl Chain {
    fn degree(&self) -> usize {
        self.0.len()
    }

    fn vertices(&self, base: &[i64]) -> Vec<Vec<i64>> {
        let mut out = vec![base.to_vec()];
        for &m in &self.0 {
            out.push(base.iter().enumerate().map(|(i, b)| b + i64::from(m >> i & 1)).collect());
        }
        out
    }

    fn label(&self) -> String {
        if self.0.is_empty() {
            return "v".into();
        }
        self.0.iter().map(|m| format!("{m:b}")).collect::<Vec<_>>().join("-")
    }
}

fn chains(dim: usize, degree: usize) -> Vec<Chain> {
    fn rec(dim: usize, degree: usize, cur: &mut Vec<u32>, out: &mut Vec<Chain>) {
        if cur.len() == degree {
            out.push(Chain(cur.clone()));
            return;
        }
        let last = cur.last().copied().unwrap_or(0);
        for m in 1u32..(1 << dim) {
            if m & last == last && m != last {
                cur.push(m);
                rec(dim, degree, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(dim, degree, &mut Vec::new(), &mut out);
    out
}

/// Reads a simplex given by its (increasing) vertices as base point and chain.
fn normalize(vertices: &[Vec<i64>]) -> (Vec<i64>, Chain) {
    let base = vertices[0].clone();
    let masks = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(&base).enumerate().fold(0u32, |m, (i, (a, b))| if a != b { m | 1 << i } else { m }))
        .collect();
    (base, Chain(masks))
}

#[derive(Debug)]
pub struct ParameterSpace {
    group: Group,
    action: Vec<Vec<i64>>,
    u: IntMatrix,
    moduli: Vec<BigInt>,
    coset_reps: Vec<Vec<i64>>,
    class_index: BTreeMap<Vec<BigInt>, usize>,
    chains: Vec<Vec<Chain>>,
    complex: GammaComplex,
    stabilizer: Vec<GroupElement>,
    preimages: Mutex<HashMap<Vec<i64>, GroupElement>>,
}

impl ParameterSpace {
    pub fn new(alpha: &AlphaMap) -> Result<Self> {
        let group = alpha.group().clone();
        let dim = alpha.dim();
        let rank = group.rank();
        let action = alpha.action_matrix().to_vec();
        let m = IntMatrix::from_rows(&action).unwrap_or_else(|_| IntMatrix::zeros(dim, rank));
        let m = if dim == 0 { IntMatrix::zeros(0, rank) } else { m };
        let snf = smith_normal_form(&m);
        let moduli: Vec<BigInt> = (0..dim).map(|i| if i < rank { snf.d[(i, i)].clone() } else { BigInt::zero() }).collect();
        if moduli.iter().any(|d| d.is_zero()) {
            return Err(Error::Scope("the action has infinitely many orbits (image lattice of infinite index)".into()));
        }
        let mut stabilizer: Vec<GroupElement> = (dim..rank)
            .map(|j| {
                let e: Vec<i64> = (0..rank).map(|i| snf.v[(i, j)].to_i64().expect("small kernel vector")).collect();
                group.from_exponents(&e)
            })
            .collect();
        if let Family::Free(r) = group.spec().family() {
            for i in 0..r {
                for j in i + 1..r {
                    let (a, b) = (group.generator(i), group.generator(j));
                    let ab = group.mul_unchecked(&a, &b);
                    let ba = group.mul_unchecked(&b, &a);
                    stabilizer.push(group.mul_unchecked(&ab, &group.inverse(&ba)));
                }
            }
        }
        stabilizer.retain(|g| !g.is_identity());
        let mut space = Self {
            group: group.clone(),
            action,
            u: snf.u,
            moduli,
            coset_reps: Vec::new(),
            class_index: BTreeMap::new(),
            chains: (0..=dim).map(|k| chains(dim, k)).collect(),
            complex: GammaComplex::new(group.clone(), vec![Vec::new()])?,
            stabilizer,
            preimages: Mutex::new(HashMap::new()),
        };
        space.find_coset_reps();
        space.complex = space.build_complex()?;
        Ok(space)
    }

    fn class_key(&self, x: &[i64]) -> Vec<BigInt> {
        let y = self.u.mul_vec(&x.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>());
        y.iter().zip(&self.moduli).map(|(a, d)| a.mod_floor(d)).collect()
    }

    /// Smallest representatives by `ℓ1` norm, then lexicographically.
    fn find_coset_reps(&mut self) {
        let dim = self.dim();
        let index: usize = self.moduli.iter().map(|d| d.to_usize().unwrap_or(usize::MAX)).product();
        let mut norm = 0i64;
        while self.coset_reps.len() < index {
            let mut shell = Vec::new();
            l1_sphere(dim, norm, &mut Vec::new(), &mut shell);
            shell.sort();
            for x in shell {
                let key = self.class_key(&x);
                if !self.class_index.contains_key(&key) {
                    self.class_index.insert(key, self.coset_reps.len());
                    self.coset_reps.push(x);
                }
            }
            norm += 1;
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.action.len()
    }

    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn is_free(&self) -> bool {
        self.stabilizer.is_empty()
    }

    pub fn complex(&self) -> &GammaComplex {
        &self.complex
    }

    pub fn stabilizer(&self) -> &[GroupElement] {
        &self.stabilizer
    }

    pub fn in_lattice(&self, v: &[i64]) -> bool {
        self.class_index.get(&self.class_key(v)) == Some(&0)
    }

    /// `γ` with `A(γ) = v` of minimal word length, ties broken by normal form.
    pub fn preimage(&self, v: &[i64]) -> Result<GroupElement> {
        if !self.in_lattice(v) {
            return Err(Error::Validation(format!("{v:?} is not in the image lattice")));
        }
        if let Some(g) = self.preimages.lock().expect("cache lock").get(v) {
            return Ok(g.clone());
        }
        let rank = self.group.rank();
        let mut norm = 0i64;
        let g = loop {
            let mut shell = Vec::new();
            l1_sphere(rank, norm, &mut Vec::new(), &mut shell);
            let best = shell
                .into_iter()
                .filter(|x| self.apply(x) == v)
                .map(|x| self.shortest_word(&x))
                .min();
            if let Some(g) = best {
                break g;
            }
            norm += 1;
        };
        self.preimages.lock().expect("cache lock").insert(v.to_vec(), g.clone());
        Ok(g)
    }

    fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.action.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// Least word (in ball order) with abelianisation `x` and length `|x|_1`.
    fn shortest_word(&self, x: &[i64]) -> GroupElement {
        match self.group.spec().family() {
            Family::FreeAbelian(_) => GroupElement::Abelian(x.to_vec()),
            Family::Free(_) => {
                let mut letters: Vec<i32> = Vec::new();
                for (i, &e) in x.iter().enumerate() {
                    let l = (i as i32 + 1) * e.signum() as i32;
                    letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
                }
                letters.sort_unstable();
                GroupElement::Free(letters)
            }
        }
    }

    pub fn orbit_count(&self, k: usize) -> usize {
        self.chains.get(k).map_or(0, |c| c.len()) * self.index()
    }

    fn orbit_of(&self, chain: &Chain, coset: usize) -> usize {
        let pos = self.chains[chain.degree()].iter().position(|c| c == chain).expect("known chain");
        pos * self.index() + coset
    }

    fn orbit_parts(&self, k: usize, orbit: usize) -> (&Chain, &Vec<i64>) {
        (&self.chains[k][orbit / self.index()], &self.coset_reps[orbit % self.index()])
    }

    /// Integer vertices of the representative simplex of an orbit.
    pub fn representative(&self, k: usize, orbit: usize) -> Vec<Vec<i64>> {
        let (chain, base) = self.orbit_parts(k, orbit);
        chain.vertices(base)
    }

    /// Orbit and translation vector of an arbitrary Kuhn simplex.
    pub fn locate(&self, vertices: &[Vec<i64>]) -> Result<(usize, Vec<i64>)> {
        let (base, chain) = normalize(vertices);
        let key = self.class_key(&base);
        let coset = self.class_index[&key];
        let shift: Vec<i64> = base.iter().zip(&self.coset_reps[coset]).map(|(a, b)| a - b).collect();
        if chain.0.windows(2).any(|w| w[0] & w[1] != w[0] || w[0] == w[1]) || chain.0.first() == Some(&0) {
            return Err(Error::Validation(format!("{vertices:?} is not a Kuhn simplex")));
        }
        Ok((self.orbit_of(&chain, coset), shift))
    }

    fn build_complex(&self) -> Result<GammaComplex> {
        let mut cells = Vec::new();
        for k in 0..=self.dim() {
            let mut level = Vec::new();
            for orbit in 0..self.orbit_count(k) {
                let (chain, _) = self.orbit_parts(k, orbit);
                let verts = self.representative(k, orbit);
                let mut faces = Vec::new();
                if k > 0 {
                    for i in 0..verts.len() {
                        let mut f = verts.clone();
                        f.remove(i);
                        let (target, shift) = self.locate(&f)?;
                        faces.push(Face {
                            orbit: target,
                            translator: self.preimage(&shift)?,
                            sign: if i % 2 == 0 { 1 } else { -1 },
                        });
                    }
                }
                level.push(OrbitCell {
                    id: format!("{}@{}", chain.label(), orbit % self.index()),
                    faces,
                    stabilizer: self.stabilizer.clone(),
                });
            }
            cells.push(level);
        }
        GammaComplex::new(self.group.clone(), cells)
    }

    /// Orientation of a top simplex relative to the standard orientation.
    fn top_sign(&self, orbit: usize) -> i64 {
        let (chain, _) = self.orbit_parts(self.dim(), orbit);
        let mut prev = 0u32;
        let perm: Vec<u32> = chain
            .0
            .iter()
            .map(|&m| {
                let bit = (m & !prev).trailing_zeros();
                prev = m;
                bit
            })
            .collect();
        let inv = (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The locally finite fundamental cycle `Σ ±σ` over all top simplices.
    pub fn fundamental_cycle(&self) -> Result<InvariantChain> {
        let d = self.dim();
        let coeffs = (0..self.orbit_count(d)).map(|o| (o, TensorElement::integer(BigInt::from(self.top_sign(o))))).collect();
        InvariantChain::new(&self.complex, d, ModuleTag::integers(), coeffs)
    }

    /// `Σ_σ σ` over all `k`-simplices of the given chain type.
    pub fn coordinate_cycle(&self, k: usize, chain_index: usize) -> Result<InvariantChain> {
        let coeffs = (0..self.index()).map(|c| (chain_index * self.index() + c, TensorElement::one())).collect();
        InvariantChain::new(&self.complex, k, ModuleTag::integers(), coeffs)
    }

    /// Orbit index of the edge `[0, e_i]` type, for listing 1-cycles.
    pub fn edge_chain_index(&self, axis: usize) -> Option<usize> {
        self.chains.get(1)?.iter().position(|c| c.0 == vec![1u32 << axis])
    }

    pub fn orbit_label(&self, k: usize, orbit: usize) -> &str {
        &self.complex.cells(k)[orbit].id
    }
}

fn l1_sphere(dim: usize, norm: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let used: i64 = cur.iter().map(|x| x.abs()).sum();
    let left = norm - used;
    if cur.len() + 1 == dim {
        cur.push(left);
        out.push(cur.clone());
        cur.pop();
        if left != 0 {
            cur.push(-left);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    if dim == 0 {
        if norm == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for x in -left..=left {
        cur.push(x);
        l1_sphere(dim, norm, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{invariant_boundary, HomologyGroup};

    #[test]
    fn torus_quotient_homology() {
        for d in 1..=3 {
            let z = Group::free_abelian(d);
            let space = ParameterSpace::new(&AlphaMap::translation(&z).unwrap()).unwrap();
            let h = space.complex().quotient().unwrap().homology();
            let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
            for (k, hk) in h.iter().enumerate() {
                assert_eq!(*hk, HomologyGroup::free(binom(d, k)));
            }
            let z = space.fundamental_cycle().unwrap();
            if d > 0 {
                assert!(invariant_boundary(space.complex(), &z).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn cocycle_space_on_line() {
        let z = Group::free_abelian(1);
        let space = ParameterSpace::new(&AlphaMap::cocycle(&z, vec![3]).unwrap()).unwrap();
        assert_eq!(space.index(), 3);
        assert!(space.is_free());
        assert_eq!(space.preimage(&[-6]).unwrap(), z.pow(&z.generator(0), -2));
        let f2 = Group::free(2);
        let space = ParameterSpace::new(&AlphaMap::cocycle(&f2, vec![1, 2]).unwrap()).unwrap();
        assert!(!space.is_free());
        assert_eq!(space.index(), 1);
        let g = space.preimage(&[3]).unwrap();
        assert_eq!(g.word_length(), 2);
    }

    #[test]
    fn point_space() {
        let f2 = Group::free(2);
        let space = ParameterSpace::new(&AlphaMap::point(&f2)).unwrap();
        assert_eq!(space.orbit_count(0), 1);
        assert_eq!(space.fundamental_cycle().unwrap().coefficient(0), TensorElement::one());
    }

    #[test]
    fn infinite_index_is_out_of_scope() {
        let z2 = Group::free_abelian(2);
        let a = AlphaMap::cocycle(&z2, vec![0, 0]);
        assert!(a.is_err());
    }
}
