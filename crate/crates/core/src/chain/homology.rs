//! Integral homology of finite chain complexes over `Z`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::snf::{invariant_factors, IntMatrix};
use crate::error::{Error, Result};

/// A finite chain complex of free abelian groups. `boundary(k)` is the
/// matrix of `C_k -> C_{k-1}` with shape `dim(k-1) x dim(k)`.
#[derive(Debug, Clone)]
pub struct ZComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        Self { betti, torsion: Vec::new() }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl ZComplex {
    /// `boundaries[k-1]` is the boundary out of degree `k`.
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if boundaries.len() + 1 != dims.len().max(1) {
            return Err(Error::Validation("need one boundary matrix per positive degree".into()));
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.rows() != dims[k] || b.cols() != dims[k + 1] {
                return Err(Error::Validation(format!("boundary out of degree {} has the wrong shape", k + 1)));
            }
        }
        for w in boundaries.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Err(Error::Validation("boundary of boundary is not zero".into()));
            }
        }
        Ok(Self { dims, boundaries })
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn boundary(&self, k: usize) -> Option<&IntMatrix> {
        if k == 0 {
            None
        } else {
            self.boundaries.get(k - 1)
        }
    }

    pub fn homology(&self) -> Vec<HomologyGroup> {
        let factors: Vec<Vec<BigInt>> = self.boundaries.iter().map(invariant_factors).collect();
        (0..self.dims.len())
            .map(|k| {
                let rank_out = if k == 0 { 0 } else { factors[k - 1].len() };
                let incoming = factors.get(k);
                let rank_in = incoming.map_or(0, |f| f.len());
                HomologyGroup {
                    betti: self.dims[k] - rank_out - rank_in,
                    torsion: incoming
                        .map(|f| f.iter().filter(|x| !x.is_one()).cloned().collect())
                        .unwrap_or_default(),
                }
            })
            .collect()
    }

    /// `(C ⊗ D)_n = ⊕ C_i ⊗ D_{n-i}` with `∂(c⊗d) = ∂c⊗d + (-1)^{|c|} c⊗∂d`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let top = self.top_degree() + other.top_degree();
        // basis of degree n: (i, a, b) with a < dim C_i, b < dim D_{n-i}
        let basis: Vec<Vec<(usize, usize, usize)>> = (0..=top)
            .map(|n| {
                let mut v = Vec::new();
                for i in 0..=n {
                    for a in 0..self.dim(i) {
                        for b in 0..other.dim(n - i) {
                            v.push((i, a, b));
                        }
                    }
                }
                v
            })
            .collect();
        let index: Vec<BTreeMap<(usize, usize, usize), usize>> =
            basis.iter().map(|b| b.iter().enumerate().map(|(k, x)| (*x, k)).collect()).collect();
        let mut mats = Vec::new();
        for n in 1..=top {
            let mut m = IntMatrix::zeros(basis[n - 1].len(), basis[n].len());
            for (col, &(i, a, b)) in basis[n].iter().enumerate() {
                let j = n - i;
                if let Some(d) = self.boundary(i) {
                    for r in 0..d.rows() {
                        let c = &d[(r, a)];
                        if !c.is_zero() {
                            let row = index[n - 1][&(i - 1, r, b)];
                            m[(row, col)] += c;
                        }
                    }
                }
                if let Some(d) = other.boundary(j) {
                    let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    for r in 0..d.rows() {
                        let c = &d[(r, b)];
                        if !c.is_zero() {
                            let row = index[n - 1][&(i, a, r)];
                            m[(row, col)] += &sign * c;
                        }
                    }
                }
            }
            mats.push(m);
        }
        Self::new(basis.iter().map(|b| b.len()).collect(), mats)
    }
}

/// An abstract simplicial complex given by its facets; used for
/// non-equivariant sanity computations.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn from_facets(facets: &[Vec<usize>]) -> Self {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            let n = f.len();
            for mask in 1u64..(1u64 << n) {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = s.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, BTreeSet::new());
                }
                by_dim[d].insert(s);
            }
        }
        Self { simplices: by_dim.into_iter().map(|s| s.into_iter().collect()).collect() }
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, |s| s.len())
    }

    pub fn chain_complex(&self) -> Result<ZComplex> {
        let dims: Vec<usize> = self.simplices.iter().map(|s| s.len()).collect();
        let mut mats = Vec::new();
        for k in 1..self.simplices.len() {
            let idx: BTreeMap<&Vec<usize>, usize> =
                self.simplices[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
            let mut m = IntMatrix::zeros(dims[k - 1], dims[k]);
            for (col, s) in self.simplices[k].iter().enumerate() {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    m[(idx[&f], col)] += sign;
                }
            }
            mats.push(m);
        }
        ZComplex::new(dims, mats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_cw() {
        let c = ZComplex::new(vec![1, 1], vec![IntMatrix::zeros(1, 1)]).unwrap();
        assert_eq!(c.homology(), vec![HomologyGroup::free(1), HomologyGroup::free(1)]);
    }

    #[test]
    fn torus_cw() {
        let c = ZComplex::new(vec![1, 2, 1], vec![IntMatrix::zeros(1, 2), IntMatrix::zeros(2, 1)]).unwrap();
        assert_eq!(c.homology(), vec![HomologyGroup::free(1), HomologyGroup::free(2), HomologyGroup::free(1)]);
    }

    #[test]
    fn projective_plane() {
        // six-vertex triangulation
        let facets = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 5, 1],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![3, 4, 1],
            vec![4, 5, 2],
            vec![5, 1, 3],
        ];
        let k = SimplicialComplex::from_facets(&facets);
        assert_eq!((k.count(0), k.count(1), k.count(2)), (6, 15, 10));
        let h = k.chain_complex().unwrap().homology();
        assert_eq!(h[0], HomologyGroup::free(1));
        assert_eq!(h[1], HomologyGroup { betti: 0, torsion: vec![BigInt::from(2)] });
        assert_eq!(h[2], HomologyGroup::free(0));
    }

    #[test]
    fn rejects_non_complex() {
        let d1 = IntMatrix::from_rows(&[vec![1]]).unwrap();
        let d2 = IntMatrix::from_rows(&[vec![1]]).unwrap();
        assert!(ZComplex::new(vec![1, 1, 1], vec![d1, d2]).is_err());
    }

    #[test]
    fn tensor_of_circles_is_torus() {
        let s = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![0, 2]]).chain_complex().unwrap();
        let t = s.tensor(&s).unwrap();
        let h = t.homology();
        assert_eq!(h, vec![HomologyGroup::free(1), HomologyGroup::free(2), HomologyGroup::free(1)]);
    }
}
