//! Maps `α: Γ × P → ℝ^n` of the form `α(γ, x) = (A(γ) - x) / λ` where `Γ`
//! acts on `P = ℝ^D` by translation through a homomorphism `A`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{Family, Group, GroupElement};

pub type Point = Vec<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaFamily {
    /// `Z^d` on `ℝ^d`, `α(y, x) = y - x`.
    Translation,
    /// `γ(x) = x + f(γ)` on `ℝ`, `α(γ, x) = -γ⁻¹(x)` rescaled by `max |f(s)|`.
    Cocycle { f: Vec<i64> },
    /// `P` is a point.
    Point,
}

#[derive(Debug, Clone)]
pub struct AlphaMap {
    group: Group,
    family: AlphaFamily,
    /// `dim × rank` action matrix applied to abelianised exponents.
    action: Vec<Vec<i64>>,
    scale: i64,
}

impl AlphaMap {
    pub fn translation(group: &Group) -> Result<Self> {
        let d = match group.spec().family() {
            Family::FreeAbelian(d) => d,
            _ => return Err(Error::Config("translation maps need Z^d".into())),
        };
        let action = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        Ok(Self { group: group.clone(), family: AlphaFamily::Translation, action, scale: 1 })
    }

    pub fn cocycle(group: &Group, f: Vec<i64>) -> Result<Self> {
        if f.len() != group.rank() {
            return Err(Error::Config(format!("f needs {} values, got {}", group.rank(), f.len())));
        }
        let scale = f.iter().map(|x| x.abs()).max().unwrap_or(0);
        if scale == 0 {
            return Err(Error::Config("f must be nonzero".into()));
        }
        Ok(Self { group: group.clone(), family: AlphaFamily::Cocycle { f: f.clone() }, action: vec![f], scale })
    }

    pub fn point(group: &Group) -> Self {
        Self { group: group.clone(), family: AlphaFamily::Point, action: Vec::new(), scale: 1 }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn family(&self) -> &AlphaFamily {
        &self.family
    }

    pub fn name(&self) -> &'static str {
        match self.family {
            AlphaFamily::Translation => "translation",
            AlphaFamily::Cocycle { .. } => "cocycle",
            AlphaFamily::Point => "point",
        }
    }

    /// Dimension of `P` and of the target.
    pub fn dim(&self) -> usize {
        self.action.len()
    }

    pub fn action_matrix(&self) -> &[Vec<i64>] {
        &self.action
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// `A(γ) ∈ Z^D`
    pub fn translation_vector(&self, g: &GroupElement) -> Vec<i64> {
        let e = self.group.abelianize(g);
        self.action.iter().map(|row| row.iter().zip(&e).map(|(a, b)| a * b).sum()).collect()
    }

    /// `α(γ, x)`
    pub fn eval(&self, g: &GroupElement, x: &[BigRational]) -> Point {
        let a = self.translation_vector(g);
        let s = BigRational::from_integer(BigInt::from(self.scale));
        a.iter().zip(x).map(|(ai, xi)| (BigRational::from_integer(BigInt::from(*ai)) - xi) / &s).collect()
    }

    /// `ᾱ(Σ t_i γ_i, x) = Σ t_i α(γ_i, x)`
    pub fn eval_barycentric(&self, gs: &[GroupElement], weights: &[BigRational], x: &[BigRational]) -> Point {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (g, t) in gs.iter().zip(weights) {
            for (o, v) in out.iter_mut().zip(self.eval(g, x)) {
                *o += v * t;
            }
        }
        out
    }

    /// Radius `ρ(R)` with `|α(γ, x)|_∞ > R` whenever `|x|_∞ > ρ(R)`.
    pub fn properness_radius(&self, g: &GroupElement, r: &BigRational) -> BigRational {
        let a = self.translation_vector(g).iter().map(|x| x.abs()).max().unwrap_or(0);
        r * BigRational::from_integer(BigInt::from(self.scale)) + BigRational::from_integer(BigInt::from(a))
    }

    /// Largest `|α(γ, x) - α(γ', x)|_∞ / d(γ, γ')` over pairs in the ball;
    /// at most 1 for a 1-Lipschitz map.
    pub fn lipschitz_ratio(&self, radius: usize) -> Result<BigRational> {
        let ball = self.group.ball(radius)?;
        let s = BigInt::from(self.scale);
        let mut worst = BigRational::zero();
        for g in &ball {
            for h in &ball {
                let d = self.group.distance(g, h);
                if d == 0 {
                    continue;
                }
                let (a, b) = (self.translation_vector(g), self.translation_vector(h));
                let diff = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).max().unwrap_or(0);
                let r = BigRational::new(BigInt::from(diff), &s * BigInt::from(d as i64));
                if r > worst {
                    worst = r;
                }
            }
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn translation_on_line() {
        let z = Group::free_abelian(1);
        let a = AlphaMap::translation(&z).unwrap();
        assert_eq!(a.eval(&z.identity(), &[q(3)]), vec![q(-3)]);
        assert_eq!(a.lipschitz_ratio(2).unwrap(), q(1));
    }

    #[test]
    fn cocycle_segment() {
        let z = Group::free_abelian(1);
        let a = AlphaMap::cocycle(&z, vec![2]).unwrap();
        let g = z.pow(&z.generator(0), 3);
        // unscaled segment [-m, f(γ) - m], here divided by λ = 2
        assert_eq!(a.eval(&z.identity(), &[q(1)]), vec![BigRational::new((-1).into(), 2.into())]);
        assert_eq!(a.eval(&g, &[q(1)]), vec![BigRational::new(5.into(), 2.into())]);
        assert!(a.lipschitz_ratio(3).unwrap() <= q(1));
    }

    #[test]
    fn diagonal_invariance() {
        let f2 = Group::free(2);
        let a = AlphaMap::cocycle(&f2, vec![1, -2]).unwrap();
        let x = vec![BigRational::new(1.into(), 3.into())];
        for g in f2.ball(2).unwrap() {
            for h in f2.ball(1).unwrap() {
                let gx: Vec<BigRational> = x
                    .iter()
                    .zip(a.translation_vector(&g))
                    .map(|(xi, ai)| xi + BigRational::from_integer(ai.into()))
                    .collect();
                assert_eq!(a.eval(&f2.mul_unchecked(&g, &h), &gx), a.eval(&h, &x));
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(AlphaMap::translation(&Group::free(2)).is_err());
        assert!(AlphaMap::cocycle(&Group::free_abelian(2), vec![1]).is_err());
        assert!(AlphaMap::cocycle(&Group::free_abelian(1), vec![0]).is_err());
    }
}
