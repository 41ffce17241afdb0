//! The compactly supported top cocycle on `ℝ^n`, realised as the signed
//! incidence of a generic rational point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::alpha::Point;
use crate::error::{Error, Result};

/// Denominator scale of generic coordinates.
pub const GENERIC_MODULUS: i64 = 1_000_003;

/// Re-picks allowed before a run gives up.
pub const MAX_REPICKS: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportCocycle {
    point: Point,
}

impl SupportCocycle {
    pub fn new(point: Point) -> Self {
        Self { point }
    }

    /// Coordinates `1/4 + k/(2q)` with `k` drawn from a seeded stream;
    /// `attempt` selects an independent stream for re-picks.
    pub fn generic(dim: usize, seed: u64, attempt: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        let q = BigInt::from(GENERIC_MODULUS);
        let point = (0..dim)
            .map(|_| {
                let k: i64 = rng.gen_range(1..GENERIC_MODULUS);
                BigRational::new(BigInt::one(), BigInt::from(4)) + BigRational::new(BigInt::from(k), &q * 2)
            })
            .collect();
        Self { point }
    }

    pub fn dim(&self) -> usize {
        self.point.len()
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    pub fn format_point(&self) -> String {
        let parts: Vec<String> = self.point.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }

    /// `ω(S) ∈ {-1, 0, 1}` for an affine `n`-simplex `S` given by `n + 1` vertices.
    pub fn eval(&self, vertices: &[Point]) -> Result<i8> {
        omega_eval(vertices, &self.point)
    }
}

/// Signed incidence of `p` in the open simplex spanned by `vertices`.
pub fn omega_eval(vertices: &[Point], p: &[BigRational]) -> Result<i8> {
    let n = p.len();
    if vertices.len() != n + 1 || vertices.iter().any(|v| v.len() != n) {
        return Err(Error::DegreeMismatch { expected: n + 1, found: vertices.len() });
    }
    if n == 0 {
        return Ok(1);
    }
    // columns v_i - v_0, augmented by p - v_0
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = (1..=n).map(|c| &vertices[c][r] - &vertices[0][r]).collect();
            row.push(&p[r] - &vertices[0][r]);
            row
        })
        .collect();
    let (rank, det_sign, pivots) = eliminate(&mut m, n);
    if rank < n {
        let consistent = m.iter().skip(rank).all(|row| row[n].is_zero());
        return if consistent {
            Err(Error::GenericityViolation(format!("degenerate simplex spans the base point: {}", fmt(vertices))))
        } else {
            Ok(0)
        };
    }
    // back substitution for barycentric coordinates
    let mut b = vec![BigRational::zero(); n];
    for r in (0..n).rev() {
        let c = pivots[r];
        let mut s = m[r][n].clone();
        for (cc, item) in b.iter().enumerate().skip(c + 1) {
            s -= &m[r][cc] * item;
        }
        b[c] = s / &m[r][c];
    }
    let b0 = BigRational::one() - b.iter().fold(BigRational::zero(), |acc, x| acc + x);
    let coords: Vec<&BigRational> = std::iter::once(&b0).chain(b.iter()).collect();
    if coords.iter().any(|x| x.is_negative()) {
        return Ok(0);
    }
    if coords.iter().any(|x| x.is_zero()) {
        return Err(Error::GenericityViolation(format!("base point lies on a face of {}", fmt(vertices))));
    }
    Ok(det_sign)
}

/// Row reduction on the first `n` columns; returns rank, determinant sign and pivot columns.
fn eliminate(m: &mut [Vec<BigRational>], n: usize) -> (usize, i8, Vec<usize>) {
    let rows = m.len();
    let mut sign = 1i8;
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        if m[r][c].is_negative() {
            sign = -sign;
        }
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for j in c..=n {
                let d = &f * &m[r][j];
                m[i][j] -= d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, if r == n { sign } else { 0 }, pivots)
}

fn fmt(vertices: &[Point]) -> String {
    let vs: Vec<String> = vertices
        .iter()
        .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", vs.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn pt(xs: &[(i64, i64)]) -> Point {
        xs.iter().map(|&(a, b)| q(a, b)).collect()
    }

    #[test]
    fn triangle_examples() {
        let s = vec![pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)]), pt(&[(0, 1), (1, 1)])];
        let p = pt(&[(1, 3), (1, 3)]);
        assert_eq!(omega_eval(&s, &p).unwrap(), 1);
        let swapped = vec![s[1].clone(), s[0].clone(), s[2].clone()];
        assert_eq!(omega_eval(&swapped, &p).unwrap(), -1);
        assert_eq!(omega_eval(&s, &pt(&[(5, 1), (5, 1)])).unwrap(), 0);
    }

    #[test]
    fn boundary_and_degenerate_cases() {
        let s = vec![pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)]), pt(&[(0, 1), (1, 1)])];
        assert!(matches!(omega_eval(&s, &pt(&[(1, 2), (0, 1)])), Err(Error::GenericityViolation(_))));
        let flat = vec![pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)]), pt(&[(2, 1), (0, 1)])];
        assert_eq!(omega_eval(&flat, &pt(&[(1, 3), (1, 3)])).unwrap(), 0);
        assert!(omega_eval(&flat, &pt(&[(1, 3), (0, 1)])).is_err());
        assert_eq!(omega_eval(&[Vec::new()], &[]).unwrap(), 1);
    }

    #[test]
    fn segments() {
        let p = pt(&[(1, 2)]);
        assert_eq!(omega_eval(&[pt(&[(0, 1)]), pt(&[(1, 1)])], &p).unwrap(), 1);
        assert_eq!(omega_eval(&[pt(&[(1, 1)]), pt(&[(0, 1)])], &p).unwrap(), -1);
        assert_eq!(omega_eval(&[pt(&[(1, 1)]), pt(&[(2, 1)])], &p).unwrap(), 0);
    }

    #[test]
    fn generic_points_are_reproducible() {
        let a = SupportCocycle::generic(3, 7, 0);
        assert_eq!(a, SupportCocycle::generic(3, 7, 0));
        assert_ne!(a, SupportCocycle::generic(3, 7, 1));
        assert!(a.point().iter().all(|x| *x > q(1, 4) && *x < q(3, 4)));
    }
}
