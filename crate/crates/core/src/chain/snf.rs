//! Dense integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Validation("ragged matrix rows".into()));
        }
        let data = rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect();
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Validation(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Validation("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * c;
            if !v.is_zero() {
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * c;
            if !v.is_zero() {
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `U · A · V = D`
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)].clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Reducer {
    m: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    rhs: Option<Vec<BigInt>>,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
        if let Some(r) = &mut self.rhs {
            r.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.m.add_row(dst, src, c);
        if let Some(u) = &mut self.u {
            u.add_row(dst, src, c);
        }
        if let Some(r) = &mut self.rhs {
            let v = &r[src] * c;
            r[dst] += v;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.m.add_col(dst, src, c);
        if let Some(v) = &mut self.v {
            v.add_col(dst, src, c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.m.negate_row(r);
        if let Some(u) = &mut self.u {
            u.negate_row(r);
        }
        if let Some(x) = &mut self.rhs {
            x[r] = -&x[r];
        }
    }

    /// Position of the nonzero entry of least absolute value in the trailing block.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m.rows {
            for j in t..self.m.cols {
                let x = &self.m[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.m[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (rows, cols) = (self.m.rows, self.m.cols);
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.min_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if self.m[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.m[(i, t)].div_floor(&self.m[(t, t)]);
                    self.add_row(i, t, &-q);
                    if !self.m[(i, t)].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..cols {
                    if self.m[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.m[(t, j)].div_floor(&self.m[(t, t)]);
                    self.add_col(j, t, &-q);
                    if !self.m[(t, j)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    // bring the smallest remainder in row/column t to the pivot
                    let mut best = (t, t);
                    for i in t + 1..rows {
                        let x = &self.m[(i, t)];
                        if !x.is_zero() && x.abs() < self.m[best].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..cols {
                        let x = &self.m[(t, j)];
                        if !x.is_zero() && x.abs() < self.m[best].abs() {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                let pivot = self.m[(t, t)].clone();
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !self.m[(i, j)].is_multiple_of(&pivot)));
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.m[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        m: a.clone(),
        u: Some(IntMatrix::identity(a.rows)),
        v: Some(IntMatrix::identity(a.cols)),
        rhs: None,
    };
    r.run();
    SmithForm { u: r.u.unwrap(), d: r.m, v: r.v.unwrap() }
}

/// Invariant factors only (no transforms).
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut r = Reducer { m: a.clone(), u: None, v: None, rhs: None };
    r.run();
    (0..a.rows.min(a.cols)).map(|i| r.m[(i, i)].clone()).filter(|x| !x.is_zero()).collect()
}

pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).len()
}

/// An integer solution of `A x = b`, or `None` when there is none. Free
/// variables are set to zero, so the answer is deterministic.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows {
        return Err(Error::Validation("right-hand side length does not match row count".into()));
    }
    let mut r = Reducer { m: a.clone(), u: None, v: Some(IntMatrix::identity(a.cols)), rhs: Some(b.to_vec()) };
    r.run();
    let rhs = r.rhs.unwrap();
    let mut y = vec![BigInt::zero(); a.cols];
    for (i, bi) in rhs.iter().enumerate() {
        let d = if i < a.cols { r.m[(i, i)].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !bi.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, rem) = bi.div_rem(&d);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(r.v.unwrap().mul_vec(&y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
        let s = check(&IntMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
    }

    #[test]
    fn two_by_two() {
        // |det| = 8 and gcd of entries 2 force diag(2, 4)
        let a = m(&[vec![2, 4], vec![6, 8]]);
        let s = check(&a);
        assert_eq!(s.d, m(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(a.determinant().unwrap().abs(), BigInt::from(8));
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).determinant().unwrap(), BigInt::from(-3));
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).determinant().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn solves() {
        let a = m(&[vec![2, 4], vec![6, 8]]);
        let b = vec![BigInt::from(2), BigInt::from(2)];
        let x = solve_integer(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(solve_integer(&m(&[vec![2]]), &[BigInt::from(1)]).unwrap().is_none());
        // overdetermined inconsistent
        assert!(solve_integer(&m(&[vec![1], vec![1]]), &[BigInt::from(1), BigInt::from(2)]).unwrap().is_none());
    }
}
