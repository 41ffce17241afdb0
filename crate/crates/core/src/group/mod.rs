//! Normal-form arithmetic for free abelian groups `Z^d` and free groups `F_r`.
//!
//! Elements are stored in a normal form (exponent vector, resp. freely reduced
//! word) so that equality of elements is equality of their representations.
//! The word metric is taken with respect to the standard generators.

mod ring;
mod tensor;

pub use ring::GroupRingElement;
pub use tensor::{FactorKind, ModuleTag, TensorElement};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default upper bound on the number of elements a ball enumeration may produce.
pub const DEFAULT_BALL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    FreeAbelian(usize),
    Free(usize),
}

/// A group family together with generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: Family,
    names: Vec<String>,
}

impl GroupSpec {
    pub fn new(family: Family, names: Vec<String>) -> Result<Self> {
        let rank = match family {
            Family::FreeAbelian(d) => d,
            Family::Free(r) => r,
        };
        if rank == 0 {
            return Err(Error::Config("group rank must be at least 1".into()));
        }
        if names.len() != rank {
            return Err(Error::Config(format!(
                "expected {rank} generator names, got {}",
                names.len()
            )));
        }
        let distinct: BTreeSet<_> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::Config("duplicate generator names".into()));
        }
        for n in &names {
            if n.is_empty() || n == "e" || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Config(format!("invalid generator name {n:?}")));
            }
        }
        Ok(Self { family, names })
    }

    /// `Z^d` with generators `t` (d = 1) or `t1, ..., td`.
    pub fn free_abelian(d: usize) -> Result<Self> {
        let names = if d == 1 {
            vec!["t".to_string()]
        } else {
            (1..=d).map(|i| format!("t{i}")).collect()
        };
        Self::new(Family::FreeAbelian(d), names)
    }

    /// `F_r` with generators `a, b, c, ...`.
    pub fn free(r: usize) -> Result<Self> {
        if r > 26 {
            return Err(Error::Config("free groups of rank > 26 need explicit names".into()));
        }
        let names = (0..r).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Self::new(Family::Free(r), names)
    }

    /// Parses `Z^d` or `F_r`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Config(format!("unrecognised group {s:?}; expected Z^d or F_r"));
        if let Some(d) = s.strip_prefix("Z^") {
            Self::free_abelian(d.trim().parse().map_err(|_| bad())?)
        } else if s == "Z" {
            Self::free_abelian(1)
        } else if let Some(r) = s.strip_prefix("F_") {
            Self::free(r.trim().parse().map_err(|_| bad())?)
        } else {
            Err(bad())
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::FreeAbelian(d) => write!(f, "Z^{d}"),
            Family::Free(r) => write!(f, "F_{r}"),
        }
    }
}

/// A group element in normal form.
///
/// Free words store letters as signed one-based generator indices, `-i`
/// standing for the inverse of generator `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Abelian(Vec<i64>),
    Free(Vec<i32>),
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Abelian(v) => v.iter().all(|&x| x == 0),
            GroupElement::Free(w) => w.is_empty(),
        }
    }

    /// Length of the stored normal form.
    pub fn word_length(&self) -> usize {
        match self {
            GroupElement::Abelian(v) => v.iter().map(|x| x.unsigned_abs() as usize).sum(),
            GroupElement::Free(w) => w.len(),
        }
    }
}

/// A group: specification plus the ball-enumeration cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    spec: GroupSpec,
    ball_cap: usize,
    trivial: bool,
}

impl Group {
    pub fn new(spec: GroupSpec) -> Self {
        Self { spec, ball_cap: DEFAULT_BALL_CAP, trivial: false }
    }

    pub fn parse(s: &str) -> Result<Self> {
        GroupSpec::parse(s).map(Self::new)
    }

    pub fn free_abelian(d: usize) -> Self {
        Self::new(GroupSpec::free_abelian(d).expect("d >= 1"))
    }

    pub fn free(r: usize) -> Self {
        Self::new(GroupSpec::free(r).expect("1 <= r <= 26"))
    }

    /// The trivial group, modelled as `Z^0`. Only reachable programmatically.
    pub fn trivial() -> Self {
        Self {
            spec: GroupSpec { family: Family::FreeAbelian(0), names: Vec::new() },
            ball_cap: DEFAULT_BALL_CAP,
            trivial: true,
        }
    }

    pub fn with_ball_cap(mut self, cap: usize) -> Self {
        self.ball_cap = cap;
        self
    }

    pub fn ball_cap(&self) -> usize {
        self.ball_cap
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self.spec.family, Family::FreeAbelian(_))
    }

    pub fn identity(&self) -> GroupElement {
        match self.spec.family {
            Family::FreeAbelian(d) => GroupElement::Abelian(vec![0; d]),
            Family::Free(_) => GroupElement::Free(Vec::new()),
        }
    }

    /// The `i`-th standard generator (zero-based).
    pub fn generator(&self, i: usize) -> GroupElement {
        assert!(i < self.rank(), "generator index out of range");
        match self.spec.family {
            Family::FreeAbelian(d) => {
                let mut v = vec![0; d];
                v[i] = 1;
                GroupElement::Abelian(v)
            }
            Family::Free(_) => GroupElement::Free(vec![i as i32 + 1]),
        }
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Generators and their inverses.
    pub fn symmetric_generators(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(2 * self.rank());
        for g in self.generators() {
            out.push(self.inverse(&g));
            out.push(g);
        }
        out
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        match (self.spec.family, g) {
            (Family::FreeAbelian(d), GroupElement::Abelian(v)) if v.len() == d => Ok(()),
            (Family::Free(r), GroupElement::Free(w)) => {
                let r = r as i32;
                if w.iter().any(|&l| l == 0 || l.abs() > r) {
                    return Err(Error::Config(format!("letter out of range in {w:?}")));
                }
                if w.windows(2).any(|p| p[0] == -p[1]) {
                    return Err(Error::Config(format!("word {w:?} is not reduced")));
                }
                Ok(())
            }
            _ => Err(Error::Config(format!("element {g:?} does not belong to {}", self.spec))),
        }
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    /// Product of two elements already known to belong to this group.
    pub fn mul_unchecked(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match (g, h) {
            (GroupElement::Abelian(a), GroupElement::Abelian(b)) => {
                GroupElement::Abelian(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (GroupElement::Free(a), GroupElement::Free(b)) => {
                let mut w = a.clone();
                for &l in b {
                    if w.last() == Some(&-l) {
                        w.pop();
                    } else {
                        w.push(l);
                    }
                }
                GroupElement::Free(w)
            }
            _ => panic!("mixed group families"),
        }
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        match g {
            GroupElement::Abelian(a) => GroupElement::Abelian(a.iter().map(|x| -x).collect()),
            GroupElement::Free(w) => GroupElement::Free(w.iter().rev().map(|l| -l).collect()),
        }
    }

    /// `g^-1 h`
    pub fn left_divide(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.mul_unchecked(&self.inverse(g), h)
    }

    pub fn pow(&self, g: &GroupElement, n: i64) -> GroupElement {
        let base = if n < 0 { self.inverse(g) } else { g.clone() };
        let mut out = self.identity();
        for _ in 0..n.unsigned_abs() {
            out = self.mul_unchecked(&out, &base);
        }
        out
    }

    pub fn word_length(&self, g: &GroupElement) -> usize {
        g.word_length()
    }

    /// Word-metric distance `|g^-1 h|`.
    pub fn distance(&self, g: &GroupElement, h: &GroupElement) -> usize {
        self.left_divide(g, h).word_length()
    }

    /// Exponent sums: the image in the abelianisation `Z^rank`.
    pub fn abelianize(&self, g: &GroupElement) -> Vec<i64> {
        match g {
            GroupElement::Abelian(v) => v.clone(),
            GroupElement::Free(w) => {
                let mut v = vec![0i64; self.rank()];
                for &l in w {
                    v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
                }
                v
            }
        }
    }

    /// The element `s_1^{e_1} ... s_r^{e_r}`.
    pub fn from_exponents(&self, e: &[i64]) -> GroupElement {
        assert_eq!(e.len(), self.rank());
        match self.spec.family {
            Family::FreeAbelian(_) => GroupElement::Abelian(e.to_vec()),
            Family::Free(_) => {
                let mut out = self.identity();
                for (i, &x) in e.iter().enumerate() {
                    out = self.mul_unchecked(&out, &self.pow(&self.generator(i), x));
                }
                out
            }
        }
    }

    /// All elements of word length at most `radius`, sorted by (length, normal form).
    pub fn ball(&self, radius: usize) -> Result<Vec<GroupElement>> {
        let size = self.ball_size(radius);
        if size.is_none_or(|s| s > self.ball_cap as u128) {
            return Err(Error::BallCapExceeded { radius, cap: self.ball_cap });
        }
        let mut out = match self.spec.family {
            Family::FreeAbelian(d) => {
                let mut acc = Vec::new();
                let mut cur = vec![0i64; d];
                abelian_ball(&mut cur, 0, radius as i64, &mut acc);
                acc.into_iter().map(GroupElement::Abelian).collect::<Vec<_>>()
            }
            Family::Free(r) => {
                let mut acc = vec![Vec::new()];
                let mut frontier = vec![Vec::<i32>::new()];
                for _ in 0..radius {
                    let mut next = Vec::new();
                    for w in &frontier {
                        for l in (1..=r as i32).flat_map(|i| [i, -i]) {
                            if w.last() == Some(&-l) {
                                continue;
                            }
                            let mut v = w.clone();
                            v.push(l);
                            next.push(v);
                        }
                    }
                    acc.extend(next.iter().cloned());
                    frontier = next;
                }
                acc.into_iter().map(GroupElement::Free).collect()
            }
        };
        out.sort_by(|a, b| a.word_length().cmp(&b.word_length()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    fn ball_size(&self, radius: usize) -> Option<u128> {
        match self.spec.family {
            Family::FreeAbelian(d) => {
                // sum_k 2^k C(d,k) C(R,k)
                let mut total: u128 = 0;
                for k in 0..=d.min(radius) {
                    let term = 2u128.checked_pow(k as u32)?
                        .checked_mul(binomial(d, k)?)?
                        .checked_mul(binomial(radius, k)?)?;
                    total = total.checked_add(term)?;
                }
                Some(total)
            }
            Family::Free(r) => {
                let mut total: u128 = 1;
                let mut sphere: u128 = 2 * r as u128;
                for _ in 0..radius {
                    total = total.checked_add(sphere)?;
                    sphere = sphere.checked_mul(2 * r as u128 - 1)?;
                }
                Some(total)
            }
        }
    }

    /// Parses words such as `e`, `t^3`, `a*b^-1*a`, `t1^2 t2`.
    pub fn parse_word(&self, s: &str) -> Result<GroupElement> {
        let s = s.trim();
        let mut out = self.identity();
        if s == "e" || s == "1" || s.is_empty() {
            return Ok(out);
        }
        for tok in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::Config(format!("bad exponent in {tok:?}")))?),
                None => (tok, 1),
            };
            if name == "e" {
                continue;
            }
            let idx = self
                .spec
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Config(format!("unknown generator {name:?}")))?;
            out = self.mul_unchecked(&out, &self.pow(&self.generator(idx), exp));
        }
        Ok(out)
    }

    pub fn format_word(&self, g: &GroupElement) -> String {
        if g.is_identity() {
            return "e".into();
        }
        let names = &self.spec.names;
        let mut parts = Vec::new();
        match g {
            GroupElement::Abelian(v) => {
                for (i, &x) in v.iter().enumerate() {
                    match x {
                        0 => {}
                        1 => parts.push(names[i].clone()),
                        _ => parts.push(format!("{}^{x}", names[i])),
                    }
                }
            }
            GroupElement::Free(w) => {
                let mut i = 0;
                while i < w.len() {
                    let l = w[i];
                    let mut j = i;
                    while j < w.len() && w[j] == l {
                        j += 1;
                    }
                    let n = &names[l.unsigned_abs() as usize - 1];
                    let e = (j - i) as i64 * l.signum() as i64;
                    parts.push(if e == 1 { n.clone() } else { format!("{n}^{e}") });
                    i = j;
                }
            }
        }
        parts.join("*")
    }
}

fn abelian_ball(cur: &mut Vec<i64>, pos: usize, budget: i64, acc: &mut Vec<Vec<i64>>) {
    if pos == cur.len() {
        acc.push(cur.clone());
        return;
    }
    for x in -budget..=budget {
        cur[pos] = x;
        abelian_ball(cur, pos + 1, budget - x.abs(), acc);
    }
    cur[pos] = 0;
}

fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let z2 = Group::free_abelian(2);
        let p = z2.mul(&z2.generator(0), &z2.generator(1)).unwrap();
        assert_eq!(p, GroupElement::Abelian(vec![1, 1]));

        let f2 = Group::free(2);
        let a = f2.generator(0);
        let b = f2.generator(1);
        assert!(f2.mul(&a, &f2.inverse(&a)).unwrap().is_identity());
        let ab = f2.mul(&a, &b).unwrap();
        let bia = f2.mul(&f2.inverse(&b), &a).unwrap();
        assert_eq!(f2.mul(&ab, &bia).unwrap(), f2.pow(&a, 2));
    }

    #[test]
    fn mismatched_families() {
        let z2 = Group::free_abelian(2);
        let f2 = Group::free(2);
        assert!(matches!(z2.mul(&z2.generator(0), &f2.generator(0)), Err(Error::Config(_))));
        assert!(z2.mul(&GroupElement::Abelian(vec![1]), &z2.identity()).is_err());
    }

    #[test]
    fn lengths() {
        let z2 = Group::free_abelian(2);
        assert_eq!(z2.word_length(&GroupElement::Abelian(vec![2, -1])), 3);
        assert_eq!(z2.word_length(&z2.identity()), 0);
        let f2 = Group::free(2);
        assert_eq!(f2.parse_word("a*b*a^-1").unwrap().word_length(), 3);
    }

    #[test]
    fn balls() {
        let z1 = Group::free_abelian(1);
        let b = z1.ball(2).unwrap();
        assert_eq!(b.len(), 5);
        let f2 = Group::free(2);
        let b = f2.ball(1).unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(f2.ball(2).unwrap().len(), 17);
        assert_eq!(Group::free_abelian(2).ball(1).unwrap().len(), 5);
        assert_eq!(Group::free_abelian(2).ball(3).unwrap().len(), 25);
        let capped = Group::free(3).with_ball_cap(100);
        assert!(matches!(capped.ball(3), Err(Error::BallCapExceeded { .. })));
        assert_eq!(Group::trivial().ball(4).unwrap(), vec![Group::trivial().identity()]);
    }

    #[test]
    fn words_round_trip() {
        let f2 = Group::free(2);
        for g in f2.ball(3).unwrap() {
            assert_eq!(f2.parse_word(&f2.format_word(&g)).unwrap(), g);
        }
        let z2 = Group::free_abelian(2);
        for g in z2.ball(3).unwrap() {
            assert_eq!(z2.parse_word(&z2.format_word(&g)).unwrap(), g);
        }
        assert!(GroupSpec::parse("Q_8").is_err());
        assert_eq!(GroupSpec::parse("F_2").unwrap().to_string(), "F_2");
    }
}
