use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Group, GroupElement, GroupRingElement};
use crate::error::{Error, Result};

/// One tensor slot of a coefficient module: the augmentation ideal or the
/// whole group ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Aug,
    Ring,
}

/// A coefficient module `F_1 ⊗ ... ⊗ F_k` over `Z` with the diagonal action,
/// each `F_i` being `I(Γ)` or `ZΓ`. The empty product is `Z` with trivial action.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleTag(pub Vec<FactorKind>);

impl ModuleTag {
    pub fn integers() -> Self {
        Self(Vec::new())
    }

    pub fn group_ring() -> Self {
        Self(vec![FactorKind::Ring])
    }

    /// `I(Γ)^{⊗k}`
    pub fn aug_power(k: usize) -> Self {
        Self(vec![FactorKind::Aug; k])
    }

    /// `I(Γ)^{⊗k} ⊗ ZΓ`
    pub fn aug_power_times_ring(k: usize) -> Self {
        let mut v = vec![FactorKind::Aug; k];
        v.push(FactorKind::Ring);
        Self(v)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Z" => return Ok(Self::integers()),
            "ZG" => return Ok(Self::group_ring()),
            "I" => return Ok(Self::aug_power(1)),
            _ => {}
        }
        if s.contains('⊗') {
            let mut v = Vec::new();
            for part in s.split('⊗') {
                v.extend(Self::parse(part)?.0);
            }
            return Ok(Self(v));
        }
        if let Some(k) = s.strip_prefix("I^") {
            let k = k.parse().map_err(|_| Error::Config(format!("bad module tag {s:?}")))?;
            return Ok(Self::aug_power(k));
        }
        Err(Error::Config(format!("unrecognised module tag {s:?}; expected Z, ZG, I or I^k")))
    }
}

impl fmt::Display for ModuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "Z");
        }
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|k| match k {
                FactorKind::Aug => "I",
                FactorKind::Ring => "ZG",
            })
            .collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// An element of `ZΓ^{⊗k}` expanded in the basis of elementary tensors
/// `g_1 ⊗ ... ⊗ g_k`. Order 0 is an integer.
///
/// Storing the fully expanded basis form makes the representation canonical,
/// so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorElement {
    order: usize,
    terms: BTreeMap<Vec<GroupElement>, BigInt>,
}

impl TensorElement {
    pub fn zero(order: usize) -> Self {
        Self { order, terms: BTreeMap::new() }
    }

    pub fn integer(n: BigInt) -> Self {
        let mut t = Self::zero(0);
        t.add_basis(n, Vec::new());
        t
    }

    pub fn one() -> Self {
        Self::integer(BigInt::one())
    }

    pub fn basis(c: BigInt, tuple: Vec<GroupElement>) -> Self {
        let mut t = Self::zero(tuple.len());
        t.add_basis(c, tuple);
        t
    }

    pub fn from_ring(x: &GroupRingElement) -> Self {
        let mut t = Self::zero(1);
        for (g, c) in x.terms() {
            t.add_basis(c.clone(), vec![g.clone()]);
        }
        t
    }

    /// `c · x_1 ⊗ ... ⊗ x_k`, expanded multilinearly.
    pub fn elementary(c: &BigInt, factors: &[GroupRingElement]) -> Self {
        let mut acc: Vec<(Vec<GroupElement>, BigInt)> = vec![(Vec::new(), c.clone())];
        for f in factors {
            let mut next = Vec::new();
            for (tuple, coef) in &acc {
                for (g, a) in f.terms() {
                    let mut t = tuple.clone();
                    t.push(g.clone());
                    next.push((t, coef * a));
                }
            }
            acc = next;
        }
        let mut out = Self::zero(factors.len());
        for (t, c) in acc {
            out.add_basis(c, t);
        }
        out
    }

    /// Finite sum of elementary tensors.
    pub fn from_elementary_sum(order: usize, items: &[(BigInt, Vec<GroupRingElement>)]) -> Result<Self> {
        let mut out = Self::zero(order);
        for (c, fs) in items {
            if fs.len() != order {
                return Err(Error::DegreeMismatch { expected: order, found: fs.len() });
            }
            out = &out + &Self::elementary(c, fs);
        }
        Ok(out)
    }

    pub fn add_basis(&mut self, c: BigInt, tuple: Vec<GroupElement>) {
        debug_assert_eq!(tuple.len(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(tuple) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<GroupElement>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The integer value of an order-0 element.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.order == 0).then(|| self.terms.values().cloned().sum())
    }

    pub fn to_ring(&self) -> Option<GroupRingElement> {
        (self.order == 1)
            .then(|| GroupRingElement::from_terms(self.terms.iter().map(|(t, c)| (c.clone(), t[0].clone()))))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Self { order: self.order, terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect() }
    }

    /// Diagonal action: `γ` acts on every factor.
    pub fn act(&self, group: &Group, gamma: &GroupElement) -> Self {
        if self.order == 0 || gamma.is_identity() {
            return self.clone();
        }
        Self {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(t, v)| (t.iter().map(|g| group.mul_unchecked(gamma, g)).collect(), v.clone()))
                .collect(),
        }
    }

    /// `x ⊗ y`
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order + other.order);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut t = a.clone();
                t.extend(b.iter().cloned());
                out.add_basis(c * d, t);
            }
        }
        out
    }

    /// Applies the augmentation in `slot`, lowering the order by one.
    pub fn contract(&self, slot: usize) -> Self {
        assert!(slot < self.order);
        let mut out = Self::zero(self.order - 1);
        for (t, c) in &self.terms {
            let mut t = t.clone();
            t.remove(slot);
            out.add_basis(c.clone(), t);
        }
        out
    }

    /// `x ↦ x ⊗ g`
    pub fn append_factor(&self, g: &GroupElement) -> Self {
        Self {
            order: self.order + 1,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    let mut t = t.clone();
                    t.push(g.clone());
                    (t, c.clone())
                })
                .collect(),
        }
    }

    /// Whether the element lies in the submodule described by `tag`, i.e.
    /// every `Aug` slot has vanishing partial augmentation.
    pub fn belongs_to(&self, tag: &ModuleTag) -> bool {
        if tag.order() != self.order {
            return false;
        }
        tag.0
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == FactorKind::Aug)
            .all(|(i, _)| self.contract(i).is_zero())
    }

    pub fn max_word_length(&self) -> usize {
        self.terms.keys().flat_map(|t| t.iter().map(|g| g.word_length())).max().unwrap_or(0)
    }

    pub fn format(&self, group: &Group) -> String {
        if self.order == 0 {
            return self.as_integer().unwrap_or_default().to_string();
        }
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let w: Vec<String> = t.iter().map(|g| group.format_word(g)).collect();
                format!("{c}[{}]", w.join("|"))
            })
            .collect();
        parts.join(" + ")
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.order, other.order, "adding tensors of different order");
        let mut r = self.clone();
        for (t, c) in &other.terms {
            r.add_basis(c.clone(), t.clone());
        }
        r
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, other: &TensorElement) -> TensorElement {
        self + &(-other)
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement { order: self.order, terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aug(g: &Group, x: &GroupElement) -> GroupRingElement {
        GroupRingElement::augmentation_generator(g, x)
    }

    #[test]
    fn diagonal_action_is_factorwise() {
        let z2 = Group::free_abelian(2);
        let a = z2.generator(0);
        let b = z2.generator(1);
        let gamma = z2.parse_word("t1^2*t2^-1").unwrap();
        let t = TensorElement::elementary(&BigInt::one(), &[aug(&z2, &a), aug(&z2, &b)]);
        let left = t.act(&z2, &gamma);
        let fa = &GroupRingElement::monomial(z2.mul_unchecked(&gamma, &a)) - &GroupRingElement::monomial(gamma.clone());
        let fb = &GroupRingElement::monomial(z2.mul_unchecked(&gamma, &b)) - &GroupRingElement::monomial(gamma.clone());
        assert_eq!(left, TensorElement::elementary(&BigInt::one(), &[fa, fb]));
        assert_eq!(t.act(&z2, &z2.identity()), t);
    }

    #[test]
    fn membership() {
        let z = Group::free_abelian(1);
        let t = z.generator(0);
        let x = TensorElement::elementary(&BigInt::one(), &[aug(&z, &t), aug(&z, &z.pow(&t, 3))]);
        assert!(x.belongs_to(&ModuleTag::aug_power(2)));
        let y = TensorElement::elementary(&BigInt::one(), &[aug(&z, &t), GroupRingElement::monomial(t.clone())]);
        assert!(!y.belongs_to(&ModuleTag::aug_power(2)));
        assert!(y.belongs_to(&ModuleTag::aug_power_times_ring(1)));
    }

    #[test]
    fn canonical_merging() {
        let z = Group::free_abelian(1);
        let t = z.generator(0);
        let x = TensorElement::elementary(&BigInt::from(2), &[aug(&z, &t)]);
        let y = &TensorElement::elementary(&BigInt::one(), &[aug(&z, &t)]) + &TensorElement::elementary(&BigInt::one(), &[aug(&z, &t)]);
        assert_eq!(x, y);
        assert!((&x - &y).is_zero());
    }
}
