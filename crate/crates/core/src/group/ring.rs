use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Group, GroupElement};

/// A finitely supported integer combination of group elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingElement {
    terms: BTreeMap<GroupElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(g: GroupElement) -> Self {
        Self::term(BigInt::one(), g)
    }

    pub fn term(c: BigInt, g: GroupElement) -> Self {
        let mut r = Self::zero();
        r.add_term(c, g);
        r
    }

    /// `g - 1`
    pub fn augmentation_generator(group: &Group, g: &GroupElement) -> Self {
        let mut r = Self::monomial(g.clone());
        r.add_term(-BigInt::one(), group.identity());
        r
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, GroupElement)>>(it: I) -> Self {
        let mut r = Self::zero();
        for (c, g) in it {
            r.add_term(c, g);
        }
        r
    }

    pub fn add_term(&mut self, c: BigInt, g: GroupElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect() }
    }

    /// Left translation `g * x`.
    pub fn act(&self, group: &Group, g: &GroupElement) -> Self {
        Self {
            terms: self.terms.iter().map(|(h, v)| (group.mul_unchecked(g, h), v.clone())).collect(),
        }
    }

    /// Convolution product.
    pub fn mul(&self, group: &Group, other: &Self) -> Self {
        let mut r = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                r.add_term(a * b, group.mul_unchecked(g, h));
            }
        }
        r
    }

    pub fn max_word_length(&self) -> usize {
        self.terms.keys().map(|g| g.word_length()).max().unwrap_or(0)
    }

    pub fn format(&self, group: &Group) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let w = group.format_word(g);
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                s.push_str(&w);
            } else {
                s.push_str(&format!("{mag}{w}"));
            }
        }
        s
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, other: &GroupRingElement) -> GroupRingElement {
        let mut r = self.clone();
        for (g, c) in &other.terms {
            r.add_term(c.clone(), g.clone());
        }
        r
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, other: &GroupRingElement) -> GroupRingElement {
        self + &(-other)
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn augmentation_examples() {
        let z = Group::free_abelian(1);
        let t = z.generator(0);
        assert!(GroupRingElement::augmentation_generator(&z, &t).augmentation().is_zero());
        let x = GroupRingElement::from_terms([(BigInt::from(2), z.identity()), (BigInt::from(3), t)]);
        assert_eq!(x.augmentation(), BigInt::from(5));
        assert!(GroupRingElement::zero().augmentation().is_zero());
    }

    #[test]
    fn cancellation_drops_zero_terms() {
        let z = Group::free_abelian(1);
        let t = z.generator(0);
        let x = GroupRingElement::monomial(t.clone());
        let y = &x - &x;
        assert!(y.is_zero());
        assert_eq!(y.support_len(), 0);
    }

    #[test]
    fn product_is_translation_on_monomials() {
        let f2 = Group::free(2);
        let a = f2.generator(0);
        let x = GroupRingElement::augmentation_generator(&f2, &f2.generator(1));
        assert_eq!(GroupRingElement::monomial(a.clone()).mul(&f2, &x), x.act(&f2, &a));
    }
}
