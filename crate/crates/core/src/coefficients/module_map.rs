//! Equivariant homomorphisms `I(Γ)^{⊗k} → Z`, either in closed form or
//! solved on a ball.
//!
//! A map is determined by `φ̃(g_1, ..., g_k) = φ((g_1 - 1) ⊗ ... ⊗ (g_k - 1))`:
//! on `I^{⊗k}` the projection `g ↦ g - 1` is the identity, so
//! `φ(Σ c_T T) = Σ c_T φ̃(T)` with `φ̃ = 0` whenever some `g_i = e`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::beta_power;
use crate::chain::{pair_cochain_cycle, solve_integer, BarCell, BarResolution, Cochain, IntMatrix, LazyCochain, ResChain, SharedCochain};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, ModuleTag, TensorElement};

pub trait CoefficientFunctional: Send + Sync {
    fn order(&self) -> usize;
    /// `φ(x)` for `x ∈ I(Γ)^{⊗k}`.
    fn apply(&self, group: &Group, x: &TensorElement) -> Result<BigInt>;
}

fn check_input(order: usize, x: &TensorElement) -> Result<()> {
    if x.order() != order {
        return Err(Error::DegreeMismatch { expected: order, found: x.order() });
    }
    if !x.belongs_to(&ModuleTag::aug_power(order)) {
        return Err(Error::Validation(format!("argument is not in {}", ModuleTag::aug_power(order))));
    }
    Ok(())
}

/// `φ̃(g_1, ..., g_k) = Π_j a(g_j)_{c_j}` for abelianisation coordinates `c_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateFunctional {
    pub coords: Vec<usize>,
}

impl CoordinateFunctional {
    pub fn new(coords: Vec<usize>) -> Self {
        Self { coords }
    }
}

impl CoefficientFunctional for CoordinateFunctional {
    fn order(&self) -> usize {
        self.coords.len()
    }

    fn apply(&self, group: &Group, x: &TensorElement) -> Result<BigInt> {
        check_input(self.order(), x)?;
        if let Some(&c) = self.coords.iter().find(|&&c| c >= group.rank()) {
            return Err(Error::Config(format!("coordinate {c} out of range for {}", group.spec())));
        }
        let mut acc = BigInt::zero();
        for (t, c) in x.terms() {
            let mut p = c.clone();
            for (g, &i) in t.iter().zip(&self.coords) {
                p *= group.abelianize(g)[i];
            }
            acc += p;
        }
        Ok(acc)
    }
}

/// A map supported on `(ball(R) ∖ e)^k`, stored by `φ̃`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    group: Group,
    order: usize,
    radius: usize,
    values: BTreeMap<Vec<GroupElement>, BigInt>,
}

impl ModuleMap {
    pub fn zero(group: Group, order: usize, radius: usize) -> Self {
        Self { group, order, radius, values: BTreeMap::new() }
    }

    pub fn from_values(group: Group, order: usize, radius: usize, values: BTreeMap<Vec<GroupElement>, BigInt>) -> Result<Self> {
        let mut m = Self::zero(group, order, radius);
        for (t, v) in values {
            m.set(t, v)?;
        }
        Ok(m)
    }

    fn set(&mut self, t: Vec<GroupElement>, v: BigInt) -> Result<()> {
        if t.len() != self.order {
            return Err(Error::DegreeMismatch { expected: self.order, found: t.len() });
        }
        if t.iter().any(|g| g.is_identity()) {
            if !v.is_zero() {
                return Err(Error::Validation("φ̃ must vanish when a factor is the identity".into()));
            }
            return Ok(());
        }
        if let Some(g) = t.iter().find(|g| g.word_length() > self.radius) {
            return Err(Error::RadiusInsufficient(self.group.format_word(g), self.radius));
        }
        if !v.is_zero() {
            self.values.insert(t, v);
        }
        Ok(())
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &BTreeMap<Vec<GroupElement>, BigInt> {
        &self.values
    }

    /// `φ̃(t)` for a tuple.
    pub fn value(&self, t: &[GroupElement]) -> Result<BigInt> {
        if t.iter().any(|g| g.is_identity()) {
            return Ok(BigInt::zero());
        }
        if let Some(g) = t.iter().find(|g| g.word_length() > self.radius) {
            return Err(Error::RadiusInsufficient(
                format!("{} lies outside the truncation ball", self.group.format_word(g)),
                self.radius,
            ));
        }
        Ok(self.values.get(t).cloned().unwrap_or_default())
    }

    pub fn to_table(&self) -> String {
        let mut s = format!("group {}\norder {}\nradius {}\n", self.group.spec(), self.order, self.radius);
        for (t, v) in &self.values {
            let w: Vec<String> = t.iter().map(|g| self.group.format_word(g)).collect();
            let _ = writeln!(s, "{} {v}", w.join("|"));
        }
        s
    }

    pub fn from_table(text: &str) -> Result<Self> {
        let mut group = None;
        let mut order = None;
        let mut radius = None;
        let mut rows = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: n + 1, msg };
            let (key, rest) = line.rsplit_once(char::is_whitespace).ok_or_else(|| err(format!("malformed line {line:?}")))?;
            match key.trim() {
                "group" => group = Some(Group::parse(rest).map_err(|e| err(e.to_string()))?),
                "order" => order = Some(rest.parse::<usize>().map_err(|_| err("bad order".into()))?),
                "radius" => radius = Some(rest.parse::<usize>().map_err(|_| err("bad radius".into()))?),
                tuple => {
                    let v: BigInt = rest.parse().map_err(|_| err(format!("bad value {rest:?}")))?;
                    rows.push((n + 1, tuple.to_string(), v));
                }
            }
        }
        let missing = |what: &str| Error::Parse { line: 0, msg: format!("missing `{what}` header") };
        let group = group.ok_or_else(|| missing("group"))?;
        let mut m = Self::zero(group, order.ok_or_else(|| missing("order"))?, radius.ok_or_else(|| missing("radius"))?);
        for (line, tuple, v) in rows {
            let t = tuple
                .split('|')
                .map(|w| m.group.parse_word(w))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse { line, msg: e.to_string() })?;
            m.set(t, v)?;
        }
        Ok(m)
    }
}

impl CoefficientFunctional for ModuleMap {
    fn order(&self) -> usize {
        self.order
    }

    fn apply(&self, _group: &Group, x: &TensorElement) -> Result<BigInt> {
        check_input(self.order, x)?;
        let mut acc = BigInt::zero();
        for (t, c) in x.terms() {
            acc += self.value(t)? * c;
        }
        Ok(acc)
    }
}

/// Unknowns `φ̃(T)` for `T ∈ (ball(R) ∖ e)^k`, in a fixed order.
struct Unknowns {
    radius: usize,
    ball: Vec<GroupElement>,
    index: BTreeMap<Vec<GroupElement>, usize>,
    tuples: Vec<Vec<GroupElement>>,
}

impl Unknowns {
    fn new(group: &Group, order: usize, radius: usize) -> Result<Self> {
        let ball = group.ball(radius)?;
        let nonunit: Vec<GroupElement> = ball.iter().filter(|g| !g.is_identity()).cloned().collect();
        let total = nonunit.len().checked_pow(order as u32).unwrap_or(usize::MAX);
        if total > group.ball_cap() {
            return Err(Error::BallCapExceeded { radius, cap: group.ball_cap() });
        }
        let mut tuples = vec![Vec::new()];
        for _ in 0..order {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<GroupElement>| {
                    nonunit.iter().map(move |g| {
                        let mut t = t.clone();
                        t.push(g.clone());
                        t
                    })
                })
                .collect();
        }
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Ok(Self { radius, ball, index, tuples })
    }

    fn in_ball(&self, g: &GroupElement) -> bool {
        g.word_length() <= self.radius
    }
}

type SparseRow = Vec<(usize, BigInt)>;

fn add_entry(row: &mut BTreeMap<usize, BigInt>, idx: usize, c: BigInt) {
    let e = row.entry(idx).or_default();
    *e += c;
}

/// `φ(γ·(g_1-1)⊗...⊗(g_k-1)) = φ̃(g)` for every `γ ∈ ball(R)` whose
/// expansion `⊗((γg_i - 1) - (γ - 1))` stays in the ball.
fn equivariance_rows(group: &Group, order: usize, u: &Unknowns) -> Vec<SparseRow> {
    let mut rows: BTreeSet<SparseRow> = BTreeSet::new();
    for gamma in u.ball.iter().filter(|g| !g.is_identity()) {
        'tuples: for t in &u.tuples {
            let shifted: Vec<GroupElement> = t.iter().map(|g| group.mul_unchecked(gamma, g)).collect();
            if shifted.iter().any(|g| !u.in_ball(g)) {
                continue 'tuples;
            }
            let mut row = BTreeMap::new();
            for mask in 0u32..(1 << order) {
                let sign = if mask.count_ones() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let tuple: Vec<GroupElement> =
                    (0..order).map(|i| if mask >> i & 1 == 1 { gamma.clone() } else { shifted[i].clone() }).collect();
                if let Some(&idx) = u.index.get(&tuple) {
                    add_entry(&mut row, idx, sign);
                }
            }
            add_entry(&mut row, u.index[t], -BigInt::one());
            let row: SparseRow = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !row.is_empty() {
                rows.insert(row);
            }
        }
    }
    rows.into_iter().collect()
}

/// Number of violated equivariance constraints inside the truncation ball.
pub fn equivariance_defects(map: &ModuleMap) -> Result<usize> {
    let u = Unknowns::new(&map.group, map.order, map.radius)?;
    let x: Vec<BigInt> = u.tuples.iter().map(|t| map.values.get(t).cloned().unwrap_or_default()).collect();
    Ok(equivariance_rows(&map.group, map.order, &u)
        .iter()
        .filter(|row| !row.iter().map(|(i, c)| c * &x[*i]).sum::<BigInt>().is_zero())
        .count())
}

/// Solves for an equivariant `φ` on the ball with prescribed values
/// `φ(x_j) = n_j`. Free unknowns are set to zero.
pub fn solve_with_pairings(group: &Group, order: usize, radius: usize, pairings: &[(TensorElement, BigInt)]) -> Result<ModuleMap> {
    let u = Unknowns::new(group, order, radius)?;
    let mut rows = equivariance_rows(group, order, &u);
    let mut rhs = vec![BigInt::zero(); rows.len()];
    for (x, n) in pairings {
        check_input(order, x)?;
        let mut row = BTreeMap::new();
        for (t, c) in x.terms() {
            if t.iter().any(|g| g.is_identity()) {
                continue;
            }
            match u.index.get(t) {
                Some(&i) => add_entry(&mut row, i, c.clone()),
                None => {
                    return Err(Error::RadiusInsufficient("pairing constraint reaches outside the ball".into(), radius))
                }
            }
        }
        rows.push(row.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        rhs.push(n.clone());
    }
    let mut a = IntMatrix::zeros(rows.len(), u.tuples.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            a[(r, *c)] = v.clone();
        }
    }
    let x = solve_integer(&a, &rhs)?.ok_or(Error::Unsat(radius))?;
    let values = u.tuples.into_iter().zip(x).filter(|(_, v)| !v.is_zero()).collect();
    Ok(ModuleMap { group: group.clone(), order, radius, values })
}

/// Finds `φ: I^{⊗k} → Z` on `ball(R)` with `⟨φ_* β^k, w⟩ = ⟨target, w⟩`
/// for every listed cycle `w`.
pub fn solve_coefficient_hom(
    bar: Arc<BarResolution>,
    order: usize,
    radius: usize,
    target: &dyn Cochain<BarCell>,
    cycles: &[ResChain<BarCell>],
) -> Result<ModuleMap> {
    if target.degree() != order || target.tag().order() != 0 {
        return Err(Error::Validation("target must be an integer cocycle of degree k".into()));
    }
    let beta = beta_power(bar.clone(), order)?;
    let mut pairings = Vec::new();
    for w in cycles {
        let mut x = TensorElement::zero(order);
        for (_, cell, c) in w.terms() {
            x = &x + &beta.value(cell)?.scale(c);
        }
        pairings.push((x, pair_cochain_cycle(bar.as_ref(), target, w)?));
    }
    solve_with_pairings(crate::chain::Resolution::group(bar.as_ref()), order, radius, &pairings)
}

/// `φ ∘ c`, an integer cochain.
pub fn pushforward<C: 'static>(phi: Arc<dyn CoefficientFunctional>, group: Group, c: SharedCochain<C>) -> Result<SharedCochain<C>> {
    if c.tag() != &ModuleTag::aug_power(phi.order()) {
        return Err(Error::Validation(format!("cochain values lie in {}, map expects {}", c.tag(), ModuleTag::aug_power(phi.order()))));
    }
    Ok(LazyCochain::new(c.degree(), ModuleTag::integers(), move |cell: &C| {
        Ok(TensorElement::integer(phi.apply(&group, &c.value(cell)?)?))
    })
    .shared())
}
