use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chain::{rank, IntMatrix};
use crate::error::{Error, Result};
use crate::group::{FactorKind, Group, GroupElement, ModuleTag};

/// Rank estimates of a truncated coinvariant module at two radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankPair {
    pub at_radius: usize,
    pub at_next_radius: usize,
}

impl RankPair {
    pub fn stable(&self) -> bool {
        self.at_radius == self.at_next_radius
    }
}

fn truncated_rank(group: &Group, order: usize, radius: usize) -> Result<usize> {
    let ball = group.ball(radius)?;
    let nonunit: Vec<GroupElement> = ball.into_iter().filter(|g| !g.is_identity()).collect();
    let total = nonunit.len().checked_pow(order as u32).unwrap_or(usize::MAX);
    if total > group.ball_cap() {
        return Err(Error::BallCapExceeded { radius, cap: group.ball_cap() });
    }
    let mut tuples: Vec<Vec<GroupElement>> = vec![Vec::new()];
    for _ in 0..order {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                nonunit.iter().map(move |g| {
                    let mut t = t.clone();
                    t.push(g.clone());
                    t
                })
            })
            .collect();
    }
    let index: BTreeMap<&Vec<GroupElement>, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    // relations s·b - b in the basis (g_1 - 1) ⊗ ... ⊗ (g_k - 1)
    let mut rows: Vec<BTreeMap<usize, BigInt>> = Vec::new();
    for s in group.symmetric_generators() {
        'tuples: for t in &tuples {
            let shifted: Vec<GroupElement> = t.iter().map(|g| group.mul_unchecked(&s, g)).collect();
            if shifted.iter().any(|g| g.word_length() > radius) {
                continue 'tuples;
            }
            let mut row: BTreeMap<usize, BigInt> = BTreeMap::new();
            for mask in 0u32..(1 << order) {
                let sign = if mask.count_ones() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let tuple: Vec<GroupElement> =
                    (0..order).map(|i| if mask >> i & 1 == 1 { s.clone() } else { shifted[i].clone() }).collect();
                if let Some(&i) = index.get(&tuple) {
                    *row.entry(i).or_default() += sign;
                }
            }
            *row.entry(index[t]).or_default() -= BigInt::one();
            row.retain(|_, c| !c.is_zero());
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let mut m = IntMatrix::zeros(rows.len(), tuples.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            m[(r, *c)] = v.clone();
        }
    }
    Ok(tuples.len() - rank(&m))
}

/// Rank of the ball-truncated coinvariants `L / ⟨s·x - x⟩` for
/// `L = I(Γ)^{⊗k}`, at radius `R` and `R + 1`.
pub fn coinvariants_rank(group: &Group, tag: &ModuleTag, radius: usize) -> Result<RankPair> {
    if tag.order() == 0 || tag.0.iter().any(|k| *k != FactorKind::Aug) {
        return Err(Error::Config(format!("coinvariant ranks are computed for I or I^k, not {tag}")));
    }
    Ok(RankPair {
        at_radius: truncated_rank(group, tag.order(), radius)?,
        at_next_radius: truncated_rank(group, tag.order(), radius + 1)?,
    })
}
