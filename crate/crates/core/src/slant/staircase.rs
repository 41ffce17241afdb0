//! The staircase triangulation of `Δ^k × Δ^ℓ`.

use std::collections::BTreeMap;

use super::alpha::Point;

/// One `(k+ℓ)`-simplex: vertex pairs `(i, j)` along a monotone lattice path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircasePiece {
    pub vertices: Vec<(usize, usize)>,
    pub sign: i8,
}

/// All `binomial(k+ℓ, k)` pieces; the sign is the parity of `(j-step, i-step)` inversions.
pub fn staircase(k: usize, l: usize) -> Vec<StaircasePiece> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(k + l);
    paths(k, l, &mut steps, &mut out);
    out
}

fn paths(k: usize, l: usize, steps: &mut Vec<bool>, out: &mut Vec<StaircasePiece>) {
    if k == 0 && l == 0 {
        let (mut i, mut j) = (0, 0);
        let mut vertices = vec![(0, 0)];
        let mut inversions = 0usize;
        let mut js_seen = 0usize;
        for &is_i in steps.iter() {
            if is_i {
                i += 1;
                inversions += js_seen;
            } else {
                j += 1;
                js_seen += 1;
            }
            vertices.push((i, j));
        }
        out.push(StaircasePiece { vertices, sign: if inversions % 2 == 0 { 1 } else { -1 } });
        return;
    }
    if k > 0 {
        steps.push(true);
        paths(k - 1, l, steps, out);
        steps.pop();
    }
    if l > 0 {
        steps.push(false);
        paths(k, l - 1, steps, out);
        steps.pop();
    }
}

/// `Σ sign · [(a_i, b_j), ...]` over labelled vertices.
pub type PairChain = BTreeMap<Vec<(usize, usize)>, i64>;

/// A formal sum of simplices on labelled vertices.
pub type SimplexChain = BTreeMap<Vec<usize>, i64>;

fn add<K: Ord>(c: &mut BTreeMap<K, i64>, key: K, v: i64) {
    let e = c.entry(key).or_insert(0);
    *e += v;
}

/// Staircase chain of `[a_0..a_k] × [b_0..b_ℓ]`.
pub fn product_chain(left: &[usize], right: &[usize]) -> PairChain {
    let mut out = PairChain::new();
    for p in staircase(left.len() - 1, right.len() - 1) {
        let verts = p.vertices.iter().map(|&(i, j)| (left[i], right[j])).collect();
        add(&mut out, verts, i64::from(p.sign));
    }
    out
}

pub fn product_of_chains(left: &SimplexChain, right: &SimplexChain) -> PairChain {
    let mut out = PairChain::new();
    for (a, x) in left {
        for (b, y) in right {
            for (s, v) in product_chain(a, b) {
                add(&mut out, s, v * x * y);
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn faces<T: Clone + Ord>(simplex: &[T]) -> Vec<(Vec<T>, i64)> {
    if simplex.len() <= 1 {
        return Vec::new();
    }
    (0..simplex.len())
        .map(|i| {
            let mut f = simplex.to_vec();
            f.remove(i);
            (f, if i % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

pub fn simplex_boundary(c: &SimplexChain) -> SimplexChain {
    let mut out = SimplexChain::new();
    for (s, v) in c {
        for (f, sign) in faces(s) {
            add(&mut out, f, sign * v);
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn pair_boundary(c: &PairChain) -> PairChain {
    let mut out = PairChain::new();
    for (s, v) in c {
        for (f, sign) in faces(s) {
            add(&mut out, f, sign * v);
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Staircase triangulation of the product of two affine simplices, with
/// vertices `(a_i, b_j)` in `ℝ^{n_1} × ℝ^{n_2}`.
pub fn product_simplices(left: &[Point], right: &[Point]) -> Vec<(Vec<Point>, i8)> {
    staircase(left.len() - 1, right.len() - 1)
        .into_iter()
        .map(|p| {
            let verts = p
                .vertices
                .iter()
                .map(|&(i, j)| {
                    let mut v = left[i].clone();
                    v.extend(right[j].iter().cloned());
                    v
                })
                .collect();
            (verts, p.sign)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let p = staircase(0, 3);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].sign, 1);
        let s: Vec<i8> = staircase(1, 1).iter().map(|p| p.sign).collect();
        assert_eq!(s, vec![1, -1]);
        assert_eq!(staircase(1, 2).len(), 3);
        assert_eq!(staircase(2, 2).len(), 6);
    }

    #[test]
    fn square_boundary() {
        let c = product_chain(&[0, 1], &[0, 1]);
        let b = pair_boundary(&c);
        let expected: PairChain = [
            (vec![(0, 0), (1, 0)], 1),
            (vec![(1, 0), (1, 1)], 1),
            (vec![(0, 1), (1, 1)], -1),
            (vec![(0, 0), (0, 1)], -1),
        ]
        .into();
        assert_eq!(b, expected);
    }
}
