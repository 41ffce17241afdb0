//! Property suites over the algebraic and geometric invariants.

use std::collections::BTreeMap;
use std::sync::Arc;

use lipcoh::chain::{
    bar_homology_cycles, coboundary, invariant_boundary, smith_normal_form, tensor_complex, BarCell, BarResolution,
    IntMatrix, InvariantChain, ResChain, Resolution,
};
use lipcoh::coefficients::{pair_through, CoordinateFunctional};
use lipcoh::group::{Group, GroupElement, ModuleTag, TensorElement};
use lipcoh::scenario::{checks::point_independence, Kind, Scenario};
use lipcoh::slant::staircase::{pair_boundary, product_chain, product_of_chains, simplex_boundary, SimplexChain};
use lipcoh::slant::{omega_eval, AlphaMap, SlantContext, SupportCocycle};
use lipcoh::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..10, c), r))
}

fn word(group: &Group, letters: &[(usize, i64)]) -> GroupElement {
    letters.iter().fold(group.identity(), |acc, &(i, e)| {
        let g = group.pow(&group.generator(i % group.rank()), e);
        group.mul_unchecked(&acc, &g)
    })
}

fn letters() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..2, -2i64..=2), 0..4)
}

fn translation_ctx(d: usize, seed: u64) -> Arc<SlantContext> {
    Arc::new(SlantContext::new(AlphaMap::translation(&Group::free_abelian(d)).unwrap(), seed, 0).unwrap())
}

/// A random invariant 1-chain on the Kuhn plane together with a 2-chain.
fn plane_chains(ctx: &SlantContext, a: &[i64], b: &[i64]) -> (InvariantChain, InvariantChain) {
    let gc = ctx.space().complex();
    let edges: BTreeMap<usize, TensorElement> =
        a.iter().enumerate().map(|(i, &c)| (i, TensorElement::integer(BigInt::from(c)))).collect();
    let tops: BTreeMap<usize, TensorElement> =
        b.iter().enumerate().map(|(i, &c)| (i, TensorElement::integer(BigInt::from(c)))).collect();
    (
        InvariantChain::new(gc, 1, ModuleTag::integers(), edges).unwrap(),
        InvariantChain::new(gc, 2, ModuleTag::integers(), tops).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_postconditions(rows in small_matrix()) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&a);
        let uav = s.u.mul(&a).unwrap().mul(&s.v).unwrap();
        prop_assert_eq!(&uav, &s.d);
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        let n = a.rows().min(a.cols());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for i in 0..n {
            prop_assert!(!s.d[(i, i)].is_negative());
            if i + 1 < n && !s.d[(i, i)].is_zero() {
                prop_assert!(s.d[(i + 1, i + 1)].is_multiple_of(&s.d[(i, i)]));
            }
            if i + 1 < n && s.d[(i, i)].is_zero() {
                prop_assert!(s.d[(i + 1, i + 1)].is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bar_boundary_squares_to_zero(ws in prop::collection::vec(letters(), 4), free in any::<bool>()) {
        let group = if free { Group::free(2) } else { Group::free_abelian(2) };
        let bar = BarResolution::new(group.clone(), 2);
        let verts: Vec<GroupElement> = ws.iter().map(|w| word(&group, w)).collect();
        let c = bar.simplex(&verts);
        prop_assert!(c.boundary(&bar).boundary(&bar).is_zero());
    }

    #[test]
    fn product_boundary_squares_to_zero(a in letters(), b in letters(), g in letters()) {
        let group = Group::free(2);
        let bar = BarResolution::new(group.clone(), 2);
        let prod = tensor_complex(bar.clone(), bar, 2).unwrap();
        let cell = lipcoh::chain::ProductCell {
            left: BarCell(vec![word(&group, &a)]),
            shift: word(&group, &g),
            right: BarCell(vec![word(&group, &b), word(&group, &a)]),
        };
        let c = ResChain::cell(&group, cell);
        prop_assert!(c.boundary(&prod).boundary(&prod).is_zero());
    }

    #[test]
    fn omega_is_a_cocycle(dim in 1usize..=3, coords in prop::collection::vec(-12i64..=12, 20), seed in any::<u64>()) {
        let p = SupportCocycle::generic(dim, seed, 0);
        let pts: Vec<Vec<BigRational>> = (0..dim + 2)
            .map(|i| (0..dim).map(|j| BigRational::new(BigInt::from(coords[i * dim + j]), BigInt::from(4))).collect())
            .collect();
        let mut total = 0i64;
        for i in 0..pts.len() {
            let mut face = pts.clone();
            face.remove(i);
            match omega_eval(&face, p.point()) {
                Ok(v) => total += if i % 2 == 0 { i64::from(v) } else { -i64::from(v) },
                Err(Error::GenericityViolation(_)) => return Ok(()),
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
        prop_assert_eq!(total, 0);
    }

    #[test]
    fn two_generic_points_agree(seed in any::<u64>(), which in 0usize..3) {
        let s = match which {
            0 => Scenario::new("a", Kind::TorusPd, "Z"),
            1 => Scenario::new("b", Kind::TorusPd, "Z^2").radii(1, 1),
            _ => Scenario::new("c", Kind::FRecovery, "Z").alpha("cocycle", &[3]),
        };
        let s = Scenario { seed, ..s };
        let group = Group::new(s.group.clone());
        match point_independence(&s, &group) {
            Ok(same) => prop_assert!(same),
            Err(Error::GenericityViolation(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn slant_is_equivariant(a in prop::collection::vec(-2i64..=2, 2), g in letters(), h in letters(), shift in letters()) {
        let ctx = translation_ctx(2, 5);
        let group = ctx.alpha().group().clone();
        let (z, _) = plane_chains(&ctx, &a, &[]);
        let verts = vec![word(&group, &g), word(&group, &h)];
        let gamma = word(&group, &shift);
        let moved: Vec<GroupElement> = verts.iter().map(|v| group.mul_unchecked(&gamma, v)).collect();
        let lhs = ctx.slant_on_vertices(&z, &moved).unwrap();
        let rhs = ctx.slant_on_vertices(&z, &verts).unwrap().act(&group, &gamma);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn slant_of_a_cycle_is_a_cocycle(a in prop::collection::vec(-3i64..=3, 3), b in prop::collection::vec(-3i64..=3, 2)) {
        let ctx = translation_ctx(2, 8);
        let (z, w) = plane_chains(&ctx, &a[..2], &b);
        let gc = ctx.space().complex();
        let cyc = z.add(&invariant_boundary(gc, &w).unwrap()).unwrap();
        prop_assume!(invariant_boundary(gc, &cyc).unwrap().is_zero());
        let bar = Arc::new(BarResolution::new(ctx.alpha().group().clone(), 1));
        let du = coboundary(bar.clone(), ctx.slant(&cyc).unwrap());
        for cell in bar.generators(2).unwrap() {
            prop_assert!(du.value(&cell).unwrap().is_zero());
        }
    }

    #[test]
    fn slant_of_boundary_is_coboundary_of_slant(b in prop::collection::vec(-3i64..=3, 2), g in letters(), h in letters()) {
        let ctx = translation_ctx(2, 13);
        let (_, w) = plane_chains(&ctx, &[], &b);
        let group = ctx.alpha().group().clone();
        let bar = Arc::new(BarResolution::new(group.clone(), 2));
        let dw = invariant_boundary(ctx.space().complex(), &w).unwrap();
        let lhs = ctx.slant(&dw).unwrap();
        let rhs = coboundary(bar, ctx.slant(&w).unwrap());
        let cell = BarCell(vec![word(&group, &g), word(&group, &h)]).0;
        let cell = BarCell(vec![cell[0].clone()]);
        prop_assert_eq!(lhs.value(&cell).unwrap(), rhs.value(&cell).unwrap());
    }

    #[test]
    fn representative_does_not_change_pairings(a in prop::collection::vec(-3i64..=3, 2), b in prop::collection::vec(-3i64..=3, 2)) {
        let ctx = translation_ctx(2, 21);
        let (z, w) = plane_chains(&ctx, &a, &b);
        let gc = ctx.space().complex();
        let moved = z.add(&invariant_boundary(gc, &w).unwrap()).unwrap();
        let bar = BarResolution::new(ctx.alpha().group().clone(), 2);
        let unit = CoordinateFunctional::new(Vec::new());
        let group = ctx.alpha().group().clone();
        for cyc in bar_homology_cycles(&bar, 1) {
            let x = pair_through(&group, &unit, ctx.slant(&z).unwrap().as_ref(), &cyc).unwrap();
            let y = pair_through(&group, &unit, ctx.slant(&moved).unwrap().as_ref(), &cyc).unwrap();
            prop_assert_eq!(x, y);
        }
    }
}

/// `∂(Δ^k × Δ^l) = ∂Δ^k × Δ^l + (-1)^k Δ^k × ∂Δ^l` on staircase chains.
#[test]
fn staircase_boundary_is_compatible() {
    for k in 0..=4usize {
        for l in 0..=(4 - k) {
            let left: Vec<usize> = (0..=k).collect();
            let right: Vec<usize> = (0..=l).collect();
            let lhs = pair_boundary(&product_chain(&left, &right));
            let one = |v: &[usize]| -> SimplexChain { [(v.to_vec(), 1)].into() };
            let mut rhs = BTreeMap::new();
            if k > 0 {
                for (s, c) in product_of_chains(&simplex_boundary(&one(&left)), &one(&right)) {
                    *rhs.entry(s).or_insert(0) += c;
                }
            }
            if l > 0 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                for (s, c) in product_of_chains(&one(&left), &simplex_boundary(&one(&right))) {
                    *rhs.entry(s).or_insert(0) += sign * c;
                }
            }
            rhs.retain(|_, c| *c != 0);
            assert_eq!(lhs, rhs, "k = {k}, l = {l}");
        }
    }
}
