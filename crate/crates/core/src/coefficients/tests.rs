use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::*;
use crate::chain::{bar_homology_cycles, coboundary, pair_cochain_cycle, vanishes_on, CellId, FreeZGComplex, LazyCochain};
use crate::group::{Group, GroupRingElement, ModuleTag, TensorElement};

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn beta_on_bar_cells() {
    let f2 = Group::free(2);
    let bar = Arc::new(BarResolution::new(f2.clone(), 2));
    let beta = berstein_schwarz(bar.clone()).unwrap();
    for g in f2.ball(2).unwrap() {
        let v = beta.value(&BarCell(vec![g.clone()])).unwrap();
        assert_eq!(v, TensorElement::from_ring(&GroupRingElement::augmentation_generator(&f2, &g)));
    }
    let cells = bar.generators(2).unwrap();
    assert!(vanishes_on(coboundary(bar.clone(), beta).as_ref(), &cells).unwrap());
}

#[test]
fn beta_on_circle_and_trivial_group() {
    let circle = Arc::new(FreeZGComplex::circle());
    let z = circle.group().clone();
    let beta = berstein_schwarz(circle).unwrap();
    let v = beta.value(&CellId { degree: 1, index: 0 }).unwrap();
    assert_eq!(v, TensorElement::from_ring(&GroupRingElement::augmentation_generator(&z, &z.generator(0))));

    let e = Group::trivial();
    let bar = Arc::new(BarResolution::new(e.clone(), 3));
    let beta = berstein_schwarz(bar).unwrap();
    assert!(beta.value(&BarCell(vec![e.identity()])).unwrap().is_zero());
}

#[test]
fn unaugmented_resolution_is_rejected() {
    let z = Group::free_abelian(1);
    let c = FreeZGComplex::new(z, vec![1], Vec::new(), None).unwrap();
    assert!(matches!(berstein_schwarz(Arc::new(c)), Err(Error::Validation(_))));
}

#[test]
fn solve_for_integers_rank_one() {
    let z = Group::free_abelian(1);
    let bar = Arc::new(BarResolution::new(z.clone(), 3));
    let t = z.generator(0);
    let target = LazyCochain::new(1, ModuleTag::integers(), {
        let z = z.clone();
        move |c: &BarCell| Ok(TensorElement::integer(BigInt::from(z.abelianize(&c.0[0])[0])))
    });
    let cycles = bar_homology_cycles(&bar, 1);
    let phi = solve_coefficient_hom(bar.clone(), 1, 3, &target, &cycles).unwrap();
    for m in -3..=3i64 {
        assert_eq!(phi.value(&[z.pow(&t, m)]).unwrap(), int(m));
    }
    assert_eq!(equivariance_defects(&phi).unwrap(), 0);
    let back = ModuleMap::from_table(&phi.to_table()).unwrap();
    assert_eq!(back, phi);
}

#[test]
fn solve_for_dual_of_first_loop() {
    let z2 = Group::free_abelian(2);
    let bar = Arc::new(BarResolution::new(z2.clone(), 2));
    let target = LazyCochain::new(1, ModuleTag::integers(), {
        let z2 = z2.clone();
        move |c: &BarCell| Ok(TensorElement::integer(BigInt::from(z2.abelianize(&c.0[0])[0])))
    });
    let cycles = bar_homology_cycles(&bar, 1);
    let phi = solve_coefficient_hom(bar, 1, 2, &target, &cycles).unwrap();
    assert_eq!(phi.value(&[z2.generator(0)]).unwrap(), int(1));
    assert_eq!(phi.value(&[z2.generator(1)]).unwrap(), int(0));
}

#[test]
fn zero_target_gives_zero_map() {
    let z = Group::free_abelian(1);
    let bar = Arc::new(BarResolution::new(z.clone(), 2));
    let target = LazyCochain::zero(1, ModuleTag::integers());
    let phi = solve_coefficient_hom(bar.clone(), 1, 2, &target, &bar_homology_cycles(&bar, 1)).unwrap();
    assert!(phi.values().is_empty());
}

#[test]
fn beta_squared_pairs_with_torus_through_coordinates() {
    let z2 = Group::free_abelian(2);
    let bar = Arc::new(BarResolution::new(z2.clone(), 2));
    let b2 = beta_power(bar.clone(), 2).unwrap();
    let torus = &bar_homology_cycles(&bar, 2)[0];
    let phi = CoordinateFunctional::new(vec![0, 1]);
    assert_eq!(pair_through(&z2, &phi, b2.as_ref(), torus).unwrap(), int(1));
}

#[test]
fn connecting_class_of_coboundary_vanishes_on_cycles() {
    let z3 = Group::free_abelian(3);
    let bar = Arc::new(BarResolution::new(z3.clone(), 1));
    let g = z3.clone();
    let u = LazyCochain::new(1, ModuleTag::integers(), move |c: &BarCell| {
        let e = g.abelianize(&c.0[0]);
        Ok(TensorElement::integer(BigInt::from(e[0] * e[0] + 2 * e[1] - e[2] * e[0])))
    })
    .shared();
    let du = coboundary(bar.clone(), u);
    let image = connecting_cohomology(bar.clone(), du, &ShortExactSeq::augmentation()).unwrap();
    let w = &bar_homology_cycles(&bar, 3)[0];
    for i in 0..3 {
        let phi = CoordinateFunctional::new(vec![i]);
        assert!(pair_through(&z3, &phi, image.as_ref(), w).unwrap().is_zero());
    }
    let one = augmentation_cocycle(bar.clone()).unwrap();
    assert_eq!(pair_cochain_cycle(bar.as_ref(), one.as_ref(), &bar_homology_cycles(&bar, 0)[0]).unwrap(), int(1));
}

#[test]
fn coinvariant_ranks() {
    let i = ModuleTag::aug_power(1);
    assert_eq!(coinvariants_rank(&Group::free_abelian(1), &i, 3).unwrap(), RankPair { at_radius: 1, at_next_radius: 1 });
    assert_eq!(coinvariants_rank(&Group::free_abelian(2), &i, 2).unwrap(), RankPair { at_radius: 2, at_next_radius: 2 });
    assert_eq!(coinvariants_rank(&Group::free(2), &i, 1).unwrap(), RankPair { at_radius: 2, at_next_radius: 2 });
}

#[test]
fn sections_agree_on_classes() {
    let z2 = Group::free_abelian(2);
    let bar = Arc::new(BarResolution::new(z2.clone(), 2));
    let beta = berstein_schwarz(bar.clone()).unwrap();
    let std = connecting_cohomology(bar.clone(), beta.clone(), &ShortExactSeq::new(2).unwrap()).unwrap();
    let shifted = ShortExactSeq::with_section(2, Section::Shifted(z2.generator(1))).unwrap();
    let alt = connecting_cohomology(bar.clone(), beta, &shifted).unwrap();
    let phi = CoordinateFunctional::new(vec![0, 1]);
    let w = &bar_homology_cycles(&bar, 2)[0];
    let a = pair_through(&z2, &phi, std.as_ref(), w).unwrap();
    let b = pair_through(&z2, &phi, alt.as_ref(), w).unwrap();
    assert_eq!(a, b);
    assert!(!a.is_zero());
}
