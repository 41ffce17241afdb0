//! Translation action of `Z^2` on the plane. The fundamental cycle slants to
//! `±1` in degree 0 and the edge cycles slant to a dual basis in degree 1.
//!
//! ```bash
//! cargo run --example torus_duality
//! ```

use std::sync::Arc;

use lipcoh::chain::{bar_homology_cycles, BarCell, BarResolution};
use lipcoh::coefficients::CoordinateFunctional;
use lipcoh::group::Group;
use lipcoh::slant::{alpha_cap, AlphaMap, SlantContext};

fn main() -> lipcoh::Result<()> {
    let group = Group::free_abelian(2);
    let ctx = Arc::new(SlantContext::new(AlphaMap::translation(&group)?, 11, 0)?);
    let space = ctx.space();
    println!("Kuhn orbits per degree: {:?}", (0..=2).map(|k| space.orbit_count(k)).collect::<Vec<_>>());

    let top = space.fundamental_cycle()?;
    let unit = ctx.slant(&top)?.value(&BarCell(Vec::new()))?;
    println!("fundamental cycle ↦ {} on [e]", unit.format(&group));

    let bar = Arc::new(BarResolution::new(group.clone(), 2));
    let loops = bar_homology_cycles(&bar, 1);
    let unit_map = CoordinateFunctional::new(Vec::new());
    for axis in 0..2 {
        let edge = space.coordinate_cycle(1, space.edge_chain_index(axis).expect("axis edge chain"))?;
        let cap = alpha_cap(&ctx, &edge, &loops, &[&unit_map])?;
        let row: Vec<String> = cap.pairings.iter().map(|p| p[0].to_string()).collect();
        println!("edge cycle {axis} pairs with the generator loops as [{}]", row.join(", "));
    }
    Ok(())
}
