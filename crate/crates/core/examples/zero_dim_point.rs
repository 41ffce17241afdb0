//! A group acting on a single point: the slant of the point is the unit class.
//!
//! ```bash
//! cargo run --example zero_dim_point
//! ```

use std::sync::Arc;

use lipcoh::chain::BarCell;
use lipcoh::group::Group;
use lipcoh::slant::{AlphaMap, SlantContext};

fn main() -> lipcoh::Result<()> {
    for spec in ["Z", "Z^2", "F_2"] {
        let group = Group::parse(spec)?;
        let ctx = Arc::new(SlantContext::new(AlphaMap::point(&group), 1, 0)?);
        let point = ctx.space().fundamental_cycle()?;
        let u = ctx.slant(&point)?;
        let v = u.value(&BarCell(Vec::new()))?;
        println!("{spec:>4}: slant of the point on [e] = {}", v.format(&group));
    }
    Ok(())
}
