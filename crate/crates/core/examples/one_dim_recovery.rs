//! `Z` acting on the line by `x ↦ x + m·n`. The vertex chain slants to the
//! homomorphism itself, and exactly `|m·j|` translates contribute on `[e, t^j]`.
//!
//! ```bash
//! cargo run --example one_dim_recovery -- 3
//! ```

use std::sync::Arc;

use lipcoh::chain::BarCell;
use lipcoh::group::Group;
use lipcoh::slant::{AlphaMap, SlantContext};

fn main() -> lipcoh::Result<()> {
    let m: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let z = Group::free_abelian(1);
    let t = z.generator(0);
    let ctx = Arc::new(SlantContext::new(AlphaMap::cocycle(&z, vec![m])?, 7, 0)?);
    let vertices = ctx.space().coordinate_cycle(0, 0)?;
    println!("generic point {}", ctx.omega().format_point());
    println!("{:>4} {:>6} {:>10}", "j", "value", "translates");
    for j in -3..=3 {
        let cell = BarCell(vec![z.pow(&t, j)]);
        let value = ctx.slant_value(&vertices, &cell)?;
        let mut translates = 0;
        for orbit in 0..ctx.space().orbit_count(0) {
            translates += ctx.support_enumerate(&cell, 0, orbit)?.len();
        }
        println!("{j:>4} {:>6} {translates:>10}", value.format(&z));
    }
    Ok(())
}
