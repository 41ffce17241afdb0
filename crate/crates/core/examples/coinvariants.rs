//! Ranks of the truncated coinvariants `I(Γ)_Γ ≅ H_1(Γ; Z)` as the radius grows.
//!
//! ```bash
//! cargo run --example coinvariants
//! ```

use lipcoh::coefficients::coinvariants_rank;
use lipcoh::group::{Group, ModuleTag};

fn main() -> lipcoh::Result<()> {
    let ideal = ModuleTag::aug_power(1);
    for spec in ["Z", "Z^2", "F_2"] {
        let group = Group::parse(spec)?;
        for radius in 1..=3 {
            let r = coinvariants_rank(&group, &ideal, radius)?;
            let mark = if r.stable() { "stable" } else { "moving" };
            println!("{spec:>4} R={radius}: rank {} → {} ({mark})", r.at_radius, r.at_next_radius);
        }
    }
    Ok(())
}
