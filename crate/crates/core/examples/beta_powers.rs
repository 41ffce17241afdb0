//! A coefficient map `φ: I^{⊗k} → Z` solved so that `φ_*(β^k)` is dual to the
//! fundamental `k`-cycle of `Z^2`, with its pairings at two truncation radii.
//!
//! ```bash
//! cargo run --example beta_powers
//! ```

use lipcoh::group::Group;
use lipcoh::scenario::algebra::solved_pairings;

fn main() -> lipcoh::Result<()> {
    let group = Group::free_abelian(2);
    for k in 1..=2 {
        for radius in 2..=3 {
            let (pairings, defects) = solved_pairings(&group, k, radius)?;
            let p: Vec<String> = pairings.iter().map(|x| x.to_string()).collect();
            println!("k={k} R={radius}: pairings [{}], {} equivariance defects", p.join(", "), defects);
        }
    }
    Ok(())
}
