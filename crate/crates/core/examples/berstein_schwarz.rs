//! The connecting image of `1` under `0 → I → ZΓ → Z → 0`, on bar
//! generators of small length.
//!
//! ```bash
//! cargo run --example berstein_schwarz -- F_2
//! ```

use std::sync::Arc;

use lipcoh::chain::{BarResolution, Resolution};
use lipcoh::coefficients::berstein_schwarz;
use lipcoh::group::Group;

fn main() -> lipcoh::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "F_2".into());
    let group = Group::parse(&spec)?;
    let bar = Arc::new(BarResolution::new(group.clone(), 1));
    let beta = berstein_schwarz(bar.clone())?;
    for cell in bar.generators(1)? {
        let g = &cell.0[0];
        println!("β[{}] = {}", group.format_word(g), beta.value(&cell)?.format(&group));
    }
    Ok(())
}
