//! Prints the orbit cells of the Kuhn triangulation of `R^d` under lattice
//! translations, in the text format `GammaComplex::parse` reads back.
//!
//! ```bash
//! cargo run --example cell_list -- 2
//! ```

use lipcoh::chain::GammaComplex;
use lipcoh::group::Group;
use lipcoh::slant::{AlphaMap, ParameterSpace};

fn main() -> lipcoh::Result<()> {
    let d: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let space = ParameterSpace::new(&AlphaMap::translation(&Group::free_abelian(d))?)?;
    let text = space.complex().to_text();
    print!("{text}");
    let back = GammaComplex::parse(&text)?;
    eprintln!("round trip: {} top cells", back.count(d));
    Ok(())
}
