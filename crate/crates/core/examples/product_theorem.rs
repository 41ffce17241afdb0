//! Slant over a product of two lines equals the cross product of the factor
//! slants, checked generator by generator on `Z × Z`-cells.
//!
//! ```bash
//! cargo run --example product_theorem
//! ```

use std::sync::Arc;

use lipcoh::chain::{tensor_complex, BarResolution, Resolution};
use lipcoh::coefficients::cross_product;
use lipcoh::group::Group;
use lipcoh::slant::{AlphaMap, ProductContext, SlantContext};

fn main() -> lipcoh::Result<()> {
    let group = Group::free_abelian(2);
    let left = Arc::new(SlantContext::new(AlphaMap::cocycle(&group, vec![1, 2])?, 3, 0)?);
    let right = Arc::new(SlantContext::new(AlphaMap::cocycle(&group, vec![1, -1])?, 4, 0)?);
    let zl = left.space().coordinate_cycle(0, 0)?;
    let zr = right.space().coordinate_cycle(0, 0)?;

    let joint = ProductContext::new(left.clone(), right.clone())?.slant(&zl, &zr)?;
    let bar = Arc::new(BarResolution::new(group.clone(), 1));
    let product = Arc::new(tensor_complex(bar.as_ref().clone(), bar.as_ref().clone(), 1)?);
    let crossed = cross_product(product.clone(), left.slant(&zl)?, right.slant(&zr)?);

    let (mut agree, mut total) = (0, 0);
    for cell in product.generators(2)? {
        total += 1;
        if joint.value(&cell)? == crossed.value(&cell)? {
            agree += 1;
        }
    }
    println!("product slant and cross product agree on {agree} of {total} degree-2 generators");
    Ok(())
}
