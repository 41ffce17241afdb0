//! Crossing the parameter space with `R` raises the target dimension but
//! leaves every slant value unchanged.
//!
//! ```bash
//! cargo run --example line_factors
//! ```

use std::sync::Arc;

use lipcoh::chain::BarCell;
use lipcoh::group::Group;
use lipcoh::slant::{AlphaMap, SlantContext};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> lipcoh::Result<()> {
    let group = Group::free_abelian(1);
    let base = Arc::new(SlantContext::new(AlphaMap::translation(&group)?, 5, 0)?);
    // distinct offsets: equal ones would put the point on a staircase diagonal
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let once = Arc::new(base.product_with_line(q(1, 3)));
    let twice = Arc::new(once.product_with_line(q(2, 7)));
    let z = base.space().fundamental_cycle()?;
    let f = Arc::new(SlantContext::new(AlphaMap::cocycle(&group, vec![2])?, 5, 0)?);
    let f_twice = Arc::new(f.product_with_line(q(1, 3)).product_with_line(q(2, 7)));
    let vertices = f.space().coordinate_cycle(0, 0)?;
    let t = group.generator(0);
    for ctx in [&base, &once, &twice] {
        let v = ctx.slant(&z)?.value(&BarCell(Vec::new()))?;
        println!("translation, target R^{} ({} line factors): {} on [e]", ctx.target_dim(), ctx.line_factors(), v.format(&group));
    }
    for ctx in [&f, &f_twice] {
        let u = ctx.slant(&vertices)?;
        let values: Vec<String> =
            (-2..=2).map(|j| u.value(&BarCell(vec![group.pow(&t, j)])).map(|v| v.format(&group))).collect::<lipcoh::Result<_>>()?;
        println!("cocycle 2, target R^{}: [{}] on [t^-2 .. t^2]", ctx.target_dim(), values.join(", "));
    }
    Ok(())
}
