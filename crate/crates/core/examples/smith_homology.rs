//! Integer homology through Smith normal form: a hollow triangle, a
//! tetrahedron boundary, and the Kuhn-triangulated torus `R^2 / Z^2`.
//!
//! ```bash
//! cargo run --example smith_homology
//! ```

use lipcoh::chain::{smith_normal_form, IntMatrix, SimplicialComplex};
use lipcoh::group::Group;
use lipcoh::slant::{AlphaMap, ParameterSpace};

fn show(label: &str, groups: &[lipcoh::chain::HomologyGroup]) {
    let parts: Vec<String> = groups.iter().enumerate().map(|(k, h)| format!("H_{k} = {h}")).collect();
    println!("{label:<12} {}", parts.join(", "));
}

fn main() -> lipcoh::Result<()> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let s = smith_normal_form(&a);
    println!("invariant factors of A: {:?}", s.invariant_factors());

    let circle = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
    show("circle", &circle.chain_complex()?.homology());
    let sphere = SimplicialComplex::from_facets(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
    show("2-sphere", &sphere.chain_complex()?.homology());

    let space = ParameterSpace::new(&AlphaMap::translation(&Group::free_abelian(2))?)?;
    show("torus", &space.complex().quotient()?.homology());
    Ok(())
}
