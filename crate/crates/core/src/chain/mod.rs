//! Chain complexes: free resolutions, `Γ`-complexes, invariant chains,
//! cochains and integral homology.

pub mod cochain;
pub mod gamma;
pub mod homology;
pub mod invariant;
pub mod resolution;
pub mod snf;

pub use cochain::{
    bar_homology_cycles, coboundary, combine, evaluate, pair_cochain_cycle, shuffle_cycle, vanishes_on, Cochain,
    EquivariantCochain, LazyCochain, SharedCochain,
};
pub use gamma::{Face, GammaComplex, OrbitCell};
pub use homology::{HomologyGroup, SimplicialComplex, ZComplex};
pub use invariant::{explicit_boundary, invariant_boundary, ExplicitChain, InvariantChain};
pub use resolution::{
    alexander_whitney, tensor_complex, BarCell, BarResolution, CellId, FreeZGComplex, ProductCell,
    ProductResolution, ResChain, ResTerm, Resolution,
};
pub use snf::{invariant_factors, rank, smith_normal_form, solve_integer, IntMatrix, SmithForm};
