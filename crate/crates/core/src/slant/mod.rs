//! Slant products `H_k(P:Γ; L) → H^{n-k}(Γ; L)` for maps `α: Γ × P → ℝ^n`.

pub mod alpha;
pub mod cap;
pub mod context;
pub mod omega;
pub mod product;
pub mod space;
pub mod staircase;

pub use alpha::{AlphaFamily, AlphaMap, Point};
pub use cap::{affine_defect, alpha_cap, CapReport};
pub use context::{SlantContext, SupportTerm};
pub use omega::{omega_eval, SupportCocycle, GENERIC_MODULUS, MAX_REPICKS};
pub use product::ProductContext;
pub use space::ParameterSpace;
pub use staircase::{staircase, StaircasePiece};
