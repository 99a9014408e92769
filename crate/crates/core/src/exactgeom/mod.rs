//! Exact rational polyhedral geometry.

pub mod cone;
pub mod dd;
pub mod linalg;
pub mod lp;
pub mod poly;
pub mod rat;
pub mod region;
pub mod union;

pub use cone::{ConeH, Generators};
pub use lp::{LinearProgram, LpResult};
pub use poly::ConvexPoly;
pub use rat::{fmt_rat, parse_rat, rat, rat_to_f64, ratio, RVec, Rat};
pub use union::{ConeUnion, Inclusion, PolyUnion, UnionOps};
