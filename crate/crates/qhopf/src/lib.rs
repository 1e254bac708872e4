//! Exact symbolic computation for the coordinate ring of SL_q(2), the
//! standard Podles quantum sphere sitting inside it, and the quantum
//! Hopf line bundles over the sphere.
//!
//! Everything is computed in the field Q(q) of rational functions of an
//! exact indeterminate q, so the projector identities and the
//! Chern-Connes pairings come out as exact algebraic statements: the
//! pairing of the Chern trace with the left projector of winding number
//! mu is the integer mu, with the right projector it is -mu, and the
//! rank trace pairs to 1.

pub mod bundles;
pub mod cli;
pub mod exactq;
pub mod hopf;
pub mod ncalg;
pub mod numeric;
pub mod parser;
pub mod qcomb;
pub mod refrewrite;
pub mod sample;

pub use bundles::{build_e, build_f, chern_pairing, mat_mul, mat_trace, tau0, tau1, ProjMatrix, Side};
pub use exactq::{QPoly, RatQ};
pub use ncalg::{Letter, NCPoly, PbwMonomial};
pub use parser::parse_expr;
