//! Cycle systems of boundary Lefschetz fibrations over the disc with torus
//! fibres: Hurwitz moves, normal forms, and classification of the total
//! space.
//!
//! Curves are primitive classes `p·a + q·b` in `H_1(T^2)`, and mapping
//! classes are `SL(2, Z)` matrices acting on column vectors `(p, q)`.

pub mod classify;
pub mod error;
pub mod mcg;
pub mod normal_form;
pub mod reduction;
pub mod search;
pub mod system;

pub use classify::{classify, construct, replay_trace, sum_normal_form, Base, Classification, Family};
pub use error::{Error, PartialNormalization, Result};
pub use mcg::{extend_to_basis, pairing, twist_power_form, BoundaryData, Curve, MappingClass, Sign};
pub use normal_form::{normalize, NormalForm, Normalized, DEFAULT_BUDGET};
pub use reduction::{
    blow_down, pair_shift, reduce_d1, reduce_d2, reduce_d3, Action, Reduction, Summand, TraceStep,
};
pub use search::{canonical_frame, equiv_search};
pub use system::{CycleSystem, Move, ParseMoveError};
