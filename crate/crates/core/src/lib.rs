//! Exact computation of the elementary-representation multiplets of the split
//! exceptional Lie algebra G2(2) and of the invariant differential operators
//! between them, for induction from the minimal and the two maximal parabolic
//! subalgebras.
//!
//! Everything is exact: rational scalars on overflow-checked integers, the
//! fixed G2 root system, the order-12 Weyl group acting on Dynkin-label pairs
//! of Λ+ρ, BGG reducibility, and the multiplet graphs with their Knapp-Stein
//! pairing and degenerations.

pub mod bgg;
pub mod error;
pub mod multiplets;
pub mod parabolic;
pub mod rational;
pub mod rootsys;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use rational::Rational;
