//! Support-set analysis of prehomogeneous vector spaces: instances,
//! gauges, closures, stabilizers, matchings, special-subspace
//! enumeration, exceptional pairs and convergence-cone certification.

mod cf;
mod closure;
mod convergence;
mod envelope;
mod exceptional;
mod fundcone;
mod instance;
mod matching;
mod minset;
mod special;

pub use cf::{CfComponent, CfReport};
pub use convergence::ConvergenceOutcome;
pub use exceptional::ExceptionalStatus;
pub use fundcone::{CharacterCheck, FundamentalConeReport};
pub use instance::{BoundOracle, Caps, PvsInstance, Weight};
pub use matching::{hopcroft_karp, MatchingVariant, MatchingWitness, RootSlot};
pub use minset::MinsetStatus;
pub use special::{SpecialReport, Trivalent};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PvsError {
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("lambda(U) outside the nonnegative span of Delta_0 and Psi_U")]
    NotInCone,
    #[error("instance has {weights} weights, cap is {cap}")]
    CapExceeded { weights: usize, cap: usize },
    #[error("invalid mu: {0}")]
    InvalidMu(String),
    #[error(transparent)]
    Exactla(#[from] exactla::ExactlaError),
}
