//! Generalized rotation `ρ` on binary words, its orbit statistics, the
//! remainder/quotient encoding and the toggle dynamical system on spread-out
//! independent sets of a path.
//!
//! Letter 0 of a word is its leftmost letter. All operations are pure.

pub mod bitword;
pub mod encoding;
pub mod error;
pub mod orbitstats;
pub mod par;
pub mod report;
pub mod rotation;
pub mod sweep;
pub mod toggle;

pub use bitword::{necklace_period, BinaryWord, Composition};
pub use encoding::{
    decode, decompose_space, decompose_space_with, encode, max_orbit_size, orbit_size, theta,
    DecomposeMode, DecomposeOptions, EncodedPair, OrbitSummary,
};
pub use error::{Error, Result};
pub use orbitstats::{FrequencyTable, IntMultiset};
pub use par::Execution;
pub use report::{CheckReport, Verdict};
pub use rotation::{orbit, rotate, rotate_inv, Orbit};
pub use toggle::{OrbitBoard, Snake, ToggleOrbit, ToggleWord};
