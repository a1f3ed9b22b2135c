//! Exact vanishing homology of collapsing families.
//!
//! A family of sets collapsing as a parameter `t → 0⁺` is modelled by its
//! generic fiber over the field of real Puiseux series in an infinitesimal `T`.
//! Cells of a finite complex carry collapse rates (`T^rate`); a velocity
//! `T^q` declares a cell thin when its rate is at least `q`, and the vanishing
//! homology `H_j^v` counts the cycles that can be carried by thin cells.
//!
//! Modules, bottom up:
//!
//! * [`puiseux`]: truncated series arithmetic, valuations, velocities;
//! * [`complex`]: cell complexes, rate annotations, example families;
//! * [`thinness`]: rates from coordinates, thin cells, the filtration;
//! * [`homology`]: exact rational linear algebra and ordinary homology;
//! * [`vanishing`]: `H_j^v`, `χ_v`, sweeps over velocities, pairs.

pub mod complex;
mod error;
pub mod homology;
pub mod puiseux;
pub mod thinness;
pub mod vanishing;

pub use error::{Error, Result};
